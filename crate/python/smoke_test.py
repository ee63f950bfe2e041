"""Smoke test for the Python bindings.

Build and install first:  pip install maturin && maturin develop -m crates/py/Cargo.toml
"""

import json
from pathlib import Path

import trident_operads as to

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def read(name):
    return (FIXTURES / name).read_text()


def main():
    t1 = read("T1.json")
    assert to.validate_trident(t1) == []
    assert to.dimensions(t1) == [1, 2, 4, 7, 11, 16, 22]
    assert to.roundtrip(t1)
    assert to.count_axiom_violations(t1, max_arity=4, budget=4) == 0

    bad = to.validate_trident(read("T1_bad_g.json"))
    assert any("f-multiplicativity" in v for v in bad), bad
    assert to.validate_trident(read("T1_bad_g.json"), field="gf:2") == []

    operad = json.loads(to.build_operad(read("T3.json"), max_arity=3))
    assert operad["dims"] == [1, 1, 3, 7]

    code, out = to.run_cli(["validate-trident", str(FIXTURES / "T1_bad_g.json")])
    assert code == 1, (code, out)

    try:
        to.dimensions("{}")
    except ValueError:
        pass
    else:
        raise AssertionError("malformed JSON was accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
