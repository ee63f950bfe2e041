mod common;

use std::path::Path;

use common::fixture_path;
use trident_operads::cli::{run, Status};
use trident_operads::operad::TabulatedOperad;
use trident_operads::trident::TridentAlgebra;

fn cli(args: &[&str]) -> trident_operads::cli::Outcome {
    run(std::iter::once("trident-operads").chain(args.iter().copied()))
}

fn fx(name: &str) -> String {
    fixture_path(name).display().to_string()
}

fn tmp(name: &str) -> String {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name).display().to_string()
}

#[test]
fn roundtrip_t1() {
    let out = cli(&["roundtrip", "-i", &fx("T1.json"), "-N", "6"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out
        .stdout
        .starts_with("roundtrip: GF identity: pass; axioms: pass; f = 1,1,1,0,0,0,0\n"));
}

#[test]
fn validate_bad_g_names_the_identity_and_witness() {
    let out = cli(&["validate-trident", &fx("T1_bad_g.json")]);
    assert_eq!(out.code, 1);
    let report = out.report.unwrap();
    assert_eq!(report.status, Status::Violations);
    assert_eq!(report.details[0].rule, "f-multiplicativity");
    assert!(report.details[0].message.starts_with("a=x, b=x"));

    let out = cli(&["validate-trident", &fx("T1_gf2_g.json")]);
    assert_eq!(out.code, 0);
    let out = cli(&["--field", "gf:2", "validate-trident", &fx("T1_bad_g.json")]);
    assert_eq!(out.code, 0);
}

#[test]
fn symmetrize_in_characteristic_two_is_unsupported() {
    let out = cli(&["units", "-i", &fx("T3_operad.json"), "--symmetrize", "--field", "gf:2"]);
    assert_eq!(out.code, 3);
    assert!(out.stdout.contains("char 𝕜 ≠ 2"));

    let out = cli(&["units", "-i", &fx("T3_operad.json"), "--symmetrize"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out
        .stdout
        .contains("1_2 + 1/2*psi^(2)_{1,2}(e1) + 1/2*psi^(2)_{1,2}(e2)"));
}

#[test]
fn extract_requires_a_symmetric_unit() {
    let out = cli(&["extract", "-i", &fx("T3_operad.json"), "-o", &tmp("never.json")]);
    assert_eq!(out.code, 3);
}

#[test]
fn build_then_check_axioms_on_every_fixture() {
    for name in ["T0.json", "T1.json", "T3.json", "T1_gf2_g.json", "odot_dual.json"] {
        let target = tmp(&format!("F_{name}"));
        let out = cli(&["build", "-i", &fx(name), "-N", "4", "-o", &target]);
        assert_eq!(out.code, 0, "{name}: {}", out.stdout);
        let out = cli(&["check-axioms", "-i", &target, "--budget", "4"]);
        assert_eq!(out.code, 0, "{name}: {}", out.stdout);
    }
}

#[test]
fn build_rejects_invalid_input() {
    let out = cli(&["build", "-i", &fx("T1_bad_g.json"), "-N", "3", "-o", &tmp("bad.json")]);
    assert_eq!(out.code, 1);
    assert!(!Path::new(&tmp("bad.json")).exists());
}

#[test]
fn odot_reproduces_the_fixture() {
    let target = tmp("odot.json");
    let dual = fx("dual_numbers.json");
    let out = cli(&["odot", "-a", &dual, "-b", &dual, "-o", &target]);
    assert_eq!(out.code, 0);
    assert_eq!(
        std::fs::read_to_string(&target).unwrap(),
        std::fs::read_to_string(fixture_path("odot_dual.json")).unwrap()
    );
}

#[test]
fn hadamard_then_extract() {
    let h = tmp("h.json");
    let out = cli(&[
        "hadamard",
        "-a",
        &fx("T0.json"),
        "-b",
        &fx("T0.json"),
        "-N",
        "3",
        "-o",
        &h,
    ]);
    assert_eq!(out.code, 0);
    let op = TabulatedOperad::from_json_str(&std::fs::read_to_string(&h).unwrap()).unwrap();
    assert_eq!(op.dims(), &[1, 4, 9, 16]);
    let e = tmp("e.json");
    assert_eq!(cli(&["extract", "-i", &h, "-o", &e]).code, 0);
    let t = TridentAlgebra::from_json_str(&std::fs::read_to_string(&e).unwrap()).unwrap();
    assert_eq!((t.dim_bar(), t.dim_m()), (3, 2));
}

#[test]
fn profile_reports_the_series() {
    let out = cli(&["--json", "profile", "-i", &fx("T1.json")]);
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["summary"], "dims = 1,2,4,7,11,16,22; f = 1,1,1,0,0,0,0; GK = 3");
}

#[test]
fn json_reports_are_deterministic() {
    let args = [
        "--json",
        "check-axioms",
        "-i",
        &fx("T1.json"),
        "-N",
        "4",
        "--budget",
        "4",
    ];
    let a = cli(&args);
    let b = cli(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn file_and_usage_errors_exit_with_two() {
    assert_eq!(cli(&["validate-trident", "/nonexistent.json"]).code, 2);
    assert_eq!(cli(&["frobnicate"]).code, 2);
    assert_eq!(cli(&["--field", "gf:4", "validate-trident", &fx("T1.json")]).code, 2);
    let broken = tmp("broken.json");
    std::fs::write(&broken, "{\"field\": ").unwrap();
    let out = cli(&["validate-trident", &broken]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.contains("line 1"));
}
