//! Exact field elements over ℚ or GF(p).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The base field: the rationals, or the prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", try_from = "FieldRepr")]
pub enum Field {
    Rational,
    Prime { p: u64 },
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum FieldRepr {
    Rational,
    Prime { p: u64 },
}

impl TryFrom<FieldRepr> for Field {
    type Error = Error;

    fn try_from(repr: FieldRepr) -> Result<Self> {
        match repr {
            FieldRepr::Rational => Ok(Field::Rational),
            FieldRepr::Prime { p } => Field::prime(p),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        // Products are formed in u128, so any prime that fits in u64 works.
        if is_prime(p) {
            Ok(Field::Prime { p })
        } else {
            Err(Error::InvalidArgument(format!("{p} is not a prime")))
        }
    }

    /// Parses the CLI spelling: `rational` or `gf:<p>`.
    pub fn parse_spec(s: &str) -> Result<Field> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("rational") || s == "Q" {
            return Ok(Field::Rational);
        }
        let rest = s
            .strip_prefix("gf:")
            .or_else(|| s.strip_prefix("GF:"))
            .ok_or_else(|| Error::Parse(format!("unknown field `{s}` (expected rational or gf:<p>)")))?;
        let p: u64 = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad prime in field spec `{s}`")))?;
        Field::prime(p)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime { p } => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::zero()),
            Field::Prime { p } => Scalar::Mod { value: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime { p } => Scalar::Mod {
                value: (n as i128).rem_euclid(*p as i128) as u64,
                p: *p,
            },
        }
    }

    /// Maps a rational number into this field. Fails when the denominator
    /// vanishes mod p.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(Scalar::Rational(q.clone())),
            Field::Prime { p } => {
                let pb = BigInt::from(*p);
                let reduce = |x: &BigInt| -> u64 {
                    let r = ((x % &pb) + &pb) % &pb;
                    r.to_u64().expect("residue fits in u64")
                };
                let num = Scalar::Mod {
                    value: reduce(q.numer()),
                    p: *p,
                };
                let den = Scalar::Mod {
                    value: reduce(q.denom()),
                    p: *p,
                };
                let inv = den
                    .inv()
                    .ok_or_else(|| Error::Parse(format!("denominator of {q} is not invertible mod {p}")))?;
                Ok(&num * &inv)
            }
        }
    }

    /// Parses a scalar string: an integer `n` or a fraction `a/b`.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid scalar `{s}`"));
        let q = match s.split_once('/') {
            Some((a, b)) => {
                let a: BigInt = a.trim().parse().map_err(|_| bad())?;
                let b: BigInt = b.trim().parse().map_err(|_| bad())?;
                if b.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in `{s}`")));
                }
                BigRational::new(a, b)
            }
            None => BigRational::from_integer(s.parse().map_err(|_| bad())?),
        };
        self.from_rational(&q)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Prime { p } => write!(f, "gf:{p}"),
        }
    }
}

/// An exact scalar. Rationals are kept in lowest terms with positive
/// denominator (guaranteed by `BigRational`); residues lie in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod { value: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Mod { p, .. } => Field::Prime { p: *p },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(q) if q.is_zero() => None,
            Scalar::Rational(q) => Some(Scalar::Rational(q.recip())),
            Scalar::Mod { value: 0, .. } => None,
            Scalar::Mod { value, p } => {
                // Fermat: v^(p-2).
                let mut base = *value as u128;
                let m = *p as u128;
                let mut e = p - 2;
                let mut acc: u128 = 1;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * base % m;
                    }
                    base = base * base % m;
                    e >>= 1;
                }
                Some(Scalar::Mod {
                    value: acc as u64,
                    p: *p,
                })
            }
        }
    }

    fn mismatch(&self, other: &Scalar) -> ! {
        panic!("scalar field mismatch: {} vs {}", self.field(), other.field())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => Scalar::Mod {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => self.mismatch(rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => Scalar::Mod {
                value: ((*a as u128 + *p as u128 - *b as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => self.mismatch(rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => Scalar::Mod {
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => self.mismatch(rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { value: 0, p } => Scalar::Mod { value: 0, p: *p },
            Scalar::Mod { value, p } => Scalar::Mod {
                value: p - value,
                p: *p,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;

    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;

    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;

    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            _ => *self = &*self + rhs,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a -= b,
            _ => *self = &*self - rhs,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_rationals() {
        let q = Field::Rational;
        assert_eq!(q.parse("6/4").unwrap().to_string(), "3/2");
        assert_eq!(q.parse("-2/-4").unwrap().to_string(), "1/2");
        assert_eq!(q.parse("5").unwrap().to_string(), "5");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.parse("3").unwrap();
        let b = f.parse("1/2").unwrap();
        assert_eq!(b.to_string(), "4");
        assert_eq!((&a * &b).to_string(), "5");
        assert_eq!((&a - &f.from_i64(5)).to_string(), "5");
        assert_eq!(f.from_i64(-1).to_string(), "6");
        assert!((&a * &a.inv().unwrap()).is_one());
        assert!(f.zero().inv().is_none());
        assert!(Field::prime(2).unwrap().parse("1/2").is_err());
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(9).is_err());
        assert!(serde_json::from_str::<Field>(r#"{"kind":"prime","p":4}"#).is_err());
        let f: Field = serde_json::from_str(r#"{"kind":"prime","p":5}"#).unwrap();
        assert_eq!(f.characteristic(), 5);
        assert_eq!(Field::parse_spec("gf:3").unwrap(), Field::Prime { p: 3 });
        assert_eq!(Field::parse_spec("rational").unwrap().characteristic(), 0);
    }

    #[test]
    #[should_panic(expected = "mismatch")]
    fn mixed_fields_panic() {
        let _ = &Field::Rational.one() + &Field::Prime { p: 3 }.one();
    }
}
