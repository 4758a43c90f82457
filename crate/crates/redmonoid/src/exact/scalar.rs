//! Exact field elements: arbitrary-precision rationals and prime fields F_p
//! with p < 2^31 (so products of residues fit in 64-bit intermediates).

use std::fmt;

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};

/// Descriptor of the coefficient field all entries of a matrix live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// The rational numbers, "q" in the JSON encoding.
    Rational,
    /// The prime field F_p, "fp:<p>" in the JSON encoding.
    Prime(u64),
}

impl Field {
    /// Parses "q" or "fp:<p>", validating that p is prime and below 2^31.
    pub fn parse(s: &str) -> Result<Field> {
        if s == "q" {
            return Ok(Field::Rational);
        }
        if let Some(p) = s.strip_prefix("fp:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::Constraint(format!("invalid field modulus in {s:?}")))?;
            if p >= 1 << 31 {
                return Err(Error::Constraint(format!(
                    "field modulus {p} must be below 2^31"
                )));
            }
            if !is_prime(p) {
                return Err(Error::Constraint(format!("field modulus {p} is not prime")));
            }
            return Ok(Field::Prime(p));
        }
        Err(Error::Constraint(format!(
            "unknown field descriptor {s:?} (expected \"q\" or \"fp:<p>\")"
        )))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator (maintained by `BigRational`); prime-field residues lie in
/// [0, p). Mixing distinct fields in arithmetic is a programming error and
/// panics; matrix-level operations check fields up front and return errors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn zero(field: Field) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Prime { value: 0, modulus: p },
        }
    }

    pub fn one(field: Field) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(BigRational::one()),
            Field::Prime(p) => Scalar::Prime { value: 1 % p, modulus: p },
        }
    }

    pub fn from_integer(field: Field, v: i64) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => {
                let r = v.rem_euclid(p as i64) as u64;
                Scalar::Prime { value: r, modulus: p }
            }
        }
    }

    /// Rational from an integer pair; reduces and normalizes the sign.
    pub fn from_fraction(num: BigInt, den: BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::Constraint("zero denominator".into()));
        }
        Ok(Scalar::Rational(BigRational::new(num, den)))
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, modulus: q }) => {
                assert_eq!(p, q, "mixed moduli {p} and {q}");
                Scalar::Prime { value: (a + b) % p, modulus: *p }
            }
            _ => panic!("mixed fields {} and {}", self.field(), other.field()),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, modulus: q }) => {
                assert_eq!(p, q, "mixed moduli {p} and {q}");
                // p < 2^31, so a*b < 2^62 fits in u64.
                Scalar::Prime { value: (a * b) % p, modulus: *p }
            }
            _ => panic!("mixed fields {} and {}", self.field(), other.field()),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(a) => {
                if a.is_zero() {
                    None
                } else {
                    Some(Scalar::Rational(a.recip()))
                }
            }
            Scalar::Prime { value, modulus } => {
                if *value == 0 {
                    None
                } else {
                    Some(Scalar::Prime {
                        value: mod_inverse(*value, *modulus),
                        modulus: *modulus,
                    })
                }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Option<Scalar> {
        other.inv().map(|i| self.mul(&i))
    }

    /// The underlying rational, for exact-Q-only code paths.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Prime { .. } => None,
        }
    }

    /// Compact string form: "n" or "n/d" for rationals, the residue for F_p.
    pub fn to_display_string(&self) -> String {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Prime { value, .. } => value.to_string(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_display_string())
    }
}

/// Extended Euclid; `modulus` prime, `value` nonzero.
fn mod_inverse(value: u64, modulus: u64) -> u64 {
    let (mut r0, mut r1) = (modulus as i128, value as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "modulus not prime or value divisible by it");
    t0.rem_euclid(modulus as i128) as u64
}

/// Lowest-terms numerator/denominator sign convention check, used by tests
/// and by the JSON reader.
pub(crate) fn rational_from_strings(num: &str, den: &str) -> Result<Scalar> {
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Json(format!("bad integer literal {num:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Json(format!("bad integer literal {den:?}")))?;
    Scalar::from_fraction(n, d)
}

pub(crate) fn rational_is_normalized(r: &BigRational) -> bool {
    r.denom().sign() == Sign::Plus && num::Integer::gcd(r.numer(), r.denom()).is_one()
}
