//! Exact field elements over ℚ and prime fields 𝔽_p.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse scalar {text:?} over {field}: {reason}")]
    Parse {
        text: String,
        field: Field,
        reason: String,
    },
    #[error("cannot parse field {0:?} (expected \"Q\" or \"Fp:<p>\")")]
    BadField(String),
}

/// The coefficient field of an algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Builds 𝔽_p, rejecting composite moduli.
    pub fn prime(p: u64) -> Result<Self, ScalarError> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(ScalarError::NotPrime(p))
        }
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
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rational);
        }
        let p = s
            .strip_prefix("Fp:")
            .and_then(|p| p.trim().parse::<u64>().ok())
            .ok_or_else(|| ScalarError::BadField(s.to_string()))?;
        Field::prime(p)
    }
}

/// Deterministic Miller–Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n % w == 0 {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'outer: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// An exact scalar. Rationals are kept in lowest terms with positive
/// denominator, residues in `0..p`, so derived equality is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod { value: u64, p: u64 },
}

impl Scalar {
    pub fn zero(field: Field) -> Self {
        Scalar::from_i64(field, 0)
    }

    pub fn one(field: Field) -> Self {
        Scalar::from_i64(field, 1)
    }

    pub fn from_i64(field: Field, v: i64) -> Self {
        match field {
            Field::Rational => Scalar::Rational(BigRational::from_integer(v.into())),
            Field::Prime(p) => Scalar::Mod {
                value: (v as i128).rem_euclid(p as i128) as u64,
                p,
            },
        }
    }

    /// `num / den` in the given field. Panics if `den` vanishes there.
    pub fn ratio(field: Field, num: i64, den: i64) -> Self {
        let d = Scalar::from_i64(field, den)
            .inv()
            .expect("denominator vanishes in field");
        &Scalar::from_i64(field, num) * &d
    }

    fn from_bigint(field: Field, v: &BigInt) -> Self {
        match field {
            Field::Rational => Scalar::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar::Mod {
                    value: r.to_u64().expect("residue fits in u64"),
                    p,
                }
            }
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Mod { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Mod { value, p } => Scalar::Mod {
                value: pow_mod(*value, p - 2, *p),
                p: *p,
            },
        })
    }

    pub fn pow(&self, exp: i64) -> Option<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one(self.field());
        for _ in 0..exp.unsigned_abs() {
            acc = &acc * &base;
        }
        Some(acc)
    }

    /// Whether the value is an integer; `None` over 𝔽_p where the
    /// question has no meaning.
    pub fn is_integer(&self) -> Option<bool> {
        match self {
            Scalar::Rational(r) => Some(r.is_integer()),
            Scalar::Mod { .. } => None,
        }
    }

    /// Parses `"p/q"`, `"p"` or `"k mod p"` into `field`.
    pub fn parse(field: Field, text: &str) -> Result<Self, ScalarError> {
        let err = |reason: &str| ScalarError::Parse {
            text: text.to_string(),
            field,
            reason: reason.to_string(),
        };
        let t = text.trim();
        if let Some((k, m)) = t.split_once(" mod ") {
            let m: u64 = m.trim().parse().map_err(|_| err("bad modulus"))?;
            if field != Field::Prime(m) {
                return Err(err("modulus does not match field"));
            }
            let k: BigInt = k.trim().parse().map_err(|_| err("bad residue"))?;
            return Ok(Scalar::from_bigint(field, &k));
        }
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
        let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
        if den.is_zero() {
            return Err(err("zero denominator"));
        }
        match field {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime(_) => {
                let d = Scalar::from_bigint(field, &den)
                    .inv()
                    .ok_or_else(|| err("denominator vanishes mod p"))?;
                Ok(&Scalar::from_bigint(field, &num) * &d)
            }
        }
    }

    fn assert_same_field(&self, other: &Scalar) {
        assert_eq!(
            self.field(),
            other.field(),
            "scalar field mismatch: {self} vs {other}"
        );
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Scalar::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Mod { value, p } => write!(f, "{value} mod {p}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.assert_same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.assert_same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: mul_mod(*a, *b, *p),
                p: *p,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { value, p } => Scalar::Mod {
                value: (p - value) % p,
                p: *p,
            },
        }
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

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
