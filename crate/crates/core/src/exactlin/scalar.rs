use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The ground field: the rationals or a prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
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

impl FieldSpec {
    /// `F_p`, rejecting composite or degenerate moduli.
    pub fn prime(p: u64) -> Result<Self> {
        // keeps `a + b` for residues inside u64
        if p >= 1 << 62 {
            return Err(Error::InvalidField(format!("modulus {p} too large")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    /// Number of elements, for finite fields.
    pub fn order(&self) -> Option<u64> {
        match *self {
            FieldSpec::Rational => None,
            FieldSpec::Prime(p) => Some(p),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime(p) => Scalar::Residue {
                value: v.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    /// The residue `index` of `F_p`; used by enumerations. Panics over ℚ.
    pub fn element(&self, index: u64) -> Scalar {
        match *self {
            FieldSpec::Prime(p) => Scalar::Residue {
                value: index % p,
                p,
            },
            FieldSpec::Rational => panic!("ℚ has no finite element listing"),
        }
    }

    /// Maps the fraction `num/den` into this field.
    pub fn from_ratio(&self, num: BigInt, den: BigInt) -> Option<Scalar> {
        if den.is_zero() {
            return None;
        }
        match *self {
            FieldSpec::Rational => Some(Scalar::Rational(BigRational::new(num, den))),
            FieldSpec::Prime(p) => {
                let m = BigInt::from(p);
                let n = num.mod_floor(&m).to_u64()?;
                let d = den.mod_floor(&m).to_u64()?;
                let d = Scalar::Residue { value: d, p }.inv()?;
                Some(&Scalar::Residue { value: n, p } * &d)
            }
        }
    }

    /// Parses `"a"` or `"a/b"`, exactly.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let bad = || Error::BadRational(s.to_string());
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: BigInt = n.parse().map_err(|_| bad())?;
        let den: BigInt = d.parse().map_err(|_| bad())?;
        self.from_ratio(num, den).ok_or_else(bad)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// An exact field element: a reduced fraction or a residue in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, p: u64 },
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

fn pow_mod(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u128;
    let mut b = base as u128 % p as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        exp >>= 1;
    }
    acc as u64
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Residue { p, .. } => FieldSpec::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Residue { value, p } => Scalar::Residue {
                value: pow_mod(*value, p - 2, *p),
                p: *p,
            },
        })
    }

    /// The image in `field`: rationals reduce mod `p` when the denominator
    /// is invertible; anything else must already live in `field`.
    pub fn to_field(&self, field: FieldSpec) -> Option<Scalar> {
        match (self, field) {
            (s, f) if s.field() == f => Some(s.clone()),
            (Scalar::Rational(r), FieldSpec::Prime(_)) => field.from_ratio(r.numer().clone(), r.denom().clone()),
            _ => None,
        }
    }

    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Residue { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, p }, Scalar::Residue { value: b, p: q }) if p == q => {
                Scalar::Residue {
                    value: (a + b) % p,
                    p: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Residue { value: a, p }, Scalar::Residue { value: b, p: q }) if p == q => {
                Scalar::Residue {
                    value: (a + p - b) % p,
                    p: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, p }, Scalar::Residue { value: b, p: q }) if p == q => {
                Scalar::Residue {
                    value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                    p: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, p } => Scalar::Residue {
                value: (p - value) % p,
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

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            (Scalar::Residue { value: a, p }, Scalar::Residue { value: b, p: q }) if p == q => {
                *a = (*a + b) % *p
            }
            _ => {
                let lhs = self.clone();
                mismatch(&lhs, rhs)
            }
        }
    }
}

impl Scalar {
    /// Sign of a rational value; residues report `0` or `1`.
    pub fn signum(&self) -> i32 {
        match self {
            Scalar::Rational(r) if r.is_negative() => -1,
            _ if self.is_zero() => 0,
            _ => 1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Pow;

    #[test]
    fn rationals_reduce() {
        let q = FieldSpec::Rational;
        assert_eq!(q.parse_scalar("2/4").unwrap().to_string(), "1/2");
        assert_eq!(q.parse_scalar("-6/3").unwrap().to_string(), "-2");
        assert_eq!(q.parse_scalar("3/-6").unwrap().to_string(), "-1/2");
        assert!(matches!(q.parse_scalar("1/0"), Err(Error::BadRational(_))));
        assert!(q.parse_scalar("0.5").is_err());
    }

    #[test]
    fn residues() {
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(f3.parse_scalar("1/2").unwrap(), f3.from_i64(2));
        assert_eq!(f3.parse_scalar("-1").unwrap(), f3.from_i64(2));
        assert!(f3.parse_scalar("1/3").is_err());
        let two = f3.from_i64(2);
        assert!((&two * &two.inv().unwrap()).is_one());
        assert_eq!(-&f3.one(), two);
        assert!(FieldSpec::prime(4).is_err());
        assert!(FieldSpec::prime(1).is_err());
    }

    #[test]
    fn big_rationals_do_not_overflow() {
        let q = FieldSpec::Rational;
        let mut x = q.parse_scalar("3/2").unwrap();
        for _ in 0..8 {
            x = &x * &x;
        }
        let expected = format!("{}/{}", BigInt::from(3u8).pow(256u32), BigInt::from(2u8).pow(256u32));
        assert_eq!(x.to_string(), expected);
    }
}
