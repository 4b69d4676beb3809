//! Arbitrary-precision fractions kept in lowest terms.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact rational number `p/q` with `q > 0` and `gcd(p, q) = 1`.
///
/// Equality and ordering are value equality and value ordering: the
/// representation is canonical, so structural comparison is enough.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// Builds `numer / denom`, reducing to lowest terms.
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::Domain {
                param: "denominator",
                value: "0".into(),
                reason: "must be non-zero",
            });
        }
        Ok(Self(BigRational::new(numer, denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    /// `numer / denom` for a natural numerator and positive denominator.
    pub fn from_naturals(numer: BigUint, denom: BigUint) -> Result<Self> {
        Self::new(
            BigInt::from_biguint(Sign::Plus, numer),
            BigInt::from_biguint(Sign::Plus, denom),
        )
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn into_ratio(self) -> BigRational {
        self.0
    }

    /// Division; `None` when `rhs` is zero.
    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(Self(&self.0 / &rhs.0))
        }
    }

    /// Integer power with the convention `0^0 = 1`.
    ///
    /// Returns `None` for a zero base with a negative exponent.
    pub fn pow(&self, exponent: i64) -> Option<Self> {
        if exponent == 0 {
            return Some(Self::one());
        }
        if self.is_zero() {
            return if exponent > 0 {
                Some(Self::zero())
            } else {
                None
            };
        }
        let e = u32::try_from(exponent.unsigned_abs()).expect("exponent exceeds u32");
        let n = self.numer().pow(e);
        let d = self.denom().pow(e);
        // Powers of coprime integers stay coprime, so no gcd is needed.
        let (n, d) = if exponent > 0 { (n, d) } else { (d, n) };
        let (n, d) = if d.is_negative() { (-n, -d) } else { (n, d) };
        Some(Self(BigRational::new_raw(n, d)))
    }

    /// Correctly rounded (round-half-to-even) conversion to `f64`.
    ///
    /// Works directly on the big-integer quotient, so it stays exact for
    /// numerators and denominators far outside the `f64` range.
    pub fn to_f64(&self) -> f64 {
        let sign = if self.numer().is_negative() {
            -1.0
        } else {
            1.0
        };
        let a = self.numer().magnitude();
        let b = self.denom().magnitude();
        sign * ratio_to_f64(a, b)
    }
}

/// Correctly rounded `a / b` for naturals, without reducing first.
///
/// # Panics
///
/// If `b` is zero.
pub fn ratio_to_f64(a: &BigUint, b: &BigUint) -> f64 {
    assert!(!b.is_zero(), "zero denominator");
    if a.is_zero() {
        return 0.0;
    }
    // Scale so the integer quotient carries 64..66 significant bits.
    let shift = 65 - (a.bits() as i64 - b.bits() as i64);
    let (quot, rem) = if shift >= 0 {
        (a << shift as u64).div_rem(b)
    } else {
        a.div_rem(&(b << (-shift) as u64))
    };
    let sticky = !rem.is_zero();
    let nbits = quot.bits() as i64;
    let mut top = nbits - 1 - shift;
    if top > 1023 {
        return f64::INFINITY;
    }
    if top < -1075 {
        return 0.0;
    }
    let precision = if top >= -1022 { 53 } else { 53 - (-1022 - top) };
    let drop = (nbits - precision) as u64;
    let mut mant = (&quot >> drop).to_u64().expect("mantissa fits in u64");
    let low = &quot - (BigUint::from(mant) << drop);
    let half = BigUint::one() << (drop - 1);
    let round_up = match low.cmp(&half) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Equal => sticky || mant & 1 == 1,
        std::cmp::Ordering::Less => false,
    };
    if round_up {
        mant += 1;
    }
    if top < -1022 {
        // Subnormal (or the carry into the smallest normal): the bit
        // pattern is the mantissa itself.
        return f64::from_bits(mant);
    }
    if mant == 1 << 53 {
        mant >>= 1;
        top += 1;
        if top > 1023 {
            return f64::INFINITY;
        }
    }
    let biased = (top + 1023) as u64;
    f64::from_bits((biased << 52) | (mant & ((1 << 52) - 1)))
}

impl fmt::Display for ExactRational {
    /// Always `p/q`, including integers (`2/1`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for ExactRational {
    type Err = Error;

    /// Accepts `p/q` or a bare integer `n`, with an optional sign.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            input: s.to_string(),
            expected: "a rational p/q or an integer",
        };
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n = BigInt::from_str(n).map_err(|_| bad())?;
        let d = BigInt::from_str(d).map_err(|_| bad())?;
        Self::new(n, d).map_err(|_| bad())
    }
}

impl From<BigRational> for ExactRational {
    fn from(r: BigRational) -> Self {
        Self(r)
    }
}

impl From<i64> for ExactRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<&BigUint> for ExactRational {
    fn from(n: &BigUint) -> Self {
        Self::from_integer(BigInt::from(n.clone()))
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident) => {
        impl $imp<&ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(&rhs.0))
            }
        }
        impl $imp<ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0.$method(rhs.0))
            }
        }
        impl $imp<&ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl std::iter::Sum for ExactRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}
