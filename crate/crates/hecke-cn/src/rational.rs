//! Exact rational scalars.
//!
//! All parameters `m`, e-values, and log-scale weights in this crate live in
//! [`Rat`], a thin wrapper around `num_rational::Ratio<i64>`. Values parse
//! from and print to the plain `"p/q"` / `"p"` text format; decimal input is
//! rejected so floats can never leak in.

use crate::{Error, Result};
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// An exact rational `p/q` in reduced form with positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(Ratio<i64>);

impl Rat {
    /// `num / den`; panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Rat(Ratio::new(num, den))
    }

    pub fn int(n: i64) -> Self {
        Rat(Ratio::from_integer(n))
    }

    pub fn zero() -> Self {
        Rat(Ratio::zero())
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Floor as an integer.
    pub fn floor_int(&self) -> i64 {
        self.0.floor().to_integer()
    }

    /// Fractional part `self - floor(self)`, in `[0, 1)`.
    pub fn frac(&self) -> Rat {
        *self - Rat::int(self.floor_int())
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Exact integer value; errors if the value is not an integer.
    pub fn to_integer(&self) -> Result<i64> {
        if self.is_integer() {
            Ok(self.0.to_integer())
        } else {
            Err(Error::Invalid(format!("{self} is not an integer")))
        }
    }

    /// `self - other` as an exact integer; errors if the difference is not integral.
    pub fn int_diff(&self, other: Rat) -> Result<i64> {
        (*self - other).to_integer()
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains('.') {
            return Err(Error::Parse(format!(
                "decimal input {s:?} rejected; write an exact rational like \"3/4\""
            )));
        }
        Ratio::<i64>::from_str(s)
            .map(Rat)
            .map_err(|e| Error::Parse(format!("cannot parse {s:?} as a rational: {e}")))
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::int(n)
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        Rat(self.0 + rhs.0)
    }
}

impl AddAssign for Rat {
    fn add_assign(&mut self, rhs: Rat) {
        self.0 += rhs.0;
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, rhs: Rat) -> Rat {
        Rat(self.0 - rhs.0)
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, rhs: Rat) -> Rat {
        Rat(self.0 * rhs.0)
    }
}

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        Rat(self.0 / rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Add<i64> for Rat {
    type Output = Rat;
    fn add(self, rhs: i64) -> Rat {
        self + Rat::int(rhs)
    }
}

impl Sub<i64> for Rat {
    type Output = Rat;
    fn sub(self, rhs: i64) -> Rat {
        self - Rat::int(rhs)
    }
}

impl Mul<i64> for Rat {
    type Output = Rat;
    fn mul(self, rhs: i64) -> Rat {
        self * Rat::int(rhs)
    }
}

/// A parameter `m` is generic when `2m` is not an integer.
pub fn is_generic(m: Rat) -> bool {
    !(m * 2).is_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        assert_eq!(r("9/4").to_string(), "9/4");
        assert_eq!(r("-7/4").to_string(), "-7/4");
        assert_eq!(r("3").to_string(), "3");
        assert_eq!(r("6/8"), Rat::new(3, 4));
        assert!("0.75".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
    }

    #[test]
    fn genericity() {
        assert!(is_generic(r("9/4")));
        assert!(!is_generic(r("1/2")));
        assert!(!is_generic(r("3")));
        assert!(is_generic(r("-1/4")));
    }

    #[test]
    fn floor_and_frac() {
        assert_eq!(r("9/4").floor_int(), 2);
        assert_eq!(r("-7/4").floor_int(), -2);
        assert_eq!(r("-7/4").frac(), r("1/4"));
        assert_eq!(r("9/4").frac(), r("1/4"));
    }
}
