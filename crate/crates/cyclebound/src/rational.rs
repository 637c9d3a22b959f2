/*!
Exact rational arithmetic for bound values. `Rat` wraps a big-integer
rational kept in lowest terms, compares exactly against machine integers,
and serializes as `{num, den}` decimal strings so no report ever passes
through floating point.
*/

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn from_int(v: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(v)))
    }

    /// `num/den` in lowest terms; `den` must be nonzero.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn cmp_int(&self, v: i64) -> Ordering {
        self.0.cmp(&BigRational::from_integer(BigInt::from(v)))
    }

    /// Exact equality with an integer.
    pub fn eq_int(&self, v: i64) -> bool {
        self.cmp_int(v) == Ordering::Equal
    }

    pub fn numer_string(&self) -> String {
        self.0.numer().to_string()
    }

    pub fn denom_string(&self) -> String {
        self.0.denom().to_string()
    }

    pub fn min(self, other: Rat) -> Rat {
        if self <= other {
            self
        } else {
            other
        }
    }

    /// Approximation for human-facing tables only; never used in checks.
    pub fn to_f64_lossy(&self) -> f64 {
        let n = self.0.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
        let d = self.0.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
        n / d
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        Rat(self.0 + rhs.0)
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
        assert!(!rhs.0.is_zero(), "division by zero");
        Rat(self.0 / rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Rat", 2)?;
        s.serialize_field("num", &self.numer_string())?;
        s.serialize_field("den", &self.denom_string())?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_exact() {
        let a = Rat::new(1, 3);
        let b = Rat::new(1, 6);
        assert_eq!(a.clone() + b.clone(), Rat::new(1, 2));
        assert_eq!(a.clone() - b.clone(), Rat::new(1, 6));
        assert_eq!(a.clone() * b.clone(), Rat::new(1, 18));
        assert_eq!(a / b, Rat::from_int(2));
    }

    #[test]
    fn reduction_and_signs() {
        assert_eq!(Rat::new(10, 3), Rat::new(20, 6));
        assert_eq!(Rat::new(-4, 8), Rat::new(1, -2));
        assert!(Rat::new(-1, 2).is_negative());
        assert_eq!(Rat::new(-4, 8).to_string(), "-1/2");
        assert_eq!(Rat::new(8, 4).to_string(), "2");
    }

    #[test]
    fn integer_comparison() {
        let v = Rat::new(10, 3);
        assert_eq!(v.cmp_int(3), Ordering::Greater);
        assert_eq!(v.cmp_int(4), Ordering::Less);
        assert!(Rat::from_int(7).eq_int(7));
        // 9 >= 10/3 with slack 17/3: the exact check behind sharpness
        assert_eq!(Rat::from_int(9) - v, Rat::new(17, 3));
    }

    #[test]
    fn ordering_is_total_and_exact() {
        // would collapse under f64
        let tiny = Rat::new(1, i64::MAX);
        assert!(tiny > Rat::zero());
        assert!(tiny < Rat::new(2, i64::MAX));
        let mut xs = vec![Rat::new(2, 3), Rat::new(1, 2), Rat::new(3, 5)];
        xs.sort();
        assert_eq!(xs, vec![Rat::new(1, 2), Rat::new(3, 5), Rat::new(2, 3)]);
    }

    #[test]
    fn serializes_as_num_den_strings() {
        let v = serde_json::to_value(Rat::new(10, 3)).unwrap();
        assert_eq!(v["num"], "10");
        assert_eq!(v["den"], "3");
    }
}
