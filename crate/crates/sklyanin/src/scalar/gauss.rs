//! Gaussian rationals: the base coefficient field Q(i).

use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;

/// An element re + im*i of Q(i), with i^2 = -1.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct GaussQ {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussQ {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussQ { re, im }
    }

    pub fn from_i64(n: i64) -> Self {
        GaussQ {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_i64(0)
    }

    pub fn one() -> Self {
        Self::from_i64(1)
    }

    pub fn i() -> Self {
        GaussQ {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        GaussQ {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        GaussQ {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    pub fn neg(&self) -> Self {
        GaussQ {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        GaussQ {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Self {
        let n = &self.re * &self.re + &self.im * &self.im;
        assert!(!n.is_zero(), "inverse of zero in Q(i)");
        GaussQ {
            re: &self.re / &n,
            im: -(&self.im / &n),
        }
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }

    /// Common denominator of re and im (positive).
    pub fn denom_lcm(&self) -> BigInt {
        let d1 = self.re.denom();
        let d2 = self.im.denom();
        let g = num::integer::gcd(d1.clone(), d2.clone());
        (d1 / &g) * d2
    }
}

impl fmt::Display for GaussQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn rat(r: &BigRational) -> String {
            if r.denom().is_one() {
                format!("{}", r.numer())
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        }
        if self.im.is_zero() {
            return write!(f, "{}", rat(&self.re));
        }
        if self.re.is_zero() {
            if self.im.is_one() {
                return write!(f, "i");
            }
            if self.im == -BigRational::one() {
                return write!(f, "-i");
            }
            return write!(f, "{}*i", rat(&self.im));
        }
        let sign = if self.im.is_negative() { "-" } else { "+" };
        let a = self.im.abs();
        if a.is_one() {
            write!(f, "({}{}i)", rat(&self.re), sign)
        } else {
            write!(f, "({}{}{}*i)", rat(&self.re), sign, rat(&a))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squares_to_minus_one() {
        let i = GaussQ::i();
        assert_eq!(i.mul(&i), GaussQ::from_i64(-1));
    }

    #[test]
    fn inverse() {
        let z = GaussQ::new(
            BigRational::from_integer(3.into()),
            BigRational::from_integer((-2).into()),
        );
        assert_eq!(z.mul(&z.inv()), GaussQ::one());
    }
}
