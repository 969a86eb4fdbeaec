//! Rational functions in a, b over Q(i), kept in lowest terms with a monic
//! denominator after every operation.

use super::gauss::GaussQ;
use super::poly2::Poly2;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFun {
    pub num: Poly2,
    pub den: Poly2,
}

impl RatFun {
    /// Build num/den and normalize. Panics if den = 0.
    pub fn new(num: Poly2, den: Poly2) -> Self {
        assert!(!den.is_zero(), "zero denominator in rational function");
        if num.is_zero() {
            return RatFun {
                num,
                den: Poly2::one(),
            };
        }
        let g = Poly2::gcd(&num, &den);
        let mut num = num.div_exact(&g).unwrap();
        let mut den = den.div_exact(&g).unwrap();
        let lc = den.lead_coeff();
        if lc != GaussQ::one() {
            let li = lc.inv();
            num = num.scale(&li);
            den = den.scale(&li);
        }
        RatFun { num, den }
    }

    pub fn from_poly(p: Poly2) -> Self {
        RatFun {
            num: p,
            den: Poly2::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly2::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly2::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        RatFun::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        RatFun::new(
            self.num.mul(&o.den).sub(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn neg(&self) -> Self {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        RatFun::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(RatFun::new(self.den.clone(), self.num.clone()))
    }

    pub fn weight(&self) -> usize {
        self.num.num_terms() + self.den.num_terms()
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly2::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
