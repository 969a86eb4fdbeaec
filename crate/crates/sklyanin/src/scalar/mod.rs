//! Exact scalar arithmetic behind a single field contract: the generic
//! parameter tower and F_{p^2} specializations.

pub mod fq;
pub mod gauss;
pub mod poly2;
pub mod ratfun;
pub mod tower;

pub use fq::{Fq, FqElem, SpecializeError};
pub use tower::{Tower, TowerScalar};

/// The field contract shared by the tower and the finite specializations.
pub trait Field: Clone + Send + Sync {
    type Elem: Clone + PartialEq + Send + Sync + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn inv(&self, x: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn div(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.mul(x, &self.inv(y).expect("division by zero"))
    }

    fn eq(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        x == y
    }

    /// Pivoting heuristic for exact elimination; smaller is simpler.
    fn weight(&self, _x: &Self::Elem) -> usize {
        1
    }

    fn fmt_elem(&self, x: &Self::Elem) -> String {
        format!("{:?}", x)
    }

    fn pow(&self, x: &Self::Elem, n: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = x.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// Fields that carry the structure constants i, a, b, c (and their squares).
pub trait ParamField: Field {
    fn gen_i(&self) -> Self::Elem;
    fn gen_a(&self) -> Self::Elem;
    fn gen_b(&self) -> Self::Elem;
    fn gen_c(&self) -> Self::Elem;

    fn alpha(&self) -> Self::Elem {
        let a = self.gen_a();
        self.mul(&a, &a)
    }
    fn beta(&self) -> Self::Elem {
        let b = self.gen_b();
        self.mul(&b, &b)
    }
    fn gamma(&self) -> Self::Elem {
        let c = self.gen_c();
        self.mul(&c, &c)
    }
    /// alpha_1, alpha_2, alpha_3 indexed 1..=3.
    fn alpha_i(&self, i: usize) -> Self::Elem {
        match i {
            1 => self.alpha(),
            2 => self.beta(),
            3 => self.gamma(),
            _ => panic!("alpha_i index must be 1..=3"),
        }
    }
}

/// Fields whose elements can be exhaustively enumerated.
pub trait FiniteField: Field {
    fn field_order(&self) -> u64;
    fn elements(&self) -> Vec<Self::Elem>;
    fn sample_dyn(&self, rng: &mut dyn rand::RngCore) -> Self::Elem;
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_tower_elem(t: &Tower, rng: &mut impl Rng) -> TowerScalar {
        // small random polynomials in a, b plus an occasional c part
        let poly = |rng: &mut dyn rand::RngCore| {
            let mut p = poly2::Poly2::zero();
            for _ in 0..rng.gen_range(1..3) {
                let e = (rng.gen_range(0..3u32), rng.gen_range(0..3u32));
                let c = gauss::GaussQ::from_i64(rng.gen_range(-3i64..4));
                p = p.add(&poly2::Poly2::monomial(e, c));
            }
            p
        };
        let re = ratfun::RatFun::from_poly(poly(rng));
        let im = if rng.gen_bool(0.5) {
            ratfun::RatFun::from_poly(poly(rng))
        } else {
            ratfun::RatFun::zero()
        };
        t.from_parts(re, im)
    }

    #[test]
    fn reduce_is_idempotent_and_multiplicative() {
        let t = Tower::new();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let x = random_tower_elem(&t, &mut rng);
            let y = random_tower_elem(&t, &mut rng);
            assert_eq!(t.reduce(&x), x);
            assert_eq!(t.reduce(&t.mul(&x, &y)), t.mul(&x, &y));
            // ring homomorphism laws on reduced forms
            assert_eq!(t.mul(&x, &y), t.mul(&y, &x));
            assert_eq!(t.add(&x, &y), t.add(&y, &x));
        }
    }

    #[test]
    fn tower_field_axioms_sampled() {
        let t = Tower::new();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..25 {
            let x = random_tower_elem(&t, &mut rng);
            let y = random_tower_elem(&t, &mut rng);
            let z = random_tower_elem(&t, &mut rng);
            assert_eq!(t.mul(&x, &t.add(&y, &z)), t.add(&t.mul(&x, &y), &t.mul(&x, &z)));
            assert_eq!(t.mul(&t.mul(&x, &y), &z), t.mul(&x, &t.mul(&y, &z)));
            if !t.is_zero(&x) {
                let xi = t.inv(&x).unwrap();
                assert!(t.eq(&t.mul(&x, &xi), &t.one()));
            }
        }
    }
}
