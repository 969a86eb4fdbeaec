//! Lines in P^3 carried with a two-point span and the six 2x2 minors, plus
//! the dual (plane-pair) view obtained by the complementary index swap.

use super::ProjPoint;
use crate::linalg::Matrix;
use crate::scalar::Field;

/// Minor index order used throughout: (01, 02, 03, 12, 13, 23).
pub const MINOR_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

#[derive(Clone, Debug)]
pub struct PluckerLine<F: Field> {
    /// Two distinct points spanning the line.
    pub span: [ProjPoint<F>; 2],
    /// Minors of the 2x4 span matrix, in MINOR_PAIRS order.
    pub minors: [F::Elem; 6],
}

/// The complementary-index swap: X_{pq} -> z_{rs} whenever (p,q,r,s) is an
/// even permutation of (0,1,2,3). In MINOR_PAIRS order this sends
/// (m01, m02, m03, m12, m13, m23) to (m23, -m13, m12, m03, -m02, m01).
pub fn dual_coords<F: Field>(f: &F, m: &[F::Elem; 6]) -> [F::Elem; 6] {
    [
        m[5].clone(),
        f.neg(&m[4]),
        m[3].clone(),
        m[2].clone(),
        f.neg(&m[1]),
        m[0].clone(),
    ]
}

/// Minors of a 2x4 matrix given by two rows.
pub fn minors_of_rows<F: Field>(f: &F, r0: &[F::Elem; 4], r1: &[F::Elem; 4]) -> [F::Elem; 6] {
    std::array::from_fn(|k| {
        let (i, j) = MINOR_PAIRS[k];
        f.sub(&f.mul(&r0[i], &r1[j]), &f.mul(&r0[j], &r1[i]))
    })
}

impl<F: Field> PluckerLine<F> {
    /// Build from two distinct points; panics if they coincide.
    pub fn from_points(f: &F, p: ProjPoint<F>, q: ProjPoint<F>) -> Self {
        assert!(!p.eq(f, &q), "a line needs two distinct points");
        let minors = minors_of_rows(f, &p.0, &q.0);
        PluckerLine { span: [p, q], minors }
    }

    /// The quadratic exchange relation m01*m23 - m02*m13 + m03*m12.
    pub fn exchange_relation(&self, f: &F) -> F::Elem {
        let m = &self.minors;
        f.add(
            &f.sub(&f.mul(&m[0], &m[5]), &f.mul(&m[1], &m[4])),
            &f.mul(&m[2], &m[3]),
        )
    }

    /// Basis of the linear forms vanishing on both span points.
    pub fn vanishing_forms(&self, f: &F) -> Vec<Vec<F::Elem>> {
        let m = Matrix::from_rows(f, vec![self.span[0].0.to_vec(), self.span[1].0.to_vec()]);
        m.kernel(f)
    }

    /// The dual line: the line of the dual P^3 spanned by the two vanishing
    /// forms. Its minors are the complementary swap of this line's minors.
    pub fn dual_line(&self, f: &F) -> PluckerLine<F> {
        let forms = self.vanishing_forms(f);
        assert_eq!(forms.len(), 2);
        let p = ProjPoint::from_vec(f, forms[0].clone());
        let q = ProjPoint::from_vec(f, forms[1].clone());
        PluckerLine::from_points(f, p, q)
    }

    /// Coordinates of this line in the dual (plane-coefficient) convention.
    pub fn z_coords(&self, f: &F) -> [F::Elem; 6] {
        dual_coords(f, &self.minors)
    }

    /// Projective equality of minor vectors.
    pub fn same_line(&self, f: &F, other: &Self) -> bool {
        proportional6(f, &self.minors, &other.minors)
    }

    /// Is the point on the line?
    pub fn contains(&self, f: &F, p: &ProjPoint<F>) -> bool {
        let m = Matrix::from_rows(
            f,
            vec![
                self.span[0].0.to_vec(),
                self.span[1].0.to_vec(),
                p.0.to_vec(),
            ],
        );
        m.rank(f) == 2
    }
}

pub fn proportional6<F: Field>(f: &F, x: &[F::Elem; 6], y: &[F::Elem; 6]) -> bool {
    let m = Matrix::from_rows(f, vec![x.to_vec(), y.to_vec()]);
    m.rank(f) <= 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ParamField, Tower};

    #[test]
    fn secant_of_translate_pair_satisfies_stated_forms() {
        // the line x0 + i x1 = x2 - i x3 = 0 passes through (a, ia, i, 1)
        // and (a, ia, -i, -1)
        let t = Tower::new();
        let a = t.gen_a();
        let i = t.gen_i();
        let p = ProjPoint::new(&t, [a.clone(), t.mul(&i, &a), i.clone(), t.one()]);
        let q = ProjPoint::new(
            &t,
            [a.clone(), t.mul(&i, &a), t.neg(&i), t.from_i64(-1)],
        );
        for pt in [&p, &q] {
            let f1 = t.add(&pt.0[0], &t.mul(&i, &pt.0[1]));
            let f2 = t.sub(&pt.0[2], &t.mul(&i, &pt.0[3]));
            assert!(t.is_zero(&f1));
            assert!(t.is_zero(&f2));
        }
        let line = PluckerLine::from_points(&t, p, q);
        assert!(t.is_zero(&line.exchange_relation(&t)));
    }

    #[test]
    fn dual_of_dual_is_identity() {
        let t = Tower::new();
        let p = ProjPoint::new(&t, [t.one(), t.gen_a(), t.gen_b(), t.zero()]);
        let q = ProjPoint::new(&t, [t.zero(), t.one(), t.gen_i(), t.gen_c()]);
        let line = PluckerLine::from_points(&t, p, q);
        let dd = line.dual_line(&t).dual_line(&t);
        assert!(line.same_line(&t, &dd));
        // double swap of coordinates is literally the identity
        let z = line.z_coords(&t);
        let back = dual_coords(&t, &z);
        assert_eq!(back, line.minors);
        // dual z-coords satisfy the exchange relation too
        let m = &z;
        let rel = t.add(
            &t.sub(&t.mul(&m[0], &m[5]), &t.mul(&m[1], &m[4])),
            &t.mul(&m[2], &m[3]),
        );
        assert!(t.is_zero(&rel));
    }
}
