//! Point-scheme and line-scheme computation for the 4-generator presentations,
//! with the component decomposition, the intersection table, and the symbolic
//! conic audits.

mod audits;
mod components;
mod lines;
mod points;

pub use audits::*;
pub use components::*;
pub use lines::*;
pub use points::*;

use crate::linalg::Matrix;
use crate::qalg::Presentation;
use crate::scalar::{Field, ParamField};

/// The relation linearization: for each relation k and point p, the row
/// N(p)[k][j] = sum_i c_k^{ij} p_i. A pair (p, q) satisfies relation k iff
/// (N(p) q)_k = 0.
pub struct Linearization<F: ParamField> {
    /// per relation, the 4x4 coefficient matrix C_k with (C_k)[i][j].
    pub rel: Vec<Matrix<F>>,
    pub field: F,
}

impl<F: ParamField> Linearization<F> {
    pub fn new(pres: &Presentation<F>) -> Self {
        let f = pres.field.clone();
        let rel = (0..6)
            .map(|k| {
                let mut m = Matrix::zero(&f, 4, 4);
                for i in 0..4 {
                    for j in 0..4 {
                        m[(i, j)] = pres.relations[(k, 4 * i + j)].clone();
                    }
                }
                m
            })
            .collect();
        Linearization { rel, field: f }
    }

    /// N(p): 6x4, contracting the first tensor slot with p.
    pub fn eval_first(&self, p: &[F::Elem; 4]) -> Matrix<F> {
        let f = &self.field;
        let mut n = Matrix::zero(f, 6, 4);
        for (k, c) in self.rel.iter().enumerate() {
            for j in 0..4 {
                let mut acc = f.zero();
                for i in 0..4 {
                    if f.is_zero(&c[(i, j)]) || f.is_zero(&p[i]) {
                        continue;
                    }
                    acc = f.add(&acc, &f.mul(&c[(i, j)], &p[i]));
                }
                n[(k, j)] = acc;
            }
        }
        n
    }

    /// C(p): 6x4, contracting the second tensor slot with p; its kernel is
    /// the left-module successor (relations vanish on successor (x) p).
    pub fn eval_second(&self, p: &[F::Elem; 4]) -> Matrix<F> {
        let f = &self.field;
        let mut n = Matrix::zero(f, 6, 4);
        for (k, c) in self.rel.iter().enumerate() {
            for i in 0..4 {
                let mut acc = f.zero();
                for j in 0..4 {
                    if f.is_zero(&c[(i, j)]) || f.is_zero(&p[j]) {
                        continue;
                    }
                    acc = f.add(&acc, &f.mul(&c[(i, j)], &p[j]));
                }
                n[(k, i)] = acc;
            }
        }
        n
    }
}

/// Point families of the twist: the four special points and the four
/// ordinary families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum PointFamily {
    Special,
    Ordinary0,
    Ordinary1,
    Ordinary2,
    Ordinary3,
}

impl PointFamily {
    pub fn ordinary_index(&self) -> Option<usize> {
        match self {
            PointFamily::Special => None,
            PointFamily::Ordinary0 => Some(0),
            PointFamily::Ordinary1 => Some(1),
            PointFamily::Ordinary2 => Some(2),
            PointFamily::Ordinary3 => Some(3),
        }
    }
}

/// The expected twenty points of the twist point scheme in y-coordinates,
/// grouped as [special, family 0, family 1, family 2, family 3], each group
/// being a sign-flip orbit of its first row.
pub fn expected_twenty_points<F: ParamField>(f: &F) -> [[crate::egeom::ProjPoint<F>; 4]; 5] {
    use crate::egeom::{gamma_translate, ProjPoint};
    let i = f.gen_i();
    let a = f.gen_a();
    let b = f.gen_b();
    let c = f.gen_c();
    let one = f.one();
    let special: [ProjPoint<F>; 4] = std::array::from_fn(|k| {
        let mut v = [f.zero(), f.zero(), f.zero(), f.zero()];
        v[k] = f.one();
        ProjPoint::new(f, v)
    });
    let reps = [
        ProjPoint::new(f, [one.clone(), one.clone(), one.clone(), one.clone()]),
        ProjPoint::new(
            f,
            [
                f.mul(&b, &c),
                f.neg(&i),
                f.neg(&f.mul(&i, &b)),
                f.neg(&c),
            ],
        ),
        ProjPoint::new(
            f,
            [
                f.mul(&a, &c),
                f.neg(&a),
                f.neg(&i),
                f.neg(&f.mul(&i, &c)),
            ],
        ),
        ProjPoint::new(
            f,
            [
                f.mul(&a, &b),
                f.neg(&f.mul(&i, &a)),
                f.neg(&b),
                f.neg(&i),
            ],
        ),
    ];
    let orbit = |p: &ProjPoint<F>| -> [ProjPoint<F>; 4] {
        [
            p.clone(),
            gamma_translate(f, 1, p),
            gamma_translate(f, 2, p),
            gamma_translate(f, 3, p),
        ]
    };
    [
        special,
        orbit(&reps[0]),
        orbit(&reps[1]),
        orbit(&reps[2]),
        orbit(&reps[3]),
    ]
}

/// Central annihilator tensors for the ordinary point families:
/// family 0: 4 Theta1 + (1-b)(1+g) Omega, family j: 4 prod_j Omega +
/// (1-..)(1+..) Theta_j.
pub fn ordinary_annihilators<F: ParamField>(f: &F) -> [Vec<F::Elem>; 4] {
    use crate::qalg::a_central_elements;
    let [omega, th1, th2, th3] = a_central_elements(f);
    let al = f.alpha();
    let be = f.beta();
    let ga = f.gamma();
    let four = f.from_i64(4);
    let comb = |c1: F::Elem, z1: &[F::Elem], c2: F::Elem, z2: &[F::Elem]| -> Vec<F::Elem> {
        (0..16)
            .map(|k| f.add(&f.mul(&c1, &z1[k]), &f.mul(&c2, &z2[k])))
            .collect()
    };
    let f0 = comb(
        four.clone(),
        &th1,
        f.mul(&f.sub(&f.one(), &be), &f.add(&f.one(), &ga)),
        &omega,
    );
    let f1 = comb(
        f.mul(&four, &f.mul(&be, &ga)),
        &omega,
        f.mul(&f.sub(&f.one(), &be), &f.add(&f.one(), &ga)),
        &th1,
    );
    let f2 = comb(
        f.mul(&four, &f.mul(&al, &ga)),
        &omega,
        f.mul(&f.sub(&f.one(), &ga), &f.add(&f.one(), &al)),
        &th2,
    );
    let f3 = comb(
        f.mul(&four, &f.mul(&al, &be)),
        &omega,
        f.mul(&f.sub(&f.one(), &al), &f.add(&f.one(), &be)),
        &th3,
    );
    [f0, f1, f2, f3]
}
