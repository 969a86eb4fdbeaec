//! The seven components of the line scheme in dual Plücker coordinates
//! (z01, z02, z03, z12, z13, z23), with membership tests, counting oracles,
//! and the pairwise intersection table.

use crate::linalg::Matrix;
use crate::scalar::{Field, FiniteField, ParamField};

pub const Z01: usize = 0;
pub const Z02: usize = 1;
pub const Z03: usize = 2;
pub const Z12: usize = 3;
pub const Z13: usize = 4;
pub const Z23: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum ComponentTag {
    C0,
    C1,
    C2,
    C3,
    E1,
    E2,
    E3,
}

pub const ALL_TAGS: [ComponentTag; 7] = [
    ComponentTag::C0,
    ComponentTag::C1,
    ComponentTag::C2,
    ComponentTag::C3,
    ComponentTag::E1,
    ComponentTag::E2,
    ComponentTag::E3,
];

impl ComponentTag {
    pub fn is_conic(&self) -> bool {
        matches!(
            self,
            ComponentTag::C0 | ComponentTag::C1 | ComponentTag::C2 | ComponentTag::C3
        )
    }

    pub fn conic_index(&self) -> Option<usize> {
        match self {
            ComponentTag::C0 => Some(0),
            ComponentTag::C1 => Some(1),
            ComponentTag::C2 => Some(2),
            ComponentTag::C3 => Some(3),
            _ => None,
        }
    }

    pub fn elliptic_index(&self) -> Option<usize> {
        match self {
            ComponentTag::E1 => Some(1),
            ComponentTag::E2 => Some(2),
            ComponentTag::E3 => Some(3),
            _ => None,
        }
    }
}

/// Sparse quadratic form on the six z-coordinates: sum coeff * z_i * z_j.
pub type ZQuad<F> = Vec<(usize, usize, <F as Field>::Elem)>;

pub struct ComponentSpec<F: Field> {
    pub tag: ComponentTag,
    /// linear equations as covectors.
    pub linear: Vec<[F::Elem; 6]>,
    /// quadratic equations.
    pub quadratic: Vec<ZQuad<F>>,
}

pub fn eval_quad<F: Field>(f: &F, q: &ZQuad<F>, z: &[F::Elem; 6]) -> F::Elem {
    let mut acc = f.zero();
    for (i, j, c) in q {
        acc = f.add(&acc, &f.mul(c, &f.mul(&z[*i], &z[*j])));
    }
    acc
}

pub fn eval_linear<F: Field>(f: &F, l: &[F::Elem; 6], z: &[F::Elem; 6]) -> F::Elem {
    let mut acc = f.zero();
    for (c, x) in l.iter().zip(z) {
        if f.is_zero(c) || f.is_zero(x) {
            continue;
        }
        acc = f.add(&acc, &f.mul(c, x));
    }
    acc
}

/// The exchange quadric cutting the line variety inside P^5.
pub fn exchange_quad<F: ParamField>(f: &F) -> ZQuad<F> {
    vec![
        (Z01, Z23, f.one()),
        (Z02, Z13, f.from_i64(-1)),
        (Z03, Z12, f.one()),
    ]
}

/// Build all seven component specifications from the field parameters.
pub fn component_specs<F: ParamField>(f: &F) -> Vec<ComponentSpec<F>> {
    let one = f.one();
    let m1 = f.from_i64(-1);
    let al = f.alpha();
    let be = f.beta();
    let ga = f.gamma();
    let z = |vals: [(usize, F::Elem); 2]| -> [F::Elem; 6] {
        let mut v = [
            f.zero(),
            f.zero(),
            f.zero(),
            f.zero(),
            f.zero(),
            f.zero(),
        ];
        for (idx, c) in vals {
            v[idx] = c;
        }
        v
    };
    let single = |idx: usize| -> [F::Elem; 6] { z([(idx, f.one()), (idx, f.one())]) };
    let mut specs = Vec::with_capacity(7);
    // conics: three linear forms plus the restricted quadric
    specs.push(ComponentSpec {
        tag: ComponentTag::C0,
        linear: vec![
            z([(Z23, one.clone()), (Z01, al.clone())]),
            z([(Z13, one.clone()), (Z02, f.neg(&be))]),
            z([(Z12, one.clone()), (Z03, ga.clone())]),
        ],
        quadratic: vec![
            vec![
                (Z01, Z01, al.clone()),
                (Z02, Z02, be.clone()),
                (Z03, Z03, ga.clone()),
            ],
            exchange_quad(f),
        ],
    });
    specs.push(ComponentSpec {
        tag: ComponentTag::C1,
        linear: vec![
            z([(Z23, one.clone()), (Z01, f.neg(&al))]),
            z([(Z13, one.clone()), (Z02, one.clone())]),
            z([(Z12, one.clone()), (Z03, one.clone())]),
        ],
        quadratic: vec![
            vec![
                (Z01, Z01, al.clone()),
                (Z02, Z02, one.clone()),
                (Z03, Z03, m1.clone()),
            ],
            exchange_quad(f),
        ],
    });
    specs.push(ComponentSpec {
        tag: ComponentTag::C2,
        linear: vec![
            z([(Z23, one.clone()), (Z01, one.clone())]),
            z([(Z13, one.clone()), (Z02, be.clone())]),
            z([(Z12, one.clone()), (Z03, m1.clone())]),
        ],
        quadratic: vec![
            vec![
                (Z01, Z01, m1.clone()),
                (Z02, Z02, be.clone()),
                (Z03, Z03, one.clone()),
            ],
            exchange_quad(f),
        ],
    });
    specs.push(ComponentSpec {
        tag: ComponentTag::C3,
        linear: vec![
            z([(Z23, one.clone()), (Z01, m1.clone())]),
            z([(Z13, one.clone()), (Z02, m1.clone())]),
            z([(Z12, one.clone()), (Z03, f.neg(&ga))]),
        ],
        quadratic: vec![
            vec![
                (Z01, Z01, one.clone()),
                (Z02, Z02, m1.clone()),
                (Z03, Z03, ga.clone()),
            ],
            exchange_quad(f),
        ],
    });
    // quartic space curves: two vanishing coordinates plus two quadrics
    specs.push(ComponentSpec {
        tag: ComponentTag::E1,
        linear: vec![single(Z23), single(Z01)],
        quadratic: vec![
            vec![(Z13, Z02, one.clone()), (Z12, Z03, m1.clone())],
            vec![
                (Z13, Z13, f.add(&one, &ga)),
                (Z12, Z12, f.neg(&f.sub(&one, &be))),
                (Z03, Z03, f.neg(&f.mul(&ga, &f.sub(&one, &be)))),
                (Z02, Z02, f.neg(&f.mul(&be, &f.add(&one, &ga)))),
            ],
            exchange_quad(f),
        ],
    });
    specs.push(ComponentSpec {
        tag: ComponentTag::E2,
        linear: vec![single(Z13), single(Z02)],
        quadratic: vec![
            vec![(Z23, Z01, one.clone()), (Z12, Z03, one.clone())],
            vec![
                (Z23, Z23, f.sub(&one, &ga)),
                (Z12, Z12, f.neg(&f.add(&one, &al))),
                (Z03, Z03, f.mul(&ga, &f.add(&one, &al))),
                (Z01, Z01, f.mul(&al, &f.sub(&one, &ga))),
            ],
            exchange_quad(f),
        ],
    });
    specs.push(ComponentSpec {
        tag: ComponentTag::E3,
        linear: vec![single(Z12), single(Z03)],
        quadratic: vec![
            vec![(Z23, Z01, one.clone()), (Z13, Z02, m1.clone())],
            vec![
                (Z23, Z23, f.add(&one, &be)),
                (Z13, Z13, f.neg(&f.sub(&one, &al))),
                (Z02, Z02, f.neg(&f.mul(&be, &f.sub(&one, &al)))),
                (Z01, Z01, f.neg(&f.mul(&al, &f.add(&one, &be)))),
            ],
            exchange_quad(f),
        ],
    });
    specs
}

impl<F: Field> ComponentSpec<F> {
    pub fn contains(&self, f: &F, z: &[F::Elem; 6]) -> bool {
        self.linear.iter().all(|l| f.is_zero(&eval_linear(f, l, z)))
            && self
                .quadratic
                .iter()
                .all(|q| f.is_zero(&eval_quad(f, q, z)))
    }
}

/// All tags whose equations the z-vector satisfies.
pub fn component_membership<F: Field>(
    f: &F,
    specs: &[ComponentSpec<F>],
    z: &[F::Elem; 6],
) -> Vec<ComponentTag> {
    specs
        .iter()
        .filter(|s| s.contains(f, z))
        .map(|s| s.tag)
        .collect()
}

/// Independent per-component point counts over F_q, by direct enumeration
/// of the cut-down projective spaces.
pub fn component_point_count<F: ParamField + FiniteField>(
    f: &F,
    spec: &ComponentSpec<F>,
) -> usize {
    // free coordinates: those not forced to zero and not eliminated by the
    // conic substitutions; simplest correct route: enumerate P^5 points with
    // the two zero coordinates removed for elliptic components, and the
    // three substituted coordinates for conics.
    match spec.tag {
        ComponentTag::C0 | ComponentTag::C1 | ComponentTag::C2 | ComponentTag::C3 => {
            // linear forms express z23, z13, z12 through z01, z02, z03
            let mut count = 0;
            for p in crate::egeom::projective_points_p2(f) {
                let z = conic_point_to_z(f, spec, &p);
                if spec
                    .quadratic
                    .iter()
                    .all(|q| f.is_zero(&eval_quad(f, q, &z)))
                {
                    count += 1;
                }
            }
            count
        }
        _ => {
            // two coordinates vanish; scan P^3 on the remaining four
            let zero_idx: Vec<usize> = (0..6)
                .filter(|&k| {
                    spec.linear
                        .iter()
                        .any(|l| !f.is_zero(&l[k]) && l.iter().filter(|c| !f.is_zero(c)).count() == 1)
                })
                .collect();
            assert_eq!(zero_idx.len(), 2);
            let free_idx: Vec<usize> = (0..6).filter(|k| !zero_idx.contains(k)).collect();
            let mut count = 0;
            for p in crate::egeom::projective_points(f) {
                let mut z = [
                    f.zero(),
                    f.zero(),
                    f.zero(),
                    f.zero(),
                    f.zero(),
                    f.zero(),
                ];
                for (slot, &zi) in free_idx.iter().enumerate() {
                    z[zi] = p.0[slot].clone();
                }
                if spec
                    .quadratic
                    .iter()
                    .all(|q| f.is_zero(&eval_quad(f, q, &z)))
                {
                    count += 1;
                }
            }
            count
        }
    }
}

/// Extend a P^2 point (z01, z02, z03) to the full z-vector using a conic
/// spec's linear relations.
pub fn conic_point_to_z<F: Field>(
    f: &F,
    spec: &ComponentSpec<F>,
    p: &[F::Elem; 3],
) -> [F::Elem; 6] {
    let mut z = [
        p[0].clone(),
        p[1].clone(),
        p[2].clone(),
        f.zero(),
        f.zero(),
        f.zero(),
    ];
    // each linear form is z_hi + c * z_lo = 0 with hi in {z12, z13, z23}
    for l in &spec.linear {
        for hi in [Z12, Z13, Z23] {
            if !f.is_zero(&l[hi]) {
                let mut rhs = f.zero();
                for lo in [Z01, Z02, Z03] {
                    if !f.is_zero(&l[lo]) {
                        rhs = f.add(&rhs, &f.mul(&l[lo], &z[lo]));
                    }
                }
                z[hi] = f.neg(&f.div(&rhs, &l[hi]));
            }
        }
    }
    z
}

/// The expected intersection points of conic i with quartic j (twelve pairs,
/// two points each), built from the field parameters.
pub fn expected_intersection_points<F: ParamField>(f: &F) -> Vec<(ComponentTag, ComponentTag, [[F::Elem; 6]; 2])> {
    let i = f.gen_i();
    let a = f.gen_a();
    let b = f.gen_b();
    let c = f.gen_c();
    let one = f.one();
    let al = f.alpha();
    let be = f.beta();
    let ga = f.gamma();
    let ia = f.mul(&i, &a);
    let ib = f.mul(&i, &b);
    let ic = f.mul(&i, &c);
    let n = |x: &F::Elem| f.neg(x);
    let pair = |base: [F::Elem; 6], flip: [bool; 6]| -> [[F::Elem; 6]; 2] {
        let other: [F::Elem; 6] = std::array::from_fn(|k| {
            if flip[k] {
                f.neg(&base[k])
            } else {
                base[k].clone()
            }
        });
        [base, other]
    };
    use ComponentTag::*;
    vec![
        (
            C0,
            E1,
            pair(
                [f.zero(), c.clone(), ib.clone(), n(&f.mul(&ib, &ga)), f.mul(&be, &c), f.zero()],
                [false, false, true, true, false, false],
            ),
        ),
        (
            C0,
            E2,
            pair(
                [c.clone(), f.zero(), ia.clone(), n(&f.mul(&ia, &ga)), f.zero(), n(&f.mul(&al, &c))],
                [false, false, true, true, false, false],
            ),
        ),
        (
            C0,
            E3,
            pair(
                [b.clone(), ia.clone(), f.zero(), f.zero(), f.mul(&ia, &be), n(&f.mul(&al, &b))],
                [false, true, false, false, true, false],
            ),
        ),
        (
            C1,
            E1,
            pair(
                [f.zero(), one.clone(), one.clone(), n(&one), n(&one), f.zero()],
                [false, false, true, true, false, false],
            ),
        ),
        (
            C1,
            E2,
            pair(
                [one.clone(), f.zero(), a.clone(), n(&a), f.zero(), al.clone()],
                [false, false, true, true, false, false],
            ),
        ),
        (
            C1,
            E3,
            pair(
                [one.clone(), ia.clone(), f.zero(), f.zero(), n(&ia), al.clone()],
                [false, true, false, false, true, false],
            ),
        ),
        (
            C2,
            E1,
            pair(
                [f.zero(), one.clone(), ib.clone(), ib.clone(), n(&be), f.zero()],
                [false, false, true, true, false, false],
            ),
        ),
        (
            C2,
            E2,
            pair(
                [one.clone(), f.zero(), one.clone(), one.clone(), f.zero(), n(&one)],
                [false, false, true, true, false, false],
            ),
        ),
        (
            C2,
            E3,
            pair(
                [b.clone(), one.clone(), f.zero(), f.zero(), n(&be), n(&b)],
                [false, true, false, false, true, false],
            ),
        ),
        (
            C3,
            E1,
            pair(
                [f.zero(), c.clone(), one.clone(), ga.clone(), c.clone(), f.zero()],
                [false, false, true, true, false, false],
            ),
        ),
        (
            C3,
            E2,
            pair(
                [c.clone(), f.zero(), i.clone(), f.mul(&i, &ga), f.zero(), c.clone()],
                [false, false, true, true, false, false],
            ),
        ),
        (
            C3,
            E3,
            pair(
                [one.clone(), one.clone(), f.zero(), f.zero(), one.clone(), one.clone()],
                [false, true, false, false, true, false],
            ),
        ),
    ]
}

pub fn proportional_z<F: Field>(f: &F, x: &[F::Elem; 6], y: &[F::Elem; 6]) -> bool {
    Matrix::from_rows(f, vec![x.to_vec(), y.to_vec()]).rank(f) <= 1
}

/// Compute the intersection points of a conic spec and an elliptic spec over
/// a finite field: solve the five linear forms, then the quadrics on the
/// residual pencil.
pub fn compute_intersection<F: ParamField + FiniteField>(
    f: &F,
    conic: &ComponentSpec<F>,
    quartic: &ComponentSpec<F>,
) -> Result<Vec<[F::Elem; 6]>, String> {
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for l in conic.linear.iter().chain(quartic.linear.iter()) {
        rows.push(l.to_vec());
    }
    let ker = Matrix::from_rows(f, rows).kernel(f);
    if ker.len() != 2 {
        return Err(format!(
            "linear system of {:?} and {:?} has kernel dim {}",
            conic.tag,
            quartic.tag,
            ker.len()
        ));
    }
    let g = &ker[0];
    let h = &ker[1];
    let mut out: Vec<[F::Elem; 6]> = Vec::new();
    // scan (u : v) in P^1
    let mut params: Vec<(F::Elem, F::Elem)> =
        f.elements().into_iter().map(|v| (f.one(), v)).collect();
    params.push((f.zero(), f.one()));
    for (u, v) in params {
        let z: [F::Elem; 6] = std::array::from_fn(|k| {
            f.add(&f.mul(&u, &g[k]), &f.mul(&v, &h[k]))
        });
        if z.iter().all(|x| f.is_zero(x)) {
            continue;
        }
        let ok = conic
            .quadratic
            .iter()
            .chain(quartic.quadratic.iter())
            .all(|q| f.is_zero(&eval_quad(f, q, &z)));
        if ok && !out.iter().any(|w| proportional_z(f, w, &z)) {
            out.push(z);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Fq, Tower};

    #[test]
    fn intersection_table_holds_symbolically() {
        let t = Tower::new();
        let specs = component_specs(&t);
        for (ci, ej, pts) in expected_intersection_points(&t) {
            let cs = specs.iter().find(|s| s.tag == ci).unwrap();
            let es = specs.iter().find(|s| s.tag == ej).unwrap();
            for z in &pts {
                assert!(cs.contains(&t, z), "{:?} point not on {:?}", z, ci);
                assert!(es.contains(&t, z), "{:?} point not on {:?}", z, ej);
            }
            assert!(!proportional_z(&t, &pts[0], &pts[1]));
        }
    }

    #[test]
    fn computed_intersections_match_the_table() {
        let f = Fq::specialize_params(11, 1).unwrap();
        let specs = component_specs(&f);
        let expected = expected_intersection_points(&f);
        let mut total = 0;
        for (ci, ej, pts) in &expected {
            let cs = specs.iter().find(|s| s.tag == *ci).unwrap();
            let es = specs.iter().find(|s| s.tag == *ej).unwrap();
            let got = compute_intersection(&f, cs, es).unwrap();
            assert_eq!(got.len(), 2, "{:?} x {:?}", ci, ej);
            for z in &got {
                assert!(
                    pts.iter().any(|w| proportional_z(&f, w, z)),
                    "unexpected intersection point for {:?} x {:?}",
                    ci,
                    ej
                );
            }
            total += got.len();
        }
        assert_eq!(total, 24);
    }

    #[test]
    fn conic_counts_are_q_plus_one() {
        let f = Fq::specialize_params(7, 1).unwrap();
        let specs = component_specs(&f);
        let q = f.order() as usize;
        for s in &specs {
            if s.tag.is_conic() {
                assert_eq!(component_point_count(&f, s), q + 1, "{:?}", s.tag);
            }
        }
    }
}
