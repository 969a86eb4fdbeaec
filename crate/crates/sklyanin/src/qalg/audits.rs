//! Identity audits for the two presentations: the order-4 automorphism group,
//! the central pencil, and the fixed-subalgebra realization of the twist.

use super::{
    a_central_elements, gamma_map, phi_map, psi_map, s_central_elements, squares_combo, t2,
    Presentation,
};
use crate::linalg::Matrix;
use crate::report::Audit;
use crate::scalar::ParamField;

fn mat_eq<F: ParamField>(f: &F, a: &Matrix<F>, b: &Matrix<F>) -> bool {
    a.rows == b.rows && a.cols == b.cols && a.data.iter().zip(&b.data).all(|(x, y)| f.eq(x, y))
}

/// Verifies the generator-level group structure: phi_j^2 against the stated
/// scalar multiples of the sign involutions, the i-twisted commutation of the
/// phi_j, and the scalar identities that normalize them to order 4.
pub fn h4_group_audit<F: ParamField>(f: &F) -> Audit {
    let mut audit = Audit::new("heisenberg-group");
    let i = f.gen_i();
    let a = f.gen_a();
    let b = f.gen_b();
    let c = f.gen_c();
    let phi: Vec<Matrix<F>> = (1..=3).map(|j| phi_map(f, j)).collect();
    let gam: Vec<Matrix<F>> = (1..=3).map(|j| gamma_map(f, j)).collect();
    // phi_j^2 = scalar_j * gamma_j with scalar_j = -i*bc, -i*ac, -i*ab
    let scalars = [
        f.neg(&f.mul(&i, &f.mul(&b, &c))),
        f.neg(&f.mul(&i, &f.mul(&a, &c))),
        f.neg(&f.mul(&i, &f.mul(&a, &b))),
    ];
    for j in 0..3 {
        let sq = phi[j].mul(f, &phi[j]);
        let rhs = gam[j].scale(f, &scalars[j]);
        audit.check(format!("phi{}^2 = scalar * gamma{}", j + 1, j + 1), mat_eq(f, &sq, &rhs));
    }
    // the normalizing squares nu_j^2 = scalar_j satisfy a nu1^2 = b nu2^2 = c nu3^2 = -iabc
    let target = f.neg(&f.mul(&i, &f.mul(&a, &f.mul(&b, &c))));
    audit.check("a*scalar1 = -iabc", f.eq(&f.mul(&a, &scalars[0]), &target));
    audit.check("b*scalar2 = -iabc", f.eq(&f.mul(&b, &scalars[1]), &target));
    audit.check("c*scalar3 = -iabc", f.eq(&f.mul(&c, &scalars[2]), &target));
    // phi1 phi2 = i phi2 phi1, and cyclically
    for (x, y, name) in [
        (0usize, 1usize, "phi1*phi2 = i*phi2*phi1"),
        (1, 2, "phi2*phi3 = i*phi3*phi2"),
        (2, 0, "phi3*phi1 = i*phi1*phi3"),
    ] {
        let lhs = phi[x].mul(f, &phi[y]);
        let rhs = phi[y].mul(f, &phi[x]).scale(f, &i);
        audit.check(name, mat_eq(f, &lhs, &rhs));
    }
    // identity map trivially commutes with itself
    let id = Matrix::identity(f, 4);
    audit.check("identity commutes with itself", mat_eq(f, &id.mul(f, &id), &id));
    audit
}

/// Table-level automorphism audit on both presentations.
pub fn automorphism_table_audit<F: ParamField>(
    s: &Presentation<F>,
    a: &Presentation<F>,
) -> Audit {
    let f = &s.field;
    let mut audit = Audit::new("automorphism-tables");
    for j in 1..=3 {
        audit.check(
            format!("gamma{} preserves S relations", j),
            s.is_graded_automorphism(&gamma_map(f, j)),
        );
        audit.check(
            format!("gamma{} preserves twist relations", j),
            a.is_graded_automorphism(&gamma_map(f, j)),
        );
        audit.check(
            format!("phi{} preserves S relations", j),
            s.is_graded_automorphism(&phi_map(f, j)),
        );
        audit.check(
            format!("psi{} is NOT an automorphism of the twist", j),
            !a.is_graded_automorphism(&psi_map(f, j)),
        );
    }
    audit
}

/// The 2-dimensional central pencil of S: linear relations among the five
/// quadric central elements and the images of Omega under phi_j.
pub fn central_pencil_audit<F: ParamField>(s: &Presentation<F>) -> Audit {
    let f = &s.field;
    let mut audit = Audit::new("central-pencil");
    let [omega, om0, om1, om2, om3] = s_central_elements(f);
    for (name, z) in [
        ("Omega", &omega),
        ("Omega0", &om0),
        ("Omega1", &om1),
        ("Omega2", &om2),
        ("Omega3", &om3),
    ] {
        audit.check(format!("{} central in S", name), s.is_central_deg2(z));
    }
    let al = f.alpha();
    let be = f.beta();
    let ga = f.gamma();
    // 2*alpha*beta*gamma*Omega0 + alpha*Omega1 + beta*Omega2 + gamma*Omega3 = 0
    let cls = |v: &Vec<F::Elem>| s.class2(v);
    let comb = |terms: Vec<(F::Elem, &Vec<F::Elem>)>| -> Vec<F::Elem> {
        let mut acc = vec![f.zero(); s.dim(2)];
        for (coef, z) in terms {
            let zc = cls(z);
            for (a, x) in acc.iter_mut().zip(&zc) {
                *a = f.add(a, &f.mul(&coef, x));
            }
        }
        acc
    };
    let two_abg = f.mul(&f.from_i64(2), &f.mul(&al, &f.mul(&be, &ga)));
    let lin = comb(vec![
        (two_abg, &om0),
        (al.clone(), &om1),
        (be.clone(), &om2),
        (ga.clone(), &om3),
    ]);
    audit.check(
        "2abg*Omega0 + a*Omega1 + b*Omega2 + g*Omega3 = 0",
        lin.iter().all(|x| f.is_zero(x)),
    );
    // alpha_j (1+alpha_i)(1+alpha_j) Omega = (1+alpha_i alpha_j) Omega_i - (1+alpha_j) Omega_k
    let oms = [&om1, &om2, &om3];
    for (i, j, k) in [(1usize, 2usize, 3usize), (2, 3, 1), (3, 1, 2)] {
        let ai = f.alpha_i(i);
        let aj = f.alpha_i(j);
        let one = f.one();
        let lhs_coef = f.mul(&aj, &f.mul(&f.add(&one, &ai), &f.add(&one, &aj)));
        let lhs = comb(vec![(lhs_coef, &omega)]);
        let rhs = comb(vec![
            (f.add(&one, &f.mul(&ai, &aj)), oms[i - 1]),
            (f.neg(&f.add(&one, &aj)), oms[k - 1]),
        ]);
        audit.check(
            format!("pencil relation for cyclic ({},{},{})", i, j, k),
            lhs.iter().zip(&rhs).all(|(x, y)| f.eq(x, y)),
        );
    }
    // -phi_j(Omega) = Omega_j + (product) * Omega, with the explicit quadrics
    let phis: Vec<Matrix<F>> = (1..=3).map(|j| phi_map(f, j)).collect();
    let prods = [f.mul(&be, &ga), f.mul(&al, &ga), f.mul(&al, &be)];
    let explicit = [
        squares_combo(f, [f.one(), f.mul(&be, &ga), f.neg(&ga), be.clone()]),
        squares_combo(f, [f.one(), ga.clone(), f.mul(&al, &ga), f.neg(&al)]),
        squares_combo(f, [f.one(), f.neg(&be), al.clone(), f.mul(&al, &be)]),
    ];
    for j in 0..3 {
        // apply phi (x) phi to the Omega tensor
        let m = &phis[j];
        let mut img = vec![f.zero(); 16];
        for a1 in 0..4 {
            for b1 in 0..4 {
                let c0 = &omega[t2(a1, b1)];
                if f.is_zero(c0) {
                    continue;
                }
                for k in 0..4 {
                    for l in 0..4 {
                        let t = f.mul(c0, &f.mul(&m[(k, a1)], &m[(l, b1)]));
                        img[t2(k, l)] = f.add(&img[t2(k, l)], &t);
                    }
                }
            }
        }
        let lhs = cls(&img).iter().map(|x| f.neg(x)).collect::<Vec<_>>();
        let rhs = comb(vec![
            (f.one(), oms[j]),
            (prods[j].clone(), &omega),
        ]);
        let rhs2 = cls(&explicit[j]);
        audit.check(
            format!("-phi{}(Omega) = Omega{} + prod*Omega", j + 1, j + 1),
            lhs.iter().zip(&rhs).all(|(x, y)| f.eq(x, y)),
        );
        audit.check(
            format!("-phi{}(Omega) matches its explicit quadric", j + 1),
            lhs.iter().zip(&rhs2).all(|(x, y)| f.eq(x, y)),
        );
    }
    // the zero element satisfies every linear identity
    let zero = comb(vec![(f.zero(), &omega)]);
    audit.check("zero scaling sanity", zero.iter().all(|x| f.is_zero(x)));
    audit
}

/// Centrality audit for the twist: Omega and the three Theta quadrics.
pub fn twist_center_audit<F: ParamField>(a: &Presentation<F>) -> Audit {
    let f = &a.field;
    let mut audit = Audit::new("twist-center");
    let [omega, th1, th2, th3] = a_central_elements(f);
    for (name, z) in [
        ("Omega", &omega),
        ("Theta1", &th1),
        ("Theta2", &th2),
        ("Theta3", &th3),
    ] {
        audit.check(format!("{} central in twist", name), a.is_central_deg2(z));
    }
    let y0sq = squares_combo(f, [f.one(), f.zero(), f.zero(), f.zero()]);
    audit.check("y0^2 not central in twist", !a.is_central_deg2(&y0sq));
    // the span of {Omega, Theta1, Theta2, Theta3} in degree 2 is a pencil
    let rows: Vec<Vec<F::Elem>> = [&omega, &th1, &th2, &th3]
        .iter()
        .map(|z| a.class2(z))
        .collect();
    let rank = Matrix::from_rows(f, rows).rank(f);
    audit.check_detail("central quadrics span a pencil", rank == 2, format!("rank {}", rank));
    audit
}

/// The quaternion units as 4-dimensional coordinate vectors over the field,
/// basis order (e11, e12, e21, e22).
pub fn quaternion_units<F: ParamField>(f: &F) -> [[F::Elem; 4]; 4] {
    let o = f.one();
    let z = f.zero();
    let i = f.gen_i();
    [
        [o.clone(), z.clone(), z.clone(), o.clone()],
        [i.clone(), z.clone(), z.clone(), f.neg(&i)],
        [z.clone(), i.clone(), i.clone(), z.clone()],
        [z.clone(), f.from_i64(-1), o.clone(), z.clone()],
    ]
}

/// 2x2 matrix product on coordinate vectors (e11, e12, e21, e22).
pub fn m2_mul<F: ParamField>(f: &F, x: &[F::Elem], y: &[F::Elem]) -> [F::Elem; 4] {
    [
        f.add(&f.mul(&x[0], &y[0]), &f.mul(&x[1], &y[2])),
        f.add(&f.mul(&x[0], &y[1]), &f.mul(&x[1], &y[3])),
        f.add(&f.mul(&x[2], &y[0]), &f.mul(&x[3], &y[2])),
        f.add(&f.mul(&x[2], &y[1]), &f.mul(&x[3], &y[3])),
    ]
}

/// Realizes the twist inside S (x) M_2 at low degrees: the sign involutions
/// acting on S tensored with quaternion conjugation fix a subalgebra whose
/// graded dimensions match the twist, and y_j -> x_j (x) q_j is a graded
/// isomorphism onto it up to the requested degree.
pub fn fixed_subalgebra_audit<F: ParamField>(
    s: &Presentation<F>,
    a: &Presentation<F>,
    max_degree: usize,
) -> Audit {
    let f = &s.field;
    let mut audit = Audit::new("fixed-subalgebra");
    let q = quaternion_units(f);
    // conjugation by q_j on M2 coordinates
    let conj = |j: usize| -> Matrix<F> {
        let qj = &q[j];
        let qj_inv_scale = match j {
            0 => f.one(),
            _ => f.from_i64(-1), // q_j^-1 = -q_j for j = 1,2,3
        };
        let mut m = Matrix::zero(f, 4, 4);
        for (col, unit) in [
            [f.one(), f.zero(), f.zero(), f.zero()],
            [f.zero(), f.one(), f.zero(), f.zero()],
            [f.zero(), f.zero(), f.one(), f.zero()],
            [f.zero(), f.zero(), f.zero(), f.one()],
        ]
        .iter()
        .enumerate()
        {
            let t = m2_mul(f, qj, unit);
            let t = m2_mul(f, &t, qj);
            for r in 0..4 {
                m[(r, col)] = f.mul(&t[r], &qj_inv_scale);
            }
        }
        m
    };
    for n in 0..=max_degree {
        let ds = s.dim(n);
        let da = a.dim(n);
        // gamma_1 (x) conj(q_1) and gamma_2 (x) conj(q_2) acting on S_n (x) M2
        let mut constraints: Vec<Vec<F::Elem>> = Vec::new();
        for j in [1usize, 2] {
            let gs = s.induced_map(&gamma_map(f, j), n);
            let cm = conj(j);
            // (gs (x) cm - id) v = 0
            for r1 in 0..ds {
                for r2 in 0..4 {
                    let mut row = vec![f.zero(); ds * 4];
                    for c1 in 0..ds {
                        for c2 in 0..4 {
                            let v = f.mul(&gs[(r1, c1)], &cm[(r2, c2)]);
                            row[c1 * 4 + c2] = v;
                        }
                    }
                    row[r1 * 4 + r2] = f.sub(&row[r1 * 4 + r2], &f.one());
                    constraints.push(row);
                }
            }
        }
        let cm = Matrix::from_rows(f, constraints);
        let fixed = cm.kernel(f);
        audit.check_detail(
            format!("degree {}: fixed subspace dim = twist dim", n),
            fixed.len() == da,
            format!("fixed {}, twist {}", fixed.len(), da),
        );
        // the word map y_{i1}..y_{in} -> x-word (x) q-product lands in the
        // fixed subspace and is injective on the twist component
        let mut images: Vec<Vec<F::Elem>> = Vec::new();
        for basis_idx in 0..da {
            let mut v = vec![f.zero(); da];
            v[basis_idx] = f.one();
            let tensor = a.lift_tensor(n, &v);
            let mut img = vec![f.zero(); ds * 4];
            for (widx, coef) in tensor.iter().enumerate() {
                if f.is_zero(coef) {
                    continue;
                }
                // decode the word from the tensor index
                let mut word = Vec::with_capacity(n);
                let mut idx = widx;
                for _ in 0..n {
                    word.push(idx % 4);
                    idx /= 4;
                }
                word.reverse();
                // x-word class via left multiplication chain
                let mut xcls = vec![f.one()];
                let mut deg = 0;
                for &g in word.iter().rev() {
                    xcls = s.left_mul(g, deg, &xcls);
                    deg += 1;
                }
                // q-product
                let mut qprod = [f.one(), f.zero(), f.zero(), f.one()];
                for &g in &word {
                    qprod = m2_mul(f, &qprod, &q[g]);
                }
                for (r1, xv) in xcls.iter().enumerate() {
                    for (r2, qv) in qprod.iter().enumerate() {
                        let t = f.mul(coef, &f.mul(xv, qv));
                        img[r1 * 4 + r2] = f.add(&img[r1 * 4 + r2], &t);
                    }
                }
            }
            images.push(img);
        }
        let img_rank = Matrix::from_rows(f, images.clone()).rank(f);
        audit.check_detail(
            format!("degree {}: word map injective", n),
            img_rank == da,
            format!("rank {}, twist dim {}", img_rank, da),
        );
        // image contained in the fixed subspace
        let mut span = fixed.clone();
        let base_rank = if span.is_empty() {
            0
        } else {
            Matrix::from_rows(f, span.clone()).rank(f)
        };
        span.extend(images);
        let joint_rank = Matrix::from_rows(f, span).rank(f);
        audit.check(
            format!("degree {}: image inside fixed subspace", n),
            joint_rank == base_rank,
        );
    }
    audit
}

