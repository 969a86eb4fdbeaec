//! Projective geometry over the scalar domain: the space quartic E cut out by
//! the quadric pencil, its chord-law group structure with a pinned origin,
//! 4-torsion translation formulas, and Plücker coordinates for lines.

pub mod plucker;

pub use plucker::PluckerLine;

use crate::linalg::Matrix;
use crate::scalar::{Field, FiniteField, ParamField};
use rand::Rng;

/// A point of P^3, normalized so the first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjPoint<F: Field>(pub [F::Elem; 4]);

impl<F: Field> ProjPoint<F> {
    pub fn new(f: &F, coords: [F::Elem; 4]) -> Self {
        let mut p = ProjPoint(coords);
        p.normalize(f);
        p
    }

    pub fn from_vec(f: &F, v: Vec<F::Elem>) -> Self {
        assert_eq!(v.len(), 4);
        let mut it = v.into_iter();
        Self::new(
            f,
            [
                it.next().unwrap(),
                it.next().unwrap(),
                it.next().unwrap(),
                it.next().unwrap(),
            ],
        )
    }

    pub fn normalize(&mut self, f: &F) {
        let lead = self.0.iter().find(|x| !f.is_zero(x)).cloned();
        let lead = lead.expect("zero vector is not a projective point");
        let inv = f.inv(&lead).unwrap();
        for x in self.0.iter_mut() {
            *x = f.mul(x, &inv);
        }
    }

    pub fn eq(&self, f: &F, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(x, y)| f.eq(x, y))
    }
}

/// A quadratic form on k^4 as a symmetric Gram matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadricForm<F: Field>(pub Matrix<F>);

impl<F: Field> QuadricForm<F> {
    pub fn diagonal(f: &F, d: [F::Elem; 4]) -> Self {
        let mut m = Matrix::zero(f, 4, 4);
        for (k, x) in d.into_iter().enumerate() {
            m[(k, k)] = x;
        }
        QuadricForm(m)
    }

    pub fn eval(&self, f: &F, p: &[F::Elem; 4]) -> F::Elem {
        self.polar(f, p, p)
    }

    /// Polar pairing p^T G q.
    pub fn polar(&self, f: &F, p: &[F::Elem; 4], q: &[F::Elem; 4]) -> F::Elem {
        let v = self.0.mul_vec(f, q);
        let mut acc = f.zero();
        for (x, y) in p.iter().zip(&v) {
            acc = f.add(&acc, &f.mul(x, y));
        }
        acc
    }

    pub fn rank(&self, f: &F) -> usize {
        self.0.rank(f)
    }

    /// Vertex of a rank-3 quadric: the kernel point.
    pub fn vertex(&self, f: &F) -> Option<ProjPoint<F>> {
        let k = self.0.kernel(f);
        if k.len() != 1 {
            return None;
        }
        Some(ProjPoint::from_vec(f, k[0].clone()))
    }

    /// Substitute x_m -> sum_k m[k][m] x_k into the form.
    pub fn substituted(&self, f: &F, m: &Matrix<F>) -> Self {
        QuadricForm(m.mul(f, &self.0).mul(f, &m.transpose(f)))
    }

    /// Does the line spanned by p, q lie on the quadric?
    pub fn contains_line(&self, f: &F, p: &[F::Elem; 4], q: &[F::Elem; 4]) -> bool {
        f.is_zero(&self.eval(f, p))
            && f.is_zero(&self.eval(f, q))
            && f.is_zero(&self.polar(f, p, q))
    }

    /// Proportionality of Gram matrices.
    pub fn proportional(&self, f: &F, other: &Self) -> bool {
        let a = Matrix::from_rows(f, vec![self.0.data.clone(), other.0.data.clone()]);
        a.rank(f) <= 1
    }
}

/// The two pencil generators cutting out E in the x-coordinates.
pub fn pencil_generators<F: ParamField>(f: &F) -> (QuadricForm<F>, QuadricForm<F>) {
    let one = f.one();
    let be = f.beta();
    let ga = f.gamma();
    let q1 = QuadricForm::diagonal(f, [one.clone(), one.clone(), one.clone(), one.clone()]);
    let q2 = QuadricForm::diagonal(f, [one, f.neg(&f.mul(&be, &ga)), f.neg(&ga), be]);
    (q1, q2)
}

/// The four quadric equations through E: entry j is the member later labeled
/// by the 2-torsion point xi_j (entry 0 being the sum of squares).
pub fn curve_equations<F: ParamField>(f: &F) -> [QuadricForm<F>; 4] {
    let one = f.one();
    let al = f.alpha();
    let be = f.beta();
    let ga = f.gamma();
    [
        QuadricForm::diagonal(f, [one.clone(), one.clone(), one.clone(), one.clone()]),
        QuadricForm::diagonal(
            f,
            [one.clone(), f.neg(&f.mul(&be, &ga)), f.neg(&ga), be.clone()],
        ),
        QuadricForm::diagonal(
            f,
            [one.clone(), ga.clone(), f.neg(&f.mul(&al, &ga)), f.neg(&al)],
        ),
        QuadricForm::diagonal(f, [one, f.neg(&be), al.clone(), f.neg(&f.mul(&al, &be))]),
    ]
}

pub fn on_curve<F: ParamField>(f: &F, p: &ProjPoint<F>) -> bool {
    let (q1, q2) = pencil_generators(f);
    f.is_zero(&q1.eval(f, &p.0)) && f.is_zero(&q2.eval(f, &p.0))
}

/// Negation: (l0, l1, l2, l3) -> (-l0, l1, l2, l3).
pub fn negate<F: ParamField>(f: &F, p: &ProjPoint<F>) -> ProjPoint<F> {
    ProjPoint::new(
        f,
        [
            f.neg(&p.0[0]),
            p.0[1].clone(),
            p.0[2].clone(),
            p.0[3].clone(),
        ],
    )
}

/// The distinguished point tau' = (abc, a, b, c).
pub fn tau_prime<F: ParamField>(f: &F) -> ProjPoint<F> {
    let a = f.gen_a();
    let b = f.gen_b();
    let c = f.gen_c();
    ProjPoint::new(f, [f.mul(&a, &f.mul(&b, &c)), a, b, c])
}

/// Translation by the order-4 points, as coordinate formulas on all of P^3.
pub fn eps_translate<F: ParamField>(f: &F, j: usize, p: &ProjPoint<F>) -> ProjPoint<F> {
    let i = f.gen_i();
    let a = f.gen_a();
    let b = f.gen_b();
    let c = f.gen_c();
    let l = &p.0;
    let coords = match j {
        1 => [
            f.mul(&f.mul(&b, &c), &l[1]),
            f.neg(&f.mul(&i, &l[0])),
            f.mul(&f.mul(&i, &b), &l[3]),
            f.mul(&c, &l[2]),
        ],
        2 => [
            f.mul(&f.mul(&a, &c), &l[2]),
            f.mul(&a, &l[3]),
            f.neg(&f.mul(&i, &l[0])),
            f.mul(&f.mul(&i, &c), &l[1]),
        ],
        3 => [
            f.mul(&f.mul(&a, &b), &l[3]),
            f.mul(&f.mul(&i, &a), &l[2]),
            f.mul(&b, &l[1]),
            f.neg(&f.mul(&i, &l[0])),
        ],
        _ => panic!("translation index must be 1..=3"),
    };
    ProjPoint::new(f, coords)
}

/// Sign-flip translation by 2-torsion (the square of eps_translate).
pub fn gamma_translate<F: ParamField>(f: &F, j: usize, p: &ProjPoint<F>) -> ProjPoint<F> {
    let mut coords = p.0.clone();
    for k in 1..4 {
        if k != j {
            coords[k] = f.neg(&coords[k]);
        }
    }
    ProjPoint::new(f, coords)
}

/// Point coordinate bridge between the x-basis and the y-basis:
/// (l0, l1, l2, l3)_x -> (l0, -i l1, -i l2, l3)_y.
pub fn bridge_x_to_y<F: ParamField>(f: &F, p: &ProjPoint<F>) -> ProjPoint<F> {
    let i = f.gen_i();
    ProjPoint::new(
        f,
        [
            p.0[0].clone(),
            f.neg(&f.mul(&i, &p.0[1])),
            f.neg(&f.mul(&i, &p.0[2])),
            p.0[3].clone(),
        ],
    )
}

pub fn bridge_y_to_x<F: ParamField>(f: &F, p: &ProjPoint<F>) -> ProjPoint<F> {
    let i = f.gen_i();
    ProjPoint::new(
        f,
        [
            p.0[0].clone(),
            f.mul(&i, &p.0[1]),
            f.mul(&i, &p.0[2]),
            p.0[3].clone(),
        ],
    )
}

/// Bridge a quadratic form on the x-basis to the y-basis.
pub fn bridge_form_x_to_y<F: ParamField>(f: &F, q: &QuadricForm<F>) -> QuadricForm<F> {
    // points transform by D = diag(1, -i, -i, 1); the y-form is D^-T G D^-1
    let i = f.gen_i();
    let mut d_inv = Matrix::identity(f, 4);
    d_inv[(1, 1)] = i.clone();
    d_inv[(2, 2)] = i;
    QuadricForm(d_inv.transpose(f).mul(f, &q.0).mul(f, &d_inv))
}

/// Chord-law addition with an explicit origin. The sum is the negation of the
/// fourth intersection of E with the plane through p, q, o; doubling uses the
/// plane through o and the tangent line at p.
pub fn add_with_origin<F: ParamField>(
    f: &F,
    p: &ProjPoint<F>,
    q: &ProjPoint<F>,
    o: &ProjPoint<F>,
) -> Result<ProjPoint<F>, String> {
    let (g1, g2) = pencil_generators(f);
    if p.eq(f, o) {
        return Ok(q.clone());
    }
    if q.eq(f, o) {
        return Ok(p.clone());
    }
    if q.eq(f, &negate(f, p)) {
        return Ok(o.clone());
    }
    let t = if p.eq(f, q) {
        // tangent line at p: intersection of the two polar planes
        let m = Matrix::from_rows(f, vec![g1.0.mul_vec(f, &p.0), g2.0.mul_vec(f, &p.0)]);
        let ker = m.kernel(f);
        if ker.len() != 2 {
            return Err("tangent line is not well defined".into());
        }
        let pick = ker
            .iter()
            .map(|v| ProjPoint::from_vec(f, v.clone()))
            .find(|v| !v.eq(f, p))
            .ok_or("no tangent direction independent of the point")?;
        pick
    } else {
        q.clone()
    };
    // plane basis [p, t, o]; in these coordinates the chord line is {w = 0}
    let b = Matrix::from_rows(f, vec![p.0.to_vec(), t.0.to_vec(), o.0.to_vec()]).transpose(f);
    if b.rank(f) != 3 {
        return Err("degenerate plane through p, q, o".into());
    }
    let restrict = |g: &QuadricForm<F>| b.transpose(f).mul(f, &g.0).mul(f, &b);
    let h1 = restrict(&g1);
    let h2 = restrict(&g2);
    // pencil member vanishing on {w = 0}: kill the surviving coefficients of
    // the restriction c_uv * uv + c_vv * v^2 (c_uu = q(p) = 0 on the curve)
    let coeffs = |h: &Matrix<F>| vec![f.add(&h[(0, 1)], &h[(1, 0)]), h[(1, 1)].clone()];
    let sys = Matrix::from_rows(f, vec![coeffs(&h1), coeffs(&h2)]).transpose(f);
    let mu = sys.kernel(f);
    if mu.len() != 1 {
        return Err("pencil member on the chord line is not unique".into());
    }
    let member = h1.scale(f, &mu[0][0]).add(f, &h2.scale(f, &mu[0][1]));
    if member.is_zero(f) {
        return Err("restricted pencil collapsed".into());
    }
    // member = l1 * l2 with l1 = (0,0,1); l2 is the polar of o = (0,0,1)
    let o_h = [f.zero(), f.zero(), f.one()];
    let l2 = member.mul_vec(f, &o_h);
    if l2.iter().all(|x| f.is_zero(x)) {
        return Err("degenerate member on the residual line".into());
    }
    let lker = Matrix::from_rows(f, vec![l2]).kernel(f);
    let s = lker
        .iter()
        .find(|v| !(f.is_zero(&v[0]) && f.is_zero(&v[1])))
        .ok_or("no direction on the residual line")?;
    // second root of a restricted conic through o on the line o + v*s
    let fourth_on = |h: &Matrix<F>| -> Option<[F::Elem; 3]> {
        let hs = h.mul_vec(f, s);
        let cross = hs[2].clone(); // o^T H s with o = (0,0,1)
        let qs = {
            let mut acc = f.zero();
            for (x, y) in s.iter().zip(&hs) {
                acc = f.add(&acc, &f.mul(x, y));
            }
            acc
        };
        if f.is_zero(&cross) && f.is_zero(&qs) {
            return None; // line lies on this conic
        }
        // q(u*o + v*s) = 2uv*cross + v^2*qs; roots v = 0 and (u : v) = (qs : -2 cross)
        let u = qs;
        let v = f.neg(&f.add(&cross, &cross));
        Some([
            f.mul(&v, &s[0]),
            f.mul(&v, &s[1]),
            f.add(&u, &f.mul(&v, &s[2])),
        ])
    };
    let w_h = fourth_on(&h1)
        .or_else(|| fourth_on(&h2))
        .ok_or("residual line lies on both conics")?;
    let w_amb = b.mul_vec(f, &w_h);
    if w_amb.iter().all(|x| f.is_zero(x)) {
        return Err("fourth intersection collapsed to zero".into());
    }
    let w = ProjPoint::from_vec(f, w_amb);
    if !on_curve(f, &w) {
        return Err("fourth intersection left the curve".into());
    }
    Ok(negate(f, &w))
}

/// A pinned curve over a finite specialization: origin, torsion labels, and
/// the distinguished points. Immutable after pinning.
#[derive(Clone)]
pub struct ECurve<F: ParamField> {
    pub field: F,
    pub origin: ProjPoint<F>,
    /// xi_0 = origin, xi_1..xi_3 labeled by vertex matching.
    pub two_torsion: [ProjPoint<F>; 4],
    /// eps_j = eps_translate(j, origin).
    pub eps: [ProjPoint<F>; 3],
    pub tau_prime: ProjPoint<F>,
    /// tau = -(tau' + tau').
    pub tau: ProjPoint<F>,
    /// vertices e_0..e_3 of the singular pencil members.
    pub vertices: [ProjPoint<F>; 4],
    /// all rational curve points.
    pub points: Vec<ProjPoint<F>>,
}

#[derive(Debug, thiserror::Error)]
pub enum CurveError {
    #[error("degenerate specialization: {0}")]
    Degenerate(String),
}

impl<F: ParamField + FiniteField> ECurve<F> {
    /// Enumerate E(F_q), pin the origin by the translation consistency
    /// search, label the 2-torsion by the vertex matching, and cache tau.
    pub fn pin(f: &F, rng: &mut impl Rng) -> Result<Self, CurveError> {
        let points = enumerate_curve(f);
        if points.is_empty() {
            return Err(CurveError::Degenerate("no rational curve points".into()));
        }
        let plane_section: Vec<ProjPoint<F>> = points
            .iter()
            .filter(|p| f.is_zero(&p.0[0]))
            .cloned()
            .collect();
        if plane_section.len() != 4 {
            return Err(CurveError::Degenerate(format!(
                "curve meets x0=0 in {} rational points, need 4",
                plane_section.len()
            )));
        }
        let sample: Vec<ProjPoint<F>> = (0..20)
            .map(|_| points[rng.gen_range(0..points.len())].clone())
            .collect();
        let mut passing = Vec::new();
        for cand in &plane_section {
            let mut ok = true;
            'outer: for j in [1usize, 2] {
                let ej = eps_translate(f, j, cand);
                for p in &sample {
                    match add_with_origin(f, p, &ej, cand) {
                        Ok(sum) if sum.eq(f, &eps_translate(f, j, p)) => {}
                        _ => {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
            }
            if ok {
                passing.push(cand.clone());
            }
        }
        if passing.is_empty() {
            return Err(CurveError::Degenerate(
                "no origin candidate passes the translation consistency search".into(),
            ));
        }
        // Every 2-torsion shift of the origin yields the conjugate group law,
        // which the coordinate translation formulas cannot see, so all section
        // points pass the consistency search. The choice is immaterial for
        // every derived label; pick the canonical (lexicographically first)
        // passing candidate and record the tie-break.
        passing.sort_by_key(|p| {
            p.0.iter().map(|x| f.fmt_elem(x)).collect::<Vec<_>>().join(",")
        });
        let origin = passing.remove(0);
        let eps: [ProjPoint<F>; 3] = std::array::from_fn(|k| eps_translate(f, k + 1, &origin));
        let add = |p: &ProjPoint<F>, q: &ProjPoint<F>| add_with_origin(f, p, q, &origin);
        let xi: [ProjPoint<F>; 3] = std::array::from_fn(|k| {
            add(&eps[k], &eps[k]).expect("doubling a 4-torsion point")
        });
        let two_torsion = [origin.clone(), xi[0].clone(), xi[1].clone(), xi[2].clone()];
        for t in &two_torsion {
            if !plane_section.iter().any(|p| p.eq(f, t)) {
                return Err(CurveError::Degenerate(
                    "2-torsion does not match the x0 = 0 section".into(),
                ));
            }
        }
        let tp = tau_prime(f);
        if !on_curve(f, &tp) {
            return Err(CurveError::Degenerate("tau' is not on the curve".into()));
        }
        let two_tp = add(&tp, &tp).map_err(CurveError::Degenerate)?;
        let tau = negate(f, &two_tp);
        let vertices: [ProjPoint<F>; 4] = std::array::from_fn(|k| {
            let mut c = [f.zero(), f.zero(), f.zero(), f.zero()];
            c[k] = f.one();
            ProjPoint::new(f, c)
        });
        Ok(ECurve {
            field: f.clone(),
            origin,
            two_torsion,
            eps,
            tau_prime: tp,
            tau,
            vertices,
            points,
        })
    }

    pub fn add(&self, p: &ProjPoint<F>, q: &ProjPoint<F>) -> ProjPoint<F> {
        add_with_origin(&self.field, p, q, &self.origin).expect("chord law failed")
    }

    pub fn sub(&self, p: &ProjPoint<F>, q: &ProjPoint<F>) -> ProjPoint<F> {
        self.add(p, &negate(&self.field, q))
    }

    pub fn mul_small(&self, n: i64, p: &ProjPoint<F>) -> ProjPoint<F> {
        let f = &self.field;
        let mut acc = self.origin.clone();
        let base = if n < 0 { negate(f, p) } else { p.clone() };
        for _ in 0..n.unsigned_abs() {
            acc = self.add(&acc, &base);
        }
        acc
    }

    /// 4-torsion is exactly the locus with a vanishing coordinate.
    pub fn in_four_torsion(&self, p: &ProjPoint<F>) -> bool {
        let f = &self.field;
        p.0.iter().any(|x| f.is_zero(x))
    }

    /// All rational p with p + p = target.
    pub fn halve(&self, target: &ProjPoint<F>) -> Vec<ProjPoint<F>> {
        self.points
            .iter()
            .filter(|p| self.add(p, p).eq(&self.field, target))
            .cloned()
            .collect()
    }

    /// The pencil member through the secants with base sum z, sampled at
    /// three secants and checked for consistency.
    pub fn member_through(&self, z: &ProjPoint<F>) -> Result<QuadricForm<F>, CurveError> {
        let f = &self.field;
        let mut found: Option<(F::Elem, F::Elem)> = None;
        let mut used = 0;
        for p in &self.points {
            let q = self.sub(z, p);
            if q.eq(f, p) {
                continue;
            }
            let lm = pencil_member_on_line(f, &p.0, &q.0).ok_or_else(|| {
                CurveError::Degenerate("secant line on no pencil member".into())
            })?;
            match &found {
                None => found = Some(lm),
                Some(prev) => {
                    let cross = f.sub(&f.mul(&prev.0, &lm.1), &f.mul(&prev.1, &lm.0));
                    if !f.is_zero(&cross) {
                        return Err(CurveError::Degenerate(
                            "pencil member depends on the sample".into(),
                        ));
                    }
                }
            }
            used += 1;
            if used >= 3 {
                break;
            }
        }
        let (l, m) = found.ok_or_else(|| {
            CurveError::Degenerate("no usable secant samples for the member".into())
        })?;
        let (g1, g2) = pencil_generators(f);
        Ok(QuadricForm(g1.0.scale(f, &l).add(f, &g2.0.scale(f, &m))))
    }

    /// The four singular pencil members with their vertices, ordered so that
    /// entry j has vertex e_j.
    pub fn singular_members(&self) -> Result<[(ProjPoint<F>, QuadricForm<F>); 4], CurveError> {
        let f = &self.field;
        let (g1, g2) = pencil_generators(f);
        let mut found: Vec<(ProjPoint<F>, QuadricForm<F>)> = Vec::new();
        let mut candidates: Vec<(F::Elem, F::Elem)> = f
            .elements()
            .into_iter()
            .map(|m| (f.one(), m))
            .collect();
        candidates.push((f.zero(), f.one()));
        for (l, m) in candidates {
            let g = QuadricForm(g1.0.scale(f, &l).add(f, &g2.0.scale(f, &m)));
            let r = g.rank(f);
            if r == 4 {
                continue;
            }
            if r != 3 {
                return Err(CurveError::Degenerate(format!(
                    "pencil member of rank {}",
                    r
                )));
            }
            let v = g.vertex(f).unwrap();
            found.push((v, g));
        }
        if found.len() != 4 {
            return Err(CurveError::Degenerate(format!(
                "{} singular members, need 4",
                found.len()
            )));
        }
        let mut out = Vec::with_capacity(4);
        for j in 0..4 {
            let hit = found
                .iter()
                .find(|(v, _)| v.eq(f, &self.vertices[j]))
                .ok_or_else(|| {
                    CurveError::Degenerate(format!("no singular member has vertex e{}", j))
                })?;
            out.push(hit.clone());
        }
        out.try_into()
            .map_err(|_| CurveError::Degenerate("label mismatch".into()))
    }
}

/// Brute enumeration of the curve over a finite specialization.
pub fn enumerate_curve<F: ParamField + FiniteField>(f: &F) -> Vec<ProjPoint<F>> {
    let (q1, q2) = pencil_generators(f);
    projective_points(f)
        .into_iter()
        .filter(|p| f.is_zero(&q1.eval(f, &p.0)) && f.is_zero(&q2.eval(f, &p.0)))
        .collect()
}

/// All points of P^3 over a finite field, in normalized form.
pub fn projective_points<F: Field + FiniteField>(f: &F) -> Vec<ProjPoint<F>> {
    let els = f.elements();
    let n = els.len();
    let mut out = Vec::with_capacity(n * n * n + n * n + n + 1);
    for lead in 0..4usize {
        let frees = 3 - lead;
        let total = n.pow(frees as u32);
        for mut code in 0..total {
            let mut coords = vec![f.zero(); lead];
            coords.push(f.one());
            for _ in 0..frees {
                coords.push(els[code % n].clone());
                code /= n;
            }
            out.push(ProjPoint([
                coords[0].clone(),
                coords[1].clone(),
                coords[2].clone(),
                coords[3].clone(),
            ]));
        }
    }
    out
}

/// All points of P^2 over a finite field as normalized triples.
pub fn projective_points_p2<F: Field + FiniteField>(f: &F) -> Vec<[F::Elem; 3]> {
    let els = f.elements();
    let n = els.len();
    let mut out = Vec::with_capacity(n * n + n + 1);
    for lead in 0..3usize {
        let frees = 2 - lead;
        let total = n.pow(frees as u32);
        for mut code in 0..total {
            let mut coords = vec![f.zero(); lead];
            coords.push(f.one());
            for _ in 0..frees {
                coords.push(els[code % n].clone());
                code /= n;
            }
            out.push([coords[0].clone(), coords[1].clone(), coords[2].clone()]);
        }
    }
    out
}

/// The unique pencil member containing the line through p and q, as (l : m);
/// None if no member contains the line or the member is not unique.
pub fn pencil_member_on_line<F: ParamField>(
    f: &F,
    p: &[F::Elem; 4],
    q: &[F::Elem; 4],
) -> Option<(F::Elem, F::Elem)> {
    let (g1, g2) = pencil_generators(f);
    let rows = vec![
        vec![g1.eval(f, p), g2.eval(f, p)],
        vec![g1.eval(f, q), g2.eval(f, q)],
        vec![g1.polar(f, p, q), g2.polar(f, p, q)],
    ];
    let ker = Matrix::from_rows(f, rows).kernel(f);
    if ker.len() != 1 {
        return None;
    }
    Some((ker[0][0].clone(), ker[0][1].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Field, Fq, Tower};
    use rand_chacha::rand_core::SeedableRng;

    #[test]
    fn tau_prime_is_on_the_curve_symbolically() {
        let t = Tower::new();
        assert!(on_curve(&t, &tau_prime(&t)));
        let e1 = ProjPoint::new(&t, [t.zero(), t.one(), t.zero(), t.zero()]);
        assert!(!on_curve(&t, &e1));
    }

    #[test]
    fn negation_is_an_involution() {
        let t = Tower::new();
        let tp = tau_prime(&t);
        let m = negate(&t, &tp);
        assert!(on_curve(&t, &m));
        assert!(negate(&t, &m).eq(&t, &tp));
    }

    #[test]
    fn four_torsion_coordinate_claims() {
        let t = Tower::new();
        let a = t.gen_a();
        let b = t.gen_b();
        let c = t.gen_c();
        let i = t.gen_i();
        let tp = tau_prime(&t);
        let mtp = negate(&t, &tp);
        let one = t.one();
        let cases: [(usize, &ProjPoint<Tower>, [<Tower as Field>::Elem; 4]); 6] = [
            (1, &tp, [a.clone(), t.neg(&t.mul(&i, &a)), i.clone(), one.clone()]),
            (1, &mtp, [a.clone(), t.mul(&i, &a), i.clone(), one.clone()]),
            (2, &tp, [b.clone(), one.clone(), t.neg(&t.mul(&i, &b)), i.clone()]),
            (2, &mtp, [b.clone(), one.clone(), t.mul(&i, &b), i.clone()]),
            (3, &tp, [c.clone(), i.clone(), one.clone(), t.neg(&t.mul(&i, &c))]),
            (3, &mtp, [c.clone(), i.clone(), one.clone(), t.mul(&i, &c)]),
        ];
        for (j, p, expect) in cases {
            let got = eps_translate(&t, j, p);
            let want = ProjPoint::new(&t, expect);
            assert!(got.eq(&t, &want), "translate {} mismatch", j);
            assert!(on_curve(&t, &got));
        }
        let twice = eps_translate(&t, 1, &eps_translate(&t, 1, &tp));
        assert!(twice.eq(&t, &gamma_translate(&t, 1, &tp)));
    }

    #[test]
    fn translations_preserve_the_pencil_symbolically() {
        let t = Tower::new();
        let (q1, q2) = pencil_generators(&t);
        let diag = |g: &QuadricForm<Tower>| {
            vec![
                g.0[(0, 0)].clone(),
                g.0[(1, 1)].clone(),
                g.0[(2, 2)].clone(),
                g.0[(3, 3)].clone(),
            ]
        };
        for j in 1..=3 {
            let m = crate::qalg::phi_map(&t, j);
            for g in [&q1, &q2] {
                let img = g.substituted(&t, &m);
                let rows = vec![diag(&q1), diag(&q2), diag(&img)];
                assert_eq!(Matrix::from_rows(&t, rows).rank(&t), 2);
            }
        }
    }

    #[test]
    fn pinned_curve_group_law() {
        let f = Fq::specialize_params(11, 1).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let e = ECurve::pin(&f, &mut rng).unwrap();
        assert!(e.points.len() % 16 == 0, "full 4-torsion is rational");
        use rand::Rng;
        for _ in 0..20 {
            let p = &e.points[rng.gen_range(0..e.points.len())];
            let q = &e.points[rng.gen_range(0..e.points.len())];
            let r = &e.points[rng.gen_range(0..e.points.len())];
            assert!(e.add(p, q).eq(&f, &e.add(q, p)));
            assert!(e.add(&e.add(p, q), r).eq(&f, &e.add(p, &e.add(q, r))));
            assert!(e.add(p, &negate(&f, p)).eq(&f, &e.origin));
            assert!(e.add(p, &e.origin).eq(&f, p));
        }
        for j in 1..=3usize {
            let ej = &e.eps[j - 1];
            for _ in 0..20 {
                let p = &e.points[rng.gen_range(0..e.points.len())];
                assert!(e.add(p, ej).eq(&f, &eps_translate(&f, j, p)));
            }
            let xi = &e.two_torsion[j];
            for _ in 0..10 {
                let p = &e.points[rng.gen_range(0..e.points.len())];
                assert!(e.add(p, xi).eq(&f, &gamma_translate(&f, j, p)));
            }
            // each eps has order 4
            let twice = e.add(ej, ej);
            assert!(!twice.eq(&f, &e.origin));
            let four = e.add(&twice, &twice);
            assert!(four.eq(&f, &e.origin));
        }
    }

    #[test]
    fn member_of_tau_is_the_sum_of_squares() {
        let f = Fq::specialize_params(11, 1).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(10);
        let e = ECurve::pin(&f, &mut rng).unwrap();
        let (q1, _) = pencil_generators(&f);
        let m = e.member_through(&e.tau).unwrap();
        assert!(m.proportional(&f, &q1));
        let mneg = e.member_through(&negate(&f, &e.tau)).unwrap();
        assert!(mneg.proportional(&f, &q1));
        // and the second curve equation is the member of tau + xi_1
        let t1 = e.add(&e.tau, &e.two_torsion[1]);
        let m1 = e.member_through(&t1).unwrap();
        assert!(m1.proportional(&f, &curve_equations(&f)[1]));
        let t2 = e.add(&e.tau, &e.two_torsion[2]);
        let m2 = e.member_through(&t2).unwrap();
        assert!(m2.proportional(&f, &curve_equations(&f)[2]));
        let t3 = e.add(&e.tau, &e.two_torsion[3]);
        let m3 = e.member_through(&t3).unwrap();
        assert!(m3.proportional(&f, &curve_equations(&f)[3]));
    }

    #[test]
    fn singular_members_have_coordinate_vertices() {
        let f = Fq::specialize_params(13, 1).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let e = ECurve::pin(&f, &mut rng).unwrap();
        let sm = e.singular_members().unwrap();
        for (j, (v, g)) in sm.iter().enumerate() {
            assert!(v.eq(&f, &e.vertices[j]));
            assert_eq!(g.rank(&f), 3);
        }
        for j in 1..=3 {
            let m = e.member_through(&e.two_torsion[j]).unwrap();
            assert_eq!(m.rank(&f), 3);
            assert!(m.vertex(&f).unwrap().eq(&f, &e.vertices[j]));
        }
        let m0 = e.member_through(&e.origin).unwrap();
        assert!(m0.vertex(&f).unwrap().eq(&f, &e.vertices[0]));
    }

    #[test]
    fn symbolic_member_of_tau_via_translate_pairs() {
        // the secant through -tau'+eps1 and -tau'-eps1 has base sum -2tau',
        // and lies on the sum of squares
        let t = Tower::new();
        let tp = tau_prime(&t);
        let p = eps_translate(&t, 1, &negate(&t, &tp));
        let q = negate(&t, &eps_translate(&t, 1, &tp));
        let (l, m) = pencil_member_on_line(&t, &p.0, &q.0).unwrap();
        assert!(!t.is_zero(&l));
        assert!(t.is_zero(&m));
    }
}
