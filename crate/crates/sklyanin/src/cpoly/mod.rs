//! Commutative multivariate polynomials over the scalar domain, Buchberger
//! bases, determinantal ideals, and projective dimension/degree certificates.

mod hilbert;

pub use hilbert::{hilbert_numerator, series_dim_degree};

use crate::scalar::Field;
use std::collections::HashMap;
use std::fmt::Write as _;

/// Exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u16>);

impl Mono {
    pub fn one(nvars: usize) -> Self {
        Mono(vec![0; nvars])
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, o: &Mono) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    pub fn div(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn coprime(&self, o: &Mono) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic (the default).
    GrevLex,
    /// Block elimination: the first k variables dominate, grevlex inside.
    Elim(usize),
}

fn grevlex_cmp(a: &[u16], b: &[u16]) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Mono, b: &Mono) -> std::cmp::Ordering {
        match self {
            MonomialOrder::GrevLex => grevlex_cmp(&a.0, &b.0),
            MonomialOrder::Elim(k) => {
                let c = grevlex_cmp(&a.0[..*k], &b.0[..*k]);
                if c != std::cmp::Ordering::Equal {
                    return c;
                }
                grevlex_cmp(&a.0[*k..], &b.0[*k..])
            }
        }
    }
}

/// A polynomial ring context: field, variable names, monomial order.
#[derive(Clone)]
pub struct PolyRing<F: Field> {
    pub field: F,
    pub nvars: usize,
    pub order: MonomialOrder,
    pub var_names: Vec<String>,
}

/// Terms sorted descending in the ring order; no zero coefficients.
#[derive(Clone, Debug)]
pub struct Poly<F: Field> {
    pub terms: Vec<(Mono, F::Elem)>,
}

impl<F: Field> PartialEq for Poly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, var_names: &[&str], order: MonomialOrder) -> Self {
        PolyRing {
            field,
            nvars: var_names.len(),
            order,
            var_names: var_names.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn zero(&self) -> Poly<F> {
        Poly { terms: Vec::new() }
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F> {
        if self.field.is_zero(&c) {
            return self.zero();
        }
        Poly {
            terms: vec![(Mono::one(self.nvars), c)],
        }
    }

    pub fn var(&self, i: usize) -> Poly<F> {
        let mut e = vec![0; self.nvars];
        e[i] = 1;
        Poly {
            terms: vec![(Mono(e), self.field.one())],
        }
    }

    pub fn monomial(&self, m: Mono, c: F::Elem) -> Poly<F> {
        if self.field.is_zero(&c) {
            return self.zero();
        }
        Poly { terms: vec![(m, c)] }
    }

    pub fn from_terms(&self, terms: Vec<(Mono, F::Elem)>) -> Poly<F> {
        let mut map: HashMap<Mono, F::Elem> = HashMap::new();
        for (m, c) in terms {
            let e = map.entry(m).or_insert_with(|| self.field.zero());
            *e = self.field.add(e, &c);
        }
        let mut v: Vec<(Mono, F::Elem)> = map
            .into_iter()
            .filter(|(_, c)| !self.field.is_zero(c))
            .collect();
        v.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        Poly { terms: v }
    }

    pub fn add(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        let mut terms = a.terms.clone();
        terms.extend(b.terms.iter().cloned());
        self.from_terms(terms)
    }

    pub fn sub(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Poly<F>) -> Poly<F> {
        Poly {
            terms: a
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.field.neg(c)))
                .collect(),
        }
    }

    pub fn mul(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        let mut terms = Vec::with_capacity(a.terms.len() * b.terms.len());
        for (m1, c1) in &a.terms {
            for (m2, c2) in &b.terms {
                terms.push((m1.mul(m2), self.field.mul(c1, c2)));
            }
        }
        self.from_terms(terms)
    }

    pub fn scale(&self, a: &Poly<F>, c: &F::Elem) -> Poly<F> {
        if self.field.is_zero(c) {
            return self.zero();
        }
        Poly {
            terms: a
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), self.field.mul(k, c)))
                .collect(),
        }
    }

    pub fn mul_term(&self, a: &Poly<F>, m: &Mono, c: &F::Elem) -> Poly<F> {
        if self.field.is_zero(c) {
            return self.zero();
        }
        Poly {
            terms: a
                .terms
                .iter()
                .map(|(mm, k)| (mm.mul(m), self.field.mul(k, c)))
                .collect(),
        }
    }

    pub fn lead<'a>(&self, a: &'a Poly<F>) -> Option<(&'a Mono, &'a F::Elem)> {
        a.terms.first().map(|(m, c)| (m, c))
    }

    pub fn monic(&self, a: &Poly<F>) -> Poly<F> {
        match self.lead(a) {
            None => self.zero(),
            Some((_, c)) => {
                let inv = self.field.inv(c).unwrap();
                self.scale(a, &inv)
            }
        }
    }

    pub fn total_degree(&self, a: &Poly<F>) -> u32 {
        a.terms
            .iter()
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous(&self, a: &Poly<F>) -> bool {
        let mut deg = None;
        for (m, _) in &a.terms {
            match deg {
                None => deg = Some(m.total_degree()),
                Some(d) if d == m.total_degree() => {}
                _ => return false,
            }
        }
        true
    }

    pub fn eval(&self, a: &Poly<F>, point: &[F::Elem]) -> F::Elem {
        let f = &self.field;
        let mut acc = f.zero();
        for (m, c) in &a.terms {
            let mut t = c.clone();
            for (v, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t = f.mul(&t, v);
                }
            }
            acc = f.add(&acc, &t);
        }
        acc
    }

    /// Full normal form against a list of divisors.
    pub fn normal_form(&self, a: &Poly<F>, basis: &[Poly<F>]) -> Poly<F> {
        let f = &self.field;
        let mut rem = self.zero();
        let mut work = a.clone();
        'outer: while let Some((lm, lc)) = work.terms.first().map(|(m, c)| (m.clone(), c.clone()))
        {
            for g in basis {
                if let Some((gm, gc)) = self.lead(g) {
                    if gm.divides(&lm) {
                        let q = lm.div(gm);
                        let coeff = f.div(&lc, gc);
                        work = self.sub(&work, &self.mul_term(g, &q, &coeff));
                        continue 'outer;
                    }
                }
            }
            rem = self.add(&rem, &self.monomial(lm.clone(), lc.clone()));
            work.terms.remove(0);
        }
        rem
    }

    pub fn s_poly(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        let f = &self.field;
        let (la, ca) = self.lead(a).expect("s_poly of zero");
        let (lb, cb) = self.lead(b).expect("s_poly of zero");
        let l = la.lcm(lb);
        let ta = self.mul_term(a, &l.div(la), &f.inv(ca).unwrap());
        let tb = self.mul_term(b, &l.div(lb), &f.inv(cb).unwrap());
        self.sub(&ta, &tb)
    }

    /// Buchberger's algorithm with the coprime and chain criteria; returns the
    /// auto-reduced monic basis.
    pub fn buchberger(&self, gens: &[Poly<F>]) -> Vec<Poly<F>> {
        let mut basis: Vec<Poly<F>> = gens
            .iter()
            .filter(|g| !g.terms.is_empty())
            .map(|g| self.monic(g))
            .collect();
        basis = self.interreduce(&basis);
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for i in 0..basis.len() {
            for j in 0..i {
                pairs.push((j, i));
            }
        }
        let mut done: std::collections::HashSet<(usize, usize)> = Default::default();
        while !pairs.is_empty() {
            let mut best = 0;
            let mut best_deg = u32::MAX;
            for (k, (i, j)) in pairs.iter().enumerate() {
                let d = self
                    .lead(&basis[*i])
                    .unwrap()
                    .0
                    .lcm(self.lead(&basis[*j]).unwrap().0)
                    .total_degree();
                if d < best_deg {
                    best_deg = d;
                    best = k;
                }
            }
            let (i, j) = pairs.swap_remove(best);
            done.insert((i, j));
            let li = self.lead(&basis[i]).unwrap().0.clone();
            let lj = self.lead(&basis[j]).unwrap().0.clone();
            if li.coprime(&lj) {
                continue;
            }
            let l = li.lcm(&lj);
            let mut skip = false;
            for k in 0..basis.len() {
                if k == i || k == j {
                    continue;
                }
                let lk = self.lead(&basis[k]).unwrap().0;
                if lk.divides(&l)
                    && done.contains(&(i.min(k), i.max(k)))
                    && done.contains(&(j.min(k), j.max(k)))
                {
                    skip = true;
                    break;
                }
            }
            if skip {
                continue;
            }
            let s = self.s_poly(&basis[i], &basis[j]);
            let r = self.normal_form(&s, &basis);
            if r.terms.is_empty() {
                continue;
            }
            let r = self.monic(&r);
            let new_idx = basis.len();
            basis.push(r);
            for k in 0..new_idx {
                pairs.push((k, new_idx));
            }
        }
        self.interreduce(&basis)
    }

    /// Reduce each element against the others; drop zeros; keep monic.
    pub fn interreduce(&self, basis: &[Poly<F>]) -> Vec<Poly<F>> {
        let mut work: Vec<Poly<F>> = basis
            .iter()
            .filter(|p| !p.terms.is_empty())
            .cloned()
            .collect();
        loop {
            let mut changed = false;
            let mut next: Vec<Poly<F>> = Vec::with_capacity(work.len());
            for i in 0..work.len() {
                let others: Vec<Poly<F>> = work
                    .iter()
                    .enumerate()
                    .filter(|(j, p)| *j != i && !p.terms.is_empty())
                    .map(|(_, p)| p.clone())
                    .collect();
                let r = self.normal_form(&work[i], &others);
                if r != work[i] {
                    changed = true;
                }
                if !r.terms.is_empty() {
                    next.push(self.monic(&r));
                }
            }
            next.sort_by(|a, b| {
                self.order
                    .cmp(self.lead(a).unwrap().0, self.lead(b).unwrap().0)
            });
            next.dedup();
            let stable = !changed && next.len() == work.len();
            work = next;
            if stable {
                break;
            }
        }
        work
    }

    /// Ideal membership against a Groebner basis.
    pub fn reduces_to_zero(&self, a: &Poly<F>, gb: &[Poly<F>]) -> bool {
        self.normal_form(a, gb).terms.is_empty()
    }

    /// All k x k minors of a matrix of polynomials.
    pub fn minors(&self, mat: &[Vec<Poly<F>>], k: usize) -> Vec<Poly<F>> {
        let rows = mat.len();
        let cols = mat.first().map(|r| r.len()).unwrap_or(0);
        assert!(k <= rows && k <= cols);
        let row_sets = combinations(rows, k);
        let col_sets = combinations(cols, k);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for rs in &row_sets {
            for cs in &col_sets {
                out.push(self.det_submatrix(mat, rs, cs));
            }
        }
        out
    }

    /// Determinant of a submatrix by dynamic programming over column subsets.
    pub fn det_submatrix(&self, mat: &[Vec<Poly<F>>], rs: &[usize], cs: &[usize]) -> Poly<F> {
        let k = rs.len();
        let mut table: HashMap<u32, Poly<F>> = HashMap::new();
        table.insert(0, self.constant(self.field.one()));
        for &r in rs {
            let mut next: HashMap<u32, Poly<F>> = HashMap::new();
            for (mask, acc) in &table {
                let mut sign_flips = 0usize;
                for (ci, &c) in cs.iter().enumerate() {
                    let bit = 1u32 << ci;
                    if mask & bit != 0 {
                        sign_flips += 1;
                        continue;
                    }
                    let entry = &mat[r][c];
                    if entry.terms.is_empty() {
                        continue;
                    }
                    let mut t = self.mul(acc, entry);
                    if sign_flips % 2 == 1 {
                        t = self.neg(&t);
                    }
                    let e = next.entry(mask | bit).or_insert_with(|| self.zero());
                    *e = self.add(e, &t);
                }
            }
            table = next;
        }
        table
            .remove(&((1u32 << k) - 1))
            .unwrap_or_else(|| self.zero())
    }

    pub fn fmt_poly(&self, p: &Poly<F>) -> String {
        if p.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (idx, (m, c)) in p.terms.iter().enumerate() {
            if idx > 0 {
                s.push_str(" + ");
            }
            let cs = self.field.fmt_elem(c);
            let mut mon = String::new();
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !mon.is_empty() {
                    mon.push('*');
                }
                if e == 1 {
                    let _ = write!(mon, "{}", self.var_names[v]);
                } else {
                    let _ = write!(mon, "{}^{}", self.var_names[v], e);
                }
            }
            if mon.is_empty() {
                s.push_str(&cs);
            } else if cs == "1" {
                s.push_str(&mon);
            } else {
                let _ = write!(s, "{}*{}", cs, mon);
            }
        }
        s
    }

    /// Parse "3*x^2*y + 2*z - 5" style input against the ring's names.
    pub fn parse(&self, input: &str) -> Result<Poly<F>, String> {
        let mut terms: Vec<(Mono, F::Elem)> = Vec::new();
        let cleaned = input.replace('-', "+-").replace(' ', "");
        for raw in cleaned.split('+') {
            if raw.is_empty() {
                continue;
            }
            let mut coeff: i64 = 1;
            let mut body = raw;
            if let Some(stripped) = body.strip_prefix('-') {
                coeff = -1;
                body = stripped;
            }
            let mut expv = vec![0u16; self.nvars];
            for factor in body.split('*') {
                if factor.is_empty() {
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse::<u16>().map_err(|e| e.to_string())?),
                    None => (factor, 1),
                };
                if let Some(vi) = self.var_names.iter().position(|v| v == name) {
                    expv[vi] += exp;
                } else {
                    let n: i64 = name
                        .parse()
                        .map_err(|_| format!("bad factor {:?}", factor))?;
                    coeff *= n.pow(exp as u32);
                }
            }
            terms.push((Mono(expv), self.field.from_i64(coeff)));
        }
        Ok(self.from_terms(terms))
    }

    /// Relabel variables: new index k holds the old variable perm[k].
    pub fn permute_vars(&self, p: &Poly<F>, perm: &[usize]) -> Poly<F> {
        let terms = p
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u16; self.nvars];
                for (new_i, &old_i) in perm.iter().enumerate() {
                    e[new_i] = m.0[old_i];
                }
                (Mono(e), c.clone())
            })
            .collect();
        self.from_terms(terms)
    }

    /// Saturate a homogeneous ideal by variable v: with v rotated last,
    /// grevlex bases read off the colon by dividing out v; iterate to
    /// stability.
    pub fn saturate_by_var(&self, gens: &[Poly<F>], v: usize) -> Vec<Poly<F>> {
        let mut perm: Vec<usize> = (0..self.nvars).filter(|&k| k != v).collect();
        perm.push(v);
        let mut inv = vec![0usize; self.nvars];
        for (new_i, &old_i) in perm.iter().enumerate() {
            inv[old_i] = new_i;
        }
        let mut ring = self.clone();
        ring.order = MonomialOrder::GrevLex;
        let mut work: Vec<Poly<F>> = gens.iter().map(|g| ring.permute_vars(g, &perm)).collect();
        let last = self.nvars - 1;
        loop {
            let gb = ring.buchberger(&work);
            let mut divided = Vec::with_capacity(gb.len());
            let mut changed = false;
            for g in &gb {
                let min_pow = g.terms.iter().map(|(m, _)| m.0[last]).min().unwrap_or(0);
                if min_pow > 0 {
                    changed = true;
                    let terms = g
                        .terms
                        .iter()
                        .map(|(m, c)| {
                            let mut e = m.0.clone();
                            e[last] -= min_pow;
                            (Mono(e), c.clone())
                        })
                        .collect();
                    divided.push(ring.from_terms(terms));
                } else {
                    divided.push(g.clone());
                }
            }
            if !changed {
                return divided
                    .into_iter()
                    .map(|g| self.permute_vars(&g, &inv))
                    .collect();
            }
            work = divided;
        }
    }

    /// Intersection of two ideals by the t-trick: t*I + (1-t)*J with t
    /// eliminated by a block order.
    pub fn intersect(&self, a: &[Poly<F>], b: &[Poly<F>]) -> Vec<Poly<F>> {
        let mut names: Vec<&str> = vec!["t#"];
        let owned: Vec<String> = self.var_names.clone();
        names.extend(owned.iter().map(|s| s.as_str()));
        let ring = PolyRing::new(self.field.clone(), &names, MonomialOrder::Elim(1));
        let lift = |p: &Poly<F>| -> Poly<F> {
            ring.from_terms(
                p.terms
                    .iter()
                    .map(|(m, c)| {
                        let mut e = vec![0u16];
                        e.extend(&m.0);
                        (Mono(e), c.clone())
                    })
                    .collect(),
            )
        };
        let t = ring.var(0);
        let one_minus_t = ring.sub(&ring.constant(ring.field.one()), &t);
        let mut gens = Vec::new();
        for p in a {
            gens.push(ring.mul(&t, &lift(p)));
        }
        for p in b {
            gens.push(ring.mul(&one_minus_t, &lift(p)));
        }
        let gb = ring.buchberger(&gens);
        gb.iter()
            .filter(|g| g.terms.iter().all(|(m, _)| m.0[0] == 0))
            .map(|g| {
                self.from_terms(
                    g.terms
                        .iter()
                        .map(|(m, c)| (Mono(m.0[1..].to_vec()), c.clone()))
                        .collect(),
                )
            })
            .collect()
    }

    /// Saturation by the irrelevant ideal: the intersection of the
    /// per-variable colon saturations, iterated until stable.
    pub fn saturate(&self, gens: &[Poly<F>]) -> Vec<Poly<F>> {
        let mut work = self.buchberger(gens);
        loop {
            let sats: Vec<Vec<Poly<F>>> = (0..self.nvars)
                .map(|v| self.buchberger(&self.saturate_by_var(&work, v)))
                .collect();
            if sats.iter().all(|s| *s == work) {
                return work;
            }
            let mut acc = sats[0].clone();
            for s in &sats[1..] {
                acc = self.intersect(&acc, s);
            }
            let after = self.buchberger(&acc);
            if after == work {
                return after;
            }
            work = after;
        }
    }

    /// (projective dimension, degree) of the saturation; None for the unit
    /// ideal (empty scheme sentinel).
    pub fn proj_dim_degree(&self, gens: &[Poly<F>]) -> Option<(usize, i64)> {
        for g in gens {
            assert!(
                self.is_homogeneous(g),
                "projective certificates need homogeneous input"
            );
        }
        let sat = self.saturate(gens);
        let gb = self.buchberger(&sat);
        if gb
            .iter()
            .any(|g| self.lead(g).map(|(m, _)| m.is_one()).unwrap_or(false))
        {
            return None;
        }
        let leads: Vec<Mono> = gb
            .iter()
            .filter_map(|g| self.lead(g).map(|(m, _)| m.clone()))
            .collect();
        let num = hilbert_numerator(&leads, self.nvars);
        Some(series_dim_degree(&num, self.nvars))
    }
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Field, Fq};

    fn ring2() -> PolyRing<Fq> {
        let f = Fq::specialize_params(13, 0).unwrap();
        PolyRing::new(f, &["x", "y"], MonomialOrder::GrevLex)
    }

    #[test]
    fn single_monomial_is_its_own_basis() {
        let r = ring2();
        let x = r.var(0);
        let gb = r.buchberger(&[x.clone()]);
        assert_eq!(gb.len(), 1);
        assert_eq!(gb[0], x);
    }

    #[test]
    fn membership_by_hand_reduction() {
        // (xy - 1, y^2 - 1) contains x^2 - 1:
        // y*(x*(xy-1)) - x^2*(y^2-1) = x^2 - xy, then add xy - 1
        let r = ring2();
        let f1 = r.parse("x*y - 1").unwrap();
        let f2 = r.parse("y^2 - 1").unwrap();
        let gb = r.buchberger(&[f1.clone(), f2.clone()]);
        let target = r.parse("x^2 - 1").unwrap();
        assert!(r.reduces_to_zero(&target, &gb));
        assert!(!r.reduces_to_zero(&r.parse("x - 1").unwrap(), &gb));
        assert!(r.reduces_to_zero(&f1, &gb));
        assert!(r.reduces_to_zero(&f2, &gb));
        for i in 0..gb.len() {
            for j in 0..i {
                assert!(r.reduces_to_zero(&r.s_poly(&gb[i], &gb[j]), &gb));
            }
        }
    }

    #[test]
    fn normal_form_is_idempotent_and_linear() {
        use rand::Rng;
        use rand_chacha::rand_core::SeedableRng;
        let r = ring2();
        let f = r.field.clone();
        let gb = r.buchberger(&[r.parse("x^2 - y").unwrap(), r.parse("y^3 - x").unwrap()]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let randpoly = |rng: &mut rand_chacha::ChaCha8Rng| {
                let mut terms = Vec::new();
                for _ in 0..rng.gen_range(1..5) {
                    let m = Mono(vec![rng.gen_range(0..4), rng.gen_range(0..4)]);
                    terms.push((m, f.sample(rng)));
                }
                r.from_terms(terms)
            };
            let a = randpoly(&mut rng);
            let b = randpoly(&mut rng);
            let na = r.normal_form(&a, &gb);
            assert_eq!(r.normal_form(&na, &gb), na);
            let nsum = r.normal_form(&r.add(&a, &b), &gb);
            assert_eq!(nsum, r.add(&na, &r.normal_form(&b, &gb)));
        }
    }

    #[test]
    fn minor_counts() {
        let f = Fq::specialize_params(7, 0).unwrap();
        let r = PolyRing::new(f.clone(), &["w0", "w1", "w2", "w3"], MonomialOrder::GrevLex);
        let mat: Vec<Vec<Poly<Fq>>> = (0..6)
            .map(|i| (0..4).map(|j| r.var((i + j) % 4)).collect())
            .collect();
        assert_eq!(r.minors(&mat, 4).len(), 15);
        let mat2: Vec<Vec<Poly<Fq>>> = (0..8)
            .map(|i| {
                (0..10)
                    .map(|j| r.constant(f.from_i64((i * j + i + 1) as i64)))
                    .collect()
            })
            .collect();
        assert_eq!(r.minors(&mat2, 8).len(), 45);
        let mat3: Vec<Vec<Poly<Fq>>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| r.constant(f.from_i64((i + j) as i64)))
                    .collect()
            })
            .collect();
        for m in r.minors(&mat3, 3) {
            assert!(m.terms.is_empty(), "rank-2 matrix has zero 3x3 minors");
        }
    }

    #[test]
    fn twisted_cubic_dim_degree() {
        let f = Fq::specialize_params(13, 0).unwrap();
        let r = PolyRing::new(f, &["x0", "x1", "x2", "x3"], MonomialOrder::GrevLex);
        let mat = vec![
            vec![r.var(0), r.var(1), r.var(2)],
            vec![r.var(1), r.var(2), r.var(3)],
        ];
        let minors = r.minors(&mat, 2);
        assert_eq!(minors.len(), 3);
        assert_eq!(r.proj_dim_degree(&minors).unwrap(), (1, 3));
        assert!(r.proj_dim_degree(&[r.constant(r.field.one())]).is_none());
        let pt = vec![r.var(0), r.var(1), r.var(2)];
        assert_eq!(r.proj_dim_degree(&pt).unwrap(), (0, 1));
        assert_eq!(r.proj_dim_degree(&[r.var(3)]).unwrap(), (2, 1));
        let quad = r.parse("x0*x3 - x1*x2").unwrap();
        assert_eq!(r.proj_dim_degree(&[quad]).unwrap(), (2, 2));
    }

    #[test]
    fn elimination_order_blocks() {
        let f = Fq::specialize_params(7, 0).unwrap();
        let r = PolyRing::new(f, &["t", "x", "y"], MonomialOrder::Elim(1));
        // t dominates: lead of t + x^5 is t
        let p = r.parse("t + x^5").unwrap();
        assert_eq!(r.lead(&p).unwrap().0, &Mono(vec![1, 0, 0]));
    }
}
