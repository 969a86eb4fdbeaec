//! Sparse polynomials in the two free parameters a, b over Q(i),
//! with exact division and gcd (primitive pseudo-remainder sequences).

use super::gauss::GaussQ;
use num::{BigRational, One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exponent pair (deg_a, deg_b).
pub type Exp2 = (u32, u32);

/// Sparse polynomial in a, b over Q(i). Invariant: no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly2 {
    pub terms: BTreeMap<Exp2, GaussQ>,
}

fn grevlex_less(x: &Exp2, y: &Exp2) -> bool {
    let dx = x.0 + x.1;
    let dy = y.0 + y.1;
    if dx != dy {
        return dx < dy;
    }
    // grevlex tie-break: larger last exponent is smaller
    x.1 > y.1
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2 {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: GaussQ) -> Self {
        let mut t = BTreeMap::new();
        if !c.is_zero() {
            t.insert((0, 0), c);
        }
        Poly2 { terms: t }
    }

    pub fn one() -> Self {
        Self::constant(GaussQ::one())
    }

    pub fn var_a() -> Self {
        Self::monomial((1, 0), GaussQ::one())
    }

    pub fn var_b() -> Self {
        Self::monomial((0, 1), GaussQ::one())
    }

    pub fn monomial(e: Exp2, c: GaussQ) -> Self {
        let mut t = BTreeMap::new();
        if !c.is_zero() {
            t.insert(e, c);
        }
        Poly2 { terms: t }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|e| *e == (0, 0))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.0 + e.1).max().unwrap_or(0)
    }

    pub fn degree_in_b(&self) -> u32 {
        self.terms.keys().map(|e| e.1).max().unwrap_or(0)
    }

    /// Leading exponent in grevlex.
    pub fn lead_exp(&self) -> Option<Exp2> {
        self.terms
            .keys()
            .fold(None, |acc: Option<Exp2>, e| match acc {
                None => Some(*e),
                Some(m) => Some(if grevlex_less(&m, e) { *e } else { m }),
            })
    }

    pub fn lead_coeff(&self) -> GaussQ {
        match self.lead_exp() {
            Some(e) => self.terms[&e].clone(),
            None => GaussQ::zero(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut t = self.terms.clone();
        for (e, c) in &o.terms {
            let entry = t.entry(*e).or_insert_with(GaussQ::zero);
            *entry = entry.add(c);
            if entry.is_zero() {
                t.remove(e);
            }
        }
        Poly2 { terms: t }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Poly2 {
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut t: BTreeMap<Exp2, GaussQ> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = (e1.0 + e2.0, e1.1 + e2.1);
                let c = c1.mul(c2);
                let entry = t.entry(e).or_insert_with(GaussQ::zero);
                *entry = entry.add(&c);
            }
        }
        t.retain(|_, c| !c.is_zero());
        Poly2 { terms: t }
    }

    pub fn scale(&self, c: &GaussQ) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(e, k)| (*e, k.mul(c))).collect(),
        }
    }

    /// Exact division; returns None if `o` does not divide `self`.
    pub fn div_exact(&self, o: &Self) -> Option<Self> {
        assert!(!o.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = Poly2::zero();
        let ole = o.lead_exp().unwrap();
        let olc = o.lead_coeff();
        while !rem.is_zero() {
            let rle = rem.lead_exp().unwrap();
            if rle.0 < ole.0 || rle.1 < ole.1 {
                return None;
            }
            let e = (rle.0 - ole.0, rle.1 - ole.1);
            let c = rem.terms[&rle].div(&olc);
            let m = Poly2::monomial(e, c);
            quot = quot.add(&m);
            rem = rem.sub(&m.mul(o));
        }
        Some(quot)
    }

    /// Coefficients as polynomials in a, indexed by the power of b.
    fn coeffs_in_b(&self) -> Vec<Poly2> {
        let d = self.degree_in_b() as usize;
        let mut out = vec![Poly2::zero(); d + 1];
        for (e, c) in &self.terms {
            out[e.1 as usize] = out[e.1 as usize].add(&Poly2::monomial((e.0, 0), c.clone()));
        }
        out
    }

    fn from_coeffs_in_b(cs: Vec<Poly2>) -> Poly2 {
        let mut out = Poly2::zero();
        for (k, c) in cs.into_iter().enumerate() {
            out = out.add(&c.mul(&Poly2::monomial((0, k as u32), GaussQ::one())));
        }
        out
    }

    /// Univariate gcd in a alone (both inputs must not involve b), monic output.
    fn gcd_univar_a(f: &Poly2, g: &Poly2) -> Poly2 {
        assert!(f.degree_in_b() == 0 && g.degree_in_b() == 0);
        let mut r0 = f.clone();
        let mut r1 = g.clone();
        while !r1.is_zero() {
            // monic normalization each step controls growth
            let lc = r1.lead_coeff();
            r1 = r1.scale(&lc.inv());
            let r = Self::rem_univar_a(&r0, &r1);
            r0 = r1;
            r1 = r;
        }
        if r0.is_zero() {
            return r0;
        }
        let lc = r0.lead_coeff();
        r0.scale(&lc.inv())
    }

    fn rem_univar_a(f: &Poly2, g: &Poly2) -> Poly2 {
        let mut rem = f.clone();
        let gd = g.lead_exp().unwrap().0;
        let glc = g.lead_coeff();
        loop {
            if rem.is_zero() {
                return rem;
            }
            let rd = rem.lead_exp().unwrap().0;
            if rd < gd {
                return rem;
            }
            let c = rem.lead_coeff().div(&glc);
            let m = Poly2::monomial((rd - gd, 0), c);
            rem = rem.sub(&m.mul(g));
        }
    }

    /// Content with respect to b: gcd of the a-coefficients.
    fn content_b(&self) -> Poly2 {
        let cs = self.coeffs_in_b();
        let mut g = Poly2::zero();
        for c in cs {
            if c.is_zero() {
                continue;
            }
            g = if g.is_zero() {
                let lc = c.lead_coeff();
                c.scale(&lc.inv())
            } else {
                Self::gcd_univar_a(&g, &c)
            };
            if g.is_constant() {
                return Poly2::one();
            }
        }
        if g.is_zero() {
            Poly2::one()
        } else {
            g
        }
    }

    /// Pseudo-remainder of f by g as polynomials in b.
    fn prem_b(f: &Poly2, g: &Poly2) -> Poly2 {
        let mut fc = f.coeffs_in_b();
        let gc = g.coeffs_in_b();
        let dg = gc.len() - 1;
        let glc = gc[dg].clone();
        loop {
            while fc.last().map(|p| p.is_zero()).unwrap_or(false) {
                fc.pop();
            }
            if fc.is_empty() || fc.len() - 1 < dg {
                return Poly2::from_coeffs_in_b(fc);
            }
            let df = fc.len() - 1;
            let flc = fc[df].clone();
            // fc = glc*fc - flc*b^(df-dg)*gc
            for c in fc.iter_mut() {
                *c = c.mul(&glc);
            }
            for (k, gk) in gc.iter().enumerate() {
                let idx = df - dg + k;
                fc[idx] = fc[idx].sub(&flc.mul(gk));
            }
        }
    }

    /// GCD over Q(i)[a,b], normalized with monic leading coefficient (grevlex).
    pub fn gcd(f: &Poly2, g: &Poly2) -> Poly2 {
        if f.is_zero() {
            if g.is_zero() {
                return Poly2::zero();
            }
            return g.scale(&g.lead_coeff().inv());
        }
        if g.is_zero() {
            return f.scale(&f.lead_coeff().inv());
        }
        if f.degree_in_b() == 0 && g.degree_in_b() == 0 {
            return Self::gcd_univar_a(f, g);
        }
        if f.degree_in_b() == 0 || g.degree_in_b() == 0 {
            // gcd divides the b-content of the other argument
            let (c, other) = if f.degree_in_b() == 0 {
                (f, g)
            } else {
                (g, f)
            };
            return Self::gcd_univar_a(&other.content_b(), &c.scale(&c.lead_coeff().inv()));
        }
        let cf = f.content_b();
        let cg = g.content_b();
        let cont = Self::gcd_univar_a(&cf, &cg);
        let mut p0 = f.div_exact(&cf).unwrap();
        let mut p1 = g.div_exact(&cg).unwrap();
        if p0.degree_in_b() < p1.degree_in_b() {
            std::mem::swap(&mut p0, &mut p1);
        }
        loop {
            let r = Self::prem_b(&p0, &p1);
            if r.is_zero() {
                break;
            }
            let rc = r.content_b();
            let rp = r.div_exact(&rc).unwrap();
            p0 = p1;
            p1 = rp;
            if p1.degree_in_b() == 0 {
                // primitive in b and b-free: gcd of primitive parts is a constant
                p1 = Poly2::one();
                break;
            }
        }
        let g = cont.mul(&p1);
        let lc = g.lead_coeff();
        g.scale(&lc.inv())
    }

    /// Substitute field values for a and b.
    pub fn eval<T: Clone>(
        &self,
        a: &T,
        b: &T,
        zero: T,
        from_gauss: &dyn Fn(&GaussQ) -> T,
        addf: &dyn Fn(&T, &T) -> T,
        mulf: &dyn Fn(&T, &T) -> T,
    ) -> T {
        let mut acc = zero;
        for (e, c) in &self.terms {
            let mut t = from_gauss(c);
            for _ in 0..e.0 {
                t = mulf(&t, a);
            }
            for _ in 0..e.1 {
                t = mulf(&t, b);
            }
            acc = addf(&acc, &t);
        }
        acc
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // render with integer coefficients: clear rational denominators
        let mut lcm = num::BigInt::one();
        for c in self.terms.values() {
            let d = c.denom_lcm();
            let g = num::integer::gcd(lcm.clone(), d.clone());
            lcm = (&lcm / &g) * &d;
        }
        let scaled: Vec<(Exp2, GaussQ)> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let m = GaussQ::new(
                    BigRational::from_integer(lcm.clone()),
                    BigRational::zero(),
                );
                (*e, c.mul(&m))
            })
            .collect();
        let mut first = true;
        let mut body = String::new();
        for (e, c) in scaled.iter().rev() {
            let cs = format!("{}", c);
            if !first {
                body.push_str(" + ");
            }
            first = false;
            let mut mon = String::new();
            if e.0 > 0 {
                mon.push_str(&format!("a^{}", e.0));
            }
            if e.1 > 0 {
                if !mon.is_empty() {
                    mon.push('*');
                }
                mon.push_str(&format!("b^{}", e.1));
            }
            if mon.is_empty() {
                body.push_str(&cs);
            } else if cs == "1" {
                body.push_str(&mon);
            } else {
                body.push_str(&format!("{}*{}", cs, mon));
            }
        }
        if lcm.is_one() {
            write!(f, "{}", body)
        } else {
            write!(f, "({})/{}", body, lcm)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Poly2 {
        Poly2::var_a()
    }
    fn b() -> Poly2 {
        Poly2::var_b()
    }

    #[test]
    fn gcd_of_products() {
        // (a+b)^2 * (a-b) and (a+b)*(a^2+b)
        let s = a().add(&b());
        let d = a().sub(&b());
        let t = a().mul(&a()).add(&b());
        let f = s.mul(&s).mul(&d);
        let g = s.mul(&t);
        let h = Poly2::gcd(&f, &g);
        // gcd should be a+b up to normalization
        assert!(h.div_exact(&s).map(|q| q.is_constant()).unwrap_or(false));
    }

    #[test]
    fn exact_division() {
        let f = a().mul(&a()).sub(&b().mul(&b()));
        let g = a().add(&b());
        let q = f.div_exact(&g).unwrap();
        assert_eq!(q, a().sub(&b()));
        assert!(f.div_exact(&a().add(&Poly2::one())).is_none());
    }
}
