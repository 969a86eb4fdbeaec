//! Exhaustive point-scheme enumeration over finite specializations.

use super::{expected_twenty_points, Linearization, PointFamily};
use crate::egeom::{gamma_translate, projective_points, ProjPoint};
use crate::qalg::Presentation;
use crate::scalar::{Field, FiniteField, ParamField};

pub fn fmt_pt<F: Field>(f: &F, p: &ProjPoint<F>) -> String {
    let parts: Vec<String> = p.0.iter().map(|x| f.fmt_elem(x)).collect();
    format!("({})", parts.join(", "))
}

#[derive(Clone, Debug)]
pub struct SchemePoint<F: Field> {
    pub point: ProjPoint<F>,
    /// rank of the first-slot linearization at the point (3 on good points).
    pub rank: usize,
    /// unique solution q of N(p) q = 0.
    pub theta: ProjPoint<F>,
    /// unique solution q of relations(q (x) p) = 0, the left-module successor.
    pub succ: ProjPoint<F>,
}

#[derive(Clone, Debug)]
pub struct PointScheme<F: Field> {
    pub points: Vec<SchemePoint<F>>,
    /// points where the linearization dropped below rank 3 (degenerate).
    pub low_rank: Vec<ProjPoint<F>>,
}

/// Scan P^3(F_q) for rank drops of the linearization.
pub fn point_scheme<F: ParamField + FiniteField>(pres: &Presentation<F>) -> PointScheme<F> {
    let f = &pres.field;
    let lin = Linearization::new(pres);
    let mut points = Vec::new();
    let mut low_rank = Vec::new();
    for p in projective_points(f) {
        let n = lin.eval_first(&p.0);
        let ker = n.kernel(f);
        match ker.len() {
            0 => {}
            1 => {
                let theta = ProjPoint::from_vec(f, ker[0].clone());
                let c = lin.eval_second(&p.0);
                let succ_ker = c.kernel(f);
                assert_eq!(succ_ker.len(), 1, "successor not unique at a rank-3 point");
                let succ = ProjPoint::from_vec(f, succ_ker[0].clone());
                points.push(SchemePoint {
                    point: p,
                    rank: 3,
                    theta,
                    succ,
                });
            }
            _ => low_rank.push(p),
        }
    }
    PointScheme { points, low_rank }
}

/// Match the enumerated twist scheme against the expected twenty points and
/// return the family of each enumerated point, in enumeration order.
pub fn classify_twist_points<F: ParamField + FiniteField>(
    f: &F,
    scheme: &PointScheme<F>,
) -> Result<Vec<PointFamily>, String> {
    if !scheme.low_rank.is_empty() {
        return Err(format!(
            "{} points with successor rank drop",
            scheme.low_rank.len()
        ));
    }
    if scheme.points.len() != 20 {
        return Err(format!("{} scheme points, expected 20", scheme.points.len()));
    }
    let table = expected_twenty_points(f);
    let fams = [
        PointFamily::Special,
        PointFamily::Ordinary0,
        PointFamily::Ordinary1,
        PointFamily::Ordinary2,
        PointFamily::Ordinary3,
    ];
    let mut out = Vec::with_capacity(20);
    let mut used = [[false; 4]; 5];
    for sp in &scheme.points {
        let mut hit = None;
        'search: for (g, group) in table.iter().enumerate() {
            for (k, q) in group.iter().enumerate() {
                if sp.point.eq(f, q) {
                    hit = Some((g, k));
                    break 'search;
                }
            }
        }
        let Some((g, k)) = hit else {
            return Err(format!("scheme point not in the expected table: {}", fmt_pt(f, &sp.point)));
        };
        if used[g][k] {
            return Err("expected point matched twice".into());
        }
        used[g][k] = true;
        out.push(fams[g]);
    }
    Ok(out)
}

/// Verify the involution on the twist scheme: fixed on special and family-0
/// points, the matching sign flip on family j.
pub fn verify_twist_theta<F: ParamField + FiniteField>(
    f: &F,
    scheme: &PointScheme<F>,
    families: &[PointFamily],
) -> Result<(), String> {
    for (sp, fam) in scheme.points.iter().zip(families) {
        let expected = match fam.ordinary_index() {
            None | Some(0) => sp.point.clone(),
            Some(j) => gamma_translate(f, j, &sp.point),
        };
        if !sp.theta.eq(f, &expected) {
            return Err(format!("theta mismatch at {} ({:?})", fmt_pt(f, &sp.point), fam));
        }
        if !sp.succ.eq(f, &expected) {
            return Err(format!("successor mismatch at {} ({:?})", fmt_pt(f, &sp.point), fam));
        }
    }
    Ok(())
}

/// For the Sklyanin presentation the scheme is the curve plus the four
/// vertices; returns the constant successor offset on the curve, as
/// (offset point, matches tau or its negative).
pub fn verify_sklyanin_scheme<F: ParamField + FiniteField>(
    curve: &crate::egeom::ECurve<F>,
    scheme: &PointScheme<F>,
) -> Result<(ProjPoint<F>, String), String> {
    let f = &curve.field;
    if !scheme.low_rank.is_empty() {
        return Err("rank drop below 3 in the Sklyanin scheme".into());
    }
    let expected_count = curve.points.len() + 4;
    if scheme.points.len() != expected_count {
        return Err(format!(
            "scheme has {} points, expected |E| + 4 = {}",
            scheme.points.len(),
            expected_count
        ));
    }
    for sp in &scheme.points {
        let on_e = crate::egeom::on_curve(f, &sp.point);
        let is_vertex = curve.vertices.iter().any(|v| v.eq(f, &sp.point));
        if !(on_e || is_vertex) {
            return Err(format!("unexpected scheme point {}", fmt_pt(f, &sp.point)));
        }
        if is_vertex && !sp.succ.eq(f, &sp.point) {
            return Err("vertex successor is not fixed".into());
        }
    }
    // the successor offset on curve points is constant and 2-divides to tau'
    let mut offset: Option<ProjPoint<F>> = None;
    for sp in &scheme.points {
        if !crate::egeom::on_curve(f, &sp.point) {
            continue;
        }
        let d = curve.sub(&sp.succ, &sp.point);
        match &offset {
            None => offset = Some(d),
            Some(prev) => {
                if !prev.eq(f, &d) {
                    return Err("successor offset is not constant on the curve".into());
                }
            }
        }
    }
    let off = offset.ok_or("no curve points in the scheme")?;
    let tau = &curve.tau;
    let sign = if off.eq(f, tau) {
        "successor offset = tau".to_string()
    } else if off.eq(f, &crate::egeom::negate(f, tau)) {
        "successor offset = -tau".to_string()
    } else {
        return Err("successor offset is not +-tau".into());
    };
    Ok((off, sign))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::egeom::ECurve;
    use crate::scalar::Fq;
    use rand_chacha::rand_core::SeedableRng;

    #[test]
    fn twist_has_exactly_twenty_points() {
        let f = Fq::specialize_params(7, 1).unwrap();
        let a = Presentation::twist(f.clone());
        let scheme = point_scheme(&a);
        assert!(scheme.low_rank.is_empty());
        assert_eq!(scheme.points.len(), 20);
        let fams = classify_twist_points(&f, &scheme).unwrap();
        verify_twist_theta(&f, &scheme, &fams).unwrap();
        for fam in [
            PointFamily::Special,
            PointFamily::Ordinary0,
            PointFamily::Ordinary1,
            PointFamily::Ordinary2,
            PointFamily::Ordinary3,
        ] {
            assert_eq!(fams.iter().filter(|&&x| x == fam).count(), 4);
        }
    }

    #[test]
    fn sklyanin_scheme_is_curve_plus_vertices() {
        let f = Fq::specialize_params(7, 1).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        let curve = ECurve::pin(&f, &mut rng).unwrap();
        let s = Presentation::sklyanin(f.clone());
        let scheme = point_scheme(&s);
        let (_off, sign) = verify_sklyanin_scheme(&curve, &scheme).unwrap();
        assert!(sign.contains("tau"));
    }
}
