//! Hilbert series of monomial quotients, via pivot splitting on a frequent
//! variable, and the dimension/degree readout.

use super::Mono;

/// Remove monomials divisible by another one.
fn minimalize(gens: &mut Vec<Mono>) {
    gens.sort_by_key(|m| m.total_degree());
    let mut out: Vec<Mono> = Vec::with_capacity(gens.len());
    'next: for g in gens.drain(..) {
        for kept in &out {
            if kept.divides(&g) {
                continue 'next;
            }
        }
        out.push(g);
    }
    *gens = out;
}

fn poly_sub_shift(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (k, &c) in b.iter().enumerate() {
        a[k + shift] -= c;
    }
}

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of k[x]/(gens),
/// for a monomial ideal.
pub fn hilbert_numerator(gens: &[Mono], nvars: usize) -> Vec<i64> {
    let mut g = gens.to_vec();
    minimalize(&mut g);
    numerator_rec(g, nvars)
}

fn numerator_rec(mut gens: Vec<Mono>, nvars: usize) -> Vec<i64> {
    minimalize(&mut gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    // all generators pairwise coprime: product formula
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens.iter().skip(i + 1).all(|b| a.coprime(b)));
    if coprime {
        let mut num = vec![1i64];
        for m in &gens {
            // num *= (1 - t^deg)
            let d = m.total_degree() as usize;
            let mut next = num.clone();
            poly_sub_shift(&mut next, &num, d);
            num = next;
        }
        return num;
    }
    // pivot on the most frequent variable
    let mut counts = vec![0usize; nvars];
    for m in &gens {
        for (v, &e) in m.0.iter().enumerate() {
            if e > 0 {
                counts[v] += 1;
            }
        }
    }
    let v = counts
        .iter()
        .enumerate()
        .max_by_key(|(_, &c)| c)
        .map(|(v, _)| v)
        .unwrap();
    let e = gens
        .iter()
        .filter(|m| m.0[v] > 0)
        .map(|m| m.0[v])
        .min()
        .unwrap();
    let mut pivot = Mono(vec![0; nvars]);
    pivot.0[v] = e;
    // from 0 -> (R/(I:p))(-e) -> R/I -> R/(I+(p)) -> 0:
    // N(I) = N(I + (pivot)) + t^e * N(I : pivot)
    let mut with_pivot = gens.clone();
    with_pivot.push(pivot.clone());
    let colon: Vec<Mono> = gens.iter().map(|m| m.div(&m.gcd(&pivot))).collect();
    let a = numerator_rec(with_pivot, nvars);
    let b = numerator_rec(colon, nvars);
    let mut num = a;
    if num.len() < b.len() + e as usize {
        num.resize(b.len() + e as usize, 0);
    }
    for (k, &c) in b.iter().enumerate() {
        num[k + e as usize] += c;
    }
    num
}

/// Evaluate (projective dimension, degree) from the numerator: cancel (1-t)
/// until the value at 1 is nonzero.
pub fn series_dim_degree(num: &[i64], nvars: usize) -> (usize, i64) {
    let mut n: Vec<i64> = num.to_vec();
    let mut cancels = 0usize;
    loop {
        let at_one: i64 = n.iter().sum();
        if at_one != 0 {
            let d = nvars - cancels;
            assert!(d >= 1, "dimension readout underflow");
            return (d - 1, at_one);
        }
        // n /= (1 - t): synthetic division, q_k = sum_{j<=k} n_j
        let mut q = vec![0i64; n.len().saturating_sub(1)];
        let mut acc = 0i64;
        for k in 0..q.len() {
            acc += n[k];
            q[k] = acc;
        }
        n = q;
        cancels += 1;
        assert!(cancels <= nvars, "numerator vanished identically");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_ring_numerator_is_one() {
        assert_eq!(hilbert_numerator(&[], 3), vec![1]);
    }

    #[test]
    fn hypersurface() {
        // k[x,y,z]/(x^2): numerator 1 - t^2, dim 2 affine, proj (1, 2)
        let m = Mono(vec![2, 0, 0]);
        let num = hilbert_numerator(&[m], 3);
        assert_eq!(num, vec![1, 0, -1]);
        assert_eq!(series_dim_degree(&num, 3), (1, 2));
    }

    #[test]
    fn point_in_p2() {
        // k[x,y,z]/(x, y): proj (0, 1)
        let num = hilbert_numerator(&[Mono(vec![1, 0, 0]), Mono(vec![0, 1, 0])], 3);
        assert_eq!(series_dim_degree(&num, 3), (0, 1));
    }

    #[test]
    fn overlapping_generators() {
        // k[x,y]/(x^2, xy): hilbert function 1, 2, 1, 1, 1, ... -> dim 1, deg 1
        let num = hilbert_numerator(&[Mono(vec![2, 0]), Mono(vec![1, 1])], 2);
        assert_eq!(series_dim_degree(&num, 2), (0, 1));
        // and the numerator evaluates correctly: HF at degree d is
        // sum_k num[k] * C(d - k + 1, 1)
        let hf = |d: i64| -> i64 {
            num.iter()
                .enumerate()
                .map(|(k, &c)| {
                    let m = d - k as i64 + 1;
                    if m >= 1 {
                        c * m
                    } else {
                        0
                    }
                })
                .sum()
        };
        assert_eq!(hf(0), 1);
        assert_eq!(hf(1), 2);
        assert_eq!(hf(2), 1);
        assert_eq!(hf(5), 1);
    }
}
