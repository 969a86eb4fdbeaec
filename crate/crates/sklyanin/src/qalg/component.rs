//! Graded components of a 4-generator quadratic algebra, built degree by
//! degree as quotients of V (x) comp_{n-1} by the projected relation block.

use crate::linalg::Matrix;
use crate::scalar::Field;

/// Per-degree component data: dimensions, projections onto the quotient,
/// sections, and right-multiplication maps.
pub struct ComponentData<F: Field> {
    pub dims: Vec<usize>,
    /// pi[n]: (V (x) comp_{n-1}) -> comp_n, a dims[n] x 4*dims[n-1] matrix.
    /// pi[0] is unused (identity on the 1-dimensional comp_0).
    pub pi: Vec<Matrix<F>>,
    /// sigma[n]: comp_n -> V (x) comp_{n-1}, a section of pi[n].
    pub sigma: Vec<Matrix<F>>,
    /// right[n][k]: comp_n -> comp_{n+1}, right multiplication by generator k.
    pub right: Vec<[Matrix<F>; 4]>,
    relations: Matrix<F>,
}

impl<F: Field> ComponentData<F> {
    pub fn new(f: &F, relations: &Matrix<F>) -> Self {
        let mut c = ComponentData {
            dims: vec![1],
            pi: vec![Matrix::identity(f, 1)],
            sigma: vec![Matrix::identity(f, 1)],
            right: Vec::new(),
            relations: relations.clone(),
        };
        // degree 1: V itself
        c.dims.push(4);
        c.pi.push(Matrix::identity(f, 4));
        c.sigma.push(Matrix::identity(f, 4));
        // right multiplication comp_0 -> comp_1 by generator k is e_k
        let mut r0: [Matrix<F>; 4] = std::array::from_fn(|_| Matrix::zero(f, 4, 1));
        for (k, m) in r0.iter_mut().enumerate() {
            m[(k, 0)] = f.one();
        }
        c.right.push(r0);
        c
    }

    pub fn extend_to(&mut self, f: &F, n: usize) {
        while self.dims.len() <= n {
            self.push_degree(f);
        }
    }

    fn push_degree(&mut self, f: &F) {
        let n = self.dims.len(); // building comp_n, n >= 2
        let dprev = self.dims[n - 1];
        let dprev2 = self.dims[n - 2];
        // span of (id (x) mult) applied to R (x) comp_{n-2}
        let mut rows = Vec::with_capacity(6 * dprev2);
        for r in 0..6 {
            for u in 0..dprev2 {
                // sum_{ij} c_ij e_i (x) (g_j . e_u)
                let mut v = vec![f.zero(); 4 * dprev];
                for i in 0..4 {
                    for j in 0..4 {
                        let c = &self.relations[(r, 4 * i + j)];
                        if f.is_zero(c) {
                            continue;
                        }
                        // left multiplication by g_j on comp_{n-2} is the j-th
                        // column block of pi[n-1]
                        for t in 0..dprev {
                            let x = &self.pi[n - 1][(t, j * dprev2 + u)];
                            if f.is_zero(x) {
                                continue;
                            }
                            v[i * dprev + t] = f.add(&v[i * dprev + t], &f.mul(c, x));
                        }
                    }
                }
                rows.push(v);
            }
        }
        let mut u_mat = Matrix::from_rows(f, rows);
        let pivots = u_mat.rref(f);
        let amb = 4 * dprev;
        let mut is_pivot = vec![false; amb];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let dim = amb - pivots.len();
        // projection: free columns are the quotient basis
        let mut pi = Matrix::zero(f, dim, amb);
        let mut sigma = Matrix::zero(f, amb, dim);
        let free_cols: Vec<usize> = (0..amb).filter(|&c| !is_pivot[c]).collect();
        for (bi, &fc) in free_cols.iter().enumerate() {
            pi[(bi, fc)] = f.one();
            sigma[(fc, bi)] = f.one();
        }
        for (ri, &pc) in pivots.iter().enumerate() {
            // e_pc == -sum over free columns of u_mat[ri, fc] * e_fc
            for (bi, &fc) in free_cols.iter().enumerate() {
                if !f.is_zero(&u_mat[(ri, fc)]) {
                    pi[(bi, pc)] = f.neg(&u_mat[(ri, fc)]);
                }
            }
        }
        self.dims.push(dim);
        self.pi.push(pi);
        self.sigma.push(sigma);
        // right multiplication maps comp_{n-1} -> comp_n:
        // R_k = pi_n . (id_V (x) R_k^{(n-2)}) . sigma_{n-1}
        let mut rmaps: [Matrix<F>; 4] = std::array::from_fn(|_| Matrix::zero(f, dim, dprev));
        for k in 0..4 {
            let rk_prev = &self.right[n - 2][k];
            // (id (x) rk_prev): 4*dprev2 -> 4*dprev (block diagonal)
            let mut big = Matrix::zero(f, 4 * dprev, 4 * dprev2);
            for b in 0..4 {
                for r in 0..dprev {
                    for c in 0..dprev2 {
                        if !f.is_zero(&rk_prev[(r, c)]) {
                            big[(b * dprev + r, b * dprev2 + c)] = rk_prev[(r, c)].clone();
                        }
                    }
                }
            }
            rmaps[k] = self.pi[n].mul(f, &big).mul(f, &self.sigma[n - 1]);
        }
        self.right.push(rmaps);
    }

    pub fn left_mul(&self, f: &F, j: usize, n: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        let dn = self.dims[n];
        assert_eq!(v.len(), dn);
        let pi = &self.pi[n + 1];
        let mut out = vec![f.zero(); self.dims[n + 1]];
        for r in 0..out.len() {
            let mut acc = f.zero();
            for c in 0..dn {
                let x = &pi[(r, j * dn + c)];
                if f.is_zero(x) || f.is_zero(&v[c]) {
                    continue;
                }
                acc = f.add(&acc, &f.mul(x, &v[c]));
            }
            out[r] = acc;
        }
        out
    }

    pub fn right_mul(&self, f: &F, k: usize, n: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        self.right[n][k].mul_vec(f, v)
    }

    /// Left multiplication matrix by generator j: comp_n -> comp_{n+1}.
    pub fn left_mul_matrix(&self, f: &F, j: usize, n: usize) -> Matrix<F> {
        let dn = self.dims[n];
        let mut m = Matrix::zero(f, self.dims[n + 1], dn);
        for r in 0..m.rows {
            for c in 0..dn {
                m[(r, c)] = self.pi[n + 1][(r, j * dn + c)].clone();
            }
        }
        m
    }
}
