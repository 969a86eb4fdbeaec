//! Exact dense linear algebra over any `Field`.

use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zero(f: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![f.zero(); rows * cols],
        }
    }

    pub fn identity(f: &F, n: usize) -> Self {
        let mut m = Self::zero(f, n, n);
        for i in 0..n {
            m[(i, i)] = f.one();
        }
        m
    }

    pub fn from_rows(f: &F, rows: Vec<Vec<F::Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        let _ = f;
        Matrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self, f: &F) -> Self {
        let mut out = Self::zero(f, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn mul(&self, f: &F, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows);
        let mut out = Self::zero(f, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = &self[(i, k)];
                if f.is_zero(x) {
                    continue;
                }
                for j in 0..o.cols {
                    let t = f.mul(x, &o[(k, j)]);
                    out[(i, j)] = f.add(&out[(i, j)], &t);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, f: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![f.zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = f.zero();
            for j in 0..self.cols {
                if f.is_zero(&self[(i, j)]) || f.is_zero(&v[j]) {
                    continue;
                }
                acc = f.add(&acc, &f.mul(&self[(i, j)], &v[j]));
            }
            out[i] = acc;
        }
        out
    }

    pub fn scale(&self, f: &F, c: &F::Elem) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| f.mul(x, c)).collect(),
        }
    }

    pub fn add(&self, f: &F, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(x, y)| f.add(x, y))
                .collect(),
        }
    }

    pub fn sub(&self, f: &F, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(x, y)| f.sub(x, y))
                .collect(),
        }
    }

    pub fn is_zero(&self, f: &F) -> bool {
        self.data.iter().all(|x| f.is_zero(x))
    }

    /// In-place reduced row echelon form. Returns pivot column indices.
    /// Pivots are chosen by the field's weight to keep exact entries small.
    pub fn rref(&mut self, f: &F) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // best pivot in column c at row >= r
            let mut best: Option<(usize, usize)> = None;
            for i in r..self.rows {
                if !f.is_zero(&self[(i, c)]) {
                    let w = f.weight(&self[(i, c)]);
                    if best.map(|(_, bw)| w < bw).unwrap_or(true) {
                        best = Some((i, w));
                    }
                }
            }
            let Some((pi, _)) = best else { continue };
            self.swap_rows(pi, r);
            let inv = f.inv(&self[(r, c)]).unwrap();
            for j in c..self.cols {
                self[(r, j)] = f.mul(&self[(r, j)], &inv);
            }
            for i in 0..self.rows {
                if i == r || f.is_zero(&self[(i, c)]) {
                    continue;
                }
                let factor = self[(i, c)].clone();
                for j in c..self.cols {
                    let t = f.mul(&factor, &self[(r, j)]);
                    self[(i, j)] = f.sub(&self[(i, j)], &t);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &F) -> usize {
        let mut m = self.clone();
        m.rref(f).len()
    }

    /// Basis of the right kernel (vectors v with Mv = 0).
    pub fn kernel(&self, f: &F) -> Vec<Vec<F::Elem>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(&m[(ri, free)]);
            }
            basis.push(v);
        }
        basis
    }

    /// Solve Mx = b; returns one solution if consistent.
    pub fn solve(&self, f: &F, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zero(f, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref(f);
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (ri, &pc) in pivots.iter().enumerate() {
            x[pc] = aug[(ri, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self, f: &F) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zero(f, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = f.one();
        }
        let pivots = aug.rref(f);
        if pivots.len() < n || pivots.iter().enumerate().any(|(k, &p)| p != k) {
            return None;
        }
        let mut out = Matrix::zero(f, n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(out)
    }

    pub fn det(&self, f: &F) -> F::Elem {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = f.one();
        for c in 0..n {
            let mut piv = None;
            for i in c..n {
                if !f.is_zero(&m[(i, c)]) {
                    piv = Some(i);
                    break;
                }
            }
            let Some(pi) = piv else {
                return f.zero();
            };
            if pi != c {
                m.swap_rows(pi, c);
                det = f.neg(&det);
            }
            det = f.mul(&det, &m[(c, c)]);
            let inv = f.inv(&m[(c, c)]).unwrap();
            for i in (c + 1)..n {
                if f.is_zero(&m[(i, c)]) {
                    continue;
                }
                let factor = f.mul(&m[(i, c)], &inv);
                for j in c..n {
                    let t = f.mul(&factor, &m[(c, j)]);
                    m[(i, j)] = f.sub(&m[(i, j)], &t);
                }
            }
        }
        det
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    /// Row-space equality test after RREF.
    pub fn same_row_space(&self, f: &F, o: &Self) -> bool {
        assert_eq!(self.cols, o.cols);
        let mut a = self.clone();
        let mut b = o.clone();
        let pa = a.rref(f);
        let pb = b.rref(f);
        if pa != pb {
            return false;
        }
        for r in 0..pa.len() {
            for c in 0..self.cols {
                if !f.eq(&a[(r, c)], &b[(r, c)]) {
                    return false;
                }
            }
        }
        true
    }

    /// Stack rows of both matrices.
    pub fn vstack(&self, f: &F, o: &Self) -> Self {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        let _ = f;
        Matrix {
            rows: self.rows + o.rows,
            cols: self.cols,
            data,
        }
    }
}

impl<F: Field> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F::Elem;
    fn index(&self, (i, j): (usize, usize)) -> &F::Elem {
        &self.data[i * self.cols + j]
    }
}

impl<F: Field> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F::Elem {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Fq;

    #[test]
    fn rref_rank_kernel() {
        let f = Fq::specialize_params(7, 0).unwrap();
        let m = Matrix::from_rows(
            &f,
            vec![
                vec![f.from_i64(1), f.from_i64(2), f.from_i64(3)],
                vec![f.from_i64(2), f.from_i64(4), f.from_i64(6)],
                vec![f.from_i64(1), f.from_i64(0), f.from_i64(1)],
            ],
        );
        assert_eq!(m.rank(&f), 2);
        let ker = m.kernel(&f);
        assert_eq!(ker.len(), 1);
        let v = &ker[0];
        let mv = m.mul_vec(&f, v);
        assert!(mv.iter().all(|x| f.is_zero(x)));
    }

    #[test]
    fn inverse_and_det() {
        let f = Fq::specialize_params(11, 0).unwrap();
        let m = Matrix::from_rows(
            &f,
            vec![
                vec![f.from_i64(1), f.from_i64(2)],
                vec![f.from_i64(3), f.from_i64(5)],
            ],
        );
        let inv = m.inverse(&f).unwrap();
        assert_eq!(m.mul(&f, &inv), Matrix::identity(&f, 2));
        assert_eq!(m.det(&f), f.from_i64(-1));
    }
}
