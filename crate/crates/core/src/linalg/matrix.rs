use std::fmt;

use super::scalar::{Field, Gq, Rational};
use super::subspace::Subspace;

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Result of Gauss-Jordan elimination.
#[derive(Clone, Debug)]
pub struct Rref<F> {
    pub reduced: Matrix<F>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { F::one() } else { F::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors. `cols` is needed for the empty case.
    /// Panics on ragged input.
    pub fn from_rows(cols: usize, rows: Vec<Vec<F>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Matrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| F::from_int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn col(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_skew(&self) -> bool {
        self.is_square() && *self == -self.transpose()
    }

    pub fn mul(&self, o: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, o.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = o.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * o.cols + c;
                    let prod = a.clone() * b;
                    let cur = std::mem::replace(&mut out.data[idx], F::zero());
                    out.data[idx] = cur + prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|r| dot(self.row(r), v))
            .collect()
    }

    pub fn add(&self, o: &Matrix<F>) -> Matrix<F> {
        self.zip(o, |a, b| a.clone() + b)
    }

    pub fn sub(&self, o: &Matrix<F>) -> Matrix<F> {
        self.zip(o, |a, b| a.clone() - b)
    }

    pub fn scale(&self, s: &F) -> Matrix<F> {
        self.map(|x| x.clone() * s)
    }

    pub fn map<G>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    fn zip(&self, o: &Matrix<F>, f: impl Fn(&F, &F) -> F) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn conj(&self) -> Matrix<F> {
        self.map(F::conj)
    }

    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix<F> {
        Matrix::from_fn(r1 - r0, c1 - c0, |r, c| self.get(r0 + r, c0 + c).clone())
    }

    pub fn select_cols(&self, cols: &[usize]) -> Matrix<F> {
        Matrix::from_fn(self.rows, cols.len(), |r, c| self.get(r, cols[c]).clone())
    }

    /// `[[a, b], [c, d]]`.
    pub fn block(a: &Matrix<F>, b: &Matrix<F>, c: &Matrix<F>, d: &Matrix<F>) -> Matrix<F> {
        Matrix::vstack(&Matrix::hstack(a, b), &Matrix::hstack(c, d))
    }

    pub fn hstack(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
        assert_eq!(a.rows, b.rows, "hstack row mismatch");
        Matrix::from_fn(a.rows, a.cols + b.cols, |r, c| {
            if c < a.cols {
                a.get(r, c).clone()
            } else {
                b.get(r, c - a.cols).clone()
            }
        })
    }

    pub fn vstack(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
        assert_eq!(a.cols, b.cols, "vstack column mismatch");
        let mut data = a.data.clone();
        data.extend(b.data.iter().cloned());
        Matrix {
            rows: a.rows + b.rows,
            cols: a.cols,
            data,
        }
    }

    pub fn diag_blocks(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
        Matrix::block(
            a,
            &Matrix::zeros(a.rows, b.cols),
            &Matrix::zeros(b.rows, a.cols),
            b,
        )
    }

    /// Reduced row-echelon form by exact Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = F::one() / m.get(r, c);
            for j in c..m.cols {
                let v = std::mem::replace(&mut m.data[r * m.cols + j], F::zero());
                m.data[r * m.cols + j] = v * &inv;
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let pv = m.get(r, j);
                    if pv.is_zero() {
                        continue;
                    }
                    let t = factor.clone() * pv;
                    let idx = i * m.cols + j;
                    let cur = std::mem::replace(&mut m.data[idx], F::zero());
                    m.data[idx] = cur - t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            reduced: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// `{x : self · x = 0}`.
    pub fn kernel(&self) -> Subspace<F> {
        let Rref {
            reduced, pivots, ..
        } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let basis = free
            .iter()
            .map(|&fc| {
                let mut v = vec![F::zero(); self.cols];
                v[fc] = F::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -reduced.get(row, fc).clone();
                }
                v
            })
            .collect();
        Subspace::from_rows(self.cols, basis)
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Matrix::hstack(self, &Matrix::identity(n));
        let rr = aug.rref();
        if rr.pivots.len() < n || (n > 0 && rr.pivots[n - 1] != n - 1) {
            return None;
        }
        Some(rr.reduced.submatrix(0, n, n, 2 * n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn pow(&self, k: u32) -> Matrix<F> {
        (0..k).fold(Matrix::identity(self.rows), |acc, _| acc.mul(self))
    }

    /// Solves `self · x = b`; returns one solution (free variables set to zero).
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let rhs = Matrix::from_rows(1, b.iter().map(|v| vec![v.clone()]).collect());
        let rr = Matrix::hstack(self, &rhs).rref();
        if rr.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (row, &pc) in rr.pivots.iter().enumerate() {
            x[pc] = rr.reduced.get(row, self.cols).clone();
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<F: Field> std::ops::Neg for Matrix<F> {
    type Output = Matrix<F>;
    fn neg(self) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.into_iter().map(|x| -x).collect(),
        }
    }
}

impl Matrix<Rational> {
    pub fn complexify(&self) -> Matrix<Gq> {
        self.map(|x| Gq::from(x.clone()))
    }
}

impl Matrix<Gq> {
    /// Real part, if every entry is real.
    pub fn to_real(&self) -> Option<Matrix<Rational>> {
        if self.data.iter().all(|x| num_traits::Zero::is_zero(&x.im)) {
            Some(self.map(|x| x.re.clone()))
        } else {
            None
        }
    }

    pub fn real_part(&self) -> Matrix<Rational> {
        self.map(|x| x.re.clone())
    }

    pub fn imag_part(&self) -> Matrix<Rational> {
        self.map(|x| x.im.clone())
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter().zip(b).fold(F::zero(), |acc, (x, y)| {
        if x.is_zero() || y.is_zero() {
            acc
        } else {
            acc + x.clone() * y
        }
    })
}

pub fn is_zero_vec<F: Field>(v: &[F]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn lift_vec(v: &[Rational]) -> Vec<Gq> {
    v.iter().map(|x| Gq::from(x.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::rat;

    type Q = Rational;

    #[test]
    fn rref_identity_and_dependent_rows() {
        let id = Matrix::<Q>::identity(3);
        let rr = id.rref();
        assert_eq!(rr.reduced, id);
        assert_eq!(rr.rank, 3);

        let m = Matrix::<Q>::from_ints(&[&[1, 2], &[2, 4]]);
        let rr = m.rref();
        assert_eq!(rr.reduced, Matrix::from_ints(&[&[1, 2], &[0, 0]]));
        assert_eq!(rr.rank, 1);
    }

    #[test]
    fn kernel_trivial_cases() {
        assert_eq!(Matrix::<Q>::zeros(2, 2).kernel().dim(), 2);
        assert_eq!(Matrix::<Q>::identity(3).kernel().dim(), 0);
    }

    #[test]
    fn kernel_over_gaussian() {
        // [[1, i], [0, 0]] x = 0  =>  x = t (-i, 1)
        let m = Matrix::from_rows(
            2,
            vec![
                vec![Gq::from_ints(1, 0), Gq::from_ints(0, 1)],
                vec![Gq::from_ints(0, 0), Gq::from_ints(0, 0)],
            ],
        );
        let k = m.kernel();
        let expected = Subspace::from_rows(2, vec![vec![Gq::from_ints(0, -1), Gq::from_ints(1, 0)]]);
        assert_eq!(k, expected);
    }

    #[test]
    fn inverse_and_solve() {
        let m = Matrix::<Q>::from_ints(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert!(Matrix::<Q>::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
        let x = m.solve(&[rat(3, 1), rat(2, 1)]).unwrap();
        assert_eq!(x, vec![rat(1, 1), rat(1, 1)]);
        assert!(Matrix::<Q>::from_ints(&[&[1, 1], &[1, 1]])
            .solve(&[rat(1, 1), rat(2, 1)])
            .is_none());
    }
}
