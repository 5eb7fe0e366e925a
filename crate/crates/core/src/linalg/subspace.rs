use super::matrix::{dot, Matrix};
use super::scalar::{Field, Gq, Rational};

/// A linear subspace of `F^ambient`, stored by its reduced row-echelon basis.
///
/// The canonical form makes `==` set equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the rows of `m`.
    pub fn from_matrix(m: &Matrix<F>) -> Self {
        let rr = m.rref();
        Subspace {
            ambient: m.cols(),
            basis: rr.reduced.submatrix(0, rr.rank, 0, m.cols()),
            pivots: rr.pivots,
        }
    }

    pub fn from_rows(ambient: usize, rows: Vec<Vec<F>>) -> Self {
        Subspace::from_matrix(&Matrix::from_rows(ambient, rows))
    }

    /// Coordinate subspace spanned by the unit vectors `e_i`, `i ∈ idx`.
    pub fn coordinate(ambient: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let rows = idx.into_iter().map(|i| unit(ambient, i)).collect();
        Subspace::from_rows(ambient, rows)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Reduces `v` modulo the subspace; the result vanishes on the pivot columns.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (c, b) in self.basis.row(r).iter().enumerate() {
                if !b.is_zero() {
                    let cur = std::mem::replace(&mut out[c], F::zero());
                    out[c] = cur - f.clone() * b;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Coordinates of `v` in the stored basis. Only meaningful when `contains(v)`.
    pub fn coordinates(&self, v: &[F]) -> Vec<F> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// Vector with the given basis coordinates.
    pub fn combine(&self, coords: &[F]) -> Vec<F> {
        assert_eq!(coords.len(), self.dim(), "coordinate length mismatch");
        let mut out = vec![F::zero(); self.ambient];
        for (r, a) in coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (c, b) in self.basis.row(r).iter().enumerate() {
                if !b.is_zero() {
                    let cur = std::mem::replace(&mut out[c], F::zero());
                    out[c] = cur + a.clone() * b;
                }
            }
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace<F>) -> bool {
        self.ambient == other.ambient
            && (0..self.dim()).all(|r| other.contains(self.basis.row(r)))
    }

    fn check_same(&self, o: &Subspace<F>) -> Result<(), crate::GcError> {
        if self.ambient != o.ambient {
            return Err(crate::GcError::DimensionMismatch {
                expected: self.ambient,
                found: o.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, o: &Subspace<F>) -> Result<Subspace<F>, crate::GcError> {
        self.check_same(o)?;
        Ok(Subspace::from_matrix(&Matrix::vstack(&self.basis, &o.basis)))
    }

    pub fn intersect(&self, o: &Subspace<F>) -> Result<Subspace<F>, crate::GcError> {
        self.check_same(o)?;
        let ann = self.annihilator().sum(&o.annihilator())?;
        Ok(ann.annihilator())
    }

    /// `{f : f(w) = 0 for all w}` in the dual space, same ambient dimension.
    pub fn annihilator(&self) -> Subspace<F> {
        if self.dim() == 0 {
            return Subspace::full(self.ambient);
        }
        self.basis.kernel()
    }

    /// The coordinate complement spanned by unit vectors at the non-pivot columns.
    pub fn complement(&self) -> Subspace<F> {
        Subspace::coordinate(self.ambient, self.non_pivots())
    }

    pub fn conjugate(&self) -> Subspace<F> {
        Subspace::from_matrix(&self.basis.conj())
    }

    pub fn is_real(&self) -> bool {
        *self == self.conjugate()
    }

    /// `{m·x : x in self}`.
    pub fn image(&self, m: &Matrix<F>) -> Subspace<F> {
        assert_eq!(m.cols(), self.ambient, "image: shape mismatch");
        Subspace::from_matrix(&self.basis.mul(&m.transpose()))
    }

    /// `{x : m·x in self}`.
    pub fn preimage(&self, m: &Matrix<F>) -> Subspace<F> {
        assert_eq!(m.rows(), self.ambient, "preimage: shape mismatch");
        let ann = self.annihilator();
        if ann.dim() == 0 {
            return Subspace::full(m.cols());
        }
        ann.basis.mul(m).kernel()
    }

    /// Projection onto the listed coordinates.
    pub fn project(&self, coords: &[usize]) -> Subspace<F> {
        Subspace::from_matrix(&self.basis.select_cols(coords))
    }

    /// Embeds `self ⊂ F^a` and `o ⊂ F^b` as `self ⊕ o ⊂ F^(a+b)`.
    pub fn direct_sum(&self, o: &Subspace<F>) -> Subspace<F> {
        let a = self.ambient;
        let b = o.ambient;
        let mut rows = Vec::new();
        for v in self.basis_vectors() {
            let mut r = v;
            r.extend(std::iter::repeat_with(F::zero).take(b));
            rows.push(r);
        }
        for v in o.basis_vectors() {
            let mut r: Vec<F> = std::iter::repeat_with(F::zero).take(a).collect();
            r.extend(v);
            rows.push(r);
        }
        Subspace::from_rows(a + b, rows)
    }

    /// Returns a nonzero vector of `self ∩ o`, if any.
    pub fn common_vector(&self, o: &Subspace<F>) -> Result<Option<Vec<F>>, crate::GcError> {
        let i = self.intersect(o)?;
        Ok(i.basis_vectors().into_iter().next())
    }

    /// Extends a basis of `sub ⊆ self` by rows of `self`'s basis to a basis of `self`.
    /// Returns only the added vectors.
    pub fn extend_basis_from(&self, sub: &Subspace<F>) -> Vec<Vec<F>> {
        let mut acc = sub.clone();
        let mut added = Vec::new();
        for v in self.basis_vectors() {
            if !acc.contains(&v) {
                acc = acc.sum(&Subspace::from_rows(self.ambient, vec![v.clone()])).expect("same ambient");
                added.push(v);
            }
        }
        added
    }

    pub fn pairing_matrix(&self, other: &Subspace<F>) -> Matrix<F> {
        Matrix::from_fn(self.dim(), other.dim(), |a, b| {
            dot(self.basis.row(a), other.basis.row(b))
        })
    }
}

impl Subspace<Rational> {
    pub fn complexify(&self) -> Subspace<Gq> {
        Subspace {
            ambient: self.ambient,
            basis: self.basis.complexify(),
            pivots: self.pivots.clone(),
        }
    }
}

impl Subspace<Gq> {
    /// The real form of a conjugation-stable subspace. The canonical basis of
    /// such a subspace has real entries, so this is a plain entry check.
    pub fn to_real(&self) -> Option<Subspace<Rational>> {
        let basis = self.basis.to_real()?;
        Some(Subspace {
            ambient: self.ambient,
            basis,
            pivots: self.pivots.clone(),
        })
    }
}

pub fn unit<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;

    type Q = Rational;

    fn span(n: usize, rows: &[&[i64]]) -> Subspace<Q> {
        Subspace::from_rows(n, rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn annihilator_of_axis() {
        let a = span(2, &[&[1, 0]]);
        assert_eq!(a.annihilator(), span(2, &[&[0, 1]]));
        assert_eq!(Subspace::<Q>::zero(3).annihilator(), Subspace::full(3));
        assert_eq!(Subspace::<Q>::full(3).annihilator(), Subspace::zero(3));
    }

    #[test]
    fn conjugate_line() {
        let s = Subspace::from_rows(2, vec![vec![Gq::from_ints(1, 0), Gq::from_ints(0, 1)]]);
        let c = Subspace::from_rows(2, vec![vec![Gq::from_ints(1, 0), Gq::from_ints(0, -1)]]);
        assert_eq!(s.conjugate(), c);
        assert!(!s.is_real());
        let r = span(2, &[&[1, 3]]).complexify();
        assert!(r.is_real());
        assert_eq!(r.to_real().unwrap(), span(2, &[&[1, 3]]));
    }

    #[test]
    fn complement_and_reduce() {
        let a = span(3, &[&[1, 2, 0], &[0, 0, 1]]);
        let c = a.complement();
        assert_eq!(c, span(3, &[&[0, 1, 0]]));
        assert_eq!(a.sum(&c).unwrap(), Subspace::full(3));
        assert!(a.intersect(&c).unwrap().is_zero());
        let v = vec![int(1), int(5), int(7)];
        let r = a.reduce(&v);
        assert_eq!(r, vec![int(0), int(3), int(0)]);
        assert!(a.contains(&a.combine(&[int(2), int(-1)])));
    }

    #[test]
    fn mismatched_ambient_is_an_error() {
        assert!(span(2, &[&[1, 0]]).sum(&span(3, &[&[1, 0, 0]])).is_err());
    }

    #[test]
    fn image_and_preimage() {
        let m = Matrix::<Q>::from_ints(&[&[0, 1], &[0, 0]]);
        let x = span(2, &[&[0, 1]]);
        assert_eq!(x.image(&m), span(2, &[&[1, 0]]));
        assert_eq!(span(2, &[&[1, 0]]).preimage(&m), Subspace::full(2));
        assert_eq!(Subspace::<Q>::zero(2).preimage(&m), span(2, &[&[1, 0]]));
    }
}
