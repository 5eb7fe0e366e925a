//! Generalized complex structures on a real vector space `V`.
//!
//! Coordinates on `V ⊕ V*` are ordered `(v_1..v_n, f_1..f_n)` and vectors are
//! columns, so an endomorphism is a `2n × 2n` matrix with blocks
//! `[[J1, J2], [J3, J4]]`, `J2: V* → V`, `J3: V → V*`. The dual of a map is
//! its transpose. Two-forms are stored as the map `v ↦ ι_v B`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::{dot, rat, Field, Gq, Matrix, Rational, Subspace};
use crate::spinor::{self, SpinorLine};
use crate::{GcError, Result};

/// The real vector space `V` of dimension `n` and its double `V ⊕ V*`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct PhaseSpace {
    pub n: usize,
}

impl PhaseSpace {
    pub fn new(n: usize) -> Self {
        PhaseSpace { n }
    }

    pub fn double_dim(&self) -> usize {
        2 * self.n
    }

    /// `ρ`: projection onto `V`.
    pub fn rho<F: Field>(&self, x: &[F]) -> Vec<F> {
        x[..self.n].to_vec()
    }

    /// `ρ*`: projection onto `V*`.
    pub fn rho_star<F: Field>(&self, x: &[F]) -> Vec<F> {
        x[self.n..].to_vec()
    }

    pub fn v_coords(&self) -> Vec<usize> {
        (0..self.n).collect()
    }

    pub fn f_coords(&self) -> Vec<usize> {
        (self.n..2 * self.n).collect()
    }

    /// `V_ℂ ⊂ V_ℂ ⊕ V_ℂ*`.
    pub fn vectors<F: Field>(&self) -> Subspace<F> {
        Subspace::coordinate(2 * self.n, self.v_coords())
    }

    /// `V_ℂ* ⊂ V_ℂ ⊕ V_ℂ*`.
    pub fn covectors<F: Field>(&self) -> Subspace<F> {
        Subspace::coordinate(2 * self.n, self.f_coords())
    }

    /// `W ⊕ V*` for `W ⊆ V`.
    pub fn with_all_covectors<F: Field>(&self, w: &Subspace<F>) -> Subspace<F> {
        w.direct_sum(&Subspace::full(self.n))
    }

    /// `W ⊕ Ann(W)`.
    pub fn w_plus_ann<F: Field>(&self, w: &Subspace<F>) -> Subspace<F> {
        w.direct_sum(&w.annihilator())
    }
}

/// `⟨v+f, w+g⟩ = -½(f(w) + g(v))`.
pub fn pairing<F: Field>(x: &[F], y: &[F]) -> Result<F> {
    if x.len() != y.len() || x.len() % 2 != 0 {
        return Err(GcError::DimensionMismatch {
            expected: x.len(),
            found: y.len(),
        });
    }
    let n = x.len() / 2;
    let s = dot(&x[n..], &y[..n]) + dot(&y[n..], &x[..n]);
    Ok(-(s / F::from_int(2)))
}

/// Quadratic form `Q(v+f) = -f(v)`.
pub fn quadratic<F: Field>(x: &[F]) -> F {
    let n = x.len() / 2;
    -dot(&x[n..], &x[..n])
}

/// Gram matrix of the pairing, `-½ [[0, I], [I, 0]]`.
pub fn pairing_matrix(n: usize) -> Matrix<Rational> {
    let h = rat(-1, 2);
    Matrix::from_fn(2 * n, 2 * n, |r, c| {
        if (r < n && c == r + n) || (r >= n && c + n == r) {
            h.clone()
        } else {
            Rational::zero()
        }
    })
}

/// The seven block equations equivalent to `J² = -1` and orthogonality.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Equation {
    E1,
    E2,
    E3,
    E4,
    E5,
    E6,
    E7,
}

impl Equation {
    pub const ALL: [Equation; 7] = [
        Equation::E1,
        Equation::E2,
        Equation::E3,
        Equation::E4,
        Equation::E5,
        Equation::E6,
        Equation::E7,
    ];

    /// Short name of the equation.
    pub fn label(&self) -> &'static str {
        match self {
            Equation::E1 => "J1^2 + J2 J3 = -1",
            Equation::E2 => "J1 J2 + J2 J4 = 0",
            Equation::E3 => "J3 J1 + J4 J3 = 0",
            Equation::E4 => "J4^2 + J3 J2 = -1",
            Equation::E5 => "J4 = -J1*",
            Equation::E6 => "J2* = -J2",
            Equation::E7 => "J3* = -J3",
        }
    }

    /// The invariant the equation expresses.
    pub fn describe(&self) -> String {
        let what = match self {
            Equation::E1 => "square of the vector block",
            Equation::E2 => "compatibility of J1 and J2",
            Equation::E3 => "compatibility of J3 and J1",
            Equation::E4 => "square of the covector block",
            Equation::E5 => "orthogonality of the diagonal blocks",
            Equation::E6 => "skewness of J2",
            Equation::E7 => "skewness of J3",
        };
        format!("{what} ({})", self.label())
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// Outcome of checking a candidate automorphism both ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub violated: Vec<Equation>,
    pub squares_to_minus_one: bool,
    pub orthogonal: bool,
}

impl ValidationReport {
    pub fn passes(&self) -> bool {
        self.violated.is_empty()
    }

    pub fn direct_check_passes(&self) -> bool {
        self.squares_to_minus_one && self.orthogonal
    }

    pub fn criteria_agree(&self) -> bool {
        self.passes() == self.direct_check_passes()
    }
}

/// Checks the block equations and, independently, `J² = -1` and `JᵀGJ = G`.
pub fn validate_aut(m: &Matrix<Rational>) -> Result<ValidationReport> {
    if !m.is_square() || m.rows() % 2 != 0 {
        return Err(GcError::DimensionMismatch {
            expected: m.rows() + m.rows() % 2,
            found: m.cols(),
        });
    }
    let n = m.rows() / 2;
    let (j1, j2, j3, j4) = split_blocks(m);
    let id = Matrix::<Rational>::identity(n);
    let neg_id = -id.clone();
    let zero = Matrix::<Rational>::zeros(n, n);
    let mut violated = Vec::new();
    let checks = [
        (Equation::E1, j1.mul(&j1).add(&j2.mul(&j3)) == neg_id),
        (Equation::E2, j1.mul(&j2).add(&j2.mul(&j4)) == zero),
        (Equation::E3, j3.mul(&j1).add(&j4.mul(&j3)) == zero),
        (Equation::E4, j4.mul(&j4).add(&j3.mul(&j2)) == neg_id),
        (Equation::E5, j4 == -j1.transpose()),
        (Equation::E6, j2.is_skew()),
        (Equation::E7, j3.is_skew()),
    ];
    for (eq, ok) in checks {
        if !ok {
            violated.push(eq);
        }
    }
    let squares_to_minus_one = m.mul(m) == -Matrix::identity(2 * n);
    let g = pairing_matrix(n);
    let orthogonal = m.transpose().mul(&g).mul(m) == g;
    Ok(ValidationReport {
        violated,
        squares_to_minus_one,
        orthogonal,
    })
}

fn split_blocks<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Matrix<F>, Matrix<F>, Matrix<F>) {
    let n = m.rows() / 2;
    (
        m.submatrix(0, n, 0, n),
        m.submatrix(0, n, n, 2 * n),
        m.submatrix(n, 2 * n, 0, n),
        m.submatrix(n, 2 * n, n, 2 * n),
    )
}

/// A skew map `V → V*`, `v ↦ ι_v B`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoForm {
    m: Matrix<Rational>,
}

/// A skew map `V* → V`, `f ↦ ι_f β`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiVector {
    m: Matrix<Rational>,
}

macro_rules! skew_map {
    ($ty:ident, $what:expr) => {
        impl $ty {
            pub fn new(m: Matrix<Rational>) -> Result<Self> {
                if !m.is_skew() {
                    return Err(GcError::NotSkew($what));
                }
                Ok($ty { m })
            }

            pub fn zero(n: usize) -> Self {
                $ty {
                    m: Matrix::zeros(n, n),
                }
            }

            /// From the coefficient matrix `b[i][j] = value on (basis_i, basis_j)`.
            pub fn from_bilinear(b: Matrix<Rational>) -> Result<Self> {
                $ty::new(b.transpose())
            }

            /// From terms `c · x_i ∧ x_j` (0-based indices).
            pub fn from_terms(n: usize, terms: &[(usize, usize, Rational)]) -> Self {
                let mut b = Matrix::<Rational>::zeros(n, n);
                for (i, j, c) in terms {
                    let bij = b.get(*i, *j).clone() + c;
                    let bji = b.get(*j, *i).clone() - c;
                    b.set(*i, *j, bij);
                    b.set(*j, *i, bji);
                }
                $ty { m: b.transpose() }
            }

            pub fn dim(&self) -> usize {
                self.m.rows()
            }

            /// The linear map as a matrix acting on column vectors.
            pub fn map(&self) -> &Matrix<Rational> {
                &self.m
            }

            pub fn bilinear(&self) -> Matrix<Rational> {
                self.m.transpose()
            }

            /// Value on a pair of vectors.
            pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
                dot(&self.m.mul_vec(x), y)
            }

            pub fn is_nondegenerate(&self) -> bool {
                self.m.is_invertible()
            }

            pub fn add(&self, o: &$ty) -> $ty {
                $ty { m: self.m.add(&o.m) }
            }

            pub fn neg(&self) -> $ty {
                $ty { m: -self.m.clone() }
            }

            pub fn scale(&self, s: &Rational) -> $ty {
                $ty { m: self.m.scale(s) }
            }

            /// Pullback along the linear map whose columns are `basis` vectors.
            pub fn pullback(&self, l: &Matrix<Rational>) -> $ty {
                $ty {
                    m: l.transpose().mul(&self.m).mul(l),
                }
            }

            /// Sum over `i < j` of the coefficient of `x_i ∧ x_j`.
            pub fn to_multivector(&self) -> spinor::Multivector {
                spinor::Multivector::from_two_form_coeffs(&self.m.transpose().complexify())
            }
        }
    };
}

skew_map!(TwoForm, "two-form");
skew_map!(BiVector, "bivector");

impl TwoForm {
    /// The same skew matrix viewed as a bivector on `V*` (used by duality).
    pub fn as_bivector(&self) -> BiVector {
        BiVector { m: self.m.clone() }
    }
}

impl BiVector {
    pub fn as_two_form(&self) -> TwoForm {
        TwoForm { m: self.m.clone() }
    }
}

/// Canonical symplectic form on `ℝ^(2h)` with `ω(e_i, f_j) = δ_ij`, basis
/// ordered `(e_1..e_h, f_1..f_h)`.
pub fn standard_symplectic(half: usize) -> TwoForm {
    let terms: Vec<_> = (0..half).map(|i| (i, half + i, Rational::one())).collect();
    TwoForm::from_terms(2 * half, &terms)
}

/// The complex structure `[[0, -I], [I, 0]]` on `ℝ^(2h)`.
pub fn standard_complex(half: usize) -> Matrix<Rational> {
    let z = Matrix::zeros(half, half);
    let i = Matrix::identity(half);
    Matrix::block(&z, &-i.clone(), &i, &z)
}

/// An orthogonal automorphism of `V ⊕ V*` squaring to `-1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GcAut {
    n: usize,
    m: Matrix<Rational>,
}

impl GcAut {
    pub fn new(m: Matrix<Rational>) -> Result<Self> {
        let report = validate_aut(&m)?;
        if !report.criteria_agree() {
            return Err(GcError::CrossCheck("block equations disagree with J^2=-1 and orthogonality"));
        }
        if !report.passes() {
            return Err(GcError::InvalidStructure(report.violated));
        }
        Ok(GcAut { n: m.rows() / 2, m })
    }

    pub fn from_blocks(
        j1: &Matrix<Rational>,
        j2: &Matrix<Rational>,
        j3: &Matrix<Rational>,
        j4: &Matrix<Rational>,
    ) -> Result<Self> {
        let n = j1.rows();
        for b in [j1, j2, j3, j4] {
            if b.rows() != n || b.cols() != n {
                return Err(GcError::DimensionMismatch {
                    expected: n,
                    found: b.rows().max(b.cols()),
                });
            }
        }
        GcAut::new(Matrix::block(j1, j2, j3, j4))
    }

    /// Skips validation; only for matrices known to be valid by construction.
    pub(crate) fn from_trusted(m: Matrix<Rational>) -> Self {
        debug_assert!(validate_aut(&m).map(|r| r.passes()).unwrap_or(false));
        GcAut { n: m.rows() / 2, m }
    }

    /// `[[J, 0], [0, -J*]]`.
    pub fn complex(j: &Matrix<Rational>) -> Result<Self> {
        let n = j.rows();
        if !j.is_square() || j.mul(j) != -Matrix::identity(n) {
            return Err(GcError::NotComplexStructure);
        }
        let z = Matrix::zeros(n, n);
        Ok(GcAut::from_trusted(Matrix::block(j, &z, &z, &-j.transpose())))
    }

    /// `[[0, -ω⁻¹], [ω, 0]]`.
    pub fn symplectic(omega: &TwoForm) -> Result<Self> {
        let n = omega.dim();
        let inv = omega
            .map()
            .inverse()
            .ok_or(GcError::Singular("symplectic form is degenerate"))?;
        let z = Matrix::zeros(n, n);
        Ok(GcAut::from_trusted(Matrix::block(&z, &-inv, omega.map(), &z)))
    }

    pub fn space(&self) -> PhaseSpace {
        PhaseSpace::new(self.n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Matrix<Rational> {
        &self.m
    }

    pub fn j1(&self) -> Matrix<Rational> {
        self.m.submatrix(0, self.n, 0, self.n)
    }

    pub fn j2(&self) -> Matrix<Rational> {
        self.m.submatrix(0, self.n, self.n, 2 * self.n)
    }

    pub fn j3(&self) -> Matrix<Rational> {
        self.m.submatrix(self.n, 2 * self.n, 0, self.n)
    }

    pub fn j4(&self) -> Matrix<Rational> {
        self.m.submatrix(self.n, 2 * self.n, self.n, 2 * self.n)
    }

    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        self.m.mul_vec(x)
    }

    /// The `+i` eigenspace `E = ker(J - i)`.
    pub fn eigenspace(&self) -> IsotropicE {
        let shifted = self
            .m
            .complexify()
            .sub(&Matrix::identity(2 * self.n).scale(&Gq::i()));
        IsotropicE {
            n: self.n,
            e: shifted.kernel(),
        }
    }

    /// The automorphism acting as `+i` on `E` and `-i` on `Ē`.
    pub fn from_eigenspace(e: &IsotropicE) -> Result<Self> {
        let n = e.n;
        if n == 0 {
            return Ok(GcAut {
                n: 0,
                m: Matrix::zeros(0, 0),
            });
        }
        let basis = e.e.basis();
        let p = Matrix::vstack(basis, &basis.conj()).transpose();
        let p_inv = p
            .inverse()
            .ok_or(GcError::InvalidEigenspace("E and its conjugate are not complementary"))?;
        let d = Matrix::from_fn(2 * n, 2 * n, |r, c| {
            if r != c {
                Gq::zero()
            } else if r < n {
                Gq::i()
            } else {
                -Gq::i()
            }
        });
        let j = p.mul(&d).mul(&p_inv);
        let real = j
            .to_real()
            .ok_or(GcError::CrossCheck("eigenspace automorphism is not real"))?;
        GcAut::new(real)
    }

    /// The structure `τ J τ⁻¹` on `V*`.
    pub fn dualize(&self) -> GcAut {
        GcAut::from_trusted(Matrix::block(&self.j4(), &self.j3(), &self.j2(), &self.j1()))
    }

    /// `[[J1, -J2], [-J3, J4]]`.
    pub fn twist(&self) -> GcAut {
        GcAut::from_trusted(Matrix::block(&self.j1(), &-self.j2(), &-self.j3(), &self.j4()))
    }

    /// Direct sum on `U ⊕ V`, coordinates `(u, v, u*, v*)`.
    pub fn direct_sum(&self, o: &GcAut) -> GcAut {
        let d = |a: Matrix<Rational>, b: Matrix<Rational>| Matrix::diag_blocks(&a, &b);
        GcAut::from_trusted(Matrix::block(
            &d(self.j1(), o.j1()),
            &d(self.j2(), o.j2()),
            &d(self.j3(), o.j3()),
            &d(self.j4(), o.j4()),
        ))
    }

    /// `direct_sum(twist(self), other)`.
    pub fn twisted_product(&self, o: &GcAut) -> GcAut {
        self.twist().direct_sum(o)
    }

    /// Push forward along an isomorphism `μ: V → W`, i.e. conjugation by
    /// `μ ⊕ (μ*)⁻¹`.
    pub fn transport(&self, mu: &Matrix<Rational>) -> Result<GcAut> {
        let lam = cotangent_lift(mu)?;
        let lam_inv = lam.inverse().ok_or(GcError::Singular("transport map"))?;
        Ok(GcAut::from_trusted(lam.mul(&self.m).mul(&lam_inv)))
    }

    /// Representative pure spinor line.
    pub fn spinor(&self) -> Result<SpinorLine> {
        spinor::spinor_from_e(self.eigenspace().subspace())
    }
}

/// `μ ⊕ (μ*)⁻¹` as a matrix on `V ⊕ V*`.
pub fn cotangent_lift(mu: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    let inv = mu.inverse().ok_or(GcError::Singular("map is not invertible"))?;
    Ok(Matrix::diag_blocks(mu, &inv.transpose()))
}

/// A maximal isotropic `E ⊂ V_ℂ ⊕ V_ℂ*` with `E ∩ Ē = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsotropicE {
    n: usize,
    e: Subspace<Gq>,
}

/// True when every pair of basis vectors pairs to zero.
pub fn is_isotropic(s: &Subspace<Gq>) -> bool {
    let b = s.basis_vectors();
    b.iter()
        .enumerate()
        .all(|(i, x)| b[i..].iter().all(|y| pairing(x, y).map(|v| v.is_zero()).unwrap_or(false)))
}

/// Dimension `n` and isotropic in `ℂ^(2n)`.
pub fn is_maximal_isotropic(s: &Subspace<Gq>) -> bool {
    s.ambient_dim() % 2 == 0 && s.dim() * 2 == s.ambient_dim() && is_isotropic(s)
}

impl IsotropicE {
    pub fn new(e: Subspace<Gq>) -> Result<Self> {
        if e.ambient_dim() % 2 != 0 {
            return Err(GcError::InvalidEigenspace("ambient dimension is odd"));
        }
        let n = e.ambient_dim() / 2;
        if e.dim() != n {
            return Err(GcError::InvalidEigenspace("dimension is not n"));
        }
        if !is_isotropic(&e) {
            return Err(GcError::InvalidEigenspace("not isotropic"));
        }
        if !e.intersect(&e.conjugate())?.is_zero() {
            return Err(GcError::InvalidEigenspace("E meets its conjugate"));
        }
        Ok(IsotropicE { n, e })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn subspace(&self) -> &Subspace<Gq> {
        &self.e
    }

    pub fn conjugate(&self) -> IsotropicE {
        IsotropicE {
            n: self.n,
            e: self.e.conjugate(),
        }
    }

    pub fn to_aut(&self) -> Result<GcAut> {
        GcAut::from_eigenspace(self)
    }

    pub fn dualize(&self) -> IsotropicE {
        IsotropicE {
            n: self.n,
            e: self.e.image(&swap_matrix(self.n).complexify()),
        }
    }

    pub fn direct_sum(&self, o: &IsotropicE) -> IsotropicE {
        let (p, q) = (self.n, o.n);
        let mut rows = Vec::new();
        for x in self.e.basis_vectors() {
            let mut r = vec![Gq::zero(); 2 * (p + q)];
            for i in 0..p {
                r[i] = x[i].clone();
                r[p + q + i] = x[p + i].clone();
            }
            rows.push(r);
        }
        for x in o.e.basis_vectors() {
            let mut r = vec![Gq::zero(); 2 * (p + q)];
            for i in 0..q {
                r[p + i] = x[i].clone();
                r[2 * p + q + i] = x[q + i].clone();
            }
            rows.push(r);
        }
        IsotropicE {
            n: p + q,
            e: Subspace::from_rows(2 * (p + q), rows),
        }
    }

    /// Image under an orthogonal automorphism of `V ⊕ V*`.
    pub fn apply(&self, m: &Matrix<Rational>) -> IsotropicE {
        IsotropicE {
            n: self.n,
            e: self.e.image(&m.complexify()),
        }
    }
}

/// The swap `τ(v, f) = (f, v)`.
pub fn swap_matrix(n: usize) -> Matrix<Rational> {
    let z = Matrix::zeros(n, n);
    let i = Matrix::identity(n);
    Matrix::block(&z, &i, &i, &z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, lift_vec};

    fn symplectic_2() -> GcAut {
        GcAut::symplectic(&standard_symplectic(1)).unwrap()
    }

    fn complex_2() -> GcAut {
        GcAut::complex(&standard_complex(1)).unwrap()
    }

    fn e(i: usize, n: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); 2 * n];
        v[i] = Rational::one();
        v
    }

    #[test]
    fn pairing_values() {
        // e_1 against f_1 in n = 2
        assert_eq!(pairing(&e(0, 2), &e(2, 2)).unwrap(), rat(-1, 2));
        assert_eq!(pairing(&e(0, 2), &e(1, 2)).unwrap(), Rational::zero());
        let x: Vec<Rational> = e(0, 2).iter().zip(e(2, 2)).map(|(a, b)| a + b).collect();
        assert_eq!(quadratic(&x), int(-1));
        assert!(pairing(&e(0, 2), &e(0, 1)).is_err());
    }

    #[test]
    fn standard_structures_validate() {
        assert!(validate_aut(symplectic_2().matrix()).unwrap().passes());
        assert!(validate_aut(complex_2().matrix()).unwrap().passes());
    }

    #[test]
    fn non_skew_j2_reports_e6() {
        let z = Matrix::<Rational>::zeros(1, 1);
        let one = Matrix::<Rational>::identity(1);
        let report = validate_aut(&Matrix::block(&z, &one, &-one.clone(), &z)).unwrap();
        assert!(!report.passes());
        assert!(report.violated.contains(&Equation::E6));
        assert!(report.violated.contains(&Equation::E7));
        assert!(report.criteria_agree());
        let err = GcAut::new(Matrix::block(&z, &one, &-one.clone(), &z)).unwrap_err();
        assert!(err.to_string().contains("skewness of J2"));
    }

    #[test]
    fn symplectic_eigenspace_is_graph_of_minus_i_omega() {
        // ω = f1∧f2, ι_{e1}ω = f2, so E ∋ (1, 0, 0, -i); ι_{e2}ω = -f1 gives (0, 1, i, 0).
        let e = symplectic_2().eigenspace();
        let expected = Subspace::from_rows(
            4,
            vec![
                vec![Gq::one(), Gq::zero(), Gq::zero(), Gq::from_ints(0, -1)],
                vec![Gq::zero(), Gq::one(), Gq::from_ints(0, 1), Gq::zero()],
            ],
        );
        assert_eq!(*e.subspace(), expected);
    }

    #[test]
    fn complex_eigenspace_is_holomorphic_plus_antiholomorphic() {
        // J = [[0,-1],[1,0]]: J(1,-i) = i(1,-i); J*(1,-i) = -i(1,-i).
        let e = complex_2().eigenspace();
        let expected = Subspace::from_rows(
            4,
            vec![
                vec![Gq::one(), Gq::from_ints(0, -1), Gq::zero(), Gq::zero()],
                vec![Gq::zero(), Gq::zero(), Gq::one(), Gq::from_ints(0, -1)],
            ],
        );
        assert_eq!(*e.subspace(), expected);
    }

    #[test]
    fn eigenspace_round_trip_on_fixed_structures() {
        for j in [symplectic_2(), complex_2(), symplectic_2().direct_sum(&complex_2())] {
            let e = IsotropicE::new(j.eigenspace().subspace().clone()).unwrap();
            assert_eq!(GcAut::from_eigenspace(&e).unwrap(), j);
        }
    }

    #[test]
    fn invalid_eigenspaces_rejected() {
        // V_ℂ is maximal isotropic but real.
        let v = PhaseSpace::new(2).vectors::<Gq>();
        assert!(matches!(IsotropicE::new(v), Err(GcError::InvalidEigenspace(_))));
        let line = Subspace::from_rows(4, vec![lift_vec(&e(0, 2))]);
        assert!(IsotropicE::new(line).is_err());
        // span{e1, f1} has the right dimension but is not isotropic
        let s = Subspace::from_rows(4, vec![lift_vec(&e(0, 2)), lift_vec(&e(2, 2))]);
        assert!(IsotropicE::new(s).is_err());
    }

    #[test]
    fn dualize_swaps_blocks_and_is_involutive() {
        let j = symplectic_2().direct_sum(&complex_2());
        let d = j.dualize();
        assert_eq!(d.j2(), j.j3());
        assert_eq!(d.j3(), j.j2());
        assert_eq!(d.dualize(), j);
        assert_eq!(j.eigenspace().dualize(), d.eigenspace());
    }

    #[test]
    fn twist_examples() {
        assert_eq!(complex_2().twist(), complex_2());
        let minus = GcAut::symplectic(&standard_symplectic(1).neg()).unwrap();
        assert_eq!(symplectic_2().twist(), minus);
        let j = symplectic_2().direct_sum(&complex_2());
        assert_eq!(j.twist().twist(), j);
    }

    #[test]
    fn direct_sum_of_symplectic_is_block_diagonal() {
        let w1 = standard_symplectic(1);
        let w2 = TwoForm::from_terms(2, &[(0, 1, int(3))]);
        let sum = GcAut::symplectic(&w1)
            .unwrap()
            .direct_sum(&GcAut::symplectic(&w2).unwrap());
        let block = TwoForm::new(Matrix::diag_blocks(w1.map(), w2.map())).unwrap();
        assert_eq!(sum, GcAut::symplectic(&block).unwrap());
        let empty = GcAut::new(Matrix::zeros(0, 0)).unwrap();
        assert_eq!(sum.direct_sum(&empty), sum);
        assert_eq!(empty.direct_sum(&sum), sum);
        assert_eq!(
            sum.eigenspace(),
            GcAut::symplectic(&w1)
                .unwrap()
                .eigenspace()
                .direct_sum(&GcAut::symplectic(&w2).unwrap().eigenspace())
        );
    }

    #[test]
    fn twisted_product_examples() {
        let wv = TwoForm::from_terms(2, &[(0, 1, int(2))]);
        let a = symplectic_2();
        let b = GcAut::symplectic(&wv).unwrap();
        let expected = GcAut::symplectic(
            &TwoForm::new(Matrix::diag_blocks(&-standard_symplectic(1).map().clone(), wv.map())).unwrap(),
        )
        .unwrap();
        assert_eq!(a.twisted_product(&b), expected);
        assert_eq!(complex_2().twisted_product(&complex_2()), complex_2().direct_sum(&complex_2()));
    }
}
