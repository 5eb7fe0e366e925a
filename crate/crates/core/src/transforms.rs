//! B-field and β-field transforms, structure types, and recovery of the
//! underlying complex or symplectic data.

use num_traits::Zero;
use serde::Serialize;

use crate::gcs::{BiVector, GcAut, IsotropicE, TwoForm};
use crate::linalg::{Gq, Matrix, Rational, Subspace};
use crate::spinor::{self, Multivector, SpinorLine};
use crate::{GcError, Result};

/// `[[1, 0], [B, 1]]`.
pub fn b_matrix(b: &TwoForm) -> Matrix<Rational> {
    let n = b.dim();
    Matrix::block(&Matrix::identity(n), &Matrix::zeros(n, n), b.map(), &Matrix::identity(n))
}

/// `[[1, β], [0, 1]]`.
pub fn beta_matrix(beta: &BiVector) -> Matrix<Rational> {
    let n = beta.dim();
    Matrix::block(&Matrix::identity(n), beta.map(), &Matrix::zeros(n, n), &Matrix::identity(n))
}

fn check_dim(x: &GcAut, d: usize) -> Result<()> {
    if x.n() != d {
        return Err(GcError::DimensionMismatch {
            expected: x.n(),
            found: d,
        });
    }
    Ok(())
}

pub fn b_transform(x: &GcAut, b: &TwoForm) -> Result<GcAut> {
    check_dim(x, b.dim())?;
    let m = b_matrix(b);
    let inv = b_matrix(&b.neg());
    GcAut::new(m.mul(x.matrix()).mul(&inv))
}

pub fn beta_transform(x: &GcAut, beta: &BiVector) -> Result<GcAut> {
    check_dim(x, beta.dim())?;
    let m = beta_matrix(beta);
    let inv = beta_matrix(&beta.neg());
    GcAut::new(m.mul(x.matrix()).mul(&inv))
}

pub fn b_transform_e(e: &IsotropicE, b: &TwoForm) -> IsotropicE {
    e.apply(&b_matrix(b))
}

pub fn beta_transform_e(e: &IsotropicE, beta: &BiVector) -> IsotropicE {
    e.apply(&beta_matrix(beta))
}

/// `exp(-B) ∧ φ`.
pub fn b_transform_spinor(phi: &Multivector, b: &TwoForm) -> Multivector {
    Multivector::exp(&b.neg().to_multivector()).wedge(phi)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct StructureType {
    pub is_complex: bool,
    #[serde(rename = "is_B_complex")]
    pub is_b_complex: bool,
    pub is_beta_complex: bool,
    pub is_symplectic: bool,
    #[serde(rename = "is_B_symplectic")]
    pub is_b_symplectic: bool,
    pub is_beta_symplectic: bool,
}

/// Structure type from the blocks, cross-checked against the subspace
/// criteria on `E`.
pub fn classify_type(x: &GcAut) -> Result<StructureType> {
    let (j1, j2, j3) = (x.j1(), x.j2(), x.j3());
    let t = StructureType {
        is_complex: j2.is_zero() && j3.is_zero(),
        is_b_complex: j2.is_zero(),
        is_beta_complex: j3.is_zero(),
        is_symplectic: j1.is_zero(),
        is_b_symplectic: j2.is_invertible(),
        is_beta_symplectic: j3.is_invertible(),
    };
    let e = x.eigenspace();
    let e = e.subspace();
    let eb = e.conjugate();
    let ps = x.space();
    let n = ps.n;
    let v = ps.vectors::<Gq>();
    let vs = ps.covectors::<Gq>();
    let rho = |s: &Subspace<Gq>| s.project(&ps.v_coords());
    let rho_star = |s: &Subspace<Gq>| s.project(&ps.f_coords());
    let b_complex_e = rho(e).intersect(&rho(&eb))?.is_zero();
    let beta_complex_e = rho_star(e).intersect(&rho_star(&eb))?.is_zero();
    let b_sympl_e = e.intersect(&vs)?.is_zero();
    let beta_sympl_e = e.intersect(&v)?.is_zero();
    let b_complex_sum = e.intersect(&vs)?.sum(&eb.intersect(&vs)?)?.dim() == n;
    let beta_complex_sum = e.intersect(&v)?.sum(&eb.intersect(&v)?)?.dim() == n;
    let rho_full = rho(e).dim() == n;
    let rho_star_full = rho_star(e).dim() == n;
    let agree = t.is_b_complex == b_complex_e
        && t.is_b_complex == b_complex_sum
        && t.is_beta_complex == beta_complex_e
        && t.is_beta_complex == beta_complex_sum
        && t.is_b_symplectic == b_sympl_e
        && t.is_b_symplectic == rho_full
        && t.is_beta_symplectic == beta_sympl_e
        && t.is_beta_symplectic == rho_star_full;
    if !agree {
        return Err(GcError::CrossCheck("block and eigenspace type criteria disagree"));
    }
    Ok(t)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RecoveredData {
    Complex { j: Matrix<Rational>, b: TwoForm },
    Symplectic { omega: TwoForm, b: TwoForm },
}

impl RecoveredData {
    pub fn b(&self) -> &TwoForm {
        match self {
            RecoveredData::Complex { b, .. } | RecoveredData::Symplectic { b, .. } => b,
        }
    }

    pub fn reassemble(&self) -> Result<GcAut> {
        match self {
            RecoveredData::Complex { j, b } => b_transform(&GcAut::complex(j)?, b),
            RecoveredData::Symplectic { omega, b } => b_transform(&GcAut::symplectic(omega)?, b),
        }
    }
}

/// B-complex: `J = J1`, `B = -½ J3 J1`. B-symplectic: `ω = -J2⁻¹`,
/// `B = -J2⁻¹ J1`.
pub fn recover(x: &GcAut) -> Result<RecoveredData> {
    let j2 = x.j2();
    let data = if j2.is_zero() {
        let j1 = x.j1();
        let b = x.j3().mul(&j1).scale(&crate::linalg::rat(-1, 2));
        RecoveredData::Complex {
            j: j1,
            b: TwoForm::new(b)?,
        }
    } else if let Some(inv) = j2.inverse() {
        RecoveredData::Symplectic {
            omega: TwoForm::new(-inv.clone())?,
            b: TwoForm::new(-inv.mul(&x.j1()))?,
        }
    } else {
        return Err(GcError::NotApplicable("structure is neither B-complex nor B-symplectic"));
    };
    if data.reassemble()? != *x {
        return Err(GcError::CrossCheck("recovered data does not reproduce the structure"));
    }
    Ok(data)
}

/// The block matrix of the B-transform of `(S, ω) ⊕ (C, J)` written out
/// entrywise, together with its spinor `exp(-B + iπ_S*ω) ∧ π_C*(f_1 ∧ …)`.
pub fn assemble_sum_transform(
    omega: &TwoForm,
    j: &Matrix<Rational>,
    b: &TwoForm,
) -> Result<(GcAut, SpinorLine)> {
    let s = omega.dim();
    let c = j.rows();
    if b.dim() != s + c {
        return Err(GcError::DimensionMismatch {
            expected: s + c,
            found: b.dim(),
        });
    }
    if !j.is_square() || j.mul(j) != -Matrix::identity(c) {
        return Err(GcError::NotComplexStructure);
    }
    let w = omega.map();
    let wi = w.inverse().ok_or(GcError::Singular("symplectic form is degenerate"))?;
    let bm = b.map();
    let b1 = bm.submatrix(0, s, 0, s);
    let b2 = bm.submatrix(0, s, s, s + c);
    let b3 = bm.submatrix(s, s + c, 0, s);
    let b4 = bm.submatrix(s, s + c, s, s + c);
    let jt = j.transpose();
    let zsc = Matrix::zeros(s, c);
    let zcs = Matrix::zeros(c, s);
    let zcc = Matrix::zeros(c, c);
    let row = |blocks: [Matrix<Rational>; 4]| {
        let [a, b, cc, d] = blocks;
        Matrix::hstack(&Matrix::hstack(&a, &b), &Matrix::hstack(&cc, &d))
    };
    let r1 = row([wi.mul(&b1), wi.mul(&b2), -wi.clone(), zsc.clone()]);
    let r2 = row([zcs.clone(), j.clone(), zcs.clone(), zcc.clone()]);
    let r3 = row([
        w.add(&b1.mul(&wi).mul(&b1)),
        b2.mul(j).add(&b1.mul(&wi).mul(&b2)),
        -b1.mul(&wi),
        zsc,
    ]);
    let r4 = row([
        b3.mul(&wi).mul(&b1).add(&jt.mul(&b3)),
        b4.mul(j).add(&b3.mul(&wi).mul(&b2)).add(&jt.mul(&b4)),
        -b3.mul(&wi),
        -jt.clone(),
    ]);
    let aut = GcAut::new(Matrix::vstack(&Matrix::vstack(&r1, &r2), &Matrix::vstack(&r3, &r4)))?;

    let n = s + c;
    let u = b
        .neg()
        .to_multivector()
        .add(&omega.to_multivector().embed(0, n).scale(&Gq::i()));
    let mut phi = Multivector::exp(&u);
    let minus_i = jt.complexify().add(&Matrix::identity(c).scale(&Gq::i())).kernel();
    for f in minus_i.basis_vectors().into_iter().rev() {
        let mut full = vec![Gq::zero(); s];
        full.extend(f);
        phi = phi.wedge_one_form(&full);
    }
    let line = SpinorLine::new(phi)?;
    if spinor::annihilator_subspace(line.rep())? != *aut.eigenspace().subspace() {
        return Err(GcError::CrossCheck("assembled matrix and spinor describe different structures"));
    }
    Ok((aut, line))
}

/// `T = ω⁻¹ B`.
pub fn t_operator(omega: &TwoForm, b: &TwoForm) -> Result<Matrix<Rational>> {
    let inv = omega
        .map()
        .inverse()
        .ok_or(GcError::Singular("symplectic form is degenerate"))?;
    Ok(inv.mul(b.map()))
}

/// `ω(u, Tv) = ω(Tu, v)`, i.e. `ωT` is skew.
pub fn satisfies_star(omega: &TwoForm, t: &Matrix<Rational>) -> bool {
    omega.map().mul(t).is_skew()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TAnalysis {
    pub symplectic: bool,
    pub beta_symplectic: bool,
    pub beta_complex: bool,
    pub structure: GcAut,
}

/// Reads the type of the B-transform of `ω` by `B = ωT` off `T` alone and
/// checks it against [`classify_type`] of the transformed structure.
pub fn analyze_t(omega: &TwoForm, t: &Matrix<Rational>) -> Result<TAnalysis> {
    if !satisfies_star(omega, t) {
        return Err(GcError::StarViolated);
    }
    let n = omega.dim();
    let shifted = t.complexify().sub(&Matrix::identity(n).scale(&Gq::i()));
    let res = TAnalysis {
        symplectic: t.is_zero(),
        beta_symplectic: shifted.kernel().is_zero(),
        beta_complex: t.mul(t) == -Matrix::identity(n),
        structure: b_transform(&GcAut::symplectic(omega)?, &TwoForm::new(omega.map().mul(t))?)?,
    };
    let ty = classify_type(&res.structure)?;
    if ty.is_symplectic != res.symplectic
        || ty.is_beta_symplectic != res.beta_symplectic
        || ty.is_beta_complex != res.beta_complex
    {
        return Err(GcError::CrossCheck("T-operator criteria disagree with the structure type"));
    }
    let s = &res.structure;
    let expected = Matrix::block(
        t,
        &-omega.map().inverse().expect("checked"),
        &omega.map().mul(&Matrix::identity(n).add(&t.mul(t))),
        &-t.transpose(),
    );
    if *s.matrix() != expected {
        return Err(GcError::CrossCheck("transformed blocks differ from the T-operator form"));
    }
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcs::{standard_complex, standard_symplectic};
    use crate::linalg::int;

    fn b2(c: i64) -> TwoForm {
        TwoForm::from_terms(2, &[(0, 1, int(c))])
    }

    #[test]
    fn zero_transforms_are_identity() {
        let x = GcAut::symplectic(&standard_symplectic(1)).unwrap();
        assert_eq!(b_transform(&x, &TwoForm::zero(2)).unwrap(), x);
        assert_eq!(beta_transform(&x, &BiVector::zero(2)).unwrap(), x);
    }

    #[test]
    fn symplectic_b_transform_blocks() {
        let w = TwoForm::from_terms(4, &[(0, 2, int(1)), (1, 3, int(2))]);
        let b = TwoForm::from_terms(4, &[(0, 1, int(1)), (2, 3, int(-3)), (0, 3, int(1))]);
        let y = b_transform(&GcAut::symplectic(&w).unwrap(), &b).unwrap();
        let wi = w.map().inverse().unwrap();
        let bm = b.map();
        assert_eq!(y.j1(), wi.mul(bm));
        assert_eq!(y.j2(), -wi.clone());
        assert_eq!(y.j3(), w.map().add(&bm.mul(&wi).mul(bm)));
        assert_eq!(y.j4(), -bm.mul(&wi));
    }

    #[test]
    fn complex_transform_blocks() {
        let j = standard_complex(2);
        let x = GcAut::complex(&j).unwrap();
        let b = TwoForm::from_terms(4, &[(0, 1, int(1)), (1, 3, int(2))]);
        let y = b_transform(&x, &b).unwrap();
        assert_eq!(y.j1(), j);
        assert!(y.j2().is_zero());
        assert_eq!(y.j3(), b.map().mul(&j).add(&j.transpose().mul(b.map())));
        assert_eq!(y.j4(), -j.transpose());
        let beta = BiVector::from_terms(4, &[(0, 2, int(1)), (2, 3, int(-1))]);
        let z = beta_transform(&x, &beta).unwrap();
        assert_eq!(z.j2(), (-j.mul(beta.map())).sub(&beta.map().mul(&j.transpose())));
        assert!(z.j3().is_zero());
    }

    #[test]
    fn b_transforms_compose_additively() {
        let x = GcAut::symplectic(&standard_symplectic(1)).unwrap();
        let y = b_transform(&b_transform(&x, &b2(2)).unwrap(), &b2(-5)).unwrap();
        assert_eq!(y, b_transform(&x, &b2(-3)).unwrap());
    }

    #[test]
    fn duality_interchanges_b_and_beta() {
        let x = GcAut::symplectic(&standard_symplectic(1))
            .unwrap()
            .direct_sum(&GcAut::complex(&standard_complex(1)).unwrap());
        let b = TwoForm::from_terms(4, &[(0, 2, int(1)), (1, 3, int(3))]);
        let lhs = b_transform(&x, &b).unwrap().dualize();
        let rhs = beta_transform(&x.dualize(), &b.as_bivector()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn b_transform_matches_spinor_side() {
        let x = GcAut::symplectic(&standard_symplectic(1)).unwrap();
        let b = b2(3);
        let y = b_transform(&x, &b).unwrap();
        let phi = b_transform_spinor(x.spinor().unwrap().rep(), &b);
        assert_eq!(spinor::annihilator_subspace(&phi).unwrap(), *y.eigenspace().subspace());
        assert_eq!(b_transform_e(&x.eigenspace(), &b), y.eigenspace());
    }

    #[test]
    fn t_table() {
        let w = standard_symplectic(2);
        let zero = analyze_t(&w, &Matrix::zeros(4, 4)).unwrap();
        assert!(zero.symplectic && zero.beta_symplectic && !zero.beta_complex);
        let one = analyze_t(&w, &Matrix::identity(4)).unwrap();
        assert!(!one.symplectic && one.beta_symplectic);
        let ty = classify_type(&one.structure).unwrap();
        assert!(ty.is_b_symplectic && ty.is_beta_symplectic);
        let a = Matrix::from_ints(&[&[0, 1], &[-1, 0]]);
        let t = Matrix::diag_blocks(&a, &a.transpose());
        let res = analyze_t(&w, &t).unwrap();
        assert!(res.beta_complex && !res.beta_symplectic);
        let bad = Matrix::from_ints(&[&[1, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
        assert_eq!(analyze_t(&w, &bad), Err(GcError::StarViolated));
    }

    #[test]
    fn untransformed_symplectic_type() {
        let x = GcAut::symplectic(&standard_symplectic(1)).unwrap();
        let t = classify_type(&x).unwrap();
        assert!(t.is_symplectic && t.is_b_symplectic && t.is_beta_symplectic);
        assert!(!t.is_complex && !t.is_b_complex && !t.is_beta_complex);
    }

    #[test]
    fn recover_examples() {
        let w = standard_symplectic(1).scale(&int(2));
        let x = GcAut::symplectic(&w).unwrap();
        assert_eq!(
            recover(&x).unwrap(),
            RecoveredData::Symplectic {
                omega: w.clone(),
                b: TwoForm::zero(2)
            }
        );
        let y = b_transform(&x, &b2(7)).unwrap();
        assert_eq!(
            recover(&y).unwrap(),
            RecoveredData::Symplectic { omega: w, b: b2(7) }
        );
        let j = standard_complex(1);
        let z = b_transform(&GcAut::complex(&j).unwrap(), &b2(1)).unwrap();
        match recover(&z).unwrap() {
            RecoveredData::Complex { j: jj, .. } => assert_eq!(jj, j),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn recover_rejects_mixed() {
        let x = GcAut::symplectic(&standard_symplectic(1))
            .unwrap()
            .direct_sum(&GcAut::complex(&standard_complex(1)).unwrap());
        assert!(matches!(recover(&x), Err(GcError::NotApplicable(_))));
    }

    #[test]
    fn assemble_degenerate_cases() {
        let w = standard_symplectic(1);
        let (a, _) = assemble_sum_transform(&w, &Matrix::zeros(0, 0), &TwoForm::zero(2)).unwrap();
        assert_eq!(a, GcAut::symplectic(&w).unwrap());
        let j = standard_complex(1);
        let (a, l) = assemble_sum_transform(&TwoForm::zero(0), &j, &TwoForm::zero(2)).unwrap();
        assert_eq!(a, GcAut::complex(&j).unwrap());
        assert_eq!(l, a.spinor().unwrap());
    }

    #[test]
    fn assemble_matches_transform_of_sum() {
        let w = standard_symplectic(1);
        let j = standard_complex(1);
        let b = TwoForm::from_terms(
            4,
            &[(0, 1, int(1)), (0, 2, int(2)), (1, 3, int(-1)), (2, 3, int(3)), (0, 3, int(1))],
        );
        let (a, l) = assemble_sum_transform(&w, &j, &b).unwrap();
        let sum = GcAut::symplectic(&w).unwrap().direct_sum(&GcAut::complex(&j).unwrap());
        assert_eq!(a, b_transform(&sum, &b).unwrap());
        assert_eq!(l, a.spinor().unwrap());
    }
}
