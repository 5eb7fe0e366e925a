//! Induced structures on subspaces and quotients, and the subspace classes
//! built from a generalized complex structure.
//!
//! A subspace `W ⊆ V` is parametrized by its reduced basis `w_1..w_d`; the
//! quotient `V/W` by the coordinates that are not pivots of that basis.

use num_traits::Zero;

use crate::gcs::{GcAut, PhaseSpace, TwoForm};
use crate::linalg::{dot, rat, Gq, Matrix, Rational, Subspace};
use crate::spinor::{self, Multivector, SpinorLine, StandardForm};
use crate::transforms::{beta_transform, recover, RecoveredData};
use crate::{BiVector, GcError, Result};

/// `E_W` or `E_{V/W}` with its verdict.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InducedStructure {
    pub ew: Subspace<Gq>,
    pub is_gc: bool,
    pub jw: Option<GcAut>,
    /// A nonzero vector of `E_W ∩ Ē_W` when the verdict is negative.
    pub witness: Option<Vec<Gq>>,
}

impl InducedStructure {
    fn from_e(ew: Subspace<Gq>) -> Result<Self> {
        let inter = ew.intersect(&ew.conjugate())?;
        if inter.is_zero() {
            let e = crate::gcs::IsotropicE::new(ew.clone())?;
            Ok(InducedStructure {
                jw: Some(e.to_aut()?),
                ew,
                is_gc: true,
                witness: None,
            })
        } else {
            Ok(InducedStructure {
                witness: inter.basis_vectors().into_iter().next(),
                ew,
                is_gc: false,
                jw: None,
            })
        }
    }
}

fn check_sub(j: &GcAut, w: &Subspace<Rational>) -> Result<()> {
    if w.ambient_dim() != j.n() {
        return Err(GcError::DimensionMismatch {
            expected: j.n(),
            found: w.ambient_dim(),
        });
    }
    Ok(())
}

/// Matrix whose columns are the basis vectors of `w`.
pub fn basis_columns(w: &Subspace<Rational>) -> Matrix<Rational> {
    w.basis().transpose()
}

/// `E_W = {(ρ(e), ρ*(e)|_W) : e ∈ E ∩ (W ⊕ V*)}`.
pub fn induced_e_on_subspace(e: &Subspace<Gq>, w: &Subspace<Rational>) -> Result<Subspace<Gq>> {
    let n = w.ambient_dim();
    let ps = PhaseSpace::new(n);
    let inter = e.intersect(&ps.with_all_covectors(&w.complexify()))?;
    let wc = w.complexify();
    let d = w.dim();
    let rows = inter
        .basis_vectors()
        .into_iter()
        .map(|x| {
            let mut r = wc.coordinates(&x[..n]);
            r.extend(wc.basis_vectors().iter().map(|wa| dot(&x[n..], wa)));
            r
        })
        .collect();
    Ok(Subspace::from_rows(2 * d, rows))
}

/// `E_{V/W} = {(π(ρ(e)), η(ρ*(e))) : e ∈ E ∩ (V ⊕ Ann(W))}` in the
/// non-pivot coordinates of `W`.
pub fn induced_e_on_quotient(e: &Subspace<Gq>, w: &Subspace<Rational>) -> Result<Subspace<Gq>> {
    let n = w.ambient_dim();
    let wc = w.complexify();
    let q = w.non_pivots();
    let target = Subspace::full(n).direct_sum(&wc.annihilator());
    let inter = e.intersect(&target)?;
    let rows = inter
        .basis_vectors()
        .into_iter()
        .map(|x| {
            let red = wc.reduce(&x[..n]);
            let mut r: Vec<Gq> = q.iter().map(|&i| red[i].clone()).collect();
            r.extend(q.iter().map(|&i| x[n + i].clone()));
            r
        })
        .collect();
    Ok(Subspace::from_rows(2 * q.len(), rows))
}

pub fn induce_on_subspace(j: &GcAut, w: &Subspace<Rational>) -> Result<InducedStructure> {
    check_sub(j, w)?;
    let ew = induced_e_on_subspace(j.eigenspace().subspace(), w)?;
    if ew.dim() != w.dim() {
        return Err(GcError::CrossCheck("induced subspace has the wrong dimension"));
    }
    InducedStructure::from_e(ew)
}

pub fn induce_on_quotient(j: &GcAut, w: &Subspace<Rational>) -> Result<InducedStructure> {
    check_sub(j, w)?;
    let ew = induced_e_on_quotient(j.eigenspace().subspace(), w)?;
    if ew.dim() != j.n() - w.dim() {
        return Err(GcError::CrossCheck("induced quotient has the wrong dimension"));
    }
    InducedStructure::from_e(ew)
}

pub fn is_gc_subspace(j: &GcAut, w: &Subspace<Rational>) -> Result<bool> {
    Ok(induce_on_subspace(j, w)?.is_gc)
}

pub fn is_gc_quotient(j: &GcAut, w: &Subspace<Rational>) -> Result<bool> {
    Ok(induce_on_quotient(j, w)?.is_gc)
}

/// Compares `τ_W(E_{V/W})` with `τ(E)_{Ann(W)}` after identifying the
/// chart of `Ann(W)` with the quotient chart.
pub fn quotient_duality_holds(j: &GcAut, w: &Subspace<Rational>) -> Result<bool> {
    check_sub(j, w)?;
    let quot = induced_e_on_quotient(j.eigenspace().subspace(), w)?;
    let ann = w.annihilator();
    let dual_e = j.eigenspace().dualize();
    let sub = induced_e_on_subspace(dual_e.subspace(), &ann)?;
    let m = ann.dim();
    let q = w.non_pivots();
    // rows of the Ann(W) basis restricted to the quotient coordinates
    let a_q = ann.basis().select_cols(&q).complexify();
    let a_q_inv = a_q
        .inverse()
        .ok_or(GcError::CrossCheck("annihilator chart is singular"))?;
    let a_q_t = a_q.transpose();
    let mapped: Vec<Vec<Gq>> = sub
        .basis_vectors()
        .into_iter()
        .map(|x| {
            let alpha = &x[..m];
            let beta = &x[m..];
            let mut r = a_q_t.mul_vec(alpha);
            r.extend(a_q_inv.mul_vec(beta));
            r
        })
        .collect();
    let lhs = Subspace::from_rows(2 * m, mapped);
    let swap = crate::gcs::swap_matrix(m).complexify();
    Ok(lhs == quot.image(&swap))
}

/// The adapted spinor of a subspace restriction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RestrictedSpinor {
    /// `exp(u) ∧ f_1 ∧ … ∧ f_k` with `f_{l+1}..f_k` spanning `Φ ∩ Ann(W)`.
    pub adapted: StandardForm,
    pub l: usize,
    pub phi_w: SpinorLine,
}

/// Pulls back an adapted representative of the ambient spinor to `W` and
/// checks it against `E_W`.
pub fn restrict_spinor(j: &GcAut, w: &Subspace<Rational>) -> Result<RestrictedSpinor> {
    check_sub(j, w)?;
    let e = j.eigenspace();
    let base = spinor::standard_form_of_e(e.subspace())?;
    let n = j.n();
    let phi_space = Subspace::from_rows(n, base.factors.clone());
    let psi = phi_space.intersect(&w.complexify().annihilator())?;
    let mut factors = phi_space.extend_basis_from(&psi);
    let l = factors.len();
    factors.extend(psi.basis_vectors());
    let adapted = StandardForm {
        u: base.u.clone(),
        factors,
        c: num_traits::One::one(),
    };
    if SpinorLine::new(adapted.expand())? != SpinorLine::new(base.expand())? {
        return Err(GcError::CrossCheck("adapted factors changed the spinor line"));
    }
    let lw = basis_columns(w);
    let mut phi_w = Multivector::exp(&adapted.u.pullback(&lw));
    for f in adapted.factors[..l].iter().rev() {
        let pulled = lw.complexify().transpose().mul_vec(f);
        phi_w = phi_w.wedge_one_form(&pulled);
    }
    let ew = induced_e_on_subspace(e.subspace(), w)?;
    if spinor::annihilator_subspace(&phi_w)? != ew {
        return Err(GcError::CrossCheck("restricted spinor does not define E_W"));
    }
    Ok(RestrictedSpinor {
        adapted,
        l,
        phi_w: SpinorLine::new(phi_w)?,
    })
}

fn stable_into(m: &Matrix<Rational>, from: &[Vec<Rational>], into: &Subspace<Rational>) -> bool {
    from.iter().all(|x| into.contains(&m.mul_vec(x)))
}

/// `J(W) ⊆ W ⊕ Ann(W)`.
pub fn is_generalized_isotropic(j: &GcAut, w: &Subspace<Rational>) -> Result<bool> {
    check_sub(j, w)?;
    let n = j.n();
    let target = w.direct_sum(&w.annihilator());
    let from: Vec<Vec<Rational>> = w
        .basis_vectors()
        .into_iter()
        .map(|mut v| {
            v.resize(2 * n, Rational::zero());
            v
        })
        .collect();
    Ok(stable_into(j.matrix(), &from, &target))
}

/// `J(Ann(W)) ⊆ W ⊕ Ann(W)`.
pub fn is_generalized_coisotropic(j: &GcAut, w: &Subspace<Rational>) -> Result<bool> {
    check_sub(j, w)?;
    let n = j.n();
    let target = w.direct_sum(&w.annihilator());
    let from: Vec<Vec<Rational>> = w
        .annihilator()
        .basis_vectors()
        .into_iter()
        .map(|f| {
            let mut v = vec![Rational::zero(); n];
            v.extend(f);
            v
        })
        .collect();
    Ok(stable_into(j.matrix(), &from, &target))
}

pub fn is_generalized_lagrangian(j: &GcAut, w: &Subspace<Rational>) -> Result<bool> {
    Ok(is_generalized_isotropic(j, w)? && is_generalized_coisotropic(j, w)?)
}

/// Block form of the graph condition: `K1 = J1|_W` and `K3 = J3|_W`.
fn graph_condition_blocks(j: &GcAut, w: &Subspace<Rational>, k: &GcAut) -> bool {
    let basis = w.basis_vectors();
    let (j1, j3, k1, k3) = (j.j1(), j.j3(), k.j1(), k.j3());
    for (a, wa) in basis.iter().enumerate() {
        let img = j1.mul_vec(wa);
        if !w.contains(&img) || w.coordinates(&img) != k1.col(a) {
            return false;
        }
        let f = j3.mul_vec(wa);
        for (b, wb) in basis.iter().enumerate() {
            if dot(&f, wb) != *k3.get(b, a) {
                return false;
            }
        }
    }
    true
}

/// The graph `{(x, Σ x_a w_a)}` of the inclusion, inside `W ⊕ V`.
pub fn inclusion_graph(w: &Subspace<Rational>) -> Subspace<Rational> {
    let d = w.dim();
    let rows = w
        .basis_vectors()
        .into_iter()
        .enumerate()
        .map(|(a, wa)| {
            let mut r = vec![Rational::zero(); d];
            r[a] = num_traits::One::one();
            r.extend(wa);
            r
        })
        .collect();
    Subspace::from_rows(d + w.ambient_dim(), rows)
}

/// Graph condition for `W` with structure `k`, evaluated from the block
/// equations and from isotropy of the inclusion graph; both must agree.
pub fn satisfies_graph_condition(j: &GcAut, w: &Subspace<Rational>, k: &GcAut) -> Result<bool> {
    check_sub(j, w)?;
    if k.n() != w.dim() {
        return Err(GcError::DimensionMismatch {
            expected: w.dim(),
            found: k.n(),
        });
    }
    let blocks = graph_condition_blocks(j, w, k);
    let graph = is_generalized_isotropic(&k.twisted_product(j), &inclusion_graph(w))?;
    if blocks != graph {
        return Err(GcError::CrossCheck("graph condition paths disagree"));
    }
    Ok(blocks)
}

/// `β = ½ J1 (J2' - J2)` for structures differing only in the `J2` block.
pub fn beta_between(j: &GcAut, alt: &GcAut) -> Result<BiVector> {
    if j.n() != alt.n() {
        return Err(GcError::DimensionMismatch {
            expected: j.n(),
            found: alt.n(),
        });
    }
    if j.j1() != alt.j1() || j.j3() != alt.j3() || j.j4() != alt.j4() {
        return Err(GcError::BlocksDiffer);
    }
    let m = j.j1().mul(&alt.j2().sub(&j.j2())).scale(&rat(1, 2));
    let beta = BiVector::new(m).map_err(|_| GcError::NoValidBeta)?;
    if !j.j1().mul(beta.map()).is_skew() || beta_transform(j, &beta)? != *alt {
        return Err(GcError::NoValidBeta);
    }
    Ok(beta)
}

/// `V = W ⊕ N` and `W ⊕ Ann(N)` is `J`-stable.
pub fn verify_split(j: &GcAut, w: &Subspace<Rational>, nc: &Subspace<Rational>) -> Result<bool> {
    check_sub(j, w)?;
    check_sub(j, nc)?;
    if w.dim() + nc.dim() != j.n() || !w.intersect(nc)?.is_zero() {
        return Ok(false);
    }
    let p = w.direct_sum(&nc.annihilator());
    Ok(stable_into(j.matrix(), &p.basis_vectors(), &p))
}

/// Structures on `W` and `N` read off the splitting, checked against the
/// induced structures and against the ambient one.
pub fn split_induced(
    j: &GcAut,
    w: &Subspace<Rational>,
    nc: &Subspace<Rational>,
) -> Result<(GcAut, GcAut)> {
    if !verify_split(j, w, nc)? {
        return Err(GcError::NotSplit);
    }
    let p = Matrix::hstack(&basis_columns(w), &basis_columns(nc));
    let p_inv = p.inverse().ok_or(GcError::NotSplit)?;
    let moved = j.transport(&p_inv)?;
    let (d, m) = (w.dim(), nc.dim());
    let n = d + m;
    let pick = |idx: &[usize]| {
        let mat = moved.matrix();
        Matrix::from_fn(idx.len(), idx.len(), |r, c| mat.get(idx[r], idx[c]).clone())
    };
    let w_idx: Vec<usize> = (0..d).chain(n..n + d).collect();
    let n_idx: Vec<usize> = (d..n).chain(n + d..2 * n).collect();
    let jw = GcAut::new(pick(&w_idx))?;
    let jn = GcAut::new(pick(&n_idx))?;
    if jw.direct_sum(&jn) != moved {
        return Err(GcError::CrossCheck("split structure is not a direct sum"));
    }
    if induce_on_subspace(j, w)?.jw.as_ref() != Some(&jw) || induce_on_subspace(j, nc)?.jw.as_ref() != Some(&jn) {
        return Err(GcError::CrossCheck("split structures differ from induced ones"));
    }
    Ok((jw, jn))
}

/// Complement `N` with `W ⊕ Ann(N)` stable, for B-symplectic and B-complex
/// structures.
pub fn find_split_complement(j: &GcAut, w: &Subspace<Rational>) -> Result<Option<Subspace<Rational>>> {
    check_sub(j, w)?;
    let candidate = match recover(j) {
        Ok(RecoveredData::Symplectic { omega, .. }) => omega_complement(&omega, w),
        Ok(RecoveredData::Complex { j: cj, .. }) => complex_complement(j, &cj, w)?,
        Err(GcError::NotApplicable(_)) => {
            return Err(GcError::Unsupported("split search needs a B-complex or B-symplectic structure"))
        }
        Err(e) => return Err(e),
    };
    match candidate {
        Some(nc) if verify_split(j, w, &nc)? => Ok(Some(nc)),
        _ => Ok(None),
    }
}

/// `{v : ω(w, v) = 0 ∀w ∈ W}`.
pub fn omega_complement(omega: &TwoForm, w: &Subspace<Rational>) -> Option<Subspace<Rational>> {
    let n = omega.dim();
    let rows: Vec<Vec<Rational>> = w.basis_vectors().iter().map(|x| omega.map().mul_vec(x)).collect();
    let nc = if rows.is_empty() {
        Subspace::full(n)
    } else {
        Matrix::from_rows(n, rows).kernel()
    };
    (nc.dim() + w.dim() == n && w.intersect(&nc).ok()?.is_zero()).then_some(nc)
}

/// Searches `N = {x + h x : x ∈ N₀}` with `N₀` the kernel of the averaged
/// projection onto `W`, `h: N₀ → W` commuting with `J` and `J3(W)` vanishing
/// on `N`. Both conditions are linear in `h`.
fn complex_complement(
    j: &GcAut,
    cj: &Matrix<Rational>,
    w: &Subspace<Rational>,
) -> Result<Option<Subspace<Rational>>> {
    let n = j.n();
    let d = w.dim();
    let wb = w.basis_vectors();
    if !wb.iter().all(|x| w.contains(&cj.mul_vec(x))) {
        return Ok(None);
    }
    // projection onto W along the coordinate complement
    let mut sigma = Matrix::zeros(n, n);
    for c in 0..n {
        let img = w.combine(&w.coordinates(&crate::linalg::unit::<Rational>(n, c)));
        for (r, x) in img.into_iter().enumerate() {
            sigma.set(r, c, x);
        }
    }
    let jinv = -cj.clone();
    let mut avg = Matrix::zeros(n, n);
    for k in 0..4u32 {
        avg = avg.add(&cj.pow(k).mul(&sigma).mul(&jinv.pow(k)));
    }
    let p = avg.scale(&rat(1, 4));
    let n0 = p.kernel();
    let m = n0.dim();
    if m + d != n || !n0.intersect(w)?.is_zero() {
        return Err(GcError::CrossCheck("averaged projection has the wrong kernel"));
    }
    let nb = n0.basis_vectors();
    // coordinates of J on W and on N₀
    let jw_coords: Vec<Vec<Rational>> = wb.iter().map(|x| w.coordinates(&cj.mul_vec(x))).collect();
    let jn_coords: Vec<Vec<Rational>> = nb.iter().map(|x| n0.coordinates(&cj.mul_vec(x))).collect();
    // unknown H[a][c], index a * m + c; equations H Jn = Jw H and J3(w_b)(n_c + H n_c) = 0
    let unknowns = d * m;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    for a in 0..d {
        for c in 0..m {
            // (H Jn)[a][c] - (Jw H)[a][c] = Σ_e H[a][e] Jn[e][c] - Σ_b Jw[a][b] H[b][c]
            let mut r = vec![Rational::zero(); unknowns];
            for e in 0..m {
                let v = r[a * m + e].clone() + &jn_coords[c][e];
                r[a * m + e] = v;
            }
            for b in 0..d {
                let v = r[b * m + c].clone() - &jw_coords[b][a];
                r[b * m + c] = v;
            }
            rows.push(r);
            rhs.push(Rational::zero());
        }
    }
    let j3 = j.j3();
    for wbv in &wb {
        let f = j3.mul_vec(wbv);
        for (c, nc) in nb.iter().enumerate() {
            let mut r = vec![Rational::zero(); unknowns];
            for (a, wa) in wb.iter().enumerate() {
                r[a * m + c] = dot(&f, wa);
            }
            rows.push(r);
            rhs.push(-dot(&f, nc));
        }
    }
    let h = if unknowns == 0 {
        if rhs.iter().all(|x| x.is_zero()) {
            Some(Vec::new())
        } else {
            None
        }
    } else if rows.is_empty() {
        Some(vec![Rational::zero(); unknowns])
    } else {
        Matrix::from_rows(unknowns, rows).solve(&rhs)
    };
    let Some(h) = h else { return Ok(None) };
    let rows: Vec<Vec<Rational>> = nb
        .iter()
        .enumerate()
        .map(|(c, x)| {
            let mut v = x.clone();
            for (a, wa) in wb.iter().enumerate() {
                let coef = &h[a * m + c];
                for (vi, wi) in v.iter_mut().zip(wa) {
                    *vi = vi.clone() + coef * wi;
                }
            }
            v
        })
        .collect();
    Ok(Some(Subspace::from_rows(n, rows)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcs::{standard_complex, standard_symplectic};
    use crate::linalg::int;
    use crate::transforms::b_transform;

    fn span(n: usize, rows: &[&[i64]]) -> Subspace<Rational> {
        Subspace::from_rows(n, rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    fn sympl4() -> GcAut {
        GcAut::symplectic(&standard_symplectic(2)).unwrap()
    }

    fn complex4() -> GcAut {
        GcAut::complex(&standard_complex(2)).unwrap()
    }

    #[test]
    fn complex_invariant_subspace_is_gc() {
        // J e1 = e3, J e3 = -e1
        let w = span(4, &[&[1, 0, 0, 0], &[0, 0, 1, 0]]);
        let ind = induce_on_subspace(&complex4(), &w).unwrap();
        assert!(ind.is_gc);
        assert_eq!(ind.jw.unwrap(), GcAut::complex(&standard_complex(1)).unwrap());
        let bad = span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let ind = induce_on_subspace(&complex4(), &bad).unwrap();
        assert!(!ind.is_gc);
        assert!(ind.witness.is_some());
    }

    #[test]
    fn symplectic_nondegenerate_subspace() {
        // ω(e1, e3) = 1 in the standard form
        let w = span(4, &[&[1, 0, 0, 0], &[0, 0, 1, 0]]);
        let ind = induce_on_subspace(&sympl4(), &w).unwrap();
        assert_eq!(ind.jw.unwrap(), GcAut::symplectic(&standard_symplectic(1)).unwrap());
        let iso = span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        assert!(!is_gc_subspace(&sympl4(), &iso).unwrap());
    }

    #[test]
    fn zero_quotient_is_ambient() {
        let j = sympl4();
        let ind = induce_on_quotient(&j, &Subspace::zero(4)).unwrap();
        assert_eq!(ind.jw.unwrap(), j);
        assert_eq!(induce_on_subspace(&j, &Subspace::full(4)).unwrap().jw.unwrap(), j);
    }

    #[test]
    fn quotient_duality_on_examples() {
        let j = b_transform(&sympl4(), &TwoForm::from_terms(4, &[(0, 1, int(1)), (1, 3, int(2))])).unwrap();
        for w in [span(4, &[&[1, 2, 0, 0]]), span(4, &[&[1, 0, 1, 0], &[0, 1, 0, -1]]), Subspace::zero(4)] {
            assert!(quotient_duality_holds(&j, &w).unwrap());
        }
    }

    #[test]
    fn classical_isotropic_classes() {
        let j = sympl4();
        let line = span(4, &[&[1, 0, 0, 0]]);
        assert!(is_generalized_isotropic(&j, &line).unwrap());
        assert!(!is_generalized_coisotropic(&j, &line).unwrap());
        let lag = span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        assert!(is_generalized_lagrangian(&j, &lag).unwrap());
        let hyper = span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]);
        assert!(is_generalized_coisotropic(&j, &hyper).unwrap());
        assert!(!is_generalized_isotropic(&j, &hyper).unwrap());
    }

    #[test]
    fn complex_classes_coincide_with_invariance() {
        let j = complex4();
        let inv = span(4, &[&[1, 0, 0, 0], &[0, 0, 1, 0]]);
        let not = span(4, &[&[1, 0, 0, 0]]);
        for (w, expect) in [(inv, true), (not, false)] {
            assert_eq!(is_generalized_isotropic(&j, &w).unwrap(), expect);
            assert_eq!(is_generalized_coisotropic(&j, &w).unwrap(), expect);
        }
    }

    #[test]
    fn zero_subspace_classes() {
        let z = Subspace::zero(4);
        assert!(is_generalized_isotropic(&sympl4(), &z).unwrap());
        assert!(!is_generalized_coisotropic(&sympl4(), &z).unwrap());
        assert!(is_generalized_coisotropic(&complex4(), &z).unwrap());
    }

    #[test]
    fn split_of_direct_sum() {
        let j = GcAut::symplectic(&standard_symplectic(1))
            .unwrap()
            .direct_sum(&GcAut::complex(&standard_complex(1)).unwrap());
        let w = span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let nc = span(4, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert!(verify_split(&j, &w, &nc).unwrap());
        let (jw, jn) = split_induced(&j, &w, &nc).unwrap();
        assert_eq!(jw, GcAut::symplectic(&standard_symplectic(1)).unwrap());
        assert_eq!(jn, GcAut::complex(&standard_complex(1)).unwrap());
        assert!(satisfies_graph_condition(&j, &w, &jw).unwrap());
    }

    #[test]
    fn symplectic_split_search() {
        let j = sympl4();
        let w = span(4, &[&[1, 0, 0, 0], &[0, 0, 1, 0]]);
        let nc = find_split_complement(&j, &w).unwrap().unwrap();
        assert_eq!(nc, span(4, &[&[0, 1, 0, 0], &[0, 0, 0, 1]]));
        let degenerate = span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        assert_eq!(find_split_complement(&j, &degenerate).unwrap(), None);
    }

    #[test]
    fn complex_split_search_finds_complement() {
        let j = complex4();
        let w = span(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        let nc = find_split_complement(&j, &w).unwrap().unwrap();
        assert!(verify_split(&j, &w, &nc).unwrap());
        split_induced(&j, &w, &nc).unwrap();
    }

    #[test]
    fn b_complex_split_needs_vanishing_cross_terms() {
        let cj = standard_complex(2);
        let w = span(4, &[&[1, 0, 0, 0], &[0, 0, 1, 0]]);
        let nc = span(4, &[&[0, 1, 0, 0], &[0, 0, 0, 1]]);
        // B pairs W only with itself: N stays a B-orthogonal J-invariant complement
        let b_ok = TwoForm::from_terms(4, &[(0, 2, int(3))]);
        let j_ok = b_transform(&GcAut::complex(&cj).unwrap(), &b_ok).unwrap();
        assert!(verify_split(&j_ok, &w, &nc).unwrap());
        // e1 ∧ e2 couples W and N
        let b_bad = TwoForm::from_terms(4, &[(0, 1, int(1))]);
        let j_bad = b_transform(&GcAut::complex(&cj).unwrap(), &b_bad).unwrap();
        assert!(!verify_split(&j_bad, &w, &nc).unwrap());
        // J3 pairs W with every complement
        assert_eq!(find_split_complement(&j_bad, &w).unwrap(), None);
        // a J-invariant B couples W and N but leaves J3 = 0
        let b_inv = TwoForm::from_terms(4, &[(0, 1, int(1)), (2, 3, int(1))]);
        let j_inv = b_transform(&GcAut::complex(&cj).unwrap(), &b_inv).unwrap();
        assert!(j_inv.j3().is_zero());
        assert!(verify_split(&j_inv, &w, &nc).unwrap());
    }

    #[test]
    fn unsupported_split_search() {
        let j = GcAut::symplectic(&standard_symplectic(1))
            .unwrap()
            .direct_sum(&GcAut::complex(&standard_complex(1)).unwrap());
        let w = span(4, &[&[1, 0, 0, 0]]);
        assert!(matches!(find_split_complement(&j, &w), Err(GcError::Unsupported(_))));
    }

    #[test]
    fn beta_between_examples() {
        let j = complex4();
        assert_eq!(beta_between(&j, &j).unwrap(), BiVector::zero(4));
        let beta = BiVector::from_terms(4, &[(0, 2, int(1)), (1, 3, int(1))]);
        let alt = beta_transform(&j, &beta).unwrap();
        let found = beta_between(&j, &alt).unwrap();
        assert_eq!(beta_transform(&j, &found).unwrap(), alt);
        assert_eq!(beta_between(&j, &sympl4()), Err(GcError::BlocksDiffer));
    }

    #[test]
    fn restrict_spinor_whole_space() {
        let j = b_transform(&sympl4(), &TwoForm::from_terms(4, &[(0, 3, int(1))])).unwrap();
        let r = restrict_spinor(&j, &Subspace::full(4)).unwrap();
        assert_eq!(r.phi_w, j.spinor().unwrap());
        let r = restrict_spinor(&complex4(), &span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]])).unwrap();
        assert_eq!(r.phi_w.annihilator().dim(), 2);
    }
}
