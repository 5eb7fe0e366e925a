//! The canonical subspaces `S` and `C`, the decomposition of a structure
//! into a B-transform of a symplectic plus a complex part, and the standard
//! counterexample structures.

use num_traits::{One, Zero};

use crate::gcs::{standard_symplectic, GcAut, TwoForm};
use crate::linalg::{int, Gq, Matrix, Rational, Subspace};
use crate::spinor;
use crate::subspaces::{
    basis_columns, induce_on_quotient, induce_on_subspace, is_gc_quotient, is_gc_subspace, omega_complement,
    satisfies_graph_condition, split_induced,
};
use crate::transforms::{b_transform, classify_type, recover, RecoveredData};
use crate::{GcError, Result};

fn rho(e: &Subspace<Gq>, n: usize) -> Subspace<Gq> {
    e.project(&(0..n).collect::<Vec<_>>())
}

/// `S` with `S_ℂ = ρ(E) ∩ ρ(Ē)`, without further checks.
pub fn s_subspace(x: &GcAut) -> Result<Subspace<Rational>> {
    let n = x.n();
    let e = x.eigenspace();
    let e = e.subspace();
    let s = rho(e, n).intersect(&rho(&e.conjugate(), n))?;
    s.to_real().ok_or(GcError::CrossCheck("S is not conjugation stable"))
}

/// [`s_subspace`], checked to be a GC subspace whose induced structure is
/// B-symplectic.
pub fn canonical_s(x: &GcAut) -> Result<Subspace<Rational>> {
    let s = s_subspace(x)?;
    let ind = induce_on_subspace(x, &s)?;
    let jw = ind.jw.ok_or(GcError::CrossCheck("S is not a GC subspace"))?;
    if !classify_type(&jw)?.is_b_symplectic {
        return Err(GcError::CrossCheck("structure induced on S is not B-symplectic"));
    }
    Ok(s)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CanonicalC {
    pub c: Subspace<Rational>,
    /// `J1|_C` in the basis of `c`.
    pub j: Matrix<Rational>,
}

/// `C` with `C_ℂ = (E ∩ V_ℂ) ⊕ (Ē ∩ V_ℂ)` and the complex structure `J1|_C`.
pub fn canonical_c(x: &GcAut) -> Result<CanonicalC> {
    let n = x.n();
    let ps = x.space();
    let e = x.eigenspace();
    let e = e.subspace();
    let v = ps.vectors::<Gq>();
    let cc = e.intersect(&v)?.sum(&e.conjugate().intersect(&v)?)?;
    let c = rho(&cc, n)
        .to_real()
        .ok_or(GcError::CrossCheck("C is not conjugation stable"))?;
    let j1 = x.j1();
    let basis = c.basis_vectors();
    let mut j = Matrix::zeros(c.dim(), c.dim());
    for (a, ca) in basis.iter().enumerate() {
        let img = j1.mul_vec(ca);
        if !c.contains(&img) {
            return Err(GcError::CrossCheck("C is not J1-stable"));
        }
        for (b, val) in c.coordinates(&img).into_iter().enumerate() {
            j.set(b, a, val);
        }
    }
    let k = GcAut::complex(&j)?;
    let quot = induce_on_quotient(x, &c)?;
    let jq = quot.jw.ok_or(GcError::CrossCheck("V/C is not a GC quotient"))?;
    if !classify_type(&jq)?.is_beta_symplectic {
        return Err(GcError::CrossCheck("V/C is not beta-symplectic"));
    }
    if !satisfies_graph_condition(x, &c, &k)? {
        return Err(GcError::CrossCheck("C fails the graph condition"));
    }
    Ok(CanonicalC { c, j })
}

/// `x = b_transform(transport(symplectic(ω) ⊕ complex(jw)), b)` where the
/// transport sends the coordinates to the bases of `s` then `w`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub s: Subspace<Rational>,
    pub omega: TwoForm,
    pub w: Subspace<Rational>,
    pub jw: Matrix<Rational>,
    pub b: TwoForm,
}

impl Decomposition {
    pub fn reassemble(&self) -> Result<GcAut> {
        let sum = GcAut::symplectic(&self.omega)?.direct_sum(&GcAut::complex(&self.jw)?);
        let p = Matrix::hstack(&basis_columns(&self.s), &basis_columns(&self.w));
        b_transform(&sum.transport(&p)?, &self.b)
    }
}

/// Splits off the B-field read from the spinor, then separates the
/// symplectic part `S` from its `Ω`-orthogonal complement.
pub fn decompose(x: &GcAut) -> Result<Decomposition> {
    let n = x.n();
    let sf = spinor::standard_form_of_e(x.eigenspace().subspace())?;
    let u = sf.u.two_form_part();
    let b0 = TwoForm::from_bilinear(u.real_part())?;
    let big_omega = TwoForm::from_bilinear(u.imag_part())?;
    let xp = b_transform(x, &b0)?;
    let s = canonical_s(&xp)?;
    let ls = basis_columns(&s);
    let omega = big_omega.pullback(&ls);
    if !omega.is_nondegenerate() {
        return Err(GcError::CrossCheck("Omega restricted to S is degenerate"));
    }
    let w = omega_complement(&big_omega, &s).ok_or(GcError::CrossCheck("Omega-complement of S is not a complement"))?;
    let (js, jw) = split_induced(&xp, &s, &w)?;
    if js != GcAut::symplectic(&omega)? {
        return Err(GcError::CrossCheck("structure on S is not the symplectic form of Omega"));
    }
    let (cj, bw) = match recover(&jw)? {
        RecoveredData::Complex { j, b } => (j, b),
        RecoveredData::Symplectic { .. } if w.dim() == 0 => (Matrix::zeros(0, 0), TwoForm::zero(0)),
        RecoveredData::Symplectic { .. } => return Err(GcError::CrossCheck("complement of S is not B-complex")),
    };
    // pull the B-field on W back along the projection V → W
    let p = Matrix::hstack(&ls, &basis_columns(&w));
    let p_inv = p.inverse().ok_or(GcError::CrossCheck("S and W do not span V"))?;
    let pi_w = p_inv.submatrix(s.dim(), n, 0, n);
    let b = bw.pullback(&pi_w).add(&b0.neg());
    let d = Decomposition {
        s,
        omega,
        w,
        jw: cj,
        b,
    };
    if d.reassemble()? != *x {
        return Err(GcError::CrossCheck("decomposition does not reassemble"));
    }
    Ok(d)
}

/// Structure with `ω = a1∧b1 + a2∧b2`, `B = a1∧a2 - b1∧b2` on the basis
/// `(p1, q1, p2, q2)`; `W = span{p1, q1}`.
pub struct SubNotQuot {
    pub omega: TwoForm,
    pub b: TwoForm,
    pub structure: GcAut,
    pub w: Subspace<Rational>,
}

pub const SUBNOTQUOT_BASIS: [&str; 4] = ["p1", "q1", "p2", "q2"];

pub fn build_subnotquot_example() -> Result<SubNotQuot> {
    let omega = TwoForm::from_terms(4, &[(0, 1, int(1)), (2, 3, int(1))]);
    let b = TwoForm::from_terms(4, &[(0, 2, int(1)), (1, 3, int(-1))]);
    let structure = b_transform(&GcAut::symplectic(&omega)?, &b)?;
    let w = Subspace::coordinate(4, [0, 1]);
    Ok(SubNotQuot {
        omega,
        b,
        structure,
        w,
    })
}

/// Verdicts for the sub/quotient example, with the witness `v` satisfying
/// `ι_v(B - iω) = 0` and `π(v) ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubNotQuotReport {
    pub is_gc_subspace: bool,
    pub is_gc_quotient: bool,
    pub witness: Vec<Gq>,
    pub witness_text: String,
}

pub fn subnotquot_report() -> Result<SubNotQuotReport> {
    let ex = build_subnotquot_example()?;
    let sub = is_gc_subspace(&ex.structure, &ex.w)?;
    let quot = induce_on_quotient(&ex.structure, &ex.w)?;
    let m = ex.b.map().complexify().sub(&ex.omega.map().complexify().scale(&Gq::i()));
    let wc = ex.w.complexify();
    let inter = quot.ew.intersect(&quot.ew.conjugate())?;
    let q = ex.w.non_pivots();
    let witness = m
        .kernel()
        .basis_vectors()
        .into_iter()
        .find(|v| {
            let red = wc.reduce(v);
            let mut x: Vec<Gq> = q.iter().map(|&i| red[i].clone()).collect();
            if x.iter().all(|c| c.is_zero()) {
                return false;
            }
            x.extend(std::iter::repeat_with(Gq::zero).take(q.len()));
            inter.contains(&x)
        })
        .ok_or(GcError::CrossCheck("no witness in the kernel of B - i omega"))?;
    Ok(SubNotQuotReport {
        is_gc_subspace: sub,
        is_gc_quotient: quot.is_gc,
        witness_text: format!("pi({})", format_vector(&witness, &SUBNOTQUOT_BASIS)),
        witness,
    })
}

fn format_coeff(c: &Gq) -> String {
    if *c == Gq::one() {
        String::new()
    } else if *c == Gq::i() {
        "i ".to_string()
    } else if *c == -Gq::i() {
        "-i ".to_string()
    } else if *c == -Gq::one() {
        "-".to_string()
    } else {
        format!("({c}) ")
    }
}

/// `p1+i q2` style rendering of a complex vector in a named basis.
pub fn format_vector(v: &[Gq], names: &[&str]) -> String {
    let mut out = String::new();
    for (c, name) in v.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let term = format!("{}{}", format_coeff(c), name);
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `A = [[J, I], [0, J]]` with `J = [[0, 1], [-1, 0]]`.
pub fn notquot_a() -> Matrix<Rational> {
    Matrix::from_ints(&[&[0, 1, 1, 0], &[-1, 0, 0, 1], &[0, 0, 0, 1], &[0, 0, -1, 0]])
}

/// B-transform of the standard symplectic form on `ℝ^(2h)` by `B = ωT`.
pub fn symplectic_with_t(half: usize, t: &Matrix<Rational>) -> Result<GcAut> {
    let omega = standard_symplectic(half);
    let b = TwoForm::new(omega.map().mul(t))?;
    b_transform(&GcAut::symplectic(&omega)?, &b)
}

pub struct NotQuot {
    pub t: Matrix<Rational>,
    pub structure: GcAut,
    pub kernel: Subspace<Rational>,
    pub image: Subspace<Rational>,
}

/// The dimension 8 structure with `T = diag(A, Aᵗ)`.
pub fn build_notquot_example() -> Result<NotQuot> {
    let a = notquot_a();
    let one_plus_a2 = Matrix::identity(4).add(&a.mul(&a));
    let j2 = Matrix::from_ints(&[&[0, 1], &[-1, 0]]).scale(&int(2));
    let expected = Matrix::block(&Matrix::zeros(2, 2), &j2, &Matrix::zeros(2, 2), &Matrix::zeros(2, 2));
    if one_plus_a2 != expected {
        return Err(GcError::CrossCheck("1 + A^2 is not the expected nilpotent block"));
    }
    let t = Matrix::diag_blocks(&a, &a.transpose());
    let structure = symplectic_with_t(4, &t)?;
    let m = Matrix::identity(8).add(&t.mul(&t));
    let kernel = m.kernel();
    let image = Subspace::from_matrix(&m.transpose());
    if kernel.intersect(&image)?.is_zero() {
        return Err(GcError::CrossCheck("kernel and image of 1 + T^2 meet trivially"));
    }
    let omega = standard_symplectic(4);
    if omega.pullback(&basis_columns(&kernel)).is_nondegenerate() {
        return Err(GcError::CrossCheck("omega is nondegenerate on the kernel"));
    }
    Ok(NotQuot {
        t,
        structure,
        kernel,
        image,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotQuotReport {
    pub dim_c: usize,
    pub c_is_kernel: bool,
    pub omega_degenerate_on_c: bool,
    pub kernel_orthogonal_to_image: bool,
    pub c_is_gc_subspace: bool,
    pub quotient_is_gc: bool,
    pub quotient_is_beta_symplectic: bool,
}

pub fn notquot_report() -> Result<NotQuotReport> {
    let ex = build_notquot_example()?;
    let c = canonical_c(&ex.structure)?;
    let omega = standard_symplectic(4);
    let orth = ex
        .kernel
        .basis_vectors()
        .iter()
        .all(|k| ex.image.basis_vectors().iter().all(|i| omega.eval(k, i).is_zero()));
    let quot = induce_on_quotient(&ex.structure, &c.c)?;
    let beta_sympl = match &quot.jw {
        Some(j) => classify_type(j)?.is_beta_symplectic,
        None => false,
    };
    Ok(NotQuotReport {
        dim_c: c.c.dim(),
        c_is_kernel: c.c == ex.kernel,
        omega_degenerate_on_c: !omega.pullback(&basis_columns(&c.c)).is_nondegenerate(),
        kernel_orthogonal_to_image: orth,
        c_is_gc_subspace: is_gc_subspace(&ex.structure, &c.c)?,
        quotient_is_gc: is_gc_quotient(&ex.structure, &c.c)?,
        quotient_is_beta_symplectic: beta_sympl,
    })
}

pub struct GraphNotSub {
    pub structure: GcAut,
    pub w: Subspace<Rational>,
    pub k: GcAut,
}

/// `T = diag(A, Aᵗ)` with `A² = -1` on `ℝ⁴`, `W = span{e1, e2}` carrying
/// the complex structure `T|_W = A`.
pub fn build_graphnotsub_example() -> Result<GraphNotSub> {
    let a = Matrix::from_ints(&[&[0, 1], &[-1, 0]]);
    let t = Matrix::diag_blocks(&a, &a.transpose());
    let structure = symplectic_with_t(2, &t)?;
    let w = Subspace::coordinate(4, [0, 1]);
    let k = GcAut::complex(&a)?;
    Ok(GraphNotSub { structure, w, k })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphNotSubReport {
    pub satisfies_graph_condition: bool,
    pub is_gc_subspace: bool,
    pub structure_is_b_symplectic: bool,
}

pub fn graphnotsub_report() -> Result<GraphNotSubReport> {
    let ex = build_graphnotsub_example()?;
    Ok(GraphNotSubReport {
        satisfies_graph_condition: satisfies_graph_condition(&ex.structure, &ex.w, &ex.k)?,
        is_gc_subspace: is_gc_subspace(&ex.structure, &ex.w)?,
        structure_is_b_symplectic: classify_type(&ex.structure)?.is_b_symplectic,
    })
}

/// True when every probe that is a GC subspace with B-symplectic induced
/// structure lies inside `s`.
pub fn s_contains_probes(x: &GcAut, s: &Subspace<Rational>, probes: &[Subspace<Rational>]) -> Result<bool> {
    for p in probes {
        let ind = induce_on_subspace(x, p)?;
        if let Some(j) = ind.jw {
            if classify_type(&j)?.is_b_symplectic && !p.is_subspace_of(s) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True when every probe `P` with `V/P` a beta-symplectic GC quotient
/// contains `c`.
pub fn c_inside_probes(x: &GcAut, c: &Subspace<Rational>, probes: &[Subspace<Rational>]) -> Result<bool> {
    for p in probes {
        let ind = induce_on_quotient(x, p)?;
        if let Some(j) = ind.jw {
            if classify_type(&j)?.is_beta_symplectic && !c.is_subspace_of(p) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
