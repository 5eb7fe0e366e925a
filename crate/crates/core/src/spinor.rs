//! Exterior algebra `⋀•V_ℂ*`, the Clifford action of `V ⊕ V*` on it, and the
//! correspondence between pure spinor lines and maximal isotropic subspaces.
//!
//! A multivector is stored densely: entry `mask` holds the coefficient of
//! `f_{i_1} ∧ … ∧ f_{i_k}` where `i_1 < … < i_k` are the set bits of `mask`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use crate::gcs::{is_maximal_isotropic, TwoForm};
use crate::linalg::{Field, Gq, Matrix, Rational, Subspace};
use crate::{GcError, Result};

/// Above this dimension the brute-force uniqueness check in
/// [`spinor_from_e`] is skipped; the annihilator check still runs.
const JOINT_KERNEL_MAX_N: usize = 5;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Multivector {
    n: usize,
    c: Vec<Gq>,
}

fn sign_of_merge(a: usize, b: usize) -> bool {
    // true when moving b's factors past a's costs an odd permutation
    let mut swaps = 0u32;
    let mut bb = b;
    while bb != 0 {
        let j = bb.trailing_zeros();
        swaps += (a >> (j + 1)).count_ones();
        bb &= bb - 1;
    }
    swaps % 2 == 1
}

fn lower_bits(mask: usize, i: usize) -> u32 {
    (mask & ((1usize << i) - 1)).count_ones()
}

/// Index list of a mask, 1-based.
pub fn mask_indices(mask: usize) -> Vec<usize> {
    (0..usize::BITS as usize)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i + 1)
        .collect()
}

fn lex_cmp(a: usize, b: usize) -> Ordering {
    mask_indices(a).cmp(&mask_indices(b))
}

impl Multivector {
    pub fn zero(n: usize) -> Self {
        assert!(n < 24, "multivector dimension too large");
        Multivector {
            n,
            c: vec![Gq::zero(); 1 << n],
        }
    }

    pub fn scalar(n: usize, s: Gq) -> Self {
        let mut m = Multivector::zero(n);
        m.c[0] = s;
        m
    }

    pub fn one(n: usize) -> Self {
        Multivector::scalar(n, Gq::one())
    }

    /// `f_{i_1} ∧ …` for 1-based indices (any order, sign applied).
    pub fn monomial(n: usize, indices: &[usize], coeff: Gq) -> Result<Self> {
        let mut out = Multivector::scalar(n, coeff);
        for &i in indices.iter().rev() {
            if i == 0 || i > n {
                return Err(GcError::DimensionMismatch { expected: n, found: i });
            }
            out = out.wedge_one_form(&unit_form(n, i - 1));
        }
        Ok(out)
    }

    /// The 1-form `Σ c_i f_i`.
    pub fn from_one_form(c: &[Gq]) -> Self {
        let n = c.len();
        let mut m = Multivector::zero(n);
        for (i, x) in c.iter().enumerate() {
            m.c[1 << i] = x.clone();
        }
        m
    }

    /// `Σ_{i<j} b[i][j] f_i ∧ f_j`.
    pub fn from_two_form_coeffs(b: &Matrix<Gq>) -> Self {
        let n = b.rows();
        let mut m = Multivector::zero(n);
        for i in 0..n {
            for j in i + 1..n {
                m.c[(1 << i) | (1 << j)] = b.get(i, j).clone();
            }
        }
        m
    }

    /// Real two-form as a multivector.
    pub fn from_two_form(b: &TwoForm) -> Self {
        b.to_multivector()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Gq] {
        &self.c
    }

    pub fn coeff(&self, mask: usize) -> &Gq {
        &self.c[mask]
    }

    pub fn set_coeff(&mut self, mask: usize, v: Gq) {
        self.c[mask] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// Nonzero terms as `(mask, coeff)` in lexicographic order of index lists.
    pub fn terms(&self) -> Vec<(usize, Gq)> {
        let mut t: Vec<(usize, Gq)> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(m, x)| (m, x.clone()))
            .collect();
        t.sort_by(|a, b| lex_cmp(a.0, b.0));
        t
    }

    pub fn top(&self) -> &Gq {
        &self.c[self.c.len() - 1]
    }

    fn check(&self, o: &Multivector) {
        assert_eq!(self.n, o.n, "multivector dimension mismatch");
    }

    pub fn add(&self, o: &Multivector) -> Multivector {
        self.check(o);
        Multivector {
            n: self.n,
            c: self.c.iter().zip(&o.c).map(|(a, b)| a.clone() + b).collect(),
        }
    }

    pub fn sub(&self, o: &Multivector) -> Multivector {
        self.check(o);
        Multivector {
            n: self.n,
            c: self.c.iter().zip(&o.c).map(|(a, b)| a.clone() - b).collect(),
        }
    }

    pub fn scale(&self, s: &Gq) -> Multivector {
        Multivector {
            n: self.n,
            c: self.c.iter().map(|a| a.clone() * s).collect(),
        }
    }

    pub fn neg(&self) -> Multivector {
        self.scale(&-Gq::one())
    }

    pub fn conj(&self) -> Multivector {
        Multivector {
            n: self.n,
            c: self.c.iter().map(|a| a.conj()).collect(),
        }
    }

    /// Degree-`j` component.
    pub fn graded(&self, j: usize) -> Multivector {
        let mut out = Multivector::zero(self.n);
        for (m, x) in self.c.iter().enumerate() {
            if m.count_ones() as usize == j {
                out.c[m] = x.clone();
            }
        }
        out
    }

    /// `Some(0)` for even, `Some(1)` for odd, `None` for mixed parity or zero.
    pub fn parity(&self) -> Option<u32> {
        let mut seen = None;
        for (m, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let p = m.count_ones() % 2;
            match seen {
                None => seen = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        seen
    }

    pub fn wedge(&self, o: &Multivector) -> Multivector {
        self.check(o);
        let mut out = Multivector::zero(self.n);
        for (a, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in o.c.iter().enumerate() {
                if a & b != 0 || y.is_zero() {
                    continue;
                }
                let t = x.clone() * y;
                let cur = std::mem::replace(&mut out.c[a | b], Gq::zero());
                out.c[a | b] = if sign_of_merge(a, b) { cur - &t } else { cur + &t };
            }
        }
        out
    }

    /// `f ∧ φ` for a 1-form `f` given by coefficients.
    pub fn wedge_one_form(&self, f: &[Gq]) -> Multivector {
        assert_eq!(f.len(), self.n, "one-form length mismatch");
        let mut out = Multivector::zero(self.n);
        for (m, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, fi) in f.iter().enumerate() {
                if fi.is_zero() || m >> i & 1 == 1 {
                    continue;
                }
                let t = fi.clone() * x;
                let k = m | (1 << i);
                let cur = std::mem::replace(&mut out.c[k], Gq::zero());
                out.c[k] = if lower_bits(m, i) % 2 == 1 { cur - &t } else { cur + &t };
            }
        }
        out
    }

    /// Interior product `ι_v φ`.
    pub fn contract(&self, v: &[Gq]) -> Multivector {
        assert_eq!(v.len(), self.n, "vector length mismatch");
        let mut out = Multivector::zero(self.n);
        for (m, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, vi) in v.iter().enumerate() {
                if vi.is_zero() || m >> i & 1 == 0 {
                    continue;
                }
                let t = vi.clone() * x;
                let k = m & !(1 << i);
                let cur = std::mem::replace(&mut out.c[k], Gq::zero());
                out.c[k] = if lower_bits(m, i) % 2 == 1 { cur - &t } else { cur + &t };
            }
        }
        out
    }

    /// Degree-1 part as a coefficient vector.
    pub fn one_form_part(&self) -> Vec<Gq> {
        (0..self.n).map(|i| self.c[1 << i].clone()).collect()
    }

    /// Degree-2 part as a skew coefficient matrix `b[i][j]` (`i < j` entries
    /// equal the coefficient of `f_i ∧ f_j`).
    pub fn two_form_part(&self) -> Matrix<Gq> {
        let n = self.n;
        let mut b = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                let x = self.c[(1 << i) | (1 << j)].clone();
                b.set(j, i, -x.clone());
                b.set(i, j, x);
            }
        }
        b
    }

    /// `exp(u) = Σ u^k / k!` for a 2-form `u` (any multivector works, but
    /// only even elements commute as the formula assumes).
    pub fn exp(u: &Multivector) -> Multivector {
        let mut acc = Multivector::one(u.n);
        let mut term = Multivector::one(u.n);
        for k in 1..=u.n / 2 + 1 {
            term = term.wedge(u).scale(&Gq::from(Rational::one() / crate::linalg::int(k as i64)));
            if term.is_zero() {
                break;
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// `u^p`.
    pub fn power(&self, p: usize) -> Multivector {
        let mut acc = Multivector::one(self.n);
        for _ in 0..p {
            acc = acc.wedge(self);
        }
        acc
    }

    /// Multiplies degree `j` by `(-1)^{j(j-1)/2}`.
    pub fn reversal(&self) -> Multivector {
        let mut out = self.clone();
        for (m, x) in out.c.iter_mut().enumerate() {
            let j = m.count_ones() as usize;
            if (j * (j.saturating_sub(1)) / 2) % 2 == 1 {
                *x = -x.clone();
            }
        }
        out
    }

    /// Pullback along `j: W → V` given as an `n × d` matrix (columns are the
    /// images of the basis of `W`).
    pub fn pullback(&self, l: &Matrix<Rational>) -> Multivector {
        assert_eq!(l.rows(), self.n, "pullback: shape mismatch");
        let d = l.cols();
        let lc = l.complexify();
        let pulled: Vec<Vec<Gq>> = (0..self.n).map(|i| lc.row(i).to_vec()).collect();
        let mut out = Multivector::zero(d);
        for (m, x) in self.c.iter().enumerate() {
            if x.is_zero() || m.count_ones() as usize > d {
                continue;
            }
            let mut t = Multivector::scalar(d, x.clone());
            for (i, f) in pulled.iter().enumerate().rev() {
                if m >> i & 1 == 1 {
                    t = t.wedge_one_form(f);
                    if t.is_zero() {
                        break;
                    }
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// `π*φ` for the projection of `ℝ^total` onto coordinates
    /// `offset..offset+n`.
    pub fn embed(&self, offset: usize, total: usize) -> Multivector {
        assert!(offset + self.n <= total, "embedding out of range");
        let mut out = Multivector::zero(total);
        for (m, x) in self.c.iter().enumerate() {
            out.c[m << offset] = x.clone();
        }
        out
    }

    /// First nonzero coefficient in lexicographic order.
    pub fn leading(&self) -> Option<(usize, Gq)> {
        self.terms().into_iter().next()
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = terms
            .iter()
            .map(|(m, c)| {
                let idx = mask_indices(*m);
                if idx.is_empty() {
                    format!("({c})")
                } else {
                    let w: Vec<String> = idx.iter().map(|i| format!("f{i}")).collect();
                    format!("({c}){}", w.join("^"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn unit_form(n: usize, i: usize) -> Vec<Gq> {
    let mut v = vec![Gq::zero(); n];
    v[i] = Gq::one();
    v
}

/// `(v + f)·φ = ι_v φ + f ∧ φ`.
pub fn clifford_act(x: &[Gq], phi: &Multivector) -> Result<Multivector> {
    let n = phi.n;
    if x.len() != 2 * n {
        return Err(GcError::DimensionMismatch {
            expected: 2 * n,
            found: x.len(),
        });
    }
    Ok(phi.contract(&x[..n]).add(&phi.wedge_one_form(&x[n..])))
}

/// `{x : x·φ = 0}`.
pub fn annihilator_subspace(phi: &Multivector) -> Result<Subspace<Gq>> {
    if phi.is_zero() {
        return Err(GcError::ZeroSpinor);
    }
    let n = phi.n;
    let cols: Vec<Multivector> = (0..n)
        .map(|i| phi.contract(&unit_form(n, i)))
        .chain((0..n).map(|i| phi.wedge_one_form(&unit_form(n, i))))
        .collect();
    // keep only rows that are not identically zero
    let rows: Vec<Vec<Gq>> = (0..1usize << n)
        .filter(|&m| cols.iter().any(|c| !c.c[m].is_zero()))
        .map(|m| cols.iter().map(|c| c.c[m].clone()).collect())
        .collect();
    if rows.is_empty() {
        return Ok(Subspace::full(2 * n));
    }
    Ok(Matrix::from_rows(2 * n, rows).kernel())
}

pub fn is_pure(phi: &Multivector) -> Result<bool> {
    Ok(annihilator_subspace(phi)?.dim() == phi.n)
}

/// A nonzero spinor up to scale. The stored representative has leading
/// coefficient 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpinorLine {
    rep: Multivector,
}

impl SpinorLine {
    pub fn new(phi: Multivector) -> Result<Self> {
        let (_, lead) = phi.leading().ok_or(GcError::ZeroSpinor)?;
        let inv = Gq::one() / &lead;
        Ok(SpinorLine { rep: phi.scale(&inv) })
    }

    pub fn rep(&self) -> &Multivector {
        &self.rep
    }

    pub fn n(&self) -> usize {
        self.rep.n
    }

    pub fn contains(&self, phi: &Multivector) -> bool {
        match SpinorLine::new(phi.clone()) {
            Ok(l) => l == *self,
            Err(_) => false,
        }
    }

    pub fn annihilator(&self) -> Subspace<Gq> {
        annihilator_subspace(&self.rep).expect("nonzero representative")
    }
}

/// `c · exp(u) ∧ f_1 ∧ … ∧ f_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardForm {
    pub u: Multivector,
    pub factors: Vec<Vec<Gq>>,
    pub c: Gq,
}

impl StandardForm {
    pub fn n(&self) -> usize {
        self.u.n
    }

    pub fn k(&self) -> usize {
        self.factors.len()
    }

    pub fn wedge_factors(&self) -> Multivector {
        let mut f = Multivector::one(self.n());
        for x in self.factors.iter().rev() {
            f = f.wedge_one_form(x);
        }
        f
    }

    pub fn expand(&self) -> Multivector {
        Multivector::exp(&self.u)
            .wedge(&self.wedge_factors())
            .scale(&self.c)
    }

    /// The form for the twisted structure: `u ↦ -u`.
    pub fn twist(&self) -> StandardForm {
        StandardForm {
            u: self.u.neg(),
            factors: self.factors.clone(),
            c: self.c.clone(),
        }
    }
}

/// Standard form with `c = 1` read off a maximal isotropic subspace.
///
/// The rows of the reduced basis with a pivot among the vector coordinates
/// are lifts `(r_a, g_a)` of a basis of `ρ(E)`; the rest span `E ∩ V*`.
/// `u` is supported on the pivot coordinates of `ρ(E)` with
/// `u(r_a, r_b) = -g_a(r_b)`.
pub fn standard_form_of_e(e: &Subspace<Gq>) -> Result<StandardForm> {
    if !is_maximal_isotropic(e) {
        return Err(GcError::InvalidEigenspace("not maximal isotropic"));
    }
    let n = e.ambient_dim() / 2;
    let mut lifts = Vec::new();
    let mut factors = Vec::new();
    for (row, &p) in e.basis_vectors().into_iter().zip(e.pivots()) {
        if p < n {
            lifts.push((p, row));
        } else {
            factors.push(row[n..].to_vec());
        }
    }
    let mut b = Matrix::<Gq>::zeros(n, n);
    for (a, (pa, ra)) in lifts.iter().enumerate() {
        for (pb, rb) in lifts.iter().skip(a + 1) {
            let g_a = &ra[n..];
            let val = -crate::linalg::dot(g_a, &rb[..n]);
            b.set(*pa, *pb, val.clone());
            b.set(*pb, *pa, -val);
        }
    }
    Ok(StandardForm {
        u: Multivector::from_two_form_coeffs(&b),
        factors,
        c: Gq::one(),
    })
}

/// Standard form of a pure spinor; `expand()` reproduces `phi` exactly.
pub fn standard_form(phi: &Multivector) -> Result<StandardForm> {
    let e = annihilator_subspace(phi)?;
    if e.dim() != phi.n {
        return Err(GcError::NotPure);
    }
    let mut sf = standard_form_of_e(&e)?;
    let base = sf.expand();
    let (m, lead) = base.leading().ok_or(GcError::CrossCheck("standard form vanished"))?;
    sf.c = phi.c[m].clone() / &lead;
    if sf.expand() != *phi {
        return Err(GcError::CrossCheck("spinor is not a multiple of its standard form"));
    }
    Ok(sf)
}

/// `{v - ι_v u + f : v ∈ Ann(Φ), f ∈ Φ}` with `Φ = span(factors)`.
pub fn e_from_standard_form(sf: &StandardForm) -> Subspace<Gq> {
    let n = sf.n();
    let phi = Subspace::from_rows(n, sf.factors.clone());
    let mut rows = Vec::new();
    for v in phi.annihilator().basis_vectors() {
        let w = sf.u.contract(&v).one_form_part();
        let mut r = v;
        r.extend(w.into_iter().map(|x| -x));
        rows.push(r);
    }
    for f in phi.basis_vectors() {
        let mut r = vec![Gq::zero(); n];
        r.extend(f);
        rows.push(r);
    }
    Subspace::from_rows(2 * n, rows)
}

/// The pure spinor line annihilated by a maximal isotropic `e`.
pub fn spinor_from_e(e: &Subspace<Gq>) -> Result<SpinorLine> {
    let phi = standard_form_of_e(e)?.expand();
    if annihilator_subspace(&phi)? != *e {
        return Err(GcError::CrossCheck("constructed spinor has the wrong annihilator"));
    }
    let n = e.ambient_dim() / 2;
    if n <= JOINT_KERNEL_MAX_N {
        let k = joint_kernel(e)?;
        if k.dim() != 1 || !k.contains(phi.coeffs()) {
            return Err(GcError::CrossCheck("joint kernel is not the constructed line"));
        }
    }
    SpinorLine::new(phi)
}

/// `{φ : x·φ = 0 ∀x ∈ e}` computed by brute force.
pub fn joint_kernel(e: &Subspace<Gq>) -> Result<Subspace<Gq>> {
    let n = e.ambient_dim() / 2;
    let size = 1usize << n;
    let mut rows = Vec::new();
    for x in e.basis_vectors() {
        let images: Vec<Multivector> = (0..size)
            .map(|m| {
                let mut b = Multivector::zero(n);
                b.c[m] = Gq::one();
                clifford_act(&x, &b)
            })
            .collect::<Result<_>>()?;
        for r in 0..size {
            let row: Vec<Gq> = images.iter().map(|im| im.c[r].clone()).collect();
            if row.iter().any(|v| !v.is_zero()) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Ok(Subspace::full(size));
    }
    Ok(Matrix::from_rows(size, rows).kernel())
}

/// Top coefficient of `rev(α) ∧ β`.
pub fn mukai(alpha: &Multivector, beta: &Multivector) -> Gq {
    alpha.check(beta);
    let top = (1usize << alpha.n) - 1;
    let r = alpha.reversal();
    let mut acc = Gq::zero();
    for (a, x) in r.c.iter().enumerate() {
        let y = &beta.c[top & !a];
        if x.is_zero() || y.is_zero() {
            continue;
        }
        let t = x.clone() * y;
        acc = if sign_of_merge(a, top & !a) { acc - &t } else { acc + &t };
    }
    acc
}

/// Both sides of the Mukai identity for a standard form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MukaiCheck {
    /// `⟨φ, φ̄⟩`.
    pub pairing: Gq,
    /// Top coefficient of `(u - ū)^p ∧ f_1 ∧ … ∧ f_k ∧ f̄_1 ∧ … ∧ f̄_k`.
    pub product: Gq,
    /// `|c|² (-1)^{k(k-1)/2} (-1)^p / p!`.
    pub constant: Gq,
}

impl MukaiCheck {
    pub fn vanishing_agrees(&self) -> bool {
        self.pairing.is_zero() == self.product.is_zero()
    }

    pub fn holds(&self) -> bool {
        self.pairing == self.constant.clone() * &self.product
    }
}

pub fn check_mukai_formula(sf: &StandardForm) -> Result<MukaiCheck> {
    let n = sf.n();
    if n % 2 != 0 {
        return Err(GcError::OddDimension(n));
    }
    let phi = sf.expand();
    let pairing = mukai(&phi, &phi.conj());
    let k = sf.k();
    let (product, constant) = if 2 * k > n {
        (Gq::zero(), Gq::zero())
    } else {
        let p = n / 2 - k;
        let f = sf.wedge_factors();
        let prod = sf.u.sub(&sf.u.conj()).power(p).wedge(&f).wedge(&f.conj());
        let mut fact = Rational::one();
        for i in 2..=p {
            fact *= crate::linalg::int(i as i64);
        }
        let mut s = Rational::one() / fact;
        if (k * k.saturating_sub(1) / 2 + p) % 2 == 1 {
            s = -s;
        }
        let cc = sf.c.clone() * sf.c.conj();
        (prod.top().clone(), cc * Gq::from(s))
    };
    Ok(MukaiCheck {
        pairing,
        product,
        constant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, lift_vec};

    fn g(re: i64, im: i64) -> Gq {
        Gq::from_ints(re, im)
    }

    fn mono(n: usize, idx: &[usize]) -> Multivector {
        Multivector::monomial(n, idx, Gq::one()).unwrap()
    }

    fn omega2() -> Multivector {
        mono(2, &[1, 2])
    }

    fn vec_c(v: &[(i64, i64)]) -> Vec<Gq> {
        v.iter().map(|&(a, b)| g(a, b)).collect()
    }

    #[test]
    fn monomial_order_sign() {
        assert_eq!(mono(2, &[2, 1]), mono(2, &[1, 2]).neg());
        assert!(mono(2, &[1, 1]).is_zero());
    }

    #[test]
    fn clifford_examples() {
        // e_1 · (f_1 ∧ f_2) = f_2
        let x = vec_c(&[(1, 0), (0, 0), (0, 0), (0, 0)]);
        assert_eq!(clifford_act(&x, &omega2()).unwrap(), mono(2, &[2]));
        // f_1 · f_2 = f_1 ∧ f_2
        let y = vec_c(&[(0, 0), (0, 0), (1, 0), (0, 0)]);
        assert_eq!(clifford_act(&y, &mono(2, &[2])).unwrap(), omega2());
    }

    #[test]
    fn clifford_square_is_scalar() {
        let x = vec_c(&[(1, 2), (0, -1), (3, 0), (2, 1)]);
        let phi = Multivector::one(2)
            .add(&mono(2, &[1]).scale(&g(2, -1)))
            .add(&omega2().scale(&g(0, 5)));
        let twice = clifford_act(&x, &clifford_act(&x, &phi).unwrap()).unwrap();
        // x·x = f(v) = -Q(x)
        let q = crate::gcs::quadratic(&x);
        assert_eq!(twice, phi.scale(&-q));
    }

    #[test]
    fn annihilator_examples() {
        let ps = crate::gcs::PhaseSpace::new(2);
        assert_eq!(annihilator_subspace(&Multivector::one(2)).unwrap(), ps.vectors());
        assert_eq!(annihilator_subspace(&omega2()).unwrap(), ps.covectors());
        assert_eq!(annihilator_subspace(&Multivector::zero(2)), Err(GcError::ZeroSpinor));
    }

    #[test]
    fn exp_i_omega_annihilator_is_graph() {
        let phi = Multivector::exp(&omega2().scale(&Gq::i()));
        assert_eq!(phi, Multivector::one(2).add(&omega2().scale(&Gq::i())));
        // v - ι_v(iω): e_1 ↦ (1, 0, 0, -i), e_2 ↦ (0, 1, i, 0)
        let expected = Subspace::from_rows(
            4,
            vec![vec_c(&[(1, 0), (0, 0), (0, 0), (0, -1)]), vec_c(&[(0, 0), (1, 0), (0, 1), (0, 0)])],
        );
        assert_eq!(annihilator_subspace(&phi).unwrap(), expected);
        assert!(is_pure(&phi).unwrap());
    }

    #[test]
    fn purity_examples() {
        let mixed = Multivector::one(3).add(&mono(3, &[1, 2, 3]));
        assert!(!is_pure(&mixed).unwrap());
        let sum = mono(2, &[1]).add(&mono(2, &[2]));
        assert!(is_pure(&sum).unwrap());
        // 1 + f1∧f2 + f3∧f4 is not pure: the degree 4 term is missing
        let np = Multivector::one(4).add(&mono(4, &[1, 2])).add(&mono(4, &[3, 4]));
        assert!(!is_pure(&np).unwrap());
        assert_eq!(standard_form(&np), Err(GcError::NotPure));
    }

    #[test]
    fn standard_form_examples() {
        let iw = omega2().scale(&Gq::i());
        let sf = standard_form(&Multivector::exp(&iw)).unwrap();
        assert_eq!(sf.u, iw);
        assert_eq!(sf.k(), 0);
        assert_eq!(sf.c, Gq::one());

        let sf = standard_form(&omega2()).unwrap();
        assert!(sf.u.is_zero());
        assert_eq!(sf.k(), 2);
        assert_eq!(sf.expand(), omega2());

        let scaled = Multivector::exp(&iw).scale(&g(3, 1));
        let sf = standard_form(&scaled).unwrap();
        assert_eq!(sf.c, g(3, 1));
        assert_eq!(sf.expand(), scaled);
    }

    #[test]
    fn e_from_standard_form_examples() {
        let sf = StandardForm {
            u: Multivector::zero(3),
            factors: vec![],
            c: Gq::one(),
        };
        assert_eq!(e_from_standard_form(&sf), crate::gcs::PhaseSpace::new(3).vectors());
        let sf = StandardForm {
            u: omega2().scale(&Gq::i()),
            factors: vec![],
            c: Gq::one(),
        };
        assert_eq!(e_from_standard_form(&sf), annihilator_subspace(&sf.expand()).unwrap());
    }

    #[test]
    fn spinor_from_e_trivial_cases() {
        let ps = crate::gcs::PhaseSpace::new(3);
        let l = spinor_from_e(&ps.vectors()).unwrap();
        assert_eq!(*l.rep(), Multivector::one(3));
        let l = spinor_from_e(&ps.covectors()).unwrap();
        assert_eq!(*l.rep(), mono(3, &[1, 2, 3]));
        let line = Subspace::from_rows(6, vec![lift_vec(&[int(1), int(0), int(0), int(0), int(0), int(0)])]);
        assert!(spinor_from_e(&line).is_err());
    }

    #[test]
    fn mukai_of_exp_i_omega() {
        // rev(1 + iω) ∧ (1 - iω) = (1 - iω) ∧ (1 - iω): top = -2i
        let iw = omega2().scale(&Gq::i());
        let a = Multivector::exp(&iw);
        assert_eq!(mukai(&a, &a.conj()), g(0, -2));
        let sf = standard_form(&a).unwrap();
        let chk = check_mukai_formula(&sf).unwrap();
        assert!(chk.holds());
        // (u - ū)^1 = 2iω
        assert_eq!(chk.product, g(0, 2));
    }

    #[test]
    fn mukai_vanishes_on_real_factor() {
        let f1 = mono(2, &[1]);
        assert!(mukai(&f1, &f1.conj()).is_zero());
        let chk = check_mukai_formula(&standard_form(&f1).unwrap()).unwrap();
        assert!(chk.vanishing_agrees() && chk.holds());
    }

    #[test]
    fn mukai_complex_type() {
        // (f1 - i f2) for J on ℝ²
        let f = Multivector::from_one_form(&vec_c(&[(1, 0), (0, -1)]));
        let sf = standard_form(&f).unwrap();
        let chk = check_mukai_formula(&sf).unwrap();
        assert!(!chk.pairing.is_zero());
        assert!(chk.holds());
    }

    #[test]
    fn pullback_and_embed() {
        // j: ℝ → ℝ², t ↦ (t, 2t); j*(f1 ∧ f2) = 0, j*(f2) = 2 g1
        let l = Matrix::from_ints(&[&[1], &[2]]);
        assert!(omega2().pullback(&l).is_zero());
        assert_eq!(mono(2, &[2]).pullback(&l), mono(1, &[1]).scale(&g(2, 0)));
        assert_eq!(mono(1, &[1]).embed(1, 3), mono(3, &[2]));
    }

    #[test]
    fn reversal_signs() {
        let phi = Multivector::one(3)
            .add(&mono(3, &[1]))
            .add(&mono(3, &[1, 2]))
            .add(&mono(3, &[1, 2, 3]));
        let r = phi.reversal();
        assert_eq!(*r.coeff(0), Gq::one());
        assert_eq!(*r.coeff(1), Gq::one());
        assert_eq!(*r.coeff(3), -Gq::one());
        assert_eq!(*r.coeff(7), -Gq::one());
    }

    #[test]
    fn spinor_line_normalizes() {
        let a = SpinorLine::new(omega2().scale(&g(0, 3))).unwrap();
        assert_eq!(*a.rep(), omega2());
        assert!(a.contains(&omega2().scale(&g(-2, 0))));
        assert!(SpinorLine::new(Multivector::zero(2)).is_err());
    }
}
