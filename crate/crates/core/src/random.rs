//! Seeded generators of structures, subspaces and relations with small
//! integer data.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::gcs::{standard_complex, standard_symplectic, BiVector, GcAut, TwoForm};
use crate::linalg::{int, Gq, Matrix, Rational, Subspace};
use crate::relations::LinearRelation;
use crate::spinor::{Multivector, StandardForm};
use crate::transforms::{b_transform, beta_transform};

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small(rng: &mut TestRng, bound: i64) -> Rational {
    int(rng.gen_range(-bound..=bound))
}

pub fn matrix(rng: &mut TestRng, rows: usize, cols: usize, bound: i64) -> Matrix<Rational> {
    Matrix::from_fn(rows, cols, |_, _| small(rng, bound))
}

pub fn invertible(rng: &mut TestRng, n: usize) -> Matrix<Rational> {
    loop {
        let m = matrix(rng, n, n, 2);
        if m.is_invertible() {
            return m;
        }
    }
}

/// Product of `2n` random elementary matrices: integral with integral
/// inverse, which keeps the generated structures small.
pub fn unimodular(rng: &mut TestRng, n: usize) -> Matrix<Rational> {
    let mut m = Matrix::identity(n);
    if n < 2 {
        return m;
    }
    for _ in 0..2 * n {
        let r = rng.gen_range(0..n);
        let c = (r + rng.gen_range(1..n)) % n;
        let k = *[-1, 1].choose(rng).expect("nonempty");
        for j in 0..n {
            let v = m.get(r, j).clone() + int(k) * m.get(c, j);
            m.set(r, j, v);
        }
    }
    if rng.gen_bool(0.5) {
        m = Matrix::from_fn(n, n, |r, c| if r == 0 { -m.get(r, c).clone() } else { m.get(r, c).clone() });
    }
    m
}

pub fn two_form(rng: &mut TestRng, n: usize, bound: i64) -> TwoForm {
    let mut terms = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            terms.push((i, j, small(rng, bound)));
        }
    }
    TwoForm::from_terms(n, &terms)
}

pub fn bivector(rng: &mut TestRng, n: usize, bound: i64) -> BiVector {
    two_form(rng, n, bound).as_bivector()
}

/// Pullback of the standard form along a random isomorphism.
pub fn symplectic_form(rng: &mut TestRng, dim: usize) -> TwoForm {
    standard_symplectic(dim / 2).pullback(&unimodular(rng, dim))
}

/// Conjugate of the standard complex structure.
pub fn complex_structure(rng: &mut TestRng, dim: usize) -> Matrix<Rational> {
    let p = unimodular(rng, dim);
    let p_inv = p.inverse().expect("invertible");
    p.mul(&standard_complex(dim / 2)).mul(&p_inv)
}

/// The pieces a random structure was assembled from.
#[derive(Clone, Debug)]
pub struct GcsSample {
    pub structure: GcAut,
    pub symplectic_dim: usize,
    pub b: TwoForm,
    pub beta: Option<BiVector>,
}

/// `ω ⊕ J` on a random unimodular splitting, then a B-transform and, half of the time,
/// a β-transform.
pub fn gcs(rng: &mut TestRng, n: usize) -> GcsSample {
    let s = 2 * rng.gen_range(0..=n / 2);
    let mut parts = Vec::new();
    if s > 0 {
        parts.push(GcAut::symplectic(&symplectic_form(rng, s)).expect("symplectic"));
    }
    if n > s {
        parts.push(GcAut::complex(&complex_structure(rng, n - s)).expect("complex"));
    }
    let sum = match parts.as_slice() {
        [a] => a.clone(),
        [a, b] => a.direct_sum(b),
        _ => unreachable!("dimension is positive"),
    };
    let moved = sum.transport(&unimodular(rng, n)).expect("invertible");
    let b = two_form(rng, n, 2);
    let mut structure = b_transform(&moved, &b).expect("B-transform");
    let beta = if rng.gen_bool(0.5) {
        let beta = bivector(rng, n, 1);
        structure = beta_transform(&structure, &beta).expect("beta-transform");
        Some(beta)
    } else {
        None
    };
    GcsSample {
        structure,
        symplectic_dim: s,
        b,
        beta,
    }
}

/// A random subspace of dimension `d`.
pub fn subspace(rng: &mut TestRng, n: usize, d: usize) -> Subspace<Rational> {
    loop {
        let s = Subspace::from_matrix(&matrix(rng, d, n, 2));
        if s.dim() == d {
            return s;
        }
    }
}

/// A valid automorphism, a perturbation of one, or an arbitrary matrix.
pub fn block_matrix(rng: &mut TestRng, n: usize) -> Matrix<Rational> {
    let m = gcs(rng, n).structure.matrix().clone();
    match rng.gen_range(0..4) {
        0 | 1 => m,
        2 => {
            let mut m = m;
            let (r, c) = (rng.gen_range(0..2 * n), rng.gen_range(0..2 * n));
            let delta = if rng.gen_bool(0.5) { int(1) } else { int(-1) };
            let v = m.get(r, c).clone() + delta;
            m.set(r, c, v);
            m
        }
        _ => matrix(rng, 2 * n, 2 * n, 1),
    }
}

fn gaussian(rng: &mut TestRng, bound: i64) -> Gq {
    Gq::from_ints(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

/// `E(u, Φ)` for a random complex two-form `u` and random complex factors.
pub fn maximal_isotropic_candidate(rng: &mut TestRng, n: usize) -> Subspace<Gq> {
    let b = Matrix::from_fn(n, n, |_, _| gaussian(rng, 2));
    let skew = b.sub(&b.transpose());
    let k = rng.gen_range(0..=n);
    let factors = (0..k).map(|_| (0..n).map(|_| gaussian(rng, 2)).collect()).collect();
    let sf = StandardForm {
        u: Multivector::from_two_form_coeffs(&skew),
        factors,
        c: Gq::from_ints(1, 0),
    };
    crate::spinor::e_from_standard_form(&sf)
}

/// Building block of a random relation on `ℝ²`: the diagonal or a product
/// of two subspaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Piece {
    Diagonal,
    Product(usize, usize),
}

/// A chain `V → W → Z` of relations, each space a sum of planes carrying
/// the same structure types, transported by random isomorphisms.
#[derive(Clone, Debug)]
pub struct RelationPair {
    pub gamma: LinearRelation,
    pub phi: LinearRelation,
}

fn plane_subspace(rng: &mut TestRng, kind: usize) -> Subspace<Rational> {
    match kind {
        0 => Subspace::zero(2),
        1 => Subspace::full(2),
        _ => {
            let (a, b) = loop {
                let (a, b) = (small(rng, 2), small(rng, 2));
                if !(a.is_zero() && b.is_zero()) {
                    break (a, b);
                }
            };
            Subspace::from_rows(2, vec![vec![a, b]])
        }
    }
}

fn piece_relation(rng: &mut TestRng, symplectic: bool) -> Subspace<Rational> {
    let kinds: &[usize] = if symplectic { &[0, 1, 2] } else { &[0, 1] };
    let piece = if rng.gen_bool(0.4) {
        Piece::Diagonal
    } else {
        Piece::Product(*kinds.choose(rng).expect("nonempty"), *kinds.choose(rng).expect("nonempty"))
    };
    match piece {
        Piece::Diagonal => Subspace::from_rows(
            4,
            vec![
                vec![int(1), int(0), int(1), int(0)],
                vec![int(0), int(1), int(0), int(1)],
            ],
        ),
        Piece::Product(a, b) => plane_subspace(rng, a).direct_sum(&plane_subspace(rng, b)),
    }
}

/// Interleaves per-plane relations `Γ_i ⊆ ℝ² ⊕ ℝ²` into `Γ ⊆ V ⊕ W`.
fn assemble(pieces: &[Subspace<Rational>]) -> Subspace<Rational> {
    let p = pieces.len();
    let n = 2 * p;
    let mut rows = Vec::new();
    for (i, g) in pieces.iter().enumerate() {
        for r in g.basis_vectors() {
            let mut v = vec![Rational::zero(); 2 * n];
            v[2 * i] = r[0].clone();
            v[2 * i + 1] = r[1].clone();
            v[n + 2 * i] = r[2].clone();
            v[n + 2 * i + 1] = r[3].clone();
            rows.push(v);
        }
    }
    Subspace::from_rows(2 * n, rows)
}

fn move_relation(g: &Subspace<Rational>, mu_v: &Matrix<Rational>, mu_w: &Matrix<Rational>) -> Subspace<Rational> {
    g.image(&Matrix::diag_blocks(mu_v, mu_w))
}

pub fn relation_pair(rng: &mut TestRng, max_planes: usize) -> RelationPair {
    let planes = rng.gen_range(1..=max_planes);
    let kinds: Vec<bool> = (0..planes).map(|_| rng.gen_bool(0.5)).collect();
    let base = kinds
        .iter()
        .map(|&s| {
            if s {
                GcAut::symplectic(&standard_symplectic(1)).expect("symplectic")
            } else {
                GcAut::complex(&standard_complex(1)).expect("complex")
            }
        })
        .reduce(|a, b| a.direct_sum(&b))
        .expect("at least one plane");
    let n = 2 * planes;
    let mus: Vec<Matrix<Rational>> = (0..3).map(|_| invertible(rng, n)).collect();
    let spaces: Vec<GcAut> = mus.iter().map(|m| base.transport(m).expect("invertible")).collect();
    let mut rel = |from: usize, to: usize| {
        let pieces: Vec<Subspace<Rational>> = kinds.iter().map(|&s| piece_relation(rng, s)).collect();
        let g = move_relation(&assemble(&pieces), &mus[from], &mus[to]);
        LinearRelation::new(spaces[from].clone(), spaces[to].clone(), g).expect("dimensions match")
    };
    let gamma = rel(0, 1);
    let phi = rel(1, 2);
    RelationPair { gamma, phi }
}

/// `(μ, a, b)` with `b = μ_* a`, or with `b` altered so that the graph of
/// `μ` is not canonical. `n` must be even.
pub fn graph_instance(rng: &mut TestRng, n: usize, positive: bool) -> (Matrix<Rational>, GcAut, GcAut) {
    let mu = invertible(rng, n);
    if positive {
        let a = gcs(rng, n).structure;
        let b = a.transport(&mu).expect("invertible");
        return (mu, a, b);
    }
    // on a plane every bivector leaves a complex structure fixed
    if n >= 4 && rng.gen_bool(0.5) {
        // same J1 and J3, different J2
        let a = GcAut::complex(&complex_structure(rng, n)).expect("complex");
        let pushed = a.transport(&mu).expect("invertible");
        loop {
            let beta = bivector(rng, n, 1);
            let b = beta_transform(&pushed, &beta).expect("beta-transform");
            if b.j2() != pushed.j2() {
                return (mu, a, b);
            }
        }
    }
    let a = gcs(rng, n).structure;
    let b = gcs(rng, n).structure;
    (mu, a, b)
}
