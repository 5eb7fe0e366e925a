//! The acceptance suite: thirteen exact checks over seeded random samples
//! and fixed examples.

use std::time::{Duration, Instant};

use num_traits::Zero;
use serde::Serialize;

use crate::classification::{
    build_subnotquot_example, canonical_c, canonical_s, decompose, graphnotsub_report, notquot_report,
    s_subspace, subnotquot_report,
};
use crate::gcs::{is_maximal_isotropic, standard_symplectic, validate_aut, GcAut, IsotropicE};
use crate::linalg::{Gq, Matrix};
use crate::random::{self, TestRng};
use crate::relations::{ann_composition_claim, closure_check, graph_iso_test, RelationClass};
use crate::spinor::annihilator_subspace;
use crate::subspaces::{induced_e_on_quotient, induced_e_on_subspace};
use crate::transforms::{analyze_t, b_transform, b_transform_spinor, classify_type};
use crate::Result;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2} {} ({} ms): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed_ms,
            self.detail
        )
    }
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn ok(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn timed(
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    f: impl FnOnce() -> Result<Outcome>,
) -> CriterionResult {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match out {
        Ok(o) => (o.passed, o.detail),
        Err(e) => (false, format!("error: {e}")),
    };
    if let Some(limit) = limit {
        if elapsed > limit {
            passed = false;
            detail = format!("{detail}; exceeded {} s", limit.as_secs());
        }
    }
    CriterionResult {
        id,
        name,
        passed,
        detail,
        elapsed_ms: elapsed.as_millis(),
    }
}

/// 50 structures in each of the dimensions 2, 4, 6, 8.
pub fn structure_sample(rng: &mut TestRng) -> Vec<GcAut> {
    let mut out = Vec::new();
    for n in [2, 4, 6, 8] {
        for _ in 0..50 {
            out.push(random::gcs(rng, n).structure);
        }
    }
    out
}

fn round_trips(sample: &[GcAut]) -> Result<Outcome> {
    for (i, x) in sample.iter().enumerate() {
        if GcAut::from_eigenspace(&x.eigenspace())? != *x {
            return Ok(ok(false, format!("aut -> E -> aut differs on sample {i}")));
        }
        let line = x.spinor()?;
        let back = GcAut::from_eigenspace(&IsotropicE::new(line.annihilator())?)?;
        if back != *x {
            return Ok(ok(false, format!("aut -> spinor -> aut differs on sample {i}")));
        }
        if back.spinor()? != line {
            return Ok(ok(false, format!("spinor line changes on sample {i}")));
        }
    }
    Ok(ok(true, format!("{} structures", sample.len())))
}

fn equation_sets(rng: &mut TestRng) -> Result<Outcome> {
    let (mut valid, mut invalid) = (0, 0);
    for i in 0..600 {
        let n = [2, 4, 6][i % 3];
        let m = random::block_matrix(rng, n);
        let r = validate_aut(&m)?;
        if !r.criteria_agree() {
            return Ok(ok(false, format!("criteria disagree on matrix {i}")));
        }
        if r.passes() {
            valid += 1;
        } else {
            invalid += 1;
        }
    }
    Ok(ok(
        valid > 0 && invalid > 0,
        format!("600 matrices, {valid} valid, {invalid} invalid"),
    ))
}

fn b_spinor(rng: &mut TestRng, sample: &[GcAut]) -> Result<Outcome> {
    let mut count = 0;
    for x in sample.iter().filter(|x| x.n() <= 6).take(120) {
        let b = random::two_form(rng, x.n(), 2);
        let by_aut = b_transform(x, &b)?.eigenspace();
        let phi = b_transform_spinor(x.spinor()?.rep(), &b);
        if annihilator_subspace(&phi)? != *by_aut.subspace() {
            return Ok(ok(false, format!("E differs after {count} agreeing pairs")));
        }
        count += 1;
    }
    Ok(ok(count >= 100, format!("{count} pairs")))
}

fn induced_dims(rng: &mut TestRng) -> Result<Outcome> {
    let mut non_gc = 0;
    for i in 0..500 {
        let n = [2, 4, 6][i % 3];
        let x = random::gcs(rng, n).structure;
        let d = rand::Rng::gen_range(rng, 0..=n);
        let w = random::subspace(rng, n, d);
        let e = x.eigenspace();
        let ew = induced_e_on_subspace(e.subspace(), &w)?;
        let eq = induced_e_on_quotient(e.subspace(), &w)?;
        if ew.dim() != d || eq.dim() != n - d {
            return Ok(ok(false, format!("dimension mismatch on pair {i}")));
        }
        if !ew.intersect(&ew.conjugate())?.is_zero() {
            non_gc += 1;
        }
    }
    Ok(ok(true, format!("500 pairs, {non_gc} not GC subspaces")))
}

fn subnotquot() -> Result<Outcome> {
    let ex = build_subnotquot_example()?;
    let r = subnotquot_report()?;
    let m = ex.b.map().complexify().sub(&ex.omega.map().complexify().scale(&Gq::i()));
    let annihilated = m.mul_vec(&r.witness).iter().all(|c| c.is_zero());
    Ok(ok(
        r.is_gc_subspace && !r.is_gc_quotient && annihilated,
        format!(
            "sub={} quot={} witness {} annihilated={}",
            r.is_gc_subspace, r.is_gc_quotient, r.witness_text, annihilated
        ),
    ))
}

fn notquot() -> Result<Outcome> {
    let r = notquot_report()?;
    let passed = r.dim_c == 4
        && r.c_is_kernel
        && r.omega_degenerate_on_c
        && !r.c_is_gc_subspace
        && r.quotient_is_gc
        && r.quotient_is_beta_symplectic;
    Ok(ok(passed, format!("{r:?}")))
}

fn graphnotsub() -> Result<Outcome> {
    let r = graphnotsub_report()?;
    Ok(ok(r.satisfies_graph_condition && !r.is_gc_subspace, format!("{r:?}")))
}

fn classification(sample: &[GcAut]) -> Result<Outcome> {
    for (i, x) in sample.iter().enumerate() {
        let d = decompose(x)?;
        if d.s.dim() + d.w.dim() != x.n() || !d.omega.is_nondegenerate() || d.reassemble()? != *x {
            return Ok(ok(false, format!("decomposition fails on sample {i}")));
        }
    }
    Ok(ok(true, format!("{} structures", sample.len())))
}

fn canonical_invariance(rng: &mut TestRng, sample: &[GcAut]) -> Result<Outcome> {
    for (i, x) in sample.iter().enumerate() {
        let s = canonical_s(x)?;
        for _ in 0..20 {
            let b = random::two_form(rng, x.n(), 1);
            if s_subspace(&b_transform(x, &b)?)? != s {
                return Ok(ok(false, format!("S moves under a B-transform of sample {i}")));
            }
        }
        // canonical_c checks the graph condition itself
        let c = canonical_c(x)?;
        let d = c.c.dim();
        if c.j.mul(&c.j) != -Matrix::identity(d) {
            return Ok(ok(false, format!("J1 on C does not square to -1 on sample {i}")));
        }
    }
    Ok(ok(true, format!("{} structures x 20 B-fields", sample.len())))
}

fn closure(rng: &mut TestRng) -> Result<Outcome> {
    let mut in_class = [0usize; 3];
    for i in 0..120 {
        let p = random::relation_pair(rng, 3);
        for (k, class) in RelationClass::ALL.into_iter().enumerate() {
            let c = closure_check(&p.phi, &p.gamma, class)?;
            if !c.holds() {
                return Ok(ok(false, format!("{class:?} not closed on pair {i}")));
            }
            in_class[k] += c.inputs_in_class as usize;
        }
        if !ann_composition_claim(&p.phi, &p.gamma)? {
            return Ok(ok(false, format!("annihilator identity fails on pair {i}")));
        }
    }
    Ok(ok(
        in_class.iter().all(|&c| c > 0),
        format!(
            "120 pairs; inputs in class: isotropic {}, coisotropic {}, lagrangian {}",
            in_class[0], in_class[1], in_class[2]
        ),
    ))
}

fn graph_iso(rng: &mut TestRng) -> Result<Outcome> {
    let (mut pos, mut neg, mut iso_neg) = (0, 0, 0);
    for i in 0..240 {
        let n = [2, 4][i % 2];
        let positive = i % 3 == 0;
        let (mu, a, b) = random::graph_instance(rng, n, positive);
        let t = graph_iso_test(&mu, &a, &b)?;
        if t.graph_is_lagrangian != positive {
            return Ok(ok(false, format!("unexpected verdict on instance {i}")));
        }
        let pushed = a.transport(&mu)?;
        if pushed.j1() == b.j1() && pushed.j3() == b.j3() {
            if !t.graph_is_isotropic {
                return Ok(ok(false, format!("graph not isotropic with matching J1, J3 on instance {i}")));
            }
            if !positive {
                iso_neg += 1;
            }
        }
        if positive {
            pos += 1;
        } else {
            neg += 1;
        }
    }
    Ok(ok(
        iso_neg > 0,
        format!("240 instances, {pos} positive, {neg} negative, {iso_neg} J2-only mismatches"),
    ))
}

fn t_table() -> Result<Outcome> {
    let w2 = standard_symplectic(1);
    let zero = analyze_t(&w2, &Matrix::zeros(2, 2))?;
    let one = analyze_t(&w2, &Matrix::identity(2))?;
    let a = Matrix::from_ints(&[&[0, 1], &[-1, 0]]);
    let w4 = standard_symplectic(2);
    let block = analyze_t(&w4, &Matrix::diag_blocks(&a, &a.transpose()))?;
    let passed = zero.symplectic
        && classify_type(&zero.structure)?.is_symplectic
        && one.beta_symplectic
        && classify_type(&one.structure)?.is_beta_symplectic
        && block.beta_complex
        && classify_type(&block.structure)?.is_beta_complex;
    Ok(ok(passed, "T = 0, T = 1, T = diag(A, At)"))
}

fn even_dimension(rng: &mut TestRng) -> Result<Outcome> {
    let per_dim = 10_000;
    for n in [1, 3, 5] {
        for i in 0..per_dim {
            let e = random::maximal_isotropic_candidate(rng, n);
            if !is_maximal_isotropic(&e) {
                return Ok(ok(false, format!("candidate {i} in dimension {n} is not maximal isotropic")));
            }
            if e.sum(&e.conjugate())?.dim() == 2 * n {
                return Ok(ok(false, format!("candidate {i} in dimension {n} has E and its conjugate transverse")));
            }
        }
    }
    Ok(ok(true, format!("{per_dim} candidates in each of n = 1, 3, 5")))
}

pub const CRITERIA: [&str; 13] = [
    "representation round trips",
    "equation set equivalence",
    "B-transform on spinors",
    "induced dimensions",
    "subspace but not quotient",
    "quotient but not subspace",
    "graph condition without GC subspace",
    "classification",
    "canonical subspaces",
    "closure under composition",
    "graph isomorphism criterion",
    "T-operator table",
    "even dimension",
];

/// Runs every criterion; each gets its own generator derived from `seed`.
pub fn run_all(seed: u64) -> Vec<CriterionResult> {
    let mut out = Vec::new();
    run_each(seed, |r| out.push(r.clone()));
    out
}

/// Like [`run_all`], reporting each result as soon as it is known.
pub fn run_each(seed: u64, mut report: impl FnMut(&CriterionResult)) {
    let secs = Duration::from_secs;
    let mut sample_rng = random::rng(seed);
    let sample = structure_sample(&mut sample_rng);
    let r = |k: u64| random::rng(seed.wrapping_mul(31).wrapping_add(k));
    let names = CRITERIA;
    report(&timed(1, names[0], Some(secs(60)), || round_trips(&sample)));
    report(&timed(2, names[1], Some(secs(30)), || equation_sets(&mut r(2))));
    report(&timed(3, names[2], Some(secs(60)), || b_spinor(&mut r(3), &sample)));
    report(&timed(4, names[3], None, || induced_dims(&mut r(4))));
    report(&timed(5, names[4], Some(secs(1)), subnotquot));
    report(&timed(6, names[5], Some(secs(1)), notquot));
    report(&timed(7, names[6], Some(secs(1)), graphnotsub));
    report(&timed(8, names[7], None, || classification(&sample)));
    report(&timed(9, names[8], None, || canonical_invariance(&mut r(9), &sample)));
    report(&timed(10, names[9], Some(secs(120)), || closure(&mut r(10))));
    report(&timed(11, names[10], None, || graph_iso(&mut r(11))));
    report(&timed(12, names[11], Some(secs(1)), t_table));
    report(&timed(13, names[12], Some(secs(60)), || even_dimension(&mut r(13))));
}
