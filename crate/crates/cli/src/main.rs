//! `gclin`: command-line front end to gclin-core.
//!
//! Every verb prints one line of JSON. Exit status: 0 when an operation
//! succeeds or a predicate holds, 1 when a predicate fails, 2 on malformed
//! input, 3 when the library reports an unsupported case or an internal
//! inconsistency.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use gclin_core::classification::{
    canonical_c, canonical_s, decompose, graphnotsub_report, notquot_report, subnotquot_report,
};
use gclin_core::gcs::validate_aut;
use gclin_core::json::{
    self as gj, complex_vector_json, gcs_json, gq_json, matrix_json, multivector_json, subspace_json, two_form_json,
    vector_json, GcsJson, Repr, RelationJson, SkewJson, SubspaceJson,
};
use gclin_core::linalg::{Matrix, Rational, Subspace};
use gclin_core::relations::{compose, LinearRelation, RelationClass};
use gclin_core::selftest;
use gclin_core::spinor;
use gclin_core::subspaces::{
    find_split_complement, induce_on_quotient, induce_on_subspace, is_generalized_coisotropic,
    is_generalized_isotropic, satisfies_graph_condition, verify_split, InducedStructure,
};
use gclin_core::transforms::{b_transform, beta_transform, classify_type, recover, RecoveredData};
use gclin_core::{GcAut, GcError};

#[derive(Parser)]
#[command(name = "gclin", version, about = "Exact linear algebra of generalized complex structures")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReprArg {
    Aut,
    #[value(name = "E")]
    E,
    Spinor,
}

impl From<ReprArg> for Repr {
    fn from(r: ReprArg) -> Repr {
        match r {
            ReprArg::Aut => Repr::Aut,
            ReprArg::E => Repr::E,
            ReprArg::Spinor => Repr::Spinor,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SubTest {
    Gc,
    Isotropic,
    Coisotropic,
    Lagrangian,
    Graph,
    Split,
}

#[derive(Clone, Copy, ValueEnum)]
enum Demo {
    Subnotquot,
    Notquot,
    Graphnotsub,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check that a structure file describes a generalized complex structure.
    Validate { input: PathBuf },
    /// Rewrite a structure in another representation.
    Convert {
        input: PathBuf,
        #[arg(long, value_enum)]
        to: ReprArg,
    },
    /// Apply a B-transform, a beta-transform, the twist or the dual.
    #[command(group(ArgGroup::new("op").required(true).args(["b", "beta", "twist", "dual"])))]
    Transform {
        input: PathBuf,
        /// Two-form file `{"n":..,"matrix":..}`.
        #[arg(long)]
        b: Option<PathBuf>,
        /// Bivector file `{"n":..,"matrix":..}`.
        #[arg(long)]
        beta: Option<PathBuf>,
        #[arg(long)]
        twist: bool,
        #[arg(long)]
        dual: bool,
        #[arg(long, value_enum, default_value = "aut")]
        to: ReprArg,
    },
    /// Complex, symplectic and their B/beta variants.
    ClassifyType { input: PathBuf },
    /// Recover `(J, B)` or `(omega, B)` from a B-complex or B-symplectic structure.
    Recover { input: PathBuf },
    /// Test a subspace against a structure.
    Subspace {
        structure: PathBuf,
        subspace: PathBuf,
        #[arg(long, value_enum)]
        test: SubTest,
        /// Structure on the subspace, for `--test graph`.
        #[arg(long)]
        k: Option<PathBuf>,
        /// Candidate complement, for `--test split`; searched for when absent.
        #[arg(long)]
        complement: Option<PathBuf>,
    },
    /// Induced structure on a subspace or on the quotient by it.
    #[command(group(ArgGroup::new("side").required(true).args(["sub", "quot"])))]
    Induce {
        structure: PathBuf,
        subspace: PathBuf,
        #[arg(long)]
        sub: bool,
        #[arg(long)]
        quot: bool,
    },
    /// Split a structure into a B-transformed symplectic and complex sum.
    Decompose { input: PathBuf },
    /// The canonical symplectic subspace S or complex subspace C.
    #[command(group(ArgGroup::new("which").required(true).args(["s", "c"])))]
    Canonical {
        input: PathBuf,
        #[arg(long)]
        s: bool,
        #[arg(long)]
        c: bool,
    },
    /// Compose `rel1: V -> W` with `rel2: W -> Z`, giving `rel2 ∘ rel1`.
    Compose { rel1: PathBuf, rel2: PathBuf },
    /// Whether a relation is canonical (generalized Lagrangian).
    CanonicalRel { input: PathBuf },
    /// Built-in examples.
    Demo {
        #[arg(value_enum)]
        name: Demo,
    },
    /// Run the acceptance checks.
    Selftest {
        #[arg(long, default_value_t = 20241016)]
        seed: u64,
    },
}

enum Failure {
    Malformed(String),
    Library(GcError),
}

impl From<GcError> for Failure {
    fn from(e: GcError) -> Self {
        match e {
            GcError::DimensionMismatch { .. }
            | GcError::InvalidStructure(_)
            | GcError::InvalidEigenspace(_)
            | GcError::NotSkew(_)
            | GcError::NotComplexStructure
            | GcError::ZeroSpinor
            | GcError::NotPure
            | GcError::OddDimension(_)
            | GcError::Parse(_) => Failure::Malformed(e.to_string()),
            e => Failure::Library(e),
        }
    }
}

type Res<T> = Result<T, Failure>;

/// What a verb prints and whether it counts as success.
struct Output {
    value: Value,
    ok: bool,
}

fn success(value: Value) -> Output {
    Output { value, ok: true }
}

fn verdict(result: bool, witness: Value, extra: Map<String, Value>) -> Output {
    let mut m = Map::new();
    m.insert("result".into(), Value::Bool(result));
    m.insert("witness".into(), witness);
    m.extend(extra);
    Output {
        value: Value::Object(m),
        ok: result,
    }
}

fn read_text(path: &Path) -> Res<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Malformed(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Malformed(format!("{}: {e}", path.display())))
}

fn load<T: for<'de> serde::Deserialize<'de>>(path: &Path) -> Res<T> {
    Ok(gj::from_str(&read_text(path)?)?)
}

fn load_gcs(path: &Path) -> Res<GcAut> {
    Ok(gj::parse_gcs(&load::<GcsJson>(path)?)?)
}

fn load_subspace(path: &Path) -> Res<Subspace<Rational>> {
    Ok(gj::parse_subspace(&load::<SubspaceJson<String>>(path)?)?)
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("plain data serializes")
}

fn structure_value(x: &GcAut, repr: Repr) -> Res<Value> {
    let mut v = to_value(&gcs_json(x, repr)?);
    if repr == Repr::Spinor {
        let sf = spinor::standard_form(x.spinor()?.rep())?;
        let factors: Vec<Value> = sf.factors.iter().map(|f| to_value(&complex_vector_json(f))).collect();
        v.as_object_mut().expect("object").insert(
            "standard_form".into(),
            json!({
                "c": to_value(&gq_json(&sf.c)),
                "u": to_value(&multivector_json(&sf.u)),
                "factors": factors,
            }),
        );
    }
    Ok(v)
}

fn validate(input: &Path) -> Res<Output> {
    let g: GcsJson = load(input)?;
    if g.repr != "aut" {
        return match gj::parse_gcs(&g) {
            Ok(_) => Ok(verdict(true, Value::Null, Map::new())),
            Err(e @ (GcError::InvalidEigenspace(_) | GcError::NotPure | GcError::ZeroSpinor)) => {
                Ok(verdict(false, json!(e.to_string()), Map::new()))
            }
            Err(e) => Err(e.into()),
        };
    }
    let j = g
        .j
        .as_ref()
        .ok_or_else(|| Failure::Malformed("repr \"aut\" needs a \"j\" field".into()))?;
    let n = g.n;
    let block = |rows: &Vec<Vec<String>>| gj::parse_matrix(rows, Some((n, n)));
    let m = Matrix::block(&block(&j.j1)?, &block(&j.j2)?, &block(&j.j3)?, &block(&j.j4)?);
    let report = validate_aut(&m)?;
    if !report.criteria_agree() {
        return Err(Failure::Library(GcError::CrossCheck("block equations and direct check disagree")));
    }
    let violated: Vec<String> = report.violated.iter().map(|e| e.describe()).collect();
    let mut extra = Map::new();
    extra.insert("squares_to_minus_one".into(), json!(report.squares_to_minus_one));
    extra.insert("orthogonal".into(), json!(report.orthogonal));
    let witness = if violated.is_empty() { Value::Null } else { json!(violated) };
    Ok(verdict(report.passes(), witness, extra))
}

fn transform(
    input: &Path,
    b: Option<&Path>,
    beta: Option<&Path>,
    twist: bool,
    dual: bool,
    to: Repr,
) -> Res<Output> {
    let x = load_gcs(input)?;
    let y = if let Some(p) = b {
        b_transform(&x, &gj::parse_two_form(&load::<SkewJson>(p)?)?)?
    } else if let Some(p) = beta {
        beta_transform(&x, &gj::parse_bivector(&load::<SkewJson>(p)?)?)?
    } else if twist {
        x.twist()
    } else {
        debug_assert!(dual);
        x.dualize()
    };
    Ok(success(structure_value(&y, to)?))
}

fn recover_cmd(input: &Path) -> Res<Output> {
    let x = load_gcs(input)?;
    match recover(&x) {
        Ok(RecoveredData::Complex { j, b }) => Ok(success(json!({
            "result": {"type": "B-complex", "j": matrix_json(&j), "b": to_value(&two_form_json(&b))}
        }))),
        Ok(RecoveredData::Symplectic { omega, b }) => Ok(success(json!({
            "result": {"type": "B-symplectic", "omega": to_value(&two_form_json(&omega)), "b": to_value(&two_form_json(&b))}
        }))),
        Err(GcError::NotApplicable(why)) => Ok(Output {
            value: json!({"result": null, "reason": why}),
            ok: false,
        }),
        Err(e) => Err(e.into()),
    }
}

/// First vector of `from` that `J` sends outside `target`, with its image.
fn escaping(j: &GcAut, from: &[Vec<Rational>], target: &Subspace<Rational>) -> Value {
    from.iter()
        .find_map(|x| {
            let img = j.apply(x);
            (!target.contains(&img)).then(|| json!({"vector": vector_json(x), "image": vector_json(&img)}))
        })
        .unwrap_or(Value::Null)
}

fn padded(w: &Subspace<Rational>, n: usize, covectors: bool) -> Vec<Vec<Rational>> {
    w.basis_vectors()
        .into_iter()
        .map(|v| {
            let mut out = Vec::with_capacity(2 * n);
            if covectors {
                out.resize(n, Rational::default());
                out.extend(v);
            } else {
                out.extend(v);
                out.resize(2 * n, Rational::default());
            }
            out
        })
        .collect()
}

fn isotropy_witness(j: &GcAut, w: &Subspace<Rational>, iso: bool, coiso: bool) -> Value {
    let n = j.n();
    let target = w.direct_sum(&w.annihilator());
    if !iso {
        escaping(j, &padded(w, n, false), &target)
    } else if !coiso {
        escaping(j, &padded(&w.annihilator(), n, true), &target)
    } else {
        Value::Null
    }
}

fn induced_value(ind: &InducedStructure) -> Res<Value> {
    let witness = ind.witness.as_ref().map_or(Value::Null, |w| to_value(&complex_vector_json(w)));
    let structure = match &ind.jw {
        Some(j) => structure_value(j, Repr::Aut)?,
        None => Value::Null,
    };
    Ok(json!({
        "result": ind.is_gc,
        "witness": witness,
        "E": to_value(&gj::complex_subspace_json(&ind.ew)),
        "structure": structure,
    }))
}

fn subspace_cmd(
    structure: &Path,
    subspace: &Path,
    test: SubTest,
    k: Option<&Path>,
    complement: Option<&Path>,
) -> Res<Output> {
    let j = load_gcs(structure)?;
    let w = load_subspace(subspace)?;
    if w.ambient_dim() != j.n() {
        return Err(GcError::DimensionMismatch {
            expected: j.n(),
            found: w.ambient_dim(),
        }
        .into());
    }
    match test {
        SubTest::Gc => {
            let ind = induce_on_subspace(&j, &w)?;
            let witness = ind.witness.as_ref().map_or(Value::Null, |v| to_value(&complex_vector_json(v)));
            Ok(verdict(ind.is_gc, witness, Map::new()))
        }
        SubTest::Isotropic | SubTest::Coisotropic | SubTest::Lagrangian => {
            let iso = is_generalized_isotropic(&j, &w)?;
            let coiso = is_generalized_coisotropic(&j, &w)?;
            let (need_iso, need_coiso) = match test {
                SubTest::Isotropic => (true, false),
                SubTest::Coisotropic => (false, true),
                _ => (true, true),
            };
            let result = (iso || !need_iso) && (coiso || !need_coiso);
            let witness = isotropy_witness(&j, &w, iso || !need_iso, coiso || !need_coiso);
            Ok(verdict(result, witness, Map::new()))
        }
        SubTest::Graph => {
            let k = k.ok_or_else(|| Failure::Malformed("--test graph needs --k <structure>".into()))?;
            let k = load_gcs(k)?;
            let holds = satisfies_graph_condition(&j, &w, &k)?;
            let witness = if holds { Value::Null } else { graph_witness(&j, &w, &k) };
            Ok(verdict(holds, witness, Map::new()))
        }
        SubTest::Split => {
            let nc = match complement {
                Some(p) => {
                    let nc = load_subspace(p)?;
                    verify_split(&j, &w, &nc)?.then_some(nc)
                }
                None => find_split_complement(&j, &w)?,
            };
            let mut extra = Map::new();
            extra.insert("complement".into(), nc.as_ref().map_or(Value::Null, |n| to_value(&subspace_json(n))));
            let witness = if nc.is_some() {
                Value::Null
            } else if complement.is_some() {
                json!("W + Ann(N) is not J-stable or N is not a complement")
            } else {
                json!("no complement N with W + Ann(N) J-stable")
            };
            Ok(verdict(nc.is_some(), witness, extra))
        }
    }
}

/// The first basis vector of `W` on which `J` and `K` disagree.
fn graph_witness(j: &GcAut, w: &Subspace<Rational>, k: &GcAut) -> Value {
    let (j1, j3, k1, k3) = (j.j1(), j.j3(), k.j1(), k.j3());
    let basis = w.basis_vectors();
    for (a, wa) in basis.iter().enumerate() {
        let img = j1.mul_vec(wa);
        if !w.contains(&img) || w.coordinates(&img) != k1.col(a) {
            return json!({"vector": vector_json(wa), "block": "J1"});
        }
        let f = j3.mul_vec(wa);
        for (b, wb) in basis.iter().enumerate() {
            let pair: Rational = f.iter().zip(wb).map(|(x, y)| x * y).fold(Rational::default(), |s, t| s + t);
            if pair != *k3.get(b, a) {
                return json!({"vector": vector_json(wa), "block": "J3"});
            }
        }
    }
    Value::Null
}

fn decompose_cmd(input: &Path) -> Res<Output> {
    let x = load_gcs(input)?;
    let d = decompose(&x)?;
    Ok(success(json!({
        "result": {
            "s": to_value(&subspace_json(&d.s)),
            "omega": to_value(&two_form_json(&d.omega)),
            "w": to_value(&subspace_json(&d.w)),
            "jw": matrix_json(&d.jw),
            "b": to_value(&two_form_json(&d.b)),
        }
    })))
}

fn canonical_cmd(input: &Path, s: bool) -> Res<Output> {
    let x = load_gcs(input)?;
    if s {
        let s = canonical_s(&x)?;
        Ok(success(json!({"result": {"s": to_value(&subspace_json(&s))}})))
    } else {
        let c = canonical_c(&x)?;
        Ok(success(json!({"result": {"c": to_value(&subspace_json(&c.c)), "j": matrix_json(&c.j)}})))
    }
}

fn load_relation(path: &Path) -> Res<LinearRelation> {
    Ok(gj::parse_relation(&load::<RelationJson>(path)?)?)
}

fn compose_cmd(rel1: &Path, rel2: &Path) -> Res<Output> {
    let gamma = load_relation(rel1)?;
    let phi = load_relation(rel2)?;
    if gamma.target != phi.source {
        return Err(Failure::Malformed("target of rel1 differs from source of rel2".into()));
    }
    let comp = compose(&phi, &gamma)?;
    Ok(success(json!({"result": to_value(&gj::relation_json(&comp)?)})))
}

fn canonical_rel_cmd(input: &Path) -> Res<Output> {
    let r = load_relation(input)?;
    let mut extra = Map::new();
    for class in RelationClass::ALL {
        let name = match class {
            RelationClass::Isotropic => "isotropic",
            RelationClass::Coisotropic => "coisotropic",
            RelationClass::Lagrangian => "lagrangian",
        };
        extra.insert(name.into(), json!(r.is_in_class(class)?));
    }
    let amb = r.ambient();
    let iso = extra["isotropic"] == json!(true);
    let coiso = extra["coisotropic"] == json!(true);
    let witness = isotropy_witness(&amb, &r.graph, iso, coiso);
    Ok(verdict(iso && coiso, witness, extra))
}

fn demo(name: Demo) -> Res<Output> {
    let value = match name {
        Demo::Subnotquot => {
            let r = subnotquot_report()?;
            json!({
                "is_gc_subspace": r.is_gc_subspace,
                "is_gc_quotient": r.is_gc_quotient,
                "witness": r.witness_text,
            })
        }
        Demo::Notquot => {
            let r = notquot_report()?;
            json!({
                "dim_c": r.dim_c,
                "c_is_kernel": r.c_is_kernel,
                "omega_degenerate_on_c": r.omega_degenerate_on_c,
                "kernel_orthogonal_to_image": r.kernel_orthogonal_to_image,
                "c_is_gc_subspace": r.c_is_gc_subspace,
                "quotient_is_gc": r.quotient_is_gc,
                "quotient_is_beta_symplectic": r.quotient_is_beta_symplectic,
            })
        }
        Demo::Graphnotsub => {
            let r = graphnotsub_report()?;
            json!({
                "satisfies_graph_condition": r.satisfies_graph_condition,
                "is_gc_subspace": r.is_gc_subspace,
                "structure_is_b_symplectic": r.structure_is_b_symplectic,
            })
        }
    };
    Ok(success(value))
}

fn run(cmd: Cmd) -> Res<Output> {
    match cmd {
        Cmd::Validate { input } => validate(&input),
        Cmd::Convert { input, to } => Ok(success(structure_value(&load_gcs(&input)?, to.into())?)),
        Cmd::Transform {
            input,
            b,
            beta,
            twist,
            dual,
            to,
        } => transform(&input, b.as_deref(), beta.as_deref(), twist, dual, to.into()),
        Cmd::ClassifyType { input } => {
            let x = load_gcs(&input)?;
            Ok(success(json!({"result": to_value(&classify_type(&x)?)})))
        }
        Cmd::Recover { input } => recover_cmd(&input),
        Cmd::Subspace {
            structure,
            subspace,
            test,
            k,
            complement,
        } => subspace_cmd(&structure, &subspace, test, k.as_deref(), complement.as_deref()),
        Cmd::Induce {
            structure,
            subspace,
            sub,
            quot: _,
        } => {
            let j = load_gcs(&structure)?;
            let w = load_subspace(&subspace)?;
            let ind = if sub {
                induce_on_subspace(&j, &w)?
            } else {
                induce_on_quotient(&j, &w)?
            };
            Ok(Output {
                value: induced_value(&ind)?,
                ok: ind.is_gc,
            })
        }
        Cmd::Decompose { input } => decompose_cmd(&input),
        Cmd::Canonical { input, s, c: _ } => canonical_cmd(&input, s),
        Cmd::Compose { rel1, rel2 } => compose_cmd(&rel1, &rel2),
        Cmd::CanonicalRel { input } => canonical_rel_cmd(&input),
        Cmd::Demo { name } => demo(name),
        Cmd::Selftest { seed } => {
            let mut all = true;
            let mut results = Vec::new();
            selftest::run_each(seed, |r| {
                eprintln!("{}", r.line());
                all &= r.passed;
                results.push(to_value(r));
            });
            Ok(Output {
                value: json!({"result": all, "seed": seed, "criteria": results}),
                ok: all,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(out) => {
            println!("{}", out.value);
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(Failure::Malformed(msg)) => {
            println!("{}", json!({"error": msg}));
            ExitCode::from(2)
        }
        Err(Failure::Library(e)) => {
            println!("{}", json!({"error": e.to_string()}));
            ExitCode::from(3)
        }
    }
}
