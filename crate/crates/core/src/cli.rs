//! Command-line front end: argument parsing, dispatch and report rendering.
//!
//! Exit codes: 0 when verdicts were computed (negative ones included), 2 when
//! input is invalid or a theorem's preconditions fail, 3 when two
//! independent computations disagree.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::field::FieldSpec;
use crate::graph::{Graph, GraphDoc, LpaSimplicity, NotSimpleReason};
use crate::groupoid::{FiniteGroupoid, GroupoidDoc};
use crate::lie::{cross_check_groupoid, LieError, LieSimplicity, DEFAULT_SEED};
use crate::lpa::{lpa_center, lpa_lie_simple};
use crate::selfsimilar::{ActionDoc, SelfSimilarAction, StronglyFixed};
use crate::steinberg::{center_verdict, lie_simplicity_verdict, SteinbergAlgebra};
use crate::verdict::{CenterVerdict, LieVerdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INAPPLICABLE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

const CITE_LPA_SIMPLE: &str =
    "L_K(E) is simple iff the only hereditary saturated subsets are trivial and every cycle has an entry";
const CITE_LPA_LIE: &str =
    "for simple L_K(E) with finitely many vertices, [L, L] is simple iff the vertex sum is not in the span of the B-vectors";
const CITE_LPA_CENTER: &str = "a simple unital Leavitt path algebra has center K * 1";
const CITE_STEINBERG_SIMPLE: &str = "A_K(G) is simple iff G is effective and minimal";
const CITE_STEINBERG_CENTER: &str =
    "the center of A_K(G) is the span of class functions; K * 1 for effective minimal G with compact unit space";
const CITE_STEINBERG_LIE: &str =
    "for effective minimal G with compact unit space, [A, A] is simple iff 1 is not in [A, A]";
const CITE_EP_HAUSDORFF: &str =
    "the tight groupoid is Hausdorff iff each g and v admit finitely many minimal strongly fixed paths";
const CITE_EP_SIMPLE: &str =
    "L_K(G, E) is simple iff E is weakly G-transitive, every G-circuit has an entry, and every g fixing Z(v) pointwise is slack at v";
const CITE_EP_CENTER: &str = "a simple L_K(G, E) with finitely many vertices has center K * 1";
const CITE_EP_UNITAL: &str = "L_K(G, E) is unital iff E^0 is finite, with 1 the sum of the vertex projections";
const CITE_EP_LIE: &str = "for simple L_K(G, E), [L, L] is simple iff 1 is not in [L, L]";
const CITE_ORACLE: &str =
    "Lie ideals are the ad-invariant subspaces; irreducibility decided by Norton's criterion with exhaustive fallback";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "simplie",
    version,
    about = "Simplicity, center and Lie simplicity verdicts for graph, groupoid and self-similar algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
    /// Base field: `Q` or `Fp:<prime>`.
    #[arg(long, global = true, default_value = "Q")]
    pub field: FieldSpec,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Bound on strongly fixed path length (default |G| |E^0| + 1).
    #[arg(long, global = true)]
    pub depth: Option<usize>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Leavitt path algebra of a graph.
    Lpa { input: PathBuf },
    /// Steinberg algebra of a finite groupoid.
    Groupoid { input: PathBuf },
    /// Exel-Pardo algebra of a self-similar action.
    Ep { input: PathBuf },
    /// Theorem against Lie-ideal oracle on pair groupoids and given groupoids.
    Oracle {
        #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
        primes: Vec<u32>,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        inputs: Vec<PathBuf>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Lpa(PathBuf),
    Groupoid(PathBuf),
    Ep(PathBuf),
    Oracle {
        primes: Vec<u32>,
        max_n: usize,
        inputs: Vec<PathBuf>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub field: FieldSpec,
    pub format: Format,
    pub depth: Option<usize>,
    pub seed: u64,
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        let command = match cli.command {
            CliCommand::Lpa { input } => Command::Lpa(input),
            CliCommand::Groupoid { input } => Command::Groupoid(input),
            CliCommand::Ep { input } => Command::Ep(input),
            CliCommand::Oracle { primes, max_n, inputs } => Command::Oracle { primes, max_n, inputs },
        };
        RunConfig {
            command,
            field: cli.field,
            format: cli.format,
            depth: cli.depth,
            seed: cli.seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub verdicts: BTreeMap<String, Value>,
    pub criteria: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub exit_code: i32,
}

impl Report {
    fn new(command: &str, input: Option<String>, field: Option<FieldSpec>) -> Self {
        Report {
            command: command.to_string(),
            input,
            field: field.map(|f| f.to_string()),
            verdicts: BTreeMap::new(),
            criteria: Vec::new(),
            error: None,
            exit_code: EXIT_OK,
        }
    }

    fn set(&mut self, key: &str, value: Value) {
        self.verdicts.insert(key.to_string(), value);
    }

    fn cite(&mut self, c: &str) {
        self.criteria.push(c.to_string());
    }

    fn fail(mut self, code: i32, msg: impl Into<String>) -> Self {
        self.error = Some(msg.into());
        self.exit_code = self.exit_code.max(code);
        self
    }

    fn raise(&mut self, code: i32) {
        self.exit_code = self.exit_code.max(code);
    }
}

fn lie_json(v: &LieVerdict) -> Value {
    serde_json::to_value(v.to_json()).expect("verdict serializes")
}

fn center_json(v: &CenterVerdict) -> Value {
    serde_json::to_value(v.to_json()).expect("verdict serializes")
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &PathBuf) -> Result<T, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: schema violation: {e}", path.display()))
}

fn lpa_simplicity_json(g: &Graph, s: &LpaSimplicity) -> Value {
    match s {
        LpaSimplicity::Simple => json!({"verdict": "Simple"}),
        LpaSimplicity::NotSimple(NotSimpleReason::NontrivialHereditarySaturated(h)) => json!({
            "verdict": "NotSimple",
            "reason": "nontrivial hereditary saturated subset",
            "witness": g.subset_names(h),
        }),
        LpaSimplicity::NotSimple(NotSimpleReason::CycleWithoutEntry(c)) => json!({
            "verdict": "NotSimple",
            "reason": "cycle without entry",
            "witness": g.edge_names(c),
        }),
    }
}

fn run_lpa(path: &PathBuf, cfg: &RunConfig) -> Report {
    let input = Some(path.display().to_string());
    let fail = |e: String| Report::new("lpa", input.clone(), Some(cfg.field)).fail(EXIT_INAPPLICABLE, e);
    let doc: GraphDoc = match read_json(path) {
        Ok(d) => d,
        Err(e) => return fail(e),
    };
    match Graph::from_doc(&doc) {
        Ok(g) => lpa_report(&g, cfg.field, input),
        Err(e) => fail(e.to_string()),
    }
}

/// Leavitt path algebra verdicts for a parsed graph.
pub fn lpa_report(g: &Graph, field: FieldSpec, input: Option<String>) -> Report {
    let mut r = Report::new("lpa", input, Some(field));
    let simplicity = g.lpa_is_simple();
    r.set("lpa_simple", lpa_simplicity_json(g, &simplicity));
    r.cite(CITE_LPA_SIMPLE);
    let lie = lpa_lie_simple(g, field);
    let center = lpa_center(g);
    if simplicity.is_simple() {
        r.cite(CITE_LPA_LIE);
        r.cite(CITE_LPA_CENTER);
    }
    if matches!(lie, LieVerdict::Inapplicable(_)) {
        r.raise(EXIT_INAPPLICABLE);
    }
    r.set("lie", lie_json(&lie));
    r.set("center", center_json(&center));
    r
}

fn run_groupoid(path: &PathBuf, cfg: &RunConfig) -> Report {
    let input = Some(path.display().to_string());
    let fail = |e: String| Report::new("groupoid", input.clone(), Some(cfg.field)).fail(EXIT_INAPPLICABLE, e);
    let doc: GroupoidDoc = match read_json(path) {
        Ok(d) => d,
        Err(e) => return fail(e),
    };
    match FiniteGroupoid::from_doc(&doc) {
        Ok(g) => groupoid_report(&g, cfg.field, input),
        Err(e) => fail(e.to_string()),
    }
}

/// Steinberg algebra verdicts for a parsed groupoid.
pub fn groupoid_report(g: &FiniteGroupoid, field: FieldSpec, input: Option<String>) -> Report {
    let mut r = Report::new("groupoid", input, Some(field));
    match g.is_effective() {
        Ok(()) => r.set("effective", json!({"verdict": true})),
        Err(a) => r.set("effective", json!({"verdict": false, "witness": g.arrow(a).name})),
    }
    match g.is_minimal() {
        Ok(()) => r.set("minimal", json!({"verdict": true})),
        Err(o) => r.set("minimal", json!({"verdict": false, "witness": g.unit_names(&o)})),
    }
    r.cite(CITE_STEINBERG_SIMPLE);
    let alg = SteinbergAlgebra::new(g, field);
    match center_verdict(g, field) {
        Ok(c) => {
            let mut v = center_json(&c);
            if let Ok(basis) = alg.center_basis() {
                v["dimension"] = json!(basis.dim());
            }
            r.set("center", v);
            if !matches!(c, CenterVerdict::Inapplicable(_)) {
                r.cite(CITE_STEINBERG_CENTER);
            }
        }
        Err(e) => return r.fail(EXIT_INTERNAL, e.to_string()),
    }
    let lie = lie_simplicity_verdict(g, field);
    match &lie {
        LieVerdict::Inapplicable(_) => r.raise(EXIT_INAPPLICABLE),
        _ => r.cite(CITE_STEINBERG_LIE),
    }
    r.set("lie", lie_json(&lie));
    r
}

fn run_ep(path: &PathBuf, cfg: &RunConfig) -> Report {
    let input = Some(path.display().to_string());
    let fail = |e: String| Report::new("ep", input.clone(), Some(cfg.field)).fail(EXIT_INAPPLICABLE, e);
    let doc: ActionDoc = match read_json(path) {
        Ok(d) => d,
        Err(e) => return fail(e),
    };
    match SelfSimilarAction::from_doc(&doc) {
        Ok(a) => ep_report(&a, cfg.field, cfg.depth, input),
        Err(e) => fail(e.to_string()),
    }
}

/// Exel-Pardo verdicts for a parsed self-similar action. `depth` bounds the
/// minimal strongly fixed path search.
pub fn ep_report(a: &SelfSimilarAction, field: FieldSpec, depth: Option<usize>, input: Option<String>) -> Report {
    let mut r = Report::new("ep", input, Some(field));
    let gr = a.graph();
    let grp = a.group();
    r.cite(CITE_EP_HAUSDORFF);
    if let Err(w) = a.is_hausdorff() {
        let family: Vec<Vec<String>> = (0..3).map(|k| w.family.path(k).names(gr)).collect();
        r.set(
            "hausdorff",
            json!({
                "verdict": false,
                "g": grp.name(w.g),
                "v": gr.vertex_name(w.v),
                "stem": gr.edge_names(&w.family.stem),
                "cycle": gr.edge_names(&w.family.cycle),
                "exit": gr.edge_names(&w.family.exit),
                "first_members": family,
            }),
        );
        return r.fail(EXIT_INAPPLICABLE, "non-Hausdorff action: verdicts refused");
    }
    r.set("hausdorff", json!({"verdict": true}));
    let mut fixed = Vec::new();
    for g in 0..grp.order() {
        for v in 0..gr.vertex_count() {
            if let StronglyFixed::Finite(paths) = a.minimal_strongly_fixed(g, v, depth) {
                if !paths.is_empty() {
                    fixed.push(json!({
                        "g": grp.name(g),
                        "v": gr.vertex_name(v),
                        "paths": paths.iter().map(|p| p.describe(gr)).collect::<Vec<_>>(),
                    }));
                }
            }
        }
    }
    r.set("minimal_strongly_fixed", Value::Array(fixed));
    let rep = match a.ep_verdict(field) {
        Ok(rep) => rep,
        Err(e) => return r.fail(EXIT_INAPPLICABLE, e.to_string()),
    };
    r.set(
        "weakly_transitive",
        match &rep.weakly_transitive {
            Ok(()) => json!({"verdict": true}),
            Err(w) => json!({
                "verdict": false,
                "cycle": w.cycle.names(gr),
                "vertex": gr.vertex_name(w.vertex),
            }),
        },
    );
    r.set(
        "entry_free_circuits",
        Value::Array(
            rep.entry_free_circuits
                .iter()
                .map(|c| json!({"g": grp.name(c.g), "circuit": c.path.names(gr)}))
                .collect(),
        ),
    );
    r.set(
        "slack_failures",
        Value::Array(
            rep.slack_failures
                .iter()
                .map(|&(g, v)| json!({"g": grp.name(g), "v": gr.vertex_name(v)}))
                .collect(),
        ),
    );
    r.set("simple", json!({"verdict": rep.simple}));
    r.set("unital", json!({"verdict": rep.unital}));
    r.set("center", center_json(&rep.center));
    r.set("lie", lie_json(&rep.lie));
    r.cite(CITE_EP_SIMPLE);
    r.cite(CITE_EP_UNITAL);
    if rep.simple {
        r.cite(CITE_EP_CENTER);
        r.cite(CITE_EP_LIE);
        if grp.is_trivial() {
            r.cite(CITE_LPA_LIE);
        }
    }
    if matches!(rep.lie, LieVerdict::Inapplicable(_)) {
        r.raise(EXIT_INAPPLICABLE);
    }
    r
}

/// One row of the oracle grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridRow {
    pub groupoid: String,
    pub p: u32,
    pub theorem: String,
    pub oracle: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    pub lie_dim: Option<usize>,
    pub agree: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

pub fn oracle_row(name: &str, g: &FiniteGroupoid, p: u32, expected: Option<bool>, seed: u64) -> GridRow {
    let label = |simple: bool| if simple { "Simple" } else { "NotSimple" }.to_string();
    match cross_check_groupoid(g, p, seed) {
        Ok(rep) => {
            let agree = rep.agree && expected.is_none_or(|e| e == rep.theorem.is_simple());
            GridRow {
                groupoid: name.to_string(),
                p,
                theorem: rep.theorem.label().to_string(),
                oracle: match rep.oracle {
                    LieSimplicity::Simple => "Simple".into(),
                    _ => "NotSimple".into(),
                },
                expected: expected.map(label),
                lie_dim: Some(rep.lie_dim),
                agree,
                error: None,
            }
        }
        Err(e) => GridRow {
            groupoid: name.to_string(),
            p,
            theorem: match &e {
                LieError::Disagreement { theorem, .. } => theorem.clone(),
                _ => "-".into(),
            },
            oracle: match &e {
                LieError::Disagreement { oracle, .. } => oracle.clone(),
                _ => "-".into(),
            },
            expected: expected.map(label),
            lie_dim: None,
            agree: false,
            error: Some(e.to_string()),
        },
    }
}

fn run_oracle(primes: &[u32], max_n: usize, inputs: &[PathBuf], cfg: &RunConfig) -> Report {
    let mut r = Report::new("oracle", None, None);
    let mut groupoids: Vec<(String, FiniteGroupoid, bool)> = (2..=max_n)
        .map(|n| (format!("P_{n}"), FiniteGroupoid::pair(n), true))
        .collect();
    for path in inputs {
        let doc: GroupoidDoc = match read_json(path) {
            Ok(d) => d,
            Err(e) => return r.fail(EXIT_INAPPLICABLE, e),
        };
        match FiniteGroupoid::from_doc(&doc) {
            Ok(g) => groupoids.push((path.display().to_string(), g, false)),
            Err(e) => return r.fail(EXIT_INAPPLICABLE, format!("{}: {e}", path.display())),
        }
    }
    let jobs: Vec<(usize, u32)> = (0..groupoids.len())
        .flat_map(|i| primes.iter().map(move |&p| (i, p)))
        .collect();
    let rows: Vec<GridRow> = jobs
        .par_iter()
        .map(|&(i, p)| {
            let (name, g, is_pair) = &groupoids[i];
            // Lie simplicity of [M_n, M_n] over F_p holds iff p does not divide n.
            let expected = is_pair.then(|| !(g.unit_count() as u32).is_multiple_of(p));
            oracle_row(name, g, p, expected, cfg.seed)
        })
        .collect();
    let all = rows.iter().all(|row| row.agree);
    if rows
        .iter()
        .any(|row| matches!(row.error.as_deref(), Some(e) if e.contains("precondition")))
    {
        r.raise(EXIT_INAPPLICABLE);
    }
    if rows
        .iter()
        .any(|row| !row.agree && !matches!(row.error.as_deref(), Some(e) if e.contains("precondition")))
    {
        r.raise(EXIT_INTERNAL);
    }
    r.set("rows", serde_json::to_value(&rows).expect("rows serialize"));
    r.set("all_agree", json!(all));
    r.cite(CITE_STEINBERG_LIE);
    r.cite(CITE_ORACLE);
    r
}

pub fn run(cfg: &RunConfig) -> Report {
    match &cfg.command {
        Command::Lpa(p) => run_lpa(p, cfg),
        Command::Groupoid(p) => run_groupoid(p, cfg),
        Command::Ep(p) => run_ep(p, cfg),
        Command::Oracle { primes, max_n, inputs } => run_oracle(primes, *max_n, inputs, cfg),
    }
}

fn render_value(out: &mut String, indent: usize, v: &Value) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Object(_) | Value::Array(_) if !is_flat(x) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render_value(out, indent + 1, x);
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{k}: {}", scalar_text(x));
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                if is_flat(x) {
                    let _ = writeln!(out, "{pad}- {}", scalar_text(x));
                } else {
                    let _ = writeln!(out, "{pad}-");
                    render_value(out, indent + 1, x);
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar_text(other));
        }
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_object() && !x.is_array()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(scalar_text).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "command: {}", report.command);
            if let Some(i) = &report.input {
                let _ = writeln!(out, "input: {i}");
            }
            if let Some(f) = &report.field {
                let _ = writeln!(out, "field: {f}");
            }
            for (k, v) in &report.verdicts {
                if is_flat(v) {
                    let _ = writeln!(out, "{k}: {}", scalar_text(v));
                } else {
                    let _ = writeln!(out, "{k}:");
                    render_value(&mut out, 1, v);
                }
            }
            if !report.criteria.is_empty() {
                let _ = writeln!(out, "criteria applied:");
                for c in &report.criteria {
                    let _ = writeln!(out, "  - {c}");
                }
            }
            if let Some(e) = &report.error {
                let _ = writeln!(out, "error: {e}");
            }
            let _ = writeln!(out, "exit: {}", report.exit_code);
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn write(dir: &tempfile::TempDir, name: &str, value: &impl Serialize) -> PathBuf {
        let p = dir.path().join(name);
        std::fs::write(&p, serde_json::to_string(value).unwrap()).unwrap();
        p
    }

    fn cfg(command: Command, field: &str) -> RunConfig {
        RunConfig {
            command,
            field: field.parse().unwrap(),
            format: Format::Json,
            depth: None,
            seed: DEFAULT_SEED,
        }
    }

    #[test]
    fn lpa_on_infinite_rose() {
        let dir = tempfile::tempdir().unwrap();
        let p = write(&dir, "r_infty.json", &fixtures::rose_infinite().to_doc());
        let r = run(&cfg(Command::Lpa(p), "Q"));
        assert_eq!(r.exit_code, EXIT_OK);
        assert_eq!(r.verdicts["lpa_simple"]["verdict"], "Simple");
        assert_eq!(r.verdicts["lie"]["verdict"], "Simple");
        assert!(!r.criteria.is_empty());
    }

    #[test]
    fn groupoid_pair2_over_f2() {
        let dir = tempfile::tempdir().unwrap();
        let p = write(&dir, "pair2.json", &FiniteGroupoid::pair(2).to_doc());
        let r = run(&cfg(Command::Groupoid(p), "Fp:2"));
        assert_eq!(r.exit_code, EXIT_OK);
        assert_eq!(r.verdicts["effective"]["verdict"], true);
        assert_eq!(r.verdicts["minimal"]["verdict"], true);
        assert_eq!(r.verdicts["lie"]["verdict"], "NotSimple");
    }

    #[test]
    fn oracle_grid_agrees() {
        let r = run(&cfg(
            Command::Oracle {
                primes: vec![2, 3, 5],
                max_n: 3,
                inputs: vec![],
            },
            "Q",
        ));
        assert_eq!(r.exit_code, EXIT_OK, "{r:?}");
        assert_eq!(r.verdicts["all_agree"], true);
    }

    #[test]
    fn exit_codes() {
        let dir = tempfile::tempdir().unwrap();
        let r1 = write(&dir, "r1.json", &fixtures::rose(1).to_doc());
        assert_eq!(run(&cfg(Command::Lpa(r1), "Q")).exit_code, EXIT_INAPPLICABLE);
        let bad = dir.path().join("bad.json");
        std::fs::write(&bad, "{\"vertices\": [\"v\"], \"edges\": [{\"name\": 3}]}").unwrap();
        let r = run(&cfg(Command::Lpa(bad), "Q"));
        assert_eq!(r.exit_code, EXIT_INAPPLICABLE);
        assert!(r.error.unwrap().contains("line 1"));
        let nh = write(&dir, "nhaus.json", &fixtures::nhaus().to_doc());
        assert_eq!(run(&cfg(Command::Ep(nh), "Q")).exit_code, EXIT_INAPPLICABLE);
    }

    #[test]
    fn json_round_trip_and_determinism() {
        let dir = tempfile::tempdir().unwrap();
        let p = write(&dir, "swap.json", &fixtures::swap().to_doc());
        let c = cfg(Command::Ep(p), "Q");
        let a = render(&run(&c), Format::Json);
        let b = render(&run(&c), Format::Json);
        assert_eq!(a, b);
        let back: Report = serde_json::from_str(&a).unwrap();
        assert_eq!(render(&back, Format::Json), a);
        assert_eq!(back.verdicts["simple"]["verdict"], true);
    }

    #[test]
    fn parses_arguments() {
        let cli = Cli::try_parse_from(["simplie", "oracle", "--primes", "2,3", "--max-n", "3"]).unwrap();
        let c = RunConfig::from(cli);
        assert_eq!(
            c.command,
            Command::Oracle {
                primes: vec![2, 3],
                max_n: 3,
                inputs: vec![]
            }
        );
        assert!(Cli::try_parse_from(["simplie", "lpa", "--field", "Fp:4", "x.json"]).is_err());
    }
}
