mod error;
mod input;
mod verify;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coxfactor::diagrams::{chord_diagram, colored_dual_graph, dual_graph, folded_diagram};
use coxfactor::factorization::{enumerate, enumerate_par, signed_count_of, FactorizationRecord};
use coxfactor::goulden_yong::{
    gy_dual_a, gy_dual_b, gy_dual_d, gy_inverse_a, gy_inverse_b, gy_inverse_d,
};
use coxfactor::matrix_tree::{build_g_an, build_g_an_weighted, count_of, laplacian, minor_det};
use coxfactor::prufer::{
    prufer_decode, prufer_encode, rooted_decode, rooted_encode, type_b_decode, type_b_encode,
    type_d_decode, type_d_encode, PruferCode, PruferVariant, RootEncoding,
};
use coxfactor::{
    Family, LoopedTree, MinimalFactorization, RootSystem, RootedLabeledTree, UnicyclicRootedGraph,
};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::verify::Suite;

pub const SCHEMA_VERSION: u32 = 1;

const MAX_RANK_ENV: &str = "COXFACTOR_MAX_RANK";

#[derive(Parser)]
#[command(
    name = "coxfactor",
    version,
    about = "Minimal reflection factorizations of Coxeter elements in types A, B and D"
)]
struct Cli {
    /// Worker threads for enumeration; 1 runs sequentially.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every minimal reflection factorization of the standard Coxeter element.
    Enumerate(EnumerateArgs),
    /// Count factorizations by one or more methods.
    Count(CountArgs),
    /// Dual graph of a factorization.
    Dual(DiagramArgs),
    /// Goulden-Yong duality between factorizations and trees.
    Gy {
        #[command(subcommand)]
        action: GyAction,
    },
    /// Prüfer-type codes of trees and unicyclic graphs.
    Prufer {
        #[command(subcommand)]
        action: PruferAction,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify(VerifyArgs),
    /// Draw a chord diagram, folded diagram or dual graph.
    Render(RenderArgs),
}

#[derive(Args, Clone, Copy)]
struct GroupArgs {
    /// Family: A, B or D.
    #[arg(long = "type", short = 't')]
    family: Family,

    #[arg(long, short = 'n')]
    rank: usize,

    /// Ignore the safety cap on rank.
    #[arg(long)]
    allow_large: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
    Dot,
    Tikz,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    group: GroupArgs,

    /// Print only the number of factorizations.
    #[arg(long)]
    count: bool,

    /// Shorthand for `--format json`.
    #[arg(long, conflicts_with = "format")]
    json: bool,

    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,

    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Method {
    /// Exhaustive enumeration.
    Enumerate,
    /// Minor of the Laplacian of G_{A_n} (type A).
    Det,
    /// Minor of the weighted Laplacian, counting signed factorizations (type A).
    WeightedDet,
    /// Closed form.
    Formula,
    /// Signed factorizations, by enumeration.
    Signed,
    /// Ordered W-Catalan number.
    Catalan,
    /// Every applicable method, compared.
    All,
}

impl Method {
    fn counts_signed(self) -> bool {
        matches!(self, Method::WeightedDet | Method::Signed | Method::Catalan)
    }
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    group: GroupArgs,

    #[arg(long, value_enum, default_value_t = Method::Enumerate)]
    method: Method,

    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Args)]
struct DiagramArgs {
    #[command(flatten)]
    group: GroupArgs,

    /// Factorization JSON (record or list of roots); `-` for stdin.
    #[arg(long, short = 'i', default_value = "-")]
    input: PathBuf,

    /// Color edges by one-way flags.
    #[arg(long)]
    colored: bool,

    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,

    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GyAction {
    /// Factorization to tree (A), looped tree (B) or unicyclic graph (D).
    Encode {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, short = 'i', default_value = "-")]
        input: PathBuf,
    },
    /// Back to factorizations; type D yields two.
    Decode {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, short = 'i', default_value = "-")]
        input: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Variant {
    Classic,
    Rooted,
    B,
    D,
}

impl From<Variant> for PruferVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Classic => PruferVariant::Classic,
            Variant::Rooted => PruferVariant::Rooted,
            Variant::B => PruferVariant::TypeB,
            Variant::D => PruferVariant::TypeD,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RootEncodingArg {
    Raw,
    Normalized,
}

impl From<RootEncodingArg> for RootEncoding {
    fn from(r: RootEncodingArg) -> Self {
        match r {
            RootEncodingArg::Raw => RootEncoding::Raw,
            RootEncodingArg::Normalized => RootEncoding::Normalized,
        }
    }
}

#[derive(Subcommand)]
enum PruferAction {
    /// Encode a tree (classic, rooted), looped tree (b) or unicyclic graph (d).
    Encode {
        #[arg(long, value_enum)]
        variant: Variant,
        #[arg(long, short = 'i', default_value = "-")]
        input: PathBuf,
        /// How a type D root is written in the first entry.
        #[arg(long, value_enum, default_value_t = RootEncodingArg::Normalized)]
        root_encoding: RootEncodingArg,
        #[arg(long)]
        json: bool,
    },
    /// Decode a code given as `3,3,4,4` or `[3,3,4,4]`.
    Decode {
        #[arg(long, value_enum)]
        variant: Variant,
        #[arg(long, allow_hyphen_values = true)]
        code: String,
        #[arg(long, value_enum, default_value_t = RootEncodingArg::Normalized)]
        root_encoding: RootEncodingArg,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,

    #[arg(long, default_value_t = 4)]
    max_rank: usize,

    /// Seed for randomized suites.
    #[arg(long, default_value_t = 2024)]
    seed: u64,

    /// Random graphs in the determinant suite.
    #[arg(long, default_value_t = 200)]
    trials: usize,

    #[arg(long)]
    allow_large: bool,

    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Diagram {
    Chords,
    Folded,
    Dual,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    group: GroupArgs,

    #[arg(long, value_enum, default_value_t = Diagram::Chords)]
    diagram: Diagram,

    #[arg(long, short = 'i', default_value = "-")]
    input: PathBuf,

    #[arg(long)]
    colored: bool,

    #[arg(long, value_enum, default_value_t = Format::Dot)]
    format: Format,

    #[arg(long)]
    out: Option<PathBuf>,
}

fn default_cap(family: Family) -> usize {
    match family {
        Family::A => 6,
        Family::B | Family::D => 5,
    }
}

fn rank_cap(family: Family) -> CliResult<usize> {
    match std::env::var(MAX_RANK_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{MAX_RANK_ENV}={v:?} is not a rank"))),
        Err(_) => Ok(default_cap(family)),
    }
}

fn check_cap(family: Family, rank: usize, allow_large: bool) -> CliResult<()> {
    let cap = rank_cap(family)?;
    if !allow_large && rank > cap {
        return Err(CliError::Usage(format!(
            "rank {rank} exceeds the cap of {cap} for type {family}; \
             pass --allow-large or set {MAX_RANK_ENV}"
        )));
    }
    Ok(())
}

fn system(g: GroupArgs) -> CliResult<RootSystem> {
    check_cap(g.family, g.rank, g.allow_large)?;
    RootSystem::new(g.family, g.rank).map_err(|e| CliError::Usage(e.to_string()))
}

fn all_factorizations(sys: &RootSystem, threads: usize) -> CliResult<Vec<MinimalFactorization>> {
    let c = sys.standard_coxeter_element();
    Ok(if threads > 1 {
        enumerate_par(sys, &c)?
    } else {
        enumerate(sys, &c)?
    })
}

fn emit(text: &str, out: Option<&Path>) -> CliResult<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable output")
}

fn unsupported(format: Format, what: &str) -> CliError {
    CliError::Usage(format!("format {format:?} is not available for {what}"))
}

fn cmd_enumerate(a: &EnumerateArgs, threads: usize) -> CliResult<()> {
    let sys = system(a.group)?;
    let all = all_factorizations(&sys, threads)?;
    let format = if a.json { Format::Json } else { a.format };
    let out = a.out.as_deref();
    if a.count {
        return match format {
            Format::Plain => emit(&all.len().to_string(), out),
            Format::Json => emit(
                &to_json(&json!({
                    "schema_version": SCHEMA_VERSION,
                    "type": sys.family(),
                    "rank": sys.rank(),
                    "count": all.len(),
                })),
                out,
            ),
            f => Err(unsupported(f, "counts")),
        };
    }
    match format {
        Format::Plain => {
            let lines: Vec<String> = all
                .iter()
                .map(|f| {
                    let flags: String = f
                        .one_way_flags(&sys)
                        .iter()
                        .map(|&b| if b { '1' } else { '0' })
                        .collect();
                    format!("{f}  {flags}")
                })
                .collect();
            emit(&lines.join("\n"), out)
        }
        Format::Json => {
            let records: Vec<FactorizationRecord> = all.iter().map(|f| f.to_record(&sys)).collect();
            emit(
                &to_json(&json!({
                    "schema_version": SCHEMA_VERSION,
                    "type": sys.family(),
                    "rank": sys.rank(),
                    "coxeter": sys.standard_coxeter_element(),
                    "count": all.len(),
                    "factorizations": records,
                })),
                out,
            )
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let header = |k: usize| format!("r{k}");
            let mut row = vec!["index".to_string()];
            row.extend((1..=sys.rank()).map(header));
            row.push("one_way".into());
            w.write_record(&row)
                .map_err(|e| CliError::Failed(e.to_string()))?;
            for (i, f) in all.iter().enumerate() {
                let mut row = vec![(i + 1).to_string()];
                row.extend(f.roots().iter().map(|r| r.to_string()));
                row.push(
                    f.one_way_flags(&sys)
                        .iter()
                        .map(|&b| if b { '1' } else { '0' })
                        .collect(),
                );
                w.write_record(&row)
                    .map_err(|e| CliError::Failed(e.to_string()))?;
            }
            let bytes = w
                .into_inner()
                .map_err(|e| CliError::Failed(e.to_string()))?;
            emit(&String::from_utf8(bytes).expect("utf-8 csv"), out)
        }
        f => Err(unsupported(f, "enumerate")),
    }
}

fn count_by(sys: &RootSystem, method: Method, threads: usize) -> CliResult<BigUint> {
    let type_a_only = |what: &str| {
        if sys.family() == Family::A {
            Ok(())
        } else {
            Err(CliError::Usage(format!(
                "--method {what} is only defined for type A"
            )))
        }
    };
    let n = sys.rank();
    Ok(match method {
        Method::Enumerate => BigUint::from(all_factorizations(sys, threads)?.len()),
        Method::Det => {
            type_a_only("det")?;
            count_of(&minor_det(&laplacian(&build_g_an(n)?), n + 1)?)
        }
        Method::WeightedDet => {
            type_a_only("weighted-det")?;
            count_of(&minor_det(&laplacian(&build_g_an_weighted(n)?), n + 1)?)
        }
        Method::Formula => verify::formula_count(sys.family(), n),
        Method::Signed => signed_count_of(sys, &all_factorizations(sys, threads)?),
        Method::Catalan => sys.ordered_w_catalan()?,
        Method::All => unreachable!("expanded by the caller"),
    })
}

fn cmd_count(a: &CountArgs, threads: usize) -> CliResult<()> {
    let sys = system(a.group)?;
    let methods: Vec<Method> = if a.method == Method::All {
        let mut m = vec![
            Method::Enumerate,
            Method::Formula,
            Method::Signed,
            Method::Catalan,
        ];
        if sys.family() == Family::A {
            m.extend([Method::Det, Method::WeightedDet]);
        }
        m.sort();
        m
    } else {
        vec![a.method]
    };
    let mut values: BTreeMap<Method, BigUint> = BTreeMap::new();
    for &m in &methods {
        values.insert(m, count_by(&sys, m, threads)?);
    }
    let disagreements: Vec<String> = [false, true]
        .iter()
        .filter_map(|&signed| {
            let group: Vec<(&Method, &BigUint)> = values
                .iter()
                .filter(|(m, _)| m.counts_signed() == signed)
                .collect();
            let first = group.first()?.1;
            group.iter().any(|(_, v)| *v != first).then(|| {
                group
                    .iter()
                    .map(|(m, v)| format!("{m:?}={v}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
        })
        .collect();
    match a.format {
        Format::Plain if methods.len() == 1 => emit(&values[&methods[0]].to_string(), None)?,
        Format::Plain => {
            let lines: Vec<String> = values
                .iter()
                .map(|(m, v)| {
                    let kind = if m.counts_signed() { "signed" } else { "plain" };
                    format!("{} {kind} {v}", method_name(*m))
                })
                .collect();
            emit(&lines.join("\n"), None)?;
        }
        Format::Json => {
            let counts: BTreeMap<String, String> = values
                .iter()
                .map(|(m, v)| (method_name(*m), v.to_string()))
                .collect();
            emit(
                &to_json(&json!({
                    "schema_version": SCHEMA_VERSION,
                    "type": sys.family(),
                    "rank": sys.rank(),
                    "counts": counts,
                    "agree": disagreements.is_empty(),
                })),
                None,
            )?;
        }
        f => return Err(unsupported(f, "count")),
    }
    if disagreements.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(format!(
            "methods disagree: {}",
            disagreements.join("; ")
        )))
    }
}

fn method_name(m: Method) -> String {
    m.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

fn cmd_dual(a: &DiagramArgs) -> CliResult<()> {
    let sys = system(a.group)?;
    let f = input::read_factorization(&sys, &a.input)?;
    let dual = if a.colored {
        colored_dual_graph(&sys, &f)
    } else {
        dual_graph(&sys, &f)
    };
    let out = a.out.as_deref();
    match a.format {
        Format::Plain => {
            let lines: Vec<String> = dual
                .graph()
                .edges()
                .iter()
                .map(|e| format!("{}: {}-{}", e.label, e.a, e.b))
                .collect();
            emit(&lines.join("\n"), out)
        }
        Format::Json => emit(
            &to_json(&json!({
                "schema_version": SCHEMA_VERSION,
                "factorization": f.to_record(&sys),
                "dual": dual,
            })),
            out,
        ),
        Format::Dot => emit(&dual.graph().to_dot("dual", dual.colors()), out),
        Format::Tikz => emit(&dual.graph().to_tikz(dual.colors()), out),
        f => Err(unsupported(f, "dual")),
    }
}

fn envelope(kind: &str, sys: &RootSystem, object: Value) -> String {
    to_json(&json!({
        "schema_version": SCHEMA_VERSION,
        "kind": kind,
        "type": sys.family(),
        "rank": sys.rank(),
        "object": object,
    }))
}

fn cmd_gy(action: &GyAction) -> CliResult<()> {
    match action {
        GyAction::Encode { group, input } => {
            let sys = system(*group)?;
            let f = input::read_factorization(&sys, input)?;
            let (kind, object) = match sys.family() {
                Family::A => ("tree", serde_json::to_value(gy_dual_a(&sys, &f)?)),
                Family::B => ("looped-tree", serde_json::to_value(gy_dual_b(&sys, &f)?)),
                Family::D => (
                    "unicyclic-graph",
                    serde_json::to_value(gy_dual_d(&sys, &f)?),
                ),
            };
            emit(&envelope(kind, &sys, object.expect("serializable")), None)
        }
        GyAction::Decode { group, input } => {
            let sys = system(*group)?;
            let found = match sys.family() {
                Family::A => {
                    let t: RootedLabeledTree = input::read_object(input)?;
                    vec![gy_inverse_a(&sys, &t).map_err(|e| CliError::Input(e.to_string()))?]
                }
                Family::B => {
                    let t: LoopedTree = input::read_object(input)?;
                    vec![gy_inverse_b(&sys, &t).map_err(|e| CliError::Input(e.to_string()))?]
                }
                Family::D => {
                    let g: UnicyclicRootedGraph = input::read_object(input)?;
                    gy_inverse_d(&sys, &g).map_err(|e| CliError::Input(e.to_string()))?
                }
            };
            let records: Vec<FactorizationRecord> =
                found.iter().map(|f| f.to_record(&sys)).collect();
            emit(
                &to_json(&json!({
                    "schema_version": SCHEMA_VERSION,
                    "type": sys.family(),
                    "rank": sys.rank(),
                    "factorizations": records,
                })),
                None,
            )
        }
    }
}

fn cmd_prufer(action: &PruferAction) -> CliResult<()> {
    let bad = |e: coxfactor::Error| CliError::Input(e.to_string());
    match action {
        PruferAction::Encode {
            variant,
            input,
            root_encoding,
            json,
        } => {
            let (n, entries) = match variant {
                Variant::Classic => {
                    let t: RootedLabeledTree = input::read_object(input)?;
                    (t.size(), prufer_encode(&t).map_err(bad)?)
                }
                Variant::Rooted => {
                    let t: RootedLabeledTree = input::read_object(input)?;
                    (t.size(), rooted_encode(&t))
                }
                Variant::B => {
                    let t: LoopedTree = input::read_object(input)?;
                    (t.size(), type_b_encode(&t))
                }
                Variant::D => {
                    let g: UnicyclicRootedGraph = input::read_object(input)?;
                    (
                        g.size(),
                        type_d_encode(&g, (*root_encoding).into()).map_err(bad)?,
                    )
                }
            };
            if *json {
                let code = PruferCode {
                    variant: (*variant).into(),
                    n,
                    entries,
                };
                let mut v = serde_json::to_value(&code).expect("serializable");
                v["schema_version"] = json!(SCHEMA_VERSION);
                if *variant == Variant::D {
                    v["root_encoding"] = json!(RootEncoding::from(*root_encoding));
                }
                emit(&to_json(&v), None)
            } else {
                emit(
                    &serde_json::to_string(&entries).expect("serializable"),
                    None,
                )
            }
        }
        PruferAction::Decode {
            variant,
            code,
            root_encoding,
            json,
        } => {
            let code = input::parse_code(code)?;
            let (kind, object, text) = match variant {
                Variant::Classic => {
                    let t = prufer_decode(&code).map_err(bad)?;
                    ("tree", serde_json::to_value(&t), t.to_string())
                }
                Variant::Rooted => {
                    let t = rooted_decode(&code, code.len() + 1).map_err(bad)?;
                    ("tree", serde_json::to_value(&t), t.to_string())
                }
                Variant::B => {
                    let t = type_b_decode(&code).map_err(bad)?;
                    ("looped-tree", serde_json::to_value(&t), t.to_string())
                }
                Variant::D => {
                    let g = type_d_decode(&code, (*root_encoding).into()).map_err(bad)?;
                    ("unicyclic-graph", serde_json::to_value(&g), g.to_string())
                }
            };
            if *json {
                emit(
                    &to_json(&json!({
                        "schema_version": SCHEMA_VERSION,
                        "kind": kind,
                        "object": object.expect("serializable"),
                    })),
                    None,
                )
            } else {
                emit(&text, None)
            }
        }
    }
}

fn cmd_verify(a: &VerifyArgs, threads: usize) -> CliResult<()> {
    for family in [Family::A, Family::B, Family::D] {
        check_cap(family, a.max_rank, a.allow_large)?;
    }
    let report = verify::run(
        a.suite,
        &verify::Options {
            max_rank: a.max_rank,
            seed: a.seed,
            trials: a.trials,
            parallel: threads > 1,
        },
    );
    emit(&to_json(&report), a.out.as_deref())?;
    if report.passed {
        Ok(())
    } else {
        Err(CliError::Failed(format!(
            "{} of {} checks failed",
            report.failures.len(),
            report.checks
        )))
    }
}

fn cmd_render(a: &RenderArgs) -> CliResult<()> {
    let sys = system(a.group)?;
    let f = input::read_factorization(&sys, &a.input)?;
    let flags = f.one_way_flags(&sys);
    let out = a.out.as_deref();
    let text = match a.diagram {
        Diagram::Chords => {
            let mut d = chord_diagram(&f);
            if a.colored {
                d = d.colored(&flags)?;
            }
            match a.format {
                Format::Dot => d.to_dot("chords"),
                Format::Tikz => d.to_tikz(),
                Format::Json => to_json(&json!({"schema_version": SCHEMA_VERSION, "chords": d})),
                other => return Err(unsupported(other, "render")),
            }
        }
        Diagram::Folded => {
            let mut d = folded_diagram(&f).map_err(|e| CliError::Usage(e.to_string()))?;
            if a.colored {
                d = d.colored(&flags)?;
            }
            match a.format {
                Format::Dot => d.graph().to_dot("folded", d.colors()),
                Format::Tikz => d.graph().to_tikz(d.colors()),
                Format::Json => to_json(&json!({"schema_version": SCHEMA_VERSION, "folded": d})),
                other => return Err(unsupported(other, "render")),
            }
        }
        Diagram::Dual => {
            let d = if a.colored {
                colored_dual_graph(&sys, &f)
            } else {
                dual_graph(&sys, &f)
            };
            match a.format {
                Format::Dot => d.graph().to_dot("dual", d.colors()),
                Format::Tikz => d.graph().to_tikz(d.colors()),
                Format::Json => to_json(&json!({"schema_version": SCHEMA_VERSION, "dual": d})),
                other => return Err(unsupported(other, "render")),
            }
        }
    };
    emit(&text, out)
}

fn run(cli: Cli) -> CliResult<()> {
    if cli.threads == 0 {
        return Err(CliError::Usage("--threads must be positive".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build_global()
        .map_err(|e| CliError::Failed(e.to_string()))?;
    match &cli.command {
        Command::Enumerate(a) => cmd_enumerate(a, cli.threads),
        Command::Count(a) => cmd_count(a, cli.threads),
        Command::Dual(a) => cmd_dual(a),
        Command::Gy { action } => cmd_gy(action),
        Command::Prufer { action } => cmd_prufer(action),
        Command::Verify(a) => cmd_verify(a, cli.threads),
        Command::Render(a) => cmd_render(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("coxfactor: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
