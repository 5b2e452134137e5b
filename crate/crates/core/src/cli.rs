//! Command-line front end.
//!
//! Decision subcommands (`stable`, `semistable`, `simple`, `torus-knot`)
//! exit 0 for YES, 1 for NO and 2 on any error, so they compose in shell
//! scripts. Constructive subcommands exit 0 once they have printed their
//! result. With `--json` every command prints a single object
//! `{"data": ..., "verdict": ...}` with sorted keys, so output is
//! byte-identical across runs and platforms.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::oracle::{
    default_knot_modulus, oracle_simple_report, oracle_torus_knot_report, OracleReport,
    PrimeFieldConfig,
};
use crate::quiver::{DimVector, Preset, Quiver, Weight};
use crate::schofield::{SubdimTable, DEFAULT_LATTICE_BUDGET};
use crate::stability::{
    is_theta_semistable_with, is_theta_stable_with, local_quiver, Decomposition,
};
use crate::torus_knot::{
    build_gamma, find_decomposition, torus_knot_obstruction, Obstruction, TorusKnotDims,
};

#[derive(Parser, Debug)]
#[command(
    name = "quiver-moduli",
    version,
    about = "Stability and simplicity of quiver dimension vectors, local quivers, \
             and irreducibility of torus knot group representations"
)]
pub struct Cli {
    /// Print one JSON object {"data": ..., "verdict": ...} instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub cmd: Cmd,
}

/// Where the working quiver comes from: exactly one of a JSON file or a
/// named preset.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct QuiverSource {
    /// Path to a quiver JSON file {"vertices": k, "arrows": [[s, t], ...]}.
    #[arg(long, value_name = "FILE")]
    pub quiver: Option<PathBuf>,
    /// Built-in family: kronecker:n, cyclic:n or bipartite:p:q.
    #[arg(long, value_name = "NAME")]
    pub preset: Option<Preset>,
}

impl QuiverSource {
    fn load(&self) -> Result<Quiver> {
        if let Some(path) = &self.quiver {
            let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
                path: path.clone(),
                source,
            })?;
            return Quiver::from_json_str(&text);
        }
        if let Some(preset) = self.preset {
            return preset.build();
        }
        unreachable!("clap enforces exactly one quiver source");
    }
}

#[derive(Args, Debug)]
pub struct StabilityArgs {
    #[command(flatten)]
    pub source: QuiverSource,
    /// Weight, one integer per vertex, e.g. -1,1.
    #[arg(long, allow_hyphen_values = true, value_name = "LIST")]
    pub theta: Weight,
    /// Dimension vector, one count per vertex, e.g. 2,2.
    #[arg(long, value_name = "LIST")]
    pub alpha: DimVector,
    /// Cap on the lattice box the recursion may enumerate.
    #[arg(long, default_value_t = DEFAULT_LATTICE_BUDGET)]
    pub budget: u128,
}

#[derive(Args, Debug)]
pub struct SimpleArgs {
    #[command(flatten)]
    pub source: QuiverSource,
    /// Dimension vector, one count per vertex.
    #[arg(long, value_name = "LIST")]
    pub alpha: DimVector,
}

#[derive(Args, Debug)]
pub struct TorusKnotArgs {
    /// Order of the first cyclic factor (number of eigenvalue classes).
    #[arg(value_name = "P")]
    pub p: usize,
    /// Order of the second cyclic factor.
    #[arg(value_name = "Q")]
    pub q: usize,
    /// Eigenvalue multiplicities of the first generator, e.g. 2,1.
    #[arg(short = 'a', long = "a", value_name = "LIST")]
    pub a: DimVector,
    /// Eigenvalue multiplicities of the second generator, e.g. 1,1,1.
    #[arg(short = 'b', long = "b", value_name = "LIST")]
    pub b: DimVector,
    /// Also print the interaction quiver and a canonical decomposition.
    #[arg(long)]
    pub emit_gamma: bool,
}

#[derive(Args, Debug)]
pub struct SubdimsArgs {
    #[command(flatten)]
    pub source: QuiverSource,
    #[arg(long, value_name = "LIST")]
    pub alpha: DimVector,
    #[arg(long, default_value_t = DEFAULT_LATTICE_BUDGET)]
    pub budget: u128,
}

#[derive(Args, Debug)]
pub struct LocalQuiverArgs {
    #[command(flatten)]
    pub source: QuiverSource,
    /// A decomposition part as MULTIPLICITY:VECTOR, e.g. 2:1,1; repeat for
    /// several parts.
    #[arg(long = "part", value_name = "M:LIST", required = true)]
    pub parts: Vec<String>,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub source: QuiverSource,
    #[arg(long, allow_hyphen_values = true, value_name = "LIST")]
    pub theta: Weight,
    /// Componentwise upper bound for the sweep.
    #[arg(long, value_name = "LIST")]
    pub bound: DimVector,
    /// Keep only vectors whose coordinates sum to at most this.
    #[arg(long, value_name = "N")]
    pub max_total: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_LATTICE_BUDGET)]
    pub budget: u128,
}

#[derive(Args, Debug)]
pub struct GammaArgs {
    /// Number of eigenvalue classes of the first generator.
    #[arg(value_name = "P")]
    pub p: usize,
    /// Number of eigenvalue classes of the second generator.
    #[arg(value_name = "Q")]
    pub q: usize,
}

#[derive(Args, Debug)]
pub struct OracleOpts {
    /// Prime modulus of the sample field; chosen automatically if omitted.
    #[arg(long, value_name = "PRIME")]
    pub modulus: Option<u64>,
    /// Master seed for the deterministic sample stream.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of samples before settling on "probably no".
    #[arg(long, default_value_t = 8)]
    pub trials: u32,
    /// Largest total dimension to accept.
    #[arg(long, default_value_t = 8)]
    pub cap: u64,
}

impl OracleOpts {
    fn config(&self, default_modulus: u64) -> PrimeFieldConfig {
        PrimeFieldConfig {
            modulus: self.modulus.unwrap_or(default_modulus),
            seed: self.seed,
            trials: self.trials,
            cap: self.cap,
        }
    }
}

#[derive(Args, Debug)]
pub struct OracleSimpleArgs {
    #[command(flatten)]
    pub source: QuiverSource,
    #[arg(long, value_name = "LIST")]
    pub alpha: DimVector,
    #[command(flatten)]
    pub opts: OracleOpts,
}

#[derive(Args, Debug)]
pub struct OracleKnotArgs {
    /// Order of the first cyclic factor.
    #[arg(value_name = "P")]
    pub p: usize,
    /// Order of the second cyclic factor.
    #[arg(value_name = "Q")]
    pub q: usize,
    #[arg(short = 'a', long = "a", value_name = "LIST")]
    pub a: DimVector,
    #[arg(short = 'b', long = "b", value_name = "LIST")]
    pub b: DimVector,
    #[command(flatten)]
    pub opts: OracleOpts,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Does a theta-stable representation of the given dimension exist?
    Stable(StabilityArgs),
    /// Does a theta-semistable representation of the given dimension exist?
    Semistable(StabilityArgs),
    /// Does a simple representation of the given dimension exist?
    Simple(SimpleArgs),
    /// Does an irreducible torus knot group representation with the given
    /// eigenvalue multiplicities exist?
    TorusKnot(TorusKnotArgs),
    /// Print the Euler matrix of the quiver.
    Euler(SimpleQuiverArgs),
    /// List all generic subdimension vectors of alpha.
    Subdims(SubdimsArgs),
    /// Build the local quiver of a decomposition into stable parts.
    LocalQuiver(LocalQuiverArgs),
    /// Dimension of the stable moduli space at a stable dimension vector.
    ModuliDim(StabilityArgs),
    /// List all theta-stable dimension vectors up to a componentwise bound.
    Enumerate(EnumerateArgs),
    /// Print the interaction quiver of one-dimensional representation types.
    Gamma(GammaArgs),
    /// Finite-field sampling evidence for a simple quiver representation.
    OracleSimple(OracleSimpleArgs),
    /// Finite-field sampling evidence for an irreducible torus knot group
    /// representation.
    OracleKnot(OracleKnotArgs),
}

#[derive(Args, Debug)]
pub struct SimpleQuiverArgs {
    #[command(flatten)]
    pub source: QuiverSource,
}

/// What a finished command hands back to `main`: the text for stdout and
/// the process exit code.
#[derive(Debug)]
pub struct CommandOutput {
    pub stdout: String,
    pub exit_code: i32,
}

enum Verdict {
    Decision(bool),
    Done,
}

fn finish(json_mode: bool, verdict: Verdict, data: Value, text: String) -> CommandOutput {
    let exit_code = match verdict {
        Verdict::Decision(false) => 1,
        _ => 0,
    };
    let stdout = if json_mode {
        let verdict_value = match verdict {
            Verdict::Decision(b) => json!(b),
            Verdict::Done => json!("ok"),
        };
        let mut object = serde_json::Map::new();
        object.insert("data".to_string(), data);
        object.insert("verdict".to_string(), verdict_value);
        let mut line = serde_json::to_string(&Value::Object(object))
            .expect("command output serializes");
        line.push('\n');
        line
    } else {
        text
    };
    CommandOutput { stdout, exit_code }
}

fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn warn_if_not_coprime(p: usize, q: usize) {
    if p > 0 && q > 0 && gcd(p as u64, q as u64) != 1 {
        eprintln!(
            "warning: p = {p} and q = {q} are not coprime; the verdict describes \
             representations of the free product of cyclic groups, which is not \
             a torus knot group for these parameters"
        );
    }
}

fn knot_dims(p: usize, q: usize, a: &DimVector, b: &DimVector) -> Result<TorusKnotDims> {
    if a.len() != p {
        return Err(Error::InvalidArgument(format!(
            "--a lists {} multiplicities but p = {p}",
            a.len()
        )));
    }
    if b.len() != q {
        return Err(Error::InvalidArgument(format!(
            "--b lists {} multiplicities but q = {q}",
            b.len()
        )));
    }
    TorusKnotDims::new(a.coords().to_vec(), b.coords().to_vec())
}

fn parse_part(text: &str) -> Result<(u64, DimVector)> {
    let (mult, vector) = text.split_once(':').ok_or_else(|| {
        Error::InvalidArgument(format!(
            "invalid part `{text}`: expected MULTIPLICITY:VECTOR, e.g. 2:1,1"
        ))
    })?;
    let mult: u64 = mult.trim().parse().map_err(|_| {
        Error::InvalidArgument(format!("invalid multiplicity in part `{text}`"))
    })?;
    Ok((mult, vector.parse()?))
}

fn obstruction_json(obstruction: Option<Obstruction>) -> Value {
    match obstruction {
        None => Value::Null,
        Some(Obstruction::Empty) => json!({"kind": "empty"}),
        Some(Obstruction::MarginBound { i, j, sum }) => {
            json!({"kind": "margin-bound", "i": i + 1, "j": j + 1, "sum": sum})
        }
        Some(Obstruction::BalancedPairs) => json!({"kind": "balanced-pairs"}),
    }
}

fn obstruction_text(obstruction: &Obstruction, n: u64) -> String {
    match obstruction {
        Obstruction::Empty => "margins are all zero".to_string(),
        Obstruction::MarginBound { i, j, sum } => {
            format!("a_{} + b_{} = {} > n = {}", i + 1, j + 1, sum, n)
        }
        Obstruction::BalancedPairs => format!(
            "two balanced eigenvalue pairs on each side with n = {n} >= 3"
        ),
    }
}

fn oracle_text(report: &OracleReport, full_dim: usize) -> String {
    let mut text = String::new();
    text.push_str(match report.verdict {
        crate::oracle::OracleVerdict::Yes => "YES\n",
        crate::oracle::OracleVerdict::ProbablyNo => "PROBABLY NO\n",
    });
    for outcome in &report.outcomes {
        text.push_str(&format!(
            "trial {}: sub-seed {:#018X}, span {}/{}\n",
            outcome.trial, outcome.sub_seed, outcome.span_dim, full_dim
        ));
    }
    text
}

pub fn execute(cli: Cli) -> Result<CommandOutput> {
    let json_mode = cli.json;
    match cli.cmd {
        Cmd::Stable(args) => {
            let quiver = args.source.load()?;
            let mut table = SubdimTable::with_budget(quiver, args.budget);
            let verdict = is_theta_stable_with(&mut table, &args.theta, &args.alpha)?;
            Ok(finish(
                json_mode,
                Verdict::Decision(verdict),
                json!({"alpha": args.alpha, "theta": args.theta}),
                if verdict { "STABLE\n" } else { "NOT STABLE\n" }.to_string(),
            ))
        }
        Cmd::Semistable(args) => {
            let quiver = args.source.load()?;
            let mut table = SubdimTable::with_budget(quiver, args.budget);
            let verdict = is_theta_semistable_with(&mut table, &args.theta, &args.alpha)?;
            Ok(finish(
                json_mode,
                Verdict::Decision(verdict),
                json!({"alpha": args.alpha, "theta": args.theta}),
                if verdict { "SEMISTABLE\n" } else { "NOT SEMISTABLE\n" }.to_string(),
            ))
        }
        Cmd::Simple(args) => {
            let quiver = args.source.load()?;
            let verdict = crate::simples::is_simple_dim(&quiver, &args.alpha)?;
            Ok(finish(
                json_mode,
                Verdict::Decision(verdict),
                json!({"alpha": args.alpha}),
                if verdict { "SIMPLE\n" } else { "NOT SIMPLE\n" }.to_string(),
            ))
        }
        Cmd::TorusKnot(args) => {
            let dims = knot_dims(args.p, args.q, &args.a, &args.b)?;
            warn_if_not_coprime(dims.p(), dims.q());
            let obstruction = torus_knot_obstruction(&dims);
            let verdict = obstruction.is_none();
            let mut data = serde_json::Map::new();
            data.insert("a".to_string(), json!(dims.a()));
            data.insert("b".to_string(), json!(dims.b()));
            data.insert("n".to_string(), json!(dims.n()));
            data.insert("obstruction".to_string(), obstruction_json(obstruction));
            let mut text = match &obstruction {
                None => format!("IRREDUCIBLE\nn = {}\n", dims.n()),
                Some(o) => format!(
                    "REDUCIBLE\nn = {}\n{}\n",
                    dims.n(),
                    obstruction_text(o, dims.n())
                ),
            };
            if args.emit_gamma {
                let gamma = build_gamma(dims.p(), dims.q())?;
                let decomposition = find_decomposition(&dims);
                text.push_str(&format!("gamma: {}\n", gamma.to_json_string()));
                text.push_str(&format!(
                    "decomposition: {}\n",
                    serde_json::to_string(&decomposition)?
                ));
                data.insert("gamma".to_string(), json!(gamma));
                data.insert("decomposition".to_string(), json!(decomposition));
            }
            Ok(finish(
                json_mode,
                Verdict::Decision(verdict),
                Value::Object(data),
                text,
            ))
        }
        Cmd::Euler(args) => {
            let quiver = args.source.load()?;
            let rows = quiver.euler_form().rows();
            let text = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|entry| entry.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                        + "\n"
                })
                .collect();
            Ok(finish(
                json_mode,
                Verdict::Done,
                json!({"matrix": rows}),
                text,
            ))
        }
        Cmd::Subdims(args) => {
            let quiver = args.source.load()?;
            let mut table = SubdimTable::with_budget(quiver, args.budget);
            let subdims = table.subdims(&args.alpha)?;
            let text = subdims.iter().map(|beta| format!("{beta}\n")).collect();
            Ok(finish(
                json_mode,
                Verdict::Done,
                json!({
                    "alpha": args.alpha,
                    "count": subdims.len(),
                    "subdims": subdims.iter().collect::<Vec<_>>(),
                }),
                text,
            ))
        }
        Cmd::LocalQuiver(args) => {
            let quiver = args.source.load()?;
            let parts = args
                .parts
                .iter()
                .map(|text| parse_part(text))
                .collect::<Result<Vec<_>>>()?;
            let decomposition = Decomposition::new(parts)?;
            let setting = local_quiver(&quiver, &decomposition)?;
            let text = format!(
                "quiver: {}\ndims: {}\n",
                setting.quiver.to_json_string(),
                setting.dims
            );
            Ok(finish(
                json_mode,
                Verdict::Done,
                json!({"dims": setting.dims, "quiver": setting.quiver}),
                text,
            ))
        }
        Cmd::ModuliDim(args) => {
            let quiver = args.source.load()?;
            let chi = quiver.euler_form();
            let mut table = SubdimTable::with_budget(quiver, args.budget);
            if !is_theta_stable_with(&mut table, &args.theta, &args.alpha)? {
                return Err(Error::NotStable);
            }
            let dimension = 1 - chi.pairing(&args.alpha, &args.alpha)?;
            Ok(finish(
                json_mode,
                Verdict::Done,
                json!({
                    "alpha": args.alpha,
                    "dimension": dimension,
                    "theta": args.theta,
                }),
                format!("{dimension}\n"),
            ))
        }
        Cmd::Enumerate(args) => {
            let quiver = args.source.load()?;
            let mut table = SubdimTable::with_budget(quiver, args.budget);
            table.subdims(&args.bound)?;
            let mut found = Vec::new();
            for alpha in crate::schofield::box_points(&args.bound) {
                if alpha.is_zero() {
                    continue;
                }
                if let Some(cap) = args.max_total {
                    if alpha.total() > cap {
                        continue;
                    }
                }
                if is_theta_stable_with(&mut table, &args.theta, &alpha)? {
                    found.push(alpha);
                }
            }
            let text = found.iter().map(|alpha| format!("{alpha}\n")).collect();
            Ok(finish(
                json_mode,
                Verdict::Done,
                json!({
                    "bound": args.bound,
                    "count": found.len(),
                    "stable": found,
                    "theta": args.theta,
                }),
                text,
            ))
        }
        Cmd::Gamma(args) => {
            warn_if_not_coprime(args.p, args.q);
            let gamma = build_gamma(args.p, args.q)?;
            Ok(finish(
                json_mode,
                Verdict::Done,
                json!({"p": args.p, "q": args.q, "quiver": gamma}),
                format!("{}\n", gamma.to_json_string()),
            ))
        }
        Cmd::OracleSimple(args) => {
            let quiver = args.source.load()?;
            let config = args.opts.config(PrimeFieldConfig::default().modulus);
            let report = oracle_simple_report(&quiver, &args.alpha, &config)?;
            let n = args.alpha.total() as usize;
            let text = oracle_text(&report, n * n);
            Ok(finish(
                json_mode,
                Verdict::Done,
                json!({"alpha": args.alpha, "report": report}),
                text,
            ))
        }
        Cmd::OracleKnot(args) => {
            let dims = knot_dims(args.p, args.q, &args.a, &args.b)?;
            warn_if_not_coprime(dims.p(), dims.q());
            let config = args
                .opts
                .config(default_knot_modulus(dims.p(), dims.q())?);
            let report = oracle_torus_knot_report(&dims, &config)?;
            let n = dims.n() as usize;
            let text = oracle_text(&report, n * n);
            Ok(finish(
                json_mode,
                Verdict::Done,
                json!({"a": dims.a(), "b": dims.b(), "report": report}),
                text,
            ))
        }
    }
}
