//! Command implementations behind the `wramsey` binary. Each command yields a
//! [`RunReport`] and a plain-text rendering of it.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use wramsey_core::bounds::{
    alpha, bounds_report, c_of_k, construction_blowup, construction_k4, lower_bound_l, upper_bound_u, Construction,
};
use wramsey_core::exactnum::{format_rational, to_decimal};
use wramsey_core::graphs::{enumerate_colorings, format_coloring, parse_colorings, parse_graph, turan_number};
use wramsey_core::packing::{r_induced, r_tilde, tau_integral, tau_min_over_colorings, tau_star, SubgraphWeights};
use wramsey_core::weighted_ramsey::{wram, wram_for_colorings};
use wramsey_core::{Error, Rational};

#[derive(Parser, Debug, Clone)]
#[command(name = "wramsey", version, about = "Exact weighted Ramsey numbers, triangle packings and bound tables")]
pub struct Cli {
    /// Print the run report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Omit the elapsed time so output is byte-identical across runs.
    #[arg(long, global = true)]
    pub stable: bool,
    /// Worker threads for exhaustive searches (default: available parallelism).
    #[arg(long, global = true, env = "WRAMSEY_JOBS")]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// wram(n, k) by exhaustive search or over colorings read from a file.
    Wram(WramArgs),
    /// Packing and covering invariants of a graph file.
    Packing(PackingArgs),
    /// Turán, alpha, c(k) and L(k)/U(k) tables as CSV.
    Bounds(BoundsArgs),
    /// Check one of the explicit weightings.
    Verify(VerifyArgs),
    /// Minimum edge-disjoint monochromatic triangle count over colorings of K_n.
    Tau(TauArgs),
    /// Number of 2-colorings of K_n up to relabeling and color swap.
    Classes(ClassesArgs),
}

#[derive(Args, Debug, Clone)]
pub struct WramArgs {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: usize,
    #[arg(long, conflicts_with = "file", required_unless_present = "file", requires = "n")]
    pub exhaustive: bool,
    /// Colorings in the text format; the result is an upper bound.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Stat {
    Taustar,
    Tau,
    R,
    Rtilde,
    All,
}

#[derive(Args, Debug, Clone)]
pub struct PackingArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, value_enum, default_value = "all")]
    pub stat: Stat,
    /// Also print an optimal solution for each LP statistic.
    #[arg(long)]
    pub witness: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Table {
    Turan,
    Alpha,
    Ck,
    Lk,
}

#[derive(Args, Debug, Clone)]
pub struct BoundsArgs {
    #[arg(long, value_enum)]
    pub table: Table,
    #[arg(long, default_value_t = 8)]
    pub kmax: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstructionKind {
    K4,
    Blowup,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub construction: ConstructionKind,
    #[arg(long)]
    pub n: usize,
    /// Subset size; fixed to 4 for the k4 construction.
    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct TauArgs {
    #[arg(long)]
    pub n: usize,
    /// Minimize the fractional packing sum instead.
    #[arg(long)]
    pub fractional: bool,
}

#[derive(Args, Debug, Clone)]
pub struct ClassesArgs {
    #[arg(long)]
    pub n: usize,
}

/// Largest `kmax` accepted by the c(k) table.
pub const CK_KMAX: u64 = 1000;
const DIGITS: u32 = 6;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[derive(Debug)]
pub enum Failure {
    Core(Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Io(p, e) => write!(f, "cannot read {}: {e}", p.display()),
            Failure::Usage(m) => write!(f, "{m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    /// 2 for bad input, 3 for capability limits, 4 for failed certificates.
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Core(Error::Capability(_)) => 3,
            Failure::Core(Error::Contract(_)) => 4,
            Failure::Core(_) | Failure::Io(..) | Failure::Usage(_) => 2,
        }
    }
}

type Outcome = Result<(RunReport, String), Failure>;

fn q(x: &Rational) -> String {
    format_rational(x)
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn report(command: &str, inputs: Value, result: Value) -> RunReport {
    RunReport { command: command.into(), inputs, result, elapsed_ms: None }
}

/// Runs `cli` on a thread pool sized by `--jobs`, filling in the elapsed
/// time unless `--stable` is set.
pub fn execute(cli: &Cli) -> Outcome {
    let start = Instant::now();
    let (mut rep, mut text) = match cli.jobs {
        Some(0) => return Err(Failure::Usage("--jobs must be at least 1".into())),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Failure::Usage(e.to_string()))?
            .install(|| dispatch(&cli.command))?,
        None => dispatch(&cli.command)?,
    };
    if !cli.stable {
        let ms = start.elapsed().as_millis() as u64;
        rep.elapsed_ms = Some(ms);
        writeln!(text, "elapsed_ms: {ms}").expect("write to string");
    }
    Ok((rep, text))
}

fn dispatch(command: &Command) -> Outcome {
    match command {
        Command::Wram(a) => cmd_wram(a),
        Command::Packing(a) => cmd_packing(a),
        Command::Bounds(a) => cmd_bounds(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Tau(a) => cmd_tau(a),
        Command::Classes(a) => cmd_classes(a),
    }
}

pub fn cmd_wram(a: &WramArgs) -> Outcome {
    let (res, inputs) = match &a.file {
        Some(path) => {
            let colorings = parse_colorings(&read(path)?)?;
            if let Some(n) = a.n {
                if colorings.iter().any(|c| c.n() != n) {
                    return Err(Failure::Usage(format!("--n {n} does not match the colorings in the file")));
                }
            }
            (wram_for_colorings(&colorings, a.k)?, json!({"k": a.k, "file": path.display().to_string()}))
        }
        None => {
            let n = a.n.ok_or_else(|| Failure::Usage("--exhaustive needs --n".into()))?;
            (wram(n, a.k)?, json!({"n": n, "k": a.k, "mode": "exhaustive"}))
        }
    };
    let mut text = String::new();
    writeln!(text, "wram({},{}) = {}", res.n, res.k, q(&res.value)).unwrap();
    writeln!(text, "r = {}", q(&res.r_value)).unwrap();
    writeln!(text, "colorings searched: {}", res.colorings_searched).unwrap();
    if res.partial {
        writeln!(text, "partial: value is an upper bound on wram").unwrap();
    }
    writeln!(text, "witness:").unwrap();
    text.push_str(&format_coloring(&res.witness_coloring));
    let result = serde_json::to_value(&res).expect("result serializes");
    Ok((report("wram", inputs, result), text))
}

fn stat_line(name: &str, value: &Rational, witness: Option<&SubgraphWeights>, text: &mut String, out: &mut serde_json::Map<String, Value>) {
    writeln!(text, "{name} = {}", q(value)).unwrap();
    out.insert(name.into(), json!(q(value)));
    if let Some(w) = witness {
        text.push_str(&w.to_text());
        out.insert(format!("{name}_witness"), json!(w.to_text()));
    }
}

pub fn cmd_packing(a: &PackingArgs) -> Outcome {
    let g = parse_graph(&read(&a.graph)?)?;
    let mut text = String::new();
    let mut out = serde_json::Map::new();
    let wants = |s: Stat| a.stat == s || a.stat == Stat::All;
    if wants(Stat::Taustar) {
        let (v, w) = tau_star(&g)?;
        stat_line("taustar", &v, a.witness.then_some(&w), &mut text, &mut out);
    }
    if wants(Stat::Tau) {
        let v = tau_integral(&g)?;
        writeln!(text, "tau = {v}").unwrap();
        out.insert("tau".into(), json!(v));
    }
    if wants(Stat::R) {
        let (v, w) = r_induced(&g)?;
        stat_line("r", &v, a.witness.then_some(&w), &mut text, &mut out);
    }
    if wants(Stat::Rtilde) {
        let (v, w) = r_tilde(&g)?;
        stat_line("rtilde", &v, a.witness.then_some(&w), &mut text, &mut out);
    }
    let inputs = json!({
        "graph": a.graph.display().to_string(),
        "stat": format!("{:?}", a.stat).to_lowercase(),
        "witness": a.witness,
    });
    Ok((report("packing", inputs, Value::Object(out)), text))
}

fn csv_report(table: &str, kmax: u64, header: &str, rows: Vec<String>) -> (RunReport, String) {
    let mut text = format!("{header}\n");
    for r in &rows {
        writeln!(text, "{r}").unwrap();
    }
    let result = json!({"header": header, "rows": rows});
    (report("bounds", json!({"table": table, "kmax": kmax}), result), text)
}

pub fn cmd_bounds(a: &BoundsArgs) -> Outcome {
    let d = |x: &Rational| to_decimal(x, DIGITS);
    let kmax = a.kmax;
    let (table, header, rows) = match a.table {
        Table::Turan => {
            let mut rows = Vec::new();
            for k in 3..=kmax {
                for i in 2..=k {
                    rows.push(format!("{k},{i},{}", turan_number(k, i)?));
                }
            }
            ("turan", "k,i,t", rows)
        }
        Table::Alpha => {
            let mut rows = Vec::new();
            for k in 3..=kmax {
                for i in 3..=k {
                    let v = alpha(k, i)?;
                    rows.push(format!("{k},{i},{},{}", q(&v), d(&v)));
                }
            }
            ("alpha", "k,i,alpha,alpha_dec", rows)
        }
        Table::Ck => {
            if kmax > CK_KMAX {
                return Err(Failure::Usage(format!("--kmax for the ck table is at most {CK_KMAX}")));
            }
            let mut rows = Vec::new();
            for k in 4..=kmax {
                let c = c_of_k(k)?;
                let scaled = &c * Rational::from_integer(turan_number(k, 2)?.into());
                rows.push(format!("{k},{},{},{},{}", q(&c), q(&scaled), d(&c), d(&scaled)));
            }
            ("ck", "k,c_k,c_k_times_t_k2,c_k_dec,c_k_times_t_k2_dec", rows)
        }
        Table::Lk => {
            let mut rows = Vec::new();
            for k in 4..=kmax {
                let r = bounds_report(k)?;
                rows.push(format!(
                    "{k},{},{},{},{},{},{}",
                    q(&r.c_k),
                    q(&r.lower_bound),
                    q(&r.upper_bound),
                    d(&r.c_k),
                    d(&r.lower_bound),
                    d(&r.upper_bound)
                ));
            }
            ("lk", "k,c_k,L_k,U_k,c_k_dec,L_k_dec,U_k_dec", rows)
        }
    };
    Ok(csv_report(table, kmax, header, rows))
}

fn construction_payload(c: &Construction, k: usize) -> Value {
    json!({
        "feasible": true,
        "k": k,
        "total": q(&c.total),
        "bound": q(&c.implied_bound()),
        "max_load": q(&c.scan.max_load),
        "sets_checked": c.scan.sets_checked,
        "exhaustive": c.scan.exhaustive,
    })
}

pub fn cmd_verify(a: &VerifyArgs) -> Outcome {
    let (name, k, c) = match a.construction {
        ConstructionKind::K4 => {
            if a.k.is_some_and(|k| k != 4) {
                return Err(Failure::Usage("the k4 construction has k = 4".into()));
            }
            ("k4", 4, construction_k4(a.n)?)
        }
        ConstructionKind::Blowup => {
            let k = a.k.ok_or_else(|| Failure::Usage("--k is required for the blowup construction".into()))?;
            ("blowup", k, construction_blowup(a.n, k)?)
        }
    };
    let mut text = String::new();
    writeln!(text, "construction {name}, n = {}, k = {k}", a.n).unwrap();
    let how = if c.scan.exhaustive { "exhaustive" } else { "sampled" };
    writeln!(text, "feasible: yes ({how}, {} subsets, max load {})", c.scan.sets_checked, q(&c.scan.max_load)).unwrap();
    writeln!(text, "total = {}", q(&c.total)).unwrap();
    writeln!(text, "bound = {}", q(&c.implied_bound())).unwrap();
    if let Ok(u) = upper_bound_u(k as u64) {
        writeln!(text, "U({k}) = {}", q(&u)).unwrap();
    }
    if let Ok(l) = lower_bound_l(k as u64) {
        writeln!(text, "L({k}) = {}", q(&l)).unwrap();
    }
    let inputs = json!({"construction": name, "n": a.n, "k": k});
    Ok((report("verify", inputs, construction_payload(&c, k)), text))
}

pub fn cmd_tau(a: &TauArgs) -> Outcome {
    let (v, witness) = tau_min_over_colorings(a.n, a.fractional)?;
    let name = if a.fractional { "taustar" } else { "tau" };
    let mut text = format!("{name}({},3) = {}\nwitness:\n", a.n, q(&v));
    text.push_str(&format_coloring(&witness));
    let result = json!({"value": q(&v), "witness": format_coloring(&witness)});
    Ok((report("tau", json!({"n": a.n, "fractional": a.fractional}), result), text))
}

pub fn cmd_classes(a: &ClassesArgs) -> Outcome {
    let count = enumerate_colorings(a.n)?.len();
    let text = format!("classes({}) = {count}\n", a.n);
    Ok((report("classes", json!({"n": a.n}), json!({"count": count})), text))
}
