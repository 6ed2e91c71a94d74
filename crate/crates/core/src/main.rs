use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use starcrit::constructions::Construction;
use starcrit::detectors::{
    blue_star_plus_edge_center, has_blue_star_plus_edge, has_red_star, is_good_coloring,
};
use starcrit::error::SearchError;
use starcrit::formulas::{classify, r_formula, r_star_formula};
use starcrit::io::{export_dot, parse, serialize, serialize_with, Metadata};
use starcrit::search::{
    find_good_coloring, ramsey_certificate, star_critical_certificate, SearchConfig, Verdict,
};
use starcrit::{HostSpec, TargetPair};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "starcrit", version, about = "Star versus star-plus-edge Ramsey toolkit")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Copy)]
struct SearchArgs {
    /// Node budget for each arrowing search.
    #[arg(long)]
    budget: Option<u64>,
    /// Parallel width of the search (0 = sequential).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Disable symmetry breaking on vertex 0.
    #[arg(long)]
    no_symmetry: bool,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        let mut cfg = SearchConfig::default().with_parallel_width(self.jobs);
        if let Some(b) = self.budget {
            cfg = cfg.with_budget(b);
        }
        if self.no_symmetry {
            cfg = cfg.without_symmetry_breaking();
        }
        cfg
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build one of the extremal colorings and check it.
    Construct {
        #[arg(long = "case")]
        case: Construction,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run both detectors on a coloring file.
    Check {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Decide whether a host arrows (K_{1,n}, K_{1,m}+e).
    Arrow {
        #[arg(long)]
        core: usize,
        #[arg(long, default_value_t = 0)]
        pendant: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Write the witness here instead of stdout.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Compute r(K_{1,n}, K_{1,m}+e) by exhaustive search.
    Ramsey {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long = "max", default_value_t = 40)]
        n_max: usize,
        #[arg(long)]
        compare_formula: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Compute the star-critical number by exhaustive search.
    Starcrit {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Use this Ramsey value instead of searching for it.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long = "max", default_value_t = 40)]
        n_max: usize,
        #[arg(long)]
        compare_formula: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Tabulate the closed forms.
    Table {
        #[arg(long, value_parser = parse_range)]
        n_range: (usize, usize),
        #[arg(long, value_parser = parse_range)]
        m_range: (usize, usize),
        #[arg(long, value_enum, default_value_t = What::R)]
        what: What,
        #[arg(long, value_enum, default_value_t = Format::Txt)]
        format: Format,
    },
    /// Compare oracle and closed forms on 3 <= n, m <= MAX plus extra pairs.
    Verify {
        #[arg(long = "max", default_value_t = 5)]
        max: usize,
        /// Extra pairs, e.g. "(4,6),(4,7)".
        #[arg(long, value_parser = parse_pairs)]
        extra: Option<PairList>,
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    R,
    Rstar,
    Case,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Txt,
    Csv,
    Md,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let a: usize = a.trim().parse().map_err(|e| format!("{e}"))?;
    let b: usize = b.trim().trim_start_matches('=').parse().map_err(|e| format!("{e}"))?;
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok((a, b))
}

#[derive(Clone, Debug, Default)]
struct PairList(Vec<(usize, usize)>);

fn parse_pairs(s: &str) -> Result<PairList, String> {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    for chunk in cleaned.split(')').filter(|c| !c.is_empty()) {
        let body = chunk.trim_start_matches(',').trim_start_matches('(');
        let (a, b) = body
            .split_once(',')
            .ok_or_else(|| format!("bad pair {chunk:?}"))?;
        out.push((
            a.parse().map_err(|e| format!("{e}"))?,
            b.parse().map_err(|e| format!("{e}"))?,
        ));
    }
    Ok(PairList(out))
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(msg: impl ToString) -> Self {
        Self {
            code: EXIT_USAGE,
            message: msg.to_string(),
        }
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        let code = match e {
            SearchError::BudgetExhausted { .. } => EXIT_BUDGET,
            SearchError::NoArrowingWithin { .. } | SearchError::InconsistentRamsey { .. } => {
                EXIT_MISMATCH
            }
            _ => EXIT_USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn emit(json_mode: bool, value: Value, text: String) {
    if json_mode {
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        print!("{text}");
    }
}

fn target(n: usize, m: usize) -> Result<TargetPair, Failure> {
    TargetPair::new(n, m).map_err(Failure::usage)
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn construct(
    json_mode: bool,
    case: Construction,
    n: usize,
    m: usize,
    out: Option<PathBuf>,
    dot: Option<PathBuf>,
) -> CmdResult {
    let t = target(n, m)?;
    let c = case.build(n, m).map_err(Failure::usage)?;
    let good = is_good_coloring(&c, t);
    let meta = Metadata {
        case: Some(case.case_tag()),
        n: Some(n),
        m: Some(m),
        generator: Some(case.short_name().to_string()),
    };
    let doc = serialize_with(&c, meta);
    if let Some(path) = &out {
        write_file(path, &doc)?;
    }
    if let Some(path) = &dot {
        write_file(path, &export_dot(&c))?;
    }
    let mut text = format!(
        "construction {case} (n={n}, m={m}) on {}: {} red / {} blue edges\ngood: {good}\n",
        c.host(),
        c.red_edges().len(),
        c.blue_edges().len()
    );
    if out.is_none() && !json_mode {
        text.push_str(&doc);
    }
    emit(
        json_mode,
        json!({
            "construction": case.short_name(),
            "n": n, "m": m,
            "host": c.host().to_string(),
            "good": good,
            "document": serde_json::from_str::<Value>(&doc).unwrap(),
        }),
        text,
    );
    Ok(if good { 0 } else { EXIT_MISMATCH })
}

fn check(json_mode: bool, path: PathBuf, n: usize, m: usize) -> CmdResult {
    let t = target(n, m)?;
    let text = fs::read_to_string(&path)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let c = parse(&text).map_err(Failure::usage)?;
    let red = has_red_star(&c, n);
    let blue = has_blue_star_plus_edge(&c, m);
    let good = is_good_coloring(&c, t);
    let center = blue_star_plus_edge_center(&c, m);
    emit(
        json_mode,
        json!({
            "host": c.host().to_string(),
            "n": n, "m": m,
            "red_star": red,
            "blue_star_plus_edge": blue,
            "blue_center": center,
            "good": good,
        }),
        format!(
            "host: {}\nred K_1,{n}: {red}\nblue K_1,{m}+e: {blue}\ngood: {good}\n",
            c.host()
        ),
    );
    Ok(if good { 0 } else { EXIT_MISMATCH })
}

#[allow(clippy::too_many_arguments)]
fn arrow(
    json_mode: bool,
    core: usize,
    pendant: usize,
    n: usize,
    m: usize,
    witness_path: Option<PathBuf>,
    search: SearchArgs,
) -> CmdResult {
    let t = target(n, m)?;
    let host = HostSpec::new(core, pendant).map_err(Failure::usage)?;
    let outcome = find_good_coloring(host, t, &search.config())?;
    let witness_doc = outcome.witness.as_ref().map(serialize);
    if let (Some(path), Some(doc)) = (&witness_path, &witness_doc) {
        write_file(path, doc)?;
    }
    let mut text = format!(
        "{host} -> (K_1,{n}, K_1,{m}+e): {}\nnodes: {}  elapsed: {:.3}s\n",
        outcome.verdict.as_str(),
        outcome.nodes_explored,
        outcome.elapsed.as_secs_f64()
    );
    if witness_path.is_none() {
        if let Some(doc) = &witness_doc {
            text.push_str(doc);
        }
    }
    emit(
        json_mode,
        json!({
            "host": host.to_string(),
            "n": n, "m": m,
            "verdict": outcome.verdict.as_str(),
            "nodes": outcome.nodes_explored,
            "elapsed_s": outcome.elapsed.as_secs_f64(),
            "witness": witness_doc.map(|d| serde_json::from_str::<Value>(&d).unwrap()),
        }),
        text,
    );
    Ok(match outcome.verdict {
        Verdict::BudgetExhausted => EXIT_BUDGET,
        _ => 0,
    })
}

fn ramsey(json_mode: bool, n: usize, m: usize, n_max: usize, compare: bool, search: SearchArgs) -> CmdResult {
    let t = target(n, m)?;
    let start = Instant::now();
    let cert = ramsey_certificate(t, n_max, &search.config())?;
    let formula = compare
        .then(|| r_formula(n, m))
        .transpose()
        .map_err(Failure::usage)?;
    let agree = formula.map(|f| f == cert.value);
    let mut text = format!("r(K_1,{n}, K_1,{m}+e) = {}\n", cert.value);
    if let Some(f) = formula {
        writeln!(text, "formula: {f}  agree: {}", agree.unwrap()).unwrap();
    }
    writeln!(text, "elapsed: {:.3}s", start.elapsed().as_secs_f64()).unwrap();
    emit(
        json_mode,
        json!({
            "n": n, "m": m,
            "oracle": cert.value,
            "formula": formula,
            "agree": agree,
            "elapsed_s": start.elapsed().as_secs_f64(),
        }),
        text,
    );
    Ok(if agree == Some(false) { EXIT_MISMATCH } else { 0 })
}

#[allow(clippy::too_many_arguments)]
fn starcrit(
    json_mode: bool,
    n: usize,
    m: usize,
    r: Option<usize>,
    n_max: usize,
    compare: bool,
    search: SearchArgs,
) -> CmdResult {
    let t = target(n, m)?;
    let cfg = search.config();
    let start = Instant::now();
    let r = match r {
        Some(r) => r,
        None => ramsey_certificate(t, n_max, &cfg)?.value,
    };
    let cert = star_critical_certificate(t, r, &cfg)?;
    let formula = compare
        .then(|| r_star_formula(n, m))
        .transpose()
        .map_err(Failure::usage)?;
    let agree = formula.map(|f| f == cert.value);
    let mut text = format!("r_*(K_1,{n}, K_1,{m}+e) = {} (r = {r})\n", cert.value);
    if let Some(f) = formula {
        writeln!(text, "formula: {f}  agree: {}", agree.unwrap()).unwrap();
    }
    writeln!(text, "elapsed: {:.3}s", start.elapsed().as_secs_f64()).unwrap();
    emit(
        json_mode,
        json!({
            "n": n, "m": m, "r": r,
            "oracle": cert.value,
            "formula": formula,
            "agree": agree,
            "elapsed_s": start.elapsed().as_secs_f64(),
        }),
        text,
    );
    Ok(if agree == Some(false) { EXIT_MISMATCH } else { 0 })
}

fn table_cell(what: What, n: usize, m: usize) -> Result<String, Failure> {
    Ok(match what {
        What::R => r_formula(n, m).map_err(Failure::usage)?.to_string(),
        What::Rstar => r_star_formula(n, m).map_err(Failure::usage)?.to_string(),
        What::Case => classify(n, m).map_err(Failure::usage)?.to_string(),
    })
}

fn table(
    json_mode: bool,
    (n_lo, n_hi): (usize, usize),
    (m_lo, m_hi): (usize, usize),
    what: What,
    format: Format,
) -> CmdResult {
    let ms: Vec<usize> = (m_lo..=m_hi).collect();
    let mut rows = Vec::new();
    for n in n_lo..=n_hi {
        let cells = ms
            .iter()
            .map(|&m| table_cell(what, n, m))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push((n, cells));
    }
    let header: Vec<String> = std::iter::once("n\\m".to_string())
        .chain(ms.iter().map(|m| m.to_string()))
        .collect();
    let lines: Vec<Vec<String>> = rows
        .iter()
        .map(|(n, cells)| std::iter::once(n.to_string()).chain(cells.iter().cloned()).collect())
        .collect();

    let mut text = String::new();
    match format {
        Format::Csv => {
            for line in std::iter::once(&header).chain(&lines) {
                writeln!(text, "{}", line.join(",")).unwrap();
            }
        }
        Format::Md => {
            writeln!(text, "| {} |", header.join(" | ")).unwrap();
            writeln!(text, "|{}", "---|".repeat(header.len())).unwrap();
            for line in &lines {
                writeln!(text, "| {} |", line.join(" | ")).unwrap();
            }
        }
        Format::Txt => {
            let width = std::iter::once(&header)
                .chain(&lines)
                .flatten()
                .map(String::len)
                .max()
                .unwrap_or(1);
            for line in std::iter::once(&header).chain(&lines) {
                let cells: Vec<String> = line.iter().map(|c| format!("{c:>width$}")).collect();
                writeln!(text, "{}", cells.join(" ")).unwrap();
            }
        }
    }
    let json_rows: Vec<Value> = rows
        .iter()
        .flat_map(|(n, cells)| {
            ms.iter()
                .zip(cells)
                .map(move |(m, v)| json!({"n": n, "m": m, "value": v}))
        })
        .collect();
    emit(json_mode, json!({ "rows": json_rows }), text);
    Ok(0)
}

fn verify(json_mode: bool, max: usize, extra: Vec<(usize, usize)>, search: SearchArgs) -> CmdResult {
    let cfg = search.config();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for n in 3..=max {
        for m in 3..=max {
            pairs.push((n, m));
        }
    }
    for p in extra {
        if !pairs.contains(&p) {
            pairs.push(p);
        }
    }

    let mut all_agree = true;
    let mut text = String::from("   n    m |   r  r_f |  r*  r*_f | ok | seconds\n");
    let mut records = Vec::new();
    for (n, m) in pairs {
        let t = target(n, m)?;
        let r_f = r_formula(n, m).map_err(Failure::usage)?;
        let rs_f = r_star_formula(n, m).map_err(Failure::usage)?;
        let start = Instant::now();
        let rc = ramsey_certificate(t, r_f + 2, &cfg)?;
        let sc = star_critical_certificate(t, rc.value, &cfg)?;
        let secs = start.elapsed().as_secs_f64();
        let ok = rc.value == r_f
            && sc.value == rs_f
            && is_good_coloring(&rc.witness, t)
            && is_good_coloring(&sc.witness, t);
        all_agree &= ok;
        writeln!(
            text,
            "{n:>4} {m:>4} | {:>3} {r_f:>4} | {:>3} {rs_f:>5} | {:>2} | {secs:.3}",
            rc.value,
            sc.value,
            if ok { "✓" } else { "✗" }
        )
        .unwrap();
        records.push(json!({
            "n": n, "m": m,
            "r": rc.value, "r_formula": r_f,
            "r_star": sc.value, "r_star_formula": rs_f,
            "agree": ok, "seconds": secs,
        }));
    }
    writeln!(text, "{}", if all_agree { "all pairs agree" } else { "MISMATCH" }).unwrap();
    emit(json_mode, json!({ "pairs": records, "agree": all_agree }), text);
    Ok(if all_agree { 0 } else { EXIT_MISMATCH })
}

fn run(cli: Cli) -> CmdResult {
    let j = cli.json;
    match cli.command {
        Command::Construct { case, n, m, out, dot } => construct(j, case, n, m, out, dot),
        Command::Check { coloring, n, m } => check(j, coloring, n, m),
        Command::Arrow { core, pendant, n, m, witness, search } => {
            arrow(j, core, pendant, n, m, witness, search)
        }
        Command::Ramsey { n, m, n_max, compare_formula, search } => {
            ramsey(j, n, m, n_max, compare_formula, search)
        }
        Command::Starcrit { n, m, r, n_max, compare_formula, search } => {
            starcrit(j, n, m, r, n_max, compare_formula, search)
        }
        Command::Table { n_range, m_range, what, format } => table(j, n_range, m_range, what, format),
        Command::Verify { max, extra, search } => verify(j, max, extra.unwrap_or_default().0, search),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
