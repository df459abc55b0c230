use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use nbstab::bounds::{self, BoundVerdict};
use nbstab::enumerate::Execution;
use nbstab::stabilizer::{StabilizerJson, VerificationReport};
use nbstab::{derive, families, puncture, Error, StabilizerCode};

#[derive(Parser)]
#[command(name = "nbstab", version, about = "Construct, verify, bound, puncture and derive quantum stabilizer codes over F_q")]
struct Cli {
    /// Machine-readable JSON instead of human-oriented text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for exhaustive scans (0 = one per core).
    #[arg(long, env = "NBSTAB_THREADS", global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code from one of the families and print it as JSON.
    Construct(ConstructArgs),
    /// Re-check a stored code.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = DistanceArg::Exact)]
        distance: DistanceArg,
    },
    /// Evaluate one bound.
    Bound(BoundArgs),
    /// Puncture a stored code, or list the BCH puncturing menu.
    Puncture(PunctureArgs),
    /// Apply a derivation rule to stored codes.
    Derive(DeriveArgs),
    /// Construct and verify every family member over a parameter grid.
    Table(TableArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DistanceArg {
    /// Enumerate when the scan fits under the guard.
    Exact,
    /// Keep the construction's guaranteed bound.
    Bound,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
enum Family {
    HammingH,
    HammingE,
    Qr,
    Melas,
    BchE,
    BchH,
    BchExt,
    Character,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    q: u64,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    delta: Option<u64>,
    #[arg(long)]
    r1: Option<u32>,
    #[arg(long)]
    r2: Option<u32>,
    #[arg(long, value_enum, default_value_t = DistanceArg::Exact)]
    distance: DistanceArg,
    /// Also write the code to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Singleton,
    Hamming,
    Gv,
    GvLinear,
    MdsGv,
    Lp,
    Carlitz,
    MdsLength,
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long, value_enum)]
    check: Check,
    #[arg(long)]
    n: Option<usize>,
    /// K = q^k.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    q: u64,
    /// Extension degree, for carlitz (q is then the prime p).
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    delta: Option<u64>,
    /// Sharpen mds-length with the classical MDS conjecture.
    #[arg(long)]
    conjecture: bool,
}

#[derive(Args)]
struct PunctureArgs {
    /// Code to puncture.
    #[arg(long, conflicts_with = "bch")]
    code: Option<PathBuf>,
    /// Length of the punctured code.
    #[arg(long, requires = "code")]
    target_length: Option<usize>,
    /// BCH parameters q,m,delta.
    #[arg(long, value_delimiter = ',')]
    bch: Option<Vec<u64>>,
    /// List the reachable lengths.
    #[arg(long, requires = "bch")]
    menu: bool,
    #[arg(long, value_enum, default_value_t = DistanceArg::Exact)]
    distance: DistanceArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Rule {
    Lengthen,
    Shorten,
    Reduce,
    Sum,
    Combine,
    Difference,
    Expand,
}

#[derive(Args)]
struct DeriveArgs {
    #[arg(long, value_enum)]
    rule: Rule,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long = "in2")]
    input2: Option<PathBuf>,
    /// Degree of the subfield for expand.
    #[arg(long, default_value_t = 1)]
    sub_degree: u32,
    #[arg(long, value_enum, default_value_t = DistanceArg::Exact)]
    distance: DistanceArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
}

#[derive(Args)]
struct TableArgs {
    /// Field orders, comma separated.
    #[arg(long, value_delimiter = ',')]
    q: Vec<u64>,
    /// Largest length to include.
    #[arg(long)]
    max_n: u64,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,
    /// Add a wall-time column (output is then no longer reproducible).
    #[arg(long)]
    timing: bool,
    #[arg(long, value_enum, default_value_t = DistanceArg::Exact)]
    distance: DistanceArg,
}

/// An error with a stable kind tag; exit code 2.
#[derive(Debug, Serialize)]
struct Failure {
    error: String,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            error: e.kind().to_string(),
            message: e.to_string(),
        }
    }
}

fn failure(kind: &str, message: impl Into<String>) -> Failure {
    Failure {
        error: kind.to_string(),
        message: message.into(),
    }
}

type CliResult<T> = Result<T, Failure>;

fn exec() -> Execution {
    Execution::default()
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn load(path: &Path) -> CliResult<StabilizerCode> {
    let text = std::fs::read_to_string(path).map_err(|e| failure("Io", format!("{}: {e}", path.display())))?;
    let j: StabilizerJson =
        serde_json::from_str(&text).map_err(|e| failure("Malformed", format!("{}: {e}", path.display())))?;
    Ok(StabilizerCode::from_json(&j)?)
}

fn emit_code(mut code: StabilizerCode, distance: DistanceArg, out: Option<&Path>) -> CliResult<String> {
    if distance == DistanceArg::Exact {
        code.upgrade_distance(exec())?;
    }
    let text = to_json(&code.to_json());
    if let Some(path) = out {
        std::fs::write(path, format!("{text}\n")).map_err(|e| failure("Io", format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> CliResult<T> {
    v.ok_or_else(|| failure("BadParameters", format!("--{flag} is required here")))
}

fn build(a: &ConstructArgs) -> CliResult<StabilizerCode> {
    let q = a.q;
    let code = match a.family {
        Family::HammingH => families::quantum_hamming_hermitian(q, need(a.m, "m")?)?,
        Family::HammingE => families::quantum_hamming_euclidean(q, need(a.m, "m")?)?,
        Family::Qr => families::quantum_qr(q, need(a.n, "n")?)?,
        Family::Melas => families::quantum_melas(q, need(a.m, "m")?)?,
        Family::BchE => families::quantum_bch_euclidean(q, need(a.m, "m")?, need(a.delta, "delta")?)?,
        Family::BchH => families::quantum_bch_hermitian(q, need(a.m, "m")?, need(a.delta, "delta")?)?,
        Family::BchExt => {
            let h = families::quantum_bch_hermitian(q, need(a.m, "m")?, need(a.delta, "delta")?)?;
            families::extend_bch(&h)?
        }
        Family::Character => {
            families::quantum_character(q, need(a.m, "m")?, need(a.r1, "r1")?, need(a.r2, "r2")?)?
        }
    };
    Ok(code)
}

fn report_text(code: &StabilizerCode, r: &VerificationReport) -> String {
    let mut s = String::new();
    let d = if r.distance.is_exact() {
        r.distance.value.to_string()
    } else {
        format!("≥{}", r.distance.value)
    };
    let k = code.k().map_or(format!("{}^{}", code.field().characteristic(), code.k_exp()), |k| k.to_string());
    let _ = writeln!(s, "code            [[{},{},{}]]_{}", code.n(), k, d, code.q());
    let _ = writeln!(s, "self-orthogonal {}", r.self_orthogonal);
    let _ = writeln!(s, "size            {}", r.size_ok);
    let _ = writeln!(s, "source          {}", r.source_ok);
    let _ = writeln!(s, "distance        {} ({})", d, r.distance_method);
    let _ = writeln!(s, "pure to         {}", r.pure_to.map_or("unknown".into(), |t| t.to_string()));
    let _ = writeln!(s, "singleton       {}{}", r.singleton_ok, if r.mds { " (MDS)" } else { "" });
    let _ = write!(s, "result          {}", if r.passed() { "pass" } else { "fail" });
    s
}

fn cmd_verify(file: &Path, distance: DistanceArg, json: bool) -> CliResult<(String, bool)> {
    let code = load(file)?;
    let r = code.verify(distance == DistanceArg::Exact, exec());
    let text = if json { to_json(&r) } else { report_text(&code, &r) };
    Ok((text, r.passed()))
}

fn verdict_text(v: &BoundVerdict) -> String {
    let inputs: Vec<String> = v.inputs.iter().map(|(k, x)| format!("{k}={x}")).collect();
    let mut s = format!(
        "{} {}: {}",
        v.bound,
        inputs.join(" "),
        if v.satisfied { "satisfied" } else { "violated" }
    );
    if let Some(slack) = &v.slack {
        let _ = write!(s, ", slack {slack}");
    }
    if let Some(note) = &v.note {
        let _ = write!(s, " ({note})");
    }
    s
}

fn cmd_bound(a: &BoundArgs, json: bool) -> CliResult<(String, bool)> {
    if a.check == Check::Carlitz {
        let c = bounds::carlitz_uchiyama(a.q, need(a.m, "m")?, need(a.delta, "delta")?)?;
        let text = if json {
            to_json(&c)
        } else {
            format!("carlitz p={} m={} delta={}: d ≥ {} (value {})", a.q, a.m.unwrap(), a.delta.unwrap(), c.bound, c.value)
        };
        return Ok((text, true));
    }
    let n = need(a.n, "n")?;
    let d = need(a.d, "d")?;
    let degree = nbstab::Field::of_order(a.q)?.degree() as usize;
    let k_exp = || need(a.k, "k").map(|k| k * degree);
    let v = match a.check {
        Check::Singleton => bounds::singleton_check(n, k_exp()?, d, a.q)?,
        Check::Hamming if d == 3 => bounds::hamming_check_d3(n, k_exp()?, a.q)?,
        Check::Hamming => bounds::hamming_pure(n, k_exp()?, d, a.q)?,
        Check::Gv => bounds::gv_exists(n, k_exp()?, d, a.q)?,
        Check::GvLinear => bounds::gv_linear_exists(n, need(a.k, "k")?, d, a.q)?,
        Check::MdsGv => bounds::mds_gv_exists(n, d, a.q)?,
        Check::Lp => bounds::lp_check(n, k_exp()?, d, a.q)?,
        Check::MdsLength => bounds::mds_constraints(n, d, a.q, a.conjecture)?,
        Check::Carlitz => unreachable!(),
    };
    let text = if json { to_json(&v) } else { verdict_text(&v) };
    Ok((text, v.satisfied))
}

fn cmd_puncture(a: &PunctureArgs, json: bool) -> CliResult<(String, bool)> {
    if let Some(b) = &a.bch {
        let &[q, m, delta] = b.as_slice() else {
            return Err(failure("BadParameters", "--bch takes q,m,delta"));
        };
        let m = m as u32;
        if !a.menu {
            return Err(failure("BadParameters", "--bch is used with --menu"));
        }
        let menu = puncture::bch_puncture_menu(q, m, delta)?;
        let text = if json {
            to_json(&menu)
        } else {
            let mut s = String::from("mu  length  k>=  d>=");
            for e in &menu {
                let _ = write!(s, "\n{:<3} {:<7} {:<4} {}", e.mu, e.length, e.k_at_least, e.d_at_least);
            }
            s
        };
        return Ok((text, true));
    }
    let path = a.code.as_deref().ok_or_else(|| failure("BadParameters", "--code or --bch is required"))?;
    let r = need(a.target_length, "target-length")?;
    let code = load(path)?;
    let pc = match bch_params(&code) {
        Some((q, m, delta)) => puncture::bch_puncture_code(q, m, delta)?,
        None => puncture::puncture_code(code.carrier())?,
    };
    let word = puncture::find_weight_word(&pc, r, exec())?
        .ok_or_else(|| failure("NoWord", format!("the puncture code has no word of weight {r}")))?;
    let out = puncture::puncture_to(&code, &word)?;
    Ok((emit_code(out, a.distance, a.out.as_deref())?, true))
}

/// (q, m, δ) when the code is a euclidean BCH code, whose puncture code
/// contains certified GRM subcodes.
fn bch_params(code: &StabilizerCode) -> Option<(u64, u32, u64)> {
    let p = code.provenance();
    if p.construction != "bch-e" {
        return None;
    }
    let get = |k: &str| p.params.get(k).copied();
    Some((get("q")? as u64, get("m")? as u32, get("delta")? as u64))
}

fn cmd_derive(a: &DeriveArgs) -> CliResult<(String, bool)> {
    let x = load(&a.input)?;
    let second = || -> CliResult<StabilizerCode> {
        let path = a.input2.as_deref().ok_or_else(|| failure("BadParameters", "--in2 is required for this rule"))?;
        load(path)
    };
    let out = match a.rule {
        Rule::Lengthen => derive::lengthen(&x)?,
        Rule::Shorten => derive::shorten_pure(&x)?,
        Rule::Reduce => derive::reduce_dim(&x)?,
        Rule::Sum => derive::direct_sum(&x, &second()?)?,
        Rule::Combine => derive::nested_combine(&x, &second()?)?,
        Rule::Difference => derive::difference_combine(&x, &second()?)?,
        Rule::Expand => derive::expand_field(&x, a.sub_degree, None)?,
    };
    Ok((emit_code(out, a.distance, a.out.as_deref())?, true))
}

#[derive(Serialize)]
struct Row {
    family: String,
    params: String,
    code: String,
    purity: String,
    method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    millis: Option<u128>,
}

/// Family members over the grid, in a fixed order.
fn grid(qs: &[u64], max_n: u64) -> Vec<ConstructArgs> {
    let mut out = Vec::new();
    let base = |family, q| ConstructArgs {
        family,
        q,
        m: None,
        n: None,
        delta: None,
        r1: None,
        r2: None,
        distance: DistanceArg::Exact,
        out: None,
    };
    let pow = |q: u64, e: u32| q.checked_pow(e).unwrap_or(u64::MAX);
    let mut qs = qs.to_vec();
    qs.sort_unstable();
    qs.dedup();
    for &q in &qs {
        for m in 2..=8 {
            if (pow(q, 2 * m) - 1) / (q * q - 1).max(1) <= max_n {
                out.push(ConstructArgs { m: Some(m), ..base(Family::HammingH, q) });
            }
        }
        for m in 2..=16 {
            if (pow(q, m) - 1) / (q - 1).max(1) <= max_n {
                out.push(ConstructArgs { m: Some(m), ..base(Family::HammingE, q) });
            }
        }
        for n in 3..=max_n.min(200) {
            out.push(ConstructArgs { n: Some(n), ..base(Family::Qr, q) });
        }
        for m in 1..=4 {
            if pow(q, 2 * m) - 1 <= max_n {
                out.push(ConstructArgs { m: Some(m), ..base(Family::Melas, q) });
            }
        }
        for m in 2..=16 {
            if pow(q, m) - 1 <= max_n {
                for delta in 2..pow(q, m) {
                    out.push(ConstructArgs { m: Some(m), delta: Some(delta), ..base(Family::BchE, q) });
                }
            }
        }
        for m in 1..=8 {
            if pow(q, 2 * m) - 1 <= max_n {
                for delta in 2..pow(q, m) {
                    out.push(ConstructArgs { m: Some(m), delta: Some(delta), ..base(Family::BchH, q) });
                }
            }
            if pow(q, 2 * m) <= max_n {
                for delta in 2..pow(q, m) {
                    out.push(ConstructArgs { m: Some(m), delta: Some(delta), ..base(Family::BchExt, q) });
                }
            }
        }
        for m in 1..=16u32 {
            if 1u64 << m > max_n {
                break;
            }
            for r2 in 1..=m {
                for r1 in 0..r2 {
                    out.push(ConstructArgs { m: Some(m), r1: Some(r1), r2: Some(r2), ..base(Family::Character, q) });
                }
            }
        }
    }
    out
}

fn describe(a: &ConstructArgs) -> String {
    let mut parts = vec![format!("q={}", a.q)];
    for (name, v) in [("m", a.m.map(u64::from)), ("n", a.n), ("delta", a.delta), ("r1", a.r1.map(u64::from)), ("r2", a.r2.map(u64::from))] {
        if let Some(v) = v {
            parts.push(format!("{name}={v}"));
        }
    }
    parts.join(" ")
}

fn family_name(f: Family) -> String {
    f.to_possible_value().unwrap().get_name().to_string()
}

fn table_row(a: &ConstructArgs, exact: bool, timing: bool) -> Option<Row> {
    let start = Instant::now();
    let code = build(a).ok()?;
    let r = code.verify(exact, exec());
    let mut method = r.distance_method.clone();
    if !r.passed() {
        method.push_str(" FAILED");
    }
    let d = if r.distance.is_exact() {
        r.distance.value.to_string()
    } else {
        format!("≥{}", r.distance.value)
    };
    let k = code.k().map_or(format!("{}^{}", code.field().characteristic(), code.k_exp()), |k| k.to_string());
    let purity = match r.pure_to {
        Some(t) if t >= r.distance.value => "pure".to_string(),
        Some(t) => format!("pure to {t}"),
        None => "unknown".to_string(),
    };
    Some(Row {
        family: family_name(a.family),
        params: describe(a),
        code: format!("[[{},{},{}]]_{}", code.n(), k, d, code.q()),
        purity,
        method,
        millis: timing.then(|| start.elapsed().as_millis()),
    })
}

fn cmd_table(a: &TableArgs, json: bool) -> CliResult<(String, bool)> {
    let rows: Vec<Row> = grid(&a.q, a.max_n)
        .iter()
        .filter_map(|c| table_row(c, a.distance == DistanceArg::Exact, a.timing))
        .collect();
    if json {
        return Ok((to_json(&rows), true));
    }
    let mut header = vec!["family", "params", "code", "purity", "method"];
    if a.timing {
        header.push("ms");
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let mut v = vec![r.family.clone(), r.params.clone(), r.code.clone(), r.purity.clone(), r.method.clone()];
            if let Some(ms) = r.millis {
                v.push(ms.to_string());
            }
            v
        })
        .collect();
    let text = match a.format {
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&header).expect("in-memory write");
            for row in &cells {
                w.write_record(row).expect("in-memory write");
            }
            let bytes = w.into_inner().expect("in-memory write");
            String::from_utf8(bytes).expect("utf-8 cells").trim_end().to_string()
        }
        TableFormat::Text => {
            let widths: Vec<usize> = (0..header.len())
                .map(|i| {
                    cells
                        .iter()
                        .map(|r| r[i].chars().count())
                        .chain([header[i].len()])
                        .max()
                        .unwrap()
                })
                .collect();
            let line = |row: Vec<&str>| {
                let padded: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                    .collect();
                padded.join("  ").trim_end().to_string()
            };
            let mut s = line(header.clone());
            for row in &cells {
                s.push('\n');
                s.push_str(&line(row.iter().map(String::as_str).collect()));
            }
            s
        }
    };
    Ok((text, true))
}

fn run(cli: &Cli) -> CliResult<(String, bool)> {
    match &cli.cmd {
        Command::Construct(a) => Ok((emit_code(build(a)?, a.distance, a.out.as_deref())?, true)),
        Command::Verify { file, distance } => cmd_verify(file, *distance, cli.json),
        Command::Bound(a) => cmd_bound(a, cli.json),
        Command::Puncture(a) => cmd_puncture(a, cli.json),
        Command::Derive(a) => cmd_derive(a),
        Command::Table(a) => cmd_table(a, cli.json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
            eprintln!("{}", to_json(&failure("Threads", e.to_string())));
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok((text, ok)) => {
            println!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("{}", serde_json::to_string(&f).expect("serializable"));
            ExitCode::from(2)
        }
    }
}
