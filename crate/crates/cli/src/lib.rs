//! Argument handling for `parkfn`. `run` takes the argument list and the two
//! output streams so the whole tool can be driven from tests.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use parking_core::ensemble::{
    exact_equidistribution, ks_distance_to_limit, run_experiment,
    tv_distance, Constraint, ExperimentConfig, Feature, Histogram, Statistic, StatValue, TOOL_VERSION,
};
use parking_core::enumerate::{self, GfStatistic};
use parking_core::limits::Limit;
use parking_core::parking::{dyck_encode, inconvenience, is_parking_function, queue_profile};
use parking_core::stats::{self, Chain, ChainPoset, Relation};
use parking_core::verify::run_suite;
use parking_core::{Ensemble, ParkingFunction, PrefSequence, SampleConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "parkfn", version, about = "Random parking functions: sampling, statistics, exact enumeration and limit laws")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Draw functions, or histogram a statistic over many draws.
    Sample(SampleArgs),
    /// Every statistic of one function.
    Stats(StatsArgs),
    /// Exact counts, the first-coordinate table and generating functions.
    Enumerate(EnumerateArgs),
    /// Tabulate a limit distribution.
    Dist(DistArgs),
    /// Compare ensembles or a sample with a limit law.
    Compare(CompareArgs),
    /// Run the exact-identity suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StatChoice {
    /// Statistic name, e.g. first, scaled-area, max-discrepancy.
    #[arg(long)]
    pub stat: Option<String>,
    /// Relation for longest-run: <, <=, >, >=, =.
    #[arg(long)]
    pub relation: Option<String>,
    /// Level for coordinate-count, in (0, 1).
    #[arg(long)]
    pub x: Option<f64>,
}

impl StatChoice {
    fn statistic(&self) -> anyhow::Result<Option<Statistic>> {
        let relation = self.relation.as_deref().map(str::parse::<Relation>).transpose()?;
        self.stat
            .as_deref()
            .map(|s| Statistic::parse(s, relation, self.x))
            .transpose()
            .map_err(Into::into)
    }
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub count: u64,
    /// Decimal or 0x-prefixed hexadecimal.
    #[arg(long, value_parser = parse_seed, default_value = "0")]
    pub seed: u64,
    #[arg(long, default_value = "pf")]
    pub ensemble: String,
    #[command(flatten)]
    pub stat: StatChoice,
    #[arg(long)]
    pub workers: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    /// Comma-separated values, e.g. 1,3,5,3,1.
    #[arg(long, conflicts_with = "file")]
    pub pf: Option<String>,
    /// One function per line; blank lines and lines starting with # are skipped.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Codomain bound; inferred as max(n, largest value) when absent.
    #[arg(long)]
    pub m: Option<u32>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    /// Enumeration cap; generating functions above it are skipped.
    #[arg(long, default_value_t = enumerate::DEFAULT_LIMIT)]
    pub n_max: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Curve {
    Cdf,
    Pdf,
}

#[derive(Debug, Args)]
pub struct DistArgs {
    /// borel, poisson[:lambda], normal[:mean:sd], maxwell:x, excursion-max,
    /// bridge-max, airy-area.
    pub name: String,
    #[arg(long, value_enum, default_value = "cdf")]
    pub curve: Curve,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub from: f64,
    #[arg(long, default_value_t = 3.0, allow_negative_numbers = true)]
    pub to: f64,
    #[arg(long, default_value_t = 0.05)]
    pub step: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(subcommand)]
    pub kind: CompareKind,
}

#[derive(Debug, Subcommand)]
pub enum CompareKind {
    /// Exact equidistribution of a feature on PF_n and [n] -> [n+1].
    Equidist(EquidistArgs),
    /// Total variation distance between two sampled ensembles, or a sample
    /// and a reference law.
    Tv(TvArgs),
    /// Kolmogorov-Smirnov distance from a scaled statistic to a limit law.
    Ks(KsArgs),
}

#[derive(Debug, Args)]
pub struct EquidistArgs {
    #[arg(long)]
    pub n: usize,
    /// descent-pattern, equality-pattern, weak-descent-pattern, species,
    /// inversions, longest-run, chain-poset, constraints.
    #[arg(long)]
    pub feature: String,
    #[arg(long)]
    pub relation: Option<String>,
    /// Chains for chain-poset, e.g. "1<2<3;4>=5".
    #[arg(long)]
    pub chain: Option<String>,
    /// Constraints, e.g. "1<2,2>3" or "1<2-1".
    #[arg(long)]
    pub constraints: Option<String>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct SampledStat {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 10_000)]
    pub count: u64,
    #[arg(long, value_parser = parse_seed, default_value = "0")]
    pub seed: u64,
    #[arg(long, default_value = "pf")]
    pub ensemble: String,
    #[command(flatten)]
    pub stat: StatChoice,
    #[arg(long)]
    pub workers: Option<usize>,
}

#[derive(Debug, Args)]
pub struct TvArgs {
    #[command(flatten)]
    pub sampled: SampledStat,
    /// pf, fn, fn1 (sampled with the same seed), uniform (on [n]) or poisson.
    #[arg(long, default_value = "fn")]
    pub against: String,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct KsArgs {
    #[command(flatten)]
    pub sampled: SampledStat,
    /// Limit law; defaults to the statistic's natural pairing.
    #[arg(long)]
    pub limit: Option<String>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 7)]
    pub n_max: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

pub fn parse_seed(s: &str) -> Result<u64, String> {
    let t = s.trim();
    let parsed = match t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => t.parse::<u64>(),
    };
    parsed.map_err(|e| format!("invalid seed `{s}`: {e}"))
}

/// A parse failure at a 1-based token position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.position == 0 {
            f.write_str(&self.message)
        } else {
            write!(f, "token {}: {}", self.position, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

/// Parses comma-separated 1-based values. `bound` defaults to the larger of
/// the length and the largest value.
pub fn parse_function(text: &str, bound: Option<u32>) -> Result<PrefSequence, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError { position: 0, message: "empty input".into() });
    }
    let mut values = Vec::new();
    for (i, tok) in text.split(',').enumerate() {
        let tok = tok.trim();
        let position = i + 1;
        let v: u32 = tok.parse().map_err(|_| ParseError {
            position,
            message: format!("`{tok}` is not a positive integer"),
        })?;
        if v == 0 {
            return Err(ParseError { position, message: "values are 1-based; got 0".into() });
        }
        values.push(v);
    }
    let inferred = values.iter().copied().max().unwrap_or(0).max(values.len() as u32);
    let m = bound.unwrap_or(inferred);
    if let Some((i, &v)) = values.iter().enumerate().find(|(_, &v)| v > m) {
        return Err(ParseError { position: i + 1, message: format!("{v} exceeds the bound {m}") });
    }
    PrefSequence::new(values, m).map_err(|e| ParseError { position: 0, message: e.to_string() })
}

/// Runs `parkfn` with `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> anyhow::Result<i32> {
    match command {
        Command::Sample(a) => sample(a, out),
        Command::Stats(a) => stats_cmd(a, out),
        Command::Enumerate(a) => enumerate_cmd(a, out),
        Command::Dist(a) => dist(a, out),
        Command::Compare(a) => match a.kind {
            CompareKind::Equidist(a) => equidist(a, out),
            CompareKind::Tv(a) => tv(a, out),
            CompareKind::Ks(a) => ks(a, out),
        },
        Command::Verify(a) => verify(a, out),
    }
}

fn emit(text: &str, path: Option<&PathBuf>, out: &mut dyn Write) -> anyhow::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => out.write_all(text.as_bytes()).context("writing output"),
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn sample(a: SampleArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let ensemble: Ensemble = a.ensemble.parse()?;
    match a.stat.statistic()? {
        Some(statistic) => {
            let mut cfg = ExperimentConfig::new(a.n, a.count, a.seed, ensemble, statistic)?;
            if let Some(w) = a.workers {
                cfg = cfg.with_workers(w);
            }
            let h = run_experiment(&cfg)?;
            let text = match a.output.format {
                Format::Csv => h.to_csv(),
                Format::Json => json_text(&h.to_json()),
            };
            emit(&text, a.output.out.as_ref(), out)?;
        }
        None => {
            let cfg = SampleConfig::new(a.n, a.count, a.seed, ensemble)?;
            let draws: Vec<Vec<u32>> = (0..a.count).map(|i| cfg.draw(i).into_values()).collect();
            let text = match a.output.format {
                Format::Csv => {
                    let mut s = format!(
                        "# seed={} n={} count={} ensemble={} tool_version={TOOL_VERSION}\n",
                        a.seed, a.n, a.count, ensemble
                    );
                    let header: Vec<String> = (1..=a.n).map(|i| format!("f{i}")).collect();
                    s.push_str(&header.join(","));
                    s.push('\n');
                    for d in &draws {
                        let row: Vec<String> = d.iter().map(|v| v.to_string()).collect();
                        s.push_str(&row.join(","));
                        s.push('\n');
                    }
                    s
                }
                Format::Json => json_text(&json!({
                    "schema_version": parking_core::ensemble::SCHEMA_VERSION,
                    "tool_version": TOOL_VERSION,
                    "n": a.n,
                    "ensemble": ensemble,
                    "seed": a.seed,
                    "count": a.count,
                    "functions": draws,
                })),
            };
            emit(&text, a.output.out.as_ref(), out)?;
        }
    }
    Ok(EXIT_OK)
}

/// All statistics of one sequence, keyed by name.
pub fn describe(seq: &PrefSequence) -> Value {
    let v = seq.values();
    let mut obj = json!({
        "function": v,
        "n": v.len(),
        "m": seq.bound(),
        "is_parking_function": is_parking_function(v),
        "first": v[0],
        "sum": v.iter().map(|&x| x as u64).sum::<u64>(),
        "repeats": stats::repeats(v),
        "ones": stats::ones(v),
        "descents": stats::descents(v),
        "descent_pattern": stats::descent_pattern(v).into_iter().map(u8::from).collect::<Vec<_>>(),
        "species": stats::species(seq),
        "inversions": stats::inversions(v),
        "longest_run": {
            "<": stats::longest_run(v, Relation::Lt),
            "<=": stats::longest_run(v, Relation::Le),
            "=": stats::longest_run(v, Relation::Eq),
        },
        "scaled_area": stats::scaled_area_of(v),
        "discrepancy_profile": stats::discrepancy_profile(v),
    });
    if let Ok(pf) = ParkingFunction::new(v.to_vec()) {
        let coding = dyck_encode(&pf);
        obj["area"] = json!(inconvenience(&pf));
        obj["lucky"] = json!(stats::lucky(&pf));
        obj["max_discrepancy"] = json!(stats::max_discrepancy(&pf));
        obj["kmax"] = json!(stats::kmax(&pf));
        obj["queue_profile"] = json!(queue_profile(&pf));
        obj["dyck_path"] = json!(coding
            .path
            .iter()
            .map(|s| if matches!(s, parking_core::parking::Step::North) { 'N' } else { 'E' })
            .collect::<String>());
        obj["dyck_columns"] = json!(coding.column_labels);
    } else {
        obj["max_discrepancy"] = json!(stats::max_discrepancy_of(v));
    }
    obj
}

fn stats_cmd(a: StatsArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let lines: Vec<String> = match (&a.pf, &a.file) {
        (Some(text), _) => vec![text.clone()],
        (None, Some(path)) => std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(String::from)
            .collect(),
        (None, None) => bail!("give a function with --pf or --file"),
    };
    let mut reports = Vec::new();
    for (i, line) in lines.iter().enumerate() {
        let seq = parse_function(line, a.m).map_err(|e| anyhow!("line {}: {e}", i + 1))?;
        reports.push(describe(&seq));
    }
    let text = match a.output.format {
        Format::Json => {
            let body = if reports.len() == 1 && a.pf.is_some() {
                reports.pop().expect("one report")
            } else {
                Value::Array(reports)
            };
            json_text(&json!({ "tool_version": TOOL_VERSION, "stats": body }))
        }
        Format::Csv => {
            let mut s = format!("# tool_version={TOOL_VERSION}\nindex,statistic,value\n");
            for (i, r) in reports.iter().enumerate() {
                for (k, v) in r.as_object().expect("reports are objects") {
                    s.push_str(&format!("{},{k},\"{}\"\n", i + 1, v.to_string().replace('"', "'")));
                }
            }
            s
        }
    };
    emit(&text, a.output.out.as_ref(), out)?;
    Ok(EXIT_OK)
}

fn enumerate_cmd(a: EnumerateArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let n = a.n;
    if n == 0 {
        bail!("n must be at least 1");
    }
    let first: Vec<String> = (1..=n).map(|k| enumerate::count_first(n, k).map(|c| c.to_string())).collect::<Result<_, _>>()?;
    let mean = enumerate::exact_mean_first(n)?;
    let kpi: Vec<String> = (1..=n).map(|k| enumerate::k_pi_law(n, k).map(|r| r.to_string())).collect::<Result<_, _>>()?;
    let mut gf = serde_json::Map::new();
    for g in GfStatistic::ALL {
        gf.insert(format!("{g}_closed_form"), serde_json::to_value(enumerate::gf_closed_form(n, g))?);
        if n <= a.n_max {
            gf.insert(g.to_string(), serde_json::to_value(enumerate::gf_statistic_with_limit(n, g, a.n_max)?)?);
        }
    }
    let text = match a.output.format {
        Format::Json => json_text(&json!({
            "tool_version": TOOL_VERSION,
            "n": n,
            "count_pf": enumerate::count_pf(n).to_string(),
            "count_first": first,
            "mean_first": mean.to_string(),
            "k_pi_law": kpi,
            "generating_functions": gf,
        })),
        Format::Csv => {
            let mut s = format!("# n={n} count_pf={} tool_version={TOOL_VERSION}\nk,count_first,k_pi_law\n", enumerate::count_pf(n));
            for k in 0..n {
                s.push_str(&format!("{},{},{}\n", k + 1, first[k], kpi[k]));
            }
            s
        }
    };
    emit(&text, a.output.out.as_ref(), out)?;
    Ok(EXIT_OK)
}

fn dist(a: DistArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let limit: Limit = a.name.parse()?;
    if !(a.step > 0.0) || a.to < a.from {
        bail!("need step > 0 and to >= from");
    }
    let points = ((a.to - a.from) / a.step + 1e-9).floor() as usize + 1;
    let params: Vec<String> = limit.params().iter().map(|(k, v)| format!("{k}={v}")).collect();
    let curve = match a.curve {
        Curve::Cdf => "cdf",
        Curve::Pdf => "pdf",
    };
    let mut s = format!(
        "# distribution={} params=[{}] curve={curve} tool_version={TOOL_VERSION}\nargument,value\n",
        limit.name(),
        params.join(" ")
    );
    for i in 0..points {
        let t = a.from + i as f64 * a.step;
        let v = match a.curve {
            Curve::Cdf => limit.cdf(t),
            Curve::Pdf => limit.density(t),
        };
        s.push_str(&format!("{t},{v:.15e}\n"));
    }
    emit(&s, a.out.as_ref(), out)?;
    Ok(EXIT_OK)
}

/// `"1<2<3;4>=5"` into a chain poset on `[n]`.
pub fn parse_chains(n: usize, text: &str) -> anyhow::Result<ChainPoset> {
    let mut chains = Vec::new();
    for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let (positions, symbols) = split_relations(part)?;
        let relation = symbols[0];
        if symbols.iter().any(|&r| r != relation) {
            bail!("chain `{part}` mixes relations; a chain carries one relation");
        }
        chains.push(Chain { positions, relation });
    }
    Ok(ChainPoset::new(n, chains)?)
}

fn split_relations(text: &str) -> anyhow::Result<(Vec<usize>, Vec<Relation>)> {
    let mut positions = Vec::new();
    let mut relations = Vec::new();
    let mut num = String::new();
    let mut sym = String::new();
    for c in text.chars().filter(|c| !c.is_whitespace()) {
        if c.is_ascii_digit() {
            if !sym.is_empty() {
                relations.push(sym.parse::<Relation>()?);
                sym.clear();
            }
            num.push(c);
        } else {
            if !num.is_empty() {
                positions.push(num.parse()?);
                num.clear();
            }
            sym.push(c);
        }
    }
    if !num.is_empty() {
        positions.push(num.parse()?);
    }
    if positions.len() < 2 || relations.len() + 1 != positions.len() || !sym.is_empty() {
        bail!("cannot read `{text}` as positions separated by relations");
    }
    Ok((positions, relations))
}

/// `"1<2,2>3,1<2-1"`: each item compares two positions, with an optional
/// integer shift on the right.
pub fn parse_constraints(text: &str) -> anyhow::Result<Vec<Constraint>> {
    text.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|item| {
            let (body, shift) = match item.rfind(['+', '-']) {
                Some(i) if i > 0 => (&item[..i], item[i..].parse::<i64>()?),
                _ => (item, 0),
            };
            let (pos, rel) = split_relations(body)?;
            if pos.len() != 2 {
                bail!("constraint `{item}` must compare exactly two positions");
            }
            Ok(Constraint::new(pos[0], rel[0], pos[1]).shifted(shift))
        })
        .collect()
}

fn equidist(a: EquidistArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let relation = a.relation.as_deref().map(str::parse::<Relation>).transpose()?;
    let feature = match a.feature.as_str() {
        "descent-pattern" => Feature::DescentPattern,
        "equality-pattern" => Feature::EqualityPattern,
        "weak-descent-pattern" => Feature::WeakDescentPattern,
        "species" => Feature::Species,
        "inversions" => Feature::Inversions,
        "longest-run" => Feature::LongestRun(relation.unwrap_or(Relation::Le)),
        "chain-poset" => {
            let text = a.chain.as_deref().context("chain-poset needs --chain")?;
            Feature::ChainPoset(parse_chains(a.n, text)?)
        }
        "constraints" => {
            let text = a.constraints.as_deref().context("constraints needs --constraints")?;
            Feature::Constraints(parse_constraints(text)?)
        }
        other => bail!("unknown feature `{other}`"),
    };
    let report = exact_equidistribution(a.n, &feature)?;
    let text = match a.output.format {
        Format::Json => {
            let mut v = serde_json::to_value(&report)?;
            v["tool_version"] = json!(TOOL_VERSION);
            json_text(&v)
        }
        Format::Csv => {
            let (wv, wp, wf) = report
                .witness
                .as_ref()
                .map_or((String::new(), String::new(), String::new()), |w| {
                    (w.value.clone(), w.pf_count.to_string(), w.fn_count.to_string())
                });
            format!(
                "# tool_version={TOOL_VERSION}\nn,feature,equal,values_checked,witness,pf_count,fn_count\n{},\"{}\",{},{},\"{wv}\",{wp},{wf}\n",
                report.n, report.feature, report.equal, report.values_checked
            )
        }
    };
    emit(&text, a.output.out.as_ref(), out)?;
    Ok(EXIT_OK)
}

fn sampled_histogram(s: &SampledStat, ensemble: Ensemble) -> anyhow::Result<Histogram> {
    let statistic = s.stat.statistic()?.context("--stat is required")?;
    let mut cfg = ExperimentConfig::new(s.n, s.count, s.seed, ensemble, statistic)?;
    if let Some(w) = s.workers {
        cfg = cfg.with_workers(w);
    }
    Ok(run_experiment(&cfg)?)
}

fn metadata(s: &SampledStat, h: &Histogram) -> Value {
    json!({
        "tool_version": TOOL_VERSION,
        "n": s.n,
        "count": s.count,
        "seed": s.seed,
        "statistic": h.statistic.to_string(),
        "ensemble": h.ensemble,
    })
}

fn tv(a: TvArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let ensemble: Ensemble = a.sampled.ensemble.parse()?;
    let h = sampled_histogram(&a.sampled, ensemble)?;
    let p = h.pmf();
    let q: BTreeMap<StatValue, f64> = match a.against.as_str() {
        "uniform" => (1..=a.sampled.n as i64).map(|j| (StatValue::Int(j), 1.0)).collect(),
        "poisson" => (0..=100u64)
            .map(|j| (StatValue::Int(j as i64), parking_core::limits::poisson_pmf(1.0, j)))
            .collect(),
        other => {
            let e: Ensemble = other.parse()?;
            sampled_histogram(&a.sampled, e)?.pmf()
        }
    };
    let d = tv_distance(&p, &q)?;
    let mut meta = metadata(&a.sampled, &h);
    meta["against"] = json!(a.against);
    meta["tv_distance"] = json!(d);
    write_record(meta, &a.output, out)
}

fn ks(a: KsArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let ensemble: Ensemble = a.sampled.ensemble.parse()?;
    let h = sampled_histogram(&a.sampled, ensemble)?;
    let limit = match &a.limit {
        Some(name) => name.parse::<Limit>()?,
        None => h
            .statistic
            .paired_limit(ensemble)
            .with_context(|| format!("no default limit for `{}`; pass --limit", h.statistic))?,
    };
    let d = ks_distance_to_limit(&h, &limit)?;
    let mut meta = metadata(&a.sampled, &h);
    meta["limit"] = json!(limit.to_string());
    meta["ks_distance"] = json!(d);
    write_record(meta, &a.output, out)
}

fn write_record(meta: Value, output: &Output, out: &mut dyn Write) -> anyhow::Result<i32> {
    let text = match output.format {
        Format::Json => json_text(&meta),
        Format::Csv => {
            let obj = meta.as_object().expect("metadata is an object");
            let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
            let vals: Vec<String> = obj.values().map(|v| v.to_string().trim_matches('"').to_string()).collect();
            format!("{}\n{}\n", keys.join(","), vals.join(","))
        }
    };
    emit(&text, output.out.as_ref(), out)?;
    Ok(EXIT_OK)
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let results = run_suite(a.n_max)?;
    let failed = results.iter().filter(|c| !c.passed).count();
    match a.format {
        Format::Json => {
            let v = json!({
                "tool_version": TOOL_VERSION,
                "n_max": a.n_max,
                "checks": results,
                "failed": failed,
            });
            out.write_all(json_text(&v).as_bytes())?;
        }
        Format::Csv => {
            for c in &results {
                writeln!(out, "{c}")?;
            }
            writeln!(out, "{} checks, {} failed", results.len(), failed)?;
        }
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_VERIFY })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds() {
        assert_eq!(parse_seed("42"), Ok(42));
        assert_eq!(parse_seed("0x2A"), Ok(42));
        assert!(parse_seed("forty").is_err());
    }

    #[test]
    fn chains_and_constraints() {
        let p = parse_chains(5, "1<2<3; 5>=4").unwrap();
        assert_eq!(p.chains().len(), 2);
        assert!(parse_chains(5, "1<2<=3").is_err());
        assert!(parse_chains(3, "1<2;2<3").is_err());
        let cs = parse_constraints("1<2-1, 2>3").unwrap();
        assert_eq!(cs[0], Constraint::new(1, Relation::Lt, 2).shifted(-1));
        assert_eq!(cs[1], Constraint::new(2, Relation::Gt, 3));
    }
}
