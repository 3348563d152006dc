//! Monte Carlo and exhaustive histograms, distances between distributions,
//! and exact equidistribution checks between `PF_n` and `[n] -> [n+1]`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::enumerate::{function_census, pf_census, DEFAULT_LIMIT};
use crate::error::{Error, Result};
use crate::exact::ratio_to_f64;
use crate::limits::Limit;
use crate::parking::ParkingFunction;
use crate::sample::{Ensemble, SampleConfig};
use crate::stats::{self, ChainPoset, Relation};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// A statistic that can be histogrammed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Statistic {
    First,
    /// `C(n+1, 2) - sum`, the inconvenience for parking functions.
    Area,
    /// Area recentred by `n/2` and divided by `n^(3/2)`.
    ScaledArea,
    Lucky,
    Repeats,
    Ones,
    Descents,
    DescentPattern,
    Species,
    Inversions,
    LongestRun(Relation),
    MaxDiscrepancy,
    Kmax,
    CoordinateCount(f64),
}

impl Statistic {
    pub const NAMES: [&'static str; 14] = [
        "first",
        "area",
        "scaled-area",
        "lucky",
        "repeats",
        "ones",
        "descents",
        "descent-pattern",
        "species",
        "inversions",
        "longest-run",
        "max-discrepancy",
        "kmax",
        "coordinate-count",
    ];

    /// Looks a statistic up by name. `longest-run` takes `relation` (default
    /// `<=`), `coordinate-count` takes the level `x`.
    pub fn parse(name: &str, relation: Option<Relation>, x: Option<f64>) -> Result<Self> {
        Ok(match name {
            "first" => Statistic::First,
            "area" => Statistic::Area,
            "scaled-area" => Statistic::ScaledArea,
            "lucky" => Statistic::Lucky,
            "repeats" => Statistic::Repeats,
            "ones" => Statistic::Ones,
            "descents" => Statistic::Descents,
            "descent-pattern" => Statistic::DescentPattern,
            "species" => Statistic::Species,
            "inversions" => Statistic::Inversions,
            "longest-run" => Statistic::LongestRun(relation.unwrap_or(Relation::Le)),
            "max-discrepancy" => Statistic::MaxDiscrepancy,
            "kmax" => Statistic::Kmax,
            "coordinate-count" => {
                let x = x.ok_or_else(|| Error::Domain("coordinate-count needs a level x".into()))?;
                if !(x > 0.0 && x < 1.0) {
                    return Err(Error::Domain(format!("level x must lie in (0, 1), got {x}")));
                }
                Statistic::CoordinateCount(x)
            }
            other => return Err(Error::UnknownStatistic(other.to_string())),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Statistic::First => "first",
            Statistic::Area => "area",
            Statistic::ScaledArea => "scaled-area",
            Statistic::Lucky => "lucky",
            Statistic::Repeats => "repeats",
            Statistic::Ones => "ones",
            Statistic::Descents => "descents",
            Statistic::DescentPattern => "descent-pattern",
            Statistic::Species => "species",
            Statistic::Inversions => "inversions",
            Statistic::LongestRun(_) => "longest-run",
            Statistic::MaxDiscrepancy => "max-discrepancy",
            Statistic::Kmax => "kmax",
            Statistic::CoordinateCount(_) => "coordinate-count",
        }
    }

    /// Lucky cars and `K_pi` only make sense for parking functions.
    pub fn check_ensemble(&self, ensemble: Ensemble) -> Result<()> {
        if matches!(self, Statistic::Lucky | Statistic::Kmax) && ensemble != Ensemble::Pf {
            return Err(Error::StatisticUnavailable {
                statistic: self.name().to_string(),
                ensemble: ensemble.to_string(),
            });
        }
        Ok(())
    }

    /// Maps the integer bin to the real value summaries are taken over.
    pub fn scaling(&self, n: usize) -> Scaling {
        let nf = n as f64;
        match *self {
            Statistic::ScaledArea => Scaling { offset: nf / 2.0, divisor: nf.powf(1.5) },
            Statistic::MaxDiscrepancy => Scaling { offset: 0.0, divisor: nf.sqrt() },
            Statistic::CoordinateCount(x) => Scaling { offset: nf * x, divisor: nf.sqrt() },
            _ => Scaling::IDENTITY,
        }
    }

    /// The limit law this statistic is paired with after scaling.
    pub fn paired_limit(&self, ensemble: Ensemble) -> Option<Limit> {
        match (*self, ensemble) {
            (Statistic::MaxDiscrepancy, Ensemble::Pf) => Some(Limit::ExcursionMax),
            (Statistic::MaxDiscrepancy, _) => Some(Limit::BridgeMax),
            (Statistic::ScaledArea, Ensemble::Pf) => Some(Limit::AiryArea),
            (Statistic::CoordinateCount(x), Ensemble::Pf) => Some(Limit::Maxwell { x }),
            (Statistic::Repeats, _) => Some(Limit::Poisson { lambda: 1.0 }),
            _ => None,
        }
    }

    /// Evaluates the statistic. `values` must be a parking function when the
    /// statistic requires one.
    pub fn eval(&self, values: &[u32], bound: u32) -> StatValue {
        let n = values.len() as i64;
        let int = |v: usize| StatValue::Int(v as i64);
        match *self {
            Statistic::First => StatValue::Int(values[0] as i64),
            Statistic::Area | Statistic::ScaledArea => {
                let sum: i64 = values.iter().map(|&v| v as i64).sum();
                StatValue::Int(n * (n + 1) / 2 - sum)
            }
            Statistic::Lucky => int(stats::lucky(&ParkingFunction::new_unchecked(values.to_vec()))),
            Statistic::Repeats => int(stats::repeats(values)),
            Statistic::Ones => int(stats::ones(values)),
            Statistic::Descents => int(stats::descents(values)),
            Statistic::DescentPattern => {
                StatValue::Seq(stats::descent_pattern(values).into_iter().map(i64::from).collect())
            }
            Statistic::Species => species_key(values, bound),
            Statistic::Inversions => StatValue::Int(stats::inversions(values) as i64),
            Statistic::LongestRun(rel) => int(stats::longest_run(values, rel)),
            Statistic::MaxDiscrepancy => StatValue::Int(stats::max_discrepancy_of(values)),
            Statistic::Kmax => StatValue::Int(
                stats::max_first_coordinate(&values[1..]).map_or(0, |d| d.k as i64),
            ),
            Statistic::CoordinateCount(x) => int(stats::coordinate_count(values, x)),
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::LongestRun(rel) => write!(f, "longest-run({rel})"),
            Statistic::CoordinateCount(x) => write!(f, "coordinate-count({x})"),
            other => f.write_str(other.name()),
        }
    }
}

/// Species counts `mu_1, mu_2, ...` with trailing zeros dropped. `mu_0` is
/// left out: it depends on the codomain size, not on the function.
fn species_key(values: &[u32], bound: u32) -> StatValue {
    let mut mu: Vec<i64> = stats::species_of(values, bound)[1..].iter().map(|&c| c as i64).collect();
    while mu.last() == Some(&0) {
        mu.pop();
    }
    StatValue::Seq(mu)
}

/// A histogram bin: an integer or an integer vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StatValue {
    Int(i64),
    Seq(Vec<i64>),
}

impl StatValue {
    pub fn as_int(&self) -> Option<i64> {
        match self {
            StatValue::Int(v) => Some(*v),
            StatValue::Seq(_) => None,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            StatValue::Int(v) => json!(v),
            StatValue::Seq(v) => json!(v),
        }
    }
}

impl fmt::Display for StatValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatValue::Int(v) => write!(f, "{v}"),
            StatValue::Seq(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", parts.join(";"))
            }
        }
    }
}

/// `real = (bin - offset) / divisor`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Scaling {
    pub offset: f64,
    pub divisor: f64,
}

impl Scaling {
    pub const IDENTITY: Scaling = Scaling { offset: 0.0, divisor: 1.0 };

    pub fn apply(&self, v: i64) -> f64 {
        (v as f64 - self.offset) / self.divisor
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Summaries {
    pub mean: f64,
    pub var: f64,
    pub q01: f64,
    pub q50: f64,
    pub q99: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    pub n: usize,
    pub statistic: Statistic,
    pub ensemble: Ensemble,
    /// `None` for exhaustive histograms.
    pub seed: Option<u64>,
    pub count: u64,
    pub bins: BTreeMap<StatValue, u64>,
    pub scaling: Scaling,
}

impl Histogram {
    pub fn is_exhaustive(&self) -> bool {
        self.seed.is_none()
    }

    pub fn get(&self, v: i64) -> u64 {
        self.bins.get(&StatValue::Int(v)).copied().unwrap_or(0)
    }

    /// Bins normalized to probabilities.
    pub fn pmf(&self) -> BTreeMap<StatValue, f64> {
        let total = self.count as f64;
        self.bins.iter().map(|(k, &c)| (k.clone(), c as f64 / total)).collect()
    }

    /// `(scaled value, count)` pairs in increasing order; `None` when the
    /// bins are vectors.
    pub fn scaled_values(&self) -> Option<Vec<(f64, u64)>> {
        self.bins
            .iter()
            .map(|(k, &c)| k.as_int().map(|v| (self.scaling.apply(v), c)))
            .collect()
    }

    /// Mean, variance and quantiles of the scaled values.
    pub fn summaries(&self) -> Option<Summaries> {
        let vals = self.scaled_values()?;
        if self.count == 0 {
            return None;
        }
        let total = self.count as f64;
        let mean = vals.iter().map(|&(v, c)| v * c as f64).sum::<f64>() / total;
        let var = vals.iter().map(|&(v, c)| (v - mean).powi(2) * c as f64).sum::<f64>() / total;
        let quantile = |p: f64| {
            let target = p * total;
            let mut acc = 0.0;
            for &(v, c) in &vals {
                acc += c as f64;
                if acc >= target {
                    return v;
                }
            }
            vals.last().map_or(f64::NAN, |&(v, _)| v)
        };
        Some(Summaries { mean, var, q01: quantile(0.01), q50: quantile(0.5), q99: quantile(0.99) })
    }

    pub fn to_json(&self) -> Value {
        let bins: Vec<Value> = self
            .bins
            .iter()
            .map(|(k, c)| json!({ "value": k.to_json(), "count": c }))
            .collect();
        let mut obj = json!({
            "schema_version": SCHEMA_VERSION,
            "tool_version": TOOL_VERSION,
            "n": self.n,
            "statistic": self.statistic.to_string(),
            "ensemble": self.ensemble,
            "seed": self.seed,
            "count": self.count,
            "exhaustive": self.is_exhaustive(),
            "scaling": self.scaling,
            "bins": bins,
        });
        if let Some(s) = self.summaries() {
            obj["summaries"] = serde_json::to_value(s).expect("plain floats serialize");
        }
        obj
    }

    /// Two columns with a `#` metadata line in front.
    pub fn to_csv(&self) -> String {
        let seed = self.seed.map_or("exhaustive".to_string(), |s| s.to_string());
        let mut out = format!(
            "# seed={seed} n={} count={} statistic={} ensemble={} tool_version={TOOL_VERSION}\n",
            self.n, self.count, self.statistic, self.ensemble
        );
        out.push_str("value,count\n");
        for (k, c) in &self.bins {
            out.push_str(&format!("{k},{c}\n"));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExperimentConfig {
    pub sample: SampleConfig,
    pub statistic: Statistic,
    /// Thread count hint; never changes the result.
    pub workers: Option<usize>,
}

impl ExperimentConfig {
    pub fn new(
        n: usize,
        count: u64,
        seed: u64,
        ensemble: Ensemble,
        statistic: Statistic,
    ) -> Result<Self> {
        statistic.check_ensemble(ensemble)?;
        Ok(ExperimentConfig { sample: SampleConfig::new(n, count, seed, ensemble)?, statistic, workers: None })
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers.max(1));
        self
    }
}

fn merge<K: Ord>(mut a: BTreeMap<K, u64>, b: BTreeMap<K, u64>) -> BTreeMap<K, u64> {
    for (k, c) in b {
        *a.entry(k).or_insert(0) += c;
    }
    a
}

fn with_workers<T: Send>(workers: Option<usize>, job: impl FnOnce() -> T + Send) -> T {
    match workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .map(|pool| pool.install(job))
            .unwrap_or_else(|_| panic!("could not start a pool of {w} threads")),
        None => job(),
    }
}

/// Draws samples `0..count` from their own streams and histograms the
/// statistic. The merge is a sum of counts, so the thread layout does not
/// affect the output.
pub fn run_experiment(config: &ExperimentConfig) -> Result<Histogram> {
    let sample = config.sample;
    let statistic = config.statistic;
    statistic.check_ensemble(sample.ensemble)?;
    let bound = sample.ensemble.bound(sample.n);
    let bins = with_workers(config.workers, || {
        (0..sample.count)
            .into_par_iter()
            .fold(BTreeMap::new, |mut acc, i| {
                let f = sample.draw(i);
                *acc.entry(statistic.eval(f.values(), bound)).or_insert(0u64) += 1;
                acc
            })
            .reduce(BTreeMap::new, merge)
    });
    Ok(Histogram {
        n: sample.n,
        statistic,
        ensemble: sample.ensemble,
        seed: Some(sample.seed),
        count: sample.count,
        bins,
        scaling: statistic.scaling(sample.n),
    })
}

/// Exact histogram over the whole ensemble.
pub fn exhaustive_histogram(n: usize, ensemble: Ensemble, statistic: Statistic) -> Result<Histogram> {
    exhaustive_histogram_with_limit(n, ensemble, statistic, DEFAULT_LIMIT)
}

pub fn exhaustive_histogram_with_limit(
    n: usize,
    ensemble: Ensemble,
    statistic: Statistic,
    limit: usize,
) -> Result<Histogram> {
    statistic.check_ensemble(ensemble)?;
    let bound = ensemble.bound(n);
    let bins = match ensemble {
        Ensemble::Pf => pf_census(n, limit, |v| statistic.eval(v, bound))?,
        Ensemble::Fn | Ensemble::Fn1 => {
            if n == 0 {
                return Err(Error::Domain("n must be at least 1".into()));
            }
            if n > limit {
                return Err(Error::Capacity { n, limit });
            }
            function_census(n, bound, |v| statistic.eval(v, bound))
        }
    };
    let count = bins.values().sum();
    Ok(Histogram { n, statistic, ensemble, seed: None, count, bins, scaling: statistic.scaling(n) })
}

/// Half the L1 distance between two distributions given as nonnegative
/// weights; each side is normalized first.
pub fn tv_distance<K: Ord>(p: &BTreeMap<K, f64>, q: &BTreeMap<K, f64>) -> Result<f64> {
    let sp: f64 = p.values().sum();
    let sq: f64 = q.values().sum();
    if !(sp > 0.0 && sq > 0.0) {
        return Err(Error::EmptyHistogram);
    }
    let keys: BTreeSet<&K> = p.keys().chain(q.keys()).collect();
    let total: f64 = keys
        .into_iter()
        .map(|k| (p.get(k).copied().unwrap_or(0.0) / sp - q.get(k).copied().unwrap_or(0.0) / sq).abs())
        .sum();
    Ok(0.5 * total)
}

/// Sup over the histogram's support of `|empirical CDF - limit CDF|`, using
/// both one-sided limits at each atom.
pub fn ks_distance_to_limit(hist: &Histogram, limit: &Limit) -> Result<f64> {
    let vals = hist
        .scaled_values()
        .ok_or_else(|| Error::Domain("KS distance needs a scalar statistic".into()))?;
    if hist.count == 0 {
        return Err(Error::EmptyHistogram);
    }
    ks_distance_weighted(&vals, |t| limit.cdf(t), limit.is_discrete())
}

/// KS distance of weighted atoms `(value, weight)` (sorted by value) from a
/// CDF.
pub fn ks_distance_weighted<F: Fn(f64) -> f64>(atoms: &[(f64, u64)], cdf: F, discrete: bool) -> Result<f64> {
    let total: u64 = atoms.iter().map(|&(_, c)| c).sum();
    if total == 0 {
        return Err(Error::EmptyHistogram);
    }
    let total = total as f64;
    let mut below = 0u64;
    let mut d: f64 = 0.0;
    for &(v, c) in atoms {
        let g = cdf(v);
        let g_left = if discrete { cdf(v - 1e-9) } else { g };
        d = d.max((below as f64 / total - g_left).abs());
        below += c;
        d = d.max((below as f64 / total - g).abs());
    }
    Ok(d)
}

/// Features whose distribution is compared between `PF_n` and
/// `[n] -> [n+1]`.
#[derive(Debug, Clone, PartialEq)]
pub enum Feature {
    /// Indicators of `f_i > f_{i+1}`.
    DescentPattern,
    /// Indicators of `f_i = f_{i+1}`.
    EqualityPattern,
    /// Indicators of `f_i >= f_{i+1}`.
    WeakDescentPattern,
    /// Indicator of being monotone on every chain.
    ChainPoset(ChainPoset),
    Species,
    Inversions,
    LongestRun(Relation),
    /// Indicator that every constraint holds; used for the features that
    /// are not equidistributed.
    Constraints(Vec<Constraint>),
}

impl Feature {
    fn eval(&self, values: &[u32], bound: u32) -> StatValue {
        let pattern = |rel: Relation| {
            StatValue::Seq(stats::adjacent_pattern(values, rel).into_iter().map(i64::from).collect())
        };
        match self {
            Feature::DescentPattern => pattern(Relation::Gt),
            Feature::EqualityPattern => pattern(Relation::Eq),
            Feature::WeakDescentPattern => pattern(Relation::Ge),
            Feature::ChainPoset(p) => StatValue::Int(stats::chain_monotone(values, p) as i64),
            Feature::Species => species_key(values, bound),
            Feature::Inversions => StatValue::Int(stats::inversions(values) as i64),
            Feature::LongestRun(rel) => StatValue::Int(stats::longest_run(values, *rel) as i64),
            Feature::Constraints(cs) => StatValue::Int(cs.iter().all(|c| c.holds(values)) as i64),
        }
    }
}

impl fmt::Display for Feature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Feature::DescentPattern => f.write_str("descent-pattern"),
            Feature::EqualityPattern => f.write_str("equality-pattern"),
            Feature::WeakDescentPattern => f.write_str("weak-descent-pattern"),
            Feature::ChainPoset(p) => write!(f, "chain-poset{p}"),
            Feature::Species => f.write_str("species"),
            Feature::Inversions => f.write_str("inversions"),
            Feature::LongestRun(rel) => write!(f, "longest-run({rel})"),
            Feature::Constraints(cs) => {
                let parts: Vec<String> = cs.iter().map(|c| c.to_string()).collect();
                write!(f, "constraints{{{}}}", parts.join(", "))
            }
        }
    }
}

/// `f_left rel f_right + shift`, positions 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Constraint {
    pub left: usize,
    pub relation: Relation,
    pub right: usize,
    pub shift: i64,
}

impl Constraint {
    pub fn new(left: usize, relation: Relation, right: usize) -> Self {
        Constraint { left, relation, right, shift: 0 }
    }

    pub fn shifted(mut self, shift: i64) -> Self {
        self.shift = shift;
        self
    }

    pub fn holds(&self, values: &[u32]) -> bool {
        let a = values[self.left - 1] as i64;
        let b = values[self.right - 1] as i64 + self.shift;
        match self.relation {
            Relation::Lt => a < b,
            Relation::Le => a <= b,
            Relation::Gt => a > b,
            Relation::Ge => a >= b,
            Relation::Eq => a == b,
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{} {} f{}", self.left, self.relation, self.right)?;
        match self.shift {
            0 => Ok(()),
            s if s > 0 => write!(f, "+{s}"),
            s => write!(f, "{s}"),
        }
    }
}

/// First value where the scaled counts differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub value: String,
    pub pf_count: u64,
    pub fn_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquidistributionReport {
    pub n: usize,
    pub feature: String,
    pub equal: bool,
    pub values_checked: usize,
    pub witness: Option<Witness>,
}

fn compare_scaled(
    n: usize,
    feature: String,
    pf: &BTreeMap<StatValue, u64>,
    fns: &BTreeMap<StatValue, u64>,
) -> EquidistributionReport {
    let keys: BTreeSet<&StatValue> = pf.keys().chain(fns.keys()).collect();
    let values_checked = keys.len();
    let witness = keys.into_iter().find_map(|k| {
        let a = pf.get(k).copied().unwrap_or(0);
        let b = fns.get(k).copied().unwrap_or(0);
        (b != (n as u64 + 1) * a).then(|| Witness { value: k.to_string(), pf_count: a, fn_count: b })
    });
    EquidistributionReport { n, feature, equal: witness.is_none(), values_checked, witness }
}

/// Compares the distribution of `feature` over `PF_n` with that over
/// `[n] -> [n+1]`: every value must be hit exactly `n + 1` times as often
/// by the functions.
pub fn exact_equidistribution(n: usize, feature: &Feature) -> Result<EquidistributionReport> {
    if let Feature::ChainPoset(p) = feature {
        if p.n() != n {
            return Err(Error::InvalidPoset(format!("poset is on [{}], not [{n}]", p.n())));
        }
    }
    if let Feature::Constraints(cs) = feature {
        if cs.iter().any(|c| c.left == 0 || c.right == 0 || c.left > n || c.right > n) {
            return Err(Error::Domain(format!("constraint position outside [1, {n}]")));
        }
    }
    let pf = pf_census(n, DEFAULT_LIMIT, |v| feature.eval(v, n as u32))?;
    let fns = function_census(n, n as u32 + 1, |v| feature.eval(v, n as u32 + 1));
    Ok(compare_scaled(n, feature.to_string(), &pf, &fns))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeakPeakReport {
    pub n: usize,
    pub i: usize,
    /// Counts of `f_{i-1} < f_i` and of `f_{i-1} < f_i < f_{i+1}`.
    pub pf_counts: (u64, u64),
    pub fn_counts: (u64, u64),
    /// Weak peaks counted directly, for each ensemble.
    pub pf_direct: u64,
    pub fn_direct: u64,
    pub equal: bool,
}

/// `P(f_{i-1} < f_i >= f_{i+1})` on both ensembles, as the difference of two
/// chain-monotone probabilities.
pub fn weak_peak_check(n: usize, i: usize) -> Result<WeakPeakReport> {
    if i < 2 || i + 1 > n {
        return Err(Error::Domain(format!("need 2 <= i <= n-1, got i={i}, n={n}")));
    }
    let rise = ChainPoset::chain(n, vec![i - 1, i], Relation::Lt)?;
    let climb = ChainPoset::chain(n, vec![i - 1, i, i + 1], Relation::Lt)?;
    let key = |v: &[u32]| {
        (
            stats::chain_monotone(v, &rise),
            stats::chain_monotone(v, &climb),
            v[i - 2] < v[i - 1] && v[i - 1] >= v[i],
        )
    };
    let tally = |m: BTreeMap<(bool, bool, bool), u64>| {
        let mut out = (0u64, 0u64, 0u64);
        for ((a, b, c), k) in m {
            out.0 += k * a as u64;
            out.1 += k * b as u64;
            out.2 += k * c as u64;
        }
        out
    };
    let pf = tally(pf_census(n, DEFAULT_LIMIT, key)?);
    let fns = tally(function_census(n, n as u32 + 1, key));
    let scale = n as u64 + 1;
    let equal = fns.0 == scale * pf.0
        && fns.1 == scale * pf.1
        && fns.0 - fns.1 == scale * (pf.0 - pf.1)
        && pf.2 == pf.0 - pf.1
        && fns.2 == fns.0 - fns.1;
    Ok(WeakPeakReport {
        n,
        i,
        pf_counts: (pf.0, pf.1),
        fn_counts: (fns.0, fns.1),
        pf_direct: pf.2,
        fn_direct: fns.2,
        equal,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JointBoundReport {
    pub n: usize,
    pub k: usize,
    pub sup_difference: f64,
    /// Grid point `(i_1, ..., i_k)` attaining the sup.
    pub argmax: Vec<u32>,
    pub bound: f64,
    pub holds: bool,
}

/// Exact sup over `x_j = i_j / n` of
/// `|P(pi_j <= i_j, j <= k) - prod_j i_j / n|`, against
/// `2k sqrt(log n / n) + k(k-1)/n`.
pub fn joint_coordinate_bound_check(n: usize, k: usize) -> Result<JointBoundReport> {
    if k == 0 || k > 3 || k > n {
        return Err(Error::Domain(format!("need 1 <= k <= min(3, n), got k={k}, n={n}")));
    }
    let census = pf_census(n, DEFAULT_LIMIT, |v| v[..k].to_vec())?;
    let total = BigInt::from(crate::enumerate::count_pf(n));
    let nk = BigInt::from(n).pow(k as u32);
    let grid_len = n.pow(k as u32);
    let mut best = (BigRational::zero(), vec![1u32; k]);
    for idx in 0..grid_len {
        let mut point = Vec::with_capacity(k);
        let mut r = idx;
        for _ in 0..k {
            point.push((r % n) as u32 + 1);
            r /= n;
        }
        let below: u64 = census
            .iter()
            .filter(|(t, _)| t.iter().zip(&point).all(|(a, b)| a <= b))
            .map(|(_, &c)| c)
            .sum();
        let prod: BigInt = point.iter().map(|&i| BigInt::from(i)).product();
        let diff = (BigRational::new(BigInt::from(below), total.clone()) - BigRational::new(prod, nk.clone())).abs();
        if diff > best.0 {
            best = (diff, point);
        }
    }
    let nf = n as f64;
    let kf = k as f64;
    let bound = 2.0 * kf * (nf.ln() / nf).sqrt() + kf * (kf - 1.0) / nf;
    let sup_difference = ratio_to_f64(&best.0);
    Ok(JointBoundReport { n, k, sup_difference, argmax: best.1, bound, holds: sup_difference <= bound })
}
