//! Statistics of a single parking function or preference sequence.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parking::{is_parking_function, park, ParkingFunction, PrefSequence};

/// Comparison applied to a pair of values `(a, b)` as `a rel b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Relation {
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
}

impl Relation {
    #[inline]
    pub fn holds(self, a: u32, b: u32) -> bool {
        match self {
            Relation::Lt => a < b,
            Relation::Le => a <= b,
            Relation::Gt => a > b,
            Relation::Ge => a >= b,
            Relation::Eq => a == b,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Gt => ">",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "<" | "lt" => Ok(Relation::Lt),
            "<=" | "≤" | "le" => Ok(Relation::Le),
            ">" | "gt" => Ok(Relation::Gt),
            ">=" | "≥" | "ge" => Ok(Relation::Ge),
            "=" | "==" | "eq" => Ok(Relation::Eq),
            other => Err(Error::Domain(format!("unknown relation `{other}`"))),
        }
    }
}

/// Number of adjacent equal pairs `seq_i = seq_{i+1}`.
pub fn repeats(seq: &[u32]) -> usize {
    seq.windows(2).filter(|w| w[0] == w[1]).count()
}

/// Number of cars parking at their preferred spot. Car 1 always is.
pub fn lucky(pf: &ParkingFunction) -> usize {
    park(pf.values()).lucky.iter().filter(|&&l| l).count()
}

/// Multiplicity of each value that occurs.
pub fn value_counts(seq: &[u32]) -> BTreeMap<u32, usize> {
    let mut out = BTreeMap::new();
    for &v in seq {
        *out.entry(v).or_insert(0) += 1;
    }
    out
}

pub fn ones(seq: &[u32]) -> usize {
    seq.iter().filter(|&&v| v == 1).count()
}

/// `X_i = rel(seq_i, seq_{i+1})` for `i = 1..n-1`. Descents use `Gt`, weak
/// descents `Ge`, equalities `Eq`, ascents `Lt`.
pub fn adjacent_pattern(seq: &[u32], rel: Relation) -> Vec<bool> {
    seq.windows(2).map(|w| rel.holds(w[0], w[1])).collect()
}

/// `X_i = 1` iff `seq_{i+1} < seq_i`.
pub fn descent_pattern(seq: &[u32]) -> Vec<bool> {
    adjacent_pattern(seq, Relation::Gt)
}

pub fn descents(seq: &[u32]) -> usize {
    seq.windows(2).filter(|w| w[1] < w[0]).count()
}

/// `mu_r` = number of values in `[1, m]` hit exactly `r` times, `r = 0..=n`.
pub fn species(seq: &PrefSequence) -> Vec<usize> {
    species_of(seq.values(), seq.bound())
}

pub fn species_of(values: &[u32], bound: u32) -> Vec<usize> {
    let n = values.len();
    let mut hits = vec![0usize; bound as usize + 1];
    for &v in values {
        hits[v as usize] += 1;
    }
    let mut mu = vec![0usize; n + 1];
    for &h in &hits[1..] {
        mu[h] += 1;
    }
    mu
}

/// Pairs `i < j` with `seq_i > seq_j`, via a Fenwick tree over values.
pub fn inversions(seq: &[u32]) -> u64 {
    let max = seq.iter().copied().max().unwrap_or(0) as usize;
    let mut tree = vec![0u64; max + 1];
    let mut total = 0u64;
    for (seen, &v) in seq.iter().enumerate() {
        // count of earlier values <= v
        let mut le = 0u64;
        let mut i = v as usize;
        while i > 0 {
            le += tree[i];
            i &= i - 1;
        }
        total += seen as u64 - le;
        let mut i = v as usize;
        while i <= max {
            tree[i] += 1;
            i += i & i.wrapping_neg();
        }
    }
    total
}

/// Length (in values) of the longest consecutive stretch on which every
/// adjacent pair satisfies `rel`.
pub fn longest_run(seq: &[u32], rel: Relation) -> usize {
    if seq.is_empty() {
        return 0;
    }
    let mut best = 1;
    let mut cur = 1;
    for w in seq.windows(2) {
        if rel.holds(w[0], w[1]) {
            cur += 1;
            best = best.max(cur);
        } else {
            cur = 1;
        }
    }
    best
}

/// Split of a suffix `pi_2..pi_n` into `alpha` in `PF_{k-1}` (the values
/// below `k`, read left to right) and `beta` in `PF_{n-k}`, where the other
/// positions carry `beta + (offset, ..., offset)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShuffleDecomposition {
    pub k: u32,
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    /// Amount added to `beta` in the suffix.
    pub offset: u32,
    /// 1-based positions in the suffix that carry `alpha`.
    pub interleaving: Vec<usize>,
}

fn split_by_value(suffix: &[u32], k: u32, offset: u32) -> Option<ShuffleDecomposition> {
    let n = suffix.len() + 1;
    if k == 0 || k as usize > n {
        return None;
    }
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    let mut interleaving = Vec::new();
    for (i, &v) in suffix.iter().enumerate() {
        if v < k {
            alpha.push(v);
            interleaving.push(i + 1);
        } else if v > offset {
            beta.push(v - offset);
        } else {
            return None;
        }
    }
    let sizes_ok = alpha.len() == k as usize - 1 && beta.len() == n - k as usize;
    if sizes_ok && is_parking_function(&alpha) && is_parking_function(&beta) {
        Some(ShuffleDecomposition {
            k,
            alpha,
            beta,
            offset,
            interleaving,
        })
    } else {
        None
    }
}

/// Tests whether `suffix` is a shuffle of some `alpha` in `PF_{k-1}` and
/// `beta + (k-1, ..., k-1)` with `beta` in `PF_{n-k}`, splitting by value.
///
/// Several `k` can pass this test for one suffix; only the maximal one
/// (see [`max_first_coordinate`]) is tied to the admissible first values.
pub fn shuffle_decomposition_at(suffix: &[u32], k: u32) -> Option<ShuffleDecomposition> {
    split_by_value(suffix, k, k.saturating_sub(1))
}

/// Largest `k` such that `(k, suffix)` is a parking function, with its
/// decomposition. `None` when no first value works.
///
/// At the maximal `k` no suffix value equals `k`: the values below `k` form
/// `alpha` in `PF_{k-1}` and the values above `k`, less `k`, form `beta` in
/// `PF_{n-k}`. This split is unique.
pub fn max_first_coordinate(suffix: &[u32]) -> Option<ShuffleDecomposition> {
    let n = suffix.len() + 1;
    let mut counts = vec![0usize; n + 1];
    for &v in suffix {
        if v == 0 || v as usize > n {
            return None;
        }
        counts[v as usize] += 1;
    }
    // (j, suffix) is valid iff c_i >= i for i < j and c_i >= i - 1 for i >= j,
    // where c_i counts suffix values <= i.
    let mut cumulative = vec![0usize; n + 1];
    for i in 1..=n {
        cumulative[i] = cumulative[i - 1] + counts[i];
    }
    let k = (1..=n).find(|&i| cumulative[i] < i).unwrap_or(n);
    if (k..=n).any(|i| cumulative[i] + 1 < i) {
        return None;
    }
    let decomposition = split_by_value(suffix, k as u32, k as u32);
    debug_assert!(decomposition.is_some(), "maximal k always splits: {suffix:?}");
    decomposition
}

/// `K_pi` for a parking function: the largest admissible first value given
/// the other coordinates.
pub fn kmax(pf: &ParkingFunction) -> u32 {
    max_first_coordinate(&pf.values()[1..])
        .map(|d| d.k)
        .expect("a parking function's own suffix always extends")
}

/// `#{i : seq_i <= k} - k` for `k = 0..=n`; may be negative off `PF_n`.
pub fn discrepancy_profile(seq: &[u32]) -> Vec<i64> {
    let n = seq.len();
    let mut counts = vec![0i64; n + 1];
    for &v in seq {
        if (v as usize) <= n {
            counts[v as usize] += 1;
        }
    }
    let mut out = Vec::with_capacity(n + 1);
    out.push(0);
    let mut running = 0;
    for (k, &c) in counts.iter().enumerate().skip(1) {
        running += c;
        out.push(running - k as i64);
    }
    out
}

/// `max_{1 <= k <= n} #{i : seq_i <= k} - k`.
pub fn max_discrepancy_of(seq: &[u32]) -> i64 {
    discrepancy_profile(seq)[1..].iter().copied().max().unwrap_or(0)
}

pub fn max_discrepancy(pf: &ParkingFunction) -> u32 {
    max_discrepancy_of(pf.values()) as u32
}

/// `#{i : seq_i < n x}`, the coordinate count at level `x`.
pub fn coordinate_count(seq: &[u32], x: f64) -> usize {
    let level = seq.len() as f64 * x;
    seq.iter().filter(|&&v| (v as f64) < level).count()
}

/// `(n^2/2 - sum) / n^{3/2}`.
pub fn scaled_area(pf: &ParkingFunction) -> f64 {
    scaled_area_of(pf.values())
}

pub fn scaled_area_of(seq: &[u32]) -> f64 {
    let n = seq.len() as f64;
    let sum: u64 = seq.iter().map(|&v| v as u64).sum();
    (n * n / 2.0 - sum as f64) / n.powf(1.5)
}

/// One chain of a chain poset: consecutive positions must satisfy `relation`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Chain {
    /// 1-based positions, in chain order.
    pub positions: Vec<usize>,
    pub relation: Relation,
}

/// A poset on `[n]` made of disjoint chains, each carrying a single relation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChainPoset {
    n: usize,
    chains: Vec<Chain>,
}

impl ChainPoset {
    pub fn new(n: usize, chains: Vec<Chain>) -> Result<Self> {
        let mut used = vec![false; n + 1];
        for chain in &chains {
            if chain.positions.len() < 2 {
                return Err(Error::InvalidPoset(format!(
                    "chain {:?} has fewer than two positions",
                    chain.positions
                )));
            }
            for &p in &chain.positions {
                if p == 0 || p > n {
                    return Err(Error::InvalidPoset(format!("position {p} outside [1, {n}]")));
                }
                if used[p] {
                    return Err(Error::InvalidPoset(format!("position {p} appears twice")));
                }
                used[p] = true;
            }
        }
        Ok(ChainPoset { n, chains })
    }

    pub fn empty(n: usize) -> Self {
        ChainPoset { n, chains: Vec::new() }
    }

    /// Single chain with one relation.
    pub fn chain(n: usize, positions: Vec<usize>, relation: Relation) -> Result<Self> {
        Self::new(n, vec![Chain { positions, relation }])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn chains(&self) -> &[Chain] {
        &self.chains
    }
}

impl fmt::Display for ChainPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .chains
            .iter()
            .map(|c| {
                let sym = format!(" {} ", c.relation.symbol());
                c.positions.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(&sym)
            })
            .collect();
        write!(f, "{{{}}}", parts.join("; "))
    }
}

pub fn chain_monotone(seq: &[u32], poset: &ChainPoset) -> bool {
    poset.chains.iter().all(|c| {
        c.positions
            .windows(2)
            .all(|w| c.relation.holds(seq[w[0] - 1], seq[w[1] - 1]))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pf(v: &[u32]) -> ParkingFunction {
        ParkingFunction::new(v.to_vec()).unwrap()
    }

    #[test]
    fn repeats_examples() {
        assert_eq!(repeats(&[1, 1, 2]), 1);
        assert_eq!(repeats(&[1, 2, 1]), 0);
        assert_eq!(repeats(&[1, 1, 1]), 2);
    }

    #[test]
    fn lucky_examples() {
        assert_eq!(lucky(&pf(&[1, 3, 5, 3, 1])), 3);
        assert_eq!(lucky(&pf(&[1, 2, 3, 4, 5, 6, 7])), 7);
        let counts: Vec<usize> = [[1, 1], [1, 2], [2, 1]].iter().map(|v| lucky(&pf(v))).collect();
        assert_eq!(counts, vec![1, 2, 2]);
    }

    #[test]
    fn ones_and_counts() {
        assert_eq!(ones(&[1, 2, 1]), 2);
        assert_eq!(ones(&[1; 6]), 6);
        let vc = value_counts(&[2, 1, 2, 1, 1, 1]);
        assert_eq!(vc[&1], 4);
        assert_eq!(vc[&2], 2);
    }

    #[test]
    fn pattern_examples() {
        let f = [2, 1, 2, 1, 1, 1];
        assert_eq!(descent_pattern(&f), vec![true, false, true, false, false]);
        assert_eq!(descents(&f), 2);
        assert!(descent_pattern(&[1, 2, 3, 4]).iter().all(|&x| !x));
        assert_eq!(adjacent_pattern(&f, Relation::Eq), vec![false, false, false, true, true]);
        assert_eq!(adjacent_pattern(&f, Relation::Ge), vec![true, false, true, true, true]);
        assert!(descent_pattern(&[3]).is_empty());
    }

    #[test]
    fn species_examples() {
        let f = PrefSequence::new(vec![2, 1, 2, 1, 1, 1], 7).unwrap();
        assert_eq!(species(&f), vec![5, 0, 1, 0, 1, 0, 0]);
        let c = PrefSequence::new(vec![3; 5], 6).unwrap();
        assert_eq!(species(&c), vec![5, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(inversions(&[2, 1, 2, 1, 1, 1]), 7);
        assert_eq!(inversions(&[1, 1, 2, 3]), 0);
        assert_eq!(inversions(&[5, 4, 3, 2, 1]), 10);
    }

    #[test]
    fn longest_run_examples() {
        assert_eq!(longest_run(&[1, 2, 3, 4, 4, 5, 6, 5], Relation::Lt), 4);
        assert_eq!(longest_run(&[3; 6], Relation::Le), 6);
        assert_eq!(longest_run(&[2, 1, 2, 1, 1, 1], Relation::Lt), 2);
    }

    #[test]
    fn max_first_coordinate_examples() {
        assert_eq!(max_first_coordinate(&[1, 2]).unwrap().k, 3);
        assert!(max_first_coordinate(&[3, 3]).is_none());

        // The suffix (2,4,1,5,7,2,6) has seven entries, so n = 8; the maximal
        // first value is 8, while k = 4 gives a smaller valid shuffle.
        let suffix = [2, 4, 1, 5, 7, 2, 6];
        let best = max_first_coordinate(&suffix).unwrap();
        assert_eq!(best.k, 8);
        assert_eq!(best.alpha, suffix.to_vec());
        assert!(best.beta.is_empty());
        let d = max_first_coordinate(&[1, 1, 4]).unwrap();
        assert_eq!((d.k, d.alpha, d.beta, d.offset), (3, vec![1, 1], vec![1], 3));
        let at4 = shuffle_decomposition_at(&suffix, 4).unwrap();
        assert_eq!(at4.alpha, vec![2, 1, 2]);
        assert_eq!(at4.beta, vec![1, 2, 4, 3]);
        assert_eq!(at4.interleaving, vec![1, 3, 6]);
    }

    #[test]
    fn discrepancy_examples() {
        assert_eq!(max_discrepancy(&pf(&[1, 2, 3, 4])), 0);
        assert_eq!(max_discrepancy(&pf(&[1, 1, 1])), 2);
        assert_eq!(max_discrepancy(&pf(&[1, 3, 5, 3, 1])), 1);
    }

    #[test]
    fn scaled_area_examples() {
        assert!((scaled_area(&pf(&[1, 2, 3, 4])) + 0.25).abs() < 1e-15);
        assert!((scaled_area(&pf(&[1, 1, 1])) - 1.5 / 27f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn chain_examples() {
        let f = [3, 4, 5, 1];
        let p = ChainPoset::chain(4, vec![1, 2, 3], Relation::Lt).unwrap();
        assert!(chain_monotone(&f, &p));
        let q = ChainPoset::chain(4, vec![2, 3, 4], Relation::Lt).unwrap();
        assert!(!chain_monotone(&f, &q));
        assert!(chain_monotone(&f, &ChainPoset::empty(4)));
        let eq = ChainPoset::chain(3, vec![1, 2], Relation::Eq).unwrap();
        assert!(chain_monotone(&[5, 5, 1], &eq));
        assert!(!chain_monotone(&[1, 2, 3], &eq));
    }

    #[test]
    fn poset_validation() {
        assert!(ChainPoset::chain(3, vec![1], Relation::Lt).is_err());
        assert!(ChainPoset::chain(3, vec![1, 4], Relation::Lt).is_err());
        let overlapping = vec![
            Chain { positions: vec![1, 2], relation: Relation::Lt },
            Chain { positions: vec![2, 3], relation: Relation::Lt },
        ];
        assert!(matches!(ChainPoset::new(3, overlapping), Err(Error::InvalidPoset(_))));
    }
}
