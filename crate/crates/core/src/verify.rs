//! The exact-identity suite behind `parkfn verify`: every closed form is
//! checked against brute force up to a size cap.

use std::collections::BTreeMap;
use std::fmt::{self, Display};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::enumerate::{self, enumerate_pf, function_census, pf_census, Functions, GfStatistic};
use crate::ensemble::{exact_equidistribution, weak_peak_check, Feature};
use crate::error::Result;
use crate::exact::{int_pow, ratio};
use crate::parking::{dyck_decode, dyck_encode, is_parking_function, park, PrefSequence};
use crate::sample::{apply_shift, find_valid_shift};
use crate::stats::{self, ChainPoset, Relation};

/// Largest `n` for checks that enumerate all of `[n] -> [n+1]`.
pub const FUNCTION_CAP: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub module: &'static str,
    pub operation: &'static str,
    pub inputs: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

impl Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "ok  " } else { "FAIL" };
        write!(f, "{tag} {}::{}({})", self.module, self.operation, self.inputs)?;
        if !self.passed {
            write!(f, ": expected {}, got {}", self.expected, self.actual)?;
        }
        Ok(())
    }
}

struct Suite {
    out: Vec<CheckOutcome>,
}

impl Suite {
    fn check<T: PartialEq + Display>(
        &mut self,
        module: &'static str,
        operation: &'static str,
        inputs: String,
        expected: T,
        actual: T,
    ) {
        self.out.push(CheckOutcome {
            module,
            operation,
            inputs,
            passed: expected == actual,
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }
}

fn all_patterns(len: usize) -> impl Iterator<Item = Vec<bool>> {
    (0..1u32 << len).map(move |mask| (0..len).map(|i| mask >> i & 1 == 1).collect())
}

/// Runs every check with enumeration up to `n_max` (at most 8; checks over
/// `[n] -> [n+1]` stop at `FUNCTION_CAP`).
pub fn run_suite(n_max: usize) -> Result<Vec<CheckOutcome>> {
    let n_max = n_max.clamp(1, enumerate::DEFAULT_LIMIT);
    let f_max = n_max.min(FUNCTION_CAP);
    let mut s = Suite { out: Vec::new() };

    for n in 1..=n_max.min(6) {
        let mut agree = true;
        for f in Functions::new(n, n as u32) {
            agree &= is_parking_function(&f) == park(&f).is_success();
        }
        s.check("core", "is_parking_function", format!("n={n}, all of [n]^n"), "agrees with park", if agree { "agrees with park" } else { "disagrees" });
        let mut roundtrip = true;
        for pf in enumerate_pf(n)? {
            let coding = dyck_encode(&pf);
            roundtrip &= dyck_decode(&coding).as_ref() == Ok(&pf) && coding.area == stats_area(pf.values());
        }
        s.check("core", "dyck_decode(dyck_encode)", format!("n={n}"), true, roundtrip);
    }

    for n in 1..=n_max {
        let enumerated = BigUint::from(enumerate_pf(n)?.count());
        s.check("enumerate", "count_pf", format!("n={n}"), enumerated, enumerate::count_pf(n));

        let census = pf_census(n, n_max, |v| v[0])?;
        let mut sum = BigUint::zero();
        for k in 1..=n {
            let c = enumerate::count_first(n, k)?;
            sum += &c;
            s.check(
                "enumerate",
                "count_first",
                format!("n={n}, k={k}"),
                BigUint::from(census.get(&(k as u32)).copied().unwrap_or(0)),
                c,
            );
        }
        s.check("enumerate", "sum_k count_first", format!("n={n}"), enumerate::count_pf(n), sum);

        let total: u64 = census.values().sum();
        let weighted: u64 = census.iter().map(|(&k, &c)| k as u64 * c).sum();
        s.check(
            "enumerate",
            "exact_mean_first",
            format!("n={n}"),
            ratio(weighted, total),
            enumerate::exact_mean_first(n)?,
        );

        if n <= 7 {
            for g in GfStatistic::ALL {
                s.check(
                    "enumerate",
                    "gf_statistic",
                    format!("n={n}, statistic={g}"),
                    enumerate::gf_closed_form(n, g),
                    enumerate::gf_statistic_with_limit(n, g, n_max)?,
                );
            }
            let law: BigRational = (1..=n).map(|k| enumerate::k_pi_law(n, k)).sum::<Result<_>>()?;
            s.check("enumerate", "sum_k k_pi_law", format!("n={n}"), BigRational::one(), law);
        }
    }

    for n in 1..=10 {
        let one = BigRational::one();
        let (lhs, rhs) = enumerate::abel_identity_check(&one, &one, n)?;
        s.check("enumerate", "abel_identity_check", format!("x=1, y=1, n={n}"), lhs, rhs);
    }

    for n in 1..=f_max {
        let kmax = pf_census(n, n_max, |v| stats::max_first_coordinate(&v[1..]).map_or(0, |d| d.k))?;
        let total = BigInt::from(enumerate::count_pf(n));
        for k in 1..=n {
            let brute = BigRational::new(BigInt::from(kmax.get(&(k as u32)).copied().unwrap_or(0)), total.clone());
            s.check("enumerate", "k_pi_law", format!("n={n}, k={k}"), brute, enumerate::k_pi_law(n, k)?);
        }

        let patterns = function_census(n, n as u32 + 1, stats::descent_pattern);
        for pat in all_patterns(n - 1) {
            let brute = BigInt::from(patterns.get(&pat).copied().unwrap_or(0));
            s.check(
                "enumerate",
                "descent_pattern_prob",
                format!("n={n}, pattern={}", bits(&pat)),
                brute,
                enumerate::descent_pattern_count(n, &pat)?,
            );
        }
        let space = BigInt::from(n + 1).pow(n as u32);
        for set in all_patterns(n - 1) {
            let positions: Vec<usize> = set.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i + 1).collect();
            let hits: u64 = patterns
                .iter()
                .filter(|(p, _)| positions.iter().all(|&i| p[i - 1]))
                .map(|(_, &c)| c)
                .sum();
            s.check(
                "enumerate",
                "kpoint_correlation",
                format!("n={n}, A={positions:?}"),
                BigRational::new(BigInt::from(hits), space.clone()),
                enumerate::kpoint_correlation(n, &positions)?,
            );
        }
        if n >= 2 {
            s.check(
                "enumerate",
                "single descent",
                format!("n={n}"),
                ratio(1, 2) - ratio(1, 2 * (n as i64 + 1)),
                enumerate::kpoint_correlation(n, &[1])?,
            );
        }
        if n >= 3 {
            let cov = enumerate::kpoint_correlation(n, &[1, 2])?
                - enumerate::kpoint_correlation(n, &[1])? * enumerate::kpoint_correlation(n, &[2])?;
            let printed = -ratio(1, 12) * (BigRational::one() - int_pow(n as i64 + 1, -2));
            s.check("enumerate", "adjacent descent covariance", format!("n={n}"), printed, cov);
        }

        let features = [
            Feature::DescentPattern,
            Feature::EqualityPattern,
            Feature::WeakDescentPattern,
            Feature::Species,
            Feature::Inversions,
            Feature::LongestRun(Relation::Lt),
            Feature::LongestRun(Relation::Le),
            Feature::LongestRun(Relation::Eq),
        ];
        for feature in features.iter().cloned().chain(sample_posets(n)) {
            let r = exact_equidistribution(n, &feature)?;
            s.check("ensemble", "exact_equidistribution", format!("n={n}, feature={feature}"), "equal", eq_word(r.equal));
        }
        for i in 2..n {
            let r = weak_peak_check(n, i)?;
            s.check("ensemble", "weak_peak_check", format!("n={n}, i={i}"), "equal", eq_word(r.equal));
        }
    }

    for n in 1..=n_max.min(5) {
        let mut unique = true;
        let mut hits: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        for raw in Functions::new(n, n as u32 + 1) {
            let valid: Vec<u32> = (0..=n as u32).filter(|&k| is_parking_function(&apply_shift(&raw, k))).collect();
            unique &= valid.len() == 1;
            let seq = PrefSequence::new(raw.clone(), n as u32 + 1)?;
            let k = find_valid_shift(&seq);
            unique &= valid.first() == Some(&k);
            *hits.entry(apply_shift(&raw, k)).or_insert(0) += 1;
        }
        s.check("sample", "find_valid_shift", format!("n={n}, all of [n+1]^n"), "one valid shift", if unique { "one valid shift" } else { "not unique" });
        let even = hits.len() as u64 == enumerate_pf(n)?.count() as u64 && hits.values().all(|&c| c == n as u64 + 1);
        s.check("sample", "shift map fibres", format!("n={n}"), format!("each of (n+1)^(n-1) hit {} times", n + 1), if even { format!("each of (n+1)^(n-1) hit {} times", n + 1) } else { "uneven".into() });
    }

    for boxes in 1..=4usize {
        for b in 1..=4usize {
            let funcs: Vec<Vec<u32>> = Functions::new(b, boxes as u32).collect();
            let total = BigRational::from_integer(BigInt::from(funcs.len()));
            let mut joint: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
            for f in &funcs {
                *joint.entry(stats::species_of(f, boxes as u32)).or_insert(0) += 1;
            }
            for r in 0..=b {
                let mean: usize = joint.iter().map(|(m, &c)| m[r] * c as usize).sum();
                s.check(
                    "enumerate",
                    "species_moment",
                    format!("b={b}, B={boxes}, r={r}"),
                    BigRational::from_integer(mean.into()) / &total,
                    enumerate::species_moment(b, boxes, r, None)?,
                );
            }
            for (m, &c) in &joint {
                s.check(
                    "enumerate",
                    "species_joint_prob",
                    format!("b={b}, B={boxes}, m={m:?}"),
                    BigRational::from_integer(c.into()) / &total,
                    enumerate::species_joint_prob(b, boxes, m),
                );
            }
        }
    }

    Ok(s.out)
}

fn stats_area(values: &[u32]) -> u64 {
    let n = values.len() as u64;
    n * (n + 1) / 2 - values.iter().map(|&v| v as u64).sum::<u64>()
}

fn bits(p: &[bool]) -> String {
    p.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn eq_word(equal: bool) -> &'static str {
    if equal {
        "equal"
    } else {
        "unequal"
    }
}

/// A few disjoint chain posets on `[n]`, one per relation.
fn sample_posets(n: usize) -> Vec<Feature> {
    let mut out = Vec::new();
    for rel in [Relation::Lt, Relation::Le, Relation::Gt, Relation::Ge, Relation::Eq] {
        if n >= 3 {
            out.push(Feature::ChainPoset(ChainPoset::chain(n, vec![1, 2, 3], rel).expect("valid chain")));
        }
        if n >= 4 {
            out.push(Feature::ChainPoset(ChainPoset::chain(n, vec![4, 2], rel).expect("valid chain")));
        }
    }
    if n >= 5 {
        let two = ChainPoset::new(
            n,
            vec![
                stats::Chain { positions: vec![1, 3], relation: Relation::Lt },
                stats::Chain { positions: vec![2, 5, 4], relation: Relation::Ge },
            ],
        )
        .expect("disjoint chains");
        out.push(Feature::ChainPoset(two));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let out = run_suite(4).unwrap();
        assert!(out.len() > 100);
        let failed: Vec<String> = out.iter().filter(|c| !c.passed).map(|c| c.to_string()).collect();
        assert!(failed.is_empty(), "{failed:#?}");
    }

    #[test]
    fn failure_lines_name_everything() {
        let c = CheckOutcome {
            module: "enumerate",
            operation: "count_pf",
            inputs: "n=3".into(),
            expected: "16".into(),
            actual: "15".into(),
            passed: false,
        };
        assert_eq!(c.to_string(), "FAIL enumerate::count_pf(n=3): expected 16, got 15");
    }
}
