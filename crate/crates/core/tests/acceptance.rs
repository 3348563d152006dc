//! Acceptance criteria. Each check prints a `PASS`/`FAIL` line with the
//! tolerance it was held to. Oracles are computed here from scratch (brute
//! force or direct formulas), not through the code under test. Runs without
//! the libtest harness so every line is printed; exits 1 if any check fails.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive};

use parking_core::ensemble::{
    exact_equidistribution, joint_coordinate_bound_check, ks_distance_to_limit, run_experiment,
    tv_distance, weak_peak_check, Constraint, ExperimentConfig, Feature, StatValue, Statistic,
};
use parking_core::enumerate::{self, pf_census, GfStatistic};
use parking_core::limits::quad::{integrate, integrate_to_infinity};
use parking_core::limits::{
    airy_area_density, airy_zeros, borel_identity, borel_pmf, borel_total_mass, Limit,
};
use parking_core::sample::{apply_shift, find_valid_shift};
use parking_core::stats::{Chain, ChainPoset, Relation};
use parking_core::{Ensemble, Polynomial, PrefSequence};

fn verdict(id: &str, what: &str, pass: bool, detail: impl AsRef<str>) -> bool {
    println!("{} {id}: {what} [{}]", if pass { "PASS" } else { "FAIL" }, detail.as_ref());
    pass
}

fn q(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn pow_rational(base: i64, exp: i64) -> BigRational {
    let b = BigRational::from_integer(BigInt::from(base));
    if exp >= 0 {
        Pow::pow(b, exp as u32)
    } else {
        Pow::pow(b.recip(), (-exp) as u32)
    }
}

/// All sequences in `[m]^n` (odometer), independent of the library iterator.
fn all_sequences(n: usize, m: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut v = vec![1u32; n];
    loop {
        out.push(v.clone());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if v[i] < m {
                v[i] += 1;
                break;
            }
            v[i] = 1;
        }
    }
}

fn sorted_test(v: &[u32]) -> bool {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.iter().enumerate().all(|(i, &x)| x as usize <= i + 1)
}

fn brute_pfs(n: usize) -> Vec<Vec<u32>> {
    all_sequences(n, n as u32).into_iter().filter(|v| sorted_test(v)).collect()
}

fn c01_counting() -> bool {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = Vec::new();
    for n in 1..=8usize {
        let counted = enumerate::enumerate_pf(n).unwrap().count() as u64;
        let formula = (n as u64 + 1).pow(n as u32 - 1);
        ok &= counted == formula;
        detail.push(format!("n={n}:{counted}"));
    }
    ok &= enumerate::enumerate_pf(8).unwrap().count() == 4_782_969;
    let secs = start.elapsed().as_secs_f64();
    ok &= secs < 60.0;
    verdict("C1", "|PF_n| = (n+1)^(n-1), n=1..8, exact, under 60 s", ok, format!("{} in {secs:.2}s", detail.join(" ")))
}

fn c02_first_coordinate_counts() -> bool {
    let mut ok = true;
    for n in 1..=8usize {
        let census = pf_census(n, 8, |v| v[0]).unwrap();
        for k in 1..=n {
            let brute = BigUint::from(census.get(&(k as u32)).copied().unwrap_or(0));
            ok &= enumerate::count_first(n, k).unwrap() == brute;
        }
    }
    // Independent full brute force at small n.
    for n in 1..=6usize {
        let mut tally = vec![0u64; n + 1];
        for v in brute_pfs(n) {
            tally[v[0] as usize] += 1;
        }
        for k in 1..=n {
            ok &= enumerate::count_first(n, k).unwrap() == BigUint::from(tally[k]);
        }
    }
    let mut formula_ok = true;
    for n in 1..=12usize {
        let first = BigRational::from_integer(enumerate::count_first(n, 1).unwrap().into());
        let last = BigRational::from_integer(enumerate::count_first(n, n).unwrap().into());
        formula_ok &= first == q(2, 1) * pow_rational(n as i64 + 1, n as i64 - 2);
        formula_ok &= last == pow_rational(n as i64, n as i64 - 2);
    }
    verdict(
        "C2",
        "count_first = census for n<=8; closed forms at k=1 and k=n for n<=12, exact",
        ok && formula_ok,
        format!("census {ok}, closed forms {formula_ok}"),
    )
}

fn c03_abel_identity() -> bool {
    let one = BigRational::one();
    let mut ok = true;
    for n in 1..=10 {
        let (lhs, rhs) = enumerate::abel_identity_check(&one, &one, n).unwrap();
        ok &= lhs == rhs;
    }
    verdict("C3", "Abel identity at x=y=1, n=1..10, exact rational equality", ok, "10 cases")
}

fn c04_exact_mean() -> bool {
    let mut ok = true;
    for n in 1..=8usize {
        let census = pf_census(n, 8, |v| v[0]).unwrap();
        let total: u64 = census.values().sum();
        let weighted: u64 = census.iter().map(|(&k, &c)| k as u64 * c).sum();
        ok &= enumerate::exact_mean_first(n).unwrap() == q(weighted, total);
    }
    let c = (2.0 * std::f64::consts::PI).sqrt() / 4.0;
    let gaps: Vec<f64> = [100usize, 400, 1600]
        .iter()
        .map(|&n| {
            let mean = enumerate::exact_mean_first(n).unwrap();
            let nf = n as f64;
            let m = ratio_f64(&mean);
            (m - (nf / 2.0 - c * nf.sqrt())).abs() / nf.sqrt()
        })
        .collect();
    let decreasing = gaps.windows(2).all(|w| w[1] < w[0]);
    verdict(
        "C4",
        "exact_mean_first = brute mean n<=8; scaled gap decreasing on n=100,400,1600",
        ok && decreasing,
        format!("brute {ok}, gaps {gaps:.6?}"),
    )
}

fn ratio_f64(r: &BigRational) -> f64 {
    let shift = r.denom().bits().min(r.numer().bits()).saturating_sub(900);
    let n = (r.numer() >> shift).to_f64().unwrap();
    let d = (r.denom() >> shift).to_f64().unwrap();
    n / d
}

fn c05_generating_functions() -> bool {
    let mut ok = true;
    for n in 1..=7usize {
        let ni = BigInt::from(n);
        let repeats = Polynomial::linear(ni.clone(), BigInt::one()).pow(n as u32 - 1);
        let ones = &Polynomial::q() * &repeats;
        let mut lucky = Polynomial::q();
        for i in 1..n {
            lucky = lucky * Polynomial::linear(BigInt::from(i), BigInt::from(n - i + 1));
        }
        ok &= enumerate::gf_statistic(n, GfStatistic::Repeats).unwrap() == repeats;
        ok &= enumerate::gf_statistic(n, GfStatistic::Lucky).unwrap() == lucky;
        ok &= enumerate::gf_statistic(n, GfStatistic::Ones).unwrap() == ones;
    }
    verdict("C5", "repeats, lucky, ones generating functions, n<=7, exact polynomials", ok, "21 identities")
}

fn chain(n: usize, positions: Vec<usize>, rel: Relation) -> Feature {
    Feature::ChainPoset(ChainPoset::chain(n, positions, rel).unwrap())
}

fn c06_equidistribution() -> bool {
    let mut ok = true;
    let mut checked = 0;
    for n in 1..=6usize {
        let mut features = vec![
            Feature::DescentPattern,
            Feature::EqualityPattern,
            Feature::WeakDescentPattern,
            Feature::Species,
            Feature::Inversions,
            Feature::LongestRun(Relation::Lt),
            Feature::LongestRun(Relation::Le),
            Feature::LongestRun(Relation::Gt),
            Feature::LongestRun(Relation::Ge),
            Feature::LongestRun(Relation::Eq),
        ];
        for rel in [Relation::Lt, Relation::Le, Relation::Gt, Relation::Ge, Relation::Eq] {
            if n >= 2 {
                features.push(chain(n, (1..=n).collect(), rel));
            }
            if n >= 4 {
                features.push(chain(n, vec![4, 1, 3], rel));
            }
        }
        if n >= 5 {
            let p = ChainPoset::new(
                n,
                vec![
                    Chain { positions: vec![1, 4], relation: Relation::Le },
                    Chain { positions: vec![5, 2, 3], relation: Relation::Gt },
                ],
            )
            .unwrap();
            features.push(Feature::ChainPoset(p));
        }
        for f in &features {
            let r = exact_equidistribution(n, f).unwrap();
            if !r.equal {
                println!("  unexpected inequality: n={n} {f} {:?}", r.witness);
            }
            ok &= r.equal;
            checked += 1;
        }
        for i in 2..n {
            ok &= weak_peak_check(n, i).unwrap().equal;
            checked += 1;
        }
    }

    let controls = [
        (
            "strict peak f1<f2>f3",
            Feature::Constraints(vec![
                Constraint::new(1, Relation::Lt, 2),
                Constraint::new(2, Relation::Gt, 3),
            ]),
        ),
        (
            "mixed chain f1<f2<=f3",
            Feature::Constraints(vec![
                Constraint::new(1, Relation::Lt, 2),
                Constraint::new(2, Relation::Le, 3),
            ]),
        ),
        (
            "shared chains f1<f2, f1<f3",
            Feature::Constraints(vec![
                Constraint::new(1, Relation::Lt, 2),
                Constraint::new(1, Relation::Lt, 3),
            ]),
        ),
    ];
    let mut controls_ok = true;
    let mut notes = Vec::new();
    for (name, feature) in &controls {
        let hit = (3..=5).find(|&n| !exact_equidistribution(n, feature).unwrap().equal);
        controls_ok &= hit.is_some();
        notes.push(format!("{name}: unequal at n={hit:?}"));
    }
    verdict(
        "C6",
        "equidistribution exact for n<=6; negative controls unequal for some n<=5",
        ok && controls_ok,
        format!("{checked} positive cases; {}", notes.join("; ")),
    )
}

fn c07_descent_formulas() -> bool {
    let mut ok = true;
    for n in 1..=6usize {
        let m = n as u32 + 1;
        let fns = all_sequences(n, m);
        let space = BigInt::from(m).pow(n as u32);
        let mut census: BTreeMap<Vec<bool>, u64> = BTreeMap::new();
        for f in &fns {
            let pat: Vec<bool> = f.windows(2).map(|w| w[0] > w[1]).collect();
            *census.entry(pat).or_insert(0) += 1;
        }
        for bits in 0u32..(1 << (n - 1)) {
            let pat: Vec<bool> = (0..n - 1).map(|i| bits >> i & 1 == 1).collect();
            let brute = census.get(&pat).copied().unwrap_or(0);
            ok &= enumerate::descent_pattern_prob(n, &pat).unwrap() == q(brute, space.clone());
            let positions: Vec<usize> = (0..n - 1).filter(|&i| pat[i]).map(|i| i + 1).collect();
            let hits: u64 = census
                .iter()
                .filter(|(p, _)| positions.iter().all(|&i| p[i - 1]))
                .map(|(_, &c)| c)
                .sum();
            ok &= enumerate::kpoint_correlation(n, &positions).unwrap() == q(hits, space.clone());
        }
        for j in 1..n {
            let hits = fns.iter().filter(|f| f[..=j].windows(2).all(|w| w[0] > w[1])).count() as u64;
            ok &= enumerate::run_probability(n, j) == q(hits, space.clone());
            let printed = {
                let mut c = BigInt::one();
                for t in 0..=j as u64 {
                    c = c * BigInt::from(n as u64 + 1 - t) / BigInt::from(t + 1);
                }
                q(c, BigInt::from(n + 1).pow(j as u32 + 1))
            };
            ok &= enumerate::run_probability(n, j) == printed;
        }
    }
    let mut closed = true;
    for n in 2..=20usize {
        let single = enumerate::kpoint_correlation(n, &[1]).unwrap();
        closed &= single == q(1, 2) - q(1, 2 * (n as i64 + 1));
        if n >= 3 {
            let cov = enumerate::kpoint_correlation(n, &[1, 2]).unwrap() - &single * &single;
            closed &= cov == -q(1, 12) * (BigRational::one() - pow_rational(n as i64 + 1, -2));
        }
    }
    verdict(
        "C7",
        "determinant, k-point, run formulas = brute force on [n]->[n+1], n<=6; descent closed forms exact",
        ok && closed,
        format!("brute {ok}, closed forms {closed}"),
    )
}

fn c08_kpi_law() -> bool {
    let mut ok = true;
    for n in 1..=6usize {
        let pfs = brute_pfs(n);
        let total = pfs.len() as u64;
        let mut tally = vec![0u64; n + 1];
        for v in &pfs {
            let k = (1..=n as u32)
                .filter(|&k| {
                    let mut w = v.clone();
                    w[0] = k;
                    sorted_test(&w)
                })
                .max()
                .unwrap();
            tally[k as usize] += 1;
        }
        for k in 1..=n {
            ok &= enumerate::k_pi_law(n, k).unwrap() == q(tally[k], total);
        }
    }
    let mut sums = true;
    for n in 1..=7usize {
        let s: BigRational = (1..=n).map(|k| enumerate::k_pi_law(n, k).unwrap()).sum();
        sums &= s.is_one();
    }
    verdict("C8", "K law = brute force for n<=6; sums to 1 for n<=7, exact", ok && sums, format!("law {ok}, sums {sums}"))
}

fn c09_sampler_exactness() -> bool {
    let mut fibres = true;
    for n in 1..=3usize {
        let mut hits: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        for raw in all_sequences(n, n as u32 + 1) {
            let k = find_valid_shift(&PrefSequence::new(raw.clone(), n as u32 + 1).unwrap());
            *hits.entry(apply_shift(&raw, k)).or_insert(0) += 1;
        }
        let pfs = brute_pfs(n);
        fibres &= hits.len() == pfs.len();
        fibres &= pfs.iter().all(|p| hits.get(p) == Some(&(n as u64 + 1)));
    }
    let mut unique = true;
    for n in 1..=5usize {
        let m = n as u32 + 1;
        for raw in all_sequences(n, m) {
            // Shift on Z/(n+1) with representatives 1..=n+1.
            let valid = (0..m)
                .filter(|&k| {
                    let w: Vec<u32> = raw.iter().map(|&x| (x - 1 + k) % m + 1).collect();
                    w.iter().all(|&x| x <= n as u32) && sorted_test(&w)
                })
                .count();
            unique &= valid == 1;
        }
    }
    verdict(
        "C9",
        "shift map hits each PF n+1 times (n<=3); exactly one valid shift per draw (n<=5)",
        fibres && unique,
        format!("fibres {fibres}, unique {unique}"),
    )
}

fn c10a_borel_mass() -> bool {
    // Direct head, then the tail sum of (2 pi)^(-1/2) j^(-3/2) (1 - 1/(12j))
    // by the midpoint rule, error O(J^(-5/2)).
    let big_j = 1_000_000u64;
    let mut head = 0.0f64;
    let mut comp = 0.0f64;
    for j in 1..=big_j {
        let y = borel_pmf(j) - comp;
        let t = head + y;
        comp = (t - head) - y;
        head = t;
    }
    let a = big_j as f64 + 0.5;
    let tail = (2.0 * std::f64::consts::PI).powf(-0.5) * (2.0 / a.sqrt() - 1.0 / 12.0 * (2.0 / 3.0) / a.powf(1.5));
    let total = head + tail;
    let lib = borel_total_mass();
    let ok = (total - 1.0).abs() <= 1e-9 && (lib - 1.0).abs() <= 1e-9;
    verdict("C10", "Borel pmf sums to 1 +- 1e-9", ok, format!("head+tail {total:.12}, library {lib:.12}"))
}

fn c10b_borel_identity() -> bool {
    let mut worst = 0.0f64;
    for i in 1..=10 {
        let x = i as f64 / 10.0;
        worst = worst.max((borel_identity(x).unwrap() - 1.0).abs());
    }
    verdict("C10", "borel_identity(x) = 1 +- 1e-8, x = 0.1..1.0", worst <= 1e-8, format!("max error {worst:.2e}"))
}

fn c10c_maxwell_mass() -> bool {
    let mut worst = 0.0f64;
    for x in [0.1, 0.5, 0.9] {
        let law = Limit::Maxwell { x };
        let mass = integrate_to_infinity(|y| law.density(y), 0.0, 1e-14, 1e-14).value;
        worst = worst.max((mass - 1.0).abs());
    }
    verdict("C10", "Maxwell density integrates to 1 +- 1e-10, x in {0.1,0.5,0.9}", worst <= 1e-10, format!("max error {worst:.2e}"))
}

fn c10d_airy_density() -> bool {
    let f = |y: f64| if y <= 0.0 { 0.0 } else { airy_area_density(y).unwrap_or(0.0) };
    let mass = integrate(f, 0.0, 4.0, 1e-12, 1e-10).value;
    let mean = integrate(|y| y * f(y), 0.0, 4.0, 1e-12, 1e-10).value;
    let target = (std::f64::consts::PI / 8.0).sqrt();
    let ok = (mass - 1.0).abs() <= 1e-3 && (mean - target).abs() <= 1e-3;
    verdict(
        "C10",
        "Airy density mass 1 +- 1e-3, mean sqrt(pi/8) +- 1e-3",
        ok,
        format!("mass {mass:.8}, mean {mean:.8} vs {target:.8}"),
    )
}

fn c10e_excursion_max_mean() -> bool {
    let law = Limit::ExcursionMax;
    let mean = integrate_to_infinity(|t| 1.0 - law.cdf(t), 0.0, 1e-12, 1e-12).value;
    let target = (std::f64::consts::PI / 2.0).sqrt();
    let ok = (mean - target).abs() <= 1e-3;
    verdict("C10", "E(M) by CDF quadrature = sqrt(pi/2) +- 1e-3", ok, format!("{mean:.10} vs {target:.10}"))
}

fn c10f_airy_zeros() -> bool {
    let printed = [-2.3381, -4.0879, -5.5204];
    let zeros = airy_zeros(3).unwrap();
    let mut ok = true;
    let mut detail = Vec::new();
    for (z, p) in zeros.iter().zip(printed) {
        let rounded = (z * 1e4).round() / 1e4;
        let hit = (rounded - p).abs() < 1e-9;
        ok &= hit;
        detail.push(format!("{z:.8} -> {rounded:.4} vs {p:.4} {}", if hit { "ok" } else { "mismatch" }));
    }
    verdict("C10", "first three zeros of Ai equal -2.3381, -4.0879, -5.5204 to 4 decimals", ok, detail.join("; "))
}

const MC_SAMPLES: u64 = 20_000;
const MC_SEED: u64 = 20_240_601;

fn experiment(n: usize, statistic: Statistic) -> parking_core::ensemble::Histogram {
    run_experiment(&ExperimentConfig::new(n, MC_SAMPLES, MC_SEED, Ensemble::Pf, statistic).unwrap()).unwrap()
}

fn c11a_scaled_area_mean() -> bool {
    let target = (2.0 * std::f64::consts::PI).sqrt() / 4.0;
    let mut ok = true;
    let mut detail = Vec::new();
    for n in [100usize, 200] {
        let s = experiment(n, Statistic::ScaledArea).summaries().unwrap();
        let se = (s.var / MC_SAMPLES as f64).sqrt();
        let z = (s.mean - target) / se;
        ok &= z.abs() <= 3.0;
        detail.push(format!("n={n}: mean {:.4}, SE {se:.4}, z {z:.1}", s.mean));
    }
    verdict("C11", "scaled-area mean within 3 SE of sqrt(2 pi)/4", ok, detail.join("; "))
}

/// Companion to the limit check: the same samples against the exact mean at
/// finite n, from E(area) = n(n+1)/2 - n E(pi1).
fn c11a_scaled_area_exact_mean() -> bool {
    let mut ok = true;
    let mut detail = Vec::new();
    for n in [100usize, 200] {
        let nf = n as f64;
        let exact = (nf * (nf + 1.0) / 2.0 - nf * ratio_f64(&enumerate::exact_mean_first(n).unwrap()) - nf / 2.0) / nf.powf(1.5);
        let s = experiment(n, Statistic::ScaledArea).summaries().unwrap();
        let z = (s.mean - exact) / (s.var / MC_SAMPLES as f64).sqrt();
        ok &= z.abs() <= 3.0;
        detail.push(format!("n={n}: mean {:.4} vs exact {exact:.4}, z {z:.2}", s.mean));
    }
    verdict("C11", "scaled-area mean within 3 SE of the exact finite-n mean", ok, detail.join("; "))
}

fn c11b_first_coordinate_corners() -> bool {
    let mut ok = true;
    let mut detail = Vec::new();
    for n in [100usize, 200] {
        let h = experiment(n, Statistic::First);
        let nf = n as f64;
        let p1 = 2.0 / (nf + 1.0);
        let pn = ((nf - 2.0) * nf.ln() - (nf - 1.0) * (nf + 1.0).ln()).exp();
        for (label, k, p) in [("1", 1i64, p1), ("n", n as i64, pn)] {
            let hat = h.get(k) as f64 / MC_SAMPLES as f64;
            let se = (p * (1.0 - p) / MC_SAMPLES as f64).sqrt();
            let z = (hat - p) / se;
            ok &= z.abs() <= 3.0;
            detail.push(format!("n={n} pi1={label}: {hat:.5} vs {p:.5}, z {z:.2}"));
        }
    }
    verdict("C11", "P(pi1=1), P(pi1=n) within 3 SE", ok, detail.join("; "))
}

fn c11c_max_discrepancy_ks() -> bool {
    let h = experiment(200, Statistic::MaxDiscrepancy);
    let to_m = ks_distance_to_limit(&h, &Limit::ExcursionMax).unwrap();
    let to_bridge = ks_distance_to_limit(&h, &Limit::BridgeMax).unwrap();
    let close = verdict("C11", "n=200 max-discrepancy/sqrt n: KS to M < 0.05", to_m < 0.05, format!("KS to M {to_m:.4}"));
    let smaller = verdict(
        "C11",
        "n=200 max-discrepancy/sqrt n: KS to M < KS to bridge",
        to_m < to_bridge,
        format!("{to_m:.4} vs {to_bridge:.4}"),
    );
    close && smaller
}

fn c11d_repeats_tv() -> bool {
    let mut ok = true;
    let mut detail = Vec::new();
    let poisson: BTreeMap<StatValue, f64> = (0..=60u64)
        .map(|j| {
            let lp = -1.0 - parking_core::limits::special::ln_gamma(j as f64 + 1.0);
            (StatValue::Int(j as i64), lp.exp())
        })
        .collect();
    for n in [100usize, 200] {
        let h = experiment(n, Statistic::Repeats);
        let d = tv_distance(&h.pmf(), &poisson).unwrap();
        ok &= d < 0.02;
        detail.push(format!("n={n}: TV {d:.4}"));
    }
    verdict("C11", "repeats histogram TV to Poisson(1) < 0.02", ok, detail.join("; "))
}

fn c12_joint_coordinate_bound() -> bool {
    let mut ok = true;
    let mut detail = Vec::new();
    for n in 4..=6usize {
        for k in 1..=2usize {
            let r = joint_coordinate_bound_check(n, k).unwrap();
            ok &= r.holds;
            detail.push(format!("n={n} k={k}: {:.4} <= {:.4}", r.sup_difference, r.bound));
        }
    }
    verdict("C12", "joint coordinate bound on the full grid, exact", ok, detail.join("; "))
}

fn main() {
    let criteria: [(&str, fn() -> bool); 21] = [
        ("c01_counting", c01_counting),
        ("c02_first_coordinate_counts", c02_first_coordinate_counts),
        ("c03_abel_identity", c03_abel_identity),
        ("c04_exact_mean", c04_exact_mean),
        ("c05_generating_functions", c05_generating_functions),
        ("c06_equidistribution", c06_equidistribution),
        ("c07_descent_formulas", c07_descent_formulas),
        ("c08_kpi_law", c08_kpi_law),
        ("c09_sampler_exactness", c09_sampler_exactness),
        ("c10a_borel_mass", c10a_borel_mass),
        ("c10b_borel_identity", c10b_borel_identity),
        ("c10c_maxwell_mass", c10c_maxwell_mass),
        ("c10d_airy_density", c10d_airy_density),
        ("c10e_excursion_max_mean", c10e_excursion_max_mean),
        ("c10f_airy_zeros", c10f_airy_zeros),
        ("c11a_scaled_area_mean", c11a_scaled_area_mean),
        ("c11a_scaled_area_exact_mean", c11a_scaled_area_exact_mean),
        ("c11b_first_coordinate_corners", c11b_first_coordinate_corners),
        ("c11c_max_discrepancy_ks", c11c_max_discrepancy_ks),
        ("c11d_repeats_tv", c11d_repeats_tv),
        ("c12_joint_coordinate_bound", c12_joint_coordinate_bound),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        if !check() {
            failed.push(name);
        }
    }
    println!("{} criteria checked, {} failed {:?}", criteria.len(), failed.len(), failed);
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
