//! Exhaustive enumeration and the exact closed forms checked against it.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{binomial, determinant, factorial, int_pow, ratio, uint_to_rational, BinomialTable};
use crate::parking::ParkingFunction;
use crate::poly::Polynomial;
use crate::stats;

/// Largest `n` enumerated unless the caller raises the cap.
pub const DEFAULT_LIMIT: usize = 8;

fn check_limit(n: usize, limit: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    if n > limit {
        return Err(Error::Capacity { n, limit });
    }
    Ok(())
}

/// Nondecreasing sequences with `p_i <= i`: the sorted parking functions,
/// counted by the Catalan numbers.
pub fn sorted_profiles(n: usize) -> Vec<Vec<u32>> {
    fn extend(prefix: &mut Vec<u32>, n: usize, out: &mut Vec<Vec<u32>>) {
        let i = prefix.len();
        if i == n {
            out.push(prefix.clone());
            return;
        }
        let lo = prefix.last().copied().unwrap_or(1);
        for v in lo..=(i as u32 + 1) {
            prefix.push(v);
            extend(prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        extend(&mut Vec::with_capacity(n), n, &mut out);
    }
    out
}

/// Advances to the next permutation in lexicographic order; false after the
/// last one. Repeated values are handled, so each distinct arrangement of a
/// multiset appears once when started from sorted order.
pub fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Every parking function of size `n`, profile by profile.
#[derive(Debug, Clone)]
pub struct ParkingFunctions {
    profiles: std::vec::IntoIter<Vec<u32>>,
    current: Option<Vec<u32>>,
}

impl Iterator for ParkingFunctions {
    type Item = ParkingFunction;

    fn next(&mut self) -> Option<ParkingFunction> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        if !next_permutation(cur) {
            self.current = self.profiles.next();
        }
        Some(ParkingFunction::new_unchecked(out))
    }
}

pub fn enumerate_pf(n: usize) -> Result<ParkingFunctions> {
    enumerate_pf_with_limit(n, DEFAULT_LIMIT)
}

pub fn enumerate_pf_with_limit(n: usize, limit: usize) -> Result<ParkingFunctions> {
    check_limit(n, limit)?;
    let mut profiles = sorted_profiles(n).into_iter();
    let current = profiles.next();
    Ok(ParkingFunctions { profiles, current })
}

fn merge_counts<K: Ord>(mut a: BTreeMap<K, u64>, b: BTreeMap<K, u64>) -> BTreeMap<K, u64> {
    for (k, c) in b {
        *a.entry(k).or_insert(0) += c;
    }
    a
}

/// Exact histogram of `stat` over all of `PF_n`, split over profiles in
/// parallel. The result does not depend on the thread count.
pub fn pf_census<K, F>(n: usize, limit: usize, stat: F) -> Result<BTreeMap<K, u64>>
where
    K: Ord + Send,
    F: Fn(&[u32]) -> K + Sync,
{
    check_limit(n, limit)?;
    Ok(sorted_profiles(n)
        .into_par_iter()
        .map(|mut p| {
            let mut local = BTreeMap::new();
            loop {
                *local.entry(stat(&p)).or_insert(0) += 1;
                if !next_permutation(&mut p) {
                    break;
                }
            }
            local
        })
        .reduce(BTreeMap::new, merge_counts))
}

/// All functions `[n] -> [m]` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Functions {
    m: u32,
    current: Option<Vec<u32>>,
}

impl Functions {
    pub fn new(n: usize, m: u32) -> Self {
        let current = (n > 0 && m > 0).then(|| vec![1; n]);
        Functions { m, current }
    }
}

impl Iterator for Functions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.m {
                cur[i] += 1;
                break;
            }
            cur[i] = 1;
        }
        Some(out)
    }
}

/// Exact histogram of `stat` over all functions `[n] -> [m]`, split by the
/// first value in parallel.
pub fn function_census<K, F>(n: usize, m: u32, stat: F) -> BTreeMap<K, u64>
where
    K: Ord + Send,
    F: Fn(&[u32]) -> K + Sync,
{
    if n == 0 || m == 0 {
        return BTreeMap::new();
    }
    (1..=m)
        .into_par_iter()
        .map(|first| {
            let mut local = BTreeMap::new();
            let mut f = vec![1u32; n];
            f[0] = first;
            'outer: loop {
                *local.entry(stat(&f)).or_insert(0) += 1;
                let mut i = n;
                loop {
                    i -= 1;
                    if i == 0 {
                        break 'outer;
                    }
                    if f[i] < m {
                        f[i] += 1;
                        break;
                    }
                    f[i] = 1;
                }
            }
            local
        })
        .reduce(BTreeMap::new, merge_counts)
}

/// `(n + 1)^(n - 1)`.
pub fn count_pf(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    num_traits::pow(BigUint::from(n + 1), n - 1)
}

/// Number of parking functions of size `n` with first value `k`.
pub fn count_first(n: usize, k: usize) -> Result<BigUint> {
    if k < 1 || k > n {
        return Err(Error::Domain(format!("need 1 <= k <= n, got k={k}, n={n}")));
    }
    let table = BinomialTable::new(n);
    let mut total = BigRational::zero();
    for s in 0..=(n - k) {
        total += uint_to_rational(&table.get(n - 1, s))
            * int_pow(s as i64 + 1, s as i64 - 1)
            * int_pow((n - s) as i64, (n - s) as i64 - 2);
    }
    debug_assert!(total.is_integer());
    Ok(total.to_integer().to_biguint().expect("count is nonnegative"))
}

/// Both sides of Abel's identity
/// `sum_a C(n,a) (x+a)^(a-1) (y+n-a)^(n-a-1) = (1/x + 1/y)(x+y+n)^(n-1)`.
pub fn abel_identity_check(
    x: &BigRational,
    y: &BigRational,
    n: usize,
) -> Result<(BigRational, BigRational)> {
    if n == 0 {
        return Err(Error::Domain("Abel identity needs n >= 1".into()));
    }
    if x.is_zero() || y.is_zero() {
        return Err(Error::Domain("x and y must be nonzero".into()));
    }
    let table = BinomialTable::new(n);
    let mut lhs = BigRational::zero();
    for a in 0..=n {
        let u = x + BigRational::from_integer(BigInt::from(a));
        let v = y + BigRational::from_integer(BigInt::from(n - a));
        let (eu, ev) = (a as i64 - 1, (n - a) as i64 - 1);
        if (u.is_zero() && eu < 0) || (v.is_zero() && ev < 0) {
            return Err(Error::Domain(format!("zero base with negative exponent at a={a}")));
        }
        lhs += uint_to_rational(&table.get(n, a))
            * crate::exact::rational_pow(&u, eu)
            * crate::exact::rational_pow(&v, ev);
    }
    let s = x + y + BigRational::from_integer(BigInt::from(n));
    let rhs = (x.recip() + y.recip()) * crate::exact::rational_pow(&s, n as i64 - 1);
    Ok((lhs, rhs))
}

/// Exact `E(pi_1)` over `PF_n`.
pub fn exact_mean_first(n: usize) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    // T = sum_{k=0}^{n-2} (n+1)^k (n-1)!/k!, an integer
    let mut t = BigUint::zero();
    let mut falling = BigUint::one(); // (n-1)!/k!, built from k = n-1 down
    let mut k = n - 1;
    while k > 0 {
        falling *= k;
        k -= 1;
        t += num_traits::pow(BigUint::from(n + 1), k) * &falling;
    }
    let half = ratio(1, 2);
    let n_r = BigRational::from_integer(BigInt::from(n));
    let denom = BigInt::from(2) * BigInt::from(count_pf(n));
    Ok(&half + &half * n_r - BigRational::new(BigInt::from(t), denom))
}

/// Probability that the largest admissible first value is `k`.
pub fn k_pi_law(n: usize, k: usize) -> Result<BigRational> {
    if k < 1 || k > n {
        return Err(Error::Domain(format!("need 1 <= k <= n, got k={k}, n={n}")));
    }
    let (ki, ni) = (k as i64, n as i64);
    let num = BigRational::from_integer(BigInt::from(k))
        * uint_to_rational(&binomial(ni - 1, ki - 1))
        * int_pow(ki, ki - 2)
        * int_pow(ni - ki + 1, ni - ki - 1);
    Ok(num / uint_to_rational(&count_pf(n)))
}

/// Statistics with a known generating function over `PF_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GfStatistic {
    Repeats,
    Lucky,
    Ones,
}

impl GfStatistic {
    pub const ALL: [GfStatistic; 3] = [GfStatistic::Repeats, GfStatistic::Lucky, GfStatistic::Ones];

    pub fn name(self) -> &'static str {
        match self {
            GfStatistic::Repeats => "repeats",
            GfStatistic::Lucky => "lucky",
            GfStatistic::Ones => "ones",
        }
    }

    fn eval(self, values: &[u32]) -> usize {
        match self {
            GfStatistic::Repeats => stats::repeats(values),
            GfStatistic::Lucky => {
                stats::lucky(&ParkingFunction::new_unchecked(values.to_vec()))
            }
            GfStatistic::Ones => stats::ones(values),
        }
    }
}

impl fmt::Display for GfStatistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GfStatistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GfStatistic::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::UnknownStatistic(s.to_string()))
    }
}

/// `sum over PF_n of q^stat`, by enumeration.
pub fn gf_statistic(n: usize, statistic: GfStatistic) -> Result<Polynomial> {
    gf_statistic_with_limit(n, statistic, DEFAULT_LIMIT)
}

pub fn gf_statistic_with_limit(n: usize, statistic: GfStatistic, limit: usize) -> Result<Polynomial> {
    let census = pf_census(n, limit, |v| statistic.eval(v))?;
    Ok(Polynomial::from_counts(census))
}

/// The product formula for the same generating function.
pub fn gf_closed_form(n: usize, statistic: GfStatistic) -> Polynomial {
    let n_int = n as i64;
    match statistic {
        GfStatistic::Repeats => Polynomial::linear(n_int, 1).pow(n as u32 - 1),
        GfStatistic::Lucky => (1..n as i64).fold(Polynomial::q(), |acc, i| {
            acc * Polynomial::linear(i, n_int - i + 1)
        }),
        GfStatistic::Ones => Polynomial::q() * Polynomial::linear(n_int, 1).pow(n as u32 - 1),
    }
}

/// Probability that a uniform `f: [n] -> [n+1]` has descent set given by
/// `pattern` (`pattern[i-1]` true iff `f_i > f_{i+1}`).
pub fn descent_pattern_prob(n: usize, pattern: &[bool]) -> Result<BigRational> {
    Ok(BigRational::new(
        descent_pattern_count(n, pattern)?,
        BigInt::from(n + 1).pow(n as u32),
    ))
}

/// Number of `f: [n] -> [n+1]` with the given descent pattern, as a
/// determinant of binomials.
pub fn descent_pattern_count(n: usize, pattern: &[bool]) -> Result<BigInt> {
    if n == 0 || pattern.len() != n - 1 {
        return Err(Error::Domain(format!(
            "pattern must have length n-1 = {}, got {}",
            n.saturating_sub(1),
            pattern.len()
        )));
    }
    let mut s = vec![0i64];
    s.extend(pattern.iter().enumerate().filter(|(_, &d)| d).map(|(i, _)| i as i64 + 1));
    s.push(n as i64);
    let size = s.len() - 1;
    let ni = n as i64;
    let matrix = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| BigInt::from(binomial(s[j + 1] - s[i] + ni, ni)))
                .collect()
        })
        .collect();
    Ok(determinant(matrix))
}

/// `P(X_i = 1 for all i in A)` for descent indicators of a uniform
/// `f: [n] -> [n+1]`. Positions are 1-based in `[n-1]`.
pub fn kpoint_correlation(n: usize, positions: &[usize]) -> Result<BigRational> {
    let mut a: Vec<usize> = positions.to_vec();
    a.sort_unstable();
    a.dedup();
    if let Some(&bad) = a.iter().find(|&&p| p == 0 || p + 1 > n) {
        return Err(Error::Domain(format!("position {bad} not in [1, {}]", n.saturating_sub(1))));
    }
    let mut prob = BigRational::one();
    let mut i = 0;
    while i < a.len() {
        let mut j = i;
        while j + 1 < a.len() && a[j + 1] == a[j] + 1 {
            j += 1;
        }
        prob *= run_probability(n, j - i + 1);
        i = j + 1;
    }
    Ok(prob)
}

/// Probability that `j` consecutive descent indicators are all 1:
/// `C(n+1, j+1) / (n+1)^(j+1)`.
pub fn run_probability(n: usize, j: usize) -> BigRational {
    BigRational::new(
        BigInt::from(binomial(n as i64 + 1, j as i64 + 1)),
        BigInt::from(n + 1).pow(j as u32 + 1),
    )
}

fn falling(b: usize, k: usize) -> BigInt {
    if k > b {
        return BigInt::zero();
    }
    ((b - k + 1)..=b).fold(BigInt::one(), |acc, i| acc * i)
}

/// Moments of the species counts `mu_r` (values hit exactly `r` times) for
/// `b` balls in `B` boxes. `None` gives `E(mu_r)`, `Some(r)` gives
/// `E(mu_r^2)`, and `Some(t)` with `t != r` gives `E(mu_r mu_t)`.
pub fn species_moment(b: usize, boxes: usize, r: usize, t: Option<usize>) -> Result<BigRational> {
    if boxes == 0 {
        return Err(Error::Domain("need at least one box".into()));
    }
    if r > b || t.is_some_and(|t| t > b) {
        return Err(Error::Domain(format!("indices must be at most b = {b}")));
    }
    let big_b = BigRational::from_integer(BigInt::from(boxes));
    let one = BigRational::one();
    let bi = b as i64;
    let mean = |r: usize| {
        &big_b
            * uint_to_rational(&binomial(bi, r as i64))
            * crate::exact::rational_pow(&big_b, -(r as i64))
            * crate::exact::rational_pow(&(&one - big_b.recip()), bi - r as i64)
    };
    // B(B-1) b^[r+t] / (r! t! B^(r+t)) (1-2/B)^(b-r-t)
    let pair = |r: usize, t: usize| {
        if r + t > b {
            return BigRational::zero();
        }
        let two_over = ratio(2, boxes as i64);
        BigRational::from_integer(BigInt::from(boxes) * BigInt::from(boxes as i64 - 1))
            * BigRational::new(
                falling(b, r + t),
                BigInt::from(factorial(r as u64) * factorial(t as u64)),
            )
            * crate::exact::rational_pow(&big_b, -((r + t) as i64))
            * crate::exact::rational_pow(&(&one - two_over), bi - (r + t) as i64)
    };
    Ok(match t {
        None => mean(r),
        Some(t) if t == r => mean(r) + pair(r, r),
        Some(t) => pair(r, t),
    })
}

/// Probability that `b` balls in `B` boxes have exactly `m[r]` boxes holding
/// `r` balls for each `r`. Zero unless `sum m_r = B` and `sum r m_r = b`.
pub fn species_joint_prob(b: usize, boxes: usize, m: &[usize]) -> BigRational {
    let total: usize = m.iter().sum();
    let balls: usize = m.iter().enumerate().map(|(r, &c)| r * c).sum();
    if boxes == 0 || total != boxes || balls != b {
        return BigRational::zero();
    }
    let mut denom = BigUint::from(boxes).pow(b as u32);
    for (r, &c) in m.iter().enumerate() {
        denom *= factorial(r as u64).pow(c as u32) * factorial(c as u64);
    }
    BigRational::new(
        BigInt::from(factorial(boxes as u64) * factorial(b as u64)),
        BigInt::from(denom),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parking::is_parking_function;

    fn q(a: i64, b: i64) -> BigRational {
        ratio(a, b)
    }

    #[test]
    fn enumerates_n3() {
        let all: Vec<Vec<u32>> = enumerate_pf(3).unwrap().map(|p| p.into_values()).collect();
        assert_eq!(all.len(), 16);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 16);
        assert!(all.iter().all(|v| is_parking_function(v)));
        let ones: Vec<Vec<u32>> = enumerate_pf(1).unwrap().map(|p| p.into_values()).collect();
        assert_eq!(ones, vec![vec![1]]);
    }

    #[test]
    fn capacity_guard() {
        assert_eq!(
            enumerate_pf(9).unwrap_err(),
            Error::Capacity { n: 9, limit: 8 }
        );
        assert!(enumerate_pf_with_limit(9, 9).is_ok());
    }

    #[test]
    fn counts_small() {
        assert_eq!(count_pf(3), BigUint::from(16u32));
        assert_eq!(count_pf(1), BigUint::from(1u32));
        for n in 1..=6 {
            assert_eq!(
                BigUint::from(enumerate_pf(n).unwrap().count()),
                count_pf(n)
            );
        }
    }

    #[test]
    fn first_coordinate_counts() {
        let got: Vec<BigUint> = (1..=3).map(|k| count_first(3, k).unwrap()).collect();
        assert_eq!(got, vec![8u32.into(), 5u32.into(), 3u32.into()]);
        assert!(count_first(3, 0).is_err());
        assert!(count_first(3, 4).is_err());
    }

    #[test]
    fn abel_examples() {
        let one = q(1, 1);
        let (l, r) = abel_identity_check(&one, &one, 2).unwrap();
        assert_eq!(l, q(8, 1));
        assert_eq!(r, q(8, 1));
        assert!(abel_identity_check(&one, &one, 0).is_err());
        let (l, r) = abel_identity_check(&q(2, 3), &q(-5, 7), 6).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn mean_first_examples() {
        assert_eq!(exact_mean_first(3).unwrap(), q(27, 16));
        assert_eq!(exact_mean_first(1).unwrap(), q(1, 1));
    }

    #[test]
    fn k_law_sums_to_one() {
        for n in 1..=7 {
            let s: BigRational = (1..=n).map(|k| k_pi_law(n, k).unwrap()).sum();
            assert_eq!(s, BigRational::one());
        }
    }

    #[test]
    fn gf_examples() {
        assert_eq!(
            gf_statistic(2, GfStatistic::Lucky).unwrap(),
            Polynomial::new(vec![0.into(), 1.into(), 2.into()])
        );
        assert_eq!(
            gf_statistic(3, GfStatistic::Ones).unwrap(),
            Polynomial::new(vec![0.into(), 9.into(), 6.into(), 1.into()])
        );
        assert_eq!(
            gf_statistic(3, GfStatistic::Repeats).unwrap(),
            Polynomial::linear(3, 1).pow(2)
        );
        assert!("area".parse::<GfStatistic>().is_err());
    }

    #[test]
    fn descent_examples() {
        assert_eq!(descent_pattern_prob(2, &[false]).unwrap(), q(2, 3));
        assert_eq!(descent_pattern_prob(2, &[true]).unwrap(), q(1, 3));
        assert!(descent_pattern_prob(3, &[true]).is_err());
        for n in 1..=6usize {
            let total: BigRational = (0..1u32 << (n - 1))
                .map(|mask| {
                    let pat: Vec<bool> = (0..n - 1).map(|i| mask >> i & 1 == 1).collect();
                    descent_pattern_prob(n, &pat).unwrap()
                })
                .sum();
            assert_eq!(total, BigRational::one());
        }
    }

    #[test]
    fn correlation_examples() {
        for n in 2..=9i64 {
            let p = kpoint_correlation(n as usize, &[1]).unwrap();
            assert_eq!(p, q(1, 2) - q(1, 2 * (n + 1)));
        }
        assert!(kpoint_correlation(3, &[3]).is_err());
        assert_eq!(kpoint_correlation(4, &[]).unwrap(), BigRational::one());
    }

    #[test]
    fn species_examples() {
        assert_eq!(species_moment(2, 3, 1, None).unwrap(), q(4, 3));
        assert_eq!(species_moment(2, 3, 0, None).unwrap(), q(3, 1) * q(4, 9));
        assert_eq!(species_joint_prob(2, 3, &[1, 2, 0]), q(2, 3));
        assert_eq!(species_joint_prob(2, 3, &[1, 1, 0]), BigRational::zero());
    }

    #[test]
    fn species_moments_match_brute_force() {
        for boxes in 1..=4usize {
            for b in 0..=4usize {
                let mut funcs: Vec<Vec<u32>> = Functions::new(b, boxes as u32).collect();
                if b == 0 {
                    funcs = vec![vec![]];
                }
                let total = BigRational::from_integer(BigInt::from(funcs.len()));
                let mus: Vec<Vec<usize>> = funcs
                    .iter()
                    .map(|f| {
                        let mut hits = vec![0usize; boxes];
                        for &v in f {
                            hits[v as usize - 1] += 1;
                        }
                        let mut mu = vec![0usize; b + 1];
                        for h in hits {
                            mu[h] += 1;
                        }
                        mu
                    })
                    .collect();
                for r in 0..=b {
                    let e: usize = mus.iter().map(|m| m[r]).sum();
                    let want = BigRational::from_integer(e.into()) / &total;
                    assert_eq!(species_moment(b, boxes, r, None).unwrap(), want);
                    for t in 0..=b {
                        let e: usize = mus.iter().map(|m| m[r] * m[t]).sum();
                        let want = BigRational::from_integer(e.into()) / &total;
                        assert_eq!(
                            species_moment(b, boxes, r, Some(t)).unwrap(),
                            want,
                            "b={b} B={boxes} r={r} t={t}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn function_iteration() {
        let all: Vec<Vec<u32>> = Functions::new(2, 3).collect();
        assert_eq!(all.len(), 9);
        assert_eq!(all[0], vec![1, 1]);
        assert_eq!(all[8], vec![3, 3]);
        let census = function_census(3, 4, |f| f[0]);
        assert_eq!(census.values().copied().collect::<Vec<_>>(), vec![16; 4]);
    }

    #[test]
    fn permutations_of_multiset() {
        let mut v = vec![1, 1, 2];
        let mut seen = vec![v.clone()];
        while next_permutation(&mut v) {
            seen.push(v.clone());
        }
        assert_eq!(seen, vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
    }
}
