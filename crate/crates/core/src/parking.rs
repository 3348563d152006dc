//! Preference sequences, parking functions, the parking process and the
//! Dyck-path coding.
//!
//! All values are 1-based: car `i` prefers spot `values[i - 1]`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A sequence of preferences with values in `[1, bound]`.
///
/// `bound = n` gives an element of the all-functions ensemble, `bound = n + 1`
/// the extended ensemble in which parking functions are exactly one in `n + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrefSequence {
    values: Vec<u32>,
    bound: u32,
}

impl PrefSequence {
    pub fn new(values: Vec<u32>, bound: u32) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty);
        }
        check_range(&values, bound)?;
        Ok(PrefSequence { values, bound })
    }

    /// Uses the largest value (at least `n`) as the codomain bound.
    pub fn with_inferred_bound(values: Vec<u32>) -> Result<Self> {
        let bound = values.iter().copied().max().unwrap_or(0).max(values.len() as u32);
        Self::new(values, bound)
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn into_values(self) -> Vec<u32> {
        self.values
    }
}

impl AsRef<[u32]> for PrefSequence {
    fn as_ref(&self) -> &[u32] {
        &self.values
    }
}

fn check_range(values: &[u32], bound: u32) -> Result<()> {
    match values.iter().position(|&v| v == 0 || v > bound) {
        Some(i) => Err(Error::OutOfRange {
            position: i + 1,
            value: values[i],
            bound,
        }),
        None => Ok(()),
    }
}

/// A validated parking function. Construction always re-checks the
/// counting criterion, so every value of this type is a parking function.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ParkingFunction {
    values: Vec<u32>,
}

impl ParkingFunction {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty);
        }
        check_range(&values, values.len() as u32)?;
        if !is_parking_function(&values) {
            return Err(Error::NotParkingFunction(values));
        }
        Ok(ParkingFunction { values })
    }

    /// Caller guarantees validity (enumerators and the shift sampler).
    pub(crate) fn new_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(is_parking_function(&values), "{values:?}");
        ParkingFunction { values }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn into_values(self) -> Vec<u32> {
        self.values
    }

    pub fn to_prefs(&self) -> PrefSequence {
        PrefSequence {
            values: self.values.clone(),
            bound: self.values.len() as u32,
        }
    }

    /// Total of the preferences.
    pub fn sum(&self) -> u64 {
        self.values.iter().map(|&v| v as u64).sum()
    }
}

impl TryFrom<PrefSequence> for ParkingFunction {
    type Error = Error;

    fn try_from(seq: PrefSequence) -> Result<Self> {
        ParkingFunction::new(seq.values)
    }
}

impl AsRef<[u32]> for ParkingFunction {
    fn as_ref(&self) -> &[u32] {
        &self.values
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(f, &self.values)
    }
}

impl fmt::Display for PrefSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(f, &self.values)
    }
}

fn write_csv(f: &mut fmt::Formatter<'_>, values: &[u32]) -> fmt::Result {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

impl FromStr for ParkingFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Domain(format!("cannot parse `{s}` as a sequence")))?;
        ParkingFunction::new(values)
    }
}

/// `#{k : seq_k <= i} >= i` for every `1 <= i <= n`, and every value is at
/// most `n`. Linear time via occurrence counts.
pub fn is_parking_function(seq: &[u32]) -> bool {
    let n = seq.len();
    let mut counts = vec![0usize; n + 1];
    for &v in seq {
        let v = v as usize;
        if v == 0 || v > n {
            return false;
        }
        counts[v] += 1;
    }
    let mut running = 0;
    for (i, &c) in counts.iter().enumerate().skip(1) {
        running += c;
        if running < i {
            return false;
        }
    }
    true
}

/// Result of running the parking process.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParkOutcome {
    /// Spot taken by each car that parked, in car order.
    pub spots: Vec<u32>,
    /// 1-based index of the first car that found no spot.
    pub failed_at: Option<usize>,
    /// Per parked car: did it get its preferred spot.
    pub lucky: Vec<bool>,
    /// Total extra spaces driven by the parked cars.
    pub inconvenience: u64,
}

impl ParkOutcome {
    pub fn is_success(&self) -> bool {
        self.failed_at.is_none()
    }
}

/// Runs the cars in order: each takes the first free spot at or right of its
/// preference. Stops at the first car that cannot park.
pub fn park(seq: &[u32]) -> ParkOutcome {
    let n = seq.len();
    // next[s] points at a spot >= s that may be free; n + 1 is the sentinel.
    let mut next: Vec<u32> = (0..=n as u32 + 1).collect();
    let mut outcome = ParkOutcome {
        spots: Vec::with_capacity(n),
        failed_at: None,
        lucky: Vec::with_capacity(n),
        inconvenience: 0,
    };
    for (car, &pref) in seq.iter().enumerate() {
        if pref == 0 || pref as usize > n {
            outcome.failed_at = Some(car + 1);
            break;
        }
        let spot = find_free(&mut next, pref);
        if spot as usize > n {
            outcome.failed_at = Some(car + 1);
            break;
        }
        next[spot as usize] = spot + 1;
        outcome.spots.push(spot);
        outcome.lucky.push(spot == pref);
        outcome.inconvenience += (spot - pref) as u64;
    }
    outcome
}

fn find_free(next: &mut [u32], start: u32) -> u32 {
    let mut root = start;
    while next[root as usize] != root {
        root = next[root as usize];
    }
    let mut s = start;
    while next[s as usize] != root {
        let up = next[s as usize];
        next[s as usize] = root;
        s = up;
    }
    root
}

/// Inconvenience (area) of a parking function, `C(n+1, 2) - sum`.
pub fn inconvenience(pf: &ParkingFunction) -> u64 {
    let n = pf.len() as u64;
    n * (n + 1) / 2 - pf.sum()
}

/// A unit step of a lattice path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Step {
    North,
    East,
}

/// Dyck-path coding of a parking function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DyckCoding {
    /// `column_labels[c]` lists the cars (1-based) preferring spot `c + 1`,
    /// bottom to top in ascending car order.
    pub column_labels: Vec<Vec<usize>>,
    pub path: Vec<Step>,
    /// Number of full boxes between the path and the diagonal.
    pub area: u64,
}

pub fn dyck_encode(pf: &ParkingFunction) -> DyckCoding {
    let n = pf.len();
    let mut column_labels = vec![Vec::new(); n];
    for (car, &v) in pf.values().iter().enumerate() {
        column_labels[v as usize - 1].push(car + 1);
    }
    let mut path = Vec::with_capacity(2 * n);
    let mut row = 0u64;
    let mut area = 0u64;
    for (c, labels) in column_labels.iter().enumerate() {
        for _ in labels {
            row += 1;
            // Box in row `row`, column c + 1: row - (c + 1) full boxes to the diagonal.
            area += row - (c as u64 + 1);
            path.push(Step::North);
        }
        path.push(Step::East);
    }
    DyckCoding {
        column_labels,
        path,
        area,
    }
}

pub fn dyck_decode(coding: &DyckCoding) -> Result<ParkingFunction> {
    let n = coding.column_labels.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    let mut values = vec![0u32; n];
    for (c, labels) in coding.column_labels.iter().enumerate() {
        for &car in labels {
            if car == 0 || car > n {
                return Err(Error::InvalidCoding(format!("label {car} outside [1, {n}]")));
            }
            if values[car - 1] != 0 {
                return Err(Error::InvalidCoding(format!("label {car} used twice")));
            }
            values[car - 1] = c as u32 + 1;
        }
    }
    if let Some(missing) = values.iter().position(|&v| v == 0) {
        return Err(Error::InvalidCoding(format!("label {} missing", missing + 1)));
    }

    // The path must agree with the column sizes and stay weakly above the diagonal.
    let mut expected = Vec::with_capacity(2 * n);
    for labels in &coding.column_labels {
        expected.extend(std::iter::repeat_n(Step::North, labels.len()));
        expected.push(Step::East);
    }
    if expected != coding.path {
        return Err(Error::InvalidCoding("path does not match column labels".into()));
    }
    let (mut north, mut east) = (0usize, 0usize);
    for step in &coding.path {
        match step {
            Step::North => north += 1,
            Step::East => {
                east += 1;
                if north < east {
                    return Err(Error::InvalidCoding(format!(
                        "path dips below the diagonal at column {east}"
                    )));
                }
            }
        }
    }
    ParkingFunction::new(values).map_err(|_| Error::InvalidCoding("path dips below the diagonal".into()))
}

/// `y_k = #{i : pi_i <= k} - k` for `k = 0..=n`.
pub fn queue_profile(pf: &ParkingFunction) -> Vec<u32> {
    let n = pf.len();
    let mut counts = vec![0u32; n + 1];
    for &v in pf.values() {
        counts[v as usize] += 1;
    }
    let mut out = Vec::with_capacity(n + 1);
    out.push(0);
    let mut running = 0u32;
    for (k, &c) in counts.iter().enumerate().skip(1) {
        running += c;
        out.push(running - k as u32);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pf(v: &[u32]) -> ParkingFunction {
        ParkingFunction::new(v.to_vec()).unwrap()
    }

    #[test]
    fn criterion_examples() {
        assert!(is_parking_function(&[1, 1, 1]));
        assert!(!is_parking_function(&[2, 2]));
        assert!(is_parking_function(&[2, 1, 2]));
        assert!(!is_parking_function(&[1, 4, 1]));
    }

    #[test]
    fn park_examples() {
        let out = park(&[1, 3, 5, 3, 1]);
        assert_eq!(out.spots, vec![1, 3, 5, 4, 2]);
        assert_eq!(out.inconvenience, 2);
        assert!(out.is_success());

        let out = park(&[1, 1, 1]);
        assert_eq!(out.spots, vec![1, 2, 3]);
        assert_eq!(out.inconvenience, 3);
        assert_eq!(out.lucky, vec![true, false, false]);

        let out = park(&[2, 2]);
        assert_eq!(out.failed_at, Some(2));
        assert_eq!(out.spots, vec![2]);
    }

    #[test]
    fn park_out_of_range_fails_at_that_car() {
        assert_eq!(park(&[1, 4, 1]).failed_at, Some(2));
    }

    #[test]
    fn inconvenience_examples() {
        assert_eq!(inconvenience(&pf(&[1, 3, 5, 3, 1])), 2);
        assert_eq!(inconvenience(&pf(&[1, 2, 3, 4, 5, 6])), 0);
        assert_eq!(inconvenience(&pf(&[1, 1, 1])), 3);
    }

    #[test]
    fn dyck_examples() {
        let coding = dyck_encode(&pf(&[1, 3, 5, 3, 1]));
        assert_eq!(coding.area, 2);
        assert_eq!(coding.column_labels[0], vec![1, 5]);
        assert_eq!(coding.column_labels[2], vec![2, 4]);
        assert_eq!(dyck_decode(&coding).unwrap(), pf(&[1, 3, 5, 3, 1]));

        let diag = dyck_encode(&pf(&[1, 2, 3, 4]));
        assert_eq!(diag.area, 0);
        let expect: Vec<Step> = (0..4).flat_map(|_| [Step::North, Step::East]).collect();
        assert_eq!(diag.path, expect);
    }

    #[test]
    fn dyck_decode_rejects_bad_input() {
        let mut coding = dyck_encode(&pf(&[1, 1, 2]));
        coding.column_labels[1] = vec![2];
        assert!(dyck_decode(&coding).is_err());

        // Below the diagonal: one car in column 1, two in column 2 of a 3x3 grid
        // is fine, but column 2 and 3 with nothing in column 1 is not.
        let bad = DyckCoding {
            column_labels: vec![vec![], vec![1, 2], vec![3]],
            path: vec![
                Step::East,
                Step::North,
                Step::North,
                Step::East,
                Step::North,
                Step::East,
            ],
            area: 0,
        };
        assert!(matches!(dyck_decode(&bad), Err(Error::InvalidCoding(_))));
    }

    #[test]
    fn queue_profile_examples() {
        assert_eq!(queue_profile(&pf(&[1, 1, 1])), vec![0, 2, 1, 0]);
        assert_eq!(queue_profile(&pf(&[1, 2, 3])), vec![0, 0, 0, 0]);
        assert_eq!(queue_profile(&pf(&[1, 3, 5, 3, 1])), vec![0, 1, 0, 1, 0, 0]);
    }

    #[test]
    fn constructors_validate() {
        assert!(matches!(ParkingFunction::new(vec![2, 2]), Err(Error::NotParkingFunction(_))));
        assert!(matches!(ParkingFunction::new(vec![]), Err(Error::Empty)));
        assert!(matches!(
            PrefSequence::new(vec![1, 0], 2),
            Err(Error::OutOfRange { position: 2, .. })
        ));
        assert_eq!("1, 3,5,3,1".parse::<ParkingFunction>().unwrap(), pf(&[1, 3, 5, 3, 1]));
        assert_eq!(pf(&[1, 3, 5, 3, 1]).to_string(), "1,3,5,3,1");
    }
}
