//! Brute-force oracles and counting identities.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bijection::{
    from_path, partition_to_path, path_to_partition, to_path, trace_partition, LatticePath,
};
use crate::error::{Error, Result};
use crate::gap_poset::{CoprimePair, PlaneCoord};
use crate::partition::{BetaSet, Partition};

/// Default largest `s` for [`verify_all`].
pub const DEFAULT_MAX_S: u64 = 13;

/// Largest size of an `(a, b)`-core, `(a^2 - 1)(b^2 - 1) / 24`.
pub fn max_core_size(a: u64, b: u64) -> u64 {
    (a * a - 1) * (b * b - 1) / 24
}

/// All `(s, s+2)`-cores with distinct parts, read off from the ideals of
/// `P(s, s+2)` without adjacent integers.
pub fn enumerate_distinct_cores(s: u64, limit: u64) -> Result<Vec<Partition>> {
    let pair = odd_pair(s)?;
    Ok(pair
        .enumerate_ideals(true, limit)?
        .into_iter()
        .map(|ideal| {
            BetaSet::from_elements(ideal.elements().iter().copied())
                .expect("gaps are positive")
                .to_partition()
        })
        .collect())
}

fn odd_pair(s: u64) -> Result<CoprimePair> {
    if s.is_multiple_of(2) {
        return Err(Error::EvenOrZeroS(s));
    }
    CoprimePair::new(s, s + 2)
}

/// Every partition of size at most `max_n` that is an `(s, t)`-core (with
/// distinct parts when `distinct`), found by checking hook lengths only.
///
/// Rows are stacked on top of a valid suffix: the hooks of the lower rows do
/// not depend on the rows above them, so a suffix that fails the test can
/// never be completed.
pub fn direct_filter_oracle(s: u64, t: u64, max_n: u64, distinct: bool) -> BTreeSet<Partition> {
    let mut found = BTreeSet::new();
    // parts stored smallest first while growing
    let mut rows: Vec<u64> = Vec::new();
    grow(&mut rows, 0, s, t, max_n, distinct, &mut found);
    found
}

fn grow(
    rows: &mut Vec<u64>,
    size: u64,
    s: u64,
    t: u64,
    max_n: u64,
    distinct: bool,
    found: &mut BTreeSet<Partition>,
) {
    found.insert(Partition::new(rows.iter().rev().copied().collect()).expect("rows increase"));
    let floor = match rows.last() {
        None => 1,
        Some(&top) if distinct => top + 1,
        Some(&top) => top,
    };
    for v in floor..=max_n.saturating_sub(size) {
        if new_row_hooks(rows, v).all(|h| h % s != 0 && h % t != 0) {
            rows.push(v);
            grow(rows, size + v, s, t, max_n, distinct, found);
            rows.pop();
        }
    }
}

/// Hooks of a new top row of length `v` placed above `rows` (smallest first).
fn new_row_hooks(rows: &[u64], v: u64) -> impl Iterator<Item = u64> + '_ {
    (0..v).map(move |j| {
        let leg = rows.iter().filter(|&&r| r > j).count() as u64;
        (v - j - 1) + leg + 1
    })
}

/// Plain enumeration of all partitions of `n`, largest part first.
pub fn partitions_of(n: u64) -> Vec<Partition> {
    fn rec(remaining: u64, cap: u64, acc: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(acc.clone()).expect("built decreasing"));
            return;
        }
        for part in (1..=cap.min(remaining)).rev() {
            acc.push(part);
            rec(remaining - part, part, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of length-`s` paths with positive endpoint, by trying all `2^s`.
pub fn count_paths(s: u64) -> u64 {
    let n = s as u32;
    (0u64..1 << n)
        .filter(|bits| {
            let downs = bits.count_ones() as i64;
            n as i64 - 2 * downs > 0
        })
        .count() as u64
}

/// `F_n` with `F_1 = F_2 = 1`.
pub fn fibonacci(n: u64) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

/// `C(a + b, a) / (a + b)`.
pub fn rational_catalan(a: u64, b: u64) -> u64 {
    let n = a + b;
    let mut binom: u128 = 1;
    for i in 0..a.min(b) as u128 {
        binom = binom * (n as u128 - i) / (i + 1);
    }
    (binom / n as u128) as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub s: u64,
    pub observed: u64,
    pub expected: u64,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl CountReport {
    pub fn new(s: u64, observed: u64, expected: u64) -> Self {
        CountReport {
            s,
            observed,
            expected,
            matches: observed == expected,
        }
    }
}

/// Counts `(s, s+1)`-cores with distinct parts by hook filtering and compares
/// with `F_{s+1}`.
pub fn fibonacci_check(s: u64) -> CountReport {
    let observed = direct_filter_oracle(s, s + 1, max_core_size(s, s + 1), true).len() as u64;
    CountReport::new(s, observed, fibonacci(s + 1))
}

/// Intermediate objects dumped when a check inside [`verify_all`] fails.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FailureRecord {
    pub s: u64,
    pub reason: String,
    pub partition: Option<Partition>,
    pub beta_set: Option<Vec<u64>>,
    pub psi: Option<Vec<PlaneCoord>>,
    pub heights: Option<Vec<i64>>,
    pub path: Option<String>,
}

impl FailureRecord {
    fn for_partition(s: u64, p: &Partition, reason: String) -> Self {
        let trace = trace_partition(p, s).ok();
        let pair = CoprimePair::new(s, s + 2).ok();
        let psi = pair.map(|pair| {
            p.beta_set()
                .hooks()
                .iter()
                .filter_map(|&x| pair.psi(x).ok())
                .collect()
        });
        FailureRecord {
            s,
            reason,
            partition: Some(p.clone()),
            beta_set: Some(p.beta_set().hooks().to_vec()),
            psi,
            heights: trace.as_ref().map(|t| t.heights.clone()),
            path: trace.map(|t| t.path),
        }
    }

    fn for_path(s: u64, path: &LatticePath, reason: String) -> Self {
        let heights = from_path(path, (s - 1) / 2)
            .ok()
            .map(|j| j.heights().to_vec());
        FailureRecord {
            s,
            reason,
            partition: None,
            beta_set: None,
            psi: None,
            heights,
            path: Some(path.to_string()),
        }
    }

    fn into_error(self) -> Error {
        Error::VerificationFailed(serde_json::to_string(&self).expect("record serializes"))
    }
}

/// Runs the whole pipeline for one odd `s`: every core must map to a
/// distinct positive-ending path, both round trips must be identities, and
/// the image must be the full path set.
pub fn verify_one(s: u64, limit: u64) -> Result<CountReport> {
    let cores = enumerate_distinct_cores(s, limit)?;
    let fail_p = |p: &Partition, why: String| FailureRecord::for_partition(s, p, why).into_error();
    let mut image = BTreeSet::new();
    for p in &cores {
        let path =
            partition_to_path(p, s).map_err(|e| fail_p(p, format!("forward failed: {e}")))?;
        if path.len() as u64 != s || path.endpoint() <= 0 || path.endpoint() % 2 == 0 {
            return Err(fail_p(p, "path has wrong length or endpoint".into()));
        }
        let back =
            path_to_partition(&path, s).map_err(|e| fail_p(p, format!("inverse failed: {e}")))?;
        if &back != p {
            return Err(fail_p(p, format!("round trip returned {back}")));
        }
        if !image.insert(path) {
            return Err(fail_p(p, "path already hit by another partition".into()));
        }
    }
    for path in LatticePath::positive_ending(s as usize) {
        if !image.contains(&path) {
            return Err(FailureRecord::for_path(s, &path, "path not in image".into()).into_error());
        }
        let p = path_to_partition(&path, s).map_err(|e| {
            FailureRecord::for_path(s, &path, format!("inverse failed: {e}")).into_error()
        })?;
        let again =
            partition_to_path(&p, s).map_err(|e| fail_p(&p, format!("forward failed: {e}")))?;
        if again != path {
            return Err(
                FailureRecord::for_path(s, &path, format!("round trip returned {again}"))
                    .into_error(),
            );
        }
        let j = from_path(&path, (s - 1) / 2).expect("checked above");
        debug_assert_eq!(to_path(&j), path);
    }
    Ok(CountReport::new(s, cores.len() as u64, 1 << (s - 1)))
}

/// [`verify_one`] for every odd `s <= max_s`, in increasing order.
pub fn verify_all(max_s: u64, limit: u64) -> Result<Vec<CountReport>> {
    (1..=max_s)
        .step_by(2)
        .map(|s| verify_one(s, limit))
        .collect()
}

/// Fixed-width table of reports.
pub fn render_table(reports: &[CountReport]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{:>4} {:>10} {:>10} {:>6}",
        "s", "observed", "expected", "match"
    )
    .unwrap();
    for r in reports {
        writeln!(
            out,
            "{:>4} {:>10} {:>10} {:>6}",
            r.s, r.observed, r.expected, r.matches
        )
        .unwrap();
    }
    out
}

/// One JSON object per line.
pub fn render_jsonl(reports: &[CountReport]) -> String {
    reports
        .iter()
        .map(|r| serde_json::to_string(r).expect("report serializes") + "\n")
        .collect()
}
