//! The gap poset `P(s,t)` of the numerical semigroup generated by a
//! coprime pair, its coordinate form `P'(s,t)` and order ideals.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::write_list;

/// Default ceiling on `|P(s,t)|` for ideal enumeration.
pub const DEFAULT_POSET_LIMIT: u64 = 120;

/// Environment variable the CLI reads to override [`DEFAULT_POSET_LIMIT`].
pub const POSET_LIMIT_ENV: &str = "CORES_POSET_LIMIT";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoprimePair {
    s: u64,
    t: u64,
}

impl CoprimePair {
    pub fn new(s: u64, t: u64) -> Result<Self> {
        if s == 0 || s >= t || gcd(s, t) != 1 {
            return Err(Error::InvalidPair { s, t });
        }
        Ok(CoprimePair { s, t })
    }

    /// The pair `(2k+1, 2k+3)`.
    pub fn odd_twin(k: u64) -> Self {
        CoprimePair {
            s: 2 * k + 1,
            t: 2 * k + 3,
        }
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// `st - s - t`; equals `-1` when `s = 1`.
    pub fn frobenius(&self) -> i64 {
        (self.s * self.t) as i64 - self.s as i64 - self.t as i64
    }

    /// Number of gaps, `(s-1)(t-1)/2`.
    pub fn genus(&self) -> u64 {
        (self.s - 1) * (self.t - 1) / 2
    }

    /// `Some(k)` when the pair is `(2k+1, 2k+3)`.
    pub fn twin_index(&self) -> Option<u64> {
        (self.s % 2 == 1 && self.t == self.s + 2).then_some((self.s - 1) / 2)
    }

    /// All non-negative integers not of the form `as + bt`, increasing.
    pub fn gaps(&self) -> Vec<u64> {
        let f = self.frobenius();
        if f < 0 {
            return Vec::new();
        }
        let f = f as usize;
        let mut representable = vec![false; f + 1];
        representable[0] = true;
        for n in 1..=f {
            let s = self.s as usize;
            let t = self.t as usize;
            representable[n] = (n >= s && representable[n - s]) || (n >= t && representable[n - t]);
        }
        (0..=f)
            .filter(|&n| !representable[n])
            .map(|n| n as u64)
            .collect()
    }

    pub fn is_gap(&self, x: u64) -> bool {
        self.psi(x).is_ok()
    }

    /// The unique `(a, b)` with `x = F - as - bt`.
    pub fn psi(&self, x: u64) -> Result<PlaneCoord> {
        let not_gap = Error::NotAGap {
            x,
            s: self.s,
            t: self.t,
        };
        let f = self.frobenius();
        if f < 0 || x as i64 > f {
            return Err(not_gap);
        }
        let rest = (f - x as i64) as u64;
        // b*t <= F < s*t, so b < s
        (0..self.s)
            .take_while(|b| b * self.t <= rest)
            .find_map(|b| {
                let r = rest - b * self.t;
                r.is_multiple_of(self.s)
                    .then_some(PlaneCoord { a: r / self.s, b })
            })
            .ok_or(not_gap)
    }

    pub fn psi_inverse(&self, c: PlaneCoord) -> Result<u64> {
        let f = self.frobenius();
        let weight = (c.a * self.s + c.b * self.t) as i64;
        if weight > f {
            return Err(Error::OutsidePoset {
                a: c.a,
                b: c.b,
                s: self.s,
                t: self.t,
            });
        }
        Ok((f - weight) as u64)
    }

    /// Whether `x` covers `y`, i.e. `x - y` is `s` or `t`.
    pub fn covers(&self, x: u64, y: u64) -> bool {
        x > y && (x - y == self.s || x - y == self.t)
    }

    /// Elements covered by `x` (its lower neighbours in the Hasse diagram).
    pub fn lower_covers(&self, x: u64) -> impl Iterator<Item = u64> + '_ {
        [self.s, self.t]
            .into_iter()
            .filter_map(move |d| x.checked_sub(d))
            .filter(move |&y| self.is_gap(y))
    }

    pub fn is_order_ideal(&self, candidate: &BTreeSet<u64>) -> bool {
        candidate
            .iter()
            .all(|&x| self.is_gap(x) && self.lower_covers(x).all(|y| candidate.contains(&y)))
    }

    /// All order ideals, sorted by cardinality and then by their decreasing
    /// element lists. With `no_adjacent`, ideals containing some `x, x + 1`
    /// are skipped.
    pub fn enumerate_ideals(&self, no_adjacent: bool, limit: u64) -> Result<Vec<GapIdeal>> {
        if self.genus() > limit {
            return Err(Error::GuardExceeded {
                size: self.genus(),
                limit,
            });
        }
        let gaps = self.gaps();
        let top = gaps.last().map_or(0, |&g| g as usize + 1);
        let mut search = IdealSearch {
            pair: *self,
            gaps: &gaps,
            no_adjacent,
            included: vec![false; top],
            out: Vec::new(),
        };
        search.run(0);
        let mut ideals = search.out;
        ideals.sort_by(|x, y| {
            x.len()
                .cmp(&y.len())
                .then_with(|| x.elements.iter().rev().cmp(y.elements.iter().rev()))
        });
        Ok(ideals)
    }
}

impl fmt::Display for CoprimePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.s, self.t)
    }
}

/// Backtracking over gaps in increasing order. A gap may be included only if
/// its lower covers already are, which keeps every partial choice downward
/// closed; excluding is always allowed, so each leaf is a distinct ideal.
struct IdealSearch<'a> {
    pair: CoprimePair,
    gaps: &'a [u64],
    no_adjacent: bool,
    included: Vec<bool>,
    out: Vec<GapIdeal>,
}

impl IdealSearch<'_> {
    fn run(&mut self, idx: usize) {
        let Some(&x) = self.gaps.get(idx) else {
            let elements = self
                .gaps
                .iter()
                .copied()
                .filter(|&g| self.included[g as usize])
                .collect();
            self.out.push(GapIdeal {
                pair: self.pair,
                elements,
            });
            return;
        };
        self.run(idx + 1);
        let xi = x as usize;
        let below_ok = [self.pair.s, self.pair.t]
            .iter()
            .all(|&d| x < d || self.included[xi - d as usize]);
        let adjacent = self.no_adjacent && xi >= 1 && self.included[xi - 1];
        if below_ok && !adjacent {
            self.included[xi] = true;
            self.run(idx + 1);
            self.included[xi] = false;
        }
    }
}

/// Coordinates `(a, b)` of a gap `F - as - bt`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PlaneCoord {
    pub a: u64,
    pub b: u64,
}

impl PlaneCoord {
    pub fn new(a: u64, b: u64) -> Self {
        PlaneCoord { a, b }
    }
}

impl fmt::Display for PlaneCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// Membership in `P'(2k+1, 2k+3)` by the sum bounds: `a + b <= 2k - 1`
/// when `b >= k`, `a + b <= 2k` otherwise.
pub fn membership_2k(c: PlaneCoord, k: u64) -> bool {
    let sum = c.a + c.b;
    if c.b >= k {
        sum < 2 * k
    } else {
        sum <= 2 * k
    }
}

/// A downward-closed set of gaps of a fixed pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GapIdeal {
    pair: CoprimePair,
    elements: BTreeSet<u64>,
}

impl GapIdeal {
    pub fn new(pair: CoprimePair, elements: BTreeSet<u64>) -> Result<Self> {
        if pair.is_order_ideal(&elements) {
            Ok(GapIdeal { pair, elements })
        } else {
            Err(Error::NotOrderIdeal {
                s: pair.s,
                t: pair.t,
            })
        }
    }

    pub(crate) fn new_unchecked(pair: CoprimePair, elements: BTreeSet<u64>) -> Self {
        debug_assert!(pair.is_order_ideal(&elements));
        GapIdeal { pair, elements }
    }

    pub fn empty(pair: CoprimePair) -> Self {
        GapIdeal {
            pair,
            elements: BTreeSet::new(),
        }
    }

    pub fn pair(&self) -> CoprimePair {
        self.pair
    }

    pub fn elements(&self) -> &BTreeSet<u64> {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.contains(&x)
    }

    /// Elements largest first.
    pub fn decreasing(&self) -> Vec<u64> {
        self.elements.iter().rev().copied().collect()
    }

    /// First `x` such that both `x` and `x + 1` are members.
    pub fn adjacent_pair(&self) -> Option<(u64, u64)> {
        self.elements
            .iter()
            .find(|&&x| self.elements.contains(&(x + 1)))
            .map(|&x| (x, x + 1))
    }

    /// Image under `psi`.
    pub fn coords(&self) -> BTreeSet<PlaneCoord> {
        self.elements
            .iter()
            .map(|&x| self.pair.psi(x).expect("ideal members are gaps"))
            .collect()
    }
}

impl fmt::Display for GapIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.decreasing())
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(s: u64, t: u64) -> CoprimePair {
        CoprimePair::new(s, t).unwrap()
    }

    fn set(xs: &[u64]) -> BTreeSet<u64> {
        xs.iter().copied().collect()
    }

    #[test]
    fn rejects_bad_pairs() {
        assert!(CoprimePair::new(4, 6).is_err());
        assert!(CoprimePair::new(5, 3).is_err());
        assert!(CoprimePair::new(0, 3).is_err());
        assert!(CoprimePair::new(3, 3).is_err());
        assert!(CoprimePair::new(1, 3).is_ok());
    }

    #[test]
    fn gaps_examples() {
        assert_eq!(pair(3, 5).gaps(), vec![1, 2, 4, 7]);
        assert!(pair(1, 3).gaps().is_empty());
        let g = pair(9, 11).gaps();
        assert_eq!(g.len(), 40);
        assert_eq!(g.last(), Some(&79));
        assert_eq!(pair(9, 11).frobenius(), 79);
    }

    #[test]
    fn psi_examples() {
        let p = pair(9, 11);
        assert_eq!(p.psi(19).unwrap(), PlaneCoord::new(3, 3));
        assert_eq!(p.psi(79).unwrap(), PlaneCoord::new(0, 0));
        for k in 1..=10 {
            let tw = CoprimePair::odd_twin(k);
            assert_eq!(tw.psi(1).unwrap(), PlaneCoord::new(k + 1, k - 1));
        }
        assert!(p.psi(9).is_err());
        assert!(p.psi(80).is_err());
        assert!(p.psi(0).is_err());
        assert!(pair(1, 3).psi(0).is_err());
    }

    #[test]
    fn psi_inverse_examples() {
        let p = pair(9, 11);
        assert_eq!(p.psi_inverse(PlaneCoord::new(3, 3)).unwrap(), 19);
        assert_eq!(p.psi_inverse(PlaneCoord::new(0, 0)).unwrap(), 79);
        assert_eq!(p.psi_inverse(PlaneCoord::new(5, 3)).unwrap(), 1);
        assert!(p.psi_inverse(PlaneCoord::new(9, 0)).is_err());
        assert!(pair(1, 3).psi_inverse(PlaneCoord::new(0, 0)).is_err());
    }

    #[test]
    fn covers_examples() {
        let p = pair(3, 5);
        assert!(p.covers(7, 4));
        assert!(p.covers(7, 2));
        assert!(!p.covers(4, 2));
        assert!(!p.covers(4, 7));
    }

    #[test]
    fn order_ideal_examples() {
        assert!(pair(9, 11).is_order_ideal(&set(&[19, 10, 8, 4, 1])));
        assert!(!pair(3, 5).is_order_ideal(&set(&[7])));
        assert!(pair(3, 5).is_order_ideal(&set(&[])));
        assert!(pair(1, 3).is_order_ideal(&set(&[])));
        // 3 is not a gap
        assert!(!pair(3, 5).is_order_ideal(&set(&[3])));
    }

    #[test]
    fn enumerate_small() {
        let p = pair(3, 5);
        let all = p.enumerate_ideals(false, DEFAULT_POSET_LIMIT).unwrap();
        assert_eq!(all.len(), 7);
        let filtered = p.enumerate_ideals(true, DEFAULT_POSET_LIMIT).unwrap();
        let got: Vec<Vec<u64>> = filtered.iter().map(|i| i.decreasing()).collect();
        assert_eq!(got, vec![vec![], vec![1], vec![2], vec![4, 1]]);
        assert_eq!(
            pair(3, 4)
                .enumerate_ideals(false, DEFAULT_POSET_LIMIT)
                .unwrap()
                .len(),
            5
        );
        let trivial = pair(1, 3)
            .enumerate_ideals(true, DEFAULT_POSET_LIMIT)
            .unwrap();
        assert_eq!(trivial.len(), 1);
        assert!(trivial[0].is_empty());
    }

    #[test]
    fn enumerate_nine_eleven() {
        let ideals = pair(9, 11)
            .enumerate_ideals(false, DEFAULT_POSET_LIMIT)
            .unwrap();
        assert_eq!(ideals.len(), 8398);
    }

    #[test]
    fn guard_refuses_large_posets() {
        // (17,19) has 144 gaps
        let err = pair(17, 19)
            .enumerate_ideals(true, DEFAULT_POSET_LIMIT)
            .unwrap_err();
        assert_eq!(
            err,
            Error::GuardExceeded {
                size: 144,
                limit: 120
            }
        );
    }

    #[test]
    fn membership_examples() {
        assert!(membership_2k(PlaneCoord::new(3, 3), 4));
        for k in 1..=10 {
            assert!(membership_2k(PlaneCoord::new(k - 1, k), k));
            assert!(!membership_2k(PlaneCoord::new(k, k), k));
            assert!(membership_2k(PlaneCoord::new(2 * k, 0), k));
            assert!(!membership_2k(PlaneCoord::new(2 * k + 1, 0), k));
        }
        assert!(!membership_2k(PlaneCoord::new(0, 0), 0));
    }

    #[test]
    fn ideal_display_and_adjacency() {
        let i = GapIdeal::new(pair(9, 11), set(&[19, 10, 8, 4, 1])).unwrap();
        assert_eq!(i.to_string(), "19,10,8,4,1");
        assert_eq!(i.adjacent_pair(), None);
        let j = GapIdeal::new(pair(3, 5), set(&[1, 2])).unwrap();
        assert_eq!(j.adjacent_pair(), Some((1, 2)));
        assert_eq!(GapIdeal::empty(pair(3, 5)).to_string(), "empty");
        assert!(GapIdeal::new(pair(3, 5), set(&[7])).is_err());
    }
}
