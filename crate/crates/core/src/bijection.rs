//! The bijection between order ideals of `P(2k+1, 2k+3)` without adjacent
//! integers and lattice paths of length `2k+1` ending at a positive height.
//!
//! The coordinate poset `P'` is cut along `a = b` into a left part `L` and a
//! right part `R`. `L` embeds into the upper half `Q+` of the strip
//! `Q = {(a, b) : 1 <= a - b <= 2k + 2}` unchanged; `R` is flipped into the
//! lower half `Q-` with colours swapped. The resulting ideal `J` of `Q` is
//! stored only through its heights at the `2k + 2` diagonals of the strip,
//! and the path is the height profile shifted to start at zero.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gap_poset::{CoprimePair, GapIdeal, PlaneCoord};
use crate::partition::{BetaSet, Partition};

/// Which half of `P'(2k+1, 2k+3)` a coordinate belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SideTag {
    L,
    R,
}

impl SideTag {
    fn letter(self) -> char {
        match self {
            SideTag::L => 'L',
            SideTag::R => 'R',
        }
    }
}

/// `L` is `a > b, a + b <= 2k`; `R` is `a <= b, a + b <= 2k - 1`.
pub fn side_of(c: PlaneCoord, k: u64) -> Result<SideTag> {
    let pair = CoprimePair::odd_twin(k);
    let sum = c.a + c.b;
    if c.a > c.b && sum <= 2 * k {
        Ok(SideTag::L)
    } else if c.a <= c.b && sum < 2 * k {
        Ok(SideTag::R)
    } else {
        Err(Error::OutsidePoset {
            a: c.a,
            b: c.b,
            s: pair.s(),
            t: pair.t(),
        })
    }
}

fn check_index(i: u64, k: u64) -> Result<()> {
    if (1..=k).contains(&i) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index: i, max: k })
    }
}

/// `l_i = (k + i, k - i)`, the `i`-th minimal element of `L`.
pub fn minimal_l(i: u64, k: u64) -> Result<PlaneCoord> {
    check_index(i, k)?;
    Ok(PlaneCoord::new(k + i, k - i))
}

/// `r_j = (j - 1, 2k - j)`, the `j`-th minimal element of `R`.
pub fn minimal_r(j: u64, k: u64) -> Result<PlaneCoord> {
    check_index(j, k)?;
    Ok(PlaneCoord::new(j - 1, 2 * k - j))
}

/// Coordinates of a small gap `1 <= x <= 2k`: odd ones are minimal in `L`,
/// even ones minimal in `R`.
pub fn small_number_coord(x: u64, k: u64) -> Result<PlaneCoord> {
    if !(1..=2 * k).contains(&x) {
        return Err(Error::IndexOutOfRange {
            index: x,
            max: 2 * k,
        });
    }
    if x % 2 == 1 {
        minimal_l(x.div_ceil(2), k)
    } else {
        minimal_r(x / 2, k)
    }
}

/// The coordinate form of "no two adjacent integers": no `l_x, r_x` pair and
/// no `r_x, l_{x+1}` pair.
pub fn check_characterization(ideal_coords: &BTreeSet<PlaneCoord>, k: u64) -> bool {
    let has = |c: PlaneCoord| ideal_coords.contains(&c);
    let l = |i: u64| PlaneCoord::new(k + i, k - i);
    let r = |j: u64| PlaneCoord::new(j - 1, 2 * k - j);
    let same_index = (1..=k).any(|x| has(l(x)) && has(r(x)));
    let shifted = (1..k).any(|x| has(r(x)) && has(l(x + 1)));
    !(same_index || shifted)
}

/// A point of the strip poset `Q`; coordinates may be negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPoint {
    pub a: i64,
    pub b: i64,
}

impl QPoint {
    pub fn new(a: i64, b: i64) -> Self {
        QPoint { a, b }
    }

    /// Position `p` with `a - b = 2k + 2 - p`.
    pub fn position(&self, k: u64) -> i64 {
        2 * k as i64 + 2 - (self.a - self.b)
    }

    /// `2k + 1 - a - b`.
    pub fn height(&self, k: u64) -> i64 {
        2 * k as i64 + 1 - self.a - self.b
    }

    pub fn in_strip(&self, k: u64) -> bool {
        let d = self.a - self.b;
        d >= 1 && d <= 2 * k as i64 + 2
    }

    pub fn in_upper(&self, k: u64) -> bool {
        self.in_strip(k) && self.a + self.b <= 2 * k as i64
    }

    pub fn in_lower(&self, k: u64) -> bool {
        self.in_strip(k) && self.a + self.b > 2 * k as i64
    }

    /// Componentwise `self <= other` in `Q`: larger coordinates sit lower.
    pub fn le(&self, other: &QPoint) -> bool {
        self.a >= other.a && self.b >= other.b
    }
}

impl fmt::Display for QPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

fn wrong_side(c: PlaneCoord, expected: SideTag) -> Error {
    Error::WrongSide {
        a: c.a,
        b: c.b,
        expected: expected.letter(),
    }
}

/// Identity embedding of `L` into `Q+`.
pub fn f_l(c: PlaneCoord, k: u64) -> Result<QPoint> {
    match side_of(c, k) {
        Ok(SideTag::L) => Ok(QPoint::new(c.a as i64, c.b as i64)),
        Ok(SideTag::R) => Err(wrong_side(c, SideTag::L)),
        Err(e) => Err(e),
    }
}

/// Order-reversing embedding of `R` into `Q-`: `(a, b) -> (3k + 1 - b, k - 1 - a)`.
pub fn f_r(c: PlaneCoord, k: u64) -> Result<QPoint> {
    match side_of(c, k) {
        Ok(SideTag::R) => {
            let k = k as i64;
            Ok(QPoint::new(3 * k + 1 - c.b as i64, k - 1 - c.a as i64))
        }
        Ok(SideTag::L) => Err(wrong_side(c, SideTag::R)),
        Err(e) => Err(e),
    }
}

fn f_r_inverse(q: QPoint, k: u64) -> PlaneCoord {
    let k = k as i64;
    let a = k - 1 - q.b;
    let b = 3 * k + 1 - q.a;
    debug_assert!(a >= 0 && b >= 0, "{q} has no preimage in R");
    PlaneCoord::new(a as u64, b as u64)
}

/// Smallest `a + b` of a `Q-` point at position `p`: the sum has the parity
/// of `p` and is at least `2k + 1`.
fn lower_start(p: i64, k: u64) -> i64 {
    let k = k as i64;
    if p % 2 == 1 {
        2 * k + 1
    } else {
        2 * k + 2
    }
}

fn point_at(p: i64, sum: i64, k: u64) -> QPoint {
    let diff = 2 * k as i64 + 2 - p;
    QPoint::new((sum + diff) / 2, (sum - diff) / 2)
}

/// A balanced order ideal of `Q`, stored as its heights `h_0..h_{2k+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BalancedIdeal {
    k: u64,
    heights: Vec<i64>,
}

impl BalancedIdeal {
    /// Checks parity (`h_i = i + 1 mod 2`), unit steps, and the three
    /// balance conditions.
    pub fn new(k: u64, heights: Vec<i64>) -> Result<Self> {
        let expected = 2 * k as usize + 2;
        if heights.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                found: heights.len(),
            });
        }
        if let Some(i) =
            (0..heights.len()).find(|&i| (heights[i] - i as i64 - 1).rem_euclid(2) != 0)
        {
            return Err(Error::NotBalanced(format!(
                "h_{i} = {} has the wrong parity",
                heights[i]
            )));
        }
        if let Some(i) = (1..heights.len()).find(|&i| (heights[i] - heights[i - 1]).abs() != 1) {
            return Err(Error::NotBalanced(format!(
                "h_{} to h_{i} is not a unit step",
                i - 1
            )));
        }
        let left = heights[0];
        let right = heights[expected - 1];
        if left >= 0 {
            return Err(Error::NotBalanced(format!(
                "left height {left} is not negative"
            )));
        }
        if right < 0 {
            return Err(Error::NotBalanced(format!(
                "right height {right} is negative"
            )));
        }
        if (left + right).abs() != 1 {
            return Err(Error::NotBalanced(format!(
                "left {left} and right {right} heights do not sum to +-1"
            )));
        }
        Ok(BalancedIdeal { k, heights })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn heights(&self) -> &[i64] {
        &self.heights
    }

    pub fn left_height(&self) -> i64 {
        self.heights[0]
    }

    pub fn right_height(&self) -> i64 {
        self.heights[self.heights.len() - 1]
    }

    /// Maximal element of the ideal at position `p`.
    pub fn top_at(&self, p: usize) -> QPoint {
        let sum = 2 * self.k as i64 + 1 - self.heights[p];
        point_at(p as i64, sum, self.k)
    }

    /// Whether `q` belongs to the ideal described by the heights.
    pub fn contains(&self, q: QPoint) -> bool {
        if !q.in_strip(self.k) {
            return false;
        }
        let p = q.position(self.k) as usize;
        q.height(self.k) <= self.heights[p]
    }
}

/// Maps an ideal of `P(2k+1, 2k+3)` without adjacent integers to the
/// heights of `f_L(I' ∩ L) ∪ (Q- \ f_R(I' ∩ R))`, where `I' = psi(I)`.
pub fn forward(ideal: &GapIdeal) -> Result<BalancedIdeal> {
    let pair = ideal.pair();
    let k = pair.twin_index().ok_or(Error::InvalidPair {
        s: pair.s(),
        t: pair.t(),
    })?;
    if let Some((x, y)) = ideal.adjacent_pair() {
        return Err(Error::AdjacentIntegers(x, y));
    }
    let positions = 2 * k as usize + 2;
    let mut upper: Vec<Option<i64>> = vec![None; positions];
    let mut removed: HashSet<(i64, i64)> = HashSet::new();
    for c in ideal.coords() {
        match side_of(c, k)? {
            SideTag::L => {
                let q = f_l(c, k)?;
                let slot = &mut upper[q.position(k) as usize];
                *slot = Some(slot.map_or(q.height(k), |h| h.max(q.height(k))));
            }
            SideTag::R => {
                let q = f_r(c, k)?;
                removed.insert((q.position(k), q.a + q.b));
            }
        }
    }
    let heights = (0..positions)
        .map(|p| {
            let pos = p as i64;
            let mut sum = lower_start(pos, k);
            while removed.contains(&(pos, sum)) {
                sum += 2;
            }
            let lower = 2 * k as i64 + 1 - sum;
            upper[p].map_or(lower, |h| h.max(lower))
        })
        .collect();
    BalancedIdeal::new(k, heights)
}

/// Inverse of [`forward`]: `f_L^{-1}(J ∩ Q+) ∪ f_R^{-1}(Q- \ J)`, mapped
/// back through `psi`.
pub fn backward(j: &BalancedIdeal) -> GapIdeal {
    let k = j.k;
    let pair = CoprimePair::odd_twin(k);
    let top = 2 * k as i64;
    let mut elements = BTreeSet::new();
    for (p, &h) in j.heights.iter().enumerate() {
        let p = p as i64;
        let first = top + 1 - h;
        // members of J in Q+
        let mut sum = first;
        while sum <= top {
            let q = point_at(p, sum, k);
            let c = PlaneCoord::new(q.a as u64, q.b as u64);
            debug_assert!(q.b >= 0 && side_of(c, k) == Ok(SideTag::L));
            elements.insert(pair.psi_inverse(c).expect("L lies in P'"));
            sum += 2;
        }
        // points of Q- missing from J
        let mut sum = lower_start(p, k);
        while sum < first {
            let c = f_r_inverse(point_at(p, sum, k), k);
            debug_assert_eq!(side_of(c, k), Ok(SideTag::R));
            elements.insert(pair.psi_inverse(c).expect("R lies in P'"));
            sum += 2;
        }
    }
    GapIdeal::new_unchecked(pair, elements)
}

/// A single lattice step: `U = (1, 1)` or `D = (1, -1)`. `U` sorts first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    D,
}

impl Step {
    pub fn delta(self) -> i64 {
        match self {
            Step::U => 1,
            Step::D => -1,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Final height `#U - #D`.
    pub fn endpoint(&self) -> i64 {
        self.steps.iter().map(|s| s.delta()).sum()
    }

    /// Heights of the `len + 1` points, starting at 0.
    pub fn heights(&self) -> Vec<i64> {
        std::iter::once(0)
            .chain(self.steps.iter().scan(0, |y, s| {
                *y += s.delta();
                Some(*y)
            }))
            .collect()
    }

    /// Every path of length `n` with a positive endpoint, in lexicographic
    /// order with `U < D`.
    pub fn positive_ending(n: usize) -> impl Iterator<Item = LatticePath> {
        (0u64..1 << n)
            .map(move |bits| {
                // bit n-1-i set means step i is D, so numeric order is lexicographic
                let steps = (0..n)
                    .map(|i| {
                        if bits >> (n - 1 - i) & 1 == 1 {
                            Step::D
                        } else {
                            Step::U
                        }
                    })
                    .collect();
                LatticePath { steps }
            })
            .filter(|p| p.endpoint() > 0)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::U => "U",
                Step::D => "D",
            })?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'U' => Ok(Step::U),
                'D' => Ok(Step::D),
                other => Err(Error::Parse(format!("unexpected step {other:?} in path"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(LatticePath::new)
    }
}

/// The height profile `h_i - h_0`, read as steps.
pub fn to_path(j: &BalancedIdeal) -> LatticePath {
    let steps = j
        .heights
        .windows(2)
        .map(|w| if w[1] > w[0] { Step::U } else { Step::D })
        .collect();
    LatticePath::new(steps)
}

/// The unique balanced ideal whose profile is `path`: shift the path down by
/// `2 floor((d - 1) / 4) + 1`, where `d` is its endpoint.
pub fn from_path(path: &LatticePath, k: u64) -> Result<BalancedIdeal> {
    let expected = 2 * k as usize + 1;
    if path.len() != expected {
        return Err(Error::LengthMismatch {
            expected,
            found: path.len(),
        });
    }
    let d = path.endpoint();
    if d <= 0 {
        return Err(Error::EndpointNotPositive(d));
    }
    let shift = 2 * ((d - 1) / 4) + 1;
    let heights = path.heights().into_iter().map(|y| y - shift).collect();
    BalancedIdeal::new(k, heights)
}

fn half_of_odd(s: u64) -> Result<u64> {
    if s % 2 == 1 {
        Ok((s - 1) / 2)
    } else {
        Err(Error::EvenOrZeroS(s))
    }
}

/// Every intermediate object of one run of the bijection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    pub partition: Partition,
    pub beta_set: BetaSet,
    pub ideal: Vec<u64>,
    pub heights: Vec<i64>,
    pub path: String,
}

/// Runs partition -> beta-set -> ideal -> balanced ideal -> path, keeping
/// the intermediates.
pub fn trace_partition(p: &Partition, s: u64) -> Result<Trace> {
    let k = half_of_odd(s)?;
    let pair = CoprimePair::odd_twin(k);
    if !p.has_distinct_parts() {
        return Err(Error::PartsNotDistinct);
    }
    if !p.is_simultaneous_core(&[pair.s(), pair.t()]) {
        return Err(Error::NotCore {
            s: pair.s(),
            t: pair.t(),
        });
    }
    let beta = p.beta_set();
    let ideal = GapIdeal::new(pair, beta.hooks().iter().copied().collect())?;
    let balanced = forward(&ideal)?;
    let path = to_path(&balanced);
    Ok(Trace {
        partition: p.clone(),
        ideal: ideal.decreasing(),
        beta_set: beta,
        heights: balanced.heights,
        path: path.to_string(),
    })
}

pub fn partition_to_path(p: &Partition, s: u64) -> Result<LatticePath> {
    let trace = trace_partition(p, s)?;
    trace.path.parse()
}

pub fn path_to_partition(path: &LatticePath, s: u64) -> Result<Partition> {
    let k = half_of_odd(s)?;
    let balanced = from_path(path, k)?;
    let ideal = backward(&balanced);
    let beta = BetaSet::from_elements(ideal.elements().iter().copied())?;
    Ok(beta.to_partition())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pc(a: u64, b: u64) -> PlaneCoord {
        PlaneCoord::new(a, b)
    }

    fn ideal(k: u64, xs: &[u64]) -> GapIdeal {
        GapIdeal::new(CoprimePair::odd_twin(k), xs.iter().copied().collect()).unwrap()
    }

    fn bal(k: u64, h: &[i64]) -> BalancedIdeal {
        BalancedIdeal::new(k, h.to_vec()).unwrap()
    }

    fn path(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    fn part(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn side_examples() {
        assert_eq!(side_of(pc(5, 3), 4), Ok(SideTag::L));
        assert_eq!(side_of(pc(3, 4), 4), Ok(SideTag::R));
        // a = b falls on the right
        assert_eq!(side_of(pc(3, 3), 4), Ok(SideTag::R));
        assert!(side_of(pc(4, 4), 4).is_err());
        assert!(side_of(pc(9, 0), 4).is_err());
        assert!(side_of(pc(0, 0), 0).is_err());
    }

    #[test]
    fn minimal_elements() {
        assert_eq!(minimal_l(1, 4).unwrap(), pc(5, 3));
        assert_eq!(minimal_r(2, 4).unwrap(), pc(1, 6));
        for k in 1..=8 {
            assert_eq!(minimal_l(k, k).unwrap(), pc(2 * k, 0));
        }
        assert!(minimal_l(0, 4).is_err());
        assert!(minimal_r(5, 4).is_err());
        assert!(minimal_l(1, 0).is_err());
    }

    #[test]
    fn small_numbers() {
        assert_eq!(small_number_coord(1, 4).unwrap(), pc(5, 3));
        assert_eq!(small_number_coord(4, 4).unwrap(), pc(1, 6));
        for k in 1..=8 {
            assert_eq!(small_number_coord(2 * k, k).unwrap(), pc(k - 1, k));
        }
        assert!(small_number_coord(0, 4).is_err());
        assert!(small_number_coord(9, 4).is_err());
    }

    #[test]
    fn characterization_examples() {
        let fig = ideal(4, &[19, 10, 8, 4, 1]);
        assert!(check_characterization(&fig.coords(), 4));
        // 1 and 2 are l_1 and r_1
        let bad = ideal(4, &[1, 2]);
        assert!(!check_characterization(&bad.coords(), 4));
    }

    #[test]
    fn flip_maps() {
        assert_eq!(f_l(pc(5, 3), 4).unwrap(), QPoint::new(5, 3));
        let q = f_r(pc(3, 3), 4).unwrap();
        assert_eq!(q, QPoint::new(10, 0));
        assert!(q.in_lower(4));
        assert_eq!(f_r(pc(0, 1), 1).unwrap(), QPoint::new(3, 0));
        assert!(matches!(
            f_l(pc(3, 3), 4),
            Err(Error::WrongSide { expected: 'L', .. })
        ));
        assert!(matches!(
            f_r(pc(5, 3), 4),
            Err(Error::WrongSide { expected: 'R', .. })
        ));
    }

    #[test]
    fn forward_examples() {
        assert_eq!(forward(&ideal(1, &[])).unwrap().heights(), &[-1, 0, -1, 0]);
        assert_eq!(forward(&ideal(1, &[1])).unwrap().heights(), &[-1, 0, 1, 0]);
        assert_eq!(
            forward(&ideal(1, &[2])).unwrap().heights(),
            &[-1, -2, -1, 0]
        );
        assert_eq!(
            forward(&ideal(1, &[4, 1])).unwrap().heights(),
            &[-1, 0, 1, 2]
        );
        assert_eq!(forward(&ideal(0, &[])).unwrap().heights(), &[-1, 0]);
        assert_eq!(
            forward(&ideal(1, &[2, 1])),
            Err(Error::AdjacentIntegers(1, 2))
        );
    }

    #[test]
    fn backward_examples() {
        assert!(backward(&bal(1, &[-1, 0, -1, 0])).is_empty());
        assert_eq!(backward(&bal(1, &[-1, 0, 1, 2])).decreasing(), vec![4, 1]);
        assert_eq!(backward(&bal(1, &[-1, -2, -1, 0])).decreasing(), vec![2]);
        assert!(backward(&bal(0, &[-1, 0])).is_empty());
    }

    #[test]
    fn balanced_validation() {
        assert!(BalancedIdeal::new(1, vec![-1, 0, -1]).is_err());
        assert!(BalancedIdeal::new(1, vec![1, 0, -1, 0]).is_err());
        assert!(BalancedIdeal::new(1, vec![-1, 0, 1, 0]).is_ok());
        assert!(BalancedIdeal::new(1, vec![-1, 0, 2, 3]).is_err());
        assert!(BalancedIdeal::new(1, vec![-3, -2, -1, -2]).is_err());
        // |h0 + h3| = 3
        assert!(BalancedIdeal::new(1, vec![-1, 0, 1, 4]).is_err());
        assert!(BalancedIdeal::new(1, vec![-3, -2, -1, 0]).is_err());
        assert!(BalancedIdeal::new(1, vec![0, 1, 0, 1]).is_err());
    }

    #[test]
    fn to_path_examples() {
        let p = to_path(&bal(1, &[-1, 0, -1, 0]));
        assert_eq!(p.to_string(), "UDU");
        assert_eq!(p.endpoint(), 1);
        let p = to_path(&bal(1, &[-1, 0, 1, 2]));
        assert_eq!(p.to_string(), "UUU");
        assert_eq!(p.endpoint(), 3);
        let p = to_path(&bal(1, &[-1, -2, -1, 0]));
        assert_eq!(p.to_string(), "DUU");
        assert_eq!(p.endpoint(), 1);
    }

    #[test]
    fn from_path_examples() {
        assert_eq!(
            from_path(&path("UUD"), 1).unwrap().heights(),
            &[-1, 0, 1, 0]
        );
        assert_eq!(
            from_path(&path("UUU"), 1).unwrap().heights(),
            &[-1, 0, 1, 2]
        );
        assert_eq!(from_path(&path("U"), 0).unwrap().heights(), &[-1, 0]);
        assert_eq!(
            from_path(&path("UDD"), 1),
            Err(Error::EndpointNotPositive(-1))
        );
        assert_eq!(
            from_path(&path("UU"), 1),
            Err(Error::LengthMismatch {
                expected: 3,
                found: 2
            })
        );
        // d = 5 shifts by 3
        assert_eq!(
            from_path(&path("UUUUU"), 2).unwrap().heights(),
            &[-3, -2, -1, 0, 1, 2]
        );
    }

    #[test]
    fn pipeline_examples() {
        assert_eq!(
            partition_to_path(&Partition::empty(), 3)
                .unwrap()
                .to_string(),
            "UDU"
        );
        assert_eq!(
            partition_to_path(&part(&[1]), 3).unwrap().to_string(),
            "UUD"
        );
        assert_eq!(
            partition_to_path(&part(&[3, 1]), 3).unwrap().to_string(),
            "UUU"
        );
        assert_eq!(path_to_partition(&path("DUU"), 3).unwrap(), part(&[2]));
        assert_eq!(
            path_to_partition(&path("UDU"), 3).unwrap(),
            Partition::empty()
        );
        assert_eq!(
            path_to_partition(&path("U"), 1).unwrap(),
            Partition::empty()
        );
        assert_eq!(
            partition_to_path(&Partition::empty(), 1)
                .unwrap()
                .to_string(),
            "U"
        );
    }

    #[test]
    fn pipeline_errors() {
        assert_eq!(
            partition_to_path(&part(&[2, 2]), 3),
            Err(Error::PartsNotDistinct)
        );
        assert_eq!(
            partition_to_path(&part(&[3]), 3),
            Err(Error::NotCore { s: 3, t: 5 })
        );
        assert_eq!(
            partition_to_path(&part(&[1]), 4),
            Err(Error::EvenOrZeroS(4))
        );
        assert_eq!(
            path_to_partition(&path("UDD"), 3),
            Err(Error::EndpointNotPositive(-1))
        );
        assert!(matches!(
            path_to_partition(&path("UUUUU"), 3),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn trace_of_15_7_6_3_1() {
        let t = trace_partition(&part(&[15, 7, 6, 3, 1]), 9).unwrap();
        assert_eq!(t.beta_set.hooks(), &[19, 10, 8, 4, 1]);
        assert_eq!(t.ideal, vec![19, 10, 8, 4, 1]);
        let back = path_to_partition(&t.path.parse().unwrap(), 9).unwrap();
        assert_eq!(back, part(&[15, 7, 6, 3, 1]));
    }

    #[test]
    fn positive_ending_paths() {
        let all: Vec<String> = LatticePath::positive_ending(3)
            .map(|p| p.to_string())
            .collect();
        assert_eq!(all, vec!["UUU", "UUD", "UDU", "DUU"]);
        assert_eq!(LatticePath::positive_ending(1).count(), 1);
    }

    #[test]
    fn contains_matches_heights() {
        let j = bal(1, &[-1, 0, 1, 0]);
        // psi(1) = (2, 0) sits at position 2 with height 1
        assert!(j.contains(QPoint::new(2, 0)));
        assert!(!j.contains(QPoint::new(1, -1)));
        assert_eq!(j.top_at(2), QPoint::new(2, 0));
        assert!(!j.contains(QPoint::new(10, 10)));
    }
}
