//! Core domain types: requirement tuples, canonical codewords, and
//! distance-vector computation.
//!
//! A codeword is a length-`n` cyclic binary sequence of weight `omega`,
//! stored as its one-positions. Rotations of a sequence are the same code,
//! so every codeword is kept in a canonical rotation: the first one sits at
//! chip 0 and the cyclic gap sequence between consecutive ones is the
//! lexicographically smallest among its rotations.

use std::fmt;

use itertools::Itertools;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// The parameter tuple (n, omega, lambda_a, lambda_c) a code family must meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Requirement {
    n: u32,
    omega: u32,
    lambda_a: u32,
    lambda_c: u32,
}

impl Requirement {
    /// Validates and builds a requirement.
    ///
    /// A weight-`omega` code coincides with itself in `omega` chips at zero
    /// shift, so both correlation limits must lie strictly below the weight.
    pub fn new(n: u32, omega: u32, lambda_a: u32, lambda_c: u32) -> Result<Self, Error> {
        if omega < 2 || omega > n {
            return Err(Error::WeightOutOfRange { omega, n });
        }
        if lambda_a < 1 || lambda_a >= omega {
            return Err(Error::LambdaOutOfRange { lambda: lambda_a, omega });
        }
        if lambda_c < 1 || lambda_c >= omega {
            return Err(Error::LambdaOutOfRange { lambda: lambda_c, omega });
        }
        Ok(Self { n, omega, lambda_a, lambda_c })
    }

    /// Code length in chips.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Code weight (number of '1' chips).
    pub fn omega(&self) -> u32 {
        self.omega
    }

    /// Auto-correlation limit.
    pub fn lambda_a(&self) -> u32 {
        self.lambda_a
    }

    /// Cross-correlation limit.
    pub fn lambda_c(&self) -> u32 {
        self.lambda_c
    }
}

impl fmt::Display for Requirement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.n, self.omega, self.lambda_a, self.lambda_c)
    }
}

/// Folds a raw cyclic gap onto the diameter: `min(x, n - x)`.
///
/// Chips can be counted around the cycle in either direction; the distance
/// between two ones is the smaller count, so it never exceeds `floor(n/2)`.
pub fn fold_distance(gap: u32, n: u32) -> Result<u32, Error> {
    if gap == 0 || gap >= n {
        return Err(Error::GapOutOfRange { gap, n });
    }
    Ok(gap.min(n - gap))
}

/// A weight-`omega` cyclic binary codeword in canonical rotation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Codeword {
    n: u32,
    positions: Vec<u32>,
}

impl Codeword {
    /// Builds the canonical representative of the rotation class of
    /// `raw_positions`. Any two rotations of the same set canonicalize to
    /// the same codeword.
    pub fn canonicalize(n: u32, raw_positions: &[u32]) -> Result<Self, Error> {
        if raw_positions.is_empty() {
            return Err(Error::EmptyPositions);
        }
        let mut sorted = raw_positions.to_vec();
        sorted.sort_unstable();
        for &p in &sorted {
            if p >= n {
                return Err(Error::PositionOutOfRange { position: p, n });
            }
        }
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicatePosition { position: pair[0] });
            }
        }

        let gaps = gaps_of_sorted(n, &sorted);
        let start = min_rotation_index(&gaps);
        let mut positions = Vec::with_capacity(sorted.len());
        let mut acc = 0u32;
        positions.push(0);
        for i in 0..gaps.len() - 1 {
            acc += gaps[(start + i) % gaps.len()];
            positions.push(acc);
        }
        Ok(Self { n, positions })
    }

    /// Builds a codeword whose positions are already canonical.
    pub(crate) fn from_canonical_parts(n: u32, positions: Vec<u32>) -> Self {
        debug_assert_eq!(positions.first(), Some(&0));
        debug_assert!(positions.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(positions.last().copied().unwrap_or(0) < n);
        debug_assert!(is_min_rotation(&gaps_of_sorted(n, &positions)));
        Self { n, positions }
    }

    /// Parses the text form: exactly `n` chips from {0,1}, chip 0 leftmost.
    /// The result is canonicalized, so any rotation parses to the same code.
    pub fn from_bitstring(s: &str) -> Result<Self, Error> {
        let mut positions = Vec::new();
        let mut n = 0u32;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => positions.push(i as u32),
                other => {
                    return Err(Error::InvalidBitstring(format!(
                        "unexpected character {other:?} at chip {i}"
                    )))
                }
            }
            n += 1;
        }
        if n == 0 {
            return Err(Error::InvalidBitstring("empty string".to_string()));
        }
        if positions.is_empty() {
            return Err(Error::InvalidBitstring("no '1' chips".to_string()));
        }
        Self::canonicalize(n, &positions)
    }

    /// Renders the chips with chip 0 leftmost.
    pub fn to_bitstring(&self) -> String {
        let mut chips = vec![b'0'; self.n as usize];
        for &p in &self.positions {
            chips[p as usize] = b'1';
        }
        String::from_utf8(chips).expect("ascii")
    }

    /// Code length in chips.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of '1' chips.
    pub fn weight(&self) -> u32 {
        self.positions.len() as u32
    }

    /// One-positions in strictly increasing order; the first is always 0.
    pub fn positions(&self) -> &[u32] {
        &self.positions
    }

    /// The cyclic gap sequence between consecutive ones (sums to `n`).
    pub fn gaps(&self) -> Vec<u32> {
        gaps_of_sorted(self.n, &self.positions)
    }

    /// The raw one-positions after rotating every chip by `shift`.
    /// Canonicalizing the result gives back `self`.
    pub fn rotated_positions(&self, shift: u32) -> Vec<u32> {
        self.positions.iter().map(|&p| (p + shift) % self.n).collect()
    }

    /// The canonical mirror image (`p -> n - p mod n`). Reflection preserves
    /// every pairwise distance, so the distance vector is unchanged.
    pub fn reflected(&self) -> Codeword {
        let raw: Vec<u32> = self.positions.iter().map(|&p| (self.n - p) % self.n).collect();
        Self::canonicalize(self.n, &raw).expect("reflection of a valid codeword is valid")
    }

    /// The multiset of folded distances over all pairs of ones.
    pub fn distance_vector(&self) -> DistanceVector {
        DistanceVector::from_positions(self.n, &self.positions)
    }

    /// The ordered list of per-subcode distance vectors: one entry per
    /// `(lambda + 1)`-subset of the one-positions, subsets in lexicographic
    /// order of position indices, each entry sorted nondecreasing.
    pub fn lambda_distance_vector(&self, lambda: u32) -> Result<LambdaDistanceVector, Error> {
        let omega = self.weight();
        if lambda < 1 || lambda >= omega {
            return Err(Error::LambdaOutOfRange { lambda, omega });
        }
        let k = (lambda + 1) as usize;
        let subvectors = (0..self.positions.len())
            .combinations(k)
            .map(|subset| {
                let sub: Vec<u32> = subset.iter().map(|&i| self.positions[i]).collect();
                DistanceVector::from_positions(self.n, &sub)
            })
            .collect();
        Ok(LambdaDistanceVector { lambda, subvectors })
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut next = 0usize;
        for chip in 0..self.n {
            if next < self.positions.len() && self.positions[next] == chip {
                f.write_str("1")?;
                next += 1;
            } else {
                f.write_str("0")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Codeword {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut state = serializer.serialize_struct("Codeword", 2)?;
        state.serialize_field("n", &self.n)?;
        state.serialize_field("positions", &self.positions)?;
        state.end()
    }
}

impl<'de> Deserialize<'de> for Codeword {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: u32,
            positions: Vec<u32>,
        }
        let raw = Raw::deserialize(deserializer)?;
        Codeword::canonicalize(raw.n, &raw.positions).map_err(D::Error::custom)
    }
}

/// The multiset of folded pairwise distances of a (sub)code's ones.
/// Stored sorted nondecreasing; every element lies in `[1, floor(n/2)]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DistanceVector {
    distances: Vec<u32>,
}

impl DistanceVector {
    fn from_positions(n: u32, positions: &[u32]) -> Self {
        let mut distances = Vec::with_capacity(positions.len() * (positions.len() - 1) / 2);
        for (i, &a) in positions.iter().enumerate() {
            for &b in &positions[i + 1..] {
                let raw = b - a;
                distances.push(raw.min(n - raw));
            }
        }
        distances.sort_unstable();
        Self { distances }
    }

    /// The elements, sorted nondecreasing.
    pub fn distances(&self) -> &[u32] {
        &self.distances
    }

    pub fn len(&self) -> usize {
        self.distances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.distances.is_empty()
    }

    /// True if some element occurs more than once.
    pub fn has_repeated_element(&self) -> bool {
        self.distances.windows(2).any(|w| w[0] == w[1])
    }

    pub fn contains(&self, distance: u32) -> bool {
        self.distances.binary_search(&distance).is_ok()
    }

    /// True if the two multisets share any element (sorted merge).
    pub fn shares_element_with(&self, other: &DistanceVector) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.distances.len() && j < other.distances.len() {
            match self.distances[i].cmp(&other.distances[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }
}

/// The per-subcode distance structure of a codeword at correlation order
/// `lambda`: one distance vector per `(lambda + 1)`-subset of ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaDistanceVector {
    lambda: u32,
    subvectors: Vec<DistanceVector>,
}

impl LambdaDistanceVector {
    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    /// Subvectors in lexicographic subset order.
    pub fn subvectors(&self) -> &[DistanceVector] {
        &self.subvectors
    }

    /// Subvectors sorted, for order-insensitive comparisons.
    pub fn sorted_subvectors(&self) -> Vec<&DistanceVector> {
        let mut refs: Vec<&DistanceVector> = self.subvectors.iter().collect();
        refs.sort_unstable();
        refs
    }

    /// True if two subsets produced identical sorted distance tuples.
    pub fn has_repeated_subvector(&self) -> bool {
        let sorted = self.sorted_subvectors();
        sorted.windows(2).any(|w| w[0] == w[1])
    }

    /// True if any subvector of `self` equals any subvector of `other`.
    pub fn shares_subvector_with(&self, other: &LambdaDistanceVector) -> bool {
        let a = self.sorted_subvectors();
        let b = other.sorted_subvectors();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }
}

fn gaps_of_sorted(n: u32, sorted: &[u32]) -> Vec<u32> {
    let mut gaps = Vec::with_capacity(sorted.len());
    for pair in sorted.windows(2) {
        gaps.push(pair[1] - pair[0]);
    }
    gaps.push(n - sorted[sorted.len() - 1] + sorted[0]);
    gaps
}

/// Index of the lexicographically smallest rotation of `seq` (naive scan;
/// sequences here have at most `omega` entries).
fn min_rotation_index(seq: &[u32]) -> usize {
    let k = seq.len();
    let mut best = 0;
    for cand in 1..k {
        for i in 0..k {
            let a = seq[(cand + i) % k];
            let b = seq[(best + i) % k];
            if a < b {
                best = cand;
                break;
            }
            if a > b {
                break;
            }
        }
    }
    best
}

/// True if `seq` is lexicographically no larger than every rotation of itself.
pub(crate) fn is_min_rotation(seq: &[u32]) -> bool {
    let k = seq.len();
    for cand in 1..k {
        for i in 0..k {
            let a = seq[(cand + i) % k];
            let b = seq[i];
            if a < b {
                return false;
            }
            if a > b {
                break;
            }
        }
    }
    true
}
