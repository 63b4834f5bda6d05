//! Partitions, the local column shapes, and the two grain-moving rules.
//!
//! Columns are numbered from 1. Reading a column past the last part yields 0,
//! so every shape test is total over column indices.

use std::fmt;
use std::str::FromStr;

use crate::error::PartitionError;

/// A partition of an integer: a nonincreasing sequence of positive parts.
///
/// The stored form never carries zero parts, so two partitions are equal
/// exactly when their part sequences are.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

/// Local shape of a partition at one column.
///
/// Plateau and step lengths count the columns of the equal-height run, so a
/// run of a single column has length 1. A slippery step always has length at
/// least 2; the length-1 case is a cliff.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ColumnShape {
    Cliff,
    SlipperyPlateau(usize),
    NonSlipperyPlateau(usize),
    SlipperyStep(usize),
    NonSlipperyStep(usize),
    None,
}

/// One application of a rule: a grain leaves column `label` of `source`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transition {
    pub source: Partition,
    pub label: usize,
    pub target: Partition,
}

#[inline]
pub(crate) fn part_at(parts: &[u32], column: usize) -> u32 {
    if column == 0 {
        return 0;
    }
    parts.get(column - 1).copied().unwrap_or(0)
}

pub(crate) fn is_nonincreasing(parts: &[u32]) -> bool {
    parts.windows(2).all(|w| w[0] >= w[1])
}

pub(crate) fn strip_zeros(parts: &mut Vec<u32>) {
    while parts.last() == Some(&0) {
        parts.pop();
    }
}

/// Run of equal columns starting at `column`: its length and the drop after it.
fn run_from(parts: &[u32], column: usize, height: u32) -> (usize, u32) {
    let mut len = 1;
    while part_at(parts, column + len) == height {
        len += 1;
    }
    (len, height - part_at(parts, column + len))
}

fn plateau_from(parts: &[u32], column: usize) -> ColumnShape {
    let height = part_at(parts, column);
    if height == 0 {
        return ColumnShape::None;
    }
    match run_from(parts, column, height) {
        (len, 1) => ColumnShape::SlipperyPlateau(len),
        (len, _) => ColumnShape::NonSlipperyPlateau(len),
    }
}

pub(crate) fn shape_at(parts: &[u32], column: usize) -> ColumnShape {
    let height = part_at(parts, column);
    if height == 0 {
        return ColumnShape::None;
    }
    match height - part_at(parts, column + 1) {
        0 => plateau_from(parts, column),
        1 if height == 1 => ColumnShape::SlipperyPlateau(1),
        1 => {
            // With one grain removed the column joins the run to its right.
            let lowered = height - 1;
            let mut len = 1;
            while part_at(parts, column + len) == lowered {
                len += 1;
            }
            match lowered - part_at(parts, column + len) {
                1 => ColumnShape::SlipperyStep(len),
                _ => ColumnShape::NonSlipperyStep(len),
            }
        }
        _ => ColumnShape::Cliff,
    }
}

/// Columns `(from, to)` of every grain move allowed by the two rules.
pub(crate) fn moves(parts: &[u32]) -> impl Iterator<Item = (usize, usize)> + '_ {
    (1..=parts.len()).filter_map(move |column| match shape_at(parts, column) {
        ColumnShape::Cliff => Some((column, column + 1)),
        ColumnShape::SlipperyStep(len) => Some((column, column + len)),
        _ => None,
    })
}

pub(crate) fn move_grain(parts: &[u32], from: usize, to: usize) -> Vec<u32> {
    let mut out = parts.to_vec();
    if out.len() < to {
        out.resize(to, 0);
    }
    out[from - 1] -= 1;
    out[to - 1] += 1;
    strip_zeros(&mut out);
    out
}

impl Partition {
    /// Canonicalizes `values`: trailing zeros are dropped, and any increase
    /// among the remaining entries is rejected.
    pub fn new(values: impl Into<Vec<u32>>) -> Result<Self, PartitionError> {
        let mut parts = values.into();
        strip_zeros(&mut parts);
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(PartitionError::NotNonincreasing {
                index: i + 2,
                value: parts[i + 1],
            });
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-part partition `(n)`, or the empty partition for `n = 0`.
    pub fn single(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// `(1, 1, ..., 1)` with `k` parts.
    pub fn ones(k: usize) -> Self {
        Partition(vec![1; k])
    }

    pub(crate) fn from_canonical(parts: Vec<u32>) -> Self {
        debug_assert!(is_nonincreasing(&parts) && parts.last() != Some(&0));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// The partitioned integer.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part at 1-based `column`, 0 past the end.
    pub fn part(&self, column: usize) -> u32 {
        part_at(&self.0, column)
    }

    /// `d_i(s) = s_i - s_{i+1}`.
    pub fn height_diff(&self, column: usize) -> u32 {
        self.part(column) - self.part(column + 1)
    }

    /// Shape of the run of equal columns at the start of the partition.
    pub fn leading_plateau(&self) -> ColumnShape {
        plateau_from(&self.0, 1)
    }

    /// Shape at `column`; exactly one kind applies.
    pub fn classify_at(&self, column: usize) -> Result<ColumnShape, PartitionError> {
        self.check_column(column, self.len())?;
        Ok(shape_at(&self.0, column))
    }

    /// All transitions out of `self`, ordered by label.
    pub fn transitions(&self) -> Vec<Transition> {
        moves(&self.0)
            .map(|(from, to)| Transition {
                source: self.clone(),
                label: from,
                target: Partition(move_grain(&self.0, from, to)),
            })
            .collect()
    }

    /// The tuple with one grain added on `column`. It may increase somewhere;
    /// use [`Partition::with_grain`] for a checked version.
    pub fn add_grain(&self, column: usize) -> Result<Vec<u32>, PartitionError> {
        self.check_column(column, self.len() + 1)?;
        let mut raw = self.0.clone();
        if column > raw.len() {
            raw.push(0);
        }
        raw[column - 1] += 1;
        Ok(raw)
    }

    /// `s↓column` when it is again a partition.
    pub fn with_grain(&self, column: usize) -> Option<Partition> {
        let raw = self.add_grain(column).ok()?;
        is_nonincreasing(&raw).then_some(Partition(raw))
    }

    /// The partition with one grain removed from `column`, when valid.
    pub fn without_grain(&self, column: usize) -> Option<Partition> {
        if column == 0 || column > self.len() {
            return None;
        }
        let mut raw = self.0.clone();
        raw[column - 1] -= 1;
        if !is_nonincreasing(&raw) {
            return None;
        }
        strip_zeros(&mut raw);
        Some(Partition(raw))
    }

    /// Dominance order: `self ≤ other` iff every prefix sum of `self` is at
    /// most the matching prefix sum of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool, PartitionError> {
        check_weights(self, other)?;
        let mut a = 0u64;
        let mut b = 0u64;
        for j in 1..=self.len().max(other.len()) {
            a += u64::from(self.part(j));
            b += u64::from(other.part(j));
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ferrers diagram, one column of `#` per part, bottom aligned.
    pub fn render_ferrers(&self) -> String {
        let height = self.part(1);
        let mut out = String::new();
        for row in (1..=height).rev() {
            let line: String = self
                .0
                .iter()
                .map(|&p| if p >= row { '#' } else { ' ' })
                .collect();
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    fn check_column(&self, column: usize, max: usize) -> Result<(), PartitionError> {
        if column == 0 || column > max {
            return Err(PartitionError::ColumnOutOfRange {
                column,
                min: 1,
                max,
            });
        }
        Ok(())
    }
}

pub(crate) fn check_weights(s: &Partition, t: &Partition) -> Result<(), PartitionError> {
    let (left, right) = (s.weight(), t.weight());
    if left != right {
        return Err(PartitionError::WeightMismatch { left, right });
    }
    Ok(())
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "0" {
            return Ok(Partition::empty());
        }
        let values = trimmed
            .split(',')
            .map(|v| v.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| PartitionError::Parse {
                text: text.to_string(),
                reason: e.to_string(),
            })?;
        Partition::new(values)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;

    fn try_from(values: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(values)
    }
}

impl fmt::Display for Transition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -{}-> {}", self.source, self.label, self.target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn canonical_form() {
        let s = p(&[3, 1, 0, 0]);
        assert_eq!(s.parts(), &[3, 1]);
        assert_eq!(s.weight(), 4);
        assert_eq!(p(&[]).weight(), 0);
        assert!(matches!(
            Partition::new(vec![2, 3, 1]),
            Err(PartitionError::NotNonincreasing { .. })
        ));
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        let msg = Partition::new(vec![2, 3, 1]).unwrap_err().to_string();
        assert!(msg.contains("not nonincreasing"), "{msg}");
    }

    #[test]
    fn height_differences() {
        let s = p(&[3, 1]);
        assert_eq!(s.height_diff(1), 2);
        assert_eq!(s.height_diff(2), 1);
        assert_eq!(s.height_diff(5), 0);
    }

    #[test]
    fn leading_plateaus() {
        assert_eq!(p(&[1]).leading_plateau(), ColumnShape::SlipperyPlateau(1));
        assert_eq!(p(&[1, 1]).leading_plateau(), ColumnShape::SlipperyPlateau(2));
        assert_eq!(p(&[2, 2]).leading_plateau(), ColumnShape::NonSlipperyPlateau(2));
        assert_eq!(p(&[]).leading_plateau(), ColumnShape::None);
    }

    #[test]
    fn shapes() {
        assert_eq!(p(&[3, 1]).classify_at(1).unwrap(), ColumnShape::Cliff);
        assert_eq!(p(&[2, 1]).classify_at(1).unwrap(), ColumnShape::SlipperyStep(2));
        assert_eq!(p(&[4, 1]).classify_at(1).unwrap(), ColumnShape::Cliff);
        assert_eq!(p(&[4, 3, 1]).classify_at(1).unwrap(), ColumnShape::NonSlipperyStep(2));
        assert_eq!(p(&[2, 1]).classify_at(2).unwrap(), ColumnShape::SlipperyPlateau(1));
        assert!(p(&[2, 1]).classify_at(3).is_err());
        assert!(p(&[2, 1]).classify_at(0).is_err());
    }

    #[test]
    fn cliff_takes_precedence_over_steps() {
        // (4,1) lowered at 1 is (3,1), but d_1 = 3 already makes column 1 a cliff.
        assert_eq!(p(&[4, 1]).classify_at(1).unwrap(), ColumnShape::Cliff);
        assert_eq!(p(&[3, 2]).classify_at(1).unwrap(), ColumnShape::NonSlipperyStep(2));
    }

    #[test]
    fn transition_sets() {
        let t = p(&[4]).transitions();
        assert_eq!(t.len(), 1);
        assert_eq!((t[0].label, t[0].target.clone()), (1, p(&[3, 1])));

        let t: Vec<_> = p(&[4, 2, 1])
            .transitions()
            .into_iter()
            .map(|t| (t.label, t.target))
            .collect();
        assert_eq!(t, vec![(1, p(&[3, 3, 1])), (2, p(&[4, 1, 1, 1]))]);

        assert!(p(&[1, 1, 1]).transitions().is_empty());
    }

    #[test]
    fn grain_addition() {
        assert_eq!(p(&[2, 1]).add_grain(1).unwrap(), vec![3, 1]);
        assert_eq!(p(&[2, 1]).add_grain(3).unwrap(), vec![2, 1, 1]);
        assert_eq!(p(&[1, 1]).add_grain(2).unwrap(), vec![1, 2]);
        assert!(p(&[1, 1]).with_grain(2).is_none());
        assert!(p(&[1, 1]).add_grain(4).is_err());
        assert_eq!(p(&[]).with_grain(1), Some(p(&[1])));
    }

    #[test]
    fn dominance() {
        assert!(p(&[3, 3, 1]).dominance_leq(&p(&[4, 2, 1])).unwrap());
        assert!(p(&[2, 2]).dominance_leq(&p(&[2, 2])).unwrap());
        assert!(p(&[2, 1, 1]).dominance_leq(&p(&[3, 1])).unwrap());
        assert!(!p(&[3, 1]).dominance_leq(&p(&[2, 1, 1])).unwrap());
        assert!(!p(&[3, 3]).dominance_leq(&p(&[4, 1, 1])).unwrap());
        assert!(!p(&[4, 1, 1]).dominance_leq(&p(&[3, 3])).unwrap());
        assert!(matches!(
            p(&[3]).dominance_leq(&p(&[2])),
            Err(PartitionError::WeightMismatch { left: 3, right: 2 })
        ));
    }

    #[test]
    fn ferrers() {
        assert_eq!(p(&[2, 1]).render_ferrers(), "#\n##\n");
        assert_eq!(p(&[]).render_ferrers(), "");
        assert_eq!(p(&[3, 3, 1]).render_ferrers(), "##\n##\n###\n");
    }

    #[test]
    fn text_form() {
        assert_eq!(p(&[4, 2, 1]).to_string(), "4,2,1");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!("4,2,1".parse::<Partition>().unwrap(), p(&[4, 2, 1]));
        assert_eq!("0".parse::<Partition>().unwrap(), p(&[]));
        assert!("1,x".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
    }
}
