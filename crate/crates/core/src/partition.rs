//! Partitions `n+1 = a_1 + ... + a_s` with `n-1 >= a_1 >= ... >= a_s >= 1`.

use std::fmt;
use std::ops::Range;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{invalid, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PartitionSpec {
    parts: Vec<usize>,
    n: usize,
}

impl PartitionSpec {
    /// `n` is read off as `sum(parts) - 1`.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let total: usize = parts.iter().sum();
        if parts.is_empty() || total < 3 {
            return Err(invalid(format!("{parts:?} is not a partition of some n+1 >= 3")));
        }
        Self::with_n(parts, total - 1)
    }

    pub fn with_n(parts: Vec<usize>, n: usize) -> Result<Self> {
        if parts.iter().any(|&a| a == 0) {
            return Err(invalid(format!("parts must be positive: {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid(format!("parts must be non-increasing: {parts:?}")));
        }
        if parts.iter().sum::<usize>() != n + 1 {
            return Err(invalid(format!("parts {parts:?} do not sum to n+1 = {}", n + 1)));
        }
        if n < 2 || parts[0] > n - 1 {
            return Err(invalid(format!("largest part must be at most n-1 = {}", n as isize - 1)));
        }
        Ok(PartitionSpec { parts, n })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Contiguous index ranges of the variable groups, in part order.
    pub fn groups(&self) -> Vec<Range<usize>> {
        let mut start = 0;
        self.parts
            .iter()
            .map(|&a| {
                let r = start..start + a;
                start += a;
                r
            })
            .collect()
    }

    /// Group index of every variable.
    pub fn group_of(&self) -> Vec<usize> {
        self.groups()
            .into_iter()
            .enumerate()
            .flat_map(|(g, r)| r.map(move |_| g))
            .collect()
    }
}

impl fmt::Display for PartitionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

impl fmt::Debug for PartitionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartitionSpec{self} n={}", self.n)
    }
}

/// Every non-increasing partition of `total` whose parts are at most `max_part`.
pub fn partitions_bounded(total: usize, max_part: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for a in (1..=cap.min(left)).rev() {
            cur.push(a);
            rec(left - a, a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, max_part, &mut Vec::new(), &mut out);
    out
}

/// All valid partition specs for a given `n >= 2`.
pub fn valid_partitions(n: usize) -> Vec<PartitionSpec> {
    if n < 2 {
        return Vec::new();
    }
    partitions_bounded(n + 1, n - 1)
        .into_iter()
        .map(|p| PartitionSpec::with_n(p, n).expect("enumerated partitions are valid"))
        .collect()
}
