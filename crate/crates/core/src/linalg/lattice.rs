//! Integer lattices: Hermite normal form, Smith invariants, determinants and
//! indices of sublattices.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// A sublattice of `Z^k` stored by its row-style Hermite normal form basis:
/// pivots strictly increase to the right, are positive, and every entry
/// above a pivot lies in `[0, pivot)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntegerLatticeBasis {
    ambient: usize,
    basis: Vec<Vec<BigInt>>,
}

impl IntegerLatticeBasis {
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    fn pivot_col(row: &[BigInt]) -> usize {
        row.iter().position(|x| !x.is_zero()).expect("HNF rows are nonzero")
    }

    /// Integer coordinates of `v` in the HNF basis, or `None` if `v` is not
    /// in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.ambient);
        let mut r = v.to_vec();
        let mut coords = Vec::with_capacity(self.basis.len());
        for row in &self.basis {
            let p = Self::pivot_col(row);
            if r[..p].iter().any(|x| !x.is_zero()) {
                return None;
            }
            let (q, rem) = r[p].div_rem(&row[p]);
            if !rem.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (x, b) in r.iter_mut().zip(row) {
                    *x -= &q * b;
                }
            }
            coords.push(q);
        }
        r.iter().all(|x| x.is_zero()).then_some(coords)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn scaled(&self, k: i64) -> IntegerLatticeBasis {
        let k = BigInt::from(k);
        let rows: Vec<_> = self.basis.iter().map(|r| r.iter().map(|x| x * &k).collect()).collect();
        hnf(self.ambient, &rows)
    }
}

impl fmt::Display for IntegerLatticeBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank {} in Z^{}:", self.rank(), self.ambient)?;
        for r in &self.basis {
            let s: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            write!(f, " ({})", s.join(","))?;
        }
        Ok(())
    }
}

/// Hermite normal form basis of the Z-span of `vectors` in `Z^ambient`.
pub fn hnf(ambient: usize, vectors: &[Vec<BigInt>]) -> IntegerLatticeBasis {
    let mut rows: Vec<Vec<BigInt>> = vectors
        .iter()
        .inspect(|v| assert_eq!(v.len(), ambient, "vector length mismatch"))
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let mut r = 0;
    for c in 0..ambient {
        if r == rows.len() {
            break;
        }
        // Euclid on column c among rows r.. until a single nonzero remains.
        loop {
            let best = (r..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()).then(a.cmp(&b)));
            let Some(best) = best else { break };
            rows.swap(r, best);
            let mut done = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                let (head, tail) = rows.split_at_mut(i);
                for (x, y) in tail[0].iter_mut().zip(&head[r]) {
                    *x -= &q * y;
                }
                if !rows[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if rows[r][c].is_zero() {
            continue;
        }
        if rows[r][c].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = rows[i][c].div_floor(&rows[r][c]);
            if q.is_zero() {
                continue;
            }
            let (head, tail) = rows.split_at_mut(r);
            for (x, y) in head[i].iter_mut().zip(&tail[0]) {
                *x -= &q * y;
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows.retain(|v| v.iter().any(|x| !x.is_zero()));
    IntegerLatticeBasis { ambient, basis: rows }
}

pub fn hnf_i64(ambient: usize, vectors: &[Vec<i64>]) -> IntegerLatticeBasis {
    let v: Vec<Vec<BigInt>> =
        vectors.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    hnf(ambient, &v)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum LatticeIndex {
    Finite(#[serde(serialize_with = "crate::report::ser_bigint")] BigInt),
    Infinite,
}

impl fmt::Display for LatticeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeIndex::Finite(k) => write!(f, "{k}"),
            LatticeIndex::Infinite => f.write_str("infinite"),
        }
    }
}

/// `[sup : sub]`.
pub fn lattice_index(sub: &IntegerLatticeBasis, sup: &IntegerLatticeBasis) -> Result<LatticeIndex> {
    if sub.ambient != sup.ambient {
        return Err(Error::Containment("ambient dimensions differ".into()));
    }
    let mut coords = Vec::with_capacity(sub.rank());
    for v in &sub.basis {
        let c = sup.coordinates(v).ok_or_else(|| {
            Error::Containment(format!("vector {v:?} is not in the super-lattice"))
        })?;
        coords.push(c);
    }
    if sub.rank() < sup.rank() {
        return Ok(LatticeIndex::Infinite);
    }
    Ok(LatticeIndex::Finite(determinant(&coords).abs()))
}

/// Determinant of a square integer matrix by fraction-free elimination.
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Smith invariant factors `d_1 | d_2 | ...`, `min(rows, cols)` of them
/// (trailing zeros included).
pub fn smith_diagonal(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j].is_zero() {
                        continue;
                    }
                    if best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                diag.resize(rows.min(cols), BigInt::zero());
                return diag;
            };
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
            let mut dirty = false;
            for i in t + 1..rows {
                let q = a[i][t].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for j in t..cols {
                        let v = &a[t][j] * &q;
                        a[i][j] -= v;
                    }
                }
                dirty |= !a[i][t].is_zero();
            }
            for j in t + 1..cols {
                let q = a[t][j].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for row in a.iter_mut().skip(t) {
                        let v = &row[t] * &q;
                        row[j] -= v;
                    }
                }
                dirty |= !a[t][j].is_zero();
            }
            if dirty {
                continue;
            }
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a[i][j].is_multiple_of(&a[t][t]));
            match bad {
                Some((i, _)) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn hnf_examples() {
        let l = hnf(2, &b(&[&[2, 0], &[0, 2]]));
        assert_eq!(l.basis(), b(&[&[2, 0], &[0, 2]]).as_slice());
        let l = hnf(2, &b(&[&[1, 0], &[0, 1], &[1, 1]]));
        assert_eq!(l.basis(), b(&[&[1, 0], &[0, 1]]).as_slice());
        let l = hnf(2, &b(&[&[3, 5], &[1, 2]]));
        assert_eq!(l.basis(), b(&[&[1, 0], &[0, 1]]).as_slice());
        let l = hnf(3, &b(&[&[0, 0, 0]]));
        assert_eq!(l.rank(), 0);
    }

    #[test]
    fn hnf_reduces_above_pivots() {
        let l = hnf(2, &b(&[&[1, 7], &[0, 3]]));
        assert_eq!(l.basis(), b(&[&[1, 1], &[0, 3]]).as_slice());
    }

    #[test]
    fn index_examples() {
        let z2 = hnf(2, &b(&[&[1, 0], &[0, 1]]));
        assert_eq!(lattice_index(&z2, &z2).unwrap(), LatticeIndex::Finite(1.into()));
        let sub = hnf(2, &b(&[&[2, 0], &[0, 1]]));
        assert_eq!(lattice_index(&sub, &z2).unwrap(), LatticeIndex::Finite(2.into()));
        let line = hnf(2, &b(&[&[1, 1]]));
        assert_eq!(lattice_index(&line, &z2).unwrap(), LatticeIndex::Infinite);
        assert!(matches!(lattice_index(&z2, &sub), Err(Error::Containment(_))));
    }

    #[test]
    fn smith_examples() {
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(smith_diagonal(&b(&[&[1, 0], &[0, 1]])), ints(&[1, 1]));
        assert_eq!(smith_diagonal(&b(&[&[2, 0], &[0, 2]])), ints(&[2, 2]));
        assert_eq!(smith_diagonal(&b(&[&[1, 1], &[1, -1]])), ints(&[1, 2]));
        assert_eq!(smith_diagonal(&b(&[&[2, 0], &[0, 3]])), ints(&[1, 6]));
        assert_eq!(smith_diagonal(&b(&[&[0, 0], &[0, 0]])), ints(&[0, 0]));
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&b(&[&[0, -1], &[2, 1]])), BigInt::from(2));
        assert_eq!(determinant(&b(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 5]])), BigInt::from(-5));
        assert_eq!(determinant(&b(&[&[1, 2], &[2, 4]])), BigInt::zero());
    }
}
