//! Fraction-free (Bareiss) rank of small integer matrices, in `i64` with a
//! retry in `i128` on overflow.

/// Exact rank, or `None` if an intermediate minor overflows `i128`.
pub fn rank_bareiss(rows: &[Vec<i64>], cols: usize) -> Option<usize> {
    let narrow: Vec<Vec<i64>> = rows.to_vec();
    bareiss(narrow, cols).or_else(|| bareiss(rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect(), cols))
}

trait Entry: Copy + Eq {
    const ZERO: Self;
    const ONE: Self;
    fn checked_mul(self, o: Self) -> Option<Self>;
    fn checked_sub(self, o: Self) -> Option<Self>;
    fn div(self, o: Self) -> Self;
}

macro_rules! entry {
    ($t:ty) => {
        impl Entry for $t {
            const ZERO: Self = 0;
            const ONE: Self = 1;
            fn checked_mul(self, o: Self) -> Option<Self> {
                <$t>::checked_mul(self, o)
            }
            fn checked_sub(self, o: Self) -> Option<Self> {
                <$t>::checked_sub(self, o)
            }
            fn div(self, o: Self) -> Self {
                self / o
            }
        }
    };
}

entry!(i64);
entry!(i128);

fn bareiss<T: Entry>(mut m: Vec<Vec<T>>, cols: usize) -> Option<usize> {
    let mut rank = 0;
    let mut prev = T::ONE;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][c] != T::ZERO) else {
            continue;
        };
        m.swap(rank, piv);
        let p = m[rank][c];
        for i in rank + 1..m.len() {
            let f = m[i][c];
            for j in c..cols {
                let v = p.checked_mul(m[i][j])?.checked_sub(f.checked_mul(m[rank][j])?)?;
                m[i][j] = v.div(prev);
            }
        }
        prev = p;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    Some(rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        assert_eq!(rank_bareiss(&[vec![1, 2], vec![2, 4]], 2), Some(1));
        assert_eq!(rank_bareiss(&[vec![0, 3], vec![3, 0], vec![1, 1]], 2), Some(2));
        assert_eq!(rank_bareiss(&[], 3), Some(0));
        assert_eq!(rank_bareiss(&[vec![2, 1, 0], vec![4, 2, 0], vec![0, 0, 0]], 3), Some(1));
    }

    #[test]
    fn overflow_is_reported() {
        // Entries near i64::MAX overflow i64 at once and i128 one step later.
        let big = i64::MAX;
        let rows = vec![vec![big, 1, 0], vec![1, big, 1], vec![0, 1, big]];
        assert_eq!(rank_bareiss(&rows, 3), None);
    }
}
