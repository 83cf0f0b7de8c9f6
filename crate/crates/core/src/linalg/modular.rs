//! Rank modulo a prime. Only ever used as a pre-screen: the rank mod p is a
//! lower bound for the rank over Q, so a full rank mod p is conclusive.

pub const SCREEN_PRIME: u64 = 2_147_483_647; // 2^31 - 1

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    if p <= u32::MAX as u64 {
        a * b % p
    } else {
        ((a as u128 * b as u128) % p as u128) as u64
    }
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

pub fn rank_mod_p(rows: &[Vec<i64>], cols: usize, p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| (x as i128).rem_euclid(p as i128) as u64).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = powmod(m[rank][c], p - 2, p);
        for j in c..cols {
            m[rank][j] = mulmod(m[rank][j], inv, p);
        }
        for i in rank + 1..m.len() {
            let f = m[i][c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                let sub = mulmod(f, m[rank][j], p);
                m[i][j] = (m[i][j] + p - sub) % p;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

const M31: u64 = (1 << 31) - 1;

#[inline]
fn reduce_m31(x: u64) -> u64 {
    let y = (x & M31) + (x >> 31);
    let y = (y & M31) + (y >> 31);
    if y >= M31 {
        y - M31
    } else {
        y
    }
}

/// Rank modulo `2^31 - 1` of a row-major `rows x cols` matrix, using
/// shift-and-add reduction. The buffer is consumed as scratch space.
pub fn rank_mod_m31(data: &mut [u64], rows: usize, cols: usize) -> usize {
    debug_assert_eq!(data.len(), rows * cols);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&i| data[i * cols + c] != 0) else {
            continue;
        };
        if piv != rank {
            for j in c..cols {
                data.swap(piv * cols + j, rank * cols + j);
            }
        }
        let inv = powmod(data[rank * cols + c], M31 - 2, M31);
        for j in c..cols {
            data[rank * cols + j] = reduce_m31(data[rank * cols + j] * inv);
        }
        for i in rank + 1..rows {
            let f = data[i * cols + c];
            if f == 0 {
                continue;
            }
            let neg = M31 - f;
            for j in c..cols {
                let v = data[i * cols + j] + reduce_m31(neg * data[rank * cols + j]);
                data[i * cols + j] = reduce_m31(v);
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Residue of a small signed integer modulo `2^31 - 1`.
pub fn to_m31(x: i64) -> u64 {
    x.rem_euclid(M31 as i64) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_small_cases() {
        assert_eq!(rank_mod_p(&[vec![1, 2], vec![2, 4]], 2, SCREEN_PRIME), 1);
        assert_eq!(rank_mod_p(&[vec![1, -1], vec![1, 1]], 2, SCREEN_PRIME), 2);
        assert_eq!(rank_mod_p(&[vec![3, 0], vec![0, 3]], 2, 3), 0);
        let big = 2_305_843_009_213_693_951;
        assert_eq!(rank_mod_p(&[vec![1, -1], vec![-1, 1]], 2, big), 1);
        assert_eq!(rank_mod_p(&[vec![1 << 40, 1], vec![1, 1 << 40]], 2, big), 2);
    }

    #[test]
    fn mersenne_matches_generic() {
        let rows = [vec![1i64, 2, 3], vec![2, 4, 6], vec![0, -1, 5], vec![7, 7, 7]];
        let mut flat: Vec<u64> = rows.iter().flatten().map(|&x| to_m31(x)).collect();
        assert_eq!(rank_mod_m31(&mut flat, 4, 3), rank_mod_p(&rows, 3, SCREEN_PRIME));
        let mut flat: Vec<u64> = [1, 2, 2, 4].iter().map(|&x| to_m31(x)).collect();
        assert_eq!(rank_mod_m31(&mut flat, 2, 2), 1);
        assert_eq!(reduce_m31(M31), 0);
        assert_eq!(reduce_m31((M31 - 1) * (M31 - 1)), 1);
    }
}
