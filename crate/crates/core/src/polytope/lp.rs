//! Exact feasibility of `A x = b, x >= 0` by phase-one simplex with Bland's
//! rule. Intended for the tiny systems arising from hull membership tests.
//!
//! The tableau is first run over `i128` fractions with checked arithmetic;
//! if any operation overflows, the whole computation is repeated over
//! `BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

trait Field: Clone + PartialOrd {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn div(&self, o: &Self) -> Option<Self>;
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        Some(self / o)
    }
}

/// `num / den` in lowest terms with `den > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Small {
    num: i128,
    den: i128,
}

impl Small {
    fn new(num: i128, den: i128) -> Option<Small> {
        if den == 0 {
            return None;
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = num.checked_neg()?;
            den = den.checked_neg()?;
        }
        Some(Small { num, den })
    }
}

impl PartialOrd for Small {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        // Only reached after both sides were produced without overflow, so a
        // failed cross-multiplication is reported as incomparable.
        let a = self.num.checked_mul(o.den)?;
        let b = o.num.checked_mul(self.den)?;
        a.partial_cmp(&b)
    }
}

impl Field for Small {
    fn zero() -> Self {
        Small { num: 0, den: 1 }
    }
    fn one() -> Self {
        Small { num: 1, den: 1 }
    }
    fn is_zero(&self) -> bool {
        self.num == 0
    }
    fn is_positive(&self) -> bool {
        self.num > 0
    }
    fn is_negative(&self) -> bool {
        self.num < 0
    }
    fn neg(&self) -> Option<Self> {
        Some(Small { num: self.num.checked_neg()?, den: self.den })
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        let g = self.den.gcd(&o.den);
        let l = (self.den / g).checked_mul(o.den)?;
        let a = self.num.checked_mul(l / self.den)?;
        let b = o.num.checked_mul(l / o.den)?;
        Small::new(a.checked_sub(b)?, l)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        let g1 = self.num.gcd(&o.den).max(1);
        let g2 = o.num.gcd(&self.den).max(1);
        let num = (self.num / g1).checked_mul(o.num / g2)?;
        let den = (self.den / g2).checked_mul(o.den / g1)?;
        Small::new(num, den)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        if o.num == 0 {
            return None;
        }
        self.mul(&Small::new(o.den, o.num)?)
    }
}

/// Ratio test comparison that must not silently fail for `Small`.
fn less<F: Field>(a: &F, b: &F) -> Option<bool> {
    a.partial_cmp(b).map(|o| o == std::cmp::Ordering::Less)
}

fn solve<F: Field>(columns: &[Vec<F>], b: &[F]) -> Option<bool> {
    let m = b.len();
    let k = columns.len();
    if m == 0 {
        return Some(true);
    }
    let width = k + m + 1;
    let rhs = k + m;
    let mut t: Vec<Vec<F>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = vec![F::zero(); width];
        for (j, col) in columns.iter().enumerate() {
            row[j] = col[i].clone();
        }
        row[k + i] = F::one();
        row[rhs] = b[i].clone();
        if row[rhs].is_negative() {
            for (j, x) in row.iter_mut().enumerate() {
                if j != k + i {
                    *x = x.neg()?;
                }
            }
        }
        t.push(row);
    }
    let mut basis: Vec<usize> = (k..k + m).collect();
    let mut z = vec![F::zero(); width];
    for row in &t {
        for j in (0..k).chain(std::iter::once(rhs)) {
            z[j] = z[j].sub(&row[j])?;
        }
    }
    loop {
        let Some(enter) = (0..k + m).find(|&j| z[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, F)> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            let ratio = t[i][rhs].div(&t[i][enter])?;
            let better = match &leave {
                None => true,
                Some((li, lr)) => less(&ratio, lr)? || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // The phase-one objective is bounded below by zero.
        let (r, _) = leave.expect("unbounded phase-one objective");
        let piv = t[r][enter].clone();
        for x in t[r].iter_mut() {
            *x = x.div(&piv)?;
        }
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == r || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = x.sub(&f.mul(p)?)?;
                }
            }
        }
        let f = z[enter].clone();
        for (x, p) in z.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *x = x.sub(&f.mul(p)?)?;
            }
        }
        basis[r] = enter;
    }
    Some(z[rhs].is_zero())
}

fn small(x: &BigInt) -> Option<Small> {
    Some(Small { num: x.to_i128()?, den: 1 })
}

/// `columns[j]` is the j-th column of `A`.
pub fn feasible_int(columns: &[Vec<BigInt>], b: &[BigInt]) -> bool {
    let fast = || -> Option<bool> {
        let cols: Vec<Vec<Small>> = columns.iter().map(|c| c.iter().map(small).collect()).collect::<Option<_>>()?;
        let rhs: Vec<Small> = b.iter().map(small).collect::<Option<_>>()?;
        solve(&cols, &rhs)
    };
    fast().unwrap_or_else(|| {
        let q = |v: &[BigInt]| v.iter().map(|x| BigRational::from_integer(x.clone())).collect::<Vec<_>>();
        let cols: Vec<Vec<BigRational>> = columns.iter().map(|c| q(c)).collect();
        feasible(&cols, &q(b))
    })
}

/// `columns[j]` is the j-th column of `A`.
pub fn feasible(columns: &[Vec<BigRational>], b: &[BigRational]) -> bool {
    solve(columns, b).expect("rational arithmetic cannot overflow")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    fn z(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn simple_cases() {
        // x + y = 1, x - y = 0
        let cols = vec![vec![q(1), q(1)], vec![q(1), q(-1)]];
        assert!(feasible(&cols, &[q(1), q(0)]));
        // x = -1
        assert!(!feasible(&[vec![q(1)]], &[q(-1)]));
        // no variables, b = 0 / b != 0
        assert!(feasible(&[], &[q(0)]));
        assert!(!feasible(&[], &[q(2)]));
        // redundant rows
        let cols = vec![vec![q(1), q(2)], vec![q(1), q(2)]];
        assert!(feasible(&cols, &[q(3), q(6)]));
        assert!(!feasible(&cols, &[q(3), q(5)]));
    }

    #[test]
    fn small_path_agrees() {
        let cols = z(&[&[1, 1], &[1, -1]]);
        assert!(feasible_int(&cols, &z(&[&[1, 0]])[0]));
        assert!(!feasible_int(&z(&[&[1]]), &z(&[&[-1]])[0]));
        let cols = z(&[&[2, 0, 1], &[0, 3, 1], &[1, 1, 1]]);
        assert!(feasible_int(&cols, &z(&[&[3, 4, 3]])[0]));
        assert!(!feasible_int(&cols, &z(&[&[-3, 4, 3]])[0]));
    }

    #[test]
    fn huge_entries_fall_back() {
        let big = BigInt::from(i128::MAX) * BigInt::from(4);
        let cols = vec![vec![big.clone(), BigInt::from(1)]];
        assert!(feasible_int(&cols, &[big.clone() * 2, BigInt::from(2)]));
        assert!(!feasible_int(&cols, &[big, BigInt::from(2)]));
    }

    #[test]
    fn small_arithmetic() {
        let a = Small::new(1, 3).unwrap();
        let b = Small::new(-1, 6).unwrap();
        assert_eq!(a.sub(&b).unwrap(), Small::new(1, 2).unwrap());
        assert_eq!(a.mul(&b).unwrap(), Small::new(-1, 18).unwrap());
        assert_eq!(a.div(&b).unwrap(), Small::new(-2, 1).unwrap());
        assert!(less(&b, &a).unwrap());
        assert!(Small::new(i128::MAX, 1).unwrap().mul(&Small::new(2, 1).unwrap()).is_none());
    }
}
