//! Algebraic predicates on monomial systems: the multiplication map by
//! `x_0 + ... + x_n`, restriction to the hyperplane `sum x_i = 0`, the space
//! of quadrics through the apolar points, minimality, and the number of
//! second-order Laplace equations of the apolar toric parametrization.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{precondition, Error, Result};
use crate::linalg::integer::rank_bareiss;
use crate::linalg::modular::{rank_mod_p, SCREEN_PRIME};
use crate::linalg::{primitive_integer_vector, RationalMatrix};
use crate::monomial::{binomial, monomials_of_degree, ExponentVector, MonomialSystem};
use crate::poly::Polynomial;

fn require_artinian(sys: &MonomialSystem) -> Result<()> {
    if sys.is_artinian() {
        Ok(())
    } else {
        Err(precondition("system is not artinian: some pure power x_i^d is not a generator"))
    }
}

/// Matrix of `×(x_0+...+x_n): (R/I)_{d-1} -> (R/I)_d` in monomial bases.
/// Rows are indexed by `target`, columns by `source`.
#[derive(Clone, Debug)]
pub struct MultiplicationMap {
    pub source: Vec<ExponentVector>,
    pub target: Vec<ExponentVector>,
    pub matrix: RationalMatrix,
}

pub fn build_multiplication_map(sys: &MonomialSystem) -> Result<MultiplicationMap> {
    require_artinian(sys)?;
    let source = monomials_of_degree(sys.n_vars(), sys.degree() - 1);
    let target = sys.apolar().to_vec();
    let mut matrix = RationalMatrix::zeros(target.len(), source.len());
    let one = BigRational::one();
    for (c, m) in source.iter().enumerate() {
        for i in 0..sys.n_vars() {
            if let Ok(r) = target.binary_search(&m.times_var(i)) {
                matrix.add_to(r, c, &one);
            }
        }
    }
    Ok(MultiplicationMap { source, target, matrix })
}

#[derive(Clone, Debug, Serialize)]
pub struct WlpVerdict {
    /// The map has a nonzero kernel.
    pub fails: bool,
    pub rank: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub maximal_rank: bool,
    /// `|S| <= C(n+d-1, n-1)`; outside the bound a kernel is forced.
    pub within_bound: bool,
    /// A nonzero degree `d-1` form `f` with `(sum x_i)·f ∈ I`.
    pub witness: Option<Polynomial>,
}

pub fn fails_wlp_in_degree_dminus1(sys: &MonomialSystem) -> Result<WlpVerdict> {
    let map = build_multiplication_map(sys)?;
    let rank = map.matrix.rank();
    let kernel = if rank < map.source.len() { map.matrix.kernel_basis() } else { Vec::new() };
    let witness = kernel.first().map(|v| {
        Polynomial::from_terms(sys.n_vars(), map.source.iter().cloned().zip(v.iter().cloned()))
    });
    Ok(WlpVerdict {
        fails: !kernel.is_empty(),
        rank,
        source_dim: map.source.len(),
        target_dim: map.target.len(),
        maximal_rank: rank == map.source.len().min(map.target.len()),
        within_bound: sys.within_cardinality_bound(),
        witness,
    })
}

/// Restricts every generator to `x_n = -(x_0 + ... + x_{n-1})` and reports
/// whether the restrictions are linearly dependent.
pub fn restricted_dependence(sys: &MonomialSystem) -> Result<bool> {
    require_artinian(sys)?;
    let n = sys.n();
    let mut images: Vec<Polynomial> = (0..n)
        .map(|i| Polynomial::monomial(ExponentVector::pure_power(n, i, 1), 1))
        .collect();
    let mut last = Polynomial::zero(n);
    for i in 0..n {
        last.add_term(ExponentVector::pure_power(n, i, 1), BigInt::from(-1));
    }
    images.push(last);
    let columns = monomials_of_degree(n, sys.degree());
    let rows: Vec<Vec<BigInt>> = sys
        .generators()
        .iter()
        .map(|g| {
            let restricted = Polynomial::monomial(g.clone(), 1).substitute(&images);
            columns.iter().map(|m| restricted.coefficient(m)).collect()
        })
        .collect();
    let rank = RationalMatrix::from_bigint_rows(columns.len(), &rows).rank();
    Ok(rank < sys.generators().len())
}

/// `sum mu_i x_i^2 + sum_{i<j} mu_ij x_i x_j`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadricForm {
    diag: Vec<BigRational>,
    cross: BTreeMap<(usize, usize), BigRational>,
}

/// Column order of the evaluation matrix: `(i, j)` with `i <= j`, `i` outer.
pub fn quadric_monomials(n_vars: usize) -> Vec<(usize, usize)> {
    (0..n_vars).flat_map(|i| (i..n_vars).map(move |j| (i, j))).collect()
}

impl QuadricForm {
    pub fn new(diag: Vec<BigRational>, cross: BTreeMap<(usize, usize), BigRational>) -> Self {
        QuadricForm { diag, cross }
    }

    pub fn from_integers(n_vars: usize, diag: impl Fn(usize) -> i64, cross: impl Fn(usize, usize) -> i64) -> Self {
        let d = (0..n_vars).map(|i| BigRational::from_integer(diag(i).into())).collect();
        let c = (0..n_vars)
            .flat_map(|i| (i + 1..n_vars).map(move |j| (i, j)))
            .map(|(i, j)| ((i, j), BigRational::from_integer(cross(i, j).into())))
            .collect();
        QuadricForm { diag: d, cross: c }
    }

    /// Reads a coefficient vector in [`quadric_monomials`] order.
    pub fn from_coefficients(n_vars: usize, v: &[BigInt]) -> Self {
        let mut diag = vec![BigRational::zero(); n_vars];
        let mut cross = BTreeMap::new();
        for ((i, j), c) in quadric_monomials(n_vars).into_iter().zip(v) {
            let c = BigRational::from_integer(c.clone());
            if i == j {
                diag[i] = c;
            } else {
                cross.insert((i, j), c);
            }
        }
        QuadricForm { diag, cross }
    }

    pub fn coefficients(&self) -> Vec<BigRational> {
        quadric_monomials(self.n_vars()).into_iter().map(|(i, j)| self.coefficient(i, j)).collect()
    }

    pub fn n_vars(&self) -> usize {
        self.diag.len()
    }

    /// `mu_i` when `i == j`, otherwise `mu_{min, max}`.
    pub fn coefficient(&self, i: usize, j: usize) -> BigRational {
        if i == j {
            self.diag[i].clone()
        } else {
            self.cross.get(&(i.min(j), i.max(j))).cloned().unwrap_or_else(BigRational::zero)
        }
    }

    pub fn evaluate(&self, a: &ExponentVector) -> BigRational {
        let e = a.entries();
        let mut acc = BigRational::zero();
        for (i, mu) in self.diag.iter().enumerate() {
            acc += mu * BigRational::from_integer(BigInt::from(e[i]) * e[i]);
        }
        for (&(i, j), mu) in &self.cross {
            acc += mu * BigRational::from_integer(BigInt::from(e[i]) * e[j]);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.diag.iter().all(|x| x.is_zero()) && self.cross.values().all(|x| x.is_zero())
    }

    /// Same quadric scaled to a primitive integer form with positive leading
    /// coefficient.
    pub fn normalized(&self) -> QuadricForm {
        let v = primitive_integer_vector(&self.coefficients());
        QuadricForm::from_coefficients(self.n_vars(), &v)
    }

    pub fn is_proportional_to(&self, other: &QuadricForm) -> bool {
        self.n_vars() == other.n_vars() && self.normalized() == other.normalized()
    }

    fn combine(&self, a: &BigRational, other: &QuadricForm, b: &BigRational) -> QuadricForm {
        let v: Vec<BigRational> = self
            .coefficients()
            .into_iter()
            .zip(other.coefficients())
            .map(|(x, y)| a * x + b * y)
            .collect();
        QuadricForm::from_coefficients(self.n_vars(), &primitive_integer_vector(&v))
    }
}

impl Serialize for QuadricForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for QuadricForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, j) in quadric_monomials(self.n_vars()) {
            let c = self.coefficient(i, j);
            if c.is_zero() {
                continue;
            }
            let mono = if i == j { format!("x{i}^2") } else { format!("x{i}*x{j}") };
            let abs = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn evaluation_rows(n_vars: usize, points: &[ExponentVector]) -> Vec<Vec<i64>> {
    let cols = quadric_monomials(n_vars);
    points
        .iter()
        .map(|p| {
            let e = p.entries();
            cols.iter().map(|&(i, j)| e[i] as i64 * e[j] as i64).collect()
        })
        .collect()
}

/// Basis of the quadrics in `n+1` variables vanishing on every point.
pub fn quadric_space(n: usize, points: &[ExponentVector]) -> Vec<QuadricForm> {
    let n_vars = n + 1;
    let cols = quadric_monomials(n_vars).len();
    let m = RationalMatrix::from_i64_rows(cols, &evaluation_rows(n_vars, points));
    m.kernel_basis().iter().map(|v| QuadricForm::from_coefficients(n_vars, v)).collect()
}

/// Dimension of [`quadric_space`]. Uses a rank mod p pre-screen; a deficient
/// screen is always confirmed by an exact integer rank.
pub fn quadric_space_dim(n: usize, points: &[ExponentVector]) -> usize {
    let n_vars = n + 1;
    let cols = quadric_monomials(n_vars).len();
    let rows = evaluation_rows(n_vars, points);
    if rank_mod_p(&rows, cols, SCREEN_PRIME) == cols {
        return 0;
    }
    cols - rank_bareiss(&rows, cols).unwrap_or_else(|| RationalMatrix::from_i64_rows(cols, &rows).rank())
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MinimalityCertificate {
    /// The quadric space is spanned by `quadric`, which misses every generator.
    Minimal { quadric: QuadricForm },
    /// `quadric` vanishes on all of `P` and also on the generator `point`.
    NotMinimal { point: ExponentVector, quadric: QuadricForm, quadric_space_dim: usize },
}

impl MinimalityCertificate {
    pub fn is_minimal(&self) -> bool {
        matches!(self, MinimalityCertificate::Minimal { .. })
    }
}

fn require_togliatti(sys: &MonomialSystem) -> Result<()> {
    if sys.degree() != 3 {
        return Err(precondition("minimality is only decided for cubics"));
    }
    require_artinian(sys)?;
    if !sys.within_cardinality_bound() {
        return Err(precondition(format!(
            "|S| = {} exceeds C(n+2,3) = {}",
            sys.generators().len(),
            sys.cardinality_bound()
        )));
    }
    if !fails_wlp_in_degree_dminus1(sys)?.fails {
        return Err(precondition("system has the WLP in degree 2, so it is not a Togliatti system"));
    }
    Ok(())
}

/// Minimality through the quadric reformulation: the quadrics through `P`
/// form a line, and its generator vanishes at no point of `S`.
pub fn is_minimal_togliatti(sys: &MonomialSystem) -> Result<MinimalityCertificate> {
    require_togliatti(sys)?;
    let basis = quadric_space(sys.n(), sys.apolar());
    if basis.is_empty() {
        return Err(Error::Internal(
            "multiplication map has a kernel but no quadric passes through P".into(),
        ));
    }
    if basis.len() == 1 {
        let q = basis[0].normalized();
        return Ok(match sys.generators().iter().find(|s| q.evaluate(s).is_zero()) {
            Some(s) => MinimalityCertificate::NotMinimal {
                point: s.clone(),
                quadric: q,
                quadric_space_dim: 1,
            },
            None => MinimalityCertificate::Minimal { quadric: q },
        });
    }
    // Two independent quadrics: some combination vanishes at any chosen generator.
    let s = &sys.generators()[0];
    let values: Vec<BigRational> = basis.iter().map(|q| q.evaluate(s)).collect();
    let quadric = match values.iter().position(|v| !v.is_zero()) {
        None => basis[0].normalized(),
        Some(a) => {
            let b = if a == 0 { 1 } else { 0 };
            basis[b].combine(&values[a], &basis[a], &(-&values[b]))
        }
    };
    debug_assert!(quadric.evaluate(s).is_zero() && !quadric.is_zero());
    Ok(MinimalityCertificate::NotMinimal { point: s.clone(), quadric, quadric_space_dim: basis.len() })
}

/// Minimality straight from the definition: no proper subset of the
/// generators that still contains every `x_i^3` fails the WLP in degree 2.
/// Exponential in the number of non-pure generators.
pub fn is_minimal_by_subsets(sys: &MonomialSystem) -> Result<bool> {
    require_togliatti(sys)?;
    let (cubes, others): (Vec<_>, Vec<_>) =
        sys.generators().iter().cloned().partition(|m| m.is_pure_power());
    if others.len() > 22 {
        return Err(Error::InvalidArgument(format!(
            "{} non-pure generators is too many for subset enumeration",
            others.len()
        )));
    }
    let full = (1u32 << others.len()) - 1;
    for mask in 0..full {
        let mut gens = cubes.clone();
        gens.extend((0..others.len()).filter(|&k| mask >> k & 1 == 1).map(|k| others[k].clone()));
        let sub = MonomialSystem::from_generators(sys.n(), sys.degree(), gens)?;
        if fails_wlp_in_degree_dminus1(&sub)?.fails {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Second-order osculating data of the monomial parametrization by `P`.
#[derive(Clone, Debug, Serialize)]
pub struct LaplaceReport {
    /// Number of independent Laplace equations of order 2.
    pub delta: usize,
    /// Rank of the osculating matrix over the rational function field.
    pub rank: usize,
    pub expected_rank: usize,
    /// Ranks at each of the integer specializations tried.
    pub specialized_ranks: Vec<usize>,
    /// Kernel vectors lifted to the function field and checked exactly.
    pub verified_kernel_vectors: usize,
}

fn derivative_orders(n_vars: usize, max: u32) -> Vec<ExponentVector> {
    (0..=max).flat_map(|k| monomials_of_degree(n_vars, k)).collect()
}

fn falling_factorial_weight(a: &ExponentVector, alpha: &ExponentVector) -> i64 {
    a.entries()
        .iter()
        .zip(alpha.entries())
        .map(|(&ai, &al)| (0..al).map(|t| ai as i64 - t as i64).product::<i64>())
        .product()
}

fn primes_from(start: u64, count: usize) -> Vec<u64> {
    let is_prime = |p: u64| p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0);
    (start..).filter(|&p| is_prime(p)).take(count).collect()
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Three evaluation points with pairwise distinct large prime coordinates,
/// fixed for a given number of variables.
fn evaluation_points(n_vars: usize) -> Vec<Vec<u64>> {
    let mut pool = primes_from(1_000_003, 3 * n_vars + 8);
    let mut state = 0x70_6c_69_61_74_74_69u64 ^ n_vars as u64;
    for i in (1..pool.len()).rev() {
        let j = (splitmix(&mut state) % (i as u64 + 1)) as usize;
        pool.swap(i, j);
    }
    pool.chunks(n_vars).take(3).map(|c| c.to_vec()).collect()
}

fn specialized_matrix(
    points: &[ExponentVector],
    orders: &[ExponentVector],
    xi: &[u64],
) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(orders.len(), points.len());
    for (r, alpha) in orders.iter().enumerate() {
        for (c, a) in points.iter().enumerate() {
            let w = falling_factorial_weight(a, alpha);
            if w == 0 {
                continue;
            }
            let mut v = BigInt::from(w);
            for ((&ai, &al), &x) in a.entries().iter().zip(alpha.entries()).zip(xi) {
                v *= BigInt::from(x).pow(ai - al);
            }
            m.set(r, c, BigRational::from_integer(v));
        }
    }
    m
}

/// Checks `sum_a w_a(x) · ff(a, alpha) x^(a - alpha) = 0` for every order
/// `alpha`, with `w_a(x) = v_a xi^a x^(-a)`, by collecting Laurent monomials.
fn verify_lifted_kernel_vector(
    points: &[ExponentVector],
    orders: &[ExponentVector],
    xi: &[u64],
    v: &[BigInt],
) -> bool {
    for alpha in orders {
        let mut acc: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (a, va) in points.iter().zip(v) {
            let w = falling_factorial_weight(a, alpha);
            if w == 0 || va.is_zero() {
                continue;
            }
            let mut coeff = va * BigInt::from(w);
            for (&ai, &x) in a.entries().iter().zip(xi) {
                coeff *= BigInt::from(x).pow(ai);
            }
            // x^(a - alpha) · x^(-a)
            let exponent: Vec<i64> = a
                .entries()
                .iter()
                .zip(alpha.entries())
                .map(|(&ai, &al)| (ai as i64 - al as i64) - ai as i64)
                .collect();
            *acc.entry(exponent).or_insert_with(BigInt::zero) += coeff;
        }
        if acc.values().any(|c| !c.is_zero()) {
            return false;
        }
    }
    true
}

pub fn laplace_delta(n: usize, points: &[ExponentVector]) -> Result<LaplaceReport> {
    let n_vars = n + 1;
    if points.iter().any(|p| p.n_vars() != n_vars) {
        return Err(Error::InvalidArgument("point dimension does not match n".into()));
    }
    let exps: Vec<Vec<i64>> = points.iter().map(|p| p.to_i64()).collect();
    if RationalMatrix::from_i64_rows(n_vars, &exps).rank() != n_vars {
        return Err(precondition(format!(
            "monomial map of {} points does not have an {n}-dimensional image",
            points.len()
        )));
    }
    let orders = derivative_orders(n_vars, 2);
    let expected_rank = binomial(n as u64 + 2, 2) as usize;
    let evals = evaluation_points(n_vars);
    let mut best: Option<(usize, usize, RationalMatrix)> = None;
    let mut specialized_ranks = Vec::new();
    for (k, xi) in evals.iter().enumerate() {
        let m = specialized_matrix(points, &orders, xi);
        let r = m.rank();
        specialized_ranks.push(r);
        if best.as_ref().map_or(true, |(_, br, _)| r > *br) {
            best = Some((k, r, m));
        }
    }
    let (k, rank, m) = best.expect("three evaluation points");
    let kernel = m.kernel_basis();
    for v in &kernel {
        if !verify_lifted_kernel_vector(points, &orders, &evals[k], v) {
            return Err(Error::Internal("specialized kernel vector does not lift".into()));
        }
    }
    if rank + kernel.len() != points.len() || rank > expected_rank {
        return Err(Error::Internal("osculating rank bookkeeping is inconsistent".into()));
    }
    Ok(LaplaceReport {
        delta: expected_rank - rank,
        rank,
        expected_rank,
        specialized_ranks,
        verified_kernel_vectors: kernel.len(),
    })
}

/// Combined verdict on a cubic system.
#[derive(Clone, Debug, Serialize)]
pub struct TogliattiVerdict {
    pub fails_wlp: bool,
    pub quadric_space_dim: usize,
    pub minimal: bool,
    pub witness_quadric: Option<QuadricForm>,
    pub minimality: Option<MinimalityCertificate>,
    /// `None` when the apolar parametrization is degenerate.
    pub laplace_delta: Option<usize>,
    pub cardinality_ok: bool,
}

impl TogliattiVerdict {
    pub fn is_togliatti(&self) -> bool {
        self.fails_wlp && self.cardinality_ok
    }
}

pub fn togliatti_verdict(sys: &MonomialSystem) -> Result<TogliattiVerdict> {
    if sys.degree() != 3 {
        return Err(precondition("Togliatti verdicts are only computed for cubics"));
    }
    let wlp = fails_wlp_in_degree_dminus1(sys)?;
    let qdim = quadric_space_dim(sys.n(), sys.apolar());
    let cardinality_ok = sys.within_cardinality_bound();
    if cardinality_ok && wlp.fails != (qdim >= 1) {
        return Err(Error::Internal(format!(
            "multiplication-map kernel ({}) disagrees with quadric space dimension {qdim}",
            wlp.fails
        )));
    }
    let laplace = match laplace_delta(sys.n(), sys.apolar()) {
        Ok(r) => Some(r.delta),
        Err(Error::Precondition(_)) => None,
        Err(e) => return Err(e),
    };
    let minimality = if cardinality_ok && wlp.fails { Some(is_minimal_togliatti(sys)?) } else { None };
    let witness_quadric = match &minimality {
        Some(MinimalityCertificate::Minimal { quadric }) => Some(quadric.clone()),
        _ if qdim >= 1 => quadric_space(sys.n(), sys.apolar()).first().map(|q| q.normalized()),
        _ => None,
    };
    Ok(TogliattiVerdict {
        fails_wlp: wlp.fails,
        quadric_space_dim: qdim,
        minimal: minimality.as_ref().is_some_and(|m| m.is_minimal()),
        witness_quadric,
        minimality,
        laplace_delta: laplace,
        cardinality_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::parse_system;

    fn togliatti() -> MonomialSystem {
        parse_system("S: x0^3 x1^3 x2^3 x0*x1*x2", 2, 3).unwrap()
    }

    #[test]
    fn multiplication_map_shapes() {
        let m = build_multiplication_map(&togliatti()).unwrap();
        assert_eq!((m.matrix.rows(), m.matrix.cols()), (6, 6));
        let s = parse_system("S: x0^3 x1^3", 1, 3).unwrap();
        let m = build_multiplication_map(&s).unwrap();
        assert_eq!((m.source.len(), m.target.len()), (3, 2));
        assert_eq!((m.matrix.rows(), m.matrix.cols()), (2, 3));
        let nonartinian = parse_system("S: x0^3", 1, 3).unwrap();
        assert!(matches!(build_multiplication_map(&nonartinian), Err(Error::Precondition(_))));
    }

    #[test]
    fn column_sums_bounded() {
        let m = build_multiplication_map(&togliatti()).unwrap();
        for c in 0..m.matrix.cols() {
            let sum: BigRational = (0..m.matrix.rows()).map(|r| m.matrix.get(r, c).clone()).sum();
            assert!(sum <= BigRational::from_integer(3.into()));
        }
    }

    #[test]
    fn brenner_kaid_fails_wlp_with_rank_five() {
        let v = fails_wlp_in_degree_dminus1(&togliatti()).unwrap();
        assert!(v.fails);
        assert_eq!(v.rank, 5);
        let w = v.witness.unwrap();
        assert_eq!(w.to_string(), "x0^2 - x0*x1 - x0*x2 + x1^2 - x1*x2 + x2^2");
    }

    #[test]
    fn complete_intersection_has_wlp() {
        let ci = parse_system("S: x0^3 x1^3 x2^3", 2, 3).unwrap();
        assert!(!fails_wlp_in_degree_dminus1(&ci).unwrap().fails);
        assert!(!restricted_dependence(&ci).unwrap());
    }

    #[test]
    fn restriction_examples() {
        assert!(restricted_dependence(&togliatti()).unwrap());
        let line = parse_system("S: x0^3 x1^3", 1, 3).unwrap();
        assert!(restricted_dependence(&line).unwrap());
    }

    #[test]
    fn togliatti_quadric() {
        let basis = quadric_space(2, togliatti().apolar());
        assert_eq!(basis.len(), 1);
        let expect = QuadricForm::from_integers(3, |_| 2, |_, _| -5);
        assert_eq!(basis[0], expect);
        assert_eq!(expect.to_string(), "2*x0^2 - 5*x0*x1 - 5*x0*x2 + 2*x1^2 - 5*x1*x2 + 2*x2^2");
        let p = ExponentVector::new(vec![2, 1, 0]);
        assert!(expect.evaluate(&p).is_zero());
    }

    #[test]
    fn quadric_space_edge_cases() {
        let all = crate::monomial::lattice_points_simplex(2, 3).unwrap();
        assert_eq!(quadric_space(2, &all).len(), 0);
        assert_eq!(quadric_space_dim(2, &all), 0);
        assert_eq!(quadric_space(2, &[]).len(), 6);
        assert_eq!(quadric_space_dim(3, &[]), 10);
    }

    #[test]
    fn togliatti_is_minimal_by_both_routes() {
        let cert = is_minimal_togliatti(&togliatti()).unwrap();
        assert!(cert.is_minimal());
        assert!(is_minimal_by_subsets(&togliatti()).unwrap());
    }

    #[test]
    fn minimality_requires_togliatti() {
        let ci = parse_system("S: x0^3 x1^3 x2^3", 2, 3).unwrap();
        assert!(matches!(is_minimal_togliatti(&ci), Err(Error::Precondition(_))));
    }

    #[test]
    fn laplace_examples() {
        assert_eq!(laplace_delta(2, togliatti().apolar()).unwrap().delta, 1);
        let all = crate::monomial::lattice_points_simplex(2, 3).unwrap();
        assert_eq!(laplace_delta(2, &all).unwrap().delta, 0);
        let single = [ExponentVector::new(vec![1, 1, 1])];
        assert!(matches!(laplace_delta(2, &single), Err(Error::Precondition(_))));
    }

    #[test]
    fn evaluation_points_are_distinct_primes() {
        for n_vars in 2..7 {
            let pts = evaluation_points(n_vars);
            assert_eq!(pts.len(), 3);
            let mut all: Vec<u64> = pts.concat();
            all.sort();
            all.dedup();
            assert_eq!(all.len(), 3 * n_vars);
            assert_eq!(pts, evaluation_points(n_vars));
        }
    }
}
