//! Monomials as exponent vectors, monomial systems `(S, P)` and their text
//! format, plus canonical forms under permutations of the variables.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{invalid, Error, Result};

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Exponents of `x_0 .. x_n` in a monomial. Ordered lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    /// `x_i^d` in `n_vars` variables.
    pub fn pure_power(n_vars: usize, i: usize, d: u32) -> Self {
        let mut e = vec![0; n_vars];
        e[i] = d;
        ExponentVector(e)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn n_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_pure_power(&self) -> bool {
        self.0.iter().filter(|&&e| e > 0).count() == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Image under `x_i -> x_{perm[i]}`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = vec![0; self.0.len()];
        for (i, &e) in self.0.iter().enumerate() {
            out[perm[i]] = e;
        }
        ExponentVector(out)
    }

    pub fn to_i64(&self) -> Vec<i64> {
        self.0.iter().map(|&e| e as i64).collect()
    }

    /// Product with `x_i`.
    pub fn times_var(&self, i: usize) -> Self {
        let mut e = self.0.clone();
        e[i] += 1;
        ExponentVector(e)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// All lattice points of `d·Δ` in `Z^{n+1}`, sorted.
pub fn lattice_points_simplex(n: usize, d: u32) -> Result<Vec<ExponentVector>> {
    if n < 1 || d < 1 {
        return Err(invalid(format!("need n >= 1 and d >= 1, got n={n}, d={d}")));
    }
    Ok(monomials_of_degree(n + 1, d))
}

/// Every monomial of degree `d` in `n_vars` variables, sorted. Allows `d = 0`.
pub fn monomials_of_degree(n_vars: usize, d: u32) -> Vec<ExponentVector> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        let n_vars = cur.len();
        if i + 1 == n_vars {
            cur[i] = left;
            out.push(ExponentVector(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
    }
    if n_vars == 0 {
        return if d == 0 { vec![ExponentVector(vec![])] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; n_vars], &mut out);
    out.sort();
    out
}

/// Which half of the pair `(S, P)` a text block lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ListedSet {
    Generators,
    Apolar,
}

/// Generators `S` of a monomial ideal in degree `d` together with the
/// complementary apolar set `P`. Both lists are sorted and partition `d·Δ`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialSystem {
    n: usize,
    d: u32,
    generators: Vec<ExponentVector>,
    apolar: Vec<ExponentVector>,
}

impl Serialize for MonomialSystem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let show = |v: &[ExponentVector]| v.iter().map(|m| m.to_string()).collect::<Vec<_>>();
        let mut st = s.serialize_struct("MonomialSystem", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("generators", &show(&self.generators))?;
        st.serialize_field("apolar", &show(&self.apolar))?;
        st.end()
    }
}

impl MonomialSystem {
    pub fn from_generators(n: usize, d: u32, generators: Vec<ExponentVector>) -> Result<Self> {
        Self::build(n, d, generators, ListedSet::Generators)
    }

    pub fn from_apolar(n: usize, d: u32, apolar: Vec<ExponentVector>) -> Result<Self> {
        Self::build(n, d, apolar, ListedSet::Apolar)
    }

    fn build(n: usize, d: u32, listed: Vec<ExponentVector>, which: ListedSet) -> Result<Self> {
        let all = lattice_points_simplex(n, d)?;
        let mut seen = BTreeSet::new();
        for m in &listed {
            if m.n_vars() != n + 1 {
                return Err(invalid(format!(
                    "monomial {m:?} has {} exponents, expected {}",
                    m.n_vars(),
                    n + 1
                )));
            }
            if m.degree() != d {
                return Err(invalid(format!("monomial {m} has degree {}, expected {d}", m.degree())));
            }
            if !seen.insert(m.clone()) {
                return Err(invalid(format!("duplicate monomial {m}")));
            }
        }
        let rest: Vec<_> = all.into_iter().filter(|m| !seen.contains(m)).collect();
        let listed: Vec<_> = seen.into_iter().collect();
        let (generators, apolar) = match which {
            ListedSet::Generators => (listed, rest),
            ListedSet::Apolar => (rest, listed),
        };
        Ok(MonomialSystem { n, d, generators, apolar })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn n_vars(&self) -> usize {
        self.n + 1
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn apolar(&self) -> &[ExponentVector] {
        &self.apolar
    }

    pub fn is_generator(&self, m: &ExponentVector) -> bool {
        self.generators.binary_search(m).is_ok()
    }

    pub fn is_apolar(&self, m: &ExponentVector) -> bool {
        self.apolar.binary_search(m).is_ok()
    }

    /// All pure powers `x_i^d` are generators.
    pub fn is_artinian(&self) -> bool {
        (0..=self.n).all(|i| self.is_generator(&ExponentVector::pure_power(self.n + 1, i, self.d)))
    }

    /// `C(n+d-1, n-1)`: the largest `|S|` for which a Laplace equation is
    /// not forced by dimension alone.
    pub fn cardinality_bound(&self) -> usize {
        binomial((self.n + self.d as usize - 1) as u64, (self.n - 1) as u64) as usize
    }

    pub fn within_cardinality_bound(&self) -> bool {
        self.generators.len() <= self.cardinality_bound()
    }

    pub fn permuted(&self, perm: &[usize]) -> MonomialSystem {
        let mut generators: Vec<_> = self.generators.iter().map(|m| m.permuted(perm)).collect();
        let mut apolar: Vec<_> = self.apolar.iter().map(|m| m.permuted(perm)).collect();
        generators.sort();
        apolar.sort();
        MonomialSystem { n: self.n, d: self.d, generators, apolar }
    }

    /// Text form listing the generators, readable by [`parse_system`].
    pub fn serialize(&self) -> String {
        self.serialize_as(ListedSet::Generators)
    }

    pub fn serialize_as(&self, which: ListedSet) -> String {
        let (header, list) = match which {
            ListedSet::Generators => ("S:", &self.generators),
            ListedSet::Apolar => ("P:", &self.apolar),
        };
        let mut out = format!("# n={} d={}\n{header}", self.n, self.d);
        for m in list {
            out.push(' ');
            out.push_str(&m.to_string());
        }
        out.push('\n');
        out
    }
}

/// Smallest generator encoding over all `(n+1)!` coordinate permutations.
pub fn canonical_form(sys: &MonomialSystem) -> MonomialSystem {
    let mut best: Option<MonomialSystem> = None;
    for perm in (0..sys.n_vars()).permutations(sys.n_vars()) {
        let image = sys.permuted(&perm);
        if best.as_ref().map_or(true, |b| image.generators < b.generators) {
            best = Some(image);
        }
    }
    best.expect("at least the identity permutation")
}

pub fn are_equivalent(a: &MonomialSystem, b: &MonomialSystem) -> bool {
    a.n == b.n && a.d == b.d && canonical_form(a) == canonical_form(b)
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn tokenize(content: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut cur = String::new();
    let mut depth = 0usize;
    for c in content.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            c if c.is_whitespace() && depth == 0 => {
                if !cur.is_empty() {
                    tokens.push(std::mem::take(&mut cur));
                }
            }
            c if c.is_whitespace() => {}
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        tokens.push(cur);
    }
    tokens
}

fn parse_token(tok: &str, n_vars: usize, line: usize) -> Result<ExponentVector> {
    let mut e = vec![0u32; n_vars];
    if let Some(inner) = tok.strip_prefix('(') {
        let inner = inner
            .strip_suffix(')')
            .ok_or_else(|| parse_err(line, format!("unterminated tuple `{tok}`")))?;
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != n_vars {
            return Err(parse_err(
                line,
                format!("tuple `{tok}` has {} entries, expected {n_vars}", parts.len()),
            ));
        }
        for (slot, p) in e.iter_mut().zip(parts) {
            *slot = p
                .trim()
                .parse()
                .map_err(|_| parse_err(line, format!("bad exponent `{p}` in `{tok}`")))?;
        }
        return Ok(ExponentVector(e));
    }
    for factor in tok.split('*') {
        let rest = factor
            .strip_prefix('x')
            .ok_or_else(|| parse_err(line, format!("malformed factor `{factor}` in `{tok}`")))?;
        let (idx, exp) = match rest.split_once('^') {
            Some((i, x)) => (i, x),
            None => (rest, "1"),
        };
        let idx: usize = idx
            .parse()
            .map_err(|_| parse_err(line, format!("bad variable index in `{factor}`")))?;
        let exp: u32 = exp
            .parse()
            .map_err(|_| parse_err(line, format!("bad exponent in `{factor}`")))?;
        if idx >= n_vars {
            return Err(parse_err(
                line,
                format!("variable x{idx} out of range for n={}", n_vars as isize - 1),
            ));
        }
        e[idx] += exp;
    }
    Ok(ExponentVector(e))
}

struct RawList {
    which: ListedSet,
    tokens: Vec<(usize, String)>,
}

fn scan(text: &str) -> Result<RawList> {
    let mut which = None;
    let mut tokens = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let body = if which.is_none() {
            let (w, body) = if let Some(b) = content.strip_prefix("S:") {
                (ListedSet::Generators, b)
            } else if let Some(b) = content.strip_prefix("P:") {
                (ListedSet::Apolar, b)
            } else {
                return Err(parse_err(line, "expected header `S:` or `P:`"));
            };
            which = Some(w);
            body
        } else {
            if content.starts_with("S:") || content.starts_with("P:") {
                return Err(parse_err(line, "only one header allowed"));
            }
            content
        };
        tokens.extend(tokenize(body).into_iter().map(|t| (line, t)));
    }
    let which = which.ok_or_else(|| parse_err(1, "missing header `S:` or `P:`"))?;
    Ok(RawList { which, tokens })
}

/// Smallest `n` consistent with the variables and tuples appearing in `text`.
pub fn infer_n(text: &str) -> Result<usize> {
    let raw = scan(text)?;
    let mut n_vars = 0usize;
    for (line, tok) in &raw.tokens {
        if let Some(inner) = tok.strip_prefix('(') {
            n_vars = n_vars.max(inner.split(',').count());
            continue;
        }
        for factor in tok.split('*') {
            let idx = factor
                .strip_prefix('x')
                .and_then(|r| r.split('^').next())
                .and_then(|i| i.parse::<usize>().ok())
                .ok_or_else(|| parse_err(*line, format!("malformed factor `{factor}`")))?;
            n_vars = n_vars.max(idx + 1);
        }
    }
    if n_vars < 2 {
        return Err(parse_err(1, "cannot infer n >= 1 from the listed monomials"));
    }
    Ok(n_vars - 1)
}

/// Parses the `S:` / `P:` text format; the other half is filled in as the
/// complement inside `d·Δ`.
pub fn parse_system(text: &str, n: usize, d: u32) -> Result<MonomialSystem> {
    let raw = scan(text)?;
    let n_vars = n + 1;
    let mut seen = BTreeSet::new();
    let mut listed = Vec::new();
    for (line, tok) in &raw.tokens {
        let m = parse_token(tok, n_vars, *line)?;
        if m.degree() != d {
            return Err(parse_err(
                *line,
                format!("`{tok}` has degree {}, expected {d}", m.degree()),
            ));
        }
        if !seen.insert(m.clone()) {
            return Err(parse_err(*line, format!("duplicate monomial `{tok}`")));
        }
        listed.push(m);
    }
    let sys = match raw.which {
        ListedSet::Generators => MonomialSystem::from_generators(n, d, listed),
        ListedSet::Apolar => MonomialSystem::from_apolar(n, d, listed),
    };
    sys.map_err(|e| match e {
        Error::InvalidArgument(m) => parse_err(1, m),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(e: &[u32]) -> ExponentVector {
        ExponentVector::new(e.to_vec())
    }

    #[test]
    fn simplex_point_counts() {
        assert_eq!(lattice_points_simplex(2, 3).unwrap().len(), 10);
        assert_eq!(lattice_points_simplex(3, 3).unwrap().len(), 20);
        let line = lattice_points_simplex(1, 3).unwrap();
        let expect: BTreeSet<_> =
            [ev(&[3, 0]), ev(&[2, 1]), ev(&[1, 2]), ev(&[0, 3])].into_iter().collect();
        assert_eq!(line.into_iter().collect::<BTreeSet<_>>(), expect);
        for n in 1..=6 {
            let pts = lattice_points_simplex(n, 3).unwrap();
            assert_eq!(pts.len() as u64, binomial(n as u64 + 3, 3));
            assert!(pts.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn simplex_rejects_bad_arguments() {
        assert!(matches!(lattice_points_simplex(0, 3), Err(Error::InvalidArgument(_))));
        assert!(matches!(lattice_points_simplex(2, 0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn parse_togliatti() {
        let sys = parse_system("S: x0^3 x1^3 x2^3 x0*x1*x2", 2, 3).unwrap();
        assert_eq!(sys.generators().len(), 4);
        assert_eq!(sys.apolar().len(), 6);
        assert!(sys.is_artinian());
    }

    #[test]
    fn parse_apolar_and_tuples() {
        let text = "# truncated simplex\nP: (2,1,0) (2, 0, 1)\n x1^2*x0 x1^2*x2 # trailing\n(0,1,2) x2^2*x0\n";
        let sys = parse_system(text, 2, 3).unwrap();
        assert_eq!(sys.apolar().len(), 6);
        assert_eq!(sys.generators(), &[ev(&[0, 0, 3]), ev(&[0, 3, 0]), ev(&[1, 1, 1]), ev(&[3, 0, 0])]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match parse_system("P: x0^2*x1", 0, 3) {
            Err(Error::Parse { line: 1, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse_system("S: x0^2*x1\n x0^2*x1", 1, 3) {
            Err(Error::Parse { line: 2, message }) => assert!(message.contains("duplicate")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_system("S: x0^2", 1, 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_system("S: y0^3", 1, 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_system("x0^3", 1, 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_system("S: (1,2)", 2, 3), Err(Error::Parse { .. })));
    }

    #[test]
    fn infer_n_from_text() {
        assert_eq!(infer_n("S: x0^3 x3^3").unwrap(), 3);
        assert_eq!(infer_n("P: (1,1,1)").unwrap(), 2);
    }

    #[test]
    fn canonical_form_of_symmetric_system_is_itself() {
        let sys = parse_system("S: x0^3 x1^3 x2^3 x0*x1*x2", 2, 3).unwrap();
        assert_eq!(canonical_form(&sys), sys);
        let swapped = sys.permuted(&[1, 0, 2]);
        assert_eq!(canonical_form(&swapped), canonical_form(&sys));
    }

    #[test]
    fn canonical_form_first_counterexample() {
        // S for the n=3 system with the {0,1} pair removed from P.
        let sys = parse_system(
            "S: x0^3 x1^3 x2^3 x3^3 x0^2*x1 x0*x1^2 x0*x2*x3 x1*x2*x3",
            3,
            3,
        )
        .unwrap();
        let image = sys.permuted(&[0, 1, 3, 2]);
        assert_eq!(canonical_form(&image), canonical_form(&sys));
        let c = canonical_form(&sys);
        assert_eq!(canonical_form(&c), c);
    }

    #[test]
    fn display_and_serialize() {
        assert_eq!(ev(&[2, 1, 0]).to_string(), "x0^2*x1");
        assert_eq!(ev(&[0, 0, 0]).to_string(), "1");
        let sys = parse_system("S: x0^3 x1^3 x2^3 x0*x1*x2", 2, 3).unwrap();
        let text = sys.serialize();
        assert_eq!(parse_system(&text, 2, 3).unwrap(), sys);
        let text = sys.serialize_as(ListedSet::Apolar);
        assert_eq!(parse_system(&text, 2, 3).unwrap(), sys);
    }
}
