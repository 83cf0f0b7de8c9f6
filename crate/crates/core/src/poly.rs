//! Sparse polynomials with integer coefficients, just enough for exact
//! expansion checks.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::monomial::ExponentVector;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    n_vars: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl Polynomial {
    pub fn zero(n_vars: usize) -> Self {
        Polynomial { n_vars, terms: BTreeMap::new() }
    }

    pub fn monomial(m: ExponentVector, c: impl Into<BigInt>) -> Self {
        let mut p = Polynomial::zero(m.n_vars());
        p.add_term(m, c.into());
        p
    }

    /// `x_0 + ... + x_{n_vars-1}`.
    pub fn sum_of_variables(n_vars: usize) -> Self {
        let mut p = Polynomial::zero(n_vars);
        for i in 0..n_vars {
            p.add_term(ExponentVector::pure_power(n_vars, i, 1), BigInt::one());
        }
        p
    }

    pub fn from_terms(n_vars: usize, terms: impl IntoIterator<Item = (ExponentVector, BigInt)>) -> Self {
        let mut p = Polynomial::zero(n_vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn add_term(&mut self, m: ExponentVector, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &ExponentVector) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &ExponentVector> {
        self.terms.keys()
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.n_vars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e: Vec<u32> = a.entries().iter().zip(b.entries()).map(|(x, y)| x + y).collect();
                out.add_term(ExponentVector::new(e), ca * cb);
            }
        }
        out
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::monomial(ExponentVector::new(vec![0; self.n_vars]), 1);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Replace every variable `x_i` by the polynomial `images[i]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        let target_vars = images.first().map_or(0, |p| p.n_vars);
        let mut out = Polynomial::zero(target_vars);
        for (m, c) in &self.terms {
            let mut term = Polynomial::monomial(ExponentVector::new(vec![0; target_vars]), c.clone());
            for (i, &e) in m.entries().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e));
                }
            }
            out = out.add(&term);
        }
        out
    }
}

impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Highest monomial first reads more naturally.
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let is_const = m.degree() == 0;
            if abs.is_one() && !is_const {
                write!(f, "{m}")?;
            } else if is_const {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
