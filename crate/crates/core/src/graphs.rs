//! Graphs attached to a cubic system: the directed graph `G_P` with an edge
//! `i -> j` whenever `x_i^2 x_j` is apolar, its undirected complement
//! `G_P'`, and the typed graph at a vertex `x_{i0}^3` of `3Δ`.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::{invalid, precondition, Error, Result};
use crate::monomial::{ExponentVector, MonomialSystem};
use crate::partition::PartitionSpec;
use crate::polytope::{spanned_lattice, AffineLattice};

fn require_cubic(sys: &MonomialSystem) -> Result<()> {
    if sys.degree() == 3 {
        Ok(())
    } else {
        Err(precondition("system graphs are defined for cubics only"))
    }
}

/// `x_i^2 x_j` in `n_vars` variables.
pub fn square_times(n_vars: usize, i: usize, j: usize) -> ExponentVector {
    let mut e = vec![0; n_vars];
    e[i] = 2;
    e[j] = 1;
    ExponentVector::new(e)
}

fn product3(n_vars: usize, i: usize, j: usize, k: usize) -> ExponentVector {
    let mut e = vec![0; n_vars];
    e[i] += 1;
    e[j] += 1;
    e[k] += 1;
    ExponentVector::new(e)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirectedSystemGraph {
    pub n_vars: usize,
    pub edges: BTreeSet<(usize, usize)>,
}

impl DirectedSystemGraph {
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i, j))
    }

    pub fn is_symmetric(&self) -> bool {
        self.edges.iter().all(|&(i, j)| self.has_edge(j, i))
    }

    /// A path `i -> j -> k -> j` whose first step is not reversible.
    pub fn noreturn_violation(&self) -> Option<(usize, usize, usize)> {
        for &(i, j) in &self.edges {
            if self.has_edge(j, i) {
                continue;
            }
            for k in 0..self.n_vars {
                if k != i && k != j && self.has_edge(j, k) && self.has_edge(k, j) {
                    return Some((i, j, k));
                }
            }
        }
        None
    }
}

impl fmt::Display for DirectedSystemGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n_vars {
            let out: Vec<String> = (0..self.n_vars).filter(|&j| self.has_edge(i, j)).map(|j| format!("v{j}")).collect();
            writeln!(f, "v{i} -> {}", out.join(" "))?;
        }
        Ok(())
    }
}

pub fn build_gp(sys: &MonomialSystem) -> Result<DirectedSystemGraph> {
    require_cubic(sys)?;
    let k = sys.n_vars();
    let edges = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && sys.is_apolar(&square_times(k, i, j)))
        .collect();
    Ok(DirectedSystemGraph { n_vars: k, edges })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementSystemGraph {
    pub n_vars: usize,
    /// Pairs `(i, j)` with `i < j`.
    pub edges: BTreeSet<(usize, usize)>,
    /// Pairs where exactly one of `x_i^2 x_j`, `x_j^2 x_i` is apolar.
    pub asymmetric_pairs: Vec<(usize, usize)>,
}

impl ComplementSystemGraph {
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n_vars];
        let mut out = Vec::new();
        for start in 0..self.n_vars {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut k = 0;
            while k < comp.len() {
                let v = comp[k];
                for w in 0..self.n_vars {
                    if !seen[w] && self.has_edge(v, w) {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

impl fmt::Display for ComplementSystemGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n_vars {
            let nb: Vec<String> = (0..self.n_vars)
                .filter(|&j| j != i && self.has_edge(i, j))
                .map(|j| format!("v{j}"))
                .collect();
            writeln!(f, "v{i} -- {}", nb.join(" "))?;
        }
        Ok(())
    }
}

pub fn build_gp_complement(sys: &MonomialSystem) -> Result<ComplementSystemGraph> {
    require_cubic(sys)?;
    let k = sys.n_vars();
    let mut edges = BTreeSet::new();
    let mut asymmetric_pairs = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let a = sys.is_apolar(&square_times(k, i, j));
            let b = sys.is_apolar(&square_times(k, j, i));
            if !a && !b {
                edges.insert((i, j));
            }
            if a != b {
                asymmetric_pairs.push((i, j));
            }
        }
    }
    Ok(ComplementSystemGraph { n_vars: k, edges, asymmetric_pairs })
}

pub fn check_symmetry(sys: &MonomialSystem) -> Result<bool> {
    Ok(build_gp(sys)?.is_symmetric())
}

/// Component sizes of `G_P'`, provided every component is complete.
pub fn extract_partition(sys: &MonomialSystem) -> Result<PartitionSpec> {
    let gp = build_gp(sys)?;
    if let Some(&(i, j)) = gp.edges.iter().find(|&&(i, j)| !gp.has_edge(j, i)) {
        return Err(Error::Structure {
            message: format!("G_P is not symmetric: v{i} -> v{j} without the reverse edge"),
            witness: None,
        });
    }
    let comp = build_gp_complement(sys)?;
    for c in comp.components() {
        for &a in &c {
            for &b in &c {
                if a == b || !comp.has_edge(a, b) {
                    continue;
                }
                if let Some(&x) = c.iter().find(|&&x| x != a && x != b && comp.has_edge(b, x) && !comp.has_edge(a, x)) {
                    return Err(Error::Structure {
                        message: format!("component {c:?} of G_P' is not complete: v{a} -- v{b} -- v{x} but not v{a} -- v{x}"),
                        witness: Some((a, b, x)),
                    });
                }
            }
        }
    }
    let mut parts: Vec<usize> = comp.components().iter().map(|c| c.len()).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    PartitionSpec::with_n(parts, sys.n())
}

/// Assignment of the neighbor `x_i` of `x_{i0}^3` along the edge of `3Δ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexType {
    /// `x_{i0}^2 x_i ∈ M`.
    A,
    /// `x_{i0} x_i^2 ∈ M`.
    B,
    /// Neither.
    C,
    /// Both; only possible when `x_{i0}^3 ∈ M`.
    Both,
}

impl fmt::Display for VertexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VertexType::A => "a",
            VertexType::B => "b",
            VertexType::C => "c",
            VertexType::Both => "ab",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypedVertexGraph {
    pub i0: usize,
    pub n_vars: usize,
    /// One entry per `i != i0`, ascending.
    pub types: Vec<(usize, VertexType)>,
    /// Pairs `(i, j)`, `i < j`, with `x_{i0} x_i x_j ∈ M`.
    pub edges: BTreeSet<(usize, usize)>,
    /// `x_{i0}^3 ∈ M`, in which case the typing carries no information.
    pub degenerate: bool,
}

impl TypedVertexGraph {
    pub fn type_of(&self, i: usize) -> Option<VertexType> {
        self.types.iter().find(|(v, _)| *v == i).map(|&(_, t)| t)
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    /// Configurations excluded whenever `x_{i0}^3 ∉ M`: a–a, a–b and b–c
    /// edges, and triangles through a type-c vertex.
    pub fn forbidden_configuration(&self) -> Option<String> {
        let t = |i| self.type_of(i).expect("typed vertex");
        for &(i, j) in &self.edges {
            let pair = (t(i), t(j));
            let bad = matches!(
                pair,
                (VertexType::A, VertexType::A)
                    | (VertexType::A, VertexType::B)
                    | (VertexType::B, VertexType::A)
                    | (VertexType::B, VertexType::C)
                    | (VertexType::C, VertexType::B)
            );
            if bad {
                return Some(format!("edge v{i}({}) -- v{j}({})", pair.0, pair.1));
            }
            for &(k, _) in &self.types {
                if k > j && self.has_edge(i, k) && self.has_edge(j, k) {
                    if let Some(c) = [i, j, k].into_iter().find(|&v| t(v) == VertexType::C) {
                        return Some(format!("triangle v{i} v{j} v{k} through type-c vertex v{c}"));
                    }
                }
            }
        }
        None
    }

    pub fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "i0 = {}{}", self.i0, if self.degenerate { " (degenerate)" } else { "" });
        for &(i, ty) in &self.types {
            let nb: Vec<String> = self
                .types
                .iter()
                .filter(|&&(j, _)| j != i && self.has_edge(i, j))
                .map(|(j, _)| format!("v{j}"))
                .collect();
            let _ = writeln!(out, "v{i} [{ty}] -- {}", nb.join(" "));
        }
        out
    }
}

pub fn typed_vertex_graph(points: &[ExponentVector], i0: usize) -> Result<TypedVertexGraph> {
    let lattice = spanned_lattice(points)?;
    if lattice.base.degree() != 3 {
        return Err(precondition("typed vertex graphs are defined for cubics only"));
    }
    let k = lattice.base.n_vars();
    if i0 >= k {
        return Err(invalid(format!("vertex index {i0} out of range for {k} variables")));
    }
    Ok(typed_graph_in(&lattice, i0))
}

pub(crate) fn typed_graph_in(lattice: &AffineLattice, i0: usize) -> TypedVertexGraph {
    let k = lattice.base.n_vars();
    let others: Vec<usize> = (0..k).filter(|&i| i != i0).collect();
    let types = others
        .iter()
        .map(|&i| {
            let a = lattice.contains(&square_times(k, i0, i));
            let b = lattice.contains(&square_times(k, i, i0));
            let ty = match (a, b) {
                (true, true) => VertexType::Both,
                (true, false) => VertexType::A,
                (false, true) => VertexType::B,
                (false, false) => VertexType::C,
            };
            (i, ty)
        })
        .collect();
    let mut edges = BTreeSet::new();
    for (x, &i) in others.iter().enumerate() {
        for &j in &others[x + 1..] {
            if lattice.contains(&product3(k, i0, i, j)) {
                edges.insert((i, j));
            }
        }
    }
    let degenerate = lattice.contains(&ExponentVector::pure_power(k, i0, 3));
    TypedVertexGraph { i0, n_vars: k, types, edges, degenerate }
}
