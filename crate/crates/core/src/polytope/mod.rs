//! Convex hulls of lattice point sets, the affine lattice they span, and the
//! smoothness criterion for the associated toric variety: at every vertex the
//! semigroup generated by the points must be free, i.e. the vertex is simple,
//! its primitive edge directions form a basis of `M`, and the first lattice
//! point along every edge belongs to the set.
//!
//! Everything is computed in the lattice `M` spanned by the differences of
//! the points, never in the ambient `Z^{n+1}`. Vertices and edges come from
//! exact rational feasibility problems; no higher faces are built.

pub mod lp;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::linalg::{determinant, hnf, lattice_index, IntegerLatticeBasis, LatticeIndex};
use crate::monomial::ExponentVector;

fn diff(a: &ExponentVector, b: &ExponentVector) -> Vec<BigInt> {
    a.entries().iter().zip(b.entries()).map(|(&x, &y)| BigInt::from(x) - BigInt::from(y)).collect()
}

/// `base + M` for the lattice `M` spanned by differences of a point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineLattice {
    pub base: ExponentVector,
    pub lattice: IntegerLatticeBasis,
}

impl AffineLattice {
    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn coordinates(&self, p: &ExponentVector) -> Option<Vec<BigInt>> {
        if p.n_vars() != self.base.n_vars() {
            return None;
        }
        self.lattice.coordinates(&diff(p, &self.base))
    }

    pub fn contains(&self, p: &ExponentVector) -> bool {
        self.coordinates(p).is_some()
    }

    /// Coordinates of a difference vector of two lattice points.
    pub fn direction_coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        self.lattice.coordinates(v)
    }
}

fn sorted_unique(points: &[ExponentVector]) -> Vec<ExponentVector> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    pts
}

/// The lattice spanned by `p - p0`, with `p0` the lexicographically
/// smallest point.
pub fn spanned_lattice(points: &[ExponentVector]) -> Result<AffineLattice> {
    let pts = sorted_unique(points);
    let Some(base) = pts.first().cloned() else {
        return Err(invalid("cannot span a lattice from no points"));
    };
    if pts.iter().any(|p| p.n_vars() != base.n_vars()) {
        return Err(invalid("points have different dimensions"));
    }
    let diffs: Vec<_> = pts.iter().skip(1).map(|p| diff(p, &base)).collect();
    Ok(AffineLattice { lattice: hnf(base.n_vars(), &diffs), base })
}

/// `{v in Z^k : sum v = 0}`, the lattice of the dilated simplex.
pub fn simplex_lattice(n_vars: usize) -> IntegerLatticeBasis {
    let gens: Vec<Vec<BigInt>> = (0..n_vars.saturating_sub(1))
        .map(|i| {
            let mut v = vec![BigInt::zero(); n_vars];
            v[i] = BigInt::one();
            v[n_vars - 1] = -BigInt::one();
            v
        })
        .collect();
    hnf(n_vars, &gens)
}

/// Vertices and edges of `conv(points)` together with lattice data.
#[derive(Clone, Debug)]
pub struct LatticePolytopeModel {
    /// Deduplicated and sorted.
    pub points: Vec<ExponentVector>,
    pub lattice: AffineLattice,
    /// `points[i] - base` in the HNF basis of `M`.
    pub coords: Vec<Vec<BigInt>>,
    /// Indices into `points`, ascending.
    pub vertices: Vec<usize>,
    /// Pairs of point indices `(i, j)` with `i < j`, ascending.
    pub edges: Vec<(usize, usize)>,
}

impl LatticePolytopeModel {
    pub fn dim(&self) -> usize {
        self.lattice.rank()
    }

    pub fn vertex_points(&self) -> Vec<ExponentVector> {
        self.vertices.iter().map(|&i| self.points[i].clone()).collect()
    }

    pub fn edge_points(&self) -> Vec<(ExponentVector, ExponentVector)> {
        self.edges.iter().map(|&(i, j)| (self.points[i].clone(), self.points[j].clone())).collect()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
            .collect()
    }

    /// Plain-text listing of vertices and edges in `M`-coordinates.
    pub fn dump(&self) -> String {
        let fmt = |c: &[BigInt]| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let mut out = String::new();
        let _ = writeln!(out, "lattice {}", self.lattice.lattice);
        let _ = writeln!(out, "base {}", self.lattice.base);
        for &v in &self.vertices {
            let _ = writeln!(out, "vertex {} [{}]", self.points[v], fmt(&self.coords[v]));
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "edge {} -- {}", self.points[a], self.points[b]);
        }
        out
    }
}

fn sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn is_positive_multiple(g: &[BigInt], d: &[BigInt]) -> bool {
    let dot: BigInt = g.iter().zip(d).map(|(x, y)| x * y).sum();
    if !dot.is_positive() {
        return false;
    }
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            if &g[i] * &d[j] != &g[j] * &d[i] {
                return false;
            }
        }
    }
    true
}

fn is_vertex(coords: &[Vec<BigInt>], v: usize) -> bool {
    // sum lambda_u q_u = q_v, sum lambda_u = 1, lambda >= 0 over u != v.
    let columns: Vec<Vec<BigInt>> = coords
        .iter()
        .enumerate()
        .filter(|&(u, _)| u != v)
        .map(|(_, q)| {
            let mut col = q.clone();
            col.push(BigInt::one());
            col
        })
        .collect();
    let mut b = coords[v].clone();
    b.push(BigInt::one());
    !lp::feasible_int(&columns, &b)
}

/// `{v, w}` spans an edge iff `w - v` is an extreme ray of the tangent cone
/// at the vertex `v`, i.e. it is not a nonnegative combination of the other
/// directions `u - v` that are not themselves on the ray.
fn is_edge(coords: &[Vec<BigInt>], v: usize, w: usize) -> bool {
    let d = sub(&coords[w], &coords[v]);
    let columns: Vec<Vec<BigInt>> = coords
        .iter()
        .enumerate()
        .filter(|&(u, _)| u != v)
        .map(|(_, q)| sub(q, &coords[v]))
        .filter(|g| !is_positive_multiple(g, &d))
        .collect();
    !lp::feasible_int(&columns, &d)
}

pub fn hull_structure(points: &[ExponentVector]) -> Result<LatticePolytopeModel> {
    let lattice = spanned_lattice(points)?;
    let points = sorted_unique(points);
    let coords: Vec<Vec<BigInt>> = points
        .iter()
        .map(|p| lattice.coordinates(p).expect("every point lies in its own affine span"))
        .collect();
    let vertices: Vec<usize> = (0..points.len()).filter(|&v| is_vertex(&coords, v)).collect();
    let mut edges = Vec::new();
    for (k, &v) in vertices.iter().enumerate() {
        for &w in &vertices[k + 1..] {
            if is_edge(&coords, v, w) {
                edges.push((v, w));
            }
        }
    }
    Ok(LatticePolytopeModel { points, lattice, coords, vertices, edges })
}

/// Same verdict as `smoothness_check(points)?.smooth`, stopping at the first
/// failing vertex.
pub fn is_smooth(points: &[ExponentVector]) -> Result<bool> {
    let lattice = spanned_lattice(points)?;
    let points = sorted_unique(points);
    let coords: Vec<Vec<BigInt>> = points
        .iter()
        .map(|p| lattice.coordinates(p).expect("every point lies in its own affine span"))
        .collect();
    let dim = lattice.rank();
    let vertices: Vec<usize> = (0..points.len()).filter(|&v| is_vertex(&coords, v)).collect();
    let mut known: BTreeMap<(usize, usize), bool> = BTreeMap::new();
    for &v in &vertices {
        let mut directions = Vec::new();
        for &w in vertices.iter().filter(|&&w| w != v) {
            let key = (v.min(w), v.max(w));
            let edge = *known.entry(key).or_insert_with(|| is_edge(&coords, key.0, key.1));
            if edge {
                let (d, step) = edge_step(&points, &coords, v, w);
                if points.binary_search(&step).is_err() {
                    return Ok(false);
                }
                directions.push(d);
                if directions.len() > dim {
                    return Ok(false);
                }
            }
        }
        if directions.len() != dim || (dim > 0 && !determinant(&directions).abs().is_one()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexRecord {
    pub vertex: ExponentVector,
    pub edge_count: usize,
    /// Primitive edge directions in `M`-coordinates, sorted.
    #[serde(serialize_with = "crate::report::ser_bigint_rows")]
    pub directions: Vec<Vec<BigInt>>,
    /// Determinant of the directions when there are exactly `dim` of them.
    #[serde(serialize_with = "crate::report::ser_opt_bigint")]
    pub determinant: Option<BigInt>,
    /// Smith invariants of the direction matrix.
    #[serde(serialize_with = "crate::report::ser_bigint_list")]
    pub smith: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SmoothnessFailure {
    NotSimple { vertex: ExponentVector, edge_count: usize, dim: usize },
    NotUnimodular {
        vertex: ExponentVector,
        #[serde(serialize_with = "crate::report::ser_bigint")]
        determinant: BigInt,
    },
    /// The first lattice point after `vertex` on one of its edges is not in
    /// the set, so the semigroup at `vertex` is not free.
    MissingEdgePoint { vertex: ExponentVector, point: ExponentVector },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothnessCertificate {
    pub smooth: bool,
    pub dim: usize,
    /// Index of `M` in the lattice `{v : sum v = 0}`.
    pub lattice_index: LatticeIndex,
    pub vertices: Vec<VertexRecord>,
    pub failure: Option<SmoothnessFailure>,
}

pub fn smoothness_check(points: &[ExponentVector]) -> Result<SmoothnessCertificate> {
    let model = hull_structure(points)?;
    Ok(smoothness_of_model(&model))
}

pub fn smoothness_of_model(model: &LatticePolytopeModel) -> SmoothnessCertificate {
    let dim = model.dim();
    let mut records = Vec::with_capacity(model.vertices.len());
    let mut failure = None;
    for &v in &model.vertices {
        let steps: Vec<_> =
            model.neighbors(v).into_iter().map(|w| edge_step(&model.points, &model.coords, v, w)).collect();
        let missing = steps.iter().map(|(_, p)| p).find(|p| model.points.binary_search(p).is_err()).cloned();
        let mut directions: Vec<Vec<BigInt>> = steps.into_iter().map(|(d, _)| d).collect();
        directions.sort();
        let smith = crate::linalg::smith_diagonal(&directions);
        let det = (directions.len() == dim).then(|| determinant(&directions));
        let record = VertexRecord {
            vertex: model.points[v].clone(),
            edge_count: directions.len(),
            directions,
            determinant: det.clone(),
            smith,
        };
        if failure.is_none() {
            if record.edge_count != dim {
                failure = Some(SmoothnessFailure::NotSimple {
                    vertex: record.vertex.clone(),
                    edge_count: record.edge_count,
                    dim,
                });
            } else if let Some(d) = det.filter(|d| !d.abs().is_one()) {
                if dim > 0 {
                    failure = Some(SmoothnessFailure::NotUnimodular { vertex: record.vertex.clone(), determinant: d });
                }
            } else if let Some(point) = missing {
                failure = Some(SmoothnessFailure::MissingEdgePoint { vertex: record.vertex.clone(), point });
            }
        }
        records.push(record);
    }
    let full = simplex_lattice(model.lattice.base.n_vars());
    let lattice_index = lattice_index(&model.lattice.lattice, &full).unwrap_or(LatticeIndex::Infinite);
    SmoothnessCertificate { smooth: failure.is_none(), dim, lattice_index, vertices: records, failure }
}

/// The primitive direction from `v` towards `w` in `M`-coordinates and the
/// first lattice point of `M` on that edge after `v`.
fn edge_step(points: &[ExponentVector], coords: &[Vec<BigInt>], v: usize, w: usize) -> (Vec<BigInt>, ExponentVector) {
    let d = sub(&coords[w], &coords[v]);
    let g = d.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let g = i64::try_from(&g).expect("edge lengths in a dilated simplex are small");
    let step = points[v]
        .entries()
        .iter()
        .zip(points[w].entries())
        .map(|(&a, &b)| (a as i64 + (b as i64 - a as i64) / g) as u32)
        .collect();
    (d.iter().map(|x| x / g).collect(), ExponentVector::new(step))
}

/// Every `d·e_i` lies in the affine lattice spanned by the points.
pub fn contains_all_simplex_vertices(points: &[ExponentVector]) -> Result<bool> {
    let lat = spanned_lattice(points)?;
    let n_vars = lat.base.n_vars();
    let d = lat.base.degree();
    Ok((0..n_vars).all(|i| lat.contains(&ExponentVector::pure_power(n_vars, i, d))))
}

/// The points span all of `{v : sum v = 0}` (index one).
pub fn spans_full_lattice(points: &[ExponentVector]) -> Result<bool> {
    let lat = spanned_lattice(points)?;
    let full = simplex_lattice(lat.base.n_vars());
    Ok(lattice_index(&lat.lattice, &full)? == LatticeIndex::Finite(BigInt::one()))
}

pub fn index_in_full_lattice(points: &[ExponentVector]) -> Result<LatticeIndex> {
    let lat = spanned_lattice(points)?;
    lattice_index(&lat.lattice, &simplex_lattice(lat.base.n_vars()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::lattice_points_simplex;

    fn ev(e: &[u32]) -> ExponentVector {
        ExponentVector::new(e.to_vec())
    }

    pub(crate) fn truncated_simplex(n: usize) -> Vec<ExponentVector> {
        lattice_points_simplex(n, 3)
            .unwrap()
            .into_iter()
            .filter(|m| {
                let e = m.entries();
                e.iter().filter(|&&x| x == 2).count() == 1 && e.iter().filter(|&&x| x == 1).count() == 1
            })
            .collect()
    }

    #[test]
    fn truncated_simplex_is_a_smooth_hexagon() {
        let pts = truncated_simplex(2);
        let model = hull_structure(&pts).unwrap();
        assert_eq!(model.dim(), 2);
        assert_eq!(model.vertices.len(), 6);
        assert_eq!(model.edges.len(), 6);
        let cert = smoothness_check(&pts).unwrap();
        assert!(cert.smooth);
        assert!(is_smooth(&pts).unwrap());
        assert_eq!(cert.lattice_index, LatticeIndex::Finite(1.into()));
        assert!(spans_full_lattice(&pts).unwrap());
    }

    #[test]
    fn triangle() {
        let pts = lattice_points_simplex(2, 3).unwrap();
        let model = hull_structure(&pts).unwrap();
        assert_eq!(model.vertex_points(), vec![ev(&[0, 0, 3]), ev(&[0, 3, 0]), ev(&[3, 0, 0])]);
        assert_eq!(model.edges.len(), 3);
        assert!(smoothness_check(&pts).unwrap().smooth);
    }

    #[test]
    fn cube_vertices_span_index_nine() {
        let pts = [ev(&[3, 0, 0]), ev(&[0, 3, 0]), ev(&[0, 0, 3])];
        let lat = spanned_lattice(&pts).unwrap();
        assert_eq!(lat.rank(), 2);
        assert_eq!(index_in_full_lattice(&pts).unwrap(), LatticeIndex::Finite(9.into()));
        assert!(!spans_full_lattice(&pts).unwrap());
        // In its own lattice the big triangle is a unimodular simplex.
        assert!(smoothness_check(&pts).unwrap().smooth);
    }

    #[test]
    fn degenerate_dimensions() {
        let one = [ev(&[1, 1, 1])];
        assert_eq!(spanned_lattice(&one).unwrap().rank(), 0);
        let cert = smoothness_check(&one).unwrap();
        assert!(cert.smooth);
        assert_eq!(cert.dim, 0);
        let seg = [ev(&[3, 0, 0]), ev(&[2, 1, 0]), ev(&[0, 3, 0])];
        let model = hull_structure(&seg).unwrap();
        assert_eq!(model.dim(), 1);
        assert_eq!(model.vertices.len(), 2);
        assert_eq!(model.edges.len(), 1);
        // [s^3 : s^2 t : t^3] is the cuspidal cubic.
        assert!(!smoothness_check(&seg).unwrap().smooth);
        let mut twisted = seg.to_vec();
        twisted.push(ev(&[1, 2, 0]));
        assert!(smoothness_check(&twisted).unwrap().smooth);
        assert!(spanned_lattice(&[]).is_err());
    }

    #[test]
    fn index_two_face_configuration() {
        // Edges at x_j^2 x_k toward x_k^2 x_j and x_i^2 x_j, coordinates (i,j,k).
        let v = ev(&[0, 2, 1]);
        let a = ev(&[0, 1, 2]);
        let b = ev(&[2, 1, 0]);
        let face = simplex_lattice(3);
        let dirs: Vec<Vec<BigInt>> =
            [diff(&a, &v), diff(&b, &v)].iter().map(|d| face.coordinates(d).unwrap()).collect();
        assert_eq!(determinant(&dirs).abs(), BigInt::from(2));
        let sub = hnf(3, &[diff(&a, &v), diff(&b, &v)]);
        assert_eq!(lattice_index(&sub, &face).unwrap(), LatticeIndex::Finite(2.into()));
    }

    #[test]
    fn simplex_vertex_membership() {
        let tog = truncated_simplex(2);
        assert!(contains_all_simplex_vertices(&tog).unwrap());
        assert!(contains_all_simplex_vertices(&[ev(&[2, 1]), ev(&[1, 2])]).unwrap());
        assert!(!contains_all_simplex_vertices(&[ev(&[1, 1, 1])]).unwrap());
    }

    #[test]
    fn skipped_edge_point_is_not_smooth() {
        // Simple and unimodular, but (1,1,1,0) halves the edge between x0^2 x2 and x1^2 x2.
        let p: Vec<ExponentVector> = [
            [1, 0, 1, 1], [0, 1, 1, 1], [2, 0, 1, 0], [2, 0, 0, 1], [1, 0, 2, 0], [1, 0, 0, 2],
            [0, 2, 1, 0], [0, 2, 0, 1], [0, 1, 2, 0], [0, 1, 0, 2], [0, 0, 2, 1], [0, 0, 1, 2],
        ]
        .iter()
        .map(|e: &[u32; 4]| ev(e))
        .collect();
        let cert = smoothness_check(&p).unwrap();
        assert!(!cert.smooth);
        assert!(cert.vertices.iter().all(|r| r.edge_count == 3 && r.determinant.as_ref().is_some_and(|d| d.abs().is_one())));
        assert!(matches!(cert.failure, Some(SmoothnessFailure::MissingEdgePoint { .. })));
        assert!(!is_smooth(&p).unwrap());
        let mut q = p.clone();
        q.extend([ev(&[1, 1, 1, 0]), ev(&[1, 1, 0, 1])]);
        assert_eq!(smoothness_check(&q).unwrap().smooth, is_smooth(&q).unwrap());
    }
}
