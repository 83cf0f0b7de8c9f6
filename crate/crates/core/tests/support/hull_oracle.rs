//! Brute-force hull oracle: vertices and edges from the supporting
//! hyperplanes through every affinely independent subset of points.
//! Uses nothing from the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub type Point = Vec<i64>;

pub struct OracleHull {
    pub dim: usize,
    pub vertices: BTreeSet<Point>,
    pub edges: BTreeSet<(Point, Point)>,
}

fn rank(rows: &[Vec<i128>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                for k in 0..cols {
                    m[i][k] = m[i][k] * a - m[r][k] * b;
                }
                let g = m[i].iter().fold(0i128, |g, &x| gcd(g, x));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        r += 1;
    }
    r
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        k => (0..k)
            .map(|c| {
                let minor: Vec<Vec<i128>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect()).collect();
                let s = if c % 2 == 0 { 1 } else { -1 };
                s * m[0][c] * det(&minor)
            })
            .sum(),
    }
}

/// Normal to the hyperplane spanned by `k - 1` difference vectors in `Q^k`.
fn normal(diffs: &[Vec<i128>], k: usize) -> Vec<i128> {
    (0..k)
        .map(|c| {
            let minor: Vec<Vec<i128>> =
                diffs.iter().map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect()).collect();
            if c % 2 == 0 {
                det(&minor)
            } else {
                -det(&minor)
            }
        })
        .collect()
}

fn dot(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Coordinates that keep the affine hull injective.
fn projection(pts: &[Vec<i128>]) -> Vec<usize> {
    let diffs: Vec<Vec<i128>> = pts.iter().map(|p| p.iter().zip(&pts[0]).map(|(a, b)| a - b).collect()).collect();
    let target = rank(&diffs);
    let mut chosen = Vec::new();
    for c in 0..pts[0].len() {
        let mut trial = chosen.clone();
        trial.push(c);
        let sub: Vec<Vec<i128>> = diffs.iter().map(|d| trial.iter().map(|&j| d[j]).collect()).collect();
        if rank(&sub) == trial.len() {
            chosen = trial;
        }
        if chosen.len() == target {
            break;
        }
    }
    chosen
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn hull(points: &[Point]) -> OracleHull {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();
    let wide: Vec<Vec<i128>> = pts.iter().map(|p| p.iter().map(|&x| x as i128).collect()).collect();
    let proj = projection(&wide);
    let m = proj.len();
    let q: Vec<Vec<i128>> = wide.iter().map(|p| proj.iter().map(|&j| p[j]).collect()).collect();
    let mut vertices = BTreeSet::new();
    let mut edges = BTreeSet::new();
    match m {
        0 => {
            vertices.insert(pts[0].clone());
        }
        1 => {
            let lo = (0..q.len()).min_by_key(|&i| q[i][0]).unwrap();
            let hi = (0..q.len()).max_by_key(|&i| q[i][0]).unwrap();
            vertices.insert(pts[lo].clone());
            vertices.insert(pts[hi].clone());
            let (a, b) = (pts[lo].clone().min(pts[hi].clone()), pts[lo].clone().max(pts[hi].clone()));
            edges.insert((a, b));
        }
        _ => {
            let mut facets: BTreeSet<(Vec<i128>, i128)> = BTreeSet::new();
            for s in subsets(q.len(), m) {
                let diffs: Vec<Vec<i128>> =
                    s[1..].iter().map(|&i| q[i].iter().zip(&q[s[0]]).map(|(a, b)| a - b).collect()).collect();
                let mut nv = normal(&diffs, m);
                let g = nv.iter().fold(0, |g, &x| gcd(g, x));
                if g == 0 {
                    continue;
                }
                nv.iter_mut().for_each(|x| *x /= g);
                let c = dot(&nv, &q[s[0]]);
                let vals: Vec<i128> = q.iter().map(|p| dot(&nv, p) - c).collect();
                if vals.iter().all(|&v| v <= 0) {
                    facets.insert((nv, c));
                } else if vals.iter().all(|&v| v >= 0) {
                    facets.insert((nv.iter().map(|x| -x).collect(), -c));
                }
            }
            let tight = |i: usize| -> Vec<Vec<i128>> {
                facets.iter().filter(|(nv, c)| dot(nv, &q[i]) == *c).map(|(nv, _)| nv.clone()).collect()
            };
            let vs: Vec<usize> = (0..q.len()).filter(|&i| rank(&tight(i)) == m).collect();
            for &v in &vs {
                vertices.insert(pts[v].clone());
            }
            for (a, &v) in vs.iter().enumerate() {
                for &w in &vs[a + 1..] {
                    let both: Vec<Vec<i128>> = facets
                        .iter()
                        .filter(|(nv, c)| dot(nv, &q[v]) == *c && dot(nv, &q[w]) == *c)
                        .map(|(nv, _)| nv.clone())
                        .collect();
                    if rank(&both) == m - 1 {
                        edges.insert((pts[v].clone(), pts[w].clone()));
                    }
                }
            }
        }
    }
    OracleHull { dim: m, vertices, edges }
}
