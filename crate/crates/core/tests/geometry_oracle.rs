#[path = "support/gen.rs"]
mod gen;
#[path = "support/hull_oracle.rs"]
mod hull_oracle;

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use togliatti::family::family_system;
use togliatti::polytope::{hull_structure, is_smooth, smoothness_check};
use togliatti::{lattice_points_simplex, ExponentVector, PartitionSpec};

fn agree(points: &[ExponentVector]) -> Result<(), String> {
    let model = hull_structure(points).map_err(|e| e.to_string())?;
    let raw: Vec<Vec<i64>> = points.iter().map(|p| p.to_i64()).collect();
    let oracle = hull_oracle::hull(&raw);
    let vertices: BTreeSet<Vec<i64>> = model.vertex_points().iter().map(|p| p.to_i64()).collect();
    let edges: BTreeSet<(Vec<i64>, Vec<i64>)> =
        model.edge_points().iter().map(|(a, b)| (a.to_i64(), b.to_i64())).collect();
    if model.dim() != oracle.dim {
        return Err(format!("dim {} vs oracle {}", model.dim(), oracle.dim));
    }
    if vertices != oracle.vertices {
        return Err(format!("vertices {vertices:?} vs oracle {:?}", oracle.vertices));
    }
    if edges != oracle.edges {
        return Err(format!("edges {edges:?} vs oracle {:?}", oracle.edges));
    }
    Ok(())
}

fn fixture_point_sets() -> Vec<(String, Vec<ExponentVector>)> {
    let mut sets: Vec<(String, Vec<ExponentVector>)> = ["brenner_kaid.txt", "first_counterexample_n3.txt", "nonminimal_15.txt", "quasi_smooth.txt"]
        .iter()
        .map(|f| (f.to_string(), gen::fixture(f).apolar().to_vec()))
        .collect();
    for parts in [&[2, 1, 1][..], &[2, 2], &[1, 1, 1, 1], &[3, 1, 1], &[2, 2, 1], &[1, 1, 1, 1, 1]] {
        let spec = PartitionSpec::new(parts.to_vec()).unwrap();
        sets.push((format!("family {spec}"), family_system(&spec).unwrap().system.apolar().to_vec()));
    }
    for n in 2..=3 {
        sets.push((format!("3Δ n={n}"), lattice_points_simplex(n, 3).unwrap()));
    }
    sets
}

#[test]
fn hull_matches_oracle_on_fixtures() {
    for (name, pts) in fixture_point_sets() {
        if let Err(e) = agree(&pts) {
            panic!("{name}: {e}");
        }
    }
}

#[test]
fn hull_matches_oracle_on_random_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e6f);
    for trial in 0..100 {
        let n = 1 + trial % 4;
        let pts = gen::random_points(&mut rng, n, 25);
        if let Err(e) = agree(&pts) {
            panic!("trial {trial}, points {pts:?}: {e}");
        }
    }
}

#[test]
fn first_counterexample_squarefree_points_are_edge_midpoints() {
    let model = hull_structure(gen::fixture("first_counterexample_n3.txt").apolar()).unwrap();
    let vs = model.vertex_points();
    let ev = |e: [u32; 4]| ExponentVector::new(e.to_vec());
    for (mid, a, b) in [([1, 1, 1, 0], [2, 0, 1, 0], [0, 2, 1, 0]), ([1, 1, 0, 1], [2, 0, 0, 1], [0, 2, 0, 1])] {
        assert!(!vs.contains(&ev(mid)), "{mid:?} is a vertex");
        assert!(vs.contains(&ev(a)) && vs.contains(&ev(b)));
        assert!(model.edge_points().contains(&(ev(b), ev(a))), "{a:?} -- {b:?} is not an edge");
    }
    assert_eq!(vs.len(), 10);
}

#[test]
fn full_simplex_is_smooth() {
    for n in 1..=5 {
        let cert = smoothness_check(&lattice_points_simplex(n, 3).unwrap()).unwrap();
        assert!(cert.smooth, "3Δ for n={n}: {:?}", cert.failure);
        assert_eq!(cert.vertices.len(), n + 1);
    }
}

#[test]
fn smoothness_is_permutation_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    for _ in 0..50 {
        let n = 2 + rand::Rng::gen_range(&mut rng, 0..3);
        let sys = gen::random_artinian(&mut rng, n);
        if sys.apolar().len() < 2 {
            continue;
        }
        let perm = gen::random_permutation(&mut rng, n + 1);
        let moved = sys.permuted(&perm);
        let a = smoothness_check(sys.apolar()).unwrap();
        let b = smoothness_check(moved.apolar()).unwrap();
        assert_eq!(a.smooth, b.smooth, "{sys:?} under {perm:?}");
        assert_eq!(a.vertices.len(), b.vertices.len());
        assert_eq!(a.lattice_index, b.lattice_index);
        assert_eq!(is_smooth(sys.apolar()).unwrap(), a.smooth);
    }
}
