//! Seeded random inputs and the shared fixture files.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use togliatti::monomial::binomial;
use togliatti::{lattice_points_simplex, parse_system, ExponentVector, MonomialSystem};

pub fn fixture(name: &str) -> MonomialSystem {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    parse_system(&text, togliatti::monomial::infer_n(&text).unwrap(), 3).unwrap()
}

/// Pure cubes plus a uniformly sized random set of other cubics, keeping
/// `|S| <= C(n+2, 3)`.
pub fn random_artinian<R: Rng>(rng: &mut R, n: usize) -> MonomialSystem {
    let (cubes, others): (Vec<ExponentVector>, Vec<ExponentVector>) =
        lattice_points_simplex(n, 3).unwrap().into_iter().partition(|m| m.is_pure_power());
    let room = binomial(n as u64 + 2, 3) as usize - cubes.len();
    let k = rng.gen_range(0..=room);
    let mut gens = cubes;
    gens.extend(others.choose_multiple(rng, k).cloned());
    MonomialSystem::from_generators(n, 3, gens).unwrap()
}

pub fn random_points<R: Rng>(rng: &mut R, n: usize, max: usize) -> Vec<ExponentVector> {
    let all = lattice_points_simplex(n, 3).unwrap();
    let k = rng.gen_range(2..=max.min(all.len()));
    all.choose_multiple(rng, k).cloned().collect()
}

pub fn random_permutation<R: Rng>(rng: &mut R, k: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..k).collect();
    p.shuffle(rng);
    p
}
