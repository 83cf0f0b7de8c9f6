//! The classified family of minimal smooth cubic systems, one per partition
//! of the variables into groups.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::lefschetz::QuadricForm;
use crate::monomial::{binomial, lattice_points_simplex, MonomialSystem};
use crate::partition::{valid_partitions, PartitionSpec};

#[derive(Clone, Debug)]
pub struct FamilySystem {
    pub spec: PartitionSpec,
    pub system: MonomialSystem,
    pub mu: usize,
    pub beta: usize,
    pub witness_quadric: QuadricForm,
}

/// `S` = cubics supported in a single group, plus squarefree cubics meeting
/// every group at most once.
pub fn family_system(spec: &PartitionSpec) -> Result<FamilySystem> {
    let n = spec.n();
    let group = spec.group_of();
    let generators: Vec<_> = lattice_points_simplex(n, 3)?
        .into_iter()
        .filter(|m| {
            let support: Vec<usize> = (0..=n).filter(|&i| m.entries()[i] > 0).collect();
            let groups: Vec<usize> = support.iter().map(|&i| group[i]).collect();
            let single_group = groups.iter().all_equal();
            let transversal = m.is_squarefree() && groups.iter().all_unique();
            single_group || transversal
        })
        .collect();
    let mu = generators.len();
    if mu != mu_formula(spec) {
        return Err(Error::Internal(format!(
            "family {spec} has {mu} generators but the closed formula gives {}",
            mu_formula(spec)
        )));
    }
    let system = MonomialSystem::from_generators(n, 3, generators)?;
    let beta = system.apolar().len();
    Ok(FamilySystem { spec: spec.clone(), system, mu, beta, witness_quadric: witness_quadric(spec) })
}

/// `Σ C(a_i+2, 3) + Σ_{i<j<h} a_i a_j a_h`.
pub fn mu_formula(spec: &PartitionSpec) -> usize {
    let a = spec.parts();
    let cubes: u64 = a.iter().map(|&x| binomial(x as u64 + 2, 3)).sum();
    let triples: usize = a.iter().combinations(3).map(|t| t[0] * t[1] * t[2]).sum();
    cubes as usize + triples
}

/// `C(n+1, 3) + n + 1`.
pub fn mu_bound(n: usize) -> usize {
    binomial(n as u64 + 1, 3) as usize + n + 1
}

/// `2 Σ x_i^2 − 5 Σ x_i x_j + 9 Σ_{within groups} x_i x_j`.
pub fn witness_quadric(spec: &PartitionSpec) -> QuadricForm {
    let group = spec.group_of();
    QuadricForm::from_integers(spec.n() + 1, |_| 2, |i, j| if group[i] == group[j] { 4 } else { -5 })
}

/// Valid partitions attaining the bound `C(n+1, 3) + n + 1`.
pub fn equality_partitions(n: usize) -> Vec<PartitionSpec> {
    valid_partitions(n).into_iter().filter(|p| mu_formula(p) == mu_bound(n)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct BoundRow {
    pub partition: PartitionSpec,
    pub mu: usize,
    pub beta: usize,
    pub bound: usize,
    pub attains_bound: bool,
}

/// One row per valid partition for `2 <= n <= n_max`.
pub fn bound_table(n_max: usize) -> Vec<BoundRow> {
    (2..=n_max)
        .flat_map(valid_partitions)
        .map(|p| {
            let n = p.n();
            let mu = mu_formula(&p);
            let total = binomial(n as u64 + 3, 3) as usize;
            BoundRow { mu, beta: total - mu, bound: mu_bound(n), attains_bound: mu == mu_bound(n), partition: p }
        })
        .collect()
}
