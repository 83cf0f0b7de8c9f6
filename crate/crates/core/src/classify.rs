//! Exhaustive search for minimal smooth monomial Togliatti systems of cubics,
//! the full per-system report, and the classification check against the
//! partition family.
//!
//! The search fixes the pure cubes inside `S` and adds the remaining cubic
//! monomials in increasing index order. A node is expanded only when it is
//! the smallest member of its orbit under coordinate permutations, and a
//! node whose apolar set already carries a quadric is never extended: every
//! superset of it fails the WLP as well, so no superset is minimal.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::family::{equality_partitions, family_system, mu_bound};
use crate::graphs::{build_gp, build_gp_complement, extract_partition, ComplementSystemGraph, DirectedSystemGraph};
use crate::lefschetz::{
    fails_wlp_in_degree_dminus1, is_minimal_by_subsets, is_minimal_togliatti, laplace_delta, quadric_monomials,
    quadric_space, restricted_dependence, togliatti_verdict, LaplaceReport, MinimalityCertificate, TogliattiVerdict,
    WlpVerdict,
};
use crate::linalg::integer::rank_bareiss;
use crate::linalg::modular::{rank_mod_m31, to_m31};
use crate::linalg::{LatticeIndex, RationalMatrix};
use crate::monomial::{are_equivalent, binomial, canonical_form, lattice_points_simplex, ExponentVector, MonomialSystem};
use crate::partition::{valid_partitions, PartitionSpec};
use crate::polytope::{
    contains_all_simplex_vertices, index_in_full_lattice, is_smooth, smoothness_check, spans_full_lattice, SmoothnessCertificate,
};

pub const SCHEMA_VERSION: &str = "togliatti-report/1";

/// Largest `n` the search accepts; `n = 4` additionally needs `best_effort`.
pub const MAX_SEARCH_N: usize = 4;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub n: usize,
    /// Upper bound on `|S|`; defaults to `C(n+2, 3)`.
    pub max_generators: Option<usize>,
    pub prune_orbits: bool,
    pub prune_togliatti_supersets: bool,
    pub budget: Option<Duration>,
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
    pub best_effort: bool,
    pub resume: Option<Checkpoint>,
}

impl SearchConfig {
    pub fn new(n: usize) -> Self {
        SearchConfig {
            n,
            max_generators: None,
            prune_orbits: true,
            prune_togliatti_supersets: true,
            budget: None,
            jobs: 0,
            best_effort: false,
            resume: None,
        }
    }

    pub fn max_generators(&self) -> usize {
        self.max_generators.unwrap_or(binomial(self.n as u64 + 2, 3) as usize)
    }
}

/// Progress of an interrupted search, sufficient to resume it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub n: usize,
    pub max_generators: usize,
    pub prune_orbits: bool,
    pub prune_togliatti_supersets: bool,
    /// Finished subtrees, identified by their two-element prefix.
    pub completed: Vec<(usize, usize)>,
    /// Generators of the systems found inside finished subtrees.
    pub found: Vec<Vec<ExponentVector>>,
    /// Nodes examined inside finished subtrees.
    pub nodes_examined: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes_examined: u64,
    pub pruned_orbit: u64,
    pub togliatti_nodes: u64,
    pub minimal_nodes: u64,
    pub smooth_minimal_nodes: u64,
    /// Nodes whose unique quadric misses every non-cube generator but
    /// vanishes at a pure cube.
    pub cube_vanishing_nodes: u64,
    pub cube_vanishing_smooth_nodes: u64,
    pub subtrees_total: usize,
    pub subtrees_completed: usize,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SearchStats {
    fn absorb(&mut self, o: &SearchStats) {
        self.nodes_examined += o.nodes_examined;
        self.pruned_orbit += o.pruned_orbit;
        self.togliatti_nodes += o.togliatti_nodes;
        self.minimal_nodes += o.minimal_nodes;
        self.smooth_minimal_nodes += o.smooth_minimal_nodes;
        self.cube_vanishing_nodes += o.cube_vanishing_nodes;
        self.cube_vanishing_smooth_nodes += o.cube_vanishing_smooth_nodes;
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassRecord {
    /// Canonical representative.
    pub system: MonomialSystem,
    pub size: usize,
    pub partition: Option<PartitionSpec>,
    pub partition_error: Option<String>,
    /// The class is the family system of `partition`, up to permutation.
    pub family_match: bool,
    pub verdict: TogliattiVerdict,
    pub smoothness: SmoothnessCertificate,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationResult {
    pub schema: &'static str,
    pub n: usize,
    pub max_generators: usize,
    pub complete: bool,
    pub classes: Vec<ClassRecord>,
    pub stats: SearchStats,
    /// Present when the budget ran out.
    pub checkpoint: Option<Checkpoint>,
}

struct Search {
    n: usize,
    cubes: Vec<ExponentVector>,
    candidates: Vec<ExponentVector>,
    /// Image of each candidate index under each non-identity permutation.
    perms: Vec<Vec<usize>>,
    eval_rows: Vec<Vec<i64>>,
    cols: usize,
    max_extra: usize,
    prune_orbits: bool,
    prune_supersets: bool,
    deadline: Option<Instant>,
    stop: AtomicBool,
}

#[derive(Default)]
struct TaskOutput {
    found: Vec<u64>,
    stats: SearchStats,
    finished: bool,
}

impl Search {
    fn new(config: &SearchConfig) -> Result<Search> {
        let n = config.n;
        let k = n + 1;
        let all = lattice_points_simplex(n, 3)?;
        let (cubes, candidates): (Vec<_>, Vec<_>) = all.into_iter().partition(|m| m.is_pure_power());
        let index: BTreeMap<&ExponentVector, usize> = candidates.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let perms = (0..k)
            .permutations(k)
            .filter(|p| p.iter().enumerate().any(|(i, &j)| i != j))
            .map(|p| candidates.iter().map(|m| index[&m.permuted(&p)]).collect())
            .collect();
        let qcols = quadric_monomials(k);
        let eval_rows = candidates
            .iter()
            .map(|m| {
                let e = m.entries();
                qcols.iter().map(|&(i, j)| e[i] as i64 * e[j] as i64).collect()
            })
            .collect();
        let max_extra = config.max_generators().saturating_sub(cubes.len());
        Ok(Search {
            n,
            cubes,
            candidates,
            perms,
            eval_rows,
            cols: qcols.len(),
            max_extra,
            prune_orbits: config.prune_orbits,
            prune_supersets: config.prune_togliatti_supersets,
            deadline: config.budget.map(|b| Instant::now() + b),
            stop: AtomicBool::new(false),
        })
    }

    fn image(&self, perm: &[usize], mask: u64) -> u64 {
        let mut out = 0u64;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            out |= 1 << perm[i];
            m &= m - 1;
        }
        out
    }

    /// `mask` is the least element of its orbit, where `A < B` iff the
    /// smallest index in the symmetric difference lies in `A`.
    fn is_canonical(&self, mask: u64) -> bool {
        self.perms.iter().all(|p| {
            let img = self.image(p, mask);
            let diff = img ^ mask;
            diff == 0 || (mask >> diff.trailing_zeros()) & 1 == 1
        })
    }

    fn generators(&self, mask: u64) -> Vec<ExponentVector> {
        let mut g = self.cubes.clone();
        g.extend((0..self.candidates.len()).filter(|&i| mask >> i & 1 == 1).map(|i| self.candidates[i].clone()));
        g
    }

    fn apolar(&self, mask: u64) -> Vec<ExponentVector> {
        (0..self.candidates.len()).filter(|&i| mask >> i & 1 == 0).map(|i| self.candidates[i].clone()).collect()
    }

    fn apolar_rows(&self, mask: u64) -> Vec<Vec<i64>> {
        (0..self.candidates.len()).filter(|&i| mask >> i & 1 == 0).map(|i| self.eval_rows[i].clone()).collect()
    }

    fn rank(&self, rows: &[Vec<i64>]) -> usize {
        let mut flat: Vec<u64> = rows.iter().flatten().map(|&x| to_m31(x)).collect();
        if rank_mod_m31(&mut flat, rows.len(), self.cols) == self.cols {
            return self.cols;
        }
        rank_bareiss(rows, self.cols).unwrap_or_else(|| RationalMatrix::from_i64_rows(self.cols, rows).rank())
    }

    fn quadric_dim(&self, mask: u64) -> usize {
        self.cols - self.rank(&self.apolar_rows(mask))
    }

    /// Minimal and smooth, given that the quadric space has dimension `qdim >= 1`.
    /// With a one-dimensional space, the quadric vanishes at a generator
    /// exactly when appending that generator's row leaves the rank deficient.
    fn accept(&self, mask: u64, qdim: usize, stats: &mut SearchStats) -> bool {
        if qdim != 1 {
            return false;
        }
        let mut rows = self.apolar_rows(mask);
        let mut misses = |g: &ExponentVector| {
            let e = g.entries();
            rows.push(quadric_monomials(self.n + 1).iter().map(|&(i, j)| e[i] as i64 * e[j] as i64).collect());
            let full = self.rank(&rows) == self.cols;
            rows.pop();
            full
        };
        let (cubes, others): (Vec<_>, Vec<_>) = self.generators(mask).into_iter().partition(|g| g.is_pure_power());
        if !others.iter().all(&mut misses) {
            return false;
        }
        if !cubes.iter().all(&mut misses) {
            // Minimal by the subset definition, which never drops a cube, but
            // not by the quadric criterion.
            stats.cube_vanishing_nodes += 1;
            if is_smooth(&self.apolar(mask)).unwrap_or(false) {
                stats.cube_vanishing_smooth_nodes += 1;
            }
            return false;
        }
        stats.minimal_nodes += 1;
        let smooth = is_smooth(&self.apolar(mask)).unwrap_or(false);
        if smooth {
            stats.smooth_minimal_nodes += 1;
        }
        smooth
    }

    fn out_of_time(&self, stats: &SearchStats) -> bool {
        if self.stop.load(Ordering::Relaxed) {
            return true;
        }
        if stats.nodes_examined % 64 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.stop.store(true, Ordering::Relaxed);
                    return true;
                }
            }
        }
        false
    }

    /// Examines `mask` (whose largest index is `last`). Returns whether its
    /// children should be visited.
    fn visit(&self, mask: u64, out: &mut TaskOutput) -> bool {
        out.stats.nodes_examined += 1;
        if self.prune_orbits && !self.is_canonical(mask) {
            out.stats.pruned_orbit += 1;
            return false;
        }
        let qdim = self.quadric_dim(mask);
        if qdim >= 1 {
            out.stats.togliatti_nodes += 1;
            if self.accept(mask, qdim, &mut out.stats) {
                out.found.push(mask);
            }
            if self.prune_supersets {
                return false;
            }
        }
        (mask.count_ones() as usize) < self.max_extra
    }

    fn dfs(&self, mask: u64, last: usize, out: &mut TaskOutput) -> bool {
        for next in last + 1..self.candidates.len() {
            if self.out_of_time(&out.stats) {
                return false;
            }
            let child = mask | 1 << next;
            if self.visit(child, out) && !self.dfs(child, next, out) {
                return false;
            }
        }
        true
    }

    fn run_task(&self, prefix: (usize, usize)) -> TaskOutput {
        let mut out = TaskOutput::default();
        let mask = 1u64 << prefix.0 | 1u64 << prefix.1;
        out.finished = if self.visit(mask, &mut out) { self.dfs(mask, prefix.1, &mut out) } else { true };
        out
    }
}

fn mask_of(search: &Search, gens: &[ExponentVector]) -> Option<u64> {
    let mut mask = 0u64;
    for g in gens.iter().filter(|g| !g.is_pure_power()) {
        mask |= 1 << search.candidates.iter().position(|c| c == g)?;
    }
    Some(mask)
}

pub fn enumerate_minimal_smooth(config: &SearchConfig) -> Result<ClassificationResult> {
    let start = Instant::now();
    let n = config.n;
    if !(2..=MAX_SEARCH_N).contains(&n) {
        return Err(invalid(format!("exhaustive search supports 2 <= n <= {MAX_SEARCH_N}, got n = {n}")));
    }
    if n == 4 && !config.best_effort {
        return Err(invalid("the n = 4 search is best-effort only and must be requested explicitly"));
    }
    let search = Search::new(config)?;
    if search.candidates.len() > 63 {
        return Err(Error::Internal("too many candidate monomials for a bitmask".into()));
    }
    if let Some(cp) = &config.resume {
        if cp.n != n
            || cp.max_generators != config.max_generators()
            || cp.prune_orbits != config.prune_orbits
            || cp.prune_togliatti_supersets != config.prune_togliatti_supersets
        {
            return Err(invalid("checkpoint was produced by a different search configuration"));
        }
    }

    // Depth 0 and 1 run here; every surviving depth-1 node seeds tasks at depth 2.
    let mut head = TaskOutput::default();
    let mut found: BTreeSet<u64> = BTreeSet::new();
    let mut tasks = Vec::new();
    let root_open = search.visit(0, &mut head);
    if root_open {
        for i in 0..search.candidates.len() {
            if search.visit(1 << i, &mut head) {
                tasks.extend((i + 1..search.candidates.len()).map(|j| (i, j)));
            }
        }
    }
    found.extend(head.found.iter().copied());
    let mut stats = head.stats;
    let done: BTreeSet<(usize, usize)> =
        config.resume.as_ref().map(|c| c.completed.iter().copied().collect()).unwrap_or_default();
    if let Some(cp) = &config.resume {
        for gens in &cp.found {
            found.insert(mask_of(&search, gens).ok_or_else(|| invalid("checkpoint lists a foreign monomial"))?);
        }
        stats.nodes_examined += cp.nodes_examined;
    }
    let pending: Vec<(usize, usize)> = tasks.iter().copied().filter(|t| !done.contains(t)).collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    let outputs: Vec<TaskOutput> = pool.install(|| pending.par_iter().map(|&t| search.run_task(t)).collect());

    let mut completed: Vec<(usize, usize)> = done.iter().copied().collect();
    let mut checkpoint_found: Vec<u64> = config
        .resume
        .as_ref()
        .map(|c| c.found.iter().filter_map(|g| mask_of(&search, g)).collect())
        .unwrap_or_default();
    let mut checkpoint_nodes = config.resume.as_ref().map_or(0, |c| c.nodes_examined);
    for (t, out) in pending.iter().zip(&outputs) {
        stats.absorb(&out.stats);
        found.extend(out.found.iter().copied());
        if out.finished {
            completed.push(*t);
            checkpoint_found.extend(out.found.iter().copied());
            checkpoint_nodes += out.stats.nodes_examined;
        }
    }
    completed.sort_unstable();
    let complete = completed.len() == tasks.len();
    stats.subtrees_total = tasks.len();
    stats.subtrees_completed = completed.len();

    let mut classes: BTreeMap<Vec<ExponentVector>, MonomialSystem> = BTreeMap::new();
    for &mask in &found {
        let sys = MonomialSystem::from_generators(n, 3, search.generators(mask))?;
        let canon = canonical_form(&sys);
        classes.entry(canon.generators().to_vec()).or_insert(canon);
    }
    let records = classes.into_values().map(|sys| class_record(sys)).collect::<Result<Vec<_>>>()?;

    let checkpoint = (!complete).then(|| {
        checkpoint_found.sort_unstable();
        checkpoint_found.dedup();
        Checkpoint {
            n,
            max_generators: config.max_generators(),
            prune_orbits: config.prune_orbits,
            prune_togliatti_supersets: config.prune_togliatti_supersets,
            completed,
            found: checkpoint_found.iter().map(|&m| search.generators(m)).collect(),
            nodes_examined: checkpoint_nodes,
        }
    });
    stats.wall_time = start.elapsed();
    Ok(ClassificationResult {
        schema: SCHEMA_VERSION,
        n,
        max_generators: config.max_generators(),
        complete,
        classes: records,
        stats,
        checkpoint,
    })
}

fn class_record(system: MonomialSystem) -> Result<ClassRecord> {
    let verdict = togliatti_verdict(&system)?;
    let smoothness = smoothness_check(system.apolar())?;
    let (partition, partition_error) = match extract_partition(&system) {
        Ok(p) => (Some(p), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let family_match = match &partition {
        Some(p) => are_equivalent(&family_system(p)?.system, &system),
        None => false,
    };
    Ok(ClassRecord { size: system.generators().len(), system, partition, partition_error, family_match, verdict, smoothness })
}

#[derive(Clone, Debug, Serialize)]
pub struct QuadricSpaceReport {
    pub dim: usize,
    pub basis: Vec<crate::lefschetz::QuadricForm>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StructuralReport {
    pub symmetric: bool,
    pub contains_all_simplex_vertices: bool,
    pub spans_full_lattice: bool,
    pub lattice_index: LatticeIndex,
    /// A path `v_i -> v_j -> v_k -> v_j` in `G_P` without `v_j -> v_i`.
    pub noreturn_violation: Option<(usize, usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConsistencyCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub schema: &'static str,
    pub system: MonomialSystem,
    pub artinian: bool,
    pub generator_count: usize,
    pub cardinality_bound: usize,
    pub within_bound: bool,
    pub wlp: Option<WlpVerdict>,
    pub restricted_dependence: Option<bool>,
    pub quadric_space: Option<QuadricSpaceReport>,
    pub laplace: Option<LaplaceReport>,
    pub laplace_error: Option<String>,
    pub togliatti: bool,
    pub minimality: Option<MinimalityCertificate>,
    pub minimal: bool,
    /// Subset-definition cross-check, run when there are few non-cube generators.
    /// Can be `true` while `minimal` is `false`: subsets keep every pure cube,
    /// so a unique quadric vanishing only at cubes is invisible to it.
    pub minimal_by_subsets: Option<bool>,
    pub smoothness: Option<SmoothnessCertificate>,
    pub gp: Option<DirectedSystemGraph>,
    pub gp_complement: Option<ComplementSystemGraph>,
    pub structural: Option<StructuralReport>,
    pub partition: Option<PartitionSpec>,
    pub partition_error: Option<String>,
    pub family_match: Option<bool>,
    pub consistency: Vec<ConsistencyCheck>,
}

/// Largest number of non-cube generators for which `check_command` runs the
/// subset-definition cross-check.
pub const SUBSET_CHECK_LIMIT: usize = 12;

/// Every verdict the library can compute on `sys`, with the algebraic
/// equivalences cross-checked. A disagreement is an internal error.
pub fn check_command(sys: &MonomialSystem) -> Result<CheckReport> {
    let artinian = sys.is_artinian();
    let cubic = sys.degree() == 3;
    let wlp = if artinian { Some(fails_wlp_in_degree_dminus1(sys)?) } else { None };
    let restricted = if artinian { Some(restricted_dependence(sys)?) } else { None };
    let quadric = cubic.then(|| {
        let basis: Vec<_> = quadric_space(sys.n(), sys.apolar()).iter().map(|q| q.normalized()).collect();
        QuadricSpaceReport { dim: basis.len(), basis }
    });
    let (laplace, laplace_error) = if cubic {
        match laplace_delta(sys.n(), sys.apolar()) {
            Ok(r) => (Some(r), None),
            Err(Error::Precondition(m)) => (None, Some(m)),
            Err(e) => return Err(e),
        }
    } else {
        (None, None)
    };
    let within = sys.within_cardinality_bound();
    let togliatti = within && wlp.as_ref().is_some_and(|w| w.fails);
    let minimality = if cubic && togliatti { Some(is_minimal_togliatti(sys)?) } else { None };
    let non_cubes = sys.generators().iter().filter(|m| !m.is_pure_power()).count();
    let minimal_by_subsets =
        if minimality.is_some() && non_cubes <= SUBSET_CHECK_LIMIT { Some(is_minimal_by_subsets(sys)?) } else { None };
    let geometric = cubic && !sys.apolar().is_empty();
    let smoothness = if geometric { Some(smoothness_check(sys.apolar())?) } else { None };
    let (gp, gp_complement) =
        if cubic { (Some(build_gp(sys)?), Some(build_gp_complement(sys)?)) } else { (None, None) };
    let structural = match &gp {
        Some(g) if geometric => Some(StructuralReport {
            symmetric: g.is_symmetric(),
            contains_all_simplex_vertices: contains_all_simplex_vertices(sys.apolar())?,
            spans_full_lattice: spans_full_lattice(sys.apolar())?,
            lattice_index: index_in_full_lattice(sys.apolar())?,
            noreturn_violation: g.noreturn_violation(),
        }),
        _ => None,
    };
    let (partition, partition_error) = if cubic {
        match extract_partition(sys) {
            Ok(p) => (Some(p), None),
            Err(e) => (None, Some(e.to_string())),
        }
    } else {
        (None, None)
    };
    let family_match = match &partition {
        Some(p) => Some(are_equivalent(&family_system(p)?.system, sys)),
        None => None,
    };

    let mut consistency = Vec::new();
    if let (Some(w), Some(r)) = (&wlp, restricted) {
        consistency.push(ConsistencyCheck { name: "kernel <=> restricted dependence".into(), passed: w.fails == r });
    }
    if let (Some(w), Some(q)) = (&wlp, &quadric) {
        if within {
            consistency.push(ConsistencyCheck { name: "kernel <=> quadric through P".into(), passed: w.fails == (q.dim >= 1) });
        }
    }
    if let (Some(l), Some(q)) = (&laplace, &quadric) {
        consistency.push(ConsistencyCheck { name: "laplace delta == quadric dimension".into(), passed: l.delta == q.dim });
    }
    if let (Some(b), Some(q)) = (minimal_by_subsets, &quadric) {
        let misses_non_cubes = q.dim == 1
            && sys.generators().iter().filter(|m| !m.is_pure_power()).all(|m| !q.basis[0].evaluate(m).is_zero());
        consistency.push(ConsistencyCheck {
            name: "subset minimality <=> unique quadric misses non-cube generators".into(),
            passed: b == misses_non_cubes,
        });
    }
    if let Some(bad) = consistency.iter().find(|c| !c.passed) {
        return Err(Error::Internal(format!("verdicts disagree: {}", bad.name)));
    }
    Ok(CheckReport {
        schema: SCHEMA_VERSION,
        system: sys.clone(),
        artinian,
        generator_count: sys.generators().len(),
        cardinality_bound: sys.cardinality_bound(),
        within_bound: within,
        wlp,
        restricted_dependence: restricted,
        quadric_space: quadric,
        laplace,
        laplace_error,
        togliatti,
        minimal: minimality.as_ref().is_some_and(|m| m.is_minimal()),
        minimality,
        minimal_by_subsets,
        smoothness,
        gp,
        gp_complement,
        structural,
        partition,
        partition_error,
        family_match,
        consistency,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyStatus {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExpectedClass {
    pub partition: PartitionSpec,
    pub system: MonomialSystem,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub schema: &'static str,
    pub status: VerifyStatus,
    pub n: usize,
    pub bound: usize,
    pub classes: Vec<ClassRecord>,
    pub expected: Vec<ExpectedClass>,
    /// Family systems the search did not find.
    pub missing: Vec<ExpectedClass>,
    /// Classes found by the search that are no family system.
    pub unexpected: Vec<MonomialSystem>,
    pub bound_violations: Vec<MonomialSystem>,
    pub equality_expected: Vec<PartitionSpec>,
    pub equality_found: Vec<PartitionSpec>,
    pub structural_failures: Vec<String>,
    pub stats: SearchStats,
    pub checkpoint: Option<Checkpoint>,
}

/// Classification check against the partition family built by `family`.
/// `family` is a parameter so that a deliberately broken generator can be
/// shown to make the check fail.
pub fn verify_theorem_with(
    config: &SearchConfig,
    family: &dyn Fn(&PartitionSpec) -> Result<MonomialSystem>,
) -> Result<TheoremReport> {
    let n = config.n;
    let result = enumerate_minimal_smooth(config)?;
    let bound = mu_bound(n);
    let expected = valid_partitions(n)
        .into_iter()
        .map(|p| Ok(ExpectedClass { system: canonical_form(&family(&p)?), partition: p }))
        .collect::<Result<Vec<_>>>()?;
    let found: BTreeSet<&[ExponentVector]> = result.classes.iter().map(|c| c.system.generators()).collect();
    let wanted: BTreeSet<&[ExponentVector]> = expected.iter().map(|e| e.system.generators()).collect();
    let missing: Vec<ExpectedClass> =
        expected.iter().filter(|e| !found.contains(e.system.generators())).cloned().collect();
    let unexpected: Vec<MonomialSystem> =
        result.classes.iter().filter(|c| !wanted.contains(c.system.generators())).map(|c| c.system.clone()).collect();
    let bound_violations: Vec<MonomialSystem> =
        result.classes.iter().filter(|c| c.size > bound).map(|c| c.system.clone()).collect();
    let equality_expected = equality_partitions(n);
    let mut equality_found: Vec<PartitionSpec> = result
        .classes
        .iter()
        .filter(|c| c.size == bound)
        .map(|c| {
            expected
                .iter()
                .find(|e| e.system.generators() == c.system.generators())
                .map(|e| e.partition.clone())
                .or_else(|| c.partition.clone())
        })
        .collect::<Option<Vec<_>>>()
        .unwrap_or_default();
    equality_found.sort_by(|a, b| b.cmp(a));
    let mut structural_failures = Vec::new();
    for c in &result.classes {
        let p = c.system.apolar();
        let gp = build_gp(&c.system)?;
        let label = c.system.generators().iter().join(" ");
        if !gp.is_symmetric() {
            structural_failures.push(format!("G_P not symmetric for {label}"));
        }
        if gp.noreturn_violation().is_some() {
            structural_failures.push(format!("one-way path in G_P for {label}"));
        }
        if !contains_all_simplex_vertices(p)? {
            structural_failures.push(format!("a pure cube lies outside the lattice of P for {label}"));
        }
        if !spans_full_lattice(p)? {
            structural_failures.push(format!("P spans a proper sublattice for {label}"));
        }
        if !(c.verdict.fails_wlp && c.verdict.minimal && c.smoothness.smooth) {
            structural_failures.push(format!("emitted class fails re-verification: {label}"));
        }
    }
    let mut expected_eq = equality_expected.clone();
    expected_eq.sort_by(|a, b| b.cmp(a));
    // Anything wrong with a class that was found stays wrong however far the search got.
    let refuted = !unexpected.is_empty() || !bound_violations.is_empty() || !structural_failures.is_empty();
    let status = if refuted {
        VerifyStatus::Fail
    } else if !result.complete {
        VerifyStatus::Inconclusive
    } else if missing.is_empty() && equality_found == expected_eq {
        VerifyStatus::Pass
    } else {
        VerifyStatus::Fail
    };
    Ok(TheoremReport {
        schema: SCHEMA_VERSION,
        status,
        n,
        bound,
        classes: result.classes,
        expected,
        missing,
        unexpected,
        bound_violations,
        equality_expected,
        equality_found,
        structural_failures,
        stats: result.stats,
        checkpoint: result.checkpoint,
    })
}

pub fn verify_theorem(config: &SearchConfig) -> Result<TheoremReport> {
    verify_theorem_with(config, &|p| Ok(family_system(p)?.system))
}
