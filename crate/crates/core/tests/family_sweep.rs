use num_rational::BigRational;
use num_traits::Zero;

use togliatti::family::{bound_table, equality_partitions, family_system, mu_bound, mu_formula};
use togliatti::graphs::{extract_partition, square_times};
use togliatti::lefschetz::{fails_wlp_in_degree_dminus1, is_minimal_togliatti, quadric_space, MinimalityCertificate};
use togliatti::monomial::binomial;
use togliatti::partition::valid_partitions;
use togliatti::polytope::smoothness_check;
use togliatti::PartitionSpec;

/// Non-increasing sequences summing to `total` with parts in `1..=max`,
/// built by brute force over all compositions.
fn partitions_by_brute_force(total: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << (total - 1)) {
        let mut parts = Vec::new();
        let mut run = 1;
        for b in 0..total - 1 {
            if mask >> b & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        if parts.windows(2).all(|w| w[0] >= w[1]) && parts[0] <= max {
            out.push(parts);
        }
    }
    out.sort();
    out
}

fn spec(parts: &[usize]) -> PartitionSpec {
    PartitionSpec::new(parts.to_vec()).unwrap()
}

#[test]
fn valid_partition_counts() {
    let counts: Vec<usize> = (2..=5).map(|n| valid_partitions(n).len()).collect();
    assert_eq!(counts, [1, 3, 5, 9]);
    assert_eq!(counts.iter().sum::<usize>(), 18);
    for n in 2..=8 {
        let mut ours: Vec<Vec<usize>> = valid_partitions(n).iter().map(|p| p.parts().to_vec()).collect();
        ours.sort();
        assert_eq!(ours, partitions_by_brute_force(n + 1, n - 1), "n={n}");
    }
}

#[test]
fn partition_round_trip() {
    for n in 2..=6 {
        for p in valid_partitions(n) {
            let f = family_system(&p).unwrap();
            assert_eq!(extract_partition(&f.system).unwrap(), p);
        }
    }
}

#[test]
fn generator_counts() {
    for n in 2..=7 {
        let total = binomial(n as u64 + 3, 3) as usize;
        for p in valid_partitions(n) {
            let f = family_system(&p).unwrap();
            assert_eq!(f.system.generators().len(), f.mu);
            assert_eq!(f.system.apolar().len(), f.beta);
            assert_eq!(f.mu + f.beta, total);
            assert_eq!(f.mu, mu_formula(&p));
        }
    }
}

#[test]
fn witness_quadric_separates_p_from_s() {
    for n in 2..=6 {
        for p in valid_partitions(n) {
            let f = family_system(&p).unwrap();
            let q = &f.witness_quadric;
            assert!(f.system.apolar().iter().all(|m| q.evaluate(m).is_zero()), "{p}");
            assert!(f.system.generators().iter().all(|m| !q.evaluate(m).is_zero()), "{p}");
        }
    }
}

/// `mu_i == mu_j == -2 mu_ij / 5` whenever both `x_i^2 x_j` and `x_j^2 x_i` are in P.
#[test]
fn unique_quadric_relations() {
    for n in 2..=5 {
        for p in valid_partitions(n) {
            let f = family_system(&p).unwrap();
            let MinimalityCertificate::Minimal { quadric } = is_minimal_togliatti(&f.system).unwrap() else {
                panic!("{p} is not minimal");
            };
            for i in 0..=n {
                for j in i + 1..=n {
                    let k = n + 1;
                    if f.system.is_apolar(&square_times(k, i, j)) && f.system.is_apolar(&square_times(k, j, i)) {
                        let (mi, mj, mij) = (quadric.coefficient(i, i), quadric.coefficient(j, j), quadric.coefficient(i, j));
                        assert_eq!(mi, mj);
                        assert_eq!(mi, -mij * BigRational::from_integer(2.into()) / BigRational::from_integer(5.into()));
                    }
                }
            }
        }
    }
}

#[test]
fn family_systems_are_minimal_smooth_togliatti() {
    for n in 2..=5 {
        for p in valid_partitions(n) {
            let f = family_system(&p).unwrap();
            assert!(fails_wlp_in_degree_dminus1(&f.system).unwrap().fails, "{p}");
            let basis = quadric_space(n, f.system.apolar());
            assert_eq!(basis.len(), 1, "{p}");
            assert!(basis[0].is_proportional_to(&f.witness_quadric), "{p}");
            assert!(is_minimal_togliatti(&f.system).unwrap().is_minimal(), "{p}");
            let cert = smoothness_check(f.system.apolar()).unwrap();
            assert!(cert.smooth, "{p}: {:?}", cert.failure);
        }
    }
}

#[test]
fn bound_and_equality_cases() {
    for n in 3..=8 {
        let counted: Vec<(PartitionSpec, usize)> =
            valid_partitions(n).into_iter().map(|p| (p.clone(), family_system(&p).unwrap().system.generators().len())).collect();
        let max = counted.iter().map(|c| c.1).max().unwrap();
        assert_eq!(max, binomial(n as u64 + 1, 3) as usize + n + 1);
        assert_eq!(max, mu_bound(n));
        let mut argmax: Vec<PartitionSpec> = counted.into_iter().filter(|c| c.1 == max).map(|c| c.0).collect();
        let mut expected = vec![spec(&[n - 1, 1, 1]), spec(&vec![1; n + 1])];
        if n == 3 {
            expected.push(spec(&[2, 2]));
        }
        argmax.sort();
        expected.sort();
        assert_eq!(argmax, expected, "n={n}");
        let mut eq = equality_partitions(n);
        eq.sort();
        assert_eq!(eq, expected);
    }
    assert!(bound_table(8).iter().all(|r| r.mu <= r.bound));
}
