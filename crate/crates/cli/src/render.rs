//! Plain-text forms of the reports.

use std::fmt::Write as _;

use togliatti::classify::{CheckReport, ClassRecord, ClassificationResult, TheoremReport};
use togliatti::family::BoundRow;
use togliatti::lefschetz::MinimalityCertificate;
use togliatti::polytope::SmoothnessFailure;

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn check(r: &CheckReport) -> String {
    let mut o = String::new();
    let sys = &r.system;
    let _ = writeln!(o, "system: n={} d={} |S|={} |P|={}", sys.n(), sys.degree(), sys.generators().len(), sys.apolar().len());
    let _ = writeln!(o, "artinian: {}", yes(r.artinian));
    let _ = writeln!(o, "cardinality: {} <= {}: {}", r.generator_count, r.cardinality_bound, yes(r.within_bound));
    if let Some(w) = &r.wlp {
        let _ = writeln!(
            o,
            "multiplication map: rank {} of {}x{}, kernel {}",
            w.rank,
            w.target_dim,
            w.source_dim,
            if w.fails { "nonzero" } else { "zero" }
        );
        if let Some(f) = &w.witness {
            let _ = writeln!(o, "  kernel witness: {f}");
        }
    }
    if let Some(b) = r.restricted_dependence {
        let _ = writeln!(o, "restricted dependence: {}", yes(b));
    }
    if let Some(q) = &r.quadric_space {
        let _ = writeln!(o, "quadrics through P: dim {}", q.dim);
        for f in &q.basis {
            let _ = writeln!(o, "  {f}");
        }
    }
    match (&r.laplace, &r.laplace_error) {
        (Some(l), _) => {
            let _ = writeln!(o, "laplace equations: {}", l.delta);
        }
        (None, Some(e)) => {
            let _ = writeln!(o, "laplace equations: not computed ({e})");
        }
        _ => {}
    }
    let _ = writeln!(o, "togliatti: {}", yes(r.togliatti));
    match &r.minimality {
        Some(MinimalityCertificate::Minimal { quadric }) => {
            let _ = writeln!(o, "minimal: yes (unique quadric {quadric})");
        }
        Some(MinimalityCertificate::NotMinimal { point, quadric, quadric_space_dim }) => {
            let _ = writeln!(o, "minimal: no ({quadric} vanishes at generator {point}; quadric space dim {quadric_space_dim})");
        }
        None => {}
    }
    if let Some(b) = r.minimal_by_subsets {
        let _ = writeln!(o, "minimal by subsets: {}", yes(b));
    }
    if let Some(s) = &r.smoothness {
        let _ = write!(o, "smooth: {} (dim {}, {} vertices, lattice index {})", yes(s.smooth), s.dim, s.vertices.len(), s.lattice_index);
        match &s.failure {
            Some(SmoothnessFailure::NotSimple { vertex, edge_count, dim }) => {
                let _ = write!(o, "; {vertex} has {edge_count} edges, expected {dim}");
            }
            Some(SmoothnessFailure::NotUnimodular { vertex, determinant }) => {
                let _ = write!(o, "; edge directions at {vertex} have determinant {determinant}");
            }
            Some(SmoothnessFailure::MissingEdgePoint { vertex, point }) => {
                let _ = write!(o, "; edge from {vertex} skips the lattice point {point}");
            }
            None => {}
        }
        o.push('\n');
    }
    if let Some(st) = &r.structural {
        let _ = writeln!(
            o,
            "G_P symmetric: {}; cubes in lattice of P: {}; P spans full lattice: {}",
            yes(st.symmetric),
            yes(st.contains_all_simplex_vertices),
            yes(st.spans_full_lattice)
        );
    }
    match (&r.partition, &r.partition_error) {
        (Some(p), _) => {
            let _ = writeln!(o, "partition: {p} (family system: {})", yes(r.family_match == Some(true)));
        }
        (None, Some(e)) => {
            let _ = writeln!(o, "partition: none ({e})");
        }
        _ => {}
    }
    let _ = writeln!(o, "consistency: {} checks passed", r.consistency.len());
    o
}

fn class_line(c: &ClassRecord) -> String {
    let gens: Vec<String> = c.system.generators().iter().map(|m| m.to_string()).collect();
    let part = c.partition.as_ref().map_or("none".to_string(), |p| p.to_string());
    format!("|S|={} partition {} family {}: {}", c.size, part, yes(c.family_match), gens.join(" "))
}

pub fn enumeration(r: &ClassificationResult, timings: bool) -> String {
    let mut o = String::new();
    let _ = writeln!(o, "n={} max |S|={} complete: {}", r.n, r.max_generators, yes(r.complete));
    let _ = writeln!(o, "{} classes", r.classes.len());
    for c in &r.classes {
        let _ = writeln!(o, "  {}", class_line(c));
    }
    let s = &r.stats;
    let _ = writeln!(
        o,
        "nodes {} (orbit-pruned {}), togliatti {}, minimal {}, smooth minimal {}, subtrees {}/{}",
        s.nodes_examined,
        s.pruned_orbit,
        s.togliatti_nodes,
        s.minimal_nodes,
        s.smooth_minimal_nodes,
        s.subtrees_completed,
        s.subtrees_total
    );
    if timings {
        let _ = writeln!(o, "wall time {:.3}s", s.wall_time.as_secs_f64());
    }
    o
}

pub fn bound(rows: &[BoundRow], checks: impl Iterator<Item = (usize, usize, usize, bool)>) -> String {
    let mut o = String::new();
    let _ = writeln!(o, "{:>3}  {:<16} {:>5} {:>5} {:>5}", "n", "partition", "mu", "beta", "bound");
    for r in rows {
        let mark = if r.attains_bound { " =" } else { "" };
        let _ = writeln!(o, "{:>3}  {:<16} {:>5} {:>5} {:>5}{mark}", r.partition.n(), r.partition.to_string(), r.mu, r.beta, r.bound);
    }
    for (n, max, bound, holds) in checks {
        let _ = writeln!(o, "n={n}: max mu {max}, bound {bound}: {}", if holds { "ok" } else { "VIOLATED" });
    }
    o
}

pub fn verify(r: &TheoremReport, timings: bool) -> String {
    let mut o = String::new();
    let _ = writeln!(o, "n={} status: {:?}", r.n, r.status);
    let _ = writeln!(o, "bound {}; {} classes found, {} family systems expected", r.bound, r.classes.len(), r.expected.len());
    for c in &r.classes {
        let _ = writeln!(o, "  {}", class_line(c));
    }
    for m in &r.missing {
        let _ = writeln!(o, "  missing: family system of {}", m.partition);
    }
    for u in &r.unexpected {
        let gens: Vec<String> = u.generators().iter().map(|m| m.to_string()).collect();
        let _ = writeln!(o, "  unexpected: {}", gens.join(" "));
    }
    for b in &r.bound_violations {
        let _ = writeln!(o, "  above bound: |S|={}", b.generators().len());
    }
    let show = |v: &[togliatti::PartitionSpec]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ");
    let _ = writeln!(o, "equality expected: {}", show(&r.equality_expected));
    let _ = writeln!(o, "equality found:    {}", show(&r.equality_found));
    for f in &r.structural_failures {
        let _ = writeln!(o, "  structural: {f}");
    }
    if timings {
        let _ = writeln!(o, "wall time {:.3}s", r.stats.wall_time.as_secs_f64());
    }
    o
}
