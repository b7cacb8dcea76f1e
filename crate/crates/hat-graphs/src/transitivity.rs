use std::collections::HashMap;
use std::hash::Hash;

use permutation_engine::DensePermutation;

use crate::{Graph, HatGraphError};

/// Orbit counts of a group acting on a graph's vertices, unordered edges,
/// and arcs (ordered adjacent pairs), with the derived transitivity flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitivityReport {
    pub vertex_orbits: usize,
    pub edge_orbits: usize,
    pub arc_orbits: usize,
    pub vertex_transitive: bool,
    pub edge_transitive: bool,
    pub arc_transitive: bool,
}

/// Outcome of the half-arc-transitivity test: vertex- and edge-transitive
/// but not arc-transitive, judged with respect to the supplied group.
///
/// The verdict is only as strong as the group passed in: certifying a graph
/// as genuinely half-arc-transitive requires its full automorphism group
/// (see [`crate::tiny_automorphism_group`] for small graphs).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HatVerdict {
    Hat(TransitivityReport),
    NotHat { report: TransitivityReport, reason: String },
}

impl HatVerdict {
    pub fn is_hat(&self) -> bool {
        matches!(self, HatVerdict::Hat(_))
    }

    pub fn report(&self) -> &TransitivityReport {
        match self {
            HatVerdict::Hat(report) => report,
            HatVerdict::NotHat { report, .. } => report,
        }
    }
}

/// Counts orbits of the generated group on `items`, where `advance` gives the
/// image of an item under one generator.
fn orbit_count<T, F>(items: &[T], generators: &[DensePermutation], advance: F) -> usize
where
    T: Eq + Hash + Copy,
    F: Fn(T, &DensePermutation) -> T,
{
    let index: HashMap<T, usize> =
        items.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let mut seen = vec![false; items.len()];
    let mut orbits = 0usize;
    for start in 0..items.len() {
        if seen[start] {
            continue;
        }
        orbits += 1;
        seen[start] = true;
        let mut stack = vec![items[start]];
        while let Some(t) = stack.pop() {
            for g in generators {
                let image = advance(t, g);
                let &i = index
                    .get(&image)
                    .expect("automorphisms permute the item set");
                if !seen[i] {
                    seen[i] = true;
                    stack.push(image);
                }
            }
        }
    }
    orbits
}

fn validate_automorphisms(
    generators: &[DensePermutation],
    graph: &Graph,
) -> Result<(), HatGraphError> {
    let n = graph.vertex_count();
    for (index, g) in generators.iter().enumerate() {
        if g.degree() != n {
            return Err(HatGraphError::DegreeMismatch { expected: n, got: g.degree() });
        }
        for (u, v) in graph.edges() {
            if !graph.has_edge(g.image(u), g.image(v)) {
                return Err(HatGraphError::NotAnAutomorphism { index });
            }
        }
    }
    Ok(())
}

/// Computes orbit counts of `⟨generators⟩` on the graph's vertices, edges,
/// and arcs. Every generator must be an automorphism of the graph.
pub fn transitivity_report(
    generators: &[DensePermutation],
    graph: &Graph,
) -> Result<TransitivityReport, HatGraphError> {
    validate_automorphisms(generators, graph)?;
    let vertices: Vec<u32> = (0..graph.vertex_count() as u32).collect();
    let vertex_orbits = orbit_count(&vertices, generators, |v, g| g.image(v));

    let edges = graph.edges();
    let edge_orbits = orbit_count(&edges, generators, |(u, v), g| {
        let (a, b) = (g.image(u), g.image(v));
        if a < b {
            (a, b)
        } else {
            (b, a)
        }
    });

    let mut arcs: Vec<(u32, u32)> = Vec::with_capacity(2 * edges.len());
    for &(u, v) in &edges {
        arcs.push((u, v));
        arcs.push((v, u));
    }
    let arc_orbits = orbit_count(&arcs, generators, |(u, v), g| (g.image(u), g.image(v)));

    Ok(TransitivityReport {
        vertex_orbits,
        edge_orbits,
        arc_orbits,
        vertex_transitive: vertex_orbits <= 1,
        edge_transitive: edge_orbits <= 1,
        arc_transitive: arc_orbits <= 1,
    })
}

/// Decides whether the group acts half-arc-transitively on the graph:
/// transitively on vertices and on edges but not on arcs.
pub fn hat_verdict(
    generators: &[DensePermutation],
    graph: &Graph,
) -> Result<HatVerdict, HatGraphError> {
    let report = transitivity_report(generators, graph)?;
    if graph.edge_count() == 0 {
        return Ok(HatVerdict::NotHat {
            report,
            reason: "the graph has no edges".to_string(),
        });
    }
    let reason = if !report.vertex_transitive {
        format!("the group has {} vertex orbits", report.vertex_orbits)
    } else if !report.edge_transitive {
        format!("the group has {} edge orbits", report.edge_orbits)
    } else if report.arc_transitive {
        "the group is arc-transitive".to_string()
    } else {
        return Ok(HatVerdict::Hat(report));
    };
    Ok(HatVerdict::NotHat { report, reason })
}
