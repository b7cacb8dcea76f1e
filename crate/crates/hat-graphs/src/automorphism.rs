use permutation_engine::DensePermutation;

use crate::{Graph, HatGraphError};

/// Largest vertex count accepted by [`tiny_automorphism_group`]; the search
/// keeps vertex sets in single 64-bit masks.
pub const MAX_AUT_VERTICES: usize = 64;

/// Upper bound on how many automorphisms the search will enumerate before
/// giving up. Highly symmetric graphs (say, an empty graph on ten vertices)
/// exceed it quickly; the graphs this crate studies do not.
pub const AUTOMORPHISM_CAP: usize = 100_000;

struct SearchState<'a> {
    order: &'a [u32],
    adjacency: &'a [u64],
    degrees: &'a [usize],
    image: Vec<u32>,
    found: Vec<DensePermutation>,
}

/// Enumerates the full automorphism group of a graph on at most 64 vertices
/// by backtracking, pruning on degree and on exact consistency with the
/// already-placed neighborhood. Returns every automorphism (identity
/// included) sorted by image vector, so the result is both a generating set
/// and the complete element list.
pub fn tiny_automorphism_group(graph: &Graph) -> Result<Vec<DensePermutation>, HatGraphError> {
    let n = graph.vertex_count();
    if n > MAX_AUT_VERTICES {
        return Err(HatGraphError::AutVerticesTooMany { n, max: MAX_AUT_VERTICES });
    }
    if n == 0 {
        // There is no degree-0 permutation representation; the vertexless
        // graph gets an empty element list.
        return Ok(Vec::new());
    }

    let adjacency: Vec<u64> = (0..n as u32)
        .map(|v| graph.neighbors(v).iter().fold(0u64, |mask, &w| mask | (1 << w)))
        .collect();
    let degrees: Vec<usize> = (0..n as u32).map(|v| graph.degree_of(v)).collect();

    // Assignment order: repeatedly take the unplaced vertex with the most
    // already-placed neighbors (ties broken by degree, then by index), so
    // each new assignment is as constrained as possible.
    let mut order: Vec<u32> = Vec::with_capacity(n);
    let mut placed = 0u64;
    for _ in 0..n {
        let mut best: Option<(usize, usize, std::cmp::Reverse<u32>)> = None;
        let mut pick = 0u32;
        for v in 0..n as u32 {
            if placed & (1 << v) != 0 {
                continue;
            }
            let key = (
                (adjacency[v as usize] & placed).count_ones() as usize,
                degrees[v as usize],
                std::cmp::Reverse(v),
            );
            if best.map_or(true, |b| key > b) {
                best = Some(key);
                pick = v;
            }
        }
        order.push(pick);
        placed |= 1 << pick;
    }

    let mut state = SearchState {
        order: &order,
        adjacency: &adjacency,
        degrees: &degrees,
        image: vec![0u32; n],
        found: Vec::new(),
    };
    extend(&mut state, 0, 0)?;
    state.found.sort_by(|a, b| a.images().cmp(b.images()));
    Ok(state.found)
}

/// Tries every viable image for the vertex at position `depth` of the
/// assignment order; `used` is the bitmask of image vertices already taken.
fn extend(state: &mut SearchState, depth: usize, used: u64) -> Result<(), HatGraphError> {
    let n = state.order.len();
    if depth == n {
        let images = state.order.iter().zip(&state.image).fold(
            vec![0u32; n],
            |mut images, (&v, &w)| {
                images[v as usize] = w;
                images
            },
        );
        state.found.push(
            DensePermutation::from_images(images).expect("assignment is a bijection"),
        );
        if state.found.len() > AUTOMORPHISM_CAP {
            return Err(HatGraphError::AutomorphismCountExceeded { cap: AUTOMORPHISM_CAP });
        }
        return Ok(());
    }
    let v = state.order[depth] as usize;
    // Images of the already-placed neighbors of v; any image of v must be
    // adjacent to exactly these among the used vertices.
    let mut required = 0u64;
    for (&u, &w) in state.order[..depth].iter().zip(&state.image[..depth]) {
        if state.adjacency[v] & (1 << u) != 0 {
            required |= 1 << w;
        }
    }
    for w in 0..n as u32 {
        if used & (1 << w) != 0
            || state.degrees[w as usize] != state.degrees[v]
            || state.adjacency[w as usize] & used != required
        {
            continue;
        }
        state.image[depth] = w;
        extend(state, depth + 1, used | (1 << w))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use group_analysis::schreier_sims;

    #[test]
    fn five_cycle_has_the_dihedral_group_of_order_ten() {
        let auts = tiny_automorphism_group(&Graph::cycle(5)).unwrap();
        assert_eq!(auts.len(), 10);
        let bsgs = schreier_sims(&auts, 5).unwrap();
        assert_eq!(bsgs.order().to_string(), "10");
    }

    #[test]
    fn complete_graph_on_four_vertices_has_order_twenty_four() {
        let auts = tiny_automorphism_group(&Graph::complete(4)).unwrap();
        assert_eq!(auts.len(), 24);
        // Each automorphism is distinct.
        for pair in auts.windows(2) {
            assert!(pair[0].images() < pair[1].images());
        }
    }

    #[test]
    fn path_graph_has_only_the_end_swap() {
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let auts = tiny_automorphism_group(&path).unwrap();
        assert_eq!(auts.len(), 2);
        assert!(auts[0].is_identity());
        assert_eq!(auts[1].images(), &[3, 2, 1, 0]);
    }

    #[test]
    fn asymmetric_graph_is_rigid() {
        // A six-vertex path with one chord: the chord (1,3) breaks the path
        // reversal and the degree sequence pins everything else.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 3)])
            .unwrap();
        let auts = tiny_automorphism_group(&g).unwrap();
        assert_eq!(auts.len(), 1);
        assert!(auts[0].is_identity());
    }

    #[test]
    fn the_enumeration_cap_trips_on_wildly_symmetric_graphs() {
        // The empty graph on 9 vertices has 9! = 362880 automorphisms.
        let empty = Graph::from_edges(9, &[]).unwrap();
        assert_eq!(
            tiny_automorphism_group(&empty),
            Err(HatGraphError::AutomorphismCountExceeded { cap: AUTOMORPHISM_CAP })
        );
    }

    #[test]
    fn oversized_graphs_are_rejected() {
        let big = Graph::from_edges(65, &[]).unwrap();
        assert_eq!(
            tiny_automorphism_group(&big),
            Err(HatGraphError::AutVerticesTooMany { n: 65, max: MAX_AUT_VERTICES })
        );
    }
}
