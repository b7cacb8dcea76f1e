use std::collections::VecDeque;

use group_analysis::{is_transitive, orbits, schreier_sims_with, BsgsOptions};
use permutation_engine::DensePermutation;

use crate::{Graph, HatGraphError};

/// Largest point-domain size for which orbital digraphs are materialized.
/// An orbital can hold up to `degree²` arcs, so this caps memory at roughly
/// `2^28` arc slots.
pub const MAX_ORBITAL_DEGREE: usize = 1 << 14;

/// The orbit of one ordered pair under a transitive permutation group,
/// stored as a sorted arc list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitalDigraph {
    degree: usize,
    arcs: Vec<(u32, u32)>,
}

impl OrbitalDigraph {
    /// Number of points the group acts on.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// All arcs, sorted lexicographically.
    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    /// True when `(u, v)` is an arc.
    pub fn contains_arc(&self, u: u32, v: u32) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    /// True when the arc set is closed under reversal.
    pub fn is_symmetric(&self) -> bool {
        self.arcs.iter().all(|&(u, v)| self.contains_arc(v, u))
    }

    /// The simple undirected graph obtained by forgetting arc directions.
    pub fn underlying_graph(&self) -> Graph {
        Graph::from_edges(self.degree, &self.arcs)
            .expect("orbital arcs are loop-free and in range by construction")
    }
}

fn check_degrees(
    generators: &[DensePermutation],
    degree: usize,
) -> Result<(), HatGraphError> {
    for g in generators {
        if g.degree() != degree {
            return Err(HatGraphError::DegreeMismatch {
                expected: degree,
                got: g.degree(),
            });
        }
    }
    Ok(())
}

/// Builds the orbital digraph of a transitive group: the orbit of the seed
/// arc `(seed.0, seed.1)` under the diagonal action `(a, b) ↦ (a^g, b^g)`.
pub fn orbital_digraph(
    generators: &[DensePermutation],
    degree: usize,
    seed: (u32, u32),
) -> Result<OrbitalDigraph, HatGraphError> {
    if degree > MAX_ORBITAL_DEGREE {
        return Err(HatGraphError::OrbitalDegreeTooLarge {
            degree,
            max: MAX_ORBITAL_DEGREE,
        });
    }
    check_degrees(generators, degree)?;
    let (a, b) = seed;
    if a == b {
        return Err(HatGraphError::SeedLoop { v: a });
    }
    if a as usize >= degree || b as usize >= degree {
        return Err(HatGraphError::EdgeOutOfRange { u: a, v: b, n: degree });
    }
    if !is_transitive(generators, degree) {
        return Err(HatGraphError::Intransitive { degree });
    }

    let index = |u: u32, v: u32| u as usize * degree + v as usize;
    let mut seen = vec![false; degree * degree];
    let mut arcs = Vec::new();
    let mut queue = VecDeque::new();
    seen[index(a, b)] = true;
    queue.push_back((a, b));
    while let Some((u, v)) = queue.pop_front() {
        arcs.push((u, v));
        for g in generators {
            let (iu, iv) = (g.image(u), g.image(v));
            if !seen[index(iu, iv)] {
                seen[index(iu, iv)] = true;
                queue.push_back((iu, iv));
            }
        }
    }
    arcs.sort_unstable();
    Ok(OrbitalDigraph { degree, arcs })
}

/// True when the orbital containing the seed arc also contains its reversal,
/// i.e. the orbital is self-paired.
pub fn is_self_paired(
    generators: &[DensePermutation],
    degree: usize,
    seed: (u32, u32),
) -> Result<bool, HatGraphError> {
    let orbital = orbital_digraph(generators, degree, seed)?;
    Ok(orbital.contains_arc(seed.1, seed.0))
}

/// Orbits of the stabilizer of `base` on the full domain, each sorted, listed
/// in order of their smallest element. The first suborbit is always `[base]`
/// (and is exactly that when the stabilizer fixes only `base` among small
/// points); suborbit lengths sum to the degree.
pub fn suborbits(
    generators: &[DensePermutation],
    degree: usize,
    base: u32,
) -> Result<Vec<Vec<u32>>, HatGraphError> {
    if base as usize >= degree {
        return Err(HatGraphError::EdgeOutOfRange { u: base, v: base, n: degree });
    }
    check_degrees(generators, degree)?;
    if !is_transitive(generators, degree) {
        return Err(HatGraphError::Intransitive { degree });
    }
    let bsgs = schreier_sims_with(
        generators,
        degree,
        &BsgsOptions {
            first_base: Some(base),
            ..BsgsOptions::default()
        },
    )?;
    let stabilizer = bsgs.point_stabilizer(base)?;
    if stabilizer.is_empty() {
        // Trivial stabilizer: every point is its own suborbit.
        return Ok((0..degree as u32).map(|p| vec![p]).collect());
    }
    let mut classes = orbits(&stabilizer, degree);
    for class in &mut classes {
        class.sort_unstable();
    }
    classes.sort_by_key(|class| class[0]);
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use permutation_engine::DensePermutation;

    /// Generators of the dihedral group of order 2n acting on the n-cycle.
    fn dihedral(n: usize) -> Vec<DensePermutation> {
        let rotation =
            DensePermutation::from_fn(n, |p| ((p as usize + 1) % n) as u32).unwrap();
        let reflection =
            DensePermutation::from_fn(n, |p| ((n - p as usize) % n) as u32).unwrap();
        vec![rotation, reflection]
    }

    /// A 3-cycle on {0,1,2} extended by fixed points — intransitive on 5.
    fn intransitive_on_five() -> Vec<DensePermutation> {
        vec![DensePermutation::from_images(vec![1, 2, 0, 3, 4]).unwrap()]
    }

    #[test]
    fn dihedral_orbital_of_an_adjacent_pair_is_the_cycle() {
        let gens = dihedral(7);
        let orbital = orbital_digraph(&gens, 7, (0, 1)).unwrap();
        // The reflection maps (0,1) to (0,6), so the orbital is self-paired
        // and the underlying graph is the 7-cycle itself.
        assert_eq!(orbital.arcs().len(), 14);
        assert!(orbital.is_symmetric());
        assert!(is_self_paired(&gens, 7, (0, 1)).unwrap());
        assert_eq!(orbital.underlying_graph(), Graph::cycle(7));
    }

    #[test]
    fn rotation_only_orbital_is_directed_and_not_self_paired() {
        let n = 7;
        let rotation =
            DensePermutation::from_fn(n, |p| ((p as usize + 1) % n) as u32).unwrap();
        let gens = vec![rotation];
        let orbital = orbital_digraph(&gens, n, (0, 1)).unwrap();
        assert_eq!(orbital.arcs().len(), 7);
        assert!(!orbital.is_symmetric());
        assert!(!is_self_paired(&gens, n, (0, 1)).unwrap());
        // Forgetting directions still yields the cycle.
        assert_eq!(orbital.underlying_graph(), Graph::cycle(7));
    }

    #[test]
    fn suborbits_of_the_dihedral_group_pair_up_antipodal_points() {
        // Stabilizer of 0 in the dihedral group on 7 points is the
        // reflection, whose orbits are {0} and the pairs {i, 7−i}.
        let classes = suborbits(&dihedral(7), 7, 0).unwrap();
        assert_eq!(
            classes,
            vec![vec![0], vec![1, 6], vec![2, 5], vec![3, 4]]
        );
        let total: usize = classes.iter().map(Vec::len).sum();
        assert_eq!(total, 7);
    }

    #[test]
    fn suborbits_with_trivial_stabilizer_are_singletons() {
        let n = 6;
        let rotation =
            DensePermutation::from_fn(n, |p| ((p as usize + 1) % n) as u32).unwrap();
        let classes = suborbits(&[rotation], n, 0).unwrap();
        assert_eq!(classes.len(), 6);
        assert!(classes.iter().all(|class| class.len() == 1));
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        let gens = dihedral(5);
        assert_eq!(
            orbital_digraph(&gens, 5, (2, 2)),
            Err(HatGraphError::SeedLoop { v: 2 })
        );
        assert_eq!(
            orbital_digraph(&gens, 5, (0, 9)),
            Err(HatGraphError::EdgeOutOfRange { u: 0, v: 9, n: 5 })
        );
        assert_eq!(
            orbital_digraph(&intransitive_on_five(), 5, (0, 1)),
            Err(HatGraphError::Intransitive { degree: 5 })
        );
        assert!(matches!(
            orbital_digraph(&dihedral(3), 5, (0, 1)),
            Err(HatGraphError::DegreeMismatch { .. })
        ));
    }
}
