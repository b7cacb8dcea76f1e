use std::collections::{HashMap, HashSet};

use permutation_engine::DensePermutation;

use crate::{Graph, HatGraphError};

/// Largest element list accepted by [`coset_graph`].
pub const MAX_COSET_GROUP: usize = 100_000;

/// Builds the coset graph of an explicitly enumerated group.
///
/// Vertices are the right cosets `Kx` of `K = ⟨subgroup_gens⟩` in the group
/// given by `elements`; `Kx ~ Ky` exactly when `y·x⁻¹ ∈ KgK ∪ Kg⁻¹K` for the
/// connector `g`. That double-coset union is closed under inversion, so the
/// relation is symmetric and independent of coset representatives. Loops
/// (arising when the connector normalizes into `K`) are dropped, so the
/// result is a simple graph.
///
/// Cosets are numbered by discovery order: scanning `elements` in input
/// order, each element not yet assigned opens the next coset.
pub fn coset_graph(
    elements: &[DensePermutation],
    subgroup_gens: &[DensePermutation],
    connector: &DensePermutation,
) -> Result<Graph, HatGraphError> {
    if elements.is_empty() {
        return Err(HatGraphError::NotAGroup { detail: "empty element list".to_string() });
    }
    if elements.len() > MAX_COSET_GROUP {
        return Err(HatGraphError::CosetGroupTooLarge {
            order: elements.len(),
            max: MAX_COSET_GROUP,
        });
    }
    let degree = elements[0].degree();
    for p in elements.iter().chain(subgroup_gens).chain(std::iter::once(connector)) {
        if p.degree() != degree {
            return Err(HatGraphError::DegreeMismatch { expected: degree, got: p.degree() });
        }
    }

    let mut index_of: HashMap<&[u32], u32> = HashMap::with_capacity(elements.len());
    for (i, p) in elements.iter().enumerate() {
        if index_of.insert(p.images(), i as u32).is_some() {
            return Err(HatGraphError::NotAGroup {
                detail: format!("duplicate element at index {i}"),
            });
        }
    }
    if !index_of.contains_key(DensePermutation::identity(degree).images()) {
        return Err(HatGraphError::NotAGroup {
            detail: "the identity is missing from the element list".to_string(),
        });
    }
    if !index_of.contains_key(connector.images()) {
        return Err(HatGraphError::NotAGroup {
            detail: "the connector is not in the element list".to_string(),
        });
    }

    // Enumerate K = ⟨subgroup_gens⟩ by closure, demanding it stay inside the
    // supplied element list.
    let mut subgroup: Vec<DensePermutation> = vec![DensePermutation::identity(degree)];
    let mut in_subgroup: HashSet<Vec<u32>> = HashSet::new();
    in_subgroup.insert(subgroup[0].images().to_vec());
    let mut frontier = 0usize;
    while frontier < subgroup.len() {
        let current = subgroup[frontier].clone();
        frontier += 1;
        for g in subgroup_gens {
            let product = current.compose(g);
            if !index_of.contains_key(product.images()) {
                return Err(HatGraphError::NotASubgroup {
                    detail: format!(
                        "a product of subgroup generators falls outside the element list \
                         (closure size reached {})",
                        subgroup.len()
                    ),
                });
            }
            if in_subgroup.insert(product.images().to_vec()) {
                subgroup.push(product);
            }
        }
    }

    // Partition the element list into right cosets Kx, numbering cosets by
    // the position of their first-seen element.
    let mut coset_of: Vec<Option<u32>> = vec![None; elements.len()];
    let mut representatives: Vec<u32> = Vec::new();
    for (i, x) in elements.iter().enumerate() {
        if coset_of[i].is_some() {
            continue;
        }
        let coset_index = representatives.len() as u32;
        representatives.push(i as u32);
        for k in &subgroup {
            let member = k.compose(x);
            let Some(&j) = index_of.get(member.images()) else {
                return Err(HatGraphError::NotAGroup {
                    detail: format!(
                        "the element list is not closed under left multiplication by \
                         the subgroup (offending base element at index {i})"
                    ),
                });
            };
            match coset_of[j as usize] {
                None => coset_of[j as usize] = Some(coset_index),
                Some(existing) if existing == coset_index => {}
                Some(_) => {
                    return Err(HatGraphError::NotAGroup {
                        detail: format!("cosets overlap at element index {j}"),
                    });
                }
            }
        }
    }
    if elements.len() % subgroup.len() != 0 {
        return Err(HatGraphError::NotAGroup {
            detail: format!(
                "subgroup order {} does not divide the element count {}",
                subgroup.len(),
                elements.len()
            ),
        });
    }

    // Kx ~ K·(g^{±1}·k·x) for every k ∈ K: these are exactly the cosets
    // inside (KgK ∪ Kg⁻¹K)·x.
    let inverse_connector = connector.inverse();
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for (coset_index, &rep) in representatives.iter().enumerate() {
        let x = &elements[rep as usize];
        for w in [connector, &inverse_connector] {
            for k in &subgroup {
                let target = w.compose(&k.compose(x));
                let &j = index_of.get(target.images()).ok_or_else(|| {
                    HatGraphError::NotAGroup {
                        detail: "the element list is not closed under the connector"
                            .to_string(),
                    }
                })?;
                let neighbor =
                    coset_of[j as usize].expect("every element was assigned a coset");
                if neighbor != coset_index as u32 {
                    edges.push((coset_index as u32, neighbor));
                }
            }
        }
    }
    Graph::from_edges(representatives.len(), &edges)
}
