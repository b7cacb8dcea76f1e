use crate::Graph;

/// The 27-vertex, 4-valent half-arc-transitive graph.
///
/// Vertices are pairs `(x, y) ∈ Z₉ × Z₃`, numbered `3x + y`; each `(x, y)` is
/// joined to `(4x + 1, y − 1)` and `(4x − 1, y − 1)` with arithmetic mod 9
/// and mod 3. The two forward neighbors differ in the first coordinate and
/// the two backward neighbors sit at `y + 1 ≠ y − 1 (mod 3)`, so the graph
/// is simple and 4-regular. Its automorphism group (order 54) is vertex- and
/// edge-transitive but not arc-transitive — the smallest 4-valent graph with
/// that combination, which the integration suite certifies computationally.
pub fn holt_graph() -> Graph {
    let mut edges = Vec::with_capacity(54);
    for x in 0..9u32 {
        for y in 0..3u32 {
            for forward in [(4 * x + 1) % 9, (4 * x + 8) % 9] {
                edges.push((3 * x + y, 3 * forward + (y + 2) % 3));
            }
        }
    }
    Graph::from_edges(27, &edges).expect("the modular adjacency rule stays in range")
}
