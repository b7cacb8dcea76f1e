use crate::HatGraphError;

/// A finite simple undirected graph on vertices `0..n`, stored as sorted
/// adjacency lists. Loops and parallel edges are rejected at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adjacency: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a graph from an edge list. Edges may repeat and may be given in
    /// either orientation; duplicates collapse. Loops and out-of-range
    /// endpoints are errors.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Graph, HatGraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(HatGraphError::EdgeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(HatGraphError::LoopEdge { v });
            }
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { n, adjacency })
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adjacency[v as usize]
    }

    /// Degree of `v`.
    pub fn degree_of(&self, v: u32) -> usize {
        self.adjacency[v as usize].len()
    }

    /// True when `{u, v}` is an edge.
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        (u as usize) < self.n && self.adjacency[u as usize].binary_search(&v).is_ok()
    }

    /// All edges in canonical order: `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n as u32 {
            for &v in &self.adjacency[u as usize] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// True when every vertex has the same degree.
    pub fn is_regular(&self) -> bool {
        match self.adjacency.first() {
            None => true,
            Some(first) => {
                let d = first.len();
                self.adjacency.iter().all(|list| list.len() == d)
            }
        }
    }

    /// True when the graph has one connected component (vacuously for n ≤ 1).
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut reached = 1usize;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.n
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in (u + 1)..n as u32 {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("complete graph edges are always valid")
    }

    /// The cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<(u32, u32)> = (0..n as u32)
            .map(|u| (u, ((u as usize + 1) % n) as u32))
            .collect();
        Graph::from_edges(n, &edges).expect("cycle edges are always valid")
    }
}
