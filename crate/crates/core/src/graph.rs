//! Loopless multigraphs, cut-vertex detection and explicit non-separable
//! realizations of admissible degree sequences.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{hakimi_violation, DegreeSequence};

/// Undirected multigraph on vertices `0..vertex_count`. Parallel edges are
/// allowed, loops are not. Each edge is stored as `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidArgument(
                "a graph needs at least one vertex".into(),
            ));
        }
        let mut out = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u}, {v}) leaves the vertex range 0..{vertex_count}"
                )));
            }
            out.push((u.min(v), u.max(v)));
        }
        Ok(Self {
            vertex_count,
            edges: out,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Edges in lexicographic order; the multiset is the graph's identity.
    pub fn sorted_edges(&self) -> Vec<(usize, usize)> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// `(neighbour, edge id)` lists.
    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        adj
    }

    pub fn component_count(&self) -> usize {
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertex_count];
        let mut count = 0;
        for s in 0..self.vertex_count {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &(w, _) in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// `{"vertices": n, "edges": [[u, v], ...]}` with 1-based, sorted edges.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Repr {
            vertices: usize,
            edges: Vec<[usize; 2]>,
        }
        let repr = Repr {
            vertices: self.vertex_count,
            edges: self
                .sorted_edges()
                .into_iter()
                .map(|(u, v)| [u + 1, v + 1])
                .collect(),
        };
        serde_json::to_string(&repr).expect("graph serialization is infallible")
    }

    /// Undirected DOT, one `--` line per edge instance, 1-based vertex names.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph {name} {{\n");
        for v in 1..=self.vertex_count {
            let _ = writeln!(s, "  {v};");
        }
        for (u, v) in self.sorted_edges() {
            let _ = writeln!(s, "  {} -- {};", u + 1, v + 1);
        }
        s.push_str("}\n");
        s
    }
}

/// Degrees of `g` in non-increasing order.
pub fn degree_sequence(g: &Multigraph) -> DegreeSequence {
    DegreeSequence::from_unsorted(g.degrees())
}

/// Vertices whose removal increases the number of components, in a graph
/// with at least two edges.
///
/// Iterative Tarjan lowlink. The edge used to enter a vertex is excluded by
/// edge id rather than by parent vertex, so a parallel edge back to the
/// parent counts as a back edge.
pub fn cut_vertices(g: &Multigraph) -> BTreeSet<usize> {
    let mut cut = BTreeSet::new();
    if g.edge_count() < 2 {
        return cut;
    }
    let adj = g.adjacency();
    let n = g.vertex_count();
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut time = 0;

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, entering edge, next adjacency slot)
        let mut stack: Vec<(usize, Option<usize>, usize)> = vec![(root, None, 0)];
        while let Some(frame) = stack.last_mut() {
            let (u, entering) = (frame.0, frame.1);
            if let Some(&(w, id)) = adj[u].get(frame.2) {
                frame.2 += 1;
                if Some(id) == entering {
                    continue;
                }
                if disc[w] == UNSEEN {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, Some(id), 0));
                } else {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if p != root && low[u] >= disc[p] {
                        cut.insert(p);
                    }
                }
            }
        }
        if root_children >= 2 {
            cut.insert(root);
        }
    }
    cut
}

/// Connected with no cut-vertex.
pub fn is_nonseparable(g: &Multigraph) -> bool {
    g.is_connected() && cut_vertices(g).is_empty()
}

/// A realization together with the outcome of re-checking it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationResult {
    pub graph: Multigraph,
    /// The graph was re-verified to be non-separable with the requested
    /// degree sequence.
    pub certified: bool,
}

/// Builds a non-separable multigraph with degree sequence `d`, vertex `i`
/// receiving degree `d[i]`.
///
/// For `(k, k)` the result is `k` parallel edges. Otherwise the vertices are
/// put on a cycle, which uses two units of every degree, and the residual
/// demands `d_i - 2` are matched greedily, always joining the two vertices
/// with the largest residual. Hakimi's inequality is exactly
/// `d_1 - 2 <= sum_{i>=2} (d_i - 2)`, and with an even total this keeps the
/// largest residual at most the sum of the others after every step, so no
/// loop is ever forced. Adding edges to a cycle cannot create a cut-vertex.
pub fn realize_nonseparable(d: &DegreeSequence) -> Result<RealizationResult> {
    if let Some(violation) = hakimi_violation(d) {
        return Err(Error::Inadmissible {
            sequence: d.to_string(),
            violation,
        });
    }
    let parts = d.parts();
    let r = parts.len();
    let mut edges = Vec::new();
    if r == 2 {
        edges.extend(std::iter::repeat_n((0, 1), parts[0] as usize));
    } else {
        edges.extend((0..r).map(|i| (i, (i + 1) % r)));
        // max-heap on residual, ties broken towards the lower vertex index
        let mut heap: BinaryHeap<(u32, Reverse<usize>)> = parts
            .iter()
            .enumerate()
            .filter(|&(_, &p)| p > 2)
            .map(|(i, &p)| (p - 2, Reverse(i)))
            .collect();
        while let Some((ra, Reverse(a))) = heap.pop() {
            let (rb, Reverse(b)) = heap.pop().ok_or_else(|| {
                Error::ArithmeticFault(format!("unmatched residual demand in {d}"))
            })?;
            edges.push((a, b));
            if ra > 1 {
                heap.push((ra - 1, Reverse(a)));
            }
            if rb > 1 {
                heap.push((rb - 1, Reverse(b)));
            }
        }
    }
    let graph = Multigraph::new(r, edges)?;
    let certified = is_nonseparable(&graph) && graph.degrees() == parts;
    Ok(RealizationResult { graph, certified })
}
