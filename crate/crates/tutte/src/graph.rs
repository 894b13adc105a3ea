//! Labeled multigraphs with loops and parallel edges.
//!
//! Vertices are `0..vertex_count`. Edges are an ordered list of unordered
//! endpoint pairs; the position of an edge in that list is its id, so ids
//! are `0..edge_count` and are reassigned (order preserved) by `delete_edge`
//! and `contract_edge`, which return new graphs. A loop is an edge whose
//! endpoints coincide and it contributes 2 to the degree of its vertex.
//! Isolated vertices are legal and count toward the number of components.

use crate::{Error, Result};

/// Edge subset as a bitmask: bit `e` set means edge id `e` is in the subset.
/// Subset operations therefore require at most 64 edges, which is far beyond
/// anything the exponential routines that consume subsets can enumerate.
pub type EdgeSubset = u64;

/// How an edge sits in its graph: a loop (endpoints equal), a bridge
/// (deleting it increases the component count), or ordinary (neither).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Loop,
    Bridge,
    Ordinary,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

/// Union-find over a fixed vertex range, with path halving.
#[derive(Debug, Clone)]
pub(crate) struct Dsu {
    parent: Vec<u32>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n as u32).collect(),
        }
    }

    pub(crate) fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i as u32;
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let gp = self.parent[self.parent[x] as usize];
            self.parent[x] = gp;
            x = gp as usize;
        }
        x
    }

    /// Returns true when the two elements were in different classes.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb) as u32;
        true
    }

    pub(crate) fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }
}

impl MultiGraph {
    /// An edgeless graph on `vertex_count` vertices.
    pub fn new(vertex_count: usize) -> Self {
        MultiGraph {
            vertex_count,
            edges: Vec::new(),
        }
    }

    /// Build from an explicit edge list; edge ids follow list order.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = MultiGraph::new(vertex_count);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Append an edge, returning its id.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize> {
        if u >= self.vertex_count {
            return Err(Error::UnknownVertex(u));
        }
        if v >= self.vertex_count {
            return Err(Error::UnknownVertex(v));
        }
        self.edges.push((u, v));
        Ok(self.edges.len() - 1)
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

    pub fn endpoints(&self, e: usize) -> Result<(usize, usize)> {
        self.edges.get(e).copied().ok_or(Error::UnknownEdge(e))
    }

    /// Degree of `v`; each loop at `v` contributes 2.
    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.vertex_count, "vertex {v} out of range");
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    pub fn is_loop(&self, e: usize) -> Result<bool> {
        let (u, v) = self.endpoints(e)?;
        Ok(u == v)
    }

    /// Number of loops attached to `v`.
    pub fn loops_at(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == b && a == v).count()
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == b).count()
    }

    /// Number of edges joining `u` and `v` (loop multiplicity when `u == v`).
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
            .count()
    }

    /// The subset containing every edge.
    pub fn full_subset(&self) -> EdgeSubset {
        if self.edges.len() >= 64 {
            assert!(self.edges.len() == 64, "edge subsets need at most 64 edges");
            !0
        } else {
            (1u64 << self.edges.len()) - 1
        }
    }

    /// Number of connected components of the spanning subgraph `(V, sub)`.
    /// Isolated vertices count.
    pub fn components_of(&self, sub: EdgeSubset) -> usize {
        let mut dsu = Dsu::new(self.vertex_count);
        let mut components = self.vertex_count;
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if e < 64 && sub & (1 << e) != 0 && dsu.union(u, v) {
                components -= 1;
            }
        }
        components
    }

    pub fn components(&self) -> usize {
        self.components_of(self.full_subset())
    }

    pub fn is_connected(&self) -> bool {
        self.components() <= 1
    }

    /// Rank of an edge subset: `vertex_count - components_of(sub)`.
    pub fn rank_of(&self, sub: EdgeSubset) -> usize {
        self.vertex_count - self.components_of(sub)
    }

    pub fn rank(&self) -> usize {
        self.rank_of(self.full_subset())
    }

    /// Nullity of an edge subset: `|sub| - rank_of(sub)`.
    pub fn nullity_of(&self, sub: EdgeSubset) -> usize {
        let m = self.edges.len().min(64);
        (sub & mask_low(m)).count_ones() as usize - self.rank_of(sub)
    }

    pub fn nullity(&self) -> usize {
        self.edges.len() - self.rank()
    }

    pub fn classify_edge(&self, e: usize) -> Result<EdgeKind> {
        let (u, v) = self.endpoints(e)?;
        if u == v {
            return Ok(EdgeKind::Loop);
        }
        // Bridge test: is there a u-v path avoiding e?
        let mut dsu = Dsu::new(self.vertex_count);
        for (f, &(a, b)) in self.edges.iter().enumerate() {
            if f != e {
                dsu.union(a, b);
            }
        }
        if dsu.same(u, v) {
            Ok(EdgeKind::Ordinary)
        } else {
            Ok(EdgeKind::Bridge)
        }
    }

    /// The graph with edge `e` removed. Edge ids above `e` shift down by one;
    /// vertices are untouched (deleting the last edge at a vertex leaves it
    /// isolated).
    pub fn delete_edge(&self, e: usize) -> Result<MultiGraph> {
        self.endpoints(e)?;
        let mut edges = self.edges.clone();
        edges.remove(e);
        Ok(MultiGraph {
            vertex_count: self.vertex_count,
            edges,
        })
    }

    /// The graph with edge `e` contracted. The endpoints merge into the
    /// smaller of the two indices, vertices above the larger index shift down
    /// by one, and other edges between the same endpoints become loops.
    /// Contracting a loop is deletion.
    pub fn contract_edge(&self, e: usize) -> Result<MultiGraph> {
        let (u, v) = self.endpoints(e)?;
        if u == v {
            return self.delete_edge(e);
        }
        let keep = u.min(v);
        let gone = u.max(v);
        let relabel = |w: usize| {
            if w == gone {
                keep
            } else if w > gone {
                w - 1
            } else {
                w
            }
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(f, _)| f != e)
            .map(|(_, &(a, b))| (relabel(a), relabel(b)))
            .collect();
        Ok(MultiGraph {
            vertex_count: self.vertex_count - 1,
            edges,
        })
    }

    /// Both graphs side by side; the right graph's vertices and edge ids are
    /// shifted past the left graph's.
    pub fn disjoint_union(&self, other: &MultiGraph) -> MultiGraph {
        let shift = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + shift, b + shift)));
        MultiGraph {
            vertex_count: self.vertex_count + other.vertex_count,
            edges,
        }
    }

    /// Disjoint union with `other`, then vertex `v` of `other` is identified
    /// with vertex `u` of `self`. The remaining vertices of `other` keep
    /// their relative order after `self`'s vertices.
    pub fn one_point_join(&self, u: usize, other: &MultiGraph, v: usize) -> Result<MultiGraph> {
        if u >= self.vertex_count {
            return Err(Error::UnknownVertex(u));
        }
        if v >= other.vertex_count {
            return Err(Error::UnknownVertex(v));
        }
        let shift = self.vertex_count;
        let relabel = |w: usize| {
            if w == v {
                u
            } else if w > v {
                shift + w - 1
            } else {
                shift + w
            }
        };
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (relabel(a), relabel(b))));
        Ok(MultiGraph {
            vertex_count: self.vertex_count + other.vertex_count - 1,
            edges,
        })
    }

    /// Subgraph induced by the marked vertices, relabeled in increasing
    /// order. Edges survive exactly when both endpoints are kept.
    pub fn induced_subgraph(&self, keep: &[bool]) -> MultiGraph {
        assert_eq!(keep.len(), self.vertex_count, "mark one flag per vertex");
        let mut relabel = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        for (v, &k) in keep.iter().enumerate() {
            if k {
                relabel[v] = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| keep[a] && keep[b])
            .map(|&(a, b)| (relabel[a], relabel[b]))
            .collect();
        MultiGraph {
            vertex_count: next,
            edges,
        }
    }

    /// The same graph with isolated vertices dropped (remaining vertices keep
    /// their relative order). The Tutte polynomial does not see isolated
    /// vertices, so the engine normalizes with this before keying its cache.
    pub fn without_isolated_vertices(&self) -> MultiGraph {
        let mut keep = vec![false; self.vertex_count];
        for &(u, v) in &self.edges {
            keep[u] = true;
            keep[v] = true;
        }
        self.induced_subgraph(&keep)
    }

    /// Biconnected components, each as a vertex-relabeled subgraph (vertices
    /// sorted ascending, edges in original id order). Every edge lands in
    /// exactly one block: loops become single-loop blocks, bridges
    /// single-edge blocks. Isolated vertices belong to no block.
    pub fn blocks(&self) -> Vec<MultiGraph> {
        let n = self.vertex_count;
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, e));
            if u != v {
                adj[v].push((u, e));
            }
        }

        struct Walk<'a> {
            adj: &'a [Vec<(usize, usize)>],
            disc: Vec<usize>,
            low: Vec<usize>,
            timer: usize,
            edge_seen: Vec<bool>,
            stack: Vec<usize>,
            blocks: Vec<Vec<usize>>,
        }

        fn dfs(w: &mut Walk, u: usize) {
            w.timer += 1;
            w.disc[u] = w.timer;
            w.low[u] = w.timer;
            for i in 0..w.adj[u].len() {
                let (v, e) = w.adj[u][i];
                if w.edge_seen[e] {
                    continue;
                }
                w.edge_seen[e] = true;
                if v == u {
                    w.blocks.push(vec![e]);
                    continue;
                }
                w.stack.push(e);
                if w.disc[v] == 0 {
                    dfs(w, v);
                    w.low[u] = w.low[u].min(w.low[v]);
                    if w.low[v] >= w.disc[u] {
                        let mut blk = Vec::new();
                        loop {
                            let x = w.stack.pop().expect("edge stack holds the block");
                            blk.push(x);
                            if x == e {
                                break;
                            }
                        }
                        w.blocks.push(blk);
                    }
                } else {
                    w.low[u] = w.low[u].min(w.disc[v]);
                }
            }
        }

        let mut w = Walk {
            adj: &adj,
            disc: vec![0; n],
            low: vec![0; n],
            timer: 0,
            edge_seen: vec![false; self.edges.len()],
            stack: Vec::new(),
            blocks: Vec::new(),
        };
        for r in 0..n {
            if w.disc[r] == 0 {
                dfs(&mut w, r);
            }
        }

        w.blocks
            .into_iter()
            .map(|mut ids| {
                ids.sort_unstable();
                let mut verts: Vec<usize> = ids
                    .iter()
                    .flat_map(|&e| {
                        let (a, b) = self.edges[e];
                        [a, b]
                    })
                    .collect();
                verts.sort_unstable();
                verts.dedup();
                let relabel =
                    |w: usize| verts.binary_search(&w).expect("endpoint is in the block");
                let edges = ids
                    .iter()
                    .map(|&e| {
                        let (a, b) = self.edges[e];
                        (relabel(a), relabel(b))
                    })
                    .collect();
                MultiGraph {
                    vertex_count: verts.len(),
                    edges,
                }
            })
            .collect()
    }

    /// Exact isomorphism test by backtracking over degree-compatible vertex
    /// maps. Exponential in the worst case; meant for the small graphs the
    /// test suites compare (about ten vertices or fewer).
    pub fn is_isomorphic(&self, other: &MultiGraph) -> bool {
        if self.vertex_count != other.vertex_count || self.edges.len() != other.edges.len() {
            return false;
        }
        let n = self.vertex_count;
        let sig = |g: &MultiGraph, v: usize| (g.degree(v), g.loops_at(v));
        let self_sigs: Vec<_> = (0..n).map(|v| sig(self, v)).collect();
        let other_sigs: Vec<_> = (0..n).map(|v| sig(other, v)).collect();
        {
            let mut a = self_sigs.clone();
            let mut b = other_sigs.clone();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return false;
            }
        }
        // Map high-degree vertices first; they are the most constrained.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_unstable_by_key(|&v| std::cmp::Reverse(self_sigs[v]));

        fn extend(
            this: &MultiGraph,
            other: &MultiGraph,
            order: &[usize],
            self_sigs: &[(usize, usize)],
            other_sigs: &[(usize, usize)],
            map: &mut Vec<Option<usize>>,
            used: &mut Vec<bool>,
            k: usize,
        ) -> bool {
            if k == order.len() {
                return true;
            }
            let u = order[k];
            for w in 0..other.vertex_count() {
                if used[w] || self_sigs[u] != other_sigs[w] {
                    continue;
                }
                let consistent = order[..k].iter().all(|&x| {
                    let y = map[x].expect("earlier vertices are mapped");
                    this.multiplicity(u, x) == other.multiplicity(w, y)
                });
                if !consistent {
                    continue;
                }
                map[u] = Some(w);
                used[w] = true;
                if extend(this, other, order, self_sigs, other_sigs, map, used, k + 1) {
                    return true;
                }
                map[u] = None;
                used[w] = false;
            }
            false
        }

        let mut map = vec![None; n];
        let mut used = vec![false; n];
        extend(
            self,
            other,
            &order,
            &self_sigs,
            &other_sigs,
            &mut map,
            &mut used,
            0,
        )
    }

    /// Parse the edge-list text format:
    ///
    /// ```text
    /// # comment
    /// n 4
    /// 0 1
    /// 1 1
    /// 0 1
    /// ```
    ///
    /// The header `n <vertex count>` must precede the edge lines. Each edge
    /// line is two vertex indices; `u u` is a loop and repeated lines are
    /// parallel edges. File order defines edge ids. Blank lines and lines
    /// starting with `#` are skipped.
    pub fn from_text(input: &str) -> Result<MultiGraph> {
        let mut graph: Option<MultiGraph> = None;
        for (idx, raw) in input.lines().enumerate() {
            let line = idx + 1;
            let text = raw.trim();
            if text.is_empty() || text.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = text.split_whitespace().collect();
            match graph {
                None => {
                    if fields.len() != 2 || fields[0] != "n" {
                        return Err(Error::Parse {
                            line,
                            msg: format!("expected header \"n <vertex count>\", found {text:?}"),
                        });
                    }
                    let count: usize = fields[1].parse().map_err(|_| Error::Parse {
                        line,
                        msg: format!("invalid vertex count {:?}", fields[1]),
                    })?;
                    graph = Some(MultiGraph::new(count));
                }
                Some(ref mut g) => {
                    if fields.len() != 2 {
                        return Err(Error::Parse {
                            line,
                            msg: format!("expected \"u v\", found {text:?}"),
                        });
                    }
                    let parse = |s: &str| -> Result<usize> {
                        s.parse().map_err(|_| Error::Parse {
                            line,
                            msg: format!("invalid vertex index {s:?}"),
                        })
                    };
                    let u = parse(fields[0])?;
                    let v = parse(fields[1])?;
                    g.add_edge(u, v).map_err(|_| Error::Parse {
                        line,
                        msg: format!(
                            "vertex index out of range on \"{text}\" (vertex count {})",
                            g.vertex_count
                        ),
                    })?;
                }
            }
        }
        graph.ok_or_else(|| Error::Parse {
            line: 1,
            msg: "missing \"n <vertex count>\" header".to_string(),
        })
    }

    /// Inverse of [`MultiGraph::from_text`].
    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.vertex_count);
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn mask_low(bits: usize) -> u64 {
    if bits >= 64 {
        !0
    } else {
        (1u64 << bits) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> MultiGraph {
        MultiGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn rank_and_components() {
        let g = triangle();
        assert_eq!(g.rank(), 2);
        assert_eq!(g.nullity(), 1);
        assert_eq!(g.components(), 1);

        // Isolated vertex counts as a component and caps the rank.
        let h = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(h.components(), 2);
        assert_eq!(h.rank(), 2);

        // Subset ranks: a single edge has rank 1, the empty set rank 0.
        assert_eq!(g.rank_of(0b001), 1);
        assert_eq!(g.rank_of(0), 0);
        assert_eq!(g.nullity_of(0b111), 1);
    }

    #[test]
    fn rank_is_monotone_and_unit_increasing() {
        let g = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (1, 1)]).unwrap();
        let full = g.full_subset();
        for sub in 0..=full {
            let r = g.rank_of(sub);
            for e in 0..g.edge_count() {
                if sub & (1 << e) == 0 {
                    let r2 = g.rank_of(sub | (1 << e));
                    assert!(r2 == r || r2 == r + 1, "rank must grow by 0 or 1");
                }
            }
        }
    }

    #[test]
    fn classify_edges() {
        // Triangle with a pendant edge and a loop.
        let g =
            MultiGraph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3), (1, 1)]).unwrap();
        assert_eq!(g.classify_edge(0).unwrap(), EdgeKind::Ordinary);
        assert_eq!(g.classify_edge(3).unwrap(), EdgeKind::Bridge);
        assert_eq!(g.classify_edge(4).unwrap(), EdgeKind::Loop);
        assert!(g.classify_edge(9).is_err());
        // A parallel pair is ordinary even though a single copy would be a bridge.
        let d = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(d.classify_edge(0).unwrap(), EdgeKind::Ordinary);
    }

    #[test]
    fn contract_triangle_edge_gives_parallel_pair() {
        let g = triangle();
        let c = g.contract_edge(0).unwrap();
        assert_eq!(c.vertex_count(), 2);
        assert_eq!(c.edges(), &[(0, 1), (0, 1)]);
        assert_eq!(c.multiplicity(0, 1), 2);
    }

    #[test]
    fn contract_loop_equals_delete() {
        let g = MultiGraph::from_edges(2, &[(0, 1), (1, 1)]).unwrap();
        assert_eq!(g.contract_edge(1).unwrap(), g.delete_edge(1).unwrap());
    }

    #[test]
    fn contraction_merges_into_smaller_index() {
        // Contract (1,3): vertex 3 folds into 1, vertex 4 shifts to 3.
        let g = MultiGraph::from_edges(5, &[(1, 3), (3, 4), (0, 1)]).unwrap();
        let c = g.contract_edge(0).unwrap();
        assert_eq!(c.vertex_count(), 4);
        assert_eq!(c.edges(), &[(1, 3), (0, 1)]);
    }

    #[test]
    fn delete_and_contract_commute_up_to_isomorphism() {
        let g = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        // Apply to distinct edges in both orders, adjusting the shifted id.
        let a = g.delete_edge(4).unwrap().contract_edge(1).unwrap();
        let b = g.contract_edge(1).unwrap().delete_edge(3).unwrap();
        assert!(a.is_isomorphic(&b));
    }

    #[test]
    fn blocks_of_bowtie_and_loops() {
        // Two triangles sharing vertex 2, plus a loop at 0 and a pendant at 4.
        let g = MultiGraph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (2, 3),
                (3, 4),
                (2, 4),
                (0, 0),
                (4, 5),
            ],
        )
        .unwrap();
        let blocks = g.blocks();
        assert_eq!(blocks.len(), 4);
        let mut triangles = 0;
        let mut loops = 0;
        let mut bridges = 0;
        for b in &blocks {
            match (b.vertex_count(), b.edge_count()) {
                (3, 3) => triangles += 1,
                (1, 1) => loops += 1,
                (2, 1) => bridges += 1,
                other => panic!("unexpected block shape {other:?}"),
            }
        }
        assert_eq!((triangles, loops, bridges), (2, 1, 1));
        // Every edge lands in exactly one block.
        let total: usize = blocks.iter().map(|b| b.edge_count()).sum();
        assert_eq!(total, g.edge_count());
        // Ranks of blocks sum to the rank of the graph.
        let rank_sum: usize = blocks.iter().map(|b| b.rank()).sum();
        assert_eq!(rank_sum, g.rank());
    }

    #[test]
    fn parallel_edges_are_one_block() {
        let g = MultiGraph::from_edges(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        let blocks = g.blocks();
        assert_eq!(blocks.len(), 2);
        assert!(blocks.iter().any(|b| b.edge_count() == 2));
    }

    #[test]
    fn unions_and_joins() {
        let g = triangle();
        let u = g.disjoint_union(&g);
        assert_eq!(u.vertex_count(), 6);
        assert_eq!(u.edge_count(), 6);
        assert_eq!(u.components(), 2);

        let j = g.one_point_join(2, &g, 0).unwrap();
        assert_eq!(j.vertex_count(), 5);
        assert_eq!(j.edge_count(), 6);
        assert_eq!(j.components(), 1);
        assert_eq!(j.degree(2), 4);
        assert!(g.one_point_join(7, &g, 0).is_err());
    }

    #[test]
    fn degree_counts_loops_twice() {
        let g = MultiGraph::from_edges(2, &[(0, 0), (0, 1)]).unwrap();
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 1);
        assert_eq!(g.loops_at(0), 1);
    }

    #[test]
    fn isomorphism_examples() {
        let g = triangle();
        let h = MultiGraph::from_edges(3, &[(2, 1), (0, 2), (1, 0)]).unwrap();
        assert!(g.is_isomorphic(&h));

        // Same degree sequence, different structure: C6 vs two triangles.
        let c6 = MultiGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])
            .unwrap();
        let tt = triangle().disjoint_union(&triangle());
        assert!(!c6.is_isomorphic(&tt));

        // Loops must map to loops.
        let a = MultiGraph::from_edges(2, &[(0, 0), (0, 1)]).unwrap();
        let b = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert!(!a.is_isomorphic(&b));
    }

    #[test]
    fn parse_round_trip() {
        let text = "# sample\nn 4\n0 1\n1 1\n\n0 1\n2 3\n";
        let g = MultiGraph::from_text(text).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges(), &[(0, 1), (1, 1), (0, 1), (2, 3)]);
        let again = MultiGraph::from_text(&g.to_text()).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = MultiGraph::from_text("n 3\n0 1\n0 x\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                msg: "invalid vertex index \"x\"".to_string()
            }
        );

        let err = MultiGraph::from_text("# only comments\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));

        let err = MultiGraph::from_text("n 2\n0 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));

        let err = MultiGraph::from_text("n 2\n0 1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn induced_subgraph_and_isolated_vertices() {
        let g = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let sub = g.induced_subgraph(&[true, false, true, true]);
        assert_eq!(sub.vertex_count(), 3);
        assert_eq!(sub.edges(), &[(0, 1), (1, 2)]);

        let h = MultiGraph::from_edges(5, &[(1, 3)]).unwrap();
        let compact = h.without_isolated_vertices();
        assert_eq!(compact.vertex_count(), 2);
        assert_eq!(compact.edges(), &[(0, 1)]);
    }
}
