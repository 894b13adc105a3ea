//! Test-corpus graphs: named small graphs, exhaustive enumeration of small
//! multigraphs, seeded random generators, and the built-in plane-dual pairs.
//!
//! The enumeration functions drive the brute-force cross-checks, so their
//! iteration order is deterministic: graphs are produced in a fixed order
//! that never depends on hashing.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::graph::MultiGraph;

/// Complete graph on `n` vertices; edges ordered lexicographically.
pub fn complete(n: usize) -> MultiGraph {
    let mut g = MultiGraph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

pub fn triangle() -> MultiGraph {
    complete(3)
}

pub fn k4() -> MultiGraph {
    complete(4)
}

pub fn k5() -> MultiGraph {
    complete(5)
}

/// K4 with one edge removed: 4 vertices, 5 edges, vertices 2 and 3
/// non-adjacent. Its Tutte polynomial is x^3 + 2*x^2 + x + 2*x*y + y + y^2.
pub fn k4_minus_edge() -> MultiGraph {
    MultiGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap()
}

/// Cycle on `n` vertices; `cycle(1)` is a single vertex with a loop,
/// `cycle(2)` is the digon.
pub fn cycle(n: usize) -> MultiGraph {
    assert!(n >= 1);
    let mut g = MultiGraph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n).unwrap();
    }
    g
}

/// Path with `edge_count` edges (one more vertex than edges).
pub fn path(edge_count: usize) -> MultiGraph {
    let mut g = MultiGraph::new(edge_count + 1);
    for i in 0..edge_count {
        g.add_edge(i, i + 1).unwrap();
    }
    g
}

/// Two vertices joined by `n` parallel edges; the plane dual of `cycle(n)`.
pub fn dipole(n: usize) -> MultiGraph {
    assert!(n >= 1);
    let mut g = MultiGraph::new(2);
    for _ in 0..n {
        g.add_edge(0, 1).unwrap();
    }
    g
}

/// Cycle on `n` vertices with every edge doubled; 4-regular for every `n`
/// (`doubled_cycle(1)` is a vertex with two loops).
pub fn doubled_cycle(n: usize) -> MultiGraph {
    assert!(n >= 1);
    let mut g = MultiGraph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n).unwrap();
        g.add_edge(i, (i + 1) % n).unwrap();
    }
    g
}

/// The 3-cube. Vertices are coordinate bitmasks (bit 0 = x, bit 1 = y,
/// bit 2 = z); edges connect masks differing in one bit, enumerated by
/// lower endpoint then flipped bit.
pub fn cube() -> MultiGraph {
    let mut g = MultiGraph::new(8);
    for v in 0..8usize {
        for bit in 0..3 {
            if v & (1 << bit) == 0 {
                g.add_edge(v, v | (1 << bit)).unwrap();
            }
        }
    }
    g
}

/// The octahedron K_{2,2,2}: vertices paired as {0,1}, {2,3}, {4,5} with
/// all edges between distinct pairs.
pub fn octahedron() -> MultiGraph {
    let mut g = MultiGraph::new(6);
    for u in 0..6usize {
        for v in (u + 1)..6 {
            if u / 2 != v / 2 {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Plane-dual pairs with an explicit edge correspondence: triples
/// `(g, g_star, bijection)` where `bijection[e]` is the edge of `g_star`
/// crossing edge `e` of `g`. Shipping fixed pairs avoids any embedding
/// computation.
pub fn dual_pairs() -> Vec<(MultiGraph, MultiGraph, Vec<usize>)> {
    let mut pairs = Vec::new();

    // A bridge and a loop are plane duals of each other.
    pairs.push((
        MultiGraph::from_edges(2, &[(0, 1)]).unwrap(),
        MultiGraph::from_edges(1, &[(0, 0)]).unwrap(),
        vec![0],
    ));

    // Every edge of a cycle separates the inner face from the outer one,
    // so any pairing with the dipole's edges works; use the identity.
    for n in 2..=6 {
        pairs.push((cycle(n), dipole(n), (0..n).collect()));
    }

    // K4 drawn with vertex 0 inside triangle 123. Faces: 012, 023, 013 and
    // the outer face 123, renamed 0..3 in that order. Each primal edge
    // maps to the edge between the two faces it borders.
    pairs.push((k4(), k4(), vec![1, 0, 3, 2, 5, 4]));

    // Cube and octahedron, edges generated in lockstep: an edge of the
    // cube along one axis borders the two faces named by its fixed
    // coordinates. Face vertices: x=0 -> 0, x=1 -> 1, y -> 2,3, z -> 4,5.
    let mut octa = MultiGraph::new(6);
    for v in 0..8usize {
        let (x, y, z) = (v & 1, (v >> 1) & 1, (v >> 2) & 1);
        for bit in 0..3 {
            if v & (1 << bit) == 0 {
                let dual = match bit {
                    0 => (2 + y, 4 + z),
                    1 => (x, 4 + z),
                    _ => (x, 2 + y),
                };
                octa.add_edge(dual.0, dual.1).unwrap();
            }
        }
    }
    let m = octa.edge_count();
    pairs.push((cube(), octa, (0..m).collect()));

    pairs
}

/// Visit every labeled multigraph with exactly `vertex_count` vertices and
/// at most `max_edges` edges, connected ones only if `connected_only`.
/// Edges are multisets over the unordered endpoint pairs (loops included);
/// iteration order is deterministic.
fn for_each_on(
    vertex_count: usize,
    max_edges: usize,
    connected_only: bool,
    f: &mut impl FnMut(&MultiGraph),
) {
    let mut slots = Vec::new();
    for u in 0..vertex_count {
        for v in u..vertex_count {
            slots.push((u, v));
        }
    }
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(max_edges);
    descend(vertex_count, &slots, 0, max_edges, connected_only, &mut edges, f);
}

fn descend(
    vertex_count: usize,
    slots: &[(usize, usize)],
    slot: usize,
    remaining: usize,
    connected_only: bool,
    edges: &mut Vec<(usize, usize)>,
    f: &mut impl FnMut(&MultiGraph),
) {
    if slot == slots.len() {
        let g = MultiGraph::from_edges(vertex_count, edges).unwrap();
        if !connected_only || g.is_connected() {
            f(&g);
        }
        return;
    }
    let depth = edges.len();
    descend(vertex_count, slots, slot + 1, remaining, connected_only, edges, f);
    for take in 1..=remaining {
        edges.push(slots[slot]);
        descend(
            vertex_count,
            slots,
            slot + 1,
            remaining - take,
            connected_only,
            edges,
            f,
        );
    }
    edges.truncate(depth);
}

/// Visit every connected labeled multigraph with up to `max_vertices`
/// vertices and up to `max_edges` edges, smaller vertex counts first.
pub fn for_each_connected(max_vertices: usize, max_edges: usize, mut f: impl FnMut(&MultiGraph)) {
    for n in 1..=max_vertices {
        for_each_on(n, max_edges, true, &mut f);
    }
}

/// Visit every labeled multigraph (connected or not) with up to
/// `max_vertices` vertices and up to `max_edges` edges. Vertex counts are
/// exact per pass, so disconnected graphs appear once per labeling.
pub fn for_each_multigraph(max_vertices: usize, max_edges: usize, mut f: impl FnMut(&MultiGraph)) {
    for n in 1..=max_vertices {
        for_each_on(n, max_edges, false, &mut f);
    }
}

/// A seeded random multigraph: uniform vertex count in 1..=max_vertices,
/// uniform edge count in 0..=max_edges, endpoints uniform over unordered
/// pairs (loops possible).
pub fn random_multigraph(seed: u64, max_vertices: usize, max_edges: usize) -> MultiGraph {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let n = rng.random_range(1..=max_vertices);
    let m = rng.random_range(0..=max_edges);
    let mut g = MultiGraph::new(n);
    for _ in 0..m {
        let mut u = rng.random_range(0..n);
        let mut v = rng.random_range(0..n);
        if u > v {
            std::mem::swap(&mut u, &mut v);
        }
        g.add_edge(u, v).unwrap();
    }
    g
}

/// A seeded series-parallel graph: start from the digon and apply
/// `extra_edges` random subdivision or parallel-duplication steps, each of
/// which adds one edge. The result is loopless, 2-connected, and has
/// `2 + extra_edges` edges.
pub fn series_parallel(seed: u64, extra_edges: usize) -> MultiGraph {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut vertex_count = 2usize;
    let mut edges: Vec<(usize, usize)> = vec![(0, 1), (0, 1)];
    for _ in 0..extra_edges {
        let e = rng.random_range(0..edges.len());
        let (u, v) = edges[e];
        if rng.random_bool(0.5) {
            // Subdivide: replace (u,v) by a path through a fresh vertex.
            let w = vertex_count;
            vertex_count += 1;
            edges[e] = (u, w);
            edges.push((w, v));
        } else {
            edges.push((u, v));
        }
    }
    MultiGraph::from_edges(vertex_count, &edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graphs_have_expected_shape() {
        assert_eq!(triangle().edge_count(), 3);
        assert_eq!(k4_minus_edge().edge_count(), 5);
        assert_eq!(k4_minus_edge().multiplicity(2, 3), 0);
        assert_eq!(cycle(1).loop_count(), 1);
        assert_eq!(dipole(4).multiplicity(0, 1), 4);
        let q3 = cube();
        assert_eq!((q3.vertex_count(), q3.edge_count()), (8, 12));
        assert!((0..8).all(|v| q3.degree(v) == 3));
        let oct = octahedron();
        assert_eq!((oct.vertex_count(), oct.edge_count()), (6, 12));
        assert!((0..6).all(|v| oct.degree(v) == 4));
        for n in [1, 2, 3, 5] {
            let d = doubled_cycle(n);
            assert!((0..n).all(|v| d.degree(v) == 4));
        }
    }

    #[test]
    fn dual_pairs_are_structurally_plausible() {
        for (g, gs, bij) in dual_pairs() {
            assert_eq!(g.edge_count(), gs.edge_count());
            assert_eq!(bij.len(), g.edge_count());
            let mut seen = vec![false; bij.len()];
            for &e in &bij {
                assert!(!seen[e]);
                seen[e] = true;
            }
            // Euler relation for a connected plane graph: n* = m - n + 2.
            assert_eq!(
                gs.vertex_count() + g.vertex_count(),
                g.edge_count() + 2
            );
        }
    }

    #[test]
    fn enumeration_counts_on_two_vertices() {
        // Two vertices, at most two edges, slots (0,0), (0,1), (1,1):
        // connected graphs need at least one (0,1) edge.
        let mut got = Vec::new();
        for_each_on(2, 2, true, &mut |g: &MultiGraph| {
            got.push(g.edges().to_vec());
        });
        let expected: Vec<Vec<(usize, usize)>> = vec![
            vec![(0, 1)],
            vec![(0, 1), (1, 1)],
            vec![(0, 1), (0, 1)],
            vec![(0, 0), (0, 1)],
        ];
        assert_eq!(got.len(), expected.len());
        for e in expected {
            assert!(got.contains(&e), "missing {e:?}");
        }
    }

    #[test]
    fn enumeration_is_deterministic_and_counts_match() {
        let mut first = Vec::new();
        for_each_connected(3, 3, |g| first.push(g.to_text()));
        let mut second = Vec::new();
        for_each_connected(3, 3, |g| second.push(g.to_text()));
        assert_eq!(first, second);
        assert!(first.contains(&triangle().to_text()));
        // Every enumerated graph is connected and within bounds.
        for_each_connected(4, 4, |g| {
            assert!(g.is_connected());
            assert!(g.vertex_count() <= 4 && g.edge_count() <= 4);
        });
        // The unrestricted enumeration is a superset.
        let mut all = 0usize;
        let mut connected = 0usize;
        for_each_multigraph(3, 3, |g| {
            all += 1;
            if g.is_connected() {
                connected += 1;
            }
        });
        let mut connected_direct = 0usize;
        for_each_connected(3, 3, |_| connected_direct += 1);
        assert_eq!(connected, connected_direct);
        assert!(all > connected);
    }

    #[test]
    fn series_parallel_generator_is_reproducible_and_two_connected() {
        for seed in 0..20 {
            let g = series_parallel(seed, 6);
            assert_eq!(g.edge_count(), 8);
            assert_eq!(g.to_text(), series_parallel(seed, 6).to_text());
            assert_eq!(g.loop_count(), 0);
            assert!(g.is_connected());
            // 2-connected: a single block containing every edge.
            let blocks = g.blocks();
            assert_eq!(blocks.len(), 1, "not 2-connected: {}", g.to_text());
        }
    }

    #[test]
    fn random_multigraph_is_seed_stable() {
        let a = random_multigraph(7, 6, 10);
        let b = random_multigraph(7, 6, 10);
        assert_eq!(a, b);
        assert!(a.vertex_count() <= 6 && a.edge_count() <= 10);
    }
}
