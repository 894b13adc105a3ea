//! Brute-force ground truth: every alternative formulation of the Tutte
//! polynomial and every combinatorial count it specializes to, implemented
//! directly from the definitions with no shortcuts shared with the engine.
//!
//! Everything here is exponential in the edge count and guarded by an
//! explicit [`Budget`]; the intended scale is |E| up to ~16. These
//! functions exist to be slow and obviously correct.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::One;

use crate::graph::{Dsu, EdgeSubset, MultiGraph};
use crate::poly::{factorial, BiPoly};
use crate::{Budget, Error, Result};

/// One direction bit per edge id of a host graph: bit clear orients the
/// edge from its stored first endpoint to its second, bit set reverses it.
/// A loop carries a bit like any edge but both values orient it the same
/// way, so acyclicity and balance tests ignore the bit.
pub type Orientation = u64;

/// Result of the ice-rule count. `loops_present` flags inputs where the
/// loop convention (each loop contributes one in-edge and one out-edge to
/// its vertex, under either bit) was actually exercised.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IceCount {
    pub configurations: u64,
    pub loops_present: bool,
}

fn subset_rank(g: &MultiGraph, dsu: &mut Dsu, subset: EdgeSubset) -> usize {
    dsu.reset();
    let mut rank = 0;
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if subset >> e & 1 == 1 && dsu.union(u, v) {
            rank += 1;
        }
    }
    rank
}

/// Invert an edge order (`order[k]` = edge in position k, smallest first)
/// into a position table, rejecting anything that is not a permutation.
pub(crate) fn order_positions(edge_count: usize, order: &[usize]) -> Result<Vec<usize>> {
    if order.len() != edge_count {
        return Err(Error::NotAPermutation);
    }
    let mut pos = vec![usize::MAX; edge_count];
    for (rank, &e) in order.iter().enumerate() {
        if e >= edge_count || pos[e] != usize::MAX {
            return Err(Error::NotAPermutation);
        }
        pos[e] = rank;
    }
    Ok(pos)
}

fn oriented(ends: (usize, usize), mask: Orientation, e: usize) -> (usize, usize) {
    if mask >> e & 1 == 0 {
        ends
    } else {
        (ends.1, ends.0)
    }
}

/// Assemble Σ counts[(c, n)] · (x−1)^c (y−1)^n.
fn assemble_rank_nullity(counts: &BTreeMap<(u32, u32), u64>) -> BiPoly {
    let max_c = counts.keys().map(|&(c, _)| c).max().unwrap_or(0) as usize;
    let max_n = counts.keys().map(|&(_, n)| n).max().unwrap_or(0) as usize;
    let xm1 = BiPoly::x().sub(&BiPoly::one());
    let ym1 = BiPoly::y().sub(&BiPoly::one());
    let mut xp = vec![BiPoly::one()];
    for _ in 0..max_c {
        xp.push(xp.last().unwrap().mul(&xm1));
    }
    let mut yp = vec![BiPoly::one()];
    for _ in 0..max_n {
        yp.push(yp.last().unwrap().mul(&ym1));
    }
    let mut out = BiPoly::zero();
    for (&(c, n), &count) in counts {
        let term = xp[c as usize].mul(&yp[n as usize]).scale(&BigInt::from(count));
        out = out.add(&term);
    }
    out
}

/// The rank–nullity subset expansion:
/// T(G;x,y) = Σ_{A ⊆ E} (x−1)^{r(E)−r(A)} (y−1)^{n(A)}.
pub fn tutte_rank_nullity(g: &MultiGraph, budget: &Budget) -> Result<BiPoly> {
    let total = budget.admit_subsets(g.edge_count(), "rank-nullity subset expansion")?;
    let r = g.rank();
    let mut counts: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    let mut dsu = Dsu::new(g.vertex_count());
    for subset in 0..total {
        let rank = subset_rank(g, &mut dsu, subset);
        let corank = (r - rank) as u32;
        let nullity = subset.count_ones() - rank as u32;
        *counts.entry((corank, nullity)).or_insert(0) += 1;
    }
    Ok(assemble_rank_nullity(&counts))
}

/// Generalized activities of an arbitrary edge subset A under an edge
/// order given as a position table.
///
/// An edge e ∈ A is internally active when no smaller edge could replace
/// it: its endpoints stay disconnected in (A \ {e}) ∪ {f ∉ A : f ≺ e}.
/// An edge e ∉ A is externally active when the subset already connects its
/// endpoints using only larger edges: {f ∈ A : f ≻ e} joins them. When A
/// is a spanning tree these reduce to "smallest edge of its fundamental
/// cut" and "smallest edge of its fundamental cycle".
fn generalized_activities(
    g: &MultiGraph,
    subset: EdgeSubset,
    pos: &[usize],
    dsu: &mut Dsu,
) -> (u32, u32) {
    let mut internal = 0;
    let mut external = 0;
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        dsu.reset();
        if subset >> e & 1 == 1 {
            for (f, &(a, b)) in g.edges().iter().enumerate() {
                if f == e {
                    continue;
                }
                if subset >> f & 1 == 1 || pos[f] < pos[e] {
                    dsu.union(a, b);
                }
            }
            if !dsu.same(u, v) {
                internal += 1;
            }
        } else {
            for (f, &(a, b)) in g.edges().iter().enumerate() {
                if subset >> f & 1 == 1 && pos[f] > pos[e] {
                    dsu.union(a, b);
                }
            }
            if dsu.same(u, v) {
                external += 1;
            }
        }
    }
    (internal, external)
}

/// Every spanning tree together with its internal and external activity
/// counts under the given edge order.
pub fn activity_table(
    g: &MultiGraph,
    order: &[usize],
    budget: &Budget,
) -> Result<Vec<(EdgeSubset, u32, u32)>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let pos = order_positions(g.edge_count(), order)?;
    let total = budget.admit_subsets(g.edge_count(), "spanning-tree activity enumeration")?;
    let r = g.rank();
    let mut dsu = Dsu::new(g.vertex_count());
    let mut out = Vec::new();
    for subset in 0..total {
        if subset.count_ones() as usize != r {
            continue;
        }
        if subset_rank(g, &mut dsu, subset) != r {
            continue;
        }
        let acts = generalized_activities(g, subset, &pos, &mut dsu);
        out.push((subset, acts.0, acts.1));
    }
    Ok(out)
}

/// The spanning-tree activities expansion: Σ x^{internal} y^{external}
/// over all spanning trees. Independent of `order`, which is the point of
/// testing it with many orders.
pub fn tutte_activities(g: &MultiGraph, order: &[usize], budget: &Budget) -> Result<BiPoly> {
    let mut out = BiPoly::zero();
    for (_, internal, external) in activity_table(g, order, budget)? {
        out = out.add(&BiPoly::monomial(internal, external, BigInt::one()));
    }
    Ok(out)
}

/// All partial derivatives ∂^{p+q} T / ∂x^p ∂y^q for p ≤ max_p, q ≤ max_q
/// in one subset sweep, each computed as
/// p! q! Σ x^{in(A)} y^{ex(A)} over subsets with corank p and nullity q.
pub fn derivative_table_via_activities(
    g: &MultiGraph,
    order: &[usize],
    max_p: u32,
    max_q: u32,
    budget: &Budget,
) -> Result<BTreeMap<(u32, u32), BiPoly>> {
    let pos = order_positions(g.edge_count(), order)?;
    let total = budget.admit_subsets(g.edge_count(), "generalized-activities derivative sweep")?;
    let r = g.rank();
    let mut dsu = Dsu::new(g.vertex_count());
    let mut table: BTreeMap<(u32, u32), BiPoly> = BTreeMap::new();
    for p in 0..=max_p {
        for q in 0..=max_q {
            table.insert((p, q), BiPoly::zero());
        }
    }
    for subset in 0..total {
        let rank = subset_rank(g, &mut dsu, subset);
        let corank = (r - rank) as u32;
        let nullity = subset.count_ones() - rank as u32;
        if corank > max_p || nullity > max_q {
            continue;
        }
        let (ia, ea) = generalized_activities(g, subset, &pos, &mut dsu);
        let entry = table.get_mut(&(corank, nullity)).unwrap();
        *entry = entry.add(&BiPoly::monomial(ia, ea, BigInt::one()));
    }
    for ((p, q), poly) in table.iter_mut() {
        let scale = factorial(*p as u64) * factorial(*q as u64);
        *poly = poly.scale(&scale);
    }
    Ok(table)
}

/// One partial derivative via generalized activities; equals the formal
/// partial derivative of the Tutte polynomial.
pub fn derivative_via_activities(
    g: &MultiGraph,
    order: &[usize],
    p: u32,
    q: u32,
    budget: &Budget,
) -> Result<BiPoly> {
    let table = derivative_table_via_activities(g, order, p, q, budget)?;
    Ok(table[&(p, q)].clone())
}

/// Count maximal spanning forests (spanning trees when g is connected):
/// subsets of size r(E) with rank r(E). Equals T(1,1).
pub fn count_spanning_trees(g: &MultiGraph, budget: &Budget) -> Result<u64> {
    let total = budget.admit_subsets(g.edge_count(), "spanning-tree count")?;
    let r = g.rank();
    let mut dsu = Dsu::new(g.vertex_count());
    let mut count = 0;
    for subset in 0..total {
        if subset.count_ones() as usize == r && subset_rank(g, &mut dsu, subset) == r {
            count += 1;
        }
    }
    Ok(count)
}

/// Count acyclic edge subsets (spanning forests). Equals T(2,1).
pub fn count_spanning_forests(g: &MultiGraph, budget: &Budget) -> Result<u64> {
    let total = budget.admit_subsets(g.edge_count(), "spanning-forest count")?;
    let mut dsu = Dsu::new(g.vertex_count());
    let mut count = 0;
    for subset in 0..total {
        if subset_rank(g, &mut dsu, subset) == subset.count_ones() as usize {
            count += 1;
        }
    }
    Ok(count)
}

/// Count subsets with full rank, i.e. spanning connected subgraphs when g
/// is connected. Equals T(1,2).
pub fn count_spanning_connected(g: &MultiGraph, budget: &Budget) -> Result<u64> {
    let total = budget.admit_subsets(g.edge_count(), "spanning-connected count")?;
    let r = g.rank();
    let mut dsu = Dsu::new(g.vertex_count());
    let mut count = 0;
    for subset in 0..total {
        if subset_rank(g, &mut dsu, subset) == r {
            count += 1;
        }
    }
    Ok(count)
}

/// Full-rank subsets bucketed by cardinality; entry s counts spanning
/// connected subgraphs with s edges (g connected). Feeds the reliability
/// coefficient check.
pub fn spanning_connected_counts_by_size(g: &MultiGraph, budget: &Budget) -> Result<Vec<u64>> {
    let total = budget.admit_subsets(g.edge_count(), "spanning-connected census")?;
    let r = g.rank();
    let mut dsu = Dsu::new(g.vertex_count());
    let mut counts = vec![0u64; g.edge_count() + 1];
    for subset in 0..total {
        if subset_rank(g, &mut dsu, subset) == r {
            counts[subset.count_ones() as usize] += 1;
        }
    }
    Ok(counts)
}

/// Acyclic subsets bucketed by cardinality; feeds the face-enumerator
/// cross-check.
pub fn spanning_forest_counts_by_size(g: &MultiGraph, budget: &Budget) -> Result<Vec<u64>> {
    let total = budget.admit_subsets(g.edge_count(), "spanning-forest census")?;
    let mut dsu = Dsu::new(g.vertex_count());
    let mut counts = vec![0u64; g.edge_count() + 1];
    for subset in 0..total {
        if subset_rank(g, &mut dsu, subset) == subset.count_ones() as usize {
            counts[subset.count_ones() as usize] += 1;
        }
    }
    Ok(counts)
}

/// The number of edge subsets, 2^|E|, still subject to the budget so the
/// T(2,2) cross-check refuses at the same threshold as everything else.
pub fn count_subsets(g: &MultiGraph, budget: &Budget) -> Result<u64> {
    budget.admit_subsets(g.edge_count(), "subset count")
}

/// Kahn peeling; returns true when the orientation is acyclic. Any loop
/// pins indegree above zero at its vertex, so loop-bearing graphs are
/// never acyclic.
fn is_acyclic(g: &MultiGraph, mask: Orientation, indeg: &mut [u32], queue: &mut Vec<usize>) -> bool {
    indeg.fill(0);
    for (e, &ends) in g.edges().iter().enumerate() {
        let (_, head) = oriented(ends, mask, e);
        indeg[head] += 1;
    }
    queue.clear();
    queue.extend((0..g.vertex_count()).filter(|&v| indeg[v] == 0));
    let mut processed = 0;
    while let Some(&v) = queue.get(processed) {
        processed += 1;
        for (e, &ends) in g.edges().iter().enumerate() {
            let (tail, head) = oriented(ends, mask, e);
            if tail == v && tail != head {
                indeg[head] -= 1;
                if indeg[head] == 0 {
                    queue.push(head);
                }
            }
        }
    }
    processed == g.vertex_count()
}

/// Count acyclic orientations. Equals T(2,0).
pub fn count_acyclic_orientations(g: &MultiGraph, budget: &Budget) -> Result<u64> {
    let total = budget.admit_assignments(2, g.edge_count(), "acyclic-orientation count")?;
    let mut indeg = vec![0u32; g.vertex_count()];
    let mut queue = Vec::with_capacity(g.vertex_count());
    let mut count = 0;
    for mask in 0..total {
        if is_acyclic(g, mask, &mut indeg, &mut queue) {
            count += 1;
        }
    }
    Ok(count)
}

/// True when `to` is reachable from `from` along edges directed by `mask`,
/// using only edges accepted by `allow`.
fn reaches(
    g: &MultiGraph,
    mask: Orientation,
    from: usize,
    to: usize,
    allow: impl Fn(usize) -> bool,
    stack: &mut Vec<usize>,
) -> bool {
    if from == to {
        return true;
    }
    let mut visited: u64 = 1 << from;
    stack.clear();
    stack.push(from);
    while let Some(v) = stack.pop() {
        for (e, &ends) in g.edges().iter().enumerate() {
            if !allow(e) {
                continue;
            }
            let (tail, head) = oriented(ends, mask, e);
            if tail == v && visited >> head & 1 == 0 {
                if head == to {
                    return true;
                }
                visited |= 1 << head;
                stack.push(head);
            }
        }
    }
    false
}

/// Count totally cyclic orientations: every edge lies on a directed cycle,
/// checked per edge as head-to-tail reachability. Equals T(0,2).
pub fn count_totally_cyclic(g: &MultiGraph, budget: &Budget) -> Result<u64> {
    let total = budget.admit_assignments(2, g.edge_count(), "totally-cyclic orientation count")?;
    assert!(g.vertex_count() <= 64, "reachability bitmask holds at most 64 vertices");
    let mut stack = Vec::with_capacity(g.vertex_count());
    let mut count = 0;
    for mask in 0..total {
        let ok = (0..g.edge_count()).all(|e| {
            let (tail, head) = oriented(g.edges()[e], mask, e);
            reaches(g, mask, head, tail, |_| true, &mut stack)
        });
        if ok {
            count += 1;
        }
    }
    Ok(count)
}

/// Count acyclic orientations whose unique source (indegree-0 vertex) is
/// `source`. Equals T(1,0) for connected g, independent of the choice.
pub fn count_acyclic_unique_source(
    g: &MultiGraph,
    source: usize,
    budget: &Budget,
) -> Result<u64> {
    if source >= g.vertex_count() {
        return Err(Error::UnknownVertex(source));
    }
    let total = budget.admit_assignments(2, g.edge_count(), "unique-source orientation count")?;
    let mut indeg = vec![0u32; g.vertex_count()];
    let mut queue = Vec::with_capacity(g.vertex_count());
    let mut count = 0;
    for mask in 0..total {
        indeg.fill(0);
        for (e, &ends) in g.edges().iter().enumerate() {
            let (_, head) = oriented(ends, mask, e);
            indeg[head] += 1;
        }
        let sole_source = indeg[source] == 0
            && (0..g.vertex_count()).all(|v| v == source || indeg[v] > 0);
        if sole_source && is_acyclic(g, mask, &mut indeg, &mut queue) {
            count += 1;
        }
    }
    Ok(count)
}

/// Count distinct score vectors (out-degree sequences) over all
/// orientations; a loop adds 1 to its vertex under either bit. Equals
/// T(2,1), the forest count.
pub fn count_score_vectors(g: &MultiGraph, budget: &Budget) -> Result<u64> {
    let total = budget.admit_assignments(2, g.edge_count(), "score-vector enumeration")?;
    let mut seen: BTreeSet<Vec<u16>> = BTreeSet::new();
    for mask in 0..total {
        let mut out_deg = vec![0u16; g.vertex_count()];
        for (e, &ends) in g.edges().iter().enumerate() {
            let (tail, _) = oriented(ends, mask, e);
            out_deg[tail] += 1;
        }
        seen.insert(out_deg);
    }
    Ok(seen.len() as u64)
}

/// Count nowhere-zero Z_k flows: maps E → {1, …, k−1} with zero net flow
/// at every vertex under the stored reference orientation. Assignments are
/// built edge by edge; a vertex's balance is checked the moment its last
/// incident edge receives a value.
pub fn count_nowhere_zero_flows(g: &MultiGraph, k: u64, budget: &Budget) -> Result<u64> {
    assert!(k >= 1, "flows take values in Z_k with k >= 1");
    budget.admit_assignments(k - 1, g.edge_count(), "nowhere-zero flow enumeration")?;
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut last_touch = vec![usize::MAX; n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        last_touch[u] = e;
        last_touch[v] = e;
    }
    let mut balance = vec![0u64; n];

    fn descend(
        g: &MultiGraph,
        k: u64,
        e: usize,
        last_touch: &[usize],
        balance: &mut [u64],
    ) -> u64 {
        if e == g.edge_count() {
            return 1;
        }
        let (u, v) = g.edges()[e];
        let mut total = 0;
        for value in 1..k {
            if u != v {
                balance[u] = (balance[u] + value) % k;
                balance[v] = (balance[v] + k - value) % k;
            }
            let settled = (last_touch[u] != e || balance[u] == 0)
                && (last_touch[v] != e || balance[v] == 0);
            if settled {
                total += descend(g, k, e + 1, last_touch, balance);
            }
            if u != v {
                balance[u] = (balance[u] + k - value) % k;
                balance[v] = (balance[v] + value) % k;
            }
        }
        total
    }

    // Vertices untouched by any edge carry zero balance and never get
    // checked; that is the correct (empty) Kirchhoff condition.
    if m == 0 {
        return Ok(1);
    }
    Ok(descend(g, k, 0, &last_touch, &mut balance))
}

/// Count ice configurations of a 4-regular graph: orientations with
/// in-degree 2 and out-degree 2 at every vertex, a loop contributing one
/// in and one out regardless of its bit (so both bits count separately).
pub fn count_ice_configurations(g: &MultiGraph, budget: &Budget) -> Result<IceCount> {
    for v in 0..g.vertex_count() {
        let degree = g.degree(v);
        if degree != 4 {
            return Err(Error::NotFourRegular { vertex: v, degree });
        }
    }
    let total = budget.admit_assignments(2, g.edge_count(), "ice-rule orientation count")?;
    let mut indeg = vec![0u32; g.vertex_count()];
    let mut count = 0;
    for mask in 0..total {
        indeg.fill(0);
        for (e, &ends) in g.edges().iter().enumerate() {
            if ends.0 == ends.1 {
                indeg[ends.0] += 1;
            } else {
                let (_, head) = oriented(ends, mask, e);
                indeg[head] += 1;
            }
        }
        if indeg.iter().all(|&d| d == 2) {
            count += 1;
        }
    }
    Ok(IceCount {
        configurations: count,
        loops_present: g.loop_count() > 0,
    })
}

fn gf2_rank(mut rows: Vec<u64>) -> usize {
    let mut rank = 0;
    for bit in 0..64 {
        let Some(i) = (rank..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(rank, i);
        let pivot = rows[rank];
        for row in rows.iter_mut().skip(rank + 1) {
            if *row >> bit & 1 == 1 {
                *row ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}

/// Dimension over GF(2) of the bicycle space (cycle space ∩ cut space),
/// via dim(C ∩ C⊥) = |E| − rank(C ∪ C⊥) with fundamental cycle and cut
/// bases from one spanning forest. Polynomial time, no budget.
pub fn bicycle_dimension(g: &MultiGraph) -> usize {
    let n = g.vertex_count();
    let m = g.edge_count();
    assert!(m <= 64, "bicycle rows are 64-bit edge masks");
    let mut dsu = Dsu::new(n);
    let mut in_tree = vec![false; m];
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if dsu.union(u, v) {
            in_tree[e] = true;
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
    }

    // Fundamental cycle of a non-tree edge: the edge plus the forest path
    // between its endpoints (empty for a loop).
    let tree_path = |from: usize, to: usize| -> u64 {
        if from == to {
            return 0;
        }
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut stack = vec![from];
        let mut seen = vec![false; n];
        seen[from] = true;
        while let Some(v) = stack.pop() {
            for &(w, e) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some((v, e));
                    stack.push(w);
                }
            }
        }
        let mut mask = 0u64;
        let mut v = to;
        while let Some((prev, e)) = parent[v] {
            mask |= 1 << e;
            v = prev;
        }
        mask
    };

    let mut rows: Vec<u64> = Vec::new();
    let mut path_masks: Vec<(usize, u64)> = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if !in_tree[e] {
            let path = tree_path(u, v);
            path_masks.push((e, path));
            rows.push(path | 1 << e);
        }
    }
    for f in 0..m {
        if in_tree[f] {
            let mut row = 1u64 << f;
            for &(e, path) in &path_masks {
                if path >> f & 1 == 1 {
                    row |= 1 << e;
                }
            }
            rows.push(row);
        }
    }
    m - gf2_rank(rows)
}

/// True when edge e is the smallest edge of a consistently directed cycle
/// under `mask`: a directed path from its head back to its tail through
/// strictly larger edges (a loop is such a cycle by itself).
fn min_of_directed_cycle(
    g: &MultiGraph,
    mask: Orientation,
    e: usize,
    pos: &[usize],
    stack: &mut Vec<usize>,
) -> bool {
    let (tail, head) = oriented(g.edges()[e], mask, e);
    reaches(g, mask, head, tail, |f| pos[f] > pos[e], stack)
}

/// True when edge e is the smallest edge of a consistently directed
/// cocycle: after contracting all smaller edges, some vertex bipartition
/// has e crossing and every crossing edge directed the same way.
fn min_of_directed_cocycle(
    g: &MultiGraph,
    mask: Orientation,
    e: usize,
    pos: &[usize],
    dsu: &mut Dsu,
) -> bool {
    let n = g.vertex_count();
    dsu.reset();
    for (f, &(a, b)) in g.edges().iter().enumerate() {
        if pos[f] < pos[e] {
            dsu.union(a, b);
        }
    }
    let (tail, head) = oriented(g.edges()[e], mask, e);
    if dsu.same(tail, head) {
        return false;
    }
    let mut blob_index = vec![usize::MAX; n];
    let mut blobs = 0;
    for v in 0..n {
        let root = dsu.find(v);
        if blob_index[root] == usize::MAX {
            blob_index[root] = blobs;
            blobs += 1;
        }
    }
    let side = |dsu: &mut Dsu, v: usize, pick: u64| pick >> blob_index[dsu.find(v)] & 1;
    for pick in 0..(1u64 << blobs) {
        if side(dsu, tail, pick) != 1 || side(dsu, head, pick) != 0 {
            continue;
        }
        let consistent = (0..g.edge_count()).all(|f| {
            if pos[f] < pos[e] {
                return true;
            }
            let (ft, fh) = oriented(g.edges()[f], mask, f);
            let (a, b) = (side(dsu, ft, pick), side(dsu, fh, pick));
            a == b || (a == 1 && b == 0)
        });
        if consistent {
            return true;
        }
    }
    false
}

/// The Gioan–Las Vergnas orientation-activity table: o[(i,j)] counts
/// orientations with i edges minimal in some consistently directed cocycle
/// and j edges minimal in some consistently directed cycle. The Tutte
/// coefficients satisfy t_ij = o_ij / 2^(i+j) with exact divisibility.
pub fn orientation_activities(
    g: &MultiGraph,
    order: &[usize],
    budget: &Budget,
) -> Result<BTreeMap<(u32, u32), u64>> {
    let pos = order_positions(g.edge_count(), order)?;
    let total = budget.admit_assignments(2, g.edge_count(), "orientation-activity enumeration")?;
    assert!(g.vertex_count() <= 64, "reachability bitmask holds at most 64 vertices");
    let mut dsu = Dsu::new(g.vertex_count());
    let mut stack = Vec::with_capacity(g.vertex_count());
    let mut table: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for mask in 0..total {
        let mut cocycle_active = 0;
        let mut cycle_active = 0;
        for e in 0..g.edge_count() {
            if min_of_directed_cocycle(g, mask, e, &pos, &mut dsu) {
                cocycle_active += 1;
            }
            if min_of_directed_cycle(g, mask, e, &pos, &mut stack) {
                cycle_active += 1;
            }
        }
        *table.entry((cocycle_active, cycle_active)).or_insert(0) += 1;
    }
    Ok(table)
}
