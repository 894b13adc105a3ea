//! The production Tutte polynomial computation.
//!
//! The recursion strips every loop and bridge up front (multiplying the
//! result by y^loops x^bridges), factors what remains into 2-connected
//! blocks, and only then pays for a deletion/contraction pivot, chosen as
//! the ordinary edge with the most parallel siblings so parallel classes
//! collapse fastest. Subresults are memoized under canonical keys.
//!
//! One classification pass suffices for the stripping phase: deleting a
//! loop leaves every other edge's class unchanged, and contracting a
//! bridge cannot create a loop (an edge parallel to a bridge would make it
//! not a bridge) nor turn an ordinary edge into a bridge (its witnessing
//! cycle avoids the bridge and survives the contraction).

use std::collections::HashMap;
use std::collections::VecDeque;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graph::{EdgeKind, MultiGraph};
use crate::poly::{BiPoly, Rational};

/// How subproblems are keyed for memoization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum KeyMode {
    /// Deterministic relabeling by degree-sorted BFS, then the labeled edge
    /// list. Equal keys imply isomorphic graphs (the key is itself an edge
    /// list), so cache hits are always sound; isomorphic graphs may still
    /// get different keys and merely miss.
    #[default]
    Fast,
    /// Full canonical form: the minimum labeled edge list over all vertex
    /// relabelings compatible with an iterated degree-refinement, so keys
    /// are equal exactly for isomorphic graphs. Permutation search; only
    /// for graphs with at most 10 vertices.
    Strong,
}

/// How the engine picks the deletion/contraction pivot among a block's
/// edges (all of which are ordinary by construction).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotRule {
    /// The edge with the most parallel siblings, smallest id on ties.
    #[default]
    MostParallel,
    /// A pseudo-random edge chosen by hashing the subproblem with the
    /// seed. Edge ids shift under minors, so "a random edge order" is
    /// realized per subproblem rather than as one global permutation;
    /// every seed must produce the same polynomial.
    Seeded(u64),
}

/// A memo table that can be shared across engine calls (and threads).
pub type SharedCache = Arc<Mutex<HashMap<Vec<u8>, BiPoly>>>;

pub fn new_shared_cache() -> SharedCache {
    Arc::new(Mutex::new(HashMap::new()))
}

/// Configured Tutte computation. The default engine uses fast keys, the
/// most-parallel pivot, and a cache local to each call.
#[derive(Debug, Clone, Default)]
pub struct Engine {
    key_mode: KeyMode,
    pivot: PivotRule,
    shared: Option<SharedCache>,
}

impl Engine {
    pub fn new() -> Self {
        Engine::default()
    }

    pub fn key_mode(mut self, mode: KeyMode) -> Self {
        self.key_mode = mode;
        self
    }

    pub fn pivot_rule(mut self, rule: PivotRule) -> Self {
        self.pivot = rule;
        self
    }

    /// Reuse `cache` across calls. The shared table only serves the
    /// polynomial computation; point evaluations keep per-call tables.
    pub fn shared_cache(mut self, cache: SharedCache) -> Self {
        self.shared = Some(cache);
        self
    }

    /// The Tutte polynomial of g.
    pub fn tutte(&self, g: &MultiGraph) -> BiPoly {
        let mut local = HashMap::new();
        let alg = PolyAlgebra { shared: self.shared.clone() };
        self.solve(g.clone(), &alg, &mut local)
    }

    /// T(g; x, y) with exact rational arithmetic carried through the
    /// recursion instead of polynomials.
    pub fn tutte_eval(&self, g: &MultiGraph, x: &Rational, y: &Rational) -> Rational {
        let mut local = HashMap::new();
        let alg = EvalAlgebra { x: x.clone(), y: y.clone() };
        self.solve(g.clone(), &alg, &mut local)
    }

    fn solve<A: Algebra>(
        &self,
        g: MultiGraph,
        alg: &A,
        local: &mut HashMap<Vec<u8>, A::Value>,
    ) -> A::Value {
        let (core, bridges, loops) = strip(g);
        let mut result = alg.terminal(bridges, loops);
        if core.edge_count() == 0 {
            return result;
        }
        // Blocks cover disconnected cores too (each component contributes
        // its own blocks), so components never need separate handling.
        for block in core.without_isolated_vertices().blocks() {
            let factor = self.solve_block(block, alg, local);
            result = alg.mul(result, &factor);
        }
        result
    }

    fn solve_block<A: Algebra>(
        &self,
        g: MultiGraph,
        alg: &A,
        local: &mut HashMap<Vec<u8>, A::Value>,
    ) -> A::Value {
        let key = canonical_key(&g, self.key_mode);
        if let Some(hit) = local.get(&key) {
            return hit.clone();
        }
        if let Some(hit) = alg.shared_get(&key) {
            local.insert(key, hit.clone());
            return hit;
        }
        let e = self.pick_pivot(&g);
        let del = self.solve(g.delete_edge(e).unwrap(), alg, local);
        let con = self.solve(g.contract_edge(e).unwrap(), alg, local);
        let result = alg.add(del, &con);
        alg.shared_put(&key, &result);
        local.insert(key, result.clone());
        result
    }

    fn pick_pivot(&self, g: &MultiGraph) -> usize {
        match self.pivot {
            PivotRule::MostParallel => {
                let mut best = 0;
                let mut best_mult = 0;
                for (e, &(u, v)) in g.edges().iter().enumerate() {
                    let mult = g.multiplicity(u, v);
                    if mult > best_mult {
                        best = e;
                        best_mult = mult;
                    }
                }
                best
            }
            PivotRule::Seeded(seed) => {
                let mut h = seed ^ 0x9E37_79B9_7F4A_7C15;
                let mut mix = |x: u64| {
                    h ^= x.wrapping_add(0x100_0000_01B3).wrapping_add(h << 6);
                    h = h.rotate_left(13).wrapping_mul(0xFF51_AFD7_ED55_8CCD);
                };
                mix(g.vertex_count() as u64);
                for &(u, v) in g.edges() {
                    mix(u as u64);
                    mix(v as u64);
                }
                (h % g.edge_count() as u64) as usize
            }
        }
    }
}

/// Remove every loop and contract every bridge of g, returning the purely
/// ordinary remainder and the counts. Edges are processed by descending id
/// so earlier ids stay valid; see the module doc for why classifying once
/// up front is enough.
fn strip(g: MultiGraph) -> (MultiGraph, u32, u32) {
    let kinds: Vec<EdgeKind> = (0..g.edge_count())
        .map(|e| g.classify_edge(e).unwrap())
        .collect();
    let mut bridges = 0;
    let mut loops = 0;
    let mut core = g;
    for (e, kind) in kinds.iter().enumerate().rev() {
        match kind {
            EdgeKind::Ordinary => {}
            EdgeKind::Loop => {
                loops += 1;
                core = core.delete_edge(e).unwrap();
            }
            EdgeKind::Bridge => {
                bridges += 1;
                core = core.contract_edge(e).unwrap();
            }
        }
    }
    (core, bridges, loops)
}

/// The value domain the recursion runs in: polynomials for [`Engine::tutte`],
/// rationals for [`Engine::tutte_eval`].
trait Algebra {
    type Value: Clone;
    /// The terminal graph of i bridges and j loops contributes x^i y^j.
    fn terminal(&self, bridges: u32, loops: u32) -> Self::Value;
    fn add(&self, del: Self::Value, con: &Self::Value) -> Self::Value;
    fn mul(&self, acc: Self::Value, factor: &Self::Value) -> Self::Value;
    fn shared_get(&self, _key: &[u8]) -> Option<Self::Value> {
        None
    }
    fn shared_put(&self, _key: &[u8], _value: &Self::Value) {}
}

struct PolyAlgebra {
    shared: Option<SharedCache>,
}

impl Algebra for PolyAlgebra {
    type Value = BiPoly;

    fn terminal(&self, bridges: u32, loops: u32) -> BiPoly {
        BiPoly::monomial(bridges, loops, BigInt::one())
    }

    fn add(&self, del: BiPoly, con: &BiPoly) -> BiPoly {
        del.add(con)
    }

    fn mul(&self, acc: BiPoly, factor: &BiPoly) -> BiPoly {
        acc.mul(factor)
    }

    fn shared_get(&self, key: &[u8]) -> Option<BiPoly> {
        self.shared
            .as_ref()
            .and_then(|cache| cache.lock().unwrap().get(key).cloned())
    }

    fn shared_put(&self, key: &[u8], value: &BiPoly) {
        if let Some(cache) = &self.shared {
            cache.lock().unwrap().insert(key.to_vec(), value.clone());
        }
    }
}

struct EvalAlgebra {
    x: Rational,
    y: Rational,
}

impl Algebra for EvalAlgebra {
    type Value = Rational;

    fn terminal(&self, bridges: u32, loops: u32) -> Rational {
        rational_pow(&self.x, bridges) * rational_pow(&self.y, loops)
    }

    fn add(&self, del: Rational, con: &Rational) -> Rational {
        del + con
    }

    fn mul(&self, acc: Rational, factor: &Rational) -> Rational {
        acc * factor
    }
}

fn rational_pow(base: &Rational, exp: u32) -> Rational {
    let mut out = Rational::one();
    for _ in 0..exp {
        out *= base;
    }
    out
}

/// The Tutte polynomial of g with the default engine.
pub fn tutte(g: &MultiGraph) -> BiPoly {
    Engine::new().tutte(g)
}

/// T(g; x, y) with the default engine.
pub fn tutte_eval(g: &MultiGraph, x: &Rational, y: &Rational) -> Rational {
    Engine::new().tutte_eval(g, x, y)
}

/// The recipe-theorem evaluation a^{|E|−r} b^{r} T(g; x0/b, y0/a), defined
/// for every a and b including zero.
///
/// Expanding T by coefficients clears both denominators:
///   a^{|E|−r} b^{r} Σ t_ij (x0/b)^i (y0/a)^j
///     = Σ t_ij x0^i b^{r−i} y0^j a^{(|E|−r)−j},
/// and both exponents are non-negative because t_ij = 0 whenever i exceeds
/// the rank or j exceeds the nullity. Nothing is ever divided, so a = 0 or
/// b = 0 evaluates exactly (with 0^0 = 1), matching the convention of
/// cancelling before substituting into the rank–nullity expansion.
pub fn tg_invariant_eval(
    g: &MultiGraph,
    a: &Rational,
    b: &Rational,
    x0: &Rational,
    y0: &Rational,
) -> Rational {
    let t = tutte(g);
    let rank = g.rank() as u32;
    let nullity = g.nullity() as u32;
    let mut out = Rational::zero();
    for (i, j, coeff) in t.terms() {
        debug_assert!(i <= rank && j <= nullity);
        let term = rational_pow(x0, i)
            * rational_pow(b, rank - i)
            * rational_pow(y0, j)
            * rational_pow(a, nullity - j);
        out += Rational::from(coeff) * term;
    }
    out
}

/// Memoization key for g under the chosen mode. Keys from different modes
/// are never mixed by the engine (each engine instance keys uniformly).
pub fn canonical_key(g: &MultiGraph, mode: KeyMode) -> Vec<u8> {
    match mode {
        KeyMode::Fast => fast_key(g),
        KeyMode::Strong => strong_key(g),
    }
}

fn serialize(vertex_count: usize, mut edges: Vec<(usize, usize)>) -> Vec<u8> {
    edges.sort_unstable();
    let mut out = Vec::with_capacity(4 + edges.len() * 8);
    out.extend((vertex_count as u32).to_le_bytes());
    for (u, v) in edges {
        out.extend((u as u32).to_le_bytes());
        out.extend((v as u32).to_le_bytes());
    }
    out
}

fn relabeled_edges(g: &MultiGraph, label: &[usize]) -> Vec<(usize, usize)> {
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (label[u], label[v]);
            (a.min(b), a.max(b))
        })
        .collect()
}

/// Deterministic relabeling by degree-sorted BFS: roots and neighbors are
/// visited highest-degree first (input label as tie-break), and vertices
/// are renamed in visit order.
fn fast_key(g: &MultiGraph) -> Vec<u8> {
    let n = g.vertex_count();
    let degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let by_degree = |v: &usize| (usize::MAX - degree[*v], *v);
    let mut roots: Vec<usize> = (0..n).collect();
    roots.sort_by_key(by_degree);

    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    let mut queue = VecDeque::new();
    let mut neighbors = Vec::new();
    for &root in &roots {
        if label[root] != usize::MAX {
            continue;
        }
        label[root] = next;
        next += 1;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            neighbors.clear();
            for &(a, b) in g.edges() {
                if a == v && label[b] == usize::MAX {
                    neighbors.push(b);
                }
                if b == v && label[a] == usize::MAX {
                    neighbors.push(a);
                }
            }
            neighbors.sort_by_key(by_degree);
            neighbors.dedup();
            for &w in &neighbors {
                if label[w] == usize::MAX {
                    label[w] = next;
                    next += 1;
                    queue.push_back(w);
                }
            }
        }
    }
    serialize(n, relabeled_edges(g, &label))
}

/// Full canonical form: refine vertices into classes by iterated
/// neighborhood signatures, then take the minimum serialization over all
/// class-preserving relabelings. Classes are ordered by their (label
/// independent) signatures, so isomorphic graphs search identical orbits
/// and end on identical keys; distinct keys therefore certify
/// non-isomorphism.
fn strong_key(g: &MultiGraph) -> Vec<u8> {
    let n = g.vertex_count();
    assert!(n <= 10, "strong keys enumerate vertex permutations, capped at 10 vertices");
    if n == 0 {
        return serialize(0, Vec::new());
    }

    // Iterated refinement; a loop counts as two incidences of the vertex's
    // own color, matching the degree convention.
    let mut color: Vec<usize> = vec![0; n];
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> =
            (0..n).map(|v| (color[v], Vec::new())).collect();
        for &(u, v) in g.edges() {
            if u == v {
                sigs[u].1.push(color[u]);
                sigs[u].1.push(color[u]);
            } else {
                sigs[u].1.push(color[v]);
                sigs[v].1.push(color[u]);
            }
        }
        for (_, adj) in sigs.iter_mut() {
            adj.sort_unstable();
        }
        let mut sorted: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = (0..n)
            .map(|v| sorted.binary_search(&&sigs[v]).unwrap())
            .collect();
        if next == color {
            break;
        }
        color = next;
    }

    // Group vertices by class; class c occupies the label range starting
    // at the total size of smaller classes.
    let class_count = color.iter().max().unwrap() + 1;
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); class_count];
    for v in 0..n {
        classes[color[v]].push(v);
    }
    let mut class_start = vec![0usize; class_count];
    for c in 1..class_count {
        class_start[c] = class_start[c - 1] + classes[c - 1].len();
    }

    let mut label = vec![usize::MAX; n];
    let mut best: Option<Vec<u8>> = None;
    permute_classes(g, &classes, &class_start, 0, &mut label, &mut best);
    best.unwrap()
}

fn permute_classes(
    g: &MultiGraph,
    classes: &[Vec<usize>],
    class_start: &[usize],
    class: usize,
    label: &mut Vec<usize>,
    best: &mut Option<Vec<u8>>,
) {
    if class == classes.len() {
        let key = serialize(g.vertex_count(), relabeled_edges(g, label));
        if best.as_ref().is_none_or(|b| key < *b) {
            *best = Some(key);
        }
        return;
    }
    // All assignments of this class's vertices to its label range.
    let members = &classes[class];
    let start = class_start[class];
    let mut slots: Vec<usize> = (0..members.len()).collect();
    permute_slots(&mut slots, 0, &mut |perm| {
        for (i, &slot) in perm.iter().enumerate() {
            label[members[i]] = start + slot;
        }
        permute_classes(g, classes, class_start, class + 1, label, best);
    });
}

fn permute_slots(slots: &mut Vec<usize>, at: usize, visit: &mut impl FnMut(&[usize])) {
    if at == slots.len() {
        visit(slots);
        return;
    }
    for i in at..slots.len() {
        slots.swap(at, i);
        permute_slots(slots, at + 1, visit);
        slots.swap(at, i);
    }
}
