//! Classical evaluations of the Tutte polynomial, each one backed by a
//! second, independent route so the algebra can be cross-examined: the
//! chromatic polynomial against its subset expansion and against brute
//! color counting, the bad-coloring polynomial against its Tutte form,
//! reliability against its recurrence, and so on. Identity checks
//! (convolution, duality, the chromatic convolution) return whether the
//! identity held so callers can report counterexamples.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::engine::{self, new_shared_cache, Engine};
use crate::graph::{Dsu, MultiGraph};
use crate::poly::{binomial, BiPoly, Line, UniPoly, Var};
use crate::{Budget, Error, Result};

/// The chromatic polynomial, computed through the Tutte polynomial as
/// (-1)^rank lambda^components T(1 - lambda, 0).
pub fn chromatic_polynomial(g: &MultiGraph) -> UniPoly {
    let at_y0 = engine::tutte(g).substitute_line(&Line::Y(BigInt::zero()));
    let one_minus_lambda = UniPoly::from_coeffs(vec![BigInt::one(), -BigInt::one()]);
    let mut chi = at_y0
        .compose(&one_minus_lambda)
        .mul(&UniPoly::monomial(g.components(), BigInt::one()));
    if g.rank() % 2 == 1 {
        chi = chi.neg();
    }
    chi
}

/// The chromatic polynomial by the inclusion-exclusion subset expansion
/// sum over A of (-1)^|A| lambda^{components(A)}, with no Tutte machinery
/// involved.
pub fn chromatic_via_subsets(g: &MultiGraph, budget: &Budget) -> Result<UniPoly> {
    let total = budget.admit_subsets(g.edge_count(), "chromatic subset expansion")?;
    let mut coeffs = vec![BigInt::zero(); g.vertex_count() + 1];
    for sub in 0..total {
        let kappa = g.components_of(sub);
        if sub.count_ones() % 2 == 0 {
            coeffs[kappa] += 1;
        } else {
            coeffs[kappa] -= 1;
        }
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

/// Proper colorings of g with the given number of colors, by enumerating
/// every assignment. A loop makes every coloring improper.
pub fn count_proper_colorings(g: &MultiGraph, colors: u64, budget: &Budget) -> Result<u64> {
    let histogram = count_colorings_by_bad_edges(g, colors, budget)?;
    Ok(histogram[0])
}

/// All colorings of g with the given number of colors, bucketed by how
/// many edges end up monochromatic. Slot 0 is the proper colorings; the
/// vector has edge_count + 1 slots.
pub fn count_colorings_by_bad_edges(
    g: &MultiGraph,
    colors: u64,
    budget: &Budget,
) -> Result<Vec<u64>> {
    budget.admit_colorings(colors, g.vertex_count(), "coloring census")?;
    let n = g.vertex_count();
    let mut histogram = vec![0u64; g.edge_count() + 1];
    if colors == 0 {
        if n == 0 {
            histogram[0] = 1;
        }
        return Ok(histogram);
    }
    let mut assignment = vec![0u64; n];
    'sweep: loop {
        let bad = g
            .edges()
            .iter()
            .filter(|&&(u, v)| assignment[u] == assignment[v])
            .count();
        histogram[bad] += 1;
        for digit in assignment.iter_mut() {
            *digit += 1;
            if *digit < colors {
                continue 'sweep;
            }
            *digit = 0;
        }
        return Ok(histogram);
    }
}

/// The nowhere-zero flow polynomial (-1)^nullity T(0, 1 - lambda).
pub fn flow_polynomial(g: &MultiGraph) -> UniPoly {
    let at_x0 = engine::tutte(g).substitute_line(&Line::X(BigInt::zero()));
    let one_minus_lambda = UniPoly::from_coeffs(vec![BigInt::one(), -BigInt::one()]);
    let mut flow = at_x0.compose(&one_minus_lambda);
    if g.nullity() % 2 == 1 {
        flow = flow.neg();
    }
    flow
}

/// The bad-coloring polynomial, sum over colorings of t^{monochromatic
/// edges}, by its subset expansion sum over A of (t - 1)^|A|
/// lambda^{components(A)}. The color count lives in the x slot, t in y.
pub fn bad_coloring_polynomial(g: &MultiGraph, budget: &Budget) -> Result<BiPoly> {
    let total = budget.admit_subsets(g.edge_count(), "bad coloring subset expansion")?;
    let t_minus_one = BiPoly::y().sub(&BiPoly::one());
    let mut powers = vec![BiPoly::one()];
    for k in 1..=g.edge_count() {
        powers.push(powers[k - 1].mul(&t_minus_one));
    }
    let mut acc = BiPoly::zero();
    for sub in 0..total {
        let kappa = g.components_of(sub) as u32;
        acc = acc.add(&powers[sub.count_ones() as usize].mul_monomial(kappa, 0));
    }
    Ok(acc)
}

/// The bad-coloring polynomial through the Tutte polynomial. The divided
/// form lambda^kappa (t-1)^rank T((lambda+t-1)/(t-1), t) clears to
///   lambda^kappa * sum of t_ij (lambda+t-1)^i (t-1)^{rank-i} t^j,
/// which needs no division because i never exceeds the rank.
pub fn bad_coloring_via_tutte(g: &MultiGraph) -> BiPoly {
    let t = engine::tutte(g);
    let rank = g.rank() as u32;
    let lam_t_1 = BiPoly::x().add(&BiPoly::y()).sub(&BiPoly::one());
    let t_minus_one = BiPoly::y().sub(&BiPoly::one());
    let mut acc = BiPoly::zero();
    for (i, j, c) in t.terms() {
        let term = lam_t_1
            .pow(i)
            .mul(&t_minus_one.pow(rank - i))
            .mul_monomial(0, j)
            .scale(&c);
        acc = acc.add(&term);
    }
    acc.mul_monomial(g.components() as u32, 0)
}

/// The all-terminal reliability polynomial of a connected graph: the
/// probability that the edges that survive (each independently with
/// probability p) still span every vertex. With T(1, 1+y) = sum g_k y^k
/// counting spanning connected subgraphs by nullity,
///   R(p) = sum g_k p^{k + n - 1} (1-p)^{m - n + 1 - k}.
pub fn reliability_polynomial(g: &MultiGraph) -> Result<UniPoly> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.vertex_count() == 0 {
        return Ok(UniPoly::one());
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    let shift = UniPoly::from_coeffs(vec![BigInt::one(), BigInt::one()]);
    let by_nullity = engine::tutte(g)
        .substitute_line(&Line::X(BigInt::one()))
        .compose(&shift);
    let survive_not = UniPoly::from_coeffs(vec![BigInt::one(), -BigInt::one()]);
    let mut acc = UniPoly::zero();
    for k in 0..=by_nullity.degree() {
        let g_k = by_nullity.coefficient(k);
        if g_k.is_zero() {
            continue;
        }
        let term = UniPoly::monomial(n - 1 + k, g_k).mul(&survive_not.pow((m + 1 - n - k) as u32));
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// Reliability extended to disconnected graphs as the probability that
/// every component stays internally spanning-connected: the product of the
/// component reliabilities.
pub fn reliability_by_component(g: &MultiGraph) -> UniPoly {
    let mut acc = UniPoly::one();
    for keep in component_masks(g) {
        let part = g.induced_subgraph(&keep);
        acc = acc.mul(&reliability_polynomial(&part).expect("components are connected"));
    }
    acc
}

fn component_masks(g: &MultiGraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut dsu = Dsu::new(n);
    for &(u, v) in g.edges() {
        dsu.union(u, v);
    }
    let mut by_root: Vec<(usize, usize)> = (0..n).map(|v| (dsu.find(v), v)).collect();
    by_root.sort_unstable();
    let mut masks: Vec<Vec<bool>> = Vec::new();
    let mut last_root = usize::MAX;
    for (root, v) in by_root {
        if root != last_root {
            masks.push(vec![false; n]);
            last_root = root;
        }
        masks.last_mut().unwrap()[v] = true;
    }
    masks
}

/// Forest and connected-subgraph enumerators of a connected graph:
/// T(1+x, 1) = sum over forests A of x^{rank - |A|}, and
/// T(1, 1+y) = sum over spanning connected A of y^{nullity(A)}.
pub fn face_enumerators(g: &MultiGraph) -> Result<(UniPoly, UniPoly)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let t = engine::tutte(g);
    let shift = UniPoly::from_coeffs(vec![BigInt::one(), BigInt::one()]);
    let forests = t.substitute_line(&Line::Y(BigInt::one())).compose(&shift);
    let connected = t.substitute_line(&Line::X(BigInt::one())).compose(&shift);
    Ok((forests, connected))
}

/// Shelling polynomials of a connected graph: h(x) = T(x, 1) and
/// h*(y) = T(1, y).
pub fn shelling_polynomials(g: &MultiGraph) -> Result<(UniPoly, UniPoly)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let t = engine::tutte(g);
    Ok((
        t.substitute_line(&Line::Y(BigInt::one())),
        t.substitute_line(&Line::X(BigInt::one())),
    ))
}

/// The generating polynomial T(1, y) of critical sandpile configurations
/// by level, read off the Tutte polynomial rather than by toppling.
pub fn critical_config_polynomial_via_tutte(g: &MultiGraph) -> Result<UniPoly> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(engine::tutte(g).substitute_line(&Line::X(BigInt::one())))
}

/// The beta invariant (-1)^rank sum over A of (-1)^|A| rank(A). Zero for
/// graphs with a loop or more than one nontrivial chunk, one exactly for
/// series-parallel blocks.
pub fn beta_invariant(g: &MultiGraph, budget: &Budget) -> Result<BigInt> {
    let total = budget.admit_subsets(g.edge_count(), "beta invariant subset sum")?;
    let mut acc = BigInt::zero();
    for sub in 0..total {
        let rank = BigInt::from(g.rank_of(sub));
        if sub.count_ones() % 2 == 0 {
            acc += rank;
        } else {
            acc -= rank;
        }
    }
    if g.rank() % 2 == 1 {
        acc = -acc;
    }
    Ok(acc)
}

/// Whether the first `edge_count` of Brylawski's affine relations hold for
/// the coefficients t_ij: for each k below the edge count,
///   sum over i + j <= k of (-1)^j C(k-i, j) t_ij = 0.
pub fn brylawski_coefficient_check(t: &BiPoly, edge_count: usize) -> bool {
    for k in 0..edge_count {
        let mut acc = BigInt::zero();
        for i in 0..=k {
            for j in 0..=(k - i) {
                let c = t.coefficient(i as u32, j as u32);
                if c.is_zero() {
                    continue;
                }
                let weighted = c * binomial((k - i) as u64, j as u64);
                if j % 2 == 0 {
                    acc += weighted;
                } else {
                    acc -= weighted;
                }
            }
        }
        if !acc.is_zero() {
            return false;
        }
    }
    true
}

/// Whether the convolution identity
///   T(G; x, y) = sum over A of T(G/A; x, 0) * T(G restricted to A; 0, y)
/// holds for g. The restriction keeps all vertices and the edges of A; the
/// contraction collapses A edge by edge (loops vanish).
pub fn convolution_identity_check(g: &MultiGraph, budget: &Budget) -> Result<bool> {
    let total = budget.admit_subsets(g.edge_count(), "convolution identity")?;
    let engine = Engine::new().shared_cache(new_shared_cache());
    let whole = engine.tutte(g);
    let mut acc = BiPoly::zero();
    for sub in 0..total {
        let kept: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|&(e, _)| sub >> e & 1 == 1)
            .map(|(_, &ends)| ends)
            .collect();
        let restricted = MultiGraph::from_edges(g.vertex_count(), &kept)?;
        let mut contracted = g.clone();
        for e in (0..g.edge_count()).rev() {
            if sub >> e & 1 == 1 {
                contracted = contracted.contract_edge(e)?;
            }
        }
        let x_part = engine.tutte(&contracted).substitute_line(&Line::Y(BigInt::zero()));
        let y_part = engine.tutte(&restricted).substitute_line(&Line::X(BigInt::zero()));
        acc = acc.add(
            &BiPoly::from_unipoly(&x_part, Var::X).mul(&BiPoly::from_unipoly(&y_part, Var::Y)),
        );
    }
    Ok(acc == whole)
}

/// Whether the binomial-type convolution of the chromatic polynomial
///   chi(G; x + y) = sum over vertex subsets W of chi(G[W]; x) * chi(G[V-W]; y)
/// holds for g. Sweeps all 2^n induced splits.
pub fn tutte_chromatic_identity_check(g: &MultiGraph, budget: &Budget) -> Result<bool> {
    let n = g.vertex_count();
    let total = budget.admit_subsets(n, "chromatic convolution over vertex subsets")?;
    let lhs = chromatic_polynomial(g).compose_bipoly(&BiPoly::x().add(&BiPoly::y()));
    let mut rhs = BiPoly::zero();
    for sub in 0..total {
        let keep: Vec<bool> = (0..n).map(|v| sub >> v & 1 == 1).collect();
        let complement: Vec<bool> = keep.iter().map(|&b| !b).collect();
        let inside = chromatic_polynomial(&g.induced_subgraph(&keep));
        let outside = chromatic_polynomial(&g.induced_subgraph(&complement));
        rhs = rhs.add(
            &BiPoly::from_unipoly(&inside, Var::X).mul(&BiPoly::from_unipoly(&outside, Var::Y)),
        );
    }
    Ok(lhs == rhs)
}

/// Whether g_star, with edge e of g mapped to edge bijection[e] of g_star,
/// really is a dual of g: the polynomials must satisfy
/// T(G; x, y) = T(G*; y, x), every subset must obey the rank duality
///   rank*(image of A) = |A| - rank(E) + rank(E - A),
/// and spanning trees must map to complements of spanning trees. Returns
/// false on the first violated condition.
pub fn duality_check(
    g: &MultiGraph,
    g_star: &MultiGraph,
    bijection: &[usize],
    budget: &Budget,
) -> Result<bool> {
    let m = g.edge_count();
    if g_star.edge_count() != m {
        return Err(Error::EdgeCountMismatch {
            left: m,
            right: g_star.edge_count(),
        });
    }
    if bijection.len() != m {
        return Err(Error::NotAPermutation);
    }
    let mut seen = vec![false; m];
    for &image in bijection {
        if image >= m || seen[image] {
            return Err(Error::NotAPermutation);
        }
        seen[image] = true;
    }
    let total = budget.admit_subsets(m, "duality rank sweep")?;

    if engine::tutte(g) != engine::tutte(g_star).swap_vars() {
        return Ok(false);
    }

    let rank = g.rank();
    let star_rank = g_star.rank();
    let full = g.full_subset();
    for sub in 0..total {
        let mut image: u64 = 0;
        for e in 0..m {
            if sub >> e & 1 == 1 {
                image |= 1 << bijection[e];
            }
        }
        let expected =
            sub.count_ones() as i64 + g.rank_of(full ^ sub) as i64 - rank as i64;
        if g_star.rank_of(image) as i64 != expected {
            return Ok(false);
        }
        let is_tree = g.rank_of(sub) == rank && sub.count_ones() as usize == rank;
        let co_image = full ^ image;
        let co_is_tree = g_star.rank_of(co_image) == star_rank
            && co_image.count_ones() as usize == star_rank;
        if is_tree != co_is_tree {
            return Ok(false);
        }
    }
    Ok(true)
}
