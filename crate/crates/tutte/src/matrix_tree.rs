//! Laplacian construction and exact cofactor determinants: the
//! polynomial-time spanning-tree count that cross-checks T(G;1,1).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::graph::MultiGraph;
use crate::{Error, Result};

/// The graph Laplacian: L[i][i] = deg(i) with loops counting twice,
/// L[i][j] = -(number of i-j edges) for i != j. Rows sum to twice the loop
/// count at the row's vertex, so loopless graphs have zero row sums.
pub fn laplacian(g: &MultiGraph) -> Vec<Vec<BigInt>> {
    let n = g.vertex_count();
    let mut l = vec![vec![BigInt::zero(); n]; n];
    for &(u, v) in g.edges() {
        if u == v {
            l[u][u] += 2;
        } else {
            l[u][u] += 1;
            l[v][v] += 1;
            l[u][v] -= 1;
            l[v][u] -= 1;
        }
    }
    l
}

/// Fraction-free (Bareiss) determinant. Every division is exact; row
/// swaps flip the sign.
fn determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Spanning-tree count as the Laplacian cofactor that deletes `drop`'s row
/// and column. All choices of `drop` agree.
///
/// The cofactor is taken over the loopless Laplacian: a loop lies in no
/// spanning tree, and leaving its +2 on the diagonal would break the
/// zero-row-sum property the cofactor theorem rests on.
pub fn spanning_tree_count_via(g: &MultiGraph, drop: usize) -> Result<BigInt> {
    let n = g.vertex_count();
    if drop >= n {
        return Err(Error::UnknownVertex(drop));
    }
    let mut l = vec![vec![BigInt::zero(); n]; n];
    for &(u, v) in g.edges() {
        if u != v {
            l[u][u] += 1;
            l[v][v] += 1;
            l[u][v] -= 1;
            l[v][u] -= 1;
        }
    }
    let minor: Vec<Vec<BigInt>> = (0..n)
        .filter(|&i| i != drop)
        .map(|i| {
            (0..n)
                .filter(|&j| j != drop)
                .map(|j| l[i][j].clone())
                .collect()
        })
        .collect();
    let det = determinant(minor);
    debug_assert!(!det.is_negative(), "Laplacian cofactors are non-negative");
    Ok(det)
}

/// Spanning-tree count of g, equal to T(g;1,1) for connected g. For
/// disconnected g the determinant vanishes and the function returns 0,
/// which differs from T(1,1) (the count of maximal spanning forests);
/// callers that accept disconnected inputs must treat 0 accordingly.
/// Graphs without vertices have the empty spanning tree, so count 1.
pub fn spanning_tree_count(g: &MultiGraph) -> BigInt {
    if g.vertex_count() == 0 {
        return BigInt::one();
    }
    spanning_tree_count_via(g, 0).unwrap()
}
