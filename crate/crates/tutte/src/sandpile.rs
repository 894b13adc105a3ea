//! Abelian sandpile (chip-firing) dynamics on a connected multigraph with
//! a designated sink.
//!
//! Heights live on the non-sink vertices, listed in ascending vertex
//! order. A vertex may topple once its height reaches its degree, loops
//! included: a loop raises the threshold by two but hands both grains
//! straight back, so it delays toppling without bleeding grains anywhere.
//! The sink absorbs silently and never topples, which is what guarantees
//! every avalanche halts.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;

use crate::graph::MultiGraph;
use crate::poly::UniPoly;
use crate::{Budget, Error, Result};

/// Heights on the non-sink vertices of a [`Sandpile`], ascending vertex
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SandpileConfig {
    pub heights: Vec<u64>,
}

impl SandpileConfig {
    pub fn new(heights: Vec<u64>) -> Self {
        SandpileConfig { heights }
    }
}

/// A sandpile host: the graph, the sink, and the precomputed incidence
/// data toppling needs.
#[derive(Debug, Clone)]
pub struct Sandpile {
    graph: MultiGraph,
    sink: usize,
    /// Non-sink vertices, ascending; config slot i belongs to sites[i].
    sites: Vec<usize>,
    /// Graph vertex to config slot; usize::MAX marks the sink.
    slot_of: Vec<usize>,
    /// Toppling threshold per graph vertex: the degree, loops twice.
    threshold: Vec<u64>,
    /// Grains each vertex hands to each non-sink neighbor slot when it
    /// topples (loops omitted; they return home and cancel).
    payout: Vec<Vec<(usize, u64)>>,
}

impl Sandpile {
    pub fn new(graph: MultiGraph, sink: usize) -> Result<Self> {
        if sink >= graph.vertex_count() {
            return Err(Error::UnknownVertex(sink));
        }
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = graph.vertex_count();
        let sites: Vec<usize> = (0..n).filter(|&v| v != sink).collect();
        let mut slot_of = vec![usize::MAX; n];
        for (slot, &v) in sites.iter().enumerate() {
            slot_of[v] = slot;
        }
        let threshold: Vec<u64> = (0..n).map(|v| graph.degree(v) as u64).collect();
        let mut payout: Vec<Vec<(usize, u64)>> = vec![Vec::new(); n];
        for v in 0..n {
            for u in 0..n {
                if u == v || u == sink {
                    continue;
                }
                let mult = graph.multiplicity(v, u) as u64;
                if mult > 0 {
                    payout[v].push((slot_of[u], mult));
                }
            }
        }
        Ok(Sandpile {
            graph,
            sink,
            sites,
            slot_of,
            threshold,
            payout,
        })
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    /// Non-sink vertices in config-slot order.
    pub fn sites(&self) -> &[usize] {
        &self.sites
    }

    pub fn site_count(&self) -> usize {
        self.sites.len()
    }

    /// The all-maximal stable configuration, height degree - 1 everywhere.
    pub fn max_stable(&self) -> SandpileConfig {
        SandpileConfig::new(self.sites.iter().map(|&v| self.threshold[v] - 1).collect())
    }

    fn check_len(&self, config: &SandpileConfig) {
        assert_eq!(
            config.heights.len(),
            self.sites.len(),
            "config has the wrong number of sites for this host"
        );
    }

    /// The first vertex at or above its threshold, if any.
    fn first_unstable(&self, config: &SandpileConfig) -> Option<usize> {
        self.sites
            .iter()
            .position(|&v| config.heights[self.slot_of[v]] >= self.threshold[v])
            .map(|slot| self.sites[slot])
    }

    pub fn is_stable(&self, config: &SandpileConfig) -> bool {
        self.check_len(config);
        self.first_unstable(config).is_none()
    }

    /// Topple one vertex: it pays its degree, loops hand their two grains
    /// back, each non-loop edge carries one grain to the far end, and
    /// whatever reaches the sink vanishes.
    pub fn topple(&self, config: &SandpileConfig, vertex: usize) -> Result<SandpileConfig> {
        self.check_len(config);
        if vertex >= self.graph.vertex_count() {
            return Err(Error::UnknownVertex(vertex));
        }
        if vertex == self.sink {
            return Err(Error::SinkToppling);
        }
        let slot = self.slot_of[vertex];
        let needed = self.threshold[vertex];
        if config.heights[slot] < needed {
            return Err(Error::BelowThreshold {
                vertex,
                height: config.heights[slot],
                needed,
            });
        }
        let mut next = config.clone();
        next.heights[slot] -= needed;
        next.heights[slot] += 2 * self.graph.loops_at(vertex) as u64;
        for &(target, mult) in &self.payout[vertex] {
            next.heights[target] += mult;
        }
        Ok(next)
    }

    /// Topple until stable, always choosing the lowest-numbered unstable
    /// vertex. By the abelian property any policy lands on the same
    /// configuration.
    pub fn stabilize(&self, config: &SandpileConfig) -> SandpileConfig {
        self.stabilize_with(config, |_| 0)
    }

    /// Topple until stable with a caller-chosen policy: `choose` is handed
    /// the unstable vertices (ascending) and returns the index of the one
    /// to topple.
    pub fn stabilize_with(
        &self,
        config: &SandpileConfig,
        mut choose: impl FnMut(&[usize]) -> usize,
    ) -> SandpileConfig {
        self.check_len(config);
        let mut current = config.clone();
        let mut unstable: Vec<usize> = Vec::new();
        loop {
            unstable.clear();
            unstable.extend(
                self.sites
                    .iter()
                    .copied()
                    .filter(|&v| current.heights[self.slot_of[v]] >= self.threshold[v]),
            );
            if unstable.is_empty() {
                return current;
            }
            let pick = choose(&unstable);
            current = self.topple(&current, unstable[pick]).unwrap();
        }
    }

    fn require_stable(&self, config: &SandpileConfig) -> Result<()> {
        if let Some(vertex) = self.first_unstable(config) {
            return Err(Error::NotStable { vertex });
        }
        Ok(())
    }

    /// Dhar's burning test: drop one grain along every sink edge and
    /// stabilize; the stable input is recurrent exactly when the avalanche
    /// reproduces it.
    pub fn is_recurrent(&self, config: &SandpileConfig) -> Result<bool> {
        self.check_len(config);
        self.require_stable(config)?;
        let mut fired = config.clone();
        for &(slot, mult) in &self.payout[self.sink] {
            fired.heights[slot] += mult;
        }
        Ok(self.stabilize(&fired) == *config)
    }

    /// The definitional route: recurrent configurations are the ones the
    /// add-a-grain-and-stabilize walk keeps visiting, equivalently the
    /// closure of the maximal stable configuration under that step. Walks
    /// the whole closure, so only viable for small hosts.
    pub fn is_recurrent_by_reachability(
        &self,
        config: &SandpileConfig,
        budget: &Budget,
    ) -> Result<bool> {
        self.check_len(config);
        self.require_stable(config)?;
        budget.admit_configs(self.stable_config_count(), "recurrent-class closure")?;
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut queue = VecDeque::new();
        let start = self.max_stable();
        seen.insert(start.heights.clone());
        queue.push_back(start);
        while let Some(state) = queue.pop_front() {
            for slot in 0..self.sites.len() {
                let mut bumped = state.clone();
                bumped.heights[slot] += 1;
                let settled = self.stabilize(&bumped);
                if seen.insert(settled.heights.clone()) {
                    queue.push_back(settled);
                }
            }
        }
        Ok(seen.contains(&config.heights))
    }

    /// Grains on the board relative to the recurrent minimum:
    /// total height - |E| + degree(sink). Negative for sparse stable
    /// configurations, between 0 and the nullity on recurrent ones.
    pub fn level(&self, config: &SandpileConfig) -> i64 {
        self.check_len(config);
        let total: i128 = config.heights.iter().map(|&h| h as i128).sum();
        (total - self.graph.edge_count() as i128 + self.threshold[self.sink] as i128) as i64
    }

    fn stable_config_count(&self) -> u128 {
        self.sites
            .iter()
            .map(|&v| self.threshold[v] as u128)
            .product()
    }

    /// Every recurrent configuration, by sweeping all stable
    /// configurations through the burning test. Ascending height order.
    pub fn recurrent_configs(&self, budget: &Budget) -> Result<Vec<SandpileConfig>> {
        budget.admit_configs(self.stable_config_count(), "stable configuration sweep")?;
        let mut found = Vec::new();
        let mut heights = vec![0u64; self.sites.len()];
        'sweep: loop {
            let config = SandpileConfig::new(heights.clone());
            if self.is_recurrent(&config)? {
                found.push(config);
            }
            for (slot, h) in heights.iter_mut().enumerate() {
                *h += 1;
                if *h < self.threshold[self.sites[slot]] {
                    continue 'sweep;
                }
                *h = 0;
            }
            return Ok(found);
        }
    }

    /// The generating polynomial of recurrent configurations by level,
    /// straight from the dynamics.
    pub fn critical_config_polynomial(&self, budget: &Budget) -> Result<UniPoly> {
        let mut counts: Vec<BigInt> = vec![BigInt::from(0); self.graph.nullity() + 1];
        for config in self.recurrent_configs(budget)? {
            let level = self.level(&config);
            assert!(
                level >= 0 && (level as usize) < counts.len(),
                "recurrent level {level} out of range"
            );
            counts[level as usize] += 1;
        }
        Ok(UniPoly::from_coeffs(counts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::specializations::critical_config_polynomial_via_tutte;
    use num_traits::One;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    fn budget() -> Budget {
        Budget::unlimited()
    }

    fn host(g: MultiGraph, sink: usize) -> Sandpile {
        Sandpile::new(g, sink).unwrap()
    }

    fn cfg(heights: &[u64]) -> SandpileConfig {
        SandpileConfig::new(heights.to_vec())
    }

    #[test]
    fn construction_validates() {
        assert!(matches!(
            Sandpile::new(catalog::triangle(), 3),
            Err(Error::UnknownVertex(3))
        ));
        let split = MultiGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(Sandpile::new(split, 0), Err(Error::Disconnected)));
    }

    #[test]
    fn toppling_a_triangle_vertex() {
        let pile = host(catalog::triangle(), 0);
        let after = pile.topple(&cfg(&[2, 0]), 1).unwrap();
        assert_eq!(after, cfg(&[0, 1]));
        assert!(matches!(pile.topple(&cfg(&[2, 0]), 0), Err(Error::SinkToppling)));
        assert!(matches!(pile.topple(&cfg(&[2, 0]), 9), Err(Error::UnknownVertex(9))));
        assert!(matches!(
            pile.topple(&cfg(&[2, 0]), 2),
            Err(Error::BelowThreshold { vertex: 2, height: 0, needed: 2 })
        ));
    }

    #[test]
    fn loops_raise_the_threshold_but_return_their_grains() {
        // Triangle with a loop at vertex 1: threshold there is 4.
        let g = MultiGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0), (1, 1)]).unwrap();
        let pile = host(g, 0);
        assert!(matches!(
            pile.topple(&cfg(&[3, 0]), 1),
            Err(Error::BelowThreshold { vertex: 1, height: 3, needed: 4 })
        ));
        let after = pile.topple(&cfg(&[4, 0]), 1).unwrap();
        // Pays 4, takes 2 back from the loop, sends 1 to the sink and 1 on.
        assert_eq!(after, cfg(&[2, 1]));
    }

    #[test]
    fn stabilization_drains_into_the_sink() {
        let pile = host(catalog::triangle(), 0);
        // A tall pile on one vertex cascades until both are below 2.
        let settled = pile.stabilize(&cfg(&[5, 0]));
        assert!(pile.is_stable(&settled));
        // Grains conservation is broken only by the sink, so the total can
        // only have gone down.
        assert!(settled.heights.iter().sum::<u64>() <= 5);
    }

    #[test]
    fn stabilization_is_abelian() {
        let mut rng = ChaCha12Rng::seed_from_u64(17);
        let hosts = [
            host(catalog::triangle(), 0),
            host(catalog::k4_minus_edge(), 2),
            host(MultiGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0), (1, 1)]).unwrap(), 0),
            host(catalog::dipole(3), 1),
        ];
        for pile in &hosts {
            for _ in 0..20 {
                let start = SandpileConfig::new(
                    pile.sites()
                        .iter()
                        .map(|_| rng.random_range(0..8u64))
                        .collect(),
                );
                let canonical = pile.stabilize(&start);
                for _ in 0..10 {
                    let random_policy =
                        pile.stabilize_with(&start, |unstable| rng.random_range(0..unstable.len()));
                    assert_eq!(random_policy, canonical);
                }
            }
        }
    }

    #[test]
    fn tree_has_one_recurrent_config() {
        let star = MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let pile = host(star, 0);
        let recurrents = pile.recurrent_configs(&budget()).unwrap();
        assert_eq!(recurrents, vec![cfg(&[0, 0, 0])]);
        assert_eq!(pile.level(&recurrents[0]), 0);
        assert_eq!(pile.critical_config_polynomial(&budget()).unwrap(), UniPoly::one());
    }

    #[test]
    fn triangle_recurrents_and_levels() {
        let pile = host(catalog::triangle(), 0);
        let recurrents = pile.recurrent_configs(&budget()).unwrap();
        assert_eq!(recurrents.len(), 3);
        let mut levels: Vec<i64> = recurrents.iter().map(|c| pile.level(c)).collect();
        levels.sort_unstable();
        assert_eq!(levels, vec![0, 0, 1]);
        // The all-zero stable configuration is transient here.
        assert!(!pile.is_recurrent(&cfg(&[0, 0])).unwrap());
        assert!(matches!(
            pile.is_recurrent(&cfg(&[5, 0])),
            Err(Error::NotStable { vertex: 1 })
        ));
    }

    #[test]
    fn k4_minus_edge_level_multiset() {
        let pile = host(catalog::k4_minus_edge(), 0);
        let mut levels: Vec<i64> = pile
            .recurrent_configs(&budget())
            .unwrap()
            .iter()
            .map(|c| pile.level(c))
            .collect();
        levels.sort_unstable();
        assert_eq!(levels, vec![0, 0, 0, 0, 1, 1, 1, 2]);
    }

    #[test]
    fn max_stable_is_always_recurrent() {
        for (g, sink) in [
            (catalog::triangle(), 1),
            (catalog::k4(), 3),
            (catalog::dipole(4), 0),
            (MultiGraph::from_edges(2, &[(0, 1), (1, 1), (0, 1)]).unwrap(), 0),
        ] {
            let pile = host(g, sink);
            assert!(pile.is_recurrent(&pile.max_stable()).unwrap());
        }
    }

    #[test]
    fn single_vertex_host() {
        let g = MultiGraph::from_edges(1, &[(0, 0), (0, 0)]).unwrap();
        let pile = host(g, 0);
        assert_eq!(pile.site_count(), 0);
        let empty = cfg(&[]);
        assert!(pile.is_stable(&empty));
        assert!(pile.is_recurrent(&empty).unwrap());
        // Two loops: level = 0 - 2 + 4.
        assert_eq!(pile.level(&empty), 2);
        let p = pile.critical_config_polynomial(&budget()).unwrap();
        assert_eq!(p, UniPoly::monomial(2, BigInt::one()));
    }

    #[test]
    fn burning_test_matches_reachability() {
        catalog::for_each_connected(4, 5, |g| {
            let pile = host(g.clone(), 0);
            if pile.stable_config_count() > 64 {
                return;
            }
            let mut heights = vec![0u64; pile.site_count()];
            'sweep: loop {
                let config = SandpileConfig::new(heights.clone());
                assert_eq!(
                    pile.is_recurrent(&config).unwrap(),
                    pile.is_recurrent_by_reachability(&config, &budget()).unwrap(),
                    "{} config {:?}",
                    g.to_text(),
                    config.heights
                );
                for (slot, h) in heights.iter_mut().enumerate() {
                    *h += 1;
                    if *h < pile.graph().degree(pile.sites()[slot]) as u64 {
                        continue 'sweep;
                    }
                    *h = 0;
                }
                break;
            }
        });
    }

    #[test]
    fn recurrent_levels_stay_within_the_nullity() {
        for seed in 0..20 {
            let g = catalog::random_multigraph(seed, 4, 6);
            if !g.is_connected() || g.vertex_count() < 2 {
                continue;
            }
            let pile = host(g.clone(), 0);
            if pile.stable_config_count() > 4096 {
                continue;
            }
            for config in pile.recurrent_configs(&budget()).unwrap() {
                let level = pile.level(&config);
                assert!(level >= 0 && level <= g.nullity() as i64);
            }
        }
    }

    #[test]
    fn level_polynomial_matches_the_tutte_route_for_every_sink() {
        let mut graphs = vec![
            catalog::triangle(),
            catalog::k4_minus_edge(),
            catalog::dipole(3),
            MultiGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0), (1, 1)]).unwrap(),
            MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap(),
        ];
        for seed in 0..10 {
            let g = catalog::random_multigraph(seed + 40, 4, 6);
            if g.is_connected() && g.vertex_count() >= 2 {
                graphs.push(g);
            }
        }
        for g in &graphs {
            let expected = critical_config_polynomial_via_tutte(g).unwrap();
            for sink in 0..g.vertex_count() {
                let pile = host(g.clone(), sink);
                if pile.stable_config_count() > 1 << 16 {
                    continue;
                }
                let p = pile.critical_config_polynomial(&budget()).unwrap();
                assert_eq!(p, expected, "sink {sink} of {}", g.to_text());
            }
        }
    }

    #[test]
    fn triangle_with_loop_keeps_the_tutte_identity() {
        // Loop at a non-sink vertex: recurrents (3,0), (2,1), (3,1) with
        // levels 1, 1, 2, matching T(1, y) = 2y + y^2.
        let g = MultiGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0), (1, 1)]).unwrap();
        let pile = host(g, 0);
        let recurrents = pile.recurrent_configs(&budget()).unwrap();
        let heights: Vec<&[u64]> = recurrents.iter().map(|c| c.heights.as_slice()).collect();
        assert_eq!(heights, vec![&[3, 0][..], &[2, 1], &[3, 1]]);
        let p = pile.critical_config_polynomial(&budget()).unwrap();
        assert_eq!(
            p,
            UniPoly::from_coeffs(vec![BigInt::from(0), BigInt::from(2), BigInt::from(1)])
        );
    }

    #[test]
    fn config_budget_refusal() {
        let pile = host(catalog::k4(), 0);
        let tiny = Budget {
            max_configs: 10,
            ..Budget::default()
        };
        let err = pile.recurrent_configs(&tiny).unwrap_err();
        assert!(matches!(err, Error::Budget { .. }));
        assert!(err.to_string().contains("configurations"));
    }
}
