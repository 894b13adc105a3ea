//! Acceptance suite: one test per advertised guarantee of the crate, each
//! printing a single pass line (visible with `--nocapture`). The exhaustive
//! sweeps run over every connected multigraph with at most 5 vertices and
//! 7 edges, 53 886 graphs in all.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use tutte::catalog;
use tutte::matrix_tree;
use tutte::oracles;
use tutte::poly::Line;
use tutte::sandpile::{Sandpile, SandpileConfig};
use tutte::specializations;
use tutte::{BiPoly, Budget, Rational};

const MAX_VERTICES: usize = 5;
const MAX_EDGES: usize = 7;
const CATALOG_SIZE: u64 = 53_886;

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn rat(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

fn eval_int(t: &BiPoly, x: i64, y: i64) -> BigInt {
    t.eval(&rat(x), &rat(y)).to_integer()
}

#[test]
fn criterion_01_worked_example_polynomial() {
    let g = catalog::k4_minus_edge();
    let warm = tutte::tutte(&g);
    assert_eq!(warm.to_string(), "x^3 + 2*x^2 + x + 2*x*y + y + y^2");

    let start = Instant::now();
    let t = tutte::tutte(&g);
    let elapsed = start.elapsed();
    assert_eq!(t, warm);
    assert!(elapsed < Duration::from_millis(1), "took {elapsed:?}");
    println!("criterion 1: pass (K4 minus an edge in {elapsed:?})");
}

#[test]
fn criterion_02_three_definitions_agree_exhaustively() {
    let budget = Budget::default();
    let start = Instant::now();
    let mut graphs = 0u64;
    let mut rng = ChaCha12Rng::seed_from_u64(2);
    catalog::for_each_connected(MAX_VERTICES, MAX_EDGES, |g| {
        graphs += 1;
        let t = tutte::tutte(g);
        let by_subsets = oracles::tutte_rank_nullity(g, &budget).unwrap();
        assert_eq!(t, by_subsets, "rank-nullity mismatch on\n{}", g.to_text());
        let mut order: Vec<usize> = (0..g.edge_count()).collect();
        for _ in 0..10 {
            order.shuffle(&mut rng);
            let by_activities = oracles::tutte_activities(g, &order, &budget).unwrap();
            assert_eq!(
                t,
                by_activities,
                "activities mismatch with order {order:?} on\n{}",
                g.to_text()
            );
        }
    });
    let elapsed = start.elapsed();
    assert_eq!(graphs, CATALOG_SIZE);
    assert!(elapsed < Duration::from_secs(300), "suite took {elapsed:?}");
    println!("criterion 2: pass ({graphs} graphs, 10 edge orders each, {elapsed:?})");
}

#[test]
fn criterion_03_evaluations_count_combinatorial_objects() {
    let budget = Budget::default();
    let mut graphs = 0u64;
    catalog::for_each_connected(MAX_VERTICES, MAX_EDGES, |g| {
        graphs += 1;
        let t = tutte::tutte(g);
        let check = |name: &str, value: BigInt, counted: u64| {
            assert_eq!(
                value,
                BigInt::from(counted),
                "{name} mismatch on\n{}",
                g.to_text()
            );
        };
        check(
            "T(1,1) vs spanning trees",
            eval_int(&t, 1, 1),
            oracles::count_spanning_trees(g, &budget).unwrap(),
        );
        check(
            "T(2,1) vs spanning forests",
            eval_int(&t, 2, 1),
            oracles::count_spanning_forests(g, &budget).unwrap(),
        );
        check(
            "T(1,2) vs spanning connected subgraphs",
            eval_int(&t, 1, 2),
            oracles::count_spanning_connected(g, &budget).unwrap(),
        );
        check(
            "T(2,2) vs edge subsets",
            eval_int(&t, 2, 2),
            oracles::count_subsets(g, &budget).unwrap(),
        );
        check(
            "T(2,0) vs acyclic orientations",
            eval_int(&t, 2, 0),
            oracles::count_acyclic_orientations(g, &budget).unwrap(),
        );
        check(
            "T(0,2) vs totally cyclic orientations",
            eval_int(&t, 0, 2),
            oracles::count_totally_cyclic(g, &budget).unwrap(),
        );
        let at_one_zero = eval_int(&t, 1, 0);
        for source in 0..g.vertex_count() {
            check(
                "T(1,0) vs unique-source acyclic orientations",
                at_one_zero.clone(),
                oracles::count_acyclic_unique_source(g, source, &budget).unwrap(),
            );
        }
    });
    assert_eq!(graphs, CATALOG_SIZE);
    println!("criterion 3: pass (seven interpretations on {graphs} graphs)");
}

#[test]
fn criterion_04_matrix_tree_every_cofactor() {
    let mut graphs = 0u64;
    catalog::for_each_connected(MAX_VERTICES, MAX_EDGES, |g| {
        graphs += 1;
        let expected = eval_int(&tutte::tutte(g), 1, 1);
        for drop in 0..g.vertex_count() {
            let det = matrix_tree::spanning_tree_count_via(g, drop).unwrap();
            assert_eq!(
                det,
                expected,
                "cofactor {drop} disagrees with T(1,1) on\n{}",
                g.to_text()
            );
        }
    });
    assert_eq!(graphs, CATALOG_SIZE);
    println!("criterion 4: pass (all cofactors on {graphs} graphs)");
}

#[test]
fn criterion_05_bicycle_theorem() {
    let mut graphs = 0u64;
    catalog::for_each_connected(MAX_VERTICES, MAX_EDGES, |g| {
        graphs += 1;
        let t = tutte::tutte(g);
        let dim = oracles::bicycle_dimension(g);
        let mut expected = big(-2).pow(dim as u32);
        if g.edge_count() % 2 == 1 {
            expected = -expected;
        }
        assert_eq!(
            t.eval(&rat(-1), &rat(-1)),
            Rational::from(expected),
            "bicycle dimension {dim} disagrees with T(-1,-1) on\n{}",
            g.to_text()
        );
    });
    assert_eq!(graphs, CATALOG_SIZE);
    println!("criterion 5: pass (bicycle space dimension on {graphs} graphs)");
}

#[test]
fn criterion_06_flow_counts_and_ice() {
    let budget = Budget::default();
    let mut graphs = 0u64;
    catalog::for_each_connected(MAX_VERTICES, MAX_EDGES, |g| {
        graphs += 1;
        let flow = specializations::flow_polynomial(g);
        for k in 1..=4u64 {
            let counted = oracles::count_nowhere_zero_flows(g, k, &budget).unwrap();
            assert_eq!(
                flow.eval(&rat(k as i64)),
                Rational::from(BigInt::from(counted)),
                "nowhere-zero flow count for k={k} mismatches on\n{}",
                g.to_text()
            );
        }
    });
    assert_eq!(graphs, CATALOG_SIZE);

    let four_regular = [
        catalog::doubled_cycle(1),
        catalog::dipole(4),
        catalog::doubled_cycle(3),
        catalog::k5(),
        catalog::octahedron(),
    ];
    for g in &four_regular {
        let ice = oracles::count_ice_configurations(g, &budget).unwrap();
        let t = tutte::tutte(g);
        let mut expected = t.eval(&rat(0), &rat(-2));
        if (g.edge_count() - g.rank()) % 2 == 1 {
            expected = -expected;
        }
        assert_eq!(
            expected,
            Rational::from(BigInt::from(ice.configurations)),
            "ice count mismatches on\n{}",
            g.to_text()
        );
    }
    println!(
        "criterion 6: pass (flows k=1..4 on {graphs} graphs, ice on {} 4-regular graphs)",
        four_regular.len()
    );
}

#[test]
fn criterion_07_sandpile_levels_match_the_polynomial() {
    let budget = Budget::default();
    let mut graphs = 0u64;
    catalog::for_each_connected(MAX_VERTICES, MAX_EDGES, |g| {
        graphs += 1;
        let t = tutte::tutte(g);
        let expected = t.substitute_line(&Line::X(big(1)));
        let nullity = (g.edge_count() - g.rank()) as i64;
        for sink in 0..g.vertex_count() {
            let pile = Sandpile::new(g.clone(), sink).unwrap();
            let configs = pile.recurrent_configs(&budget).unwrap();
            for config in &configs {
                let level = pile.level(config);
                assert!(
                    (0..=nullity).contains(&level),
                    "level {level} outside 0..={nullity} with sink {sink} on\n{}",
                    g.to_text()
                );
            }
            assert_eq!(
                pile.critical_config_polynomial(&budget).unwrap(),
                expected,
                "level polynomial with sink {sink} disagrees with T(1,y) on\n{}",
                g.to_text()
            );
        }

        // Abelian property: one overloaded configuration, ten random
        // toppling policies, all landing on the canonical stabilization.
        let pile = Sandpile::new(g.clone(), 0).unwrap();
        if pile.site_count() > 0 {
            let mut heights = pile.max_stable().heights;
            for h in &mut heights {
                *h += 2;
            }
            let config = SandpileConfig::new(heights);
            let reference = pile.stabilize(&config);
            for round in 0..10u64 {
                let mut rng = ChaCha12Rng::seed_from_u64(graphs * 16 + round);
                let settled = pile.stabilize_with(&config, |unstable| {
                    rng.random_range(0..unstable.len())
                });
                assert_eq!(
                    settled,
                    reference,
                    "toppling order changed the stabilization on\n{}",
                    g.to_text()
                );
            }
        }
    });
    assert_eq!(graphs, CATALOG_SIZE);
    println!("criterion 7: pass (every sink on {graphs} graphs, 10 toppling orders each)");
}

#[test]
fn criterion_08_coefficient_identities() {
    let budget = Budget::default();
    let mut graphs = 0u64;
    catalog::for_each_connected(MAX_VERTICES, MAX_EDGES, |g| {
        graphs += 1;
        let t = tutte::tutte(g);
        let m = g.edge_count();

        assert!(
            specializations::brylawski_coefficient_check(&t, m),
            "coefficient relation fails on\n{}",
            g.to_text()
        );
        assert!(
            specializations::convolution_identity_check(g, &budget).unwrap(),
            "convolution identity fails on\n{}",
            g.to_text()
        );
        assert!(
            specializations::tutte_chromatic_identity_check(g, &budget).unwrap(),
            "chromatic convolution identity fails on\n{}",
            g.to_text()
        );

        if m >= 2 {
            let beta = specializations::beta_invariant(g, &budget).unwrap();
            assert_eq!(beta, t.coefficient(1, 0), "beta vs t10 on\n{}", g.to_text());
            assert_eq!(beta, t.coefficient(0, 1), "beta vs t01 on\n{}", g.to_text());
        }

        // Slope of the chromatic polynomial at 1 reads off t10 with an
        // alternating sign in the rank. Needs an edge: for the edgeless
        // graph the slope comes from the component factor instead.
        if m >= 1 {
            let chromatic = specializations::chromatic_polynomial(g);
            let mut slope = BigInt::from(0);
            for (k, c) in chromatic.coeffs().iter().enumerate() {
                slope += c * BigInt::from(k as u64);
            }
            let mut expected = t.coefficient(1, 0);
            if g.rank() % 2 == 0 {
                expected = -expected;
            }
            assert_eq!(slope, expected, "chromatic slope at 1 on\n{}", g.to_text());
        }

        let order: Vec<usize> = (0..m).collect();

        // Orientation activity counts refine every coefficient.
        let orientations = oracles::orientation_activities(g, &order, &budget).unwrap();
        let mut observed: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for ((i, j), count) in orientations {
            if count != 0 {
                observed.insert((i, j), BigInt::from(count));
            }
        }
        let mut refined: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for (i, j, c) in t.terms() {
            refined.insert((i, j), c << (i + j));
        }
        assert_eq!(observed, refined, "orientation refinement on\n{}", g.to_text());

        // Derivatives through the activity expansion, orders 0..=2 each.
        let table = oracles::derivative_table_via_activities(g, &order, 2, 2, &budget).unwrap();
        for ((p, q), poly) in &table {
            assert_eq!(
                *poly,
                t.partial_derivative(*p, *q),
                "derivative ({p},{q}) on\n{}",
                g.to_text()
            );
        }
    });
    assert_eq!(graphs, CATALOG_SIZE);
    println!("criterion 8: pass (identity bundle on {graphs} graphs)");
}

#[test]
fn criterion_09_duality() {
    let budget = Budget::default();
    let pairs = catalog::dual_pairs();
    for (g, g_star, bijection) in &pairs {
        let t = tutte::tutte(g);
        let t_star = tutte::tutte(g_star);
        assert_eq!(
            t,
            t_star.swap_vars(),
            "polynomial duality fails between\n{}and\n{}",
            g.to_text(),
            g_star.to_text()
        );
        assert!(
            specializations::duality_check(g, g_star, bijection, &budget).unwrap(),
            "rank duality fails between\n{}and\n{}",
            g.to_text(),
            g_star.to_text()
        );
    }
    println!("criterion 9: pass ({} dual pairs, rank duality on all subsets)", pairs.len());
}

#[test]
fn criterion_10_series_parallel_beta() {
    let budget = Budget::default();
    for seed in 0..50u64 {
        let extra = (seed as usize) % 11;
        let g = catalog::series_parallel(seed, extra);
        assert!(g.edge_count() <= 12);
        let beta = specializations::beta_invariant(&g, &budget).unwrap();
        assert!(
            beta.is_one(),
            "series-parallel graph with beta {beta} from seed {seed}:\n{}",
            g.to_text()
        );
    }
    let k4 = specializations::beta_invariant(&catalog::k4(), &budget).unwrap();
    assert_eq!(k4, big(2));
    println!("criterion 10: pass (50 series-parallel graphs, K4 control)");
}
