mod common;

use std::collections::BTreeSet;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::Rng;

use spfd::approx::{approx_factorize, path_with_triangle, ApproxConfig, ComponentStrategy};
use spfd::fixtures;
use spfd::graph::{connected_components, induced_subgraph, Edge, Graph};
use spfd::iso::isomorphic;
use spfd::local::{
    local_pfd_with, make_subproduct, pfd, BackboneOrdering, Cover, Event, Flavor, LocalOptions,
};
use spfd::oracle::{brute_force_pfd, enumerate_connected_graphs};
use spfd::products::{
    classify_edge, same_factors, strong_product, Coordinates, EdgeClass, Factorization,
};
use spfd::skeleton::{cartesian_skeleton, classical_strong_pfd};
use spfd::thinness::{backbone, s_partition, strictly_maximal};

use common::{prime_catalog, random_thin, rng, small_primes};

fn report(id: u32, name: &str, failures: &[String], detail: &str) {
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {id} [{verdict}] {name}: {detail}");
    for f in failures.iter().take(5) {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {id} failed");
}

#[test]
fn c1_exhaustive_oracle_agreement() {
    let mut graphs: Vec<Graph> = (1..=6)
        .flat_map(|n| enumerate_connected_graphs(n).unwrap())
        .collect();
    let small = graphs.len();
    let mut seven = enumerate_connected_graphs(7).unwrap();
    seven.shuffle(&mut rng(1));
    graphs.extend(seven.into_iter().take(500));
    let mut failures = Vec::new();
    for g in &graphs {
        let oracle = brute_force_pfd(g, 7).unwrap();
        let global = classical_strong_pfd(g).unwrap();
        let local = pfd(g).unwrap();
        if !same_factors(&oracle.factors, &global.factors)
            || !same_factors(&oracle.factors, &local.factors)
        {
            failures.push(format!("{:?}", g.edges().collect::<Vec<_>>()));
        }
    }
    report(
        1,
        "exhaustive oracle agreement",
        &failures,
        &format!("{small} graphs on <= 6 vertices and 500 on 7 agree"),
    );
}

struct Instance {
    parts: Vec<Graph>,
    graph: Graph,
    coords: Coordinates,
    result: Factorization,
    cover: Cover,
}

fn product_instances() -> &'static [Instance] {
    static CELL: OnceLock<Vec<Instance>> = OnceLock::new();
    CELL.get_or_init(|| {
        let catalog = prime_catalog();
        let small = small_primes(&catalog);
        let mut r = rng(2);
        (0..300)
            .map(|i| {
                let parts: Vec<Graph> = if i % 5 == 4 {
                    (0..3)
                        .map(|_| small.choose(&mut r).unwrap().clone())
                        .collect()
                } else {
                    (0..2)
                        .map(|_| catalog.choose(&mut r).unwrap().clone())
                        .collect()
                };
                let (graph, coords) = strong_product(&parts).unwrap();
                let (result, cover) = local_pfd_with(&graph, &LocalOptions::default()).unwrap();
                Instance {
                    parts,
                    graph,
                    coords,
                    result,
                    cover,
                }
            })
            .collect()
    })
}

#[test]
fn c2_product_recovery() {
    let inst = product_instances();
    let failures: Vec<String> = inst
        .iter()
        .enumerate()
        .filter(|(_, x)| !same_factors(&x.result.factors, &x.parts) || !x.result.verify(&x.graph))
        .map(|(i, x)| {
            format!(
                "instance {i}: {} factors expected, {} found",
                x.parts.len(),
                x.result.len()
            )
        })
        .collect();
    let three = inst.iter().filter(|x| x.parts.len() == 3).count();
    report(
        2,
        "product recovery",
        &failures,
        &format!(
            "{} products ({three} with three factors) recovered exactly",
            inst.len()
        ),
    );
}

#[test]
fn c3_skeleton_law() {
    let mut r = rng(3);
    let mut failures = Vec::new();
    for i in 0..100 {
        let a = random_thin(3, 8, &mut r);
        let b = random_thin(3, 8, &mut r);
        let (g, coords) = strong_product(&[a.clone(), b.clone()]).unwrap();
        let sa = cartesian_skeleton(&a).unwrap().skeleton;
        let sb = cartesian_skeleton(&b).unwrap().skeleton;
        let want: BTreeSet<Edge> = g
            .edges()
            .filter(|&(u, v)| {
                let (x, y) = (coords.of(u), coords.of(v));
                (x[0] == y[0] && sb.has_edge(x[1], y[1]))
                    || (x[1] == y[1] && sa.has_edge(x[0], y[0]))
            })
            .collect();
        let got: BTreeSet<Edge> = cartesian_skeleton(&g).unwrap().kept.into_iter().collect();
        if got != want {
            failures.push(format!(
                "pair {i}: {} vs {} skeleton edges",
                got.len(),
                want.len()
            ));
        }
    }
    report(
        3,
        "skeleton law",
        &failures,
        "100 products of thin pairs match the product of skeletons",
    );
}

#[test]
fn c4_backbone_law() {
    let mut r = rng(4);
    let mut failures = Vec::new();
    for i in 0..300 {
        let g = random_thin(2, 14, &mut r);
        let b = backbone(&g).vertices;
        let inside = |v: usize| b.binary_search(&v).is_ok();
        let connected = !b.is_empty() && induced_subgraph(&g, &b).unwrap().0.is_connected();
        let dominating = g
            .vertices()
            .all(|v| inside(v) || g.neighbors(v).iter().any(|&w| inside(w)));
        if !connected || !dominating || b != strictly_maximal(&g) {
            failures.push(format!("graph {i}: {:?}", g.edges().collect::<Vec<_>>()));
        }
    }
    report(
        4,
        "backbone law",
        &failures,
        "300 thin graphs: connected dominating and strictly maximal",
    );
}

#[test]
fn c5_nstar_law() {
    let mut r = rng(5);
    let mut failures = Vec::new();
    for i in 0..300 {
        let g = loop {
            let g = random_thin(2, 14, &mut r);
            if g.m() > 0 {
                break g;
            }
        };
        let edges: Vec<Edge> = g.edges().collect();
        let (v, w) = edges[r.gen_range(0..edges.len())];
        let view = make_subproduct(&g, Flavor::NStar(v, w)).unwrap();
        let part = s_partition(&g, view.vertices()).unwrap();
        if !part.is_singleton(v) || !part.is_singleton(w) {
            failures.push(format!("edge {i}: ({v}, {w}) in {:?}", edges));
        }
    }
    report(
        5,
        "N* law",
        &failures,
        "300 random edges satisfy the S1-condition in N*",
    );
}

fn color_classes(cover: &Cover) -> BTreeSet<Vec<Edge>> {
    cover.coloring.classes().into_values().collect()
}

#[test]
fn c6_scenarios() {
    let mut failures = Vec::new();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            failures.push(what.to_string());
        }
    };

    let g = fixtures::continuation_works();
    let (f, cover) = local_pfd_with(&g, &LocalOptions::default()).unwrap();
    check(
        cover
            .events
            .iter()
            .any(|e| matches!(e, Event::Continuation { ok: true, .. }))
            && !cover
                .events
                .iter()
                .any(|e| matches!(e, Event::Continuation { ok: false, .. })),
        "two adjacent centers: continuation should succeed",
    );
    check(
        cover.coloring.canonical_colors().len() == 2,
        "two adjacent centers: two colors",
    );
    check(
        same_factors(&f.factors, &[Graph::path(3), Graph::path(4)]),
        "two adjacent centers: P3 and P4",
    );

    let g = fixtures::continuation_fails();
    let opts = LocalOptions {
        ordering: BackboneOrdering::Explicit(fixtures::continuation_fails_order()),
    };
    let (f, cover) = local_pfd_with(&g, &opts).unwrap();
    let failed = cover.events.iter().any(|e| {
        matches!(e, Event::Continuation { from: 3, to: 4, ok: false, failing } if failing.len() == 1)
    });
    let repaired = cover.events.iter().any(|e| {
        matches!(e, Event::Repair { parent: 3, child: 4, merged } if merged.iter().any(|m| m.len() == 3))
    });
    check(
        failed,
        "hypercube case: continuation 3 -> 4 fails on one color",
    );
    check(
        repaired,
        "hypercube case: repair merges the failing color with both parent colors",
    );
    check(
        cover.stats.repairs == 1,
        "hypercube case: exactly one repair",
    );
    check(f.is_prime(), "hypercube case: graph is prime");

    let g = fixtures::order_sensitive();
    let run = |order: Vec<usize>| {
        local_pfd_with(
            &g,
            &LocalOptions {
                ordering: BackboneOrdering::Explicit(order),
            },
        )
        .unwrap()
    };
    let (fa, ca) = run(fixtures::order_with_edge_neighborhood());
    let (fb, cb) = run(fixtures::order_with_nstar());
    check(
        ca.stats.continuation_failures == 1 && ca.stats.edge_neighborhoods == 1,
        "order independence: first order goes through an edge-neighborhood",
    );
    check(
        cb.stats.continuation_failures == 0 && cb.stats.nstar_second_loop >= 1,
        "order independence: second order needs the N* pass",
    );
    check(
        fa.len() == 2 && same_factors(&fa.factors, &fb.factors),
        "order independence: same factors",
    );
    check(
        color_classes(&ca) == color_classes(&cb),
        "order independence: same colored skeleton",
    );

    let g = fixtures::perturbed_path_product();
    let r = approx_factorize(&g, &ApproxConfig::default()).unwrap();
    let cands: Vec<Graph> = r
        .candidate_factors
        .iter()
        .map(|c| c.graph.clone())
        .collect();
    check(cands.len() == 2, "perturbed product: two colors");
    check(
        same_factors(&cands, &[Graph::path(5), path_with_triangle(7)]),
        "perturbed product: maximal components are P5 and the path with a triangle",
    );

    let g = fixtures::twisted_bundle();
    let cfg = ApproxConfig {
        strategy: ComponentStrategy::Minimal,
        ..ApproxConfig::default()
    };
    let r = approx_factorize(&g, &cfg).unwrap();
    let cands: Vec<Graph> = r
        .candidate_factors
        .iter()
        .map(|c| c.graph.clone())
        .collect();
    check(cands.len() == 2, "twisted bundle: two colors");
    check(
        same_factors(&cands, &[Graph::path(3), Graph::cycle(4)]),
        "twisted bundle: minimal components are P3 and C4",
    );

    report(
        6,
        "scenarios",
        &failures,
        "all five scenario fixtures behave as described",
    );
}

#[test]
fn c7_scaling() {
    let sizes = [10, 20, 40, 80];
    let times: Vec<Duration> = sizes
        .iter()
        .map(|&n| {
            let (g, _) = strong_product(&[Graph::path(n), Graph::path(5)]).unwrap();
            (0..9)
                .map(|_| {
                    let t = Instant::now();
                    let (f, _) = local_pfd_with(&g, &LocalOptions::default()).unwrap();
                    let el = t.elapsed();
                    assert_eq!(f.len(), 2);
                    el
                })
                .min()
                .unwrap()
        })
        .collect();
    let ratios: Vec<f64> = times
        .windows(2)
        .map(|w| w[1].as_secs_f64() / w[0].as_secs_f64())
        .collect();
    let failures: Vec<String> = ratios
        .iter()
        .zip(sizes.windows(2))
        .filter(|(&r, _)| r > 2.5)
        .map(|(r, w)| format!("{} -> {}: ratio {r:.2}", w[0], w[1]))
        .collect();
    let detail = sizes
        .iter()
        .zip(&times)
        .map(|(n, t)| format!("n={n} {:.1}ms", t.as_secs_f64() * 1e3))
        .collect::<Vec<_>>()
        .join(", ");
    let ratios = ratios
        .iter()
        .map(|r| format!("{r:.2}"))
        .collect::<Vec<_>>()
        .join("/");
    report(
        7,
        "scaling",
        &failures,
        &format!("{detail}; ratios {ratios}"),
    );
}

#[test]
fn c8_refinement() {
    let inst = product_instances();
    let mut failures = Vec::new();
    for (i, x) in inst.iter().enumerate() {
        for (c, edges) in x.cover.coloring.classes() {
            let factors: BTreeSet<Option<usize>> = edges
                .iter()
                .map(|&(u, v)| match classify_edge(&x.coords, u, v).unwrap() {
                    EdgeClass::Cartesian(k) => Some(k),
                    EdgeClass::NonCartesian(_) => None,
                })
                .collect();
            if factors.len() != 1 || factors.contains(&None) {
                failures.push(format!("instance {i}, color {c}: spans {factors:?}"));
            }
        }
        let spanning =
            connected_components(&x.graph, |u, v| x.cover.coloring.is_colored(u, v)).len() == 1;
        if !spanning {
            failures.push(format!("instance {i}: colored edges do not span"));
        }
    }
    report(
        8,
        "refinement",
        &failures,
        &format!(
            "every color class of {} colorings lies in one factor",
            inst.len()
        ),
    );
}

#[test]
fn catalog_sanity() {
    let catalog = prime_catalog();
    for g in &catalog {
        assert!(brute_force_pfd(g, 7).unwrap().is_prime());
    }
    assert!(catalog
        .iter()
        .any(|g| isomorphic(g, &Graph::cycle(5)).is_some()));
}
