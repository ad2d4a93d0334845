use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wreath_hecke::crystal::{build_crystal, crystal_vs_branching, integral_scalars, nodes_by_depth, PartitionTensor};
use wreath_hecke::cyclotomic::{build_cyclo, CycloWeight};
use wreath_hecke::groups::FiniteGroup;
use wreath_hecke::partition::p_regular_partitions;
use wreath_hecke::repmod::ef::{adjointness_dims, as_cyclotomic};
use wreath_hecke::repmod::meataxe::cross_check_simples;
use wreath_hecke::repmod::wreath_modules::{simple_modules, RepContext};
use wreath_hecke::repmod::MatrixModule;
use wreath_hecke::wreath::{p_regular_type_count, WreathGroup};

fn ctx(g: FiniteGroup, p: u32) -> RepContext {
    RepContext::new(Arc::new(g), p).unwrap()
}

#[test]
fn meataxe_finds_exactly_the_constructed_simples() {
    let cases = [
        (FiniteGroup::cyclic(2).unwrap(), 5, 2),
        (FiniteGroup::symmetric(3).unwrap(), 5, 1),
        (FiniteGroup::cyclic(3).unwrap(), 2, 2),
        (FiniteGroup::trivial(), 2, 4),
    ];
    for (g, p, n) in cases {
        let c = ctx(g, p);
        let simples: Vec<MatrixModule> = simple_modules(&c, n).unwrap().into_iter().map(|(_, m)| m).collect();
        assert_eq!(simples.len(), p_regular_type_count(&c.group, p, n));
        let report = cross_check_simples(&c, n, &simples, &mut ChaCha8Rng::seed_from_u64(5)).unwrap();
        assert!(report.all_passed(), "{} p={p} n={n}: {:?}", c.group.name(), report.failures());
    }
}

#[test]
fn e_and_f_are_adjoint_on_simples_of_c3() {
    let c = ctx(FiniteGroup::cyclic(3).unwrap(), 2);
    let wg = WreathGroup::new(c.group.clone(), 2).unwrap();
    let alg = build_cyclo(wg, c.field.clone(), &CycloWeight::fundamental(0)).unwrap();
    let small: Vec<MatrixModule> = simple_modules(&c, 1).unwrap().into_iter().map(|(_, m)| as_cyclotomic(&c, &m)).collect();
    let big: Vec<MatrixModule> = simple_modules(&c, 2).unwrap().into_iter().map(|(_, m)| as_cyclotomic(&c, &m)).collect();
    let mut nonzero = 0;
    for m in &big {
        for nmod in &small {
            for i in 0..2 {
                for k in 0..c.r() {
                    let (l, r) = adjointness_dims(&c, &alg, nmod, m, i, k).unwrap();
                    assert_eq!(l, r, "i={i} k={k}");
                    nonzero += l;
                }
            }
        }
    }
    assert!(nonzero > 0);
}

#[test]
fn module_json_round_trip() {
    let c = ctx(FiniteGroup::symmetric(3).unwrap(), 5);
    for (_, m) in simple_modules(&c, 2).unwrap() {
        let text = serde_json::to_string(&m.to_json(&c.field)).unwrap();
        let (f, back) = MatrixModule::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(f.order(), c.field.order());
        assert_eq!(back, m);
    }
}

#[test]
fn level_one_crystal_counts_p_regular_partitions() {
    for p in [2, 3, 5] {
        let layers = nodes_by_depth(&PartitionTensor::level_one(p, 0), 8);
        for (n, layer) in layers.iter().enumerate() {
            assert_eq!(layer.len(), p_regular_partitions(n, p).len());
        }
    }
}

#[test]
fn twisted_crystal_layers_count_simple_modules() {
    let c = ctx(FiniteGroup::symmetric(3).unwrap(), 5);
    let graph = build_crystal(&CycloWeight::fundamental(0), &integral_scalars(&c).unwrap(), 5, 3).unwrap();
    for (n, layer) in graph.layers.iter().enumerate() {
        assert_eq!(layer.len(), p_regular_type_count(&c.group, 5, n), "n = {n}");
    }
}

#[test]
fn branching_matches_crystal_for_c3() {
    let report = crystal_vs_branching(&ctx(FiniteGroup::cyclic(3).unwrap(), 2), 2).unwrap();
    assert!(report.all_passed(), "{:?}", report.failures());
}
