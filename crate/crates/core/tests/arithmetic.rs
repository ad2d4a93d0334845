use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wreath_hecke::groups::{FiniteGroup, GroupSpec};
use wreath_hecke::hecke::{HeckeAlgebra, TermJson};
use wreath_hecke::partition::p_regular_partitions;
use wreath_hecke::perm::Perm;
use wreath_hecke::wreath::WreathGroup;
use wreath_hecke::{Field, FieldSpec};

fn prime() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 5, 7, 11, 13])
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Perm::from_vec(v.into_iter().map(|x| x as u8).collect()).unwrap())
}

fn inversions(w: &Perm) -> usize {
    let v = w.one_line();
    (0..v.len()).flat_map(|i| (i + 1..v.len()).map(move |j| (i, j))).filter(|&(i, j)| v[i] > v[j]).count()
}

proptest! {
    #[test]
    fn prime_field_matches_integers(p in prime(), a in 0i64..1000, b in 0i64..1000) {
        let f = Field::prime(p).unwrap();
        let (x, y) = (f.embed_int(a), f.embed_int(b));
        let m = p as i64;
        prop_assert_eq!(f.as_int(f.add(x, y)), Some(((a + b) % m) as u32));
        prop_assert_eq!(f.as_int(f.mul(x, y)), Some((a * b % m) as u32));
        prop_assert_eq!(f.as_int(f.sub(x, y)), Some((a - b).rem_euclid(m) as u32));
        if b % m != 0 {
            prop_assert_eq!(f.mul(f.div(x, y).unwrap(), y), x);
        }
    }

    #[test]
    fn extension_field_axioms(p in prime(), m in 1u32..4, seed in any::<u64>()) {
        prop_assume!((p as u64).pow(m) <= 2197);
        let f = Field::new(&FieldSpec { p, m, modulus: None }).unwrap();
        let all: Vec<_> = f.elements().collect();
        prop_assert_eq!(all.len() as u64, (p as u64).pow(m));
        let pick = |k: u64| all[(seed.rotate_left(k as u32 * 13) % all.len() as u64) as usize];
        let (a, b, c) = (pick(1), pick(2), pick(3));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.pow(a, f.order() as u64), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        }
        prop_assert_eq!(f.from_coeffs(&f.coeffs(a)).unwrap(), a);
    }

    #[test]
    fn permutation_words(w in perm(6), v in perm(6)) {
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), inversions(&w));
        let rebuilt = word.iter().rev().fold(Perm::identity(6), |acc, &i| Perm::simple(6, i).compose(&acc));
        prop_assert_eq!(&rebuilt, &w);
        prop_assert_eq!(w.compose(&v).inverse(), v.inverse().compose(&w.inverse()));
        prop_assert_eq!(Perm::unrank(6, w.rank()), w);
    }

    #[test]
    fn hecke_json_round_trip_and_bilinearity(seed in any::<u64>(), n in 1usize..=3, p in prop::sample::select(vec![2u32, 3, 5])) {
        let wg = WreathGroup::new(Arc::new(FiniteGroup::cyclic(2).unwrap()), n).unwrap();
        let h = HeckeAlgebra::new(wg, Field::prime(p).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = h.random_element(&mut rng, 3, 2);
        let b = h.random_element(&mut rng, 3, 2);
        let c = h.random_element(&mut rng, 3, 2);
        let text = serde_json::to_string(&h.to_json(&a)).unwrap();
        let back: Vec<TermJson> = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(h.from_json(&back).unwrap(), a.clone());
        prop_assert_eq!(h.mul(&a, &h.add(&b, &c)), h.add(&h.mul(&a, &b), &h.mul(&a, &c)));
        prop_assert_eq!(h.mul(&h.one(), &a), a.clone());
    }
}

#[test]
fn group_specs_round_trip() {
    for text in ["trivial", "cyclic:4", "dihedral:3", "symmetric:3"] {
        let spec: GroupSpec = text.parse().unwrap();
        assert_eq!(spec.to_string(), text);
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json.parse::<GroupSpec>().unwrap(), spec);
    }
    let table: GroupSpec = r#"{"kind":"table","table":[[0,1],[1,0]]}"#.parse().unwrap();
    assert_eq!(FiniteGroup::build(&table).unwrap().order(), 2);
    assert!("cyclic:x".parse::<GroupSpec>().is_err());
}

#[test]
fn p_regular_partitions_against_distinct_parts() {
    // For p = 2 these are partitions into distinct parts, counted by Euler's product.
    let mut distinct = [0usize; 16];
    distinct[0] = 1;
    for part in 1..16 {
        for k in (part..16).rev() {
            distinct[k] += distinct[k - part];
        }
    }
    for (n, &d) in distinct.iter().enumerate() {
        assert_eq!(p_regular_partitions(n, 2).len(), d, "n = {n}");
    }
}
