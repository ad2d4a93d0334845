//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wreath_hecke::crystal::{crystal_vs_branching, nodes_by_depth, verify_axioms, PartitionTensor};
use wreath_hecke::cyclotomic::{build_cyclo, CycloWeight};
use wreath_hecke::groups::FiniteGroup;
use wreath_hecke::hecke::center::CandidateKind;
use wreath_hecke::hecke::tscalars::{c_scalars, verify_t_action};
use wreath_hecke::hecke::HeckeAlgebra;
use wreath_hecke::perm::factorial;
use wreath_hecke::repmod::morita::{random_semisimple_module, random_young_module, verify_fg_round_trip, verify_gf_round_trip};
use wreath_hecke::repmod::wreath_modules::{compositions, simple_modules, young_tensor, RepContext};
use wreath_hecke::wreath::{
    brute_force_p_regular_classes, class_count_series, p_regular_type_count, verify_jm_identities, WreathAlgebra,
    WreathGroup,
};
use wreath_hecke::{Field, Result};

/// Outcome of one criterion: failed sub-checks and a short summary.
struct Outcome {
    failures: Vec<String>,
    summary: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome { failures: Vec::new(), summary: String::new() }
    }

    fn check(&mut self, what: impl Into<String>, ok: bool) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn report(&mut self, context: &str, r: &wreath_hecke::report::Report) {
        for f in r.failures() {
            self.failures.push(format!("{context}: {}", f.name));
        }
    }
}

fn run(number: usize, title: &str, budget: Duration, body: impl FnOnce(&mut Outcome) -> Result<()>) -> bool {
    let start = Instant::now();
    let mut out = Outcome::new();
    if let Err(e) = body(&mut out) {
        out.failures.push(format!("error: {e}"));
    }
    let elapsed = start.elapsed();
    if elapsed > budget {
        out.failures.push(format!("took {:.1}s, budget {}s", elapsed.as_secs_f64(), budget.as_secs()));
    }
    let passed = out.failures.is_empty();
    let detail = if passed {
        out.summary.clone()
    } else {
        let shown: Vec<&str> = out.failures.iter().take(3).map(String::as_str).collect();
        format!("{} failure(s): {}", out.failures.len(), shown.join("; "))
    };
    println!(
        "criterion {number:>2} {} {title} [{:.1}s] {detail}",
        if passed { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    passed
}

fn groups_of_order_at_most_six() -> Vec<FiniteGroup> {
    let mut out = vec![FiniteGroup::trivial()];
    for r in 2..=6 {
        out.push(FiniteGroup::cyclic(r).unwrap());
    }
    out.push(FiniteGroup::dihedral(2).unwrap());
    out.push(FiniteGroup::symmetric(3).unwrap());
    out
}

fn relation_groups() -> Vec<FiniteGroup> {
    vec![
        FiniteGroup::trivial(),
        FiniteGroup::cyclic(2).unwrap(),
        FiniteGroup::cyclic(3).unwrap(),
        FiniteGroup::cyclic(6).unwrap(),
        FiniteGroup::symmetric(3).unwrap(),
    ]
}

fn hecke(g: &FiniteGroup, n: usize, p: u32) -> Result<HeckeAlgebra> {
    Ok(HeckeAlgebra::new(WreathGroup::new(Arc::new(g.clone()), n)?, Field::prime(p)?))
}

fn relations(out: &mut Outcome) -> Result<()> {
    let mut points = 0;
    let mut checks = 0;
    for g in relation_groups() {
        for n in 1..=3 {
            for p in [2, 3, 5] {
                let h = hecke(&g, n, p)?;
                let r = h.verify_relations();
                checks += r.len();
                points += 1;
                out.report(&format!("{} n={n} p={p}", g.name()), &r);
            }
        }
    }
    out.summary = format!("{checks} identities over {points} parameter points");
    Ok(())
}

fn oracle(out: &mut Outcome) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut points = 0;
    let groups = [FiniteGroup::trivial(), FiniteGroup::cyclic(2).unwrap(), FiniteGroup::cyclic(3).unwrap(), FiniteGroup::symmetric(3).unwrap()];
    for g in &groups {
        for n in 1..=3 {
            for p in [2, 3, 5] {
                if g.order() == 6 && n == 3 && p != 5 {
                    continue;
                }
                let h = hecke(g, n, p)?;
                let ctx = format!("{} n={n} p={p}", g.name());
                out.report(&ctx, &h.verify_oracle(&mut rng, 200, 3, 2)?);
                out.report(&ctx, &h.verify_associativity(&mut rng, 200, 3, 2));
                points += 1;
            }
        }
    }
    out.summary = format!("200 product pairs and 200 triples at each of {points} parameter points");
    Ok(())
}

fn jucys_murphy(out: &mut Outcome) -> Result<()> {
    let mut points = 0;
    for g in groups_of_order_at_most_six() {
        for n in 1..=4 {
            for p in [2, 3, 5] {
                let alg = WreathAlgebra::new(WreathGroup::new(Arc::new(g.clone()), n)?, Field::prime(p)?);
                out.report(&format!("{} n={n} p={p}", g.name()), &verify_jm_identities(&alg)?);
                points += 1;
            }
        }
    }
    out.summary = format!("{points} parameter points, |G| ≤ 6, including p dividing |G|");
    Ok(())
}

fn class_counts(out: &mut Outcome) -> Result<()> {
    let groups = [FiniteGroup::cyclic(2).unwrap(), FiniteGroup::cyclic(3).unwrap(), FiniteGroup::symmetric(3).unwrap()];
    let mut compared = 0;
    for g in &groups {
        for p in [2, 3, 5] {
            let series = class_count_series(g, p, 8);
            for n in 1..=8 {
                let types = p_regular_type_count(g, p, n);
                out.check(format!("{} p={p} n={n}: types vs series", g.name()), types as u128 == series[n]);
                if n <= 4 {
                    let wg = WreathGroup::new(Arc::new(g.clone()), n)?;
                    let brute = brute_force_p_regular_classes(&wg, p);
                    out.check(format!("{} p={p} n={n}: brute force {brute} vs types {types}", g.name()), brute == types);
                }
                compared += 1;
            }
        }
    }
    out.summary = format!("{compared} (G, p, n) points, brute force for n ≤ 4");
    Ok(())
}

fn center(out: &mut Outcome) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let groups = [FiniteGroup::trivial(), FiniteGroup::cyclic(2).unwrap(), FiniteGroup::cyclic(3).unwrap(), FiniteGroup::symmetric(3).unwrap()];
    let mut candidates = 0;
    let mut central = 0;
    for g in &groups {
        for n in 1..=3 {
            let h = hecke(g, n, 5)?;
            let tag = format!("{} n={n}", g.name());
            for k in 1..=2.min(n) {
                out.check(format!("{tag}: e_{k} central"), h.is_central(&h.elementary_symmetric(k)));
            }
            for c in 0..50 {
                let kind = CandidateKind::ALL[c % CandidateKind::ALL.len()];
                let z = h.random_center_candidate(&mut rng, kind, 2);
                let direct = h.is_central(&z);
                let criterion = h.center_coeff_check(&z);
                out.check(format!("{tag}: candidate {c} ({kind:?}) direct {direct} vs criterion {criterion}"), direct == criterion);
                central += direct as usize;
                candidates += 1;
            }
        }
    }
    out.summary = format!("{candidates} candidates, {central} central, all classified alike");
    Ok(())
}

fn scalars(out: &mut Outcome) -> Result<()> {
    let groups = [FiniteGroup::cyclic(2).unwrap(), FiniteGroup::cyclic(3).unwrap(), FiniteGroup::symmetric(3).unwrap()];
    let mut points = 0;
    for g in &groups {
        for p in [2, 3, 5, 7] {
            if g.order() % p as usize == 0 {
                continue;
            }
            let f = Field::new(&g.splitting_field(p)?)?;
            let tag = format!("{} p={p}", g.name());
            for c in c_scalars(g, &f)? {
                let product = f.mul(f.embed_int(c.dim as i64), c.value);
                out.check(format!("{tag}: d_k c_k = |G|"), product == f.embed_int(g.order() as i64));
            }
            out.report(&tag, &verify_t_action(g, &f)?);
            points += 1;
        }
    }
    out.summary = format!("{points} (G, p) points with p ∤ |G|");
    Ok(())
}

fn cyclotomic(out: &mut Outcome) -> Result<()> {
    let groups = [
        FiniteGroup::trivial(),
        FiniteGroup::cyclic(2).unwrap(),
        FiniteGroup::cyclic(3).unwrap(),
        FiniteGroup::symmetric(3).unwrap(),
    ];
    let weights: Vec<CycloWeight> =
        ["Lambda0", "Lambda1", "{\"0\":2}", "{\"0\":1,\"1\":1}"].iter().map(|s| s.parse().unwrap()).collect();
    let mut built = 0;
    for g in &groups {
        for p in [3, 5] {
            let f = Field::prime(p)?;
            for w in &weights {
                let d = w.degree() as usize;
                let max_n = if d == 1 { 3 } else { 2 };
                for n in 1..=max_n {
                    let wg = WreathGroup::new(Arc::new(g.clone()), n)?;
                    let expected = d.pow(n as u32) * factorial(n) * g.order().pow(n as u32);
                    let tag = format!("{} p={p} n={n} λ={:?}", g.name(), w.lambda);
                    match build_cyclo(wg, f.clone(), w) {
                        Ok(alg) => {
                            out.check(format!("{tag}: dim {} vs {expected}", alg.dim()), alg.dim() == expected);
                            if w == &CycloWeight::fundamental(0) {
                                out.report(&tag, &alg.verify_group_algebra_iso()?);
                            }
                        }
                        Err(e) => out.check(format!("{tag}: {e}"), false),
                    }
                    built += 1;
                }
            }
        }
    }
    out.summary = format!("{built} quotients with dimension d^n n! |G|^n, level one matched with FG_n");
    Ok(())
}

fn morita(out: &mut Outcome) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut simples = 0;
    let mut random = 0;
    for p in [3, 5] {
        let ctx = RepContext::new(Arc::new(FiniteGroup::cyclic(2).unwrap()), p)?;
        for n in 1..=2 {
            for (label, m) in simple_modules(&ctx, n)? {
                let tag = format!("p={p} {label:?}");
                out.report(&tag, &verify_gf_round_trip(&ctx, &m, &mut rng)?);
                let u = young_tensor(&ctx.field, &label)?;
                out.report(&tag, &verify_fg_round_trip(&ctx, &label.composition(), &u, &mut rng)?);
                simples += 1;
            }
            for round in 0..6 {
                let m = random_semisimple_module(&ctx, n, 3, &mut rng)?;
                out.report(&format!("p={p} n={n} random {round}"), &verify_gf_round_trip(&ctx, &m, &mut rng)?);
                let comps = compositions(n, ctx.r());
                let comp = &comps[round % comps.len()];
                let u = random_young_module(&ctx, comp, 3, &mut rng)?;
                out.report(&format!("p={p} {comp:?} random {round}"), &verify_fg_round_trip(&ctx, comp, &u, &mut rng)?);
                random += 2;
            }
        }
    }
    out.summary = format!("{simples} simple modules and {random} random non-simple modules, both directions");
    Ok(())
}

fn branching(out: &mut Outcome) -> Result<()> {
    let cases = [(FiniteGroup::cyclic(2).unwrap(), 3, 3), (FiniteGroup::trivial(), 2, 4), (FiniteGroup::trivial(), 3, 4)];
    let mut checks = 0;
    for (g, p, n_max) in cases {
        let ctx = RepContext::new(Arc::new(g.clone()), p)?;
        let r = crystal_vs_branching(&ctx, n_max)?;
        checks += r.len();
        out.report(&format!("{} p={p}", g.name()), &r);
    }
    out.summary = format!("{checks} node and edge comparisons");
    Ok(())
}

/// Partitions of `n` into parts not divisible by `p`, which are equinumerous
/// with `p`-regular partitions.
fn count_parts_prime_to(n: usize, p: usize) -> usize {
    let mut ways = vec![0usize; n + 1];
    ways[0] = 1;
    for part in (1..=n).filter(|m| m % p != 0) {
        for k in part..=n {
            ways[k] += ways[k - part];
        }
    }
    ways[n]
}

fn crystal(out: &mut Outcome) -> Result<()> {
    let mut nodes = 0;
    for p in [2u32, 3, 5] {
        let b = PartitionTensor::level_one(p, 0);
        out.report(&format!("p={p}"), &verify_axioms(&b, 10));
        for (n, layer) in nodes_by_depth(&b, 10).iter().enumerate() {
            let expected = count_parts_prime_to(n, p as usize);
            out.check(format!("p={p} n={n}: {} nodes vs {expected}", layer.len()), layer.len() == expected);
            let distinct: BTreeSet<_> = layer.iter().collect();
            out.check(format!("p={p} n={n}: duplicate nodes"), distinct.len() == layer.len());
            nodes += layer.len();
        }
    }
    out.summary = format!("{nodes} nodes of B(Λ0) up to depth 10");
    Ok(())
}

fn main() {
    let secs = Duration::from_secs;
    let results = [
        run(1, "relation suite", secs(60), relations),
        run(2, "PBW oracle and associativity", secs(300), oracle),
        run(3, "Jucys–Murphy identities", secs(60), jucys_murphy),
        run(4, "class counting", secs(120), class_counts),
        run(5, "center criterion", secs(120), center),
        run(6, "scalars c_k", secs(30), scalars),
        run(7, "cyclotomic dimension", secs(180), cyclotomic),
        run(8, "Morita round trips", secs(120), morita),
        run(9, "branching equals crystal", secs(600), branching),
        run(10, "crystal axioms and counts", secs(30), crystal),
    ];
    let failed = results.iter().filter(|&&ok| !ok).count();
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
