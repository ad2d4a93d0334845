//! A Norton-style splitter: finds a proper submodule from the kernel of
//! `θ = A − c` for a random algebra element `A` and field eigenvalue `c`,
//! or proves irreducibility when `ker θ` is one-dimensional.

use rand::Rng;

use super::wreath_modules::RepContext;
use super::{find_isomorphism, g_name, s_name, Algebra, MatrixModule};
use crate::error::{Error, Result};
use crate::linalg::{eigenvalues, spin, Matrix, Subspace};
use crate::perm::Perm;
use crate::report::Report;
use crate::scalars::Field;
use crate::wreath::{WreathElement, WreathGroup};

/// Attempts before giving up on finding a usable element.
const ATTEMPTS: usize = 200;

pub enum Split {
    Irreducible,
    Submodule(Subspace),
}

/// Decides whether `m` is irreducible, or returns a proper submodule.
pub fn split(f: &Field, m: &MatrixModule, rng: &mut impl Rng) -> Result<Split> {
    if m.dim <= 1 {
        return Ok(Split::Irreducible);
    }
    let gens: Vec<&Matrix> = m.generators.values().collect();
    let transposed: Vec<Matrix> = gens.iter().map(|g| g.transpose()).collect();
    let transposed: Vec<&Matrix> = transposed.iter().collect();
    for _ in 0..ATTEMPTS {
        let a = m.random_algebra_element(f, rng);
        for (c, _) in eigenvalues(f, &a) {
            let theta = a.shift(f, c);
            let kernel = theta.nullspace(f);
            // Any kernel vector spinning to a proper subspace splits the module.
            for v in &kernel {
                let s = spin(f, m.dim, &gens, [v.clone()]);
                if s.dim() < m.dim {
                    return Ok(Split::Submodule(s));
                }
            }
            if kernel.len() != 1 {
                continue;
            }
            let w = theta.transpose().nullspace(f).remove(0);
            let dual = spin(f, m.dim, &transposed, [w]);
            if dual.dim() == m.dim {
                return Ok(Split::Irreducible);
            }
            // The annihilator of a proper dual submodule is a proper submodule.
            let annihilator = Matrix::from_rows(dual.basis()).nullspace(f);
            return Ok(Split::Submodule(Subspace::spanned_by(f, m.dim, annihilator)));
        }
    }
    Err(Error::SplittingFailed(format!("no usable element found for a module of dimension {}", m.dim)))
}

/// Composition factors, in no particular order.
pub fn composition_factors(f: &Field, m: &MatrixModule, rng: &mut impl Rng) -> Result<Vec<MatrixModule>> {
    let mut out = Vec::new();
    let mut stack = vec![m.clone()];
    while let Some(top) = stack.pop() {
        match split(f, &top, rng)? {
            Split::Irreducible => out.push(top),
            Split::Submodule(sub) => {
                stack.push(top.submodule(f, &sub)?);
                stack.push(top.quotient(f, &sub)?);
            }
        }
    }
    Ok(out)
}

/// Composition factors up to isomorphism.
pub fn distinct_factors(f: &Field, m: &MatrixModule, rng: &mut impl Rng) -> Result<Vec<MatrixModule>> {
    let names: Vec<String> = m.generators.keys().cloned().collect();
    let mut distinct: Vec<MatrixModule> = Vec::new();
    for factor in composition_factors(f, m, rng)? {
        let mut seen = false;
        for d in &distinct {
            if find_isomorphism(f, d, &factor, &names, rng)?.is_some() {
                seen = true;
                break;
            }
        }
        if !seen {
            distinct.push(factor);
        }
    }
    Ok(distinct)
}

/// The left regular module of `FG_n`.
pub fn regular_group_module(ctx: &RepContext, n: usize) -> Result<MatrixModule> {
    let wg = WreathGroup::new(ctx.group.clone(), n)?;
    let dim = wg.order();
    let left = |x: &WreathElement| -> Matrix {
        let mut m = Matrix::zeros(dim, dim);
        for (c, y) in wg.elements().enumerate() {
            m[(wg.index(&wg.mul(x, &y)), c)] = crate::scalars::Fq::ONE;
        }
        m
    };
    let mut out = MatrixModule::new(Algebra::GroupAlgebra, n, dim);
    for i in 1..n {
        out.generators.insert(s_name(i), left(&WreathElement { g: 0, w: Perm::simple(n, i) }));
    }
    for j in 1..=n {
        for a in 0..ctx.group.order() {
            out.generators.insert(g_name(j, a), left(&WreathElement { g: wg.single(j - 1, a), w: Perm::identity(n) }));
        }
    }
    Ok(out)
}

/// Compares the constructed simple list with the distinct composition
/// factors of the regular module.
pub fn cross_check_simples(ctx: &RepContext, n: usize, simples: &[MatrixModule], rng: &mut impl Rng) -> Result<Report> {
    let f = &ctx.field;
    let regular = regular_group_module(ctx, n)?;
    let factors = distinct_factors(f, &regular, rng)?;
    let names = ctx.group_algebra_names(n);
    let mut r = Report::new();
    r.push_detail(
        format!("n = {n}: factor count matches"),
        factors.len() == simples.len(),
        format!("{} factors, {} constructed", factors.len(), simples.len()),
    );
    let mut matched = true;
    for s in simples {
        let mut hit = false;
        for fct in &factors {
            if find_isomorphism(f, s, fct, &names, rng)?.is_some() {
                hit = true;
                break;
            }
        }
        matched &= hit;
    }
    r.push(format!("n = {n}: every constructed simple is a factor"), matched);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FiniteGroup;
    use crate::repmod::wreath_modules::simple_modules;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    fn check(g: FiniteGroup, p: u32, n: usize) {
        let ctx = RepContext::new(Arc::new(g), p).unwrap();
        let simples: Vec<MatrixModule> = simple_modules(&ctx, n).unwrap().into_iter().map(|(_, m)| m).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let r = cross_check_simples(&ctx, n, &simples, &mut rng).unwrap();
        assert!(r.all_passed(), "{:?}", r.failures());
    }

    #[test]
    fn regular_modules_split_into_the_constructed_simples() {
        check(FiniteGroup::cyclic(2).unwrap(), 3, 2);
        check(FiniteGroup::cyclic(3).unwrap(), 2, 2);
        check(FiniteGroup::trivial(), 2, 2);
        check(FiniteGroup::trivial(), 3, 3);
    }

    #[test]
    fn factor_dimensions_sum() {
        let ctx = RepContext::new(Arc::new(FiniteGroup::cyclic(2).unwrap()), 3).unwrap();
        let regular = regular_group_module(&ctx, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let factors = composition_factors(&ctx.field, &regular, &mut rng).unwrap();
        assert_eq!(factors.iter().map(|m| m.dim).sum::<usize>(), 2);
        assert_eq!(factors.len(), 2);
    }
}
