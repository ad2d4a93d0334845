//! The functors between `FG_n`-modules and families of modules over the
//! Young subgroups `S_n̂`:
//! `F(M)_n̂ = Hom_{FG^n}(V(n̂), M)` and `G(U) = ⊕_n̂ ind (V(n̂) ⊗ U_n̂)`.
//!
//! On `F(M)_n̂`, `π ∈ S_n̂` acts by `φ ↦ M(π) φ P_π⁻¹` and `y_k` by
//! `φ ↦ c_{l_k}⁻¹ ξ_k φ`, where `l_k` is the irreducible in slot `k`.

use std::collections::BTreeMap;

use rand::Rng;

use super::isotypic::isotypic_decompose;
use super::wreath_modules::{
    compositions, induce_from_young, simple_labels, simple_modules, slot_types, tensor_module, young_simple_indices,
    young_tensor, jucys_murphy_matrix, RepContext, TensorSpace,
};
use super::{find_isomorphism, hom, random_invertible, s_name, y_name, Algebra, MatrixModule};
use crate::error::{Error, Result};
use crate::hecke::tscalars::c_scalars;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::perm::Perm;
use crate::report::Report;

fn flatten(m: &Matrix) -> Vector {
    (0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect()
}

/// One component `F(M)_n̂` with the intertwiners forming its basis.
#[derive(Clone, Debug)]
pub struct MoritaComponent {
    pub composition: Vec<usize>,
    pub module: MatrixModule,
    pub basis: Vec<Matrix>,
}

pub fn functor_f_component(ctx: &RepContext, m: &MatrixModule, composition: &[usize]) -> Result<MoritaComponent> {
    let f = &ctx.field;
    let n = m.n;
    let tensor = tensor_module(ctx, composition);
    let space = TensorSpace::new(ctx, composition);
    let basis = hom(f, &tensor, m, &ctx.base_names(n))?;
    let span = Subspace::spanned_by(f, m.dim * tensor.dim, basis.iter().map(flatten));
    if span.dim() != basis.len() {
        return Err(Error::Invalid("intertwiner basis is dependent".into()));
    }
    let express = |images: Vec<Matrix>| -> Result<Matrix> {
        let cols = images
            .iter()
            .map(|psi| {
                span.coordinates(f, &flatten(psi))
                    .ok_or_else(|| Error::Mismatch("action leaves the intertwiner space".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(basis.len(), &cols))
    };
    let mut out = MatrixModule::new(Algebra::Symmetric, n, basis.len());
    for i in young_simple_indices(composition) {
        let pi = Perm::simple(n, i);
        let m_pi = m.gen(&s_name(i));
        let p_inv = space.place_matrix(&pi.inverse());
        out.generators.insert(s_name(i), express(basis.iter().map(|phi| m_pi.mul(f, phi).mul(f, &p_inv)).collect())?);
    }
    let scalars = c_scalars(&ctx.group, f)?;
    let types = slot_types(composition);
    for k in 1..=n {
        let c = scalars[types[k - 1]].value;
        let inv = f
            .inv(c)
            .map_err(|_| Error::ScalarUnavailable(format!("c_{} vanishes; the y-action needs the degenerate form", types[k - 1] + 1)))?;
        let xi = jucys_murphy_matrix(ctx, m, k).scale(f, inv);
        out.generators.insert(y_name(k), express(basis.iter().map(|phi| xi.mul(f, phi)).collect())?);
    }
    Ok(MoritaComponent { composition: composition.to_vec(), module: out, basis })
}

/// All nonzero components of `F(M)`.
pub fn functor_f(ctx: &RepContext, m: &MatrixModule) -> Result<BTreeMap<Vec<usize>, MoritaComponent>> {
    let mut out = BTreeMap::new();
    for comp in compositions(m.n, ctx.r()) {
        let c = functor_f_component(ctx, m, &comp)?;
        if c.module.dim > 0 {
            out.insert(comp, c);
        }
    }
    Ok(out)
}

/// `G(U) = ⊕_n̂ ind (V(n̂) ⊗ U_n̂)`.
pub fn functor_g(ctx: &RepContext, n: usize, family: &BTreeMap<Vec<usize>, MatrixModule>) -> Result<MatrixModule> {
    let mut total: Option<MatrixModule> = None;
    for (comp, u) in family {
        if u.dim == 0 {
            continue;
        }
        let m = induce_from_young(ctx, comp, u)?;
        total = Some(match total {
            None => m,
            Some(t) => t.direct_sum(&m)?,
        });
    }
    match total {
        Some(t) => Ok(t),
        None => {
            let mut zero = MatrixModule::new(Algebra::GroupAlgebra, n, 0);
            for name in ctx.group_algebra_names(n) {
                zero.generators.insert(name, Matrix::zeros(0, 0));
            }
            Ok(zero)
        }
    }
}

/// `Σ (i,k)` over `i < k` in the same block of `S_n̂`.
pub fn young_jucys_murphy(ctx: &RepContext, u: &MatrixModule, composition: &[usize], k: usize) -> Matrix {
    let f = &ctx.field;
    let types = slot_types(composition);
    let n = types.len();
    (1..k).filter(|&i| types[i - 1] == types[k - 1]).fold(Matrix::zeros(u.dim, u.dim), |acc, i| {
        acc.add(f, &u.perm_matrix(f, &Perm::transposition(n, i - 1, k - 1)))
    })
}

fn young_names(composition: &[usize]) -> Vec<String> {
    young_simple_indices(composition).into_iter().map(s_name).collect()
}

/// `F(G(U)) ≅ U` for a module `U` over `F S_n̂`.
pub fn verify_fg_round_trip(
    ctx: &RepContext,
    composition: &[usize],
    u: &MatrixModule,
    rng: &mut impl Rng,
) -> Result<Report> {
    let f = &ctx.field;
    let n: usize = composition.iter().sum();
    let names = young_names(composition);
    let m = induce_from_young(ctx, composition, u)?;
    let family = functor_f(ctx, &m)?;
    let mut r = Report::new();
    r.push_detail(
        "only the inducing component survives",
        family.keys().all(|k| k == composition),
        format!("{:?}", family.keys().collect::<Vec<_>>()),
    );
    let Some(back) = family.get(composition) else {
        r.push("F(G(U)) ≅ U", u.dim == 0);
        return Ok(r);
    };
    let back = &back.module;
    r.push("F(G(U)) ≅ U", find_isomorphism(f, u, back, &names, rng)?.is_some());
    r.push(
        "y_k acts as the Young Jucys–Murphy element",
        (1..=n).all(|k| *back.gen(&y_name(k)) == young_jucys_murphy(ctx, back, composition, k)),
    );
    let end_u = hom(f, u, u, &names)?.len();
    let end_m = hom(f, &m, &m, &ctx.group_algebra_names(n))?.len();
    r.push_detail("End(U) and End(G(U)) agree", end_u == end_m, format!("{end_u} vs {end_m}"));
    Ok(r)
}

/// `G(F(M)) ≅ M` for an `FG_n`-module `M`, plus the multiplicity-space dimensions.
pub fn verify_gf_round_trip(ctx: &RepContext, m: &MatrixModule, rng: &mut impl Rng) -> Result<Report> {
    let f = &ctx.field;
    let family = functor_f(ctx, m)?;
    let pieces = isotypic_decompose(ctx, m)?;
    let mut r = Report::new();
    let dims_ok = compositions(m.n, ctx.r()).iter().all(|comp| {
        let tensor: usize = slot_types(comp).iter().map(|&k| ctx.irreps[k].dim).product();
        let f_dim = family.get(comp).map_or(0, |c| c.module.dim);
        let iso_dim = pieces.get(comp).map_or(0, |p| p.isotypic.dim());
        f_dim * tensor == iso_dim
    });
    r.push("dim F(M)_n̂ · dim V(n̂) = dim I_n̂M", dims_ok);
    let modules: BTreeMap<Vec<usize>, MatrixModule> = family.into_iter().map(|(k, c)| (k, c.module)).collect();
    let back = functor_g(ctx, m.n, &modules)?;
    r.push("G(F(M)) ≅ M", find_isomorphism(f, m, &back, &ctx.group_algebra_names(m.n), rng)?.is_some());
    Ok(r)
}

/// A random direct sum of `1..=max_summands` simple `FG_n`-modules in a random basis.
pub fn random_semisimple_module(ctx: &RepContext, n: usize, max_summands: usize, rng: &mut impl Rng) -> Result<MatrixModule> {
    let simples = simple_modules(ctx, n)?;
    random_sum(ctx, simples.into_iter().map(|(_, m)| m).collect(), max_summands, rng)
}

/// A random direct sum of simple `F S_n̂`-modules in a random basis.
pub fn random_young_module(
    ctx: &RepContext,
    composition: &[usize],
    max_summands: usize,
    rng: &mut impl Rng,
) -> Result<MatrixModule> {
    let n: usize = composition.iter().sum();
    let simples = simple_labels(ctx, n)
        .into_iter()
        .filter(|l| l.composition() == composition)
        .map(|l| young_tensor(&ctx.field, &l))
        .collect::<Result<Vec<_>>>()?;
    random_sum(ctx, simples, max_summands, rng)
}

fn random_sum(ctx: &RepContext, simples: Vec<MatrixModule>, max_summands: usize, rng: &mut impl Rng) -> Result<MatrixModule> {
    if simples.is_empty() {
        return Err(Error::Invalid("no simple modules to sum".into()));
    }
    let count = rng.gen_range(1..=max_summands.max(1));
    let mut total = simples[rng.gen_range(0..simples.len())].clone();
    for _ in 1..count {
        total = total.direct_sum(&simples[rng.gen_range(0..simples.len())])?;
    }
    let p = random_invertible(&ctx.field, total.dim, rng);
    total.conjugate(&ctx.field, &p)
}

/// Endomorphism ring dimension; 1 for absolutely simple modules.
pub fn endomorphism_dim(ctx: &RepContext, m: &MatrixModule, names: &[String]) -> Result<usize> {
    Ok(hom(&ctx.field, m, m, names)?.len())
}
