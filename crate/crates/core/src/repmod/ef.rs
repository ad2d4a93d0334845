//! Eigenvalue blocks and the functors `e_{i,k}`, `f_{i,k}` between modules
//! over cyclotomic quotients of consecutive rank.
//!
//! `e_{i,k} M` is the generalized `i·c_k`-eigenspace of `x_n` on
//! `Hom_G(V_k, res M)`, where `G` sits in the last slot. `f_{i,k} N` is the
//! block of `H_{n+1}^λ ⊗_{H_n^λ ⊗ FG} (N ⊗ V_k)` whose weight multiset is
//! that of `N` plus `(k, i·c_k)`, taken separately on each block of `N`.

use std::collections::BTreeMap;

use super::isotypic::slot_projection;
use super::wreath_modules::{jucys_murphy_matrix, RepContext};
use super::{g_name, hom, s_name, x_name, Algebra, MatrixModule};
use crate::cyclotomic::CycloAlgebra;
use crate::error::{Error, Result};
use crate::hecke::tscalars::c_scalars;
use crate::linalg::{eigenvalues, generalized_eigenspace, intertwiners, restrict, Matrix, Subspace, Vector};
use crate::report::Report;
use crate::scalars::Fq;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    /// Generalized eigenspaces of the last polynomial generator.
    LastVariable,
    /// Simultaneous generalized eigenspaces of all of them.
    AllVariables,
}

#[derive(Clone, Debug)]
pub struct EigenBlocks {
    /// Eigenvalue codes → subspace.
    pub blocks: BTreeMap<Vec<u32>, Subspace>,
    /// Whether every eigenvalue lies in the field, so the blocks fill the module.
    pub complete: bool,
}

/// `x_k` if the module has it, otherwise `ξ_k` (the image of `x_k` in `FG_n`
/// at level one).
pub fn polynomial_matrix(ctx: &RepContext, m: &MatrixModule, k: usize) -> Matrix {
    match m.get(&x_name(k)) {
        Some(x) => x.clone(),
        None => jucys_murphy_matrix(ctx, m, k),
    }
}

fn refine_by_operator(ctx: &RepContext, pieces: Vec<(Vec<u32>, Subspace)>, op: &Matrix) -> Result<Vec<(Vec<u32>, Subspace)>> {
    let f = &ctx.field;
    let mut out = Vec::new();
    for (key, sub) in pieces {
        if sub.dim() == 0 {
            continue;
        }
        let local = restrict(f, op, &sub)?;
        for (c, _) in eigenvalues(f, &local) {
            let vectors = generalized_eigenspace(f, &local, c).into_iter().map(|coords| combine(ctx, &sub, &coords));
            let mut next = key.clone();
            next.push(c.code());
            out.push((next, Subspace::spanned_by(f, sub.ambient_dim(), vectors)));
        }
    }
    Ok(out)
}

fn refine_by_projections(ctx: &RepContext, pieces: Vec<(Vec<u32>, Subspace)>, projections: &[Matrix]) -> Vec<(Vec<u32>, Subspace)> {
    let f = &ctx.field;
    let mut out = Vec::new();
    for (key, sub) in pieces {
        for (k, p) in projections.iter().enumerate() {
            let image = Subspace::spanned_by(f, sub.ambient_dim(), sub.basis().iter().map(|v| p.mul_vec(f, v)));
            if image.dim() > 0 {
                let mut next = key.clone();
                next.push(k as u32);
                out.push((next, image));
            }
        }
    }
    out
}

fn combine(ctx: &RepContext, sub: &Subspace, coords: &[Fq]) -> Vector {
    let f = &ctx.field;
    let mut v = vec![Fq::ZERO; sub.ambient_dim()];
    for (b, &c) in sub.basis().iter().zip(coords) {
        if !c.is_zero() {
            for (x, &y) in v.iter_mut().zip(b) {
                *x = f.add(*x, f.mul(c, y));
            }
        }
    }
    v
}

/// Block decomposition by eigenvalues of `x_n` or of all `x_k`.
pub fn eigen_block_decompose(ctx: &RepContext, m: &MatrixModule, which: BlockKind) -> Result<EigenBlocks> {
    let f = &ctx.field;
    let mut pieces = vec![(Vec::new(), Subspace::spanned_by(f, m.dim, Matrix::identity(m.dim).columns()))];
    let range: Vec<usize> = match which {
        BlockKind::LastVariable => vec![m.n],
        BlockKind::AllVariables => (1..=m.n).collect(),
    };
    for k in range {
        pieces = refine_by_operator(ctx, pieces, &polynomial_matrix(ctx, m, k))?;
    }
    let total: usize = pieces.iter().map(|(_, s)| s.dim()).sum();
    Ok(EigenBlocks { blocks: pieces.into_iter().collect(), complete: total == m.dim })
}

/// A weight is the list of `(irreducible in slot j, eigenvalue of x_j)`.
pub type Weight = Vec<(usize, u32)>;

/// Simultaneous weight spaces for slot types and the `x_j`.
pub fn weight_spaces(ctx: &RepContext, m: &MatrixModule) -> Result<(BTreeMap<Weight, Subspace>, bool)> {
    let f = &ctx.field;
    let mut pieces = vec![(Vec::new(), Subspace::spanned_by(f, m.dim, Matrix::identity(m.dim).columns()))];
    for j in 1..=m.n {
        let projections = (0..ctx.r()).map(|k| slot_projection(ctx, m, j, k)).collect::<Result<Vec<_>>>()?;
        pieces = refine_by_projections(ctx, pieces, &projections);
        pieces = refine_by_operator(ctx, pieces, &polynomial_matrix(ctx, m, j))?;
    }
    let total: usize = pieces.iter().map(|(_, s)| s.dim()).sum();
    let map = pieces
        .into_iter()
        .map(|(key, s)| (key.chunks(2).map(|c| (c[0] as usize, c[1])).collect(), s))
        .collect();
    Ok((map, total == m.dim))
}

fn sorted(w: &Weight) -> Weight {
    let mut w = w.clone();
    w.sort_unstable();
    w
}

/// Blocks of a module: sums of weight spaces with equal weight multisets.
pub fn central_blocks(ctx: &RepContext, m: &MatrixModule) -> Result<BTreeMap<Weight, Subspace>> {
    let f = &ctx.field;
    let (spaces, complete) = weight_spaces(ctx, m)?;
    if !complete {
        return Err(Error::Mismatch("polynomial generators have eigenvalues outside the field".into()));
    }
    let mut out: BTreeMap<Weight, Subspace> = BTreeMap::new();
    for (w, s) in spaces {
        let block = out.entry(sorted(&w)).or_insert_with(|| Subspace::new(m.dim));
        for v in s.basis() {
            block.insert(f, v.clone());
        }
    }
    Ok(out)
}

/// Generator names of `H_n^λ(G)` as used by module matrices.
pub fn cyclotomic_names(ctx: &RepContext, n: usize) -> Vec<String> {
    let mut names: Vec<String> = (1..=n).map(x_name).collect();
    names.extend(ctx.group_algebra_names(n));
    names
}

/// An `FG_n`-module as a module over the level-one quotient, `x_k ↦ ξ_k`.
pub fn as_cyclotomic(ctx: &RepContext, m: &MatrixModule) -> MatrixModule {
    let mut out = m.clone();
    out.algebra = Algebra::Cyclotomic;
    for k in 1..=m.n {
        out.generators.insert(x_name(k), jucys_murphy_matrix(ctx, m, k));
    }
    out
}

/// The left regular module of a cyclotomic quotient.
pub fn regular_module(ctx: &RepContext, alg: &CycloAlgebra) -> MatrixModule {
    let n = alg.n();
    let gens = alg.generators();
    let wg = alg.hecke().wreath();
    let mut out = MatrixModule::new(Algebra::Cyclotomic, n, alg.dim());
    for k in 1..=n {
        out.generators.insert(x_name(k), gens.x[k - 1].to_dense());
    }
    for i in 1..n {
        out.generators.insert(s_name(i), gens.s[i - 1].to_dense());
    }
    for j in 1..=n {
        for a in 0..ctx.group.order() {
            out.generators.insert(g_name(j, a), alg.group_matrix(wg.single(j - 1, a)).to_dense());
        }
    }
    out
}

/// A functor value; `empty` flags the zero module.
#[derive(Clone, Debug)]
pub struct EfModule {
    pub module: MatrixModule,
    pub empty: bool,
}

fn zero_module(ctx: &RepContext, n: usize) -> MatrixModule {
    let mut m = MatrixModule::new(Algebra::Cyclotomic, n, 0);
    for name in cyclotomic_names(ctx, n) {
        m.generators.insert(name, Matrix::zeros(0, 0));
    }
    m
}

fn flatten(m: &Matrix) -> Vector {
    (0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect()
}

fn residue_value(ctx: &RepContext, i: u32, k: usize) -> Result<Fq> {
    let f = &ctx.field;
    let c = c_scalars(&ctx.group, f)?[k].value;
    if c.is_zero() {
        return Err(Error::ZeroScalar { k: k + 1 });
    }
    Ok(f.mul(f.embed_int(i as i64), c))
}

/// `e_{i,k} M` for a module over `H_n^λ(G)`.
pub fn e_functor(ctx: &RepContext, m: &MatrixModule, i: u32, k: usize) -> Result<EfModule> {
    let f = &ctx.field;
    let n = m.n;
    if n == 0 {
        return Err(Error::Invalid("e needs n ≥ 1".into()));
    }
    let a = residue_value(ctx, i, k)?;
    let irrep = &ctx.irreps[k];
    let order = ctx.group.order();
    let src: Vec<&Matrix> = irrep.matrices.iter().collect();
    let dst_names: Vec<String> = (0..order).map(|g| g_name(n, g)).collect();
    let basis = intertwiners(f, irrep.dim, m.dim, &src, &m.matrices(&dst_names)?);
    let span = Subspace::spanned_by(f, m.dim * irrep.dim, basis.iter().map(flatten));
    let act = |op: &Matrix| -> Result<Matrix> {
        let cols = basis
            .iter()
            .map(|phi| {
                span.coordinates(f, &flatten(&op.mul(f, phi)))
                    .ok_or_else(|| Error::Mismatch("generator does not commute with the last slot".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(basis.len(), &cols))
    };
    let last = act(&polynomial_matrix(ctx, m, n))?;
    let block = Subspace::spanned_by(f, basis.len(), generalized_eigenspace(f, &last, a));
    let mut out = MatrixModule::new(Algebra::Cyclotomic, n - 1, block.dim());
    for name in cyclotomic_names(ctx, n - 1) {
        let op = if name.starts_with('x') { polynomial_matrix(ctx, m, name[1..].parse().expect("x index")) } else { m.gen(&name).clone() };
        out.generators.insert(name, restrict(f, &act(&op)?, &block)?);
    }
    let empty = out.dim == 0;
    Ok(EfModule { module: out, empty })
}

/// `H_{n+1}^λ ⊗_{H_n^λ ⊗ FG} W` for a module `W` over the subalgebra,
/// given with names `x{j}`, `s{i}` (j, i ≤ n) and `g{j}.{a}` (j ≤ n+1).
pub fn induce_cyclotomic(ctx: &RepContext, alg: &CycloAlgebra, w: &MatrixModule) -> Result<MatrixModule> {
    let f = &ctx.field;
    let big = alg.n();
    let n = big - 1;
    let h = alg.hecke();
    let wg = h.wreath();
    let mut subgens: Vec<(String, crate::hecke::HeckeElement)> = Vec::new();
    for j in 1..=n {
        subgens.push((x_name(j), h.x(j)?));
    }
    for i in 1..n {
        subgens.push((s_name(i), h.s(i)?));
    }
    for j in 1..=big {
        for a in ctx.group.generators() {
            subgens.push((g_name(j, a), h.slot_element(j, a)?));
        }
    }
    let dim_a = alg.dim();
    let total = dim_a * w.dim;
    let mut relations = Subspace::new(total);
    let id_a = Matrix::identity(dim_a);
    let id_w = Matrix::identity(w.dim);
    for (name, b) in &subgens {
        let cols = alg
            .basis()
            .iter()
            .map(|key| {
                let prod = alg.mul(&h.monomial(key.clone(), Fq::ONE), b)?;
                let sparse = alg.to_vector(&prod)?;
                let mut col = vec![Fq::ZERO; dim_a];
                for (i, c) in sparse {
                    col[i as usize] = c;
                }
                Ok(col)
            })
            .collect::<Result<Vec<_>>>()?;
        let right = Matrix::from_columns(dim_a, &cols);
        let rel = right.kron(f, &id_w).sub(f, &id_a.kron(f, w.gen(name)));
        for v in rel.columns() {
            relations.insert(f, v);
        }
    }
    let gens = alg.generators();
    let mut free = MatrixModule::new(Algebra::Cyclotomic, big, total);
    for k in 1..=big {
        free.generators.insert(x_name(k), gens.x[k - 1].to_dense().kron(f, &id_w));
    }
    for i in 1..big {
        free.generators.insert(s_name(i), gens.s[i - 1].to_dense().kron(f, &id_w));
    }
    for j in 1..=big {
        for a in 0..ctx.group.order() {
            free.generators.insert(g_name(j, a), alg.group_matrix(wg.single(j - 1, a)).to_dense().kron(f, &id_w));
        }
    }
    free.quotient(f, &relations)
}

/// `N ⊗ V_k` over `H_n^λ ⊗ FG`.
fn outer_product(ctx: &RepContext, nmod: &MatrixModule, k: usize) -> MatrixModule {
    let f = &ctx.field;
    let n = nmod.n;
    let irrep = &ctx.irreps[k];
    let id_v = Matrix::identity(irrep.dim);
    let mut out = MatrixModule::new(Algebra::Cyclotomic, n + 1, nmod.dim * irrep.dim);
    for name in cyclotomic_names(ctx, n) {
        out.generators.insert(name.clone(), nmod.gen(&name).kron(f, &id_v));
    }
    for a in 0..ctx.group.order() {
        out.generators.insert(g_name(n + 1, a), Matrix::identity(nmod.dim).kron(f, &irrep.matrices[a]));
    }
    out
}

/// `f_{i,k} N`; `alg` is the quotient of rank `N.n + 1`.
pub fn f_functor(ctx: &RepContext, alg: &CycloAlgebra, nmod: &MatrixModule, i: u32, k: usize) -> Result<EfModule> {
    let f = &ctx.field;
    if alg.n() != nmod.n + 1 {
        return Err(Error::Mismatch(format!("inducing from rank {} through rank {}", nmod.n, alg.n())));
    }
    let a = residue_value(ctx, i, k)?;
    let mut total: Option<MatrixModule> = None;
    for (beta, sub) in central_blocks(ctx, nmod)? {
        let piece = nmod.submodule(f, &sub)?;
        let induced = induce_cyclotomic(ctx, alg, &outer_product(ctx, &piece, k))?;
        let mut target = beta.clone();
        target.push((k, a.code()));
        target.sort_unstable();
        let mut selected = Subspace::new(induced.dim);
        for (w, s) in weight_spaces(ctx, &induced)?.0 {
            if sorted(&w) == target {
                for v in s.basis() {
                    selected.insert(f, v.clone());
                }
            }
        }
        if selected.dim() == 0 {
            continue;
        }
        let block = induced.submodule(f, &selected)?;
        total = Some(match total {
            None => block,
            Some(t) => t.direct_sum(&block)?,
        });
    }
    Ok(match total {
        Some(module) => EfModule { empty: module.dim == 0, module },
        None => EfModule { module: zero_module(ctx, alg.n()), empty: true },
    })
}

/// `dim Hom(f N, M)` and `dim Hom(N, e M)`.
pub fn adjointness_dims(
    ctx: &RepContext,
    alg: &CycloAlgebra,
    nmod: &MatrixModule,
    m: &MatrixModule,
    i: u32,
    k: usize,
) -> Result<(usize, usize)> {
    let f = &ctx.field;
    let fn_ = f_functor(ctx, alg, nmod, i, k)?.module;
    let em = e_functor(ctx, m, i, k)?.module;
    let left = hom(f, &fn_, m, &cyclotomic_names(ctx, m.n))?.len();
    let right = hom(f, nmod, &em, &cyclotomic_names(ctx, nmod.n))?.len();
    Ok((left, right))
}

/// `Σ_{i,k} d_k · dim e_{i,k} M = dim M` when `x_n` has integral eigenvalues.
pub fn dimension_audit(ctx: &RepContext, m: &MatrixModule) -> Result<Report> {
    let mut sum = 0;
    for k in 0..ctx.r() {
        for i in 0..ctx.field.p() {
            sum += ctx.irreps[k].dim * e_functor(ctx, m, i, k)?.module.dim;
        }
    }
    let mut r = Report::new();
    r.push_detail("Σ d_k dim e_{i,k} M = dim M", sum == m.dim, format!("{sum} vs {}", m.dim));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{build_cyclo, CycloWeight};
    use crate::groups::FiniteGroup;
    use crate::repmod::specht::specht_simple;
    use crate::repmod::wreath_modules::simple_modules;
    use crate::scalars::Field;
    use crate::wreath::WreathGroup;
    use std::sync::Arc;

    fn ctx(g: FiniteGroup, p: u32) -> RepContext {
        RepContext::new(Arc::new(g), p).unwrap()
    }

    fn algebra(c: &RepContext, n: usize, weight: &CycloWeight) -> CycloAlgebra {
        build_cyclo(WreathGroup::new(c.group.clone(), n).unwrap(), c.field.clone(), weight).unwrap()
    }

    #[test]
    fn jucys_murphy_spectrum_on_specht_module() {
        let c = ctx(FiniteGroup::trivial(), 5);
        let d = specht_simple(&Field::prime(5).unwrap(), &[2, 1]).unwrap();
        let mut m = d.clone();
        m.algebra = Algebra::GroupAlgebra;
        let m = m.with(g_name(1, 0), Matrix::identity(2)).with(g_name(2, 0), Matrix::identity(2)).with(g_name(3, 0), Matrix::identity(2));
        let blocks = eigen_block_decompose(&c, &m, BlockKind::LastVariable).unwrap();
        assert!(blocks.complete);
        let keys: Vec<Vec<u32>> = blocks.blocks.keys().cloned().collect();
        assert_eq!(keys, vec![vec![1], vec![4]]);
        let one = MatrixModule::new(Algebra::Cyclotomic, 1, 1).with(x_name(1), Matrix::zeros(1, 1));
        assert_eq!(eigen_block_decompose(&c, &one, BlockKind::AllVariables).unwrap().blocks.len(), 1);
    }

    #[test]
    fn adjunction_for_c2_at_level_one() {
        let c = ctx(FiniteGroup::cyclic(2).unwrap(), 3);
        let alg = algebra(&c, 2, &CycloWeight::fundamental(0));
        let small: Vec<MatrixModule> = simple_modules(&c, 1).unwrap().into_iter().map(|(_, m)| as_cyclotomic(&c, &m)).collect();
        let big: Vec<MatrixModule> = simple_modules(&c, 2).unwrap().into_iter().map(|(_, m)| as_cyclotomic(&c, &m)).collect();
        let mut nonzero = 0;
        for m in &big {
            assert!(dimension_audit(&c, m).unwrap().all_passed());
            for nmod in &small {
                for i in 0..3 {
                    for k in 0..2 {
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
    fn adjunction_at_level_two() {
        let c = ctx(FiniteGroup::trivial(), 3);
        let weight: CycloWeight = "{\"0\":1,\"1\":1}".parse().unwrap();
        let small = regular_module(&c, &algebra(&c, 1, &weight));
        let alg = algebra(&c, 2, &weight);
        let big = regular_module(&c, &alg);
        assert!(dimension_audit(&c, &big).unwrap().all_passed());
        let mut nonzero = 0;
        for i in 0..3 {
            let (l, r) = adjointness_dims(&c, &alg, &small, &big, i, 0).unwrap();
            assert_eq!(l, r, "i={i}");
            nonzero += l;
        }
        assert!(nonzero > 0);
        assert!(e_functor(&c, &small, 2, 0).unwrap().empty);
        assert!(!e_functor(&c, &small, 1, 0).unwrap().empty);
    }
}
