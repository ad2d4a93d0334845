//! Decomposition of a module by the isotypic type of its restriction to
//! `G^n`: `M = ⊕_n̂ M_n̂` where `M_n̂` collects the types that are slot
//! permutations of `V(n̂)`, and `I_n̂M ⊂ M_n̂` is the `V(n̂)`-isotypic part.

use std::collections::BTreeMap;

use super::wreath_modules::{slot_types, RepContext};
use super::{g_name, MatrixModule};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::perm::factorial;

/// `(d_k/|G|) Σ_a χ_k(a⁻¹) M(a^{(j)})`.
pub fn slot_projection(ctx: &RepContext, m: &MatrixModule, j: usize, k: usize) -> Result<Matrix> {
    let f = &ctx.field;
    let g = &ctx.group;
    let irrep = &ctx.irreps[k];
    let scale = f.div(f.embed_int(irrep.dim as i64), f.embed_int(g.order() as i64))?;
    let mut acc = Matrix::zeros(m.dim, m.dim);
    for a in 0..g.order() {
        let chi = irrep.matrices[g.inv(a)].trace(f);
        acc = acc.add(f, &m.gen(&g_name(j, a)).scale(f, chi));
    }
    Ok(acc.scale(f, scale))
}

/// Projection onto the part of type `(k_1, …, k_n)`.
pub fn type_projection(ctx: &RepContext, m: &MatrixModule, types: &[usize]) -> Result<Matrix> {
    let f = &ctx.field;
    let mut acc = Matrix::identity(m.dim);
    for (j, &k) in types.iter().enumerate() {
        acc = acc.mul(f, &slot_projection(ctx, m, j + 1, k)?);
    }
    Ok(acc)
}

fn image(ctx: &RepContext, p: &Matrix) -> Subspace {
    Subspace::spanned_by(&ctx.field, p.rows(), p.columns())
}

#[derive(Clone, Debug)]
pub struct IsotypicPiece {
    pub composition: Vec<usize>,
    /// `I_n̂M`.
    pub isotypic: Subspace,
    /// `M_n̂`.
    pub component: Subspace,
}

fn distinct_arrangements(types: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut current = types.to_vec();
    current.sort_unstable();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (1..current.len()).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..current.len()).rev().find(|&j| current[j] > current[i - 1]).expect("successor exists");
        current.swap(i - 1, j);
        current[i..].reverse();
    }
}

/// All nonzero pieces, keyed by composition.
pub fn isotypic_decompose(ctx: &RepContext, m: &MatrixModule) -> Result<BTreeMap<Vec<usize>, IsotypicPiece>> {
    let f = &ctx.field;
    let n = m.n;
    let r = ctx.r();
    let mut out = BTreeMap::new();
    let mut total = 0;
    for comp in super::wreath_modules::compositions(n, r) {
        let types = slot_types(&comp);
        let p = type_projection(ctx, m, &types)?;
        if p.mul(f, &p) != p {
            return Err(Error::NotSemisimple(format!("type projection for {comp:?} is not idempotent")));
        }
        let isotypic = image(ctx, &p);
        let mut component = Subspace::new(m.dim);
        for arrangement in distinct_arrangements(&types) {
            for v in type_projection(ctx, m, &arrangement)?.columns() {
                component.insert(f, v);
            }
        }
        let cosets = factorial(n) / comp.iter().map(|&c| factorial(c)).product::<usize>();
        if component.dim() != cosets * isotypic.dim() {
            return Err(Error::NotSemisimple(format!(
                "component {comp:?} has dimension {} but the isotypic part has {}",
                component.dim(),
                isotypic.dim()
            )));
        }
        total += component.dim();
        if component.dim() > 0 {
            out.insert(comp.clone(), IsotypicPiece { composition: comp, isotypic, component });
        }
    }
    if total != m.dim {
        return Err(Error::NotSemisimple(format!("components sum to {total}, module has dimension {}", m.dim)));
    }
    Ok(out)
}
