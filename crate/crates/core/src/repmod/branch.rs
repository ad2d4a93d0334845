//! Socle of the restriction of simple `FG_n`-modules to `G_{n−1} × G`,
//! with each summand `D' ⊗ V_k` colored by the eigenvalue `a` of the last
//! Jucys–Murphy element and the residue `i = a·c_k⁻¹`.

use serde::Serialize;

use super::wreath_modules::{jucys_murphy_matrix, simple_modules, RepContext, SimpleLabel};
use super::{g_name, hom, s_name, Algebra, MatrixModule};
use crate::error::{Error, Result};
use crate::hecke::tscalars::c_scalars;
use crate::linalg::{eigenvalues, Matrix, Subspace, Vector};
use crate::report::Report;
use crate::wreath::p_regular_type_count;

/// One summand `D' ⊗ V_k` of a socle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchEdge {
    pub from: SimpleLabel,
    pub to: SimpleLabel,
    /// Zero-indexed irreducible of `G` in the last slot.
    pub k: usize,
    /// Field code of the Jucys–Murphy eigenvalue.
    pub eigenvalue: u32,
    /// `a·c_k⁻¹` when it lies in the prime subring.
    pub residue: Option<u32>,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct BranchReport {
    pub n: usize,
    pub edges: Vec<BranchEdge>,
    #[serde(skip)]
    pub checks: Report,
}

/// Generator names of `F(G_{n−1} × G)` inside `FG_n`.
pub fn restricted_names(ctx: &RepContext, n: usize) -> Vec<String> {
    let mut names: Vec<String> = (1..n.saturating_sub(1)).map(s_name).collect();
    names.extend(ctx.base_names(n));
    names
}

/// The outer tensor product `D' ⊗ V_k` as a `G_{n−1} × G`-module.
pub fn product_simple(ctx: &RepContext, smaller: &MatrixModule, n: usize, k: usize) -> MatrixModule {
    let f = &ctx.field;
    let irrep = &ctx.irreps[k];
    let id_v = Matrix::identity(irrep.dim);
    let id_d = Matrix::identity(smaller.dim);
    let mut out = MatrixModule::new(Algebra::GroupAlgebra, n, smaller.dim * irrep.dim);
    for i in 1..n.saturating_sub(1) {
        out.generators.insert(s_name(i), smaller.gen(&s_name(i)).kron(f, &id_v));
    }
    for a in 0..ctx.group.order() {
        for j in 1..n {
            out.generators.insert(g_name(j, a), smaller.gen(&g_name(j, a)).kron(f, &id_v));
        }
        out.generators.insert(g_name(n, a), id_d.kron(f, &irrep.matrices[a]));
    }
    out
}

/// Simple `FG_{n−1}`-modules; `G_0` is trivial and has the one-dimensional module.
fn smaller_simples(ctx: &RepContext, n: usize) -> Result<Vec<(SimpleLabel, MatrixModule)>> {
    if n == 1 {
        let label = SimpleLabel { partitions: vec![vec![]; ctx.r()] };
        return Ok(vec![(label, MatrixModule::new(Algebra::GroupAlgebra, 0, 1))]);
    }
    let simples = simple_modules(ctx, n - 1)?;
    let expected = p_regular_type_count(&ctx.group, ctx.field.p(), n - 1);
    if simples.len() != expected {
        return Err(Error::IncompleteSimpleList(format!(
            "{} simple modules for n = {} but {expected} p-regular classes",
            simples.len(),
            n - 1
        )));
    }
    Ok(simples)
}

fn flatten(m: &Matrix) -> Vector {
    (0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect()
}

/// The socle summands of `res m` for one simple `m` of `FG_n`.
pub fn socle(
    ctx: &RepContext,
    label: &SimpleLabel,
    m: &MatrixModule,
    smaller: &[(SimpleLabel, MatrixModule)],
    checks: &mut Report,
) -> Result<Vec<BranchEdge>> {
    let f = &ctx.field;
    let n = m.n;
    let names = restricted_names(ctx, n);
    let scalars = c_scalars(&ctx.group, f)?;
    let xi = jucys_murphy_matrix(ctx, m, n);
    let mut images = Subspace::new(m.dim);
    let mut summed = 0;
    let mut edges = Vec::new();
    for (from, d) in smaller {
        for k in 0..ctx.r() {
            let e = product_simple(ctx, d, n, k);
            let basis = hom(f, &e, m, &names)?;
            if basis.is_empty() {
                continue;
            }
            summed += basis.len() * e.dim;
            for phi in &basis {
                for v in phi.columns() {
                    images.insert(f, v);
                }
            }
            // ξ_n commutes with G_{n−1} × G, so it acts on the Hom space.
            let span = Subspace::spanned_by(f, m.dim * e.dim, basis.iter().map(flatten));
            let cols = basis
                .iter()
                .map(|phi| {
                    span.coordinates(f, &flatten(&xi.mul(f, phi)))
                        .ok_or_else(|| Error::Mismatch("ξ_n does not preserve the Hom space".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            let action = Matrix::from_columns(basis.len(), &cols);
            let spectrum = eigenvalues(f, &action);
            let found: usize = spectrum.iter().map(|(_, mult)| mult).sum();
            if found != basis.len() {
                return Err(Error::Mismatch(format!("ξ_{n} has eigenvalues outside GF({}) on a Hom space", f.order())));
            }
            let c_inv = f.inv(scalars[k].value).map_err(|_| Error::ZeroScalar { k: k + 1 })?;
            for (a, multiplicity) in spectrum {
                edges.push(BranchEdge {
                    from: from.clone(),
                    to: label.clone(),
                    k,
                    eigenvalue: a.code(),
                    residue: f.as_int(f.mul(a, c_inv)),
                    multiplicity,
                });
            }
        }
    }
    checks.push_detail(
        format!("socle of res {label:?} is a direct sum"),
        images.dim() == summed,
        format!("images span {} of {summed}", images.dim()),
    );
    checks.push(format!("socle of res {label:?} is nonzero"), summed > 0);
    Ok(edges)
}

/// Branching data for all simple `FG_n`-modules.
pub fn branch(ctx: &RepContext, n: usize) -> Result<BranchReport> {
    if n == 0 {
        return Err(Error::Invalid("branching needs n ≥ 1".into()));
    }
    let smaller = smaller_simples(ctx, n)?;
    let mut checks = Report::new();
    let mut edges = Vec::new();
    for (label, m) in simple_modules(ctx, n)? {
        edges.extend(socle(ctx, &label, &m, &smaller, &mut checks)?);
    }
    checks.push("socle multiplicities are at most one", edges.iter().all(|e| e.multiplicity <= 1));
    checks.push("every eigenvalue is integral after rescaling", edges.iter().all(|e| e.residue.is_some()));
    Ok(BranchReport { n, edges, checks })
}
