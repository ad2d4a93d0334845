//! Modules over `FG_n` induced from Young-type subgroups
//! `G_n̂ = G^n ⋊ (S_{n_1} × ⋯ × S_{n_r})`, and the simple modules
//! `D^{μ·}_n̂ = ind (V_1^{⊗n_1} ⊗ D^{μ¹}) ⊗ ⋯ ⊗ (V_r^{⊗n_r} ⊗ D^{μʳ})`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::specht::specht_simple;
use super::{g_name, s_name, Algebra, MatrixModule};
use crate::error::{Error, Result};
use crate::groups::{irreps, FiniteGroup, Irrep};
use crate::linalg::Matrix;
use crate::partition::{p_regular_partitions, Partition};
use crate::perm::{factorial, Perm};
use crate::report::Report;
use crate::scalars::{Field, Fq};

/// A group together with a splitting field and its irreducibles.
#[derive(Clone, Debug)]
pub struct RepContext {
    pub group: Arc<FiniteGroup>,
    pub field: Field,
    pub irreps: Vec<Irrep>,
}

impl RepContext {
    /// Uses the smallest splitting field of `G` in characteristic `p`.
    pub fn new(group: Arc<FiniteGroup>, p: u32) -> Result<RepContext> {
        let field = Field::new(&group.splitting_field(p)?)?;
        let irreps = irreps(&group, &field)?;
        Ok(RepContext { group, field, irreps })
    }

    pub fn r(&self) -> usize {
        self.irreps.len()
    }

    /// Generator names of `FG_n`.
    pub fn group_algebra_names(&self, n: usize) -> Vec<String> {
        let mut names: Vec<String> = (1..n).map(s_name).collect();
        for j in 1..=n {
            names.extend((0..self.group.order()).map(|a| g_name(j, a)));
        }
        names
    }

    /// Names of the `G^n` generators only.
    pub fn base_names(&self, n: usize) -> Vec<String> {
        (1..=n).flat_map(|j| (0..self.group.order()).map(move |a| g_name(j, a))).collect()
    }
}

/// The irreducible in each slot for the composition `n̂`.
pub fn slot_types(composition: &[usize]) -> Vec<usize> {
    composition.iter().enumerate().flat_map(|(k, &m)| std::iter::repeat_n(k, m)).collect()
}

/// Simple reflections `s_i` lying in the Young subgroup `S_n̂`.
pub fn young_simple_indices(composition: &[usize]) -> Vec<usize> {
    let types = slot_types(composition);
    (1..types.len()).filter(|&i| types[i - 1] == types[i]).collect()
}

/// Minimal-length representatives `τ` of the left cosets `τ S_n̂`.
pub fn coset_representatives(composition: &[usize]) -> Vec<Perm> {
    let n: usize = composition.iter().sum();
    let types = slot_types(composition);
    Perm::all(n)
        .filter(|t| (1..n).all(|i| types[i - 1] != types[i] || t.apply(i - 1) < t.apply(i)))
        .collect()
}

/// Splits `σ` as `τ π` with `τ` a minimal coset representative and `π ∈ S_n̂`.
pub fn coset_split(composition: &[usize], sigma: &Perm) -> (Perm, Perm) {
    let n = sigma.n();
    let mut images: Vec<u8> = sigma.images().to_vec();
    let mut start = 0;
    for &m in composition {
        images[start..start + m].sort_unstable();
        start += m;
    }
    let tau = Perm::from_vec(images).expect("sorted blocks form a permutation");
    let pi = tau.inverse().compose(sigma);
    debug_assert_eq!(pi.n(), n);
    (tau, pi)
}

/// `V(n̂) = V_1^{⊗n_1} ⊗ ⋯ ⊗ V_r^{⊗n_r}` with matrices for `g{j}.{a}`.
pub struct TensorSpace {
    pub types: Vec<usize>,
    pub dims: Vec<usize>,
    pub dim: usize,
}

impl TensorSpace {
    pub fn new(ctx: &RepContext, composition: &[usize]) -> TensorSpace {
        let types = slot_types(composition);
        let dims: Vec<usize> = types.iter().map(|&k| ctx.irreps[k].dim).collect();
        let dim = dims.iter().product();
        TensorSpace { types, dims, dim }
    }

    /// `⊗_j ρ_{k_j}(g_j)`.
    pub fn group_matrix(&self, ctx: &RepContext, slots: &[usize]) -> Matrix {
        let f = &ctx.field;
        slots
            .iter()
            .zip(&self.types)
            .fold(Matrix::identity(1), |acc, (&a, &k)| acc.kron(f, &ctx.irreps[k].matrices[a]))
    }

    /// `a` in slot `j` (one-indexed), identity elsewhere.
    pub fn slot_matrix(&self, ctx: &RepContext, j: usize, a: usize) -> Matrix {
        let mut slots = vec![0; self.types.len()];
        slots[j - 1] = a;
        self.group_matrix(ctx, &slots)
    }

    /// Place permutation `v_1 ⊗ ⋯ ⊗ v_n ↦ v_{π⁻¹(1)} ⊗ ⋯ ⊗ v_{π⁻¹(n)}`;
    /// `π` must preserve the slot types.
    pub fn place_matrix(&self, pi: &Perm) -> Matrix {
        let n = self.types.len();
        let mut m = Matrix::zeros(self.dim, self.dim);
        for src in 0..self.dim {
            let mut digits = vec![0; n];
            let mut rest = src;
            for j in (0..n).rev() {
                digits[j] = rest % self.dims[j];
                rest /= self.dims[j];
            }
            let mut moved = vec![0; n];
            for j in 0..n {
                moved[pi.apply(j)] = digits[j];
            }
            let dst = moved.iter().zip(&self.dims).fold(0, |acc, (&d, &size)| acc * size + d);
            m[(dst, src)] = Fq::ONE;
        }
        m
    }
}

/// Matrices of `V(n̂)` as an `FG^n`-module under the `g{j}.{a}` names.
pub fn tensor_module(ctx: &RepContext, composition: &[usize]) -> MatrixModule {
    let n: usize = composition.iter().sum();
    let space = TensorSpace::new(ctx, composition);
    let mut m = MatrixModule::new(Algebra::GroupAlgebra, n, space.dim);
    for j in 1..=n {
        for a in 0..ctx.group.order() {
            m.generators.insert(g_name(j, a), space.slot_matrix(ctx, j, a));
        }
    }
    m
}

/// `π ∈ S_n̂` acting on a Young-subgroup module through its `s{i}` matrices.
fn young_perm_matrix(f: &Field, u: &MatrixModule, pi: &Perm) -> Matrix {
    pi.reduced_word().iter().fold(Matrix::identity(u.dim), |acc, &i| acc.mul(f, u.gen(&s_name(i))))
}

/// `ind_{G_n̂}^{G_n} (V(n̂) ⊗ U)` for a module `U` over `F S_n̂` given by its
/// `s{i}` matrices (global indices inside blocks).
pub fn induce_from_young(ctx: &RepContext, composition: &[usize], u: &MatrixModule) -> Result<MatrixModule> {
    if composition.len() != ctx.r() {
        return Err(Error::SizeMismatch(format!("composition has {} parts for {} irreducibles", composition.len(), ctx.r())));
    }
    let f = &ctx.field;
    let n: usize = composition.iter().sum();
    for i in young_simple_indices(composition) {
        if u.get(&s_name(i)).is_none() {
            return Err(Error::Mismatch(format!("Young module lacks s{i}")));
        }
    }
    let space = TensorSpace::new(ctx, composition);
    let reps = coset_representatives(composition);
    let block = space.dim * u.dim;
    let dim = reps.len() * block;
    let rep_index = |t: &Perm| reps.iter().position(|r| r == t).expect("coset representative");
    let g = &ctx.group;
    let act = |slots: &[usize], sigma: &Perm| -> Matrix {
        let mut m = Matrix::zeros(dim, dim);
        for (c, tau) in reps.iter().enumerate() {
            let (t2, pi) = coset_split(composition, &sigma.compose(tau));
            // h = ^{t2⁻¹} g, so h_j = g_{t2(j)}.
            let h: Vec<usize> = (0..n).map(|j| slots[t2.apply(j)]).collect();
            let local = space.group_matrix(ctx, &h).mul(f, &space.place_matrix(&pi)).kron(f, &young_perm_matrix(f, u, &pi));
            let r = rep_index(&t2);
            for i in 0..block {
                for j in 0..block {
                    m[(r * block + i, c * block + j)] = local[(i, j)];
                }
            }
        }
        m
    };
    let mut out = MatrixModule::new(Algebra::GroupAlgebra, n, dim);
    let identity_slots = vec![0; n];
    for i in 1..n {
        out.generators.insert(s_name(i), act(&identity_slots, &Perm::simple(n, i)));
    }
    for j in 1..=n {
        for a in 0..g.order() {
            let mut slots = identity_slots.clone();
            slots[j - 1] = a;
            out.generators.insert(g_name(j, a), act(&slots, &Perm::identity(n)));
        }
    }
    Ok(out)
}

/// Label of a simple `FG_n`-module: a composition `n̂` and a `p`-regular
/// partition of each part.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SimpleLabel {
    pub partitions: Vec<Partition>,
}

impl SimpleLabel {
    pub fn composition(&self) -> Vec<usize> {
        self.partitions.iter().map(|p| p.iter().sum()).collect()
    }

    pub fn n(&self) -> usize {
        self.composition().iter().sum()
    }
}

/// `D^{μ¹} ⊗ ⋯ ⊗ D^{μʳ}` as a module over `S_n̂` with global `s{i}` names.
pub fn young_tensor(f: &Field, label: &SimpleLabel) -> Result<MatrixModule> {
    let n = label.n();
    let mut factors = Vec::new();
    for mu in &label.partitions {
        factors.push(specht_simple(f, mu)?);
    }
    let dims: Vec<usize> = factors.iter().map(|m| m.dim).collect();
    let total: usize = dims.iter().product();
    let mut out = MatrixModule::new(Algebra::Symmetric, n, total);
    let mut offset = 0;
    for (k, factor) in factors.iter().enumerate() {
        for local in 1..factor.n {
            let mut m = Matrix::identity(1);
            for (l, other) in factors.iter().enumerate() {
                let piece = if l == k { factor.gen(&s_name(local)).clone() } else { Matrix::identity(other.dim) };
                m = m.kron(f, &piece);
            }
            out.generators.insert(s_name(offset + local), m);
        }
        offset += factor.n;
    }
    Ok(out)
}

/// The simple module `D^{μ·}_n̂`.
pub fn simple_wreath_module(ctx: &RepContext, label: &SimpleLabel) -> Result<MatrixModule> {
    if label.partitions.len() != ctx.r() {
        return Err(Error::SizeMismatch(format!("{} partitions for {} irreducibles", label.partitions.len(), ctx.r())));
    }
    induce_from_young(ctx, &label.composition(), &young_tensor(&ctx.field, label)?)
}

/// All compositions of `n` into `r` non-negative parts.
pub fn compositions(n: usize, r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for mut rest in compositions(n - first, r - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Labels of all simple `FG_n`-modules.
pub fn simple_labels(ctx: &RepContext, n: usize) -> Vec<SimpleLabel> {
    let p = ctx.field.p();
    let mut out = Vec::new();
    for comp in compositions(n, ctx.r()) {
        let mut partial: Vec<Vec<Partition>> = vec![vec![]];
        for &m in &comp {
            let options = p_regular_partitions(m, p);
            partial = partial
                .into_iter()
                .flat_map(|prefix| {
                    options.iter().map(move |mu| {
                        let mut next = prefix.clone();
                        next.push(mu.clone());
                        next
                    })
                })
                .collect();
        }
        out.extend(partial.into_iter().map(|partitions| SimpleLabel { partitions }));
    }
    out
}

pub fn simple_modules(ctx: &RepContext, n: usize) -> Result<Vec<(SimpleLabel, MatrixModule)>> {
    simple_labels(ctx, n).into_iter().map(|l| Ok((l.clone(), simple_wreath_module(ctx, &l)?))).collect()
}

/// Checks the defining relations of `FG_n` on a module.
pub fn verify_group_algebra_module(ctx: &RepContext, m: &MatrixModule) -> Report {
    let f = &ctx.field;
    let g = &ctx.group;
    let n = m.n;
    let id = Matrix::identity(m.dim);
    let mut r = Report::new();
    let mut ok = true;
    for j in 1..=n {
        ok &= m.gen(&g_name(j, 0)) == &id;
        for a in 0..g.order() {
            for b in 0..g.order() {
                ok &= m.gen(&g_name(j, a)).mul(f, m.gen(&g_name(j, b))) == *m.gen(&g_name(j, g.mul(a, b)));
            }
            for k in j + 1..=n {
                for &b in &g.generators() {
                    let (x, y) = (m.gen(&g_name(j, a)), m.gen(&g_name(k, b)));
                    ok &= x.mul(f, y) == y.mul(f, x);
                }
            }
        }
    }
    r.push("G^n relations", ok);
    let mut ok = true;
    for i in 1..n {
        let s = m.gen(&s_name(i));
        ok &= s.mul(f, s) == id;
        if i + 1 < n {
            let t = m.gen(&s_name(i + 1));
            ok &= s.mul(f, t).mul(f, s) == t.mul(f, s).mul(f, t);
        }
        for k in i + 2..n {
            let t = m.gen(&s_name(k));
            ok &= s.mul(f, t) == t.mul(f, s);
        }
        for j in 1..=n {
            let target = if j == i { i + 1 } else if j == i + 1 { i } else { j };
            for a in 0..g.order() {
                ok &= s.mul(f, m.gen(&g_name(j, a))).mul(f, s) == *m.gen(&g_name(target, a));
            }
        }
    }
    r.push("S_n relations and the twisted action on G^n", ok);
    r
}

/// `ξ_k = Σ_{i<k} Σ_g g^{(i)} (g⁻¹)^{(k)} (i,k)` acting on `m`.
pub fn jucys_murphy_matrix(ctx: &RepContext, m: &MatrixModule, k: usize) -> Matrix {
    let f = &ctx.field;
    let g = &ctx.group;
    let mut acc = Matrix::zeros(m.dim, m.dim);
    for i in 1..k {
        let swap = m.perm_matrix(f, &Perm::transposition(m.n, i - 1, k - 1));
        let t = (0..g.order()).fold(Matrix::zeros(m.dim, m.dim), |t, h| {
            t.add(f, &m.gen(&g_name(i, h)).mul(f, m.gen(&g_name(k, g.inv(h)))))
        });
        acc = acc.add(f, &t.mul(f, &swap));
    }
    acc
}

/// `[S_n : S_n̂] · Π d_k^{n_k} · Π dim D^{μ^k}` predicted for a label.
pub fn predicted_dim(ctx: &RepContext, label: &SimpleLabel) -> Result<usize> {
    let comp = label.composition();
    let index = factorial(label.n()) / comp.iter().map(|&m| factorial(m)).product::<usize>();
    let tensor: usize = comp.iter().enumerate().map(|(k, &m)| ctx.irreps[k].dim.pow(m as u32)).product();
    let mut young = 1;
    for mu in &label.partitions {
        young *= specht_simple(&ctx.field, mu)?.dim;
    }
    Ok(index * tensor * young)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FiniteGroup;
    use crate::repmod::{hom, is_isomorphic};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ctx(g: FiniteGroup, p: u32) -> RepContext {
        RepContext::new(Arc::new(g), p).unwrap()
    }

    #[test]
    fn coset_split_round_trip() {
        let comp = [2, 1];
        assert_eq!(coset_representatives(&comp).len(), 3);
        for sigma in Perm::all(3) {
            let (t, pi) = coset_split(&comp, &sigma);
            assert_eq!(t.compose(&pi), sigma);
            assert!(coset_representatives(&comp).contains(&t));
            assert!(pi.apply(2) == 2);
        }
    }

    #[test]
    fn n_one_gives_irreducibles() {
        let c = ctx(FiniteGroup::symmetric(3).unwrap(), 5);
        for (k, irrep) in c.irreps.iter().enumerate() {
            let mut parts = vec![vec![]; c.r()];
            parts[k] = vec![1];
            let m = simple_wreath_module(&c, &SimpleLabel { partitions: parts }).unwrap();
            assert_eq!(m.dim, irrep.dim);
            for a in 0..6 {
                assert_eq!(m.gen(&g_name(1, a)), &irrep.matrices[a]);
            }
        }
    }

    #[test]
    fn c2_simples_are_valid_and_complete() {
        let c = ctx(FiniteGroup::cyclic(2).unwrap(), 5);
        let simples = simple_modules(&c, 2).unwrap();
        let dims: Vec<usize> = simples.iter().map(|(_, m)| m.dim).collect();
        assert_eq!(dims.iter().map(|d| d * d).sum::<usize>(), 8);
        assert!(dims.contains(&2));
        let names = c.group_algebra_names(2);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for (i, (label, m)) in simples.iter().enumerate() {
            assert!(verify_group_algebra_module(&c, m).all_passed(), "{label:?}");
            assert_eq!(m.dim, predicted_dim(&c, label).unwrap());
            assert_eq!(hom(&c.field, m, m, &names).unwrap().len(), 1);
            for (other, _) in simples.iter().enumerate().skip(i + 1) {
                assert!(!is_isomorphic(&c.field, m, &simples[other].1, &names, &mut rng).unwrap());
            }
        }
    }

    #[test]
    fn s3_wreath_simples_sum_of_squares() {
        let c = ctx(FiniteGroup::symmetric(3).unwrap(), 5);
        let total: usize = simple_modules(&c, 2).unwrap().iter().map(|(_, m)| m.dim * m.dim).sum();
        assert_eq!(total, 72);
    }

    #[test]
    fn modular_symmetric_part() {
        let c = ctx(FiniteGroup::trivial(), 2);
        let simples = simple_modules(&c, 3).unwrap();
        assert_eq!(simples.iter().map(|(_, m)| m.dim).collect::<Vec<_>>(), vec![1, 2]);
        for (_, m) in &simples {
            assert!(verify_group_algebra_module(&c, m).all_passed());
        }
    }
}
