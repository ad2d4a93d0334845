//! Finite groups given by Cayley tables, their conjugacy classes, and
//! split irreducible representations over a finite field.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{intertwiners, restrict, spin, Matrix, Subspace, Vector};
use crate::perm::{factorial, Perm};
use crate::scalars::{find_splitting_field, Field, FieldSpec, Fq};

/// Seed used for every randomized search in this module.
pub const IRREP_SEED: u64 = 0x5eed_0001;

/// A group named by a builtin family or by an explicit table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupSpec {
    Trivial,
    Cyclic { r: usize },
    Dihedral { r: usize },
    Symmetric { m: usize },
    Table { table: Vec<Vec<usize>> },
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Accepts `trivial`, `cyclic:R`, `dihedral:R`, `symmetric:M`, or JSON.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::Invalid(format!("group spec: {e}")));
        }
        let (kind, arg) = s.split_once(':').unwrap_or((s, ""));
        let num = || -> Result<usize> {
            arg.parse().map_err(|_| Error::Invalid(format!("group spec `{s}` needs a size")))
        };
        match kind {
            "trivial" => Ok(GroupSpec::Trivial),
            "cyclic" => Ok(GroupSpec::Cyclic { r: num()? }),
            "dihedral" => Ok(GroupSpec::Dihedral { r: num()? }),
            "symmetric" => Ok(GroupSpec::Symmetric { m: num()? }),
            _ => Err(Error::Invalid(format!("unknown group family `{kind}`"))),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Trivial => write!(f, "trivial"),
            GroupSpec::Cyclic { r } => write!(f, "cyclic:{r}"),
            GroupSpec::Dihedral { r } => write!(f, "dihedral:{r}"),
            GroupSpec::Symmetric { m } => write!(f, "symmetric:{m}"),
            GroupSpec::Table { table } => write!(f, "table({})", table.len()),
        }
    }
}

/// Largest supported group order.
pub const MAX_GROUP_ORDER: usize = 255;

/// A finite group on `0..order` with `0` the identity.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u8>,
    inverse: Vec<u8>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
    pub element_order: usize,
}

impl FiniteGroup {
    pub fn build(spec: &GroupSpec) -> Result<FiniteGroup> {
        match spec {
            GroupSpec::Trivial => FiniteGroup::cyclic(1),
            GroupSpec::Cyclic { r } => FiniteGroup::cyclic(*r),
            GroupSpec::Dihedral { r } => FiniteGroup::dihedral(*r),
            GroupSpec::Symmetric { m } => FiniteGroup::symmetric(*m),
            GroupSpec::Table { table } => FiniteGroup::from_table("table", table),
        }
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::cyclic(1).expect("trivial group")
    }

    pub fn cyclic(r: usize) -> Result<FiniteGroup> {
        if r == 0 {
            return Err(Error::InvalidTable("cyclic group of order 0".into()));
        }
        let table: Vec<Vec<usize>> = (0..r).map(|a| (0..r).map(|b| (a + b) % r).collect()).collect();
        FiniteGroup::from_table(&format!("C{r}"), &table)
    }

    /// Symmetries of a regular `r`-gon, order `2r`; index `k + r·f` is
    /// `ρ^k σ^f` with `σ ρ σ = ρ^{-1}`.
    pub fn dihedral(r: usize) -> Result<FiniteGroup> {
        if r == 0 {
            return Err(Error::InvalidTable("dihedral group of a 0-gon".into()));
        }
        let n = 2 * r;
        let table: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                let (a, f) = (x % r, x / r);
                (0..n)
                    .map(|y| {
                        let (b, g) = (y % r, y / r);
                        let k = if f == 0 { (a + b) % r } else { (a + r - b) % r };
                        k + r * ((f + g) % 2)
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(&format!("D{r}"), &table)
    }

    /// Permutations of `m` points indexed by Lehmer rank.
    pub fn symmetric(m: usize) -> Result<FiniteGroup> {
        let n = factorial(m);
        if n > MAX_GROUP_ORDER {
            return Err(Error::InvalidTable(format!("S{m} is too large")));
        }
        let perms: Vec<Perm> = Perm::all(m).collect();
        let table: Vec<Vec<usize>> =
            perms.iter().map(|a| perms.iter().map(|b| a.compose(b).rank()).collect()).collect();
        FiniteGroup::from_table(&format!("S{m}"), &table)
    }

    /// Validates the group axioms exhaustively.
    pub fn from_table(name: &str, table: &[Vec<usize>]) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 || n > MAX_GROUP_ORDER {
            return Err(Error::InvalidTable(format!("unsupported order {n}")));
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidTable("table is not square over 0..order".into()));
        }
        if (0..n).any(|a| table[0][a] != a || table[a][0] != a) {
            return Err(Error::InvalidTable("element 0 is not the identity".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidTable(format!("({a}·{b})·{c} ≠ {a}·({b}·{c})")));
                    }
                }
            }
        }
        let mut inverse = vec![0u8; n];
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == 0 && table[b][a] == 0)
                .ok_or_else(|| Error::InvalidTable(format!("{a} has no inverse")))?;
            inverse[a] = inv as u8;
        }
        let flat = table.iter().flatten().map(|&x| x as u8).collect();
        let mut g = FiniteGroup {
            name: name.to_string(),
            order: n,
            table: flat,
            inverse,
            classes: Vec::new(),
            class_of: Vec::new(),
        };
        g.compute_classes();
        Ok(g)
    }

    fn compute_classes(&mut self) {
        let n = self.order;
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let members: BTreeSet<usize> = (0..n).map(|h| self.conj(h, a)).collect();
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(ConjugacyClass {
                representative: a,
                members: members.into_iter().collect(),
                element_order: self.element_order(a),
            });
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `h a h⁻¹`.
    pub fn conj(&self, h: usize, a: usize) -> usize {
        self.mul(self.mul(h, a), self.inv(h))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<u64> {
        (0..self.order).map(|a| self.element_order(a) as u64).collect()
    }

    /// Classes in order of first appearance; the identity class is first.
    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    /// Classes whose elements have order prime to `p`.
    pub fn p_regular_classes(&self, p: u32) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&c| !self.classes[c].element_order.is_multiple_of(p as usize))
            .collect()
    }

    /// A generating set found greedily, smallest indices first.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut sub: BTreeSet<usize> = [0].into();
        for a in 1..self.order {
            if sub.contains(&a) {
                continue;
            }
            gens.push(a);
            let mut frontier: Vec<usize> = sub.iter().copied().collect();
            while let Some(x) = frontier.pop() {
                for &g in &gens {
                    let y = self.mul(x, g);
                    if sub.insert(y) {
                        frontier.push(y);
                    }
                }
            }
        }
        gens
    }

    /// The smallest field of characteristic `p` splitting this group.
    pub fn splitting_field(&self, p: u32) -> Result<FieldSpec> {
        if self.order.is_multiple_of(p as usize) {
            return Err(Error::ModularGroupOrder { p, order: self.order });
        }
        find_splitting_field(p, &self.element_orders())
    }

    /// Left regular representation `L(g) e_h = e_{gh}`.
    pub fn regular_matrix(&self, g: usize) -> Matrix {
        let n = self.order;
        let mut m = Matrix::zeros(n, n);
        for h in 0..n {
            m[(self.mul(g, h), h)] = Fq::ONE;
        }
        m
    }
}

/// An absolutely irreducible representation of a group over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irrep {
    pub label: usize,
    pub dim: usize,
    /// One matrix per group element, by element index.
    pub matrices: Vec<Matrix>,
}

impl Irrep {
    /// Trace on each conjugacy class.
    pub fn character(&self, f: &Field, g: &FiniteGroup) -> Vec<Fq> {
        g.classes().iter().map(|c| self.matrices[c.representative].trace(f)).collect()
    }
}

/// A complete list of irreducible representations when `p ∤ |G|`.
///
/// The trivial representation comes first, then the rest by dimension and
/// character values.
pub fn irreps(g: &FiniteGroup, f: &Field) -> Result<Vec<Irrep>> {
    let p = f.p();
    if g.order().is_multiple_of(p as usize) {
        return Err(Error::ModularGroupOrder { p, order: g.order() });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(IRREP_SEED);
    let n = g.order();
    let regular: Vec<Matrix> = (0..n).map(|a| g.regular_matrix(a)).collect();
    let gens = g.generators();
    let gen_mats: Vec<&Matrix> = gens.iter().map(|&a| &regular[a]).collect();
    let random_element = |rng: &mut ChaCha8Rng, support: &[usize]| -> Matrix {
        let mut acc = Matrix::zeros(n, n);
        for &a in support {
            let c = Fq(rng.gen_range(0..f.order()));
            acc = acc.add(f, &regular[a].scale(f, c));
        }
        acc
    };

    let class_count = g.classes().len();
    let class_sums: Vec<Vec<usize>> = g.classes().iter().map(|c| c.members.clone()).collect();
    let mut blocks: Option<Vec<Subspace>> = None;
    for _ in 0..64 {
        let mut z = Matrix::zeros(n, n);
        for members in &class_sums {
            let c = Fq(rng.gen_range(0..f.order()));
            for &a in members {
                z = z.add(f, &regular[a].scale(f, c));
            }
        }
        let eigen: Vec<Subspace> = f
            .elements()
            .map(|c| z.shift(f, c).nullspace(f))
            .filter(|k| !k.is_empty())
            .map(|k| Subspace::spanned_by(f, n, k))
            .collect();
        if eigen.len() == class_count && eigen.iter().map(Subspace::dim).sum::<usize>() == n {
            blocks = Some(eigen);
            break;
        }
    }
    let blocks =
        blocks.ok_or_else(|| Error::SplittingFailed("center did not split into distinct eigenvalues".into()))?;

    let all: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    for block in blocks {
        let d = (block.dim() as f64).sqrt().round() as usize;
        if d * d != block.dim() {
            return Err(Error::SplittingFailed(format!("block of dimension {} is not a square", block.dim())));
        }
        let mut found: Option<Subspace> = None;
        'search: for _ in 0..256 {
            let a = random_element(&mut rng, &all);
            let on_block = restrict(f, &a, &block)?;
            for c in f.elements() {
                let kernel = on_block.shift(f, c).nullspace(f);
                if kernel.len() != d {
                    continue;
                }
                let v: Vector = block.basis_matrix().mul_vec(f, &kernel[0]);
                let w = spin(f, n, &gen_mats, [v]);
                if w.dim() == d {
                    found = Some(w);
                    break 'search;
                }
            }
        }
        let w = found.ok_or_else(|| Error::SplittingFailed("no simple left ideal found in a block".into()))?;
        let matrices = regular.iter().map(|m| restrict(f, m, &w)).collect::<Result<Vec<_>>>()?;
        out.push(Irrep { label: 0, dim: d, matrices });
    }

    let trivial_char: Vec<Fq> = vec![Fq::ONE; class_count];
    out.sort_by_key(|r| {
        let ch = r.character(f, g);
        (ch != trivial_char, r.dim, ch)
    });
    for (k, r) in out.iter_mut().enumerate() {
        r.label = k;
    }
    validate_irreps(g, f, &out)?;
    Ok(out)
}

/// Checks multiplicativity, absolute irreducibility, pairwise
/// non-isomorphism and `Σ d² = |G|`.
pub fn validate_irreps(g: &FiniteGroup, f: &Field, list: &[Irrep]) -> Result<()> {
    let n = g.order();
    let gens = g.generators();
    for r in list {
        if r.matrices[0] != Matrix::identity(r.dim) {
            return Err(Error::SplittingFailed(format!("irrep {} sends 1 to a non-identity", r.label)));
        }
        for a in 0..n {
            for b in 0..n {
                if r.matrices[g.mul(a, b)] != r.matrices[a].mul(f, &r.matrices[b]) {
                    return Err(Error::SplittingFailed(format!("irrep {} is not multiplicative", r.label)));
                }
            }
        }
    }
    for (i, r) in list.iter().enumerate() {
        for (j, s) in list.iter().enumerate() {
            let src: Vec<&Matrix> = gens.iter().map(|&a| &r.matrices[a]).collect();
            let dst: Vec<&Matrix> = gens.iter().map(|&a| &s.matrices[a]).collect();
            let hom = intertwiners(f, r.dim, s.dim, &src, &dst).len();
            let expected = usize::from(i == j);
            if hom != expected {
                return Err(Error::SplittingFailed(format!("dim Hom(V{i}, V{j}) = {hom}")));
            }
        }
    }
    let total: usize = list.iter().map(|r| r.dim * r.dim).sum();
    if total != n {
        return Err(Error::DimensionMismatch { expected: n, found: total });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_orders_and_classes() {
        assert_eq!(FiniteGroup::trivial().order(), 1);
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!((s3.order(), s3.classes().len()), (6, 3));
        let d4 = FiniteGroup::dihedral(4).unwrap();
        assert_eq!((d4.order(), d4.classes().len()), (8, 5));
        assert_eq!(FiniteGroup::cyclic(5).unwrap().classes().len(), 5);
    }

    #[test]
    fn classes_by_brute_force() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        for c in s3.classes() {
            for &m in &c.members {
                assert_eq!(s3.element_order(m), c.element_order);
                for h in 0..6 {
                    assert!(c.members.contains(&s3.conj(h, m)));
                }
            }
        }
        let sizes: BTreeSet<usize> = s3.classes().iter().map(|c| c.members.len()).collect();
        assert_eq!(sizes, [1, 2, 3].into());
    }

    #[test]
    fn non_associative_table_rejected() {
        // identity row/column intact, but 1·1 = 1 breaks inverses and 1·(1·2) vs (1·1)·2
        let table = vec![vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 1]];
        assert!(matches!(FiniteGroup::from_table("bad", &table), Err(Error::InvalidTable(_))));
    }

    #[test]
    fn p_regular_class_counts() {
        assert_eq!(FiniteGroup::trivial().p_regular_classes(2).len(), 1);
        assert_eq!(FiniteGroup::cyclic(4).unwrap().p_regular_classes(2).len(), 1);
        assert_eq!(FiniteGroup::symmetric(3).unwrap().p_regular_classes(3).len(), 2);
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.p_regular_classes(5).len(), s3.classes().len());
    }

    #[test]
    fn spec_strings_parse() {
        assert_eq!("cyclic:2".parse::<GroupSpec>().unwrap(), GroupSpec::Cyclic { r: 2 });
        assert_eq!(
            r#"{"kind":"symmetric","m":3}"#.parse::<GroupSpec>().unwrap(),
            GroupSpec::Symmetric { m: 3 }
        );
        assert!("klein".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn cyclic_two_over_gf3() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let f = Field::new(&g.splitting_field(3).unwrap()).unwrap();
        let list = irreps(&g, &f).unwrap();
        assert_eq!(list.len(), 2);
        assert_eq!(list[0].character(&f, &g), vec![Fq::ONE, Fq::ONE]);
        assert_eq!(list[1].character(&f, &g), vec![Fq::ONE, f.embed_int(-1)]);
    }

    #[test]
    fn symmetric_three_over_gf5_matches_catalog() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let f = Field::new(&g.splitting_field(5).unwrap()).unwrap();
        let list = irreps(&g, &f).unwrap();
        let dims: Vec<usize> = list.iter().map(|r| r.dim).collect();
        assert_eq!(dims, vec![1, 1, 2]);
        // Hand-computed characters, classes ordered {e}, transpositions, 3-cycles.
        let order_of = |cls: usize| g.classes()[cls].element_order;
        let expected = |k: usize, cls: usize| -> i64 {
            match (k, order_of(cls)) {
                (0, _) => 1,
                (1, 2) => -1,
                (1, _) => 1,
                (2, 1) => 2,
                (2, 2) => 0,
                (2, _) => -1,
                _ => unreachable!(),
            }
        };
        for (k, r) in list.iter().enumerate() {
            let ch = r.character(&f, &g);
            for (cls, &v) in ch.iter().enumerate() {
                assert_eq!(v, f.embed_int(expected(k, cls)), "irrep {k}, class {cls}");
            }
        }
    }

    #[test]
    fn cyclic_irreps_catalog() {
        // C_r over a field with a primitive r-th root ζ: characters a ↦ ζ^{ka}.
        for (r, p) in [(3usize, 7u32), (4, 5), (5, 11)] {
            let g = FiniteGroup::cyclic(r).unwrap();
            let f = Field::new(&g.splitting_field(p).unwrap()).unwrap();
            let list = irreps(&g, &f).unwrap();
            assert_eq!(list.len(), r);
            let values: BTreeSet<Vec<Fq>> = list.iter().map(|x| x.character(&f, &g)).collect();
            let zeta = f.elements().find(|&z| f.mult_order(z) == Some(r as u64)).unwrap();
            let expected: BTreeSet<Vec<Fq>> =
                (0..r).map(|k| (0..r).map(|a| f.pow(zeta, (k * a) as u64)).collect()).collect();
            assert_eq!(values, expected);
        }
    }

    #[test]
    fn trivial_and_modular_cases() {
        let g = FiniteGroup::trivial();
        let f = Field::prime(2).unwrap();
        let list = irreps(&g, &f).unwrap();
        assert_eq!((list.len(), list[0].dim), (1, 1));
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert!(matches!(irreps(&s3, &f), Err(Error::ModularGroupOrder { .. })));
    }

    #[test]
    fn dihedral_over_split_field() {
        let g = FiniteGroup::dihedral(4).unwrap();
        let f = Field::new(&g.splitting_field(3).unwrap()).unwrap();
        let dims: Vec<usize> = irreps(&g, &f).unwrap().iter().map(|r| r.dim).collect();
        assert_eq!(dims, vec![1, 1, 1, 1, 2]);
    }
}
