//! Cyclotomic quotients `H_n^λ(G) = H_n(G) / ⟨g_λ(x_1)⟩` with
//! `g_λ = ∏_i (x_1 - i)^{λ_i}` of degree `d`.
//!
//! Reduction: `ζ_1 = g_λ(x_1)` and `ζ_k = s_{k-1} ζ_{k-1} s_{k-1}` lie in the
//! ideal and equal `x_k^d - ρ_k` with `ρ_k` of total degree below `d`. A
//! monomial with `α_k ≥ d` is rewritten as `x^{α - d e_k} ρ_k`, which strictly
//! lowers the total degree. Right factors `g w` never need rewriting.

use std::collections::{BTreeMap, HashMap};
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hecke::{Exponent, HeckeAlgebra, HeckeElement, PbwKey};
use crate::linalg::{SparseMatrix, SparseVector};
use crate::perm::{factorial, Perm};
use crate::report::Report;
use crate::scalars::{Field, Fq};
use crate::wreath::{WreathAlgebra, WreathElement, WreathGroup};

/// A dominant weight `λ = Σ λ_i Λ_i`, stored as residue → multiplicity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycloWeight {
    pub lambda: BTreeMap<u32, u32>,
}

impl CycloWeight {
    /// The fundamental weight `Λ_i`.
    pub fn fundamental(i: u32) -> Self {
        CycloWeight { lambda: [(i, 1)].into() }
    }

    pub fn degree(&self) -> u32 {
        self.lambda.values().sum()
    }

    /// Reduces residues mod `p` and drops zero multiplicities.
    pub fn normalized(&self, p: u32) -> Self {
        let mut lambda = BTreeMap::new();
        for (&i, &m) in &self.lambda {
            if m > 0 {
                *lambda.entry(i % p).or_insert(0) += m;
            }
        }
        CycloWeight { lambda }
    }

    pub fn multiplicity(&self, i: u32) -> u32 {
        self.lambda.get(&i).copied().unwrap_or(0)
    }

    /// Coefficients of `g_λ`, lowest degree first.
    pub fn polynomial(&self, f: &Field) -> Vec<Fq> {
        let mut poly = vec![Fq::ONE];
        for (&i, &m) in &self.lambda {
            let root = f.embed_int(i as i64);
            for _ in 0..m {
                let mut next = vec![Fq::ZERO; poly.len() + 1];
                for (j, &c) in poly.iter().enumerate() {
                    next[j + 1] = f.add(next[j + 1], c);
                    next[j] = f.sub(next[j], f.mul(c, root));
                }
                poly = next;
            }
        }
        poly
    }

    /// `λ[k]` with `⟨h_i, λ[k]⟩ = λ_{i c_k}`, indices mod `p`.
    pub fn bracket(&self, p: u32, k: usize, c: u32) -> Result<CycloWeight> {
        if c.is_multiple_of(p) {
            return Err(Error::ZeroScalar { k });
        }
        let me = self.normalized(p);
        let lambda = (0..p)
            .map(|i| (i, me.multiplicity((i as u64 * c as u64 % p as u64) as u32)))
            .filter(|&(_, m)| m > 0)
            .collect();
        Ok(CycloWeight { lambda })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "lambda": self.lambda.iter().map(|(k, v)| (k.to_string(), *v)).collect::<BTreeMap<_, _>>() })
    }
}

impl FromStr for CycloWeight {
    type Err = Error;

    /// Accepts `Lambda<i>`, `{"lambda": {"0": 1}}` or `{"0": 1}`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(i) = s.strip_prefix("Lambda") {
            let i = i.parse().map_err(|_| Error::Invalid(format!("bad weight {s}")))?;
            return Ok(CycloWeight::fundamental(i));
        }
        let value: serde_json::Value = serde_json::from_str(s).map_err(|e| Error::Invalid(format!("bad weight {s}: {e}")))?;
        let map = value.get("lambda").unwrap_or(&value);
        let raw: BTreeMap<String, u32> =
            serde_json::from_value(map.clone()).map_err(|e| Error::Invalid(format!("bad weight {s}: {e}")))?;
        let mut lambda = BTreeMap::new();
        for (k, v) in raw {
            let i: u32 = k.parse().map_err(|_| Error::Invalid(format!("bad residue {k}")))?;
            lambda.insert(i, v);
        }
        Ok(CycloWeight { lambda })
    }
}

/// Left-multiplication matrices of the generators on the bounded basis.
#[derive(Clone, Debug)]
pub struct CycloGenerators {
    /// `x_k`, indexed by `k - 1`.
    pub x: Vec<SparseMatrix>,
    /// `s_i`, indexed by `i - 1`.
    pub s: Vec<SparseMatrix>,
    /// `a^{(j)}` for each group generator `a`: `(j, a, matrix)` with `j`
    /// one-indexed.
    pub g: Vec<(usize, usize, SparseMatrix)>,
}

#[derive(Debug)]
pub struct CycloAlgebra {
    hecke: HeckeAlgebra,
    weight: CycloWeight,
    d: u16,
    rho: Vec<HeckeElement>,
    memo: Mutex<HashMap<Exponent, HeckeElement>>,
    basis: Vec<PbwKey>,
    index: HashMap<PbwKey, usize>,
    gens: Option<CycloGenerators>,
}

/// All exponents with every entry below `d`.
fn bounded_exponents(n: usize, d: u16) -> Vec<Exponent> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix: Exponent| {
                (0..d).map(move |a| {
                    let mut next = prefix.clone();
                    next.push(a);
                    next
                })
            })
            .collect();
    }
    out
}

impl CycloAlgebra {
    /// Builds the reduction data and basis without generator matrices.
    pub fn new(wg: Arc<WreathGroup>, field: Field, weight: &CycloWeight) -> Result<CycloAlgebra> {
        let weight = weight.normalized(field.p());
        let d = weight.degree();
        if d == 0 {
            return Err(Error::Invalid("cyclotomic weight must have positive level".into()));
        }
        let d = u16::try_from(d).map_err(|_| Error::Invalid("weight level too large".into()))?;
        let hecke = HeckeAlgebra::new(wg.clone(), field.clone());
        let n = hecke.n();
        let coeffs = weight.polynomial(&field);
        let mut zeta = hecke.zero();
        for (j, &c) in coeffs.iter().enumerate() {
            let mut alpha = vec![0; n];
            alpha[0] = j as u16;
            zeta = hecke.add(&zeta, &hecke.scale(&hecke.x_pow(&alpha), c));
        }
        let mut rho = Vec::with_capacity(n);
        for k in 1..=n {
            if k > 1 {
                let s = hecke.s(k - 1)?;
                zeta = hecke.product(&[&s, &zeta, &s]);
            }
            let mut alpha = vec![0; n];
            alpha[k - 1] = d;
            let r = hecke.sub(&hecke.x_pow(&alpha), &zeta);
            if r.degree() >= d as u32 {
                return Err(Error::Invalid(format!("x_{k}^d is not the leading term of its ideal generator")));
            }
            rho.push(r);
        }
        let mut basis = Vec::new();
        for alpha in bounded_exponents(n, d) {
            for g in 0..wg.base_size() as u32 {
                for w in wg.perms() {
                    basis.push(PbwKey { alpha: alpha.clone(), g, w: w.clone() });
                }
            }
        }
        let index = basis.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect();
        Ok(CycloAlgebra { hecke, weight, d, rho, memo: Mutex::new(HashMap::new()), basis, index, gens: None })
    }

    pub fn hecke(&self) -> &HeckeAlgebra {
        &self.hecke
    }

    pub fn weight(&self) -> &CycloWeight {
        &self.weight
    }

    pub fn level(&self) -> u16 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.hecke.n()
    }

    pub fn field(&self) -> &Field {
        self.hecke.field()
    }

    pub fn basis(&self) -> &[PbwKey] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `d^n · n! · |G|^n`.
    pub fn expected_dim(&self) -> usize {
        let n = self.n();
        (self.d as usize).pow(n as u32) * factorial(n) * self.hecke.wreath().base_size()
    }

    pub fn basis_index(&self, key: &PbwKey) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn is_bounded(&self, a: &HeckeElement) -> bool {
        a.terms.keys().all(|k| k.alpha.iter().all(|&x| x < self.d))
    }

    fn budget(&self, degree: u32) -> usize {
        let n = self.n();
        10 * (degree as usize + 1) * n * factorial(n)
    }

    /// `a · g w` for a group element and permutation on the right.
    fn right_mul(&self, a: &HeckeElement, g: u32, w: &Perm) -> HeckeElement {
        let wg = self.hecke.wreath();
        let mut out = HeckeElement::zero(a.n);
        for (k, &c) in &a.terms {
            let key = PbwKey { alpha: k.alpha.clone(), g: wg.gn_mul(k.g, wg.act(&k.w, g)), w: k.w.compose(w) };
            out.terms.insert(key, c);
        }
        out
    }

    fn reduce_monomial(&self, alpha: &Exponent, steps: &mut usize, budget: usize) -> Result<HeckeElement> {
        if alpha.iter().all(|&a| a < self.d) {
            return Ok(self.hecke.x_pow(alpha));
        }
        if let Some(r) = self.memo.lock().expect("memo lock").get(alpha) {
            return Ok(r.clone());
        }
        *steps += 1;
        if *steps > budget {
            return Err(Error::NonTermination(budget));
        }
        let k = alpha.iter().rposition(|&a| a >= self.d).expect("unbounded entry");
        let mut rest = alpha.clone();
        rest[k] -= self.d;
        let rewritten = self.hecke.mul(&self.hecke.x_pow(&rest), &self.rho[k]);
        let mut out = self.hecke.zero();
        for (key, &c) in &rewritten.terms {
            let part = self.reduce_monomial(&key.alpha, steps, budget)?;
            out = self.hecke.add(&out, &self.hecke.scale(&self.right_mul(&part, key.g, &key.w), c));
        }
        self.memo.lock().expect("memo lock").insert(alpha.clone(), out.clone());
        Ok(out)
    }

    /// The image of `a` in the quotient, on the bounded basis.
    pub fn reduce(&self, a: &HeckeElement) -> Result<HeckeElement> {
        if a.n != self.n() {
            return Err(Error::Mismatch(format!("element of H_{} reduced in H_{}", a.n, self.n())));
        }
        let budget = self.budget(a.degree());
        let mut steps = 0;
        let mut out = self.hecke.zero();
        for (key, &c) in &a.terms {
            let part = self.reduce_monomial(&key.alpha, &mut steps, budget)?;
            out = self.hecke.add(&out, &self.hecke.scale(&self.right_mul(&part, key.g, &key.w), c));
        }
        Ok(out)
    }

    /// The product in the quotient.
    pub fn mul(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        self.reduce(&self.hecke.mul(a, b))
    }

    /// Coordinates of a bounded element.
    pub fn to_vector(&self, a: &HeckeElement) -> Result<SparseVector> {
        a.terms
            .iter()
            .map(|(k, &c)| {
                self.basis_index(k)
                    .map(|i| (i as u32, c))
                    .ok_or_else(|| Error::Invalid("element is not reduced".into()))
            })
            .collect()
    }

    fn left_matrix_by(&self, op: impl Fn(&HeckeElement) -> HeckeElement) -> Result<SparseMatrix> {
        let cols = self
            .basis
            .iter()
            .map(|k| self.to_vector(&self.reduce(&op(&self.hecke.monomial(k.clone(), Fq::ONE)))?))
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseMatrix::from_columns(self.dim(), cols))
    }

    /// Left multiplication by an element of `G^n`; no reduction is needed.
    pub fn group_matrix(&self, g: u32) -> SparseMatrix {
        let wg = self.hecke.wreath();
        let cols = self
            .basis
            .iter()
            .map(|k| {
                let moved = PbwKey { alpha: k.alpha.clone(), g: wg.gn_mul(g, k.g), w: k.w.clone() };
                [(self.index[&moved] as u32, Fq::ONE)].into()
            })
            .collect();
        SparseMatrix::from_columns(self.dim(), cols)
    }

    /// Left multiplication by `t_{i,i+1}`.
    pub fn t_matrix(&self, i: usize) -> SparseMatrix {
        let wg = self.hecke.wreath();
        let g = wg.group();
        let f = self.field();
        (0..g.order()).fold(SparseMatrix::zeros(self.dim()), |acc, h| {
            acc.add(f, &self.group_matrix(wg.gn_mul(wg.single(i - 1, h), wg.single(i, g.inv(h)))))
        })
    }

    pub fn generators(&self) -> &CycloGenerators {
        self.gens.as_ref().expect("generator matrices are built by build_cyclo")
    }

    fn build_generators(&mut self) -> Result<()> {
        let n = self.n();
        let h = self.hecke.clone();
        let mut x = Vec::with_capacity(n);
        for k in 1..=n {
            x.push(self.left_matrix_by(|b| {
                let mut out = b.clone();
                out.terms = b
                    .terms
                    .iter()
                    .map(|(key, &c)| {
                        let mut alpha = key.alpha.clone();
                        alpha[k - 1] += 1;
                        (PbwKey { alpha, g: key.g, w: key.w.clone() }, c)
                    })
                    .collect();
                out
            })?);
        }
        let mut s = Vec::with_capacity(n.saturating_sub(1));
        for i in 1..n {
            s.push(self.left_matrix_by(|b| h.left_mul_simple(i, b))?);
        }
        let wg = h.wreath().clone();
        let mut g = Vec::new();
        for j in 1..=n {
            for a in wg.group().generators() {
                g.push((j, a, self.group_matrix(wg.single(j - 1, a))));
            }
        }
        self.gens = Some(CycloGenerators { x, s, g });
        Ok(())
    }

    /// `L(x^α g w) e_1`, computed from the generator matrices alone.
    pub fn act_on_one(&self, key: &PbwKey) -> SparseVector {
        let f = self.field();
        let gens = self.generators();
        let mut v: SparseVector = [(self.index[&PbwKey::identity(self.n())] as u32, Fq::ONE)].into();
        for &i in key.w.reduced_word().iter().rev() {
            v = gens.s[i - 1].apply(f, &v);
        }
        v = self.group_matrix(key.g).apply(f, &v);
        for (k, &a) in key.alpha.iter().enumerate() {
            for _ in 0..a {
                v = gens.x[k].apply(f, &v);
            }
        }
        v
    }

    /// The defining relations and `g_λ(x_1) = 0` on the generator matrices.
    pub fn verify_relations(&self) -> Report {
        let f = self.field();
        let n = self.n();
        let gens = self.generators();
        let wg = self.hecke.wreath();
        let eq = |a: &SparseMatrix, b: &SparseMatrix| a.sub(f, b).is_zero();
        let m = |a: &SparseMatrix, b: &SparseMatrix| a.mul(f, b);
        let id = SparseMatrix::identity(self.dim());
        let mut r = Report::new();
        let mut ok = true;
        for a in &gens.x {
            for b in &gens.x {
                ok &= eq(&m(a, b), &m(b, a));
            }
            for (_, _, g) in &gens.g {
                ok &= eq(&m(a, g), &m(g, a));
            }
        }
        r.push("x's commute with each other and with G^n", ok);
        for i in 1..n {
            let s = &gens.s[i - 1];
            let t = self.t_matrix(i);
            let mut ok = eq(&m(s, s), &id);
            if i + 1 < n {
                let s2 = &gens.s[i];
                ok &= eq(&m(&m(s, s2), s), &m(&m(s2, s), s2));
            }
            for j in i + 2..n {
                ok &= eq(&m(s, &gens.s[j - 1]), &m(&gens.s[j - 1], s));
            }
            ok &= eq(&m(s, &gens.x[i - 1]), &m(&gens.x[i], s).sub(f, &t));
            for j in (1..=n).filter(|&j| j != i && j != i + 1) {
                ok &= eq(&m(s, &gens.x[j - 1]), &m(&gens.x[j - 1], s));
            }
            for (j, a, g) in &gens.g {
                let moved = self.group_matrix(wg.act_simple(i, wg.single(j - 1, *a)));
                ok &= eq(&m(s, g), &m(&moved, s));
            }
            r.push(format!("relations involving s_{i}"), ok);
        }
        let coeffs = self.weight.polynomial(f);
        let mut acc = SparseMatrix::zeros(self.dim());
        let mut power = id.clone();
        for &c in &coeffs {
            acc = acc.add(f, &power.scale(f, c));
            power = m(&gens.x[0], &power);
        }
        r.push("g_lambda(x_1) = 0", acc.is_zero());
        r
    }

    /// Number of basis vectors reproduced as `L(x^α g w) e_1`.
    pub fn cyclic_span_count(&self) -> usize {
        self.basis
            .iter()
            .enumerate()
            .filter(|(i, k)| {
                let v = self.act_on_one(k);
                v.len() == 1 && v.get(&(*i as u32)) == Some(&Fq::ONE)
            })
            .count()
    }

    /// Dimension of the subalgebra generated by `x_1..x_{n-1}`,
    /// `s_1..s_{n-2}` and `G^n`.
    ///
    /// Computed as the span of its action on `1`: the coordinate subspace
    /// on keys with `α_n = 0` and `w(n) = n` is shown to contain `1`, to be
    /// stable, and to be spanned by words applied to `1`.
    pub fn parabolic_subalgebra_dim(&self) -> Result<usize> {
        let n = self.n();
        let inside = |k: &PbwKey| k.alpha[n - 1] == 0 && k.w.apply(n - 1) == n - 1;
        let members: Vec<usize> = (0..self.dim()).filter(|&i| inside(&self.basis[i])).collect();
        let gens = self.generators();
        let mut mats: Vec<&SparseMatrix> = gens.x[..n - 1].iter().collect();
        mats.extend(gens.s[..n.saturating_sub(2)].iter());
        mats.extend(gens.g.iter().map(|(_, _, g)| g));
        for &i in &members {
            for a in &mats {
                if !a.column(i).iter().all(|&(r, _)| inside(&self.basis[r as usize])) {
                    return Err(Error::Invalid("parabolic span is not stable".into()));
                }
            }
        }
        let reached = members
            .iter()
            .filter(|&&i| {
                let v = self.act_on_one(&self.basis[i]);
                v.len() == 1 && v.contains_key(&(i as u32))
            })
            .count();
        if reached != members.len() {
            return Err(Error::DimensionMismatch { expected: members.len(), found: reached });
        }
        Ok(members.len())
    }

    /// Compares the quotient at level one with `FG_n` under `x_k ↦ ξ_k`.
    pub fn verify_group_algebra_iso(&self) -> Result<Report> {
        let mut r = Report::new();
        if self.d != 1 {
            return Err(Error::Invalid("the group-algebra comparison needs a level-one weight".into()));
        }
        let wg = self.hecke.wreath().clone();
        let alg = WreathAlgebra::new(wg.clone(), self.field().clone());
        let to_group: Vec<usize> =
            self.basis.iter().map(|k| wg.index(&WreathElement { g: k.g, w: k.w.clone() })).collect();
        let bijective = {
            let mut seen = vec![false; wg.order()];
            to_group.iter().for_each(|&i| seen[i] = true);
            to_group.len() == wg.order() && seen.iter().all(|&b| b)
        };
        r.push("basis matches G_n", bijective);
        let same = |ours: &SparseMatrix, theirs: &SparseMatrix| {
            (0..self.dim()).all(|j| {
                let mut a: Vec<(usize, Fq)> = ours.column(j).iter().map(|&(i, c)| (to_group[i as usize], c)).collect();
                a.sort();
                let b: Vec<(usize, Fq)> = theirs.column(to_group[j]).iter().map(|&(i, c)| (i as usize, c)).collect();
                a == b
            })
        };
        let gens = self.generators();
        for k in 1..=self.n() {
            let xi = alg.left_matrix(&alg.jucys_murphy(k)?);
            r.push(format!("x_{k} acts as xi_{k}"), same(&gens.x[k - 1], &xi));
        }
        for i in 1..self.n() {
            r.push(format!("s_{i} matches"), same(&gens.s[i - 1], &alg.left_matrix(&alg.s(i)?)));
        }
        for (j, a, g) in &gens.g {
            r.push(format!("group generator {a} in slot {j} matches"), same(g, &alg.left_matrix(&alg.slot_element(*j, *a))));
        }
        Ok(r)
    }
}

/// Builds the quotient with its generator matrices and certifies the
/// dimension `d^n n! |G|^n`.
pub fn build_cyclo(wg: Arc<WreathGroup>, field: Field, weight: &CycloWeight) -> Result<CycloAlgebra> {
    let mut c = CycloAlgebra::new(wg, field, weight)?;
    c.build_generators()?;
    let relations = c.verify_relations();
    if let Some(bad) = relations.failures().first() {
        return Err(Error::Invalid(format!("quotient matrices violate {}", bad.name)));
    }
    let found = c.cyclic_span_count();
    if found != c.expected_dim() {
        return Err(Error::DimensionMismatch { expected: c.expected_dim(), found });
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FiniteGroup;
    use crate::linalg::sparse_spin_dim;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn wreath(g: FiniteGroup, n: usize) -> Arc<WreathGroup> {
        WreathGroup::new(Arc::new(g), n).unwrap()
    }

    #[test]
    fn weight_parsing_and_polynomial() {
        let w: CycloWeight = "Lambda0".parse().unwrap();
        assert_eq!(w, CycloWeight::fundamental(0));
        let v: CycloWeight = r#"{"lambda": {"0": 1, "2": 1}}"#.parse().unwrap();
        assert_eq!(v.degree(), 2);
        let u: CycloWeight = r#"{"0": 1, "1": 1}"#.parse().unwrap();
        let f = Field::prime(3).unwrap();
        // x (x - 1) = x^2 - x
        assert_eq!(u.polynomial(&f), vec![Fq::ZERO, f.embed_int(-1), Fq::ONE]);
    }

    #[test]
    fn bracket_examples() {
        let l0 = CycloWeight::fundamental(0);
        assert_eq!(l0.bracket(3, 1, 2).unwrap(), l0);
        assert_eq!(CycloWeight::fundamental(1).bracket(3, 1, 2).unwrap(), CycloWeight::fundamental(2));
        assert_eq!(CycloWeight::fundamental(1).bracket(5, 1, 1).unwrap(), CycloWeight::fundamental(1));
        assert!(matches!(l0.bracket(3, 2, 3), Err(Error::ZeroScalar { k: 2 })));
    }

    #[test]
    fn quadratic_reduction_n1() {
        let w: CycloWeight = r#"{"0": 1, "1": 1}"#.parse().unwrap();
        let c = CycloAlgebra::new(wreath(FiniteGroup::trivial(), 1), Field::prime(5).unwrap(), &w).unwrap();
        let h = c.hecke();
        assert_eq!(c.reduce(&h.x_pow(&[2])).unwrap(), h.x_pow(&[1]));
        assert_eq!(c.reduce(&h.x_pow(&[5])).unwrap(), h.x_pow(&[1]));
    }

    #[test]
    fn level_one_kills_x1() {
        let c = CycloAlgebra::new(wreath(FiniteGroup::cyclic(2).unwrap(), 2), Field::prime(3).unwrap(), &CycloWeight::fundamental(0))
            .unwrap();
        let h = c.hecke();
        assert!(c.reduce(&h.x(1).unwrap()).unwrap().is_zero());
        let x2 = c.reduce(&h.x(2).unwrap()).unwrap();
        assert!(x2.terms.keys().all(|k| k.degree() == 0));
        assert_eq!(x2, h.t(1, 2).unwrap().terms.keys().fold(h.zero(), |acc, k| {
            h.add(&acc, &h.monomial(PbwKey { alpha: k.alpha.clone(), g: k.g, w: Perm::simple(2, 1) }, Fq::ONE))
        }));
    }

    #[test]
    fn dimensions() {
        let f3 = Field::prime(3).unwrap();
        let c = build_cyclo(wreath(FiniteGroup::cyclic(2).unwrap(), 2), f3.clone(), &CycloWeight::fundamental(0)).unwrap();
        assert_eq!(c.dim(), 8);
        let w2: CycloWeight = r#"{"0": 1, "1": 1}"#.parse().unwrap();
        let c = build_cyclo(wreath(FiniteGroup::cyclic(2).unwrap(), 2), f3, &w2).unwrap();
        assert_eq!(c.dim(), 32);
        assert_eq!(c.parabolic_subalgebra_dim().unwrap(), 2 * 4);
        let gens = c.generators();
        let mats = [&gens.x[0], &gens.g[0].2, &gens.g[1].2];
        let mut seed = vec![Fq::ZERO; c.dim()];
        seed[c.basis_index(&PbwKey::identity(2)).unwrap()] = Fq::ONE;
        assert_eq!(sparse_spin_dim(c.field(), c.dim(), &mats, vec![seed]), 8);
    }

    #[test]
    fn reduction_is_multiplicative() {
        let w: CycloWeight = r#"{"0": 1, "1": 1}"#.parse().unwrap();
        let c = build_cyclo(wreath(FiniteGroup::cyclic(2).unwrap(), 2), Field::prime(3).unwrap(), &w).unwrap();
        let h = c.hecke();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let a = h.random_element(&mut rng, 3, 3);
            let b = h.random_element(&mut rng, 3, 3);
            let direct = c.reduce(&h.mul(&a, &b)).unwrap();
            assert_eq!(direct, c.mul(&c.reduce(&a).unwrap(), &c.reduce(&b).unwrap()).unwrap());
            // The generator matrices give an independent route to the same image.
            let f = c.field();
            let mut via_matrices = SparseVector::new();
            for (k, &coef) in &a.terms {
                for (i, v) in c.act_on_one(k) {
                    let e = via_matrices.entry(i).or_insert(Fq::ZERO);
                    *e = f.add(*e, f.mul(coef, v));
                }
            }
            via_matrices.retain(|_, v| !v.is_zero());
            assert_eq!(c.to_vector(&c.reduce(&a).unwrap()).unwrap(), via_matrices);
        }
    }

    #[test]
    fn group_algebra_at_level_one() {
        for (g, n, p) in [(FiniteGroup::trivial(), 3, 5), (FiniteGroup::cyclic(2).unwrap(), 2, 3), (FiniteGroup::symmetric(3).unwrap(), 2, 2)] {
            let c = build_cyclo(wreath(g, n), Field::prime(p).unwrap(), &CycloWeight::fundamental(0)).unwrap();
            let r = c.verify_group_algebra_iso().unwrap();
            assert!(r.all_passed(), "{:?}", r.failures());
        }
    }
}
