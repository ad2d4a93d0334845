//! The wreath Hecke algebra `H_n(G)` in PBW normal form.
//!
//! Every element is a combination of keys `x^α g w` with `α ∈ ℤ_+^n`,
//! `g ∈ G^n`, `w ∈ S_n`. Products are computed by pushing the simple
//! reflections of the left factor's permutation through the right factor
//! with `s_i x^γ = x^{s_iγ} s_i + t_{i,i+1} ∂_i(x^γ)` and `s_i g = ˢⁱg s_i`.

pub mod center;
pub mod polymod;
pub mod tscalars;
pub mod verify;

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::scalars::{Field, Fq};
use crate::wreath::{GroupAlgebraElement, WreathGroup};

pub type Exponent = Vec<u16>;

/// The basis element `x^α g w`.
///
/// Keys are ordered by total degree, then `α` lexicographically, then `g`,
/// then `w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PbwKey {
    pub alpha: Exponent,
    pub g: u32,
    pub w: Perm,
}

impl PbwKey {
    pub fn degree(&self) -> u32 {
        self.alpha.iter().map(|&a| a as u32).sum()
    }

    pub fn identity(n: usize) -> Self {
        PbwKey { alpha: vec![0; n], g: 0, w: Perm::identity(n) }
    }
}

impl Ord for PbwKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.alpha.cmp(&other.alpha))
            .then_with(|| self.g.cmp(&other.g))
            .then_with(|| self.w.cmp(&other.w))
    }
}

impl PartialOrd for PbwKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of `H_n(G)`; equality is equality of normal forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    pub n: usize,
    pub terms: BTreeMap<PbwKey, Fq>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement { n, terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest total `x`-degree among the terms.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(PbwKey::degree).max().unwrap_or(0)
    }

    pub fn coeff(&self, key: &PbwKey) -> Fq {
        self.terms.get(key).copied().unwrap_or(Fq::ZERO)
    }

    pub(crate) fn add_term(&mut self, f: &Field, key: PbwKey, c: Fq) {
        add_into(&mut self.terms, f, key, c);
    }
}

fn add_into(terms: &mut BTreeMap<PbwKey, Fq>, f: &Field, key: PbwKey, c: Fq) {
    if c.is_zero() {
        return;
    }
    match terms.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let sum = f.add(*o.get(), c);
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

fn add_into_hash(terms: &mut HashMap<PbwKey, Fq>, f: &Field, key: PbwKey, c: Fq) {
    if c.is_zero() {
        return;
    }
    let e = terms.entry(key).or_insert(Fq::ZERO);
    *e = f.add(*e, c);
}

fn collect(n: usize, terms: HashMap<PbwKey, Fq>) -> HeckeElement {
    HeckeElement { n, terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
}

/// `∂_i(x^α) = (x^α - x^{s_iα}) / (x_{i+1} - x_i)` as integer-coefficient
/// monomials; `i` is one-indexed.
pub fn divided_difference(alpha: &[u16], i: usize) -> Vec<(Exponent, i64)> {
    let (a, b) = (alpha[i - 1], alpha[i]);
    let mut out = Vec::new();
    match a.cmp(&b) {
        Ordering::Equal => {}
        Ordering::Greater => {
            let k = a - b;
            for j in 0..k {
                let mut beta = alpha.to_vec();
                beta[i - 1] = b + k - 1 - j;
                beta[i] = b + j;
                out.push((beta, -1));
            }
        }
        Ordering::Less => {
            let k = b - a;
            for j in 0..k {
                let mut beta = alpha.to_vec();
                beta[i - 1] = a + j;
                beta[i] = a + k - 1 - j;
                out.push((beta, 1));
            }
        }
    }
    out
}

/// `H_n(G)` over a field.
#[derive(Clone, Debug)]
pub struct HeckeAlgebra {
    wg: Arc<WreathGroup>,
    field: Field,
    /// `t_{i,i+1}` as `G^n` indices, indexed by `i - 1`.
    t_terms: Vec<Vec<u32>>,
}

/// JSON form of one PBW term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub alpha: Vec<u16>,
    pub g: Vec<usize>,
    pub w: Perm,
    /// Coefficients of the field element over the prime field.
    pub coeff: Vec<u32>,
}

impl HeckeAlgebra {
    pub fn new(wg: Arc<WreathGroup>, field: Field) -> Self {
        let n = wg.n();
        let g = wg.group();
        let t_terms = (1..n)
            .map(|i| {
                (0..g.order())
                    .map(|h| wg.gn_mul(wg.single(i - 1, h), wg.single(i, g.inv(h))))
                    .collect()
            })
            .collect();
        HeckeAlgebra { wg, field, t_terms }
    }

    pub fn n(&self) -> usize {
        self.wg.n()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn wreath(&self) -> &Arc<WreathGroup> {
        &self.wg
    }

    fn check(&self, a: &HeckeElement) -> Result<()> {
        if a.n != self.n() {
            return Err(Error::Mismatch(format!("element of H_{} used in H_{}", a.n, self.n())));
        }
        Ok(())
    }

    fn check_index(&self, i: usize, max: usize) -> Result<()> {
        if i == 0 || i > max {
            return Err(Error::IndexOutOfRange { index: i, max });
        }
        Ok(())
    }

    pub fn zero(&self) -> HeckeElement {
        HeckeElement::zero(self.n())
    }

    pub fn scalar(&self, c: Fq) -> HeckeElement {
        self.monomial(PbwKey::identity(self.n()), c)
    }

    pub fn one(&self) -> HeckeElement {
        self.scalar(Fq::ONE)
    }

    pub fn monomial(&self, key: PbwKey, c: Fq) -> HeckeElement {
        let mut e = self.zero();
        e.add_term(&self.field, key, c);
        e
    }

    /// `x^α`.
    pub fn x_pow(&self, alpha: &[u16]) -> HeckeElement {
        let mut key = PbwKey::identity(self.n());
        key.alpha = alpha.to_vec();
        self.monomial(key, Fq::ONE)
    }

    /// `x_i`, one-indexed.
    pub fn x(&self, i: usize) -> Result<HeckeElement> {
        self.check_index(i, self.n())?;
        let mut alpha = vec![0; self.n()];
        alpha[i - 1] = 1;
        Ok(self.x_pow(&alpha))
    }

    /// `s_i`, `1 <= i < n`.
    pub fn s(&self, i: usize) -> Result<HeckeElement> {
        self.check_index(i, self.n().saturating_sub(1))?;
        Ok(self.perm(&Perm::simple(self.n(), i)))
    }

    pub fn perm(&self, w: &Perm) -> HeckeElement {
        self.monomial(PbwKey { alpha: vec![0; self.n()], g: 0, w: w.clone() }, Fq::ONE)
    }

    /// The group element of `G^n` with the given index.
    pub fn group_element(&self, g: u32) -> HeckeElement {
        self.monomial(PbwKey { alpha: vec![0; self.n()], g, w: Perm::identity(self.n()) }, Fq::ONE)
    }

    /// `a^{(j)}`, one-indexed slot.
    pub fn slot_element(&self, j: usize, a: usize) -> Result<HeckeElement> {
        self.check_index(j, self.n())?;
        Ok(self.group_element(self.wg.single(j - 1, a)))
    }

    /// `t_{ij} = Σ_h h^{(i)}(h⁻¹)^{(j)}`.
    pub fn t(&self, i: usize, j: usize) -> Result<HeckeElement> {
        self.check_index(i, self.n())?;
        self.check_index(j, self.n())?;
        if i == j {
            return Err(Error::Invalid("t_{ii} is not defined".into()));
        }
        let g = self.wg.group();
        let mut e = self.zero();
        for h in 0..g.order() {
            let k = self.wg.gn_mul(self.wg.single(i - 1, h), self.wg.single(j - 1, g.inv(h)));
            e.add_term(&self.field, PbwKey { alpha: vec![0; self.n()], g: k, w: Perm::identity(self.n()) }, Fq::ONE);
        }
        Ok(e)
    }

    /// `Ω_i = s_i(x_i - x_{i+1}) + t_{i,i+1}`.
    pub fn omega(&self, i: usize) -> Result<HeckeElement> {
        let diff = self.sub(&self.x(i)?, &self.x(i + 1)?);
        Ok(self.add(&self.mul(&self.s(i)?, &diff), &self.t(i, i + 1)?))
    }

    /// The image of a group algebra element of `FG_n`.
    pub fn from_group_algebra(&self, a: &GroupAlgebraElement) -> HeckeElement {
        let mut e = self.zero();
        for (x, &c) in &a.terms {
            e.add_term(&self.field, PbwKey { alpha: vec![0; self.n()], g: x.g, w: x.w.clone() }, c);
        }
        e
    }

    pub fn add(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        let mut out = a.clone();
        for (k, &c) in &b.terms {
            out.add_term(&self.field, k.clone(), c);
        }
        out
    }

    pub fn sub(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        let mut out = a.clone();
        for (k, &c) in &b.terms {
            out.add_term(&self.field, k.clone(), self.field.neg(c));
        }
        out
    }

    pub fn scale(&self, a: &HeckeElement, c: Fq) -> HeckeElement {
        let f = &self.field;
        HeckeElement {
            n: a.n,
            terms: a
                .terms
                .iter()
                .map(|(k, &v)| (k.clone(), f.mul(v, c)))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    /// `s_i · a`.
    pub fn left_mul_simple(&self, i: usize, a: &HeckeElement) -> HeckeElement {
        let f = &self.field;
        let mut out = HashMap::with_capacity(a.len() * 2);
        for (key, &c) in &a.terms {
            let mut alpha = key.alpha.clone();
            alpha.swap(i - 1, i);
            let moved = PbwKey { alpha, g: self.wg.act_simple(i, key.g), w: key.w.left_simple(i) };
            add_into_hash(&mut out, f, moved, c);
            for (beta, sign) in divided_difference(&key.alpha, i) {
                let coeff = f.mul(c, f.embed_int(sign));
                for &t in &self.t_terms[i - 1] {
                    let k = PbwKey { alpha: beta.clone(), g: self.wg.gn_mul(t, key.g), w: key.w.clone() };
                    add_into_hash(&mut out, f, k, coeff);
                }
            }
        }
        collect(a.n, out)
    }

    /// `w · a` for a permutation `w`.
    pub fn left_mul_perm(&self, w: &Perm, a: &HeckeElement) -> HeckeElement {
        w.reduced_word().iter().rev().fold(a.clone(), |acc, &i| self.left_mul_simple(i, &acc))
    }

    /// The product in PBW normal form.
    pub fn mul(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        let f = &self.field;
        let mut by_perm: BTreeMap<&Perm, Vec<(&PbwKey, Fq)>> = BTreeMap::new();
        for (k, &c) in &a.terms {
            by_perm.entry(&k.w).or_default().push((k, c));
        }
        let mut out = HashMap::new();
        for (w, left) in by_perm {
            let moved = self.left_mul_perm(w, b);
            for (lk, lc) in &left {
                for (rk, &rc) in &moved.terms {
                    let alpha: Exponent = lk.alpha.iter().zip(&rk.alpha).map(|(x, y)| x + y).collect();
                    let key = PbwKey { alpha, g: self.wg.gn_mul(lk.g, rk.g), w: rk.w.clone() };
                    add_into_hash(&mut out, f, key, f.mul(*lc, rc));
                }
            }
        }
        collect(a.n, out)
    }

    pub fn checked_mul(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn product(&self, factors: &[&HeckeElement]) -> HeckeElement {
        factors.iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    pub fn commutator(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        self.sub(&self.mul(a, b), &self.mul(b, a))
    }

    /// A random element with `terms` keys of degree at most `max_degree`.
    pub fn random_element(&self, rng: &mut impl Rng, terms: usize, max_degree: u16) -> HeckeElement {
        let n = self.n();
        let f = &self.field;
        let mut e = self.zero();
        for _ in 0..terms {
            let mut alpha = vec![0u16; n];
            let deg = rng.gen_range(0..=max_degree);
            for _ in 0..deg {
                alpha[rng.gen_range(0..n)] += 1;
            }
            let g = rng.gen_range(0..self.wg.base_size()) as u32;
            let w = self.wg.perms()[rng.gen_range(0..self.wg.perms().len())].clone();
            let c = Fq(rng.gen_range(1..f.order()));
            e.add_term(f, PbwKey { alpha, g, w }, c);
        }
        e
    }

    pub fn to_json(&self, a: &HeckeElement) -> Vec<TermJson> {
        a.terms
            .iter()
            .map(|(k, &c)| TermJson {
                alpha: k.alpha.clone(),
                g: self.wg.slots(k.g),
                w: k.w.clone(),
                coeff: self.field.coeffs(c),
            })
            .collect()
    }

    pub fn from_json(&self, terms: &[TermJson]) -> Result<HeckeElement> {
        let mut e = self.zero();
        for t in terms {
            if t.alpha.len() != self.n() || t.w.n() != self.n() {
                return Err(Error::Mismatch(format!("term of size {} in H_{}", t.alpha.len(), self.n())));
            }
            let key = PbwKey { alpha: t.alpha.clone(), g: self.wg.from_slots(&t.g)?, w: t.w.clone() };
            e.add_term(&self.field, key, self.field.from_coeffs(&t.coeff)?);
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FiniteGroup;

    pub(crate) fn algebra(group: FiniteGroup, n: usize, p: u32) -> HeckeAlgebra {
        let wg = WreathGroup::new(Arc::new(group), n).unwrap();
        HeckeAlgebra::new(wg, Field::prime(p).unwrap())
    }

    #[test]
    fn divided_difference_examples() {
        assert!(divided_difference(&[2, 2], 1).is_empty());
        assert_eq!(divided_difference(&[1, 0], 1), vec![(vec![0, 0], -1)]);
        let mut dd = divided_difference(&[0, 2], 1);
        dd.sort();
        assert_eq!(dd, vec![(vec![0, 1], 1), (vec![1, 0], 1)]);
    }

    #[test]
    fn defining_relation_examples() {
        let h = algebra(FiniteGroup::cyclic(2).unwrap(), 2, 3);
        let (s1, x1, x2, t) = (h.s(1).unwrap(), h.x(1).unwrap(), h.x(2).unwrap(), h.t(1, 2).unwrap());
        assert_eq!(h.mul(&s1, &x1), h.sub(&h.mul(&x2, &s1), &t));
        assert_eq!(h.mul(&s1, &s1), h.one());
        assert_eq!(h.mul(&s1, &x2), h.add(&h.mul(&x1, &s1), &t));
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn t_for_trivial_group_is_one() {
        let h = algebra(FiniteGroup::trivial(), 2, 5);
        assert_eq!(h.t(1, 2).unwrap(), h.one());
    }

    #[test]
    fn omega_expands() {
        let h = algebra(FiniteGroup::trivial(), 2, 5);
        let (s1, x1, x2) = (h.s(1).unwrap(), h.x(1).unwrap(), h.x(2).unwrap());
        let expected = h.add(&h.sub(&h.mul(&s1, &x1), &h.mul(&s1, &x2)), &h.one());
        assert_eq!(h.omega(1).unwrap(), expected);
    }

    #[test]
    fn index_errors() {
        let h = algebra(FiniteGroup::trivial(), 2, 5);
        assert!(matches!(h.x(3), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(h.s(2), Err(Error::IndexOutOfRange { .. })));
        let other = algebra(FiniteGroup::trivial(), 3, 5);
        assert!(matches!(h.checked_mul(&h.one(), &other.one()), Err(Error::Mismatch(_))));
    }

    #[test]
    fn json_round_trip() {
        use rand::SeedableRng;
        let h = algebra(FiniteGroup::symmetric(3).unwrap(), 2, 5);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let a = h.random_element(&mut rng, 4, 3);
        let json = serde_json::to_string(&h.to_json(&a)).unwrap();
        let back: Vec<TermJson> = serde_json::from_str(&json).unwrap();
        assert_eq!(h.from_json(&back).unwrap(), a);
    }
}
