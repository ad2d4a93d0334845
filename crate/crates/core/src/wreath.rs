//! The wreath product `G_n = G^n ⋊ S_n`, its conjugacy types, p-regular
//! class counts, and the group algebra `FG_n` with Jucys–Murphy elements.
//!
//! Multiplication is `(g, w)(h, τ) = (g · ʷh, wτ)` where
//! `(ʷh)_i = h_{w⁻¹(i)}`. An element `g ∈ G^n` is stored as the integer
//! `Σ_j g_j |G|^j`, slot `1` least significant.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::perm::{factorial, Perm};
use crate::report::Report;
use crate::scalars::{Field, Fq};

/// Largest `|G|^n` for which the `G^n` multiplication table is cached.
const TABLE_LIMIT: usize = 1296;

/// `G_n` for a fixed `G` and `n`, with cached arithmetic on `G^n`.
#[derive(Debug)]
pub struct WreathGroup {
    group: Arc<FiniteGroup>,
    n: usize,
    base: usize,
    mul_table: Option<Vec<u32>>,
    /// `act[rank(w)][g] = ʷg`.
    act_table: Vec<Vec<u32>>,
    perms: Vec<Perm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathElement {
    pub g: u32,
    pub w: Perm,
}

/// JSON form of a [`WreathElement`]: slot entries and one-indexed `w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WreathElementJson {
    pub g: Vec<usize>,
    pub w: Perm,
}

impl WreathGroup {
    pub fn new(group: Arc<FiniteGroup>, n: usize) -> Result<Arc<WreathGroup>> {
        let order = group.order();
        let base = order
            .checked_pow(n as u32)
            .filter(|&b| b <= u32::MAX as usize && b.saturating_mul(factorial(n)) <= 1 << 26)
            .ok_or_else(|| Error::Invalid(format!("|G|^n too large for |G| = {order}, n = {n}")))?;
        let mut wg = WreathGroup {
            group,
            n,
            base,
            mul_table: None,
            act_table: Vec::new(),
            perms: Perm::all(n).collect(),
        };
        wg.act_table = wg
            .perms
            .iter()
            .map(|w| (0..base as u32).map(|g| wg.act_slow(w, g)).collect())
            .collect();
        if base <= TABLE_LIMIT {
            let mut table = Vec::with_capacity(base * base);
            for a in 0..base as u32 {
                for b in 0..base as u32 {
                    table.push(wg.gn_mul_slow(a, b));
                }
            }
            wg.mul_table = Some(table);
        }
        Ok(Arc::new(wg))
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `|G|^n`.
    pub fn base_size(&self) -> usize {
        self.base
    }

    /// `|G_n| = |G|^n n!`.
    pub fn order(&self) -> usize {
        self.base * self.perms.len()
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    pub fn slots(&self, g: u32) -> Vec<usize> {
        let order = self.group.order() as u32;
        let mut x = g;
        (0..self.n)
            .map(|_| {
                let s = x % order;
                x /= order;
                s as usize
            })
            .collect()
    }

    pub fn from_slots(&self, slots: &[usize]) -> Result<u32> {
        if slots.len() != self.n {
            return Err(Error::SizeMismatch(format!("{} slots for n = {}", slots.len(), self.n)));
        }
        let order = self.group.order();
        if let Some(&bad) = slots.iter().find(|&&s| s >= order) {
            return Err(Error::IndexOutOfRange { index: bad, max: order - 1 });
        }
        Ok(slots.iter().rev().fold(0u32, |acc, &s| acc * order as u32 + s as u32))
    }

    /// Entry in the zero-indexed slot `j`.
    pub fn slot(&self, g: u32, j: usize) -> usize {
        let order = self.group.order() as u32;
        ((g / order.pow(j as u32)) % order) as usize
    }

    /// `a^{(j)}`: `a` in the zero-indexed slot `j`, identity elsewhere.
    pub fn single(&self, j: usize, a: usize) -> u32 {
        a as u32 * (self.group.order() as u32).pow(j as u32)
    }

    fn gn_mul_slow(&self, a: u32, b: u32) -> u32 {
        let (sa, sb) = (self.slots(a), self.slots(b));
        let prod: Vec<usize> = sa.iter().zip(&sb).map(|(&x, &y)| self.group.mul(x, y)).collect();
        self.from_slots(&prod).unwrap()
    }

    /// Product in `G^n`.
    pub fn gn_mul(&self, a: u32, b: u32) -> u32 {
        match &self.mul_table {
            Some(t) => t[a as usize * self.base + b as usize],
            None => self.gn_mul_slow(a, b),
        }
    }

    pub fn gn_inv(&self, a: u32) -> u32 {
        let inv: Vec<usize> = self.slots(a).iter().map(|&x| self.group.inv(x)).collect();
        self.from_slots(&inv).unwrap()
    }

    fn act_slow(&self, w: &Perm, g: u32) -> u32 {
        let s = self.slots(g);
        let mut out = vec![0usize; self.n];
        for (j, &x) in s.iter().enumerate() {
            out[w.apply(j)] = x;
        }
        self.from_slots(&out).unwrap()
    }

    /// `ʷg`, so that `(ʷg)_{w(j)} = g_j`.
    pub fn act(&self, w: &Perm, g: u32) -> u32 {
        self.act_table[w.rank()][g as usize]
    }

    /// `ˢⁱg` for the simple reflection `s_i`, `1 <= i < n`.
    pub fn act_simple(&self, i: usize, g: u32) -> u32 {
        let order = self.group.order() as u32;
        let lo = order.pow(i as u32 - 1);
        let a = (g / lo) % order;
        let b = (g / (lo * order)) % order;
        g - a * lo - b * lo * order + b * lo + a * lo * order
    }

    pub fn identity(&self) -> WreathElement {
        WreathElement { g: 0, w: Perm::identity(self.n) }
    }

    pub fn mul(&self, x: &WreathElement, y: &WreathElement) -> WreathElement {
        WreathElement { g: self.gn_mul(x.g, self.act(&x.w, y.g)), w: x.w.compose(&y.w) }
    }

    pub fn inverse(&self, x: &WreathElement) -> WreathElement {
        let winv = x.w.inverse();
        WreathElement { g: self.act(&winv, self.gn_inv(x.g)), w: winv }
    }

    pub fn checked_mul(&self, x: &WreathElement, y: &WreathElement) -> Result<WreathElement> {
        if x.w.n() != self.n || y.w.n() != self.n {
            return Err(Error::SizeMismatch(format!(
                "elements of S_{} and S_{} in G_{}",
                x.w.n(),
                y.w.n(),
                self.n
            )));
        }
        Ok(self.mul(x, y))
    }

    /// Dense index in `0..|G_n|`.
    pub fn index(&self, x: &WreathElement) -> usize {
        x.g as usize * self.perms.len() + x.w.rank()
    }

    pub fn element(&self, idx: usize) -> WreathElement {
        let nf = self.perms.len();
        WreathElement { g: (idx / nf) as u32, w: self.perms[idx % nf].clone() }
    }

    pub fn elements(&self) -> impl Iterator<Item = WreathElement> + '_ {
        (0..self.order()).map(|i| self.element(i))
    }

    /// `s_1, …, s_{n-1}` followed by `a^{(1)}` for generators `a` of `G`.
    pub fn generators(&self) -> Vec<WreathElement> {
        let mut gens: Vec<WreathElement> = (1..self.n)
            .map(|i| WreathElement { g: 0, w: Perm::simple(self.n, i) })
            .collect();
        if self.n > 0 {
            gens.extend(
                self.group
                    .generators()
                    .into_iter()
                    .map(|a| WreathElement { g: self.single(0, a), w: Perm::identity(self.n) }),
            );
        }
        gens
    }

    pub fn to_json(&self, x: &WreathElement) -> WreathElementJson {
        WreathElementJson { g: self.slots(x.g), w: x.w.clone() }
    }

    pub fn from_json(&self, j: &WreathElementJson) -> Result<WreathElement> {
        if j.w.n() != self.n {
            return Err(Error::SizeMismatch(format!("permutation of {} points for n = {}", j.w.n(), self.n)));
        }
        Ok(WreathElement { g: self.from_slots(&j.g)?, w: j.w.clone() })
    }

    /// Action on `G × {0..n-1}`: `(g, w)·(h, i) = (g_{w(i)} h, w(i))`,
    /// with the point `(h, i)` encoded as `h + |G| i`.
    pub fn permutation_image(&self, x: &WreathElement) -> Vec<usize> {
        let order = self.group.order();
        let slots = self.slots(x.g);
        (0..order * self.n)
            .map(|pt| {
                let (h, i) = (pt % order, pt / order);
                let wi = x.w.apply(i);
                self.group.mul(slots[wi], h) + order * wi
            })
            .collect()
    }

    pub fn element_order(&self, x: &WreathElement) -> usize {
        let id = self.identity();
        let mut y = x.clone();
        let mut k = 1;
        while y != id {
            y = self.mul(&y, x);
            k += 1;
        }
        k
    }

    /// The type: for each class of `G`, the partition formed by the
    /// lengths of cycles whose cycle product lies in that class. The cycle
    /// `(i_1 … i_k)` with `w(i_j) = i_{j+1}` has cycle product
    /// `g_{i_k} ⋯ g_{i_1}`.
    pub fn type_of(&self, x: &WreathElement) -> WreathType {
        let g = &self.group;
        let slots = self.slots(x.g);
        let mut parts = vec![Vec::new(); g.classes().len()];
        for cycle in x.w.cycles() {
            let product = cycle.iter().fold(0usize, |acc, &i| g.mul(slots[i], acc));
            parts[g.class_of(product)].push(cycle.len());
        }
        WreathType::new(parts)
    }

    /// Orbits of `G_n` acting on itself by conjugation, as sorted index lists.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let gens = self.generators();
        let inv_gens: Vec<WreathElement> = gens.iter().map(|x| self.inverse(x)).collect();
        let mut seen = vec![false; self.order()];
        let mut classes = Vec::new();
        for start in 0..self.order() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(idx) = queue.pop_front() {
                let x = self.element(idx);
                for (h, hinv) in gens.iter().zip(&inv_gens) {
                    let y = self.index(&self.mul(&self.mul(h, &x), hinv));
                    if !seen[y] {
                        seen[y] = true;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes
    }
}

/// A partition-valued function on the conjugacy classes of `G`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WreathType(pub Vec<Vec<usize>>);

impl WreathType {
    pub fn new(mut parts: Vec<Vec<usize>>) -> Self {
        for p in parts.iter_mut() {
            p.sort_unstable_by(|a, b| b.cmp(a));
        }
        WreathType(parts)
    }

    pub fn size(&self) -> usize {
        self.0.iter().flatten().sum()
    }
}

/// Partitions of `n` with parts in decreasing order, each part accepted by `allow`.
pub fn partitions_with(n: usize, allow: &dyn Fn(usize) -> bool) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, allow: &dyn Fn(usize) -> bool, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            if allow(part) {
                cur.push(part);
                go(rest - part, part, allow, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, n, allow, &mut Vec::new(), &mut out);
    out
}

/// Every type of size `n` supported on the p-regular classes of `G` with
/// no part divisible by `p`.
pub fn p_regular_types(g: &FiniteGroup, p: u32, n: usize) -> Vec<WreathType> {
    let classes = g.p_regular_classes(p);
    let allow = |k: usize| !k.is_multiple_of(p as usize);
    let by_size: Vec<Vec<Vec<usize>>> = (0..=n).map(|m| partitions_with(m, &allow)).collect();
    let mut out = Vec::new();
    fn go(
        idx: usize,
        rest: usize,
        classes: &[usize],
        by_size: &[Vec<Vec<usize>>],
        cur: &mut Vec<Vec<usize>>,
        out: &mut Vec<WreathType>,
    ) {
        if idx == classes.len() {
            if rest == 0 {
                out.push(WreathType::new(cur.clone()));
            }
            return;
        }
        for m in 0..=rest {
            for part in &by_size[m] {
                cur[classes[idx]] = part.clone();
                go(idx + 1, rest - m, classes, by_size, cur, out);
            }
        }
        cur[classes[idx]] = Vec::new();
    }
    let mut cur = vec![Vec::new(); g.classes().len()];
    go(0, n, &classes, &by_size, &mut cur, &mut out);
    out
}

pub fn p_regular_type_count(g: &FiniteGroup, p: u32, n: usize) -> usize {
    p_regular_types(g, p, n).len()
}

/// Coefficients of `∏_{p ∤ m} (1 - q^m)^{-|G_{p*}|}` up to `q^max`.
pub fn class_count_series(g: &FiniteGroup, p: u32, max: usize) -> Vec<u128> {
    let c = g.p_regular_classes(p).len();
    let mut coeffs = vec![0u128; max + 1];
    coeffs[0] = 1;
    for m in (1..=max).filter(|m| m % p as usize != 0) {
        for _ in 0..c {
            // multiply by 1/(1 - q^m)
            for k in m..=max {
                coeffs[k] += coeffs[k - m];
            }
        }
    }
    coeffs
}

/// Number of conjugacy classes of `G_n` whose elements have order prime
/// to `p`, by exhaustive enumeration.
pub fn brute_force_p_regular_classes(wg: &WreathGroup, p: u32) -> usize {
    wg.conjugacy_classes()
        .iter()
        .filter(|cls| !wg.element_order(&wg.element(cls[0])).is_multiple_of(p as usize))
        .count()
}

/// Sparse element of `FG_n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    pub terms: BTreeMap<WreathElement, Fq>,
}

impl GroupAlgebraElement {
    pub fn zero() -> Self {
        GroupAlgebraElement::default()
    }

    pub fn basis(x: WreathElement) -> Self {
        GroupAlgebraElement { terms: [(x, Fq::ONE)].into() }
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

    fn add_term(&mut self, f: &Field, x: WreathElement, c: Fq) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(x) {
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
}

/// `FG_n` over a field.
#[derive(Clone, Debug)]
pub struct WreathAlgebra {
    pub wg: Arc<WreathGroup>,
    pub field: Field,
}

impl WreathAlgebra {
    pub fn new(wg: Arc<WreathGroup>, field: Field) -> Self {
        WreathAlgebra { wg, field }
    }

    pub fn n(&self) -> usize {
        self.wg.n()
    }

    pub fn one(&self) -> GroupAlgebraElement {
        GroupAlgebraElement::basis(self.wg.identity())
    }

    pub fn element(&self, x: WreathElement) -> GroupAlgebraElement {
        GroupAlgebraElement::basis(x)
    }

    /// `s_i`, `1 <= i < n`.
    pub fn s(&self, i: usize) -> Result<GroupAlgebraElement> {
        if i == 0 || i >= self.n() {
            return Err(Error::IndexOutOfRange { index: i, max: self.n().saturating_sub(1) });
        }
        Ok(self.element(WreathElement { g: 0, w: Perm::simple(self.n(), i) }))
    }

    /// `a^{(j)}` for one-indexed slot `j`.
    pub fn slot_element(&self, j: usize, a: usize) -> GroupAlgebraElement {
        self.element(WreathElement { g: self.wg.single(j - 1, a), w: Perm::identity(self.n()) })
    }

    pub fn add(&self, a: &GroupAlgebraElement, b: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut out = a.clone();
        for (x, &c) in &b.terms {
            out.add_term(&self.field, x.clone(), c);
        }
        out
    }

    pub fn sub(&self, a: &GroupAlgebraElement, b: &GroupAlgebraElement) -> GroupAlgebraElement {
        self.add(a, &self.scale(b, self.field.neg(Fq::ONE)))
    }

    pub fn scale(&self, a: &GroupAlgebraElement, c: Fq) -> GroupAlgebraElement {
        let f = &self.field;
        GroupAlgebraElement {
            terms: a
                .terms
                .iter()
                .map(|(x, &v)| (x.clone(), f.mul(v, c)))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn mul(&self, a: &GroupAlgebraElement, b: &GroupAlgebraElement) -> GroupAlgebraElement {
        let f = &self.field;
        let mut acc: BTreeMap<WreathElement, Fq> = BTreeMap::new();
        for (x, &c) in &a.terms {
            for (y, &d) in &b.terms {
                let e = acc.entry(self.wg.mul(x, y)).or_insert(Fq::ZERO);
                *e = f.add(*e, f.mul(c, d));
            }
        }
        acc.retain(|_, v| !v.is_zero());
        GroupAlgebraElement { terms: acc }
    }

    /// `t_{ij} = Σ_h h^{(i)} (h⁻¹)^{(j)}`, one-indexed, `i ≠ j`.
    pub fn t(&self, i: usize, j: usize) -> Result<GroupAlgebraElement> {
        let n = self.n();
        if i == 0 || j == 0 || i > n || j > n || i == j {
            return Err(Error::IndexOutOfRange { index: i.max(j), max: n });
        }
        let g = self.wg.group();
        let mut out = GroupAlgebraElement::zero();
        for h in 0..g.order() {
            let elem = self.wg.gn_mul(self.wg.single(i - 1, h), self.wg.single(j - 1, g.inv(h)));
            out.add_term(&self.field, WreathElement { g: elem, w: Perm::identity(n) }, Fq::ONE);
        }
        Ok(out)
    }

    /// `ξ_k = Σ_{i<k} Σ_{g∈G} (g^{(i)}(g⁻¹)^{(k)}, (i,k))`.
    pub fn jucys_murphy(&self, k: usize) -> Result<GroupAlgebraElement> {
        let n = self.n();
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k, max: n });
        }
        let mut out = GroupAlgebraElement::zero();
        for i in 1..k {
            let swap = self.element(WreathElement { g: 0, w: Perm::transposition(n, i - 1, k - 1) });
            out = self.add(&out, &self.mul(&self.t(i, k)?, &swap));
        }
        Ok(out)
    }

    /// Left multiplication by `a` as a matrix on the basis of `G_n` in
    /// [`WreathGroup::index`] order.
    pub fn left_matrix(&self, a: &GroupAlgebraElement) -> crate::linalg::SparseMatrix {
        let dim = self.wg.order();
        let f = &self.field;
        let cols = (0..dim)
            .map(|j| {
                let y = self.wg.element(j);
                let mut col = crate::linalg::SparseVector::new();
                for (x, &c) in &a.terms {
                    let e = col.entry(self.wg.index(&self.wg.mul(x, &y)) as u32).or_insert(Fq::ZERO);
                    *e = f.add(*e, c);
                }
                col
            })
            .collect();
        crate::linalg::SparseMatrix::from_columns(dim, cols)
    }
}

/// Checks the Jucys–Murphy identities in `FG_n`: the `ξ_k` commute,
/// commute with `G^n`, `s_iξ_i = ξ_{i+1}s_i - t_{i,i+1}`, and
/// `s_iξ_j = ξ_js_i` for `j ∉ {i, i+1}`.
pub fn verify_jm_identities(alg: &WreathAlgebra) -> Result<Report> {
    let n = alg.n();
    let g = alg.wg.group();
    let xi: Vec<GroupAlgebraElement> = (1..=n).map(|k| alg.jucys_murphy(k)).collect::<Result<_>>()?;
    let mut report = Report::new();
    for i in 0..n {
        for j in i + 1..n {
            let ok = alg.mul(&xi[i], &xi[j]) == alg.mul(&xi[j], &xi[i]);
            report.push(format!("xi{}·xi{} = xi{}·xi{}", i + 1, j + 1, j + 1, i + 1), ok);
        }
    }
    for k in 0..n {
        let ok = (1..=n).all(|slot| {
            g.generators().iter().all(|&a| {
                let h = alg.slot_element(slot, a);
                alg.mul(&h, &xi[k]) == alg.mul(&xi[k], &h)
            })
        });
        report.push(format!("G^n commutes with xi{}", k + 1), ok);
    }
    for i in 1..n {
        let s = alg.s(i)?;
        let lhs = alg.mul(&s, &xi[i - 1]);
        let rhs = alg.sub(&alg.mul(&xi[i], &s), &alg.t(i, i + 1)?);
        report.push(format!("s{i}·xi{i} = xi{}·s{i} - t{i},{}", i + 1, i + 1), lhs == rhs);
        for j in (1..=n).filter(|&j| j != i && j != i + 1) {
            let ok = alg.mul(&s, &xi[j - 1]) == alg.mul(&xi[j - 1], &s);
            report.push(format!("s{i}·xi{j} = xi{j}·s{i}"), ok);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wreath(group: FiniteGroup, n: usize) -> Arc<WreathGroup> {
        WreathGroup::new(Arc::new(group), n).unwrap()
    }

    #[test]
    fn product_matches_permutation_model() {
        for (group, n) in [(FiniteGroup::cyclic(2).unwrap(), 2), (FiniteGroup::symmetric(3).unwrap(), 2), (FiniteGroup::cyclic(3).unwrap(), 3)] {
            let wg = wreath(group, n);
            let elems: Vec<WreathElement> = wg.elements().collect();
            for x in elems.iter().step_by(7) {
                for y in elems.iter().step_by(5) {
                    let px = wg.permutation_image(x);
                    let py = wg.permutation_image(y);
                    let composed: Vec<usize> = py.iter().map(|&i| px[i]).collect();
                    assert_eq!(wg.permutation_image(&wg.mul(x, y)), composed);
                }
            }
        }
    }

    #[test]
    fn c2_example_product() {
        let wg = wreath(FiniteGroup::cyclic(2).unwrap(), 2);
        let x = WreathElement { g: wg.from_slots(&[1, 0]).unwrap(), w: Perm::simple(2, 1) };
        let y = WreathElement { g: wg.from_slots(&[0, 1]).unwrap(), w: Perm::simple(2, 1) };
        // (x,e)·ˢ(e,x) = (x,e)·(x,e) = (e,e), and s·s = 1.
        let xy = wg.mul(&x, &y);
        assert_eq!(xy, WreathElement { g: 0, w: Perm::identity(2) });
        assert_eq!(wg.mul(&x, &wg.inverse(&x)), wg.identity());
        assert_eq!(wg.mul(&x, &wg.identity()), x);
    }

    #[test]
    fn type_examples() {
        let wg = wreath(FiniteGroup::cyclic(2).unwrap(), 2);
        assert_eq!(wg.type_of(&wg.identity()), WreathType::new(vec![vec![1, 1], vec![]]));
        let x = WreathElement { g: wg.from_slots(&[1, 0]).unwrap(), w: Perm::simple(2, 1) };
        assert_eq!(wg.type_of(&x), WreathType::new(vec![vec![], vec![2]]));
    }

    #[test]
    fn conjugate_iff_same_type() {
        for group in [FiniteGroup::trivial(), FiniteGroup::cyclic(2).unwrap(), FiniteGroup::cyclic(3).unwrap(), FiniteGroup::symmetric(3).unwrap()] {
            for n in 1..=3 {
                let wg = wreath(group.clone(), n);
                let classes = wg.conjugacy_classes();
                let mut seen_types = std::collections::BTreeSet::new();
                for cls in &classes {
                    let t = wg.type_of(&wg.element(cls[0]));
                    assert!(cls.iter().all(|&i| wg.type_of(&wg.element(i)) == t));
                    assert!(seen_types.insert(t), "two classes share a type");
                }
            }
        }
    }

    #[test]
    fn series_for_c2_mod_2() {
        let g = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(class_count_series(&g, 2, 5), vec![1, 1, 1, 2, 2, 3]);
        for n in 0..=5 {
            assert_eq!(p_regular_type_count(&g, 2, n) as u128, class_count_series(&g, 2, 5)[n]);
        }
        assert_eq!(p_regular_type_count(&g, 2, 0), 1);
    }

    #[test]
    fn jucys_murphy_basics() {
        let f = Field::prime(3).unwrap();
        let alg = WreathAlgebra::new(wreath(FiniteGroup::cyclic(2).unwrap(), 2), f.clone());
        assert!(alg.jucys_murphy(1).unwrap().is_zero());
        let xi2 = alg.jucys_murphy(2).unwrap();
        assert_eq!(xi2.len(), 2);
        for x in alg.wg.elements() {
            let e = alg.element(x);
            assert_eq!(alg.mul(&e, &xi2), alg.mul(&xi2, &e));
        }
        assert!(matches!(alg.jucys_murphy(3), Err(Error::IndexOutOfRange { .. })));

        let triv = WreathAlgebra::new(wreath(FiniteGroup::trivial(), 3), f);
        let xi3 = triv.jucys_murphy(3).unwrap();
        let expected = triv.add(
            &triv.element(WreathElement { g: 0, w: Perm::transposition(3, 0, 2) }),
            &triv.element(WreathElement { g: 0, w: Perm::transposition(3, 1, 2) }),
        );
        assert_eq!(xi3, expected);
    }

    #[test]
    fn jm_identity_reports() {
        let cases = [(FiniteGroup::trivial(), 3, 5), (FiniteGroup::cyclic(2).unwrap(), 2, 3), (FiniteGroup::symmetric(3).unwrap(), 2, 2)];
        for (group, n, p) in cases {
            let alg = WreathAlgebra::new(wreath(group, n), Field::prime(p).unwrap());
            let report = verify_jm_identities(&alg).unwrap();
            assert!(report.all_passed(), "{:?}", report.failures());
        }
    }
}
