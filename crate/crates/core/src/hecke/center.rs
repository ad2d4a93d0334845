//! Central elements: a direct commutator test and the coefficient criterion
//! (support in `x`-polynomials times `G^n`, coefficients constant on
//! conjugacy classes of `G^n`, and invariant under the diagonal `S_n` action
//! on (class tuple, exponent) pairs).

use std::collections::BTreeMap;

use rand::Rng;

use super::{Exponent, HeckeAlgebra, HeckeElement, PbwKey};
use crate::perm::Perm;
use crate::scalars::Fq;

/// How a random candidate for the center is built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CandidateKind {
    /// Sum of full `S_n`-orbits of class-sum monomials.
    Invariant,
    /// An invariant family plus one lone class-sum monomial.
    BreakSymmetry,
    /// An invariant family plus a single group element.
    BreakClass,
    /// An invariant family plus a term with nontrivial permutation.
    WithPermutation,
}

impl CandidateKind {
    pub const ALL: [CandidateKind; 4] =
        [CandidateKind::Invariant, CandidateKind::BreakSymmetry, CandidateKind::BreakClass, CandidateKind::WithPermutation];
}

impl HeckeAlgebra {
    /// Elements that generate `H_n(G)`: `x_1`, the `s_i` and `a^{(1)}` for
    /// generators `a` of `G`.
    pub fn generating_set(&self) -> Vec<HeckeElement> {
        let mut gens = vec![self.x(1).expect("n >= 1")];
        gens.extend((1..self.n()).map(|i| self.s(i).expect("valid index")));
        for a in self.wreath().group().generators() {
            gens.push(self.group_element(self.wreath().single(0, a)));
        }
        gens
    }

    pub fn is_central(&self, z: &HeckeElement) -> bool {
        self.generating_set().iter().all(|g| self.commutator(g, z).is_zero())
    }

    /// Conjugacy class index of each slot of `g`.
    pub fn class_tuple(&self, g: u32) -> Vec<usize> {
        let wg = self.wreath();
        wg.slots(g).into_iter().map(|a| wg.group().class_of(a)).collect()
    }

    /// `x^α C̄_ī` where `C̄_ī` is the sum over `G^n` elements whose slots lie
    /// in the classes `ī`.
    pub fn class_sum_monomial(&self, classes: &[usize], alpha: &[u16]) -> HeckeElement {
        let wg = self.wreath();
        let g = wg.group();
        let mut choices: Vec<Vec<usize>> = vec![vec![]];
        for &c in classes {
            let members = &g.classes()[c].members;
            choices = choices
                .into_iter()
                .flat_map(|prefix| {
                    members.iter().map(move |&m| {
                        let mut next = prefix.clone();
                        next.push(m);
                        next
                    })
                })
                .collect();
        }
        let mut e = self.zero();
        for slots in choices {
            let key = PbwKey { alpha: alpha.to_vec(), g: wg.from_slots(&slots).expect("valid slots"), w: Perm::identity(self.n()) };
            e.add_term(self.field(), key, Fq::ONE);
        }
        e
    }

    /// Coefficient criterion for centrality.
    pub fn center_coeff_check(&self, z: &HeckeElement) -> bool {
        let mut grouped: BTreeMap<(Vec<usize>, Exponent), (Fq, usize)> = BTreeMap::new();
        for (key, &c) in &z.terms {
            if !key.w.is_identity() {
                return false;
            }
            let entry = grouped.entry((self.class_tuple(key.g), key.alpha.clone())).or_insert((c, 0));
            if entry.0 != c {
                return false;
            }
            entry.1 += 1;
        }
        let g = self.wreath().group();
        for ((classes, alpha), (c, count)) in &grouped {
            let size: usize = classes.iter().map(|&k| g.classes()[k].members.len()).product();
            if *count != size {
                return false;
            }
            for i in 1..self.n() {
                let (mut sc, mut sa) = (classes.clone(), alpha.clone());
                sc.swap(i - 1, i);
                sa.swap(i - 1, i);
                if grouped.get(&(sc, sa)).map(|e| e.0) != Some(*c) {
                    return false;
                }
            }
        }
        true
    }

    /// The elementary symmetric polynomial `e_k(x_1, …, x_n)`.
    pub fn elementary_symmetric(&self, k: usize) -> HeckeElement {
        let n = self.n();
        let mut e = self.zero();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize == k {
                let alpha: Exponent = (0..n).map(|i| ((mask >> i) & 1) as u16).collect();
                e = self.add(&e, &self.x_pow(&alpha));
            }
        }
        e
    }

    fn orbit_sum(&self, classes: &[usize], alpha: &[u16], c: Fq) -> HeckeElement {
        let mut seen = std::collections::BTreeSet::new();
        let mut e = self.zero();
        for w in self.wreath().perms() {
            let mut wc = vec![0; classes.len()];
            let mut wa = vec![0; alpha.len()];
            for j in 0..classes.len() {
                wc[w.apply(j)] = classes[j];
                wa[w.apply(j)] = alpha[j];
            }
            if seen.insert((wc.clone(), wa.clone())) {
                e = self.add(&e, &self.scale(&self.class_sum_monomial(&wc, &wa), c));
            }
        }
        e
    }

    /// A seeded random candidate of the requested kind.
    pub fn random_center_candidate(&self, rng: &mut impl Rng, kind: CandidateKind, max_degree: u16) -> HeckeElement {
        let n = self.n();
        let f = self.field();
        let class_count = self.wreath().group().classes().len();
        let random_pair = |rng: &mut dyn rand::RngCore| {
            let classes: Vec<usize> = (0..n).map(|_| rng.gen_range(0..class_count)).collect();
            let mut alpha = vec![0u16; n];
            for _ in 0..rng.gen_range(0..=max_degree) {
                alpha[rng.gen_range(0..n)] += 1;
            }
            (classes, alpha)
        };
        let mut z = self.zero();
        for _ in 0..rng.gen_range(1..=2) {
            let (classes, alpha) = random_pair(rng);
            let c = Fq(rng.gen_range(1..f.order()));
            z = self.add(&z, &self.orbit_sum(&classes, &alpha, c));
        }
        let c = Fq(rng.gen_range(1..f.order()));
        let (classes, alpha) = random_pair(rng);
        match kind {
            CandidateKind::Invariant => z,
            CandidateKind::BreakSymmetry => self.add(&z, &self.scale(&self.class_sum_monomial(&classes, &alpha), c)),
            CandidateKind::BreakClass => {
                let g = rng.gen_range(0..self.wreath().base_size()) as u32;
                let key = PbwKey { alpha, g, w: Perm::identity(n) };
                self.add(&z, &self.monomial(key, c))
            }
            CandidateKind::WithPermutation => {
                let perms = self.wreath().perms();
                let w = if perms.len() > 1 { perms[rng.gen_range(1..perms.len())].clone() } else { perms[0].clone() };
                let key = PbwKey { alpha, g: 0, w };
                self.add(&z, &self.monomial(key, c))
            }
        }
    }
}
