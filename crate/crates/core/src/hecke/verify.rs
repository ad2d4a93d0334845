//! Verification suites run as normal-form equalities.

use rand::Rng;

use super::{divided_difference, Exponent, HeckeAlgebra, HeckeElement, PbwKey};
use crate::error::Result;
use crate::perm::Perm;
use crate::report::Report;
use crate::scalars::Fq;

/// All exponents of total degree at most `max` in `n` variables.
pub fn exponents_up_to(n: usize, max: u16) -> Vec<Exponent> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix: Exponent| {
                let used: u16 = prefix.iter().sum();
                (0..=max - used).map(move |a| {
                    let mut next = prefix.clone();
                    next.push(a);
                    next
                })
            })
            .collect();
    }
    out
}

impl HeckeAlgebra {
    fn xs(&self) -> Vec<HeckeElement> {
        (1..=self.n()).map(|i| self.x(i).expect("valid index")).collect()
    }

    fn ss(&self) -> Vec<HeckeElement> {
        (1..self.n()).map(|i| self.s(i).expect("valid index")).collect()
    }

    fn poly(&self, terms: &[(Exponent, i64)]) -> HeckeElement {
        let f = self.field();
        terms.iter().fold(self.zero(), |acc, (alpha, c)| self.add(&acc, &self.scale(&self.x_pow(alpha), f.embed_int(*c))))
    }

    /// `s_m ⋯ s_2 s_1 s_2 ⋯ s_m`, the transposition `(1, m+1)`, with the
    /// occurrence of `s_l` in the ascending tail removed (for `l = 1`, the
    /// middle `s_1`).
    pub fn transposition_word_omitting(&self, m: usize, l: usize) -> HeckeElement {
        let mut word: Vec<usize> = (1..=m).rev().collect();
        word.extend(2..=m);
        let pos = if l == 1 { m - 1 } else { m - 1 + (l - 1) };
        word.remove(pos);
        word.iter().fold(self.one(), |acc, &i| self.mul(&acc, &self.s(i).expect("valid index")))
    }

    /// Defining relations and their first consequences.
    pub fn verify_relations(&self) -> Report {
        let n = self.n();
        let wg = self.wreath().clone();
        let xs = self.xs();
        let ss = self.ss();
        let mut r = Report::new();
        let all_g: Vec<u32> = (0..wg.base_size() as u32).collect();

        let mut ok = true;
        for a in &xs {
            for b in &xs {
                ok &= self.mul(a, b) == self.mul(b, a);
            }
        }
        r.push("x_i x_j = x_j x_i", ok);

        let ok = all_g.iter().all(|&g| {
            let ge = self.group_element(g);
            xs.iter().all(|x| self.mul(x, &ge) == self.mul(&ge, x))
        });
        r.push("x_i g = g x_i", ok);

        for i in 1..n {
            let s = &ss[i - 1];
            let t = self.t(i, i + 1).expect("valid index");
            r.push(format!("s_{i}^2 = 1"), self.mul(s, s) == self.one());
            for j in i + 2..n {
                r.push(format!("s_{i} s_{j} = s_{j} s_{i}"), self.mul(s, &ss[j - 1]) == self.mul(&ss[j - 1], s));
            }
            if i + 1 < n {
                let s2 = &ss[i];
                r.push(format!("braid s_{i} s_{}", i + 1), self.product(&[s, s2, s]) == self.product(&[s2, s, s2]));
            }
            let (xi, xi1) = (&xs[i - 1], &xs[i]);
            r.push(
                format!("s_{i} x_{i} = x_{} s_{i} - t_{i},{}", i + 1, i + 1),
                self.mul(s, xi) == self.sub(&self.mul(xi1, s), &t),
            );
            for j in (1..=n).filter(|&j| j != i && j != i + 1) {
                r.push(format!("s_{i} x_{j} = x_{j} s_{i}"), self.mul(s, &xs[j - 1]) == self.mul(&xs[j - 1], s));
            }
            let ok = all_g.iter().all(|&g| {
                self.mul(s, &self.group_element(g)) == self.mul(&self.group_element(wg.act_simple(i, g)), s)
            });
            r.push(format!("s_{i} g = (s_{i}.g) s_{i}"), ok);

            r.push(format!("s_{i} t = t s_{i}"), self.mul(s, &t) == self.mul(&t, s));
            r.push(
                format!("s_{i} x_{} = x_{i} s_{i} + t", i + 1),
                self.mul(s, xi1) == self.add(&self.mul(xi, s), &t),
            );
            let ok = all_g.iter().all(|&g| {
                let ge = self.group_element(g);
                self.mul(&t, &ge) == self.mul(&self.group_element(wg.act_simple(i, g)), &t)
            });
            r.push(format!("t g = (s_{i}.g) t at {i}"), ok);

            let mut ok = true;
            for alpha in exponents_up_to(n, 3) {
                let fx = self.x_pow(&alpha);
                let mut swapped = alpha.clone();
                swapped.swap(i - 1, i);
                let sf = self.x_pow(&swapped);
                let df = self.poly(&divided_difference(&alpha, i));
                for &g in all_g.iter().step_by(1 + all_g.len() / 12) {
                    let ge = self.group_element(g);
                    let lhs = self.product(&[s, &ge, &fx]);
                    let inner = self.add(&self.mul(&sf, s), &self.mul(&t, &df));
                    let rhs = self.mul(&self.group_element(wg.act_simple(i, g)), &inner);
                    ok &= lhs == rhs;
                }
            }
            r.push(format!("s_{i} g f = (s_{i}.g)((s_{i}.f) s_{i} + t d_{i}f)"), ok);
        }
        r.extend(self.verify_intertwiners());
        r.extend(self.verify_t_braids());
        r.extend(self.verify_transposition_identity());
        r
    }

    /// Squares of the intertwiners and how they move the `x_j`.
    pub fn verify_intertwiners(&self) -> Report {
        let n = self.n();
        let xs = self.xs();
        let mut r = Report::new();
        for i in 1..n {
            let om = self.omega(i).expect("valid index");
            let t = self.t(i, i + 1).expect("valid index");
            let d = self.sub(&xs[i - 1], &xs[i]);
            r.push(
                format!("Omega_{i}^2 = t^2 - (x_{i} - x_{})^2", i + 1),
                self.mul(&om, &om) == self.sub(&self.mul(&t, &t), &self.mul(&d, &d)),
            );
            r.push(format!("Omega_{i} x_{i} = x_{} Omega_{i}", i + 1), self.mul(&om, &xs[i - 1]) == self.mul(&xs[i], &om));
            r.push(format!("Omega_{i} x_{} = x_{i} Omega_{i}", i + 1), self.mul(&om, &xs[i]) == self.mul(&xs[i - 1], &om));
            for j in (1..=n).filter(|&j| j != i && j != i + 1) {
                r.push(format!("Omega_{i} x_{j} = x_{j} Omega_{i}"), self.mul(&om, &xs[j - 1]) == self.mul(&xs[j - 1], &om));
            }
        }
        r
    }

    /// The three chains of equal products of `t`'s on three consecutive slots.
    pub fn verify_t_braids(&self) -> Report {
        let mut r = Report::new();
        for i in 1..self.n().saturating_sub(1) {
            let t = |a: usize, b: usize| self.t(a, b).expect("valid index");
            let (a, b, c) = (t(i, i + 1), t(i, i + 2), t(i + 1, i + 2));
            let m = |x: &HeckeElement, y: &HeckeElement| self.mul(x, y);
            let first = [m(&b, &c), m(&a, &b), m(&c, &a)];
            r.push(format!("t-braid chain 1 at {i}"), first[0] == first[1] && first[1] == first[2]);
            let second = [m(&a, &c), m(&b, &a), m(&c, &b)];
            r.push(format!("t-braid chain 2 at {i}"), second[0] == second[1] && second[1] == second[2]);
            r.push(format!("t-braid triple at {i}"), self.product(&[&c, &b, &a]) == self.product(&[&a, &b, &c]));
        }
        r
    }

    /// `x_1 (1,m+1) = (1,m+1) x_{m+1} - Σ_l (1,m+1 with s_l omitted) t_{l,m+1}`
    /// together with `t_{i,j} s_j = s_j t_{i,j+1}`.
    pub fn verify_transposition_identity(&self) -> Report {
        let n = self.n();
        let mut r = Report::new();
        for m in 1..n {
            let tr = self.perm(&Perm::transposition(n, 0, m));
            let lhs = self.mul(&self.x(1).expect("valid"), &tr);
            let mut rhs = self.mul(&tr, &self.x(m + 1).expect("valid"));
            for l in 1..=m {
                let term = self.mul(&self.transposition_word_omitting(m, l), &self.t(l, m + 1).expect("valid"));
                rhs = self.sub(&rhs, &term);
            }
            r.push(format!("x_1 (1,{}) expansion", m + 1), lhs == rhs);
        }
        for j in 2..n {
            for i in 1..j {
                let s = self.s(j).expect("valid");
                let lhs = self.mul(&self.t(i, j).expect("valid"), &s);
                let rhs = self.mul(&s, &self.t(i, j + 1).expect("valid"));
                r.push(format!("t_{i},{j} s_{j} = s_{j} t_{i},{}", j + 1), lhs == rhs);
            }
        }
        r
    }

    /// `w g x^α` has a single term with permutation `w`, namely
    /// `x^{wα} (w.g) w`, and every other term has a strictly smaller
    /// permutation in Bruhat order and smaller degree.
    pub fn verify_triangularity(&self, max_degree: u16) -> Report {
        let n = self.n();
        let wg = self.wreath().clone();
        let mut r = Report::new();
        let gs: Vec<u32> = (0..wg.base_size() as u32).step_by(1 + wg.base_size() / 8).collect();
        for w in wg.perms() {
            let mut ok = true;
            for alpha in exponents_up_to(n, max_degree) {
                let deg: u32 = alpha.iter().map(|&a| a as u32).sum();
                let mut walpha = vec![0u16; n];
                for (j, &a) in alpha.iter().enumerate() {
                    walpha[w.apply(j)] = a;
                }
                for &g in &gs {
                    let prod = self.product(&[&self.perm(w), &self.group_element(g), &self.x_pow(&alpha)]);
                    let lead = PbwKey { alpha: walpha.clone(), g: wg.act(w, g), w: w.clone() };
                    ok &= prod.coeff(&lead) == Fq::ONE;
                    ok &= prod.terms.keys().all(|k| *k == lead || (k.w != *w && k.w.bruhat_le(w) && k.degree() < deg));
                }
            }
            r.push(format!("triangularity for w = {:?}", w.one_line()), ok);
        }
        r
    }

    /// Compares `mul` with composition of actions on the polynomial module.
    pub fn verify_oracle(&self, rng: &mut impl Rng, pairs: usize, terms: usize, max_degree: u16) -> Result<Report> {
        let mut r = Report::new();
        let mut agree = 0;
        for _ in 0..pairs {
            let a = self.random_element(rng, terms, max_degree);
            let b = self.random_element(rng, terms, max_degree);
            if self.mul(&a, &b) == self.product_via_action(&a, &b)? {
                agree += 1;
            }
        }
        r.push_detail("product agrees with the polynomial-module action", agree == pairs, format!("{agree}/{pairs}"));
        Ok(r)
    }

    pub fn verify_associativity(&self, rng: &mut impl Rng, triples: usize, terms: usize, max_degree: u16) -> Report {
        let mut r = Report::new();
        let mut agree = 0;
        for _ in 0..triples {
            let a = self.random_element(rng, terms, max_degree);
            let b = self.random_element(rng, terms, max_degree);
            let c = self.random_element(rng, terms, max_degree);
            if self.mul(&self.mul(&a, &b), &c) == self.mul(&a, &self.mul(&b, &c)) {
                agree += 1;
            }
        }
        r.push_detail("associativity", agree == triples, format!("{agree}/{triples}"));
        r
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::algebra;
    use super::*;
    use crate::groups::FiniteGroup;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn assert_passes(r: &Report) {
        assert!(r.all_passed(), "{:?}", r.failures());
    }

    #[test]
    fn exponent_enumeration() {
        assert_eq!(exponents_up_to(2, 1), vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        assert_eq!(exponents_up_to(3, 2).len(), 10);
    }

    #[test]
    fn relations_small() {
        assert_passes(&algebra(FiniteGroup::trivial(), 3, 2).verify_relations());
        assert_passes(&algebra(FiniteGroup::cyclic(2).unwrap(), 3, 3).verify_relations());
    }

    #[test]
    fn other_omission_fails() {
        // Dropping the s_2 in the descending head instead gives a different
        // element, so the expansion pins which occurrence is removed.
        let h = algebra(FiniteGroup::trivial(), 3, 5);
        let right = h.transposition_word_omitting(2, 2);
        let left = h.mul(&h.s(1).unwrap(), &h.s(2).unwrap());
        assert_eq!(right, h.mul(&h.s(2).unwrap(), &h.s(1).unwrap()));
        assert_ne!(right, left);
    }

    #[test]
    fn triangular_products() {
        assert_passes(&algebra(FiniteGroup::cyclic(2).unwrap(), 3, 3).verify_triangularity(2));
    }

    #[test]
    fn oracle_and_associativity() {
        let h = algebra(FiniteGroup::cyclic(3).unwrap(), 2, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_passes(&h.verify_oracle(&mut rng, 30, 3, 2).unwrap());
        assert_passes(&h.verify_associativity(&mut rng, 30, 3, 2));
    }
}
