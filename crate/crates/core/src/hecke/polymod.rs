//! The faithful module `FG^n ⊗ F[y_1, …, y_n]` and recovery of PBW
//! coefficients from an action.
//!
//! `x_i` multiplies by `y_i`, `g` multiplies the group factor on the
//! left, and
//! `s_j ∘ (h ⊗ y^α) = ˢʲh ⊗ y^{s_jα} + (ˢʲh) t_{j,j+1} ⊗ (y^α - y^{s_jα})/(y_{j+1} - y_j)`.

use std::collections::BTreeMap;

use super::{divided_difference, Exponent, HeckeAlgebra, HeckeElement, PbwKey};
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::scalars::Fq;

/// Sparse vector over the basis `h ⊗ y^β`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolyVector {
    pub terms: BTreeMap<(u32, Exponent), Fq>,
}

impl PolyVector {
    pub fn basis(h: u32, beta: Exponent) -> Self {
        PolyVector { terms: [((h, beta), Fq::ONE)].into() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl HeckeAlgebra {
    fn poly_add(&self, out: &mut BTreeMap<(u32, Exponent), Fq>, key: (u32, Exponent), c: Fq) {
        let f = self.field();
        if c.is_zero() {
            return;
        }
        let e = out.entry(key).or_insert(Fq::ZERO);
        *e = f.add(*e, c);
    }

    fn poly_finish(out: BTreeMap<(u32, Exponent), Fq>) -> PolyVector {
        PolyVector { terms: out.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn poly_x(&self, i: usize, v: &PolyVector) -> PolyVector {
        let terms = v
            .terms
            .iter()
            .map(|((h, beta), &c)| {
                let mut b = beta.clone();
                b[i - 1] += 1;
                ((*h, b), c)
            })
            .collect();
        PolyVector { terms }
    }

    pub fn poly_g(&self, g: u32, v: &PolyVector) -> PolyVector {
        let wg = self.wreath();
        let mut out = BTreeMap::new();
        for ((h, beta), &c) in &v.terms {
            self.poly_add(&mut out, (wg.gn_mul(g, *h), beta.clone()), c);
        }
        Self::poly_finish(out)
    }

    pub fn poly_s(&self, j: usize, v: &PolyVector) -> PolyVector {
        let wg = self.wreath();
        let f = self.field();
        let mut out = BTreeMap::new();
        for ((h, beta), &c) in &v.terms {
            let sh = wg.act_simple(j, *h);
            let mut sb = beta.clone();
            sb.swap(j - 1, j);
            self.poly_add(&mut out, (sh, sb), c);
            let dd = divided_difference(beta, j);
            if dd.is_empty() {
                continue;
            }
            for &t in &self.t_terms[j - 1] {
                let k = wg.gn_mul(sh, t);
                for (gamma, sign) in &dd {
                    self.poly_add(&mut out, (k, gamma.clone()), f.mul(c, f.embed_int(*sign)));
                }
            }
        }
        Self::poly_finish(out)
    }

    pub fn poly_perm(&self, w: &Perm, v: &PolyVector) -> PolyVector {
        w.reduced_word().iter().rev().fold(v.clone(), |acc, &i| self.poly_s(i, &acc))
    }

    /// Action of the key `x^α g w`: first `w`, then `g`, then `x^α`.
    pub fn poly_key(&self, key: &PbwKey, v: &PolyVector) -> PolyVector {
        let moved = self.poly_g(key.g, &self.poly_perm(&key.w, v));
        let terms = moved
            .terms
            .into_iter()
            .map(|((h, beta), c)| {
                let b: Exponent = beta.iter().zip(&key.alpha).map(|(x, y)| x + y).collect();
                ((h, b), c)
            })
            .collect();
        PolyVector { terms }
    }

    pub fn poly_action(&self, a: &HeckeElement, v: &PolyVector) -> Result<PolyVector> {
        if a.n != self.n() {
            return Err(Error::Mismatch(format!("element of H_{} acting in H_{}", a.n, self.n())));
        }
        let f = self.field();
        let mut out = BTreeMap::new();
        for (key, &c) in &a.terms {
            for (k, x) in self.poly_key(key, v).terms {
                self.poly_add(&mut out, k, f.mul(c, x));
            }
        }
        Ok(Self::poly_finish(out))
    }

    /// Recovers the element of `x`-degree at most `max_degree` whose action
    /// is `op`, by evaluating on `1 ⊗ y_1^N y_2^{2N} ⋯ y_n^{nN}` with
    /// `N = max_degree + 1` and peeling off leading terms degree by degree.
    pub fn pbw_extract(
        &self,
        op: &dyn Fn(&PolyVector) -> Result<PolyVector>,
        max_degree: u32,
    ) -> Result<HeckeElement> {
        let n = self.n();
        let f = self.field();
        let big = (max_degree + 1) as u16;
        let probe = PolyVector::basis(0, (1..=n as u16).map(|i| i * big).collect());
        let base_degree: u32 = (1..=n as u32).map(|i| i * big as u32).sum();
        let mut residual = op(&probe)?;
        let mut result = self.zero();
        for level in (0..=max_degree).rev() {
            let target = base_degree + level;
            let mut found = self.zero();
            for ((h, beta), &c) in &residual.terms {
                let deg: u32 = beta.iter().map(|&b| b as u32).sum();
                if deg > target {
                    return Err(Error::DegreeBoundViolated(format!("output term of degree {deg} above bound")));
                }
                if deg < target {
                    continue;
                }
                let mut winv = Vec::with_capacity(n);
                let mut alpha = Vec::with_capacity(n);
                for &b in beta {
                    let q = b / big;
                    if q == 0 || q as usize > n {
                        return Err(Error::DegreeBoundViolated(format!("cannot decode exponent {beta:?}")));
                    }
                    winv.push(q as u8 - 1);
                    alpha.push(b % big);
                }
                let w = Perm::from_vec(winv)
                    .map_err(|_| Error::DegreeBoundViolated(format!("exponent {beta:?} is not a permuted probe")))?
                    .inverse();
                found.add_term(f, PbwKey { alpha, g: *h, w }, c);
            }
            if found.is_zero() {
                continue;
            }
            let image = self.poly_action(&found, &probe)?;
            let mut next = residual.terms.clone();
            for (k, c) in image.terms {
                let e = next.entry(k).or_insert(Fq::ZERO);
                *e = f.sub(*e, c);
            }
            residual = Self::poly_finish(next);
            result = self.add(&result, &found);
        }
        if !residual.is_zero() {
            return Err(Error::DegreeBoundViolated(format!("{} unexplained output terms", residual.terms.len())));
        }
        Ok(result)
    }

    /// `pbw_extract` applied to the action of `a`.
    pub fn extract_from_action(&self, a: &HeckeElement, max_degree: u32) -> Result<HeckeElement> {
        self.pbw_extract(&|v| self.poly_action(a, v), max_degree)
    }

    /// The product `a·b` as seen through the polynomial module.
    pub fn product_via_action(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        let bound = a.degree() + b.degree();
        self.pbw_extract(&|v| self.poly_action(a, &self.poly_action(b, v)?), bound)
    }
}
