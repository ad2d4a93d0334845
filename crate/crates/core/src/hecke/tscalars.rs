//! Scalars by which `t_{12}` acts on tensor squares of irreducibles.
//!
//! On `V_k ⊗ V_k` the element `t_{12} = Σ_h h ⊗ h⁻¹` equals `c_k` times the
//! factor swap, and `d_k c_k = |G|`. On `V_k ⊗ V_l` with `k ≠ l` it is zero.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::{irreps, FiniteGroup, Irrep};
use crate::linalg::Matrix;
use crate::report::Report;
use crate::scalars::{Field, Fq};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TScalar {
    pub label: usize,
    pub dim: usize,
    #[serde(skip)]
    pub value: Fq,
    pub coeffs: Vec<u32>,
    /// `Some(i)` when the scalar lies in the prime subring.
    pub integral: Option<u32>,
    pub is_zero: bool,
}

/// `Σ_h ρ(h) ⊗ σ(h⁻¹)`.
pub fn t_matrix(f: &Field, g: &FiniteGroup, rho: &Irrep, sigma: &Irrep) -> Matrix {
    let dim = rho.dim * sigma.dim;
    (0..g.order()).fold(Matrix::zeros(dim, dim), |acc, h| {
        acc.add(f, &rho.matrices[h].kron(f, &sigma.matrices[g.inv(h)]))
    })
}

/// The swap `v ⊗ w ↦ w ⊗ v` on `F^d ⊗ F^d`.
pub fn swap_matrix(d: usize) -> Matrix {
    let mut m = Matrix::zeros(d * d, d * d);
    for a in 0..d {
        for b in 0..d {
            m[(b * d + a, a * d + b)] = Fq::ONE;
        }
    }
    m
}

fn scalar_for(f: &Field, g: &FiniteGroup, v: &Irrep) -> Result<Fq> {
    let t = t_matrix(f, g, v, v);
    let c = t[(0, 0)];
    if t != swap_matrix(v.dim).scale(f, c) {
        return Err(Error::NotScalar(format!("t_12 is not a multiple of the swap on V_{}", v.label)));
    }
    if f.mul(f.embed_int(v.dim as i64), c) != f.embed_int(g.order() as i64) {
        return Err(Error::NotScalar(format!("d_k c_k != |G| for V_{}", v.label)));
    }
    Ok(c)
}

/// The scalars `c_k` for the irreducibles in `irreps(g, f)` order.
pub fn c_scalars(g: &FiniteGroup, f: &Field) -> Result<Vec<TScalar>> {
    irreps(g, f)?
        .iter()
        .map(|v| {
            let c = scalar_for(f, g, v)?;
            Ok(TScalar {
                label: v.label,
                dim: v.dim,
                value: c,
                coeffs: f.coeffs(c),
                integral: f.as_int(c),
                is_zero: c.is_zero(),
            })
        })
        .collect()
}

/// Checks both halves of the zero/swap dichotomy on every pair of irreducibles.
pub fn verify_t_action(g: &FiniteGroup, f: &Field) -> Result<Report> {
    let list = irreps(g, f)?;
    let mut report = Report::new();
    for a in &list {
        for b in &list {
            if a.label == b.label {
                let ok = scalar_for(f, g, a);
                report.push_detail(
                    format!("t_12 on V_{0}⊗V_{0} is c·swap with d·c = |G|", a.label),
                    ok.is_ok(),
                    ok.map(|c| f.display(c)).unwrap_or_else(|e| e.to_string()),
                );
            } else {
                report.push(format!("t_12 vanishes on V_{}⊗V_{}", a.label, b.label), t_matrix(f, g, a, b).is_zero());
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(g: &FiniteGroup, p: u32) -> Vec<u32> {
        let f = Field::prime(p).unwrap();
        c_scalars(g, &f).unwrap().iter().map(|c| c.integral.unwrap()).collect()
    }

    #[test]
    fn known_scalars() {
        assert_eq!(values(&FiniteGroup::trivial(), 5), vec![1]);
        assert_eq!(values(&FiniteGroup::cyclic(2).unwrap(), 3), vec![2, 2]);
        assert_eq!(values(&FiniteGroup::symmetric(3).unwrap(), 5), vec![1, 1, 3]);
    }

    #[test]
    fn dichotomy_over_extension_field() {
        let g = FiniteGroup::cyclic(3).unwrap();
        let f = Field::new(&g.splitting_field(2).unwrap()).unwrap();
        assert_eq!(f.order(), 4);
        assert!(verify_t_action(&g, &f).unwrap().all_passed());
        assert!(c_scalars(&g, &f).unwrap().iter().all(|c| c.integral == Some(1)));
    }

    #[test]
    fn modular_order_rejected() {
        let f = Field::prime(2).unwrap();
        assert!(c_scalars(&FiniteGroup::cyclic(2).unwrap(), &f).is_err());
    }
}
