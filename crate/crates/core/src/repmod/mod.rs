//! Finite-dimensional modules given by generator matrices.
//!
//! Generator names: `s{i}` for simple reflections, `x{k}` for polynomial
//! generators, `y{k}` for the rescaled polynomial action on Hom spaces, and
//! `g{j}.{a}` for the element `a` of `G` in slot `j`.

pub mod branch;
pub mod ef;
pub mod isotypic;
pub mod meataxe;
pub mod morita;
pub mod specht;
pub mod wreath_modules;

use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{intertwiners, restrict, quotient_action, Matrix, Subspace};
use crate::perm::Perm;
use crate::scalars::{Field, FieldSpec, Fq};

/// The algebra a module is over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Algebra {
    /// `FG_n`, generated by `s{i}` and `g{j}.{a}`.
    #[serde(rename = "FGn")]
    GroupAlgebra,
    /// `FS_n`, or a Young subgroup of it, generated by `s{i}`.
    #[serde(rename = "FSn")]
    Symmetric,
    /// A cyclotomic quotient of `H_n(G)`, generated by `x{k}`, `s{i}`, `g{j}.{a}`.
    #[serde(rename = "Hn")]
    Cyclotomic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixModule {
    pub algebra: Algebra,
    pub n: usize,
    pub dim: usize,
    pub generators: BTreeMap<String, Matrix>,
}

pub fn s_name(i: usize) -> String {
    format!("s{i}")
}

pub fn x_name(k: usize) -> String {
    format!("x{k}")
}

pub fn y_name(k: usize) -> String {
    format!("y{k}")
}

pub fn g_name(j: usize, a: usize) -> String {
    format!("g{j}.{a}")
}

/// JSON form: matrices are lists of rows of field-element codes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub algebra: Algebra,
    pub n: usize,
    pub field: FieldSpec,
    pub dim: usize,
    pub generators: BTreeMap<String, Vec<Vec<u32>>>,
}

impl MatrixModule {
    pub fn new(algebra: Algebra, n: usize, dim: usize) -> Self {
        MatrixModule { algebra, n, dim, generators: BTreeMap::new() }
    }

    pub fn with(mut self, name: impl Into<String>, m: Matrix) -> Self {
        self.generators.insert(name.into(), m);
        self
    }

    pub fn get(&self, name: &str) -> Option<&Matrix> {
        self.generators.get(name)
    }

    pub fn gen(&self, name: &str) -> &Matrix {
        self.generators.get(name).unwrap_or_else(|| panic!("module has no generator {name}"))
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    /// The matrices for `names`; missing names are an error.
    pub fn matrices(&self, names: &[String]) -> Result<Vec<&Matrix>> {
        names
            .iter()
            .map(|n| self.get(n).ok_or_else(|| Error::Mismatch(format!("module has no generator {n}"))))
            .collect()
    }

    /// `w` acting through a reduced word in the `s{i}`.
    pub fn perm_matrix(&self, f: &Field, w: &Perm) -> Matrix {
        w.reduced_word()
            .iter()
            .fold(Matrix::identity(self.dim), |acc, &i| acc.mul(f, self.gen(&s_name(i))))
    }

    /// An element of `G^n` given by its slots.
    pub fn slots_matrix(&self, f: &Field, slots: &[usize]) -> Matrix {
        slots
            .iter()
            .enumerate()
            .fold(Matrix::identity(self.dim), |acc, (j, &a)| acc.mul(f, self.gen(&g_name(j + 1, a))))
    }

    /// Keeps only the named generators, relabelling the algebra.
    pub fn restrict_to(&self, algebra: Algebra, n: usize, names: &[String]) -> Result<MatrixModule> {
        let mut out = MatrixModule::new(algebra, n, self.dim);
        for (name, m) in names.iter().zip(self.matrices(names)?) {
            out.generators.insert(name.clone(), m.clone());
        }
        Ok(out)
    }

    pub fn direct_sum(&self, other: &MatrixModule) -> Result<MatrixModule> {
        if self.generators.keys().ne(other.generators.keys()) {
            return Err(Error::Mismatch("direct sum of modules with different generators".into()));
        }
        let mut out = MatrixModule::new(self.algebra.clone(), self.n, self.dim + other.dim);
        for (name, m) in &self.generators {
            out.generators.insert(name.clone(), m.direct_sum(&other.generators[name]));
        }
        Ok(out)
    }

    /// The module in the basis given by the columns of `p`: `p⁻¹ A p`.
    pub fn conjugate(&self, f: &Field, p: &Matrix) -> Result<MatrixModule> {
        let inv = p.inverse(f).ok_or_else(|| Error::Invalid("change of basis is singular".into()))?;
        let mut out = self.clone();
        for m in out.generators.values_mut() {
            *m = inv.mul(f, &m.mul(f, p));
        }
        Ok(out)
    }

    /// The action on an invariant subspace.
    pub fn submodule(&self, f: &Field, sub: &Subspace) -> Result<MatrixModule> {
        let mut out = MatrixModule::new(self.algebra.clone(), self.n, sub.dim());
        for (name, m) in &self.generators {
            out.generators.insert(name.clone(), restrict(f, m, sub)?);
        }
        Ok(out)
    }

    pub fn quotient(&self, f: &Field, sub: &Subspace) -> Result<MatrixModule> {
        let mut out = MatrixModule::new(self.algebra.clone(), self.n, self.dim - sub.dim());
        for (name, m) in &self.generators {
            out.generators.insert(name.clone(), quotient_action(f, m, sub)?);
        }
        Ok(out)
    }

    /// A random element of the span of short words in the generators.
    pub fn random_algebra_element(&self, f: &Field, rng: &mut impl Rng) -> Matrix {
        let gens: Vec<&Matrix> = self.generators.values().collect();
        let mut acc = Matrix::zeros(self.dim, self.dim);
        if gens.is_empty() {
            return Matrix::scalar(self.dim, Fq(rng.gen_range(0..f.order())));
        }
        let mut word = Matrix::identity(self.dim);
        for _ in 0..6 {
            word = word.mul(f, gens[rng.gen_range(0..gens.len())]);
            let c = Fq(rng.gen_range(0..f.order()));
            acc = acc.add(f, &word.scale(f, c));
        }
        acc
    }

    pub fn to_json(&self, f: &Field) -> ModuleJson {
        let generators = self
            .generators
            .iter()
            .map(|(k, m)| (k.clone(), (0..m.rows()).map(|r| m.row(r).iter().map(|x| x.code()).collect()).collect()))
            .collect();
        ModuleJson { algebra: self.algebra.clone(), n: self.n, field: f.spec().clone(), dim: self.dim, generators }
    }

    pub fn from_json(json: &ModuleJson) -> Result<(Field, MatrixModule)> {
        let f = Field::new(&json.field)?;
        let mut out = MatrixModule::new(json.algebra.clone(), json.n, json.dim);
        for (name, rows) in &json.generators {
            if rows.len() != json.dim || rows.iter().any(|r| r.len() != json.dim) {
                return Err(Error::SizeMismatch(format!("generator {name} is not {0}×{0}", json.dim)));
            }
            let m = Matrix::from_fn(json.dim, json.dim, |i, j| Fq(rows[i][j]));
            if rows.iter().flatten().any(|&c| c >= f.order()) {
                return Err(Error::Invalid(format!("generator {name} has entries outside the field")));
            }
            out.generators.insert(name.clone(), m);
        }
        Ok((f, out))
    }
}

pub fn random_invertible(f: &Field, dim: usize, rng: &mut impl Rng) -> Matrix {
    loop {
        let p = Matrix::random(f, dim, dim, rng);
        if p.is_invertible(f) {
            return p;
        }
    }
}

/// Basis of `Hom(src, dst)` over the named generators, as `dst.dim × src.dim` matrices.
pub fn hom(f: &Field, src: &MatrixModule, dst: &MatrixModule, names: &[String]) -> Result<Vec<Matrix>> {
    Ok(intertwiners(f, src.dim, dst.dim, &src.matrices(names)?, &dst.matrices(names)?))
}

/// Searches the Hom space for an invertible element.
pub fn find_isomorphism(
    f: &Field,
    a: &MatrixModule,
    b: &MatrixModule,
    names: &[String],
    rng: &mut impl Rng,
) -> Result<Option<Matrix>> {
    if a.dim != b.dim {
        return Ok(None);
    }
    if a.dim == 0 {
        return Ok(Some(Matrix::zeros(0, 0)));
    }
    let basis = hom(f, a, b, names)?;
    if basis.is_empty() {
        return Ok(None);
    }
    for m in &basis {
        if m.is_invertible(f) {
            return Ok(Some(m.clone()));
        }
    }
    for _ in 0..40 {
        let mut x = Matrix::zeros(b.dim, a.dim);
        for m in &basis {
            x = x.add(f, &m.scale(f, Fq(rng.gen_range(0..f.order()))));
        }
        if x.is_invertible(f) {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

pub fn is_isomorphic(f: &Field, a: &MatrixModule, b: &MatrixModule, names: &[String], rng: &mut impl Rng) -> Result<bool> {
    Ok(find_isomorphism(f, a, b, names, rng)?.is_some())
}

/// The generator names shared by both modules.
pub fn common_names(a: &MatrixModule, b: &MatrixModule) -> Vec<String> {
    a.generators.keys().filter(|k| b.generators.contains_key(*k)).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn json_round_trip_and_conjugation() {
        let f = Field::prime(5).unwrap();
        let swap = Matrix::from_fn(2, 2, |i, j| if i != j { Fq::ONE } else { Fq::ZERO });
        let m = MatrixModule::new(Algebra::Symmetric, 2, 2).with("s1", swap);
        let (g, back) = MatrixModule::from_json(&m.to_json(&f)).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(back, m);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let p = loop {
            let p = Matrix::random(&f, 2, 2, &mut rng);
            if p.is_invertible(&f) {
                break p;
            }
        };
        let c = m.conjugate(&f, &p).unwrap();
        let names = vec![s_name(1)];
        assert!(is_isomorphic(&f, &m, &c, &names, &mut rng).unwrap());
        let triv = MatrixModule::new(Algebra::Symmetric, 2, 1).with("s1", Matrix::identity(1));
        let sign = MatrixModule::new(Algebra::Symmetric, 2, 1).with("s1", Matrix::scalar(1, f.embed_int(-1)));
        assert!(!is_isomorphic(&f, &triv, &sign, &names, &mut rng).unwrap());
        assert_eq!(hom(&f, &triv, &m, &names).unwrap().len(), 1);
    }
}
