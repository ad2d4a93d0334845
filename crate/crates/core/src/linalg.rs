//! Dense and sparse matrices over a [`Field`], with exact row reduction.
//!
//! Matrices carry no field handle; every operation takes `&Field`.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::scalars::{Field, Fq};

pub type Vector = Vec<Fq>;

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Fq>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<u32> = self.row(r).iter().map(|x| x.code()).collect();
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Fq::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Fq::ONE;
        }
        m
    }

    pub fn scalar(n: usize, c: Fq) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Fq) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vector]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix { rows: rows.len(), cols, data: rows.concat() }
    }

    /// The matrix whose columns are the given vectors, all of length `dim`.
    pub fn from_columns(dim: usize, cols: &[Vector]) -> Self {
        Matrix::from_fn(dim, cols.len(), |r, c| cols[c][r])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Fq] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn mul(&self, f: &Field, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let base = r * other.cols;
                for (c, &b) in orow.iter().enumerate() {
                    if !b.is_zero() {
                        out.data[base + c] = f.add(out.data[base + c], f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, f: &Field, v: &[Fq]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Fq::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    pub fn add(&self, f: &Field, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, f: &Field, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, f: &Field, c: Fq) -> Matrix {
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// `self - c·I`.
    pub fn shift(&self, f: &Field, c: Fq) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m[(i, i)] = f.sub(m[(i, i)], c);
        }
        m
    }

    pub fn pow(&self, f: &Field, mut e: u64) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base);
            }
            base = base.mul(f, &base);
            e >>= 1;
        }
        acc
    }

    pub fn trace(&self, f: &Field) -> Fq {
        f.sum((0..self.rows.min(self.cols)).map(|i| self[(i, i)]))
    }

    /// Kronecker product; row index of the result is `r1 * other.rows + r2`.
    pub fn kron(&self, f: &Field, other: &Matrix) -> Matrix {
        Matrix::from_fn(self.rows * other.rows, self.cols * other.cols, |r, c| {
            f.mul(
                self[(r / other.rows, c / other.cols)],
                other[(r % other.rows, c % other.cols)],
            )
        })
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self[(r, c)];
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m[(self.rows + r, self.cols + c)] = other[(r, c)];
            }
        }
        m
    }

    /// Rows stacked on top of each other.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Columns placed side by side.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self[(r, c)]
            } else {
                other[(r, c - self.cols)]
            }
        })
    }

    pub fn random(f: &Field, rows: usize, cols: usize, rng: &mut impl Rng) -> Matrix {
        let q = f.order();
        Matrix::from_fn(rows, cols, |_, _| Fq(rng.gen_range(0..q)))
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self, f: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..self.cols {
            if lead == self.rows {
                break;
            }
            let Some(pr) = (lead..self.rows).find(|&r| !self[(r, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(pr, lead);
            let inv = f.inv(self[(lead, c)]).expect("pivot is nonzero");
            for k in c..self.cols {
                self[(lead, k)] = f.mul(self[(lead, k)], inv);
            }
            for r in 0..self.rows {
                if r == lead {
                    continue;
                }
                let factor = self[(r, c)];
                if factor.is_zero() {
                    continue;
                }
                for k in c..self.cols {
                    let v = self[(lead, k)];
                    if !v.is_zero() {
                        self[(r, k)] = f.sub(self[(r, k)], f.mul(factor, v));
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    pub fn rank(&self, f: &Field) -> usize {
        self.clone().rref(f).len()
    }

    /// Basis of `{v : self·v = 0}`.
    pub fn nullspace(&self, f: &Field) -> Vec<Vector> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Fq::ZERO; self.cols];
                v[free] = Fq::ONE;
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = f.neg(m[(r, free)]);
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self, f: &Field) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = self.hstack(&Matrix::identity(n));
        let pivots = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |r, c| aug[(r, n + c)]))
    }

    pub fn is_invertible(&self, f: &Field) -> bool {
        self.is_square() && self.rank(f) == self.rows
    }

    /// Some `x` with `self·x = b`.
    pub fn solve(&self, f: &Field, b: &[Fq]) -> Option<Vector> {
        assert_eq!(self.rows, b.len());
        let col = Matrix::from_columns(self.rows, &[b.to_vec()]);
        let mut aug = self.hstack(&col);
        let pivots = aug.rref(f);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Fq::ZERO; self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug[(r, self.cols)];
        }
        Some(x)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Fq;
    fn index(&self, (r, c): (usize, usize)) -> &Fq {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Fq {
        &mut self.data[r * self.cols + c]
    }
}

pub fn vec_add(f: &Field, a: &[Fq], b: &[Fq]) -> Vector {
    a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
}

pub fn vec_scale(f: &Field, a: &[Fq], c: Fq) -> Vector {
    a.iter().map(|&x| f.mul(x, c)).collect()
}

pub fn is_zero_vec(v: &[Fq]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn unit_vec(dim: usize, i: usize) -> Vector {
    let mut v = vec![Fq::ZERO; dim];
    v[i] = Fq::ONE;
    v
}

/// A subspace of `F^dim` kept in reduced echelon form, so membership and
/// coordinates are cheap.
#[derive(Clone, Debug)]
pub struct Subspace {
    dim: usize,
    /// Echelon rows, each normalized to 1 at its pivot.
    rows: Vec<Vector>,
    pivots: Vec<usize>,
    /// The vectors as inserted, in insertion order.
    basis: Vec<Vector>,
    /// `rows[j]` as a combination of `basis`.
    transforms: Vec<Vector>,
}

impl Subspace {
    pub fn new(dim: usize) -> Self {
        Subspace { dim, rows: Vec::new(), pivots: Vec::new(), basis: Vec::new(), transforms: Vec::new() }
    }

    pub fn spanned_by(f: &Field, dim: usize, vectors: impl IntoIterator<Item = Vector>) -> Self {
        let mut s = Subspace::new(dim);
        for v in vectors {
            s.insert(f, v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The inserted independent vectors.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Reduces `v` against the echelon rows, returning the remainder and
    /// the coefficients (relative to the echelon rows) that were removed.
    fn reduce(&self, f: &Field, v: &[Fq]) -> (Vector, Vec<Fq>) {
        let mut r = v.to_vec();
        let mut coeffs = vec![Fq::ZERO; self.rows.len()];
        for (j, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let c = r[p];
            if c.is_zero() {
                continue;
            }
            coeffs[j] = c;
            for (k, &x) in row.iter().enumerate().skip(p) {
                if !x.is_zero() {
                    r[k] = f.sub(r[k], f.mul(c, x));
                }
            }
        }
        (r, coeffs)
    }

    pub fn contains(&self, f: &Field, v: &[Fq]) -> bool {
        is_zero_vec(&self.reduce(f, v).0)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, f: &Field, v: Vector) -> bool {
        assert_eq!(v.len(), self.dim);
        let (mut r, coeffs) = self.reduce(f, &v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(r[p]).unwrap();
        for x in r.iter_mut() {
            *x = f.mul(*x, inv);
        }
        // new row = (v - Σ coeffs_j rows_j) / r[p], expressed over the basis
        let nb = self.basis.len() + 1;
        let mut t = vec![Fq::ZERO; nb];
        t[nb - 1] = inv;
        for (j, &c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let factor = f.neg(f.mul(c, inv));
            for (k, &x) in self.transforms[j].iter().enumerate() {
                t[k] = f.add(t[k], f.mul(factor, x));
            }
        }
        for tr in self.transforms.iter_mut() {
            tr.push(Fq::ZERO);
        }
        // keep rows fully reduced at the new pivot
        for j in 0..self.rows.len() {
            let c = self.rows[j][p];
            if c.is_zero() {
                continue;
            }
            for k in 0..self.dim {
                if !r[k].is_zero() {
                    self.rows[j][k] = f.sub(self.rows[j][k], f.mul(c, r[k]));
                }
            }
            for k in 0..nb {
                if !t[k].is_zero() {
                    self.transforms[j][k] = f.sub(self.transforms[j][k], f.mul(c, t[k]));
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, r);
        self.transforms.insert(pos, t);
        self.basis.push(v);
        true
    }

    /// Coordinates of `v` relative to [`Subspace::basis`], if `v` lies in the span.
    pub fn coordinates(&self, f: &Field, v: &[Fq]) -> Option<Vector> {
        let (r, coeffs) = self.reduce(f, v);
        if !is_zero_vec(&r) {
            return None;
        }
        let mut out = vec![Fq::ZERO; self.basis.len()];
        for (j, &c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, &x) in self.transforms[j].iter().enumerate() {
                out[k] = f.add(out[k], f.mul(c, x));
            }
        }
        Some(out)
    }

    /// Basis vectors as the columns of a matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.dim, &self.basis)
    }

    /// Extends the basis to a basis of the whole space by standard vectors;
    /// returns the added vectors.
    pub fn complement(&self, f: &Field) -> Vec<Vector> {
        let mut s = self.clone();
        (0..self.dim)
            .filter_map(|i| {
                let e = unit_vec(self.dim, i);
                s.insert(f, e.clone()).then_some(e)
            })
            .collect()
    }
}

/// Smallest subspace containing `seeds` and stable under every matrix in `gens`.
pub fn spin(f: &Field, dim: usize, gens: &[&Matrix], seeds: impl IntoIterator<Item = Vector>) -> Subspace {
    let mut space = Subspace::new(dim);
    let mut queue = Vec::new();
    for s in seeds {
        if space.insert(f, s.clone()) {
            queue.push(s);
        }
    }
    while let Some(v) = queue.pop() {
        for g in gens {
            let w = g.mul_vec(f, &v);
            if space.insert(f, w.clone()) {
                queue.push(w);
            }
        }
    }
    space
}

/// Matrix of `a` on the invariant subspace spanned by the columns of `basis`.
pub fn restrict(f: &Field, a: &Matrix, basis: &Subspace) -> Result<Matrix> {
    let cols = basis
        .basis()
        .iter()
        .map(|v| {
            basis
                .coordinates(f, &a.mul_vec(f, v))
                .ok_or_else(|| Error::Invalid("subspace is not invariant".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(basis.dim(), &cols))
}

/// Matrix of `a` on `F^n / sub`, using the complement returned by
/// [`Subspace::complement`] as the quotient basis.
pub fn quotient_action(f: &Field, a: &Matrix, sub: &Subspace) -> Result<Matrix> {
    let comp = sub.complement(f);
    let mut full = sub.clone();
    for v in &comp {
        full.insert(f, v.clone());
    }
    let k = sub.dim();
    let cols = comp
        .iter()
        .map(|v| {
            let c = full
                .coordinates(f, &a.mul_vec(f, v))
                .ok_or_else(|| Error::Invalid("complement does not span".into()))?;
            Ok(c[k..].to_vec())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(comp.len(), &cols))
}

/// Kernel of `(a - c·I)^dim`, the generalized `c`-eigenspace.
pub fn generalized_eigenspace(f: &Field, a: &Matrix, c: Fq) -> Vec<Vector> {
    let shifted = a.shift(f, c);
    let mut power = shifted.clone();
    let mut kernel = power.nullspace(f);
    loop {
        power = power.mul(f, &shifted);
        let next = power.nullspace(f);
        if next.len() == kernel.len() {
            return kernel;
        }
        kernel = next;
    }
}

/// Eigenvalues of `a` lying in the field, found by exhaustive search,
/// with their algebraic multiplicities.
pub fn eigenvalues(f: &Field, a: &Matrix) -> Vec<(Fq, usize)> {
    let mut out = Vec::new();
    let mut total = 0;
    for c in f.elements() {
        if a.shift(f, c).rank(f) == a.rows() {
            continue;
        }
        let m = generalized_eigenspace(f, a, c).len();
        total += m;
        out.push((c, m));
        if total == a.rows() {
            break;
        }
    }
    out
}

/// Basis of the space of `X` (of shape `dst_dim × src_dim`) with
/// `dst[g]·X = X·src[g]` for every paired generator.
pub fn intertwiners(f: &Field, src_dim: usize, dst_dim: usize, src: &[&Matrix], dst: &[&Matrix]) -> Vec<Matrix> {
    assert_eq!(src.len(), dst.len(), "generator lists differ in length");
    let (m, n) = (src_dim, dst_dim);
    let unknowns = n * m;
    let residual = |g: usize, x: &Matrix| -> Vector {
        let r = dst[g].mul(f, x).sub(f, &x.mul(f, src[g]));
        (0..n).flat_map(|i| (0..m).map(move |j| (i, j))).map(|(i, j)| r[(i, j)]).collect()
    };
    // Start from the full space and cut it down generator by generator.
    let mut kernel: Vec<Matrix> = (0..unknowns)
        .map(|u| {
            let mut x = Matrix::zeros(n, m);
            x[(u / m, u % m)] = Fq::ONE;
            x
        })
        .collect();
    for g in 0..src.len() {
        if kernel.is_empty() {
            break;
        }
        let cols: Vec<Vector> = kernel.iter().map(|x| residual(g, x)).collect();
        let constraint = Matrix::from_columns(unknowns, &cols);
        let combos = constraint.nullspace(f);
        kernel = combos
            .iter()
            .map(|c| {
                let mut acc = Matrix::zeros(n, m);
                for (k, &coef) in c.iter().enumerate() {
                    if !coef.is_zero() {
                        acc = acc.add(f, &kernel[k].scale(f, coef));
                    }
                }
                acc
            })
            .collect();
    }
    kernel
}

/// Sparse square matrix stored by columns: `cols[j]` is the image of the
/// `j`-th standard basis vector, sorted by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    dim: usize,
    cols: Vec<Vec<(u32, Fq)>>,
}

pub type SparseVector = BTreeMap<u32, Fq>;

impl SparseMatrix {
    pub fn zeros(dim: usize) -> Self {
        SparseMatrix { dim, cols: vec![Vec::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        SparseMatrix { dim, cols: (0..dim).map(|j| vec![(j as u32, Fq::ONE)]).collect() }
    }

    pub fn from_columns(dim: usize, cols: Vec<SparseVector>) -> Self {
        assert_eq!(cols.len(), dim);
        SparseMatrix {
            dim,
            cols: cols
                .into_iter()
                .map(|c| c.into_iter().filter(|(_, x)| !x.is_zero()).collect())
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, j: usize) -> &[(u32, Fq)] {
        &self.cols[j]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn apply(&self, f: &Field, v: &SparseVector) -> SparseVector {
        let mut out = SparseVector::new();
        for (&j, &c) in v {
            for &(i, x) in &self.cols[j as usize] {
                let e = out.entry(i).or_insert(Fq::ZERO);
                *e = f.add(*e, f.mul(c, x));
            }
        }
        out.retain(|_, x| !x.is_zero());
        out
    }

    pub fn apply_dense(&self, f: &Field, v: &[Fq]) -> Vector {
        let mut out = vec![Fq::ZERO; self.dim];
        for (j, &c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(i, x) in &self.cols[j] {
                out[i as usize] = f.add(out[i as usize], f.mul(c, x));
            }
        }
        out
    }

    /// `self · other`.
    pub fn mul(&self, f: &Field, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.dim, other.dim);
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let v: SparseVector = col.iter().copied().collect();
                self.apply(f, &v).into_iter().collect()
            })
            .collect();
        SparseMatrix { dim: self.dim, cols }
    }

    fn zip_with(&self, other: &SparseMatrix, mut op: impl FnMut(Fq, Fq) -> Fq) -> SparseMatrix {
        assert_eq!(self.dim, other.dim);
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut m: BTreeMap<u32, (Fq, Fq)> = BTreeMap::new();
                for &(i, x) in a {
                    m.entry(i).or_insert((Fq::ZERO, Fq::ZERO)).0 = x;
                }
                for &(i, x) in b {
                    m.entry(i).or_insert((Fq::ZERO, Fq::ZERO)).1 = x;
                }
                m.into_iter()
                    .map(|(i, (x, y))| (i, op(x, y)))
                    .filter(|(_, z)| !z.is_zero())
                    .collect()
            })
            .collect();
        SparseMatrix { dim: self.dim, cols }
    }

    pub fn add(&self, f: &Field, other: &SparseMatrix) -> SparseMatrix {
        self.zip_with(other, |x, y| f.add(x, y))
    }

    pub fn sub(&self, f: &Field, other: &SparseMatrix) -> SparseMatrix {
        self.zip_with(other, |x, y| f.sub(x, y))
    }

    pub fn scale(&self, f: &Field, c: Fq) -> SparseMatrix {
        let cols = self
            .cols
            .iter()
            .map(|col| col.iter().map(|&(i, x)| (i, f.mul(x, c))).filter(|(_, z)| !z.is_zero()).collect())
            .collect();
        SparseMatrix { dim: self.dim, cols }
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, x) in col {
                m[(i as usize, j)] = x;
            }
        }
        m
    }

    pub fn from_dense(m: &Matrix) -> SparseMatrix {
        assert!(m.is_square());
        let cols = (0..m.cols())
            .map(|j| {
                (0..m.rows())
                    .filter(|&i| !m[(i, j)].is_zero())
                    .map(|i| (i as u32, m[(i, j)]))
                    .collect()
            })
            .collect();
        SparseMatrix { dim: m.rows(), cols }
    }
}

/// Smallest subspace containing `seeds` and stable under the sparse `gens`;
/// returns its dimension.
pub fn sparse_spin_dim(f: &Field, dim: usize, gens: &[&SparseMatrix], seeds: Vec<Vector>) -> usize {
    let mut space = Subspace::new(dim);
    let mut queue = Vec::new();
    for s in seeds {
        if space.insert(f, s.clone()) {
            queue.push(s);
        }
    }
    while let Some(v) = queue.pop() {
        for g in gens {
            let w = g.apply_dense(f, &v);
            if space.insert(f, w.clone()) {
                queue.push(w);
            }
        }
    }
    space.dim()
}
