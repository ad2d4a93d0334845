//! Simple `FS_n`-modules `D^μ` as Specht modules modulo the radical of the
//! standard bilinear form.

use std::collections::HashMap;

use super::{s_name, Algebra, MatrixModule};
use crate::error::{Error, Result};
use crate::linalg::{quotient_action, restrict, Matrix, Subspace, Vector};
use crate::partition::{is_p_regular, Partition};
use crate::scalars::{Field, Fq};

/// A tableau as rows of entries `0..n`.
type Tableau = Vec<Vec<usize>>;

fn standard_tableaux(mu: &[usize]) -> Vec<Tableau> {
    let n: usize = mu.iter().sum();
    let mut out = Vec::new();
    let mut t: Tableau = mu.iter().map(|_| Vec::new()).collect();
    fn go(k: usize, n: usize, mu: &[usize], t: &mut Tableau, out: &mut Vec<Tableau>) {
        if k == n {
            out.push(t.clone());
            return;
        }
        for r in 0..mu.len() {
            let c = t[r].len();
            if c < mu[r] && (r == 0 || t[r - 1].len() > c) {
                t[r].push(k);
                go(k + 1, n, mu, t, out);
                t[r].pop();
            }
        }
    }
    go(0, n, mu, &mut t, &mut out);
    out
}

/// Signed permutations of a set, as (images, sign).
fn signed_perms(items: &[usize]) -> Vec<(Vec<usize>, i64)> {
    if items.is_empty() {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        let sign = if i % 2 == 0 { 1 } else { -1 };
        for (tail, s) in signed_perms(&rest) {
            let mut v = vec![first];
            v.extend(tail);
            out.push((v, s * sign));
        }
    }
    out
}

/// The Specht module `S^μ` in its standard polytabloid basis, together
/// with its Gram matrix.
pub struct Specht {
    pub module: MatrixModule,
    pub gram: Matrix,
}

pub fn specht_module(f: &Field, mu: &[usize]) -> Result<Specht> {
    let n: usize = mu.iter().sum();
    let tableaux = standard_tableaux(mu);
    // Tabloids are keyed by the row of each entry.
    let mut tabloid_index: HashMap<Vec<u8>, usize> = HashMap::new();
    let mut polytabloids: Vec<HashMap<usize, i64>> = Vec::new();
    let mut index_of = |key: Vec<u8>| {
        let len = tabloid_index.len();
        *tabloid_index.entry(key).or_insert(len)
    };
    let mut all_keys: Vec<Vec<u8>> = Vec::new();
    for t in &tableaux {
        let cols: Vec<Vec<usize>> = (0..mu.first().copied().unwrap_or(0))
            .map(|c| t.iter().filter(|row| row.len() > c).map(|row| row[c]).collect())
            .collect();
        let mut combos: Vec<(Vec<Vec<usize>>, i64)> = vec![(vec![], 1)];
        for col in &cols {
            let perms = signed_perms(col);
            combos = combos
                .into_iter()
                .flat_map(|(prefix, s)| {
                    perms.iter().map(move |(p, ps)| {
                        let mut next = prefix.clone();
                        next.push(p.clone());
                        (next, s * ps)
                    })
                })
                .collect();
        }
        let mut poly = HashMap::new();
        for (columns, sign) in combos {
            let mut key = vec![0u8; n];
            for col in &columns {
                for (r, &entry) in col.iter().enumerate() {
                    key[entry] = r as u8;
                }
            }
            let idx = index_of(key.clone());
            if idx == all_keys.len() {
                all_keys.push(key);
            }
            *poly.entry(idx).or_insert(0) += sign;
        }
        polytabloids.push(poly);
    }
    // Close the tabloid set under the simple reflections so actions stay inside.
    let mut k = 0;
    while k < all_keys.len() {
        for i in 1..n {
            let mut key = all_keys[k].clone();
            key.swap(i - 1, i);
            let idx = index_of(key.clone());
            if idx == all_keys.len() {
                all_keys.push(key);
            }
        }
        k += 1;
    }
    let ambient = all_keys.len();
    let vectors: Vec<Vector> = polytabloids
        .iter()
        .map(|p| {
            let mut v = vec![Fq::ZERO; ambient];
            for (&i, &c) in p {
                v[i] = f.embed_int(c);
            }
            v
        })
        .collect();
    let span = Subspace::spanned_by(f, ambient, vectors.clone());
    if span.dim() != vectors.len() {
        return Err(Error::Invalid(format!("polytabloids of {mu:?} are dependent")));
    }
    let mut module = MatrixModule::new(Algebra::Symmetric, n, vectors.len());
    for i in 1..n {
        let action = Matrix::from_fn(ambient, ambient, |r, c| {
            let mut key = all_keys[c].clone();
            key.swap(i - 1, i);
            if tabloid_index[&key] == r {
                Fq::ONE
            } else {
                Fq::ZERO
            }
        });
        module.generators.insert(s_name(i), restrict(f, &action, &span)?);
    }
    let gram = Matrix::from_fn(vectors.len(), vectors.len(), |a, b| {
        f.sum(vectors[a].iter().zip(&vectors[b]).map(|(&x, &y)| f.mul(x, y)))
    });
    Ok(Specht { module, gram })
}

/// `D^μ = S^μ / rad`, for `p`-regular `μ`.
pub fn specht_simple(f: &Field, mu: &[usize]) -> Result<MatrixModule> {
    if !is_p_regular(mu, f.p()) {
        return Err(Error::NotPRegular(mu.to_vec(), f.p()));
    }
    let s = specht_module(f, mu)?;
    let radical = Subspace::spanned_by(f, s.module.dim, s.gram.nullspace(f));
    let mut out = MatrixModule::new(Algebra::Symmetric, s.module.n, s.module.dim - radical.dim());
    for (name, m) in &s.module.generators {
        out.generators.insert(name.clone(), quotient_action(f, m, &radical)?);
    }
    Ok(out)
}

/// Simple modules of `FS_n` for all `p`-regular partitions.
pub fn symmetric_simples(f: &Field, n: usize) -> Result<Vec<(Partition, MatrixModule)>> {
    crate::partition::p_regular_partitions(n, f.p())
        .into_iter()
        .map(|mu| Ok((mu.clone(), specht_simple(f, &mu)?)))
        .collect()
}
