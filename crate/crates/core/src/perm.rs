//! Permutations of `{0, …, n-1}` in one-line notation.
//!
//! `Perm(w)` stores `w[i] = w(i)`; composition is `(w·τ)(i) = w(τ(i))`.
//! The simple reflection `s_i` (`1 <= i < n`) swaps `i-1` and `i`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one: Vec<u8> = self.0.iter().map(|&x| x + 1).collect();
        write!(f, "{one:?}")
    }
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    /// From zero-indexed one-line notation.
    pub fn from_vec(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x as usize >= n || std::mem::replace(&mut seen[x as usize], true) {
                return Err(Error::Invalid(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Perm(images))
    }

    /// From one-indexed one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let zero = images
            .iter()
            .map(|&x| x.checked_sub(1).map(|y| y as u8).ok_or_else(|| Error::Invalid("entries start at 1".into())))
            .collect::<Result<Vec<_>>>()?;
        Perm::from_vec(zero)
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize + 1).collect()
    }

    /// The simple reflection `s_i`, `1 <= i < n`.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} out of range for n = {n}");
        let mut p = Perm::identity(n);
        p.0.swap(i - 1, i);
        p
    }

    /// The transposition of the zero-indexed points `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Perm::identity(n);
        p.0.swap(a, b);
        p
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm(inv)
    }

    /// `s_i · self`: swaps the values `i-1` and `i`.
    pub fn left_simple(&self, i: usize) -> Perm {
        let (a, b) = ((i - 1) as u8, i as u8);
        Perm(
            self.0
                .iter()
                .map(|&x| if x == a { b } else if x == b { a } else { x })
                .collect(),
        )
    }

    /// `self · s_i`: swaps the positions `i-1` and `i`.
    pub fn right_simple(&self, i: usize) -> Perm {
        let mut p = self.clone();
        p.0.swap(i - 1, i);
        p
    }

    /// Number of inversions, the Coxeter length.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    /// A reduced word `[i_1, …, i_l]` with `self = s_{i_1} ⋯ s_{i_l}`,
    /// obtained by bubble-sorting the one-line notation.
    pub fn reduced_word(&self) -> Vec<usize> {
        // Bubble sort w into the identity by right multiplications
        // w s_{j_1} s_{j_2} ⋯ = 1, so w = ⋯ s_{j_2} s_{j_1}.
        let mut w = self.0.clone();
        let mut right = Vec::new();
        let n = w.len();
        for pass in 0..n {
            for j in 0..n.saturating_sub(1 + pass) {
                if w[j] > w[j + 1] {
                    w.swap(j, j + 1);
                    right.push(j + 1);
                }
            }
        }
        right.reverse();
        right
    }

    /// Lehmer-code rank in `0..n!`; the identity has rank 0.
    pub fn rank(&self) -> usize {
        let n = self.0.len();
        let mut rank = 0;
        for i in 0..n {
            let smaller = (i + 1..n).filter(|&j| self.0[j] < self.0[i]).count();
            rank = rank * (n - i) + smaller;
        }
        rank
    }

    pub fn unrank(n: usize, mut rank: usize) -> Perm {
        let mut digits = vec![0usize; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = rank % base;
            rank /= base;
        }
        let mut avail: Vec<u8> = (0..n as u8).collect();
        Perm(digits.into_iter().map(|d| avail.remove(d)).collect())
    }

    /// Every permutation of `n` points, in rank order.
    pub fn all(n: usize) -> impl Iterator<Item = Perm> {
        (0..factorial(n)).map(move |r| Perm::unrank(n, r))
    }

    /// Cycles in zero-indexed points, each listed as `(i, w(i), w²(i), …)`
    /// starting from its smallest point; fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.0[i] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Bruhat order `self <= other`, by the tableau criterion: for every
    /// `k`, the sorted first `k` values of `self` are entrywise at most those
    /// of `other`.
    pub fn bruhat_le(&self, other: &Perm) -> bool {
        assert_eq!(self.n(), other.n());
        (1..self.n()).all(|k| {
            let mut a: Vec<u8> = self.0[..k].to_vec();
            let mut b: Vec<u8> = other.0[..k].to_vec();
            a.sort_unstable();
            b.sort_unstable();
            a.iter().zip(&b).all(|(x, y)| x <= y)
        })
    }

    /// Embeds into `S_m`, `m >= n`, fixing the extra points.
    pub fn extend(&self, m: usize) -> Perm {
        let mut v = self.0.clone();
        v.extend(self.n() as u8..m as u8);
        Perm(v)
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Perm::from_one_line(&v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn simple_reflections() {
        let w = Perm::from_one_line(&[2, 3, 1]).unwrap();
        assert_eq!(w.left_simple(1), Perm::simple(3, 1).compose(&w));
        assert_eq!(w.right_simple(2), w.compose(&Perm::simple(3, 2)));
    }

    #[test]
    fn rank_identity_is_zero() {
        assert_eq!(Perm::identity(4).rank(), 0);
        assert_eq!(Perm::all(3).count(), 6);
    }

    #[test]
    fn bruhat_small_cases() {
        let e = Perm::identity(3);
        let s1 = Perm::simple(3, 1);
        let w0 = Perm::from_one_line(&[3, 2, 1]).unwrap();
        assert!(e.bruhat_le(&s1) && s1.bruhat_le(&w0));
        assert!(!s1.bruhat_le(&Perm::simple(3, 2)));
        // Bruhat order refines length and agrees with subword containment
        for u in Perm::all(3) {
            for w in Perm::all(3) {
                if u.bruhat_le(&w) {
                    assert!(u.length() <= w.length());
                }
            }
        }
    }

    #[test]
    fn json_is_one_indexed() {
        let w = Perm::from_one_line(&[2, 1]).unwrap();
        assert_eq!(serde_json::to_string(&w).unwrap(), "[2,1]");
        let back: Perm = serde_json::from_str("[2,1]").unwrap();
        assert_eq!(back, w);
        assert!(serde_json::from_str::<Perm>("[0,1]").is_err());
    }

    fn perm_strategy(n: usize) -> impl Strategy<Value = Perm> {
        (0..factorial(n)).prop_map(move |r| Perm::unrank(n, r))
    }

    proptest! {
        #[test]
        fn reduced_word_is_reduced(w in (1usize..6).prop_flat_map(perm_strategy)) {
            let word = w.reduced_word();
            prop_assert_eq!(word.len(), w.length());
            let rebuilt = word.iter().fold(Perm::identity(w.n()), |acc, &i| acc.right_simple(i));
            prop_assert_eq!(rebuilt, w);
        }

        #[test]
        fn rank_round_trip(n in 1usize..7, r in 0usize..5040) {
            let r = r % factorial(n);
            prop_assert_eq!(Perm::unrank(n, r).rank(), r);
        }

        #[test]
        fn inverse_composes_to_identity(w in (1usize..6).prop_flat_map(perm_strategy)) {
            prop_assert!(w.compose(&w.inverse()).is_identity());
        }
    }
}
