//! Exact arithmetic in GF(p^m) and in its prime subring.
//!
//! Elements are encoded as integers `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`
//! where `c_j` is the coefficient of `x^j` modulo the defining polynomial.
//! All operations go through a shared [`Field`] handle carrying addition
//! and logarithm tables, so an element itself is a plain `Copy` value.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field order for which tables are built.
pub const MAX_FIELD_ORDER: u64 = 1 << 12;

/// An element of a finite field, meaningful only relative to its [`Field`].
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fq(pub(crate) u32);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// The raw base-`p` encoding.
    pub fn code(self) -> u32 {
        self.0
    }
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Characteristic, degree and defining polynomial of GF(p^m).
///
/// `modulus` is little-endian and monic: `modulus[m] == 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

impl FieldSpec {
    /// A prime field.
    pub fn prime(p: u32) -> Self {
        FieldSpec { p, m: 1, modulus: None }
    }

    /// Fills in the modulus by search when absent and validates it otherwise.
    pub fn resolve(&self) -> Result<FieldSpec> {
        if !is_prime(self.p) {
            return Err(Error::NotPrime(self.p));
        }
        if self.m == 0 {
            return Err(Error::Invalid("extension degree must be at least 1".into()));
        }
        let modulus = match &self.modulus {
            Some(poly) => {
                let poly = poly.iter().map(|&c| c % self.p).collect::<Vec<_>>();
                if poly.len() != self.m as usize + 1
                    || poly[self.m as usize] != 1
                    || !is_irreducible(&poly, self.p)
                {
                    return Err(Error::ReducibleModulus(poly));
                }
                poly
            }
            None => smallest_irreducible(self.p, self.m),
        };
        Ok(FieldSpec { p: self.p, m: self.m, modulus: Some(modulus) })
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.m)
    }
}

/// Smallest `m` such that every order divides `p^m - 1`, with the
/// lexicographically smallest monic irreducible modulus of that degree.
pub fn find_splitting_field(p: u32, orders: &[u64]) -> Result<FieldSpec> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    for &order in orders {
        if order == 0 || order % p as u64 == 0 {
            return Err(Error::OrderDivisibleByP { order, p });
        }
    }
    let mut m = 1u32;
    let mut power = p as u64;
    loop {
        if orders.iter().all(|&o| (power - 1).is_multiple_of(o)) {
            return FieldSpec { p, m, modulus: None }.resolve();
        }
        m += 1;
        power = power
            .checked_mul(p as u64)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or(Error::FieldTooLarge(power.saturating_mul(p as u64)))?;
    }
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Polynomials over GF(p) as little-endian coefficient vectors.
mod poly {
    pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut r = trim(a.to_vec());
        let b = trim(b.to_vec());
        let lead_inv = super::inv_mod(*b.last().expect("division by zero polynomial"), p);
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let coeff = (*r.last().unwrap() as u64 * lead_inv as u64 % p as u64) as u32;
            for (i, &bc) in b.iter().enumerate() {
                let sub = (coeff as u64 * bc as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
            r = trim(r);
        }
        r
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, (a % p) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "{a} is not invertible mod {p}");
    t.rem_euclid(p as i64) as u32
}

/// Monic polynomials of the given degree, ordered by their encoding
/// `c_0 + c_1 p + ...` of the lower coefficients.
fn monic_polys(p: u32, degree: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(degree);
    (0..count).map(move |mut code| {
        let mut coeffs = Vec::with_capacity(degree as usize + 1);
        for _ in 0..degree {
            coeffs.push((code % p as u64) as u32);
            code /= p as u64;
        }
        coeffs.push(1);
        coeffs
    })
}

fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let degree = poly.len() as u32 - 1;
    if degree <= 1 {
        return degree == 1;
    }
    (1..=degree / 2).all(|d| monic_polys(p, d).all(|f| !poly::rem(poly, &f, p).is_empty()))
}

fn smallest_irreducible(p: u32, m: u32) -> Vec<u32> {
    monic_polys(p, m)
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

struct Tables {
    spec: FieldSpec,
    q: u32,
    add: Vec<u32>,
    neg: Vec<u32>,
    /// `log[a]` for `a != 0`, relative to `generator`.
    log: Vec<u32>,
    /// `exp[k] = generator^k` for `0 <= k < q - 1`.
    exp: Vec<u32>,
}

/// Shared handle to GF(p^m) with precomputed tables.
#[derive(Clone)]
pub struct Field(Arc<Tables>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p(), self.m())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Field {}

impl Field {
    pub fn new(spec: &FieldSpec) -> Result<Field> {
        let spec = spec.resolve()?;
        let q64 = spec.order();
        if q64 > MAX_FIELD_ORDER {
            return Err(Error::FieldTooLarge(q64));
        }
        let (p, m, q) = (spec.p, spec.m as usize, q64 as u32);
        let modulus = spec.modulus.clone().unwrap();

        let digits = |mut a: u32| -> Vec<u32> {
            let mut d = vec![0; m];
            for slot in d.iter_mut() {
                *slot = a % p;
                a /= p;
            }
            d
        };
        let encode = |d: &[u32]| -> u32 { d.iter().rev().fold(0, |acc, &c| acc * p + c) };

        let mut add = vec![0u32; (q * q) as usize];
        let mut neg = vec![0u32; q as usize];
        for a in 0..q {
            let da = digits(a);
            neg[a as usize] = encode(&da.iter().map(|&c| (p - c) % p).collect::<Vec<_>>());
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = encode(&sum);
            }
        }

        let mul_slow = |a: u32, b: u32| -> u32 {
            let (da, db) = (digits(a), digits(b));
            let mut prod = vec![0u32; 2 * m];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
                }
            }
            let mut r = poly::rem(&prod, &modulus, p);
            r.resize(m, 0);
            encode(&r)
        };

        let (mut log, mut exp) = (vec![0u32; q as usize], Vec::with_capacity(q as usize - 1));
        let generator = (1..q)
            .find(|&g| {
                let mut x = 1u32;
                for k in 1..q - 1 {
                    x = mul_slow(x, g);
                    if x == 1 {
                        return k == q - 1;
                    }
                }
                true
            })
            .expect("multiplicative group of a finite field is cyclic");
        let mut x = 1u32;
        for k in 0..q - 1 {
            exp.push(x);
            log[x as usize] = k;
            x = mul_slow(x, generator);
        }

        Ok(Field(Arc::new(Tables { spec, q, add, neg, log, exp })))
    }

    pub fn prime(p: u32) -> Result<Field> {
        Field::new(&FieldSpec::prime(p))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn p(&self) -> u32 {
        self.0.spec.p
    }

    pub fn m(&self) -> u32 {
        self.0.spec.m
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn zero(&self) -> Fq {
        Fq::ZERO
    }

    pub fn one(&self) -> Fq {
        Fq::ONE
    }

    /// Every element, in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.0.q).map(Fq)
    }

    /// `k·1`, the image of an integer in the prime subring.
    pub fn embed_int(&self, k: i64) -> Fq {
        Fq(k.rem_euclid(self.p() as i64) as u32)
    }

    /// `Some(k)` with `0 <= k < p` when `a = k·1`.
    pub fn as_int(&self, a: Fq) -> Option<u32> {
        (a.0 < self.p()).then_some(a.0)
    }

    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        Fq(self.0.add[(a.0 * self.0.q + b.0) as usize])
    }

    pub fn neg(&self, a: Fq) -> Fq {
        Fq(self.0.neg[a.0 as usize])
    }

    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if a.0 == 0 || b.0 == 0 {
            return Fq::ZERO;
        }
        let t = &self.0;
        let k = (t.log[a.0 as usize] + t.log[b.0 as usize]) % (t.q - 1);
        Fq(t.exp[k as usize])
    }

    pub fn inv(&self, a: Fq) -> Result<Fq> {
        if a.0 == 0 {
            return Err(Error::InversionOfZero);
        }
        let t = &self.0;
        let k = (t.q - 1 - t.log[a.0 as usize]) % (t.q - 1);
        Ok(Fq(t.exp[k as usize]))
    }

    pub fn div(&self, a: Fq, b: Fq) -> Result<Fq> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fq, e: u64) -> Fq {
        if e == 0 {
            return Fq::ONE;
        }
        if a.0 == 0 {
            return Fq::ZERO;
        }
        let t = &self.0;
        let k = (t.log[a.0 as usize] as u64 * e) % (t.q as u64 - 1);
        Fq(t.exp[k as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: Fq) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let n = self.0.q as u64 - 1;
        let k = self.0.log[a.0 as usize] as u64;
        Some(n / gcd(n, k))
    }

    /// Coefficients of `a` as a polynomial in the field generator, little-endian.
    pub fn coeffs(&self, a: Fq) -> Vec<u32> {
        let p = self.p();
        let mut code = a.0;
        (0..self.m())
            .map(|_| {
                let c = code % p;
                code /= p;
                c
            })
            .collect()
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Fq> {
        if coeffs.len() > self.m() as usize {
            return Err(Error::Invalid(format!(
                "{} coefficients for an extension of degree {}",
                coeffs.len(),
                self.m()
            )));
        }
        let p = self.p();
        Ok(Fq(coeffs.iter().rev().fold(0, |acc, &c| acc * p + c % p)))
    }

    pub fn sum<I: IntoIterator<Item = Fq>>(&self, it: I) -> Fq {
        it.into_iter().fold(Fq::ZERO, |acc, x| self.add(acc, x))
    }

    /// Human-readable form: an integer for prime-subring elements,
    /// otherwise the coefficient list.
    pub fn display(&self, a: Fq) -> String {
        match self.as_int(a) {
            Some(k) => k.to_string(),
            None => format!("{:?}", self.coeffs(a)),
        }
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embed_int_reduces_mod_p() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.embed_int(0), Fq::ZERO);
        assert_eq!(f.embed_int(5), Fq::ZERO);
        assert_eq!(f.embed_int(7), f.embed_int(2));
        assert_eq!(f.embed_int(-1), f.embed_int(4));
    }

    #[test]
    fn gf4_multiplication() {
        let spec = FieldSpec { p: 2, m: 2, modulus: Some(vec![1, 1, 1]) };
        let f = Field::new(&spec).unwrap();
        let x = f.from_coeffs(&[0, 1]).unwrap();
        let x_plus_1 = f.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(f.mul(x, x), x_plus_1);
    }

    #[test]
    fn inverse_and_negation() {
        let f = Field::new(&FieldSpec { p: 3, m: 2, modulus: None }).unwrap();
        for a in f.elements() {
            assert_eq!(f.add(a, f.neg(a)), Fq::ZERO);
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), Fq::ONE);
            }
        }
        assert_eq!(f.inv(Fq::ZERO), Err(Error::InversionOfZero));
    }

    #[test]
    fn splitting_field_degrees() {
        assert_eq!(find_splitting_field(3, &[2]).unwrap().m, 1);
        assert_eq!(find_splitting_field(2, &[3]).unwrap().m, 2);
        assert_eq!(find_splitting_field(5, &[1]).unwrap().m, 1);
        assert_eq!(find_splitting_field(5, &[1, 2, 3]).unwrap().m, 2);
        assert!(matches!(
            find_splitting_field(2, &[2]),
            Err(Error::OrderDivisibleByP { .. })
        ));
    }

    #[test]
    fn modulus_search_is_smallest_and_validated() {
        // x^2 + 1 is irreducible over GF(3) and precedes x^2 + x + 2.
        let spec = FieldSpec { p: 3, m: 2, modulus: None }.resolve().unwrap();
        assert_eq!(spec.modulus, Some(vec![1, 0, 1]));
        let bad = FieldSpec { p: 3, m: 2, modulus: Some(vec![1, 1, 1]) };
        assert!(matches!(bad.resolve(), Err(Error::ReducibleModulus(_))));
        assert!(matches!(FieldSpec::prime(4).resolve(), Err(Error::NotPrime(4))));
    }

    #[test]
    fn coefficient_round_trip() {
        let f = Field::new(&FieldSpec { p: 5, m: 2, modulus: None }).unwrap();
        for a in f.elements() {
            assert_eq!(f.from_coeffs(&f.coeffs(a)).unwrap(), a);
        }
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        fn fields() -> Vec<Field> {
            [(2, 1), (2, 3), (3, 1), (3, 2), (5, 1), (5, 2), (7, 1)]
                .iter()
                .map(|&(p, m)| Field::new(&FieldSpec { p, m, modulus: None }).unwrap())
                .collect()
        }

        proptest! {
            #[test]
            fn ring_axioms(fi in 0usize..7, a in 0u32..4096, b in 0u32..4096, c in 0u32..4096) {
                let f = &fields()[fi];
                let q = f.order();
                let (a, b, c) = (Fq(a % q), Fq(b % q), Fq(c % q));
                prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                prop_assert_eq!(f.add(a, b), f.add(b, a));
                prop_assert_eq!(f.mul(a, b), f.mul(b, a));
                prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                prop_assert_eq!(f.mul(a, Fq::ONE), a);
                prop_assert_eq!(f.add(a, Fq::ZERO), a);
            }

            #[test]
            fn embed_int_is_a_ring_homomorphism(fi in 0usize..7, j in -1000i64..1000, k in -1000i64..1000) {
                let f = &fields()[fi];
                prop_assert_eq!(f.embed_int(j + k), f.add(f.embed_int(j), f.embed_int(k)));
                prop_assert_eq!(f.embed_int(j * k), f.mul(f.embed_int(j), f.embed_int(k)));
                prop_assert_eq!(f.embed_int(1), Fq::ONE);
            }
        }
    }
}
