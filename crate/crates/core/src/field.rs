//! Finite fields `F_{p^m} = Z_p[w]/(f(w))` for odd primes `p`.
//!
//! Elements are stored as a packed base-`p` integer with the constant
//! coefficient in the most significant digit, so the natural integer order of
//! the packed value is the lexicographic order on the ascending-degree
//! coefficient vector `[c0, c1, ..., c_{m-1}]`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::DEFAULT_ENUMERATION_BOUND;

/// Fields up to this order get exp/log tables at construction.
const TABLE_LIMIT: u64 = 1 << 16;

/// Largest order we are willing to represent (packed values are `u32`).
const ORDER_LIMIT: u64 = 1 << 31;

/// Cap on the number of trial divisors used for the irreducibility check.
const IRREDUCIBILITY_SEARCH_LIMIT: u64 = 10_000_000;

/// An element of some [`FieldSpec`]. Only meaningful together with its field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElem(pub(crate) u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);

    /// Position of the element in the canonical enumeration order.
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// The automorphism `θ_i: a ↦ a^{p^i}` of `F_{p^m}`, for `i` dividing `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AutExponent {
    i: u32,
    m: u32,
}

impl AutExponent {
    pub fn new(i: u32, m: u32) -> Result<Self> {
        if i == 0 || m == 0 || !m.is_multiple_of(i) {
            return Err(Error::InvalidExponent { i, m });
        }
        Ok(AutExponent { i, m })
    }

    pub fn i(self) -> u32 {
        self.i
    }

    /// Extension degree of the field this automorphism acts on.
    pub fn m(self) -> u32 {
        self.m
    }

    /// Order `t_i = m / i` of `θ_i`.
    pub fn order(self) -> u32 {
        self.m / self.i
    }

    /// Frobenius exponent `e` with `θ_i^k = (a ↦ a^{p^e})`, `0 ≤ e < m`.
    pub fn power_exponent(self, k: u64) -> u32 {
        ((self.i as u64 * (k % self.order() as u64)) % self.m as u64) as u32
    }
}

#[derive(Clone, Debug)]
struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// The field `F_{p^m}` presented as `Z_p[w]/(f(w))`.
#[derive(Clone)]
pub struct FieldSpec {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    // weights[j] = p^(m-1-j), the place value of coefficient c_j
    weights: Vec<u32>,
    tables: Option<LogTables>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n as u64 {
        if (n as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// Builds `F_{p^m}` from the ascending coefficients of a monic modulus of
    /// degree `m`. For `m = 1` the modulus is replaced by the canonical `[0, 1]`.
    pub fn new(p: u32, m: u32, modulus: &[u32]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p == 2 {
            return Err(Error::EvenCharacteristic(p));
        }
        if m == 0 {
            return Err(Error::DegreeMismatch {
                expected: 1,
                found: 0,
            });
        }
        let q = (p as u64)
            .checked_pow(m)
            .filter(|&q| q <= ORDER_LIMIT)
            .ok_or(Error::FieldTooLarge { p, m })?;
        let found = modulus.len().saturating_sub(1);
        if modulus.len() != m as usize + 1 {
            return Err(Error::DegreeMismatch {
                expected: m as usize,
                found,
            });
        }
        if let Some(&bad) = modulus.iter().find(|&&c| c >= p) {
            return Err(Error::ResidueOutOfRange {
                value: bad as u64,
                p,
            });
        }
        if modulus[m as usize] != 1 {
            return Err(Error::NonMonicModulus);
        }
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            if !zp::is_irreducible(p, modulus)? {
                return Err(Error::ReducibleModulus(p));
            }
            modulus.to_vec()
        };
        let weights = (0..m).map(|j| p.pow(m - 1 - j)).collect();
        let mut spec = FieldSpec {
            p,
            m,
            q: q as u32,
            modulus,
            weights,
            tables: None,
        };
        if q <= TABLE_LIMIT {
            spec.tables = Some(spec.build_tables());
        }
        Ok(spec)
    }

    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Self> {
        FieldSpec::new(p, 1, &[0, 1])
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem(0)
    }

    pub fn one(&self) -> FieldElem {
        FieldElem(self.weights[0])
    }

    /// Image of the integer `k` in the prime subfield.
    pub fn from_int(&self, k: i64) -> FieldElem {
        let r = k.rem_euclid(self.p as i64) as u32;
        FieldElem(r * self.weights[0])
    }

    /// The class of `w` (for `m = 1` this is `0`).
    pub fn generator(&self) -> FieldElem {
        if self.m == 1 {
            self.zero()
        } else {
            FieldElem(self.weights[1])
        }
    }

    /// Element with the given ascending coefficients. Missing trailing
    /// coefficients are zero; too many coefficients or residues `≥ p` are rejected.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElem> {
        if coeffs.len() > self.m as usize {
            return Err(Error::LengthMismatch {
                expected: self.m as usize,
                found: coeffs.len(),
            });
        }
        let mut packed = 0u32;
        for (j, &c) in coeffs.iter().enumerate() {
            if c >= self.p {
                return Err(Error::ResidueOutOfRange {
                    value: c as u64,
                    p: self.p,
                });
            }
            packed += c * self.weights[j];
        }
        Ok(FieldElem(packed))
    }

    pub fn coeffs(&self, x: FieldElem) -> Vec<u32> {
        self.weights.iter().map(|&w| (x.0 / w) % self.p).collect()
    }

    /// Element at position `index` of the canonical enumeration.
    pub fn elem(&self, index: u32) -> Result<FieldElem> {
        if index >= self.q {
            return Err(Error::FieldMismatch);
        }
        Ok(FieldElem(index))
    }

    pub fn contains(&self, x: FieldElem) -> bool {
        x.0 < self.q
    }

    pub fn is_prime_field_elem(&self, x: FieldElem) -> bool {
        x.0.is_multiple_of(self.weights[0])
    }

    pub fn add(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        let p = self.p;
        let mut out = 0;
        for &w in &self.weights {
            let d = ((x.0 / w) % p + (y.0 / w) % p) % p;
            out += d * w;
        }
        FieldElem(out)
    }

    pub fn neg(&self, x: FieldElem) -> FieldElem {
        let p = self.p;
        let mut out = 0;
        for &w in &self.weights {
            let d = (p - (x.0 / w) % p) % p;
            out += d * w;
        }
        FieldElem(out)
    }

    pub fn sub(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        let p = self.p;
        let mut out = 0;
        for &w in &self.weights {
            let d = ((x.0 / w) % p + p - (y.0 / w) % p) % p;
            out += d * w;
        }
        FieldElem(out)
    }

    pub fn mul(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        if x.0 == 0 || y.0 == 0 {
            return FieldElem(0);
        }
        match &self.tables {
            Some(t) => {
                let s = t.log[x.0 as usize] + t.log[y.0 as usize];
                let order = self.q - 1;
                FieldElem(t.exp[(if s >= order { s - order } else { s }) as usize])
            }
            None => self.mul_schoolbook(x, y),
        }
    }

    /// Multiplication by polynomial product and reduction modulo `f(w)`,
    /// independent of the exp/log tables.
    pub fn mul_schoolbook(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        let prod = zp::mul(self.p, &self.coeffs(x), &self.coeffs(y));
        let (_, r) = zp::divrem(self.p, &prod, &self.modulus);
        self.pack(&r)
    }

    /// Inverse by the extended Euclidean algorithm on coefficient polynomials.
    pub fn inv(&self, x: FieldElem) -> Result<FieldElem> {
        if x.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let (g, s) = zp::xgcd_left(self.p, &self.coeffs(x), &self.modulus);
        // g is a nonzero constant because the modulus is irreducible
        debug_assert_eq!(g.len(), 1);
        let c = zp::inv(self.p, g[0]);
        let s = zp::scale(self.p, &s, c);
        let (_, r) = zp::divrem(self.p, &s, &self.modulus);
        Ok(self.pack(&r))
    }

    pub fn div(&self, x: FieldElem, y: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(x, self.inv(y)?))
    }

    pub fn pow(&self, x: FieldElem, mut e: u64) -> FieldElem {
        let mut base = x;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `x^{p^e}` for `0 ≤ e`, the `e`-th power of the absolute Frobenius.
    pub fn frobenius_exp(&self, x: FieldElem, e: u32) -> FieldElem {
        let e = e % self.m;
        if e == 0 || x.is_zero() {
            return x;
        }
        match &self.tables {
            Some(t) => {
                let order = (self.q - 1) as u64;
                let mut k = 1u64;
                for _ in 0..e {
                    k = k * self.p as u64 % order;
                }
                let l = t.log[x.0 as usize] as u64 * k % order;
                FieldElem(t.exp[l as usize])
            }
            None => {
                let mut y = x;
                for _ in 0..e {
                    y = self.pow(y, self.p as u64);
                }
                y
            }
        }
    }

    /// `θ_i(x) = x^{p^i}`.
    pub fn frobenius(&self, x: FieldElem, aut: AutExponent) -> Result<FieldElem> {
        self.check_aut(aut)?;
        Ok(self.frobenius_exp(x, aut.i))
    }

    /// `θ_i^k(x)`.
    pub fn theta_pow(&self, x: FieldElem, aut: AutExponent, k: u64) -> FieldElem {
        self.frobenius_exp(x, aut.power_exponent(k))
    }

    pub fn aut(&self, i: u32) -> Result<AutExponent> {
        AutExponent::new(i, self.m)
    }

    pub(crate) fn check_aut(&self, aut: AutExponent) -> Result<()> {
        if aut.m != self.m {
            return Err(Error::InvalidExponent {
                i: aut.i,
                m: self.m,
            });
        }
        Ok(())
    }

    /// All `q` elements in canonical order, if `q` is within `bound`.
    pub fn elements_bounded(&self, bound: u64) -> Result<Vec<FieldElem>> {
        if self.q as u64 > bound {
            return Err(Error::EnumerationTooLarge {
                size: self.q as u128,
                bound: bound as u128,
            });
        }
        Ok((0..self.q).map(FieldElem).collect())
    }

    pub fn elements(&self) -> Result<Vec<FieldElem>> {
        self.elements_bounded(DEFAULT_ENUMERATION_BOUND)
    }

    /// Elements of the subfield `F_{p^i}` fixed by `θ_i`.
    pub fn fixed_subfield(&self, aut: AutExponent) -> Result<Vec<FieldElem>> {
        self.check_aut(aut)?;
        Ok(self
            .elements()?
            .into_iter()
            .filter(|&x| self.frobenius_exp(x, aut.i) == x)
            .collect())
    }

    fn pack(&self, coeffs: &[u32]) -> FieldElem {
        let mut packed = 0;
        for (j, &c) in coeffs.iter().enumerate().take(self.m as usize) {
            packed += c * self.weights[j];
        }
        FieldElem(packed)
    }

    fn build_tables(&self) -> LogTables {
        let order = self.q - 1;
        let one = self.one();
        let mut exp = Vec::with_capacity(order as usize);
        for cand in 1..self.q {
            let g = FieldElem(cand);
            exp.clear();
            let mut y = one;
            loop {
                exp.push(y.0);
                y = self.mul_schoolbook(y, g);
                if y == one || exp.len() > order as usize {
                    break;
                }
            }
            if exp.len() == order as usize {
                let mut log = vec![0u32; self.q as usize];
                for (k, &e) in exp.iter().enumerate() {
                    log[e as usize] = k as u32;
                }
                return LogTables { exp, log };
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }
}

/// Dense polynomial helpers over `Z_p`, coefficients ascending, no trailing zeros.
pub(crate) mod zp {
    use super::{Error, Result, IRREDUCIBILITY_SEARCH_LIMIT};
    use alloc::vec;
    use alloc::vec::Vec;

    pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn inv(p: u32, a: u32) -> u32 {
        // a^(p-2) by square and multiply
        let (mut base, mut e, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p as u64;
            }
            base = base * base % p as u64;
            e >>= 1;
        }
        acc as u32
    }

    pub fn scale(p: u32, a: &[u32], c: u32) -> Vec<u32> {
        trim(
            a.iter()
                .map(|&x| (x as u64 * c as u64 % p as u64) as u32)
                .collect(),
        )
    }

    pub fn sub(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|k| {
                let x = a.get(k).copied().unwrap_or(0);
                let y = b.get(k).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(out)
    }

    pub fn mul(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        trim(out.into_iter().map(|c| c as u32).collect())
    }

    /// Division with remainder by a nonzero `b`.
    pub fn divrem(p: u32, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
        let b = trim(b.to_vec());
        let mut r = trim(a.to_vec());
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let lead_inv = inv(p, *b.last().expect("nonzero divisor")) as u64;
        let mut quot = vec![0u32; r.len() - b.len() + 1];
        while r.len() >= b.len() && !r.is_empty() {
            let shift = r.len() - b.len();
            let c = (*r.last().unwrap() as u64 * lead_inv % p as u64) as u32;
            quot[shift] = c;
            for (j, &bj) in b.iter().enumerate() {
                let t = (c as u64 * bj as u64 % p as u64) as u32;
                r[shift + j] = (r[shift + j] + p - t) % p;
            }
            r = trim(r);
        }
        (trim(quot), r)
    }

    /// Returns `(g, s)` with `s·a ≡ g (mod b)` and `g = gcd(a, b)` (not normalised).
    pub fn xgcd_left(p: u32, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
        let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
        let (mut s0, mut s1) = (vec![1u32], Vec::new());
        while !r1.is_empty() {
            let (quo, rem) = divrem(p, &r0, &r1);
            let s2 = sub(p, &s0, &mul(p, &quo, &s1));
            r0 = core::mem::replace(&mut r1, rem);
            s0 = core::mem::replace(&mut s1, s2);
        }
        (r0, s0)
    }

    /// Trial division by every monic polynomial of degree `1..=deg/2`.
    pub fn is_irreducible(p: u32, f: &[u32]) -> Result<bool> {
        let f = trim(f.to_vec());
        let deg = f.len().saturating_sub(1);
        if deg == 0 {
            return Ok(false);
        }
        let half = deg / 2;
        let total: u64 = (1..=half as u32)
            .map(|d| (p as u64).saturating_pow(d))
            .sum();
        if total > IRREDUCIBILITY_SEARCH_LIMIT {
            return Err(Error::FieldTooLarge { p, m: deg as u32 });
        }
        for d in 1..=half {
            let count = (p as u64).pow(d as u32);
            for idx in 0..count {
                let mut cand = vec![0u32; d + 1];
                let mut k = idx;
                for c in cand.iter_mut().take(d) {
                    *c = (k % p as u64) as u32;
                    k /= p as u64;
                }
                cand[d] = 1;
                if divrem(p, &f, &cand).1.is_empty() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> FieldSpec {
        FieldSpec::new(3, 2, &[1, 0, 1]).unwrap()
    }

    fn f25() -> FieldSpec {
        FieldSpec::new(5, 2, &[2, 0, 1]).unwrap()
    }

    fn f27() -> FieldSpec {
        // x^3 - x + 1 = x^3 + 2x + 1 is irreducible over Z_3
        FieldSpec::new(3, 3, &[1, 2, 0, 1]).unwrap()
    }

    // Oracle: w^2 + 1 has no root mod 3, checked by exhaustion.
    #[test]
    fn f9_modulus_has_no_roots() {
        assert!((0..3u32).all(|r| (r * r + 1) % 3 != 0));
        assert!(FieldSpec::new(3, 2, &[1, 0, 1]).is_ok());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            FieldSpec::new(2, 2, &[1, 1, 1]).unwrap_err(),
            Error::EvenCharacteristic(2)
        );
        assert_eq!(
            FieldSpec::new(9, 1, &[0, 1]).unwrap_err(),
            Error::NotPrime(9)
        );
        assert_eq!(
            FieldSpec::new(1, 1, &[0, 1]).unwrap_err(),
            Error::NotPrime(1)
        );
        // w^2 - 1 = (w - 1)(w + 1)
        assert_eq!(
            FieldSpec::new(3, 2, &[2, 0, 1]).unwrap_err(),
            Error::ReducibleModulus(3)
        );
        assert!(matches!(
            FieldSpec::new(3, 2, &[1, 1]).unwrap_err(),
            Error::DegreeMismatch {
                expected: 2,
                found: 1
            }
        ));
        assert_eq!(
            FieldSpec::new(3, 2, &[1, 0, 2]).unwrap_err(),
            Error::NonMonicModulus
        );
        assert!(matches!(
            FieldSpec::new(3, 2, &[1, 0, 4]).unwrap_err(),
            Error::ResidueOutOfRange { value: 4, p: 3 }
        ));
    }

    #[test]
    fn prime_field_degenerate_case() {
        let f3 = FieldSpec::new(3, 1, &[0, 1]).unwrap();
        assert_eq!(f3.modulus(), &[0, 1]);
        // any monic linear modulus gives the same canonical field
        let other = FieldSpec::new(3, 1, &[2, 1]).unwrap();
        assert_eq!(f3, other);
        let two = f3.from_int(2);
        assert_eq!(f3.inv(two).unwrap(), two);
        assert_eq!(
            f3.elements()
                .unwrap()
                .iter()
                .map(|x| f3.coeffs(*x)[0])
                .collect::<Vec<_>>(),
            [0, 1, 2]
        );
    }

    #[test]
    fn w_squared_is_minus_one_in_f9() {
        let f = f9();
        let w = f.generator();
        assert_eq!(f.mul(w, w), f.from_int(-1));
        assert_eq!(f.coeffs(f.mul(w, w)), [2, 0]);
    }

    #[test]
    fn frobenius_of_w_in_f9() {
        let f = f9();
        let w = f.generator();
        let aut = f.aut(1).unwrap();
        let two_w = f.mul(f.from_int(2), w);
        assert_eq!(f.frobenius(w, aut).unwrap(), two_w);
        assert_eq!(f.coeffs(two_w), [0, 2]);
    }

    #[test]
    fn invalid_exponent() {
        let f = f27();
        assert!(matches!(
            f.aut(2),
            Err(Error::InvalidExponent { i: 2, m: 3 })
        ));
        assert!(f.aut(0).is_err());
        let a = f.aut(3).unwrap();
        assert_eq!(a.order(), 1);
        let f9 = f9();
        // exponent built for a different degree
        assert!(f9.frobenius(f9.one(), a).is_err());
    }

    #[test]
    fn element_enumeration() {
        assert_eq!(f9().elements().unwrap().len(), 9);
        assert_eq!(f9().elements().unwrap()[0], FieldElem::ZERO);
        assert_eq!(f25().elements().unwrap().len(), 25);
        let f = f9();
        let coeffs: Vec<_> = f.elements().unwrap().iter().map(|&x| f.coeffs(x)).collect();
        let mut sorted = coeffs.clone();
        sorted.sort();
        assert_eq!(coeffs, sorted);
        let big = FieldSpec::new(3, 11, &[1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 1]).unwrap();
        assert!(matches!(
            big.elements(),
            Err(Error::EnumerationTooLarge { .. })
        ));
    }

    fn check_axioms(f: &FieldSpec) {
        let els = f.elements().unwrap();
        let zero = f.zero();
        let one = f.one();
        for &x in &els {
            assert_eq!(f.add(x, zero), x);
            assert_eq!(f.mul(x, one), x);
            assert_eq!(f.add(x, f.neg(x)), zero);
            if !x.is_zero() {
                assert_eq!(f.mul(x, f.inv(x).unwrap()), one);
            }
            for &y in &els {
                assert_eq!(f.add(x, y), f.add(y, x));
                assert_eq!(f.mul(x, y), f.mul(y, x));
                assert_eq!(f.mul(x, y), f.mul_schoolbook(x, y));
                assert_eq!(f.sub(x, y), f.add(x, f.neg(y)));
                for &z in els.iter().step_by(3) {
                    assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                    assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                    assert_eq!(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
                }
            }
        }
        assert_eq!(f.inv(zero), Err(Error::ZeroInverse));
    }

    #[test]
    fn field_axioms_exhaustive() {
        check_axioms(&FieldSpec::prime(3).unwrap());
        check_axioms(&FieldSpec::prime(7).unwrap());
        check_axioms(&f9());
        check_axioms(&f25());
        check_axioms(&f27());
    }

    #[test]
    fn frobenius_properties_exhaustive() {
        for f in [f9(), f25(), f27(), FieldSpec::prime(5).unwrap()] {
            for i in 1..=f.degree() {
                let Ok(aut) = f.aut(i) else { continue };
                let els = f.elements().unwrap();
                let mut fixed = 0;
                for &x in &els {
                    let mut y = x;
                    for _ in 0..aut.order() {
                        y = f.frobenius(y, aut).unwrap();
                    }
                    assert_eq!(y, x);
                    assert_eq!(
                        f.frobenius(x, aut).unwrap(),
                        f.pow(x, (f.characteristic() as u64).pow(i))
                    );
                    if f.frobenius(x, aut).unwrap() == x {
                        fixed += 1;
                    }
                    for &z in &els {
                        let t = |a| f.frobenius(a, aut).unwrap();
                        assert_eq!(t(f.add(x, z)), f.add(t(x), t(z)));
                        assert_eq!(t(f.mul(x, z)), f.mul(t(x), t(z)));
                    }
                }
                assert_eq!(fixed, f.characteristic().pow(i));
                assert_eq!(f.fixed_subfield(aut).unwrap().len() as u32, fixed);
            }
        }
    }

    #[test]
    fn prime_subfield_fixed_by_frobenius() {
        let f = f27();
        let aut = f.aut(1).unwrap();
        for k in 0..3 {
            let c = f.from_int(k);
            assert!(f.is_prime_field_elem(c));
            assert_eq!(f.frobenius(c, aut).unwrap(), c);
        }
    }

    #[test]
    fn large_field_without_tables_agrees() {
        // 3^11 is above the table limit, so everything goes through schoolbook
        // x^11 + 2x^2 + 1 is irreducible over Z_3
        let f = FieldSpec::new(3, 11, &[1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 1]).unwrap();
        assert!(f.tables.is_none());
        let x = f.from_coeffs(&[1, 2, 0, 1]).unwrap();
        let y = f.from_coeffs(&[0, 0, 2, 2, 1]).unwrap();
        assert_eq!(f.mul(f.inv(x).unwrap(), x), f.one());
        let aut = f.aut(1).unwrap();
        let t = |a| f.frobenius(a, aut).unwrap();
        assert_eq!(t(f.mul(x, y)), f.mul(t(x), t(y)));
        let mut z = x;
        for _ in 0..11 {
            z = t(z);
        }
        assert_eq!(z, x);
    }
}
