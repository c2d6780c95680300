//! Skew polynomial rings `K[x, θ_i]` with `x·a = θ_i(a)·x`, for `K = F_q` or `K = R`.

mod divisors;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;

use crate::error::{Error, Result};
use crate::field::{AutExponent, FieldElem, FieldSpec};
use crate::ring::{CrtTriple, RingElem, RingR};

pub use divisors::{
    count_from_factorization, extended_gcd_commutative, factor_xn_minus_1,
    is_irreducible_over_subfield, monic_right_divisors, monic_right_divisors_brute_force,
    monic_right_divisors_from_factorization, Factorization,
};

/// Coefficient domain of a skew polynomial ring. `Elem::default()` is zero.
pub trait CoeffRing {
    type Elem: Copy + Eq + Ord + Default + Debug;

    fn one(&self) -> Self::Elem;
    fn add(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem;
    fn sub(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem;
    fn neg(&self, x: Self::Elem) -> Self::Elem;
    fn mul(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem;
    /// Inverse if `x` is a unit.
    fn unit_inverse(&self, x: Self::Elem) -> Option<Self::Elem>;
    /// `θ_i^k(x)`.
    fn theta_pow(&self, x: Self::Elem, aut: AutExponent, k: u64) -> Self::Elem;
    fn check_aut(&self, aut: AutExponent) -> Result<()>;
    fn field(&self) -> &FieldSpec;
    /// `λ·x` for `λ` in the field.
    fn scale(&self, lambda: FieldElem, x: Self::Elem) -> Self::Elem;

    fn zero(&self) -> Self::Elem {
        Self::Elem::default()
    }

    fn is_zero(&self, x: Self::Elem) -> bool {
        x == Self::Elem::default()
    }
}

impl CoeffRing for FieldSpec {
    type Elem = FieldElem;

    fn one(&self) -> FieldElem {
        FieldSpec::one(self)
    }
    fn add(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        FieldSpec::add(self, x, y)
    }
    fn sub(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        FieldSpec::sub(self, x, y)
    }
    fn neg(&self, x: FieldElem) -> FieldElem {
        FieldSpec::neg(self, x)
    }
    fn mul(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        FieldSpec::mul(self, x, y)
    }
    fn unit_inverse(&self, x: FieldElem) -> Option<FieldElem> {
        self.inv(x).ok()
    }
    fn theta_pow(&self, x: FieldElem, aut: AutExponent, k: u64) -> FieldElem {
        FieldSpec::theta_pow(self, x, aut, k)
    }
    fn check_aut(&self, aut: AutExponent) -> Result<()> {
        FieldSpec::check_aut(self, aut)
    }
    fn field(&self) -> &FieldSpec {
        self
    }
    fn scale(&self, lambda: FieldElem, x: FieldElem) -> FieldElem {
        FieldSpec::mul(self, lambda, x)
    }
}

impl CoeffRing for RingR<'_> {
    type Elem = RingElem;

    fn one(&self) -> RingElem {
        RingR::one(self)
    }
    fn add(&self, x: RingElem, y: RingElem) -> RingElem {
        RingR::add(self, x, y)
    }
    fn sub(&self, x: RingElem, y: RingElem) -> RingElem {
        RingR::sub(self, x, y)
    }
    fn neg(&self, x: RingElem) -> RingElem {
        RingR::neg(self, x)
    }
    fn mul(&self, x: RingElem, y: RingElem) -> RingElem {
        RingR::mul(self, x, y)
    }
    fn unit_inverse(&self, x: RingElem) -> Option<RingElem> {
        self.inv(x)
    }
    fn theta_pow(&self, x: RingElem, aut: AutExponent, k: u64) -> RingElem {
        RingR::theta_pow(self, x, aut, k)
    }
    fn check_aut(&self, aut: AutExponent) -> Result<()> {
        self.field().check_aut(aut)
    }
    fn field(&self) -> &FieldSpec {
        RingR::field(self)
    }
    fn scale(&self, lambda: FieldElem, x: RingElem) -> RingElem {
        RingR::scale(self, lambda, x)
    }
}

/// A skew polynomial with ascending coefficients and no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewPoly<E> {
    coeffs: Vec<E>,
    aut: AutExponent,
}

impl<E: Copy + Eq + Default> SkewPoly<E> {
    pub fn new(mut coeffs: Vec<E>, aut: AutExponent) -> Self {
        while coeffs.last().is_some_and(|c| *c == E::default()) {
            coeffs.pop();
        }
        SkewPoly { coeffs, aut }
    }

    pub fn zero(aut: AutExponent) -> Self {
        SkewPoly {
            coeffs: Vec::new(),
            aut,
        }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn aut(&self) -> AutExponent {
        self.aut
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<E> {
        self.coeffs.last().copied()
    }

    pub fn coeff(&self, k: usize) -> E {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    /// Coefficient vector of length exactly `n` (zero padded). Panics if the
    /// degree is `n` or more.
    pub fn to_vector(&self, n: usize) -> Vec<E> {
        assert!(
            self.coeffs.len() <= n,
            "degree {} does not fit length {n}",
            self.coeffs.len() - 1
        );
        let mut v = self.coeffs.clone();
        v.resize(n, E::default());
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionResult<E> {
    pub quotient: SkewPoly<E>,
    pub remainder: SkewPoly<E>,
}

/// Arithmetic in `K[x, θ_i]`.
#[derive(Clone, Copy, Debug)]
pub struct SkewRing<'a, K: CoeffRing> {
    base: &'a K,
    aut: AutExponent,
}

impl<'a, K: CoeffRing> SkewRing<'a, K> {
    pub fn new(base: &'a K, aut: AutExponent) -> Result<Self> {
        base.check_aut(aut)?;
        Ok(SkewRing { base, aut })
    }

    pub fn base(&self) -> &'a K {
        self.base
    }

    pub fn aut(&self) -> AutExponent {
        self.aut
    }

    pub fn poly(&self, coeffs: Vec<K::Elem>) -> SkewPoly<K::Elem> {
        SkewPoly::new(coeffs, self.aut)
    }

    pub fn zero(&self) -> SkewPoly<K::Elem> {
        SkewPoly::zero(self.aut)
    }

    pub fn one(&self) -> SkewPoly<K::Elem> {
        self.poly(vec![self.base.one()])
    }

    pub fn constant(&self, c: K::Elem) -> SkewPoly<K::Elem> {
        self.poly(vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(&self, c: K::Elem, k: usize) -> SkewPoly<K::Elem> {
        let mut v = vec![self.base.zero(); k + 1];
        v[k] = c;
        self.poly(v)
    }

    pub fn x(&self) -> SkewPoly<K::Elem> {
        self.monomial(self.base.one(), 1)
    }

    /// `x^n - 1`.
    pub fn xn_minus_1(&self, n: usize) -> SkewPoly<K::Elem> {
        let mut v = vec![self.base.zero(); n + 1];
        v[0] = self.base.neg(self.base.one());
        v[n] = self.base.add(v[n], self.base.one());
        self.poly(v)
    }

    fn check(&self, f: &SkewPoly<K::Elem>) -> Result<()> {
        if f.aut != self.aut {
            return Err(Error::AutMismatch);
        }
        Ok(())
    }

    pub fn add(&self, f: &SkewPoly<K::Elem>, g: &SkewPoly<K::Elem>) -> Result<SkewPoly<K::Elem>> {
        self.check(f)?;
        self.check(g)?;
        let n = f.coeffs.len().max(g.coeffs.len());
        Ok(self.poly(
            (0..n)
                .map(|k| self.base.add(f.coeff(k), g.coeff(k)))
                .collect(),
        ))
    }

    pub fn sub(&self, f: &SkewPoly<K::Elem>, g: &SkewPoly<K::Elem>) -> Result<SkewPoly<K::Elem>> {
        self.check(f)?;
        self.check(g)?;
        let n = f.coeffs.len().max(g.coeffs.len());
        Ok(self.poly(
            (0..n)
                .map(|k| self.base.sub(f.coeff(k), g.coeff(k)))
                .collect(),
        ))
    }

    /// `c·f` (left scalar multiplication, no twist).
    pub fn scale_left(&self, c: K::Elem, f: &SkewPoly<K::Elem>) -> SkewPoly<K::Elem> {
        self.poly(f.coeffs.iter().map(|&a| self.base.mul(c, a)).collect())
    }

    /// Applies `θ_i^k` to every coefficient.
    pub fn theta_coeffs(&self, f: &SkewPoly<K::Elem>, k: u64) -> SkewPoly<K::Elem> {
        self.poly(
            f.coeffs
                .iter()
                .map(|&a| self.base.theta_pow(a, self.aut, k))
                .collect(),
        )
    }

    /// Skew product from the monomial rule `(a x^i)(b x^j) = a θ^i(b) x^{i+j}`.
    pub fn mul(&self, f: &SkewPoly<K::Elem>, g: &SkewPoly<K::Elem>) -> Result<SkewPoly<K::Elem>> {
        self.check(f)?;
        self.check(g)?;
        if f.is_zero() || g.is_zero() {
            return Ok(self.zero());
        }
        let base = self.base;
        let order = self.aut.order() as usize;
        // θ^i(g) only depends on i mod the order of θ
        let twisted: Vec<Vec<K::Elem>> = (0..order.min(f.coeffs.len()))
            .map(|i| {
                g.coeffs
                    .iter()
                    .map(|&b| base.theta_pow(b, self.aut, i as u64))
                    .collect()
            })
            .collect();
        let mut out = vec![base.zero(); f.coeffs.len() + g.coeffs.len() - 1];
        for (i, &a) in f.coeffs.iter().enumerate() {
            if base.is_zero(a) {
                continue;
            }
            for (j, &b) in twisted[i % order].iter().enumerate() {
                out[i + j] = base.add(out[i + j], base.mul(a, b));
            }
        }
        Ok(self.poly(out))
    }

    /// Right division `f = q·g + r` with `deg r < deg g`. The leading
    /// coefficient of `g` must be a unit.
    pub fn right_divide(
        &self,
        f: &SkewPoly<K::Elem>,
        g: &SkewPoly<K::Elem>,
    ) -> Result<DivisionResult<K::Elem>> {
        self.check(f)?;
        self.check(g)?;
        let dg = g.degree().ok_or(Error::ZeroDivisor)?;
        let lead_inv = self
            .base
            .unit_inverse(g.coeffs[dg])
            .ok_or(Error::NonMonicDivisor)?;
        let base = self.base;
        let mut rem = f.coeffs.clone();
        if rem.len() <= dg {
            return Ok(DivisionResult {
                quotient: self.zero(),
                remainder: f.clone(),
            });
        }
        let mut quot = vec![base.zero(); rem.len() - dg];
        for k in (0..rem.len() - dg).rev() {
            let c = rem[k + dg];
            if base.is_zero(c) {
                continue;
            }
            // (q_k x^k)·g has leading term q_k θ^k(lc g) x^{k+dg}
            let qk = base.mul(c, base.theta_pow(lead_inv, self.aut, k as u64));
            quot[k] = qk;
            for (l, &gl) in g.coeffs.iter().enumerate() {
                let t = base.mul(qk, base.theta_pow(gl, self.aut, k as u64));
                rem[k + l] = base.sub(rem[k + l], t);
            }
        }
        Ok(DivisionResult {
            quotient: self.poly(quot),
            remainder: self.poly(rem),
        })
    }

    /// Right remainder modulo `x^n - 1`, which folds exponents modulo `n`.
    pub fn reduce_mod_xn_minus_1(&self, f: &SkewPoly<K::Elem>, n: usize) -> SkewPoly<K::Elem> {
        assert!(n > 0);
        let mut out = vec![self.base.zero(); n.min(f.coeffs.len())];
        for (k, &c) in f.coeffs.iter().enumerate() {
            out[k % n] = self.base.add(out[k % n], c);
        }
        self.poly(out)
    }

    /// `f·g` reduced modulo `x^n - 1` on the right.
    pub fn mul_mod(
        &self,
        f: &SkewPoly<K::Elem>,
        g: &SkewPoly<K::Elem>,
        n: usize,
    ) -> Result<SkewPoly<K::Elem>> {
        Ok(self.reduce_mod_xn_minus_1(&self.mul(f, g)?, n))
    }

    pub fn is_right_divisor_of_xn_minus_1(&self, g: &SkewPoly<K::Elem>, n: usize) -> Result<bool> {
        Ok(self
            .right_divide(&self.xn_minus_1(n), g)?
            .remainder
            .is_zero())
    }

    /// The `h` with `x^n - 1 = h·g`.
    pub fn left_quotient_of_xn_minus_1(
        &self,
        g: &SkewPoly<K::Elem>,
        n: usize,
    ) -> Result<SkewPoly<K::Elem>> {
        let DivisionResult {
            quotient,
            remainder,
        } = self.right_divide(&self.xn_minus_1(n), g)?;
        if !remainder.is_zero() {
            return Err(Error::NotRightDivisor(n));
        }
        Ok(quotient)
    }

    /// Left-multiplies by the inverse of the leading coefficient.
    pub fn monic(&self, f: &SkewPoly<K::Elem>) -> Result<SkewPoly<K::Elem>> {
        let lc = f.leading().ok_or(Error::ZeroDivisor)?;
        let inv = self.base.unit_inverse(lc).ok_or(Error::NonMonicDivisor)?;
        Ok(self.scale_left(inv, f))
    }

    pub fn is_monic(&self, f: &SkewPoly<K::Elem>) -> bool {
        f.leading() == Some(self.base.one())
    }

    /// Skew cyclic shift `(θ(c_{n-1}), θ(c_0), ..., θ(c_{n-2}))`.
    pub fn skew_shift(&self, word: &[K::Elem]) -> Vec<K::Elem> {
        let n = word.len();
        (0..n)
            .map(|k| self.base.theta_pow(word[(k + n - 1) % n], self.aut, 1))
            .collect()
    }
}

/// Coefficientwise `crt_join`: `η₁f₁ + η₂f₂ + η₃f₃`.
pub fn ring_skew_poly_combine(
    ring: &RingR<'_>,
    f1: &SkewPoly<FieldElem>,
    f2: &SkewPoly<FieldElem>,
    f3: &SkewPoly<FieldElem>,
) -> Result<SkewPoly<RingElem>> {
    let aut = f1.aut();
    if f2.aut() != aut || f3.aut() != aut {
        return Err(Error::AutMismatch);
    }
    let len = f1
        .coeffs()
        .len()
        .max(f2.coeffs().len())
        .max(f3.coeffs().len());
    let coeffs = (0..len)
        .map(|k| ring.crt_join(CrtTriple::new(f1.coeff(k), f2.coeff(k), f3.coeff(k))))
        .collect();
    Ok(SkewPoly::new(coeffs, aut))
}

/// Coefficientwise `crt_split` into the three component polynomials.
pub fn ring_skew_poly_project(
    ring: &RingR<'_>,
    g: &SkewPoly<RingElem>,
) -> [SkewPoly<FieldElem>; 3] {
    let split: Vec<CrtTriple> = g.coeffs().iter().map(|&r| ring.crt_split(r)).collect();
    core::array::from_fn(|j| SkewPoly::new(split.iter().map(|t| t.get(j)).collect(), g.aut()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f9() -> FieldSpec {
        FieldSpec::new(3, 2, &[1, 0, 1]).unwrap()
    }

    fn random_poly(
        f: &FieldSpec,
        aut: AutExponent,
        deg: usize,
        rng: &mut ChaCha8Rng,
    ) -> SkewPoly<FieldElem> {
        let q = f.order();
        SkewPoly::new(
            (0..=deg)
                .map(|_| f.elem(rng.gen_range(0..q)).unwrap())
                .collect(),
            aut,
        )
    }

    fn random_monic(
        f: &FieldSpec,
        aut: AutExponent,
        deg: usize,
        rng: &mut ChaCha8Rng,
    ) -> SkewPoly<FieldElem> {
        let mut c = random_poly(f, aut, deg, rng).to_vector(deg + 1);
        c[deg] = f.one();
        SkewPoly::new(c, aut)
    }

    #[test]
    fn x_times_w() {
        let f = f9();
        let aut = f.aut(1).unwrap();
        let s = SkewRing::new(&f, aut).unwrap();
        let w = f.generator();
        let prod = s.mul(&s.x(), &s.constant(w)).unwrap();
        let two_w = f.mul(f.from_int(2), w);
        assert_eq!(prod.coeffs(), &[f.zero(), two_w]);
        // w·x keeps w
        assert_eq!(
            s.mul(&s.constant(w), &s.x()).unwrap().coeffs(),
            &[f.zero(), w]
        );
    }

    #[test]
    fn wx_squared_is_x_squared() {
        let f = f9();
        let s = SkewRing::new(&f, f.aut(1).unwrap()).unwrap();
        let wx = s.monomial(f.generator(), 1);
        assert_eq!(s.mul(&wx, &wx).unwrap(), s.monomial(f.one(), 2));
    }

    #[test]
    fn identity_and_aut_mismatch() {
        let f = FieldSpec::new(3, 4, &[2, 0, 0, 1, 1]).unwrap();
        let s1 = SkewRing::new(&f, f.aut(1).unwrap()).unwrap();
        let s2 = SkewRing::new(&f, f.aut(2).unwrap()).unwrap();
        let g = s1.poly(vec![f.generator(), f.one(), f.from_int(2)]);
        assert_eq!(s1.mul(&g, &s1.one()).unwrap(), g);
        assert_eq!(s1.mul(&s1.one(), &g).unwrap(), g);
        assert_eq!(s1.mul(&g, &s2.one()).unwrap_err(), Error::AutMismatch);
        assert_eq!(s2.add(&g, &s2.one()).unwrap_err(), Error::AutMismatch);
    }

    #[test]
    fn division_by_x_minus_w() {
        let f = f9();
        let s = SkewRing::new(&f, f.aut(1).unwrap()).unwrap();
        let w = f.generator();
        let g = s.poly(vec![f.neg(w), f.one()]);
        let res = s.right_divide(&s.xn_minus_1(2), &g).unwrap();
        assert!(res.remainder.is_zero());
        // x^2 - 1 = (x + 2w)(x - w)
        let two_w = f.mul(f.from_int(2), w);
        assert_eq!(res.quotient, s.poly(vec![two_w, f.one()]));
        assert_eq!(s.mul(&res.quotient, &g).unwrap(), s.xn_minus_1(2));
        assert!(s.is_right_divisor_of_xn_minus_1(&g, 2).unwrap());
        // dividing by 1
        let h = s.poly(vec![w, w, f.one()]);
        let res = s.right_divide(&h, &s.one()).unwrap();
        assert_eq!(res.quotient, h);
        assert!(res.remainder.is_zero());
        assert_eq!(
            s.right_divide(&h, &s.zero()).unwrap_err(),
            Error::ZeroDivisor
        );
    }

    #[test]
    fn x_minus_one_divides_every_xn_minus_1() {
        let f = f9();
        let s = SkewRing::new(&f, f.aut(1).unwrap()).unwrap();
        let g = s.poly(vec![f.from_int(-1), f.one()]);
        for n in 1..10 {
            assert!(s.is_right_divisor_of_xn_minus_1(&g, n).unwrap());
            assert!(s
                .is_right_divisor_of_xn_minus_1(&s.xn_minus_1(n), n)
                .unwrap());
        }
    }

    #[test]
    fn non_commutativity_witness() {
        let f = f9();
        let aut = f.aut(1).unwrap();
        let s = SkewRing::new(&f, aut).unwrap();
        let x = s.x();
        for a in f.elements().unwrap() {
            let ca = s.constant(a);
            let commutes = s.mul(&x, &ca).unwrap() == s.mul(&ca, &x).unwrap();
            assert_eq!(commutes, f.frobenius(a, aut).unwrap() == a);
            assert_eq!(commutes, f.is_prime_field_elem(a));
        }
    }

    #[test]
    fn associativity_and_distributivity_random() {
        let f = f9();
        let aut = f.aut(1).unwrap();
        let s = SkewRing::new(&f, aut).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let (da, db, dc) = (
                rng.gen_range(0..=6),
                rng.gen_range(0..=6),
                rng.gen_range(0..=6),
            );
            let a = random_poly(&f, aut, da, &mut rng);
            let b = random_poly(&f, aut, db, &mut rng);
            let c = random_poly(&f, aut, dc, &mut rng);
            let ab_c = s.mul(&s.mul(&a, &b).unwrap(), &c).unwrap();
            let a_bc = s.mul(&a, &s.mul(&b, &c).unwrap()).unwrap();
            assert_eq!(ab_c, a_bc);
            let left = s.mul(&a, &s.add(&b, &c).unwrap()).unwrap();
            assert_eq!(
                left,
                s.add(&s.mul(&a, &b).unwrap(), &s.mul(&a, &c).unwrap())
                    .unwrap()
            );
            let right = s.mul(&s.add(&a, &b).unwrap(), &c).unwrap();
            assert_eq!(
                right,
                s.add(&s.mul(&a, &c).unwrap(), &s.mul(&b, &c).unwrap())
                    .unwrap()
            );
        }
    }

    #[test]
    fn division_reconstructs_random() {
        let f = f9();
        let aut = f.aut(1).unwrap();
        let s = SkewRing::new(&f, aut).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let dg = rng.gen_range(0..=8);
            let df = rng.gen_range(dg..=8);
            let fpoly = random_poly(&f, aut, df, &mut rng);
            let g = random_monic(&f, aut, dg, &mut rng);
            let res = s.right_divide(&fpoly, &g).unwrap();
            assert!(res.remainder.degree().is_none_or(|d| d < dg));
            let back = s
                .add(&s.mul(&res.quotient, &g).unwrap(), &res.remainder)
                .unwrap();
            assert_eq!(back, fpoly);
        }
    }

    #[test]
    fn division_over_r_requires_unit_leading_coefficient() {
        let f = f9();
        let ring = RingR::new(&f).unwrap();
        let aut = f.aut(1).unwrap();
        let s = SkewRing::new(&ring, aut).unwrap();
        let g = s.poly(vec![ring.one(), ring.eta(0)]);
        assert_eq!(
            s.right_divide(&s.xn_minus_1(3), &g).unwrap_err(),
            Error::NonMonicDivisor
        );
        // 1 + v has CRT coordinates (1, 2, 0), so it is not a unit
        assert!(!ring.is_unit(RingElem::new(f.one(), f.one(), f.zero())));
        // a unit leading coefficient is accepted
        let unit = ring.crt_join(CrtTriple::new(f.one(), f.from_int(2), f.generator()));
        assert!(ring.is_unit(unit));
        let g = s.poly(vec![ring.v(), unit]);
        let fpoly = s.poly(vec![ring.one(), ring.v(), ring.eta(1), unit]);
        let res = s.right_divide(&fpoly, &g).unwrap();
        let back = s
            .add(&s.mul(&res.quotient, &g).unwrap(), &res.remainder)
            .unwrap();
        assert_eq!(back, fpoly);
        assert!(res.remainder.degree().is_none_or(|d| d < 1));
    }

    #[test]
    fn combine_and_project() {
        let f = f9();
        let ring = RingR::new(&f).unwrap();
        let aut = f.aut(1).unwrap();
        let sf = SkewRing::new(&f, aut).unwrap();
        let x_minus_1 = sf.poly(vec![f.from_int(-1), f.one()]);
        let one = sf.one();
        let g = ring_skew_poly_combine(&ring, &one, &one, &one).unwrap();
        assert_eq!(g.coeffs(), &[ring.one()]);
        let g = ring_skew_poly_combine(&ring, &x_minus_1, &one, &one).unwrap();
        // η₁(x - 1) + η₂ + η₃ = η₁x + (1 - 2η₁)
        let c0 = ring.sub(ring.one(), ring.add(ring.eta(0), ring.eta(0)));
        assert_eq!(g.coeffs(), &[c0, ring.eta(0)]);
        let [p1, p2, p3] = ring_skew_poly_project(&ring, &g);
        assert_eq!((p1, p2, p3), (x_minus_1.clone(), one.clone(), one.clone()));
        let other = SkewPoly::new(vec![f.one()], f.aut(2).unwrap());
        assert_eq!(
            ring_skew_poly_combine(&ring, &x_minus_1, &other, &one).unwrap_err(),
            Error::AutMismatch
        );

        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            let a = random_poly(&f, aut, rng.gen_range(0..5), &mut rng);
            let b = random_poly(&f, aut, rng.gen_range(0..5), &mut rng);
            let c = random_poly(&f, aut, rng.gen_range(0..5), &mut rng);
            let g = ring_skew_poly_combine(&ring, &a, &b, &c).unwrap();
            assert_eq!(ring_skew_poly_project(&ring, &g), [a, b, c]);
        }
    }

    #[test]
    fn skew_shift_examples() {
        let f = f9();
        let aut = f.aut(1).unwrap();
        let s = SkewRing::new(&f, aut).unwrap();
        let w = f.generator();
        assert_eq!(
            s.skew_shift(&[w, f.zero()]),
            [f.zero(), f.mul(f.from_int(2), w)]
        );
        assert_eq!(s.skew_shift(&[f.zero(); 3]), [f.zero(); 3]);
        // n * t applications give the identity
        let word = [w, f.one(), f.from_int(2)];
        let mut v = word.to_vec();
        for _ in 0..3 * aut.order() {
            v = s.skew_shift(&v);
        }
        assert_eq!(v, word);
        // the shift is left multiplication by x modulo x^n - 1
        let p = s.poly(word.to_vec());
        let shifted = s.mul_mod(&s.x(), &p, 3).unwrap();
        assert_eq!(shifted.to_vector(3), s.skew_shift(&word));
    }
}
