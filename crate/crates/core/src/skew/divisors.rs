//! Monic right divisors of `x^n - 1` in `F_q[x, θ_i]`, and the factorization
//! of `x^n - 1` over the fixed subfield `F_{p^i}`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{SkewPoly, SkewRing};
use crate::error::{Error, Result};
use crate::field::{AutExponent, FieldElem, FieldSpec};
use crate::poly::{self, Poly};
use crate::DEFAULT_DIVISOR_SEARCH_BOUND;

/// `x^n - 1 = ∏ p_j^{s_j}` over `F_{p^i}`, factors monic and irreducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub n: usize,
    pub subfield_order: u32,
    pub factors: Vec<(SkewPoly<FieldElem>, usize)>,
}

impl Factorization {
    /// `∏ (s_j + 1)`.
    pub fn divisor_count(&self) -> u128 {
        self.factors.iter().map(|(_, s)| *s as u128 + 1).product()
    }

    pub fn expand(&self, field: &FieldSpec) -> Poly {
        let mut acc = vec![field.one()];
        for (f, s) in &self.factors {
            for _ in 0..*s {
                acc = poly::mul(field, &acc, f.coeffs());
            }
        }
        acc
    }
}

/// `(∏(s_j + 1), ∏(s_j + 1)³)`: the number of skew cyclic codes of length `n`
/// over `F_q` and over `R`.
pub fn count_from_factorization(f: &Factorization) -> (u128, u128) {
    let c = f.divisor_count();
    (c, c * c * c)
}

fn pow_u128(base: u128, e: usize) -> u128 {
    (0..e).fold(1u128, |acc, _| acc.saturating_mul(base))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Calls `visit` with every monic polynomial of degree `d` whose lower
/// coefficients are drawn from `alphabet`, in lexicographic order of the
/// ascending coefficient vector. Stops early when `visit` returns `false`.
fn for_each_monic(
    alphabet: &[FieldElem],
    one: FieldElem,
    d: usize,
    mut visit: impl FnMut(&[FieldElem]) -> bool,
) {
    let base = alphabet.len();
    let mut digits = vec![0usize; d];
    let mut cand: Vec<FieldElem> = vec![alphabet[0]; d + 1];
    cand[d] = one;
    loop {
        for k in 0..d {
            cand[k] = alphabet[digits[k]];
        }
        if !visit(&cand) {
            return;
        }
        // increment with c_{d-1} least significant, c_0 most significant
        let mut k = d;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < base {
                break;
            }
            digits[k] = 0;
        }
    }
}

fn check_in_subfield(field: &FieldSpec, aut: AutExponent, f: &[FieldElem]) -> Result<()> {
    if f.iter().all(|&c| field.frobenius_exp(c, aut.i()) == c) {
        Ok(())
    } else {
        Err(Error::HypothesisViolated(format!(
            "coefficients are not in the subfield of order {}^{}",
            field.characteristic(),
            aut.i()
        )))
    }
}

/// Trial division by every monic polynomial of degree `1..=deg/2` over the
/// subfield fixed by `aut`.
pub fn is_irreducible_over_subfield(
    field: &FieldSpec,
    aut: AutExponent,
    f: &[FieldElem],
) -> Result<bool> {
    check_in_subfield(field, aut, f)?;
    let Some(deg) = poly::degree(f) else {
        return Ok(false);
    };
    if deg == 0 {
        return Ok(false);
    }
    let sub = field.fixed_subfield(aut)?;
    let mut irreducible = true;
    for d in 1..=deg / 2 {
        for_each_monic(&sub, field.one(), d, |cand| {
            if poly::divrem(field, f, cand)
                .map(|(_, r)| r.is_empty())
                .unwrap_or(false)
            {
                irreducible = false;
            }
            irreducible
        });
        if !irreducible {
            break;
        }
    }
    Ok(irreducible)
}

/// Complete factorization of `x^n - 1` over `F_{p^i}` by trial division in
/// increasing degree. Any candidate that divides what is left at degree `d`
/// is irreducible, since all smaller factors have already been removed.
pub fn factor_xn_minus_1(field: &FieldSpec, aut: AutExponent, n: usize) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::HypothesisViolated("length must be positive".into()));
    }
    let sub = field.fixed_subfield(aut)?;
    let q_sub = sub.len() as u128;
    let mut rest = poly::xn_minus_1(field, n);
    let mut factors: Vec<(SkewPoly<FieldElem>, usize)> = Vec::new();
    let mut searched: u128 = 0;
    let mut d = 1;
    while poly::degree(&rest).unwrap_or(0) >= 2 * d {
        searched += pow_u128(q_sub, d);
        if searched > DEFAULT_DIVISOR_SEARCH_BOUND as u128 {
            return Err(Error::SearchSpaceTooLarge {
                size: searched,
                bound: DEFAULT_DIVISOR_SEARCH_BOUND as u128,
            });
        }
        let mut found: Vec<(Poly, usize)> = Vec::new();
        for_each_monic(&sub, field.one(), d, |cand| {
            let mut mult = 0;
            loop {
                let (quo, rem) = poly::divrem(field, &rest, cand).expect("monic divisor");
                if !rem.is_empty() {
                    break;
                }
                rest = quo;
                mult += 1;
            }
            if mult > 0 {
                found.push((cand.to_vec(), mult));
            }
            poly::degree(&rest).unwrap_or(0) >= d
        });
        factors.extend(found.into_iter().map(|(f, s)| (SkewPoly::new(f, aut), s)));
        d += 1;
    }
    if poly::degree(&rest).unwrap_or(0) > 0 {
        factors.push((SkewPoly::new(rest, aut), 1));
    }
    factors.sort_by(|a, b| (a.0.degree(), a.0.coeffs()).cmp(&(b.0.degree(), b.0.coeffs())));
    let fact = Factorization {
        n,
        subfield_order: sub.len() as u32,
        factors,
    };
    if fact.expand(field) != poly::xn_minus_1(field, n) {
        return Err(Error::VerificationFailed(format!(
            "factorization of x^{n} - 1 does not expand back"
        )));
    }
    Ok(fact)
}

/// Extended Euclid in `F_{p^i}[x]`: `(d, a, b)` with `a·f + b·g = d`, `d` monic.
pub fn extended_gcd_commutative(
    field: &FieldSpec,
    f: &SkewPoly<FieldElem>,
    g: &SkewPoly<FieldElem>,
) -> Result<(
    SkewPoly<FieldElem>,
    SkewPoly<FieldElem>,
    SkewPoly<FieldElem>,
)> {
    let aut = f.aut();
    if g.aut() != aut {
        return Err(Error::AutMismatch);
    }
    check_in_subfield(field, aut, f.coeffs())?;
    check_in_subfield(field, aut, g.coeffs())?;
    let (d, a, b) = poly::xgcd(field, f.coeffs(), g.coeffs())?;
    let lhs = poly::add(
        field,
        &poly::mul(field, &a, f.coeffs()),
        &poly::mul(field, &b, g.coeffs()),
    );
    if lhs != d {
        return Err(Error::VerificationFailed("Bezout identity".into()));
    }
    Ok((
        SkewPoly::new(d, aut),
        SkewPoly::new(a, aut),
        SkewPoly::new(b, aut),
    ))
}

/// Every monic right divisor of `x^n - 1` in `F_q[x, θ_i]`, found by testing
/// all monic polynomials of degree `< n`. Ordered by degree, then
/// lexicographically.
pub fn monic_right_divisors_brute_force(
    field: &FieldSpec,
    aut: AutExponent,
    n: usize,
    bound: u64,
) -> Result<Vec<SkewPoly<FieldElem>>> {
    let q = field.order() as u128;
    let size: u128 = (0..n)
        .map(|d| pow_u128(q, d))
        .fold(0u128, |a, b| a.saturating_add(b));
    if size > bound as u128 {
        return Err(Error::SearchSpaceTooLarge {
            size,
            bound: bound as u128,
        });
    }
    let ring = SkewRing::new(field, aut)?;
    let els = field.elements_bounded(u64::MAX)?;
    let order = aut.order() as usize;
    let mut out = Vec::new();
    let mut rem = vec![field.zero(); n + 1];
    let mut twisted: Vec<Vec<FieldElem>> = Vec::new();
    for d in 0..n {
        for_each_monic(&els, field.one(), d, |g| {
            twisted.clear();
            for k in 0..order.min(n - d + 1) {
                twisted.push(
                    g.iter()
                        .map(|&c| field.theta_pow(c, aut, k as u64))
                        .collect(),
                );
            }
            rem.iter_mut().for_each(|c| *c = field.zero());
            rem[0] = field.from_int(-1);
            rem[n] = field.one();
            // g is monic, so the quotient coefficient is the current top coefficient
            for k in (0..=n - d).rev() {
                let c = rem[k + d];
                if c.is_zero() {
                    continue;
                }
                for (l, &gl) in twisted[k % order].iter().enumerate() {
                    rem[k + l] = field.sub(rem[k + l], field.mul(c, gl));
                }
            }
            if rem[..d].iter().all(|c| c.is_zero()) {
                out.push(ring.poly(g.to_vec()));
            }
            true
        });
    }
    out.push(ring.xn_minus_1(n));
    Ok(out)
}

/// Monic divisors of `x^n - 1` in `F_{p^i}[x]`, built as products of the
/// irreducible factors. When `(n, t_i) = 1` these are all the monic right
/// divisors in `F_q[x, θ_i]`; each one is re-checked as a right divisor.
pub fn monic_right_divisors_from_factorization(
    field: &FieldSpec,
    aut: AutExponent,
    n: usize,
) -> Result<Vec<SkewPoly<FieldElem>>> {
    let fact = factor_xn_minus_1(field, aut, n)?;
    let ring = SkewRing::new(field, aut)?;
    let mut out = Vec::new();
    let mut exps = vec![0usize; fact.factors.len()];
    loop {
        let mut prod = vec![field.one()];
        for ((f, _), &e) in fact.factors.iter().zip(&exps) {
            for _ in 0..e {
                prod = poly::mul(field, &prod, f.coeffs());
            }
        }
        let g = ring.poly(prod);
        if !ring.is_right_divisor_of_xn_minus_1(&g, n)? {
            return Err(Error::VerificationFailed(
                "product of factors is not a right divisor".into(),
            ));
        }
        out.push(g);
        let mut k = 0;
        loop {
            if k == exps.len() {
                out.sort_by(|a, b| (a.degree(), a.coeffs()).cmp(&(b.degree(), b.coeffs())));
                return Ok(out);
            }
            exps[k] += 1;
            if exps[k] <= fact.factors[k].1 {
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }
}

/// All monic right divisors of `x^n - 1`: brute force when the search space is
/// within `bound`, otherwise the factorization route, which needs `(n, t_i) = 1`.
pub fn monic_right_divisors(
    field: &FieldSpec,
    aut: AutExponent,
    n: usize,
    bound: u64,
) -> Result<Vec<SkewPoly<FieldElem>>> {
    match monic_right_divisors_brute_force(field, aut, n, bound) {
        Err(Error::SearchSpaceTooLarge { size, bound }) => {
            if gcd(n as u64, aut.order() as u64) == 1 {
                monic_right_divisors_from_factorization(field, aut, n)
            } else {
                Err(Error::SearchSpaceTooLarge { size, bound })
            }
        }
        other => other,
    }
}
