//! Ordinary (commutative) polynomials over `F_q`, ascending coefficients with
//! trailing zeros stripped. Used for the subfield `F_{p^i}[x]` computations
//! where `θ_i` acts trivially.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldSpec};

pub type Poly = Vec<FieldElem>;

pub fn trim(mut f: Poly) -> Poly {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
    f
}

pub fn degree(f: &[FieldElem]) -> Option<usize> {
    f.iter().rposition(|c| !c.is_zero())
}

pub fn add(field: &FieldSpec, f: &[FieldElem], g: &[FieldElem]) -> Poly {
    let n = f.len().max(g.len());
    let z = field.zero();
    trim(
        (0..n)
            .map(|k| field.add(*f.get(k).unwrap_or(&z), *g.get(k).unwrap_or(&z)))
            .collect(),
    )
}

pub fn sub(field: &FieldSpec, f: &[FieldElem], g: &[FieldElem]) -> Poly {
    let n = f.len().max(g.len());
    let z = field.zero();
    trim(
        (0..n)
            .map(|k| field.sub(*f.get(k).unwrap_or(&z), *g.get(k).unwrap_or(&z)))
            .collect(),
    )
}

pub fn scale(field: &FieldSpec, c: FieldElem, f: &[FieldElem]) -> Poly {
    trim(f.iter().map(|&x| field.mul(c, x)).collect())
}

pub fn mul(field: &FieldSpec, f: &[FieldElem], g: &[FieldElem]) -> Poly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = field.add(out[i + j], field.mul(a, b));
        }
    }
    trim(out)
}

pub fn divrem(field: &FieldSpec, f: &[FieldElem], g: &[FieldElem]) -> Result<(Poly, Poly)> {
    let g = trim(g.to_vec());
    let dg = degree(&g).ok_or(Error::ZeroDivisor)?;
    let lead_inv = field.inv(g[dg])?;
    let mut r = trim(f.to_vec());
    if r.len() <= dg {
        return Ok((Vec::new(), r));
    }
    let mut quot = vec![field.zero(); r.len() - dg];
    while r.len() > dg {
        let shift = r.len() - 1 - dg;
        let c = field.mul(*r.last().unwrap(), lead_inv);
        quot[shift] = c;
        for (j, &gj) in g.iter().enumerate() {
            r[shift + j] = field.sub(r[shift + j], field.mul(c, gj));
        }
        r = trim(r);
    }
    Ok((trim(quot), r))
}

pub fn monic(field: &FieldSpec, f: &[FieldElem]) -> Result<Poly> {
    let d = degree(f).ok_or(Error::ZeroDivisor)?;
    let c = field.inv(f[d])?;
    Ok(scale(field, c, f))
}

/// `x^n - 1`.
pub fn xn_minus_1(field: &FieldSpec, n: usize) -> Poly {
    let mut f = vec![field.zero(); n + 1];
    f[0] = field.from_int(-1);
    f[n] = field.add(f[n], field.one());
    trim(f)
}

/// Extended Euclid: `(d, a, b)` with `a·f + b·g = d` and `d` monic.
pub fn xgcd(field: &FieldSpec, f: &[FieldElem], g: &[FieldElem]) -> Result<(Poly, Poly, Poly)> {
    let (mut r0, mut r1) = (trim(f.to_vec()), trim(g.to_vec()));
    if r0.is_empty() && r1.is_empty() {
        return Err(Error::BothZero);
    }
    let (mut a0, mut a1) = (vec![field.one()], Vec::new());
    let (mut b0, mut b1) = (Vec::new(), vec![field.one()]);
    while !r1.is_empty() {
        let (quo, rem) = divrem(field, &r0, &r1)?;
        let a2 = sub(field, &a0, &mul(field, &quo, &a1));
        let b2 = sub(field, &b0, &mul(field, &quo, &b1));
        r0 = core::mem::replace(&mut r1, rem);
        a0 = core::mem::replace(&mut a1, a2);
        b0 = core::mem::replace(&mut b1, b2);
    }
    let lc = field.inv(*r0.last().unwrap())?;
    Ok((
        scale(field, lc, &r0),
        scale(field, lc, &a0),
        scale(field, lc, &b0),
    ))
}
