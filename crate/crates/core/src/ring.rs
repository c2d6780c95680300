//! The ring `R = F_q + vF_q + v²F_q`, `v³ = v`.
//!
//! Elements are kept in the `a + bv + cv²` form. The CRT coordinates
//! `(a, a+b+c, a-b+c)` are computed on demand; they are the coordinates with
//! respect to the orthogonal idempotents `η₁ = 1 - v²`, `η₂ = 2⁻¹(v + v²)` and
//! `η₃ = 2⁻¹(-v + v²)`, and they coincide with the Gray image of the element.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{AutExponent, FieldElem, FieldSpec};

/// `a + bv + cv²`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingElem {
    pub a: FieldElem,
    pub b: FieldElem,
    pub c: FieldElem,
}

impl RingElem {
    pub const ZERO: RingElem = RingElem {
        a: FieldElem::ZERO,
        b: FieldElem::ZERO,
        c: FieldElem::ZERO,
    };

    pub fn new(a: FieldElem, b: FieldElem, c: FieldElem) -> Self {
        RingElem { a, b, c }
    }

    pub fn is_zero(&self) -> bool {
        *self == RingElem::ZERO
    }
}

/// Coordinates `(x₁, x₂, x₃)` with `r = η₁x₁ + η₂x₂ + η₃x₃`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrtTriple {
    pub x1: FieldElem,
    pub x2: FieldElem,
    pub x3: FieldElem,
}

impl CrtTriple {
    pub fn new(x1: FieldElem, x2: FieldElem, x3: FieldElem) -> Self {
        CrtTriple { x1, x2, x3 }
    }

    pub fn get(&self, j: usize) -> FieldElem {
        match j {
            0 => self.x1,
            1 => self.x2,
            2 => self.x3,
            _ => panic!("CRT coordinate index {j} out of range"),
        }
    }

    pub fn as_array(&self) -> [FieldElem; 3] {
        [self.x1, self.x2, self.x3]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Idempotents {
    pub eta1: RingElem,
    pub eta2: RingElem,
    pub eta3: RingElem,
}

impl Idempotents {
    pub fn as_array(&self) -> [RingElem; 3] {
        [self.eta1, self.eta2, self.eta3]
    }
}

/// The Gray image of a vector in `R^n`, a vector in `F_q^{3n}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GrayVector(pub Vec<FieldElem>);

impl GrayVector {
    pub fn coords(&self) -> &[FieldElem] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Arithmetic context for `R` over a given field.
#[derive(Clone, Debug)]
pub struct RingR<'f> {
    field: &'f FieldSpec,
    half: FieldElem,
    idempotents: Idempotents,
}

impl<'f> RingR<'f> {
    pub fn new(field: &'f FieldSpec) -> Result<Self> {
        // p is odd for every valid FieldSpec, so 2 is invertible
        let half = field.inv(field.from_int(2))?;
        let mut ring = RingR {
            field,
            half,
            idempotents: Idempotents {
                eta1: RingElem::ZERO,
                eta2: RingElem::ZERO,
                eta3: RingElem::ZERO,
            },
        };
        ring.idempotents = ring.make_idempotents()?;
        Ok(ring)
    }

    pub fn field(&self) -> &'f FieldSpec {
        self.field
    }

    pub fn idempotents(&self) -> Idempotents {
        self.idempotents
    }

    pub fn eta(&self, j: usize) -> RingElem {
        self.idempotents.as_array()[j]
    }

    /// `η₁ = 1 - v²`, `η₂ = 2⁻¹v + 2⁻¹v²`, `η₃ = -2⁻¹v + 2⁻¹v²`, with the
    /// orthogonality relations checked before returning.
    fn make_idempotents(&self) -> Result<Idempotents> {
        let f = self.field;
        let (zero, one, h) = (f.zero(), f.one(), self.half);
        let eta1 = RingElem::new(one, zero, f.neg(one));
        let eta2 = RingElem::new(zero, h, h);
        let eta3 = RingElem::new(zero, f.neg(h), h);
        let etas = [eta1, eta2, eta3];
        for (j, &x) in etas.iter().enumerate() {
            for (k, &y) in etas.iter().enumerate() {
                let expected = if j == k { x } else { RingElem::ZERO };
                if self.mul(x, y) != expected {
                    return Err(Error::VerificationFailed(alloc::format!(
                        "eta{} * eta{}",
                        j + 1,
                        k + 1
                    )));
                }
            }
        }
        if self.add(self.add(eta1, eta2), eta3) != self.one() {
            return Err(Error::VerificationFailed("eta1 + eta2 + eta3 != 1".into()));
        }
        Ok(Idempotents { eta1, eta2, eta3 })
    }

    pub fn zero(&self) -> RingElem {
        RingElem::ZERO
    }

    pub fn one(&self) -> RingElem {
        RingElem::new(self.field.one(), self.field.zero(), self.field.zero())
    }

    pub fn v(&self) -> RingElem {
        RingElem::new(self.field.zero(), self.field.one(), self.field.zero())
    }

    /// Embeds `F_q` as the constants `a + 0v + 0v²`.
    pub fn scalar(&self, a: FieldElem) -> RingElem {
        RingElem::new(a, self.field.zero(), self.field.zero())
    }

    pub fn contains(&self, r: RingElem) -> bool {
        self.field.contains(r.a) && self.field.contains(r.b) && self.field.contains(r.c)
    }

    pub fn add(&self, x: RingElem, y: RingElem) -> RingElem {
        let f = self.field;
        RingElem::new(f.add(x.a, y.a), f.add(x.b, y.b), f.add(x.c, y.c))
    }

    pub fn sub(&self, x: RingElem, y: RingElem) -> RingElem {
        let f = self.field;
        RingElem::new(f.sub(x.a, y.a), f.sub(x.b, y.b), f.sub(x.c, y.c))
    }

    pub fn neg(&self, x: RingElem) -> RingElem {
        let f = self.field;
        RingElem::new(f.neg(x.a), f.neg(x.b), f.neg(x.c))
    }

    /// Product reduced with `v³ = v` and `v⁴ = v²`.
    pub fn mul(&self, x: RingElem, y: RingElem) -> RingElem {
        let f = self.field;
        let m = |s, t| f.mul(s, t);
        let a = m(x.a, y.a);
        let b = f.add(
            f.add(m(x.a, y.b), m(x.b, y.a)),
            f.add(m(x.b, y.c), m(x.c, y.b)),
        );
        let c = f.add(
            f.add(m(x.a, y.c), m(x.b, y.b)),
            f.add(m(x.c, y.a), m(x.c, y.c)),
        );
        RingElem::new(a, b, c)
    }

    /// `λ·r` for `λ ∈ F_q`.
    pub fn scale(&self, lambda: FieldElem, r: RingElem) -> RingElem {
        let f = self.field;
        RingElem::new(f.mul(lambda, r.a), f.mul(lambda, r.b), f.mul(lambda, r.c))
    }

    pub fn is_unit(&self, r: RingElem) -> bool {
        let t = self.crt_split(r);
        !(t.x1.is_zero() || t.x2.is_zero() || t.x3.is_zero())
    }

    pub fn inv(&self, r: RingElem) -> Option<RingElem> {
        let t = self.crt_split(r);
        let f = self.field;
        Some(self.crt_join(CrtTriple::new(
            f.inv(t.x1).ok()?,
            f.inv(t.x2).ok()?,
            f.inv(t.x3).ok()?,
        )))
    }

    /// `(a, a+b+c, a-b+c)`.
    pub fn crt_split(&self, r: RingElem) -> CrtTriple {
        let f = self.field;
        let bc = f.add(r.b, r.c);
        let cb = f.sub(r.c, r.b);
        CrtTriple::new(r.a, f.add(r.a, bc), f.add(r.a, cb))
    }

    /// Inverse of [`RingR::crt_split`]: `a = x₁`, `b = (x₂ - x₃)/2`, `c = (x₂ + x₃)/2 - x₁`.
    pub fn crt_join(&self, t: CrtTriple) -> RingElem {
        let f = self.field;
        let b = f.mul(self.half, f.sub(t.x2, t.x3));
        let c = f.sub(f.mul(self.half, f.add(t.x2, t.x3)), t.x1);
        RingElem::new(t.x1, b, c)
    }

    /// `θ_i(a + bv + cv²) = θ_i(a) + θ_i(b)v + θ_i(c)v²`.
    pub fn theta(&self, r: RingElem, aut: AutExponent) -> Result<RingElem> {
        self.field.check_aut(aut)?;
        Ok(self.theta_pow(r, aut, 1))
    }

    pub fn theta_pow(&self, r: RingElem, aut: AutExponent, k: u64) -> RingElem {
        let f = self.field;
        let e = aut.power_exponent(k);
        RingElem::new(
            f.frobenius_exp(r.a, e),
            f.frobenius_exp(r.b, e),
            f.frobenius_exp(r.c, e),
        )
    }

    /// All `q³` elements, ordered by `(a, b, c)`.
    pub fn elements_bounded(&self, bound: u64) -> Result<Vec<RingElem>> {
        let q = self.field.order() as u64;
        let size = q * q * q;
        if size > bound {
            return Err(Error::EnumerationTooLarge {
                size: size as u128,
                bound: bound as u128,
            });
        }
        let els = self.field.elements_bounded(bound)?;
        let mut out = Vec::with_capacity(size as usize);
        for &a in &els {
            for &b in &els {
                for &c in &els {
                    out.push(RingElem::new(a, b, c));
                }
            }
        }
        Ok(out)
    }

    /// Gray map, interleaved per source coordinate: `(a₀, a₀+b₀+c₀, a₀-b₀+c₀, a₁, ...)`.
    pub fn gray_map(&self, word: &[RingElem]) -> GrayVector {
        let mut out = Vec::with_capacity(3 * word.len());
        for &r in word {
            out.extend_from_slice(&self.crt_split(r).as_array());
        }
        GrayVector(out)
    }

    pub fn gray_inverse(&self, image: &[FieldElem]) -> Result<Vec<RingElem>> {
        if !image.len().is_multiple_of(3) {
            return Err(Error::LengthNotDivisibleBy3(image.len()));
        }
        if !image.iter().all(|&x| self.field.contains(x)) {
            return Err(Error::FieldMismatch);
        }
        Ok(image
            .chunks(3)
            .map(|t| self.crt_join(CrtTriple::new(t[0], t[1], t[2])))
            .collect())
    }

    /// Hamming weight of the Gray triple of `r`.
    pub fn lee_weight(&self, r: RingElem) -> usize {
        hamming_weight(&self.crt_split(r).as_array())
    }

    pub fn lee_weight_vec(&self, word: &[RingElem]) -> usize {
        word.iter().map(|&r| self.lee_weight(r)).sum()
    }

    pub fn lee_distance(&self, x: &[RingElem], y: &[RingElem]) -> Result<usize> {
        if x.len() != y.len() {
            return Err(Error::LengthMismatch {
                expected: x.len(),
                found: y.len(),
            });
        }
        Ok(x.iter()
            .zip(y)
            .map(|(&s, &t)| self.lee_weight(self.sub(s, t)))
            .sum())
    }
}

pub fn hamming_weight(v: &[FieldElem]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

pub fn hamming_distance(x: &[FieldElem], y: &[FieldElem]) -> usize {
    x.iter().zip(y).filter(|(s, t)| s != t).count() + x.len().abs_diff(y.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::vec;

    fn f3() -> FieldSpec {
        FieldSpec::prime(3).unwrap()
    }

    fn f9() -> FieldSpec {
        FieldSpec::new(3, 2, &[1, 0, 1]).unwrap()
    }

    fn elem(f: &FieldSpec, a: i64, b: i64, c: i64) -> RingElem {
        RingElem::new(f.from_int(a), f.from_int(b), f.from_int(c))
    }

    // Independent multiplication: polynomial product in F_q[v] then reduction
    // of v^3 and v^4.
    fn mul_by_expansion(f: &FieldSpec, x: RingElem, y: RingElem) -> RingElem {
        let xs = [x.a, x.b, x.c];
        let ys = [y.a, y.b, y.c];
        let mut prod = [f.zero(); 5];
        for i in 0..3 {
            for j in 0..3 {
                prod[i + j] = f.add(prod[i + j], f.mul(xs[i], ys[j]));
            }
        }
        // v^3 -> v, v^4 -> v^2
        RingElem::new(prod[0], f.add(prod[1], prod[3]), f.add(prod[2], prod[4]))
    }

    #[test]
    fn v_times_v_squared_is_v() {
        let f = f3();
        let r = RingR::new(&f).unwrap();
        assert_eq!(
            r.mul(elem(&f, 0, 1, 0), elem(&f, 0, 0, 1)),
            elem(&f, 0, 1, 0)
        );
        let v = r.v();
        assert_eq!(r.mul(v, r.mul(v, v)), v);
    }

    #[test]
    fn one_plus_v_times_one_minus_v() {
        let f = f3();
        let r = RingR::new(&f).unwrap();
        let x = elem(&f, 1, 1, 0);
        let y = elem(&f, 1, -1, 0);
        assert_eq!(r.mul(x, y), elem(&f, 1, 0, 2));
        // cross-check pointwise in CRT coordinates
        let (s, t) = (r.crt_split(x), r.crt_split(y));
        let pointwise = CrtTriple::new(f.mul(s.x1, t.x1), f.mul(s.x2, t.x2), f.mul(s.x3, t.x3));
        assert_eq!(r.crt_join(pointwise), elem(&f, 1, 0, 2));
    }

    #[test]
    fn multiplication_matches_expansion_and_ring_axioms_exhaustive_f3() {
        let f = f3();
        let r = RingR::new(&f).unwrap();
        let els = r.elements_bounded(1000).unwrap();
        assert_eq!(els.len(), 27);
        for &x in &els {
            assert_eq!(r.mul(x, r.one()), x);
            for &y in &els {
                assert_eq!(r.mul(x, y), mul_by_expansion(&f, x, y));
                assert_eq!(r.mul(x, y), r.mul(y, x));
                let (sx, sy) = (r.crt_split(x), r.crt_split(y));
                let prod = r.crt_split(r.mul(x, y));
                let sum = r.crt_split(r.add(x, y));
                for j in 0..3 {
                    assert_eq!(prod.get(j), f.mul(sx.get(j), sy.get(j)));
                    assert_eq!(sum.get(j), f.add(sx.get(j), sy.get(j)));
                }
                for &z in &els {
                    assert_eq!(r.mul(r.mul(x, y), z), r.mul(x, r.mul(y, z)));
                    assert_eq!(r.mul(x, r.add(y, z)), r.add(r.mul(x, y), r.mul(x, z)));
                }
            }
        }
    }

    #[test]
    fn idempotents_over_f3() {
        let f = f3();
        let r = RingR::new(&f).unwrap();
        let id = r.idempotents();
        // 2^{-1} = 2 in F_3
        assert_eq!(id.eta2, elem(&f, 0, 2, 2));
        assert_eq!(id.eta1, elem(&f, 1, 0, -1));
        assert_eq!(id.eta3, elem(&f, 0, -2, 2));
        assert_eq!(r.add(r.add(id.eta1, id.eta2), id.eta3), r.one());
        assert_eq!(r.mul(id.eta2, id.eta3), r.zero());
    }

    #[test]
    fn idempotent_identities_for_several_fields() {
        for f in [
            f3(),
            f9(),
            FieldSpec::new(5, 2, &[2, 0, 1]).unwrap(),
            FieldSpec::prime(7).unwrap(),
        ] {
            let r = RingR::new(&f).unwrap();
            let etas = r.idempotents().as_array();
            for j in 0..3 {
                for k in 0..3 {
                    let expected = if j == k { etas[j] } else { r.zero() };
                    assert_eq!(r.mul(etas[j], etas[k]), expected);
                }
            }
        }
    }

    #[test]
    fn crt_examples() {
        let f = f3();
        let r = RingR::new(&f).unwrap();
        let t = |a, b, c| CrtTriple::new(f.from_int(a), f.from_int(b), f.from_int(c));
        assert_eq!(r.crt_split(r.zero()), t(0, 0, 0));
        assert_eq!(r.crt_split(r.v()), t(0, 1, -1));
        assert_eq!(r.crt_split(r.eta(0)), t(1, 0, 0));
        assert_eq!(r.crt_join(t(1, 1, 1)), r.one());
        assert_eq!(r.crt_join(t(0, 1, 0)), r.eta(1));
        assert_eq!(r.crt_join(t(0, 1, -1)), r.v());
    }

    #[test]
    fn crt_join_matches_idempotent_combination_exhaustive_f9() {
        let f = f9();
        let r = RingR::new(&f).unwrap();
        for x in r.elements_bounded(1000).unwrap() {
            let t = r.crt_split(x);
            assert_eq!(r.crt_join(t), x);
            let via_etas = (0..3).fold(r.zero(), |acc, j| r.add(acc, r.scale(t.get(j), r.eta(j))));
            assert_eq!(via_etas, x);
        }
    }

    #[test]
    fn theta_examples_and_commutation_with_crt() {
        let f = f9();
        let r = RingR::new(&f).unwrap();
        let aut = f.aut(1).unwrap();
        assert_eq!(r.theta(r.v(), aut).unwrap(), r.v());
        let w = f.generator();
        let x = RingElem::new(w, w, f.zero());
        let two_w = f.mul(f.from_int(2), w);
        assert_eq!(
            r.theta(x, aut).unwrap(),
            RingElem::new(two_w, two_w, f.zero())
        );
        let els = r.elements_bounded(1000).unwrap();
        for &x in &els {
            let split = r.crt_split(r.theta(x, aut).unwrap());
            let orig = r.crt_split(x);
            for j in 0..3 {
                assert_eq!(split.get(j), f.frobenius(orig.get(j), aut).unwrap());
            }
            for &y in els.iter().step_by(17) {
                let lhs = r.theta(r.mul(x, y), aut).unwrap();
                assert_eq!(
                    lhs,
                    r.mul(r.theta(x, aut).unwrap(), r.theta(y, aut).unwrap())
                );
            }
        }
    }

    #[test]
    fn gray_map_examples() {
        let f = f3();
        let r = RingR::new(&f).unwrap();
        let zero = vec![r.zero(); 4];
        assert_eq!(r.gray_map(&zero).0, vec![f.zero(); 12]);
        let x = elem(&f, 1, 2, 0);
        let g = r.gray_map(&[x]);
        assert_eq!(g.0, vec![f.from_int(1), f.from_int(0), f.from_int(2)]);
        assert_eq!(r.gray_inverse(&g.0).unwrap(), vec![x]);
        assert_eq!(
            r.gray_inverse(&[f.zero(); 2]),
            Err(Error::LengthNotDivisibleBy3(2))
        );
        assert!(r.gray_inverse(&[]).unwrap().is_empty());
    }

    #[test]
    fn lee_weight_examples() {
        let f = f3();
        let r = RingR::new(&f).unwrap();
        assert_eq!(r.lee_weight(r.zero()), 0);
        assert_eq!(r.lee_weight(r.v()), 2);
        assert_eq!(r.lee_weight(r.one()), 3);
    }

    // R is not local and has exactly three maximal ideals <v>, <v-1>, <v+1>.
    #[test]
    fn maximal_ideals_over_f3() {
        let f = f3();
        let r = RingR::new(&f).unwrap();
        let els = r.elements_bounded(1000).unwrap();
        let principal =
            |g: RingElem| -> BTreeSet<RingElem> { els.iter().map(|&s| r.mul(s, g)).collect() };
        // every ideal of R is principal, so enumerating principal ideals suffices
        let ideals: BTreeSet<BTreeSet<RingElem>> = els.iter().map(|&g| principal(g)).collect();
        let maximal: Vec<_> = ideals
            .iter()
            .filter(|i| {
                i.len() < 27
                    && !ideals
                        .iter()
                        .any(|j| j.len() < 27 && j.len() > i.len() && i.is_subset(j))
            })
            .collect();
        assert_eq!(maximal.len(), 3);
        let v = r.v();
        let expected = [
            principal(v),
            principal(r.sub(v, r.one())),
            principal(r.add(v, r.one())),
        ];
        for e in &expected {
            assert_eq!(e.len(), 9);
            assert!(maximal.contains(&e));
        }
    }
}
