//! Skew cyclic codes over `F_q` and over `R`.
//!
//! A code over `R` is stored through its three component codes
//! `C = η₁C₁ ⊕ η₂C₂ ⊕ η₃C₃`, each generated by a monic right divisor `g_j` of
//! `x^n - 1` in `F_q[x, θ_i]`, together with the combined generator
//! `g = η₁g₁ + η₂g₂ + η₃g₃`. Membership, duals and idempotents are computed
//! component by component and recombined.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{AutExponent, FieldElem, FieldSpec};
use crate::linalg::{self, Subspace};
use crate::ring::{CrtTriple, RingElem, RingR};
use crate::skew::{
    count_from_factorization, extended_gcd_commutative, factor_xn_minus_1, ring_skew_poly_combine,
    ring_skew_poly_project, CoeffRing, SkewPoly, SkewRing,
};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A coefficient domain viewed as an `F_q`-vector space.
pub trait CodeAlphabet: CoeffRing {
    /// An `F_q`-linear injection of words into `F_q`-vectors. For `R` this is
    /// the Gray map.
    fn flatten(&self, word: &[Self::Elem]) -> Vec<FieldElem>;

    /// An `F_q`-basis of the alphabet.
    fn scalar_basis(&self) -> Vec<Self::Elem>;

    /// Elements that, together with addition, generate every scalar
    /// multiplication of the alphabet on itself.
    fn closure_scalars(&self) -> Vec<Self::Elem>;
}

impl CodeAlphabet for FieldSpec {
    fn flatten(&self, word: &[FieldElem]) -> Vec<FieldElem> {
        word.to_vec()
    }

    fn scalar_basis(&self) -> Vec<FieldElem> {
        vec![FieldSpec::one(self)]
    }

    fn closure_scalars(&self) -> Vec<FieldElem> {
        if self.degree() > 1 {
            vec![self.generator()]
        } else {
            Vec::new()
        }
    }
}

impl CodeAlphabet for RingR<'_> {
    fn flatten(&self, word: &[RingElem]) -> Vec<FieldElem> {
        self.gray_map(word).0
    }

    fn scalar_basis(&self) -> Vec<RingElem> {
        let v = self.v();
        vec![RingR::one(self), v, RingR::mul(self, v, v)]
    }

    fn closure_scalars(&self) -> Vec<RingElem> {
        let f = self.field();
        let mut out = vec![self.v()];
        if f.degree() > 1 {
            out.push(self.scalar(f.generator()));
        }
        out
    }
}

/// `F_q`-span of the left module generated by `gen` in `K[x, θ]/(x^n - 1)`,
/// as a subspace of the flattened coordinates. Spanned by `s·x^j·gen` for `s`
/// in a scalar basis and `0 ≤ j < n·t`, since `x^{n·t}` acts as the identity.
pub fn left_module_span<K: CodeAlphabet>(
    base: &K,
    aut: AutExponent,
    n: usize,
    gen: &SkewPoly<K::Elem>,
) -> Result<Subspace> {
    let ring = SkewRing::new(base, aut)?;
    let scalars = base.scalar_basis();
    let width = base.flatten(&vec![base.zero(); n]).len();
    let mut span = Subspace::zero(width);
    let mut u = ring.reduce_mod_xn_minus_1(gen, n).to_vector(n);
    for _ in 0..n * aut.order() as usize {
        for &s in &scalars {
            let su: Vec<K::Elem> = u.iter().map(|&c| base.mul(s, c)).collect();
            span.insert(base.field(), &base.flatten(&su))?;
        }
        u = ring.skew_shift(&u);
    }
    Ok(span)
}

/// Rows of a generator matrix, each a length-`n` vector over the alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMatrix<E> {
    pub n: usize,
    pub rows: Vec<Vec<E>>,
}

impl<E> GeneratorMatrix<E> {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Minimum distance of a code. The zero code reports `distance = 0` with
/// `degenerate = true`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistanceReport {
    pub distance: usize,
    pub degenerate: bool,
}

impl DistanceReport {
    fn from_min(min: Option<usize>) -> Self {
        match min {
            Some(d) => DistanceReport {
                distance: d,
                degenerate: false,
            },
            None => DistanceReport {
                distance: 0,
                degenerate: true,
            },
        }
    }
}

/// Skew cyclic code `⟨g⟩` of length `n` over `F_q`, `g` a monic right divisor
/// of `x^n - 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComponentCode {
    n: usize,
    g: SkewPoly<FieldElem>,
    h: SkewPoly<FieldElem>,
}

impl ComponentCode {
    pub fn new(field: &FieldSpec, n: usize, g: SkewPoly<FieldElem>) -> Result<Self> {
        if n == 0 {
            return Err(Error::HypothesisViolated("length must be positive".into()));
        }
        let ring = SkewRing::new(field, g.aut())?;
        if !ring.is_monic(&g) {
            return Err(Error::NotMonic);
        }
        if g.degree().unwrap_or(0) > n {
            return Err(Error::NotRightDivisor(n));
        }
        let h = ring.left_quotient_of_xn_minus_1(&g, n)?;
        Ok(ComponentCode { n, g, h })
    }

    /// Skips the right-divisor check; `h` is the left quotient and any
    /// remainder is dropped. Only useful to build deliberately broken codes
    /// for negative controls.
    pub fn new_unchecked(field: &FieldSpec, n: usize, g: SkewPoly<FieldElem>) -> Self {
        let ring = SkewRing::new(field, g.aut()).expect("automorphism of this field");
        let h = ring
            .right_divide(&ring.xn_minus_1(n), &g)
            .expect("unit leading coefficient")
            .quotient;
        ComponentCode { n, g, h }
    }

    /// `F_q^n`, generated by `1`.
    pub fn full(field: &FieldSpec, aut: AutExponent, n: usize) -> Result<Self> {
        ComponentCode::new(field, n, SkewPoly::new(vec![field.one()], aut))
    }

    /// `{0}`, generated by `x^n - 1`.
    pub fn zero_code(field: &FieldSpec, aut: AutExponent, n: usize) -> Result<Self> {
        let ring = SkewRing::new(field, aut)?;
        ComponentCode::new(field, n, ring.xn_minus_1(n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn aut(&self) -> AutExponent {
        self.g.aut()
    }

    pub fn generator(&self) -> &SkewPoly<FieldElem> {
        &self.g
    }

    /// `h` with `x^n - 1 = h·g`.
    pub fn check_polynomial(&self) -> &SkewPoly<FieldElem> {
        &self.h
    }

    pub fn generator_degree(&self) -> usize {
        self.g.degree().unwrap_or(0)
    }

    /// `k = n - deg g`, so `|C| = q^k`.
    pub fn dimension(&self) -> usize {
        self.n - self.generator_degree()
    }

    pub fn is_zero_code(&self) -> bool {
        self.dimension() == 0
    }

    pub fn is_full(&self) -> bool {
        self.generator_degree() == 0
    }

    /// Word membership: the word, read as a polynomial, has zero right
    /// remainder by `g`.
    pub fn contains(&self, field: &FieldSpec, word: &[FieldElem]) -> Result<bool> {
        if word.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: word.len(),
            });
        }
        self.contains_poly(field, &SkewPoly::new(word.to_vec(), self.aut()))
    }

    pub fn contains_poly(&self, field: &FieldSpec, word: &SkewPoly<FieldElem>) -> Result<bool> {
        let ring = SkewRing::new(field, self.aut())?;
        let word = ring.reduce_mod_xn_minus_1(word, self.n);
        if self.is_zero_code() {
            return Ok(word.is_zero());
        }
        Ok(ring.right_divide(&word, &self.g)?.remainder.is_zero())
    }

    /// Row `j` is the coefficient vector of `x^j·g`, `0 ≤ j < k`.
    pub fn generator_matrix(&self, field: &FieldSpec) -> GeneratorMatrix<FieldElem> {
        let ring = SkewRing::new(field, self.aut()).expect("automorphism of this field");
        let mut rows = Vec::with_capacity(self.dimension());
        let mut row = ring.monomial(field.one(), 0);
        for _ in 0..self.dimension() {
            rows.push(
                ring.mul(&row, &self.g)
                    .expect("same automorphism")
                    .to_vector(self.n),
            );
            row = ring.mul(&ring.x(), &row).expect("same automorphism");
        }
        GeneratorMatrix { n: self.n, rows }
    }

    pub fn span(&self, field: &FieldSpec) -> Result<Subspace> {
        Subspace::span(field, self.n, &self.generator_matrix(field).rows)
    }

    /// `h̃ = h_k + θ(h_{k-1})x + ... + θ^k(h_0)x^k` with `k = deg h`, before
    /// normalisation.
    pub fn reciprocal_check_polynomial(&self, field: &FieldSpec) -> SkewPoly<FieldElem> {
        let aut = self.aut();
        let k = self.h.degree().unwrap_or(0);
        let coeffs = (0..=k)
            .map(|j| field.theta_pow(self.h.coeff(k - j), aut, j as u64))
            .collect();
        SkewPoly::new(coeffs, aut)
    }

    /// `C⊥ = ⟨h̃⟩`, with `h̃` made monic.
    pub fn dual(&self, field: &FieldSpec) -> Result<ComponentCode> {
        let aut = self.aut();
        if self.is_zero_code() {
            return ComponentCode::full(field, aut, self.n);
        }
        let ring = SkewRing::new(field, aut)?;
        let dual_gen = ring.monic(&self.reciprocal_check_polynomial(field))?;
        ComponentCode::new(field, self.n, dual_gen)
    }

    /// `C = C⊥`: equal size and every generator row of `C⊥` lies in `C`.
    pub fn is_self_dual(&self, field: &FieldSpec) -> Result<bool> {
        if 2 * self.dimension() != self.n {
            return Ok(false);
        }
        let dual = self.dual(field)?;
        for row in dual.generator_matrix(field).rows {
            if !self.contains(field, &row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Idempotent generator `e = a·g mod (x^n - 1)` from `a·g + b·h = 1` in
    /// `F_{p^i}[x]`. Requires `(n, q) = 1` and `(n, t_i) = 1`; the result is
    /// checked for `e·e = e` and `⟨e⟩ = ⟨g⟩` before it is returned.
    pub fn idempotent_generator(&self, field: &FieldSpec) -> Result<SkewPoly<FieldElem>> {
        let aut = self.aut();
        let n = self.n as u64;
        if gcd(n, field.characteristic() as u64) != 1 {
            return Err(Error::HypothesisViolated(format!("gcd({n}, q) != 1")));
        }
        if gcd(n, aut.order() as u64) != 1 {
            return Err(Error::HypothesisViolated(format!(
                "gcd({n}, {}) != 1",
                aut.order()
            )));
        }
        let ring = SkewRing::new(field, aut)?;
        let (d, a, _) = extended_gcd_commutative(field, &self.g, &self.h)?;
        if d.coeffs() != [field.one()] {
            return Err(Error::NotCoprime);
        }
        let e = ring.mul_mod(&a, &self.g, self.n)?;
        verify_idempotent(&ring, self.n, &e, &self.g, |w| self.contains_poly(field, w))?;
        Ok(e)
    }

    pub fn min_hamming_distance(&self, field: &FieldSpec, bound: u64) -> Result<DistanceReport> {
        let rows = self.generator_matrix(field).rows;
        let mut min: Option<usize> = None;
        linalg::for_each_combination(field, self.n, &rows, bound, |w| {
            let wt = crate::ring::hamming_weight(w);
            if wt > 0 && min.is_none_or(|m| wt < m) {
                min = Some(wt);
            }
        })?;
        Ok(DistanceReport::from_min(min))
    }
}

fn verify_idempotent<K: CoeffRing>(
    ring: &SkewRing<'_, K>,
    n: usize,
    e: &SkewPoly<K::Elem>,
    g: &SkewPoly<K::Elem>,
    contains: impl Fn(&SkewPoly<K::Elem>) -> Result<bool>,
) -> Result<()> {
    if ring.mul_mod(e, e, n)? != *e {
        return Err(Error::VerificationFailed("e * e != e mod x^n - 1".into()));
    }
    if !contains(e)? {
        return Err(Error::VerificationFailed(
            "idempotent is not in the code".into(),
        ));
    }
    // g = g·e shows g ∈ ⟨e⟩
    if ring.mul_mod(g, e, n)? != ring.reduce_mod_xn_minus_1(g, n) {
        return Err(Error::VerificationFailed(
            "generator is not a left multiple of e".into(),
        ));
    }
    Ok(())
}

/// Skew cyclic code over `R`, `C = η₁C₁ ⊕ η₂C₂ ⊕ η₃C₃ = ⟨η₁g₁ + η₂g₂ + η₃g₃⟩`.
///
/// Equality compares `(n, θ, g₁, g₂, g₃)`, which determines the code.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewCyclicCode {
    components: [ComponentCode; 3],
    g_combined: SkewPoly<RingElem>,
}

impl SkewCyclicCode {
    pub fn from_components(
        ring: &RingR<'_>,
        c1: ComponentCode,
        c2: ComponentCode,
        c3: ComponentCode,
    ) -> Result<Self> {
        let code = Self::from_components_unchecked(ring, c1, c2, c3)?;
        // x^n - 1 = (η₁h₁ + η₂h₂ + η₃h₃)·g
        let sr = SkewRing::new(ring, code.aut())?;
        if sr.mul(&code.check_polynomial(ring)?, &code.g_combined)? != sr.xn_minus_1(code.n()) {
            return Err(Error::NotRightDivisor(code.n()));
        }
        Ok(code)
    }

    /// Same as [`SkewCyclicCode::from_components`] without re-checking the
    /// combined factorisation, for building negative controls.
    pub fn from_components_unchecked(
        ring: &RingR<'_>,
        c1: ComponentCode,
        c2: ComponentCode,
        c3: ComponentCode,
    ) -> Result<Self> {
        if c2.n != c1.n {
            return Err(Error::LengthMismatch {
                expected: c1.n,
                found: c2.n,
            });
        }
        if c3.n != c1.n {
            return Err(Error::LengthMismatch {
                expected: c1.n,
                found: c3.n,
            });
        }
        if c2.aut() != c1.aut() || c3.aut() != c1.aut() {
            return Err(Error::AutMismatch);
        }
        let g_combined = ring_skew_poly_combine(ring, &c1.g, &c2.g, &c3.g)?;
        Ok(SkewCyclicCode {
            components: [c1, c2, c3],
            g_combined,
        })
    }

    pub fn from_generators(
        ring: &RingR<'_>,
        n: usize,
        g1: SkewPoly<FieldElem>,
        g2: SkewPoly<FieldElem>,
        g3: SkewPoly<FieldElem>,
    ) -> Result<Self> {
        let f = ring.field();
        Self::from_components(
            ring,
            ComponentCode::new(f, n, g1)?,
            ComponentCode::new(f, n, g2)?,
            ComponentCode::new(f, n, g3)?,
        )
    }

    /// Builds the code from a single generator over `R`. Its CRT projections
    /// are made monic and must be right divisors of `x^n - 1`.
    pub fn from_combined_generator(
        ring: &RingR<'_>,
        n: usize,
        g: &SkewPoly<RingElem>,
    ) -> Result<Self> {
        let f = ring.field();
        let parts = ring_skew_poly_project(ring, g);
        let mut comps = Vec::with_capacity(3);
        for p in parts {
            let sr = SkewRing::new(f, g.aut())?;
            let p = if p.is_zero() {
                sr.xn_minus_1(n)
            } else {
                sr.monic(&p)?
            };
            comps.push(ComponentCode::new(f, n, p)?);
        }
        let c3 = comps.pop().unwrap();
        let c2 = comps.pop().unwrap();
        let c1 = comps.pop().unwrap();
        Self::from_components(ring, c1, c2, c3)
    }

    pub fn full(ring: &RingR<'_>, aut: AutExponent, n: usize) -> Result<Self> {
        let f = ring.field();
        let c = ComponentCode::full(f, aut, n)?;
        Self::from_components(ring, c.clone(), c.clone(), c)
    }

    pub fn zero_code(ring: &RingR<'_>, aut: AutExponent, n: usize) -> Result<Self> {
        let f = ring.field();
        let c = ComponentCode::zero_code(f, aut, n)?;
        Self::from_components(ring, c.clone(), c.clone(), c)
    }

    pub fn n(&self) -> usize {
        self.components[0].n
    }

    pub fn aut(&self) -> AutExponent {
        self.components[0].aut()
    }

    pub fn components(&self) -> &[ComponentCode; 3] {
        &self.components
    }

    pub fn decompose(&self) -> (ComponentCode, ComponentCode, ComponentCode) {
        let [a, b, c] = self.components.clone();
        (a, b, c)
    }

    /// `g = η₁g₁ + η₂g₂ + η₃g₃`.
    pub fn generator(&self) -> &SkewPoly<RingElem> {
        &self.g_combined
    }

    /// `η₁h₁ + η₂h₂ + η₃h₃`, the left cofactor of `g` in `x^n - 1`.
    pub fn check_polynomial(&self, ring: &RingR<'_>) -> Result<SkewPoly<RingElem>> {
        let [a, b, c] = &self.components;
        ring_skew_poly_combine(ring, &a.h, &b.h, &c.h)
    }

    pub fn generator_degrees(&self) -> [usize; 3] {
        [0, 1, 2].map(|j| self.components[j].generator_degree())
    }

    /// `log_q |C| = 3n - Σ deg g_j`.
    pub fn log_q_size(&self) -> usize {
        3 * self.n() - self.generator_degrees().iter().sum::<usize>()
    }

    pub fn contains(&self, ring: &RingR<'_>, word: &[RingElem]) -> Result<bool> {
        if word.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                found: word.len(),
            });
        }
        let split: Vec<CrtTriple> = word.iter().map(|&r| ring.crt_split(r)).collect();
        for (j, comp) in self.components.iter().enumerate() {
            let part: Vec<FieldElem> = split.iter().map(|t| t.get(j)).collect();
            if !comp.contains(ring.field(), &part)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn contains_poly(&self, ring: &RingR<'_>, word: &SkewPoly<RingElem>) -> Result<bool> {
        let sr = SkewRing::new(ring, self.aut())?;
        let w = sr.reduce_mod_xn_minus_1(word, self.n());
        self.contains(ring, &w.to_vector(self.n()))
    }

    /// The stacked matrix with blocks `η₁G₁`, `η₂G₂`, `η₃G₃`.
    pub fn generator_matrix(&self, ring: &RingR<'_>) -> GeneratorMatrix<RingElem> {
        let mut rows = Vec::new();
        for (j, comp) in self.components.iter().enumerate() {
            let eta = ring.eta(j);
            for row in comp.generator_matrix(ring.field()).rows {
                rows.push(row.iter().map(|&a| ring.scale(a, eta)).collect());
            }
        }
        GeneratorMatrix { n: self.n(), rows }
    }

    /// Gray images of the rows of [`SkewCyclicCode::generator_matrix`], an
    /// `F_q`-basis of `Φ(C)`.
    pub fn gray_generator_matrix(&self, ring: &RingR<'_>) -> Vec<Vec<FieldElem>> {
        self.generator_matrix(ring)
            .rows
            .iter()
            .map(|r| ring.gray_map(r).0)
            .collect()
    }

    pub fn gray_span(&self, ring: &RingR<'_>) -> Result<Subspace> {
        Subspace::span(
            ring.field(),
            3 * self.n(),
            &self.gray_generator_matrix(ring),
        )
    }

    /// `Φ(⟨g⟩)` computed from the single combined generator only.
    pub fn generator_module_span(&self, ring: &RingR<'_>) -> Result<Subspace> {
        left_module_span(ring, self.aut(), self.n(), &self.g_combined)
    }

    /// `C⊥ = η₁C₁⊥ ⊕ η₂C₂⊥ ⊕ η₃C₃⊥`, generated by `η₁h̃₁ + η₂h̃₂ + η₃h̃₃`.
    pub fn dual(&self, ring: &RingR<'_>) -> Result<SkewCyclicCode> {
        let f = ring.field();
        let [a, b, c] = &self.components;
        Self::from_components(ring, a.dual(f)?, b.dual(f)?, c.dual(f)?)
    }

    /// `η₁h̃₁ + η₂h̃₂ + η₃h̃₃` with the unnormalised reciprocals.
    pub fn dual_generator(&self, ring: &RingR<'_>) -> Result<SkewPoly<RingElem>> {
        let f = ring.field();
        let [a, b, c] = &self.components;
        let tilde = |comp: &ComponentCode| {
            if comp.is_zero_code() {
                SkewPoly::new(vec![f.one()], comp.aut())
            } else {
                comp.reciprocal_check_polynomial(f)
            }
        };
        ring_skew_poly_combine(ring, &tilde(a), &tilde(b), &tilde(c))
    }

    pub fn is_self_dual(&self, ring: &RingR<'_>) -> Result<bool> {
        for comp in &self.components {
            if !comp.is_self_dual(ring.field())? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `e = η₁e₁ + η₂e₂ + η₃e₃`, checked for `e·e = e` and `⟨e⟩ = C` over `R`.
    pub fn idempotent_generator(&self, ring: &RingR<'_>) -> Result<SkewPoly<RingElem>> {
        let f = ring.field();
        let [a, b, c] = &self.components;
        let e = ring_skew_poly_combine(
            ring,
            &a.idempotent_generator(f)?,
            &b.idempotent_generator(f)?,
            &c.idempotent_generator(f)?,
        )?;
        let sr = SkewRing::new(ring, self.aut())?;
        verify_idempotent(&sr, self.n(), &e, &self.g_combined, |w| {
            self.contains_poly(ring, w)
        })?;
        Ok(e)
    }

    /// Minimum Lee distance as the minimum over the non-zero components of
    /// their minimum Hamming distance.
    pub fn min_lee_distance(&self, ring: &RingR<'_>, bound: u64) -> Result<DistanceReport> {
        let mut min: Option<usize> = None;
        for comp in &self.components {
            let d = comp.min_hamming_distance(ring.field(), bound)?;
            if !d.degenerate {
                min = Some(min.map_or(d.distance, |m| m.min(d.distance)));
            }
        }
        Ok(DistanceReport::from_min(min))
    }

    /// Minimum Hamming weight of `Φ(C)` by enumerating all of it.
    pub fn min_lee_distance_by_enumeration(
        &self,
        ring: &RingR<'_>,
        bound: u64,
    ) -> Result<DistanceReport> {
        let rows = self.gray_generator_matrix(ring);
        let mut min: Option<usize> = None;
        linalg::for_each_combination(ring.field(), 3 * self.n(), &rows, bound, |w| {
            let wt = crate::ring::hamming_weight(w);
            if wt > 0 && min.is_none_or(|m| wt < m) {
                min = Some(wt);
            }
        })?;
        Ok(DistanceReport::from_min(min))
    }
}

/// `(∏(s_j + 1), ∏(s_j + 1)³)` for `x^n - 1 = ∏ p_j^{s_j}` over `F_{p^i}`:
/// the number of skew cyclic codes of length `n` over `F_q` and over `R`.
/// Requires `(n, t_i) = 1`.
pub fn count_skew_cyclic_codes(
    field: &FieldSpec,
    aut: AutExponent,
    n: usize,
) -> Result<(u128, u128)> {
    if gcd(n as u64, aut.order() as u64) != 1 {
        return Err(Error::HypothesisViolated(format!(
            "gcd({n}, {}) != 1",
            aut.order()
        )));
    }
    Ok(count_from_factorization(&factor_xn_minus_1(field, aut, n)?))
}

/// Standard bilinear form `Σ x_j y_j` over `R`.
pub fn inner_product(ring: &RingR<'_>, x: &[RingElem], y: &[RingElem]) -> RingElem {
    x.iter()
        .zip(y)
        .fold(ring.zero(), |acc, (&a, &b)| ring.add(acc, ring.mul(a, b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skew::monic_right_divisors;
    use crate::DEFAULT_DIVISOR_SEARCH_BOUND;

    fn f9() -> FieldSpec {
        FieldSpec::new(3, 2, &[1, 0, 1]).unwrap()
    }

    fn poly(f: &FieldSpec, aut: AutExponent, cs: &[i64]) -> SkewPoly<FieldElem> {
        SkewPoly::new(cs.iter().map(|&c| f.from_int(c)).collect(), aut)
    }

    fn x_minus_w(f: &FieldSpec, aut: AutExponent) -> SkewPoly<FieldElem> {
        SkewPoly::new(vec![f.neg(f.generator()), f.one()], aut)
    }

    #[test]
    fn component_construction() {
        let f = f9();
        let aut = f.aut(1).unwrap();
        let full = ComponentCode::full(&f, aut, 4).unwrap();
        assert_eq!(full.dimension(), 4);
        let zero = ComponentCode::zero_code(&f, aut, 4).unwrap();
        assert_eq!(zero.dimension(), 0);
        let c = ComponentCode::new(&f, 2, x_minus_w(&f, aut)).unwrap();
        assert_eq!(c.dimension(), 1);
        let two_w = f.mul(f.from_int(2), f.generator());
        assert_eq!(c.check_polynomial().coeffs(), &[two_w, f.one()]);
        assert_eq!(
            ComponentCode::new(&f, 5, poly(&f, aut, &[1, 2])).unwrap_err(),
            Error::NotMonic
        );
        assert_eq!(
            ComponentCode::new(&f, 5, poly(&f, aut, &[1, 1])).unwrap_err(),
            Error::NotRightDivisor(5)
        );
    }

    #[test]
    fn membership_examples() {
        let f = f9();
        let aut = f.aut(1).unwrap();
        let c = ComponentCode::new(&f, 2, x_minus_w(&f, aut)).unwrap();
        let w = f.generator();
        assert!(c.contains(&f, &[f.zero(), f.zero()]).unwrap());
        assert!(c.contains(&f, &[f.neg(w), f.one()]).unwrap());
        assert!(!c.contains(&f, &[w, f.one()]).unwrap());
        assert!(matches!(
            c.contains(&f, &[w]),
            Err(Error::LengthMismatch {
                expected: 2,
                found: 1
            })
        ));
    }

    #[test]
    fn generator_matrix_examples() {
        let f = f9();
        let aut = f.aut(1).unwrap();
        let full = ComponentCode::full(&f, aut, 2).unwrap();
        assert_eq!(
            full.generator_matrix(&f).rows,
            vec![vec![f.one(), f.zero()], vec![f.zero(), f.one()]]
        );
        let c = ComponentCode::new(&f, 2, x_minus_w(&f, aut)).unwrap();
        assert_eq!(
            c.generator_matrix(&f).rows,
            vec![vec![f.neg(f.generator()), f.one()]]
        );
    }

    #[test]
    fn dual_of_x_minus_w() {
        let f = f9();
        let aut = f.aut(1).unwrap();
        let w = f.generator();
        let c = ComponentCode::new(&f, 2, x_minus_w(&f, aut)).unwrap();
        // h = x + 2w, h̃ = 1 + θ(2w)x = 1 + wx
        assert_eq!(c.reciprocal_check_polynomial(&f).coeffs(), &[f.one(), w]);
        let d = c.dual(&f).unwrap();
        let row = &c.generator_matrix(&f).rows[0];
        let drow = &d.generator_matrix(&f).rows[0];
        assert!(linalg::dot(&f, row, drow).is_zero());
        assert!(linalg::dot(&f, row, &[f.one(), w]).is_zero());
        // the code is self-dual: (-w)^2 + 1 = 0
        assert!(c.is_self_dual(&f).unwrap());
    }

    #[test]
    fn dual_of_full_and_zero() {
        let f = f9();
        let aut = f.aut(1).unwrap();
        let full = ComponentCode::full(&f, aut, 3).unwrap();
        let zero = ComponentCode::zero_code(&f, aut, 3).unwrap();
        assert_eq!(full.dual(&f).unwrap(), zero);
        assert_eq!(zero.dual(&f).unwrap(), full);
        assert!(!full.is_self_dual(&f).unwrap());
    }

    #[test]
    fn r_code_from_components() {
        let f = f9();
        let ring = RingR::new(&f).unwrap();
        let aut = f.aut(1).unwrap();
        let zero = SkewCyclicCode::zero_code(&ring, aut, 5).unwrap();
        assert_eq!(zero.log_q_size(), 0);
        let full = SkewCyclicCode::full(&ring, aut, 5).unwrap();
        assert_eq!(full.generator().coeffs(), &[ring.one()]);
        assert_eq!(full.log_q_size(), 15);
        let code = SkewCyclicCode::from_generators(
            &ring,
            5,
            poly(&f, aut, &[-1, 1]),
            poly(&f, aut, &[1]),
            poly(&f, aut, &[1]),
        )
        .unwrap();
        assert_eq!(code.log_q_size(), 14);
        let (a, b, c) = code.decompose();
        assert_eq!(a.generator(), &poly(&f, aut, &[-1, 1]));
        assert!(b.is_full() && c.is_full());
        let rebuilt = SkewCyclicCode::from_combined_generator(&ring, 5, code.generator()).unwrap();
        assert_eq!(rebuilt, code);
        let other = ComponentCode::full(&f, aut, 4).unwrap();
        assert!(matches!(
            SkewCyclicCode::from_components(&ring, a, b, other),
            Err(Error::LengthMismatch {
                expected: 5,
                found: 4
            })
        ));
    }

    #[test]
    fn idempotents_small() {
        let f = f9();
        let aut = f.aut(1).unwrap();
        let full = ComponentCode::full(&f, aut, 5).unwrap();
        assert_eq!(full.idempotent_generator(&f).unwrap().coeffs(), &[f.one()]);
        let zero = ComponentCode::zero_code(&f, aut, 5).unwrap();
        assert!(zero.idempotent_generator(&f).unwrap().is_zero());
        let c = ComponentCode::new(&f, 5, poly(&f, aut, &[-1, 1])).unwrap();
        let e = c.idempotent_generator(&f).unwrap();
        let sr = SkewRing::new(&f, aut).unwrap();
        assert_eq!(sr.mul_mod(&e, &e, 5).unwrap(), e);
        assert_eq!(
            left_module_span(&f, aut, 5, &e).unwrap(),
            c.span(&f).unwrap()
        );

        let even = ComponentCode::full(&f, aut, 2).unwrap();
        assert!(matches!(
            even.idempotent_generator(&f),
            Err(Error::HypothesisViolated(_))
        ));
        let three = ComponentCode::full(&f, aut, 3).unwrap();
        assert!(matches!(
            three.idempotent_generator(&f),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn distances_small() {
        let f = f9();
        let aut = f.aut(1).unwrap();
        let c = ComponentCode::new(&f, 2, x_minus_w(&f, aut)).unwrap();
        assert_eq!(
            c.min_hamming_distance(&f, 100).unwrap(),
            DistanceReport {
                distance: 2,
                degenerate: false
            }
        );
        let full = ComponentCode::full(&f, aut, 3).unwrap();
        assert_eq!(full.min_hamming_distance(&f, 1000).unwrap().distance, 1);
        let zero = ComponentCode::zero_code(&f, aut, 3).unwrap();
        assert_eq!(
            zero.min_hamming_distance(&f, 1000).unwrap(),
            DistanceReport {
                distance: 0,
                degenerate: true
            }
        );
    }

    #[test]
    fn code_counts() {
        let f = f9();
        let aut = f.aut(1).unwrap();
        assert_eq!(count_skew_cyclic_codes(&f, aut, 1).unwrap(), (2, 8));
        assert_eq!(count_skew_cyclic_codes(&f, aut, 5).unwrap(), (4, 64));
        assert!(matches!(
            count_skew_cyclic_codes(&f, aut, 4),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn census_codes_n3_structural_checks() {
        let f = f9();
        let ring = RingR::new(&f).unwrap();
        let aut = f.aut(1).unwrap();
        let divs = monic_right_divisors(&f, aut, 3, DEFAULT_DIVISOR_SEARCH_BOUND).unwrap();
        assert_eq!(divs.len(), 4);
        for g1 in &divs {
            for g2 in &divs {
                for g3 in &divs {
                    let code = SkewCyclicCode::from_generators(
                        &ring,
                        3,
                        g1.clone(),
                        g2.clone(),
                        g3.clone(),
                    )
                    .unwrap();
                    assert_eq!(code.gray_span(&ring).unwrap().dim(), code.log_q_size());
                    assert_eq!(
                        code.generator_module_span(&ring).unwrap(),
                        code.gray_span(&ring).unwrap()
                    );
                    let dual = code.dual(&ring).unwrap();
                    assert_eq!(code.log_q_size() + dual.log_q_size(), 9);
                    assert_eq!(dual.dual(&ring).unwrap(), code);
                    for x in &code.generator_matrix(&ring).rows {
                        for y in &dual.generator_matrix(&ring).rows {
                            assert!(inner_product(&ring, x, y).is_zero());
                        }
                    }
                }
            }
        }
    }
}
