//! Canonical text forms.
//!
//! Field element `[c0,c1,...]` (ascending powers of the field generator),
//! ring element `a|b|c`, vectors `;`-separated, polynomials
//! `c0 + c1*x + c2*x^2` in ascending degree with zero terms omitted and a
//! coefficient equal to one left implicit.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::field::{FieldElem, FieldSpec};
use crate::ring::{RingElem, RingR};
use crate::skew::{CoeffRing, SkewPoly};

pub trait ElemText: CoeffRing {
    fn elem_text(&self, x: Self::Elem) -> String;
}

impl ElemText for FieldSpec {
    fn elem_text(&self, x: FieldElem) -> String {
        let cs: Vec<String> = self.coeffs(x).iter().map(|c| format!("{c}")).collect();
        format!("[{}]", cs.join(","))
    }
}

impl ElemText for RingR<'_> {
    fn elem_text(&self, r: RingElem) -> String {
        let f = self.field();
        format!(
            "{}|{}|{}",
            f.elem_text(r.a),
            f.elem_text(r.b),
            f.elem_text(r.c)
        )
    }
}

pub fn vector_text<K: ElemText>(base: &K, v: &[K::Elem]) -> String {
    let parts: Vec<String> = v.iter().map(|&x| base.elem_text(x)).collect();
    parts.join(";")
}

pub fn poly_text<K: ElemText>(base: &K, f: &SkewPoly<K::Elem>) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut terms = Vec::new();
    for (k, &c) in f.coeffs().iter().enumerate() {
        if base.is_zero(c) {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{k}"),
        };
        terms.push(if k == 0 {
            base.elem_text(c)
        } else if c == base.one() {
            mono
        } else {
            format!("{}*{mono}", base.elem_text(c))
        });
    }
    terms.join(" + ")
}
