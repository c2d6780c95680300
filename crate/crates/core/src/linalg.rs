//! Exact linear algebra over `F_q`: reduced row echelon forms, subspace
//! membership, orthogonal complements and codeword enumeration.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldSpec};

/// A subspace of `F_q^len`, stored as its reduced row echelon basis. Two
/// subspaces are equal exactly when their bases are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    len: usize,
    basis: Vec<Vec<FieldElem>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(len: usize) -> Self {
        Subspace {
            len,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn span(field: &FieldSpec, len: usize, rows: &[Vec<FieldElem>]) -> Result<Self> {
        let mut s = Subspace::zero(len);
        for r in rows {
            s.insert(field, r)?;
        }
        Ok(s)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<FieldElem>] {
        &self.basis
    }

    fn reduce(&self, field: &FieldSpec, v: &mut [FieldElem]) {
        for (row, &piv) in self.basis.iter().zip(&self.pivots) {
            let c = v[piv];
            if c.is_zero() {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(row) {
                *x = field.sub(*x, field.mul(c, r));
            }
        }
    }

    pub fn contains(&self, field: &FieldSpec, v: &[FieldElem]) -> Result<bool> {
        if v.len() != self.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                found: v.len(),
            });
        }
        let mut w = v.to_vec();
        self.reduce(field, &mut w);
        Ok(w.iter().all(|x| x.is_zero()))
    }

    /// Adds `v` to the span. Returns whether the dimension grew.
    pub fn insert(&mut self, field: &FieldSpec, v: &[FieldElem]) -> Result<bool> {
        if v.len() != self.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                found: v.len(),
            });
        }
        let mut w = v.to_vec();
        self.reduce(field, &mut w);
        let Some(piv) = w.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = field.inv(w[piv])?;
        for x in w.iter_mut() {
            *x = field.mul(inv, *x);
        }
        // clear the new pivot column from the existing rows
        for row in self.basis.iter_mut() {
            let c = row[piv];
            if c.is_zero() {
                continue;
            }
            for (x, &r) in row.iter_mut().zip(&w) {
                *x = field.sub(*x, field.mul(c, r));
            }
        }
        let at = self.pivots.partition_point(|&p| p < piv);
        self.pivots.insert(at, piv);
        self.basis.insert(at, w);
        Ok(true)
    }

    /// `{ y : Σ b_j y_j = 0 for every b in the subspace }`.
    pub fn orthogonal_complement(&self, field: &FieldSpec) -> Subspace {
        let mut rows = Vec::new();
        for free in (0..self.len).filter(|c| !self.pivots.contains(c)) {
            let mut y = vec![field.zero(); self.len];
            y[free] = field.one();
            for (row, &piv) in self.basis.iter().zip(&self.pivots) {
                y[piv] = field.neg(row[free]);
            }
            rows.push(y);
        }
        Subspace::span(field, self.len, &rows).expect("rows have the right length")
    }

    pub fn cardinality(&self, field: &FieldSpec) -> u128 {
        (field.order() as u128).pow(self.dim() as u32)
    }

    /// Visits every vector of the subspace once. Refuses when the subspace
    /// has more than `bound` elements.
    pub fn for_each_vector(
        &self,
        field: &FieldSpec,
        bound: u64,
        visit: impl FnMut(&[FieldElem]),
    ) -> Result<()> {
        for_each_combination(field, self.len, &self.basis, bound, visit)
    }
}

pub fn rank(field: &FieldSpec, len: usize, rows: &[Vec<FieldElem>]) -> Result<usize> {
    Ok(Subspace::span(field, len, rows)?.dim())
}

pub fn dot(field: &FieldSpec, x: &[FieldElem], y: &[FieldElem]) -> FieldElem {
    x.iter().zip(y).fold(field.zero(), |acc, (&a, &b)| {
        field.add(acc, field.mul(a, b))
    })
}

/// Visits every `F_q`-linear combination of `rows` (with repetitions if the
/// rows are dependent), updating the running word one coordinate of the
/// coefficient vector at a time.
pub fn for_each_combination(
    field: &FieldSpec,
    len: usize,
    rows: &[Vec<FieldElem>],
    bound: u64,
    mut visit: impl FnMut(&[FieldElem]),
) -> Result<()> {
    let q = field.order() as u128;
    let size = (0..rows.len()).fold(1u128, |acc, _| acc.saturating_mul(q));
    if size > bound as u128 {
        return Err(Error::EnumerationTooLarge {
            size,
            bound: bound as u128,
        });
    }
    let els = field.elements_bounded(u64::MAX)?;
    let mut digits = vec![0usize; rows.len()];
    let mut word = vec![field.zero(); len];
    loop {
        visit(&word);
        let mut k = 0;
        loop {
            if k == rows.len() {
                return Ok(());
            }
            let old = els[digits[k]];
            digits[k] = (digits[k] + 1) % els.len();
            let new = els[digits[k]];
            let delta = field.sub(new, old);
            for (x, &r) in word.iter_mut().zip(&rows[k]) {
                *x = field.add(*x, field.mul(delta, r));
            }
            if digits[k] != 0 {
                break;
            }
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn f9() -> FieldSpec {
        FieldSpec::new(3, 2, &[1, 0, 1]).unwrap()
    }

    #[test]
    fn rref_is_canonical() {
        let f = f9();
        let w = f.generator();
        let (o, z) = (f.one(), f.zero());
        let a = vec![vec![o, w, z, o], vec![z, o, o, w]];
        let b = vec![
            vec![o, f.add(w, o), o, f.add(o, w)],
            vec![f.mul(w, o), f.mul(w, w), z, w],
        ];
        let sa = Subspace::span(&f, 4, &a).unwrap();
        let sb = Subspace::span(&f, 4, &b).unwrap();
        assert_eq!(sa.dim(), 2);
        assert_eq!(sa, sb);
    }

    #[test]
    fn complement_is_orthogonal_and_has_right_dimension() {
        let f = f9();
        let w = f.generator();
        let rows = vec![
            vec![f.one(), w, f.zero(), f.from_int(2), w],
            vec![f.zero(), f.one(), w, w, f.one()],
        ];
        let s = Subspace::span(&f, 5, &rows).unwrap();
        let c = s.orthogonal_complement(&f);
        assert_eq!(c.dim(), 3);
        for x in s.basis() {
            for y in c.basis() {
                assert!(dot(&f, x, y).is_zero());
            }
        }
        assert_eq!(c.orthogonal_complement(&f), s);
    }

    #[test]
    fn enumeration_visits_each_vector_once() {
        let f = FieldSpec::prime(3).unwrap();
        let rows = vec![
            vec![f.one(), f.zero(), f.one()],
            vec![f.zero(), f.one(), f.one()],
        ];
        let s = Subspace::span(&f, 3, &rows).unwrap();
        let mut seen = BTreeSet::new();
        let mut count = 0;
        s.for_each_vector(&f, 100, |v| {
            seen.insert(v.to_vec());
            count += 1;
            assert!(s.contains(&f, v).unwrap());
        })
        .unwrap();
        assert_eq!(count, 9);
        assert_eq!(seen.len(), 9);
        assert!(matches!(
            s.for_each_vector(&f, 8, |_| {}),
            Err(Error::EnumerationTooLarge { .. })
        ));
    }
}
