//! JSON schemas: code descriptions and verdict lines.

use serde::{Deserialize, Serialize};
use skewcyc_core::oracle::{TestMatrixEntry, VerdictReport};
use skewcyc_core::text::poly_text;
use skewcyc_core::{FieldSpec, RingR, SkewCyclicCode};

use crate::parse::{self, ParseError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub p: u32,
    pub m: u32,
    #[serde(rename = "mod")]
    pub modulus: Vec<u32>,
}

impl FieldJson {
    pub fn of(f: &FieldSpec) -> Self {
        FieldJson {
            p: f.characteristic(),
            m: f.degree(),
            modulus: f.modulus().to_vec(),
        }
    }

    pub fn build(&self) -> Result<FieldSpec, ParseError> {
        Ok(FieldSpec::new(self.p, self.m, &self.modulus)?)
    }
}

/// `{ "field": {...}, "aut": 1, "n": 5, "g1": "...", "g2": "...", "g3": "..." }`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub field: FieldJson,
    pub aut: u32,
    pub n: usize,
    pub g1: String,
    pub g2: String,
    pub g3: String,
}

impl CodeJson {
    pub fn of(ring: &RingR<'_>, code: &SkewCyclicCode) -> Self {
        let f = ring.field();
        let [a, b, c] = code.components();
        CodeJson {
            field: FieldJson::of(f),
            aut: code.aut().i(),
            n: code.n(),
            g1: poly_text(f, a.generator()),
            g2: poly_text(f, b.generator()),
            g3: poly_text(f, c.generator()),
        }
    }

    pub fn build(&self, ring: &RingR<'_>) -> Result<SkewCyclicCode, ParseError> {
        let f = ring.field();
        let aut = f.aut(self.aut)?;
        let g = |s: &str| parse::field_poly(f, aut, s);
        Ok(SkewCyclicCode::from_generators(
            ring,
            self.n,
            g(&self.g1)?,
            g(&self.g2)?,
            g(&self.g3)?,
        )?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub p: u32,
    pub m: u32,
    #[serde(rename = "mod")]
    pub modulus: Vec<u32>,
    pub i: u32,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threshold: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub code_bound: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default)]
    pub seed: u64,
}

impl EntryJson {
    pub fn of(e: &TestMatrixEntry) -> Self {
        EntryJson {
            p: e.p,
            m: e.m,
            modulus: e.modulus.clone(),
            i: e.i,
            n: e.n,
            threshold: Some(e.threshold),
            code_bound: Some(e.code_bound),
            samples: Some(e.samples),
            seed: e.seed,
        }
    }

    pub fn entry(&self) -> TestMatrixEntry {
        let mut e = TestMatrixEntry::new(self.p, self.m, &self.modulus, self.i, self.n)
            .with_seed(self.seed);
        if let Some(t) = self.threshold {
            e.threshold = t;
        }
        if let Some(b) = self.code_bound {
            e.code_bound = b;
        }
        if let Some(s) = self.samples {
            e.samples = s;
        }
        e
    }
}

/// One verdict line: `{"claim":"Thm4.5","config":{...},"mode":"exhaustive","pass":true}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub claim: String,
    pub config: EntryJson,
    pub mode: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerdictJson {
    pub fn of(r: &VerdictReport) -> Self {
        VerdictJson {
            claim: r.claim.to_string(),
            config: EntryJson::of(&r.config),
            mode: r.mode.as_str().to_string(),
            pass: r.pass,
            witness: r.witness.clone(),
            note: r.note.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_json_round_trip() {
        let f = FieldSpec::new(3, 2, &[1, 0, 1]).unwrap();
        let ring = RingR::new(&f).unwrap();
        let aut = f.aut(1).unwrap();
        let g = parse::field_poly(&f, aut, "x-1").unwrap();
        let one = parse::field_poly(&f, aut, "1").unwrap();
        let code = SkewCyclicCode::from_generators(&ring, 5, g, one.clone(), one).unwrap();
        let j = CodeJson::of(&ring, &code);
        let text = serde_json::to_string(&j).unwrap();
        assert!(text
            .starts_with(r#"{"field":{"p":3,"m":2,"mod":[1,0,1]},"aut":1,"n":5,"g1":"[2,0] + x""#));
        let back: CodeJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.build(&ring).unwrap(), code);
    }
}
