//! Text input: field specs, elements, vectors and polynomials.

use skewcyc_core::{AutExponent, FieldElem, FieldSpec, RingElem, RingR, SkewPoly};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("bad field spec `{0}`: expected p=<prime>,m=<degree>,mod=<c0>,...,<cm>")]
    FieldSpec(String),
    #[error("bad field element `{0}`")]
    Element(String),
    #[error("bad ring element `{0}`")]
    RingElement(String),
    #[error("bad polynomial `{0}`: {1}")]
    Poly(String, String),
    #[error(transparent)]
    Core(#[from] skewcyc_core::Error),
}

fn int(s: &str) -> Option<i64> {
    s.trim().parse().ok()
}

/// `p=3,m=2,mod=1,0,1`. With `m=1` the modulus may be omitted.
pub fn field_spec(s: &str) -> Result<FieldSpec, ParseError> {
    let bad = || ParseError::FieldSpec(s.to_string());
    let (mut p, mut m, mut modulus) = (None, None, Vec::new());
    let mut in_mod = false;
    for tok in s.split(',').map(str::trim) {
        if let Some((k, v)) = tok.split_once('=') {
            let v = v.trim().parse::<u32>().map_err(|_| bad())?;
            in_mod = false;
            match k.trim() {
                "p" => p = Some(v),
                "m" => m = Some(v),
                "mod" => {
                    in_mod = true;
                    modulus.push(v);
                }
                _ => return Err(bad()),
            }
        } else if in_mod {
            modulus.push(tok.parse::<u32>().map_err(|_| bad())?);
        } else {
            return Err(bad());
        }
    }
    let (p, m) = (p.ok_or_else(bad)?, m.unwrap_or(1));
    if m == 1 && modulus.is_empty() {
        return Ok(FieldSpec::prime(p)?);
    }
    Ok(FieldSpec::new(p, m, &modulus)?)
}

pub fn field_spec_text(f: &FieldSpec) -> String {
    let cs: Vec<String> = f.modulus().iter().map(|c| c.to_string()).collect();
    format!(
        "p={},m={},mod={}",
        f.characteristic(),
        f.degree(),
        cs.join(",")
    )
}

/// `[c0,c1,...]` or a bare integer from the prime field.
pub fn field_elem(f: &FieldSpec, s: &str) -> Result<FieldElem, ParseError> {
    let s = s.trim();
    let bad = || ParseError::Element(s.to_string());
    if let Some(inner) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
        let cs: Vec<u32> = inner
            .split(',')
            .map(|c| c.trim().parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        return Ok(f.from_coeffs(&cs)?);
    }
    int(s).map(|k| f.from_int(k)).ok_or_else(bad)
}

/// `a|b|c` for `a + bv + cv²`, or a single field element.
pub fn ring_elem(ring: &RingR<'_>, s: &str) -> Result<RingElem, ParseError> {
    let f = ring.field();
    let parts: Vec<&str> = s.split('|').collect();
    match parts.as_slice() {
        [a] => Ok(ring.scalar(field_elem(f, a)?)),
        [a, b, c] => Ok(RingElem::new(
            field_elem(f, a)?,
            field_elem(f, b)?,
            field_elem(f, c)?,
        )),
        _ => Err(ParseError::RingElement(s.to_string())),
    }
}

pub fn field_vector(f: &FieldSpec, s: &str) -> Result<Vec<FieldElem>, ParseError> {
    s.split(';').map(|e| field_elem(f, e)).collect()
}

pub fn ring_vector(ring: &RingR<'_>, s: &str) -> Result<Vec<RingElem>, ParseError> {
    s.split(';').map(|e| ring_elem(ring, e)).collect()
}

/// Splits at top-level `+` and `-`, keeping the sign with each term.
fn terms(s: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut neg = false;
    for ch in s.chars().filter(|c| !c.is_whitespace()) {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (ch == '+' || ch == '-') && !cur.ends_with('^') {
            if !cur.is_empty() {
                out.push((neg, std::mem::take(&mut cur)));
            }
            neg = ch == '-';
            continue;
        }
        cur.push(ch);
    }
    if !cur.is_empty() || out.is_empty() {
        out.push((neg, cur));
    }
    out
}

/// Parses `c0 + c1*x + c2*x^2` and human forms such as `x^2+2x+1` or `x-1`.
/// Coefficients are read by `coeff`; an omitted coefficient is one.
pub fn poly<E>(
    s: &str,
    aut: AutExponent,
    zero: E,
    one: E,
    add: impl Fn(E, E) -> E,
    neg: impl Fn(E) -> E,
    coeff: impl Fn(&str) -> Result<E, ParseError>,
) -> Result<SkewPoly<E>, ParseError>
where
    E: Copy + Eq + Default + core::fmt::Debug,
{
    let bad = |why: &str| ParseError::Poly(s.to_string(), why.to_string());
    let mut coeffs: Vec<E> = Vec::new();
    for (negative, term) in terms(s) {
        if term.is_empty() {
            return Err(bad("empty term"));
        }
        let mut depth = 0i32;
        let mut x_at = None;
        for (k, ch) in term.char_indices() {
            match ch {
                '[' => depth += 1,
                ']' => depth -= 1,
                'x' if depth == 0 => x_at = Some(k),
                _ => {}
            }
        }
        let (c_text, deg) = match x_at {
            None => (term.as_str(), 0usize),
            Some(k) => {
                let rest = &term[k + 1..];
                let deg = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .and_then(|e| e.parse().ok())
                        .ok_or_else(|| bad("bad exponent"))?
                };
                (term[..k].trim_end_matches('*'), deg)
            }
        };
        let c = if c_text.is_empty() {
            one
        } else {
            coeff(c_text)?
        };
        let c = if negative { neg(c) } else { c };
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, zero);
        }
        coeffs[deg] = add(coeffs[deg], c);
    }
    if coeffs.is_empty() {
        coeffs.push(zero);
    }
    Ok(SkewPoly::new(coeffs, aut))
}

pub fn field_poly(
    f: &FieldSpec,
    aut: AutExponent,
    s: &str,
) -> Result<SkewPoly<FieldElem>, ParseError> {
    if s.trim() == "0" {
        return Ok(SkewPoly::zero(aut));
    }
    poly(
        s,
        aut,
        f.zero(),
        f.one(),
        |a, b| f.add(a, b),
        |a| f.neg(a),
        |c| field_elem(f, c),
    )
}

pub fn ring_poly(
    ring: &RingR<'_>,
    aut: AutExponent,
    s: &str,
) -> Result<SkewPoly<RingElem>, ParseError> {
    if s.trim() == "0" {
        return Ok(SkewPoly::zero(aut));
    }
    poly(
        s,
        aut,
        ring.zero(),
        ring.one(),
        |a, b| ring.add(a, b),
        |a| ring.neg(a),
        |c| ring_elem(ring, c),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use skewcyc_core::text::poly_text;

    fn f9() -> FieldSpec {
        field_spec("p=3,m=2,mod=1,0,1").unwrap()
    }

    #[test]
    fn field_specs() {
        let f = f9();
        assert_eq!(f.order(), 9);
        assert_eq!(field_spec_text(&f), "p=3,m=2,mod=1,0,1");
        assert_eq!(field_spec("p=5").unwrap().order(), 5);
        assert!(field_spec("p=3,m=2,mod=2,0,1").is_err());
        assert!(field_spec("q=3").is_err());
        assert!(field_spec("p=4").is_err());
    }

    #[test]
    fn elements() {
        let f = f9();
        assert_eq!(field_elem(&f, "[0,1]").unwrap(), f.generator());
        assert_eq!(field_elem(&f, "2").unwrap(), f.from_int(2));
        assert!(field_elem(&f, "[0,3]").is_err());
        let ring = RingR::new(&f).unwrap();
        assert_eq!(ring_elem(&ring, "[0]|[1]|[0]").unwrap(), ring.v());
        assert_eq!(
            ring_vector(&ring, "1;[0,1]").unwrap(),
            vec![ring.one(), ring.scalar(f.generator())]
        );
    }

    #[test]
    fn polynomials_round_trip() {
        let f = f9();
        let aut = f.aut(1).unwrap();
        let g = field_poly(&f, aut, "x^2+2x+1").unwrap();
        assert_eq!(g.coeffs(), &[f.one(), f.from_int(2), f.one()]);
        let g = field_poly(&f, aut, "x-1").unwrap();
        assert_eq!(g.coeffs(), &[f.from_int(2), f.one()]);
        let g = field_poly(&f, aut, "[1,0] + [2,1]*x^2").unwrap();
        assert_eq!(field_poly(&f, aut, &poly_text(&f, &g)).unwrap(), g);
        let g = field_poly(&f, aut, "-[0,1] + x").unwrap();
        assert_eq!(poly_text(&f, &g), "[0,2] + x");
        assert!(field_poly(&f, aut, "x^a").is_err());
        assert!(field_poly(&f, aut, "0").unwrap().is_zero());

        let ring = RingR::new(&f).unwrap();
        let h = ring_poly(
            &ring,
            aut,
            "[1,0]|[0,0]|[2,0] + [0,1]|[1,0]|[0,0]*x^3 + x^4",
        )
        .unwrap();
        assert_eq!(ring_poly(&ring, aut, &poly_text(&ring, &h)).unwrap(), h);
    }
}
