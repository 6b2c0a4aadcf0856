//! Textual, LaTeX and JSON renderings of [`BiPoly`].
//!
//! Text terms are ordered by ascending `y` exponent and, within that, by
//! descending `x` exponent, so `x^3 + 3*x^2 + 2*x + 4*x*y + 2*y + 3*y^2 + y^3`
//! prints exactly as written. JSON triples are sorted grade-lex: ascending
//! total degree, ties broken by the larger `x` exponent first.

use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::BiPoly;
use crate::error::{Error, Result};

impl BiPoly {
    fn display_order(&self) -> Vec<((u32, u32), &BigInt)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by_key(|&((i, j), _)| (j, Reverse(i)));
        v
    }

    fn grade_lex_order(&self) -> Vec<((u32, u32), &BigInt)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by_key(|&((i, j), _)| (i + j, Reverse(i)));
        v
    }

    /// Renders with custom variable names, e.g. `("λ", "t")` for coboundary
    /// polynomials.
    pub fn to_text_with(&self, xname: &str, yname: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, ((i, j), c)) in self.display_order().into_iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || (i == 0 && j == 0) {
                factors.push(abs.to_string());
            }
            for (name, e) in [(xname, i), (yname, j)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    pub fn to_text(&self) -> String {
        self.to_text_with("x", "y")
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, ((i, j), c)) in self.display_order().into_iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            if !abs.is_one() || (i == 0 && j == 0) {
                out.push_str(&abs.to_string());
            }
            for (name, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => out.push_str(name),
                    _ => out.push_str(&format!("{name}^{{{e}}}")),
                }
            }
        }
        out
    }

    /// `[i, j, "coefficient"]` triples in grade-lex order.
    pub fn to_json_triples(&self) -> Vec<(u32, u32, String)> {
        self.grade_lex_order()
            .into_iter()
            .map(|((i, j), c)| (i, j, c.to_string()))
            .collect()
    }

    pub fn from_json_triples(triples: &[(u32, u32, String)]) -> Result<BiPoly> {
        let mut terms = Vec::with_capacity(triples.len());
        for (i, j, c) in triples {
            let c: BigInt = c.parse().map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))?;
            terms.push((*i, *j, c));
        }
        Ok(BiPoly::from_terms(terms))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_triples()).expect("triples serialize")
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for BiPoly {
    type Err = Error;

    /// Parses the text format. Also accepts implicit multiplication
    /// (`3x^2y`) and arbitrary whitespace.
    fn from_str(s: &str) -> Result<BiPoly> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bytes = compact.as_bytes();
        let mut pos = 0;
        let mut result = BiPoly::zero();
        let mut first = true;
        while pos < bytes.len() {
            let mut sign = BigInt::one();
            match bytes[pos] {
                b'+' => pos += 1,
                b'-' => {
                    sign = -sign;
                    pos += 1;
                }
                _ if first => {}
                other => {
                    return Err(Error::Parse(format!(
                        "expected '+' or '-' at byte {pos}, found {:?}",
                        other as char
                    )))
                }
            }
            first = false;
            let (term, next) = parse_term(bytes, pos)?;
            pos = next;
            let (c, i, j) = term;
            result.add_term((i, j), sign * c);
        }
        Ok(result)
    }
}

fn parse_term(b: &[u8], mut pos: usize) -> Result<((BigInt, u32, u32), usize)> {
    let mut coef = BigInt::one();
    let mut i = 0u32;
    let mut j = 0u32;
    let mut saw_factor = false;
    loop {
        if pos >= b.len() {
            break;
        }
        match b[pos] {
            b'0'..=b'9' => {
                let start = pos;
                while pos < b.len() && b[pos].is_ascii_digit() {
                    pos += 1;
                }
                let n: BigInt = std::str::from_utf8(&b[start..pos])
                    .unwrap()
                    .parse()
                    .map_err(|_| Error::Parse("bad integer".into()))?;
                coef *= n;
            }
            v @ (b'x' | b'y') => {
                pos += 1;
                let mut e = 1u32;
                if pos < b.len() && b[pos] == b'^' {
                    pos += 1;
                    let start = pos;
                    while pos < b.len() && b[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if start == pos {
                        return Err(Error::Parse("missing exponent".into()));
                    }
                    e = std::str::from_utf8(&b[start..pos])
                        .unwrap()
                        .parse()
                        .map_err(|_| Error::Parse("bad exponent".into()))?;
                }
                if v == b'x' {
                    i += e;
                } else {
                    j += e;
                }
            }
            other => return Err(Error::Parse(format!("unexpected character {:?}", other as char))),
        }
        saw_factor = true;
        if pos < b.len() && b[pos] == b'*' {
            pos += 1;
            continue;
        }
        if pos < b.len() && matches!(b[pos], b'x' | b'y' | b'0'..=b'9') {
            continue;
        }
        break;
    }
    if !saw_factor {
        return Err(Error::Parse("empty term".into()));
    }
    if coef.is_zero() {
        return Ok(((coef, 0, 0), pos));
    }
    Ok(((coef, i, j), pos))
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_triples().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let triples = Vec::<(u32, u32, String)>::deserialize(d)?;
        BiPoly::from_json_triples(&triples).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_in_display_order() {
        let w3 = BiPoly::from_terms([
            (0, 3, 1),
            (3, 0, 1),
            (1, 1, 4),
            (2, 0, 3),
            (0, 2, 3),
            (1, 0, 2),
            (0, 1, 2),
        ]);
        assert_eq!(w3.to_text(), "x^3 + 3*x^2 + 2*x + 4*x*y + 2*y + 3*y^2 + y^3");
    }

    #[test]
    fn renders_signs_and_constants() {
        assert_eq!(BiPoly::one().to_text(), "1");
        assert_eq!(BiPoly::zero().to_text(), "0");
        let p = BiPoly::from_terms([(2, 0, 1), (0, 2, -1), (0, 0, -3)]);
        assert_eq!(p.to_text(), "x^2 - 3 - y^2");
        assert_eq!(BiPoly::monomial(-1, 1, 0).to_text(), "-x");
    }

    #[test]
    fn parses_rendered_text() {
        let p: BiPoly = "x^2 + 3*x + 3*y + 2*y^2 + y^3".parse().unwrap();
        assert_eq!(p.to_text(), "x^2 + 3*x + 3*y + 2*y^2 + y^3");
        let q: BiPoly = "-3x^2y + 2 - y".parse().unwrap();
        assert_eq!(q, BiPoly::from_terms([(2, 1, -3), (0, 0, 2), (0, 1, -1)]));
        assert!("x +".parse::<BiPoly>().is_err());
        assert!("x ^".parse::<BiPoly>().is_err());
        assert!("z".parse::<BiPoly>().is_err());
    }

    #[test]
    fn json_is_grade_lex() {
        let p: BiPoly = "y^3 + x^2 + 3*x + 3*y + 2*y^2".parse().unwrap();
        assert_eq!(p.to_json(), r#"[[1,0,"3"],[0,1,"3"],[2,0,"1"],[0,2,"2"],[0,3,"1"]]"#);
        let back: BiPoly = serde_json::from_str(&p.to_json()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn latex_rendering() {
        let p: BiPoly = "x^2 + 3*x*y".parse().unwrap();
        assert_eq!(p.to_latex(), "x^{2} + 3xy");
    }
}
