//! Text forms of mapping class words and curves.
//!
//! ```text
//! word  := term+                      (whitespace separated, applied left to right)
//! term  := gen ('^' int)?
//! gen   := 'TY' | 'T'<i> | 'H'<i> ('[' <a> ']')?
//! curve := 'A' | 'B'<i> | 'G'<i> '[' <a> ']' | 'apply(' word ',' curve ')'
//! ```
//!
//! `H<i>[a]` is the half twist `τ_{i,a}`; plain `H<i>` is `H<i>[-1]`.

use std::sync::Arc;

use ptorus::mcg::{MappingClassGroup, McgError, Twist, TwistGenerator};
use ptorus::surface::CurveOnSurface;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SyntaxError {
    #[error("unknown token {token:?} at position {position}")]
    UnknownToken { token: String, position: usize },
    #[error("index {index} in {token:?} at position {position} is outside 1..={n}")]
    IndexOutOfRange { token: String, position: usize, index: usize, n: usize },
    #[error("malformed power in {token:?} at position {position}")]
    MalformedPower { token: String, position: usize },
    #[error("empty word")]
    EmptyWord,
    #[error("malformed curve {0:?}")]
    MalformedCurve(String),
}

fn parse_index(digits: &str, token: &str, position: usize, n: usize) -> Result<usize, SyntaxError> {
    let index: usize =
        digits.parse().map_err(|_| SyntaxError::UnknownToken { token: token.to_string(), position })?;
    if index == 0 || index > n {
        return Err(SyntaxError::IndexOutOfRange { token: token.to_string(), position, index, n });
    }
    Ok(index)
}

/// Parses a word for the `n`-punctured torus. Positions in errors count
/// terms from 1.
pub fn parse_word(text: &str, n: usize) -> Result<Vec<TwistGenerator>, SyntaxError> {
    let mut out = Vec::new();
    for (k, token) in text.split_whitespace().enumerate() {
        let position = k + 1;
        if token == "id" {
            continue;
        }
        let unknown = || SyntaxError::UnknownToken { token: token.to_string(), position };
        let (body, power) = match token.split_once('^') {
            Some((b, p)) => {
                let p: i64 =
                    p.parse().map_err(|_| SyntaxError::MalformedPower { token: token.to_string(), position })?;
                if p == 0 {
                    return Err(SyntaxError::MalformedPower { token: token.to_string(), position });
                }
                (b, p)
            }
            None => (token, 1),
        };
        if body == "TY" {
            out.push(TwistGenerator::new(Twist::Y, power));
        } else if let Some(rest) = body.strip_prefix('T') {
            out.push(TwistGenerator::new(Twist::T(parse_index(rest, token, position, n)?), power));
        } else if let Some(rest) = body.strip_prefix('H') {
            let (digits, degree) = match rest.split_once('[') {
                Some((d, a)) => {
                    let a = a.strip_suffix(']').ok_or_else(unknown)?;
                    (d, a.parse::<i64>().map_err(|_| unknown())?)
                }
                None => (rest, -1),
            };
            let i = parse_index(digits, token, position, n)?;
            if degree == -1 {
                out.push(TwistGenerator::new(Twist::H(i), power));
            } else {
                let unit = MappingClassGroup::half_twist_word(i, degree, power.signum());
                for _ in 0..power.unsigned_abs() {
                    out.extend(unit.iter().copied());
                }
            }
        } else {
            return Err(unknown());
        }
    }
    if text.trim().is_empty() {
        return Err(SyntaxError::EmptyWord);
    }
    Ok(out)
}

/// Canonical text of a word; `id` when empty.
pub fn format_word(word: &[TwistGenerator]) -> String {
    if word.is_empty() {
        return "id".to_string();
    }
    word.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveExpr {
    A,
    B(usize),
    G(usize, i64),
    Apply(Vec<TwistGenerator>, Box<CurveExpr>),
}

pub fn parse_curve(text: &str, n: usize) -> Result<CurveExpr, SyntaxError> {
    let t = text.trim();
    let bad = || SyntaxError::MalformedCurve(t.to_string());
    if let Some(inner) = t.strip_prefix("apply(") {
        let inner = inner.strip_suffix(')').ok_or_else(bad)?;
        let mut depth = 0i32;
        let comma = inner
            .char_indices()
            .find(|&(_, c)| {
                match c {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    _ => {}
                }
                c == ',' && depth == 0
            })
            .map(|(i, _)| i)
            .ok_or_else(bad)?;
        let word = parse_word(&inner[..comma], n)?;
        let curve = parse_curve(&inner[comma + 1..], n)?;
        return Ok(CurveExpr::Apply(word, Box::new(curve)));
    }
    if t == "A" {
        return Ok(CurveExpr::A);
    }
    if let Some(rest) = t.strip_prefix('B') {
        return Ok(CurveExpr::B(parse_index(rest, t, 1, n)?));
    }
    if let Some(rest) = t.strip_prefix('G') {
        let (digits, a) = rest.split_once('[').ok_or_else(bad)?;
        let a: i64 = a.strip_suffix(']').ok_or_else(bad)?.parse().map_err(|_| bad())?;
        return Ok(CurveExpr::G(parse_index(digits, t, 1, n)?, a));
    }
    Err(bad())
}

pub fn build_curve(
    group: &Arc<MappingClassGroup>,
    expr: &CurveExpr,
    max_iterations: usize,
) -> Result<CurveOnSurface, McgError> {
    let m = group.model();
    Ok(match expr {
        CurveExpr::A => m.curve_a(),
        CurveExpr::B(i) => m.curve_b(*i)?,
        CurveExpr::G(i, a) => group.derived_arc(*i, *a, max_iterations)?,
        CurveExpr::Apply(word, inner) => {
            let x = build_curve(group, inner, max_iterations)?;
            group.class(word.clone())?.act(&x, max_iterations)?
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_words() {
        let w = parse_word("T1 T2^-1", 3).unwrap();
        assert_eq!(w, vec![TwistGenerator::new(Twist::T(1), 1), TwistGenerator::new(Twist::T(2), -1)]);
        assert_eq!(format_word(&w), "T1 T2^-1");
        assert_eq!(parse_word("id", 3).unwrap(), vec![]);
    }

    #[test]
    fn bracketed_half_twist_expands() {
        let w = parse_word("H3[0]", 3).unwrap();
        assert_eq!(w, MappingClassGroup::half_twist_word(3, 0, 1));
        assert_eq!(format_word(&w), "T3^-1 H3 T3");
        assert_eq!(parse_word("H2[-1]", 3).unwrap(), parse_word("H2", 3).unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_word("T1 X", 3),
            Err(SyntaxError::UnknownToken { token: "X".into(), position: 2 })
        );
        assert!(matches!(parse_word("T1 T4", 3), Err(SyntaxError::IndexOutOfRange { position: 2, index: 4, .. })));
        assert!(matches!(parse_word("H1^x", 3), Err(SyntaxError::MalformedPower { position: 1, .. })));
        assert!(matches!(parse_word("T1^0", 3), Err(SyntaxError::MalformedPower { .. })));
        assert_eq!(parse_word("  ", 3), Err(SyntaxError::EmptyWord));
    }

    #[test]
    fn curves() {
        assert_eq!(parse_curve("A", 3).unwrap(), CurveExpr::A);
        assert_eq!(parse_curve("G2[-1]", 3).unwrap(), CurveExpr::G(2, -1));
        let nested = parse_curve("apply(H1, apply(T2 T1, B1))", 3).unwrap();
        let CurveExpr::Apply(w, inner) = nested else { panic!() };
        assert_eq!(format_word(&w), "H1");
        assert!(matches!(*inner, CurveExpr::Apply(_, _)));
        assert!(parse_curve("B4", 3).is_err());
        assert!(parse_curve("apply(H1 B1)", 3).is_err());
    }
}
