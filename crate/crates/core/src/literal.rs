//! Text form of basis indices and elements.
//!
//! A term is `coeff*x[α]t[i⃗]` with α and i⃗ in slot order; the `t[...]` part
//! is omitted when i⃗ = 0. Terms are joined by ` + ` and the zero element is
//! written `0`.

use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{AlgebraElement, BasisIndex};
use crate::config::{AlgebraConfig, ExponentVector};
use crate::error::{Error, Result};
use crate::gamma::format_vector;
use crate::rational::{format_q, parse_q, q, Q};

pub fn format_basis(idx: &BasisIndex) -> String {
    let mut s = format!("x{}", format_vector(idx.alpha.vector()));
    if !idx.exps.is_zero() {
        let parts: Vec<String> = idx.exps.entries().iter().map(|e| e.to_string()).collect();
        s.push_str(&format!("t[{}]", parts.join(",")));
    }
    s
}

pub fn format_term(idx: &BasisIndex, c: &Q) -> String {
    format!("{}*{}", format_q(c), format_basis(idx))
}

pub fn format_element(u: &AlgebraElement) -> String {
    if u.is_zero() {
        return "0".to_string();
    }
    let parts: Vec<String> = u.terms().map(|(idx, c)| format_term(idx, c)).collect();
    parts.join(" + ")
}

fn bracket_list(s: &str, head: char) -> Result<(&str, &str)> {
    let rest = s
        .strip_prefix(head)
        .and_then(|r| r.trim_start().strip_prefix('['))
        .ok_or_else(|| Error::parse(0, format!("expected `{head}[` in {s:?}")))?;
    let close = rest
        .find(']')
        .ok_or_else(|| Error::parse(0, format!("unclosed `[` in {s:?}")))?;
    Ok((&rest[..close], rest[close + 1..].trim_start()))
}

/// Parses `x[...]` optionally followed by `t[...]`, validating membership in Γ
/// and the exponent support.
pub fn parse_basis(cfg: &AlgebraConfig, s: &str) -> Result<BasisIndex> {
    let s = s.trim();
    let (xs, rest) = bracket_list(s, 'x')?;
    let alpha: Vec<Q> = xs
        .split(',')
        .map(parse_q)
        .collect::<Option<_>>()
        .ok_or_else(|| Error::parse(0, format!("bad rational in x[{xs}]")))?;
    if alpha.len() != cfg.dim() {
        return Err(Error::Dimension {
            expected: cfg.dim(),
            got: alpha.len(),
        });
    }
    let alpha = cfg
        .gamma()
        .member(&alpha)
        .ok_or_else(|| Error::NotMember(format_vector(&alpha)))?;
    let exps = if rest.is_empty() {
        cfg.zero_exps()
    } else {
        let (ts, tail) = bracket_list(rest, 't')?;
        if !tail.is_empty() {
            return Err(Error::parse(0, format!("trailing text {tail:?}")));
        }
        let e: Vec<u32> = ts
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::parse(0, format!("bad exponent in t[{ts}]")))?;
        if e.len() != cfg.dim() {
            return Err(Error::Dimension {
                expected: cfg.dim(),
                got: e.len(),
            });
        }
        let e = ExponentVector::from_slots(e);
        cfg.check_exponents(&e)?;
        e
    };
    Ok(BasisIndex::new(alpha, exps))
}

/// Splits on `+` outside square brackets.
fn split_terms(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0usize, 0usize);
    for (k, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            '+' if depth == 0 && !s[start..k].trim().is_empty() => {
                out.push(&s[start..k]);
                start = k + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Parses a single `coeff*basis` term; a bare basis literal has coefficient 1.
pub fn parse_term(cfg: &AlgebraConfig, s: &str) -> Result<(BasisIndex, Q)> {
    let s = s.trim();
    match s.split_once('*') {
        Some((c, b)) => {
            let c = parse_q(c).ok_or_else(|| Error::parse(0, format!("bad coefficient {c:?}")))?;
            Ok((parse_basis(cfg, b)?, c))
        }
        None => Ok((parse_basis(cfg, s)?, q(1))),
    }
}

pub fn parse_element(cfg: &Arc<AlgebraConfig>, s: &str) -> Result<AlgebraElement> {
    let s = s.trim();
    let mut out = AlgebraElement::zero(cfg);
    if s == "0" {
        return Ok(out);
    }
    if s.is_empty() {
        return Err(Error::parse(0, "empty element literal"));
    }
    for t in split_terms(s) {
        let (idx, c) = parse_term(cfg, t)?;
        if !c.is_zero() {
            out.add_term(idx, c);
        }
    }
    Ok(out)
}
