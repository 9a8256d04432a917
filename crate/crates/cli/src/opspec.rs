//! Operator specs: `+`-separated terms `[scalar*]name(args)` with
//!
//! - `ad(<element literal>)`
//! - `dmu(<one rational per generator>)`, separated by spaces or commas
//! - `dt(<index label>)`, an outer `∂_{t_p}`
//! - `pstar(<index label>)`, the bare grading operator (not a derivation)
//!
//! Parentheses delimit the argument because element literals contain `+`.

use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use contact_lie::derivations::{ad, d_mu, outer_partial_t, partial_star_operator, HomGamma, LinearOperator};
use contact_lie::literal::parse_element;
use contact_lie::rational::{parse_q, q};
use contact_lie::{AlgebraConfig, Q};

/// Splits on `sep` outside parentheses and brackets.
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_term(cfg: &Arc<AlgebraConfig>, term: &str) -> Result<(Q, LinearOperator)> {
    let term = term.trim();
    let open = term.find('(').ok_or_else(|| anyhow!("expected `name(...)` in {term:?}"))?;
    let inner = term[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| anyhow!("missing closing `)` in {term:?}"))?;
    let head = term[..open].trim();
    let (scalar, name) = match head.rsplit_once('*') {
        Some((c, n)) => {
            let c = c.trim();
            (parse_q(c).ok_or_else(|| anyhow!("bad scalar {c:?}"))?, n.trim())
        }
        None => (q(1), head),
    };
    let sh = cfg.shape();
    let op = match name {
        "ad" => ad(&parse_element(cfg, inner).with_context(|| format!("in ad({inner})"))?),
        "dmu" => {
            let values = inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| parse_q(t).ok_or_else(|| anyhow!("bad rational {t:?} in dmu")))
                .collect::<Result<Vec<_>>>()?;
            d_mu(&HomGamma::new(cfg, values)?)
        }
        "dt" => outer_partial_t(cfg, sh.parse_label(inner)?)?,
        "pstar" => partial_star_operator(cfg, sh.parse_label(inner)?)?,
        _ => bail!("unknown operator {name:?} (expected ad, dmu, dt or pstar)"),
    };
    Ok((scalar, op))
}

pub fn parse_operator(cfg: &Arc<AlgebraConfig>, spec: &str) -> Result<LinearOperator> {
    if spec.trim().is_empty() {
        bail!("empty operator spec");
    }
    let parts = split_top(spec, '+')
        .into_iter()
        .map(|t| parse_term(cfg, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(LinearOperator::combination(cfg, &parts))
}
