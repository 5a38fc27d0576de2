//! Text grammar for elements, Springer triples and double-coset normal
//! forms.
//!
//! - Word: generator names separated by commas, `1` for the identity.
//! - Generator subset: `∅` (or `{}` or empty) / `S` / comma list.
//! - Springer triple: `[I;a;b]`.
//! - Double-coset normal form: `a * z[I] * b`.

use coxkl_core::coxeter::{CoxeterSystem, Element, GenSet};
use coxkl_core::hat::{HatSystem, OmegaElement};
use coxkl_core::springer::VElement;

use crate::{CliError, Result};

pub fn parse_word(sys: &CoxeterSystem, text: &str) -> Result<Element> {
    let t = text.trim();
    if t.is_empty() || t == "1" {
        return Ok(sys.identity());
    }
    let names: Vec<&str> = t.split(',').map(str::trim).collect();
    Ok(sys.reduce_names(&names)?)
}

pub fn format_word(sys: &CoxeterSystem, x: &Element) -> String {
    sys.format_element(x)
}

pub fn parse_genset(sys: &CoxeterSystem, text: &str) -> Result<GenSet> {
    let t = text.trim().trim_start_matches('{').trim_end_matches('}').trim();
    if t.is_empty() || t == "∅" || t == "0" {
        return Ok(GenSet::EMPTY);
    }
    if t == "S" {
        return Ok(sys.full_set());
    }
    let mut set = GenSet::EMPTY;
    for name in t.split(',') {
        set.insert(sys.generator_index(name.trim())?);
    }
    Ok(set)
}

pub fn format_genset(sys: &CoxeterSystem, set: GenSet) -> String {
    if set.is_empty() {
        return "∅".into();
    }
    if set == sys.full_set() {
        return "S".into();
    }
    set.iter().map(|i| sys.generator_name(i)).collect::<Vec<_>>().join(",")
}

pub fn parse_velement(sys: &CoxeterSystem, text: &str) -> Result<VElement> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| CliError(format!("expected `[I;a;b]`, got `{t}`")))?;
    let parts: Vec<&str> = inner.split(';').collect();
    if parts.len() != 3 {
        return Err(CliError(format!("expected three `;`-separated fields in `{t}`")));
    }
    let i_set = parse_genset(sys, strip_key(parts[0], "I"))?;
    let a = parse_word(sys, strip_key(parts[1], "a"))?;
    let b = parse_word(sys, strip_key(parts[2], "b"))?;
    Ok(VElement::new(sys, i_set, a, b)?)
}

/// Accepts both the bare grammar `[I;a;b]` and the keyed variant
/// `[I={..}; a=..; b=..]`.
fn strip_key<'a>(field: &'a str, key: &str) -> &'a str {
    let f = field.trim();
    if let Some(rest) = f.strip_prefix(key) {
        let r = rest.trim_start();
        if let Some(val) = r.strip_prefix('=') {
            return val.trim();
        }
    }
    f
}

pub fn format_velement(sys: &CoxeterSystem, v: &VElement) -> String {
    format!(
        "[{};{};{}]",
        format_genset(sys, v.i_set),
        format_word(sys, &v.a),
        format_word(sys, &v.b)
    )
}

pub fn parse_omega(hs: &HatSystem, text: &str) -> Result<OmegaElement> {
    let parts: Vec<&str> = text.split('*').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(CliError(format!("expected `a * z[I] * b`, got `{text}`")));
    }
    let a = parse_word(&hs.base, parts[0])?;
    let inner = parts[1]
        .strip_prefix("z[")
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| CliError(format!("expected middle factor `z[I]`, got `{}`", parts[1])))?;
    let i_set = parse_genset(&hs.base, inner)?;
    let b = parse_word(&hs.base, parts[2])?;
    Ok(OmegaElement::new(hs, a, i_set, b)?)
}

pub fn format_omega(hs: &HatSystem, o: &OmegaElement) -> String {
    format!(
        "{} * z[{}] * {}",
        format_word(&hs.base, &o.a),
        format_genset(&hs.base, o.i_set),
        format_word(&hs.base, &o.b)
    )
}
