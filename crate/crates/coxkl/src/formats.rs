//! File formats: Coxeter system specs, hat configuration, sparse
//! polynomial JSON, JSON-lines table export and the on-disk memo cache.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};
use std::path::Path;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use coxkl_core::coxeter::{Bond, CoxeterSystem};
use coxkl_core::hat::HatConfig;
use coxkl_core::kl::{PolyTable, TableKind};
use coxkl_core::laurent::{LaurentPoly, QPoly};

use crate::grammar;
use crate::{CliError, Result};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const CACHE_FORMAT_VERSION: &str = "1";

// ---------------------------------------------------------------- systems

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SystemSpec {
    pub generators: Vec<String>,
    pub matrix: Vec<Vec<serde_json::Value>>,
}

fn bond_from_json(v: &serde_json::Value) -> Result<Bond> {
    match v {
        serde_json::Value::Number(n) => {
            let m = n
                .as_u64()
                .ok_or_else(|| CliError(format!("invalid bond order {n}")))?;
            Ok(Bond::Finite(m as u32))
        }
        serde_json::Value::String(s) if s == "inf" => Ok(Bond::Infinite),
        other => Err(CliError(format!("invalid bond entry {other}"))),
    }
}

pub fn system_from_spec(spec: &SystemSpec) -> Result<CoxeterSystem> {
    let mut bonds = Vec::with_capacity(spec.matrix.len());
    for row in &spec.matrix {
        let mut r = Vec::with_capacity(row.len());
        for v in row {
            r.push(bond_from_json(v)?);
        }
        bonds.push(r);
    }
    Ok(CoxeterSystem::new(spec.generators.clone(), bonds)?)
}

pub fn load_system(path: &Path) -> Result<CoxeterSystem> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError(format!("cannot read {}: {e}", path.display())))?;
    let spec: SystemSpec = serde_json::from_str(&text)?;
    system_from_spec(&spec)
}

// ------------------------------------------------------------- hat config

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct HatSpec {
    #[serde(default)]
    pub hat_bonds: BTreeMap<String, serde_json::Value>,
    #[serde(default)]
    pub theta_bonds: Vec<(String, String, serde_json::Value)>,
}

pub fn hat_config_from_spec(spec: &HatSpec) -> Result<HatConfig> {
    let mut cfg = HatConfig::default();
    for (name, v) in &spec.hat_bonds {
        cfg.hat_bonds.insert(name.clone(), bond_from_json(v)?);
    }
    for (r, s, v) in &spec.theta_bonds {
        cfg.theta_bonds.push((r.clone(), s.clone(), bond_from_json(v)?));
    }
    Ok(cfg)
}

/// Loads a hat configuration; the literal argument `default` (or an
/// absent flag upstream) selects the default bonds.
pub fn load_hat_config(arg: Option<&str>) -> Result<HatConfig> {
    match arg {
        None => Ok(HatConfig::default()),
        Some("default") => Ok(HatConfig::default()),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError(format!("cannot read {path}: {e}")))?;
            let spec: HatSpec = serde_json::from_str(&text)?;
            hat_config_from_spec(&spec)
        }
    }
}

// ------------------------------------------------------------ polynomials

fn bigint_json(c: &BigInt) -> serde_json::Value {
    if let Ok(v) = i64::try_from(c.clone()) {
        serde_json::Value::from(v)
    } else {
        serde_json::Value::from(c.to_string())
    }
}

pub fn laurent_u_json(p: &LaurentPoly) -> serde_json::Value {
    let mut map = serde_json::Map::new();
    for (e, c) in p.terms() {
        map.insert(e.to_string(), bigint_json(c));
    }
    serde_json::json!({ "u": map })
}

pub fn qpoly_json(p: &QPoly) -> serde_json::Value {
    let mut map = serde_json::Map::new();
    for (e, c) in p.terms() {
        map.insert(e.to_string(), bigint_json(c));
    }
    serde_json::json!({ "q": map })
}

/// The `abar`-basis view of a Laurent polynomial, when it lies in
/// `Z[abar]`; exponent -> coefficient like the `u` form.
pub fn laurent_abar_json(p: &LaurentPoly) -> Option<serde_json::Value> {
    let coeffs = p.abar_coeffs().ok()?;
    let mut map = serde_json::Map::new();
    for (e, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            map.insert(e.to_string(), bigint_json(c));
        }
    }
    Some(serde_json::json!({ "abar": map }))
}

/// Combined emission for R-type families: both the `u` form and, when it
/// exists, the `abar` form.
pub fn laurent_full_json(p: &LaurentPoly) -> serde_json::Value {
    let mut out = laurent_u_json(p);
    if let Some(ab) = laurent_abar_json(p) {
        out.as_object_mut()
            .unwrap()
            .insert("abar".into(), ab.get("abar").unwrap().clone());
    }
    out
}

// ---------------------------------------------------------------- digests

/// Hex SHA-256 digest of a canonical description of the run
/// configuration (system matrix, generator names, hat bonds).
pub fn config_digest(parts: &[String]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update(p.as_bytes());
        h.update([0u8]);
    }
    let out = h.finalize();
    out.iter().take(16).map(|b| format!("{b:02x}")).collect()
}

pub fn system_digest(sys: &CoxeterSystem) -> String {
    let mut parts: Vec<String> = sys.generator_names().to_vec();
    for i in 0..sys.rank() {
        for j in 0..sys.rank() {
            parts.push(sys.bond(i, j).to_string());
        }
    }
    config_digest(&parts)
}

// ----------------------------------------------------------- table export

/// One JSON line per table entry: `{x, y, kind, poly}`.
pub fn export_table(sys: &CoxeterSystem, tbl: &PolyTable, out: &mut dyn Write) -> Result<()> {
    for ((x, y), p) in tbl.iter() {
        let line = serde_json::json!({
            "x": grammar::format_word(sys, x),
            "y": grammar::format_word(sys, y),
            "kind": tbl.kind.as_str(),
            "poly": laurent_full_json(p),
        });
        writeln!(out, "{line}")?;
    }
    Ok(())
}

// ------------------------------------------------------------------ cache

#[derive(Debug, Serialize, Deserialize)]
struct CacheHeader {
    version: String,
    kind: String,
    digest: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct CacheEntry {
    x: String,
    y: String,
    u: BTreeMap<String, serde_json::Value>,
}

fn bigint_from_json(v: &serde_json::Value) -> Result<BigInt> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| CliError(format!("invalid coefficient {n}"))),
        serde_json::Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|_| CliError(format!("invalid coefficient {s}"))),
        other => Err(CliError(format!("invalid coefficient {other}"))),
    }
}

/// Loads a JSON-lines memo cache into a table; a version/kind/digest
/// mismatch is reported as a config error rather than silently ignored.
pub fn load_cache(path: &Path, sys: &CoxeterSystem, tbl: &mut PolyTable) -> Result<()> {
    let file = std::fs::File::open(path)
        .map_err(|e| CliError(format!("cannot read {}: {e}", path.display())))?;
    let mut lines = std::io::BufReader::new(file).lines();
    let header_line = lines
        .next()
        .ok_or_else(|| CliError("empty cache file".into()))??;
    let header: CacheHeader = serde_json::from_str(&header_line)?;
    if header.version != CACHE_FORMAT_VERSION {
        return Err(CliError(format!("unsupported cache version {}", header.version)));
    }
    if header.kind != tbl.kind.as_str() {
        return Err(CliError(format!(
            "cache holds {} entries, expected {}",
            header.kind,
            tbl.kind.as_str()
        )));
    }
    if header.digest != system_digest(sys) {
        return Err(CliError("cache was built for a different system".into()));
    }
    for line in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let entry: CacheEntry = serde_json::from_str(&line)?;
        let x = grammar::parse_word(sys, &entry.x)?;
        let y = grammar::parse_word(sys, &entry.y)?;
        let mut p = LaurentPoly::zero();
        for (e, c) in &entry.u {
            let exp: i64 = e
                .parse()
                .map_err(|_| CliError(format!("invalid exponent {e}")))?;
            p.add_term(exp, bigint_from_json(c)?);
        }
        tbl.insert(x, y, p);
    }
    Ok(())
}

pub fn save_cache(path: &Path, sys: &CoxeterSystem, tbl: &PolyTable) -> Result<()> {
    let mut out = Vec::new();
    let header = CacheHeader {
        version: CACHE_FORMAT_VERSION.into(),
        kind: tbl.kind.as_str().into(),
        digest: system_digest(sys),
    };
    writeln!(out, "{}", serde_json::to_string(&header)?)?;
    for ((x, y), p) in tbl.iter() {
        let mut u = BTreeMap::new();
        for (e, c) in p.terms() {
            u.insert(e.to_string(), bigint_json(c));
        }
        let entry = CacheEntry {
            x: grammar::format_word(sys, x),
            y: grammar::format_word(sys, y),
            u,
        };
        writeln!(out, "{}", serde_json::to_string(&entry)?)?;
    }
    std::fs::write(path, out)
        .map_err(|e| CliError(format!("cannot write {}: {e}", path.display())))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use coxkl_core::kl::r_poly;

    fn a2() -> CoxeterSystem {
        let spec: SystemSpec = serde_json::from_str(
            r#"{"generators": ["s1", "s2"], "matrix": [[1, 3], [3, 1]]}"#,
        )
        .unwrap();
        system_from_spec(&spec).unwrap()
    }

    #[test]
    fn bond_parsing() {
        let spec: SystemSpec = serde_json::from_str(
            r#"{"generators": ["a", "b"], "matrix": [[1, "inf"], ["inf", 1]]}"#,
        )
        .unwrap();
        let sys = system_from_spec(&spec).unwrap();
        assert_eq!(sys.bond(0, 1), Bond::Infinite);
        let bad: SystemSpec = serde_json::from_str(
            r#"{"generators": ["a"], "matrix": [["wat"]]}"#,
        )
        .unwrap();
        assert!(system_from_spec(&bad).is_err());
    }

    #[test]
    fn hat_spec_parsing() {
        let spec: HatSpec = serde_json::from_str(
            r#"{"hat_bonds": {"s1": "inf"}, "theta_bonds": [["s1", "s2", 3]]}"#,
        )
        .unwrap();
        let cfg = hat_config_from_spec(&spec).unwrap();
        assert_eq!(cfg.hat_bonds["s1"], Bond::Infinite);
        assert_eq!(cfg.theta_bonds, vec![("s1".into(), "s2".into(), Bond::Finite(3))]);
        assert!(load_hat_config(None).unwrap().hat_bonds.is_empty());
    }

    #[test]
    fn polynomial_json_forms() {
        let p = LaurentPoly::abar(); // u^{-1} - u
        let j = laurent_full_json(&p);
        assert_eq!(j["u"]["-1"], 1);
        assert_eq!(j["u"]["1"], -1);
        assert_eq!(j["abar"]["1"], 1);
        // u itself has no abar form
        assert!(laurent_abar_json(&LaurentPoly::u_pow(1)).is_none());
    }

    #[test]
    fn cache_roundtrip_and_mismatch() {
        let sys = a2();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.jsonl");

        let mut tbl = PolyTable::new(TableKind::RTilde);
        let x = sys.identity();
        let y = grammar::parse_word(&sys, "s1,s2,s1").unwrap();
        let p = r_poly(&sys, &mut tbl, &x, &y).unwrap();
        save_cache(&path, &sys, &tbl).unwrap();

        let mut back = PolyTable::new(TableKind::RTilde);
        load_cache(&path, &sys, &mut back).unwrap();
        assert_eq!(back.get(&x, &y), Some(&p));
        assert_eq!(back.iter().count(), tbl.iter().count());

        // wrong kind and wrong system are both rejected
        let mut wrong_kind = PolyTable::new(TableKind::P);
        assert!(load_cache(&path, &sys, &mut wrong_kind).is_err());
        let other = CoxeterSystem::new(
            vec!["s".into()],
            vec![vec![Bond::Finite(1)]],
        )
        .unwrap();
        let mut wrong_sys = PolyTable::new(TableKind::RTilde);
        assert!(load_cache(&path, &other, &mut wrong_sys).is_err());
    }

    #[test]
    fn digest_is_stable_and_sensitive() {
        let sys = a2();
        assert_eq!(system_digest(&sys), system_digest(&a2()));
        assert_eq!(system_digest(&sys).len(), 32);
        let b2 = CoxeterSystem::new(
            vec!["s1".into(), "s2".into()],
            vec![vec![Bond::Finite(1), Bond::Finite(4)], vec![Bond::Finite(4), Bond::Finite(1)]],
        )
        .unwrap();
        assert_ne!(system_digest(&sys), system_digest(&b2));
    }
}

/// Fresh classical table with an optional preloaded cache.
pub fn table_with_cache(
    sys: &CoxeterSystem,
    kind: TableKind,
    cache: Option<&Path>,
) -> Result<PolyTable> {
    let mut tbl = PolyTable::new(kind);
    if let Some(path) = cache {
        if path.exists() {
            load_cache(path, sys, &mut tbl)?;
        }
    }
    Ok(tbl)
}
