//! Bit-stable rendering of result records as CSV or JSON.
//!
//! CSV follows RFC 4180 quoting; integers print in decimal, rationals as
//! `num/den`, and reals with 12 significant digits. JSON output is one
//! top-level object carrying `schema_version`, the echoed `parameters`, and
//! the `records` array, with keys in sorted order. Byte-identical reruns
//! are part of the contract, so nothing here may depend on worker count,
//! wall time, or hash iteration order.

use crate::arith::PlaceSet;
use crate::machinery::{DescentReport, InequalityReport, WitnessVector};
use crate::search::{GcdScanRecord, GpfRecord, Remark2Report, TripleHit, UncheckedPair};
use crate::sunits::SUnit;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};
use std::io::Write;
use std::path::Path;

pub const SCHEMA_VERSION: u32 = 1;

/// 12 significant digits, scientific notation.
pub fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}

/// `num/den`, collapsing to plain decimal when the denominator is 1.
pub fn rational_str(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `p1^e1*p2^e2*...` with unit exponents elided; `1` for the empty product.
pub fn factorization_str(pairs: &[(u64, u32)]) -> String {
    if pairs.is_empty() {
        return "1".to_string();
    }
    pairs
        .iter()
        .map(|&(p, e)| {
            if e == 1 {
                p.to_string()
            } else {
                format!("{p}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Header plus rows, RFC 4180, trailing newline.
pub fn csv_document(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        debug_assert_eq!(row.len(), header.len());
        let fields: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

/// The JSON envelope shared by every command.
pub fn json_document(parameters: Value, body: Vec<(&str, Value)>) -> String {
    let mut doc = serde_json::Map::new();
    doc.insert("schema_version".into(), json!(SCHEMA_VERSION));
    doc.insert("parameters".into(), parameters);
    for (key, value) in body {
        doc.insert(key.into(), value);
    }
    let mut rendered = serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable");
    rendered.push('\n');
    rendered
}

/// Write atomically: temp file in the target directory, then rename.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let file_name = path
        .file_name()
        .ok_or_else(|| std::io::Error::other(format!("not a file path: {}", path.display())))?;
    let tmp_name = format!(
        ".{}.tmp-{}",
        file_name.to_string_lossy(),
        std::process::id()
    );
    let tmp = match dir {
        Some(d) => d.join(&tmp_name),
        None => std::path::PathBuf::from(&tmp_name),
    };
    let result = (|| {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
        std::fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = std::fs::remove_file(&tmp);
    }
    result
}

// ---- Triple hits ----

pub const HIT_HEADER: [&str; 7] = [
    "a",
    "b",
    "c",
    "u",
    "v",
    "u_factorization",
    "v_factorization",
];

pub fn hit_row(hit: &TripleHit, s: &PlaceSet) -> Vec<String> {
    vec![
        hit.triple.a().to_string(),
        hit.triple.b().to_string(),
        hit.triple.c().to_string(),
        hit.u.value().to_string(),
        hit.v.value().to_string(),
        factorization_str(&hit.u.factor_pairs(s)),
        factorization_str(&hit.v.factor_pairs(s)),
    ]
}

pub fn hit_json(hit: &TripleHit, s: &PlaceSet) -> Value {
    json!({
        "a": hit.triple.a(),
        "b": hit.triple.b(),
        "c": hit.triple.c(),
        "u": hit.u.value(),
        "v": hit.v.value(),
        "u_factorization": factorization_str(&hit.u.factor_pairs(s)),
        "v_factorization": factorization_str(&hit.v.factor_pairs(s)),
    })
}

pub fn unchecked_json(pair: &UncheckedPair) -> Value {
    json!({
        "u": pair.u,
        "v": pair.v,
        "g": pair.g,
        "unresolved": pair.unresolved,
    })
}

// ---- Greatest-prime-factor table ----

pub const GPF_HEADER: [&str; 7] = [
    "a",
    "mode",
    "best_b",
    "best_c",
    "product",
    "gpf",
    "unresolved_pairs",
];

pub fn gpf_row(r: &GpfRecord) -> Vec<String> {
    vec![
        r.a.to_string(),
        r.mode.to_string(),
        r.best_b.to_string(),
        r.best_c.to_string(),
        r.product.to_string(),
        r.gpf.to_string(),
        r.unresolved_pairs.to_string(),
    ]
}

pub fn gpf_json(r: &GpfRecord) -> Value {
    json!({
        "a": r.a,
        "mode": r.mode.to_string(),
        "best_b": r.best_b,
        "best_c": r.best_c,
        "product": r.product,
        "gpf": r.gpf,
        "unresolved_pairs": r.unresolved_pairs,
    })
}

// ---- gcd scan ----

pub const SCAN_HEADER: [&str; 5] = ["u", "v", "g", "exponent", "independent"];

pub fn scan_row(r: &GcdScanRecord) -> Vec<String> {
    vec![
        r.u.to_string(),
        r.v.to_string(),
        r.g.to_string(),
        sig12(r.exponent),
        r.independent.to_string(),
    ]
}

pub fn scan_json(r: &GcdScanRecord) -> Value {
    json!({
        "u": r.u,
        "v": r.v,
        "g": r.g,
        "exponent": r.exponent,
        "independent": r.independent,
    })
}

// ---- smooth enumeration ----

pub const SMOOTH_HEADER: [&str; 2] = ["value", "factorization"];

pub fn smooth_row(u: &SUnit, s: &PlaceSet) -> Vec<String> {
    vec![u.value().to_string(), factorization_str(&u.factor_pairs(s))]
}

pub fn smooth_json(u: &SUnit, s: &PlaceSet) -> Value {
    json!({
        "value": u.value(),
        "factorization": factorization_str(&u.factor_pairs(s)),
    })
}

// ---- verify report ----

fn rationals(values: &[BigRational]) -> Value {
    Value::Array(
        values
            .iter()
            .map(|r| Value::String(rational_str(r)))
            .collect(),
    )
}

fn integers(values: &[BigInt]) -> Value {
    Value::Array(
        values
            .iter()
            .map(|x| Value::String(x.to_string()))
            .collect(),
    )
}

/// The single verify record: witness data, exact check results, measured
/// ratios, descent, and the product identity report.
pub fn verify_json(
    s: &PlaceSet,
    witness: &WitnessVector,
    report: &InequalityReport,
    descent: &DescentReport,
    remark2: &Remark2Report,
) -> Value {
    let hit = witness.hit();
    let chain = descent.chain.as_ref().map(|ch| {
        json!({
            "common_base": ch.common_base,
            "power_gcd": ch.power_gcd.to_string(),
            "base_ratio": ch.base_ratio,
            "a_power": ch.a_power,
            "u_at_most_a_squared": ch.u_at_most_a_squared,
        })
    });
    let descent_value = json!({
        "g": descent.g,
        "a_divides_g": descent.a_divides_g,
        "relation": descent.relation.map(|r| json!({"p": r.p, "q": r.q})),
        "chain": chain,
        "u_is_square_of_v": descent.u_is_square_of_v,
    });
    let identity_value = json!({
        "r": remark2.r.to_string(),
        "s": remark2.s.to_string(),
        "t": remark2.t.to_string(),
        "identity_residual": remark2.identity_residual.to_string(),
        "dominance_ratio": remark2.dominance_ratio,
    });
    json!({
        "a": witness.triple().a(),
        "b": witness.triple().b(),
        "c": witness.triple().c(),
        "u": hit.u.value(),
        "v": hit.v.value(),
        "u_factorization": factorization_str(&hit.u.factor_pairs(s)),
        "v_factorization": factorization_str(&hit.v.factor_pairs(s)),
        "truncation": report.truncation,
        "dimension": witness.dimension(),
        "y1": rational_str(witness.y1()),
        "y2": rational_str(witness.y2()),
        "x": integers(witness.x()),
        "l1_infinity": report.archimedean_values[0].to_string(),
        "l2_infinity": report.archimedean_values[1].to_string(),
        "truncation_residuals": rationals(&report.truncation_residuals),
        "archimedean_ratios": rationals(&report.archimedean_ratios),
        "v_power_finite_product": rational_str(&report.v_power_finite_product),
        "y_finite_products": rationals(&report.y_finite_products),
        "y_full_products": rationals(&report.y_full_products),
        "y_full_ratios": rationals(&report.y_full_ratios),
        "sigma_products": rationals(&report.sigma_products),
        "full_product": rational_str(&report.full_product),
        "full_product_reference": rational_str(&report.full_product_reference),
        "full_product_ratio": rational_str(&report.full_product_ratio),
        "chain_mid": rational_str(&report.chain_mid),
        "chain_end": rational_str(&report.chain_end),
        "height": report.height.to_string(),
        "height_cap": report.height_cap.to_string(),
        "height_power_cap": report.height_power_cap.to_string(),
        "measured_exponent": report.measured_exponent,
        "exponent_check": report.exponent_check,
        "dimension_exponent": report.dimension_exponent,
        "subspace_delta": report.subspace_delta,
        "checks": report.checks.iter().map(|c| json!({"name": c.name, "pass": c.pass})).collect::<Vec<_>>(),
        "descent": descent_value,
        "product_identity": identity_value,
    })
}

/// Flatten the verify record into `field,value` CSV rows, depth-first in
/// key order, arrays indexed.
pub fn flatten_for_csv(value: &Value) -> Vec<Vec<String>> {
    let mut rows = Vec::new();
    fn walk(prefix: &str, v: &Value, rows: &mut Vec<Vec<String>>) {
        match v {
            Value::Object(map) => {
                for (k, inner) in map {
                    let key = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{prefix}.{k}")
                    };
                    walk(&key, inner, rows);
                }
            }
            Value::Array(items) => {
                for (i, inner) in items.iter().enumerate() {
                    walk(&format!("{prefix}[{i}]"), inner, rows);
                }
            }
            Value::String(s) => rows.push(vec![prefix.to_string(), s.clone()]),
            other => rows.push(vec![prefix.to_string(), other.to_string()]),
        }
    }
    walk("", value, &mut rows);
    rows
}
