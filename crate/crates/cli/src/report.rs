//! JSON fragments for each computation and a plain-text renderer over them.
//! `serde_json::Map` keeps keys sorted, so output is canonical.

use serde_json::{json, Map, Value};

use trisect_core::charclass::{SpinVerdict, W2Representative};
use trisect_core::homology::{HomologyResult, IntersectionForm};
use trisect_core::surface::{PairingConventions, ValidationReport};
use trisect_core::{AbelianGroup, SurfaceSignature};

use crate::input::{int, matrix_json, rows_json};

pub fn signature(sig: &SurfaceSignature) -> Value {
    json!({
        "g": sig.g(),
        "p": sig.p(),
        "b": sig.b(),
        "l": sig.l(),
        "n": sig.n(),
        "curves_per_family": sig.curves(),
    })
}

pub fn conventions(sig: &SurfaceSignature) -> Value {
    let c = PairingConventions::new(sig);
    json!({
        "S": matrix_json(&c.s),
        "J": matrix_json(&c.j),
        "R": matrix_json(&c.r),
        "bases": "H1(Sigma): e_1..e_n, n = 2g+b-1, handle pairs (e_{2i-1}, e_{2i}) then b-1 boundary classes; H1(Sigma, dSigma): arcs f_1..f_n with <f_i, e_j> = delta_ij",
        "curve_pairing": "<x, y> = x^T J y with J = S^T - S, so <e_{2i-1}, e_{2i}> = 1",
        "arc_pairing": "<a, x> = a^T x and <x, a> = -a^T x",
        "q_matrices": "Q_mu_nu[i][j] = <mu_i, nu_j>; Q_a_nu = -(Q_nu_a)^T",
        "phi": "Phi(x, y) = -<x', y> where x = x' + x'', x' in L_alpha, x'' in L_beta",
        "linking_y": "[Q_gamma_beta | Q_gamma_a] R [Q_alpha_gamma ; Q_a_gamma]",
        "linking_z": "Q_nu_a S Q_a_nu with nu = alpha, beta, gamma curves stacked in that order",
        "w2": "diagonal of the linking matrix mod 2",
    })
}

pub fn validation(r: &ValidationReport) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
        .collect();
    json!({
        "valid": r.is_valid(),
        "inferred_k": r.inferred_k.to_vec(),
        "failed": r.failures().map(|c| c.name.clone()).collect::<Vec<_>>(),
        "checks": checks,
    })
}

pub fn group(g: &AbelianGroup) -> Value {
    json!({
        "free_rank": g.free_rank(),
        "torsion": g.invariant_factors().iter().map(int).collect::<Vec<_>>(),
        "display": g.to_string(),
    })
}

pub fn homology(h: &HomologyResult) -> Value {
    let mut m = Map::new();
    for i in 0..4 {
        m.insert(format!("H{i}"), group(h.h(i)));
    }
    Value::Object(m)
}

pub fn form(f: &IntersectionForm) -> Value {
    json!({
        "matrix": matrix_json(&f.matrix),
        "generators_e_basis": rows_json(&f.generators),
        "generators_gamma_basis": rows_json(&f.gamma_coords),
        "torsion": f.torsion.iter().map(int).collect::<Vec<_>>(),
    })
}

pub fn w2(w: &W2Representative) -> Value {
    json!({
        "basis": w.basis.name(),
        "coefficients": w.coefficients,
        "linking": matrix_json(&w.linking),
    })
}

pub fn spin(s: &SpinVerdict) -> Value {
    json!({
        "spin": s.spin,
        "witness": s.witness,
        "witness_basis": s.witness_basis,
    })
}

fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_object()) => {
            let parts: Option<Vec<String>> = items.iter().map(inline).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        Value::Array(_) | Value::Object(_) => None,
        Value::String(s) => Some(s.clone()),
        other => Some(other.to_string()),
    }
}

fn render_into(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match inline(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_into(out, x, indent + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match inline(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render_into(out, x, indent + 1);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other).unwrap_or_default())),
    }
}

/// Indented `key: value` lines, matrices and vectors on one line.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_into(&mut out, v, 0);
    out
}

fn json_into(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent + 1);
    match v {
        Value::Object(m) if !m.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&format!("{pad}{}: ", Value::String(k.clone())));
                json_into(out, x, indent + 1);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&format!("{}}}", "  ".repeat(indent)));
        }
        Value::Array(items) if items.iter().any(|x| x.is_object()) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad);
                json_into(out, x, indent + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&format!("{}]", "  ".repeat(indent)));
        }
        other => out.push_str(&serde_json::to_string(other).expect("serializable")),
    }
}

/// Pretty JSON with sorted keys; arrays without objects stay on one line.
pub fn to_json_string(v: &Value) -> String {
    let mut out = String::new();
    json_into(&mut out, v, 0);
    out.push('\n');
    out
}
