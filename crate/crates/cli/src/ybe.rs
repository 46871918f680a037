use serde_json::{json, Value};

use grothlab::suite::{self, YBE_MODELS};
use grothlab::vertex::{fermionic, fermionic_r, jagged, jagged_r, mixed_r, nilp, nilp_r};
use grothlab::{Error, Polynomial, Var};

use crate::args::YbeArgs;
use crate::report::Report;

fn labeling(case: &Value) -> String {
    let l = &case["labels"];
    ["a", "b", "c", "d", "e", "f"].iter().map(|k| format!("{k}={}", l[*k])).collect::<Vec<_>>().join(" ")
}

/// The L- and R-matrix tables a model is checked with.
fn tables(model: &str) -> Value {
    let beta = Polynomial::var(Var::beta());
    match model {
        "nilp" | "perturbed" => json!({"l": nilp().to_json(), "r": nilp_r().to_json()}),
        "jagged" => json!({"l": jagged().to_json(), "r": jagged_r().to_json()}),
        "fermionic" => json!({"l": fermionic(&beta).to_json(), "r": fermionic_r(&beta).to_json()}),
        "mixed" => json!({"l_i": nilp().to_json(), "l_j": jagged().to_json(), "r": mixed_r().to_json()}),
        _ => Value::Null,
    }
}

pub fn run(a: &YbeArgs) -> Result<Report, Error> {
    let models: Vec<&str> = match a.model.as_str() {
        "all" => YBE_MODELS.iter().copied().chain(["perturbed"]).collect(),
        m => vec![m],
    };
    let mut text = String::new();
    let mut ok = true;
    let mut reports = Vec::new();
    for m in models {
        let c = suite::ybe(m)?;
        ok &= c.holds;
        text.push_str(&format!("{m}: {}\n", if c.holds { "pass" } else { "FAIL" }));
        if let Some(cases) = c.detail["cases"].as_array() {
            for case in cases {
                text.push_str(&format!("  {}: {}\n", labeling(case), if case["pass"] == json!(true) { "pass" } else { "FAIL" }));
            }
        } else if let Some(b) = c.detail["failing_boundary"].as_str() {
            text.push_str(&format!("  control fails as expected at {b}\n"));
        }
        reports.push(json!({"model": m, "pass": c.holds, "tables": tables(m), "detail": c.detail}));
    }
    Ok(Report::new("ybe", ok, json!({"models": reports}), text.trim_end().to_string()))
}
