use serde_json::json;

use grothlab::shapes::{part, partitions_in_box, Partition};
use grothlab::suite::{self, Check, YBE_MODELS};
use grothlab::symfunc::Identity;
use grothlab::Error;

use crate::args::VerifyArgs;
use crate::report::Report;

fn symmetry_cases(shapes: &[Partition], n: usize) -> Vec<Identity> {
    let mut v = Vec::new();
    for lam in shapes {
        for i in 1..=lam.len() {
            if lam.part(i) == lam.part(i + 1) {
                if i >= 2 {
                    v.push(Identity::Symmetry { lambda: lam.clone(), n, i });
                }
                v.push(Identity::GSymmetry { lambda: lam.clone(), n: n.max(lam.len() + 1), i });
            }
        }
    }
    v
}

fn identity_cases(a: &VerifyArgs) -> Option<Vec<Identity>> {
    let (r, c) = a.bounds;
    let shapes = partitions_in_box(r, c);
    let (m, l, n) = (a.m, a.l, a.n);
    Some(match a.name.as_str() {
        "identities" => suite::identity_suite(),
        "cauchy" => vec![Identity::Cauchy { m, l, n }],
        "littlewood" => vec![Identity::Littlewood { m, l, n }],
        "coincidence" => vec![Identity::Coincidence { m, l, n }],
        "finite_cauchy_schur" => vec![Identity::FiniteCauchySchur { m, l, n }],
        "cauchy_littlewood_box" => vec![Identity::CauchyLittlewoodBox { l, m, n }],
        "cauchy_littlewood_bounded" => vec![Identity::CauchyLittlewoodBounded { l, n, degree: a.degree }],
        "branching" => shapes.into_iter().map(|lambda| Identity::Branching { lambda, n }).collect(),
        "generalized_coincidence" => shapes.into_iter().map(|nu| Identity::GeneralizedCoincidence { nu, n, m }).collect(),
        "duality" => shapes.iter().flat_map(|lam| shapes.iter().map(move |mu| Identity::Duality { lambda: lam.clone(), mu: mu.clone() })).collect(),
        "symmetry" => symmetry_cases(&shapes, n),
        "fnr_dual" => vec![Identity::FnrDual { lambda: a.shape.clone().unwrap_or_else(|| part(&[2, 2, 1])), n: n.max(1) }],
        "fnr_g" => vec![Identity::FnrG { lambda: a.parts.clone().unwrap_or_else(|| vec![1, 0]), n, m }],
        _ => return None,
    })
}

fn ybe_checks(model: &str) -> Result<Vec<Check>, Error> {
    if model == "all" {
        YBE_MODELS.iter().copied().chain(["perturbed"]).map(suite::ybe).collect()
    } else {
        Ok(vec![suite::ybe(model)?])
    }
}

pub fn run(a: &VerifyArgs) -> Result<Report, Error> {
    let (r, c) = a.bounds;
    let checks = if let Some(ids) = identity_cases(a) {
        suite::identities(&ids)
    } else {
        match a.name.as_str() {
            "pinned" => suite::pinned(),
            "routes" => suite::routes(r, c, a.n, a.t_count),
            "ybe" => ybe_checks(&a.model)?,
            "operators" => suite::operators(a.m.min(5)),
            "diffops" => suite::diffops(a.n),
            "lpp" => suite::probability(a.trials, a.seed),
            "bijections" => suite::bijections(&part(&[3, 2, 1]), a.n as u32),
            "all" => {
                let mut v = suite::pinned();
                v.extend(suite::routes(r, c, a.n, a.t_count));
                v.extend(suite::identities(&suite::identity_suite()));
                v.extend(ybe_checks("all")?);
                v.extend(suite::operators(4));
                v.extend(suite::diffops(a.n));
                v.extend(suite::probability(a.trials, a.seed));
                v.extend(suite::bijections(&part(&[3, 2, 1]), a.n as u32));
                v
            }
            other => return Err(Error::InvalidArgument(format!("unknown identity {other:?}"))),
        }
    };
    Ok(Report::from_checks("verify", &checks, json!({"name": a.name})))
}
