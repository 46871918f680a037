use serde_json::json;

use grothlab::symfunc::{beta_grothendieck, dual_grothendieck, dual_grothendieck_schur_expansion, grothendieck, grothendieck_schur_expansion, schur, DualRoute, GrothRoute, SchurExpansion, SchurRoute, SymSpec};
use grothlab::{Error, Polynomial};

use crate::args::ExpandArgs;
use crate::report::Report;

pub fn run(a: &ExpandArgs) -> Result<Report, Error> {
    let lam = &a.shape;
    let n = a.n.unwrap_or(lam.len().max(1));
    let (poly, expansion, route, t_count): (Polynomial, Option<SchurExpansion>, String, usize) = match a.family.as_str() {
        "g" => {
            let t_count = a.t_count.unwrap_or(lam.len().saturating_sub(1));
            let route: DualRoute = a.route.as_deref().unwrap_or("jt_h").parse()?;
            let p = dual_grothendieck(lam, &SymSpec::new(n, t_count), route)?;
            let e = (route == DualRoute::SchurDecomp).then(|| dual_grothendieck_schur_expansion(lam, n));
            (p, e, format!("{route:?}"), t_count)
        }
        "G" => {
            let t_count = a.t_count.unwrap_or(n.saturating_sub(1).max(lam.len()));
            let route: GrothRoute = a.route.as_deref().unwrap_or("svt").parse()?;
            let p = grothendieck(lam, &SymSpec::new(n, t_count), route)?;
            let e = (route == GrothRoute::SchurExpansion).then(|| grothendieck_schur_expansion(lam, n));
            (p, e, format!("{route:?}"), t_count)
        }
        "s" => {
            let route = match a.route.as_deref().unwrap_or("jt") {
                "jt" | "jacobi_trudi" => SchurRoute::JacobiTrudi,
                "ssyt" | "combinatorial" => SchurRoute::Combinatorial,
                r => return Err(Error::Parse(format!("unknown Schur route {r:?}"))),
            };
            (schur(lam, n, route), None, format!("{route:?}"), 0)
        }
        "beta" => (beta_grothendieck(lam, n)?, None, "Svt".into(), 0),
        f => return Err(Error::Parse(format!("unknown family {f:?}; expected g, G, s or beta"))),
    };
    let text = match &expansion {
        Some(e) => e.to_string(),
        None => poly.to_string(),
    };
    let body = json!({
        "family": a.family,
        "shape": lam.parts(),
        "n": n,
        "t_count": t_count,
        "route": route,
        "polynomial": poly.to_string(),
        "terms": poly.to_json(),
        "schur_expansion": expansion.map(|e| json!({"text": e.to_string(), "terms": e.to_json()})),
    });
    Ok(Report::new("expand", true, body, text))
}
