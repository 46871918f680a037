use num_traits::ToPrimitive;
use serde_json::json;

use grothlab::algebra::rational_string;
use grothlab::bijections::phi;
use grothlab::lpp::{cdf_comparison, exact_prob, exact_prob_bruteforce, exact_prob_bruteforce_from, exact_prob_from, last_passage, monte_carlo, sample, tasep_check, GeomParams};
use grothlab::tableaux::Tableau;
use grothlab::{Error, Rational};

use crate::args::{LppAction, LppArgs, Params};
use crate::report::Report;

fn params(p: &Params) -> Result<GeomParams, Error> {
    GeomParams::parse(&p.t, &p.x)
}

/// Rows separated by `/`, entries by `,`: `1,1,4/1,3,4/3,3`.
pub fn parse_tableau(s: &str) -> Result<Tableau, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Tableau::empty());
    }
    let rows: Vec<Vec<u32>> = s
        .split('/')
        .map(|r| r.split(',').map(|v| v.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad entry {v:?} in {s:?}")))).collect())
        .collect::<Result<_, _>>()?;
    let refs: Vec<&[u32]> = rows.iter().map(|r| r.as_slice()).collect();
    Tableau::from_rows(&refs)
}

fn float(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn run(a: &LppArgs) -> Result<Report, Error> {
    match &a.action {
        LppAction::Exact { shape, params: p, from, bruteforce } => {
            let p = params(p)?;
            let exact = match from {
                Some(mu) => exact_prob_from(shape, mu, &p)?,
                None => exact_prob(shape, &p)?,
            };
            let brute = if *bruteforce {
                Some(match from {
                    Some(mu) => exact_prob_bruteforce_from(shape, mu, &p)?,
                    None => exact_prob_bruteforce(shape, &p)?,
                })
            } else {
                None
            };
            let ok = brute.as_ref().is_none_or(|b| *b == exact);
            let mut text = format!("P(G = ({shape})) = {} ≈ {:.6}", rational_string(&exact), float(&exact));
            if let Some(b) = &brute {
                text.push_str(&format!("\nbrute force = {} ({})", rational_string(b), if ok { "agrees" } else { "DIFFERS" }));
            }
            let body = json!({
                "shape": shape.parts(),
                "from": from.as_ref().map(|m| m.parts().to_vec()),
                "params": p.to_json(),
                "exact": rational_string(&exact),
                "bruteforce": brute.as_ref().map(rational_string),
            });
            Ok(Report::new("lpp exact", ok, body, text))
        }
        LppAction::Mc { shape, params: p, trials, seed } => {
            let p = params(p)?;
            let exact = exact_prob(shape, &p)?;
            let mc = monte_carlo(shape, &p, *trials, *seed)?;
            let d = mc.sigma_distance(&exact);
            let ok = d < 4.0;
            let text = format!("exact {} ≈ {:.6}\nestimate {:.6} ± {:.6} ({trials} trials, seed {seed})\n{d:.3} standard errors: {}", rational_string(&exact), float(&exact), mc.estimate, mc.std_error, if ok { "within 4" } else { "OUTSIDE 4" });
            let body = json!({
                "shape": shape.parts(),
                "params": p.to_json(),
                "exact": rational_string(&exact),
                "mc_estimate": mc.estimate,
                "std_error": mc.std_error,
                "trials": mc.trials,
                "seed": seed,
                "sigma_distance": d,
                "within_4_sigma": ok,
            });
            Ok(Report::new("lpp mc", ok, body, text))
        }
        LppAction::Cdf { m, params: p } => {
            let p = params(p)?;
            let c = cdf_comparison(*m, &p)?;
            let text = format!(
                "P(G <= {m}): determinant {} | Schur sum {} | Schur measure {} | exact sum {}: {}",
                rational_string(&c.det),
                rational_string(&c.schur),
                rational_string(&c.schur_measure),
                rational_string(&c.exact_sum),
                if c.agree() { "agree" } else { "DIFFER" }
            );
            Ok(Report::new("lpp cdf", c.agree(), json!({"params": p.to_json(), "cdf": c.to_json()}), text))
        }
        LppAction::Sample { params: p, seed } => {
            let p = params(p)?;
            let m = sample(&p, *seed);
            let g = last_passage(&m, None)?;
            let text = format!("{m}\nG = ({g})");
            Ok(Report::new("lpp sample", true, json!({"params": p.to_json(), "seed": seed, "matrix": m.to_json(), "g": g.parts()}), text))
        }
        LppAction::Phi { rpp, n, l } => {
            let t = parse_tableau(rpp)?;
            let l = l.unwrap_or(t.shape().rows().max(1));
            let m = phi(&t, l, *n)?;
            let g = last_passage(&m, None)?;
            let ok = g == t.shape().outer;
            let text = format!("{m}\nG = ({g})");
            Ok(Report::new("lpp phi", ok, json!({"rpp": t.to_json(), "matrix": m.to_json(), "g": g.parts()}), text))
        }
        LppAction::Tasep { rpp, n } => {
            let t = parse_tableau(rpp)?;
            let r = tasep_check(&t, *n)?;
            let times = r.last_particle_times();
            let text = format!("blocks: {}\nlast hitting times per particle: {times:?}\nfirst-passage consistency: {}", r.schedule.len(), if r.holds() { "pass" } else { "FAIL" });
            Ok(Report::new("lpp tasep", r.holds(), json!({"report": r.to_json()}), text))
        }
    }
}
