//! The subcommands. Each returns a report and whether it succeeded.

use negmom_algebra::Poly;
use negmom_core::catalog::{run, Grid, Identity, NamedSpec};
use negmom_core::certificate::Param;
use negmom_core::moments::{bounded_moment, negative_moments, well_defined};
use negmom_core::paths::{
    count_alt, enumerate_alt, enumerate_motzkin, enumerate_pv, enumerate_rpp, enumerate_schroeder, fmt_seq, wt_av,
    wt_motzkin, wt_rpp, wt_schroeder, wt_v, AltPattern, Boundary, PvVariant,
};
use negmom_core::reciprocity::RppMode;
use negmom_core::{MomentError, NegRoute, Status, WeightSpec};
use serde_json::Value;

use crate::report::Report;
use crate::spec_expr::{build_spec, SpecExpression};
use crate::{Emit, Failure, Family, Mode, Pattern, Span, Variant, Weights};

type Outcome = Result<(Report, bool), Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn spec_of(w: &Weights, default: WeightSpec) -> Result<(WeightSpec, String), Failure> {
    match (&w.b, &w.lambda) {
        (None, None) => Ok((default, "default".into())),
        (b, lam) => {
            let b = b.clone().unwrap_or(SpecExpression::Symbolic);
            let spec = build_spec(&b, lam.as_ref()).map_err(usage)?;
            let label = match lam {
                Some(l) => format!("b={b};lam={l}"),
                None => format!("b={b}"),
            };
            Ok((spec, label))
        }
    }
}

fn weight_params(report: &mut Report, w: &Weights) {
    if let Some(b) = &w.b {
        report.param("b", b);
    }
    if let Some(l) = &w.lambda {
        report.param("lambda", l);
    }
}

pub fn moment(n: &Span, k: u32, r: u32, s: u32, w: &Weights, negative: bool) -> Outcome {
    let (spec, _) = spec_of(w, WeightSpec::symbolic())?;
    let mut report = Report::new("moment", vec!["n", "value"]);
    report.param("n", n);
    report.param("k", k);
    report.param("r", r);
    report.param("s", s);
    weight_params(&mut report, w);
    report.param("negative", negative);

    let values: Vec<(i64, String)> = if negative {
        let wd = well_defined(k, &spec);
        if !wd.defined {
            return Err(usage(MomentError::IllDefined { k, p0: wd.p0.to_string() }));
        }
        let (lo, hi) = (*n.0.start(), *n.0.end());
        let neg =
            if hi > 0 { negative_moments(hi, r, s, k, &spec, NegRoute::GfReverse).map_err(usage)? } else { vec![] };
        let mut out = Vec::new();
        for i in lo..=hi {
            let v = if i == 0 {
                bounded_moment(0, r, s, k, &spec).map_err(usage)?.to_string()
            } else {
                neg[i as usize - 1].to_string()
            };
            out.push((-(i as i64), v));
        }
        out
    } else {
        let mut out = Vec::new();
        for i in n.0.clone() {
            out.push((i as i64, bounded_moment(i, r, s, k, &spec).map_err(usage)?.to_string()));
        }
        out
    };
    report.text.push(values.iter().map(|(_, v)| v.as_str()).collect::<Vec<_>>().join(","));
    report.rows = values.into_iter().map(|(i, v)| vec![Value::from(i), Value::from(v)]).collect();
    Ok((report, true))
}

pub struct GridArgs {
    pub n: Option<Span>,
    pub k: Option<Span>,
    pub m: Option<Span>,
    pub r: Option<Span>,
    pub s: Option<Span>,
    pub mode: Option<Mode>,
}

fn param_json(params: &[(&'static str, Param)]) -> Value {
    Value::Object(
        params
            .iter()
            .map(|(k, v)| {
                let v = match v {
                    Param::Int(i) => Value::from(*i),
                    Param::Text(t) => Value::from(t.clone()),
                };
                (k.to_string(), v)
            })
            .collect(),
    )
}

pub fn verify(name: &str, g: GridArgs, w: &Weights) -> Outcome {
    let id = Identity::from_name(name).ok_or_else(|| {
        let names: Vec<&str> = Identity::ALL.iter().map(|i| i.name()).collect();
        usage(format!("unknown identity {name:?}; known: {}", names.join(", ")))
    })?;
    let spec = match (&w.b, &w.lambda) {
        (None, None) => None,
        _ => {
            let (spec, label) = spec_of(w, WeightSpec::symbolic())?;
            Some(NamedSpec::new(label, spec))
        }
    };
    let mut report = Report::new("verify", vec!["identity", "params", "status", "lhs", "rhs", "witness", "reason"]);
    report.param("identity", id.name());
    for (key, v) in [("n", &g.n), ("k", &g.k), ("m", &g.m), ("r", &g.r), ("s", &g.s)] {
        if let Some(v) = v {
            report.param(key, v);
        }
    }
    let mode = g.mode.map(|m| match m {
        Mode::SymbolicVa => RppMode::SymbolicVa,
        Mode::Q => RppMode::Q,
        Mode::QUnbounded => RppMode::QUnbounded,
    });
    if let Some(m) = mode {
        report.param("mode", m.name());
    }
    weight_params(&mut report, w);
    let grid = Grid {
        n: g.n.map(|s| s.0),
        k: g.k.map(|s| s.0),
        m: g.m.map(|s| s.0),
        r: g.r.map(|s| s.0),
        s: g.s.map(|s| s.0),
        mode,
        spec,
    };
    let checks = run(id, &grid);
    let count = |st: Status| checks.iter().filter(|c| c.status == st).count();
    let (pass, fail, skip) = (count(Status::Pass), count(Status::Fail), count(Status::Skipped));
    for c in &checks {
        report.text.push(c.line());
        let opt = |o: &Option<String>| o.clone().map(Value::from).unwrap_or(Value::Null);
        report.rows.push(vec![
            Value::from(c.name.clone()),
            param_json(&c.params),
            Value::from(c.status.as_str()),
            Value::from(c.lhs.to_string()),
            Value::from(c.rhs.to_string()),
            opt(&c.witness),
            opt(&c.reason),
        ]);
    }
    report.text.push(format!("summary: pass={pass} fail={fail} skipped={skip}"));
    Ok((report, fail == 0))
}

pub struct SequenceArgs {
    pub family: Family,
    pub n: u32,
    pub k: Option<u32>,
    pub m: u32,
    pub ell: u32,
    pub r: Option<u32>,
    pub s: Option<u32>,
    pub pattern: Pattern,
    pub variant: Variant,
    pub emit: Emit,
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Alt => "alt",
        Family::Pv => "pv",
        Family::Schroeder => "schroeder",
        Family::Motzkin => "motzkin",
        Family::Rpp => "rpp",
    }
}

fn endpoints(a: &SequenceArgs) -> Result<Option<(u32, u32)>, Failure> {
    match (a.r, a.s) {
        (None, None) => Ok(None),
        (Some(r), Some(s)) => Ok(Some((r, s))),
        _ => Err(usage("--r and --s go together")),
    }
}

pub fn sequence(a: SequenceArgs, w: &Weights) -> Outcome {
    let need_k = || a.k.ok_or_else(|| usage(format!("{} needs --k", family_name(a.family))));
    // (encoding, weight) per object; weights are computed only when emitted
    let want_w = a.emit == Emit::Weights;
    let items: Vec<(String, Option<Poly>)> = match a.family {
        Family::Alt => {
            let pattern = if a.pattern == Pattern::Up { AltPattern::UpFirst } else { AltPattern::DownFirst };
            let k = need_k()?;
            let ends = endpoints(&a)?;
            if a.emit == Emit::Count && ends.is_none() {
                let c = count_alt(a.n, k, pattern);
                return Ok(count_report(&a, w, c.to_string()));
            }
            enumerate_alt(a.n, k, pattern, ends).iter().map(|s| (fmt_seq(s), want_w.then(|| wt_av(s)))).collect()
        }
        Family::Pv => {
            if a.ell < 2 {
                return Err(usage("--ell must be at least 2"));
            }
            let variant = if a.variant == Variant::Plain { PvVariant::Plain } else { PvVariant::Modified };
            let boundary = match endpoints(&a)? {
                None => Boundary::Padded,
                Some((r, s)) => Boundary::Literal { r, s },
            };
            enumerate_pv(a.ell, a.n, need_k()?, variant, boundary)
                .iter()
                .map(|s| (fmt_seq(s), want_w.then(|| wt_v(s))))
                .collect()
        }
        Family::Schroeder => {
            let (spec, _) = spec_of(w, WeightSpec::laurent_symbolic())?;
            enumerate_schroeder(a.n, a.k).iter().map(|p| (p.encode(), want_w.then(|| wt_schroeder(p, &spec)))).collect()
        }
        Family::Motzkin => {
            let (spec, _) = spec_of(w, WeightSpec::symbolic())?;
            let (r, s) = endpoints(&a)?.unwrap_or((0, 0));
            enumerate_motzkin(a.n, r, s, a.k)
                .iter()
                .map(|p| (p.encode(), want_w.then(|| wt_motzkin(p, &spec))))
                .collect()
        }
        Family::Rpp => {
            if a.m == 0 {
                return Err(usage("rpp needs --m at least 1"));
            }
            enumerate_rpp(a.n, a.m, need_k()?, None).iter().map(|t| (t.encode(), want_w.then(|| wt_rpp(t)))).collect()
        }
    };
    if a.emit == Emit::Count {
        return Ok(count_report(&a, w, items.len().to_string()));
    }
    let mut report = base_report(&a, w, vec!["object", "weight"]);
    for (enc, wt) in items {
        let wt = wt.map(|p| p.to_string());
        report.text.push(match &wt {
            Some(p) => format!("{enc}\t{p}"),
            None => enc.clone(),
        });
        report.rows.push(vec![Value::from(enc), wt.map(Value::from).unwrap_or(Value::Null)]);
    }
    Ok((report, true))
}

fn base_report(a: &SequenceArgs, w: &Weights, columns: Vec<&'static str>) -> Report {
    let mut r = Report::new("sequence", columns);
    r.param("family", family_name(a.family));
    r.param("n", a.n);
    if let Some(k) = a.k {
        r.param("k", k);
    }
    match a.family {
        Family::Rpp => r.param("m", a.m),
        Family::Pv => {
            r.param("ell", a.ell);
            r.param("variant", format!("{:?}", a.variant).to_lowercase());
        }
        Family::Alt => r.param("pattern", format!("{:?}", a.pattern).to_lowercase()),
        _ => {}
    }
    if let (Some(rr), Some(ss)) = (a.r, a.s) {
        r.param("r", rr);
        r.param("s", ss);
    }
    r.param("emit", format!("{:?}", a.emit).to_lowercase());
    weight_params(&mut r, w);
    r
}

fn count_report(a: &SequenceArgs, w: &Weights, count: String) -> (Report, bool) {
    let mut r = base_report(a, w, vec!["count"]);
    r.text.push(count.clone());
    r.rows.push(vec![Value::from(count.parse::<u64>().expect("count"))]);
    (r, true)
}

pub fn list() -> Report {
    let mut r = Report::new("list", vec!["identity", "description"]);
    for id in Identity::ALL {
        r.text.push(format!("{:<18} {}", id.name(), id.about()));
        r.rows.push(vec![Value::from(id.name()), Value::from(id.about())]);
    }
    r
}
