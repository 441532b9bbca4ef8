use asw_core::bounds::{disc_exponent_bound, disc_norm_bound_deg, exponent_summary, z_series_cyclic_p};
use asw_core::delsarte::{aut_order, counts, e_polynomial, f_polynomial, module_polynomial, SignaturePoly};
use asw_core::euler_engine::{asymptotic_diagnostic, global_series, local_factor, psi_exponent_check, Window};
use asw_core::field_model::{DivisorDesc, FieldSpec, PlaceDesc, Poly, PolyRing};
use asw_core::oracles::{asw_count, asw_degree_counts, AswClassSpace, OneUnitGroup};
use asw_core::series::SeriesUQ;
use asw_core::{Error, GroupDesc, Result};
use num_bigint::BigUint;
use serde_json::{Map, Value};

use crate::cli::{BoundsCommand, Command, GroupArgs, OracleCommand, PlaceArg};
use crate::report::{float, num, nums, Report, Table};

/// A finished command: its report and whether its built-in verification held.
pub struct Outcome {
    pub report: Report,
    pub verified: bool,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome { report, verified: true }
    }
}

pub fn run(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Group(g) => group(g).map(Into::into),
        Command::Delsarte { group, index } => delsarte(group, index.as_deref()).map(Into::into),
        Command::LocalFactor { group, trunc } => local(group, *trunc),
        Command::Series { q, group, trunc } => series(*q, group, *trunc).map(Into::into),
        Command::Diagnose { q, group, trunc } => diagnose(*q, group, *trunc).map(Into::into),
        Command::Oracle(OracleCommand::Unit { q, pi, m }) => unit(*q, pi, *m),
        Command::Oracle(OracleCommand::Asw { p, q, places, n, rank }) => {
            asw(*p, *q, places, *n, *rank).map(Into::into)
        }
        Command::Bounds(b) => bounds(b).map(Into::into),
        Command::Compare { q, group, trunc } => compare(*q, group, *trunc),
    }
}

fn desc(g: &GroupArgs) -> Result<GroupDesc> {
    GroupDesc::new(g.p, &g.group.0)
}

fn with_group(r: &mut Report, g: &GroupDesc) {
    r.num("p", g.p())
        .num("group", g)
        .set("type", nums(g.cyclic_type()))
        .set("signature", nums(g.signature().ranks()));
}

fn poly_json(f: &SignaturePoly) -> Value {
    let terms = f
        .terms()
        .map(|(exps, c)| {
            let mut m = Map::new();
            m.insert("exponents".into(), nums(exps));
            m.insert("coeff".into(), num(c));
            Value::Object(m)
        })
        .collect();
    let mut m = Map::new();
    m.insert("text".into(), num(f));
    m.insert("terms".into(), Value::Array(terms));
    Value::Object(m)
}

fn window_json(w: &Window) -> Value {
    let mut m = Map::new();
    m.insert("start".into(), num(w.start));
    m.insert("end".into(), num(w.end));
    m.insert("len".into(), num(w.len));
    m.insert("mean".into(), num(float(w.mean)));
    Value::Object(m)
}

fn group(args: &GroupArgs) -> Result<Report> {
    let g = desc(args)?;
    let inv = g.invariants()?;
    let mut r = Report::new("group");
    with_group(&mut r, &g);
    r.num("order", g.order())
        .num("rank", g.rank())
        .flag("cyclic", g.is_cyclic())
        .flag("elementary", g.is_elementary())
        .num("e", inv.e)
        .num("f", inv.f)
        .num("alpha", &inv.alpha)
        .num("beta", &inv.beta)
        .num("m_tilde", &inv.m_tilde)
        .num("a_p", &inv.a_p)
        .num("d_p", &inv.d_p)
        .num("delta", &inv.delta)
        .num("local_disc_exp", &inv.local_disc_exp);
    Ok(r)
}

fn delsarte(args: &GroupArgs, index: Option<&[u64]>) -> Result<Report> {
    let g = desc(args)?;
    let mut r = Report::new("delsarte");
    with_group(&mut r, &g);
    r.num("aut_order", aut_order(&g))
        .set("f_polynomial", poly_json(&f_polynomial(&g)?))
        .set("e_polynomial", poly_json(&e_polynomial(&g)?))
        .set("module_polynomial", poly_json(&module_polynomial(&g)?));
    if let Some(x) = index {
        let x: Vec<BigUint> = x.iter().map(|&v| BigUint::from(v)).collect();
        let c = counts(&x, &g)?;
        let mut m = Map::new();
        m.insert("index".into(), nums(&x));
        m.insert("homomorphisms".into(), num(&c.eta));
        m.insert("epimorphisms".into(), num(&c.eps));
        m.insert("quotients".into(), num(&c.kappa));
        r.set("counts", Value::Object(m));
    }
    Ok(r)
}

fn uq_json(s: &SeriesUQ) -> Value {
    nums(s.coeffs())
}

fn local(args: &GroupArgs, trunc: usize) -> Result<Outcome> {
    let g = desc(args)?;
    let sig = g.signature();
    let lf = local_factor(&sig, g.p(), trunc)?;
    let mut r = Report::new("local-factor");
    with_group(&mut r, &g);
    let psi_gap = match psi_exponent_check(&sig, g.p(), trunc) {
        Ok(ok) => Some(ok),
        Err(Error::TruncationTooSmall { .. }) => None,
        Err(e) => return Err(e),
    };
    let mut table = Table::new(&["m", "phi", "lambda", "psi"]);
    for m in 0..=trunc {
        table.push(vec![
            m.to_string(),
            lf.phi.coeff(m).to_string(),
            lf.lambda.coeff(m).to_string(),
            lf.psi.coeff(m).to_string(),
        ]);
    }
    r.num("trunc", trunc)
        .set("phi", uq_json(&lf.phi))
        .set("lambda", uq_json(&lf.lambda))
        .set("psi", uq_json(&lf.psi))
        .flag("identity_ok", lf.identity_ok)
        .flag("shift_identity_ok", lf.shift_identity_ok)
        .set("psi_gap_ok", psi_gap.map_or(Value::Null, Value::Bool))
        .table("coefficients", table);
    let verified = lf.identity_ok && lf.shift_identity_ok && psi_gap != Some(false);
    Ok(Outcome { report: r, verified })
}

fn series(q: u64, args: &GroupArgs, trunc: usize) -> Result<Report> {
    let g = desc(args)?;
    let s = global_series(q, &g, trunc)?;
    let sums = s.partial_sums();
    let mut table = Table::new(&["n", "coefficient", "count"]);
    for (n, (c, total)) in s.coeffs().iter().zip(&sums).enumerate() {
        table.push(vec![n.to_string(), c.to_string(), total.to_string()]);
    }
    let mut r = Report::new("series");
    with_group(&mut r, &g);
    r.num("q", q)
        .num("trunc", trunc)
        .set("coefficients", nums(s.coeffs()))
        .set("counts", nums(&sums))
        .table("rows", table);
    Ok(r)
}

fn diagnose(q: u64, args: &GroupArgs, trunc: usize) -> Result<Report> {
    let g = desc(args)?;
    let d = asymptotic_diagnostic(q, &g, trunc)?;
    let mut table = Table::new(&["residue", "n", "count", "rho", "exact"]);
    let mut classes = Vec::new();
    for c in &d.classes {
        for pt in &c.points {
            table.push(vec![
                c.residue.to_string(),
                pt.n.to_string(),
                pt.count.to_string(),
                float(pt.rho),
                pt.exact.as_ref().map(ToString::to_string).unwrap_or_default(),
            ]);
        }
        let mut m = Map::new();
        m.insert("residue".into(), num(c.residue));
        m.insert("windows".into(), Value::Array(c.windows.iter().map(window_json).collect()));
        m.insert(
            "relative_change".into(),
            c.relative_change.map_or(Value::Null, |x| num(float(x))),
        );
        classes.push(Value::Object(m));
    }
    let mut r = Report::new("diagnose");
    with_group(&mut r, &g);
    r.num("q", q)
        .num("trunc", trunc)
        .num("alpha", &d.alpha)
        .num("beta", &d.beta)
        .num("period", d.period)
        .set("classes", Value::Array(classes))
        .set("growth", nums(d.growth.iter().map(|&x| float(x))))
        .set("growth_windows", Value::Array(d.growth_windows.iter().map(window_json).collect()))
        .set("growth_exponent", d.growth_exponent.map_or(Value::Null, |x| num(float(x))))
        .table("points", table);
    Ok(r)
}

fn unit(q: u64, pi: &[u32], m: u32) -> Result<Outcome> {
    let pi = Poly::from_coeffs(pi.to_vec());
    let u = OneUnitGroup::new(q, &pi, m)?;
    let hasse = u.hasse_holds();
    let mut r = Report::new("oracle unit");
    r.num("q", q)
        .num("pi", &pi)
        .num("m", m)
        .num("order", u.order())
        .num("norm", u.norm())
        .set("power_indices", nums(u.power_indices()))
        .set("signature", nums(u.signature().ranks()))
        .flag("hasse_holds", hasse);
    Ok(Outcome { report: r, verified: hasse })
}

fn modulus(ring: &PolyRing, places: &[PlaceArg]) -> Result<DivisorDesc> {
    let mut m = DivisorDesc::zero();
    for pl in places {
        let v = match &pl.pi {
            None => PlaceDesc::Infinite,
            Some(c) => PlaceDesc::finite(ring, Poly::from_coeffs(c.clone()))?,
        };
        if m.exponent(&v) != 0 {
            return Err(Error::OutOfRange(format!("place {v} given twice")));
        }
        m.set(v, pl.exp);
    }
    Ok(m)
}

fn asw(p: u64, q: Option<u64>, places: &[PlaceArg], n: Option<usize>, rank: u32) -> Result<Report> {
    if let Some(q) = q {
        if q != p {
            FieldSpec::with_char(q, p)?;
            return Err(Error::OutOfRange(format!("the oracle works over F_p, got q = {q}")));
        }
    }
    let mut r = Report::new("oracle asw");
    r.num("p", p);
    match n {
        Some(n) => {
            let c = asw_degree_counts(p, n, rank)?;
            let mut table = Table::new(&["n", "coefficient", "count"]);
            let mut total = 0u64;
            let mut sums = Vec::new();
            for (d, &cd) in c.iter().enumerate() {
                total += cd;
                sums.push(total);
                table.push(vec![d.to_string(), cd.to_string(), total.to_string()]);
            }
            r.num("rank", rank)
                .num("n", n)
                .set("coefficients", nums(&c))
                .set("counts", nums(&sums))
                .table("rows", table);
        }
        None => {
            let ring = PolyRing::new(p)?;
            let m = modulus(&ring, places)?;
            let space = AswClassSpace::new(p, &m)?;
            r.num("modulus", &m)
                .num("degree", m.degree())
                .num("class_space_dim", space.dim())
                .num("exact_conductor_count", asw_count(p, &m)?);
        }
    }
    Ok(r)
}

fn bounds(cmd: &BoundsCommand) -> Result<Report> {
    let mut r = Report::new(match cmd {
        BoundsCommand::Disc { .. } => "bounds disc",
        BoundsCommand::Norm { .. } => "bounds norm",
        BoundsCommand::Summary(_) => "bounds summary",
        BoundsCommand::Zseries { .. } => "bounds zseries",
    });
    match cmd {
        BoundsCommand::Disc { group, f_exp } => {
            let g = desc(group)?;
            with_group(&mut r, &g);
            r.num("f_exp", f_exp).num("bound", disc_exponent_bound(&g, *f_exp)?);
        }
        BoundsCommand::Norm { group, places } => {
            let g = desc(group)?;
            with_group(&mut r, &g);
            let conductor: Vec<Value> = places
                .iter()
                .map(|(d, e)| {
                    let mut m = Map::new();
                    m.insert("degree".into(), num(d));
                    m.insert("exponent".into(), num(e));
                    Value::Object(m)
                })
                .collect();
            r.set("conductor", Value::Array(conductor))
                .num("degree_bound", disc_norm_bound_deg(&g, places)?);
        }
        BoundsCommand::Summary(group) => {
            let g = desc(group)?;
            with_group(&mut r, &g);
            let s = exponent_summary(&g)?;
            r.num("lower", &s.lower).num("conjecture", &s.conjecture).num("upper", &s.upper);
        }
        BoundsCommand::Zseries { q, p, trunc } => {
            let s = z_series_cyclic_p(*q, *p, *trunc)?;
            let mut table = Table::new(&["n", "coefficient"]);
            for (n, c) in s.coeffs().iter().enumerate() {
                table.push(vec![n.to_string(), c.to_string()]);
            }
            r.num("q", q)
                .num("p", p)
                .num("trunc", trunc)
                .set("coefficients", nums(s.coeffs()))
                .table("rows", table);
        }
    }
    Ok(r)
}

fn compare(q: u64, args: &GroupArgs, trunc: usize) -> Result<Outcome> {
    let g = desc(args)?;
    FieldSpec::with_char(q, g.p())?;
    if q != g.p() {
        return Err(Error::OutOfRange(format!("the oracle works over F_p, got q = {q}")));
    }
    let rank = match g.cyclic_type() {
        [1] => 1,
        [1, 1] if g.p() == 2 => 2,
        _ => {
            return Err(Error::OutOfRange(format!(
                "no oracle for {g}; use Z/p, or (Z/2)^2 with p = 2"
            )))
        }
    };
    let oracle = asw_degree_counts(g.p(), trunc, rank)?;
    let engine = global_series(q, &g, trunc)?;
    let mut table = Table::new(&["n", "engine", "oracle", "verdict"]);
    let mut all_equal = true;
    for (n, (e, &o)) in engine.coeffs().iter().zip(&oracle).enumerate() {
        let equal = *e == o.into();
        all_equal &= equal;
        let verdict = if equal { "equal" } else { "mismatch" };
        table.push(vec![n.to_string(), e.to_string(), o.to_string(), verdict.into()]);
    }
    let mut r = Report::new("compare");
    with_group(&mut r, &g);
    r.num("q", q).num("trunc", trunc).flag("all_equal", all_equal).table("rows", table);
    Ok(Outcome { report: r, verified: all_equal })
}
