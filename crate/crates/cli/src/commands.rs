use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use etakit::eta::{
    determinant, eta_donnelly_approx, eta_order, span_order_lower_bound, EtaValue, LensSpec, Manifold, Modulus,
};
use etakit::exactnum::Rational;
use etakit::f2ring::builtin;
use etakit::f2ring::linalg::BitRow;
use etakit::f2ring::{F2Element, GradedHom, PresentedF2Algebra, SteenrodData};
use etakit::glrverify::{fmt_order, run_report, KerApRow, KerApTable, ReportParams, Suite, P_IMAGE};
use etakit::grouprep::{
    builtin_table, cyclic_free_rep_on, quaternion_free_rep_on, restrict_virtual, CharacterTable, FreeUnitaryRep,
    GroupTag, Inclusion, VirtualCharacter,
};
use serde_json::{json, Value};

use crate::config::Config;
use crate::{EtaKind, Format, PushArgs, Pushed, Verb};

#[derive(Debug)]
pub enum CliError {
    /// Bad input; exit status 2.
    Usage { flag: String, message: String },
    /// The computation itself failed; exit status 1.
    Compute { name: String, message: String },
}

fn usage(flag: &str, message: impl fmt::Display) -> CliError {
    CliError::Usage { flag: flag.to_string(), message: message.to_string() }
}

/// Names the innermost error variant, e.g. `NotFree` for `Group(NotFree(..))`.
fn compute<E: fmt::Debug + fmt::Display>(e: E) -> CliError {
    let debug = format!("{e:?}");
    let mut rest = debug.as_str();
    let name = loop {
        let end = rest.find(|c: char| !(c.is_alphanumeric() || c == '_')).unwrap_or(rest.len());
        let (head, tail) = rest.split_at(end);
        match tail.strip_prefix('(') {
            Some(inner) if inner.starts_with(|c: char| c.is_ascii_uppercase()) => rest = inner,
            _ => break head.to_string(),
        }
    };
    CliError::Compute { name, message: e.to_string() }
}

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Self { text: text.into(), json, ok: true }
    }
}

/// Runs one command; returns the rendered output and whether it succeeded.
pub fn run(verb: &Verb, cfg: &Config, format: Format) -> Result<(String, bool), CliError> {
    let out = match verb {
        Verb::Eta { kind } => eta(kind, cfg)?,
        Verb::Order { value, modulus } => order(value, modulus)?,
        Verb::Span { matrix } => span(matrix)?,
        Verb::Restrict { group, sub, images, rho } => restrict(group, sub, images, rho, cfg)?,
        Verb::Nf { algebra, expr } => nf(algebra, expr, cfg)?,
        Verb::Basis { algebra, degree } => basis(algebra, *degree, cfg)?,
        Verb::Sq { algebra, i, expr } => sq(algebra, *i, expr, cfg)?,
        Verb::Wu { algebra } => wu(algebra, cfg)?,
        Verb::Push(args) => push(args, cfg)?,
        Verb::Verify { suite, q8_m_max, sd16_m_max, homology_n_max } => {
            verify(suite, *q8_m_max, *sd16_m_max, *homology_n_max)?
        }
        Verb::Table { n, up_to } => table(*n, *up_to)?,
    };
    let mut text = match format {
        Format::Text => out.text,
        Format::Json => serde_json::to_string_pretty(&out.json).expect("output serializes"),
    };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    Ok((text, out.ok))
}

fn group_table(flag: &str, name: &str, cfg: &Config) -> Result<Arc<CharacterTable>, CliError> {
    if let Some(custom) = name.strip_prefix("custom:") {
        return cfg
            .tables
            .get(custom)
            .map(|t| Arc::clone(&t.table))
            .ok_or_else(|| usage(flag, format!("no table {custom:?} in the configuration")));
    }
    let tag: GroupTag = name.parse().map_err(|e| usage(flag, e))?;
    if let GroupTag::Cyclic(l) = tag {
        check_root_order(flag, l, cfg)?;
    }
    builtin_table(tag).map_err(compute)
}

fn check_root_order(flag: &str, l: u32, cfg: &Config) -> Result<(), CliError> {
    if l == 0 || l > cfg.root_order_cap {
        return Err(usage(flag, format!("{l} is outside 1..={}, the root order cap", cfg.root_order_cap)));
    }
    Ok(())
}

fn parse_rho(table: &Arc<CharacterTable>, text: &str) -> Result<VirtualCharacter, CliError> {
    VirtualCharacter::parse(Arc::clone(table), text).map_err(|e| usage("--rho", e))
}

fn split_images(text: &str) -> Vec<&str> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
}

/// The ambient table and inclusion for `--into/--images`, or the source
/// table itself.
fn ambient(
    local: &Arc<CharacterTable>,
    pushed: &Pushed,
    cfg: &Config,
) -> Result<(Arc<CharacterTable>, Option<Inclusion>), CliError> {
    match (&pushed.into, &pushed.images) {
        (Some(into), Some(images)) => {
            let big = group_table("--into", into, cfg)?;
            let iota =
                Inclusion::new(Arc::clone(local), Arc::clone(&big), &split_images(images)).map_err(|e| usage("--images", e))?;
            Ok((big, Some(iota)))
        }
        _ => Ok((Arc::clone(local), None)),
    }
}

fn eta_output(v: &EtaValue, float: Option<f64>, dimension: u32) -> Output {
    let mut text = v.to_string();
    let mut json = json!({
        "value": v.value.to_string(),
        "modulus": v.modulus.to_string(),
        "order": v.order().to_string(),
        "dimension": dimension,
    });
    if let Some(f) = float {
        text.push_str(&format!("\nfloat {f:.12}"));
        json["float"] = json!(f);
    }
    Output::new(text, json)
}

fn float_value(rep: &FreeUnitaryRep, rho: &VirtualCharacter, iota: Option<&Inclusion>) -> Result<f64, CliError> {
    let local = match iota {
        Some(i) => restrict_virtual(rho, i).map_err(compute)?,
        None => rho.clone(),
    };
    Ok(eta_donnelly_approx(rep, &local))
}

fn eta(kind: &EtaKind, cfg: &Config) -> Result<Output, CliError> {
    match kind {
        EtaKind::Cyclic { l, a, rho, pushed, float } => {
            check_root_order("--l", *l, cfg)?;
            let local = builtin_table(GroupTag::Cyclic(*l)).map_err(compute)?;
            let (big, iota) = ambient(&local, pushed, cfg)?;
            let rho = parse_rho(&big, rho)?;
            let spec = LensSpec::sphere(*l, a.clone());
            spec.validate().map_err(compute)?;
            let man = Manifold::lens(spec, iota.clone());
            let v = man.eta_value(&rho).map_err(compute)?;
            let f = if *float {
                let rep = cyclic_free_rep_on(Arc::clone(&local), a).map_err(compute)?;
                Some(float_value(&rep, &rho, iota.as_ref())?)
            } else {
                None
            };
            Ok(eta_output(&v, f, man.dimension()))
        }
        EtaKind::Bundle { l, a, chern, rho, pushed } => {
            check_root_order("--l", *l, cfg)?;
            let local = builtin_table(GroupTag::Cyclic(*l)).map_err(compute)?;
            let (big, iota) = ambient(&local, pushed, cfg)?;
            let rho = parse_rho(&big, rho)?;
            let spec = LensSpec::bundle(*l, a.clone(), chern.clone());
            spec.validate().map_err(compute)?;
            let man = Manifold::lens(spec, iota);
            let v = man.eta_value(&rho).map_err(compute)?;
            Ok(eta_output(&v, None, man.dimension()))
        }
        EtaKind::Quaternion { k, rho, pushed, float } => {
            let q8 = builtin_table(GroupTag::Q8).map_err(compute)?;
            let (big, iota) = ambient(&q8, pushed, cfg)?;
            let rho = parse_rho(&big, rho)?;
            let rep = quaternion_free_rep_on(Arc::clone(&q8), *k).map_err(compute)?;
            let man = Manifold::spherical(rep.clone(), iota.clone());
            let v = man.eta_value(&rho).map_err(compute)?;
            let f = if *float { Some(float_value(&rep, &rho, iota.as_ref())?) } else { None };
            Ok(eta_output(&v, f, man.dimension()))
        }
    }
}

fn parse_modulus(text: &str) -> Result<Modulus, CliError> {
    match text.trim() {
        "Z" | "1" => Ok(Modulus::Z),
        "2Z" | "2" => Ok(Modulus::TwoZ),
        other => Err(usage("--modulus", format!("{other:?} is neither Z nor 2Z"))),
    }
}

fn parse_rational(flag: &str, text: &str) -> Result<Rational, CliError> {
    let t = text.trim();
    if t.split('/').nth(1).is_some_and(|d| d.trim().trim_start_matches('-').chars().all(|c| c == '0')) {
        return Err(usage(flag, format!("{t:?} has zero denominator")));
    }
    Rational::from_str(t).map_err(|_| usage(flag, format!("{t:?} is not a rational number p/q")))
}

fn order(value: &str, modulus: &str) -> Result<Output, CliError> {
    let v = parse_rational("--value", value)?;
    let m = parse_modulus(modulus)?;
    let o = eta_order(&v, m);
    Ok(Output::new(
        format!("{o}"),
        json!({"value": v.to_string(), "modulus": m.to_string(), "order": o.to_string()}),
    ))
}

fn span(matrix: &str) -> Result<Output, CliError> {
    let rows: Vec<Vec<Rational>> = matrix
        .split(';')
        .filter(|r| !r.trim().is_empty())
        .map(|r| r.split(',').map(|x| parse_rational("--matrix", x)).collect())
        .collect::<Result<_, _>>()?;
    if rows.is_empty() || rows.iter().any(|r| r.len() != rows.len()) {
        return Err(usage("--matrix", "expected a non-empty square matrix"));
    }
    let det = determinant(&rows).map_err(compute)?;
    let bound = span_order_lower_bound(&rows).map_err(compute)?;
    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    Ok(Output::new(
        format!("determinant {det}\norder lower bound {}", fmt_order(&bound)),
        json!({"matrix": cells, "determinant": det.to_string(), "order_lower_bound": bound.to_string()}),
    ))
}

fn restrict(group: &str, sub: &str, images: &str, rho: &str, cfg: &Config) -> Result<Output, CliError> {
    let big = group_table("--group", group, cfg)?;
    let small = group_table("--sub", sub, cfg)?;
    let imgs = split_images(images);
    let iota = match images.strip_prefix('@') {
        Some(name) => named_inclusion(group, name, cfg)?,
        None => Inclusion::new(small, Arc::clone(&big), &imgs).map_err(|e| usage("--images", e))?,
    };
    let chi = parse_rho(&big, rho)?;
    let r = restrict_virtual(&chi, &iota).map_err(compute)?;
    Ok(Output::new(
        r.to_string(),
        json!({"group": group, "sub": sub, "images": imgs, "rho": chi.to_string(), "restriction": r.to_string(),
               "coefficients": r.coeffs(), "names": r.table().names()}),
    ))
}

/// An inclusion stored with a custom table, selected by `--images @name`.
fn named_inclusion(group: &str, name: &str, cfg: &Config) -> Result<Inclusion, CliError> {
    let table = group
        .strip_prefix("custom:")
        .and_then(|g| cfg.tables.get(g))
        .ok_or_else(|| usage("--images", "named inclusions need a custom --group"))?;
    table
        .inclusions
        .iter()
        .find(|(n, _)| n == name)
        .map(|(_, i)| i.clone())
        .ok_or_else(|| usage("--images", format!("no inclusion {name:?} in {group}")))
}

fn algebra(name: &str, cfg: &Config) -> Result<PresentedF2Algebra, CliError> {
    if let Some(custom) = name.strip_prefix("custom:") {
        return cfg
            .algebras
            .get(custom)
            .map(|(a, _)| a.clone())
            .ok_or_else(|| usage("--algebra", format!("no algebra {custom:?} in the configuration")));
    }
    builtin::algebra(name).map_err(|e| usage("--algebra", e))
}

fn steenrod(name: &str, cfg: &Config) -> Result<SteenrodData, CliError> {
    if let Some(custom) = name.strip_prefix("custom:") {
        return match cfg.algebras.get(custom) {
            Some((_, Some(s))) => Ok(s.clone()),
            Some((_, None)) => Err(usage("--algebra", format!("{custom:?} has no Steenrod data"))),
            None => Err(usage("--algebra", format!("no algebra {custom:?} in the configuration"))),
        };
    }
    builtin::steenrod(name).map_err(|e| usage("--algebra", e))
}

fn parse_expr(a: &PresentedF2Algebra, flag: &str, text: &str) -> Result<F2Element, CliError> {
    a.parse(text).map_err(|e| usage(flag, e))
}

fn nf(name: &str, expr: &str, cfg: &Config) -> Result<Output, CliError> {
    let a = algebra(name, cfg)?;
    let e = parse_expr(&a, "--expr", expr)?;
    let s = a.format(&e);
    Ok(Output::new(s.clone(), json!({"algebra": name, "expr": expr, "normal_form": s})))
}

fn check_degree(flag: &str, n: u32, cfg: &Config) -> Result<(), CliError> {
    if n > cfg.degree_bound {
        return Err(CliError::Compute {
            name: "DegreeBoundExceeded".into(),
            message: format!("{flag} {n} exceeds the configured degree bound {}", cfg.degree_bound),
        });
    }
    Ok(())
}

fn basis(name: &str, degree: u32, cfg: &Config) -> Result<Output, CliError> {
    check_degree("--degree", degree, cfg)?;
    let a = algebra(name, cfg)?;
    let b = a.graded_basis(degree).map_err(compute)?;
    let names: Vec<String> = b.iter().map(|m| a.format_monomial(m)).collect();
    Ok(Output::new(
        format!("dimension {}: {}", names.len(), names.join(", ")),
        json!({"algebra": name, "degree": degree, "dimension": names.len(), "basis": names}),
    ))
}

fn sq(name: &str, i: u32, expr: &str, cfg: &Config) -> Result<Output, CliError> {
    let s = steenrod(name, cfg)?;
    let a = s.algebra().clone();
    let e = parse_expr(&a, "--expr", expr)?;
    if let Some(d) = e.homogeneous_degree() {
        check_degree("--expr", d + i, cfg)?;
    }
    let r = a.format(&s.sq(i, &e));
    Ok(Output::new(r.clone(), json!({"algebra": name, "i": i, "expr": expr, "square": r})))
}

fn wu(name: &str, cfg: &Config) -> Result<Output, CliError> {
    let s = steenrod(name, cfg)?;
    let a = s.algebra().clone();
    let v: Vec<String> = s.wu_classes().map_err(compute)?.iter().map(|e| a.format(e)).collect();
    let w: Vec<String> = s.stiefel_whitney().map_err(compute)?.iter().map(|e| a.format(e)).collect();
    let mut text = String::new();
    for (j, x) in v.iter().enumerate() {
        text.push_str(&format!("v{j} = {x}\n"));
    }
    for (k, x) in w.iter().enumerate() {
        text.push_str(&format!("w{k} = {x}\n"));
    }
    Ok(Output::new(text, json!({"algebra": name, "wu": v, "stiefel_whitney": w})))
}

fn hom(args: &PushArgs) -> Result<GradedHom, CliError> {
    let bad = |e: etakit::f2ring::F2Error| usage("--p-image", e);
    match args.hom.as_str() {
        "sd-d8" => Ok(builtin::sd_to_d8()),
        "d8-v2" => Ok(builtin::d8_to_v2()),
        "sd-v2" => builtin::sd_to_d8().then(&builtin::d8_to_v2()).map_err(compute),
        other => {
            let n = other
                .strip_prefix("sd-m:")
                .and_then(|n| n.parse::<u32>().ok())
                .ok_or_else(|| usage("--hom", format!("{other:?} is not one of sd-d8, d8-v2, sd-v2, sd-m:<n>")))?;
            builtin::sd_to_m(n, args.p_image.as_deref().unwrap_or(P_IMAGE)).map_err(bad)
        }
    }
}

fn push(args: &PushArgs, cfg: &Config) -> Result<Output, CliError> {
    let f = hom(args)?;
    let (src, tgt) = (f.source().clone(), f.target().clone());
    if let Some(text) = &args.monomial {
        let e = parse_expr(&tgt, "--monomial", text)?;
        let m = match e.terms().collect::<Vec<_>>().as_slice() {
            [m] => (*m).clone(),
            _ => return Err(usage("--monomial", format!("{text:?} is not a single basis monomial"))),
        };
        check_degree("--monomial", m.degree(), cfg)?;
        let image: Vec<String> = f.pushforward_dual(&m).map_err(compute)?.iter().map(|x| src.format_monomial(x)).collect();
        let shown = if image.is_empty() { "0".to_string() } else { image.join(" + ") };
        return Ok(Output::new(
            shown,
            json!({"hom": args.hom, "monomial": tgt.format_monomial(&m), "image": image}),
        ));
    }
    let n = args.degree.expect("clap requires --monomial or --degree");
    check_degree("--degree", n, cfg)?;
    let d = f.dual_pushforward(n).map_err(compute)?;
    let rows: Vec<String> = src.graded_basis(n).map_err(compute)?.iter().map(|m| src.format_monomial(m)).collect();
    let cols: Vec<String> = tgt.graded_basis(n).map_err(compute)?.iter().map(|m| tgt.format_monomial(m)).collect();
    let bits = |r: &BitRow| -> Vec<u8> { r.to_bools().into_iter().map(u8::from).collect() };
    let mut text = format!("rows: {}\ncolumns: {}\n", rows.join(", "), cols.join(", "));
    for r in &d {
        text.push_str(&bits(r).iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
        text.push('\n');
    }
    Ok(Output::new(
        text,
        json!({"hom": args.hom, "degree": n, "rows": rows, "columns": cols, "matrix": d.iter().map(bits).collect::<Vec<_>>()}),
    ))
}

fn verify(suite: &str, q8: Option<u32>, sd16: Option<u32>, homology: Option<u32>) -> Result<Output, CliError> {
    let suites = Suite::parse_list(suite).map_err(|e| usage("--suite", e))?;
    let mut params = ReportParams::default();
    params.q8_m_max = q8.unwrap_or(params.q8_m_max);
    params.sd16_m_max = sd16.unwrap_or(params.sd16_m_max);
    params.homology_n_max = homology.unwrap_or(params.homology_n_max);
    let report = run_report(&suites, &params);
    let json: Value = serde_json::from_str(&report.to_json()).expect("report is JSON");
    Ok(Output { text: report.to_text(), json, ok: report.all_passed() })
}

fn row_json(r: &KerApRow) -> Value {
    json!({
        "n": r.n,
        "pattern": r.pattern,
        "k": r.k,
        "one_column": r.one_column.iter().map(|s| json!({"text": s.text, "order": s.order.to_string(), "cyclic": s.cyclic})).collect::<Vec<_>>(),
        "one_column_order": r.one_column_order().to_string(),
        "two_column_rank": r.two_column_rank,
    })
}

fn table(n: Option<u32>, up_to: Option<u32>) -> Result<Output, CliError> {
    let rows = match (n, up_to) {
        (Some(n), _) => vec![KerApTable.lookup(n).map_err(compute)?],
        (None, up) => KerApTable.rows(up.unwrap_or(16)).map_err(compute)?,
    };
    let mut text = String::new();
    for r in &rows {
        let one: Vec<String> = r.one_column.iter().map(|s| s.order.to_string()).collect();
        let cyc: Vec<String> = r
            .one_column
            .iter()
            .zip(&one)
            .map(|(s, o)| if s.cyclic { format!("[{o}]") } else { o.clone() })
            .collect();
        text.push_str(&format!(
            "n={} ({}) one-column: {} (order {}) two-column rank: {}\n",
            r.n,
            r.pattern,
            if cyc.is_empty() { "0".to_string() } else { cyc.join(", ") },
            fmt_order(&r.one_column_order().into()),
            r.two_column_rank
        ));
    }
    Ok(Output::new(text, Value::Array(rows.iter().map(row_json).collect())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_names() {
        use etakit::eta::EtaError;
        use etakit::grouprep::GroupError;
        let e = EtaError::Group(GroupError::NotFree("x".into()));
        assert!(matches!(compute(e), CliError::Compute { name, .. } if name == "NotFree"));
        let e = etakit::f2ring::F2Error::DegreeBoundExceeded { degree: 70, bound: 64 };
        assert!(matches!(compute(e), CliError::Compute { name, .. } if name == "DegreeBoundExceeded"));
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("--value", "-7/8").unwrap().to_string(), "-7/8");
        assert!(parse_rational("--value", "1/0").is_err());
        assert!(parse_rational("--value", "x").is_err());
    }
}
