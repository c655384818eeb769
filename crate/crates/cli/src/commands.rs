//! Subcommand implementations.

use chopf_core::colorcore::{ColorMonoid, ColoredPerm, ColoredPf, Composition};
use chopf_core::enumerate::{self, canonical, cross_check, enumerate_count, NAMES};
use chopf_core::fqsym::{self, connected_colored_perms, f_to_g_element, g_to_f_element, internal_suite, Basis, Phi};
use chopf_core::linear::laws::{adjunction_exhaustive, bounded_suite};
use chopf_core::linear::{Bialgebra, Element};
use chopf_core::pbt::{self, p_element_of, ColoredTree};
use chopf_core::pqsym::connected_colored_pfs;
use chopf_core::pqsym::typeb::{enumerate_level2, f_to_p, p_to_f_element, typeb_closure_check, NcbKey};
use chopf_core::special::klyachko::specialize_single;
use chopf_core::special::{self, lagrange};
use chopf_core::symql::{g_to_s, s_embed_element, s_internal, s_internal_via_embedding, ColoredComposition, VectorComposition};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::algebras::{self as a, Kind, Surface, E};
use crate::literal::parse_terms;
use crate::{with_surface, CliError, CliResult, Command};

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn monoid(s: &str) -> Result<ColorMonoid, CliError> {
    s.parse().map_err(|e: chopf_core::Error| usage(e.to_string()))
}

/// A number of colors given as `l` or `mod:l`.
fn level(s: &str) -> Result<u32, CliError> {
    let t = s.trim();
    let t = t.strip_prefix("mod:").unwrap_or(t);
    match t.parse::<u32>() {
        Ok(l) if l >= 1 => Ok(l),
        _ => Err(usage(format!("expected a number of colors, got `{s}`"))),
    }
}

fn kind_of(algebra: &Option<String>, literal: &str) -> Result<Kind, CliError> {
    if let Some(name) = algebra {
        return name.parse().map_err(usage);
    }
    let terms = parse_terms(literal).map_err(|e| usage(format!("{e} in `{literal}`")))?;
    let tag = terms
        .iter()
        .find_map(|t| t.tag.clone())
        .ok_or_else(|| usage("cannot infer the algebra from a scalar; pass --algebra"))?;
    Kind::from_tag(&tag).ok_or_else(|| usage(format!("unknown basis tag `{tag}`")))
}

fn emit<S: Surface>(s: &S, x: &E<S>, json: bool) -> String {
    if json {
        s.json(x).to_string()
    } else {
        s.render(x)
    }
}

fn parse<S: Surface>(s: &S, src: &str) -> Result<E<S>, CliError> {
    s.parse(src).map_err(usage)
}

fn product<S: Surface>(s: &S, elements: &[String], json: bool) -> CliResult {
    let xs = elements.iter().map(|e| parse(s, e)).collect::<Result<Vec<_>, _>>()?;
    Ok(emit(s, &s.alg().product_all(&xs), json))
}

fn coproduct<S: Surface>(s: &S, element: &str, json: bool) -> CliResult {
    let d = s.alg().coproduct(&parse(s, element)?);
    Ok(if json { s.tensor_json(&d).to_string() } else { s.render_tensor(&d) })
}

fn internal<S: Surface>(s: &S, left: &str, right: &str, json: bool) -> CliResult {
    let p = s.internal(&parse(s, left)?, &parse(s, right)?).map_err(usage)?;
    Ok(emit(s, &p, json))
}

fn failed(e: impl ToString) -> CliError {
    usage(e.to_string())
}

fn convert(kind: Kind, m: ColorMonoid, to: &str, phi: &str, element: &str, json: bool) -> CliResult {
    let target = Kind::from_tag(to).ok_or_else(|| usage(format!("unknown target tag `{to}`")))?;
    let phi = match phi {
        "identity" | "id" => Phi::Identity,
        "inverse" | "inv" => Phi::Inverse,
        other => return Err(usage(format!("unknown relabeling `{other}`"))),
    };
    match (kind, target) {
        (Kind::FqsymG, Kind::FqsymF) => {
            let x = parse(&a::fqsym_g(m), element)?;
            Ok(emit(&a::fqsym_f(m), &g_to_f_element(&x, m, phi).map_err(failed)?, json))
        }
        (Kind::FqsymF, Kind::FqsymG) => {
            let x = parse(&a::fqsym_f(m), element)?;
            Ok(emit(&a::fqsym_g(m), &f_to_g_element(&x, m, phi).map_err(failed)?, json))
        }
        (Kind::Sym, Kind::FqsymG) => {
            let x = parse(&a::sym(m).map_err(usage)?, element)?;
            Ok(emit(&a::fqsym_g(m), &s_embed_element(&x, m).map_err(failed)?, json))
        }
        (Kind::FqsymG, Kind::Sym) => {
            let x = parse(&a::fqsym_g(m), element)?;
            Ok(emit(&a::sym(m).map_err(usage)?, &g_to_s(&x, m).map_err(failed)?, json))
        }
        (Kind::Mr, Kind::Sym) => {
            let x = parse(&a::mr(m).map_err(usage)?, element)?;
            Ok(emit(&a::sym(m).map_err(usage)?, &x.map_keys(ColoredComposition::to_vector), json))
        }
        (Kind::Ncb, Kind::PqsymF) => {
            let x = parse(&a::ncb(m).map_err(usage)?, element)?;
            Ok(emit(&a::pqsym_f(m), &p_to_f_element(&x), json))
        }
        (Kind::PqsymF, Kind::Ncb) => {
            let x = parse(&a::pqsym_f(m), element)?;
            Ok(emit(&a::ncb(m).map_err(usage)?, &f_to_p(&x).map_err(failed)?, json))
        }
        (Kind::Pbt, Kind::FqsymF) => {
            let x = parse(&a::pbt(m), element)?;
            Ok(emit(&a::fqsym_f(m), &p_element_of(&x), json))
        }
        (Kind::FqsymF, Kind::Pbt) => {
            let x = parse(&a::fqsym_f(m), element)?;
            Ok(emit(&a::pbt(m), &pbt::f_to_p(&x).map_err(failed)?, json))
        }
        (from, to) => Err(usage(format!("no conversion from {} to {}", from.name(), to.name()))),
    }
}

fn series(name: &str, order: Option<usize>, l: u32, json: bool) -> CliResult {
    let key = canonical(name).ok_or_else(|| usage(unknown_series(name)))?;
    let order = order.unwrap_or_else(enumerate::default_order);
    if order > enumerate::MAX_ORDER {
        return Err(usage(format!("order {order} exceeds {}", enumerate::MAX_ORDER)));
    }
    let s = enumerate::series(key, order, l).map_err(failed)?;
    Ok(if json {
        let coeffs: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
        json!({"name": key, "l": l, "order": order, "coefficients": coeffs}).to_string()
    } else {
        s.to_string()
    })
}

fn unknown_series(name: &str) -> String {
    let names: Vec<&str> = NAMES.iter().map(|n| n.0).collect();
    format!("unknown series `{name}` (expected one of {})", names.join(", "))
}

fn objects(key: &str, n: usize, l: u32) -> Option<Vec<String>> {
    let palette: Vec<i64> = (0..l as i64).collect();
    let m = ColorMonoid::Cyclic(l);
    let show = |tag: &str, items: Vec<String>| items.into_iter().map(|s| format!("{tag}[{s}]")).collect::<Vec<_>>();
    let strings = |v: Vec<String>| v;
    Some(match key {
        "level2_pf" => show("Fp", enumerate_level2(n).iter().map(ColoredPf::to_string).collect()),
        "colored_pf" => show("Fp", ColoredPf::all(n, &palette).iter().map(ColoredPf::to_string).collect()),
        "connected_pf" => show("Fp", connected_colored_pfs(n, &palette).iter().map(ColoredPf::to_string).collect()),
        "ncb" => show("Pb", NcbKey::all(n, l).iter().map(NcbKey::to_string).collect()),
        "fqsym_hilbert" => show("G", ColoredPerm::all(n, &palette).iter().map(ColoredPerm::to_string).collect()),
        "connected" | "fqsym_gen" => show("G", connected_colored_perms(n, &palette).iter().map(ColoredPerm::to_string).collect()),
        "pbt_hilbert" => show("P", ColoredTree::all(n, &palette).iter().map(ColoredTree::to_string).collect()),
        "pbt_gen" => show("P", ColoredTree::generators(n, &palette).iter().map(ColoredTree::to_string).collect()),
        "sym_hilbert" => strings(
            VectorComposition::all(n, l as usize)
                .iter()
                .map(|k| a::sym(m).map(|s| s.show(k)).unwrap_or_default())
                .collect(),
        ),
        "mr_hilbert" => show("Smr", ColoredComposition::all(n, l).iter().map(ColoredComposition::to_string).collect()),
        _ => return None,
    })
}

fn enumerate(name: &str, n: usize, l: u32, count_only: bool, json: bool) -> CliResult {
    let key = canonical(name).ok_or_else(|| usage(unknown_series(name)))?;
    let count = enumerate_count(key, n, l).map_err(failed)?;
    let list = if count_only { None } else { objects(key, n, l) };
    if json {
        let mut v = json!({"name": key, "n": n, "l": l, "count": count.to_string()});
        if let Some(list) = list {
            v["objects"] = Value::from(list);
        }
        return Ok(v.to_string());
    }
    Ok(match list {
        Some(list) if !list.is_empty() => list.join("\n"),
        _ => count.to_string(),
    })
}

fn check(name: &str, n: usize, l: u32) -> CliResult {
    let c = cross_check(name, n, l).map_err(failed)?;
    if c.agrees() {
        Ok(c.to_string())
    } else {
        Err(CliError::Failed(c.to_string()))
    }
}

pub struct VerifyOpts {
    pub algebra: Option<String>,
    pub monoid: ColorMonoid,
    pub max: usize,
    pub trials: usize,
    pub seed: u64,
}

fn hopf<S: Surface>(s: &S, o: &VerifyOpts) -> Result<(), String> {
    bounded_suite(s.alg(), o.max, o.max, o.trials, o.seed)
}

fn duality(kind: Kind, m: ColorMonoid, max: usize) -> Result<Result<(), String>, CliError> {
    let both = |r1: Result<(), String>, r2: Result<(), String>| r1.and(r2);
    Ok(match kind {
        Kind::FqsymG | Kind::FqsymF => {
            let (g, f) = (a::fqsym_g(m), a::fqsym_f(m));
            both(adjunction_exhaustive(g.alg(), f.alg(), max), adjunction_exhaustive(f.alg(), g.alg(), max))
        }
        Kind::Sym | Kind::QSym => {
            let (s, q) = (a::sym(m).map_err(usage)?, a::qsym(m).map_err(usage)?);
            both(adjunction_exhaustive(s.alg(), q.alg(), max), adjunction_exhaustive(q.alg(), s.alg(), max))
        }
        Kind::Mr | Kind::MrDual => {
            let (s, d) = (a::mr(m).map_err(usage)?, a::mr_dual(m).map_err(usage)?);
            both(adjunction_exhaustive(s.alg(), d.alg(), max), adjunction_exhaustive(d.alg(), s.alg(), max))
        }
        Kind::PqsymG | Kind::PqsymF => {
            let (g, f) = (a::pqsym_g(m), a::pqsym_f(m));
            both(adjunction_exhaustive(g.alg(), f.alg(), max), adjunction_exhaustive(f.alg(), g.alg(), max))
        }
        Kind::Ncb | Kind::Pbt => return Err(usage(format!("{} has no dual basis here", kind.name()))),
    })
}

fn embedding(m: ColorMonoid, max: usize) -> Result<(), String> {
    let rows = m.order().map(|l| l as usize).unwrap_or(2);
    for n in 1..=max {
        let keys = VectorComposition::all(n, rows);
        for i in &keys {
            for j in &keys {
                let x: Element<VectorComposition, BigInt> = Element::basis(i.clone());
                let y = Element::basis(j.clone());
                let direct = s_internal(&x, &y, m).map_err(|e| e.to_string())?;
                let via = s_internal_via_embedding(&x, &y, m).map_err(|e| e.to_string())?;
                if direct != via {
                    return Err(format!("S[{i}] * S[{j}]: splitting formula and embedding differ"));
                }
            }
        }
    }
    Ok(())
}

fn klyachko_suite(max: usize) -> Result<(), String> {
    for n in 1..=max {
        if special::klyachko_multi(n) != special::klyachko_multi_via_s(n) {
            return Err(format!("n = {n}: the two multiparameter constructions differ"));
        }
        if specialize_single(&special::klyachko_multi_ribbon(n)) != special::klyachko_ribbon(n) {
            return Err(format!("n = {n}: q_i -> q does not give K_n(q)"));
        }
        if !special::primitivity_check(n) {
            return Err(format!("n = {n}: K_n is not primitive modulo the cyclotomic polynomial"));
        }
    }
    Ok(())
}

fn theta_suite(max: usize, l_max: i64) -> Result<(), String> {
    let t = special::theta(l_max, max);
    if !special::grouplike_defect(&t, max).is_empty() {
        return Err(format!("Θ is not grouplike to degree {max}"));
    }
    if t != special::theta_by_descents(l_max, max) {
        return Err("Θ differs from its descent form".into());
    }
    Ok(())
}

fn lagrange_suite(max: usize, l: u32) -> Result<(), String> {
    match lagrange::lagrange_defect(max, l).iter().position(|d| !d.is_empty()) {
        Some(d) => Err(format!("g − Σ S_n g^n is nonzero in degree {d}")),
        None => Ok(()),
    }
}

fn raney_suite(max: usize, l: u32) -> Result<(), String> {
    for n in 0..=max {
        let lhs = raney_scaled(n, l);
        if lhs != lagrange::raney_closed(n, l) {
            return Err(format!("n = {n}, l = {l}: Lagrange inversion and the closed formula differ"));
        }
    }
    Ok(())
}

fn raney_scaled(n: usize, l: u32) -> chopf_core::QPoly {
    let f = BigRational::from(chopf_core::colorcore::util::factorial(n as u64));
    lagrange::raney_coefficient(n, l) * chopf_core::QPoly::constant(f)
}

fn series_suite(max: usize, l: u32) -> Result<(), String> {
    for (name, _) in NAMES {
        for n in 1..=max {
            match cross_check(name, n, l) {
                Ok(c) if !c.agrees() => return Err(c.to_string()),
                _ => {}
            }
        }
    }
    Ok(())
}

fn verify(suite: &str, o: &VerifyOpts) -> CliResult {
    let l = o.monoid.order().unwrap_or(2);
    let need_kind = || -> Result<Kind, CliError> {
        o.algebra.as_deref().ok_or_else(|| usage(format!("`verify {suite}` needs --algebra")))?.parse().map_err(usage)
    };
    let outcome: Result<(), String> = match suite {
        "hopf" => with_surface!(need_kind()?, o.monoid, s => hopf(&s, o)),
        "duality" => duality(need_kind()?, o.monoid, o.max)?,
        "internal" => {
            let palette = o.monoid.palette(2);
            internal_suite(Basis::F, o.monoid, &palette, o.max).and_then(|_| internal_suite(Basis::G, o.monoid, &palette, o.max))
        }
        "embedding" => embedding(o.monoid, o.max),
        "typeb" => typeb_closure_check(o.max),
        "klyachko" => klyachko_suite(o.max),
        "theta" => theta_suite(o.max, 3),
        "lagrange" => lagrange_suite(o.max, l),
        "raney" => raney_suite(o.max, l),
        "series" => series_suite(o.max, l),
        "all" => {
            let mut lines = Vec::new();
            let mut ok = true;
            for s in ["typeb", "klyachko", "theta", "lagrange", "raney", "series", "internal"] {
                let r = verify(s, o);
                ok &= r.is_ok();
                lines.push(match r {
                    Ok(line) => line,
                    Err(CliError::Failed(line)) | Err(CliError::Usage(line)) => line,
                });
            }
            for (kind, name, _) in a::KINDS {
                let sub = VerifyOpts { algebra: Some(name.to_string()), ..*o };
                for s in ["hopf", "duality"] {
                    if s == "duality" && kind.dual().is_none() {
                        continue;
                    }
                    match verify(s, &sub) {
                        Ok(line) => lines.push(line),
                        Err(CliError::Failed(line)) => {
                            ok = false;
                            lines.push(line);
                        }
                        Err(CliError::Usage(_)) => {}
                    }
                }
            }
            let text = lines.join("\n");
            return if ok { Ok(text) } else { Err(CliError::Failed(text)) };
        }
        other => return Err(usage(format!("unknown suite `{other}`"))),
    };
    let what = match &o.algebra {
        Some(alg) if matches!(suite, "hopf" | "duality") => format!("{suite} {alg} {}", o.monoid),
        _ => suite.to_string(),
    };
    match outcome {
        Ok(()) => Ok(format!("{what} max-size {}: ok", o.max)),
        Err(e) => Err(CliError::Failed(format!("{what} max-size {}: FAILED: {e}", o.max))),
    }
}

fn poly_json<K: ToString>(x: &Element<K, chopf_core::ZPoly>, tag: &str) -> Value
where
    K: chopf_core::linear::BasisKey,
{
    let terms: Vec<Value> = x.iter().map(|(k, c)| json!({"coeff": c.to_string(), "key": format!("{tag}[{}]", k.to_string())})).collect();
    json!({"terms": terms})
}

fn klyachko(n: usize, multi: bool, ribbon: bool, json: bool) -> CliResult {
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let comp = |tag: &'static str| move |k: &Composition| format!("{tag}[{k}]");
    if multi && !ribbon {
        let x = special::klyachko_multi(n);
        let g = a::fqsym_g(ColorMonoid::Integers);
        let x = x.map_coeffs(|c| BigRational::from(c.clone()));
        return Ok(emit(&g, &x, json));
    }
    let (x, tag) = match (multi, ribbon) {
        (true, _) => (special::klyachko_multi_ribbon(n), "R"),
        (false, true) => (special::klyachko_ribbon(n), "R"),
        (false, false) => (special::klyachko(n), "S"),
    };
    Ok(if json { poly_json(&x, tag).to_string() } else { x.render_with(comp(tag)) })
}

fn raney(n: usize, l: u32) -> CliResult {
    let coeff = lagrange::raney_coefficient(n, l);
    let closed = lagrange::raney_closed(n, l);
    let text = format!("[t^{}] g = {coeff}\ng_{n} = {closed}", n + 1);
    if raney_scaled(n, l) == closed {
        Ok(format!("{text}\nn! [t^{}] g = g_{n}: ok", n + 1))
    } else {
        Err(CliError::Failed(format!("{text}\nn! [t^{}] g != g_{n}", n + 1)))
    }
}

fn theta(deg: usize, l_max: i64, json: bool) -> CliResult {
    if l_max < 0 {
        return Err(usage("--lmax must be nonnegative"));
    }
    let t = special::theta(l_max, deg).map_coeffs(|c| BigRational::from(c.clone()));
    let g = a::fqsym_g(ColorMonoid::Naturals);
    let grouplike = special::grouplike_defect(&special::theta(l_max, deg), deg).is_empty();
    if json {
        let mut v = g.json(&t);
        v["grouplike"] = Value::from(grouplike);
        return Ok(v.to_string());
    }
    let text = format!("{}\ngrouplike to degree {deg}: {}", emit(&g, &t, false), if grouplike { "ok" } else { "FAILED" });
    if grouplike {
        Ok(text)
    } else {
        Err(CliError::Failed(text))
    }
}

pub fn run(cmd: Command) -> CliResult {
    match cmd {
        Command::Product { opts, elements } => {
            let m = monoid(&opts.colors)?;
            let kind = kind_of(&opts.algebra, &elements[0])?;
            with_surface!(kind, m, s => product(&s, &elements, opts.json))
        }
        Command::Coproduct { opts, element } => {
            let m = monoid(&opts.colors)?;
            let kind = kind_of(&opts.algebra, &element)?;
            with_surface!(kind, m, s => coproduct(&s, &element, opts.json))
        }
        Command::Internal { opts, left, right } => {
            let m = monoid(&opts.colors)?;
            let kind = kind_of(&opts.algebra, &left)?;
            with_surface!(kind, m, s => internal(&s, &left, &right, opts.json))
        }
        Command::Convert { opts, to, phi, element } => {
            let m = monoid(&opts.colors)?;
            let kind = kind_of(&opts.algebra, &element)?;
            convert(kind, m, &to, &phi, &element, opts.json)
        }
        Command::Series { name, order, colors, json } => series(&name, order, level(&colors)?, json),
        Command::Enumerate { name, n, colors, count, json } => enumerate(&name, n, level(&colors)?, count, json),
        Command::Check { name, n, colors } => check(&name, n, level(&colors)?),
        Command::Verify { suite, algebra, colors, max_size, trials, seed } => {
            let o = VerifyOpts { algebra, monoid: monoid(&colors)?, max: max_size, trials, seed };
            verify(&suite, &o)
        }
        Command::Klyachko { n, multi, ribbon, json } => klyachko(n, multi, ribbon, json),
        Command::Raney { n, colors } => raney(n, level(&colors)?),
        Command::Theta { deg, lmax, json } => theta(deg, lmax, json),
    }
}

#[allow(dead_code)]
fn unused(_: fqsym::Basis) {}
