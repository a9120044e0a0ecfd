use serde_json::{json, Value};
use ucf_core::conjecture::{
    check_equivalences, exhaustive_graph_verify, find_witness, greedy_cover, log_cover_bound,
    minimal_cover_boolean, minimal_covers, small_counterexample_scan, sufficient_conditions,
    ScanReport, WitnessKind,
};
use ucf_core::density::{
    check_local, closure, e_set, min_mu, min_mu_below_two, mu, neighborhoods, product_bound,
    product_bound_counted, ExtensionSpec,
};
use ucf_core::io::write_family;
use ucf_core::lattice::{generators, join_irreducibles, meet_irreducibles};
use ucf_core::pdensity::{
    has_p_density_property, matching_sweep, matching_witness, p_density, poset_filter_count,
};
use ucf_core::wojcik::{
    s_m_bruteforce, t_n_bruteforce, u_family, u_of_n, u_order_property_check, SmStrategy,
};
use ucf_core::{ElementSet, LatticeView, Rational, SetFamily};

use crate::render::{self, braces, human, labels, pq, sets, Loaded};
use crate::{
    CheckCmd, CommandResult, CoverCmd, DensityCmd, FamCmd, IrreducibleKind, MatchingArgs, Noun,
    PdensityArgs, ScanCmd, Status, WojcikCmd,
};

pub(crate) fn dispatch(noun: &Noun) -> CommandResult {
    let out = match noun {
        Noun::Fam(c) => fam(c),
        Noun::Density(c) => density(c),
        Noun::Check(c) => check(c),
        Noun::Cover(c) => cover(c),
        Noun::Scan(c) => scan(c),
        Noun::Pdensity(a) => pdensity(a),
        Noun::Matching(a) => matching(a),
        Noun::Wojcik(c) => wojcik(c),
    };
    out.unwrap_or_else(|e| e)
}

/// Lifts core errors into results inside the command functions.
trait OrResult<T> {
    fn or_result(self) -> Loaded<T>;
}

impl<T> OrResult<T> for ucf_core::Result<T> {
    fn or_result(self) -> Loaded<T> {
        self.map_err(CommandResult::from)
    }
}

/// A violation found while checking `f`, with the family attached.
fn with_family(mut r: CommandResult, f: &SetFamily) -> CommandResult {
    if r.status == Status::Fails {
        if let Value::Object(map) = &mut r.payload {
            map.insert("family".into(), Value::String(write_family(f)));
        }
    }
    r
}

fn on_family<T>(f: &SetFamily, r: ucf_core::Result<T>) -> Loaded<T> {
    r.map_err(|e| with_family(CommandResult::from(e), f))
}

fn fam(c: &FamCmd) -> Loaded<CommandResult> {
    match c {
        FamCmd::Stats { file } => {
            let f = render::family(file)?;
            let u = f.universe();
            let degrees: serde_json::Map<String, Value> = (0..u.width())
                .map(|x| (u.label(x).to_string(), json!(f.element_degree(x))))
                .collect();
            let flags = f.flags();
            let payload = json!({
                "members": f.len(),
                "universe": u.labels(),
                "ground": labels(&f, f.ground()),
                "union_closed": flags.union_closed,
                "intersection_closed": flags.intersection_closed,
                "contains_empty": flags.contains_empty,
                "total_size": f.total_size(),
                "graph_generated": f.is_union_closed() && generators(&f).map(|g| g.is_graph()).unwrap_or(false),
                "degrees": degrees,
            });
            let text = format!(
                "{} members over {} elements\nunion-closed: {}\nintersection-closed: {}\ncontains ∅: {}\ntotal size: {}\ndegrees: {}",
                f.len(),
                u.width(),
                flags.union_closed,
                flags.intersection_closed,
                flags.contains_empty,
                f.total_size(),
                (0..u.width())
                    .map(|x| format!("{}={}", u.label(x), f.element_degree(x)))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            Ok(CommandResult::holds(payload, text))
        }
        FamCmd::CheckClosed { file } => {
            let f = render::family(file)?;
            let gap = f.iter().enumerate().find_map(|(i, a)| {
                f.members()[i + 1..]
                    .iter()
                    .find(|&&b| !f.contains(a | b))
                    .map(|&b| (a, b))
            });
            Ok(match gap {
                None => CommandResult::holds(json!({ "union_closed": true }), "union-closed"),
                Some((a, b)) => CommandResult::new(
                    Status::Fails,
                    json!({
                        "union_closed": false,
                        "pair": sets(&f, [a, b]),
                        "missing_union": labels(&f, a | b),
                        "family": write_family(&f),
                    }),
                    format!(
                        "not union-closed: {} ∪ {} = {} is missing",
                        f.universe().render(a),
                        f.universe().render(b),
                        f.universe().render(a | b)
                    ),
                ),
            })
        }
        FamCmd::Irreducibles { file, kind } => {
            let f = render::family(file)?;
            let g = match kind {
                IrreducibleKind::Join => join_irreducibles(&f),
                IrreducibleKind::Generators => generators(&f),
                IrreducibleKind::Meet => meet_irreducibles(&f),
            }
            .or_result()?;
            let text = g
                .iter()
                .map(|m| f.universe().render_line(m))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(CommandResult::holds(
                json!({ "count": g.len(), "members": sets(&f, g.iter()) }),
                text,
            ))
        }
        FamCmd::Transpose { file } => {
            let f = render::family(file)?;
            let t = f.transpose();
            let u = f.universe();
            let rows: serde_json::Map<String, Value> = t
                .rows
                .iter()
                .enumerate()
                .map(|(x, r)| (u.label(x).to_string(), json!(r)))
                .collect();
            let mut text: Vec<String> = t
                .rows
                .iter()
                .enumerate()
                .map(|(x, r)| format!("{}: {:?}", u.label(x), r))
                .collect();
            text.push(format!(
                "simple: {}\nprimitive: {}",
                t.is_simple(),
                t.is_primitive()
            ));
            Ok(CommandResult::holds(
                json!({ "rows": rows, "simple": t.is_simple(), "primitive": t.is_primitive() }),
                text.join("\n"),
            ))
        }
    }
}

fn density(c: &DensityCmd) -> Loaded<CommandResult> {
    match c {
        DensityCmd::Closure { file, x } => {
            let f = render::family(file)?;
            let x = render::set(&f, x)?;
            let (p, iso) = closure(&f, x).or_result()?;
            let u = f.universe();
            Ok(CommandResult::holds(
                json!({ "pi": labels(&f, p), "isolated": labels(&f, iso), "in_family": f.contains(x) }),
                format!(
                    "π = {}\nisolated = {}\nin family: {}",
                    u.render(p),
                    u.render(iso),
                    f.contains(x)
                ),
            ))
        }
        DensityCmd::Esets { at, x } => {
            let f = render::family(&at.file)?;
            let u = render::set(&f, &at.u)?;
            let xs: Vec<ElementSet> = if x.is_empty() {
                let s = neighborhoods(&f, u).or_result()?.n2 - u;
                s.subsets().collect()
            } else {
                x.iter()
                    .map(|t| render::set(&f, t))
                    .collect::<Loaded<_>>()?
            };
            let mut rows = Vec::new();
            let mut text = Vec::new();
            for x in xs {
                let e = e_set(&f, u, x).or_result()?;
                text.push(format!(
                    "E({}) = {{{}}}",
                    f.universe().render(x),
                    braces(&f, e.iter())
                ));
                rows.push(json!({ "x": labels(&f, x), "e": sets(&f, e.iter()) }));
            }
            Ok(CommandResult::holds(
                json!({ "u": labels(&f, u), "e_sets": rows }),
                text.join("\n"),
            ))
        }
        DensityCmd::Mu { at, h } => {
            let f = render::family(&at.file)?;
            let u = render::set(&f, &at.u)?;
            let h = render::family_on(&f, h)?;
            let ext = on_family(&f, ExtensionSpec::new(&f, h, u))?;
            let r = on_family(&f, mu(&f, &ext, u))?;
            let payload = json!({
                "mu": pq(&r.mu),
                "rho": pq(&r.rho),
                "one_over_rho": r.one_over_rho.render(),
                "u_is_generator": r.u_is_generator,
                "extension_size": ext.joined().len(),
            });
            let text = format!(
                "μ = {}\nρ = {}\n1/ρ = {}",
                human(&r.mu),
                human(&r.rho),
                r.one_over_rho.render()
            );
            Ok(CommandResult::holds(payload, text))
        }
        DensityCmd::MinMu { at, cap, fast } => {
            let f = render::family(&at.file)?;
            let u = render::set(&f, &at.u)?;
            if *fast {
                let found = min_mu_below_two(&f, u, *cap).or_result()?;
                let (payload, text) = match &found {
                    Some((v, h)) => (
                        json!({ "below_two": true, "value": pq(v), "witness": sets(&f, h.iter()) }),
                        format!(
                            "μ = {} below 2\nwitness filter {}",
                            human(v),
                            braces(&f, h.iter())
                        ),
                    ),
                    None => (
                        json!({ "below_two": false }),
                        "no qualifying filter gives μ < 2".into(),
                    ),
                };
                return Ok(CommandResult::holds(payload, text));
            }
            let m = min_mu(&f, u, *cap).or_result()?;
            let payload = json!({
                "min_mu": pq(&m.value),
                "witness": sets(&f, m.witness.iter()),
                "ground": labels(&f, m.ground),
                "filters_scanned": m.filters_scanned,
            });
            let text = format!(
                "min μ = {}\nwitness filter {}\n{} filters of 2^{} scanned",
                human(&m.value),
                braces(&f, m.witness.iter()),
                m.filters_scanned,
                f.universe().render(m.ground)
            );
            Ok(CommandResult::holds(payload, text))
        }
        DensityCmd::Bound { at, brute, cap } => {
            let f = render::family(&at.file)?;
            let u = render::set(&f, &at.u)?;
            let b = product_bound(&f, u).or_result()?;
            if !*brute {
                return Ok(CommandResult::holds(
                    json!({ "bound": pq(&b) }),
                    format!("bound = {}", human(&b)),
                ));
            }
            let counted = product_bound_counted(&f, u, *cap).or_result()?;
            let same = counted == b;
            let r = CommandResult::verdict(
                same,
                json!({ "bound": pq(&b), "counted": pq(&counted), "agree": same }),
                format!("bound = {}\ncounted = {}", human(&b), human(&counted)),
            );
            Ok(with_family(r, &f))
        }
        DensityCmd::Local { at, gprime, cap } => {
            let f = render::family(&at.file)?;
            let u = render::set(&f, &at.u)?;
            let g = gprime
                .as_deref()
                .map(|p| render::family_on(&f, p))
                .transpose()?;
            let v = on_family(&f, check_local(&f, u, g.as_ref(), *cap))?;
            let payload = json!({
                "degree_hypothesis": v.degree_hypothesis,
                "local_hypothesis": v.local_graph_hypothesis,
                "guaranteed": v.guaranteed,
                "rho": pq(&v.actual_rho),
                "min_mu": v.min_mu.as_ref().map(pq),
            });
            let text = format!(
                "degree hypothesis: {}\nlocal graph hypothesis: {}\nρ = {}\nmin μ = {}",
                v.degree_hypothesis,
                v.local_graph_hypothesis,
                human(&v.actual_rho),
                v.min_mu.as_ref().map_or("above cap".to_string(), human)
            );
            Ok(CommandResult::holds(payload, text))
        }
    }
}

fn check(c: &CheckCmd) -> Loaded<CommandResult> {
    match c {
        CheckCmd::Conjecture { file, generator } => {
            let f = render::family(file)?;
            let (target, kind) = if *generator {
                (f.with_empty(), WitnessKind::Generator)
            } else {
                (f.clone(), WitnessKind::Element)
            };
            let w = find_witness(&target, kind).or_result()?;
            let name = f.universe().render_line(w.witness);
            let payload = json!({
                "witness": labels(&f, w.witness),
                "degree": w.degree,
                "members": target.len(),
                "threshold": pq(&w.threshold),
                "satisfied": w.satisfied,
            });
            let text = format!(
                "{}: witness {}, degree {} of {} members (threshold {})",
                if w.satisfied { "holds" } else { "fails" },
                name,
                w.degree,
                target.len(),
                human(&w.threshold)
            );
            Ok(with_family(
                CommandResult::verdict(w.satisfied, payload, text),
                &f,
            ))
        }
        CheckCmd::Sufficient { file } => {
            let f = render::family(file)?;
            let g = if f.is_intersection_closed() {
                f.clone()
            } else {
                f.complement()
            };
            let r = on_family(&f, sufficient_conditions(&g))?;
            let witness = r
                .witness
                .map(|(x, d)| json!({ "element": g.universe().label(x), "degree": d }));
            let payload = json!({
                "removal_applies": r.removal_applies,
                "removal_pair": r.removal_pair.map(|(x, y)| [g.universe().label(x), g.universe().label(y)]),
                "average_applies": r.average_applies,
                "average_size": pq(&r.average_size),
                "half_ground": pq(&r.half_ground),
                "witness": witness,
            });
            let text = format!(
                "removal condition: {}\naverage condition: {} (average {} vs {})\nwitness: {}",
                r.removal_applies,
                r.average_applies,
                human(&r.average_size),
                human(&r.half_ground),
                r.witness.map_or("none".to_string(), |(x, d)| format!(
                    "{} in {} members",
                    g.universe().label(x),
                    d
                ))
            );
            Ok(CommandResult::holds(payload, text))
        }
        CheckCmd::Equivalences { file } => {
            let f = render::family(file)?;
            let e = on_family(&f, check_equivalences(&f))?;
            let payload = serde_json::to_value(e).expect("plain struct");
            let text = format!(
                "element form: {}\ncomplement form: {}\nlattice form: {}\ngenerator form: {}",
                e.element_form, e.complement_form, e.lattice_form, e.generator_form
            );
            Ok(with_family(
                CommandResult::verdict(e.agree, payload, text),
                &f,
            ))
        }
    }
}

fn cover(c: &CoverCmd) -> Loaded<CommandResult> {
    match c {
        CoverCmd::Greedy { file } => {
            let f = render::family(file)?;
            let picks = on_family(&f, greedy_cover(&f))?;
            let bound = log_cover_bound(f.with_empty().len());
            let names: Vec<&str> = picks.iter().map(|&x| f.universe().label(x)).collect();
            Ok(CommandResult::holds(
                json!({ "cover": names, "size": picks.len(), "bound": bound }),
                format!(
                    "greedy cover {} (size {} ≤ {bound})",
                    names.join(" "),
                    picks.len()
                ),
            ))
        }
        CoverCmd::Minimal { file } => {
            let f = render::family(file)?;
            let covers = minimal_covers(&f).or_result()?;
            on_family(&f, minimal_cover_boolean(&f))?;
            let bound = log_cover_bound(f.with_empty().len());
            Ok(CommandResult::holds(
                json!({ "covers": sets(&f, covers.iter().copied()), "bound": bound }),
                format!(
                    "{} minimal covers: {}",
                    covers.len(),
                    braces(&f, covers.iter().copied())
                ),
            ))
        }
    }
}

fn scan_result(r: ScanReport, what: &str) -> CommandResult {
    let text_of = |f: &Option<SetFamily>| f.as_ref().map(write_family);
    let payload = json!({
        "scanned": r.scanned,
        "passed": r.passed,
        "vacuous": r.vacuous,
        "extremal_rho": r.extremal_rho.as_ref().map(pq),
        "extremal_family": text_of(&r.extremal_family),
        "violation": r.violation,
        "family": text_of(&r.witness_family),
    });
    let mut text = format!(
        "{} {what} scanned, {} passed ({} vacuous)",
        r.scanned, r.passed, r.vacuous
    );
    if let Some(x) = &r.extremal_rho {
        text.push_str(&format!("\nextremal density {}", human(x)));
    }
    if let (Some(v), Some(f)) = (&r.violation, &r.witness_family) {
        text.push_str(&format!("\nviolation: {v}\n{}", write_family(f)));
    }
    CommandResult::verdict(r.holds(), payload, text)
}

fn scan(c: &ScanCmd) -> Loaded<CommandResult> {
    Ok(match c {
        ScanCmd::Graphs {
            max_vertices,
            singletons,
        } => scan_result(
            exhaustive_graph_verify(*max_vertices, *singletons).or_result()?,
            "generator sets",
        ),
        ScanCmd::Families { max_universe, full } => scan_result(
            small_counterexample_scan(*max_universe, *full).or_result()?,
            "candidate families",
        ),
    })
}

fn element(l: &LatticeView, name: &str) -> Loaded<usize> {
    if let Some(i) = l.poset().index_of(name) {
        return Ok(i);
    }
    // Family lattices label members `{a,b}`; accept `a,b` or `a b` too.
    let wanted: Vec<&str> = name.split([',', ' ']).filter(|s| !s.is_empty()).collect();
    (0..l.len())
        .find(|&i| {
            let lab = l.label(i).trim_matches(|c| c == '{' || c == '}');
            lab.split(',').filter(|s| !s.is_empty()).collect::<Vec<_>>() == wanted
        })
        .ok_or_else(|| CommandResult::error(format!("no lattice element `{name}`")))
}

fn fails_with(mut r: CommandResult, source: &str) -> CommandResult {
    if r.status == Status::Fails {
        if let Value::Object(map) = &mut r.payload {
            map.insert("family".into(), Value::String(source.to_string()));
        }
    }
    r
}

fn pdensity(a: &PdensityArgs) -> Loaded<CommandResult> {
    let (l, source) = render::lattice(&a.lattice)?;
    let p = render::poset(&a.poset)?;
    let filters = poset_filter_count(&p).or_result()?;
    let bound = Rational::new(1, filters as i128);
    if let Some(name) = &a.witness {
        let x = element(&l, name)?;
        let d = p_density(&l, x, &p).or_result()?;
        let ok = d <= bound;
        let r = CommandResult::verdict(
            ok,
            json!({ "element": l.label(x), "density": pq(&d), "bound": pq(&bound) }),
            format!(
                "P-density at {} = {} (bound {})",
                l.label(x),
                human(&d),
                human(&bound)
            ),
        );
        return Ok(fails_with(r, &source));
    }
    let v = has_p_density_property(&l, &p).or_result()?;
    let payload = json!({
        "witness": v.witness.map(|w| l.label(w).to_string()),
        "best": l.label(v.best),
        "best_density": pq(&v.best_density),
        "bound": pq(&v.bound),
    });
    let text = format!(
        "{}: least P-density {} at {} (bound {})",
        if v.holds() { "holds" } else { "fails" },
        human(&v.best_density),
        l.label(v.best),
        human(&v.bound)
    );
    Ok(fails_with(
        CommandResult::verdict(v.holds(), payload, text),
        &source,
    ))
}

fn matching(a: &MatchingArgs) -> Loaded<CommandResult> {
    let (l, source) = render::lattice(&a.lattice)?;
    let p = render::poset(&a.poset)?;
    if a.all_a {
        let sweep = matching_sweep(&l, &p, a.full).or_result()?;
        let any = sweep.iter().any(|v| v.holds);
        let rows: Vec<Value> = sweep
            .iter()
            .map(|v| json!({ "a": l.label(v.a), "holds": v.holds, "failing": v.failing }))
            .collect();
        let text = sweep
            .iter()
            .map(|v| {
                format!(
                    "{}: {}",
                    l.label(v.a),
                    if v.holds { "matching" } else { "no matching" }
                )
            })
            .collect::<Vec<_>>()
            .join("\n");
        return Ok(fails_with(
            CommandResult::verdict(any, json!({ "verdicts": rows }), text),
            &source,
        ));
    }
    let w = matching_witness(&l, &p, a.full).or_result()?;
    let r = match w {
        Some(x) => CommandResult::holds(
            json!({ "a": l.label(x) }),
            format!("matching property holds at {}", l.label(x)),
        ),
        None => CommandResult::new(
            Status::Fails,
            json!({ "a": null }),
            "no join-irreducible has the matching property",
        ),
    };
    Ok(fails_with(r, &source))
}

fn wojcik(c: &WojcikCmd) -> Loaded<CommandResult> {
    match c {
        WojcikCmd::Un { n } => {
            let s = u_of_n(*n).or_result()?;
            let elems: Vec<usize> = s.iter().collect();
            Ok(CommandResult::holds(
                json!({ "n": n, "set": elems }),
                format!("U({n}) = {elems:?}"),
            ))
        }
        WojcikCmd::Family { n } => {
            let f = u_family(*n).or_result()?;
            let text = write_family(&f);
            Ok(CommandResult::holds(
                json!({ "n": n, "total_size": f.total_size(), "family": text }),
                text,
            ))
        }
        WojcikCmd::Tn { n, cap } => {
            let caps: Vec<usize> = cap.map_or(vec![3, 4], |c| vec![c]);
            let mut rows = Vec::new();
            let mut lines = Vec::new();
            let mut ok = true;
            for c in caps {
                let r = t_n_bruteforce(*n, c).or_result()?;
                ok &= r.t <= r.s_u;
                lines.push(format!(
                    "cap {c}: t_{n} = {}, initial segment {} ({})",
                    r.t,
                    r.s_u,
                    if r.consistent() {
                        "equal"
                    } else {
                        "smaller family found"
                    }
                ));
                rows.push(json!({
                    "cap": c,
                    "t": r.t,
                    "s_u": r.s_u,
                    "consistent": r.consistent(),
                    "minimizer": write_family(&r.minimizer),
                }));
            }
            Ok(CommandResult::verdict(
                ok,
                json!({ "n": n, "results": rows }),
                lines.join("\n"),
            ))
        }
        WojcikCmd::Sm { m } => {
            let a = s_m_bruteforce(*m, SmStrategy::Bitmask).or_result()?;
            let b = s_m_bruteforce(*m, SmStrategy::Closure).or_result()?;
            let agree = a.value == b.value && a.minimizer == b.minimizer;
            let payload = json!({
                "m": m,
                "value": pq(&a.value),
                "minimizer": write_family(&a.minimizer),
                "families": a.families,
                "strategies_agree": agree,
            });
            let text = format!(
                "s_{m} = {}\nminimizer {}\n{} families, strategies agree: {agree}",
                human(&a.value),
                braces(&a.minimizer, a.minimizer.iter()),
                a.families
            );
            Ok(CommandResult::verdict(agree, payload, text))
        }
        WojcikCmd::OrderCheck { bound } => {
            let ok = u_order_property_check(*bound).or_result()?;
            Ok(CommandResult::verdict(
                ok,
                json!({ "bound": bound, "holds": ok }),
                format!("order property below {bound}: {ok}"),
            ))
        }
    }
}
