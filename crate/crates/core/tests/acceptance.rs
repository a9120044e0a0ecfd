//! Acceptance suite: one pass/fail line per criterion. Values are exact
//! rationals; the only tolerances are the wall-clock limits printed with
//! each line.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use ucf_core::conjecture::{
    exhaustive_graph_verify, find_witness, small_counterexample_scan, WitnessKind,
};
use ucf_core::density::{
    check_local, count_filters, e_set_closure, e_set_generators, for_each_filter, kleitman_check,
    lattice_neighborhood, min_mu, min_mu_below_two, mu, neighborhoods, product_bound,
    product_bound_counted, rho, ExtensionSpec, NeighborhoodOrder,
};
use ucf_core::family::graph_family;
use ucf_core::lattice::join_irreducibles;
use ucf_core::pdensity::{
    class_density_audit, cycle_lattice, matching_sweep, named_corpus, p_density,
    preservation_harness, standard_posets,
};
use ucf_core::wojcik::{
    s_m_bruteforce, t_n_bruteforce, u_family, u_inverse, u_of_n, u_order_property_check, SmStrategy,
};
use ucf_core::{ElementSet, LatticeView, Poset, Rational, SetFamily, Universe};

type Outcome = Result<String, String>;

fn q(n: i128, d: i128) -> Rational {
    Rational::new(n, d)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: ucf_core::Error) -> String {
    e.to_string()
}

/// Edge sets of every labeled graph on `n` vertices (empty one excluded).
fn graphs(n: usize) -> Vec<(Arc<Universe>, Vec<ElementSet>)> {
    let u = Arc::new(Universe::indexed(n).unwrap());
    let mut all_edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            all_edges.push(ElementSet::from_indices([a, b]));
        }
    }
    (1u64..1 << all_edges.len())
        .map(|mask| {
            let e = all_edges
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            (u.clone(), e)
        })
        .collect()
}

fn graph(n: usize, edges: &[(usize, usize)]) -> SetFamily {
    let u = Arc::new(Universe::indexed(n).unwrap());
    let e: Vec<ElementSet> = edges
        .iter()
        .map(|&(a, b)| ElementSet::from_indices([a, b]))
        .collect();
    graph_family(&u, &e).unwrap()
}

fn labelled(labels: &[&str], edges: &[&str]) -> SetFamily {
    let u = Arc::new(Universe::new(labels.iter().copied()).unwrap());
    let e: Vec<ElementSet> = edges.iter().map(|e| u.parse_set(e).unwrap()).collect();
    graph_family(&u, &e).unwrap()
}

fn sets(f: &SetFamily, list: &[&str]) -> BTreeSet<ElementSet> {
    list.iter()
        .map(|s| f.universe().parse_set(s).unwrap())
        .collect()
}

fn criterion_1() -> Outcome {
    let f = labelled(
        &["a", "b", "x1", "x2", "x3", "x4", "x5"],
        &["a b", "x1 a", "x2 a", "x3 a", "x3 b", "x4 b", "x4 x5"],
    );
    let u = f.universe().parse_set("a b").unwrap();
    let cases = [
        ("x4 x5", vec!["", "b", "a b"]),
        ("x3", vec!["a", "b", "a b"]),
        ("x1 x4", vec!["a b"]),
    ];
    for (x, expect) in cases {
        let xs = f.universe().parse_set(x).unwrap();
        let got: BTreeSet<ElementSet> = e_set_closure(&f, u, xs).map_err(err)?.iter().collect();
        ensure(got == sets(&f, &expect), || format!("E({x}) = {got:?}"))?;
    }
    Ok("three E-sets match".into())
}

fn criterion_2() -> Outcome {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    pool.install(|| {
        let mut total = 0;
        for with_singletons in [false, true] {
            let r = exhaustive_graph_verify(5, with_singletons).map_err(err)?;
            ensure(r.holds(), || {
                format!("{:?} on {:?}", r.violation, r.witness_family)
            })?;
            ensure(r.passed == r.scanned, || "count mismatch".into())?;
            total += r.scanned;
        }
        let c5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        ensure(
            rho(&c5, ElementSet::from_indices([0, 1])).map_err(err)? == q(7, 17),
            || "C5 rho".into(),
        )?;
        Ok(format!("{total} generator sets, zero failures"))
    })
}

fn criterion_3() -> Outcome {
    let mut pairs = 0;
    for n in 1..=4 {
        // Independent filter list: every up-closed family of 2^[n] by brute force.
        let subsets = 1usize << n;
        let brute: Vec<u64> = (1u64..1 << subsets)
            .filter(|&m| {
                (0..subsets).all(|s| m >> s & 1 == 0 || (0..n).all(|e| m >> (s | 1 << e) & 1 == 1))
            })
            .collect();
        let mut fast = Vec::new();
        for_each_filter(n, |m| fast.push(m));
        fast.sort();
        ensure(brute == fast, || format!("filter lists differ at n = {n}"))?;
        pairs += kleitman_check(n).map_err(err)?;
    }
    ensure(count_filters(4) == 167, || "167 filters at n = 4".into())?;
    Ok(format!("{pairs} filter pairs positively correlated"))
}

fn criterion_4() -> Outcome {
    let mut checked = 0u64;
    for n in 2..=5 {
        for (u, edges) in graphs(n) {
            let f = graph_family(&u, &edges).unwrap();
            for &e in &edges {
                let s = neighborhoods(&f, e).map_err(err)?.n2 - e;
                for x in s.subsets() {
                    let a = e_set_closure(&f, e, x).map_err(err)?;
                    let b = e_set_generators(&f, e, x).map_err(err)?;
                    ensure(a == b, || format!("E differs at {x:?} in {}", f.render()))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} E-sets agree"))
}

/// `|E(X)|` in `base` for every `X ⊆ s`, indexed by compact code.
fn e_table(base: &SetFamily, u: ElementSet, s: ElementSet) -> Result<Vec<usize>, String> {
    (0..1u64 << s.len())
        .map(|c| {
            e_set_closure(base, u, s.expand(c))
                .map(|e| e.len())
                .map_err(err)
        })
        .collect()
}

fn criterion_5() -> Outcome {
    let mut extensions = 0u64;
    let mut bounded = 0u64;
    for n in 2..=5 {
        for (univ, edges) in graphs(n) {
            let f = graph_family(&univ, &edges).unwrap();
            for &u in &edges {
                let prof = neighborhoods(&f, u).map_err(err)?;
                let s = prof.n2 - u;
                if s.len() > 5 {
                    continue;
                }
                let part = prof.partition.clone().unwrap();
                let n3 = lattice_neighborhood(&f, u, NeighborhoodOrder::Third).map_err(err)?;
                let e = e_table(&n3, u, s)?;
                let bound = product_bound(&n3, u).map_err(err)?;
                let mut failure = None;
                for_each_filter(s.len(), |mask| {
                    if failure.is_some() {
                        return;
                    }
                    let members: Vec<ElementSet> = (0..1u64 << s.len())
                        .filter(|c| mask >> c & 1 == 1)
                        .map(|c| s.expand(c))
                        .collect();
                    let h = f.derive(members.iter().copied());
                    let ext = ExtensionSpec::new(&f, h.clone(), u).unwrap();
                    let direct = match mu(&f, &ext, u) {
                        Ok(r) => r.mu,
                        Err(e) => {
                            failure = Some(e.to_string());
                            return;
                        }
                    };
                    let local = mu(&n3, &ext, u).map(|r| r.mu);
                    if local.as_ref() != Ok(&direct) {
                        failure = Some(format!("locality fails for H = {}", h.render()));
                        return;
                    }
                    // Filters whose minimal members all have |E| = 1.
                    let minimal_ok = (0..1u64 << s.len())
                        .filter(|c| mask >> c & 1 == 1)
                        .all(|c| {
                            let minimal = (0..s.len())
                                .all(|i| c >> i & 1 == 0 || mask >> (c & !(1 << i)) & 1 == 0);
                            !minimal || e[c as usize] == 1
                        });
                    if minimal_ok {
                        let sum: usize = (0..1u64 << s.len())
                            .filter(|c| mask >> c & 1 == 1)
                            .map(|c| e[c as usize])
                            .sum();
                        let mu_h = Rational::new(sum as i128, members.len() as i128);
                        if bound > mu_h {
                            failure = Some(format!(
                                "bound {bound} above mu {mu_h} for H = {}",
                                h.render()
                            ));
                            return;
                        }
                        if members
                            .iter()
                            .any(|x| x.is_disjoint(part.na) || x.is_disjoint(part.nb))
                        {
                            failure =
                                Some(format!("a member of H = {} misses N_a or N_b", h.render()));
                            return;
                        }
                        bounded += 1;
                    }
                    extensions += 1;
                });
                if let Some(msg) = failure {
                    return Err(format!("{msg} in {} at {u:?}", f.render()));
                }
            }
        }
    }
    Ok(format!(
        "{extensions} filter extensions, {bounded} qualifying filters"
    ))
}

fn criterion_6() -> Outcome {
    let mut hyp = 0u64;
    for n in 2..=5 {
        for (univ, edges) in graphs(n) {
            let f = graph_family(&univ, &edges).unwrap();
            for &u in &edges {
                let v = check_local(&f, u, None, 6).map_err(err)?;
                let m = min_mu(&f, u, 6).map_err(err)?;
                let fast = min_mu_below_two(&f, u, 6).map_err(err)?;
                let two = Rational::from_integer(2);
                ensure(fast.is_some() == (m.value < two), || {
                    format!("fast and exact min mu disagree on {} at {u:?}", f.render())
                })?;
                if v.degree_hypothesis {
                    hyp += 1;
                    ensure(m.value >= two, || {
                        format!("min mu {} in {}", m.value, f.render())
                    })?;
                }
            }
        }
    }
    let two = Rational::from_integer(2);
    let edge = graph(2, &[(0, 1)]);
    ensure(
        min_mu(&edge, ElementSet::full(2), 6).map_err(err)?.value == two,
        || "edge".into(),
    )?;
    let path = graph(3, &[(0, 1), (1, 2)]);
    ensure(
        min_mu(&path, ElementSet::from_indices([0, 1]), 6)
            .map_err(err)?
            .value
            == two,
        || "two-edge path".into(),
    )?;
    Ok(format!(
        "{hyp} instances meet the degree hypothesis, all with min mu >= 2"
    ))
}

/// Adds a fresh element to the universe of `f`.
fn widen(f: &SetFamily) -> SetFamily {
    let mut labels: Vec<String> = f.universe().labels().to_vec();
    labels.push("fresh".into());
    SetFamily::new(Arc::new(Universe::new(labels).unwrap()), f.iter()).unwrap()
}

fn criterion_7() -> Outcome {
    let mut instances: Vec<SetFamily> = Vec::new();
    for n in 2..=4 {
        instances.extend(
            graphs(n)
                .into_iter()
                .map(|(u, e)| graph_family(&u, &e).unwrap()),
        );
    }
    for edges in [
        vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)],
        vec![(0, 1), (1, 2), (2, 3), (3, 4)],
        vec![(0, 1), (0, 2), (0, 3), (0, 4)],
        vec![(0, 1), (1, 2), (2, 0), (1, 3), (2, 4)],
        vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)],
    ] {
        instances.push(graph(5, &edges));
    }
    let mut count = 0;
    for f in &instances {
        let d = widen(f);
        let dset = d.universe().full();
        for u in join_irreducibles(f)
            .map_err(err)?
            .iter()
            .filter(|g| g.len() == 2)
        {
            let expected = min_mu(f, u, 6).map_err(err)?.value;
            let n2 = neighborhoods(&d, u).map_err(err)?.n2;
            let s = dset - u;
            let k = s.len();
            let e = e_table(&d, u, s)?;
            // u-free parts of the members of d, as compact codes
            let base: Vec<u64> = d.iter().map(|m| s.compress(m - u)).collect();
            let mu_of = |hmask: u64| {
                let mut seen = 0u64;
                for &b in &base {
                    for c in 0..1u64 << k {
                        if hmask >> c & 1 == 1 {
                            seen |= 1 << (b | c);
                        }
                    }
                }
                let sum: usize = (0..1u64 << k)
                    .filter(|c| seen >> c & 1 == 1)
                    .map(|c| e[c as usize])
                    .sum();
                Rational::new(sum as i128, seen.count_ones() as i128)
            };
            let subsets = 1usize << k;
            let closed = |m: u64| {
                (0..subsets).all(|a| {
                    m >> a & 1 == 0
                        || (0..subsets).all(|b| m >> b & 1 == 0 || m >> (a | b) & 1 == 1)
                })
            };
            let brute = (1u64..1 << subsets)
                .filter(|&m| closed(m))
                .map(mu_of)
                .min()
                .unwrap();
            let outside = s.compress(dset - n2);
            let mut filtered: Option<Rational> = None;
            for_each_filter(k, |m| {
                let keeps = (0..subsets as u64).all(|c| m >> c & 1 == 0 || c & outside == outside);
                if keeps {
                    let v = mu_of(m);
                    filtered = Some(filtered.map_or(v, |b: Rational| b.min(v)));
                }
            });
            ensure(brute == expected && filtered == Some(expected), || {
                format!(
                    "{} at {u:?}: brute {brute}, filters {filtered:?}, min_mu {expected}",
                    f.render()
                )
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} instances agree"))
}

fn criterion_8() -> Outcome {
    let f = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
    ensure(f.len() == 17, || format!("|F| = {}", f.len()))?;
    for i in 0..5 {
        let e = ElementSet::from_indices([i, (i + 1) % 5]);
        ensure(rho(&f, e).map_err(err)? == q(7, 17), || "rho".into())?;
        ensure(product_bound(&f, e).map_err(err)? == q(9, 4), || {
            "bound".into()
        })?;
        ensure(
            product_bound_counted(&f, e, 12).map_err(err)? == q(9, 4),
            || "counted bound".into(),
        )?;
    }
    let l = cycle_lattice(5);
    let sweep = matching_sweep(&l, &Poset::chain(1), false).map_err(err)?;
    ensure(sweep.len() == 5 && sweep.iter().all(|v| !v.holds), || {
        "a matching exists".into()
    })?;
    ensure(
        find_witness(&f, WitnessKind::Element)
            .map_err(err)?
            .satisfied,
        || "element".into(),
    )?;
    ensure(
        find_witness(&f, WitnessKind::Generator)
            .map_err(err)?
            .satisfied,
        || "generator".into(),
    )?;
    Ok("17 members, rho 7/17, bound 9/4, no [1]-matching".into())
}

fn criterion_9() -> Outcome {
    let r = small_counterexample_scan(4, true).map_err(err)?;
    ensure(r.holds(), || {
        format!("{:?} on {:?}", r.violation, r.witness_family)
    })?;
    ensure(r.scanned == 1 << 16, || "candidate count".into())?;
    Ok(format!(
        "{} union-closed families audited, least top density {}",
        r.scanned - r.vacuous,
        r.extremal_rho.unwrap()
    ))
}

fn criterion_10() -> Outcome {
    let b2 = ucf_core::lattice::named::boolean(2);
    let a = b2.atoms()[0];
    ensure(
        p_density(&b2, a, &Poset::chain(1)).map_err(err)? == q(1, 2),
        || "[1]".into(),
    )?;
    ensure(
        p_density(&b2, a, &Poset::chain(2)).map_err(err)? == q(1, 3),
        || "[2]".into(),
    )?;
    let corpus = named_corpus();
    let audit = class_density_audit(&corpus, &standard_posets()).map_err(err)?;
    ensure(audit.violation.is_none(), || {
        format!("{:?}", audit.violation)
    })?;
    let lattices: Vec<LatticeView> = corpus.iter().map(|(_, l)| l.clone()).collect();
    let mut checks = 0;
    for (_, p) in standard_posets() {
        let r = preservation_harness(&lattices, &p).map_err(err)?;
        ensure(r.holds(), || format!("{:?}", r.counterexamples))?;
        checks += r.checked.values().sum::<u64>();
    }
    Ok(format!(
        "{} lattices audited, {checks} preservation checks",
        audit.entries.len()
    ))
}

fn criterion_11() -> Outcome {
    for n in 0..1u64 << 16 {
        ensure(
            u_inverse(u_of_n(n).map_err(err)?).map_err(err)? == n,
            || format!("U({n})"),
        )?;
    }
    ensure(u_order_property_check(256).map_err(err)?, || {
        "order property".into()
    })?;
    for n in 1..=512 {
        u_family(n).map_err(err)?;
    }
    let mut line = Vec::new();
    for n in 1..=8 {
        for cap in [3, 4] {
            let r = t_n_bruteforce(n, cap).map_err(err)?;
            ensure(r.consistent(), || {
                format!("t_{n} = {} but S(U({n})) = {} at cap {cap}", r.t, r.s_u)
            })?;
        }
        line.push(t_n_bruteforce(n, 4).map_err(err)?.t.to_string());
    }
    let half = q(1, 2);
    let mut sm = Vec::new();
    for m in 1..=4 {
        let a = s_m_bruteforce(m, SmStrategy::Bitmask).map_err(err)?;
        let b = s_m_bruteforce(m, SmStrategy::Closure).map_err(err)?;
        ensure(a == b, || format!("strategies disagree at m = {m}"))?;
        if m <= 2 {
            ensure(a.value == half, || format!("s_{m} = {}", a.value))?;
        }
        sm.push(a.value.to_string());
    }
    Ok(format!(
        "t_1..8 = {} (matches S(U(n)) at caps 3, 4); s_1..4 = {}",
        line.join(","),
        sm.join(",")
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 11] = [
        ("E-sets of the seven-element example", 1, criterion_1),
        ("graph families on <= 5 vertices", 60, criterion_2),
        ("correlation of filters, n <= 4", 30, criterion_3),
        ("closure and generator E-sets agree", 60, criterion_4),
        (
            "mu bounds, locality, product bound, N_a/N_b",
            600,
            criterion_5,
        ),
        ("degree hypothesis forces min mu >= 2", 120, criterion_6),
        (
            "minimum over extensions in a larger ambient set",
            300,
            criterion_7,
        ),
        ("pentagon suite", 1, criterion_8),
        (
            "small family scan with all per-family checks",
            300,
            criterion_9,
        ),
        ("P-density and matching suite", 120, criterion_10),
        ("U(n), t_n and s_m suite", 300, criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let slow = took > Duration::from_secs(*limit);
        let (tag, detail) = match (&outcome, slow) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("too slow; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {:>2} [{tag}] {name} ({:.2}s, limit {limit}s): {detail}",
            i + 1,
            took.as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
