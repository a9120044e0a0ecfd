//! Order-preserving maps into lattices, `P`-densities of join-irreducibles
//! and the matching properties between classes of maps of a fixed type.
//!
//! For a poset `P` and a lattice `L`, `L^P` is the set of order-preserving
//! maps `P → L` under the pointwise order. For `a ∈ J(L)` every such map
//! `π` has the type `{x | π(x) ≥ a}`, a filter of `P`; `T(L, F, a)` collects
//! the maps of type `F`.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{
    classify, named, order_of_family, BottomPolicy, Classification, LatticeView, Poset,
};
use crate::rational::Rational;

/// Enumeration is refused when `|L|^|P|` exceeds this.
pub const ENUMERATION_BUDGET: u128 = 1_000_000;
/// Largest poset whose filters are counted.
pub const FILTER_COUNT_CAP: usize = 20;
/// Largest `L^Q` built by [`lattice_exponent`].
pub const EXPONENT_CAP: usize = 256;

/// Number of order-preserving maps `p → q`, by dynamic programming along a
/// linear extension of `p` memoised on the values of the elements that are
/// still below some unassigned element.
pub fn count_op_maps(p: &Poset, q: &Poset) -> u128 {
    let order = p.linear_extension();
    let n = order.len();
    // live[i]: elements assigned before step i that are below something at
    // step i or later.
    let live: Vec<Vec<usize>> = (0..=n)
        .map(|i| {
            order[..i]
                .iter()
                .copied()
                .filter(|&x| order[i..].iter().any(|&y| p.lt(x, y)))
                .collect()
        })
        .collect();

    struct Dp<'a> {
        p: &'a Poset,
        q: &'a Poset,
        order: Vec<usize>,
        live: Vec<Vec<usize>>,
        memo: HashMap<(usize, Vec<u16>), u128>,
    }

    impl Dp<'_> {
        fn go(&mut self, i: usize, assign: &mut Vec<usize>) -> u128 {
            if i == self.order.len() {
                return 1;
            }
            let key: Vec<u16> = self.live[i].iter().map(|&x| assign[x] as u16).collect();
            if let Some(&c) = self.memo.get(&(i, key.clone())) {
                return c;
            }
            let y = self.order[i];
            let below: Vec<usize> = self.live[i]
                .iter()
                .copied()
                .filter(|&x| self.p.lt(x, y))
                .collect();
            let mut total = 0;
            for v in 0..self.q.len() {
                if below.iter().all(|&x| self.q.leq(assign[x], v)) {
                    assign[y] = v;
                    total += self.go(i + 1, assign);
                }
            }
            self.memo.insert((i, key), total);
            total
        }
    }

    let mut dp = Dp {
        p,
        q,
        order,
        live,
        memo: HashMap::new(),
    };
    dp.go(0, &mut vec![0; n])
}

fn check_budget(p: &Poset, q_len: usize) -> Result<()> {
    let size = (q_len as u128)
        .checked_pow(p.len() as u32)
        .unwrap_or(u128::MAX);
    if size > ENUMERATION_BUDGET {
        return Err(Error::cap("|L|^|P|", size, ENUMERATION_BUDGET));
    }
    Ok(())
}

/// Every order-preserving map `p → q` as a vector indexed by the elements
/// of `p`, in lexicographic order of those vectors.
pub fn enumerate_op_maps(p: &Poset, q: &Poset) -> Result<Vec<Vec<usize>>> {
    check_budget(p, q.len())?;
    let n = p.len();
    let order = p.linear_extension();
    let mut out = Vec::new();
    fn go(
        i: usize,
        order: &[usize],
        p: &Poset,
        q: &Poset,
        assign: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == order.len() {
            out.push(assign.clone());
            return;
        }
        let y = order[i];
        for v in 0..q.len() {
            if order[..i]
                .iter()
                .all(|&x| !p.lt(x, y) || q.leq(assign[x], v))
            {
                assign[y] = v;
                go(i + 1, order, p, q, assign, out);
            }
        }
    }
    go(0, &order, p, q, &mut vec![0; n], &mut out);
    out.sort();
    Ok(out)
}

/// `L^P`, materialised.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpMapSet {
    pub maps: Vec<Vec<usize>>,
}

impl OpMapSet {
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpMapMode {
    Count,
    Enumerate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OpMaps {
    Count(u128),
    Maps(OpMapSet),
}

pub fn op_maps(p: &Poset, l: &LatticeView, mode: OpMapMode) -> Result<OpMaps> {
    Ok(match mode {
        OpMapMode::Count => OpMaps::Count(count_op_maps(p, l.poset())),
        OpMapMode::Enumerate => OpMaps::Maps(OpMapSet {
            maps: enumerate_op_maps(p, l.poset())?,
        }),
    })
}

/// Number of filters (up-sets) of `p`, empty and full included.
pub fn poset_filter_count(p: &Poset) -> Result<u128> {
    if p.len() > FILTER_COUNT_CAP {
        return Err(Error::cap("|P|", p.len() as u64, FILTER_COUNT_CAP as u64));
    }
    Ok(count_op_maps(p, &Poset::chain(2)))
}

/// Filters of `p` as bitmasks over its elements, in increasing numeric order.
pub fn poset_filters(p: &Poset) -> Result<Vec<u64>> {
    if p.len() > FILTER_COUNT_CAP {
        return Err(Error::cap("|P|", p.len() as u64, FILTER_COUNT_CAP as u64));
    }
    let n = p.len();
    let up: Vec<u64> = (0..n)
        .map(|x| p.up_set(x).into_iter().fold(0u64, |m, y| m | 1 << y))
        .collect();
    Ok((0..1u64 << n)
        .filter(|&m| (0..n).all(|x| m >> x & 1 == 0 || up[x] & m == up[x]))
        .collect())
}

fn require_join_irreducible(l: &LatticeView, a: usize) -> Result<()> {
    if a >= l.len() || !l.is_join_irreducible(a) {
        return Err(Error::NotJoinIrreducible(a));
    }
    Ok(())
}

/// `|[a)^P| / |L^P|`.
pub fn p_density(l: &LatticeView, a: usize, p: &Poset) -> Result<Rational> {
    require_join_irreducible(l, a)?;
    let up = l.poset().induced(&l.filter_of(a));
    let num = count_op_maps(p, &up);
    let den = count_op_maps(p, l.poset());
    Ok(Rational::new(num as i128, den as i128))
}

/// The join-irreducible of least `P`-density and whether it meets `1/p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PDensityVerdict {
    /// Set when `best_density ≤ 1/p`.
    pub witness: Option<usize>,
    pub best: usize,
    pub best_density: Rational,
    /// `1/p` for `p` the number of filters of `P`.
    pub bound: Rational,
}

impl PDensityVerdict {
    pub fn holds(&self) -> bool {
        self.witness.is_some()
    }
}

/// Decides the `P`-density property; ties between join-irreducibles of equal
/// density go to the smallest index.
pub fn has_p_density_property(l: &LatticeView, p: &Poset) -> Result<PDensityVerdict> {
    if l.len() < 2 {
        return Err(Error::Precondition(
            "the one-element lattice has no join-irreducible".into(),
        ));
    }
    let bound = Rational::new(1, poset_filter_count(p)? as i128);
    let den = count_op_maps(p, l.poset());
    let (best, best_density) = l
        .join_irreducibles()
        .into_iter()
        .map(|a| {
            let up = l.poset().induced(&l.filter_of(a));
            (a, Rational::new(count_op_maps(p, &up) as i128, den as i128))
        })
        .min_by(|x, y| x.1.cmp(&y.1).then(x.0.cmp(&y.0)))
        .expect("a lattice with two elements has a join-irreducible");
    Ok(PDensityVerdict {
        witness: (best_density <= bound).then_some(best),
        best,
        best_density,
        bound,
    })
}

/// The maps of type `filter` at `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeClass {
    /// Bitmask over the elements of `P`.
    pub filter: u64,
    pub a: usize,
    /// Indices into the [`OpMapSet`].
    pub members: Vec<usize>,
}

/// Splits `maps` into the classes `T(L, F, a)`; the classes come in
/// increasing order of the filter mask and only non-empty ones are listed.
pub fn type_classes(l: &LatticeView, a: usize, maps: &OpMapSet) -> Result<Vec<TypeClass>> {
    require_join_irreducible(l, a)?;
    let mut classes: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (i, m) in maps.maps.iter().enumerate() {
        let key = m
            .iter()
            .enumerate()
            .filter(|&(_, &v)| l.leq(a, v))
            .fold(0u64, |k, (x, _)| k | 1 << x);
        classes.entry(key).or_default().push(i);
    }
    Ok(classes
        .into_iter()
        .map(|(filter, members)| TypeClass { filter, a, members })
        .collect())
}

/// Size of a maximum matching of the bipartite graph whose left vertex `i`
/// is adjacent to the right vertices `adj[i]`; augmenting paths found by
/// breadth-first search.
pub fn max_bipartite_matching(adj: &[Vec<usize>], right: usize) -> usize {
    let mut match_right: Vec<Option<usize>> = vec![None; right];
    let mut size = 0;
    for start in 0..adj.len() {
        // parent[r] = left vertex from which right vertex r was reached.
        let mut parent: Vec<Option<usize>> = vec![None; right];
        let mut queue = VecDeque::from([start]);
        let mut end = None;
        'bfs: while let Some(u) = queue.pop_front() {
            for &r in &adj[u] {
                if parent[r].is_some() {
                    continue;
                }
                parent[r] = Some(u);
                match match_right[r] {
                    None => {
                        end = Some(r);
                        break 'bfs;
                    }
                    Some(next) => queue.push_back(next),
                }
            }
        }
        let Some(mut r) = end else { continue };
        // Flip the path back to `start`.
        loop {
            let u = parent[r].expect("on path");
            let prev = adj[u]
                .iter()
                .copied()
                .find(|&pr| match_right[pr] == Some(u));
            match_right[r] = Some(u);
            if u == start {
                break;
            }
            r = prev.expect("matched left vertex on path");
        }
        size += 1;
    }
    size
}

/// Whether a decreasing injection `from → to` exists.
fn decreasing_injection(l: &LatticeView, maps: &OpMapSet, from: &[usize], to: &[usize]) -> bool {
    if from.len() > to.len() {
        return false;
    }
    let below = |s: &[usize], t: &[usize]| s.iter().zip(t).all(|(&x, &y)| l.leq(x, y));
    let adj: Vec<Vec<usize>> = from
        .iter()
        .map(|&pi| {
            (0..to.len())
                .filter(|&j| below(&maps.maps[to[j]], &maps.maps[pi]))
                .collect()
        })
        .collect();
    max_bipartite_matching(&adj, to.len()) == from.len()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingVerdict {
    pub a: usize,
    pub full: bool,
    pub holds: bool,
    /// A pair of filters `(G, F)` of `P` with `F ⊆ G` for which no decreasing
    /// injection `T(L, G, a) → T(L, F, a)` exists.
    pub failing: Option<(u64, u64)>,
}

fn matching_with(
    l: &LatticeView,
    a: usize,
    p: &Poset,
    full: bool,
    maps: &OpMapSet,
) -> Result<MatchingVerdict> {
    let classes = type_classes(l, a, maps)?;
    let class_of = |f: u64| -> &[usize] {
        classes
            .iter()
            .find(|c| c.filter == f)
            .map_or(&[][..], |c| &c.members[..])
    };
    let filters = poset_filters(p)?;
    let all = (1u64 << p.len()) - 1;
    let tops: Vec<u64> = if full { filters.clone() } else { vec![all] };
    for &g in &tops {
        for &f in filters.iter().filter(|&&f| f & g == f && f != g) {
            if !decreasing_injection(l, maps, class_of(g), class_of(f)) {
                return Ok(MatchingVerdict {
                    a,
                    full,
                    holds: false,
                    failing: Some((g, f)),
                });
            }
        }
    }
    // Injections into every class bound the density by 1/p.
    let density = p_density(l, a, p)?;
    let bound = Rational::new(1, filters.len() as i128);
    if density > bound {
        return Err(Error::Violation(format!(
            "matching holds at {} but the P-density is {density} > {bound}",
            l.label(a)
        )));
    }
    Ok(MatchingVerdict {
        a,
        full,
        holds: true,
        failing: None,
    })
}

/// Decides the (full) `P`-matching property at `a`: a decreasing injection
/// `T(L, P, a) → T(L, F, a)` for every filter `F`, or with `full`
/// `T(L, G, a) → T(L, F, a)` for all filters `F ⊆ G`.
pub fn matching_property(
    l: &LatticeView,
    a: usize,
    p: &Poset,
    full: bool,
) -> Result<MatchingVerdict> {
    require_join_irreducible(l, a)?;
    let maps = OpMapSet {
        maps: enumerate_op_maps(p, l.poset())?,
    };
    matching_with(l, a, p, full, &maps)
}

/// [`matching_property`] at every join-irreducible.
pub fn matching_sweep(l: &LatticeView, p: &Poset, full: bool) -> Result<Vec<MatchingVerdict>> {
    let maps = OpMapSet {
        maps: enumerate_op_maps(p, l.poset())?,
    };
    l.join_irreducibles()
        .into_iter()
        .map(|a| matching_with(l, a, p, full, &maps))
        .collect()
}

/// The first join-irreducible with the (full) matching property.
pub fn matching_witness(l: &LatticeView, p: &Poset, full: bool) -> Result<Option<usize>> {
    Ok(matching_sweep(l, p, full)?
        .into_iter()
        .find(|v| v.holds)
        .map(|v| v.a))
}

/// `L^Q` under the pointwise order. Elements are the maps in lexicographic
/// order, labelled by their value lists.
pub fn lattice_exponent(l: &LatticeView, q: &Poset) -> Result<LatticeView> {
    let count = count_op_maps(q, l.poset());
    if count > EXPONENT_CAP as u128 {
        return Err(Error::cap("|L^Q|", count, EXPONENT_CAP as u128));
    }
    let maps = enumerate_op_maps(q, l.poset())?;
    let labels: Vec<String> = maps
        .iter()
        .map(|m| {
            let parts: Vec<&str> = m.iter().map(|&v| l.label(v)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let n = maps.len();
    let mut leq = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            leq[i * n + j] = maps[i].iter().zip(&maps[j]).all(|(&x, &y)| l.leq(x, y));
        }
    }
    LatticeView::from_poset(Poset::new(labels, leq)?)
}

/// Largest corpus lattice used by [`preservation_harness`].
pub const HARNESS_LATTICE_CAP: usize = 8;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PreservationReport {
    /// Instances checked per statement.
    pub checked: BTreeMap<String, u64>,
    pub counterexamples: Vec<String>,
}

impl PreservationReport {
    fn count(&mut self, key: &str) {
        *self.checked.entry(key.to_string()).or_default() += 1;
    }

    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn has_matching_at(l: &LatticeView, a: usize, p: &Poset, full: bool) -> Result<bool> {
    Ok(matching_property(l, a, p, full)?.holds)
}

/// Checks on the corpus that the `P`-density property passes to every
/// product `L × M`, and that the (full) `P`-matching property at `a` passes
/// to products, to principal ideals containing `a` and to `L^[2]`; also that
/// the full `P + [1]`-matching property at `a` is equivalent to the full
/// `P`- and `[1]`-matching properties at `a`, and that the `P`- and
/// `[1]`-matching properties at `a` give the `P + [1]` one (conversely when
/// `a` is an atom). Lattices above [`HARNESS_LATTICE_CAP`] elements are
/// skipped for the matching statements.
pub fn preservation_harness(corpus: &[LatticeView], p: &Poset) -> Result<PreservationReport> {
    let mut report = PreservationReport::default();
    let q1 = Poset::chain(1);
    let q2 = Poset::chain(2);
    let sum = p.sum(&q1);
    for (i, l) in corpus.iter().enumerate() {
        if l.len() < 2 {
            continue;
        }
        let dens = has_p_density_property(l, p)?;
        for (j, m) in corpus.iter().enumerate() {
            if dens.holds() {
                report.count("density passes to products");
                if !has_p_density_property(&l.product(m), p)?.holds() {
                    report
                        .counterexamples
                        .push(format!("density: corpus[{i}] x corpus[{j}] {l:?} x {m:?}"));
                }
            }
        }
        if l.len() > HARNESS_LATTICE_CAP {
            continue;
        }
        for full in [false, true] {
            let tag = if full { "full matching" } else { "matching" };
            for a in l.join_irreducibles() {
                if !has_matching_at(l, a, p, full)? {
                    continue;
                }
                for (j, m) in corpus.iter().enumerate().filter(|(_, m)| m.len() <= 4) {
                    report.count(&format!("{tag} passes to products"));
                    let lm = l.product(m);
                    let at = a * m.len() + m.bottom();
                    let ok = has_matching_at(&lm, at, p, full)?
                        || matching_witness(&lm, p, full)?.is_some();
                    if !ok {
                        report.counterexamples.push(format!(
                            "{tag} product: corpus[{i}] at {} x corpus[{j}]",
                            l.label(a)
                        ));
                    }
                }
                for top in l.filter_of(a) {
                    report.count(&format!("{tag} passes to ideals"));
                    let elems = l.ideal_of(top);
                    let ideal = l.sublattice(&elems)?;
                    let pos = elems.iter().position(|&x| x == a).expect("a below top");
                    if !has_matching_at(&ideal, pos, p, full)? {
                        report.counterexamples.push(format!(
                            "{tag} ideal: corpus[{i}] at {} in ({}]",
                            l.label(a),
                            l.label(top)
                        ));
                    }
                }
            }
            if matching_witness(l, p, full)?.is_some() {
                report.count(&format!("{tag} passes to L^[2]"));
                let exp = lattice_exponent(l, &q2)?;
                if matching_witness(&exp, p, full)?.is_none() {
                    report
                        .counterexamples
                        .push(format!("{tag} exponent: corpus[{i}]^[2]"));
                }
            }
        }
        for a in l.join_irreducibles() {
            let full_p = has_matching_at(l, a, p, true)?;
            let full_q = has_matching_at(l, a, &q1, true)?;
            let full_sum = has_matching_at(l, a, &sum, true)?;
            report.count("full P+Q equivalence");
            if full_sum != (full_p && full_q) {
                report
                    .counterexamples
                    .push(format!("full P+Q: corpus[{i}] at {}", l.label(a)));
            }
            let part_p = has_matching_at(l, a, p, false)?;
            let part_q = has_matching_at(l, a, &q1, false)?;
            let part_sum = has_matching_at(l, a, &sum, false)?;
            report.count("P+Q implication");
            if part_p && part_q && !part_sum {
                report
                    .counterexamples
                    .push(format!("P+Q: corpus[{i}] at {}", l.label(a)));
            }
            if l.atoms().contains(&a) {
                report.count("P+Q converse at atoms");
                if part_sum && !(part_p && part_q) {
                    report
                        .counterexamples
                        .push(format!("P+Q converse: corpus[{i}] at atom {}", l.label(a)));
                }
            }
        }
    }
    Ok(report)
}

/// One lattice of the class audit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassAuditEntry {
    pub name: String,
    pub size: usize,
    pub classification: Classification,
    /// Poset name, least `P`-density as "p/q", whether it meets `1/p`.
    pub densities: Vec<(String, String, bool)>,
    /// Poset names for which some class of the lattice claims the property.
    pub asserted: Vec<String>,
    pub density_or_dual: bool,
    /// `1 − 1/log_p |L|` for each poset, for context only.
    pub asymptotic_reference: Vec<(String, f64)>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassAuditReport {
    pub entries: Vec<ClassAuditEntry>,
    pub violation: Option<String>,
}

fn is_chain(p: &Poset) -> bool {
    (0..p.len()).all(|x| (0..p.len()).all(|y| p.leq(x, y) || p.leq(y, x)))
}

/// Whether one of the classes `l` belongs to claims the `P`-density
/// property for `p`.
pub fn class_claims(c: &Classification, p: &Poset) -> bool {
    let all_posets = c.distributive || c.modular || c.lower_semimodular_coatom || c.height_equals_j;
    let chains = c.geometric && is_chain(p);
    let point = p.len() == 1 && (c.complemented_ideals || c.selfdual == Some(true));
    all_posets || chains || point
}

/// Classifies each lattice, asserts every claimed `P`-density property and
/// that `L` or its dual has the density property. Stops at the first
/// violation.
pub fn class_density_audit(
    corpus: &[(String, LatticeView)],
    posets: &[(String, Poset)],
) -> Result<ClassAuditReport> {
    let point = Poset::chain(1);
    let mut entries = Vec::new();
    for (name, l) in corpus {
        if l.len() < 2 {
            continue;
        }
        let c = classify(l);
        let mut densities = Vec::new();
        let mut asserted = Vec::new();
        let mut reference = Vec::new();
        for (pname, p) in posets {
            let v = has_p_density_property(l, p)?;
            densities.push((
                pname.clone(),
                crate::rational::to_pq(&v.best_density),
                v.holds(),
            ));
            let pcount = poset_filter_count(p)? as f64;
            reference.push((pname.clone(), 1.0 - pcount.ln() / (l.len() as f64).ln()));
            if class_claims(&c, p) {
                asserted.push(pname.clone());
                if !v.holds() {
                    return Ok(ClassAuditReport {
                        entries,
                        violation: Some(format!("{name}: claimed {pname}-density fails ({:?})", c)),
                    });
                }
            }
        }
        let density_or_dual = has_p_density_property(l, &point)?.holds()
            || has_p_density_property(&l.dual(), &point)?.holds();
        if !density_or_dual {
            return Ok(ClassAuditReport {
                entries,
                violation: Some(format!(
                    "{name}: neither it nor its dual has the density property"
                )),
            });
        }
        entries.push(ClassAuditEntry {
            name: name.clone(),
            size: l.len(),
            classification: c,
            densities,
            asserted,
            density_or_dual,
            asymptotic_reference: reference,
        });
    }
    Ok(ClassAuditReport {
        entries,
        violation: None,
    })
}

/// `[1]`, `[2]` and the two-element antichain.
pub fn standard_posets() -> Vec<(String, Poset)> {
    vec![
        ("[1]".to_string(), Poset::chain(1)),
        ("[2]".to_string(), Poset::chain(2)),
        ("2-antichain".to_string(), Poset::antichain(2)),
    ]
}

/// `B₁..B₃`, chains with 2 to 6 elements, `M₃`, `N₅` and the lattice of the
/// family generated by the edges of a 5-cycle.
pub fn named_corpus() -> Vec<(String, LatticeView)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.push((format!("B{n}"), named::boolean(n)));
    }
    for n in 2..=6 {
        out.push((format!("chain{n}"), named::chain(n)));
    }
    out.push(("M3".to_string(), named::diamond()));
    out.push(("N5".to_string(), named::pentagon()));
    out.push(("C5 edges".to_string(), cycle_lattice(5)));
    out
}

/// The lattice of the union-closed family generated by the edges of the
/// `n`-cycle, `∅` included.
pub fn cycle_lattice(n: usize) -> LatticeView {
    use crate::family::{graph_family, ElementSet, Universe};
    use std::sync::Arc;
    let u = Arc::new(Universe::indexed(n).expect("small"));
    let edges: Vec<ElementSet> = (0..n)
        .map(|i| ElementSet::from_indices([i, (i + 1) % n]))
        .collect();
    let f = graph_family(&u, &edges).expect("graph");
    order_of_family(&f, BottomPolicy::RequireEmpty).expect("union-closed with empty set")
}

/// Lattices of all union-closed families with at least two members over a
/// universe of `k` elements (a least element adjoined where missing), one
/// per isomorphism type.
pub fn family_corpus(k: usize) -> Result<Vec<(String, LatticeView)>> {
    use crate::family::{ElementSet, SetFamily, Universe};
    use std::sync::Arc;
    if k > 3 {
        return Err(Error::cap("family corpus universe size", k as u64, 3u64));
    }
    let universe = Arc::new(Universe::indexed(k.max(1))?);
    let subsets = 1u64 << k;
    let mut lattices = Vec::new();
    for code in 0..1u64 << subsets {
        if code.count_ones() < 2 {
            continue;
        }
        let members: Vec<ElementSet> = (0..subsets)
            .filter(|&s| code >> s & 1 == 1)
            .map(ElementSet::from_bits)
            .collect();
        let f = SetFamily::new(universe.clone(), members)?;
        if f.is_union_closed() {
            lattices.push(order_of_family(&f, BottomPolicy::Adjoin)?);
        }
    }
    Ok(crate::lattice::dedup_isomorphic(lattices)
        .into_iter()
        .enumerate()
        .map(|(i, l)| (format!("family lattice {i} ({} elements)", l.len()), l))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2() -> LatticeView {
        named::boolean(2)
    }

    fn atom(l: &LatticeView) -> usize {
        l.atoms()[0]
    }

    #[test]
    fn counts_match_enumeration() {
        let l = b2();
        assert_eq!(count_op_maps(&Poset::chain(1), l.poset()), 4);
        assert_eq!(count_op_maps(&Poset::chain(2), l.poset()), 9);
        assert_eq!(count_op_maps(&Poset::chain(2), &Poset::chain(2)), 3);
        for p in [
            Poset::chain(3),
            Poset::antichain(2),
            Poset::chain(2).sum(&Poset::chain(1)),
        ] {
            for l in [named::boolean(3), named::pentagon(), named::diamond()] {
                let n = enumerate_op_maps(&p, l.poset()).unwrap().len() as u128;
                assert_eq!(count_op_maps(&p, l.poset()), n);
            }
        }
    }

    #[test]
    fn filter_counts() {
        assert_eq!(poset_filter_count(&Poset::chain(1)).unwrap(), 2);
        assert_eq!(poset_filter_count(&Poset::chain(2)).unwrap(), 3);
        assert_eq!(poset_filter_count(&Poset::antichain(2)).unwrap(), 4);
        assert_eq!(
            poset_filters(&Poset::chain(2)).unwrap(),
            vec![0, 0b10, 0b11]
        );
    }

    #[test]
    fn b2_densities() {
        let l = b2();
        let a = atom(&l);
        assert_eq!(
            p_density(&l, a, &Poset::chain(1)).unwrap(),
            Rational::new(1, 2)
        );
        assert_eq!(
            p_density(&l, a, &Poset::chain(2)).unwrap(),
            Rational::new(1, 3)
        );
        let v = has_p_density_property(&l, &Poset::chain(2)).unwrap();
        assert!(v.holds());
        assert!(p_density(&l, l.bottom(), &Poset::chain(1)).is_err());
        let one = named::chain(1);
        assert!(has_p_density_property(&one, &Poset::chain(1)).is_err());
    }

    #[test]
    fn matching_examples() {
        let l = b2();
        let a = atom(&l);
        let v = matching_property(&l, a, &Poset::chain(1), false).unwrap();
        assert!(v.holds);
        assert!(
            matching_property(&l, a, &Poset::chain(2), true)
                .unwrap()
                .holds
        );
        let c5 = cycle_lattice(5);
        assert_eq!(c5.len(), 17);
        for v in matching_sweep(&c5, &Poset::chain(1), false).unwrap() {
            assert!(!v.holds);
        }
    }

    #[test]
    fn matching_oracle() {
        // complete bipartite K_{2,3} and a path
        assert_eq!(
            max_bipartite_matching(&[vec![0, 1, 2], vec![0, 1, 2]], 3),
            2
        );
        assert_eq!(
            max_bipartite_matching(&[vec![0], vec![0, 1], vec![1, 2]], 3),
            3
        );
        assert_eq!(max_bipartite_matching(&[vec![0], vec![0]], 1), 1);
    }

    #[test]
    fn exponents() {
        let l = b2();
        assert!(lattice_exponent(&l, &Poset::chain(1))
            .unwrap()
            .is_isomorphic(&l));
        assert_eq!(lattice_exponent(&l, &Poset::chain(2)).unwrap().len(), 9);
        let e = lattice_exponent(&named::chain(2), &Poset::antichain(2)).unwrap();
        assert!(e.is_isomorphic(&l));
    }

    #[test]
    fn type_classes_partition() {
        let l = named::pentagon();
        let p = Poset::chain(2);
        let maps = OpMapSet {
            maps: enumerate_op_maps(&p, l.poset()).unwrap(),
        };
        let filters = poset_filters(&p).unwrap();
        for a in l.join_irreducibles() {
            let classes = type_classes(&l, a, &maps).unwrap();
            assert_eq!(
                classes.iter().map(|c| c.members.len()).sum::<usize>(),
                maps.len()
            );
            assert!(classes.iter().all(|c| filters.contains(&c.filter)));
        }
    }

    #[test]
    fn small_audit() {
        let corpus: Vec<(String, LatticeView)> = named_corpus()
            .into_iter()
            .filter(|(_, l)| l.len() <= 5)
            .collect();
        let r = class_density_audit(&corpus, &standard_posets()).unwrap();
        assert!(r.violation.is_none(), "{:?}", r.violation);
    }
}
