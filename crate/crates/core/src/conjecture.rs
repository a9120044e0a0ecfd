//! Witness searches for the four equivalent forms of the conjecture, the
//! two sufficient conditions on intersection-closed families, greedy and
//! minimal covers, and exhaustive scans over small graphs and families.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{ElementSet, Restriction, SetFamily, Universe};
use crate::lattice::{irreducible_members, order_of_family, BottomPolicy, LatticeView};
use crate::rational::{ratio, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    /// An element in at least half of the members.
    Element,
    /// A generator contained in at most half of the members.
    Generator,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub kind: WitnessKind,
    pub witness: ElementSet,
    pub degree: usize,
    /// `|F| / 2`.
    pub threshold: Rational,
    pub satisfied: bool,
}

fn require_nonempty_member(f: &SetFamily) -> Result<()> {
    if f.has_nonempty_member() {
        Ok(())
    } else {
        Err(Error::NoNonEmptyMember)
    }
}

/// The best witness: a maximum-degree element, or a minimum-degree member
/// of `G(f)`. Ties go to the smallest element index or encoding.
pub fn find_witness(f: &SetFamily, kind: WitnessKind) -> Result<WitnessReport> {
    f.require_union_closed()?;
    f.require_at_least_two()?;
    require_nonempty_member(f)?;
    let threshold = ratio(f.len(), 2);
    let (witness, degree) = match kind {
        WitnessKind::Element => {
            let mut best: Option<(usize, usize)> = None;
            for x in f.ground().iter() {
                let d = f.element_degree(x);
                if best.is_none_or(|(_, bd)| d > bd) {
                    best = Some((x, d));
                }
            }
            let (x, d) = best.expect("some non-empty member");
            (ElementSet::singleton(x), d)
        }
        WitnessKind::Generator => {
            if !f.contains_empty() {
                return Err(Error::MissingEmptySet);
            }
            let mut best: Option<(ElementSet, usize)> = None;
            for g in irreducible_members(f.members()) {
                let d = f.degree_unchecked(g);
                if best.is_none_or(|(_, bd)| d < bd) {
                    best = Some((g, d));
                }
            }
            best.expect("some non-empty member")
        }
    };
    let d = Rational::from_integer(degree as i128);
    let satisfied = match kind {
        WitnessKind::Element => d >= threshold,
        WitnessKind::Generator => d <= threshold,
    };
    Ok(WitnessReport {
        kind,
        witness,
        degree,
        threshold,
        satisfied,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformTarget {
    /// Complement every member within the universe (union- and
    /// intersection-closed swap).
    Complement,
    /// `f ∪ {∅}`, on which generator witnesses are sought.
    GeneratorForm,
    /// The lattice `(f ∪ {∅}, ⊆)`.
    SemilatticeForm,
}

#[derive(Debug, Clone)]
pub enum Transformed {
    Family(SetFamily),
    Lattice(LatticeView),
}

pub fn transform(f: &SetFamily, target: TransformTarget) -> Result<Transformed> {
    match target {
        TransformTarget::Complement => {
            if !f.is_union_closed() && !f.is_intersection_closed() {
                return Err(Error::NotUnionClosed);
            }
            Ok(Transformed::Family(f.complement()))
        }
        TransformTarget::GeneratorForm => {
            f.require_union_closed()?;
            Ok(Transformed::Family(f.with_empty()))
        }
        TransformTarget::SemilatticeForm => {
            f.require_union_closed()?;
            Ok(Transformed::Lattice(order_of_family(
                &f.with_empty(),
                BottomPolicy::RequireEmpty,
            )?))
        }
    }
}

/// Some element of `⋃g` lies in at most half of the members of the
/// intersection-closed family `g`. Returns the minimum-degree element.
pub fn intersection_witness(g: &SetFamily) -> Result<Option<(usize, usize)>> {
    if !g.is_intersection_closed() {
        return Err(Error::NotIntersectionClosed);
    }
    g.require_at_least_two()?;
    let mut best: Option<(usize, usize)> = None;
    for x in g.ground().iter() {
        let d = g.element_degree(x);
        if best.is_none_or(|(_, bd)| d < bd) {
            best = Some((x, d));
        }
    }
    Ok(best.filter(|&(_, d)| 2 * d <= g.len()))
}

/// Some `x ∈ J(L)` with `|[x)| ≤ |L| / 2`; the smallest such filter.
pub fn lattice_witness(l: &LatticeView) -> Option<(usize, usize)> {
    l.join_irreducibles()
        .into_iter()
        .map(|x| (x, l.filter_of(x).len()))
        .min_by_key(|&(x, d)| (d, x))
        .filter(|&(_, d)| 2 * d <= l.len())
}

/// Whether each of the four forms holds on the corresponding transform of
/// `f`: elements of `f`, elements of its complement, join-irreducibles of
/// the lattice of `f ∪ {∅}` and generators of `f ∪ {∅}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Equivalences {
    pub element_form: bool,
    pub complement_form: bool,
    pub lattice_form: bool,
    pub generator_form: bool,
    pub agree: bool,
}

pub fn check_equivalences(f: &SetFamily) -> Result<Equivalences> {
    let element_form = find_witness(f, WitnessKind::Element)?.satisfied;
    let complement_form = intersection_witness(&f.complement())?.is_some();
    let with_empty = f.with_empty();
    let lattice = order_of_family(&with_empty, BottomPolicy::RequireEmpty)?;
    let lattice_form = lattice_witness(&lattice).is_some();
    let generator_form = find_witness(&with_empty, WitnessKind::Generator)?.satisfied;
    if element_form != complement_form || lattice_form != generator_form {
        return Err(Error::Violation(format!(
            "a transform changed the verdict on {}",
            f.render()
        )));
    }
    Ok(Equivalences {
        element_form,
        complement_form,
        lattice_form,
        generator_form,
        agree: element_form == lattice_form,
    })
}

/// Verdicts of the two sufficient conditions on an intersection-closed
/// family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SufficientReport {
    /// Some `x, y ∈ ⋃F` (possibly equal) with `⋃F ∖ {x, y} ∈ F`.
    pub removal_applies: bool,
    pub removal_pair: Option<(usize, usize)>,
    /// `S(F) / |F| ≤ |⋃F| / 2`.
    pub average_applies: bool,
    pub average_size: Rational,
    pub half_ground: Rational,
    /// Minimum-degree element with `2d ≤ |F|`, if any.
    pub witness: Option<(usize, usize)>,
}

pub fn sufficient_conditions(g: &SetFamily) -> Result<SufficientReport> {
    if !g.is_intersection_closed() {
        return Err(Error::NotIntersectionClosed);
    }
    g.require_at_least_two()?;
    let ground = g.ground();
    let mut removal_pair = None;
    'outer: for x in ground.iter() {
        for y in ground.iter().filter(|&y| y >= x) {
            if g.contains(ground.without(x).without(y)) {
                removal_pair = Some((x, y));
                break 'outer;
            }
        }
    }
    let average_size = ratio(g.total_size(), g.len());
    let half_ground = ratio(ground.len(), 2);
    let average_applies = average_size <= half_ground;
    let witness = intersection_witness(g)?;
    if (removal_pair.is_some() || average_applies) && witness.is_none() {
        return Err(Error::Violation(format!(
            "a sufficient condition holds but no element has degree at most half in {}",
            g.render()
        )));
    }
    Ok(SufficientReport {
        removal_applies: removal_pair.is_some(),
        removal_pair,
        average_applies,
        average_size,
        half_ground,
        witness,
    })
}

/// `⌈log₂(n + 1)⌉`.
pub fn log_cover_bound(n: usize) -> usize {
    (usize::BITS - n.leading_zeros()) as usize
}

/// Greedy cover of the non-empty members of `f ∪ {∅}`: repeatedly take the
/// element in most remaining members (smallest index on ties) and keep only
/// the members avoiding it.
pub fn greedy_cover(f: &SetFamily) -> Result<Vec<usize>> {
    f.require_union_closed()?;
    require_nonempty_member(f)?;
    let mut current: Vec<ElementSet> = f.with_empty().members().to_vec();
    let mut picked = Vec::new();
    while current.iter().any(|m| !m.is_empty()) {
        let ground = current.iter().fold(ElementSet::EMPTY, |a, &m| a | m);
        let (y, _) = ground
            .iter()
            .map(|x| (x, current.iter().filter(|m| m.contains(x)).count()))
            .fold(None, |best: Option<(usize, usize)>, (x, d)| match best {
                Some((_, bd)) if bd >= d => best,
                _ => Some((x, d)),
            })
            .expect("non-empty ground");
        picked.push(y);
        current.retain(|m| !m.contains(y));
    }
    let bound = log_cover_bound(f.with_empty().len());
    if picked.len() > bound {
        return Err(Error::Violation(format!(
            "greedy cover of size {} exceeds {bound} for {}",
            picked.len(),
            f.render()
        )));
    }
    Ok(picked)
}

/// Largest ground set accepted by [`minimal_covers`].
pub const MINIMAL_COVER_CAP: usize = 16;

/// Every inclusion-minimal `Y ⊆ ⋃f` meeting all non-empty members.
pub fn minimal_covers(f: &SetFamily) -> Result<Vec<ElementSet>> {
    let ground = f.ground();
    if ground.len() > MINIMAL_COVER_CAP {
        return Err(Error::cap(
            "|⋃F|",
            ground.len() as u64,
            MINIMAL_COVER_CAP as u64,
        ));
    }
    let nonempty: Vec<ElementSet> = f.iter().filter(|m| !m.is_empty()).collect();
    let covers = |y: ElementSet| nonempty.iter().all(|m| m.intersects(y));
    Ok(ground
        .subsets()
        .filter(|&y| covers(y) && y.iter().all(|e| !covers(y.without(e))))
        .collect())
}

/// Checks that `{U ∩ Y | U ∈ f} ∪ {∅}` is all of `2^Y` for every minimal
/// cover `Y` and that `2^|Y| ≤ |f ∪ {∅}|`. Returns the number of covers.
pub fn minimal_cover_boolean(f: &SetFamily) -> Result<usize> {
    f.require_union_closed()?;
    require_nonempty_member(f)?;
    let covers = minimal_covers(f)?;
    let size = f.with_empty().len();
    for &y in &covers {
        let traces = f.restrict(y, Restriction::Onto)?.with_empty();
        let boolean = traces.len() == 1usize << y.len();
        if !boolean || (1usize << y.len()) > size {
            return Err(Error::Violation(format!(
                "minimal cover {} does not trace a Boolean lattice in {}",
                f.universe().render(y),
                f.render()
            )));
        }
    }
    Ok(covers.len())
}

/// Totals of an exhaustive scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub scanned: u64,
    pub passed: u64,
    /// Candidates with nothing to check (no generator, or not a qualifying
    /// family); counted as passed.
    pub vacuous: u64,
    /// Graph scans: the largest least-generator density. Family scans: the
    /// smallest largest-element density.
    pub extremal_rho: Option<Rational>,
    pub extremal_family: Option<SetFamily>,
    /// The violating family with the least enumeration index.
    pub witness_family: Option<SetFamily>,
    pub violation: Option<String>,
}

impl ScanReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Per-candidate outcome, merged in enumeration order.
#[derive(Debug, Clone)]
struct Partial {
    scanned: u64,
    passed: u64,
    vacuous: u64,
    /// `(value, index)`
    extremal: Option<(Rational, u64)>,
    violation: Option<(u64, String)>,
}

impl Partial {
    fn empty() -> Self {
        Partial {
            scanned: 0,
            passed: 0,
            vacuous: 0,
            extremal: None,
            violation: None,
        }
    }

    fn merge(self, other: Partial, maximise: bool) -> Partial {
        let extremal = match (self.extremal, other.extremal) {
            (None, e) | (e, None) => e,
            (Some(a), Some(b)) => {
                let a_wins = if a.0 == b.0 {
                    a.1 < b.1
                } else {
                    (a.0 > b.0) == maximise
                };
                Some(if a_wins { a } else { b })
            }
        };
        let violation = match (self.violation, other.violation) {
            (None, v) | (v, None) => v,
            (Some(a), Some(b)) => Some(if a.0 < b.0 { a } else { b }),
        };
        Partial {
            scanned: self.scanned + other.scanned,
            passed: self.passed + other.passed,
            vacuous: self.vacuous + other.vacuous,
            extremal,
            violation,
        }
    }
}

fn run_scan(
    total: u64,
    maximise: bool,
    eval: impl Fn(u64) -> Partial + Sync,
    family_at: impl Fn(u64) -> SetFamily,
) -> ScanReport {
    let p = (0..total)
        .into_par_iter()
        .map(&eval)
        .reduce(Partial::empty, |a, b| a.merge(b, maximise));
    ScanReport {
        scanned: p.scanned,
        passed: p.passed,
        vacuous: p.vacuous,
        extremal_rho: p.extremal.as_ref().map(|e| e.0),
        extremal_family: p.extremal.map(|e| family_at(e.1)),
        witness_family: p.violation.as_ref().map(|v| family_at(v.0)),
        violation: p.violation.map(|v| v.1),
    }
}

/// Vertex count limit for [`exhaustive_graph_verify`].
pub const GRAPH_SCAN_CAP: usize = 6;
/// Vertex count limit when singleton generators are mixed in.
pub const GRAPH_SCAN_SINGLETON_CAP: usize = 5;

/// Generator list of the candidate with index `code`: the low bits select
/// edges of `K_n` in lexicographic order, the high bits select singletons.
fn graph_generators(n: usize, edges: &[ElementSet], code: u64) -> Vec<ElementSet> {
    let mut out: Vec<ElementSet> = edges
        .iter()
        .enumerate()
        .filter(|(i, _)| code >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    out.extend(
        (0..n)
            .filter(|v| code >> (edges.len() + v) & 1 == 1)
            .map(ElementSet::singleton),
    );
    out
}

/// Members of the union-closed family generated by `gens` (with `∅`):
/// `S` is a member iff every vertex of `S` lies in a generator inside `S`.
fn graph_members(n: usize, gens: &[ElementSet]) -> Vec<ElementSet> {
    ElementSet::full(n)
        .subsets()
        .filter(|&s| {
            gens.iter()
                .filter(|g| g.is_subset(s))
                .fold(ElementSet::EMPTY, |a, &g| a | g)
                == s
        })
        .collect()
}

fn check_graph(n: usize, edges: &[ElementSet], code: u64) -> Partial {
    let gens = graph_generators(n, edges, code);
    let mut p = Partial::empty();
    p.scanned = 1;
    p.passed = 1;
    if gens.is_empty() {
        p.vacuous = 1;
        return p;
    }
    let members = graph_members(n, &gens);
    let total = members.len();
    let deg = |u: ElementSet| members.iter().filter(|m| m.is_superset(u)).count();
    // Singletons are always irreducible; an edge is reducible exactly when
    // both of its endpoints are generators.
    let is_gen = |v: usize| gens.contains(&ElementSet::singleton(v));
    let irreducible: Vec<ElementSet> = gens
        .iter()
        .copied()
        .filter(|g| g.len() == 1 || !g.iter().all(is_gen))
        .collect();
    let best = irreducible
        .iter()
        .map(|&g| deg(g))
        .min()
        .expect("some generator");
    let rho = ratio(best, total);
    p.extremal = Some((rho, code));
    if 2 * best > total {
        p.passed = 0;
        p.violation = Some((
            code,
            format!("no generator has density at most 1/2 (least {rho})"),
        ));
        return p;
    }
    let jprime: Vec<ElementSet> = irreducible
        .iter()
        .copied()
        .filter(|g| g.len() == 2)
        .collect();
    let gdeg = |v: ElementSet| {
        jprime
            .iter()
            .filter(|&&w| w != v && w.intersects(v))
            .count()
    };
    if let Some(min) = jprime.iter().map(|&v| gdeg(v)).min() {
        for &v in jprime.iter().filter(|&&v| gdeg(v) == min) {
            if 2 * deg(v) > total {
                p.passed = 0;
                p.violation = Some((
                    code,
                    format!("minimum-degree edge has density {}", ratio(deg(v), total)),
                ));
                return p;
            }
        }
    }
    p
}

fn k_edges(n: usize) -> Vec<ElementSet> {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            edges.push(ElementSet::from_indices([a, b]));
        }
    }
    edges
}

/// Scans every labeled graph on `max_vertices` vertices (every edge subset
/// of the complete graph, optionally together with every set of singleton
/// generators). For each family it checks that some generator has density
/// at most 1/2 and that so does every edge generator of minimum degree among
/// the edge generators.
pub fn exhaustive_graph_verify(max_vertices: usize, with_singletons: bool) -> Result<ScanReport> {
    let cap = if with_singletons {
        GRAPH_SCAN_SINGLETON_CAP
    } else {
        GRAPH_SCAN_CAP
    };
    if max_vertices > cap {
        return Err(Error::cap(
            "graph scan vertex count",
            max_vertices as u64,
            cap as u64,
        ));
    }
    let n = max_vertices;
    let edges = k_edges(n);
    let bits = edges.len() + if with_singletons { n } else { 0 };
    let universe = Arc::new(Universe::indexed(n.max(1))?);
    let family_at = |code: u64| {
        let gens = graph_generators(n, &edges, code);
        SetFamily::from_sorted(universe.clone(), graph_members(n, &gens))
    };
    Ok(run_scan(
        1u64 << bits,
        true,
        |c| check_graph(n, &edges, c),
        family_at,
    ))
}

/// Universe size limit for [`small_counterexample_scan`].
pub const FAMILY_SCAN_CAP: usize = 4;

/// Checks of a single union-closed family used by the family scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyAudit {
    pub witness: WitnessReport,
    pub equivalences: Equivalences,
    pub greedy: Vec<usize>,
    pub minimal_covers: usize,
    pub sufficient: SufficientReport,
}

/// All per-family checks: the element witness, agreement of the four forms,
/// the greedy and minimal cover facts and the sufficient conditions on the
/// complement.
pub fn audit_family(f: &SetFamily) -> Result<FamilyAudit> {
    let witness = find_witness(f, WitnessKind::Element)?;
    if !witness.satisfied {
        return Err(Error::Violation(format!(
            "no element in half the members of {}",
            f.render()
        )));
    }
    let equivalences = check_equivalences(f)?;
    if !equivalences.agree {
        return Err(Error::Violation(format!(
            "the four forms disagree on {}",
            f.render()
        )));
    }
    Ok(FamilyAudit {
        witness,
        equivalences,
        greedy: greedy_cover(f)?,
        minimal_covers: minimal_cover_boolean(f)?,
        sufficient: sufficient_conditions(&f.complement())?,
    })
}

/// Scans every subfamily of `2^[k]` for `k = max_universe`; union-closed
/// families with at least two members, one of them non-empty, are checked
/// for an element in half the members (and, with `full`, every check of
/// [`audit_family`]). Smaller universes are covered as subfamilies.
pub fn small_counterexample_scan(max_universe: usize, full: bool) -> Result<ScanReport> {
    if max_universe > FAMILY_SCAN_CAP {
        return Err(Error::cap(
            "family scan universe size",
            max_universe as u64,
            FAMILY_SCAN_CAP as u64,
        ));
    }
    let k = max_universe;
    let subsets = 1usize << k;
    let universe = Arc::new(Universe::indexed(k.max(1))?);
    let family_at = |code: u64| {
        let members = (0..subsets as u64)
            .filter(|&s| code >> s & 1 == 1)
            .map(ElementSet::from_bits)
            .collect();
        SetFamily::from_sorted(universe.clone(), members)
    };
    let union_closed = |code: u64| {
        (0..subsets).all(|a| {
            code >> a & 1 == 0
                || (0..subsets).all(|b| code >> b & 1 == 0 || code >> (a | b) & 1 == 1)
        })
    };
    let eval = |code: u64| {
        let mut p = Partial::empty();
        p.scanned = 1;
        p.passed = 1;
        if code.count_ones() < 2 || !union_closed(code) {
            p.vacuous = 1;
            return p;
        }
        let f = family_at(code);
        let result = if full {
            audit_family(&f).map(|a| a.witness)
        } else {
            find_witness(&f, WitnessKind::Element)
        };
        match result {
            Ok(w) if w.satisfied => {
                p.extremal = Some((ratio(w.degree, f.len()), code));
            }
            Ok(_) => {
                p.passed = 0;
                p.violation = Some((code, "no element in half the members".into()));
            }
            Err(e) => {
                p.passed = 0;
                p.violation = Some((code, e.to_string()));
            }
        }
        p
    };
    Ok(run_scan(1u64 << subsets, false, eval, family_at))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::graph_family;
    use crate::rational::half;

    fn uni(labels: &[&str]) -> Arc<Universe> {
        Arc::new(Universe::new(labels.iter().copied()).unwrap())
    }

    fn family(labels: &[&str], sets: &[&str]) -> SetFamily {
        let u = uni(labels);
        let members: Vec<ElementSet> = sets.iter().map(|s| u.parse_set(s).unwrap()).collect();
        SetFamily::new(u, members).unwrap()
    }

    fn triangle() -> SetFamily {
        family(&["a", "b", "c"], &["", "a b", "b c", "a c", "a b c"])
    }

    fn pentagon() -> SetFamily {
        let u = Arc::new(Universe::indexed(5).unwrap());
        let e: Vec<ElementSet> = (0..5)
            .map(|i| ElementSet::from_indices([i, (i + 1) % 5]))
            .collect();
        graph_family(&u, &e).unwrap()
    }

    #[test]
    fn witnesses() {
        let t = triangle();
        let w = find_witness(&t, WitnessKind::Element).unwrap();
        assert_eq!(
            (w.witness, w.degree, w.satisfied),
            (ElementSet::singleton(0), 3, true)
        );
        assert_eq!(w.threshold, Rational::new(5, 2));

        let small = family(&["1"], &["", "1"]);
        let w = find_witness(&small, WitnessKind::Element).unwrap();
        assert_eq!((w.degree, w.satisfied), (1, true));

        let p = pentagon();
        assert_eq!(p.len(), 17);
        let w = find_witness(&p, WitnessKind::Generator).unwrap();
        assert_eq!(
            (w.witness, w.degree, w.satisfied),
            (ElementSet::from_indices([0, 1]), 7, true)
        );

        assert!(matches!(
            find_witness(&family(&["a"], &["a"]), WitnessKind::Element),
            Err(Error::TooFewMembers { len: 1 })
        ));
        assert!(find_witness(&family(&["a", "b"], &["a", "a b"]), WitnessKind::Generator).is_err());
    }

    #[test]
    fn transforms() {
        let t = triangle();
        let Transformed::Family(c) = transform(&t, TransformTarget::Complement).unwrap() else {
            panic!()
        };
        assert_eq!(c, family(&["a", "b", "c"], &["a b c", "c", "a", "b", ""]));
        assert!(c.is_intersection_closed());
        let Transformed::Family(back) = transform(&c, TransformTarget::Complement).unwrap() else {
            panic!()
        };
        assert_eq!(back, t);
        let Transformed::Lattice(l) = transform(&t, TransformTarget::SemilatticeForm).unwrap()
        else {
            panic!()
        };
        let j = l.join_irreducibles();
        assert_eq!(j.len(), 3);
        assert!(j.iter().all(|&x| l.filter_of(x).len() == 2));
        let e = check_equivalences(&t).unwrap();
        assert!(e.agree && e.element_form && e.lattice_form);
    }

    #[test]
    fn sufficient_examples() {
        let g = family(&["1", "2"], &["", "1", "1 2"]);
        let r = sufficient_conditions(&g).unwrap();
        assert!(r.average_applies && r.removal_applies);
        assert_eq!(r.average_size, Rational::from_integer(1));
        assert_eq!(r.witness, Some((1, 1)));

        let pc = pentagon().complement();
        let r = sufficient_conditions(&pc).unwrap();
        assert_eq!(r.average_size, Rational::new(pc.total_size() as i128, 17));
        assert_eq!(
            r.witness.is_some(),
            intersection_witness(&pc).unwrap().is_some()
        );
        assert!(sufficient_conditions(&triangle()).is_err());
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_cover(&pentagon()).unwrap(), vec![0, 2, 3]);
        assert_eq!(
            greedy_cover(&family(&["a", "b"], &["", "a b"])).unwrap(),
            vec![0]
        );
        let b3 = SetFamily::new(
            Arc::new(Universe::indexed(3).unwrap()),
            ElementSet::full(3).subsets(),
        )
        .unwrap();
        let y = greedy_cover(&b3).unwrap();
        assert_eq!(y, vec![0, 1, 2]);
        assert_eq!(minimal_covers(&b3).unwrap(), vec![ElementSet::full(3)]);
        assert_eq!(minimal_cover_boolean(&b3).unwrap(), 1);
        assert_eq!(log_cover_bound(17), 5);
        assert_eq!(log_cover_bound(2), 2);
        assert_eq!(log_cover_bound(3), 2);
        assert_eq!(log_cover_bound(1), 1);
    }

    #[test]
    fn graph_scans() {
        let r = exhaustive_graph_verify(3, false).unwrap();
        assert_eq!((r.scanned, r.passed, r.vacuous), (8, 8, 1));
        assert_eq!(r.extremal_rho, Some(half()));
        let r = exhaustive_graph_verify(4, false).unwrap();
        assert_eq!((r.scanned, r.passed), (64, 64));
        let r = exhaustive_graph_verify(3, true).unwrap();
        assert_eq!(r.scanned, 64);
        assert!(r.holds());
        assert!(exhaustive_graph_verify(7, false)
            .unwrap_err()
            .is_cap_exceeded());
    }

    #[test]
    fn family_scans() {
        let r = small_counterexample_scan(2, true).unwrap();
        assert_eq!(r.scanned, 16);
        assert!(r.holds());
        // union-closed subfamilies of 2^[2] with at least two members
        let qualifying = r.scanned - r.vacuous;
        assert_eq!(qualifying, 9);
        assert_eq!(r.extremal_rho, Some(half()));
    }
}
