//! Closures, E-sets, extensions and the averaged quantity `mu`.
//!
//! Throughout, `f` is a union-closed family containing `∅` and `u` the set
//! whose density `ρ_f(u) = |f_⊇u| / |f|` is being estimated. An extension is
//! `f ∨ h` for a non-empty union-closed `h` whose members avoid `u`. For
//! `X` disjoint from `u`, `E(X)` is the set of `Y ⊆ u` for which `X ∪ Y`
//! belongs to every extension having a member whose `u`-free part is `X`;
//! `mu` averages `|E(X)|` over the `u`-free parts of an extension and never
//! exceeds `1/ρ` of that extension.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::family::{ElementSet, Restriction, SetFamily, Universe};
use crate::lattice::irreducible_members;
use crate::rational::{one_minus_half_pow, ratio, Rational};

/// Largest `|s|` whose filters are enumerated unless a caller raises it.
pub const DEFAULT_FILTER_CAP: usize = 6;

/// The closure `π(X) = ⋃{V ∈ G(F) | V ⊆ X}` backed by the generator list.
#[derive(Debug, Clone)]
pub struct Closure {
    gens: Vec<ElementSet>,
}

impl Closure {
    pub fn of(f: &SetFamily) -> Result<Self> {
        f.require_union_closed()?;
        Ok(Closure {
            gens: irreducible_members(f.members()),
        })
    }

    pub fn generators(&self) -> &[ElementSet] {
        &self.gens
    }

    #[inline]
    pub fn pi(&self, x: ElementSet) -> ElementSet {
        self.gens
            .iter()
            .filter(|g| g.is_subset(x))
            .fold(ElementSet::EMPTY, |a, &g| a | g)
    }

    /// `π̄(X) = X ∖ π(X)`, the isolated elements of `X`.
    #[inline]
    pub fn isolated(&self, x: ElementSet) -> ElementSet {
        x - self.pi(x)
    }
}

/// `(π(X), π̄(X))`.
pub fn closure(f: &SetFamily, x: ElementSet) -> Result<(ElementSet, ElementSet)> {
    f.universe().check(x)?;
    let c = Closure::of(f)?;
    let p = c.pi(x);
    Ok((p, x - p))
}

/// `ρ_f(u) = |f_⊇u| / |f|`.
pub fn rho(f: &SetFamily, u: ElementSet) -> Result<Rational> {
    if f.is_empty() {
        return Err(Error::TooFewMembers { len: 0 });
    }
    Ok(ratio(f.degree(u)?, f.len()))
}

/// `1/ρ`, which is unbounded when no member contains `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OneOverRho {
    Finite(Rational),
    Unbounded,
}

impl OneOverRho {
    pub fn render(&self) -> String {
        match self {
            OneOverRho::Finite(r) => crate::rational::to_pq(r),
            OneOverRho::Unbounded => "unbounded".to_string(),
        }
    }

    /// `true` when `value ≤ 1/ρ`.
    pub fn bounds(&self, value: &Rational) -> bool {
        match self {
            OneOverRho::Finite(r) => value <= r,
            OneOverRho::Unbounded => true,
        }
    }
}

pub fn one_over_rho(f: &SetFamily, u: ElementSet) -> Result<OneOverRho> {
    let r = rho(f, u)?;
    Ok(if r.is_zero() {
        OneOverRho::Unbounded
    } else {
        OneOverRho::Finite(r.recip())
    })
}

fn require_base(f: &SetFamily) -> Result<()> {
    f.require_union_closed()?;
    if !f.contains_empty() {
        return Err(Error::MissingEmptySet);
    }
    Ok(())
}

/// `N(X) = X ∪ ⋃{V ∈ J | V ∩ X ≠ ∅}`.
pub fn neighborhood_of(gens: &[ElementSet], x: ElementSet) -> ElementSet {
    gens.iter()
        .filter(|g| g.intersects(x))
        .fold(x, |a, &g| a | g)
}

/// The split of `N ∖ U` for an edge `U = {a, b}` (with `a` the smaller
/// index) by adjacency to `a` and `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePartition {
    pub a: usize,
    pub b: usize,
    pub na: ElementSet,
    pub nb: ElementSet,
    pub nab: ElementSet,
}

/// Element neighborhoods of `U` and the per-element edge data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodProfile {
    pub u: ElementSet,
    /// `N = N(U)`.
    pub n1: ElementSet,
    /// `N² = N(N(U))`.
    pub n2: ElementSet,
    /// Present only when `|U| = 2`.
    pub partition: Option<EdgePartition>,
    /// `A(x)`: the two-element generators `{x, y}` with `y ∉ U`, for
    /// `x ∈ N ∖ U`.
    pub a_edges: BTreeMap<usize, Vec<ElementSet>>,
    /// `n(x) = |A(x)|`.
    pub n_of: BTreeMap<usize, usize>,
}

pub fn neighborhoods(f: &SetFamily, u: ElementSet) -> Result<NeighborhoodProfile> {
    require_base(f)?;
    f.universe().check(u)?;
    let gens = irreducible_members(f.members());
    Ok(profile_from_generators(&gens, u))
}

fn profile_from_generators(gens: &[ElementSet], u: ElementSet) -> NeighborhoodProfile {
    let n1 = neighborhood_of(gens, u);
    let n2 = neighborhood_of(gens, n1);
    let has = |s: ElementSet| gens.contains(&s);
    let partition = (u.len() == 2).then(|| {
        let a = u.first().expect("two elements");
        let b = u.last().expect("two elements");
        let mut p = EdgePartition {
            a,
            b,
            na: ElementSet::EMPTY,
            nb: ElementSet::EMPTY,
            nab: ElementSet::EMPTY,
        };
        for x in (n1 - u).iter() {
            let xa = has(ElementSet::from_indices([x, a]));
            let xb = has(ElementSet::from_indices([x, b]));
            match (xa, xb) {
                (true, false) => p.na = p.na.with(x),
                (false, true) => p.nb = p.nb.with(x),
                (true, true) => p.nab = p.nab.with(x),
                (false, false) => {}
            }
        }
        p
    });
    let mut a_edges = BTreeMap::new();
    let mut n_of = BTreeMap::new();
    for x in (n1 - u).iter() {
        let edges: Vec<ElementSet> = gens
            .iter()
            .copied()
            .filter(|g| g.len() == 2 && g.contains(x) && g.is_disjoint(u))
            .collect();
        n_of.insert(x, edges.len());
        a_edges.insert(x, edges);
    }
    NeighborhoodProfile {
        u,
        n1,
        n2,
        partition,
        a_edges,
        n_of,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NeighborhoodOrder {
    /// `𝓝(U)`, generated by `∅` and the generators meeting `U`.
    First,
    /// `𝓝³(U) = 𝓝(⋃𝓝(U))`.
    Third,
}

/// The lattice neighborhood of `u` as a union-closed family.
pub fn lattice_neighborhood(
    f: &SetFamily,
    u: ElementSet,
    order: NeighborhoodOrder,
) -> Result<SetFamily> {
    require_base(f)?;
    f.universe().check(u)?;
    let gens = irreducible_members(f.members());
    Ok(lattice_neighborhood_from(f, &gens, u, order))
}

fn lattice_neighborhood_from(
    f: &SetFamily,
    gens: &[ElementSet],
    u: ElementSet,
    order: NeighborhoodOrder,
) -> SetFamily {
    let first = |x: ElementSet| {
        f.derive(gens.iter().copied().filter(|g| g.intersects(x)))
            .union_close(true)
    };
    let n = first(u);
    match order {
        NeighborhoodOrder::First => n,
        NeighborhoodOrder::Third => first(n.ground()),
    }
}

fn check_disjoint(f: &SetFamily, u: ElementSet, x: ElementSet) -> Result<()> {
    f.universe().check(u)?;
    f.universe().check(x)?;
    if x.intersects(u) {
        return Err(Error::Precondition("X must be disjoint from U".into()));
    }
    Ok(())
}

/// Evaluates `E(X)` for many `X` against fixed generators.
#[derive(Debug, Clone)]
pub(crate) struct EKernel {
    closure: Closure,
    u: ElementSet,
}

impl EKernel {
    pub(crate) fn new(gens: Vec<ElementSet>, u: ElementSet) -> Self {
        EKernel {
            closure: Closure { gens },
            u,
        }
    }

    pub(crate) fn count(&self, x: ElementSet) -> usize {
        let whole = self.closure.pi(x | self.u) - self.u;
        self.u
            .subsets()
            .filter(|&y| {
                let p = self.closure.pi(x | y);
                p & self.u == y && whole.is_subset(p)
            })
            .count()
    }
}

/// `E_{F,U}(X)` from the closure conditions: `Y ⊆ U` belongs iff
/// `π(X∪Y) ∩ U = Y` and `π(X∪Y) ⊇ π(X∪U) ∖ U`. Members are subsets of `U`
/// expressed over the universe of `f`.
pub fn e_set_closure(f: &SetFamily, u: ElementSet, x: ElementSet) -> Result<SetFamily> {
    require_base(f)?;
    check_disjoint(f, u, x)?;
    let c = Closure::of(f)?;
    let whole = c.pi(x | u) - u;
    Ok(f.derive(u.subsets().filter(|&y| {
        let p = c.pi(x | y);
        p & u == y && whole.is_subset(p)
    })))
}

/// `E_{F,U}(X)` from the generator conditions: every element of `Y` lies in
/// a generator inside `X ∪ Y`, and for every generator `V` with
/// `V ∖ U ⊆ X`, every element of `V ∖ U` lies in a generator inside
/// `X ∪ Y`.
pub fn e_set_generators(f: &SetFamily, u: ElementSet, x: ElementSet) -> Result<SetFamily> {
    require_base(f)?;
    check_disjoint(f, u, x)?;
    let gens = irreducible_members(f.members());
    let covered =
        |e: usize, within: ElementSet| gens.iter().any(|v| v.contains(e) && v.is_subset(within));
    let mut out = Vec::new();
    for y in u.subsets() {
        let xy = x | y;
        let first = y.iter().all(|e| covered(e, xy));
        let second = gens
            .iter()
            .filter(|v| (**v - u).is_subset(x))
            .all(|v| (*v - u).iter().all(|e| covered(e, xy)));
        if first && second {
            out.push(y);
        }
    }
    Ok(f.derive(out))
}

/// `E(X)`; the closure form is returned and, in debug builds, checked
/// against the generator form.
pub fn e_set(f: &SetFamily, u: ElementSet, x: ElementSet) -> Result<SetFamily> {
    let e = e_set_closure(f, u, x)?;
    debug_assert_eq!(e, e_set_generators(f, u, x)?);
    Ok(e)
}

/// `T_{F'}(X) = {Y ⊆ U | X ∪ Y ∈ F'}`.
pub fn t_set(fprime: &SetFamily, u: ElementSet, x: ElementSet) -> Result<SetFamily> {
    check_disjoint(fprime, u, x)?;
    Ok(fprime.derive(u.subsets().filter(|&y| fprime.contains(x | y))))
}

/// `F' = F ∨ H` with the validation required of an extension of `(F, U)`.
#[derive(Debug, Clone)]
pub struct ExtensionSpec {
    base: SetFamily,
    h: SetFamily,
    joined: SetFamily,
}

impl ExtensionSpec {
    pub fn new(base: &SetFamily, h: SetFamily, u: ElementSet) -> Result<Self> {
        base.same_universe(&h)?;
        base.require_union_closed()?;
        if h.is_empty() {
            return Err(Error::InvalidExtension("H is empty".into()));
        }
        if !h.is_union_closed() {
            return Err(Error::InvalidExtension("H is not union-closed".into()));
        }
        if h.ground().intersects(u) {
            return Err(Error::InvalidExtension("a member of H meets U".into()));
        }
        let joined = base.join_unchecked(&h);
        Ok(ExtensionSpec {
            base: base.clone(),
            h,
            joined,
        })
    }

    /// `F` as its own extension, `H = {∅}`.
    pub fn trivial(base: &SetFamily) -> Result<Self> {
        let h = base.derive([ElementSet::EMPTY]);
        ExtensionSpec::new(base, h, ElementSet::EMPTY)
    }

    pub fn base(&self) -> &SetFamily {
        &self.base
    }

    pub fn h(&self) -> &SetFamily {
        &self.h
    }

    pub fn joined(&self) -> &SetFamily {
        &self.joined
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuReport {
    pub mu: Rational,
    /// `|E(X)|` for every `X ∈ F'_∖U`.
    pub e_sizes: BTreeMap<ElementSet, usize>,
    pub rho: Rational,
    pub one_over_rho: OneOverRho,
    pub u_is_generator: bool,
}

/// `μ_{F,F'}(U) = Σ_{X ∈ F'_∖U} |E(X)| / |F'_∖U|`, with `E` taken in `base`.
/// Fails with a violation if `μ > 1/ρ_{F'}(U)`.
pub fn mu(base: &SetFamily, ext: &ExtensionSpec, u: ElementSet) -> Result<MuReport> {
    require_base(base)?;
    base.same_universe(ext.joined())?;
    base.universe().check(u)?;
    if ext.h().ground().intersects(u) {
        return Err(Error::InvalidExtension("a member of H meets U".into()));
    }
    let gens = irreducible_members(base.members());
    let kernel = EKernel::new(gens.clone(), u);
    let fprime = ext.joined();
    let away = fprime.restrict(u, Restriction::Away)?;
    let e_sizes: BTreeMap<ElementSet, usize> = away.iter().map(|x| (x, kernel.count(x))).collect();
    let total: usize = e_sizes.values().sum();
    let mu = ratio(total, away.len());
    let rho = rho(fprime, u)?;
    let inv = one_over_rho(fprime, u)?;
    if !inv.bounds(&mu) {
        return Err(Error::Violation(format!(
            "mu = {} exceeds 1/rho = {} for U = {} in {}",
            mu,
            inv.render(),
            base.universe().render(u),
            fprime.render()
        )));
    }
    Ok(MuReport {
        mu,
        e_sizes,
        rho,
        one_over_rho: inv,
        u_is_generator: gens.contains(&u),
    })
}

/// Calls `visit(mask, sum, count)` for every non-empty up-closed family of
/// subsets of `[k]` (`k ≤ 6`). Bit `c` of `mask` stands for the subset with
/// compact code `c`; `sum` adds up `weights[c]` over the members.
fn visit_filters_weighted(k: usize, weights: &[u64], visit: &mut dyn FnMut(u64, u64, u32)) {
    assert!(k <= 6, "filter masks hold at most 64 subsets");
    let full: u64 = (1u64 << k) - 1;
    // Decreasing size, then decreasing value: every superset precedes its
    // subsets.
    let mut order: Vec<u64> = (0..=full).collect();
    order.sort_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(b.cmp(a)));
    let supers: Vec<u64> = (0..=full)
        .map(|c| {
            (0..k)
                .filter(|&e| c & (1 << e) == 0)
                .fold(0u64, |m, e| m | 1u64 << (c | 1 << e))
        })
        .collect();

    fn go(
        i: usize,
        mask: u64,
        sum: u64,
        count: u32,
        order: &[u64],
        supers: &[u64],
        weights: &[u64],
        visit: &mut dyn FnMut(u64, u64, u32),
    ) {
        if i == order.len() {
            if mask != 0 {
                visit(mask, sum, count);
            }
            return;
        }
        let c = order[i] as usize;
        if mask & supers[c] == supers[c] {
            go(
                i + 1,
                mask | 1u64 << c,
                sum + weights[c],
                count + 1,
                order,
                supers,
                weights,
                visit,
            );
        }
        // Once a subset is left out, none of its subsets can be added, so the
        // remaining branch is forced only through the supers check above.
        go(i + 1, mask, sum, count, order, supers, weights, visit);
    }
    go(0, 0, 0, 0, &order, &supers, weights, visit);
}

/// Every non-empty filter of `2^[k]` as a bitmask over compact subset codes.
pub fn for_each_filter(k: usize, mut visit: impl FnMut(u64)) {
    let zeros = vec![0u64; 1 << k];
    visit_filters_weighted(k, &zeros, &mut |mask, _, _| visit(mask));
}

/// Number of non-empty filters of `2^[k]`.
pub fn count_filters(k: usize) -> u64 {
    let mut n = 0;
    for_each_filter(k, |_| n += 1);
    n
}

/// Decodes a filter mask over the subsets of `s` into a family.
pub fn filter_family(universe: &Arc<Universe>, s: ElementSet, mask: u64) -> SetFamily {
    let members = bits(mask).map(|c| s.expand(c)).collect();
    SetFamily::from_sorted(universe.clone(), members)
}

fn bits(mask: u64) -> impl Iterator<Item = u64> {
    let mut m = mask;
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let c = m.trailing_zeros() as u64;
            m &= m - 1;
            c
        })
    })
}

/// All non-empty filters of `2^s`, in enumeration order.
pub fn enumerate_filters(
    universe: &Arc<Universe>,
    s: ElementSet,
    cap: usize,
) -> Result<Vec<SetFamily>> {
    universe.check(s)?;
    if s.len() > cap.min(6) {
        return Err(Error::cap(
            "filter ground set size",
            s.len() as u64,
            cap.min(6) as u64,
        ));
    }
    let mut out = Vec::new();
    for_each_filter(s.len(), |mask| out.push(filter_family(universe, s, mask)));
    Ok(out)
}

/// Lexicographic order of the ascending member lists of two filter masks.
fn lex_less(a: u64, b: u64) -> bool {
    let d = a ^ b;
    if d == 0 {
        return false;
    }
    let t = d.trailing_zeros();
    let above = |m: u64| if t == 63 { 0 } else { m >> (t + 1) };
    if a & (1u64 << t) != 0 {
        // a has the smaller element at the first difference unless b's list
        // ends there (b is then a prefix of a).
        above(b) != 0
    } else {
        above(a) == 0
    }
}

/// The minimum of `μ` over all extensions of `(f, u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinMu {
    pub value: Rational,
    /// The minimizing filter of `2^{N²∖U}`.
    pub witness: SetFamily,
    /// `N² ∖ U`.
    pub ground: ElementSet,
    pub filters_scanned: u64,
}

/// Precomputed data for minimising `μ` over filters of `2^{N²∖U}`.
struct FilterSearch {
    s: ElementSet,
    k: usize,
    e: Vec<u64>,
}

impl FilterSearch {
    fn new(f: &SetFamily, u: ElementSet, cap: usize) -> Result<Self> {
        require_base(f)?;
        f.universe().check(u)?;
        let gens = irreducible_members(f.members());
        if !gens.contains(&u) {
            return Err(Error::Precondition(format!(
                "{} is not a generator",
                f.universe().render(u)
            )));
        }
        let n3 = lattice_neighborhood_from(f, &gens, u, NeighborhoodOrder::Third);
        let profile = profile_from_generators(&gens, u);
        let s = profile.n2 - u;
        let k = s.len();
        let cap = cap.min(6);
        if k > cap {
            return Err(Error::cap("|N² ∖ U|", k as u64, cap as u64));
        }
        let kernel = EKernel::new(irreducible_members(n3.members()), u);
        let e = (0..1u64 << k)
            .map(|c| kernel.count(s.expand(c)) as u64)
            .collect();
        Ok(FilterSearch { s, k, e })
    }

    /// Minimal members of a filter all have `|E| = 1`.
    fn minimal_members_tight(&self, mask: u64) -> bool {
        bits(mask).all(|c| {
            let minimal =
                (0..self.k).all(|i| c & (1 << i) == 0 || mask & (1u64 << (c & !(1 << i))) == 0);
            !minimal || self.e[c as usize] == 1
        })
    }

    fn search(&self, only_tight: bool) -> (Option<(u64, u64, u32)>, u64) {
        let mut best: Option<(u64, u64, u32)> = None;
        let mut scanned = 0u64;
        visit_filters_weighted(self.k, &self.e, &mut |mask, sum, count| {
            scanned += 1;
            if only_tight && !self.minimal_members_tight(mask) {
                return;
            }
            let better = match best {
                None => true,
                Some((bm, bs, bc)) => {
                    let lhs = sum as u128 * bc as u128;
                    let rhs = bs as u128 * count as u128;
                    lhs < rhs || (lhs == rhs && lex_less(mask, bm))
                }
            };
            if better {
                best = Some((mask, sum, count));
            }
        });
        (best, scanned)
    }
}

/// Exact minimum of `μ_{F,F'}(U)` over all extensions `F'`, taken over the
/// filters of `2^{N²∖U}` joined to `𝓝³(U)`. Ties go to the filter whose
/// sorted member list is lexicographically least.
pub fn min_mu(f: &SetFamily, u: ElementSet, cap: usize) -> Result<MinMu> {
    let search = FilterSearch::new(f, u, cap)?;
    let (best, scanned) = search.search(false);
    let (mask, sum, count) = best.expect("the full filter always exists");
    Ok(MinMu {
        value: ratio(sum as usize, count as usize),
        witness: filter_family(f.universe_arc(), search.s, mask),
        ground: search.s,
        filters_scanned: scanned,
    })
}

/// Fast decision of `min μ < 2`, scanning only filters whose minimal
/// members have `|E| = 1`. Returns the best such filter when its `μ` is
/// below 2.
pub fn min_mu_below_two(
    f: &SetFamily,
    u: ElementSet,
    cap: usize,
) -> Result<Option<(Rational, SetFamily)>> {
    let search = FilterSearch::new(f, u, cap)?;
    let (best, _) = search.search(true);
    Ok(best.and_then(|(mask, sum, count)| {
        (sum < 2 * count as u64).then(|| {
            (
                ratio(sum as usize, count as usize),
                filter_family(f.universe_arc(), search.s, mask),
            )
        })
    }))
}

/// Generators of `f` and the edge data used by the product bound.
struct EdgeBoundData {
    gens: Vec<ElementSet>,
    profile: NeighborhoodProfile,
}

impl EdgeBoundData {
    fn new(f: &SetFamily, u: ElementSet) -> Result<Self> {
        require_base(f)?;
        f.universe().check(u)?;
        if u.len() != 2 {
            return Err(Error::Precondition(
                "U must have exactly two elements".into(),
            ));
        }
        let gens = irreducible_members(f.members());
        if gens.iter().any(|g| g.intersects(u) && g.len() > 2) {
            return Err(Error::Precondition(
                "generators meeting U must have at most two elements".into(),
            ));
        }
        let profile = profile_from_generators(&gens, u);
        Ok(EdgeBoundData { gens, profile })
    }

    fn s(&self) -> ElementSet {
        self.profile.n2 - self.profile.u
    }

    fn edge(&self, x: usize, y: usize) -> bool {
        self.gens.contains(&ElementSet::from_indices([x, y]))
    }

    /// `X ∈ 𝓔(Y, x)`: some generator `{x, y}` has `y ∈ X ∪ Y` or `y = x`.
    fn in_edge_filter(&self, y_set: ElementSet, x: usize, xs: ElementSet) -> bool {
        self.edge(x, x) || (xs | y_set).iter().any(|y| y != x && self.edge(x, y))
    }

    fn nu_exact(&self, y_set: ElementSet, x: usize) -> Rational {
        if self.edge(x, x) || y_set.iter().any(|y| self.edge(x, y)) {
            return Rational::one();
        }
        let b = self
            .s()
            .iter()
            .filter(|&y| y != x && self.edge(x, y))
            .count();
        one_minus_half_pow(b as u32)
    }

    fn nu_counted(&self, y_set: ElementSet, x: usize) -> Rational {
        let s = self.s();
        let k = s.len();
        let hits = (0..1u64 << k)
            .filter(|&c| self.in_edge_filter(y_set, x, s.expand(c)))
            .count();
        Rational::new(hits as i128, 1i128 << k)
    }

    fn bound(&self, nu: impl Fn(ElementSet, usize) -> Rational) -> Rational {
        let u = self.profile.u;
        let outer = self.profile.n1 - u;
        let mut total = Rational::one();
        for y in u.subsets().filter(|&y| y != u) {
            total += outer.iter().fold(Rational::one(), |acc, x| acc * nu(y, x));
        }
        total
    }
}

/// `1 + Σ_{Y ⊊ U} Π_{x ∈ N∖U} ν(𝓔(Y, x))` with each `ν` in closed form.
pub fn product_bound(f: &SetFamily, u: ElementSet) -> Result<Rational> {
    let d = EdgeBoundData::new(f, u)?;
    Ok(d.bound(|y, x| d.nu_exact(y, x)))
}

/// The same bound with every `ν(𝓔(Y, x))` counted over `2^{N²∖U}`.
pub fn product_bound_counted(f: &SetFamily, u: ElementSet, cap: usize) -> Result<Rational> {
    let d = EdgeBoundData::new(f, u)?;
    let k = d.s().len();
    if k > cap {
        return Err(Error::cap("|N² ∖ U|", k as u64, cap as u64));
    }
    Ok(d.bound(|y, x| d.nu_counted(y, x)))
}

/// `𝓔(Y, x)` as a family of subsets of `N² ∖ U`.
pub fn edge_filter(
    f: &SetFamily,
    u: ElementSet,
    y: ElementSet,
    x: usize,
    cap: usize,
) -> Result<SetFamily> {
    let d = EdgeBoundData::new(f, u)?;
    if !y.is_subset(u) || !(d.profile.n1 - u).contains(x) {
        return Err(Error::Precondition("need Y ⊆ U and x ∈ N ∖ U".into()));
    }
    let s = d.s();
    if s.len() > cap {
        return Err(Error::cap("|N² ∖ U|", s.len() as u64, cap as u64));
    }
    Ok(f.derive(s.subsets().filter(|&xs| d.in_edge_filter(y, x, xs))))
}

/// `d_G(U) = |{V ∈ G ∖ {U} | V ∩ U ≠ ∅}|`.
pub fn graph_degree(g: &[ElementSet], u: ElementSet) -> usize {
    g.iter().filter(|&&v| v != u && v.intersects(u)).count()
}

/// Outcome of the local density test at an edge generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalVerdict {
    /// The generators form a graph and every two-element generator meeting
    /// `U` has degree at least that of `U` among two-element generators.
    pub degree_hypothesis: bool,
    /// The generators meeting `U` form a graph and, in the chosen simple
    /// graph `G'`, every edge meeting `U` has degree at least that of `U`.
    pub local_graph_hypothesis: bool,
    pub guaranteed: bool,
    pub actual_rho: Rational,
    /// `None` when `|N² ∖ U|` is above the cap.
    pub min_mu: Option<Rational>,
}

/// Checks the local degree hypotheses at `u` and, when one holds, that
/// `ρ ≤ 1/2` and `min μ ≥ 2` (a violation otherwise). `gprime = None` uses
/// the two-element generators.
pub fn check_local(
    f: &SetFamily,
    u: ElementSet,
    gprime: Option<&SetFamily>,
    cap: usize,
) -> Result<LocalVerdict> {
    require_base(f)?;
    f.universe().check(u)?;
    if u.len() != 2 {
        return Err(Error::Precondition(
            "U must have exactly two elements".into(),
        ));
    }
    let gens = irreducible_members(f.members());
    if !gens.contains(&u) {
        return Err(Error::Precondition(format!(
            "{} is not a generator",
            f.universe().render(u)
        )));
    }
    let jprime: Vec<ElementSet> = gens.iter().copied().filter(|g| g.len() == 2).collect();
    let all_graph = gens.iter().all(|g| g.len() <= 2);
    let du = graph_degree(&jprime, u);
    let degree_hypothesis = all_graph
        && jprime
            .iter()
            .filter(|v| v.intersects(u))
            .all(|&v| graph_degree(&jprime, v) >= du);

    let local: Vec<ElementSet> = gens.iter().copied().filter(|g| g.intersects(u)).collect();
    let gp: Vec<ElementSet> = match gprime {
        Some(g) => {
            f.same_universe(g)?;
            g.members().to_vec()
        }
        None => jprime.clone(),
    };
    let gp_ok = gp.iter().all(|v| v.len() == 2 && gens.contains(v));
    let local_graph_hypothesis = gp_ok
        && local.iter().all(|g| g.len() <= 2)
        && local
            .iter()
            .filter(|v| v.len() == 2)
            .all(|v| gp.contains(v))
        && {
            let dgu = graph_degree(&gp, u);
            local
                .iter()
                .filter(|v| v.len() == 2)
                .all(|&v| graph_degree(&gp, v) >= dgu)
        };
    let guaranteed = degree_hypothesis || local_graph_hypothesis;
    let actual_rho = rho(f, u)?;
    let min_mu = match min_mu(f, u, cap) {
        Ok(m) => Some(m.value),
        Err(e) if e.is_cap_exceeded() => None,
        Err(e) => return Err(e),
    };
    if guaranteed {
        let two = Rational::from_integer(2);
        if actual_rho > crate::rational::half() || min_mu.is_some_and(|m| m < two) {
            return Err(Error::Violation(format!(
                "local hypothesis holds at {} but rho = {} and min mu = {:?} in {}",
                f.universe().render(u),
                actual_rho,
                min_mu,
                f.render()
            )));
        }
    }
    Ok(LocalVerdict {
        degree_hypothesis,
        local_graph_hypothesis,
        guaranteed,
        actual_rho,
        min_mu,
    })
}

/// Checks Kleitman's correlation inequality for every pair of non-empty
/// filters of `2^[k]`; returns the number of pairs.
pub fn kleitman_check(k: usize) -> Result<u64> {
    let mut filters = Vec::new();
    for_each_filter(k, |m| filters.push(m));
    let n = 1u64 << k;
    let mut pairs = 0;
    for &a in &filters {
        for &b in &filters {
            let lhs = (a & b).count_ones() as u64 * n;
            let rhs = a.count_ones() as u64 * b.count_ones() as u64;
            if lhs < rhs {
                return Err(Error::Violation(format!(
                    "filters {a:#x} and {b:#x} of 2^[{k}] are negatively correlated"
                )));
            }
            pairs += 1;
        }
    }
    Ok(pairs)
}
