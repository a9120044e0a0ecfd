//! Posets, lattices and the correspondence between semilattices and
//! union- or intersection-closed families.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{ElementSet, SetFamily, Universe};

/// Lattices above this size are not tested for selfduality.
pub const SELFDUAL_CAP: usize = 20;

/// A finite poset stored as a dense `≤` matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    leq: Vec<bool>,
}

impl Poset {
    /// Validates reflexivity, antisymmetry and transitivity of `leq`
    /// (row-major, `leq[i * n + j]` means `i ≤ j`).
    pub fn new(labels: Vec<String>, leq: Vec<bool>) -> Result<Self> {
        let n = labels.len();
        if leq.len() != n * n {
            return Err(Error::InvalidPoset(format!(
                "order matrix has {} entries, expected {}",
                leq.len(),
                n * n
            )));
        }
        let p = Poset { labels, leq };
        for i in 0..n {
            if !p.leq(i, i) {
                return Err(Error::InvalidPoset(format!("`{}` ≰ itself", p.labels[i])));
            }
            for j in 0..n {
                if i != j && p.leq(i, j) && p.leq(j, i) {
                    return Err(Error::InvalidPoset(format!(
                        "`{}` and `{}` are mutually below each other",
                        p.labels[i], p.labels[j]
                    )));
                }
                for k in 0..n {
                    if p.leq(i, j) && p.leq(j, k) && !p.leq(i, k) {
                        return Err(Error::InvalidPoset(format!(
                            "order is not transitive at `{}` ≤ `{}` ≤ `{}`",
                            p.labels[i], p.labels[j], p.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(p)
    }

    /// Reflexive-transitive closure of the given `(below, above)` pairs.
    pub fn from_relations(labels: Vec<String>, relations: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in relations {
            if a >= n || b >= n {
                return Err(Error::InvalidPoset(
                    "relation mentions an unknown element".into(),
                ));
            }
            leq[a * n + b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Poset::new(labels, leq)
    }

    fn from_fn(labels: Vec<String>, f: impl Fn(usize, usize) -> bool) -> Self {
        let n = labels.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = f(i, j);
            }
        }
        Poset { labels, leq }
    }

    /// The chain `[n]` on labels `1..=n`.
    pub fn chain(n: usize) -> Self {
        Poset::from_fn((1..=n).map(|i| i.to_string()).collect(), |i, j| i <= j)
    }

    pub fn antichain(n: usize) -> Self {
        Poset::from_fn((1..=n).map(|i| i.to_string()).collect(), |i, j| i == j)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.len() + j]
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// `x` covers `y`.
    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.lt(y, x) && !(0..self.len()).any(|z| self.lt(y, z) && self.lt(z, x))
    }

    pub fn lower_covers(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.covers(x, y)).collect()
    }

    pub fn upper_covers(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.covers(y, x)).collect()
    }

    /// `[x)`.
    pub fn up_set(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.leq(x, y)).collect()
    }

    /// `(x]`.
    pub fn down_set(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.leq(y, x)).collect()
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| !(0..self.len()).any(|y| self.lt(y, x)))
            .collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| !(0..self.len()).any(|y| self.lt(x, y)))
            .collect()
    }

    /// Elements ordered so that `x < y` implies `x` comes first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (self.down_set(x).len(), x));
        order
    }

    /// Length (number of covers) of a longest chain.
    pub fn height(&self) -> usize {
        let mut depth = vec![0usize; self.len()];
        for x in self.linear_extension() {
            depth[x] = self
                .lower_covers(x)
                .into_iter()
                .map(|y| depth[y] + 1)
                .max()
                .unwrap_or(0);
        }
        depth.into_iter().max().unwrap_or(0)
    }

    /// `true` when the index set (as a bitmask over elements) is up-closed.
    pub fn is_up_set(&self, members: &[bool]) -> bool {
        (0..self.len())
            .all(|x| !members[x] || (0..self.len()).all(|y| !self.leq(x, y) || members[y]))
    }

    pub fn induced(&self, elements: &[usize]) -> Poset {
        let labels = elements.iter().map(|&i| self.labels[i].clone()).collect();
        Poset::from_fn(labels, |i, j| self.leq(elements[i], elements[j]))
    }

    pub fn dual(&self) -> Poset {
        Poset::from_fn(self.labels.clone(), |i, j| self.leq(j, i))
    }

    /// Disjoint union `P + Q`.
    pub fn sum(&self, other: &Poset) -> Poset {
        let n = self.len();
        let mut labels = self.labels.clone();
        for l in &other.labels {
            let mut l = l.clone();
            while labels.contains(&l) {
                l.push('\'');
            }
            labels.push(l);
        }
        Poset::from_fn(labels, |i, j| match (i < n, j < n) {
            (true, true) => self.leq(i, j),
            (false, false) => other.leq(i - n, j - n),
            _ => false,
        })
    }

    /// Componentwise order on `P × Q`; element `(i, j)` has index
    /// `i * |Q| + j`.
    pub fn product(&self, other: &Poset) -> Poset {
        let m = other.len();
        let mut labels = Vec::with_capacity(self.len() * m);
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("({a},{b})"));
            }
        }
        Poset::from_fn(labels, |x, y| {
            self.leq(x / m, y / m) && other.leq(x % m, y % m)
        })
    }

    /// An order isomorphism `self → other` if one exists, by backtracking
    /// over a linear extension with degree-profile pruning.
    pub fn isomorphism(&self, other: &Poset) -> Option<Vec<usize>> {
        let n = self.len();
        if n != other.len() {
            return None;
        }
        let profile = |p: &Poset, x: usize| {
            (
                p.down_set(x).len(),
                p.up_set(x).len(),
                p.lower_covers(x).len(),
                p.upper_covers(x).len(),
            )
        };
        let mine: Vec<_> = (0..n).map(|x| profile(self, x)).collect();
        let theirs: Vec<_> = (0..n).map(|x| profile(other, x)).collect();
        let mut a = mine.clone();
        let mut b = theirs.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
        let order = self.linear_extension();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn go(
            k: usize,
            order: &[usize],
            p: &Poset,
            q: &Poset,
            mine: &[(usize, usize, usize, usize)],
            theirs: &[(usize, usize, usize, usize)],
            map: &mut [usize],
            used: &mut [bool],
        ) -> bool {
            if k == order.len() {
                return true;
            }
            let x = order[k];
            for t in 0..q.len() {
                if used[t] || mine[x] != theirs[t] {
                    continue;
                }
                let consistent = order[..k]
                    .iter()
                    .all(|&y| p.leq(y, x) == q.leq(map[y], t) && p.leq(x, y) == q.leq(t, map[y]));
                if !consistent {
                    continue;
                }
                map[x] = t;
                used[t] = true;
                if go(k + 1, order, p, q, mine, theirs, map, used) {
                    return true;
                }
                used[t] = false;
            }
            false
        }
        go(0, &order, self, other, &mine, &theirs, &mut map, &mut used).then_some(map)
    }

    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        self.isomorphism(other).is_some()
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel: Vec<String> = (0..self.len())
            .flat_map(|x| self.lower_covers(x).into_iter().map(move |y| (y, x)))
            .map(|(y, x)| format!("{} < {}", self.labels[y], self.labels[x]))
            .collect();
        write!(f, "Poset{:?} [{}]", self.labels, rel.join(", "))
    }
}

/// The three poset constructions used by the P-density machinery.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PosetOp {
    Sum,
    Product,
    Dual,
}

/// `dual` ignores `q`.
pub fn poset_op(p: &Poset, q: &Poset, kind: PosetOp) -> Poset {
    match kind {
        PosetOp::Sum => p.sum(q),
        PosetOp::Product => p.product(q),
        PosetOp::Dual => p.dual(),
    }
}

/// A lattice with precomputed join and meet tables.
#[derive(Clone)]
pub struct LatticeView {
    poset: Poset,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
    adjoined_bottom: bool,
}

impl LatticeView {
    pub fn from_poset(poset: Poset) -> Result<Self> {
        let n = poset.len();
        if n == 0 {
            return Err(Error::NotLattice("empty poset".into()));
        }
        let down_size: Vec<usize> = (0..n).map(|x| poset.down_set(x).len()).collect();
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for i in 0..n {
            for j in i..n {
                let lub = (0..n)
                    .filter(|&z| poset.leq(i, z) && poset.leq(j, z))
                    .min_by_key(|&z| down_size[z])
                    .filter(|&z| {
                        (0..n).all(|w| !(poset.leq(i, w) && poset.leq(j, w)) || poset.leq(z, w))
                    })
                    .ok_or_else(|| {
                        Error::NotLattice(format!(
                            "`{}` and `{}` have no least upper bound",
                            poset.label(i),
                            poset.label(j)
                        ))
                    })?;
                let glb = (0..n)
                    .filter(|&z| poset.leq(z, i) && poset.leq(z, j))
                    .max_by_key(|&z| down_size[z])
                    .filter(|&z| {
                        (0..n).all(|w| !(poset.leq(w, i) && poset.leq(w, j)) || poset.leq(w, z))
                    })
                    .ok_or_else(|| {
                        Error::NotLattice(format!(
                            "`{}` and `{}` have no greatest lower bound",
                            poset.label(i),
                            poset.label(j)
                        ))
                    })?;
                join[i * n + j] = lub;
                join[j * n + i] = lub;
                meet[i * n + j] = glb;
                meet[j * n + i] = glb;
            }
        }
        let bottom = poset.minimal()[0];
        let top = poset.maximal()[0];
        Ok(LatticeView {
            poset,
            join,
            meet,
            bottom,
            top,
            adjoined_bottom: false,
        })
    }

    /// Accepts a join-semilattice and adjoins a least element `0̂` (as the
    /// last index) when it has none.
    pub fn from_join_semilattice(poset: Poset) -> Result<Self> {
        if poset.minimal().len() <= 1 {
            return LatticeView::from_poset(poset);
        }
        let n = poset.len();
        let mut labels = poset.labels.clone();
        labels.push("0̂".to_string());
        let extended = Poset::from_fn(labels, |i, j| i == n || (j != n && poset.leq(i, j)));
        let mut l = LatticeView::from_poset(extended)?;
        l.adjoined_bottom = true;
        Ok(l)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        self.poset.label(i)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.poset.leq(i, j)
    }

    #[inline]
    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.len() + j]
    }

    #[inline]
    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.len() + j]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn has_adjoined_bottom(&self) -> bool {
        self.adjoined_bottom
    }

    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.poset.covers(x, y)
    }

    /// `J(L)`: elements other than `0̂` with exactly one lower cover.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| x != self.bottom && self.poset.lower_covers(x).len() == 1)
            .collect()
    }

    /// `M(L)`: elements other than `1̂` with exactly one upper cover.
    pub fn meet_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| x != self.top && self.poset.upper_covers(x).len() == 1)
            .collect()
    }

    pub fn is_join_irreducible(&self, x: usize) -> bool {
        x < self.len() && x != self.bottom && self.poset.lower_covers(x).len() == 1
    }

    pub fn atoms(&self) -> Vec<usize> {
        self.poset.upper_covers(self.bottom)
    }

    pub fn coatoms(&self) -> Vec<usize> {
        self.poset.lower_covers(self.top)
    }

    /// `[a)`.
    pub fn filter_of(&self, a: usize) -> Vec<usize> {
        self.poset.up_set(a)
    }

    /// `(x]`.
    pub fn ideal_of(&self, x: usize) -> Vec<usize> {
        self.poset.down_set(x)
    }

    /// The interval sublattice on the given elements, which must be closed
    /// under the joins and meets of `self` (principal ideals and filters
    /// are).
    pub fn sublattice(&self, elements: &[usize]) -> Result<LatticeView> {
        LatticeView::from_poset(self.poset.induced(elements))
    }

    pub fn dual(&self) -> LatticeView {
        let n = self.len();
        LatticeView {
            poset: self.poset.dual(),
            join: self.meet.clone(),
            meet: self.join.clone(),
            bottom: self.top,
            top: self.bottom,
            adjoined_bottom: false,
        }
        .checked(n)
    }

    fn checked(self, n: usize) -> Self {
        debug_assert_eq!(self.join.len(), n * n);
        self
    }

    /// `L × M`; element `(i, j)` has index `i * |M| + j`.
    pub fn product(&self, other: &LatticeView) -> LatticeView {
        let poset = self.poset.product(&other.poset);
        let m = other.len();
        let n = poset.len();
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                join[x * n + y] = self.join(x / m, y / m) * m + other.join(x % m, y % m);
                meet[x * n + y] = self.meet(x / m, y / m) * m + other.meet(x % m, y % m);
            }
        }
        LatticeView {
            poset,
            join,
            meet,
            bottom: self.bottom * m + other.bottom,
            top: self.top * m + other.top,
            adjoined_bottom: false,
        }
    }

    pub fn height(&self) -> usize {
        self.poset.height()
    }

    pub fn is_isomorphic(&self, other: &LatticeView) -> bool {
        self.poset.is_isomorphic(&other.poset)
    }
}

impl fmt::Debug for LatticeView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lattice({:?})", self.poset)
    }
}

/// How [`order_of_family`] treats a family without a least member.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BottomPolicy {
    /// Adjoin `0̂` when the family has no least member.
    Adjoin,
    /// Require `∅ ∈ F`.
    RequireEmpty,
}

/// Labels for lattice elements that come from family members.
fn member_labels(f: &SetFamily) -> Vec<String> {
    f.iter().map(|m| f.universe().render(m)).collect()
}

/// The inclusion order on the members of `f` (element `i` is member `i`).
pub fn inclusion_poset(f: &SetFamily) -> Poset {
    let m = f.members();
    Poset::from_fn(member_labels(f), |i, j| m[i].is_subset(m[j]))
}

/// A union-closed family as a lattice ordered by inclusion. Element `i` is
/// member `i`; an adjoined `0̂` sits at index `|F|`. Join is set union.
pub fn order_of_family(f: &SetFamily, policy: BottomPolicy) -> Result<LatticeView> {
    f.require_at_least_two()?;
    f.require_union_closed()?;
    let poset = inclusion_poset(f);
    match policy {
        BottomPolicy::RequireEmpty if !f.contains_empty() => Err(Error::MissingEmptySet),
        BottomPolicy::RequireEmpty => LatticeView::from_poset(poset),
        BottomPolicy::Adjoin => LatticeView::from_join_semilattice(poset),
    }
}

/// `J(F)`: members that are not the least member and not the union of the
/// members strictly below them.
pub fn join_irreducibles(f: &SetFamily) -> Result<SetFamily> {
    f.require_union_closed()?;
    let least = f
        .members()
        .first()
        .copied()
        .filter(|&m| f.iter().all(|v| m.is_subset(v)));
    Ok(f.derive(
        irreducible_members(f.members())
            .into_iter()
            .filter(|&m| Some(m) != least),
    ))
}

/// `G(F) = J(F ∪ {∅})`: the union generators, no one of which is the union
/// of the others.
pub fn generators(f: &SetFamily) -> Result<SetFamily> {
    f.require_union_closed()?;
    Ok(f.derive(irreducible_members(f.members())))
}

/// Non-empty members not equal to the union of the members strictly inside
/// them. `members` must be sorted canonically.
pub(crate) fn irreducible_members(members: &[ElementSet]) -> Vec<ElementSet> {
    let mut out = Vec::new();
    for (i, &m) in members.iter().enumerate() {
        if m.is_empty() {
            continue;
        }
        // Proper subsets have smaller numeric value.
        let below = members[..i]
            .iter()
            .filter(|v| v.is_subset(m))
            .fold(ElementSet::EMPTY, |a, &b| a | b);
        if below != m {
            out.push(m);
        }
    }
    out
}

/// The meet-irreducible members of a primitive union-closed family. Every
/// one of them is some `M_x = ⋃F_⊆(X∖{x})`, but an `M_x` can be the meet of
/// two others (`{∅, 02, 012, 013, 0123}` has `M_0 = ∅`), so candidates are
/// kept only when they have a single upper cover.
pub fn meet_irreducibles(f: &SetFamily) -> Result<SetFamily> {
    f.require_union_closed()?;
    if !f.transpose().is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let ground = f.ground();
    let mut out = Vec::new();
    for x in ground.iter() {
        let avoid = ground.without(x);
        let below: Vec<ElementSet> = f.iter().filter(|m| m.is_subset(avoid)).collect();
        if below.is_empty() {
            continue;
        }
        let mx = below.into_iter().fold(ElementSet::EMPTY, |a, b| a | b);
        if mx != ground && upper_cover_count(f, mx) == 1 {
            out.push(mx);
        }
    }
    Ok(f.derive(out))
}

fn upper_cover_count(f: &SetFamily, m: ElementSet) -> usize {
    let above: Vec<ElementSet> = f.iter().filter(|&v| v != m && m.is_subset(v)).collect();
    above
        .iter()
        .filter(|&&v| !above.iter().any(|&w| w != v && w.is_subset(v)))
        .count()
}

/// Element labels as family-universe labels; falls back to `e0, e1, ...`
/// when the lattice labels cannot serve as universe labels.
fn universe_from(labels: Vec<String>) -> Result<Arc<Universe>> {
    let cleaned: Vec<String> = labels
        .iter()
        .map(|l| {
            l.chars()
                .filter(|c| !matches!(c, '{' | '}'))
                .map(|c| {
                    if c.is_whitespace() || c == ',' || c == '#' {
                        '.'
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    let fallback = || Universe::new((0..labels.len()).map(|i| format!("e{i}")));
    let u = match Universe::new(cleaned) {
        Ok(u) => u,
        Err(Error::EmptyUniverse) => return Err(Error::EmptyUniverse),
        Err(_) => fallback()?,
    };
    Ok(Arc::new(u))
}

/// `F(L) = {(x] ∩ J(L) | x ∈ L}`, a primitive intersection-closed family
/// on the universe `J(L)`.
pub fn family_of_semilattice(l: &LatticeView) -> Result<SetFamily> {
    let j = l.join_irreducibles();
    if j.is_empty() {
        return Err(Error::Precondition(
            "lattice has no join-irreducible".into(),
        ));
    }
    let universe = universe_from(j.iter().map(|&x| l.label(x).to_string()).collect())?;
    let members = (0..l.len()).map(|x| {
        ElementSet::from_indices(
            j.iter()
                .enumerate()
                .filter(|&(_, &a)| l.leq(a, x))
                .map(|(k, _)| k),
        )
    });
    SetFamily::new(universe, members)
}

/// The union-closed family of a join-semilattice: complements in `M(L)` of
/// the members of `F(L*)`, i.e. `{M(L) ∖ [x) | x ∈ L}` on universe `M(L)`.
pub fn union_family_of_semilattice(l: &LatticeView) -> Result<SetFamily> {
    let m = l.meet_irreducibles();
    if m.is_empty() {
        return Err(Error::Precondition(
            "lattice has no meet-irreducible".into(),
        ));
    }
    let universe = universe_from(m.iter().map(|&x| l.label(x).to_string()).collect())?;
    let members = (0..l.len()).map(|x| {
        ElementSet::from_indices(
            m.iter()
                .enumerate()
                .filter(|&(_, &c)| !l.leq(x, c))
                .map(|(k, _)| k),
        )
    });
    SetFamily::new(universe, members)
}

/// Structural predicates on a finite lattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub distributive: bool,
    pub modular: bool,
    pub atomistic: bool,
    pub upper_semimodular: bool,
    pub geometric: bool,
    pub lower_semimodular_coatom: bool,
    pub complemented_ideals: bool,
    /// `None` above [`SELFDUAL_CAP`] elements.
    pub selfdual: Option<bool>,
    pub height: usize,
    pub join_irreducibles: usize,
    pub height_equals_j: bool,
}

pub fn classify(l: &LatticeView) -> Classification {
    let n = l.len();
    let all = || 0..n;

    let distributive = all().all(|x| {
        all().all(|y| all().all(|z| l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z))))
    });
    let modular = all().all(|x| {
        all().all(|z| {
            !l.leq(x, z) || all().all(|y| l.join(x, l.meet(y, z)) == l.meet(l.join(x, y), z))
        })
    });
    let atoms = l.atoms();
    let atomistic = all().all(|x| {
        atoms
            .iter()
            .filter(|&&a| l.leq(a, x))
            .fold(l.bottom(), |acc, &a| l.join(acc, a))
            == x
    });
    let upper_semimodular =
        all().all(|x| all().all(|y| !l.covers(x, l.meet(x, y)) || l.covers(l.join(x, y), y)));
    let lower_semimodular_coatom = l
        .coatoms()
        .into_iter()
        .any(|a| all().all(|w| l.leq(w, a) || l.covers(w, l.meet(a, w))));
    let complemented_ideals = all().all(|x| {
        let ideal = l.ideal_of(x);
        ideal.iter().all(|&y| {
            ideal
                .iter()
                .any(|&z| l.meet(y, z) == l.bottom() && l.join(y, z) == x)
        })
    });
    let selfdual = (n <= SELFDUAL_CAP).then(|| l.poset().is_isomorphic(&l.poset().dual()));
    let height = l.height();
    let j = l.join_irreducibles().len();
    Classification {
        distributive,
        modular,
        atomistic,
        upper_semimodular,
        geometric: atomistic && upper_semimodular,
        lower_semimodular_coatom,
        complemented_ideals,
        selfdual,
        height,
        join_irreducibles: j,
        height_equals_j: height == j,
    }
}

/// Named small lattices.
pub mod named {
    use super::*;

    /// `B_n`, the subsets of `{1..n}` under inclusion.
    pub fn boolean(n: usize) -> LatticeView {
        let universe = Arc::new(Universe::new((1..=n).map(|i| i.to_string())).expect("n ≤ 64"));
        let f = SetFamily::new(universe, ElementSet::full(n).subsets()).expect("in range");
        order_of_family(&f, BottomPolicy::RequireEmpty).expect("boolean lattice")
    }

    /// Chain with `n` elements.
    pub fn chain(n: usize) -> LatticeView {
        LatticeView::from_poset(Poset::chain(n)).expect("chains are lattices")
    }

    fn from_relations(labels: &[&str], rel: &[(usize, usize)]) -> LatticeView {
        let p = Poset::from_relations(labels.iter().map(|s| s.to_string()).collect(), rel)
            .expect("valid relations");
        LatticeView::from_poset(p).expect("lattice")
    }

    /// The diamond `M₃`.
    pub fn diamond() -> LatticeView {
        from_relations(
            &["0", "a", "b", "c", "1"],
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        )
    }

    /// The pentagon `N₅`: `0 < a < b < 1`, `0 < c < 1`.
    pub fn pentagon() -> LatticeView {
        from_relations(
            &["0", "a", "b", "c", "1"],
            &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
        )
    }
}

/// Removes lattices isomorphic to an earlier entry.
pub fn dedup_isomorphic(lattices: Vec<LatticeView>) -> Vec<LatticeView> {
    let mut seen: Vec<LatticeView> = Vec::new();
    let mut sizes: HashSet<usize> = HashSet::new();
    for l in lattices {
        if sizes.contains(&l.len())
            && seen
                .iter()
                .any(|s| s.len() == l.len() && s.is_isomorphic(&l))
        {
            continue;
        }
        sizes.insert(l.len());
        seen.push(l);
    }
    seen
}
