//! Universes, bit-encoded sets and families of sets.
//!
//! A [`Universe`] fixes the ground set `X` as an ordered list of labels. An
//! [`ElementSet`] is a subset of some universe stored as a single `u64`; the
//! universe itself is carried by the [`SetFamily`] that owns the sets, so the
//! set type stays `Copy` and the set algebra in the enumeration kernels is a
//! handful of machine instructions.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub};
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};

pub const MAX_WIDTH: usize = 64;

/// The reserved token for the empty set in the text format.
pub const EMPTY_TOKEN: &str = "EMPTYSET";

/// The ground set: element labels in index order.
#[derive(Clone)]
pub struct Universe {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = labels.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if names.len() > MAX_WIDTH {
            return Err(Error::CapacityExceeded { width: names.len() });
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            validate_label(name)?;
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(name.clone()));
            }
        }
        Ok(Universe { names, index })
    }

    /// Universe `{0, 1, ..., n-1}` labelled by the decimal indices.
    pub fn indexed(n: usize) -> Result<Self> {
        Universe::new((0..n).map(|i| i.to_string()))
    }

    pub fn width(&self) -> usize {
        self.names.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.names
    }

    pub fn label(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn full(&self) -> ElementSet {
        ElementSet::full(self.width())
    }

    pub fn element(&self, label: &str) -> Result<ElementSet> {
        self.index_of(label)
            .map(ElementSet::singleton)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Builds a set from labels; unknown labels are an error.
    pub fn set_of<I, S>(&self, labels: I) -> Result<ElementSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        labels.into_iter().try_fold(ElementSet::EMPTY, |acc, l| {
            Ok(acc | self.element(l.as_ref())?)
        })
    }

    /// Parses a comma- or whitespace-separated label list. `EMPTYSET` and the
    /// empty string both denote the empty set.
    pub fn parse_set(&self, text: &str) -> Result<ElementSet> {
        let text = text.trim();
        if text.is_empty() || text == EMPTY_TOKEN {
            return Ok(ElementSet::EMPTY);
        }
        self.set_of(
            text.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty()),
        )
    }

    pub fn contains_set(&self, s: ElementSet) -> bool {
        s.is_subset(self.full())
    }

    pub fn check(&self, s: ElementSet) -> Result<ElementSet> {
        if self.contains_set(s) {
            Ok(s)
        } else {
            Err(Error::OutOfUniverse {
                width: self.width(),
            })
        }
    }

    pub fn labels_of(&self, s: ElementSet) -> Vec<&str> {
        s.iter().map(|i| self.label(i)).collect()
    }

    /// Human rendering, `{a,b}` or `∅`.
    pub fn render(&self, s: ElementSet) -> String {
        if s.is_empty() {
            "∅".to_string()
        } else {
            format!("{{{}}}", self.labels_of(s).join(","))
        }
    }

    /// One line of the family text format.
    pub fn render_line(&self, s: ElementSet) -> String {
        if s.is_empty() {
            EMPTY_TOKEN.to_string()
        } else {
            self.labels_of(s).join(" ")
        }
    }
}

fn validate_label(name: &str) -> Result<()> {
    let bad = name.is_empty()
        || name == EMPTY_TOKEN
        || name
            .chars()
            .any(|c| c.is_whitespace() || c == '#' || c == ',');
    if bad {
        Err(Error::MalformedLabel(name.to_string()))
    } else {
        Ok(())
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for Universe {}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.names).finish()
    }
}

/// A subset of a universe of at most 64 elements. Canonical order is the
/// numeric value of the bit word.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_WIDTH);
        ElementSet(1u64 << i)
    }

    pub fn full(width: usize) -> Self {
        if width >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << width) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(ElementSet::EMPTY, |acc, i| acc | ElementSet::singleton(i))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_superset(self, other: ElementSet) -> bool {
        other.is_subset(self)
    }

    pub fn intersects(self, other: ElementSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_disjoint(self, other: ElementSet) -> bool {
        !self.intersects(other)
    }

    pub fn with(self, i: usize) -> Self {
        self | ElementSet::singleton(i)
    }

    pub fn without(self, i: usize) -> Self {
        ElementSet(self.0 & !(1u64 << i))
    }

    /// Smallest element.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest element.
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Element indices in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// All subsets of `self` in increasing numeric order, `∅` first and
    /// `self` last.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Maps the `k` low bits of `compact` onto the `k` elements of `self`
    /// (in increasing order). The inverse of [`ElementSet::compress`].
    pub fn expand(self, compact: u64) -> ElementSet {
        let mut out = 0u64;
        let mut rest = self.0;
        let mut c = compact;
        while rest != 0 && c != 0 {
            let low = rest & rest.wrapping_neg();
            if c & 1 == 1 {
                out |= low;
            }
            c >>= 1;
            rest &= rest - 1;
        }
        ElementSet(out)
    }

    /// Coordinates of `s ∩ self` relative to the elements of `self`.
    pub fn compress(self, s: ElementSet) -> u64 {
        let mut out = 0u64;
        for (k, i) in self.iter().enumerate() {
            if s.contains(i) {
                out |= 1 << k;
            }
        }
        out
    }
}

impl BitOr for ElementSet {
    type Output = ElementSet;
    fn bitor(self, rhs: Self) -> Self {
        ElementSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for ElementSet {
    fn bitor_assign(&mut self, rhs: Self) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for ElementSet {
    type Output = ElementSet;
    fn bitand(self, rhs: Self) -> Self {
        ElementSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for ElementSet {
    fn bitand_assign(&mut self, rhs: Self) {
        self.0 &= rhs.0;
    }
}

/// Set difference.
impl Sub for ElementSet {
    type Output = ElementSet;
    fn sub(self, rhs: Self) -> Self {
        ElementSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ElementSet;
    fn next(&mut self) -> Option<ElementSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some(((cur | !self.mask).wrapping_add(1)) & self.mask)
        };
        Some(ElementSet(cur))
    }
}

/// Cached structural flags of a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub union_closed: bool,
    pub intersection_closed: bool,
    pub contains_empty: bool,
}

/// Which of the four restrictions of a family to a set `Y` to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Restriction {
    /// `{U ∈ F | U ⊆ Y}`
    Below,
    /// `{U ∈ F | U ⊇ Y}`
    Above,
    /// `{U ∩ Y | U ∈ F}`
    Onto,
    /// `{U \ Y | U ∈ F}`
    Away,
}

/// A duplicate-free family of subsets of a universe, members kept in
/// canonical (numeric) order.
#[derive(Clone)]
pub struct SetFamily {
    universe: Arc<Universe>,
    members: Vec<ElementSet>,
    flags: OnceLock<Flags>,
}

impl SetFamily {
    pub fn new<I>(universe: Arc<Universe>, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = ElementSet>,
    {
        let members: Vec<ElementSet> = members.into_iter().collect();
        for &m in &members {
            universe.check(m)?;
        }
        Ok(Self::from_unsorted(universe, members))
    }

    /// Convenience constructor from label lists.
    pub fn from_labels<S: AsRef<str>>(universe: Arc<Universe>, sets: &[&[S]]) -> Result<Self> {
        let members = sets
            .iter()
            .map(|s| universe.set_of(s.iter()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe, members)
    }

    pub(crate) fn from_unsorted(universe: Arc<Universe>, mut members: Vec<ElementSet>) -> Self {
        members.sort_unstable();
        members.dedup();
        Self::from_sorted(universe, members)
    }

    pub(crate) fn from_sorted(universe: Arc<Universe>, members: Vec<ElementSet>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        SetFamily {
            universe,
            members,
            flags: OnceLock::new(),
        }
    }

    /// Same universe, new members.
    pub fn derive<I: IntoIterator<Item = ElementSet>>(&self, members: I) -> SetFamily {
        Self::from_unsorted(self.universe.clone(), members.into_iter().collect())
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn universe_arc(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn members(&self) -> &[ElementSet] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementSet> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: ElementSet) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    pub fn position(&self, s: ElementSet) -> Option<usize> {
        self.members.binary_search(&s).ok()
    }

    /// `⋃F`.
    pub fn ground(&self) -> ElementSet {
        self.iter().fold(ElementSet::EMPTY, |a, b| a | b)
    }

    pub fn has_nonempty_member(&self) -> bool {
        self.members.last().is_some_and(|m| !m.is_empty())
    }

    pub fn flags(&self) -> Flags {
        *self.flags.get_or_init(|| Flags {
            union_closed: self.closed_under(|a, b| a | b),
            intersection_closed: self.closed_under(|a, b| a & b),
            contains_empty: self.members.first() == Some(&ElementSet::EMPTY),
        })
    }

    fn closed_under(&self, op: impl Fn(ElementSet, ElementSet) -> ElementSet) -> bool {
        let m = &self.members;
        (0..m.len()).all(|i| (i + 1..m.len()).all(|j| self.contains(op(m[i], m[j]))))
    }

    pub fn is_union_closed(&self) -> bool {
        self.flags().union_closed
    }

    pub fn is_intersection_closed(&self) -> bool {
        self.flags().intersection_closed
    }

    pub fn contains_empty(&self) -> bool {
        self.flags().contains_empty
    }

    pub fn same_universe(&self, other: &SetFamily) -> Result<()> {
        if Arc::ptr_eq(&self.universe, &other.universe) || self.universe == other.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn require_union_closed(&self) -> Result<()> {
        if self.is_union_closed() {
            Ok(())
        } else {
            Err(Error::NotUnionClosed)
        }
    }

    pub fn require_at_least_two(&self) -> Result<()> {
        if self.len() >= 2 {
            Ok(())
        } else {
            Err(Error::TooFewMembers { len: self.len() })
        }
    }

    /// The smallest union-closed family containing every member, plus `∅`
    /// when `include_empty` is set. Worklist fixed point: every member is
    /// unioned with every other exactly once.
    pub fn union_close(&self, include_empty: bool) -> SetFamily {
        let mut out: Vec<ElementSet> = self.members.clone();
        let mut seen: HashSet<ElementSet> = out.iter().copied().collect();
        if include_empty && seen.insert(ElementSet::EMPTY) {
            out.push(ElementSet::EMPTY);
        }
        let mut queue: Vec<ElementSet> = out.clone();
        while let Some(a) = queue.pop() {
            let mut i = 0;
            while i < out.len() {
                let c = a | out[i];
                if seen.insert(c) {
                    out.push(c);
                    queue.push(c);
                }
                i += 1;
            }
        }
        let fam = Self::from_unsorted(self.universe.clone(), out);
        let _ = fam.flags.set(Flags {
            union_closed: true,
            intersection_closed: fam.closed_under(|a, b| a & b),
            contains_empty: fam.members.first() == Some(&ElementSet::EMPTY),
        });
        fam
    }

    /// The family with `∅` added.
    pub fn with_empty(&self) -> SetFamily {
        if self.contains(ElementSet::EMPTY) {
            self.clone()
        } else {
            self.derive(self.iter().chain([ElementSet::EMPTY]))
        }
    }

    pub fn restrict(&self, y: ElementSet, mode: Restriction) -> Result<SetFamily> {
        self.universe.check(y)?;
        Ok(match mode {
            Restriction::Below => self.derive(self.iter().filter(|m| m.is_subset(y))),
            Restriction::Above => self.derive(self.iter().filter(|m| m.is_superset(y))),
            Restriction::Onto => self.derive(self.iter().map(|m| m & y)),
            Restriction::Away => self.derive(self.iter().map(|m| m - y)),
        })
    }

    /// `F ∨ G = {U ∪ V}`.
    pub fn join(&self, other: &SetFamily) -> Result<SetFamily> {
        self.same_universe(other)?;
        Ok(self.join_unchecked(other))
    }

    pub(crate) fn join_unchecked(&self, other: &SetFamily) -> SetFamily {
        let mut out = Vec::with_capacity(self.len() * other.len());
        for a in self.iter() {
            for b in other.iter() {
                out.push(a | b);
            }
        }
        self.derive(out)
    }

    /// `F ∧ G = {U ∩ V}`.
    pub fn meet(&self, other: &SetFamily) -> Result<SetFamily> {
        self.same_universe(other)?;
        let mut out = Vec::with_capacity(self.len() * other.len());
        for a in self.iter() {
            for b in other.iter() {
                out.push(a & b);
            }
        }
        Ok(self.derive(out))
    }

    /// `d_F(Y) = |F_⊇Y|`.
    pub fn degree(&self, y: ElementSet) -> Result<usize> {
        self.universe.check(y)?;
        Ok(self.degree_unchecked(y))
    }

    pub(crate) fn degree_unchecked(&self, y: ElementSet) -> usize {
        self.iter().filter(|m| m.is_superset(y)).count()
    }

    pub fn element_degree(&self, x: usize) -> usize {
        self.iter().filter(|m| m.contains(x)).count()
    }

    /// Complement of every member with respect to the whole universe.
    pub fn complement(&self) -> SetFamily {
        let full = self.universe.full();
        self.derive(self.iter().map(|m| full - m))
    }

    /// `S(F) = Σ |U|`.
    pub fn total_size(&self) -> usize {
        self.iter().map(ElementSet::len).sum()
    }

    pub fn transpose(&self) -> TransposeTable {
        let width = self.universe.width();
        let rows: Vec<Vec<usize>> = (0..width)
            .map(|x| {
                self.members
                    .iter()
                    .enumerate()
                    .filter(|(_, m)| m.contains(x))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let mut multiplicities = BTreeMap::new();
        for row in &rows {
            *multiplicities.entry(row.clone()).or_insert(0) += 1;
        }
        TransposeTable {
            rows,
            multiplicities,
            covers_universe: self.ground() == self.universe.full(),
        }
    }

    /// Every member has one or two elements.
    pub fn is_graph(&self) -> bool {
        self.iter().all(|m| (1..=2).contains(&m.len()))
    }

    /// Every member has exactly two elements.
    pub fn is_simple_graph(&self) -> bool {
        self.iter().all(|m| m.len() == 2)
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.iter().map(|m| self.universe.render(m)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl PartialEq for SetFamily {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && self.universe == other.universe
    }
}

impl Eq for SetFamily {}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// The transpose `F* = ⟨F_⊇x | x ∈ X⟩` as a multiset of member-index rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransposeTable {
    /// `rows[x]` lists the indices of the members containing `x`.
    pub rows: Vec<Vec<usize>>,
    pub multiplicities: BTreeMap<Vec<usize>, usize>,
    covers_universe: bool,
}

impl TransposeTable {
    pub fn is_simple(&self) -> bool {
        self.multiplicities.values().all(|&c| c == 1)
    }

    /// Simple and `⋃F` is the whole universe.
    pub fn is_primitive(&self) -> bool {
        self.is_simple() && self.covers_universe
    }
}

/// Union-closed family generated by the edges (and singletons) of a graph on
/// the vertex universe `{0..n-1}`, with `∅` added.
pub fn graph_family(universe: &Arc<Universe>, edges: &[ElementSet]) -> Result<SetFamily> {
    let gens = SetFamily::new(universe.clone(), edges.iter().copied())?;
    if !gens.is_graph() {
        return Err(Error::Precondition("generators are not a graph".into()));
    }
    Ok(gens.union_close(true))
}
