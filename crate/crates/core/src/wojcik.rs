//! The bijection `U` from the naturals onto finite sets read off binary
//! expansions, its initial-segment families, and brute-force minima of the
//! total size `S(F) = Σ |U|` at fixed family size and of
//! `s(F, X) = S(F) / (|F| |X|)` at fixed universe.
//!
//! For `n > 0` with leading bit `l`, `U(n)` holds `l` and every `i < l` whose
//! bit is zero; `U(0) = ∅`. The families `{U(0), .., U(n−1)}` are
//! union-closed and conjecturally minimise `S` among union-closed families
//! with `n` members.

use std::collections::HashSet;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::family::{ElementSet, SetFamily, Universe};
use crate::rational::{ratio, Rational};

/// Largest bit width handled by [`u_of_n`].
pub const U_CAP: u32 = 32;
/// Largest `n` for [`t_n_bruteforce`].
pub const TN_CAP: usize = 8;
/// Largest universe for [`t_n_bruteforce`].
pub const TN_UNIVERSE_CAP: usize = 4;
/// Largest `m` for [`s_m_bruteforce`].
pub const SM_CAP: usize = 4;
/// Largest bound for [`u_order_property_check`].
pub const ORDER_CHECK_CAP: u64 = 1 << 16;

/// The binary expansion of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UIndex {
    pub n: u64,
    /// `bits[i]` is bit `i`, up to and including the leading one.
    pub bits: Vec<bool>,
    /// Index of the leading bit; 0 for `n = 0`.
    pub l: usize,
}

impl UIndex {
    pub fn new(n: u64) -> Self {
        let l = if n == 0 {
            0
        } else {
            63 - n.leading_zeros() as usize
        };
        UIndex {
            n,
            bits: (0..=l).map(|i| n >> i & 1 == 1).collect(),
            l,
        }
    }
}

fn check_u_cap(n: u64) -> Result<()> {
    if n >> U_CAP != 0 {
        return Err(Error::cap("n", n, 1u64 << U_CAP));
    }
    Ok(())
}

fn u_bits(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let l = 63 - n.leading_zeros();
    let low = (1u64 << l) - 1;
    (1u64 << l) | (!n & low)
}

/// `U(n)` as a set of indices.
pub fn u_of_n(n: u64) -> Result<ElementSet> {
    check_u_cap(n)?;
    Ok(ElementSet::from_bits(u_bits(n)))
}

/// The inverse of [`u_of_n`]: `2^l + Σ {2^i | i < l, i ∉ S}` for `l = max S`.
pub fn u_inverse(s: ElementSet) -> Result<u64> {
    let Some(l) = s.last() else { return Ok(0) };
    if l as u32 >= U_CAP {
        return Err(Error::cap("largest element", l as u64, U_CAP as u64 - 1));
    }
    let low = (1u64 << l) - 1;
    Ok((1u64 << l) | (!s.bits() & low))
}

/// Universe `{0, .., w−1}` wide enough for `U(0..n)`.
fn universe_for(n: u64) -> Result<Arc<Universe>> {
    let top = n.saturating_sub(1);
    let width = (64 - top.leading_zeros()).max(1) as usize;
    Ok(Arc::new(Universe::indexed(width)?))
}

/// `{U(0), .., U(n−1)}`, checked to be union-closed.
pub fn u_family(n: u64) -> Result<SetFamily> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    check_u_cap(n - 1)?;
    let members: Vec<ElementSet> = (0..n).map(|k| ElementSet::from_bits(u_bits(k))).collect();
    let f = SetFamily::new(universe_for(n)?, members)?;
    if !f.is_union_closed() {
        return Err(Error::Violation(format!("U(0..{n}) is not union-closed")));
    }
    Ok(f)
}

/// `S(F) = Σ_{U ∈ F} |U|`.
pub fn total_size(f: &SetFamily) -> usize {
    f.total_size()
}

/// `s(F, X) = S(F) / (|F| |X|)` for `⋃F ⊆ X`.
pub fn s_ratio(f: &SetFamily, x: ElementSet) -> Result<Rational> {
    f.universe().check(x)?;
    if !f.ground().is_subset(x) {
        return Err(Error::Precondition(
            "the union of the family is not inside X".into(),
        ));
    }
    if x.is_empty() || f.is_empty() {
        return Err(Error::Precondition(
            "X and the family must be non-empty".into(),
        ));
    }
    Ok(ratio(f.total_size(), f.len() * x.len()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TnResult {
    pub n: usize,
    pub universe_cap: usize,
    pub t: usize,
    /// Lexicographically least minimiser (by sorted member codes).
    pub minimizer: SetFamily,
    /// `S(U(0..n))`.
    pub s_u: usize,
}

impl TnResult {
    /// `t_n = S(U(0..n))` at this cap.
    pub fn consistent(&self) -> bool {
        self.t == self.s_u
    }
}

/// Minimum of `S` over union-closed families with exactly `n` members drawn
/// from `2^[universe_cap]`. Combinations are visited in lexicographic order
/// and pruned when the partial size already exceeds the best.
pub fn t_n_bruteforce(n: usize, universe_cap: usize) -> Result<TnResult> {
    if n == 0 || n > TN_CAP {
        return Err(Error::cap("n", n as u64, TN_CAP as u64));
    }
    if universe_cap > TN_UNIVERSE_CAP {
        return Err(Error::cap(
            "universe cap",
            universe_cap as u64,
            TN_UNIVERSE_CAP as u64,
        ));
    }
    let subsets = 1usize << universe_cap;
    if n > subsets {
        return Err(Error::Precondition(format!(
            "no family of {n} sets fits in a universe of {universe_cap}"
        )));
    }

    struct Search {
        n: usize,
        subsets: usize,
        best: Option<(usize, Vec<u64>)>,
    }

    impl Search {
        fn go(&mut self, start: usize, chosen: &mut Vec<u64>, size: usize) {
            // Only a strictly smaller total replaces the best, so the first
            // minimiser in lexicographic order is kept.
            if self.best.as_ref().is_some_and(|(b, _)| size >= *b) {
                return;
            }
            if chosen.len() == self.n {
                let closed = chosen.iter().all(|&a| {
                    chosen
                        .iter()
                        .all(|&b| chosen.binary_search(&(a | b)).is_ok())
                });
                if closed {
                    self.best = Some((size, chosen.clone()));
                }
                return;
            }
            for s in start..self.subsets {
                if self.subsets - s < self.n - chosen.len() {
                    break;
                }
                chosen.push(s as u64);
                self.go(s + 1, chosen, size + (s as u64).count_ones() as usize);
                chosen.pop();
            }
        }
    }

    let mut search = Search {
        n,
        subsets,
        best: None,
    };
    search.go(0, &mut Vec::new(), 0);
    let (t, codes) = search
        .best
        .expect("the first n subsets in some order close up");
    let universe = Arc::new(Universe::indexed(universe_cap.max(1))?);
    let minimizer = SetFamily::new(universe, codes.into_iter().map(ElementSet::from_bits))?;
    Ok(TnResult {
        n,
        universe_cap,
        t,
        minimizer,
        s_u: u_family(n as u64)?.total_size(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmStrategy {
    /// Every subfamily of `2^[m]` as a bitmask.
    Bitmask,
    /// Graph search over union-closed families, each step adding one set
    /// and closing under union.
    Closure,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmResult {
    pub m: usize,
    pub value: Rational,
    pub minimizer: SetFamily,
    /// Union-closed families with union `[m]` that were evaluated.
    pub families: u64,
}

/// Closes a family mask over `2^[m]` under pairwise union.
fn close_mask(mask: u64, subsets: usize) -> u64 {
    let mut m = mask;
    loop {
        let mut next = m;
        for a in (0..subsets).filter(|&a| m >> a & 1 == 1) {
            for b in (0..subsets).filter(|&b| m >> b & 1 == 1) {
                next |= 1 << (a | b);
            }
        }
        if next == m {
            return m;
        }
        m = next;
    }
}

fn is_closed_mask(mask: u64, subsets: usize) -> bool {
    (0..subsets).all(|a| {
        mask >> a & 1 == 0 || (0..subsets).all(|b| mask >> b & 1 == 0 || mask >> (a | b) & 1 == 1)
    })
}

/// Orders family masks by their sorted member lists.
fn lex_key(mask: u64) -> Vec<u32> {
    let mut m = mask;
    let mut out = Vec::new();
    while m != 0 {
        out.push(m.trailing_zeros());
        m &= m - 1;
    }
    out
}

/// `s_m = min s(F, [m])` over union-closed `F` with `⋃F = [m]`.
pub fn s_m_bruteforce(m: usize, strategy: SmStrategy) -> Result<SmResult> {
    if m == 0 || m > SM_CAP {
        return Err(Error::cap("m", m as u64, SM_CAP as u64));
    }
    let subsets = 1usize << m;
    let full = subsets - 1;
    let score = |mask: u64| -> (usize, usize) {
        let size: usize = lex_key(mask).iter().map(|&s| s.count_ones() as usize).sum();
        (size, mask.count_ones() as usize)
    };
    let candidates: Vec<u64> = match strategy {
        SmStrategy::Bitmask => (1u64..1u64 << subsets)
            .into_par_iter()
            .filter(|&mask| mask >> full & 1 == 1 && is_closed_mask(mask, subsets))
            .collect(),
        SmStrategy::Closure => {
            let mut seen: HashSet<u64> = HashSet::new();
            let mut frontier = vec![0u64];
            seen.insert(0);
            while let Some(f) = frontier.pop() {
                for a in 0..subsets {
                    if f >> a & 1 == 0 {
                        let g = close_mask(f | 1 << a, subsets);
                        if seen.insert(g) {
                            frontier.push(g);
                        }
                    }
                }
            }
            // The family's union is its largest member.
            seen.into_iter().filter(|&f| f >> full & 1 == 1).collect()
        }
    };
    let mut best: Option<(Rational, u64)> = None;
    for &mask in &candidates {
        let (size, count) = score(mask);
        let v = ratio(size, count * m);
        let better = match &best {
            None => true,
            Some((bv, bm)) => v < *bv || (v == *bv && lex_key(mask) < lex_key(*bm)),
        };
        if better {
            best = Some((v, mask));
        }
    }
    let (value, mask) = best.expect("the full power set qualifies");
    let universe = Arc::new(Universe::indexed(m)?);
    let minimizer = SetFamily::new(
        universe,
        lex_key(mask)
            .into_iter()
            .map(|c| ElementSet::from_bits(c as u64)),
    )?;
    Ok(SmResult {
        m,
        value,
        minimizer,
        families: candidates.len() as u64,
    })
}

/// Checks that `U` is a bijection from `[0, bound)` onto its image with the
/// inverse [`u_inverse`], and that `U(i) = U(k) ∪ U(l)` with `k < l` forces
/// `i ≤ l` for all `k < l < bound`.
pub fn u_order_property_check(bound: u64) -> Result<bool> {
    if bound > ORDER_CHECK_CAP {
        return Err(Error::cap("bound", bound, ORDER_CHECK_CAP));
    }
    let mut seen = HashSet::new();
    for n in 0..bound {
        let s = u_bits(n);
        if !seen.insert(s) || u_inverse(ElementSet::from_bits(s))? != n {
            return Ok(false);
        }
    }
    let ok = (0..bound).into_par_iter().all(|l| {
        let ul = u_bits(l);
        (0..l).all(|k| {
            let union = ElementSet::from_bits(u_bits(k) | ul);
            u_inverse(union).is_ok_and(|i| i <= l)
        })
    });
    Ok(ok)
}
