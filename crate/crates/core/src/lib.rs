//! Union-closed families of sets and the machinery for estimating how often
//! a generator is contained in the members of such a family.
//!
//! The crate is organised bottom-up:
//!
//! * [`family`] holds the bitset encoding of universes, sets and families
//!   together with the elementary operations (closure under union,
//!   restrictions, joins, degrees, transposition).
//! * [`lattice`] gives the order-theoretic view: posets, lattices,
//!   irreducibles and the classification predicates.
//! * [`density`] implements closures, E-sets, extensions and the quantity
//!   `mu` averaged over an extension, its minimisation over filter
//!   extensions and the product lower bound built from Kleitman's lemma.
//! * [`conjecture`] contains witness searches, the equivalent reformulations
//!   and the exhaustive desk-scale scans.
//! * [`pdensity`] counts order-preserving maps and decides matching
//!   properties.
//! * [`wojcik`] covers the `U(n)` bijection and the total-size minima.
//! * [`io`] reads and writes the family and poset text formats.

pub mod conjecture;
pub mod density;
pub mod error;
pub mod family;
pub mod io;
pub mod lattice;
pub mod pdensity;
pub mod rational;
pub mod wojcik;

pub use error::{Error, Result};
pub use family::{ElementSet, Restriction, SetFamily, TransposeTable, Universe};
pub use lattice::{LatticeView, Poset};
pub use rational::Rational;
