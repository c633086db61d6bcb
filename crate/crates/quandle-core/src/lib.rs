//! Quandle-theoretic machinery for studying Dehn twists and the monodromy
//! of Lefschetz fibrations.
//!
//! The crate is `no_std` (with `alloc`); everything IO-flavoured lives in
//! the companion `quandle-cli` crate.
//!
//! The main pieces:
//!
//! * [`finite`] — finite quandles given by operation tables, axiom
//!   checking, quotients and homomorphism counting;
//! * [`torus`] — the Dehn quandle of the torus in slope coordinates,
//!   cross-checked against `SL(2,Z)` conjugation;
//! * [`homology`] — alternating quandles on `R^{2g}` with the symplectic
//!   intersection form and their `±1`-reduced quotients;
//! * [`free`] — the free quandle on `n` generators, modelling the knot
//!   quandle of a punctured disk;
//! * [`monodromy`] — vanishing-cycle tuples, Hurwitz moves, total
//!   monodromy and orbit canonicalization;
//! * [`qhomology`] — low-degree rack/quandle homology over `Z` via Smith
//!   normal form.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod error;
pub mod finite;
pub mod free;
pub mod group;
pub mod homology;
pub mod monodromy;
pub mod qhomology;
pub mod torus;

pub use error::{Error, Result};

/// A quandle: a set with right and left operations `a ▷ b` / `a ◁ b`
/// that are mutually inverse in the second argument, idempotent, and
/// right self-distributive.
///
/// The carrier may be infinite (slopes, homology classes); elements are
/// required to be `Ord` so tuples of them can be canonically compared.
pub trait Quandle {
    type Elem: Clone + Ord;

    fn right(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn left(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
}

/// A quandle together with a concrete augmentation group: every element
/// has a "twist" image and the group acts on the quandle.
///
/// `compose(a, b)` is the group product in the convention under which
/// `twist(a ▷ b) = compose(compose(inverse(twist(b)), twist(a)), twist(b))`,
/// which is exactly what makes the ordered product of twists invariant
/// under Hurwitz moves.
pub trait Augmented: Quandle {
    type Group: Clone + Eq;

    fn group_identity(&self) -> Self::Group;
    fn compose(&self, a: &Self::Group, b: &Self::Group) -> Self::Group;
    fn inverse(&self, g: &Self::Group) -> Self::Group;
    /// The augmentation `ℓ`: the (positive) twist attached to an element.
    fn twist(&self, c: &Self::Elem) -> Self::Group;
    /// Right action of the group on the quandle, satisfying
    /// `twist(act(x, g)) = conjugate(twist(x), g)`.
    fn act(&self, x: &Self::Elem, g: &Self::Group) -> Self::Elem;

    fn conjugate(&self, g: &Self::Group, h: &Self::Group) -> Self::Group {
        self.compose(&self.compose(&self.inverse(h), g), h)
    }
}
