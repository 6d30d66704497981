//! Exact arithmetic for BHK pairs and the Picard numbers of their K3 surfaces.
//!
//! A BHK pair is a weighted Delsarte matrix `A` (a 4×4 nonnegative integer
//! matrix encoding the four-monomial polynomial `F_A`) together with a group
//! `G` of diagonal symmetries with `J ⊆ G ⊆ SL`. This crate validates such
//! pairs, builds their transposed (mirror) data, and computes geometric
//! Picard numbers of the associated K3 surfaces three ways:
//!
//! * by counting the Shioda–Kelly set directly from its definition,
//! * by decomposing it into orbits of `(ℤ/d)^×`,
//! * by the closed form `22 − φ(h_T)` (or `22` in supersingular characteristic).
//!
//! Every group lives additively in `(ℤ/d)^4` as an explicit sorted element
//! list, and all arithmetic is exact integer or rational arithmetic.
//!
//! The crate is `no_std` and needs only `alloc`.
//!
//! ```
//! use bhk_core::{fixtures, Characteristic, DelsarteMatrix, BhkPair, GroupChoice, PicardReport};
//!
//! let char0 = Characteristic::ZERO;
//! let m = DelsarteMatrix::new(fixtures::KELLY_CHAIN, char0).unwrap();
//! let pair = BhkPair::with_choice(m, GroupChoice::J, char0).unwrap();
//! let mirror = pair.mirror_pair().unwrap();
//! let report = PicardReport::compute(&mirror).unwrap();
//! assert_eq!((report.rho_primal, report.rho_mirror), (18, 16));
//! ```

#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod catalog;
pub mod delsarte;
pub mod duality;
pub mod error;
pub mod exact_math;
pub mod fixtures;
pub mod groups;
pub mod picard;
pub mod smoothness;

pub use delsarte::{Characteristic, DelsarteMatrix};
pub use duality::{dual_group, pairing, BhkPair, GroupChoice, MirrorPair};
pub use error::{Error, Result};
pub use exact_math::{IntMatrix4, Rational};
pub use groups::{GroupElement, SymmetrySubgroup};
pub use picard::{AgedElement, OrbitDecomposition, PicardReport, ResidueTable};
pub use smoothness::{AdequacyReport, Atom, AtomicDecomposition};

/// Second Betti number of a K3 surface; every Picard number is `22` minus a count.
pub const K3_B2: u64 = 22;
