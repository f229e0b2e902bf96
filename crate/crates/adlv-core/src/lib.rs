//! Exact-arithmetic invariants of affine Deligne-Lusztig varieties with very
//! special level structure.
//!
//! The crate computes, for a quasi-split group given by a based root datum
//! with inertia and Frobenius actions, the combinatorial invariants of the
//! varieties `X_mu(b)`: nonemptiness, dimension, irreducible-component orbit
//! counts, connected-component data and the Newton stratification poset.
//! Every headline number is derived along two independent routes (closed
//! formula vs. enumeration) and the two are compared before a report is
//! emitted.
//!
//! All arithmetic is exact: `i64` lattice coordinates, `Ratio<i64>` for
//! rational coweights and pairings. No floating point anywhere.
//!
//! Module map:
//! - [`matrix`], [`abelian`]: integer linear algebra, Smith normal form,
//!   finitely generated abelian groups.
//! - [`rootdata`]: based root data with Galois actions, coinvariant lattices,
//!   the echelonnage root system, relative Weyl group, `pi_1` and the
//!   Kottwitz map.
//! - [`isoclass`]: sigma-conjugacy classes, Newton/Kottwitz points, defect,
//!   the Mazur inequality and the poset `B(G, mu)`.
//! - [`crystal`]: weight multiplicities of the dual group (Freudenthal and
//!   Littelmann paths), tensor and Levi branching multiplicities.
//! - [`superbasic`]: the twisted d-fold stratum calculus for superbasic
//!   classes of `Res GL_n` type, EL-charts.
//! - [`levi`]: reduction to a Levi subgroup, assembled dimension formula,
//!   minimal-element graphs for connected components.
//! - [`adlv`]: the top-level invariant reports and Newton stratification.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod abelian;
pub mod adlv;
pub mod crystal;
pub mod error;
pub mod isoclass;
pub mod levi;
pub mod matrix;
pub mod rational;
pub mod rootdata;
pub mod superbasic;

pub use error::Error;
pub use rational::Rat;
