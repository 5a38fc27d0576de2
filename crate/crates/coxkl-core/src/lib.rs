//! Exact combinatorics of Coxeter groups, twisted Bruhat orders and the
//! Kazhdan-Lusztig style polynomial families attached to them.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats and the CLI
//! live in the companion `coxkl` crate.
//!
//! Module overview:
//!
//! * [`num`] — exact arithmetic in the real cyclotomic coefficient rings
//!   needed for root coordinates (`Z[2cos(pi/N)]`), with certified sign
//!   determination.
//! * [`coxeter`] — Coxeter systems given by their bond matrix; elements in
//!   canonical (ShortLex-least) reduced-word form, descents, inversion sets,
//!   Bruhat order, parabolic decompositions.
//! * [`laurent`] — sparse integer Laurent polynomials in `u`, the bar
//!   involution `u -> u^-1`, the `abar = u^-1 - u` basis, and the
//!   normalization bridges to polynomials in `q = u^2`.
//! * [`kl`] — classical R-polynomials, Kazhdan-Lusztig P and inverse Q,
//!   a generic KL-from-R solver reused by every order in the crate, and the
//!   reflection-order chain-sum oracle.
//! * [`springer`] — the poset `V` of triples `[I,a,b]`, its `W x W` action,
//!   the Hecke-module recursion for the `b`-polynomials, `c`-polynomials,
//!   the edge graph and poset diagnostics.
//! * [`hat`] — the associated system `(What, Shat)`, the elements `z_I`,
//!   twisted lengths and orders for `A = That \ W`, the `R^A` and `P_A`
//!   families and the isomorphisms `phi`, `phi'`.

#![no_std]

extern crate alloc;

pub mod coxeter;
pub mod error;
pub mod hat;
pub mod kl;
pub mod laurent;
pub mod num;
pub mod springer;

pub use coxeter::{Bond, CoxeterSystem, Element, GenSet, Reflection};
pub use error::CoxError;
pub use hat::{HatConfig, HatCtx, HatSystem, OmegaElement};
pub use kl::{KlTables, PolyTable, ReflectionOrder, TableKind};
pub use laurent::{LaurentPoly, QPoly};
pub use springer::{PairGen, VCtx, VElement};
