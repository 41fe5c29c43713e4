//! Integer traces of endomorphisms of supersingular elliptic curves over
//! Fp^2, where the endomorphism is presented as a chain of small-degree
//! isogenies in standard form.
//!
//! The crate provides:
//! - exact field towers and polynomial arithmetic ([`algebra`]),
//! - short Weierstrass curves, division polynomials and point arithmetic
//!   ([`curves`]),
//! - standard-form separable isogenies and validated chains ([`isogenies`]),
//! - arithmetic with restrictions of maps to isogeny kernels ([`restrict`]),
//! - four trace algorithms with CRT assembly ([`trace`]),
//! - a generator of test endomorphisms via isogeny-graph cycles ([`walks`]),
//! - textual serialization of curves and chains ([`codec`]).

pub mod algebra;
pub mod codec;
pub mod curves;
pub mod isogenies;
pub mod restrict;
pub mod trace;
pub mod walks;

pub use algebra::{Field, FieldElement, Polynomial};
pub use curves::{Curve, Point};
// pub use isogenies::{Chain, IsogenyStep};
// pub use restrict::{QuotientRing, RestrictedPoint};
// pub use trace::{trace, Method, TraceResult};
