//! Combinatorial engine for real trichotomic graphs and dessins on compact
//! surfaces with boundary: representation, validation, canonical forms,
//! numeric invariants, the elementary-move rewriting system, cut/glue
//! surgery, scrap calculus, and the M / (M-1) ribbon classification.
//!
//! The crate is `no_std` + `alloc`; all state lives in plain vectors and
//! B-trees, every operation is a pure function over immutable [`map::Dessin`]
//! values, and all iteration orders are deterministic.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod canon;
pub mod classify;
pub mod enumerate;
pub mod invariants;
pub mod map;
pub mod moves;
pub mod star;
pub mod surgery;
pub mod validate;

pub use map::{Dessin, EdgeId, EdgeKind, RegionId, VertexId, VertexKind};
