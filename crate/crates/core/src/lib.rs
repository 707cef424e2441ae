//! Universal central extensions of finite-dimensional Lie superalgebras over
//! the rationals, computed exactly.
//!
//! The crate builds `uce(L) = (L ⊗ L) / B` from structure constants, reads off
//! `H₂(L)` as the kernel of the canonical map `uce(L) -> L`, computes the
//! first cyclic homology `HC₁(A)` of small associative superalgebras, and
//! checks how these constructions interact with direct limits on finite
//! directed systems.
//!
//! Module map:
//!
//! - [`exactla`]: sparse rational elimination, kernels, quotient presentations
//! - [`superalg`]: graded bases, Lie/associative superalgebras, centre, derived algebra
//! - [`uce`]: the universal central extension functor, `H₂`, cocycles, a dual oracle
//! - [`cyclic`]: `⟨⟨A, A⟩⟩`, the commutator map and `HC₁(A)`
//! - [`matrices`]: `gl`, `sl`, `osp`, periplectic and queer families over a coefficient algebra
//! - [`limits`]: directed systems, colimits and the direct-limit comparison maps
//! - [`cli`]: file formats, reports and the `uce` command-line front end

pub mod cli;
pub mod cyclic;
mod error;
pub mod exactla;
pub mod limits;
pub mod matrices;
pub mod superalg;
pub mod uce;

pub use error::{Error, Result};
