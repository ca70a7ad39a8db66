//! Exact symbolic engine for a unified family of rank-2 quantum affine
//! (super)algebras: one presentation, one phase bit.
//!
//! The crate builds the algebras from their Chevalley presentation and
//! mechanically verifies braid actions, Cartan-Weyl commutation catalogs,
//! the extremal projector, the universal R-matrix and the current
//! realization, all at a configurable degree truncation and for both values
//! of the phase.

pub mod algebra;
pub mod braid;
pub mod cwbasis;
pub mod cwsuite;
pub mod drinfeld;
pub mod engine;
pub mod hopf;
pub mod coeffs;
pub mod error;
pub mod lattice;
pub mod oracle;
pub mod products;
pub mod projector;
pub mod relations;
pub mod rmatrix;
pub mod report;
pub mod qrat;
pub mod tensor;
pub mod truncation;

pub use algebra::{Element, Letter, Word};
pub use coeffs::{CartanMono, CartanPoly, Coefficient};
pub use error::{CoreError, Result};
pub use lattice::{AlgebraConfig, AlgebraKind, Root, Weight};
pub use engine::Engine;
pub use qrat::{QRat, ZPoly};
pub use report::{IdentityReport, Verdict};
pub use truncation::{Truncation, Window};
