//! Finite frames generated by graph Laplacians, their dual frames, and the
//! spectral-radius / operator-norm measures of reconstruction error under
//! coefficient erasures.
//!
//! The crate is organised bottom-up:
//!
//! - [`linalg`]: small dense kernels (Jacobi, Francis QR, norms, null spaces)
//! - [`graph`]: simple graphs, their Laplacians and structural predicates
//! - [`frame`]: frames, frame operators, canonical and Parseval duals,
//!   frames built from graph Laplacians
//! - [`erasure`]: erasure error operators and the averaged measures
//! - [`optimality`]: uniformity tests, optimality classification, the
//!   corank-one dual family and the dual search
//! - [`cli`]: the command implementations behind the `graph-frames` binary
//!
//! Runnable walkthroughs of each capability live in the crate's
//! `examples/` directory.

// `!(x > 0.0)` is used deliberately so that NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod erasure;
pub mod error;
pub mod frame;
pub mod graph;
pub mod linalg;
pub mod optimality;
pub mod report;

pub use error::{Error, ErrorClass, Result};
pub use erasure::{ErasureReport, ErasureSet, MeasureParams};
pub use frame::{DualPair, Frame};
pub use graph::Graph;
pub use linalg::Matrix;
