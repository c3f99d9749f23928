//! Exact-arithmetic engine for planar polynomial vector fields near a
//! singular point: classification of the linear part, Poincaré–Dulac
//! normalization, reduction to Poincaré renormalized form (PRF) or Lie
//! renormalized form (LRF), and closed-form coordinate-change analysis.
//!
//! Every coefficient is an arbitrary-precision rational; there is no
//! floating point anywhere in the reduction pipeline. High-precision
//! fixed-point reals appear only in [`coordmap`], which evaluates the
//! closed-form coordinate changes numerically.

pub mod algebra;
pub mod classify;
pub mod coordmap;
pub mod homology;
pub mod linalg;
pub mod normalform;
pub mod parse;
pub mod pipeline;
pub mod renormalize;
pub mod report;

pub use algebra::{bch_conjugate, HomVF, JetSeries, Rational, VecMonomial};
pub use classify::{classify_linear, GeneratorBasis, LinearClass};
pub use normalform::{dulac_normalize, Generator, TransformLog};
pub use pipeline::{run_pipeline, RunConfig, Scheme};
pub use renormalize::{case_dispatch, lrf_reduce, prf_reduce, CaseTag, ReducedForm};
