//! Exact construction and certification of matrices with self-interlacing
//! spectrum.
//!
//! A real `n×n` matrix has a *self-interlacing spectrum* (kind I) when its
//! eigenvalues are real, simple and satisfy
//! `λ1 > -λ2 > λ3 > ... > (-1)^(n-1) λn > 0`. Such matrices arise by reversing
//! the rows (or columns) of a totally nonnegative matrix, provided a pair of
//! corner positivity conditions hold. This crate decides every property
//! involved with exact rational arithmetic:
//!
//! - [`matrix`]: rational dense matrices, fraction-free determinants, minors,
//!   products, row/column reversal and characteristic polynomials.
//! - [`classification`]: total nonnegativity, strict total positivity,
//!   oscillatory matrices, sign-definite classes `n` and `n⁺`, corner
//!   conditions and the Jacobi / anti-Jacobi leading-minor criteria.
//! - [`polynomial`]: the coefficient sign twist, Hurwitz stability, the
//!   self-interlacing test and Sturm real-root isolation.
//! - [`spectra`]: spectrum reports and eigenvalue sign patterns.
//! - [`constructors`]: structured families and seeded random generators.
//! - [`certify`]: the full row-reversal certification pipeline.
//!
//! Minor enumeration runs on rayon when the `parallel` feature is enabled
//! (the default) and falls back to a sequential scan otherwise. Reported
//! witnesses are always the first in enumeration order, so results do not
//! depend on the execution strategy.

pub mod certify;
pub mod classification;
pub mod constructors;
mod error;
pub mod matrix;
pub mod par;
pub mod polynomial;
pub mod rational;
pub mod spectra;

pub use certify::{jflip_si_certificate, FlipSide, JflipCertificate, Stage, StageReport};
pub use classification::{
    anti_tridiagonal_criterion, check_corner_conditions, classify_sign_definite, is_oscillatory,
    is_oscillatory_by_definition, is_strictly_totally_positive, is_totally_nonnegative,
    jacobi_oscillatory_criterion, CornerConditionReport, Sign, SignClassification,
    SignDefiniteVerdict, SignatureEntry, TnnCheck,
};
pub use constructors::{
    anti_bidiagonal, anti_jacobi, bidiagonal_lower, bidiagonal_upper, equivalent_tridiagonal,
    jacobi_matrix, random_oscillatory, random_positive_tnn, random_tnn, AntiBidiagonalSpec,
    JacobiSpec,
};
pub use error::{Error, Result};
pub use matrix::{Matrix, MinorSelector};
pub use par::Strategy;
pub use polynomial::{
    hurwitz_minors, hurwitz_stable, is_self_interlacing, isolate_real_roots, poly_from_roots,
    refine_root, si_twist, twist_for_kind, Polynomial, RootBox, SIKind, TwistedPolynomial,
};
pub use rational::{parse_rational, Rational, Tolerance};
pub use spectra::{
    kind_two_report, spectrum_report, verify_sign_pattern, SpectrumReport, SpectrumVerdict,
};
