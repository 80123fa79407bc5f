//! Finite-dimensional verification of commutator norm inequalities obtained
//! through Schur products.
//!
//! For a Hermitian matrix `D` and an arbitrary matrix `y`, the crate
//! evaluates `‖[g(D), y]‖` exactly and compares it with right-hand sides
//! built from `‖y‖`, `‖[D, y]‖`, `‖[D, [D, y]]‖`, … for several classes of
//! functions `g`: Hölder-bounded functions, functions whose derivative lies in
//! `L¹ + L^∞` or `L^p`, clamped and extended logarithms, and `|t|`.
//!
//! The machinery underneath is spectral binning on the unit grid, the
//! block decomposition `x_ij = e_i x e_j`, and Schur multipliers with
//! row-norm bounds.
//!
//! ```
//! use schur_commutators::{check_abs_first, BoundedOperator, HermitianOperator};
//!
//! let d = HermitianOperator::from_diagonal(&[-5.0, 5.0]).unwrap();
//! let y = BoundedOperator::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
//! let report = check_abs_first(&d, &y).unwrap();
//! assert!(report.pass);
//! assert_eq!(report.lhs, 0.0);
//! ```
//!
//! See `examples/` for one runnable program per capability.

pub mod binning;
pub mod block;
pub mod campaign;
pub mod ensemble;
pub mod error;
pub mod fourier;
pub mod functions;
pub mod inequality;
pub mod multipliers;
pub mod operator;
pub mod quadrature;
pub mod report;

pub use binning::{bin_index, build_binning, SpectralBinning};
pub use block::{
    assemble, bennett_bound_check, block_derivation, block_derivation_power, column_norm_blocks, row_norm,
    row_norm_blocks, schur_scalar_product, to_blocks, BlockMatrix, Derivation, RowNorm, ScalarMultiplier,
};
pub use campaign::{
    constants_table, run_campaign, run_fourier, run_trial, CampaignConfig, ConstantRow, ConstantsGrid, ReportFile,
};
pub use ensemble::{haar_unitary, random_bounded, random_hermitian, random_positive, Ensemble, PositiveSpec};
pub use error::{Error, Result};
pub use fourier::{derivation_as_schur, exact_schur_identity, CircleModel, IdentityResidual};
pub use functions::{
    cutoff_split, log_beta_split, lp_norm_of_derivative, verify_holder_bound, FunctionKind, FunctionSpec, HolderBound,
    L1LinfSplit,
};
pub use inequality::{
    check_abs_cont, check_abs_first, check_abs_higher, check_gbeta, check_holder, check_log_interp, check_lp,
    check_tilde_log, optimized_log_constant, PositiveInstance,
};
pub use multipliers::{abs_multiplier, abs_row_bound, holder_multiplier};
pub use operator::{
    commutator, derivative_norms, iterated_commutator, operator_norm, BoundedOperator, Complex64, HermitianOperator,
};
pub use report::{InequalityReport, InstanceDigest, StepCheck, TheoremId, Tolerance};
