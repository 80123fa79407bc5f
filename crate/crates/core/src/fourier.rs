//! Truncated circle model: `D = diag(−M, …, M)`.
//!
//! Every bin is one-dimensional and `D̄ = D`, so the Schur-product
//! descriptions of `[g(D), y]` and `[D, y]` hold exactly, not just as bounds.

use serde::{Deserialize, Serialize};

use crate::binning::{build_binning, SpectralBinning};
use crate::block::{schur_scalar_product, to_blocks, ScalarMultiplier};
use crate::error::{Error, Result};
use crate::functions::FunctionSpec;
use crate::operator::{commutator, BoundedOperator, Complex64, HermitianOperator};

#[derive(Debug, Clone)]
pub struct CircleModel {
    m: usize,
    operator: HermitianOperator,
    binning: SpectralBinning,
}

impl CircleModel {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("mode cutoff M must be positive".into()));
        }
        let values: Vec<f64> = (-(m as i64)..=m as i64).map(|n| n as f64).collect();
        let operator = HermitianOperator::from_diagonal(&values)?;
        let binning = build_binning(&operator);
        Ok(Self { m, operator, binning })
    }

    pub fn cutoff(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        2 * self.m + 1
    }

    pub fn operator(&self) -> &HermitianOperator {
        &self.operator
    }

    pub fn binning(&self) -> &SpectralBinning {
        &self.binning
    }

    /// Basis labels `−M..=M`.
    pub fn labels(&self) -> impl Iterator<Item = i64> {
        -(self.m as i64)..=self.m as i64
    }

    fn check_dim(&self, y: &BoundedOperator) -> Result<()> {
        if y.dim() != self.dim() {
            return Err(Error::DimMismatch {
                left: self.dim(),
                right: y.dim(),
            });
        }
        Ok(())
    }
}

/// `S_ij = (g(i) − g(j))/(i − j)`, zero on the diagonal.
pub fn difference_quotient(g: &FunctionSpec) -> ScalarMultiplier {
    let eval = g.evaluator();
    ScalarMultiplier::new(format!("dq[{}]", g.name()), move |i, j| {
        if i == j {
            Complex64::new(0.0, 0.0)
        } else {
            (eval(i as f64) - eval(j as f64)) / (i - j) as f64
        }
    })
}

/// Residual of an exact identity against its contract threshold.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IdentityResidual {
    pub residual: f64,
    pub threshold: f64,
    pub pass: bool,
}

impl IdentityResidual {
    fn new(residual: f64, threshold: f64) -> Self {
        Self {
            residual,
            threshold,
            pass: residual <= threshold,
        }
    }
}

/// `‖[g(D), y] − S ∗ [D, y]‖` against `1e−12·(1 + ‖g(D)‖)·‖y‖`.
pub fn exact_schur_identity(model: &CircleModel, g: &FunctionSpec, y: &BoundedOperator) -> Result<IdentityResidual> {
    model.check_dim(y)?;
    let d = model.operator();
    let gd = d.apply_function(|t| g.evaluate(t))?;
    let direct = commutator(&gd, y)?;
    let dy = commutator(&d.to_bounded(), y)?;
    let via_schur = schur_scalar_product(&difference_quotient(g), &to_blocks(model.binning(), &dy)?).assemble();
    let residual = (&direct - &via_schur).norm();
    Ok(IdentityResidual::new(residual, 1e-12 * (1.0 + gd.norm()) * y.norm()))
}

/// `‖[D, y] − (i − j) ∗ y‖` against `1e−12·(1 + ‖D‖)·‖y‖`.
pub fn derivation_as_schur(model: &CircleModel, y: &BoundedOperator) -> Result<IdentityResidual> {
    model.check_dim(y)?;
    let d = model.operator();
    let direct = commutator(&d.to_bounded(), y)?;
    let via_schur = schur_scalar_product(&ScalarMultiplier::index_difference(), &to_blocks(model.binning(), y)?).assemble();
    let residual = (&direct - &via_schur).norm();
    Ok(IdentityResidual::new(
        residual,
        1e-12 * (1.0 + d.spectral_radius()) * y.norm(),
    ))
}
