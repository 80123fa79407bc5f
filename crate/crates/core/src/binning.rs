//! Unit-grid spectral binning of a Hermitian operator.
//!
//! Every eigenvalue `λ` lands in the bin `n` with `n − 1/2 ≤ λ < n + 1/2`.
//! From the bins we get the projections `e_n`, the discrete approximant
//! `D̄ = Σ n e_n`, the perturbation `b = D − D̄` and the modulus correction
//! `c = |D| − |D̄|`. All of them are diagonal in the eigenbasis of `D`.

use std::collections::BTreeMap;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::operator::{c, reassemble, BoundedOperator, Complex64, HermitianOperator};

/// The bin holding `lambda` on the unit grid: `floor(λ + 1/2)`.
pub fn bin_index(lambda: f64) -> i64 {
    (lambda + 0.5).floor() as i64
}

fn bin_index_with_grid(lambda: f64, grid: f64) -> i64 {
    if grid == 1.0 {
        bin_index(lambda)
    } else {
        (lambda / grid + 0.5).floor() as i64
    }
}

#[derive(Debug, Clone)]
pub struct SpectralBinning {
    grid: f64,
    operator: HermitianOperator,
    bins: BTreeMap<i64, Vec<usize>>,
    // Per eigen-index data, aligned with `operator.eigenvalues()`.
    bin_of: Vec<i64>,
    dbar: HermitianOperator,
    b: BoundedOperator,
    c: BoundedOperator,
}

/// Bins `d` on the unit grid.
pub fn build_binning(d: &HermitianOperator) -> SpectralBinning {
    SpectralBinning::build(d, 1.0).expect("unit grid is valid")
}

impl SpectralBinning {
    /// Bins on the grid `h·[n − 1/2, n + 1/2)`. Only `h = 1` is accepted
    /// by the inequality checkers; other lengths are for exploration.
    pub fn build(d: &HermitianOperator, grid: f64) -> Result<Self> {
        if !(grid.is_finite() && grid > 0.0) {
            return Err(Error::InvalidGrid(grid));
        }
        let lambdas = d.eigenvalues();
        let bin_of: Vec<i64> = lambdas.iter().map(|&l| bin_index_with_grid(l, grid)).collect();
        let mut bins: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (k, &n) in bin_of.iter().enumerate() {
            bins.entry(n).or_default().push(k);
        }
        let centers: Vec<f64> = bin_of.iter().map(|&n| grid * n as f64).collect();
        // Rounding is monotone, so the centers are already ascending and the
        // eigenvector order of `d` carries over unchanged.
        let dbar = HermitianOperator::from_eigensystem(centers.clone(), d.eigenvectors().clone())?;
        let u = d.eigenvectors();
        let b = BoundedOperator::new(reassemble(
            u,
            lambdas.iter().zip(&centers).map(|(l, n)| c(l - n)),
        ))?;
        let c_op = BoundedOperator::new(reassemble(
            u,
            lambdas.iter().zip(&centers).map(|(l, n)| c(l.abs() - n.abs())),
        ))?;
        Ok(Self {
            grid,
            operator: d.clone(),
            bins,
            bin_of,
            dbar,
            b,
            c: c_op,
        })
    }

    pub fn grid(&self) -> f64 {
        self.grid
    }

    pub fn operator(&self) -> &HermitianOperator {
        &self.operator
    }

    pub fn dim(&self) -> usize {
        self.operator.dim()
    }

    /// Bin label → eigen-indices in that bin. Empty bins never appear.
    pub fn bins(&self) -> &BTreeMap<i64, Vec<usize>> {
        &self.bins
    }

    /// Occupied bin labels, ascending.
    pub fn occupied(&self) -> Vec<i64> {
        self.bins.keys().copied().collect()
    }

    pub fn bin(&self, n: i64) -> &[usize] {
        self.bins.get(&n).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn bin_size(&self, n: i64) -> usize {
        self.bin(n).len()
    }

    /// Bin label of eigen-index `k`.
    pub fn bin_of(&self, k: usize) -> i64 {
        self.bin_of[k]
    }

    /// The discrete approximant `D̄`.
    pub fn dbar(&self) -> &HermitianOperator {
        &self.dbar
    }

    /// `b = D − D̄`.
    pub fn b(&self) -> &BoundedOperator {
        &self.b
    }

    /// `c = |D| − |D̄|`.
    pub fn c(&self) -> &BoundedOperator {
        &self.c
    }

    /// Eigenvalues of `b` per eigen-index.
    pub fn b_values(&self) -> Vec<f64> {
        self.operator
            .eigenvalues()
            .iter()
            .zip(self.dbar.eigenvalues())
            .map(|(l, n)| l - n)
            .collect()
    }

    /// Eigenvalues of `c` per eigen-index.
    pub fn c_values(&self) -> Vec<f64> {
        self.operator
            .eigenvalues()
            .iter()
            .zip(self.dbar.eigenvalues())
            .map(|(l, n)| l.abs() - n.abs())
            .collect()
    }

    /// Spectral projection `e_n` (zero when the bin is empty).
    pub fn projection(&self, n: i64) -> BoundedOperator {
        let dim = self.dim();
        let members = self.bin(n);
        let u = self.operator.eigenvectors();
        let mut out = DMatrix::<Complex64>::zeros(dim, dim);
        for &k in members {
            let col = u.column(k);
            out += col * col.adjoint();
        }
        BoundedOperator::new(out).expect("square")
    }

    pub(crate) fn require_unit_grid(&self) -> Result<()> {
        if self.grid != 1.0 {
            return Err(Error::UnsupportedGrid(self.grid));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::commutator;

    #[test]
    fn bin_index_half_open_convention() {
        assert_eq!(bin_index(0.49), 0);
        assert_eq!(bin_index(0.5), 1);
        assert_eq!(bin_index(-0.5), 0);
        assert_eq!(bin_index(-0.51), -1);
        assert_eq!(bin_index(3.0), 3);
        assert_eq!(bin_index(-1.4), -1);
    }

    #[test]
    fn per_eigenvalue_rounding() {
        let d = HermitianOperator::from_diagonal(&[0.3, 0.7, 2.1]).unwrap();
        let bins = build_binning(&d);
        assert_eq!(bins.occupied(), vec![0, 1, 2]);
        assert_eq!(bins.bin(0), &[0]);
        assert_eq!(bins.bin(1), &[1]);
        assert_eq!(bins.bin(2), &[2]);
        let want = [0.3, -0.3, 0.1];
        for (got, want) in bins.b_values().iter().zip(want) {
            assert!((got - want).abs() < 1e-15);
        }
    }

    #[test]
    fn integer_spectrum_is_already_on_grid() {
        let d = HermitianOperator::from_diagonal(&[-2.0, 0.0, 3.0, 3.0]).unwrap();
        let bins = build_binning(&d);
        assert_eq!(bins.dbar().matrix(), d.matrix());
        assert_eq!(bins.b().norm(), 0.0);
        assert_eq!(bins.c().norm(), 0.0);
        assert_eq!(bins.bin(3), &[2, 3]);
    }

    #[test]
    fn negative_eigenvalue_modulus_correction() {
        let d = HermitianOperator::from_diagonal(&[-1.4]).unwrap();
        let bins = build_binning(&d);
        assert_eq!(bins.dbar().eigenvalues(), &[-1.0]);
        assert!((bins.b_values()[0] + 0.4).abs() < 1e-15);
        assert!((bins.c_values()[0] - 0.4).abs() < 1e-15);
    }

    #[test]
    fn empty_bins_are_dropped() {
        let d = HermitianOperator::from_diagonal(&[-7.2, 0.1, 9.9]).unwrap();
        let bins = build_binning(&d);
        assert_eq!(bins.occupied(), vec![-7, 0, 10]);
        assert_eq!(bins.bin_size(5), 0);
        assert_eq!(bins.projection(5).norm(), 0.0);
    }

    #[test]
    fn projections_resolve_identity() {
        let d = HermitianOperator::from_diagonal(&[0.2, 0.4, 1.6, 1.3, -2.0]).unwrap();
        let bins = build_binning(&d);
        let mut total = BoundedOperator::zeros(5);
        for n in bins.occupied() {
            let e = bins.projection(n);
            assert!((&e * &e).max_abs_diff(&e) < 1e-12);
            assert!(e.adjoint().max_abs_diff(&e) < 1e-12);
            for m in bins.occupied() {
                if m != n {
                    assert!((&e * &bins.projection(m)).norm() < 1e-12);
                }
            }
            total = &total + &e;
        }
        assert!(total.max_abs_diff(&BoundedOperator::identity(5)) < 1e-12);
    }

    #[test]
    fn functions_of_d_commute() {
        let d = HermitianOperator::from_diagonal(&[0.2, -3.4, 1.6]).unwrap();
        let bins = build_binning(&d);
        let ops = [d.to_bounded(), bins.dbar().to_bounded(), bins.b().clone(), bins.c().clone()];
        for a in &ops {
            for b in &ops {
                assert!(commutator(a, b).unwrap().norm() < 1e-12);
            }
        }
    }

    #[test]
    fn other_grid_lengths() {
        let d = HermitianOperator::from_diagonal(&[0.3, 0.8]).unwrap();
        let bins = SpectralBinning::build(&d, 0.5).unwrap();
        assert_eq!(bins.occupied(), vec![1, 2]);
        assert!(bins.b_values().iter().all(|v| v.abs() <= 0.25));
        assert!(matches!(bins.require_unit_grid(), Err(Error::UnsupportedGrid(_))));
        assert!(matches!(SpectralBinning::build(&d, 0.0), Err(Error::InvalidGrid(_))));
    }
}
