//! Dense operators on a finite-dimensional Hilbert space.
//!
//! [`HermitianOperator`] plays the role of the self-adjoint generator `D`
//! and caches its eigendecomposition; [`BoundedOperator`] holds everything
//! else (`y`, commutators, `g(D)`).
//!
//! Derivative convention: the weak derivative `δ(y)` equals `i[D, y]` and
//! `|i| = 1`, so every norm `‖δ^k(y)‖` is reported as `‖ad_D^k(y)‖` and no
//! factors of `i` are carried around.

use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{DMatrix, DVector};

pub use nalgebra::Complex;

use crate::error::{Error, Result};

pub type Complex64 = Complex<f64>;

/// Relative tolerance for the Hermitian symmetry check.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Relative tolerance for eigendecomposition reconstruction and unitarity.
pub const RECONSTRUCTION_TOL: f64 = 1e-10;

/// A general dense complex square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundedOperator {
    matrix: DMatrix<Complex64>,
}

impl BoundedOperator {
    pub fn new(matrix: DMatrix<Complex64>) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() {
            return Err(Error::NotSquare {
                rows: matrix.nrows(),
                cols: matrix.ncols(),
            });
        }
        Ok(Self { matrix })
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            matrix: DMatrix::zeros(dim, dim),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            matrix: DMatrix::identity(dim, dim),
        }
    }

    pub fn from_fn(dim: usize, f: impl FnMut(usize, usize) -> Complex64) -> Self {
        Self {
            matrix: DMatrix::from_fn(dim, dim, f),
        }
    }

    /// Builds an operator from real row-major entries.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::NotSquare {
                rows: n,
                cols: bad.len(),
            });
        }
        Ok(Self::from_fn(n, |i, j| Complex64::new(rows[i][j], 0.0)))
    }

    pub fn diagonal(values: &[Complex64]) -> Self {
        Self {
            matrix: DMatrix::from_diagonal(&DVector::from_column_slice(values)),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.matrix
    }

    pub fn adjoint(&self) -> Self {
        Self {
            matrix: self.matrix.adjoint(),
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            matrix: &self.matrix * factor,
        }
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    /// Largest singular value.
    pub fn norm(&self) -> f64 {
        operator_norm(self)
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &BoundedOperator) -> f64 {
        self.matrix
            .iter()
            .zip(other.matrix.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    fn check_dim(&self, other: &BoundedOperator) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &BoundedOperator) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            matrix: &self.matrix + &other.matrix,
        })
    }

    pub fn try_sub(&self, other: &BoundedOperator) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            matrix: &self.matrix - &other.matrix,
        })
    }

    pub fn try_mul(&self, other: &BoundedOperator) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            matrix: &self.matrix * &other.matrix,
        })
    }
}

// The operator impls panic on dimension mismatch, like nalgebra's own.
impl Add for &BoundedOperator {
    type Output = BoundedOperator;
    fn add(self, rhs: &BoundedOperator) -> BoundedOperator {
        BoundedOperator {
            matrix: &self.matrix + &rhs.matrix,
        }
    }
}

impl Sub for &BoundedOperator {
    type Output = BoundedOperator;
    fn sub(self, rhs: &BoundedOperator) -> BoundedOperator {
        BoundedOperator {
            matrix: &self.matrix - &rhs.matrix,
        }
    }
}

impl Mul for &BoundedOperator {
    type Output = BoundedOperator;
    fn mul(self, rhs: &BoundedOperator) -> BoundedOperator {
        BoundedOperator {
            matrix: &self.matrix * &rhs.matrix,
        }
    }
}

impl Neg for &BoundedOperator {
    type Output = BoundedOperator;
    fn neg(self) -> BoundedOperator {
        BoundedOperator {
            matrix: -&self.matrix,
        }
    }
}

/// A Hermitian matrix together with its eigendecomposition.
///
/// Eigenvalues are sorted ascending; eigenvector `k` is column `k` of
/// [`eigenvectors`](Self::eigenvectors). Inside a degenerate eigenspace the
/// basis is whatever the solver returned.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOperator {
    matrix: DMatrix<Complex64>,
    eigenvalues: Vec<f64>,
    eigenvectors: DMatrix<Complex64>,
}

/// Validates Hermitian symmetry and diagonalises.
pub fn make_hermitian(matrix: DMatrix<Complex64>) -> Result<HermitianOperator> {
    HermitianOperator::new(matrix)
}

impl HermitianOperator {
    pub fn new(matrix: DMatrix<Complex64>) -> Result<Self> {
        let (rows, cols) = matrix.shape();
        if rows != cols {
            return Err(Error::NotSquare { rows, cols });
        }
        if rows == 0 {
            return Err(Error::InvalidParameter("dimension must be positive".into()));
        }
        let scale = spectral_norm(&matrix);
        let tolerance = HERMITIAN_TOL * scale;
        let mut max_asymmetry = 0.0f64;
        for i in 0..rows {
            for j in i..rows {
                let d = (matrix[(i, j)] - matrix[(j, i)].conj()).norm();
                max_asymmetry = max_asymmetry.max(d);
            }
        }
        if max_asymmetry > tolerance {
            return Err(Error::NotHermitian {
                max_asymmetry,
                tolerance,
            });
        }
        let symmetric = (&matrix + matrix.adjoint()) * Complex64::new(0.5, 0.0);
        let eig = symmetric.clone().symmetric_eigen();
        let (eigenvalues, eigenvectors) =
            sort_eigensystem(eig.eigenvalues.iter().copied().collect(), eig.eigenvectors);
        let op = Self {
            matrix: symmetric,
            eigenvalues,
            eigenvectors,
        };
        let residual = op.reconstruction_residual();
        if residual > RECONSTRUCTION_TOL * scale.max(f64::MIN_POSITIVE) && residual > 0.0 {
            return Err(Error::Decomposition(format!(
                "reconstruction residual {residual:e} at scale {scale:e}"
            )));
        }
        Ok(op)
    }

    /// Builds `U diag(eigenvalues) U*` from a known eigensystem.
    ///
    /// The eigenvalues are stored exactly as given (after sorting), which
    /// is what lets random instances carry exact zeros.
    pub fn from_eigensystem(eigenvalues: Vec<f64>, eigenvectors: DMatrix<Complex64>) -> Result<Self> {
        let (rows, cols) = eigenvectors.shape();
        if rows != cols {
            return Err(Error::NotSquare { rows, cols });
        }
        if eigenvalues.len() != rows {
            return Err(Error::DimMismatch {
                left: eigenvalues.len(),
                right: rows,
            });
        }
        if rows == 0 {
            return Err(Error::InvalidParameter("dimension must be positive".into()));
        }
        if let Some(&bad) = eigenvalues.iter().find(|v| !v.is_finite()) {
            return Err(Error::FunctionUndefinedAtSpectrum { eigenvalue: bad });
        }
        let residual = unitarity_residual(&eigenvectors);
        if residual > RECONSTRUCTION_TOL {
            return Err(Error::NotUnitary { residual });
        }
        let (eigenvalues, eigenvectors) = sort_eigensystem(eigenvalues, eigenvectors);
        let matrix = reassemble(&eigenvectors, eigenvalues.iter().map(|&v| Complex64::new(v, 0.0)));
        Ok(Self {
            matrix,
            eigenvalues,
            eigenvectors,
        })
    }

    pub fn from_diagonal(values: &[f64]) -> Result<Self> {
        Self::from_eigensystem(values.to_vec(), DMatrix::identity(values.len(), values.len()))
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &DMatrix<Complex64> {
        &self.eigenvectors
    }

    pub fn to_bounded(&self) -> BoundedOperator {
        BoundedOperator {
            matrix: self.matrix.clone(),
        }
    }

    /// `max |λ|`, which equals the operator norm.
    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn spectral_range(&self) -> (f64, f64) {
        (self.eigenvalues[0], self.eigenvalues[self.dim() - 1])
    }

    /// `‖U Λ U* − matrix‖`.
    pub fn reconstruction_residual(&self) -> f64 {
        let rebuilt = reassemble(
            &self.eigenvectors,
            self.eigenvalues.iter().map(|&v| Complex64::new(v, 0.0)),
        );
        spectral_norm(&(rebuilt - &self.matrix))
    }

    pub fn unitarity_residual(&self) -> f64 {
        unitarity_residual(&self.eigenvectors)
    }

    /// Functional calculus: `U diag(g(λ_k)) U*`.
    pub fn apply_function(&self, g: impl Fn(f64) -> Complex64) -> Result<BoundedOperator> {
        let values = self.map_eigenvalues(|_, v| g(v))?;
        Ok(BoundedOperator {
            matrix: reassemble(&self.eigenvectors, values.into_iter()),
        })
    }

    /// Functional calculus with an index-aware function, used where the
    /// image of an eigenvalue depends on construction metadata (kernels).
    pub fn apply_indexed(&self, g: impl Fn(usize, f64) -> Complex64) -> Result<BoundedOperator> {
        let values = self.map_eigenvalues(g)?;
        Ok(BoundedOperator {
            matrix: reassemble(&self.eigenvectors, values.into_iter()),
        })
    }

    /// A real function of this operator, kept in Hermitian form with the
    /// same eigenvectors (reordered so the new eigenvalues ascend).
    pub fn map_spectrum(&self, g: impl Fn(f64) -> f64) -> Result<HermitianOperator> {
        let values: Vec<f64> = self.eigenvalues.iter().map(|&v| g(v)).collect();
        if let Some((k, _)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::FunctionUndefinedAtSpectrum {
                eigenvalue: self.eigenvalues[k],
            });
        }
        Self::from_eigensystem(values, self.eigenvectors.clone())
    }

    fn map_eigenvalues(&self, g: impl Fn(usize, f64) -> Complex64) -> Result<Vec<Complex64>> {
        self.eigenvalues
            .iter()
            .enumerate()
            .map(|(k, &v)| {
                let z = g(k, v);
                if z.re.is_finite() && z.im.is_finite() {
                    Ok(z)
                } else {
                    Err(Error::FunctionUndefinedAtSpectrum { eigenvalue: v })
                }
            })
            .collect()
    }

    /// Coordinates of `x` in the eigenbasis: `U* x U`.
    pub fn to_eigenbasis(&self, x: &BoundedOperator) -> Result<DMatrix<Complex64>> {
        if x.dim() != self.dim() {
            return Err(Error::DimMismatch {
                left: self.dim(),
                right: x.dim(),
            });
        }
        Ok(self.eigenvectors.adjoint() * &x.matrix * &self.eigenvectors)
    }

    /// Inverse of [`to_eigenbasis`](Self::to_eigenbasis).
    pub fn from_eigenbasis(&self, coords: &DMatrix<Complex64>) -> Result<BoundedOperator> {
        if coords.nrows() != self.dim() || coords.ncols() != self.dim() {
            return Err(Error::DimMismatch {
                left: self.dim(),
                right: coords.nrows(),
            });
        }
        Ok(BoundedOperator {
            matrix: &self.eigenvectors * coords * self.eigenvectors.adjoint(),
        })
    }
}

/// `ab − ba`.
pub fn commutator(a: &BoundedOperator, b: &BoundedOperator) -> Result<BoundedOperator> {
    a.check_dim(b)?;
    Ok(BoundedOperator {
        matrix: &a.matrix * &b.matrix - &b.matrix * &a.matrix,
    })
}

/// `ad_D^k(y) = [D, [D, … [D, y]…]]`; `k = 0` returns `y`.
pub fn iterated_commutator(d: &HermitianOperator, y: &BoundedOperator, k: usize) -> Result<BoundedOperator> {
    if d.dim() != y.dim() {
        return Err(Error::DimMismatch {
            left: d.dim(),
            right: y.dim(),
        });
    }
    let mut out = y.matrix.clone();
    for _ in 0..k {
        out = &d.matrix * &out - &out * &d.matrix;
    }
    Ok(BoundedOperator { matrix: out })
}

/// `‖ad_D^k(y)‖` for `k = 0..=max_order`.
pub fn derivative_norms(d: &HermitianOperator, y: &BoundedOperator, max_order: usize) -> Result<Vec<f64>> {
    if d.dim() != y.dim() {
        return Err(Error::DimMismatch {
            left: d.dim(),
            right: y.dim(),
        });
    }
    let mut norms = Vec::with_capacity(max_order + 1);
    let mut current = y.matrix.clone();
    norms.push(spectral_norm(&current));
    for _ in 0..max_order {
        current = &d.matrix * &current - &current * &d.matrix;
        norms.push(spectral_norm(&current));
    }
    Ok(norms)
}

/// Largest singular value.
pub fn operator_norm(x: &BoundedOperator) -> f64 {
    spectral_norm(&x.matrix)
}

pub(crate) fn spectral_norm(m: &DMatrix<Complex64>) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    if m.iter().all(|z| z.re == 0.0 && z.im == 0.0) {
        return 0.0;
    }
    m.clone()
        .svd(false, false)
        .singular_values
        .iter()
        .copied()
        .fold(0.0, f64::max)
}

pub(crate) fn reassemble(
    u: &DMatrix<Complex64>,
    values: impl Iterator<Item = Complex64>,
) -> DMatrix<Complex64> {
    let mut scaled = u.clone();
    for (k, v) in values.enumerate() {
        scaled.column_mut(k).iter_mut().for_each(|z| *z *= v);
    }
    scaled * u.adjoint()
}

fn unitarity_residual(u: &DMatrix<Complex64>) -> f64 {
    let n = u.nrows();
    spectral_norm(&(u.adjoint() * u - DMatrix::<Complex64>::identity(n, n)))
}

fn sort_eigensystem(values: Vec<f64>, vectors: DMatrix<Complex64>) -> (Vec<f64>, DMatrix<Complex64>) {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    if order.iter().enumerate().all(|(k, &o)| k == o) {
        return (values, vectors);
    }
    let sorted_values = order.iter().map(|&k| values[k]).collect();
    let columns: Vec<_> = order.iter().map(|&k| vectors.column(k).into_owned()).collect();
    (sorted_values, DMatrix::from_columns(&columns))
}

pub(crate) fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> DMatrix<Complex64> {
        DMatrix::from_fn(n, n, |_, _| {
            Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        })
    }

    fn random_hermitian(rng: &mut ChaCha8Rng, n: usize) -> DMatrix<Complex64> {
        let a = random_matrix(rng, n);
        (&a + a.adjoint()) * c(0.5)
    }

    // Independent norm oracle: sqrt of the top eigenvalue of x* x.
    fn gram_norm(x: &BoundedOperator) -> f64 {
        let gram = x.matrix().adjoint() * x.matrix();
        let eig = gram.symmetric_eigen();
        eig.eigenvalues.iter().copied().fold(0.0, f64::max).sqrt()
    }

    #[test]
    fn diagonal_operator_has_identity_eigenvectors() {
        let d = make_hermitian(DMatrix::from_diagonal(&DVector::from_vec(vec![c(1.0), c(2.0)]))).unwrap();
        assert_eq!(d.eigenvalues(), &[1.0, 2.0]);
        let id = DMatrix::<Complex64>::identity(2, 2);
        for (a, b) in d.eigenvectors().iter().zip(id.iter()) {
            assert!((a.norm() - b.norm()).abs() < 1e-15);
        }
    }

    #[test]
    fn pauli_x_spectrum() {
        let x = BoundedOperator::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        let d = make_hermitian(x.into_matrix()).unwrap();
        assert!((d.eigenvalues()[0] + 1.0).abs() < 1e-15);
        assert!((d.eigenvalues()[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn random_reconstruction_and_unitarity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let m = random_hermitian(&mut rng, 8);
            let scale = spectral_norm(&m);
            let d = make_hermitian(m).unwrap();
            assert!(d.reconstruction_residual() < 1e-10 * scale);
            assert!(d.unitarity_residual() < 1e-10);
        }
    }

    #[test]
    fn rejects_non_square_and_non_hermitian() {
        let m = DMatrix::<Complex64>::zeros(2, 3);
        assert!(matches!(make_hermitian(m), Err(Error::NotSquare { rows: 2, cols: 3 })));
        let m = BoundedOperator::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        match make_hermitian(m.into_matrix()) {
            Err(Error::NotHermitian { max_asymmetry, .. }) => assert_eq!(max_asymmetry, 1.0),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn functional_calculus_on_diagonals() {
        let d = HermitianOperator::from_diagonal(&[-3.0, 2.0]).unwrap();
        let abs = d.apply_function(|t| c(t.abs())).unwrap();
        assert!(abs.max_abs_diff(&BoundedOperator::diagonal(&[c(3.0), c(2.0)])) < 1e-15);

        let d = HermitianOperator::from_diagonal(&[1.0, std::f64::consts::E]).unwrap();
        let log = d.apply_function(|t| c(t.ln())).unwrap();
        assert!(log.max_abs_diff(&BoundedOperator::diagonal(&[c(0.0), c(1.0)])) < 1e-15);
    }

    #[test]
    fn undefined_function_reports_eigenvalue() {
        let d = HermitianOperator::from_diagonal(&[0.0, 1.0]).unwrap();
        assert_eq!(
            d.apply_function(|t| c(t.ln())),
            Err(Error::FunctionUndefinedAtSpectrum { eigenvalue: 0.0 })
        );
    }

    #[test]
    fn identity_function_reproduces_operator() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let m = random_hermitian(&mut rng, 9);
            let d = make_hermitian(m.clone()).unwrap();
            let back = d.apply_function(c).unwrap();
            assert!(spectral_norm(&(back.matrix() - &m)) < 1e-10 * spectral_norm(&m));
        }
    }

    #[test]
    fn affine_composition_on_spectrum() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let d = make_hermitian(random_hermitian(&mut rng, 7)).unwrap();
        let shifted = d.map_spectrum(|t| 2.0 * t - 0.3).unwrap();
        let lhs = shifted.apply_function(|t| c(t.sin())).unwrap();
        let rhs = d.apply_function(|t| c((2.0 * t - 0.3).sin())).unwrap();
        assert!(lhs.max_abs_diff(&rhs) < 1e-12);
    }

    #[test]
    fn functional_calculus_is_basis_independent_in_degenerate_eigenspace() {
        // Two different orthonormal bases of the same eigenspace.
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let rot = DMatrix::from_row_slice(3, 3, &[c(s), c(s), c(0.0), c(-s), c(s), c(0.0), c(0.0), c(0.0), c(1.0)]);
        let a = HermitianOperator::from_eigensystem(vec![2.0, 2.0, 5.0], DMatrix::identity(3, 3)).unwrap();
        let b = HermitianOperator::from_eigensystem(vec![2.0, 2.0, 5.0], rot).unwrap();
        let fa = a.apply_function(|t| c(t.exp())).unwrap();
        let fb = b.apply_function(|t| c(t.exp())).unwrap();
        assert!(fa.max_abs_diff(&fb) < 1e-12);
    }

    #[test]
    fn commutator_examples() {
        let d = BoundedOperator::diagonal(&[c(0.0), c(5.0)]);
        let y = BoundedOperator::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        let dy = commutator(&d, &y).unwrap();
        let expected = BoundedOperator::from_real_rows(&[&[0.0, -5.0], &[0.0, 0.0]]).unwrap();
        assert_eq!(dy, expected);
        assert_eq!(commutator(&BoundedOperator::identity(2), &y).unwrap(), BoundedOperator::zeros(2));
        assert_eq!(commutator(&y, &y).unwrap(), BoundedOperator::zeros(2));
        assert!(matches!(
            commutator(&y, &BoundedOperator::zeros(3)),
            Err(Error::DimMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn iterated_commutator_examples() {
        let d = HermitianOperator::from_diagonal(&[0.0, 5.0]).unwrap();
        let y = BoundedOperator::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        assert_eq!(iterated_commutator(&d, &y, 0).unwrap(), y);
        let second = iterated_commutator(&d, &y, 2).unwrap();
        let expected = BoundedOperator::from_real_rows(&[&[0.0, 25.0], &[0.0, 0.0]]).unwrap();
        assert!(second.max_abs_diff(&expected) < 1e-14);
        let commuting = d.apply_function(|t| c(t * t + 1.0)).unwrap();
        for k in 1..4 {
            assert!(iterated_commutator(&d, &commuting, k).unwrap().norm() < 1e-12);
        }
    }

    #[test]
    fn iterated_commutator_entry_formula_for_diagonal_generator() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let diag: Vec<f64> = (0..6).map(|_| rng.random_range(-4.0..4.0)).collect();
        let d = HermitianOperator::from_diagonal(&diag).unwrap();
        let y = BoundedOperator::new(random_matrix(&mut rng, 6)).unwrap();
        for k in 0..5 {
            let got = iterated_commutator(&d, &y, k).unwrap();
            for i in 0..6 {
                for j in 0..6 {
                    let want = y.matrix()[(i, j)] * (diag[i] - diag[j]).powi(k as i32);
                    let scale = 8f64.powi(k as i32) * 2.0;
                    assert!((got.matrix()[(i, j)] - want).norm() <= 1e-12 * scale);
                }
            }
        }
    }

    #[test]
    fn operator_norm_examples() {
        assert_eq!(BoundedOperator::diagonal(&[c(-3.0), c(2.0)]).norm(), 3.0);
        let x = BoundedOperator::from_real_rows(&[&[0.0, -5.0], &[0.0, 0.0]]).unwrap();
        assert!((x.norm() - gram_norm(&x)).abs() < 1e-14);
        assert!((x.norm() - 5.0).abs() < 1e-14);
        assert_eq!(BoundedOperator::zeros(4).norm(), 0.0);
    }

    #[test]
    fn hermitian_norm_is_spectral_radius() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..20 {
            let d = make_hermitian(random_hermitian(&mut rng, 10)).unwrap();
            let r = d.spectral_radius();
            assert!((d.to_bounded().norm() - r).abs() <= 1e-10 * r);
        }
    }

    #[test]
    fn norm_matches_gram_oracle_and_is_submultiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for n in 1..12 {
            let a = BoundedOperator::new(random_matrix(&mut rng, n)).unwrap();
            let b = BoundedOperator::new(random_matrix(&mut rng, n)).unwrap();
            assert!((a.norm() - gram_norm(&a)).abs() <= 1e-10 * a.norm());
            assert!((&a * &b).norm() <= a.norm() * b.norm() * (1.0 + 1e-9));
        }
    }
}
