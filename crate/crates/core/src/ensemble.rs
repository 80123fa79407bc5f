//! Random instance generators.
//!
//! Generators take `&mut impl Rng` so callers own the stream; campaigns
//! derive one ChaCha stream per trial.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::block::ScalarMultiplier;
use crate::error::{Error, Result};
use crate::inequality::PositiveInstance;
use crate::operator::{BoundedOperator, Complex64, HermitianOperator};

fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the
/// phases of `diag(R)` moved into `Q`.
pub fn haar_unitary<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> DMatrix<Complex64> {
    let g = DMatrix::from_fn(dim, dim, |_, _| complex_gaussian(rng));
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    for k in 0..dim {
        let d = r[(k, k)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        q.column_mut(k).iter_mut().for_each(|z| *z *= phase);
    }
    q
}

/// Eigenvalues uniform on `[-radius, radius]` in a Haar basis.
pub fn random_hermitian<R: Rng + ?Sized>(rng: &mut R, dim: usize, radius: f64) -> Result<HermitianOperator> {
    if dim == 0 || !(radius > 0.0) {
        return Err(Error::InvalidParameter(format!("dim={dim}, radius={radius}")));
    }
    let values: Vec<f64> = (0..dim).map(|_| rng.random_range(-radius..=radius)).collect();
    HermitianOperator::from_eigensystem(values, haar_unitary(rng, dim))
}

/// How to draw a positive generator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PositiveSpec {
    pub dim: usize,
    pub radius: f64,
    /// Number of exact-zero eigenvalues; must leave at least one positive.
    pub kernel_dim: usize,
    /// Pin the smallest positive eigenvalue to this value.
    pub beta: Option<f64>,
}

/// Positive generator with exact zeros placed by construction.
pub fn random_positive<R: Rng + ?Sized>(rng: &mut R, spec: PositiveSpec) -> Result<PositiveInstance> {
    let PositiveSpec {
        dim,
        radius,
        kernel_dim,
        beta,
    } = spec;
    if dim == 0 || kernel_dim >= dim || !(radius > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "dim={dim}, kernel_dim={kernel_dim}, radius={radius}"
        )));
    }
    let positive = dim - kernel_dim;
    let mut values = vec![0.0; kernel_dim];
    match beta {
        Some(beta) => {
            if !(beta > 0.0 && beta.is_finite()) {
                return Err(Error::InvalidParameter(format!("beta={beta}")));
            }
            let top = radius.max(beta);
            values.push(beta);
            values.extend((1..positive).map(|_| rng.random_range(beta..=top)));
        }
        None => {
            values.extend((0..positive).map(|_| loop {
                let v = rng.random_range(0.0..radius);
                if v > 0.0 {
                    break v;
                }
            }));
        }
    }
    let op = HermitianOperator::from_eigensystem(values, haar_unitary(rng, dim))?;
    let kernel = (0..kernel_dim).collect();
    PositiveInstance::new(op, kernel)
}

/// Distribution of the bounded operator `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ensemble {
    /// Complex Gaussian entries.
    #[default]
    Dense,
    /// Complex Gaussian entries on a band `|i − j| ≤ max(1, dim/4)`.
    Band,
}

impl std::str::FromStr for Ensemble {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dense" => Ok(Ensemble::Dense),
            "band" => Ok(Ensemble::Band),
            other => Err(Error::ConfigInvalid(format!("unknown ensemble `{other}`"))),
        }
    }
}

/// A random `y` normalised to `‖y‖ = 1`.
pub fn random_bounded<R: Rng + ?Sized>(rng: &mut R, dim: usize, ensemble: Ensemble) -> BoundedOperator {
    let width = (dim / 4).max(1);
    let y = BoundedOperator::from_fn(dim, |i, j| match ensemble {
        Ensemble::Dense => complex_gaussian(rng),
        Ensemble::Band if i.abs_diff(j) <= width => complex_gaussian(rng),
        Ensemble::Band => Complex64::new(0.0, 0.0),
    });
    let norm = y.norm();
    if norm > 0.0 {
        y.scale_real(1.0 / norm)
    } else {
        BoundedOperator::identity(dim)
    }
}

/// Eigenvalues clustered in at most `max_bins` distinct unit bins with at
/// most `max_block` eigenvalues per bin, so blocks are genuine matrices.
pub fn random_clustered<R: Rng + ?Sized>(
    rng: &mut R,
    max_bins: usize,
    max_block: usize,
    radius: f64,
) -> Result<HermitianOperator> {
    let span = radius.floor() as i64;
    if max_bins == 0 || max_block == 0 || span < 0 || (2 * span + 1) < max_bins as i64 {
        return Err(Error::InvalidParameter(format!(
            "max_bins={max_bins}, max_block={max_block}, radius={radius}"
        )));
    }
    let count = rng.random_range(1..=max_bins);
    let mut centers: Vec<i64> = Vec::with_capacity(count);
    while centers.len() < count {
        let n = rng.random_range(-span..=span);
        if !centers.contains(&n) {
            centers.push(n);
        }
    }
    let mut values = Vec::new();
    for n in centers {
        let size = rng.random_range(1..=max_block);
        values.extend((0..size).map(|_| n as f64 + rng.random_range(-0.5..0.5)));
    }
    let dim = values.len();
    HermitianOperator::from_eigensystem(values, haar_unitary(rng, dim))
}

/// A multiplier with independent complex Gaussian entries on `bins × bins`
/// and zeros elsewhere.
pub fn random_multiplier<R: Rng + ?Sized>(rng: &mut R, bins: &[i64]) -> ScalarMultiplier {
    let table: BTreeMap<(i64, i64), Complex64> = bins
        .iter()
        .flat_map(|&i| bins.iter().map(move |&j| (i, j)))
        .map(|key| (key, complex_gaussian(rng)))
        .collect();
    ScalarMultiplier::new("random", move |i, j| {
        table.get(&(i, j)).copied().unwrap_or(Complex64::new(0.0, 0.0))
    })
}
