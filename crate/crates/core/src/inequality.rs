//! One checker per commutator inequality.
//!
//! Each checker computes the left-hand side exactly (functional calculus
//! plus a dense commutator), assembles the right-hand side from the
//! theorem's constants with `‖δ^k(y)‖ = ‖ad_D^k(y)‖`, and returns an
//! [`InequalityReport`]. The `*_steps` functions check the intermediate
//! inequalities of the underlying arguments separately.

use std::collections::BTreeMap;

use crate::binning::{build_binning, SpectralBinning};
use crate::block::{
    block_derivation, block_derivation_power, diagonal_derivation, schur_scalar_product, to_blocks, BlockMatrix,
    Derivation,
};
use crate::error::{Error, Result};
use crate::functions::{
    default_grid_for, lp_norm_of_derivative, verify_holder_bound, FunctionSpec, HolderBound, L1LinfSplit,
};
use crate::multipliers::{abs_multiplier, abs_row_bound, holder_multiplier};
use crate::operator::{
    c, commutator, derivative_norms, iterated_commutator, BoundedOperator, Complex64, HermitianOperator,
};
use crate::report::{InequalityReport, InstanceDigest, StepCheck, TheoremId, Tolerance};

/// The optimised constant `12·(5/4)^{1/3}` of the interpolated log bound.
pub fn optimized_log_constant() -> f64 {
    12.0 * (1.25f64).cbrt()
}

/// Relative kernel-detection threshold.
pub const KERNEL_TOL: f64 = 1e-12;

/// A positive generator with its kernel fixed by construction.
#[derive(Debug, Clone)]
pub struct PositiveInstance {
    operator: HermitianOperator,
    kernel: Vec<usize>,
    beta: f64,
}

impl PositiveInstance {
    /// `declared_kernel` lists the eigen-indices built as exact zeros. The
    /// numeric test `λ < 1e−12·‖D‖` must agree with it.
    pub fn new(operator: HermitianOperator, mut declared_kernel: Vec<usize>) -> Result<Self> {
        declared_kernel.sort_unstable();
        declared_kernel.dedup();
        let numeric = numeric_kernel(&operator)?;
        if numeric != declared_kernel {
            return Err(Error::AmbiguousKernel {
                numeric,
                declared: declared_kernel,
            });
        }
        Self::with_kernel(operator, declared_kernel)
    }

    /// Uses the numeric threshold alone to locate the kernel.
    pub fn from_operator(operator: HermitianOperator) -> Result<Self> {
        let kernel = numeric_kernel(&operator)?;
        Self::with_kernel(operator, kernel)
    }

    fn with_kernel(operator: HermitianOperator, kernel: Vec<usize>) -> Result<Self> {
        let beta = operator
            .eigenvalues()
            .iter()
            .enumerate()
            .filter(|(k, _)| kernel.binary_search(k).is_err())
            .map(|(_, &v)| v)
            .fold(f64::INFINITY, f64::min);
        if !beta.is_finite() {
            return Err(Error::NoPositiveSpectrum);
        }
        Ok(Self { operator, kernel, beta })
    }

    pub fn operator(&self) -> &HermitianOperator {
        &self.operator
    }

    pub fn kernel(&self) -> &[usize] {
        &self.kernel
    }

    /// Smallest positive eigenvalue.
    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn is_invertible(&self) -> bool {
        self.kernel.is_empty()
    }

    fn in_kernel(&self, k: usize) -> bool {
        self.kernel.binary_search(&k).is_ok()
    }

    /// Extended logarithm: `log λ` off the kernel, 0 on it.
    pub fn tilde_log(&self) -> Result<BoundedOperator> {
        self.operator
            .apply_indexed(|k, v| c(if self.in_kernel(k) { 0.0 } else { v.ln() }))
    }

    /// `g_β(D)` with `β` the smallest positive eigenvalue.
    pub fn g_beta(&self) -> Result<BoundedOperator> {
        let floor = self.beta.ln();
        self.operator
            .apply_indexed(|k, v| c(if self.in_kernel(k) || v < self.beta { floor } else { v.ln() }))
    }

    /// Spectral projection onto the kernel.
    pub fn kernel_projection(&self) -> Result<BoundedOperator> {
        self.operator
            .apply_indexed(|k, _| c(if self.in_kernel(k) { 1.0 } else { 0.0 }))
    }

    /// The instance for `sD`, `s > 0`.
    pub fn scaled(&self, s: f64) -> Result<Self> {
        if !(s > 0.0 && s.is_finite()) {
            return Err(Error::InvalidParameter(format!("scale must be positive, got {s}")));
        }
        let op = self.operator.map_spectrum(|v| s * v)?;
        Ok(Self {
            operator: op,
            kernel: self.kernel.clone(),
            beta: s * self.beta,
        })
    }
}

fn numeric_kernel(op: &HermitianOperator) -> Result<Vec<usize>> {
    let threshold = KERNEL_TOL * op.spectral_radius();
    if let Some(&neg) = op.eigenvalues().iter().find(|&&v| v < -threshold) {
        return Err(Error::NotPositive(neg));
    }
    Ok(op
        .eigenvalues()
        .iter()
        .enumerate()
        .filter(|(_, &v)| v <= threshold)
        .map(|(k, _)| k)
        .collect())
}

pub(crate) fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn params(pairs: &[(&str, f64)]) -> BTreeMap<String, f64> {
    pairs.iter().map(|(k, v)| ((*k).to_string(), *v)).collect()
}

fn commutator_norm(a: &BoundedOperator, y: &BoundedOperator) -> Result<f64> {
    Ok(commutator(a, y)?.norm())
}

fn function_of(d: &HermitianOperator, g: &FunctionSpec) -> Result<BoundedOperator> {
    d.apply_function(|t| g.evaluate(t))
}

fn ensure_holder(d: &HermitianOperator, g: &FunctionSpec, hb: &HolderBound) -> Result<()> {
    let check = verify_holder_bound(g, hb, &default_grid_for(d));
    if !check.pass {
        let (s, t) = check.worst_pair;
        return Err(Error::HolderBoundViolated {
            s,
            t,
            excess: check.max_excess,
        });
    }
    Ok(())
}

/// Right-hand side `2(A+B)(‖y‖ + √((n−α)/(2n−2α−1)) Σ_{k=0}^n C(n,k)‖δ^k(y)‖)`.
///
/// The `k = 0` term is kept inside the sum next to the standalone `‖y‖`.
pub fn holder_rhs(hb: &HolderBound, norms: &[f64]) -> Result<f64> {
    let n = hb.order();
    let sf = hb.sqrt_factor(n)?;
    let n = n as usize;
    if norms.len() <= n {
        return Err(Error::InvalidParameter(format!("need {} derivative norms", n + 1)));
    }
    let sum: f64 = (0..=n).map(|k| binomial(n, k) * norms[k]).sum();
    Ok(2.0 * (hb.a + hb.b) * (norms[0] + sf * sum))
}

/// `‖[g(D), y]‖` for an `(α, A, B)` Hölder bounded `g`.
pub fn check_holder(d: &HermitianOperator, y: &BoundedOperator, g: &FunctionSpec) -> Result<InequalityReport> {
    let hb = g
        .holder_bound()
        .ok_or_else(|| Error::MissingHolderBound(g.name().to_string()))?;
    ensure_holder(d, g, &hb)?;
    let n = hb.order();
    let norms = derivative_norms(d, y, n as usize)?;
    let lhs = commutator_norm(&function_of(d, g)?, y)?;
    let rhs = holder_rhs(&hb, &norms)?;
    let mut p = params(&[
        ("alpha", hb.alpha),
        ("A", hb.a),
        ("B", hb.b),
        ("n", f64::from(n)),
        ("sqrt_factor", hb.sqrt_factor(n)?),
    ]);
    for (k, v) in norms.iter().enumerate() {
        p.insert(format!("norm_delta{k}"), *v);
    }
    Ok(InequalityReport::new(TheoremId::HoldThm, p, lhs, rhs, InstanceDigest::of(d)))
}

/// `‖[g(D), y]‖ ≤ (‖ℓ‖₁ + ‖u‖_∞)(4‖y‖ + 4‖δ(y)‖ + 2‖δ²(y)‖)`.
pub fn check_abs_cont(
    d: &HermitianOperator,
    y: &BoundedOperator,
    g: &FunctionSpec,
    split: L1LinfSplit,
) -> Result<InequalityReport> {
    ensure_holder(d, g, &split.holder_bound())?;
    let norms = derivative_norms(d, y, 2)?;
    let lhs = commutator_norm(&function_of(d, g)?, y)?;
    let k = split.norm();
    let rhs = k * (4.0 * norms[0] + 4.0 * norms[1] + 2.0 * norms[2]);
    let p = params(&[
        ("ell_l1", split.ell_l1),
        ("u_linf", split.u_linf),
        ("l1_linf", k),
        ("norm_delta0", norms[0]),
        ("norm_delta1", norms[1]),
        ("norm_delta2", norms[2]),
    ]);
    Ok(InequalityReport::new(TheoremId::AbsCont, p, lhs, rhs, InstanceDigest::of(d)))
}

/// `‖[g(D), y]‖ ≤ 2‖g′‖_p((1 + 1/√(2−p))‖y‖ + (1/√(2−p))‖δ(y)‖)`.
pub fn check_lp(d: &HermitianOperator, y: &BoundedOperator, g: &FunctionSpec, p: f64) -> Result<InequalityReport> {
    if !(1.0..2.0).contains(&p) {
        return Err(Error::POutOfRange(p));
    }
    let lp = lp_norm_of_derivative(g, p)?;
    let norms = derivative_norms(d, y, 1)?;
    let lhs = commutator_norm(&function_of(d, g)?, y)?;
    let q = 1.0 / (2.0 - p).sqrt();
    let rhs = 2.0 * lp * ((1.0 + q) * norms[0] + q * norms[1]);
    let pr = params(&[
        ("p", p),
        ("lp_norm", lp),
        ("norm_delta0", norms[0]),
        ("norm_delta1", norms[1]),
    ]);
    Ok(InequalityReport::new(TheoremId::Lp, pr, lhs, rhs, InstanceDigest::of(d)))
}

fn log_params(inst: &PositiveInstance, norms: &[f64]) -> BTreeMap<String, f64> {
    params(&[
        ("beta", inst.beta()),
        ("kernel_dim", inst.kernel().len() as f64),
        ("norm_delta0", norms[0]),
        ("norm_delta1", norms[1]),
    ])
}

/// `‖[g_β(D), y]‖ ≤ β^{−1/3}(8‖y‖ + 5‖δ(y)‖)`.
pub fn check_gbeta(inst: &PositiveInstance, y: &BoundedOperator) -> Result<InequalityReport> {
    let d = inst.operator();
    let g = FunctionSpec::log_beta(inst.beta())?;
    let norms = derivative_norms(d, y, 1)?;
    let lhs = commutator_norm(&function_of(d, &g)?, y)?;
    let w = inst.beta().powf(-1.0 / 3.0);
    let rhs = w * (8.0 * norms[0] + 5.0 * norms[1]);
    Ok(InequalityReport::new(
        TheoremId::GBeta,
        log_params(inst, &norms),
        lhs,
        rhs,
        InstanceDigest::of(d),
    ))
}

/// Extended logarithm, either branch depending on the kernel.
///
/// Invertible: `β^{−1/3}(8‖y‖ + 5‖δ(y)‖)`. With a kernel:
/// `(8β^{−1/3} + |log β|)‖y‖ + 5β^{−1/3}‖[D, y]‖`. Also requires
/// `‖[E₀, y]‖ ≤ ‖y‖` and `log~(D) = g_β(D) − log β·E₀`.
pub fn check_tilde_log(inst: &PositiveInstance, y: &BoundedOperator) -> Result<InequalityReport> {
    let d = inst.operator();
    let norms = derivative_norms(d, y, 1)?;
    let tlog = inst.tilde_log()?;
    let lhs = commutator_norm(&tlog, y)?;
    let beta = inst.beta();
    let w = beta.powf(-1.0 / 3.0);
    let (id, rhs) = if inst.is_invertible() {
        (TheoremId::TildeLogInv, w * (8.0 * norms[0] + 5.0 * norms[1]))
    } else {
        (
            TheoremId::TildeLogNonInv,
            (8.0 * w + beta.ln().abs()) * norms[0] + 5.0 * w * norms[1],
        )
    };
    let e0 = inst.kernel_projection()?;
    let e0_comm = commutator_norm(&e0, y)?;
    let e0_ok = Tolerance::default().holds(e0_comm, norms[0]);
    let rebuilt = &inst.g_beta()? - &e0.scale_real(beta.ln());
    let decomposition = (&tlog - &rebuilt).norm();
    let scale = 1.0 + beta.ln().abs() + d.eigenvalues().last().map_or(0.0, |v| v.abs().ln().abs());
    let decomposition_ok = decomposition <= 1e-12 * scale;
    let mut p = log_params(inst, &norms);
    p.insert("e0_commutator".into(), e0_comm);
    p.insert("decomposition_residual".into(), decomposition);
    Ok(InequalityReport::new(id, p, lhs, rhs, InstanceDigest::of(d)).require(e0_ok && decomposition_ok))
}

/// `‖[log~(sD), y]‖` and `‖[log~(D), y]‖`, which coincide because
/// `log~(sD) = log(s)·I + log~(D)` on an invertible generator.
pub fn tilde_log_scaling_pair(inst: &PositiveInstance, y: &BoundedOperator, s: f64) -> Result<(f64, f64)> {
    if !inst.is_invertible() {
        return Err(Error::NonInvertible(inst.kernel().len()));
    }
    let base = commutator_norm(&inst.tilde_log()?, y)?;
    let scaled = commutator_norm(&inst.scaled(s)?.tilde_log()?, y)?;
    Ok((base, scaled))
}

/// `‖[log~(D), y]‖ ≤ 13 β^{−1/3}‖y‖^{2/3}‖δ(y)‖^{1/3}` for invertible `D`.
///
/// Also checks scale invariance at `s = 4` and `12·(5/4)^{1/3} ≤ 13`.
pub fn check_log_interp(inst: &PositiveInstance, y: &BoundedOperator) -> Result<InequalityReport> {
    if !inst.is_invertible() {
        return Err(Error::NonInvertible(inst.kernel().len()));
    }
    let d = inst.operator();
    let norms = derivative_norms(d, y, 1)?;
    let (lhs, scaled) = tilde_log_scaling_pair(inst, y, 4.0)?;
    let w = inst.beta().powf(-1.0 / 3.0);
    let rhs = 13.0 * w * norms[0].powf(2.0 / 3.0) * norms[1].cbrt();
    let scaling_ok = (lhs - scaled).abs() <= 1e-10 * lhs.max(scaled) + 1e-13 * norms[0];
    let constant = optimized_log_constant();
    let mut p = log_params(inst, &norms);
    p.insert("scaled_lhs".into(), scaled);
    p.insert("optimized_constant".into(), constant);
    p.insert(
        "optimized_rhs".into(),
        constant * w * norms[0].powf(2.0 / 3.0) * norms[1].cbrt(),
    );
    Ok(
        InequalityReport::new(TheoremId::LogInterp13, p, lhs, rhs, InstanceDigest::of(d))
            .require(scaling_ok && constant <= 13.0),
    )
}

fn abs_of(d: &HermitianOperator) -> Result<HermitianOperator> {
    d.map_spectrum(f64::abs)
}

/// `‖[|D|, y]‖ ≤ 4‖y‖ + 4‖δ(y)‖ + 2‖δ²(y)‖`.
pub fn check_abs_first(d: &HermitianOperator, y: &BoundedOperator) -> Result<InequalityReport> {
    let norms = derivative_norms(d, y, 2)?;
    let lhs = commutator_norm(&abs_of(d)?.to_bounded(), y)?;
    let rhs = 4.0 * norms[0] + 4.0 * norms[1] + 2.0 * norms[2];
    let p = params(&[
        ("norm_delta0", norms[0]),
        ("norm_delta1", norms[1]),
        ("norm_delta2", norms[2]),
    ]);
    Ok(InequalityReport::new(TheoremId::AbsFirst, p, lhs, rhs, InstanceDigest::of(d)))
}

/// Right-hand side `2^n(π/√3)‖y‖ + (π/√3) Σ_{l=1}^{n+1} C(n+1,l) 2^{n+1−l}‖δ^l(y)‖`.
pub fn abs_higher_rhs(n: usize, norms: &[f64]) -> f64 {
    let k = abs_row_bound();
    let head = 2f64.powi(n as i32) * k * norms[0];
    let tail: f64 = (1..=n + 1)
        .map(|l| binomial(n + 1, l) * 2f64.powi((n + 1 - l) as i32) * norms[l])
        .sum();
    head + k * tail
}

/// `‖ad_{|D|}^n(y)‖` against the first `n + 1` derivatives.
pub fn check_abs_higher(d: &HermitianOperator, y: &BoundedOperator, n: usize) -> Result<InequalityReport> {
    if n == 0 {
        return Err(Error::InvalidParameter("order n must be >= 1".into()));
    }
    let norms = derivative_norms(d, y, n + 1)?;
    let lhs = iterated_commutator(&abs_of(d)?, y, n)?.norm();
    let rhs = abs_higher_rhs(n, &norms);
    let mut p = params(&[("n", n as f64)]);
    for (k, v) in norms.iter().enumerate() {
        p.insert(format!("norm_delta{k}"), *v);
    }
    Ok(InequalityReport::new(TheoremId::AbsHigher, p, lhs, rhs, InstanceDigest::of(d)))
}

// ---------------------------------------------------------------------------
// Intermediate steps
// ---------------------------------------------------------------------------

fn unit_binning(d: &HermitianOperator) -> Result<SpectralBinning> {
    let binning = build_binning(d);
    binning.require_unit_grid()?;
    Ok(binning)
}

/// Steps behind the Hölder bound:
///
/// 1. `‖g(D) − g(D̄)‖ ≤ A + B(1/2)^α`;
/// 2. `‖[g(D) − g(D̄), y]‖ ≤ 2(A + B)‖y‖`;
/// 3. `‖d̄^n(m(y))‖ ≤ Σ C(n,k)‖δ^k(y)‖`;
/// 4. `[g(D̄), y] = S ∗ d̄^n(m(y))` (residual against `1e−10` of scale);
/// 5. `‖S ∗ d̄^n(m(y))‖ ≤ ‖S‖_r ‖d̄^n(m(y))‖`.
pub fn holder_steps(d: &HermitianOperator, y: &BoundedOperator, g: &FunctionSpec) -> Result<Vec<StepCheck>> {
    let hb = g
        .holder_bound()
        .ok_or_else(|| Error::MissingHolderBound(g.name().to_string()))?;
    let binning = unit_binning(d)?;
    let n = hb.order();
    let norms = derivative_norms(d, y, n as usize)?;
    let gd = function_of(d, g)?;
    let gdbar = function_of(binning.dbar(), g)?;
    let diff = &gd - &gdbar;
    let mut steps = vec![
        StepCheck::new("norm g(D)-g(Dbar)", diff.norm(), hb.a + hb.b * 0.5f64.powf(hb.alpha)),
        StepCheck::new(
            "commutator with g(D)-g(Dbar)",
            commutator(&diff, y)?.norm(),
            2.0 * (hb.a + hb.b) * norms[0],
        ),
    ];
    let x = to_blocks(&binning, y)?;
    let dbar_n = block_derivation_power(Derivation::DBar, &x, n as usize);
    let dbar_norm = dbar_n.norm();
    let bound: f64 = (0..=n as usize).map(|k| binomial(n as usize, k) * norms[k]).sum();
    steps.push(StepCheck::new("dbar^n estimate", dbar_norm, bound));
    let s = holder_multiplier(g, n)?;
    let product = schur_scalar_product(&s, &dbar_n);
    let direct = to_blocks(&binning, &commutator(&gdbar, y)?)?;
    let residual = product.sub(&direct)?.norm();
    let scale = (1.0 + gdbar.norm()) * y.norm();
    steps.push(StepCheck::new("schur representation residual", residual, 1e-10 * scale));
    let row = s.analytic_row_bound().expect("holder multiplier carries a bound");
    steps.push(StepCheck::new("schur row bound", product.norm(), row * dbar_norm));
    Ok(steps)
}

/// `‖f(m(y))‖ ≤ ‖y‖` where `f = [m(b), ·]`.
pub fn shift_commutator_step(d: &HermitianOperator, y: &BoundedOperator) -> Result<StepCheck> {
    let binning = unit_binning(d)?;
    let x = to_blocks(&binning, y)?;
    Ok(StepCheck::new(
        "f(x) bound",
        block_derivation(Derivation::F, &x).norm(),
        y.norm(),
    ))
}

/// `‖[E₀, y]‖ ≤ ‖y‖`.
pub fn kernel_projection_step(inst: &PositiveInstance, y: &BoundedOperator) -> Result<StepCheck> {
    let e0 = inst.kernel_projection()?;
    Ok(StepCheck::new("[E0,y] bound", commutator(&e0, y)?.norm(), y.norm()))
}

fn block_sum<'a>(terms: impl Iterator<Item = BlockMatrix<'a>>, zero: BlockMatrix<'a>) -> Result<BlockMatrix<'a>> {
    terms.into_iter().try_fold(zero, |acc, t| acc.add(&t))
}

/// `‖d̄^n(x) − Σ_k C(n,k)(−f)^{n−k} d^k(x)‖ / scale` for `x = m(y)`, with
/// `scale = (‖D‖ + 1)^n ‖y‖`.
pub fn binomial_identity_residual(d: &HermitianOperator, y: &BoundedOperator, n: usize) -> Result<f64> {
    let binning = unit_binning(d)?;
    let x = to_blocks(&binning, y)?;
    let lhs = block_derivation_power(Derivation::DBar, &x, n);
    let terms = (0..=n).map(|k| {
        let dk = block_derivation_power(Derivation::D, &x, k);
        let fk = block_derivation_power(Derivation::F, &dk, n - k);
        let sign = if (n - k).is_multiple_of(2) { 1.0 } else { -1.0 };
        fk.scale(Complex64::new(sign * binomial(n, k), 0.0))
    });
    let rhs = block_sum(terms, BlockMatrix::zero(&binning))?;
    let scale = (d.spectral_radius() + 1.0).powi(n as i32) * y.norm().max(f64::MIN_POSITIVE);
    Ok(lhs.sub(&rhs)?.norm() / scale)
}

/// `‖d_{|D̄|}^k(x) − S(k) ∗ d̄^{k+1}(x)‖ / scale` for `x = m(y)`.
pub fn abs_multiplier_identity_residual(d: &HermitianOperator, y: &BoundedOperator, k: u32) -> Result<f64> {
    let binning = unit_binning(d)?;
    let x = to_blocks(&binning, y)?;
    let abs_dbar: Vec<f64> = binning.dbar().eigenvalues().iter().map(|v| v.abs()).collect();
    let lhs = (0..k).try_fold(x.clone(), |acc, _| diagonal_derivation(&acc, &abs_dbar))?;
    let rhs = schur_scalar_product(
        &abs_multiplier(k)?,
        &block_derivation_power(Derivation::DBar, &x, k as usize + 1),
    );
    let scale = (2.0 * d.spectral_radius() + 1.0).powi(k as i32) * y.norm().max(f64::MIN_POSITIVE);
    Ok(lhs.sub(&rhs)?.norm() / scale)
}
