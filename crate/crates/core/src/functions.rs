//! Borel functions with the regularity data the commutator bounds need:
//! Hölder-boundedness constants, `L¹ + L^∞` splits of the derivative, and
//! `L^p` norms of the derivative.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::operator::{Complex64, HermitianOperator};
use crate::quadrature::integrate;

pub type RealToComplex = Arc<dyn Fn(f64) -> Complex64 + Send + Sync>;
type LpClosedForm = Arc<dyn Fn(f64) -> Result<f64> + Send + Sync>;

/// Absolute tolerance for derivative-norm quadrature.
pub const QUADRATURE_TOL: f64 = 1e-8;

/// `|g(s) − g(t)| ≤ A + B|s − t|^α` for all real `s, t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HolderBound {
    pub alpha: f64,
    pub a: f64,
    pub b: f64,
}

impl HolderBound {
    pub fn new(alpha: f64, a: f64, b: f64) -> Result<Self> {
        let ok = alpha > 0.0 && alpha.is_finite() && a >= 0.0 && a.is_finite() && b >= 0.0 && b.is_finite();
        if !ok {
            return Err(Error::InvalidHolderBound { alpha, a, b });
        }
        Ok(Self { alpha, a, b })
    }

    pub fn bound(&self, gap: f64) -> f64 {
        self.a + self.b * gap.abs().powf(self.alpha)
    }

    /// The least integer `n` with `n > α + 1/2`.
    pub fn order(&self) -> u32 {
        smallest_order(self.alpha)
    }

    /// `√((n − α)/(2n − 2α − 1))`.
    pub fn sqrt_factor(&self, n: u32) -> Result<f64> {
        let threshold = self.alpha + 0.5;
        if f64::from(n) <= threshold {
            return Err(Error::BoundInapplicable { n, threshold });
        }
        let n = f64::from(n);
        Ok(((n - self.alpha) / (2.0 * n - 2.0 * self.alpha - 1.0)).sqrt())
    }

    /// Row-norm bound `2(A + B)√((n − α)/(2n − 2α − 1))` for the difference
    /// quotient multiplier of order `n`.
    pub fn row_norm_factor(&self, n: u32) -> Result<f64> {
        Ok(2.0 * (self.a + self.b) * self.sqrt_factor(n)?)
    }
}

pub fn smallest_order(alpha: f64) -> u32 {
    (alpha + 0.5).floor() as u32 + 1
}

/// A concrete decomposition `g′ = ℓ + u` with `ℓ ∈ L¹`, `u ∈ L^∞`,
/// recorded by its two norms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct L1LinfSplit {
    pub ell_l1: f64,
    pub u_linf: f64,
}

impl L1LinfSplit {
    pub fn new(ell_l1: f64, u_linf: f64) -> Result<Self> {
        if !(ell_l1 >= 0.0 && u_linf >= 0.0 && ell_l1.is_finite() && u_linf.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "split norms must be finite and nonnegative: ({ell_l1}, {u_linf})"
            )));
        }
        Ok(Self { ell_l1, u_linf })
    }

    /// Upper bound for `‖g′‖_{L¹+L^∞}`.
    pub fn norm(&self) -> f64 {
        l1_linf_norm(self.ell_l1, self.u_linf)
    }

    /// The Hölder bound `(1, ‖ℓ‖₁, ‖u‖_∞)` implied by the split.
    pub fn holder_bound(&self) -> HolderBound {
        HolderBound {
            alpha: 1.0,
            a: self.ell_l1,
            b: self.u_linf,
        }
    }
}

/// `‖ℓ‖₁ + ‖u‖_∞` for a supplied decomposition.
pub fn l1_linf_norm(ell_l1: f64, u_linf: f64) -> f64 {
    ell_l1 + u_linf
}

/// Split of `g_β′ = 1/t · 1_{[β,∞)}` at `t = max(β, 1)`.
pub fn log_beta_split(beta: f64) -> L1LinfSplit {
    let cut = beta.max(1.0);
    L1LinfSplit {
        ell_l1: (cut / beta).ln(),
        u_linf: 1.0 / cut,
    }
}

#[derive(Clone)]
pub struct Derivative {
    eval: RealToComplex,
    support: (f64, f64),
    split: Option<L1LinfSplit>,
    lp_closed_form: Option<LpClosedForm>,
}

impl Derivative {
    pub fn new(
        eval: impl Fn(f64) -> Complex64 + Send + Sync + 'static,
        support: (f64, f64),
        split: Option<L1LinfSplit>,
    ) -> Self {
        Self {
            eval: Arc::new(eval),
            support,
            split,
            lp_closed_form: None,
        }
    }

    pub fn evaluate(&self, t: f64) -> Complex64 {
        (self.eval)(t)
    }

    pub fn support(&self) -> (f64, f64) {
        self.support
    }

    pub fn split(&self) -> Option<L1LinfSplit> {
        self.split
    }

    fn with_lp(mut self, f: impl Fn(f64) -> Result<f64> + Send + Sync + 'static) -> Self {
        self.lp_closed_form = Some(Arc::new(f));
        self
    }
}

#[derive(Clone)]
pub enum FunctionKind {
    AbsValue,
    TildeLog,
    LogBeta { beta: f64 },
    HolderSample { bound: HolderBound },
    AbsContinuous(Derivative),
    /// An evaluator with no regularity metadata.
    Custom,
}

/// A complex Borel function on ℝ with whatever regularity data it carries.
#[derive(Clone)]
pub struct FunctionSpec {
    name: String,
    kind: FunctionKind,
    eval: RealToComplex,
}

impl fmt::Debug for FunctionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FunctionSpec")
            .field("name", &self.name)
            .field("holder_bound", &self.holder_bound())
            .finish()
    }
}

fn real(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

impl FunctionSpec {
    pub fn abs_value() -> Self {
        Self {
            name: "abs".into(),
            kind: FunctionKind::AbsValue,
            eval: Arc::new(|t: f64| real(t.abs())),
        }
    }

    /// `log t` for `t > 0`, `0` otherwise.
    pub fn tilde_log() -> Self {
        Self {
            name: "tilde_log".into(),
            kind: FunctionKind::TildeLog,
            eval: Arc::new(|t: f64| real(if t > 0.0 { t.ln() } else { 0.0 })),
        }
    }

    /// `log t` for `t ≥ β`, `log β` below.
    pub fn log_beta(beta: f64) -> Result<Self> {
        if !(beta > 0.0 && beta.is_finite()) {
            return Err(Error::InvalidParameter(format!("beta must be positive, got {beta}")));
        }
        let floor = beta.ln();
        Ok(Self {
            name: format!("log_beta({beta})"),
            kind: FunctionKind::LogBeta { beta },
            eval: Arc::new(move |t: f64| real(if t >= beta { t.ln() } else { floor })),
        })
    }

    /// An evaluator with a declared Hölder bound.
    pub fn holder_sample(
        name: impl Into<String>,
        eval: impl Fn(f64) -> Complex64 + Send + Sync + 'static,
        bound: HolderBound,
    ) -> Self {
        Self {
            name: name.into(),
            kind: FunctionKind::HolderSample { bound },
            eval: Arc::new(eval),
        }
    }

    /// `B|t − s|^α + (A/2)·sign(t − s)` with `0 < α ≤ 1`; it is
    /// `(α, A, B)` Hölder bounded.
    pub fn power_step(alpha: f64, a: f64, b: f64, shift: f64) -> Result<Self> {
        let bound = HolderBound::new(alpha, a, b)?;
        if alpha > 1.0 {
            return Err(Error::InvalidParameter(format!(
                "power_step needs alpha <= 1, got {alpha}"
            )));
        }
        Ok(Self::holder_sample(
            format!("power_step({alpha},{a},{b},{shift})"),
            move |t: f64| {
                let x = t - shift;
                let step = if x > 0.0 {
                    0.5 * a
                } else if x < 0.0 {
                    -0.5 * a
                } else {
                    0.0
                };
                real(b * x.abs().powf(alpha) + step)
            },
            bound,
        ))
    }

    /// `M cos(ωt)`, which is `(α, 2M, 0)` Hölder bounded for every `α`.
    pub fn bounded_cosine(amplitude: f64, freq: f64, alpha: f64) -> Result<Self> {
        let m = amplitude.abs();
        Ok(Self::holder_sample(
            format!("bounded_cosine({amplitude},{freq})"),
            move |t: f64| real(amplitude * (freq * t).cos()),
            HolderBound::new(alpha, 2.0 * m, 0.0)?,
        ))
    }

    pub fn abs_continuous(
        name: impl Into<String>,
        eval: impl Fn(f64) -> Complex64 + Send + Sync + 'static,
        derivative: Derivative,
    ) -> Self {
        Self {
            name: name.into(),
            kind: FunctionKind::AbsContinuous(derivative),
            eval: Arc::new(eval),
        }
    }

    /// `arctan t`: derivative `1/(1 + t²)`, bounded by 1 and in every `L^p`.
    pub fn arctan() -> Self {
        let derivative = Derivative::new(
            |t: f64| real(1.0 / (1.0 + t * t)),
            (f64::NEG_INFINITY, f64::INFINITY),
            Some(L1LinfSplit {
                ell_l1: 0.0,
                u_linf: 1.0,
            }),
        )
        .with_lp(arctan_derivative_lp);
        Self::abs_continuous("arctan", |t: f64| real(t.atan()), derivative)
    }

    /// `e^{it}`: derivative of modulus one, not in any `L^p`.
    pub fn phase() -> Self {
        let derivative = Derivative::new(
            |t: f64| Complex64::new(0.0, 1.0) * Complex64::from_polar(1.0, t),
            (f64::NEG_INFINITY, f64::INFINITY),
            Some(L1LinfSplit {
                ell_l1: 0.0,
                u_linf: 1.0,
            }),
        )
        .with_lp(|_| Err(Error::NonIntegrable("|d/dt e^{it}| = 1 on all of R".into())));
        Self::abs_continuous("phase", |t: f64| Complex64::from_polar(1.0, t), derivative)
    }

    /// `sin(ωt)`.
    pub fn sine(freq: f64) -> Self {
        let derivative = Derivative::new(
            move |t: f64| real(freq * (freq * t).cos()),
            (f64::NEG_INFINITY, f64::INFINITY),
            Some(L1LinfSplit {
                ell_l1: 0.0,
                u_linf: freq.abs(),
            }),
        )
        .with_lp(|_| Err(Error::NonIntegrable("periodic derivative".into())));
        Self::abs_continuous(format!("sine({freq})"), move |t: f64| real((freq * t).sin()), derivative)
    }

    pub fn constant(value: Complex64) -> Self {
        let derivative = Derivative::new(
            |_| real(0.0),
            (0.0, 0.0),
            Some(L1LinfSplit {
                ell_l1: 0.0,
                u_linf: 0.0,
            }),
        );
        Self::abs_continuous("constant", move |_| value, derivative)
    }

    pub fn custom(name: impl Into<String>, eval: impl Fn(f64) -> Complex64 + Send + Sync + 'static) -> Self {
        Self {
            name: name.into(),
            kind: FunctionKind::Custom,
            eval: Arc::new(eval),
        }
    }

    pub fn square() -> Self {
        Self::custom("square", |t: f64| real(t * t))
    }

    pub fn identity() -> Self {
        Self::custom("identity", real)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &FunctionKind {
        &self.kind
    }

    pub fn evaluate(&self, t: f64) -> Complex64 {
        (self.eval)(t)
    }

    /// The evaluator as a shareable closure.
    pub fn evaluator(&self) -> RealToComplex {
        Arc::clone(&self.eval)
    }

    /// `L¹ + L^∞` split of the derivative, when one is known.
    pub fn split(&self) -> Option<L1LinfSplit> {
        match &self.kind {
            FunctionKind::AbsValue => Some(L1LinfSplit {
                ell_l1: 0.0,
                u_linf: 1.0,
            }),
            FunctionKind::LogBeta { beta } => Some(log_beta_split(*beta)),
            FunctionKind::AbsContinuous(d) => d.split(),
            _ => None,
        }
    }

    /// The Hölder bound this function is known to satisfy.
    pub fn holder_bound(&self) -> Option<HolderBound> {
        match &self.kind {
            FunctionKind::AbsValue => Some(HolderBound {
                alpha: 1.0,
                a: 0.0,
                b: 1.0,
            }),
            FunctionKind::HolderSample { bound } => Some(*bound),
            FunctionKind::LogBeta { .. } | FunctionKind::AbsContinuous(_) => {
                self.split().map(|s| s.holder_bound())
            }
            FunctionKind::TildeLog | FunctionKind::Custom => None,
        }
    }

    /// Derivative evaluator and its support, for absolutely continuous kinds.
    pub fn derivative(&self) -> Option<Derivative> {
        match &self.kind {
            FunctionKind::AbsContinuous(d) => Some(d.clone()),
            FunctionKind::LogBeta { beta } => {
                let beta = *beta;
                Some(Derivative::new(
                    move |t: f64| real(if t >= beta { 1.0 / t } else { 0.0 }),
                    (beta, f64::INFINITY),
                    Some(log_beta_split(beta)),
                ))
            }
            _ => None,
        }
    }
}

/// `(√π Γ(p − 1/2)/Γ(p))^{1/p}` = `‖1/(1+t²)‖_p`.
fn arctan_derivative_lp(p: f64) -> Result<f64> {
    let log_integral = 0.5 * std::f64::consts::PI.ln() + ln_gamma(p - 0.5) - ln_gamma(p);
    Ok((log_integral / p).exp())
}

/// `‖g′‖_p`: closed form for builtins, adaptive quadrature otherwise.
pub fn lp_norm_of_derivative(g: &FunctionSpec, p: f64) -> Result<f64> {
    check_exponent(p)?;
    match &g.kind {
        FunctionKind::LogBeta { beta } => {
            if p == 1.0 {
                return Err(Error::NonIntegrable("1/t is not integrable at infinity".into()));
            }
            Ok((beta.powf(1.0 - p) / (p - 1.0)).powf(1.0 / p))
        }
        FunctionKind::AbsContinuous(d) => match &d.lp_closed_form {
            Some(closed) => closed(p),
            None => lp_norm_by_quadrature(d, p),
        },
        _ => Err(Error::NotAbsContinuous(g.name.clone())),
    }
}

/// `(∫ |g′|^p)^{1/p}` by adaptive quadrature over the declared support.
pub fn lp_norm_by_quadrature(d: &Derivative, p: f64) -> Result<f64> {
    check_exponent(p)?;
    let (lo, hi) = d.support;
    let q = integrate(|t| d.evaluate(t).norm().powf(p), lo, hi, QUADRATURE_TOL, 0.0)?;
    Ok(q.value.max(0.0).powf(1.0 / p))
}

/// The split of `g′` at `|g′| = 1`: `ℓ = g′·1_{|g′|>1}` and `u` the rest,
/// so `‖ℓ‖₁ + ‖u‖_∞ ≤ ‖g′‖_p^p + 1`.
pub fn cutoff_split(g: &FunctionSpec) -> Result<L1LinfSplit> {
    let d = g.derivative().ok_or_else(|| Error::NotAbsContinuous(g.name.clone()))?;
    let (lo, hi) = d.support;
    let q = integrate(
        |t| {
            let v = d.evaluate(t).norm();
            if v > 1.0 {
                v
            } else {
                0.0
            }
        },
        lo,
        hi,
        QUADRATURE_TOL,
        0.0,
    )?;
    L1LinfSplit::new(q.value.max(0.0), 1.0)
}

fn check_exponent(p: f64) -> Result<()> {
    if !(p >= 1.0 && p.is_finite()) {
        return Err(Error::InvalidParameter(format!("exponent p must be >= 1, got {p}")));
    }
    Ok(())
}

/// Outcome of checking a Hölder bound on a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HolderCheck {
    pub pass: bool,
    /// Pair with the largest `|g(s) − g(t)| − (A + B|s − t|^α)`.
    pub worst_pair: (f64, f64),
    pub max_excess: f64,
}

/// Checks `|g(s) − g(t)| ≤ A + B|s − t|^α` over all grid pairs.
pub fn verify_holder_bound(g: &FunctionSpec, hb: &HolderBound, grid: &[f64]) -> HolderCheck {
    let values: Vec<Complex64> = grid.iter().map(|&t| g.evaluate(t)).collect();
    let mut worst = HolderCheck {
        pass: true,
        worst_pair: (f64::NAN, f64::NAN),
        max_excess: f64::NEG_INFINITY,
    };
    for (i, &s) in grid.iter().enumerate() {
        for (j, &t) in grid.iter().enumerate().skip(i + 1) {
            let bound = hb.bound(s - t);
            let excess = (values[i] - values[j]).norm() - bound;
            if excess > worst.max_excess {
                worst.max_excess = excess;
                worst.worst_pair = (s, t);
            }
            if !(excess <= 1e-12 * (1.0 + bound)) {
                worst.pass = false;
            }
        }
    }
    worst
}

/// 512 evenly spaced points on `[lo − 1, hi + 1]` plus every integer there.
pub fn default_grid(lo: f64, hi: f64) -> Vec<f64> {
    let (a, b) = (lo - 1.0, hi + 1.0);
    let mut grid: Vec<f64> = (0..512).map(|k| a + (b - a) * k as f64 / 511.0).collect();
    let mut n = a.ceil();
    while n <= b {
        grid.push(n);
        n += 1.0;
    }
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    grid
}

/// Grid covering the spectra of `D` and its unit-grid approximant.
pub fn default_grid_for(d: &HermitianOperator) -> Vec<f64> {
    let (lo, hi) = d.spectral_range();
    default_grid(lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_values() {
        let g = FunctionSpec::log_beta(1.0).unwrap();
        let v = lp_norm_of_derivative(&g, 1.5).unwrap();
        assert!((v - 2f64.powf(2.0 / 3.0)).abs() < 1e-15);
        let g8 = FunctionSpec::log_beta(8.0).unwrap();
        let v8 = lp_norm_of_derivative(&g8, 1.5).unwrap();
        assert!((v8 - 2f64.powf(-1.0 / 3.0)).abs() < 1e-15);
        let zero = lp_norm_of_derivative(&FunctionSpec::constant(real(3.0)), 1.5).unwrap();
        assert_eq!(zero, 0.0);
        let atan1 = lp_norm_of_derivative(&FunctionSpec::arctan(), 1.0).unwrap();
        assert!((atan1 - std::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn log_beta_shapes() {
        let g = FunctionSpec::log_beta(2.0).unwrap();
        assert_eq!(g.evaluate(1.0), real(2f64.ln()));
        assert_eq!(g.evaluate(-5.0), real(2f64.ln()));
        assert_eq!(g.evaluate(4.0), real(4f64.ln()));
        assert!(FunctionSpec::log_beta(0.0).is_err());
        let t = FunctionSpec::tilde_log();
        assert_eq!(t.evaluate(0.0), real(0.0));
        assert_eq!(t.evaluate(-1.0), real(0.0));
        assert_eq!(t.evaluate(std::f64::consts::E), real(1.0));
    }

    #[test]
    fn lp_errors() {
        let g = FunctionSpec::log_beta(1.0).unwrap();
        assert!(matches!(lp_norm_of_derivative(&g, 1.0), Err(Error::NonIntegrable(_))));
        assert!(matches!(lp_norm_of_derivative(&g, 0.5), Err(Error::InvalidParameter(_))));
        assert!(matches!(
            lp_norm_of_derivative(&FunctionSpec::abs_value(), 1.5),
            Err(Error::NotAbsContinuous(_))
        ));
        assert!(lp_norm_of_derivative(&FunctionSpec::phase(), 1.5).is_err());
        // Quadrature path reports divergence.
        let flat = Derivative::new(|_| real(1.0), (0.0, f64::INFINITY), None);
        assert!(matches!(lp_norm_by_quadrature(&flat, 1.5), Err(Error::NonIntegrable(_))));
    }

    #[test]
    fn quadrature_path_matches_closed_forms() {
        for beta in [0.1, 1.0, 10.0] {
            let g = FunctionSpec::log_beta(beta).unwrap();
            let closed = lp_norm_of_derivative(&g, 1.5).unwrap();
            let quad = lp_norm_by_quadrature(&g.derivative().unwrap(), 1.5).unwrap();
            assert!((quad - closed).abs() <= 1e-6 * closed, "beta {beta}");
        }
        let atan = FunctionSpec::arctan();
        for p in [1.0, 1.5, 1.9] {
            let closed = lp_norm_of_derivative(&atan, p).unwrap();
            let quad = lp_norm_by_quadrature(&atan.derivative().unwrap(), p).unwrap();
            assert!((quad - closed).abs() <= 1e-7 * closed, "p {p}");
        }
    }

    #[test]
    fn splits() {
        assert_eq!(l1_linf_norm(0.0, 3.0), 3.0);
        // β < 1: ℓ = 1/t on [β, 1), u = 1/t on [1, ∞).
        let s = log_beta_split(0.125);
        assert!((s.ell_l1 - 8f64.ln()).abs() < 1e-15);
        assert_eq!(s.u_linf, 1.0);
        let s = log_beta_split(4.0);
        assert_eq!(s.ell_l1, 0.0);
        assert_eq!(s.u_linf, 0.25);
        for (beta, p) in [(0.1, 1.5), (0.5, 1.2), (2.0, 1.9)] {
            let g = FunctionSpec::log_beta(beta).unwrap();
            let cut = cutoff_split(&g).unwrap();
            let lp = lp_norm_of_derivative(&g, p).unwrap();
            assert!(cut.norm() <= lp.powf(p) + 1.0 + 1e-8);
            assert!((cut.ell_l1 - (1.0 / beta).ln().max(0.0)).abs() < 1e-7);
        }
    }

    #[test]
    fn holder_verification() {
        let grid = default_grid(-20.0, 20.0);
        let abs = FunctionSpec::abs_value();
        assert!(verify_holder_bound(&abs, &abs.holder_bound().unwrap(), &grid).pass);

        let cosine = FunctionSpec::bounded_cosine(3.0, 2.0, 0.3).unwrap();
        assert!(verify_holder_bound(&cosine, &cosine.holder_bound().unwrap(), &grid).pass);

        let sq = FunctionSpec::square();
        let check = verify_holder_bound(&sq, &HolderBound::new(1.0, 0.0, 1.0).unwrap(), &[0.0, 10.0]);
        assert!(!check.pass);
        assert_eq!(check.worst_pair, (0.0, 10.0));
        assert!((check.max_excess - 90.0).abs() < 1e-12);

        for beta in [0.125, 1.0, 8.0] {
            let g = FunctionSpec::log_beta(beta).unwrap();
            assert!(verify_holder_bound(&g, &g.holder_bound().unwrap(), &grid).pass);
        }
        for (alpha, a, b) in [(1.0, 0.0, 1.0), (0.5, 1.0, 1.0), (0.25, 0.0, 2.0)] {
            let g = FunctionSpec::power_step(alpha, a, b, 0.7).unwrap();
            assert!(verify_holder_bound(&g, &g.holder_bound().unwrap(), &grid).pass);
        }
    }

    #[test]
    fn order_and_factors() {
        assert_eq!(smallest_order(1.0), 2);
        assert_eq!(smallest_order(0.5), 2);
        assert_eq!(smallest_order(0.25), 1);
        assert_eq!(smallest_order(0.49), 1);
        let hb = HolderBound::new(1.0, 0.0, 1.0).unwrap();
        assert_eq!(hb.row_norm_factor(2).unwrap(), 2.0);
        let hb = HolderBound::new(0.25, 1.0, 1.0).unwrap();
        assert!((hb.row_norm_factor(1).unwrap() - 4.0 * 1.5f64.sqrt()).abs() < 1e-15);
        assert!(matches!(
            HolderBound::new(1.0, 0.0, 1.0).unwrap().row_norm_factor(1),
            Err(Error::BoundInapplicable { n: 1, .. })
        ));
        assert!(HolderBound::new(0.0, 1.0, 1.0).is_err());
        assert!(HolderBound::new(1.0, -1.0, 1.0).is_err());
    }

    #[test]
    fn grid_contains_integers() {
        let grid = default_grid(-2.3, 1.4);
        for n in -3..=2 {
            assert!(grid.contains(&(n as f64)));
        }
        assert!(grid.len() >= 512);
    }
}
