//! The two concrete multiplier families used by the commutator bounds.

use std::f64::consts::PI;

use crate::block::ScalarMultiplier;
use crate::error::{Error, Result};
use crate::functions::FunctionSpec;
use crate::operator::Complex64;

/// Row-norm bound `π/√3` of the `|t|` multipliers.
pub fn abs_row_bound() -> f64 {
    PI / 3f64.sqrt()
}

/// `S_ij = (g(i) − g(j))/(i − j)^n` off the diagonal, zero on it.
///
/// Carries the analytic row bound `2(A + B)√((n − α)/(2n − 2α − 1))` when
/// `g` has a Hölder bound; fails if that series diverges for this `n`.
pub fn holder_multiplier(g: &FunctionSpec, n: u32) -> Result<ScalarMultiplier> {
    if n == 0 {
        return Err(Error::InvalidParameter("multiplier order must be positive".into()));
    }
    let bound = match g.holder_bound() {
        Some(hb) => Some(hb.row_norm_factor(n)?),
        None => None,
    };
    let eval = g.evaluator();
    let power = n as i32;
    let s = ScalarMultiplier::new(format!("holder[{}; n={n}]", g.name()), move |i, j| {
        if i == j {
            Complex64::new(0.0, 0.0)
        } else {
            (eval(i as f64) - eval(j as f64)) / ((i - j) as f64).powi(power)
        }
    });
    Ok(match bound {
        Some(b) => s.with_row_bound(b),
        None => s,
    })
}

/// `S(k)_ij = (|i| − |j|)^k/(i − j)^{k+1}` off the diagonal, with row bound
/// `π/√3`.
pub fn abs_multiplier(k: u32) -> Result<ScalarMultiplier> {
    if k == 0 {
        return Err(Error::InvalidParameter("abs multiplier order must be >= 1".into()));
    }
    let k = k as i32;
    Ok(ScalarMultiplier::new(format!("abs[k={k}]"), move |i, j| {
        if i == j {
            Complex64::new(0.0, 0.0)
        } else {
            let num = (i.abs() - j.abs()) as f64;
            let den = (i - j) as f64;
            Complex64::new(num.powi(k) / den.powi(k + 1), 0.0)
        }
    })
    .with_row_bound(abs_row_bound()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block::row_norm;
    use crate::functions::HolderBound;

    #[test]
    fn abs_value_second_order() {
        let s = holder_multiplier(&FunctionSpec::abs_value(), 2).unwrap();
        assert_eq!(s.analytic_row_bound(), Some(2.0));
        assert_eq!(s.entry(3, 1).re, 2.0 / 4.0);
        assert_eq!(s.entry(2, -2).re, 0.0);
        assert_eq!(s.entry(5, 5).re, 0.0);
    }

    #[test]
    fn identity_has_constant_off_diagonal() {
        let s = holder_multiplier(&FunctionSpec::identity(), 1).unwrap();
        assert_eq!(s.analytic_row_bound(), None);
        for (i, j) in [(1, 0), (-4, 7), (10, 3)] {
            assert_eq!(s.entry(i, j), Complex64::new(1.0, 0.0));
        }
        assert_eq!(s.entry(2, 2), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn declared_bound_with_too_small_order() {
        let g = FunctionSpec::abs_value();
        assert!(matches!(holder_multiplier(&g, 1), Err(Error::BoundInapplicable { n: 1, .. })));
        let g = FunctionSpec::holder_sample("quarter", |t: f64| Complex64::new(t.abs().powf(0.25), 0.0),
            HolderBound::new(0.25, 1.0, 1.0).unwrap());
        let s = holder_multiplier(&g, 1).unwrap();
        assert!((s.analytic_row_bound().unwrap() - 4.0 * 1.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn abs_multiplier_entries() {
        let s = abs_multiplier(1).unwrap();
        assert_eq!(s.entry(2, 1).re, 1.0);
        assert_eq!(s.entry(1, -1).re, 0.0);
        assert_eq!(s.entry(0, 0).re, 0.0);
        assert!(abs_multiplier(0).is_err());
        for k in 1..5 {
            let s = abs_multiplier(k).unwrap();
            for i in -12..12 {
                for j in -12..12 {
                    if i != j {
                        assert!(s.entry(i, j).norm() <= 1.0 / (i - j).abs() as f64 + 1e-15);
                    }
                }
            }
        }
    }

    #[test]
    fn windowed_row_norms_respect_bounds() {
        let window: Vec<i64> = (-60..=60).collect();
        let s = abs_multiplier(2).unwrap();
        assert!(row_norm(&s, &window).unwrap() <= abs_row_bound());
        let s = holder_multiplier(&FunctionSpec::abs_value(), 2).unwrap();
        assert!(row_norm(&s, &window).unwrap() <= 2.0);
    }
}
