//! Derivatives in `L¹ + L^∞` and in `L^p`, with quadrature for the norms.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schur_commutators::functions::lp_norm_by_quadrature;
use schur_commutators::{
    check_abs_cont, check_lp, log_beta_split, lp_norm_of_derivative, random_bounded, random_hermitian, Ensemble,
    FunctionSpec,
};

fn main() -> schur_commutators::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let d = random_hermitian(&mut rng, 14, 30.0)?;
    let y = random_bounded(&mut rng, 14, Ensemble::Band);

    let arctan = FunctionSpec::arctan();
    let r = check_abs_cont(&d, &y, &arctan, arctan.split().unwrap())?;
    println!("arctan, L¹+L^∞:  {:.4} ≤ {:.4}", r.lhs, r.rhs);
    let g = FunctionSpec::log_beta(0.5)?;
    let r = check_abs_cont(&d, &y, &g, log_beta_split(0.5))?;
    println!("g_0.5, L¹+L^∞:   {:.4} ≤ {:.4}", r.lhs, r.rhs);

    for p in [1.0, 1.5, 1.9] {
        let r = check_lp(&d, &y, &arctan, p)?;
        println!("arctan, p={p}:    {:.4} ≤ {:.4}  (‖g′‖_p = {:.6})", r.lhs, r.rhs, r.params["lp_norm"]);
    }

    for beta in [0.1, 1.0, 10.0] {
        let g = FunctionSpec::log_beta(beta)?;
        let closed = lp_norm_of_derivative(&g, 1.5)?;
        let quad = lp_norm_by_quadrature(&g.derivative().unwrap(), 1.5)?;
        println!("‖g′_β‖_3/2 at β={beta}: closed form {closed:.10}, quadrature {quad:.10}");
    }
    Ok(())
}
