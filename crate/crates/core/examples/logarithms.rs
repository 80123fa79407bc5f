//! Clamped and extended logarithms of positive generators.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schur_commutators::inequality::tilde_log_scaling_pair;
use schur_commutators::{
    check_gbeta, check_log_interp, check_tilde_log, random_bounded, random_positive, Ensemble, PositiveSpec,
};

fn main() -> schur_commutators::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let spec = PositiveSpec {
        dim: 12,
        radius: 30.0,
        kernel_dim: 0,
        beta: Some(0.125),
    };
    let inst = random_positive(&mut rng, spec)?;
    let y = random_bounded(&mut rng, 12, Ensemble::Dense);
    for r in [check_gbeta(&inst, &y)?, check_tilde_log(&inst, &y)?, check_log_interp(&inst, &y)?] {
        println!("{:<14} {:.4} ≤ {:.4}  slack {:.4}", r.theorem_id.name(), r.lhs, r.rhs, r.slack_ratio);
    }
    let (a, b) = tilde_log_scaling_pair(&inst, &y, 4.0)?;
    println!("scale invariance: ‖[log~(D), y]‖ = {a:.12}, ‖[log~(4D), y]‖ = {b:.12}");

    let with_kernel = random_positive(
        &mut rng,
        PositiveSpec {
            kernel_dim: 3,
            beta: None,
            ..spec
        },
    )?;
    let r = check_tilde_log(&with_kernel, &y)?;
    println!(
        "{} with kernel {:?}: {:.4} ≤ {:.4}, ‖[E₀, y]‖ = {:.4}",
        r.theorem_id.name(),
        with_kernel.kernel(),
        r.lhs,
        r.rhs,
        r.params["e0_commutator"]
    );
    println!("interpolated bound on a kernel: {:?}", check_log_interp(&with_kernel, &y).err());
    Ok(())
}
