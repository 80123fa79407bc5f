//! Hölder-bounded functions: the main bound and the steps behind it.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schur_commutators::inequality::holder_steps;
use schur_commutators::{check_holder, random_bounded, random_hermitian, Ensemble, FunctionSpec};

fn main() -> schur_commutators::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let d = random_hermitian(&mut rng, 16, 25.0)?;
    let y = random_bounded(&mut rng, 16, Ensemble::Dense);

    for g in [
        FunctionSpec::abs_value(),
        FunctionSpec::power_step(0.5, 1.0, 1.0, 2.0)?,
        FunctionSpec::power_step(0.25, 0.0, 2.0, -3.0)?,
        FunctionSpec::bounded_cosine(1.0, 3.0, 0.6)?,
    ] {
        let r = check_holder(&d, &y, &g)?;
        println!(
            "{:<28} n={} lhs {:.4} rhs {:.4} slack {:.4} pass {}",
            g.name(),
            r.params["n"],
            r.lhs,
            r.rhs,
            r.slack_ratio,
            r.pass
        );
        for step in holder_steps(&d, &y, &g)? {
            println!("    {:<32} {:.3e} ≤ {:.3e}", step.label, step.lhs, step.rhs);
        }
    }
    // t² has no declared bound, so the checker refuses it.
    println!("square: {:?}", check_holder(&d, &y, &FunctionSpec::square()).err());
    Ok(())
}
