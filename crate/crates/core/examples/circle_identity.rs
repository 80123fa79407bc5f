//! On `D = diag(−M..M)` the commutator `[g(D), y]` is exactly a Schur product.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schur_commutators::{
    derivation_as_schur, exact_schur_identity, random_bounded, CircleModel, Ensemble, FunctionSpec,
};

fn main() -> schur_commutators::Result<()> {
    let model = CircleModel::new(16)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let y = random_bounded(&mut rng, model.dim(), Ensemble::Dense);
    for g in [
        FunctionSpec::abs_value(),
        FunctionSpec::square(),
        FunctionSpec::phase(),
        FunctionSpec::identity(),
    ] {
        let r = exact_schur_identity(&model, &g, &y)?;
        println!("{:>8}: residual {:.2e} (threshold {:.2e})", g.name(), r.residual, r.threshold);
    }
    let r = derivation_as_schur(&model, &y)?;
    println!("[D, y] = (i − j) ∗ y: residual {:.2e}", r.residual);
    Ok(())
}
