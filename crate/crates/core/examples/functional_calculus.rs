//! Hermitian operators, functional calculus and iterated commutators.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schur_commutators::{
    commutator, derivative_norms, random_bounded, random_hermitian, BoundedOperator, Complex64, Ensemble,
    HermitianOperator,
};

fn main() -> schur_commutators::Result<()> {
    let d = HermitianOperator::from_diagonal(&[-5.0, 5.0])?;
    let raising = BoundedOperator::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]])?;
    let abs_d = d.apply_function(|t| Complex64::new(t.abs(), 0.0))?;
    println!("|D| = 5·I, so ‖[|D|, y]‖ = {}", commutator(&abs_d, &raising)?.norm());
    println!("‖[D, y]‖ = {}", commutator(&d.to_bounded(), &raising)?.norm());

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let d = random_hermitian(&mut rng, 12, 20.0)?;
    let y = random_bounded(&mut rng, 12, Ensemble::Dense);
    println!("spectrum of a random D: {:?}", d.spectral_range());
    for (k, n) in derivative_norms(&d, &y, 4)?.iter().enumerate() {
        println!("  ‖ad_D^{k}(y)‖ = {n:.4}");
    }
    Ok(())
}
