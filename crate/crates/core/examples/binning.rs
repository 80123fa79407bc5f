//! Unit-grid spectral binning: bins, `D̄`, `b = D − D̄` and `c = |D| − |D̄|`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schur_commutators::{build_binning, random_hermitian, HermitianOperator, SpectralBinning};

fn show(label: &str, bins: &SpectralBinning) {
    println!("{label}");
    for (n, members) in bins.bins() {
        println!("  bin {n:>3}: {} eigenvalue(s)", members.len());
    }
    println!("  ‖b‖ = {:.6}, ‖c‖ = {:.6}", bins.b().norm(), bins.c().norm());
}

fn main() -> schur_commutators::Result<()> {
    let d = HermitianOperator::from_diagonal(&[0.4, 0.6, 2.5])?;
    show("diag(0.4, 0.6, 2.5)", &build_binning(&d));

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let d = random_hermitian(&mut rng, 10, 6.0)?;
    let bins = build_binning(&d);
    show("random D, spectrum in [-6, 6]", &bins);
    let recon = (&d.to_bounded() - &(&bins.dbar().to_bounded() + bins.b())).norm();
    println!("  ‖D − (D̄ + b)‖ = {recon:.2e}");
    Ok(())
}
