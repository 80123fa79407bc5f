//! Schur multipliers on block matrices and the row × column norm bound.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schur_commutators::block::row_norm;
use schur_commutators::ensemble::{random_clustered, random_multiplier};
use schur_commutators::{
    abs_multiplier, abs_row_bound, bennett_bound_check, build_binning, random_bounded, to_blocks, Ensemble,
};

fn main() -> schur_commutators::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    // Clustered spectrum: up to 8 bins with up to 4 eigenvalues each.
    let d = random_clustered(&mut rng, 8, 4, 20.0)?;
    let binning = build_binning(&d);
    let y = random_bounded(&mut rng, d.dim(), Ensemble::Dense);
    let x = to_blocks(&binning, &y)?;
    println!("dim {}, occupied bins {:?}", d.dim(), binning.occupied());

    let s = random_multiplier(&mut rng, &binning.occupied());
    let r = bennett_bound_check(&s, &x);
    println!("random S:  ‖S∗X‖ = {:.4} ≤ {:.4}  (slack {:.3})", r.lhs, r.rhs, r.slack_ratio);

    let s1 = abs_multiplier(1)?;
    let r = bennett_bound_check(&s1, &x);
    println!("S(1):      ‖S∗X‖ = {:.4} ≤ {:.4}  (slack {:.3})", r.lhs, r.rhs, r.slack_ratio);

    let window: Vec<i64> = (-2000..=2000).collect();
    println!(
        "S(1) windowed row norm {:.6} vs analytic π/√3 = {:.6}",
        row_norm(&s1, &window)?,
        abs_row_bound()
    );
    Ok(())
}
