//! Commutators with `|D|` and their iterates.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schur_commutators::{check_abs_first, check_abs_higher, random_bounded, random_hermitian, Ensemble};

fn main() -> schur_commutators::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let d = random_hermitian(&mut rng, 20, 20.0)?;
    let y = random_bounded(&mut rng, 20, Ensemble::Dense);
    let r = check_abs_first(&d, &y)?;
    println!("‖[|D|, y]‖          = {:.4} ≤ {:.4}", r.lhs, r.rhs);
    for n in 1..=3 {
        let r = check_abs_higher(&d, &y, n)?;
        println!("‖ad_|D|^{n}(y)‖       = {:.4} ≤ {:.4}  slack {:.4}", r.lhs, r.rhs, r.slack_ratio);
    }
    Ok(())
}
