//! A small randomised campaign over every checker, written as JSON.

use schur_commutators::campaign::resolve_workers;
use schur_commutators::{run_campaign, CampaignConfig, TheoremId};

fn main() -> schur_commutators::Result<()> {
    let config = CampaignConfig {
        theorems: TheoremId::ALL.to_vec(),
        trials: 25,
        dim_range: [2, 12],
        seed: 2024,
        ..CampaignConfig::default()
    };
    let report = run_campaign(&config, resolve_workers(None))?;
    for t in &config.theorems {
        let worst = report
            .records
            .iter()
            .filter(|r| r.theorem_id == *t)
            .map(|r| r.slack_ratio)
            .fold(0.0, f64::max);
        println!("{:<15} worst slack {worst:.4}", t.name());
    }
    let s = &report.summary;
    println!("{}/{} passed", s.passed, s.trials);
    let path = std::env::temp_dir().join("commschur-campaign.json");
    report.write_json(std::fs::File::create(&path)?)?;
    println!("report written to {}", path.display());
    Ok(())
}
