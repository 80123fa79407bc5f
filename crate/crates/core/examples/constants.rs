//! Right-hand-side constants over the default parameter grid.

use schur_commutators::{constants_table, ConstantsGrid};

fn main() -> schur_commutators::Result<()> {
    for row in constants_table(&ConstantsGrid::default())? {
        let params: Vec<String> = row.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        println!("{:<38} {:<28} {:.6}", row.quantity, params.join(" "), row.value);
    }
    Ok(())
}
