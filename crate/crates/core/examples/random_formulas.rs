//! Seeded random formulas and ill-typed mutants.
//!
//! cargo run --example random_formulas

use hierlog::gen::{mutate_index, random_modal, random_prop, GenConfig};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn main() {
    let mut rng = StdRng::seed_from_u64(2024);
    let cfg = GenConfig::default();
    for _ in 0..5 {
        let f = random_prop(&mut rng, &cfg);
        match mutate_index(&mut rng, &f) {
            Some(bad) => println!(
                "{:<36} mutant {:<36} {}",
                f.to_string(),
                bad.to_string(),
                bad.check_well_formed().unwrap_err()
            ),
            None => println!("{}", f),
        }
    }
    for _ in 0..5 {
        println!("{}", random_modal(&mut rng, &cfg));
    }
}
