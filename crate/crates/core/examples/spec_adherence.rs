//! Verify that the exact cover encoding adheres to its first-order specification,
//! in the direction given as the first argument (default: universal).
//!
//! Usage: `cargo run --example spec_adherence -- [universal|forward|backward]`

use std::path::Path;

use anthem::atp::ProverConfig;
use anthem::verify::{assemble_external_equivalence, run_verification, ExternalEquivalence, RunOptions, Side};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../res/examples");
    let read = |name: &str| std::fs::read_to_string(corpus.join(name));
    let direction = std::env::args().nth(1).unwrap_or_else(|| "universal".into()).parse()?;

    let task = ExternalEquivalence {
        left: Side::Program {
            name: "cover.lp".into(),
            program: read("cover.lp")?.parse()?,
        },
        right: Side::Specification {
            name: "cover.spec".into(),
            specification: read("cover.spec")?.parse()?,
        },
        user_guide: read("cover.ug")?.parse()?,
        outline: Default::default(),
        direction,
        bypass_tightness: false,
    };
    let mut claims = assemble_external_equivalence(&task)?;

    let prover = ProverConfig::with_limits(30, 1);
    if !prover.is_available() {
        for claim in &claims {
            println!("% {} ({}): {}", claim.name, claim.direction, claim.conjecture);
        }
        println!("% prover `{}` not available", prover.binary);
        return Ok(());
    }
    print!("{}", run_verification(&mut claims, &prover, &RunOptions::default())?);
    Ok(())
}
