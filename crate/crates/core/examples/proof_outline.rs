//! Show how a proof outline is turned into claims: definitions become axioms,
//! lemmas become claims, and inductive lemmas split into base case and step.
//!
//! Usage: `cargo run --example proof_outline -- [outline.po]`

use std::path::{Path, PathBuf};

use anthem::control::{Direction, ProofOutline};
use anthem::verify::sequence_outline;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("../../res/examples/primes.po"));
    let outline: ProofOutline = std::fs::read_to_string(path)?.parse()?;

    for (i, claim) in sequence_outline(&outline, &[], Direction::Universal)?
        .iter()
        .enumerate()
    {
        println!("claim {i}: {} (after claims {:?})", claim.name, claim.dependencies);
        for (label, axiom) in &claim.axioms {
            println!("  axiom ({label}): {axiom}");
        }
        println!("  conjecture: {}", claim.conjecture);
    }
    Ok(())
}
