//! Verify the strong equivalence of two programs.
//!
//! Usage: `cargo run --example strong_equivalence -- [left] [right]`
//! where each argument is program text.

use anthem::asp::Program;
use anthem::atp::ProverConfig;
use anthem::control::Direction;
use anthem::verify::{assemble_strong_equivalence, run_verification, FormulaRepresentation, RunOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let left: Program = args.next().unwrap_or_else(|| "q(X+1) :- p(X).".into()).parse()?;
    let right: Program = args.next().unwrap_or_else(|| "q(X) :- p(X-1).".into()).parse()?;

    let mut claims = assemble_strong_equivalence(&left, &right, FormulaRepresentation::Mu, Direction::Universal);
    for claim in &claims {
        println!("% {} ({}): {}", claim.name, claim.direction, claim.conjecture);
    }

    let prover = ProverConfig::with_limits(30, 1);
    if !prover.is_available() {
        println!("% prover `{}` not available", prover.binary);
        return Ok(());
    }
    print!("{}", run_verification(&mut claims, &prover, &RunOptions::default())?);
    Ok(())
}
