//! Embed a theory into classical logic with the here-and-there transformation γ
//! and print the ordering axioms for its predicates.
//!
//! Usage: `cargo run --example gamma -- [theory text]`

use anthem::fol::Theory;
use anthem::transform::{gamma, ordering_axioms};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "forall X Y (p(X, Y) -> not q(X, Y)).".into());
    let theory: Theory = text.parse()?;

    println!("% gamma\n{}", gamma(&theory));
    println!("% ordering axioms\n{}", ordering_axioms(&theory.predicates()));
    Ok(())
}
