//! Emit a TPTP problem for a claim and, if a prover is available, run it.
//!
//! Usage: `cargo run --example tptp_emission -- [conjecture] [axiom...]`

use anthem::atp::{Problem, Prover, ProverConfig};
use anthem::fol::Formula;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let conjecture: Formula = args
        .next()
        .unwrap_or_else(|| "forall X (exists I$ (I$ = X and p(I$)) -> q(X))".into())
        .parse()?;
    let axioms = args
        .map(|text| Ok(("axiom".to_string(), text.parse()?)))
        .collect::<Result<Vec<(String, Formula)>, anthem::ParseError>>()?;

    let problem = Problem::new("example", &axioms, &("conjecture".into(), conjecture))?;
    print!("{problem}");

    let config = ProverConfig::with_limits(10, 1);
    if config.is_available() {
        let result = config.prove(&problem)?;
        println!("% prover status: {} ({:.2}s)", result.status, result.seconds);
    } else {
        println!("% prover `{}` not available", config.binary);
    }
    Ok(())
}
