//! Translate a program with τ*, the natural translation, and μ.
//!
//! Usage: `cargo run --example translate -- [program text]`

use anthem::asp::Program;
use anthem::translate::{mu, natural, tau_star};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "q(X+1) :- p(X). p(X,Y) :- X / Y > 0.".into());
    let program: Program = text.parse()?;

    println!("% tau-star\n{}", tau_star(&program));
    match natural(&program) {
        Ok(theory) => println!("% natural\n{theory}"),
        Err(e) => println!("% natural: {e}"),
    }
    println!("% mu\n{}", mu(&program));
    Ok(())
}
