//! Complete the τ* translation of a program and simplify the result.
//!
//! Usage: `cargo run --example completion -- [program text]`

use anthem::asp::Program;
use anthem::transform::{completion, simplify};
use anthem::translate::tau_star;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "{q(X)} :- p(X).".into());
    let program: Program = text.parse()?;

    let completed = completion(&tau_star(&program))?;
    println!("% completion\n{completed}");
    println!("% simplified\n{}", simplify(&completed));
    Ok(())
}
