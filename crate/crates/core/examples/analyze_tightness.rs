//! Report tightness, regularity and private recursion of a program.
//!
//! Usage: `cargo run --example analyze_tightness -- [program text] [user guide text]`

use anthem::analyze::{check_private_recursion, check_regularity, check_tightness, dependency_graph};
use anthem::asp::Program;
use anthem::control::UserGuide;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let program: Program = args
        .next()
        .unwrap_or_else(|| "p :- q. q :- p. r :- not p.".into())
        .parse()?;
    let guide: UserGuide = args.next().unwrap_or_else(|| "output: r/0.".into()).parse()?;

    for (from, to, polarity) in &dependency_graph(&program).edges {
        println!("{from} -> {to} ({polarity:?})");
    }
    println!("{}", check_tightness(&program));
    println!("{}", check_regularity(&program));
    println!("{}", check_private_recursion(&program, &guide));
    Ok(())
}
