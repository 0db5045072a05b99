//! Verify the external equivalence of two programs under a user guide.
//! Without a user guide every predicate is an output (weak equivalence).
//!
//! Usage: `cargo run --example external_equivalence -- [left.lp right.lp [guide.ug]]`

use std::path::Path;

use anthem::asp::Program;
use anthem::atp::ProverConfig;
use anthem::control::{Direction, ProofOutline, UserGuide};
use anthem::verify::{
    assemble_external_equivalence, run_verification, weak_equivalence_guide, ExternalEquivalence, RunOptions, Side,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../res/examples");
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (left, right, guide) = match args.as_slice() {
        [] => (
            corpus.join("threshold.1.lp"),
            corpus.join("threshold.2.lp"),
            Some(corpus.join("threshold.ug")),
        ),
        [l, r] => (l.into(), r.into(), None),
        [l, r, g, ..] => (l.into(), r.into(), Some(g.into())),
        _ => return Err("expected two programs and an optional user guide".into()),
    };
    let read_program =
        |path: &Path| -> Result<Program, Box<dyn std::error::Error>> { Ok(std::fs::read_to_string(path)?.parse()?) };
    let (l, r) = (read_program(&left)?, read_program(&right)?);
    let user_guide: UserGuide = match guide {
        Some(path) => std::fs::read_to_string(path)?.parse()?,
        None => weak_equivalence_guide(&l, &r),
    };

    let task = ExternalEquivalence {
        left: Side::Program {
            name: left.display().to_string(),
            program: l,
        },
        right: Side::Program {
            name: right.display().to_string(),
            program: r,
        },
        user_guide,
        outline: ProofOutline::default(),
        direction: Direction::Universal,
        bypass_tightness: false,
    };
    let mut claims = assemble_external_equivalence(&task)?;
    for claim in &claims {
        println!("% {} ({}): {} axioms", claim.name, claim.direction, claim.axioms.len());
    }

    let prover = ProverConfig::with_limits(30, 1);
    if !prover.is_available() {
        println!("% prover `{}` not available", prover.binary);
        return Ok(());
    }
    print!("{}", run_verification(&mut claims, &prover, &RunOptions::default())?);
    Ok(())
}
