//! Translate mini-gringo answer set programs into many-sorted first-order
//! theories, analyze them, and verify program equivalence with an external
//! first-order theorem prover.
//!
//! The crate is organized bottom-up:
//!
//! - [`asp`]: abstract syntax, parser, and printer for programs;
//! - [`fol`]: the three-sorted target language, its parser, and printers;
//! - [`translate`]: the τ*, natural, and hybrid program translations;
//! - [`transform`]: the here-and-there embedding, completion, simplification;
//! - [`analyze`]: tightness, regularity, and private recursion;
//! - [`control`]: user guides, specifications, and proof outlines;
//! - [`verify`]: assembly of strong and external equivalence claims;
//! - [`atp`]: TPTP emission and prover orchestration;
//! - [`cli`]: the command-line front end.

pub mod analyze;
pub mod asp;
pub mod atp;
pub mod cli;
pub mod control;
pub mod fol;
pub mod lexer;
pub mod transform;
pub mod translate;
pub mod verify;

pub use lexer::{Location, ParseError};
