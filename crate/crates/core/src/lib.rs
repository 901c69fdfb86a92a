//! Pomset logic toolkit: dicograph terms, inclusion rewriting, handsome
//! proof nets, coherence semantics, sequent calculi and a small proof-net
//! grammar.

pub mod coherence;
pub mod grammar;
pub mod parse;
pub mod proofnet;
pub mod relation;
pub mod rewrite;
pub mod sequent;
pub mod term;

pub use parse::{parse_formula, parse_term};

pub use relation::{from_relation, is_dicograph, to_relation, Relation};
pub use term::{Atom, EquivKind, Formula, Id, Op, Polarity, Term, TermError};
