//! Computation in finitely presented lcm, Gaussian and Garside monoids.
//!
//! * [`presentation`]: atoms, words, presentations and their file format.
//! * [`oracle`]: brute-force congruence closure for homogeneous presentations.
//! * [`reversing`] and [`diagram`]: word reversing, lcms and reversing diagrams.
//! * [`mbrace`]: the lcm operation as a commutative monoid and its
//!   distributivity properties.
//! * [`ybe`]: set-theoretic Yang–Baxter solutions and structure monoids.
//! * [`partialbrace`]: the partial operation on the group of fractions.

pub mod diagram;
pub mod fixtures;
pub mod mbrace;
pub mod oracle;
pub mod partialbrace;
pub mod presentation;
pub mod report;
pub mod reversing;
pub mod ybe;

pub use oracle::{CongruenceIndex, OracleError};
pub use presentation::{
    parse_presentation, parse_word, validate, Atom, AtomTable, Direction, Letter, Presentation,
    Sign, SignedWord, ValidationReport, Word,
};
pub use reversing::{ComplementTable, ReversingError, DEFAULT_STEP_BUDGET};
