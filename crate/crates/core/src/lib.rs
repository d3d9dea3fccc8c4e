//! Grainy numbers and grainy-valued fuzzy sets.
//!
//! A grainy number is a finite tuple of bits over `{-, 1}`. Addition is a
//! bitwise AND that cuts the longer operand, multiplication a bitwise OR
//! that keeps it, and together they form a distributive lattice in which
//! the empty tuple `0` is the top element. Fuzzy sets whose memberships are
//! grainy numbers gain a second kind of negation, the supplement along a
//! grainy number `k`.
//!
//! * [`number`]: the value type, its operations and order.
//! * [`notation`]: compact (`1°3°(5)`), bitstring (`1-1--`) and tuple forms.
//! * [`lawcheck`]: exhaustive law checking and brute-force bound oracles.
//! * [`fuzzy`]: grainy fuzzy sets, their file format and supplementation.
//! * [`expr`]: the small expression language used by the CLI.
//! * [`cli`]: the `grainy` command-line front end.
//!
//! ```
//! use grainy::GrainyNumber;
//!
//! let a: GrainyNumber = "1°3°4°".parse().unwrap();
//! let b: GrainyNumber = "1°2°(4)".parse().unwrap();
//! assert_eq!((&a + &b).to_string(), "1°(4)");
//! assert_eq!((&a * &b).to_string(), "1°2°3°4°");
//! ```

pub mod cli;
pub mod expr;
pub mod fuzzy;
pub mod hasse;
pub mod lawcheck;
pub mod notation;
pub mod number;

pub use fuzzy::GrainyFuzzySet;
pub use number::{Bit, Comparison, GrainyNumber, MaskSupplement, Supplement};
