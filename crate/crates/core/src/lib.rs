//! Square Heffter arrays `H(n;k)`: constructions for every `3 <= k < n` with
//! `nk = 1, 2 (mod 4)`, an independent verifier, the printed example arrays,
//! and a brute-force oracle for tiny orders.
//!
//! ```
//! use heffter::{generate, verify_heffter};
//!
//! let a = generate(19, 3).unwrap();
//! let report = verify_heffter(&a, 3);
//! assert!(report.is_valid());
//! assert_eq!(report.modulus, Some(115));
//! ```

pub mod array;
pub mod constructions;
pub mod cycles;
pub mod fillers;
pub mod fixtures;
pub mod oracle;
pub mod repair;
pub mod verifier;

pub use array::{Position, SparseSquareArray, SupportSet};
pub use constructions::{classify, generate, plan, sweep, BuildPlan, CaseClassification, CaseVerdict, GenerateError};
pub use cycles::{classify_cycles, CellSet, TwoFactor};
pub use fixtures::{get_fixture, list_fixtures, Fixture};
pub use oracle::{count_solutions, search, CountOutcome, SearchBudget, SearchOutcome};
pub use verifier::{verify_block, verify_heffter, verify_integer_heffter, VerificationReport, Violation};
