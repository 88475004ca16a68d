//! Boolean functions for studying joint mutual exclusion.
//!
//! For every `n >= 2` this crate builds `n` propositions over `A1..An` whose
//! `n`-way conjunction is constant false while every conjunction of fewer of
//! them is satisfiable, and checks that claim both by truth tables and by
//! cube algebra.
//!
//! ```
//! use jointex_core::{family, verify_theorem, Mode, VerifyOptions};
//!
//! let fam = family(3).unwrap();
//! assert_eq!(fam.propositions[0].to_string(), "A2' A3 + A2 A3'");
//! let report = verify_theorem(6, Mode::Both, &VerifyOptions::default()).unwrap();
//! assert!(report.verified());
//! ```

pub mod boolcore;
pub mod cointoss;
pub mod construction;
mod error;
pub mod parser;
pub mod random;
pub mod verify;

pub use boolcore::{
    count_sat, equivalent, evaluate, truth_table, witness, Assignment, Cube, Dnf, Literal,
    Polarity, RowCap, TruthTable, VarId, DEFAULT_MAX_VARS, HARD_MAX_VARS,
};
pub use cointoss::{coin_events, exact_probs, simulate, CoinEvent, ProbReport, SimReport};
pub use construction::{
    eterms, exclusion_set, family, proposition, ETermSet, ExclusionSet, Family,
};
pub use error::{Error, Result};
pub use parser::{parse, parse_file, render, ParseError, Parsed};
pub use verify::{
    check_observations, k_way_report, leave_one_out, tableau, verify_theorem, ExclusionReport,
    Mode, ObservationReport, Tableau, TheoremReport, VerifyOptions,
};
