//! Workbench for three-valued paraconsistent propositional logics.
//!
//! The crate evaluates formulas over the three truth values `t`, `f`,
//! `b`, decides semantic consequence and logical equivalence with least
//! refuting witnesses, enumerates the 8192-member family of table sets
//! compatible with the classical restriction and the designation
//! conditions, checks equivalence-law schemas and Hilbert axiom schemas
//! against any member, and replicates the family's quantitative
//! structure: which laws pin down which tables, and how many members
//! survive each law set.
//!
//! Module map:
//!
//! * [`truth`] — the three truth values and the designated subset.
//! * [`formula`] — formula syntax trees and printing.
//! * [`parser`] — concrete syntax for formulas, law templates, law files.
//! * [`family`] — the logic family, its constraints, ids, enumeration.
//! * [`semantics`] — evaluation, consequence, equivalence, consistency,
//!   and the classical two-valued oracle.
//! * [`laws`] — the 23-law catalog, law checking, axiom schema checks.
//! * [`analysis`] — family-wide counting, staged table analysis, the
//!   replication report.
//! * [`render`] — plain-text truth tables.
//! * [`catalog`] — JSONL/CSV persistence of all 8192 members.
//!
//! ```
//! use trilogic::{encode, entails, lp_logic, parse_formula};
//!
//! let lp = lp_logic();
//! assert_eq!(encode(&lp).unwrap().value(), 7418);
//!
//! let p = parse_formula("p").unwrap();
//! let not_p = parse_formula("~p").unwrap();
//! let q = parse_formula("q").unwrap();
//!
//! // Contradictory premises do not explode.
//! let result = entails(&[p, not_p], &q, &lp);
//! assert_eq!(result.witness().unwrap().to_string(), "p=b, q=f");
//! ```

pub mod analysis;
pub mod catalog;
pub mod cli;
pub mod family;
pub mod formula;
pub mod laws;
pub mod parser;
pub mod render;
pub mod semantics;
pub mod truth;

pub use analysis::{
    count_satisfying, replicate_report, stage_analysis, tautology_coincidence_scan,
    ReplicationReport,
};
pub use family::{decode, encode, enumerate_logics, lp_logic, Connective, LogicId, LogicSpec};
pub use formula::Formula;
pub use laws::{
    builtin_law, builtin_laws, check_axiom_schemas, check_law, check_mp_preservation,
    counterexample, law_profile, LawProfile, LawSchema, MetaVar, Template,
};
pub use parser::{parse_formula, parse_law_file, parse_template};
pub use semantics::{
    classical_entails, classical_eval, entails, equivalent, eval, is_consistent, EntailmentResult,
    Valuation,
};
pub use truth::TruthValue;
