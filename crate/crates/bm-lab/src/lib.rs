//! A workbench for finite quasigroups and the 60 classical identities of
//! Bol-Moufang type.
//!
//! The crate does four things:
//!
//! - **Tables** ([`algebra`]): Cayley tables validated as Latin squares,
//!   with division, `(12)`-parastrophe (transpose), and a full
//!   unit/idempotent/loop/group profile.
//! - **Identities** ([`identity`]): a tiny term language over `x, y, z`
//!   with juxtaposition binding tighter than `.`, the labeled F1–F60
//!   catalog, execution-order types (one permutation per side plus the
//!   doubled-variable slots), and the parastrophe transform.
//! - **Checking and search** ([`evaluator`], [`finder`]): brute-force
//!   satisfaction over all assignments, and a backtracking model finder
//!   over Latin squares with watched-instance propagation, node budgets,
//!   and deterministic parallel split.
//! - **The classification table** ([`report`]): for every catalog
//!   identity, whether satisfying quasigroups are forced to have a left
//!   unit, a right unit, be loops, or be groups — "+" claims confirmed by
//!   exhaustive enumeration, "−" claims backed by bundled, re-verified
//!   counterexample tables.
//!
//! ```
//! use bm_lab::{lookup, reproduce_table1};
//!
//! let entry = lookup("F41").unwrap();
//! assert_eq!(entry.text, "xx.yz = (x.xy)z");
//! assert_eq!(entry.identity().parastrophe().label(), Some("F53"));
//!
//! let report = reproduce_table1(2, 3).unwrap();
//! assert!(report.is_clean());
//! ```

pub mod algebra;
pub mod evaluator;
pub mod finder;
pub mod identity;
pub mod report;

pub use algebra::{CayleyTable, TableError, TableTextError, UnitProfile};
pub use evaluator::{
    classify, eval_term, satisfies, satisfies_equation, satisfying_quasigroups, Assignment,
    SatReport,
};
pub use finder::{
    enumerate_latin_squares, find, find_with_threads, relabeling_minimal, verify_plus_cell, Column,
    FinderError, LatinSquares, Mode, PlusCellReport, Predicate, Propagation, SearchOutcome,
    SearchQuery, Witness, DEFAULT_BUDGET, MAX_ORDER,
};
pub use identity::{
    catalog, catalog_json, execution_perm, lookup, parse_term, CatalogEntry, Identity,
    IdentityError, IdentityType, Perm, ShapeDefect, Side, Term, Var,
};
pub use report::{
    expected_parastrophe, expected_row, expected_table1, load_fixtures, reproduce_table1,
    verify_fixture, CellSigns, ComputedSigns, ExpectedRow, Fixture, FixtureCertificate,
    FixtureError, FixtureSource, ParastropheCheck, RowReport, Sign, Table1Report, WitnessRef,
    MAX_TABLE1_EXHAUSTIVE_ORDER,
};
