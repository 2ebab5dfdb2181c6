//! A backtracking model finder over Latin squares.
//!
//! Tables are filled cell by cell in row-major order with ascending values,
//! pruned by row/column bitmasks, so results stream out in lexicographic
//! order and "first witness" is a well-defined, reproducible table. The
//! target identity can additionally be propagated on partial tables: every
//! ground instance of the identity waits on the single cell its evaluation
//! got stuck on, and is re-checked the moment that cell is filled. Because
//! cells are assigned in a fixed order, an instance's watched cell is always
//! at least as large as every cell its last evaluation read, which
//! guarantees it re-fires before any completed table is reached — pruning
//! never changes which tables the search visits, only how early dead
//! branches are abandoned. A differential test pins the incremental mode to
//! the check-completed-tables-only mode.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{CayleyTable, UnitProfile};
use crate::evaluator::{satisfies, SatReport};
use crate::identity::{Identity, Term};

/// Largest supported order: well past every reference counterexample (the
/// largest is order 6) while keeping full enumeration conceivable.
pub const MAX_ORDER: usize = 8;

/// Default node-expansion budget for searches.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

const UNSET: u8 = 0xFF;

/// Errors for malformed search requests. Exhausting a budget is *not* an
/// error: outcomes carry per-order exhaustiveness flags instead, so "nothing
/// exists in range" and "ran out of budget" stay distinguishable.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FinderError {
    #[error("order {0} is out of range: orders start at 1")]
    OrderTooSmall(usize),
    #[error("order {found} exceeds the enumeration cap of {cap}")]
    OrderTooLarge { found: usize, cap: usize },
    #[error("empty order range: {min}..{max}")]
    EmptyRange { min: usize, max: usize },
    #[error("search budget must be positive")]
    ZeroBudget,
}

/// A structural requirement on the unit profile of a found table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Predicate {
    NoLeftUnit,
    NoRightUnit,
    NoUnitEitherSide,
    NotAssociative,
    HasLeftUnit,
    HasRightUnit,
    Always,
}

impl Predicate {
    /// Evaluates the predicate on a computed classification.
    pub fn eval(self, profile: &UnitProfile) -> bool {
        match self {
            Predicate::NoLeftUnit => profile.left_unit.is_none(),
            Predicate::NoRightUnit => profile.right_unit.is_none(),
            Predicate::NoUnitEitherSide => {
                profile.left_unit.is_none() && profile.right_unit.is_none()
            }
            Predicate::NotAssociative => !profile.is_group,
            Predicate::HasLeftUnit => profile.left_unit.is_some(),
            Predicate::HasRightUnit => profile.right_unit.is_some(),
            Predicate::Always => true,
        }
    }

    fn accepts(self, table: &CayleyTable) -> bool {
        match self {
            Predicate::Always => true,
            _ => self.eval(&table.units()),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Predicate::NoLeftUnit => "no-left-unit",
            Predicate::NoRightUnit => "no-right-unit",
            Predicate::NoUnitEitherSide => "no-unit-either-side",
            Predicate::NotAssociative => "not-associative",
            Predicate::HasLeftUnit => "has-left-unit",
            Predicate::HasRightUnit => "has-right-unit",
            Predicate::Always => "always",
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = String;

    /// Accepts kebab-case or snake_case names.
    fn from_str(s: &str) -> Result<Predicate, String> {
        match s.replace('_', "-").as_str() {
            "no-left-unit" => Ok(Predicate::NoLeftUnit),
            "no-right-unit" => Ok(Predicate::NoRightUnit),
            "no-unit-either-side" => Ok(Predicate::NoUnitEitherSide),
            "not-associative" => Ok(Predicate::NotAssociative),
            "has-left-unit" => Ok(Predicate::HasLeftUnit),
            "has-right-unit" => Ok(Predicate::HasRightUnit),
            "always" => Ok(Predicate::Always),
            other => Err(format!(
                "unknown predicate `{other}` (expected one of: no-left-unit, no-right-unit, \
                 no-unit-either-side, not-associative, has-left-unit, has-right-unit, always)"
            )),
        }
    }
}

impl Serialize for Predicate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// What to do with matching tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Stop at the lexicographically first match over the smallest order.
    #[default]
    FirstWitness,
    /// Count every match in range.
    CountAll,
    /// Collect every match in range.
    EnumerateAll,
}

/// How eagerly the identity is checked during search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Propagation {
    /// Check the identity only on completed tables.
    CompleteOnly,
    /// Additionally re-check each ground instance of the identity as soon
    /// as the cell it is waiting on gets filled, abandoning dead branches
    /// early. Visits exactly the same completed tables as `CompleteOnly`.
    #[default]
    Incremental,
}

/// A search request: find tables satisfying an identity and a predicate.
#[derive(Debug, Clone)]
pub struct SearchQuery {
    pub identity: Identity,
    pub predicate: Predicate,
    /// Inclusive order range, smallest searched first.
    pub orders: (usize, usize),
    /// Node-expansion limit shared across the whole range.
    pub budget: u64,
    pub mode: Mode,
    pub propagation: Propagation,
}

impl SearchQuery {
    /// A first-witness query with the default budget and propagation.
    pub fn new(identity: Identity, predicate: Predicate, orders: (usize, usize)) -> SearchQuery {
        SearchQuery {
            identity,
            predicate,
            orders,
            budget: DEFAULT_BUDGET,
            mode: Mode::FirstWitness,
            propagation: Propagation::Incremental,
        }
    }

    fn validate(&self) -> Result<(), FinderError> {
        let (min, max) = self.orders;
        if min == 0 {
            return Err(FinderError::OrderTooSmall(min));
        }
        if min > max {
            return Err(FinderError::EmptyRange { min, max });
        }
        if max > MAX_ORDER {
            return Err(FinderError::OrderTooLarge {
                found: max,
                cap: MAX_ORDER,
            });
        }
        if self.budget == 0 {
            return Err(FinderError::ZeroBudget);
        }
        Ok(())
    }
}

/// A found table together with a certificate recomputed from scratch: the
/// full satisfaction report and unit profile of the table.
#[derive(Debug, Clone)]
pub struct Witness {
    pub table: CayleyTable,
    pub order: usize,
    /// Independent re-check of the identity on the finished table.
    pub sat: SatReport,
    /// Independent classification of the finished table.
    pub profile: UnitProfile,
    /// Nodes expanded by the query up to (and including) this discovery.
    pub nodes_expanded: u64,
}

/// Everything a search produced. `witness` is populated in first-witness
/// mode, `tables` in enumerate-all mode, and `match_count` in both counting
/// modes.
#[derive(Debug, Clone, Default)]
pub struct SearchOutcome {
    pub witness: Option<Witness>,
    pub match_count: u64,
    pub tables: Vec<CayleyTable>,
    pub nodes_expanded: u64,
    /// Orders whose search trees were explored completely.
    pub exhausted_orders: Vec<usize>,
    /// True when the budget ran out before the range was decided.
    pub budget_exhausted: bool,
}

impl SearchOutcome {
    /// JSON rendering: a flat witness object when a table was found,
    /// otherwise an explicit `"witness": null` with the coverage flags.
    pub fn to_json(&self, query: &SearchQuery) -> Value {
        let identity = query
            .identity
            .label()
            .map_or_else(|| query.identity.to_string(), str::to_owned);
        match &self.witness {
            Some(w) => json!({
                "identity": identity,
                "predicate": query.predicate,
                "order": w.order,
                "table": w.table,
                "left_unit": w.profile.left_unit,
                "right_unit": w.profile.right_unit,
                "is_group": w.profile.is_group,
                "nodes_expanded": self.nodes_expanded,
                "exhaustive_orders": self.exhausted_orders,
            }),
            None => json!({
                "identity": identity,
                "predicate": query.predicate,
                "witness": Value::Null,
                "nodes_expanded": self.nodes_expanded,
                "exhaustive_orders": self.exhausted_orders,
                "budget_exhausted": self.budget_exhausted,
            }),
        }
    }
}

/// One column of the reference classification: left unit (f), right unit
/// (e), loop, group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Column {
    F,
    E,
    Loop,
    Group,
}

impl Column {
    pub fn eval(self, profile: &UnitProfile) -> bool {
        match self {
            Column::F => profile.left_unit.is_some(),
            Column::E => profile.right_unit.is_some(),
            Column::Loop => profile.is_loop,
            Column::Group => profile.is_group,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Column::F => "f",
            Column::E => "e",
            Column::Loop => "loop",
            Column::Group => "group",
        }
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Column {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Exhaustive confirmation that a claimed "+" cell has no small
/// counterexample: every table of order ≤ `max_order` satisfying the
/// identity also satisfies the column property.
#[derive(Debug, Clone, Serialize)]
pub struct PlusCellReport {
    pub column: Column,
    pub max_order: usize,
    /// `(order, number of satisfying tables)` per fully or partially
    /// covered order.
    pub counts: Vec<(usize, u64)>,
    /// First satisfying table violating the column property, if any.
    pub counterexample: Option<CayleyTable>,
    /// Orders whose enumeration ran to completion.
    pub covered_orders: Vec<usize>,
    pub budget_exhausted: bool,
    pub nodes_expanded: u64,
}

impl PlusCellReport {
    /// True when every order up to `max_order` was fully covered and no
    /// counterexample appeared.
    pub fn confirmed(&self) -> bool {
        self.counterexample.is_none()
            && !self.budget_exhausted
            && self.covered_orders.len() == self.max_order
    }
}

/// Streams all Latin squares of one order in lexicographic (row-major)
/// order. Construct via [`enumerate_latin_squares`].
#[derive(Debug)]
pub struct LatinSquares {
    n: usize,
    total: usize,
    cells: Vec<u8>,
    row_free: Vec<u16>,
    col_free: Vec<u16>,
    cand: Vec<u16>,
    d: usize,
    state: IterState,
}

#[derive(Debug)]
enum IterState {
    Fresh,
    AtLeaf,
    Done,
}

/// All Latin squares of order `n`, streamed in lexicographic order.
///
/// The stream is generated lazily; note that counts grow superexponentially
/// (161,280 already at order 5), so draining high orders is on the caller.
pub fn enumerate_latin_squares(n: usize) -> Result<LatinSquares, FinderError> {
    if n == 0 {
        return Err(FinderError::OrderTooSmall(n));
    }
    if n > MAX_ORDER {
        return Err(FinderError::OrderTooLarge {
            found: n,
            cap: MAX_ORDER,
        });
    }
    Ok(LatinSquares {
        n,
        total: n * n,
        cells: vec![UNSET; n * n],
        row_free: vec![full_mask(n); n],
        col_free: vec![full_mask(n); n],
        cand: vec![0; n * n],
        d: 0,
        state: IterState::Fresh,
    })
}

impl LatinSquares {
    fn assign(&mut self, d: usize, v: u8) {
        self.cells[d] = v;
        self.row_free[d / self.n] &= !(1 << v);
        self.col_free[d % self.n] &= !(1 << v);
    }

    fn unassign(&mut self, d: usize) {
        let v = self.cells[d];
        self.cells[d] = UNSET;
        self.row_free[d / self.n] |= 1 << v;
        self.col_free[d % self.n] |= 1 << v;
    }
}

impl Iterator for LatinSquares {
    type Item = CayleyTable;

    fn next(&mut self) -> Option<CayleyTable> {
        match self.state {
            IterState::Done => return None,
            IterState::AtLeaf => {
                self.d = self.total - 1;
                self.unassign(self.total - 1);
            }
            IterState::Fresh => {
                self.cand[0] = self.row_free[0] & self.col_free[0];
                self.d = 0;
            }
        }
        loop {
            let avail = self.cand[self.d];
            if avail == 0 {
                if self.d == 0 {
                    self.state = IterState::Done;
                    return None;
                }
                self.d -= 1;
                self.unassign(self.d);
                continue;
            }
            let v = avail.trailing_zeros() as u8;
            self.cand[self.d] = avail & (avail - 1);
            self.assign(self.d, v);
            if self.d + 1 == self.total {
                self.state = IterState::AtLeaf;
                return Some(table_from(self.n, &self.cells));
            }
            self.d += 1;
            self.cand[self.d] = self.row_free[self.d / self.n] & self.col_free[self.d % self.n];
        }
    }
}

/// Runs a search. In first-witness mode the result is the lexicographically
/// smallest matching table over the smallest order in range; identical
/// queries always yield identical witnesses and node counts.
pub fn find(query: &SearchQuery) -> Result<SearchOutcome, FinderError> {
    query.validate()?;
    let mut outcome = SearchOutcome::default();
    let mut remaining = query.budget;
    for n in query.orders.0..=query.orders.1 {
        let r = run_query_order(query, n, None, remaining);
        outcome.nodes_expanded += r.nodes;
        remaining -= r.nodes;
        outcome.match_count += r.match_count;
        outcome.tables.extend(r.tables);
        if r.exhausted {
            outcome.exhausted_orders.push(n);
        }
        if let Some(mut w) = r.witness {
            w.nodes_expanded = outcome.nodes_expanded;
            outcome.witness = Some(w);
            break;
        }
        if r.budget_exhausted {
            outcome.budget_exhausted = true;
            break;
        }
    }
    Ok(outcome)
}

/// Like [`find`], but each order's search tree is split into one branch per
/// value of the top-left cell, and branches are distributed round-robin over
/// `threads` worker threads.
///
/// The branch set, per-branch budget (an even split of the remaining
/// budget), and merge order are all independent of `threads`, so the result
/// is identical for every thread count ≥ 2. Branches run to completion
/// without cancellation; in first-witness mode the winner is the first
/// branch (in cell-value order) holding a witness, which is exactly the
/// lexicographic minimum. Node counts therefore differ from the serial
/// [`find`] (which stops mid-tree at the first witness and concentrates its
/// whole budget on one branch at a time); witnesses agree whenever the
/// budget is not the limiting factor. `threads == 1` falls back to the
/// serial search.
pub fn find_with_threads(
    query: &SearchQuery,
    threads: usize,
) -> Result<SearchOutcome, FinderError> {
    query.validate()?;
    if threads <= 1 {
        return find(query);
    }
    let mut outcome = SearchOutcome::default();
    let mut remaining = query.budget;
    for n in query.orders.0..=query.orders.1 {
        let branch_budget = remaining / n as u64;
        let workers = threads.min(n);
        let mut results: Vec<Option<OrderResult>> = (0..n).map(|_| None).collect();
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|t| {
                    let query = &query;
                    scope.spawn(move || {
                        let mut mine = Vec::new();
                        let mut b = t;
                        while b < n {
                            mine.push((b, run_query_order(query, n, Some(b as u8), branch_budget)));
                            b += workers;
                        }
                        mine
                    })
                })
                .collect();
            for handle in handles {
                for (b, r) in handle.join().expect("search worker panicked") {
                    results[b] = Some(r);
                }
            }
        });

        let mut order_witness = None;
        let mut all_exhausted = true;
        let mut order_budget_exhausted = false;
        let mut order_nodes = 0;
        for r in results.into_iter().map(|r| r.expect("every branch ran")) {
            order_nodes += r.nodes;
            outcome.match_count += r.match_count;
            outcome.tables.extend(r.tables);
            if order_witness.is_none() {
                order_witness = r.witness;
            }
            all_exhausted &= r.exhausted;
            order_budget_exhausted |= r.budget_exhausted;
        }
        outcome.nodes_expanded += order_nodes;
        remaining -= order_nodes;
        if all_exhausted {
            outcome.exhausted_orders.push(n);
        }
        if let Some(mut w) = order_witness {
            w.nodes_expanded = outcome.nodes_expanded;
            outcome.witness = Some(w);
            break;
        }
        if order_budget_exhausted {
            outcome.budget_exhausted = true;
            break;
        }
    }
    Ok(outcome)
}

/// Exhaustively confirms a claimed "+" cell: enumerates every table of
/// order 1..=`max_order` satisfying `identity` and checks the column
/// property on each, stopping at the first violation.
pub fn verify_plus_cell(
    identity: &Identity,
    column: Column,
    max_order: usize,
) -> Result<PlusCellReport, FinderError> {
    if max_order == 0 {
        return Err(FinderError::OrderTooSmall(max_order));
    }
    if max_order > MAX_ORDER {
        return Err(FinderError::OrderTooLarge {
            found: max_order,
            cap: MAX_ORDER,
        });
    }
    let mut report = PlusCellReport {
        column,
        max_order,
        counts: Vec::new(),
        counterexample: None,
        covered_orders: Vec::new(),
        budget_exhausted: false,
        nodes_expanded: 0,
    };
    let mut remaining = DEFAULT_BUDGET;
    for n in 1..=max_order {
        let mut count = 0;
        let mut violator = None;
        let mut on_leaf = |table: CayleyTable| {
            count += 1;
            if !column.eval(&table.units()) {
                violator = Some(table);
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        };
        let stats = run_order(
            identity,
            n,
            Propagation::Incremental,
            remaining,
            None,
            &mut on_leaf,
        );
        remaining -= stats.nodes;
        report.nodes_expanded += stats.nodes;
        report.counts.push((n, count));
        if stats.exhausted {
            report.covered_orders.push(n);
        }
        if violator.is_some() {
            report.counterexample = violator;
            break;
        }
        if stats.budget_exhausted {
            report.budget_exhausted = true;
            break;
        }
    }
    Ok(report)
}

/// True when `q` is the lexicographically smallest member of its relabeling
/// class (simultaneous renaming of rows, columns, and symbols). Offered as
/// an optional post-filter for enumeration consumers; searches never apply
/// it, since unit existence survives relabeling but identity satisfaction
/// statistics are about raw tables.
pub fn relabeling_minimal(q: &CayleyTable) -> bool {
    let n = q.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if q.relabel(&perm) < *q {
                return false;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    true
}

fn full_mask(n: usize) -> u16 {
    (1u16 << n) - 1
}

fn table_from(n: usize, cells: &[u8]) -> CayleyTable {
    CayleyTable::from_cells_unchecked(n, cells.iter().map(|&v| v as usize).collect())
}

/// Postfix code for one side of an identity.
#[derive(Clone, Copy)]
enum Op {
    Push(u8),
    Mul,
}

fn compile(term: &Term, out: &mut Vec<Op>) {
    match term {
        Term::Var(v) => out.push(Op::Push(v.index() as u8)),
        Term::Product(l, r) => {
            compile(l, out);
            compile(r, out);
            out.push(Op::Mul);
        }
    }
}

enum Eval {
    /// Evaluation needs this still-unset cell.
    Stuck { cell: usize },
    /// Both sides evaluated; `max_read` is the largest cell index touched.
    Done { equal: bool, max_read: usize },
}

fn eval_side(
    ops: &[Op],
    vals: [u8; 3],
    cells: &[u8],
    n: usize,
    max_read: &mut usize,
) -> Result<u8, usize> {
    let mut stack = [0u8; 8];
    let mut sp = 0;
    for op in ops {
        match *op {
            Op::Push(i) => {
                stack[sp] = vals[i as usize];
                sp += 1;
            }
            Op::Mul => {
                let cell = stack[sp - 2] as usize * n + stack[sp - 1] as usize;
                let v = cells[cell];
                if v == UNSET {
                    return Err(cell);
                }
                *max_read = (*max_read).max(cell);
                stack[sp - 2] = v;
                sp -= 1;
            }
        }
    }
    Ok(stack[0])
}

fn eval_instance(lhs: &[Op], rhs: &[Op], vals: [u8; 3], cells: &[u8], n: usize) -> Eval {
    let mut max_read = 0;
    let l = match eval_side(lhs, vals, cells, n, &mut max_read) {
        Ok(v) => v,
        Err(cell) => return Eval::Stuck { cell },
    };
    let r = match eval_side(rhs, vals, cells, n, &mut max_read) {
        Ok(v) => v,
        Err(cell) => return Eval::Stuck { cell },
    };
    Eval::Done {
        equal: l == r,
        max_read,
    }
}

/// Watches every ground instance of the identity on exactly one cell: the
/// first unset cell its evaluation needs, or — once it evaluates fully and
/// holds — the largest cell it read. Cells are assigned in row-major order,
/// so the watched cell is always ≥ every cell the last evaluation read;
/// whenever one of those reads changes, the watched cell must itself be
/// reassigned first, re-firing the instance before any leaf is reached.
struct InstanceChecker {
    lhs_ops: Vec<Op>,
    rhs_ops: Vec<Op>,
    n: usize,
    instances: Vec<[u8; 3]>,
    watch: Vec<Vec<u32>>,
}

impl InstanceChecker {
    fn new(identity: &Identity, n: usize) -> InstanceChecker {
        let mut lhs_ops = Vec::new();
        let mut rhs_ops = Vec::new();
        compile(identity.lhs(), &mut lhs_ops);
        compile(identity.rhs(), &mut rhs_ops);
        let mut checker = InstanceChecker {
            lhs_ops,
            rhs_ops,
            n,
            instances: Vec::with_capacity(n * n * n),
            watch: vec![Vec::new(); n * n],
        };
        let empty = vec![UNSET; n * n];
        for x in 0..n as u8 {
            for y in 0..n as u8 {
                for z in 0..n as u8 {
                    let idx = checker.instances.len() as u32;
                    checker.instances.push([x, y, z]);
                    match eval_instance(&checker.lhs_ops, &checker.rhs_ops, [x, y, z], &empty, n) {
                        Eval::Stuck { cell } => checker.watch[cell].push(idx),
                        // Both sides of an identity contain products, so on
                        // an empty table every instance needs some cell.
                        Eval::Done { .. } => unreachable!("instance evaluated on an empty table"),
                    }
                }
            }
        }
        checker
    }

    /// Re-evaluates every instance watching `cell` after it was assigned.
    /// Returns false when some instance is now violated (the branch is
    /// dead); the un-processed watchers stay parked on `cell`, which keeps
    /// the watch invariant intact since the cell is unassigned right after.
    fn on_assign(&mut self, cell: usize, cells: &[u8]) -> bool {
        let mut list = std::mem::take(&mut self.watch[cell]);
        let mut i = 0;
        while i < list.len() {
            let idx = list[i];
            let vals = self.instances[idx as usize];
            match eval_instance(&self.lhs_ops, &self.rhs_ops, vals, cells, self.n) {
                Eval::Stuck { cell: next } => {
                    debug_assert!(next > cell);
                    self.watch[next].push(idx);
                }
                Eval::Done {
                    equal: true,
                    max_read,
                } => {
                    // `max_read` can be `cell` itself (it always is when the
                    // instance was parked here stuck), re-entering the list
                    // this loop drained.
                    self.watch[max_read].push(idx);
                }
                Eval::Done { equal: false, .. } => {
                    // Keep the violator and the unprocessed tail parked on
                    // `cell`. Append rather than assign: earlier iterations
                    // may have re-parked completed instances onto `cell`,
                    // and overwriting would strand them outside every watch
                    // list, silently disabling their checks for the rest of
                    // the search.
                    list.drain(..i);
                    self.watch[cell].append(&mut list);
                    return false;
                }
            }
            i += 1;
        }
        true
    }
}

pub(crate) struct RunStats {
    pub(crate) nodes: u64,
    /// The whole search tree for this order was explored.
    pub(crate) exhausted: bool,
    pub(crate) budget_exhausted: bool,
}

/// Streams every order-`n` table satisfying `identity` into `on_leaf`,
/// using incremental propagation. Lets the report module check several
/// column claims against one enumeration pass instead of re-running the
/// search per column.
pub(crate) fn for_each_satisfying<F>(
    identity: &Identity,
    n: usize,
    budget: u64,
    on_leaf: &mut F,
) -> RunStats
where
    F: FnMut(CayleyTable) -> ControlFlow<()>,
{
    run_order(identity, n, Propagation::Incremental, budget, None, on_leaf)
}

/// Core backtracking loop for one order. Every completed Latin square that
/// satisfies the identity is handed to `on_leaf`; breaking stops the search.
/// `forced_first` restricts the top-left cell to a single value (the
/// parallel split). Each tried assignment counts one node against `budget`.
fn run_order<F>(
    identity: &Identity,
    n: usize,
    propagation: Propagation,
    budget: u64,
    forced_first: Option<u8>,
    on_leaf: &mut F,
) -> RunStats
where
    F: FnMut(CayleyTable) -> ControlFlow<()>,
{
    let total = n * n;
    let mut cells = vec![UNSET; total];
    let mut row_free = vec![full_mask(n); n];
    let mut col_free = vec![full_mask(n); n];
    let mut cand = vec![0u16; total];
    let mut checker = match propagation {
        Propagation::Incremental => Some(InstanceChecker::new(identity, n)),
        Propagation::CompleteOnly => None,
    };
    let mut stats = RunStats {
        nodes: 0,
        exhausted: false,
        budget_exhausted: false,
    };
    let mut d = 0;
    cand[0] = match forced_first {
        Some(v) => 1 << v,
        None => full_mask(n),
    };
    loop {
        let avail = cand[d];
        if avail == 0 {
            if d == 0 {
                stats.exhausted = true;
                break;
            }
            d -= 1;
            let v = cells[d];
            cells[d] = UNSET;
            row_free[d / n] |= 1 << v;
            col_free[d % n] |= 1 << v;
            continue;
        }
        let v = avail.trailing_zeros() as u8;
        cand[d] = avail & (avail - 1);
        if stats.nodes == budget {
            stats.budget_exhausted = true;
            break;
        }
        stats.nodes += 1;
        cells[d] = v;
        row_free[d / n] &= !(1 << v);
        col_free[d % n] &= !(1 << v);
        let consistent = match &mut checker {
            Some(ch) => ch.on_assign(d, &cells),
            None => true,
        };
        if consistent {
            if d + 1 == total {
                let table = table_from(n, &cells);
                let keep = match propagation {
                    Propagation::CompleteOnly => satisfies(&table, identity).holds,
                    Propagation::Incremental => {
                        debug_assert!(
                            satisfies(&table, identity).holds,
                            "propagation reached a leaf violating the identity"
                        );
                        true
                    }
                };
                if keep && on_leaf(table).is_break() {
                    break;
                }
            } else {
                d += 1;
                cand[d] = row_free[d / n] & col_free[d % n];
                continue;
            }
        }
        // Dead branch or handled leaf: undo and try the next value here.
        cells[d] = UNSET;
        row_free[d / n] |= 1 << v;
        col_free[d % n] |= 1 << v;
    }
    stats
}

struct OrderResult {
    witness: Option<Witness>,
    match_count: u64,
    tables: Vec<CayleyTable>,
    nodes: u64,
    exhausted: bool,
    budget_exhausted: bool,
}

/// Runs one order (or one forced-first-cell branch of it) under a query's
/// mode and predicate. `witness.nodes_expanded` is left at 0; callers fill
/// in the cumulative count.
fn run_query_order(
    query: &SearchQuery,
    n: usize,
    forced_first: Option<u8>,
    budget: u64,
) -> OrderResult {
    let mut witness = None;
    let mut match_count = 0;
    let mut tables = Vec::new();
    let identity = &query.identity;
    let predicate = query.predicate;
    let mode = query.mode;
    let mut on_leaf = |table: CayleyTable| {
        if !predicate.accepts(&table) {
            return ControlFlow::Continue(());
        }
        match mode {
            Mode::FirstWitness => {
                let sat = satisfies(&table, identity);
                let profile = table.units();
                witness = Some(Witness {
                    order: n,
                    table,
                    sat,
                    profile,
                    nodes_expanded: 0,
                });
                ControlFlow::Break(())
            }
            Mode::CountAll => {
                match_count += 1;
                ControlFlow::Continue(())
            }
            Mode::EnumerateAll => {
                match_count += 1;
                tables.push(table);
                ControlFlow::Continue(())
            }
        }
    };
    let stats = run_order(
        identity,
        n,
        query.propagation,
        budget,
        forced_first,
        &mut on_leaf,
    );
    OrderResult {
        witness,
        match_count,
        tables,
        nodes: stats.nodes,
        exhausted: stats.exhausted,
        budget_exhausted: stats.budget_exhausted,
    }
}
