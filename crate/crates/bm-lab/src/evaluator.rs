//! Semantic checking: does a Cayley table satisfy an identity?
//!
//! Everything here is brute force on purpose — the evaluator is the ground
//! truth that search results and reports are re-verified against, so it
//! stays as close as possible to the definition: plug every assignment into
//! both sides and compare.

use std::fmt;

use serde::Serialize;

use crate::algebra::{CayleyTable, UnitProfile};
use crate::finder::{enumerate_latin_squares, FinderError};
use crate::identity::{Identity, Term, Var};

/// A total assignment of table elements to the variables x, y, z.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Assignment {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl Assignment {
    pub fn new(x: usize, y: usize, z: usize) -> Assignment {
        Assignment { x, y, z }
    }

    /// The element bound to a variable. Assignments are total, so a term
    /// evaluation can never hit an unbound variable.
    pub fn get(self, v: Var) -> usize {
        match v {
            Var::X => self.x,
            Var::Y => self.y,
            Var::Z => self.z,
        }
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x={}, y={}, z={}", self.x, self.y, self.z)
    }
}

/// The outcome of checking one equation on one table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SatReport {
    /// True when both sides agree on every assignment.
    pub holds: bool,
    /// The lexicographically first assignment (x outermost, z innermost)
    /// where the sides differ; present exactly when `holds` is false.
    pub failing_assignment: Option<Assignment>,
    /// Number of assignments evaluated: n³ when the equation holds, the
    /// position of the first failure otherwise.
    pub assignments_checked: usize,
}

/// Evaluates a term bottom-up via table lookups.
pub fn eval_term(t: &Term, q: &CayleyTable, a: Assignment) -> usize {
    match t {
        Term::Var(v) => a.get(*v),
        Term::Product(l, r) => q.mul(eval_term(l, q, a), eval_term(r, q, a)),
    }
}

/// Checks `lhs = rhs` over all n³ assignments in lexicographic order
/// (x outer, y middle, z inner), reporting the first failure.
///
/// Takes raw terms rather than an [`Identity`] so that equations outside the
/// Bol-Moufang shape — associativity `x.yz = xy.z`, say — can be checked too.
pub fn satisfies_equation(q: &CayleyTable, lhs: &Term, rhs: &Term) -> SatReport {
    let n = q.order();
    let mut checked = 0;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let a = Assignment::new(x, y, z);
                checked += 1;
                if eval_term(lhs, q, a) != eval_term(rhs, q, a) {
                    return SatReport {
                        holds: false,
                        failing_assignment: Some(a),
                        assignments_checked: checked,
                    };
                }
            }
        }
    }
    SatReport {
        holds: true,
        failing_assignment: None,
        assignments_checked: checked,
    }
}

/// Checks an identity on a table; see [`satisfies_equation`].
pub fn satisfies(q: &CayleyTable, id: &Identity) -> SatReport {
    satisfies_equation(q, id.lhs(), id.rhs())
}

/// The unit/loop/group classification of a table. Delegates to
/// [`CayleyTable::units`]; exposed here so search predicates and reports
/// share one classification path.
pub fn classify(q: &CayleyTable) -> UnitProfile {
    q.units()
}

/// All Latin squares of order `n` satisfying `id`, in lexicographic
/// (row-major) order.
pub fn satisfying_quasigroups(
    id: &Identity,
    n: usize,
) -> Result<impl Iterator<Item = CayleyTable> + '_, FinderError> {
    Ok(enumerate_latin_squares(n)?.filter(move |q| satisfies(q, id).holds))
}
