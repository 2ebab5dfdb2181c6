//! Execution-order permutations: which of the five bracketings of a
//! four-letter word evaluates its three operators in which order.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::{IdentityError, Term};

/// A permutation of `{1, 2, 3}` stored as the image array `[σ(1), σ(2), σ(3)]`,
/// written in cycle notation (`ε`, `(12)`, `(23)`, `(13)`, `(123)`, `(132)`).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Perm([u8; 3]);

impl Perm {
    /// The identity permutation ε.
    pub const EPS: Perm = Perm([1, 2, 3]);
    /// The transposition (12).
    pub const T12: Perm = Perm([2, 1, 3]);
    /// The transposition (13).
    pub const T13: Perm = Perm([3, 2, 1]);
    /// The transposition (23).
    pub const T23: Perm = Perm([1, 3, 2]);
    /// The 3-cycle (123): 1→2→3→1.
    pub const C123: Perm = Perm([2, 3, 1]);
    /// The 3-cycle (132): 1→3→2→1.
    pub const C132: Perm = Perm([3, 1, 2]);

    /// The image array `[σ(1), σ(2), σ(3)]`.
    pub fn image(self) -> [u8; 3] {
        self.0
    }

    /// Applies the permutation to `i ∈ {1, 2, 3}`.
    pub fn apply(self, i: u8) -> u8 {
        self.0[usize::from(i) - 1]
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.0 {
            [1, 2, 3] => "ε",
            [2, 1, 3] => "(12)",
            [3, 2, 1] => "(13)",
            [1, 3, 2] => "(23)",
            [2, 3, 1] => "(123)",
            [3, 1, 2] => "(132)",
            _ => unreachable!("not a permutation of {{1,2,3}}"),
        };
        f.write_str(s)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm({self})")
    }
}

impl FromStr for Perm {
    type Err = String;

    fn from_str(s: &str) -> Result<Perm, String> {
        match s.trim() {
            "e" | "eps" | "ε" => Ok(Perm::EPS),
            "(12)" => Ok(Perm::T12),
            "(13)" => Ok(Perm::T13),
            "(23)" => Ok(Perm::T23),
            "(123)" => Ok(Perm::C123),
            "(132)" => Ok(Perm::C132),
            other => Err(format!("`{other}` is not a permutation of {{1,2,3}}")),
        }
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Computes the execution-order permutation of a four-leaf side: number the
/// three product operators 1..3 by position in the flattened word; `σ(k)` is
/// the step (innermost first, i.e. post-order) at which operator `k` fires.
///
/// The five bracketings give `((ab)c)d → ε`, `(a(bc))d → (12)`,
/// `(ab)(cd) → (23)`, `a((bc)d) → (132)` and `a(b(cd)) → (13)`; the 3-cycle
/// (123) is not realizable.
pub fn execution_perm(side: &Term) -> Result<Perm, IdentityError> {
    if side.leaf_count() != 4 || side.product_count() != 3 {
        return Err(IdentityError::MalformedSide(format!(
            "`{side}` has {} leaves and {} products; a side needs 4 and 3",
            side.leaf_count(),
            side.product_count()
        )));
    }
    let mut post_order = Vec::with_capacity(3);
    operator_positions(side, 0, &mut post_order);
    let mut image = [0u8; 3];
    for (step, op_pos) in post_order.into_iter().enumerate() {
        image[op_pos - 1] = step as u8 + 1;
    }
    Ok(Perm(image))
}

/// Pushes each product's operator position (leaves strictly to its left,
/// plus one) in post-order; returns the subtree's leaf count.
fn operator_positions(t: &Term, leaves_left: usize, out: &mut Vec<usize>) -> usize {
    match t {
        Term::Var(_) => 1,
        Term::Product(l, r) => {
            let nl = operator_positions(l, leaves_left, out);
            let nr = operator_positions(r, leaves_left + nl, out);
            out.push(leaves_left + nl);
            nl + nr
        }
    }
}
