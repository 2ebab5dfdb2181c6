//! The identity language: terms over x, y, z with one binary product,
//! Bol-Moufang equations, the F1–F60 catalog, execution-order types, and the
//! syntactic transform induced by reversing the operation.
//!
//! A *Bol-Moufang identity* is an equation whose two sides contain the same
//! three variables in the same order, with exactly one variable doubled —
//! four letters and three products per side. The two sides differ only in
//! bracketing, which is why the whole family is characterized by a pair of
//! execution-order permutations plus the slots of the doubled variable.

mod catalog;
mod perm;
mod term;

pub use catalog::{catalog, catalog_json, lookup, CatalogEntry};
pub use perm::{execution_perm, Perm};
pub use term::{parse_term, Term, Var};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Which side of an equation a shape defect was found on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lhs,
    Rhs,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Lhs => "left-hand side",
            Side::Rhs => "right-hand side",
        })
    }
}

/// Why an equation is not a Bol-Moufang identity.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeDefect {
    #[error("{side} has {found} letters where exactly 4 are required")]
    WrongLeafCount { side: Side, found: usize },
    #[error("{side} must use three distinct variables with exactly one of them doubled")]
    DuplicateCountWrong { side: Side },
    #[error("the two sides do not use the same letters the same number of times")]
    LettersDiffer,
    #[error("the two sides list their letters in different orders")]
    OrderDiffers,
}

/// Errors from parsing or analyzing identities.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("not a Bol-Moufang identity: {0}")]
    NotBolMoufang(#[from] ShapeDefect),
    #[error("malformed identity side: {0}")]
    MalformedSide(String),
}

/// A Bol-Moufang equation `lhs = rhs`, labeled when it is one of the 60
/// catalog identities (up to renaming variables by first appearance and
/// swapping the sides).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Identity {
    lhs: Term,
    rhs: Term,
    label: Option<&'static str>,
}

impl Identity {
    /// Builds an identity from two sides, validating the Bol-Moufang shape.
    pub fn new(lhs: Term, rhs: Term) -> Result<Identity, IdentityError> {
        check_side(&lhs, Side::Lhs)?;
        check_side(&rhs, Side::Rhs)?;
        let (left, right) = (lhs.leaves(), rhs.leaves());
        if letter_counts(&left) != letter_counts(&right) {
            return Err(ShapeDefect::LettersDiffer.into());
        }
        if left != right {
            return Err(ShapeDefect::OrderDiffers.into());
        }
        let label = catalog::canonical_label(&lhs, &rhs);
        Ok(Identity { lhs, rhs, label })
    }

    /// Parses an equation like `xy.zx = (xy.z)x`.
    pub fn parse(text: &str) -> Result<Identity, IdentityError> {
        let (lhs, rhs) = term::parse_equation(text)?;
        Identity::new(lhs, rhs)
    }

    pub fn lhs(&self) -> &Term {
        &self.lhs
    }

    pub fn rhs(&self) -> &Term {
        &self.rhs
    }

    /// The catalog label (`F1` … `F60`), if this equation is a catalog
    /// identity up to canonical renaming and side order.
    pub fn label(&self) -> Option<&'static str> {
        self.label
    }

    /// Renames variables by order of first appearance (x, then y, then z)
    /// and re-attaches the catalog label. Idempotent.
    pub fn canonicalize(&self) -> Identity {
        let (lhs, rhs) = canonical_form(&self.lhs, &self.rhs);
        Identity::new(lhs, rhs).expect("renaming preserves the Bol-Moufang shape")
    }

    /// The image of this identity under the operation-reversing transform
    /// `x ∗ y = y · x`: every product is mirrored on both sides, then the
    /// result is canonicalized. Applying it twice gives back
    /// `self.canonicalize()`.
    pub fn parastrophe(&self) -> Identity {
        let id = Identity {
            lhs: self.lhs.mirror(),
            rhs: self.rhs.mirror(),
            label: None,
        };
        id.canonicalize()
    }

    /// The execution-order type: one permutation per side plus the leaf
    /// slots (1–4) holding the doubled variable.
    pub fn identity_type(&self) -> IdentityType {
        let lhs_perm = execution_perm(&self.lhs)
            .expect("a Bol-Moufang side has exactly 4 letters and 3 products");
        let rhs_perm = execution_perm(&self.rhs)
            .expect("a Bol-Moufang side has exactly 4 letters and 3 products");
        IdentityType {
            lhs_perm,
            rhs_perm,
            double_slots: double_slots(&self.lhs),
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

impl fmt::Debug for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.label {
            Some(label) => write!(f, "Identity({label}: {self})"),
            None => write!(f, "Identity({self})"),
        }
    }
}

/// The syntactic type of a Bol-Moufang identity: execution-order
/// permutations of both sides and the two slots of the doubled variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct IdentityType {
    pub lhs_perm: Perm,
    pub rhs_perm: Perm,
    pub double_slots: [u8; 2],
}

impl fmt::Display for IdentityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} = {}, slots {{{},{}}}",
            self.lhs_perm, self.rhs_perm, self.double_slots[0], self.double_slots[1]
        )
    }
}

fn check_side(side: &Term, which: Side) -> Result<(), ShapeDefect> {
    let leaves = side.leaves();
    if leaves.len() != 4 {
        return Err(ShapeDefect::WrongLeafCount {
            side: which,
            found: leaves.len(),
        });
    }
    let counts = letter_counts(&leaves);
    let mut sorted = counts;
    sorted.sort_unstable();
    if sorted != [1, 1, 2] {
        return Err(ShapeDefect::DuplicateCountWrong { side: which });
    }
    Ok(())
}

fn letter_counts(leaves: &[Var]) -> [usize; 3] {
    let mut counts = [0usize; 3];
    for v in leaves {
        counts[v.index()] += 1;
    }
    counts
}

/// The 1-based leaf slots where the doubled variable of a valid side occurs.
fn double_slots(side: &Term) -> [u8; 2] {
    let leaves = side.leaves();
    let counts = letter_counts(&leaves);
    let doubled = Var::ALL[counts.iter().position(|&c| c == 2).expect("one doubled")];
    let mut slots = leaves
        .iter()
        .enumerate()
        .filter(|&(_, v)| *v == doubled)
        .map(|(i, _)| i as u8 + 1);
    [slots.next().unwrap(), slots.next().unwrap()]
}

/// Renames the variables of both sides by order of first appearance
/// (left side first), making equal-up-to-renaming pairs structurally equal.
pub(crate) fn canonical_form(lhs: &Term, rhs: &Term) -> (Term, Term) {
    let mut map = [None::<Var>; 3];
    let mut next = 0;
    for v in lhs.leaves().into_iter().chain(rhs.leaves()) {
        if map[v.index()].is_none() {
            map[v.index()] = Some(Var::ALL[next]);
            next += 1;
        }
    }
    // Unused old variables (impossible for valid sides) still need images to
    // keep the map a bijection.
    for slot in &mut map {
        if slot.is_none() {
            *slot = Some(Var::ALL[next]);
            next += 1;
        }
    }
    let map = map.map(|v| v.expect("every variable mapped"));
    (lhs.rename(&map), rhs.rename(&map))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_attaches_catalog_labels() {
        let f1 = Identity::parse("xy.zx = (xy.z)x").unwrap();
        assert_eq!(f1.label(), Some("F1"));
        assert_eq!(f1.to_string(), "xy.zx = (xy.z)x");
        let f3 = Identity::parse("xy.zx = x(y.zx)").unwrap();
        assert_eq!(f3.label(), Some("F3"));
    }

    #[test]
    fn label_ignores_orientation() {
        // A catalog identity written with its sides swapped keeps its label.
        let flipped = Identity::parse("(xy.z)x = xy.zx").unwrap();
        assert_eq!(flipped.label(), Some("F1"));
    }

    #[test]
    fn non_catalog_shape_is_unlabeled() {
        // Valid Bol-Moufang shape that is not one of the 60: both sides equal.
        let id = Identity::parse("xy.zx = xy.zx").unwrap();
        assert_eq!(id.label(), None);
    }

    #[test]
    fn shape_rejections() {
        match Identity::parse("xy.z = (xy)z").unwrap_err() {
            IdentityError::NotBolMoufang(ShapeDefect::WrongLeafCount { side, found }) => {
                assert_eq!(side, Side::Lhs);
                assert_eq!(found, 3);
            }
            other => panic!("unexpected error: {other:?}"),
        }
        match Identity::parse("xy.xy = (xy.x)y").unwrap_err() {
            IdentityError::NotBolMoufang(ShapeDefect::DuplicateCountWrong { side }) => {
                assert_eq!(side, Side::Lhs);
            }
            other => panic!("unexpected error: {other:?}"),
        }
        match Identity::parse("xy.zx = xy.zy").unwrap_err() {
            IdentityError::NotBolMoufang(ShapeDefect::LettersDiffer) => {}
            other => panic!("unexpected error: {other:?}"),
        }
        match Identity::parse("xy.zx = yx.zx").unwrap_err() {
            IdentityError::NotBolMoufang(ShapeDefect::OrderDiffers) => {}
            other => panic!("unexpected error: {other:?}"),
        }
    }

    #[test]
    fn error_messages_read_well() {
        let err = Identity::parse("xy.zx = xy.zy").unwrap_err();
        assert_eq!(
            err.to_string(),
            "not a Bol-Moufang identity: the two sides do not use the same letters the same number of times"
        );
    }

    #[test]
    fn canonicalize_renames_by_first_appearance() {
        let id = Identity::parse("yx.zy = (yx.z)y").unwrap();
        let canon = id.canonicalize();
        assert_eq!(canon.to_string(), "xy.zx = (xy.z)x");
        assert_eq!(canon.label(), Some("F1"));
        assert_eq!(id.label(), Some("F1"));
        assert_eq!(canon.canonicalize(), canon);
    }

    #[test]
    fn parastrophe_known_pairs() {
        let pairs = [("F1", "F3"), ("F41", "F53"), ("F11", "F24"), ("F19", "F26")];
        for (from, to) in pairs {
            let id = lookup(from).unwrap().identity();
            assert_eq!(id.parastrophe().label(), Some(to), "{from}* should be {to}");
        }
        let f6 = lookup("F6").unwrap().identity();
        assert_eq!(f6.parastrophe().label(), Some("F6"));
    }

    #[test]
    fn parastrophe_is_an_involution() {
        for entry in catalog() {
            let twice = entry.identity().parastrophe().parastrophe();
            assert_eq!(twice, entry.identity().canonicalize(), "{}", entry.label);
        }
    }

    #[test]
    fn types_of_sample_rows() {
        let ty = lookup("F1").unwrap().identity().identity_type();
        assert_eq!(ty.lhs_perm, Perm::T23);
        assert_eq!(ty.rhs_perm, Perm::EPS);
        assert_eq!(ty.double_slots, [1, 4]);
        assert_eq!(ty.to_string(), "(23) = ε, slots {1,4}");

        let ty11 = lookup("F11").unwrap().identity().identity_type();
        assert_eq!((ty11.lhs_perm, ty11.rhs_perm), (Perm::T23, Perm::EPS));
        assert_eq!(ty11.double_slots, [1, 3]);

        let ty42 = lookup("F42").unwrap().identity().identity_type();
        assert_eq!((ty42.lhs_perm, ty42.rhs_perm), (Perm::T23, Perm::EPS));
        assert_eq!(ty42.double_slots, [1, 2]);
    }

    #[test]
    fn catalog_round_trips_through_display() {
        for entry in catalog() {
            let printed = entry.identity().to_string();
            assert_eq!(printed, entry.text, "{} should print verbatim", entry.label);
            let reparsed = Identity::parse(&printed).unwrap();
            assert_eq!(&reparsed, entry.identity(), "{}", entry.label);
        }
    }
}
