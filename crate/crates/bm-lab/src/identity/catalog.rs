//! The catalog of the 60 classical Bol-Moufang identities F1–F60, stored
//! exactly as the reference table prints them (its row order groups the
//! identities by classification, so labels do not appear in numeric order).

use std::collections::HashMap;
use std::sync::LazyLock;

use serde_json::{json, Value};

use super::{canonical_form, Identity, Term};

/// One catalog row: label, optional conventional name, identity text.
pub struct CatalogEntry {
    pub label: &'static str,
    pub abbrev: Option<&'static str>,
    pub text: &'static str,
    identity: Identity,
}

impl CatalogEntry {
    /// The parsed identity (label attached).
    pub fn identity(&self) -> &Identity {
        &self.identity
    }
}

/// `(label, abbrev, text)` in the reference table's row order.
const ROWS: [(&str, Option<&str>, &str); 60] = [
    ("F1", None, "xy.zx = (xy.z)x"),
    ("F3", None, "xy.zx = x(y.zx)"),
    ("F5", None, "(xy.z)x = (x.yz)x"),
    ("F10", None, "x(y.zx) = x(yz.x)"),
    ("F11", None, "xy.xz = (xy.x)z"),
    ("F12", None, "xy.xz = (x.yx)z"),
    ("F14", None, "xy.xz = x(y.xz)"),
    ("F18", None, "(x.yx)z = x(yx.z)"),
    ("F20", None, "x(yx.z) = x(y.xz)"),
    ("F21", None, "yx.zx = (yx.z)x"),
    ("F23", None, "yx.zx = y(xz.x)"),
    ("F24", None, "yx.zx = y(x.zx)"),
    ("F25", None, "(yx.z)x = (y.xz)x"),
    ("F28", None, "(y.xz)x = y(xz.x)"),
    ("F31", None, "yx.xz = (yx.x)z"),
    ("F32", None, "yx.xz = (y.xx)z"),
    ("F33", None, "yx.xz = y(xx.z)"),
    ("F34", None, "yx.xz = y(x.xz)"),
    ("F47", None, "(x.xy)z = x(xy.z)"),
    ("F50", None, "x(x.yz) = x(xy.z)"),
    ("F55", None, "(yz.x)x = (y.zx)x"),
    ("F58", None, "(y.zx)x = y(zx.x)"),
    ("F4", Some("middle Moufang"), "xy.zx = x(yz.x)"),
    ("F2", Some("middle Moufang"), "xy.zx = (x.yz)x"),
    ("F6", Some("extra identity"), "(xy.z)x = x(y.zx)"),
    ("F13", Some("extra identity"), "xy.xz = x(yx.z)"),
    ("F17", Some("left Moufang"), "(xy.x)z = x(y.xz)"),
    ("F22", Some("extra identity"), "yx.zx = (y.xz)x"),
    ("F27", Some("right Moufang"), "(yx.z)x = y(x.zx)"),
    ("F38", None, "(y.xx)z = y(xx.z)"),
    ("F41", Some("LC identity"), "xx.yz = (x.xy)z"),
    ("F53", Some("RC identity"), "yz.xx = y(zx.x)"),
    ("F7", None, "(xy.z)x = x(yz.x)"),
    ("F16", None, "(xy.x)z = x(yx.z)"),
    ("F26", Some("right Bol"), "(yx.z)x = y(xz.x)"),
    ("F36", Some("RC identity"), "(yx.x)z = y(xx.z)"),
    ("F40", None, "y(xx.z) = y(x.xz)"),
    ("F42", None, "xx.yz = (xx.y)z"),
    ("F43", None, "xx.yz = x(x.yz)"),
    ("F44", None, "xx.yz = x(xy.z)"),
    ("F45", None, "(x.xy)z = (xx.y)z"),
    ("F48", Some("LC identity"), "(xx.y)z = x(x.yz)"),
    ("F49", None, "(xx.y)z = x(xy.z)"),
    ("F8", None, "(x.yz)x = x(y.zx)"),
    ("F19", Some("left Bol"), "(x.yx)z = x(y.xz)"),
    ("F29", None, "(y.xz)x = y(x.zx)"),
    ("F35", None, "(yx.x)z = (y.xx)z"),
    ("F39", Some("LC identity"), "(y.xx)z = y(x.xz)"),
    ("F51", None, "yz.xx = (yz.x)x"),
    ("F52", None, "yz.xx = (y.zx)x"),
    ("F54", None, "yz.xx = y(z.xx)"),
    ("F57", Some("RC identity"), "(yz.x)x = y(z.xx)"),
    ("F59", None, "(y.zx)x = y(z.xx)"),
    ("F60", None, "y(zx.x) = y(z.xx)"),
    ("F9", None, "(x.yz)x = x(yz.x)"),
    ("F15", None, "(xy.x)z = (x.yx)z"),
    ("F30", None, "y(xz.x) = y(x.zx)"),
    ("F37", Some("C identity"), "(yx.x)z = y(x.xz)"),
    ("F46", Some("LC identity"), "(x.xy)z = x(x.yz)"),
    ("F56", Some("RC identity"), "(yz.x)x = y(zx.x)"),
];

/// Maps the canonical form of each catalog identity to its label. Many
/// catalog rows are not their own canonical form (their words start with y),
/// so lookups always canonicalize first.
static CANON_INDEX: LazyLock<HashMap<(Term, Term), &'static str>> = LazyLock::new(|| {
    let mut index = HashMap::with_capacity(60);
    for (label, _, text) in ROWS {
        let (lhs, rhs) = super::term::parse_equation(text)
            .unwrap_or_else(|e| panic!("catalog text for {label} does not parse: {e}"));
        let key = canonical_form(&lhs, &rhs);
        let clash = index.insert(key, label);
        assert!(clash.is_none(), "canonical collision: {label} vs {clash:?}");
    }
    index
});

static CATALOG: LazyLock<Vec<CatalogEntry>> = LazyLock::new(|| {
    ROWS.iter()
        .map(|&(label, abbrev, text)| {
            let identity = Identity::parse(text)
                .unwrap_or_else(|e| panic!("catalog text for {label} is malformed: {e}"));
            assert_eq!(identity.label(), Some(label), "label mismatch for {label}");
            CatalogEntry {
                label,
                abbrev,
                text,
                identity,
            }
        })
        .collect()
});

static BY_LABEL: LazyLock<HashMap<&'static str, usize>> =
    LazyLock::new(|| ROWS.iter().enumerate().map(|(i, r)| (r.0, i)).collect());

/// All 60 identities in the reference table's row order.
pub fn catalog() -> &'static [CatalogEntry] {
    &CATALOG
}

/// Finds a catalog entry by its label (`F1` … `F60`).
pub fn lookup(label: &str) -> Option<&'static CatalogEntry> {
    BY_LABEL.get(label).map(|&i| &CATALOG[i])
}

/// The label of the catalog identity equal to `lhs = rhs` after renaming
/// variables by first appearance, comparing both orientations (an identity
/// and its flipped form are the same equation; same orientation wins).
pub(crate) fn canonical_label(lhs: &Term, rhs: &Term) -> Option<&'static str> {
    if let Some(&label) = CANON_INDEX.get(&canonical_form(lhs, rhs)) {
        return Some(label);
    }
    CANON_INDEX.get(&canonical_form(rhs, lhs)).copied()
}

/// The catalog as a JSON array of
/// `{label, text, abbrev, lhs_perm, rhs_perm, double_slots}`.
pub fn catalog_json() -> Value {
    Value::Array(
        catalog()
            .iter()
            .map(|entry| {
                let ty = entry.identity().identity_type();
                json!({
                    "label": entry.label,
                    "text": entry.text,
                    "abbrev": entry.abbrev,
                    "lhs_perm": ty.lhs_perm,
                    "rhs_perm": ty.rhs_perm,
                    "double_slots": ty.double_slots,
                })
            })
            .collect(),
    )
}
