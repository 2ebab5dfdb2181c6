//! Cayley-table quasigroups: validation, divisions, unit and idempotent
//! detection, and the (12)-parastrophe (table transpose).

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Why a grid is not the Cayley table of a finite quasigroup.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("table is empty")]
    Empty,
    #[error("table is not square: row {row} has {found} entries, expected {expected}")]
    NotSquare {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("entry {value} at row {row}, column {col} is outside 0..{order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("row {0} is not a permutation of 0..n")]
    RowNotPermutation(usize),
    #[error("column {0} is not a permutation of 0..n")]
    ColumnNotPermutation(usize),
}

/// Why a table file does not parse. The format is: optional `#` comment
/// lines, one `order n` header, then `n` rows of `n` whitespace-separated
/// integers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableTextError {
    #[error("line {line}: expected an `order <n>` header")]
    MissingOrder { line: usize },
    #[error("line {line}: cannot parse `{token}` as an element")]
    BadEntry { line: usize, token: String },
    #[error("expected {expected} rows of table data, found {found}")]
    WrongRowCount { expected: usize, found: usize },
    #[error(transparent)]
    Invalid(#[from] TableError),
}

/// The Cayley table of a finite quasigroup on `{0..n-1}`.
///
/// [`CayleyTable::validate`] admits exactly the Latin squares (every row and
/// column a permutation), which makes both divisions total. Values are
/// immutable after validation and safe to share across threads.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CayleyTable {
    order: usize,
    /// Row-major: `cells[x * order + y]` is `x · y`.
    cells: Vec<usize>,
}

/// Units, idempotents and associativity data computed from one table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitProfile {
    /// The unique `f` with `f·x = x` for all `x`, if present.
    pub left_unit: Option<usize>,
    /// The unique `e` with `x·e = x` for all `x`, if present.
    pub right_unit: Option<usize>,
    /// The unique `m` with `x·x = m` for all `x`, if present.
    pub middle_unit: Option<usize>,
    /// All `i` with `i·i = i`, ascending.
    pub idempotents: Vec<usize>,
    /// True iff both a left and a right unit exist.
    pub is_loop: bool,
    /// True iff the operation is associative (an associative quasigroup is
    /// a group: it always has a two-sided unit).
    pub is_group: bool,
    /// Lexicographically first `(x, y, z)` with `(x·y)·z ≠ x·(y·z)`, if any.
    pub associativity_witness: Option<(usize, usize, usize)>,
}

impl CayleyTable {
    /// Validates a grid as a Latin square and wraps it. Reports the first
    /// offending row, then the first offending column.
    pub fn validate(grid: Vec<Vec<usize>>) -> Result<CayleyTable, TableError> {
        let n = grid.len();
        if n == 0 {
            return Err(TableError::Empty);
        }
        let mut cells = Vec::with_capacity(n * n);
        for (r, row) in grid.iter().enumerate() {
            if row.len() != n {
                return Err(TableError::NotSquare {
                    row: r,
                    found: row.len(),
                    expected: n,
                });
            }
            let mut seen = vec![false; n];
            for (c, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(TableError::EntryOutOfRange {
                        row: r,
                        col: c,
                        value: v,
                        order: n,
                    });
                }
                if seen[v] {
                    return Err(TableError::RowNotPermutation(r));
                }
                seen[v] = true;
            }
            cells.extend_from_slice(row);
        }
        for c in 0..n {
            let mut seen = vec![false; n];
            for r in 0..n {
                let v = cells[r * n + c];
                if seen[v] {
                    return Err(TableError::ColumnNotPermutation(c));
                }
                seen[v] = true;
            }
        }
        Ok(CayleyTable { order: n, cells })
    }

    /// Wraps cells that are already known to form a Latin square (used by the
    /// enumerator and the transpose, which preserve the property).
    pub(crate) fn from_cells_unchecked(order: usize, cells: Vec<usize>) -> CayleyTable {
        debug_assert_eq!(cells.len(), order * order);
        CayleyTable { order, cells }
    }

    /// The number of elements.
    pub fn order(&self) -> usize {
        self.order
    }

    /// `x · y`.
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.order + y]
    }

    /// Left division `x \ y`: the unique `z` with `x·z = y`.
    pub fn left_divide(&self, x: usize, y: usize) -> usize {
        let row = &self.cells[x * self.order..(x + 1) * self.order];
        row.iter()
            .position(|&v| v == y)
            .expect("row is a permutation")
    }

    /// Right division `y / x`: the unique `z` with `z·x = y`.
    pub fn right_divide(&self, y: usize, x: usize) -> usize {
        (0..self.order)
            .find(|&z| self.mul(z, x) == y)
            .expect("column is a permutation")
    }

    /// The (12)-parastrophe `x ∗ y = y · x`, i.e. the transposed table.
    pub fn parastrophe12(&self) -> CayleyTable {
        let n = self.order;
        let mut cells = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                cells[y * n + x] = self.cells[x * n + y];
            }
        }
        CayleyTable { order: n, cells }
    }

    /// The isomorphic table obtained by renaming element `i` to `perm[i]`
    /// everywhere: rows, columns, and entries simultaneously.
    pub fn relabel(&self, perm: &[usize]) -> CayleyTable {
        let n = self.order;
        debug_assert_eq!(perm.len(), n);
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let mut cells = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                cells[x * n + y] = perm[self.mul(inv[x], inv[y])];
            }
        }
        CayleyTable { order: n, cells }
    }

    /// Computes units, idempotents and the exhaustive associativity check
    /// (`n³` triples, first failure recorded).
    pub fn units(&self) -> UnitProfile {
        let n = self.order;
        let left_unit = (0..n).find(|&f| (0..n).all(|x| self.mul(f, x) == x));
        let right_unit = (0..n).find(|&e| (0..n).all(|x| self.mul(x, e) == x));
        let m = self.mul(0, 0);
        let middle_unit = (0..n).all(|x| self.mul(x, x) == m).then_some(m);
        let idempotents = (0..n).filter(|&i| self.mul(i, i) == i).collect();
        let associativity_witness = self.first_nonassociative_triple();
        UnitProfile {
            left_unit,
            right_unit,
            middle_unit,
            idempotents,
            is_loop: left_unit.is_some() && right_unit.is_some(),
            is_group: associativity_witness.is_none(),
            associativity_witness,
        }
    }

    fn first_nonassociative_triple(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul(x, y);
                for z in 0..n {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// The local units of `y`: `f_y = y / y` (so `f_y·y = y`) and
    /// `e_y = y \ y` (so `y·e_y = y`).
    pub fn local_units(&self, y: usize) -> (usize, usize) {
        (self.right_divide(y, y), self.left_divide(y, y))
    }

    /// The table as a vector of rows.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|r| self.cells[r * self.order..(r + 1) * self.order].to_vec())
            .collect()
    }

    /// Parses the text format: `order n` then `n` rows of `n` integers;
    /// `#` starts a comment, blank lines are skipped.
    pub fn from_text(text: &str) -> Result<CayleyTable, TableTextError> {
        let mut content = text.lines().enumerate().filter_map(|(i, line)| {
            let line = line.split('#').next().unwrap_or("").trim();
            (!line.is_empty()).then_some((i + 1, line))
        });
        let (line, header) = content
            .next()
            .ok_or(TableTextError::MissingOrder { line: 1 })?;
        let n: usize = header
            .strip_prefix("order")
            .map(str::trim)
            .and_then(|t| t.parse().ok())
            .ok_or(TableTextError::MissingOrder { line })?;
        let mut rows = Vec::with_capacity(n);
        for (line, data) in content {
            let mut row = Vec::new();
            for token in data.split_whitespace() {
                row.push(token.parse().map_err(|_| TableTextError::BadEntry {
                    line,
                    token: token.to_string(),
                })?);
            }
            rows.push(row);
        }
        if rows.len() != n {
            return Err(TableTextError::WrongRowCount {
                expected: n,
                found: rows.len(),
            });
        }
        Ok(CayleyTable::validate(rows)?)
    }

    /// Renders the text format accepted by [`CayleyTable::from_text`].
    pub fn to_text(&self) -> String {
        let mut out = format!("order {}\n", self.order);
        for row in self.rows() {
            let words: Vec<String> = row.iter().map(usize::to_string).collect();
            out.push_str(&words.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CayleyTable(order {}, {:?})", self.order, self.rows())
    }
}

/// Serializes as a JSON array of rows.
impl Serialize for CayleyTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.rows())
    }
}
