//! Shared helpers for the integration tests: an independent Latin-square
//! oracle built row-by-row from permutations (structurally unlike the
//! library's cell-by-cell finder), and a seeded random-table generator.

#![allow(dead_code)]

use bm_lab::CayleyTable;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    let mut used = vec![false; n];
    fn go(n: usize, current: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                go(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    go(n, &mut current, &mut used, &mut out);
    out
}

/// Every order-`n` Latin square, enumerated by stacking whole row
/// permutations and rejecting column clashes. Independent oracle for the
/// library's enumerator; practical for `n <= 4`.
pub fn naive_latin_squares(n: usize) -> Vec<CayleyTable> {
    let perms = permutations(n);
    let mut rows: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    fn clashes(perms: &[Vec<usize>], rows: &[usize], candidate: usize) -> bool {
        perms[candidate]
            .iter()
            .enumerate()
            .any(|(col, &v)| rows.iter().any(|&r| perms[r][col] == v))
    }
    fn go(perms: &[Vec<usize>], n: usize, rows: &mut Vec<usize>, out: &mut Vec<CayleyTable>) {
        if rows.len() == n {
            let grid: Vec<Vec<usize>> = rows.iter().map(|&r| perms[r].clone()).collect();
            out.push(CayleyTable::validate(grid).expect("oracle rows form a Latin square"));
            return;
        }
        for candidate in 0..perms.len() {
            if !clashes(perms, rows, candidate) {
                rows.push(candidate);
                go(perms, n, rows, out);
                rows.pop();
            }
        }
    }
    go(&perms, n, &mut rows, &mut out);
    out
}

/// A uniformly seeded (not uniformly distributed) random Latin square,
/// built cell-by-cell with shuffled candidates and backtracking.
pub fn random_latin(rng: &mut ChaCha8Rng, n: usize) -> CayleyTable {
    let total = n * n;
    // candidate stacks per depth, pre-shuffled when first entered
    let mut options: Vec<Vec<usize>> = vec![Vec::new(); total];
    let mut cells: Vec<Option<usize>> = vec![None; total];
    let mut d = 0;
    let mut fresh = true;
    loop {
        if d == total {
            let grid: Vec<Vec<usize>> = (0..n)
                .map(|r| (0..n).map(|c| cells[r * n + c].unwrap()).collect())
                .collect();
            return CayleyTable::validate(grid).expect("backtracker only places legal values");
        }
        if fresh {
            let row = d / n;
            let col = d % n;
            let mut legal: Vec<usize> = (0..n)
                .filter(|&v| {
                    (0..col).all(|c| cells[row * n + c] != Some(v))
                        && (0..row).all(|r| cells[r * n + col] != Some(v))
                })
                .collect();
            legal.shuffle(rng);
            options[d] = legal;
        }
        match options[d].pop() {
            Some(v) => {
                cells[d] = Some(v);
                d += 1;
                fresh = true;
            }
            None => {
                assert!(d > 0, "order-{n} backtracking cannot dead-end at the root");
                d -= 1;
                cells[d] = None;
                fresh = false;
            }
        }
    }
}

/// Deterministic RNG for a named test.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The Cayley table of the cyclic group Z_n.
pub fn cyclic_group(n: usize) -> CayleyTable {
    let grid: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).map(|y| (x + y) % n).collect())
        .collect();
    CayleyTable::validate(grid).expect("cyclic groups are Latin squares")
}
