//! Smith normal form over the integers, for integral homology with torsion.
//!
//! Dense, exact, BigInt entries; intended for the small boundary matrices
//! of order complexes at desk scale (the caller enforces a simplex budget).

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Diagonal of the Smith normal form of `m`: nonnegative entries
/// `d_1 | d_2 | ...`, zeros dropped. The number of entries is the rank.
pub fn smith_diagonal(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        let Some((pr, pc)) = best_pivot(&m, t) else {
            break;
        };
        m.swap(t, pr);
        swap_cols(&mut m, t, pc);
        'improve: loop {
            // Euclidean descent on the pivot column.
            for r in t + 1..nrows {
                if m[r][t].is_zero() {
                    continue;
                }
                let q = &m[r][t] / &m[t][t];
                if !q.is_zero() {
                    for c in t..ncols {
                        let sub = &q * &m[t][c];
                        m[r][c] -= sub;
                    }
                }
                if !m[r][t].is_zero() {
                    m.swap(t, r);
                    continue 'improve;
                }
            }
            // Euclidean descent on the pivot row.
            for c in t + 1..ncols {
                if m[t][c].is_zero() {
                    continue;
                }
                let q = &m[t][c] / &m[t][t];
                if !q.is_zero() {
                    for r in t..nrows {
                        let sub = &q * &m[r][t];
                        m[r][c] -= sub;
                    }
                }
                if !m[t][c].is_zero() {
                    swap_cols(&mut m, t, c);
                    continue 'improve;
                }
            }
            // Pivot must divide the remaining block; if not, fold the
            // offending row in and descend again.
            for r in t + 1..nrows {
                if (t + 1..ncols).any(|c| !(&m[r][c] % &m[t][t]).is_zero()) {
                    for c in t..ncols {
                        let add = m[r][c].clone();
                        m[t][c] += add;
                    }
                    continue 'improve;
                }
            }
            break;
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}

fn best_pivot(m: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut best: Option<(usize, usize)> = None;
    for r in t..m.len() {
        for c in t..ncols {
            if m[r][c].is_zero() {
                continue;
            }
            match best {
                Some((br, bc)) if m[br][bc].abs() <= m[r][c].abs() => {}
                _ => best = Some((r, c)),
            }
        }
    }
    best
}

fn swap_cols(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}
