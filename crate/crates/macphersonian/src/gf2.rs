//! GF(2) linear algebra: dense bitset matrices and a sparse column
//! reduction for boundary-matrix ranks.
//!
//! The dense path stores each row as machine words and eliminates with
//! whole-row XOR; it is the default for the small matrices this crate
//! mostly sees. The sparse path is persistence-style column reduction for
//! the large order complexes where a dense matrix would not fit in memory.

/// A dense 0/1 matrix with bit-packed rows.
#[derive(Clone)]
pub struct BitMatrix {
    nrows: usize,
    ncols: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> BitMatrix {
        let words = ncols.div_ceil(64).max(1);
        BitMatrix {
            nrows,
            ncols,
            words,
            bits: vec![0; nrows * words],
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        debug_assert!(r < self.nrows && c < self.ncols);
        let w = r * self.words + c / 64;
        let m = 1u64 << (c % 64);
        if value {
            self.bits[w] |= m;
        } else {
            self.bits[w] &= !m;
        }
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.nrows && c < self.ncols);
        self.bits[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        let w = r * self.words + c / 64;
        self.bits[w] ^= 1u64 << (c % 64);
    }

    /// True when rows `r1` and `r2` share a set bit.
    pub fn rows_intersect(&self, r1: usize, r2: usize) -> bool {
        let a = &self.bits[r1 * self.words..(r1 + 1) * self.words];
        let b = &self.bits[r2 * self.words..(r2 + 1) * self.words];
        a.iter().zip(b).any(|(x, y)| x & y != 0)
    }

    fn row_words(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words..(r + 1) * self.words]
    }

    pub fn row_or_into(&mut self, src: usize, dst: usize) {
        let (s, d) = (src * self.words, dst * self.words);
        for w in 0..self.words {
            let v = self.bits[s + w];
            self.bits[d + w] |= v;
        }
    }

    /// Rank over GF(2) by row elimination with column pivoting.
    pub fn rank(mut self) -> usize {
        let mut rank = 0;
        for col in 0..self.ncols {
            let word = col / 64;
            let mask = 1u64 << (col % 64);
            let Some(pivot) =
                (rank..self.nrows).find(|&r| self.bits[r * self.words + word] & mask != 0)
            else {
                continue;
            };
            if pivot != rank {
                for w in 0..self.words {
                    self.bits
                        .swap(pivot * self.words + w, rank * self.words + w);
                }
            }
            for r in 0..self.nrows {
                if r != rank && self.bits[r * self.words + word] & mask != 0 {
                    for w in 0..self.words {
                        let v = self.bits[rank * self.words + w];
                        self.bits[r * self.words + w] ^= v;
                    }
                }
            }
            rank += 1;
            if rank == self.nrows {
                break;
            }
        }
        rank
    }
}

/// True when row `ra` of `a` and row `rb` of `b` share a set bit; the
/// matrices must have the same column count.
pub fn rows_intersect_between(a: &BitMatrix, ra: usize, b: &BitMatrix, rb: usize) -> bool {
    debug_assert_eq!(a.ncols, b.ncols);
    a.row_words(ra)
        .iter()
        .zip(b.row_words(rb))
        .any(|(x, y)| x & y != 0)
}

/// Outcome of reducing one sparse boundary matrix.
pub struct SparseReduction {
    pub rank: usize,
    /// Row indices claimed as pivots by some column.
    pub pivot_rows: Vec<bool>,
}

/// Persistence-style column reduction over GF(2).
///
/// `columns[j]` is the strictly ascending list of nonzero row indices of
/// column `j`, or `None` for a column known in advance to reduce to zero
/// (the clearing optimization: pivot rows of the next-higher boundary
/// matrix). Columns are consumed.
pub fn reduce_columns(columns: Vec<Option<Vec<u32>>>, nrows: usize) -> SparseReduction {
    let mut pivot_of: Vec<u32> = vec![u32::MAX; nrows];
    let mut reduced: Vec<Vec<u32>> = Vec::new();
    let mut rank = 0;
    for col in columns {
        let Some(mut col) = col else { continue };
        loop {
            let Some(&low) = col.last() else { break };
            let owner = pivot_of[low as usize];
            if owner == u32::MAX {
                pivot_of[low as usize] = reduced.len() as u32;
                rank += 1;
                break;
            }
            col = xor_sorted(&col, &reduced[owner as usize]);
        }
        if !col.is_empty() {
            reduced.push(col);
        }
    }
    let pivot_rows = pivot_of.iter().map(|&p| p != u32::MAX).collect();
    SparseReduction { rank, pivot_rows }
}

/// Symmetric difference of two strictly ascending index lists.
fn xor_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}
