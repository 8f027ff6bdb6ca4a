//! Exhaustive enumeration of rank-3 chirotopes on `[n]` and the
//! MacPhersonian posets under the weak order.
//!
//! Two enumeration engines produce identical output: a full scan of all
//! `3^C(n,3)` sign maps (used for `n <= 4`, and as the oracle in tests) and
//! a depth-first backtracking search that assigns triples in lexicographic
//! order and checks every Grassmann-Plücker and basis-exchange instance as
//! soon as its last entry is assigned (used for `n >= 5`, where the scan
//! space reaches `3^20`). The backtracking prefix tree is partitioned among
//! rayon workers and subtree outputs are concatenated in prefix order, so
//! results are byte-identical regardless of worker count.
//!
//! Chirotopes are emitted in ascending encoding order (`'+' < '-' < '0'`),
//! duplicate-free.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chirotope::{choose3, AxiomTables, Chirotope, OrientedMatroid};
use crate::gf2::BitMatrix;
use crate::sign::{Minus, Plus, Sign, Zero};

pub const MIN_GROUND_SET: usize = 3;
pub const MAX_GROUND_SET: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MacphError {
    #[error("ground set size {0} outside supported range {MIN_GROUND_SET}..={MAX_GROUND_SET}")]
    NOutOfRange(usize),
    #[error("poset elements are not deduplicated: {0:?} appears twice")]
    DuplicateElements(String),
    #[error("antisymmetry violated: {0:?} and {1:?} are mutually below each other")]
    Antisymmetry(String, String),
    #[error("hasse diagram contains a cycle")]
    Cycle,
    #[error("malformed poset file: {0}")]
    Parse(String),
}

fn check_n(n: usize) -> Result<(), MacphError> {
    if (MIN_GROUND_SET..=MAX_GROUND_SET).contains(&n) {
        Ok(())
    } else {
        Err(MacphError::NOutOfRange(n))
    }
}

/// Digit order matching ascending encoding bytes `'+' < '-' < '0'`.
const DIGITS: [Sign; 3] = [Plus, Minus, Zero];
const DIGITS_UNIFORM: [Sign; 2] = [Plus, Minus];

/// Every valid chirotope on `[n]`, in ascending encoding order.
pub fn enumerate_chirotopes(n: usize) -> Result<Vec<Chirotope>, MacphError> {
    enumerate_chirotopes_with(n, false)
}

pub fn enumerate_chirotopes_with(
    n: usize,
    uniform_only: bool,
) -> Result<Vec<Chirotope>, MacphError> {
    check_n(n)?;
    let maps = if n <= 4 {
        scan(n, uniform_only)
    } else {
        backtrack(n, uniform_only)
    };
    Ok(maps
        .into_iter()
        .map(|values| Chirotope::new_unchecked(n, values))
        .collect())
}

/// Number of valid chirotopes, without materializing them.
pub fn count_chirotopes(n: usize) -> Result<u64, MacphError> {
    count_chirotopes_with(n, false)
}

pub fn count_chirotopes_with(n: usize, uniform_only: bool) -> Result<u64, MacphError> {
    check_n(n)?;
    let tables = AxiomTables::new(n);
    let ntr = choose3(n);
    let split = split_depth(ntr);
    Ok(prefixes(&tables, ntr, split, uniform_only)
        .into_par_iter()
        .map(|prefix| {
            let mut dfs = Dfs::new(&tables, ntr, uniform_only);
            dfs.resume_count(prefix)
        })
        .sum())
}

/// Oracle engine: enumerates by scanning every sign map, regardless of `n`.
/// Output is identical to [`enumerate_chirotopes`]; the backtracking engine
/// is tested against this one.
pub fn enumerate_chirotopes_exhaustive_scan(n: usize) -> Result<Vec<Chirotope>, MacphError> {
    check_n(n)?;
    Ok(scan(n, false)
        .into_iter()
        .map(|values| Chirotope::new_unchecked(n, values))
        .collect())
}

/// Canonical oriented matroids, deduplicated and sorted.
pub fn enumerate_oms(n: usize) -> Result<Vec<OrientedMatroid>, MacphError> {
    let mut oms: Vec<OrientedMatroid> = enumerate_chirotopes(n)?
        .into_iter()
        .map(OrientedMatroid::from_chirotope)
        .collect();
    oms.sort_by_key(|m| m.chirotope().encode_bytes());
    oms.dedup();
    Ok(oms)
}

/// Full scan of all sign maps in encoding order.
fn scan(n: usize, uniform_only: bool) -> Vec<Vec<Sign>> {
    let tables = AxiomTables::new(n);
    let ntr = choose3(n);
    let digits: &[Sign] = if uniform_only {
        &DIGITS_UNIFORM
    } else {
        &DIGITS
    };
    let base = digits.len() as u64;
    let total = base.pow(ntr as u32);
    let mut out = Vec::new();
    let mut values = vec![Zero; ntr];
    for code in 0..total {
        let mut c = code;
        for pos in (0..ntr).rev() {
            values[pos] = digits[(c % base) as usize];
            c /= base;
        }
        if tables.validate(&values).is_valid() {
            out.push(values.clone());
        }
    }
    out
}

/// Depth-first backtracking with incremental axiom pruning, parallel over
/// prefix subtrees.
fn backtrack(n: usize, uniform_only: bool) -> Vec<Vec<Sign>> {
    let tables = AxiomTables::new(n);
    let ntr = choose3(n);
    let split = split_depth(ntr);
    prefixes(&tables, ntr, split, uniform_only)
        .into_par_iter()
        .map(|prefix| {
            let mut dfs = Dfs::new(&tables, ntr, uniform_only);
            dfs.resume_collect(prefix)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn split_depth(ntr: usize) -> usize {
    // 3^4 = 81 subtrees: enough slack for any sane worker count.
    ntr.min(4)
}

/// All consistent prefix assignments of the first `split` positions, in
/// encoding order.
fn prefixes(tables: &AxiomTables, ntr: usize, split: usize, uniform_only: bool) -> Vec<Vec<Sign>> {
    let digits: &[Sign] = if uniform_only {
        &DIGITS_UNIFORM
    } else {
        &DIGITS
    };
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(split);
    fn rec(
        tables: &AxiomTables,
        digits: &[Sign],
        split: usize,
        prefix: &mut Vec<Sign>,
        scratch: &mut Vec<Sign>,
        out: &mut Vec<Vec<Sign>>,
    ) {
        if prefix.len() == split {
            out.push(prefix.clone());
            return;
        }
        for &d in digits {
            prefix.push(d);
            scratch[..prefix.len()].copy_from_slice(prefix);
            if incremental_ok(tables, scratch, prefix.len() - 1) {
                rec(tables, digits, split, prefix, scratch, out);
            }
            prefix.pop();
        }
    }
    let mut scratch = vec![Zero; ntr];
    rec(tables, digits, split, &mut prefix, &mut scratch, &mut out);
    out
}

/// Checks every instance whose last involved position is `pos`.
fn incremental_ok(tables: &AxiomTables, values: &[Sign], pos: usize) -> bool {
    tables.ex_by_max[pos]
        .iter()
        .all(|&i| tables.exchange[i as usize].holds(values))
        && tables.gp_by_max[pos]
            .iter()
            .all(|&i| tables.gp[i as usize].holds(values))
}

struct Dfs<'a> {
    tables: &'a AxiomTables,
    ntr: usize,
    uniform_only: bool,
    values: Vec<Sign>,
}

impl<'a> Dfs<'a> {
    fn new(tables: &'a AxiomTables, ntr: usize, uniform_only: bool) -> Dfs<'a> {
        Dfs {
            tables,
            ntr,
            uniform_only,
            values: vec![Zero; ntr],
        }
    }

    fn resume_collect(&mut self, prefix: Vec<Sign>) -> Vec<Vec<Sign>> {
        let start = prefix.len();
        self.values[..start].copy_from_slice(&prefix);
        let mut out = Vec::new();
        self.rec(start, &mut |values| out.push(values.to_vec()));
        out
    }

    fn resume_count(&mut self, prefix: Vec<Sign>) -> u64 {
        let start = prefix.len();
        self.values[..start].copy_from_slice(&prefix);
        let mut count = 0u64;
        self.rec(start, &mut |_| count += 1);
        count
    }

    fn rec(&mut self, pos: usize, emit: &mut impl FnMut(&[Sign])) {
        if pos == self.ntr {
            if self.values.iter().any(|s| !s.is_zero()) {
                emit(&self.values);
            }
            return;
        }
        let digits: &[Sign] = if self.uniform_only {
            &DIGITS_UNIFORM
        } else {
            &DIGITS
        };
        for &d in digits {
            self.values[pos] = d;
            if incremental_ok(self.tables, &self.values, pos) {
                self.rec(pos + 1, emit);
            }
        }
        self.values[pos] = Zero;
    }
}

/// A finite poset with materialized strict order, labels, and Hasse diagram
/// (the transitive reduction of the order).
pub struct Poset {
    labels: Vec<String>,
    less: BitMatrix,
    hasse: Vec<(u32, u32)>,
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Poset({} nodes, {} hasse edges)",
            self.len(),
            self.hasse.len()
        )
    }
}

/// On-disk schema: node labels plus covering pairs.
#[derive(Serialize, Deserialize)]
pub struct PosetFile {
    pub nodes: Vec<String>,
    pub hasse: Vec<[u32; 2]>,
}

impl Poset {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn strictly_less(&self, i: usize, j: usize) -> bool {
        i != j && self.less.get(i, j)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        i == j || self.less.get(i, j)
    }

    /// Covering pairs `(lo, hi)`, sorted.
    pub fn hasse(&self) -> &[(u32, u32)] {
        &self.hasse
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| !self.strictly_less(j, i)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| !self.strictly_less(i, j)))
            .collect()
    }

    /// Number of chains of each size: `f[k]` counts chains of `k+1` elements.
    pub fn chain_f_vector(&self) -> Vec<u64> {
        let m = self.len();
        let succ: Vec<Vec<u32>> = (0..m)
            .map(|v| {
                (0..m)
                    .filter(|&u| self.strictly_less(v, u))
                    .map(|u| u as u32)
                    .collect()
            })
            .collect();
        let mut f = Vec::new();
        // ending[v] = number of chains of the current size with top v
        let mut ending: Vec<u64> = vec![1; m];
        loop {
            let total: u64 = ending.iter().sum();
            if total == 0 {
                break;
            }
            f.push(total);
            let mut next = vec![0u64; m];
            for v in 0..m {
                if ending[v] == 0 {
                    continue;
                }
                for &u in &succ[v] {
                    next[u as usize] += ending[v];
                }
            }
            ending = next;
        }
        f
    }

    /// Visits every nonempty chain once, by depth-first extension upward;
    /// chains are passed in ascending poset order.
    pub fn for_each_chain(&self, mut visit: impl FnMut(&[u32])) {
        let m = self.len();
        let succ: Vec<Vec<u32>> = (0..m)
            .map(|v| {
                (0..m)
                    .filter(|&u| self.strictly_less(v, u))
                    .map(|u| u as u32)
                    .collect()
            })
            .collect();
        let mut chain: Vec<u32> = Vec::new();
        let mut stack: Vec<(u32, usize)> = Vec::new();
        for start in 0..m as u32 {
            stack.push((start, 0));
            while let Some((node, depth)) = stack.pop() {
                chain.truncate(depth);
                chain.push(node);
                visit(&chain);
                for &nxt in &succ[node as usize] {
                    stack.push((nxt, depth + 1));
                }
            }
            chain.clear();
        }
    }

    /// All chains, for small posets.
    pub fn chains(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        self.for_each_chain(|c| out.push(c.to_vec()));
        out
    }

    pub fn to_file(&self) -> PosetFile {
        PosetFile {
            nodes: self.labels.clone(),
            hasse: self.hasse.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    /// Rebuilds a poset from its file form: the order is the transitive
    /// closure of the covering pairs.
    pub fn from_file(file: PosetFile) -> Result<Poset, MacphError> {
        let m = file.nodes.len();
        let mut succ: Vec<Vec<u32>> = vec![Vec::new(); m];
        let mut indeg = vec![0usize; m];
        for &[lo, hi] in &file.hasse {
            if lo as usize >= m || hi as usize >= m || lo == hi {
                return Err(MacphError::Parse(format!("bad hasse pair [{lo}, {hi}]")));
            }
            succ[lo as usize].push(hi);
            indeg[hi as usize] += 1;
        }
        // Kahn topological order, then closure in reverse.
        let mut queue: Vec<usize> = (0..m).filter(|&v| indeg[v] == 0).collect();
        let mut topo = Vec::with_capacity(m);
        while let Some(v) = queue.pop() {
            topo.push(v);
            for &u in &succ[v] {
                indeg[u as usize] -= 1;
                if indeg[u as usize] == 0 {
                    queue.push(u as usize);
                }
            }
        }
        if topo.len() != m {
            return Err(MacphError::Cycle);
        }
        let mut less = BitMatrix::zero(m, m.max(1));
        for &v in topo.iter().rev() {
            for &u in &succ[v] {
                less.set(v, u as usize, true);
                less.row_or_into(u as usize, v);
            }
        }
        let mut hasse: Vec<(u32, u32)> = file.hasse.iter().map(|&[a, b]| (a, b)).collect();
        hasse.sort_unstable();
        Ok(Poset {
            labels: file.nodes,
            less,
            hasse,
        })
    }
}

fn transpose(less: &BitMatrix, m: usize) -> BitMatrix {
    let mut t = BitMatrix::zero(m, m.max(1));
    for i in 0..m {
        for j in 0..m {
            if less.get(i, j) {
                t.set(j, i, true);
            }
        }
    }
    t
}

/// Materializes a poset from elements and a reflexive order predicate.
/// Elements must be deduplicated; antisymmetry violations are structural
/// errors. The Hasse diagram is the transitive reduction: `(a,c)` is kept
/// iff no `b` has `a < b < c`.
pub fn build_poset<T>(
    elements: &[T],
    label_of: impl Fn(&T) -> String,
    leq: impl Fn(&T, &T) -> bool,
) -> Result<Poset, MacphError> {
    let m = elements.len();
    let labels: Vec<String> = elements.iter().map(&label_of).collect();
    {
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(MacphError::DuplicateElements(w[0].clone()));
        }
    }
    let mut less = BitMatrix::zero(m, m.max(1));
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            if leq(&elements[i], &elements[j]) {
                if leq(&elements[j], &elements[i]) {
                    return Err(MacphError::Antisymmetry(
                        labels[i].clone(),
                        labels[j].clone(),
                    ));
                }
                less.set(i, j, true);
            }
        }
    }
    let greater = transpose(&less, m);
    let mut hasse = Vec::new();
    for a in 0..m {
        for c in 0..m {
            if less.get(a, c) && !crate::gf2::rows_intersect_between(&less, a, &greater, c) {
                hasse.push((a as u32, c as u32));
            }
        }
    }
    hasse.sort_unstable();
    Ok(Poset {
        labels,
        less,
        hasse,
    })
}

/// The MacPhersonian `MacP(3,n)`: all oriented matroids under the weak order.
pub fn macphersonian(n: usize) -> Result<Poset, MacphError> {
    let oms = enumerate_oms(n)?;
    build_poset(&oms, |m| m.text_form(), |a, b| a.weak_leq(b))
}

/// The oriented MacPhersonian `OMacP(3,n)`: all chirotopes under the weak
/// order.
pub fn oriented_macphersonian(n: usize) -> Result<Poset, MacphError> {
    let chis = enumerate_chirotopes(n)?;
    build_poset(&chis, |c| c.text_form(), |a, b| a.weak_leq(b))
}
