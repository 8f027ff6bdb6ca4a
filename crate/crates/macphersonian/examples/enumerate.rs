//! Census of rank-3 chirotopes and oriented matroids on small ground sets.
//!
//! Run with: cargo run --release --example enumerate

use macphersonian::macph::{count_chirotopes, enumerate_chirotopes_with, enumerate_oms};

fn main() {
    println!(
        "{:>3} {:>12} {:>8} {:>10}",
        "n", "chirotopes", "oms", "uniform"
    );
    for n in 3..=5 {
        let chirotopes = count_chirotopes(n).unwrap();
        let oms = enumerate_oms(n).unwrap().len();
        let uniform = enumerate_chirotopes_with(n, true).unwrap().len();
        println!("{n:>3} {chirotopes:>12} {oms:>8} {uniform:>10}");
    }

    // Every map on 3 elements is decided by a single triple.
    let tiny = enumerate_chirotopes_with(3, false).unwrap();
    println!(
        "\nn=3 chirotopes: {}",
        tiny.iter()
            .map(|c| c.chi_string())
            .collect::<Vec<_>>()
            .join(", ")
    );

    // The census at n = 6 is larger; count without materializing.
    println!("\ncounting n=6 (backtracking with incremental pruning)...");
    let n6 = count_chirotopes(6).unwrap();
    println!("n=6 chirotopes: {n6} ({} oriented matroids)", n6 / 2);
}
