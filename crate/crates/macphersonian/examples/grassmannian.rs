//! Mod-2 Betti numbers of real Grassmannians by Schubert-cell counting:
//! one class per partition fitting in a k x (n-k) box.
//!
//! Run with: cargo run --example grassmannian

use macphersonian::homology::grassmann_betti_mod2;

fn main() {
    println!("G(3,n) mod-2 Betti numbers:");
    for n in 3..=8 {
        let bv = grassmann_betti_mod2(3, n);
        let total: usize = bv.betti.iter().sum();
        println!("  G(3,{n}): {:?}  (sum {total} = C({n},3))", bv.betti);
    }

    // Poincaré-style symmetry of the box-partition counts.
    let bv = grassmann_betti_mod2(4, 9);
    let top = 4 * 5;
    assert!((0..=top).all(|d| bv.betti[d] == bv.betti[top - d]));
    println!("\nG(4,9) betti is symmetric around degree {}", top / 2);
}
