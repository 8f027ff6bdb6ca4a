//! The desk-scale homotopy check: the order complex of the MacPhersonian
//! MacP(3,n) has the same GF(2) Betti numbers as the real Grassmannian
//! G(3,n), and the oriented MacPhersonian matches the oriented Grassmannian
//! (a sphere for n = 3, 4).
//!
//! Run with: cargo run --release --example macphersonian_homology

use macphersonian::homology::{
    betti_gf2, betti_integer, euler_characteristic, grassmann_betti_mod2, order_complex,
    DEFAULT_INTEGER_BUDGET,
};
use macphersonian::macph::{macphersonian, oriented_macphersonian};

fn main() {
    for n in [3, 4] {
        let poset = macphersonian(n).unwrap();
        let complex = order_complex(&poset);
        let betti = betti_gf2(&complex);
        let grassmann = grassmann_betti_mod2(3, n);
        println!(
            "MacP(3,{n}): {} nodes, f-vector {:?}",
            poset.len(),
            complex.f_vector()
        );
        println!("  GF(2) betti {:?}", betti.betti);
        println!("  G(3,{n})    {:?}", grassmann.betti);
        assert_eq!(betti.betti, grassmann.betti);
        println!("  euler characteristic {}", euler_characteristic(&complex));

        if n == 4 {
            // Integral homology shows the real projective space pattern:
            // G(3,4) is RP^3, with 2-torsion in H_1.
            let integral = betti_integer(&complex, DEFAULT_INTEGER_BUDGET).unwrap();
            println!(
                "  integral betti {:?}, torsion {:?}",
                integral.betti, integral.torsion
            );
        }
    }

    for (n, expected) in [(3, vec![2]), (4, vec![1, 0, 0, 1])] {
        let poset = oriented_macphersonian(n).unwrap();
        let betti = betti_gf2(&order_complex(&poset)).betti;
        println!("OMacP(3,{n}): {} nodes, GF(2) betti {betti:?}", poset.len());
        assert_eq!(betti, expected);
    }

    println!("\nall homology checks agree with the Grassmannian oracle");
}
