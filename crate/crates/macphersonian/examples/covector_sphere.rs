//! Builds the covector sphere of an oriented matroid and runs the sphere
//! checks: Euler characteristic 2, thinness, negation symmetry, and the
//! GF(2) Betti numbers (1,0,1) of its order complex.
//!
//! Run with: cargo run --example covector_sphere

use macphersonian::chirotope::{Chirotope, OrientedMatroid};
use macphersonian::covector::{cocircuits, CovectorSphere};

fn main() {
    // The order type of e1, e2, e3, (1,1,1).
    let chi = Chirotope::parse_text("n=4;chi=++-+").unwrap();
    let om = OrientedMatroid::from_chirotope(chi);

    let cocs = cocircuits(om.chirotope());
    println!("{} has {} cocircuits:", om.text_form(), cocs.len());
    for c in &cocs {
        print!("  {c}");
    }
    println!();

    let sphere = CovectorSphere::build(&om).unwrap();
    let [v, e, f] = sphere.rank_sizes();
    println!("covector sphere: {v} vertices, {e} edges, {f} facets");
    println!("euler characteristic: {}", v as i64 - e as i64 + f as i64);
    println!("topes:");
    for t in sphere.topes() {
        print!("  {t}");
    }
    println!();

    let report = sphere.verify();
    println!(
        "checks: euler {} diamond {} negation {} topes {} betti {:?}",
        report.euler_ok,
        report.diamond_ok,
        report.negation_ok,
        report.tope_support_ok,
        report.betti
    );
    assert!(report.passed());

    // JSON export, the same schema the CLI writes.
    let json = serde_json::to_string_pretty(&sphere.export()).unwrap();
    println!("\nexport preview (first lines):");
    for line in json.lines().take(8) {
        println!("{line}");
    }
}
