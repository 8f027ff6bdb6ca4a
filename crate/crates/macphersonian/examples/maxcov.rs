//! The maxcov map between weak-order comparable oriented matroids: each
//! covector of the larger is sent to the maximum covector of the smaller
//! below it. Well-defined and surjective whenever M0 <=_w M1.
//!
//! Run with: cargo run --example maxcov

use macphersonian::chirotope::OrientedMatroid;
use macphersonian::covector::{maxcov, CovectorSphere};

fn main() {
    // M0 degenerates element 4 to a loop; M1 is uniform.
    let m0 = OrientedMatroid::parse_text("n=4;chi=+000").unwrap();
    let m1 = OrientedMatroid::parse_text("n=4;chi=++-+").unwrap();
    assert!(m0.weak_leq(&m1));
    println!("M0 = {} (loops {:?})", m0.text_form(), m0.loops());
    println!("M1 = {} (loops {:?})", m1.text_form(), m1.loops());

    let map = maxcov(&m0, &m1).unwrap();
    println!(
        "maxcov: {} covectors mapped, surjective: {}",
        map.pairs().len(),
        map.is_surjective()
    );
    println!("sample of the table (tope rows):");
    for (hi, lo) in map
        .pairs()
        .iter()
        .filter(|(hi, _)| hi.support().len() == 4)
        .take(6)
    {
        println!("  {hi} -> {lo}");
    }

    // Equal loop sets: facet covectors of the lower OM persist upward.
    let m2 = OrientedMatroid::parse_text("n=4;chi=++-0").unwrap();
    assert!(m2.weak_leq(&m1) && m2.loops() == m1.loops());
    let lower = CovectorSphere::build(&m2).unwrap();
    let upper = CovectorSphere::build(&m1).unwrap();
    let persist = lower.topes().iter().all(|t| upper.topes().contains(t));
    println!(
        "\n{} <=_w {} with equal loops: every facet covector persists: {persist}",
        m2.text_form(),
        m1.text_form()
    );
    assert!(persist);
}
