//! The sign algebra: the partial order on {0,+,-}, joins in the topped
//! lattice, composition, and restriction of sign vectors.
//!
//! Run with: cargo run --example sign_algebra

use macphersonian::sign::{join_topped, SignVector, ToppedSignVector};

fn main() {
    let a: SignVector = "00+".parse().unwrap();
    let b: SignVector = "0-0".parse().unwrap();
    let c: SignVector = "+-+".parse().unwrap();

    println!("a = {a}, b = {b}, c = {c}");
    println!("a <= c  (componentwise): {}", a.leq_v(&c));
    println!("c <= a: {}", c.leq_v(&a));

    // Joins of conformal vectors stay below the top element.
    println!("a v b = {:?}", a.join(&b));
    let opposite: SignVector = "-0+".parse().unwrap();
    println!(
        "a v {opposite} = {:?} (conflicting first coordinate)",
        opposite.join(&c)
    );

    // The top element absorbs.
    let top = ToppedSignVector::Top;
    println!(
        "anything v T = {:?}",
        join_topped(&ToppedSignVector::Vector(a.clone()), &top)
    );

    // Composition: the first argument wins where it is nonzero.
    println!("b o c = {}", b.compose(&c));
    println!("c o b = {}", c.compose(&b));
    println!("conformal(a, b) = {}", a.conformal(&b));

    // Restriction keeps the chosen coordinates in order.
    let long: SignVector = "+-0+".parse().unwrap();
    println!("{long} restricted to {{1,3}} = {}", long.restrict(&[1, 3]));
    println!("support of {long} = {:?}", long.support());
}
