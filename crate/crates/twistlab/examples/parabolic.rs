//! Build the parabolic twist — quasi-Jordanian factors over the rotated
//! chain — and analyze its carrier subalgebra: the Lie closure of the
//! factor directions, classified into positive roots, negative roots and
//! a Cartan span, with the parabolicity verdict and the sl(2) blocks of
//! the Levi part.
//!
//! Run with: cargo run --example parabolic [n] [order]

use twistlab::twists::{make_plan, parabolic_twist, ParamSet};
use twistlab::verify::{carrier, cocycle_check, CoproductContext};

fn main() -> twistlab::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(6);
    let order: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);

    let plan = make_plan(n)?;
    let params = ParamSet::default_for(&plan);
    let f = parabolic_twist(&plan, &params, order)?;

    println!("parabolic twist for sl({n}): factors, innermost last:");
    for factor in &f.factors {
        println!("  {}", factor.name);
    }

    let c = carrier(&f)?;
    println!("carrier subalgebra, dimension {}:", c.dimension);
    println!("  positive roots: {:?}", c.positive_roots);
    println!("  negative roots: {:?}", c.negative_roots);
    println!("  Cartan span:    {} independent diagonals", c.cartan_span.len());
    println!("  Levi sl(2) blocks: {}", c.levi_blocks.len());
    println!("  parabolic: {}", c.is_parabolic);
    assert!(c.is_parabolic);
    assert_eq!(
        c.negative_roots,
        plan.gamma.iter().map(|&j| (j as u8 + 1, j as u8)).collect()
    );

    let r = cocycle_check(&f, &CoproductContext::Primitive, order)?;
    println!("{}", r.summary_line());
    assert!(r.passed());
    Ok(())
}
