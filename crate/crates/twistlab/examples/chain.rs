//! Build the full chain of extended Jordanian twists for U(sl(n)) and
//! verify the cocycle and counit conditions order by order in t, with
//! exact rational coefficients throughout.
//!
//! Run with: cargo run --example chain [n] [order]

use twistlab::twists::{full_chain, make_plan, ParamSet};
use twistlab::verify::{cocycle_check, counit_check, CoproductContext};

fn main() -> twistlab::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(5);
    let order: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);

    let plan = make_plan(n)?;
    let params = ParamSet::default_for(&plan);
    println!(
        "sl({n}): {} links, constituent index sets {:?}",
        plan.m, plan.constituents
    );

    let f = full_chain(&plan, &params, order)?;
    for factor in &f.factors {
        println!("  factor {}", factor.name);
    }
    println!(
        "  expanded series: {} terms through t^{order}",
        f.element.num_terms()
    );

    let cocycle = cocycle_check(&f, &CoproductContext::Primitive, order)?;
    let counit = counit_check(&f)?;
    println!("  {}", cocycle.summary_line());
    println!("  {}", counit.summary_line());
    assert!(cocycle.passed() && counit.passed());
    Ok(())
}
