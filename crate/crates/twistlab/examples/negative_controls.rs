//! Show that the checker detects broken twists, not just confirms valid
//! ones: corrupt the chain in three distinct ways and locate the first
//! t-order at which the cocycle residual becomes nonzero. Every
//! corruption of a unit-constant twist passes at first order (the
//! residual of 1⊗1 + t·f₁ always cancels there), so defects appear at t².
//!
//! Run with: cargo run --example negative_controls [n]

use twistlab::twists::{corrupted_full_chain, make_plan, Corruption, ParamSet};
use twistlab::verify::{cocycle_check, CoproductContext};

fn main() -> twistlab::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    let order = 3;
    let plan = make_plan(n)?;
    let params = ParamSet::default_for(&plan);

    let cases = [
        ("sign-flipped Cartan in link 1", Corruption::SignFlippedLink(1)),
        ("one extension term dropped from link 1", Corruption::DroppedExtension(1)),
        ("doubled Cartan in link 1", Corruption::WrongCartan(1)),
    ];
    for (label, corruption) in cases {
        let f = corrupted_full_chain(&plan, &params, order, corruption)?;
        let r = cocycle_check(&f, &CoproductContext::Primitive, order)?;
        println!(
            "{label}: first nonzero residual at t^{}",
            r.first_defect_order().expect("corruption must be detected")
        );
        assert_eq!(r.first_defect_order(), Some(2));
    }
    Ok(())
}
