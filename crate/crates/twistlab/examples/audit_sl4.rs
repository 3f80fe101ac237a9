//! Machine adjudication for sl(4): run every relation suite, factor
//! condition and cocycle check, including the two special composite
//! candidates, and report each result exactly as computed — including the
//! identities that fail when read literally at n = 4.
//!
//! Run with: cargo run --example audit_sl4 [order]

use twistlab::twists::{make_plan, ParamSet};
use twistlab::verify::audit;

fn main() -> twistlab::Result<()> {
    let order: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);

    let plan = make_plan(4)?;
    let params = ParamSet::default_for(&plan);
    for r in audit(4, &params, order)? {
        println!("{}", r.summary_line());
    }
    Ok(())
}
