//! Run the full relation suite for one rank: commutation identities among
//! the chain-adapted coordinates Ê_s, the Cartan interrelations, the
//! chain-coproduct defects, and the rotated coproducts of C_s and D_s.
//! For n = 11 this includes the σ-versus-Ê commutator table.
//!
//! Run with: cargo run --example relations [n] [order]

use twistlab::twists::{make_plan, ParamSet};
use twistlab::verify::relations_suite;

fn main() -> twistlab::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(11);
    let order: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);

    let plan = make_plan(n)?;
    let params = ParamSet::default_for(&plan);
    let reports = relations_suite(&plan, &params, order)?;

    let mut all_pass = true;
    for r in &reports {
        println!("{}", r.summary_line());
        all_pass &= r.passed();
    }
    println!(
        "{} checks, {}",
        reports.len(),
        if all_pass { "all pass" } else { "FAILURES" }
    );
    std::process::exit(if all_pass { 0 } else { 1 });
}
