//! Evaluate the parabolic twist in the fundamental representation at an
//! exact rational value of t and check the cocycle equation and the
//! quantum Yang–Baxter equation as matrix identities over Q. These are
//! necessary conditions only — the symbolic checker is the authority —
//! but they run in seconds even at ranks where the symbolic expansion is
//! expensive.
//!
//! Run with: cargo run --example rep_checks [n_max]

use twistlab::algebra::{rat, rat_frac};
use twistlab::rep::{rep_cocycle_check, rep_qybe_check};
use twistlab::twists::{make_plan, parabolic_twist, ParamSet};

fn main() -> twistlab::Result<()> {
    let n_max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(9);

    for n in 3..=n_max {
        let plan = make_plan(n)?;
        let params = ParamSet::default_for(&plan);
        // order 1 suffices: the representation path substitutes the exact
        // closed forms and ignores the series truncation.
        let f = parabolic_twist(&plan, &params, 1)?;
        for t in [rat(1), rat_frac(1, 2), rat_frac(-2, 3)] {
            let cocycle = rep_cocycle_check(&f, &t)?;
            let qybe = rep_qybe_check(&f, &t)?;
            println!("{}", cocycle.summary_line());
            println!("{}", qybe.summary_line());
            assert!(cocycle.passed() && qybe.passed());
        }
    }
    Ok(())
}
