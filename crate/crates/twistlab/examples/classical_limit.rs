//! Extract the classical r-matrix r = F⁽¹⁾ − τ(F⁽¹⁾) from a twist and
//! verify the classical Yang–Baxter equation [r₁₂,r₁₃] + [r₁₂,r₂₃] +
//! [r₁₃,r₂₃] = 0 with exact coefficients.
//!
//! Run with: cargo run --example classical_limit

use twistlab::algebra::{rat, rat_frac, SeriesElement};
use twistlab::twists::{jordanian, make_plan, parabolic_twist, ParamSet};
use twistlab::verify::{classical_r, cybe_check};

fn main() -> twistlab::Result<()> {
    let order = 2;

    // Jordanian case: r = H⊗E − E⊗H.
    let h = SeriesElement::generator(2, order, 1, 1)?
        .sub(&SeriesElement::generator(2, order, 2, 2)?)?
        .scale(&rat_frac(1, 2));
    let e = SeriesElement::generator(2, order, 1, 2)?.scale_t(&rat(1), 1);
    let f = jordanian(&h, &e, order)?;
    let r = classical_r(&f)?;
    let expected = h
        .tensor(&SeriesElement::generator(2, order, 1, 2)?)?
        .sub(&SeriesElement::generator(2, order, 1, 2)?.tensor(&h)?)?
        .scale_t(&rat(1), 1);
    assert_eq!(r, expected);
    let report = cybe_check(&r)?;
    println!("jordanian: r = H⊗E − E⊗H, {}", report.summary_line());
    assert!(report.passed());

    // Parabolic cases.
    for n in 3..=5 {
        let plan = make_plan(n)?;
        let params = ParamSet::default_for(&plan);
        let f = parabolic_twist(&plan, &params, order)?;
        let r = classical_r(&f)?;
        let report = cybe_check(&r)?;
        println!(
            "parabolic sl({n}): r has {} terms, {}",
            r.num_terms(),
            report.summary_line()
        );
        assert!(report.passed());
    }
    Ok(())
}
