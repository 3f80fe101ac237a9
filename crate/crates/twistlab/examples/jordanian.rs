//! Build the rank-one Jordanian twist F = exp(H ⊗ ln(1 + tE)) from a
//! hand-supplied pair (H, E) with [H, E] = E, and verify it exactly:
//! cocycle equation, counit condition, and the quantum Yang–Baxter
//! equation for R = F₂₁F⁻¹.
//!
//! Run with: cargo run --example jordanian [order]

use twistlab::algebra::{rat, rat_frac, SeriesElement};
use twistlab::verify::{cocycle_check, counit_check, qybe_check, r_matrix, CoproductContext};

fn main() -> twistlab::Result<()> {
    let order: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);

    // H = ½(E₁₁ − E₂₂) and E = t·E₁₂ in gl(2), so [H, E] = E.
    let h = SeriesElement::generator(2, order, 1, 1)?
        .sub(&SeriesElement::generator(2, order, 2, 2)?)?
        .scale(&rat_frac(1, 2));
    let e = SeriesElement::generator(2, order, 1, 2)?.scale_t(&rat(1), 1);

    let f = twistlab::twists::jordanian(&h, &e, order)?;
    println!("Jordanian twist on U(gl(2)), truncated after t^{order}:");
    println!("  {} tensor terms in the expanded series", f.element.num_terms());

    for report in [
        cocycle_check(&f, &CoproductContext::Primitive, order)?,
        counit_check(&f)?,
        qybe_check(&r_matrix(&f)?, order)?,
    ] {
        println!("  {}", report.summary_line());
        assert!(report.passed());
    }
    Ok(())
}
