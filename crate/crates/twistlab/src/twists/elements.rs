//! The named algebraic ingredients: σ's, the two Cartan families, external
//! coordinates, the group-like C's, the redefined coordinates D and ω.
//!
//! Every ingredient is built as an expression tree; the series form is a
//! truncated evaluation of that tree. Deformation parameters enter as
//! rational multiples of t: ξ_l on the argument of σ_l (and on the first
//! leg of the link-l extension terms), ζ_s on the whole of D_s. The middle
//! term of an even external coordinate carries ξ_{s+1} (ξ_p in the
//! degenerate case): that is the unique normalization under which the
//! parameterized objects are the image of the parameter-free ones by a
//! diagonal grading automorphism, so the commutation and coproduct
//! identities survive parameterization.

use num::One;

use crate::algebra::{Rat, SeriesElement};
use crate::error::{Result, TwistError};
use crate::expr::Expr;
use crate::lie::LieVec;

use super::plan::{ParamSet, RootPlan};

fn check_range(idx: usize, hi: usize, what: &str) -> Result<()> {
    if idx == 0 || idx > hi {
        return Err(TwistError::Invalid(format!(
            "{what} index {idx} out of range 1..={hi}"
        )));
    }
    Ok(())
}

/// σ_{l,n−l+1} = ln(1 + ξ_l E_{l,n−l+1}).
pub fn sigma_expr(l: usize, plan: &RootPlan, params: &ParamSet) -> Result<Expr> {
    check_range(l, plan.m, "link")?;
    let n = plan.n as usize;
    Ok(Expr::log(Expr::sum(vec![
        Expr::One,
        Expr::scaled(params.xi(l)?.clone(), 1, Expr::gen(l, n - l + 1)),
    ])))
}

/// Ĥ_l, the chain Cartan element. Defined for 1 ≤ l ≤ m+1; at l = m+1 with
/// odd n the formula collapses to zero, which is exactly what the Cartan
/// interrelation at s = p requires.
pub fn hat_cartan_expr(l: usize, plan: &RootPlan) -> Result<Expr> {
    check_range(l, plan.m + 1, "chain Cartan")?;
    let n = plan.n as usize;
    let c = Rat::new(((2 * l) as i64 - 1).into(), (n as i64).into());
    let mut terms;
    if l % 2 == 1 {
        terms = vec![Expr::scaled(c, 0, Expr::identity_matrix(plan.n))];
        for u in 1..l {
            terms.push(Expr::neg(Expr::gen(u, u)));
        }
        for u in (n - l + 1)..=n {
            terms.push(Expr::neg(Expr::gen(u, u)));
        }
    } else {
        terms = vec![Expr::scaled(-c, 0, Expr::identity_matrix(plan.n))];
        for u in 1..=l {
            terms.push(Expr::gen(u, u));
        }
        for u in (n - l + 2)..=n {
            terms.push(Expr::gen(u, u));
        }
    }
    Ok(Expr::sum(terms))
}

/// H⊥_s = (−1)^s(−(2s/n)I + Σ_{u≤s}(E_uu + E_{n−u+1,n−u+1})).
pub fn h_perp_expr(s: usize, plan: &RootPlan) -> Result<Expr> {
    check_range(s, plan.p, "coordinate")?;
    let n = plan.n as usize;
    let sign = if s % 2 == 1 { -Rat::one() } else { Rat::one() };
    let c = Rat::new((2 * s as i64).into(), (n as i64).into());
    let mut terms = vec![Expr::scaled(-c, 0, Expr::identity_matrix(plan.n))];
    for u in 1..=s {
        terms.push(Expr::gen(u, u));
        terms.push(Expr::gen(n - u + 1, n - u + 1));
    }
    Ok(Expr::scaled(sign, 0, Expr::sum(terms)))
}

/// H_{a,b} = ½(E_aa − E_bb).
pub fn h_pair_expr(a: usize, b: usize) -> Expr {
    Expr::scaled(
        Rat::new(1.into(), 2.into()),
        0,
        Expr::sum(vec![Expr::gen(a, a), Expr::neg(Expr::gen(b, b))]),
    )
}

/// The canonical link Cartan H_{λ_l⁰} = ½(E_ll − E_{n−l+1,n−l+1}), with
/// eigenvalue 1 on E_{λ⁰} and ½ on the constituents.
pub fn h_lambda_expr(l: usize, plan: &RootPlan) -> Result<Expr> {
    check_range(l, plan.m, "link")?;
    Ok(h_pair_expr(l, plan.n as usize - l + 1))
}

/// The external coordinate Ê_s, including the degenerate Ê_p for odd n.
pub fn external_coordinate_expr(s: usize, plan: &RootPlan, params: &ParamSet) -> Result<Expr> {
    check_range(s, plan.p, "coordinate")?;
    let n = plan.n as usize;
    let degenerate = n % 2 == 1 && s == plan.p;
    if degenerate {
        let p = plan.p;
        return Ok(if p % 2 == 1 {
            Expr::gen(p + 1, p)
        } else {
            Expr::sum(vec![
                Expr::gen(n - p + 1, n - p),
                Expr::scaled(
                    -params.xi(p)?.clone(),
                    1,
                    Expr::prod(vec![hat_cartan_expr(p, plan)?, Expr::gen(p, n - p)]),
                ),
            ])
        });
    }
    // in both parities the lowering term carries ξ_{s+1}/ξ_s, the relative
    // weight the chain twist assigns to it
    let ratio = params.xi(s + 1)?.clone() / params.xi(s)?.clone();
    Ok(if s % 2 == 1 {
        Expr::sum(vec![
            Expr::scaled(ratio, 0, Expr::gen(s + 1, s)),
            Expr::prod(vec![
                Expr::gen(n - s, n - s + 1),
                Expr::exp(Expr::sum(vec![
                    sigma_expr(s + 1, plan, params)?,
                    Expr::neg(sigma_expr(s, plan, params)?),
                ])),
            ]),
        ])
    } else {
        Expr::sum(vec![
            Expr::scaled(ratio, 0, Expr::gen(n - s + 1, n - s)),
            Expr::scaled(
                params.xi(s + 1)?.clone(),
                1,
                Expr::prod(vec![
                    Expr::sum(vec![
                        hat_cartan_expr(s + 1, plan)?,
                        Expr::neg(hat_cartan_expr(s, plan)?),
                    ]),
                    Expr::gen(s, n - s),
                ]),
            ),
            Expr::gen(s, s + 1),
        ])
    })
}

/// ln C_s = 2 Σ_{i≤s} σ_{i,n−i+1}.
pub fn ln_c_expr(s: usize, plan: &RootPlan, params: &ParamSet) -> Result<Expr> {
    check_range(s, plan.p, "coordinate")?;
    let sigmas = (1..=s)
        .map(|i| sigma_expr(i, plan, params))
        .collect::<Result<Vec<_>>>()?;
    Ok(Expr::scaled(Rat::from_integer(2.into()), 0, Expr::sum(sigmas)))
}

/// C_s = e^{2 Σ_{i≤s} σ_{i,n−i+1}}.
pub fn c_expr(s: usize, plan: &RootPlan, params: &ParamSet) -> Result<Expr> {
    Ok(Expr::exp(ln_c_expr(s, plan, params)?))
}

/// D_s = ζ_s Ê_s C_s (odd s) or ζ_s Ê_s (even s).
pub fn d_expr(s: usize, plan: &RootPlan, params: &ParamSet) -> Result<Expr> {
    let e_hat = external_coordinate_expr(s, plan, params)?;
    let zeta = params.zeta(s)?.clone();
    Ok(if s % 2 == 1 {
        Expr::scaled(zeta, 1, Expr::prod(vec![e_hat, c_expr(s, plan, params)?]))
    } else {
        Expr::scaled(zeta, 1, e_hat)
    })
}

/// ω_s = ln(C_s + D_s).
pub fn omega_expr(s: usize, plan: &RootPlan, params: &ParamSet) -> Result<Expr> {
    Ok(Expr::log(Expr::sum(vec![
        c_expr(s, plan, params)?,
        d_expr(s, plan, params)?,
    ])))
}

pub fn sigma(l: usize, plan: &RootPlan, params: &ParamSet, order: u32) -> Result<SeriesElement> {
    sigma_expr(l, plan, params)?.eval_series(plan.n, order)
}

pub fn hat_cartan(l: usize, plan: &RootPlan, order: u32) -> Result<SeriesElement> {
    hat_cartan_expr(l, plan)?.eval_series(plan.n, order)
}

pub fn h_perp(s: usize, plan: &RootPlan, order: u32) -> Result<SeriesElement> {
    h_perp_expr(s, plan)?.eval_series(plan.n, order)
}

pub fn external_coordinate(
    s: usize,
    plan: &RootPlan,
    params: &ParamSet,
    order: u32,
) -> Result<SeriesElement> {
    external_coordinate_expr(s, plan, params)?.eval_series(plan.n, order)
}

pub fn c_element(s: usize, plan: &RootPlan, params: &ParamSet, order: u32) -> Result<SeriesElement> {
    c_expr(s, plan, params)?.eval_series(plan.n, order)
}

pub fn d_coordinate(
    s: usize,
    plan: &RootPlan,
    params: &ParamSet,
    order: u32,
) -> Result<SeriesElement> {
    d_expr(s, plan, params)?.eval_series(plan.n, order)
}

pub fn omega(s: usize, plan: &RootPlan, params: &ParamSet, order: u32) -> Result<SeriesElement> {
    omega_expr(s, plan, params)?.eval_series(plan.n, order)
}

/// Extract the Lie-algebra vector of a purely linear series (each monomial
/// a single first-power generator); t-powers are ignored.
pub fn series_to_lie(x: &SeriesElement) -> Result<LieVec> {
    let mut out = LieVec::new();
    for ((_, m), c) in x.terms() {
        let leg = &m.0[0];
        if leg.0.len() != 1 || leg.0[0].1 != 1 {
            return Err(TwistError::Invalid(
                "element is not linear in the generators".into(),
            ));
        }
        let g = leg.0[0].0;
        crate::lie::lie_add_assign(&mut out, &crate::lie::lie_unit(g.i, g.j), c);
    }
    Ok(out)
}

pub fn hat_cartan_dir(l: usize, plan: &RootPlan) -> Result<LieVec> {
    series_to_lie(&hat_cartan(l, plan, 0)?)
}

pub fn h_perp_dir(s: usize, plan: &RootPlan) -> Result<LieVec> {
    series_to_lie(&h_perp(s, plan, 0)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_frac};
    use crate::twists::plan::make_plan;

    fn gen(n: u8, ord: u32, i: usize, j: usize) -> SeriesElement {
        SeriesElement::generator(n, ord, i, j).unwrap()
    }

    #[test]
    fn sigma_examples() {
        let plan = make_plan(4).unwrap();
        let params = ParamSet::default_for(&plan);
        // σ_{1,4} at N=2: tE_14 − (t²/2)E_14²
        let s = sigma(1, &plan, &params, 2).unwrap();
        let e14 = gen(4, 2, 1, 4);
        let expected = e14
            .scale_t(&rat(1), 1)
            .add(&e14.pow(2).unwrap().scale_t(&rat_frac(-1, 2), 2))
            .unwrap();
        assert_eq!(s, expected);
        assert!(crate::hopf::counit(&s).unwrap().is_zero());
        assert!(sigma(3, &plan, &params, 2).is_err());
        // l=5, n=11: argument is E_{5,7}
        let plan11 = make_plan(11).unwrap();
        let p11 = ParamSet::default_for(&plan11);
        let s5 = sigma(5, &plan11, &p11, 1).unwrap();
        assert_eq!(s5, gen(11, 1, 5, 7).scale_t(&rat(1), 1));
    }

    #[test]
    fn hat_cartan_examples() {
        let plan = make_plan(4).unwrap();
        // Ĥ_1 = ¼I − E_44
        let h1 = hat_cartan(1, &plan, 0).unwrap();
        let expected = SeriesElement::identity_matrix(4, 0)
            .scale(&rat_frac(1, 4))
            .sub(&gen(4, 0, 4, 4))
            .unwrap();
        assert_eq!(h1, expected);
        // Ĥ_2 = −¾I + E_11 + E_22 + E_44
        let h2 = hat_cartan(2, &plan, 0).unwrap();
        let expected = SeriesElement::identity_matrix(4, 0)
            .scale(&rat_frac(-3, 4))
            .add(&gen(4, 0, 1, 1))
            .unwrap()
            .add(&gen(4, 0, 2, 2))
            .unwrap()
            .add(&gen(4, 0, 4, 4))
            .unwrap();
        assert_eq!(h2, expected);
        // Ĥ_3, n=11
        let plan11 = make_plan(11).unwrap();
        let h3 = hat_cartan(3, &plan11, 0).unwrap();
        let mut expected = SeriesElement::identity_matrix(11, 0).scale(&rat_frac(5, 11));
        for u in [1usize, 2, 9, 10, 11] {
            expected = expected.sub(&gen(11, 0, u, u)).unwrap();
        }
        assert_eq!(h3, expected);
        // [Ĥ_1, E_{1,n}] = E_{1,n}
        let e1n = gen(11, 0, 1, 11);
        assert_eq!(
            hat_cartan(1, &plan11, 0).unwrap().commutator(&e1n).unwrap(),
            e1n
        );
        // Ĥ_{m+1} for odd n vanishes
        assert!(hat_cartan(6, &plan11, 0).unwrap().is_zero());
    }

    #[test]
    fn h_perp_examples() {
        let plan = make_plan(4).unwrap();
        // H⊥_1 = ½I − E_11 − E_44
        let h = h_perp(1, &plan, 0).unwrap();
        let expected = SeriesElement::identity_matrix(4, 0)
            .scale(&rat_frac(1, 2))
            .sub(&gen(4, 0, 1, 1))
            .unwrap()
            .sub(&gen(4, 0, 4, 4))
            .unwrap();
        assert_eq!(h, expected);
        // H⊥_2, n=11 = −(4/11)I + E_11+E_22+E_{10,10}+E_{11,11}
        let plan11 = make_plan(11).unwrap();
        let h2 = h_perp(2, &plan11, 0).unwrap();
        let mut expected = SeriesElement::identity_matrix(11, 0).scale(&rat_frac(-4, 11));
        for u in [1usize, 2, 10, 11] {
            expected = expected.add(&gen(11, 0, u, u)).unwrap();
        }
        assert_eq!(h2, expected);
        // diagonal elements commute
        for s in 1..=5 {
            for l in 1..=5 {
                assert!(h_perp(s, &plan11, 0)
                    .unwrap()
                    .commutator(&hat_cartan(l, &plan11, 0).unwrap())
                    .unwrap()
                    .is_zero());
            }
        }
    }

    #[test]
    fn external_coordinate_examples() {
        let ord = 3;
        // Ê_1, n=4 → E_21 + E_34 e^{σ_{2,3}−σ_{1,4}}
        let plan = make_plan(4).unwrap();
        let params = ParamSet::default_for(&plan);
        let e1 = external_coordinate(1, &plan, &params, ord).unwrap();
        let exp_part = crate::hopf::exp_series(
            &sigma(2, &plan, &params, ord)
                .unwrap()
                .sub(&sigma(1, &plan, &params, ord).unwrap())
                .unwrap(),
        )
        .unwrap();
        let expected = gen(4, ord, 2, 1)
            .add(&gen(4, ord, 3, 4).mul(&exp_part).unwrap())
            .unwrap();
        assert_eq!(e1, expected);
        let plan11 = make_plan(11).unwrap();
        let p11 = ParamSet::default_for(&plan11);
        // Ê_5, n=11 → E_65 (degenerate)
        assert_eq!(
            external_coordinate(5, &plan11, &p11, ord).unwrap(),
            gen(11, ord, 6, 5)
        );
        // Ê_2, n=11 → E_{10,9} + ξ₃(Ĥ_3−Ĥ_2)E_{2,9} + E_{2,3}
        let e2 = external_coordinate(2, &plan11, &p11, ord).unwrap();
        let middle = hat_cartan(3, &plan11, ord)
            .unwrap()
            .sub(&hat_cartan(2, &plan11, ord).unwrap())
            .unwrap()
            .mul(&gen(11, ord, 2, 9))
            .unwrap()
            .scale_t(&rat(1), 1);
        let expected = gen(11, ord, 10, 9)
            .add(&middle)
            .unwrap()
            .add(&gen(11, ord, 2, 3))
            .unwrap();
        assert_eq!(e2, expected);
    }

    #[test]
    fn eq27_h_perp_action() {
        // [H⊥_s, Ê_t] = δ_st Ê_t
        let plan = make_plan(6).unwrap();
        let params = ParamSet::default_for(&plan);
        let ord = 3;
        for s in 1..=plan.p {
            let h = h_perp(s, &plan, ord).unwrap();
            for t in 1..=plan.p {
                let e = external_coordinate(t, &plan, &params, ord).unwrap();
                let br = h.commutator(&e).unwrap();
                if s == t {
                    assert_eq!(br, e, "n=6 s={s} t={t}");
                } else {
                    assert!(br.is_zero(), "n=6 s={s} t={t}");
                }
            }
        }
    }

    #[test]
    fn eq26_coordinates_commute() {
        for n in [5usize, 6, 7] {
            let plan = make_plan(n).unwrap();
            let params = ParamSet::default_for(&plan);
            let ord = 3;
            for s in 1..=plan.p {
                for t in 1..=plan.p {
                    let a = external_coordinate(s, &plan, &params, ord).unwrap();
                    let b = external_coordinate(t, &plan, &params, ord).unwrap();
                    assert!(
                        a.commutator(&b).unwrap().is_zero(),
                        "n={n} [Ê_{s},Ê_{t}] ≠ 0"
                    );
                }
            }
        }
    }

    #[test]
    fn eq28_cartan_interrelation() {
        // −2H⊥_s = 2H_{s,s+1}+Ĥ_{s+1}−Ĥ_s (odd s), 2H_{n−s,n−s+1}+Ĥ_{s+1}−Ĥ_s (even s)
        for n in [4usize, 5, 6, 7, 11] {
            let plan = make_plan(n).unwrap();
            for s in 1..=plan.p {
                let lhs = h_perp(s, &plan, 0).unwrap().scale(&rat(-2));
                let (a, b) = if s % 2 == 1 { (s, s + 1) } else { (n - s, n - s + 1) };
                let rhs = h_pair_expr(a, b)
                    .eval_series(plan.n, 0)
                    .unwrap()
                    .scale(&rat(2))
                    .add(&hat_cartan(s + 1, &plan, 0).unwrap())
                    .unwrap()
                    .sub(&hat_cartan(s, &plan, 0).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs, "n={n} s={s}");
            }
        }
    }

    #[test]
    fn c_element_examples() {
        let plan = make_plan(4).unwrap();
        let params = ParamSet::default_for(&plan);
        let ord = 3;
        // C_1 = e^{2σ_{1,4}}
        let c1 = c_element(1, &plan, &params, ord).unwrap();
        let direct = crate::hopf::exp_series(
            &sigma(1, &plan, &params, ord).unwrap().scale(&rat(2)),
        )
        .unwrap();
        assert_eq!(c1, direct);
        // [C_s, C_t] = 0 and [H⊥_s, ln C_s] = 0
        let plan6 = make_plan(6).unwrap();
        let p6 = ParamSet::default_for(&plan6);
        for s in 1..=plan6.p {
            for t in 1..=plan6.p {
                let cs = c_element(s, &plan6, &p6, ord).unwrap();
                let ct = c_element(t, &plan6, &p6, ord).unwrap();
                assert!(cs.commutator(&ct).unwrap().is_zero());
            }
            let lncs = ln_c_expr(s, &plan6, &p6)
                .unwrap()
                .eval_series(plan6.n, ord)
                .unwrap();
            assert!(h_perp(s, &plan6, ord)
                .unwrap()
                .commutator(&lncs)
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn d_coordinate_examples() {
        let ord = 2;
        let plan = make_plan(11).unwrap();
        let params = ParamSet::default_for(&plan);
        // D_1 = ζ₁Ê_1C_1, D_2 = ζ₂Ê_2
        let d1 = d_coordinate(1, &plan, &params, ord).unwrap();
        let direct = external_coordinate(1, &plan, &params, ord)
            .unwrap()
            .mul(&c_element(1, &plan, &params, ord).unwrap())
            .unwrap()
            .scale_t(&rat(1), 1);
        assert_eq!(d1, direct);
        let d2 = d_coordinate(2, &plan, &params, ord).unwrap();
        assert_eq!(
            d2,
            external_coordinate(2, &plan, &params, ord)
                .unwrap()
                .scale_t(&rat(1), 1)
        );
        // [D_s, D_t] = 0 and [D_s+C_s, D_t+C_t] = 0 (n=6 keeps it fast)
        let plan6 = make_plan(6).unwrap();
        let p6 = ParamSet::default_for(&plan6);
        let ord = 3;
        for s in 1..=plan6.p {
            for t in 1..=plan6.p {
                let ds = d_coordinate(s, &plan6, &p6, ord).unwrap();
                let dt = d_coordinate(t, &plan6, &p6, ord).unwrap();
                assert!(ds.commutator(&dt).unwrap().is_zero(), "[D_{s},D_{t}]");
                let cs = c_element(s, &plan6, &p6, ord).unwrap();
                let ct = c_element(t, &plan6, &p6, ord).unwrap();
                assert!(
                    ds.add(&cs)
                        .unwrap()
                        .commutator(&dt.add(&ct).unwrap())
                        .unwrap()
                        .is_zero(),
                    "[D+C,D+C] s={s} t={t}"
                );
            }
        }
    }

    #[test]
    fn dirs_are_linear() {
        let plan = make_plan(4).unwrap();
        let d = hat_cartan_dir(1, &plan).unwrap();
        assert_eq!(d.len(), 4);
        assert_eq!(d[&(4, 4)], rat_frac(-3, 4));
        assert_eq!(d[&(1, 1)], rat_frac(1, 4));
    }
}
