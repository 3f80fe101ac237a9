//! Constructors for the twists themselves: Jordanian factors, links and
//! chains, the rotation twist, quasi-Jordanian factors, the parabolic
//! composite, and the two special sl(4) composites.

use num::{One, Zero};

use crate::algebra::{Rat, SeriesElement};
use crate::error::{Result, TwistError};
use crate::expr::Expr;
use crate::hopf::log_series;
use crate::lie::{lie_unit, LieVec};

use super::elements::{
    external_coordinate_expr, h_lambda_expr, h_pair_expr, h_perp_dir, h_perp_expr,
    hat_cartan_dir, hat_cartan_expr, ln_c_expr, omega_expr, series_to_lie, sigma_expr,
};
use super::factor::{Factor, Part, TwistElement};
use super::plan::{make_plan, ParamSet, RootPlan};

fn empty_params() -> ParamSet {
    ParamSet {
        xi: vec![],
        zeta: vec![],
    }
}

/// Directions of an arbitrary series: the whole element if it is linear in
/// the generators, otherwise each distinct letter separately.
fn series_dirs(x: &SeriesElement) -> Vec<LieVec> {
    match series_to_lie(x) {
        Ok(v) => vec![v],
        Err(_) => {
            let mut letters = std::collections::BTreeSet::new();
            for ((_, m), _) in x.terms() {
                for leg in &m.0 {
                    for (g, _) in &leg.0 {
                        letters.insert((g.i, g.j));
                    }
                }
            }
            letters.into_iter().map(|(i, j)| lie_unit(i, j)).collect()
        }
    }
}

/// F_J = exp(H⊗σ) with σ = ln(1+E), for a supplied pair satisfying
/// [H, E] = E; E must have t-valuation ≥ 1.
pub fn jordanian(h: &SeriesElement, e_arg: &SeriesElement, order: u32) -> Result<TwistElement> {
    h.check_compatible(e_arg)?;
    if h.rank() != 1 {
        return Err(TwistError::RankMismatch(h.rank(), 1));
    }
    match e_arg.valuation() {
        Some(0) => return Err(TwistError::ZeroValuation),
        None => return Err(TwistError::Invalid("E argument is zero".into())),
        _ => {}
    }
    let bracket = h.commutator(e_arg)?;
    if bracket != *e_arg {
        return Err(TwistError::BracketPrecondition(format!(
            "[H,E] − E = {:?}",
            bracket.sub(e_arg)?
        )));
    }
    let n = h.n();
    let sigma = log_series(&SeriesElement::unit(n, 1, order).add(e_arg)?)?;
    let exponent = h.tensor(&sigma)?;
    let mut dirs = series_dirs(h);
    dirs.extend(series_dirs(e_arg));
    let factor = Factor::new("jordanian", vec![Part::Raw(exponent)], dirs);
    TwistElement::from_factors(n, order, empty_params(), vec![factor])
}

/// The canonical Jordanian factor of the special chain: exp(Ĥ_1 ⊗ σ_{1,n}).
pub fn jordanian_canonical(
    plan: &RootPlan,
    params: &ParamSet,
    order: u32,
) -> Result<TwistElement> {
    let factor = Factor::new(
        "jordanian",
        vec![Part::Tensor(vec![(
            hat_cartan_expr(1, plan)?,
            sigma_expr(1, plan, params)?,
        )])],
        vec![
            hat_cartan_dir(1, plan)?,
            lie_unit(1, plan.n - 1 + 1),
        ],
    );
    TwistElement::from_factors(plan.n, order, params.clone(), vec![factor])
}

fn link_factor(
    l: usize,
    plan: &RootPlan,
    params: &ParamSet,
    special: bool,
) -> Result<Factor> {
    link_factor_skipping(l, plan, params, special, None)
}

fn link_factor_skipping(
    l: usize,
    plan: &RootPlan,
    params: &ParamSet,
    special: bool,
    skip_constituent: Option<usize>,
) -> Result<Factor> {
    let n = plan.n as usize;
    let xi = params.xi(l)?.clone();
    let sigma = sigma_expr(l, plan, params)?;
    let cartan = if special {
        hat_cartan_expr(l, plan)?
    } else {
        h_lambda_expr(l, plan)?
    };
    let mut dirs = vec![if special {
        hat_cartan_dir(l, plan)?
    } else {
        series_to_lie(&h_lambda_expr(l, plan)?.eval_series(plan.n, 0)?)?
    }];
    dirs.push(lie_unit(l as u8, (n - l + 1) as u8));

    let mut ext_terms = Vec::new();
    for &k in &plan.constituents[l - 1] {
        if skip_constituent == Some(k) {
            continue;
        }
        let first = Expr::scaled(xi.clone(), 1, Expr::gen(l, k));
        let second = if special {
            if l % 2 == 1 {
                // odd links carry e^{−σ_l} on the second leg
                Expr::prod(vec![
                    Expr::gen(k, n - l + 1),
                    Expr::exp(Expr::neg(sigma.clone())),
                ])
            } else {
                Expr::gen(k, n - l + 1)
            }
        } else {
            Expr::prod(vec![
                Expr::gen(k, n - l + 1),
                Expr::exp(Expr::scaled(
                    Rat::new((-1).into(), 2.into()),
                    0,
                    sigma.clone(),
                )),
            ])
        };
        ext_terms.push((first, second));
        dirs.push(lie_unit(l as u8, k as u8));
        dirs.push(lie_unit(k as u8, (n - l + 1) as u8));
    }

    let mut parts = Vec::new();
    if !ext_terms.is_empty() {
        parts.push(Part::Tensor(ext_terms));
    }
    parts.push(Part::Tensor(vec![(cartan, sigma)]));
    Ok(Factor::new(format!("link:{l}"), parts, dirs))
}

/// A single link of the ordinary chain: extensions with e^{−½σ} over the
/// canonical Cartan H_{λ⁰}.
pub fn generic_link(
    l: usize,
    plan: &RootPlan,
    params: &ParamSet,
    order: u32,
) -> Result<TwistElement> {
    let factor = link_factor(l, plan, params, false)?;
    TwistElement::from_factors(plan.n, order, params.clone(), vec![factor])
}

/// The ordinary chain restricted to the first `upto` links (rightmost
/// applied first).
pub fn generic_chain(
    plan: &RootPlan,
    upto: usize,
    params: &ParamSet,
    order: u32,
) -> Result<TwistElement> {
    if upto > plan.m {
        return Err(TwistError::Invalid(format!(
            "chain has {} links, requested {upto}",
            plan.m
        )));
    }
    let factors = (1..=upto)
        .rev()
        .map(|l| link_factor(l, plan, params, false))
        .collect::<Result<Vec<_>>>()?;
    TwistElement::from_factors(plan.n, order, params.clone(), factors)
}

/// The special full chain with the Ĥ_l Cartans and the parity-dependent
/// extension normalization (odd links dressed by e^{−σ_l}, even links bare).
pub fn full_chain(plan: &RootPlan, params: &ParamSet, order: u32) -> Result<TwistElement> {
    params.check_for(plan)?;
    let factors = (1..=plan.m)
        .rev()
        .map(|l| link_factor(l, plan, params, true))
        .collect::<Result<Vec<_>>>()?;
    TwistElement::from_factors(plan.n, order, params.clone(), factors)
}

fn rotation_factor(plan: &RootPlan, params: &ParamSet) -> Result<Factor> {
    let mut terms = Vec::new();
    let mut dirs = Vec::new();
    for s in 1..=plan.p {
        if s % 2 == 1 {
            terms.push((
                Expr::neg(h_perp_expr(s, plan)?),
                ln_c_expr(s, plan, params)?,
            ));
        } else {
            terms.push((ln_c_expr(s, plan, params)?, h_perp_expr(s, plan)?));
        }
        dirs.push(h_perp_dir(s, plan)?);
        dirs.push(lie_unit(s as u8, plan.n - s as u8 + 1));
    }
    Ok(Factor::new("rotation", vec![Part::Tensor(terms)], dirs))
}

/// F^R = exp(Σ_{even s} lnC_s⊗H⊥_s − Σ_{odd s} H⊥_s⊗lnC_s).
pub fn rotation_twist(plan: &RootPlan, params: &ParamSet, order: u32) -> Result<TwistElement> {
    params.check_for(plan)?;
    let factor = rotation_factor(plan, params)?;
    TwistElement::from_factors(plan.n, order, params.clone(), vec![factor])
}

fn quasi_jordanian_factor(s: usize, plan: &RootPlan, params: &ParamSet) -> Result<Factor> {
    let n = plan.n as usize;
    let mut dirs = vec![h_perp_dir(s, plan)?];
    let degenerate = n % 2 == 1 && s == plan.p;
    if degenerate {
        if s % 2 == 1 {
            dirs.push(lie_unit((s + 1) as u8, s as u8));
        } else {
            dirs.push(lie_unit((n - s + 1) as u8, (n - s) as u8));
            dirs.push(lie_unit(s as u8, (n - s) as u8));
            dirs.push(hat_cartan_dir(s, plan)?);
        }
    } else if s % 2 == 1 {
        dirs.push(lie_unit((s + 1) as u8, s as u8));
        dirs.push(lie_unit((n - s) as u8, (n - s + 1) as u8));
        dirs.push(lie_unit((s + 1) as u8, (n - s) as u8));
        dirs.push(lie_unit(s as u8, (n - s + 1) as u8));
    } else {
        dirs.push(lie_unit((n - s + 1) as u8, (n - s) as u8));
        dirs.push(lie_unit(s as u8, (n - s) as u8));
        dirs.push(lie_unit(s as u8, (s + 1) as u8));
        let mut diff = hat_cartan_dir(s + 1, plan)?;
        let minus_one = -Rat::one();
        crate::lie::lie_add_assign(&mut diff, &hat_cartan_dir(s, plan)?, &minus_one);
        dirs.push(diff);
    }
    // D_s involves C_s (odd and degenerate-odd s), whose σ's contribute the
    // initial roots; for even s the C's only enter through ω's log mixing.
    for i in 1..=s {
        dirs.push(lie_unit(i as u8, (n - i + 1) as u8));
    }
    Ok(Factor::new(
        format!("quasi-jordanian:{s}"),
        vec![Part::Tensor(vec![(
            h_perp_expr(s, plan)?,
            omega_expr(s, plan, params)?,
        )])],
        dirs,
    ))
}

/// F^Ĵ_s = exp(H⊥_s ⊗ ω_s).
pub fn quasi_jordanian(
    s: usize,
    plan: &RootPlan,
    params: &ParamSet,
    order: u32,
) -> Result<TwistElement> {
    params.check_for(plan)?;
    let factor = quasi_jordanian_factor(s, plan, params)?;
    TwistElement::from_factors(plan.n, order, params.clone(), vec![factor])
}

/// F^Ĵ = ∏_{s=1..p} F^Ĵ_s (the factors commute pairwise).
pub fn quasi_jordanian_product(
    plan: &RootPlan,
    params: &ParamSet,
    order: u32,
) -> Result<TwistElement> {
    params.check_for(plan)?;
    let factors = (1..=plan.p)
        .map(|s| quasi_jordanian_factor(s, plan, params))
        .collect::<Result<Vec<_>>>()?;
    TwistElement::from_factors(plan.n, order, params.clone(), factors)
}

/// F_P = F^Ĵ · F^R · F_ĉh.
pub fn parabolic_twist(plan: &RootPlan, params: &ParamSet, order: u32) -> Result<TwistElement> {
    params.check_for(plan)?;
    let mut factors = Vec::new();
    for s in 1..=plan.p {
        factors.push(quasi_jordanian_factor(s, plan, params)?);
    }
    factors.push(rotation_factor(plan, params)?);
    for l in (1..=plan.m).rev() {
        factors.push(link_factor(l, plan, params, true)?);
    }
    TwistElement::from_factors(plan.n, order, params.clone(), factors)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sl4Variant {
    P1,
    P3,
}

/// The two sl(4) composites built over the minimal parabolic carriers with
/// negative root −α_1 (P1) or −α_3 (P3).
pub fn sl4_special(variant: Sl4Variant, params: &ParamSet, order: u32) -> Result<TwistElement> {
    let plan = make_plan(4)?;
    params.check_for(&plan)?;
    let zeta = params.zeta(1)?.clone();
    let factor = match variant {
        Sl4Variant::P1 => {
            // ordinary Jordanian on (H⊥_1, Ê_1): exp(H⊥_1 ⊗ ln(1 + ζ Ê_1))
            let omega = Expr::log(Expr::sum(vec![
                Expr::One,
                Expr::scaled(zeta, 1, external_coordinate_expr(1, &plan, params)?),
            ]));
            Factor::new(
                "quasi-jordanian:1",
                vec![Part::Tensor(vec![(h_perp_expr(1, &plan)?, omega)])],
                vec![
                    h_perp_dir(1, &plan)?,
                    lie_unit(2, 1),
                    lie_unit(3, 4),
                    lie_unit(2, 3),
                    lie_unit(1, 4),
                ],
            )
        }
        Sl4Variant::P3 => {
            // Ê_3 = E_43 − 2H_{3,4}E_13 + E_12; the grading that carries the
            // σ dressing puts ξ_2/ξ_1 on E_43 and ξ_2·t on the middle term
            let xi1 = params.xi(1)?.clone();
            let xi2 = params.xi(2)?.clone();
            if xi1.is_zero() {
                return Err(TwistError::Invalid("ξ_1 must be nonzero".into()));
            }
            let e_hat = Expr::sum(vec![
                Expr::scaled(&xi2 / &xi1, 0, Expr::gen(4, 3)),
                Expr::scaled(
                    -&xi2,
                    1,
                    Expr::prod(vec![
                        Expr::scaled(Rat::from_integer(2.into()), 0, h_pair_expr(3, 4)),
                        Expr::gen(1, 3),
                    ]),
                ),
                Expr::gen(1, 2),
            ]);
            // C_3 = e^{σ_{1,4} − σ_{2,3}}, D_3 = ζ Ê_3 C_3
            let c3 = Expr::exp(Expr::sum(vec![
                sigma_expr(1, &plan, params)?,
                Expr::neg(sigma_expr(2, &plan, params)?),
            ]));
            let d3 = Expr::scaled(zeta, 1, Expr::prod(vec![e_hat, c3.clone()]));
            let omega = Expr::log(Expr::sum(vec![c3, d3]));
            let mut h34_dir = lie_unit(3, 3);
            crate::lie::lie_add_assign(
                &mut h34_dir,
                &lie_unit(4, 4),
                &(-Rat::new(1.into(), 1.into())),
            );
            Factor::new(
                "quasi-jordanian:3",
                vec![Part::Tensor(vec![(
                    Expr::neg(h_perp_expr(1, &plan)?),
                    omega,
                )])],
                vec![
                    h_perp_dir(1, &plan)?,
                    lie_unit(4, 3),
                    h34_dir,
                    lie_unit(1, 3),
                    lie_unit(1, 2),
                    lie_unit(1, 4),
                    lie_unit(2, 3),
                ],
            )
        }
    };
    let mut factors = vec![factor];
    for l in (1..=plan.m).rev() {
        factors.push(link_factor(l, &plan, params, true)?);
    }
    TwistElement::from_factors(plan.n, order, params.clone(), factors)
}

/// Deliberate corruptions of the full chain for negative controls.
#[derive(Clone, Copy, Debug)]
pub enum Corruption {
    /// Negate the Jordanian exponent of one link.
    SignFlippedLink(usize),
    /// Drop one constituent term from the extension of one link. (Dropping
    /// the whole extension exponent leaves a valid partial chain, so the
    /// control removes a single summand instead.)
    DroppedExtension(usize),
    /// Replace Ĥ_l by 2Ĥ_l in one link.
    WrongCartan(usize),
}

pub fn corrupted_full_chain(
    plan: &RootPlan,
    params: &ParamSet,
    order: u32,
    corruption: Corruption,
) -> Result<TwistElement> {
    params.check_for(plan)?;
    let target = match corruption {
        Corruption::SignFlippedLink(l)
        | Corruption::DroppedExtension(l)
        | Corruption::WrongCartan(l) => l,
    };
    if target == 0 || target > plan.m {
        return Err(TwistError::Invalid(format!("no link {target}")));
    }
    let mut factors = Vec::new();
    for l in (1..=plan.m).rev() {
        if l != target {
            factors.push(link_factor(l, plan, params, true)?);
            continue;
        }
        if let Corruption::DroppedExtension(_) = corruption {
            let first = plan.constituents[l - 1].first().copied().ok_or_else(|| {
                TwistError::Invalid(format!("link {l} has no extension to corrupt"))
            })?;
            factors.push(link_factor_skipping(l, plan, params, true, Some(first))?);
            continue;
        }
        let sigma = sigma_expr(l, plan, params)?;
        let clean = link_factor(l, plan, params, true)?;
        let jordanian_part = match corruption {
            Corruption::SignFlippedLink(_) => Part::Tensor(vec![(
                Expr::neg(hat_cartan_expr(l, plan)?),
                sigma,
            )]),
            _ => Part::Tensor(vec![(
                Expr::scaled(Rat::from_integer(2.into()), 0, hat_cartan_expr(l, plan)?),
                sigma,
            )]),
        };
        let mut parts = clean.parts.clone();
        let last = parts.len() - 1;
        parts[last] = jordanian_part;
        factors.push(Factor::new(clean.name.clone(), parts, clean.dirs.clone()));
    }
    TwistElement::from_factors(plan.n, order, params.clone(), factors)
}
