//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line. All residuals are exact; a criterion passes only with
//! identically zero residual (or, for the recorded discrepancies, with the
//! documented outcome).

use num::One;

use twistlab::algebra::{rat, rat_frac, Rat, SeriesElement};
use twistlab::expr::Expr;
use twistlab::hopf;
use twistlab::rep::{rep_cocycle_check, rep_qybe_check, rep_series, RepModel};
use twistlab::twists::elements::{
    c_element, d_coordinate, external_coordinate, h_perp,
};
use twistlab::twists::{
    corrupted_full_chain, full_chain, jordanian, make_plan, parabolic_twist, rotation_twist,
    Corruption, Factor, ParamSet, Part, TwistElement,
};
use twistlab::verify::{
    audit, carrier, classical_r, cocycle_check, counit_check, cybe_check, factor_conditions,
    lemma_suite, qybe_check, r_matrix, relations_suite, CoproductContext,
};

fn gate(number: u32, name: &str, ok: bool) {
    println!(
        "acceptance {:02} {name}: {}",
        number,
        if ok { "pass" } else { "FAIL" }
    );
    assert!(ok, "acceptance criterion {number} ({name}) failed");
}

#[test]
fn criterion_01_chain_validity() {
    let order = 3; // mod t⁴
    let mut ok = true;
    for n in 3..=6 {
        let plan = make_plan(n).unwrap();
        let params = ParamSet::default_for(&plan);
        let f = full_chain(&plan, &params, order).unwrap();
        ok &= cocycle_check(&f, &CoproductContext::Primitive, order)
            .unwrap()
            .passed();
        ok &= counit_check(&f).unwrap().passed();
    }
    gate(1, "chain cocycle and counit, n=3..6", ok);
}

#[test]
fn criterion_02_parabolic_validity() {
    let order = 2; // mod t³
    let mut ok = true;
    for n in 3..=6 {
        let plan = make_plan(n).unwrap();
        let params = ParamSet::default_for(&plan);
        let f = parabolic_twist(&plan, &params, order).unwrap();
        ok &= cocycle_check(&f, &CoproductContext::Primitive, order)
            .unwrap()
            .passed();
    }
    gate(2, "parabolic twist cocycle, n=3..6", ok);
}

#[test]
fn criterion_03_sl11_golden_data() {
    let order = 3;
    let plan = make_plan(11).unwrap();
    let params = ParamSet::default_for(&plan);
    let reports = relations_suite(&plan, &params, order).unwrap();
    let wanted = [
        "coordinates-commute",
        "hperp-action",
        "cartan-interrelation",
        "c-commutation",
        "d-commutation",
        "sigma-coordinate-table",
    ];
    let mut ok = true;
    for name in wanted {
        let r = reports
            .iter()
            .find(|r| r.check == name)
            .unwrap_or_else(|| panic!("missing report {name}"));
        ok &= r.passed();
    }
    gate(3, "sl(11) commutator table and relation suite", ok);
}

#[test]
fn criterion_04_representation_exactness() {
    let mut ok = true;
    for n in 3..=11 {
        let plan = make_plan(n).unwrap();
        let params = ParamSet::default_for(&plan);
        let f = parabolic_twist(&plan, &params, 1).unwrap();
        for t in [rat(1), rat_frac(1, 2)] {
            ok &= rep_cocycle_check(&f, &t).unwrap().passed();
            ok &= rep_qybe_check(&f, &t).unwrap().passed();
        }
    }
    gate(4, "exact matrix cocycle and qybe, parabolic n=3..11", ok);
}

#[test]
fn criterion_05_classical_limit() {
    let order = 2;
    let mut ok = true;
    // b² Jordanian: r = H⊗E − E⊗H
    let h = SeriesElement::generator(2, order, 1, 1)
        .unwrap()
        .sub(&SeriesElement::generator(2, order, 2, 2).unwrap())
        .unwrap()
        .scale(&rat_frac(1, 2));
    let e = SeriesElement::generator(2, order, 1, 2)
        .unwrap()
        .scale_t(&rat(1), 1);
    let f = jordanian(&h, &e, order).unwrap();
    let r = classical_r(&f).unwrap();
    let e0 = SeriesElement::generator(2, order, 1, 2).unwrap();
    let expected = h
        .tensor(&e0)
        .unwrap()
        .sub(&e0.tensor(&h).unwrap())
        .unwrap()
        .scale_t(&rat(1), 1);
    ok &= r == expected;
    ok &= cybe_check(&r).unwrap().passed();
    for n in 3..=5 {
        let plan = make_plan(n).unwrap();
        let params = ParamSet::default_for(&plan);
        let f = parabolic_twist(&plan, &params, order).unwrap();
        ok &= cybe_check(&classical_r(&f).unwrap()).unwrap().passed();
    }
    gate(5, "classical r-matrices satisfy the cybe", ok);
}

#[test]
fn criterion_06_carrier_parabolicity() {
    let mut ok = true;
    for n in 3..=8 {
        let plan = make_plan(n).unwrap();
        let params = ParamSet::default_for(&plan);
        let f = parabolic_twist(&plan, &params, 1).unwrap();
        let c = carrier(&f).unwrap();
        let expected_negative: std::collections::BTreeSet<(u8, u8)> = plan
            .gamma
            .iter()
            .map(|&j| ((j + 1) as u8, j as u8))
            .collect();
        ok &= c.is_parabolic;
        ok &= c.negative_roots == expected_negative;
        ok &= c.levi_blocks.len() == plan.p;
    }
    gate(6, "parabolic carriers with exact negative-root sets, n=3..8", ok);
}

#[test]
fn criterion_07_factor_conditions() {
    let order = 3;
    let mut ok = true;
    for n in 3..=8 {
        let plan = make_plan(n).unwrap();
        let params = ParamSet::default_for(&plan);
        for s in 1..=plan.p {
            for r in lemma_suite(s, &plan, &params, order).unwrap() {
                ok &= r.passed();
            }
        }
    }
    // degenerate case C=1, D=tE on b² reduces to the ordinary Jordanian
    let h = Expr::scaled(
        rat_frac(1, 2),
        0,
        Expr::sum(vec![Expr::gen(1, 1), Expr::neg(Expr::gen(2, 2))]),
    );
    let omega = Expr::log(Expr::sum(vec![
        Expr::One,
        Expr::scaled(Rat::one(), 1, Expr::gen(1, 2)),
    ]));
    let factor = Factor::new("degenerate", vec![Part::Tensor(vec![(h, omega)])], vec![]);
    let reduced = TwistElement::from_factors(
        2,
        order,
        ParamSet { xi: vec![], zeta: vec![] },
        vec![factor],
    )
    .unwrap();
    let h_series = SeriesElement::generator(2, order, 1, 1)
        .unwrap()
        .sub(&SeriesElement::generator(2, order, 2, 2).unwrap())
        .unwrap()
        .scale(&rat_frac(1, 2));
    let e_series = SeriesElement::generator(2, order, 1, 2)
        .unwrap()
        .scale_t(&rat(1), 1);
    let ordinary = jordanian(&h_series, &e_series, order).unwrap();
    ok &= reduced.element == ordinary.element;
    ok &= cocycle_check(&reduced, &CoproductContext::Primitive, order)
        .unwrap()
        .passed();

    // negative control: dropping one term of the second coordinate breaks
    // the coproduct condition
    let plan = make_plan(6).unwrap();
    let params = ParamSet::default_for(&plan);
    let g_exps: Vec<SeriesElement> = {
        let mut v = rotation_twist(&plan, &params, order)
            .unwrap()
            .exponents()
            .unwrap();
        v.extend(full_chain(&plan, &params, order).unwrap().exponents().unwrap());
        v
    };
    let h2 = h_perp(2, &plan, order).unwrap();
    let c2 = c_element(2, &plan, &params, order).unwrap();
    let full = external_coordinate(2, &plan, &params, order).unwrap();
    let dropped = SeriesElement::from_terms(
        6,
        1,
        order,
        full.terms()
            .filter(|((_, m), _)| !m.0[0].0.iter().any(|(g, _)| (g.i, g.j) == (2, 3)))
            .map(|((d, m), c)| ((*d, m.clone()), c.clone())),
    )
    .scale_t(&rat(1), 1);
    let sane = d_coordinate(2, &plan, &params, order).unwrap();
    assert_ne!(dropped, sane);
    let reports = factor_conditions(&h2, &c2, &dropped, &g_exps, "corrupted").unwrap();
    ok &= reports.iter().any(|r| !r.passed());
    gate(7, "factor conditions for all (n<=8, s<=p) and degenerate cases", ok);
}

#[test]
fn criterion_08_sl4_adjudication() {
    let order = 3;
    let plan = make_plan(4).unwrap();
    let params = ParamSet::default_for(&plan);
    let reports = audit(4, &params, order).unwrap();
    let get = |name: &str| {
        reports
            .iter()
            .find(|r| r.check == name)
            .unwrap_or_else(|| panic!("missing audit entry {name}"))
    };
    let mut ok = true;
    ok &= !get("4k-property-as-printed").passed();
    ok &= get("cartan-difference-h34").passed();
    ok &= get("sl4-p3-cocycle").passed();
    // the first variant is recorded exactly as computed; as of this
    // writing the computation shows a t² defect
    let p1 = get("sl4-p1-cocycle");
    println!(
        "  note: sl4-p1 cocycle recorded as {} (first defect: {:?})",
        if p1.passed() { "pass" } else { "fail" },
        p1.first_defect_order()
    );
    gate(8, "sl(4) claims adjudicated without correction", ok);
}

#[test]
fn criterion_09_negative_controls() {
    let order = 3;
    let plan = make_plan(4).unwrap();
    let params = ParamSet::default_for(&plan);
    let mut ok = true;
    for corruption in [
        Corruption::SignFlippedLink(1),
        Corruption::DroppedExtension(1),
        Corruption::WrongCartan(2),
    ] {
        let f = corrupted_full_chain(&plan, &params, order, corruption).unwrap();
        let r = cocycle_check(&f, &CoproductContext::Primitive, order).unwrap();
        ok &= !r.passed();
        // any deformation residual must start at t²: the first order of the
        // twist equation holds for every series with invertible lead term
        ok &= r.first_defect_order() == Some(2);
    }
    gate(9, "corrupted twists fail at the expected first order", ok);
}

struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 33
    }

    fn pick(&mut self, hi: u64) -> u64 {
        self.next() % hi
    }
}

fn random_element(rng: &mut Lcg, n: usize, order: u32) -> SeriesElement {
    let mut acc = SeriesElement::zero(n as u8, 1, order);
    for _ in 0..=rng.pick(2) {
        let mut term = SeriesElement::unit(n as u8, 1, order);
        for _ in 0..=rng.pick(2) {
            let i = rng.pick(n as u64) as usize + 1;
            let j = rng.pick(n as u64) as usize + 1;
            term = term
                .mul(&SeriesElement::generator(n as u8, order, i, j).unwrap())
                .unwrap();
        }
        let num = rng.pick(7) as i64 - 3;
        let den = rng.pick(4) as i64 + 1;
        let deg = rng.pick(2) as u32;
        acc = acc.add(&term.scale_t(&rat_frac(num, den), deg)).unwrap();
    }
    acc
}

#[test]
fn criterion_10_infrastructure_properties() {
    let mut ok = true;
    let order = 3;

    // associativity of the normal-ordered product, 100 random triples
    let mut rng = Lcg(0x5eed);
    for k in 0..100 {
        let n = (k % 4) + 2; // 2..=5
        let a = random_element(&mut rng, n, order);
        let b = random_element(&mut rng, n, order);
        let c = random_element(&mut rng, n, order);
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        ok &= left == right;
    }

    // the fundamental representation is an algebra homomorphism, 100 pairs
    let mut rng = Lcg(0xfeedbeef);
    for k in 0..100 {
        let n = (k % 4) + 2;
        let model = RepModel::fundamental(n as u8, rat_frac(1, 3));
        let a = random_element(&mut rng, n, order);
        let b = random_element(&mut rng, n, order);
        let lhs = rep_series(&a.mul(&b).unwrap(), &model).unwrap();
        let rhs = rep_series(&a, &model).unwrap().mul(&rep_series(&b, &model).unwrap());
        ok &= lhs == rhs;
    }

    // serialization round-trips byte-identically
    let mut rng = Lcg(0xcafe);
    for k in 0..20 {
        let n = (k % 4) + 2;
        let x = random_element(&mut rng, n, order);
        let json = twistlab::algebra::to_json(&x);
        let back = twistlab::algebra::from_json(&json).unwrap();
        ok &= twistlab::algebra::to_json(&back) == json;
        ok &= back == x;
    }
    let plan = make_plan(5).unwrap();
    let params = ParamSet::default_for(&plan);
    let f = full_chain(&plan, &params, 2).unwrap();
    let json = f.to_json();
    let back = TwistElement::from_json(&json).unwrap();
    ok &= back.to_json() == json;

    // coassociativity spot check through the twisted coproduct machinery
    let h = SeriesElement::generator(3, order, 1, 1).unwrap();
    let d1 = hopf::coproduct(&h).unwrap();
    ok &= hopf::coproduct_on_leg(&d1, 1).unwrap() == hopf::coproduct_on_leg(&d1, 2).unwrap();

    // a sanity pass over the R-matrix path with the chain
    let f = full_chain(&plan, &params, 2).unwrap();
    ok &= qybe_check(&r_matrix(&f).unwrap(), 2).unwrap().passed();

    gate(10, "pbw, representation, and serialization properties", ok);
}
