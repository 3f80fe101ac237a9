//! Randomized algebraic properties of the symbolic core: the PBW product,
//! the Hopf structure maps, exp/log, serialization, and the fundamental
//! representation.

use proptest::prelude::*;

use twistlab::algebra::{from_json, to_json, Rat, SeriesElement};
use twistlab::hopf::{coproduct, coproduct_on_leg, counit_leg, exp_series, log_series};
use twistlab::rep::{rep_series, RepModel};

const ORDER: u32 = 3;

/// A small random element of U(gl(n))[[t]]: a sum of a few scaled words
/// in the matrix-unit generators.
fn element(n: u8) -> impl Strategy<Value = SeriesElement> {
    element_graded(n, 2)
}

fn element_graded(n: u8, max_tdeg: u32) -> impl Strategy<Value = SeriesElement> {
    let letter = (1..=n as usize, 1..=n as usize);
    let term = (
        prop::collection::vec(letter, 0..3),
        -3i64..=3,
        1i64..=4,
        0u32..=max_tdeg,
    );
    prop::collection::vec(term, 1..4).prop_map(move |terms| {
        let mut acc = SeriesElement::zero(n, 1, ORDER);
        for (word, num, den, tdeg) in terms {
            let mut x = SeriesElement::unit(n, 1, ORDER);
            for (i, j) in word {
                x = x.mul(&SeriesElement::generator(n, ORDER, i, j).unwrap()).unwrap();
            }
            let coeff = Rat::new(num.into(), den.into());
            acc = acc.add(&x.scale_t(&coeff, tdeg)).unwrap();
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_associative(a in element(4), b in element(4), c in element(4)) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn product_distributes(a in element(3), b in element(3), c in element(3)) {
        let left = a.mul(&b.add(&c).unwrap()).unwrap();
        let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn normal_ordering_is_canonical(a in element(4), b in element(4)) {
        // ab − ba must re-straighten to the commutator computed directly
        let lhs = a.mul(&b).unwrap().sub(&b.mul(&a).unwrap()).unwrap();
        prop_assert_eq!(lhs, a.commutator(&b).unwrap());
    }

    #[test]
    fn coproduct_is_an_algebra_map(a in element(3), b in element(3)) {
        let lhs = coproduct(&a.mul(&b).unwrap()).unwrap();
        let rhs = coproduct(&a).unwrap().mul(&coproduct(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coproduct_is_coassociative(a in element(3)) {
        let d = coproduct(&a).unwrap();
        prop_assert_eq!(
            coproduct_on_leg(&d, 1).unwrap(),
            coproduct_on_leg(&d, 2).unwrap()
        );
    }

    #[test]
    fn counit_is_a_counit(a in element(3)) {
        let d = coproduct(&a).unwrap();
        prop_assert_eq!(counit_leg(&d, 1).unwrap(), a.clone());
        prop_assert_eq!(counit_leg(&d, 2).unwrap(), a);
    }

    #[test]
    fn log_inverts_exp(a in element(3)) {
        // shift to t-valuation ≥ 1 so both series terminate
        let x = a.scale_t(&Rat::new(1.into(), 1.into()), 1);
        let back = log_series(&exp_series(&x).unwrap()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn serialization_round_trips(a in element(4)) {
        let json = to_json(&a);
        let back = from_json(&json).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(to_json(&back), json);
    }

    #[test]
    // t-degree 0 on both sides, so the series truncation cannot discard
    // product terms that survive the numeric substitution
    fn fundamental_rep_is_a_homomorphism(a in element_graded(4, 0), b in element_graded(4, 0)) {
        let model = RepModel::fundamental(4, Rat::new(1.into(), 3.into()));
        let lhs = rep_series(&a.mul(&b).unwrap(), &model).unwrap();
        let rhs = rep_series(&a, &model).unwrap().mul(&rep_series(&b, &model).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}
