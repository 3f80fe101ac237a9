//! Exact rational, PBW-normal-ordered arithmetic in U(gl(n)) and its
//! tensor powers, graded by a formal deformation parameter t with hard
//! truncation.

pub mod gen;
pub mod monomial;
pub mod serialize;
pub mod series;
mod straighten;

pub use gen::{bracket_gens, Gen};
pub use monomial::{Monomial, TensorMonomial};
pub use serialize::{format_rational, from_json, from_json_value, parse_rational, to_json, to_json_value};
pub use series::{
    commutator_generators, rat, rat_frac, set_term_budget, term_budget, Rat, SeriesElement,
};

pub use straighten::{memo_len, mul_monomials, normal_order};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_bracket_examples() {
        // [E_12, E_21] = E_11 - E_22
        let r = commutator_generators(1, 2, 2, 1, 4, 3).unwrap();
        let e11 = SeriesElement::generator(4, 3, 1, 1).unwrap();
        let e22 = SeriesElement::generator(4, 3, 2, 2).unwrap();
        assert_eq!(r, e11.sub(&e22).unwrap());
        // [E_12, E_34] = 0
        assert!(commutator_generators(1, 2, 3, 4, 4, 3).unwrap().is_zero());
        // [E_14, E_21] = -E_24
        let r = commutator_generators(1, 4, 2, 1, 4, 3).unwrap();
        let e24 = SeriesElement::generator(4, 3, 2, 4).unwrap();
        assert_eq!(r, e24.neg());
        // out of range
        assert!(commutator_generators(1, 5, 2, 1, 4, 3).is_err());
    }

    #[test]
    fn multiply_examples() {
        let n = 4;
        let ord = 3;
        let e12 = SeriesElement::generator(n, ord, 1, 2).unwrap();
        let e21 = SeriesElement::generator(n, ord, 2, 1).unwrap();
        // E_21 · E_12 is already normal-ordered
        let p = e21.mul(&e12).unwrap();
        assert_eq!(p.num_terms(), 1);
        // E_12 · E_21 = E_21 E_12 + E_11 - E_22
        let q = e12.mul(&e21).unwrap();
        let e11 = SeriesElement::generator(n, ord, 1, 1).unwrap();
        let e22 = SeriesElement::generator(n, ord, 2, 2).unwrap();
        let expected = p.add(&e11).unwrap().sub(&e22).unwrap();
        assert_eq!(q, expected);
        // degree overflow truncates to zero
        let te = e12.scale_t(&rat(1), 1);
        let sq = te.with_order(1).mul(&te.with_order(1)).unwrap();
        assert!(sq.is_zero());
    }

    #[test]
    fn commutator_examples() {
        let n = 2;
        let ord = 3;
        // [H_12, E_12] = E_12 with H_12 = (E_11 - E_22)/2
        let h = SeriesElement::generator(n, ord, 1, 1)
            .unwrap()
            .sub(&SeriesElement::generator(n, ord, 2, 2).unwrap())
            .unwrap()
            .scale(&rat_frac(1, 2));
        let e = SeriesElement::generator(n, ord, 1, 2).unwrap();
        assert_eq!(h.commutator(&e).unwrap(), e);
        // I is central
        let id = SeriesElement::identity_matrix(4, ord);
        let e13 = SeriesElement::generator(4, ord, 1, 3).unwrap();
        assert!(id.commutator(&e13).unwrap().is_zero());
    }

    #[test]
    fn embed_leg_examples() {
        let n = 4;
        let ord = 2;
        let e12 = SeriesElement::generator(n, ord, 1, 2).unwrap();
        let e21 = SeriesElement::generator(n, ord, 2, 1).unwrap();
        let f = e12.tensor(&e21).unwrap();
        let f13 = f.embed_leg((1, 3)).unwrap();
        // E_12 ⊗ 1 ⊗ E_21
        let expected = e12
            .tensor(&SeriesElement::unit(n, 1, ord))
            .unwrap()
            .tensor(&e21)
            .unwrap();
        assert_eq!(f13, expected);
        let unit2 = SeriesElement::unit(n, 2, ord);
        assert_eq!(
            unit2.embed_leg((2, 3)).unwrap(),
            SeriesElement::unit(n, 3, ord)
        );
    }

    #[test]
    fn truncation_coherence() {
        let n = 3;
        let a = SeriesElement::generator(n, 3, 1, 2)
            .unwrap()
            .scale_t(&rat(1), 1)
            .add(&SeriesElement::generator(n, 3, 2, 3).unwrap())
            .unwrap();
        let b = SeriesElement::generator(n, 3, 2, 1)
            .unwrap()
            .scale_t(&rat(2), 1)
            .add(&SeriesElement::unit(n, 1, 3))
            .unwrap();
        let full = a.mul(&b).unwrap().with_order(1);
        let early = a.with_order(1).mul(&b.with_order(1)).unwrap();
        assert_eq!(full, early);
    }

    #[test]
    fn budget_guard_trips() {
        set_term_budget(2);
        let n = 5;
        let mut a = SeriesElement::zero(n, 1, 4);
        for i in 1..=4usize {
            a = a
                .add(&SeriesElement::generator(n, 4, i, i + 1).unwrap())
                .unwrap();
        }
        let r = a.mul(&a).and_then(|x| x.mul(&a));
        set_term_budget(50_000_000);
        assert!(matches!(r, Err(crate::error::TwistError::BudgetExceeded(_))));
    }
}
