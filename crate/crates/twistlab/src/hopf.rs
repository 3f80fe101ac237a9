//! Hopf costructure of U(gl(n))[[t]]/t^{N+1}: primitive coproduct, counit,
//! antipode, and the twisting calculus (exp/log of t-positive elements,
//! series inversion, twisted coproducts and antipodes).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, One, Zero};

use crate::algebra::{mul_monomials, Monomial, Rat, SeriesElement, TensorMonomial};
use crate::error::{Result, TwistError};

type DeltaTerms = Vec<(Monomial, Monomial, BigInt)>;

fn delta_memo() -> &'static Mutex<HashMap<Monomial, Arc<DeltaTerms>>> {
    static MEMO: OnceLock<Mutex<HashMap<Monomial, Arc<DeltaTerms>>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut b = BigInt::one();
    for i in 0..k {
        b = b * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    b
}

/// Δ⁰ of a PBW monomial, as pairs of normal-ordered legs.
fn delta_monomial(m: &Monomial) -> Arc<DeltaTerms> {
    if m.is_unit() {
        return Arc::new(vec![(Monomial::unit(), Monomial::unit(), BigInt::one())]);
    }
    if let Some(hit) = delta_memo().lock().unwrap().get(m) {
        return hit.clone();
    }
    let mut acc: HashMap<(Monomial, Monomial), BigInt> = HashMap::new();
    acc.insert((Monomial::unit(), Monomial::unit()), BigInt::one());
    for &(g, e) in &m.0 {
        let mut next: HashMap<(Monomial, Monomial), BigInt> = HashMap::new();
        for ((a, b), c) in &acc {
            for k in 0..=e {
                let bk = binomial(e, k);
                let ga = Monomial(if k > 0 { vec![(g, k)] } else { vec![] });
                let gb = Monomial(if e - k > 0 { vec![(g, e - k)] } else { vec![] });
                for (a2, ca) in mul_monomials(a, &ga).iter() {
                    for (b2, cb) in mul_monomials(b, &gb).iter() {
                        *next.entry((a2.clone(), b2.clone())).or_default() +=
                            c * &bk * ca * cb;
                    }
                }
            }
        }
        next.retain(|_, c| !c.is_zero());
        acc = next;
    }
    let mut out: DeltaTerms = acc.into_iter().map(|((a, b), c)| (a, b, c)).collect();
    out.sort_by(|x, y| (&x.0, &x.1).cmp(&(&y.0, &y.1)));
    let out = Arc::new(out);
    delta_memo().lock().unwrap().insert(m.clone(), out.clone());
    out
}

/// Apply the primitive coproduct to one leg of an element, splitting that
/// leg in two; the rank grows by one.
pub fn coproduct_on_leg(x: &SeriesElement, leg: usize) -> Result<SeriesElement> {
    let rank = x.rank() as usize;
    if leg == 0 || leg > rank {
        return Err(TwistError::Invalid(format!("no leg {leg} in rank {rank}")));
    }
    let mut out = SeriesElement::zero(x.n(), x.rank() + 1, x.order());
    for ((d, m), c) in x.terms() {
        for (a, b, ic) in delta_monomial(&m.0[leg - 1]).iter() {
            let mut legs = Vec::with_capacity(rank + 1);
            legs.extend(m.0[..leg - 1].iter().cloned());
            legs.push(a.clone());
            legs.push(b.clone());
            legs.extend(m.0[leg..].iter().cloned());
            out.add_term(*d, TensorMonomial(legs), c * Rat::from_integer(ic.clone()));
        }
    }
    Ok(out)
}

/// Primitive coproduct Δ⁰: U → U ⊗ U, extended as an algebra homomorphism.
pub fn coproduct(x: &SeriesElement) -> Result<SeriesElement> {
    if x.rank() != 1 {
        return Err(TwistError::RankMismatch(x.rank(), 1));
    }
    coproduct_on_leg(x, 1)
}

/// Counit applied to one leg; the rank shrinks by one (rank must be >= 2).
pub fn counit_leg(x: &SeriesElement, leg: usize) -> Result<SeriesElement> {
    let rank = x.rank() as usize;
    if rank < 2 {
        return Err(TwistError::RankMismatch(x.rank(), 2));
    }
    if leg == 0 || leg > rank {
        return Err(TwistError::Invalid(format!("no leg {leg} in rank {rank}")));
    }
    let mut out = SeriesElement::zero(x.n(), x.rank() - 1, x.order());
    for ((d, m), c) in x.terms() {
        if m.0[leg - 1].is_unit() {
            let legs: Vec<Monomial> = m
                .0
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != leg - 1)
                .map(|(_, mm)| mm.clone())
                .collect();
            out.add_term(*d, TensorMonomial(legs), c.clone());
        }
    }
    Ok(out)
}

/// Counit of a rank-1 element: the scalar series picking out unit monomials.
pub fn counit(x: &SeriesElement) -> Result<SeriesElement> {
    if x.rank() != 1 {
        return Err(TwistError::RankMismatch(x.rank(), 1));
    }
    let mut out = SeriesElement::zero(x.n(), 1, x.order());
    for ((d, m), c) in x.terms() {
        if m.is_unit() {
            out.add_term(*d, m.clone(), c.clone());
        }
    }
    Ok(out)
}

/// Antipode S(E_ij) = -E_ij extended anti-homomorphically.
pub fn antipode(x: &SeriesElement) -> Result<SeriesElement> {
    if x.rank() != 1 {
        return Err(TwistError::RankMismatch(x.rank(), 1));
    }
    let mut out = SeriesElement::zero(x.n(), 1, x.order());
    for ((d, m), c) in x.terms() {
        let mut word = m.0[0].word();
        word.reverse();
        let sign = if word.len() % 2 == 0 { 1 } else { -1 };
        for (nm, ic) in crate::algebra::normal_order(&word).iter() {
            out.add_term(
                *d,
                TensorMonomial(vec![nm.clone()]),
                c * Rat::from_integer(ic * BigInt::from(sign)),
            );
        }
    }
    Ok(out)
}

/// exp of an element with t-valuation >= 1, truncated at the element order.
pub fn exp_series(x: &SeriesElement) -> Result<SeriesElement> {
    if let Some(v) = x.valuation() {
        if v == 0 {
            return Err(TwistError::ZeroValuation);
        }
    }
    let mut out = SeriesElement::unit(x.n(), x.rank(), x.order());
    let mut power = SeriesElement::unit(x.n(), x.rank(), x.order());
    let mut factorial = BigInt::one();
    for k in 1..=x.order() {
        power = power.mul(x)?;
        if power.is_zero() {
            break;
        }
        factorial *= BigInt::from(k);
        out = out.add(&power.scale(&Rat::new(BigInt::one(), factorial.clone())))?;
    }
    Ok(out)
}

/// log of an element of the form 1 + (valuation >= 1), truncated.
pub fn log_series(x: &SeriesElement) -> Result<SeriesElement> {
    if !x.has_unit_constant_term() {
        return Err(TwistError::NonUnitConstantTerm);
    }
    let y = x.sub(&SeriesElement::unit(x.n(), x.rank(), x.order()))?;
    let mut out = SeriesElement::zero(x.n(), x.rank(), x.order());
    let mut power = SeriesElement::unit(x.n(), x.rank(), x.order());
    for k in 1..=x.order() {
        power = power.mul(&y)?;
        if power.is_zero() {
            break;
        }
        let sign = if k % 2 == 1 { 1 } else { -1 };
        out = out.add(&power.scale(&Rat::new(BigInt::from(sign), BigInt::from(k))))?;
    }
    Ok(out)
}

/// Inverse of an element with unit constant term (Neumann series).
pub fn invert_series(x: &SeriesElement) -> Result<SeriesElement> {
    if !x.has_unit_constant_term() {
        return Err(TwistError::NonUnitConstantTerm);
    }
    let y = x.sub(&SeriesElement::unit(x.n(), x.rank(), x.order()))?;
    let mut out = SeriesElement::unit(x.n(), x.rank(), x.order());
    let mut power = SeriesElement::unit(x.n(), x.rank(), x.order());
    for k in 1..=x.order() {
        power = power.mul(&y)?;
        if power.is_zero() {
            break;
        }
        let signed = if k % 2 == 1 { power.neg() } else { power.clone() };
        out = out.add(&signed)?;
    }
    Ok(out)
}

/// Conjugation e^{X} a e^{-X} computed as Σ ad_X^k(a)/k!; X must have
/// t-valuation >= 1 so the sum truncates.
pub fn conjugate_by_exp(exponent: &SeriesElement, a: &SeriesElement) -> Result<SeriesElement> {
    if let Some(v) = exponent.valuation() {
        if v == 0 {
            return Err(TwistError::ZeroValuation);
        }
    }
    let mut out = a.clone();
    let mut nested = a.clone();
    let mut factorial = BigInt::one();
    for k in 1..=a.order() {
        nested = exponent.commutator(&nested)?;
        if nested.is_zero() {
            break;
        }
        factorial *= BigInt::from(k);
        out = out.add(&nested.scale(&Rat::new(BigInt::one(), factorial.clone())))?;
    }
    Ok(out)
}

/// Twisted coproduct Δ_F(x) = F Δ⁰(x) F⁻¹.
pub fn twist_coproduct(f: &SeriesElement, x: &SeriesElement) -> Result<SeriesElement> {
    if f.rank() != 2 {
        return Err(TwistError::RankMismatch(f.rank(), 2));
    }
    let delta = coproduct(x)?;
    let f_inv = invert_series(f)?;
    f.mul(&delta)?.mul(&f_inv)
}

/// The element v = Σ f⁽¹⁾ S(f⁽²⁾) implementing the twisted antipode
/// S_F(a) = v S(a) v⁻¹.
pub fn twisted_antipode_v(f: &SeriesElement) -> Result<SeriesElement> {
    if f.rank() != 2 {
        return Err(TwistError::RankMismatch(f.rank(), 2));
    }
    let mut v = SeriesElement::zero(f.n(), 1, f.order());
    for ((d, m), c) in f.terms() {
        let a = SeriesElement::from_terms(
            f.n(),
            1,
            f.order(),
            [((0, TensorMonomial(vec![m.0[0].clone()])), Rat::one())],
        );
        let b = SeriesElement::from_terms(
            f.n(),
            1,
            f.order(),
            [((0, TensorMonomial(vec![m.0[1].clone()])), Rat::one())],
        );
        let prod = a.mul(&antipode(&b)?)?;
        v = v.add(&prod.scale_t(c, *d))?;
    }
    Ok(v)
}

/// Apply the twisted antipode S_F(a) = v S(a) v⁻¹.
pub fn twisted_antipode_apply(v: &SeriesElement, a: &SeriesElement) -> Result<SeriesElement> {
    let v_inv = invert_series(v)?;
    v.mul(&antipode(a)?)?.mul(&v_inv)
}

/// Multiplication map m(x ⊗ y) collapsing a rank-2 element to rank 1.
pub fn multiply_legs(x: &SeriesElement) -> Result<SeriesElement> {
    if x.rank() != 2 {
        return Err(TwistError::RankMismatch(x.rank(), 2));
    }
    let mut out = SeriesElement::zero(x.n(), 1, x.order());
    for ((d, m), c) in x.terms() {
        for (p, ic) in mul_monomials(&m.0[0], &m.0[1]).iter() {
            out.add_term(
                *d,
                TensorMonomial(vec![p.clone()]),
                c * Rat::from_integer(ic.clone()),
            );
        }
    }
    Ok(out)
}
