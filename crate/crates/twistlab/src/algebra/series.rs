use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Result, TwistError};

use super::gen::{bracket_gens, Gen};
use super::monomial::{Monomial, TensorMonomial};
use super::straighten::mul_monomials;

pub type Rat = BigRational;

pub fn rat(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

pub fn rat_frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Guard against runaway term growth. Operations that would exceed this
/// many stored terms fail with `BudgetExceeded` instead of thrashing.
static TERM_BUDGET: AtomicUsize = AtomicUsize::new(50_000_000);

pub fn set_term_budget(limit: usize) {
    TERM_BUDGET.store(limit, Ordering::Relaxed);
}

pub fn term_budget() -> usize {
    TERM_BUDGET.load(Ordering::Relaxed)
}

/// Truncated formal power series in t with PBW-normal-ordered coefficients
/// in U(gl(n))^{⊗rank}. Keys are (t-degree, tensor monomial); stored
/// coefficients are nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct SeriesElement {
    n: u8,
    rank: u8,
    order: u32,
    terms: BTreeMap<(u32, TensorMonomial), Rat>,
}

impl SeriesElement {
    pub fn zero(n: u8, rank: u8, order: u32) -> SeriesElement {
        SeriesElement {
            n,
            rank,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(n: u8, rank: u8, order: u32) -> SeriesElement {
        let mut s = Self::zero(n, rank, order);
        s.terms.insert((0, TensorMonomial::unit(rank)), Rat::one());
        s
    }

    /// The matrix unit E_{i,j} as a rank-1 element of t-degree 0.
    pub fn generator(n: u8, order: u32, i: usize, j: usize) -> Result<SeriesElement> {
        let g = Gen::new(i, j, n as usize)?;
        let mut s = Self::zero(n, 1, order);
        s.terms.insert(
            (0, TensorMonomial(vec![Monomial::gen(g)])),
            Rat::one(),
        );
        Ok(s)
    }

    /// The identity I = sum of E_ii (a derived element, not a generator).
    pub fn identity_matrix(n: u8, order: u32) -> SeriesElement {
        let mut s = Self::zero(n, 1, order);
        for i in 1..=n {
            s.terms.insert(
                (0, TensorMonomial(vec![Monomial::gen(Gen::raw(i, i))])),
                Rat::one(),
            );
        }
        s
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, TensorMonomial), &Rat)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<(u32, TensorMonomial), Rat> {
        self.terms
    }

    pub fn from_terms(
        n: u8,
        rank: u8,
        order: u32,
        terms: impl IntoIterator<Item = ((u32, TensorMonomial), Rat)>,
    ) -> SeriesElement {
        let mut s = Self::zero(n, rank, order);
        for ((d, m), c) in terms {
            if d <= order && !c.is_zero() {
                s.add_term(d, m, c);
            }
        }
        s
    }

    pub fn add_term(&mut self, deg: u32, mono: TensorMonomial, coeff: Rat) {
        if deg > self.order || coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((deg, mono)) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Coefficient of (deg, mono); zero if absent.
    pub fn coeff(&self, deg: u32, mono: &TensorMonomial) -> Rat {
        self.terms
            .get(&(deg, mono.clone()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Smallest t-degree carrying a term, or None for the zero element.
    pub fn valuation(&self) -> Option<u32> {
        self.terms.keys().map(|(d, _)| *d).min()
    }

    /// True when the t^0 part is exactly the unit tensor.
    pub fn has_unit_constant_term(&self) -> bool {
        let mut seen_unit = false;
        for ((d, m), c) in &self.terms {
            if *d > 0 {
                break;
            }
            if m.is_unit() && c.is_one() {
                seen_unit = true;
            } else {
                return false;
            }
        }
        seen_unit
    }

    pub fn check_compatible(&self, other: &SeriesElement) -> Result<()> {
        if self.rank != other.rank {
            return Err(TwistError::RankMismatch(self.rank, other.rank));
        }
        if self.order != other.order {
            return Err(TwistError::OrderMismatch(self.order, other.order));
        }
        if self.n != other.n {
            return Err(TwistError::SizeMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &SeriesElement) -> Result<SeriesElement> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for ((d, m), c) in &other.terms {
            out.add_term(*d, m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SeriesElement) -> Result<SeriesElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SeriesElement {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, k: &Rat) -> SeriesElement {
        if k.is_zero() {
            return Self::zero(self.n, self.rank, self.order);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= k;
        }
        out
    }

    /// Multiply by the scalar k·t^shift.
    pub fn scale_t(&self, k: &Rat, shift: u32) -> SeriesElement {
        let mut out = Self::zero(self.n, self.rank, self.order);
        if k.is_zero() {
            return out;
        }
        for ((d, m), c) in &self.terms {
            out.add_term(d + shift, m.clone(), c * k);
        }
        out
    }

    pub fn truncate(&self, order: u32) -> SeriesElement {
        let mut out = Self::zero(self.n, self.rank, order);
        for ((d, m), c) in &self.terms {
            if *d <= order {
                out.terms.insert((*d, m.clone()), c.clone());
            }
        }
        out
    }

    /// Re-tag the truncation order, dropping any terms above it.
    pub fn with_order(&self, order: u32) -> SeriesElement {
        let mut out = self.clone();
        out.order = order;
        out.terms.retain(|(d, _), _| *d <= order);
        out
    }

    pub fn mul(&self, other: &SeriesElement) -> Result<SeriesElement> {
        self.check_compatible(other)?;
        let budget = term_budget();
        let mut acc: std::collections::HashMap<(u32, TensorMonomial), Rat> =
            std::collections::HashMap::new();
        let rank = self.rank as usize;
        for ((d1, m1), c1) in &self.terms {
            for ((d2, m2), c2) in &other.terms {
                let d = d1 + d2;
                if d > self.order {
                    continue;
                }
                let c12 = c1 * c2;
                // leg-wise PBW products, then the cross product over legs
                let legs: Vec<_> = (0..rank)
                    .map(|k| mul_monomials(&m1.0[k], &m2.0[k]))
                    .collect();
                let mut partial: Vec<(Vec<Monomial>, BigInt)> =
                    vec![(Vec::with_capacity(rank), BigInt::one())];
                for leg in &legs {
                    let mut next = Vec::with_capacity(partial.len() * leg.len());
                    for (prefix, pc) in &partial {
                        for (m, mc) in leg.iter() {
                            let mut p = prefix.clone();
                            p.push(m.clone());
                            next.push((p, pc * mc));
                        }
                    }
                    partial = next;
                }
                for (legs, ic) in partial {
                    let key = (d, TensorMonomial(legs));
                    let entry = acc.entry(key).or_insert_with(Rat::zero);
                    *entry += &c12 * Rat::from_integer(ic);
                }
                if acc.len() > budget {
                    return Err(TwistError::BudgetExceeded(acc.len()));
                }
            }
        }
        let mut out = Self::zero(self.n, self.rank, self.order);
        out.terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(out)
    }

    pub fn commutator(&self, other: &SeriesElement) -> Result<SeriesElement> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Integer power by repeated multiplication.
    pub fn pow(&self, k: u32) -> Result<SeriesElement> {
        let mut out = Self::unit(self.n, self.rank, self.order);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Place a rank-2 element into legs (12), (13) or (23) of rank 3.
    pub fn embed_leg(&self, placement: (usize, usize)) -> Result<SeriesElement> {
        if self.rank != 2 {
            return Err(TwistError::RankMismatch(self.rank, 2));
        }
        let (a, b) = placement;
        if !matches!((a, b), (1, 2) | (1, 3) | (2, 3)) {
            return Err(TwistError::Invalid(format!(
                "placement must be 12, 13 or 23, got {}{}",
                a, b
            )));
        }
        let mut out = Self::zero(self.n, 3, self.order);
        for ((d, m), c) in &self.terms {
            let mut legs = vec![Monomial::unit(); 3];
            legs[a - 1] = m.0[0].clone();
            legs[b - 1] = m.0[1].clone();
            out.add_term(*d, TensorMonomial(legs), c.clone());
        }
        Ok(out)
    }

    /// Swap the two legs of a rank-2 element (the flip τ).
    pub fn swap_legs(&self) -> Result<SeriesElement> {
        if self.rank != 2 {
            return Err(TwistError::RankMismatch(self.rank, 2));
        }
        let mut out = Self::zero(self.n, 2, self.order);
        for ((d, m), c) in &self.terms {
            out.add_term(
                *d,
                TensorMonomial(vec![m.0[1].clone(), m.0[0].clone()]),
                c.clone(),
            );
        }
        Ok(out)
    }

    /// Tensor product with another element (ranks add).
    pub fn tensor(&self, other: &SeriesElement) -> Result<SeriesElement> {
        if self.n != other.n {
            return Err(TwistError::SizeMismatch(self.n, other.n));
        }
        if self.order != other.order {
            return Err(TwistError::OrderMismatch(self.order, other.order));
        }
        let mut out = Self::zero(self.n, self.rank + other.rank, self.order);
        for ((d1, m1), c1) in &self.terms {
            for ((d2, m2), c2) in &other.terms {
                let d = d1 + d2;
                if d > self.order {
                    continue;
                }
                let mut legs = m1.0.clone();
                legs.extend(m2.0.iter().cloned());
                out.add_term(d, TensorMonomial(legs), c1 * c2);
            }
        }
        Ok(out)
    }

    /// The part of the series at exactly t-degree d, re-tagged at degree 0.
    pub fn t_coefficient(&self, deg: u32) -> SeriesElement {
        let mut out = Self::zero(self.n, self.rank, self.order);
        for ((d, m), c) in &self.terms {
            if *d == deg {
                out.terms.insert((0, m.clone()), c.clone());
            }
        }
        out
    }
}

/// The Lie bracket of two generators as a rank-1 element of t-degree 0.
pub fn commutator_generators(
    a_i: usize,
    a_j: usize,
    b_i: usize,
    b_j: usize,
    n: u8,
    order: u32,
) -> Result<SeriesElement> {
    let a = Gen::new(a_i, a_j, n as usize)?;
    let b = Gen::new(b_i, b_j, n as usize)?;
    let mut out = SeriesElement::zero(n, 1, order);
    for (g, sign) in bracket_gens(a, b) {
        out.add_term(
            0,
            TensorMonomial(vec![Monomial::gen(g)]),
            rat(sign as i64),
        );
    }
    Ok(out)
}

impl fmt::Debug for SeriesElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((d, m), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", c)?;
            if *d > 0 {
                write!(f, "t^{}", d)?;
            }
            if !m.is_unit() {
                write!(f, "·{:?}", m)?;
            }
        }
        Ok(())
    }
}
