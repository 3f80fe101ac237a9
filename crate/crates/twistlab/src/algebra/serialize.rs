//! Canonical JSON form of a series element. Terms are emitted in
//! (t-degree, lexicographic legs) order, which is exactly the storage
//! order, so identical elements serialize byte-identically.

use num::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Result, TwistError};

use super::gen::Gen;
use super::monomial::{Monomial, TensorMonomial};
use super::series::{Rat, SeriesElement};

#[derive(Serialize, Deserialize)]
struct SeriesDto {
    rank: u8,
    n: u8,
    order: u32,
    terms: Vec<TermDto>,
}

#[derive(Serialize, Deserialize)]
struct TermDto {
    t: u32,
    legs: Vec<Vec<(u8, u8, u32)>>,
    coeff: String,
}

pub fn format_rational(c: &Rat) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub fn parse_rational(s: &str) -> Result<Rat> {
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let numer = p
        .trim()
        .parse()
        .map_err(|_| TwistError::Parse(format!("bad rational: {s}")))?;
    let denom = q
        .trim()
        .parse()
        .map_err(|_| TwistError::Parse(format!("bad rational: {s}")))?;
    if num::Zero::is_zero(&denom) {
        return Err(TwistError::Parse(format!("zero denominator: {s}")));
    }
    Ok(BigRational::new(numer, denom))
}

fn to_dto(x: &SeriesElement) -> SeriesDto {
    SeriesDto {
        rank: x.rank(),
        n: x.n(),
        order: x.order(),
        terms: x
            .terms()
            .map(|((d, m), c)| TermDto {
                t: *d,
                legs: m
                    .0
                    .iter()
                    .map(|leg| leg.0.iter().map(|(g, e)| (g.i, g.j, *e)).collect())
                    .collect(),
                coeff: format_rational(c),
            })
            .collect(),
    }
}

fn from_dto(dto: SeriesDto) -> Result<SeriesElement> {
    let mut out = SeriesElement::zero(dto.n, dto.rank, dto.order);
    for term in dto.terms {
        if term.legs.len() != dto.rank as usize {
            return Err(TwistError::Parse(format!(
                "term has {} legs, expected rank {}",
                term.legs.len(),
                dto.rank
            )));
        }
        let legs = term
            .legs
            .iter()
            .map(|leg| {
                let factors = leg
                    .iter()
                    .map(|&(i, j, e)| {
                        Gen::new(i as usize, j as usize, dto.n as usize).map(|g| (g, e))
                    })
                    .collect::<Result<Vec<_>>>()?;
                // re-canonicalize in case the input was not normal-ordered
                for w in factors.windows(2) {
                    if w[0].0 >= w[1].0 {
                        return Err(TwistError::Parse(
                            "legs must be strictly increasing in the generator order".into(),
                        ));
                    }
                }
                Ok(Monomial(factors))
            })
            .collect::<Result<Vec<_>>>()?;
        out.add_term(term.t, TensorMonomial(legs), parse_rational(&term.coeff)?);
    }
    Ok(out)
}

pub fn to_json(x: &SeriesElement) -> String {
    serde_json::to_string(&to_dto(x)).expect("series serialization cannot fail")
}

pub fn to_json_value(x: &SeriesElement) -> serde_json::Value {
    serde_json::to_value(to_dto(x)).expect("series serialization cannot fail")
}

pub fn from_json(s: &str) -> Result<SeriesElement> {
    let dto: SeriesDto =
        serde_json::from_str(s).map_err(|e| TwistError::Parse(e.to_string()))?;
    from_dto(dto)
}

pub fn from_json_value(v: serde_json::Value) -> Result<SeriesElement> {
    let dto: SeriesDto =
        serde_json::from_value(v).map_err(|e| TwistError::Parse(e.to_string()))?;
    from_dto(dto)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::series::rat_frac;

    #[test]
    fn round_trip_is_byte_exact() {
        let e12 = SeriesElement::generator(4, 3, 1, 2).unwrap();
        let e21 = SeriesElement::generator(4, 3, 2, 1).unwrap();
        let x = e12
            .mul(&e21)
            .unwrap()
            .scale(&rat_frac(-7, 3))
            .scale_t(&rat_frac(1, 1), 2);
        let s = to_json(&x);
        let y = from_json(&s).unwrap();
        assert_eq!(x, y);
        assert_eq!(s, to_json(&y));
    }

    #[test]
    fn rejects_unordered_legs() {
        let bad = r#"{"rank":1,"n":3,"order":2,"terms":[{"t":0,"legs":[[[1,2,1],[2,1,1]]],"coeff":"1/1"}]}"#;
        assert!(from_json(bad).is_err());
    }
}
