//! Twist factors and their ordered products. A factor is a named product
//! of exponentials; each exponent is a sum of tensor-product expressions
//! (or, for ad-hoc constructions, a directly supplied rank-2 series).

use serde_json::json;

use crate::algebra::{self, Rat, SeriesElement};
use crate::error::{Result, TwistError};
use crate::expr::Expr;
use crate::hopf::exp_series;
use crate::lie::LieVec;
use crate::rep::{RepModel, SparseMatrix};

use super::plan::ParamSet;

/// One exponent in a factor.
#[derive(Clone, Debug)]
pub enum Part {
    /// Σ_i a_i ⊗ b_i given in closed form.
    Tensor(Vec<(Expr, Expr)>),
    /// A rank-2 exponent series supplied directly (t-valuation ≥ 1).
    Raw(SeriesElement),
}

#[derive(Clone, Debug)]
pub struct Factor {
    pub name: String,
    /// The factor equals the ordered product of exp(part).
    pub parts: Vec<Part>,
    /// Lie-algebra directions spanned by the exponent letters, for carrier
    /// analysis (Cartan combinations stay whole).
    pub dirs: Vec<LieVec>,
}

impl Factor {
    pub fn new(name: impl Into<String>, parts: Vec<Part>, dirs: Vec<LieVec>) -> Factor {
        Factor {
            name: name.into(),
            parts,
            dirs,
        }
    }

    /// Evaluate one exponent as a truncated rank-2 series.
    pub fn part_series(part: &Part, n: u8, order: u32) -> Result<SeriesElement> {
        match part {
            Part::Raw(x) => {
                if x.rank() != 2 {
                    return Err(TwistError::RankMismatch(x.rank(), 2));
                }
                Ok(x.with_order(order))
            }
            Part::Tensor(terms) => {
                let mut acc = SeriesElement::zero(n, 2, order);
                for (a, b) in terms {
                    let ta = a.eval_series(n, order)?;
                    let tb = b.eval_series(n, order)?;
                    acc = acc.add(&ta.tensor(&tb)?)?;
                }
                if let Some(0) = acc.valuation() {
                    return Err(TwistError::ZeroValuation);
                }
                Ok(acc)
            }
        }
    }

    /// The exponent series of every part, in order.
    pub fn exponents(&self, n: u8, order: u32) -> Result<Vec<SeriesElement>> {
        self.parts
            .iter()
            .map(|p| Self::part_series(p, n, order))
            .collect()
    }

    /// The factor as an expanded rank-2 series.
    pub fn series(&self, n: u8, order: u32) -> Result<SeriesElement> {
        let mut acc = SeriesElement::unit(n, 2, order);
        for e in self.exponents(n, order)? {
            acc = acc.mul(&exp_series(&e)?)?;
        }
        Ok(acc)
    }

    /// The factor as an exact matrix under a pair of leg models, e.g.
    /// (fundamental, fundamental) or (coproduct model, fundamental).
    pub fn matrix(&self, left: &RepModel, right: &RepModel) -> Result<SparseMatrix> {
        let mut acc = SparseMatrix::identity(left.dim * right.dim);
        for part in &self.parts {
            let terms = match part {
                Part::Tensor(terms) => terms,
                Part::Raw(_) => {
                    return Err(TwistError::Invalid(format!(
                        "factor '{}' has a raw exponent; no closed form for the \
                         representation path",
                        self.name
                    )))
                }
            };
            let mut exponent = SparseMatrix::zero(left.dim * right.dim);
            for (a, b) in terms {
                exponent = exponent.add(&a.eval_matrix(left)?.kron(&b.eval_matrix(right)?));
            }
            acc = acc.mul(&exponent.exp_nilpotent()?);
        }
        Ok(acc)
    }
}

/// A twist: an ordered factor list (leftmost factor outermost, i.e. applied
/// last) together with its expanded series.
#[derive(Clone, Debug)]
pub struct TwistElement {
    pub n: u8,
    pub order: u32,
    pub params: ParamSet,
    pub factors: Vec<Factor>,
    pub element: SeriesElement,
}

impl TwistElement {
    pub fn from_factors(
        n: u8,
        order: u32,
        params: ParamSet,
        factors: Vec<Factor>,
    ) -> Result<TwistElement> {
        let mut element = SeriesElement::unit(n, 2, order);
        for f in &factors {
            element = element.mul(&f.series(n, order)?)?;
        }
        if !element.has_unit_constant_term() {
            return Err(TwistError::NonUnitConstantTerm);
        }
        Ok(TwistElement {
            n,
            order,
            params,
            factors,
            element,
        })
    }

    /// Compose G·F (G applied after F): factor lists concatenate.
    pub fn compose(outer: &TwistElement, inner: &TwistElement) -> Result<TwistElement> {
        if outer.n != inner.n {
            return Err(TwistError::SizeMismatch(outer.n, inner.n));
        }
        if outer.order != inner.order {
            return Err(TwistError::OrderMismatch(outer.order, inner.order));
        }
        let mut factors = outer.factors.clone();
        factors.extend(inner.factors.iter().cloned());
        Ok(TwistElement {
            n: outer.n,
            order: outer.order,
            params: outer.params.clone(),
            factors,
            element: outer.element.mul(&inner.element)?,
        })
    }

    /// All exponent series of all factors, in product order.
    pub fn exponents(&self) -> Result<Vec<SeriesElement>> {
        let mut out = Vec::new();
        for f in &self.factors {
            out.extend(f.exponents(self.n, self.order)?);
        }
        Ok(out)
    }

    /// The exact matrix image under leg models.
    pub fn matrix(&self, left: &RepModel, right: &RepModel) -> Result<SparseMatrix> {
        let mut acc = SparseMatrix::identity(left.dim * right.dim);
        for f in &self.factors {
            acc = acc.mul(&f.matrix(left, right)?);
        }
        Ok(acc)
    }

    /// Exact inverse of the matrix image: the reversed product of the
    /// inverse factor exponentials.
    pub fn matrix_inverse(&self, left: &RepModel, right: &RepModel) -> Result<SparseMatrix> {
        let mut acc = SparseMatrix::identity(left.dim * right.dim);
        for f in self.factors.iter().rev() {
            let mut inv = SparseMatrix::identity(left.dim * right.dim);
            for part in f.parts.iter().rev() {
                let terms = match part {
                    Part::Tensor(terms) => terms,
                    Part::Raw(_) => {
                        return Err(TwistError::Invalid(format!(
                            "factor '{}' has a raw exponent; no closed form for the \
                             representation path",
                            f.name
                        )))
                    }
                };
                let mut exponent = SparseMatrix::zero(left.dim * right.dim);
                for (a, b) in terms {
                    exponent = exponent.add(&a.eval_matrix(left)?.kron(&b.eval_matrix(right)?));
                }
                inv = inv.mul(&exponent.neg().exp_nilpotent()?);
            }
            acc = acc.mul(&inv);
        }
        Ok(acc)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "order": self.order,
            "params": {
                "xi": self.params.xi.iter().map(algebra::format_rational).collect::<Vec<_>>(),
                "zeta": self.params.zeta.iter().map(algebra::format_rational).collect::<Vec<_>>(),
            },
            "factors": self.factors.iter().map(|f| f.name.clone()).collect::<Vec<_>>(),
            "element": algebra::to_json_value(&self.element),
        })
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    /// Parse a serialized twist. Factor closed forms are not serialized, so
    /// the result carries names only; series-level checks work as usual.
    pub fn from_json(s: &str) -> Result<TwistElement> {
        let v: serde_json::Value =
            serde_json::from_str(s).map_err(|e| TwistError::Parse(e.to_string()))?;
        let n = v["n"]
            .as_u64()
            .ok_or_else(|| TwistError::Parse("missing n".into()))? as u8;
        let order = v["order"]
            .as_u64()
            .ok_or_else(|| TwistError::Parse("missing order".into()))? as u32;
        let parse_params = |key: &str| -> Result<Vec<Rat>> {
            v["params"][key]
                .as_array()
                .map(|a| {
                    a.iter()
                        .map(|x| {
                            algebra::parse_rational(x.as_str().ok_or_else(|| {
                                TwistError::Parse("parameter is not a string".into())
                            })?)
                        })
                        .collect()
                })
                .unwrap_or_else(|| Ok(vec![]))
        };
        let params = ParamSet {
            xi: parse_params("xi")?,
            zeta: parse_params("zeta")?,
        };
        let factors = v["factors"]
            .as_array()
            .map(|a| {
                a.iter()
                    .map(|x| {
                        Ok(Factor::new(
                            x.as_str()
                                .ok_or_else(|| TwistError::Parse("factor name".into()))?,
                            vec![],
                            vec![],
                        ))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .unwrap_or_else(|| Ok(vec![]))?;
        let element = algebra::from_json_value(v["element"].clone())?;
        if element.n() != n || element.order() != order || element.rank() != 2 {
            return Err(TwistError::Parse(
                "element header disagrees with twist header".into(),
            ));
        }
        Ok(TwistElement {
            n,
            order,
            params,
            factors,
            element,
        })
    }

    /// True when the factor list still carries closed forms (needed for the
    /// representation path and carrier analysis).
    pub fn has_closed_forms(&self) -> bool {
        !self.factors.is_empty() && self.factors.iter().all(|f| !f.parts.is_empty())
    }
}
