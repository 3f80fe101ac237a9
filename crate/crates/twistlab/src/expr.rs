//! Closed-form expression trees for the building blocks of twist factors
//! (σ's, Cartan combinations, external coordinates, ω's). One tree has two
//! interpretations: a truncated symbolic series, and an exact matrix under
//! a representation model where every exp/log terminates by nilpotency.

use num::One;

use crate::algebra::{Rat, SeriesElement};
use crate::error::Result;
use crate::hopf::{exp_series, log_series};
use crate::rep::{RepModel, SparseMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    One,
    Gen(u8, u8),
    /// coeff · t^pow · expr
    Scaled(Rat, u32, Box<Expr>),
    Sum(Vec<Expr>),
    Prod(Vec<Expr>),
    Exp(Box<Expr>),
    Log(Box<Expr>),
}

impl Expr {
    pub fn gen(i: usize, j: usize) -> Expr {
        Expr::Gen(i as u8, j as u8)
    }

    pub fn scaled(c: Rat, pow: u32, e: Expr) -> Expr {
        Expr::Scaled(c, pow, Box::new(e))
    }

    pub fn scalar(c: Rat) -> Expr {
        Expr::scaled(c, 0, Expr::One)
    }

    pub fn neg(e: Expr) -> Expr {
        Expr::scaled(-Rat::one(), 0, e)
    }

    pub fn sum(v: Vec<Expr>) -> Expr {
        Expr::Sum(v)
    }

    pub fn prod(v: Vec<Expr>) -> Expr {
        Expr::Prod(v)
    }

    pub fn exp(e: Expr) -> Expr {
        Expr::Exp(Box::new(e))
    }

    pub fn log(e: Expr) -> Expr {
        Expr::Log(Box::new(e))
    }

    /// Identity matrix I = Σ E_uu as an expression.
    pub fn identity_matrix(n: u8) -> Expr {
        Expr::Sum((1..=n).map(|u| Expr::Gen(u, u)).collect())
    }

    pub fn eval_series(&self, n: u8, order: u32) -> Result<SeriesElement> {
        Ok(match self {
            Expr::One => SeriesElement::unit(n, 1, order),
            Expr::Gen(i, j) => SeriesElement::generator(n, order, *i as usize, *j as usize)?,
            Expr::Scaled(c, pow, e) => e.eval_series(n, order)?.scale_t(c, *pow),
            Expr::Sum(v) => {
                let mut acc = SeriesElement::zero(n, 1, order);
                for e in v {
                    acc = acc.add(&e.eval_series(n, order)?)?;
                }
                acc
            }
            Expr::Prod(v) => {
                let mut acc = SeriesElement::unit(n, 1, order);
                for e in v {
                    acc = acc.mul(&e.eval_series(n, order)?)?;
                }
                acc
            }
            Expr::Exp(e) => exp_series(&e.eval_series(n, order)?)?,
            Expr::Log(e) => log_series(&e.eval_series(n, order)?)?,
        })
    }

    pub fn eval_matrix(&self, model: &RepModel) -> Result<SparseMatrix> {
        Ok(match self {
            Expr::One => SparseMatrix::identity(model.dim),
            Expr::Gen(i, j) => model.image(*i, *j)?.clone(),
            Expr::Scaled(c, pow, e) => {
                let mut k = c.clone();
                for _ in 0..*pow {
                    k *= &model.t;
                }
                e.eval_matrix(model)?.scale(&k)
            }
            Expr::Sum(v) => {
                let mut acc = SparseMatrix::zero(model.dim);
                for e in v {
                    acc = acc.add(&e.eval_matrix(model)?);
                }
                acc
            }
            Expr::Prod(v) => {
                let mut acc = SparseMatrix::identity(model.dim);
                for e in v {
                    acc = acc.mul(&e.eval_matrix(model)?);
                }
                acc
            }
            Expr::Exp(e) => e.eval_matrix(model)?.exp_nilpotent()?,
            Expr::Log(e) => e.eval_matrix(model)?.log_unipotent()?,
        })
    }
}
