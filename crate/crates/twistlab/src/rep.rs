//! Exact evaluation in the fundamental representation. Every exponent of a
//! built twist maps to a nilpotent matrix, so exponentials and logarithms
//! terminate and all checks here are exact (no truncation), over rationals.
//!
//! These are necessary conditions only: the fundamental representation is
//! not faithful on tensor powers of U(gl(n)), so the symbolic checker
//! remains the authority.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use num::{BigInt, One, Zero};

use crate::algebra::{Rat, SeriesElement};
use crate::error::{Result, TwistError};

/// Sparse matrix over exact rationals; row-major, no stored zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatrix {
    dim: usize,
    rows: BTreeMap<u32, BTreeMap<u32, Rat>>,
}

impl SparseMatrix {
    pub fn zero(dim: usize) -> SparseMatrix {
        SparseMatrix {
            dim,
            rows: BTreeMap::new(),
        }
    }

    pub fn identity(dim: usize) -> SparseMatrix {
        let mut m = Self::zero(dim);
        for i in 0..dim as u32 {
            m.add_entry(i, i, Rat::one());
        }
        m
    }

    /// Matrix unit with a single 1 at (row, col), zero-based.
    pub fn unit(dim: usize, row: u32, col: u32) -> SparseMatrix {
        let mut m = Self::zero(dim);
        m.add_entry(row, col, Rat::one());
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn num_entries(&self) -> usize {
        self.rows.values().map(|r| r.len()).sum()
    }

    pub fn get(&self, row: u32, col: u32) -> Rat {
        self.rows
            .get(&row)
            .and_then(|r| r.get(&col))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, &Rat)> {
        self.rows
            .iter()
            .flat_map(|(i, r)| r.iter().map(move |(j, c)| (*i, *j, c)))
    }

    pub fn add_entry(&mut self, row: u32, col: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        let r = self.rows.entry(row).or_default();
        use std::collections::btree_map::Entry;
        match r.entry(col) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
        if r.is_empty() {
            self.rows.remove(&row);
        }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut out = self.clone();
        for (i, j, c) in other.entries() {
            out.add_entry(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SparseMatrix {
        let mut out = self.clone();
        for r in out.rows.values_mut() {
            for c in r.values_mut() {
                *c = -c.clone();
            }
        }
        out
    }

    pub fn scale(&self, k: &Rat) -> SparseMatrix {
        if k.is_zero() {
            return Self::zero(self.dim);
        }
        let mut out = self.clone();
        for r in out.rows.values_mut() {
            for c in r.values_mut() {
                *c *= k;
            }
        }
        out
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut out = Self::zero(self.dim);
        for (&i, row) in &self.rows {
            let mut acc: BTreeMap<u32, Rat> = BTreeMap::new();
            for (k, c) in row {
                if let Some(orow) = other.rows.get(k) {
                    for (j, d) in orow {
                        let e = acc.entry(*j).or_insert_with(Rat::zero);
                        *e += c * d;
                    }
                }
            }
            acc.retain(|_, c| !c.is_zero());
            if !acc.is_empty() {
                out.rows.insert(i, acc);
            }
        }
        out
    }

    pub fn commutator(&self, other: &SparseMatrix) -> SparseMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// Kronecker product; the left factor indexes the slow axis.
    pub fn kron(&self, other: &SparseMatrix) -> SparseMatrix {
        let od = other.dim as u32;
        let mut out = Self::zero(self.dim * other.dim);
        for (i1, j1, c1) in self.entries() {
            for (i2, j2, c2) in other.entries() {
                out.add_entry(i1 * od + i2, j1 * od + j2, c1 * c2);
            }
        }
        out
    }

    /// exp of a nilpotent matrix (terminating power series).
    pub fn exp_nilpotent(&self) -> Result<SparseMatrix> {
        let mut out = Self::identity(self.dim);
        let mut power = Self::identity(self.dim);
        let mut factorial = BigInt::one();
        for k in 1..=(self.dim + 1) {
            power = power.mul(self);
            if power.is_zero() {
                return Ok(out);
            }
            if k > self.dim {
                return Err(TwistError::NotNilpotent(k));
            }
            factorial *= BigInt::from(k);
            out = out.add(&power.scale(&Rat::new(BigInt::one(), factorial.clone())));
        }
        Ok(out)
    }

    /// log of a unipotent matrix (identity plus nilpotent).
    pub fn log_unipotent(&self) -> Result<SparseMatrix> {
        let y = self.sub(&Self::identity(self.dim));
        let mut out = Self::zero(self.dim);
        let mut power = Self::identity(self.dim);
        for k in 1..=(self.dim + 1) {
            power = power.mul(&y);
            if power.is_zero() {
                return Ok(out);
            }
            if k > self.dim {
                return Err(TwistError::NotNilpotent(k));
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            out = out.add(&power.scale(&Rat::new(BigInt::from(sign), BigInt::from(k))));
        }
        Ok(out)
    }

    /// Inverse of a unipotent matrix via the terminating Neumann series.
    pub fn inverse_unipotent(&self) -> Result<SparseMatrix> {
        let y = self.sub(&Self::identity(self.dim));
        let mut out = Self::identity(self.dim);
        let mut power = Self::identity(self.dim);
        for k in 1..=(self.dim + 1) {
            power = power.mul(&y);
            if power.is_zero() {
                return Ok(out);
            }
            if k > self.dim {
                return Err(TwistError::NotNilpotent(k));
            }
            out = if k % 2 == 1 {
                out.sub(&power)
            } else {
                out.add(&power)
            };
        }
        Ok(out)
    }

    /// Conjugate a matrix on V⊗V by the flip of the two factors.
    pub fn flip_legs(&self, n: usize) -> SparseMatrix {
        let n = n as u32;
        let mut out = Self::zero(self.dim);
        for (i, j, c) in self.entries() {
            let (i1, i2) = (i / n, i % n);
            let (j1, j2) = (j / n, j % n);
            out.add_entry(i2 * n + i1, j2 * n + j1, c.clone());
        }
        out
    }

    /// Embed a matrix on V⊗V into legs (1,2), (1,3) or (2,3) of V⊗V⊗V.
    pub fn embed_pair(&self, n: usize, placement: (usize, usize)) -> Result<SparseMatrix> {
        let n32 = n as u32;
        if self.dim != n * n {
            return Err(TwistError::Invalid(format!(
                "embed_pair: dim {} is not {}²",
                self.dim, n
            )));
        }
        let mut out = Self::zero(n * n * n);
        let place = |a: u32, b: u32, k: u32| -> Result<u32> {
            Ok(match placement {
                (1, 2) => (a * n32 + b) * n32 + k,
                (1, 3) => (a * n32 + k) * n32 + b,
                (2, 3) => (k * n32 + a) * n32 + b,
                _ => {
                    return Err(TwistError::Invalid(
                        "placement must be 12, 13 or 23".into(),
                    ))
                }
            })
        };
        for (i, j, c) in self.entries() {
            let (i1, i2) = (i / n32, i % n32);
            let (j1, j2) = (j / n32, j % n32);
            for k in 0..n32 {
                out.add_entry(place(i1, i2, k)?, place(j1, j2, k)?, c.clone());
            }
        }
        Ok(out)
    }
}

/// A generator-to-matrix assignment plus a numeric value for t.
pub struct RepModel {
    pub dim: usize,
    pub t: Rat,
    images: HashMap<(u8, u8), SparseMatrix>,
}

impl RepModel {
    /// ρ(E_ij) = matrix unit, on n-dimensional space.
    pub fn fundamental(n: u8, t: Rat) -> RepModel {
        let dim = n as usize;
        let mut images = HashMap::new();
        for i in 1..=n {
            for j in 1..=n {
                images.insert(
                    (i, j),
                    SparseMatrix::unit(dim, (i - 1) as u32, (j - 1) as u32),
                );
            }
        }
        RepModel { dim, t, images }
    }

    /// (ρ⊗ρ)∘Δ⁰ on generators: E_ij ↦ ρ(E_ij)⊗1 + 1⊗ρ(E_ij), on n².
    pub fn coproduct_model(n: u8, t: Rat) -> RepModel {
        let dim = (n as usize) * (n as usize);
        let id = SparseMatrix::identity(n as usize);
        let mut images = HashMap::new();
        for i in 1..=n {
            for j in 1..=n {
                let e = SparseMatrix::unit(n as usize, (i - 1) as u32, (j - 1) as u32);
                images.insert((i, j), e.kron(&id).add(&id.kron(&e)));
            }
        }
        RepModel { dim, t, images }
    }

    pub fn image(&self, i: u8, j: u8) -> Result<&SparseMatrix> {
        self.images.get(&(i, j)).ok_or(TwistError::IndexOutOfRange {
            i: i as usize,
            j: j as usize,
            n: 0,
        })
    }
}

/// Image of a rank-1 series element under a model, with t substituted.
pub fn rep_series(x: &SeriesElement, model: &RepModel) -> Result<SparseMatrix> {
    let mut out = SparseMatrix::zero(model.dim);
    for ((d, m), c) in x.terms() {
        if x.rank() != 1 {
            return Err(TwistError::RankMismatch(x.rank(), 1));
        }
        let mut acc = SparseMatrix::identity(model.dim);
        for &(g, e) in &m.0[0].0 {
            let img = model.image(g.i, g.j)?;
            for _ in 0..e {
                acc = acc.mul(img);
            }
        }
        let mut coeff = c.clone();
        for _ in 0..*d {
            coeff *= &model.t;
        }
        out = out.add(&acc.scale(&coeff));
    }
    Ok(out)
}

/// ρ of a rank-1 element in the fundamental representation.
pub fn fundamental(x: &SeriesElement, t: Rat) -> Result<SparseMatrix> {
    rep_series(x, &RepModel::fundamental(x.n(), t))
}

/// Outcome of a representation-level check. These are necessary conditions
/// only: the representation is not faithful on tensor cubes, so a pass here
/// does not replace the symbolic check.
#[derive(Clone, Debug)]
pub struct RepReport {
    pub check: String,
    pub n: u8,
    pub t: Rat,
    /// Nonzero entries of the defect matrix; empty iff the check passes.
    pub residual: Vec<(u32, u32, Rat)>,
    pub ms: u128,
}

impl RepReport {
    fn from_defect(check: &str, n: u8, t: &Rat, defect: &SparseMatrix, started: Instant) -> RepReport {
        RepReport {
            check: check.into(),
            n,
            t: t.clone(),
            residual: defect
                .entries()
                .map(|(i, j, c)| (i, j, c.clone()))
                .collect(),
            ms: started.elapsed().as_millis(),
        }
    }

    pub fn passed(&self) -> bool {
        self.residual.is_empty()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "check": self.check,
            "n": self.n,
            "t": crate::algebra::format_rational(&self.t),
            "status": if self.passed() { "pass" } else { "fail" },
            "residual": self.residual.iter().map(|(i, j, c)| {
                serde_json::json!([i, j, crate::algebra::format_rational(c)])
            }).collect::<Vec<_>>(),
            "note": "necessary condition only; the symbolic checker is the authority",
        })
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{}  {} (n={}, t={}){}",
            if self.passed() { "pass" } else { "fail" },
            self.check,
            self.n,
            crate::algebra::format_rational(&self.t),
            if self.passed() {
                String::new()
            } else {
                format!(": {} nonzero defect entries", self.residual.len())
            }
        )
    }
}

/// (ρ⊗ρ)(F) as an exact n²×n² matrix at a numeric t.
pub fn rep_twist(f: &crate::twists::TwistElement, t: &Rat) -> Result<SparseMatrix> {
    let fund = RepModel::fundamental(f.n, t.clone());
    f.matrix(&fund, &fund)
}

/// Twist-equation check in the representation: the two sides are built
/// from the factor closed forms, so no truncation is involved.
pub fn rep_cocycle_check(f: &crate::twists::TwistElement, t: &Rat) -> Result<RepReport> {
    let started = Instant::now();
    let n = f.n;
    let nn = n as usize;
    let fund = RepModel::fundamental(n, t.clone());
    let cop = RepModel::coproduct_model(n, t.clone());
    let m = f.matrix(&fund, &fund)?;
    let lhs = m.embed_pair(nn, (1, 2))?.mul(&f.matrix(&cop, &fund)?);
    let rhs = m.embed_pair(nn, (2, 3))?.mul(&f.matrix(&fund, &cop)?);
    let defect = lhs.sub(&rhs);
    Ok(RepReport::from_defect("rep-cocycle", n, t, &defect, started))
}

/// Quantum Yang–Baxter check for R = (ρ⊗ρ)(F₂₁ F⁻¹).
pub fn rep_qybe_check(f: &crate::twists::TwistElement, t: &Rat) -> Result<RepReport> {
    let started = Instant::now();
    let n = f.n;
    let nn = n as usize;
    let fund = RepModel::fundamental(n, t.clone());
    let m = f.matrix(&fund, &fund)?;
    let minv = f.matrix_inverse(&fund, &fund)?;
    let r = m.flip_legs(nn).mul(&minv);
    let r12 = r.embed_pair(nn, (1, 2))?;
    let r13 = r.embed_pair(nn, (1, 3))?;
    let r23 = r.embed_pair(nn, (2, 3))?;
    let defect = r12
        .mul(&r13)
        .mul(&r23)
        .sub(&r23.mul(&r13).mul(&r12));
    Ok(RepReport::from_defect("rep-qybe", n, t, &defect, started))
}
