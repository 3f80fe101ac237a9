//! The combinatorial skeleton of the construction for a given n: link
//! count, quasi-Jordanian count, the χ index function, the simple-root
//! partition, initial roots and constituent index sets.

use std::collections::BTreeSet;

use num::One;

use crate::algebra::Rat;
use crate::error::{Result, TwistError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootPlan {
    pub n: u8,
    /// Number of chain links.
    pub m: usize,
    /// Number of quasi-Jordanian coordinates (dim H⊥).
    pub p: usize,
    /// Simple-root indices α_χ(s) retained in the Levi decomposition.
    pub psi: BTreeSet<usize>,
    /// Simple-root indices α_j(s) whose negatives enter the parabolic.
    pub gamma: BTreeSet<usize>,
    /// λ_l⁰ = e_l − e_{n−l+1} as matrix-unit index pairs (l, n−l+1).
    pub initial_roots: Vec<(usize, usize)>,
    /// Per link l, the constituent indices k ∈ [l+1 .. n−l].
    pub constituents: Vec<Vec<usize>>,
}

impl RootPlan {
    /// χ(s) = (n + (n−2s)(−1)^{s+1})/2: n−s for odd s, s for even s.
    pub fn chi(&self, s: usize) -> usize {
        if s % 2 == 1 {
            self.n as usize - s
        } else {
            s
        }
    }

    /// j(s) = n − χ(s): s for odd s, n−s for even s.
    pub fn j(&self, s: usize) -> usize {
        self.n as usize - self.chi(s)
    }
}

pub fn make_plan(n: usize) -> Result<RootPlan> {
    if n < 2 {
        return Err(TwistError::Invalid(format!("need n >= 2, got {n}")));
    }
    if n > 127 {
        return Err(TwistError::Invalid(format!("n = {n} too large")));
    }
    let m = n / 2;
    let p = (n - 1) - m;
    let mut plan = RootPlan {
        n: n as u8,
        m,
        p,
        psi: BTreeSet::new(),
        gamma: BTreeSet::new(),
        initial_roots: (1..=m).map(|l| (l, n - l + 1)).collect(),
        constituents: (1..=m).map(|l| (l + 1..=n - l).collect()).collect(),
    };
    for s in 1..=p {
        plan.gamma.insert(plan.j(s));
    }
    plan.psi = (1..n).filter(|j| !plan.gamma.contains(j)).collect();
    Ok(plan)
}

/// Deformation parameters: ξ_l for the links, ζ_s for the quasi-Jordanian
/// coordinates. Stored as the rational coefficient of t¹.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSet {
    pub xi: Vec<Rat>,
    pub zeta: Vec<Rat>,
}

impl ParamSet {
    pub fn default_for(plan: &RootPlan) -> ParamSet {
        ParamSet {
            xi: vec![Rat::one(); plan.m],
            zeta: vec![Rat::one(); plan.p],
        }
    }

    pub fn xi(&self, l: usize) -> Result<&Rat> {
        self.xi
            .get(l - 1)
            .ok_or_else(|| TwistError::Invalid(format!("no link parameter ξ_{l}")))
    }

    pub fn zeta(&self, s: usize) -> Result<&Rat> {
        self.zeta
            .get(s - 1)
            .ok_or_else(|| TwistError::Invalid(format!("no coordinate parameter ζ_{s}")))
    }

    pub fn check_for(&self, plan: &RootPlan) -> Result<()> {
        if self.xi.len() != plan.m || self.zeta.len() != plan.p {
            return Err(TwistError::Invalid(format!(
                "expected {} ξ's and {} ζ's, got {} and {}",
                plan.m,
                plan.p,
                self.xi.len(),
                self.zeta.len()
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plan_11() {
        let plan = make_plan(11).unwrap();
        assert_eq!(plan.m, 5);
        assert_eq!(plan.p, 5);
        assert_eq!(plan.psi, [2, 4, 6, 8, 10].into_iter().collect());
        assert_eq!(plan.gamma, [1, 3, 5, 7, 9].into_iter().collect());
        assert_eq!(plan.initial_roots[4], (5, 7));
        assert_eq!(plan.constituents[4], vec![6]);
        assert_eq!(plan.constituents[0], (2..=10).collect::<Vec<_>>());
        // χ via the closed form (n + (n−2s)(−1)^{s+1})/2
        for s in 1..=5usize {
            let sign: i64 = if s % 2 == 1 { 1 } else { -1 };
            let closed = (11 + (11 - 2 * s as i64) * sign) / 2;
            assert_eq!(plan.chi(s) as i64, closed);
        }
    }

    #[test]
    fn plan_4_and_2() {
        let plan = make_plan(4).unwrap();
        assert_eq!((plan.m, plan.p), (2, 1));
        assert_eq!(plan.gamma, [1].into_iter().collect());
        assert_eq!(plan.psi, [2, 3].into_iter().collect());
        let plan = make_plan(2).unwrap();
        assert_eq!((plan.m, plan.p), (1, 0));
        assert!(plan.constituents[0].is_empty());
        assert!(make_plan(1).is_err());
    }
}
