use std::cmp::Ordering;
use std::fmt;

use crate::error::{Result, TwistError};

/// Matrix unit E_{i,j} of gl(n), 1-based indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Gen {
    pub i: u8,
    pub j: u8,
}

impl Gen {
    pub fn new(i: usize, j: usize, n: usize) -> Result<Gen> {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(TwistError::IndexOutOfRange { i, j, n });
        }
        Ok(Gen {
            i: i as u8,
            j: j as u8,
        })
    }

    pub const fn raw(i: u8, j: u8) -> Gen {
        Gen { i, j }
    }

    pub fn is_diagonal(&self) -> bool {
        self.i == self.j
    }

    /// Position in the fixed PBW generator order: lower-triangular units
    /// first (lexicographic in (i,j)), then diagonal units, then
    /// upper-triangular units.
    pub fn order_key(&self) -> u32 {
        let class: u32 = match self.i.cmp(&self.j) {
            Ordering::Greater => 0,
            Ordering::Equal => 1,
            Ordering::Less => 2,
        };
        (class << 16) | ((self.i as u32) << 8) | (self.j as u32)
    }
}

impl PartialOrd for Gen {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Gen {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl fmt::Debug for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E{},{}", self.i, self.j)
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E_{{{},{}}}", self.i, self.j)
    }
}

/// Structure constants of gl(n): [E_ij, E_kl] = d_jk E_il - d_li E_kj.
/// At most two terms; coefficients are +-1.
pub fn bracket_gens(a: Gen, b: Gen) -> Vec<(Gen, i8)> {
    let mut out = Vec::with_capacity(2);
    if a.j == b.i {
        out.push((Gen::raw(a.i, b.j), 1));
    }
    if b.j == a.i {
        let g = Gen::raw(b.i, a.j);
        // merge if both deltas fire on the same unit (i=l, j=k gives E_ii - E_jj)
        if let Some(pos) = out.iter().position(|(h, _)| *h == g) {
            out[pos].1 -= 1;
            if out[pos].1 == 0 {
                out.remove(pos);
            }
        } else {
            out.push((g, -1));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_structure_constants() {
        // [E_12, E_21] = E_11 - E_22
        let r = bracket_gens(Gen::raw(1, 2), Gen::raw(2, 1));
        assert_eq!(r, vec![(Gen::raw(1, 1), 1), (Gen::raw(2, 2), -1)]);
        // [E_12, E_34] = 0
        assert!(bracket_gens(Gen::raw(1, 2), Gen::raw(3, 4)).is_empty());
        // [E_14, E_21] = -E_24
        let r = bracket_gens(Gen::raw(1, 4), Gen::raw(2, 1));
        assert_eq!(r, vec![(Gen::raw(2, 4), -1)]);
    }

    #[test]
    fn generator_order_classes() {
        // lower < diagonal < upper
        assert!(Gen::raw(2, 1) < Gen::raw(1, 1));
        assert!(Gen::raw(1, 1) < Gen::raw(1, 2));
        assert!(Gen::raw(2, 1) < Gen::raw(3, 1));
        assert!(Gen::raw(1, 2) < Gen::raw(1, 3));
    }

    #[test]
    fn index_bounds() {
        assert!(Gen::new(0, 1, 4).is_err());
        assert!(Gen::new(1, 5, 4).is_err());
        assert!(Gen::new(4, 4, 4).is_ok());
    }
}
