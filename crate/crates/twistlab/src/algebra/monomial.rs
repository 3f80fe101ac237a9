use std::fmt;

use super::gen::Gen;

/// A PBW-ordered monomial: factors strictly increasing in the fixed
/// generator order, exponents >= 1. The empty product is the unit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub Vec<(Gen, u32)>);

impl Monomial {
    pub fn unit() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn gen(g: Gen) -> Monomial {
        Monomial(vec![(g, 1)])
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree (word length).
    pub fn len(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> Vec<Gen> {
        let mut w = Vec::with_capacity(self.len() as usize);
        for &(g, e) in &self.0 {
            for _ in 0..e {
                w.push(g);
            }
        }
        w
    }

    /// Compress an already-sorted word into a monomial.
    pub fn from_sorted_word(word: &[Gen]) -> Monomial {
        let mut out: Vec<(Gen, u32)> = Vec::new();
        for &g in word {
            match out.last_mut() {
                Some((h, e)) if *h == g => *e += 1,
                _ => out.push((g, 1)),
            }
        }
        Monomial(out)
    }

    pub fn max_index(&self) -> usize {
        self.0
            .iter()
            .map(|(g, _)| g.i.max(g.j) as usize)
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        for (k, (g, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "·")?;
            }
            write!(f, "{:?}", g)?;
            if *e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }
}

/// A tensor monomial: one PBW monomial per tensor leg.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorMonomial(pub Vec<Monomial>);

impl TensorMonomial {
    pub fn unit(rank: u8) -> TensorMonomial {
        TensorMonomial(vec![Monomial::unit(); rank as usize])
    }

    pub fn rank(&self) -> u8 {
        self.0.len() as u8
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|m| m.is_unit())
    }
}

impl fmt::Debug for TensorMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, m) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ⊗ ")?;
            }
            write!(f, "{:?}", m)?;
        }
        Ok(())
    }
}
