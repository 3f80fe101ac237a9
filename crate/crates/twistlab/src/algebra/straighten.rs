//! PBW normal ordering by adjacent-transposition rewriting.
//!
//! An out-of-order pair x_b x_a is rewritten as x_a x_b + [x_b, x_a]; the
//! bracket term is one letter shorter, so the rewriting terminates. Results
//! are memoized globally (the gl structure constants do not depend on n).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::BigInt;

use super::gen::{bracket_gens, Gen};
use super::monomial::Monomial;

pub type LinComb = Vec<(Monomial, BigInt)>;

fn memo() -> &'static Mutex<HashMap<Vec<Gen>, Arc<LinComb>>> {
    static MEMO: OnceLock<Mutex<HashMap<Vec<Gen>, Arc<LinComb>>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Number of memoized straightening results (for diagnostics).
pub fn memo_len() -> usize {
    memo().lock().unwrap().len()
}

fn first_inversion(word: &[Gen]) -> Option<usize> {
    word.windows(2).position(|w| w[0] > w[1])
}

/// Normal-order an arbitrary word of generators into a PBW linear
/// combination with integer coefficients.
pub fn normal_order(word: &[Gen]) -> Arc<LinComb> {
    if let Some(i) = first_inversion(word) {
        if let Some(hit) = memo().lock().unwrap().get(word) {
            return hit.clone();
        }
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();

        let mut swapped = word.to_vec();
        swapped.swap(i, i + 1);
        for (m, c) in normal_order(&swapped).iter() {
            *acc.entry(m.clone()).or_default() += c;
        }
        for (g, sign) in bracket_gens(word[i], word[i + 1]) {
            let mut shorter = Vec::with_capacity(word.len() - 1);
            shorter.extend_from_slice(&word[..i]);
            shorter.push(g);
            shorter.extend_from_slice(&word[i + 2..]);
            for (m, c) in normal_order(&shorter).iter() {
                *acc.entry(m.clone()).or_default() += c * BigInt::from(sign);
            }
        }

        let mut out: LinComb = acc
            .into_iter()
            .filter(|(_, c)| !num::Zero::is_zero(c))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        let out = Arc::new(out);
        memo()
            .lock()
            .unwrap()
            .insert(word.to_vec(), out.clone());
        out
    } else {
        Arc::new(vec![(Monomial::from_sorted_word(word), BigInt::from(1))])
    }
}

/// Product of two PBW monomials as a PBW linear combination.
pub fn mul_monomials(a: &Monomial, b: &Monomial) -> Arc<LinComb> {
    if a.is_unit() {
        return Arc::new(vec![(b.clone(), BigInt::from(1))]);
    }
    if b.is_unit() {
        return Arc::new(vec![(a.clone(), BigInt::from(1))]);
    }
    let mut word = a.word();
    word.extend(b.word());
    normal_order(&word)
}
