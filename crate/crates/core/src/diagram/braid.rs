use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Word in the braid group on `strand_count` strands. A letter `(j, e)` is
/// `σ_j^e` with `1 ≤ j < strand_count` and `e = ±1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidWord {
    pub strand_count: usize,
    pub letters: Vec<(usize, i8)>,
}

impl BraidWord {
    pub fn new(strand_count: usize, letters: Vec<(usize, i8)>) -> Result<Self> {
        if strand_count == 0 {
            return Err(Error::InvalidArgument("braid needs at least one strand".into()));
        }
        for &(j, e) in &letters {
            if j == 0 || j >= strand_count || (e != 1 && e != -1) {
                return Err(Error::InvalidArgument(format!(
                    "bad letter ({j}, {e}) on {strand_count} strands"
                )));
            }
        }
        Ok(BraidWord {
            strand_count,
            letters,
        })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&(_, e)| e as i64).sum()
    }

    /// Permutation induced on strand positions (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        let mut p: Vec<usize> = (0..self.strand_count).collect();
        for &(j, _) in &self.letters {
            p.swap(j - 1, j);
        }
        p
    }

    /// Number of components of the trace closure.
    pub fn closure_components(&self) -> usize {
        let p = self.permutation();
        let mut seen = vec![false; p.len()];
        let mut count = 0;
        for i in 0..p.len() {
            if !seen[i] {
                count += 1;
                let mut j = i;
                while !seen[j] {
                    seen[j] = true;
                    j = p[j];
                }
            }
        }
        count
    }
}
