use std::fmt;

use serde::{Deserialize, Serialize};

/// A freely reduced word; each letter is `(generator, ±1)` with generators
/// numbered from 1.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FreeWord {
    letters: Vec<(usize, i8)>,
}

/// Cancels adjacent inverse pairs until none remain.
pub fn reduce(letters: &[(usize, i8)]) -> FreeWord {
    let mut out: Vec<(usize, i8)> = Vec::with_capacity(letters.len());
    for &(g, e) in letters {
        debug_assert!(e == 1 || e == -1);
        match out.last() {
            Some(&(h, f)) if h == g && f == -e => {
                out.pop();
            }
            _ => out.push((g, e)),
        }
    }
    FreeWord { letters: out }
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn generator(g: usize) -> Self {
        FreeWord { letters: vec![(g, 1)] }
    }

    pub fn from_letters(letters: &[(usize, i8)]) -> Self {
        reduce(letters)
    }

    /// Builds `g_1^{p_1} g_2^{p_2} …` from `(generator, power)` runs.
    pub fn from_runs(runs: &[(usize, i64)]) -> Self {
        let mut letters = Vec::new();
        for &(g, p) in runs {
            let e = if p < 0 { -1 } else { 1 };
            letters.extend(std::iter::repeat_n((g, e), p.unsigned_abs() as usize));
        }
        reduce(&letters)
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        // both factors are reduced, so cancellation only happens at the seam
        let mut out = self.letters.clone();
        let mut rest = other.letters.iter().peekable();
        while let (Some(&(g, e)), Some(&&(h, f))) = (out.last(), rest.peek()) {
            if g == h && e == -f {
                out.pop();
                rest.next();
            } else {
                break;
            }
        }
        out.extend(rest.copied());
        FreeWord { letters: out }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord { letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn pow(&self, n: i64) -> FreeWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.unsigned_abs()).fold(FreeWord::identity(), |acc, _| acc.mul(&base))
    }

    /// Largest generator index used, 0 for the identity.
    pub fn max_generator(&self) -> usize {
        self.letters.iter().map(|&(g, _)| g).max().unwrap_or(0)
    }

    /// Exponent sum of each generator `1..=rank`.
    pub fn exponent_sums(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0i64; rank];
        for &(g, e) in &self.letters {
            v[g - 1] += i64::from(e);
        }
        v
    }

    /// Runs of equal letters as `(generator, power)`.
    pub fn runs(&self) -> Vec<(usize, i64)> {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for &(g, e) in &self.letters {
            match out.last_mut() {
                Some((h, p)) if *h == g && (*p > 0) == (e > 0) => *p += i64::from(e),
                _ => out.push((g, i64::from(e))),
            }
        }
        out
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        for (k, (g, p)) in self.runs().into_iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if p == 1 {
                write!(f, "g{g}")?;
            } else {
                write!(f, "g{g}^{p}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord({self})")
    }
}
