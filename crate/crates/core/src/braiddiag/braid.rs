use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A braid word on `strands` strands; each letter is `(i, ±1)` for
/// `σ_i^{±1}` with `1 <= i < strands`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<(usize, i8)>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<(usize, i8)>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::NonPositiveStrands(0));
        }
        for &(i, e) in &letters {
            if i == 0 || i >= strands {
                return Err(Error::IndexOutOfRange { index: i as i64, max: strands - 1 });
            }
            debug_assert!(e == 1 || e == -1);
        }
        Ok(BraidWord { strands, letters })
    }

    /// Builds a word from `(index, power)` runs.
    pub fn from_powers(strands: usize, powers: &[(usize, i64)]) -> Result<Self> {
        let mut letters = Vec::new();
        for &(i, p) in powers {
            let e = if p < 0 { -1 } else { 1 };
            letters.extend(std::iter::repeat_n((i, e), p.unsigned_abs() as usize));
        }
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
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

    pub fn indices(&self) -> BTreeSet<usize> {
        self.letters.iter().map(|&(i, _)| i).collect()
    }

    /// Flips every exponent.
    pub fn mirror(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|&(i, e)| (i, -e)).collect() }
    }

    pub fn reverse(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().copied().collect() }
    }

    pub fn inverse(&self) -> Self {
        self.reverse().mirror()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::RankMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Underlying permutation: position `p` at the bottom ends at
    /// `perm[p]` at the top (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &(i, _) in &self.letters {
            at.swap(i - 1, i);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &start) in at.iter().enumerate() {
            perm[start] = pos;
        }
        perm
    }

    /// Number of components of the closure (cycles of the permutation).
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for s in 0..self.strands {
            if !seen[s] {
                count += 1;
                let mut p = s;
                while !seen[p] {
                    seen[p] = true;
                    p = perm[p];
                }
            }
        }
        count
    }

    /// Equal indices share a sign and adjacent indices have opposite signs.
    pub fn is_alternating_annular(&self) -> bool {
        let mut sign = vec![0i8; self.strands + 1];
        for &(i, e) in &self.letters {
            if sign[i] == -e {
                return false;
            }
            sign[i] = e;
        }
        (1..self.strands).all(|i| sign[i] == 0 || sign[i + 1] == 0 || sign[i] != sign[i + 1])
    }

    /// Alternating and every generator `1..b-1` occurs.
    pub fn is_fully_alternating(&self) -> bool {
        self.is_alternating_annular() && self.indices().len() == self.strands - 1
    }

    /// Genus of the fiber surface of the cover, `(b - 1) / 2`.
    pub fn genus(&self) -> usize {
        (self.strands - 1) / 2
    }

    /// Rejects even strand counts, which the branched double cover
    /// pipelines cannot use.
    pub fn require_odd(&self) -> Result<()> {
        if self.strands.is_multiple_of(2) {
            Err(Error::EvenStrandCount(self.strands))
        } else {
            Ok(())
        }
    }

    /// Runs of equal consecutive letters as `(index, power)`.
    pub fn powers(&self) -> Vec<(usize, i64)> {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for &(i, e) in &self.letters {
            match out.last_mut() {
                Some((j, p)) if *j == i && (*p > 0) == (e > 0) => *p += i64::from(e),
                _ => out.push((i, i64::from(e))),
            }
        }
        out
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b={}:", self.strands)?;
        for (i, p) in self.powers() {
            if p == 1 {
                write!(f, " s{i}")?;
            } else {
                write!(f, " s{i}^{p}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord({self})")
    }
}

impl std::str::FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_braid(s)
    }
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Syntax { position: self.pos, message: message.into() }
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos;
        if matches!(self.peek(), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        text.parse().map_err(|_| Error::Syntax { position: start, message: "expected an integer".into() })
    }
}

/// Parses `b=<int>: (s<idx>(^<int>)?)*`. The `b=` header is optional; the
/// strand count then defaults to the largest index plus one.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let mut c = Cursor { src: text.as_bytes(), pos: 0 };
    c.skip_ws();
    let mut strands: Option<i64> = None;
    if c.eat(b'b') {
        c.skip_ws();
        if !c.eat(b'=') {
            return Err(c.err("expected '=' after 'b'"));
        }
        c.skip_ws();
        strands = Some(c.int()?);
        c.skip_ws();
        if !c.eat(b':') {
            return Err(c.err("expected ':' after strand count"));
        }
    }
    let mut powers: Vec<(i64, i64)> = Vec::new();
    loop {
        c.skip_ws();
        match c.peek() {
            None => break,
            Some(b's') => {
                c.pos += 1;
                let idx = c.int()?;
                let exp = if c.eat(b'^') { c.int()? } else { 1 };
                powers.push((idx, exp));
                if matches!(c.peek(), Some(ch) if !ch.is_ascii_whitespace() && ch != b's') {
                    return Err(c.err("expected whitespace between letters"));
                }
            }
            Some(_) => return Err(c.err("expected a generator 's<index>'")),
        }
    }
    let inferred = powers.iter().map(|&(i, _)| i).max().unwrap_or(0).max(0) + 1;
    let b = strands.unwrap_or(inferred);
    if b <= 0 {
        return Err(Error::NonPositiveStrands(b));
    }
    let b = b as usize;
    let mut letters = Vec::new();
    for (i, p) in powers {
        if i < 1 || i as usize >= b {
            return Err(Error::IndexOutOfRange { index: i, max: b - 1 });
        }
        let e = if p < 0 { -1 } else { 1 };
        letters.extend(std::iter::repeat_n((i as usize, e), p.unsigned_abs() as usize));
    }
    Ok(BraidWord { strands: b, letters })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_powers() {
        let w = parse_braid("b=5: s1^-2 s3^-1 s2^2 s4 s3^-1").unwrap();
        assert_eq!(w.len(), 7);
        assert_eq!(w.indices().into_iter().collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        assert_eq!(w.letters()[0], (1, -1));
        assert_eq!(w.to_string(), "b=5: s1^-2 s3^-1 s2^2 s4 s3^-1");
    }

    #[test]
    fn empty_and_inferred() {
        let w = parse_braid("b=2:").unwrap();
        assert_eq!((w.strands(), w.len()), (2, 0));
        assert_eq!(parse_braid("s1 s3").unwrap().strands(), 4);
        assert_eq!(parse_braid("").unwrap().strands(), 1);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_braid("b=3: s3"), Err(Error::IndexOutOfRange { index: 3, .. })));
        assert!(matches!(parse_braid("b=3: s0"), Err(Error::IndexOutOfRange { index: 0, .. })));
        assert_eq!(parse_braid("b=0:"), Err(Error::NonPositiveStrands(0)));
        assert!(matches!(parse_braid("b=3: x1"), Err(Error::Syntax { position: 5, .. })));
        assert!(matches!(parse_braid("b=3 s1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_braid("b=3: s1^"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn alternation() {
        let fig8 = parse_braid("b=3: s1 s2^-1 s1 s2^-1").unwrap();
        assert!(fig8.is_alternating_annular() && fig8.is_fully_alternating());
        let stair = parse_braid("b=5: s1^2 s2^2 s3^2 s4^2").unwrap();
        assert!(!stair.is_alternating_annular());
        assert!(parse_braid("b=4:").unwrap().is_alternating_annular());
        assert!(!parse_braid("b=4: s1 s2^-1").unwrap().is_fully_alternating());
        assert!(!parse_braid("b=3: s1 s1^-1 s2^-1").unwrap().is_alternating_annular());
    }

    #[test]
    fn closure_components_from_permutation() {
        assert_eq!(parse_braid("b=3: s1 s2^-1 s1 s2^-1").unwrap().closure_components(), 1);
        assert_eq!(parse_braid("b=4:").unwrap().closure_components(), 4);
        assert_eq!(parse_braid("b=3: s1^2 s2^3").unwrap().closure_components(), 2);
    }
}
