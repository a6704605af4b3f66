use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix_monoid::ZeroOneMatrix;

/// A finite word over the letters `1..=n` (possibly empty).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// A word checked for range and admissibility against `ctx`.
    pub fn admissible(ctx: &ZeroOneMatrix, letters: &[u32]) -> Result<Self> {
        let w = Word(letters.to_vec());
        w.check_range(ctx)?;
        if !w.is_admissible(ctx) {
            return Err(Error::Inadmissible {
                word: letters.to_vec(),
            });
        }
        Ok(w)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn check_range(&self, ctx: &ZeroOneMatrix) -> Result<()> {
        match self.0.iter().find(|&&l| l == 0 || l as usize > ctx.n()) {
            Some(&l) => Err(Error::IndexOutOfRange {
                index: l as usize,
                bound: ctx.n(),
            }),
            None => Ok(()),
        }
    }

    /// Consecutive letters are allowed by `ctx`. Assumes letters are in range.
    pub fn is_admissible(&self, ctx: &ZeroOneMatrix) -> bool {
        self.0.windows(2).all(|w| ctx.allows(w[0], w[1]))
    }

    pub fn concat(&self, other: &[u32]) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(other);
        Word(v)
    }

    pub fn pushed(&self, letter: u32) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.extend_from_slice(&self.0);
        v.push(letter);
        Word(v)
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.0.starts_with(&prefix.0)
    }

    /// The word without its last letter.
    pub fn parent(&self) -> Option<Word> {
        if self.0.is_empty() {
            None
        } else {
            Some(Word(self.0[..self.0.len() - 1].to_vec()))
        }
    }
}

impl From<Vec<u32>> for Word {
    fn from(v: Vec<u32>) -> Self {
        Word(v)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The monomial `s_J s_K^*`, with `J` the target and `K` the source word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub target: Word,
    pub source: Word,
}

impl Monomial {
    pub fn new(target: Word, source: Word) -> Self {
        Monomial { target, source }
    }

    /// The unit `I`, the empty/empty monomial.
    pub fn unit() -> Self {
        Monomial {
            target: Word::empty(),
            source: Word::empty(),
        }
    }

    /// `s_J s_J^*`.
    pub fn projection(word: Word) -> Self {
        Monomial {
            target: word.clone(),
            source: word,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.target.is_empty() && self.source.is_empty()
    }

    pub fn is_projection(&self) -> bool {
        self.target == self.source
    }

    /// Gauge degree `|J| - |K|`.
    pub fn degree(&self) -> i64 {
        self.target.len() as i64 - self.source.len() as i64
    }

    pub fn adjoint(&self) -> Self {
        Monomial {
            target: self.source.clone(),
            source: self.target.clone(),
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = u32> + '_ {
        self.target
            .letters()
            .iter()
            .chain(self.source.letters())
            .copied()
    }

    pub fn check_range(&self, ctx: &ZeroOneMatrix) -> Result<()> {
        self.target.check_range(ctx)?;
        self.source.check_range(ctx)
    }

    /// Whether `s_J s_K^*` is a nonzero element of `O_A`: both words
    /// admissible and, when both are nonempty, some letter may follow both
    /// last letters.
    pub fn is_nonvanishing(&self, ctx: &ZeroOneMatrix) -> bool {
        if !self.target.is_admissible(ctx) || !self.source.is_admissible(ctx) {
            return false;
        }
        match (self.target.last(), self.source.last()) {
            (Some(j), Some(k)) => {
                (1..=ctx.n() as u32).any(|i| ctx.allows(j, i) && ctx.allows(k, i))
            }
            _ => true,
        }
    }

    /// The expansion `s_J s_K^* = Σ_i χ(J,i) χ(K,i) s_{Ji} s_{Ki}^*` obtained
    /// from `Σ_i s_i s_i^* = I`, where `χ(W,i) = a[last(W), i]` and `χ(∅,i) = 1`.
    pub fn children(&self, ctx: &ZeroOneMatrix) -> Vec<Monomial> {
        let chi = |w: &Word, i: u32| w.last().is_none_or(|l| ctx.allows(l, i));
        (1..=ctx.n() as u32)
            .filter(|&i| chi(&self.target, i) && chi(&self.source, i))
            .map(|i| Monomial {
                target: self.target.pushed(i),
                source: self.source.pushed(i),
            })
            .collect()
    }

    /// Both words shortened by one letter; `None` unless both are nonempty.
    pub fn parent(&self) -> Option<Monomial> {
        Some(Monomial {
            target: self.target.parent()?,
            source: self.source.parent()?,
        })
    }
}

/// Order: gauge degree, source length, target lexicographic, source lexicographic.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.source.len().cmp(&other.source.len()))
            .then_with(|| self.target.cmp(&other.target))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// `I`, or the generator string, e.g. `s1 s2 s3* s1*` for `s_{12} s_{13}^*`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "I");
        }
        let mut parts: Vec<String> = self
            .target
            .letters()
            .iter()
            .map(|l| format!("s{l}"))
            .collect();
        parts.extend(self.source.letters().iter().rev().map(|l| format!("s{l}*")));
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_follows_degree_then_length() {
        let m = |t: Vec<u32>, s: Vec<u32>| Monomial::new(t.into(), s.into());
        let mut v = vec![
            m(vec![1], vec![]),
            m(vec![], vec![1]),
            m(vec![2], vec![2]),
            m(vec![], vec![]),
            m(vec![1], vec![2]),
        ];
        v.sort();
        let shown: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(shown, ["s1*", "I", "s1 s2*", "s2 s2*", "s1"]);
    }

    #[test]
    fn display_reverses_source() {
        let m = Monomial::new(vec![1].into(), vec![1, 2].into());
        assert_eq!(m.to_string(), "s1 s2* s1*");
    }

    #[test]
    fn vanishing_pairs() {
        // last letters 1 and 2 over [[1,0],[0,1]]: no common successor
        let id = ZeroOneMatrix::identity(2);
        assert!(!Monomial::new(vec![1].into(), vec![2].into()).is_nonvanishing(&id));
        let g = ZeroOneMatrix::from_rows(&[[1, 1], [1, 0]]).unwrap();
        assert!(Monomial::new(vec![1].into(), vec![2].into()).is_nonvanishing(&g));
        assert!(!Monomial::new(vec![2, 2].into(), vec![].into()).is_nonvanishing(&g));
    }
}
