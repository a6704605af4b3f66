use std::collections::BTreeSet;
use std::fmt;

use crate::matrix_monoid::ZeroOneMatrix;
use crate::scalar::Scalar;
use crate::star_algebra::Monomial;

use super::{delta, DirectSumElement, TensorElement};

/// Chooses a set of letters `Σ_A ⊂ {1..n}` for each context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SigmaRule {
    /// `{1}`
    First,
    /// `{n}`
    Last,
    /// `{1, n}`
    FirstAndLast,
    /// The same letters in every context (those above `n` ignored).
    Fixed(BTreeSet<u32>),
}

impl SigmaRule {
    pub fn letters(&self, a: &ZeroOneMatrix) -> BTreeSet<u32> {
        let n = a.n() as u32;
        match self {
            SigmaRule::First => [1].into(),
            SigmaRule::Last => [n].into(),
            SigmaRule::FirstAndLast => [1, n].into(),
            SigmaRule::Fixed(s) => s.iter().copied().filter(|&l| l >= 1 && l <= n).collect(),
        }
    }

    pub fn contains(&self, a: &ZeroOneMatrix, letter: u32) -> bool {
        let n = a.n() as u32;
        match self {
            SigmaRule::First => letter == 1,
            SigmaRule::Last => letter == n,
            SigmaRule::FirstAndLast => letter == 1 || letter == n,
            SigmaRule::Fixed(s) => letter <= n && s.contains(&letter),
        }
    }
}

/// The subbialgebras checked by [`Family::closed_under_delta`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// Supported on full matrices `F_n`.
    CStar,
    /// Gauge-invariant part: every monomial has `|J| = |K|`.
    AF,
    /// Generated by the letters `Σ_A` in each `O_A`. Membership is decided on
    /// the stored letters, which is sufficient but not necessary.
    CkSigma(SigmaRule),
    /// Spanned by projections `s_J s_J^*`.
    SF,
}

impl Family {
    pub fn admits(&self, a: &ZeroOneMatrix, m: &Monomial) -> bool {
        match self {
            Family::CStar => a.is_full(),
            Family::AF => m.degree() == 0,
            Family::CkSigma(rule) => m.letters().all(|l| rule.contains(a, l)),
            Family::SF => m.is_projection(),
        }
    }

    pub fn contains<S: Scalar>(&self, x: &DirectSumElement<S>) -> bool {
        x.components()
            .all(|(a, e)| e.terms().all(|(m, _)| self.admits(a, m)))
    }

    /// Every summand has every leg in the family.
    pub fn contains_tensor<S: Scalar>(&self, t: &TensorElement<S>) -> bool {
        t.terms()
            .all(|(ctxs, ms, _)| ctxs.iter().zip(ms).all(|(a, m)| self.admits(a, m)))
    }

    /// `x` lies in the family and so do both legs of every summand of `Δ(x)`.
    pub fn closed_under_delta<S: Scalar>(&self, x: &DirectSumElement<S>) -> bool {
        self.contains(x) && self.contains_tensor(&delta(x))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::CStar => write!(f, "C_*"),
            Family::AF => write!(f, "AF_*"),
            Family::CkSigma(SigmaRule::First) => write!(f, "CK_*({{1}})"),
            Family::CkSigma(SigmaRule::Last) => write!(f, "CK_*({{n}})"),
            Family::CkSigma(SigmaRule::FirstAndLast) => write!(f, "CK_*({{1,n}})"),
            Family::CkSigma(SigmaRule::Fixed(s)) => {
                let parts: Vec<String> = s.iter().map(|l| l.to_string()).collect();
                write!(f, "CK_*({{{}}})", parts.join(","))
            }
            Family::SF => write!(f, "SF_*"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::star_algebra::Element;
    use crate::GaussianRational;

    type E = Element<GaussianRational>;

    #[test]
    fn projection_memberships() {
        let f2 = ZeroOneMatrix::full(2);
        let p = DirectSumElement::from(E::monomial(&f2, &[1], &[1]).unwrap());
        assert!(Family::AF.contains(&p));
        assert!(Family::SF.contains(&p));
        assert!(Family::CStar.contains(&p));
        let g = ZeroOneMatrix::from_rows(&[[1, 1], [1, 0]]).unwrap();
        assert!(!Family::CStar.contains(&DirectSumElement::from(E::generator(&g, 1).unwrap())));
    }

    #[test]
    fn sf_closure_on_f4() {
        let f4 = ZeroOneMatrix::full(4);
        for j in [vec![1], vec![2, 3]] {
            let p = DirectSumElement::from(E::monomial(&f4, &j, &j).unwrap());
            assert!(Family::SF.closed_under_delta(&p));
        }
    }

    #[test]
    fn sigma_rules() {
        let f4 = ZeroOneMatrix::full(4);
        assert_eq!(SigmaRule::FirstAndLast.letters(&f4), [1, 4].into());
        assert_eq!(SigmaRule::Fixed([2, 7].into()).letters(&f4), [2].into());
        let last = Family::CkSigma(SigmaRule::Last);
        assert!(last.closed_under_delta(&DirectSumElement::from(E::generator(&f4, 4).unwrap())));
        assert!(!last.contains(&DirectSumElement::from(E::generator(&f4, 3).unwrap())));
    }
}
