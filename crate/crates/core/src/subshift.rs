//! The one-sided subshift of finite type `X_A`, seen through its cylinder
//! sets: admissible words and the commuting projections `s_J s_J^*`.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::bialgebra::{delta, DirectSumElement, Family};
use crate::error::{Error, Result};
use crate::matrix_monoid::ZeroOneMatrix;
use crate::scalar::Scalar;
use crate::star_algebra::{Element, Monomial, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subshift {
    context: ZeroOneMatrix,
}

impl Subshift {
    pub fn new(context: &ZeroOneMatrix) -> Self {
        Subshift {
            context: context.clone(),
        }
    }

    pub fn context(&self) -> &ZeroOneMatrix {
        &self.context
    }

    pub fn words(&self, len: usize) -> Vec<Word> {
        words(&self.context, len)
    }

    pub fn count(&self, len: usize) -> BigUint {
        count_words(&self.context, len)
    }
}

/// All admissible words of length `len` in lexicographic order.
pub fn words(a: &ZeroOneMatrix, len: usize) -> Vec<Word> {
    if len == 0 {
        return Vec::new();
    }
    let n = a.n() as u32;
    let mut level: Vec<Vec<u32>> = (1..=n).map(|i| vec![i]).collect();
    for _ in 1..len {
        level = level
            .iter()
            .flat_map(|w| {
                let last = *w.last().expect("nonempty");
                (1..=n).filter(move |&i| a.allows(last, i)).map(move |i| {
                    let mut v = w.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
    }
    level.into_iter().map(Word::new).collect()
}

/// Number of admissible words of length `len`, by a transfer-matrix count
/// (`n` starting paths advanced `len - 1` times).
pub fn count_words(a: &ZeroOneMatrix, len: usize) -> BigUint {
    if len == 0 {
        return BigUint::zero();
    }
    let n = a.n();
    let mut v: Vec<BigUint> = vec![BigUint::from(1u32); n];
    for _ in 1..len {
        v = (0..n)
            .map(|j| (0..n).filter(|&i| a.get(i, j)).map(|i| v[i].clone()).sum())
            .collect();
    }
    v.into_iter().sum()
}

/// `s_J s_J^*` in `O_A^(0)`.
pub fn cylinder_projection<S: Scalar>(a: &ZeroOneMatrix, j: &[u32]) -> Result<Element<S>> {
    let w = Word::admissible(a, j)?;
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Element::normalize(a, [(Monomial::projection(w), S::one())])
}

/// Every summand of `Δ(s_J s_J^*)` is a product of cylinder projections.
pub fn sf_delta_closure<S: Scalar>(a: &ZeroOneMatrix, j: &[u32]) -> Result<bool> {
    let p: Element<S> = cylinder_projection(a, j)?;
    let x = DirectSumElement::from(p);
    Ok(Family::SF.contains(&x) && Family::SF.contains_tensor(&delta(&x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::GaussianRational;

    type E = Element<GaussianRational>;

    fn golden() -> ZeroOneMatrix {
        ZeroOneMatrix::from_rows(&[[1, 1], [1, 0]]).unwrap()
    }

    #[test]
    fn fibonacci_counts() {
        let g = golden();
        let counts: Vec<usize> = (1..=4).map(|l| words(&g, l).len()).collect();
        assert_eq!(counts, [2, 3, 5, 8]);
        assert_eq!(count_words(&g, 4), BigUint::from(8u32));
        assert_eq!(
            count_words(&ZeroOneMatrix::full(2), 7),
            BigUint::from(128u32)
        );
    }

    #[test]
    fn alternating_words() {
        let flip = ZeroOneMatrix::from_rows(&[[0, 1], [1, 0]]).unwrap();
        let ws: Vec<String> = words(&flip, 3).iter().map(|w| w.to_string()).collect();
        assert_eq!(ws, ["(1,2,1)", "(2,1,2)"]);
    }

    #[test]
    fn cylinders_partition_unity() {
        let g = golden();
        for l in 1..=3 {
            let mut sum = E::zero(&g);
            for w in words(&g, l) {
                sum = &sum + &cylinder_projection(&g, w.letters()).unwrap();
            }
            assert_eq!(sum, E::unit(&g));
        }
        let p: E = cylinder_projection(&g, &[1]).unwrap();
        let q: E = cylinder_projection(&g, &[1, 2]).unwrap();
        assert_eq!(&p * &q, q);
        assert!(cylinder_projection::<GaussianRational>(&g, &[2, 2]).is_err());
    }

    #[test]
    fn sf_closure_examples() {
        let f4 = ZeroOneMatrix::full(4);
        assert!(sf_delta_closure::<GaussianRational>(&f4, &[1]).unwrap());
        assert!(sf_delta_closure::<GaussianRational>(&f4, &[3, 2]).unwrap());
        assert!(sf_delta_closure::<GaussianRational>(&golden(), &[2, 1]).unwrap());
    }
}
