//! The comultiplication on `CK_*^(0) = ⊕_A O_A^(0)`.
//!
//! For a factorisation `A = B ⊠ C` the embedding `φ_{B,C}: O_A → O_B ⊗ O_C`
//! sends `s_{m(i-1)+j}` to `s_i ⊗ s_j` (`m = C.n`). The comultiplication sums
//! these over all divisor pairs of `A`, and the counit evaluates the `O_1`
//! component. `C ⊗ O_A` is identified with `O_A` by absorbing the scalar.

mod direct_sum;
mod family;
mod gauge;
mod tensor;
mod unitized;

pub use direct_sum::DirectSumElement;
pub use family::{Family, SigmaRule};
pub use gauge::{
    check_gauge_composition, check_gauge_morphism, check_gauge_multiplicative, gauge, gauge_tensor,
    FormalPhase, GaugeExponent, Graded, GradedTensor,
};
pub use tensor::{coefficient_text, RawTerm, TensorElement};
pub use unitized::{unitized_counit, unitized_delta, UnitizedElement, UnitizedTensor};

use crate::error::{Error, Result};
use crate::matrix_monoid::{kronecker, split_letter, ZeroOneMatrix};
use crate::scalar::Scalar;
use crate::star_algebra::{Element, Monomial, Word};

/// Splits every letter of `s_J s_K^*` over `B ⊠ C` into its `B` and `C` parts.
pub fn split_monomial(m: &Monomial, c_dim: usize) -> (Monomial, Monomial) {
    let split = |w: &Word| -> (Word, Word) {
        let (l, r): (Vec<u32>, Vec<u32>) =
            w.letters().iter().map(|&x| split_letter(x, c_dim)).unzip();
        (Word::new(l), Word::new(r))
    };
    let (jl, jr) = split(&m.target);
    let (kl, kr) = split(&m.source);
    (Monomial::new(jl, kl), Monomial::new(jr, kr))
}

fn phi_raw<S: Scalar>(b: &ZeroOneMatrix, c: &ZeroOneMatrix, m: &Monomial, coeff: S) -> RawTerm<S> {
    let (l, r) = split_monomial(m, c.n());
    (vec![b.clone(), c.clone()], vec![l, r], coeff)
}

/// `φ_{B,C}(x)` for `x` over `B ⊠ C`.
pub fn phi<S: Scalar>(
    b: &ZeroOneMatrix,
    c: &ZeroOneMatrix,
    x: &Element<S>,
) -> Result<TensorElement<S>> {
    let bc = kronecker(b, c);
    if x.context() != &bc {
        return Err(Error::ContextMismatch {
            expected: bc.n(),
            found: x.context().n(),
        });
    }
    TensorElement::from_raw(2, x.terms().map(|(m, v)| phi_raw(b, c, m, v.clone())))
}

/// `Δ(x) = Σ_A Σ_{(B,C) ∈ N_A} φ_{B,C}(x_A)`.
pub fn delta<S: Scalar>(x: &DirectSumElement<S>) -> TensorElement<S> {
    delta_leg(&TensorElement::from_direct_sum(x), 0).expect("leg 0 of a one-leg tensor")
}

/// `Δ` of a single-algebra element.
pub fn delta_element<S: Scalar>(x: &Element<S>) -> TensorElement<S> {
    delta(&DirectSumElement::from(x.clone()))
}

/// Applies `Δ` to leg `t`, turning a `k`-leg tensor into a `k+1`-leg one.
pub fn delta_leg<S: Scalar>(x: &TensorElement<S>, t: usize) -> Result<TensorElement<S>> {
    x.expand_leg(t, 2, |a, m| {
        Ok(a.divisors()
            .iter()
            .map(|p| phi_raw(&p.left, &p.right, m, S::one()))
            .collect())
    })
}

/// Applies `φ_{B,C}` to leg `t`; that leg must live over `B ⊠ C` throughout.
pub fn phi_leg<S: Scalar>(
    x: &TensorElement<S>,
    t: usize,
    b: &ZeroOneMatrix,
    c: &ZeroOneMatrix,
) -> Result<TensorElement<S>> {
    let bc = kronecker(b, c);
    x.expand_leg(t, 2, |a, m| {
        if a != &bc {
            return Err(Error::ContextMismatch {
                expected: bc.n(),
                found: a.n(),
            });
        }
        Ok(vec![phi_raw(b, c, m, S::one())])
    })
}

/// `ε(x)`: the scalar of the `O_1` component.
pub fn counit<S: Scalar>(x: &DirectSumElement<S>) -> S {
    x.component(&ZeroOneMatrix::unit()).scalar_part()
}

/// Applies `ε` to leg `t` and absorbs the scalar, dropping that leg.
pub fn counit_leg<S: Scalar>(x: &TensorElement<S>, t: usize) -> Result<TensorElement<S>> {
    if x.arity() < 2 {
        return Err(Error::Dimension(
            "contracting the only leg of a tensor".into(),
        ));
    }
    x.expand_leg(t, 0, |a, m| {
        if a.is_unit() && m.is_unit() {
            Ok(vec![(vec![], vec![], S::one())])
        } else {
            Ok(vec![])
        }
    })
}

/// `(ε ⊗ id)Δ(x) = x` and `(id ⊗ ε)Δ(x) = x`.
pub fn check_counit_laws<S: Scalar>(x: &DirectSumElement<S>) -> bool {
    let d = delta(x);
    let expected = TensorElement::from_direct_sum(x);
    (0..2).all(|t| counit_leg(&d, t).map(|y| y == expected).unwrap_or(false))
}

/// `(Δ ⊗ id)Δ(x) = (id ⊗ Δ)Δ(x)`.
pub fn check_coassociativity<S: Scalar>(x: &DirectSumElement<S>) -> bool {
    let d = delta(x);
    match (delta_leg(&d, 0), delta_leg(&d, 1)) {
        (Ok(l), Ok(r)) => l == r,
        _ => false,
    }
}

/// Both sides of `(id_A ⊗ φ_{B,C}) φ_{A,BC} = (φ_{A,B} ⊗ id_C) φ_{AB,C}` on
/// `x` over `A ⊠ B ⊠ C`.
pub fn wcs_sides<S: Scalar>(
    a: &ZeroOneMatrix,
    b: &ZeroOneMatrix,
    c: &ZeroOneMatrix,
    x: &Element<S>,
) -> Result<(TensorElement<S>, TensorElement<S>)> {
    let bc = kronecker(b, c);
    let ab = kronecker(a, b);
    let left = phi_leg(&phi(a, &bc, x)?, 1, b, c)?;
    let right = phi_leg(&phi(&ab, c, x)?, 0, a, b)?;
    Ok((left, right))
}

pub fn check_wcs<S: Scalar>(
    a: &ZeroOneMatrix,
    b: &ZeroOneMatrix,
    c: &ZeroOneMatrix,
    x: &Element<S>,
) -> Result<bool> {
    let (l, r) = wcs_sides(a, b, c, x)?;
    Ok(l == r)
}

/// `φ_{1,A}(x) = I ⊗ x` and `φ_{A,1}(x) = x ⊗ I`.
pub fn check_unit_embeddings<S: Scalar>(x: &Element<S>) -> bool {
    let one = ZeroOneMatrix::unit();
    let unit = Element::unit(&one);
    let a = x.context();
    let left = phi(&one, a, x).ok() == Some(TensorElement::product_of(&[unit.clone(), x.clone()]));
    let right = phi(a, &one, x).ok() == Some(TensorElement::product_of(&[x.clone(), unit]));
    left && right
}

/// `Δ(xy) = Δ(x)Δ(y)` and `Δ(x^*) = Δ(x)^*`.
pub fn check_homomorphism<S: Scalar>(x: &DirectSumElement<S>, y: &DirectSumElement<S>) -> bool {
    let (dx, dy) = (delta(x), delta(y));
    let mult = dx
        .checked_mul(&dy)
        .map(|p| p == delta(&x.mul(y)))
        .unwrap_or(false);
    mult && delta(&x.adjoint()) == dx.adjoint()
}

/// `Δ(x) = flip(Δ(x))`.
pub fn is_cocommutative_on<S: Scalar>(x: &DirectSumElement<S>) -> bool {
    let d = delta(x);
    d.flip().map(|f| f == d).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::GaussianRational;
    use num_traits::Zero;

    type E = Element<GaussianRational>;

    fn s(a: &ZeroOneMatrix, i: u32) -> E {
        E::generator(a, i).unwrap()
    }

    fn golden() -> ZeroOneMatrix {
        ZeroOneMatrix::from_rows(&[[1, 1], [1, 0]]).unwrap()
    }

    #[test]
    fn phi_splits_letters() {
        let (f2, f3) = (ZeroOneMatrix::full(2), ZeroOneMatrix::full(3));
        let t = phi(&f2, &f3, &s(&ZeroOneMatrix::full(6), 5)).unwrap();
        assert_eq!(t, TensorElement::product_of(&[s(&f2, 2), s(&f3, 2)]));
        let i = E::unit(&ZeroOneMatrix::full(6));
        let u = phi(&f2, &f3, &i).unwrap();
        assert_eq!(u, TensorElement::product_of(&[E::unit(&f2), E::unit(&f3)]));
        assert!(phi(&f2, &f2, &i).is_err());
    }

    #[test]
    fn delta_of_f4_generator() {
        let f4 = ZeroOneMatrix::full(4);
        let d = delta_element(&s(&f4, 1));
        assert_eq!(d.len(), 3);
        let shown = d.to_string();
        let lines: Vec<&str> = shown.lines().collect();
        assert_eq!(
            lines,
            [
                "[1 (x) F4] 1 * I (x) s1",
                "[F2 (x) F2] 1 * s1 (x) s1",
                "[F4 (x) 1] 1 * s1 (x) I"
            ]
        );
    }

    #[test]
    fn prime_dimension_is_primitive() {
        let g = golden();
        let x = &s(&g, 1) * &s(&g, 2).adjoint();
        let one = E::unit(&ZeroOneMatrix::unit());
        let expected = TensorElement::product_of(&[one.clone(), x.clone()])
            .checked_add(&TensorElement::product_of(&[x.clone(), one]))
            .unwrap();
        assert_eq!(delta_element(&x), expected);
    }

    #[test]
    fn golden_square_has_middle_term() {
        let g = golden();
        let gg = kronecker(&g, &g);
        let d = delta_element(&s(&gg, 1));
        let tuples: Vec<Vec<ZeroOneMatrix>> = d.context_tuples().map(|t| t.to_vec()).collect();
        assert_eq!(tuples.len(), 3);
        assert_eq!(tuples[1], vec![g.clone(), g.clone()]);
    }

    #[test]
    fn counit_examples() {
        let f2 = ZeroOneMatrix::full(2);
        assert!(counit(&DirectSumElement::from(s(&f2, 1))).is_zero());
        let three = GaussianRational::from_int(3);
        let x = DirectSumElement::from(E::scalar(&ZeroOneMatrix::unit(), three.clone()));
        assert_eq!(counit(&x), three);
        assert!(check_counit_laws(&DirectSumElement::from(
            &s(&ZeroOneMatrix::full(6), 2) * &s(&ZeroOneMatrix::full(6), 3).adjoint()
        )));
    }

    #[test]
    fn wcs_examples() {
        let f2 = ZeroOneMatrix::full(2);
        let f8 = ZeroOneMatrix::full(8);
        let (l, r) = wcs_sides(&f2, &f2, &f2, &s(&f8, 1)).unwrap();
        assert_eq!(l, r);
        assert_eq!(
            l,
            TensorElement::product_of(&[s(&f2, 1), s(&f2, 1), s(&f2, 1)])
        );
        let g = golden();
        let ctx = kronecker(&kronecker(&f2, &g), &f2);
        for i in 1..=ctx.n() as u32 {
            assert!(check_wcs(&f2, &g, &f2, &s(&ctx, i)).unwrap());
        }
        assert!(check_unit_embeddings(&s(&g, 2)));
    }

    #[test]
    fn coassociativity_examples() {
        let f4 = ZeroOneMatrix::full(4);
        let x = DirectSumElement::from(s(&f4, 1));
        assert!(check_coassociativity(&x));
        let d = delta(&x);
        assert_eq!(delta_leg(&d, 0).unwrap().len(), 6);
        let y = DirectSumElement::from(&s(&f4, 2) * &s(&f4, 3).adjoint());
        assert!(check_coassociativity(&y));
        assert!(check_homomorphism(&x, &y));
    }

    #[test]
    fn flip_witness_over_f6() {
        let f6 = ZeroOneMatrix::full(6);
        // letter 1 splits as (1,1) in every factorisation, so it is flip symmetric
        assert!(is_cocommutative_on(&DirectSumElement::from(s(&f6, 1))));
        // letter 2 splits as (1,2) in both middle pairs; the flip turns it into (2,1)
        assert!(!is_cocommutative_on(&DirectSumElement::from(s(&f6, 2))));
    }
}
