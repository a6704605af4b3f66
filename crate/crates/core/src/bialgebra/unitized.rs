//! The unitization `C·1 ⊕ CK_*` with `(a, x)(b, y) = (ab, ay + bx + xy)`.
//! Its comultiplication sends the adjoined unit to `1 ⊗ 1` and agrees with
//! `Δ` on `CK_*`, so its image lies in `C(1 ⊗ 1) ⊕ (CK_* ⊗ CK_*)`.

use std::fmt;

use crate::scalar::Scalar;

use super::tensor::coefficient_text;
use super::{counit, counit_leg, delta, DirectSumElement, TensorElement};

#[derive(Debug, Clone, PartialEq)]
pub struct UnitizedElement<S: Scalar> {
    pub scalar: S,
    pub body: DirectSumElement<S>,
}

impl<S: Scalar> UnitizedElement<S> {
    pub fn new(scalar: S, body: DirectSumElement<S>) -> Self {
        UnitizedElement { scalar, body }
    }

    pub fn unit() -> Self {
        Self::new(S::one(), DirectSumElement::zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.scalar.clone() + other.scalar.clone(),
            self.body.add(&other.body),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let body = other
            .body
            .scale(&self.scalar)
            .add(&self.body.scale(&other.scalar))
            .add(&self.body.mul(&other.body));
        Self::new(self.scalar.clone() * other.scalar.clone(), body)
    }

    pub fn adjoint(&self) -> Self {
        Self::new(self.scalar.conj(), self.body.adjoint())
    }
}

impl<S: Scalar> From<DirectSumElement<S>> for UnitizedElement<S> {
    fn from(body: DirectSumElement<S>) -> Self {
        Self::new(S::zero(), body)
    }
}

/// `c (1 ⊗ 1) + T` with `T ∈ CK_* ⊗ CK_*`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitizedTensor<S: Scalar> {
    pub scalar: S,
    pub body: TensorElement<S>,
}

impl<S: Scalar> UnitizedTensor<S> {
    pub fn mul(&self, other: &Self) -> Self {
        let body = other
            .body
            .scale(&self.scalar)
            .checked_add(&self.body.scale(&other.scalar))
            .and_then(|t| t.checked_add(&self.body.checked_mul(&other.body)?))
            .expect("two-leg tensors");
        UnitizedTensor {
            scalar: self.scalar.clone() * other.scalar.clone(),
            body,
        }
    }

    /// `(ε̃ ⊗ id)` for `leg = 0`, `(id ⊗ ε̃)` for `leg = 1`.
    pub fn contract(&self, leg: usize) -> UnitizedElement<S> {
        let body = counit_leg(&self.body, leg)
            .and_then(|t| t.to_direct_sum())
            .expect("contracting a two-leg tensor");
        UnitizedElement::new(self.scalar.clone(), body)
    }
}

impl<S: Scalar> fmt::Display for UnitizedTensor<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut lines = Vec::new();
        if !self.scalar.is_zero() {
            lines.push(format!("{} * 1 (x) 1", coefficient_text(&self.scalar)));
        }
        if !self.body.is_zero() {
            lines.push(self.body.to_string());
        }
        if lines.is_empty() {
            lines.push("0".into());
        }
        write!(f, "{}", lines.join("\n"))
    }
}

pub fn unitized_delta<S: Scalar>(x: &UnitizedElement<S>) -> UnitizedTensor<S> {
    UnitizedTensor {
        scalar: x.scalar.clone(),
        body: delta(&x.body),
    }
}

/// `ε̃(a, x) = a + ε(x)`.
pub fn unitized_counit<S: Scalar>(x: &UnitizedElement<S>) -> S {
    x.scalar.clone() + counit(&x.body)
}
