//! Coefficient fields for the algebraic core.
//!
//! Every algebra in this crate is a vector space over a [`Scalar`]. The
//! exact choice, and the default used by the crate-root aliases, is the field
//! of Gaussian rationals `Q(i)`; `BigRational` gives the real subfield, and
//! the float instances exist for quick numerical experiments only (equality
//! of floats is not an identity check).

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive};

/// A field with an involution, printable in the expression syntax.
pub trait Scalar:
    Clone + PartialEq + Debug + Num + Neg<Output = Self> + Send + Sync + 'static
{
    /// Complex conjugation (the identity on real fields).
    fn conj(&self) -> Self;

    /// The value `numer / denom`. `denom` must be nonzero.
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Self;

    /// The imaginary unit, if the field has one.
    fn imaginary_unit() -> Option<Self>;

    /// Splits a leading minus sign off for printing: returns `(true, -self)`
    /// when the value reads naturally as a negated positive quantity.
    fn split_sign(&self) -> (bool, Self);

    /// Renders a sign-free coefficient. Compound values come back wrapped in
    /// parentheses so that juxtaposition with a monomial parses back.
    fn render(&self) -> String;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(&BigInt::from(n), &BigInt::one())
    }
}

/// Real fields usable as the components of a complex scalar.
pub trait RealScalar: Scalar + PartialOrd {}

impl Scalar for BigRational {
    fn conj(&self) -> Self {
        self.clone()
    }

    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Self {
        BigRational::new(numer.clone(), denom.clone())
    }

    fn imaginary_unit() -> Option<Self> {
        None
    }

    fn split_sign(&self) -> (bool, Self) {
        if self.is_negative() {
            (true, -self.clone())
        } else {
            (false, self.clone())
        }
    }

    fn render(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
}

impl RealScalar for BigRational {}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn conj(&self) -> Self {
                *self
            }

            fn from_ratio(numer: &BigInt, denom: &BigInt) -> Self {
                let n = numer.to_f64().unwrap_or(f64::NAN);
                let d = denom.to_f64().unwrap_or(f64::NAN);
                (n / d) as $t
            }

            fn imaginary_unit() -> Option<Self> {
                None
            }

            fn split_sign(&self) -> (bool, Self) {
                if *self < 0.0 {
                    (true, -*self)
                } else {
                    (false, *self)
                }
            }

            fn render(&self) -> String {
                format!("{}", self)
            }
        }

        impl RealScalar for $t {}
    };
}

float_scalar!(f32);
float_scalar!(f64);

impl<R: RealScalar> Scalar for Complex<R> {
    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }

    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Self {
        Complex::new(R::from_ratio(numer, denom), R::zero())
    }

    fn imaginary_unit() -> Option<Self> {
        Some(Complex::new(R::zero(), R::one()))
    }

    fn split_sign(&self) -> (bool, Self) {
        let neg_real = self.im.is_zero() && self.re < R::zero();
        let neg_imag = self.re.is_zero() && self.im < R::zero();
        if neg_real || neg_imag {
            (true, -self.clone())
        } else {
            (false, self.clone())
        }
    }

    fn render(&self) -> String {
        let imag = |im: &R| {
            if im.is_one() {
                "i".to_string()
            } else {
                format!("{} i", im.render())
            }
        };
        if self.im.is_zero() {
            return real_render(&self.re);
        }
        if self.re.is_zero() {
            return if self.im < R::zero() {
                format!("(-{})", imag(&-self.im.clone()))
            } else {
                imag(&self.im)
            };
        }
        let (re_neg, re_abs) = self.re.split_sign();
        let re = if re_neg {
            format!("-{}", re_abs.render())
        } else {
            re_abs.render()
        };
        let (im_neg, im_abs) = self.im.split_sign();
        format!(
            "({} {} {})",
            re,
            if im_neg { '-' } else { '+' },
            imag(&im_abs)
        )
    }
}

fn real_render<R: RealScalar>(value: &R) -> String {
    let (neg, abs) = value.split_sign();
    if neg {
        format!("(-{})", abs.render())
    } else {
        abs.render()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::GaussianRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn gaussian_rendering() {
        let c = |a: BigRational, b: BigRational| GaussianRational::new(a, b);
        assert_eq!(c(q(1, 2), q(0, 1)).render(), "1/2");
        assert_eq!(c(q(0, 1), q(1, 1)).render(), "i");
        assert_eq!(c(q(0, 1), q(3, 4)).render(), "3/4 i");
        assert_eq!(c(q(2, 1), q(1, 1)).render(), "(2 + i)");
        assert_eq!(c(q(-1, 2), q(-3, 1)).render(), "(-1/2 - 3 i)");
        assert_eq!(
            c(q(0, 1), q(-2, 1)).split_sign(),
            (true, c(q(0, 1), q(2, 1)))
        );
    }

    #[test]
    fn conjugation_is_involutive() {
        let z = GaussianRational::new(q(2, 3), q(-5, 7));
        assert_eq!(z.conj().conj(), z);
        assert_eq!(q(4, 9).conj(), q(4, 9));
    }
}
