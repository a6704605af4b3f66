//! The modified gauge action, kept formal.
//!
//! On `O_A` with `A` of size `n` the action multiplies `s_i` by `z^{log n}`,
//! so a monomial of degree `d` picks up `z^{d log n} = z^{log n^d}`. A phase
//! `z^{log q}` is stored as the positive rational `q`; phases multiply by
//! multiplying `q`. Acting by the formal power `z^a` raises every `q` to `a`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};

use crate::matrix_monoid::ZeroOneMatrix;
use crate::scalar::Scalar;
use crate::star_algebra::{Element, Monomial};

use super::{delta, DirectSumElement, TensorElement};

/// The exponent `log n` attached to `M_n`. Composition multiplies values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaugeExponent(u64);

impl GaugeExponent {
    pub fn new(n: u64) -> Option<Self> {
        (n > 0).then_some(GaugeExponent(n))
    }

    pub fn of(a: &ZeroOneMatrix) -> Self {
        GaugeExponent(a.n() as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// `log n + log m = log nm`.
    pub fn compose(self, other: Self) -> Self {
        GaugeExponent(self.0 * other.0)
    }

    /// `z^{d log n}` as a formal phase.
    pub fn phase(self, d: i64) -> FormalPhase {
        FormalPhase(BigRational::from_integer(BigInt::from(self.0)).pow(d as i32))
    }
}

/// The formal phase `z^{log q}`, `q > 0` rational.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormalPhase(BigRational);

impl FormalPhase {
    pub fn trivial() -> Self {
        FormalPhase(BigRational::one())
    }

    pub fn base(&self) -> &BigRational {
        &self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_one()
    }

    pub fn mul(&self, other: &Self) -> Self {
        FormalPhase(&self.0 * &other.0)
    }

    pub fn pow(&self, a: i64) -> Self {
        FormalPhase(self.0.clone().pow(a as i32))
    }
}

impl fmt::Display for FormalPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            write!(f, "1")
        } else {
            write!(f, "z^log({})", self.0)
        }
    }
}

fn monomial_phase(a: &ZeroOneMatrix, m: &Monomial, power: i64) -> FormalPhase {
    GaugeExponent::of(a).phase(m.degree() * power)
}

/// `Σ_q z^{log q} x_q`, grouped by phase.
#[derive(Debug, Clone, PartialEq)]
pub struct Graded<S: Scalar> {
    parts: BTreeMap<FormalPhase, DirectSumElement<S>>,
}

impl<S: Scalar> Graded<S> {
    pub fn new(parts: impl IntoIterator<Item = (FormalPhase, DirectSumElement<S>)>) -> Self {
        let mut map: BTreeMap<FormalPhase, DirectSumElement<S>> = BTreeMap::new();
        for (q, x) in parts {
            let e = map.entry(q).or_default();
            *e = e.add(&x);
        }
        map.retain(|_, x| !x.is_zero());
        Graded { parts: map }
    }

    pub fn parts(&self) -> impl Iterator<Item = (&FormalPhase, &DirectSumElement<S>)> {
        self.parts.iter()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Graded::new(
            self.parts
                .iter()
                .flat_map(|(q, x)| other.parts.iter().map(move |(r, y)| (q.mul(r), x.mul(y)))),
        )
    }

    /// Applies `λ_{z^a}` to every part, multiplying phases.
    pub fn regauge(&self, power: i64) -> Self {
        Graded::new(self.parts.iter().flat_map(|(q, x)| {
            gauge(power, x)
                .parts
                .into_iter()
                .map(move |(r, y)| (q.mul(&r), y))
        }))
    }
}

impl<S: Scalar> fmt::Display for Graded<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        for (i, (q, x)) in self.parts.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{q}: {}", x.to_string().replace('\n', "; "))?;
        }
        Ok(())
    }
}

/// `Σ_q z^{log q} T_q` for tensors.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedTensor<S: Scalar> {
    parts: BTreeMap<FormalPhase, TensorElement<S>>,
}

impl<S: Scalar> GradedTensor<S> {
    pub fn new(
        arity: usize,
        parts: impl IntoIterator<Item = (FormalPhase, TensorElement<S>)>,
    ) -> Self {
        let mut map: BTreeMap<FormalPhase, TensorElement<S>> = BTreeMap::new();
        for (q, x) in parts {
            let e = map.entry(q).or_insert_with(|| TensorElement::zero(arity));
            *e = e.checked_add(&x).expect("summands of equal arity");
        }
        map.retain(|_, x| !x.is_zero());
        GradedTensor { parts: map }
    }

    pub fn parts(&self) -> impl Iterator<Item = (&FormalPhase, &TensorElement<S>)> {
        self.parts.iter()
    }
}

/// `λ_{z^a}(x)`: every monomial of degree `d` over `A ∈ M_n` gets `z^{a d log n}`.
pub fn gauge<S: Scalar>(power: i64, x: &DirectSumElement<S>) -> Graded<S> {
    Graded::new(x.components().flat_map(|(a, e)| {
        e.terms().map(move |(m, c)| {
            let part = Element::from_checked_terms(a, [(m.clone(), c.clone())]);
            (monomial_phase(a, m, power), DirectSumElement::from(part))
        })
    }))
}

/// `(λ_{z^a} ⊗ ... ⊗ λ_{z^a})(t)`: phases of the legs multiply.
pub fn gauge_tensor<S: Scalar>(power: i64, t: &TensorElement<S>) -> GradedTensor<S> {
    let arity = t.arity();
    GradedTensor::new(
        arity,
        t.terms().map(|(ctxs, ms, c)| {
            let q = ctxs
                .iter()
                .zip(ms)
                .fold(FormalPhase::trivial(), |q, (a, m)| {
                    q.mul(&monomial_phase(a, m, power))
                });
            let single = TensorElement::from_raw(arity, [(ctxs.to_vec(), ms.to_vec(), c.clone())])
                .expect("summand of a valid tensor");
            (q, single)
        }),
    )
}

/// `Δ ∘ λ = (λ ⊗ λ) ∘ Δ` on `x`, phase by phase.
pub fn check_gauge_morphism<S: Scalar>(power: i64, x: &DirectSumElement<S>) -> bool {
    let lhs = GradedTensor::new(
        2,
        gauge(power, x).parts().map(|(q, y)| (q.clone(), delta(y))),
    );
    lhs == gauge_tensor(power, &delta(x))
}

/// `λ(xy) = λ(x) λ(y)`.
pub fn check_gauge_multiplicative<S: Scalar>(
    power: i64,
    x: &DirectSumElement<S>,
    y: &DirectSumElement<S>,
) -> bool {
    gauge(power, &x.mul(y)) == gauge(power, x).mul(&gauge(power, y))
}

/// `λ_{z^a} ∘ λ_{z^b} = λ_{z^{a+b}}`.
pub fn check_gauge_composition<S: Scalar>(a: i64, b: i64, x: &DirectSumElement<S>) -> bool {
    gauge(b, x).regauge(a) == gauge(a + b, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::GaussianRational;

    type E = Element<GaussianRational>;

    #[test]
    fn generator_phase_is_log_n() {
        let f2 = ZeroOneMatrix::full(2);
        let g = gauge(1, &DirectSumElement::from(E::generator(&f2, 1).unwrap()));
        let phases: Vec<String> = g.parts().map(|(q, _)| q.to_string()).collect();
        assert_eq!(phases, ["z^log(2)"]);
        let p = E::monomial(&f2, &[1], &[1]).unwrap();
        let g = gauge(1, &DirectSumElement::from(p));
        assert!(g.parts().all(|(q, _)| q.is_trivial()));
    }

    #[test]
    fn exponents_compose_multiplicatively() {
        let (two, three) = (
            GaugeExponent::new(2).unwrap(),
            GaugeExponent::new(3).unwrap(),
        );
        assert_eq!(two.compose(three), GaugeExponent::new(6).unwrap());
        assert_eq!(
            two.phase(1).mul(&three.phase(1)),
            GaugeExponent::new(6).unwrap().phase(1)
        );
        assert!(GaugeExponent::new(0).is_none());
    }

    #[test]
    fn morphism_on_f6() {
        let f6 = ZeroOneMatrix::full(6);
        let x = DirectSumElement::from(E::generator(&f6, 1).unwrap());
        assert!(check_gauge_morphism(1, &x));
        let y = DirectSumElement::from(E::monomial(&f6, &[2], &[3, 4]).unwrap());
        assert!(check_gauge_multiplicative(1, &x, &y));
        assert!(check_gauge_composition(2, -1, &x.add(&y)));
        assert!(check_gauge_composition(1, -1, &y));
    }
}
