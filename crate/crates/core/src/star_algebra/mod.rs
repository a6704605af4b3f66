//! The dense *-subalgebra `O_A^(0)` generated by `s_1..s_n` subject to the
//! Cuntz-Krieger relations
//!
//! ```text
//! s_i^* s_i = Σ_j a_ij s_j s_j^*        Σ_i s_i s_i^* = I
//! ```
//!
//! Elements are finite combinations of monomials `s_J s_K^*` kept in the
//! canonical form described in [`normal`]; two elements are equal exactly
//! when their stored terms are.

pub(crate) mod normal;
mod word;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use word::{Monomial, Word};

use crate::error::{Error, Result};
use crate::matrix_monoid::ZeroOneMatrix;
use crate::scalar::Scalar;

/// An element of `O_A^(0)` over the coefficient field `S`.
#[derive(Clone, PartialEq)]
pub struct Element<S> {
    context: ZeroOneMatrix,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Element<S> {
    pub fn zero(context: &ZeroOneMatrix) -> Self {
        Element {
            context: context.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The unit `I`.
    pub fn unit(context: &ZeroOneMatrix) -> Self {
        Self::scalar(context, S::one())
    }

    pub fn scalar(context: &ZeroOneMatrix, c: S) -> Self {
        Self::from_monomial(context, Monomial::unit(), c)
    }

    /// The generator `s_i`. Over the 1x1 matrix this is the unit.
    pub fn generator(context: &ZeroOneMatrix, i: u32) -> Result<Self> {
        if i == 0 || i as usize > context.n() {
            return Err(Error::IndexOutOfRange {
                index: i as usize,
                bound: context.n(),
            });
        }
        Ok(Self::from_monomial(
            context,
            Monomial::new(Word::new(vec![i]), Word::empty()),
            S::one(),
        ))
    }

    /// `s_J s_K^*` from 1-based letters; inadmissible words give zero.
    pub fn monomial(context: &ZeroOneMatrix, target: &[u32], source: &[u32]) -> Result<Self> {
        let m = Monomial::new(Word::new(target.to_vec()), Word::new(source.to_vec()));
        m.check_range(context)?;
        Ok(Self::from_monomial(context, m, S::one()))
    }

    fn from_monomial(context: &ZeroOneMatrix, m: Monomial, c: S) -> Self {
        Self::from_checked_terms(context, [(m, c)])
    }

    /// Canonical form of an arbitrary list of terms. Inadmissible and
    /// vanishing monomials are dropped, like terms merged.
    pub fn normalize<I>(context: &ZeroOneMatrix, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, S)>,
    {
        let terms: Vec<(Monomial, S)> = terms.into_iter().collect();
        for (m, _) in &terms {
            m.check_range(context)?;
        }
        Ok(Self::from_checked_terms(context, terms))
    }

    pub(crate) fn from_checked_terms<I>(context: &ZeroOneMatrix, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, S)>,
    {
        let canon = normal::canonicalize(
            std::slice::from_ref(context),
            terms.into_iter().map(|(m, c)| (vec![m], c)),
        );
        let terms = canon
            .into_iter()
            .map(|(mut k, c)| (k.pop().unwrap(), c))
            .collect();
        Element {
            context: context.clone(),
            terms,
        }
    }

    pub fn context(&self) -> &ZeroOneMatrix {
        &self.context
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    /// The coefficient of `I`; for the 1x1 context this is the element itself.
    pub fn scalar_part(&self) -> S {
        self.coefficient(&Monomial::unit())
    }

    fn same_context(&self, other: &Self) -> Result<()> {
        if self.context != other.context {
            return Err(Error::DifferentContexts);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_context(other)?;
        let terms = self
            .terms
            .iter()
            .chain(&other.terms)
            .map(|(m, c)| (m.clone(), c.clone()));
        Ok(Self::from_checked_terms(&self.context, terms))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_context(other)?;
        let mut raw = Vec::new();
        for (x, a) in &self.terms {
            for (y, b) in &other.terms {
                let c = a.clone() * b.clone();
                raw.extend(
                    multiply_monomials(&self.context, x, y)
                        .into_iter()
                        .map(|m| (m, c.clone())),
                );
            }
        }
        Ok(Self::from_checked_terms(&self.context, raw))
    }

    pub fn scale(&self, c: &S) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, v)| (m.clone(), v.clone() * c.clone()));
        Self::from_checked_terms(&self.context, terms)
    }

    fn neg_ref(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        Element {
            context: self.context.clone(),
            terms,
        }
    }

    /// The involution: `(c s_J s_K^*)^* = conj(c) s_K s_J^*`.
    pub fn adjoint(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.adjoint(), c.conj()));
        Self::from_checked_terms(&self.context, terms)
    }

    /// Splits by gauge degree `|J| - |K|`. Over the 1x1 context everything is
    /// scalar and sits in degree 0.
    pub fn gauge_components(&self) -> BTreeMap<i64, Element<S>> {
        let mut out: BTreeMap<i64, Element<S>> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| Element::zero(&self.context))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// Every letter used by the stored terms.
    pub fn letters(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.keys().flat_map(|m| m.letters())
    }
}

/// `(s_J s_K^*)(s_L s_M^*)` as a sum of monomials (all with coefficient 1).
///
/// With `L = K·R` and `R` nonempty this is `s_{JR} s_M^*`; with `K = L·R` and
/// `R` nonempty it is `s_J s_{MR}^*`; with `K = L` it is
/// `s_J (s_K^* s_K) s_M^* = Σ_i a[last K, i] s_{Ji} s_{Mi}^*` (just
/// `s_J s_M^*` when `K` is empty). Otherwise the product is zero.
/// Inadmissible results are dropped later by normalization.
pub fn multiply_monomials(ctx: &ZeroOneMatrix, x: &Monomial, y: &Monomial) -> Vec<Monomial> {
    let (j, k) = (&x.target, &x.source);
    let (l, m) = (&y.target, &y.source);
    if l.starts_with(k) {
        let rest = &l.letters()[k.len()..];
        if !rest.is_empty() {
            return vec![Monomial::new(j.concat(rest), m.clone())];
        }
        return match k.last() {
            None => vec![Monomial::new(j.clone(), m.clone())],
            Some(last) => (1..=ctx.n() as u32)
                .filter(|&i| ctx.allows(last, i))
                .map(|i| Monomial::new(j.pushed(i), m.pushed(i)))
                .collect(),
        };
    }
    if k.starts_with(l) {
        let rest = &k.letters()[l.len()..];
        return vec![Monomial::new(j.clone(), m.concat(rest))];
    }
    Vec::new()
}

impl<S: Scalar> Add for &Element<S> {
    type Output = Element<S>;
    fn add(self, rhs: Self) -> Element<S> {
        self.checked_add(rhs)
            .expect("adding elements over different contexts")
    }
}

impl<S: Scalar> Sub for &Element<S> {
    type Output = Element<S>;
    fn sub(self, rhs: Self) -> Element<S> {
        self.checked_sub(rhs)
            .expect("subtracting elements over different contexts")
    }
}

impl<S: Scalar> Mul for &Element<S> {
    type Output = Element<S>;
    fn mul(self, rhs: Self) -> Element<S> {
        self.checked_mul(rhs)
            .expect("multiplying elements over different contexts")
    }
}

impl<S: Scalar> Neg for &Element<S> {
    type Output = Element<S>;
    fn neg(self) -> Element<S> {
        self.neg_ref()
    }
}

/// Joins `(coefficient, body)` pairs as `a + b - c`, omitting unit
/// coefficients. `body` must already be nonempty text.
pub(crate) fn format_sum<'a, S: Scalar + 'a>(
    terms: impl IntoIterator<Item = (&'a S, String)>,
) -> String {
    let mut out = String::new();
    for (i, (c, body)) in terms.into_iter().enumerate() {
        let (negative, magnitude) = c.split_sign();
        match (i, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        if !magnitude.is_one() {
            out.push_str(&magnitude.render());
            out.push(' ');
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Expression syntax, e.g. `s1 s2* - 1/2 I`; the zero element prints as `0`.
impl<S: Scalar> fmt::Display for Element<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_sum(
            self.terms.iter().map(|(m, c)| (c, m.to_string())),
        ))
    }
}

impl<S: Scalar> fmt::Debug for Element<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element[{}]({})", self.context, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{AlgebraElement, GaussianRational};
    use num_rational::BigRational;

    fn golden() -> ZeroOneMatrix {
        ZeroOneMatrix::from_rows(&[[1, 1], [1, 0]]).unwrap()
    }

    fn s(ctx: &ZeroOneMatrix, i: u32) -> AlgebraElement {
        Element::generator(ctx, i).unwrap()
    }

    fn gq(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(
            BigRational::from_integer(re.into()),
            BigRational::from_integer(im.into()),
        )
    }

    #[test]
    fn inadmissible_square_vanishes() {
        let g = golden();
        assert!((&s(&g, 2) * &s(&g, 2)).is_zero());
        assert!(!(&s(&g, 1) * &s(&g, 2)).is_zero());
    }

    #[test]
    fn source_projection_relation() {
        for a in [
            golden(),
            ZeroOneMatrix::full(3),
            ZeroOneMatrix::from_rows(&[[0, 1, 1], [1, 0, 0], [0, 1, 0]]).unwrap(),
        ] {
            for i in 1..=a.n() as u32 {
                let lhs = &s(&a, i).adjoint() * &s(&a, i);
                let mut rhs = Element::zero(&a);
                for j in 1..=a.n() as u32 {
                    if a.allows(i, j) {
                        rhs = &rhs + &(&s(&a, j) * &s(&a, j).adjoint());
                    }
                }
                assert_eq!(lhs, rhs, "relation for s_{i} over {a}");
            }
        }
    }

    #[test]
    fn orthogonal_range_projections() {
        let a = ZeroOneMatrix::full(3);
        let p1 = &s(&a, 1) * &s(&a, 1).adjoint();
        let p2 = &s(&a, 2) * &s(&a, 2).adjoint();
        assert!((&p1 * &p2).is_zero());
    }

    #[test]
    fn adjoint_examples() {
        let a = ZeroOneMatrix::full(2);
        assert_eq!(s(&a, 1).adjoint().to_string(), "s1*");
        let x = Element::monomial(&a, &[1], &[2]).unwrap().scale(&gq(2, 1));
        assert_eq!(
            x.adjoint(),
            Element::monomial(&a, &[2], &[1]).unwrap().scale(&gq(2, -1))
        );
        assert_eq!(
            Element::<GaussianRational>::unit(&a).adjoint(),
            Element::unit(&a)
        );
    }

    #[test]
    fn normalize_examples() {
        let f2 = ZeroOneMatrix::full(2);
        let sum = &(&s(&f2, 1) * &s(&f2, 1).adjoint()) + &(&s(&f2, 2) * &s(&f2, 2).adjoint());
        assert_eq!(sum, Element::unit(&f2));
        assert_eq!(sum.to_string(), "I");

        let g = golden();
        let lhs = &s(&g, 2).adjoint() * &s(&g, 2);
        let rhs = &s(&g, 1) * &s(&g, 1).adjoint();
        assert!((&lhs - &rhs).is_zero());

        let raw = vec![
            (Monomial::projection(vec![1].into()), gq(1, 0)),
            (Monomial::projection(vec![2].into()), gq(1, 0)),
            (Monomial::unit(), gq(-1, 0)),
        ];
        assert!(Element::normalize(&g, raw).unwrap().is_zero());
    }

    #[test]
    fn normalize_is_idempotent() {
        let g = golden();
        let x = &(&s(&g, 1) * &s(&g, 2).adjoint()) + &s(&g, 1).adjoint();
        let again = Element::normalize(&g, x.terms().map(|(m, c)| (m.clone(), c.clone()))).unwrap();
        assert_eq!(again, x);
    }

    #[test]
    fn one_by_one_context_is_scalar() {
        let one = ZeroOneMatrix::unit();
        let x = s(&one, 1);
        assert_eq!(x, Element::unit(&one));
        assert_eq!((&x * &x.adjoint()).scalar_part(), gq(1, 0));
    }

    #[test]
    fn gauge_components_split_by_degree() {
        let f3 = ZeroOneMatrix::full(3);
        let x = &s(&f3, 1) + &(&(&s(&f3, 1) * &s(&f3, 2).adjoint()) * &s(&f3, 3).adjoint());
        let comps = x.gauge_components();
        assert_eq!(comps.keys().copied().collect::<Vec<_>>(), vec![-1, 1]);
        assert_eq!(comps[&1], s(&f3, 1));
        assert_eq!(comps[&-1].to_string(), "s1 s2* s3*");
        let back = comps.values().fold(Element::zero(&f3), |acc, c| &acc + c);
        assert_eq!(back, x);
        let unit = Element::<GaussianRational>::unit(&f3);
        assert_eq!(
            unit.gauge_components().into_keys().collect::<Vec<_>>(),
            vec![0]
        );
    }

    #[test]
    fn generator_range() {
        assert!(Element::<GaussianRational>::generator(&ZeroOneMatrix::full(2), 3).is_err());
        assert!(Element::<GaussianRational>::generator(&ZeroOneMatrix::full(2), 0).is_err());
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let x = s(&ZeroOneMatrix::full(2), 1);
        let y = s(&golden(), 1);
        assert_eq!(x.checked_mul(&y), Err(Error::DifferentContexts));
    }

    #[test]
    fn display_with_coefficients() {
        let f2 = ZeroOneMatrix::full(2);
        let x = &(&s(&f2, 1) * &s(&f2, 2).adjoint()).scale(&gq(-2, 0))
            + &Element::scalar(
                &f2,
                GaussianRational::new(
                    BigRational::new(1.into(), 2.into()),
                    BigRational::from_integer(0.into()),
                ),
            );
        assert_eq!(x.to_string(), "1/2 s1 s1* - 2 s1 s2* + 1/2 s2 s2*");
        assert_eq!(Element::<GaussianRational>::zero(&f2).to_string(), "0");
    }
}
