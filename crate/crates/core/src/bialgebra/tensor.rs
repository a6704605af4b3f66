use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix_monoid::ZeroOneMatrix;
use crate::scalar::Scalar;
use crate::star_algebra::normal::{self, Terms};
use crate::star_algebra::{format_sum, multiply_monomials, Element, Monomial};

use super::DirectSumElement;

/// One raw summand: per-leg contexts, per-leg monomials, coefficient.
pub type RawTerm<S> = (Vec<ZeroOneMatrix>, Vec<Monomial>, S);

/// A finite sum of `k`-fold tensors `m_1 ⊗ ... ⊗ m_k`, each leg a monomial
/// of `O_{B_t}^(0)`. Summands over different context tuples are independent.
/// The context tuples are ordered lexicographically with the matrix order,
/// which is the divisor order for two legs.
#[derive(Clone, PartialEq)]
pub struct TensorElement<S> {
    arity: usize,
    blocks: BTreeMap<Vec<ZeroOneMatrix>, Terms<S>>,
}

impl<S: Scalar> TensorElement<S> {
    pub fn zero(arity: usize) -> Self {
        TensorElement {
            arity,
            blocks: BTreeMap::new(),
        }
    }

    /// Canonical form of a list of raw summands. Every summand must have
    /// `arity` legs with letters in range.
    pub fn from_raw(arity: usize, raw: impl IntoIterator<Item = RawTerm<S>>) -> Result<Self> {
        let mut grouped: BTreeMap<Vec<ZeroOneMatrix>, Vec<(Vec<Monomial>, S)>> = BTreeMap::new();
        for (ctxs, legs, c) in raw {
            if ctxs.len() != arity || legs.len() != arity {
                return Err(Error::Dimension(format!(
                    "tensor of arity {arity} given a summand with {} contexts and {} legs",
                    ctxs.len(),
                    legs.len()
                )));
            }
            for (m, ctx) in legs.iter().zip(&ctxs) {
                m.check_range(ctx)?;
            }
            grouped.entry(ctxs).or_default().push((legs, c));
        }
        let mut blocks = BTreeMap::new();
        for (ctxs, terms) in grouped {
            let canon = normal::canonicalize(&ctxs, terms);
            if !canon.is_empty() {
                blocks.insert(ctxs, canon);
            }
        }
        Ok(TensorElement { arity, blocks })
    }

    fn from_checked(arity: usize, raw: impl IntoIterator<Item = RawTerm<S>>) -> Self {
        Self::from_raw(arity, raw).expect("summands built from valid tensors")
    }

    /// `a_1 ⊗ ... ⊗ a_k` for elements of single algebras.
    pub fn product_of(legs: &[Element<S>]) -> Self {
        let mut raw: Vec<RawTerm<S>> = vec![(Vec::new(), Vec::new(), S::one())];
        for x in legs {
            let mut next = Vec::new();
            for (ctxs, ms, c) in &raw {
                for (m, v) in x.terms() {
                    let mut ctxs = ctxs.clone();
                    ctxs.push(x.context().clone());
                    let mut ms = ms.clone();
                    ms.push(m.clone());
                    next.push((ctxs, ms, c.clone() * v.clone()));
                }
            }
            raw = next;
        }
        Self::from_checked(legs.len(), raw)
    }

    /// The one-leg tensor with the same components as `x`.
    pub fn from_direct_sum(x: &DirectSumElement<S>) -> Self {
        let raw = x.components().flat_map(|(a, e)| {
            e.terms()
                .map(move |(m, c)| (vec![a.clone()], vec![m.clone()], c.clone()))
        });
        Self::from_checked(1, raw)
    }

    /// Inverse of [`from_direct_sum`](Self::from_direct_sum) on one-leg tensors.
    pub fn to_direct_sum(&self) -> Result<DirectSumElement<S>> {
        if self.arity != 1 {
            return Err(Error::Dimension(format!(
                "expected a one-leg tensor, got arity {}",
                self.arity
            )));
        }
        let parts = self.blocks.iter().map(|(ctxs, terms)| {
            Element::from_checked_terms(
                &ctxs[0],
                terms.iter().map(|(k, c)| (k[0].clone(), c.clone())),
            )
        });
        Ok(DirectSumElement::from_components(parts))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Number of stored summands.
    pub fn len(&self) -> usize {
        self.blocks.values().map(BTreeMap::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Context tuples carrying at least one summand, in order.
    pub fn context_tuples(&self) -> impl Iterator<Item = &[ZeroOneMatrix]> {
        self.blocks.keys().map(Vec::as_slice)
    }

    /// Summands in print order.
    pub fn terms(&self) -> impl Iterator<Item = (&[ZeroOneMatrix], &[Monomial], &S)> {
        self.blocks.iter().flat_map(|(ctxs, t)| {
            t.iter()
                .map(move |(ms, c)| (ctxs.as_slice(), ms.as_slice(), c))
        })
    }

    fn raw(&self) -> impl Iterator<Item = RawTerm<S>> + '_ {
        self.terms()
            .map(|(a, m, c)| (a.to_vec(), m.to_vec(), c.clone()))
    }

    fn same_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::Dimension(format!(
                "tensor arities {} and {} differ",
                self.arity, other.arity
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_arity(other)?;
        Ok(Self::from_checked(
            self.arity,
            self.raw().chain(other.raw()),
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scale(&-S::one()))
    }

    /// Leg-wise product. Summands over different context tuples annihilate.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_arity(other)?;
        let mut raw = Vec::new();
        for (ctxs, left) in &self.blocks {
            let Some(right) = other.blocks.get(ctxs) else {
                continue;
            };
            for (x, a) in left {
                for (y, b) in right {
                    let c = a.clone() * b.clone();
                    let mut partial: Vec<Vec<Monomial>> = vec![Vec::new()];
                    for ((mx, my), ctx) in x.iter().zip(y).zip(ctxs) {
                        let leg = multiply_monomials(ctx, mx, my);
                        partial = partial
                            .iter()
                            .flat_map(|p| {
                                leg.iter().map(move |m| {
                                    let mut q = p.clone();
                                    q.push(m.clone());
                                    q
                                })
                            })
                            .collect();
                        if partial.is_empty() {
                            break;
                        }
                    }
                    raw.extend(partial.into_iter().map(|ms| (ctxs.clone(), ms, c.clone())));
                }
            }
        }
        Ok(Self::from_checked(self.arity, raw))
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_checked(
            self.arity,
            self.raw().map(|(a, m, v)| (a, m, v * c.clone())),
        )
    }

    /// Leg-wise adjoint with conjugated coefficients.
    pub fn adjoint(&self) -> Self {
        Self::from_checked(
            self.arity,
            self.raw()
                .map(|(a, m, v)| (a, m.iter().map(Monomial::adjoint).collect(), v.conj())),
        )
    }

    /// Reorders the legs: leg `t` of the result is leg `perm[t]` of `self`.
    pub fn permute_legs(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.arity];
        if perm.len() != self.arity
            || perm
                .iter()
                .any(|&p| p >= self.arity || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::Dimension(format!(
                "{perm:?} is not a permutation of {} legs",
                self.arity
            )));
        }
        let raw = self.raw().map(|(a, m, v)| {
            (
                perm.iter().map(|&p| a[p].clone()).collect(),
                perm.iter().map(|&p| m[p].clone()).collect(),
                v,
            )
        });
        Ok(Self::from_checked(self.arity, raw))
    }

    /// The tensor flip on two-leg tensors.
    pub fn flip(&self) -> Result<Self> {
        if self.arity != 2 {
            return Err(Error::Dimension(format!(
                "flip needs two legs, got {}",
                self.arity
            )));
        }
        self.permute_legs(&[1, 0])
    }

    /// Replaces leg `t` of every summand by the legs of `f(context, monomial)`,
    /// which must all have the same arity `width`.
    pub fn expand_leg<F>(&self, t: usize, width: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(&ZeroOneMatrix, &Monomial) -> Result<Vec<RawTerm<S>>>,
    {
        if t >= self.arity {
            return Err(Error::IndexOutOfRange {
                index: t,
                bound: self.arity,
            });
        }
        let mut raw = Vec::new();
        for (ctxs, ms, c) in self.terms() {
            for (sub_ctx, sub_m, v) in f(&ctxs[t], &ms[t])? {
                let mut a = ctxs[..t].to_vec();
                a.extend(sub_ctx);
                a.extend_from_slice(&ctxs[t + 1..]);
                let mut m = ms[..t].to_vec();
                m.extend(sub_m);
                m.extend_from_slice(&ms[t + 1..]);
                raw.push((a, m, c.clone() * v));
            }
        }
        Self::from_raw(self.arity - 1 + width, raw)
    }
}

/// One summand per line: `[B (x) C] coeff * m1 (x) m2`.
impl<S: Scalar> fmt::Display for TensorElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (ctxs, ms, c)) in self.terms().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let tags: Vec<String> = ctxs.iter().map(|a| a.to_string()).collect();
            let legs: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
            write!(
                f,
                "[{}] {} * {}",
                tags.join(" (x) "),
                coefficient_text(c),
                legs.join(" (x) ")
            )?;
        }
        Ok(())
    }
}

/// A coefficient on its own, e.g. `1`, `-1/2`, `(2 + i)`.
pub fn coefficient_text<S: Scalar>(c: &S) -> String {
    let s = format_sum([(c, "#".to_string())]);
    match s.strip_suffix('#') {
        Some(prefix) => {
            let t = prefix.trim_end();
            match t {
                "" => "1".into(),
                "-" => "-1".into(),
                _ => t.into(),
            }
        }
        None => s,
    }
}

impl<S: Scalar> fmt::Debug for TensorElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement({})", self.to_string().replace('\n', "; "))
    }
}
