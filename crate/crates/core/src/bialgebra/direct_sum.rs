use std::collections::BTreeMap;
use std::fmt;

use crate::matrix_monoid::ZeroOneMatrix;
use crate::scalar::Scalar;
use crate::star_algebra::Element;

/// A finitely supported element of `⊕_A O_A^(0)`.
#[derive(Clone, PartialEq)]
pub struct DirectSumElement<S> {
    components: BTreeMap<ZeroOneMatrix, Element<S>>,
}

impl<S: Scalar> Default for DirectSumElement<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> DirectSumElement<S> {
    pub fn zero() -> Self {
        DirectSumElement {
            components: BTreeMap::new(),
        }
    }

    pub fn from_components(parts: impl IntoIterator<Item = Element<S>>) -> Self {
        let mut out = Self::zero();
        for x in parts {
            out.insert_add(x);
        }
        out
    }

    fn insert_add(&mut self, x: Element<S>) {
        let key = x.context().clone();
        let sum = match self.components.remove(&key) {
            Some(y) => &y + &x,
            None => x,
        };
        if !sum.is_zero() {
            self.components.insert(key, sum);
        }
    }

    pub fn components(&self) -> impl Iterator<Item = (&ZeroOneMatrix, &Element<S>)> {
        self.components.iter()
    }

    pub fn component(&self, a: &ZeroOneMatrix) -> Element<S> {
        self.components
            .get(a)
            .cloned()
            .unwrap_or_else(|| Element::zero(a))
    }

    pub fn support(&self) -> impl Iterator<Item = &ZeroOneMatrix> {
        self.components.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for x in other.components.values() {
            out.insert_add(x.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    /// Componentwise product; components over different matrices annihilate.
    pub fn mul(&self, other: &Self) -> Self {
        let parts = self.components.iter().filter_map(|(a, x)| {
            let y = other.components.get(a)?;
            Some(x * y)
        });
        Self::from_components(parts)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_components(self.components.values().map(|x| x.scale(c)))
    }

    pub fn adjoint(&self) -> Self {
        Self::from_components(self.components.values().map(Element::adjoint))
    }

    /// Total number of stored monomials.
    pub fn len(&self) -> usize {
        self.components.values().map(Element::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }
}

impl<S: Scalar> From<Element<S>> for DirectSumElement<S> {
    fn from(x: Element<S>) -> Self {
        Self::from_components([x])
    }
}

/// One `[A] x` line per component.
impl<S: Scalar> fmt::Display for DirectSumElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (a, x)) in self.components.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{a}] {x}")?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for DirectSumElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "DirectSumElement({})",
            self.to_string().replace('\n', "; ")
        )
    }
}
