//! Canonical forms for sums of (tensor products of) monomials.
//!
//! Inside one gauge degree `d`, the nonvanishing monomials `s_J s_K^*` with
//! `|K| = L` are linearly independent, and `Σ_i s_i s_i^* = I` embeds the
//! span at source length `L` into the span at `L + 1` (see
//! [`Monomial::children`]). An element therefore has a unique expansion at
//! the smallest `L` where it is representable. We reach it by expanding every
//! term to the largest source length present, then collapsing complete
//! families of children back into their parent for as long as that succeeds.
//!
//! The same procedure runs leg by leg on tensor products: representability
//! at a given length in one leg does not depend on the lengths used in the
//! others, so the per-leg minima are reached in any order.
//!
//! Legs over the 1x1 matrix are scalar (`O_1 = C`, `s_1 = I`), so every
//! monomial there is replaced by the unit.

use std::collections::BTreeMap;

use crate::matrix_monoid::ZeroOneMatrix;
use crate::scalar::Scalar;

use super::word::Monomial;

pub(crate) type Terms<S> = BTreeMap<Vec<Monomial>, S>;

pub(crate) fn accumulate<S: Scalar>(map: &mut Terms<S>, key: Vec<Monomial>, c: S) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(v) => {
            let sum = v.clone() + c;
            if sum.is_zero() {
                map.remove(&key);
            } else {
                *v = sum;
            }
        }
        None => {
            map.insert(key, c);
        }
    }
}

/// Canonical form of `Σ c · (m_1 ⊗ ... ⊗ m_k)` where leg `t` lives over
/// `contexts[t]`. Letters are assumed to be in range.
pub(crate) fn canonicalize<S, I>(contexts: &[ZeroOneMatrix], terms: I) -> Terms<S>
where
    S: Scalar,
    I: IntoIterator<Item = (Vec<Monomial>, S)>,
{
    let mut groups: BTreeMap<Vec<i64>, Terms<S>> = BTreeMap::new();
    'terms: for (mut legs, c) in terms {
        debug_assert_eq!(legs.len(), contexts.len());
        for (leg, ctx) in legs.iter_mut().zip(contexts) {
            if ctx.is_unit() {
                *leg = Monomial::unit();
            } else if !leg.is_nonvanishing(ctx) {
                continue 'terms;
            }
        }
        let degrees = legs.iter().map(Monomial::degree).collect();
        accumulate(groups.entry(degrees).or_default(), legs, c);
    }

    let mut out = Terms::new();
    for (_, mut group) in groups {
        for (t, ctx) in contexts.iter().enumerate() {
            if ctx.is_unit() || group.is_empty() {
                continue;
            }
            let top = group.keys().map(|k| k[t].source.len()).max().unwrap_or(0);
            group = level_leg(group, t, top, ctx);
        }
        loop {
            let mut changed = false;
            for (t, ctx) in contexts.iter().enumerate() {
                if ctx.is_unit() {
                    continue;
                }
                while let Some(collapsed) = collapse_leg(&group, t, ctx) {
                    group = collapsed;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        out.extend(group);
    }
    out
}

/// Expands leg `t` of every term to source length `len`.
fn level_leg<S: Scalar>(group: Terms<S>, t: usize, len: usize, ctx: &ZeroOneMatrix) -> Terms<S> {
    let mut out = Terms::new();
    for (key, c) in group {
        let mut frontier = vec![key[t].clone()];
        while frontier.first().is_some_and(|m| m.source.len() < len) {
            frontier = frontier.iter().flat_map(|m| m.children(ctx)).collect();
        }
        for m in frontier {
            let mut k = key.clone();
            k[t] = m;
            accumulate(&mut out, k, c.clone());
        }
    }
    out
}

/// Replaces every family `{c · child : child ∈ children(p)}` in leg `t` by
/// `c · p`, provided the whole group decomposes that way.
fn collapse_leg<S: Scalar>(group: &Terms<S>, t: usize, ctx: &ZeroOneMatrix) -> Option<Terms<S>> {
    if group.is_empty() {
        return None;
    }
    let mut families: BTreeMap<Vec<Monomial>, Vec<(&Monomial, &S)>> = BTreeMap::new();
    for (key, c) in group {
        let parent = key[t].parent()?;
        let mut pk = key.clone();
        pk[t] = parent;
        families.entry(pk).or_default().push((&key[t], c));
    }
    let mut out = Terms::new();
    for (pk, members) in families {
        let children = pk[t].children(ctx);
        if children.len() != members.len() {
            return None;
        }
        let c = members[0].1;
        let complete = children
            .iter()
            .all(|ch| members.iter().any(|(m, v)| *m == ch && *v == c));
        if !complete {
            return None;
        }
        out.insert(pk, c.clone());
    }
    Some(out)
}
