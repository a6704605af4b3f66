//! Exact evaluation of `O_A^(0)` on a direct sum of cyclic permutative
//! representations, computed lazily on addresses `(cycle, W, t)` standing for
//! `s_W e_t` in the given cycle. Nothing is truncated: the depth only limits
//! which basis vectors are enumerated as inputs.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix_monoid::ZeroOneMatrix;
use crate::scalar::Scalar;
use crate::star_algebra::{Element, Monomial};

use super::CycleWord;

/// `s_W e_t` in cycle number `cycle`; `W` never ends in the letter that
/// would move `e_t` along its cycle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathAddress {
    pub cycle: usize,
    pub word: Vec<u32>,
    pub position: usize,
}

#[derive(Debug, Clone)]
pub struct PathRepresentation {
    context: ZeroOneMatrix,
    cycles: Vec<CycleWord>,
}

impl PathRepresentation {
    pub fn new(context: &ZeroOneMatrix, cycles: Vec<CycleWord>) -> Result<Self> {
        if cycles.is_empty() {
            return Err(Error::EmptyWord);
        }
        if cycles.iter().any(|c| c.context() != context) {
            return Err(Error::DifferentContexts);
        }
        Ok(PathRepresentation {
            context: context.clone(),
            cycles,
        })
    }

    /// The sum of `P(J)` over least-rotation primitive words `J` with period
    /// up to `max(2, shortest cycle)`.
    pub fn standard(context: &ZeroOneMatrix) -> Self {
        let mut bound = 2;
        let cycles = loop {
            let found: Vec<CycleWord> = CycleWord::all_up_to_rotation(context, bound)
                .into_iter()
                .filter(CycleWord::is_primitive)
                .collect();
            if !found.is_empty() {
                break found;
            }
            bound += 1;
        };
        PathRepresentation {
            context: context.clone(),
            cycles,
        }
    }

    pub fn context(&self) -> &ZeroOneMatrix {
        &self.context
    }

    pub fn cycles(&self) -> &[CycleWord] {
        &self.cycles
    }

    fn cycle_letter(&self, cycle: usize, t: usize) -> u32 {
        self.cycles[cycle].letters()[t]
    }

    fn previous(&self, cycle: usize, t: usize) -> (usize, u32) {
        let p = self.cycles[cycle].period();
        let prev = (t + p - 1) % p;
        (prev, self.cycle_letter(cycle, prev))
    }

    fn first_letter(&self, x: &PathAddress) -> u32 {
        x.word
            .first()
            .copied()
            .unwrap_or_else(|| self.cycle_letter(x.cycle, x.position))
    }

    /// `s_i x`.
    pub fn apply_letter(&self, i: u32, x: &PathAddress) -> Option<PathAddress> {
        if !self.context.allows(i, self.first_letter(x)) {
            return None;
        }
        if x.word.is_empty() {
            let (prev, letter) = self.previous(x.cycle, x.position);
            if letter == i {
                return Some(PathAddress {
                    cycle: x.cycle,
                    word: Vec::new(),
                    position: prev,
                });
            }
        }
        let mut word = Vec::with_capacity(x.word.len() + 1);
        word.push(i);
        word.extend_from_slice(&x.word);
        Some(PathAddress {
            cycle: x.cycle,
            word,
            position: x.position,
        })
    }

    /// `s_i^* x`.
    pub fn apply_adjoint_letter(&self, i: u32, x: &PathAddress) -> Option<PathAddress> {
        match x.word.split_first() {
            Some((&f, rest)) if f == i => Some(PathAddress {
                cycle: x.cycle,
                word: rest.to_vec(),
                position: x.position,
            }),
            Some(_) => None,
            None => {
                let p = self.cycles[x.cycle].period();
                (self.cycle_letter(x.cycle, x.position) == i).then(|| PathAddress {
                    cycle: x.cycle,
                    word: Vec::new(),
                    position: (x.position + 1) % p,
                })
            }
        }
    }

    /// `s_J s_K^* x`, a basis vector or zero.
    pub fn apply_monomial(&self, m: &Monomial, x: &PathAddress) -> Option<PathAddress> {
        let mut y = x.clone();
        for &k in m.source.letters() {
            y = self.apply_adjoint_letter(k, &y)?;
        }
        for &j in m.target.letters().iter().rev() {
            y = self.apply_letter(j, &y)?;
        }
        Some(y)
    }

    pub fn apply<S: Scalar>(&self, x: &Element<S>, v: &PathAddress) -> BTreeMap<PathAddress, S> {
        let mut out: BTreeMap<PathAddress, S> = BTreeMap::new();
        for (m, c) in x.terms() {
            if let Some(y) = self.apply_monomial(m, v) {
                let e = out.entry(y).or_insert_with(S::zero);
                *e = e.clone() + c.clone();
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// All basis vectors `s_W e_t` with `|W| ≤ depth`.
    pub fn basis(&self, depth: usize) -> Vec<PathAddress> {
        let mut out = Vec::new();
        for (c, cyc) in self.cycles.iter().enumerate() {
            let mut frontier: Vec<PathAddress> = (0..cyc.period())
                .map(|t| PathAddress {
                    cycle: c,
                    word: Vec::new(),
                    position: t,
                })
                .collect();
            for k in 0..=depth {
                out.extend(frontier.iter().cloned());
                if k == depth {
                    break;
                }
                let mut next = Vec::new();
                for x in &frontier {
                    for i in 1..=self.context.n() as u32 {
                        if let Some(y) = self.apply_letter(i, x) {
                            if y.word.len() == k + 1 {
                                next.push(y);
                            }
                        }
                    }
                }
                frontier = next;
            }
        }
        out
    }

    /// `x v = y v` for every basis vector of depth at most `depth`.
    pub fn agree<S: Scalar>(&self, x: &Element<S>, y: &Element<S>, depth: usize) -> bool {
        x.context() == &self.context
            && y.context() == &self.context
            && self
                .basis(depth)
                .iter()
                .all(|v| self.apply(x, v) == self.apply(y, v))
    }

    /// Rank over `Q` of the operators of `monomials`, restricted to basis
    /// vectors of depth at most `depth`.
    pub fn operator_rank(&self, monomials: &[Monomial], depth: usize) -> usize {
        let basis = self.basis(depth);
        let mut index: BTreeMap<(usize, PathAddress), usize> = BTreeMap::new();
        let mut rows: Vec<BTreeMap<usize, BigRational>> = Vec::new();
        for m in monomials {
            let mut row = BTreeMap::new();
            for (col, v) in basis.iter().enumerate() {
                if let Some(y) = self.apply_monomial(m, v) {
                    let len = index.len();
                    let k = *index.entry((col, y)).or_insert(len);
                    row.insert(k, BigRational::one());
                }
            }
            rows.push(row);
        }
        sparse_rank(rows)
    }
}

fn sparse_rank(mut rows: Vec<BTreeMap<usize, BigRational>>) -> usize {
    let mut rank = 0;
    let mut pivots: Vec<(usize, BTreeMap<usize, BigRational>)> = Vec::new();
    for row in rows.iter_mut() {
        for (col, p) in &pivots {
            if let Some(c) = row.get(col).cloned() {
                for (k, v) in p {
                    let e = row
                        .entry(*k)
                        .or_insert_with(|| BigRational::from_integer(BigInt::zero()));
                    *e -= &c * v;
                }
                row.retain(|_, v| !v.is_zero());
            }
        }
        if let Some((&col, lead)) = row.iter().next() {
            let lead = lead.clone();
            let normalized = row.iter().map(|(k, v)| (*k, v / &lead)).collect();
            pivots.push((col, normalized));
            rank += 1;
        }
    }
    rank
}
