//! Cyclic permutative representations `P(J)` of `O_A` and their tensor
//! products along `φ_{A,B}`.
//!
//! `P(J)` for a cyclically admissible word `J = (j_1..j_p)` has a central
//! cycle `e_1..e_p` with `s_{j_t} e_{t+1} = e_t`; every other basis vector is
//! `s_W e_t` for a word `W` that does not end in `j_{t-1}`. The tensor product
//! of `P(J)` over `A` and `P(K)` over `B` splits into one cyclic component per
//! orbit of the diagonal shift on `Z_p × Z_q`.

mod branching;
mod path;

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

pub use branching::{
    disjoint_union, find_isomorphism, rep_from_cycle, tensor_rep, BranchingSystem,
};
pub use path::{PathAddress, PathRepresentation};

use crate::error::{Error, Result};
use crate::matrix_monoid::{kron_letter, kronecker, ZeroOneMatrix};

/// A nonempty, cyclically admissible word labelling `P(J)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleWord {
    context: ZeroOneMatrix,
    letters: Vec<u32>,
}

impl CycleWord {
    pub fn new(context: &ZeroOneMatrix, letters: &[u32]) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        if let Some(&l) = letters
            .iter()
            .find(|&&l| l == 0 || l as usize > context.n())
        {
            return Err(Error::IndexOutOfRange {
                index: l as usize,
                bound: context.n(),
            });
        }
        let p = letters.len();
        if !(0..p).all(|t| context.allows(letters[t], letters[(t + 1) % p])) {
            return Err(Error::InadmissibleCycle {
                word: letters.to_vec(),
            });
        }
        Ok(CycleWord {
            context: context.clone(),
            letters: letters.to_vec(),
        })
    }

    pub fn context(&self) -> &ZeroOneMatrix {
        &self.context
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn period(&self) -> usize {
        self.letters.len()
    }

    /// Not a power of a shorter word.
    pub fn is_primitive(&self) -> bool {
        let p = self.period();
        (1..p)
            .filter(|r| p % r == 0)
            .all(|r| (0..p).any(|t| self.letters[t] != self.letters[(t + r) % p]))
    }

    /// The shortest word whose power is this one.
    pub fn root(&self) -> CycleWord {
        let p = self.period();
        let r = (1..=p)
            .find(|r| p % r == 0 && (0..p).all(|t| self.letters[t] == self.letters[(t + r) % p]))
            .unwrap_or(p);
        CycleWord {
            context: self.context.clone(),
            letters: self.letters[..r].to_vec(),
        }
    }

    pub fn rotated(&self, by: usize) -> CycleWord {
        let p = self.period();
        let letters = (0..p).map(|t| self.letters[(t + by) % p]).collect();
        CycleWord {
            context: self.context.clone(),
            letters,
        }
    }

    /// The lexicographically least rotation.
    pub fn least_rotation(&self) -> CycleWord {
        (0..self.period())
            .map(|r| self.rotated(r))
            .min_by(|a, b| a.letters.cmp(&b.letters))
            .expect("nonempty word")
    }

    pub fn is_rotation_of(&self, other: &CycleWord) -> bool {
        self.context == other.context
            && self.period() == other.period()
            && (0..self.period()).any(|r| self.rotated(r).letters == other.letters)
    }

    /// All least-rotation cycle words over `ctx` with period in `1..=max_period`.
    pub fn all_up_to_rotation(ctx: &ZeroOneMatrix, max_period: usize) -> Vec<CycleWord> {
        let n = ctx.n() as u32;
        let mut out = Vec::new();
        for p in 1..=max_period {
            let mut word = vec![1u32; p];
            loop {
                if let Ok(c) = CycleWord::new(ctx, &word) {
                    if c.least_rotation().letters == word {
                        out.push(c);
                    }
                }
                // odometer increment
                let mut k = p;
                loop {
                    if k == 0 {
                        break;
                    }
                    k -= 1;
                    if word[k] < n {
                        word[k] += 1;
                        break;
                    }
                    word[k] = 1;
                }
                if word.iter().all(|&l| l == 1) {
                    break;
                }
            }
        }
        out
    }
}

impl fmt::Display for CycleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "P({})", parts.join(","))
    }
}

impl fmt::Debug for CycleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.context)
    }
}

/// Cyclic components of a tensor product, with multiplicities, ordered by
/// `(period, word)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    context: ZeroOneMatrix,
    components: BTreeMap<(usize, Vec<u32>), (CycleWord, usize)>,
}

impl Decomposition {
    pub fn empty(context: &ZeroOneMatrix) -> Self {
        Decomposition {
            context: context.clone(),
            components: BTreeMap::new(),
        }
    }

    /// Adds `w` (rotated to its least rotation) once.
    pub fn insert(&mut self, w: CycleWord) -> Result<()> {
        if w.context != self.context {
            return Err(Error::DifferentContexts);
        }
        let w = w.least_rotation();
        let key = (w.period(), w.letters.clone());
        self.components.entry(key).or_insert((w, 0)).1 += 1;
        Ok(())
    }

    pub fn union(&self, other: &Decomposition) -> Result<Decomposition> {
        let mut out = self.clone();
        for (w, k) in other.components() {
            for _ in 0..k {
                out.insert(w.clone())?;
            }
        }
        Ok(out)
    }

    pub fn context(&self) -> &ZeroOneMatrix {
        &self.context
    }

    /// `(word, multiplicity)` in order.
    pub fn components(&self) -> impl Iterator<Item = (&CycleWord, usize)> {
        self.components.values().map(|(w, k)| (w, *k))
    }

    /// Every component repeated by multiplicity.
    pub fn flattened(&self) -> Vec<CycleWord> {
        self.components()
            .flat_map(|(w, k)| std::iter::repeat_n(w.clone(), k))
            .collect()
    }

    /// Number of components counted with multiplicity.
    pub fn count(&self) -> usize {
        self.components().map(|(_, k)| k).sum()
    }

    /// Sum of periods counted with multiplicity.
    pub fn total_length(&self) -> usize {
        self.components().map(|(w, k)| w.period() * k).sum()
    }
}

/// One line per component, e.g. `P(1,3) over F2(x)F2 [primitive]`, repeated
/// by multiplicity. `label` names the product context.
pub fn describe_decomposition(d: &Decomposition, label: &str) -> Vec<String> {
    d.flattened()
        .iter()
        .map(|w| {
            let flag = if w.is_primitive() {
                "primitive"
            } else {
                "non-primitive"
            };
            format!("{w} over {label} [{flag}]")
        })
        .collect()
}

/// Decomposes `P(J) ⊗ P(K)` over `A ⊠ B`: the orbit of `(0, u)`, `u < gcd(p, q)`,
/// under `(a, b) ↦ (a+1, b+1)` gives the word `kron(j_{s}, k_{u+s})`,
/// `s < lcm(p, q)`.
pub fn decompose(j: &CycleWord, k: &CycleWord) -> Decomposition {
    let (p, q) = (j.period(), k.period());
    let (g, l) = (p.gcd(&q), p.lcm(&q));
    let ctx = kronecker(&j.context, &k.context);
    let m = k.context.n();
    let mut out = Decomposition::empty(&ctx);
    for u in 0..g {
        let letters: Vec<u32> = (0..l)
            .map(|s| kron_letter(j.letters[s % p], k.letters[(u + s) % q], m))
            .collect();
        let w = CycleWord::new(&ctx, &letters)
            .expect("products of cyclically admissible words are cyclically admissible");
        out.insert(w).expect("same context");
    }
    out
}

/// Decomposes `(⊕ P(J_i)) ⊗ (⊕ P(K_j))` as the union over all pairs.
pub fn decompose_sums(js: &[CycleWord], ks: &[CycleWord]) -> Result<Decomposition> {
    let (a, b) = match (js.first(), ks.first()) {
        (Some(a), Some(b)) => (a.context.clone(), b.context.clone()),
        _ => return Err(Error::EmptyWord),
    };
    if js.iter().any(|w| w.context != a) || ks.iter().any(|w| w.context != b) {
        return Err(Error::DifferentContexts);
    }
    let mut out = Decomposition::empty(&kronecker(&a, &b));
    for x in js {
        for y in ks {
            out = out.union(&decompose(x, y))?;
        }
    }
    Ok(out)
}

/// Checks `dec` against the depth-`d` truncations: the tensor product of the
/// truncated `P(J)` and `P(K)` must be isomorphic, letter by letter, to the
/// disjoint union of the truncated components.
pub fn verify_decomposition(
    j: &CycleWord,
    k: &CycleWord,
    dec: &Decomposition,
    depth: usize,
) -> bool {
    verify_sum_decomposition(std::slice::from_ref(j), std::slice::from_ref(k), dec, depth)
}

/// [`verify_decomposition`] for direct sums on either side.
pub fn verify_sum_decomposition(
    js: &[CycleWord],
    ks: &[CycleWord],
    dec: &Decomposition,
    depth: usize,
) -> bool {
    let side = |ws: &[CycleWord]| -> Option<BranchingSystem> {
        let reps: Vec<BranchingSystem> = ws.iter().map(|w| rep_from_cycle(w, depth)).collect();
        disjoint_union(&reps).ok()
    };
    let (Some(left), Some(right)) = (side(js), side(ks)) else {
        return false;
    };
    let Ok(product) = tensor_rep(&left, &right) else {
        return false;
    };
    let parts: Vec<BranchingSystem> = dec
        .flattened()
        .iter()
        .map(|w| rep_from_cycle(w, depth))
        .collect();
    let Ok(sum) = disjoint_union(&parts) else {
        return false;
    };
    find_isomorphism(&product, &sum).is_some()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equivalence {
    Equivalent,
    Inequivalent,
    /// A proper power is involved and the roots agree, so the answer depends
    /// on finer invariants that are not computed.
    NonPrimitive,
}

/// Unitary equivalence of `P(J)` and `P(J')`. For primitive words this holds
/// iff `J'` is a rotation of `J`. Every summand of `P(L^k)` has root `L`, so
/// words whose roots are not rotations of each other are inequivalent; the
/// remaining cases with a proper power are flagged.
pub fn equivalent(j: &CycleWord, j2: &CycleWord) -> Result<Equivalence> {
    if j.context != j2.context {
        return Err(Error::DifferentContexts);
    }
    if !j.root().is_rotation_of(&j2.root()) {
        return Ok(Equivalence::Inequivalent);
    }
    if !j.is_primitive() || !j2.is_primitive() {
        return Ok(Equivalence::NonPrimitive);
    }
    Ok(Equivalence::Equivalent)
}
