use crate::error::{Error, Result};
use crate::matrix_monoid::{kron_letter, kronecker, ZeroOneMatrix};

use super::CycleWord;

const NONE: u32 = u32::MAX;

/// A finite partial-injection system: for each letter `i` a partial map
/// `x ↦ s_i x` on addresses `0..len`. Addresses carry a depth; depth 0 is the
/// central part. Maps leading past the truncation depth are undefined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchingSystem {
    context: ZeroOneMatrix,
    depth: usize,
    levels: Vec<u32>,
    forward: Vec<Vec<u32>>,
}

impl BranchingSystem {
    pub fn context(&self) -> &ZeroOneMatrix {
        &self.context
    }

    pub fn truncation(&self) -> usize {
        self.depth
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn level(&self, x: usize) -> usize {
        self.levels[x] as usize
    }

    /// `s_i x` for a 1-based letter, if defined.
    pub fn apply(&self, letter: u32, x: usize) -> Option<usize> {
        let y = self.forward[letter as usize - 1][x];
        (y != NONE).then_some(y as usize)
    }

    fn inverse(&self) -> Vec<Vec<u32>> {
        self.forward
            .iter()
            .map(|f| {
                let mut inv = vec![NONE; self.len()];
                for (x, &y) in f.iter().enumerate() {
                    if y != NONE {
                        inv[y as usize] = x as u32;
                    }
                }
                inv
            })
            .collect()
    }

    /// Checks the branching-system shape: each map is injective, ranges of
    /// distinct letters are disjoint, and every address below the truncation
    /// depth lies in exactly one range and has exactly the successors
    /// `{i : a[i, first]}` where `first` labels that range.
    pub fn validate(&self) -> Result<()> {
        let n = self.context.n();
        let mut first = vec![NONE; self.len()];
        for (i, f) in self.forward.iter().enumerate() {
            for &y in f.iter().filter(|&&y| y != NONE) {
                if first[y as usize] != NONE {
                    return Err(Error::Dimension(format!("address {y} is hit twice")));
                }
                first[y as usize] = i as u32 + 1;
            }
        }
        for x in 0..self.len() {
            if self.level(x) >= self.depth {
                continue;
            }
            let f = first[x];
            if f == NONE {
                return Err(Error::Dimension(format!("address {x} lies in no range")));
            }
            for i in 1..=n as u32 {
                if self.apply(i, x).is_some() != self.context.allows(i, f) {
                    return Err(Error::Dimension(format!(
                        "letter {i} has the wrong domain at address {x}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The standard model of `P(J)` truncated at `depth`. Addresses are created
/// in breadth-first order, letters ascending.
pub fn rep_from_cycle(j: &CycleWord, depth: usize) -> BranchingSystem {
    let ctx = j.context().clone();
    let n = ctx.n();
    let letters = j.letters();
    let p = letters.len();
    let mut levels = vec![0u32; p];
    // first letter of every address
    let mut firsts: Vec<u32> = letters.to_vec();
    let mut forward = vec![vec![NONE; p]; n];
    for t in 0..p {
        forward[letters[t] as usize - 1][(t + 1) % p] = t as u32;
    }
    let mut frontier: Vec<usize> = (0..p).collect();
    for k in 1..=depth {
        let mut next = Vec::new();
        for &x in &frontier {
            for i in 1..=n as u32 {
                if !ctx.allows(i, firsts[x]) || forward[i as usize - 1][x] != NONE {
                    continue;
                }
                let y = levels.len();
                levels.push(k as u32);
                firsts.push(i);
                for f in forward.iter_mut() {
                    f.push(NONE);
                }
                forward[i as usize - 1][x] = y as u32;
                next.push(y);
            }
        }
        frontier = next;
    }
    BranchingSystem {
        context: ctx,
        depth,
        levels,
        forward,
    }
}

/// `(π_1 ⊗ π_2) ∘ φ_{A,B}`: addresses are pairs, letter `kron(i, j)` acts by
/// `(s_i, s_j)`, depth of a pair is the larger depth.
pub fn tensor_rep(r1: &BranchingSystem, r2: &BranchingSystem) -> Result<BranchingSystem> {
    if r1.depth != r2.depth {
        return Err(Error::Dimension(format!(
            "truncation depths {} and {} differ",
            r1.depth, r2.depth
        )));
    }
    let ctx = kronecker(&r1.context, &r2.context);
    let (n1, m) = (r1.len(), r2.len());
    let total = n1 * m;
    let levels: Vec<u32> = (0..total)
        .map(|xy| r1.levels[xy / m].max(r2.levels[xy % m]))
        .collect();
    let mut forward = vec![vec![NONE; total]; ctx.n()];
    for (i, f1) in r1.forward.iter().enumerate() {
        for (j, f2) in r2.forward.iter().enumerate() {
            let l = kron_letter(i as u32 + 1, j as u32 + 1, r2.context.n()) as usize - 1;
            let out = &mut forward[l];
            for (x, &y1) in f1.iter().enumerate() {
                if y1 == NONE {
                    continue;
                }
                for (y, &y2) in f2.iter().enumerate() {
                    if y2 != NONE {
                        out[x * m + y] = y1 * m as u32 + y2;
                    }
                }
            }
        }
    }
    Ok(BranchingSystem {
        context: ctx,
        depth: r1.depth,
        levels,
        forward,
    })
}

/// Direct sum of systems over one context with equal truncation depth.
pub fn disjoint_union(parts: &[BranchingSystem]) -> Result<BranchingSystem> {
    let Some(head) = parts.first() else {
        return Err(Error::Dimension("empty direct sum".into()));
    };
    let mut levels = Vec::new();
    let mut forward = vec![Vec::new(); head.context.n()];
    for part in parts {
        if part.context != head.context {
            return Err(Error::DifferentContexts);
        }
        if part.depth != head.depth {
            return Err(Error::Dimension("truncation depths differ".into()));
        }
        let offset = levels.len() as u32;
        levels.extend_from_slice(&part.levels);
        for (f, g) in forward.iter_mut().zip(&part.forward) {
            f.extend(g.iter().map(|&y| if y == NONE { NONE } else { y + offset }));
        }
    }
    Ok(BranchingSystem {
        context: head.context.clone(),
        depth: head.depth,
        levels,
        forward,
    })
}

/// A bijection `h` with `h(s_i x) = s_i h(x)` for every letter, defined-ness
/// included, if one exists. Every connected piece of a branching system
/// contains a depth-0 address, so the search seeds depth-0 addresses of `a`
/// against unused depth-0 addresses of `b` and propagates along all maps and
/// their inverses.
pub fn find_isomorphism(a: &BranchingSystem, b: &BranchingSystem) -> Option<Vec<usize>> {
    if a.context != b.context || a.len() != b.len() {
        return None;
    }
    let (ia, ib) = (a.inverse(), b.inverse());
    let mut map = vec![NONE; a.len()];
    let mut used = vec![false; b.len()];
    let centre_b: Vec<usize> = (0..b.len()).filter(|&y| b.levels[y] == 0).collect();
    for x in (0..a.len()).filter(|&x| a.levels[x] == 0) {
        if map[x] != NONE {
            continue;
        }
        let mut matched = false;
        for &y in &centre_b {
            if used[y] {
                continue;
            }
            let mut trail = Vec::new();
            if propagate(a, b, &ia, &ib, x, y, &mut map, &mut used, &mut trail) {
                matched = true;
                break;
            }
            for (u, v) in trail {
                map[u] = NONE;
                used[v] = false;
            }
        }
        if !matched {
            return None;
        }
    }
    if map.contains(&NONE) {
        return None;
    }
    Some(map.into_iter().map(|y| y as usize).collect())
}

#[allow(clippy::too_many_arguments)]
fn propagate(
    a: &BranchingSystem,
    b: &BranchingSystem,
    ia: &[Vec<u32>],
    ib: &[Vec<u32>],
    x0: usize,
    y0: usize,
    map: &mut [u32],
    used: &mut [bool],
    trail: &mut Vec<(usize, usize)>,
) -> bool {
    let mut stack = vec![(x0 as u32, y0 as u32)];
    while let Some((x, y)) = stack.pop() {
        let (xu, yu) = (x as usize, y as usize);
        if map[xu] != NONE {
            if map[xu] != y {
                return false;
            }
            continue;
        }
        if used[yu] || a.levels[xu] != b.levels[yu] {
            return false;
        }
        map[xu] = y;
        used[yu] = true;
        trail.push((xu, yu));
        for (fa, fb) in a.forward.iter().zip(&b.forward).chain(ia.iter().zip(ib)) {
            match (fa[xu], fb[yu]) {
                (NONE, NONE) => {}
                (NONE, _) | (_, NONE) => return false,
                (u, v) => stack.push((u, v)),
            }
        }
    }
    true
}
