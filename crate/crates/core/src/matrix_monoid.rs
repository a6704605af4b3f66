//! The monoid of nondegenerate 0-1 matrices under the Kronecker product.
//!
//! Indices follow two conventions: matrix positions (`get`) are 0-based like
//! any Rust container, while *letters* (generator labels, word entries and
//! [`kron_index`]) are 1-based, since they name the generators `s_1..s_n`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A square nondegenerate matrix with entries in {0, 1}.
///
/// Ordering is by dimension, then row-major lexicographic on the entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZeroOneMatrix {
    n: usize,
    entries: Vec<u8>,
}

impl ZeroOneMatrix {
    /// Builds a matrix from rows, rejecting non-square, non-binary and
    /// degenerate input.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let lens: Vec<usize> = rows.iter().map(|r| r.as_ref().len()).collect();
        if n == 0 || lens.iter().any(|&l| l != n) {
            return Err(Error::Shape {
                rows: n,
                cols: lens,
            });
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.as_ref().iter().copied())
            .collect();
        Self::from_entries(n, entries)
    }

    /// Builds a matrix from `n * n` row-major entries.
    pub fn from_entries(n: usize, entries: Vec<u8>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::Shape {
                rows: n,
                cols: vec![entries.len()],
            });
        }
        if let Some(pos) = entries.iter().position(|&e| e > 1) {
            return Err(Error::NotZeroOne {
                row: pos / n,
                col: pos % n,
                value: entries[pos] as i64,
            });
        }
        let m = ZeroOneMatrix { n, entries };
        if let Some(r) = (0..n).find(|&r| (0..n).all(|c| !m.get(r, c))) {
            return Err(Error::Degenerate(format!("row {} is zero", r + 1)));
        }
        if let Some(c) = (0..n).find(|&c| (0..n).all(|r| !m.get(r, c))) {
            return Err(Error::Degenerate(format!("column {} is zero", c + 1)));
        }
        Ok(m)
    }

    /// The 1x1 matrix `1`, unit of the monoid.
    pub fn unit() -> Self {
        ZeroOneMatrix {
            n: 1,
            entries: vec![1],
        }
    }

    /// The all-ones matrix `F_n`.
    pub fn full(n: usize) -> Self {
        assert!(n >= 1, "F_n needs n >= 1");
        ZeroOneMatrix {
            n,
            entries: vec![1; n * n],
        }
    }

    /// The `n x n` identity matrix.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        ZeroOneMatrix { n, entries }
    }

    /// The permutation matrix with a 1 at `(i, perm[i])` (0-based).
    pub fn permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut entries = vec![0; n * n];
        for (i, &p) in perm.iter().enumerate() {
            if p >= n {
                return Err(Error::IndexOutOfRange {
                    index: p + 1,
                    bound: n,
                });
            }
            entries[i * n + p] = 1;
        }
        Self::from_entries(n, entries)
    }

    /// Every nondegenerate matrix of dimension `n`, in ascending order.
    /// Only sensible for `n <= 4`.
    pub fn all_nondegenerate(n: usize) -> Vec<Self> {
        assert!(
            (1..=4).contains(&n),
            "exhaustive enumeration limited to n <= 4"
        );
        let cells = n * n;
        let mut out = Vec::new();
        for bits in 0u32..(1u32 << cells) {
            // bit (cells - 1 - k) holds entry k so the loop runs in row-major lex order
            let entries = (0..cells)
                .map(|k| ((bits >> (cells - 1 - k)) & 1) as u8)
                .collect();
            if let Ok(m) = Self::from_entries(n, entries) {
                out.push(m);
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 0-based position.
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        self.entries[row * self.n + col] == 1
    }

    /// Whether letter `j` may follow letter `i` (1-based letters).
    #[inline]
    pub fn allows(&self, i: u32, j: u32) -> bool {
        self.get(i as usize - 1, j as usize - 1)
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.n == 1
    }

    pub fn is_full(&self) -> bool {
        self.entries.iter().all(|&e| e == 1)
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let entries = (0..n * n)
            .map(|k| self.entries[(k % n) * n + k / n])
            .collect();
        ZeroOneMatrix { n, entries }
    }

    /// The Kronecker product `self ⊠ other`.
    pub fn kron(&self, other: &Self) -> Self {
        kronecker(self, other)
    }

    pub fn classify(&self) -> Classification {
        classify(self)
    }

    pub fn divisors(&self) -> Vec<DivisorPair> {
        divisors(self)
    }
}

impl fmt::Debug for ZeroOneMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZeroOneMatrix({})", self)
    }
}

/// Short tag: `1` for the unit, `F<n>` for full matrices, otherwise the rows
/// as digit strings, e.g. `[11;10]`.
impl fmt::Display for ZeroOneMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        if self.is_full() {
            return write!(f, "F{}", self.n);
        }
        write!(f, "[")?;
        for (r, row) in self.entries.chunks(self.n).enumerate() {
            if r > 0 {
                write!(f, ";")?;
            }
            for e in row {
                write!(f, "{}", e)?;
            }
        }
        write!(f, "]")
    }
}

/// An ordered Kronecker factorisation `left ⊠ right`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorPair {
    pub left: ZeroOneMatrix,
    pub right: ZeroOneMatrix,
}

/// Result of [`classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub nondegenerate: bool,
    pub irreducible: bool,
    pub permutation: bool,
    /// `O_A` is simple: irreducible and not a permutation matrix.
    pub simple_ck: bool,
}

/// `(A ⊠ B)[m(i-1)+j, m(i'-1)+j'] = a[i,i'] * b[j,j']` with `m = B.n`.
pub fn kronecker(a: &ZeroOneMatrix, b: &ZeroOneMatrix) -> ZeroOneMatrix {
    let (n, m) = (a.n, b.n);
    let nm = n * m;
    let mut entries = vec![0u8; nm * nm];
    for i in 0..n {
        for ip in 0..n {
            if !a.get(i, ip) {
                continue;
            }
            for j in 0..m {
                let row = (m * i + j) * nm;
                for jp in 0..m {
                    entries[row + m * ip + jp] = b.entries[j * m + jp];
                }
            }
        }
    }
    ZeroOneMatrix { n: nm, entries }
}

/// The Kronecker index `m(i-1)+j` of the pair `(i, j)`, all 1-based.
pub fn kron_index(i: usize, j: usize, n: usize, m: usize) -> Result<usize> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, bound: n });
    }
    if j == 0 || j > m {
        return Err(Error::IndexOutOfRange { index: j, bound: m });
    }
    Ok(m * (i - 1) + j)
}

/// Letter-level Kronecker index for a right factor of dimension `m`.
#[inline]
pub fn kron_letter(i: u32, j: u32, m: usize) -> u32 {
    m as u32 * (i - 1) + j
}

/// Inverse of [`kron_letter`]: splits a letter of `B ⊠ C` with `C.n = m`.
#[inline]
pub fn split_letter(letter: u32, m: usize) -> (u32, u32) {
    let l = letter - 1;
    (l / m as u32 + 1, l % m as u32 + 1)
}

pub fn classify(a: &ZeroOneMatrix) -> Classification {
    let n = a.n;
    let nondegenerate =
        (0..n).all(|r| (0..n).any(|c| a.get(r, c))) && (0..n).all(|c| (0..n).any(|r| a.get(r, c)));
    let irreducible = strongly_connected(a);
    let permutation = (0..n).all(|r| (0..n).filter(|&c| a.get(r, c)).count() == 1)
        && (0..n).all(|c| (0..n).filter(|&r| a.get(r, c)).count() == 1);
    Classification {
        nondegenerate,
        irreducible,
        permutation,
        simple_ck: irreducible && !permutation,
    }
}

/// Strong connectivity of the graph with an edge `i -> j` whenever `a[i,j] = 1`,
/// by one forward and one backward search from vertex 0.
fn strongly_connected(a: &ZeroOneMatrix) -> bool {
    let n = a.n;
    let reach = |forward: bool| {
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for w in 0..n {
                let edge = if forward { a.get(v, w) } else { a.get(w, v) };
                if edge && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    };
    // a single vertex needs its self-loop; nondegeneracy guarantees it for n = 1
    if n == 1 {
        return a.get(0, 0);
    }
    reach(true) && reach(false)
}

/// All ordered factorisations `(B, C)` with `B ⊠ C = A`.
///
/// For each split `n = m * l` the left factor is the nonzero pattern of the
/// `m x m` grid of `l x l` blocks and the right factor is any nonzero block;
/// the candidate is kept only if its product reproduces `A`. At most one pair
/// exists per split, so the output is ordered by left dimension.
pub fn divisors(a: &ZeroOneMatrix) -> Vec<DivisorPair> {
    let n = a.n;
    let mut out = Vec::new();
    for m in 1..=n {
        if n % m != 0 {
            continue;
        }
        let l = n / m;
        let block = |bi: usize, bj: usize, r: usize, c: usize| a.get(bi * l + r, bj * l + c);
        let mut left = vec![0u8; m * m];
        let mut first_nonzero = None;
        for bi in 0..m {
            for bj in 0..m {
                let nonzero = (0..l).any(|r| (0..l).any(|c| block(bi, bj, r, c)));
                if nonzero {
                    left[bi * m + bj] = 1;
                    first_nonzero.get_or_insert((bi, bj));
                }
            }
        }
        let Some((bi, bj)) = first_nonzero else {
            continue;
        };
        let right: Vec<u8> = (0..l * l)
            .map(|k| block(bi, bj, k / l, k % l) as u8)
            .collect();
        let (Ok(left), Ok(right)) = (
            ZeroOneMatrix::from_entries(m, left),
            ZeroOneMatrix::from_entries(l, right),
        ) else {
            continue;
        };
        if &kronecker(&left, &right) == a {
            out.push(DivisorPair { left, right });
        }
    }
    out
}

/// Whether `A ⊠ B = A' ⊠ B'` forces `A = A'` and `B = B'` for this instance.
pub fn check_cancellation(
    a: &ZeroOneMatrix,
    a2: &ZeroOneMatrix,
    b: &ZeroOneMatrix,
    b2: &ZeroOneMatrix,
) -> Result<bool> {
    if a.n != a2.n {
        return Err(Error::ContextMismatch {
            expected: a.n,
            found: a2.n,
        });
    }
    if b.n != b2.n {
        return Err(Error::ContextMismatch {
            expected: b.n,
            found: b2.n,
        });
    }
    let equal_products = kronecker(a, b) == kronecker(a2, b2);
    Ok(!equal_products || (a == a2 && b == b2))
}
