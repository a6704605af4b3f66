//! Integer linear algebra for the K-groups of `O_A`.
//!
//! `K_0(O_A) = coker(1 - A^t)` and `K_1(O_A) = ker(1 - A^t)` over `Z^n`;
//! both are read off one Smith normal form. Matrices are generic over an
//! integer type; use `BigInt` (the crate-root aliases) unless the entries are
//! known to stay small, as pivots grow quickly.

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix_monoid::{kronecker, ZeroOneMatrix};

/// Integer types the Smith reduction runs over.
pub trait IntScalar: Integer + Signed + Clone + fmt::Debug + fmt::Display + From<i64> {}

impl<T> IntScalar for T where T: Integer + Signed + Clone + fmt::Debug + fmt::Display + From<i64> {}

/// A dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: IntScalar> IntMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        if r == 0 || c == 0 || rows.iter().any(|row| row.as_ref().len() != c) {
            return Err(Error::Shape {
                rows: r,
                cols: rows.iter().map(|row| row.as_ref().len()).collect(),
            });
        }
        let data = rows
            .iter()
            .flat_map(|row| row.as_ref().iter().map(|&x| T::from(x)))
            .collect();
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn from_zero_one(a: &ZeroOneMatrix) -> Self {
        let n = a.n();
        let data = a.entries().iter().map(|&e| T::from(e as i64)).collect();
        IntMatrix {
            rows: n,
            cols: n,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let prod = a.clone() * other[(k, c)].clone();
                    out[(r, c)] = out[(r, c)].clone() + prod;
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, x)| acc + a.clone() * x.clone())
            })
            .collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<T> {
        if self.rows != self.cols {
            return Err(Error::Dimension(
                "determinant of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(T::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[(i, j)].clone() * m[(k, k)].clone()
                        - m[(i, k)].clone() * m[(k, j)].clone();
                    m[(i, j)] = num / prev.clone();
                }
            }
            prev = m[(k, k)].clone();
        }
        Ok(sign * m[(n - 1, n - 1)].clone())
    }

    pub fn is_unimodular(&self) -> bool {
        matches!(self.determinant(), Ok(d) if d.abs().is_one())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row(&mut self, dst: usize, src: usize, factor: &T) {
        for c in 0..self.cols {
            let v = self[(src, c)].clone() * factor.clone();
            self[(dst, c)] = self[(dst, c)].clone() + v;
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col(&mut self, dst: usize, src: usize, factor: &T) {
        for r in 0..self.rows {
            let v = self[(r, src)].clone() * factor.clone();
            self[(r, dst)] = self[(r, dst)].clone() + v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            self[(r, c)] = -self[(r, c)].clone();
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for IntMatrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for IntMatrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

/// `u * original * v = d` with `u`, `v` unimodular and `d` diagonal with
/// nonnegative entries forming a divisibility chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition<T> {
    pub u: IntMatrix<T>,
    pub d: IntMatrix<T>,
    pub v: IntMatrix<T>,
    pub original: IntMatrix<T>,
}

impl<T: IntScalar> SmithDecomposition<T> {
    /// The `min(rows, cols)` diagonal entries of `d`.
    pub fn diagonal(&self) -> Vec<T> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

/// Smith normal form by repeated pivoting on the smallest nonzero absolute
/// value in the trailing block, ties broken by row-major position.
pub fn smith_normal_form<T: IntScalar>(m: &IntMatrix<T>) -> SmithDecomposition<T> {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for r in t..rows {
                for c in t..cols {
                    let x = &d[(r, c)];
                    if x.is_zero() {
                        continue;
                    }
                    if pivot.is_none_or(|(pr, pc)| x.abs() < d[(pr, pc)].abs()) {
                        pivot = Some((r, c));
                    }
                }
            }
            let Some((pr, pc)) = pivot else { break };
            d.swap_rows(t, pr);
            u.swap_rows(t, pr);
            d.swap_cols(t, pc);
            v.swap_cols(t, pc);

            let p = d[(t, t)].clone();
            let mut remainder = false;
            for r in t + 1..rows {
                let (q, rem) = d[(r, t)].div_rem(&p);
                if !q.is_zero() {
                    d.add_row(r, t, &-q.clone());
                    u.add_row(r, t, &-q);
                }
                remainder |= !rem.is_zero();
            }
            for c in t + 1..cols {
                let (q, rem) = d[(t, c)].div_rem(&p);
                if !q.is_zero() {
                    d.add_col(c, t, &-q.clone());
                    v.add_col(c, t, &-q);
                }
                remainder |= !rem.is_zero();
            }
            if remainder {
                continue;
            }
            let offender = (t + 1..rows)
                .flat_map(|r| (t + 1..cols).map(move |c| (r, c)))
                .find(|&(r, c)| !d[(r, c)].is_multiple_of(&p));
            match offender {
                Some((r, _)) => {
                    let one = T::one();
                    d.add_row(t, r, &one);
                    u.add_row(t, r, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithDecomposition {
        u,
        d,
        v,
        original: m.clone(),
    }
}

/// A basis of `{x : Mx = 0}`: the columns of `V` opposite zero diagonal
/// entries, each with its first nonzero entry made positive.
pub fn kernel_basis<T: IntScalar>(m: &IntMatrix<T>) -> Vec<Vec<T>> {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    (rank..m.cols)
        .map(|c| {
            let mut col: Vec<T> = (0..m.cols).map(|r| snf.v[(r, c)].clone()).collect();
            if col
                .iter()
                .find(|x| !x.is_zero())
                .is_some_and(|x| x.is_negative())
            {
                col.iter_mut().for_each(|x| *x = -x.clone());
            }
            col
        })
        .collect()
}

/// A finitely generated abelian group `Z^free_rank (+) Z/t_1 (+) ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup<T> {
    pub free_rank: usize,
    /// Torsion coefficients, all `>= 2`, each dividing the next.
    pub torsion: Vec<T>,
}

impl<T: IntScalar> AbelianGroup<T> {
    pub fn trivial() -> Self {
        AbelianGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// The cokernel of a map whose Smith diagonal is `diagonal`, on a free
    /// module of rank `dim`.
    pub fn from_smith_diagonal(diagonal: &[T], dim: usize) -> Self {
        let nonzero: Vec<&T> = diagonal.iter().filter(|x| !x.is_zero()).collect();
        AbelianGroup {
            free_rank: dim - nonzero.len(),
            torsion: nonzero
                .into_iter()
                .filter(|x| !x.is_one())
                .cloned()
                .collect(),
        }
    }
}

impl<T: IntScalar> fmt::Display for AbelianGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        write!(f, "{}", parts.join(" (+) "))
    }
}

/// `K_0` and `K_1` of `O_A` together with the Smith data of `1 - A^t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KGroups<T> {
    pub k0: AbelianGroup<T>,
    pub k1: AbelianGroup<T>,
    pub smith_diagonal: Vec<T>,
}

/// `1_n - A^t` as an integer matrix.
pub fn one_minus_transpose<T: IntScalar>(a: &ZeroOneMatrix) -> IntMatrix<T> {
    IntMatrix::identity(a.n()).sub(&IntMatrix::from_zero_one(&a.transpose()))
}

pub fn k_groups_in<T: IntScalar>(a: &ZeroOneMatrix) -> KGroups<T> {
    let snf = smith_normal_form(&one_minus_transpose::<T>(a));
    let diagonal = snf.diagonal();
    let zeros = diagonal.iter().filter(|x| x.is_zero()).count();
    KGroups {
        k0: AbelianGroup::from_smith_diagonal(&diagonal, a.n()),
        k1: AbelianGroup::free(zeros),
        smith_diagonal: diagonal,
    }
}

/// Kronecker product of integer vectors, `(v ⊠ w)[m(i-1)+j] = v[i] w[j]`.
pub fn kron_vector<T: IntScalar>(v: &[T], w: &[T]) -> Vec<T> {
    v.iter()
        .flat_map(|a| w.iter().map(move |b| a.clone() * b.clone()))
        .collect()
}

/// Checks `(1 - A⊠B)(v ⊠ w) = 0` for every pair of kernel basis vectors
/// `v` of `1 - A` and `w` of `1 - B`.
pub fn verify_kernel_inclusion_in<T: IntScalar>(a: &ZeroOneMatrix, b: &ZeroOneMatrix) -> bool {
    let one_minus =
        |m: &ZeroOneMatrix| IntMatrix::<T>::identity(m.n()).sub(&IntMatrix::from_zero_one(m));
    let ka = kernel_basis(&one_minus(a));
    let kb = kernel_basis(&one_minus(b));
    let ab = one_minus(&kronecker(a, b));
    ka.iter().all(|v| {
        kb.iter()
            .all(|w| ab.apply(&kron_vector(v, w)).iter().all(Zero::is_zero))
    })
}
