//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use ckstar::{AlgebraElement, GaussianRational, Monomial, Scalar, Word, ZeroOneMatrix};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn golden() -> ZeroOneMatrix {
    ZeroOneMatrix::from_rows(&[[1, 1], [1, 0]]).unwrap()
}

pub fn random_matrix(rng: &mut impl Rng, n: usize) -> ZeroOneMatrix {
    loop {
        let entries = (0..n * n).map(|_| rng.gen_range(0..=1u8)).collect();
        if let Ok(m) = ZeroOneMatrix::from_entries(n, entries) {
            return m;
        }
    }
}

/// Matrices of each dimension up to 8 meant to hit every code path: full,
/// identity, a cyclic permutation, golden-type, Kronecker products and a few
/// random ones.
pub fn representative_contexts(max_n: usize, seed: u64) -> Vec<ZeroOneMatrix> {
    let mut r = rng(seed);
    let mut out = vec![ZeroOneMatrix::unit()];
    out.extend(ZeroOneMatrix::all_nondegenerate(2));
    for n in 3..=max_n {
        out.push(ZeroOneMatrix::full(n));
        out.push(ZeroOneMatrix::identity(n));
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        out.push(ZeroOneMatrix::permutation(&cycle).unwrap());
        let mut rows = vec![vec![1u8; n]; n];
        rows[n - 1] = (0..n).map(|c| u8::from(c == 0)).collect();
        out.push(ZeroOneMatrix::from_rows(&rows).unwrap());
        for _ in 0..2 {
            out.push(random_matrix(&mut r, n));
        }
    }
    let g = golden();
    let flip = ZeroOneMatrix::from_rows(&[[0, 1], [1, 0]]).unwrap();
    for (a, b) in [(&g, &g), (&ZeroOneMatrix::full(2), &g), (&g, &flip)] {
        out.push(ckstar::kronecker(a, b));
    }
    if max_n >= 8 {
        out.push(ckstar::kronecker(&ckstar::kronecker(&g, &g), &g));
        out.push(ckstar::kronecker(&g, &ZeroOneMatrix::full(4)));
    }
    out.sort();
    out.dedup();
    out.retain(|a| a.n() <= max_n);
    out
}

pub fn random_word(rng: &mut impl Rng, ctx: &ZeroOneMatrix, max_len: usize) -> Vec<u32> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| rng.gen_range(1..=ctx.n() as u32))
        .collect()
}

pub fn random_coefficient(rng: &mut impl Rng) -> GaussianRational {
    let q = |rng: &mut dyn rand::RngCore| {
        GaussianRational::from_ratio(
            &BigInt::from(rng.gen_range(-4i64..=4)),
            &BigInt::from(rng.gen_range(1i64..=3)),
        )
    };
    let re = q(rng);
    let im = q(rng);
    re + im * GaussianRational::imaginary_unit().unwrap()
}

/// A normalized element with up to `terms` random (possibly vanishing) monomials.
pub fn random_element(
    rng: &mut impl Rng,
    ctx: &ZeroOneMatrix,
    terms: usize,
    max_len: usize,
) -> AlgebraElement {
    let k = rng.gen_range(1..=terms);
    let raw: Vec<(Monomial, GaussianRational)> = (0..k)
        .map(|_| {
            let j = random_word(rng, ctx, max_len);
            let s = random_word(rng, ctx, max_len);
            (
                Monomial::new(Word::new(j), Word::new(s)),
                random_coefficient(rng),
            )
        })
        .collect();
    AlgebraElement::normalize(ctx, raw).unwrap()
}

/// Random monomials `s_J s_K^*` with `|J|, |K| <= 2`.
pub fn random_low_degree(rng: &mut impl Rng, ctx: &ZeroOneMatrix, terms: usize) -> AlgebraElement {
    random_element(rng, ctx, terms, 2)
}

pub fn generators(ctx: &ZeroOneMatrix) -> Vec<AlgebraElement> {
    (1..=ctx.n() as u32)
        .flat_map(|i| {
            let s = AlgebraElement::generator(ctx, i).unwrap();
            [s.adjoint(), s]
        })
        .collect()
}

/// Every factorisation of `a` found by enumerating all 0-1 matrices of the
/// smaller factor dimension and solving entrywise for the other factor.
pub fn brute_force_divisors(a: &ZeroOneMatrix) -> Vec<(ZeroOneMatrix, ZeroOneMatrix)> {
    let n = a.n();
    let mut out = Vec::new();
    for m in (1..=n).filter(|m| n % m == 0) {
        let l = n / m;
        let small = m.min(l);
        for bits in 0u64..(1u64 << (small * small)) {
            let entries: Vec<u8> = (0..small * small)
                .map(|k| ((bits >> k) & 1) as u8)
                .collect();
            let Ok(x) = ZeroOneMatrix::from_entries(small, entries) else {
                continue;
            };
            // x is the left factor when m <= l, else the right one
            let big = n / small;
            let mut y = vec![0u8; big * big];
            let (r0, c0) = (0..small * small)
                .map(|k| (k / small, k % small))
                .find(|&(r, c)| x.get(r, c))
                .expect("nondegenerate");
            for r in 0..big {
                for c in 0..big {
                    let (row, col) = if m <= l {
                        (r0 * big + r, c0 * big + c)
                    } else {
                        (r * small + r0, c * small + c0)
                    };
                    y[r * big + c] = u8::from(a.get(row, col));
                }
            }
            let Ok(y) = ZeroOneMatrix::from_entries(big, y) else {
                continue;
            };
            let pair = if m <= l { (x, y) } else { (y, x) };
            if ckstar::kronecker(&pair.0, &pair.1) == *a {
                out.push(pair);
            }
        }
    }
    out.sort();
    out
}

/// Strong connectivity from `(I + A)^(n-1) > 0` entrywise.
pub fn irreducible_by_powers(a: &ZeroOneMatrix) -> bool {
    let n = a.n();
    let mut reach: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| i == j || a.get(i, j)).collect())
        .collect();
    for _ in 1..n.max(2) {
        reach = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).any(|k| reach[i][k] && (k == j || a.get(k, j))))
                    .collect()
            })
            .collect();
    }
    // a single vertex also needs a loop; nondegeneracy provides it
    reach.iter().all(|r| r.iter().all(|&x| x))
}

pub fn permutation_by_counts(a: &ZeroOneMatrix) -> bool {
    let n = a.n();
    (0..n).all(|i| (0..n).filter(|&j| a.get(i, j)).count() == 1)
        && (0..n).all(|j| (0..n).filter(|&i| a.get(i, j)).count() == 1)
}

pub type Dense = Vec<Vec<i64>>;

pub fn dense(a: &ZeroOneMatrix) -> Dense {
    a.rows()
        .into_iter()
        .map(|r| r.into_iter().map(i64::from).collect())
        .collect()
}

pub fn matmul(x: &Dense, y: &Dense) -> Dense {
    let (n, k, m) = (x.len(), y.len(), y[0].len());
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).map(|t| x[i][t] * y[t][j]).sum())
                .collect()
        })
        .collect()
}

pub fn dense_kron(x: &Dense, y: &Dense) -> Dense {
    let (n, m) = (x.len(), y.len());
    (0..n * m)
        .map(|r| {
            (0..n * m)
                .map(|c| x[r / m][c / m] * y[r % m][c % m])
                .collect()
        })
        .collect()
}

/// Number of admissible words of length `l` as the entry sum of `A^(l-1)`.
pub fn word_count_by_powers(a: &ZeroOneMatrix, l: usize) -> BigInt {
    let n = a.n();
    let ad: Vec<Vec<BigInt>> = dense(a)
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    let mut p: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    for _ in 1..l {
        p = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| &p[i][k] * &ad[k][j]).sum())
                    .collect()
            })
            .collect();
    }
    p.into_iter().flatten().sum()
}

/// Fraction-free Gaussian elimination.
pub fn bareiss_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

pub fn is_unit_det(m: &[Vec<BigInt>]) -> bool {
    bareiss_det(m).abs().is_one()
}

pub fn big_matmul(x: &[Vec<BigInt>], y: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let (n, k, m) = (x.len(), y.len(), y[0].len());
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).map(|t| &x[i][t] * &y[t][j]).sum())
                .collect()
        })
        .collect()
}

/// Period of an irreducible matrix: the gcd of `level(u) + 1 - level(v)` over
/// edges `u -> v`, with levels from a breadth-first search at vertex 0.
pub fn period(a: &ZeroOneMatrix) -> usize {
    let n = a.n();
    let mut level = vec![usize::MAX; n];
    level[0] = 0;
    let mut queue = std::collections::VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for v in (0..n).filter(|&v| a.get(u, v)) {
            if level[v] == usize::MAX {
                level[v] = level[u] + 1;
                queue.push_back(v);
            }
        }
    }
    let mut g = 0i64;
    for u in 0..n {
        for v in (0..n).filter(|&v| a.get(u, v)) {
            g = num_integer::Integer::gcd(&g, &(level[u] as i64 + 1 - level[v] as i64));
        }
    }
    g as usize
}
