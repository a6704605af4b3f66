//! Exact symbolic arithmetic for the direct sum of Cuntz-Krieger algebras
//! `CK_* = ⊕ O_A` over the Kronecker monoid of nondegenerate 0-1 matrices,
//! together with its comultiplication, counit and related invariants.
//!
//! The algebraic layers are generic over a coefficient field ([`Scalar`]);
//! the aliases below fix it to the Gaussian rationals, which is what the
//! identity checks and the command-line tool use.

pub mod bialgebra;
pub mod error;
pub mod ktheory;
pub mod matrix_monoid;
pub mod permutative_reps;
pub mod scalar;
pub mod star_algebra;
pub mod subshift;

pub use bialgebra::{counit, delta, phi, DirectSumElement, Family, SigmaRule, TensorElement};
pub use error::{Error, Result};
pub use matrix_monoid::{
    check_cancellation, classify, divisors, kron_index, kronecker, Classification, DivisorPair,
    ZeroOneMatrix,
};
pub use permutative_reps::{decompose, verify_decomposition, CycleWord, Decomposition};
pub use scalar::{RealScalar, Scalar};
pub use star_algebra::{Element, Monomial, Word};
pub use subshift::{cylinder_projection, sf_delta_closure, words, Subshift};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;

/// Exact Gaussian rationals `Q(i)`, the default coefficient field.
pub type GaussianRational = Complex<BigRational>;

/// An element of `O_A^(0)` with Gaussian-rational coefficients.
pub type AlgebraElement = Element<GaussianRational>;

/// An element of `⊕_A O_A^(0)` with Gaussian-rational coefficients.
pub type SumElement = DirectSumElement<GaussianRational>;

/// A tensor of monomials with Gaussian-rational coefficients.
pub type Tensor = TensorElement<GaussianRational>;

/// Arbitrary-precision integer matrix.
pub type IntMatrix = ktheory::IntMatrix<BigInt>;
pub type SmithDecomposition = ktheory::SmithDecomposition<BigInt>;
pub type AbelianGroup = ktheory::AbelianGroup<BigInt>;
pub type KGroups = ktheory::KGroups<BigInt>;

/// `K_0(O_A)` and `K_1(O_A)` over arbitrary-precision integers.
pub fn k_groups(a: &ZeroOneMatrix) -> KGroups {
    ktheory::k_groups_in(a)
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    ktheory::smith_normal_form(m)
}

pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    ktheory::kernel_basis(m)
}

pub fn verify_kernel_inclusion(a: &ZeroOneMatrix, b: &ZeroOneMatrix) -> bool {
    ktheory::verify_kernel_inclusion_in::<BigInt>(a, b)
}
