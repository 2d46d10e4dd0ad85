//! The forgetful comparison map from Hodge data to Poincaré data.
//!
//! Collapsing `x, y ↦ t` and `z ↦ z²` sends a degree-n Hodge element to
//! the degree-2n Poincaré element with `b_k = Σ_{p+q=k} h^{p,q}`. The map
//! is a degree-doubling ring homomorphism whose kernel is the principal
//! ideal generated by a single degree-two element `G` with zero Betti
//! specialization and signature four. Intersecting with the signature
//! kernel carves out the piece relevant to orientation-preserving
//! comparisons; it vanishes in degrees below three.

use std::sync::Arc;

use crate::cache::Cache;
use crate::error::Result;
use crate::hodge::{
    self, hodge_basis, hodge_rank, ideal_submodule, HodgePolynomial, IdealGenerator,
};
use crate::intlinalg::{kernel, IntMatrix, Submodule};
use crate::poincare::{poincare_rank, PoincarePolynomial};

/// The forgetful map: Betti specialization, doubling the degree.
pub fn forget_f(h: &HodgePolynomial) -> PoincarePolynomial {
    hodge::betti_specialization(h)
}

/// The distinguished degree-two kernel generator, expanded.
pub fn g_element() -> HodgePolynomial {
    hodge::ideal_generator(IdealGenerator::G)
}

static F_MATRIX: Cache<u32, IntMatrix> = Cache::new();

/// Matrix of the forgetful map from degree n, in canonical coordinates on
/// both sides (e-basis coordinates in degree 2n downstream).
pub fn f_matrix(n: u32) -> Arc<IntMatrix> {
    F_MATRIX.get_or_insert(n, || {
        let basis = hodge_basis(n);
        IntMatrix::from_fn(poincare_rank(2 * n), hodge_rank(n), |i, j| {
            forget_f(&basis[j]).e_coords()[i].clone()
        })
    })
}

/// Which kernel of the comparison data to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum KernelVariant {
    /// The full kernel of the forgetful map.
    Full,
    /// Its intersection with the kernel of the signature.
    IntersectSignature,
}

static KERNEL_F: Cache<(KernelVariant, u32), Submodule> = Cache::new();

/// The requested kernel piece in degree n, as a canonical submodule of the
/// coordinate lattice.
pub fn kernel_f(n: u32, variant: KernelVariant) -> Arc<Submodule> {
    KERNEL_F.get_or_insert((variant, n), || match variant {
        Full => {
            // The principal-ideal description: G times the lower basis.
            (*ideal_submodule(IdealGenerator::G, n)).clone()
        }
        IntersectSignature => {
            let f_ker = kernel(&f_matrix(n));
            let sigma = IntMatrix::from_fn(1, hodge_rank(n), |_, j| {
                hodge::sigma_row(n)[j].clone()
            });
            let sigma_ker = kernel(&sigma);
            f_ker
                .intersect(&sigma_ker)
                .expect("kernels share the ambient lattice")
        }
    })
}

use KernelVariant::*;

/// Basis of the kernel piece as Hodge elements.
pub fn kernel_f_basis(n: u32, variant: KernelVariant) -> Result<Vec<HodgePolynomial>> {
    kernel_f(n, variant)
        .basis_vectors()
        .into_iter()
        .map(|v| HodgePolynomial::from_coords(n, &v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::Zero;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn forget_examples() {
        let e = forget_f(&HodgePolynomial::elliptic());
        assert_eq!(e.betti(), &[bi(1), bi(2), bi(1)]);
        assert!(forget_f(&g_element()).is_zero());
        assert_eq!(forget_f(&HodgePolynomial::point()), PoincarePolynomial::point());
    }

    #[test]
    fn forget_is_ring_homomorphic() {
        let a = HodgePolynomial::cp(2);
        let b = HodgePolynomial::elliptic();
        assert_eq!(forget_f(&a.mul(&b)), forget_f(&a).mul(&forget_f(&b)));
        assert_eq!(forget_f(&a).dimension(), 2 * a.dimension());
    }

    #[test]
    fn kernel_examples() {
        let full2 = kernel_f(2, Full);
        assert_eq!(full2.rank(), 1);
        assert!(full2.contains_vector(&g_element().coords()).unwrap());

        assert_eq!(kernel_f(2, IntersectSignature).rank(), 0);
        assert_eq!(kernel_f(1, Full).rank(), 0);
    }

    #[test]
    fn matrix_kernel_matches_principal_ideal() {
        for n in 0..=6u32 {
            let by_matrix = kernel(&f_matrix(n));
            assert!(by_matrix.equals(&kernel_f(n, Full)).unwrap(), "degree {n}");
        }
    }

    #[test]
    fn image_rank_is_degree_plus_one() {
        for n in 2..=6u32 {
            let rank_h = hodge_rank(n);
            let rank_ker = kernel_f(n, Full).rank();
            assert_eq!(rank_h - rank_ker, n as usize + 1, "degree {n}");
        }
    }

    #[test]
    fn signature_on_the_kernel() {
        for n in 2..=6u32 {
            let sigma = hodge::sigma_row(n);
            let basis = kernel_f(n, Full).basis_vectors();
            // σ does not vanish identically on the kernel in even degrees
            // (in odd degrees σ is zero on everything)...
            let values: Vec<BigInt> = basis
                .iter()
                .map(|v| v.iter().zip(&sigma).map(|(a, b)| a * b).sum())
                .collect();
            if n % 2 == 0 {
                assert!(values.iter().any(|v| !v.is_zero()), "degree {n}");
            }
            // ...but its reduction mod 4 does.
            for v in values {
                assert!(v.mod_floor(&bi(4)).is_zero(), "degree {n}");
            }
        }
    }

    #[test]
    fn signature_kernel_intersection_vanishes_low() {
        assert_eq!(kernel_f(0, IntersectSignature).rank(), 0);
        assert_eq!(kernel_f(1, IntersectSignature).rank(), 0);
        assert_eq!(kernel_f(2, IntersectSignature).rank(), 0);
        assert!(kernel_f(3, IntersectSignature).rank() > 0);
    }
}
