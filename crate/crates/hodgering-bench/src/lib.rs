//! Input builders shared by the benchmark targets.

use hodgering::hodge::{hodge_rank, HodgePolynomial};
use hodgering::intlinalg::IntMatrix;
use hodgering::poincare::{poincare_rank, PoincarePolynomial};
use num_bigint::BigInt;

/// Deterministic pseudo-random integers without external state.
pub struct SplitMix(pub u64);

impl SplitMix {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next_u64() % (hi - lo + 1) as u64) as i64
    }
}

pub fn random_matrix(rng: &mut SplitMix, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.range(-bound, bound)))
}

pub fn random_hodge(rng: &mut SplitMix, n: u32) -> HodgePolynomial {
    let coords: Vec<BigInt> = (0..hodge_rank(n))
        .map(|_| BigInt::from(rng.range(-9, 9)))
        .collect();
    HodgePolynomial::from_coords(n, &coords).expect("coordinates")
}

pub fn random_poincare(rng: &mut SplitMix, n: u32) -> PoincarePolynomial {
    let coords: Vec<BigInt> = (0..poincare_rank(n))
        .map(|_| BigInt::from(rng.range(-9, 9)))
        .collect();
    PoincarePolynomial::from_e_coords(n, &coords).expect("coordinates")
}
