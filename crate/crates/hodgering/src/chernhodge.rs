//! The rational Chern–Hodge ring.
//!
//! Degree n sits inside (Hodge data ⊗ ℚ) ⊕ (unitary bordism ⊗ ℚ) as the
//! kernel of the surjection `(H, c) ↦ χ(H) − Td(c)` onto the constrained
//! genus target — the diagonal on which a single Kähler manifold places
//! its Hodge table and its bordism class. Its dimension is
//! ⌊(n+2)/2⌋·⌊(n+1)/2⌋ + p(n).
//!
//! Ambient coordinates are the fundamental-domain Hodge coordinates
//! followed by the partition coordinates. The diagonal and its ideals are
//! kernels of integer matrices, so each is stored as a saturated integer
//! lattice in canonical Hermite form; the ℚ-subspace it spans is what the
//! classifiers quotient by.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::bordism::{
    partition_count, partitions, pontryagin_matrix, todd_matrix, BordismClassQ,
};
use crate::cache::Cache;
use crate::comparison::f_matrix;
use crate::error::{Error, Result};
use crate::hodge::{
    b_matrix, chi_matrix, fundamental_cells, fundamental_representative, hir_rank, hodge_rank,
    HodgePolynomial,
};
use crate::intlinalg::{kernel, solve_rational, IntMatrix, Submodule};
use crate::jsonnum::ratio_to_json;

/// Dimension of degree n: ⌊(n+2)/2⌋·⌊(n+1)/2⌋ + p(n).
pub fn ch_rank(n: u32) -> usize {
    (((n + 2) / 2) * n.div_ceil(2)) as usize + partition_count(n)
}

/// Ambient dimension: Hodge rank plus partition count.
pub fn ambient_dim(n: u32) -> usize {
    hodge_rank(n) + partition_count(n)
}

fn rat_of(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

/// Reflect fundamental-domain rational coordinates to a full table.
fn fd_to_full(n: u32, coords: &[BigRational]) -> Vec<Vec<BigRational>> {
    let cells = fundamental_cells(n);
    let w = n as usize + 1;
    let mut table = vec![vec![BigRational::zero(); w]; w];
    for p in 0..=n {
        for q in 0..=n {
            let rep = fundamental_representative(n, p, q);
            let idx = cells.iter().position(|c| *c == rep).expect("cell");
            table[p as usize][q as usize] = coords[idx].clone();
        }
    }
    table
}

fn full_to_fd(n: u32, table: &[Vec<BigRational>]) -> Vec<BigRational> {
    fundamental_cells(n)
        .into_iter()
        .map(|(p, q)| table[p as usize][q as usize].clone())
        .collect()
}

/// An element of the degree-n Chern–Hodge space: a rational Hodge table
/// (stored in fundamental-domain coordinates) and a rational bordism
/// class, constrained by χ = Td.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernHodgeElementQ {
    dimension: u32,
    hodge_coords: Vec<BigRational>,
    bordism: BordismClassQ,
}

impl ChernHodgeElementQ {
    /// Validate the diagonal condition χ(hodge part) = Td(bordism part).
    pub fn new(
        dimension: u32,
        hodge_coords: Vec<BigRational>,
        bordism: BordismClassQ,
    ) -> Result<Self> {
        if hodge_coords.len() != hodge_rank(dimension) {
            return Err(Error::ShapeMismatch(format!(
                "{} Hodge coordinates for rank {}",
                hodge_coords.len(),
                hodge_rank(dimension)
            )));
        }
        if bordism.dimension() != dimension {
            return Err(Error::Input(format!(
                "bordism dimension {} does not match {}",
                bordism.dimension(),
                dimension
            )));
        }
        let elem = ChernHodgeElementQ {
            dimension,
            hodge_coords,
            bordism,
        };
        let lhs = elem.chi_coords();
        let td = todd_matrix(dimension);
        for i in 0..hir_rank(dimension) {
            let rhs: BigRational = (0..partition_count(dimension))
                .map(|j| rat_of(td.get(i, j)) * &elem.bordism.coords()[j])
                .sum();
            if lhs[i] != rhs {
                return Err(Error::Validation(format!(
                    "diagonal condition violated at genus coefficient {i}: χ gives {} but Td gives {}",
                    lhs[i], rhs
                )));
            }
        }
        Ok(elem)
    }

    /// The pair carried by a single integral Hodge element and bordism
    /// class (for instance one Kähler monomial).
    pub fn from_pair(h: &HodgePolynomial, c: &BordismClassQ) -> Result<Self> {
        Self::new(
            h.dimension(),
            h.coords().iter().map(rat_of).collect(),
            c.clone(),
        )
    }

    pub fn zero(dimension: u32) -> Self {
        ChernHodgeElementQ {
            dimension,
            hodge_coords: vec![BigRational::zero(); hodge_rank(dimension)],
            bordism: BordismClassQ::zero(dimension),
        }
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn hodge_coords(&self) -> &[BigRational] {
        &self.hodge_coords
    }

    pub fn bordism(&self) -> &BordismClassQ {
        &self.bordism
    }

    pub fn is_zero(&self) -> bool {
        self.hodge_coords.iter().all(|c| c.is_zero()) && self.bordism.is_zero()
    }

    /// Ambient coordinates: Hodge then bordism.
    pub fn ambient(&self) -> Vec<BigRational> {
        let mut v = self.hodge_coords.clone();
        v.extend(self.bordism.coords().iter().cloned());
        v
    }

    pub fn from_ambient(dimension: u32, v: &[BigRational]) -> Result<Self> {
        if v.len() != ambient_dim(dimension) {
            return Err(Error::ShapeMismatch(format!(
                "{} ambient coordinates for dimension {}",
                v.len(),
                ambient_dim(dimension)
            )));
        }
        let (h, b) = v.split_at(hodge_rank(dimension));
        Self::new(
            dimension,
            h.to_vec(),
            BordismClassQ::new(dimension, b.to_vec())?,
        )
    }

    /// χ of the Hodge part, in target coordinates.
    pub fn chi_coords(&self) -> Vec<BigRational> {
        let m = chi_matrix(self.dimension);
        (0..hir_rank(self.dimension))
            .map(|i| {
                (0..hodge_rank(self.dimension))
                    .map(|j| rat_of(m.get(i, j)) * &self.hodge_coords[j])
                    .sum()
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dimension != other.dimension {
            return Err(Error::Input(format!(
                "cannot add dimensions {} and {}",
                self.dimension, other.dimension
            )));
        }
        Ok(ChernHodgeElementQ {
            dimension: self.dimension,
            hodge_coords: self
                .hodge_coords
                .iter()
                .zip(&other.hodge_coords)
                .map(|(a, b)| a + b)
                .collect(),
            bordism: self.bordism.add(&other.bordism)?,
        })
    }

    pub fn neg(&self) -> Self {
        ChernHodgeElementQ {
            dimension: self.dimension,
            hodge_coords: self.hodge_coords.iter().map(|c| -c).collect(),
            bordism: self.bordism.neg(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, s: &BigRational) -> Self {
        ChernHodgeElementQ {
            dimension: self.dimension,
            hodge_coords: self.hodge_coords.iter().map(|c| c * s).collect(),
            bordism: self.bordism.scalar_mul(s),
        }
    }

    /// Product: Hodge tables convolve, bordism classes multiply. The
    /// diagonal is closed under this because both genera are
    /// multiplicative.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.dimension + other.dimension;
        let a = fd_to_full(self.dimension, &self.hodge_coords);
        let b = fd_to_full(other.dimension, &other.hodge_coords);
        let w = n as usize + 1;
        let mut table = vec![vec![BigRational::zero(); w]; w];
        for (p1, row) in a.iter().enumerate() {
            for (q1, v1) in row.iter().enumerate() {
                if v1.is_zero() {
                    continue;
                }
                for (p2, row2) in b.iter().enumerate() {
                    for (q2, v2) in row2.iter().enumerate() {
                        if v2.is_zero() {
                            continue;
                        }
                        let prod = v1 * v2;
                        let cur = &table[p1 + p2][q1 + q2] + prod;
                        table[p1 + p2][q1 + q2] = cur;
                    }
                }
            }
        }
        ChernHodgeElementQ {
            dimension: n,
            hodge_coords: full_to_fd(n, &table),
            bordism: self.bordism.mul(&other.bordism),
        }
    }

    pub fn to_json(&self) -> Value {
        let cells: Vec<Value> = fundamental_cells(self.dimension)
            .iter()
            .zip(&self.hodge_coords)
            .filter(|(_, v)| !v.is_zero())
            .map(|((p, q), v)| json!([p, q, ratio_to_json(v)]))
            .collect();
        let bordism: Vec<Value> = partitions(self.dimension)
            .iter()
            .zip(self.bordism.coords())
            .filter(|(_, v)| !v.is_zero())
            .map(|(lambda, v)| json!({"partition": lambda, "coeff": ratio_to_json(v)}))
            .collect();
        json!({
            "dimension": self.dimension,
            "hodge": cells,
            "bordism": bordism,
        })
    }
}

static H_MATRIX: Cache<u32, IntMatrix> = Cache::new();

/// The integer matrix of `(H, c) ↦ χ(H) − Td(c)` over the ambient basis.
pub fn h_matrix(n: u32) -> Arc<IntMatrix> {
    H_MATRIX.get_or_insert(n, || {
        let chi = chi_matrix(n);
        let td = todd_matrix(n);
        IntMatrix::from_fn(hir_rank(n), ambient_dim(n), |i, j| {
            if j < hodge_rank(n) {
                chi.get(i, j).clone()
            } else {
                -td.get(i, j - hodge_rank(n))
            }
        })
    })
}

static CH_BASIS: Cache<u32, (Submodule, Vec<ChernHodgeElementQ>)> = Cache::new();

fn ch_lattice(n: u32) -> Arc<(Submodule, Vec<ChernHodgeElementQ>)> {
    CH_BASIS.get_or_insert(n, || {
        let lat = kernel(&h_matrix(n));
        let elems = lat
            .basis_vectors()
            .into_iter()
            .map(|v| {
                let rat: Vec<BigRational> = v.iter().map(rat_of).collect();
                ChernHodgeElementQ::from_ambient(n, &rat).expect("kernel vectors are diagonal")
            })
            .collect();
        (lat, elems)
    })
}

/// A ℚ-basis of degree n, integral and Hermite-canonical.
pub fn ch_basis_q(n: u32) -> Vec<ChernHodgeElementQ> {
    ch_lattice(n).1.clone()
}

/// Membership of a pair in the diagonal subspace.
pub fn in_diagonal(e: &ChernHodgeElementQ) -> bool {
    // The defining condition is exactly the diagonal equation, which the
    // constructor already verified; kept as an explicit predicate for
    // callers holding raw ambient vectors.
    ChernHodgeElementQ::new(e.dimension(), e.hodge_coords().to_vec(), e.bordism().clone()).is_ok()
}

/// The ideals of the degree-n piece used by the classifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ChIdeal {
    /// Kernel of the birational genus read off the Hodge part.
    Birational,
    /// Kernel of the Betti specialization of the Hodge part.
    KerF,
    /// Kernel of Betti specialization and the oriented (Pontryagin)
    /// projection together.
    KerFtilde,
}

/// A subspace of the degree-n Chern–Hodge space, held as a saturated
/// integer lattice in ambient coordinates (canonical Hermite basis).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChSubspaceQ {
    dimension: u32,
    lattice: Submodule,
}

impl ChSubspaceQ {
    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn lattice(&self) -> &Submodule {
        &self.lattice
    }

    pub fn basis_elements(&self) -> Vec<ChernHodgeElementQ> {
        self.lattice
            .basis_vectors()
            .into_iter()
            .map(|v| {
                let rat: Vec<BigRational> = v.iter().map(rat_of).collect();
                ChernHodgeElementQ::from_ambient(self.dimension, &rat)
                    .expect("ideal vectors are diagonal")
            })
            .collect()
    }

    /// ℚ-membership: solve over the basis.
    pub fn contains(&self, e: &ChernHodgeElementQ) -> Result<bool> {
        if e.dimension() != self.dimension {
            return Err(Error::Input(format!(
                "dimension {} element against dimension {} subspace",
                e.dimension(),
                self.dimension
            )));
        }
        if self.rank() == 0 {
            return Ok(e.is_zero());
        }
        let basis = self.lattice.basis_vectors();
        let m: Vec<Vec<BigRational>> = (0..ambient_dim(self.dimension))
            .map(|i| basis.iter().map(|v| rat_of(&v[i])).collect())
            .collect();
        Ok(solve_rational(&m, &e.ambient())?.is_some())
    }

    pub fn is_subspace_of(&self, other: &ChSubspaceQ) -> Result<bool> {
        for b in self.basis_elements() {
            if !other.contains(&b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

static CH_IDEAL: Cache<(ChIdeal, u32), ChSubspaceQ> = Cache::new();

/// The requested ideal piece: the kernel, inside the diagonal, of the
/// corresponding quotient map.
pub fn ch_ideal_q(which: ChIdeal, n: u32) -> Arc<ChSubspaceQ> {
    CH_IDEAL.get_or_insert((which, n), || {
        let h = h_matrix(n);
        let hr = hodge_rank(n);
        let extra: IntMatrix = match which {
            ChIdeal::Birational => {
                let b = b_matrix(n);
                IntMatrix::from_fn(b.rows(), ambient_dim(n), |i, j| {
                    if j < hr {
                        b.get(i, j).clone()
                    } else {
                        BigInt::zero()
                    }
                })
            }
            ChIdeal::KerF => {
                let f = f_matrix(n);
                IntMatrix::from_fn(f.rows(), ambient_dim(n), |i, j| {
                    if j < hr {
                        f.get(i, j).clone()
                    } else {
                        BigInt::zero()
                    }
                })
            }
            ChIdeal::KerFtilde => {
                let f = f_matrix(n);
                let p = pontryagin_matrix(n);
                IntMatrix::from_fn(f.rows() + p.rows(), ambient_dim(n), |i, j| {
                    if i < f.rows() {
                        if j < hr {
                            f.get(i, j).clone()
                        } else {
                            BigInt::zero()
                        }
                    } else if j >= hr {
                        p.get(i - f.rows(), j - hr).clone()
                    } else {
                        BigInt::zero()
                    }
                })
            }
        };
        let stacked = h.vstack(&extra).expect("same ambient width");
        ChSubspaceQ {
            dimension: n,
            lattice: kernel(&stacked),
        }
    })
}

/// A linear form on the ambient space, assembled from Hodge coefficients
/// on fundamental-domain cells and Chern coefficients by partition. The
/// Chern part acts through the characteristic numbers of the basis
/// monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChFunctional {
    dimension: u32,
    row: Vec<BigRational>,
}

impl ChFunctional {
    pub fn from_row(dimension: u32, row: Vec<BigRational>) -> Result<Self> {
        if row.len() != ambient_dim(dimension) {
            return Err(Error::ShapeMismatch(format!(
                "{} row entries for ambient dimension {}",
                row.len(),
                ambient_dim(dimension)
            )));
        }
        Ok(ChFunctional { dimension, row })
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn row(&self) -> &[BigRational] {
        &self.row
    }

    pub fn evaluate(&self, e: &ChernHodgeElementQ) -> Result<BigRational> {
        if e.dimension() != self.dimension {
            return Err(Error::Input(format!(
                "dimension {} element against dimension {} functional",
                e.dimension(),
                self.dimension
            )));
        }
        Ok(self
            .row
            .iter()
            .zip(e.ambient())
            .map(|(a, b)| a * b)
            .sum())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dimension != other.dimension {
            return Err(Error::Input("functional dimensions differ".to_string()));
        }
        Ok(ChFunctional {
            dimension: self.dimension,
            row: self
                .row
                .iter()
                .zip(&other.row)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.dimension != other.dimension {
            return Err(Error::Input("functional dimensions differ".to_string()));
        }
        Ok(ChFunctional {
            dimension: self.dimension,
            row: self
                .row
                .iter()
                .zip(&other.row)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }
}

/// Assemble the induced linear form from user coefficients.
pub fn functional_on_ch(
    n: u32,
    hodge_coeffs: &[((u32, u32), BigRational)],
    chern_coeffs: &[(Vec<u32>, BigRational)],
) -> Result<ChFunctional> {
    let cells = fundamental_cells(n);
    let mut row = vec![BigRational::zero(); ambient_dim(n)];
    for ((p, q), c) in hodge_coeffs {
        let idx = cells.iter().position(|cell| *cell == (*p, *q)).ok_or_else(|| {
            Error::Input(format!(
                "({p},{q}) is not a fundamental-domain cell of dimension {n}"
            ))
        })?;
        row[idx] += c;
    }
    let parts = partitions(n);
    for (mu, c) in chern_coeffs {
        let mut sorted = mu.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if sorted.iter().sum::<u32>() != n {
            return Err(Error::Input(format!(
                "{mu:?} is not a partition of {n}"
            )));
        }
        // Transpose through the characteristic numbers of each monomial.
        for (j, lambda) in parts.iter().enumerate() {
            let value = crate::bordism::chern_numbers(lambda)
                .get(&sorted)
                .cloned()
                .ok_or_else(|| Error::Internal("missing characteristic number".to_string()))?;
            row[hodge_rank(n) + j] += c * rat_of(&value);
        }
    }
    ChFunctional { dimension: n, row }.validate()
}

impl ChFunctional {
    fn validate(self) -> Result<Self> {
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hodge::{self, IdealGenerator};

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(bi(v))
    }

    #[test]
    fn rank_formula_examples() {
        assert_eq!(ch_rank(2), 4);
        assert_eq!(ch_rank(1), 2);
        assert_eq!(ch_rank(0), 1);
    }

    #[test]
    fn basis_dimension_matches_formula() {
        for n in 0..=6u32 {
            assert_eq!(ch_basis_q(n).len(), ch_rank(n), "degree {n}");
        }
    }

    #[test]
    fn degree_one_basis_spans_expected_pairs() {
        let lat = &ch_lattice(1).0;
        // (elliptic curve, zero class): χ = 0 = Td(0).
        let e_pair =
            ChernHodgeElementQ::from_pair(&HodgePolynomial::elliptic(), &BordismClassQ::zero(1))
                .unwrap();
        // (projective line, its own class).
        let l_pair =
            ChernHodgeElementQ::from_pair(&HodgePolynomial::line(), &BordismClassQ::cp(1))
                .unwrap();
        for pair in [&e_pair, &l_pair] {
            let v: Vec<BigInt> = pair
                .ambient()
                .iter()
                .map(|r| {
                    assert!(r.denom() == &bi(1));
                    r.numer().clone()
                })
                .collect();
            assert!(lat.contains_vector(&v).unwrap());
        }
        assert_eq!(lat.rank(), 2);
    }

    #[test]
    fn degree_zero_basis_is_the_point_pair() {
        let basis = ch_basis_q(0);
        assert_eq!(basis.len(), 1);
        let point = ChernHodgeElementQ::from_pair(
            &HodgePolynomial::point(),
            &BordismClassQ::monomial(&[]),
        )
        .unwrap();
        // The point pair generates the degree-zero piece.
        assert_eq!(basis[0].hodge_coords(), point.hodge_coords());
        assert_eq!(basis[0].bordism(), point.bordism());
    }

    #[test]
    fn diagonal_condition_is_enforced() {
        // The plane's table with the wrong bordism class is rejected.
        match ChernHodgeElementQ::from_pair(&HodgePolynomial::cp(2), &BordismClassQ::zero(2)) {
            Err(Error::Validation(msg)) => assert!(msg.contains("diagonal"), "{msg}"),
            other => panic!("expected diagonal violation, got {other:?}"),
        }
        // Every basis element satisfies it by construction.
        for e in ch_basis_q(3) {
            assert!(in_diagonal(&e));
        }
    }

    #[test]
    fn birational_ideal_contains_blowup_pair() {
        // (C, [ℂP¹×ℂP¹] − [ℂP²]) is diagonal and killed by the
        // birational genus.
        let c = hodge::ideal_generator(IdealGenerator::C);
        let bordism = BordismClassQ::monomial(&[1, 1])
            .sub(&BordismClassQ::monomial(&[2]))
            .unwrap();
        let pair = ChernHodgeElementQ::from_pair(&c, &bordism).unwrap();
        let ideal = ch_ideal_q(ChIdeal::Birational, 2);
        assert!(ideal.contains(&pair).unwrap());
    }

    #[test]
    fn forgetful_kernel_contains_g_with_matching_class() {
        // Td(4[ℂP²] − 3[ℂP¹×ℂP¹]) = χ(G).
        let g = hodge::ideal_generator(IdealGenerator::G);
        let bordism = BordismClassQ::monomial(&[2])
            .scalar_mul(&rat(4))
            .sub(&BordismClassQ::monomial(&[1, 1]).scalar_mul(&rat(3)))
            .unwrap();
        let pair = ChernHodgeElementQ::from_pair(&g, &bordism).unwrap();
        let ideal = ch_ideal_q(ChIdeal::KerF, 2);
        assert!(ideal.contains(&pair).unwrap());
    }

    #[test]
    fn oriented_kernel_nests_inside_forgetful_kernel() {
        for n in 0..=6u32 {
            let tilde = ch_ideal_q(ChIdeal::KerFtilde, n);
            let full = ch_ideal_q(ChIdeal::KerF, n);
            assert!(tilde.is_subspace_of(&full).unwrap(), "degree {n}");
            // Strict exactly when the oriented side contributes: even
            // degrees at least two.
            let strict = tilde.rank() < full.rank();
            assert_eq!(strict, n >= 2 && n % 2 == 0, "degree {n}");
        }
    }

    #[test]
    fn forgetful_kernel_codimension() {
        for n in 2..=6u32 {
            let ker = ch_ideal_q(ChIdeal::KerF, n);
            assert_eq!(
                ch_rank(n) - ker.rank(),
                n as usize + 1,
                "degree {n}"
            );
        }
    }

    #[test]
    fn hrr_functional_vanishes() {
        // χ_p − Td_p, as a mixed functional, is the zero form.
        for n in 1..=4u32 {
            for p in 0..=n / 2 {
                // χ_p as folded Hodge coefficients.
                let mut hodge_coeffs = Vec::new();
                for (a, b) in fundamental_cells(n) {
                    // Value of χ_p on the basis element of cell (a,b).
                    let basis = hodge::hodge_basis(n);
                    let idx = fundamental_cells(n)
                        .iter()
                        .position(|c| *c == (a, b))
                        .unwrap();
                    let v = hodge::chi(&basis[idx]).chi()[p as usize].clone();
                    if !v.is_zero() {
                        hodge_coeffs.push(((a, b), rat_of(&v)));
                    }
                }
                let td_coeffs: Vec<(Vec<u32>, BigRational)> =
                    crate::bordism::todd_chern_coefficients(n, p)
                        .unwrap()
                        .into_iter()
                        .zip(partitions(n))
                        .map(|(c, mu)| (mu, -c))
                        .collect();
                let f = functional_on_ch(n, &hodge_coeffs, &td_coeffs).unwrap();
                for e in ch_basis_q(n) {
                    assert_eq!(f.evaluate(&e).unwrap(), rat(0), "n={n} p={p}");
                }
            }
        }
    }

    #[test]
    fn top_chern_functional_on_the_plane() {
        let f = functional_on_ch(2, &[], &[(vec![2], rat(1))]).unwrap();
        let pair =
            ChernHodgeElementQ::from_pair(&HodgePolynomial::cp(2), &BordismClassQ::cp(2))
                .unwrap();
        assert_eq!(f.evaluate(&pair).unwrap(), rat(3));
        let zero = functional_on_ch(2, &[], &[]).unwrap();
        assert_eq!(zero.evaluate(&pair).unwrap(), rat(0));
    }

    #[test]
    fn presentation_elimination_spot_check() {
        // E·(β_i − P_i(E, β₁, β₂)) is the zero class, with P_i the unique
        // polynomial matching the Hodge data of the i-dimensional
        // projective space.
        for i in 3..=4u32 {
            let beta = HodgePolynomial::cp(i);
            let p_i = hodge::decompose_els_default(&beta).unwrap();
            let expanded = hodge::expand_els(&p_i, &HodgePolynomial::cp(2)).unwrap();
            assert_eq!(expanded, beta, "P_{i} matches the Hodge data");

            // Bordism substitution: monomials with an elliptic factor die.
            let mut p_i_bordism = BordismClassQ::zero(i);
            for (m, s) in p_i.terms() {
                if m.exp(0) >= 1 {
                    continue;
                }
                let mut lambda = vec![1u32; m.exp(1) as usize];
                lambda.extend(std::iter::repeat_n(2, m.exp(2) as usize));
                let cls = BordismClassQ::monomial(&lambda)
                    .scalar_mul(&rat_of(s.as_int().unwrap()));
                p_i_bordism = p_i_bordism.add(&cls).unwrap();
            }

            let beta_pair =
                ChernHodgeElementQ::from_pair(&beta, &BordismClassQ::cp(i)).unwrap();
            let p_pair = ChernHodgeElementQ::from_pair(&expanded, &p_i_bordism).unwrap();
            let e_pair = ChernHodgeElementQ::from_pair(
                &HodgePolynomial::elliptic(),
                &BordismClassQ::zero(1),
            )
            .unwrap();
            let element = e_pair.mul(&beta_pair.sub(&p_pair).unwrap());
            assert!(element.is_zero(), "degree {}", i + 1);
        }
    }
}
