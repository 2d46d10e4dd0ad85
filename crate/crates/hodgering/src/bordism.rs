//! Rational unitary bordism in projective-space coordinates.
//!
//! Degree n is a ℚ-vector space with one coordinate per partition of n,
//! the coordinate of λ = (λ₁ ≥ … ≥ λ_k) being the coefficient of the
//! product of projective spaces of those dimensions. Chern and Pontryagin
//! numbers of such a monomial come from expanding the total class of the
//! product — `(1+h_j)^{λ_j+1}` per factor, `(1+h_j²)^{λ_j+1}` for the
//! Pontryagin case — in the truncated cohomology ring and reading the
//! coefficient of the top cell.
//!
//! The Todd genus is computed through Hodge data: each projective space
//! carries the diagonal diamond, χ of the product represents the genus,
//! and the two routes agreeing degreewise on coefficients is one of the
//! pinned acceptance identities. The projection to rational oriented
//! bordism matches Pontryagin numbers against monomials in even-dimensional
//! projective spaces, which is a square invertible rational system.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cache::Cache;
use crate::error::{Error, Result};
use crate::hodge::{self, hir_rank, HirPolynomial, HodgePolynomial};
use crate::intlinalg::{solve_rational, IntMatrix};

/// Partitions of n as non-increasing part lists, enumerated in reverse
/// lexicographic order: `[n]` first, `[1,…,1]` last. This order is the
/// canonical coordinate order everywhere.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn gen(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            prefix.push(part);
            gen(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    gen(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// Number of partitions of n.
pub fn partition_count(n: u32) -> usize {
    partitions(n).len()
}

/// Partitions of n into even parts, in the induced canonical order.
pub fn even_partitions(n: u32) -> Vec<Vec<u32>> {
    if !n.is_multiple_of(2) {
        return Vec::new();
    }
    partitions(n / 2)
        .into_iter()
        .map(|p| p.into_iter().map(|x| 2 * x).collect())
        .collect()
}

/// An element of rational unitary bordism in one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BordismClassQ {
    dimension: u32,
    coords: Vec<BigRational>,
}

impl BordismClassQ {
    pub fn new(dimension: u32, coords: Vec<BigRational>) -> Result<Self> {
        if coords.len() != partition_count(dimension) {
            return Err(Error::ShapeMismatch(format!(
                "{} coordinates for {} partitions of {}",
                coords.len(),
                partition_count(dimension),
                dimension
            )));
        }
        Ok(BordismClassQ { dimension, coords })
    }

    pub fn zero(dimension: u32) -> Self {
        BordismClassQ {
            dimension,
            coords: vec![BigRational::zero(); partition_count(dimension)],
        }
    }

    /// The class of a single projective-space monomial.
    pub fn monomial(lambda: &[u32]) -> Self {
        let n: u32 = lambda.iter().sum();
        let mut sorted = lambda.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut c = Self::zero(n);
        let idx = partitions(n)
            .iter()
            .position(|p| *p == sorted)
            .expect("sorted partition is canonical");
        c.coords[idx] = BigRational::one();
        c
    }

    pub fn cp(k: u32) -> Self {
        Self::monomial(&[k])
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dimension != other.dimension {
            return Err(Error::Input(format!(
                "cannot add dimensions {} and {}",
                self.dimension, other.dimension
            )));
        }
        Ok(BordismClassQ {
            dimension: self.dimension,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        BordismClassQ {
            dimension: self.dimension,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, s: &BigRational) -> Self {
        BordismClassQ {
            dimension: self.dimension,
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    /// Product: monomials concatenate, coefficients multiply.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.dimension + other.dimension;
        let parts_a = partitions(self.dimension);
        let parts_b = partitions(other.dimension);
        let parts = partitions(n);
        let mut coords = vec![BigRational::zero(); parts.len()];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let mut merged: Vec<u32> =
                    parts_a[i].iter().chain(parts_b[j].iter()).copied().collect();
                merged.sort_unstable_by(|x, y| y.cmp(x));
                let idx = parts.iter().position(|p| *p == merged).expect("partition");
                coords[idx] += a * b;
            }
        }
        BordismClassQ {
            dimension: n,
            coords,
        }
    }
}

/// Exact characteristic numbers of one projective-space monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharNumberVector {
    dimension: u32,
    // (index partition, value) in canonical partition order.
    values: Vec<(Vec<u32>, BigInt)>,
}

impl CharNumberVector {
    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn values(&self) -> &[(Vec<u32>, BigInt)] {
        &self.values
    }

    pub fn get(&self, partition: &[u32]) -> Option<&BigInt> {
        self.values
            .iter()
            .find(|(p, _)| p == partition)
            .map(|(_, v)| v)
    }
}

fn binom(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut v = BigInt::one();
    for i in 0..k {
        v = v * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    v
}

/// Dense element of the truncated cohomology ring of a product of
/// projective spaces: exponents capped by the factor dimensions.
struct TruncElem {
    caps: Vec<u32>,
    data: Vec<BigInt>,
}

impl TruncElem {
    fn size(caps: &[u32]) -> usize {
        caps.iter().map(|&c| c as usize + 1).product()
    }

    fn zero(caps: &[u32]) -> Self {
        TruncElem {
            caps: caps.to_vec(),
            data: vec![BigInt::zero(); Self::size(caps)],
        }
    }

    fn index(&self, exps: &[u32]) -> usize {
        let mut idx = 0usize;
        for (j, &e) in exps.iter().enumerate() {
            idx = idx * (self.caps[j] as usize + 1) + e as usize;
        }
        idx
    }

    fn exps_of(&self, mut idx: usize) -> Vec<u32> {
        let mut exps = vec![0u32; self.caps.len()];
        for j in (0..self.caps.len()).rev() {
            let base = self.caps[j] as usize + 1;
            exps[j] = (idx % base) as u32;
            idx /= base;
        }
        exps
    }

    fn mul(&self, other: &TruncElem) -> TruncElem {
        let mut out = TruncElem::zero(&self.caps);
        for (ia, va) in self.data.iter().enumerate() {
            if va.is_zero() {
                continue;
            }
            let ea = self.exps_of(ia);
            for (ib, vb) in other.data.iter().enumerate() {
                if vb.is_zero() {
                    continue;
                }
                let eb = other.exps_of(ib);
                let mut sum = vec![0u32; ea.len()];
                let mut fits = true;
                for j in 0..ea.len() {
                    sum[j] = ea[j] + eb[j];
                    if sum[j] > self.caps[j] {
                        fits = false;
                        break;
                    }
                }
                if fits {
                    let idx = out.index(&sum);
                    out.data[idx] = &out.data[idx] + va * vb;
                }
            }
        }
        out
    }
}

/// The degree-i piece of the total class of the monomial. For the Chern
/// case the factor class is `(1+h_j)^{λ_j+1}`; for the Pontryagin case it
/// is `(1+h_j²)^{λ_j+1}` and only even h-degrees appear.
fn graded_class_piece(lambda: &[u32], degree: u32, pontryagin: bool) -> TruncElem {
    let mut out = TruncElem::zero(lambda);
    let total = out.data.len();
    for idx in 0..total {
        let exps = out.exps_of(idx);
        if exps.iter().sum::<u32>() != degree {
            continue;
        }
        let mut coeff = BigInt::one();
        for (j, &e) in exps.iter().enumerate() {
            let c = if pontryagin {
                if e % 2 == 1 {
                    BigInt::zero()
                } else {
                    binom(lambda[j] + 1, e / 2)
                }
            } else {
                binom(lambda[j] + 1, e)
            };
            if c.is_zero() {
                coeff = BigInt::zero();
                break;
            }
            coeff *= c;
        }
        out.data[idx] = coeff;
    }
    out
}

fn char_number(lambda: &[u32], mu: &[u32], pontryagin: bool) -> BigInt {
    let scale = if pontryagin { 2 } else { 1 };
    let mut acc = TruncElem::zero(lambda);
    let one_idx = acc.index(&vec![0; lambda.len()]);
    acc.data[one_idx] = BigInt::one();
    for &part in mu {
        acc = acc.mul(&graded_class_piece(lambda, scale * part, pontryagin));
    }
    let top = acc.index(lambda);
    acc.data[top].clone()
}

static CHERN_NUMBERS: Cache<Vec<u32>, CharNumberVector> = Cache::new();

/// All Chern numbers `c_μ` of the monomial `ℂP^{λ₁}×…×ℂP^{λ_k}`, indexed
/// by the partitions μ of |λ|.
pub fn chern_numbers(lambda: &[u32]) -> Arc<CharNumberVector> {
    let mut key = lambda.to_vec();
    key.sort_unstable_by(|a, b| b.cmp(a));
    CHERN_NUMBERS.get_or_insert(key.clone(), || {
        let n: u32 = key.iter().sum();
        let values = partitions(n)
            .into_iter()
            .map(|mu| {
                let v = char_number(&key, &mu, false);
                (mu, v)
            })
            .collect();
        CharNumberVector {
            dimension: n,
            values,
        }
    })
}

static PONTRYAGIN_NUMBERS: Cache<Vec<u32>, CharNumberVector> = Cache::new();

/// All Pontryagin numbers `p_μ` of the monomial, indexed by partitions of
/// n/2; empty for odd n, where no Pontryagin numbers exist.
pub fn pontryagin_numbers(lambda: &[u32]) -> Arc<CharNumberVector> {
    let mut key = lambda.to_vec();
    key.sort_unstable_by(|a, b| b.cmp(a));
    PONTRYAGIN_NUMBERS.get_or_insert(key.clone(), || {
        let n: u32 = key.iter().sum();
        let values = if n.is_multiple_of(2) {
            partitions(n / 2)
                .into_iter()
                .map(|mu| {
                    let v = char_number(&key, &mu, true);
                    (mu, v)
                })
                .collect()
        } else {
            Vec::new()
        };
        CharNumberVector {
            dimension: n,
            values,
        }
    })
}

/// The Hodge element of a projective-space monomial: product of diagonal
/// diamonds.
pub fn cp_monomial_hodge(lambda: &[u32]) -> HodgePolynomial {
    let mut h = HodgePolynomial::point();
    for &k in lambda {
        h = h.mul(&HodgePolynomial::cp(k));
    }
    h
}

/// The χ_y-coefficients of the Todd genus, with rational values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HirPolynomialQ {
    dimension: u32,
    chi: Vec<BigRational>,
}

impl HirPolynomialQ {
    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn chi(&self) -> &[BigRational] {
        &self.chi
    }

    pub fn is_zero(&self) -> bool {
        self.chi.iter().all(|c| c.is_zero())
    }

    pub fn coords(&self) -> Vec<BigRational> {
        self.chi[..hir_rank(self.dimension)].to_vec()
    }

    pub fn from_integer(h: &HirPolynomial) -> Self {
        HirPolynomialQ {
            dimension: h.dimension(),
            chi: h
                .chi()
                .iter()
                .map(|v| BigRational::from_integer(v.clone()))
                .collect(),
        }
    }
}

/// The Todd genus, computed as χ of the Hodge element representing the
/// class: linear over the monomial coordinates and multiplicative.
pub fn todd_genus(c: &BordismClassQ) -> HirPolynomialQ {
    let n = c.dimension();
    let mut chi_acc = vec![BigRational::zero(); n as usize + 1];
    for (lambda, coeff) in partitions(n).iter().zip(c.coords()) {
        if coeff.is_zero() {
            continue;
        }
        let h = hodge::chi(&cp_monomial_hodge(lambda));
        for (p, v) in h.chi().iter().enumerate() {
            chi_acc[p] += coeff * BigRational::from_integer(v.clone());
        }
    }
    HirPolynomialQ {
        dimension: n,
        chi: chi_acc,
    }
}

static TODD_MATRIX: Cache<u32, IntMatrix> = Cache::new();

/// Integer matrix of the Todd genus on the monomial basis of degree n:
/// rows are the constrained-target coordinates, columns the partitions.
pub fn todd_matrix(n: u32) -> Arc<IntMatrix> {
    TODD_MATRIX.get_or_insert(n, || {
        let parts = partitions(n);
        let cols: Vec<Vec<BigInt>> = parts
            .iter()
            .map(|lambda| hodge::chi(&cp_monomial_hodge(lambda)).coords())
            .collect();
        IntMatrix::from_fn(hir_rank(n), parts.len(), |i, j| cols[j][i].clone())
    })
}

static CHERN_MATRIX: Cache<u32, IntMatrix> = Cache::new();

/// The matrix `N[μ][λ] = c_μ[ℂP^λ]` over the canonical partition order.
/// It is invertible over ℚ: Chern numbers are complete rational bordism
/// invariants.
pub fn chern_matrix(n: u32) -> Arc<IntMatrix> {
    CHERN_MATRIX.get_or_insert(n, || {
        let parts = partitions(n);
        IntMatrix::from_fn(parts.len(), parts.len(), |i, j| {
            chern_numbers(&parts[j]).get(&parts[i]).cloned().unwrap()
        })
    })
}

static PONTRYAGIN_MATRIX: Cache<u32, IntMatrix> = Cache::new();

/// The matrix `p_ν[ℂP^λ]` with rows over partitions of n/2 and columns
/// over partitions of n; zero rows for odd n.
pub fn pontryagin_matrix(n: u32) -> Arc<IntMatrix> {
    PONTRYAGIN_MATRIX.get_or_insert(n, || {
        let parts = partitions(n);
        let rows = if n.is_multiple_of(2) {
            partitions(n / 2)
        } else {
            Vec::new()
        };
        IntMatrix::from_fn(rows.len(), parts.len(), |i, j| {
            pontryagin_numbers(&parts[j]).get(&rows[i]).cloned().unwrap()
        })
    })
}

/// Evaluate all Pontryagin numbers of a rational class.
pub fn pontryagin_of_class(c: &BordismClassQ) -> Vec<BigRational> {
    let m = pontryagin_matrix(c.dimension());
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| BigRational::from_integer(m.get(i, j).clone()) * &c.coords()[j])
                .sum()
        })
        .collect()
}

/// An element of rational oriented bordism in coordinates over monomials
/// in even-dimensional projective spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedClassQ {
    dimension: u32,
    coords: Vec<BigRational>,
}

impl OrientedClassQ {
    pub fn zero(dimension: u32) -> Self {
        OrientedClassQ {
            dimension,
            coords: vec![BigRational::zero(); even_partitions(dimension).len()],
        }
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.dimension + other.dimension;
        let pa = even_partitions(self.dimension);
        let pb = even_partitions(other.dimension);
        let parts = even_partitions(n);
        let mut coords = vec![BigRational::zero(); parts.len()];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let mut merged: Vec<u32> =
                    pa[i].iter().chain(pb[j].iter()).copied().collect();
                merged.sort_unstable_by(|x, y| y.cmp(x));
                let idx = parts.iter().position(|p| *p == merged).expect("partition");
                coords[idx] += a * b;
            }
        }
        OrientedClassQ {
            dimension: n,
            coords,
        }
    }
}

/// Project a unitary class to rational oriented bordism by matching
/// Pontryagin numbers against monomials in even projective spaces. Odd
/// degrees project to zero, where the target vanishes.
pub fn forget_oriented(c: &BordismClassQ) -> Result<OrientedClassQ> {
    let n = c.dimension();
    if !n.is_multiple_of(2) {
        return Ok(OrientedClassQ::zero(n));
    }
    let targets = even_partitions(n);
    let rows = partitions(n / 2);
    let matrix: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|nu| {
            targets
                .iter()
                .map(|mu| {
                    BigRational::from_integer(
                        pontryagin_numbers(mu).get(nu).cloned().unwrap(),
                    )
                })
                .collect()
        })
        .collect();
    let rhs = pontryagin_of_class(c);
    let coords = solve_rational(&matrix, &rhs)?.ok_or_else(|| {
        Error::Internal("Pontryagin matching system unsolvable".to_string())
    })?;
    Ok(OrientedClassQ {
        dimension: n,
        coords,
    })
}

/// The canonical basis of the constrained genus target in degree n.
pub fn hir_basis(n: u32) -> Vec<HirPolynomial> {
    hodge::hir_basis(n)
}

/// Express a Todd-genus coefficient as rational Chern-number coefficients:
/// the unique solution of the transpose system against the full
/// Chern-number matrix. Index p must satisfy p ≤ n.
pub fn todd_chern_coefficients(n: u32, p: u32) -> Result<Vec<BigRational>> {
    if p > n {
        return Err(Error::Input(format!("index {p} exceeds dimension {n}")));
    }
    let parts = partitions(n);
    let nmat = chern_matrix(n);
    // N^T a = t with t_λ = (Td_p of the λ monomial).
    let matrix: Vec<Vec<BigRational>> = (0..parts.len())
        .map(|l| {
            (0..parts.len())
                .map(|m| BigRational::from_integer(nmat.get(m, l).clone()))
                .collect()
        })
        .collect();
    let rhs: Vec<BigRational> = parts
        .iter()
        .map(|lambda| {
            BigRational::from_integer(
                hodge::chi(&cp_monomial_hodge(lambda)).chi()[p as usize].clone(),
            )
        })
        .collect();
    solve_rational(&matrix, &rhs)?
        .ok_or_else(|| Error::Internal("Chern-number matrix is singular".to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(bi(v))
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(partitions(0), vec![Vec::<u32>::new()]);
        assert_eq!(partition_count(2), 2);
        assert_eq!(
            partitions(4),
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(partition_count(4), 5);
        assert_eq!(even_partitions(4), vec![vec![4], vec![2, 2]]);
        assert!(even_partitions(3).is_empty());
    }

    #[test]
    fn chern_numbers_of_plane_and_quadric_split() {
        let plane = chern_numbers(&[2]);
        assert_eq!(plane.get(&[1, 1]).unwrap(), &bi(9)); // c₁²
        assert_eq!(plane.get(&[2]).unwrap(), &bi(3)); // c₂
        // s₂ = c₁² − 2c₂ = 3.
        assert_eq!(plane.get(&[1, 1]).unwrap() - bi(2) * plane.get(&[2]).unwrap(), bi(3));

        let split = chern_numbers(&[1, 1]);
        assert_eq!(split.get(&[1, 1]).unwrap(), &bi(8));
        assert_eq!(split.get(&[2]).unwrap(), &bi(4));
        assert_eq!(split.get(&[1, 1]).unwrap() - bi(2) * split.get(&[2]).unwrap(), bi(0));

        let line = chern_numbers(&[1]);
        assert_eq!(line.get(&[1]).unwrap(), &bi(2));
    }

    #[test]
    fn pontryagin_numbers_examples() {
        assert_eq!(pontryagin_numbers(&[2]).get(&[1]).unwrap(), &bi(3));
        assert_eq!(pontryagin_numbers(&[1, 1]).get(&[1]).unwrap(), &bi(0));
        assert!(pontryagin_numbers(&[1]).values().is_empty());
    }

    #[test]
    fn todd_genus_examples() {
        let td = todd_genus(&BordismClassQ::cp(2));
        assert_eq!(td.chi(), &[rat(1), rat(-1), rat(1)]);
        let td = todd_genus(&BordismClassQ::cp(1));
        assert_eq!(td.chi(), &[rat(1), rat(-1)]);
        assert!(todd_genus(&BordismClassQ::zero(3)).is_zero());
    }

    #[test]
    fn todd_genus_is_one_on_monomials() {
        for n in 0..=5u32 {
            for lambda in partitions(n) {
                let td = todd_genus(&BordismClassQ::monomial(&lambda));
                assert_eq!(td.chi()[0], rat(1), "monomial {lambda:?}");
            }
        }
    }

    #[test]
    fn top_chern_number_is_the_euler_characteristic() {
        for n in 1..=6u32 {
            for lambda in partitions(n) {
                let expected: BigInt = lambda.iter().map(|&k| bi(k as i64 + 1)).product();
                assert_eq!(
                    chern_numbers(&lambda).get(&[n]).unwrap(),
                    &expected,
                    "monomial {lambda:?}"
                );
            }
        }
    }

    #[test]
    fn product_rule_consistency() {
        // Split the first factor off and reassemble every Chern number by
        // the convolution over exponent splits.
        for n in 2..=4u32 {
            for lambda in partitions(n) {
                if lambda.len() < 2 {
                    continue;
                }
                let first = [lambda[0]];
                let rest = &lambda[1..];
                let full = chern_numbers(&lambda);
                let left = chern_numbers(&first);
                let right = chern_numbers(rest);
                for mu in partitions(n) {
                    let mut total = BigInt::zero();
                    // Each class degree splits across the two factors:
                    // enumerate a_t + b_t = μ_t for every part.
                    let radices: Vec<u32> = mu.iter().map(|&m| m + 1).collect();
                    let combos: usize = radices.iter().map(|&r| r as usize).product();
                    for mut code in 0..combos {
                        let mut a = Vec::new();
                        let mut b = Vec::new();
                        for (t, &part) in mu.iter().enumerate() {
                            let at = (code % radices[t] as usize) as u32;
                            code /= radices[t] as usize;
                            if at > 0 {
                                a.push(at);
                            }
                            if part - at > 0 {
                                b.push(part - at);
                            }
                        }
                        if a.iter().sum::<u32>() != lambda[0]
                            || b.iter().sum::<u32>() != n - lambda[0]
                        {
                            continue;
                        }
                        a.sort_unstable_by(|x, y| y.cmp(x));
                        b.sort_unstable_by(|x, y| y.cmp(x));
                        total += left.get(&a).unwrap() * right.get(&b).unwrap();
                    }
                    assert_eq!(full.get(&mu).unwrap(), &total, "λ={lambda:?} μ={mu:?}");
                }
            }
        }
    }

    #[test]
    fn forget_oriented_examples() {
        let plane = forget_oriented(&BordismClassQ::cp(2)).unwrap();
        assert_eq!(plane.coords(), &[rat(1)]);
        let split = forget_oriented(&BordismClassQ::monomial(&[1, 1])).unwrap();
        assert!(split.is_zero());
        let line = forget_oriented(&BordismClassQ::cp(1)).unwrap();
        assert!(line.is_zero());
        assert_eq!(line.coords().len(), 0);
    }

    #[test]
    fn forget_oriented_is_multiplicative_on_monomials() {
        for n1 in 1..=2u32 {
            for n2 in 1..=2u32 {
                for l1 in partitions(n1) {
                    for l2 in partitions(n2) {
                        let a = BordismClassQ::monomial(&l1);
                        let b = BordismClassQ::monomial(&l2);
                        let lhs = forget_oriented(&a.mul(&b)).unwrap();
                        let rhs = forget_oriented(&a)
                            .unwrap()
                            .mul(&forget_oriented(&b).unwrap());
                        assert_eq!(lhs, rhs, "{l1:?} x {l2:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn signature_matches_thom_milnor_number_in_degree_two() {
        // σ through the Hodge route equals (c₁² − 2c₂)/3 in degree two.
        for lambda in partitions(2) {
            let sigma = hodge::signature(&cp_monomial_hodge(&lambda));
            let c = chern_numbers(&lambda);
            let s2 = c.get(&[1, 1]).unwrap() - bi(2) * c.get(&[2]).unwrap();
            assert_eq!(s2, bi(3) * sigma, "monomial {lambda:?}");
        }
    }

    #[test]
    fn hir_basis_examples() {
        assert_eq!(hir_basis(0).len(), 1);
        assert_eq!(hir_basis(1).len(), 1);
        assert_eq!(hir_basis(1)[0].chi(), &[bi(1), bi(-1)]);
        assert_eq!(hir_basis(2).len(), 2);
    }

    #[test]
    fn todd_coefficients_recover_classical_values() {
        // In degree one the genus coefficient is half the first Chern
        // number.
        let a = todd_chern_coefficients(1, 0).unwrap();
        assert_eq!(a, vec![BigRational::new(bi(1), bi(2))]);
        // Degree-two coefficients against both monomials: the genus value
        // 1 on each monomial pins c₂ and c₁² weights 1/12 each.
        let a = todd_chern_coefficients(2, 0).unwrap();
        let parts = partitions(2);
        for (lambda, _) in parts.iter().zip(&a) {
            let c = chern_numbers(lambda);
            let total: BigRational = parts
                .iter()
                .zip(&a)
                .map(|(mu, w)| w * BigRational::from_integer(c.get(mu).cloned().unwrap()))
                .sum();
            assert_eq!(total, rat(1));
        }
        assert_eq!(a, vec![BigRational::new(bi(1), bi(12)); 2]);
    }
}
