//! Exact linear algebra over ℤ, ℚ and ℤ/m.
//!
//! The workhorses are the two classical normal forms under unimodular
//! transformations: the column-style Hermite normal form, which gives every
//! submodule of ℤⁿ a literal canonical basis, and the Smith normal form,
//! which decides solvability of integer and congruence systems. Modular
//! systems are lifted to integer systems (`M·x + m·k = b`) rather than
//! solved per prime, so non-prime and non-squarefree moduli need no special
//! treatment.
//!
//! All functions are pure; matrices are immutable once built.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A dense matrix of arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        if rows.iter().any(|v| v.len() != c) {
            return Err(Error::ShapeMismatch("ragged row lengths".to_string()));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} * vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows {
            return Err(Error::ShapeMismatch("hstack row counts differ".to_string()));
        }
        Ok(IntMatrix::from_fn(
            self.rows,
            self.cols + other.cols,
            |i, j| {
                if j < self.cols {
                    self.get(i, j).clone()
                } else {
                    other.get(i, j - self.cols).clone()
                }
            },
        ))
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch("vstack col counts differ".to_string()));
        }
        Ok(IntMatrix::from_fn(
            self.rows + other.rows,
            self.cols,
            |i, j| {
                if i < self.rows {
                    self.get(i, j).clone()
                } else {
                    other.get(i - self.rows, j).clone()
                }
            },
        ))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.get(r, j).clone();
            self.set(r, j, v);
        }
    }

    fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, c).clone();
            self.set(i, c, v);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(dst, j) + q * self.get(src, j);
            self.set(dst, j, v);
        }
    }

    /// col[dst] += q * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, dst) + q * self.get(i, src);
            self.set(i, dst, v);
        }
    }
}

/// Determinant by fraction-free (Bareiss) elimination. Used as an
/// independent oracle for unimodularity checks.
pub fn det(m: &IntMatrix) -> Result<BigInt> {
    if m.rows != m.cols {
        return Err(Error::ShapeMismatch("determinant of non-square".to_string()));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                a.set(i, j, v);
            }
        }
        for i in k + 1..n {
            a.set(i, k, BigInt::zero());
        }
        prev = a.get(k, k).clone();
    }
    Ok(sign * a.get(n - 1, n - 1).clone())
}

/// Smith normal form `U·M·V = D` with `U`, `V` unimodular and `D` diagonal,
/// `d_i ≥ 0`, `d_i | d_{i+1}`.
#[derive(Debug, Clone)]
pub struct SnfDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfDecomposition {
    pub fn rank(&self) -> usize {
        (0..self.d.rows.min(self.d.cols))
            .take_while(|&i| !self.d.get(i, i).is_zero())
            .count()
    }
}

/// Compute the Smith normal form. Pivots are chosen as the smallest nonzero
/// absolute value in the remaining submatrix, ties broken by lowest
/// (row, col), which keeps the computation deterministic.
pub fn smith_normal_form(m: &IntMatrix) -> SnfDecomposition {
    let (r, c) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);

    let limit = r.min(c);
    for t in 0..limit {
        'pivot: loop {
            // Smallest nonzero |entry| in the submatrix.
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    if a.get(i, j).is_zero() {
                        continue;
                    }
                    best = match best {
                        None => Some((i, j)),
                        Some((bi, bj)) => {
                            if a.get(i, j).abs() < a.get(bi, bj).abs() {
                                Some((i, j))
                            } else {
                                Some((bi, bj))
                            }
                        }
                    };
                }
            }
            let Some((pi, pj)) = best else {
                return SnfDecomposition { u, d: a, v };
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);
            if a.get(t, t).is_negative() {
                a.negate_row(t);
                u.negate_row(t);
            }

            let p = a.get(t, t).clone();
            let mut residue = false;
            for i in t + 1..r {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = a.get(i, t).div_floor(&p);
                a.add_row_multiple(i, t, &(-&q));
                u.add_row_multiple(i, t, &(-q));
                if !a.get(i, t).is_zero() {
                    residue = true;
                }
            }
            for j in t + 1..c {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = a.get(t, j).div_floor(&p);
                a.add_col_multiple(j, t, &(-&q));
                v.add_col_multiple(j, t, &(-q));
                if !a.get(t, j).is_zero() {
                    residue = true;
                }
            }
            if residue {
                continue 'pivot;
            }
            // Row and column are clear; enforce that the pivot divides the
            // whole remaining block before moving on, which yields the
            // divisibility chain.
            for i in t + 1..r {
                for j in t + 1..c {
                    if !a.get(i, j).mod_floor(&p).is_zero() {
                        a.add_row_multiple(t, i, &BigInt::one());
                        u.add_row_multiple(t, i, &BigInt::one());
                        continue 'pivot;
                    }
                }
            }
            break;
        }
    }
    SnfDecomposition { u, d: a, v }
}

/// Column-style Hermite normal form.
///
/// Column operations only; the result has pivots on strictly increasing
/// rows, positive pivots, entries left of each pivot reduced into
/// `[0, pivot)`, and zero columns dropped. Two generating sets span the
/// same submodule exactly when their Hermite forms are equal matrices.
pub fn column_hnf(m: &IntMatrix) -> IntMatrix {
    let (r, c) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut pc = 0usize;
    for row in 0..r {
        if pc >= c {
            break;
        }
        if (pc..c).all(|j| a.get(row, j).is_zero()) {
            continue;
        }
        loop {
            let mut best = None;
            for j in pc..c {
                if a.get(row, j).is_zero() {
                    continue;
                }
                best = match best {
                    None => Some(j),
                    Some(b) => {
                        if a.get(row, j).abs() < a.get(row, b).abs() {
                            Some(j)
                        } else {
                            Some(b)
                        }
                    }
                };
            }
            let Some(bj) = best else { break };
            a.swap_cols(pc, bj);
            if a.get(row, pc).is_negative() {
                a.negate_col(pc);
            }
            let p = a.get(row, pc).clone();
            let mut residue = false;
            for j in pc + 1..c {
                if a.get(row, j).is_zero() {
                    continue;
                }
                let q = a.get(row, j).div_floor(&p);
                a.add_col_multiple(j, pc, &(-q));
                if !a.get(row, j).is_zero() {
                    residue = true;
                }
            }
            if !residue {
                break;
            }
        }
        if a.get(row, pc).is_zero() {
            continue;
        }
        // Reduce entries left of the pivot into [0, pivot).
        let p = a.get(row, pc).clone();
        for j in 0..pc {
            let q = a.get(row, j).div_floor(&p);
            a.add_col_multiple(j, pc, &(-q));
        }
        pc += 1;
    }
    IntMatrix::from_fn(r, pc, |i, j| a.get(i, j).clone())
}

/// Saturated integer kernel of `m`, as a submodule of ℤ^cols.
pub fn kernel(m: &IntMatrix) -> Submodule {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    let gens: Vec<Vec<BigInt>> = (rank..m.cols).map(|j| snf.v.col(j)).collect();
    Submodule::from_generators(m.cols, &gens).expect("kernel generators have ambient length")
}

/// Cached Smith decomposition for solving many systems with one matrix.
pub struct SnfSolver {
    snf: SnfDecomposition,
    rank: usize,
    rows: usize,
    cols: usize,
}

impl SnfSolver {
    pub fn new(m: &IntMatrix) -> Self {
        let snf = smith_normal_form(m);
        let rank = snf.rank();
        SnfSolver {
            rank,
            rows: m.rows,
            cols: m.cols,
            snf,
        }
    }

    /// Particular integer solution of `M·x = b` with free coordinates set
    /// to zero, or `None` when no integer solution exists.
    pub fn solve(&self, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        if b.len() != self.rows {
            return Err(Error::ShapeMismatch(format!(
                "rhs length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let ub = self.snf.u.mul_vec(b)?;
        let mut s = vec![BigInt::zero(); self.cols];
        for (i, ubi) in ub.iter().enumerate() {
            if i < self.rank {
                let d = self.snf.d.get(i, i);
                let (q, r) = ubi.div_mod_floor(d);
                if !r.is_zero() {
                    return Ok(None);
                }
                s[i] = q;
            } else if !ubi.is_zero() {
                return Ok(None);
            }
        }
        Ok(Some(self.snf.v.mul_vec(&s)?))
    }
}

/// Solve `M·x = b` over ℤ.
pub fn solve_integer(m: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    SnfSolver::new(m).solve(b)
}

/// Solve `M·x ≡ b (mod modulus)` by lifting to the integer system
/// `[M | modulus·I]`. The returned coordinates are reduced into
/// `[0, modulus)`, which makes the answer canonical given the fixed pivot
/// strategy of the Smith form.
pub fn solve_mod(m: &IntMatrix, b: &[BigInt], modulus: &BigInt) -> Result<Option<Vec<BigInt>>> {
    if modulus < &BigInt::from(2) {
        return Err(Error::Input(format!("modulus {modulus} must be at least 2")));
    }
    let scaled = IntMatrix::from_fn(m.rows, m.rows, |i, j| {
        if i == j {
            modulus.clone()
        } else {
            BigInt::zero()
        }
    });
    let aug = m.hstack(&scaled)?;
    Ok(solve_integer(&aug, b)?.map(|w| {
        w[..m.cols]
            .iter()
            .map(|x| x.mod_floor(modulus))
            .collect()
    }))
}

/// Solve `M·x = b` over ℚ by exact Gaussian elimination. Returns the
/// particular solution with free variables set to zero.
pub fn solve_rational(
    m: &[Vec<BigRational>],
    b: &[BigRational],
) -> Result<Option<Vec<BigRational>>> {
    let rows = m.len();
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    if m.iter().any(|r| r.len() != cols) || b.len() != rows {
        return Err(Error::ShapeMismatch("rational system shapes".to_string()));
    }
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut rhs = b.to_vec();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0usize;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        rhs.swap(row, p);
        let inv = a[row][col].clone();
        for j in 0..cols {
            a[row][j] = &a[row][j] / &inv;
        }
        rhs[row] = &rhs[row] / &inv;
        for i in 0..rows {
            if i == row || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for j in 0..cols {
                a[i][j] = &a[i][j] - &(&f * &a[row][j]);
            }
            rhs[i] = &rhs[i] - &(&f * &rhs[row]);
        }
        pivots.push((row, col));
        row += 1;
        if row == rows {
            break;
        }
    }
    for i in row..rows {
        if !rhs[i].is_zero() {
            return Ok(None);
        }
    }
    let mut x = vec![BigRational::zero(); cols];
    for (r, c) in pivots {
        x[c] = rhs[r].clone();
    }
    Ok(Some(x))
}

/// A finitely generated submodule of ℤⁿ, stored by its canonical Hermite
/// basis (columns), so equality is a literal matrix comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Submodule {
    ambient: usize,
    basis: IntMatrix,
}

impl Submodule {
    pub fn from_generators(ambient: usize, gens: &[Vec<BigInt>]) -> Result<Self> {
        for g in gens {
            if g.len() != ambient {
                return Err(Error::AmbientMismatch {
                    left: ambient,
                    right: g.len(),
                });
            }
        }
        let m = IntMatrix::from_fn(ambient, gens.len(), |i, j| gens[j][i].clone());
        Ok(Submodule {
            ambient,
            basis: column_hnf(&m),
        })
    }

    pub fn zero(ambient: usize) -> Self {
        Submodule {
            ambient,
            basis: IntMatrix::zero(ambient, 0),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.cols
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<BigInt>> {
        (0..self.basis.cols).map(|j| self.basis.col(j)).collect()
    }

    fn check_ambient(&self, other: &Submodule) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    /// Decide membership; on success return the witness coefficients over
    /// the Hermite basis. The staircase shape makes this a back
    /// substitution.
    pub fn membership(&self, v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        if v.len() != self.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: v.len(),
            });
        }
        let mut rem = v.to_vec();
        let mut coeffs = vec![BigInt::zero(); self.basis.cols];
        for j in 0..self.basis.cols {
            let pivot_row = (0..self.ambient)
                .find(|&i| !self.basis.get(i, j).is_zero())
                .expect("canonical basis has no zero columns");
            // Everything above the pivot row must already be consumed.
            let p = self.basis.get(pivot_row, j);
            let (q, r) = rem[pivot_row].div_mod_floor(p);
            if !r.is_zero() {
                return Ok(None);
            }
            for i in 0..self.ambient {
                rem[i] = &rem[i] - &(&q * self.basis.get(i, j));
            }
            coeffs[j] = q;
        }
        if rem.iter().all(|x| x.is_zero()) {
            Ok(Some(coeffs))
        } else {
            Ok(None)
        }
    }

    pub fn contains_vector(&self, v: &[BigInt]) -> Result<bool> {
        Ok(self.membership(v)?.is_some())
    }

    /// Equality of submodules: the Hermite basis is canonical, so this is a
    /// plain comparison.
    pub fn equals(&self, other: &Submodule) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.basis == other.basis)
    }

    pub fn contains(&self, other: &Submodule) -> Result<bool> {
        self.check_ambient(other)?;
        for v in other.basis_vectors() {
            if !self.contains_vector(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        self.check_ambient(other)?;
        let mut gens = self.basis_vectors();
        gens.extend(other.basis_vectors());
        Submodule::from_generators(self.ambient, &gens)
    }

    /// Intersection via the kernel of `[A | B]`: a relation
    /// `A·x = -B·y` identifies a common element `A·x`.
    pub fn intersect(&self, other: &Submodule) -> Result<Submodule> {
        self.check_ambient(other)?;
        if self.rank() == 0 || other.rank() == 0 {
            return Ok(Submodule::zero(self.ambient));
        }
        let joint = self.basis.hstack(&other.basis)?;
        let ker = kernel(&joint);
        let gens: Vec<Vec<BigInt>> = ker
            .basis_vectors()
            .into_iter()
            .map(|k| {
                let x = &k[..self.rank()];
                self.basis.mul_vec(x).expect("shape by construction")
            })
            .collect();
        Submodule::from_generators(self.ambient, &gens)
    }
}

/// Spec-shaped dispatcher over the three scalar domains.
pub fn solve_linear(
    m: &IntMatrix,
    b: &[BigInt],
    domain: &crate::exactring::ScalarDomain,
) -> Result<Option<Vec<crate::exactring::Scalar>>> {
    use crate::exactring::{Scalar, ScalarDomain};
    match domain {
        ScalarDomain::Int => Ok(solve_integer(m, b)?
            .map(|v| v.into_iter().map(Scalar::Int).collect())),
        ScalarDomain::Mod(q) => Ok(solve_mod(m, b, q)?
            .map(|v| v.into_iter().map(Scalar::Int).collect())),
        ScalarDomain::Rat => {
            let mq: Vec<Vec<BigRational>> = (0..m.rows())
                .map(|i| {
                    (0..m.cols())
                        .map(|j| BigRational::from_integer(m.get(i, j).clone()))
                        .collect()
                })
                .collect();
            let bq: Vec<BigRational> = b
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect();
            Ok(solve_rational(&mq, &bq)?
                .map(|v| v.into_iter().map(Scalar::Rat).collect()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| bi(v)).collect()).collect())
            .unwrap()
    }

    fn assert_snf_postconditions(m: &IntMatrix, snf: &SnfDecomposition) {
        // U·M·V = D
        let umv = snf.u.mul(m).unwrap().mul(&snf.v).unwrap();
        assert_eq!(umv, snf.d);
        // unimodularity, by the independent Bareiss determinant
        assert_eq!(det(&snf.u).unwrap().abs(), bi(1));
        assert_eq!(det(&snf.v).unwrap().abs(), bi(1));
        // diagonal, non-negative, divisibility chain
        for i in 0..snf.d.rows() {
            for j in 0..snf.d.cols() {
                if i != j {
                    assert!(snf.d.get(i, j).is_zero());
                }
            }
        }
        let n = snf.d.rows().min(snf.d.cols());
        for i in 0..n {
            assert!(!snf.d.get(i, i).is_negative());
            if i + 1 < n && !snf.d.get(i, i).is_zero() {
                let next = snf.d.get(i + 1, i + 1);
                if !next.is_zero() {
                    assert!(next.mod_floor(snf.d.get(i, i)).is_zero());
                }
            }
        }
    }

    #[test]
    fn snf_identity() {
        let m = mat(&[&[1, 0], &[0, 1]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.d, m);
        assert_snf_postconditions(&m, &snf);
    }

    #[test]
    fn snf_two_by_two() {
        // d1 = gcd of entries = 2, d1*d2 = |det| = 8.
        let m = mat(&[&[2, 4], &[6, 8]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.d, mat(&[&[2, 0], &[0, 4]]));
        assert_snf_postconditions(&m, &snf);
    }

    #[test]
    fn snf_zero_matrix() {
        let m = IntMatrix::zero(2, 3);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.d, IntMatrix::zero(2, 3));
        assert_snf_postconditions(&m, &snf);
    }

    #[test]
    fn snf_randomized_postconditions() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..60 {
            let r = rng.gen_range(1..=12);
            let c = rng.gen_range(1..=12);
            let m = IntMatrix::from_fn(r, c, |_, _| bi(rng.gen_range(-10..=10)));
            let snf = smith_normal_form(&m);
            assert_snf_postconditions(&m, &snf);
        }
    }

    #[test]
    fn solve_parity_obstruction() {
        let m = mat(&[&[2]]);
        assert_eq!(solve_integer(&m, &[bi(1)]).unwrap(), None);
    }

    #[test]
    fn solve_mod_three() {
        let m = mat(&[&[2]]);
        let x = solve_mod(&m, &[bi(1)], &bi(3)).unwrap().unwrap();
        assert_eq!(x, vec![bi(2)]);
    }

    #[test]
    fn solve_identity() {
        let m = IntMatrix::identity(3);
        let b = vec![bi(5), bi(-7), bi(0)];
        assert_eq!(solve_integer(&m, &b).unwrap().unwrap(), b);
    }

    #[test]
    fn solve_results_are_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let r = rng.gen_range(1..=6);
            let c = rng.gen_range(1..=6);
            let m = IntMatrix::from_fn(r, c, |_, _| bi(rng.gen_range(-6..=6)));
            let b: Vec<BigInt> = (0..r).map(|_| bi(rng.gen_range(-6..=6))).collect();
            if let Some(x) = solve_integer(&m, &b).unwrap() {
                assert_eq!(m.mul_vec(&x).unwrap(), b);
            }
            let modulus = bi(rng.gen_range(2..=9));
            match solve_mod(&m, &b, &modulus).unwrap() {
                Some(x) => {
                    let mx = m.mul_vec(&x).unwrap();
                    for i in 0..r {
                        assert!((&mx[i] - &b[i]).mod_floor(&modulus).is_zero());
                    }
                    for xi in &x {
                        assert!(!xi.is_negative() && xi < &modulus);
                    }
                }
                None if c <= 3 => {
                    // Exhaustive oracle: no residue vector solves the system.
                    let mu = u64::try_from(modulus.clone()).unwrap();
                    let total = mu.pow(c as u32);
                    for code in 0..total {
                        let mut x = Vec::with_capacity(c);
                        let mut cc = code;
                        for _ in 0..c {
                            x.push(bi((cc % mu) as i64));
                            cc /= mu;
                        }
                        let mx = m.mul_vec(&x).unwrap();
                        assert!(
                            (0..r).any(|i| !(&mx[i] - &b[i]).mod_floor(&modulus).is_zero()),
                            "solver missed a solution"
                        );
                    }
                }
                None => {}
            }
        }
    }

    #[test]
    fn domain_dispatcher() {
        use crate::exactring::{Scalar, ScalarDomain};
        let m = mat(&[&[2]]);
        let b = [bi(1)];
        assert_eq!(solve_linear(&m, &b, &ScalarDomain::Int).unwrap(), None);
        assert_eq!(
            solve_linear(&m, &b, &ScalarDomain::modulus(3)).unwrap(),
            Some(vec![Scalar::Int(bi(2))])
        );
        match solve_linear(&m, &b, &ScalarDomain::Rat).unwrap() {
            Some(x) => assert_eq!(x, vec![Scalar::rat(1, 2)]),
            None => panic!("rational system is solvable"),
        }
    }

    #[test]
    fn membership_with_witness() {
        let sub = Submodule::from_generators(2, &[vec![bi(1), bi(0)]]).unwrap();
        let w = sub.membership(&[bi(2), bi(0)]).unwrap().unwrap();
        assert_eq!(w, vec![bi(2)]);
        assert!(sub.membership(&[bi(0), bi(1)]).unwrap().is_none());
    }

    #[test]
    fn coprime_generators_span_unit() {
        let a = Submodule::from_generators(2, &[vec![bi(2), bi(0)], vec![bi(3), bi(0)]]).unwrap();
        let b = Submodule::from_generators(2, &[vec![bi(1), bi(0)]]).unwrap();
        assert!(a.equals(&b).unwrap());
    }

    #[test]
    fn intersect_disjoint_axes() {
        let a = Submodule::from_generators(2, &[vec![bi(1), bi(0)]]).unwrap();
        let b = Submodule::from_generators(2, &[vec![bi(0), bi(1)]]).unwrap();
        let i = a.intersect(&b).unwrap();
        assert_eq!(i.rank(), 0);
    }

    #[test]
    fn hnf_spans_generators_both_ways() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let ambient = rng.gen_range(1..=5);
            let ngens = rng.gen_range(0..=4);
            let gens: Vec<Vec<BigInt>> = (0..ngens)
                .map(|_| (0..ambient).map(|_| bi(rng.gen_range(-5..=5))).collect())
                .collect();
            let sub = Submodule::from_generators(ambient, &gens).unwrap();
            for g in &gens {
                assert!(sub.contains_vector(g).unwrap());
            }
            // Each Hermite basis vector must be an integer combination of
            // the generators: check by solving against the generator matrix.
            let gm = IntMatrix::from_fn(ambient, ngens, |i, j| gens[j][i].clone());
            for v in sub.basis_vectors() {
                assert!(solve_integer(&gm, &v).unwrap().is_some());
            }
        }
    }

    #[test]
    fn submodule_lattice_laws_against_box_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..20 {
            let ambient = 4;
            let rand_sub = |rng: &mut ChaCha8Rng| {
                let ngens = rng.gen_range(1..=3);
                let gens: Vec<Vec<BigInt>> = (0..ngens)
                    .map(|_| (0..ambient).map(|_| bi(rng.gen_range(-2..=2))).collect())
                    .collect();
                Submodule::from_generators(ambient, &gens).unwrap()
            };
            let a = rand_sub(&mut rng);
            let b = rand_sub(&mut rng);
            let inter = a.intersect(&b).unwrap();
            let sum = a.sum(&b).unwrap();

            // Box oracle: membership in the computed intersection must
            // agree with simultaneous membership, for every small vector.
            for mask in 0..5_i64.pow(4) {
                let mut v = Vec::with_capacity(4);
                let mut m = mask;
                for _ in 0..4 {
                    v.push(bi((m % 5) - 2));
                    m /= 5;
                }
                let in_both =
                    a.contains_vector(&v).unwrap() && b.contains_vector(&v).unwrap();
                assert_eq!(inter.contains_vector(&v).unwrap(), in_both);
                if a.contains_vector(&v).unwrap() || b.contains_vector(&v).unwrap() {
                    assert!(sum.contains_vector(&v).unwrap());
                }
            }

            // Modular law with C ⊆ A: A ∩ (B + C) = (A ∩ B) + C.
            let c = Submodule::from_generators(
                ambient,
                &a.basis_vectors().into_iter().take(1).collect::<Vec<_>>(),
            )
            .unwrap();
            let lhs = a.intersect(&b.sum(&c).unwrap()).unwrap();
            let rhs = a.intersect(&b).unwrap().sum(&c).unwrap();
            assert!(lhs.equals(&rhs).unwrap());
        }
    }

    #[test]
    fn rational_solver_finds_exact_solutions() {
        let two = BigRational::from_integer(bi(2));
        let one = BigRational::from_integer(bi(1));
        let m = vec![vec![two.clone()]];
        let x = solve_rational(&m, std::slice::from_ref(&one)).unwrap().unwrap();
        assert_eq!(x[0], &one / &two);
        // Inconsistent system.
        let m = vec![vec![one.clone()], vec![one.clone()]];
        assert_eq!(
            solve_rational(&m, &[one.clone(), two.clone()]).unwrap(),
            None
        );
    }
}
