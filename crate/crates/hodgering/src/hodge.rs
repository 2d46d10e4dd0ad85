//! The Hodge ring.
//!
//! Degree n holds the integer tables `h^{p,q}` (0 ≤ p,q ≤ n) satisfying the
//! Kähler symmetries `h^{q,p} = h^{p,q} = h^{n-p,n-q}`. The cells with
//! 0 ≤ q ≤ p and p+q ≤ n form a fundamental domain for those symmetries,
//! so degree n is a free ℤ-module of rank ⌊(n+2)/2⌋·⌊(n+3)/2⌋ and the
//! canonical basis element of a cell is the symmetrization of the single
//! monomial `x^p y^q z^n`. Coordinates over this basis are literally the
//! fundamental-domain Hodge numbers.
//!
//! As a ring (multiplication = table convolution, the Cartesian product of
//! manifolds) the whole thing is a polynomial ring on two degree-one
//! generators and one degree-two generator: either `A = (1+xy)z`,
//! `B = (x+y)z`, `C = xy·z²`, or the geometric system E (an elliptic
//! curve), L (the projective line), and any degree-two element S of
//! signature ±1. Both decompositions are computed by solving the integer
//! linear system whose columns are the monomial expansions; the structure
//! theory guarantees unique integer solvability, which the solver verifies
//! for free.
//!
//! Genus homomorphisms are substitutions: `x ↦ -1` (the χ_y-genus, landing
//! in the ring of constrained polynomials handled by [`HirPolynomial`]),
//! additionally `y ↦ 1` (the signature), `x ↦ 0` (the birational genus
//! recording the `h^{0,q}`), and `x,y ↦ t`, `z ↦ z²` (Betti
//! specialization). Graded pieces of the principal ideals generated by C,
//! by an elliptic curve, and by the degree-two element with zero Betti
//! numbers and signature 4 are returned as canonical Hermite bases.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::cache::Cache;
use crate::error::{Error, Result};
use crate::exactring::{vars, Monomial, Polynomial, Scalar, ScalarDomain};
use crate::intlinalg::{IntMatrix, SnfSolver, Submodule};
use crate::jsonnum::{bigint_from_json, bigint_to_json};
use crate::poincare::PoincarePolynomial;

/// Rank of degree n: ⌊(n+2)/2⌋·⌊(n+3)/2⌋.
pub fn hodge_rank(n: u32) -> usize {
    (((n + 2) / 2) * ((n + 3) / 2)) as usize
}

/// Fundamental-domain cells (p,q) with q ≤ p and p+q ≤ n, in
/// lexicographic order.
pub fn fundamental_cells(n: u32) -> Vec<(u32, u32)> {
    let mut cells = Vec::with_capacity(hodge_rank(n));
    for p in 0..=n {
        for q in 0..=p.min(n - p) {
            cells.push((p, q));
        }
    }
    cells
}

/// The symmetry orbit of a cell.
fn orbit(n: u32, p: u32, q: u32) -> Vec<(u32, u32)> {
    let mut cells = vec![(p, q), (q, p), (n - p, n - q), (n - q, n - p)];
    cells.sort_unstable();
    cells.dedup();
    cells
}

/// The fundamental-domain representative of a cell's orbit.
pub fn fundamental_representative(n: u32, p: u32, q: u32) -> (u32, u32) {
    let (a, b) = if q <= p { (p, q) } else { (q, p) };
    if a + b <= n {
        (a, b)
    } else {
        (n - b, n - a)
    }
}

/// A validated element of the degree-n piece of the Hodge ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgePolynomial {
    dimension: u32,
    // (n+1) x (n+1) table, h^{p,q} at index p*(n+1)+q.
    table: Vec<BigInt>,
}

impl HodgePolynomial {
    pub fn zero(dimension: u32) -> Self {
        let w = dimension as usize + 1;
        HodgePolynomial {
            dimension,
            table: vec![BigInt::zero(); w * w],
        }
    }

    pub fn point() -> Self {
        let mut h = Self::zero(0);
        h.set(0, 0, BigInt::one());
        h
    }

    /// The diagonal diamond of complex projective k-space.
    pub fn cp(k: u32) -> Self {
        let mut h = Self::zero(k);
        for p in 0..=k {
            h.set(p, p, BigInt::one());
        }
        h
    }

    pub fn line() -> Self {
        Self::cp(1)
    }

    /// The four-ones diamond of an elliptic curve.
    pub fn elliptic() -> Self {
        let mut h = Self::zero(1);
        for p in 0..=1 {
            for q in 0..=1 {
                h.set(p, q, BigInt::one());
            }
        }
        h
    }

    fn set(&mut self, p: u32, q: u32, v: BigInt) {
        let w = self.dimension as usize + 1;
        self.table[p as usize * w + q as usize] = v;
    }

    pub fn entry(&self, p: u32, q: u32) -> &BigInt {
        let w = self.dimension as usize + 1;
        &self.table[p as usize * w + q as usize]
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|v| v.is_zero())
    }

    /// Validate a full table given as sparse entries (missing cells are
    /// zero). Both symmetries are checked; a violation names the pair.
    pub fn from_full_entries(n: u32, entries: &[((u32, u32), BigInt)]) -> Result<Self> {
        let mut h = Self::zero(n);
        let mut seen = BTreeMap::new();
        for ((p, q), v) in entries {
            if *p > n || *q > n {
                return Err(Error::Input(format!(
                    "cell ({p},{q}) outside the dimension-{n} table"
                )));
            }
            if seen.insert((*p, *q), ()).is_some() {
                return Err(Error::Input(format!("duplicate entry for cell ({p},{q})")));
            }
            h.set(*p, *q, v.clone());
        }
        for p in 0..=n {
            for q in 0..=n {
                if h.entry(p, q) != h.entry(q, p) {
                    return Err(Error::Validation(format!(
                        "conjugation symmetry violated: h^{{{p},{q}}}={} but h^{{{q},{p}}}={}",
                        h.entry(p, q),
                        h.entry(q, p)
                    )));
                }
                if h.entry(p, q) != h.entry(n - p, n - q) {
                    return Err(Error::Validation(format!(
                        "duality symmetry violated: h^{{{p},{q}}}={} but h^{{{},{}}}={}",
                        h.entry(p, q),
                        n - p,
                        n - q,
                        h.entry(n - p, n - q)
                    )));
                }
            }
        }
        Ok(h)
    }

    /// Build from fundamental-domain data, reflecting outward. Entries on
    /// non-fundamental cells are folded onto their orbit representative;
    /// conflicting duplicates are rejected.
    pub fn from_fundamental_entries(n: u32, entries: &[((u32, u32), BigInt)]) -> Result<Self> {
        let mut fd: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for ((p, q), v) in entries {
            if *p > n || *q > n {
                return Err(Error::Input(format!(
                    "cell ({p},{q}) outside the dimension-{n} table"
                )));
            }
            let rep = fundamental_representative(n, *p, *q);
            match fd.get(&rep) {
                Some(old) if old != v => {
                    return Err(Error::Input(format!(
                        "conflicting values {old} and {v} on the orbit of cell ({p},{q})"
                    )))
                }
                _ => {
                    fd.insert(rep, v.clone());
                }
            }
        }
        let mut h = Self::zero(n);
        for ((p, q), v) in fd {
            for (a, b) in orbit(n, p, q) {
                h.set(a, b, v.clone());
            }
        }
        Ok(h)
    }

    /// Coordinates over the canonical basis: the fundamental-domain
    /// entries in cell order.
    pub fn coords(&self) -> Vec<BigInt> {
        fundamental_cells(self.dimension)
            .into_iter()
            .map(|(p, q)| self.entry(p, q).clone())
            .collect()
    }

    pub fn from_coords(n: u32, coords: &[BigInt]) -> Result<Self> {
        let cells = fundamental_cells(n);
        if coords.len() != cells.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} coordinates for rank {}",
                coords.len(),
                cells.len()
            )));
        }
        let entries: Vec<((u32, u32), BigInt)> = cells
            .into_iter()
            .zip(coords.iter().cloned())
            .collect();
        Self::from_fundamental_entries(n, &entries)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dimension != other.dimension {
            return Err(Error::Input(format!(
                "cannot add dimensions {} and {}",
                self.dimension, other.dimension
            )));
        }
        let mut h = Self::zero(self.dimension);
        for (i, v) in h.table.iter_mut().enumerate() {
            *v = &self.table[i] + &other.table[i];
        }
        Ok(h)
    }

    pub fn neg(&self) -> Self {
        HodgePolynomial {
            dimension: self.dimension,
            table: self.table.iter().map(|v| -v).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, s: &BigInt) -> Self {
        HodgePolynomial {
            dimension: self.dimension,
            table: self.table.iter().map(|v| v * s).collect(),
        }
    }

    /// Cartesian-product multiplication: table convolution.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.dimension + other.dimension;
        let mut h = Self::zero(n);
        for p1 in 0..=self.dimension {
            for q1 in 0..=self.dimension {
                let a = self.entry(p1, q1);
                if a.is_zero() {
                    continue;
                }
                for p2 in 0..=other.dimension {
                    for q2 in 0..=other.dimension {
                        let b = other.entry(p2, q2);
                        if b.is_zero() {
                            continue;
                        }
                        let cur = h.entry(p1 + p2, q1 + q2) + a * b;
                        h.set(p1 + p2, q1 + q2, cur);
                    }
                }
            }
        }
        h
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::point();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// The augmented polynomial `Σ h^{p,q} x^p y^q · z^n`.
    pub fn to_poly(&self) -> Polynomial {
        let n = self.dimension;
        let mut terms = Vec::new();
        for p in 0..=n {
            for q in 0..=n {
                let v = self.entry(p, q);
                if !v.is_zero() {
                    terms.push((
                        Monomial::from_exps(&[(0, p), (1, q), (2, n)]),
                        Scalar::Int(v.clone()),
                    ));
                }
            }
        }
        Polynomial::from_terms(vars::xyz(), ScalarDomain::Int, terms)
            .expect("table terms are well-formed")
    }

    /// Read a homogeneous element of ℤ[x,y,z] back into a table, checking
    /// the symmetries.
    pub fn from_poly(p: &Polynomial) -> Result<Self> {
        if **p.vars() != *vars::xyz() {
            return Err(Error::Input("expected a polynomial in x, y, z".to_string()));
        }
        let n = p
            .homogeneous_degree()
            .ok_or_else(|| Error::Input("expected a nonzero homogeneous polynomial".to_string()))?;
        let mut entries = Vec::new();
        for (m, s) in p.terms() {
            let (xp, yq, zn) = (m.exp(0), m.exp(1), m.exp(2));
            if zn != n || xp > n || yq > n {
                return Err(Error::Input(format!(
                    "term x^{xp} y^{yq} z^{zn} does not belong to degree {n}"
                )));
            }
            entries.push(((xp, yq), s.as_int().expect("integer domain").clone()));
        }
        Self::from_full_entries(n, &entries)
    }

    pub fn to_json(&self, fundamental: bool) -> Value {
        let mut cells = Vec::new();
        if fundamental {
            for (p, q) in fundamental_cells(self.dimension) {
                let v = self.entry(p, q);
                if !v.is_zero() {
                    cells.push(json!([p, q, bigint_to_json(v)]));
                }
            }
        } else {
            for p in 0..=self.dimension {
                for q in 0..=self.dimension {
                    let v = self.entry(p, q);
                    if !v.is_zero() {
                        cells.push(json!([p, q, bigint_to_json(v)]));
                    }
                }
            }
        }
        json!({
            "dimension": self.dimension,
            "hodge": cells,
            "domain": if fundamental { "fundamental" } else { "full" },
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let dimension = v
            .get("dimension")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Input("missing dimension".to_string()))? as u32;
        let raw = v
            .get("hodge")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Input("missing hodge entries".to_string()))?;
        let mut entries = Vec::new();
        for item in raw {
            let triple = item
                .as_array()
                .filter(|a| a.len() == 3)
                .ok_or_else(|| Error::Input("hodge entries must be [p, q, value]".to_string()))?;
            let p = triple[0]
                .as_u64()
                .ok_or_else(|| Error::Input("p must be a non-negative integer".to_string()))?
                as u32;
            let q = triple[1]
                .as_u64()
                .ok_or_else(|| Error::Input("q must be a non-negative integer".to_string()))?
                as u32;
            entries.push(((p, q), bigint_from_json(&triple[2])?));
        }
        match v.get("domain").and_then(Value::as_str).unwrap_or("full") {
            "full" => Self::from_full_entries(dimension, &entries),
            "fundamental" => Self::from_fundamental_entries(dimension, &entries),
            other => Err(Error::Input(format!(
                "domain must be \"full\" or \"fundamental\", not {other:?}"
            ))),
        }
    }
}

static HODGE_BASIS: Cache<u32, Vec<HodgePolynomial>> = Cache::new();

/// The canonical module basis of degree n: one symmetrized monomial per
/// fundamental-domain cell.
pub fn hodge_basis(n: u32) -> Arc<Vec<HodgePolynomial>> {
    HODGE_BASIS.get_or_insert(n, || {
        fundamental_cells(n)
            .into_iter()
            .map(|(p, q)| {
                let mut h = HodgePolynomial::zero(n);
                for (a, b) in orbit(n, p, q) {
                    h.set(a, b, BigInt::one());
                }
                h
            })
            .collect()
    })
}

// ---------------------------------------------------------------------
// The constrained target of the χ_y-genus.
// ---------------------------------------------------------------------

/// Rank of the degree-n piece: ⌊(n+2)/2⌋.
pub fn hir_rank(n: u32) -> usize {
    ((n + 2) / 2) as usize
}

/// A polynomial `(χ_0 + χ_1 y + … + χ_n y^n)·z^n` with
/// `χ_p = (−1)^n χ_{n−p}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HirPolynomial {
    dimension: u32,
    chi: Vec<BigInt>,
}

impl HirPolynomial {
    pub fn new(dimension: u32, chi: Vec<BigInt>) -> Result<Self> {
        let n = dimension as usize;
        if chi.len() != n + 1 {
            return Err(Error::Validation(format!(
                "expected {} coefficients for dimension {}, got {}",
                n + 1,
                dimension,
                chi.len()
            )));
        }
        let sign = if dimension.is_multiple_of(2) { 1 } else { -1 };
        for p in 0..=n / 2 {
            let mirrored = BigInt::from(sign) * &chi[n - p];
            if chi[p] != mirrored {
                return Err(Error::Validation(format!(
                    "coefficient constraint violated at index {p}: χ_{p}={} vs (−1)^{dimension}·χ_{}={}",
                    chi[p],
                    n - p,
                    mirrored
                )));
            }
        }
        Ok(HirPolynomial { dimension, chi })
    }

    pub fn zero(dimension: u32) -> Self {
        HirPolynomial {
            dimension,
            chi: vec![BigInt::zero(); dimension as usize + 1],
        }
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn chi(&self) -> &[BigInt] {
        &self.chi
    }

    pub fn is_zero(&self) -> bool {
        self.chi.iter().all(|v| v.is_zero())
    }

    /// Coordinates: the unconstrained coefficients χ_0 … χ_⌊n/2⌋.
    pub fn coords(&self) -> Vec<BigInt> {
        self.chi[..hir_rank(self.dimension)].to_vec()
    }

    pub fn from_coords(dimension: u32, coords: &[BigInt]) -> Result<Self> {
        if coords.len() != hir_rank(dimension) {
            return Err(Error::ShapeMismatch(format!(
                "{} coordinates for rank {}",
                coords.len(),
                hir_rank(dimension)
            )));
        }
        let n = dimension as usize;
        let sign = if dimension.is_multiple_of(2) { 1 } else { -1 };
        let mut chi = vec![BigInt::zero(); n + 1];
        for (p, c) in coords.iter().enumerate() {
            chi[p] = c.clone();
            chi[n - p] = BigInt::from(sign) * c;
        }
        HirPolynomial::new(dimension, chi)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.dimension + other.dimension;
        let mut chi = vec![BigInt::zero(); n as usize + 1];
        for (i, a) in self.chi.iter().enumerate() {
            for (j, b) in other.chi.iter().enumerate() {
                chi[i + j] += a * b;
            }
        }
        HirPolynomial { dimension: n, chi }
    }

    pub fn to_poly(&self) -> Polynomial {
        let terms = self
            .chi
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(p, v)| {
                (
                    Monomial::from_exps(&[(0, p as u32), (1, self.dimension)]),
                    Scalar::Int(v.clone()),
                )
            })
            .collect();
        Polynomial::from_terms(vars::yz(), ScalarDomain::Int, terms)
            .expect("chi terms are well-formed")
    }
}

/// The canonical basis of the degree-n piece.
pub fn hir_basis(n: u32) -> Vec<HirPolynomial> {
    (0..hir_rank(n))
        .map(|p| {
            let mut coords = vec![BigInt::zero(); hir_rank(n)];
            coords[p] = BigInt::one();
            HirPolynomial::from_coords(n, &coords).expect("unit coordinates")
        })
        .collect()
}

// ---------------------------------------------------------------------
// Genus homomorphisms, implemented as substitutions.
// ---------------------------------------------------------------------

fn constant(target: &Arc<crate::exactring::VarSet>, v: i64) -> Polynomial {
    Polynomial::constant(target.clone(), ScalarDomain::Int, Scalar::int(v))
        .expect("integer constant")
}

fn variable(target: &Arc<crate::exactring::VarSet>, idx: usize) -> Polynomial {
    Polynomial::variable(target.clone(), ScalarDomain::Int, idx).expect("variable")
}

/// The χ_y-genus: substitute x ↦ −1.
pub fn chi(h: &HodgePolynomial) -> HirPolynomial {
    if h.is_zero() {
        return HirPolynomial::zero(h.dimension());
    }
    let target = vars::yz();
    let assign = BTreeMap::from([
        ("x".to_string(), constant(&target, -1)),
        ("y".to_string(), variable(&target, 0)),
        ("z".to_string(), variable(&target, 1)),
    ]);
    let img = h
        .to_poly()
        .substitute(&target, &assign)
        .expect("total assignment");
    let n = h.dimension();
    let mut coeffs = vec![BigInt::zero(); n as usize + 1];
    for (m, s) in img.terms() {
        coeffs[m.exp(0) as usize] = s.as_int().expect("integer domain").clone();
    }
    HirPolynomial::new(n, coeffs).expect("χ image satisfies the mirror constraint")
}

/// The signature: substitute x ↦ −1, y ↦ 1; the value is the single
/// coefficient of the image.
pub fn signature(h: &HodgePolynomial) -> BigInt {
    let target = vars::z_only();
    let assign = BTreeMap::from([
        ("x".to_string(), constant(&target, -1)),
        ("y".to_string(), constant(&target, 1)),
        ("z".to_string(), variable(&target, 0)),
    ]);
    let img = h
        .to_poly()
        .substitute(&target, &assign)
        .expect("total assignment");
    img.coeff(&Monomial::from_exps(&[(0, h.dimension())]))
        .as_int()
        .expect("integer domain")
        .clone()
}

/// The birational genus: substitute x ↦ 0, keeping `(Σ h^{0,q} y^q)·z^n`.
pub fn b_genus(h: &HodgePolynomial) -> Polynomial {
    let target = vars::yz();
    let assign = BTreeMap::from([
        ("x".to_string(), constant(&target, 0)),
        ("y".to_string(), variable(&target, 0)),
        ("z".to_string(), variable(&target, 1)),
    ]);
    h.to_poly()
        .substitute(&target, &assign)
        .expect("total assignment")
}

/// The coefficients `h^{0,0} … h^{0,n}` of the birational genus.
pub fn b_coords(h: &HodgePolynomial) -> Vec<BigInt> {
    (0..=h.dimension()).map(|q| h.entry(0, q).clone()).collect()
}

/// Betti specialization: substitute x, y ↦ t and z ↦ z², doubling the
/// degree.
pub fn betti_specialization(h: &HodgePolynomial) -> PoincarePolynomial {
    let target = vars::tz();
    let t = variable(&target, 0);
    let z = variable(&target, 1);
    let assign = BTreeMap::from([
        ("x".to_string(), t.clone()),
        ("y".to_string(), t),
        ("z".to_string(), (&z * &z)),
    ]);
    let img = h
        .to_poly()
        .substitute(&target, &assign)
        .expect("total assignment");
    if img.is_zero() {
        return PoincarePolynomial::zero(2 * h.dimension());
    }
    PoincarePolynomial::from_poly(&img).expect("specialization satisfies duality")
}

// ---------------------------------------------------------------------
// Generator decompositions.
// ---------------------------------------------------------------------

/// Exponent triples (i, j, k) with i + j + 2k = n, for the two
/// one-one-two-graded generator systems.
pub fn graded_monomial_exponents(n: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for k in 0..=n / 2 {
        let rest = n - 2 * k;
        for i in (0..=rest).rev() {
            out.push((i, rest - i, k));
        }
    }
    out
}

fn generator_a() -> HodgePolynomial {
    // (1 + xy) z
    HodgePolynomial::from_full_entries(
        1,
        &[((0, 0), BigInt::one()), ((1, 1), BigInt::one())],
    )
    .expect("generator table")
}

fn generator_b() -> HodgePolynomial {
    // (x + y) z
    HodgePolynomial::from_full_entries(
        1,
        &[((1, 0), BigInt::one()), ((0, 1), BigInt::one())],
    )
    .expect("generator table")
}

fn generator_c() -> HodgePolynomial {
    // xy z²
    HodgePolynomial::from_full_entries(2, &[((1, 1), BigInt::one())]).expect("generator table")
}

fn monomial_expansion(gens: [&HodgePolynomial; 3], (i, j, k): (u32, u32, u32)) -> HodgePolynomial {
    gens[0].pow(i).mul(&gens[1].pow(j)).mul(&gens[2].pow(k))
}

/// Expand a polynomial in A, B, C to its Hodge table.
pub fn expand_abc(q: &Polynomial) -> Result<HodgePolynomial> {
    expand_in_generators(q, &vars::abc(), [&generator_a(), &generator_b(), &generator_c()])
}

fn expand_in_generators(
    q: &Polynomial,
    expected_vars: &Arc<crate::exactring::VarSet>,
    gens: [&HodgePolynomial; 3],
) -> Result<HodgePolynomial> {
    if **q.vars() != **expected_vars {
        return Err(Error::Input(format!(
            "expected a polynomial in the {} generators",
            (0..expected_vars.len())
                .map(|i| expected_vars.name(i).to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )));
    }
    let n = q
        .homogeneous_degree()
        .ok_or_else(|| Error::Input("expected a nonzero homogeneous polynomial".to_string()))?;
    let mut out = HodgePolynomial::zero(n);
    for (m, s) in q.terms() {
        let expansion = monomial_expansion(gens, (m.exp(0), m.exp(1), m.exp(2)));
        out = out.add(&expansion.scalar_mul(s.as_int().expect("integer domain")))?;
    }
    Ok(out)
}

static ABC_SOLVER: Cache<u32, SnfSolver> = Cache::new();

/// Decompose a Hodge element as the unique integer polynomial in A, B, C.
pub fn decompose_abc(h: &HodgePolynomial) -> Result<Polynomial> {
    let n = h.dimension();
    let solver = ABC_SOLVER.get_or_insert(n, || {
        let gens = [&generator_a(), &generator_b(), &generator_c()];
        let cols: Vec<Vec<BigInt>> = graded_monomial_exponents(n)
            .into_iter()
            .map(|e| monomial_expansion(gens, e).coords())
            .collect();
        SnfSolver::new(&IntMatrix::from_fn(hodge_rank(n), cols.len(), |i, j| {
            cols[j][i].clone()
        }))
    });
    let sol = solver
        .solve(&h.coords())?
        .ok_or_else(|| Error::Internal("generator system unsolvable over ℤ".to_string()))?;
    coefficients_to_poly(&vars::abc(), n, &sol)
}

fn coefficients_to_poly(
    target: &Arc<crate::exactring::VarSet>,
    n: u32,
    coeffs: &[BigInt],
) -> Result<Polynomial> {
    let terms = graded_monomial_exponents(n)
        .into_iter()
        .zip(coeffs.iter().cloned())
        .filter(|(_, c)| !c.is_zero())
        .map(|((i, j, k), c)| {
            (
                Monomial::from_exps(&[(0, i), (1, j), (2, k)]),
                Scalar::Int(c),
            )
        })
        .collect();
    Polynomial::from_terms(target.clone(), ScalarDomain::Int, terms)
}

fn check_surface_generator(s: &HodgePolynomial) -> Result<()> {
    if s.dimension() != 2 {
        return Err(Error::Input(format!(
            "S must have dimension 2, got {}",
            s.dimension()
        )));
    }
    let sigma = signature(s);
    if sigma.abs() != BigInt::one() {
        return Err(Error::Input(format!(
            "S must have signature ±1, got {sigma}"
        )));
    }
    Ok(())
}

/// Expand a polynomial in E, L, S.
pub fn expand_els(q: &Polynomial, s: &HodgePolynomial) -> Result<HodgePolynomial> {
    check_surface_generator(s)?;
    expand_in_generators(q, &vars::els(), [&HodgePolynomial::elliptic(), &HodgePolynomial::line(), s])
}

type ElsKey = (u32, Vec<BigInt>);
static ELS_SOLVER: Cache<ElsKey, SnfSolver> = Cache::new();

/// Decompose over the geometric generators E, L and a chosen degree-two
/// element S of signature ±1.
pub fn decompose_els(h: &HodgePolynomial, s: &HodgePolynomial) -> Result<Polynomial> {
    check_surface_generator(s)?;
    let n = h.dimension();
    let solver = ELS_SOLVER.get_or_insert((n, s.coords()), || {
        let e = HodgePolynomial::elliptic();
        let l = HodgePolynomial::line();
        let gens = [&e, &l, s];
        let cols: Vec<Vec<BigInt>> = graded_monomial_exponents(n)
            .into_iter()
            .map(|e| monomial_expansion(gens, e).coords())
            .collect();
        SnfSolver::new(&IntMatrix::from_fn(hodge_rank(n), cols.len(), |i, j| {
            cols[j][i].clone()
        }))
    });
    let sol = solver
        .solve(&h.coords())?
        .ok_or_else(|| Error::Internal("generator system unsolvable over ℤ".to_string()))?;
    coefficients_to_poly(&vars::els(), n, &sol)
}

/// Decompose over E, L with the projective plane as the surface generator.
pub fn decompose_els_default(h: &HodgePolynomial) -> Result<Polynomial> {
    decompose_els(h, &HodgePolynomial::cp(2))
}

// ---------------------------------------------------------------------
// Graded ideal pieces.
// ---------------------------------------------------------------------

/// The three principal ideals whose graded pieces drive the classifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum IdealGenerator {
    /// `C = xy·z²`: the blow-up difference, kernel of the birational genus.
    C,
    /// An elliptic curve: kernel of the χ_y-genus.
    E,
    /// The degree-two element with zero Betti specialization and signature
    /// four: kernel of the forgetful map.
    G,
}

/// The generator as a Hodge element.
pub fn ideal_generator(which: IdealGenerator) -> HodgePolynomial {
    match which {
        IdealGenerator::C => generator_c(),
        IdealGenerator::E => HodgePolynomial::elliptic(),
        IdealGenerator::G => {
            // 4·S − 3L² + E² − 2EL with S the projective plane.
            let s = HodgePolynomial::cp(2);
            let l = HodgePolynomial::line();
            let e = HodgePolynomial::elliptic();
            s.scalar_mul(&BigInt::from(4))
                .sub(&l.mul(&l).scalar_mul(&BigInt::from(3)))
                .and_then(|t| t.add(&e.mul(&e)))
                .and_then(|t| t.sub(&e.mul(&l).scalar_mul(&BigInt::from(2))))
                .expect("degree-two arithmetic")
        }
    }
}

fn ideal_generator_degree(which: IdealGenerator) -> u32 {
    match which {
        IdealGenerator::C | IdealGenerator::G => 2,
        IdealGenerator::E => 1,
    }
}

static IDEAL_SUBMODULE: Cache<(IdealGenerator, u32), Submodule> = Cache::new();

/// The degree-n graded piece of the principal ideal, as a submodule in
/// canonical coordinates.
pub fn ideal_submodule(which: IdealGenerator, n: u32) -> Arc<Submodule> {
    IDEAL_SUBMODULE.get_or_insert((which, n), || {
        let d = ideal_generator_degree(which);
        if n < d {
            return Submodule::zero(hodge_rank(n));
        }
        let g = ideal_generator(which);
        let gens: Vec<Vec<BigInt>> = hodge_basis(n - d)
            .iter()
            .map(|b| g.mul(b).coords())
            .collect();
        Submodule::from_generators(hodge_rank(n), &gens).expect("coordinate vectors")
    })
}

/// The same piece as a list of Hodge elements in Hermite-canonical
/// coordinates; empty below the generator degree.
pub fn ideal_basis(which: IdealGenerator, n: u32) -> Vec<HodgePolynomial> {
    ideal_submodule(which, n)
        .basis_vectors()
        .into_iter()
        .map(|v| HodgePolynomial::from_coords(n, &v).expect("basis coordinates"))
        .collect()
}

// ---------------------------------------------------------------------
// Matrices of the genus maps over the canonical bases.
// ---------------------------------------------------------------------

static CHI_MATRIX: Cache<u32, IntMatrix> = Cache::new();

/// Matrix of the χ_y-genus from degree n to its constrained target, in
/// canonical coordinates on both sides.
pub fn chi_matrix(n: u32) -> Arc<IntMatrix> {
    CHI_MATRIX.get_or_insert(n, || {
        let basis = hodge_basis(n);
        IntMatrix::from_fn(hir_rank(n), hodge_rank(n), |i, j| {
            chi(&basis[j]).coords()[i].clone()
        })
    })
}

static B_MATRIX: Cache<u32, IntMatrix> = Cache::new();

/// Matrix of the birational genus: rows are the coefficients
/// `h^{0,0} … h^{0,n}`.
pub fn b_matrix(n: u32) -> Arc<IntMatrix> {
    B_MATRIX.get_or_insert(n, || {
        let basis = hodge_basis(n);
        IntMatrix::from_fn(n as usize + 1, hodge_rank(n), |i, j| {
            b_coords(&basis[j])[i].clone()
        })
    })
}

/// The signature as a row vector over the canonical basis.
pub fn sigma_row(n: u32) -> Vec<BigInt> {
    hodge_basis(n).iter().map(signature).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intlinalg::kernel;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn abc_poly(terms: &[((u32, u32, u32), i64)]) -> Polynomial {
        Polynomial::from_terms(
            vars::abc(),
            ScalarDomain::Int,
            terms
                .iter()
                .map(|&((i, j, k), c)| {
                    (
                        Monomial::from_exps(&[(0, i), (1, j), (2, k)]),
                        Scalar::int(c),
                    )
                })
                .collect(),
        )
        .unwrap()
    }

    fn els_poly(terms: &[((u32, u32, u32), i64)]) -> Polynomial {
        Polynomial::from_terms(
            vars::els(),
            ScalarDomain::Int,
            terms
                .iter()
                .map(|&((i, j, k), c)| {
                    (
                        Monomial::from_exps(&[(0, i), (1, j), (2, k)]),
                        Scalar::int(c),
                    )
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn validation_reflects_fundamental_domain() {
        // Fundamental data {h^{0,0}=1, h^{0,1}=1} reflects to the full
        // elliptic-curve diamond.
        let h = HodgePolynomial::from_fundamental_entries(
            1,
            &[((0, 0), bi(1)), ((0, 1), bi(1))],
        )
        .unwrap();
        assert_eq!(h, HodgePolynomial::elliptic());
    }

    #[test]
    fn validation_accepts_degree_one_generator() {
        let h = HodgePolynomial::from_full_entries(1, &[((0, 0), bi(1)), ((1, 1), bi(1))])
            .unwrap();
        let expected = Polynomial::from_terms(
            vars::xyz(),
            ScalarDomain::Int,
            vec![
                (Monomial::from_exps(&[(2, 1)]), Scalar::int(1)),
                (Monomial::from_exps(&[(0, 1), (1, 1), (2, 1)]), Scalar::int(1)),
            ],
        )
        .unwrap();
        assert_eq!(h.to_poly(), expected);
    }

    #[test]
    fn validation_names_broken_symmetry() {
        match HodgePolynomial::from_full_entries(2, &[((0, 1), bi(1))]) {
            Err(Error::Validation(msg)) => {
                assert!(msg.contains("h^{0,1}") || msg.contains("h^{1,0}"), "{msg}")
            }
            other => panic!("expected validation error, got {other:?}"),
        }
    }

    #[test]
    fn basis_counts() {
        assert_eq!(hodge_basis(0).len(), 1);
        assert_eq!(hodge_basis(1).len(), 2);
        assert_eq!(hodge_basis(2).len(), 4);
        for n in 0..=12 {
            assert_eq!(hodge_basis(n).len(), hodge_rank(n), "degree {n}");
        }
    }

    #[test]
    fn coordinates_are_fundamental_entries() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 0..=8u32 {
            let coords: Vec<BigInt> = (0..hodge_rank(n))
                .map(|_| bi(rng.gen_range(-9..=9)))
                .collect();
            let h = HodgePolynomial::from_coords(n, &coords).unwrap();
            assert_eq!(h.coords(), coords);
        }
    }

    #[test]
    fn decompose_abc_examples() {
        // The projective line is the generator A.
        let q = decompose_abc(&HodgePolynomial::line()).unwrap();
        assert_eq!(q, abc_poly(&[((1, 0, 0), 1)]));
        // An elliptic curve is A + B.
        let q = decompose_abc(&HodgePolynomial::elliptic()).unwrap();
        assert_eq!(q, abc_poly(&[((1, 0, 0), 1), ((0, 1, 0), 1)]));
        // The projective plane is A² − C.
        let q = decompose_abc(&HodgePolynomial::cp(2)).unwrap();
        assert_eq!(q, abc_poly(&[((2, 0, 0), 1), ((0, 0, 1), -1)]));
    }

    #[test]
    fn decompose_els_examples() {
        let s = HodgePolynomial::cp(2);
        // The surface generator decomposes as itself.
        let q = decompose_els(&s, &s).unwrap();
        assert_eq!(q, els_poly(&[((0, 0, 1), 1)]));
        // C = L² − S.
        let q = decompose_els(&ideal_generator(IdealGenerator::C), &s).unwrap();
        assert_eq!(q, els_poly(&[((0, 2, 0), 1), ((0, 0, 1), -1)]));
        // A zero-signature surface is rejected.
        let l2 = HodgePolynomial::line().mul(&HodgePolynomial::line());
        match decompose_els(&s, &l2) {
            Err(Error::Input(msg)) => assert!(msg.contains("signature ±1"), "{msg}"),
            other => panic!("expected signature precondition error, got {other:?}"),
        }
    }

    #[test]
    fn genus_examples() {
        // χ of the projective plane.
        let c = chi(&HodgePolynomial::cp(2));
        assert_eq!(c.chi(), &[bi(1), bi(-1), bi(1)]);
        assert_eq!(c.to_poly().to_string(), "1 - y + y^2 (z^2)");
        // Signature of the forgetful-kernel generator is 4.
        assert_eq!(signature(&ideal_generator(IdealGenerator::G)), bi(4));
        // Birational genus of an elliptic curve is (1 + y) z.
        let b = b_genus(&HodgePolynomial::elliptic());
        assert_eq!(b.to_string(), "1 + y (z)");
        assert_eq!(b_coords(&HodgePolynomial::elliptic()), vec![bi(1), bi(1)]);
    }

    #[test]
    fn betti_specialization_doubles_degree() {
        let p = betti_specialization(&HodgePolynomial::elliptic());
        assert_eq!(p.dimension(), 2);
        assert_eq!(p.betti(), &[bi(1), bi(2), bi(1)]);
        assert!(betti_specialization(&ideal_generator(IdealGenerator::G)).is_zero());
        assert_eq!(
            betti_specialization(&HodgePolynomial::point()),
            PoincarePolynomial::point()
        );
    }

    #[test]
    fn ideal_examples() {
        // The birational ideal in degree two is spanned by C.
        let basis = ideal_basis(IdealGenerator::C, 2);
        assert_eq!(basis, vec![ideal_generator(IdealGenerator::C)]);
        // The χ-kernel ideal in degree one is spanned by the elliptic curve.
        let basis = ideal_basis(IdealGenerator::E, 1);
        assert_eq!(basis, vec![HodgePolynomial::elliptic()]);
        // The forgetful-kernel ideal in degree two is spanned by ±G.
        let sub = ideal_submodule(IdealGenerator::G, 2);
        assert_eq!(sub.rank(), 1);
        assert!(sub
            .contains_vector(&ideal_generator(IdealGenerator::G).coords())
            .unwrap());
        // Below the generator degree the piece is empty.
        assert!(ideal_basis(IdealGenerator::G, 1).is_empty());
        assert!(ideal_basis(IdealGenerator::C, 1).is_empty());
    }

    #[test]
    fn abc_roundtrip_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for n in 0..=7u32 {
            for _ in 0..30 {
                let coords: Vec<BigInt> = (0..hodge_rank(n))
                    .map(|_| bi(rng.gen_range(-9..=9)))
                    .collect();
                let h = HodgePolynomial::from_coords(n, &coords).unwrap();
                if h.is_zero() {
                    continue;
                }
                let q = decompose_abc(&h).unwrap();
                assert_eq!(expand_abc(&q).unwrap(), h);
                // Linearity: decomposition of a sum is the sum.
                let h2 = HodgePolynomial::from_coords(
                    n,
                    &(0..hodge_rank(n))
                        .map(|_| bi(rng.gen_range(-9..=9)))
                        .collect::<Vec<_>>(),
                )
                .unwrap();
                let sum = h.add(&h2).unwrap();
                if !sum.is_zero() && !h2.is_zero() {
                    let qs = decompose_abc(&sum).unwrap();
                    assert_eq!(qs, q.checked_add(&decompose_abc(&h2).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn els_roundtrip_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        let s = HodgePolynomial::cp(2);
        for n in 0..=6u32 {
            for _ in 0..20 {
                let coords: Vec<BigInt> = (0..hodge_rank(n))
                    .map(|_| bi(rng.gen_range(-9..=9)))
                    .collect();
                let h = HodgePolynomial::from_coords(n, &coords).unwrap();
                if h.is_zero() {
                    continue;
                }
                let q = decompose_els(&h, &s).unwrap();
                assert_eq!(expand_els(&q, &s).unwrap(), h);
            }
        }
    }

    #[test]
    fn chi_kernel_is_elliptic_ideal() {
        for n in 1..=5u32 {
            let ker = kernel(&chi_matrix(n));
            assert!(ker.equals(&ideal_submodule(IdealGenerator::E, n)).unwrap());
        }
    }

    #[test]
    fn b_kernel_is_blowup_ideal() {
        for n in 0..=5u32 {
            let ker = kernel(&b_matrix(n));
            assert!(ker.equals(&ideal_submodule(IdealGenerator::C, n)).unwrap());
        }
    }

    #[test]
    fn chi_is_multiplicative_and_specializes_to_signature() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..40 {
            let n1 = rng.gen_range(0..=3u32);
            let n2 = rng.gen_range(0..=3u32);
            let rand_h = |rng: &mut ChaCha8Rng, n: u32| {
                HodgePolynomial::from_coords(
                    n,
                    &(0..hodge_rank(n))
                        .map(|_| bi(rng.gen_range(-5..=5)))
                        .collect::<Vec<_>>(),
                )
                .unwrap()
            };
            let a = rand_h(&mut rng, n1);
            let b = rand_h(&mut rng, n2);
            assert_eq!(chi(&a.mul(&b)), chi(&a).mul(&chi(&b)));
            // Signature = χ evaluated at y = 1.
            let sum: BigInt = chi(&a).chi().iter().sum();
            assert_eq!(sum, signature(&a));
        }
    }

    #[test]
    fn chi_image_is_the_full_constrained_lattice() {
        for n in 0..=8u32 {
            let m = chi_matrix(n);
            // Rank equals the target rank...
            let snf = crate::intlinalg::smith_normal_form(&m);
            assert_eq!(snf.rank(), hir_rank(n), "degree {n}");
            // ...and the image lattice is everything.
            let cols: Vec<Vec<BigInt>> = (0..m.cols()).map(|j| m.col(j)).collect();
            let image = Submodule::from_generators(hir_rank(n), &cols).unwrap();
            let full = Submodule::from_generators(
                hir_rank(n),
                &(0..hir_rank(n))
                    .map(|i| {
                        let mut v = vec![BigInt::zero(); hir_rank(n)];
                        v[i] = BigInt::one();
                        v
                    })
                    .collect::<Vec<_>>(),
            )
            .unwrap();
            assert!(image.equals(&full).unwrap());
        }
    }

    #[test]
    fn hir_validation() {
        assert!(HirPolynomial::new(1, vec![bi(1), bi(-1)]).is_ok());
        assert!(HirPolynomial::new(1, vec![bi(1), bi(1)]).is_err());
        assert_eq!(hir_basis(1).len(), 1);
        assert_eq!(hir_basis(1)[0].chi(), &[bi(1), bi(-1)]);
        assert_eq!(hir_basis(2).len(), 2);
        assert_eq!(hir_basis(0).len(), 1);
    }

    #[test]
    fn json_roundtrip_both_domains() {
        let g = ideal_generator(IdealGenerator::G);
        for fundamental in [true, false] {
            let v = g.to_json(fundamental);
            assert_eq!(HodgePolynomial::from_json(&v).unwrap(), g);
        }
    }
}
