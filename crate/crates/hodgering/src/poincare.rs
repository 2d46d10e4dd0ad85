//! The oriented Poincaré ring and its presentation.
//!
//! Degree n holds the formal augmented Poincaré polynomials
//! `(b_0 + b_1 t + … + b_n t^n)·z^n` subject to the duality `b_i = b_{n-i}`
//! and, when n ≡ 2 (mod 4), the parity `b_{n/2} ≡ 0 (mod 2)`. Each degree
//! is a free ℤ-module of rank ⌊(n+2)/2⌋ with the explicit basis
//! `e_k = (t^k + t^{n-k})·z^n` (middle element plain or doubled according
//! to n mod 4).
//!
//! The whole ring is presented by four generators W, X, Y, Z of degrees
//! 1–4 modulo the relations `WX−2Y`, `X²−4Z`, `XY−2WZ`, `Y²−W²Z`. Those
//! relations, read left to right, form a terminating rewriting system whose
//! normal monomials are `W^i Z^l`, `X Z^l` and `W^i Y Z^l`; the degree-n
//! count of those monomials matches the rank, making the normal form a
//! faithful coordinate system.
//!
//! The Kähler Poincaré ring — the image of Hodge data under the forgetful
//! map — is the even-degree part with even odd-index coefficients; it is
//! presented by L, E and a surface generator modulo one degree-two
//! relation, and elements decompose canonically with all surface-power
//! coefficients reduced into [0,4) past the relation.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::cache::Cache;
use crate::error::{Error, Result};
use crate::exactring::{vars, Monomial, Polynomial, Scalar, ScalarDomain};
use crate::intlinalg::{solve_integer, IntMatrix, SnfSolver};
use crate::jsonnum::{bigint_from_json, bigint_to_json};

/// Rank of degree n: ⌊(n+2)/2⌋.
pub fn poincare_rank(n: u32) -> usize {
    ((n + 2) / 2) as usize
}

/// A validated element of the degree-n piece of the Poincaré ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincarePolynomial {
    dimension: u32,
    betti: Vec<BigInt>,
}

impl PoincarePolynomial {
    /// Validate a raw coefficient vector of length n+1.
    pub fn new(dimension: u32, betti: Vec<BigInt>) -> Result<Self> {
        let n = dimension as usize;
        if betti.len() != n + 1 {
            return Err(Error::Validation(format!(
                "expected {} Betti coefficients for dimension {}, got {}",
                n + 1,
                dimension,
                betti.len()
            )));
        }
        for i in 0..=n / 2 {
            if betti[i] != betti[n - i] {
                return Err(Error::Validation(format!(
                    "duality violated at index {i}: b_{i}={} but b_{}={}",
                    betti[i],
                    n - i,
                    betti[n - i]
                )));
            }
        }
        if dimension % 4 == 2 {
            let mid = n / 2;
            if betti[mid].is_odd() {
                return Err(Error::Validation(format!(
                    "middle coefficient b_{mid}={} must be even in dimension {dimension}",
                    betti[mid]
                )));
            }
        }
        Ok(PoincarePolynomial { dimension, betti })
    }

    pub fn zero(dimension: u32) -> Self {
        PoincarePolynomial {
            dimension,
            betti: vec![BigInt::zero(); dimension as usize + 1],
        }
    }

    pub fn point() -> Self {
        PoincarePolynomial {
            dimension: 0,
            betti: vec![BigInt::one()],
        }
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn betti(&self) -> &[BigInt] {
        &self.betti
    }

    pub fn is_zero(&self) -> bool {
        self.betti.iter().all(|b| b.is_zero())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dimension != other.dimension {
            return Err(Error::Input(format!(
                "cannot add dimensions {} and {}",
                self.dimension, other.dimension
            )));
        }
        let betti = self
            .betti
            .iter()
            .zip(&other.betti)
            .map(|(a, b)| a + b)
            .collect();
        Ok(PoincarePolynomial {
            dimension: self.dimension,
            betti,
        })
    }

    pub fn neg(&self) -> Self {
        PoincarePolynomial {
            dimension: self.dimension,
            betti: self.betti.iter().map(|b| -b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, s: &BigInt) -> Self {
        PoincarePolynomial {
            dimension: self.dimension,
            betti: self.betti.iter().map(|b| b * s).collect(),
        }
    }

    /// Cartesian-product multiplication: Betti convolution, dimensions add.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.dimension + other.dimension;
        let mut betti = vec![BigInt::zero(); n as usize + 1];
        for (i, a) in self.betti.iter().enumerate() {
            for (j, b) in other.betti.iter().enumerate() {
                betti[i + j] += a * b;
            }
        }
        PoincarePolynomial { dimension: n, betti }
    }

    /// Coordinates over the `e_k` basis.
    pub fn e_coords(&self) -> Vec<BigInt> {
        let n = self.dimension as usize;
        let mut coords = Vec::with_capacity(poincare_rank(self.dimension));
        for k in 0..poincare_rank(self.dimension) {
            if 2 * k < n || self.dimension % 4 != 2 {
                coords.push(self.betti[k].clone());
            } else {
                // doubled middle basis vector
                let (q, r) = self.betti[k].div_mod_floor(&BigInt::from(2));
                debug_assert!(r.is_zero(), "validated parity");
                coords.push(q);
            }
        }
        coords
    }

    pub fn from_e_coords(dimension: u32, coords: &[BigInt]) -> Result<Self> {
        if coords.len() != poincare_rank(dimension) {
            return Err(Error::ShapeMismatch(format!(
                "{} coordinates for rank {}",
                coords.len(),
                poincare_rank(dimension)
            )));
        }
        let mut p = PoincarePolynomial::zero(dimension);
        for (k, c) in coords.iter().enumerate() {
            let b = e_basis_element(dimension, k);
            p = p.add(&b.scalar_mul(c))?;
        }
        Ok(p)
    }

    /// Euler characteristic: the alternating coefficient sum.
    pub fn euler(&self) -> BigInt {
        self.betti
            .iter()
            .enumerate()
            .map(|(i, b)| if i % 2 == 0 { b.clone() } else { -b })
            .sum()
    }

    /// The augmented polynomial in `t`, `z`.
    pub fn to_poly(&self) -> Polynomial {
        let n = self.dimension;
        let terms = self
            .betti
            .iter()
            .enumerate()
            .map(|(i, b)| {
                (
                    Monomial::from_exps(&[(0, i as u32), (1, n)]),
                    Scalar::Int(b.clone()),
                )
            })
            .collect();
        Polynomial::from_terms(vars::tz(), ScalarDomain::Int, terms)
            .expect("betti terms are well-formed")
    }

    /// Read a homogeneous element of ℤ[t,z] back into Betti data.
    pub fn from_poly(p: &Polynomial) -> Result<Self> {
        if **p.vars() != *vars::tz() {
            return Err(Error::Input("expected a polynomial in t, z".to_string()));
        }
        let n = match p.homogeneous_degree() {
            Some(d) => d,
            None if p.is_zero() => {
                return Err(Error::Input(
                    "zero polynomial has no determined dimension".to_string(),
                ))
            }
            None => return Err(Error::Input("inhomogeneous polynomial".to_string())),
        };
        let mut betti = vec![BigInt::zero(); n as usize + 1];
        for (m, s) in p.terms() {
            let i = m.exp(0) as usize;
            if m.exp(1) != n || i > n as usize {
                return Err(Error::Input(format!(
                    "term t^{} z^{} does not belong to degree {}",
                    m.exp(0),
                    m.exp(1),
                    n
                )));
            }
            betti[i] = s.as_int().expect("integer domain").clone();
        }
        PoincarePolynomial::new(n, betti)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dimension": self.dimension,
            "betti": self.betti.iter().map(bigint_to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let dimension = v
            .get("dimension")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Input("missing dimension".to_string()))? as u32;
        let betti = v
            .get("betti")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Input("missing betti array".to_string()))?
            .iter()
            .map(bigint_from_json)
            .collect::<Result<Vec<_>>>()?;
        PoincarePolynomial::new(dimension, betti)
    }
}

/// The k-th basis element of degree n.
fn e_basis_element(n: u32, k: usize) -> PoincarePolynomial {
    let mut betti = vec![BigInt::zero(); n as usize + 1];
    let nk = n as usize - k;
    if k < nk {
        betti[k] = BigInt::one();
        betti[nk] = BigInt::one();
    } else {
        betti[k] = if n % 4 == 2 {
            BigInt::from(2)
        } else {
            BigInt::one()
        };
    }
    PoincarePolynomial {
        dimension: n,
        betti,
    }
}

/// The explicit module basis of degree n.
pub fn e_basis(n: u32) -> Vec<PoincarePolynomial> {
    (0..poincare_rank(n)).map(|k| e_basis_element(n, k)).collect()
}

// ---------------------------------------------------------------------
// The W, X, Y, Z presentation.
// ---------------------------------------------------------------------

/// An element written on the normal monomial set `W^i Z^l`, `X Z^l`,
/// `W^i Y Z^l` of one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WxyzNormalForm {
    degree: u32,
    poly: Polynomial,
}

impl WxyzNormalForm {
    fn new(degree: u32, poly: Polynomial) -> Self {
        debug_assert!(poly
            .terms()
            .all(|(m, _)| is_normal_monomial(m) && m.weighted_degree(&vars::wxyz()) == degree));
        WxyzNormalForm { degree, poly }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    /// Coefficients over `normal_monomials(degree)`, in that order.
    pub fn coefficients(&self) -> Vec<BigInt> {
        normal_monomials(self.degree)
            .iter()
            .map(|m| self.poly.coeff(m).as_int().expect("integer").clone())
            .collect()
    }

    /// The Poincaré element this normal form presents.
    pub fn expand(&self) -> PoincarePolynomial {
        if self.poly.is_zero() {
            PoincarePolynomial::zero(self.degree)
        } else {
            p_map(&self.poly).expect("normal form expands")
        }
    }
}

fn is_normal_monomial(m: &Monomial) -> bool {
    let (x, y) = (m.exp(1), m.exp(2));
    let w = m.exp(0);
    match (x, y) {
        (0, 0) => true,
        (1, 0) => w == 0,
        (0, 1) => true,
        _ => false,
    }
}

/// The degree-n normal monomials, in the canonical term order. Their count
/// equals the rank of degree n.
pub fn normal_monomials(n: u32) -> Vec<Monomial> {
    let wv = vars::wxyz();
    let mut out = Vec::new();
    // W^i Z^l with i + 4l = n
    for l in 0..=n / 4 {
        out.push(Monomial::from_exps(&[(0, n - 4 * l), (3, l)]));
    }
    // X Z^l with 2 + 4l = n
    if n >= 2 && (n - 2).is_multiple_of(4) {
        out.push(Monomial::from_exps(&[(1, 1), (3, (n - 2) / 4)]));
    }
    // W^i Y Z^l with i + 3 + 4l = n
    if n >= 3 {
        for l in 0..=(n - 3) / 4 {
            out.push(Monomial::from_exps(&[(0, n - 3 - 4 * l), (2, 1), (3, l)]));
        }
    }
    out.sort_by(|a, b| a.cmp_in(b, &wv));
    out
}

/// One rewriting step on a single monomial: returns the multiplier and the
/// replacement when a relation applies at `rule`.
fn apply_rule(m: &Monomial, rule: usize) -> Option<(BigInt, Monomial)> {
    let (w, x, y, z) = (m.exp(0), m.exp(1), m.exp(2), m.exp(3));
    match rule {
        // WX -> 2Y
        0 if w >= 1 && x >= 1 => Some((
            BigInt::from(2),
            Monomial::from_exps(&[(0, w - 1), (1, x - 1), (2, y + 1), (3, z)]),
        )),
        // X^2 -> 4Z
        1 if x >= 2 => Some((
            BigInt::from(4),
            Monomial::from_exps(&[(0, w), (1, x - 2), (2, y), (3, z + 1)]),
        )),
        // XY -> 2WZ
        2 if x >= 1 && y >= 1 => Some((
            BigInt::from(2),
            Monomial::from_exps(&[(0, w + 1), (1, x - 1), (2, y - 1), (3, z + 1)]),
        )),
        // Y^2 -> W^2 Z
        3 if y >= 2 => Some((
            BigInt::one(),
            Monomial::from_exps(&[(0, w + 2), (1, x), (2, y - 2), (3, z + 1)]),
        )),
        _ => None,
    }
}

/// Exhaustively rewrite a homogeneous polynomial in W, X, Y, Z onto the
/// normal monomial set. `rule_order` picks which applicable relation fires
/// first; any order reaches the same normal form (checked by the confluence
/// property test), the default is the relation list order.
pub fn normal_form_with_order(
    q: &Polynomial,
    mut rule_order: impl FnMut(&Monomial) -> [usize; 4],
) -> Result<WxyzNormalForm> {
    if **q.vars() != *vars::wxyz() {
        return Err(Error::Input("expected a polynomial in W, X, Y, Z".to_string()));
    }
    if !q.is_homogeneous() {
        return Err(Error::Input(
            "normal form requires a homogeneous polynomial".to_string(),
        ));
    }
    let degree = q.homogeneous_degree().unwrap_or(0);
    let mut cur = q.clone();
    loop {
        let reducible = cur.terms().find_map(|(m, s)| {
            if is_normal_monomial(m) {
                return None;
            }
            Some((m.clone(), s.as_int().expect("integer domain").clone()))
        });
        let Some((m, c)) = reducible else {
            return Ok(WxyzNormalForm::new(degree, cur));
        };
        let step = rule_order(&m)
            .into_iter()
            .find_map(|rule| apply_rule(&m, rule))
            .ok_or_else(|| {
                Error::Internal(format!("monomial {m:?} is neither normal nor reducible"))
            })?;
        let (mult, repl) = step;
        let delta = Polynomial::from_terms(
            vars::wxyz(),
            ScalarDomain::Int,
            vec![
                (m, Scalar::Int(-c.clone())),
                (repl, Scalar::Int(c * mult)),
            ],
        )?;
        cur = cur.checked_add(&delta)?;
    }
}

/// Normal form with the default rule order.
pub fn normal_form(q: &Polynomial) -> Result<WxyzNormalForm> {
    normal_form_with_order(q, |_| [0, 1, 2, 3])
}

/// The presentation homomorphism: W ↦ (1+t)z, X ↦ 2tz², Y ↦ (t+t²)z³,
/// Z ↦ t²z⁴, landing in the Poincaré ring.
pub fn p_map(q: &Polynomial) -> Result<PoincarePolynomial> {
    if **q.vars() != *vars::wxyz() {
        return Err(Error::Input("expected a polynomial in W, X, Y, Z".to_string()));
    }
    let degree = q.homogeneous_degree().ok_or_else(|| {
        Error::Input("expected a nonzero homogeneous polynomial".to_string())
    })?;
    let target = vars::tz();
    let tz_poly = |terms: &[(&[(usize, u32)], i64)]| {
        Polynomial::from_terms(
            target.clone(),
            ScalarDomain::Int,
            terms
                .iter()
                .map(|(e, c)| (Monomial::from_exps(e), Scalar::int(*c)))
                .collect(),
        )
        .expect("image polynomials are well-formed")
    };
    let assign = BTreeMap::from([
        ("W".to_string(), tz_poly(&[(&[(1, 1)], 1), (&[(0, 1), (1, 1)], 1)])),
        ("X".to_string(), tz_poly(&[(&[(0, 1), (1, 2)], 2)])),
        (
            "Y".to_string(),
            tz_poly(&[(&[(0, 1), (1, 3)], 1), (&[(0, 2), (1, 3)], 1)]),
        ),
        ("Z".to_string(), tz_poly(&[(&[(0, 2), (1, 4)], 1)])),
    ]);
    let image = q.substitute(&target, &assign)?;
    if image.is_zero() {
        return Ok(PoincarePolynomial::zero(degree));
    }
    PoincarePolynomial::from_poly(&image)
}

static WXYZ_SOLVER: Cache<u32, (Vec<Monomial>, SnfSolver)> = Cache::new();

fn wxyz_solver(n: u32) -> Arc<(Vec<Monomial>, SnfSolver)> {
    WXYZ_SOLVER.get_or_insert(n, || {
        let monos = normal_monomials(n);
        let cols: Vec<Vec<BigInt>> = monos
            .iter()
            .map(|m| {
                let poly = Polynomial::from_terms(
                    vars::wxyz(),
                    ScalarDomain::Int,
                    vec![(m.clone(), Scalar::int(1))],
                )
                .expect("monomial");
                p_map(&poly).expect("image of a monomial").e_coords()
            })
            .collect();
        let mat = IntMatrix::from_fn(poincare_rank(n), monos.len(), |i, j| cols[j][i].clone());
        (monos, SnfSolver::new(&mat))
    })
}

/// Invert the presentation: the unique normal-form preimage of a Poincaré
/// element. The normal monomials biject with the basis, so this is a square
/// unimodular integer system.
pub fn decompose_wxyz(p: &PoincarePolynomial) -> Result<WxyzNormalForm> {
    let n = p.dimension();
    let solver = wxyz_solver(n);
    let sol = solver
        .1
        .solve(&p.e_coords())?
        .ok_or_else(|| Error::Internal("presentation system unsolvable".to_string()))?;
    let terms = solver
        .0
        .iter()
        .zip(sol)
        .map(|(m, c)| (m.clone(), Scalar::Int(c)))
        .collect();
    let poly = Polynomial::from_terms(vars::wxyz(), ScalarDomain::Int, terms)?;
    Ok(WxyzNormalForm::new(n, poly))
}

// ---------------------------------------------------------------------
// The Kähler Poincaré ring: the image of the forgetful map.
// ---------------------------------------------------------------------

/// Membership in the Kähler Poincaré ring: even dimension and even
/// odd-index coefficients.
pub fn kahler_member(p: &PoincarePolynomial) -> bool {
    p.dimension().is_multiple_of(2)
        && p.betti
            .iter()
            .enumerate()
            .all(|(i, b)| i % 2 == 0 || b.is_even())
}

/// The degree-d monomials in L, E and the surface generator.
pub fn kahler_monomials(d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for c in 0..=d / 2 {
        let rest = d - 2 * c;
        for a in (0..=rest).rev() {
            out.push(Monomial::from_exps(&[
                (0, a),
                (1, rest - a),
                (2, c),
            ]));
        }
    }
    out
}

/// The image of a monomial `L^a E^b CP2^c` in the Poincaré ring.
pub fn kahler_monomial_image(m: &Monomial) -> PoincarePolynomial {
    let line = PoincarePolynomial::new(2, vec![BigInt::one(), BigInt::zero(), BigInt::one()])
        .expect("projective line");
    let elliptic = PoincarePolynomial::new(
        2,
        vec![BigInt::one(), BigInt::from(2), BigInt::one()],
    )
    .expect("elliptic curve");
    let surface = PoincarePolynomial::new(
        4,
        vec![
            BigInt::one(),
            BigInt::zero(),
            BigInt::one(),
            BigInt::zero(),
            BigInt::one(),
        ],
    )
    .expect("projective plane");
    let mut out = PoincarePolynomial::point();
    for _ in 0..m.exp(0) {
        out = out.mul(&line);
    }
    for _ in 0..m.exp(1) {
        out = out.mul(&elliptic);
    }
    for _ in 0..m.exp(2) {
        out = out.mul(&surface);
    }
    out
}

static KAHLER_SOLVER: Cache<u32, (Vec<Monomial>, SnfSolver)> = Cache::new();

/// Canonically decompose a member of the Kähler Poincaré ring over L, E
/// and the surface generator. After solving, surface powers are eliminated
/// through the degree-two relation `4·CP2 = 3L² − E² + 2EL` until every
/// coefficient on a monomial containing the surface lies in `[0, 4)`, which
/// pins a unique representative.
pub fn kahler_decompose(p: &PoincarePolynomial) -> Result<Polynomial> {
    if !kahler_member(p) {
        return Err(Error::Input(format!(
            "not in the Kähler Poincaré ring: dimension {} with odd-index parities {:?}",
            p.dimension(),
            p.betti
                .iter()
                .enumerate()
                .filter(|(i, b)| i % 2 == 1 && b.is_odd())
                .map(|(i, _)| i)
                .collect::<Vec<_>>()
        )));
    }
    let d = p.dimension() / 2;
    let solver = KAHLER_SOLVER.get_or_insert(d, || {
        let monos = kahler_monomials(d);
        let cols: Vec<Vec<BigInt>> = monos
            .iter()
            .map(|m| kahler_monomial_image(m).e_coords())
            .collect();
        let mat = IntMatrix::from_fn(poincare_rank(2 * d), monos.len(), |i, j| cols[j][i].clone());
        (monos, SnfSolver::new(&mat))
    });
    let sol = solver
        .1
        .solve(&p.e_coords())?
        .ok_or_else(|| Error::Internal("Kähler image system unsolvable".to_string()))?;

    let mut coeffs: BTreeMap<(u32, u32, u32), BigInt> = BTreeMap::new();
    for (m, c) in solver.0.iter().zip(sol) {
        if !c.is_zero() {
            coeffs.insert((m.exp(0), m.exp(1), m.exp(2)), c);
        }
    }
    // Reduce surface powers from the top down.
    for c in (1..=d / 2).rev() {
        let keys: Vec<(u32, u32, u32)> = coeffs
            .keys()
            .filter(|(_, _, cc)| *cc == c)
            .cloned()
            .collect();
        for key in keys {
            let v = coeffs.remove(&key).unwrap_or_default();
            let (q, r) = v.div_mod_floor(&BigInt::from(4));
            if !r.is_zero() {
                coeffs.insert(key, r);
            }
            if !q.is_zero() {
                let (a, b, cc) = key;
                // 4·m·CP2 = (3L² − E² + 2EL)·m
                for (da, db, mult) in [(2, 0, BigInt::from(3)), (0, 2, BigInt::from(-1)), (1, 1, BigInt::from(2))] {
                    let down = (a + da, b + db, cc - 1);
                    let entry = coeffs.entry(down).or_default();
                    *entry += &q * mult;
                    if entry.is_zero() {
                        coeffs.remove(&down);
                    }
                }
            }
        }
    }
    let terms = coeffs
        .into_iter()
        .map(|((a, b, c), v)| {
            (
                Monomial::from_exps(&[(0, a), (1, b), (2, c)]),
                Scalar::Int(v),
            )
        })
        .collect();
    Polynomial::from_terms(vars::lecp2(), ScalarDomain::Int, terms)
}

/// Expand an L, E, CP2 polynomial back to its Poincaré image.
pub fn kahler_expand(q: &Polynomial) -> Result<PoincarePolynomial> {
    if **q.vars() != *vars::lecp2() {
        return Err(Error::Input("expected a polynomial in L, E, CP2".to_string()));
    }
    let d = q
        .homogeneous_degree()
        .ok_or_else(|| Error::Input("expected a nonzero homogeneous polynomial".to_string()))?;
    let mut out = PoincarePolynomial::zero(2 * d);
    for (m, s) in q.terms() {
        let img = kahler_monomial_image(m).scalar_mul(s.as_int().expect("integer"));
        out = out.add(&img)?;
    }
    Ok(out)
}

/// The sublattice of degree 2d consisting of vectors with even odd-index
/// coefficients, as a submodule in e-basis coordinates.
pub fn parity_sublattice(d: u32) -> crate::intlinalg::Submodule {
    let n = 2 * d;
    let rank = poincare_rank(n);
    let gens: Vec<Vec<BigInt>> = (0..rank)
        .map(|k| {
            let mut v = vec![BigInt::zero(); rank];
            // e_k has b_k = b_{n-k} = 1 for k < n/2; doubling it makes the
            // odd coefficients even. The middle element (k = n/2 = d) has
            // b_d = 1 (n ≡ 0 mod 4 here since n = 2d... both parities of d
            // give n even; for odd d the middle is index d, odd, and the
            // basis vector is already doubled when n ≡ 2 mod 4).
            let needs_double = k % 2 == 1 && !(n % 4 == 2 && k == d as usize);
            v[k] = if needs_double {
                BigInt::from(2)
            } else {
                BigInt::one()
            };
            v
        })
        .collect();
    crate::intlinalg::Submodule::from_generators(rank, &gens).expect("diagonal generators")
}

/// The lattice of f-images inside degree 2d, spanned by the Kähler
/// monomial images.
pub fn kahler_image_lattice(d: u32) -> crate::intlinalg::Submodule {
    let gens: Vec<Vec<BigInt>> = kahler_monomials(d)
        .iter()
        .map(|m| kahler_monomial_image(m).e_coords())
        .collect();
    crate::intlinalg::Submodule::from_generators(poincare_rank(2 * d), &gens)
        .expect("monomial images")
}

/// Sanity identity used by tests and the verification suite: solve the
/// presentation system for an arbitrary right-hand side directly.
pub fn wxyz_expand_solves(p: &PoincarePolynomial) -> Result<bool> {
    let nf = decompose_wxyz(p)?;
    Ok(p_map(nf.poly())? == *p)
}

/// Solve `M x = b` for the e-coordinate matrix of arbitrary generators;
/// used by tests that compare against brute-force spans.
pub fn solve_in_span(gens: &[PoincarePolynomial], target: &PoincarePolynomial) -> Result<bool> {
    if gens.is_empty() {
        return Ok(target.is_zero());
    }
    let n = gens[0].dimension();
    let mat = IntMatrix::from_fn(poincare_rank(n), gens.len(), |i, j| {
        gens[j].e_coords()[i].clone()
    });
    Ok(solve_integer(&mat, &target.e_coords())?.is_some())
}
