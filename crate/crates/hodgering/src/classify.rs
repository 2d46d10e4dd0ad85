//! Certificate-producing classifiers.
//!
//! A functional is a linear combination of Hodge numbers (on
//! fundamental-domain cells), Betti numbers, and — over ℚ — Chern numbers
//! by partition, together with a coefficient domain: ℤ, ℤ/m, or ℚ.
//!
//! Every question reduces to one computation: does the functional vanish,
//! in the stated domain, on the graded piece of the matching ideal? A
//! *yes* comes with a reduction over the named invariant basis, solved as
//! an exact integer or congruence system (canonical solution: free
//! coordinates zero, residues in `[0, m)`); a *no* comes with an explicit
//! ideal element on which the functional is nonzero. Both certificate
//! kinds are re-verified before they are reported, so a broken structural
//! assumption surfaces as an internal error rather than a wrong answer.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::bordism::{partitions, pontryagin_matrix};
use crate::cache::Cache;
use crate::chernhodge::{
    ambient_dim, ch_basis_q, ch_ideal_q, functional_on_ch, ChFunctional, ChIdeal,
};
use crate::comparison::{forget_f, kernel_f, KernelVariant};
use crate::error::{Error, Result};
use crate::hodge::{
    self, fundamental_cells, graded_monomial_exponents, hodge_basis, hodge_rank, HodgePolynomial,
    IdealGenerator,
};
use crate::intlinalg::{solve_integer, solve_mod, solve_rational, IntMatrix, Submodule};
use crate::jsonnum::{bigint_to_json, ratio_from_json, ratio_to_json};
use crate::poincare::{kahler_image_lattice, PoincarePolynomial};

/// Coefficient domain of a functional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FunctionalDomain {
    /// Exact integer equality (modulus 0).
    Integers,
    /// Congruence modulo m ≥ 2.
    Mod(BigInt),
    /// Rational coefficients; required for mixed Hodge–Chern questions.
    Rational,
}

impl FunctionalDomain {
    fn modulus_json(&self) -> Value {
        match self {
            FunctionalDomain::Integers => json!(0),
            FunctionalDomain::Mod(m) => bigint_to_json(m),
            FunctionalDomain::Rational => json!("rational"),
        }
    }

    /// Is the value congruent to zero in this domain? Rational mode treats
    /// the value exactly.
    fn is_zero_int(&self, v: &BigInt) -> bool {
        match self {
            FunctionalDomain::Integers | FunctionalDomain::Rational => v.is_zero(),
            FunctionalDomain::Mod(m) => v.mod_floor(m).is_zero(),
        }
    }
}

/// A user-supplied linear form on one graded piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functional {
    pub dimension: u32,
    pub domain: FunctionalDomain,
    /// Coefficients on fundamental-domain Hodge cells.
    pub hodge_coefficients: Vec<((u32, u32), BigRational)>,
    /// Coefficients on Betti numbers `b_k` (real index).
    pub betti_coefficients: Vec<(u32, BigRational)>,
    /// Coefficients on Chern numbers by partition; rational mode only.
    pub chern_coefficients: Vec<(Vec<u32>, BigRational)>,
    /// When set, the functional is declared over the invariant basis with
    /// halved odd Betti numbers; plain odd-index Betti coefficients are
    /// then rejected.
    pub odd_halved: bool,
}

impl Functional {
    pub fn new(dimension: u32, domain: FunctionalDomain) -> Self {
        Functional {
            dimension,
            domain,
            hodge_coefficients: Vec::new(),
            betti_coefficients: Vec::new(),
            chern_coefficients: Vec::new(),
            odd_halved: false,
        }
    }

    pub fn with_hodge(mut self, p: u32, q: u32, c: i64) -> Self {
        self.hodge_coefficients
            .push(((p, q), BigRational::from_integer(BigInt::from(c))));
        self
    }

    pub fn with_betti(mut self, k: u32, c: i64) -> Self {
        self.betti_coefficients
            .push((k, BigRational::from_integer(BigInt::from(c))));
        self
    }

    pub fn with_chern(mut self, partition: &[u32], c: BigRational) -> Self {
        self.chern_coefficients.push((partition.to_vec(), c));
        self
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let dimension = v
            .get("dimension")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Input("missing dimension".to_string()))? as u32;
        let domain = match v.get("modulus") {
            None => FunctionalDomain::Integers,
            Some(Value::String(s)) if s == "rational" => FunctionalDomain::Rational,
            Some(m) => {
                let m = crate::jsonnum::bigint_from_json(m)?;
                if m.is_zero() {
                    FunctionalDomain::Integers
                } else if m >= BigInt::from(2) {
                    FunctionalDomain::Mod(m)
                } else {
                    return Err(Error::Input(format!(
                        "modulus must be 0, at least 2, or \"rational\", got {m}"
                    )));
                }
            }
        };
        let mut f = Functional::new(dimension, domain);
        if let Some(items) = v.get("hodge_coefficients").and_then(Value::as_array) {
            for item in items {
                let triple = item
                    .as_array()
                    .filter(|a| a.len() == 3)
                    .ok_or_else(|| {
                        Error::Input("hodge_coefficients entries must be [p, q, c]".to_string())
                    })?;
                let p = triple[0].as_u64().ok_or_else(|| {
                    Error::Input("hodge coefficient index must be an integer".to_string())
                })? as u32;
                let q = triple[1].as_u64().ok_or_else(|| {
                    Error::Input("hodge coefficient index must be an integer".to_string())
                })? as u32;
                f.hodge_coefficients.push(((p, q), ratio_from_json(&triple[2])?));
            }
        }
        if let Some(items) = v.get("betti_coefficients").and_then(Value::as_array) {
            for item in items {
                let pair = item
                    .as_array()
                    .filter(|a| a.len() == 2)
                    .ok_or_else(|| {
                        Error::Input("betti_coefficients entries must be [k, c]".to_string())
                    })?;
                let k = pair[0].as_u64().ok_or_else(|| {
                    Error::Input("betti index must be an integer".to_string())
                })? as u32;
                f.betti_coefficients.push((k, ratio_from_json(&pair[1])?));
            }
        }
        if let Some(items) = v.get("chern_coefficients").and_then(Value::as_array) {
            for item in items {
                let partition = item
                    .get("partition")
                    .and_then(Value::as_array)
                    .ok_or_else(|| {
                        Error::Input("chern_coefficients entries need a partition".to_string())
                    })?
                    .iter()
                    .map(|x| {
                        x.as_u64().map(|v| v as u32).ok_or_else(|| {
                            Error::Input("partition parts must be positive integers".to_string())
                        })
                    })
                    .collect::<Result<Vec<u32>>>()?;
                let coeff = ratio_from_json(item.get("coeff").ok_or_else(|| {
                    Error::Input("chern_coefficients entries need a coeff".to_string())
                })?)?;
                f.chern_coefficients.push((partition, coeff));
            }
        }
        if let Some(b) = v.get("odd_halved") {
            f.odd_halved = b
                .as_bool()
                .ok_or_else(|| Error::Input("odd_halved must be a boolean".to_string()))?;
        }
        Ok(f)
    }

    fn integral_coeff(c: &BigRational, what: &str) -> Result<BigInt> {
        if c.denom().is_one() {
            Ok(c.numer().clone())
        } else {
            Err(Error::Input(format!(
                "{what} coefficient {c} must be an integer outside rational mode"
            )))
        }
    }
}

/// Outcome of one classification question.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    /// The functional vanishes identically in the stated domain, so the
    /// congruence holds vacuously.
    Trivial,
}

impl Verdict {
    fn as_str(self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Trivial => "trivial",
        }
    }
}

/// A machine-checkable witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Coefficients over a named invariant basis; for mixed questions the
    /// difference from the input is reported over the genus relations.
    Reduction {
        terms: Vec<(String, BigRational)>,
        hrr_adjustment: Vec<(String, BigRational)>,
    },
    /// An element of the relevant ideal on which the functional does not
    /// vanish, with the offending value.
    Violation { element: Value, value: BigRational },
}

impl Certificate {
    fn to_json(&self) -> Value {
        match self {
            Certificate::Reduction {
                terms,
                hrr_adjustment,
            } => {
                let mut obj = json!({
                    "type": "reduction",
                    "terms": terms
                        .iter()
                        .map(|(l, v)| json!([l, ratio_to_json(v)]))
                        .collect::<Vec<_>>(),
                });
                if !hrr_adjustment.is_empty() {
                    obj["hrr_adjustment"] = hrr_adjustment
                        .iter()
                        .map(|(l, v)| json!([l, ratio_to_json(v)]))
                        .collect::<Vec<_>>()
                        .into();
                }
                obj
            }
            Certificate::Violation { element, value } => json!({
                "type": "violation",
                "element": element,
                "value": ratio_to_json(value),
            }),
        }
    }
}

/// One question with its verdict, certificate, and caveats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuestionReport {
    pub question: String,
    pub verdict: Verdict,
    pub certificate: Certificate,
    pub notes: Vec<String>,
}

/// The full classifier answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub classifier: String,
    pub dimension: u32,
    pub domain: FunctionalDomain,
    /// The functional vanishes identically in the stated domain.
    pub trivial: bool,
    pub questions: Vec<QuestionReport>,
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "classifier": self.classifier,
            "dimension": self.dimension,
            "modulus": self.domain.modulus_json(),
            "trivial": self.trivial,
            "questions": self.questions.iter().map(|q| json!({
                "question": q.question,
                "verdict": q.verdict.as_str(),
                "certificate": q.certificate.to_json(),
                "notes": q.notes,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn question(&self, name: &str) -> Option<&QuestionReport> {
        self.questions.iter().find(|q| q.question == name)
    }
}

// ---------------------------------------------------------------------
// Shared certificate machinery over ℤ and ℤ/m.
// ---------------------------------------------------------------------

fn eval_int_row(row: &[BigInt], v: &[BigInt]) -> BigInt {
    row.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// Solve `M x ≡ rhs` in the functional's domain with the canonical
/// particular solution.
fn solve_in_domain(
    m: &IntMatrix,
    rhs: &[BigInt],
    domain: &FunctionalDomain,
) -> Result<Option<Vec<BigInt>>> {
    match domain {
        FunctionalDomain::Integers => solve_integer(m, rhs),
        FunctionalDomain::Mod(q) => solve_mod(m, rhs, q),
        FunctionalDomain::Rational => Err(Error::Internal(
            "integer certificate requested in rational mode".to_string(),
        )),
    }
}

/// A family of integral invariant functionals, evaluated over the degree
/// basis; the columns of the certificate system.
struct InvariantBasis {
    labels: Vec<String>,
    // matrix: rows = Hodge basis elements, cols = labels.
    matrix: IntMatrix,
}

fn invariant_basis(labels: Vec<String>, columns: Vec<Vec<BigInt>>) -> InvariantBasis {
    let rows = columns.first().map(|c| c.len()).unwrap_or(0);
    InvariantBasis {
        matrix: IntMatrix::from_fn(rows, columns.len(), |i, j| columns[j][i].clone()),
        labels,
    }
}

/// Evaluate a closure over the full Hodge basis of degree n.
fn basis_column(n: u32, f: impl Fn(&HodgePolynomial) -> BigInt) -> Vec<BigInt> {
    hodge_basis(n).iter().map(f).collect()
}

fn exact_half(v: &BigInt) -> BigInt {
    let (q, r) = v.div_mod_floor(&BigInt::from(2));
    debug_assert!(r.is_zero(), "halved Betti functional must be integral");
    q
}

/// The Betti-side invariant labels and columns on degree n: even Betti
/// numbers and halves of odd ones, composed with the forgetful map.
fn betti_invariant_columns(n: u32) -> (Vec<String>, Vec<Vec<BigInt>>) {
    let mut labels = Vec::new();
    let mut cols = Vec::new();
    for k in 0..=n {
        if k % 2 == 0 {
            labels.push(format!("b_{k}"));
            cols.push(basis_column(n, |h| forget_f(h).betti()[k as usize].clone()));
        } else {
            labels.push(format!("b_{k}/2"));
            cols.push(basis_column(n, |h| {
                exact_half(&forget_f(h).betti()[k as usize])
            }));
        }
    }
    (labels, cols)
}

/// The correction functional `(σ − (−1)^{n/2}·e)/4`, integral on even
/// degrees by the universal congruence between the Euler characteristic
/// and the signature. It completes the oriented invariant basis on the
/// sublattices where the plain basis does not extend.
fn signature_euler_quarter(n: u32) -> (String, Vec<BigInt>) {
    debug_assert!(n.is_multiple_of(2));
    let sign: i64 = if (n / 2).is_multiple_of(2) { 1 } else { -1 };
    let label = if sign == 1 {
        "(sigma - e)/4".to_string()
    } else {
        "(sigma + e)/4".to_string()
    };
    let col = basis_column(n, |h| {
        let v = hodge::signature(h) - BigInt::from(sign) * forget_f(h).euler();
        let (q, r) = v.div_mod_floor(&BigInt::from(4));
        debug_assert!(r.is_zero(), "universal congruence");
        q
    });
    (label, col)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum HodgeQuestion {
    Birational,
    UnorientedTopological,
    OrientedTopological,
    ChernExpressible,
    PontryaginExpressible,
}

impl HodgeQuestion {
    fn name(self) -> &'static str {
        match self {
            HodgeQuestion::Birational => "birational",
            HodgeQuestion::UnorientedTopological => "unoriented_topological",
            HodgeQuestion::OrientedTopological => "oriented_topological",
            HodgeQuestion::ChernExpressible => "chern_expressible",
            HodgeQuestion::PontryaginExpressible => "pontryagin_expressible",
        }
    }
}

static HODGE_IDEALS: Cache<(HodgeQuestion, u32), Submodule> = Cache::new();

/// The ideal piece whose vanishing settles the question.
fn hodge_question_ideal(q: HodgeQuestion, n: u32) -> Arc<Submodule> {
    match q {
        HodgeQuestion::Birational => hodge::ideal_submodule(IdealGenerator::C, n),
        HodgeQuestion::ChernExpressible => hodge::ideal_submodule(IdealGenerator::E, n),
        HodgeQuestion::UnorientedTopological => kernel_f(n, KernelVariant::Full),
        HodgeQuestion::OrientedTopological => kernel_f(n, KernelVariant::IntersectSignature),
        HodgeQuestion::PontryaginExpressible => HODGE_IDEALS.get_or_insert((q, n), || {
            // The span of all generator monomials containing a curve
            // factor: E^a L^b S^c with a+b ≥ 1, S the projective plane.
            let s = HodgePolynomial::cp(2);
            let gens: Vec<Vec<BigInt>> = graded_monomial_exponents(n)
                .into_iter()
                .filter(|(a, b, _)| a + b >= 1)
                .map(|(a, b, c)| {
                    HodgePolynomial::elliptic()
                        .pow(a)
                        .mul(&HodgePolynomial::line().pow(b))
                        .mul(&s.pow(c))
                        .coords()
                })
                .collect();
            Submodule::from_generators(hodge_rank(n), &gens).expect("coordinate vectors")
        }),
    }
}

static HODGE_CERT_BASES: Cache<(HodgeQuestion, u32, bool), InvariantBasis> = Cache::new();

/// The invariant basis over which a *yes* is certified. The `extended`
/// variant replaces the signature by the quarter correction on the
/// oriented question; it spans every functional on the image lattice and
/// is used when the named basis admits no solution modulo the stated m.
fn hodge_certificate_basis(
    q: HodgeQuestion,
    n: u32,
    extended: bool,
) -> Arc<InvariantBasis> {
    HODGE_CERT_BASES.get_or_insert((q, n, extended), || match q {
        HodgeQuestion::Birational => {
            let labels = (0..=n).map(|k| format!("h^{{0,{k}}}")).collect();
            let cols = (0..=n)
                .map(|k| basis_column(n, |h| h.entry(0, k).clone()))
                .collect();
            invariant_basis(labels, cols)
        }
        HodgeQuestion::ChernExpressible => {
            let labels = (0..hodge::hir_rank(n))
                .map(|p| format!("chi_{p}"))
                .collect();
            let cols = (0..hodge::hir_rank(n))
                .map(|p| basis_column(n, |h| hodge::chi(h).chi()[p].clone()))
                .collect();
            invariant_basis(labels, cols)
        }
        HodgeQuestion::PontryaginExpressible => invariant_basis(
            vec!["sigma".to_string()],
            vec![basis_column(n, hodge::signature)],
        ),
        HodgeQuestion::UnorientedTopological => {
            let (labels, cols) = betti_invariant_columns(n);
            invariant_basis(labels, cols)
        }
        HodgeQuestion::OrientedTopological => {
            let (mut labels, mut cols) = betti_invariant_columns(n);
            if extended && n.is_multiple_of(2) {
                let (label, col) = signature_euler_quarter(n);
                labels.push(label);
                cols.push(col);
            } else {
                labels.insert(0, "sigma".to_string());
                cols.insert(0, basis_column(n, hodge::signature));
            }
            invariant_basis(labels, cols)
        }
    })
}

fn violation_certificate(
    element_coords: &[BigInt],
    value: BigInt,
    n: u32,
    domain: &FunctionalDomain,
) -> Certificate {
    let (coords, value) = match domain {
        FunctionalDomain::Mod(m) => (element_coords.to_vec(), value.mod_floor(m)),
        _ => {
            if value.is_negative() {
                (element_coords.iter().map(|v| -v).collect(), -value)
            } else {
                (element_coords.to_vec(), value)
            }
        }
    };
    let element = HodgePolynomial::from_coords(n, &coords)
        .expect("ideal coordinates")
        .to_json(true);
    Certificate::Violation {
        element,
        value: BigRational::from_integer(value),
    }
}

/// Classify a pure Hodge-number functional over ℤ or ℤ/m.
pub fn classify_hodge(f: &Functional) -> Result<Report> {
    if matches!(f.domain, FunctionalDomain::Rational) {
        return Err(Error::Input(
            "the Hodge classifier works over the integers or a modulus; use the mixed classifier for rational mode"
                .to_string(),
        ));
    }
    if !f.betti_coefficients.is_empty() || !f.chern_coefficients.is_empty() {
        return Err(Error::Input(
            "the Hodge classifier takes hodge_coefficients only".to_string(),
        ));
    }
    let n = f.dimension;
    let cells = fundamental_cells(n);
    let mut row = vec![BigInt::zero(); hodge_rank(n)];
    for ((p, q), c) in &f.hodge_coefficients {
        let idx = cells.iter().position(|cell| *cell == (*p, *q)).ok_or_else(|| {
            Error::Input(format!(
                "({p},{q}) is not a fundamental-domain cell of dimension {n}"
            ))
        })?;
        row[idx] += Functional::integral_coeff(c, "hodge")?;
    }

    let trivial = row.iter().all(|v| f.domain.is_zero_int(v));

    let questions = [
        HodgeQuestion::Birational,
        HodgeQuestion::UnorientedTopological,
        HodgeQuestion::OrientedTopological,
        HodgeQuestion::ChernExpressible,
        HodgeQuestion::PontryaginExpressible,
    ];
    let mut reports = Vec::new();
    for q in questions {
        reports.push(answer_hodge_question(q, n, &row, &f.domain, trivial)?);
    }
    Ok(Report {
        classifier: "hodge".to_string(),
        dimension: n,
        domain: f.domain.clone(),
        trivial,
        questions: reports,
    })
}

fn answer_hodge_question(
    q: HodgeQuestion,
    n: u32,
    row: &[BigInt],
    domain: &FunctionalDomain,
    trivial: bool,
) -> Result<QuestionReport> {
    let ideal = hodge_question_ideal(q, n);
    let mut notes = Vec::new();
    if n == 2 {
        match q {
            HodgeQuestion::UnorientedTopological => notes.push(
                "in dimension 2 the verdict covers homeomorphisms only: the signature is \
                 invariant under all diffeomorphisms of surfaces, so every functional is an \
                 unoriented diffeomorphism invariant there"
                    .to_string(),
            ),
            HodgeQuestion::OrientedTopological => notes.push(
                "in dimension 2 the oriented ideal piece vanishes, so every functional is an \
                 oriented topological invariant"
                    .to_string(),
            ),
            _ => {}
        }
    }

    // The vanishing test on the ideal basis decides the verdict.
    let violation = ideal
        .basis_vectors()
        .into_iter()
        .find_map(|v| {
            let value = eval_int_row(row, &v);
            if domain.is_zero_int(&value) {
                None
            } else {
                Some((v, value))
            }
        });

    if let Some((v, value)) = violation {
        // Re-check the counterexample before reporting it.
        if !ideal.contains_vector(&v)? || domain.is_zero_int(&value) {
            return Err(Error::Internal("counterexample failed re-verification".to_string()));
        }
        return Ok(QuestionReport {
            question: q.name().to_string(),
            verdict: Verdict::No,
            certificate: violation_certificate(&v, value, n, domain),
            notes,
        });
    }

    // Vanishing established: produce the reduction.
    let basis = hodge_certificate_basis(q, n, false);
    let mut solution = solve_in_domain(&basis.matrix, row, domain)?;
    let mut used = basis;
    if solution.is_none() && q == HodgeQuestion::OrientedTopological && n.is_multiple_of(2) {
        // The named basis spans an index-four sublattice of the functionals
        // on the image; complete it with the quarter correction.
        used = hodge_certificate_basis(q, n, true);
        solution = solve_in_domain(&used.matrix, row, domain)?;
        notes.push(
            "the reduction needs the quarter correction (sigma ∓ e)/4, which is integral by \
             the universal congruence between the Euler characteristic and the signature"
                .to_string(),
        );
    }
    let solution = solution.ok_or_else(|| {
        Error::Internal(format!(
            "functional vanishes on the {} ideal but admits no reduction",
            q.name()
        ))
    })?;

    // Re-verify the reduction against the whole degree basis.
    for j in 0..hodge_rank(n) {
        let combined: BigInt = (0..used.labels.len())
            .map(|i| used.matrix.get(j, i) * &solution[i])
            .sum();
        if !domain.is_zero_int(&(combined - &row[j])) {
            return Err(Error::Internal("reduction failed re-verification".to_string()));
        }
    }

    let terms: Vec<(String, BigRational)> = used
        .labels
        .iter()
        .zip(&solution)
        .filter(|(_, v)| !v.is_zero())
        .map(|(l, v)| (l.clone(), BigRational::from_integer(v.clone())))
        .collect();
    Ok(QuestionReport {
        question: q.name().to_string(),
        verdict: if trivial { Verdict::Trivial } else { Verdict::Yes },
        certificate: Certificate::Reduction {
            terms,
            hrr_adjustment: Vec::new(),
        },
        notes,
    })
}

// ---------------------------------------------------------------------
// Betti functionals on the Kähler image.
// ---------------------------------------------------------------------

/// Evaluate a Betti combination on a Poincaré element.
fn eval_betti(coeffs: &[(u32, BigInt)], p: &PoincarePolynomial) -> BigInt {
    coeffs
        .iter()
        .map(|(k, c)| {
            if (*k as usize) < p.betti().len() {
                c * &p.betti()[*k as usize]
            } else {
                BigInt::zero()
            }
        })
        .sum()
}

/// Classify a Betti-number functional on Kähler manifolds of complex
/// dimension n, over ℤ or ℤ/m: expressibility through Chern numbers and
/// congruence to Pontryagin numbers.
pub fn classify_betti(f: &Functional) -> Result<Report> {
    if matches!(f.domain, FunctionalDomain::Rational) {
        return Err(Error::Input(
            "the Betti classifier works over the integers or a modulus".to_string(),
        ));
    }
    if !f.hodge_coefficients.is_empty() || !f.chern_coefficients.is_empty() {
        return Err(Error::Input(
            "the Betti classifier takes betti_coefficients only".to_string(),
        ));
    }
    let n = f.dimension;
    let mut coeffs: Vec<(u32, BigInt)> = Vec::new();
    for (k, c) in &f.betti_coefficients {
        if *k > 2 * n {
            return Err(Error::Input(format!(
                "Betti index {k} exceeds the real dimension {}",
                2 * n
            )));
        }
        let ci = Functional::integral_coeff(c, "betti")?;
        if f.odd_halved && k % 2 == 1 && !ci.is_zero() {
            return Err(Error::Input(format!(
                "odd Betti index {k} carries a nonzero coefficient while the halving \
                 convention is requested; under that convention odd contributions enter \
                 through the halved basis only"
            )));
        }
        coeffs.push((*k, ci));
    }

    // Curve-containing monomial images under the forgetful map.
    let curve_monomials: Vec<(String, PoincarePolynomial)> = graded_monomial_exponents(n)
        .into_iter()
        .filter(|(a, b, _)| a + b >= 1)
        .map(|(a, b, c)| {
            let h = HodgePolynomial::elliptic()
                .pow(a)
                .mul(&HodgePolynomial::line().pow(b))
                .mul(&HodgePolynomial::cp(2).pow(c));
            (format!("E^{a} L^{b} S^{c}"), forget_f(&h))
        })
        .collect();

    let image_basis: Vec<PoincarePolynomial> = kahler_image_lattice(n)
        .basis_vectors()
        .into_iter()
        .map(|v| PoincarePolynomial::from_e_coords(2 * n, &v).expect("lattice vectors"))
        .collect();
    let trivial = image_basis
        .iter()
        .all(|p| f.domain.is_zero_int(&eval_betti(&coeffs, p)));

    let mut questions = Vec::new();

    // Chern expressibility: vanishing on products with an elliptic curve.
    {
        let elliptic_image = forget_f(&HodgePolynomial::elliptic());
        let span: Vec<PoincarePolynomial> = if n == 0 {
            Vec::new()
        } else {
            kahler_image_lattice(n - 1)
                .basis_vectors()
                .into_iter()
                .map(|v| {
                    elliptic_image.mul(
                        &PoincarePolynomial::from_e_coords(2 * (n - 1), &v)
                            .expect("lattice vectors"),
                    )
                })
                .collect()
        };
        let violation = span.iter().find_map(|p| {
            let value = eval_betti(&coeffs, p);
            if f.domain.is_zero_int(&value) {
                None
            } else {
                Some((p.clone(), value))
            }
        });
        let report = match violation {
            Some((p, value)) => QuestionReport {
                question: "chern_expressible".to_string(),
                verdict: Verdict::No,
                certificate: Certificate::Violation {
                    element: p.to_json(),
                    value: BigRational::from_integer(value),
                },
                notes: Vec::new(),
            },
            None => {
                // φ ≡ c·e on the image; solve for c over the image basis.
                let m = IntMatrix::from_fn(image_basis.len(), 1, |i, _| image_basis[i].euler());
                let rhs: Vec<BigInt> =
                    image_basis.iter().map(|p| eval_betti(&coeffs, p)).collect();
                let sol = solve_in_domain(&m, &rhs, &f.domain)?.ok_or_else(|| {
                    Error::Internal(
                        "functional kills curve products but is no Euler multiple".to_string(),
                    )
                })?;
                QuestionReport {
                    question: "chern_expressible".to_string(),
                    verdict: if trivial { Verdict::Trivial } else { Verdict::Yes },
                    certificate: Certificate::Reduction {
                        terms: vec![("e".to_string(), BigRational::from_integer(sol[0].clone()))],
                        hrr_adjustment: Vec::new(),
                    },
                    notes: Vec::new(),
                }
            }
        };
        questions.push(report);
    }

    // Pontryagin congruence: vanishing on every curve-containing monomial.
    {
        let mut notes = vec![
            "the underlying universal congruence is e ≡ (−1)^(n/2)·σ (mod 4) in even complex \
             dimension n"
                .to_string(),
        ];
        if !n.is_multiple_of(2) {
            notes.push(
                "odd complex dimension carries no nonzero Pontryagin numbers, so only the \
                 vacuous congruence survives"
                    .to_string(),
            );
        }
        let violation = curve_monomials.iter().find_map(|(_, p)| {
            let value = eval_betti(&coeffs, p);
            if f.domain.is_zero_int(&value) {
                None
            } else {
                Some((p.clone(), value))
            }
        });
        let report = match violation {
            Some((p, value)) => QuestionReport {
                question: "pontryagin_congruent".to_string(),
                verdict: Verdict::No,
                certificate: Certificate::Violation {
                    element: p.to_json(),
                    value: BigRational::from_integer(value),
                },
                notes,
            },
            None => {
                // φ ≡ c·σ with c pinned by the pure-surface monomial; solve
                // over the Hodge basis where σ is defined.
                let m = IntMatrix::from_fn(hodge_rank(n), 1, |i, _| {
                    hodge::sigma_row(n)[i].clone()
                });
                let rhs: Vec<BigInt> = hodge_basis(n)
                    .iter()
                    .map(|h| eval_betti(&coeffs, &forget_f(h)))
                    .collect();
                let sol = solve_in_domain(&m, &rhs, &f.domain)?.ok_or_else(|| {
                    Error::Internal(
                        "functional kills curve monomials but is no signature multiple"
                            .to_string(),
                    )
                })?;
                QuestionReport {
                    question: "pontryagin_congruent".to_string(),
                    verdict: if trivial { Verdict::Trivial } else { Verdict::Yes },
                    certificate: Certificate::Reduction {
                        terms: vec![(
                            "sigma".to_string(),
                            BigRational::from_integer(sol[0].clone()),
                        )],
                        hrr_adjustment: Vec::new(),
                    },
                    notes,
                }
            }
        };
        questions.push(report);
    }

    Ok(Report {
        classifier: "betti".to_string(),
        dimension: n,
        domain: f.domain.clone(),
        trivial,
        questions,
    })
}

// ---------------------------------------------------------------------
// Mixed Hodge–Chern functionals over ℚ.
// ---------------------------------------------------------------------

fn partition_label(prefix: &str, parts: &[u32]) -> String {
    let inner = parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!("{prefix}{{{inner}}}")
}

/// A labeled family of rational functionals on the ambient space.
struct MixedBasis {
    labels: Vec<String>,
    rows: Vec<Vec<BigRational>>,
}

fn mixed_certificate_basis(which: ChIdeal, n: u32) -> MixedBasis {
    let hr = hodge_rank(n);
    let amb = ambient_dim(n);
    let rat = |v: &BigInt| BigRational::from_integer(v.clone());
    let mut labels = Vec::new();
    let mut rows = Vec::new();
    match which {
        ChIdeal::Birational => {
            for q in 0..=n {
                labels.push(format!("h^{{0,{q}}}"));
                let col = basis_column(n, |h| h.entry(0, q).clone());
                let mut row = vec![BigRational::zero(); amb];
                for (j, v) in col.iter().enumerate() {
                    row[j] = rat(v);
                }
                rows.push(row);
            }
        }
        ChIdeal::KerF | ChIdeal::KerFtilde => {
            for k in 0..=n {
                labels.push(format!("b_{k}"));
                let col = basis_column(n, |h| forget_f(h).betti()[k as usize].clone());
                let mut row = vec![BigRational::zero(); amb];
                for (j, v) in col.iter().enumerate() {
                    row[j] = rat(v);
                }
                rows.push(row);
            }
            if which == ChIdeal::KerFtilde && n.is_multiple_of(2) {
                let pmat = pontryagin_matrix(n);
                for (i, nu) in partitions(n / 2).iter().enumerate() {
                    labels.push(partition_label("p_", nu));
                    let mut row = vec![BigRational::zero(); amb];
                    for j in 0..pmat.cols() {
                        row[hr + j] = rat(pmat.get(i, j));
                    }
                    rows.push(row);
                }
            }
        }
    }
    MixedBasis { labels, rows }
}

/// Classify a mixed Hodge–Chern functional over ℚ.
pub fn classify_mixed(f: &Functional) -> Result<Report> {
    if !matches!(f.domain, FunctionalDomain::Rational) {
        return Err(Error::UnsupportedMode(
            "mixed Hodge–Chern classification is supported over the rationals only: the \
             integral and modular variants depend on special bordism basis sequences that \
             are not available here"
                .to_string(),
        ));
    }
    if !f.betti_coefficients.is_empty() {
        return Err(Error::Input(
            "the mixed classifier takes hodge and chern coefficients".to_string(),
        ));
    }
    let n = f.dimension;
    let phi = functional_on_ch(n, &f.hodge_coefficients, &f.chern_coefficients)?;
    let basis = ch_basis_q(n);
    let values: Vec<BigRational> = basis
        .iter()
        .map(|e| phi.evaluate(e))
        .collect::<Result<_>>()?;
    let trivial = values.iter().all(|v| v.is_zero());

    let specs = [
        (ChIdeal::Birational, "birational"),
        (ChIdeal::KerFtilde, "oriented_topological"),
        (ChIdeal::KerF, "unoriented_topological"),
    ];
    let mut questions = Vec::new();
    for (which, name) in specs {
        let ideal = ch_ideal_q(which, n);
        let mut notes = Vec::new();
        if name == "unoriented_topological" && n == 2 {
            notes.push(
                "in dimension 2 the verdict covers homeomorphisms only: the signature is \
                 invariant under all diffeomorphisms of surfaces"
                    .to_string(),
            );
        }
        let violation = ideal.basis_elements().into_iter().find_map(|e| {
            let v = phi.evaluate(&e).expect("dimension checked");
            if v.is_zero() {
                None
            } else {
                Some((e, v))
            }
        });
        let report = match violation {
            Some((e, v)) => {
                if !ideal.contains(&e)? {
                    return Err(Error::Internal(
                        "counterexample failed re-verification".to_string(),
                    ));
                }
                let (e, v) = if v.is_negative() {
                    (e.scalar_mul(&-BigRational::one()), -v)
                } else {
                    (e, v)
                };
                QuestionReport {
                    question: name.to_string(),
                    verdict: Verdict::No,
                    certificate: Certificate::Violation {
                        element: e.to_json(),
                        value: v,
                    },
                    notes,
                }
            }
            None => {
                let cert = mixed_certificate_basis(which, n);
                // Agree with φ on every basis element of the diagonal.
                let system: Vec<Vec<BigRational>> = basis
                    .iter()
                    .map(|e| {
                        cert.rows
                            .iter()
                            .map(|row| {
                                ChFunctional::from_row(n, row.clone())
                                    .and_then(|f| f.evaluate(e))
                                    .expect("row shapes fixed")
                            })
                            .collect()
                    })
                    .collect();
                let sol = solve_rational(&system, &values)?.ok_or_else(|| {
                    Error::Internal(format!(
                        "functional vanishes on the {name} ideal but admits no reduction"
                    ))
                })?;
                // The genus-relation adjustment: φ minus the reduction
                // factors through the defining surjection.
                let mut cert_row = vec![BigRational::zero(); ambient_dim(n)];
                for (row, c) in cert.rows.iter().zip(&sol) {
                    for (j, v) in row.iter().enumerate() {
                        cert_row[j] += v * c;
                    }
                }
                let diff: Vec<BigRational> = phi
                    .row()
                    .iter()
                    .zip(&cert_row)
                    .map(|(a, b)| a - b)
                    .collect();
                let h = crate::chernhodge::h_matrix(n);
                let system_t: Vec<Vec<BigRational>> = (0..ambient_dim(n))
                    .map(|j| {
                        (0..h.rows())
                            .map(|i| BigRational::from_integer(h.get(i, j).clone()))
                            .collect()
                    })
                    .collect();
                let gamma = solve_rational(&system_t, &diff)?.ok_or_else(|| {
                    Error::Internal("difference does not factor through the genus relations".to_string())
                })?;
                // Re-verify: reduction plus adjustment reproduces φ on the
                // whole ambient space.
                for j in 0..ambient_dim(n) {
                    let adj: BigRational = (0..h.rows())
                        .map(|i| &gamma[i] * BigRational::from_integer(h.get(i, j).clone()))
                        .sum();
                    if &cert_row[j] + adj != phi.row()[j] {
                        return Err(Error::Internal(
                            "reduction failed re-verification".to_string(),
                        ));
                    }
                }
                let terms = cert
                    .labels
                    .iter()
                    .zip(&sol)
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(l, v)| (l.clone(), v.clone()))
                    .collect();
                let hrr_adjustment = gamma
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(p, v)| (format!("chi_{p} - td_{p}"), v.clone()))
                    .collect();
                QuestionReport {
                    question: name.to_string(),
                    verdict: if trivial { Verdict::Trivial } else { Verdict::Yes },
                    certificate: Certificate::Reduction {
                        terms,
                        hrr_adjustment,
                    },
                    notes,
                }
            }
        };
        questions.push(report);
    }

    Ok(Report {
        classifier: "mixed".to_string(),
        dimension: n,
        domain: f.domain.clone(),
        trivial,
        questions,
    })
}

/// Dispatch a functional to the classifier its coefficients call for.
pub fn classify(f: &Functional) -> Result<Report> {
    let has_hodge = !f.hodge_coefficients.is_empty();
    let has_betti = !f.betti_coefficients.is_empty();
    let has_chern = !f.chern_coefficients.is_empty();
    if has_chern || matches!(f.domain, FunctionalDomain::Rational) {
        if has_betti {
            return Err(Error::Input(
                "chern_coefficients cannot be combined with betti_coefficients".to_string(),
            ));
        }
        return classify_mixed(f);
    }
    if has_betti && has_hodge {
        return Err(Error::Input(
            "supply either hodge_coefficients or betti_coefficients, not both".to_string(),
        ));
    }
    if has_betti {
        classify_betti(f)
    } else {
        classify_hodge(f)
    }
}

/// The signature as folded fundamental-domain Hodge coefficients; handy
/// for building the classical regression functionals.
pub fn signature_functional(n: u32, domain: FunctionalDomain) -> Functional {
    let mut f = Functional::new(n, domain);
    for (p, q) in fundamental_cells(n) {
        // Sum of (−1)^a over the orbit cells (a, b) of (p, q).
        let mut orbit = vec![(p, q), (q, p), (n - p, n - q), (n - q, n - p)];
        orbit.sort_unstable();
        orbit.dedup();
        let coeff: i64 = orbit
            .iter()
            .map(|(a, _)| if a % 2 == 0 { 1 } else { -1 })
            .sum();
        if coeff != 0 {
            f = f.with_hodge(p, q, coeff);
        }
    }
    f
}

/// χ_p as folded fundamental-domain Hodge coefficients.
pub fn chi_p_functional(n: u32, p: u32, domain: FunctionalDomain) -> Functional {
    let mut f = Functional::new(n, domain);
    for (a, b) in fundamental_cells(n) {
        let mut orbit = vec![(a, b), (b, a), (n - a, n - b), (n - b, n - a)];
        orbit.sort_unstable();
        orbit.dedup();
        let coeff: i64 = orbit
            .iter()
            .filter(|(c, _)| *c == p)
            .map(|(_, d)| if d % 2 == 0 { 1 } else { -1 })
            .sum();
        if coeff != 0 {
            f = f.with_hodge(a, b, coeff);
        }
    }
    f
}

/// The Euler characteristic as a Betti functional in complex dimension n.
pub fn euler_functional(n: u32, domain: FunctionalDomain) -> Functional {
    let mut f = Functional::new(n, domain);
    for k in 0..=2 * n {
        f = f.with_betti(k, if k % 2 == 0 { 1 } else { -1 });
    }
    f
}

// Expose a monomial builder for tests of the Pontryagin span.
pub(crate) fn curve_monomial(n: u32, a: u32, b: u32, c: u32) -> HodgePolynomial {
    debug_assert_eq!(a + b + 2 * c, n);
    HodgePolynomial::elliptic()
        .pow(a)
        .mul(&HodgePolynomial::line().pow(b))
        .mul(&HodgePolynomial::cp(2).pow(c))
}
