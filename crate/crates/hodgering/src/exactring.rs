//! Exact sparse multivariate polynomial arithmetic over ℤ, ℤ/m and ℚ.
//!
//! Variables carry non-negative integer weights; the weighted degree of a
//! term is the weight-scaled sum of its exponents. This is what lets one
//! ambient polynomial ring host graded rings whose generators sit in
//! different degrees (`z` of weight 1 under weightless `x`, `y`; or the
//! degree-1..4 generators `W`, `X`, `Y`, `Z`).
//!
//! Values are immutable after construction and safe to share across
//! threads. Terms are kept in a canonical order — ascending weighted
//! degree, ties broken lexicographically by exponent vector in variable
//! order — so equal polynomials have identical representations and
//! renderings.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An ordered set of named indeterminates with non-negative weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSet {
    vars: Vec<(String, u32)>,
}

impl VarSet {
    pub fn new(vars: &[(&str, u32)]) -> Arc<Self> {
        let vars = vars.iter().map(|(n, w)| (n.to_string(), *w)).collect();
        Arc::new(VarSet { vars })
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.vars[idx].0
    }

    pub fn weight(&self, idx: usize) -> u32 {
        self.vars[idx].1
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|(n, _)| n == name)
    }

    fn describe(&self) -> String {
        let names: Vec<&str> = self.vars.iter().map(|(n, _)| n.as_str()).collect();
        format!("[{}]", names.join(","))
    }
}

/// Standard variable sets used throughout the crate.
pub mod vars {
    use super::VarSet;
    use std::sync::{Arc, OnceLock};

    macro_rules! varset_fn {
        ($fn_name:ident, $($name:literal => $weight:literal),+) => {
            pub fn $fn_name() -> Arc<VarSet> {
                static CELL: OnceLock<Arc<VarSet>> = OnceLock::new();
                CELL.get_or_init(|| VarSet::new(&[$(($name, $weight)),+]))
                    .clone()
            }
        };
    }

    // Hodge polynomials live in x, y (weightless) and z (the grading).
    varset_fn!(xyz, "x" => 0, "y" => 0, "z" => 1);
    // Poincaré polynomials in t, z; also the target of the genus maps.
    varset_fn!(tz, "t" => 0, "z" => 1);
    // Genus values in y, z.
    varset_fn!(yz, "y" => 0, "z" => 1);
    // Signature values in z alone.
    varset_fn!(z_only, "z" => 1);
    // Generator systems with their degrees as weights.
    varset_fn!(wxyz, "W" => 1, "X" => 2, "Y" => 3, "Z" => 4);
    varset_fn!(abc, "A" => 1, "B" => 1, "C" => 2);
    varset_fn!(els, "E" => 1, "L" => 1, "S" => 2);
    varset_fn!(lecp2, "L" => 1, "E" => 1, "CP2" => 2);
}

/// Scalar coefficient domain of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarDomain {
    /// Arbitrary-precision integers.
    Int,
    /// Arbitrary-precision rationals.
    Rat,
    /// Residues modulo m, stored as representatives in `[0, m)`. Any
    /// m ≥ 2 is allowed, prime or not.
    Mod(BigInt),
}

impl ScalarDomain {
    pub fn modulus(m: i64) -> Self {
        assert!(m >= 2, "modulus must be at least 2");
        ScalarDomain::Mod(BigInt::from(m))
    }

    fn describe(&self) -> String {
        match self {
            ScalarDomain::Int => "Z".to_string(),
            ScalarDomain::Rat => "Q".to_string(),
            ScalarDomain::Mod(m) => format!("Z/{m}"),
        }
    }

    fn check(&self, s: &Scalar) -> Result<()> {
        let ok = matches!(
            (self, s),
            (ScalarDomain::Int, Scalar::Int(_))
                | (ScalarDomain::Rat, Scalar::Rat(_))
                | (ScalarDomain::Mod(_), Scalar::Int(_))
        );
        if ok {
            Ok(())
        } else {
            Err(Error::DomainMismatch {
                left: self.describe(),
                right: s.describe_kind().to_string(),
            })
        }
    }

    /// Bring a scalar to its canonical representative for this domain.
    fn normalize(&self, s: Scalar) -> Scalar {
        match (self, s) {
            (ScalarDomain::Mod(m), Scalar::Int(v)) => Scalar::Int(v.mod_floor(m)),
            (_, s) => s,
        }
    }

    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Int(x), Scalar::Int(y)) => self.normalize(Scalar::Int(x + y)),
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            _ => unreachable!("scalars validated against domain"),
        }
    }

    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Int(x), Scalar::Int(y)) => self.normalize(Scalar::Int(x * y)),
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            _ => unreachable!("scalars validated against domain"),
        }
    }

    fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Int(x) => self.normalize(Scalar::Int(-x)),
            Scalar::Rat(x) => Scalar::Rat(-x),
        }
    }
}

/// An exact coefficient: a big integer (ℤ and ℤ/m) or a big rational (ℚ).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
}

impl Scalar {
    pub fn int(v: i64) -> Self {
        Scalar::Int(BigInt::from(v))
    }

    pub fn rat(p: i64, q: i64) -> Self {
        Scalar::Rat(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_zero(),
            Scalar::Rat(v) => v.is_zero(),
        }
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Scalar::Int(v) => Some(v),
            Scalar::Rat(_) => None,
        }
    }

    fn describe_kind(&self) -> &'static str {
        match self {
            Scalar::Int(_) => "integer",
            Scalar::Rat(_) => "rational",
        }
    }

    fn is_one(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_one(),
            Scalar::Rat(v) => v.is_one(),
        }
    }

    fn is_negative(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_negative(),
            Scalar::Rat(v) => v.is_negative(),
        }
    }

    fn abs(&self) -> Scalar {
        match self {
            Scalar::Int(v) => Scalar::Int(v.abs()),
            Scalar::Rat(v) => Scalar::Rat(v.abs()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(v) => write!(f, "{v}"),
            Scalar::Rat(v) => {
                if v.denom().is_one() {
                    write!(f, "{}", v.numer())
                } else {
                    write!(f, "{}/{}", v.numer(), v.denom())
                }
            }
        }
    }
}

/// A monomial: sparse exponent vector keyed by variable index.
///
/// Entries are sorted by variable index and strictly positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<(u16, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(idx: usize) -> Self {
        Monomial {
            exps: vec![(idx as u16, 1)],
        }
    }

    /// Build from `(variable index, exponent)` pairs; zero exponents are
    /// dropped, duplicates are summed.
    pub fn from_exps(pairs: &[(usize, u32)]) -> Self {
        let mut map: BTreeMap<u16, u32> = BTreeMap::new();
        for &(i, e) in pairs {
            if e > 0 {
                *map.entry(i as u16).or_insert(0) += e;
            }
        }
        Monomial {
            exps: map.into_iter().collect(),
        }
    }

    pub fn exp(&self, idx: usize) -> u32 {
        self.exps
            .iter()
            .find(|(i, _)| *i as usize == idx)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().map(|&(i, e)| (i as usize, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut map: BTreeMap<u16, u32> = self.exps.iter().copied().collect();
        for &(i, e) in &other.exps {
            *map.entry(i).or_insert(0) += e;
        }
        Monomial {
            exps: map.into_iter().collect(),
        }
    }

    pub fn weighted_degree(&self, vars: &VarSet) -> u32 {
        self.exps
            .iter()
            .map(|&(i, e)| e * vars.weight(i as usize))
            .sum()
    }

    /// Lexicographic comparison by exponents in variable order.
    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let mut a = self.exps.iter().peekable();
        let mut b = other.exps.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(&&(i, e)), Some(&&(j, f))) => match i.cmp(&j) {
                    // The earlier-indexed side has a positive exponent where
                    // the other has zero.
                    Ordering::Less => return e.cmp(&0).then(Ordering::Greater),
                    Ordering::Greater => return 0.cmp(&f).then(Ordering::Less),
                    Ordering::Equal => {
                        if e != f {
                            return e.cmp(&f);
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
            }
        }
    }

    /// Canonical term order: weighted degree, then lexicographic.
    pub fn cmp_in(&self, other: &Monomial, vars: &VarSet) -> Ordering {
        self.weighted_degree(vars)
            .cmp(&other.weighted_degree(vars))
            .then_with(|| self.lex_cmp(other))
    }

    fn render(&self, vars: &VarSet) -> String {
        let mut parts = Vec::new();
        for &(i, e) in &self.exps {
            let name = vars.name(i as usize);
            if e == 1 {
                parts.push(name.to_string());
            } else {
                parts.push(format!("{name}^{e}"));
            }
        }
        parts.join("*")
    }
}

/// A sparse multivariate polynomial with exact coefficients.
#[derive(Debug, Clone)]
pub struct Polynomial {
    vars: Arc<VarSet>,
    domain: ScalarDomain,
    // Sorted ascending in the canonical term order; no zero coefficients.
    terms: Vec<(Monomial, Scalar)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        *self.vars == *other.vars && self.domain == other.domain && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(vars: Arc<VarSet>, domain: ScalarDomain) -> Self {
        Polynomial {
            vars,
            domain,
            terms: Vec::new(),
        }
    }

    pub fn constant(vars: Arc<VarSet>, domain: ScalarDomain, value: Scalar) -> Result<Self> {
        Self::from_terms(vars, domain, vec![(Monomial::one(), value)])
    }

    pub fn variable(vars: Arc<VarSet>, domain: ScalarDomain, idx: usize) -> Result<Self> {
        let one = match domain {
            ScalarDomain::Rat => Scalar::Rat(BigRational::one()),
            _ => Scalar::Int(BigInt::one()),
        };
        Self::from_terms(vars, domain, vec![(Monomial::var(idx), one)])
    }

    /// Build from raw terms: validates scalar kinds, folds duplicate
    /// monomials, normalizes modular representatives and prunes zeros.
    pub fn from_terms(
        vars: Arc<VarSet>,
        domain: ScalarDomain,
        raw: Vec<(Monomial, Scalar)>,
    ) -> Result<Self> {
        let mut acc: Vec<(Monomial, Scalar)> = Vec::new();
        for (m, s) in raw {
            domain.check(&s)?;
            if let Some((i, _)) = m.exps.iter().find(|(i, _)| *i as usize >= vars.len()) {
                return Err(Error::Input(format!(
                    "monomial references variable index {i} outside {}",
                    vars.describe()
                )));
            }
            let s = domain.normalize(s);
            match acc.iter_mut().find(|(n, _)| *n == m) {
                Some((_, t)) => *t = domain.add(t, &s),
                None => acc.push((m, s)),
            }
        }
        acc.retain(|(_, s)| !s.is_zero());
        acc.sort_by(|(a, _), (b, _)| a.cmp_in(b, &vars));
        Ok(Polynomial {
            vars,
            domain,
            terms: acc,
        })
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn domain(&self) -> &ScalarDomain {
        &self.domain
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().map(|(m, s)| (m, s))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &Monomial) -> Scalar {
        self.terms
            .iter()
            .find(|(m, _)| m == mono)
            .map(|(_, s)| s.clone())
            .unwrap_or(match self.domain {
                ScalarDomain::Rat => Scalar::Rat(BigRational::zero()),
                _ => Scalar::Int(BigInt::zero()),
            })
    }

    /// Weighted degree of a homogeneous polynomial; `None` for zero or
    /// inhomogeneous values.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut deg = None;
        for (m, _) in &self.terms {
            let d = m.weighted_degree(&self.vars);
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        deg
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    fn compatible(&self, other: &Polynomial) -> Result<()> {
        if *self.vars != *other.vars {
            return Err(Error::VariableMismatch {
                left: self.vars.describe(),
                right: other.vars.describe(),
            });
        }
        if self.domain != other.domain {
            return Err(Error::DomainMismatch {
                left: self.domain.describe(),
                right: other.domain.describe(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.compatible(other)?;
        // Merge two sorted term lists.
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, sa) = &self.terms[i];
            let (mb, sb) = &other.terms[j];
            match ma.cmp_in(mb, &self.vars) {
                Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let s = self.domain.add(sa, sb);
                    if !s.is_zero() {
                        out.push((ma.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial {
            vars: self.vars.clone(),
            domain: self.domain.clone(),
            terms: out,
        })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, s)| (m.clone(), self.domain.neg(s)))
            .collect();
        Polynomial {
            vars: self.vars.clone(),
            domain: self.domain.clone(),
            terms,
        }
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.compatible(other)?;
        let mut acc: BTreeMap<(u32, Vec<u32>), (Monomial, Scalar)> = BTreeMap::new();
        for (ma, sa) in &self.terms {
            for (mb, sb) in &other.terms {
                let m = ma.mul(mb);
                let s = self.domain.mul(sa, sb);
                let key = self.dense_key(&m);
                match acc.get_mut(&key) {
                    Some((_, t)) => *t = self.domain.add(t, &s),
                    None => {
                        acc.insert(key, (m, s));
                    }
                }
            }
        }
        let terms = acc
            .into_values()
            .filter(|(_, s)| !s.is_zero())
            .collect::<Vec<_>>();
        Ok(Polynomial {
            vars: self.vars.clone(),
            domain: self.domain.clone(),
            terms,
        })
    }

    pub fn scalar_mul(&self, s: &Scalar) -> Result<Polynomial> {
        self.domain.check(s)?;
        let s = self.domain.normalize(s.clone());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), self.domain.mul(c, &s)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Ok(Polynomial {
            vars: self.vars.clone(),
            domain: self.domain.clone(),
            terms,
        })
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::constant(
            self.vars.clone(),
            self.domain.clone(),
            match self.domain {
                ScalarDomain::Rat => Scalar::Rat(BigRational::one()),
                _ => Scalar::Int(BigInt::one()),
            },
        )
        .expect("constant one is valid");
        for _ in 0..e {
            out = out.checked_mul(self).expect("same ring");
        }
        out
    }

    fn dense_key(&self, m: &Monomial) -> (u32, Vec<u32>) {
        let mut exps = vec![0u32; self.vars.len()];
        for (i, e) in m.iter() {
            exps[i] = e;
        }
        (m.weighted_degree(&self.vars), exps)
    }

    /// Apply a substitution homomorphism. Every variable occurring in
    /// `self` must be assigned; all assigned polynomials must share one
    /// variable set and the scalar domain of `self`.
    pub fn substitute(
        &self,
        target: &Arc<VarSet>,
        assign: &BTreeMap<String, Polynomial>,
    ) -> Result<Polynomial> {
        for p in assign.values() {
            if *p.vars != **target {
                return Err(Error::VariableMismatch {
                    left: p.vars.describe(),
                    right: target.describe(),
                });
            }
            if p.domain != self.domain {
                return Err(Error::DomainMismatch {
                    left: p.domain.describe(),
                    right: self.domain.describe(),
                });
            }
        }
        let mut images: Vec<Option<&Polynomial>> = vec![None; self.vars.len()];
        for (name, p) in assign {
            if let Some(idx) = self.vars.index_of(name) {
                images[idx] = Some(p);
            }
        }
        let mut out = Polynomial::zero(target.clone(), self.domain.clone());
        for (m, s) in &self.terms {
            let mut term = Polynomial::constant(target.clone(), self.domain.clone(), s.clone())?;
            for (i, e) in m.iter() {
                let img = images[i].ok_or_else(|| {
                    Error::UnassignedVariable(self.vars.name(i).to_string())
                })?;
                term = term.checked_mul(&img.pow(e))?;
            }
            out = out.checked_add(&term)?;
        }
        Ok(out)
    }

    /// Reduce an integer polynomial modulo m.
    pub fn reduce_mod(&self, m: i64) -> Result<Polynomial> {
        if self.domain != ScalarDomain::Int {
            return Err(Error::DomainMismatch {
                left: self.domain.describe(),
                right: "Z".to_string(),
            });
        }
        let domain = ScalarDomain::modulus(m);
        Polynomial::from_terms(self.vars.clone(), domain, self.terms.clone())
    }

    /// View an integer polynomial over ℚ.
    pub fn to_rational(&self) -> Result<Polynomial> {
        if self.domain != ScalarDomain::Int {
            return Err(Error::DomainMismatch {
                left: self.domain.describe(),
                right: "Z".to_string(),
            });
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, s)| {
                let v = match s {
                    Scalar::Int(v) => v.clone(),
                    Scalar::Rat(_) => unreachable!(),
                };
                (m.clone(), Scalar::Rat(BigRational::from_integer(v)))
            })
            .collect();
        Polynomial::from_terms(self.vars.clone(), ScalarDomain::Rat, terms)
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial addition")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial subtraction")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial multiplication")
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text rendering. When the positive-weight variables form
    /// one common factor across all terms and weightless variables exist,
    /// that factor is shown once in parentheses: `1 + 2*x*y + x^2*y^2 (z^2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let has_weightless = (0..self.vars.len()).any(|i| self.vars.weight(i) == 0);
        let grade_part: Option<Monomial> = if has_weightless {
            let graded = |m: &Monomial| {
                Monomial::from_exps(
                    &m.iter()
                        .filter(|(i, _)| self.vars.weight(*i) > 0)
                        .collect::<Vec<_>>(),
                )
            };
            let first = graded(&self.terms[0].0);
            if !first.is_one() && self.terms.iter().all(|(m, _)| graded(m) == first) {
                Some(first)
            } else {
                None
            }
        } else {
            None
        };

        let mut rendered = String::new();
        for (idx, (m, s)) in self.terms.iter().enumerate() {
            let shown = match &grade_part {
                Some(g) => Monomial::from_exps(
                    &m.iter()
                        .filter(|(i, _)| g.exp(*i) == 0)
                        .collect::<Vec<_>>(),
                ),
                None => m.clone(),
            };
            let neg = s.is_negative();
            let mag = s.abs();
            if idx == 0 {
                if neg {
                    rendered.push('-');
                }
            } else {
                rendered.push_str(if neg { " - " } else { " + " });
            }
            if shown.is_one() {
                rendered.push_str(&mag.to_string());
            } else if mag.is_one() {
                rendered.push_str(&shown.render(&self.vars));
            } else {
                rendered.push_str(&format!("{}*{}", mag, shown.render(&self.vars)));
            }
        }
        if let Some(g) = grade_part {
            rendered.push_str(&format!(" ({})", g.render(&self.vars)));
        }
        write!(f, "{rendered}")
    }
}
