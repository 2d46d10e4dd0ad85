//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Everything is exact; there are no tolerances anywhere.

use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hodgering::bordism::{
    self, chern_numbers, cp_monomial_hodge, partition_count, partitions, pontryagin_numbers,
    todd_genus, BordismClassQ,
};
use hodgering::chernhodge::{self, ch_basis_q, ch_rank, ChernHodgeElementQ};
use hodgering::classify::{
    self, classify_betti, classify_hodge, classify_mixed, Certificate, Functional,
    FunctionalDomain, Verdict,
};
use hodgering::comparison::{forget_f, kernel_f, KernelVariant};
use hodgering::exactring::{vars, Monomial, Polynomial, Scalar, ScalarDomain};
use hodgering::hodge::{
    self, hodge_basis, hodge_rank, HodgePolynomial, IdealGenerator,
};
use hodgering::intlinalg::kernel;
use hodgering::poincare::{
    decompose_wxyz, e_basis, kahler_image_lattice, normal_form, p_map, parity_sublattice,
    poincare_rank, PoincarePolynomial,
};

fn bi(v: i64) -> BigInt {
    BigInt::from(v)
}

fn criterion(name: &str, body: impl FnOnce() + std::panic::UnwindSafe) {
    let result = catch_unwind(AssertUnwindSafe(body));
    let status = if result.is_ok() { "PASS" } else { "FAIL" };
    println!("[acceptance] {name}: {status}");
    if let Err(e) = result {
        resume_unwind(e);
    }
}

#[test]
fn criterion_1_rank_formulas() {
    criterion("1 rank formulas (exact)", || {
        for n in 0..=12u32 {
            assert_eq!(
                hodge_basis(n).len(),
                (((n + 2) / 2) * ((n + 3) / 2)) as usize,
                "Hodge rank at degree {n}"
            );
            assert_eq!(hodge_basis(n).len(), hodge_rank(n));
            assert_eq!(
                e_basis(n).len(),
                ((n + 2) / 2) as usize,
                "Poincaré rank at degree {n}"
            );
            assert_eq!(e_basis(n).len(), poincare_rank(n));
            assert_eq!(
                bordism::hir_basis(n).len(),
                ((n + 2) / 2) as usize,
                "constrained-genus rank at degree {n}"
            );
        }
        for n in 0..=8u32 {
            assert_eq!(
                ch_basis_q(n).len(),
                (((n + 2) / 2) * n.div_ceil(2)) as usize + partition_count(n),
                "Chern–Hodge dimension at degree {n}"
            );
            assert_eq!(ch_basis_q(n).len(), ch_rank(n));
        }
    });
}

#[test]
fn criterion_2_isomorphism_roundtrips() {
    criterion("2 isomorphism round-trips (200 per degree, exact)", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0xACCE01);
        for n in 0..=10u32 {
            for _ in 0..200 {
                let coords: Vec<BigInt> = (0..hodge_rank(n))
                    .map(|_| bi(rng.gen_range(-9..=9)))
                    .collect();
                let h = HodgePolynomial::from_coords(n, &coords).unwrap();
                if !h.is_zero() {
                    let q = hodge::decompose_abc(&h).unwrap();
                    assert_eq!(hodge::expand_abc(&q).unwrap(), h, "degree {n}");
                }

                let coords: Vec<BigInt> = (0..poincare_rank(n))
                    .map(|_| bi(rng.gen_range(-9..=9)))
                    .collect();
                let p = PoincarePolynomial::from_e_coords(n, &coords).unwrap();
                let nf = decompose_wxyz(&p).unwrap();
                assert_eq!(nf.expand(), p, "degree {n}");
            }
        }
    });
}

#[test]
fn criterion_3_ideal_identities() {
    criterion("3 ideal identities as lattice equalities (exact)", || {
        for n in 0..=8u32 {
            let c_ideal = hodge::ideal_submodule(IdealGenerator::C, n);
            assert!(
                kernel(&hodge::b_matrix(n)).equals(&c_ideal).unwrap(),
                "birational ideal at degree {n}"
            );
            let e_ideal = hodge::ideal_submodule(IdealGenerator::E, n);
            assert!(
                kernel(&hodge::chi_matrix(n)).equals(&e_ideal).unwrap(),
                "elliptic ideal at degree {n}"
            );
            let g_ideal = kernel_f(n, KernelVariant::Full);
            assert!(
                kernel(&hodgering::comparison::f_matrix(n))
                    .equals(&g_ideal)
                    .unwrap(),
                "forgetful kernel at degree {n}"
            );
        }
    });
}

#[test]
fn criterion_4_pinned_identities() {
    criterion("4 pinned identities (exact)", || {
        let g = hodge::ideal_generator(IdealGenerator::G);
        assert_eq!(hodge::signature(&g), bi(4));
        assert!(forget_f(&g).is_zero());

        // The sphere combination is already normal and presents
        // (1 + t^4) z^4.
        let s4 = Polynomial::from_terms(
            vars::wxyz(),
            ScalarDomain::Int,
            vec![
                (Monomial::from_exps(&[(0, 4)]), Scalar::int(1)),
                (Monomial::from_exps(&[(0, 1), (2, 1)]), Scalar::int(-4)),
                (Monomial::from_exps(&[(3, 1)]), Scalar::int(2)),
            ],
        )
        .unwrap();
        assert_eq!(normal_form(&s4).unwrap().poly(), &s4);
        assert_eq!(
            p_map(&s4).unwrap(),
            PoincarePolynomial::new(4, vec![bi(1), bi(0), bi(0), bi(0), bi(1)]).unwrap()
        );

        // The degree-two Thom–Milnor combination is three times the
        // signature on the plane.
        let c = chern_numbers(&[2]);
        let s2 = c.get(&[1, 1]).unwrap() - bi(2) * c.get(&[2]).unwrap();
        assert_eq!(s2, bi(3));
        assert_eq!(s2, bi(3) * hodge::signature(&HodgePolynomial::cp(2)));

        assert_eq!(hodge::chi(&HodgePolynomial::cp(1)).chi(), &[bi(1), bi(-1)]);
        assert_eq!(
            hodge::chi(&HodgePolynomial::cp(2)).chi(),
            &[bi(1), bi(-1), bi(1)]
        );

        // The genus coefficients agree along both routes on every
        // projective-space pair up to degree four.
        for n in 0..=4u32 {
            for lambda in partitions(n) {
                let h = cp_monomial_hodge(&lambda);
                ChernHodgeElementQ::from_pair(&h, &BordismClassQ::monomial(&lambda))
                    .unwrap_or_else(|e| panic!("pair of {lambda:?}: {e}"));
                let td = todd_genus(&BordismClassQ::monomial(&lambda));
                let chi = hodge::chi(&h);
                for (a, b) in td.chi().iter().zip(chi.chi()) {
                    assert_eq!(a, &BigRational::from_integer(b.clone()), "{lambda:?}");
                }
            }
        }
    });
}

#[test]
fn criterion_5_image_characterization() {
    criterion("5 forgetful-image lattice characterization (exact)", || {
        // Even real degrees up to 16: complex degrees up to 8.
        for d in 1..=8u32 {
            assert!(
                kahler_image_lattice(d).equals(&parity_sublattice(d)).unwrap(),
                "complex degree {d}"
            );
        }
    });
}

#[test]
fn criterion_6_classifier_regressions() {
    criterion("6 classifier regressions (exact verdicts)", || {
        let yesish = |v: Verdict| matches!(v, Verdict::Yes | Verdict::Trivial);

        let r = classify_hodge(&classify::signature_functional(
            2,
            FunctionalDomain::Mod(bi(4)),
        ))
        .unwrap();
        assert_eq!(
            r.question("unoriented_topological").unwrap().verdict,
            Verdict::Yes
        );
        assert_eq!(
            r.question("oriented_topological").unwrap().verdict,
            Verdict::Yes
        );

        let r = classify_hodge(&classify::signature_functional(
            2,
            FunctionalDomain::Integers,
        ))
        .unwrap();
        let q = r.question("unoriented_topological").unwrap();
        assert_eq!(q.verdict, Verdict::No);
        match &q.certificate {
            Certificate::Violation { element, value } => {
                assert_eq!(value, &BigRational::from_integer(bi(4)));
                assert_eq!(
                    HodgePolynomial::from_json(element).unwrap(),
                    hodge::ideal_generator(IdealGenerator::G)
                );
            }
            other => panic!("expected violation, got {other:?}"),
        }

        let r = classify_hodge(&classify::signature_functional(
            2,
            FunctionalDomain::Mod(bi(8)),
        ))
        .unwrap();
        assert_eq!(
            r.question("unoriented_topological").unwrap().verdict,
            Verdict::No
        );

        for n in 1..=6u32 {
            for q in 0..=n {
                let f = Functional::new(n, FunctionalDomain::Integers).with_hodge(q, 0, 1);
                let r = classify_hodge(&f).unwrap();
                assert!(
                    yesish(r.question("birational").unwrap().verdict),
                    "h^{{0,{q}}} in degree {n}"
                );
            }
        }
        let f = Functional::new(2, FunctionalDomain::Integers).with_hodge(1, 1, 1);
        let r = classify_hodge(&f).unwrap();
        assert_eq!(r.question("birational").unwrap().verdict, Verdict::No);

        for n in 1..=5u32 {
            for p in 0..=n {
                let f = classify::chi_p_functional(n, p, FunctionalDomain::Integers);
                let r = classify_hodge(&f).unwrap();
                assert!(
                    yesish(r.question("chern_expressible").unwrap().verdict),
                    "χ_{p} in degree {n}"
                );
            }
        }

        // Euler–signature congruence: verdicts and the uniqueness of the
        // generator in complex dimensions 2 and 4 (real degrees 4 and 8),
        // by full enumeration of mod-4 Betti functionals.
        for half in 1..=2u32 {
            let n = 2 * half;
            let f = classify::euler_functional(n, FunctionalDomain::Mod(bi(4)));
            let r = classify_betti(&f).unwrap();
            let q = r.question("pontryagin_congruent").unwrap();
            assert!(yesish(q.verdict), "complex dimension {n}");
            match &q.certificate {
                Certificate::Reduction { terms, .. } => {
                    let expected = if half % 2 == 0 { bi(1) } else { bi(3) };
                    assert_eq!(
                        terms,
                        &vec![("sigma".to_string(), BigRational::from_integer(expected))]
                    );
                }
                other => panic!("expected reduction, got {other:?}"),
            }

            let image_basis: Vec<PoincarePolynomial> = kahler_image_lattice(n)
                .basis_vectors()
                .into_iter()
                .map(|v| PoincarePolynomial::from_e_coords(2 * n, &v).unwrap())
                .collect();
            let curve_images: Vec<PoincarePolynomial> = hodge::graded_monomial_exponents(n)
                .into_iter()
                .filter(|(a, b, _)| a + b >= 1)
                .map(|(a, b, c)| {
                    forget_f(
                        &HodgePolynomial::elliptic()
                            .pow(a)
                            .mul(&HodgePolynomial::line().pow(b))
                            .mul(&HodgePolynomial::cp(2).pow(c)),
                    )
                })
                .collect();
            let rank = n as usize + 1;
            for code in 0..4u64.pow(rank as u32) {
                let mut coeffs = Vec::new();
                let mut cc = code;
                for k in 0..rank {
                    coeffs.push((k, bi((cc % 4) as i64)));
                    cc /= 4;
                }
                let eval = |p: &PoincarePolynomial| -> BigInt {
                    coeffs.iter().map(|(k, v)| v * &p.betti()[*k]).sum()
                };
                use num_integer::Integer;
                if !curve_images
                    .iter()
                    .all(|p| eval(p).mod_floor(&bi(4)) == bi(0))
                {
                    continue;
                }
                let reduces = (0..4i64).any(|c| {
                    image_basis.iter().all(|p| {
                        (eval(p) - bi(c) * p.euler()).mod_floor(&bi(4)) == bi(0)
                    })
                });
                assert!(
                    reduces,
                    "complex dimension {n}: a mod-4 invariant escapes the Euler generator"
                );
            }
        }

        // The genus-relation functionals vanish on the diagonal.
        for n in 1..=5u32 {
            for p in 0..hodge::hir_rank(n) as u32 {
                let mut f = classify::chi_p_functional(n, p, FunctionalDomain::Rational);
                for (mu, c) in partitions(n)
                    .into_iter()
                    .zip(bordism::todd_chern_coefficients(n, p).unwrap())
                {
                    f = f.with_chern(&mu, -c);
                }
                let r = classify_mixed(&f).unwrap();
                assert!(r.trivial, "χ_{p} − Td_{p} in degree {n}");
            }
        }
    });
}

#[test]
fn criterion_7_presentation_spot_check() {
    criterion("7 presentation elimination in degrees 4..7 (exact)", || {
        for i in 3..=6u32 {
            let beta = HodgePolynomial::cp(i);
            let p_i = hodge::decompose_els_default(&beta).unwrap();
            let expanded = hodge::expand_els(&p_i, &HodgePolynomial::cp(2)).unwrap();
            assert_eq!(expanded, beta, "P_{i} reproduces the Hodge data");

            let mut p_i_bordism = BordismClassQ::zero(i);
            for (m, s) in p_i.terms() {
                if m.exp(0) >= 1 {
                    continue;
                }
                let mut lambda = vec![1u32; m.exp(1) as usize];
                lambda.extend(std::iter::repeat_n(2, m.exp(2) as usize));
                p_i_bordism = p_i_bordism
                    .add(
                        &BordismClassQ::monomial(&lambda).scalar_mul(
                            &BigRational::from_integer(s.as_int().unwrap().clone()),
                        ),
                    )
                    .unwrap();
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
            // And the zero class lies in every ideal piece, trivially.
            assert!(chernhodge::ch_ideal_q(chernhodge::ChIdeal::Birational, i + 1)
                .contains(&element)
                .unwrap());
        }
    });
}

// ---------------------------------------------------------------------
// Criterion 8: the independent characteristic-number oracle.
//
// Direct multinomial expansion: a Chern number c_μ[ℂP^λ] is the sum over
// all ways of writing the top cell λ as a componentwise sum of one
// multi-index per part of μ, of the product of binomial coefficients
// binom(λ_j + 1, e_j) — one factor per coordinate of each multi-index.
// The Pontryagin variant uses binom(λ_j + 1, e_j / 2) on even entries.
// No truncated-ring arithmetic is involved.
// ---------------------------------------------------------------------

fn binom(n: u32, k: u32) -> BigInt {
    if k > n {
        return bi(0);
    }
    let mut v = bi(1);
    for i in 0..k {
        v = v * bi((n - i) as i64) / bi((i + 1) as i64);
    }
    v
}

/// Enumerate multi-indices e ≤ cap with |e| = total, invoking the visitor
/// with each.
fn visit_multi_indices(cap: &[u32], total: u32, f: &mut impl FnMut(&[u32])) {
    fn rec(cap: &[u32], pos: usize, left: u32, cur: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if pos == cap.len() {
            if left == 0 {
                f(cur);
            }
            return;
        }
        for e in 0..=cap[pos].min(left) {
            cur.push(e);
            rec(cap, pos + 1, left - e, cur, f);
            cur.pop();
        }
    }
    rec(cap, 0, total, &mut Vec::new(), f);
}

fn oracle_char_number(lambda: &[u32], mu: &[u32], pontryagin: bool) -> BigInt {
    // Distribute the top cell over the parts of mu.
    fn rec(
        lambda: &[u32],
        mu: &[u32],
        part: usize,
        remaining: &[u32],
        pontryagin: bool,
    ) -> BigInt {
        if part == mu.len() {
            return if remaining.iter().all(|&r| r == 0) {
                bi(1)
            } else {
                bi(0)
            };
        }
        let degree = if pontryagin { 2 * mu[part] } else { mu[part] };
        let mut total = bi(0);
        visit_multi_indices(remaining, degree, &mut |e| {
            let mut weight = bi(1);
            for (j, &ej) in e.iter().enumerate() {
                let c = if pontryagin {
                    if ej % 2 == 1 {
                        bi(0)
                    } else {
                        binom(lambda[j] + 1, ej / 2)
                    }
                } else {
                    binom(lambda[j] + 1, ej)
                };
                weight *= c;
                if weight == bi(0) {
                    break;
                }
            }
            if weight != bi(0) {
                let next: Vec<u32> = remaining.iter().zip(e).map(|(r, x)| r - x).collect();
                total += weight * rec(lambda, mu, part + 1, &next, pontryagin);
            }
        });
        total
    }
    rec(lambda, mu, 0, lambda, pontryagin)
}

#[test]
fn criterion_8_characteristic_number_oracle() {
    criterion("8 characteristic numbers against the expansion oracle (exact)", || {
        for n in 0..=4u32 {
            for lambda in partitions(n) {
                let computed = chern_numbers(&lambda);
                for mu in partitions(n) {
                    assert_eq!(
                        computed.get(&mu).unwrap(),
                        &oracle_char_number(&lambda, &mu, false),
                        "Chern number λ={lambda:?} μ={mu:?}"
                    );
                }
                if n % 2 == 0 {
                    let computed = pontryagin_numbers(&lambda);
                    for nu in partitions(n / 2) {
                        assert_eq!(
                            computed.get(&nu).unwrap(),
                            &oracle_char_number(&lambda, &nu, true),
                            "Pontryagin number λ={lambda:?} ν={nu:?}"
                        );
                    }
                }
                // The top Chern number counts cells.
                if n > 0 {
                    let expected: BigInt =
                        lambda.iter().map(|&k| bi(k as i64 + 1)).product();
                    assert_eq!(computed.get(&[n]).unwrap(), &expected, "{lambda:?}");
                }
            }
        }
    });
}
