use cartan_core::SymmetrizedCartan;
use proptest::prelude::*;
use yt_algebra::parse::{parse_element, parse_monomial, parse_tpoly};
use yt_algebra::{AMonomial, Algebra, BasisMonomial, TPoly, YtElement};

fn alg(name: &str) -> Algebra {
    Algebra::from_cartan(SymmetrizedCartan::named(name).unwrap())
}

fn y(i: usize, l: i32) -> BasisMonomial {
    BasisMonomial::y(i, l)
}

/// The sl2 table: `Ỹ_l Ỹ_k = t^{s(l-k)} :Ỹ_l Ỹ_k:`.
fn sl2_s(d: i32) -> i64 {
    if d == 0 {
        -1
    } else if d % 2 != 0 || d > 0 {
        0
    } else {
        let r = d / 2;
        2 * if (r + 1) % 2 == 0 { 1 } else { -1 }
    }
}

#[test]
fn sl2_bicharacter_table() {
    let a = alg("A1");
    for l in -8..=8 {
        for k in -8..=8 {
            assert_eq!(a.bicharacter_n(&y(0, l), &y(0, k)), sl2_s(l - k), "l={l} k={k}");
        }
    }
    assert_eq!(a.bicharacter_n(&y(0, 3), &y(0, 3)), -1);
    assert_eq!(a.bicharacter_n(&y(0, 3), &y(0, 5)), 2);
    let ainv = a.a_expand_inv(0, 4);
    assert_eq!(a.bicharacter_n(&ainv, &ainv), 0);
}

#[test]
fn sl2_gamma_values() {
    let a = alg("A1");
    for l in -5..5 {
        assert_eq!(a.gamma(0, l, 0, l), 0);
        assert_eq!(a.gamma(0, l, 0, l - 2), -2);
        assert_eq!(a.gamma(0, l, 0, l - 1), 0);
        assert_eq!(a.gamma(0, l, 0, l + 1), 0);
    }
    // Ỹ_l Ỹ_l = t^{-1} :Ỹ_l^2:
    let sq = a.multiply(&YtElement::y(0, 2), &YtElement::y(0, 2));
    assert_eq!(sq, YtElement::from_term(BasisMonomial::y_pow(0, 2, 2), TPoly::power(-1)));
}

#[test]
fn commutation_exponents_match_bicharacter() {
    for name in ["A1", "A2", "A3", "B2", "C3", "G2", "D4", "B3"] {
        let a = alg(name);
        let n = a.rank();
        for i in 0..n {
            for j in 0..n {
                for d in -14..=14 {
                    let g = a.gamma(i, d, j, 0);
                    assert_eq!(g, -a.gamma(j, 0, i, d), "{name} antisymmetry");
                    let via_n = a.bicharacter_n(&y(i, d), &y(j, 0)) - a.bicharacter_n(&y(j, 0), &y(i, d));
                    assert_eq!(g, via_n, "{name} gamma i={i} j={j} d={d}");

                    let ai = a.a_expand_inv(i, d);
                    let aj = a.a_expand_inv(j, 0);
                    let alpha_n = a.bicharacter_n(&ai, &aj) - a.bicharacter_n(&aj, &ai);
                    assert_eq!(a.alpha(i, d, j, 0), alpha_n, "{name} alpha i={i} j={j} d={d}");

                    let ap = a.a_expand(i, d);
                    let yj = y(j, 0);
                    let beta_n = a.bicharacter_n(&ap, &yj) - a.bicharacter_n(&yj, &ap);
                    assert_eq!(a.beta(i, d, j, 0), beta_n, "{name} beta i={i} j={j} d={d}");
                }
            }
        }
    }
}

#[test]
fn closed_form_examples() {
    let b2 = alg("B2");
    assert_eq!(b2.alpha(0, 3, 0, 5), 2);
    assert_eq!(b2.alpha(1, 3, 1, 7), 2);
    assert_eq!(b2.beta(0, 4, 0, 3), -2);
    assert_eq!(b2.beta(1, 4, 1, 2), -2);
    let a1a1 = alg("A1xA1");
    for d in -6..6 {
        assert_eq!(a1a1.alpha(0, d, 1, 0), 0);
        assert_eq!(a1a1.gamma(0, d, 1, 0), 0);
    }
}

#[test]
fn a_expansions() {
    let a1 = alg("A1");
    assert_eq!(a1.a_expand(0, 3), BasisMonomial::from_factors([(0, 2, 1), (0, 4, 1)]));
    let b2 = alg("B2");
    assert_eq!(
        b2.a_expand(0, 5),
        BasisMonomial::from_factors([(0, 4, 1), (0, 6, 1), (1, 5, -1)])
    );
    assert_eq!(
        b2.a_expand(1, 5),
        BasisMonomial::from_factors([(1, 3, 1), (1, 7, 1), (0, 4, -1), (0, 6, -1)])
    );
    let g2 = alg("G2");
    assert_eq!(
        g2.a_expand(1, 0),
        BasisMonomial::from_factors([(1, -3, 1), (1, 3, 1), (0, -2, -1), (0, 0, -1), (0, 2, -1)])
    );
    assert_eq!(
        g2.a_expand(0, 0),
        BasisMonomial::from_factors([(0, -1, 1), (0, 1, 1), (1, 0, -1)])
    );
}

#[test]
fn a_monomials_are_basis_elements_with_trivial_self_pairing() {
    for name in ["A1", "A3", "B2", "C3", "G2", "F4", "D4"] {
        let a = alg(name);
        for i in 0..a.rank() {
            let m = a.a_expand(i, 0);
            assert_eq!(a.bicharacter_n(&m, &m), 0, "{name} node {i}");
        }
    }
}

#[test]
fn factorization_and_order() {
    let a = alg("A1");
    let top = BasisMonomial::from_factors([(0, 0, 1), (0, 2, 1)]);
    let low = BasisMonomial::from_factors([(0, 0, 1), (0, 4, -1)]);
    let f = a.factor_over_a(&low, &top).unwrap();
    assert_eq!(f, AMonomial::from_factors([(0, 3, 1)]));
    assert!(a.factor_over_a(&top, &top).unwrap().is_empty());
    assert!(a.factor_over_a(&y(0, 1), &y(0, 0)).is_none());
    let y2inv = BasisMonomial::y_pow(0, 2, -1);
    assert!(a.leq(&y2inv, &y(0, 0)));
    assert!(!a.leq(&y(0, 0), &y2inv));
    assert!(y2inv.right_negative());
    assert!(!y(0, 0).right_negative());
    assert!(y(0, 0).is_dominant());

    let b2 = alg("B2");
    let m = BasisMonomial::from_factors([(1, 0, 1), (0, 5, 1)]);
    let v = AMonomial::from_factors([(1, 2, 1), (0, 4, 1)]);
    let low = m.mul(&b2.a_monomial(&v));
    assert_eq!(b2.factor_over_a(&low, &m), Some(v));
    assert_eq!(b2.a_depth(&low, &m), 2);
}

#[test]
fn bar_examples() {
    let a = alg("A1");
    assert_eq!(a.bar(&YtElement::from_term(BasisMonomial::one(), TPoly::power(1))),
               YtElement::from_term(BasisMonomial::one(), TPoly::power(-1)));
    let ainv = YtElement::from_monomial(a.a_expand_inv(0, 1));
    assert_eq!(a.bar(&ainv), ainv);
    assert_eq!(a.bar(&YtElement::y(0, 3)), YtElement::y(0, 3).shift_t(-1));
}

#[test]
fn bar_of_generators_matches_series_closed_form() {
    for name in ["A2", "B2", "G2", "C3"] {
        let a = alg(name);
        let c = a.cartan().clone();
        for i in 0..a.rank() {
            let ri = c.r(i);
            // π_0(-C̃_{i,i}(z)(z^{r_i} - z^{-r_i}))
            let expect = -c.series().coeff(i, i, -ri) + c.series().coeff(i, i, ri);
            let got = a.bar(&YtElement::y(i, 5));
            assert_eq!(got, YtElement::y(i, 5).shift_t(expect as i32), "{name}");
            let ainv = YtElement::from_monomial(a.a_expand_inv(i, 2));
            assert_eq!(a.bar(&ainv), ainv);
        }
    }
}

#[test]
fn varagnolo_vasserot_epsilon() {
    let a = alg("A1");
    for l in -6..=6 {
        let eps = a.vv_epsilon(0, l, 0, 0).unwrap() - a.vv_epsilon_prime(0, l, 0, 0).unwrap();
        assert_eq!(eps, a.bicharacter_n(&y(0, l), &y(0, 0)));
    }
    assert!(alg("B2").vv_epsilon(0, 0, 0, 0).is_err());
    assert!(alg("G2").d_bicharacter((&y(0, 0), &AMonomial::default()), (&y(0, 0), &AMonomial::default())).is_err());
}

#[test]
fn prop_form_counterexample_in_a2() {
    // 𝒩_t of two A^{-1} factors is odd here, so it cannot equal 2d.
    let a = alg("A2");
    let v1 = AMonomial::from_factors([(0, 1, 1)]);
    let v2 = AMonomial::from_factors([(1, 0, 1)]);
    let lhs = a.nt_bicharacter(&a.a_monomial(&v1), &a.a_monomial(&v2));
    assert_eq!(lhs, 3);
    let one = BasisMonomial::one();
    assert_eq!(a.d_bicharacter((&one, &v1), (&one, &v2)).unwrap(), 1);
}

#[test]
fn nt_of_words() {
    let a = alg("A2");
    assert_eq!(a.nt_exponent(&[(0, 0, 1), (1, 1, 1), (0, 2, -1)]), 0);
    // Ỹ_2 Ỹ_0 = t^{-2} Ỹ_0 Ỹ_2 in sl2
    let s = alg("A1");
    assert_eq!(s.nt_exponent(&[(0, 2, 1), (0, 0, 1)]), -2);
    assert_eq!(s.nt_bicharacter(&y(0, 2), &y(0, 0)), -2);
    // Prop "form" proof: 𝒩_t(Y_{i,l}, A_{i,l-1}^{-1}) = 2
    assert_eq!(a.nt_bicharacter(&y(0, 3), &a.a_expand_inv(0, 2)), 2);
    assert_eq!(a.nt_bicharacter(&a.a_expand_inv(0, 4), &a.a_expand_inv(0, 2)), -2);
}

#[test]
fn parsing() {
    let a = alg("B2");
    let (tp, m) = parse_monomial("t^2 Y[1,0] Y[2,3]^-1 A[1,5]^-1", &a).unwrap();
    assert_eq!(tp, 2);
    assert_eq!(
        m,
        BasisMonomial::from_factors([(0, 0, 1), (1, 3, -1)]).mul(&a.a_expand_inv(0, 5))
    );
    assert!(parse_monomial("A[1,1]^2", &a).is_err());
    assert!(parse_monomial("Y[3,0]", &a).is_err());
    assert!(parse_monomial("Y[0]", &a).is_err());
    let s = alg("A1");
    assert_eq!(parse_monomial("Y[0]^2 Y[2]", &s).unwrap().1, BasisMonomial::from_factors([(0, 0, 2), (0, 2, 1)]));
    assert_eq!(parse_tpoly("1 + t^-2").unwrap(), TPoly::from_terms([(0, 1), (-2, 1)]));
    assert_eq!(parse_tpoly("-2t + 3t^-1 - 1").unwrap(), TPoly::from_terms([(1, -2), (-1, 3), (0, -1)]));
}

fn arb_monomial(rank: usize) -> impl Strategy<Value = BasisMonomial> {
    proptest::collection::vec((0..rank, -4i32..8, -2i32..3), 0..4)
        .prop_map(BasisMonomial::from_factors)
}

fn arb_poly() -> impl Strategy<Value = TPoly> {
    proptest::collection::vec((-3i32..4, -2i64..3), 1..3).prop_map(TPoly::from_terms)
}

fn arb_element(rank: usize) -> impl Strategy<Value = YtElement> {
    proptest::collection::vec((arb_monomial(rank), arb_poly()), 0..4)
        .prop_map(|v| v.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(x in arb_element(2), y in arb_element(2), z in arb_element(2)) {
        let a = alg("B2");
        let l = a.multiply(&a.multiply(&x, &y), &z);
        let r = a.multiply(&x, &a.multiply(&y, &z));
        prop_assert_eq!(l, r);
    }

    #[test]
    fn commutative_at_t1(x in arb_element(2), y in arb_element(2)) {
        let a = alg("G2");
        let xy = a.multiply(&x, &y).at_t1();
        let yx = a.multiply(&y, &x).at_t1();
        prop_assert_eq!(xy, yx);
    }

    #[test]
    fn bar_is_antimultiplicative_involution(x in arb_element(2), y in arb_element(2)) {
        let a = alg("B2");
        prop_assert_eq!(a.bar(&a.bar(&x)), x.clone());
        prop_assert_eq!(a.bar(&a.multiply(&x, &y)), a.multiply(&a.bar(&y), &a.bar(&x)));
    }

    #[test]
    fn bicharacter_is_biadditive(m1 in arb_monomial(3), m2 in arb_monomial(3), m3 in arb_monomial(3)) {
        let a = alg("C3");
        prop_assert_eq!(a.bicharacter_n(&m1.mul(&m2), &m3), a.bicharacter_n(&m1, &m3) + a.bicharacter_n(&m2, &m3));
        prop_assert_eq!(a.bicharacter_n(&m3, &m1.mul(&m2)), a.bicharacter_n(&m3, &m1) + a.bicharacter_n(&m3, &m2));
    }

    #[test]
    fn self_pairing_parity_is_preserved(m in arb_monomial(2), v in proptest::collection::vec((0usize..2, -3i32..6, 1u32..3), 0..4)) {
        let a = alg("G2");
        let low = m.mul(&a.a_monomial(&AMonomial::from_factors(v)));
        prop_assert_eq!((a.bicharacter_n(&low, &low) - a.bicharacter_n(&m, &m)).rem_euclid(2), 0);
    }

    #[test]
    fn factor_over_a_inverts_expansion(m in arb_monomial(2), v in proptest::collection::vec((0usize..2, -3i32..6, 1u32..3), 0..4)) {
        let a = alg("B2");
        let v = AMonomial::from_factors(v);
        let low = m.mul(&a.a_monomial(&v));
        prop_assert_eq!(a.factor_over_a(&low, &m), Some(v.clone()));
        prop_assert_eq!(a.a_depth(&low, &m), v.depth() as i64);
    }

    #[test]
    fn prop_form_on_sl2(
        y1 in arb_monomial(1), y2 in arb_monomial(1),
        v1 in proptest::collection::vec((0usize..1, -3i32..6, 1u32..3), 0..3),
        v2 in proptest::collection::vec((0usize..1, -3i32..6, 1u32..3), 0..3),
    ) {
        let a = alg("A1");
        let (v1, v2) = (AMonomial::from_factors(v1), AMonomial::from_factors(v2));
        let m1 = y1.mul(&a.a_monomial(&v1));
        let m2 = y2.mul(&a.a_monomial(&v2));
        let lhs = a.nt_bicharacter(&m1, &m2);
        let rhs = a.nt_bicharacter(&y1, &y2) + 2 * a.d_bicharacter((&y1, &v1), (&y2, &v2)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn nt_bicharacter_from_words(m1 in arb_monomial(2), m2 in arb_monomial(2)) {
        let a = alg("B2");
        let w1: Vec<_> = m1.factors().collect();
        let w2: Vec<_> = m2.factors().collect();
        let both: Vec<_> = w1.iter().chain(w2.iter()).copied().collect();
        prop_assert_eq!(a.nt_exponent(&both) - a.nt_exponent(&w1) - a.nt_exponent(&w2), a.nt_bicharacter(&m1, &m2));
    }

    #[test]
    fn element_text_round_trip(x in arb_element(2)) {
        let a = alg("B2");
        let printed = x.to_string();
        prop_assert_eq!(parse_element(&printed, &a).unwrap(), x);
    }
}

#[test]
fn expressions() {
    use yt_algebra::parse::parse_expression;
    let a = alg("A1");
    let x = parse_expression("Y[0] (1 + t A[1]^-1)", &a).unwrap();
    let want = YtElement::y(0, 0).add(&YtElement::from_monomial(BasisMonomial::y_pow(0, 2, -1)));
    assert_eq!(x, want);
    let y = parse_expression(":Y[2] Y[0]: - 2 t^-1 + (Y[0])(Y[0])", &a).unwrap();
    let mut want = YtElement::from_monomial(BasisMonomial::from_factors([(0, 0, 1), (0, 2, 1)]));
    want.add_term(BasisMonomial::one(), &TPoly::monomial(-2, -1));
    want.add_term(BasisMonomial::y_pow(0, 0, 2), &TPoly::power(-1));
    assert_eq!(y, want);
    assert!(parse_expression("(Y[0]", &a).is_err());
    assert!(parse_expression("A[1]^2", &a).is_err());
}
