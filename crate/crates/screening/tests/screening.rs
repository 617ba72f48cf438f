use cartan_core::SymmetrizedCartan;
use screening::{screening_coefficient, Screening};
use std::sync::Arc;
use yt_algebra::parse::parse_monomial;
use yt_algebra::{Algebra, BasisMonomial, TPoly, YtElement};

fn scr(name: &str) -> Screening {
    Screening::new(Arc::new(Algebra::from_cartan(SymmetrizedCartan::named(name).unwrap())))
}

fn mono(s: &Screening, text: &str) -> BasisMonomial {
    let (tp, m) = parse_monomial(text, s.algebra()).unwrap();
    assert_eq!(tp, 0);
    m
}

/// `Σ_{k<u} t^{2k}`, or its negative counterpart, by direct division.
fn coefficient_oracle(u: i32) -> TPoly {
    let num = &TPoly::power(2 * u) - &TPoly::one();
    // divide by t^2 - 1 from the top
    let mut rest = num;
    let mut q = Vec::new();
    while !rest.is_zero() {
        let top = rest.max_exp().unwrap();
        let c = rest.coeff(top);
        q.push((top - 2, c));
        let sub = &TPoly::monomial(c, top - 2) * &(&TPoly::power(2) - &TPoly::one());
        rest = &rest - &sub;
    }
    TPoly::from_terms(q)
}

#[test]
fn screening_coefficients() {
    for u in -6..=6 {
        assert_eq!(screening_coefficient(u), coefficient_oracle(u), "u={u}");
    }
}

#[test]
fn sl2_screening_examples() {
    let s = scr("A1");
    let v = s.s_it(0, &YtElement::y(0, 0));
    assert_eq!(v.component(0), YtElement::y(0, 0));
    assert!(v.component(-1).is_zero());
    assert!(!s.in_kernel(0, &YtElement::y(0, 0)));
    let fund = YtElement::y(0, 0).add(&YtElement::from_monomial(BasisMonomial::y_pow(0, 2, -1)));
    assert!(s.in_kernel(0, &fund));
    assert!(s.in_kernel(0, &YtElement::one()));

    let a2 = scr("A2");
    assert!(a2.s_it(0, &YtElement::y(1, 3)).is_zero());
}

#[test]
fn a2_fundamental_is_in_both_kernels() {
    let s = scr("A2");
    let e = ["Y[1,0]", "Y[1,2]^-1 Y[2,1]", "Y[2,3]^-1"]
        .iter()
        .map(|t| YtElement::from_monomial(mono(&s, t)))
        .fold(YtElement::zero(), |a, b| a.add(&b));
    assert!(s.in_kernel_all(&e));
}

#[test]
fn e_it_examples() {
    let s = scr("A1");
    let e = s.e_it(0, &BasisMonomial::y(0, 0)).unwrap();
    assert_eq!(e, YtElement::y(0, 0).add(&YtElement::from_monomial(BasisMonomial::y_pow(0, 2, -1))));

    let b2 = scr("B2");
    let alg = b2.algebra();
    let y20 = BasisMonomial::y(1, 0);
    let want = YtElement::y(1, 0).add(
        &alg.multiply(&YtElement::y(1, 0), &YtElement::from_monomial(alg.a_expand_inv(1, 2)))
            .shift_t(1),
    );
    assert_eq!(b2.e_it(1, &y20).unwrap(), want);
    assert_eq!(b2.e_it(0, &y20).unwrap(), YtElement::y(1, 0));
    assert!(b2.e_it(1, &BasisMonomial::y_pow(1, 0, -1)).is_err());
}

#[test]
fn f_it_examples() {
    let s = scr("A1");
    let m = mono(&s, "Y[0] Y[2] Y[4]");
    let f = s.f_it(0, &m).unwrap();
    assert_eq!(f, s.sl2().ft_segment(&sl2_engine::Segment::new(0, 3)));
    assert_eq!(f.len(), 4);

    let a2 = scr("A2");
    let y = BasisMonomial::y(1, 4);
    assert_eq!(a2.f_it(0, &y).unwrap(), YtElement::y(1, 4));
}

#[test]
fn b2_bracket_from_the_appendix() {
    let s = scr("B2");
    let alg = s.algebra();
    let m = mono(&s, "Y[1,1] Y[1,3] Y[2,4]^-1");
    let f = s.f_it(0, &m).unwrap();
    let a4 = YtElement::from_monomial(alg.a_expand_inv(0, 4));
    let a2 = YtElement::from_monomial(alg.a_expand_inv(0, 2));
    let bracket = YtElement::one()
        .add(&a4.shift_t(1))
        .add(&alg.multiply(&a4, &a2).shift_t(2));
    let want = alg.multiply(&YtElement::from_monomial(m), &bracket);
    assert_eq!(f, want);
}

fn i_dominant_monomials(rank: usize, i: usize, max_level: i32) -> Vec<BasisMonomial> {
    // up to three factors; exponents of node i are positive, others ±1
    let mut gens = Vec::new();
    for j in 0..rank {
        for l in 0..=max_level {
            gens.push((j, l, 1));
            if j != i {
                gens.push((j, l, -1));
            }
        }
    }
    let mut out = Vec::new();
    for a in 0..gens.len() {
        out.push(BasisMonomial::from_factors([gens[a]]));
        for b in a..gens.len() {
            out.push(BasisMonomial::from_factors([gens[a], gens[b]]));
            if (a + b) % 7 == 0 {
                for c in (b..gens.len()).step_by(5) {
                    out.push(BasisMonomial::from_factors([gens[a], gens[b], gens[c]]));
                }
            }
        }
    }
    out.retain(|m| m.is_i_dominant(i));
    out.sort();
    out.dedup();
    out
}

#[test]
fn e_and_f_are_in_the_kernel() {
    for name in ["A1", "A2", "B2", "G2", "A3", "B3"] {
        let s = scr(name);
        let alg = s.algebra().clone();
        for i in 0..alg.rank() {
            for m in i_dominant_monomials(alg.rank(), i, 10) {
                let e = s.e_it(i, &m).unwrap();
                assert!(s.in_kernel(i, &e), "{name} E_{i}({m})");
                let f = s.f_it(i, &m).unwrap();
                assert!(s.in_kernel(i, &f), "{name} F_{i}({m})");
                assert_eq!(f.coeff(&m), TPoly::one());
                for x in f.monomials() {
                    assert!(x == &m || !x.is_i_dominant(i), "{name} F_{i}({m}) has {x}");
                    assert!(alg.leq(x, &m), "{name} {x} not below {m}");
                }
                let (blocks, res) = s.e_it_over_f_it(i, &m).unwrap();
                assert!(res.is_zero(), "{name} {m}");
                assert_eq!(blocks[0], (m.clone(), TPoly::one()));
            }
        }
    }
}

#[test]
fn lift_preserves_alpha() {
    let sl2 = Algebra::from_cartan(SymmetrizedCartan::named("A1").unwrap());
    for name in ["B2", "G2", "C3"] {
        let alg = Algebra::from_cartan(SymmetrizedCartan::named(name).unwrap());
        for i in 0..alg.rank() {
            let r = alg.r(i);
            for k in 0..r {
                for l in -6..=6 {
                    for l2 in -6..=6 {
                        assert_eq!(
                            sl2.alpha(0, l, 0, l2),
                            alg.alpha(i, k + l * r, i, k + l2 * r),
                            "{name} node {i} residue {k}"
                        );
                    }
                }
            }
        }
    }
}
