//! Deformed screening operators `S_{i,t}` and the kernel elements
//! `E_{i,t}(m)`, `F_{i,t}(m)`.

use sl2_engine::{Sl2Engine, Sl2Error};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};
use thiserror::Error;
use yt_algebra::{AMonomial, Algebra, BasisMonomial, Level, Node, TPoly, YtElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScreeningError {
    #[error("monomial {monomial} is not dominant for node {node}")]
    NotIDominant { node: Node, monomial: String },
    #[error(transparent)]
    Sl2(#[from] Sl2Error),
}

/// `Σ_l λ_l S̃_{i,l}` over the canonical indices `-r_i <= l < r_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScreeningVector {
    pub node: Node,
    comps: BTreeMap<Level, YtElement>,
}

impl ScreeningVector {
    pub fn zero(node: Node) -> Self {
        ScreeningVector {
            node,
            comps: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.values().all(|x| x.is_zero())
    }

    pub fn component(&self, l: Level) -> YtElement {
        self.comps.get(&l).cloned().unwrap_or_default()
    }

    pub fn components(&self) -> impl Iterator<Item = (Level, &YtElement)> {
        self.comps.iter().map(|(l, x)| (*l, x))
    }

    fn add_at(&mut self, l: Level, x: &YtElement) {
        let slot = self.comps.entry(l).or_default();
        *slot = slot.add(x);
        if slot.is_zero() {
            self.comps.remove(&l);
        }
    }
}

/// `(t^{2u} - 1)/(t^2 - 1)`.
pub fn screening_coefficient(u: i32) -> TPoly {
    if u > 0 {
        TPoly::from_terms((0..u).map(|k| (2 * k, 1)))
    } else {
        TPoly::from_terms((u..0).map(|k| (2 * k, -1)))
    }
}

/// Screening operators and kernel elements over a fixed algebra.
pub struct Screening {
    alg: Arc<Algebra>,
    sl2: Sl2Engine,
    fit_cache: Mutex<HashMap<(Node, BasisMonomial), YtElement>>,
}

impl Screening {
    pub fn new(alg: Arc<Algebra>) -> Self {
        Screening {
            alg,
            sl2: Sl2Engine::new(),
            fit_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn sl2(&self) -> &Sl2Engine {
        &self.sl2
    }

    /// `S_{i,t}(x)` reduced to the canonical window.
    pub fn s_it(&self, i: Node, x: &YtElement) -> ScreeningVector {
        let alg = &*self.alg;
        let r = alg.r(i);
        let mut out = ScreeningVector::zero(i);
        for (m, p) in x.terms() {
            for (j, l, u) in m.factors() {
                if j != i {
                    continue;
                }
                let mut coeff = YtElement::from_term(m.clone(), &screening_coefficient(u) * p);
                let mut l = l;
                while l >= r {
                    let a = YtElement::from_monomial(alg.a_expand(i, l - r));
                    coeff = alg.multiply(&coeff, &a).shift_t(1);
                    l -= 2 * r;
                }
                while l < -r {
                    let a = YtElement::from_monomial(alg.a_expand_inv(i, l + r));
                    coeff = alg.multiply(&coeff, &a).shift_t(-1);
                    l += 2 * r;
                }
                out.add_at(l, &coeff);
            }
        }
        out
    }

    pub fn in_kernel(&self, i: Node, x: &YtElement) -> bool {
        self.s_it(i, x).is_zero()
    }

    pub fn in_kernel_all(&self, x: &YtElement) -> bool {
        (0..self.alg.rank()).all(|i| self.in_kernel(i, x))
    }

    fn check(&self, i: Node, m: &BasisMonomial) -> Result<(), ScreeningError> {
        if m.is_i_dominant(i) {
            Ok(())
        } else {
            Err(ScreeningError::NotIDominant {
                node: i,
                monomial: m.to_string(),
            })
        }
    }

    /// `Ỹ_{j,l}^{e}` as an element, for any sign of `e`.
    fn generator_power(&self, j: Node, l: Level, e: i32) -> YtElement {
        let g = if e > 0 {
            YtElement::y(j, l)
        } else {
            let y = BasisMonomial::y(j, l);
            let n = self.alg.bicharacter_n(&y, &y) as i32;
            YtElement::from_term(y.inverse(), TPoly::power(n))
        };
        self.alg.power(&g, e.unsigned_abs())
    }

    /// Ordered product over increasing levels of
    /// `(Ỹ_{i,l}(1 + t Ã_{i,l+r_i}^{-1}))^{u_{i,l}} ∏_{j≠i} Ỹ_{j,l}^{u_{j,l}}`,
    /// rescaled so that `:m:` has coefficient 1.
    pub fn e_it(&self, i: Node, m: &BasisMonomial) -> Result<YtElement, ScreeningError> {
        self.check(i, m)?;
        let alg = &*self.alg;
        let r = alg.r(i);
        let mut acc = YtElement::one();
        for (j, l, e) in m.factors() {
            let f = if j == i {
                let a = YtElement::from_term(alg.a_expand_inv(i, l + r), TPoly::power(1));
                let y = YtElement::y(i, l);
                let f = y.add(&alg.multiply(&y, &a));
                alg.power(&f, e as u32)
            } else {
                self.generator_power(j, l, e)
            };
            acc = alg.multiply(&acc, &f);
        }
        Ok(normalize_top(acc, m))
    }

    /// The unique element of the `i`-th kernel with `m` as its only
    /// `i`-dominant monomial.
    ///
    /// For each residue `k mod r_i` the sl2 shadow `ω_k` is computed, its
    /// `F_t` rewritten as a polynomial in ordered `Ã^{-1}` words, and the words
    /// relabeled by `Ã_l^{-1} ↦ Ã_{i,k+l r_i}^{-1}`.
    pub fn f_it(&self, i: Node, m: &BasisMonomial) -> Result<YtElement, ScreeningError> {
        self.check(i, m)?;
        let Some(low) = m.min_level() else {
            return Ok(YtElement::one());
        };
        let key = (i, m.shift(-low));
        if let Some(x) = self.fit_cache.lock().unwrap().get(&key) {
            return Ok(x.shift_levels(low));
        }
        let m0 = &key.1;
        let r = self.alg.r(i);
        let mut out = YtElement::from_monomial(m0.clone());
        for k in 0..r {
            let omega = shadow(m0, i, k, r);
            if omega.is_one() {
                continue;
            }
            let chi = self.lift(&omega, i, k, r)?;
            out = self.alg.multiply(&out, &chi);
        }
        self.fit_cache.lock().unwrap().insert(key, out.clone());
        Ok(out.shift_levels(low))
    }

    /// `ν_{k,t}(χ_k)` for the shadow `ω`.
    fn lift(&self, omega: &BasisMonomial, i: Node, k: Level, r: Level) -> Result<YtElement, ScreeningError> {
        let sl2 = self.sl2.algebra();
        let ft = self.sl2.ft_sl2(omega)?;
        let mut chi = YtElement::zero();
        for (mono, p) in ft.terms() {
            let v = sl2
                .factor_over_a(mono, omega)
                .expect("sl2 F_t lies below its highest monomial");
            let (w_sl2, w_gen) = (ordered_a_word(sl2, &v, |l| (0, l)), ordered_a_word(&self.alg, &v, |l| (i, k + l * r)));
            let ainv = sl2.a_monomial(&v);
            let e = -sl2.bicharacter_n(omega, &ainv) - sl2.word_exponent(&w_sl2) + self.alg.word_exponent(&w_gen);
            let lifted = BasisMonomial::from_factors(
                w_gen.iter().flat_map(|g| g.factors().collect::<Vec<_>>()),
            );
            chi.add_term(lifted, &p.shift(e as i32));
        }
        Ok(chi)
    }

    /// Writes `e_it(i, m)` as `Σ λ F_{i,t}(m')` over the `i`-dominant
    /// monomials of `e_it(i, m)`; the residual must vanish.
    pub fn e_it_over_f_it(
        &self,
        i: Node,
        m: &BasisMonomial,
    ) -> Result<(Vec<(BasisMonomial, TPoly)>, YtElement), ScreeningError> {
        let mut res = self.e_it(i, m)?;
        let mut out = Vec::new();
        loop {
            let next = res
                .terms()
                .filter(|(d, _)| d.is_i_dominant(i))
                .max_by_key(|(d, _)| (self.alg.height(d), std::cmp::Reverse((*d).clone())))
                .map(|(d, c)| (d.clone(), c.clone()));
            let Some((d, c)) = next else { break };
            let f = self.f_it(i, &d)?;
            res = res.sub(&f.scale(&c));
            out.push((d, c));
        }
        Ok((out, res))
    }
}

/// `ω_k(m) = ∏_q Y_q^{u_{i,k+q r_i}(m)}`.
pub fn shadow(m: &BasisMonomial, i: Node, k: Level, r: Level) -> BasisMonomial {
    BasisMonomial::from_factors(
        m.factors()
            .filter(|&(j, l, _)| j == i && (l - k).rem_euclid(r) == 0)
            .map(|(_, l, e)| (0, (l - k).div_euclid(r), e)),
    )
}

/// The `Ã^{-1}` factors of `v` as basis elements, levels increasing.
fn ordered_a_word(alg: &Algebra, v: &AMonomial, relabel: impl Fn(Level) -> (Node, Level)) -> Vec<BasisMonomial> {
    let mut factors: Vec<(Level, u32)> = v.entries().iter().map(|&(_, l, e)| (l, e)).collect();
    factors.sort();
    factors
        .into_iter()
        .flat_map(|(l, e)| {
            let (j, l2) = relabel(l);
            std::iter::repeat(alg.a_expand_inv(j, l2)).take(e as usize)
        })
        .collect()
}

fn normalize_top(x: YtElement, m: &BasisMonomial) -> YtElement {
    let c = x.coeff(m);
    assert!(c.len() == 1 && c.terms()[0].1 == 1, "leading coefficient of {m} is {c}");
    x.shift_t(-c.terms()[0].0)
}
