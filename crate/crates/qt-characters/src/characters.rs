use crate::algorithm::{self, AlgorithmState, Budget, CharacterTree};
use crate::{QtError, RepElement};
use cartan_core::SymmetrizedCartan;
use screening::Screening;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};
use yt_algebra::{Algebra, BasisMonomial, Level, Node, TPoly, YtElement};

/// Entry point for q,t-character computations over one Cartan matrix.
pub struct QtCharacters {
    alg: Arc<Algebra>,
    scr: Screening,
    budget: Budget,
    fund: Mutex<HashMap<Node, YtElement>>,
    ft: Mutex<HashMap<BasisMonomial, YtElement>>,
}

impl QtCharacters {
    pub fn new(alg: Arc<Algebra>, budget: Budget) -> Self {
        QtCharacters {
            scr: Screening::new(alg.clone()),
            alg,
            budget,
            fund: Mutex::new(HashMap::new()),
            ft: Mutex::new(HashMap::new()),
        }
    }

    pub fn from_cartan(c: SymmetrizedCartan) -> Self {
        Self::new(Arc::new(Algebra::from_cartan(c)), Budget::default())
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn screening(&self) -> &Screening {
        &self.scr
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    fn check_dominant(m: &BasisMonomial) -> Result<(), QtError> {
        if m.is_dominant() {
            Ok(())
        } else {
            Err(QtError::NotDominant(m.to_string()))
        }
    }

    /// Full state of a t-algorithm run from `m_plus`.
    pub fn t_algorithm_state(&self, m_plus: &BasisMonomial) -> Result<AlgorithmState, QtError> {
        algorithm::run(&self.scr, m_plus, self.budget)
    }

    /// `F_t(m_plus)` computed by the t-algorithm.
    pub fn t_algorithm(&self, m_plus: &BasisMonomial) -> Result<YtElement, QtError> {
        Ok(self.t_algorithm_state(m_plus)?.result())
    }

    pub fn tree(&self, m_plus: &BasisMonomial) -> Result<CharacterTree, QtError> {
        let st = self.t_algorithm_state(m_plus)?;
        CharacterTree::build(&self.scr, &st)
    }

    /// `F_t(Ỹ_{i,l})`, the level-`l` shift of the cached `F_t(Ỹ_{i,0})`.
    pub fn fundamental(&self, i: Node, l: Level) -> Result<YtElement, QtError> {
        if let Some(x) = self.fund.lock().unwrap().get(&i) {
            return Ok(x.shift_levels(l));
        }
        let f = self.t_algorithm(&BasisMonomial::y(i, 0))?;
        self.fund.lock().unwrap().insert(i, f.clone());
        Ok(f.shift_levels(l))
    }

    /// `χ_{q,t}(M)`: the product of shifted fundamentals over increasing
    /// levels, without rescaling.
    pub fn chi_monomial(&self, m: &BasisMonomial) -> Result<YtElement, QtError> {
        Self::check_dominant(m)?;
        let mut acc = YtElement::one();
        for (i, l, e) in m.factors() {
            let f = self.fundamental(i, l)?;
            acc = self.alg.multiply(&acc, &self.alg.power(&f, e as u32));
        }
        Ok(acc)
    }

    /// `E_t(m)`, rescaled so that `:m:` has coefficient 1.
    pub fn e_t(&self, m: &BasisMonomial) -> Result<YtElement, QtError> {
        let x = self.chi_monomial(m)?;
        let w = top_shift(&x, m);
        Ok(x.shift_t(-w))
    }

    pub fn chi_qt(&self, x: &RepElement) -> Result<YtElement, QtError> {
        let mut out = YtElement::zero();
        for (m, p) in x.terms() {
            out.add_scaled(&self.chi_monomial(m)?, p);
        }
        Ok(out)
    }

    /// `q`-character: `χ_{q,t}` followed by `t = 1`.
    pub fn q_char(&self, x: &RepElement) -> Result<BTreeMap<BasisMonomial, i64>, QtError> {
        Ok(self.chi_qt(x)?.at_t1())
    }

    /// Inverse of `χ_{q,t}` on its image, peeling the dominant monomial of
    /// largest height first.
    pub fn chi_inverse(&self, y: &YtElement) -> Result<RepElement, QtError> {
        let mut res = y.clone();
        let mut out = RepElement::zero();
        while !res.is_zero() {
            let top = res
                .dominant_monomials()
                .max_by_key(|d| (self.alg.height(d), std::cmp::Reverse((*d).clone())))
                .cloned()
                .ok_or(QtError::InversionFails)?;
            let chi = self.chi_monomial(&top)?;
            let c = res.coeff(&top).shift(-top_shift(&chi, &top));
            res = res.sub(&chi.scale(&c));
            out.add_term(top, &c);
        }
        Ok(out)
    }

    /// `λ1 * λ2 = χ_{q,t}^{-1}(χ_{q,t}(λ1) χ_{q,t}(λ2))`.
    pub fn star_product(&self, x: &RepElement, y: &RepElement) -> Result<RepElement, QtError> {
        let p = self.alg.multiply(&self.chi_qt(x)?, &self.chi_qt(y)?);
        self.chi_inverse(&p)
    }

    /// `F_t(m)` by triangular subtraction of lower `F_t` from `E_t(m)`.
    pub fn ft(&self, m: &BasisMonomial) -> Result<YtElement, QtError> {
        Self::check_dominant(m)?;
        let Some(low) = m.min_level() else {
            return Ok(YtElement::one());
        };
        let key = m.shift(-low);
        if let Some(x) = self.ft.lock().unwrap().get(&key) {
            return Ok(x.shift_levels(low));
        }
        let mut res = self.e_t(&key)?;
        loop {
            let next = res
                .dominant_monomials()
                .filter(|d| **d != key)
                .max_by_key(|d| (self.alg.height(d), std::cmp::Reverse((*d).clone())))
                .cloned();
            let Some(d) = next else { break };
            let c = res.coeff(&d);
            res = res.sub(&self.ft(&d)?.scale(&c));
        }
        self.ft.lock().unwrap().insert(key, res.clone());
        Ok(res.shift_levels(low))
    }

    /// Dominant monomials reachable from `m` through the dominant monomials
    /// of the `E_t`, highest first.
    pub fn dominant_closure(&self, m: &BasisMonomial) -> Result<Vec<BasisMonomial>, QtError> {
        let mut found = vec![m.clone()];
        let mut k = 0;
        while k < found.len() {
            let e = self.e_t(&found[k].clone())?;
            for d in e.dominant_monomials() {
                if !found.contains(d) {
                    found.push(d.clone());
                }
            }
            k += 1;
        }
        found.sort_by_key(|d| (std::cmp::Reverse(self.alg.height(d)), d.clone()));
        Ok(found)
    }
}

/// The exponent `w` with `x = t^w :m: + ...`.
pub(crate) fn top_shift(x: &YtElement, m: &BasisMonomial) -> i32 {
    let c: TPoly = x.coeff(m);
    assert!(c.len() == 1 && c.terms()[0].1 == 1, "coefficient of {m} is {c}");
    c.terms()[0].0
}
