//! Closed-form sl2 theory: 2-segments, classical characters and the
//! t-deformed `E_t`/`F_t` of dominant sl2 monomials.

mod segment;

pub use segment::{classic_l, classic_product, classic_segment, decompose_segments, is_irregular, Segment};

use cartan_core::SymmetrizedCartan;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};
use thiserror::Error;
use yt_algebra::{Algebra, BasisMonomial, YtElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Sl2Error {
    #[error("monomial {0} is not dominant")]
    NotDominant(String),
    #[error("monomial involves a node other than the sl2 node")]
    NotSl2,
    #[error("triangular subtraction exceeded {0} steps")]
    BudgetExceeded(usize),
}

/// Guard on the number of subtraction steps in [`Sl2Engine::ft_sl2`].
const MAX_STEPS: usize = 100_000;

/// The algebra `Y_t` of sl2 together with memoized `F_t`.
pub struct Sl2Engine {
    alg: Algebra,
    ft_cache: Mutex<HashMap<BasisMonomial, YtElement>>,
}

impl Default for Sl2Engine {
    fn default() -> Self {
        Self::new()
    }
}

impl Sl2Engine {
    pub fn new() -> Self {
        let c = SymmetrizedCartan::named("A1").expect("A1 is valid");
        Sl2Engine {
            alg: Algebra::new(Arc::new(c)),
            ft_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    fn check(&self, m: &BasisMonomial) -> Result<(), Sl2Error> {
        if m.factors().any(|(i, _, _)| i != 0) {
            return Err(Sl2Error::NotSl2);
        }
        if !m.is_dominant() {
            return Err(Sl2Error::NotDominant(m.to_string()));
        }
        Ok(())
    }

    /// `F_t(m_σ) = m_σ (1 + t Ã_{top+1}^{-1} + t^2 Ã_{top+1}^{-1} Ã_{top-1}^{-1} + ...)`.
    pub fn ft_segment(&self, seg: &Segment) -> YtElement {
        let alg = &self.alg;
        let ms = YtElement::from_monomial(seg.monomial());
        let mut out = ms.clone();
        let mut string = YtElement::one();
        let mut a_level = seg.end() + 1;
        for j in 1..=seg.len as i32 {
            let ainv = YtElement::from_monomial(alg.a_expand_inv(0, a_level));
            string = alg.multiply(&string, &ainv);
            out = out.add(&alg.multiply(&ms, &string).shift_t(j));
            a_level -= 2;
        }
        out
    }

    /// Ordered product of the `Ỹ_l + Ỹ_{l+2}^{-1}` over increasing levels,
    /// rescaled so that `:m:` has coefficient 1.
    pub fn et_sl2(&self, m: &BasisMonomial) -> Result<YtElement, Sl2Error> {
        self.check(m)?;
        let mut acc = YtElement::one();
        for (_, l, e) in m.factors() {
            let f = self.ft_segment(&Segment::new(l, 1));
            for _ in 0..e {
                acc = self.alg.multiply(&acc, &f);
            }
        }
        Ok(normalize_top(acc, m))
    }

    /// The unique element of the sl2 kernel with `m` as its only dominant
    /// monomial, obtained from `E_t(m)` by triangular subtraction.
    pub fn ft_sl2(&self, m: &BasisMonomial) -> Result<YtElement, Sl2Error> {
        self.check(m)?;
        let Some(low) = m.min_level() else {
            return Ok(YtElement::one());
        };
        let key = m.shift(-low);
        if let Some(x) = self.ft_cache.lock().unwrap().get(&key) {
            return Ok(x.shift_levels(low));
        }
        let mut res = self.et_sl2(&key)?;
        let mut steps = 0;
        loop {
            let next = res
                .dominant_monomials()
                .filter(|d| **d != key)
                .min_by_key(|d| (self.alg.a_depth(d, &key), (*d).clone()))
                .cloned();
            let Some(d) = next else { break };
            steps += 1;
            if steps > MAX_STEPS {
                return Err(Sl2Error::BudgetExceeded(MAX_STEPS));
            }
            let c = res.coeff(&d);
            let f = self.ft_sl2(&d)?;
            res = res.sub(&f.scale(&c));
        }
        self.ft_cache.lock().unwrap().insert(key, res.clone());
        Ok(res.shift_levels(low))
    }

    /// Product of segment characters: `F_t(m)` of a regular monomial.
    pub fn ft_from_segments(&self, m: &BasisMonomial) -> Result<YtElement, Sl2Error> {
        let segs = decompose_segments(m)?;
        let fs: Vec<YtElement> = segs.iter().map(|s| self.ft_segment(s)).collect();
        Ok(normalize_top(self.alg.product(fs.iter()), m))
    }
}

/// Divides `x` by the monomial coefficient `t^c` of `:m:`.
fn normalize_top(x: YtElement, m: &BasisMonomial) -> YtElement {
    let c = x.coeff(m);
    assert_eq!(c.len(), 1, "leading coefficient of {m} is not a monomial: {c}");
    let (e, a) = c.terms()[0];
    assert_eq!(a, 1, "leading coefficient of {m} is {c}");
    x.shift_t(-e)
}
