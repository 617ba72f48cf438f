use crate::{QtCharacters, QtError};
use std::collections::BTreeMap;
use yt_algebra::{BasisMonomial, Node, TPoly, YtElement};

/// One lower term `P_{m',m} L_t(m')` of `E_t(m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KlRow {
    /// Dominant monomial `μ` with representative `m' = t^shift :μ:`.
    pub monomial: BasisMonomial,
    pub shift: i32,
    /// Coefficient of `L_t(m')` in `E_t(m) - F_t(m)`.
    pub alpha: TPoly,
    pub p: TPoly,
}

#[derive(Clone, Debug)]
pub struct KlResult {
    pub top: BasisMonomial,
    pub rows: Vec<KlRow>,
    /// `L_t(μ)` for every dominant `μ` below the top, normalized so that `:μ:`
    /// has coefficient 1; includes the top itself.
    pub lt: BTreeMap<BasisMonomial, YtElement>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityReport {
    pub node: Node,
    pub positive: bool,
    pub monomials: usize,
    pub offending: Vec<(BasisMonomial, TPoly)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// `(m', P_{m',m}(1))`.
    pub terms: Vec<(BasisMonomial, i64)>,
    pub has_negative: bool,
}

impl QtCharacters {
    /// t-shift `c` making `t^c :μ:` bar-compatible with `:m:`.
    pub fn representative_shift(&self, mu: &BasisMonomial, m: &BasisMonomial) -> Result<i32, QtError> {
        let alg = self.algebra();
        let d = alg.bicharacter_n(mu, mu) - alg.bicharacter_n(m, m);
        if d % 2 != 0 {
            return Err(QtError::NonIntegralShift(mu.to_string()));
        }
        Ok((d / 2) as i32)
    }

    /// Canonical basis `L_t` below `m` and the polynomials `P_{m',m}`.
    ///
    /// With `E_t(m) = F_t(m) + Σ α L_t(m')`, the bar-symmetric part is
    /// `β = α^+(t) + α^0 + α^+(t^{-1})` and `P = α - β ∈ t^{-1}Z[t^{-1}]`.
    pub fn lt_and_kl(&self, m: &BasisMonomial) -> Result<KlResult, QtError> {
        let alg = self.algebra();
        let dom = self.dominant_closure(m)?;
        let mut lt: BTreeMap<BasisMonomial, YtElement> = BTreeMap::new();
        let mut rows = Vec::new();
        for mu in dom.iter().rev() {
            let f = self.ft(mu)?;
            let mut res = self.e_t(mu)?.sub(&f);
            let mut l_mu = f;
            for d in dom.iter().filter(|d| *d != mu && alg.leq(d, mu)) {
                let c = self.representative_shift(d, mu)?;
                let lhat = lt[d].shift_t(c);
                let alpha = res.coeff(d).shift(-c);
                if alpha.is_zero() {
                    continue;
                }
                res = res.sub(&lhat.scale(&alpha));
                let (_, a0, apos) = alpha.split_sign();
                let beta = &(&apos + &TPoly::constant(a0)) + &apos.invert_var();
                let p = &alpha - &beta;
                l_mu = l_mu.add(&lhat.scale(&beta));
                if mu == m && !p.is_zero() {
                    rows.push(KlRow {
                        monomial: d.clone(),
                        shift: c,
                        alpha,
                        p,
                    });
                }
            }
            if !res.is_zero() {
                return Err(QtError::InversionFails);
            }
            lt.insert(mu.clone(), l_mu);
        }
        Ok(KlResult {
            top: m.clone(),
            rows,
            lt,
        })
    }

    /// Scans `F_t(Ỹ_{i,0})` for coefficients outside `N[t^±]`.
    pub fn positivity_report(&self, i: Node) -> Result<PositivityReport, QtError> {
        let f = self.fundamental(i, 0)?;
        let offending: Vec<(BasisMonomial, TPoly)> = f
            .terms()
            .filter(|(_, p)| !p.all_nonnegative())
            .map(|(m, p)| (m.clone(), p.clone()))
            .collect();
        Ok(PositivityReport {
            node: i,
            positive: offending.is_empty(),
            monomials: f.len(),
            offending,
        })
    }

    /// `P_{m',m}(1)`: putative multiplicities of `L(m')` in the standard
    /// module of `m`.
    pub fn decomposition_t1(&self, m: &BasisMonomial) -> Result<Decomposition, QtError> {
        let kl = self.lt_and_kl(m)?;
        let terms: Vec<(BasisMonomial, i64)> = kl
            .rows
            .iter()
            .map(|r| (r.monomial.clone(), r.p.eval_one()))
            .filter(|(_, c)| *c != 0)
            .collect();
        let has_negative = terms.iter().any(|(_, c)| *c < 0);
        Ok(Decomposition { terms, has_negative })
    }
}
