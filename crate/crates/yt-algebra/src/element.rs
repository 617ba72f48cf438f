use crate::monomial::{BasisMonomial, Level, Node};
use crate::TPoly;
use std::collections::BTreeMap;
use std::fmt;

/// Element of `Y_t` in the normal-ordered basis: a finite map from basis
/// monomials `:m:` to nonzero coefficients in `Z[t^±]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct YtElement {
    terms: BTreeMap<BasisMonomial, TPoly>,
}

impl YtElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(BasisMonomial::one())
    }

    /// `:m:` with coefficient 1.
    pub fn from_monomial(m: BasisMonomial) -> Self {
        Self::from_term(m, TPoly::one())
    }

    pub fn from_term(m: BasisMonomial, p: TPoly) -> Self {
        let mut x = Self::zero();
        x.add_term(m, &p);
        x
    }

    /// `Ỹ_{i,l}`.
    pub fn y(i: Node, l: Level) -> Self {
        Self::from_monomial(BasisMonomial::y(i, l))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisMonomial, &TPoly)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &BasisMonomial> {
        self.terms.keys()
    }

    pub fn into_terms(self) -> BTreeMap<BasisMonomial, TPoly> {
        self.terms
    }

    pub fn coeff(&self, m: &BasisMonomial) -> TPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn contains(&self, m: &BasisMonomial) -> bool {
        self.terms.contains_key(m)
    }

    pub fn add_term(&mut self, m: BasisMonomial, p: &TPoly) {
        if p.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(p.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + p;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &YtElement, p: &TPoly) {
        for (m, q) in &other.terms {
            self.add_term(m.clone(), &(p * q));
        }
    }

    pub fn add(&self, other: &YtElement) -> YtElement {
        let mut out = self.clone();
        for (m, q) in &other.terms {
            out.add_term(m.clone(), q);
        }
        out
    }

    pub fn sub(&self, other: &YtElement) -> YtElement {
        let mut out = self.clone();
        for (m, q) in &other.terms {
            out.add_term(m.clone(), &-q);
        }
        out
    }

    /// Multiplies every coefficient by the central element `p`.
    pub fn scale(&self, p: &TPoly) -> YtElement {
        let mut out = YtElement::zero();
        for (m, q) in &self.terms {
            out.add_term(m.clone(), &(p * q));
        }
        out
    }

    /// Multiplies by `t^k`.
    pub fn shift_t(&self, k: i32) -> YtElement {
        YtElement {
            terms: self.terms.iter().map(|(m, p)| (m.clone(), p.shift(k))).collect(),
        }
    }

    /// Translates all spectral levels by `s`.
    pub fn shift_levels(&self, s: Level) -> YtElement {
        YtElement {
            terms: self.terms.iter().map(|(m, p)| (m.shift(s), p.clone())).collect(),
        }
    }

    /// Specialization `t = 1`, as a commutative Laurent polynomial in the `Y`.
    pub fn at_t1(&self) -> BTreeMap<BasisMonomial, i64> {
        self.terms
            .iter()
            .map(|(m, p)| (m.clone(), p.eval_one()))
            .filter(|(_, c)| *c != 0)
            .collect()
    }

    pub fn dominant_monomials(&self) -> impl Iterator<Item = &BasisMonomial> {
        self.terms.keys().filter(|m| m.is_dominant())
    }

    pub fn map_coeffs(&self, f: impl Fn(&BasisMonomial, &TPoly) -> TPoly) -> YtElement {
        let mut out = YtElement::zero();
        for (m, p) in &self.terms {
            out.add_term(m.clone(), &f(m, p));
        }
        out
    }
}

impl FromIterator<(BasisMonomial, TPoly)> for YtElement {
    fn from_iter<I: IntoIterator<Item = (BasisMonomial, TPoly)>>(it: I) -> Self {
        let mut x = YtElement::zero();
        for (m, p) in it {
            x.add_term(m, &p);
        }
        x
    }
}

impl fmt::Display for YtElement {
    /// One term per line: `(coefficient) monomial`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return writeln!(f, "0");
        }
        for (m, p) in &self.terms {
            writeln!(f, "({}) {}", p, m)?;
        }
        Ok(())
    }
}
