use std::collections::BTreeMap;
use std::fmt;
use yt_algebra::{BasisMonomial, Level, Node, TPoly};

/// Element of `Rep_t = Z[X_{i,l}, t^±]`, keyed by the exponent monomial of
/// the `X_{i,l}` (stored as a [`BasisMonomial`] with nonnegative exponents).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RepElement {
    terms: BTreeMap<BasisMonomial, TPoly>,
}

impl RepElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(BasisMonomial::one())
    }

    pub fn x(i: Node, l: Level) -> Self {
        Self::from_monomial(BasisMonomial::y(i, l))
    }

    pub fn from_monomial(m: BasisMonomial) -> Self {
        Self::from_term(m, TPoly::one())
    }

    pub fn from_term(m: BasisMonomial, p: TPoly) -> Self {
        assert!(m.is_dominant(), "Rep monomials have nonnegative exponents");
        let mut x = Self::zero();
        x.add_term(m, &p);
        x
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

    pub fn coeff(&self, m: &BasisMonomial) -> TPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: BasisMonomial, p: &TPoly) {
        if p.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_default();
        *slot += p;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &RepElement) -> RepElement {
        let mut out = self.clone();
        for (m, p) in &other.terms {
            out.add_term(m.clone(), p);
        }
        out
    }

    pub fn sub(&self, other: &RepElement) -> RepElement {
        self.add(&other.scale(&TPoly::constant(-1)))
    }

    pub fn scale(&self, p: &TPoly) -> RepElement {
        let mut out = RepElement::zero();
        for (m, q) in &self.terms {
            out.add_term(m.clone(), &(p * q));
        }
        out
    }

    /// The undeformed commutative product.
    pub fn product(&self, other: &RepElement) -> RepElement {
        let mut out = RepElement::zero();
        for (m1, p1) in &self.terms {
            for (m2, p2) in &other.terms {
                out.add_term(m1.mul(m2), &(p1 * p2));
            }
        }
        out
    }

    pub fn at_t1(&self) -> BTreeMap<BasisMonomial, i64> {
        self.terms
            .iter()
            .map(|(m, p)| (m.clone(), p.eval_one()))
            .filter(|(_, c)| *c != 0)
            .collect()
    }
}

/// `X[i,l]^e` factors with 1-based nodes, `1` for the empty monomial.
pub fn rep_monomial_string(m: &BasisMonomial) -> String {
    if m.is_one() {
        return "1".into();
    }
    m.factors()
        .map(|(i, l, e)| {
            if e == 1 {
                format!("X[{},{}]", i + 1, l)
            } else {
                format!("X[{},{}]^{}", i + 1, l, e)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for RepElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return writeln!(f, "0");
        }
        for (m, p) in &self.terms {
            writeln!(f, "({}) {}", p, rep_monomial_string(m))?;
        }
        Ok(())
    }
}
