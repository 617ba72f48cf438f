//! Sparse Laurent polynomials with integer coefficients.
//!
//! The same type serves as `Z[z^±]` for the quantized Cartan matrix and as
//! `Z[t^±]` for the coefficients of the quantum torus.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Laurent polynomial stored as `(exponent, coefficient)` pairs sorted by
/// increasing exponent, with no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Laurent {
    terms: Vec<(i32, i64)>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * x^e`.
    pub fn monomial(c: i64, e: i32) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            Laurent { terms: vec![(e, c)] }
        }
    }

    /// `x^e`.
    pub fn power(e: i32) -> Self {
        Self::monomial(1, e)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(it: I) -> Self {
        let mut v: Vec<(i32, i64)> = it.into_iter().collect();
        v.sort_unstable_by_key(|&(e, _)| e);
        let mut out: Vec<(i32, i64)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|&(_, c)| c != 0);
        Laurent { terms: out }
    }

    /// Quantum integer `[c]_x = x^{-c+1} + x^{-c+3} + ... + x^{c-1}`, with
    /// `[-c]_x = -[c]_x`.
    pub fn quantum_int(c: i64) -> Self {
        let sign = c.signum();
        let a = c.abs() as i32;
        Self::from_terms((0..a).map(|k| (-a + 1 + 2 * k, sign)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(i32, i64)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i32) -> i64 {
        match self.terms.binary_search_by_key(&e, |&(x, _)| x) {
            Ok(k) => self.terms[k].1,
            Err(_) => 0,
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|&(e, _)| e)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|&(e, _)| e)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i32) -> Self {
        Laurent {
            terms: self.terms.iter().map(|&(e, c)| (e + k, c)).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|&(e, x)| (e, x * c)).collect(),
        }
    }

    /// Substitutes `x -> x^{-1}`.
    pub fn invert_var(&self) -> Self {
        Laurent {
            terms: self.terms.iter().rev().map(|&(e, c)| (-e, c)).collect(),
        }
    }

    /// Value at `x = 1`.
    pub fn eval_one(&self) -> i64 {
        self.terms.iter().map(|&(_, c)| c).sum()
    }

    pub fn is_bar_symmetric(&self) -> bool {
        *self == self.invert_var()
    }

    /// Splits into the parts with negative, zero and positive exponents.
    pub fn split_sign(&self) -> (Laurent, i64, Laurent) {
        let neg = self.terms.iter().copied().filter(|&(e, _)| e < 0);
        let pos = self.terms.iter().copied().filter(|&(e, _)| e > 0);
        (
            Laurent { terms: neg.collect() },
            self.coeff(0),
            Laurent { terms: pos.collect() },
        )
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.iter().all(|&(_, c)| c > 0)
    }

    fn merge(&self, other: &Laurent, sign: i64) -> Laurent {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0, sign * b[j].1));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].1 + sign * b[j].1;
                    if c != 0 {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(e, c)| (e, sign * c)));
        Laurent { terms: out }
    }

    fn product(&self, other: &Laurent) -> Laurent {
        if self.is_zero() || other.is_zero() {
            return Laurent::zero();
        }
        if other.terms.len() == 1 {
            let (e, c) = other.terms[0];
            return Laurent {
                terms: self.terms.iter().map(|&(x, y)| (x + e, y * c)).collect(),
            };
        }
        let lo = self.terms[0].0 + other.terms[0].0;
        let hi = self.terms.last().unwrap().0 + other.terms.last().unwrap().0;
        let mut dense = vec![0i64; (hi - lo + 1) as usize];
        for &(e1, c1) in &self.terms {
            for &(e2, c2) in &other.terms {
                dense[(e1 + e2 - lo) as usize] += c1 * c2;
            }
        }
        Laurent {
            terms: dense
                .into_iter()
                .enumerate()
                .filter(|&(_, c)| c != 0)
                .map(|(k, c)| (lo + k as i32, c))
                .collect(),
        }
    }

    /// Formats with the given variable name, highest power first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, &(e, c)) in self.terms.iter().rev().enumerate() {
            let (sign, abs) = if c < 0 { ("-", -c) } else { ("+", c) };
            if k == 0 {
                if c < 0 {
                    s.push('-');
                }
            } else {
                s.push_str(&format!(" {} ", sign));
            }
            let body = match e {
                0 => abs.to_string(),
                _ => {
                    let p = if e == 1 {
                        var.to_string()
                    } else {
                        format!("{}^{}", var, e)
                    };
                    if abs == 1 {
                        p
                    } else {
                        format!("{}{}", abs, p)
                    }
                }
            };
            s.push_str(&body);
        }
        s
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl Add<&Laurent> for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        self.merge(rhs, 1)
    }
}

impl Sub<&Laurent> for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        self.merge(rhs, -1)
    }
}

impl Mul<&Laurent> for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        self.product(rhs)
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(self, rhs: Laurent) -> Laurent {
        self.merge(&rhs, 1)
    }
}

impl Sub for Laurent {
    type Output = Laurent;
    fn sub(self, rhs: Laurent) -> Laurent {
        self.merge(&rhs, -1)
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, rhs: Laurent) -> Laurent {
        self.product(&rhs)
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        self.scale(-1)
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        self.scale(-1)
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        *self = self.merge(rhs, 1);
    }
}

impl SubAssign<&Laurent> for Laurent {
    fn sub_assign(&mut self, rhs: &Laurent) {
        *self = self.merge(rhs, -1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_integers() {
        assert_eq!(Laurent::quantum_int(1), Laurent::one());
        assert_eq!(
            Laurent::quantum_int(3),
            Laurent::from_terms([(-2, 1), (0, 1), (2, 1)])
        );
        assert_eq!(Laurent::quantum_int(-2), Laurent::from_terms([(-1, -1), (1, -1)]));
        assert!(Laurent::quantum_int(0).is_zero());
    }

    #[test]
    fn arithmetic() {
        let a = Laurent::from_terms([(-1, 1), (1, 1)]);
        let sq = &a * &a;
        assert_eq!(sq, Laurent::from_terms([(-2, 1), (0, 2), (2, 1)]));
        assert!((&a - &a).is_zero());
        assert_eq!(sq.eval_one(), 4);
        assert_eq!(Laurent::power(3).invert_var(), Laurent::power(-3));
    }

    #[test]
    fn display() {
        let p = Laurent::from_terms([(-2, 1), (0, 1)]);
        assert_eq!(p.to_string(), "1 + t^-2");
        assert_eq!(Laurent::from_terms([(1, -2)]).to_string(), "-2t");
    }
}
