use std::fmt;

pub type Node = usize;
pub type Level = i32;

/// Sparse Laurent monomial in the variables `Y_{i,l}`, stored as
/// `(level, node, exponent)` sorted by `(level, node)` with no zero exponents.
///
/// As an element of `Y_t` it stands for the normal-ordered basis element `:m:`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisMonomial {
    entries: Vec<(Level, Node, i32)>,
}

impl BasisMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn y(i: Node, l: Level) -> Self {
        BasisMonomial {
            entries: vec![(l, i, 1)],
        }
    }

    pub fn y_pow(i: Node, l: Level, e: i32) -> Self {
        Self::from_factors([(i, l, e)])
    }

    /// Builds from `(node, level, exponent)` triples, merging repeats.
    pub fn from_factors<I: IntoIterator<Item = (Node, Level, i32)>>(it: I) -> Self {
        let mut v: Vec<(Level, Node, i32)> = it.into_iter().map(|(i, l, e)| (l, i, e)).collect();
        v.sort_unstable_by_key(|&(l, i, _)| (l, i));
        let mut out: Vec<(Level, Node, i32)> = Vec::with_capacity(v.len());
        for (l, i, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == l && last.1 == i => last.2 += e,
                _ => out.push((l, i, e)),
            }
        }
        out.retain(|&(_, _, e)| e != 0);
        BasisMonomial { entries: out }
    }

    pub fn is_one(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(level, node, exponent)` in increasing `(level, node)` order.
    pub fn entries(&self) -> &[(Level, Node, i32)] {
        &self.entries
    }

    /// `(node, level, exponent)` triples.
    pub fn factors(&self) -> impl Iterator<Item = (Node, Level, i32)> + '_ {
        self.entries.iter().map(|&(l, i, e)| (i, l, e))
    }

    pub fn u(&self, i: Node, l: Level) -> i32 {
        match self.entries.binary_search_by(|&(a, b, _)| (a, b).cmp(&(l, i))) {
            Ok(k) => self.entries[k].2,
            Err(_) => 0,
        }
    }

    /// `u_i(m) = Σ_l u_{i,l}(m)`.
    pub fn u_total(&self, i: Node) -> i32 {
        self.entries.iter().filter(|e| e.1 == i).map(|e| e.2).sum()
    }

    /// Commutative product (exponent addition).
    pub fn mul(&self, other: &BasisMonomial) -> BasisMonomial {
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut x, mut y) = (0, 0);
        while x < a.len() && y < b.len() {
            let ka = (a[x].0, a[x].1);
            let kb = (b[y].0, b[y].1);
            match ka.cmp(&kb) {
                std::cmp::Ordering::Less => {
                    out.push(a[x]);
                    x += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[y]);
                    y += 1;
                }
                std::cmp::Ordering::Equal => {
                    let e = a[x].2 + b[y].2;
                    if e != 0 {
                        out.push((ka.0, ka.1, e));
                    }
                    x += 1;
                    y += 1;
                }
            }
        }
        out.extend_from_slice(&a[x..]);
        out.extend_from_slice(&b[y..]);
        BasisMonomial { entries: out }
    }

    pub fn inverse(&self) -> BasisMonomial {
        self.pow(-1)
    }

    pub fn pow(&self, k: i32) -> BasisMonomial {
        if k == 0 {
            return Self::one();
        }
        BasisMonomial {
            entries: self.entries.iter().map(|&(l, i, e)| (l, i, e * k)).collect(),
        }
    }

    /// `self / other`.
    pub fn div(&self, other: &BasisMonomial) -> BasisMonomial {
        self.mul(&other.inverse())
    }

    /// Translates every level by `s`.
    pub fn shift(&self, s: Level) -> BasisMonomial {
        BasisMonomial {
            entries: self.entries.iter().map(|&(l, i, e)| (l + s, i, e)).collect(),
        }
    }

    pub fn min_level(&self) -> Option<Level> {
        self.entries.first().map(|e| e.0)
    }

    pub fn max_level(&self) -> Option<Level> {
        self.entries.last().map(|e| e.0)
    }

    /// Part of the monomial living at level `l` (`π_l(m)`).
    pub fn at_level(&self, l: Level) -> BasisMonomial {
        BasisMonomial {
            entries: self.entries.iter().copied().filter(|e| e.0 == l).collect(),
        }
    }

    pub fn levels(&self) -> Vec<Level> {
        let mut v: Vec<Level> = self.entries.iter().map(|e| e.0).collect();
        v.dedup();
        v
    }

    /// Restriction to a single node.
    pub fn restrict(&self, i: Node) -> BasisMonomial {
        BasisMonomial {
            entries: self.entries.iter().copied().filter(|e| e.1 == i).collect(),
        }
    }

    /// `u_{i,l} >= 0` for every `i` accepted by `nodes` and every `l`.
    pub fn is_dominant_for(&self, nodes: impl Fn(Node) -> bool) -> bool {
        self.entries.iter().all(|&(_, i, e)| e >= 0 || !nodes(i))
    }

    pub fn is_dominant(&self) -> bool {
        self.entries.iter().all(|e| e.2 >= 0)
    }

    pub fn is_i_dominant(&self, i: Node) -> bool {
        self.is_dominant_for(|j| j == i)
    }

    /// At the highest level carrying a variable, every exponent is negative.
    pub fn right_negative(&self) -> bool {
        match self.max_level() {
            None => false,
            Some(top) => self
                .entries
                .iter()
                .filter(|e| e.0 == top)
                .all(|e| e.2 < 0),
        }
    }

    /// Total degree `Σ u_{i,l}`.
    pub fn degree(&self) -> i64 {
        self.entries.iter().map(|e| e.2 as i64).sum()
    }
}

impl fmt::Display for BasisMonomial {
    /// Text grammar with 1-based nodes, e.g. `Y[1,0] Y[2,3]^-1`; `1` if empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("1");
        }
        for (k, &(l, i, e)) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "Y[{},{}]", i + 1, l)?;
            if e != 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }
}

/// `∏ Ã_{i,l}^{-v_{i,l}}` with all `v >= 0`, stored as sorted
/// `(node, level, v)` with positive `v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AMonomial {
    entries: Vec<(Node, Level, u32)>,
}

impl AMonomial {
    pub fn from_factors<I: IntoIterator<Item = (Node, Level, u32)>>(it: I) -> Self {
        let mut v: Vec<(Node, Level, u32)> = it.into_iter().collect();
        v.sort_unstable_by_key(|&(i, l, _)| (i, l));
        let mut out: Vec<(Node, Level, u32)> = Vec::with_capacity(v.len());
        for (i, l, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == i && last.1 == l => last.2 += e,
                _ => out.push((i, l, e)),
            }
        }
        out.retain(|e| e.2 != 0);
        AMonomial { entries: out }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(Node, Level, u32)] {
        &self.entries
    }

    pub fn v(&self, i: Node, l: Level) -> u32 {
        self.entries
            .iter()
            .find(|e| e.0 == i && e.1 == l)
            .map_or(0, |e| e.2)
    }

    /// Number of `Ã^{-1}` factors.
    pub fn depth(&self) -> u64 {
        self.entries.iter().map(|e| e.2 as u64).sum()
    }
}

impl fmt::Display for AMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("1");
        }
        for (k, &(i, l, v)) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "A[{},{}]^-{}", i + 1, l, v)?;
        }
        Ok(())
    }
}
