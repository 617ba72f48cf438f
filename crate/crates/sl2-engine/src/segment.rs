use crate::Sl2Error;
use std::collections::BTreeMap;
use std::fmt;
use yt_algebra::{BasisMonomial, Level};

/// The 2-segment `{start, start+2, ..., start+2(len-1)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    pub start: Level,
    pub len: u32,
}

impl Segment {
    pub fn new(start: Level, len: u32) -> Self {
        assert!(len >= 1, "empty segment");
        Segment { start, len }
    }

    pub fn end(&self) -> Level {
        self.start + 2 * (self.len as Level - 1)
    }

    pub fn levels(&self) -> impl Iterator<Item = Level> {
        let s = self.start;
        (0..self.len as Level).map(move |k| s + 2 * k)
    }

    pub fn contains_level(&self, l: Level) -> bool {
        l >= self.start && l <= self.end() && (l - self.start) % 2 == 0
    }

    pub fn contains(&self, other: &Segment) -> bool {
        self.contains_level(other.start) && self.contains_level(other.end())
    }

    pub fn shifted(&self, s: Level) -> Segment {
        Segment::new(self.start + s, self.len)
    }

    /// `m_σ = Y_l Y_{l+2} ... Y_{l+2k}`.
    pub fn monomial(&self) -> BasisMonomial {
        BasisMonomial::from_factors(self.levels().map(|l| (0, l, 1)))
    }

    /// The union is a 2-segment properly containing both.
    pub fn special_with(&self, other: &Segment) -> bool {
        if (self.start - other.start).rem_euclid(2) != 0 {
            return false;
        }
        if self.contains(other) || other.contains(self) {
            return false;
        }
        let (a, b) = if self.start <= other.start { (self, other) } else { (other, self) };
        b.start <= a.end() + 2
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.levels().map(|l| l.to_string()).collect();
        write!(f, "{{{}}}", v.join(","))
    }
}

fn sl2_exponents(m: &BasisMonomial) -> Result<BTreeMap<Level, u32>, Sl2Error> {
    let mut u = BTreeMap::new();
    for (i, l, e) in m.factors() {
        if i != 0 {
            return Err(Sl2Error::NotSl2);
        }
        if e < 0 {
            return Err(Sl2Error::NotDominant(m.to_string()));
        }
        u.insert(l, e as u32);
    }
    Ok(u)
}

/// Splits a dominant sl2 monomial into pairwise non-special 2-segments.
///
/// Greedy: repeatedly take the longest segment starting at the lowest level
/// still present. Any special pair is then replaced by its union and
/// intersection until none remains.
pub fn decompose_segments(m: &BasisMonomial) -> Result<Vec<Segment>, Sl2Error> {
    let mut u = sl2_exponents(m)?;
    let mut segs = Vec::new();
    while let Some((&low, _)) = u.iter().next() {
        let mut len = 0u32;
        while u.get(&(low + 2 * len as Level)).is_some() {
            len += 1;
        }
        for k in 0..len as Level {
            let l = low + 2 * k;
            let e = u.get_mut(&l).unwrap();
            *e -= 1;
            if *e == 0 {
                u.remove(&l);
            }
        }
        segs.push(Segment::new(low, len));
    }
    'repair: loop {
        for a in 0..segs.len() {
            for b in a + 1..segs.len() {
                if segs[a].special_with(&segs[b]) {
                    let (x, y) = (segs[a], segs[b]);
                    let lo = x.start.min(y.start);
                    let hi = x.end().max(y.end());
                    let ilo = x.start.max(y.start);
                    let ihi = x.end().min(y.end());
                    segs.swap_remove(b);
                    segs.swap_remove(a);
                    segs.push(Segment::new(lo, ((hi - lo) / 2 + 1) as u32));
                    if ilo <= ihi {
                        segs.push(Segment::new(ilo, ((ihi - ilo) / 2 + 1) as u32));
                    }
                    continue 'repair;
                }
            }
        }
        break;
    }
    segs.sort();
    Ok(segs)
}

/// Two segments with `σ1 ⊂ σ2` and `σ1 + 2 ⊂ σ2`.
pub fn is_irregular(m: &BasisMonomial) -> Result<bool, Sl2Error> {
    let segs = decompose_segments(m)?;
    for (a, s1) in segs.iter().enumerate() {
        for (b, s2) in segs.iter().enumerate() {
            if a != b && s2.contains(s1) && s2.contains(&s1.shifted(2)) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Classical character of a segment: `k + 2` terms, each coefficient 1.
pub fn classic_segment(seg: &Segment) -> BTreeMap<BasisMonomial, i64> {
    let n = seg.len as Level;
    (0..=n)
        .map(|j| {
            let keep = n - j;
            let m = BasisMonomial::from_factors((0..n).map(|a| {
                let l = seg.start + 2 * a;
                if a < keep {
                    (0, l, 1)
                } else {
                    (0, l + 2, -1)
                }
            }));
            (m, 1)
        })
        .collect()
}

/// Product of commutative characters.
pub fn classic_product(
    x: &BTreeMap<BasisMonomial, i64>,
    y: &BTreeMap<BasisMonomial, i64>,
) -> BTreeMap<BasisMonomial, i64> {
    let mut out: BTreeMap<BasisMonomial, i64> = BTreeMap::new();
    for (m1, a) in x {
        for (m2, b) in y {
            *out.entry(m1.mul(m2)).or_insert(0) += a * b;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `L(m) = ∏_j L(m_{σ_j})` over the segment decomposition.
pub fn classic_l(m: &BasisMonomial) -> Result<BTreeMap<BasisMonomial, i64>, Sl2Error> {
    let segs = decompose_segments(m)?;
    let mut acc: BTreeMap<BasisMonomial, i64> = [(BasisMonomial::one(), 1)].into();
    for s in &segs {
        acc = classic_product(&acc, &classic_segment(s));
    }
    Ok(acc)
}
