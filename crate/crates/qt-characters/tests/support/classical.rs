//! Commutative Frenkel–Mukhin algorithm, written from the Cartan matrix alone.
//! Monomials are maps `(node, level) -> exponent` with 0-based nodes.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

pub type Mono = BTreeMap<(usize, i32), i32>;
pub type Character = BTreeMap<Mono, i64>;

pub fn mul(a: &Mono, b: &Mono) -> Mono {
    let mut out = a.clone();
    for (k, e) in b {
        let v = out.entry(*k).or_insert(0);
        *v += e;
        if *v == 0 {
            out.remove(k);
        }
    }
    out
}

pub fn y(i: usize, l: i32) -> Mono {
    [((i, l), 1)].into()
}

pub struct Classical {
    c: Vec<Vec<i64>>,
    r: Vec<i32>,
}

impl Classical {
    /// `r_i` is taken so that `diag(r) C` is symmetric with coprime entries
    /// on each component.
    pub fn new(c: Vec<Vec<i64>>) -> Self {
        let n = c.len();
        // r as fractions (num, den)
        let mut q: Vec<Option<(i64, i64)>> = vec![None; n];
        let mut r = vec![0i64; n];
        for start in 0..n {
            if q[start].is_some() {
                continue;
            }
            q[start] = Some((1, 1));
            let mut stack = vec![start];
            let mut comp = vec![start];
            while let Some(i) = stack.pop() {
                let (a, b) = q[i].unwrap();
                for j in 0..n {
                    if i != j && c[i][j] != 0 && q[j].is_none() {
                        let (num, den) = (a * c[i][j], b * c[j][i]);
                        let g = gcd(num, den) * den.signum();
                        q[j] = Some((num / g, den / g));
                        comp.push(j);
                        stack.push(j);
                    }
                }
            }
            let l = comp.iter().fold(1, |l, &k| l * q[k].unwrap().1 / gcd(l, q[k].unwrap().1));
            for &k in &comp {
                let (a, b) = q[k].unwrap();
                r[k] = a * l / b;
            }
            let g = comp.iter().fold(0, |g, &k| gcd(g, r[k]));
            for &k in &comp {
                r[k] /= g;
            }
        }
        Classical {
            c,
            r: r.into_iter().map(|x| x as i32).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.c.len()
    }

    pub fn r(&self, i: usize) -> i32 {
        self.r[i]
    }

    /// `A_{i,l}^{-1}`.
    pub fn a_inv(&self, i: usize, l: i32) -> Mono {
        let ri = self.r[i];
        let mut m: Mono = [((i, l - ri), -1), ((i, l + ri), -1)].into();
        for j in 0..self.rank() {
            let cji = self.c[j][i];
            if j == i || cji == 0 {
                continue;
            }
            for k in 0..(-cji) {
                let level = l + (cji as i32 + 1) + 2 * k as i32;
                *m.entry((j, level)).or_insert(0) += 1;
            }
        }
        m
    }

    fn i_dominant(m: &Mono, i: usize) -> bool {
        m.iter().all(|(&(j, _), &e)| j != i || e >= 0)
    }

    /// Terms of `L_i(m)` for an `i`-dominant `m`, as `(A^{-1}` count, monomial)`.
    /// Levels `k + j r_i` of node `i` are treated as sl2 levels `j`, one
    /// residue `k` at a time.
    fn l_i(&self, m: &Mono, i: usize) -> Vec<(usize, Mono)> {
        let ri = self.r[i];
        let mut acc: Vec<(usize, Mono)> = vec![(0, m.clone())];
        for k in 0..ri {
            let levels: Vec<i32> = m
                .iter()
                .filter(|(&(j, l), _)| j == i && l.rem_euclid(ri) == k)
                .flat_map(|(&(_, l), &e)| std::iter::repeat((l - k).div_euclid(ri)).take(e as usize))
                .collect();
            let mut next = Vec::new();
            for (d, a) in &acc {
                for (steps, lowering) in sl2_l(&levels) {
                    let mut x = a.clone();
                    for s in &lowering {
                        x = mul(&x, &self.a_inv(i, k + s * ri));
                    }
                    next.push((d + steps, x));
                }
            }
            acc = next;
        }
        acc
    }

    /// Classical q-character of the simple module with highest monomial
    /// `top`, provided the algorithm does not fail.
    pub fn fm(&self, top: &Mono) -> Result<Character, String> {
        let n = self.rank();
        let mut s: BTreeMap<Mono, i64> = BTreeMap::new();
        let mut si: BTreeMap<Mono, Vec<i64>> = BTreeMap::new();
        let mut depth: BTreeMap<Mono, usize> = BTreeMap::new();
        let mut queue: BTreeSet<(usize, Mono)> = BTreeSet::new();
        s.insert(top.clone(), 1);
        depth.insert(top.clone(), 0);
        queue.insert((0, top.clone()));
        while let Some((d, m)) = queue.pop_first() {
            let colors = si.get(&m).cloned().unwrap_or_else(|| vec![0; n]);
            if m != *top {
                let vals: BTreeSet<i64> =
                    (0..n).filter(|&i| !Self::i_dominant(&m, i)).map(|i| colors[i]).collect();
                if vals.len() != 1 {
                    return Err(format!("inconsistent or dominant monomial {m:?}"));
                }
                let v = *vals.iter().next().unwrap();
                if v == 0 {
                    continue;
                }
                s.insert(m.clone(), v);
            }
            let sm = s[&m];
            for i in 0..n {
                if !Self::i_dominant(&m, i) {
                    continue;
                }
                let mu = sm - colors[i];
                if mu < 0 {
                    return Err(format!("negative multiplicity at {m:?}"));
                }
                if mu == 0 {
                    continue;
                }
                for (steps, x) in self.l_i(&m, i) {
                    if steps == 0 {
                        continue;
                    }
                    si.entry(x.clone()).or_insert_with(|| vec![0; n])[i] += mu;
                    let dx = d + steps;
                    if depth.insert(x.clone(), dx).is_none() {
                        queue.insert((dx, x));
                    }
                }
            }
        }
        s.retain(|_, c| *c != 0);
        Ok(s)
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Strings in general position for a multiset of sl2 levels, built greedily
/// as the longest run `a, a+2, ...` from the smallest remaining level.
pub fn strings(levels: &[i32]) -> Vec<(i32, usize)> {
    let mut bag: BTreeMap<i32, usize> = BTreeMap::new();
    for &l in levels {
        *bag.entry(l).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    while let Some((&a, _)) = bag.iter().next() {
        let mut len = 0;
        while bag.get(&(a + 2 * len as i32)).is_some_and(|&c| c > 0) {
            let key = a + 2 * len as i32;
            let c = bag.get_mut(&key).unwrap();
            *c -= 1;
            if *c == 0 {
                bag.remove(&key);
            }
            len += 1;
        }
        out.push((a, len));
    }
    out
}

/// Terms of the sl2 simple character, each as the list of levels `b` of its
/// `A_b^{-1}` factors. A string `a, ..., a + 2(k-1)` has `k + 1` terms: lower
/// its top `j` points, `Y_p -> Y_{p+2}^{-1}` through `A_{p+1}^{-1}`.
fn sl2_l(levels: &[i32]) -> Vec<(usize, Vec<i32>)> {
    let mut acc: Vec<Vec<i32>> = vec![Vec::new()];
    for (a, k) in strings(levels) {
        let mut next = Vec::new();
        for base in &acc {
            for j in 0..=k {
                let mut w = base.clone();
                for p in (k - j)..k {
                    w.push(a + 2 * p as i32 + 1);
                }
                next.push(w);
            }
        }
        acc = next;
    }
    acc.into_iter().map(|w| (w.len(), w)).collect()
}

/// Classical sl2 simple character `L(m)` as a product of string characters.
pub fn sl2_simple(levels: &[i32]) -> Character {
    let mut out = Character::new();
    let top: Mono = levels.iter().fold(Mono::new(), |m, &l| mul(&m, &y(0, l)));
    let c = Classical::new(vec![vec![2]]);
    for (_, w) in sl2_l(levels) {
        let m = w.iter().fold(top.clone(), |m, &l| mul(&m, &c.a_inv(0, l)));
        *out.entry(m).or_insert(0) += 1;
    }
    out
}
