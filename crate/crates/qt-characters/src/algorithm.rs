use crate::QtError;
use screening::Screening;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use yt_algebra::{Algebra, BasisMonomial, Level, Node, TPoly, YtElement};

/// Limits on the t-algorithm frontier.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_monomials: usize,
    /// Number of `A^{-1}` factors allowed below the seed.
    pub max_a_depth: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_monomials: 200_000,
            max_a_depth: 60,
        }
    }
}

/// Bookkeeping of one t-algorithm run.
#[derive(Clone, Debug)]
pub struct AlgorithmState {
    pub seed: BasisMonomial,
    /// Processed monomials in processing order.
    pub discovered: Vec<BasisMonomial>,
    pub s: HashMap<BasisMonomial, TPoly>,
    /// Per node, the contribution of the blocks already opened.
    pub s_i: Vec<HashMap<BasisMonomial, TPoly>>,
    /// `(i, m', μ)`: the block `μ F_{i,t}(m')` of the kernel decomposition.
    pub blocks: Vec<(Node, BasisMonomial, TPoly)>,
}

impl AlgorithmState {
    pub fn result(&self) -> YtElement {
        self.s.iter().map(|(m, p)| (m.clone(), p.clone())).collect()
    }
}

/// Runs the t-algorithm with singleton node sets.
///
/// Monomials are processed by increasing `A`-depth below the seed, ties broken
/// lexicographically. A non-dominant monomial takes its coefficient from any
/// node for which it is not dominant; all such nodes must agree.
pub(crate) fn run(scr: &Screening, seed: &BasisMonomial, budget: Budget) -> Result<AlgorithmState, QtError> {
    let alg: &Algebra = scr.algebra();
    if !seed.is_dominant() {
        return Err(QtError::NotDominant(seed.to_string()));
    }
    let n = alg.rank();
    let mut st = AlgorithmState {
        seed: seed.clone(),
        discovered: Vec::new(),
        s: HashMap::new(),
        s_i: vec![HashMap::new(); n],
        blocks: Vec::new(),
    };
    let mut frontier: BTreeSet<(i64, BasisMonomial)> = BTreeSet::new();
    let mut seen: BTreeSet<BasisMonomial> = BTreeSet::new();
    frontier.insert((0, seed.clone()));
    seen.insert(seed.clone());
    while let Some((_, m)) = frontier.pop_first() {
        let get = |st: &AlgorithmState, i: Node| st.s_i[i].get(&m).cloned().unwrap_or_default();
        let s = if &m == seed {
            TPoly::one()
        } else if m.is_dominant() {
            TPoly::zero()
        } else {
            let mut value: Option<(Node, TPoly)> = None;
            for i in 0..n {
                if m.is_i_dominant(i) {
                    continue;
                }
                let v = get(&st, i);
                match &value {
                    None => value = Some((i, v)),
                    Some((j, w)) if *w != v => {
                        return Err(QtError::AlgorithmFails {
                            monomial: m.to_string(),
                            first: *j,
                            a: w.to_string(),
                            second: i,
                            b: v.to_string(),
                        })
                    }
                    _ => {}
                }
            }
            value.map(|v| v.1).unwrap_or_default()
        };
        for i in 0..n {
            if !m.is_i_dominant(i) {
                continue;
            }
            let mu = &s - &get(&st, i);
            if mu.is_zero() {
                continue;
            }
            let f = scr.f_it(i, &m)?;
            for (x, p) in f.terms() {
                let slot = st.s_i[i].entry(x.clone()).or_default();
                *slot += &(&mu * p);
                if !seen.contains(x) {
                    let depth = alg.a_depth(x, seed);
                    if depth > budget.max_a_depth as i64 {
                        return Err(QtError::BudgetExceeded(format!(
                            "{x} lies {depth} A-steps below the seed (limit {})",
                            budget.max_a_depth
                        )));
                    }
                    if seen.len() >= budget.max_monomials {
                        return Err(QtError::BudgetExceeded(format!(
                            "more than {} monomials",
                            budget.max_monomials
                        )));
                    }
                    seen.insert(x.clone());
                    frontier.insert((depth, x.clone()));
                }
            }
            st.blocks.push((i, m.clone(), mu));
        }
        if !s.is_zero() {
            st.s.insert(m.clone(), s);
        }
        st.discovered.push(m);
    }
    Ok(st)
}

/// Edge `from -> to` with `to = from · A_{node,level}^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TreeEdge {
    pub from: BasisMonomial,
    pub to: BasisMonomial,
    pub node: Node,
    pub level: Level,
}

/// Colored graph of a character: vertices are its monomials, and an edge
/// `(i, l)` joins two monomials differing by `A_{i,l}^{-1}` inside one
/// `i`-block of the kernel decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTree {
    pub root: BasisMonomial,
    pub vertices: BTreeMap<BasisMonomial, TPoly>,
    pub edges: Vec<TreeEdge>,
}

impl CharacterTree {
    pub(crate) fn build(scr: &Screening, st: &AlgorithmState) -> Result<Self, QtError> {
        let alg = scr.algebra();
        let vertices: BTreeMap<BasisMonomial, TPoly> =
            st.s.iter().map(|(m, p)| (m.clone(), p.clone())).collect();
        let mut edges = BTreeSet::new();
        for (i, top, _) in &st.blocks {
            let f = scr.f_it(*i, top)?;
            let support: Vec<&BasisMonomial> = f.monomials().filter(|x| vertices.contains_key(*x)).collect();
            for a in &support {
                for b in &support {
                    let ratio = b.div(a);
                    if let Some(l) = single_a_inverse(alg, *i, &ratio) {
                        edges.insert(TreeEdge {
                            from: (*a).clone(),
                            to: (*b).clone(),
                            node: *i,
                            level: l,
                        });
                    }
                }
            }
        }
        Ok(CharacterTree {
            root: st.seed.clone(),
            vertices,
            edges: edges.into_iter().collect(),
        })
    }
}

/// `Some(l)` if `ratio = A_{i,l}^{-1}`.
fn single_a_inverse(alg: &Algebra, i: Node, ratio: &BasisMonomial) -> Option<Level> {
    let l = ratio.factors().find(|&(j, _, e)| j == i && e == -1)?.1 + alg.r(i);
    (alg.a_expand_inv(i, l) == *ratio).then_some(l)
}
