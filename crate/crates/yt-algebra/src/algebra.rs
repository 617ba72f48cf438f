use crate::element::YtElement;
use crate::monomial::{AMonomial, BasisMonomial, Level, Node};
use crate::{TPoly, YtError};
use cartan_core::SymmetrizedCartan;
use std::collections::HashMap;
use std::sync::Arc;

/// Half-width of the precomputed level-difference window for `𝒩`.
const WINDOW: i32 = 128;

/// The quantum torus `Y_t` attached to a Cartan matrix.
///
/// Multiplication of basis monomials is `:m1: :m2: = t^{𝒩(m1,m2)} :m1 m2:`.
pub struct Algebra {
    cartan: Arc<SymmetrizedCartan>,
    n: usize,
    r: Vec<i32>,
    /// `N_{i,j}(d) = π_{r_j+d}(C̃_{j,i}) - π_{-r_j+d}(C̃_{j,i})` for `|d| <= WINDOW`.
    ntab: Vec<i64>,
    a_shape: Vec<BasisMonomial>,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Algebra").field("cartan", &self.cartan).finish()
    }
}

impl Algebra {
    pub fn new(cartan: Arc<SymmetrizedCartan>) -> Self {
        let n = cartan.rank();
        let r: Vec<i32> = (0..n).map(|i| cartan.r(i)).collect();
        let width = (2 * WINDOW + 1) as usize;
        let mut ntab = vec![0i64; n * n * width];
        for i in 0..n {
            for j in 0..n {
                for d in -WINDOW..=WINDOW {
                    ntab[(i * n + j) * width + (d + WINDOW) as usize] =
                        cartan.inv_coeff(i, j, r[j] + d) - cartan.inv_coeff(i, j, -r[j] + d);
                }
            }
        }
        let a_shape = (0..n).map(|i| a_expand_raw(&cartan, i, 0)).collect();
        Algebra {
            cartan,
            n,
            r,
            ntab,
            a_shape,
        }
    }

    pub fn from_cartan(cartan: SymmetrizedCartan) -> Self {
        Self::new(Arc::new(cartan))
    }

    pub fn cartan(&self) -> &Arc<SymmetrizedCartan> {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn r(&self, i: Node) -> i32 {
        self.r[i]
    }

    fn pi(&self, i: Node, j: Node, e: i32) -> i64 {
        self.cartan.inv_coeff(i, j, e)
    }

    #[inline]
    fn n_pair(&self, i: Node, j: Node, d: i32) -> i64 {
        if d.abs() <= WINDOW {
            self.ntab[(i * self.n + j) * (2 * WINDOW + 1) as usize + (d + WINDOW) as usize]
        } else {
            self.pi(i, j, self.r[j] + d) - self.pi(i, j, -self.r[j] + d)
        }
    }

    /// `𝒩(m1, m2) = Σ u_{i,l}(m1) u_{j,k}(m2) (π_{r_j+l-k} - π_{-r_j+l-k})(C̃_{j,i})`.
    pub fn bicharacter_n(&self, m1: &BasisMonomial, m2: &BasisMonomial) -> i64 {
        let mut s = 0i64;
        for &(l, i, a) in m1.entries() {
            for &(k, j, b) in m2.entries() {
                let v = self.n_pair(i, j, l - k);
                if v != 0 {
                    s += (a as i64) * (b as i64) * v;
                }
            }
        }
        s
    }

    /// Exponent `E` with `g_1 g_2 ... g_k = t^E :g_1 ... g_k:` for basis
    /// elements `g_a`.
    pub fn word_exponent(&self, word: &[BasisMonomial]) -> i64 {
        let mut prefix = BasisMonomial::one();
        let mut e = 0;
        for g in word {
            e += self.bicharacter_n(&prefix, g);
            prefix = prefix.mul(g);
        }
        e
    }

    /// Commutation exponent of Thm "dessus": `Ỹ_{i,l} Ỹ_{j,k} = t^γ Ỹ_{j,k} Ỹ_{i,l}`.
    ///
    /// With `d = l - k`, the delta sum over `r` collapses to four lookups in
    /// `C̃_{j,i}`. The sign is fixed so that `γ = 𝒩(Y_{i,l},Y_{j,k}) - 𝒩(Y_{j,k},Y_{i,l})`
    /// and `Ỹ_l Ỹ_{l-2} = t^{-2} Ỹ_{l-2} Ỹ_l` for sl2.
    pub fn gamma(&self, i: Node, l: Level, j: Node, k: Level) -> i64 {
        let d = l - k;
        let rj = self.r[j];
        self.pi(i, j, d + rj) + self.pi(i, j, -rj - d) - self.pi(i, j, rj - d) - self.pi(i, j, d - rj)
    }

    /// `Ã_{i,l}^{-1} Ã_{j,k}^{-1} = t^α Ã_{j,k}^{-1} Ã_{i,l}^{-1}` (Prop "yenga").
    pub fn alpha(&self, i: Node, l: Level, j: Node, k: Level) -> i64 {
        let d = l - k;
        if i == j {
            let ri = self.r[i];
            return 2 * ((d == -2 * ri) as i64 - (d == 2 * ri) as i64);
        }
        let c = self.cartan.c(i, j);
        if c == 0 {
            return 0;
        }
        let ri = self.r[i] as i64;
        let mut s = 0;
        let mut q = c + 1;
        while q <= -c - 1 {
            s += (d as i64 == ri + q) as i64 - (d as i64 == -ri + q) as i64;
            q += 2;
        }
        2 * s
    }

    /// `Ã_{i,l} Ỹ_{j,k} = t^β Ỹ_{j,k} Ã_{i,l}`.
    pub fn beta(&self, i: Node, l: Level, j: Node, k: Level) -> i64 {
        if i != j {
            return 0;
        }
        let d = l - k;
        let ri = self.r[i];
        2 * ((d == -ri) as i64 - (d == ri) as i64)
    }

    /// Product of two basis elements: `(exponent of t, monomial)`.
    pub fn mono_mul(&self, m1: &BasisMonomial, m2: &BasisMonomial) -> (i32, BasisMonomial) {
        (self.bicharacter_n(m1, m2) as i32, m1.mul(m2))
    }

    pub fn multiply(&self, x: &YtElement, y: &YtElement) -> YtElement {
        let mut acc: HashMap<BasisMonomial, TPoly> = HashMap::new();
        for (m1, p1) in x.terms() {
            for (m2, p2) in y.terms() {
                let (e, m) = self.mono_mul(m1, m2);
                let c = (p1 * p2).shift(e);
                acc.entry(m)
                    .and_modify(|v| *v += &c)
                    .or_insert(c);
            }
        }
        acc.into_iter().filter(|(_, p)| !p.is_zero()).collect()
    }

    /// Ordered product of several elements.
    pub fn product<'a, I: IntoIterator<Item = &'a YtElement>>(&self, it: I) -> YtElement {
        let mut acc = YtElement::one();
        for x in it {
            acc = self.multiply(&acc, x);
        }
        acc
    }

    /// `x^k` for `k >= 0`.
    pub fn power(&self, x: &YtElement, k: u32) -> YtElement {
        let mut acc = YtElement::one();
        for _ in 0..k {
            acc = self.multiply(&acc, x);
        }
        acc
    }

    /// `Y`-exponents of `A_{i,l}` (Lemma "gen").
    pub fn a_expand(&self, i: Node, l: Level) -> BasisMonomial {
        self.a_shape[i].shift(l)
    }

    pub fn a_expand_inv(&self, i: Node, l: Level) -> BasisMonomial {
        self.a_expand(i, l).inverse()
    }

    /// `Y`-exponents of an [`AMonomial`] `∏ A^{-v}`.
    pub fn a_monomial(&self, a: &AMonomial) -> BasisMonomial {
        BasisMonomial::from_factors(a.entries().iter().flat_map(|&(i, l, v)| {
            self.a_shape[i]
                .factors()
                .map(move |(j, k, e)| (j, k + l, -(e * v as i32)))
                .collect::<Vec<_>>()
        }))
    }

    /// The unique `v >= 0` with `m = base · ∏ A^{-v}`, or `None`.
    ///
    /// The lowest level of `A_{i,l}` carries exactly `Y_{i,l-r_i}` with
    /// exponent 1, so the lowest level of `base / m` determines the next `v`.
    pub fn factor_over_a(&self, m: &BasisMonomial, base: &BasisMonomial) -> Option<AMonomial> {
        let mut rest = base.div(m);
        let Some(ceiling) = rest.max_level() else {
            return Some(AMonomial::default());
        };
        let mut out = Vec::new();
        while let Some(low) = rest.min_level() {
            let here: Vec<(Level, Node, i32)> =
                rest.entries().iter().copied().filter(|e| e.0 == low).collect();
            let mut sub = BasisMonomial::one();
            for (l, i, e) in here {
                if e < 0 {
                    return None;
                }
                let at = l + self.r[i];
                if at + self.r[i] > ceiling {
                    return None;
                }
                out.push((i, at, e as u32));
                sub = sub.mul(&self.a_expand(i, at).pow(e));
            }
            rest = rest.div(&sub);
        }
        Some(AMonomial::from_factors(out))
    }

    /// `m <= m'` in the partial order generated by the `A^{-1}`.
    pub fn leq(&self, m: &BasisMonomial, m2: &BasisMonomial) -> bool {
        self.factor_over_a(m, m2).is_some()
    }

    /// Linear height with `height(m A_{i,l}^{-1}) = height(m) - height_unit`.
    pub fn height(&self, m: &BasisMonomial) -> i64 {
        let w = self.cartan.height_weights();
        m.entries().iter().map(|&(_, i, e)| w[i] * e as i64).sum()
    }

    /// Number of `A^{-1}` factors separating `m` from `top` (assuming `m <= top`).
    pub fn a_depth(&self, m: &BasisMonomial, top: &BasisMonomial) -> i64 {
        (self.height(top) - self.height(m)) / self.cartan.height_unit()
    }

    /// `m` is dominant for every node in `nodes`.
    pub fn is_dominant(&self, m: &BasisMonomial, nodes: &[Node]) -> bool {
        m.is_dominant_for(|i| nodes.contains(&i))
    }

    /// Bar involution: `p(t)·:m: ↦ p(t^{-1}) t^{𝒩(m,m)} :m:`.
    pub fn bar(&self, x: &YtElement) -> YtElement {
        x.map_coeffs(|m, p| p.invert_var().shift(self.bicharacter_n(m, m) as i32))
    }

    /// `N_t` of an ordered word of generators `Ỹ_{i,l}^{±1}` (repeated `|e|`
    /// times): the exponent with `word = t^{N_t} m̃`, where `m̃` is the
    /// level-sorted product. The inverse generator is
    /// `Ỹ^{-1} = t^{𝒩(Y,Y)} :Y^{-1}:`.
    pub fn nt_exponent(&self, word: &[(Node, Level, i32)]) -> i64 {
        let ordered = |w: &[(Node, Level, i32)]| -> i64 {
            let mut gens = Vec::new();
            let mut own = 0;
            for &(i, l, e) in w {
                for _ in 0..e.unsigned_abs() {
                    gens.push(BasisMonomial::y_pow(i, l, e.signum()));
                    if e < 0 {
                        let yy = BasisMonomial::y(i, l);
                        own += self.bicharacter_n(&yy, &yy);
                    }
                }
            }
            own + self.word_exponent(&gens)
        };
        let sorted: Vec<(Node, Level, i32)> =
            BasisMonomial::from_factors(word.iter().copied()).factors().collect();
        ordered(word) - ordered(&sorted)
    }

    /// `𝒩_t(m1,m2) = Σ_{l>l'} 𝒩(π_l(m1), π_{l'}(m2)) - 𝒩(π_{l'}(m2), π_l(m1))`.
    pub fn nt_bicharacter(&self, m1: &BasisMonomial, m2: &BasisMonomial) -> i64 {
        let mut s = 0;
        for l in m1.levels() {
            let a = m1.at_level(l);
            for lp in m2.levels() {
                if l > lp {
                    let b = m2.at_level(lp);
                    s += self.bicharacter_n(&a, &b) - self.bicharacter_n(&b, &a);
                }
            }
        }
        s
    }

    fn require_simply_laced(&self) -> Result<(), YtError> {
        if self.cartan.is_simply_laced() {
            Ok(())
        } else {
            Err(YtError::NotSimplyLaced)
        }
    }

    /// The bicharacter `d` of Prop "form" for monomials given by `(y, v)` data,
    /// `m = ∏ Y^{y} ∏ A^{-v}`.
    pub fn d_bicharacter(
        &self,
        (y1, v1): (&BasisMonomial, &AMonomial),
        (y2, v2): (&BasisMonomial, &AMonomial),
    ) -> Result<i64, YtError> {
        self.require_simply_laced()?;
        let u2 = |i: Node, l: Level| -> i64 {
            let mut u = y2.u(i, l) as i64 - v2.v(i, l - 1) as i64 - v2.v(i, l + 1) as i64;
            for j in 0..self.n {
                if self.cartan.c(i, j) == -1 {
                    u += v2.v(j, l) as i64;
                }
            }
            u
        };
        let mut levels: Vec<Level> = Vec::new();
        for m in [y1, y2] {
            levels.extend(m.levels());
        }
        for a in [v1, v2] {
            levels.extend(a.entries().iter().map(|e| e.1));
        }
        let (lo, hi) = match (levels.iter().min(), levels.iter().max()) {
            (Some(&a), Some(&b)) => (a - 2, b + 2),
            _ => return Ok(0),
        };
        let mut s = 0i64;
        for i in 0..self.n {
            for l in lo..=hi {
                s += v1.v(i, l + 1) as i64 * u2(i, l) + y1.u(i, l + 1) as i64 * v2.v(i, l) as i64;
            }
        }
        Ok(s)
    }

    /// `ε(i,l; j,m) = π_{l+1-m}(C̃_{i,j})` from the Varagnolo–Vasserot form.
    pub fn vv_epsilon(&self, i: Node, l: Level, j: Node, m: Level) -> Result<i64, YtError> {
        self.require_simply_laced()?;
        Ok(self.cartan.series().coeff(i, j, l + 1 - m))
    }

    /// `ε'(i,l; j,m) = π_{l-1-m}(C̃_{i,j})`.
    pub fn vv_epsilon_prime(&self, i: Node, l: Level, j: Node, m: Level) -> Result<i64, YtError> {
        self.require_simply_laced()?;
        Ok(self.cartan.series().coeff(i, j, l - 1 - m))
    }
}

fn a_expand_raw(c: &SymmetrizedCartan, i: Node, l: Level) -> BasisMonomial {
    let ri = c.r(i);
    let mut f = vec![(i, l - ri, 1), (i, l + ri, 1)];
    for j in 0..c.rank() {
        let cji = c.c(j, i);
        if j != i && cji < 0 {
            let mut k = cji + 1;
            while k <= -cji - 1 {
                f.push((j, l + k as i32, -1));
                k += 2;
            }
        }
    }
    BasisMonomial::from_factors(f)
}
