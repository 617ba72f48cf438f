use crate::laurent::Laurent;
use crate::CartanError;
use std::sync::RwLock;

/// Square integer matrix satisfying the Cartan axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    n: usize,
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn is_simply_laced(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.entries[i][j] >= -1))
    }
}

/// Standard matrix for a named type such as `A3`, `B2`, `E8` or `G2`. Products
/// like `A1xA1` give block-diagonal matrices.
///
/// Conventions: in `B_n` node 1 is the unique short node (`C_{1,2} = -2`), in
/// `C_n` node 1 is the unique long node (`C_{2,1} = -2`), so `B2` is
/// `[[2,-2],[-1,2]]` with `r = (1,2)`.
pub fn named_matrix(name: &str) -> Result<Vec<Vec<i64>>, CartanError> {
    let name = name.trim();
    if name.contains(['x', '×']) {
        let parts: Vec<Vec<Vec<i64>>> = name
            .split(['x', '×'])
            .map(named_matrix)
            .collect::<Result<_, _>>()?;
        let n: usize = parts.iter().map(|p| p.len()).sum();
        let mut m = vec![vec![0; n]; n];
        let mut off = 0;
        for p in parts {
            for (i, row) in p.iter().enumerate() {
                for (j, &c) in row.iter().enumerate() {
                    m[off + i][off + j] = c;
                }
            }
            off += p.len();
        }
        return Ok(m);
    }
    let unknown = || CartanError::UnknownType(name.to_string());
    let mut chars = name.chars();
    let letter = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
    let n: usize = chars.as_str().trim().parse().map_err(|_| unknown())?;
    let chain = |n: usize| {
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            m[i][i] = 2;
            if i + 1 < n {
                m[i][i + 1] = -1;
                m[i + 1][i] = -1;
            }
        }
        m
    };
    let m = match (letter, n) {
        ('A', n) if n >= 1 => chain(n),
        ('B', n) if n >= 2 => {
            let mut m = chain(n);
            m[0][1] = -2;
            m
        }
        ('C', n) if n >= 2 => {
            let mut m = chain(n);
            m[1][0] = -2;
            m
        }
        ('D', n) if n >= 4 => {
            let mut m = chain(n);
            m[n - 2][n - 1] = 0;
            m[n - 1][n - 2] = 0;
            m[n - 3][n - 1] = -1;
            m[n - 1][n - 3] = -1;
            m
        }
        ('E', n) if (6..=8).contains(&n) => {
            // Bourbaki labelling: chain 1-3-4-5-...-n with node 2 attached to 4.
            let mut m = vec![vec![0i64; n]; n];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 2;
            }
            let mut edges = vec![(0, 2), (1, 3), (2, 3)];
            edges.extend((3..n - 1).map(|k| (k, k + 1)));
            for (a, b) in edges {
                m[a][b] = -1;
                m[b][a] = -1;
            }
            m
        }
        ('F', 4) => vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -2, 0],
            vec![0, -1, 2, -1],
            vec![0, 0, -1, 2],
        ],
        ('G', 2) => vec![vec![2, -3], vec![-1, 2]],
        _ => return Err(unknown()),
    };
    Ok(m)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Integer determinant by fraction-free elimination.
fn int_det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Determinant of the submatrix with the given rows and columns, by dynamic
/// programming over column subsets.
fn laurent_minor(m: &[Vec<Laurent>], rows: &[usize], cols: &[usize]) -> Laurent {
    let k = rows.len();
    if k == 0 {
        return Laurent::one();
    }
    let full = (1usize << k) - 1;
    let mut f: Vec<Option<Laurent>> = vec![None; full + 1];
    f[0] = Some(Laurent::one());
    for mask in 1..=full {
        let depth = mask.count_ones() as usize;
        let row = rows[depth - 1];
        let mut acc = Laurent::zero();
        for (c, &col) in cols.iter().enumerate() {
            if mask & (1 << c) == 0 || m[row][col].is_zero() {
                continue;
            }
            let rest = f[mask & !(1 << c)].as_ref().unwrap();
            if rest.is_zero() {
                continue;
            }
            let term = &m[row][col] * rest;
            // sign: number of chosen columns to the right of c
            let above = (mask >> (c + 1)).count_ones();
            if above % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        f[mask] = Some(acc);
    }
    f[full].take().unwrap()
}

struct Expansion {
    /// Exponent of the first stored coefficient.
    top: i32,
    coeffs: Vec<i64>,
    remainder: Laurent,
}

/// Lazily expanded entries of `C(z)^{-1}` in `Z((z^{-1}))`.
pub struct InvCartanSeries {
    det: Laurent,
    det_top: i32,
    det_lead: i64,
    /// Indexed `row * n + col`.
    entries: RwLock<Vec<Option<Expansion>>>,
    n: usize,
}

impl InvCartanSeries {
    fn new(cz: &[Vec<Laurent>]) -> Self {
        let n = cz.len();
        let all: Vec<usize> = (0..n).collect();
        let det = laurent_minor(cz, &all, &all);
        let det_top = det.max_exp().expect("finite type has nonzero det C(z)");
        let det_lead = det.coeff(det_top);
        let mut entries = Vec::with_capacity(n * n);
        for row in 0..n {
            for col in 0..n {
                // adj(C)_{row,col} = (-1)^{row+col} * minor with row `col` and column `row` removed
                let rs: Vec<usize> = (0..n).filter(|&x| x != col).collect();
                let cs: Vec<usize> = (0..n).filter(|&x| x != row).collect();
                let mut adj = laurent_minor(cz, &rs, &cs);
                if (row + col) % 2 == 1 {
                    adj = -adj;
                }
                entries.push(adj.max_exp().map(|top| Expansion {
                    top: top - det_top,
                    coeffs: Vec::new(),
                    remainder: adj,
                }));
            }
        }
        InvCartanSeries {
            det,
            det_top,
            det_lead,
            entries: RwLock::new(entries),
            n,
        }
    }

    pub fn determinant(&self) -> &Laurent {
        &self.det
    }

    /// Coefficient of `z^r` in `C̃_{row,col}(z)`.
    pub fn coeff(&self, row: usize, col: usize, r: i32) -> i64 {
        let idx = row * self.n + col;
        {
            let guard = self.entries.read().unwrap();
            match &guard[idx] {
                None => return 0,
                Some(e) => {
                    if r > e.top {
                        return 0;
                    }
                    let k = (e.top - r) as usize;
                    if k < e.coeffs.len() {
                        return e.coeffs[k];
                    }
                }
            }
        }
        let mut guard = self.entries.write().unwrap();
        let e = guard[idx].as_mut().unwrap();
        let k = (e.top - r) as usize;
        while e.coeffs.len() <= k {
            let exp = e.top - e.coeffs.len() as i32;
            let lead = e.remainder.coeff(exp + self.det_top);
            assert!(
                lead % self.det_lead == 0,
                "inexact step in the expansion of the inverse quantized Cartan matrix"
            );
            let q = lead / self.det_lead;
            if q != 0 {
                let sub = self.det.shift(exp).scale(q);
                e.remainder -= &sub;
            }
            e.coeffs.push(q);
        }
        e.coeffs[k]
    }

    /// Highest exponent that can carry a nonzero coefficient in `C̃_{row,col}`.
    pub fn top_degree(&self, row: usize, col: usize) -> Option<i32> {
        self.entries.read().unwrap()[row * self.n + col]
            .as_ref()
            .map(|e| e.top)
    }
}

/// Validated finite-type Cartan matrix with symmetrizers, quantized matrices
/// and the inverse series.
pub struct SymmetrizedCartan {
    base: CartanMatrix,
    r: Vec<i64>,
    cz: Vec<Vec<Laurent>>,
    bz: Vec<Vec<Laurent>>,
    series: InvCartanSeries,
    heights: Vec<i64>,
    height_unit: i64,
}

impl std::fmt::Debug for SymmetrizedCartan {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SymmetrizedCartan")
            .field("entries", &self.base.entries)
            .field("r", &self.r)
            .finish()
    }
}

/// Validates the Cartan axioms and finite type, and computes all derived data.
pub fn validate_cartan(entries: &[Vec<i64>]) -> Result<SymmetrizedCartan, CartanError> {
    let n = entries.len();
    if n == 0 || entries.iter().any(|row| row.len() != n) {
        return Err(CartanError::NotCartan("matrix must be square and nonempty".into()));
    }
    for i in 0..n {
        if entries[i][i] != 2 {
            return Err(CartanError::NotCartan(format!("diagonal entry {} is not 2", i + 1)));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if entries[i][j] > 0 {
                return Err(CartanError::NotCartan(format!(
                    "positive off-diagonal entry at ({},{})",
                    i + 1,
                    j + 1
                )));
            }
            if (entries[i][j] == 0) != (entries[j][i] == 0) {
                return Err(CartanError::NotCartan(format!(
                    "zero pattern not symmetric at ({},{})",
                    i + 1,
                    j + 1
                )));
            }
        }
    }

    // symmetrizers as fractions num/den, one component at a time
    let mut num = vec![0i64; n];
    let mut den = vec![0i64; n];
    let mut comp = vec![usize::MAX; n];
    let mut ncomp = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = ncomp;
        num[s] = 1;
        den[s] = 1;
        let mut stack = vec![s];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if j == i || entries[i][j] == 0 || comp[j] != usize::MAX {
                    continue;
                }
                // r_i C_ij = r_j C_ji
                let a = num[i] * entries[i][j];
                let b = den[i] * entries[j][i];
                let g = gcd(a, b);
                num[j] = a / g;
                den[j] = b / g;
                if den[j] < 0 {
                    num[j] = -num[j];
                    den[j] = -den[j];
                }
                comp[j] = ncomp;
                stack.push(j);
            }
        }
        ncomp += 1;
    }
    let mut r = vec![0i64; n];
    for c in 0..ncomp {
        let members: Vec<usize> = (0..n).filter(|&i| comp[i] == c).collect();
        let l = members.iter().fold(1i64, |acc, &i| acc / gcd(acc, den[i]) * den[i]);
        for &i in &members {
            r[i] = num[i] * (l / den[i]);
        }
        let g = members.iter().fold(0i64, |acc, &i| gcd(acc, r[i]));
        for &i in &members {
            r[i] /= g;
        }
    }
    for i in 0..n {
        for j in 0..n {
            if r[i] * entries[i][j] != r[j] * entries[j][i] {
                return Err(CartanError::NotSymmetrizable);
            }
        }
    }
    if r.iter().any(|&x| x <= 0) {
        return Err(CartanError::NotFiniteType);
    }

    // Sylvester's criterion on diag(r) C
    let sym: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| (r[i] * entries[i][j]) as i128).collect())
        .collect();
    for k in 1..=n {
        let sub: Vec<Vec<i128>> = sym[..k].iter().map(|row| row[..k].to_vec()).collect();
        if int_det(&sub) <= 0 {
            return Err(CartanError::NotFiniteType);
        }
    }

    let cz: Vec<Vec<Laurent>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Laurent::from_terms([(r[i] as i32, 1), (-r[i] as i32, 1)])
                    } else {
                        Laurent::quantum_int(entries[i][j])
                    }
                })
                .collect()
        })
        .collect();
    let bz: Vec<Vec<Laurent>> = (0..n)
        .map(|i| {
            let d = Laurent::quantum_int(r[i]);
            (0..n).map(|j| &d * &cz[i][j]).collect()
        })
        .collect();
    let series = InvCartanSeries::new(&cz);

    // heights w with w^T C = det(C) * (1,...,1); w_j = sum_i adj(C)_{i,j}
    let cm: Vec<Vec<i128>> = entries
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    let det = int_det(&cm);
    let heights: Vec<i64> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| {
                    let minor: Vec<Vec<i128>> = (0..n)
                        .filter(|&a| a != j)
                        .map(|a| (0..n).filter(|&b| b != i).map(|b| cm[a][b]).collect())
                        .collect();
                    let s = if (i + j) % 2 == 0 { 1 } else { -1 };
                    s * int_det(&minor)
                })
                .sum::<i128>() as i64
        })
        .collect();

    Ok(SymmetrizedCartan {
        base: CartanMatrix {
            n,
            entries: entries.to_vec(),
        },
        r,
        cz,
        bz,
        series,
        heights,
        height_unit: det as i64,
    })
}

impl SymmetrizedCartan {
    /// Convenience: validates a named type.
    pub fn named(name: &str) -> Result<Self, CartanError> {
        validate_cartan(&named_matrix(name)?)
    }

    pub fn rank(&self) -> usize {
        self.base.n
    }

    pub fn matrix(&self) -> &CartanMatrix {
        &self.base
    }

    pub fn c(&self, i: usize, j: usize) -> i64 {
        self.base.entries[i][j]
    }

    pub fn r(&self, i: usize) -> i32 {
        self.r[i] as i32
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.r
    }

    pub fn cz(&self) -> &[Vec<Laurent>] {
        &self.cz
    }

    pub fn bz(&self) -> &[Vec<Laurent>] {
        &self.bz
    }

    pub fn series(&self) -> &InvCartanSeries {
        &self.series
    }

    /// `π_r(C̃_{j,i}(z))`, argument order as in the commutation formulas.
    pub fn inv_coeff(&self, i: usize, j: usize, r: i32) -> i64 {
        self.series.coeff(j, i, r)
    }

    /// Positive integer weights `w` with `Σ_j w_j C_{j,i} = height_unit()` for
    /// every `i`; `Σ w_i u_{i,l}` drops by `height_unit()` per factor `A^{-1}`.
    pub fn height_weights(&self) -> &[i64] {
        &self.heights
    }

    pub fn height_unit(&self) -> i64 {
        self.height_unit
    }

    pub fn is_simply_laced(&self) -> bool {
        self.base.is_simply_laced()
    }
}
