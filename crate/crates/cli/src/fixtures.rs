//! Transcribed appendix characters and a checker against the t-algorithm.
//!
//! File format:
//!
//! ```text
//! cartan <name or json>
//! seed Y[i,l]
//! [monomials]      one monomial per line, each with coefficient 1
//! [edges]          `from -> to @ i,l`
//! [kernel i]       an expression (possibly spanning lines) equal to the character
//! ```

use crate::report::Check;
use crate::CliError;
use cartan_core::parse_cartan;
use qt_characters::{Budget, QtCharacters};
use std::collections::BTreeSet;
use std::sync::Arc;
use yt_algebra::parse::{parse_expression, parse_monomial};
use yt_algebra::{Algebra, BasisMonomial, Level, Node, TPoly};

pub const STOCK: &[(&str, &str)] = &[
    ("a1xa1_1", include_str!("../fixtures/a1xa1_1.txt")),
    ("a1xa1_2", include_str!("../fixtures/a1xa1_2.txt")),
    ("a2_1", include_str!("../fixtures/a2_1.txt")),
    ("a2_2", include_str!("../fixtures/a2_2.txt")),
    ("b2_1", include_str!("../fixtures/b2_1.txt")),
    ("b2_2", include_str!("../fixtures/b2_2.txt")),
    ("g2_1", include_str!("../fixtures/g2_1.txt")),
    ("g2_2", include_str!("../fixtures/g2_2.txt")),
];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub cartan: String,
    pub seed: String,
    pub monomials: Vec<String>,
    /// `(from, to, node, level)`, node 1-based.
    pub edges: Vec<(String, String, usize, Level)>,
    /// `(node, expression)`, node 1-based.
    pub kernels: Vec<(usize, String)>,
}

enum Section {
    Header,
    Monomials,
    Edges,
    Kernel,
}

fn perr(name: &str, line: usize, msg: impl std::fmt::Display) -> CliError {
    CliError::Parse(format!("{name}:{line}: {msg}"))
}

pub fn parse_fixture(name: &str, text: &str) -> Result<Fixture, CliError> {
    let mut f = Fixture {
        name: name.to_string(),
        ..Default::default()
    };
    let mut sec = Section::Header;
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(h) = line.strip_prefix('[').and_then(|x| x.strip_suffix(']')) {
            sec = match h.split_whitespace().collect::<Vec<_>>()[..] {
                ["monomials"] => Section::Monomials,
                ["edges"] => Section::Edges,
                ["kernel", i] => {
                    let i: usize = i.parse().map_err(|_| perr(name, k + 1, "bad kernel node"))?;
                    f.kernels.push((i, String::new()));
                    Section::Kernel
                }
                _ => return Err(perr(name, k + 1, format!("unknown section `{h}`"))),
            };
            continue;
        }
        match sec {
            Section::Header => match line.split_once(char::is_whitespace) {
                Some(("cartan", v)) => f.cartan = v.trim().to_string(),
                Some(("seed", v)) => f.seed = v.trim().to_string(),
                _ => return Err(perr(name, k + 1, format!("unexpected `{line}`"))),
            },
            Section::Monomials => f.monomials.push(line.to_string()),
            Section::Edges => {
                let (pair, label) = line.split_once('@').ok_or_else(|| perr(name, k + 1, "edge needs `@ i,l`"))?;
                let (from, to) = pair.split_once("->").ok_or_else(|| perr(name, k + 1, "edge needs `->`"))?;
                let (i, l) = label.split_once(',').ok_or_else(|| perr(name, k + 1, "label must be `i,l`"))?;
                let i = i.trim().parse().map_err(|_| perr(name, k + 1, "bad edge node"))?;
                let l = l.trim().parse().map_err(|_| perr(name, k + 1, "bad edge level"))?;
                f.edges.push((from.trim().to_string(), to.trim().to_string(), i, l));
            }
            Section::Kernel => {
                let body = &mut f.kernels.last_mut().expect("kernel section").1;
                body.push(' ');
                body.push_str(line);
            }
        }
    }
    if f.cartan.is_empty() || f.seed.is_empty() {
        return Err(CliError::Parse(format!("{name}: missing `cartan` or `seed`")));
    }
    Ok(f)
}

fn mono(alg: &Algebra, s: &str) -> Result<BasisMonomial, CliError> {
    let (tp, m) = parse_monomial(s, alg)?;
    if tp != 0 {
        return Err(CliError::Parse(format!("unexpected t-power in `{s}`")));
    }
    Ok(m)
}

/// Runs the t-algorithm on the fixture seed and compares monomials,
/// coefficients, kernel decompositions and tree edges.
pub fn check_fixture(f: &Fixture, budget: Budget) -> Result<Vec<Check>, CliError> {
    let alg = Arc::new(Algebra::from_cartan(parse_cartan(&f.cartan)?));
    let qc = QtCharacters::new(alg.clone(), budget);
    let seed = mono(&alg, &f.seed)?;
    let tree = qc.tree(&seed)?;
    let got = qc.t_algorithm(&seed)?;
    let mut out = Vec::new();

    let expected: BTreeSet<BasisMonomial> =
        f.monomials.iter().map(|s| mono(&alg, s)).collect::<Result<_, _>>()?;
    let actual: BTreeSet<BasisMonomial> = got.monomials().cloned().collect();
    let units = got.terms().all(|(_, p)| *p == TPoly::one());
    out.push(Check::new(
        format!("{} monomials", f.name),
        expected == actual && units && expected.len() == f.monomials.len(),
        format!("expected {}, got {}", expected.len(), actual.len()),
    ));

    for (i, expr) in &f.kernels {
        let x = parse_expression(expr, &alg)?;
        out.push(Check::new(
            format!("{} kernel {}", f.name, i),
            x == got,
            if x == got { String::new() } else { format!("difference:\n{}", x.sub(&got)) },
        ));
    }

    let mut want = BTreeSet::new();
    for (a, b, i, l) in &f.edges {
        want.insert((mono(&alg, a)?, mono(&alg, b)?, *i as Node - 1, *l));
    }
    let have: BTreeSet<_> = tree
        .edges
        .iter()
        .map(|e| (e.from.clone(), e.to.clone(), e.node, e.level))
        .collect();
    out.push(Check::new(
        format!("{} edges", f.name),
        want == have,
        format!("expected {}, got {}", want.len(), have.len()),
    ));
    Ok(out)
}

pub fn stock_fixtures() -> Result<Vec<Fixture>, CliError> {
    STOCK.iter().map(|(n, t)| parse_fixture(n, t)).collect()
}
