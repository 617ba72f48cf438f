//! Text grammar for monomials and elements.
//!
//! A monomial is a whitespace-separated product of `Y[i,l]^e`, `A[i,l]^-e`
//! and `t^a` factors, with 1-based nodes. `Y[l]` is shorthand for `Y[1,l]`.
//! The `A` factors are expanded into `Y` exponents. Representation monomials
//! use `X[i,l]^e` with `e >= 0`.

use crate::algebra::Algebra;
use crate::element::YtElement;
use crate::monomial::{BasisMonomial, Level, Node};
use crate::{TPoly, YtError};

fn err(msg: impl Into<String>) -> YtError {
    YtError::Parse(msg.into())
}

struct Factor {
    letter: char,
    node: Node,
    level: Level,
    exp: i32,
}

fn parse_int(s: &str) -> Result<i32, YtError> {
    let s = s.trim();
    let s = s.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(s);
    s.parse::<i32>().map_err(|_| err(format!("bad integer `{s}`")))
}

fn split_exp(tok: &str) -> Result<(&str, i32), YtError> {
    match tok.split_once('^') {
        Some((base, e)) => Ok((base, parse_int(e)?)),
        None => Ok((tok, 1)),
    }
}

fn parse_factor(tok: &str, rank: usize) -> Result<Factor, YtError> {
    let (base, exp) = split_exp(tok)?;
    let mut chars = base.chars();
    let letter = chars.next().ok_or_else(|| err("empty factor"))?;
    let inner = chars
        .as_str()
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| err(format!("expected `{letter}[i,l]` in `{tok}`")))?;
    let (node, level) = match inner.split_once(',') {
        Some((i, l)) => (parse_int(i)?, parse_int(l)?),
        None => {
            if rank != 1 {
                return Err(err(format!("`{tok}` needs a node index outside sl2")));
            }
            (1, parse_int(inner)?)
        }
    };
    if node < 1 || node as usize > rank {
        return Err(err(format!("node {node} out of range 1..={rank}")));
    }
    Ok(Factor {
        letter,
        node: node as usize - 1,
        level,
        exp,
    })
}

fn tokens(s: &str) -> impl Iterator<Item = &str> {
    s.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty())
}

/// Parses a monomial into `(t-power, :m:)`.
pub fn parse_monomial(s: &str, alg: &Algebra) -> Result<(i32, BasisMonomial), YtError> {
    let rank = alg.rank();
    let mut tpow = 0;
    let mut m = BasisMonomial::one();
    for tok in tokens(s) {
        if tok == "1" {
            continue;
        }
        if tok == "t" || tok.starts_with("t^") {
            tpow += split_exp(tok)?.1;
            continue;
        }
        let f = parse_factor(tok, rank)?;
        match f.letter {
            'Y' => m = m.mul(&BasisMonomial::y_pow(f.node, f.level, f.exp)),
            'A' => {
                if f.exp > 0 {
                    return Err(err(format!("A-factors need negative exponents: `{tok}`")));
                }
                m = m.mul(&alg.a_expand(f.node, f.level).pow(f.exp));
            }
            c => return Err(err(format!("unknown factor letter `{c}`"))),
        }
    }
    Ok((tpow, m))
}

/// Parses a representation monomial `X[i,l]^e ...` with nonnegative exponents.
pub fn parse_rep_monomial(s: &str, rank: usize) -> Result<BasisMonomial, YtError> {
    let mut m = BasisMonomial::one();
    for tok in tokens(s) {
        if tok == "1" {
            continue;
        }
        let f = parse_factor(tok, rank)?;
        if f.letter != 'X' {
            return Err(err(format!("expected an X factor, got `{tok}`")));
        }
        if f.exp < 0 {
            return Err(err(format!("negative exponent in `{tok}`")));
        }
        m = m.mul(&BasisMonomial::y_pow(f.node, f.level, f.exp));
    }
    Ok(m)
}

/// Parses a Laurent polynomial such as `1 + t^-2`, `-2t` or `3`.
pub fn parse_tpoly(s: &str) -> Result<TPoly, YtError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err("empty polynomial"));
    }
    let mut terms = Vec::new();
    let mut cur = String::new();
    let mut prev_caret = false;
    for c in compact.chars() {
        if (c == '+' || c == '-') && !cur.is_empty() && !prev_caret {
            terms.push(std::mem::take(&mut cur));
        }
        prev_caret = c == '^';
        cur.push(c);
    }
    terms.push(cur);
    let mut out = Vec::new();
    for term in terms {
        let (sign, body) = match term.strip_prefix('-') {
            Some(b) => (-1, b),
            None => (1, term.strip_prefix('+').unwrap_or(&term)),
        };
        let (coef, exp) = match body.find('t') {
            None => (body.parse::<i64>().map_err(|_| err(format!("bad term `{term}`")))?, 0),
            Some(k) => {
                let c = if k == 0 {
                    1
                } else {
                    body[..k].parse::<i64>().map_err(|_| err(format!("bad term `{term}`")))?
                };
                let e = match &body[k + 1..] {
                    "" => 1,
                    rest => parse_int(rest.strip_prefix('^').ok_or_else(|| err(format!("bad term `{term}`")))?)?,
                };
                (c, e)
            }
        };
        out.push((exp, sign * coef));
    }
    Ok(TPoly::from_terms(out))
}

/// Parses the line format produced by `YtElement`'s `Display`:
/// one `(poly) monomial` per line, or `0`.
pub fn parse_element(s: &str, alg: &Algebra) -> Result<YtElement, YtError> {
    let mut x = YtElement::zero();
    for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
        if line == "0" {
            continue;
        }
        let (poly, rest) = if let Some(body) = line.strip_prefix('(') {
            let close = body.find(')').ok_or_else(|| err(format!("unbalanced `{line}`")))?;
            (parse_tpoly(&body[..close])?, &body[close + 1..])
        } else {
            (TPoly::one(), line)
        };
        let (tpow, m) = parse_monomial(rest, alg)?;
        x.add_term(m, &poly.shift(tpow));
    }
    Ok(x)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Open,
    Close,
    Normal(String),
    Atom(String),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, YtError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        match c {
            c if c.is_whitespace() || c == '*' => k += 1,
            '+' => {
                out.push(Tok::Plus);
                k += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                k += 1;
            }
            '(' => {
                out.push(Tok::Open);
                k += 1;
            }
            ')' => {
                out.push(Tok::Close);
                k += 1;
            }
            ':' => {
                let end = chars[k + 1..]
                    .iter()
                    .position(|&x| x == ':')
                    .ok_or_else(|| err("unterminated `:`"))?;
                out.push(Tok::Normal(chars[k + 1..k + 1 + end].iter().collect()));
                k += end + 2;
            }
            _ => {
                let start = k;
                let mut depth = 0;
                while k < chars.len() {
                    let x = chars[k];
                    if x == '[' {
                        depth += 1;
                    } else if x == ']' {
                        depth -= 1;
                    } else if depth == 0 && (x.is_whitespace() || "+-():*".contains(x)) {
                        break;
                    }
                    k += 1;
                    if x == '^' && k < chars.len() && chars[k] == '-' {
                        k += 1;
                    }
                }
                out.push(Tok::Atom(chars[start..k].iter().collect()));
            }
        }
    }
    Ok(out)
}

struct ExprParser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    alg: &'a Algebra,
}

impl ExprParser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expr(&mut self) -> Result<YtElement, YtError> {
        let mut acc = YtElement::zero();
        let mut sign = 1;
        if self.peek() == Some(&Tok::Minus) {
            sign = -1;
            self.pos += 1;
        }
        loop {
            let t = self.term()?;
            acc = if sign > 0 { acc.add(&t) } else { acc.sub(&t) };
            match self.peek() {
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<YtElement, YtError> {
        let mut acc: Option<YtElement> = None;
        while let Some(tok) = self.peek().cloned() {
            let f = match tok {
                Tok::Open => {
                    self.pos += 1;
                    let inner = self.expr()?;
                    if self.peek() != Some(&Tok::Close) {
                        return Err(err("missing `)`"));
                    }
                    self.pos += 1;
                    inner
                }
                Tok::Normal(body) => {
                    self.pos += 1;
                    let (tp, m) = parse_monomial(&body, self.alg)?;
                    YtElement::from_term(m, TPoly::power(tp))
                }
                Tok::Atom(a) => {
                    self.pos += 1;
                    if let Ok(c) = a.parse::<i64>() {
                        YtElement::from_term(BasisMonomial::one(), TPoly::constant(c))
                    } else {
                        let (tp, m) = parse_monomial(&a, self.alg)?;
                        YtElement::from_term(m, TPoly::power(tp))
                    }
                }
                _ => break,
            };
            acc = Some(match acc {
                None => f,
                Some(x) => self.alg.multiply(&x, &f),
            });
        }
        acc.ok_or_else(|| err("empty term"))
    }
}

/// Evaluates an expression in `Y_t`: sums and differences of ordered
/// products of factors. A factor is an integer, `t^a`, a single variable
/// `Y[i,l]^e` or `A[i,l]^-e` (the basis element with that exponent), a
/// normal-ordered monomial `:...:`, or a parenthesized expression.
pub fn parse_expression(s: &str, alg: &Algebra) -> Result<YtElement, YtError> {
    let mut p = ExprParser {
        toks: tokenize(s)?,
        pos: 0,
        alg,
    };
    let x = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(err(format!("unexpected token {:?}", p.toks[p.pos])));
    }
    Ok(x)
}
