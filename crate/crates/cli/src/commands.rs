use crate::config::{Format, RunConfig};
use crate::{to_json, verify, CliError};
use qt_characters::{rep_monomial_string, CharacterTree, RepElement};
use serde_json::{json, Value};
use yt_algebra::parse::{parse_monomial, parse_rep_monomial};
use yt_algebra::{BasisMonomial, YtElement};

/// Parses a seed monomial and checks it is dominant.
pub fn parse_seed(cfg: &RunConfig, s: &str) -> Result<BasisMonomial, CliError> {
    let (tp, m) = parse_monomial(s, cfg.algebra())?;
    if tp != 0 {
        return Err(CliError::Parse(format!("seed `{s}` carries a t-power")));
    }
    if !m.is_dominant() {
        return Err(CliError::Domain(format!("monomial {m} is not dominant")));
    }
    Ok(m)
}

fn element_text(cfg: &RunConfig, x: &YtElement) -> String {
    if !cfg.classical() {
        return x.to_string();
    }
    let t1 = x.at_t1();
    if t1.is_empty() {
        return "0\n".into();
    }
    t1.iter().map(|(m, c)| format!("({c}) {m}\n")).collect()
}

fn element_json(cfg: &RunConfig, x: &YtElement) -> Vec<Value> {
    if cfg.classical() {
        x.at_t1()
            .iter()
            .map(|(m, c)| json!({"monomial": m.to_string(), "coefficient": c.to_string()}))
            .collect()
    } else {
        x.terms()
            .map(|(m, p)| json!({"monomial": m.to_string(), "coefficient": p.to_string()}))
            .collect()
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('"', "\\\"")
}

/// Graphviz rendering with edges labelled `i,l`.
pub fn tree_dot(tree: &CharacterTree, classical: bool) -> String {
    let ids: Vec<&BasisMonomial> = tree.vertices.keys().collect();
    let id = |m: &BasisMonomial| ids.iter().position(|x| *x == m).expect("vertex");
    let mut s = String::from("digraph character {\n  node [shape=box];\n");
    let root = id(&tree.root);
    for (k, (m, p)) in tree.vertices.iter().enumerate() {
        let coeff = if classical { p.eval_one().to_string() } else { p.to_string() };
        let label = if coeff == "1" { m.to_string() } else { format!("({coeff}) {m}") };
        let extra = if k == root { ", style=bold" } else { "" };
        s.push_str(&format!("  n{k} [label=\"{}\"{extra}];\n", dot_escape(&label)));
    }
    for e in &tree.edges {
        s.push_str(&format!(
            "  n{} -> n{} [label=\"{},{}\"];\n",
            id(&e.from),
            id(&e.to),
            e.node + 1,
            e.level
        ));
    }
    s.push_str("}\n");
    s
}

pub fn cmd_tchar(cfg: &RunConfig, seed: &str) -> Result<String, CliError> {
    let m = parse_seed(cfg, seed)?;
    let qc = cfg.engine();
    let x = qc.t_algorithm(&m)?;
    match cfg.format {
        Format::Text => Ok(element_text(cfg, &x)),
        Format::Dot => Ok(tree_dot(&qc.tree(&m)?, cfg.classical())),
        Format::Json => {
            let tree = qc.tree(&m)?;
            let edges: Vec<Value> = tree
                .edges
                .iter()
                .map(|e| {
                    json!({
                        "from": e.from.to_string(),
                        "to": e.to.to_string(),
                        "label": format!("{},{}", e.node + 1, e.level),
                    })
                })
                .collect();
            Ok(to_json(&json!({
                "cartan": cfg.cartan_source,
                "seed": m.to_string(),
                "classical": cfg.classical(),
                "count": x.len(),
                "terms": element_json(cfg, &x),
                "edges": edges,
            })))
        }
    }
}

pub fn cmd_kl(cfg: &RunConfig, seed: &str) -> Result<String, CliError> {
    let m = parse_seed(cfg, seed)?;
    let qc = cfg.engine();
    let kl = qc.lt_and_kl(&m)?;
    let rows: Vec<(String, i32, String)> = kl
        .rows
        .iter()
        .map(|r| {
            let p = if cfg.classical() { r.p.eval_one().to_string() } else { r.p.to_string() };
            (r.monomial.to_string(), r.shift, p)
        })
        .collect();
    match cfg.format {
        Format::Text => {
            let mut s = String::new();
            for (mono, shift, p) in &rows {
                s.push_str(&format!("t^{shift} {mono} | {p}\n"));
            }
            if rows.is_empty() {
                s.push_str("no lower terms\n");
            }
            Ok(s)
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(mono, shift, p)| json!({"monomial": mono, "shift": shift, "p": p}))
                .collect();
            Ok(to_json(&json!({
                "cartan": cfg.cartan_source,
                "seed": m.to_string(),
                "classical": cfg.classical(),
                "rows": rows,
            })))
        }
        Format::Dot => Err(CliError::Parse("kl does not support --format dot".into())),
    }
}

pub fn parse_rep(cfg: &RunConfig, s: &str) -> Result<RepElement, CliError> {
    Ok(RepElement::from_monomial(parse_rep_monomial(s, cfg.algebra().rank())?))
}

pub fn cmd_product(cfg: &RunConfig, a: &str, b: &str) -> Result<String, CliError> {
    let (x, y) = (parse_rep(cfg, a)?, parse_rep(cfg, b)?);
    let p = cfg.engine().star_product(&x, &y)?;
    let terms: Vec<(String, String)> = if cfg.classical() {
        p.at_t1().iter().map(|(m, c)| (rep_monomial_string(m), c.to_string())).collect()
    } else {
        p.terms().map(|(m, c)| (rep_monomial_string(m), c.to_string())).collect()
    };
    match cfg.format {
        Format::Text => {
            if terms.is_empty() {
                return Ok("0\n".into());
            }
            Ok(terms.iter().map(|(m, c)| format!("({c}) {m}\n")).collect())
        }
        Format::Json => {
            let terms: Vec<Value> = terms
                .iter()
                .map(|(m, c)| json!({"monomial": m, "coefficient": c}))
                .collect();
            Ok(to_json(&json!({
                "cartan": cfg.cartan_source,
                "left": a,
                "right": b,
                "classical": cfg.classical(),
                "product": terms,
            })))
        }
        Format::Dot => Err(CliError::Parse("product does not support --format dot".into())),
    }
}

/// Renders the suite report; a failing suite is returned as the error
/// variant together with the rendered text.
pub fn cmd_verify(cfg: &RunConfig, suite: &str) -> Result<String, (String, CliError)> {
    let report = verify::run_suite(cfg, suite).map_err(|e| (String::new(), e))?;
    let text = report.render(cfg.format).map_err(|e| (String::new(), e))?;
    if report.passed() {
        Ok(text)
    } else {
        let names: Vec<String> = report.failures().iter().map(|c| c.name.clone()).collect();
        Err((text, CliError::Verification(names.join(", "))))
    }
}
