//! Text and JSON renderers for the CLI. All orderings are canonical, so
//! repeated runs produce byte-identical output.

use std::fmt::Write as _;

use num_traits::{Pow, Zero};
use serde_json::json;

use hurwitz_core::character::CharTable;
use hurwitz_core::cutjoin::{CutJoinOp, DiffTerm, StructureConstants};
use hurwitz_core::genfun::GenFunSeries;
use hurwitz_core::scalar::BigRational;
use hurwitz_core::zlaurent::ZLaurent;

/// Join already-rendered terms with ` + ` / ` - `, folding the sign of
/// negative terms into the separator.
fn join_terms<I: IntoIterator<Item = String>>(terms: I) -> String {
    let mut out = String::new();
    for t in terms {
        if out.is_empty() {
            out.push_str(&t);
        } else if let Some(body) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(body);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// `scalar * tail` with the unit coefficients folded away.
fn scalar_times(scalar: String, tail: String) -> String {
    if tail.is_empty() {
        return scalar;
    }
    match scalar.as_str() {
        "1" => tail,
        "-1" => format!("-{tail}"),
        _ => format!("{scalar}*{tail}"),
    }
}

pub fn char_table_text(t: &CharTable) -> String {
    let classes = t.partitions();
    let n = classes.len();
    // Column 0: row labels; then one column per class.
    let mut rows: Vec<Vec<String>> = Vec::with_capacity(n + 2);
    let mut header = vec!["irrep".to_string()];
    header.extend(classes.iter().map(|c| c.to_string()));
    rows.push(header);
    let mut sizes = vec!["size".to_string()];
    sizes.extend((0..n).map(|c| t.class_size_at(c).to_string()));
    rows.push(sizes);
    for (r, lambda) in classes.iter().enumerate() {
        let mut row = vec![lambda.to_string()];
        row.extend((0..n).map(|c| t.chi_at(r, c).to_string()));
        rows.push(row);
    }
    let widths: Vec<usize> = (0..=n)
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &rows {
        for (c, cell) in row.iter().enumerate() {
            if c == 0 {
                let _ = write!(out, "{cell:<width$}", width = widths[0]);
            } else {
                let _ = write!(out, "  {cell:>width$}", width = widths[c]);
            }
        }
        out.push('\n');
    }
    out.pop();
    out
}

pub fn char_table_json(t: &CharTable) -> String {
    let classes: Vec<_> = t.partitions().to_vec();
    let n = classes.len();
    let class_sizes: Vec<String> = (0..n).map(|c| t.class_size_at(c).to_string()).collect();
    let characters: Vec<Vec<String>> = (0..n)
        .map(|r| (0..n).map(|c| t.chi_at(r, c).to_string()).collect())
        .collect();
    json!({
        "degree": t.degree(),
        "classes": classes,
        "class_sizes": class_sizes,
        "irreps": classes,
        "characters": characters,
    })
    .to_string()
}

/// Evaluate one differential term at a rational `z`; `None` means the term
/// vanishes there. Errors at `z = 0` against a negative exponent.
fn eval_term(term: &DiffTerm, z: &BigRational) -> Result<Option<DiffTerm>, String> {
    let coeff = if z.is_zero() {
        match term.zexp.cmp(&0) {
            std::cmp::Ordering::Less => {
                return Err(
                    "cannot evaluate at z = 0: the operator has negative z exponents".into(),
                )
            }
            std::cmp::Ordering::Equal => term.coeff.clone(),
            std::cmp::Ordering::Greater => return Ok(None),
        }
    } else {
        &term.coeff * Pow::pow(z, term.zexp as i32)
    };
    Ok(Some(DiffTerm {
        coeff,
        zexp: 0,
        factors: term.factors.clone(),
        derivs: term.derivs.clone(),
    }))
}

pub fn operator_text(op: &CutJoinOp, z: Option<&BigRational>) -> Result<String, String> {
    let mut rendered = Vec::new();
    for term in op.diff_terms() {
        match z {
            None => rendered.push(term.render()),
            Some(zv) => {
                if let Some(evaluated) = eval_term(&term, zv)? {
                    rendered.push(evaluated.render());
                }
            }
        }
    }
    Ok(join_terms(rendered))
}

pub fn operator_json(op: &CutJoinOp, z: Option<&BigRational>) -> Result<String, String> {
    let mut matrix = Vec::new();
    for ((source, target), entry) in op.matrix().entries() {
        matrix.push(match z {
            None => json!({
                "source": source,
                "target": target,
                "entry": entry,
            }),
            Some(zv) => {
                let value = entry.eval(zv).ok_or_else(|| {
                    "cannot evaluate at z = 0: the operator has negative z exponents"
                        .to_string()
                })?;
                if value.is_zero() {
                    continue;
                }
                json!({
                    "source": source,
                    "target": target,
                    "value": value.to_string(),
                })
            }
        });
    }
    let mut differential = Vec::new();
    for term in op.diff_terms() {
        differential.push(match z {
            None => json!({
                "coeff": term.coeff.to_string(),
                "zexp": term.zexp,
                "factors": term.factors,
                "derivs": term.derivs,
            }),
            Some(zv) => match eval_term(&term, zv)? {
                None => continue,
                Some(evaluated) => json!({
                    "coeff": evaluated.coeff.to_string(),
                    "factors": evaluated.factors,
                    "derivs": evaluated.derivs,
                }),
            },
        });
    }
    Ok(json!({
        "degree": op.degree(),
        "partition": op.delta(),
        "normalized": op.is_normalized(),
        "z": z.map(|v| v.to_string()),
        "matrix": matrix,
        "differential": differential,
    })
    .to_string())
}

pub fn constants_text(constants: &StructureConstants) -> String {
    let mut out = String::new();
    for ((a, b, c), value) in constants.triples() {
        let _ = writeln!(out, "C[{a} * {b} -> {c}] = {value}");
    }
    out
}

pub fn constants_json(constants: &StructureConstants, method: &str) -> String {
    let triples: Vec<_> = constants
        .triples()
        .map(|((a, b, c), value)| {
            json!({
                "left": a,
                "right": b,
                "product": c,
                "value": value.to_string(),
            })
        })
        .collect();
    json!({
        "degree": constants.degree(),
        "method": method,
        "triples": triples,
    })
    .to_string()
}

/// `u`-monomial factor of one series term: `u^2`, `u1*u2^3`, or nothing.
fn u_factor(exponents: &[usize], single: bool) -> String {
    let mut pieces = Vec::new();
    for (i, &l) in exponents.iter().enumerate() {
        if l == 0 {
            continue;
        }
        let name = if single {
            "u".to_string()
        } else {
            format!("u{}", i + 1)
        };
        pieces.push(if l == 1 { name } else { format!("{name}^{l}") });
    }
    pieces.join("*")
}

/// One-line sum ordered by total `u` degree, then exponent vector, then
/// canonical monomial order, with the highest `z` power first per monomial.
pub fn series_text(series: &GenFunSeries) -> String {
    let single = series.profiles().len() == 1;
    let mut keys: Vec<&Vec<usize>> = series.coefficients().map(|(l, _)| l).collect();
    keys.sort_by_key(|l| l.iter().sum::<usize>());
    let mut terms = Vec::new();
    for l in keys {
        let poly = series.coefficient(l).expect("key from iteration");
        let u = u_factor(l, single);
        for (m, coeff) in poly.terms() {
            let pairs: Vec<(i64, &BigRational)> = coeff.terms().collect();
            for (e, c) in pairs.into_iter().rev() {
                let mut tail_parts = Vec::new();
                if !u.is_empty() {
                    tail_parts.push(u.clone());
                }
                if let Some(vars) = m.render() {
                    tail_parts.push(vars);
                }
                terms.push(scalar_times(
                    ZLaurent::render_term(c, e),
                    tail_parts.join("*"),
                ));
            }
        }
    }
    join_terms(terms)
}
