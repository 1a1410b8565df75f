//! Self-verification suite: every identity the library relies on is checked
//! against an independent computation, degree by degree, and collected into
//! a deterministic report.
//!
//! Checks that would require brute-force enumeration beyond the configured
//! budget are reported as skipped (with the estimated workload), never as
//! failed; everything else reports either a pass or the first counterexample
//! found.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::cutjoin::{
    commutativity_counterexample, composition_identity_counterexample,
    eigenfunction_counterexample, grading_counterexample, schur_basis_is_invertible,
    structure_constants, structure_constants_oracle_with_cap, DEFAULT_CLASS_SUM_CAP,
};
use crate::character::char_table;
use crate::error::Error;
use crate::genfun::{
    direct_coefficient, initial_closed_form_double, initial_closed_form_single, initial_value,
    pde_holds, GenFunSeries,
};
use crate::hurwitz::{
    degeneration_check, hurwitz_number, hurwitz_oracle_with_budget, oracle_workload, CoverSpec,
};
use crate::partition::{centralizer_order, class_size, factorial, partitions_of, Partition};

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail(String),
    Skipped(String),
}

/// One named check with its outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    #[serde(flatten)]
    pub status: CheckStatus,
}

/// Full report of a verification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub max_degree: usize,
    pub budget: u128,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        !self
            .checks
            .iter()
            .any(|c| matches!(c.status, CheckStatus::Fail(_)))
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let mut pass = 0;
        let mut fail = 0;
        let mut skip = 0;
        for c in &self.checks {
            match c.status {
                CheckStatus::Pass => pass += 1,
                CheckStatus::Fail(_) => fail += 1,
                CheckStatus::Skipped(_) => skip += 1,
            }
        }
        (pass, fail, skip)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            CheckStatus::Pass => write!(f, "PASS     {}", self.name),
            CheckStatus::Fail(msg) => write!(f, "FAIL     {}: {}", self.name, msg),
            CheckStatus::Skipped(msg) => write!(f, "SKIPPED  {}: {}", self.name, msg),
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let (pass, fail, skip) = self.counts();
        write!(
            f,
            "{} checks: {} passed, {} failed, {} skipped",
            self.checks.len(),
            pass,
            fail,
            skip
        )
    }
}

fn check(name: String, status: CheckStatus) -> Check {
    Check { name, status }
}

fn status_of(counterexample: Option<String>) -> CheckStatus {
    match counterexample {
        None => CheckStatus::Pass,
        Some(msg) => CheckStatus::Fail(msg),
    }
}

/// Class-level counting identities: centralizer times class size is the
/// group order for every class, and the class sizes sum to the group order.
fn class_size_check(d: usize) -> CheckStatus {
    let dfact = factorial(d);
    let mut total = BigInt::zero();
    for delta in partitions_of(d) {
        let size = class_size(&delta);
        if &size * centralizer_order(&delta) != dfact {
            return CheckStatus::Fail(format!(
                "centralizer times class size differs from {d}! for {delta}"
            ));
        }
        total += size;
    }
    if total != dfact {
        return CheckStatus::Fail(format!("class sizes of degree {d} sum to {total}, not {d}!"));
    }
    CheckStatus::Pass
}

/// First and second orthogonality of the character table.
fn orthogonality_check(d: usize) -> CheckStatus {
    let t = char_table(d);
    if let Some((a, b)) = t.row_orthogonality_counterexample() {
        return CheckStatus::Fail(format!("row pair {a}, {b}"));
    }
    if let Some((a, b)) = t.column_orthogonality_counterexample() {
        return CheckStatus::Fail(format!("column pair {a}, {b}"));
    }
    CheckStatus::Pass
}

/// Structure constants from the operator algebra against raw products of
/// class sums; skipped above the permutation-enumeration cap.
fn structure_constants_check(d: usize) -> CheckStatus {
    match structure_constants_oracle_with_cap(d, DEFAULT_CLASS_SUM_CAP) {
        Err(Error::ClassSumCapExceeded { cap, .. }) => CheckStatus::Skipped(format!(
            "class-sum enumeration capped at degree {cap}"
        )),
        Err(e) => CheckStatus::Fail(format!("oracle error: {e}")),
        Ok(oracle) => {
            let algebra = structure_constants(d);
            for a in partitions_of(d) {
                for b in partitions_of(d) {
                    for c in partitions_of(d) {
                        if algebra.get(&a, &b, &c) != oracle.get(&a, &b, &c) {
                            return CheckStatus::Fail(format!("triple {a}, {b} -> {c}"));
                        }
                    }
                }
            }
            CheckStatus::Pass
        }
    }
}

/// Both initial values against their closed forms.
fn initial_value_check(d: usize) -> CheckStatus {
    if initial_value(0, d, false) != initial_closed_form_single(d) {
        return CheckStatus::Fail("single-alphabet initial value".into());
    }
    if initial_value(0, d, true) != initial_closed_form_double(d) {
        return CheckStatus::Fail("double-alphabet initial value".into());
    }
    CheckStatus::Pass
}

/// All ordered profile tuples of the given length, in canonical order.
fn profile_tuples(d: usize, k: usize) -> Vec<Vec<Partition>> {
    let parts = partitions_of(d);
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::with_capacity(out.len() * parts.len());
        for tuple in &out {
            for p in &parts {
                let mut t = tuple.clone();
                t.push(p.clone());
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// All multisets of profiles of the given length, in canonical order.
fn profile_multisets(d: usize, k: usize) -> Vec<Vec<Partition>> {
    let parts = partitions_of(d);
    fn extend(
        parts: &[Partition],
        from: usize,
        prefix: &mut Vec<Partition>,
        remaining: usize,
        out: &mut Vec<Vec<Partition>>,
    ) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for i in from..parts.len() {
            prefix.push(parts[i].clone());
            extend(parts, i, prefix, remaining - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&parts, 0, &mut Vec::new(), k, &mut out);
    out
}

fn spec_label(spec: &CoverSpec) -> String {
    let profiles: Vec<String> = spec.profiles().iter().map(|p| p.to_string()).collect();
    format!(
        "genus {}, degree {}, profiles [{}]",
        spec.genus(),
        spec.degree(),
        profiles.join(", ")
    )
}

/// Character-formula counts against brute-force tuple enumeration for every
/// ordered profile tuple of the given length. Skipped whole if any tuple's
/// enumeration would exceed the budget.
fn oracle_check(d: usize, genus: usize, k: usize, budget: u128) -> CheckStatus {
    let tuples = profile_tuples(d, k);
    let mut worst = BigInt::zero();
    let mut specs = Vec::with_capacity(tuples.len());
    for tuple in tuples {
        let spec = CoverSpec::new(genus, d, tuple).expect("profiles generated for this degree");
        let load = oracle_workload(&spec);
        if load > worst {
            worst = load.clone();
        }
        specs.push(spec);
    }
    if worst > BigInt::from(budget) {
        return CheckStatus::Skipped(format!(
            "largest enumeration needs {worst} composed tuples, budget {budget}"
        ));
    }
    for spec in &specs {
        let expected = hurwitz_number(spec);
        match hurwitz_oracle_with_budget(spec, budget) {
            Ok(counted) if counted == expected => {}
            Ok(counted) => {
                return CheckStatus::Fail(format!(
                    "{}: character formula {expected}, enumeration {counted}",
                    spec_label(spec)
                ));
            }
            Err(e) => return CheckStatus::Fail(format!("{}: {e}", spec_label(spec))),
        }
    }
    CheckStatus::Pass
}

/// Cutting the base surface along a separating circle: the count composes
/// through an intermediate profile sum for every split position.
fn degeneration_check_all(d: usize) -> CheckStatus {
    let k_max = if d <= 4 {
        4
    } else if d <= 6 {
        3
    } else {
        2
    };
    for genus in 0..=1usize {
        for k in 2..=k_max {
            for tuple in profile_multisets(d, k) {
                let spec = CoverSpec::new(genus, d, tuple).expect("profiles match degree");
                for split in 1..k {
                    match degeneration_check(&spec, split) {
                        Ok(true) => {}
                        Ok(false) => {
                            return CheckStatus::Fail(format!(
                                "{}, split {split}",
                                spec_label(&spec)
                            ));
                        }
                        Err(e) => {
                            return CheckStatus::Fail(format!(
                                "{}: {e}",
                                spec_label(&spec)
                            ));
                        }
                    }
                }
            }
        }
    }
    CheckStatus::Pass
}

/// Operator evolution against direct counting: one marked profile, both
/// alphabets, genus 0 and 1, exponents through 3, plus the evolution
/// equation residuals.
fn series_check(d: usize) -> CheckStatus {
    const ORDER: usize = 3;
    for delta in partitions_of(d) {
        for genus in 0..=1usize {
            for double in [false, true] {
                let label = format!(
                    "genus {genus}, mark {delta}, {} alphabet",
                    if double { "double" } else { "single" }
                );
                let series = match GenFunSeries::build(
                    genus,
                    d,
                    vec![delta.clone()],
                    vec![ORDER],
                    double,
                ) {
                    Ok(s) => s,
                    Err(e) => return CheckStatus::Fail(format!("{label}: {e}")),
                };
                for l in 0..=ORDER {
                    let direct = match direct_coefficient(genus, d, &[(delta.clone(), l)], double)
                    {
                        Ok(p) => p,
                        Err(e) => return CheckStatus::Fail(format!("{label}: {e}")),
                    };
                    if series.coefficient_or_zero(&[l]) != direct {
                        return CheckStatus::Fail(format!("{label}: coefficient of u^{l}"));
                    }
                }
                match pde_holds(&series) {
                    Ok(true) => {}
                    Ok(false) => {
                        return CheckStatus::Fail(format!("{label}: evolution residual"))
                    }
                    Err(e) => return CheckStatus::Fail(format!("{label}: {e}")),
                }
            }
        }
    }
    CheckStatus::Pass
}

/// The operator-algebra subset of the suite: composition rule, commuting
/// normalized operators, and the diagonal action on the deformed basis.
pub fn operator_checks(d: usize) -> Vec<Check> {
    vec![
        check(
            format!("operator composition rule (degree {d})"),
            status_of(
                composition_identity_counterexample(d)
                    .map(|(a, b)| format!("profiles {a}, {b}")),
            ),
        ),
        check(
            format!("normalized operators commute (degree {d})"),
            status_of(
                commutativity_counterexample(d).map(|(a, b)| format!("profiles {a}, {b}")),
            ),
        ),
        check(
            format!("deformed Schur functions are eigenfunctions (degree {d})"),
            status_of(
                eigenfunction_counterexample(d)
                    .map(|(lambda, delta)| format!("basis {lambda}, operator {delta}")),
            ),
        ),
    ]
}

/// Run every check for every degree up to `max_degree`, in a fixed order.
/// `budget` caps the permutation enumerations; checks that would exceed it
/// are skipped, not failed.
pub fn verify_all(max_degree: usize, budget: u128) -> VerifyReport {
    assert!(max_degree >= 1, "verification needs at least degree 1");
    let mut checks = Vec::new();
    for d in 1..=max_degree {
        checks.push(check(
            format!("class sizes and centralizers (degree {d})"),
            class_size_check(d),
        ));
        checks.push(check(
            format!("character orthogonality (degree {d})"),
            orthogonality_check(d),
        ));
        checks.push(check(
            format!("operator entry grading (degree {d})"),
            status_of(grading_counterexample(d).map(|(delta, source, target)| {
                format!("operator {delta}, entry {source} -> {target}")
            })),
        ));
        checks.extend(operator_checks(d));
        checks.push(check(
            format!("structure constants match class algebra (degree {d})"),
            structure_constants_check(d),
        ));
        checks.push(check(
            format!("deformed Schur basis is invertible (degree {d})"),
            if schur_basis_is_invertible(d) {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail("change of basis is not two-sided invertible".into())
            },
        ));
        checks.push(check(
            format!("initial values match closed forms (degree {d})"),
            initial_value_check(d),
        ));
        for genus in 0..=1usize {
            for k in 0..=3usize {
                checks.push(check(
                    format!(
                        "cover counts match enumeration (degree {d}, genus {genus}, {k} branch points)"
                    ),
                    oracle_check(d, genus, k, budget),
                ));
            }
        }
        checks.push(check(
            format!("degeneration identity (degree {d})"),
            degeneration_check_all(d),
        ));
        checks.push(check(
            format!("series evolution matches direct counts (degree {d})"),
            series_check(d),
        ));
    }
    VerifyReport {
        max_degree,
        budget,
        checks,
    }
}
