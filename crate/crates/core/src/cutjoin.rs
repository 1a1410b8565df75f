//! Cut-and-join-type operators graded by a genus marker `z`.
//!
//! For each partition `delta` of `d` there is an operator `W(delta, z)` on
//! the span of the degree-`d` power-sum monomials, whose matrix entry from
//! `p_source` to `p_target` is
//!
//! `(d!/|C_source|) * mu_0(source, delta, target) *
//!     z^(d + l(source) - l(delta) - l(target))`
//!
//! with `mu_0` the genus-zero three-point cover count. The normalized
//! variant multiplies by `z^(l(delta) - d)`. The power of `z` on each entry
//! records the Euler characteristic drop of the corresponding covers, so
//! composites stay graded; the operators pairwise commute, multiply like the
//! class algebra (see [`structure_constants`]), and act diagonally on the
//! genus-weighted Schur polynomials returned by [`schur_z`].

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::character::char_table;
use crate::error::{Error, Result};
use crate::hurwitz::{hurwitz_number, CoverSpec};
use crate::partition::{aut_factor, class_size, factorial, partitions_of, Partition};
use crate::perm::class_members;
use crate::ppoly::{Monomial, PPoly};
use crate::scalar::BigRational;
use crate::zlaurent::ZLaurent;

/// Largest degree the permutation-product oracle for structure constants
/// will attempt by default (the scan is quadratic in class sizes).
pub const DEFAULT_CLASS_SUM_CAP: usize = 7;

/// A linear operator on the span of `{p_gamma : gamma a partition of d}`,
/// with `ZLaurent` entries, stored sparsely as `(source, target) -> entry`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OpMatrix {
    degree: usize,
    entries: BTreeMap<(Partition, Partition), ZLaurent>,
}

impl OpMatrix {
    pub fn zero(degree: usize) -> Self {
        OpMatrix {
            degree,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(degree: usize) -> Self {
        let mut m = OpMatrix::zero(degree);
        for gamma in partitions_of(degree) {
            m.add_entry(gamma.clone(), gamma, &ZLaurent::one());
        }
        m
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Nonzero entries as `((source, target), entry)` in canonical order.
    pub fn entries(&self) -> impl Iterator<Item = (&(Partition, Partition), &ZLaurent)> {
        self.entries.iter()
    }

    pub fn get(&self, source: &Partition, target: &Partition) -> Option<&ZLaurent> {
        self.entries.get(&(source.clone(), target.clone()))
    }

    /// Entry lookup with zero default.
    pub fn entry(&self, source: &Partition, target: &Partition) -> ZLaurent {
        self.get(source, target).cloned().unwrap_or_else(ZLaurent::zero)
    }

    pub fn add_entry(&mut self, source: Partition, target: Partition, value: &ZLaurent) {
        if value.is_zero() {
            return;
        }
        let key = (source, target);
        match self.entries.get_mut(&key) {
            Some(entry) => {
                *entry = &*entry + value;
                if entry.is_zero() {
                    self.entries.remove(&key);
                }
            }
            None => {
                self.entries.insert(key, value.clone());
            }
        }
    }

    pub fn add(&self, other: &OpMatrix) -> OpMatrix {
        assert_eq!(self.degree, other.degree, "operator degree mismatch");
        let mut out = self.clone();
        for ((s, t), v) in &other.entries {
            out.add_entry(s.clone(), t.clone(), v);
        }
        out
    }

    pub fn sub(&self, other: &OpMatrix) -> OpMatrix {
        self.add(&other.scale(&ZLaurent::from_rational(-BigRational::one())))
    }

    pub fn scale(&self, factor: &ZLaurent) -> OpMatrix {
        if factor.is_zero() {
            return OpMatrix::zero(self.degree);
        }
        let mut out = OpMatrix::zero(self.degree);
        for ((s, t), v) in &self.entries {
            out.add_entry(s.clone(), t.clone(), &(v * factor));
        }
        out
    }

    /// Operator composition `self . inner`: apply `inner` first.
    pub fn compose(&self, inner: &OpMatrix) -> OpMatrix {
        assert_eq!(self.degree, inner.degree, "operator degree mismatch");
        let mut out = OpMatrix::zero(self.degree);
        for ((s, mid), v1) in &inner.entries {
            for ((mid2, t), v2) in &self.entries {
                if mid == mid2 {
                    out.add_entry(s.clone(), t.clone(), &(v1 * v2));
                }
            }
        }
        out
    }

    /// Apply to a polynomial whose every monomial has `p` degree equal to
    /// the operator degree; `q` factors ride along untouched.
    pub fn apply(&self, poly: &PPoly) -> Result<PPoly> {
        let mut out = PPoly::zero();
        for (m, c) in poly.terms() {
            if m.p_degree() != self.degree {
                return Err(Error::DegreeMismatch {
                    expected: self.degree,
                    found: m.p_degree(),
                    context: "operator applied to off-degree monomial".into(),
                });
            }
            for ((s, t), v) in &self.entries {
                if s == m.p() {
                    let image = match m.q() {
                        Some(q) => Monomial::with_q(q.clone(), t.clone()),
                        None => Monomial::p_only(t.clone()),
                    };
                    out.add_term(image, &(c * v));
                }
            }
        }
        Ok(out)
    }
}

/// One summand of the differential-operator form: `coeff * z^zexp *
/// p_factors * prod_j d/dp_(derivs_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffTerm {
    pub coeff: BigRational,
    pub zexp: i64,
    /// Multiplication part `p_factors`.
    pub factors: Partition,
    /// Differentiation part, one `d/dp_r` per part.
    pub derivs: Partition,
}

impl DiffTerm {
    /// Render as e.g. `1/2*z^2*p_(2)*d/dp_(1)*d/dp_(1)`.
    pub fn render(&self) -> String {
        let mut s = PPoly::render_scalar_monomial(
            &self.coeff,
            self.zexp,
            &Monomial::p_only(self.factors.clone()),
        );
        for &r in self.derivs.parts() {
            s.push_str(&format!("*d/dp_({r})"));
        }
        s
    }
}

/// A cut-and-join-type operator attached to one branching profile.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CutJoinOp {
    delta: Partition,
    normalized: bool,
    matrix: OpMatrix,
}

impl CutJoinOp {
    /// The graded operator `W(delta, z)` on degree-`d` monomials. Errors
    /// unless `delta` is a partition of `degree`.
    pub fn build(degree: usize, delta: &Partition) -> Result<CutJoinOp> {
        if delta.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: delta.degree(),
                context: "operator profile".into(),
            });
        }
        let dfact = factorial(degree);
        let all = partitions_of(degree);
        let mut matrix = OpMatrix::zero(degree);
        for source in &all {
            let scale = BigRational::new(dfact.clone(), class_size(source));
            for target in &all {
                let spec = CoverSpec::new(
                    0,
                    degree,
                    vec![source.clone(), delta.clone(), target.clone()],
                )?;
                let mu = hurwitz_number(&spec);
                if mu.is_zero() {
                    continue;
                }
                let exp = degree as i64 + source.length() as i64
                    - delta.length() as i64
                    - target.length() as i64;
                matrix.add_entry(
                    source.clone(),
                    target.clone(),
                    &ZLaurent::monomial(exp, &scale * mu),
                );
            }
        }
        Ok(CutJoinOp {
            delta: delta.clone(),
            normalized: false,
            matrix,
        })
    }

    /// The normalized operator `z^(l(delta) - d) W(delta, z)`, whose action
    /// on the genus-weighted Schur basis is diagonal.
    pub fn build_normalized(degree: usize, delta: &Partition) -> Result<CutJoinOp> {
        CutJoinOp::build(degree, delta)?.normalize()
    }

    /// Rescale by `z^(l(delta) - d)`. Errors if already normalized.
    pub fn normalize(&self) -> Result<CutJoinOp> {
        if self.normalized {
            return Err(Error::AlreadyNormalized);
        }
        let shift = self.delta.length() as i64 - self.degree() as i64;
        Ok(CutJoinOp {
            delta: self.delta.clone(),
            normalized: true,
            matrix: self.matrix.scale(&ZLaurent::monomial(shift, BigRational::one())),
        })
    }

    pub fn delta(&self) -> &Partition {
        &self.delta
    }

    pub fn degree(&self) -> usize {
        self.matrix.degree()
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn matrix(&self) -> &OpMatrix {
        &self.matrix
    }

    pub fn apply(&self, poly: &PPoly) -> Result<PPoly> {
        self.matrix.apply(poly)
    }

    /// The differential-operator form: entry `(source -> target)` becomes
    /// `entry / aut(source) * p_target * prod_j d/dp_(source_j)`, where
    /// `aut` is the product of part-multiplicity factorials. Terms are
    /// ordered by descending `z` power, then source, then target.
    pub fn diff_terms(&self) -> Vec<DiffTerm> {
        let mut out = Vec::new();
        for ((source, target), entry) in self.matrix.entries() {
            let aut = BigRational::from_integer(aut_factor(source));
            for (e, c) in entry.terms() {
                out.push(DiffTerm {
                    coeff: c / &aut,
                    zexp: e,
                    factors: target.clone(),
                    derivs: source.clone(),
                });
            }
        }
        out.sort_by(|a, b| {
            b.zexp
                .cmp(&a.zexp)
                .then_with(|| a.derivs.cmp(&b.derivs))
                .then_with(|| a.factors.cmp(&b.factors))
        });
        out
    }
}

/// The genus-weighted Schur polynomial
/// `S_lambda{p, z} = sum_gamma z^(-d - l(gamma)) (|C_gamma| chi_lambda(gamma)
/// / d!) p_gamma`, the common eigenbasis of the normalized operators.
pub fn schur_z(lambda: &Partition) -> PPoly {
    let d = lambda.degree();
    let t = char_table(d);
    let row = t.index_of(lambda).expect("lambda indexes its own table");
    let mut out = PPoly::zero();
    for (col, gamma) in t.partitions().iter().enumerate() {
        let coeff = BigRational::new(
            t.class_size_at(col) * t.chi_at(row, col),
            t.group_order().clone(),
        );
        let exp = -(d as i64) - gamma.length() as i64;
        out.add_term(
            Monomial::p_only(gamma.clone()),
            &ZLaurent::monomial(exp, coeff),
        );
    }
    out
}

/// Connection coefficients of the class algebra, normalized as
/// `(d!/|C_c|) mu_0(a, b, c)`: the number of ways an element of `C_c`
/// factors as (element of `C_a`) * (element of `C_b`). Only nonzero values
/// are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureConstants {
    degree: usize,
    table: BTreeMap<(Partition, Partition, Partition), BigRational>,
}

impl StructureConstants {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Lookup with zero default.
    pub fn get(&self, a: &Partition, b: &Partition, c: &Partition) -> BigRational {
        self.table
            .get(&(a.clone(), b.clone(), c.clone()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Nonzero triples in canonical order.
    pub fn triples(
        &self,
    ) -> impl Iterator<Item = (&(Partition, Partition, Partition), &BigRational)> {
        self.table.iter()
    }
}

/// Structure constants via the character sum for `mu_0`.
pub fn structure_constants(degree: usize) -> StructureConstants {
    let dfact = factorial(degree);
    let all = partitions_of(degree);
    let mut table = BTreeMap::new();
    for a in &all {
        for b in &all {
            for c in &all {
                let spec = CoverSpec::new(0, degree, vec![a.clone(), b.clone(), c.clone()])
                    .expect("partitions of the degree");
                let mu = hurwitz_number(&spec);
                if mu.is_zero() {
                    continue;
                }
                let value = BigRational::new(dfact.clone(), class_size(c)) * mu;
                table.insert((a.clone(), b.clone(), c.clone()), value);
            }
        }
    }
    StructureConstants { degree, table }
}

/// Structure constants by literally multiplying class elements, with the
/// default degree cap. Independent of all character machinery.
pub fn structure_constants_oracle(degree: usize) -> Result<StructureConstants> {
    structure_constants_oracle_with_cap(degree, DEFAULT_CLASS_SUM_CAP)
}

/// As [`structure_constants_oracle`], refusing degrees above `cap`.
pub fn structure_constants_oracle_with_cap(
    degree: usize,
    cap: usize,
) -> Result<StructureConstants> {
    if degree > cap {
        return Err(Error::ClassSumCapExceeded { degree, cap });
    }
    let all = partitions_of(degree);
    let classes: Vec<Vec<crate::perm::Perm>> = all.iter().map(class_members).collect();
    let mut table = BTreeMap::new();
    for (ia, a) in all.iter().enumerate() {
        for (ib, b) in all.iter().enumerate() {
            // Count the cycle types of all pairwise products; each class is
            // hit uniformly, so dividing by the class size gives the
            // per-element count.
            let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
            for x in &classes[ia] {
                for y in &classes[ib] {
                    *counts.entry(x.then(y).cycle_type()).or_insert(0) += 1;
                }
            }
            for (c, n) in counts {
                let value = BigRational::new(n.into(), class_size(&c));
                table.insert((a.clone(), b.clone(), c), value);
            }
        }
    }
    Ok(StructureConstants { degree, table })
}

/// First pair violating `W(a, z) . W(b, z) = sum_c z^(d - l(a) - l(b) +
/// l(c)) C^c_(a,b) W(c, z)`, or `None` when the identity holds at this
/// degree.
pub fn composition_identity_counterexample(degree: usize) -> Option<(Partition, Partition)> {
    let all = partitions_of(degree);
    let ops: Vec<CutJoinOp> = all
        .iter()
        .map(|p| CutJoinOp::build(degree, p).expect("valid profile"))
        .collect();
    let constants = structure_constants(degree);
    let d = degree as i64;
    for (ia, a) in all.iter().enumerate() {
        for (ib, b) in all.iter().enumerate() {
            let lhs = ops[ia].matrix().compose(ops[ib].matrix());
            let mut rhs = OpMatrix::zero(degree);
            for (ic, c) in all.iter().enumerate() {
                let coeff = constants.get(a, b, c);
                if coeff.is_zero() {
                    continue;
                }
                let exp = d - a.length() as i64 - b.length() as i64 + c.length() as i64;
                rhs = rhs.add(&ops[ic].matrix().scale(&ZLaurent::monomial(exp, coeff)));
            }
            if lhs != rhs {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

pub fn composition_identity_holds(degree: usize) -> bool {
    composition_identity_counterexample(degree).is_none()
}

/// First pair of profiles whose operators fail to commute, or `None`.
pub fn commutativity_counterexample(degree: usize) -> Option<(Partition, Partition)> {
    let all = partitions_of(degree);
    let ops: Vec<CutJoinOp> = all
        .iter()
        .map(|p| CutJoinOp::build(degree, p).expect("valid profile"))
        .collect();
    for ia in 0..ops.len() {
        for ib in (ia + 1)..ops.len() {
            let ab = ops[ia].matrix().compose(ops[ib].matrix());
            let ba = ops[ib].matrix().compose(ops[ia].matrix());
            if ab != ba {
                return Some((all[ia].clone(), all[ib].clone()));
            }
        }
    }
    None
}

/// First `(lambda, delta)` with `W^(delta) S_lambda != phi_lambda(delta)
/// S_lambda` for the normalized operators, or `None`.
pub fn eigenfunction_counterexample(degree: usize) -> Option<(Partition, Partition)> {
    let t = char_table(degree);
    let schur: Vec<PPoly> = t.partitions().iter().map(schur_z).collect();
    for (id, delta) in t.partitions().iter().enumerate() {
        let op = CutJoinOp::build_normalized(degree, delta).expect("valid profile");
        for (il, lambda) in t.partitions().iter().enumerate() {
            let lhs = op.apply(&schur[il]).expect("schur is homogeneous");
            let rhs = schur[il].scale_rat(&t.phi_at(il, id));
            if lhs != rhs {
                return Some((lambda.clone(), delta.clone()));
            }
        }
    }
    None
}

/// Check that the genus-weighted Schur polynomials form a basis of the
/// degree-`d` span, by multiplying the coordinate matrix with its explicit
/// inverse `(gamma, lambda) -> z^(d + l(gamma)) chi_lambda(gamma)` on both
/// sides.
pub fn schur_basis_is_invertible(degree: usize) -> bool {
    let t = char_table(degree);
    let n = t.num_classes();
    let d = degree as i64;
    // s[l][g] = coefficient of p_gamma in S_lambda.
    let mut s = vec![vec![ZLaurent::zero(); n]; n];
    let mut inv = vec![vec![ZLaurent::zero(); n]; n];
    for l in 0..n {
        for (g, gamma) in t.partitions().iter().enumerate() {
            let coeff = BigRational::new(
                t.class_size_at(g) * t.chi_at(l, g),
                t.group_order().clone(),
            );
            s[l][g] = ZLaurent::monomial(-d - gamma.length() as i64, coeff);
            inv[g][l] = ZLaurent::monomial(
                d + gamma.length() as i64,
                BigRational::from_integer(t.chi_at(l, g).clone()),
            );
        }
    }
    for i in 0..n {
        for j in 0..n {
            let mut si = ZLaurent::zero();
            let mut is = ZLaurent::zero();
            for k in 0..n {
                si = &si + &(&s[i][k] * &inv[k][j]);
                is = &is + &(&inv[i][k] * &s[k][j]);
            }
            let expected = if i == j {
                ZLaurent::one()
            } else {
                ZLaurent::zero()
            };
            if si != expected || is != expected {
                return false;
            }
        }
    }
    true
}

/// First operator entry violating the grading rule (every entry must be a
/// single `z` power with exponent `d + l(source) - l(delta) - l(target)`,
/// and that exponent must be even and non-negative), or `None`.
pub fn grading_counterexample(degree: usize) -> Option<(Partition, Partition, Partition)> {
    for delta in partitions_of(degree) {
        let op = CutJoinOp::build(degree, &delta).expect("valid profile");
        for ((source, target), entry) in op.matrix().entries() {
            let expected = degree as i64 + source.length() as i64
                - delta.length() as i64
                - target.length() as i64;
            match entry.single_term() {
                Some((e, _)) if e == expected && e >= 0 && e % 2 == 0 => {}
                _ => return Some((delta.clone(), source.clone(), target.clone())),
            }
        }
    }
    None
}
