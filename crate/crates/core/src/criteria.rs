//! Closed-form predicates on `(alpha, k, delta, tau, pi)` deciding when `C2`
//! or its dual is MDS, AMDS or NMDS, plus the brute-force MDS oracle.
//!
//! Every predicate is assembled from a small set of atomic universal
//! conditions over index subsets of `alpha`. Subsets are scanned in
//! lexicographic order and the first violating subset is kept as a witness.
//! Pair sums `sum_{i != j in I} a_i a_j` run over unordered pairs and vanish
//! for `|I| <= 1`.

use std::collections::HashMap;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::construct::{elementary2, ConstructionParams};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// Outcome of a subset scan: `holds` is false iff some subset violated the
/// condition, in which case `witness` holds the first such subset (0-based
/// indices into the point list).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    Mds,
    DualAmds,
    C2Amds,
    Nmds,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub predicate: Predicate,
    pub conditions: Vec<Condition>,
    /// Named alternatives for predicates stated as a disjunction of cases.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cases: Vec<(String, bool)>,
    pub overall: bool,
}

impl ConditionReport {
    pub fn condition(&self, name: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.name == name)
    }
}

/// Sum, pair sum and sum of squares of a subset.
#[derive(Debug, Clone, Copy)]
struct SubsetSums {
    sum: Elem,
    pairs: Elem,
    squares: Elem,
}

fn subset_sums(f: &Field, alpha: &[Elem], idx: &[usize]) -> SubsetSums {
    let mut sum = Elem::ZERO;
    let mut pairs = Elem::ZERO;
    let mut squares = Elem::ZERO;
    for &i in idx {
        let a = alpha[i];
        pairs = f.add(pairs, f.mul(a, sum));
        sum = f.add(sum, a);
        squares = f.add(squares, f.mul(a, a));
    }
    SubsetSums { sum, pairs, squares }
}

fn scan(name: &str, f: &Field, alpha: &[Elem], size: usize, bad: impl Fn(&SubsetSums) -> bool) -> Condition {
    let witness = (0..alpha.len()).combinations(size).find(|idx| bad(&subset_sums(f, alpha, idx)));
    Condition { name: name.to_string(), holds: witness.is_none(), witness }
}

/// Result of an `(n, t, delta)`-set test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NtdOutcome {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

/// True iff no `t` elements of `set` sum to `delta`.
pub fn is_ntd_set(f: &Field, set: &[Elem], t: usize, delta: Elem) -> Result<NtdOutcome> {
    if t == 0 || t > set.len() {
        return Err(Error::InvalidParams(format!("subset size t = {t} must lie in 1..={}", set.len())));
    }
    let c = scan("ntd", f, set, t, |s| s.sum == delta);
    Ok(NtdOutcome { holds: c.holds, witness: c.witness })
}

/// Meet-in-the-middle variant of [`is_ntd_set`]: splits the set in halves
/// and matches partial sums. The witness, if any, is some violating subset
/// but not necessarily the lexicographically first.
pub fn is_ntd_set_mitm(f: &Field, set: &[Elem], t: usize, delta: Elem) -> Result<NtdOutcome> {
    if t == 0 || t > set.len() {
        return Err(Error::InvalidParams(format!("subset size t = {t} must lie in 1..={}", set.len())));
    }
    let half = set.len() / 2;
    let (left, right) = (&set[..half], &set[half..]);
    for t_left in 0..=t.min(left.len()) {
        let t_right = t - t_left;
        if t_right > right.len() {
            continue;
        }
        let mut sums: HashMap<Elem, Vec<usize>> = HashMap::new();
        for idx in (0..left.len()).combinations(t_left) {
            let s = f.sum(idx.iter().map(|&i| left[i]));
            sums.entry(s).or_insert(idx);
        }
        for idx in (0..right.len()).combinations(t_right) {
            let s = f.sum(idx.iter().map(|&i| right[i]));
            if let Some(l) = sums.get(&f.sub(delta, s)) {
                let mut w: Vec<usize> = l.clone();
                w.extend(idx.iter().map(|&i| i + half));
                return Ok(NtdOutcome { holds: false, witness: Some(w) });
            }
        }
    }
    Ok(NtdOutcome { holds: true, witness: None })
}

// Atomic condition names.
pub const DELTA_SET: &str = "delta_set";
pub const TAU_SET: &str = "tau_set";
pub const PAIR_SUM: &str = "pair_sum";
pub const DELTA_TAU_PI: &str = "delta_tau_pi";
pub const SQUARE_SUM: &str = "square_sum";
pub const PARITY_CORNER: &str = "parity_corner";

/// No `k-1` points sum to `delta`.
fn delta_set(p: &ConstructionParams) -> Condition {
    scan(DELTA_SET, &p.field, &p.alpha, p.k - 1, |s| s.sum == p.delta)
}

/// No `k-2` points sum to `tau`.
fn tau_set(p: &ConstructionParams) -> Condition {
    scan(TAU_SET, &p.field, &p.alpha, p.k - 2, |s| s.sum == p.tau)
}

/// For every `(k-1)`-subset: `e2(I) + pi != tau * sum(I)`.
fn pair_sum(p: &ConstructionParams) -> Condition {
    let f = &p.field;
    scan(PAIR_SUM, f, &p.alpha, p.k - 1, |s| f.add(s.pairs, p.pi) == f.mul(p.tau, s.sum))
}

/// For every `(k-2)`-subset: `pi + delta sum(J) != tau delta + sq(J) + e2(J)`.
fn delta_tau_pi(p: &ConstructionParams) -> Condition {
    let f = &p.field;
    let td = f.mul(p.tau, p.delta);
    scan(DELTA_TAU_PI, f, &p.alpha, p.k - 2, |s| {
        f.add(p.pi, f.mul(p.delta, s.sum)) == f.add(td, f.add(s.squares, s.pairs))
    })
}

/// For every `(k-2)`-subset: `pi != sq(J) + e2(J)`.
fn square_sum(p: &ConstructionParams) -> Condition {
    let f = &p.field;
    scan(SQUARE_SUM, f, &p.alpha, p.k - 2, |s| p.pi == f.add(s.squares, s.pairs))
}

/// For every `(n+1-k)`-subset: `pi - b - delta (tau - a) != sq(J) + e2(J)`.
fn parity_corner(p: &ConstructionParams) -> Condition {
    let f = &p.field;
    let a = p.alpha_sum();
    let corner = f.sub(f.sub(p.pi, p.alpha_b()), f.mul(p.delta, f.sub(p.tau, a)));
    scan(PARITY_CORNER, f, &p.alpha, p.n() + 1 - p.k, |s| corner == f.add(s.squares, s.pairs))
}

/// The four-condition MDS criterion for `C2`: `delta_set`, `tau_set`,
/// `pair_sum` and `delta_tau_pi` must all hold.
pub fn theorem2_mds(p: &ConstructionParams) -> Result<ConditionReport> {
    p.validate()?;
    let conditions = vec![delta_set(p), tau_set(p), pair_sum(p), delta_tau_pi(p)];
    let overall = conditions.iter().all(|c| c.holds);
    Ok(ConditionReport { predicate: Predicate::Mds, conditions, cases: Vec::new(), overall })
}

/// Closed-form test for `C2`'s dual being AMDS, as two alternative cases:
///
/// 1. `tau_set`, and one of `delta_set`, `pair_sum`, `delta_tau_pi` fails;
/// 2. `square_sum`, and one of `delta_set`, `pair_sum`, `tau_set`,
///    `delta_tau_pi` fails.
pub fn theorem_dual_amds(p: &ConstructionParams) -> Result<ConditionReport> {
    p.validate()?;
    let ds = delta_set(p);
    let ts = tau_set(p);
    let ps = pair_sum(p);
    let dtp = delta_tau_pi(p);
    let sq = square_sum(p);
    let case1 = ts.holds && (!ds.holds || !ps.holds || !dtp.holds);
    let case2 = sq.holds && (!ds.holds || !ps.holds || !ts.holds || !dtp.holds);
    Ok(ConditionReport {
        predicate: Predicate::DualAmds,
        conditions: vec![ds, ts, ps, dtp, sq],
        cases: vec![("case1".into(), case1), ("case2".into(), case2)],
        overall: case1 || case2,
    })
}

/// Closed-form test for `C2` being AMDS, as two alternative cases:
///
/// 1. `delta_set`, and one of `pair_sum`, `tau_set`, `delta_tau_pi` fails;
/// 2. `parity_corner`, and one of `delta_set`, `pair_sum`, `tau_set`,
///    `delta_tau_pi` fails.
pub fn theorem_c2_amds(p: &ConstructionParams) -> Result<ConditionReport> {
    p.validate()?;
    let ds = delta_set(p);
    let ts = tau_set(p);
    let ps = pair_sum(p);
    let dtp = delta_tau_pi(p);
    let pc = parity_corner(p);
    let case1 = ds.holds && (!ps.holds || !ts.holds || !dtp.holds);
    let case2 = pc.holds && (!ds.holds || !ps.holds || !ts.holds || !dtp.holds);
    Ok(ConditionReport {
        predicate: Predicate::C2Amds,
        conditions: vec![ds, ts, ps, dtp, pc],
        cases: vec![("case1".into(), case1), ("case2".into(), case2)],
        overall: case1 || case2,
    })
}

/// NMDS test for `C2`, valid only when `delta_set` and `tau_set` both hold:
/// then `C2` is NMDS iff `pair_sum` or `delta_tau_pi` fails.
pub fn corollary_nmds(p: &ConstructionParams) -> Result<ConditionReport> {
    p.validate()?;
    let ds = delta_set(p);
    let ts = tau_set(p);
    if !ds.holds || !ts.holds {
        return Err(Error::HypothesisViolated(format!(
            "alpha must avoid delta on (k-1)-sums and tau on (k-2)-sums (delta_set = {}, tau_set = {})",
            ds.holds, ts.holds
        )));
    }
    let ps = pair_sum(p);
    let dtp = delta_tau_pi(p);
    let overall = !ps.holds || !dtp.holds;
    Ok(ConditionReport { predicate: Predicate::Nmds, conditions: vec![ds, ts, ps, dtp], cases: Vec::new(), overall })
}

/// Necessary and sufficient condition for `C2`'s dual to have distance `k`,
/// derived from column dependencies of the generator: the dual is AMDS iff
/// `C2` is not MDS and no `(k-2)`-subset `J` has both `sum(J) = tau` and
/// `sq(J) + e2(J) = pi`.
pub fn dual_amds_exact(p: &ConstructionParams) -> Result<bool> {
    p.validate()?;
    let f = &p.field;
    let mds = theorem2_mds(p)?.overall;
    let dependent = scan("tau_and_square", f, &p.alpha, p.k - 2, |s| {
        s.sum == p.tau && p.pi == f.add(s.squares, s.pairs)
    });
    Ok(!mds && dependent.holds)
}

/// True iff every `k`-column submatrix of the generator is nonsingular.
pub fn mds_bruteforce(code: &LinearCode) -> bool {
    mds_witness(code).is_none()
}

/// First singular `k`-column selection (lexicographic), if any.
pub fn mds_witness(code: &LinearCode) -> Option<Vec<usize>> {
    let g = code.generator();
    let k = code.dim();
    (0..code.len())
        .combinations(k)
        .find(|cols| g.select_columns(cols).determinant().map_or(true, |d| d.is_zero()))
}

/// `sum_{i<j} a_i a_j` over a subset, exposed for callers that print
/// per-subset diagnostics.
pub fn pair_sum_of(f: &Field, alpha: &[Elem], idx: &[usize]) -> Elem {
    let xs: Vec<Elem> = idx.iter().map(|&i| alpha[i]).collect();
    elementary2(f, &xs)
}
