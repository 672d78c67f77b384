//! Exhaustive `(delta, tau, pi)` sweeps that put the closed-form predicates
//! next to brute-force distances for every triple.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::{Classification, Verdict};
use crate::construct::{c2_generator, ConstructionParams, Triple};
use crate::criteria::{corollary_nmds, theorem2_mds, theorem_c2_amds, theorem_dual_amds};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field, FieldDescriptor};

pub const SEARCH_SCHEMA: &str = "rlmds.search/v1";

/// Which measured property a sweep filters on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    Mds,
    Amds,
    DualAmds,
    Nmds,
}

impl Target {
    pub fn matches(self, c: &Classification) -> bool {
        match self {
            Target::Mds => c.verdict == Verdict::Mds,
            Target::Amds => c.is_amds(),
            Target::DualAmds => c.dual_is_amds(),
            Target::Nmds => c.verdict == Verdict::Nmds,
        }
    }
}

/// One triple: the four MDS conditions, the other closed-form predicates and
/// the measured distances.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleRow {
    pub delta: Elem,
    pub tau: Elem,
    pub pi: Elem,
    pub cond1: bool,
    pub cond2: bool,
    pub cond3: bool,
    pub cond4: bool,
    pub mds_predicted: bool,
    pub c2_amds_predicted: bool,
    pub dual_amds_predicted: bool,
    /// `None` where the NMDS corollary's hypothesis fails.
    pub nmds_predicted: Option<bool>,
    pub verdict: Verdict,
    pub d: usize,
    pub d_dual: usize,
}

impl TripleRow {
    pub fn triple(&self) -> Triple {
        Triple::new(self.delta, self.tau, self.pi)
    }
}

/// Counts of triples where a closed-form predicate disagrees with the
/// measured distances.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatches {
    pub mds: usize,
    pub c2_amds: usize,
    pub dual_amds: usize,
    pub nmds: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub schema: String,
    pub tool_version: String,
    pub field: FieldDescriptor,
    pub alpha: Vec<Elem>,
    pub k: usize,
    pub n: usize,
    pub target: Option<Target>,
    pub warnings: Vec<String>,
    pub counts: BTreeMap<Verdict, usize>,
    pub total: usize,
    pub matched: usize,
    pub mismatches: Mismatches,
    /// Rows matching the target, or all rows without one.
    pub rows: Vec<TripleRow>,
    pub elapsed_ms: u64,
}

pub fn evaluate_triple(params: &ConstructionParams) -> Result<TripleRow> {
    let t2 = theorem2_mds(params)?;
    let c2a = theorem_c2_amds(params)?;
    let da = theorem_dual_amds(params)?;
    let nmds = match corollary_nmds(params) {
        Ok(r) => Some(r.overall),
        Err(Error::HypothesisViolated(_)) => None,
        Err(e) => return Err(e),
    };
    let code = c2_generator(params)?;
    let c = code.classify()?;
    let holds = |i: usize| t2.conditions[i].holds;
    Ok(TripleRow {
        delta: params.delta,
        tau: params.tau,
        pi: params.pi,
        cond1: holds(0),
        cond2: holds(1),
        cond3: holds(2),
        cond4: holds(3),
        mds_predicted: t2.overall,
        c2_amds_predicted: c2a.overall,
        dual_amds_predicted: da.overall,
        nmds_predicted: nmds,
        verdict: c.verdict,
        d: c.d,
        d_dual: c.d_dual,
    })
}

impl TripleRow {
    fn classification(&self, n: usize, k: usize) -> Classification {
        Classification::from_distances(n, k, self.d, self.d_dual)
    }
}

/// Evaluates all `q^3` triples for fixed points and dimension.
pub fn search(field: &Field, alpha: &[Elem], k: usize, target: Option<Target>) -> Result<SearchReport> {
    let start = Instant::now();
    let base = ConstructionParams::new(field, alpha.to_vec(), k, Triple::new(Elem::ZERO, Elem::ZERO, Elem::ZERO))?;
    let mut rows: Vec<TripleRow> = Triple::all(field)
        .into_par_iter()
        .map(|t| evaluate_triple(&base.with_triple(t)))
        .collect::<Result<_>>()?;
    rows.sort_by_key(TripleRow::triple);

    let len = alpha.len() + 3;
    let mut counts = BTreeMap::new();
    let mut mismatches = Mismatches::default();
    for r in &rows {
        *counts.entry(r.verdict).or_insert(0) += 1;
        let c = r.classification(len, k);
        mismatches.mds += usize::from(r.mds_predicted != (c.verdict == Verdict::Mds));
        mismatches.c2_amds += usize::from(r.c2_amds_predicted != c.is_amds());
        mismatches.dual_amds += usize::from(r.dual_amds_predicted != c.dual_is_amds());
        if let Some(p) = r.nmds_predicted {
            mismatches.nmds += usize::from(p != (c.verdict == Verdict::Nmds));
        }
    }
    let total = rows.len();
    if let Some(t) = target {
        rows.retain(|r| t.matches(&r.classification(len, k)));
    }
    Ok(SearchReport {
        schema: SEARCH_SCHEMA.to_string(),
        tool_version: crate::VERSION.to_string(),
        field: FieldDescriptor::of(field),
        alpha: alpha.to_vec(),
        k,
        n: alpha.len(),
        target,
        warnings: base.warnings(),
        counts,
        total,
        matched: rows.len(),
        mismatches,
        rows,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn gf4_search_finds_single_mds_triple() {
        let f = make_field(2, 2, None).unwrap();
        let r = search(&f, &[Elem(0), Elem(1), Elem(2)], 3, Some(Target::Mds)).unwrap();
        assert_eq!(r.total, 64);
        assert_eq!(r.counts.values().sum::<usize>(), 64);
        assert_eq!(r.matched, 1);
        assert_eq!(r.rows[0].triple(), Triple::new(Elem(0), Elem(3), Elem(2)));
        assert_eq!(r.mismatches.mds, 0);
        assert!(!r.warnings.is_empty());
    }
}
