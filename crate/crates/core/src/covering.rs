//! Covering radius of the dual of a Roth-Lempel code and the deep-hole
//! status of the extension vector that produces `C2`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::CosetLeaderTable;
use crate::construct::{roth_lempel_generator, theorem1_u, ConstructionParams, Triple};
use crate::criteria::theorem2_mds;
use crate::error::Result;
use crate::gf::{Elem, Field};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringReport {
    pub triple: Triple,
    /// Covering radius of the dual of `RL(alpha, delta, k, n+2)`.
    pub rho: usize,
    /// `Some(k)` when the four MDS conditions hold.
    pub predicted_rho: Option<usize>,
    pub u: Vec<Elem>,
    pub u_distance: usize,
    pub deep_hole: bool,
    pub theorem2_holds: bool,
    pub warnings: Vec<String>,
}

impl CoveringReport {
    /// `deep_hole <=> u_distance == rho`, and the MDS conditions force
    /// `rho == k` with `u` a deep hole.
    pub fn consistent(&self, k: usize) -> bool {
        self.deep_hole == (self.u_distance == self.rho) && (!self.theorem2_holds || (self.rho == k && self.deep_hole))
    }
}

/// The dual of the Roth-Lempel code has the Roth-Lempel generator as its
/// parity-check matrix, so its coset table has only `q^k` entries.
pub fn rl_dual_table(field: &Field, alpha: &[Elem], delta: Elem, k: usize, budget: u64) -> Result<CosetLeaderTable> {
    let g1 = roth_lempel_generator(field, alpha, delta, k)?;
    CosetLeaderTable::from_parity_check(&g1, budget)
}

pub fn verify_covering(params: &ConstructionParams, budget: u64) -> Result<CoveringReport> {
    let table = rl_dual_table(&params.field, &params.alpha, params.delta, params.k, budget)?;
    report_with_table(params, &table)
}

fn report_with_table(params: &ConstructionParams, table: &CosetLeaderTable) -> Result<CoveringReport> {
    let theorem2_holds = theorem2_mds(params)?.overall;
    let u = theorem1_u(params)?;
    let rho = table.covering_radius();
    let u_distance = table.distance(&u)?;
    Ok(CoveringReport {
        triple: params.triple(),
        rho,
        predicted_rho: theorem2_holds.then_some(params.k),
        u,
        u_distance,
        deep_hole: u_distance == rho,
        theorem2_holds,
        warnings: params.warnings(),
    })
}

/// [`verify_covering`] over all `q^3` triples, in lexicographic triple order.
/// One coset table is built per `delta`.
pub fn sweep_covering(field: &Field, alpha: &[Elem], k: usize, budget: u64) -> Result<Vec<CoveringReport>> {
    let base = ConstructionParams::new(field, alpha.to_vec(), k, Triple::new(Elem::ZERO, Elem::ZERO, Elem::ZERO))?;
    let tables: BTreeMap<Elem, CosetLeaderTable> = field
        .elements()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|d| rl_dual_table(field, alpha, d, k, budget).map(|t| (d, t)))
        .collect::<Result<_>>()?;
    let mut out: Vec<CoveringReport> = Triple::all(field)
        .into_par_iter()
        .map(|t| report_with_table(&base.with_triple(t), &tables[&t.delta]))
        .collect::<Result<_>>()?;
    out.sort_by_key(|r| r.triple);
    Ok(out)
}
