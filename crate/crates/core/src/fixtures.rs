//! Regression corpus: the small-field worked examples, recomputed.
//!
//! Configurations written in powers of an unnamed primitive element `g` are
//! evaluated for every primitive element of the canonical field; a
//! configuration counts as reproduced when at least one choice works.

use serde::{Deserialize, Serialize};

use crate::code::{Classification, DEFAULT_BUDGET};
use crate::construct::{c2_generator, ConstructionParams, Triple};
use crate::covering::{sweep_covering, verify_covering, CoveringReport};
use crate::criteria::theorem2_mds;
use crate::error::Result;
use crate::extendable::{theorem5_verdict, ExtendabilityReport};
use crate::gf::{field_of_order, primitive_elements, Elem, Field, FieldDescriptor};
use crate::search::{search, Target};

pub const FIXTURE_SCHEMA: &str = "rlmds.fixture/v1";

/// A point set or triple entry written as a power of the primitive element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sym {
    Zero,
    Pow(u32),
}

impl Sym {
    pub fn eval(self, f: &Field, g: Elem) -> Elem {
        match self {
            Sym::Zero => Elem::ZERO,
            Sym::Pow(e) => f.pow_u(g, e as u64),
        }
    }
}

/// A `C2` configuration over GF(q) stated symbolically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicConfig {
    pub q: u32,
    pub k: usize,
    pub alpha: Vec<Sym>,
    pub triple: [Sym; 3],
}

impl SymbolicConfig {
    pub fn instantiate(&self, f: &Field, g: Elem) -> Result<ConstructionParams> {
        let alpha = self.alpha.iter().map(|s| s.eval(f, g)).collect();
        let [d, t, p] = self.triple.map(|s| s.eval(f, g));
        ConstructionParams::new(f, alpha, self.k, Triple::new(d, t, p))
    }
}

/// Outcome of one symbolic configuration under one primitive element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instantiation {
    pub generator: Elem,
    pub alpha: Vec<Elem>,
    pub triple: Triple,
    pub theorem2_holds: bool,
    pub classification: Classification,
}

/// Evaluates a symbolic `C2` configuration under every primitive element.
pub fn instantiate_all(cfg: &SymbolicConfig) -> Result<Vec<Instantiation>> {
    let f = field_of_order(cfg.q)?;
    primitive_elements(&f)
        .into_iter()
        .map(|g| {
            let p = cfg.instantiate(&f, g)?;
            Ok(Instantiation {
                generator: g,
                alpha: p.alpha.clone(),
                triple: p.triple(),
                theorem2_holds: theorem2_mds(&p)?.overall,
                classification: c2_generator(&p)?.classify()?,
            })
        })
        .collect()
}

/// Covering outcome of a symbolic configuration under every primitive element.
pub fn covering_all(cfg: &SymbolicConfig) -> Result<Vec<(Elem, CoveringReport)>> {
    let f = field_of_order(cfg.q)?;
    primitive_elements(&f)
        .into_iter()
        .map(|g| Ok((g, verify_covering(&cfg.instantiate(&f, g)?, DEFAULT_BUDGET)?)))
        .collect()
}

fn pows(xs: &[i32]) -> Vec<Sym> {
    xs.iter().map(|&x| if x < 0 { Sym::Zero } else { Sym::Pow(x as u32) }).collect()
}

fn triple(d: i32, t: i32, p: i32) -> [Sym; 3] {
    let s = pows(&[d, t, p]);
    [s[0], s[1], s[2]]
}

/// The three GF(8) MDS configurations; `-1` stands for zero.
pub fn gf8_mds_configs() -> Vec<(SymbolicConfig, (usize, usize, usize))> {
    vec![
        (SymbolicConfig { q: 8, k: 3, alpha: pows(&[-1, 0, 1, 3]), triple: triple(6, 5, 2) }, (7, 3, 5)),
        (SymbolicConfig { q: 8, k: 4, alpha: pows(&[-1, 0, 1, 3]), triple: triple(6, 6, -1) }, (7, 4, 4)),
        (SymbolicConfig { q: 8, k: 3, alpha: pows(&[-1, 0, 1, 2, 3]), triple: triple(-1, 4, 1) }, (8, 3, 6)),
    ]
}

/// The GF(8) and GF(9) covering-radius configurations.
pub fn covering_configs() -> Vec<SymbolicConfig> {
    vec![
        SymbolicConfig { q: 8, k: 3, alpha: pows(&[-1, 0, 1, 2]), triple: triple(2, 2, 5) },
        SymbolicConfig { q: 9, k: 3, alpha: pows(&[-1, 0, 1, 2]), triple: triple(6, 5, 0) },
    ]
}

/// The four GF(4) point sets with their unique MDS triple, written in the
/// canonical encoding where `w = 2` and `1 + w = 3`.
pub fn gf4_unique_triples() -> Vec<([u32; 3], [u32; 3])> {
    vec![([0, 1, 2], [0, 3, 2]), ([0, 1, 3], [0, 2, 3]), ([0, 2, 3], [0, 1, 1]), ([1, 2, 3], [0, 0, 0])]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    MdsTriples { field: FieldDescriptor, alpha: Vec<Elem>, k: usize, triples: Vec<Triple> },
    Classification { field: FieldDescriptor, alpha: Vec<Elem>, k: usize, triple: Triple, classification: Classification },
    Symbolic { config: SymbolicConfig, instantiations: Vec<Instantiation> },
    Covering { config: SymbolicConfig, reports: Vec<(Elem, CoveringReport)> },
    CoveringSweep { field: FieldDescriptor, alpha: Vec<Elem>, k: usize, rho_by_delta: Vec<(Elem, usize)>, mds_triples: usize },
    Extendability { field: FieldDescriptor, report: ExtendabilityReport },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fixture {
    pub schema: String,
    pub name: String,
    pub payload: Payload,
}

fn fixture(name: &str, payload: Payload) -> Fixture {
    Fixture { schema: FIXTURE_SCHEMA.into(), name: name.into(), payload }
}

fn els(xs: &[u32]) -> Vec<Elem> {
    xs.iter().map(|&x| Elem(x)).collect()
}

/// Recomputes the whole corpus.
pub fn regenerate() -> Result<Vec<Fixture>> {
    let mut out = Vec::new();

    let f4 = field_of_order(4)?;
    for (i, (alpha, _)) in gf4_unique_triples().into_iter().enumerate() {
        let r = search(&f4, &els(&alpha), 3, Some(Target::Mds))?;
        out.push(fixture(
            &format!("gf4_unique_triple_{}", i + 1),
            Payload::MdsTriples {
                field: FieldDescriptor::of(&f4),
                alpha: els(&alpha),
                k: 3,
                triples: r.rows.iter().map(|row| row.triple()).collect(),
            },
        ));
    }

    let f5 = field_of_order(5)?;
    let p = ConstructionParams::new(&f5, els(&[1, 2, 3]), 3, Triple::new(Elem(2), Elem(0), Elem(1)))?;
    out.push(fixture(
        "gf5_mds_6_3_4",
        Payload::Classification {
            field: FieldDescriptor::of(&f5),
            alpha: p.alpha.clone(),
            k: 3,
            triple: p.triple(),
            classification: c2_generator(&p)?.classify()?,
        },
    ));

    let f7 = field_of_order(7)?;
    let r = search(&f7, &els(&[2, 3, 5]), 3, Some(Target::Mds))?;
    out.push(fixture(
        "gf7_mds_triples",
        Payload::MdsTriples {
            field: FieldDescriptor::of(&f7),
            alpha: els(&[2, 3, 5]),
            k: 3,
            triples: r.rows.iter().map(|row| row.triple()).collect(),
        },
    ));

    for (i, (cfg, _)) in gf8_mds_configs().into_iter().enumerate() {
        let inst = instantiate_all(&cfg)?;
        out.push(fixture(&format!("gf8_mds_config_{}", i + 1), Payload::Symbolic { config: cfg, instantiations: inst }));
    }

    for cfg in covering_configs() {
        let reports = covering_all(&cfg)?;
        out.push(fixture(&format!("gf{}_covering", cfg.q), Payload::Covering { config: cfg, reports }));
    }

    let alpha5 = els(&[1, 2, 3, 4]);
    let sweep = sweep_covering(&f5, &alpha5, 3, DEFAULT_BUDGET)?;
    let mut rho_by_delta: Vec<(Elem, usize)> = sweep.iter().map(|r| (r.triple.delta, r.rho)).collect();
    rho_by_delta.dedup();
    out.push(fixture(
        "gf5_covering_sweep",
        Payload::CoveringSweep {
            field: FieldDescriptor::of(&f5),
            alpha: alpha5.clone(),
            k: 3,
            rho_by_delta,
            mds_triples: sweep.iter().filter(|r| r.theorem2_holds).count(),
        },
    ));

    out.push(fixture(
        "gf5_extendability",
        Payload::Extendability { field: FieldDescriptor::of(&f5), report: theorem5_verdict(&f5, &alpha5)? },
    ));
    Ok(out)
}
