//! Command execution: calls into the library and renders the result as
//! JSON, human-readable text or CSV.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use anyhow::{Context, Result};
use rlmds::code::CODE_SCHEMA;
use rlmds::criteria::ConditionReport;
use rlmds::extendable::sweep_theorem5;
use rlmds::fixtures::{regenerate, Fixture};
use rlmds::gf::FieldDescriptor;
use rlmds::search::SearchReport;
use rlmds::{
    c2_generator, c2_parity, corollary_nmds, grs, primitive_elements, reed_solomon, roth_lempel, search,
    sweep_covering, theorem1_u, theorem2_mds, theorem5_verdict, theorem_c2_amds, theorem_dual_amds, verify_covering,
    CodeJson, ConstructionParams, Elem, Error, Field, LinearCode, Matrix, Triple,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{usage, Command, Family, RunConfig, Show};

pub const SEARCH_CSV_SCHEMA: &str = "rlmds.search.csv/v1";
pub const CSV_COLUMNS: [&str; 10] = ["delta", "tau", "pi", "cond1", "cond2", "cond3", "cond4", "verdict", "d", "d_dual"];

/// A command result in every supported rendering.
pub struct Rendered {
    pub json: Value,
    pub human: String,
    pub csv: Option<String>,
}

fn elem(f: &Field, e: Elem) -> String {
    f.describe(e)
}

fn elems(f: &Field, xs: &[Elem]) -> String {
    xs.iter().map(|&e| elem(f, e)).collect::<Vec<_>>().join(", ")
}

fn triple_str(f: &Field, t: Triple) -> String {
    format!("(delta, tau, pi) = ({}, {}, {})", elem(f, t.delta), elem(f, t.tau), elem(f, t.pi))
}

fn matrix_str(f: &Field, m: &Matrix) -> String {
    let block = |cell: &dyn Fn(Elem) -> String| {
        let cells: Vec<Vec<String>> = m.to_rows().iter().map(|r| r.iter().map(|&e| cell(e)).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        cells
            .iter()
            .map(|r| format!("  [{}]", r.iter().map(|c| format!("{c:>width$}")).collect::<Vec<_>>().join(" ")))
            .collect::<Vec<_>>()
            .join("\n")
    };
    format!("{}\nas powers of g:\n{}", block(&|e| e.0.to_string()), block(&|e| f.power_form(e)))
}

/// Integer-to-power-form table, so JSON consumers see both notations.
fn notation(f: &Field) -> Value {
    if f.order() > 1024 {
        return Value::Null;
    }
    let map: BTreeMap<String, String> = f.elements().map(|e| (e.0.to_string(), f.power_form(e))).collect();
    json!({ "generator": f.primitive(), "powers": map })
}

fn envelope(schema: &str, f: Option<&Field>, body: impl Serialize) -> Result<Value> {
    let mut v = json!({ "schema": schema, "tool_version": rlmds::VERSION });
    if let Some(f) = f {
        v["field"] = serde_json::to_value(FieldDescriptor::of(f))?;
        v["notation"] = notation(f);
    }
    let body = serde_json::to_value(body)?;
    if let Value::Object(m) = body {
        for (k, val) in m {
            v[k] = val;
        }
    } else {
        v["result"] = body;
    }
    Ok(v)
}

pub fn execute(cfg: &RunConfig) -> Result<Rendered> {
    let field = cfg.field.as_ref().map(FieldDescriptor::build).transpose()?;
    let f = || field.clone().expect("validated: field present");
    match &cfg.command {
        Command::Field { show } => field_info(&f(), *show),
        Command::Build { family, alpha, k, multipliers, triple } => build(&f(), *family, alpha, *k, multipliers.as_deref(), *triple),
        Command::Classify { code } => classify(code),
        Command::ClassifyC2 { alpha, k, triple } => classify_c2(&f(), alpha, *k, *triple),
        Command::Search { alpha, k, target, emit } => {
            let mut r = search(&f(), alpha, *k, *target)?;
            if !cfg.timing {
                r.elapsed_ms = 0;
            }
            let csv = search_csv(&f(), &r)?;
            if let Some(path) = emit {
                fs::write(path, &csv).with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(Rendered { json: serde_json::to_value(&r)?, human: search_human(&f(), &r), csv: Some(csv) })
        }
        Command::Covering { alpha, k, triple } => covering(&f(), alpha, *k, *triple, cfg.budget),
        Command::Extendable { alpha, sweep_n } => extendable(&f(), alpha, *sweep_n),
        Command::Fixtures { out, check } => fixtures(out.as_deref(), check.as_deref()),
    }
}

fn modulus_str(m: &[u32]) -> String {
    let terms: Vec<String> = m
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let c = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            match i {
                0 => c,
                1 => format!("{c}x"),
                _ => format!("{c}x^{i}"),
            }
        })
        .collect();
    terms.join(" + ")
}

fn field_info(f: &Field, show: Option<Show>) -> Result<Rendered> {
    let want = |s: Show| show.is_none() || show == Some(s);
    let prims = primitive_elements(f);
    let mut body = json!({ "p": f.characteristic(), "m": f.degree(), "q": f.order() });
    let mut human = format!("GF({}) = GF({}^{})\n", f.order(), f.characteristic(), f.degree());
    if want(Show::Modulus) {
        body["modulus"] = json!(f.modulus());
        match f.modulus() {
            Some(m) => writeln!(human, "modulus: {}", modulus_str(m))?,
            None => writeln!(human, "prime field, no modulus")?,
        }
    }
    if want(Show::Primitive) {
        body["primitive"] = json!(f.primitive());
        body["primitive_elements"] = json!(prims);
        writeln!(human, "generator g = {}", elem(f, f.primitive()))?;
        writeln!(human, "primitive elements ({}): {}", prims.len(), elems(f, &prims))?;
    }
    if want(Show::Table) {
        let table: Vec<Value> = f
            .elements()
            .map(|e| json!({ "value": e, "power": f.power_form(e), "digits": f.digits(e) }))
            .collect();
        body["table"] = json!(table);
        writeln!(human, "{:>6}  {:<8} coefficients (constant first)", "value", "power")?;
        for e in f.elements() {
            let digits: Vec<String> = f.digits(e).iter().map(u32::to_string).collect();
            writeln!(human, "{:>6}  {:<8} {}", e.0, f.power_form(e), digits.join(" "))?;
        }
    }
    Ok(Rendered { json: envelope("rlmds.field/v1", Some(f), body)?, human, csv: None })
}

fn build(f: &Field, family: Family, alpha: &[Elem], k: usize, v: Option<&[Elem]>, triple: Option<Triple>) -> Result<Rendered> {
    let need_triple = || triple.ok_or_else(|| usage("this family needs --delta (and --tau, --pi for c2)"));
    let (code, extra) = match family {
        Family::Grs => {
            let v = v.ok_or_else(|| usage("grs needs --v"))?;
            (grs(f, alpha, v, k)?, json!({}))
        }
        Family::Rs => (reed_solomon(f, alpha, k)?, json!({})),
        Family::Rl => (roth_lempel(f, alpha, need_triple()?.delta, k)?, json!({})),
        Family::C2 => {
            let p = ConstructionParams::new(f, alpha.to_vec(), k, need_triple()?)?;
            let u = theorem1_u(&p)?;
            let h = c2_parity(&p)?;
            (c2_generator(&p)?, json!({ "u": u, "parity_check": h.to_nested(), "warnings": p.warnings() }))
        }
    };
    let cj = CodeJson::of(&code);
    let mut human = format!("[{}, {}] code over GF({})\ngenerator:\n{}\n", code.len(), code.dim(), f.order(), matrix_str(f, code.generator()));
    if let Some(u) = extra.get("u").and_then(|u| serde_json::from_value::<Vec<Elem>>(u.clone()).ok()) {
        writeln!(human, "u = ({})", elems(f, &u))?;
    }
    let mut json = envelope(CODE_SCHEMA, Some(f), &cj)?;
    json["family"] = serde_json::to_value(family)?;
    if let Value::Object(m) = extra {
        for (k, v) in m {
            json[k] = v;
        }
    }
    Ok(Rendered { json, human, csv: None })
}

fn classify(code: &CodeJson) -> Result<Rendered> {
    let c = code.to_code()?;
    let f = c.field().clone();
    let cl = c.classify()?;
    let human = format!(
        "[{}, {}, {}] code over GF({}), dual distance {}: {}\n",
        cl.n,
        cl.k,
        cl.d,
        f.order(),
        cl.d_dual,
        cl.verdict
    );
    Ok(Rendered { json: envelope("rlmds.classification/v1", Some(&f), &cl)?, human, csv: None })
}

fn report_human(r: &ConditionReport) -> String {
    let mut s = format!("{:?}: {}\n", r.predicate, r.overall);
    for c in &r.conditions {
        let w = c.witness.as_ref().map(|w| format!(" (witness {w:?})")).unwrap_or_default();
        s.push_str(&format!("  {:<14} {}{}\n", c.name, c.holds, w));
    }
    for (name, v) in &r.cases {
        s.push_str(&format!("  {name:<14} {v}\n"));
    }
    s
}

fn classify_c2(f: &Field, alpha: &[Elem], k: usize, t: Triple) -> Result<Rendered> {
    let p = ConstructionParams::new(f, alpha.to_vec(), k, t)?;
    let code = c2_generator(&p)?;
    let cl = code.classify()?;
    let mds = theorem2_mds(&p)?;
    let dual_amds = theorem_dual_amds(&p)?;
    let c2_amds = theorem_c2_amds(&p)?;
    let nmds = match corollary_nmds(&p) {
        Ok(r) => Some(r),
        Err(Error::HypothesisViolated(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let mut human = format!(
        "C2 over GF({}), alpha = ({}), k = {}, {}\n[{}, {}, {}], dual distance {}: {}\n",
        f.order(),
        elems(f, alpha),
        k,
        triple_str(f, t),
        cl.n,
        cl.k,
        cl.d,
        cl.d_dual,
        cl.verdict
    );
    for w in p.warnings() {
        writeln!(human, "warning: {w}")?;
    }
    for r in [Some(&mds), Some(&dual_amds), Some(&c2_amds), nmds.as_ref()].into_iter().flatten() {
        human.push_str(&report_human(r));
    }
    if nmds.is_none() {
        human.push_str("Nmds: not applicable (hypothesis fails)\n");
    }
    let body = json!({
        "alpha": alpha,
        "k": k,
        "triple": t,
        "warnings": p.warnings(),
        "classification": cl,
        "mds": mds,
        "dual_amds": dual_amds,
        "c2_amds": c2_amds,
        "nmds": nmds,
    });
    Ok(Rendered { json: envelope("rlmds.classify-c2/v1", Some(f), body)?, human, csv: None })
}

pub fn search_csv(_f: &Field, r: &SearchReport) -> Result<String> {
    let mut buf = format!("# schema: {SEARCH_CSV_SCHEMA}\n").into_bytes();
    {
        let mut w = csv::Writer::from_writer(&mut buf);
        w.write_record(CSV_COLUMNS)?;
        for row in &r.rows {
            w.write_record([
                row.delta.0.to_string(),
                row.tau.0.to_string(),
                row.pi.0.to_string(),
                row.cond1.to_string(),
                row.cond2.to_string(),
                row.cond3.to_string(),
                row.cond4.to_string(),
                row.verdict.to_string(),
                row.d.to_string(),
                row.d_dual.to_string(),
            ])?;
        }
        w.flush()?;
    }
    Ok(String::from_utf8(buf)?)
}

fn search_human(f: &Field, r: &SearchReport) -> String {
    let mut s = format!(
        "C2 sweep over GF({}), alpha = ({}), k = {}: {} triples\n",
        f.order(),
        elems(f, &r.alpha),
        r.k,
        r.total
    );
    for w in &r.warnings {
        s.push_str(&format!("warning: {w}\n"));
    }
    for (v, c) in &r.counts {
        s.push_str(&format!("  {v:<6} {c}\n"));
    }
    let m = &r.mismatches;
    s.push_str(&format!(
        "criterion mismatches: mds {}, c2_amds {}, dual_amds {}, nmds {}\n",
        m.mds, m.c2_amds, m.dual_amds, m.nmds
    ));
    if let Some(t) = r.target {
        s.push_str(&format!("{} triples match {:?}:\n", r.matched, t));
        for row in &r.rows {
            s.push_str(&format!("  {}  [{}, {}, {}]\n", triple_str(f, row.triple()), r.n + 3, r.k, row.d));
        }
    }
    if r.elapsed_ms > 0 {
        s.push_str(&format!("elapsed: {} ms\n", r.elapsed_ms));
    }
    s
}

fn covering(f: &Field, alpha: &[Elem], k: usize, triple: Option<Triple>, budget: u64) -> Result<Rendered> {
    match triple {
        Some(t) => {
            let p = ConstructionParams::new(f, alpha.to_vec(), k, t)?;
            let r = verify_covering(&p, budget)?;
            let human = format!(
                "RL dual over GF({}), alpha = ({}), k = {}, {}\ncovering radius {}{}\nu = ({}) at distance {}; deep hole: {}\nMDS conditions hold: {}\n",
                f.order(),
                elems(f, alpha),
                k,
                triple_str(f, t),
                r.rho,
                r.predicted_rho.map(|x| format!(" (predicted {x})")).unwrap_or_default(),
                elems(f, &r.u),
                r.u_distance,
                r.deep_hole,
                r.theorem2_holds
            );
            Ok(Rendered { json: envelope("rlmds.covering/v1", Some(f), &r)?, human, csv: None })
        }
        None => {
            let reports = sweep_covering(f, alpha, k, budget)?;
            let mut rho_by_delta: BTreeMap<u32, usize> = BTreeMap::new();
            for r in &reports {
                rho_by_delta.insert(r.triple.delta.0, r.rho);
            }
            let mds = reports.iter().filter(|r| r.theorem2_holds).count();
            let consistent = reports.iter().all(|r| r.consistent(k));
            let mut human = format!(
                "RL dual over GF({}), alpha = ({}), k = {}: {} triples, {} satisfy the MDS conditions, all consistent: {}\n",
                f.order(),
                elems(f, alpha),
                k,
                reports.len(),
                mds,
                consistent
            );
            for (d, rho) in &rho_by_delta {
                writeln!(human, "  delta = {}: covering radius {}", elem(f, Elem(*d)), rho)?;
            }
            let body = json!({
                "alpha": alpha,
                "k": k,
                "rho_by_delta": rho_by_delta,
                "mds_triples": mds,
                "consistent": consistent,
                "reports": reports,
            });
            Ok(Rendered { json: envelope("rlmds.covering-sweep/v1", Some(f), body)?, human, csv: None })
        }
    }
}

fn extendable(f: &Field, alpha: &[Elem], sweep_n: Option<usize>) -> Result<Rendered> {
    let Some(n) = sweep_n else {
        let r = theorem5_verdict(f, alpha)?;
        let human = format!(
            "GRS_3 over GF({}), alpha = ({}): {:?}; dual distance of [G : I_3] predicted {}, measured {}\n",
            f.order(),
            elems(f, alpha),
            r.verdict,
            r.predicted_dual_distance,
            r.measured_dual_distance
        );
        return Ok(Rendered { json: envelope("rlmds.extendable/v1", Some(f), &r)?, human, csv: None });
    };
    let pool: Vec<Elem> = if alpha.is_empty() { f.nonzero_elements().collect() } else { alpha.to_vec() };
    if n > pool.len() {
        anyhow::bail!(usage(format!("--sweep-n {n} exceeds the pool of {} points", pool.len())));
    }
    let reports = sweep_theorem5(f, &pool, n..=n)?;
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for r in &reports {
        *counts.entry(format!("{:?}", r.verdict).to_lowercase()).or_default() += 1;
    }
    let agree = reports.iter().filter(|r| r.predicted_dual_distance == r.measured_dual_distance).count();
    let human = format!(
        "GRS_3 over GF({}), all {}-subsets of {} points: {} sets, {:?}; prediction matches measurement for {}\n",
        f.order(),
        n,
        pool.len(),
        reports.len(),
        counts,
        agree
    );
    let body = json!({ "pool": pool, "n": n, "counts": counts, "agreeing": agree, "reports": reports });
    Ok(Rendered { json: envelope("rlmds.extendable-sweep/v1", Some(f), body)?, human, csv: None })
}

fn fixtures(out: Option<&Path>, check: Option<&Path>) -> Result<Rendered> {
    let corpus = regenerate()?;
    let mut human = format!("{} fixtures\n", corpus.len());
    let mut stale = Vec::new();
    if let Some(dir) = out {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for fx in &corpus {
            let path = dir.join(format!("{}.json", fx.name));
            let mut file = fs::File::create(&path).with_context(|| format!("writing {}", path.display()))?;
            serde_json::to_writer_pretty(&mut file, fx)?;
            writeln!(file)?;
        }
        writeln!(human, "written to {}", dir.display())?;
    }
    if let Some(dir) = check {
        for fx in &corpus {
            let path = dir.join(format!("{}.json", fx.name));
            let stored: Option<Fixture> = fs::read_to_string(&path).ok().and_then(|s| serde_json::from_str(&s).ok());
            if stored.as_ref() != Some(fx) {
                stale.push(fx.name.clone());
            }
        }
        if stale.is_empty() {
            writeln!(human, "{} matches the regenerated corpus", dir.display())?;
        } else {
            writeln!(human, "out of date: {}", stale.join(", "))?;
        }
    }
    for fx in &corpus {
        writeln!(human, "  {}", fx.name)?;
    }
    let json = json!({
        "schema": "rlmds.fixtures/v1",
        "tool_version": rlmds::VERSION,
        "fixtures": corpus,
        "stale": if check.is_some() { json!(stale) } else { Value::Null },
    });
    if !stale.is_empty() {
        return Err(StaleFixtures { rendered: Rendered { json, human, csv: None } }.into());
    }
    Ok(Rendered { json, human, csv: None })
}

/// Raised by `fixtures --check` when stored fixtures differ; carries the
/// report so it can still be printed.
pub struct StaleFixtures {
    pub rendered: Rendered,
}

impl std::fmt::Debug for StaleFixtures {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("StaleFixtures")
    }
}

impl std::fmt::Display for StaleFixtures {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("stored fixtures differ from the regenerated corpus")
    }
}

impl std::error::Error for StaleFixtures {}

/// Reads a code from a JSON file or a `;`-separated row list.
pub fn load_code(f: Option<&Field>, path: Option<&Path>, rows: Option<&str>) -> Result<CodeJson> {
    match (path, rows) {
        (Some(p), None) => {
            let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            let cj: CodeJson = serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", p.display())))?;
            cj.to_code()?;
            Ok(cj)
        }
        (None, Some(rows)) => {
            let f = f.ok_or_else(|| usage("--generator needs a field (--q or --p/--m)"))?;
            let parsed: Vec<Vec<Elem>> = rows.split(';').map(|r| f.parse_list(r)).collect::<rlmds::Result<_>>()?;
            let code = LinearCode::new(Matrix::from_rows(f, parsed)?)?;
            Ok(CodeJson::of(&code))
        }
        _ => Err(usage("give exactly one of --code or --generator").into()),
    }
}
