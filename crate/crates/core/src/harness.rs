//! Batteries behind the command line: parameter computation, inequality
//! verification over corpora, and the two conjecture experiments.
//!
//! Corpus instances are processed independently (in parallel when enabled)
//! and reported in corpus order.

use std::time::Instant;

use num_rational::Ratio;
use serde::Serialize;
use serde_json::json;

use crate::caps::Caps;
use crate::constructions::{
    all_labeled, gen_random_chordal, gen_random_gnp, gen_random_incomparability,
    gen_random_interval, Family,
};
use crate::cover::{
    ccw_exact, ccw_upper, clique_cover_number, neighborhood_clique_cover, CliqueCover,
};
use crate::error::{Error, Result};
use crate::graph::{degeneracy, Graph};
use crate::minor::{beta_hat, grad, max_ccw_over_minors, p_t, s_t, MinorOptimum};
use crate::par;
use crate::report::{
    to_json, write_rows, write_value_csv, Bound, GraphSize, Input, Param, ParamError,
    ParamReport, ParamResult, Requested, Value, ValueTable, SCHEMA,
};
use crate::separators::{
    ccw_separator, chordal_separator, min_balanced_clique_separator, verify_separation,
};
use crate::structure::{is_chordal, is_incomparability, largest_balanced_induced_biclique, largest_induced_star};
use crate::VERSION;

/// One graph of a corpus.
#[derive(Clone, Debug)]
pub struct Instance {
    pub graph_id: String,
    pub seed: Option<u64>,
    pub graph: Graph,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RandomFamily {
    Chordal,
    Interval,
    Incomparability { density: f64 },
    Gnp { p: f64 },
}

impl RandomFamily {
    fn name(self) -> &'static str {
        match self {
            RandomFamily::Chordal => "chordal",
            RandomFamily::Interval => "interval",
            RandomFamily::Incomparability { .. } => "incomparability",
            RandomFamily::Gnp { .. } => "gnp",
        }
    }

    fn build(self, n: usize, seed: u64) -> Result<Graph> {
        match self {
            RandomFamily::Chordal => gen_random_chordal(n, seed),
            RandomFamily::Interval => gen_random_interval(n, seed),
            RandomFamily::Incomparability { density } => gen_random_incomparability(n, density, seed),
            RandomFamily::Gnp { p } => gen_random_gnp(n, p, seed),
        }
    }
}

/// A reproducible list of graphs.
///
/// Grammar: `all-labeled:N`, `chordal:COUNT:MAXN`, `interval:COUNT:MAXN`,
/// `incomparability:COUNT:MAXN[:DENSITY]`, `gnp:COUNT:MAXN[:P]`, or
/// `family:NAME[:k=v,...]` for one generated graph. Instance `i` of a random
/// corpus uses seed `base + i` and `n = lo + seed mod (MAXN - lo + 1)` with
/// `lo = min(5, MAXN)`.
#[derive(Clone, Debug, PartialEq)]
pub enum CorpusSpec {
    AllLabeled { n: usize },
    Random { family: RandomFamily, count: usize, max_n: usize },
    Single { family: Family },
}

pub fn parse_key_values(text: &str) -> Result<Vec<(String, String)>> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|kv| {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::validation(format!("parameter {kv} is not key=value")))?;
            Ok((k.trim().to_string(), v.trim().to_string()))
        })
        .collect()
}

impl CorpusSpec {
    pub fn parse(spec: &str) -> Result<CorpusSpec> {
        let parts: Vec<&str> = spec.split(':').collect();
        let bad = || Error::validation(format!("bad corpus spec {spec}"));
        let int = |s: &str| s.parse::<usize>().map_err(|_| bad());
        let real = |s: &str| s.parse::<f64>().map_err(|_| bad());
        match parts.as_slice() {
            ["all-labeled", n] => Ok(CorpusSpec::AllLabeled { n: int(n)? }),
            ["family", name] | ["family", name, _] => {
                let params = parse_key_values(parts.get(2).copied().unwrap_or(""))?;
                Ok(CorpusSpec::Single {
                    family: Family::parse(name, &params, 0)?,
                })
            }
            [name, count, max_n, rest @ ..] if rest.len() <= 1 => {
                let family = match (*name, rest.first()) {
                    ("chordal", None) => RandomFamily::Chordal,
                    ("interval", None) => RandomFamily::Interval,
                    ("incomparability", d) => RandomFamily::Incomparability {
                        density: d.map_or(Ok(0.5), |d| real(d))?,
                    },
                    ("gnp", p) => RandomFamily::Gnp {
                        p: p.map_or(Ok(0.5), |p| real(p))?,
                    },
                    _ => return Err(bad()),
                };
                let max_n = int(max_n)?;
                if max_n == 0 {
                    return Err(bad());
                }
                Ok(CorpusSpec::Random {
                    family,
                    count: int(count)?,
                    max_n,
                })
            }
            _ => Err(bad()),
        }
    }

    /// Builds every instance, in corpus order.
    pub fn instances(&self, base_seed: u64) -> Result<Vec<Instance>> {
        match *self {
            CorpusSpec::AllLabeled { n } => Ok(all_labeled(n)?
                .enumerate()
                .map(|(code, graph)| Instance {
                    graph_id: format!("labeled-n{n}-c{code}"),
                    seed: None,
                    graph,
                })
                .collect()),
            CorpusSpec::Random {
                family,
                count,
                max_n,
            } => {
                let lo = max_n.min(5);
                (0..count as u64)
                    .map(|i| {
                        let seed = base_seed.wrapping_add(i);
                        let n = lo + (seed % (max_n - lo + 1) as u64) as usize;
                        Ok(Instance {
                            graph_id: format!("{}-n{n}-s{seed}", family.name()),
                            seed: Some(seed),
                            graph: family.build(n, seed)?,
                        })
                    })
                    .collect()
            }
            CorpusSpec::Single { family } => Ok(vec![Instance {
                graph_id: provenance_id(&family, base_seed),
                seed: Some(base_seed),
                graph: family.build(base_seed)?.graph,
            }]),
        }
    }
}

/// Short id for a generated graph, e.g. `obs3-n7-t2-s0`.
pub fn provenance_id(family: &Family, seed: u64) -> String {
    let p = family.provenance(seed);
    let mut id = p.family.clone();
    for (k, v) in &p.params {
        id.push_str(&format!("-{k}{v}"));
    }
    id.push_str(&format!("-s{seed}"));
    id
}

fn minor_result(id: String, param: Param, t: usize, r: MinorOptimum<Value>, wall: Option<f64>) -> ParamResult {
    ParamResult {
        id,
        param,
        t: Some(t),
        value: r.value,
        bound: if r.exhaustive { Bound::Exact } else { Bound::LowerBound },
        exhaustive: r.exhaustive,
        models: Some(r.models),
        witness: json!({ "model": r.witness }),
        wall_ms: wall,
    }
}

fn map_value<V>(r: MinorOptimum<V>, f: impl Fn(V) -> Value) -> MinorOptimum<Value> {
    MinorOptimum {
        value: f(r.value),
        witness: r.witness,
        exhaustive: r.exhaustive,
        models: r.models,
    }
}

fn compute_one(g: &Graph, graph_id: &str, param: Param, t: Option<usize>, caps: &Caps, timings: bool) -> Result<ParamResult> {
    let start = Instant::now();
    let wall = || timings.then(|| start.elapsed().as_secs_f64() * 1e3);
    let id = match t {
        Some(t) => format!("{graph_id}#{param}@{t}"),
        None => format!("{graph_id}#{param}"),
    };
    let exact = |value: Value, witness: serde_json::Value| ParamResult {
        id: id.clone(),
        param,
        t,
        value,
        bound: Bound::Exact,
        exhaustive: true,
        models: None,
        witness,
        wall_ms: wall(),
    };
    let depth = t.unwrap_or(0);
    Ok(match param {
        Param::Beta => {
            let (b, cover) = clique_cover_number(g, caps)?;
            exact(Value::int(b), json!({ "cover": cover }))
        }
        Param::NbrBeta => {
            let r = neighborhood_clique_cover(g, caps)?;
            exact(Value::int(r.value), json!({ "vertex": r.witness, "cover": r.cover }))
        }
        Param::Ccw => match ccw_exact(g, caps) {
            Ok((w, cover)) => exact(Value::int(w), json!({ "cover": cover })),
            Err(Error::Capacity { .. }) => {
                let (w, cover) = ccw_upper(g);
                ParamResult {
                    id: id.clone(),
                    param,
                    t,
                    value: Value::int(w),
                    bound: Bound::UpperBound,
                    exhaustive: false,
                    models: None,
                    witness: json!({ "cover": cover }),
                    wall_ms: wall(),
                }
            }
            Err(e) => return Err(e),
        },
        Param::BetaHat => minor_result(id, param, depth, map_value(beta_hat(g, depth, caps)?, Value::int), wall()),
        Param::Grad => minor_result(id, param, depth, map_value(grad(g, depth, caps)?, Value), wall()),
        Param::KT => minor_result(id, param, depth, map_value(max_ccw_over_minors(g, depth, caps)?, Value::int), wall()),
        Param::PT => minor_result(id, param, depth, map_value(p_t(g, depth, caps)?, Value::int), wall()),
        Param::ST => minor_result(id, param, depth, map_value(s_t(g, depth, caps)?, Value::int), wall()),
        Param::S => {
            let star = largest_induced_star(g, caps)?;
            exact(Value::int(star.size()), json!(star))
        }
        Param::P => {
            let b = largest_balanced_induced_biclique(g, caps)?;
            exact(Value::int(b.p), json!({ "a": b.a, "b": b.b }))
        }
        Param::Degeneracy => {
            let (d, order) = degeneracy(g);
            exact(Value::int(d), json!({ "order": order }))
        }
    })
}

/// Computes `params` (depth parameters once per `t`), collecting failures.
pub fn compute_params(
    g: &Graph,
    graph_id: &str,
    params: &[Param],
    ts: &[usize],
    caps: &Caps,
    timings: bool,
) -> (Vec<ParamResult>, Vec<ParamError>) {
    let mut results = Vec::new();
    let mut errors = Vec::new();
    for &param in params {
        let depths: Vec<Option<usize>> = if param.uses_depth() {
            ts.iter().map(|&t| Some(t)).collect()
        } else {
            vec![None]
        };
        for t in depths {
            match compute_one(g, graph_id, param, t, caps, timings) {
                Ok(r) => results.push(r),
                Err(e) => errors.push(ParamError::new(param, t, &e)),
            }
        }
    }
    (results, errors)
}

pub fn cmd_compute(
    input: Input,
    graph_id: &str,
    g: &Graph,
    params: &[Param],
    ts: &[usize],
    caps: &Caps,
    timings: bool,
) -> ParamReport {
    let (results, errors) = compute_params(g, graph_id, params, ts, caps, timings);
    ParamReport {
        schema: SCHEMA,
        version: VERSION,
        input,
        graph_id: graph_id.to_string(),
        graph: GraphSize { n: g.n(), m: g.m() },
        requested: Requested {
            params: params.to_vec(),
            t: ts.to_vec(),
        },
        caps: caps.clone(),
        results,
        errors,
    }
}

/// Process exit status for a set of errors: 2 for validation, 3 for capacity.
pub fn error_exit_code(errors: &[ParamError]) -> i32 {
    if errors.iter().any(|e| e.kind != "capacity") {
        2
    } else if errors.is_empty() {
        0
    } else {
        3
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Outcome of one inequality on one graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRow {
    pub graph_id: String,
    pub t: Option<usize>,
    pub check: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GraphValues {
    pub graph_id: String,
    pub graph: GraphSize,
    pub results: Vec<ParamResult>,
    pub errors: Vec<ParamError>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub schema: &'static str,
    pub version: &'static str,
    pub input: Input,
    pub t: Vec<usize>,
    pub caps: Caps,
    pub summary: CheckSummary,
    pub checks: Vec<CheckRow>,
    pub values: Vec<GraphValues>,
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        to_json(self)
    }

    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        let tables: Vec<ValueTable> = self
            .values
            .iter()
            .map(|v| ValueTable {
                graph_id: &v.graph_id,
                graph: v.graph,
                results: &v.results,
            })
            .collect();
        write_value_csv(out, &tables)
    }

    pub fn exit_code(&self) -> i32 {
        if self.summary.fail > 0 {
            4
        } else {
            0
        }
    }
}

struct Checker<'a> {
    graph_id: &'a str,
    rows: Vec<CheckRow>,
}

impl Checker<'_> {
    fn push(&mut self, t: Option<usize>, check: &'static str, status: Status, detail: String) {
        self.rows.push(CheckRow {
            graph_id: self.graph_id.to_string(),
            t,
            check,
            status,
            detail,
        });
    }

    fn holds(&mut self, t: Option<usize>, check: &'static str, ok: bool, detail: String) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(t, check, status, detail);
    }

    fn skip(&mut self, t: Option<usize>, check: &'static str, why: String) {
        self.push(t, check, Status::Skipped, why);
    }
}

fn lookup(results: &[ParamResult], param: Param, t: Option<usize>) -> Option<&ParamResult> {
    results.iter().find(|r| r.param == param && r.t == t)
}

/// Exact value or the reason the check cannot use it.
fn exact_value(results: &[ParamResult], param: Param, t: Option<usize>) -> std::result::Result<Ratio<u64>, String> {
    match lookup(results, param, t) {
        None => Err(format!("{param} unavailable")),
        Some(r) if !r.exhaustive => Err(format!("{param} is only a {:?}", r.bound)),
        Some(r) => Ok(r.value.0),
    }
}

fn int(r: Ratio<u64>) -> u64 {
    r.to_integer()
}

fn verify_graph(inst: &Instance, ts: &[usize], caps: &Caps) -> (Vec<CheckRow>, GraphValues) {
    let g = &inst.graph;
    let mut params = vec![Param::Degeneracy, Param::NbrBeta, Param::Ccw, Param::S];
    params.extend([Param::BetaHat, Param::Grad, Param::KT, Param::PT, Param::ST]);
    let (results, errors) = compute_params(g, &inst.graph_id, &params, ts, caps, false);
    let mut ck = Checker {
        graph_id: &inst.graph_id,
        rows: Vec::new(),
    };
    let get = |p, t| exact_value(&results, p, t);

    match (get(Param::NbrBeta, None), get(Param::Degeneracy, None)) {
        (Ok(b), Ok(d)) => ck.holds(
            None,
            "nbr_beta<=max(degeneracy,1)",
            int(b) <= int(d).max(1),
            format!("nbr_beta={b}, degeneracy={d}"),
        ),
        (b, d) => ck.skip(None, "nbr_beta<=max(degeneracy,1)", format!("{b:?} {d:?}")),
    }
    match (get(Param::NbrBeta, None), get(Param::Ccw, None)) {
        (Ok(b), Ok(w)) => ck.holds(None, "nbr_beta<=ccw+1", int(b) <= int(w) + 1, format!("nbr_beta={b}, ccw={w}")),
        (b, w) => ck.skip(None, "nbr_beta<=ccw+1", format!("{b:?} {w:?}")),
    }

    let exact_ccw = ccw_exact(g, caps).ok();
    if let Some((w, cover)) = &exact_ccw {
        let (upper, _) = ccw_upper(g);
        ck.holds(None, "ccw<=ccw_upper", *w <= upper, format!("ccw={w}, upper={upper}"));
        separator_checks(&mut ck, g, *w, cover, caps);
    } else {
        ck.skip(None, "ccw<=ccw_upper", "ccw beyond exact cap".into());
    }

    const UPPER: &str = "incomparability:ccw<=s";
    const LOWER: &str = "incomparability:ceil(s/2)<=ccw";
    match is_incomparability(g, caps) {
        Ok(true) => match (get(Param::S, None), get(Param::Ccw, None)) {
            (Ok(s), Ok(w)) => {
                let (s, w) = (int(s), int(w));
                ck.holds(None, UPPER, w <= s, format!("s={s}, ccw={w}"));
                ck.holds(None, LOWER, s.div_ceil(2) <= w, format!("s={s}, ccw={w}"));
            }
            (s, w) => {
                let detail = format!("{s:?} {w:?}");
                ck.skip(None, UPPER, detail.clone());
                ck.skip(None, LOWER, detail);
            }
        },
        Ok(false) => {}
        Err(e) => {
            ck.skip(None, UPPER, e.to_string());
            ck.skip(None, LOWER, e.to_string());
        }
    }

    let chordal = is_chordal(g).is_chordal();
    if chordal && g.is_connected() && g.n() > 0 {
        match chordal_separator(g) {
            Ok(sep) => {
                let verdict = verify_separation(g, &sep);
                ck.holds(
                    None,
                    "chordal_separator:verified,|S|=1",
                    verdict.is_ok() && sep.s.len() == 1,
                    format!("{:?}; A={:?} S={:?} B={:?}", verdict.err(), sep.a, sep.s, sep.b),
                );
            }
            Err(Error::Degenerate(_)) => {}
            Err(e) => ck.skip(None, "chordal_separator:verified,|S|=1", e.to_string()),
        }
    }

    for (i, &t) in ts.iter().enumerate() {
        let at = Some(t);
        match (get(Param::Grad, at), get(Param::Degeneracy, None)) {
            (Ok(gr), Ok(d)) => ck.holds(
                at,
                "degeneracy/2<=grad",
                Ratio::new(*d.numer(), 2) <= gr,
                format!("degeneracy={d}, grad={gr}"),
            ),
            (gr, d) => ck.skip(at, "degeneracy/2<=grad", format!("{gr:?} {d:?}")),
        }
        match (get(Param::PT, at), get(Param::BetaHat, at), get(Param::KT, at)) {
            (Ok(p), Ok(b), Ok(k)) => {
                let ok = p <= b && int(b) <= int(k) + 1;
                let witness = if ok {
                    String::new()
                } else {
                    lookup(&results, Param::BetaHat, at)
                        .map(|r| r.witness.to_string())
                        .unwrap_or_default()
                };
                ck.holds(at, "p_t<=beta_hat<=k_t+1", ok, format!("p_t={p}, beta_hat={b}, k_t={k} {witness}"));
            }
            (p, b, k) => ck.skip(at, "p_t<=beta_hat<=k_t+1", format!("{p:?} {b:?} {k:?}")),
        }
        if chordal {
            match get(Param::BetaHat, at) {
                Ok(b) => ck.holds(at, "chordal:beta_hat=1", int(b) == 1, format!("beta_hat={b}")),
                Err(e) => ck.skip(at, "chordal:beta_hat=1", e),
            }
        }
        if i > 0 {
            let prev = Some(ts[i - 1]);
            if ts[i - 1] < t {
                for p in [Param::BetaHat, Param::Grad, Param::KT, Param::PT, Param::ST] {
                    let name = match p {
                        Param::BetaHat => "monotone:beta_hat",
                        Param::Grad => "monotone:grad",
                        Param::KT => "monotone:k_t",
                        Param::PT => "monotone:p_t",
                        _ => "monotone:s_t",
                    };
                    match (get(p, prev), get(p, at)) {
                        (Ok(a), Ok(b)) => ck.holds(at, name, a <= b, format!("{p}@{}={a}, {p}@{t}={b}", ts[i - 1])),
                        (a, b) => ck.skip(at, name, format!("{a:?} {b:?}")),
                    }
                }
            }
        }
    }

    let values = GraphValues {
        graph_id: inst.graph_id.clone(),
        graph: GraphSize { n: g.n(), m: g.m() },
        results,
        errors,
    };
    (ck.rows, values)
}

fn separator_checks(ck: &mut Checker<'_>, g: &Graph, ccw: usize, cover: &CliqueCover, caps: &Caps) {
    if cover.len() < 3 {
        return;
    }
    let sep = match ccw_separator(g, cover) {
        Ok(sep) => sep,
        Err(e) => {
            ck.skip(None, "ccw_separator:verified,|S|<=ccw", e.to_string());
            return;
        }
    };
    let verdict = verify_separation(g, &sep);
    ck.holds(
        None,
        "ccw_separator:verified,|S|<=ccw",
        verdict.is_ok() && sep.s.len() <= ccw && Some(sep.s.len()) <= sep.widths.w,
        format!("{:?}; |A|={} |S|={} |B|={} ccw={ccw}", verdict.err(), sep.a.len(), sep.s.len(), sep.b.len()),
    );
    if sep.a.is_empty() || sep.b.is_empty() {
        return;
    }
    match min_balanced_clique_separator(g, cover, caps) {
        Ok(r) => ck.holds(
            None,
            "min_separator<=ccw",
            r.size.is_some_and(|s| s <= ccw),
            format!("min={:?}, ccw={ccw}", r.size),
        ),
        Err(e) => ck.skip(None, "min_separator<=ccw", e.to_string()),
    }
}

/// Evaluates every applicable inequality on every instance.
pub fn cmd_verify(input: Input, instances: &[Instance], ts: &[usize], caps: &Caps) -> VerifyReport {
    let per = par::map(instances, caps.parallel, |inst| verify_graph(inst, ts, caps));
    let mut checks = Vec::new();
    let mut values = Vec::new();
    for (rows, v) in per {
        checks.extend(rows);
        values.push(v);
    }
    let mut summary = CheckSummary::default();
    for r in &checks {
        match r.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Skipped => summary.skipped += 1,
        }
    }
    VerifyReport {
        schema: SCHEMA,
        version: VERSION,
        input,
        t: ts.to_vec(),
        caps: caps.clone(),
        summary,
        checks,
        values,
    }
}

/// One row of the induced-star growth experiment.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StarRow {
    pub graph_id: String,
    pub n: usize,
    pub seed: Option<u64>,
    pub s: usize,
    pub t: usize,
    pub s_t: usize,
    pub ratio_num: Option<u64>,
    pub ratio_den: Option<u64>,
    pub ratio: String,
    pub exhaustive: bool,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MaxRatio {
    pub value: Value,
    pub graph_id: String,
    pub t: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StarSummary {
    pub instances: usize,
    pub rows: usize,
    pub undefined: usize,
    pub max_ratio: Option<MaxRatio>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Conjecture1Report {
    pub schema: &'static str,
    pub version: &'static str,
    pub input: Input,
    pub t: Vec<usize>,
    pub caps: Caps,
    pub summary: StarSummary,
    pub rows: Vec<StarRow>,
    pub errors: Vec<RowError>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowError {
    pub graph_id: String,
    pub kind: &'static str,
    pub message: String,
}

impl Conjecture1Report {
    pub fn to_json(&self) -> String {
        to_json(self)
    }

    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        write_rows(out, &self.rows)
    }

    pub fn exit_code(&self) -> i32 {
        row_error_code(&self.errors)
    }
}

fn row_error_code(errors: &[RowError]) -> i32 {
    if errors.iter().any(|e| e.kind != "capacity") {
        2
    } else if errors.is_empty() {
        0
    } else {
        3
    }
}

fn star_rows(inst: &Instance, ts: &[usize], caps: &Caps) -> Result<Vec<StarRow>> {
    let g = &inst.graph;
    let s = largest_induced_star(g, caps)?.size();
    let mut rows = Vec::new();
    for &t in ts {
        let r = s_t(g, t, caps)?;
        let denom = (t * s) as u64;
        let (num, den, text, mut note) = if denom == 0 {
            (None, None, String::new(), "ratio undefined".to_string())
        } else {
            let q = Ratio::new(r.value as u64, denom);
            (Some(*q.numer()), Some(*q.denom()), Value(q).to_string(), String::new())
        };
        if !r.exhaustive {
            if !note.is_empty() {
                note.push_str("; ");
            }
            note.push_str("lower-bound");
        }
        rows.push(StarRow {
            graph_id: inst.graph_id.clone(),
            n: g.n(),
            seed: inst.seed,
            s,
            t,
            s_t: r.value,
            ratio_num: num,
            ratio_den: den,
            ratio: text,
            exhaustive: r.exhaustive,
            note,
        });
    }
    Ok(rows)
}

/// Growth of the largest induced star under shallow minors, `s_t / (t s)`.
pub fn cmd_conjecture1(input: Input, instances: &[Instance], ts: &[usize], caps: &Caps) -> Conjecture1Report {
    let per = par::map(instances, caps.parallel, |inst| star_rows(inst, ts, caps));
    let mut rows = Vec::new();
    let mut errors = Vec::new();
    for (inst, r) in instances.iter().zip(per) {
        match r {
            Ok(r) => rows.extend(r),
            Err(e) => errors.push(RowError {
                graph_id: inst.graph_id.clone(),
                kind: e.kind(),
                message: e.to_string(),
            }),
        }
    }
    rows.sort_by_key(|r| (r.n, r.seed, r.t));
    let mut max_ratio: Option<MaxRatio> = None;
    for r in &rows {
        if let (Some(num), Some(den)) = (r.ratio_num, r.ratio_den) {
            let v = Value(Ratio::new(num, den));
            if max_ratio.as_ref().map_or(true, |m| v > m.value) {
                max_ratio = Some(MaxRatio {
                    value: v,
                    graph_id: r.graph_id.clone(),
                    t: r.t,
                });
            }
        }
    }
    Conjecture1Report {
        schema: SCHEMA,
        version: VERSION,
        input,
        t: ts.to_vec(),
        caps: caps.clone(),
        summary: StarSummary {
            instances: instances.len(),
            rows: rows.len(),
            undefined: rows.iter().filter(|r| r.ratio_num.is_none()).count(),
            max_ratio,
        },
        rows,
        errors,
    }
}

/// Which clique cover the separator experiment measures against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverSource {
    /// Minimum clique cover.
    Beta,
    /// Optimal cover for clique cover width.
    Ccw,
    /// Clique-tree cover of a connected chordal graph.
    Chordal,
}

impl std::str::FromStr for CoverSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<CoverSource> {
        match s {
            "beta" => Ok(CoverSource::Beta),
            "ccw" => Ok(CoverSource::Ccw),
            "chordal" => Ok(CoverSource::Chordal),
            _ => Err(Error::validation(format!("unknown cover source {s}; expected beta, ccw or chordal"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeparatorRow {
    pub graph_id: String,
    pub n: usize,
    pub seed: Option<u64>,
    pub cover: CoverSource,
    pub blocks: usize,
    pub min_separator: Option<usize>,
    pub ceil_sqrt_blocks: usize,
    pub status: &'static str,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparatorSummary {
    pub instances: usize,
    pub filtered: usize,
    pub rows: usize,
    pub feasible: usize,
    pub infeasible: usize,
    pub above_sqrt: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Conjecture2Report {
    pub schema: &'static str,
    pub version: &'static str,
    pub input: Input,
    pub p: usize,
    pub t: usize,
    pub cover: CoverSource,
    pub caps: Caps,
    pub summary: SeparatorSummary,
    pub rows: Vec<SeparatorRow>,
    pub errors: Vec<RowError>,
}

impl Conjecture2Report {
    pub fn to_json(&self) -> String {
        to_json(self)
    }

    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        write_rows(out, &self.rows)
    }

    pub fn exit_code(&self) -> i32 {
        row_error_code(&self.errors)
    }
}

/// Smallest `r` with `r * r >= x`.
pub fn ceil_sqrt(x: usize) -> usize {
    let r = x.isqrt();
    if r * r == x {
        r
    } else {
        r + 1
    }
}

enum SeparatorOutcome {
    Filtered,
    Row(SeparatorRow),
}

fn separator_row(inst: &Instance, p: usize, t: usize, source: CoverSource, caps: &Caps) -> Result<SeparatorOutcome> {
    let g = &inst.graph;
    let hypothesis = p_t(g, t, caps)?;
    if hypothesis.value >= p {
        return Ok(SeparatorOutcome::Filtered);
    }
    let mut note = if hypothesis.exhaustive {
        String::new()
    } else {
        "hypothesis unverified (p_t capped)".to_string()
    };
    let row = |blocks: usize, min: Option<usize>, status: &'static str, note: String| SeparatorRow {
        graph_id: inst.graph_id.clone(),
        n: g.n(),
        seed: inst.seed,
        cover: source,
        blocks,
        min_separator: min,
        ceil_sqrt_blocks: ceil_sqrt(blocks),
        status,
        note,
    };
    let cover = match source {
        CoverSource::Beta => clique_cover_number(g, caps).map(|(_, c)| c),
        CoverSource::Ccw => ccw_exact(g, caps).map(|(_, c)| c),
        CoverSource::Chordal => chordal_separator(g).map(|s| s.cover),
    };
    let cover = match cover {
        Ok(c) => c,
        Err(Error::Capacity { .. }) => return Ok(SeparatorOutcome::Row(row(0, None, "capped", "cover beyond exact cap".into()))),
        Err(e) if source == CoverSource::Chordal => {
            return Ok(SeparatorOutcome::Row(row(0, None, "no-cover", e.to_string())))
        }
        Err(e) => return Err(e),
    };
    Ok(SeparatorOutcome::Row(match min_balanced_clique_separator(g, &cover, caps) {
        Ok(r) => match r.size {
            Some(k) => row(cover.len(), Some(k), "feasible", note),
            None => {
                if !note.is_empty() {
                    note.push_str("; ");
                }
                note.push_str("no balanced separator");
                row(cover.len(), None, "infeasible", note)
            }
        },
        Err(Error::Capacity { .. }) => row(cover.len(), None, "capped", "separator search beyond block cap".into()),
        Err(e) => return Err(e),
    }))
}

/// Minimum balanced clique separators against `ceil(sqrt(|C|))`, on the
/// instances with no `K_{p,p}` as a `t`-shallow minor.
pub fn cmd_conjecture2(
    input: Input,
    instances: &[Instance],
    p: usize,
    t: usize,
    source: CoverSource,
    caps: &Caps,
) -> Conjecture2Report {
    let per = par::map(instances, caps.parallel, |inst| separator_row(inst, p, t, source, caps));
    let mut rows = Vec::new();
    let mut errors = Vec::new();
    let mut filtered = 0;
    for (inst, r) in instances.iter().zip(per) {
        match r {
            Ok(SeparatorOutcome::Row(row)) => rows.push(row),
            Ok(SeparatorOutcome::Filtered) => filtered += 1,
            Err(e) => errors.push(RowError {
                graph_id: inst.graph_id.clone(),
                kind: e.kind(),
                message: e.to_string(),
            }),
        }
    }
    rows.sort_by_key(|r| (r.n, r.seed));
    let summary = SeparatorSummary {
        instances: instances.len(),
        filtered,
        rows: rows.len(),
        feasible: rows.iter().filter(|r| r.status == "feasible").count(),
        infeasible: rows.iter().filter(|r| r.status == "infeasible").count(),
        above_sqrt: rows
            .iter()
            .filter(|r| r.min_separator.is_some_and(|k| k > r.ceil_sqrt_blocks))
            .count(),
    };
    Conjecture2Report {
        schema: SCHEMA,
        version: VERSION,
        input,
        p,
        t,
        cover: source,
        caps: caps.clone(),
        summary,
        rows,
        errors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::NamedFamily;

    fn single(family: Family) -> Vec<Instance> {
        CorpusSpec::Single { family }.instances(0).unwrap()
    }

    fn input() -> Input {
        Input::Corpus {
            spec: "test".into(),
            seed: 0,
        }
    }

    #[test]
    fn corpus_specs() {
        assert_eq!(CorpusSpec::parse("all-labeled:3").unwrap().instances(0).unwrap().len(), 8);
        let c = CorpusSpec::parse("chordal:6:9").unwrap().instances(10).unwrap();
        assert_eq!(c.len(), 6);
        assert!(c.iter().all(|i| (5..=9).contains(&i.graph.n())));
        assert_eq!(c[0].seed, Some(10));
        assert_eq!(c[0].graph_id, "chordal-n5-s10");
        let s = CorpusSpec::parse("family:path:n=9").unwrap().instances(0).unwrap();
        assert_eq!(s[0].graph.n(), 9);
        assert_eq!(s[0].graph_id, "path-n9-s0");
        assert!(matches!(
            CorpusSpec::parse("incomparability:3:7:0.25").unwrap(),
            CorpusSpec::Random {
                family: RandomFamily::Incomparability { density },
                ..
            } if density == 0.25
        ));
        for bad in ["", "chordal:3", "chordal:x:4", "chordal:3:4:5", "zzz:1:2", "chordal:1:0"] {
            assert!(CorpusSpec::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn compute_examples() {
        let k33 = Family::Named(NamedFamily::CompleteBipartite { a: 3, b: 3 }).build(0).unwrap().graph;
        let (r, e) = compute_params(&k33, "k33", &[Param::BetaHat], &[0], &Caps::default(), false);
        assert!(e.is_empty());
        assert_eq!((r[0].value, r[0].exhaustive), (Value::int(3), true));

        let k5 = Family::Named(NamedFamily::Complete { n: 5 }).build(0).unwrap().graph;
        let (r, _) = compute_params(&k5, "k5", &[Param::Ccw], &[], &Caps::default(), false);
        assert_eq!(r[0].value, Value::int(0));

        let k4 = Family::Named(NamedFamily::Complete { n: 4 }).build(0).unwrap().graph;
        let (r, _) = compute_params(&k4, "k4", &[Param::Grad], &[1], &Caps::default(), false);
        assert_eq!(r[0].value, Value(Ratio::new(3, 2)));
        assert_eq!(r[0].id, "k4#grad@1");
    }

    #[test]
    fn ccw_past_cap_is_an_upper_bound() {
        let p12 = Family::Named(NamedFamily::Path { n: 12 }).build(0).unwrap().graph;
        let (r, e) = compute_params(&p12, "p12", &[Param::Ccw], &[], &Caps::default(), false);
        assert!(e.is_empty());
        assert_eq!((r[0].bound, r[0].exhaustive), (Bound::UpperBound, false));
        assert_eq!(r[0].value, Value::int(1));
    }

    #[test]
    fn capped_minor_values_are_lower_bounds() {
        let caps = Caps {
            max_models: 5,
            ..Caps::default()
        };
        let c6 = Family::Named(NamedFamily::Cycle { n: 6 }).build(0).unwrap().graph;
        let (r, _) = compute_params(&c6, "c6", &[Param::PT], &[1], &caps, false);
        assert_eq!((r[0].bound, r[0].exhaustive), (Bound::LowerBound, false));
    }

    #[test]
    fn verify_pentagon() {
        let inst = single(Family::Named(NamedFamily::Cycle { n: 5 }));
        let rep = cmd_verify(input(), &inst, &[0, 1], &Caps::default());
        assert_eq!(rep.summary.fail, 0);
        let row = rep.checks.iter().find(|r| r.check == "nbr_beta<=max(degeneracy,1)").unwrap();
        assert_eq!(row.status, Status::Pass);
        assert_eq!(row.detail, "nbr_beta=2, degeneracy=2");
    }

    #[test]
    fn verify_skips_capped_runs() {
        let caps = Caps {
            max_models: 3,
            ..Caps::default()
        };
        let inst = single(Family::Named(NamedFamily::Cycle { n: 5 }));
        let rep = cmd_verify(input(), &inst, &[1], &caps);
        let row = rep.checks.iter().find(|r| r.check == "p_t<=beta_hat<=k_t+1").unwrap();
        assert_eq!(row.status, Status::Skipped);
        assert_eq!(rep.exit_code(), 0);
    }

    #[test]
    fn conjecture1_examples() {
        let inst = single(Family::Named(NamedFamily::Star { leaves: 4 }));
        let rep = cmd_conjecture1(input(), &inst, &[1], &Caps::default());
        assert!(rep.rows[0].s_t >= 4);
        assert_eq!(rep.rows[0].ratio, "1");

        let inst = single(Family::Obs2 { n: 6, t: 3 });
        let rep = cmd_conjecture1(input(), &inst, &[3], &Caps::default());
        assert!(rep.rows[0].s_t >= 3);

        let edgeless = vec![Instance {
            graph_id: "e3".into(),
            seed: None,
            graph: Graph::empty(3).unwrap(),
        }];
        let rep = cmd_conjecture1(input(), &edgeless, &[1], &Caps::default());
        assert_eq!(rep.rows[0].note, "ratio undefined");
        assert_eq!(rep.summary.undefined, 1);
        assert!(rep.summary.max_ratio.is_none());
    }

    #[test]
    fn conjecture2_examples() {
        let inst = single(Family::Named(NamedFamily::Path { n: 9 }));
        let rep = cmd_conjecture2(input(), &inst, 3, 1, CoverSource::Beta, &Caps::default());
        // The minimum cover of P_9 pairs up edges; path order is not needed.
        assert_eq!(rep.rows[0].min_separator, Some(1));

        let inst = single(Family::Named(NamedFamily::CompleteBipartite { a: 3, b: 3 }));
        let rep = cmd_conjecture2(input(), &inst, 2, 0, CoverSource::Beta, &Caps::default());
        assert_eq!((rep.summary.filtered, rep.rows.len()), (1, 0));
    }

    #[test]
    fn ceil_sqrt_values() {
        let got: Vec<usize> = [0, 1, 2, 4, 5, 9, 10].iter().map(|&x| ceil_sqrt(x)).collect();
        assert_eq!(got, vec![0, 1, 2, 2, 3, 3, 4]);
    }
}
