use std::fmt::Write as _;

use clap::{Args, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use gencluster::colored_complex::{
    build_complex, complex_json, f_h_csv, f_h_vectors, type_a_polygon_complex, ClusterComplex,
};
use gencluster::complex::SimplicialComplex;
use gencluster::coxeter::check_exponents_by_eigenvalues;
use gencluster::noncrossing::{build_lm, homotopy_compare, nc_interval};
use gencluster::root_system::{CartanType, RootSystem};
use gencluster::topology::{
    codim1_incidence, construct_shelling, fuss_catalan, fuss_narayana_positive_integer, h_nonnegative,
    homology, inclusion_exclusion, kcm_audit, CmCheck, KcmMode, KcmReport,
};
use gencluster::Error;

use crate::report::{Check, Format, Report};

pub const MAX_RANK: usize = 6;
pub const MAX_M: usize = 4;
pub const FACE_CAP: u64 = 200_000;
/// Rank and `m` up to which `L^(m)` is materialized by default.
pub const POSET_RANK: usize = 3;
pub const POSET_M: usize = 3;

#[derive(Debug, Clone, Args, Serialize)]
pub struct Common {
    /// Root system, e.g. A3, B2, H3, I2(5), A1xA2, or a bare letter with --rank
    #[arg(long)]
    pub phi: String,
    #[arg(long)]
    pub rank: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub m: usize,
    /// Work on the positive part instead of the whole complex
    #[arg(long)]
    pub positive: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub workers: Option<usize>,
    /// Refuse to enumerate facets when mN + n exceeds this
    #[arg(long, default_value_t = 200)]
    pub cap_vertices: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CmMode {
    Reisner,
    Shelling,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct KcmArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub common: Common,
    /// Remove up to k − 1 vertices; defaults to m + 1 (m for --positive)
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, value_enum, default_value_t = CmMode::Reisner)]
    pub mode: CmMode,
    /// Check every subset instead of a seeded sample
    #[arg(long)]
    pub exhaustive: bool,
    /// Subsets drawn per size when sampling
    #[arg(long, default_value_t = 64)]
    pub samples: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct NcpArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub common: Common,
    /// Compare only this skeleton level; all levels when absent
    #[arg(long)]
    pub k: Option<usize>,
}

/// Command failure: bad input (exit 2) or a failed computation (exit 1).
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnsupportedType { .. }
            | Error::NotSimple { .. }
            | Error::Invalid(_)
            | Error::UnknownVertex(_)
            | Error::OracleGuard { .. }
            | Error::Reducible { .. } => Failure::Usage(e.to_string()),
            other => Failure::Check(other.to_string()),
        }
    }
}

type Outcome = Result<Report, Failure>;

fn load(c: &Common) -> Result<RootSystem, Failure> {
    let rs = match c.rank {
        Some(r) if c.phi.len() == 1 => RootSystem::build(&c.phi, r, None)?,
        Some(r) => {
            let rs = RootSystem::from_label(&c.phi)?;
            if rs.rank() != r {
                return Err(Failure::Usage(format!("{} has rank {}, not {r}", c.phi, rs.rank())));
            }
            rs
        }
        None => RootSystem::from_label(&c.phi)?,
    };
    if rs.rank() > MAX_RANK {
        return Err(Failure::Usage(format!("rank {} exceeds the cap {MAX_RANK}", rs.rank())));
    }
    if c.m > MAX_M {
        return Err(Failure::Usage(format!("m = {} exceeds the cap {MAX_M}", c.m)));
    }
    let verts = c.m * rs.num_positive() + rs.rank();
    if verts > c.cap_vertices {
        return Err(Failure::Usage(format!(
            "{verts} vertices exceed --cap-vertices {}",
            c.cap_vertices
        )));
    }
    Ok(rs)
}

fn config(value: &impl Serialize) -> Value {
    serde_json::to_value(value).expect("config serializes")
}

fn target(cc: &ClusterComplex, positive: bool) -> SimplicialComplex {
    if positive {
        cc.positive_part()
    } else {
        cc.complex.clone()
    }
}

fn labels(cc: &ClusterComplex, face: &[usize]) -> Vec<String> {
    face.iter().map(|&v| cc.roots.label(v)).collect()
}

fn face_cap(cx: &SimplicialComplex) -> Result<(), Failure> {
    let total: u64 = cx.f_vector().iter().sum();
    if total > FACE_CAP {
        return Err(Failure::Usage(format!("{total} faces exceed the cap {FACE_CAP}")));
    }
    Ok(())
}

pub fn build(c: &Common) -> Outcome {
    let rs = load(c)?;
    let cc = build_complex(&rs, c.m)?;
    let cx = target(&cc, c.positive);
    let mut r = Report::new("build", config(c));
    let cj = complex_json(&cc.roots, &cx);
    let mut t = String::new();
    let _ = writeln!(t, "vertices ({}): {}", cj.vertices.len(), cj.vertices.join(" "));
    let _ = writeln!(t, "facets ({}):", cx.facets().len());
    for f in cx.facets() {
        let _ = writeln!(t, "  {{{}}}", labels(&cc, f).join(", "));
    }
    r.table = t;
    if !c.positive {
        let want = fuss_catalan(&rs, c.m)?;
        r.check(Check::new(
            "facet-count",
            want == cx.facets().len().into(),
            format!("{} facets, Fuss-Catalan number {want}", cx.facets().len()),
        ));
    }
    r.result = config(&cj);
    Ok(r)
}

pub fn fvector(c: &Common) -> Outcome {
    let rs = load(c)?;
    let cc = build_complex(&rs, c.m)?;
    let cx = target(&cc, c.positive);
    let (f, h) = f_h_vectors(&cx);
    let mut r = Report::new("fvector", config(c));
    let hs: Option<Vec<String>> = h.as_ref().map(|h| h.iter().map(ToString::to_string).collect());
    r.table = format!(
        "f = ({})\nh = ({})\n",
        f.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
        hs.as_ref().map_or("not pure".to_string(), |h| h.join(", "))
    );
    match &h {
        Some(h) => {
            let sum: num_bigint::BigInt = h.iter().sum();
            r.check(Check::new(
                "h-vector",
                h_nonnegative(h) && sum == cx.facets().len().into(),
                format!("nonnegative, sums to {sum}"),
            ));
        }
        None => r.check(Check::new("purity", false, "complex is not pure")),
    }
    r.csv = Some(f_h_csv(&cx));
    r.result = json!({ "f_vector": f, "h_vector": hs });
    Ok(r)
}

fn wedge_checks(rs: &RootSystem, m: usize, cc: &ClusterComplex, positive: bool) -> Result<(Check, Value, String), Failure> {
    let cx = target(cc, positive);
    face_cap(&cx)?;
    let h = homology(&cx);
    let d = rs.rank() as isize - 1;
    let mut t = String::new();
    for g in &h.groups {
        if !g.is_trivial() {
            let tors: Vec<String> = g.torsion.iter().map(|x| format!("Z/{x}")).collect();
            let _ = writeln!(t, "H~_{} = Z^{} {}", g.dim, g.rank, tors.join(" "));
        }
    }
    let _ = writeln!(t, "reduced Euler characteristic {}", h.reduced_euler_characteristic);
    let check = if positive && m >= 1 {
        let want = fuss_narayana_positive_integer(rs, m - 1)?;
        let count = usize::try_from(&want).map_err(|_| Failure::Check("sphere count overflow".into()))?;
        Check::new(
            "wedge-positive",
            h.is_wedge_of_spheres(count, d),
            format!("expected Z^{want} in degree {d}"),
        )
    } else {
        let count = h.reduced_euler_characteristic.unsigned_abs() as usize;
        Check::new(
            if positive { "wedge-positive" } else { "wedge-full" },
            h.is_wedge_of_spheres(count, d),
            format!("free of rank |reduced Euler characteristic| = {count} in degree {d}"),
        )
    };
    Ok((check, config(&h), t))
}

pub fn homology_cmd(c: &Common) -> Outcome {
    let rs = load(c)?;
    let cc = build_complex(&rs, c.m)?;
    let (check, value, table) = wedge_checks(&rs, c.m, &cc, c.positive)?;
    let mut r = Report::new("homology", config(c));
    r.table = table;
    r.check(check);
    r.result = value;
    Ok(r)
}

fn shelling_check(cc: &ClusterComplex, positive: bool) -> (Check, Value) {
    let cx = target(cc, positive);
    let id = if positive { "shelling-positive" } else { "shelling-full" };
    match construct_shelling(&cx, &cc.roots.shelling_ranking()) {
        Ok(order) => {
            let facets: Vec<Vec<String>> = order.facets.iter().map(|f| labels(cc, f)).collect();
            let restriction: Vec<usize> = order.steps.iter().map(|s| s.restriction.len()).collect();
            (
                Check::new(id, true, format!("verified order of {} facets", facets.len())),
                json!({ "order": facets, "restriction_sizes": restriction }),
            )
        }
        Err(e) => (Check::new(id, false, e.to_string()), Value::Null),
    }
}

pub fn shelling(c: &Common) -> Outcome {
    let rs = load(c)?;
    let cc = build_complex(&rs, c.m)?;
    let (check, value) = shelling_check(&cc, c.positive);
    let mut r = Report::new("shelling", config(c));
    if let Some(order) = value.get("order").and_then(Value::as_array) {
        let mut t = String::new();
        for (k, f) in order.iter().enumerate() {
            let names: Vec<&str> = f.as_array().into_iter().flatten().filter_map(Value::as_str).collect();
            let _ = writeln!(t, "{:>4}  {{{}}}", k + 1, names.join(", "));
        }
        r.table = t;
    }
    r.check(check);
    r.result = value;
    Ok(r)
}

fn kcm_run(cc: &ClusterComplex, positive: bool, k: usize, exhaustive: bool, samples: usize, seed: u64, mode: CmMode) -> KcmReport {
    let cx = target(cc, positive);
    let mode_k = if exhaustive {
        KcmMode::Exhaustive
    } else {
        KcmMode::Sample { count: samples, seed }
    };
    let check = match mode {
        CmMode::Reisner => CmCheck::Reisner,
        CmMode::Shelling => CmCheck::Shelling,
    };
    kcm_audit(&cx, k, mode_k, check)
}

fn kcm_value(cc: &ClusterComplex, rep: &KcmReport) -> Value {
    let failures: Vec<Value> = rep
        .failures
        .iter()
        .map(|f| json!({ "removed": labels(cc, &f.removed), "reason": f.reason }))
        .collect();
    json!({
        "k": rep.k,
        "mode": rep.mode,
        "cm_check": rep.cm_check,
        "subsets_examined": rep.subsets_examined,
        "failures": failures,
    })
}

pub fn kcm(a: &KcmArgs) -> Outcome {
    let c = &a.common;
    let rs = load(c)?;
    let cc = build_complex(&rs, c.m)?;
    let k = a.k.unwrap_or(if c.positive { c.m } else { c.m + 1 });
    if k == 0 {
        return Err(Failure::Usage("k must be at least 1".into()));
    }
    let rep = kcm_run(&cc, c.positive, k, a.exhaustive, a.samples, c.seed, a.mode);
    let mut r = Report::new("kcm", config(a));
    let mut t = format!("{} subsets examined, {} failures\n", rep.subsets_examined, rep.failures.len());
    for f in rep.failures.iter().take(20) {
        let _ = writeln!(t, "  remove {{{}}}: {:?}", labels(&cc, &f.removed).join(", "), f.reason);
    }
    r.table = t;
    let detail = match rep.failures.first() {
        None => format!("{k}-Cohen-Macaulay on {} subsets", rep.subsets_examined),
        Some(f) => format!("fails after removing {{{}}}", labels(&cc, &f.removed).join(", ")),
    };
    r.check(Check::new(format!("kcm-{}", if c.positive { "positive" } else { "full" }), rep.passed(), detail));
    r.result = kcm_value(&cc, &rep);
    Ok(r)
}

pub fn incidence(c: &Common) -> Outcome {
    let rs = load(c)?;
    let cc = build_complex(&rs, c.m)?;
    let cx = target(&cc, c.positive);
    let hist = codim1_incidence(&cx)?;
    let mut r = Report::new("incidence", config(c));
    let mut t = String::from("facets per ridge: ridges\n");
    for (k, v) in &hist {
        let _ = writeln!(t, "  {k}: {v}");
    }
    r.table = t;
    if !c.positive {
        let ok = hist.keys().all(|&k| k == c.m + 1);
        r.check(Check::new("ridge-incidence", ok, format!("every ridge in exactly {} facets", c.m + 1)));
    } else {
        let ok = hist.keys().all(|&k| k <= c.m + 1);
        r.check(Check::new("ridge-incidence", ok, format!("every ridge in at most {} facets", c.m + 1)));
    }
    let value: serde_json::Map<String, Value> = hist.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    r.result = Value::Object(value);
    Ok(r)
}

fn ncp_checks(rs: &RootSystem, m: usize, only_k: Option<usize>) -> Result<(Vec<Check>, Value, String), Failure> {
    let mut checks = Vec::new();
    let mut t = String::new();
    if !rs.is_irreducible() {
        checks.push(Check::skipped("noncrossing", "reducible system"));
        return Ok((checks, Value::Null, t));
    }
    if m == 0 {
        checks.push(Check::skipped("noncrossing", "m = 0"));
        return Ok((checks, Value::Null, t));
    }
    if rs.rank() > POSET_RANK || m > POSET_M {
        checks.push(Check::skipped(
            "noncrossing",
            format!("materialized only for rank <= {POSET_RANK} and m <= {POSET_M}"),
        ));
        return Ok((checks, Value::Null, t));
    }
    let nc = nc_interval(rs);
    let p = &nc.poset;
    let mu = p.moebius(p.bottom().unwrap_or(0), p.top().unwrap_or(0))?;
    let pos_facets = build_complex(rs, 1)?.positive_part().facets().len() as i64;
    let sign = if rs.rank().is_multiple_of(2) { 1 } else { -1 };
    checks.push(Check::new(
        "moebius",
        mu == sign * pos_facets,
        format!("mu(0, gamma) = {mu}, positive facets {pos_facets}"),
    ));
    let lm = build_lm(rs, m)?;
    checks.push(Check::new(
        "poset-downward-closed",
        lm.is_downward_closed() && lm.poset.is_graded_partial_order(),
        format!("{} elements", lm.tuples.len()),
    ));
    let _ = writeln!(t, "[e, gamma]: {} elements, mu = {mu}", nc.elements.len());
    let _ = writeln!(t, "L^({m}): {} elements", lm.tuples.len());
    let ks: Vec<usize> = match only_k {
        Some(k) => vec![k],
        None => (1..=rs.rank()).collect(),
    };
    let mut comps = Vec::new();
    for k in ks {
        let cmp = homotopy_compare(rs, m, k)?;
        checks.push(Check::new(
            format!("homotopy-k{k}"),
            cmp.passed(),
            format!(
                "skeleton and truncated poset homology agree; {} fibers acyclic: {}",
                cmp.fibers_checked, cmp.fibers_acyclic
            ),
        ));
        comps.push(cmp);
    }
    let value = json!({
        "interval_size": nc.elements.len(),
        "moebius": mu,
        "poset": lm.to_json(rs),
        "comparisons": comps,
    });
    Ok((checks, value, t))
}

pub fn ncp(a: &NcpArgs) -> Outcome {
    let c = &a.common;
    let rs = load(c)?;
    if let Some(k) = a.k {
        if k == 0 || k > rs.rank() {
            return Err(Failure::Usage(format!("--k must lie in 1..={}", rs.rank())));
        }
    }
    let (checks, value, table) = ncp_checks(&rs, c.m, a.k)?;
    let mut r = Report::new("ncp", config(a));
    r.table = table;
    for ch in checks {
        r.check(ch);
    }
    r.result = value;
    Ok(r)
}

/// Runs every check for one `(Φ, m)`.
pub fn verify_all(c: &Common) -> Outcome {
    let rs = load(c)?;
    let m = c.m;
    let n = rs.rank();
    let mut r = Report::new("verify-all", config(c));
    let cc = build_complex(&rs, m)?;
    let cx = &cc.complex;

    match cc.roots.fr_compatibility_graph() {
        Ok(g) => r.check(Check::new(
            "compatibility-equivalence",
            g == cc.graph,
            "axiomatic compatibility equals the two-element face criterion",
        )),
        Err(e) => r.check(Check::new("compatibility-equivalence", false, e.to_string())),
    }
    let bad = cx.facets().iter().filter(|f| !cc.roots.is_face(f)).count();
    r.check(Check::new(
        "flag-cliques",
        bad == 0,
        format!("{bad} maximal cliques violate the face criterion"),
    ));
    if m >= 1 {
        let equivariant = cc.graph.is_equivariant(|v| cc.roots.rm_map(v));
        r.check(Check::new("rm-equivariance", equivariant, "compatibility is invariant under R_m"));
    }
    let want = fuss_catalan(&rs, m)?;
    r.check(Check::new(
        "facet-count",
        want == cx.facets().len().into(),
        format!("{} facets, Fuss-Catalan number {want}", cx.facets().len()),
    ));
    r.check(Check::new(
        "purity",
        cx.is_pure() && cx.dim() == n as isize - 1,
        format!("pure of dimension {}", cx.dim()),
    ));
    if m >= 1 {
        let hist = codim1_incidence(cx)?;
        r.check(Check::new(
            "ridge-incidence",
            hist.keys().all(|&k| k == m + 1),
            format!("ridge histogram {hist:?}"),
        ));
    }
    let (f, h) = f_h_vectors(cx);
    if let Some(h) = &h {
        let sum: num_bigint::BigInt = h.iter().sum();
        r.check(Check::new(
            "h-vector",
            h_nonnegative(h) && sum == cx.facets().len().into(),
            format!("h = {:?}", h.iter().map(ToString::to_string).collect::<Vec<_>>()),
        ));
    }
    for positive in [false, true] {
        if positive && m == 0 {
            continue;
        }
        let (check, _) = shelling_check(&cc, positive);
        r.check(check);
    }
    if m >= 1 {
        let (check, _, _) = wedge_checks(&rs, m, &cc, true)?;
        r.check(check);
    }
    let (check, _, _) = wedge_checks(&rs, m, &cc, false)?;
    r.check(check);
    if rs.is_irreducible() && m >= 1 {
        let (lhs, rhs) = inclusion_exclusion(&rs, m)?;
        r.check(Check::new(
            "euler-inclusion-exclusion",
            lhs == rhs,
            format!("{lhs} = {rhs}"),
        ));
        r.check(Check::new(
            "exponents",
            check_exponents_by_eigenvalues(&rs)?,
            "fixed spaces of powers of gamma match the exponents",
        ));
    }
    let exhaustive = cx.vertices().len() <= 24;
    let samples = 64;
    let full = kcm_run(&cc, false, m + 1, exhaustive, samples, c.seed, CmMode::Reisner);
    r.check(Check::new(
        "kcm-full",
        full.passed(),
        format!("{}-Cohen-Macaulay on {} subsets", m + 1, full.subsets_examined),
    ));
    if m >= 1 {
        let p = kcm_run(&cc, true, m, exhaustive, samples, c.seed, CmMode::Reisner);
        r.check(Check::new(
            "kcm-positive",
            p.passed(),
            format!("{m}-Cohen-Macaulay on {} subsets", p.subsets_examined),
        ));
    }
    if m >= 1 {
        if let [CartanType::A(k)] = rs.components().iter().map(|c| c.cartan).collect::<Vec<_>>()[..] {
            let (_, poly) = type_a_polygon_complex(k + 1, m);
            r.check(Check::new(
                "polygon-model",
                poly.f_vector() == f,
                format!("f-vector of noncrossing {m}-allowable diagonals {:?}", poly.f_vector()),
            ));
        }
    }
    let (checks, _, _) = ncp_checks(&rs, m, None)?;
    for ch in checks {
        r.check(ch);
    }
    let passed = r.checks.iter().filter(|c| c.status == crate::report::Status::Pass).count();
    r.table = format!("{passed} of {} checks passed\n", r.checks.len());
    r.result = json!({ "f_vector": f });
    Ok(r)
}
