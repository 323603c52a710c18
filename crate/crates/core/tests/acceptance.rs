//! End-to-end acceptance matrix. Prints one PASS/FAIL line per criterion
//! and exits nonzero if any fails. Every comparison is exact; the time
//! budget of each criterion is part of its pass condition.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use gencluster::colored_complex::{build_complex, type_a_polygon_complex, ClusterComplex};
use gencluster::complex::{Face, SimplicialComplex};
use gencluster::coxeter::{absolute_leq, element_of_permutation, rho_sequence, total_order, Permutation};
use gencluster::noncrossing::{homotopy_compare, nc_interval};
use gencluster::root_system::RootSystem;
use gencluster::topology::{
    construct_shelling, fuss_narayana_positive_integer, homology, kcm_audit, verify_shelling, CmCheck,
    FailureReason, KcmMode, ShellingCheck,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, u64);

const MATRIX: &[&str] = &["A2", "A3", "B2", "B3", "G2"];

fn rs(label: &str) -> RootSystem {
    RootSystem::from_label(label).expect("known type")
}

fn cx(label: &str, m: usize) -> ClusterComplex {
    build_complex(&rs(label), m).expect("builds")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Facets as sets of labels.
fn labelled(cc: &ClusterComplex, c: &SimplicialComplex) -> BTreeSet<BTreeSet<String>> {
    c.facets()
        .iter()
        .map(|f| f.iter().map(|&v| cc.roots.label(v)).collect())
        .collect()
}

/// Hand-written A2 notation: `a1`, `a2`, `a` for α1, α2, α1+α2, a `^k`
/// color suffix, and `-a1`, `-a2` for the negative simple roots.
fn normalize(name: &str, m: usize) -> String {
    let (base, color) = match name.split_once('^') {
        Some((b, c)) => (b, c.parse::<usize>().expect("color")),
        None => (name, 1),
    };
    let expansion = match base {
        "-a1" => return "-s1".into(),
        "-a2" => return "-s2".into(),
        "a1" => "[1,0]",
        "a2" => "[0,1]",
        "a" => "[1,1]",
        other => panic!("unknown root {other}"),
    };
    assert!(color >= 1 && color <= m);
    format!("{expansion}:{color}")
}

fn listed(facets: &[[&str; 2]], m: usize) -> BTreeSet<BTreeSet<String>> {
    facets
        .iter()
        .map(|f| f.iter().map(|v| normalize(v, m)).collect())
        .collect()
}

fn c1_example_facets() -> Outcome {
    let one = listed(
        &[["a", "a2"], ["a1", "a"], ["-a2", "a1"], ["-a1", "-a2"], ["a2", "-a1"]],
        1,
    );
    let two = listed(
        &[
            ["a1^1", "a^1"],
            ["a1^1", "a^2"],
            ["a1^2", "a^2"],
            ["a^1", "a2^1"],
            ["a^1", "a2^2"],
            ["a^2", "a2^2"],
            ["a2^1", "a1^2"],
            ["-a2", "a1^1"],
            ["-a2", "a1^2"],
            ["a2^1", "-a1"],
            ["a2^2", "-a1"],
            ["-a1", "-a2"],
        ],
        2,
    );
    for (m, want) in [(1, one), (2, two)] {
        let cc = cx("A2", m);
        let got = labelled(&cc, &cc.complex);
        ensure(got == want, || format!("m = {m}: got {got:?}"))?;
    }
    Ok("5 and 12 facets, exact set equality".into())
}

fn c2_rho_sequence() -> Outcome {
    let a2 = rs("A2");
    let rho = rho_sequence(&a2).map_err(|e| e.to_string())?;
    let want = [(1, "[1,0]"), (2, "[1,1]"), (3, "[0,1]"), (4, "[-1,0]"), (0, "[0,-1]"), (6, "[0,-1]")];
    for (i, label) in want {
        let got = a2.root_label(rho.get(i));
        ensure(got == label, || format!("rho_{i} = {got}, expected {label}"))?;
    }
    let order: Vec<String> = total_order(&a2)
        .map_err(|e| e.to_string())?
        .roots()
        .iter()
        .map(|&r| a2.root_label(r))
        .collect();
    ensure(order == ["[0,-1]", "[1,0]", "[1,1]", "[0,1]", "[-1,0]"], || {
        format!("total order {order:?}")
    })?;
    Ok("rho_0..rho_4, rho_6 and the total order on A2".into())
}

fn c3_definitions_agree() -> Outcome {
    let mut cases = 0;
    for l in MATRIX {
        for m in 1..=3 {
            let cc = cx(l, m);
            let fr = cc.roots.fr_compatibility_graph().map_err(|e| e.to_string())?;
            ensure(fr == cc.graph, || format!("{l} m={m}: compatibility graphs differ"))?;
            let n = cc.roots.len();
            for a in 0..n {
                for b in a + 1..n {
                    let face = cc.roots.is_face(&[a, b]);
                    ensure(face == fr.has_edge(a, b), || format!("{l} m={m}: pair ({a},{b})"))?;
                }
            }
            let bad = cc.complex.facets().iter().filter(|f| !cc.roots.is_face(f)).count();
            ensure(bad == 0, || format!("{l} m={m}: {bad} cliques are not faces"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} cases, axiomatic pairs = two-element faces, cliques are faces"))
}

/// Ridge incidence counted directly from the facet list.
fn ridge_histogram(c: &SimplicialComplex) -> BTreeMap<usize, usize> {
    let mut ridges: BTreeMap<Face, usize> = BTreeMap::new();
    for f in c.facets() {
        for skip in 0..f.len() {
            let mut r = f.clone();
            r.remove(skip);
            *ridges.entry(r).or_default() += 1;
        }
    }
    let mut hist = BTreeMap::new();
    for count in ridges.values() {
        *hist.entry(*count).or_default() += 1;
    }
    hist
}

fn c4_purity_incidence() -> Outcome {
    for l in MATRIX {
        let n = rs(l).rank();
        for m in 1..=3 {
            let cc = cx(l, m);
            ensure(cc.complex.facets().iter().all(|f| f.len() == n), || {
                format!("{l} m={m}: impure")
            })?;
            let hist = ridge_histogram(&cc.complex);
            ensure(hist.keys().eq([m + 1].iter()), || format!("{l} m={m}: ridges {hist:?}"))?;
        }
    }
    Ok("every facet has n vertices, every ridge lies in m+1 facets".into())
}

/// Each facet meets the union of its predecessors in a nonempty pure
/// codimension-one subcomplex.
fn naive_shelling_ok(order: &[Face]) -> bool {
    order.iter().enumerate().skip(1).all(|(k, f)| {
        let meets: BTreeSet<Vec<usize>> = order[..k]
            .iter()
            .map(|g| f.iter().copied().filter(|v| g.contains(v)).collect())
            .collect();
        let maximal: Vec<&Vec<usize>> = meets
            .iter()
            .filter(|a| !meets.iter().any(|b| b.len() > a.len() && a.iter().all(|v| b.contains(v))))
            .collect();
        maximal.iter().all(|a| a.len() + 1 == f.len())
    })
}

fn c5_shellings() -> Outcome {
    let mut count = 0;
    for l in MATRIX {
        for m in 1..=3 {
            let cc = cx(l, m);
            for (name, c) in [("full", cc.complex.clone()), ("positive", cc.positive_part())] {
                let order = construct_shelling(&c, &cc.roots.shelling_ranking())
                    .map_err(|e| format!("{l} m={m} {name}: {e}"))?;
                let check = verify_shelling(&c, &order.facets).map_err(|e| e.to_string())?;
                ensure(matches!(check, ShellingCheck::Valid(_)), || {
                    format!("{l} m={m} {name}: certificate rejected")
                })?;
                ensure(naive_shelling_ok(&order.facets), || {
                    format!("{l} m={m} {name}: direct check rejects the order")
                })?;
                let same: BTreeSet<&Face> = order.facets.iter().collect();
                ensure(same.len() == c.facets().len() && c.facets().iter().all(|f| same.contains(f)), || {
                    format!("{l} m={m} {name}: not a permutation of the facets")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} shellings constructed and certified"))
}

fn c6_wedges() -> Outcome {
    for (l, m, rank) in [("A2", 2, 2u32), ("A3", 2, 5), ("A2", 1, 0)] {
        let r = rs(l);
        let h = homology(&cx(l, m).positive_part());
        let d = r.rank() as isize - 1;
        ensure(h.is_wedge_of_spheres(rank as usize, d), || format!("{l} m={m}: {h:?}"))?;
        let formula = fuss_narayana_positive_integer(&r, m - 1).map_err(|e| e.to_string())?;
        ensure(formula == BigInt::from(rank), || format!("{l} m={m}: formula gives {formula}"))?;
    }
    for l in MATRIX {
        for m in 1..=3 {
            let r = rs(l);
            let h = homology(&cx(l, m).positive_part());
            let want = fuss_narayana_positive_integer(&r, m - 1).map_err(|e| e.to_string())?;
            let want = usize::try_from(&want).map_err(|e| e.to_string())?;
            ensure(h.is_wedge_of_spheres(want, r.rank() as isize - 1), || {
                format!("{l} m={m}: positive part {h:?}, expected rank {want}")
            })?;
        }
    }
    let full = homology(&cx("A2", 2).complex);
    ensure(full.is_wedge_of_spheres(5, 1), || format!("Delta^2(A2): {full:?}"))?;
    Ok("ranks 2, 5, 0 and Z^5 for Delta^2(A2); whole matrix matches the formula".into())
}

/// Independent confirmation of an impure or dimension-dropping witness.
fn witness_ok(c: &SimplicialComplex, removed: &[usize], reason: FailureReason, n: usize) -> bool {
    let keep: Vec<usize> = c.vertices().into_iter().filter(|v| !removed.contains(v)).collect();
    let rest = c.induced(&keep);
    let sizes: BTreeSet<usize> = rest.facets().iter().map(Vec::len).collect();
    match reason {
        FailureReason::Impure => sizes.len() > 1,
        FailureReason::DimensionDrop => sizes.iter().all(|&s| s < n),
        FailureReason::NotCm => sizes.len() == 1 && sizes.contains(&n),
    }
}

fn c7_kcm() -> Outcome {
    let mut lines = Vec::new();
    for (l, mmax) in [("A2", 3), ("A3", 2)] {
        let n = rs(l).rank();
        for m in 1..=mmax {
            let cc = cx(l, m);
            let pos = cc.positive_part();
            for (name, c, k) in [("full", &cc.complex, m + 1), ("positive", &pos, m)] {
                let pass = kcm_audit(c, k, KcmMode::Exhaustive, CmCheck::Reisner);
                ensure(pass.passed(), || format!("{l} m={m} {name}: not {k}-CM: {:?}", pass.failures.first()))?;
                let fail = kcm_audit(c, k + 1, KcmMode::Exhaustive, CmCheck::Reisner);
                let w = fail
                    .failures
                    .first()
                    .ok_or_else(|| format!("{l} m={m} {name}: {}-CM, no witness", k + 1))?;
                ensure(w.removed.len() == k && witness_ok(c, &w.removed, w.reason, n), || {
                    format!("{l} m={m} {name}: bad witness {w:?}")
                })?;
                if name == "full" && l == "A2" && m == 2 {
                    let names: Vec<String> = w.removed.iter().map(|&v| cc.roots.label(v)).collect();
                    lines.push(format!("A2 m=2 witness {{{}}}", names.join(", ")));
                }
            }
        }
    }
    Ok(format!("(m+1)-CM but not (m+2)-CM, positive part m-CM but not (m+1)-CM; {}", lines.join("")))
}

fn c8_polygons() -> Outcome {
    for corners_minus_one in 2..=4 {
        let label = format!("A{}", corners_minus_one - 1);
        for m in 1..=3 {
            let (_, poly) = type_a_polygon_complex(corners_minus_one, m);
            let cc = cx(&label, m);
            ensure(poly.f_vector() == cc.complex.f_vector(), || {
                format!("{label} m={m}: {:?} vs {:?}", poly.f_vector(), cc.complex.f_vector())
            })?;
        }
    }
    Ok("A1..A3 with m = 1..3 match the polygon model".into())
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if k == p.len() {
            out.push(Permutation::new(p.clone()).expect("permutation"));
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

fn c9_symmetric_group() -> Outcome {
    let a3 = rs("A3");
    let perms = all_permutations(4);
    let elems: Vec<_> = perms
        .iter()
        .map(|p| element_of_permutation(&a3, p).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    for (p, w) in perms.iter().zip(&elems) {
        ensure(w.reflection_length(&a3) == p.absolute_length(), || {
            format!("length of {p:?}")
        })?;
    }
    let mut literal_disagreements = 0;
    for (u, eu) in perms.iter().zip(&elems) {
        for (w, ew) in perms.iter().zip(&elems) {
            let matrix = absolute_leq(&a3, eu, ew);
            ensure(matrix == Permutation::noncrossing_leq(u, w), || {
                format!("{u:?} vs {w:?}: matrix order says {matrix}")
            })?;
            if matrix != Permutation::cycle_deletion_leq(u, w) {
                literal_disagreements += 1;
            }
        }
    }
    Ok(format!(
        "24 lengths and 576 pairs agree with the noncrossing cycle criterion; bare cycle deletion differs on {literal_disagreements} pairs"
    ))
}

fn c10_noncrossing() -> Outcome {
    let mut mus = Vec::new();
    for l in ["A2", "A3", "B2", "B3"] {
        let r = rs(l);
        let nc = nc_interval(&r);
        let p = &nc.poset;
        let (lo, hi) = (p.bottom().ok_or("no bottom")?, p.top().ok_or("no top")?);
        let mu = p.moebius(lo, hi).map_err(|e| e.to_string())?;
        let facets = cx(l, 1).positive_part().facets().len() as i64;
        let sign = if r.rank().is_multiple_of(2) { 1 } else { -1 };
        ensure(mu == sign * facets, || format!("{l}: mu = {mu}, positive facets {facets}"))?;
        mus.push(format!("{l}:{mu}"));
    }
    for (l, ms) in [("A2", &[1, 2][..]), ("A3", &[2][..])] {
        let r = rs(l);
        for &m in ms {
            for k in 1..=r.rank() {
                let c = homotopy_compare(&r, m, k).map_err(|e| e.to_string())?;
                ensure(c.passed(), || format!("{l} m={m} k={k}: {c:?}"))?;
                ensure(c.fibers_acyclic && c.fibers_checked > 0, || {
                    format!("{l} m={m} k={k}: fibers")
                })?;
            }
        }
    }
    Ok(format!("mu {}; homotopy comparisons pass with acyclic fibers", mus.join(" ")))
}

fn c11_properties() -> Outcome {
    for (name, run, cases) in common::PROPERTIES {
        run(*cases).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!("{} property suites, fixed seed", common::PROPERTIES.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("1 example facets", c1_example_facets, 1),
        ("2 rho sequence", c2_rho_sequence, 1),
        ("3 definition equivalence", c3_definitions_agree, 30),
        ("4 purity and incidence", c4_purity_incidence, 30),
        ("5 shellings", c5_shellings, 60),
        ("6 wedge counts", c6_wedges, 60),
        ("7 k-CM audit", c7_kcm, 600),
        ("8 polygon model", c8_polygons, 30),
        ("9 absolute order in S4", c9_symmetric_group, 10),
        ("10 noncrossing checks", c10_noncrossing, 300),
        ("11 property suites", c11_properties, 120),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(budget);
        let (tag, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("over the {budget} s budget; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!("{tag} criterion {name} ({:.2} s): {detail}", elapsed.as_secs_f64());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
