//! The colored almost positive roots `Φ^m_{≥−1}`, the maps `τ±`, `R` and
//! `R_m`, the two descriptions of faces, and the complexes `Δ^m(Φ)`,
//! `Δ^m_+(Φ)` and `Δ^m_+(w)`.
//!
//! Vertices are numbered `0..n` for the negative simple roots `−α_1..−α_n`
//! followed by `α^c` at `n + (c−1)·N + i` for the positive root `i`.

mod graph;
mod polygon;

use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use serde::Serialize;

pub use graph::CompatibilityGraph;
pub use polygon::{allowable_diagonals, crosses, type_a_polygon_complex, Diagonal};

use crate::complex::{Face, SimplicialComplex};
use crate::coxeter::{absolute_leq, bipartite_coxeter, side_product, GroupElement, OrderKeys};
use crate::error::{Error, Result};
use crate::root_system::RootSystem;

/// A root of `Φ_{≥−1}` with a color in `1..=m`; negative simple roots
/// always carry color 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ColoredRoot {
    pub root: usize,
    pub color: usize,
}

/// `Φ^m_{≥−1}` together with the data fixed by the bipartition: `γ`, the
/// maps `τ±` and the total order.
#[derive(Debug, Clone)]
pub struct ColoredRoots {
    rs: RootSystem,
    m: usize,
    keys: OrderKeys,
    gamma: GroupElement,
    r_plus: GroupElement,
    r_minus: GroupElement,
}

impl ColoredRoots {
    pub fn new(rs: &RootSystem, m: usize) -> Result<Self> {
        Ok(ColoredRoots {
            keys: OrderKeys::new(rs)?,
            gamma: bipartite_coxeter(rs),
            r_plus: side_product(rs, true),
            r_minus: side_product(rs, false),
            rs: rs.clone(),
            m,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn gamma(&self) -> &GroupElement {
        &self.gamma
    }

    pub fn order_keys(&self) -> &OrderKeys {
        &self.keys
    }

    /// `|Φ^m_{≥−1}| = mN + n`.
    pub fn len(&self) -> usize {
        self.rs.rank() + self.m * self.rs.num_positive()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn vertex(&self, id: usize) -> ColoredRoot {
        let n = self.rs.rank();
        if id < n {
            ColoredRoot {
                root: self.rs.negate(self.rs.simple_root(id)),
                color: 1,
            }
        } else {
            let k = id - n;
            let np = self.rs.num_positive();
            ColoredRoot {
                root: k % np,
                color: k / np + 1,
            }
        }
    }

    pub fn id_of(&self, v: ColoredRoot) -> Option<usize> {
        if self.rs.is_positive(v.root) {
            (1..=self.m)
                .contains(&v.color)
                .then(|| self.rs.rank() + (v.color - 1) * self.rs.num_positive() + v.root)
        } else {
            (v.color == 1)
                .then(|| self.rs.negative_simple_index(v.root))
                .flatten()
        }
    }

    pub fn is_negative_simple(&self, id: usize) -> bool {
        id < self.rs.rank()
    }

    /// Ids of the positive colored roots.
    pub fn positive_ids(&self) -> std::ops::Range<usize> {
        self.rs.rank()..self.len()
    }

    /// `-s<i>` for `−α_i`, otherwise the simple expansion and the color,
    /// e.g. `[1,1]:2`.
    pub fn label(&self, id: usize) -> String {
        if self.is_negative_simple(id) {
            format!("-s{}", id + 1)
        } else {
            let v = self.vertex(id);
            format!("{}:{}", self.rs.root_label(v.root), v.color)
        }
    }

    pub fn id_of_label(&self, label: &str) -> Result<usize> {
        (0..self.len())
            .find(|&id| self.label(id) == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    /// `τ_ε` on `Φ_{≥−1}` (root indices): fixes `−Π_{−ε}` and applies `R_ε`
    /// elsewhere.
    pub fn tau(&self, plus: bool, root: usize) -> usize {
        if let Some(k) = self.rs.negative_simple_index(root) {
            if self.rs.is_plus(k) != plus {
                return root;
            }
        }
        let r = if plus { &self.r_plus } else { &self.r_minus };
        r.apply(root)
    }

    /// `R = τ_− τ_+`.
    pub fn deformed_coxeter(&self, root: usize) -> usize {
        self.tau(false, self.tau(true, root))
    }

    /// `R_m(α^k)`: the next color of a positive root, or `R(α)` in color 1.
    pub fn rm_map(&self, id: usize) -> usize {
        let v = self.vertex(id);
        if self.rs.is_positive(v.root) && v.color < self.m {
            return id + self.rs.num_positive();
        }
        let image = ColoredRoot {
            root: self.deformed_coxeter(v.root),
            color: 1,
        };
        self.id_of(image)
            .expect("R maps the almost positive roots to themselves")
    }

    /// The support rule for `−α_k` against `β^ℓ`.
    fn support_rule(&self, neg: usize, other: usize) -> bool {
        let k = neg;
        let beta = self.vertex(other).root;
        self.rs.root(beta).support_mask() & (1 << k) == 0
    }

    fn first_answer(&self, a: usize, b: usize) -> Option<bool> {
        if self.is_negative_simple(a) {
            Some(self.support_rule(a, b))
        } else if self.is_negative_simple(b) {
            Some(self.support_rule(b, a))
        } else {
            None
        }
    }

    fn same_component(&self, a: usize, b: usize) -> bool {
        let ca = self.rs.root(self.vertex(a).root).component();
        let cb = self.rs.root(self.vertex(b).root).component();
        ca == cb
    }

    /// Compatibility from the two defining axioms: apply `R_m` to both
    /// until one is a negative simple root, then use the support rule.
    /// Roots in different components are always compatible.
    pub fn fr_compatible(&self, a: usize, b: usize) -> Result<bool> {
        if a == b {
            return Err(Error::SameVertex(self.label(a)));
        }
        if !self.same_component(a, b) {
            return Ok(true);
        }
        let (mut x, mut y) = (a, b);
        for _ in 0..=self.orbit_bound() {
            if let Some(ans) = self.first_answer(x, y) {
                return Ok(ans);
            }
            x = self.rm_map(x);
            y = self.rm_map(y);
        }
        Err(Error::TheoremViolation(format!(
            "R_m orbit of {} and {} avoids the negative simple roots",
            self.label(a),
            self.label(b)
        )))
    }

    /// Runs the pair through its whole joint `R_m`-orbit and reports the
    /// support-rule answer at every step where one entry is a negative
    /// simple root. Compatibility is well defined when all agree.
    pub fn fr_answers_along_orbit(&self, a: usize, b: usize) -> Result<Vec<bool>> {
        if a == b {
            return Err(Error::SameVertex(self.label(a)));
        }
        let (mut x, mut y) = (a, b);
        let mut out = Vec::new();
        loop {
            if let Some(ans) = self.first_answer(x, y) {
                out.push(ans);
            }
            x = self.rm_map(x);
            y = self.rm_map(y);
            if (x, y) == (a, b) {
                return Ok(out);
            }
            if out.len() > 4 * self.len() * self.len() {
                return Err(Error::Internal("joint R_m orbit did not close".into()));
            }
        }
    }

    /// Number of `R_m` steps after which every vertex has met `−Π`.
    pub fn orbit_bound(&self) -> usize {
        (self.m.max(1)) * (self.rs.num_positive() + self.rs.rank()) + 1
    }

    /// `w_σ = w_{σ+} w_{σ(m)} ⋯ w_{σ(1)} w_{σ−}`, where each `w_τ` multiplies
    /// the reflections of `τ` from the largest element down to the smallest
    /// in the total order.
    pub fn word_of_face(&self, face: &[usize]) -> GroupElement {
        let mut factors: Vec<usize> = Vec::with_capacity(face.len());
        let mut class = |pred: &dyn Fn(usize) -> bool| {
            let mut roots: Vec<usize> = face
                .iter()
                .copied()
                .filter(|&id| pred(id))
                .map(|id| self.vertex(id).root)
                .collect();
            self.keys.sort(&mut roots);
            factors.extend(roots.into_iter().rev());
        };
        let neg_side = |id: usize, plus: bool| {
            self.is_negative_simple(id) && self.rs.is_plus(id) == plus
        };
        class(&|id| neg_side(id, true));
        for c in (1..=self.m).rev() {
            class(&|id| !self.is_negative_simple(id) && self.vertex(id).color == c);
        }
        class(&|id| neg_side(id, false));
        let refl: Vec<GroupElement> = factors
            .into_iter()
            .map(|r| GroupElement::reflection(&self.rs, r))
            .collect();
        GroupElement::product(&self.rs, &refl)
    }

    /// `σ` is a face iff `w_σ ≼ γ` and `ℓ_T(w_σ) = |σ|`.
    pub fn is_face(&self, face: &[usize]) -> bool {
        self.is_face_below(face, &self.gamma)
    }

    /// `ℓ_T(w_σ) = |σ|` and `w_σ ≼ w`.
    pub fn is_face_below(&self, face: &[usize], w: &GroupElement) -> bool {
        let ws = self.word_of_face(face);
        ws.reflection_length(&self.rs) == face.len() && absolute_leq(&self.rs, &ws, w)
    }

    /// Pairwise compatibility through the `w_σ` criterion on pairs.
    pub fn compatibility_graph(&self) -> CompatibilityGraph {
        CompatibilityGraph::from_predicate(self.len(), |a, b| self.is_face(&[a, b]))
    }

    /// Pairwise compatibility from the defining axioms.
    pub fn fr_compatibility_graph(&self) -> Result<CompatibilityGraph> {
        let mut g = CompatibilityGraph::new(self.len());
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                if self.fr_compatible(a, b)? {
                    g.add_edge(a, b);
                }
            }
        }
        Ok(g)
    }

    /// Maps a vertex of `Φ^m_{≥−1}` of the parabolic subsystem on the simple
    /// roots `keep` to the corresponding vertex of this system.
    pub fn embed_parabolic_vertex(&self, sub: &ColoredRoots, keep: &[usize], id: usize) -> usize {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        if sub.is_negative_simple(id) {
            return keep[id];
        }
        let v = sub.vertex(id);
        let emb = self.rs.parabolic_embedding(&keep);
        self.id_of(ColoredRoot {
            root: emb[v.root],
            color: v.color,
        })
        .expect("positive root of a parabolic subsystem")
    }

    /// Vertex ids ranked for shelling: negative simple roots, then positive
    /// colored roots by color and then by the total order.
    pub fn shelling_ranking(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = (0..self.len()).collect();
        ids.sort_by_key(|&id| {
            let v = self.vertex(id);
            (!self.is_negative_simple(id), v.color, self.keys.key(v.root))
        });
        ids
    }

    /// The vertex set `Φ^m_+(w)`: positive colored roots with `R(α) ≼ w`.
    pub fn vertices_below(&self, w: &GroupElement) -> Vec<usize> {
        self.positive_ids()
            .filter(|&id| {
                let t = GroupElement::reflection(&self.rs, self.vertex(id).root);
                absolute_leq(&self.rs, &t, w)
            })
            .collect()
    }
}

/// `Δ^m(Φ)` with its vertex table and compatibility graph.
#[derive(Debug, Clone)]
pub struct ClusterComplex {
    pub roots: ColoredRoots,
    pub graph: CompatibilityGraph,
    pub complex: SimplicialComplex,
}

/// Builds `Δ^m(Φ)`: maximal cliques of the pairwise graph, each checked
/// against the `w_σ` criterion. A clique that fails it is reported as a
/// violation of flagness.
pub fn build_complex(rs: &RootSystem, m: usize) -> Result<ClusterComplex> {
    let roots = ColoredRoots::new(rs, m)?;
    let graph = roots.compatibility_graph();
    let facets = graph.maximal_cliques(&graph.all_vertices());
    for f in &facets {
        if !roots.is_face(f) {
            let labels: Vec<String> = f.iter().map(|&v| roots.label(v)).collect();
            return Err(Error::TheoremViolation(format!(
                "clique {{{}}} is not a face",
                labels.join(", ")
            )));
        }
    }
    Ok(ClusterComplex {
        complex: SimplicialComplex::new(facets),
        roots,
        graph,
    })
}

impl ClusterComplex {
    /// `Δ^m_+(Φ)`: induced on the positive colored roots.
    pub fn positive_part(&self) -> SimplicialComplex {
        let pos: Vec<usize> = self.roots.positive_ids().collect();
        self.complex.induced(&pos)
    }

    /// `Δ^m_+(w)`: faces `σ` on `Φ^m_+(w)` with `ℓ_T(w_σ) = |σ|` and
    /// `w_σ ≼ w`. Requires `w ≼ γ`.
    pub fn subcomplex_below(&self, w: &GroupElement) -> Result<SimplicialComplex> {
        subcomplex_below(&self.roots, w)
    }

    /// The complex as JSON, with vertices listed by label and facets as
    /// indices into that list.
    pub fn to_json(&self, cx: &SimplicialComplex) -> ComplexJson {
        complex_json(&self.roots, cx)
    }
}

/// `Δ^m_+(w)`, enumerated face by face; it is not assumed to be flag.
pub fn subcomplex_below(roots: &ColoredRoots, w: &GroupElement) -> Result<SimplicialComplex> {
    let rs = roots.root_system();
    if !absolute_leq(rs, w, roots.gamma()) {
        return Err(Error::NotBelowCoxeter);
    }
    let verts = roots.vertices_below(w);
    let mut facets: Vec<Face> = Vec::new();
    let mut frontier: Vec<Face> = vec![Vec::new()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            let last = f.last().copied();
            let mut extended = false;
            for &v in &verts {
                if f.contains(&v) {
                    continue;
                }
                let mut g = f.clone();
                g.push(v);
                g.sort_unstable();
                if roots.is_face_below(&g, w) {
                    extended = true;
                    if last.is_none_or(|l| v > l) {
                        next.push(g);
                    }
                }
            }
            if !extended {
                facets.push(f.clone());
            }
        }
        frontier = next;
    }
    Ok(SimplicialComplex::new(facets))
}

/// One of the standard restrictions of a complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Restriction {
    Link(usize),
    Delete(usize),
    Induce(Vec<usize>),
    Skeleton(isize),
}

pub fn restrict(cx: &SimplicialComplex, how: &Restriction) -> Result<SimplicialComplex> {
    let verts = cx.vertices();
    let check = |v: usize| {
        if verts.binary_search(&v).is_ok() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v.to_string()))
        }
    };
    match how {
        Restriction::Link(v) => {
            check(*v)?;
            cx.link(&[*v])
        }
        Restriction::Delete(v) => {
            check(*v)?;
            Ok(cx.deletion(*v))
        }
        Restriction::Induce(a) => {
            for &v in a {
                check(v)?;
            }
            Ok(cx.induced(a))
        }
        Restriction::Skeleton(k) => {
            if *k > cx.dim() {
                return Err(Error::Invalid(format!("skeleton {k} exceeds dimension {}", cx.dim())));
            }
            Ok(cx.skeleton(*k))
        }
    }
}

/// The f-vector, and the h-vector when the complex is pure.
pub fn f_h_vectors(cx: &SimplicialComplex) -> (Vec<u64>, Option<Vec<BigInt>>) {
    let f = cx.f_vector();
    let h = cx.is_pure().then(|| crate::complex::h_from_f(&f));
    (f, h)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexJson {
    pub phi: String,
    pub m: usize,
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<usize>>,
    pub f_vector: Vec<u64>,
}

pub fn complex_json(roots: &ColoredRoots, cx: &SimplicialComplex) -> ComplexJson {
    let verts = cx.vertices();
    let pos = |v: usize| verts.binary_search(&v).expect("vertex of the complex");
    let mut facets: Vec<Vec<usize>> = cx
        .facets()
        .iter()
        .map(|f| f.iter().map(|&v| pos(v)).collect())
        .collect();
    facets.sort();
    ComplexJson {
        phi: roots.root_system().label().to_string(),
        m: roots.m(),
        vertices: verts.iter().map(|&v| roots.label(v)).collect(),
        facets,
        f_vector: cx.f_vector(),
    }
}

/// `k,f_{k-1},h_k` rows; `h` is left empty for impure complexes.
pub fn f_h_csv(cx: &SimplicialComplex) -> String {
    let (f, h) = f_h_vectors(cx);
    let mut out = String::from("k,f,h\n");
    for (k, fk) in f.iter().enumerate() {
        let hk = h
            .as_ref()
            .and_then(|h| h.get(k))
            .map(ToString::to_string)
            .unwrap_or_default();
        let _ = writeln!(out, "{},{fk},{hk}", k as isize - 1);
    }
    out
}

/// Bitset of the given vertex ids.
pub fn vertex_set(n: usize, ids: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    for i in ids {
        s.insert(i);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2(m: usize) -> ClusterComplex {
        build_complex(&RootSystem::build("A", 2, None).unwrap(), m).unwrap()
    }

    fn labels(cc: &ClusterComplex, f: &[usize]) -> Vec<String> {
        f.iter().map(|&v| cc.roots.label(v)).collect()
    }

    #[test]
    fn tau_and_deformed_coxeter_in_a2() {
        let cc = a2(1);
        let r = &cc.roots;
        let rs = r.root_system();
        let a1 = rs.simple_root(0);
        let a2 = rs.simple_root(1);
        assert_eq!(r.tau(true, rs.negate(a2)), rs.negate(a2));
        assert_eq!(r.tau(true, a1), rs.negate(a1));
        // τ+ sends −α1 to α1, then τ− sends α1 to α1 + α2
        assert_eq!(r.deformed_coxeter(rs.negate(a1)), 2);
        assert_eq!(r.deformed_coxeter(rs.negate(a2)), a2);
        for x in (0..rs.num_roots()).filter(|&x| rs.is_positive(x) || rs.negative_simple_index(x).is_some()) {
            assert_eq!(r.tau(true, r.tau(true, x)), x);
            assert_eq!(r.tau(false, r.tau(false, x)), x);
        }
    }

    #[test]
    fn a2_facets_m1() {
        let cc = a2(1);
        let mut got: Vec<Vec<String>> = cc
            .complex
            .facets()
            .iter()
            .map(|f| {
                let mut l = labels(&cc, f);
                l.sort();
                l
            })
            .collect();
        got.sort();
        let mut want: Vec<Vec<String>> = [
            ["[1,1]:1", "[0,1]:1"],
            ["[1,0]:1", "[1,1]:1"],
            ["-s2", "[1,0]:1"],
            ["-s1", "-s2"],
            ["[0,1]:1", "-s1"],
        ]
        .iter()
        .map(|p| {
            let mut v: Vec<String> = p.iter().map(|s| s.to_string()).collect();
            v.sort();
            v
        })
        .collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn a2_m2_counts_and_example_face() {
        let cc = a2(2);
        assert_eq!(cc.complex.f_vector(), vec![1, 8, 12]);
        let r = &cc.roots;
        let a = r.id_of_label("[0,1]:1").unwrap();
        let b = r.id_of_label("[1,0]:2").unwrap();
        assert!(r.is_face(&[a, b]));
        assert_eq!(r.word_of_face(&[a, b]), *r.gamma());
        assert_eq!(r.fr_compatible(a, b), Ok(true));
        assert!(r.fr_compatible(a, a).is_err());
        let n1 = r.id_of_label("-s1").unwrap();
        let p1 = r.id_of_label("[1,0]:1").unwrap();
        assert!(!r.is_face(&[n1, p1]));
        assert!(r.word_of_face(&[]).is_identity());
        let pos = cc.positive_part();
        assert_eq!(pos.vertices().len(), 6);
        assert_eq!(pos.facets().len(), 7);
    }

    #[test]
    fn a1_is_a_set_of_points() {
        let cc = build_complex(&RootSystem::build("A", 1, None).unwrap(), 3).unwrap();
        assert_eq!(cc.complex.facets().len(), 4);
        assert_eq!(cc.complex.dim(), 0);
    }

    #[test]
    fn m_zero_is_the_simplex_on_negative_simples() {
        let cc = build_complex(&RootSystem::build("A", 3, None).unwrap(), 0).unwrap();
        assert_eq!(cc.complex.facets(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn vectors_and_csv() {
        let cc = a2(2);
        let (f, h) = f_h_vectors(&cc.complex);
        assert_eq!(f, vec![1, 8, 12]);
        let h: Vec<i64> = h.unwrap().iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(h, vec![1, 6, 5]);
        assert!(f_h_csv(&cc.complex).starts_with("k,f,h\n-1,1,1\n"));
        let mixed = SimplicialComplex::new(vec![vec![0, 1], vec![2]]);
        assert!(f_h_vectors(&mixed).1.is_none());
    }

    #[test]
    fn restrictions() {
        let cc = a2(2);
        let lk = restrict(&cc.complex, &Restriction::Link(0)).unwrap();
        let names: Vec<String> = lk.vertices().iter().map(|&v| cc.roots.label(v)).collect();
        assert_eq!(names, vec!["-s2", "[0,1]:1", "[0,1]:2"]);
        assert!(restrict(&cc.complex, &Restriction::Link(99)).is_err());
        let del = restrict(&cc.complex, &Restriction::Delete(3)).unwrap();
        let rest: Vec<usize> = (0..8).filter(|&v| v != 3).collect();
        assert_eq!(del, restrict(&cc.complex, &Restriction::Induce(rest)).unwrap());
        let sk = restrict(&cc.complex, &Restriction::Skeleton(0)).unwrap();
        assert_eq!(sk.facets().len(), 8);
        assert!(restrict(&cc.complex, &Restriction::Skeleton(2)).is_err());
    }

    #[test]
    fn json_shape() {
        let cc = a2(2);
        let j = serde_json::to_value(cc.to_json(&cc.complex)).unwrap();
        assert_eq!(j["phi"], "A2");
        assert_eq!(j["m"], 2);
        assert_eq!(j["vertices"].as_array().unwrap().len(), 8);
        assert_eq!(j["f_vector"], serde_json::json!([1, 8, 12]));
    }

    #[test]
    fn subcomplex_below_gamma_and_a_reflection() {
        let cc = a2(2);
        let g = cc.roots.gamma().clone();
        assert_eq!(cc.subcomplex_below(&g).unwrap(), cc.positive_part());
        let t = GroupElement::reflection(cc.roots.root_system(), 2);
        let below = cc.subcomplex_below(&t).unwrap();
        assert_eq!(below.f_vector(), vec![1, 2]);
        let c1 = build_complex(&RootSystem::build("A", 2, None).unwrap(), 1).unwrap();
        assert_eq!(c1.subcomplex_below(&t).unwrap().f_vector(), vec![1, 1]);
        let e = GroupElement::identity(cc.roots.root_system());
        assert_eq!(cc.subcomplex_below(&e).unwrap(), SimplicialComplex::empty());
    }
}
