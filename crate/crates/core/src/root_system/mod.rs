//! Finite root systems: simple and positive roots, the bipartition of the
//! simple roots, parabolic subsystems, products and numerology.
//!
//! Roots are stored by index. For a system with `N` positive roots,
//! indices `0..N` are the positive roots and `N + i` is the negative of
//! positive root `i`. Every reflection is cached as a permutation of these
//! indices, which is all the group-theoretic code downstream needs.

mod cartan;
mod numerology;

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

pub use cartan::CartanType;
pub use numerology::Numerology;

use crate::error::{Error, Result};
use crate::exact_algebra::{dot, reflect, Matrix, QSqrt5};

/// Bitmask over simple-root indices.
pub type Support = u32;

/// A root of the system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    coords: Option<Vec<QSqrt5>>,
    expansion: Option<Vec<QSqrt5>>,
    support: Support,
    component: usize,
}

impl Root {
    /// Ambient coordinates, absent for the combinatorial dihedral model.
    pub fn coords(&self) -> Option<&[QSqrt5]> {
        self.coords.as_deref()
    }

    /// Coefficients over the simple roots, absent for the dihedral model.
    pub fn expansion(&self) -> Option<&[QSqrt5]> {
        self.expansion.as_deref()
    }

    pub fn support_mask(&self) -> Support {
        self.support
    }

    pub fn component(&self) -> usize {
        self.component
    }
}

/// How group elements of one irreducible component are measured.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentModel {
    /// Elements act linearly on the span of the component; the matrix in
    /// the simple-root basis is read off from simple-root expansions.
    Linear,
    /// `I2(m)` as `2m` unit vectors at angles `jπ/m`; `by_angle[j]` is the
    /// root index at angle `jπ/m`.
    Dihedral { m: usize, by_angle: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub cartan: CartanType,
    /// Simple-root indices, increasing.
    pub simple: Vec<usize>,
    /// Positive root indices belonging to the component, increasing.
    pub positive: Vec<usize>,
    pub model: ComponentModel,
}

/// A finite root system with a fixed positive system and bipartition.
#[derive(Debug, Clone)]
pub struct RootSystem {
    label: String,
    rank: usize,
    num_positive: usize,
    roots: Vec<Root>,
    simple: Vec<usize>,
    reflections: Vec<Vec<u16>>,
    components: Vec<Component>,
    plus: Vec<bool>,
    index_by_coords: HashMap<Vec<QSqrt5>, usize>,
}

impl RootSystem {
    /// Builds the irreducible system of the given type, e.g. `("A", 3, None)`
    /// or `("I", 2, Some(5))`.
    pub fn build(letter: &str, rank: usize, dihedral_order: Option<usize>) -> Result<Self> {
        Self::from_type(CartanType::new(letter, rank, dihedral_order)?)
    }

    /// Builds from a label such as `B3`, `I2(5)` or `A1xA2`.
    pub fn from_label(label: &str) -> Result<Self> {
        let types = CartanType::parse(label)?;
        if types.len() == 1 {
            return Self::from_type(types[0]);
        }
        let parts = types
            .into_iter()
            .map(Self::from_type)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::product(&parts))
    }

    pub fn from_type(t: CartanType) -> Result<Self> {
        match t.simple_root_coordinates() {
            Some(simple) => Self::from_simple_coordinates(t, simple),
            None => match t {
                CartanType::I2(m) => Ok(Self::dihedral(m)),
                _ => unreachable!("only dihedral types lack coordinates"),
            },
        }
    }

    fn from_simple_coordinates(t: CartanType, simple: Vec<Vec<QSqrt5>>) -> Result<Self> {
        let n = simple.len();
        let gram = Matrix::from_fn(n, n, |i, j| dot(&simple[i], &simple[j]));

        // Closure under the simple reflections.
        let mut seen: HashMap<Vec<QSqrt5>, ()> = HashMap::new();
        let mut all = Vec::new();
        let mut queue: VecDeque<Vec<QSqrt5>> = simple.iter().cloned().collect();
        while let Some(v) = queue.pop_front() {
            if seen.contains_key(&v) {
                continue;
            }
            for a in &simple {
                let w = reflect(a, &v)?;
                if !seen.contains_key(&w) {
                    queue.push_back(w);
                }
            }
            seen.insert(v.clone(), ());
            all.push(v);
        }

        let mut positive: Vec<(Vec<QSqrt5>, Vec<QSqrt5>)> = Vec::new();
        for v in all {
            let rhs: Vec<QSqrt5> = simple.iter().map(|a| dot(a, &v)).collect();
            let c = gram.solve(&rhs)?;
            let zero = QSqrt5::from_integer(0);
            if c.iter().all(|x| *x >= zero) {
                positive.push((v, c));
            } else if !c.iter().all(|x| *x <= zero) {
                return Err(Error::Internal(
                    "root with mixed-sign simple expansion".into(),
                ));
            }
        }
        // Simple roots first, then by height and expansion.
        positive.sort_by(|(_, a), (_, b)| {
            let ha: QSqrt5 = a.iter().cloned().sum();
            let hb: QSqrt5 = b.iter().cloned().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let mut ordered: Vec<(Vec<QSqrt5>, Vec<QSqrt5>)> = Vec::new();
        for s in &simple {
            let k = positive
                .iter()
                .position(|(v, _)| v == s)
                .ok_or_else(|| Error::Internal("simple root not positive".into()))?;
            ordered.push(positive.remove(k));
        }
        ordered.extend(positive);

        let np = ordered.len();
        let mut roots = Vec::with_capacity(2 * np);
        for (v, c) in &ordered {
            roots.push(Root {
                support: support_of(c),
                coords: Some(v.clone()),
                expansion: Some(c.clone()),
                component: 0,
            });
        }
        for (v, c) in &ordered {
            roots.push(Root {
                support: support_of(c),
                coords: Some(v.iter().map(|x| -x.clone()).collect()),
                expansion: Some(c.iter().map(|x| -x.clone()).collect()),
                component: 0,
            });
        }
        let index_by_coords: HashMap<Vec<QSqrt5>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coords.clone().expect("coords"), i))
            .collect();
        let mut reflections = Vec::with_capacity(np);
        for p in 0..np {
            let a = roots[p].coords.as_ref().expect("coords");
            let mut perm = Vec::with_capacity(2 * np);
            for r in &roots {
                let img = reflect(a, r.coords.as_ref().expect("coords"))?;
                let k = index_by_coords
                    .get(&img)
                    .ok_or_else(|| Error::Internal("root set not closed under reflection".into()))?;
                perm.push(*k as u16);
            }
            reflections.push(perm);
        }

        let mut rs = RootSystem {
            label: t.to_string(),
            rank: n,
            num_positive: np,
            roots,
            simple: (0..n).collect(),
            reflections,
            components: Vec::new(),
            plus: vec![false; n],
            index_by_coords,
        };
        // Only I2(2) splits: it is A1 x A1.
        rs.assign_components(|s| if s.len() == n { t } else { CartanType::A(1) }, None);
        Ok(rs)
    }

    fn dihedral(m: usize) -> Self {
        let n2 = 2 * m;
        let roots = (0..n2)
            .map(|j| {
                let k = j % m;
                let support = if k == 0 {
                    0b01
                } else if k == m - 1 {
                    0b10
                } else {
                    0b11
                };
                Root {
                    coords: None,
                    expansion: None,
                    support,
                    component: 0,
                }
            })
            .collect();
        let reflections = (0..m)
            .map(|k| (0..n2).map(|j| ((2 * k + m + n2 - j) % n2) as u16).collect())
            .collect();
        RootSystem {
            label: CartanType::I2(m).to_string(),
            rank: 2,
            num_positive: m,
            roots,
            simple: vec![0, m - 1],
            reflections,
            components: vec![Component {
                cartan: CartanType::I2(m),
                simple: vec![0, 1],
                positive: (0..m).collect(),
                model: ComponentModel::Dihedral {
                    m,
                    by_angle: (0..n2).collect(),
                },
            }],
            plus: vec![true, false],
            index_by_coords: HashMap::new(),
        }
    }

    /// Splits the simple roots into connected components of the Coxeter
    /// diagram and 2-colors each with its lowest simple root in Π+.
    /// `inherit` keeps an existing coloring instead.
    fn assign_components(
        &mut self,
        mut cartan_of: impl FnMut(&[usize]) -> CartanType,
        inherit: Option<&[bool]>,
    ) {
        let n = self.rank;
        let mut comp_of = vec![usize::MAX; n];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut color = vec![false; n];
        for start in 0..n {
            if comp_of[start] != usize::MAX {
                continue;
            }
            let c = comps.len();
            let mut members = vec![];
            let mut queue = VecDeque::from([start]);
            comp_of[start] = c;
            color[start] = true;
            while let Some(i) = queue.pop_front() {
                members.push(i);
                for j in 0..n {
                    if comp_of[j] == usize::MAX && self.simple_adjacent(i, j) {
                        comp_of[j] = c;
                        color[j] = !color[i];
                        queue.push_back(j);
                    }
                }
            }
            members.sort_unstable();
            comps.push(members);
        }
        self.plus = inherit.map(<[bool]>::to_vec).unwrap_or(color);
        for r in &mut self.roots {
            let first = r.support.trailing_zeros() as usize;
            r.component = comp_of[first];
        }
        let old_models: Vec<ComponentModel> =
            self.components.iter().map(|c| c.model.clone()).collect();
        self.components = comps
            .iter()
            .enumerate()
            .map(|(c, simple)| Component {
                cartan: cartan_of(simple),
                simple: simple.clone(),
                positive: (0..self.num_positive)
                    .filter(|&p| self.roots[p].component == c)
                    .collect(),
                model: old_models.get(c).cloned().unwrap_or(ComponentModel::Linear),
            })
            .collect();
    }

    /// Whether simple roots `i`, `j` are joined in the Coxeter diagram.
    fn simple_adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.reflections[self.simple[i]][self.simple[j]] as usize != self.simple[j]
    }

    /// Direct product; simple roots of later factors are numbered after
    /// those of earlier ones.
    pub fn product(parts: &[RootSystem]) -> Self {
        let rank: usize = parts.iter().map(|p| p.rank).sum();
        let np: usize = parts.iter().map(|p| p.num_positive).sum();
        let total = 2 * np;
        let dims: Option<Vec<usize>> = parts
            .iter()
            .map(|p| p.roots.first().and_then(|r| r.coords.as_ref()).map(Vec::len))
            .collect();
        let all_dim: Option<usize> = dims.as_ref().map(|d| d.iter().sum());

        let mut roots: Vec<Root> = vec![
            Root {
                coords: None,
                expansion: None,
                support: 0,
                component: 0
            };
            total
        ];
        let mut simple = Vec::new();
        let mut reflections = Vec::new();
        let mut components = Vec::new();
        let mut plus = Vec::new();
        let (mut pos_off, mut simple_off, mut dim_off, mut comp_off) = (0, 0, 0, 0);
        for (k, part) in parts.iter().enumerate() {
            let pn = part.num_positive;
            let map = |i: usize| {
                if i < pn {
                    pos_off + i
                } else {
                    np + pos_off + (i - pn)
                }
            };
            for (i, r) in part.roots.iter().enumerate() {
                let coords = match (all_dim, &r.coords) {
                    (Some(d), Some(c)) => {
                        let mut v = vec![QSqrt5::from_integer(0); d];
                        v[dim_off..dim_off + c.len()].clone_from_slice(c);
                        Some(v)
                    }
                    _ => None,
                };
                let expansion = r.expansion.as_ref().map(|c| {
                    let mut v = vec![QSqrt5::from_integer(0); rank];
                    v[simple_off..simple_off + c.len()].clone_from_slice(c);
                    v
                });
                roots[map(i)] = Root {
                    coords,
                    expansion,
                    support: r.support << simple_off,
                    component: r.component + comp_off,
                };
            }
            simple.extend(part.simple.iter().map(|&s| map(s)));
            plus.extend_from_slice(&part.plus);
            for c in &part.components {
                components.push(Component {
                    cartan: c.cartan,
                    simple: c.simple.iter().map(|s| s + simple_off).collect(),
                    positive: c.positive.iter().map(|&p| map(p)).collect(),
                    model: match &c.model {
                        ComponentModel::Linear => ComponentModel::Linear,
                        ComponentModel::Dihedral { m, by_angle } => ComponentModel::Dihedral {
                            m: *m,
                            by_angle: by_angle.iter().map(|&i| map(i)).collect(),
                        },
                    },
                });
            }
            pos_off += pn;
            simple_off += part.rank;
            comp_off += part.components.len();
            if let Some(d) = &dims {
                dim_off += d[k];
            }
        }
        let mut pos_off = 0;
        for part in parts {
            let pn = part.num_positive;
            let map = |i: usize| {
                if i < pn {
                    pos_off + i
                } else {
                    np + pos_off + (i - pn)
                }
            };
            for perm in &part.reflections {
                let mut full: Vec<u16> = (0..total as u16).collect();
                for (i, &img) in perm.iter().enumerate() {
                    full[map(i)] = map(img as usize) as u16;
                }
                reflections.push(full);
            }
            pos_off += pn;
        }
        let index_by_coords = roots
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.coords.clone().map(|c| (c, i)))
            .collect();
        let label = parts
            .iter()
            .map(|p| p.label.clone())
            .collect::<Vec<_>>()
            .join("x");
        RootSystem {
            label,
            rank,
            num_positive: np,
            roots,
            simple,
            reflections,
            components,
            plus,
            index_by_coords,
        }
    }

    /// Standard parabolic subsystem on the simple roots listed in `keep`,
    /// with the induced positive system and the inherited bipartition.
    pub fn parabolic_on(&self, keep: &[usize]) -> Result<Self> {
        let mut keep: Vec<usize> = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&i| i >= self.rank) {
            return Err(Error::NotSimple {
                index: bad,
                rank: self.rank,
            });
        }
        let mask: Support = keep.iter().map(|&i| 1 << i).sum();
        let pos: Vec<usize> = (0..self.num_positive)
            .filter(|&p| self.roots[p].support & !mask == 0)
            .collect();
        let np = pos.len();
        let mut old_to_new: HashMap<usize, usize> = HashMap::new();
        for (k, &p) in pos.iter().enumerate() {
            old_to_new.insert(p, k);
            old_to_new.insert(self.negate(p), np + k);
        }
        let remap_support = |s: Support| -> Support {
            keep.iter()
                .enumerate()
                .filter(|(_, &i)| s & (1 << i) != 0)
                .map(|(k, _)| 1 << k)
                .sum()
        };
        let sub_roots: Vec<usize> = pos
            .iter()
            .copied()
            .chain(pos.iter().map(|&p| self.negate(p)))
            .collect();
        let roots: Vec<Root> = sub_roots
            .iter()
            .map(|&i| {
                let r = &self.roots[i];
                Root {
                    coords: r.coords.clone(),
                    expansion: r
                        .expansion
                        .as_ref()
                        .map(|e| keep.iter().map(|&k| e[k].clone()).collect()),
                    support: remap_support(r.support),
                    component: 0,
                }
            })
            .collect();
        let reflections = pos
            .iter()
            .map(|&p| {
                sub_roots
                    .iter()
                    .map(|&i| old_to_new[&(self.reflections[p][i] as usize)] as u16)
                    .collect()
            })
            .collect();
        let simple: Vec<usize> = keep.iter().map(|&i| old_to_new[&self.simple[i]]).collect();
        let plus: Vec<bool> = keep.iter().map(|&i| self.plus[i]).collect();
        let index_by_coords = roots
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.coords.clone().map(|c| (c, i)))
            .collect();
        let mut sub = RootSystem {
            label: String::new(),
            rank: keep.len(),
            num_positive: np,
            roots,
            simple,
            reflections,
            components: Vec::new(),
            plus,
            index_by_coords,
        };
        // Dihedral components survive only when both simple roots are kept;
        // rank-one pieces get the trivial expansion ±1.
        let mut dihedral: Vec<(Vec<usize>, ComponentModel)> = Vec::new();
        for c in &self.components {
            if let ComponentModel::Dihedral { m, by_angle } = &c.model {
                if c.simple.iter().all(|s| keep.contains(s)) {
                    let by_angle = by_angle.iter().map(|i| old_to_new[i]).collect();
                    let simple = c
                        .simple
                        .iter()
                        .map(|s| keep.iter().position(|k| k == s).expect("kept"))
                        .collect();
                    dihedral.push((simple, ComponentModel::Dihedral { m: *m, by_angle }));
                }
            }
        }
        for (i, r) in sub.roots.iter_mut().enumerate() {
            if r.expansion.is_none() && r.support.count_ones() == 1 {
                let mut e = vec![QSqrt5::from_integer(0); keep.len()];
                e[r.support.trailing_zeros() as usize] =
                    QSqrt5::from_integer(if i < np { 1 } else { -1 });
                r.expansion = Some(e);
            }
        }
        let inherited = sub.plus.clone();
        sub.assign_components(|_| CartanType::A(1), Some(&inherited));
        for comp in &mut sub.components {
            if let Some((_, model)) = dihedral.iter().find(|(s, _)| *s == comp.simple) {
                comp.model = model.clone();
            }
        }
        let cartans: Vec<CartanType> = (0..sub.components.len())
            .map(|c| sub.classify_component(c))
            .collect();
        for (comp, t) in sub.components.iter_mut().zip(cartans) {
            comp.cartan = t;
        }
        sub.label = if sub.components.is_empty() {
            "empty".into()
        } else {
            sub.components
                .iter()
                .map(|c| c.cartan.to_string())
                .collect::<Vec<_>>()
                .join("x")
        };
        Ok(sub)
    }

    /// Parent index of every root of `parabolic_on(keep)`, positive roots
    /// first, matching the subsystem's indexing.
    pub fn parabolic_embedding(&self, keep: &[usize]) -> Vec<usize> {
        let mask: Support = keep.iter().map(|&i| 1 << i).sum();
        let pos: Vec<usize> = (0..self.num_positive)
            .filter(|&p| self.roots[p].support & !mask == 0)
            .collect();
        let neg: Vec<usize> = pos.iter().map(|&p| self.negate(p)).collect();
        pos.into_iter().chain(neg).collect()
    }

    /// `Φ_α`: the parabolic subsystem with simple root `removed` deleted.
    pub fn parabolic(&self, removed: usize) -> Result<Self> {
        if removed >= self.rank {
            return Err(Error::NotSimple {
                index: removed,
                rank: self.rank,
            });
        }
        let keep: Vec<usize> = (0..self.rank).filter(|&i| i != removed).collect();
        self.parabolic_on(&keep)
    }

    /// Identifies the Cartan type of a component from its Coxeter diagram.
    fn classify_component(&self, c: usize) -> CartanType {
        let comp = &self.components[c];
        let n = comp.simple.len();
        if let ComponentModel::Dihedral { m, .. } = comp.model {
            return match m {
                3 => CartanType::A(2),
                4 => CartanType::B(2),
                6 => CartanType::G2,
                m => CartanType::I2(m),
            };
        }
        if n == 1 {
            return CartanType::A(1);
        }
        let np = comp.positive.len();
        let mut labels = Vec::new();
        let mut degree = vec![0usize; n];
        for a in 0..n {
            for b in a + 1..n {
                let mij = self.coxeter_label(comp.simple[a], comp.simple[b]);
                if mij > 2 {
                    labels.push(mij);
                    degree[a] += 1;
                    degree[b] += 1;
                }
            }
        }
        let max = labels.iter().copied().max().unwrap_or(3);
        let branched = degree.iter().any(|&d| d >= 3);
        match (n, max, branched) {
            (2, 3, _) => CartanType::A(2),
            (2, 4, _) => CartanType::B(2),
            (2, 6, _) => CartanType::G2,
            (2, m, _) => CartanType::I2(m),
            (_, 5, _) => CartanType::H(n),
            (4, 4, _) if np == 24 => CartanType::F4,
            (_, 4, _) => {
                // B_n has one short simple root, C_n one long one.
                let norms: Vec<QSqrt5> = comp
                    .simple
                    .iter()
                    .filter_map(|&s| self.roots[self.simple[s]].coords.as_ref())
                    .map(|v| dot(v, v))
                    .collect();
                let max_norm = norms.iter().max().cloned();
                let long = norms.iter().filter(|x| Some(*x) == max_norm.as_ref()).count();
                if long == 1 && n > 2 {
                    CartanType::C(n)
                } else {
                    CartanType::B(n)
                }
            }
            (_, _, true) if np == n * (n - 1) => CartanType::D(n),
            (_, _, true) => CartanType::E(n),
            _ => CartanType::A(n),
        }
    }

    /// Order of `R(α_i) R(α_j)`.
    fn coxeter_label(&self, i: usize, j: usize) -> usize {
        let (a, b) = (&self.reflections[self.simple[i]], &self.reflections[self.simple[j]]);
        let prod: Vec<u16> = (0..a.len()).map(|x| a[b[x] as usize]).collect();
        let mut cur = prod.clone();
        let mut k = 1;
        while cur.iter().enumerate().any(|(x, &y)| x != y as usize) {
            cur = cur.iter().map(|&y| prod[y as usize]).collect();
            k += 1;
        }
        k
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_positive(&self) -> usize {
        self.num_positive
    }

    pub fn num_roots(&self) -> usize {
        2 * self.num_positive
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    /// Root index of the simple root `α_{i+1}` (0-based `i`).
    pub fn simple_root(&self, i: usize) -> usize {
        self.simple[i]
    }

    pub fn simple_roots(&self) -> &[usize] {
        &self.simple
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.num_positive
    }

    pub fn negate(&self, i: usize) -> usize {
        if i < self.num_positive {
            i + self.num_positive
        } else {
            i - self.num_positive
        }
    }

    /// The simple index `k` with root `i` equal to `α_k`.
    pub fn simple_index(&self, i: usize) -> Option<usize> {
        self.simple.iter().position(|&s| s == i)
    }

    /// The simple index `k` with root `i` equal to `−α_k`.
    pub fn negative_simple_index(&self, i: usize) -> Option<usize> {
        if self.is_positive(i) {
            None
        } else {
            self.simple_index(self.negate(i))
        }
    }

    /// Whether simple root `α_k` lies in Π+.
    pub fn is_plus(&self, k: usize) -> bool {
        self.plus[k]
    }

    /// Permutation of root indices induced by the reflection `R(β)`.
    pub fn reflection(&self, i: usize) -> &[u16] {
        let p = if self.is_positive(i) { i } else { self.negate(i) };
        &self.reflections[p]
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    pub fn is_crystallographic(&self) -> bool {
        self.components.iter().all(|c| c.cartan.is_crystallographic())
    }

    pub fn index_of_coords(&self, v: &[QSqrt5]) -> Option<usize> {
        self.index_by_coords.get(v).copied()
    }

    /// Π+ and Π− as lists of simple indices, increasing.
    pub fn bipartition(&self) -> (Vec<usize>, Vec<usize>) {
        (0..self.rank).partition(|&k| self.plus[k])
    }

    /// `s = |Π+|`.
    pub fn split(&self) -> usize {
        self.plus.iter().filter(|&&p| p).count()
    }

    /// Simple roots with nonzero coefficient in the expansion of a positive
    /// root, as 0-based simple indices.
    pub fn support(&self, i: usize) -> Result<Vec<usize>> {
        if !self.is_positive(i) {
            return Err(Error::NotPositive(i));
        }
        let s = self.roots[i].support;
        Ok((0..self.rank).filter(|k| s & (1 << k) != 0).collect())
    }

    /// Canonical text label of a root: its simple expansion, or `d<j>` for
    /// the dihedral model (angle index).
    pub fn root_label(&self, i: usize) -> String {
        match &self.roots[i].expansion {
            Some(e) => format!(
                "[{}]",
                e.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
            ),
            None => {
                let c = &self.components[self.roots[i].component];
                match &c.model {
                    ComponentModel::Dihedral { by_angle, .. } => {
                        let j = by_angle.iter().position(|&x| x == i).unwrap_or(i);
                        format!("d{j}")
                    }
                    ComponentModel::Linear => format!("r{i}"),
                }
            }
        }
    }

    /// Height of a root: sum of simple-expansion coefficients.
    pub fn height(&self, i: usize) -> Option<QSqrt5> {
        self.roots[i].expansion.as_ref().map(|e| e.iter().cloned().sum())
    }

    pub fn to_json(&self) -> RootSystemJson {
        let enc = |i: usize| -> Option<Vec<[String; 4]>> {
            self.roots[i]
                .coords
                .as_ref()
                .map(|c| c.iter().map(QSqrt5::to_parts).collect())
        };
        let ty = if self.is_irreducible() {
            self.components[0].cartan.letter().to_string()
        } else {
            "product".to_string()
        };
        let dihedral_order = match self.components.as_slice() {
            [Component {
                cartan: CartanType::I2(m),
                ..
            }] => Some(*m),
            _ => None,
        };
        let (plus, minus) = self.bipartition();
        RootSystemJson {
            ty,
            label: self.label.clone(),
            rank: self.rank,
            dihedral_order,
            simple_roots: self.simple.iter().map(|&i| enc(i)).collect(),
            positive_roots: (0..self.num_positive).map(enc).collect(),
            positive_root_labels: (0..self.num_positive).map(|i| self.root_label(i)).collect(),
            split_s: plus.len(),
            pi_plus: plus.iter().map(|k| k + 1).collect(),
            pi_minus: minus.iter().map(|k| k + 1).collect(),
        }
    }
}

fn support_of(c: &[QSqrt5]) -> Support {
    c.iter()
        .enumerate()
        .filter(|(_, x)| **x != QSqrt5::from_integer(0))
        .map(|(k, _)| 1 << k)
        .sum()
}

/// Serialized form; scalars are `[a_num, a_den, b_num, b_den]` for
/// `a + b·√5`, and coordinates are `null` for the dihedral model.
#[derive(Debug, Clone, Serialize)]
pub struct RootSystemJson {
    #[serde(rename = "type")]
    pub ty: String,
    pub label: String,
    pub rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dihedral_order: Option<usize>,
    pub simple_roots: Vec<Option<Vec<[String; 4]>>>,
    pub positive_roots: Vec<Option<Vec<[String; 4]>>>,
    pub positive_root_labels: Vec<String>,
    pub split_s: usize,
    pub pi_plus: Vec<usize>,
    pub pi_minus: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_positive_roots() {
        let rs = RootSystem::build("A", 2, None).unwrap();
        assert_eq!(rs.num_positive(), 3);
        let labels: Vec<String> = (0..3).map(|i| rs.root_label(i)).collect();
        assert_eq!(labels, ["[1,0]", "[0,1]", "[1,1]"]);
    }

    #[test]
    fn bipartitions_follow_the_diagram() {
        let a2 = RootSystem::build("A", 2, None).unwrap();
        assert_eq!(a2.bipartition(), (vec![0], vec![1]));
        let a3 = RootSystem::build("A", 3, None).unwrap();
        assert_eq!(a3.bipartition(), (vec![0, 2], vec![1]));
        let a1 = RootSystem::build("A", 1, None).unwrap();
        assert_eq!(a1.bipartition(), (vec![0], vec![]));
    }

    #[test]
    fn b2_and_g2_counts() {
        let b2 = RootSystem::build("B", 2, None).unwrap();
        assert_eq!(b2.num_positive(), 4);
        let g2 = RootSystem::build("G", 2, None).unwrap();
        assert_eq!(g2.num_positive(), 6);
    }

    #[test]
    fn supports() {
        let a2 = RootSystem::build("A", 2, None).unwrap();
        assert_eq!(a2.support(2).unwrap(), vec![0, 1]);
        assert_eq!(a2.support(0).unwrap(), vec![0]);
        assert_eq!(a2.support(3), Err(Error::NotPositive(3)));
        let b2 = RootSystem::build("B", 2, None).unwrap();
        // highest root e1 + e2 = α1 + 2α2
        let top = b2
            .index_of_coords(&[QSqrt5::from_integer(1), QSqrt5::from_integer(1)])
            .unwrap();
        assert_eq!(b2.root_label(top), "[1,2]");
        assert_eq!(b2.support(top).unwrap(), vec![0, 1]);
    }

    #[test]
    fn parabolics() {
        let a3 = RootSystem::build("A", 3, None).unwrap();
        let p = a3.parabolic(1).unwrap();
        assert_eq!(p.num_positive(), 2);
        assert_eq!(p.components().len(), 2);
        assert_eq!(p.label(), "A1xA1");
        let a2 = RootSystem::build("A", 2, None).unwrap();
        let p = a2.parabolic(0).unwrap();
        assert_eq!(p.num_positive(), 1);
        assert_eq!(p.root_label(0), "[1]");
        let b3 = RootSystem::build("B", 3, None).unwrap();
        let p = b3.parabolic(0).unwrap();
        assert_eq!(p.num_positive(), 4);
        assert_eq!(p.label(), "B2");
        assert!(matches!(a2.parabolic(5), Err(Error::NotSimple { .. })));
    }

    #[test]
    fn dihedral_model() {
        let i5 = RootSystem::build("I", 2, Some(5)).unwrap();
        assert_eq!(i5.num_positive(), 5);
        assert_eq!(i5.support(2).unwrap(), vec![0, 1]);
        let a1 = i5.parabolic(1).unwrap();
        assert_eq!(a1.num_positive(), 1);
        assert_eq!(a1.label(), "A1");
        // the reflection in α1 maps α2 to a non-simple positive root
        let img = i5.reflection(0)[4] as usize;
        assert!(i5.is_positive(img) && img != 4);
    }

    #[test]
    fn products_number_simple_roots_consecutively() {
        let p = RootSystem::from_label("A1xA2").unwrap();
        assert_eq!(p.rank(), 3);
        assert_eq!(p.num_positive(), 4);
        assert_eq!(p.components().len(), 2);
        assert_eq!(p.components()[1].simple, vec![1, 2]);
        assert_eq!(p.support(p.simple_root(2)).unwrap(), vec![2]);
    }

    #[test]
    fn json_shape() {
        let a3 = RootSystem::build("A", 3, None).unwrap();
        let j = serde_json::to_value(a3.to_json()).unwrap();
        assert_eq!(j["type"], "A");
        assert_eq!(j["rank"], 3);
        assert_eq!(j["split_s"], 2);
        assert_eq!(j["simple_roots"][0][0], serde_json::json!(["1", "1", "0", "1"]));
    }
}
