use fixedbitset::FixedBitSet;

use crate::complex::Face;

/// A simple undirected graph on `0..n` as adjacency bitsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibilityGraph {
    adj: Vec<FixedBitSet>,
}

impl CompatibilityGraph {
    pub fn new(n: usize) -> Self {
        CompatibilityGraph {
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// Builds the graph from a pair predicate evaluated on `i < j`.
    pub fn from_predicate(n: usize, mut edge: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::new(n);
        for i in 0..n {
            for j in i + 1..n {
                if edge(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        self.adj[i].insert(j);
        self.adj[j].insert(i);
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(j)
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        self.adj[i].ones().collect()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.len()).map(|i| self.degree(i)).sum::<usize>() / 2
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.len()).all(|i| self.adj[i].ones().all(|j| self.adj[j].contains(i)))
    }

    /// Whether `{i, j}` is an edge exactly when `{f(i), f(j)}` is.
    pub fn is_equivariant(&self, f: impl Fn(usize) -> usize) -> bool {
        (0..self.len()).all(|i| {
            (i + 1..self.len()).all(|j| self.has_edge(i, j) == self.has_edge(f(i), f(j)))
        })
    }

    /// Maximal cliques among the vertices in `allowed`, each sorted, in
    /// lexicographic order. Bron–Kerbosch with Tomita pivoting.
    pub fn maximal_cliques(&self, allowed: &FixedBitSet) -> Vec<Face> {
        let mut out = Vec::new();
        let mut r = Vec::new();
        let x = FixedBitSet::with_capacity(self.len());
        self.bron_kerbosch(&mut r, allowed.clone(), x, &mut out);
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort();
        out
    }

    pub fn all_vertices(&self) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.len());
        s.insert_range(..);
        s
    }

    fn bron_kerbosch(
        &self,
        r: &mut Vec<usize>,
        mut p: FixedBitSet,
        mut x: FixedBitSet,
        out: &mut Vec<Face>,
    ) {
        if p.is_clear() {
            if x.is_clear() {
                out.push(r.clone());
            }
            return;
        }
        let pivot = p
            .ones()
            .chain(x.ones())
            .max_by_key(|&u| self.adj[u].intersection(&p).count())
            .expect("p is nonempty");
        let mut cand = p.clone();
        cand.difference_with(&self.adj[pivot]);
        for v in cand.ones() {
            let mut p2 = p.clone();
            p2.intersect_with(&self.adj[v]);
            let mut x2 = x.clone();
            x2.intersect_with(&self.adj[v]);
            r.push(v);
            self.bron_kerbosch(r, p2, x2, out);
            r.pop();
            p.remove(v);
            x.insert(v);
        }
    }
}
