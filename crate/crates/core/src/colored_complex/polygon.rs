//! Diagonal model of `Δ^m(A_{n-1})`: `m`-allowable diagonals of a convex
//! `(mn+2)`-gon, with faces the sets of pairwise noncrossing diagonals.

use super::CompatibilityGraph;
use crate::complex::SimplicialComplex;

/// `(i, j)` with `i < j`: a diagonal between polygon corners `i` and `j`.
pub type Diagonal = (usize, usize);

/// The `m`-allowable diagonals of a convex polygon with `corners` corners:
/// both sides have a number of corners congruent to 2 mod `m`.
pub fn allowable_diagonals(corners: usize, m: usize) -> Vec<Diagonal> {
    let mut out = Vec::new();
    for i in 0..corners {
        for j in i + 2..corners {
            if i == 0 && j == corners - 1 {
                continue;
            }
            let side = j - i + 1;
            let other = corners - (j - i) + 1;
            if m == 0 || (side % m == 2 % m && other % m == 2 % m) {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn crosses(a: Diagonal, b: Diagonal) -> bool {
    let (i, j) = a;
    let (k, l) = b;
    (i < k && k < j && j < l) || (k < i && i < l && l < j)
}

/// The complex of noncrossing `m`-allowable diagonals of the `(mn+2)`-gon,
/// with vertex `k` the `k`-th diagonal of [`allowable_diagonals`].
pub fn type_a_polygon_complex(n: usize, m: usize) -> (Vec<Diagonal>, SimplicialComplex) {
    let corners = m * n + 2;
    let diags = allowable_diagonals(corners, m);
    let g = CompatibilityGraph::from_predicate(diags.len(), |a, b| !crosses(diags[a], diags[b]));
    let facets = g.maximal_cliques(&g.all_vertices());
    (diags, SimplicialComplex::new(facets))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_has_two_crossing_diagonals() {
        let (d, cx) = type_a_polygon_complex(2, 1);
        assert_eq!(d.len(), 2);
        assert_eq!(cx.facets().len(), 2);
        assert_eq!(cx.dim(), 0);
    }

    #[test]
    fn pentagon_and_octagon() {
        let (d, cx) = type_a_polygon_complex(3, 1);
        assert_eq!(d.len(), 5);
        assert_eq!(cx.f_vector(), vec![1, 5, 5]);
        let (d, cx) = type_a_polygon_complex(3, 2);
        assert_eq!(d.len(), 8);
        assert_eq!(cx.f_vector(), vec![1, 8, 12]);
    }
}
