//! Smith normal form over the integers.
//!
//! The elimination works on sparse rows so that boundary matrices of
//! simplicial complexes with a few thousand faces stay cheap. Pivots are
//! chosen by smallest absolute value, so unit pivots are used whenever one
//! exists and fill-in stays small.

use std::cmp::Ordering;

use num_integer::Integer;
use num_traits::Signed;

use super::Matrix;

/// Integer-like ring the normal form is computed over.
pub trait IntegerRing: Integer + Signed + Clone + std::fmt::Debug {}
impl<T: Integer + Signed + Clone + std::fmt::Debug> IntegerRing for T {}

/// Invariant factors `d1 | d2 | …` (all positive) and the rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm<I> {
    pub factors: Vec<I>,
    pub rank: usize,
}

impl<I: IntegerRing> SmithForm<I> {
    /// Factors greater than one: the torsion coefficients of the cokernel.
    pub fn torsion(&self) -> Vec<I> {
        self.factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }
}

/// A sparse integer matrix given as rows of `(column, value)` pairs.
#[derive(Debug, Clone, Default)]
pub struct SparseRows<I> {
    pub cols: usize,
    pub rows: Vec<Vec<(usize, I)>>,
}

impl<I: IntegerRing> SparseRows<I> {
    pub fn new(cols: usize) -> Self {
        SparseRows {
            cols,
            rows: Vec::new(),
        }
    }

    /// Pushes a row; entries are sorted and zeros dropped.
    pub fn push_row(&mut self, mut entries: Vec<(usize, I)>) {
        entries.retain(|(_, v)| !v.is_zero());
        entries.sort_by_key(|(c, _)| *c);
        self.rows.push(entries);
    }
}

impl<I: IntegerRing> From<&Matrix<I>> for SparseRows<I> {
    fn from(m: &Matrix<I>) -> Self {
        let mut s = SparseRows::new(m.cols());
        for i in 0..m.rows() {
            s.push_row(
                m.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect(),
            );
        }
        s
    }
}

pub fn smith_normal_form<I: IntegerRing>(m: &Matrix<I>) -> SmithForm<I> {
    smith_normal_form_sparse(SparseRows::from(m))
}

pub fn smith_normal_form_sparse<I: IntegerRing>(m: SparseRows<I>) -> SmithForm<I> {
    let mut rows: Vec<Option<Vec<(usize, I)>>> = m
        .rows
        .into_iter()
        .map(|r| if r.is_empty() { None } else { Some(r) })
        .collect();
    let mut diag: Vec<I> = Vec::new();

    while let Some((mut pr, mut pc)) = choose_pivot(&rows) {
        loop {
            let pivot = entry(&rows[pr], pc).expect("pivot present");
            // Clear the pivot column using row operations.
            let mut column_rest: Option<(usize, I)> = None;
            for r in 0..rows.len() {
                if r == pr {
                    continue;
                }
                let Some(v) = entry(&rows[r], pc) else { continue };
                let q = v.div_floor(&pivot);
                let src = rows[pr].clone().expect("pivot row");
                let dst = rows[r].take().expect("row with entry");
                let new = axpy(&dst, &src, &q);
                if let Some(rem) = entry_in(&new, pc) {
                    if column_rest.as_ref().is_none_or(|(_, b)| rem.abs() < b.abs()) {
                        column_rest = Some((r, rem));
                    }
                }
                rows[r] = if new.is_empty() { None } else { Some(new) };
            }
            if let Some((r, _)) = column_rest {
                pr = r;
                continue;
            }
            // The column now holds only the pivot, so column operations
            // touch the pivot row alone: reduce its other entries mod pivot.
            let row = rows[pr].take().expect("pivot row");
            let mut reduced = Vec::with_capacity(row.len());
            let mut row_rest: Option<(usize, I)> = None;
            for (c, v) in row {
                if c == pc {
                    reduced.push((c, v));
                    continue;
                }
                let rem = v.mod_floor(&pivot);
                if !rem.is_zero() {
                    if row_rest.as_ref().is_none_or(|(_, b)| rem.abs() < b.abs()) {
                        row_rest = Some((c, rem.clone()));
                    }
                    reduced.push((c, rem));
                }
            }
            match row_rest {
                Some((c, _)) => {
                    rows[pr] = Some(reduced);
                    pc = c;
                }
                None => {
                    diag.push(pivot.abs());
                    break;
                }
            }
        }
    }

    let rank = diag.len();
    SmithForm {
        factors: normalize_divisibility(diag),
        rank,
    }
}

fn entry<I: IntegerRing>(row: &Option<Vec<(usize, I)>>, col: usize) -> Option<I> {
    row.as_ref().and_then(|r| entry_in(r, col))
}

fn entry_in<I: IntegerRing>(row: &[(usize, I)], col: usize) -> Option<I> {
    row.binary_search_by_key(&col, |(c, _)| *c)
        .ok()
        .map(|k| row[k].1.clone())
}

/// `dst − q·src` for sorted sparse rows.
fn axpy<I: IntegerRing>(dst: &[(usize, I)], src: &[(usize, I)], q: &I) -> Vec<(usize, I)> {
    let mut out = Vec::with_capacity(dst.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < dst.len() || j < src.len() {
        let order = match (dst.get(i), src.get(j)) {
            (Some(a), Some(b)) => a.0.cmp(&b.0),
            (Some(_), None) => Ordering::Less,
            (None, _) => Ordering::Greater,
        };
        match order {
            Ordering::Less => {
                out.push(dst[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                let v = -(q.clone() * src[j].1.clone());
                if !v.is_zero() {
                    out.push((src[j].0, v));
                }
                j += 1;
            }
            Ordering::Equal => {
                let v = dst[i].1.clone() - q.clone() * src[j].1.clone();
                if !v.is_zero() {
                    out.push((dst[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn choose_pivot<I: IntegerRing>(rows: &[Option<Vec<(usize, I)>>]) -> Option<(usize, usize)> {
    let mut best: Option<(I, usize, usize, usize)> = None;
    for (r, row) in rows.iter().enumerate() {
        let Some(row) = row else { continue };
        for (c, v) in row {
            let a = v.abs();
            let better = match &best {
                None => true,
                Some((b, len, _, _)) => a < *b || (a == *b && row.len() < *len),
            };
            if better {
                let unit = a.is_one();
                best = Some((a, row.len(), r, *c));
                if unit && row.len() == 1 {
                    return Some((r, *c));
                }
            }
        }
    }
    best.map(|(_, _, r, c)| (r, c))
}

/// Turns a diagonal into invariant factors via `(a, b) → (gcd, lcm)`.
fn normalize_divisibility<I: IntegerRing>(mut d: Vec<I>) -> Vec<I> {
    d.sort();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            if d[j].is_multiple_of(&d[i]) {
                continue;
            }
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}
