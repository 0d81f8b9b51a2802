//! Exact sparse Gaussian elimination: rank and nullspace over the complex rationals.

use crate::scalar::CxRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};

pub type SparseRow = BTreeMap<usize, CxRational>;

/// Incremental row echelon form; each stored row has a leading 1 at its pivot column.
#[derive(Default, Clone)]
pub struct Echelon {
    pivots: HashMap<usize, SparseRow>,
}

fn axpy(row: &mut SparseRow, factor: &CxRational, other: &SparseRow) {
    for (&c, v) in other {
        let delta = factor * v;
        let cur = row.remove(&c).unwrap_or_else(CxRational::zero);
        let next = cur - delta;
        if !next.is_zero() {
            row.insert(c, next);
        }
    }
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut cursor = 0;
        while let Some((&c, v)) = row.range(cursor..).next() {
            if let Some(p) = self.pivots.get(&c) {
                let f = v.clone();
                axpy(&mut row, &f, p);
            }
            cursor = c + 1;
        }
        row
    }

    /// Adds a row; returns true when it was linearly independent of the rows so far.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        let Some((&c, lead)) = row.iter().next() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero leading entry");
        let row: SparseRow = row.into_iter().map(|(k, v)| (k, &v * &inv)).collect();
        self.pivots.insert(c, row);
        true
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// Basis of `{x : A x = 0}` for the inserted rows `A` with `ncols` unknowns.
    pub fn nullspace(&self, ncols: usize) -> Vec<Vec<CxRational>> {
        let mut cols: Vec<usize> = self.pivots.keys().copied().collect();
        cols.sort_unstable_by(|a, b| b.cmp(a));
        let mut reduced: HashMap<usize, SparseRow> = HashMap::new();
        for &c in &cols {
            let mut row = self.pivots[&c].clone();
            let mut cursor = c + 1;
            while let Some((&k, v)) = row.range(cursor..).next() {
                if let Some(p) = reduced.get(&k) {
                    let f = v.clone();
                    axpy(&mut row, &f, p);
                }
                cursor = k + 1;
            }
            reduced.insert(c, row);
        }
        (0..ncols)
            .filter(|f| !reduced.contains_key(f))
            .map(|f| {
                let mut x = vec![CxRational::zero(); ncols];
                x[f] = CxRational::one();
                for (&c, row) in &reduced {
                    if let Some(v) = row.get(&f) {
                        x[c] = -v.clone();
                    }
                }
                x
            })
            .collect()
    }
}

pub fn to_sparse(dense: &[CxRational]) -> SparseRow {
    dense.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect()
}

/// Rank of a family of dense vectors.
pub fn rank(rows: Vec<Vec<CxRational>>) -> usize {
    rank_sparse(rows.iter().map(|r| to_sparse(r)))
}

pub fn rank_sparse(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Nullspace basis of the linear system whose equations are `rows`.
pub fn nullspace(rows: impl IntoIterator<Item = SparseRow>, ncols: usize) -> Vec<Vec<CxRational>> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.nullspace(ncols)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i128]) -> Vec<CxRational> {
        xs.iter().map(|&x| CxRational::from(x)).collect()
    }

    #[test]
    fn rank_of_dependent_family() {
        assert_eq!(rank(vec![v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 1, 1])]), 2);
        assert_eq!(rank(vec![v(&[0, 0, 0])]), 0);
    }

    #[test]
    fn nullspace_solves_system() {
        let a = vec![v(&[1, 2, 3, 4]), v(&[0, 1, 1, 1])];
        let ns = nullspace(a.iter().map(|r| to_sparse(r)), 4);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            for r in &a {
                let dot = r.iter().zip(x).fold(CxRational::zero(), |acc, (p, q)| acc + p * q);
                assert!(dot.is_zero());
            }
        }
    }
}
