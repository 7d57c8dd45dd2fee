use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg};

use crate::scalar::PiScalar;

/// Ring elements a differential can hold.
pub trait Entry: Copy + PartialEq + Default + Add<Output = Self> + Mul<Output = Self> + Neg<Output = Self> {
    fn is_zero(&self) -> bool;
}

impl Entry for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
}

impl Entry for PiScalar {
    fn is_zero(&self) -> bool {
        PiScalar::is_zero(self)
    }
}

/// Column-major sparse matrix; each column is sorted by row with no zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix<T> {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, T)>>,
}

impl<T: Entry> SparseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            columns: alloc::vec![Vec::new(); cols],
        }
    }

    /// Builds from unsorted `(row, value)` lists per column, merging repeats.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, T)>>) -> Self {
        let cols = columns.len();
        let columns = columns.into_iter().map(normalize).collect();
        Self { rows, cols, columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> &[(usize, T)] {
        &self.columns[c]
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        self.columns[c]
            .binary_search_by_key(&r, |e| e.0)
            .map(|k| self.columns[c][k].1)
            .unwrap_or_default()
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// `(row, col, value)` in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, T)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&(r, v)| (r, c, v)))
    }

    /// `self · rhs`.
    pub fn mul(&self, rhs: &SparseMatrix<T>) -> SparseMatrix<T> {
        assert_eq!(self.cols, rhs.rows);
        let columns = rhs
            .columns
            .iter()
            .map(|col| {
                let mut acc = Vec::new();
                for &(k, b) in col {
                    for &(r, a) in &self.columns[k] {
                        acc.push((r, a * b));
                    }
                }
                acc
            })
            .collect();
        SparseMatrix::from_columns(self.rows, columns)
    }

    pub fn map<U: Entry>(&self, f: impl Fn(T) -> U) -> SparseMatrix<U> {
        let columns = self
            .columns
            .iter()
            .map(|col| col.iter().map(|&(r, v)| (r, f(v))).collect())
            .collect();
        SparseMatrix::from_columns(self.rows, columns)
    }
}

fn normalize<T: Entry>(mut col: Vec<(usize, T)>) -> Vec<(usize, T)> {
    col.sort_by_key(|e| e.0);
    let mut out: Vec<(usize, T)> = Vec::with_capacity(col.len());
    for (r, v) in col {
        match out.last_mut() {
            Some(last) if last.0 == r => last.1 = last.1 + v,
            _ => out.push((r, v)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_and_multiply() {
        let a = SparseMatrix::from_columns(
            2,
            alloc::vec![alloc::vec![(1, 2i64), (0, 1), (1, -2)], alloc::vec![(1, 3)]],
        );
        assert_eq!(a.column(0), &[(0, 1)]);
        assert_eq!(a.get(1, 1), 3);
        assert_eq!(a.nnz(), 2);
        let b = SparseMatrix::from_columns(2, alloc::vec![alloc::vec![(0, 1i64), (1, 1)]]);
        let p = a.mul(&b);
        assert_eq!((p.get(0, 0), p.get(1, 0)), (1, 3));
        let pi = a.map(|v| PiScalar::new(0, v));
        assert_eq!(pi.get(1, 1), PiScalar::new(0, 3));
        assert!(SparseMatrix::<i64>::zeros(3, 2).is_zero());
    }
}
