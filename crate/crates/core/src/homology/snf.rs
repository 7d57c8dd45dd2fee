//! Smith normal form over the integers, plus the rank computations homology
//! needs.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: alloc::vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.as_ref().len(), cols);
            for (c, &v) in row.as_ref().iter().enumerate() {
                m.set(r, c, BigInt::from(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, o: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, o.rows);
        let mut out = IntMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.data[i * o.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Diagonal entries `D[i][i]` for `i < min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// `row[dst] += k·row[src]`.
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for c in 0..self.cols {
            let v = self.get(src, c) * k;
            if !v.is_zero() {
                self.data[dst * self.cols + c] += v;
            }
        }
    }

    /// `col[dst] += k·col[src]`.
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for r in 0..self.rows {
            let v = self.get(r, src) * k;
            if !v.is_zero() {
                self.data[r * self.cols + dst] += v;
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.get(r, c);
            self.set(r, c, v);
        }
    }
}

/// `M = U·D·V` with `U`, `V` unimodular and `D` diagonal, each diagonal
/// entry nonnegative and dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// The nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d.diagonal().into_iter().filter(|x| !x.is_zero()).collect()
    }
}

/// Keeps `M = U·D·V` true while `D` is reduced in place.
struct Reducer {
    d: IntMatrix,
    track: Option<(IntMatrix, IntMatrix)>,
}

impl Reducer {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        if let Some((u, _)) = &mut self.track {
            u.swap_cols(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        if let Some((_, v)) = &mut self.track {
            v.swap_rows(a, b);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.d.add_row(dst, src, k);
        if let Some((u, _)) = &mut self.track {
            u.add_col(src, dst, &-k);
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.d.add_col(dst, src, k);
        if let Some((_, v)) = &mut self.track {
            v.add_row(src, dst, &-k);
        }
    }

    fn negate_row(&mut self, r: usize) {
        self.d.negate_row(r);
        if let Some((u, _)) = &mut self.track {
            for i in 0..u.rows {
                let x = -u.get(i, r);
                u.set(i, r, x);
            }
        }
    }

    /// Smallest nonzero entry of the trailing block starting at `(t, t)`.
    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for r in t..self.d.rows {
            for c in t..self.d.cols {
                let x = self.d.get(r, c);
                if !x.is_zero() && best.is_none_or(|(br, bc)| x.abs() < self.d.get(br, bc).abs()) {
                    best = Some((r, c));
                }
            }
        }
        best
    }

    fn reduce(&mut self) {
        let (rows, cols) = (self.d.rows, self.d.cols);
        for t in 0..rows.min(cols) {
            let Some((r, c)) = self.min_entry(t) else { break };
            self.swap_rows(t, r);
            self.swap_cols(t, c);
            loop {
                let p = self.d.get(t, t).clone();
                let mut clean = true;
                for r in t + 1..rows {
                    if !self.d.get(r, t).is_zero() {
                        let q = self.d.get(r, t).div_floor(&p);
                        self.add_row(r, t, &-q);
                        clean &= self.d.get(r, t).is_zero();
                    }
                }
                for c in t + 1..cols {
                    if !self.d.get(t, c).is_zero() {
                        let q = self.d.get(t, c).div_floor(&p);
                        self.add_col(c, t, &-q);
                        clean &= self.d.get(t, c).is_zero();
                    }
                }
                if !clean {
                    // a smaller remainder is left in row or column t
                    let mut best = (t, t);
                    for r in t + 1..rows {
                        let x = self.d.get(r, t);
                        if !x.is_zero() && x.abs() < self.d.get(best.0, best.1).abs() {
                            best = (r, t);
                        }
                    }
                    for c in t + 1..cols {
                        let x = self.d.get(t, c);
                        if !x.is_zero() && x.abs() < self.d.get(best.0, best.1).abs() {
                            best = (t, c);
                        }
                    }
                    self.swap_rows(t, best.0);
                    self.swap_cols(t, best.1);
                    continue;
                }
                let bad = (t + 1..rows)
                    .flat_map(|r| (t + 1..cols).map(move |c| (r, c)))
                    .find(|&(r, c)| !self.d.get(r, c).is_multiple_of(&p));
                match bad {
                    Some((r, _)) => self.add_row(t, r, &BigInt::one()),
                    None => break,
                }
            }
            if self.d.get(t, t).is_negative() {
                self.negate_row(t);
            }
        }
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut red = Reducer {
        d: m.clone(),
        track: Some((IntMatrix::identity(m.rows), IntMatrix::identity(m.cols))),
    };
    red.reduce();
    let (u, v) = red.track.expect("tracking was requested");
    SmithForm { u, d: red.d, v }
}

/// Nonzero invariant factors of a dense matrix, without transforms.
pub fn invariant_factors_dense(m: IntMatrix) -> Vec<BigInt> {
    let mut red = Reducer { d: m, track: None };
    red.reduce();
    red.d.diagonal().into_iter().filter(|x| !x.is_zero()).collect()
}

/// Nonzero invariant factors of a sparse integer matrix given by columns.
///
/// Unit pivots are eliminated first in machine integers; whatever is left
/// goes through the dense routine. Overflow falls back to the dense routine
/// on the whole matrix.
pub fn invariant_factors(rows: usize, columns: &[Vec<(usize, i64)>]) -> Vec<BigInt> {
    match unit_pivot_reduce(rows, columns) {
        Some((units, residual)) => {
            let mut out = alloc::vec![BigInt::one(); units];
            out.extend(invariant_factors_dense(residual));
            out
        }
        None => {
            let mut m = IntMatrix::zeros(rows, columns.len());
            for (c, col) in columns.iter().enumerate() {
                for &(r, v) in col {
                    m.set(r, c, BigInt::from(v));
                }
            }
            invariant_factors_dense(m)
        }
    }
}

/// Eliminates `±1` pivots; returns their number and the untouched rest.
fn unit_pivot_reduce(rows: usize, columns: &[Vec<(usize, i64)>]) -> Option<(usize, IntMatrix)> {
    let mut row_map: Vec<BTreeMap<usize, i64>> = alloc::vec![BTreeMap::new(); rows];
    let mut col_rows: Vec<BTreeSet<usize>> = alloc::vec![BTreeSet::new(); columns.len()];
    for (c, col) in columns.iter().enumerate() {
        for &(r, v) in col {
            if v != 0 {
                row_map[r].insert(c, v);
                col_rows[c].insert(r);
            }
        }
    }
    let mut units = 0;
    // sweep short rows first; repeat while a sweep still finds pivots
    let mut order: Vec<usize> = (0..rows).collect();
    order.sort_by_key(|&r| row_map[r].len());
    loop {
        let before = units;
        for &pr in &order {
            let pc = row_map[pr]
                .iter()
                .filter(|(_, v)| v.abs() == 1)
                .min_by_key(|(c, _)| col_rows[**c].len())
                .map(|(c, _)| *c);
            let Some(pc) = pc else { continue };
            let pivot_row = core::mem::take(&mut row_map[pr]);
            let p = pivot_row[&pc];
            for &c in pivot_row.keys() {
                col_rows[c].remove(&pr);
            }
            let others: Vec<usize> = col_rows[pc].iter().copied().collect();
            for r in others {
                let f = row_map[r][&pc].checked_mul(p)?;
                for (&c, &v) in &pivot_row {
                    let cur = row_map[r].get(&c).copied().unwrap_or(0);
                    let new = cur.checked_sub(f.checked_mul(v)?)?;
                    if new == 0 {
                        row_map[r].remove(&c);
                        col_rows[c].remove(&r);
                    } else {
                        if cur == 0 {
                            col_rows[c].insert(r);
                        }
                        row_map[r].insert(c, new);
                    }
                }
            }
            units += 1;
        }
        if units == before {
            break;
        }
    }
    let live_rows: Vec<usize> = (0..rows).filter(|&r| !row_map[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..columns.len()).filter(|&c| !col_rows[c].is_empty()).collect();
    let col_pos: BTreeMap<usize, usize> = live_cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let mut m = IntMatrix::zeros(live_rows.len(), live_cols.len());
    for (k, &r) in live_rows.iter().enumerate() {
        for (&c, &v) in &row_map[r] {
            m.set(k, col_pos[&c], BigInt::from(v));
        }
    }
    Some((units, m))
}

/// Rank over F₂ of a sparse integer matrix given by columns.
pub fn rank_mod2(rows: usize, columns: &[Vec<(usize, i64)>]) -> usize {
    let words = rows.div_ceil(64);
    let mut basis: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
    for col in columns {
        let mut v = alloc::vec![0u64; words];
        for &(r, x) in col {
            if x.rem_euclid(2) == 1 {
                v[r / 64] ^= 1 << (r % 64);
            }
        }
        // reduce by leading bit until a new pivot appears or v vanishes
        while let Some(lead) = leading_bit(&v) {
            match basis.get(&lead) {
                Some(b) => v.iter_mut().zip(b).for_each(|(x, y)| *x ^= y),
                None => {
                    basis.insert(lead, v);
                    break;
                }
            }
        }
    }
    basis.len()
}

fn leading_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .rev()
        .find(|(_, w)| **w != 0)
        .map(|(k, w)| k * 64 + 63 - w.leading_zeros() as usize)
}
