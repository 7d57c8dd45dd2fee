//! The rank-two Frobenius algebra `A = Z[X]/(X²)` with basis `𝟙 = 0`, `X = 1`.
//!
//! Tables are indexed like tensor basis words, first factor most significant:
//! `m[out][2a + b]`, `delta[2x + y][in]`.

/// `(q, τ)` degrees of `𝟙` and `X`.
pub const BASIS_DEGREES: [(i64, i64); 2] = [(1, -1), (-1, 1)];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusSpec {
    pub m: [[i64; 4]; 2],
    pub delta: [[i64; 2]; 4],
    pub epsilon: [i64; 2],
    pub eta: [i64; 2],
}

impl FrobeniusSpec {
    pub const fn even() -> Self {
        Self {
            m: [[1, 0, 0, 0], [0, 1, 1, 0]],
            delta: [[0, 0], [1, 0], [1, 0], [0, 1]],
            epsilon: [0, 1],
            eta: [1, 0],
        }
    }

    pub fn m_matrix(&self) -> Mat {
        Mat::from_fn(2, 4, |r, c| self.m[r][c])
    }

    pub fn delta_matrix(&self) -> Mat {
        Mat::from_fn(4, 2, |r, c| self.delta[r][c])
    }

    pub fn epsilon_matrix(&self) -> Mat {
        Mat::from_fn(1, 2, |_, c| self.epsilon[c])
    }

    pub fn eta_matrix(&self) -> Mat {
        Mat::from_fn(2, 1, |r, _| self.eta[r])
    }
}

/// Small dense integer matrix for table identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: alloc::vec::Vec<i64>,
}

impl Mat {
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut data = alloc::vec::Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| (r == c) as i64)
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows);
        Mat::from_fn(self.rows, o.cols, |r, c| {
            (0..self.cols).map(|k| self.get(r, k) * o.get(k, c)).sum()
        })
    }

    /// Kronecker product, `self` on the more significant factor.
    pub fn kron(&self, o: &Mat) -> Mat {
        Mat::from_fn(self.rows * o.rows, self.cols * o.cols, |r, c| {
            self.get(r / o.rows, c / o.cols) * o.get(r % o.rows, c % o.cols)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structure_constants() {
        let f = FrobeniusSpec::even();
        let id = Mat::identity(2);
        let (m, d, e, u) = (f.m_matrix(), f.delta_matrix(), f.epsilon_matrix(), f.eta_matrix());
        // unit and counit
        assert_eq!(m.mul(&u.kron(&id)), id);
        assert_eq!(m.mul(&id.kron(&u)), id);
        assert_eq!(e.kron(&id).mul(&d), id);
        assert_eq!(id.kron(&e).mul(&d), id);
        // associativity, coassociativity, Frobenius relation
        assert_eq!(m.mul(&m.kron(&id)), m.mul(&id.kron(&m)));
        assert_eq!(d.kron(&id).mul(&d), id.kron(&d).mul(&d));
        assert_eq!(d.mul(&m), m.kron(&id).mul(&id.kron(&d)));
        assert_eq!(d.mul(&m), id.kron(&m).mul(&d.kron(&id)));
        // X² = 0, m∘Δ = 2X
        assert_eq!(m.get(1, 3), 0);
        assert_eq!(
            m.mul(&d),
            Mat::from_fn(2, 2, |r, c| if (r, c) == (1, 0) { 2 } else { 0 })
        );
    }

    #[test]
    fn maps_have_the_saddle_degree() {
        let f = FrobeniusSpec::even();
        let deg2 = |w: usize| {
            let (a, b) = (BASIS_DEGREES[w >> 1], BASIS_DEGREES[w & 1]);
            (a.0 + b.0, a.1 + b.1)
        };
        for (o, row) in f.m.iter().enumerate() {
            for (i, &v) in row.iter().enumerate() {
                if v != 0 {
                    let (s, t) = (deg2(i), BASIS_DEGREES[o]);
                    assert_eq!((t.0 - s.0, t.1 - s.1), (-1, 1));
                }
            }
        }
        for (o, row) in f.delta.iter().enumerate() {
            for (i, &v) in row.iter().enumerate() {
                if v != 0 {
                    let (s, t) = (BASIS_DEGREES[i], deg2(o));
                    assert_eq!((t.0 - s.0, t.1 - s.1), (-1, 1));
                }
            }
        }
    }
}
