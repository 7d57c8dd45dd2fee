//! The cube of resolutions of a braid closure with its circle data, saddle
//! classification, lexicographic signs and e-degree shifts.
//!
//! Arcs are the segment nodes of the closed diagram: arc `ℓ·n + s` is strand
//! position `s` just below crossing `ℓ`, level 0 doubling as the closing arcs.
//! Circles at a vertex are numbered by ascending minimal arc.

use alloc::vec::Vec;

use crate::braid::BraidWord;
use crate::skein::{resolved_segments, State};
use crate::{Error, Result};

/// Largest crossing count the cube builder accepts.
pub const DEFAULT_CUBE_CAP: usize = 16;

/// A fully resolved diagram at one corner of the cube.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeVertex {
    pub state: State,
    /// Circle index of every arc.
    pub arc_to_circle: Vec<u32>,
    /// Minimal arc of each circle, ascending.
    pub min_arcs: Vec<u32>,
    /// Cohomological index `r − n₋`.
    pub index: i64,
    /// Vertex shift `(−n₋ + r, n₊ − r)` in `(q, τ)`.
    pub shift: (i64, i64),
}

impl CubeVertex {
    pub fn circle_count(&self) -> usize {
        self.min_arcs.len()
    }

    /// Arcs of each circle in canonical order.
    pub fn circles(&self) -> Vec<Vec<u32>> {
        let mut out = alloc::vec![Vec::new(); self.min_arcs.len()];
        for (arc, &c) in self.arc_to_circle.iter().enumerate() {
            out[c as usize].push(arc as u32);
        }
        out
    }

    /// The target-vertex index of a circle untouched by a saddle.
    pub fn carry(&self, circle: usize, target: &CubeVertex) -> usize {
        target.arc_to_circle[self.min_arcs[circle] as usize] as usize
    }
}

/// What a saddle does to the circles it touches, as canonical indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Saddle {
    Merge { sources: (usize, usize), target: usize },
    Split { source: usize, targets: (usize, usize) },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SaddleKind {
    Merge,
    Split,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CubeEdge {
    pub from: u64,
    pub to: u64,
    /// The crossing whose resolution flips.
    pub crossing: usize,
    pub saddle: Saddle,
    /// Lexicographic sign `±1`.
    pub sign: i8,
}

impl CubeEdge {
    pub fn kind(&self) -> SaddleKind {
        match self.saddle {
            Saddle::Merge { .. } => SaddleKind::Merge,
            Saddle::Split { .. } => SaddleKind::Split,
        }
    }
}

/// `(−1)^{number of 1s in z below the flipped position}`.
pub fn lex_sign(from: u64, crossing: usize) -> i8 {
    if (from & ((1u64 << crossing) - 1)).count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedCube {
    pub strands: usize,
    pub crossings: usize,
    pub positive: usize,
    pub negative: usize,
    /// Indexed by state bits.
    pub vertices: Vec<CubeVertex>,
    /// Ordered by source state, then crossing.
    pub edges: Vec<CubeEdge>,
    /// `(wr, 2wr)` in `(q, τ)`.
    pub global_shift: (i64, i64),
    edge_offsets: Vec<usize>,
}

impl ShiftedCube {
    pub fn vertex(&self, bits: u64) -> &CubeVertex {
        &self.vertices[bits as usize]
    }

    /// Position of the edge leaving `from` along `crossing`.
    pub fn edge_index(&self, from: u64, crossing: usize) -> usize {
        self.edge_offsets[from as usize] + (0..crossing).filter(|&j| from >> j & 1 == 0).count()
    }

    pub fn edge(&self, from: u64, crossing: usize) -> &CubeEdge {
        &self.edges[self.edge_index(from, crossing)]
    }

    /// Lowest and highest cohomological index.
    pub fn index_range(&self) -> (i64, i64) {
        (-(self.negative as i64), self.positive as i64)
    }
}

pub fn build_cube(b: &BraidWord) -> Result<ShiftedCube> {
    build_cube_capped(b, DEFAULT_CUBE_CAP)
}

pub fn build_cube_capped(b: &BraidWord, cap: usize) -> Result<ShiftedCube> {
    let m = b.crossings();
    if m > cap || m > 30 {
        return Err(Error::TooManyCrossings {
            crossings: m,
            cap: cap.min(30),
        });
    }
    let n = b.strands();
    let levels = m.max(1);
    let (np, nn) = (b.positive_crossings() as i64, b.negative_crossings() as i64);
    let vertices: Vec<CubeVertex> = (0..1u64 << m)
        .map(|bits| {
            let z = State::new(bits, m);
            let mut uf = resolved_segments(b, &z);
            let arcs = levels * n;
            let mut root_id = alloc::vec![u32::MAX; arcs];
            let mut arc_to_circle = Vec::with_capacity(arcs);
            let mut min_arcs = Vec::new();
            for arc in 0..arcs {
                let root = uf.find(arc);
                if root_id[root] == u32::MAX {
                    root_id[root] = min_arcs.len() as u32;
                    min_arcs.push(arc as u32);
                }
                arc_to_circle.push(root_id[root]);
            }
            let r = bits.count_ones() as i64;
            CubeVertex {
                state: z,
                arc_to_circle,
                min_arcs,
                index: r - nn,
                shift: (r - nn, np - r),
            }
        })
        .collect();

    let node = |level: usize, s: usize| (level % levels) * n + s;
    let mut edges = Vec::with_capacity(m << m.saturating_sub(1));
    let mut edge_offsets = Vec::with_capacity((1 << m) + 1);
    for from in 0..1u64 << m {
        edge_offsets.push(edges.len());
        for (j, &l) in b.letters().iter().enumerate() {
            if from >> j & 1 == 1 {
                continue;
            }
            let to = from | 1 << j;
            let a = l.unsigned_abs() as usize - 1;
            let touched = [node(j, a), node(j, a + 1), node(j + 1, a), node(j + 1, a + 1)];
            let (src, dst) = (&vertices[from as usize], &vertices[to as usize]);
            let src_circles = distinct_sorted(touched.iter().map(|&x| src.arc_to_circle[x] as usize));
            let dst_circles = distinct_sorted(touched.iter().map(|&x| dst.arc_to_circle[x] as usize));
            let saddle = match (src_circles.as_slice(), dst_circles.as_slice()) {
                ([x, y], [t]) => Saddle::Merge {
                    sources: (*x, *y),
                    target: *t,
                },
                ([s], [x, y]) => Saddle::Split {
                    source: *s,
                    targets: (*x, *y),
                },
                _ => unreachable!("a saddle changes the circle count by one"),
            };
            edges.push(CubeEdge {
                from,
                to,
                crossing: j,
                saddle,
                sign: lex_sign(from, j),
            });
        }
    }
    let wr = b.writhe();
    Ok(ShiftedCube {
        strands: n,
        crossings: m,
        positive: np as usize,
        negative: nn as usize,
        vertices,
        edges,
        global_shift: (wr, 2 * wr),
        edge_offsets,
    })
}

fn distinct_sorted(it: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = it.collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Degree of `m` and `Δ` in `(q, τ)`.
pub const SADDLE_DEGREE: (i64, i64) = (-1, 1);

/// True iff every saddle map plus the shift change along its edge has degree
/// zero in `(q, τ mod 4)`.
pub fn degree_audit(cube: &ShiftedCube) -> bool {
    cube.edges.iter().all(|e| {
        let (s, t) = (cube.vertex(e.from).shift, cube.vertex(e.to).shift);
        let dq = SADDLE_DEGREE.0 + t.0 - s.0;
        let dt = SADDLE_DEGREE.1 + t.1 - s.1;
        dq == 0 && dt.rem_euclid(4) == 0
    })
}

/// True iff the four lexicographic signs around every square multiply to −1.
pub fn faces_anticommute(cube: &ShiftedCube) -> bool {
    let m = cube.crossings;
    for z in 0..1u64 << m {
        for j in 0..m {
            for k in j + 1..m {
                if z >> j & 1 == 1 || z >> k & 1 == 1 {
                    continue;
                }
                let p = cube.edge(z, j).sign
                    * cube.edge(z | 1 << j, k).sign
                    * cube.edge(z, k).sign
                    * cube.edge(z | 1 << k, j).sign;
                if p != -1 {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skein;
    use proptest::prelude::*;

    fn cube(s: &str, n: usize) -> ShiftedCube {
        build_cube(&BraidWord::parse(s, n).unwrap()).unwrap()
    }

    #[test]
    fn trefoil_circle_counts() {
        let c = cube("1 1 1", 2);
        // listed by number of 1-resolutions
        let order = [0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111];
        let counts: Vec<usize> = order.iter().map(|&z| c.vertex(z).circle_count()).collect();
        assert_eq!(counts, [2, 1, 1, 1, 2, 2, 2, 3]);
        assert_eq!(c.edges.len(), 12);
        assert_eq!(c.index_range(), (0, 3));
        assert_eq!(c.global_shift, (3, 6));
    }

    #[test]
    fn single_crossing_merges() {
        let c = cube("1", 2);
        assert_eq!(c.edges.len(), 1);
        let e = c.edges[0];
        assert_eq!((e.from, e.to, e.sign), (0, 1, 1));
        assert_eq!(
            e.saddle,
            Saddle::Merge {
                sources: (0, 1),
                target: 0
            }
        );
        let neg = cube("-1", 2);
        assert_eq!(neg.edges[0].kind(), SaddleKind::Split);
        assert_eq!(neg.index_range(), (-1, 0));
    }

    #[test]
    fn two_crossing_signs() {
        let c = cube("1 1", 2);
        // bit 0 is the rightmost character in "10"/"01"
        assert_eq!(c.edge(0b00, 1).sign, 1);
        assert_eq!(c.edge(0b00, 0).sign, 1);
        assert_eq!(c.edge(0b10, 0).sign, 1);
        assert_eq!(c.edge(0b01, 1).sign, -1);
        assert!(faces_anticommute(&cube("1 1 1", 2)));
    }

    #[test]
    fn edge_lookup_matches_layout() {
        let c = cube("1 -2 1 -2", 3);
        for (k, e) in c.edges.iter().enumerate() {
            assert_eq!(c.edge_index(e.from, e.crossing), k);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let b = BraidWord::random(3, 10, 1);
        assert_eq!(
            build_cube_capped(&b, 8),
            Err(Error::TooManyCrossings { crossings: 10, cap: 8 })
        );
    }

    #[test]
    fn unknot_has_one_circle() {
        let c = cube("", 1);
        assert_eq!(c.vertices.len(), 1);
        assert_eq!(c.vertex(0).circles(), [[0]]);
        assert!(degree_audit(&c));
    }

    proptest! {
        #[test]
        fn cube_invariants(n in 2usize..5, len in 0usize..7, seed in any::<u64>()) {
            let b = BraidWord::random(n, len, seed);
            let c = build_cube(&b).unwrap();
            prop_assert!(degree_audit(&c));
            prop_assert!(faces_anticommute(&c));
            prop_assert_eq!(c.edges.len(), len << len.saturating_sub(1));
            for v in &c.vertices {
                prop_assert_eq!(v.circle_count(), skein::resolve_state(&b, &v.state).unwrap().circles);
                prop_assert!(v.min_arcs.windows(2).all(|w| w[0] < w[1]));
            }
            for e in &c.edges {
                let (a, t) = (c.vertex(e.from).circle_count() as i64, c.vertex(e.to).circle_count() as i64);
                prop_assert_eq!((t - a).abs(), 1);
            }
            let idx: Vec<i64> = c.vertices.iter().map(|v| v.index).collect();
            if len > 0 {
                prop_assert_eq!(*idx.iter().min().unwrap(), -(b.negative_crossings() as i64));
                prop_assert_eq!(*idx.iter().max().unwrap(), b.positive_crossings() as i64);
            }
        }
    }
}
