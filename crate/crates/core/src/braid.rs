//! Braid words: parsing, writhe, closure components and Markov moves.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

/// A word in the braid group `B_n`. Letter `ℓ` stands for `σ_{|ℓ|}` with the
/// crossing sign of `ℓ`; letters read bottom to top.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

/// A permutation of `0..n` given by its images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = alloc::vec![false; self.0.len()];
        let mut cycles = 0;
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
            }
        }
        cycles
    }
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::MalformedBraid("strand count must be at least 1".into()));
        }
        for &l in &letters {
            if l == 0 {
                return Err(Error::MalformedBraid("zero letter".into()));
            }
            if l.unsigned_abs() as usize >= strands {
                return Err(Error::MalformedBraid(format!(
                    "letter {} needs at least {} strands, got {}",
                    l,
                    l.unsigned_abs() + 1,
                    strands
                )));
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        Self::new(strands, Vec::new()).expect("identity braid needs at least one strand")
    }

    /// Parses whitespace-separated nonzero integers.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i32>()
                    .map_err(|_| Error::MalformedBraid(format!("not an integer: {:?}", tok)))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn crossings(&self) -> usize {
        self.letters.len()
    }

    pub fn positive_crossings(&self) -> usize {
        self.letters.iter().filter(|l| **l > 0).count()
    }

    pub fn negative_crossings(&self) -> usize {
        self.letters.iter().filter(|l| **l < 0).count()
    }

    /// `n₊ − n₋`.
    pub fn writhe(&self) -> i64 {
        self.positive_crossings() as i64 - self.negative_crossings() as i64
    }

    /// The underlying permutation: strand starting at the bottom in position
    /// `i` ends at the top in position `perm[i]`.
    pub fn permutation(&self) -> Permutation {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            for p in pos.iter_mut() {
                if *p == i {
                    *p = i + 1;
                } else if *p == i + 1 {
                    *p = i;
                }
            }
        }
        Permutation(pos)
    }

    /// Number of components of the trace closure.
    pub fn closure_components(&self) -> usize {
        self.permutation().cycle_count()
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// `self` followed by `other` (both on the same strand count).
    pub fn concat(&self, other: &BraidWord) -> Self {
        assert_eq!(self.strands, other.strands, "braid words on different strand counts");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self {
            strands: self.strands,
            letters,
        }
    }

    /// Markov I: `B·σ_n^{±1}` on `n + 1` strands.
    pub fn stabilize(&self, positive: bool) -> Self {
        let mut letters = self.letters.clone();
        let s = self.strands as i32;
        letters.push(if positive { s } else { -s });
        Self {
            strands: self.strands + 1,
            letters,
        }
    }

    /// Markov II: `σ · B · σ⁻¹` for the generator letter `g`.
    pub fn conjugate(&self, g: i32) -> Result<Self> {
        let mut letters = Vec::with_capacity(self.letters.len() + 2);
        letters.push(g);
        letters.extend_from_slice(&self.letters);
        letters.push(-g);
        Self::new(self.strands, letters)
    }

    /// Markov II as a cyclic shift: moves the first letter to the end.
    pub fn rotate(&self) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            letters.rotate_left(1);
        }
        Self {
            strands: self.strands,
            letters,
        }
    }

    /// Words whose closures are isotopic to this one, each made by one to
    /// three random Markov moves. Deterministic in `seed`.
    pub fn markov_variants(&self, seed: u64, count: usize) -> Vec<BraidWord> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|_| {
                let moves = rng.gen_range(1..=3);
                let mut b = self.clone();
                for _ in 0..moves {
                    b = match rng.gen_range(0..3) {
                        0 => b.stabilize(rng.gen_bool(0.5)),
                        1 if b.strands >= 2 => {
                            let g = random_letter(&mut rng, b.strands);
                            b.conjugate(g).expect("generated letter is in range")
                        }
                        _ => b.rotate(),
                    };
                }
                b
            })
            .collect()
    }

    /// Uniformly random word of `len` letters over `{±1, …, ±(n−1)}`.
    pub fn random(strands: usize, len: usize, seed: u64) -> Self {
        assert!(
            strands >= 2 || len == 0,
            "a non-empty random word needs at least two strands"
        );
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let letters = (0..len).map(|_| random_letter(&mut rng, strands)).collect();
        Self {
            strands: strands.max(1),
            letters,
        }
    }
}

fn random_letter<R: Rng>(rng: &mut R, strands: usize) -> i32 {
    let g = rng.gen_range(1..strands as i32);
    if rng.gen_bool(0.5) {
        g
    } else {
        -g
    }
}

/// Renders the letters as the whitespace-separated text accepted by
/// [`BraidWord::parse`].
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l)?;
        }
        Ok(())
    }
}
