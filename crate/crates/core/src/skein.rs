//! The bracket `⟨B⟩` of a braid closure by state sum and by the
//! Temperley–Lieb representation, and the normalized invariant `Ĵ`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::braid::BraidWord;
use crate::scalar::TauLaurent;
use crate::tl::{rho_word, PlanarMatching};
use crate::uf::UnionFind;
use crate::{Error, Result};

/// Largest crossing count the state sum accepts (2²⁴ states).
pub const DEFAULT_STATE_CAP: usize = 24;

/// A choice of 0- or 1-resolution per crossing; bit `j` is crossing `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct State {
    bits: u64,
    len: usize,
}

impl State {
    pub fn new(bits: u64, len: usize) -> Self {
        debug_assert!(len <= 64 && (len == 64 || bits >> len == 0));
        Self { bits, len }
    }

    /// Parses `"010"`-style text, first character is crossing 0.
    pub fn from_str_bits(s: &str) -> Option<Self> {
        let mut bits = 0;
        for (j, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits |= 1 << j,
                _ => return None,
            }
        }
        Some(Self::new(bits, s.chars().count()))
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, j: usize) -> bool {
        self.bits >> j & 1 == 1
    }

    /// Number of 1-resolutions.
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }
}

/// A fully resolved braid: circles in its closure and the diagram left after
/// deleting the closed loops that appear before closing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionOutcome {
    pub circles: usize,
    pub interior_loops: usize,
    pub residual: PlanarMatching,
}

/// Whether crossing `letter` resolved with `bit` becomes the cup–cap `E`.
pub(crate) fn is_cup_cap(letter: i32, bit: bool) -> bool {
    (letter > 0) == bit
}

fn check_len(b: &BraidWord, z: &State) -> Result<()> {
    if z.len() != b.crossings() {
        return Err(Error::LengthMismatch {
            expected: b.crossings(),
            got: z.len(),
        });
    }
    Ok(())
}

pub fn resolve_state(b: &BraidWord, z: &State) -> Result<ResolutionOutcome> {
    check_len(b, z)?;
    let n = b.strands();
    let mut interior_loops = 0;
    let mut acc = PlanarMatching::identity(n);
    for (j, &l) in b.letters().iter().enumerate() {
        if is_cup_cap(l, z.get(j)) {
            let e = PlanarMatching::generator(n, l.unsigned_abs() as usize)?;
            let (loops, next) = acc.compose(&e);
            interior_loops += loops;
            acc = next;
        }
    }
    let circles = interior_loops + acc.closure_loop_count();
    Ok(ResolutionOutcome {
        circles,
        interior_loops,
        residual: acc,
    })
}

/// Segment nodes of the closed resolved diagram, unioned into circles.
///
/// Node `ℓ·n + s` is the segment of strand position `s` just below crossing
/// `ℓ`; the closure identifies the level above the last crossing with level 0.
pub(crate) fn resolved_segments(b: &BraidWord, z: &State) -> UnionFind {
    let n = b.strands();
    let m = b.crossings();
    let levels = m.max(1);
    let node = |level: usize, s: usize| (level % levels) * n + s;
    let mut uf = UnionFind::new(levels * n);
    for (j, &l) in b.letters().iter().enumerate() {
        let a = l.unsigned_abs() as usize - 1;
        for s in 0..n {
            if s != a && s != a + 1 {
                uf.union(node(j, s), node(j + 1, s));
            }
        }
        if is_cup_cap(l, z.get(j)) {
            uf.union(node(j, a), node(j, a + 1));
            uf.union(node(j + 1, a), node(j + 1, a + 1));
        } else {
            uf.union(node(j, a), node(j + 1, a));
            uf.union(node(j, a + 1), node(j + 1, a + 1));
        }
    }
    uf
}

pub(crate) fn circle_count(b: &BraidWord, z: &State) -> usize {
    resolved_segments(b, z).components()
}

/// Signed monomial `±τ^tau q^q` of a state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Weight {
    negative: bool,
    tau: i64,
    q: i64,
}

fn weight_of(b: &BraidWord, z: &State) -> Weight {
    let mut w = Weight {
        negative: false,
        tau: 0,
        q: 0,
    };
    for (j, &l) in b.letters().iter().enumerate() {
        match (l > 0, z.get(j)) {
            (true, false) => w.tau += 1,
            (true, true) => {
                w.negative ^= true;
                w.q += 1;
            }
            (false, false) => {
                w.negative ^= true;
                w.q -= 1;
            }
            (false, true) => w.tau += 3,
        }
    }
    w.tau = w.tau.rem_euclid(4);
    w
}

/// Product of the per-crossing skein coefficients:
/// positive `τ | −q`, negative `−q⁻¹ | τ³` for 0 | 1.
pub fn state_weight(b: &BraidWord, z: &State) -> Result<TauLaurent> {
    check_len(b, z)?;
    let w = weight_of(b, z);
    Ok(TauLaurent::monomial(w.tau, w.q, if w.negative { -1 } else { 1 }))
}

fn all_states(m: usize) -> impl Iterator<Item = State> {
    (0..1u64 << m).map(move |bits| State::new(bits, m))
}

/// `⟨B⟩ = Σ_z weight(z)·d^{circles(z)}`.
pub fn bracket(b: &BraidWord) -> Result<TauLaurent> {
    bracket_capped(b, DEFAULT_STATE_CAP)
}

pub fn bracket_capped(b: &BraidWord, cap: usize) -> Result<TauLaurent> {
    let m = b.crossings();
    if m > cap {
        return Err(Error::TooManyCrossings { crossings: m, cap });
    }
    // group states by (weight, circles) and expand once per class
    let mut classes: BTreeMap<(i64, i64, usize), i64> = BTreeMap::new();
    for z in all_states(m) {
        let w = weight_of(b, &z);
        let k = circle_count(b, &z);
        *classes.entry((w.tau, w.q, k)).or_insert(0) += if w.negative { -1 } else { 1 };
    }
    let d = TauLaurent::d();
    let max_k = classes.keys().map(|c| c.2).max().unwrap_or(0);
    let mut d_pows: Vec<TauLaurent> = Vec::with_capacity(max_k + 1);
    d_pows.push(TauLaurent::one());
    for k in 1..=max_k {
        d_pows.push(&d_pows[k - 1] * &d);
    }
    Ok(classes
        .into_iter()
        .filter(|(_, count)| *count != 0)
        .map(|((tau, q, k), count)| d_pows[k].mul_monomial(tau, q).scale(&BigInt::from(count)))
        .sum())
}

/// `⟨B⟩` as the closure of `ρ(B)` in `TL_n(d)`.
pub fn bracket_via_tl(b: &BraidWord) -> TauLaurent {
    rho_word(b).closure_eval()
}

/// The normalization `(τ²q)^{wr(B)}`.
pub fn writhe_factor(b: &BraidWord) -> (i64, i64) {
    let wr = b.writhe();
    (2 * wr, wr)
}

/// `Ĵ(B) = (τ²q)^{wr(B)}·⟨B⟩`.
pub fn jhat(b: &BraidWord) -> Result<TauLaurent> {
    let (tau, q) = writhe_factor(b);
    Ok(bracket(b)?.mul_monomial(tau, q))
}

pub fn jhat_via_tl(b: &BraidWord) -> TauLaurent {
    let (tau, q) = writhe_factor(b);
    bracket_via_tl(b).mul_monomial(tau, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::tau_monomial;
    use proptest::prelude::*;

    fn braid(s: &str, n: usize) -> BraidWord {
        BraidWord::parse(s, n).unwrap()
    }

    fn st(s: &str) -> State {
        State::from_str_bits(s).unwrap()
    }

    fn poly(terms: &[(i64, i64, i64)]) -> TauLaurent {
        TauLaurent::from_terms(terms.iter().copied())
    }

    #[test]
    fn resolutions_of_the_trefoil() {
        let t = braid("1 1 1", 2);
        assert_eq!(resolve_state(&t, &st("000")).unwrap().circles, 2);
        assert_eq!(resolve_state(&t, &st("100")).unwrap().circles, 1);
        let all = resolve_state(&t, &st("111")).unwrap();
        assert_eq!((all.circles, all.interior_loops), (3, 2));
        assert_eq!(
            resolve_state(&t, &st("10")),
            Err(Error::LengthMismatch { expected: 3, got: 2 })
        );
    }

    #[test]
    fn weights() {
        let t = braid("1 1 1", 2);
        assert_eq!(state_weight(&t, &st("000")).unwrap(), tau_monomial(3, 0, 1));
        assert_eq!(state_weight(&t, &st("111")).unwrap(), tau_monomial(0, 3, -1));
        assert_eq!(state_weight(&braid("-1", 2), &st("1")).unwrap(), tau_monomial(3, 0, 1));
        assert_eq!(
            state_weight(&braid("-1", 2), &st("0")).unwrap(),
            tau_monomial(0, -1, -1)
        );
    }

    #[test]
    fn brackets() {
        let d = TauLaurent::d();
        assert_eq!(bracket(&BraidWord::identity(1)).unwrap(), d);
        assert_eq!(bracket(&braid("1", 2)).unwrap(), d.mul_monomial(2, -1));
        assert_eq!(
            bracket(&braid("1 1 1", 2)).unwrap(),
            poly(&[(1, 6, -1), (1, 2, 1), (3, 0, 1), (1, -2, 1)])
        );
        assert_eq!(bracket_via_tl(&braid("1", 2)), d.mul_monomial(2, -1));
        assert_eq!(bracket_via_tl(&braid("1 -1", 2)), &d * &d);
    }

    #[test]
    fn jhat_small_links() {
        assert_eq!(jhat(&BraidWord::identity(1)).unwrap(), poly(&[(3, 1, 1), (1, -1, 1)]));
        assert_eq!(
            jhat(&braid("1 1", 2)).unwrap(),
            poly(&[(2, 6, 1), (0, 4, 1), (2, 2, 1), (0, 0, 1)])
        );
        assert_eq!(
            jhat(&braid("1 1 1", 2)).unwrap(),
            poly(&[(3, 9, -1), (3, 5, 1), (1, 3, 1), (3, 1, 1)])
        );
    }

    #[test]
    fn m1_scalar_identity() {
        // (τ²q)·(τd − q) = 1
        let lhs = (&TauLaurent::d().mul_monomial(1, 0) - &tau_monomial(0, 1, 1)).mul_monomial(2, 1);
        assert_eq!(lhs, TauLaurent::one());
    }

    #[test]
    fn cap_is_enforced() {
        let b = BraidWord::random(3, 9, 1);
        assert_eq!(
            bracket_capped(&b, 8),
            Err(Error::TooManyCrossings { crossings: 9, cap: 8 })
        );
    }

    fn arb_braid() -> impl Strategy<Value = BraidWord> {
        (1usize..5).prop_flat_map(|n| {
            let g = (n as i32 - 1).max(1);
            let len = if n == 1 { 0..1 } else { 0..7 };
            proptest::collection::vec((1..=g, any::<bool>()), len).prop_map(move |ls| {
                BraidWord::new(n, ls.into_iter().map(|(a, s)| if s { a } else { -a }).collect()).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn state_sum_matches_tl(b in arb_braid()) {
            prop_assert_eq!(bracket(&b).unwrap(), bracket_via_tl(&b));
        }

        #[test]
        fn circle_counts_agree(b in arb_braid(), bits in any::<u64>()) {
            let m = b.crossings();
            let z = State::new(if m == 0 { 0 } else { bits & ((1u64 << m) - 1) }, m);
            prop_assert_eq!(resolve_state(&b, &z).unwrap().circles, circle_count(&b, &z));
        }

        #[test]
        fn markov_invariance(b in arb_braid(), seed in any::<u64>()) {
            let j = jhat(&b).unwrap();
            for v in b.markov_variants(seed, 3) {
                prop_assert_eq!(jhat(&v).unwrap(), j.clone());
            }
        }

        #[test]
        fn jhat_monomials_are_balanced(b in arb_braid()) {
            for (q, tau, _) in jhat(&b).unwrap().monomials() {
                prop_assert_eq!((q + tau as i64).rem_euclid(4), 0);
            }
        }
    }
}
