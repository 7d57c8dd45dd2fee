//! Randomized property suites behind `ebraid verify`.

use ebraid_core::covering::{cov_complex, cov_faces_anticommute, cov_sign_assignment, specialize_pi};
use ebraid_core::cube::{build_cube, degree_audit, faces_anticommute};
use ebraid_core::homology::{homology, tqft_complex};
use ebraid_core::{oracle, skein, BraidWord};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::corpus::CorpusEntry;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Markov,
    Euler,
    Oracle,
    Signs,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Markov => "markov",
            Suite::Euler => "euler",
            Suite::Oracle => "oracle",
            Suite::Signs => "signs",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub trials: usize,
    pub max_strands: usize,
    pub max_crossings: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub passed: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A random word with 2..=`max_strands` strands and 0..=`max_crossings` letters.
pub fn random_braid<R: Rng>(rng: &mut R, max_strands: usize, max_crossings: usize) -> BraidWord {
    let n = rng.gen_range(2..=max_strands.max(2));
    let len = rng.gen_range(0..=max_crossings);
    BraidWord::random(n, len, rng.gen())
}

fn describe(b: &BraidWord) -> String {
    format!("--strands {} \"{}\"", b.strands(), b)
}

pub fn run(suite: Suite, opts: &Options, corpus: &[CorpusEntry]) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut cases: Vec<(BraidWord, Option<&CorpusEntry>)> = corpus.iter().map(|e| (e.braid.clone(), Some(e))).collect();
    for _ in 0..opts.trials {
        cases.push((random_braid(&mut rng, opts.max_strands, opts.max_crossings), None));
    }
    let mut report = Report::default();
    for (k, (b, entry)) in cases.iter().enumerate() {
        let seed = opts.seed.wrapping_add(k as u64);
        match check(suite, b, *entry, seed) {
            Ok(()) => report.passed += 1,
            Err(why) => report.failures.push(format!("{}: {why}", describe(b))),
        }
    }
    report
}

fn check(suite: Suite, b: &BraidWord, entry: Option<&CorpusEntry>, seed: u64) -> Result<(), String> {
    let e = |err: ebraid_core::Error| err.to_string();
    match suite {
        Suite::Markov => {
            let j = skein::jhat(b).map_err(e)?;
            expect_jhat(entry, &j)?;
            for v in b.markov_variants(seed, 5) {
                if skein::jhat(&v).map_err(e)? != j {
                    return Err(format!("differs from Markov variant {}", describe(&v)));
                }
            }
        }
        Suite::Euler => {
            let c = tqft_complex(&build_cube(b).map_err(e)?).map_err(e)?;
            if !c.preserves_degree() {
                return Err("differential does not preserve degree".into());
            }
            if !c.q_tau_balanced() {
                return Err("a generator has q + tau not divisible by 4".into());
            }
            if homology(&c)
                .keys()
                .any(|&(_, q, tau)| (q + tau as i64).rem_euclid(4) != 0)
            {
                return Err("a homology class has q + tau not divisible by 4".into());
            }
            let j = skein::jhat(b).map_err(e)?;
            if c.graded_euler() != j {
                return Err(format!("Euler characteristic {} differs from {}", c.graded_euler(), j));
            }
        }
        Suite::Oracle => {
            let s = skein::jhat(b).map_err(e)?;
            let t = skein::jhat_via_tl(b);
            let o = oracle::jhat_oracle(b).map_err(e)?;
            if s != t || s != o {
                return Err(format!("state sum {s}, TL {t}, oracle {o}"));
            }
            expect_jhat(entry, &s)?;
        }
        Suite::Signs => {
            let cube = build_cube(b).map_err(e)?;
            if !faces_anticommute(&cube) {
                return Err("lexicographic signs leave a commuting square".into());
            }
            if !degree_audit(&cube) {
                return Err("degree audit failed".into());
            }
            let units = cov_sign_assignment(&cube).map_err(e)?;
            if !cov_faces_anticommute(&cube, &units) {
                return Err("covering units leave a square that does not anticommute".into());
            }
            let cov = cov_complex(&cube, &units).map_err(e)?;
            if specialize_pi(&cov, 1) != tqft_complex(&cube).map_err(e)? {
                return Err("pi = 1 specialization differs from the even complex".into());
            }
            specialize_pi(&cov, -1).check_square_zero().map_err(e)?;
        }
    }
    Ok(())
}

fn expect_jhat(entry: Option<&CorpusEntry>, j: &ebraid_core::TauLaurent) -> Result<(), String> {
    match entry.and_then(|x| x.expected_jhat.as_ref()) {
        Some(want) if want != j => Err(format!("corpus entry {} expects {want}, got {j}", entry.unwrap().name)),
        _ => Ok(()),
    }
}
