//! Seeded random boundaries, multiwords and cowordisms for property tests.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::category::Cowordism;
use crate::multiword::{Boundary, CyclicWord, Edge, Multiword, Polarity, Symbol, Word};

pub type TestRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Debug)]
pub struct RandomConfig {
    pub alphabet: Vec<Symbol>,
    pub max_label: usize,
    /// Chance in percent that a generated multiword carries one loop.
    pub cyclic_percent: u32,
}

impl Default for RandomConfig {
    fn default() -> RandomConfig {
        RandomConfig {
            alphabet: ["a", "b", "c"].iter().map(|s| Symbol::new(s)).collect(),
            max_label: 3,
            cyclic_percent: 10,
        }
    }
}

pub fn random_word<R: Rng>(rng: &mut R, cfg: &RandomConfig) -> Word {
    let n = rng.gen_range(0..=cfg.max_label);
    Word((0..n).map(|_| cfg.alphabet.choose(rng).expect("non-empty alphabet").clone()).collect())
}

pub fn random_boundary<R: Rng>(rng: &mut R, max_len: usize) -> Boundary {
    let n = rng.gen_range(0..=max_len);
    Boundary::from_polarities((0..n).map(|_| if rng.gen_bool(0.5) { Polarity::Left } else { Polarity::Right }).collect())
}

/// A random boundary whose left-minus-right count is `excess`, with at most
/// `max_len` points (or the smallest such size if `max_len` is too small).
pub fn random_boundary_with_excess<R: Rng>(rng: &mut R, excess: i64, max_len: usize) -> Boundary {
    let min = excess.unsigned_abs() as usize;
    let mut sizes: Vec<usize> = (min..=max_len.max(min)).filter(|n| (n + min).is_multiple_of(2)).collect();
    if sizes.is_empty() {
        sizes.push(min);
    }
    let n = *sizes.choose(rng).expect("non-empty");
    let lefts = ((n as i64 + excess) / 2) as usize;
    let mut pol: Vec<Polarity> = (0..n).map(|i| if i < lefts { Polarity::Left } else { Polarity::Right }).collect();
    pol.shuffle(rng);
    Boundary::from_polarities(pol)
}

fn excess(b: &Boundary) -> i64 {
    b.left_set().len() as i64 - b.right_set().len() as i64
}

/// A uniformly random left→right matching on a balanced boundary.
pub fn random_multiword<R: Rng>(rng: &mut R, boundary: &Boundary, cfg: &RandomConfig) -> Option<Multiword> {
    let lefts = boundary.left_set();
    let mut rights = boundary.right_set();
    if lefts.len() != rights.len() {
        return None;
    }
    rights.shuffle(rng);
    let edges = lefts
        .iter()
        .zip(rights.iter())
        .map(|(&l, &r)| Edge::new(l, random_word(rng, cfg), r))
        .collect();
    let mut cyclic = Vec::new();
    if rng.gen_range(0..100) < cfg.cyclic_percent {
        cyclic.push(CyclicWord::new(random_word(rng, cfg)));
    }
    Multiword::new(boundary.clone(), edges, cyclic).ok()
}

pub fn random_cowordism<R: Rng>(rng: &mut R, source: &Boundary, target: &Boundary, cfg: &RandomConfig) -> Option<Cowordism> {
    let body = random_multiword(rng, &target.tensor(&source.dual()), cfg)?;
    Cowordism::new(source.clone(), target.clone(), body).ok()
}

/// A random target boundary for which cowordisms out of `source` exist.
pub fn random_target<R: Rng>(rng: &mut R, source: &Boundary, max_len: usize) -> Boundary {
    random_boundary_with_excess(rng, excess(source), max_len)
}

/// A random cowordism out of `source` with a random compatible target.
pub fn random_from<R: Rng>(rng: &mut R, source: &Boundary, max_len: usize, cfg: &RandomConfig) -> Cowordism {
    let target = random_target(rng, source, max_len);
    random_cowordism(rng, source, &target, cfg).expect("balanced by construction")
}

/// A random cowordism with both boundaries of at most `max_len` points.
pub fn random_any<R: Rng>(rng: &mut R, max_len: usize, cfg: &RandomConfig) -> Cowordism {
    let source = random_boundary(rng, max_len);
    random_from(rng, &source, max_len, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_is_reproducible_and_valid() {
        let cfg = RandomConfig::default();
        let a: Vec<Cowordism> = {
            let mut rng = seeded(42);
            (0..50).map(|_| random_any(&mut rng, 6, &cfg)).collect()
        };
        let b: Vec<Cowordism> = {
            let mut rng = seeded(42);
            (0..50).map(|_| random_any(&mut rng, 6, &cfg)).collect()
        };
        assert_eq!(a, b);
        for c in &a {
            assert!(c.body().check().is_ok());
            assert!(c.source().len() <= 6);
        }
    }

    #[test]
    fn excess_is_respected() {
        let mut rng = seeded(1);
        for e in -3..=3 {
            let b = random_boundary_with_excess(&mut rng, e, 6);
            assert_eq!(excess(&b), e);
        }
    }
}
