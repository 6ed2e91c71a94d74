#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use starcrit::{HostSpec, TwoColoring};

/// Seed for randomized tests; override with `STARCRIT_SEED`.
pub fn seed() -> u64 {
    std::env::var("STARCRIT_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0x5eed_2026)
}

pub fn rng(stream: u64) -> StdRng {
    StdRng::seed_from_u64(seed() ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Each host edge red independently with probability `p_red`.
pub fn random_coloring(host: HostSpec, p_red: f64, rng: &mut impl Rng) -> TwoColoring {
    let red: Vec<_> = host
        .edges()
        .into_iter()
        .filter(|_| rng.gen_bool(p_red))
        .collect();
    TwoColoring::from_red_edges(host, red).unwrap()
}

/// The coloring of `host` whose red edges are the set bits of `mask`,
/// indexed by `host.edges()` order.
pub fn coloring_from_mask(host: HostSpec, mask: u64) -> TwoColoring {
    let red = host
        .edges()
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e);
    TwoColoring::from_red_edges(host, red).unwrap()
}
