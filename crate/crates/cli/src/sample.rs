//! Seeded random rank tables.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rankdual_core::{GroundSet, RankTable, Subset};

/// Default rank window for unconstrained samples.
pub const DEFAULT_WINDOW: (i64, i64) = (-3, 8);

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` uniform in `0..=max_n`, `r(∅) = 0`, every other rank uniform in
/// `lo..=hi`.
pub fn random_table(rng: &mut impl Rng, max_n: usize, (lo, hi): (i64, i64)) -> RankTable {
    let n = rng.gen_range(0..=max_n);
    random_table_on(rng, GroundSet::alphabetic(n).expect("max_n checked by caller"), (lo, hi))
}

pub fn random_table_on(rng: &mut impl Rng, ground: GroundSet, (lo, hi): (i64, i64)) -> RankTable {
    let mut first = true;
    RankTable::from_fn(ground, |_| {
        if std::mem::take(&mut first) {
            0
        } else {
            rng.gen_range(lo..=hi)
        }
    })
}

/// Normalized, subcardinal and monotone: each `r(A)` is drawn uniformly
/// between `max r(A − p)` and `|A|`.
pub fn random_monotone(rng: &mut impl Rng, max_n: usize) -> RankTable {
    let n = rng.gen_range(0..=max_n);
    let ground = GroundSet::alphabetic(n).expect("max_n checked by caller");
    let mut values = vec![0i64; 1 << n];
    for m in 1..values.len() {
        let a = Subset(m as u32);
        let lo = a
            .elements()
            .map(|i| values[a.without(i).index()])
            .max()
            .unwrap_or(0);
        values[m] = rng.gen_range(lo..=a.len() as i64);
    }
    RankTable::from_values(ground, values).expect("sized to the ground set")
}

pub fn random_tables(seed: u64, count: usize, max_n: usize, window: (i64, i64)) -> Vec<RankTable> {
    let mut r = rng(seed);
    (0..count).map(|_| random_table(&mut r, max_n, window)).collect()
}

pub fn random_monotone_tables(seed: u64, count: usize, max_n: usize) -> Vec<RankTable> {
    let mut r = rng(seed);
    (0..count).map(|_| random_monotone(&mut r, max_n)).collect()
}
