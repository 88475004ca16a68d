//! Seeded inputs shared by the benchmarks.

use jointex_core::random::random_dnf;
use jointex_core::Dnf;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `count` random pairs over `n` variables, the same on every run.
pub fn dnf_pairs(n: usize, max_cubes: usize, count: usize, seed: u64) -> Vec<(Dnf, Dnf)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (
                random_dnf(&mut rng, n, max_cubes),
                random_dnf(&mut rng, n, max_cubes),
            )
        })
        .collect()
}

/// `count` random formulas over `n` variables.
pub fn dnfs(n: usize, max_cubes: usize, count: usize, seed: u64) -> Vec<Dnf> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_dnf(&mut rng, n, max_cubes))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inputs_are_reproducible() {
        assert_eq!(dnf_pairs(6, 4, 10, 1), dnf_pairs(6, 4, 10, 1));
        assert_ne!(dnfs(6, 4, 10, 1), dnfs(6, 4, 10, 2));
    }
}
