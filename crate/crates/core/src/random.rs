//! Seeded random formulas for property tests and benchmarks.

use rand::Rng;

use crate::boolcore::{Cube, Dnf, Literal, Polarity, VarId};

/// A cube over `A1..An`; each variable is left out, or fixed with either
/// polarity, with probability roughly `1 - density`, `density / 2`,
/// `density / 2`.
pub fn random_cube<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Cube {
    let mut cube = Cube::top();
    for k in 1..=n as u32 {
        if rng.random_bool(density) {
            let polarity = if rng.random_bool(0.5) {
                Polarity::Positive
            } else {
                Polarity::Negative
            };
            cube = cube.with(Literal::new(VarId::new(k).expect("k >= 1"), polarity));
        }
    }
    cube
}

/// Up to `max_cubes` random cubes (possibly zero, duplicates dropped).
pub fn random_dnf<R: Rng + ?Sized>(rng: &mut R, n: usize, max_cubes: usize) -> Dnf {
    let count = rng.random_range(0..=max_cubes);
    let density = rng.random_range(0.2..0.9);
    (0..count).map(|_| random_cube(rng, n, density)).collect()
}
