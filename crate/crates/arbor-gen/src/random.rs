use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use arbor_core::{Edge, Graph};

use crate::error::{GenError, Result};

/// Seeded random graph of degeneracy at most d: vertex v > 1 picks
/// min(d, v-1) distinct earlier neighbors, so 1..n witnesses the bound.
pub fn random_degenerate(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if n < 1 || d < 1 {
        return Err(GenError::Parameter(
            "random_degenerate(n,d) needs n,d >= 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 2..=n {
        let mut earlier: Vec<usize> = (1..v).collect();
        earlier.shuffle(&mut rng);
        for &u in earlier.iter().take(d) {
            edges.push(Edge::new(u, v));
        }
    }
    Ok(Graph::new(n, edges)?)
}

/// Seeded random interval graph on n intervals with distinct integer
/// endpoints; chordal by construction.
pub fn random_interval(n: usize, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(GenError::Parameter("random_interval(n) needs n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut deck: Vec<usize> = (0..2 * n).collect();
    deck.shuffle(&mut rng);
    let intervals: Vec<(usize, usize)> = (0..n)
        .map(|i| {
            let (a, b) = (deck[2 * i], deck[2 * i + 1]);
            (a.min(b), a.max(b))
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = intervals[i];
            let (c, d) = intervals[j];
            if a.max(c) <= b.min(d) {
                edges.push(Edge::new(i + 1, j + 1));
            }
        }
    }
    Ok(Graph::new(n, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use arbor_core::{chordality, degeneracy};

    #[test]
    fn degenerate_samples_respect_bound_and_seed() {
        for seed in 0..10 {
            let g = random_degenerate(50, 2, seed).unwrap();
            assert!(degeneracy(&g).d <= 2);
        }
        let a = random_degenerate(30, 3, 42).unwrap();
        let b = random_degenerate(30, 3, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn interval_samples_are_chordal() {
        for seed in 0..10 {
            let g = random_interval(15, seed).unwrap();
            assert!(chordality(&g).is_chordal());
        }
    }
}
