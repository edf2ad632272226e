use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Synthesizes `n_synthetic` minority points by interpolating between a random
/// minority point and one of its `k` nearest minority neighbours.
///
/// `k` is clamped to `minority.len() - 1`; neighbour ties resolve by index.
pub fn smote(minority: &[Vec<f64>], k: usize, n_synthetic: usize, seed: u64) -> Result<Vec<Vec<f64>>> {
    if n_synthetic == 0 {
        return Ok(Vec::new());
    }
    let m = minority.len();
    if m < 2 {
        return Err(Error::CannotInterpolate(m));
    }
    let k = k.clamp(1, m - 1);
    let neighbours: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            let mut others: Vec<(f64, usize)> = (0..m)
                .filter(|&j| j != i)
                .map(|j| (sq_dist(&minority[i], &minority[j]), j))
                .collect();
            others.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
            others.into_iter().take(k).map(|(_, j)| j).collect()
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n_synthetic);
    for _ in 0..n_synthetic {
        let p = rng.random_range(0..m);
        let q = neighbours[p][rng.random_range(0..k)];
        let lambda: f64 = rng.random();
        out.push(
            minority[p]
                .iter()
                .zip(&minority[q])
                .map(|(a, b)| a + lambda * (b - a))
                .collect(),
        );
    }
    Ok(out)
}
