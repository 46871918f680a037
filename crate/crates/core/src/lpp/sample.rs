use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::matrix::{last_passage, GeomParams, LppMatrix};
use crate::algebra::Rational;
use crate::error::Error;
use crate::parallel::worker_threads;
use crate::shapes::Partition;

/// Trials per independent random stream.
pub const CHUNK: u64 = 1 << 14;

/// Inverse-CDF geometric sampler: `P(k) = (1 - q) q^k`.
fn geometric<R: Rng>(rng: &mut R, q: f64) -> u64 {
    let u: f64 = rng.gen();
    let mut p = 1.0 - q;
    let mut cdf = p;
    let mut k = 0;
    // The cap only matters once the cumulative sum stops moving in floating point.
    while u >= cdf && k < 100_000 {
        p *= q;
        cdf += p;
        k += 1;
    }
    k
}

fn q_table(params: &GeomParams) -> Vec<Vec<f64>> {
    (1..=params.l()).map(|i| (1..=params.n()).map(|j| params.q(i, j).to_f64().unwrap_or(0.0)).collect()).collect()
}

fn sample_with<R: Rng>(q: &[Vec<f64>], rng: &mut R) -> LppMatrix {
    let rows = q.iter().map(|row| row.iter().map(|&qq| geometric(rng, qq)).collect()).collect();
    LppMatrix::from_bottom_rows(rows).expect("rectangular")
}

fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// One geometric matrix from the stream `(seed, 0)`.
pub fn sample(params: &GeomParams, seed: u64) -> LppMatrix {
    sample_with(&q_table(params), &mut stream(seed, 0))
}

/// Monte Carlo estimate of `P(G(n) = λ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonteCarlo {
    pub trials: u64,
    pub hits: u64,
    pub estimate: f64,
    pub std_error: f64,
}

impl MonteCarlo {
    fn from_hits(hits: u64, trials: u64) -> MonteCarlo {
        let p = hits as f64 / trials as f64;
        MonteCarlo { trials, hits, estimate: p, std_error: (p * (1.0 - p) / trials as f64).sqrt() }
    }

    /// `|estimate - exact| / std_error`; infinite when the error is zero and they differ.
    pub fn sigma_distance(&self, exact: &Rational) -> f64 {
        let d = (self.estimate - exact.to_f64().unwrap_or(f64::NAN)).abs();
        if self.std_error == 0.0 {
            return if d == 0.0 { 0.0 } else { f64::INFINITY };
        }
        d / self.std_error
    }

    pub fn to_json(&self) -> Value {
        json!({"trials": self.trials, "hits": self.hits, "estimate": self.estimate, "std_error": self.std_error})
    }
}

/// Hit counting over chunked streams; the stream of chunk `c` is `(seed, c)`,
/// so the result does not depend on the number of threads.
pub fn monte_carlo_threads(lambda: &Partition, params: &GeomParams, trials: u64, seed: u64, threads: usize) -> Result<MonteCarlo, Error> {
    if trials == 0 {
        return Err(Error::InvalidArgument("need at least one trial".into()));
    }
    let q = q_table(params);
    let chunks: Vec<u64> = (0..trials.div_ceil(CHUNK)).collect();
    let counts = crate::parallel::par_map(&chunks, threads, |&c| {
        let mut rng = stream(seed, c);
        let len = CHUNK.min(trials - c * CHUNK);
        let mut hits = 0u64;
        for _ in 0..len {
            let m = sample_with(&q, &mut rng);
            if last_passage(&m, None).map(|g| g == *lambda).unwrap_or(false) {
                hits += 1;
            }
        }
        hits
    });
    Ok(MonteCarlo::from_hits(counts.iter().sum(), trials))
}

/// [`monte_carlo_threads`] with the default worker pool.
pub fn monte_carlo(lambda: &Partition, params: &GeomParams, trials: u64, seed: u64) -> Result<MonteCarlo, Error> {
    monte_carlo_threads(lambda, params, trials, seed, worker_threads())
}
