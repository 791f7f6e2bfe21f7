//! Timing harness comparing the recurrence chain with direct Horner reduction.

use std::hint::black_box;
use std::time::Instant;

use recdiv_core::{inverse_t, mod_direct, reduce_verdict, Lcg, Modulus, Result};

pub const MAX_DIGITS: usize = 1_000_000;
pub const CSV_HEADER: &str =
    "modulus,chunk,input_digits,trials,mean_steps,mean_ns_recurrence,mean_ns_oracle";

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub digits: usize,
    pub chunks: Vec<u32>,
    pub modulus: Modulus,
    pub trials: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub modulus: u64,
    pub chunk: u32,
    pub input_digits: usize,
    pub trials: u64,
    pub mean_steps: f64,
    pub mean_ns_recurrence: f64,
    pub mean_ns_oracle: f64,
}

impl BenchRow {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{:.2},{:.1},{:.1}",
            self.modulus,
            self.chunk,
            self.input_digits,
            self.trials,
            self.mean_steps,
            self.mean_ns_recurrence,
            self.mean_ns_oracle
        )
    }
}

/// One row per chunk size. Every chunk sees the same inputs: the generator is
/// reseeded with `seed` for each row.
pub fn run(config: &BenchConfig) -> Result<Vec<BenchRow>> {
    config
        .chunks
        .iter()
        .map(|&chunk| {
            let mult = inverse_t(config.modulus, chunk)?;
            let mut rng = Lcg::new(config.seed);
            let mut total_steps = 0u64;
            let mut ns_recurrence = 0u128;
            let mut ns_oracle = 0u128;
            for _ in 0..config.trials {
                let n = rng.digits(config.digits);

                let start = Instant::now();
                let summary = black_box(reduce_verdict(black_box(&n), &mult));
                ns_recurrence += start.elapsed().as_nanos();

                let start = Instant::now();
                let residue = black_box(mod_direct(black_box(&n), config.modulus));
                ns_oracle += start.elapsed().as_nanos();

                assert_eq!(
                    summary.divisible,
                    residue == 0,
                    "recurrence and Horner disagree"
                );
                total_steps += summary.steps as u64;
            }
            let trials = config.trials as f64;
            Ok(BenchRow {
                modulus: config.modulus.get(),
                chunk,
                input_digits: config.digits,
                trials: config.trials,
                mean_steps: total_steps as f64 / trials,
                mean_ns_recurrence: ns_recurrence as f64 / trials,
                mean_ns_oracle: ns_oracle as f64 / trials,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(chunks: Vec<u32>) -> BenchConfig {
        BenchConfig {
            digits: 200,
            chunks,
            modulus: Modulus::new(13).unwrap(),
            trials: 3,
            seed: 99,
        }
    }

    #[test]
    fn steps_shrink_with_chunk() {
        let rows = run(&config(vec![1, 2, 4])).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows[0].mean_steps > rows[1].mean_steps);
        assert!(rows[1].mean_steps > rows[2].mean_steps);
        for row in &rows {
            assert!(row.mean_ns_recurrence >= 0.0 && row.mean_ns_oracle >= 0.0);
        }
    }

    #[test]
    fn csv_line_format() {
        let row = BenchRow {
            modulus: 7,
            chunk: 4,
            input_digits: 1000,
            trials: 5,
            mean_steps: 249.0,
            mean_ns_recurrence: 1234.56,
            mean_ns_oracle: 10.0,
        };
        assert_eq!(row.csv_line(), "7,4,1000,5,249.00,1234.6,10.0");
        assert_eq!(
            CSV_HEADER.split(',').count(),
            row.csv_line().split(',').count()
        );
    }
}
