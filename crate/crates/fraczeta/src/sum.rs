//! Deterministic compensated summation.
//!
//! Long piece sums are accumulated with Kahan compensation in fixed chunks:
//! every chunk is summed left to right, and the chunk partials are then
//! combined left to right. Only the *computation* of chunk partials is
//! farmed out to rayon, so the result is bit-identical for any thread
//! count and identical between the parallel build and the sequential
//! fallback (`--no-default-features`).

use num_complex::Complex64;

/// Fixed chunk length of the reduction tree. Part of the determinism
/// contract: changing it changes rounding, so it is not configurable.
const CHUNK: usize = 2048;

/// Kahan (compensated) accumulator over complex values. Addition and
/// subtraction of `Complex64` are componentwise, so this is exactly two
/// independent real Kahan sums.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: Complex64,
    comp: Complex64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: Complex64) {
        let y = value - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        self.sum
    }
}

/// A compensated sum of complex terms plus the plain sum of the reported
/// term magnitudes (used by callers to bound accumulated rounding).
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct TermSum {
    pub value: Complex64,
    pub magnitude: f64,
}

fn chunk_partial<F>(term: &F, start: usize, end: usize) -> TermSum
where
    F: Fn(usize) -> (Complex64, f64),
{
    let mut acc = KahanSum::new();
    let mut mag = 0.0;
    for i in start..end {
        let (v, m) = term(i);
        acc.add(v);
        mag += m;
    }
    TermSum {
        value: acc.value(),
        magnitude: mag,
    }
}

fn combine(partials: impl IntoIterator<Item = TermSum>) -> TermSum {
    let mut acc = KahanSum::new();
    let mut mag = 0.0;
    for p in partials {
        acc.add(p.value);
        mag += p.magnitude;
    }
    TermSum {
        value: acc.value(),
        magnitude: mag,
    }
}

/// Sequential reference path. `sum_terms` must agree with this bit for bit.
pub fn sum_terms_serial<F>(count: usize, term: F) -> TermSum
where
    F: Fn(usize) -> (Complex64, f64) + Sync,
{
    let chunks = count.div_ceil(CHUNK);
    combine((0..chunks).map(|c| {
        let start = c * CHUNK;
        chunk_partial(&term, start, (start + CHUNK).min(count))
    }))
}

/// Sums `term(0) + ... + term(count - 1)` with the fixed-order chunked
/// reduction, evaluating chunks in parallel when the `parallel` feature
/// is enabled.
#[cfg(feature = "parallel")]
pub fn sum_terms<F>(count: usize, term: F) -> TermSum
where
    F: Fn(usize) -> (Complex64, f64) + Sync,
{
    use rayon::prelude::*;

    if count <= CHUNK {
        return chunk_partial(&term, 0, count);
    }
    let chunks = count.div_ceil(CHUNK);
    let partials: Vec<TermSum> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK;
            chunk_partial(&term, start, (start + CHUNK).min(count))
        })
        .collect();
    combine(partials)
}

#[cfg(not(feature = "parallel"))]
pub fn sum_terms<F>(count: usize, term: F) -> TermSum
where
    F: Fn(usize) -> (Complex64, f64) + Sync,
{
    sum_terms_serial(count, term)
}

/// Ordered map over `0..count`, parallel when the feature is enabled.
/// Output order is index order regardless of execution order.
#[cfg(feature = "parallel")]
pub(crate) fn map_indexed<T, F>(count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..count).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indexed<T, F>(count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..count).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn term(i: usize) -> (Complex64, f64) {
        let x = (i as f64 + 1.0).recip();
        let v = Complex64::new(x, -0.5 * x * x);
        (v, v.norm())
    }

    #[test]
    fn parallel_and_serial_paths_are_bit_identical() {
        for count in [0, 1, 7, CHUNK - 1, CHUNK, CHUNK + 1, 10 * CHUNK + 13] {
            let a = sum_terms(count, term);
            let b = sum_terms_serial(count, term);
            assert_eq!(a.value.re.to_bits(), b.value.re.to_bits(), "count {count}");
            assert_eq!(a.value.im.to_bits(), b.value.im.to_bits(), "count {count}");
            assert_eq!(
                a.magnitude.to_bits(),
                b.magnitude.to_bits(),
                "count {count}"
            );
        }
    }

    #[test]
    fn kahan_beats_naive_on_harmonic_sum() {
        let n = 200_000;
        let kahan = sum_terms(n, term).value.re;
        let naive: f64 = (0..n).map(|i| (i as f64 + 1.0).recip()).sum();
        // Reference: pairwise f128-free trick, sum in reverse (ascending values).
        let reference: f64 = (0..n).rev().map(|i| (i as f64 + 1.0).recip()).sum();
        assert!((kahan - reference).abs() <= (naive - reference).abs() + 1e-13);
    }

    #[test]
    fn empty_sum_is_zero() {
        let s = sum_terms(0, term);
        assert_eq!(s.value, Complex64::new(0.0, 0.0));
        assert_eq!(s.magnitude, 0.0);
    }
}
