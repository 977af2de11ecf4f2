//! The Kronecker-Hurwitz class number `H_w`.
//!
//! For `D < 0`, `H_w(D)` is the sum of `h_w(D/d^2)` over every positive `d`
//! with `d^2 | D`. The function is extended to all integers by `H_w(0) =
//! -1/12` and `H_w(D) = 0` for `D > 0`; the literature usually only defines
//! the negative case, but the total extension keeps batch sweeps well
//! defined on every input. (Both names `H` and `H_w` are used for this same
//! function in the literature; this crate sticks to the weighted reading
//! throughout.)

use std::collections::HashMap;

use crate::exactmath::{square_divisors, Twelfth};
use crate::qforms::weighted_class_number;

/// The Kronecker-Hurwitz class number `H_w(delta)`, total on all integers.
///
/// Nonnegative for every `delta < 0`, and zero exactly on the classes
/// `delta = 2, 3 (mod 4)` there; `-1/12` at zero; zero for positive inputs.
pub fn hurwitz_class_number(delta: i64) -> Twelfth {
    if delta > 0 {
        return Twelfth::ZERO;
    }
    if delta == 0 {
        return Twelfth::from_twelfths(-1);
    }
    square_divisors(delta)
        .into_iter()
        .map(|d| weighted_class_number(delta / (d * d) as i64))
        .sum()
}

/// Anything that can answer `H_w` queries. Batch verifiers are generic over
/// this so a memoizing cache (or a deliberately skewed convention, in fault
/// drills) can stand in for the plain function.
pub trait HurwitzSource {
    fn hurwitz(&mut self, delta: i64) -> Twelfth;
}

/// Memoized `H_w`. Unbounded, populated on demand; intended to live for one
/// verification run, one instance per worker.
#[derive(Default, Clone)]
pub struct HurwitzCache {
    entries: HashMap<i64, Twelfth>,
}

impl HurwitzCache {
    pub fn new() -> HurwitzCache {
        HurwitzCache::default()
    }

    /// `H_w(delta)`, computed at most once per distinct argument.
    pub fn get(&mut self, delta: i64) -> Twelfth {
        *self
            .entries
            .entry(delta)
            .or_insert_with(|| hurwitz_class_number(delta))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl HurwitzSource for HurwitzCache {
    fn hurwitz(&mut self, delta: i64) -> Twelfth {
        self.get(delta)
    }
}
