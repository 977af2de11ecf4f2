//! A deliberately wrong weight convention, kept around as a drill target.
//!
//! Plugging [`SkewedConvention`] into a verifier must make the identity
//! checks fail on the first prime whose sum touches a skewed argument; if a
//! run with it ever comes back green, the harness has stopped being able to
//! detect convention drift. Never use this for real answers.

use std::collections::HashMap;

use classnum::exactmath::{square_divisors, Twelfth};
use classnum::qforms::{class_number, weighted_class_number};
use classnum::HurwitzSource;

/// The wrong weight: on `d < 0` with `d = 3 (mod 4)` (where the honest
/// `h_w` is zero) it returns the form count of discriminant `4d` instead,
/// as if the input had been the radicand of a field rather than a
/// discriminant. Everywhere else it is honest.
pub fn skewed_weight(d: i64) -> Twelfth {
    if d < 0 && d.rem_euclid(4) == 3 {
        Twelfth::from_integer(class_number(4 * d) as i64)
    } else {
        weighted_class_number(d)
    }
}

/// The square-divisor sum built on [`skewed_weight`]; same shape as the
/// honest `H_w`, wrong values on any input with a skewed quotient.
pub fn skewed_hurwitz(delta: i64) -> Twelfth {
    if delta > 0 {
        return Twelfth::ZERO;
    }
    if delta == 0 {
        return Twelfth::from_twelfths(-1);
    }
    square_divisors(delta)
        .into_iter()
        .map(|d| skewed_weight(delta / (d * d) as i64))
        .sum()
}

/// Memoizing `HurwitzSource` over the skewed convention.
#[derive(Default)]
pub struct SkewedConvention {
    memo: HashMap<i64, Twelfth>,
}

impl SkewedConvention {
    pub fn new() -> SkewedConvention {
        SkewedConvention::default()
    }
}

impl HurwitzSource for SkewedConvention {
    fn hurwitz(&mut self, delta: i64) -> Twelfth {
        *self
            .memo
            .entry(delta)
            .or_insert_with(|| skewed_hurwitz(delta))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use classnum::hurwitz_class_number;

    #[test]
    fn skew_is_nonzero_on_the_three_class() {
        // honest H_w(-1) = 0; the skew sees h(4 * -1) = h(-4) = 1
        assert_eq!(skewed_hurwitz(-1), Twelfth::from_integer(1));
        assert_ne!(skewed_hurwitz(-1), hurwitz_class_number(-1));
        // -4 is touched through its quotient -4/4 = -1: 1/2 + 1 = 3/2
        assert_eq!(skewed_hurwitz(-4), Twelfth::from_twelfths(18));
        // inputs with no 3-mod-4 quotient stay honest
        for delta in [-3i64, -8, -12, -24, 0, 5] {
            assert_eq!(
                skewed_hurwitz(delta),
                hurwitz_class_number(delta),
                "delta={delta}"
            );
        }
    }

    #[test]
    fn skew_leaks_through_square_divisors() {
        // -9 = 3^2 * -1: the honest sum is h_w(-9) + h_w(-1) = 0; the skew
        // adds h(4 * -9) + h(4 * -1) = h(-36) + h(-4) = 3.
        assert_eq!(hurwitz_class_number(-9), Twelfth::ZERO);
        assert_eq!(skewed_hurwitz(-9), Twelfth::from_integer(3));
    }
}
