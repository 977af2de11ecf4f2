//! Montgomery curves `By^2 = x^3 + Ax^2 + x` over `F_p`: point counts, the
//! full `(A, B)` trace census, and its closed-form prediction.
//!
//! For fixed `A`, the count of a curve depends on `B` only through the
//! quadratic character: `|M_{A,B}| = p + 1 + chi(B) * S_A` where
//! `S_A = sum_x chi(x^3 + Ax^2 + x)`. The census therefore needs one
//! character sum per `A`, with the `(p-1)/2` residue choices of `B` landing
//! on trace `-S_A` and the `(p-1)/2` non-residues on `+S_A`.

use std::collections::BTreeMap;
use std::error::Error;
use std::fmt;

use crate::exactmath::{is_prime, legendre_symbol, mul_mod, Twelfth};
use crate::hurwitz::hurwitz_class_number;

/// Parameters `(p, A, B)` of a non-singular Montgomery curve: `p` an odd
/// prime above 3, `A, B` in `[0, p)` with `B(A^2 - 4) != 0 (mod p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurveParams {
    p: u64,
    a: u64,
    b: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveError {
    NonPrimeModulus(u64),
    ModulusTooSmall(u64),
    CoefficientOutOfRange {
        name: &'static str,
        value: u64,
        p: u64,
    },
    Singular {
        a: u64,
        b: u64,
    },
}

impl fmt::Display for CurveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveError::NonPrimeModulus(p) => write!(f, "modulus {p} is not prime"),
            CurveError::ModulusTooSmall(p) => {
                write!(f, "modulus {p} must be a prime greater than 3")
            }
            CurveError::CoefficientOutOfRange { name, value, p } => {
                write!(f, "coefficient {name}={value} is outside [0, {p})")
            }
            CurveError::Singular { a, b } => {
                write!(
                    f,
                    "B(A^2-4) = 0 (mod p) for A={a}, B={b}: curve is singular"
                )
            }
        }
    }
}

impl Error for CurveError {}

impl CurveParams {
    pub fn new(p: u64, a: u64, b: u64) -> Result<CurveParams, CurveError> {
        if !is_prime(p) {
            return Err(CurveError::NonPrimeModulus(p));
        }
        if p <= 3 {
            return Err(CurveError::ModulusTooSmall(p));
        }
        if a >= p {
            return Err(CurveError::CoefficientOutOfRange {
                name: "A",
                value: a,
                p,
            });
        }
        if b >= p {
            return Err(CurveError::CoefficientOutOfRange {
                name: "B",
                value: b,
                p,
            });
        }
        if b == 0 || mul_mod(a, a, p) == 4 % p {
            return Err(CurveError::Singular { a, b });
        }
        Ok(CurveParams { p, a, b })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// Number of points over `F_p`, including the point at infinity.
    ///
    /// Equals `p + 1 + chi(B) * S_A`; each `x` contributes `1 + chi(f(x)/B)`
    /// affine points (the `f(x) = 0` roots contribute exactly the one point
    /// `y = 0` through `chi(0) = 0`). Always divisible by 4 and within the
    /// Hasse bound.
    pub fn point_count(&self) -> u64 {
        let chi_b = legendre_symbol(self.b as i64, self.p) as i64;
        let count = self.p as i64 + 1 + chi_b * character_sum(self.p, self.a);
        debug_assert!(
            count > 0 && count % 4 == 0,
            "count {count} not divisible by 4"
        );
        count as u64
    }

    /// Trace of Frobenius `t = p + 1 - |M_{A,B}(F_p)|`.
    pub fn trace(&self) -> i64 {
        self.p as i64 + 1 - self.point_count() as i64
    }
}

/// Character values chi(0..p) tabulated by marking squares; one pass of
/// modular squarings instead of an Euler exponentiation per lookup.
struct ChiTable {
    p: u64,
    vals: Vec<i8>,
}

impl ChiTable {
    fn new(p: u64) -> ChiTable {
        // keeps every i64 cast downstream exact; the O(p) table is the real
        // practical limit long before this
        assert!(p < (1 << 61), "field size {p} out of supported range");
        let mut vals = vec![-1i8; p as usize];
        vals[0] = 0;
        let mut x = 1u64;
        while x <= (p - 1) / 2 {
            vals[mul_mod(x, x, p) as usize] = 1;
            x += 1;
        }
        ChiTable { p, vals }
    }

    fn chi(&self, x: u64) -> i64 {
        self.vals[x as usize] as i64
    }

    /// `S_A = sum_x chi(x^3 + Ax^2 + x)`.
    fn curve_character_sum(&self, a: u64) -> i64 {
        let p = self.p;
        let mut sum = 0i64;
        for x in 0..p {
            // f(x) = x * (x^2 + Ax + 1)
            let x2 = mul_mod(x, x, p);
            let inner = ((x2 as u128 + mul_mod(a, x, p) as u128 + 1) % p as u128) as u64;
            sum += self.chi(mul_mod(x, inner, p));
        }
        sum
    }
}

/// The exact integer sum of `legendre_symbol(x^3 + Ax^2 + x, p)` over all
/// `x` in `F_p`. Panics unless `p` is an odd prime.
pub fn character_sum(p: u64, a: u64) -> i64 {
    assert!(
        p % 2 == 1 && is_prime(p),
        "character_sum: {p} is not an odd prime"
    );
    ChiTable::new(p).curve_character_sum(a % p)
}

/// How many `(A, B)` pairs realize each trace over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceCensus {
    p: u64,
    counts: BTreeMap<i64, u64>,
}

impl TraceCensus {
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Pairs realizing trace `t`; 0 when the trace does not occur.
    pub fn count(&self, t: i64) -> u64 {
        self.counts.get(&t).copied().unwrap_or(0)
    }

    /// Occurring traces and their counts, in ascending trace order.
    pub fn traces(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.counts.iter().map(|(&t, &n)| (t, n))
    }

    /// Total number of non-singular parameter pairs; always `(p-1)(p-2)`.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

/// The full trace census over `F_p`: one character sum per admissible `A`,
/// then `(p-1)/2` curves per twist class. Panics unless `p` is a prime
/// greater than 3.
pub fn trace_census(p: u64) -> TraceCensus {
    assert!(is_prime(p), "trace_census: {p} is not prime");
    assert!(p > 3, "trace_census: p must exceed 3, got {p}");

    let table = ChiTable::new(p);
    let half = (p - 1) / 2;
    let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
    for a in 0..p {
        if mul_mod(a, a, p) == 4 % p {
            continue; // A = +-2: singular for every B
        }
        let s = table.curve_character_sum(a);
        debug_assert!(
            s * s < 4 * p as i64,
            "Hasse violation: S_{a} = {s} for p={p}"
        );
        debug_assert_eq!((p as i64 + 1 - s).rem_euclid(4), 0);
        debug_assert_eq!((p as i64 + 1 + s).rem_euclid(4), 0);
        // chi(B) = -1 gives count p+1-S_A (trace S_A), chi(B) = +1 the mirror.
        *counts.entry(s).or_insert(0) += half;
        *counts.entry(-s).or_insert(0) += half;
    }
    TraceCensus { p, counts }
}

/// The quarter discriminant `(t^2 - 4p) / 4` when `t` is an admissible trace
/// for `p` (that is, `4 | p+1-t` and `t^2 < 4p`), `None` otherwise.
///
/// Admissibility forces `t = p+1 (mod 4)` with `p` odd, so `t` is even and
/// the division by 4 is exact.
pub fn trace_discriminant(p: u64, t: i64) -> Option<i64> {
    let p = p as i64;
    if (p + 1 - t).rem_euclid(4) == 0 && t * t < 4 * p {
        Some((t * t - 4 * p) / 4)
    } else {
        None
    }
}

/// Predicted census cardinality: `3(p-1) H_w((t^2-4p)/4)` for admissible `t`
/// and 0 otherwise. The result is always a whole number, which is asserted.
pub fn predicted_census_count(p: u64, t: i64) -> Twelfth {
    assert!(
        is_prime(p) && p > 3,
        "predicted_census_count: bad prime {p}"
    );
    match trace_discriminant(p, t) {
        Some(delta) => {
            let predicted = hurwitz_class_number(delta) * (3 * (p as i64 - 1));
            assert!(
                predicted.is_integer(),
                "prediction for p={p}, t={t} is not integral: {predicted}"
            );
            predicted
        }
        None => Twelfth::ZERO,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::primes_below;

    /// Counts points the slow way: every (x, y) pair plus infinity.
    fn exhaustive_point_count(c: &CurveParams) -> u64 {
        let (p, a, b) = (c.p(), c.a(), c.b());
        let mut count = 1u64;
        for x in 0..p {
            let x2 = mul_mod(x, x, p);
            let fx = (mul_mod(x2, x, p) + mul_mod(a, x2, p) + x) % p;
            for y in 0..p {
                if mul_mod(b, mul_mod(y, y, p), p) == fx {
                    count += 1;
                }
            }
        }
        count
    }

    /// Census the slow way: point-count every non-singular pair.
    fn exhaustive_census(p: u64) -> BTreeMap<i64, u64> {
        let mut counts = BTreeMap::new();
        for a in 0..p {
            for b in 1..p {
                if let Ok(c) = CurveParams::new(p, a, b) {
                    let t = p as i64 + 1 - exhaustive_point_count(&c) as i64;
                    *counts.entry(t).or_insert(0) += 1;
                }
            }
        }
        counts
    }

    #[test]
    fn character_sum_fixed_values() {
        // x^3 + x over F_5 hits (0, 2, 0, 0, 3): chi values (0, -1, 0, 0, -1).
        assert_eq!(character_sum(5, 0), -2);
        // x^3 + x^2 + x over F_5 hits (0, 3, 4, 4, 4): chi (0, -1, 1, 1, 1).
        assert_eq!(character_sum(5, 1), 2);
        assert_eq!(character_sum(7, 0), 0); // chi(-1) = -1 pairs x with -x
        assert_eq!(character_sum(7, 3), 4);
    }

    #[test]
    fn character_sum_matches_legendre_term_by_term() {
        for p in [5u64, 7, 11, 13, 31] {
            for a in 0..p {
                let direct: i64 = (0..p as i64)
                    .map(|x| legendre_symbol(x * x * x + a as i64 * x * x + x, p) as i64)
                    .sum();
                assert_eq!(character_sum(p, a), direct, "p={p} A={a}");
            }
        }
    }

    #[test]
    fn chi_table_matches_legendre_symbol() {
        for p in [5u64, 7, 97, 101, 199] {
            let table = ChiTable::new(p);
            for x in 0..p {
                assert_eq!(
                    table.chi(x),
                    legendre_symbol(x as i64, p) as i64,
                    "p={p} x={x}"
                );
            }
        }
    }

    #[test]
    fn point_count_fixed_values() {
        assert_eq!(CurveParams::new(5, 1, 1).unwrap().point_count(), 8);
        assert_eq!(CurveParams::new(5, 1, 2).unwrap().point_count(), 4);
        assert_eq!(CurveParams::new(5, 1, 1).unwrap().trace(), -2);
        assert_eq!(CurveParams::new(5, 1, 2).unwrap().trace(), 2);
    }

    #[test]
    fn point_count_matches_exhaustive_enumeration_for_small_fields() {
        for p in [5u64, 7, 11, 13] {
            for a in 0..p {
                for b in 1..p {
                    if let Ok(c) = CurveParams::new(p, a, b) {
                        assert_eq!(
                            c.point_count(),
                            exhaustive_point_count(&c),
                            "p={p} A={a} B={b}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn point_count_matches_exhaustive_enumeration_on_random_curves() {
        // deterministic xorshift sampling of 100 valid parameter sets
        let primes: Vec<u64> = primes_below(102).into_iter().filter(|&p| p > 3).collect();
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut step = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut found = 0;
        while found < 100 {
            let p = primes[(step() % primes.len() as u64) as usize];
            let a = step() % p;
            let b = step() % p;
            if let Ok(c) = CurveParams::new(p, a, b) {
                let count = c.point_count();
                assert_eq!(count, exhaustive_point_count(&c), "p={p} A={a} B={b}");
                assert_eq!(count % 4, 0, "4 must divide the order: p={p} A={a} B={b}");
                let t = p as i64 + 1 - count as i64;
                assert!(t * t < 4 * p as i64, "Hasse: p={p} A={a} B={b}");
                found += 1;
            }
        }
    }

    #[test]
    fn curve_params_validation() {
        assert_eq!(
            CurveParams::new(6, 1, 1),
            Err(CurveError::NonPrimeModulus(6))
        );
        assert_eq!(
            CurveParams::new(3, 1, 1),
            Err(CurveError::ModulusTooSmall(3))
        );
        assert_eq!(
            CurveParams::new(5, 5, 1),
            Err(CurveError::CoefficientOutOfRange {
                name: "A",
                value: 5,
                p: 5
            })
        );
        assert_eq!(
            CurveParams::new(5, 1, 7),
            Err(CurveError::CoefficientOutOfRange {
                name: "B",
                value: 7,
                p: 5
            })
        );
        assert_eq!(
            CurveParams::new(5, 1, 0),
            Err(CurveError::Singular { a: 1, b: 0 })
        );
        assert_eq!(
            CurveParams::new(5, 2, 1),
            Err(CurveError::Singular { a: 2, b: 1 })
        );
        assert_eq!(
            CurveParams::new(5, 3, 1),
            Err(CurveError::Singular { a: 3, b: 1 })
        );
        assert!(CurveParams::new(5, 1, 1).is_ok());
    }

    #[test]
    fn census_fixed_values() {
        let c5 = trace_census(5);
        assert_eq!(c5.traces().collect::<Vec<_>>(), vec![(-2, 6), (2, 6)]);
        let c7 = trace_census(7);
        assert_eq!(
            c7.traces().collect::<Vec<_>>(),
            vec![(-4, 6), (0, 18), (4, 6)]
        );
        assert_eq!(c7.count(0), 18);
        assert_eq!(c7.count(1), 0);
    }

    #[test]
    fn census_matches_per_curve_enumeration() {
        for p in [5u64, 7, 11, 13] {
            let fast = trace_census(p);
            let slow = exhaustive_census(p);
            assert_eq!(fast.counts, slow, "census mismatch at p={p}");
        }
    }

    #[test]
    fn census_structure_invariants() {
        for p in primes_below(100).into_iter().filter(|&p| p > 3) {
            let census = trace_census(p);
            assert_eq!(census.total(), (p - 1) * (p - 2), "mass at p={p}");
            for (t, n) in census.traces() {
                assert!(t * t < 4 * p as i64, "Hasse key t={t} at p={p}");
                assert_eq!((p as i64 + 1 - t).rem_euclid(4), 0, "t={t} at p={p}");
                assert_eq!(census.count(-t), n, "twist symmetry t={t} at p={p}");
            }
        }
    }

    #[test]
    fn census_agrees_with_prediction_for_small_primes() {
        for p in primes_below(62).into_iter().filter(|&p| p > 3) {
            let census = trace_census(p);
            let bound = (4 * p).isqrt() as i64 + 1;
            for t in -bound..=bound {
                assert_eq!(
                    Twelfth::from_integer(census.count(t) as i64),
                    predicted_census_count(p, t),
                    "p={p} t={t}"
                );
            }
        }
    }

    #[test]
    fn predicted_census_fixed_values() {
        assert_eq!(predicted_census_count(5, 2), Twelfth::from_integer(6));
        assert_eq!(predicted_census_count(5, 1), Twelfth::ZERO); // 4 does not divide 5+1-1
        assert_eq!(predicted_census_count(7, 0), Twelfth::from_integer(18));
        assert_eq!(predicted_census_count(7, 8), Twelfth::ZERO); // t^2 > 4p
    }

    #[test]
    fn trace_discriminant_admissibility() {
        assert_eq!(trace_discriminant(5, 2), Some(-4));
        assert_eq!(trace_discriminant(5, -2), Some(-4));
        assert_eq!(trace_discriminant(5, 1), None);
        assert_eq!(trace_discriminant(5, 6), None); // 36 > 20
        assert_eq!(trace_discriminant(7, 0), Some(-7));
        assert_eq!(trace_discriminant(7, 4), Some(-3));
    }

    #[test]
    #[should_panic(expected = "not prime")]
    fn census_rejects_composites() {
        trace_census(9);
    }

    #[test]
    #[should_panic(expected = "must exceed 3")]
    fn census_rejects_tiny_primes() {
        trace_census(3);
    }
}
