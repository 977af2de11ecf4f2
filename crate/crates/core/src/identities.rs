//! Checkers for the class-number summation identities and for each step of
//! the argument connecting them, returning structured pass/fail evidence.
//!
//! The headline identity is `3 * sum_{t^2 < p} H_w(t^2 - p) = p - 2` for
//! every prime `p`. Note the right side: `(p-2)/3` is usually not a whole
//! number, which is fine because `H_w` itself takes fractional values; all
//! comparisons happen exactly in twelfths.
//!
//! Proof-step checkers cover the classical companion
//! `sum_{t^2 < 4p} H_w(t^2 - 4p) = 2p`, the Montgomery census agreement
//! `|S_M(p, t)| = 3(p-1) H_w((t^2 - 4p)/4)`, the mass formula
//! `(p-1)(p-2) = sum_t |S_M(p, t)|`, the reindexing between the `t^2 < 4p`
//! and `t^2 < p` summation ranges, and the term-wise vanishing of the
//! opposite-parity terms.

use crate::exactmath::{is_prime, Twelfth};
use crate::hurwitz::{HurwitzCache, HurwitzSource};
use crate::montgomery::{trace_census, trace_discriminant};

/// Which identity a report speaks about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    Theorem1,
    Classical2p,
    Lemma1Census,
    Reindex,
    Vanishing,
    MassFormula,
}

impl IdentityKind {
    /// Stable machine-readable identifier (used in CSV/JSON reports).
    pub fn id(self) -> &'static str {
        match self {
            IdentityKind::Theorem1 => "theorem1",
            IdentityKind::Classical2p => "classical2p",
            IdentityKind::Lemma1Census => "lemma1_census",
            IdentityKind::Reindex => "reindex",
            IdentityKind::Vanishing => "vanishing",
            IdentityKind::MassFormula => "mass_formula",
        }
    }
}

impl std::fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.id())
    }
}

/// One verified equation: `pass` holds exactly when `lhs == rhs` as twelfths.
///
/// For the per-trace checks (census, vanishing) a failing report carries the
/// first offending comparison rather than an aggregate, so the failing trace
/// value is visible in the numbers themselves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub prime: u64,
    pub identity: IdentityKind,
    pub lhs: Twelfth,
    pub rhs: Twelfth,
    pub pass: bool,
}

impl IdentityReport {
    pub fn compare(prime: u64, identity: IdentityKind, lhs: Twelfth, rhs: Twelfth) -> Self {
        IdentityReport {
            prime,
            identity,
            lhs,
            rhs,
            pass: lhs == rhs,
        }
    }
}

/// Mass formula: the census counts add up to `(p-1)(p-2)`, the number of
/// non-singular parameter pairs. Does not involve `H_w` at all.
pub fn check_mass_formula(p: u64) -> IdentityReport {
    assert!(is_prime(p) && p > 3, "check_mass_formula: bad prime {p}");
    let census = trace_census(p);
    IdentityReport::compare(
        p,
        IdentityKind::MassFormula,
        Twelfth::from_integer(census.total() as i64),
        Twelfth::from_integer((p as i64 - 1) * (p as i64 - 2)),
    )
}

/// Identity checker with a pluggable `H_w` source.
///
/// A fresh [`Verifier`] carries a private [`HurwitzCache`], so sweeping many
/// primes reuses class numbers across overlapping trace ranges; batch
/// drivers run one verifier per worker. Substituting another source swaps
/// the `H_w` convention everywhere at once, which is how the fault drill
/// demonstrates that a wrong convention actually trips the checks.
pub struct Verifier<S: HurwitzSource = HurwitzCache> {
    source: S,
}

impl Verifier<HurwitzCache> {
    pub fn new() -> Self {
        Verifier {
            source: HurwitzCache::new(),
        }
    }
}

impl Default for Verifier<HurwitzCache> {
    fn default() -> Self {
        Verifier::new()
    }
}

impl<S: HurwitzSource> Verifier<S> {
    pub fn with_source(source: S) -> Self {
        Verifier { source }
    }

    fn hw(&mut self, delta: i64) -> Twelfth {
        self.source.hurwitz(delta)
    }

    /// `sum_{t^2 < p} H_w(t^2 - p)`, exactly.
    ///
    /// Any wider `t` range would sum the same value: the extra terms have
    /// `t^2 - p >= 0`, where the total extension of `H_w` is 0 (or -1/12
    /// only when `p` is a perfect square, which a prime never is).
    pub fn theorem1_sum(&mut self, p: u64) -> Twelfth {
        assert!(is_prime(p), "theorem1_sum: {p} is not prime");
        let bound = (p - 1).isqrt() as i64; // |t| <= bound  iff  t^2 < p
        let mut sum = Twelfth::ZERO;
        for t in -bound..=bound {
            sum += self.hw(t * t - p as i64);
        }
        sum
    }

    /// `sum_{t^2 < p} H_w(t^2 - p) = (p-2)/3`.
    pub fn check_theorem1(&mut self, p: u64) -> IdentityReport {
        let lhs = self.theorem1_sum(p);
        // (p-2)/3 in twelfths is 4(p-2)
        let rhs = Twelfth::from_twelfths(4 * (p as i64 - 2));
        IdentityReport::compare(p, IdentityKind::Theorem1, lhs, rhs)
    }

    /// `sum_{t^2 < 4p} H_w(t^2 - 4p) = 2p`.
    pub fn check_classical(&mut self, p: u64) -> IdentityReport {
        assert!(is_prime(p), "check_classical: {p} is not prime");
        let bound = (4 * p - 1).isqrt() as i64;
        let mut lhs = Twelfth::ZERO;
        for t in -bound..=bound {
            lhs += self.hw(t * t - 4 * p as i64);
        }
        IdentityReport::compare(
            p,
            IdentityKind::Classical2p,
            lhs,
            Twelfth::from_integer(2 * p as i64),
        )
    }

    /// Census agreement `|S_M(p, t)| = 3(p-1) H_w((t^2-4p)/4)` for every
    /// trace with `t^2 < 4p`, plus the mass formula over the whole census.
    ///
    /// A failing report carries the first mismatching (count, prediction)
    /// pair; a passing one carries the total mass on both sides.
    pub fn check_lemma1(&mut self, p: u64) -> IdentityReport {
        assert!(is_prime(p) && p > 3, "check_lemma1: bad prime {p}");
        let census = trace_census(p);
        let scale = 3 * (p as i64 - 1);
        let bound = (4 * p - 1).isqrt() as i64;
        for t in -bound..=bound {
            let observed = Twelfth::from_integer(census.count(t) as i64);
            let predicted = match trace_discriminant(p, t) {
                Some(delta) => self.hw(delta) * scale,
                None => Twelfth::ZERO,
            };
            if observed != predicted {
                return IdentityReport::compare(p, IdentityKind::Lemma1Census, observed, predicted);
            }
        }
        IdentityReport::compare(
            p,
            IdentityKind::Lemma1Census,
            Twelfth::from_integer(census.total() as i64),
            Twelfth::from_integer((p as i64 - 1) * (p as i64 - 2)),
        )
    }

    /// The reindexing step: the census-side sum over traces `t = p+1 (mod 4)`
    /// with `t^2 < 4p` of `H_w((t^2-4p)/4)` equals the sum over `t` of the
    /// surviving parity (odd for `p = 1 (mod 4)`, even for `p = 3 (mod 4)`)
    /// with `t^2 < p` of `H_w(t^2 - p)`. Both sides are evaluated
    /// independently, term by term.
    pub fn check_reindex(&mut self, p: u64) -> IdentityReport {
        assert!(is_prime(p) && p > 3, "check_reindex: bad prime {p}");
        let census_bound = (4 * p - 1).isqrt() as i64;
        let mut lhs = Twelfth::ZERO;
        for t in -census_bound..=census_bound {
            if let Some(delta) = trace_discriminant(p, t) {
                lhs += self.hw(delta);
            }
        }
        let surviving_parity = if p % 4 == 1 { 1 } else { 0 };
        let bound = (p - 1).isqrt() as i64;
        let mut rhs = Twelfth::ZERO;
        for t in -bound..=bound {
            if t.rem_euclid(2) == surviving_parity {
                rhs += self.hw(t * t - p as i64);
            }
        }
        IdentityReport::compare(p, IdentityKind::Reindex, lhs, rhs)
    }

    /// The vanishing step, term by term: every `H_w(t^2 - p)` with `t` of
    /// the discarded parity (even for `p = 1 (mod 4)`, odd for `p = 3 (mod
    /// 4)`) is individually zero, because `t^2 - p` then lands in a residue
    /// class mod 4 where every square-divisor quotient has weight zero.
    pub fn check_vanishing(&mut self, p: u64) -> IdentityReport {
        assert!(is_prime(p) && p > 3, "check_vanishing: bad prime {p}");
        let discarded_parity = if p % 4 == 1 { 0 } else { 1 };
        let bound = (p - 1).isqrt() as i64;
        for t in -bound..=bound {
            if t.rem_euclid(2) == discarded_parity {
                let term = self.hw(t * t - p as i64);
                if !term.is_zero() {
                    return IdentityReport::compare(
                        p,
                        IdentityKind::Vanishing,
                        term,
                        Twelfth::ZERO,
                    );
                }
            }
        }
        IdentityReport::compare(p, IdentityKind::Vanishing, Twelfth::ZERO, Twelfth::ZERO)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::primes_below;
    use crate::hurwitz::hurwitz_class_number;

    #[test]
    fn theorem1_sum_fixed_values() {
        let mut v = Verifier::new();
        assert_eq!(v.theorem1_sum(5), Twelfth::from_integer(1));
        assert_eq!(v.theorem1_sum(2), Twelfth::ZERO);
        assert_eq!(v.theorem1_sum(3), Twelfth::from_twelfths(4)); // 1/3
        assert_eq!(v.theorem1_sum(13), Twelfth::from_twelfths(44)); // 11/3
    }

    #[test]
    fn theorem1_example_term_by_term() {
        // p = 5: H_w(-1) + H_w(-4) + H_w(-5) + H_w(-4) + H_w(-1) = 1
        let terms: Vec<Twelfth> = (-2i64..=2)
            .map(|t| hurwitz_class_number(t * t - 5))
            .collect();
        assert_eq!(
            terms,
            vec![
                Twelfth::ZERO,
                Twelfth::from_twelfths(6),
                Twelfth::ZERO,
                Twelfth::from_twelfths(6),
                Twelfth::ZERO,
            ]
        );
        assert_eq!(terms.into_iter().sum::<Twelfth>(), Twelfth::from_integer(1));
    }

    #[test]
    fn theorem1_holds_for_small_primes() {
        let mut v = Verifier::new();
        for p in primes_below(2000) {
            let report = v.check_theorem1(p);
            assert!(report.pass, "theorem1 failed at p={p}: {report:?}");
            assert_eq!(report.lhs.numerator() * 3, 12 * (p as i64 - 2));
        }
    }

    #[test]
    fn theorem1_holds_at_the_ten_thousandth_prime() {
        let report = Verifier::new().check_theorem1(104_729);
        assert!(report.pass);
        assert_eq!(report.lhs, Twelfth::from_twelfths(4 * 104_727));
    }

    #[test]
    fn classical_fixed_values() {
        let mut v = Verifier::new();
        let r2 = v.check_classical(2);
        assert!(r2.pass);
        assert_eq!(r2.lhs, Twelfth::from_integer(4));
        let r5 = v.check_classical(5);
        assert!(r5.pass);
        assert_eq!(r5.lhs, Twelfth::from_integer(10));
        let r3 = v.check_classical(3);
        assert!(r3.pass);
        assert_eq!(r3.lhs, Twelfth::from_integer(6));
    }

    #[test]
    fn classical_holds_for_small_primes() {
        let mut v = Verifier::new();
        for p in primes_below(1000) {
            assert!(v.check_classical(p).pass, "classical failed at p={p}");
        }
    }

    #[test]
    fn lemma1_holds_for_small_primes() {
        let mut v = Verifier::new();
        for p in primes_below(100).into_iter().filter(|&p| p > 3) {
            let report = v.check_lemma1(p);
            assert!(report.pass, "lemma1 failed at p={p}: {report:?}");
            assert_eq!(
                report.lhs,
                Twelfth::from_integer((p as i64 - 1) * (p as i64 - 2))
            );
        }
    }

    #[test]
    fn mass_formula_holds_for_small_primes() {
        for p in primes_below(100).into_iter().filter(|&p| p > 3) {
            assert!(check_mass_formula(p).pass, "mass formula failed at p={p}");
        }
    }

    #[test]
    fn reindex_fixed_value() {
        // p = 5: both sides are H_w(-4) + H_w(-4) = 1
        let mut v = Verifier::new();
        let report = v.check_reindex(5);
        assert!(report.pass);
        assert_eq!(report.lhs, Twelfth::from_integer(1));
        assert_eq!(report.rhs, Twelfth::from_integer(1));
    }

    #[test]
    fn reindex_and_vanishing_hold_for_small_primes() {
        let mut v = Verifier::new();
        for p in primes_below(150).into_iter().filter(|&p| p > 3) {
            assert!(v.check_reindex(p).pass, "reindex failed at p={p}");
            assert!(v.check_vanishing(p).pass, "vanishing failed at p={p}");
        }
    }

    #[test]
    fn vanishing_is_term_wise() {
        // p = 13: discarded parity is even, terms H_w(-13), H_w(-9) at
        // t = 0, +-2; all arguments are 3 mod 4 and vanish individually.
        for t in [-2i64, 0, 2] {
            assert!(hurwitz_class_number(t * t - 13).is_zero());
        }
        assert!(Verifier::new().check_vanishing(13).pass);
    }

    #[test]
    fn report_pass_tracks_equality() {
        let eq = IdentityReport::compare(
            5,
            IdentityKind::Theorem1,
            Twelfth::from_integer(1),
            Twelfth::from_integer(1),
        );
        assert!(eq.pass);
        let ne = IdentityReport::compare(
            5,
            IdentityKind::Theorem1,
            Twelfth::from_integer(1),
            Twelfth::from_integer(2),
        );
        assert!(!ne.pass);
    }

    #[test]
    fn identity_ids_are_stable() {
        assert_eq!(IdentityKind::Theorem1.id(), "theorem1");
        assert_eq!(IdentityKind::Classical2p.id(), "classical2p");
        assert_eq!(IdentityKind::Lemma1Census.id(), "lemma1_census");
        assert_eq!(IdentityKind::Reindex.id(), "reindex");
        assert_eq!(IdentityKind::Vanishing.id(), "vanishing");
        assert_eq!(IdentityKind::MassFormula.id(), "mass_formula");
        assert_eq!(IdentityKind::Theorem1.to_string(), "theorem1");
    }

    /// An off-by-one-twelfth corruption of H_w at a single argument.
    struct Corrupted;

    impl HurwitzSource for Corrupted {
        fn hurwitz(&mut self, delta: i64) -> Twelfth {
            let honest = hurwitz_class_number(delta);
            if delta == -4 {
                honest + Twelfth::from_twelfths(1)
            } else {
                honest
            }
        }
    }

    #[test]
    fn checks_catch_a_corrupted_source() {
        let mut v = Verifier::with_source(Corrupted);
        // H_w(-4) enters theorem1 at p=5 (twice, at t = +-1)
        let report = v.check_theorem1(5);
        assert!(!report.pass);
        assert_eq!(report.lhs, Twelfth::from_twelfths(14));
        assert_eq!(report.rhs, Twelfth::from_twelfths(12));
        // and the census prediction at p=5, t = +-2
        let report = v.check_lemma1(5);
        assert!(!report.pass);
        assert!(report.lhs != report.rhs);
    }

    #[test]
    #[should_panic(expected = "not prime")]
    fn theorem1_rejects_composites() {
        Verifier::new().check_theorem1(4);
    }

    #[test]
    #[should_panic(expected = "bad prime")]
    fn lemma1_rejects_tiny_primes() {
        Verifier::new().check_lemma1(3);
    }
}
