//! Exact computation of class numbers of imaginary quadratic orders and the
//! identities that tie them to Montgomery curves over prime fields.
//!
//! Everything here is integer arithmetic. Class-number values live in the
//! fixed-denominator type [`Twelfth`] (multiples of 1/12), so identity checks
//! are exact integer comparisons with no rounding anywhere.
//!
//! The main pieces:
//!
//! * [`exactmath`] — primality, factorization, square divisors, Legendre
//!   symbol, and the `Twelfth` value type.
//! * [`qforms`] — class numbers `h(d)` by enumeration of reduced primitive
//!   positive-definite binary quadratic forms, and the weighted variant
//!   `h_w(d)` (1/3 at -3, 1/2 at -4).
//! * [`hurwitz`] — the Kronecker-Hurwitz class number `H_w(D)` as a
//!   square-divisor sum of `h_w`, with a memoization cache for batch sweeps.
//! * [`montgomery`] — point counts of `By^2 = x^3 + Ax^2 + x` over `F_p`, the
//!   full `(A, B)` trace census, and its closed-form prediction
//!   `3(p-1) H_w((t^2-4p)/4)`.
//! * [`identities`] — checkers for the summation identities
//!   `sum_{t^2<p} H_w(t^2-p) = (p-2)/3` and `sum_{t^2<4p} H_w(t^2-4p) = 2p`,
//!   the census agreement, and the reindexing/vanishing steps that connect
//!   them, each returning a structured pass/fail report.

pub mod exactmath;
pub mod hurwitz;
pub mod identities;
pub mod montgomery;
pub mod qforms;

pub use exactmath::Twelfth;
pub use hurwitz::{hurwitz_class_number, HurwitzCache, HurwitzSource};
pub use identities::{IdentityKind, IdentityReport, Verifier};
pub use montgomery::{trace_census, CurveParams, TraceCensus};
pub use qforms::{class_number, weighted_class_number};
