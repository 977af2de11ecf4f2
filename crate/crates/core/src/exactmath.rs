//! Integer utilities and the exact fixed-denominator rational type that holds
//! every class-number value in this crate.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Greatest common divisor.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test for the full `u64` range.
///
/// Miller-Rabin with the witness set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31,
/// 37}, which is known to be exact for all inputs below 3.3 * 10^24 and in
/// particular for every 64-bit integer. No probabilistic caveat applies.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n == w {
            return true;
        }
        if n.is_multiple_of(w) {
            return false;
        }
    }

    // n - 1 = 2^s * d with d odd
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;

    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes strictly below `bound`, ascending (sieve of Eratosthenes).
pub fn primes_below(bound: u64) -> Vec<u64> {
    if bound <= 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n];
    let mut primes = Vec::new();
    for i in 2..n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j < n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// The first `count` primes, ascending.
pub fn first_primes(count: usize) -> Vec<u64> {
    let mut primes = Vec::with_capacity(count);
    let mut n = 2u64;
    while primes.len() < count {
        if is_prime(n) {
            primes.push(n);
        }
        n += if n == 2 { 1 } else { 2 };
    }
    primes
}

/// Legendre symbol (a | p) for an odd prime p, by Euler's criterion.
///
/// Returns 0 when p divides a, 1 when a is a nonzero square mod p, and -1
/// otherwise. Panics when `p` is even or composite.
pub fn legendre_symbol(a: i64, p: u64) -> i32 {
    assert!(
        p > 2 && p % 2 == 1,
        "legendre_symbol: modulus {p} is not odd"
    );
    assert!(is_prime(p), "legendre_symbol: modulus {p} is not prime");
    let r = (a as i128).rem_euclid(p as i128) as u64;
    if r == 0 {
        return 0;
    }
    let e = pow_mod(r, (p - 1) / 2, p);
    if e == 1 {
        1
    } else {
        debug_assert_eq!(e, p - 1);
        -1
    }
}

/// Prime factorization of a positive integer, as (prime, exponent) pairs with
/// strictly increasing primes and exponents >= 1. The factorization of 1 is
/// empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    prime_powers: Vec<(u64, u32)>,
}

impl Factorization {
    /// Factors `n` by trial division. Panics when `n` is 0.
    //
    // Trial division is instant at the |D| < 4*10^5 scale the verification
    // sweeps reach; Pollard rho would be the upgrade path for larger inputs.
    pub fn of(n: u64) -> Factorization {
        assert!(n != 0, "Factorization::of(0) is undefined");
        let mut rest = n;
        let mut prime_powers = Vec::new();
        let mut d = 2u64;
        while d * d <= rest {
            if rest.is_multiple_of(d) {
                let mut e = 0u32;
                while rest.is_multiple_of(d) {
                    rest /= d;
                    e += 1;
                }
                prime_powers.push((d, e));
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if rest > 1 {
            prime_powers.push((rest, 1));
        }
        Factorization { prime_powers }
    }

    pub fn prime_powers(&self) -> &[(u64, u32)] {
        &self.prime_powers
    }

    /// The factored value, reassembled.
    pub fn value(&self) -> u64 {
        self.prime_powers.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

/// The positive integers d with d^2 dividing |n|, sorted ascending.
///
/// Always contains 1. Panics when `n` is 0 (every square divides 0).
pub fn square_divisors(n: i64) -> Vec<u64> {
    assert!(n != 0, "square_divisors(0) is undefined");
    let f = Factorization::of(n.unsigned_abs());
    // d^2 | n  iff  d divides the "square root part" prod p^(e/2).
    let mut divisors = vec![1u64];
    for &(p, e) in f.prime_powers() {
        let reps = e / 2;
        if reps == 0 {
            continue;
        }
        let base_len = divisors.len();
        let mut power = 1u64;
        for _ in 0..reps {
            power *= p;
            for i in 0..base_len {
                divisors.push(divisors[i] * power);
            }
        }
    }
    divisors.sort_unstable();
    divisors
}

/// An exact rational with fixed denominator 12: the value is `num / 12`.
///
/// Weighted class numbers take values in (1/12)Z (the weights are 1/3 and
/// 1/2, and the zero-argument extension is -1/12), and that set is closed
/// under the sums this crate forms. Keeping the denominator fixed makes every
/// equality test an integer comparison.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Twelfth {
    num: i64,
}

impl Twelfth {
    pub const ZERO: Twelfth = Twelfth { num: 0 };

    /// The value `num / 12`.
    pub const fn from_twelfths(num: i64) -> Twelfth {
        Twelfth { num }
    }

    /// The integer `n`, i.e. `12n / 12`.
    pub const fn from_integer(n: i64) -> Twelfth {
        Twelfth { num: 12 * n }
    }

    /// Numerator over the fixed denominator 12.
    pub const fn numerator(self) -> i64 {
        self.num
    }

    pub const fn is_zero(self) -> bool {
        self.num == 0
    }

    /// True iff the value is a whole number.
    pub const fn is_integer(self) -> bool {
        self.num % 12 == 0
    }

    pub const fn to_integer(self) -> Option<i64> {
        if self.num % 12 == 0 {
            Some(self.num / 12)
        } else {
            None
        }
    }
}

impl Add for Twelfth {
    type Output = Twelfth;
    fn add(self, rhs: Twelfth) -> Twelfth {
        Twelfth {
            num: self.num + rhs.num,
        }
    }
}

impl AddAssign for Twelfth {
    fn add_assign(&mut self, rhs: Twelfth) {
        self.num += rhs.num;
    }
}

impl Sub for Twelfth {
    type Output = Twelfth;
    fn sub(self, rhs: Twelfth) -> Twelfth {
        Twelfth {
            num: self.num - rhs.num,
        }
    }
}

impl SubAssign for Twelfth {
    fn sub_assign(&mut self, rhs: Twelfth) {
        self.num -= rhs.num;
    }
}

impl Neg for Twelfth {
    type Output = Twelfth;
    fn neg(self) -> Twelfth {
        Twelfth { num: -self.num }
    }
}

/// Integer scaling.
impl Mul<i64> for Twelfth {
    type Output = Twelfth;
    fn mul(self, rhs: i64) -> Twelfth {
        Twelfth {
            num: self.num * rhs,
        }
    }
}

impl Mul<Twelfth> for i64 {
    type Output = Twelfth;
    fn mul(self, rhs: Twelfth) -> Twelfth {
        rhs * self
    }
}

impl Sum for Twelfth {
    fn sum<I: Iterator<Item = Twelfth>>(iter: I) -> Twelfth {
        iter.fold(Twelfth::ZERO, |acc, t| acc + t)
    }
}

/// Renders in lowest terms: `0`, `2`, `1/2`, `-1/12`, `11/3`, ...
impl fmt::Display for Twelfth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = gcd(self.num.unsigned_abs(), 12) as i64;
        let num = self.num / g;
        let den = 12 / g;
        if den == 1 {
            write!(f, "{num}")
        } else {
            write!(f, "{num}/{den}")
        }
    }
}

impl fmt::Debug for Twelfth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Twelfth({}/12)", self.num)
    }
}
