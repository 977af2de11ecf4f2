//! Class numbers of imaginary quadratic orders by exhaustive enumeration of
//! reduced, primitive, positive-definite binary quadratic forms.
//!
//! A form `ax^2 + bxy + cy^2` of discriminant `d = b^2 - 4ac < 0` is reduced
//! when `-a < b <= a <= c`, with `b >= 0` whenever `a = c` or `|b| = a`.
//! Every equivalence class of positive-definite forms contains exactly one
//! reduced representative, so `h(d)` is the number of reduced primitive forms
//! of discriminant `d`.

use crate::exactmath::{gcd, Twelfth};

/// A positive-definite binary quadratic form `ax^2 + bxy + cy^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadForm {
    a: i64,
    b: i64,
    c: i64,
}

impl QuadForm {
    /// Panics unless `a > 0`, `c > 0`, and the discriminant is negative.
    pub fn new(a: i64, b: i64, c: i64) -> QuadForm {
        assert!(a > 0 && c > 0, "({a},{b},{c}) is not positive definite");
        assert!(
            b * b - 4 * a * c < 0,
            "({a},{b},{c}) has nonnegative discriminant"
        );
        QuadForm { a, b, c }
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    /// `-a < b <= a <= c`, and `b >= 0` when `a = c` or `|b| = a`.
    pub fn is_reduced(&self) -> bool {
        let QuadForm { a, b, c } = *self;
        -a < b && b <= a && a <= c && (b >= 0 || (a != c && b.abs() != a))
    }

    /// gcd(a, b, c) = 1.
    pub fn is_primitive(&self) -> bool {
        gcd(
            gcd(self.a.unsigned_abs(), self.b.unsigned_abs()),
            self.c.unsigned_abs(),
        ) == 1
    }
}

fn assert_valid_discriminant(d: i64) {
    assert!(d < 0, "class_number: discriminant {d} is not negative");
    assert!(
        d.rem_euclid(4) <= 1,
        "class_number: {d} = {} (mod 4) is not a discriminant",
        d.rem_euclid(4)
    );
}

/// The class number `h(d)` of the quadratic order of discriminant `d`.
///
/// Counts reduced primitive positive-definite forms of discriminant `d`.
/// Requires `d < 0` and `d = 0, 1 (mod 4)`; use [`weighted_class_number`] for
/// arbitrary integers. Always at least 1 (the principal form).
pub fn class_number(d: i64) -> u64 {
    assert_valid_discriminant(d);
    let mut count = 0u64;
    let mut a = 1i64;
    // a <= c forces 3a^2 <= 4ac - b^2 = |d|
    while 3 * a * a <= -d {
        let b_parity = d.rem_euclid(2);
        let mut b = -a + 1;
        if b.rem_euclid(2) != b_parity {
            b += 1;
        }
        while b <= a {
            let numer = b * b - d;
            if numer % (4 * a) == 0 {
                let c = numer / (4 * a);
                if c >= a
                    && (b >= 0 || (c != a && b != -a))
                    && gcd(gcd(a as u64, b.unsigned_abs()), c as u64) == 1
                {
                    count += 1;
                }
            }
            b += 2;
        }
        a += 1;
    }
    debug_assert!(count >= 1, "no reduced form found for d={d}");
    count
}

/// All reduced primitive forms of discriminant `d`, ordered by (a, b).
pub fn reduced_forms(d: i64) -> Vec<QuadForm> {
    assert_valid_discriminant(d);
    let mut forms = Vec::new();
    let mut a = 1i64;
    while 3 * a * a <= -d {
        for b in -a + 1..=a {
            if b.rem_euclid(2) != d.rem_euclid(2) {
                continue;
            }
            let numer = b * b - d;
            if numer % (4 * a) != 0 {
                continue;
            }
            let c = numer / (4 * a);
            let form = QuadForm { a, b, c };
            if c >= a && form.is_reduced() && form.is_primitive() {
                forms.push(form);
            }
        }
        a += 1;
    }
    forms
}

/// The weighted class number `h_w(d)`: `h(-3)/3 = 1/3`, `h(-4)/2 = 1/2`,
/// `h(d)` for other valid negative discriminants, and 0 everywhere else.
///
/// Total on all integers. The zero cases are `d >= 0` and `d = 2, 3 (mod 4)`;
/// some sources leave the latter undefined, this crate fixes them to zero so
/// that square-divisor sums over arbitrary integers are well defined.
pub fn weighted_class_number(d: i64) -> Twelfth {
    match d {
        -3 => Twelfth::from_twelfths(4), // h(-3)/3 = 1/3
        -4 => Twelfth::from_twelfths(6), // h(-4)/2 = 1/2
        d if d < 0 && d.rem_euclid(4) <= 1 => Twelfth::from_integer(class_number(d) as i64),
        _ => Twelfth::ZERO,
    }
}
