//! Exact fraction arithmetic for the harmonic index and the max-degree Randic variant.
//!
//! Equality characterizations (col = 2R', col = 2H, R' = 1 on trees) are decided
//! without tolerance, so these values must never pass through floating point.
//! Fractions are kept in lowest terms with a positive denominator. All arithmetic
//! is overflow-checked and panics with context if a value leaves the representable
//! range; for graphs on at most 64 vertices every denominator divides lcm(1..63),
//! which fits an `i128` with room to spare, so in-domain sums never overflow.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

/// An exact rational number. Copyable, totally ordered, hashable.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128, // > 0
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    debug_assert!(a >= 0 && b >= 0);
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    /// Builds `num/den` reduced to lowest terms.
    ///
    /// Panics if `den == 0` or the pair is outside the supported range.
    pub fn new(num: i128, den: i128) -> Rational {
        assert!(den != 0, "rational with zero denominator");
        assert!(
            num > i128::MIN && den > i128::MIN,
            "rational component out of range"
        );
        let sign = if (num < 0) != (den < 0) { -1 } else { 1 };
        let (num, den) = (num.abs(), den.abs());
        let g = gcd(num, den);
        Rational {
            num: sign * (num / g),
            den: den / g,
        }
    }

    pub fn from_integer(value: i128) -> Rational {
        Rational { num: value, den: 1 }
    }

    pub fn numerator(&self) -> i128 {
        self.num
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    fn checked_mul_i128(a: i128, b: i128, what: &str) -> i128 {
        a.checked_mul(b)
            .unwrap_or_else(|| panic!("rational overflow in {what}: {a} * {b}"))
    }

    /// Exact comparison that never overflows: compares integer parts, then
    /// recurses on reciprocals of the fractional parts (Euclid-style).
    fn cmp_exact(&self, other: &Rational) -> Ordering {
        let sign_cmp = (self.num > 0) as i8 - (self.num < 0) as i8;
        let sign_other = (other.num > 0) as i8 - (other.num < 0) as i8;
        match sign_cmp.cmp(&sign_other) {
            Ordering::Equal => {}
            o => return o,
        }
        match sign_cmp {
            0 => Ordering::Equal,
            1 => cmp_nonneg(self.num, self.den, other.num, other.den),
            _ => cmp_nonneg(-other.num, other.den, -self.num, self.den),
        }
    }
}

fn cmp_nonneg(mut a: i128, mut b: i128, mut c: i128, mut d: i128) -> Ordering {
    loop {
        let (q1, r1) = (a / b, a % b);
        let (q2, r2) = (c / d, c % d);
        match q1.cmp(&q2) {
            Ordering::Equal => {}
            o => return o,
        }
        match (r1 == 0, r2 == 0) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            (false, false) => {
                // a/b ? c/d  ==  d/r2 ? b/r1  (comparing reciprocals flips)
                (a, b, c, d) = (d, r2, b, r1);
            }
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Rational) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Rational) -> Ordering {
        self.cmp_exact(other)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        // lcm-based addition keeps intermediates near the magnitude of the result
        let g = gcd(self.den, rhs.den);
        let lcm = Rational::checked_mul_i128(self.den / g, rhs.den, "add");
        let left = Rational::checked_mul_i128(self.num, lcm / self.den, "add");
        let right = Rational::checked_mul_i128(rhs.num, lcm / rhs.den, "add");
        let num = left
            .checked_add(right)
            .unwrap_or_else(|| panic!("rational overflow in add: {left} + {right}"));
        Rational::new(num, lcm)
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        *self = *self + rhs;
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        self + (-rhs)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        // cross-reduce before multiplying
        let g1 = gcd(self.num.abs(), rhs.den);
        let g2 = gcd(rhs.num.abs(), self.den);
        let num = Rational::checked_mul_i128(self.num / g1, rhs.num / g2, "mul");
        let den = Rational::checked_mul_i128(self.den / g2, rhs.den / g1, "mul");
        Rational::new(num, den)
    }
}

impl Mul<i128> for Rational {
    type Output = Rational;
    fn mul(self, rhs: i128) -> Rational {
        self * Rational::from_integer(rhs)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::ZERO, |acc, x| acc + x)
    }
}

impl From<i128> for Rational {
    fn from(value: i128) -> Rational {
        Rational::from_integer(value)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rational({self})")
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_lowest_terms() {
        let r = Rational::new(4, 6);
        assert_eq!((r.numerator(), r.denominator()), (2, 3));
        let r = Rational::new(-4, -6);
        assert_eq!((r.numerator(), r.denominator()), (2, 3));
        let r = Rational::new(4, -6);
        assert_eq!((r.numerator(), r.denominator()), (-2, 3));
        assert_eq!(Rational::new(0, -7), Rational::ZERO);
    }

    #[test]
    fn arithmetic_is_exact() {
        let h = Rational::new(2, 3) + Rational::new(1, 2) + Rational::new(2, 3);
        assert_eq!(h, Rational::new(11, 6));
        assert_eq!(h * 2, Rational::new(11, 3));
        assert_eq!(
            Rational::new(1, 6) - Rational::new(1, 2),
            Rational::new(-1, 3)
        );
        assert_eq!(Rational::new(3, 4) * Rational::new(8, 9), Rational::new(2, 3));
    }

    #[test]
    fn ordering_is_exact() {
        assert!(Rational::new(1, 3) < Rational::new(1, 2));
        assert!(Rational::new(-1, 2) < Rational::new(-1, 3));
        assert!(Rational::new(-1, 2) < Rational::new(1, 1_000_000));
        assert_eq!(
            Rational::new(355, 113).cmp(&Rational::new(710, 226)),
            Ordering::Equal
        );
        // huge reduced fractions where cross-multiplication would overflow
        let a = Rational::new(i128::MAX / 2, i128::MAX / 3);
        let b = Rational::new(i128::MAX / 2 + 1, i128::MAX / 3);
        assert!(a < b);
    }

    #[test]
    fn display_and_serialize() {
        assert_eq!(Rational::new(3, 2).to_string(), "3/2");
        assert_eq!(Rational::new(6, 2).to_string(), "3");
        assert_eq!(Rational::new(-11, 6).to_string(), "-11/6");
        assert_eq!(
            serde_json::to_string(&Rational::new(11, 6)).unwrap(),
            "\"11/6\""
        );
    }

    #[test]
    #[should_panic(expected = "rational overflow")]
    fn overflow_is_reported() {
        let big = Rational::new(i128::MAX, 1);
        let _ = big + big;
    }

    #[test]
    #[should_panic(expected = "zero denominator")]
    fn zero_denominator_rejected() {
        let _ = Rational::new(1, 0);
    }
}
