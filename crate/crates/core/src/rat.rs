//! Exact rational scalars and small helpers shared across the crate.
//!
//! All symbolic computation in this crate runs over arbitrary-precision
//! rationals. Floating point only appears in the numeric trajectory
//! checks, which convert at the boundary.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// The coefficient field: arbitrary-precision rationals.
pub type Rat = BigRational;

/// Shorthand for a small integer constant.
pub fn rat_i64(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for a small ratio p/q. Panics if `q == 0`.
pub fn rat_frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

/// Raise a rational to a signed integer power.
/// Panics on `0^negative`.
pub fn rat_pow(base: &Rat, exp: i64) -> Rat {
    if exp == 0 {
        return Rat::one();
    }
    let positive = {
        let mut result = Rat::one();
        let mut b = base.clone();
        let mut e = exp.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result *= &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        result
    };
    if exp > 0 {
        positive
    } else {
        assert!(!positive.is_zero(), "rat_pow: zero base with negative exponent");
        Rat::one() / positive
    }
}

/// Exact square root of a rational, if it is a perfect square.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(Rat::zero());
    }
    let num = r.numer().sqrt();
    let den = r.denom().sqrt();
    if &(&num * &num) == r.numer() && &(&den * &den) == r.denom() {
        Some(Rat::new(num, den))
    } else {
        None
    }
}

/// Convert to f64 for the numeric verifier. Values far outside the f64
/// range saturate to infinities, which the caller treats as singular.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Render a rational in the `p` or `p/q` form used by the printer.
pub fn rat_to_string(r: &Rat) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    if r.denom().is_one() {
        let _ = write!(s, "{}", r.numer());
    } else {
        let _ = write!(s, "{}/{}", r.numer(), r.denom());
    }
    s
}

/// Content of a list of rationals: the positive rational `c` such that
/// every `r/c` is an integer and those integers are coprime.
/// Returns 1 for an empty list.
pub fn rat_content<'a, I: Iterator<Item = &'a Rat>>(iter: I) -> Rat {
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    let mut seen = false;
    for r in iter {
        if r.is_zero() {
            continue;
        }
        seen = true;
        num_gcd = num_gcd.gcd(r.numer());
        den_lcm = den_lcm.lcm(r.denom());
    }
    if !seen {
        return Rat::one();
    }
    Rat::new(num_gcd, den_lcm)
}

/// Parse a decimal or integer literal exactly (e.g. `0.5` -> 1/2).
/// Returns None on malformed input.
pub fn rat_from_decimal(text: &str) -> Option<Rat> {
    let (int_part, frac_part) = match text.split_once('.') {
        Some((i, f)) => (i, f),
        None => (text, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: String = [int_part, frac_part].concat();
    let numer: BigInt = digits.parse().ok()?;
    let mut denom = BigInt::one();
    for _ in 0..frac_part.len() {
        denom *= 10;
    }
    Some(Rat::new(numer, denom))
}

/// All positive divisors of `n` (trial division). Returns None when `n`
/// has a prime factor beyond the trial bound, in which case callers fall
/// back to treating the root search as incomplete.
pub fn positive_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    const TRIAL_BOUND: u64 = 1_000_000;
    let mut m = n.abs();
    if m.is_zero() {
        return Some(Vec::new());
    }
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2u32);
    while &(&p * &p) <= &m {
        if p.to_u64().map(|v| v > TRIAL_BOUND).unwrap_or(true) {
            return None;
        }
        if (&m % &p).is_zero() {
            let mut k = 0u32;
            while (&m % &p).is_zero() {
                m /= &p;
                k += 1;
            }
            primes.push((p.clone(), k));
        }
        p += 1;
    }
    if !m.is_one() {
        primes.push((m, 1));
    }
    let mut divisors = alloc::vec![BigInt::one()];
    for (p, k) in primes {
        let mut next = Vec::with_capacity(divisors.len() * (k as usize + 1));
        for d in &divisors {
            let mut pk = BigInt::one();
            for _ in 0..=k {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divisors = next;
    }
    divisors.sort();
    Some(divisors)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_parsing_is_exact() {
        assert_eq!(rat_from_decimal("0.5").unwrap(), rat_frac(1, 2));
        assert_eq!(rat_from_decimal("2.25").unwrap(), rat_frac(9, 4));
        assert_eq!(rat_from_decimal("7").unwrap(), rat_i64(7));
        assert!(rat_from_decimal("").is_none());
        assert!(rat_from_decimal("1.2.3").is_none());
    }

    #[test]
    fn content_of_rationals() {
        let values = [rat_frac(2, 3), rat_frac(4, 9), rat_i64(2)];
        // gcd(2,4,2)/lcm(3,9,1) = 2/9; dividing gives 3, 2, 9: coprime.
        assert_eq!(rat_content(values.iter()), rat_frac(2, 9));
    }

    #[test]
    fn sqrt_detects_squares() {
        assert_eq!(rat_sqrt(&rat_frac(9, 4)), Some(rat_frac(3, 2)));
        assert_eq!(rat_sqrt(&rat_i64(2)), None);
        assert_eq!(rat_sqrt(&rat_i64(-4)), None);
    }

    #[test]
    fn divisor_enumeration() {
        let d = positive_divisors(&BigInt::from(12)).unwrap();
        let want: Vec<BigInt> = [1, 2, 3, 4, 6, 12].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(d, want);
    }

    #[test]
    fn pow_handles_negative_exponents() {
        assert_eq!(rat_pow(&rat_i64(2), -3), rat_frac(1, 8));
        assert_eq!(rat_pow(&rat_frac(2, 3), 2), rat_frac(4, 9));
    }
}
