//! Univariate views used by the integrator and the root finders.
//!
//! `UniPoly` treats one of the three variables as the main variable with
//! rational-function coefficients in the others (the field F); `QPoly`
//! is a dense univariate polynomial over plain rationals.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::gcd::poly_gcd;
use crate::poly::{Poly, Var};
use crate::rat::{positive_divisors, Rat};
use crate::ratfun::RatFun;

/// Univariate polynomial in `var` over the field of rational functions
/// of the remaining variables. Coefficient index = exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    pub var: Var,
    coeffs: Vec<RatFun>,
}

impl UniPoly {
    pub fn new(var: Var, mut coeffs: Vec<RatFun>) -> UniPoly {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        for c in &coeffs {
            debug_assert!(!c.contains_var(var), "coefficient contains the main variable");
        }
        UniPoly { var, coeffs }
    }

    pub fn zero(var: Var) -> UniPoly {
        UniPoly { var, coeffs: Vec::new() }
    }

    pub fn constant(var: Var, c: RatFun) -> UniPoly {
        UniPoly::new(var, alloc::vec![c])
    }

    pub fn from_poly(p: &Poly, var: Var) -> UniPoly {
        let coeffs = p
            .coeffs_in(var)
            .into_iter()
            .map(RatFun::from_poly)
            .collect();
        UniPoly::new(var, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> RatFun {
        self.coeffs.get(k).cloned().unwrap_or_else(RatFun::zero)
    }

    pub fn coeffs(&self) -> &[RatFun] {
        &self.coeffs
    }

    pub fn leading(&self) -> RatFun {
        self.coeffs.last().cloned().unwrap_or_else(RatFun::zero)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) + &other.coeff(k));
        }
        UniPoly::new(self.var, out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) - &other.coeff(k));
        }
        UniPoly::new(self.var, out)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.var);
        }
        let mut out = alloc::vec![RatFun::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::new(self.var, out)
    }

    pub fn scale(&self, c: &RatFun) -> UniPoly {
        UniPoly::new(self.var, self.coeffs.iter().map(|k| k * c).collect())
    }

    /// Euclidean division over the coefficient field.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!divisor.is_zero(), "univariate division by zero");
        let d = divisor.degree().unwrap();
        let lc = divisor.leading();
        let mut rem = self.clone();
        let mut quo = alloc::vec![RatFun::zero(); self.coeffs.len().saturating_sub(d)];
        while let Some(rd) = rem.degree() {
            if rd < d {
                break;
            }
            let factor = &rem.leading() / &lc;
            let shift = rd - d;
            quo[shift] = &quo[shift] + &factor;
            // rem -= factor * v^shift * divisor
            let mut new_coeffs = rem.coeffs.clone();
            for (j, b) in divisor.coeffs.iter().enumerate() {
                new_coeffs[shift + j] = &new_coeffs[shift + j] - &(&factor * b);
            }
            // The leading term cancels exactly.
            new_coeffs[rd] = RatFun::zero();
            rem = UniPoly::new(self.var, new_coeffs);
        }
        (UniPoly::new(self.var, quo), rem)
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero(self.var);
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.scale(&Rat::from_integer(BigInt::from(k))));
        }
        UniPoly::new(self.var, out)
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading();
        self.scale(&lc.recip().expect("leading coefficient nonzero"))
    }

    /// Collapse back into a rational function of all variables.
    pub fn to_ratfun(&self) -> RatFun {
        let v = RatFun::var(self.var);
        let mut acc = RatFun::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &v) + c;
        }
        acc
    }

    /// Clear denominators and the content in the main variable, returning
    /// a polynomial primitive with respect to `var` defining the same
    /// roots.
    pub fn to_primitive_poly(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        // Common denominator of all coefficients.
        let mut den = Poly::one();
        for c in &self.coeffs {
            let g = poly_gcd(&den, c.den());
            den = &den * &c.den().div_exact(&g).expect("gcd divides");
        }
        let mut out = Poly::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let scaled = (&den * c.num())
                .div_exact(c.den())
                .expect("common denominator");
            let mono = crate::poly::Mono::var(self.var, k as u16);
            out = &out + &scaled.mul_mono(&mono, &Rat::one());
        }
        let (_, primitive) = crate::gcd::content_and_primitive(&out, self.var);
        primitive.normalized()
    }

    /// Gcd over F[var], monic.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let a = self.to_primitive_poly();
        let b = other.to_primitive_poly();
        let g = poly_gcd(&a, &b);
        // Keep only the part that depends on the main variable.
        let (_, primitive) = crate::gcd::content_and_primitive(&g, self.var);
        UniPoly::from_poly(&primitive, self.var).monic()
    }
}

/// Dense univariate polynomial over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<Rat>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> QPoly {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> QPoly {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> QPoly {
        QPoly::new(alloc::vec![Rat::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn derivative(&self) -> QPoly {
        if self.coeffs.len() <= 1 {
            return QPoly::zero();
        }
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        assert!(!divisor.is_zero());
        let d = divisor.degree().unwrap();
        let lc = divisor.leading();
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n < d + 1 {
            return (QPoly::zero(), self.clone());
        }
        let mut quo = alloc::vec![Rat::zero(); n - d];
        for top in (d..n).rev() {
            let factor = &rem[top] / &lc;
            if factor.is_zero() {
                continue;
            }
            let shift = top - d;
            quo[shift] = factor.clone();
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let val = &rem[shift + j] - &(&factor * b);
                rem[shift + j] = val;
            }
        }
        (QPoly::new(quo), QPoly::new(rem))
    }

    /// Divide by the linear factor `(t - root)`; remainder must be zero.
    pub fn deflate(&self, root: &Rat) -> QPoly {
        let divisor = QPoly::new(alloc::vec![-root.clone(), Rat::one()]);
        let (q, r) = self.div_rem(&divisor);
        debug_assert!(r.is_zero(), "deflation by a non-root");
        q
    }

    /// All rational roots with multiplicity (each root repeated), plus a
    /// completeness flag: `false` when the coefficient factorizations hit
    /// the trial-division bound, so roots may have been missed.
    pub fn rational_roots(&self) -> (Vec<Rat>, bool) {
        let mut roots = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return (roots, true);
        }
        // Strip t^k: root 0 with multiplicity k.
        let mut p = self.clone();
        while p.coeff(0).is_zero() && !p.is_zero() {
            roots.push(Rat::zero());
            p = QPoly::new(p.coeffs[1..].to_vec());
        }
        if p.degree().unwrap_or(0) == 0 {
            return (roots, true);
        }
        // Integer-normalize.
        let content = crate::rat::rat_content(p.coeffs.iter());
        let ints: Vec<BigInt> = p
            .coeffs
            .iter()
            .map(|c| {
                let v = c / &content;
                debug_assert!(v.denom().is_one());
                v.numer().clone()
            })
            .collect();
        let a0 = ints.first().cloned().unwrap_or_else(BigInt::zero);
        let an = ints.last().cloned().unwrap_or_else(BigInt::one);
        let (ps, qs) = match (positive_divisors(&a0), positive_divisors(&an)) {
            (Some(ps), Some(qs)) => (ps, qs),
            _ => return (roots, false),
        };
        let mut candidates: Vec<Rat> = Vec::new();
        for num in &ps {
            for den in &qs {
                let g = num.gcd(den);
                let r = Rat::new(num / &g, den / &g);
                if !candidates.contains(&r) {
                    candidates.push(r.clone());
                    candidates.push(-r);
                }
            }
        }
        candidates.sort();
        for c in candidates {
            while p.degree().unwrap_or(0) >= 1 && p.eval(&c).is_zero() {
                roots.push(c.clone());
                p = p.deflate(&c);
            }
        }
        roots.sort();
        (roots, true)
    }

    /// Lagrange interpolation through distinct sample points.
    pub fn interpolate(points: &[(Rat, Rat)]) -> QPoly {
        let mut acc = QPoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            // Basis polynomial prod_{j != i} (t - xj)/(xi - xj)
            let mut basis = QPoly::one();
            let mut denom = Rat::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = basis.mul(&QPoly::new(alloc::vec![-xj.clone(), Rat::one()]));
                denom *= xi - xj;
            }
            let scale = yi / &denom;
            acc = acc.add(&basis.scale(&scale));
        }
        acc
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        QPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = alloc::vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    pub fn scale(&self, c: &Rat) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|k| k * c).collect())
    }

    pub fn monic(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let lc = self.leading();
        self.scale(&(Rat::one() / lc))
    }

    /// Resultant of two univariate rational polynomials (Euclidean
    /// remainder sequence).
    pub fn resultant(&self, other: &QPoly) -> Rat {
        fn go(a: &QPoly, b: &QPoly) -> Rat {
            if a.is_zero() || b.is_zero() {
                return Rat::zero();
            }
            let m = a.degree().unwrap();
            let n = b.degree().unwrap();
            if m == 0 {
                return crate::rat::rat_pow(&a.coeff(0), n as i64);
            }
            if n == 0 {
                return crate::rat::rat_pow(&b.coeff(0), m as i64);
            }
            let (_, r) = a.div_rem(b);
            if r.is_zero() {
                return Rat::zero();
            }
            let k = r.degree().unwrap();
            let sign = if (m * n) % 2 == 1 {
                -Rat::one()
            } else {
                Rat::one()
            };
            let lc = b.leading();
            sign * crate::rat::rat_pow(&lc, (m - k) as i64) * go(b, &r)
        }
        go(self, other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat_frac, rat_i64};

    fn qp(coeffs: &[i64]) -> QPoly {
        QPoly::new(coeffs.iter().map(|&c| rat_i64(c)).collect())
    }

    #[test]
    fn qpoly_roots_with_multiplicity() {
        // (t - 1)^2 (t + 2/3) * 3 = 3t^3 - 4t^2 - t + 2... build directly
        let p = qp(&[1, -2, 1]); // (t-1)^2
        let q = QPoly::new(alloc::vec![rat_frac(2, 3), rat_i64(1)]); // t + 2/3
        let prod = p.mul(&q);
        let (roots, complete) = prod.rational_roots();
        assert!(complete);
        assert_eq!(roots, alloc::vec![rat_frac(-2, 3), rat_i64(1), rat_i64(1)]);
    }

    #[test]
    fn qpoly_no_rational_roots() {
        let p = qp(&[1, 0, 1]); // t^2 + 1
        let (roots, complete) = p.rational_roots();
        assert!(complete);
        assert!(roots.is_empty());
    }

    #[test]
    fn qpoly_resultant_shares_root() {
        // res((t-1)(t-2), (t-1)(t-3)) = 0
        let a = qp(&[-1, 1]).mul(&qp(&[-2, 1]));
        let b = qp(&[-1, 1]).mul(&qp(&[-3, 1]));
        assert!(a.resultant(&b).is_zero());
        // res(t-3, t-5) = 3-5 = -2
        assert_eq!(qp(&[-3, 1]).resultant(&qp(&[-5, 1])), rat_i64(-2));
    }

    #[test]
    fn interpolation_reconstructs() {
        let p = qp(&[2, -3, 1]); // t^2 - 3t + 2
        let pts: Vec<(Rat, Rat)> = (0..3).map(|k| (rat_i64(k), p.eval(&rat_i64(k)))).collect();
        assert_eq!(QPoly::interpolate(&pts), p);
    }

    #[test]
    fn unipoly_division_and_gcd() {
        use crate::poly::Poly;
        let x = Poly::var(Var::X);
        let y = Poly::var(Var::Y);
        // In x over F = Q(y): (x^2 - y^2) / (x - y) = (x + y)
        let num = UniPoly::from_poly(&(&x.pow(2) - &y.pow(2)), Var::X);
        let den = UniPoly::from_poly(&(&x - &y), Var::X);
        let (q, r) = num.div_rem(&den);
        assert!(r.is_zero());
        assert_eq!(q.to_ratfun(), RatFun::from_poly(&x + &y));
        let g = num.gcd(&den);
        assert_eq!(g.to_ratfun(), RatFun::from_poly(&x - &y));
    }
}
