//! Reduced rational functions and the total-derivative operators.

use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Zero;

use crate::gcd::poly_gcd;
use crate::poly::{Poly, Var};
use crate::rat::Rat;

/// A quotient of polynomials in lowest terms.
///
/// Invariants: `den` is nonzero, primitive with positive leading
/// coefficient, and `gcd(num, den) = 1`. Rational constants therefore
/// always sit in the numerator and `den.is_one()` tests polynomiality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    /// Build and reduce. Panics if `den` is zero; use [`RatFun::checked_new`]
    /// when the denominator is data-dependent.
    pub fn new(num: Poly, den: Poly) -> RatFun {
        Self::checked_new(num, den).expect("division by zero polynomial")
    }

    pub fn checked_new(num: Poly, den: Poly) -> Option<RatFun> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(RatFun {
                num: Poly::zero(),
                den: Poly::one(),
            });
        }
        let g = poly_gcd(&num, &den);
        let mut num = num.div_exact(&g).expect("gcd divides");
        let mut den = den.div_exact(&g).expect("gcd divides");
        // Normalize: den primitive with positive leading coefficient.
        let mut scale = den.content();
        if !den.leading_coeff_sign_positive() {
            scale = -scale;
        }
        den = den.map_coeffs(|c| c / &scale);
        num = num.map_coeffs(|c| c / &scale);
        Some(RatFun { num, den })
    }

    pub fn from_poly(p: Poly) -> RatFun {
        RatFun { num: p, den: Poly::one() }
    }

    pub fn zero() -> RatFun {
        RatFun::from_poly(Poly::zero())
    }

    pub fn one() -> RatFun {
        RatFun::from_poly(Poly::one())
    }

    pub fn constant(c: Rat) -> RatFun {
        RatFun::from_poly(Poly::constant(c))
    }

    pub fn var(v: Var) -> RatFun {
        RatFun::from_poly(Poly::var(v))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn constant_value(&self) -> Option<Rat> {
        if self.is_poly() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.num.contains_var(v) || self.den.contains_var(v)
    }

    pub fn recip(&self) -> Option<RatFun> {
        RatFun::checked_new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rat) -> RatFun {
        if c.is_zero() {
            return RatFun::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, exp: i64) -> Option<RatFun> {
        if exp >= 0 {
            Some(RatFun {
                num: self.num.pow(exp as u32),
                den: self.den.pow(exp as u32),
            })
        } else {
            self.recip().map(|r| RatFun {
                num: r.num.pow((-exp) as u32),
                den: r.den.pow((-exp) as u32),
            })
        }
    }

    /// Exact partial derivative (quotient rule, reduced).
    pub fn partial(&self, v: Var) -> RatFun {
        if self.is_poly() {
            return RatFun::from_poly(self.num.partial(v));
        }
        let num = &(&self.num.partial(v) * &self.den) - &(&self.num * &self.den.partial(v));
        RatFun::new(num, &self.den * &self.den)
    }

    /// Total derivative along solutions: `f_x + y' f_y + phi f_{y'}`.
    pub fn total_d(&self, phi: &RatFun) -> RatFun {
        let fx = self.partial(Var::X);
        let fy = self.partial(Var::Y);
        let fyp = self.partial(Var::Yp);
        &(&fx + &(&RatFun::var(Var::Yp) * &fy)) + &(phi * &fyp)
    }

    /// Exact evaluation; `None` when the denominator vanishes.
    pub fn eval(&self, x: &Rat, y: &Rat, yp: &Rat) -> Option<Rat> {
        let d = self.den.eval(x, y, yp);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x, y, yp) / d)
    }

    pub fn eval_f64(&self, x: f64, y: f64, yp: f64) -> f64 {
        self.num.eval_f64(x, y, yp) / self.den.eval_f64(x, y, yp)
    }

    pub fn subst(&self, v: Var, value: &RatFun) -> RatFun {
        // Substitute into num and den separately via Horner on the
        // univariate view, then divide.
        let sub_poly = |p: &Poly| -> RatFun {
            let coeffs = p.coeffs_in(v);
            let mut acc = RatFun::zero();
            for c in coeffs.iter().rev() {
                acc = &(&acc * value) + &RatFun::from_poly(c.clone());
            }
            acc
        };
        &sub_poly(&self.num) / &sub_poly(&self.den)
    }
}

/// Total derivative of a bare polynomial: returns a rational function
/// since `phi` enters as a factor.
pub fn poly_total_d(p: &Poly, phi: &RatFun) -> RatFun {
    RatFun::from_poly(p.clone()).total_d(phi)
}

/// The denominator-cleared operator `(S_d N^2) D` applied to a polynomial:
/// `S_d N (N (f_x + y' f_y) + M f_{y'})`, always a polynomial.
pub fn script_d(f: &Poly, s_d: &Poly, m: &Poly, n: &Poly) -> Poly {
    let l = &(n * &(&f.partial(Var::X) + &(&Poly::var(Var::Yp) * &f.partial(Var::Y)))) + &(m * &f.partial(Var::Yp));
    &(s_d * n) * &l
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFun::new(num, &self.den * &rhs.den)
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RatFun::new(num, &self.den * &rhs.den)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        // Cross-reduce before multiplying to keep intermediates small.
        let g1 = poly_gcd(&self.num, &rhs.den);
        let g2 = poly_gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap_or_else(|| self.num.clone());
        let d2 = rhs.den.div_exact(&g1).unwrap_or_else(|| rhs.den.clone());
        let n2 = rhs.num.div_exact(&g2).unwrap_or_else(|| rhs.num.clone());
        let d1 = self.den.div_exact(&g2).unwrap_or_else(|| self.den.clone());
        RatFun::new(&n1 * &n2, &d1 * &d2)
    }
}

impl Div for &RatFun {
    type Output = RatFun;
    fn div(self, rhs: &RatFun) -> RatFun {
        let r = rhs.recip().expect("division by zero rational function");
        self * &r
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: self.num.map_coeffs(|c| -c.clone()),
            den: self.den.clone(),
        }
    }
}

impl core::fmt::Display for RatFun {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&crate::render::render_ratfun(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat_i64, rat_frac};

    fn x() -> Poly {
        Poly::var(Var::X)
    }
    fn y() -> Poly {
        Poly::var(Var::Y)
    }
    fn yp() -> Poly {
        Poly::var(Var::Yp)
    }

    #[test]
    fn reduction_and_sign_normalization() {
        // (x^2 y - x^2) / (y - 1) = x^2
        let f = RatFun::new(&(&x().pow(2) * &y()) - &x().pow(2), &y() - &Poly::one());
        assert_eq!(f, RatFun::from_poly(x().pow(2)));
        // Denominator sign: -(y) in den flips into num.
        let g = RatFun::new(x(), -&y());
        assert_eq!(g.den(), &y());
        assert_eq!(g.num(), &-&x());
    }

    #[test]
    fn sum_over_common_denominator() {
        // y'/y + y/y' = (y'^2 + y^2)/(y y')
        let a = RatFun::new(yp(), y());
        let b = RatFun::new(y(), yp());
        let s = &a + &b;
        assert_eq!(s.num(), &(&yp().pow(2) + &y().pow(2)));
        assert_eq!(s.den(), &(&y() * &yp()));
    }

    #[test]
    fn partial_of_quotient() {
        // d/dy' of (x^2 y'^2 + y^2 - 1)/(x^2 y) = 2y'/y
        let m = &(&x().pow(2) * &yp().pow(2)) + &(&y().pow(2) - &Poly::one());
        let n = &x().pow(2) * &y();
        let f = RatFun::new(m, n);
        let d = f.partial(Var::Yp);
        assert_eq!(d, RatFun::new(yp().scale(&rat_i64(2)), y()));
    }

    #[test]
    fn total_derivative_examples() {
        // D[y] = y' for any phi.
        let phi = RatFun::new(-&y(), Poly::one());
        assert_eq!(poly_total_d(&y(), &phi), RatFun::from_poly(yp()));
        // D[y/y'] with phi = -y is 1 + y^2/y'^2.
        let f = RatFun::new(y(), yp());
        let d = f.total_d(&phi);
        let want = &RatFun::one() + &RatFun::new(y().pow(2), yp().pow(2));
        assert_eq!(d, want);
    }

    #[test]
    fn total_derivative_annihilates_known_invariant() {
        // phi = y'(3y'x + y)/(xy); I = y'/(x y^3) is constant on solutions.
        let phi = RatFun::new(
            &yp() * &(&(&yp() * &x()).scale(&rat_i64(3)) + &y()),
            &x() * &y(),
        );
        let inv = RatFun::new(yp(), &x() * &y().pow(3));
        assert!(inv.total_d(&phi).is_zero());
    }

    #[test]
    fn script_d_matches_definition() {
        // f = y', S_d = y', M = -y, N = 1 -> -y y'
        let out = script_d(&yp(), &yp(), &-&y(), &Poly::one());
        assert_eq!(out, -&(&y() * &yp()));
        // f = 1 -> 0
        assert!(script_d(&Poly::one(), &yp(), &-&y(), &Poly::one()).is_zero());
        // f = y, S_d = 1 -> N^2 y'
        let n = &x() + &Poly::one();
        let out = script_d(&y(), &Poly::one(), &-&y(), &n);
        assert_eq!(out, &n.pow(2) * &yp());
    }

    #[test]
    fn substitution_evaluates_consistently() {
        let f = RatFun::new(&x() + &y(), yp());
        let g = f.subst(Var::Yp, &RatFun::new(y(), x()));
        // (x + y)/(y/x) = x(x+y)/y
        assert_eq!(g, RatFun::new(&x() * &(&x() + &y()), y()));
        assert_eq!(
            g.eval(&rat_i64(2), &rat_i64(3), &rat_i64(9)).unwrap(),
            rat_frac(10, 3)
        );
    }
}
