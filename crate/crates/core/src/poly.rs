//! Sparse multivariate polynomials over exact rationals.
//!
//! The variable set is fixed: `x`, `y`, `y'` plus the reduction constant
//! `C1` (used only when an invariant is solved for `y'`). Terms live in a
//! `BTreeMap` keyed by monomial, so iteration is always in canonical
//! order and printing is deterministic.
//!
//! Canonical monomial order: graded lexicographic with x < y < y' (and
//! C1 below x). The leading term of a polynomial is its maximal monomial
//! under this order.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use alloc::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::rat::{rat_content, rat_pow, rat_to_f64, Rat};

/// Index of a variable in the exponent tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X = 0,
    Y = 1,
    /// The derivative y'.
    Yp = 2,
    /// The symbolic constant of a reduced equation.
    C1 = 3,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::X, Var::Y, Var::Yp, Var::C1];

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Yp => "y'",
            Var::C1 => "C1",
        }
    }
}

/// Packed exponent tuple for (x, y, y', C1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Mono {
    e: [u16; 4],
}

impl Mono {
    pub const ONE: Mono = Mono { e: [0; 4] };

    pub fn var(v: Var, exp: u16) -> Mono {
        let mut e = [0; 4];
        e[v as usize] = exp;
        Mono { e }
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.e[v as usize]
    }

    pub fn total_degree(&self) -> u32 {
        self.e.iter().map(|&k| k as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.e == [0; 4]
    }

    /// Componentwise product, with overflow check (degrees stay small by
    /// construction; blowing past u16 means a runaway computation).
    pub fn mul(&self, other: &Mono) -> Mono {
        let mut e = [0; 4];
        for i in 0..4 {
            e[i] = self.e[i]
                .checked_add(other.e[i])
                .expect("monomial exponent overflow");
        }
        Mono { e }
    }

    /// Componentwise quotient if `other` divides `self`.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut e = [0; 4];
        for i in 0..4 {
            e[i] = self.e[i].checked_sub(other.e[i])?;
        }
        Some(Mono { e })
    }

    pub fn divides(&self, other: &Mono) -> bool {
        (0..4).all(|i| self.e[i] <= other.e[i])
    }

    /// Decrement the exponent of one variable (panics at zero).
    pub fn dec(&self, v: Var) -> Mono {
        let mut e = self.e;
        e[v as usize] = e[v as usize].checked_sub(1).expect("exponent underflow");
        Mono { e }
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        // Graded, then lexicographic with y' > y > x. The C1 exponent is
        // implied once degree and the other three agree.
        self.total_degree()
            .cmp(&other.total_degree())
            .then(self.e[2].cmp(&other.e[2]))
            .then(self.e[1].cmp(&other.e[1]))
            .then(self.e[0].cmp(&other.e[0]))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over `Rat`.
///
/// Invariant: no stored zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, Rat>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::ONE, c);
        }
        Poly { terms }
    }

    pub fn var(v: Var) -> Poly {
        Poly::monomial(Mono::var(v, 1), Rat::one())
    }

    pub fn monomial(m: Mono, c: Rat) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, Rat)>>(iter: I) -> Poly {
        let mut p = Poly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Mono::ONE)
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Mono::ONE))
    }

    pub fn constant_value(&self) -> Option<Rat> {
        if self.is_zero() {
            Some(Rat::zero())
        } else if self.is_constant() {
            Some(self.terms[&Mono::ONE].clone())
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// Highest variable (by significance y' > y > x > C1... i.e. order
    /// used by the gcd recursion) that actually occurs. None when constant.
    pub fn main_var(&self) -> Option<Var> {
        for v in [Var::Yp, Var::Y, Var::X, Var::C1] {
            if self.contains_var(v) {
                return Some(v);
            }
        }
        None
    }

    /// Leading (maximal) term under the canonical order.
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Trailing (minimal) term under the canonical order.
    pub fn trailing(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next()
    }

    pub fn leading_coeff_sign_positive(&self) -> bool {
        self.leading().map(|(_, c)| c.is_positive()).unwrap_or(true)
    }

    pub fn map_coeffs<F: Fn(&Rat) -> Rat>(&self, f: F) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        self.map_coeffs(|k| k * c)
    }

    pub fn mul_mono(&self, m: &Mono, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_terms(self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc * c)))
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact partial derivative.
    pub fn partial(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let k = m.exp(v);
            if k > 0 {
                let mut e = *m;
                e.e[v as usize] -= 1;
                out.add_term(e, c * Rat::from_integer(k.into()));
            }
        }
        out
    }

    /// Substitute exact rational values for a subset of the variables.
    pub fn eval_partial(&self, values: &[(Var, Rat)]) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut e = *m;
            for (v, val) in values {
                let k = e.exp(*v);
                if k > 0 {
                    coeff *= rat_pow(val, k as i64);
                    e.e[*v as usize] = 0;
                }
            }
            out.add_term(e, coeff);
        }
        out
    }

    /// Full exact evaluation at (x, y, y'); C1 must not occur.
    pub fn eval(&self, x: &Rat, y: &Rat, yp: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            debug_assert_eq!(m.exp(Var::C1), 0, "eval with live C1 exponent");
            acc += c
                * rat_pow(x, m.exp(Var::X) as i64)
                * rat_pow(y, m.exp(Var::Y) as i64)
                * rat_pow(yp, m.exp(Var::Yp) as i64);
        }
        acc
    }

    /// Float evaluation for the trajectory checks.
    pub fn eval_f64(&self, x: f64, y: f64, yp: f64) -> f64 {
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            acc += rat_to_f64(c)
                * x.powi(m.exp(Var::X) as i32)
                * y.powi(m.exp(Var::Y) as i32)
                * yp.powi(m.exp(Var::Yp) as i32);
        }
        acc
    }

    /// Substitute a polynomial for one variable.
    pub fn subst(&self, v: Var, value: &Poly) -> Poly {
        // Cache powers of `value` up to the needed degree.
        let max = self.degree_in(v) as usize;
        let mut powers: Vec<Poly> = Vec::with_capacity(max + 1);
        powers.push(Poly::one());
        for k in 1..=max {
            let next = &powers[k - 1] * value;
            powers.push(next);
        }
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let k = m.exp(v) as usize;
            let mut e = *m;
            e.e[v as usize] = 0;
            out = &out + &powers[k].mul_mono(&e, c);
        }
        out
    }

    /// Positive rational `c` such that `self/c` has coprime integer
    /// coefficients. Returns 1 for the zero polynomial.
    pub fn content(&self) -> Rat {
        rat_content(self.terms.values())
    }

    /// Primitive part with positive leading coefficient.
    pub fn normalized(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = self.content();
        if !self.leading_coeff_sign_positive() {
            c = -c;
        }
        self.map_coeffs(|k| k / &c)
    }

    /// View as a univariate polynomial in `v`: coefficient polynomials
    /// indexed by the exponent of `v` (all free of `v`).
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly> {
        let deg = self.degree_in(v) as usize;
        let mut out = alloc::vec![Poly::zero(); deg + 1];
        for (m, c) in &self.terms {
            let k = m.exp(v) as usize;
            let mut e = *m;
            e.e[v as usize] = 0;
            out[k].add_term(e, c.clone());
        }
        out
    }

    /// Rebuild from a `coeffs_in` view.
    pub fn from_coeffs_in(v: Var, coeffs: &[Poly]) -> Poly {
        let mut out = Poly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let m = Mono::var(v, k as u16);
            for (mm, cc) in c.terms() {
                out.add_term(mm.mul(&m), cc.clone());
            }
        }
        out
    }

    /// Exact division: `Some(q)` iff `self == q * divisor`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut q = Poly::zero();
        let mut r = self.clone();
        let (dm, dc) = {
            let (m, c) = divisor.leading().unwrap();
            (*m, c.clone())
        };
        while let Some((rm, rc)) = r.leading() {
            let m = rm.div(&dm)?;
            let c = rc / &dc;
            r = &r - &divisor.mul_mono(&m, &c);
            q.add_term(m, c);
        }
        Some(q)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        !self.is_zero() && other.div_exact(self).is_some()
    }

    /// All variables that occur.
    pub fn vars(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|&v| self.contains_var(v)).collect()
    }

    pub fn to_string_canonical(&self) -> String {
        crate::render::render_poly(self)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.map_coeffs(|c| -c.clone())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        // Iterate the smaller operand on the outside.
        let (a, b) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = Poly::zero();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl core::fmt::Display for Poly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.to_string_canonical())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat_frac, rat_i64};

    pub fn x() -> Poly {
        Poly::var(Var::X)
    }
    pub fn y() -> Poly {
        Poly::var(Var::Y)
    }
    pub fn yp() -> Poly {
        Poly::var(Var::Yp)
    }

    #[test]
    fn monomial_order_is_graded_then_yp_major() {
        let y2 = Mono::var(Var::Y, 2);
        let yp2 = Mono::var(Var::Yp, 2);
        let x3 = Mono::var(Var::X, 3);
        assert!(y2 < yp2);
        assert!(yp2 < x3); // degree wins
        assert!(Mono::var(Var::C1, 1) < Mono::var(Var::X, 1));
    }

    #[test]
    fn product_difference_of_squares() {
        let a = &y() + &Poly::one();
        let b = &y() - &Poly::one();
        let got = &a * &b;
        let want = &(&y() * &y()) - &Poly::one();
        assert_eq!(got, want);
    }

    #[test]
    fn partial_derivative_basic() {
        // d(y^2 + y'^2)/dy' = 2y'
        let p = &(&y() * &y()) + &(&yp() * &yp());
        assert_eq!(p.partial(Var::Yp), yp().scale(&rat_i64(2)));
        // d(const)/dx = 0
        assert!(Poly::constant(rat_frac(3, 7)).partial(Var::X).is_zero());
    }

    #[test]
    fn exact_division_and_failure() {
        // (x^2 y - x^2) / (y - 1) = x^2
        let x2 = x().pow(2);
        let num = &(&x2 * &y()) - &x2;
        let den = &y() - &Poly::one();
        assert_eq!(num.div_exact(&den), Some(x2.clone()));
        assert_eq!(x2.div_exact(&den), None);
    }

    #[test]
    fn normalization_makes_primitive_positive() {
        // -2/3 y'^2 - 4/3 -> primitive: y'^2 + 2
        let p = &yp().pow(2).scale(&rat_frac(-2, 3)) - &Poly::constant(rat_frac(4, 3));
        let n = p.normalized();
        let want = &yp().pow(2) + &Poly::constant(rat_i64(2));
        assert_eq!(n, want);
    }

    #[test]
    fn eval_and_subst_agree() {
        let p = &(&x() * &y()) + &yp().pow(3);
        let v = p.eval(&rat_i64(2), &rat_i64(3), &rat_i64(-1));
        assert_eq!(v, rat_i64(5));
        let q = p.subst(Var::Yp, &Poly::constant(rat_i64(-1)));
        assert_eq!(q.eval(&rat_i64(2), &rat_i64(3), &rat_i64(0)), rat_i64(5));
    }

    #[test]
    fn coeff_view_round_trips() {
        let p = &(&x().pow(2) * &yp().pow(2)) + &(&y().pow(2) - &Poly::one());
        let cs = p.coeffs_in(Var::Yp);
        assert_eq!(cs.len(), 3);
        assert_eq!(Poly::from_coeffs_in(Var::Yp, &cs), p);
    }
}
