//! Elementary first integrals: `z0 + sum c_i log(z_i) + sum c_j atan(a_j)`
//! with rational `z0`, polynomial `z_i`, rational-function atan arguments
//! and rational constants, plus the quadrature that builds them from a
//! verified (S, R) pair.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::gcd::poly_gcd;
use crate::poly::{Poly, Var};
use crate::rat::Rat;
use crate::ratfun::RatFun;

/// An elementary invariant candidate.
///
/// Invariants: every `z_i` is primitive, non-constant and pairwise
/// non-associate; no stored zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElemInvariant {
    pub z0: RatFun,
    /// Terms `c * log(z)`.
    pub logs: Vec<(Rat, Poly)>,
    /// Terms `c * atan(arg)`.
    pub atans: Vec<(Rat, RatFun)>,
}

impl ElemInvariant {
    pub fn zero() -> ElemInvariant {
        ElemInvariant {
            z0: RatFun::zero(),
            logs: Vec::new(),
            atans: Vec::new(),
        }
    }

    pub fn from_ratfun(z0: RatFun) -> ElemInvariant {
        ElemInvariant {
            z0,
            logs: Vec::new(),
            atans: Vec::new(),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.logs.is_empty() && self.atans.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.z0.is_zero() && self.logs.is_empty() && self.atans.is_empty()
    }

    /// Add a `c * log(z)` term. The argument is normalized to its
    /// primitive positive part; constant rational factors contribute an
    /// additive constant, which invariants are defined up to, so they
    /// are dropped. Zero or constant arguments are ignored likewise.
    pub fn push_log(&mut self, c: Rat, z: &Poly) {
        if c.is_zero() || z.is_zero() || z.is_constant() {
            return;
        }
        let zn = z.normalized();
        for (c0, z0) in self.logs.iter_mut() {
            if *z0 == zn {
                *c0 += c;
                if c0.is_zero() {
                    let keep = z0.clone();
                    self.logs.retain(|(_, z)| z != &keep);
                }
                return;
            }
        }
        self.logs.push((c, zn));
        self.logs.sort_by(|a, b| a.1.cmp_canonical(&b.1));
    }

    /// Add a `c * atan(arg)` term. `atan(-u) = -atan(u)` is used to give
    /// the argument a positive leading numerator coefficient.
    pub fn push_atan(&mut self, c: Rat, arg: &RatFun) {
        if c.is_zero() || arg.is_constant() {
            return;
        }
        let (c, arg) = if arg.num().leading_coeff_sign_positive() {
            (c, arg.clone())
        } else {
            (-c, -arg)
        };
        for (c0, a0) in self.atans.iter_mut() {
            if *a0 == arg {
                *c0 += c;
                if c0.is_zero() {
                    let keep = a0.clone();
                    self.atans.retain(|(_, a)| a != &keep);
                }
                return;
            }
        }
        self.atans.push((c, arg));
    }

    pub fn add(&self, other: &ElemInvariant) -> ElemInvariant {
        let mut out = self.clone();
        out.z0 = &out.z0 + &other.z0;
        for (c, z) in &other.logs {
            out.push_log(c.clone(), z);
        }
        for (c, a) in &other.atans {
            out.push_atan(c.clone(), a);
        }
        out
    }

    pub fn sub(&self, other: &ElemInvariant) -> ElemInvariant {
        self.add(&other.scale(&-crate::rat::rat_one()))
    }

    pub fn scale(&self, k: &Rat) -> ElemInvariant {
        if k.is_zero() {
            return ElemInvariant::zero();
        }
        ElemInvariant {
            z0: self.z0.scale(k),
            logs: self.logs.iter().map(|(c, z)| (c * k, z.clone())).collect(),
            atans: self.atans.iter().map(|(c, a)| (c * k, a.clone())).collect(),
        }
    }

    /// Exact partial derivative: always a rational function.
    /// `d log(z) = dz/z`; `d atan(p/q) = (p'q - pq')/(p^2 + q^2)`.
    pub fn partial(&self, v: Var) -> RatFun {
        let mut out = self.z0.partial(v);
        for (c, z) in &self.logs {
            let dz = z.partial(v);
            out = &out + &RatFun::new(dz.scale(c), z.clone());
        }
        for (c, a) in &self.atans {
            let p = a.num();
            let q = a.den();
            let num = &(&p.partial(v) * q) - &(p * &q.partial(v));
            let den = &(p * p) + &(q * q);
            out = &out + &RatFun::new(num.scale(c), den);
        }
        out
    }

    /// Total derivative along solutions of `y'' = phi`.
    pub fn total_d(&self, phi: &RatFun) -> RatFun {
        let yp = RatFun::var(Var::Yp);
        &(&self.partial(Var::X) + &(&yp * &self.partial(Var::Y))) + &(phi * &self.partial(Var::Yp))
    }

    /// Gradient with respect to (x, y, y').
    pub fn gradient(&self) -> [RatFun; 3] {
        [
            self.partial(Var::X),
            self.partial(Var::Y),
            self.partial(Var::Yp),
        ]
    }

    /// Scale so the leading coefficient of the numerator of `z0` is 1
    /// (or the first log coefficient when `z0 = 0`).
    pub fn normalized(&self) -> ElemInvariant {
        let lead = if !self.z0.is_zero() {
            self.z0.num().leading().map(|(_, c)| c.clone())
        } else {
            self.logs.first().map(|(c, _)| c.clone())
        };
        match lead {
            Some(c) if !c.is_zero() => self.scale(&(crate::rat::rat_one() / c)),
            _ => self.clone(),
        }
    }

    /// Denominators whose zeros make the invariant singular: the
    /// denominator of `z0`, every log argument, and every atan
    /// denominator. Used by the trajectory sampler.
    pub fn singular_polys(&self) -> Vec<Poly> {
        let mut out = Vec::new();
        if !self.z0.den().is_one() {
            out.push(self.z0.den().clone());
        }
        for (_, z) in &self.logs {
            out.push(z.clone());
        }
        for (_, a) in &self.atans {
            if !a.den().is_one() {
                out.push(a.den().clone());
            }
        }
        out
    }

    pub fn num_terms(&self) -> usize {
        self.z0.num().num_terms()
            + self.z0.den().num_terms()
            + self.logs.iter().map(|(_, z)| z.num_terms()).sum::<usize>()
            + self
                .atans
                .iter()
                .map(|(_, a)| a.num().num_terms() + a.den().num_terms())
                .sum::<usize>()
    }
}

impl core::fmt::Display for ElemInvariant {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&crate::render::render_invariant(self))
    }
}

impl Poly {
    fn cmp_canonical(&self, other: &Poly) -> core::cmp::Ordering {
        // Compare term lists lexicographically in canonical order.
        let mut a = self.terms();
        let mut b = other.terms();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return core::cmp::Ordering::Equal,
                (None, Some(_)) => return core::cmp::Ordering::Less,
                (Some(_), None) => return core::cmp::Ordering::Greater,
                (Some((ma, ca)), Some((mb, cb))) => {
                    let c = ma.cmp(mb).then_with(|| ca.cmp(cb));
                    if c != core::cmp::Ordering::Equal {
                        return c;
                    }
                }
            }
        }
    }
}

/// True iff two polynomials differ by a nonzero rational factor.
pub fn associates(a: &Poly, b: &Poly) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    a.normalized() == b.normalized()
}

/// Functional-dependence test: gradients proportional as rational
/// functions (all pairwise cross products vanish identically).
pub fn equivalent(a: &ElemInvariant, b: &ElemInvariant) -> bool {
    let ga = a.gradient();
    let gb = b.gradient();
    let a_const = ga.iter().all(|g| g.is_zero());
    let b_const = gb.iter().all(|g| g.is_zero());
    if a_const || b_const {
        return a_const && b_const;
    }
    for i in 0..3 {
        for j in (i + 1)..3 {
            let cross = &(&ga[i] * &gb[j]) - &(&ga[j] * &gb[i]);
            if !cross.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Common multiple of all denominators that appear in the invariant,
/// for singularity screens.
pub fn denominator_lcm(inv: &ElemInvariant) -> Poly {
    let mut acc = Poly::one();
    for p in inv.singular_polys() {
        let g = poly_gcd(&acc, &p);
        acc = &acc * &p.div_exact(&g).expect("gcd divides");
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat_i64, rat_one};

    fn x() -> Poly {
        Poly::var(Var::X)
    }
    fn y() -> Poly {
        Poly::var(Var::Y)
    }
    fn yp() -> Poly {
        Poly::var(Var::Yp)
    }

    fn energy() -> ElemInvariant {
        ElemInvariant::from_ratfun(RatFun::from_poly(&y().pow(2) + &yp().pow(2)))
    }

    #[test]
    fn log_merging_drops_constants_and_dedups() {
        let mut inv = ElemInvariant::zero();
        inv.push_log(rat_one(), &y().scale(&rat_i64(3)));
        inv.push_log(rat_i64(2), &y());
        assert_eq!(inv.logs.len(), 1);
        assert_eq!(inv.logs[0].0, rat_i64(3));
        inv.push_log(rat_i64(-3), &y());
        assert!(inv.logs.is_empty());
    }

    #[test]
    fn derivative_of_log_and_atan() {
        let mut inv = ElemInvariant::zero();
        inv.push_log(rat_one(), &x());
        // d/dx log x = 1/x
        assert_eq!(inv.partial(Var::X), RatFun::new(Poly::one(), x()));
        let mut inv = ElemInvariant::zero();
        inv.push_atan(rat_one(), &RatFun::from_poly(x()));
        // d/dx atan x = 1/(1 + x^2)
        assert_eq!(
            inv.partial(Var::X),
            RatFun::new(Poly::one(), &Poly::one() + &x().pow(2))
        );
    }

    #[test]
    fn equivalence_up_to_scale_and_shift() {
        let a = energy();
        let b = a.scale(&crate::rat::rat_frac(-1, 2));
        assert!(equivalent(&a, &b));
        let c = ElemInvariant::from_ratfun(&a.z0 + &RatFun::constant(rat_i64(5)));
        assert!(equivalent(&a, &c));
        // Different invariants are not equivalent.
        let d = ElemInvariant::from_ratfun(RatFun::new(yp(), &x() * &y().pow(3)));
        assert!(!equivalent(&a, &d));
    }

    #[test]
    fn normalization_fixes_leading_coefficient() {
        let raw = energy().scale(&crate::rat::rat_frac(-1, 2));
        let n = raw.normalized();
        assert_eq!(n.z0, RatFun::from_poly(&yp().pow(2) + &y().pow(2)));
    }
}
