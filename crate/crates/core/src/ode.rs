//! Canonical ODE representations.

use crate::poly::{Poly, Var};
use crate::ratfun::RatFun;

/// Second-order equation `y'' = M/N` with `M`, `N` polynomials in
/// `x, y, y'`, `gcd(M, N) = 1`, `N` primitive with positive leading
/// coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Soode {
    m: Poly,
    n: Poly,
}

impl Soode {
    /// Canonicalize an arbitrary (M, N) pair. Panics if `n` is zero.
    pub fn new(m: Poly, n: Poly) -> Soode {
        let f = RatFun::new(m, n);
        Soode {
            m: f.num().clone(),
            n: f.den().clone(),
        }
    }

    pub fn from_phi(phi: &RatFun) -> Soode {
        Soode {
            m: phi.num().clone(),
            n: phi.den().clone(),
        }
    }

    pub fn m(&self) -> &Poly {
        &self.m
    }

    pub fn n(&self) -> &Poly {
        &self.n
    }

    pub fn phi(&self) -> RatFun {
        RatFun::new(self.m.clone(), self.n.clone())
    }
}

/// First-order equation `y' = M/N` with `M`, `N` polynomials in `x, y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Foode {
    m: Poly,
    n: Poly,
}

impl Foode {
    /// Canonicalize. Panics if `n` is zero or if `y'` occurs.
    pub fn new(m: Poly, n: Poly) -> Foode {
        assert!(
            !m.contains_var(Var::Yp) && !n.contains_var(Var::Yp),
            "first-order equation must not contain y'"
        );
        let f = RatFun::new(m, n);
        Foode {
            m: f.num().clone(),
            n: f.den().clone(),
        }
    }

    pub fn m(&self) -> &Poly {
        &self.m
    }

    pub fn n(&self) -> &Poly {
        &self.n
    }

    pub fn rhs(&self) -> RatFun {
        RatFun::new(self.m.clone(), self.n.clone())
    }
}

/// Parsed input: either order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OdeInput {
    Second(Soode),
    First(Foode),
}
