//! Polynomials in unknown ansatz coefficients.
//!
//! `SymPoly` is a sparse polynomial over Q in a block of unknowns
//! (identified by index), ordered lexicographically with unknown 0 most
//! significant — the order the Groebner machinery expects. `APoly` is a
//! polynomial in (x, y, y') whose coefficients are `SymPoly` values; it
//! is the carrier in which ansatz residuals are expanded before
//! coefficient matching.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::poly::{Mono, Poly, Var};
use crate::rat::Rat;
use crate::unipoly::QPoly;

/// Exponent vector over the unknowns; fixed length per system.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymMono(pub Vec<u16>);

impl SymMono {
    pub fn one(n: usize) -> SymMono {
        SymMono(alloc::vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> SymMono {
        let mut e = alloc::vec![0; n];
        e[i] = 1;
        SymMono(e)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &SymMono) -> SymMono {
        SymMono(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("unknown exponent overflow"))
                .collect(),
        )
    }

    pub fn div(&self, other: &SymMono) -> Option<SymMono> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(SymMono(out))
    }

    pub fn lcm(&self, other: &SymMono) -> SymMono {
        SymMono(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &SymMono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }
}

impl Ord for SymMono {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        // Lexicographic, unknown 0 most significant. BTreeMap iterates
        // ascending, so the leading (largest) term is the last entry.
        self.0.cmp(&other.0)
    }
}

impl PartialOrd for SymMono {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in the unknowns over Q. No zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    /// Number of unknowns (exponent vector length).
    pub n: usize,
    terms: BTreeMap<SymMono, Rat>,
}

impl SymPoly {
    pub fn zero(n: usize) -> SymPoly {
        SymPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Rat) -> SymPoly {
        let mut p = SymPoly::zero(n);
        p.add_term(SymMono::one(n), c);
        p
    }

    pub fn var(n: usize, i: usize) -> SymPoly {
        let mut p = SymPoly::zero(n);
        p.add_term(SymMono::var(n, i), Rat::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn constant_value(&self) -> Option<Rat> {
        if self.is_zero() {
            Some(Rat::zero())
        } else if self.is_constant() {
            Some(self.terms.values().next().unwrap().clone())
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SymMono, &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: SymMono, c: Rat) {
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

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> SymPoly {
        SymPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &Rat) -> SymPoly {
        if k.is_zero() {
            return SymPoly::zero(self.n);
        }
        SymPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        let mut out = SymPoly::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_term(&self, m: &SymMono, c: &Rat) -> SymPoly {
        let mut out = SymPoly::zero(self.n);
        for (ma, ca) in &self.terms {
            out.add_term(ma.mul(m), ca * c);
        }
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// Largest term in lex order.
    pub fn leading(&self) -> Option<(&SymMono, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn is_linear(&self) -> bool {
        self.terms.keys().all(|m| m.total_degree() <= 1)
    }

    /// Split a linear polynomial into (coefficients, constant).
    pub fn linear_parts(&self) -> Option<(Vec<(usize, Rat)>, Rat)> {
        if !self.is_linear() {
            return None;
        }
        let mut coeffs = Vec::new();
        let mut constant = Rat::zero();
        for (m, c) in &self.terms {
            if m.is_one() {
                constant = c.clone();
            } else {
                let i = m.vars().next().unwrap();
                coeffs.push((i, c.clone()));
            }
        }
        Some((coeffs, constant))
    }

    /// Indices of unknowns that occur.
    pub fn vars_present(&self) -> Vec<usize> {
        let mut seen = alloc::vec![false; self.n];
        for m in self.terms.keys() {
            for i in m.vars() {
                seen[i] = true;
            }
        }
        seen.iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(i, _)| i)
            .collect()
    }

    /// If the polynomial involves exactly one unknown, view it as a
    /// univariate polynomial over Q in that unknown.
    pub fn as_univariate(&self) -> Option<(usize, QPoly)> {
        let vars = self.vars_present();
        if vars.len() != 1 {
            return None;
        }
        let v = vars[0];
        let deg = self.terms.keys().map(|m| m.0[v]).max().unwrap_or(0) as usize;
        let mut coeffs = alloc::vec![Rat::zero(); deg + 1];
        for (m, c) in &self.terms {
            coeffs[m.0[v] as usize] = c.clone();
        }
        Some((v, QPoly::new(coeffs)))
    }

    /// Substitute a rational value for one unknown.
    pub fn subst_value(&self, i: usize, value: &Rat) -> SymPoly {
        let mut out = SymPoly::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.0[i];
            let mut m2 = m.clone();
            m2.0[i] = 0;
            let scale = crate::rat::rat_pow(value, e as i64);
            out.add_term(m2, c * scale);
        }
        out
    }

    /// Substitute a polynomial for one unknown.
    pub fn subst_poly(&self, i: usize, value: &SymPoly) -> SymPoly {
        let max = self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0) as usize;
        let mut powers: Vec<SymPoly> = Vec::with_capacity(max + 1);
        powers.push(SymPoly::constant(self.n, Rat::one()));
        for k in 1..=max {
            let next = powers[k - 1].mul(value);
            powers.push(next);
        }
        let mut out = SymPoly::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.0[i] as usize;
            let mut m2 = m.clone();
            m2.0[i] = 0;
            out = out.add(&powers[e].mul_term(&m2, c));
        }
        out
    }

    /// Full evaluation at a dense assignment.
    pub fn eval(&self, values: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= crate::rat::rat_pow(&values[i], e as i64);
                }
            }
            acc += t;
        }
        acc
    }

    /// Monic under lex (divide by leading coefficient).
    pub fn monic(&self) -> SymPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = Rat::one() / c.clone();
                self.scale(&inv)
            }
        }
    }
}

/// Polynomial in (x, y, y') with `SymPoly` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct APoly {
    pub n: usize,
    terms: BTreeMap<Mono, SymPoly>,
}

impl APoly {
    pub fn zero(n: usize) -> APoly {
        APoly { n, terms: BTreeMap::new() }
    }

    pub fn from_poly(p: &Poly, n: usize) -> APoly {
        let mut out = APoly::zero(n);
        for (m, c) in p.terms() {
            out.add_term(*m, SymPoly::constant(n, c.clone()));
        }
        out
    }

    /// Ansatz polynomial: `sum_k u_{first + k} * monomials[k]`.
    pub fn from_ansatz(monomials: &[Mono], first: usize, n: usize) -> APoly {
        let mut out = APoly::zero(n);
        for (k, m) in monomials.iter().enumerate() {
            out.add_term(*m, SymPoly::var(n, first + k));
        }
        out
    }

    pub fn add_term(&mut self, m: Mono, c: SymPoly) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &APoly) -> APoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &APoly) -> APoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> APoly {
        APoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &APoly) -> APoly {
        let mut out = APoly::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    pub fn mul_poly(&self, p: &Poly) -> APoly {
        let mut out = APoly::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mp, cp) in p.terms() {
                out.add_term(ma.mul(mp), ca.scale(cp));
            }
        }
        out
    }

    pub fn partial(&self, v: Var) -> APoly {
        let mut out = APoly::zero(self.n);
        for (m, c) in &self.terms {
            let k = m.exp(v);
            if k > 0 {
                out.add_term(m.dec(v), c.scale(&Rat::from_integer(k.into())));
            }
        }
        out
    }

    /// The coefficient system: one `SymPoly` per (x, y, y') monomial.
    pub fn coefficients(&self) -> Vec<SymPoly> {
        self.terms.values().cloned().collect()
    }

    /// Instantiate the unknowns, producing a plain polynomial.
    pub fn instantiate(&self, values: &[Rat]) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, c.eval(values));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat_i64, rat_one};

    #[test]
    fn lex_order_has_var0_most_significant() {
        let n = 3;
        let u0 = SymMono::var(n, 0);
        let u1 = SymMono::var(n, 1);
        let u0u0 = u0.mul(&u0);
        let u0u1 = u0.mul(&u1);
        assert!(u0 > u1);
        assert!(u0u0 > u0u1);
        assert!(u0u1 > u1);
    }

    #[test]
    fn substitution_and_eval() {
        let n = 2;
        // p = u0^2 u1 - 3 u1 + 2
        let p = SymPoly::var(n, 0)
            .mul(&SymPoly::var(n, 0))
            .mul(&SymPoly::var(n, 1))
            .add(&SymPoly::var(n, 1).scale(&rat_i64(-3)))
            .add(&SymPoly::constant(n, rat_i64(2)));
        let q = p.subst_value(0, &rat_i64(2));
        // 4u1 - 3u1 + 2 = u1 + 2
        assert_eq!(q, SymPoly::var(n, 1).add(&SymPoly::constant(n, rat_i64(2))));
        assert_eq!(p.eval(&[rat_i64(2), rat_i64(5)]), rat_i64(7));
    }

    #[test]
    fn univariate_view() {
        let n = 3;
        let p = SymPoly::var(n, 1)
            .mul(&SymPoly::var(n, 1))
            .add(&SymPoly::constant(n, rat_i64(-4)));
        let (v, q) = p.as_univariate().unwrap();
        assert_eq!(v, 1);
        assert_eq!(q.coeffs(), &[rat_i64(-4), rat_i64(0), rat_one()]);
    }

    #[test]
    fn apoly_expands_products() {
        use crate::poly::Poly;
        let n = 2;
        // (u0 * y + u1) * y = u0 y^2 + u1 y
        let y = Poly::var(Var::Y);
        let a = APoly::from_ansatz(&[Mono::var(Var::Y, 1), Mono::ONE], 0, n);
        let b = a.mul_poly(&y);
        let eqs = b.coefficients();
        assert_eq!(eqs.len(), 2);
        let inst = b.instantiate(&[rat_i64(3), rat_i64(-1)]);
        let want = &y.pow(2).scale(&rat_i64(3)) - &y;
        assert_eq!(inst, want);
    }
}
