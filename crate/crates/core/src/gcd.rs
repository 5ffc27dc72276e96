//! Polynomial gcd and related structure: subresultant PRS, contents,
//! squarefree parts and exact square roots.
//!
//! The multivariate gcd recurses on the variable set: split off the
//! content with respect to the main variable, reduce the primitive parts
//! with a subresultant polynomial remainder sequence, and recurse into
//! the (smaller) coefficient ring for the contents. Three or four
//! variables and modest degrees keep this comfortably fast.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::poly::{Poly, Var};
use crate::rat::Rat;

/// Primitive gcd with positive leading coefficient.
///
/// `gcd(p, 0)` is the normalization of `p`; `gcd(0, 0)` is 0.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() {
        return a.normalized();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    let v = match a.main_var().max(b.main_var()) {
        Some(v) => v,
        None => return Poly::one(),
    };
    let (ca, pa) = content_and_primitive(a, v);
    let (cb, pb) = content_and_primitive(b, v);
    let c = poly_gcd(&ca, &cb);
    let g = subresultant_gcd(&pa, &pb, v);
    (&c * &g).normalized()
}

/// Content with respect to `v` (gcd of the `v`-coefficients, a polynomial
/// free of `v`) and the corresponding primitive part.
pub fn content_and_primitive(p: &Poly, v: Var) -> (Poly, Poly) {
    if !p.contains_var(v) {
        return (p.clone(), Poly::one());
    }
    let coeffs = p.coeffs_in(v);
    let mut content = Poly::zero();
    for c in &coeffs {
        if c.is_zero() {
            continue;
        }
        content = poly_gcd(&content, c);
        if content.is_one() {
            break;
        }
    }
    let primitive = p
        .div_exact(&content)
        .expect("content must divide the polynomial");
    (content, primitive)
}

/// Pseudo-remainder of `f` by `g` in the variable `v`:
/// `lc(g)^(deg f - deg g + 1) * f = q*g + r` with `deg_v r < deg_v g`.
fn pseudo_rem(f: &Poly, g: &Poly, v: Var) -> Poly {
    let d = g.degree_in(v);
    let lc_g = leading_coeff_in(g, v);
    let mut r = f.clone();
    let mut e = (f.degree_in(v) as i64) - (d as i64) + 1;
    while !r.is_zero() && r.degree_in(v) >= d {
        let k = r.degree_in(v) - d;
        let lc_r = leading_coeff_in(&r, v);
        let shift = Poly::monomial(crate::poly::Mono::var(v, k), Rat::from_integer(1.into()));
        r = &(&r * &lc_g) - &(&(&lc_r * g) * &shift);
        e -= 1;
    }
    // Keep the multiplier exactly lc(g)^(deg f - deg g + 1).
    let mut out = r;
    while e > 0 {
        out = &out * &lc_g;
        e -= 1;
    }
    out
}

fn leading_coeff_in(p: &Poly, v: Var) -> Poly {
    let coeffs = p.coeffs_in(v);
    coeffs.last().cloned().unwrap_or_else(Poly::zero)
}

/// Subresultant PRS gcd of two polynomials primitive with respect to `v`.
/// Result is primitive in `v`.
fn subresultant_gcd(a: &Poly, b: &Poly, v: Var) -> Poly {
    let (mut f, mut g) = if a.degree_in(v) >= b.degree_in(v) {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    if g.is_zero() {
        return content_and_primitive(&f, v).1;
    }
    // psi = -1, beta_1 = (-1)^(delta+1)
    let mut psi = Poly::constant(-Rat::from_integer(1.into()));
    let mut first = true;
    loop {
        if g.is_zero() {
            return content_and_primitive(&f, v).1.normalized();
        }
        if g.degree_in(v) == 0 {
            // Nonzero coefficient in v: primitive parts are coprime in v.
            return Poly::one();
        }
        let delta = f.degree_in(v) - g.degree_in(v);
        let r = pseudo_rem(&f, &g, v);
        let lc_f = leading_coeff_in(&f, v);
        let neg_lc_f = -&lc_f;
        let beta = if first {
            first = false;
            if delta % 2 == 0 {
                Poly::constant(-Rat::from_integer(1.into()))
            } else {
                Poly::one()
            }
        } else {
            &neg_lc_f * &psi.pow(delta as u32)
        };
        // Update psi for the next round.
        if delta >= 1 {
            let num = neg_lc_f.pow(delta as u32);
            if delta == 1 {
                psi = num;
            } else {
                psi = num
                    .div_exact(&psi.pow(delta as u32 - 1))
                    .expect("subresultant psi division is exact");
            }
        }
        let next = r
            .div_exact(&beta)
            .expect("subresultant beta division is exact");
        f = g;
        g = next;
    }
}

/// Squarefree part of `p` with respect to `v`: `p / gcd(p, dp/dv)`.
pub fn squarefree_part(p: &Poly, v: Var) -> Poly {
    if !p.contains_var(v) {
        return p.normalized();
    }
    let d = p.partial(v);
    let g = poly_gcd(p, &d);
    p.div_exact(&g).expect("gcd divides").normalized()
}

/// Squarefree decomposition with respect to `v` (Yun's algorithm):
/// returns `[(q1, 1), (q2, 2), ...]` with `p = c * prod qi^i`, each `qi`
/// squarefree and pairwise coprime. Factors of multiplicity i are `qi`.
pub fn squarefree_decomposition(p: &Poly, v: Var) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    if !p.contains_var(v) {
        return out;
    }
    let dp = p.partial(v);
    let g = poly_gcd(p, &dp);
    let mut c = p.div_exact(&g).expect("gcd divides");
    let mut d = &dp.div_exact(&g).expect("gcd divides") - &c.partial(v);
    let mut i = 1u32;
    while !c.is_constant() {
        let q = poly_gcd(&c, &d);
        if !q.is_constant() {
            out.push((q.clone(), i));
        }
        c = c.div_exact(&q).expect("gcd divides");
        d = &d.div_exact(&q).expect("gcd divides") - &c.partial(v);
        i += 1;
    }
    out
}

/// Exact polynomial square root, if `p` is a perfect square.
/// The result has a positive leading coefficient.
pub fn poly_sqrt(p: &Poly) -> Option<Poly> {
    if p.is_zero() {
        return Some(Poly::zero());
    }
    if let Some(c) = p.constant_value() {
        return crate::rat::rat_sqrt(&c).map(Poly::constant);
    }
    let v = p.main_var().unwrap();
    let coeffs = p.coeffs_in(v);
    let n = coeffs.len() - 1;
    if n % 2 != 0 {
        return None;
    }
    let h = n / 2;
    let lc = poly_sqrt(coeffs.last().unwrap())?;
    let mut s = alloc::vec![Poly::zero(); h + 1];
    s[h] = lc.clone();
    let two_lc = s[h].scale(&Rat::from_integer(2.into()));
    // Solve for s[h-1], ..., s[0] from the top coefficients down:
    // coeff_{h+i}(s^2) = 2 s_h s_i + sum_{j=i+1..h-1} s_j s_{h+i-j}.
    for i in (0..h).rev() {
        let mut acc = coeffs[h + i].clone();
        for j in (i + 1)..h {
            acc = &acc - &(&s[j] * &s[h + i - j]);
        }
        s[i] = acc.div_exact(&two_lc)?;
    }
    let candidate = Poly::from_coeffs_in(v, &s);
    if &(&candidate * &candidate) == p {
        Some(candidate)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_i64;

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
    fn gcd_difference_of_squares() {
        // gcd(x^2 - y^2, x - y) = x - y
        let a = &x().pow(2) - &y().pow(2);
        let b = &x() - &y();
        assert_eq!(poly_gcd(&a, &b), b.clone());
    }

    #[test]
    fn gcd_with_zero_normalizes() {
        let p = (&x() * &y()).scale(&rat_i64(-6));
        assert_eq!(poly_gcd(&p, &Poly::zero()), &x() * &y());
        assert!(poly_gcd(&Poly::zero(), &Poly::zero()).is_zero());
    }

    #[test]
    fn gcd_of_shared_factor_products() {
        // Products sharing (x + y + y'): the gcd must contain it.
        let f = &(&x() + &y()) + &yp();
        let a = &f * &(&x().pow(2) + &Poly::one());
        let b = &f * &(&y() - &yp().pow(3));
        let g = poly_gcd(&a, &b);
        assert!(f.divides(&g) && g.divides(&f));
        // Exact cofactors.
        assert_eq!(&g * &a.div_exact(&g).unwrap(), a);
        assert_eq!(&g * &b.div_exact(&g).unwrap(), b);
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let a = &x().pow(2) + &Poly::one();
        let b = &y() - &Poly::one();
        assert!(poly_gcd(&a, &b).is_one());
    }

    #[test]
    fn squarefree_decomposition_recovers_multiplicities() {
        // p = (x+1)^2 * (x^2+y) -> [(x^2+y, 1), (x+1, 2)]
        let a = &x() + &Poly::one();
        let b = &x().pow(2) + &y();
        let p = &a.pow(2) * &b;
        let parts = squarefree_decomposition(&p, Var::X);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], (b.clone(), 1));
        assert_eq!(parts[1], (a.clone(), 2));
        let sf = squarefree_part(&p, Var::X);
        assert_eq!(sf, (&a * &b).normalized());
    }

    #[test]
    fn sqrt_of_squares() {
        let p = &(&x() * &y()) - &yp().pow(2).scale(&rat_i64(3));
        let sq = &p * &p;
        let s = poly_sqrt(&sq).unwrap();
        assert_eq!(&s * &s, sq);
        assert!(poly_sqrt(&(&sq + &Poly::one())).is_none());
    }
}
