//! Deterministic pretty-printing.
//!
//! Terms print in ascending canonical order, so output is stable across
//! runs and `parse(render(p)) == p` holds for everything the grammar can
//! express.

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Signed};

use crate::invariant::ElemInvariant;
use crate::poly::{Mono, Poly, Var};
use crate::rat::{rat_to_string, Rat};
use crate::ratfun::RatFun;

fn mono_string(m: &Mono) -> String {
    let mut parts: Vec<String> = Vec::new();
    for v in Var::ALL {
        let e = m.exp(v);
        if e == 1 {
            parts.push(String::from(v.name()));
        } else if e > 1 {
            let mut s = String::from(v.name());
            s.push('^');
            s.push_str(&alloc::format!("{e}"));
            parts.push(s);
        }
    }
    parts.join("*")
}

/// Unsigned rendering of one term; the caller places the sign.
fn term_string(m: &Mono, c: &Rat) -> String {
    let c_abs = c.abs();
    if m.is_one() {
        return rat_to_string(&c_abs);
    }
    let ms = mono_string(m);
    if c_abs.is_one() {
        ms
    } else {
        alloc::format!("{}*{}", rat_to_string(&c_abs), ms)
    }
}

pub fn render_poly(p: &Poly) -> String {
    if p.is_zero() {
        return String::from("0");
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&term_string(m, c));
    }
    out
}

/// A denominator may drop its parentheses only when the whole of it is a
/// single power of a single variable (`x`, `y^3`): anything else would
/// re-associate under the left-to-right `*`/`/` grammar.
fn den_needs_parens(p: &Poly) -> bool {
    if p.num_terms() != 1 {
        return true;
    }
    let (m, c) = p.leading().unwrap();
    if !c.is_one() {
        return true;
    }
    Var::ALL.iter().filter(|&&v| m.exp(v) > 0).count() != 1
}

pub fn render_ratfun(f: &RatFun) -> String {
    if f.is_poly() {
        return render_poly(f.num());
    }
    let num = if f.num().num_terms() > 1 {
        alloc::format!("({})", render_poly(f.num()))
    } else {
        render_poly(f.num())
    };
    let den = if den_needs_parens(f.den()) {
        alloc::format!("({})", render_poly(f.den()))
    } else {
        render_poly(f.den())
    };
    alloc::format!("{num}/{den}")
}

fn push_signed_term(out: &mut String, first: bool, negative: bool, body: &str) {
    if first {
        if negative {
            out.push('-');
        }
    } else if negative {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    out.push_str(body);
}

fn coeff_prefix(c: &Rat) -> String {
    let a = c.abs();
    if a.is_one() {
        String::new()
    } else {
        alloc::format!("{}*", rat_to_string(&a))
    }
}

pub fn render_invariant(inv: &ElemInvariant) -> String {
    let mut out = String::new();
    let mut first = true;
    if !inv.z0.is_zero() {
        out.push_str(&render_ratfun(&inv.z0));
        first = false;
    }
    for (c, z) in &inv.logs {
        let body = alloc::format!("{}log({})", coeff_prefix(c), render_poly(z));
        push_signed_term(&mut out, first, c.is_negative(), &body);
        first = false;
    }
    for (c, arg) in &inv.atans {
        let body = alloc::format!("{}atan({})", coeff_prefix(c), render_ratfun(arg));
        push_signed_term(&mut out, first, c.is_negative(), &body);
        first = false;
    }
    if first {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat_frac, rat_i64};

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
    fn poly_rendering() {
        assert_eq!(render_poly(&Poly::zero()), "0");
        let p = &(&y().pow(2) + &yp().pow(2)) - &Poly::one();
        assert_eq!(render_poly(&p), "-1 + y^2 + y'^2");
        let q = x().scale(&rat_frac(-2, 3));
        assert_eq!(render_poly(&q), "-2/3*x");
    }

    #[test]
    fn ratfun_rendering() {
        let f = RatFun::new(yp(), &x() * &y().pow(3));
        assert_eq!(render_ratfun(&f), "y'/(x*y^3)");
        let g = RatFun::new(&x() + &y(), yp().pow(2));
        assert_eq!(render_ratfun(&g), "(x + y)/y'^2");
        let h = RatFun::new(x(), y().scale(&rat_i64(2)));
        // Denominator 2y: coefficient folded into numerator side by
        // normalization, so den stays primitive.
        assert_eq!(render_ratfun(&h), "1/2*x/y");
    }
}
