//! Multivariate polynomial gcd over Z.
//!
//! Cheap structural cases are tried first (monomial content, exact
//! divisibility, symbols present in only one operand), then a modular
//! certificate of coprimality, and finally a primitive remainder sequence.

use std::collections::{BTreeSet, HashMap};

use crate::modp::{self, SplitMix, P61};
use crate::poly::Poly;
use crate::var::{Monomial, Var};

/// Primitive integer polynomial with positive leading coefficient.
pub fn normalize(p: &Poly) -> Poly {
    p.primitive_part().1
}

/// Gcd of two polynomials with nonnegative exponents, normalized.
/// `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    debug_assert!(a.is_polynomial() && b.is_polynomial());
    if a.is_zero() {
        return normalize(b);
    }
    if b.is_zero() {
        return normalize(a);
    }
    let (ma, a) = a.split_monomial_content();
    let (mb, b) = b.split_monomial_content();
    let m = ma.gcd(&mb);
    let g = gcd_core(&normalize(&a), &normalize(&b));
    g.mul_monomial(&m)
}

/// Both inputs primitive, without monomial content.
fn gcd_core(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a == b {
        return a.clone();
    }
    let (small, big) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if big.div_exact(small).is_some() {
        return small.clone();
    }
    let va = a.vars();
    let vb = b.vars();
    if let Some(&v) = va.difference(&vb).next() {
        return gcd_with_coeffs(b, a, v);
    }
    if let Some(&v) = vb.difference(&va).next() {
        return gcd_with_coeffs(a, b, v);
    }
    if coprime_certificate(a, b, &va) {
        return Poly::one();
    }
    let v =
        *va.iter().min_by_key(|&&v| (a.degree_in(v).min(b.degree_in(v)), a.degree_in(v).max(b.degree_in(v)))).unwrap();
    prs_gcd(a, b, v)
}

/// gcd(a, b) where `v` occurs in `b` but not in `a`: the gcd is free of `v`.
fn gcd_with_coeffs(a: &Poly, b: &Poly, v: Var) -> Poly {
    let mut coeffs: Vec<Poly> = b.coeffs_in(v).into_iter().filter(|c| !c.is_zero()).collect();
    coeffs.sort_by_key(|c| c.len());
    let mut g = a.clone();
    for c in coeffs {
        g = gcd(&g, &c);
        if g.is_constant() {
            return Poly::one();
        }
    }
    g
}

fn gcd_many(ps: &[Poly]) -> Poly {
    let mut sorted: Vec<&Poly> = ps.iter().filter(|p| !p.is_zero()).collect();
    sorted.sort_by_key(|p| p.len());
    let mut g = Poly::zero();
    for p in sorted {
        g = gcd(&g, p);
        if g.is_one() {
            break;
        }
    }
    g
}

/// True if modular images prove `gcd(a, b)` is constant. A `false` is
/// inconclusive.
fn coprime_certificate(a: &Poly, b: &Poly, vars: &BTreeSet<Var>) -> bool {
    let mut rng = SplitMix::new(0x5eed ^ (a.len() as u64) << 20 ^ b.len() as u64);
    // The gcd is constant iff its degree in every symbol is zero, and a
    // good image bounds that degree from above.
    'vars: for &v in vars {
        let (da, db) = (a.degree_in(v), b.degree_in(v));
        if da == 0 || db == 0 {
            continue;
        }
        for _ in 0..3 {
            let point: HashMap<Var, u64> =
                vars.iter().filter(|&&w| w != v).map(|&w| (w, 1 + rng.below(P61 - 1))).collect();
            let (ia, ib) = match (a.univariate_mod(v, &point, P61), b.univariate_mod(v, &point, P61)) {
                (Some(x), Some(y)) => (x, y),
                _ => continue,
            };
            if ia[da as usize] == 0 || ib[db as usize] == 0 {
                continue;
            }
            if modp::gcd_degree(&ia, &ib, P61) == 0 {
                continue 'vars;
            }
            return false;
        }
        return false;
    }
    true
}

fn content_in(p: &Poly, v: Var) -> Poly {
    gcd_many(&p.coeffs_in(v))
}

fn primitive_in(p: &Poly, v: Var) -> Poly {
    let c = content_in(p, v);
    let q = if c.is_constant() { p.clone() } else { p.div_exact(&c).expect("content divides") };
    normalize(&q)
}

/// Pseudo-remainder of `f` by `g` as polynomials in `v`.
fn prem(f: &[Poly], g: &[Poly]) -> Vec<Poly> {
    let mut r: Vec<Poly> = f.to_vec();
    trim(&mut r);
    let dg = g.len() - 1;
    let lcg = &g[dg];
    while r.len() > dg && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - dg;
        for c in r.iter_mut() {
            *c = c.mul(lcg);
        }
        for (i, gi) in g.iter().enumerate() {
            r[shift + i] = r[shift + i].sub(&lr.mul(gi));
        }
        trim(&mut r);
    }
    r
}

fn trim(v: &mut Vec<Poly>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn prs_gcd(a: &Poly, b: &Poly, v: Var) -> Poly {
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = gcd(&ca, &cb);
    let mut f = primitive_in(a, v);
    let mut g = primitive_in(b, v);
    if f.degree_in(v) < g.degree_in(v) {
        std::mem::swap(&mut f, &mut g);
    }
    let out = loop {
        if g.degree_in(v) == 0 {
            break Poly::one();
        }
        let r = prem(&f.coeffs_in(v), &g.coeffs_in(v));
        if r.is_empty() {
            break g;
        }
        if r.len() == 1 {
            break Poly::one();
        }
        f = g;
        g = primitive_in(&Poly::from_coeffs_in(v, &r), v);
    };
    let out = primitive_in(&out, v);
    normalize(&c.mul(&out))
}

/// Least common multiple of monomials, exposed for denominator clearing.
pub fn monomial_lcm(ms: impl IntoIterator<Item = Monomial>) -> Monomial {
    ms.into_iter().fold(Monomial::one(), |acc, m| acc.lcm(&m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::var::Var;

    fn b(i: u32) -> Poly {
        Poly::var(Var::b(i))
    }
    fn x() -> Poly {
        Poly::var(Var::X)
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(gcd(&Poly::zero(), &(&b(0) * &Poly::int(-2))), b(0));
        assert_eq!(gcd(&b(0), &b(1)), Poly::one());
        assert_eq!(gcd(&b(0).pow(2).mul(&b(1)), &b(0).mul(&b(1).pow(3))), b(0).mul(&b(1)));
    }

    #[test]
    fn common_factor_found() {
        let f = x().sub(&b(0)).add(&b(1));
        let g1 = x().pow(2).add(&b(1).mul(&x())).add(&Poly::int(3));
        let g2 = b(0).mul(&x()).sub(&Poly::int(5).mul(&b(1)));
        let got = gcd(&(&f * &g1), &(&f * &g2));
        assert_eq!(got, normalize(&f));
    }

    #[test]
    fn squared_factors() {
        let f = x().mul(&b(0)).add(&b(1)).add(&Poly::one());
        let got = gcd(&f.pow(3).mul(&x().add(&Poly::one())), &f.pow(2).mul(&x().sub(&b(1))));
        assert_eq!(got, normalize(&f.pow(2)));
    }

    #[test]
    fn coprime_dense() {
        let p = x().pow(3).sub(&b(0).mul(&x())).add(&b(1));
        let q = x().pow(2).add(&b(1).mul(&b(0)).mul(&x())).sub(&Poly::one());
        assert_eq!(gcd(&p, &q), Poly::one());
    }
}
