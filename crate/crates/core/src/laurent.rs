//! Moments of Laurent biorthogonal polynomials: Schröder-path sums, their
//! continued fractions, and the negative versions.

use negmom_algebra::{cf_eval, reverse_gf, series_expand, Poly, RatFunc, Var};

use crate::error::MomentError;
use crate::paths::{enumerate_schroeder, wt_schroeder};
use crate::weights::WeightSpec;

fn x() -> Poly {
    Poly::var(Var::X)
}

fn a_or_zero(spec: &WeightSpec, i: u32) -> Poly {
    if i == 0 {
        Poly::zero()
    } else {
        spec.lam(i)
    }
}

/// `L_{n+1} = (x - b_n) L_n - a_n x L_{n-1}`.
pub fn laurent_poly(n: u32, spec: &WeightSpec) -> Poly {
    let (mut prev, mut cur) = (Poly::zero(), Poly::one());
    for i in 0..n {
        let next = cur.mul(&x().sub(&spec.b(i))).sub(&a_or_zero(spec, i).mul(&x()).mul(&prev));
        prev = cur;
        cur = next;
    }
    cur
}

/// `L*_n(x) = x^n L_n(1/x)`.
pub fn laurent_inverted_poly(n: u32, spec: &WeightSpec) -> Poly {
    let (mut prev, mut cur) = (Poly::zero(), Poly::one());
    for i in 0..n {
        let next = cur.mul(&Poly::one().sub(&spec.b(i).mul(&x()))).sub(&a_or_zero(spec, i).mul(&x()).mul(&prev));
        prev = cur;
        cur = next;
    }
    cur
}

/// `Σ_n σ^{≤k}_n x^n = δL*_k / L*_{k+1}`.
pub fn sigma_gf(k: u32, spec: &WeightSpec) -> Result<RatFunc, MomentError> {
    Ok(RatFunc::new(laurent_inverted_poly(k, &spec.shift(1)), laurent_inverted_poly(k + 1, spec))?)
}

/// `1/(1 - b_0 x - a_1 x/(1 - b_1 x - ...))`.
pub fn sigma_cf(k: u32, spec: &WeightSpec) -> Result<RatFunc, MomentError> {
    let nums: Vec<Poly> = (0..=k).map(|i| if i == 0 { Poly::one() } else { spec.lam(i).mul(&x()) }).collect();
    let dens: Vec<Poly> = (0..=k).map(|i| Poly::one().sub(&spec.b(i).mul(&x()))).collect();
    Ok(cf_eval(&nums, &dens)?)
}

fn require_nonzero_b(k: u32, spec: &WeightSpec) -> Result<(), MomentError> {
    match (0..=k).find(|&i| spec.b(i).is_zero()) {
        Some(i) => Err(MomentError::ZeroWeight(format!("b{i}"))),
        None => Ok(()),
    }
}

/// `Σ_{n≥1} σ^{≤k}_{-n} x^n = -x δL_k / L_{k+1}`.
pub fn sigma_negative_gf(k: u32, spec: &WeightSpec) -> Result<RatFunc, MomentError> {
    require_nonzero_b(k, spec)?;
    let num = x().neg().mul(&laurent_poly(k, &spec.shift(1)));
    Ok(RatFunc::new(num, laurent_poly(k + 1, spec))?)
}

/// `x/(b_0 - x - a_1 x/(b_1 - x - ...))`.
pub fn sigma_negative_cf(k: u32, spec: &WeightSpec) -> Result<RatFunc, MomentError> {
    require_nonzero_b(k, spec)?;
    let nums: Vec<Poly> = (0..=k).map(|i| if i == 0 { x() } else { spec.lam(i).mul(&x()) }).collect();
    let dens: Vec<Poly> = (0..=k).map(|i| spec.b(i).sub(&x())).collect();
    Ok(cf_eval(&nums, &dens)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Negative,
}

/// `σ^{≤k}_n` (forward, `n ≥ 0`) or `σ^{≤k}_{-n}` (negative, `n ≥ 1`), read
/// off the generating functions.
pub fn laurent_sigma(n: u32, k: u32, spec: &WeightSpec, dir: Direction) -> Result<RatFunc, MomentError> {
    match dir {
        Direction::Forward => {
            let c = series_expand(&sigma_gf(k, spec)?, Var::X, n as usize + 1)?;
            Ok(c[n as usize].clone())
        }
        Direction::Negative => {
            if n == 0 {
                return Err(MomentError::Hypothesis("negative index must be positive".into()));
            }
            require_nonzero_b(k, spec)?;
            let rev = reverse_gf(&sigma_gf(k, spec)?, Var::X)?;
            Ok(series_expand(&rev, Var::X, n as usize + 1)?[n as usize].clone())
        }
    }
}

/// `Σ_{π∈Sch^{≤k}_{2n}} wt(π; b, a)` by enumeration.
pub fn sigma_oracle(n: u32, k: Option<u32>, spec: &WeightSpec) -> Poly {
    enumerate_schroeder(2 * n, k).iter().map(|p| wt_schroeder(p, spec)).sum()
}

/// `b_0^{-1} Σ_{π∈Sch^{≤k}_{2(n-1)}} wt(π; b', a')`, the path side for
/// `σ^{≤k}_{-n}`.
pub fn sigma_negative_oracle(n: u32, k: u32, spec: &WeightSpec) -> Result<Poly, MomentError> {
    if n == 0 {
        return Err(MomentError::Hypothesis("negative index must be positive".into()));
    }
    let primed = spec.laurent_primed(k)?;
    let sum = sigma_oracle(n - 1, Some(k), &primed);
    Ok(spec.b(0).powi(-1)?.mul(&sum))
}

/// The moment of `x^n` for any integer `n`, as an unbounded Schröder-path
/// sum: `Σ_{Sch_{2n}} wt(b, a)` for `n ≥ 0` and
/// `b_0^{-1} Σ_{Sch_{2m}} wt(b', a')` for `n = -m-1`.
pub fn kamioka_moment(n: i64, spec: &WeightSpec) -> Result<Poly, MomentError> {
    if n >= 0 {
        return Ok(sigma_oracle(n as u32, None, spec));
    }
    let m = (-n - 1) as u32;
    let primed = spec.laurent_primed(m)?;
    Ok(spec.b(0).powi(-1)?.mul(&sigma_oracle(m, None, &primed)))
}

/// The same moment through bounded sums at the height where they stop
/// changing: `σ^{≤n}_n` and `σ^{≤m-1}_{-m}`.
pub fn kamioka_limit(n: i64, spec: &WeightSpec) -> Result<RatFunc, MomentError> {
    if n >= 0 {
        laurent_sigma(n as u32, n as u32, spec, Direction::Forward)
    } else {
        let m = (-n) as u32;
        laurent_sigma(m, m - 1, spec, Direction::Negative)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(p: &RatFunc) -> i64 {
        p.constant_value().unwrap().to_i64().unwrap()
    }

    #[test]
    fn small_values() {
        let ones = WeightSpec::ones();
        assert_eq!(int(&laurent_sigma(0, 3, &ones, Direction::Forward).unwrap()), 1);
        assert_eq!(int(&laurent_sigma(2, 1, &ones, Direction::Forward).unwrap()), 5);
        let s = WeightSpec::laurent_symbolic();
        let one = laurent_sigma(1, 2, &s, Direction::Forward).unwrap().to_poly().unwrap();
        assert_eq!(one, Poly::var(Var::b(0)).add(&Poly::var(Var::a(1))));
        assert_eq!(kamioka_moment(0, &s).unwrap(), Poly::one());
        assert_eq!(kamioka_moment(-1, &s).unwrap(), Poly::var_pow(Var::b(0), -1));
    }

    #[test]
    fn gf_cf_and_oracle() {
        let s = WeightSpec::laurent_symbolic();
        for k in 0..=2 {
            assert_eq!(sigma_gf(k, &s).unwrap(), sigma_cf(k, &s).unwrap());
            assert_eq!(sigma_negative_gf(k, &s).unwrap(), sigma_negative_cf(k, &s).unwrap());
            assert_eq!(sigma_negative_gf(k, &s).unwrap(), reverse_gf(&sigma_gf(k, &s).unwrap(), Var::X).unwrap());
            for n in 0..=3 {
                let f = laurent_sigma(n, k, &s, Direction::Forward).unwrap().to_poly().unwrap();
                assert_eq!(f, sigma_oracle(n, Some(k), &s), "n={n} k={k}");
            }
            for n in 1..=3 {
                let g = laurent_sigma(n, k, &s, Direction::Negative).unwrap().to_poly().unwrap();
                assert_eq!(g, sigma_negative_oracle(n, k, &s).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn zero_b_rejected() {
        let s = WeightSpec::dyck();
        assert!(matches!(laurent_sigma(1, 1, &s, Direction::Negative), Err(MomentError::ZeroWeight(_))));
    }
}
