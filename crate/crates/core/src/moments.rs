//! Bounded moments, orthogonal polynomials, generating functions, and three
//! independent routes to negative moments.

use negmom_algebra::{cf_eval, reverse_gf, series_expand, AlgebraError, Matrix, Monomial, Poly, RatFunc, Var};

use crate::error::MomentError;
use crate::weights::WeightSpec;

fn x() -> Poly {
    Poly::var(Var::X)
}

fn check_index(i: u32, k: u32) -> Result<(), MomentError> {
    if i > k {
        return Err(MomentError::IndexOutOfRange { index: i, bound: k });
    }
    Ok(())
}

/// `A^{≤k}`: diagonal `b_0..b_k`, superdiagonal 1, subdiagonal `λ_1..λ_k`.
pub fn transfer_matrix(k: u32, spec: &WeightSpec) -> Matrix<Poly> {
    let n = k as usize + 1;
    Matrix::from_fn(n, n, |i, j| {
        if i == j {
            spec.b(i as u32)
        } else if j == i + 1 {
            Poly::one()
        } else if i == j + 1 {
            spec.lam(i as u32)
        } else {
            Poly::zero()
        }
    })
}

/// Row vectors `ε_r^T A^n` for `n = 0..=n_max`.
pub fn moment_rows(n_max: u32, r: u32, k: u32, spec: &WeightSpec) -> Result<Vec<Vec<Poly>>, MomentError> {
    check_index(r, k)?;
    let n = k as usize + 1;
    let b: Vec<Poly> = (0..=k).map(|i| spec.b(i)).collect();
    let lam: Vec<Poly> = (0..=k).map(|i| if i == 0 { Poly::zero() } else { spec.lam(i) }).collect();
    let mut v = vec![Poly::zero(); n];
    v[r as usize] = Poly::one();
    let mut out = vec![v.clone()];
    for _ in 0..n_max {
        // (vA)_j = v_{j-1} + b_j v_j + λ_{j+1} v_{j+1}
        let next: Vec<Poly> = (0..n)
            .map(|j| {
                let mut acc = v[j].mul(&b[j]);
                if j > 0 {
                    acc = acc.add(&v[j - 1]);
                }
                if j + 1 < n {
                    acc = acc.add(&v[j + 1].mul(&lam[j + 1]));
                }
                acc
            })
            .collect();
        v = next;
        out.push(v.clone());
    }
    Ok(out)
}

/// `μ^{≤k}_{n,r,s} = ε_r^T A^n ε_s`.
pub fn bounded_moment(n: u32, r: u32, s: u32, k: u32, spec: &WeightSpec) -> Result<Poly, MomentError> {
    check_index(s, k)?;
    let rows = moment_rows(n, r, k, spec)?;
    Ok(rows[n as usize][s as usize].clone())
}

/// `μ^{≤k}_{n,r,s}` for `n = 0..=n_max`.
pub fn bounded_moments(n_max: u32, r: u32, s: u32, k: u32, spec: &WeightSpec) -> Result<Vec<Poly>, MomentError> {
    check_index(s, k)?;
    Ok(moment_rows(n_max, r, k, spec)?.into_iter().map(|v| v[s as usize].clone()).collect())
}

/// Monic `P_0, ..., P_n` in `x`.
pub fn orthogonal_polys(n: u32, spec: &WeightSpec) -> Vec<Poly> {
    let mut out = vec![Poly::one()];
    let mut prev = Poly::zero();
    for i in 0..n {
        let cur = out.last().unwrap().clone();
        let next = cur.mul(&x().sub(&spec.b(i))).sub(&prev.mul(&lam_or_zero(spec, i)));
        prev = cur;
        out.push(next);
    }
    out
}

fn lam_or_zero(spec: &WeightSpec, i: u32) -> Poly {
    if i == 0 {
        Poly::zero()
    } else {
        spec.lam(i)
    }
}

pub fn orthogonal_poly(n: u32, spec: &WeightSpec) -> Poly {
    orthogonal_polys(n, spec).pop().unwrap()
}

/// `P*_0, ..., P*_n` where `P*_n(x) = x^n P_n(1/x)`.
pub fn inverted_polys(n: u32, spec: &WeightSpec) -> Vec<Poly> {
    let mut out = vec![Poly::one()];
    let mut prev = Poly::zero();
    for i in 0..n {
        let cur = out.last().unwrap().clone();
        let next =
            cur.mul(&Poly::one().sub(&spec.b(i).mul(&x()))).sub(&prev.mul(&lam_or_zero(spec, i)).mul(&x().pow(2)));
        prev = cur;
        out.push(next);
    }
    out
}

pub fn inverted_poly(n: u32, spec: &WeightSpec) -> Poly {
    inverted_polys(n, spec).pop().unwrap()
}

/// `δ^j P_m`: the polynomial built from the shifted sequences.
pub fn shifted_poly(j: u32, m: u32, spec: &WeightSpec) -> Poly {
    orthogonal_poly(m, &spec.shift(j))
}

/// `δ^j P*_m`.
pub fn shifted_inverted_poly(j: u32, m: u32, spec: &WeightSpec) -> Poly {
    inverted_poly(m, &spec.shift(j))
}

/// `P_n(0)`, without building the polynomials.
pub fn p_at_zero(n: u32, spec: &WeightSpec) -> Poly {
    let (mut prev, mut cur) = (Poly::zero(), Poly::one());
    for i in 0..n {
        let next = spec.b(i).mul(&cur).add(&lam_or_zero(spec, i).mul(&prev)).neg();
        prev = cur;
        cur = next;
    }
    cur
}

/// Weight families with a closed form for `P_n(0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    /// `b = 0`, symbolic `λ`.
    DyckSymbolic,
    /// Symbolic `b`, `λ_i = b_{i-1} b_i`.
    Bsq,
}

impl Preset {
    pub fn spec(self) -> WeightSpec {
        match self {
            Preset::DyckSymbolic => WeightSpec::dyck_symbolic(),
            Preset::Bsq => WeightSpec::bsq(crate::weights::Seq::symbolic(negmom_algebra::Family::B)),
        }
    }
}

/// `P_{2j}(0) = (-1)^j λ_1 λ_3 ⋯ λ_{2j-1}`, `P_{2j+1}(0) = 0` for `b = 0`;
/// `P_{3j}(0) = b_0⋯b_{3j-1}`, `P_{3j+1}(0) = -b_0⋯b_{3j}`, `P_{3j+2}(0) = 0`
/// for `λ = b²`.
pub fn p_at_zero_closed_form(n: u32, preset: Preset) -> Poly {
    let bs = |hi: u32| -> Poly { (0..hi).map(|i| Poly::var(Var::b(i))).product() };
    match preset {
        Preset::DyckSymbolic => {
            if n % 2 == 1 {
                return Poly::zero();
            }
            let j = n / 2;
            let p: Poly = (1..=j).map(|i| Poly::var(Var::lam(2 * i - 1))).product();
            if j.is_multiple_of(2) {
                p
            } else {
                p.neg()
            }
        }
        Preset::Bsq => match n % 3 {
            0 => bs(n),
            1 => bs(n).neg(),
            _ => Poly::zero(),
        },
    }
}

/// `k` odd for `b = 0`; `k ≢ 1 (mod 3)` for `λ = b²`.
pub fn well_defined_closed_form(k: u32, preset: Preset) -> bool {
    match preset {
        Preset::DyckSymbolic => k % 2 == 1,
        Preset::Bsq => k % 3 != 1,
    }
}

/// Whether `μ^{≤k}_{-n}` is defined, with the value of `P_{k+1}(0)` as witness.
#[derive(Clone, Debug, PartialEq)]
pub struct WellDefined {
    pub defined: bool,
    pub p0: Poly,
}

pub fn well_defined(k: u32, spec: &WeightSpec) -> WellDefined {
    let p0 = p_at_zero(k + 1, spec);
    WellDefined { defined: !p0.is_zero(), p0 }
}

fn require_defined(k: u32, spec: &WeightSpec) -> Result<(), MomentError> {
    let w = well_defined(k, spec);
    if w.defined {
        Ok(())
    } else {
        Err(MomentError::IllDefined { k, p0: w.p0.to_string() })
    }
}

fn lam_product(lo: u32, hi: u32, spec: &WeightSpec) -> Poly {
    (lo..=hi).map(|i| spec.lam(i)).product()
}

/// `Σ_{n≥0} μ^{≤k}_{n,r,s} x^n`.
pub fn moment_gf(r: u32, s: u32, k: u32, spec: &WeightSpec) -> Result<RatFunc, MomentError> {
    check_index(r, k)?;
    check_index(s, k)?;
    let (lo, hi) = (r.min(s), r.max(s));
    let mut num = x().pow(hi - lo).mul(&inverted_poly(lo, spec)).mul(&shifted_inverted_poly(hi + 1, k - hi, spec));
    if r > s {
        num = num.mul(&lam_product(s + 1, r, spec));
    }
    Ok(RatFunc::new(num, inverted_poly(k + 1, spec))?)
}

/// `Σ_{n≥1} μ^{≤k}_{-n,r,s} x^n` in closed form.
pub fn negative_moment_gf(r: u32, s: u32, k: u32, spec: &WeightSpec) -> Result<RatFunc, MomentError> {
    check_index(r, k)?;
    check_index(s, k)?;
    require_defined(k, spec)?;
    let (lo, hi) = (r.min(s), r.max(s));
    let mut num = x().neg().mul(&orthogonal_poly(lo, spec)).mul(&shifted_poly(hi + 1, k - hi, spec));
    if r > s {
        num = num.mul(&lam_product(s + 1, r, spec));
    }
    Ok(RatFunc::new(num, orthogonal_poly(k + 1, spec))?)
}

/// `1/(1 - b_0 x - λ_1 x²/(1 - b_1 x - ...))`, depth `k+1`.
pub fn viennot_cf(k: u32, spec: &WeightSpec) -> Result<RatFunc, MomentError> {
    let nums: Vec<Poly> = (0..=k).map(|i| if i == 0 { Poly::one() } else { spec.lam(i).mul(&x().pow(2)) }).collect();
    let dens: Vec<Poly> = (0..=k).map(|i| Poly::one().sub(&spec.b(i).mul(&x()))).collect();
    Ok(cf_eval(&nums, &dens)?)
}

/// `-x/(x - b_0 - λ_1/(x - b_1 - ...))`, depth `k+1`.
pub fn negative_cf(k: u32, spec: &WeightSpec) -> Result<RatFunc, MomentError> {
    require_defined(k, spec)?;
    let nums: Vec<Poly> = (0..=k).map(|i| if i == 0 { x().neg() } else { spec.lam(i) }).collect();
    let dens: Vec<Poly> = (0..=k).map(|i| x().sub(&spec.b(i))).collect();
    Ok(cf_eval(&nums, &dens)?)
}

/// Independent ways of computing `μ^{≤k}_{-n,r,s}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NegRoute {
    /// Series of the index-reversed forward generating function.
    GfReverse,
    /// `ε_r^T (A^{-1})^n ε_s` through the tridiagonal adjugate.
    MatrixInverse,
    /// Backward extension along the recurrence read off the reduced forward
    /// denominator.
    Recurrence,
}

impl NegRoute {
    pub const ALL: [NegRoute; 3] = [NegRoute::GfReverse, NegRoute::MatrixInverse, NegRoute::Recurrence];

    pub fn name(self) -> &'static str {
        match self {
            NegRoute::GfReverse => "gf-reverse",
            NegRoute::MatrixInverse => "matrix-inverse",
            NegRoute::Recurrence => "recurrence",
        }
    }
}

/// `μ^{≤k}_{-n,r,s}` for `n = 1..=n_max` (element `i` holds `n = i+1`).
pub fn negative_moments(
    n_max: u32,
    r: u32,
    s: u32,
    k: u32,
    spec: &WeightSpec,
    route: NegRoute,
) -> Result<Vec<RatFunc>, MomentError> {
    check_index(r, k)?;
    check_index(s, k)?;
    require_defined(k, spec)?;
    match route {
        NegRoute::GfReverse => {
            let rev = reverse_gf(&moment_gf(r, s, k, spec)?, Var::X)?;
            let mut c = series_expand(&rev, Var::X, n_max as usize + 1)?;
            c.remove(0);
            Ok(c)
        }
        NegRoute::MatrixInverse => {
            let (adj, det) = tridiagonal_adjugate(k, spec);
            let mut v = vec![Poly::zero(); k as usize + 1];
            v[r as usize] = Poly::one();
            let adj_t = adj.transpose();
            let mut out = Vec::with_capacity(n_max as usize);
            for n in 1..=n_max {
                // row vector times adj, written against the transpose
                v = (0..v.len()).map(|j| adj_t.row(j).iter().zip(&v).map(|(a, b)| a.mul(b)).sum()).collect();
                out.push(RatFunc::from_power_denominator(v[s as usize].clone(), &det, n)?);
            }
            Ok(out)
        }
        NegRoute::Recurrence => {
            let f = moment_gf(r, s, k, spec)?;
            let q = f.den().coeffs_in(Var::X);
            let d = q.len() - 1;
            if d == 0 {
                return Ok(vec![RatFunc::zero(); n_max as usize]);
            }
            let fwd = bounded_moments(d as u32 - 1, r, s, k, spec)?;
            // vals[i] holds f_{d-1-i}: forward values, then the extension
            let mut vals: Vec<RatFunc> = fwd.iter().rev().map(RatFunc::from_poly).collect();
            let qd = RatFunc::from_poly(&q[d]);
            for _ in 0..n_max {
                let len = vals.len();
                // f_{m-d} = -(Σ_{j<d} q_j f_{m-j}) / q_d with m - d the next index down
                let acc: RatFunc = (0..d).fold(RatFunc::zero(), |acc, j| acc.add(&vals[len - d + j].mul_poly(&q[j])));
                vals.push(acc.neg().div(&qd)?);
            }
            Ok(vals.split_off(d))
        }
    }
}

pub fn negative_moment(
    n: u32,
    r: u32,
    s: u32,
    k: u32,
    spec: &WeightSpec,
    route: NegRoute,
) -> Result<RatFunc, MomentError> {
    if n == 0 {
        return Ok(RatFunc::from_poly(&bounded_moment(0, r, s, k, spec)?));
    }
    Ok(negative_moments(n, r, s, k, spec, route)?.pop().unwrap())
}

/// `μ^{≤k}_{n,r,s}` for any integer `n`; negative indices go through the
/// reversed generating function.
pub fn moment_at(n: i64, r: u32, s: u32, k: u32, spec: &WeightSpec) -> Result<RatFunc, MomentError> {
    if n >= 0 {
        Ok(RatFunc::from_poly(&bounded_moment(n as u32, r, s, k, spec)?))
    } else {
        negative_moment((-n) as u32, r, s, k, spec, NegRoute::GfReverse)
    }
}

/// `θ_{-1}, θ_0, ..., θ_{k+1}` (shifted by one in the returned vector).
fn thetas(k: u32, spec: &WeightSpec) -> Vec<Poly> {
    let mut t = vec![Poly::zero(), Poly::one()];
    for i in 1..=k + 1 {
        let i = i as usize;
        let next = spec.b(i as u32 - 1).mul(&t[i]).sub(&lam_or_zero(spec, i as u32 - 1).mul(&t[i - 1]));
        t.push(next);
    }
    t
}

/// `φ_1, ..., φ_{k+3}` (index `i` stored at `i`; slot 0 unused).
fn phis(k: u32, spec: &WeightSpec) -> Vec<Poly> {
    let top = k as usize + 3;
    let mut p = vec![Poly::zero(); top + 1];
    p[top - 1] = Poly::one();
    for i in (1..=k as usize + 1).rev() {
        p[i] = spec.b(i as u32 - 1).mul(&p[i + 1]).sub(&spec.lam(i as u32).mul(&p[i + 2]));
    }
    p
}

/// Adjugate of `A^{≤k}` and its determinant `θ_{k+1}`, from the θ/φ
/// recurrences instead of cofactors.
pub fn tridiagonal_adjugate(k: u32, spec: &WeightSpec) -> (Matrix<Poly>, Poly) {
    let th = thetas(k, spec);
    let ph = phis(k, spec);
    let theta = |i: usize| &th[i + 1];
    let n = k as usize + 1;
    let adj = Matrix::from_fn(n, n, |i, j| {
        let e = if i <= j {
            theta(i).mul(&ph[j + 2])
        } else {
            lam_product(j as u32 + 1, i as u32, spec).mul(theta(j)).mul(&ph[i + 2])
        };
        if (i + j) % 2 == 0 {
            e
        } else {
            e.neg()
        }
    });
    (adj, theta(n).clone())
}

/// `(A^{≤k})^{-1}` entrywise from the θ/φ recurrences.
pub fn usmani_inverse(k: u32, spec: &WeightSpec) -> Result<Matrix<RatFunc>, MomentError> {
    let (adj, det) = tridiagonal_adjugate(k, spec);
    if det.is_zero() {
        return Err(AlgebraError::Singular(det.to_string()).into());
    }
    Ok(adj.try_map(|e| RatFunc::new(e.clone(), det.clone()))?)
}

fn v_ratio(j: u32, i: u32) -> Monomial {
    // V_0⋯V_j / V_0⋯V_{i-1}
    let mut pairs: Vec<(Var, i32)> = (0..=j).map(|t| (Var::v(t), 1)).collect();
    pairs.extend((0..i).map(|t| (Var::v(t), -1)));
    Monomial::from_pairs(pairs)
}

/// Closed-form inverse of `A^{≤k}` for `b_i = -V_i^{-1}`,
/// `λ_i = V_{i-1}^{-1} V_i^{-1}`; defined for `k ≢ 1 (mod 3)`.
pub fn vv_inverse(k: u32) -> Result<Matrix<Poly>, MomentError> {
    if k % 3 == 1 {
        return Err(MomentError::Hypothesis(format!("A^{{≤{k}}} is singular for the V-inverse weights")));
    }
    let chi = |i: usize, j: usize| -> bool {
        let (ri, rj) = (i % 3, j % 3);
        let zero = if k % 3 == 2 {
            (i <= j && (ri == 2 || rj == 0)) || (i > j && (ri == 0 || rj == 2))
        } else {
            (i <= j && (ri == 2 || rj == 1)) || (i > j && (ri == 1 || rj == 2))
        };
        !zero
    };
    let n = k as usize + 1;
    Ok(Matrix::from_fn(n, n, |i, j| {
        if !chi(i, j) {
            return Poly::zero();
        }
        let p = Poly::monomial(v_ratio(j as u32, i as u32));
        // For k ≡ 0 the entries with j ≡ 0 (i ≤ j) or i ≡ 0 (i > j) carry an
        // extra sign relative to the k ≡ -1 pattern.
        let extra = k.is_multiple_of(3) && if i <= j { j % 3 == 0 } else { i % 3 == 0 };
        if ((i / 3 + j / 3) % 2 == 0) != extra {
            p
        } else {
            p.neg()
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{enumerate_motzkin, wt_motzkin};
    use crate::weights::Seq;
    use negmom_algebra::Family;

    fn int(p: &Poly) -> i64 {
        p.constant_value().unwrap().to_i64().unwrap()
    }

    fn rint(p: &RatFunc) -> i64 {
        p.constant_value().unwrap().to_i64().unwrap()
    }

    #[test]
    fn transfer_matrix_shape() {
        let s = WeightSpec::symbolic();
        let a = transfer_matrix(1, &s);
        assert_eq!(a.get(0, 0), &Poly::var(Var::b(0)));
        assert_eq!(a.get(0, 1), &Poly::one());
        assert_eq!(a.get(1, 0), &Poly::var(Var::lam(1)));
        assert_eq!(transfer_matrix(0, &s).rows(), 1);
    }

    #[test]
    fn dyck_counts() {
        let v: Vec<i64> = bounded_moments(8, 0, 0, 3, &WeightSpec::dyck()).unwrap().iter().map(int).collect();
        assert_eq!(v, vec![1, 0, 1, 0, 2, 0, 5, 0, 13]);
        let s = WeightSpec::symbolic();
        let b0 = Poly::var(Var::b(0));
        assert_eq!(bounded_moment(2, 0, 0, 1, &s).unwrap(), b0.pow(2).add(&Poly::var(Var::lam(1))));
        assert!(bounded_moment(1, 3, 0, 2, &s).is_err());
    }

    #[test]
    fn moments_match_motzkin_oracle() {
        let s = WeightSpec::symbolic();
        for k in 0..=3 {
            for r in 0..=k {
                for sft in 0..=k {
                    let m = bounded_moments(6, r, sft, k, &s).unwrap();
                    for n in 0..=6 {
                        let oracle: Poly =
                            enumerate_motzkin(n, r, sft, Some(k)).iter().map(|p| wt_motzkin(p, &s)).sum();
                        assert_eq!(m[n as usize], oracle, "n={n} r={r} s={sft} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn polynomials() {
        let s = WeightSpec::symbolic();
        let b = |i| Poly::var(Var::b(i));
        assert_eq!(orthogonal_poly(1, &s), x().sub(&b(0)));
        let p2 = x().sub(&b(1)).mul(&x().sub(&b(0))).sub(&Poly::var(Var::lam(1)));
        assert_eq!(orthogonal_poly(2, &s), p2);
        for n in 0..5 {
            let p = orthogonal_poly(n, &s);
            let coeffs = p.coeffs_in(Var::X);
            let mut rev = coeffs.clone();
            rev.reverse();
            assert_eq!(inverted_poly(n, &s), Poly::from_coeffs_in(Var::X, &rev));
            assert_eq!(p_at_zero(n, &s), coeffs[0]);
        }
        let dyck = WeightSpec::dyck_symbolic();
        let bsq = WeightSpec::bsq(Seq::symbolic(Family::B));
        for k in 0..4 {
            assert!(p_at_zero(2 * k + 1, &dyck).is_zero());
            assert!(p_at_zero(3 * k + 2, &bsq).is_zero());
        }
    }

    #[test]
    fn well_definedness() {
        assert!(!well_defined(2, &WeightSpec::dyck()).defined);
        assert!(well_defined(3, &WeightSpec::dyck()).defined);
        let bsq = WeightSpec::bsq(Seq::symbolic(Family::B));
        assert!(!well_defined(4, &bsq).defined);
        let w = well_defined(1, &WeightSpec::ones());
        assert!(!w.defined && w.p0.is_zero());
        let err = negative_moments(2, 0, 0, 2, &WeightSpec::dyck(), NegRoute::GfReverse).unwrap_err();
        assert!(matches!(err, MomentError::IllDefined { k: 2, .. }));
    }

    #[test]
    fn gf_examples() {
        let f = moment_gf(0, 0, 1, &WeightSpec::dyck()).unwrap();
        assert_eq!(f, RatFunc::new(Poly::one(), Poly::one().sub(&x().pow(2))).unwrap());
        let s = WeightSpec::symbolic();
        let g = moment_gf(1, 0, 1, &s).unwrap();
        assert!(g.num().contains_var(Var::lam(1)));
        for k in 0..=3 {
            for r in 0..=k {
                for t in 0..=k {
                    let f = moment_gf(r, t, k, &s).unwrap();
                    let ser = series_expand(&f, Var::X, 6).unwrap();
                    let direct = bounded_moments(5, r, t, k, &s).unwrap();
                    for n in 0..6 {
                        assert_eq!(ser[n].to_poly().unwrap(), direct[n], "r={r} s={t} k={k} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn negative_gf_is_reversal() {
        let s = WeightSpec::symbolic();
        for k in 0..=2 {
            for r in 0..=k {
                for t in 0..=k {
                    let rev = reverse_gf(&moment_gf(r, t, k, &s).unwrap(), Var::X).unwrap();
                    assert_eq!(negative_moment_gf(r, t, k, &s).unwrap(), rev, "r={r} s={t} k={k}");
                }
            }
            let cf = negative_cf(k, &s).unwrap();
            assert_eq!(cf, negative_moment_gf(0, 0, k, &s).unwrap());
            assert_eq!(viennot_cf(k, &s).unwrap(), moment_gf(0, 0, k, &s).unwrap());
        }
    }

    #[test]
    fn negative_examples() {
        let d = WeightSpec::dyck();
        let v = negative_moments(5, 0, 0, 1, &d, NegRoute::GfReverse).unwrap();
        assert_eq!(v.iter().map(rint).collect::<Vec<_>>(), vec![0, 1, 0, 1, 0]);
        let w = negative_moments(3, 0, 0, 3, &d, NegRoute::GfReverse).unwrap();
        assert_eq!(w.iter().map(rint).collect::<Vec<_>>(), vec![0, 2, 0]);
        let cf = series_expand(&negative_cf(3, &d).unwrap(), Var::X, 5).unwrap();
        assert_eq!(rint(&cf[4]), 5);
    }

    #[test]
    fn routes_agree_symbolic() {
        let s = WeightSpec::symbolic();
        for k in 0..=2 {
            for r in 0..=k {
                for t in 0..=k {
                    let a = negative_moments(3, r, t, k, &s, NegRoute::GfReverse).unwrap();
                    let b = negative_moments(3, r, t, k, &s, NegRoute::MatrixInverse).unwrap();
                    let c = negative_moments(3, r, t, k, &s, NegRoute::Recurrence).unwrap();
                    assert_eq!(a, b, "r={r} s={t} k={k}");
                    assert_eq!(a, c, "r={r} s={t} k={k}");
                }
            }
        }
    }

    #[test]
    fn adjugate_matches_cofactors() {
        let s = WeightSpec::symbolic();
        for k in 0..=3 {
            let a = transfer_matrix(k, &s);
            let (adj, det) = tridiagonal_adjugate(k, &s);
            assert_eq!(det, a.det().unwrap());
            assert_eq!(adj, a.adjugate().unwrap(), "k={k}");
        }
        let inv = usmani_inverse(1, &s).unwrap();
        let d = Poly::var(Var::b(0)).mul(&Poly::var(Var::b(1))).sub(&Poly::var(Var::lam(1)));
        assert_eq!(inv.get(0, 1), &RatFunc::new(Poly::int(-1), d).unwrap());
        assert!(usmani_inverse(1, &WeightSpec::ones()).is_err());
    }

    #[test]
    fn vv_closed_form() {
        let vi = WeightSpec::v_inverse();
        for k in [2, 3, 5] {
            let inv = vv_inverse(k).unwrap();
            let prod = transfer_matrix(k, &vi).mul(&inv).unwrap();
            assert!(prod.is_identity(), "k={k}");
        }
        for k in [2, 3, 5, 6, 8, 9] {
            let u = usmani_inverse(k, &vi).unwrap().try_map(|e| e.to_poly().ok_or(())).unwrap();
            assert_eq!(vv_inverse(k).unwrap(), u, "k={k}");
        }
        assert!(vv_inverse(4).is_err());
        let inv = vv_inverse(2).unwrap();
        assert!(inv.get(2, 2).is_zero());
    }

    #[test]
    fn unsigned_pattern_misses_multiples_of_three() {
        // Without the extra sign the (0,0) entry at k = 3 comes out as +V0.
        let vi = WeightSpec::v_inverse();
        let u = usmani_inverse(3, &vi).unwrap();
        assert_eq!(u.get(0, 0).to_poly().unwrap(), Poly::var(Var::v(0)).neg());
        assert_eq!(vv_inverse(3).unwrap().get(0, 0), &Poly::var(Var::v(0)).neg());
    }
}
