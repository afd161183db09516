//! Named identity families with default parameter grids, and a parallel
//! runner that returns certificates in a fixed order.

use std::ops::RangeInclusive;

use negmom_algebra::{Family, Matrix, Poly, RatFunc};
use rayon::prelude::*;

use crate::certificate::{sort_checks, IdentityCheck, Params};
use crate::error::MomentError;
use crate::laurent::{kamioka_limit, kamioka_moment, laurent_sigma, sigma_negative_oracle, Direction};
use crate::moments::{
    bounded_moment, moment_gf, negative_moment, negative_moments, p_at_zero, p_at_zero_closed_form, transfer_matrix,
    usmani_inverse, viennot_cf, vv_inverse, well_defined, well_defined_closed_form, NegRoute, Preset,
};
use crate::paths::{count_alt, enumerate_alt, enumerate_motzkin, enumerate_schroeder, wt_motzkin, AltPattern};
use crate::pv::{pv_closed_form, PvIdentity};
use crate::reciprocity::{
    check_a_prime, check_alt_cf, check_b_inverse, check_conjecture50, check_conjecture53, check_connection1,
    check_connection2, check_double_primed, check_dyck_motzkin, check_main, check_primed_det, check_rpp,
    check_rpp_stabilization, check_special_dets, check_theorem15, check_theorem34, RppMode,
};
use crate::weights::{Seq, WeightSpec};

macro_rules! identities {
    ($($variant:ident => $name:literal : $about:literal,)*) => {
        /// Every identity the runner knows.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Identity {
            $($variant,)*
        }

        impl Identity {
            pub const ALL: &'static [Identity] = &[$(Identity::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Identity::$variant => $name,)*
                }
            }

            pub fn about(self) -> &'static str {
                match self {
                    $(Identity::$variant => $about,)*
                }
            }
        }
    };
}

identities! {
    Ck => "ck": "μ^{≤2k-1}_{-2n}(0,1) = |Alt^{≤k}_{2n-1}|",
    CkRs => "ck-rs": "signed μ_{-2n,2r-2,2s-2} and μ_{-2n+1,2r-2,2s-1} count Alt with fixed ends",
    Thm15 => "thm15": "Dyck Hankel determinant reciprocity",
    Main => "main": "general reciprocity with the det(A) power and index reversal",
    Conj50 => "conj50": "row sums of Dyck transfer powers against Alt counts",
    Conj53 => "conj53": "reciprocity for b = λ = 1, k+m ≢ 2 (mod 3)",
    Thm34 => "thm34": "b = 0 reciprocity with general λ",
    DyckMotzkin => "dyck-motzkin": "Dyck moments through the b', λ' and b'', λ'' weights",
    PrimedDet => "primed-det": "det A^{≤k-1}(b', λ') = λ_1 λ_3 ⋯ λ_{2k-1}",
    DoublePrimed => "double-primed": "negative moments of the b', λ' weights",
    Rpp => "rpp": "reverse plane partitions of δ_{n+2m}/δ_n against Alt determinants",
    Pv2 => "pv2": "b = 0 negative moments through 2-PV sequences",
    Pv3a => "pv3a": "bound 3k-1 negative moments through 3-PV sequences",
    Pv3b => "pv3b": "bound 3k negative moments through modified 3-PV sequences",
    Pv3Rs => "pv3-rs": "3-PV form with endpoints r, s",
    Pv3ModifiedRs => "pv3-modified-rs": "modified 3-PV form with endpoints r, s",
    WeightedAlt => "weighted-alt": "A/V weighted alternating sequences",
    Pv3Sign => "pv3-sign": "signed 3-PV counts for b = λ = 1",
    Pv3ModifiedSign => "pv3-modified-sign": "signed modified 3-PV counts for b = λ = 1",
    Usmani => "usmani": "A times the θ/φ inverse is the identity",
    VvInv => "vv-inv": "closed-form inverse for the V-inverse weights",
    Sigma => "sigma": "negative Laurent moments through Schröder paths",
    Sch => "sch": "negative bounded Schröder counts",
    Kamioka => "kamioka": "bounded Laurent moments stabilize at the unbounded path sums",
    AltCf => "alt-cf": "continued fraction for bounded Alt counts",
    SpecialDets => "special-dets": "determinants of A^{≤k-1}(1,1) and A^{≤k-1}(b^{(k-1)},-1)",
    BInverse => "b-inverse": "B times the reversed special transfer matrix is I",
    APrime => "a-prime": "Alt counts as ε_0^T (A')^n v",
    Connection1 => "connection1": "special-weight moments as Dyck row sums",
    Connection2 => "connection2": "special-weight negative moments count Alt",
    Routes => "routes": "the three negative-moment routes agree",
    Oracle => "oracle": "transfer-matrix moments equal Motzkin path sums",
    Viennot => "viennot": "continued fraction equals the moment generating function",
    WellDefined => "well-defined": "closed forms of P_{k+1}(0) and well-definedness",
}

impl Identity {
    pub fn from_name(s: &str) -> Option<Identity> {
        Identity::ALL.iter().copied().find(|i| i.name() == s)
    }
}

/// A weight specification with the label it is reported under.
#[derive(Clone, Debug)]
pub struct NamedSpec {
    pub label: String,
    pub spec: WeightSpec,
}

impl NamedSpec {
    pub fn new(label: impl Into<String>, spec: WeightSpec) -> Self {
        NamedSpec { label: label.into(), spec }
    }
}

/// Parameter ranges; `None` selects the identity's default.
#[derive(Clone, Debug, Default)]
pub struct Grid {
    pub n: Option<RangeInclusive<u32>>,
    pub k: Option<RangeInclusive<u32>>,
    pub m: Option<RangeInclusive<u32>>,
    pub r: Option<RangeInclusive<u32>>,
    pub s: Option<RangeInclusive<u32>>,
    pub mode: Option<RppMode>,
    pub spec: Option<NamedSpec>,
}

type Job = Box<dyn Fn() -> Vec<IdentityCheck> + Send + Sync>;

fn range(r: &Option<RangeInclusive<u32>>, default: RangeInclusive<u32>) -> RangeInclusive<u32> {
    r.clone().unwrap_or(default)
}

fn pairs(a: RangeInclusive<u32>, b: RangeInclusive<u32>) -> Vec<(u32, u32)> {
    a.flat_map(|x| b.clone().map(move |y| (x, y))).collect()
}

fn triples(a: RangeInclusive<u32>, b: RangeInclusive<u32>, c: RangeInclusive<u32>) -> Vec<(u32, u32, u32)> {
    pairs(a, b).into_iter().flat_map(|(x, y)| c.clone().map(move |z| (x, y, z))).collect()
}

fn ints(params: &[(&'static str, u32)]) -> Params {
    params.iter().map(|&(k, v)| (k, v.into())).collect()
}

/// Compares two rational functions through polynomials: directly when both
/// are Laurent polynomials, cross-multiplied otherwise.
fn ratfunc_sides(a: &RatFunc, b: &RatFunc) -> (Poly, Poly) {
    match (a.to_poly(), b.to_poly()) {
        (Some(x), Some(y)) => (x, y),
        _ => (a.num().mul(b.den()), b.num().mul(a.den())),
    }
}

/// Encodes a sequence as `Σ v_i x^{i+offset}` so that one comparison
/// covers all of it and a witness names the first differing index.
fn series_poly(vals: &[Poly], offset: i32) -> Poly {
    vals.iter().enumerate().map(|(i, v)| v.mul(&Poly::var_pow(negmom_algebra::Var::X, i as i32 + offset))).sum()
}

fn matrix_poly(m: &Matrix<Poly>) -> Poly {
    series_poly(m.entries(), 0)
}

fn ck_check(n: u32, k: u32) -> IdentityCheck {
    let run = || -> Result<(Poly, Poly), MomentError> {
        if n == 0 || k == 0 {
            return Err(MomentError::Hypothesis("n and k must be positive".into()));
        }
        let mu = negative_moment(2 * n, 0, 0, 2 * k - 1, &WeightSpec::dyck(), NegRoute::GfReverse)?;
        let mu = mu.to_poly().expect("integer moment");
        Ok((mu, Poly::int(count_alt(2 * n - 1, k, AltPattern::UpFirst) as i64)))
    };
    IdentityCheck::from_result("ck", ints(&[("n", n), ("k", k)]), run())
}

fn ck_rs_checks(n: u32, k: u32, r: u32, s: u32) -> Vec<IdentityCheck> {
    let dyck = WeightSpec::dyck();
    let sign = |e: u32| Poly::int(if e.is_multiple_of(2) { 1 } else { -1 });
    let part = |which: &str, len_shift: i64| -> IdentityCheck {
        let params = vec![("n", n.into()), ("k", k.into()), ("r", r.into()), ("s", s.into()), ("part", which.into())];
        let run = || -> Result<(Poly, Poly), MomentError> {
            if n == 0 || !(1..=k).contains(&r) || !(1..=k).contains(&s) {
                return Err(MomentError::Hypothesis("need n ≥ 1 and 1 ≤ r, s ≤ k".into()));
            }
            let (idx, col) = if len_shift == 1 { (2 * n, 2 * s - 2) } else { (2 * n - 1, 2 * s - 1) };
            let mu = negative_moment(idx, 2 * r - 2, col, 2 * k - 1, &dyck, NegRoute::GfReverse)?;
            let len = (2 * n as i64 + len_shift) as u32;
            let count = enumerate_alt(len, k, AltPattern::UpFirst, Some((r, s))).len() as i64;
            Ok((sign(r + s).mul(&mu.to_poly().expect("integer moment")), Poly::int(count)))
        };
        IdentityCheck::from_result("ck-rs", params, run())
    };
    vec![part("even", 1), part("odd", 0)]
}

fn pv_check(which: PvIdentity, n: u32, k: u32, r: u32, s: u32) -> IdentityCheck {
    let mut params = ints(&[("n", n), ("k", k)]);
    if which.has_endpoints() {
        params.extend(ints(&[("r", r), ("s", s)]));
    }
    let res = pv_closed_form(which, n, k, r, s).map(|sides| (sides.moment, sides.sequences));
    IdentityCheck::from_result(which.name(), params, res)
}

fn usmani_check(k: u32, spec: &NamedSpec) -> IdentityCheck {
    let params: Params = vec![("k", k.into()), ("spec", spec.label.clone().into())];
    let run = || -> Result<(Poly, Poly), MomentError> {
        let a = transfer_matrix(k, &spec.spec).to_ratfunc();
        let prod = a.mul(&usmani_inverse(k, &spec.spec)?)?;
        let entries: Option<Vec<Poly>> = prod.entries().iter().map(|e| e.to_poly()).collect();
        let entries = entries.ok_or_else(|| MomentError::Hypothesis("product entries are not polynomial".into()))?;
        let n = k as usize + 1;
        let id: Vec<Poly> = (0..n * n).map(|t| Poly::int((t / n == t % n) as i64)).collect();
        Ok((series_poly(&entries, 0), series_poly(&id, 0)))
    };
    IdentityCheck::from_result("usmani", params, run())
}

fn vv_check(k: u32) -> IdentityCheck {
    let run = || -> Result<(Poly, Poly), MomentError> {
        let closed = vv_inverse(k)?;
        let usm = usmani_inverse(k, &WeightSpec::v_inverse())?;
        let entries: Option<Vec<Poly>> = usm.entries().iter().map(|e| e.to_poly()).collect();
        let entries = entries.ok_or_else(|| MomentError::Hypothesis("inverse is not Laurent".into()))?;
        Ok((matrix_poly(&closed), series_poly(&entries, 0)))
    };
    IdentityCheck::from_result("vv-inv", ints(&[("k", k)]), run())
}

fn sigma_check(n: u32, k: u32) -> IdentityCheck {
    let run = || -> Result<(Poly, Poly), MomentError> {
        if n == 0 {
            return Err(MomentError::Hypothesis("n must be positive".into()));
        }
        let s = WeightSpec::laurent_symbolic();
        let lhs = laurent_sigma(n, k, &s, Direction::Negative)?;
        let rhs = sigma_negative_oracle(n, k, &s)?;
        Ok(ratfunc_sides(&lhs, &RatFunc::from_poly(&rhs)))
    };
    IdentityCheck::from_result("sigma", ints(&[("n", n), ("k", k)]), run())
}

/// `σ^{≤k}_{-n}(1, 1) = |Sch^{≤k}_{2(n-1)}|`.
fn sch_check(n: u32, k: u32) -> IdentityCheck {
    let run = || -> Result<(Poly, Poly), MomentError> {
        if n == 0 {
            return Err(MomentError::Hypothesis("n must be positive".into()));
        }
        let lhs = laurent_sigma(n, k, &WeightSpec::ones(), Direction::Negative)?;
        let count = enumerate_schroeder(2 * (n - 1), Some(k)).len() as i64;
        Ok(ratfunc_sides(&lhs, &RatFunc::from_poly(&Poly::int(count))))
    };
    IdentityCheck::from_result("sch", ints(&[("n", n), ("k", k)]), run())
}

/// The bounded moment at the stabilizing height, one height above it, and
/// the unbounded path sum, for `x^n` with `n` of either sign.
fn kamioka_checks(n: i64) -> Vec<IdentityCheck> {
    let s = WeightSpec::laurent_symbolic();
    let params = |part: &str| -> Params { vec![("n", n.into()), ("part", part.into())] };
    let limit = || -> Result<(Poly, Poly), MomentError> {
        let bounded = kamioka_limit(n, &s)?;
        Ok(ratfunc_sides(&bounded, &RatFunc::from_poly(&kamioka_moment(n, &s)?)))
    };
    let stable = || -> Result<(Poly, Poly), MomentError> {
        let (at, above) = if n >= 0 {
            let m = n as u32;
            (laurent_sigma(m, m, &s, Direction::Forward)?, laurent_sigma(m, m + 1, &s, Direction::Forward)?)
        } else {
            let m = (-n) as u32;
            (laurent_sigma(m, m - 1, &s, Direction::Negative)?, laurent_sigma(m, m, &s, Direction::Negative)?)
        };
        Ok(ratfunc_sides(&at, &above))
    };
    vec![
        IdentityCheck::from_result("kamioka", params("limit"), limit()),
        IdentityCheck::from_result("kamioka", params("stable"), stable()),
    ]
}

/// Every route against the gf-reverse route, `n = 1..=n_max`.
fn routes_checks(n_max: u32, k: u32, r: u32, s: u32, spec: &NamedSpec) -> Vec<IdentityCheck> {
    let base = negative_moments(n_max, r, s, k, &spec.spec, NegRoute::GfReverse);
    [NegRoute::MatrixInverse, NegRoute::Recurrence]
        .into_iter()
        .map(|route| {
            let params: Params = vec![
                ("k", k.into()),
                ("r", r.into()),
                ("s", s.into()),
                ("n_max", n_max.into()),
                ("spec", spec.label.clone().into()),
                ("route", route.name().into()),
            ];
            let run = || -> Result<(Poly, Poly), MomentError> {
                let a = base.clone()?;
                let b = negative_moments(n_max, r, s, k, &spec.spec, route)?;
                let (mut lhs, mut rhs) = (Vec::new(), Vec::new());
                for (x, y) in a.iter().zip(&b) {
                    let (p, q) = ratfunc_sides(x, y);
                    lhs.push(p);
                    rhs.push(q);
                }
                Ok((series_poly(&lhs, 1), series_poly(&rhs, 1)))
            };
            IdentityCheck::from_result("routes", params, run())
        })
        .collect()
}

fn oracle_check(n: u32, k: u32, r: u32, s: u32) -> IdentityCheck {
    let run = || -> Result<(Poly, Poly), MomentError> {
        let spec = WeightSpec::symbolic();
        let lhs = bounded_moment(n, r, s, k, &spec)?;
        let rhs = enumerate_motzkin(n, r, s, Some(k)).iter().map(|p| wt_motzkin(p, &spec)).sum();
        Ok((lhs, rhs))
    };
    IdentityCheck::from_result("oracle", ints(&[("n", n), ("k", k), ("r", r), ("s", s)]), run())
}

fn viennot_check(k: u32) -> IdentityCheck {
    let run = || -> Result<(Poly, Poly), MomentError> {
        let spec = WeightSpec::symbolic();
        Ok(ratfunc_sides(&viennot_cf(k, &spec)?, &moment_gf(0, 0, k, &spec)?))
    };
    IdentityCheck::from_result("viennot", ints(&[("k", k)]), run())
}

fn well_defined_checks(k: u32) -> Vec<IdentityCheck> {
    [Preset::DyckSymbolic, Preset::Bsq]
        .into_iter()
        .flat_map(|preset| {
            let label = if preset == Preset::DyckSymbolic { "dyck" } else { "bsq" };
            let spec = preset.spec();
            let params =
                |part: &str| -> Params { vec![("k", k.into()), ("preset", label.into()), ("part", part.into())] };
            let p0 = p_at_zero(k + 1, &spec);
            let flag = |b: bool| Poly::int(b as i64);
            vec![
                IdentityCheck::compare("well-defined", params("p0"), p0, p_at_zero_closed_form(k + 1, preset)),
                IdentityCheck::compare(
                    "well-defined",
                    params("flag"),
                    flag(well_defined(k, &spec).defined),
                    flag(well_defined_closed_form(k, preset)),
                ),
            ]
        })
        .collect()
}

fn default_specs() -> Vec<NamedSpec> {
    vec![
        NamedSpec::new("dyck", WeightSpec::dyck()),
        NamedSpec::new("ones", WeightSpec::ones()),
        NamedSpec::new("v-inverse", WeightSpec::v_inverse()),
    ]
}

/// `λ_i = i + 1`: a concrete point where the `b = 0` identities stay cheap
/// at every size.
pub fn integer_lambda() -> Seq {
    Seq::new("i+1", |i| Poly::int(i as i64 + 1))
}

/// Plane-partition tuples `(n, m, k)` of the default grid.
pub const RPP_DEFAULT: [(u32, u32, u32); 9] =
    [(0, 1, 0), (0, 1, 1), (0, 1, 2), (1, 1, 0), (1, 1, 1), (1, 1, 2), (2, 1, 1), (0, 2, 1), (1, 2, 1)];

/// Unbounded plane-partition cases `(n, m)` checked modulo `q^8`.
pub const HWANG_DEFAULT: [(u32, u32); 3] = [(1, 1), (2, 1), (1, 2)];

fn jobs(id: Identity, g: &Grid) -> Vec<Job> {
    let mut out: Vec<Job> = Vec::new();
    macro_rules! push {
        ($f:expr) => {
            out.push(Box::new($f))
        };
    }
    let spec_or = |d: NamedSpec| g.spec.clone().unwrap_or(d);
    match id {
        Identity::Ck => {
            for (n, k) in pairs(range(&g.n, 1..=5), range(&g.k, 1..=5)) {
                push!(move || vec![ck_check(n, k)]);
            }
        }
        Identity::CkRs => {
            for (n, k) in pairs(range(&g.n, 1..=4), range(&g.k, 1..=4)) {
                for (r, s) in pairs(range(&g.r, 1..=k), range(&g.s, 1..=k)) {
                    push!(move || ck_rs_checks(n, k, r, s));
                }
            }
        }
        Identity::Thm15 => {
            for (n, k, m) in triples(range(&g.n, 0..=4), range(&g.k, 0..=3), range(&g.m, 0..=3)) {
                push!(move || vec![check_theorem15(n, k, m)]);
            }
        }
        Identity::Main => {
            let spec = spec_or(NamedSpec::new("symbolic", WeightSpec::symbolic()));
            for (n, k, m) in triples(range(&g.n, 1..=3), range(&g.k, 1..=2), range(&g.m, 1..=2)) {
                let spec = spec.clone();
                push!(move || vec![check_main(n, k, m, &spec.spec, &spec.label)]);
            }
        }
        Identity::Conj50 => {
            for (n, k, m) in triples(range(&g.n, 0..=5), range(&g.k, 0..=3), range(&g.m, 0..=3)) {
                push!(move || vec![check_conjecture50(n, k, m)]);
            }
        }
        Identity::Conj53 => {
            for (n, k, m) in triples(range(&g.n, 1..=5), range(&g.k, 1..=3), range(&g.m, 1..=3)) {
                push!(move || vec![check_conjecture53(n, k, m)]);
            }
        }
        Identity::Thm34 => {
            let chosen = g.spec.clone();
            for (n, k, m) in triples(range(&g.n, 1..=4), range(&g.k, 0..=3), range(&g.m, 0..=3)) {
                let chosen = chosen.clone();
                push!(move || {
                    let (label, lam) = match &chosen {
                        Some(s) => (s.label.clone(), s.spec.lam.clone()),
                        None if k + m <= 3 => ("symbolic".to_string(), Seq::symbolic(Family::Lambda)),
                        None => ("i+1".to_string(), integer_lambda()),
                    };
                    vec![check_theorem34(n, k, m, &lam, &label)]
                });
            }
        }
        Identity::DyckMotzkin | Identity::DoublePrimed => {
            for (n, k) in pairs(range(&g.n, 1..=4), range(&g.k, 1..=3)) {
                let lam = g.spec.clone().map(|s| (s.label, s.spec.lam));
                push!(move || {
                    let (label, lam) = lam.clone().unwrap_or(("symbolic".into(), Seq::symbolic(Family::Lambda)));
                    if id == Identity::DyckMotzkin {
                        check_dyck_motzkin(n, k, &lam, &label)
                    } else {
                        vec![check_double_primed(n, k, &lam, &label)]
                    }
                });
            }
        }
        Identity::PrimedDet => {
            for k in range(&g.k, 1..=5) {
                push!(move || vec![check_primed_det(k, &Seq::symbolic(Family::Lambda), "symbolic")]);
            }
        }
        Identity::Rpp => {
            let explicit = g.n.is_some() || g.m.is_some() || g.k.is_some();
            let modes: Vec<RppMode> = match g.mode {
                Some(m) => vec![m],
                None => vec![RppMode::SymbolicVa, RppMode::Q, RppMode::QUnbounded],
            };
            for mode in modes {
                let tuples: Vec<(u32, u32, u32)> = match (explicit, mode) {
                    (true, _) => triples(range(&g.n, 0..=1), range(&g.m, 1..=1), range(&g.k, 0..=2)),
                    (false, RppMode::QUnbounded) => HWANG_DEFAULT.iter().map(|&(n, m)| (n, m, 8)).collect(),
                    (false, _) => RPP_DEFAULT.to_vec(),
                };
                for (n, m, k) in tuples {
                    push!(move || {
                        let mut v = vec![check_rpp(n, m, k, mode)];
                        if mode == RppMode::QUnbounded {
                            v.push(check_rpp_stabilization(n, m, k));
                        }
                        v
                    });
                }
            }
        }
        Identity::Pv2
        | Identity::Pv3a
        | Identity::Pv3b
        | Identity::Pv3Rs
        | Identity::Pv3ModifiedRs
        | Identity::WeightedAlt
        | Identity::Pv3Sign
        | Identity::Pv3ModifiedSign => {
            let which = match id {
                Identity::Pv2 => PvIdentity::TwoPv,
                Identity::Pv3a => PvIdentity::ThreePv,
                Identity::Pv3b => PvIdentity::ThreePvModified,
                Identity::Pv3Rs => PvIdentity::ThreePvRs,
                Identity::Pv3ModifiedRs => PvIdentity::ThreePvModifiedRs,
                Identity::WeightedAlt => PvIdentity::WeightedAlt,
                Identity::Pv3Sign => PvIdentity::SignPv,
                _ => PvIdentity::SignPvModified,
            };
            let (dn, dk) = match which {
                PvIdentity::TwoPv => (1..=4, 1..=3),
                PvIdentity::ThreePv | PvIdentity::ThreePvModified => (1..=6, 1..=2),
                PvIdentity::WeightedAlt => (1..=3, 1..=2),
                _ => (1..=5, 1..=2),
            };
            for (n, k) in pairs(range(&g.n, dn), range(&g.k, dk)) {
                let ends = if which.has_endpoints() {
                    let b = which.bound(k.max(1));
                    pairs(range(&g.r, 0..=b), range(&g.s, 0..=b))
                } else {
                    vec![(0, 0)]
                };
                for (r, s) in ends {
                    push!(move || vec![pv_check(which, n, k, r, s)]);
                }
            }
        }
        Identity::Usmani => {
            let spec = spec_or(NamedSpec::new("symbolic", WeightSpec::symbolic()));
            for k in range(&g.k, 0..=4) {
                let spec = spec.clone();
                push!(move || vec![usmani_check(k, &spec)]);
            }
        }
        Identity::VvInv => {
            for k in range(&g.k, 0..=6) {
                push!(move || vec![vv_check(k)]);
            }
        }
        Identity::Sigma => {
            for (n, k) in pairs(range(&g.n, 1..=5), range(&g.k, 1..=3)) {
                push!(move || vec![sigma_check(n, k)]);
            }
        }
        Identity::Sch => {
            for (n, k) in pairs(range(&g.n, 1..=8), range(&g.k, 0..=5)) {
                push!(move || vec![sch_check(n, k)]);
            }
        }
        Identity::Kamioka => {
            for n in range(&g.n, 0..=4) {
                push!(move || kamioka_checks(n as i64));
                if n > 0 {
                    push!(move || kamioka_checks(-(n as i64)));
                }
            }
        }
        Identity::AltCf => {
            let order = *range(&g.n, 1..=8).end();
            for k in range(&g.k, 0..=4) {
                push!(move || vec![check_alt_cf(k, order)]);
            }
        }
        Identity::SpecialDets => {
            for k in range(&g.k, 1..=9) {
                push!(move || check_special_dets(k));
            }
        }
        Identity::BInverse => {
            for k in range(&g.k, 0..=6) {
                push!(move || vec![check_b_inverse(k)]);
            }
        }
        Identity::APrime => {
            for (n, k) in pairs(range(&g.n, 0..=8), range(&g.k, 0..=4)) {
                push!(move || vec![check_a_prime(n, k)]);
            }
        }
        Identity::Connection1 | Identity::Connection2 => {
            for (n, k) in pairs(range(&g.n, 0..=6), range(&g.k, 1..=3)) {
                push!(move || {
                    vec![if id == Identity::Connection1 { check_connection1(n, k) } else { check_connection2(n, k) }]
                });
            }
        }
        Identity::Routes => {
            let specs = g.spec.clone().map(|s| vec![s]).unwrap_or_else(default_specs);
            let n_max = *range(&g.n, 1..=6).end();
            for spec in specs {
                for k in range(&g.k, 0..=6) {
                    for (r, s) in pairs(range(&g.r, 0..=k), range(&g.s, 0..=k)) {
                        if r > k || s > k {
                            continue;
                        }
                        let spec = spec.clone();
                        push!(move || routes_checks(n_max, k, r, s, &spec));
                    }
                }
            }
        }
        Identity::Oracle => {
            for (n, k) in pairs(range(&g.n, 0..=8), range(&g.k, 0..=4)) {
                for (r, s) in pairs(range(&g.r, 0..=k), range(&g.s, 0..=k)) {
                    if r <= k && s <= k {
                        push!(move || vec![oracle_check(n, k, r, s)]);
                    }
                }
            }
        }
        Identity::Viennot => {
            for k in range(&g.k, 0..=4) {
                push!(move || vec![viennot_check(k)]);
            }
        }
        Identity::WellDefined => {
            for k in range(&g.k, 0..=10) {
                push!(move || well_defined_checks(k));
            }
        }
    }
    out
}

/// Runs every tuple of `id` over `grid` on the current rayon pool and
/// returns the certificates sorted by parameters.
pub fn run(id: Identity, grid: &Grid) -> Vec<IdentityCheck> {
    let mut checks: Vec<IdentityCheck> = jobs(id, grid).par_iter().flat_map_iter(|j| j()).collect();
    sort_checks(&mut checks);
    checks
}
