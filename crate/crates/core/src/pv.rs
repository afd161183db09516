//! Closed forms expressing negative moments through peak-valley and
//! alternating sequences. Each check returns the moment side and the
//! sequence side; callers compare them.

use negmom_algebra::{Monomial, Poly, Relabel, Var};

use crate::error::MomentError;
use crate::moments::{negative_moment, NegRoute};
use crate::paths::{enumerate_alt, enumerate_pv, wt_av, wt_v, AltPattern, Boundary, PvVariant};
use crate::weights::WeightSpec;

/// The identities handled here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PvIdentity {
    /// `μ^{≤2k-1}_{-2n}(0, λ_i = V_{i-1}^{-1}V_i^{-1}) = V_0 Σ_{PV^{2,2k-1}_{2n-1}} wt`.
    TwoPv,
    /// `μ^{≤3k-1}_{-n}` for `b_i = -V_i^{-1}`, `λ = b²`, through 3-PV sequences.
    ThreePv,
    /// `μ^{≤3k}_{-n}` for the same weights, through modified 3-PV sequences.
    ThreePvModified,
    /// `μ^{≤3k-1}_{-n,r,s}` with general endpoints.
    ThreePvRs,
    /// `μ^{≤3k}_{-n,r,s}` with general endpoints.
    ThreePvModifiedRs,
    /// `μ^{≤2k-1}_{-2n}` with alternating `A`/`V` weights through `Alt^{≤k}_{2n-1}`.
    WeightedAlt,
    /// `μ^{≤3k-1}_{-n,r,s}(1,1)` as a signed count.
    SignPv,
    /// `μ^{≤3k}_{-n,r,s}(1,1)` as a signed count.
    SignPvModified,
}

impl PvIdentity {
    pub const ALL: [PvIdentity; 8] = [
        PvIdentity::TwoPv,
        PvIdentity::ThreePv,
        PvIdentity::ThreePvModified,
        PvIdentity::ThreePvRs,
        PvIdentity::ThreePvModifiedRs,
        PvIdentity::WeightedAlt,
        PvIdentity::SignPv,
        PvIdentity::SignPvModified,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PvIdentity::TwoPv => "pv2",
            PvIdentity::ThreePv => "pv3a",
            PvIdentity::ThreePvModified => "pv3b",
            PvIdentity::ThreePvRs => "pv3-rs",
            PvIdentity::ThreePvModifiedRs => "pv3-modified-rs",
            PvIdentity::WeightedAlt => "weighted-alt",
            PvIdentity::SignPv => "pv3-sign",
            PvIdentity::SignPvModified => "pv3-modified-sign",
        }
    }

    /// Whether `r`, `s` take part.
    pub fn has_endpoints(self) -> bool {
        matches!(
            self,
            PvIdentity::ThreePvRs | PvIdentity::ThreePvModifiedRs | PvIdentity::SignPv | PvIdentity::SignPvModified
        )
    }

    /// Height bound of the moment for parameter `k`.
    pub fn bound(self, k: u32) -> u32 {
        match self {
            PvIdentity::TwoPv | PvIdentity::WeightedAlt => 2 * k - 1,
            PvIdentity::ThreePv | PvIdentity::ThreePvRs | PvIdentity::SignPv => 3 * k - 1,
            PvIdentity::ThreePvModified | PvIdentity::ThreePvModifiedRs | PvIdentity::SignPvModified => 3 * k,
        }
    }
}

/// Both sides of one instance.
#[derive(Clone, Debug, PartialEq)]
pub struct Sides {
    pub moment: Poly,
    pub sequences: Poly,
}

impl Sides {
    pub fn agree(&self) -> bool {
        self.moment == self.sequences
    }
}

fn neg_poly(n: u32, r: u32, s: u32, k: u32, spec: &WeightSpec) -> Result<Poly, MomentError> {
    let m = negative_moment(n, r, s, k, spec, NegRoute::GfReverse)?;
    m.to_poly().ok_or_else(|| MomentError::Hypothesis(format!("μ_{{-{n},{r},{s}}} = {m} is not a Laurent polynomial")))
}

fn sign(e: u32) -> Poly {
    Poly::int(if e.is_multiple_of(2) { 1 } else { -1 })
}

/// `V_0⋯V_s / V_0⋯V_{r-1}`.
fn v_prefactor(r: u32, s: u32) -> Poly {
    let mut pairs: Vec<(Var, i32)> = (0..=s).map(|t| (Var::v(t), 1)).collect();
    pairs.extend((0..r).map(|t| (Var::v(t), -1)));
    Poly::monomial(Monomial::from_pairs(pairs))
}

fn sum_v(seqs: &[Vec<u32>]) -> Poly {
    seqs.iter().map(|s| wt_v(s)).sum()
}

/// Computes both sides of `which` at `(n, k)` and, where relevant, `(r, s)`.
pub fn pv_closed_form(which: PvIdentity, n: u32, k: u32, r: u32, s: u32) -> Result<Sides, MomentError> {
    if n == 0 || k == 0 {
        return Err(MomentError::Hypothesis("n and k must be positive".into()));
    }
    let bound = which.bound(k);
    if which.has_endpoints() && (r > bound || s > bound) {
        return Err(MomentError::IndexOutOfRange { index: r.max(s), bound });
    }
    let v0 = Poly::var(Var::v(0));
    let literal = |r, s| Boundary::Literal { r, s };
    match which {
        PvIdentity::TwoPv => {
            let moment = neg_poly(2 * n, 0, 0, bound, &WeightSpec::dyck_v())?;
            let seqs = enumerate_pv(2, 2 * n - 1, bound, PvVariant::Plain, Boundary::Padded);
            Ok(Sides { moment, sequences: v0.mul(&sum_v(&seqs)) })
        }
        PvIdentity::ThreePv => {
            let moment = neg_poly(n, 0, 0, bound, &WeightSpec::v_inverse())?;
            let seqs = enumerate_pv(3, n - 1, bound, PvVariant::Plain, literal(0, 0));
            Ok(Sides { moment, sequences: v0.mul(&sum_v(&seqs)) })
        }
        PvIdentity::ThreePvModified => {
            let moment = neg_poly(n, 0, 0, bound, &WeightSpec::v_inverse())?;
            let seqs = enumerate_pv(3, n - 1, bound, PvVariant::Modified, literal(0, 0));
            Ok(Sides { moment, sequences: sign(n).mul(&v0).mul(&sum_v(&seqs)) })
        }
        PvIdentity::ThreePvRs | PvIdentity::ThreePvModifiedRs => {
            let moment = neg_poly(n, r, s, bound, &WeightSpec::v_inverse())?;
            let (variant, e) = if which == PvIdentity::ThreePvRs {
                (PvVariant::Plain, r / 3 + s / 3)
            } else {
                (PvVariant::Modified, (r + 1) / 3 + (s + 1) / 3 + n)
            };
            let seqs = enumerate_pv(3, n - 1, bound, variant, literal(r, s));
            Ok(Sides { moment, sequences: sign(e).mul(&v_prefactor(r, s)).mul(&sum_v(&seqs)) })
        }
        PvIdentity::SignPv | PvIdentity::SignPvModified => {
            let moment = neg_poly(n, r, s, bound, &WeightSpec::ones())?;
            let (variant, e) = if which == PvIdentity::SignPv {
                (PvVariant::Plain, r / 3 + s / 3 + r + s + n)
            } else {
                (PvVariant::Modified, (r + 1) / 3 + (s + 1) / 3 + r + s)
            };
            let count = enumerate_pv(3, n - 1, bound, variant, literal(r, s)).len() as i64;
            Ok(Sides { moment, sequences: sign(e).mul(&Poly::int(count)) })
        }
        PvIdentity::WeightedAlt => {
            let moment = neg_poly(2 * n, 0, 0, bound, &WeightSpec::dyck_av())?;
            let sum: Poly = enumerate_alt(2 * n - 1, k, AltPattern::UpFirst, None).iter().map(|a| wt_av(a)).sum();
            let relabeled = Relabel::RAv(k).poly(&sum)?;
            Ok(Sides { moment, sequences: Poly::var(Var::v(1)).mul(&relabeled) })
        }
    }
}

/// The bound-`3k-1` identity with the padded sequence set: the sequences
/// `a_1..a_{n-1}` are tested against zero padding, but the padding itself is
/// not. This reading is off at `n = 1`.
pub fn three_pv_padded(n: u32, k: u32) -> Result<Sides, MomentError> {
    let bound = 3 * k - 1;
    let moment = neg_poly(n, 0, 0, bound, &WeightSpec::v_inverse())?;
    let seqs = enumerate_pv(3, n - 1, bound, PvVariant::Plain, Boundary::Padded);
    Ok(Sides { moment, sequences: Poly::var(Var::v(0)).mul(&sum_v(&seqs)) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_pv_smallest() {
        let s = pv_closed_form(PvIdentity::TwoPv, 1, 1, 0, 0).unwrap();
        let v = |i| Poly::var(Var::v(i));
        assert_eq!(s.moment, v(0).mul(&v(1)));
        assert!(s.agree());
    }

    #[test]
    fn small_grids_agree() {
        for which in PvIdentity::ALL {
            for k in 1..=2 {
                for n in 1..=3 {
                    let bound = which.bound(k);
                    let ends: Vec<(u32, u32)> = if which.has_endpoints() {
                        (0..=bound).flat_map(|r| (0..=bound).map(move |s| (r, s))).collect()
                    } else {
                        vec![(0, 0)]
                    };
                    for (r, s) in ends {
                        let sides = pv_closed_form(which, n, k, r, s).unwrap();
                        assert!(sides.agree(), "{which:?} n={n} k={k} r={r} s={s}: {sides:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn padded_boundary_misses_first_negative_moment() {
        let s = three_pv_padded(1, 1).unwrap();
        assert!(s.moment.is_zero());
        assert_eq!(s.sequences, Poly::var(Var::v(0)));
        for n in 2..=4 {
            assert!(three_pv_padded(n, 1).unwrap().agree());
        }
    }

    #[test]
    fn bound_3k_needs_alternating_sign() {
        let sides = pv_closed_form(PvIdentity::ThreePvModified, 1, 1, 0, 0).unwrap();
        assert!(sides.agree());
        assert_eq!(sides.moment, Poly::var(Var::v(0)).neg());
    }

    #[test]
    fn out_of_range_endpoints() {
        assert!(pv_closed_form(PvIdentity::ThreePvRs, 1, 1, 3, 0).is_err());
        assert!(pv_closed_form(PvIdentity::TwoPv, 0, 1, 0, 0).is_err());
    }
}
