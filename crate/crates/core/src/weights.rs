//! Coefficient sequences `b`, `λ` (or `a`) feeding the three-term recurrences.

use std::fmt;
use std::sync::Arc;

use negmom_algebra::{Family, Poly, Rational, Var};

use crate::error::MomentError;

/// An infinite sequence of Laurent polynomials, generated on demand.
#[derive(Clone)]
pub struct Seq {
    name: String,
    f: Arc<dyn Fn(u32) -> Poly + Send + Sync>,
}

impl Seq {
    pub fn new(name: impl Into<String>, f: impl Fn(u32) -> Poly + Send + Sync + 'static) -> Self {
        Seq { name: name.into(), f: Arc::new(f) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn at(&self, i: u32) -> Poly {
        (self.f)(i)
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        let c: Rational = c.into();
        let p = Poly::constant(c.clone());
        Seq::new(c.to_string(), move |_| p.clone())
    }

    pub fn zero() -> Self {
        Seq::constant(0)
    }

    pub fn one() -> Self {
        Seq::constant(1)
    }

    /// `i ↦ <family>_i`.
    pub fn symbolic(family: Family) -> Self {
        Seq::new(family.prefix(), move |i| Poly::var(Var::new(family, i)))
    }

    /// Explicit values for the first indices, symbols of `family` afterwards.
    pub fn custom(values: Vec<Rational>, family: Family, offset: u32) -> Self {
        let name = format!("[{}]", values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
        Seq::new(name, move |i| match i.checked_sub(offset).and_then(|j| values.get(j as usize)) {
            Some(v) => Poly::constant(v.clone()),
            None => Poly::var(Var::new(family, i)),
        })
    }

    /// `i ↦ s_{i+j}`.
    pub fn shift(&self, j: u32) -> Seq {
        let f = self.f.clone();
        Seq::new(format!("δ^{j}{}", self.name), move |i| f(i + j))
    }

    pub fn values(&self, range: std::ops::Range<u32>) -> Vec<Poly> {
        range.map(|i| self.at(i)).collect()
    }
}

impl fmt::Debug for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// The pair `(b, λ)` of a three-term recurrence. In the Laurent setting the
/// second sequence plays the role of `a`.
#[derive(Clone, Debug)]
pub struct WeightSpec {
    pub b: Seq,
    pub lam: Seq,
}

fn v_inv(i: u32) -> Poly {
    Poly::var_pow(Var::v(i), -1)
}

impl WeightSpec {
    pub fn new(b: Seq, lam: Seq) -> Self {
        WeightSpec { b, lam }
    }

    pub fn name(&self) -> String {
        format!("b={},lam={}", self.b.name(), self.lam.name())
    }

    pub fn b(&self, i: u32) -> Poly {
        self.b.at(i)
    }

    pub fn lam(&self, i: u32) -> Poly {
        self.lam.at(i)
    }

    /// Independent indeterminates `b_i`, `λ_i`.
    pub fn symbolic() -> Self {
        WeightSpec::new(Seq::symbolic(Family::B), Seq::symbolic(Family::Lambda))
    }

    /// `b = 0`, `λ = 1`: bounded Dyck paths.
    pub fn dyck() -> Self {
        WeightSpec::new(Seq::zero(), Seq::one())
    }

    /// `b = λ = 1`: bounded Motzkin paths.
    pub fn ones() -> Self {
        WeightSpec::new(Seq::one(), Seq::one())
    }

    /// `b = 0` with symbolic `λ`.
    pub fn dyck_symbolic() -> Self {
        WeightSpec::new(Seq::zero(), Seq::symbolic(Family::Lambda))
    }

    /// `λ_i = b_{i-1} b_i`.
    pub fn bsq(b: Seq) -> Self {
        let bb = b.clone();
        let lam = Seq::new(
            format!("{}^2", b.name()),
            move |i| {
                if i == 0 {
                    Poly::zero()
                } else {
                    bb.at(i - 1).mul(&bb.at(i))
                }
            },
        );
        WeightSpec::new(b, lam)
    }

    /// `b_i = -V_i^{-1}`, `λ_i = V_{i-1}^{-1} V_i^{-1}`.
    pub fn v_inverse() -> Self {
        let b = Seq::new("-1/V", |i| v_inv(i).neg());
        let lam = Seq::new("1/VV", |i| if i == 0 { Poly::zero() } else { v_inv(i - 1).mul(&v_inv(i)) });
        WeightSpec::new(b, lam)
    }

    /// `b = 0`, `λ_i = V_{i-1}^{-1} V_i^{-1}`.
    pub fn dyck_v() -> Self {
        let lam = Seq::new("1/VV", |i| if i == 0 { Poly::zero() } else { v_inv(i - 1).mul(&v_inv(i)) });
        WeightSpec::new(Seq::zero(), lam)
    }

    /// `b = 0`, `λ_{2i-1} = V_i^{-1} A_i^{-1}`, `λ_{2i} = A_i^{-1} V_{i+1}^{-1}`.
    pub fn dyck_av() -> Self {
        let a_inv = |i: u32| Poly::var_pow(Var::big_a(i), -1);
        let lam = Seq::new("1/AV", move |i| match i {
            0 => Poly::zero(),
            _ if i % 2 == 1 => v_inv(i.div_ceil(2)).mul(&a_inv(i.div_ceil(2))),
            _ => a_inv(i / 2).mul(&v_inv(i / 2 + 1)),
        });
        WeightSpec::new(Seq::zero(), lam)
    }

    /// `b_i = 2(-1)^i` for `i < ell`, `(-1)^i` afterwards; `λ = -1`.
    pub fn b_special(ell: u32) -> Self {
        let b = Seq::new(format!("b-special:{ell}"), move |i| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            Poly::int(if i < ell { 2 * sign } else { sign })
        });
        WeightSpec::new(b, Seq::constant(-1))
    }

    /// `b'_i = λ_{2i} + λ_{2i+1}` (with `λ_0 = 0`), `λ'_i = λ_{2i-1} λ_{2i}`.
    pub fn primed(lam: &Seq) -> Self {
        let (l1, l2) = (lam.clone(), lam.clone());
        let at = move |s: &Seq, i: u32| if i == 0 { Poly::zero() } else { s.at(i) };
        let b = Seq::new(format!("{}'b", lam.name()), move |i| at(&l1, 2 * i).add(&l1.at(2 * i + 1)));
        let lp = Seq::new(format!("{}'", lam.name()), move |i| {
            if i == 0 {
                Poly::zero()
            } else {
                l2.at(2 * i - 1).mul(&l2.at(2 * i))
            }
        });
        WeightSpec::new(b, lp)
    }

    /// `b''_i = λ_{2i+1} + λ_{2i+2}`, `λ''_i = λ_{2i} λ_{2i+1}`.
    pub fn double_primed(lam: &Seq) -> Self {
        let (l1, l2) = (lam.clone(), lam.clone());
        let b = Seq::new(format!("{}''b", lam.name()), move |i| l1.at(2 * i + 1).add(&l1.at(2 * i + 2)));
        let lp = Seq::new(format!("{}''", lam.name()), move |i| {
            if i == 0 {
                Poly::zero()
            } else {
                l2.at(2 * i).mul(&l2.at(2 * i + 1))
            }
        });
        WeightSpec::new(b, lp)
    }

    /// Index reversal at bound `n`: `b_i ↦ b_{n-i}`, `λ_i ↦ λ_{n+1-i}`.
    /// Indices outside `0..=n` (resp. `1..=n`) are left alone.
    pub fn reversed(&self, n: u32) -> Self {
        let (b, lam) = (self.b.clone(), self.lam.clone());
        let rb = Seq::new(format!("R{n}({})", b.name()), move |i| if i <= n { b.at(n - i) } else { b.at(i) });
        let rl =
            Seq::new(
                format!("R{n}({})", lam.name()),
                move |i| {
                    if (1..=n).contains(&i) {
                        lam.at(n + 1 - i)
                    } else {
                        lam.at(i)
                    }
                },
            );
        WeightSpec::new(rb, rl)
    }

    /// `δ^j`: both sequences shifted by `j`.
    pub fn shift(&self, j: u32) -> Self {
        WeightSpec::new(self.b.shift(j), self.lam.shift(j))
    }

    /// Symbolic `b_i`, `a_i` for Laurent biorthogonal polynomials.
    pub fn laurent_symbolic() -> Self {
        WeightSpec::new(Seq::symbolic(Family::B), Seq::symbolic(Family::LowerA))
    }

    /// `b'_i = b_i^{-1}`, `a'_i = a_i b_{i-1}^{-1} b_i^{-1}`, prepared for
    /// indices `0..=k`.
    pub fn laurent_primed(&self, k: u32) -> Result<Self, MomentError> {
        let mut inv = Vec::with_capacity(k as usize + 1);
        for i in 0..=k {
            let bi = self.b(i);
            if bi.is_zero() {
                return Err(MomentError::ZeroWeight(format!("b{i}")));
            }
            inv.push(bi.powi(-1)?);
        }
        let a: Vec<Poly> = (0..=k).map(|i| if i == 0 { Poly::zero() } else { self.lam(i) }).collect();
        let inv2 = inv.clone();
        let b = Seq::new(format!("1/({})", self.b.name()), move |i| {
            inv.get(i as usize).cloned().expect("index beyond prepared range")
        });
        let ap = Seq::new(format!("({})'", self.lam.name()), move |i| {
            if i == 0 {
                return Poly::zero();
            }
            let i = i as usize;
            assert!(i < a.len(), "index beyond prepared range");
            a[i].mul(&inv2[i - 1]).mul(&inv2[i])
        });
        Ok(WeightSpec::new(b, ap))
    }
}
