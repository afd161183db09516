//! The weight mini-language:
//! `zero | one | neg-one | bsq | b-special:<ell> | v-inverse | dyck-v | custom:[<csv>] | symbolic`.
//!
//! Sequence-valued forms fill one slot; `bsq` is a `λ` form built from the
//! chosen `b`; `b-special`, `v-inverse` and `dyck-v` name whole specs.

use std::fmt;
use std::str::FromStr;

use negmom_algebra::{Family, Rational};
use negmom_core::{Seq, WeightSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecExpression {
    Zero,
    One,
    NegOne,
    Symbolic,
    Custom(Vec<Rational>),
    Bsq,
    BSpecial(u32),
    VInverse,
    DyckV,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseSpecError(String);

impl fmt::Display for ParseSpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseSpecError {}

impl FromStr for SpecExpression {
    type Err = ParseSpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = |msg: &str| ParseSpecError(format!("bad weight expression {s:?}: {msg}"));
        Ok(match s {
            "zero" => SpecExpression::Zero,
            "one" => SpecExpression::One,
            "neg-one" => SpecExpression::NegOne,
            "symbolic" => SpecExpression::Symbolic,
            "bsq" => SpecExpression::Bsq,
            "v-inverse" => SpecExpression::VInverse,
            "dyck-v" => SpecExpression::DyckV,
            _ => {
                if let Some(ell) = s.strip_prefix("b-special:") {
                    SpecExpression::BSpecial(ell.parse().map_err(|_| bad("ell must be a nonnegative integer"))?)
                } else if let Some(body) = s.strip_prefix("custom:") {
                    let inner = body
                        .strip_prefix('[')
                        .and_then(|b| b.strip_suffix(']'))
                        .ok_or_else(|| bad("expected custom:[v0,v1,...]"))?;
                    let vals = inner
                        .split(',')
                        .map(str::trim)
                        .filter(|t| !t.is_empty())
                        .map(|t| t.parse::<Rational>().map_err(|_| bad(&format!("{t:?} is not a rational"))))
                        .collect::<Result<Vec<_>, _>>()?;
                    SpecExpression::Custom(vals)
                } else {
                    return Err(bad(
                        "expected zero, one, neg-one, bsq, b-special:<ell>, v-inverse, dyck-v, custom:[...] or symbolic",
                    ));
                }
            }
        })
    }
}

impl fmt::Display for SpecExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecExpression::Zero => f.write_str("zero"),
            SpecExpression::One => f.write_str("one"),
            SpecExpression::NegOne => f.write_str("neg-one"),
            SpecExpression::Symbolic => f.write_str("symbolic"),
            SpecExpression::Custom(v) => {
                let body: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "custom:[{}]", body.join(","))
            }
            SpecExpression::Bsq => f.write_str("bsq"),
            SpecExpression::BSpecial(ell) => write!(f, "b-special:{ell}"),
            SpecExpression::VInverse => f.write_str("v-inverse"),
            SpecExpression::DyckV => f.write_str("dyck-v"),
        }
    }
}

impl SpecExpression {
    fn whole_spec(&self) -> Option<WeightSpec> {
        match self {
            SpecExpression::BSpecial(ell) => Some(WeightSpec::b_special(*ell)),
            SpecExpression::VInverse => Some(WeightSpec::v_inverse()),
            SpecExpression::DyckV => Some(WeightSpec::dyck_v()),
            _ => None,
        }
    }

    /// The sequence for one slot; `λ` values start at index 1.
    fn seq(&self, family: Family) -> Option<Seq> {
        let offset = if family == Family::B { 0 } else { 1 };
        match self {
            SpecExpression::Zero => Some(Seq::zero()),
            SpecExpression::One => Some(Seq::one()),
            SpecExpression::NegOne => Some(Seq::constant(-1)),
            SpecExpression::Symbolic => Some(Seq::symbolic(family)),
            SpecExpression::Custom(v) => Some(Seq::custom(v.clone(), family, offset)),
            _ => None,
        }
    }
}

/// Combines the `b` and `λ` expressions. A whole-spec name may stand in
/// either slot; an explicit `λ` next to one overrides its `λ`.
pub fn build_spec(b: &SpecExpression, lam: Option<&SpecExpression>) -> Result<WeightSpec, ParseSpecError> {
    let err = |m: String| Err(ParseSpecError(m));
    if let Some(mut spec) = b.whole_spec() {
        if let Some(l) = lam {
            match l.seq(Family::Lambda) {
                Some(seq) => spec.lam = seq,
                None => return err(format!("--lambda {l} cannot be combined with --b {b}")),
            }
        }
        return Ok(spec);
    }
    if let Some(l) = lam {
        if let Some(spec) = l.whole_spec() {
            return if *b == SpecExpression::Symbolic { Ok(spec) } else { err(format!("{l} fixes b; drop --b {b}")) };
        }
    }
    let Some(bseq) = b.seq(Family::B) else {
        return err(format!("{b} describes λ, not b"));
    };
    match lam {
        Some(SpecExpression::Bsq) => Ok(WeightSpec::bsq(bseq)),
        Some(l) => Ok(WeightSpec::new(bseq, l.seq(Family::Lambda).expect("sequence form"))),
        None => Ok(WeightSpec::new(bseq, Seq::symbolic(Family::Lambda))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use negmom_algebra::{Poly, Var};

    fn parse(s: &str) -> SpecExpression {
        s.parse().unwrap()
    }

    #[test]
    fn round_trip() {
        for s in
            ["zero", "one", "neg-one", "bsq", "b-special:3", "v-inverse", "dyck-v", "custom:[1,-2,1/3]", "symbolic"]
        {
            assert_eq!(parse(s).to_string(), s);
        }
        assert!("custom:1,2".parse::<SpecExpression>().is_err());
        assert!("b-special:x".parse::<SpecExpression>().is_err());
        assert!("two".parse::<SpecExpression>().is_err());
    }

    #[test]
    fn custom_pads_symbolically() {
        let spec = build_spec(&parse("custom:[5]"), Some(&parse("custom:[7]"))).unwrap();
        assert_eq!(spec.b(0), Poly::int(5));
        assert_eq!(spec.b(1), Poly::var(Var::b(1)));
        assert_eq!(spec.lam(1), Poly::int(7));
        assert_eq!(spec.lam(2), Poly::var(Var::lam(2)));
    }

    #[test]
    fn whole_specs_and_bsq() {
        let s = build_spec(&parse("b-special:2"), None).unwrap();
        assert_eq!(s.b(0), Poly::int(2));
        assert_eq!(s.b(2), Poly::int(1));
        assert_eq!(s.lam(1), Poly::int(-1));
        let s = build_spec(&parse("one"), Some(&parse("bsq"))).unwrap();
        assert_eq!(s.lam(2), Poly::one());
        assert!(build_spec(&parse("bsq"), None).is_err());
        assert!(build_spec(&parse("one"), Some(&parse("v-inverse"))).is_err());
    }
}
