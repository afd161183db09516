//! Structured outcomes of identity checks, one per parameter tuple.

use std::fmt;

use negmom_algebra::Poly;

use crate::error::MomentError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    Int(i64),
    Text(String),
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Int(v) => write!(f, "{v}"),
            Param::Text(s) => f.write_str(s),
        }
    }
}

impl From<u32> for Param {
    fn from(v: u32) -> Self {
        Param::Int(v as i64)
    }
}

impl From<i64> for Param {
    fn from(v: i64) -> Self {
        Param::Int(v)
    }
}

impl From<&str> for Param {
    fn from(v: &str) -> Self {
        Param::Text(v.to_string())
    }
}

impl From<String> for Param {
    fn from(v: String) -> Self {
        Param::Text(v)
    }
}

pub type Params = Vec<(&'static str, Param)>;

/// Both sides of one instance of an identity and the verdict.
///
/// `lhs` and `rhs` are exact; `Pass` holds iff they are equal. A failure
/// carries the leading term of `lhs - rhs` as witness.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck {
    pub name: String,
    pub params: Params,
    pub lhs: Poly,
    pub rhs: Poly,
    pub status: Status,
    pub witness: Option<String>,
    pub reason: Option<String>,
}

impl IdentityCheck {
    pub fn compare(name: impl Into<String>, params: Params, lhs: Poly, rhs: Poly) -> Self {
        let diff = lhs.sub(&rhs);
        let (status, witness) = match diff.leading() {
            None => (Status::Pass, None),
            Some((m, c)) => (Status::Fail, Some(Poly::term(m.clone(), c.clone()).to_string())),
        };
        IdentityCheck { name: name.into(), params, lhs, rhs, status, witness, reason: None }
    }

    pub fn skipped(name: impl Into<String>, params: Params, reason: impl Into<String>) -> Self {
        IdentityCheck {
            name: name.into(),
            params,
            lhs: Poly::zero(),
            rhs: Poly::zero(),
            status: Status::Skipped,
            witness: None,
            reason: Some(reason.into()),
        }
    }

    pub fn errored(name: impl Into<String>, params: Params, reason: impl Into<String>) -> Self {
        IdentityCheck { status: Status::Fail, ..IdentityCheck::skipped(name, params, reason) }
    }

    /// Hypothesis violations and undefined negative moments become
    /// `Skipped`; any other error is a failure.
    pub fn from_result(name: &str, params: Params, r: Result<(Poly, Poly), MomentError>) -> Self {
        match r {
            Ok((lhs, rhs)) => IdentityCheck::compare(name, params, lhs, rhs),
            Err(e @ (MomentError::IllDefined { .. } | MomentError::Hypothesis(_) | MomentError::ZeroWeight(_))) => {
                IdentityCheck::skipped(name, params, e.to_string())
            }
            Err(e) => IdentityCheck::errored(name, params, e.to_string()),
        }
    }

    pub fn with_reason(mut self, reason: impl Into<String>) -> Self {
        self.reason = Some(reason.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn param_string(&self) -> String {
        self.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",")
    }

    /// `NAME params=... status=...`, plus the witness or reason when present.
    pub fn line(&self) -> String {
        let mut s = format!("{} params={} status={}", self.name, self.param_string(), self.status.as_str());
        if let Some(w) = &self.witness {
            s.push_str(&format!(" witness={w}"));
        }
        if self.status != Status::Pass {
            if let Some(r) = &self.reason {
                s.push_str(&format!(" reason=\"{r}\""));
            }
        }
        s
    }

    fn sort_key(&self) -> (&str, Vec<&Param>) {
        (&self.name, self.params.iter().map(|(_, v)| v).collect())
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.line())
    }
}

/// Deterministic order: by identity name, then by parameter values.
pub fn sort_checks(checks: &mut [IdentityCheck]) {
    checks.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
}

#[cfg(test)]
mod tests {
    use super::*;
    use negmom_algebra::Var;

    #[test]
    fn lines() {
        let p: Params = vec![("n", 1u32.into()), ("k", 2u32.into())];
        let ok = IdentityCheck::compare("ck", p.clone(), Poly::int(3), Poly::int(3));
        assert_eq!(ok.line(), "ck params=n=1,k=2 status=PASS");
        let bad = IdentityCheck::compare("ck", p.clone(), Poly::var(Var::b(0)), Poly::int(3));
        assert_eq!(bad.status, Status::Fail);
        assert!(bad.line().contains("witness="));
        let skip = IdentityCheck::skipped("conj53", p, "k+m = 2 mod 3");
        assert!(skip.line().ends_with("status=SKIPPED reason=\"k+m = 2 mod 3\""));
    }

    #[test]
    fn ordering_is_numeric() {
        let mk = |n: u32| IdentityCheck::compare("x", vec![("n", n.into())], Poly::zero(), Poly::zero());
        let mut v = vec![mk(10), mk(2), mk(1)];
        sort_checks(&mut v);
        let ns: Vec<String> = v.iter().map(|c| c.param_string()).collect();
        assert_eq!(ns, ["n=1", "n=2", "n=10"]);
    }
}
