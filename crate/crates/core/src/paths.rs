//! Brute-force enumerators for the lattice objects and their weights.
//!
//! Everything here is deliberately naive: these lists are the ground truth
//! the closed forms are checked against.

use std::fmt;

use negmom_algebra::{Monomial, Poly, Var};

use crate::error::MomentError;
use crate::weights::{Seq, WeightSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    D,
    H,
    U,
}

impl Step {
    fn delta(self) -> i64 {
        match self {
            Step::U => 1,
            Step::H => 0,
            Step::D => -1,
        }
    }

    fn letter(self) -> char {
        match self {
            Step::U => 'U',
            Step::H => 'H',
            Step::D => 'D',
        }
    }
}

/// Motzkin path from `(0, start)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MotzkinPath {
    pub start: u32,
    pub steps: Vec<Step>,
}

impl MotzkinPath {
    /// Heights of all lattice points, starting point included.
    pub fn heights(&self) -> Vec<u32> {
        let mut h = vec![self.start];
        let mut y = self.start as i64;
        for s in &self.steps {
            y += s.delta();
            h.push(y as u32);
        }
        h
    }

    pub fn end(&self) -> u32 {
        *self.heights().last().unwrap()
    }

    pub fn encode(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

/// All Motzkin paths of length `n` from height `r` to height `s`, staying in
/// `0..=k` (or unbounded above when `k` is `None`), in lexicographic order.
pub fn enumerate_motzkin(n: u32, r: u32, s: u32, k: Option<u32>) -> Vec<MotzkinPath> {
    fn rec(h: i64, left: u32, s: i64, k: Option<u32>, cur: &mut Vec<Step>, start: u32, out: &mut Vec<MotzkinPath>) {
        if (h - s).abs() > left as i64 {
            return;
        }
        if left == 0 {
            out.push(MotzkinPath { start, steps: cur.clone() });
            return;
        }
        for step in [Step::D, Step::H, Step::U] {
            let nh = h + step.delta();
            if nh < 0 || k.is_some_and(|k| nh > k as i64) {
                continue;
            }
            cur.push(step);
            rec(nh, left - 1, s, k, cur, start, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k.is_some_and(|k| r > k || s > k) {
        return out;
    }
    rec(r as i64, n, s as i64, k, &mut Vec::new(), r, &mut out);
    out
}

/// `b_i` per horizontal step at height `i`, `λ_i` per down step from height `i`.
pub fn wt_motzkin(p: &MotzkinPath, spec: &WeightSpec) -> Poly {
    let h = p.heights();
    let mut w = Poly::one();
    for (i, s) in p.steps.iter().enumerate() {
        match s {
            Step::H => w = w.mul(&spec.b(h[i])),
            Step::D => w = w.mul(&spec.lam(h[i])),
            Step::U => {}
        }
    }
    w
}

/// Point weight: `b_j` for every lattice point at height `j`.
pub fn pwt(p: &MotzkinPath, b: &Seq) -> Poly {
    p.heights().iter().fold(Poly::one(), |w, &j| w.mul(&b.at(j)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchStep {
    D,
    H2,
    U,
}

impl SchStep {
    fn dx(self) -> u32 {
        if self == SchStep::H2 {
            2
        } else {
            1
        }
    }

    fn dy(self) -> i64 {
        match self {
            SchStep::U => 1,
            SchStep::H2 => 0,
            SchStep::D => -1,
        }
    }

    fn label(self) -> &'static str {
        match self {
            SchStep::U => "U",
            SchStep::H2 => "H2",
            SchStep::D => "D",
        }
    }
}

/// Schröder path from `(0,0)` to `(n,0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchroederPath {
    pub steps: Vec<SchStep>,
}

impl SchroederPath {
    pub fn encode(&self) -> String {
        self.steps.iter().map(|s| s.label()).collect::<Vec<_>>().join(",")
    }

    fn start_heights(&self) -> Vec<u32> {
        let mut y = 0i64;
        self.steps
            .iter()
            .map(|s| {
                let h = y as u32;
                y += s.dy();
                h
            })
            .collect()
    }
}

impl fmt::Display for SchroederPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

/// Schröder paths of x-displacement `n` ending at height 0, bounded by `k`.
pub fn enumerate_schroeder(n: u32, k: Option<u32>) -> Vec<SchroederPath> {
    fn rec(h: i64, left: u32, k: Option<u32>, cur: &mut Vec<SchStep>, out: &mut Vec<SchroederPath>) {
        if h > left as i64 {
            return;
        }
        if left == 0 {
            out.push(SchroederPath { steps: cur.clone() });
            return;
        }
        for step in [SchStep::D, SchStep::H2, SchStep::U] {
            let nh = h + step.dy();
            if step.dx() > left || nh < 0 || k.is_some_and(|k| nh > k as i64) {
                continue;
            }
            cur.push(step);
            rec(nh, left - step.dx(), k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `b_i` per double-horizontal step at height `i`, `a_i` per down step from
/// height `i`; `spec.lam` supplies the `a` sequence.
pub fn wt_schroeder(p: &SchroederPath, spec: &WeightSpec) -> Poly {
    let h = p.start_heights();
    let mut w = Poly::one();
    for (i, s) in p.steps.iter().enumerate() {
        match s {
            SchStep::H2 => w = w.mul(&spec.b(h[i])),
            SchStep::D => w = w.mul(&spec.lam(h[i])),
            SchStep::U => {}
        }
    }
    w
}

/// Which residues are forced to be valleys and peaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PvVariant {
    /// `≡ 0` valleys, `≡ -1` peaks.
    Plain,
    /// `≡ 1` valleys, `≡ -1` peaks.
    Modified,
}

/// How the padding entries `a_0`, `a_{n+1}` take part.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Boundary {
    /// `a_0 = a_{n+1} = 0`, only `a_1..a_n` are tested.
    Padded,
    /// `a_0 = r`, `a_{n+1} = s`, and the padding entries are tested too,
    /// against whichever neighbours exist.
    Literal { r: u32, s: u32 },
}

fn position_ok(a: &[u32], i: usize, ell: u32, variant: PvVariant) -> bool {
    let x = a[i];
    let res = x % ell;
    let valley = match variant {
        PvVariant::Plain => res == 0,
        PvVariant::Modified => res == 1,
    };
    let peak = res == ell - 1;
    let lo = if i > 0 { Some(a[i - 1]) } else { None };
    let hi = a.get(i + 1).copied();
    if valley && (lo.is_some_and(|y| y <= x) || hi.is_some_and(|y| y <= x)) {
        return false;
    }
    if peak && (lo.is_some_and(|y| y >= x) || hi.is_some_and(|y| y >= x)) {
        return false;
    }
    true
}

fn padded(seq: &[u32], boundary: Boundary) -> (Vec<u32>, usize, usize) {
    let (r, s) = match boundary {
        Boundary::Padded => (0, 0),
        Boundary::Literal { r, s } => (r, s),
    };
    let mut a = Vec::with_capacity(seq.len() + 2);
    a.push(r);
    a.extend_from_slice(seq);
    a.push(s);
    let (lo, hi) = match boundary {
        Boundary::Padded => (1, seq.len()),
        Boundary::Literal { .. } => (0, seq.len() + 1),
    };
    (a, lo, hi)
}

pub fn is_pv(seq: &[u32], ell: u32, k: u32, variant: PvVariant, boundary: Boundary) -> bool {
    if seq.iter().any(|&x| x > k) {
        return false;
    }
    let (a, lo, hi) = padded(seq, boundary);
    (lo..=hi).all(|i| position_ok(&a, i, ell, variant))
}

/// All peak-valley sequences of length `n` with entries in `0..=k`, in
/// lexicographic order.
pub fn enumerate_pv(ell: u32, n: u32, k: u32, variant: PvVariant, boundary: Boundary) -> Vec<Vec<u32>> {
    let n = n as usize;
    let (mut a, lo, hi) = padded(&vec![0; n], boundary);
    let mut out = Vec::new();
    // Position i is settled once a[i+1] is placed.
    fn rec(
        a: &mut Vec<u32>,
        pos: usize,
        n: usize,
        k: u32,
        ell: u32,
        variant: PvVariant,
        lo: usize,
        hi: usize,
        out: &mut Vec<Vec<u32>>,
    ) {
        if pos == n + 1 {
            if (n.max(lo)..=hi).all(|i| position_ok(a, i, ell, variant)) {
                out.push(a[1..=n].to_vec());
            }
            return;
        }
        for x in 0..=k {
            a[pos] = x;
            let settled = pos - 1;
            if settled >= lo && settled <= hi && !position_ok(&a[..=pos], settled, ell, variant) {
                continue;
            }
            rec(a, pos + 1, n, k, ell, variant, lo, hi, out);
        }
    }
    if n == 0 {
        if (lo..=hi).all(|i| position_ok(&a, i, ell, variant)) {
            out.push(Vec::new());
        }
        return out;
    }
    rec(&mut a, 1, n, k, ell, variant, lo, hi, &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AltPattern {
    /// `a1 ≤ a2 ≥ a3 ≤ ...`
    UpFirst,
    /// `a1 ≥ a2 ≤ a3 ≥ ...`
    DownFirst,
}

pub(crate) fn alt_ok(prev: u32, next: u32, pos: usize, pattern: AltPattern) -> bool {
    // `pos` is the 0-based index of `prev`.
    let rising = pos.is_multiple_of(2) == (pattern == AltPattern::UpFirst);
    if rising {
        prev <= next
    } else {
        prev >= next
    }
}

/// Alternating sequences of length `n` with entries in `1..=k`; with
/// endpoints `(r, s)` only those with `a_1 = r`, `a_n = s`. The empty
/// sequence is returned for `n = 0` without endpoints; with endpoints and
/// `n = 0` the list is empty.
pub fn enumerate_alt(n: u32, k: u32, pattern: AltPattern, endpoints: Option<(u32, u32)>) -> Vec<Vec<u32>> {
    fn rec(
        cur: &mut Vec<u32>,
        n: usize,
        k: u32,
        pattern: AltPattern,
        ends: Option<(u32, u32)>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let pos = cur.len();
        let range: Vec<u32> = match ends {
            Some((r, _)) if pos == 0 => vec![r],
            Some((_, s)) if pos == n - 1 => vec![s],
            _ => (1..=k).collect(),
        };
        for x in range {
            if x < 1 || x > k {
                continue;
            }
            if pos > 0 && !alt_ok(cur[pos - 1], x, pos - 1, pattern) {
                continue;
            }
            cur.push(x);
            rec(cur, n, k, pattern, ends, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if endpoints.is_none() {
            out.push(Vec::new());
        }
        return out;
    }
    if let Some((r, s)) = endpoints {
        if n == 1 && r != s {
            return out;
        }
    }
    rec(&mut Vec::new(), n as usize, k, pattern, endpoints, &mut out);
    out
}

/// `|Alt^{≤k}_n|` by a transfer count, for sizes where listing is wasteful.
pub fn count_alt(n: u32, k: u32, pattern: AltPattern) -> u64 {
    if n == 0 {
        return 1;
    }
    let k = k as usize;
    let mut ways = vec![1u64; k + 1];
    ways[0] = 0;
    for pos in 0..n as usize - 1 {
        let mut next = vec![0u64; k + 1];
        for (x, &w) in ways.iter().enumerate().skip(1) {
            for (y, slot) in next.iter_mut().enumerate().skip(1) {
                if alt_ok(x as u32, y as u32, pos, pattern) {
                    *slot += w;
                }
            }
        }
        ways = next;
    }
    ways.iter().sum()
}

/// `(a_i) ↦ (k - ⌊a_i/2⌋)`, from odd-length 2-PV sequences bounded by
/// `2k-1` onto up-first alternating sequences bounded by `k`.
pub fn pv_to_alt(p: &[u32], k: u32) -> Result<Vec<u32>, MomentError> {
    if k == 0 || p.len().is_multiple_of(2) || !is_pv(p, 2, 2 * k - 1, PvVariant::Plain, Boundary::Padded) {
        return Err(MomentError::Hypothesis(format!(
            "{} is not an odd-length 2-PV sequence bounded by {}",
            fmt_seq(p),
            (2 * k).saturating_sub(1)
        )));
    }
    Ok(p.iter().map(|&a| k - a / 2).collect())
}

pub fn alt_to_pv(a: &[u32], k: u32) -> Result<Vec<u32>, MomentError> {
    if a.len().is_multiple_of(2) || a.iter().any(|&x| x < 1 || x > k) {
        return Err(MomentError::Hypothesis(format!("{} is not in Alt^{{≤{k}}} of odd length", fmt_seq(a))));
    }
    Ok(a.iter().enumerate().map(|(i, &b)| if i % 2 == 0 { 2 * (k - b) + 1 } else { 2 * (k - b) }).collect())
}

/// `∏ V_{a_i}`.
pub fn wt_v(seq: &[u32]) -> Poly {
    Poly::monomial(Monomial::from_pairs(seq.iter().map(|&a| (Var::v(a), 1))))
}

/// `V` on odd positions, `A` on even positions (1-based).
pub fn wt_av(seq: &[u32]) -> Poly {
    Poly::monomial(Monomial::from_pairs(
        seq.iter().enumerate().map(|(i, &a)| (if i % 2 == 0 { Var::v(a) } else { Var::big_a(a) }, 1)),
    ))
}

pub fn fmt_seq(seq: &[u32]) -> String {
    format!("({})", seq.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

/// Reverse plane partition of the skew staircase `δ_{n+2m}/δ_n`, where
/// `δ_p = (p-1, ..., 1, 0)`. Row `i` (1-based) covers columns
/// `max(n-i, 0)+1 ..= n+2m-i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rpp {
    pub n: u32,
    pub m: u32,
    pub rows: Vec<Vec<u32>>,
}

/// Column range of row `i` (1-based) of `δ_{n+2m}/δ_n`.
pub fn rpp_row_span(n: u32, m: u32, i: u32) -> (u32, u32) {
    (n.saturating_sub(i) + 1, n + 2 * m - i)
}

pub fn rpp_row_count(n: u32, m: u32) -> u32 {
    (n + 2 * m).saturating_sub(1)
}

impl Rpp {
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32, u32)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(ri, row)| {
            let i = ri as u32 + 1;
            let (c0, _) = rpp_row_span(self.n, self.m, i);
            row.iter().enumerate().map(move |(cj, &v)| (i, c0 + cj as u32, v))
        })
    }

    pub fn size(&self) -> u32 {
        self.rows.iter().flatten().sum()
    }

    pub fn transpose(&self) -> Rpp {
        let mut rows: Vec<Vec<u32>> = (1..=rpp_row_count(self.n, self.m))
            .map(|i| {
                let (c0, c1) = rpp_row_span(self.n, self.m, i);
                vec![0; (c1 + 1 - c0) as usize]
            })
            .collect();
        for (i, j, v) in self.cells() {
            let (c0, _) = rpp_row_span(self.n, self.m, j);
            rows[(j - 1) as usize][(i - c0) as usize] = v;
        }
        Rpp { n: self.n, m: self.m, rows }
    }

    pub fn is_valid(&self, k: u32) -> bool {
        let get = |i: u32, j: u32| -> Option<u32> {
            if i == 0 || i > rpp_row_count(self.n, self.m) {
                return None;
            }
            let (c0, c1) = rpp_row_span(self.n, self.m, i);
            if j < c0 || j > c1 {
                return None;
            }
            Some(self.rows[(i - 1) as usize][(j - c0) as usize])
        };
        self.cells()
            .all(|(i, j, v)| v <= k && get(i - 1, j).is_none_or(|u| u <= v) && get(i, j - 1).is_none_or(|l| l <= v))
    }

    pub fn encode(&self) -> String {
        let body: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect();
        format!("δ{}/δ{}:{}", self.n + 2 * self.m, self.n, body.join("|"))
    }
}

impl fmt::Display for Rpp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

/// All reverse plane partitions of `δ_{n+2m}/δ_n` with entries in `0..=k`
/// and, if given, total size below `size_below`.
pub fn enumerate_rpp(n: u32, m: u32, k: u32, size_below: Option<u32>) -> Vec<Rpp> {
    let rows_n = rpp_row_count(n, m);
    let spans: Vec<(u32, u32)> = (1..=rows_n).map(|i| rpp_row_span(n, m, i)).collect();
    let cells: Vec<(u32, u32)> =
        spans.iter().enumerate().flat_map(|(ri, &(c0, c1))| (c0..=c1).map(move |j| (ri as u32 + 1, j))).collect();
    let mut rows: Vec<Vec<u32>> = spans.iter().map(|&(c0, c1)| vec![0; (c1 + 1 - c0) as usize]).collect();
    let mut out = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        idx: usize,
        total: u32,
        cells: &[(u32, u32)],
        spans: &[(u32, u32)],
        rows: &mut Vec<Vec<u32>>,
        k: u32,
        size_below: Option<u32>,
        n: u32,
        m: u32,
        out: &mut Vec<Rpp>,
    ) {
        if idx == cells.len() {
            out.push(Rpp { n, m, rows: rows.clone() });
            return;
        }
        let (i, j) = cells[idx];
        let (c0, _) = spans[(i - 1) as usize];
        let mut lo = 0;
        if j > c0 {
            lo = lo.max(rows[(i - 1) as usize][(j - 1 - c0) as usize]);
        }
        if i > 1 {
            let (u0, u1) = spans[(i - 2) as usize];
            if (u0..=u1).contains(&j) {
                lo = lo.max(rows[(i - 2) as usize][(j - u0) as usize]);
            }
        }
        for v in lo..=k {
            if size_below.is_some_and(|b| total + v >= b) {
                break;
            }
            rows[(i - 1) as usize][(j - c0) as usize] = v;
            rec(idx + 1, total + v, cells, spans, rows, k, size_below, n, m, out);
        }
        rows[(i - 1) as usize][(j - c0) as usize] = 0;
    }
    rec(0, 0, &cells, &spans, &mut rows, k, size_below, n, m, &mut out);
    out
}

/// Cell `(i, j)` carries `A_{T(i,j)+⌊(i+j-n+1)/2⌋}` when `i+j-n` is odd and
/// `V_{...}` when it is even.
pub fn wt_rpp(t: &Rpp) -> Poly {
    let n = t.n as i64;
    let factors = t.cells().map(|(i, j, v)| {
        let d = i as i64 + j as i64 - n;
        let idx = (v as i64 + (d + 1).div_euclid(2)) as u32;
        (if d.rem_euclid(2) == 1 { Var::big_a(idx) } else { Var::v(idx) }, 1)
    });
    Poly::monomial(Monomial::from_pairs(factors))
}

/// `q^{|T|}`.
pub fn q_norm(t: &Rpp) -> Poly {
    Poly::var_pow(Var::Q, t.size() as i32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn small_motzkin_lists() {
        assert_eq!(enumerate_motzkin(0, 0, 0, Some(0)).len(), 1);
        let two: Vec<String> = enumerate_motzkin(2, 0, 0, Some(1)).iter().map(|p| p.encode()).collect();
        assert_eq!(two, vec!["HH", "UD"]);
        assert_eq!(enumerate_motzkin(4, 0, 0, None).len(), 9);
        assert!(enumerate_motzkin(3, 0, 2, Some(1)).is_empty());
    }

    #[test]
    fn motzkin_weights() {
        let s = WeightSpec::symbolic();
        let ps = enumerate_motzkin(2, 0, 0, Some(1));
        assert_eq!(wt_motzkin(&ps[0], &s), Poly::var(Var::b(0)).pow(2));
        assert_eq!(wt_motzkin(&ps[1], &s), Poly::var(Var::lam(1)));
        let b = |i| Poly::var(Var::b(i));
        assert_eq!(pwt(&ps[1], &s.b), b(0).mul(&b(1)).mul(&b(0)));
    }

    #[test]
    fn schroeder_lists() {
        assert_eq!(enumerate_schroeder(2, Some(1)).len(), 2);
        let four: Vec<String> = enumerate_schroeder(4, Some(1)).iter().map(|p| p.encode()).collect();
        assert_eq!(four.len(), 5);
        assert!(!four.contains(&"U,U,D,D".to_string()));
        assert!(four.contains(&"U,H2,D".to_string()));
        let p = SchroederPath { steps: vec![SchStep::U, SchStep::H2, SchStep::D] };
        let w = wt_schroeder(&p, &WeightSpec::laurent_symbolic());
        assert_eq!(w, Poly::var(Var::b(1)).mul(&Poly::var(Var::a(1))));
    }

    #[test]
    fn pv_examples() {
        for n in 0..4 {
            let l = enumerate_pv(2, 2 * n + 1, 1, PvVariant::Plain, Boundary::Padded);
            let expect: Vec<u32> = (0..2 * n + 1).map(|i| if i % 2 == 0 { 1 } else { 0 }).collect();
            assert_eq!(l, vec![expect]);
        }
        assert_eq!(enumerate_pv(3, 0, 5, PvVariant::Plain, Boundary::Padded), vec![Vec::<u32>::new()]);
        assert!(is_pv(&[3, 2, 7, 0, 1], 2, 7, PvVariant::Plain, Boundary::Padded));
        assert!(!is_pv(&[3, 2, 7, 0, 1], 2, 6, PvVariant::Plain, Boundary::Padded));
        let literal = enumerate_pv(3, 0, 2, PvVariant::Plain, Boundary::Literal { r: 0, s: 0 });
        assert!(literal.is_empty());
    }

    #[test]
    fn pv_enumeration_matches_filter() {
        for (ell, variant) in [(2, PvVariant::Plain), (3, PvVariant::Plain), (3, PvVariant::Modified)] {
            for n in 0..5u32 {
                for boundary in [Boundary::Padded, Boundary::Literal { r: 1, s: 2 }, Boundary::Literal { r: 0, s: 3 }] {
                    let k = 4;
                    let fast = enumerate_pv(ell, n, k, variant, boundary);
                    let mut slow = Vec::new();
                    let total = (k + 1).pow(n);
                    for code in 0..total {
                        let seq: Vec<u32> = (0..n).map(|i| code / (k + 1).pow(n - 1 - i) % (k + 1)).collect();
                        if is_pv(&seq, ell, k, variant, boundary) {
                            slow.push(seq);
                        }
                    }
                    assert_eq!(fast, slow, "ell={ell} n={n} {boundary:?}");
                }
            }
        }
    }

    #[test]
    fn alt_counts() {
        assert_eq!(enumerate_alt(1, 4, AltPattern::UpFirst, None).len(), 4);
        assert_eq!(enumerate_alt(3, 2, AltPattern::UpFirst, None).len(), 5);
        let down = enumerate_alt(3, 2, AltPattern::DownFirst, None);
        let mut sizes: Vec<u32> = down.iter().map(|s| s.iter().sum()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 4, 4, 5, 6]);
        assert!(enumerate_alt(1, 3, AltPattern::UpFirst, Some((1, 2))).is_empty());
        assert!(enumerate_alt(0, 3, AltPattern::UpFirst, Some((1, 1))).is_empty());
        for n in 0..7 {
            for k in 1..5 {
                for pat in [AltPattern::UpFirst, AltPattern::DownFirst] {
                    assert_eq!(count_alt(n, k, pat), enumerate_alt(n, k, pat, None).len() as u64);
                }
            }
        }
    }

    #[test]
    fn pv_alt_bijection() {
        assert_eq!(pv_to_alt(&[1, 0, 1], 1).unwrap(), vec![1, 1, 1]);
        assert_eq!(pv_to_alt(&[3, 2, 7, 0, 1], 4).unwrap(), vec![3, 3, 1, 4, 4]);
        assert!(pv_to_alt(&[2, 0, 1], 2).is_err());
        for k in 1..=4 {
            for n in 0..=4 {
                let pvs = enumerate_pv(2, 2 * n + 1, 2 * k - 1, PvVariant::Plain, Boundary::Padded);
                let alts = enumerate_alt(2 * n + 1, k, AltPattern::UpFirst, None);
                assert_eq!(pvs.len(), alts.len());
                let image: HashSet<Vec<u32>> = pvs.iter().map(|p| pv_to_alt(p, k).unwrap()).collect();
                assert_eq!(image, alts.iter().cloned().collect());
                for p in &pvs {
                    assert_eq!(&alt_to_pv(&pv_to_alt(p, k).unwrap(), k).unwrap(), p);
                }
            }
        }
    }

    #[test]
    fn sequence_weights() {
        assert_eq!(wt_v(&[]), Poly::one());
        let v = |i| Poly::var(Var::v(i));
        let a = |i| Poly::var(Var::big_a(i));
        assert_eq!(wt_v(&[1, 0, 1]), v(1).pow(2).mul(&v(0)));
        assert_eq!(wt_av(&[3, 3, 1, 4, 4]), v(3).mul(&a(3)).mul(&v(1)).mul(&a(4)).mul(&v(4)));
    }

    #[test]
    fn rpp_small() {
        assert_eq!(enumerate_rpp(1, 1, 0, None).len(), 1);
        let all = enumerate_rpp(1, 1, 1, None);
        assert_eq!(all.len(), 5);
        let mut sizes: Vec<u32> = all.iter().map(|t| t.size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![0, 1, 1, 2, 3]);
        for t in &all {
            assert!(t.is_valid(1));
            assert!(t.transpose().is_valid(1));
            assert_eq!(t.transpose().transpose(), *t);
        }
        let trimmed = enumerate_rpp(1, 1, 5, Some(2));
        assert_eq!(trimmed.len(), 3);
    }

    #[test]
    fn rpp_weight_indices() {
        let t = Rpp { n: 1, m: 1, rows: vec![vec![0, 0], vec![0]] };
        let a = |i| Poly::var(Var::big_a(i));
        let v = |i| Poly::var(Var::v(i));
        // (1,1): d=1 odd -> A_1; (1,2): d=2 -> V_1; (2,1): d=2 -> V_1.
        assert_eq!(wt_rpp(&t), a(1).mul(&v(1)).mul(&v(1)));
        assert_eq!(q_norm(&t), Poly::one());
    }
}
