use negmom_algebra::{reverse_gf, series_expand, Matrix, Monomial, Poly, RatFunc, Rational, Relabel, Var};
use proptest::prelude::*;

use negmom_algebra::Family;

const VARS: [Var; 4] = [Var::X, Var { family: Family::B, index: 0 }, Var::Q, Var { family: Family::Lambda, index: 1 }];

/// Small Laurent polynomials in x, b0, q, lam1 with exponents in -1..=2.
fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-3i64..=3, prop::collection::vec(-1i32..=2, 4)), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(c, es)| {
                let m = VARS.iter().zip(&es).fold(Monomial::one(), |m, (&v, &e)| m.mul(&Monomial::var_pow(v, e)));
                Poly::term(m, Rational::from_int(c))
            })
            .sum()
    })
}

/// Ordinary polynomials in x with integer coefficients.
fn x_poly(max_deg: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, 1..=max_deg + 1)
}

fn from_coeffs(c: &[i64]) -> Poly {
    let cs: Vec<Poly> = c.iter().map(|&v| Poly::int(v)).collect();
    Poly::from_coeffs_in(Var::X, &cs)
}

fn int_matrix(n: usize) -> impl Strategy<Value = Matrix<Poly>> {
    prop::collection::vec(-5i64..=5, n * n).prop_map(move |v| Matrix::from_fn(n, n, |i, j| Poly::int(v[i * n + j])))
}

fn poly_matrix(n: usize) -> impl Strategy<Value = Matrix<Poly>> {
    prop::collection::vec(poly(), n * n).prop_map(move |v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&Poly::one()), a.clone());
    }

    #[test]
    fn exact_division(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).div_exact(&b), Some(a));
    }

    #[test]
    fn ratfunc_field_ops(a in poly(), b in poly(), c in poly()) {
        prop_assume!(!b.is_zero() && !c.is_zero());
        let f = RatFunc::new(a.clone(), b.clone()).unwrap();
        let g = RatFunc::new(c.clone(), b.add(&c)).unwrap_or_else(|_| RatFunc::from_poly(&c));
        prop_assert_eq!(f.add(&g).sub(&g), f.clone());
        prop_assume!(!g.is_zero());
        prop_assert_eq!(f.mul(&g).div(&g).unwrap(), f.clone());
        prop_assert_eq!(f.mul_poly(&b), RatFunc::from_poly(&a));
    }

    #[test]
    fn det_of_transpose(m in poly_matrix(3)) {
        prop_assert_eq!(m.det().unwrap(), m.transpose().det().unwrap());
    }

    #[test]
    fn det_is_multiplicative(a in int_matrix(3), b in int_matrix(3)) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), a.det().unwrap().mul(&b.det().unwrap()));
    }

    #[test]
    fn repeated_row_gives_zero(m in poly_matrix(3), i in 0usize..3, j in 0usize..3) {
        prop_assume!(i != j);
        let mut m = m;
        for c in 0..3 {
            let v = m.get(i, c).clone();
            m.set(j, c, v);
        }
        prop_assert!(m.det().unwrap().is_zero());
    }

    #[test]
    fn adjugate_gives_det_identity(m in poly_matrix(3)) {
        let d = m.det().unwrap();
        let prod = m.mul(&m.adjugate().unwrap()).unwrap();
        let want = Matrix::from_fn(3, 3, |i, j| if i == j { d.clone() } else { Poly::zero() });
        prop_assert_eq!(prod, want);
    }

    /// `[A^{-1}]_{I,J} = (-1)^{ΣI+ΣJ} det A[J^c, I^c] / det A`.
    #[test]
    fn jacobi_complementary_minor(n in 1usize..=4, seed in any::<u64>(), vals in prop::collection::vec(-4i64..=4, 16)) {
        let a = Matrix::from_fn(n, n, |i, j| Poly::int(vals[i * 4 + j]));
        let det = a.det().unwrap();
        prop_assume!(!det.is_zero());
        let inv = a.inverse().unwrap();
        let mut rng = negmom_algebra::modp::SplitMix::new(seed);
        let size = 1 + rng.below(n as u64) as usize;
        let pick = |rng: &mut negmom_algebra::modp::SplitMix| {
            let mut idx: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                idx.swap(i, rng.below(i as u64 + 1) as usize);
            }
            let mut s = idx[..size].to_vec();
            s.sort();
            s
        };
        let (rows, cols) = (pick(&mut rng), pick(&mut rng));
        let comp = |s: &[usize]| (0..n).filter(|i| !s.contains(i)).collect::<Vec<_>>();
        let lhs = inv.minor(&rows, &cols).unwrap();
        let sign = if (rows.iter().sum::<usize>() + cols.iter().sum::<usize>()) % 2 == 0 { 1 } else { -1 };
        let comp_minor = a.minor(&comp(&cols), &comp(&rows)).unwrap();
        let rhs = RatFunc::new(comp_minor.mul(&Poly::int(sign)), det).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    /// Extending a sequence to negative indices twice recovers it.
    #[test]
    fn reverse_gf_involution(p in x_poly(2), q in x_poly(3), b0 in 1i64..=3) {
        let q = from_coeffs(&q);
        prop_assume!(q.degree_in(Var::X) >= 1 && !q.coeff_of(Var::X, 0).is_zero());
        let num = from_coeffs(&p).mul(&Poly::var(Var::X)).mul(&Poly::int(b0));
        prop_assume!(num.is_zero() || num.degree_in(Var::X) < q.degree_in(Var::X));
        let f = RatFunc::new(num, q).unwrap();
        let g = reverse_gf(&f, Var::X).unwrap();
        prop_assert_eq!(reverse_gf(&g, Var::X).unwrap(), f);
    }

    #[test]
    fn relabel_is_an_involution(n in 1u32..=4, coeffs in prop::collection::vec(-3i64..=3, 1..4), seed in any::<u64>()) {
        let mut rng = negmom_algebra::modp::SplitMix::new(seed);
        let p: Poly = coeffs
            .iter()
            .map(|&c| {
                let b = Poly::var(Var::b(rng.below(n as u64 + 1) as u32));
                let l = Poly::var(Var::lam(1 + rng.below(n as u64) as u32));
                b.mul(&l).mul(&Poly::int(c))
            })
            .sum();
        let r = Relabel::R(n);
        prop_assert_eq!(r.poly(&r.poly(&p).unwrap()).unwrap(), p.clone());
        let rav = Relabel::RAv(n);
        let upper: Poly = (1..=n)
            .map(|i| Poly::var(Var::v(i)).mul(&Poly::var(Var::new(Family::UpperA, i)).pow(2)))
            .sum();
        prop_assert_eq!(rav.poly(&rav.poly(&upper).unwrap()).unwrap(), upper);
    }
}

#[test]
fn series_of_geometric() {
    let f = RatFunc::new(Poly::one(), Poly::one().sub(&Poly::var(Var::X).mul(&Poly::var(Var::b(0))))).unwrap();
    let c = series_expand(&f, Var::X, 4).unwrap();
    for (i, t) in c.iter().enumerate() {
        assert_eq!(t.to_poly().unwrap(), Poly::var(Var::b(0)).pow(i as u32));
    }
}
