use num_traits::{One, Zero};
use proptest::prelude::*;

use symdisc::engine::{discriminant, EngineOptions};
use symdisc::polycore::{det_rational, rat, MultiPoly, Rational};
use symdisc::resultants::sylvester;
use symdisc::symforms::{enumerate_partitions, SymmetricForm};

fn small_rat() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| rat(a, b))
}

/// Polynomial in `nvars` variables with up to `terms` terms of degree <= 3.
fn poly(nvars: usize, terms: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..=3, nvars), small_rat()), 0..=terms)
        .prop_map(move |ts| MultiPoly::from_terms(nvars, ts))
}

fn nonzero_rat() -> impl Strategy<Value = Rational> {
    small_rat().prop_filter("nonzero", |x| !x.is_zero())
}

/// Binary form of exact degree `d` in both variables.
fn binary_form(d: u32) -> impl Strategy<Value = MultiPoly> {
    (nonzero_rat(), prop::collection::vec(small_rat(), d as usize - 1), nonzero_rat()).prop_map(move |(a, mid, z)| {
        let cs = std::iter::once(a).chain(mid).chain(std::iter::once(z));
        let terms = cs.into_iter().enumerate().map(|(i, c)| (vec![d - i as u32, i as u32], c));
        MultiPoly::from_terms(2, terms)
    })
}

fn point(nvars: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(small_rat(), nvars)
}

fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
    if m.is_empty() {
        return Rational::one();
    }
    let mut acc = Rational::zero();
    for j in 0..m.len() {
        let minor: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn form(n: usize, r: u32, coeffs: &[Rational]) -> SymmetricForm {
    SymmetricForm::from_pairs(n, r, enumerate_partitions(r).into_iter().zip(coeffs.iter().cloned())).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(3, 5), b in poly(3, 5), c in poly(3, 5)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(3, 4), b in poly(3, 4)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(3, 5), b in poly(3, 5), x in point(3)) {
        let (va, vb) = (a.eval(&x).unwrap(), b.eval(&x).unwrap());
        prop_assert_eq!((&a * &b).eval(&x).unwrap(), &va * &vb);
        prop_assert_eq!((&a + &b).eval(&x).unwrap(), va + vb);
    }

    #[test]
    fn determinant_matches_cofactor_expansion(m in (1usize..=4).prop_flat_map(|k| prop::collection::vec(point(k), k))) {
        prop_assert_eq!(det_rational(&m).unwrap(), cofactor_det(&m));
    }

    #[test]
    fn sylvester_swap_sign(f in binary_form(3), g in binary_form(2)) {
        let fg = sylvester(&f, &g).unwrap();
        let gf = sylvester(&g, &f).unwrap();
        // (-1)^(3*2) = 1
        prop_assert_eq!(fg, gf);
    }

    #[test]
    fn sylvester_swap_sign_odd(f in binary_form(3), g in binary_form(1)) {
        prop_assert_eq!(sylvester(&f, &g).unwrap(), -sylvester(&g, &f).unwrap());
    }

    #[test]
    fn sylvester_is_multiplicative(f in binary_form(1), g in binary_form(2), h in binary_form(2)) {
        let lhs = sylvester(&f, &(&g * &h)).unwrap();
        let rhs = &sylvester(&f, &g).unwrap() * &sylvester(&f, &h).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn expansion_is_homogeneous_and_symmetric(n in 2usize..=4, r in 2u32..=4, cs in point(5), lam in small_rat()) {
        let k = enumerate_partitions(r).len();
        let s = form(n, r, &cs[..k]).expand();
        prop_assert!(s.is_homogeneous(r));
        let swap: Vec<MultiPoly> = (0..n).map(|i| MultiPoly::var(if i < 2 { 1 - i } else { i }, n)).collect();
        prop_assert_eq!(s.compose(&swap).unwrap(), s.clone());
        // Euler: sum x_i dS/dx_i = r S
        let euler = (0..n).fold(MultiPoly::zero(n), |acc, i| &acc + &(&MultiPoly::var(i, n) * &s.derivative(i)));
        prop_assert_eq!(euler, s.scale(&Rational::from_integer(r.into())));
        let x: Vec<Rational> = (0..n).map(|i| rat(i as i64 + 1, 2)).collect();
        let lx: Vec<Rational> = x.iter().map(|v| v * &lam).collect();
        let scale = num_traits::pow(lam.clone(), r as usize);
        prop_assert_eq!(s.eval(&lx).unwrap(), scale * s.eval(&x).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // D(λS) = λ^{deg D} D(S)
    #[test]
    fn discriminant_scaling(n in 2usize..=4, r in 2u32..=3, cs in point(3), lam in small_rat()) {
        prop_assume!(!lam.is_zero());
        let k = enumerate_partitions(r).len();
        let f = form(n, r, &cs[..k]);
        let opts = EngineOptions::default();
        let d = discriminant(&f, &opts).unwrap().value().unwrap();
        let dl = discriminant(&f.scaled(&lam), &opts).unwrap().value().unwrap();
        let deg = n * (r as usize - 1).pow(n as u32 - 1);
        prop_assert_eq!(dl, num_traits::pow(lam, deg) * d);
    }
}
