//! Closed forms for quadratics and cubics, valid for every `n`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use super::{EngineError, FactoredDiscriminant, Factor, Mode, Regime};
use crate::critstruct::CompositionClass;
use crate::polycore::{MultiPoly, Rational};

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn q(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// Class of the type `(n-m, m)`; `m = 0` has one nonzero block and one
/// zero.
fn pair_class(n: usize, m: usize) -> CompositionClass {
    if m == 0 || m == n {
        CompositionClass {
            nonzero_parts: vec![n as u32],
            zeros: 1,
        }
    } else {
        let (a, b) = (m.max(n - m) as u32, m.min(n - m) as u32);
        CompositionClass {
            nonzero_parts: vec![a, b],
            zeros: 0,
        }
    }
}

/// `C_2^{n-1} (C_2 + n C_11)`.
pub fn closed_form_r2(n: usize) -> Result<FactoredDiscriminant, EngineError> {
    if n == 0 {
        return Err(crate::symforms::FormError::NoVariables.into());
    }
    let vars = names(&["C2", "C11"]);
    let c2 = MultiPoly::var(0, 2);
    let c11 = MultiPoly::var(1, 2);
    let factor = &c2 + &c11.scale(&q(n as i64, 1));
    Ok(FactoredDiscriminant {
        n,
        r: 2,
        mode: Mode::Symbolic,
        variables: vars,
        alpha: Rational::one(),
        cr: c2,
        beta: n as u64 - 1,
        factors: vec![Factor {
            class: CompositionClass {
                nonzero_parts: vec![n as u32],
                zeros: 0,
            },
            poly: factor,
            exponent: 1,
            degree: 1,
        }],
        regime: Regime::for_shape(n, 2),
        zero: None,
    })
}

/// The reparametrisation `B_1 = n²C_111 + nC_21 + C_3`,
/// `B_2 = nC_21 + 3C_3`, `B_3 = C_3`, as polynomials in
/// `(C3, C21, C111)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BParams {
    pub b1: MultiPoly,
    pub b2: MultiPoly,
    pub b3: MultiPoly,
}

impl BParams {
    pub fn new(n: usize) -> Self {
        let n = n as i64;
        let (c3, c21, c111) = (MultiPoly::var(0, 3), MultiPoly::var(1, 3), MultiPoly::var(2, 3));
        let b1 = &(&c111.scale(&q(n * n, 1)) + &c21.scale(&q(n, 1))) + &c3;
        let b2 = &c21.scale(&q(n, 1)) + &c3.scale(&q(3, 1));
        BParams { b1, b2, b3: c3 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum R3Variant {
    /// Product over `m = 0..n` of the two-block factors.
    Product,
    /// The same product written in the `B` parameters.
    BForm,
}

/// Closed form for symmetric cubics. Factors are kept in the form whose
/// value at the Fermat point is 1, so `α = 1` and the `m = 0` factor
/// carries `C_3²` (for `n ≥ 3`), leaving `C_3^{(n-3)2^{n-1}}` outside.
/// For `n < 3` that exponent would be negative; the `C_3²` is then taken
/// out of the `m = 0` factor instead.
pub fn closed_form_r3(n: usize, variant: R3Variant) -> Result<FactoredDiscriminant, EngineError> {
    if n == 0 {
        return Err(crate::symforms::FormError::NoVariables.into());
    }
    let vars = names(&["C3", "C21", "C111"]);
    let small = n < 3;
    // (class, factor, accumulated exponent)
    let mut groups: BTreeMap<CompositionClass, (MultiPoly, Rational)> = BTreeMap::new();
    let fact = |k: usize| -> BigInt { (1..=k as u64).fold(BigInt::one(), |a, i| a * BigInt::from(i)) };
    match variant {
        R3Variant::Product => {
            let nn = n as i64;
            let (c3, c21, c111) = (MultiPoly::var(0, 3), MultiPoly::var(1, 3), MultiPoly::var(2, 3));
            let inner = &(&c21.pow(3).scale(&q(nn, 27)) + &(&c21.pow(2) * &c3).scale(&q(1, 3)))
                - &(&c111 * &c3.pow(2));
            let tail = &(&c3 + &c21.scale(&q(nn, 1))) + &c111.scale(&q(nn * nn, 1));
            for m in 0..=n {
                let mm = m as i64;
                let poly = if small && (m == 0 || m == n) {
                    tail.clone()
                } else {
                    &inner.scale(&q(4 * mm * (nn - mm), 1)) + &(&c3.pow(2) * &tail)
                };
                let e = Rational::new(fact(n), BigInt::from(2) * fact(m) * fact(n - m));
                let slot = groups
                    .entry(pair_class(n, m))
                    .or_insert_with(|| (poly, Rational::from_integer(BigInt::from(0))));
                slot.1 += e;
            }
        }
        R3Variant::BForm => {
            let b = BParams::new(n);
            let nn = n as i64;
            let b1b3 = &b.b1 * &b.b3.pow(2);
            let b2cube = b.b2.pow(3);
            for k in 0..n {
                let kk = k as i64;
                let poly = if small && k == 0 {
                    b.b1.clone()
                } else {
                    &b1b3.scale(&q((nn - 2 * kk) * (nn - 2 * kk), nn * nn))
                        + &b2cube.scale(&q(4 * kk * (nn - kk), 27 * nn * nn))
                };
                let e = Rational::from_integer(binomial(n as u64 - 1, k as u64));
                let slot = groups
                    .entry(pair_class(n, k))
                    .or_insert_with(|| (poly, Rational::from_integer(BigInt::from(0))));
                slot.1 += e;
            }
        }
    }
    let mut factors = Vec::with_capacity(groups.len());
    for (class, (poly, e)) in groups {
        if !e.is_integer() {
            return Err(EngineError::NonIntegralExponent {
                class: class.to_string(),
                value: e.to_string(),
            });
        }
        let degree = poly.total_degree().unwrap_or(0) as u64;
        factors.push(Factor {
            class,
            poly,
            exponent: e.to_integer().to_u64().expect("exponent fits u64"),
            degree,
        });
    }
    let beta = if small {
        0
    } else {
        (n as u64 - 3) << (n - 1)
    };
    Ok(FactoredDiscriminant {
        n,
        r: 3,
        mode: Mode::Symbolic,
        variables: vars,
        alpha: Rational::one(),
        cr: MultiPoly::var(0, 3),
        beta,
        factors,
        regime: Regime::for_shape(n, 3),
        zero: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{int, parse_poly};

    #[test]
    fn quadratic_four() {
        let d = closed_form_r2(4).unwrap();
        assert_eq!(d.beta, 3);
        assert_eq!(d.factors[0].poly, parse_poly("C2 + 4*C11", &d.variables).unwrap());
        assert_eq!(d.evaluate(&[int(1), int(0)]).unwrap(), int(1));
        let one = closed_form_r2(1).unwrap();
        assert_eq!(one.beta, 0);
        assert_eq!(one.evaluate(&[int(2), int(3)]).unwrap(), int(5));
    }

    #[test]
    fn cubic_twenty_shape() {
        let d = closed_form_r3(20, R3Variant::Product).unwrap();
        assert_eq!(d.beta, 8912896);
        let exps: Vec<u64> = d.factors.iter().rev().map(|f| f.exponent).collect();
        // classes sort with (20),1 zero last; reversed gives m = 0, 1, ...
        assert_eq!(exps.len(), 11);
        let mut sorted = exps.clone();
        sorted.sort_unstable();
        let mut expected = vec![1, 20, 190, 1140, 4845, 15504, 38760, 77520, 125970, 167960, 92378];
        expected.sort_unstable();
        assert_eq!(sorted, expected);
        let m1 = d
            .factors
            .iter()
            .find(|f| f.class.nonzero_parts == vec![19, 1])
            .unwrap();
        assert_eq!(
            m1.poly,
            parse_poly(
                "324*C111*C3^2 + 1520/27*C21^3 + 76/3*C21^2*C3 + 20*C21*C3^2 + C3^3",
                &d.variables
            )
            .unwrap()
        );
        assert_eq!(d.total_degree(), d.expected_degree());
    }

    #[test]
    fn variants_agree() {
        for n in 1..=8 {
            let a = closed_form_r3(n, R3Variant::Product).unwrap();
            let b = closed_form_r3(n, R3Variant::BForm).unwrap();
            assert_eq!(a, b, "n = {n}");
        }
    }

    #[test]
    fn binary_cubic() {
        let d = closed_form_r3(2, R3Variant::Product).unwrap();
        let quoted = parse_poly("1/27*(4*C111 + 2*C21 + C3)*(3*C3 + 2*C21)^3", &d.variables).unwrap();
        for pt in [[int(1), int(2), int(3)], [int(-1), int(5), int(2)]] {
            assert_eq!(d.evaluate(&pt).unwrap(), quoted.eval(&pt).unwrap());
        }
    }
}
