//! Antisymmetric reduction and the Berwald–Moor family.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{discriminant, discriminant_coeffs, EngineError, EngineOptions, FactoredDiscriminant};
use crate::critstruct::CompositionClass;
use crate::polycore::{MultiPoly, Rational};
use crate::symforms::{enumerate_partitions, FormCoeffs, Partition, SymmetricForm};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntisymResult {
    pub n: usize,
    pub r: u32,
    /// The discriminant of `S = Δ·S̃` in the Fermat normalisation.
    pub value: Rational,
    /// `S̃(1,1)² · D_{2|r-1}(S̃)`, present for `n = 2`.
    pub unnormalised_product: Option<Rational>,
    /// `(-1)^{r+1} (r-1)^{r-1} / r^r`, present for `n = 2`.
    pub kappa: Option<Rational>,
    /// Why the value is forced, when it is.
    pub reason: Option<&'static str>,
}

/// `(-1)^{r+1} (r-1)^{r-1} / r^r`: the ratio between the Fermat
/// normalisation of `D_{2|r}` and that of `S̃(1,1)² D_{2|r-1}(S̃)`.
pub fn antisym_kappa(r: u32) -> Rational {
    let num = num_traits::pow(BigInt::from(r - 1), r as usize - 1);
    let den = num_traits::pow(BigInt::from(r), r as usize);
    let k = Rational::new(num, den);
    if r.is_multiple_of(2) {
        -k
    } else {
        k
    }
}

/// Discriminant of an antisymmetric form `S = Π_{i<j}(x_i - x_j) · S̃` of
/// degree `r`.
///
/// For `n > 2` the Vandermonde factor vanishes to second order along
/// `x_1 = x_2 = x_3`, so the gradient has a common nonzero root and the
/// discriminant is zero. For `n = 2`, `S̃` (degree `r-1`, two variables)
/// is required.
pub fn antisymmetric_discriminant(
    n: usize,
    r: u32,
    stilde: Option<&SymmetricForm>,
    opts: &EngineOptions,
) -> Result<AntisymResult, EngineError> {
    match n {
        0 | 1 => Err(EngineError::UnsupportedN {
            n,
            why: "an antisymmetric form needs at least two variables",
        }),
        2 => {
            let s = stilde.ok_or(EngineError::UnsupportedN {
                n,
                why: "the symmetric cofactor is required for n = 2",
            })?;
            if s.n() != 2 || s.r() + 1 != r {
                return Err(crate::symforms::FormError::WrongWeight {
                    key: format!("cofactor of degree {} in {} variables", s.r(), s.n()),
                    weight: s.r(),
                    r: r - 1,
                }
                .into());
            }
            let at_ones = s.expand().eval(&[Rational::one(), Rational::one()])?;
            let inner = if s.r() == 1 {
                // A nonzero linear form has no nontrivial critical point.
                if s.leading().is_zero() {
                    Rational::zero()
                } else {
                    Rational::one()
                }
            } else {
                discriminant(s, opts)?.value()?
            };
            let product = &at_ones * &at_ones * inner;
            let kappa = antisym_kappa(r);
            Ok(AntisymResult {
                n,
                r,
                value: &kappa * &product,
                unnormalised_product: Some(product),
                kappa: Some(kappa),
                reason: None,
            })
        }
        _ => Ok(AntisymResult {
            n,
            r,
            value: Rational::zero(),
            unnormalised_product: None,
            kappa: None,
            reason: Some("VandermondeDoubleRoot"),
        }),
    }
}

/// `u·e_2² + v·e_4` as coefficients over `(u, v)`, in partition order
/// `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub fn berwald_moor_coeffs() -> FormCoeffs {
    let u = MultiPoly::var(0, 2);
    let v = MultiPoly::var(1, 2);
    let q = |a: i64, b: i64| Rational::new(BigInt::from(a), BigInt::from(b));
    let lin = |a: Rational, b: Rational| &u.scale(&a) + &v.scale(&b);
    let values = vec![
        lin(q(0, 1), q(-1, 4)),
        lin(q(0, 1), q(1, 3)),
        lin(q(1, 4), q(1, 8)),
        lin(q(-1, 2), q(-1, 4)),
        lin(q(1, 4), q(1, 24)),
    ];
    debug_assert_eq!(enumerate_partitions(4).len(), values.len());
    FormCoeffs::parametric(4, values, vec!["u".into(), "v".into()]).expect("five quartic coefficients")
}

/// The family member at `(u, v)` in four variables.
pub fn berwald_moor_form(u: &Rational, v: &Rational) -> SymmetricForm {
    let coeffs = berwald_moor_coeffs();
    let point = [u.clone(), v.clone()];
    let mut form = SymmetricForm::new(4, 4).expect("valid shape");
    for (y, c) in coeffs.partitions().iter().zip(coeffs.values()) {
        let val = c.eval(&point).expect("two parameters");
        form.set(Partition::new(y.parts().to_vec()).expect("partition"), val)
            .expect("weight four");
    }
    form
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BerwaldMoor {
    /// `D_{4|4}` over `(u, v)`.
    pub discriminant: FactoredDiscriminant,
    /// Classes whose factor is the zero polynomial.
    pub vanishing: Vec<CompositionClass>,
    /// `((u, v), D)` from numeric runs.
    pub samples: Vec<((Rational, Rational), Rational)>,
}

impl BerwaldMoor {
    pub fn identically_zero(&self) -> bool {
        !self.vanishing.is_empty() || self.discriminant.cr.is_zero()
    }

    /// The discriminant as a rational when it is the zero polynomial.
    pub fn value(&self) -> Option<Rational> {
        self.identically_zero().then(Rational::zero)
    }
}

/// Runs `D_{4|4}` on the family symbolically in `(u, v)` and numerically at
/// `(1, 0)`, `(0, 1)` and one generic point.
pub fn berwald_moor_check(opts: &EngineOptions) -> Result<BerwaldMoor, EngineError> {
    let d = discriminant_coeffs(&berwald_moor_coeffs(), 4, opts)?;
    let vanishing = d
        .factors
        .iter()
        .filter(|f| f.poly.is_zero())
        .map(|f| f.class.clone())
        .collect();
    let mut samples = Vec::new();
    for (u, v) in [(1, 0), (0, 1), (3, -7)] {
        let (u, v) = (Rational::from_integer(u.into()), Rational::from_integer(v.into()));
        let val = discriminant(&berwald_moor_form(&u, &v), opts)?.value()?;
        samples.push(((u, v), val));
    }
    Ok(BerwaldMoor {
        discriminant: d,
        vanishing,
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{int, rat};

    #[test]
    fn family_expands_to_e2_squared_plus_e4() {
        let f = berwald_moor_form(&int(0), &int(1)).expand();
        let x = (0..4).map(|i| MultiPoly::var(i, 4)).fold(MultiPoly::one(4), |a, b| &a * &b);
        assert_eq!(f, x);
        let e2 = {
            let mut s = MultiPoly::zero(4);
            for i in 0..4 {
                for j in i + 1..4 {
                    s = &s + &(&MultiPoly::var(i, 4) * &MultiPoly::var(j, 4));
                }
            }
            s
        };
        assert_eq!(berwald_moor_form(&int(1), &int(0)).expand(), e2.pow(2));
    }

    #[test]
    fn kappa_values() {
        assert_eq!(antisym_kappa(2), rat(-1, 4));
        assert_eq!(antisym_kappa(3), rat(4, 27));
    }

    #[test]
    fn larger_n_vanishes() {
        for n in 3..6 {
            let a = antisymmetric_discriminant(n, 5, None, &EngineOptions::default()).unwrap();
            assert!(a.value.is_zero());
        }
        assert!(antisymmetric_discriminant(1, 3, None, &EngineOptions::default()).is_err());
    }

    #[test]
    fn binary_sum_of_squares_cofactor() {
        let s = SymmetricForm::fermat(2, 2).unwrap();
        let a = antisymmetric_discriminant(2, 3, Some(&s), &EngineOptions::default()).unwrap();
        assert_eq!(a.unnormalised_product, Some(int(4)));
        assert_eq!(a.value, rat(16, 27));
    }
}
