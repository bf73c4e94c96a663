//! Assembly of the factored discriminant.
//!
//! For a symmetric form of degree `r` in `n` variables
//!
//! `D = α · C_r^β · Π_M d_M^{e_M}`
//!
//! with one factor per class of critical-point types `M`, `d_M` the
//! resultant of the level sums of the divided-difference tower, `e_M` the
//! grouped multiplicity, `β` fixed by the total degree `n(r-1)^{n-1}` and
//! `α` fixed by `D(x_1^r + … + x_n^r) = 1`.

mod closed;
mod special;

pub use closed::{closed_form_r2, closed_form_r3, BParams, R3Variant};
pub use special::{
    antisymmetric_discriminant, berwald_moor_check, berwald_moor_coeffs, berwald_moor_form,
    AntisymResult, BerwaldMoor,
};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::critstruct::{build_tower, grouped_multiplicities, level_sums, specialize, CompositionClass, CritError};
use crate::polycore::{pow_rational, product_of_powers, MultiPoly, PolyError, Rational};
use crate::resultants::{resultant, resultant_degree, HomoSystem, Reduced, ResultantError};
use crate::symforms::{FormCoeffs, FormError, SymmetricForm};

/// Default Macaulay budget (matrix dimension) for the experimental
/// `r >= 5` path.
pub const DEFAULT_MACAULAY_BUDGET: usize = 400;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("grouped exponent for class {class} is {value}, not an integer")]
    NonIntegralExponent { class: String, value: String },
    #[error("C_r exponent would be negative ({0})")]
    NegativeCrExponent(i128),
    #[error("degree {r} needs the experimental flag")]
    ExperimentalDegree { r: u32 },
    #[error("unsupported variable count {n}: {why}")]
    UnsupportedN { n: usize, why: &'static str },
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Crit(#[from] CritError),
    #[error(transparent)]
    Resultant(#[from] ResultantError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl EngineError {
    pub fn name(&self) -> &'static str {
        match self {
            EngineError::NonIntegralExponent { .. } => "NonIntegralExponent",
            EngineError::NegativeCrExponent(_) => "NegativeCrExponent",
            EngineError::ExperimentalDegree { .. } => "ExperimentalDegree",
            EngineError::UnsupportedN { .. } => "UnsupportedN",
            EngineError::ThreadPool(_) => "ThreadPool",
            EngineError::Form(e) => e.name(),
            EngineError::Crit(e) => e.name(),
            EngineError::Resultant(e) => e.name(),
            EngineError::Poly(e) => e.name(),
        }
    }
}

/// Whether the factorisation is backed by the `n >= r` derivation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Proven,
    Unproven,
}

impl Regime {
    pub fn for_shape(n: usize, r: u32) -> Self {
        if n >= r as usize {
            Regime::Proven
        } else {
            Regime::Unproven
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::Proven => "proven",
            Regime::Unproven => "unproven",
        }
    }
}

/// Why a discriminant is zero without (or despite) factor data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroReason {
    /// `C_r = 0` with `n >= r`: `(1, ω, …, ω^{r-1}, 0, …, 0)` with `ω` a
    /// primitive `r`-th root of unity kills every `p_k`, `0 < k < r`, and
    /// is then a critical point.
    LeadingCoefficientZero,
    /// Some factor `d_M` vanishes.
    FactorVanishes,
}

impl ZeroReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            ZeroReason::LeadingCoefficientZero => "LeadingCoefficientZero",
            ZeroReason::FactorVanishes => "FactorVanishes",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Factors are exact rational values.
    Numeric,
    /// Factors are primitive polynomials in the `C_Y`.
    Symbolic,
    /// Factors are primitive polynomials in caller-chosen parameters.
    Parametric,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Numeric => "numeric",
            Mode::Symbolic => "symbolic",
            Mode::Parametric => "parametric",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub class: CompositionClass,
    /// Polynomial in the variables of the owning discriminant (a constant
    /// in numeric mode).
    pub poly: MultiPoly,
    pub exponent: u64,
    /// Degree in the coefficients `C_Y` predicted by the resultant degree
    /// formula.
    pub degree: u64,
}

/// `alpha · cr^beta · Π factor^exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredDiscriminant {
    pub n: usize,
    pub r: u32,
    pub mode: Mode,
    /// Names of the polynomial variables; empty in numeric mode.
    pub variables: Vec<String>,
    pub alpha: Rational,
    /// `C_r` as a polynomial in `variables`.
    pub cr: MultiPoly,
    pub beta: u64,
    pub factors: Vec<Factor>,
    pub regime: Regime,
    pub zero: Option<ZeroReason>,
}

impl FactoredDiscriminant {
    /// `n(r-1)^{n-1}`.
    pub fn expected_degree(&self) -> BigInt {
        discriminant_degree(self.n, self.r)
    }

    /// `β + Σ e·deg`, using the actual degree of each factor when symbolic
    /// and the predicted degree otherwise.
    pub fn total_degree(&self) -> BigInt {
        let mut total = BigInt::from(self.beta);
        for f in &self.factors {
            let d = match self.mode {
                Mode::Symbolic if !f.poly.is_zero() => f.poly.total_degree().unwrap_or(0) as u64,
                _ => f.degree,
            };
            total += BigInt::from(f.exponent) * BigInt::from(d);
        }
        total
    }

    pub fn is_zero(&self) -> bool {
        self.zero.is_some()
    }

    /// Value at a point of the variables (empty in numeric mode).
    ///
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational, EngineError> {
        if self.zero == Some(ZeroReason::LeadingCoefficientZero) {
            return Ok(Rational::zero());
        }
        let mut values = vec![(self.alpha.clone(), 1), (self.cr.eval(point)?, self.beta)];
        for f in &self.factors {
            values.push((f.poly.eval(point)?, f.exponent));
        }
        Ok(product_of_powers(values.iter().map(|(v, e)| (v, *e))))
    }

    /// Value of a numeric discriminant.
    pub fn value(&self) -> Result<Rational, EngineError> {
        self.evaluate(&[])
    }
}

pub(crate) fn pow_u64(x: &Rational, e: u64) -> Rational {
    pow_rational(x, e)
}

/// `n(r-1)^{n-1}`, the degree of the discriminant in the coefficients.
pub fn discriminant_degree(n: usize, r: u32) -> BigInt {
    BigInt::from(n) * num_traits::pow(BigInt::from(r - 1), n.saturating_sub(1))
}

/// Grouped multiplicities as integers, in canonical class order.
pub fn class_exponents(n: usize, r: u32) -> Result<BTreeMap<CompositionClass, u64>, EngineError> {
    let mut out = BTreeMap::new();
    for (class, e) in grouped_multiplicities(n as u32, r) {
        if !e.is_integer() {
            return Err(EngineError::NonIntegralExponent {
                class: class.to_string(),
                value: e.to_string(),
            });
        }
        let v = e.to_integer().to_u64().ok_or_else(|| EngineError::NonIntegralExponent {
            class: class.to_string(),
            value: e.to_string(),
        })?;
        out.insert(class, v);
    }
    Ok(out)
}

/// Degree of `d_M` in the coefficients for a class with `v` distinct
/// values.
pub fn class_degree(r: u32, v: usize) -> u64 {
    let degrees: Vec<u32> = (1..=v as u32).map(|k| r - k).collect();
    resultant_degree(&degrees)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineOptions {
    /// Worker threads for per-class work; `None` uses the global pool.
    pub threads: Option<usize>,
    /// Allow `r >= 5`, routing non-linear eliminations through Macaulay.
    pub experimental: bool,
    pub macaulay_budget: usize,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            threads: None,
            experimental: false,
            macaulay_budget: DEFAULT_MACAULAY_BUDGET,
        }
    }
}

/// Exact `d_M` for one class: the resultant of the level sums. A linear
/// level sum that vanishes identically gives zero.
pub fn class_resultant(
    coeffs: &FormCoeffs,
    class: &CompositionClass,
    budget: Option<usize>,
) -> Result<MultiPoly, EngineError> {
    let r = coeffs.r();
    let firsts = specialize(coeffs, &class.representative())?;
    let tower = build_tower(&firsts, r as usize - 1)?;
    let sums = level_sums(&tower);
    let degrees: Vec<u32> = (1..=sums.len() as u32).map(|k| r - k).collect();
    let sys = HomoSystem::new(sums, degrees)?;
    match resultant(&sys, budget) {
        Ok(p) => Ok(p),
        Err(ResultantError::ZeroLinearForm) => Ok(MultiPoly::zero(coeffs.nparams())),
        Err(e) => Err(e.into()),
    }
}

fn run_pool<T, F>(threads: Option<usize>, f: F) -> Result<T, EngineError>
where
    T: Send,
    F: FnOnce() -> T + Send,
{
    match threads {
        None => Ok(f()),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .map_err(|e| EngineError::ThreadPool(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

fn check_shape(n: usize, r: u32, opts: &EngineOptions) -> Result<(), EngineError> {
    if n == 0 {
        return Err(FormError::NoVariables.into());
    }
    if r < 2 {
        return Err(FormError::DegreeTooSmall { r, min: 2 }.into());
    }
    if r >= 5 && !opts.experimental {
        return Err(EngineError::ExperimentalDegree { r });
    }
    Ok(())
}

/// Resultants for every class, in canonical order.
fn all_class_resultants(
    coeffs: &FormCoeffs,
    exps: &BTreeMap<CompositionClass, u64>,
    opts: &EngineOptions,
) -> Result<Vec<MultiPoly>, EngineError> {
    let budget = opts.experimental.then_some(opts.macaulay_budget);
    let classes: Vec<&CompositionClass> = exps.keys().collect();
    run_pool(opts.threads, || {
        classes
            .par_iter()
            .map(|c| class_resultant(coeffs, c, budget))
            .collect::<Result<Vec<_>, _>>()
    })?
}

fn beta_for(n: usize, r: u32, exps: &BTreeMap<CompositionClass, u64>) -> Result<u64, EngineError> {
    let mut beta = discriminant_degree(n, r);
    for (c, &e) in exps {
        beta -= BigInt::from(e) * BigInt::from(class_degree(r, c.distinct()));
    }
    if beta < BigInt::zero() {
        return Err(EngineError::NegativeCrExponent(beta.to_i128().unwrap_or(i128::MIN)));
    }
    beta.to_u64()
        .ok_or(EngineError::NegativeCrExponent(i128::MAX))
}

/// Fermat values of every `d_M`, exact.
fn fermat_values(
    n: usize,
    r: u32,
    exps: &BTreeMap<CompositionClass, u64>,
    opts: &EngineOptions,
) -> Result<Vec<Rational>, EngineError> {
    let fermat = FormCoeffs::numeric(&SymmetricForm::fermat(n, r)?);
    let vals = all_class_resultants(&fermat, exps, opts)?;
    Ok(vals
        .iter()
        .map(|p| p.constant_value().expect("numeric resultant is constant"))
        .collect())
}

fn zero_discriminant(n: usize, r: u32, mode: Mode, coeffs: &FormCoeffs) -> FactoredDiscriminant {
    FactoredDiscriminant {
        n,
        r,
        mode,
        variables: coeffs.param_names().to_vec(),
        alpha: Rational::one(),
        cr: coeffs.leading().clone(),
        beta: 0,
        factors: Vec::new(),
        regime: Regime::for_shape(n, r),
        zero: Some(ZeroReason::LeadingCoefficientZero),
    }
}

/// Discriminant of a form with numeric coefficients. Factors are the
/// exact resultant values; `α` is the reciprocal of the same product for
/// the Fermat form.
///
/// `C_r = 0` short-circuits to zero only when `n >= r`; below that the
/// null vector does not exist and the product is evaluated as usual.
pub fn discriminant(form: &SymmetricForm, opts: &EngineOptions) -> Result<FactoredDiscriminant, EngineError> {
    let (n, r) = (form.n(), form.r());
    check_shape(n, r, opts)?;
    let coeffs = FormCoeffs::numeric(form);
    if form.leading().is_zero() && n >= r as usize {
        return Ok(zero_discriminant(n, r, Mode::Numeric, &coeffs));
    }
    let exps = class_exponents(n, r)?;
    let beta = beta_for(n, r, &exps)?;
    let values = all_class_resultants(&coeffs, &exps, opts)?;
    let fermat = fermat_values(n, r, &exps, opts)?;
    let mut alpha = Rational::one();
    let mut factors = Vec::with_capacity(exps.len());
    let mut zero = None;
    for (((class, &e), val), f) in exps.iter().zip(values).zip(&fermat) {
        alpha /= pow_u64(f, e);
        if val.is_zero() {
            zero = Some(ZeroReason::FactorVanishes);
        }
        factors.push(Factor {
            class: class.clone(),
            poly: val,
            exponent: e,
            degree: class_degree(r, class.distinct()),
        });
    }
    Ok(FactoredDiscriminant {
        n,
        r,
        mode: Mode::Numeric,
        variables: Vec::new(),
        alpha,
        cr: coeffs.leading().clone(),
        beta,
        factors,
        regime: Regime::for_shape(n, r),
        zero,
    })
}

/// Discriminant with coefficients given as polynomials in parameters
/// (fully symbolic `C_Y` or a family). Factors are primitive parts.
pub fn discriminant_coeffs(
    coeffs: &FormCoeffs,
    n: usize,
    opts: &EngineOptions,
) -> Result<FactoredDiscriminant, EngineError> {
    let r = coeffs.r();
    check_shape(n, r, opts)?;
    let symbolic = *coeffs == FormCoeffs::symbolic(r);
    let mode = if symbolic {
        Mode::Symbolic
    } else if coeffs.is_numeric() {
        Mode::Numeric
    } else {
        Mode::Parametric
    };
    if coeffs.leading().is_zero() && n >= r as usize {
        return Ok(zero_discriminant(n, r, mode, coeffs));
    }
    let exps = class_exponents(n, r)?;
    let beta = beta_for(n, r, &exps)?;
    let values = all_class_resultants(coeffs, &exps, opts)?;
    let fermat = fermat_values(n, r, &exps, opts)?;
    let mut alpha = Rational::one();
    let mut factors = Vec::with_capacity(exps.len());
    let mut zero = None;
    for (((class, &e), val), f) in exps.iter().zip(values).zip(&fermat) {
        let red = Reduced::from_poly(val);
        if red.is_zero() {
            zero = Some(ZeroReason::FactorVanishes);
        } else {
            alpha *= pow_u64(&(&red.scale / f), e);
        }
        factors.push(Factor {
            class: class.clone(),
            poly: red.primitive,
            exponent: e,
            degree: class_degree(r, class.distinct()),
        });
    }
    Ok(FactoredDiscriminant {
        n,
        r,
        mode,
        variables: coeffs.param_names().to_vec(),
        alpha,
        cr: coeffs.leading().clone(),
        beta,
        factors,
        regime: Regime::for_shape(n, r),
        zero,
    })
}

/// Fully symbolic discriminant in the `C_Y`.
pub fn discriminant_symbolic(n: usize, r: u32, opts: &EngineOptions) -> Result<FactoredDiscriminant, EngineError> {
    discriminant_coeffs(&FormCoeffs::symbolic(r), n, opts)
}

/// Evaluates a symbolic discriminant at the coefficients of `form`.
pub fn evaluate(d: &FactoredDiscriminant, form: &SymmetricForm) -> Result<Rational, EngineError> {
    if d.mode == Mode::Numeric {
        return d.value();
    }
    let point = form.dense();
    d.evaluate(&point)
}
