//! Symmetric forms written in power sums.
//!
//! A symmetric form of degree `r` in `n` variables is
//! `S = Σ_Y C_Y · p_{Y_1} p_{Y_2} ⋯` over partitions `Y` of `r`, with
//! `p_k = x_1^k + … + x_n^k`. The gradient follows from the chain rule
//! `∂p_k/∂x_i = k x_i^{k-1}`, so nothing here pattern-matches an expanded
//! polynomial.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::polycore::{MultiPoly, ParseError, Rational};

/// Non-increasing sequence of positive integers.
///
/// Ordered reverse-lexicographically, so `(4) < (3,1) < (2,2)`, which is
/// also the enumeration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts into non-increasing order. Returns `None` if a part
    /// is zero or the list is empty.
    pub fn new(mut parts: Vec<u32>) -> Option<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return None;
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Some(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Comma-separated key, e.g. `2,1,1`.
    pub fn key(&self) -> String {
        self.0
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Name of the coefficient variable: `C211`, or `C_10_2` once a part
    /// has two digits.
    pub fn coeff_name(&self) -> String {
        if self.0.iter().all(|&p| p < 10) {
            let digits: String = self.0.iter().map(u32::to_string).collect();
            format!("C{digits}")
        } else {
            format!("C_{}", self.0.iter().map(u32::to_string).collect::<Vec<_>>().join("_"))
        }
    }

    /// Accepts `2,1,1`, the digit shorthand `211` and either form with a
    /// leading `C`. Parts must already be non-increasing.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let bad = || ParseError::BadPartition(text.to_string());
        let t = text.trim();
        let t = t.strip_prefix('C').unwrap_or(t);
        let parts: Vec<u32> = if t.contains(',') || t.contains('_') {
            t.split([',', '_'])
                .filter(|s| !s.is_empty() || !t.starts_with('_'))
                .map(|s| s.trim().parse::<u32>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else {
            t.chars()
                .map(|c| c.to_digit(10).ok_or_else(bad))
                .collect::<Result<_, _>>()?
        };
        if parts.is_empty() || parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(bad());
        }
        Ok(Partition(parts))
    }

    /// Multiplicity of each part size `k`, as `counts[k-1]`, for `k ≤ r`.
    fn part_counts(&self, r: usize) -> Vec<u32> {
        let mut counts = vec![0; r];
        for &p in &self.0 {
            counts[p as usize - 1] += 1;
        }
        counts
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

/// All partitions of `r` in reverse-lexicographic order.
pub fn enumerate_partitions(r: u32) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            rec(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if r > 0 {
        rec(r, r, &mut Vec::new(), &mut out);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("partition {key} has weight {weight}, expected {r}")]
    WrongWeight { key: String, weight: u32, r: u32 },
    #[error("degree must be at least {min}, got {r}")]
    DegreeTooSmall { r: u32, min: u32 },
    #[error("variable count must be at least 1")]
    NoVariables,
    #[error("expected {expected} coefficient polynomials, got {got}")]
    CoefficientCount { expected: usize, got: usize },
}

impl FormError {
    pub fn name(&self) -> &'static str {
        match self {
            FormError::WrongWeight { .. } => "WrongWeight",
            FormError::DegreeTooSmall { .. } => "DegreeTooSmall",
            FormError::NoVariables => "NoVariables",
            FormError::CoefficientCount { .. } => "CoefficientCount",
        }
    }
}

/// A symmetric form with numeric coefficients. Missing keys are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricForm {
    n: usize,
    r: u32,
    coeffs: BTreeMap<Partition, Rational>,
}

impl SymmetricForm {
    pub fn new(n: usize, r: u32) -> Result<Self, FormError> {
        if n == 0 {
            return Err(FormError::NoVariables);
        }
        if r == 0 {
            return Err(FormError::DegreeTooSmall { r, min: 1 });
        }
        Ok(SymmetricForm {
            n,
            r,
            coeffs: BTreeMap::new(),
        })
    }

    pub fn from_pairs<I>(n: usize, r: u32, pairs: I) -> Result<Self, FormError>
    where
        I: IntoIterator<Item = (Partition, Rational)>,
    {
        let mut f = Self::new(n, r)?;
        for (y, c) in pairs {
            f.set(y, c)?;
        }
        Ok(f)
    }

    /// `x_1^r + … + x_n^r`.
    pub fn fermat(n: usize, r: u32) -> Result<Self, FormError> {
        let mut f = Self::new(n, r)?;
        f.set(Partition(vec![r]), Rational::one())?;
        Ok(f)
    }

    pub fn set(&mut self, y: Partition, c: Rational) -> Result<(), FormError> {
        if y.weight() != self.r {
            return Err(FormError::WrongWeight {
                key: y.key(),
                weight: y.weight(),
                r: self.r,
            });
        }
        if c.is_zero() {
            self.coeffs.remove(&y);
        } else {
            self.coeffs.insert(y, c);
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn coeff(&self, y: &Partition) -> Rational {
        self.coeffs.get(y).cloned().unwrap_or_else(Rational::zero)
    }

    /// The coefficient of `p_r`.
    pub fn leading(&self) -> Rational {
        self.coeff(&Partition(vec![self.r]))
    }

    /// Nonzero coefficients in canonical partition order.
    pub fn nonzero(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter()
    }

    /// Coefficients aligned with `enumerate_partitions(r)`.
    pub fn dense(&self) -> Vec<Rational> {
        enumerate_partitions(self.r)
            .iter()
            .map(|y| self.coeff(y))
            .collect()
    }

    pub fn scaled(&self, lambda: &Rational) -> Self {
        let mut out = Self::new(self.n, self.r).unwrap();
        for (y, c) in &self.coeffs {
            out.set(y.clone(), c * lambda).unwrap();
        }
        out
    }

    pub fn with_n(&self, n: usize) -> Self {
        SymmetricForm {
            n,
            ..self.clone()
        }
    }

    pub fn expand(&self) -> MultiPoly {
        FormCoeffs::numeric(self).expand(self.n)
    }

    pub fn gradient(&self) -> Vec<MultiPoly> {
        FormCoeffs::numeric(self).gradient(self.n)
    }

    pub fn w_decompose(&self) -> GradientDecomposition {
        FormCoeffs::numeric(self).w_decompose(self.n)
    }
}

/// Coefficients `C_Y` given as polynomials in a shared parameter ring.
///
/// Three uses: numeric (zero parameters), fully symbolic (one parameter
/// per partition) and parametric families such as the two-parameter
/// Berwald–Moor interpolation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormCoeffs {
    r: u32,
    partitions: Vec<Partition>,
    values: Vec<MultiPoly>,
    param_names: Vec<String>,
}

impl FormCoeffs {
    pub fn numeric(form: &SymmetricForm) -> Self {
        let partitions = enumerate_partitions(form.r);
        let values = partitions
            .iter()
            .map(|y| MultiPoly::constant(form.coeff(y), 0))
            .collect();
        FormCoeffs {
            r: form.r,
            partitions,
            values,
            param_names: Vec::new(),
        }
    }

    /// Every `C_Y` is its own variable, in partition order.
    pub fn symbolic(r: u32) -> Self {
        let partitions = enumerate_partitions(r);
        let k = partitions.len();
        let values = (0..k).map(|i| MultiPoly::var(i, k)).collect();
        let param_names = partitions.iter().map(Partition::coeff_name).collect();
        FormCoeffs {
            r,
            partitions,
            values,
            param_names,
        }
    }

    /// `values` aligned with `enumerate_partitions(r)`, all over the
    /// parameters `param_names`.
    pub fn parametric(
        r: u32,
        values: Vec<MultiPoly>,
        param_names: Vec<String>,
    ) -> Result<Self, FormError> {
        let partitions = enumerate_partitions(r);
        if values.len() != partitions.len() {
            return Err(FormError::CoefficientCount {
                expected: partitions.len(),
                got: values.len(),
            });
        }
        for v in &values {
            if v.nvars() != param_names.len() {
                return Err(FormError::CoefficientCount {
                    expected: param_names.len(),
                    got: v.nvars(),
                });
            }
        }
        Ok(FormCoeffs {
            r,
            partitions,
            values,
            param_names,
        })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn nparams(&self) -> usize {
        self.param_names.len()
    }

    pub fn param_names(&self) -> &[String] {
        &self.param_names
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn values(&self) -> &[MultiPoly] {
        &self.values
    }

    pub fn is_numeric(&self) -> bool {
        self.param_names.is_empty()
    }

    pub fn value(&self, y: &Partition) -> Option<&MultiPoly> {
        self.partitions
            .iter()
            .position(|p| p == y)
            .map(|i| &self.values[i])
    }

    /// The coefficient of `p_r` (always the first partition).
    pub fn leading(&self) -> &MultiPoly {
        &self.values[0]
    }

    /// Evaluates every coefficient at a parameter point.
    pub fn instantiate(&self, n: usize, point: &[Rational]) -> Result<SymmetricForm, crate::polycore::PolyError> {
        let mut f = SymmetricForm::new(n.max(1), self.r).expect("valid degree");
        for (y, v) in self.partitions.iter().zip(&self.values) {
            f.set(y.clone(), v.eval(point)?).expect("weight checked");
        }
        Ok(f)
    }

    /// `S` as a polynomial in `p_1, …, p_r` followed by the parameters.
    pub fn power_sum_poly(&self) -> MultiPoly {
        let r = self.r as usize;
        let k = self.nparams();
        let mut out = MultiPoly::zero(r + k);
        for (y, c) in self.partitions.iter().zip(&self.values) {
            if c.is_zero() {
                continue;
            }
            let lifted = c
                .remap(r + k, &(r..r + k).map(Some).collect::<Vec<_>>())
                .expect("parameter embedding");
            let mut mono = vec![0u32; r + k];
            mono[..r].copy_from_slice(&y.part_counts(r));
            let p = MultiPoly::from_terms(r + k, [(mono, Rational::one())]);
            out = &out + &(&p * &lifted);
        }
        out
    }

    /// Images for substituting into `power_sum_poly`: `p_k ↦ images[k-1]`
    /// and each parameter to the matching trailing variable of a ring
    /// with `lead` leading variables.
    fn substitution(&self, lead: usize, power_sums: Vec<MultiPoly>) -> Vec<MultiPoly> {
        let k = self.nparams();
        let mut images = power_sums;
        images.extend((0..k).map(|j| MultiPoly::var(lead + j, lead + k)));
        images
    }

    /// `∂S/∂p_k` for `k = 1..=r`, still written in power sums.
    pub fn power_sum_derivatives(&self) -> Vec<MultiPoly> {
        let sp = self.power_sum_poly();
        (0..self.r as usize).map(|k| sp.derivative(k)).collect()
    }

    fn x_power_sums(&self, n: usize) -> Vec<MultiPoly> {
        let total = n + self.nparams();
        (1..=self.r)
            .map(|k| {
                (0..n).fold(MultiPoly::zero(total), |acc, i| {
                    &acc + &MultiPoly::var(i, total).pow(k)
                })
            })
            .collect()
    }

    /// The expanded form in `x_1, …, x_n` followed by the parameters.
    pub fn expand(&self, n: usize) -> MultiPoly {
        let images = self.substitution(n, self.x_power_sums(n));
        self.power_sum_poly().compose(&images).expect("consistent rings")
    }

    /// `W_0, …, W_{r-1}` with `W_{r-k} = k·∂S/∂p_k`, expanded in the `x`
    /// variables followed by the parameters.
    pub fn w_decompose(&self, n: usize) -> GradientDecomposition {
        let r = self.r as usize;
        let images = self.substitution(n, self.x_power_sums(n));
        let mut w = vec![MultiPoly::zero(n + self.nparams()); r];
        for (k0, d) in self.power_sum_derivatives().into_iter().enumerate() {
            let k = k0 + 1;
            let dk = d.compose(&images).expect("consistent rings");
            w[r - k] = dk.scale(&Rational::from_integer((k as i64).into()));
        }
        GradientDecomposition {
            n,
            r: self.r,
            w,
        }
    }

    pub fn gradient(&self, n: usize) -> Vec<MultiPoly> {
        let dec = self.w_decompose(n);
        (0..n).map(|i| dec.reconstruct(i)).collect()
    }
}

/// The gradient split by powers of `x_i`:
/// `∂S/∂x_i = Σ_k W_k · x_i^{r-1-k}` with each `W_k` symmetric of degree
/// `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradientDecomposition {
    pub n: usize,
    pub r: u32,
    pub w: Vec<MultiPoly>,
}

impl GradientDecomposition {
    /// `∂S/∂x_i` rebuilt from the `W_k`.
    pub fn reconstruct(&self, i: usize) -> MultiPoly {
        let total = self.w[0].nvars();
        let xi = MultiPoly::var(i, total);
        let r = self.r;
        self.w
            .iter()
            .enumerate()
            .fold(MultiPoly::zero(total), |acc, (k, wk)| {
                &acc + &(wk * &xi.pow(r - 1 - k as u32))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{int, parse_poly, rat};

    fn part(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn xnames(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=10).map(|r| enumerate_partitions(r).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let keys: Vec<String> = enumerate_partitions(4).iter().map(Partition::key).collect();
        assert_eq!(keys, vec!["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        let two: Vec<String> = enumerate_partitions(2).iter().map(Partition::key).collect();
        assert_eq!(two, vec!["2", "1,1"]);
    }

    #[test]
    fn partition_parsing() {
        assert_eq!(part("2,1,1"), part("211"));
        assert_eq!(part("C211").parts(), &[2, 1, 1]);
        assert_eq!(part("10,2").coeff_name(), "C_10_2");
        assert_eq!(part("C_10_2"), part("10,2"));
        assert!(Partition::parse("1,2").is_err());
        assert!(Partition::parse("2,0").is_err());
        assert!(Partition::parse("x").is_err());
        assert!(Partition::parse("").is_err());
    }

    #[test]
    fn quadratic_expansions() {
        let f = SymmetricForm::fermat(2, 2).unwrap();
        assert_eq!(f.expand(), parse_poly("x1^2 + x2^2", &xnames(2)).unwrap());
        let g = SymmetricForm::from_pairs(2, 2, [(part("11"), int(1))]).unwrap();
        assert_eq!(g.expand(), parse_poly("x1^2 + 2*x1*x2 + x2^2", &xnames(2)).unwrap());
    }

    #[test]
    fn binary_cubic_coefficients() {
        let f = SymmetricForm::from_pairs(
            2,
            3,
            [(part("3"), int(1)), (part("21"), int(1)), (part("111"), int(1))],
        )
        .unwrap();
        let s = f.expand();
        // S_111 = C3 + C21 + C111, 3*S_112 = coefficient of x1^2 x2
        use crate::polycore::Monomial;
        assert_eq!(s.coefficient(&Monomial::new(vec![3, 0])), int(3));
        assert_eq!(s.coefficient(&Monomial::new(vec![2, 1])), int(4));
        assert_eq!(s.coefficient(&Monomial::new(vec![2, 1])) / int(3), rat(4, 3));
    }

    #[test]
    fn cubic_w_terms() {
        let c = FormCoeffs::symbolic(3);
        let n = 3;
        let dec = c.w_decompose(n);
        let mut names = xnames(n);
        names.extend(c.param_names().iter().cloned());
        let w = |s: &str| parse_poly(s, &names).unwrap();
        let p1 = "(x1 + x2 + x3)";
        let p2 = "(x1^2 + x2^2 + x3^2)";
        assert_eq!(dec.w[0], w("3*C3"));
        assert_eq!(dec.w[1], w(&format!("2*C21*{p1}")));
        assert_eq!(dec.w[2], w(&format!("C21*{p2} + 3*C111*{p1}^2")));
    }

    #[test]
    fn quartic_w_terms() {
        let c = FormCoeffs::symbolic(4);
        let n = 2;
        let dec = c.w_decompose(n);
        let mut names = xnames(n);
        names.extend(c.param_names().iter().cloned());
        let w = |s: &str| parse_poly(s, &names).unwrap();
        let (p1, p2, p3) = ("(x1 + x2)", "(x1^2 + x2^2)", "(x1^3 + x2^3)");
        assert_eq!(dec.w[0], w("4*C4"));
        assert_eq!(dec.w[1], w(&format!("3*C31*{p1}")));
        assert_eq!(dec.w[2], w(&format!("4*C22*{p2} + 2*C211*{p1}^2")));
        assert_eq!(
            dec.w[3],
            w(&format!("C31*{p3} + 2*C211*{p2}*{p1} + 4*C1111*{p1}^3"))
        );
    }

    #[test]
    fn quadratic_gradient() {
        let c = FormCoeffs::symbolic(2);
        let n = 3;
        let grad = c.gradient(n);
        let mut names = xnames(n);
        names.extend(c.param_names().iter().cloned());
        let expected = parse_poly("2*C2*x1 + 2*C11*(x1 + x2 + x3)", &names).unwrap();
        assert_eq!(grad[0], expected);
    }

    #[test]
    fn gradient_matches_differentiation() {
        let c = FormCoeffs::symbolic(3);
        let n = 4;
        let s = c.expand(n);
        let grad = c.gradient(n);
        for (i, g) in grad.iter().enumerate() {
            assert_eq!(*g, s.derivative(i));
        }
    }
}
