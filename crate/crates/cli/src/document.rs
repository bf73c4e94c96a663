//! The emitted discriminant document, in JSON and text.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use symdisc::engine::{FactoredDiscriminant, Mode};
use symdisc::polycore::{format_poly, parse_poly, parse_rational, product_of_powers, Rational};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDoc {
    pub nonzero_parts: Vec<u32>,
    pub zeros: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDoc {
    pub class: ClassDoc,
    pub poly: String,
    pub exponent: u64,
    pub degree: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeDoc {
    pub total: String,
    pub expected: String,
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscriminantDoc {
    pub n: usize,
    pub r: u32,
    pub mode: String,
    #[serde(rename = "regime_flag")]
    pub regime: String,
    pub variables: Vec<String>,
    pub alpha: String,
    pub cr: String,
    pub beta: u64,
    pub factors: Vec<FactorDoc>,
    pub zero: Option<String>,
    pub degree: DegreeDoc,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value: Option<String>,
}

impl DiscriminantDoc {
    pub fn from_discriminant(d: &FactoredDiscriminant) -> Result<Self, CliError> {
        let names = &d.variables;
        let value = if d.mode == Mode::Numeric {
            Some(d.value()?.to_string())
        } else {
            None
        };
        let total = d.total_degree();
        let expected = d.expected_degree();
        Ok(DiscriminantDoc {
            n: d.n,
            r: d.r,
            mode: d.mode.as_str().to_string(),
            regime: d.regime.as_str().to_string(),
            variables: names.clone(),
            alpha: d.alpha.to_string(),
            cr: format_poly(&d.cr, names),
            beta: d.beta,
            factors: d
                .factors
                .iter()
                .map(|f| FactorDoc {
                    class: ClassDoc {
                        nonzero_parts: f.class.nonzero_parts.clone(),
                        zeros: f.class.zeros,
                    },
                    poly: format_poly(&f.poly, names),
                    exponent: f.exponent,
                    degree: f.degree,
                })
                .collect(),
            zero: d.zero.map(|z| z.as_str().to_string()),
            degree: DegreeDoc {
                consistent: d.zero.is_some() || total == expected,
                total: total.to_string(),
                expected: expected.to_string(),
            },
            value,
        })
    }

    /// Value at a point of `variables`.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational, CliError> {
        if self.zero.as_deref() == Some("LeadingCoefficientZero") {
            return Ok(Rational::from_integer(0.into()));
        }
        let names = &self.variables;
        let mut values = vec![
            (parse_rational(&self.alpha)?, 1),
            (parse_poly(&self.cr, names)?.eval(point)?, self.beta),
        ];
        for f in &self.factors {
            values.push((parse_poly(&f.poly, names)?.eval(point)?, f.exponent));
        }
        Ok(product_of_powers(values.iter().map(|(v, e)| (v, *e))))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "D_{{{}|{}}}  mode={}  regime={}", self.n, self.r, self.mode, self.regime);
        if let Some(z) = &self.zero {
            let _ = writeln!(out, "zero: {z}");
        }
        if !self.variables.is_empty() {
            let _ = writeln!(out, "variables: {}", self.variables.join(", "));
        }
        let _ = writeln!(out, "alpha = {}", self.alpha);
        let _ = writeln!(out, "({})^{}", self.cr, self.beta);
        for f in &self.factors {
            let class = ClassLabel(&f.class);
            let _ = writeln!(out, "{class} ^{} [degree {}]: {}", f.exponent, f.degree, f.poly);
        }
        let _ = writeln!(
            out,
            "total degree {} (expected {}){}",
            self.degree.total,
            self.degree.expected,
            if self.degree.consistent { "" } else { " MISMATCH" }
        );
        if let Some(v) = &self.value {
            let _ = writeln!(out, "value = {v}");
        }
        out
    }
}

struct ClassLabel<'a>(&'a ClassDoc);

impl std::fmt::Display for ClassLabel<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = self.0.nonzero_parts.iter().map(u32::to_string).collect();
        parts.extend(std::iter::repeat_n("0".to_string(), self.0.zeros));
        write!(f, "({})", parts.join(","))
    }
}
