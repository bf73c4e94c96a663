use std::fmt::Write as _;

use serde::Serialize;
use symdisc::engine::{
    antisymmetric_discriminant, berwald_moor_check, closed_form_r2, closed_form_r3, discriminant,
    discriminant_symbolic, EngineOptions, R3Variant, DEFAULT_MACAULAY_BUDGET,
};
use symdisc::oracle::{gradient_macaulay_disc, hessian_disc_3var, random_points, sylvester_disc_2var, GenericCubic3};
use symdisc::polycore::{parse_rational, Rational};
use symdisc::symforms::{enumerate_partitions, Partition, SymmetricForm};

use crate::document::DiscriminantDoc;
use crate::error::CliError;
use crate::job::{CommandKind, Format, JobSpec, Variant};

pub fn run(job: &JobSpec) -> Result<String, CliError> {
    match job.command {
        CommandKind::Discriminant => run_discriminant(job),
        CommandKind::ClosedForm => run_closed_form(job),
        CommandKind::Evaluate => run_evaluate(job),
        CommandKind::Verify => run_verify(job),
        CommandKind::Antisym => run_antisym(job),
        CommandKind::BerwaldMoor => run_berwald_moor(job),
        CommandKind::Run => Err(CliError::parse("MissingCommand", "no command to run")),
    }
}

fn options(job: &JobSpec) -> EngineOptions {
    EngineOptions {
        threads: job.threads,
        experimental: job.experimental,
        macaulay_budget: DEFAULT_MACAULAY_BUDGET,
    }
}

fn emit<T: Serialize>(job: &JobSpec, json: &T, text: impl FnOnce() -> String) -> String {
    match job.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(json).expect("serialisable");
            s.push('\n');
            s
        }
        Format::Text => text(),
    }
}

fn emit_doc(job: &JobSpec, doc: &DiscriminantDoc) -> String {
    emit(job, doc, || doc.to_text())
}

/// Builds a form from `KEY=VALUE` pairs; keys are partitions.
fn form_from(n: usize, r: u32, coefficients: &[(String, String)]) -> Result<SymmetricForm, CliError> {
    let mut form = SymmetricForm::new(n, r)?;
    for (k, v) in coefficients {
        form.set(Partition::parse(k)?, parse_rational(v)?)?;
    }
    Ok(form)
}

fn run_discriminant(job: &JobSpec) -> Result<String, CliError> {
    let (n, r) = (job.n()?, job.r()?);
    let d = if job.symbolic {
        if !job.coefficients.is_empty() {
            return Err(CliError::parse(
                "CoefficientsWithSymbolic",
                "coefficients are not used with --symbolic; use `evaluate`",
            ));
        }
        discriminant_symbolic(n, r, &options(job))?
    } else {
        discriminant(&form_from(n, r, &job.coefficients)?, &options(job))?
    };
    Ok(emit_doc(job, &DiscriminantDoc::from_discriminant(&d)?))
}

fn run_closed_form(job: &JobSpec) -> Result<String, CliError> {
    let (n, r) = (job.n()?, job.r()?);
    let d = match r {
        2 => closed_form_r2(n)?,
        3 => {
            let v = match job.variant {
                Variant::Product => R3Variant::Product,
                Variant::BForm => R3Variant::BForm,
            };
            closed_form_r3(n, v)?
        }
        _ => return Err(CliError::parse("NoClosedForm", format!("closed forms exist for r = 2, 3; got r = {r}"))),
    };
    Ok(emit_doc(job, &DiscriminantDoc::from_discriminant(&d)?))
}

/// Matches a coefficient key to a document variable: either the name
/// itself or a partition whose coefficient name it is.
fn point_for(variables: &[String], coefficients: &[(String, String)]) -> Result<Vec<Rational>, CliError> {
    let mut point = vec![Rational::from_integer(0.into()); variables.len()];
    for (k, v) in coefficients {
        let name = match Partition::parse(k) {
            Ok(p) => p.coeff_name(),
            Err(_) => k.clone(),
        };
        let i = variables
            .iter()
            .position(|x| *x == name || x == k)
            .ok_or_else(|| CliError::parse("UnknownVariable", format!("`{k}` is not one of {}", variables.join(", "))))?;
        point[i] = parse_rational(v)?;
    }
    Ok(point)
}

#[derive(Serialize)]
struct ValueDoc {
    value: String,
}

fn run_evaluate(job: &JobSpec) -> Result<String, CliError> {
    let doc = match &job.from {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::parse("InputUnreadable", format!("{}: {e}", path.display())))?;
            serde_json::from_str::<DiscriminantDoc>(&text).map_err(|e| CliError::parse("InputJson", e.to_string()))?
        }
        None => {
            let d = discriminant_symbolic(job.n()?, job.r()?, &options(job))?;
            DiscriminantDoc::from_discriminant(&d)?
        }
    };
    let point = point_for(&doc.variables, &job.coefficients)?;
    let value = doc.evaluate(&point)?.to_string();
    let out = ValueDoc { value };
    Ok(emit(job, &out, || format!("value = {}\n", out.value)))
}

#[derive(Serialize)]
struct VerifyDoc {
    n: usize,
    r: u32,
    oracle: &'static str,
    seed: u64,
    trials: usize,
    agreements: usize,
    disagreements: Vec<Vec<String>>,
}

fn run_verify(job: &JobSpec) -> Result<String, CliError> {
    let (n, r) = (job.n()?, job.r()?);
    let k = enumerate_partitions(r).len();
    let oracle = match (n, r) {
        (2, _) => "sylvester-oracle",
        (3, 3) => "hessian-oracle",
        _ => "macaulay-oracle",
    };
    let opts = options(job);
    let mut agreements = 0;
    let mut disagreements = Vec::new();
    for p in random_points(job.seed, job.trials, k, 9) {
        let form = form_from(
            n,
            r,
            &enumerate_partitions(r)
                .iter()
                .zip(&p)
                .map(|(y, c)| (y.key(), c.to_string()))
                .collect::<Vec<_>>(),
        )?;
        let engine = discriminant(&form, &opts)?.value()?;
        let s = form.expand();
        let reference = match oracle {
            "sylvester-oracle" => sylvester_disc_2var(&s)?.constant_value(),
            "hessian-oracle" => Some(hessian_disc_3var(&GenericCubic3::from_poly(&s)?)),
            _ => gradient_macaulay_disc(&s, n, opts.macaulay_budget)?.constant_value(),
        };
        if reference.as_ref() == Some(&engine) {
            agreements += 1;
        } else {
            disagreements.push(p.iter().map(Rational::to_string).collect());
        }
    }
    let report = VerifyDoc {
        n,
        r,
        oracle,
        seed: job.seed,
        trials: job.trials,
        agreements,
        disagreements,
    };
    let line = format!("engine == {oracle} at {agreements}/{} points", job.trials);
    let out = emit(job, &report, || {
        let mut s = format!("{line}\n");
        for d in &report.disagreements {
            let _ = writeln!(s, "  differs at C = ({})", d.join(", "));
        }
        s
    });
    if agreements == job.trials {
        Ok(out)
    } else {
        Err(CliError::engine("OracleMismatch", out.trim_end().to_string()))
    }
}

#[derive(Serialize)]
struct AntisymDoc {
    n: usize,
    r: u32,
    value: String,
    unnormalised_product: Option<String>,
    kappa: Option<String>,
    reason: Option<&'static str>,
}

fn run_antisym(job: &JobSpec) -> Result<String, CliError> {
    let (n, r) = (job.n()?, job.r()?);
    if r < 2 {
        return Err(CliError::parse("DegreeTooSmall", "an antisymmetric form needs r >= 2"));
    }
    let stilde = if n == 2 {
        Some(form_from(2, r - 1, &job.coefficients)?)
    } else {
        None
    };
    let a = antisymmetric_discriminant(n, r, stilde.as_ref(), &options(job))?;
    let doc = AntisymDoc {
        n,
        r,
        value: a.value.to_string(),
        unnormalised_product: a.unnormalised_product.as_ref().map(Rational::to_string),
        kappa: a.kappa.as_ref().map(Rational::to_string),
        reason: a.reason,
    };
    Ok(emit(job, &doc, || {
        let mut s = format!("D_{{{n}|{r}}} = {}\n", doc.value);
        if let Some(reason) = doc.reason {
            let _ = writeln!(s, "reason: {reason}");
        }
        if let (Some(p), Some(k)) = (&doc.unnormalised_product, &doc.kappa) {
            let _ = writeln!(s, "S~(1,1)^2 * D_{{2|{}}}(S~) = {p}", r - 1);
            let _ = writeln!(s, "kappa = {k}");
        }
        s
    }))
}

#[derive(Serialize)]
struct BerwaldMoorDoc {
    identically_zero: bool,
    vanishing_classes: Vec<String>,
    samples: Vec<(String, String, String)>,
    discriminant: DiscriminantDoc,
}

fn run_berwald_moor(job: &JobSpec) -> Result<String, CliError> {
    let bm = berwald_moor_check(&options(job))?;
    let doc = BerwaldMoorDoc {
        identically_zero: bm.identically_zero(),
        vanishing_classes: bm.vanishing.iter().map(|c| c.to_string()).collect(),
        samples: bm
            .samples
            .iter()
            .map(|((u, v), d)| (u.to_string(), v.to_string(), d.to_string()))
            .collect(),
        discriminant: DiscriminantDoc::from_discriminant(&bm.discriminant)?,
    };
    Ok(emit(job, &doc, || {
        let mut s = format!(
            "D_{{4|4}}(u*e2^2 + v*e4) identically zero: {}\n",
            if doc.identically_zero { "yes" } else { "no" }
        );
        let _ = writeln!(s, "vanishing classes: {}", doc.vanishing_classes.join(" "));
        for (u, v, d) in &doc.samples {
            let _ = writeln!(s, "(u, v) = ({u}, {v}): {d}");
        }
        s
    }))
}
