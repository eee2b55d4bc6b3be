use std::fmt;

use lietrace::Rational;
use serde::de::{self, Deserializer, Visitor};
use serde::Deserialize;

use crate::{parse_rational, CliError};

/// A rational carried as a `"p/q"` JSON string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactRational(pub Rational);

impl<'de> Deserialize<'de> for ExactRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;

        impl Visitor<'_> for V {
            type Value = ExactRational;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational string such as \"3\" or \"-5/8\"")
            }

            fn visit_str<E: de::Error>(self, s: &str) -> Result<ExactRational, E> {
                parse_rational(s)
                    .map(ExactRational)
                    .ok_or_else(|| E::custom(format!("malformed rational \"{s}\"")))
            }
        }

        d.deserialize_str(V)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Table,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceJob {
    pub cartan: Vec<Vec<i64>>,
    pub noncompact_simple: Vec<usize>,
    pub weight: Vec<ExactRational>,
    #[serde(default)]
    pub output: OutputFormat,
    pub csv_path: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenusJob {
    pub genus: GenusName,
    pub dims: Vec<i64>,
    pub twists: Vec<ExactRational>,
    /// Built-in twist, required for `exptwist` and rejected otherwise.
    pub k: Option<ExactRational>,
    #[serde(default)]
    pub output: OutputFormat,
    pub csv_path: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GenusName {
    Ahat,
    L,
    Todd,
    Exptwist,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepJob {
    pub n_max: u32,
    #[serde(default)]
    pub output: OutputFormat,
    pub csv_path: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyJob {
    pub cartan: Vec<Vec<i64>>,
    pub noncompact_simple: Vec<usize>,
    pub weight_max: u32,
    #[serde(default)]
    pub output: OutputFormat,
    pub csv_path: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum JobSpec {
    Trace(TraceJob),
    Genus(GenusJob),
    Sweep(SweepJob),
    Verify(VerifyJob),
}

impl JobSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            JobSpec::Trace(_) => "trace",
            JobSpec::Genus(_) => "genus",
            JobSpec::Sweep(_) => "sweep",
            JobSpec::Verify(_) => "verify",
        }
    }

    pub fn output(&self) -> OutputFormat {
        match self {
            JobSpec::Trace(j) => j.output,
            JobSpec::Genus(j) => j.output,
            JobSpec::Sweep(j) => j.output,
            JobSpec::Verify(j) => j.output,
        }
    }

    pub fn csv_path(&self) -> Option<&str> {
        match self {
            JobSpec::Trace(j) => j.csv_path.as_deref(),
            JobSpec::Genus(j) => j.csv_path.as_deref(),
            JobSpec::Sweep(j) => j.csv_path.as_deref(),
            JobSpec::Verify(j) => j.csv_path.as_deref(),
        }
    }
}

/// Parses and validates a JSON job document.
pub fn parse_job(document: &str) -> Result<JobSpec, CliError> {
    let job: JobSpec = serde_json::from_str(document).map_err(|e| match e.classify() {
        serde_json::error::Category::Data => CliError::Schema(e.to_string()),
        _ => CliError::Parse(e.to_string()),
    })?;
    validate(&job)?;
    Ok(job)
}

fn validate(job: &JobSpec) -> Result<(), CliError> {
    match job {
        JobSpec::Trace(j) => {
            check_square(&j.cartan)?;
            if j.weight.len() != j.cartan.len() {
                return Err(CliError::Schema(format!(
                    "field `weight`: expected {} coordinates, got {}",
                    j.cartan.len(),
                    j.weight.len()
                )));
            }
        }
        JobSpec::Verify(j) => check_square(&j.cartan)?,
        JobSpec::Genus(j) => {
            if j.dims.is_empty() {
                return Err(CliError::Schema("field `dims`: must be nonempty".into()));
            }
            if j.dims.len() != j.twists.len() {
                return Err(CliError::Schema(format!(
                    "field `twists`: expected {} entries to match `dims`, got {}",
                    j.dims.len(),
                    j.twists.len()
                )));
            }
            match (j.genus, &j.k) {
                (GenusName::Exptwist, None) => {
                    return Err(CliError::Schema(
                        "field `k`: required for genus `exptwist`".into(),
                    ))
                }
                (GenusName::Exptwist, Some(_)) | (_, None) => {}
                (_, Some(_)) => {
                    return Err(CliError::Schema(
                        "field `k`: only allowed for genus `exptwist`".into(),
                    ))
                }
            }
        }
        JobSpec::Sweep(_) => {}
    }
    Ok(())
}

fn check_square(cartan: &[Vec<i64>]) -> Result<(), CliError> {
    if cartan.is_empty() {
        return Err(CliError::Schema("field `cartan`: empty matrix".into()));
    }
    if let Some((i, row)) = cartan
        .iter()
        .enumerate()
        .find(|(_, row)| row.len() != cartan.len())
    {
        return Err(CliError::Schema(format!(
            "field `cartan`: row {} has {} entries, expected {}",
            i + 1,
            row.len(),
            cartan.len()
        )));
    }
    Ok(())
}
