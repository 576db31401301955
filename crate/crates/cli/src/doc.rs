//! The function-spec document: the on-disk description of an entire or
//! meromorphic function that every command ingests.
//!
//! Exactly one of `model`, `series` or `meromorphic` must be present.
//! Rationals are strings (`"num/den"`, `/den` omitted for integers) and
//! `"inf"` is the valuation of a zero coefficient.

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use padic_factor::polygon::TailCertificate;
use padic_factor::{CoefficientModel, ExtValuation, MeromorphicModel, Prime, Rat, TruncatedSeries};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FunctionSpecDoc {
    pub prime: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<ModelSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series: Option<SeriesSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meromorphic: Option<MeromorphicSpec>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ModelSpec {
    Polynomial { coeffs: Vec<Rat> },
    ValuationList { w: Vec<ExtValuation> },
    PrefixTail { w: Vec<ExtValuation>, tail: TailCertificate },
    Prop214Family { n: u32, v_alpha: Rat },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SeriesSpec {
    pub prime: u64,
    pub order: usize,
    pub coeffs: Vec<Rat>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct MeromorphicSpec {
    pub numerator: ModelSpec,
    pub denominator: ModelSpec,
}

impl FunctionSpecDoc {
    pub fn parse(text: &str) -> Result<FunctionSpecDoc> {
        let doc: FunctionSpecDoc =
            serde_json::from_str(text).context("parsing function-spec document")?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn validate(&self) -> Result<()> {
        let present = [
            self.model.is_some(),
            self.series.is_some(),
            self.meromorphic.is_some(),
        ]
        .iter()
        .filter(|&&p| p)
        .count();
        if present != 1 {
            bail!(
                "exactly one of `model`, `series`, `meromorphic` must be present, found {present}"
            );
        }
        let _ = self.prime()?;
        if let Some(series) = &self.series {
            if series.prime != self.prime {
                bail!(
                    "series prime {} does not match document prime {}",
                    series.prime,
                    self.prime
                );
            }
            if series.coeffs.len() != series.order + 1 {
                bail!(
                    "series of order {} needs {} coefficients, found {}",
                    series.order,
                    series.order + 1,
                    series.coeffs.len()
                );
            }
        }
        Ok(())
    }

    pub fn prime(&self) -> Result<Prime> {
        Prime::new(self.prime).with_context(|| format!("field `prime`: {} is not prime", self.prime))
    }

    pub fn name(&self) -> Option<&str> {
        self.metadata.as_ref()?.name.as_deref()
    }

    /// The entire-function components of the document, labeled. A plain
    /// model or series document has one component; a meromorphic document
    /// has its numerator and denominator.
    pub fn components(&self) -> Result<Vec<(String, CoefficientModel)>> {
        let prime = self.prime()?;
        if let Some(spec) = &self.model {
            return Ok(vec![("function".into(), spec.to_model(prime)?)]);
        }
        if let Some(series) = &self.series {
            let s = series.to_series(prime)?;
            return Ok(vec![("function".into(), CoefficientModel::from_series(&s))]);
        }
        let mero = self.meromorphic.as_ref().expect("validated");
        Ok(vec![
            ("numerator".into(), mero.numerator.to_model(prime)?),
            ("denominator".into(), mero.denominator.to_model(prime)?),
        ])
    }

    /// The document's subject as a meromorphic model (entire when the
    /// document carries a single component).
    pub fn subject(&self) -> Result<MeromorphicModel> {
        let prime = self.prime()?;
        if let Some(mero) = &self.meromorphic {
            let num = mero.numerator.to_model(prime).context("field `numerator`")?;
            let den = mero
                .denominator
                .to_model(prime)
                .context("field `denominator`")?;
            return MeromorphicModel::quotient(num, den).context("meromorphic pair");
        }
        let components = self.components()?;
        Ok(MeromorphicModel::entire(components[0].1.clone()))
    }

    pub fn to_series(&self) -> Result<Option<TruncatedSeries>> {
        match &self.series {
            None => Ok(None),
            Some(s) => Ok(Some(s.to_series(self.prime()?)?)),
        }
    }
}

impl ModelSpec {
    pub fn to_model(&self, prime: Prime) -> Result<CoefficientModel> {
        match self {
            ModelSpec::Polynomial { coeffs } => Ok(CoefficientModel::poly(
                prime,
                padic_factor::Poly::new(coeffs.clone()),
            )),
            ModelSpec::ValuationList { w } => Ok(CoefficientModel::list(prime, w.clone())),
            ModelSpec::PrefixTail { w, tail } => {
                CoefficientModel::prefix_tail(prime, w.clone(), tail.clone())
                    .context("field `prefix_tail`")
            }
            ModelSpec::Prop214Family { n, v_alpha } => {
                CoefficientModel::family(prime, *n, v_alpha.clone())
                    .context("field `prop214_family`")
            }
        }
    }
}

impl SeriesSpec {
    pub fn to_series(&self, prime: Prime) -> Result<TruncatedSeries> {
        if self.coeffs.len() != self.order + 1 {
            bail!(
                "series of order {} needs {} coefficients, found {}",
                self.order,
                self.order + 1,
                self.coeffs.len()
            );
        }
        Ok(TruncatedSeries::new(prime, self.coeffs.clone()))
    }

    pub fn from_series(s: &TruncatedSeries) -> SeriesSpec {
        SeriesSpec {
            prime: s.prime().get(),
            order: s.order(),
            coeffs: s.coeffs().to_vec(),
        }
    }
}
