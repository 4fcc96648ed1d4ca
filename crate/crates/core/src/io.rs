//! JSON formats for braidings, braided algebras and dendriform data.
//! Indices on the wire are one-based; scalars use the textual grammar.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{BraidedAlgebra, MuConstant};
use crate::braiding::{Braiding, SigmaEntry};
use crate::error::{Error, Result};
use crate::scalar::{parse_scalar, Field, Scalar};
use crate::tensor::LinComb;
use crate::universal::DendriformData;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaJson {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductJson {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

/// Any of the three input files; which fields are required depends on the
/// object being loaded.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scalar_field: Option<Field>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<SigmaJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagonal: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<ProductJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prec: Option<Vec<ProductJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub succ: Option<Vec<ProductJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<usize>>,
}

fn zero_based(x: usize, dim: usize, what: &str) -> Result<usize> {
    if x == 0 || x > dim {
        return Err(Error::IndexOutOfRange(format!("{what} index {x} in dimension {dim}")));
    }
    Ok(x - 1)
}

impl InputJson {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            pos: e.column(),
            msg: e.to_string(),
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    fn scalar(&self, text: &str) -> Result<Scalar> {
        match self.scalar_field {
            Some(f) => f.parse(text),
            None => parse_scalar(text),
        }
    }

    pub fn braiding(&self) -> Result<Braiding> {
        match (&self.diagonal, &self.sigma) {
            (Some(rows), None) => {
                let table = rows
                    .iter()
                    .map(|r| r.iter().map(|c| self.scalar(c)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                if let Some(d) = self.dim.filter(|&d| d != table.len()) {
                    return Err(Error::DimensionMismatch(format!(
                        "dim {d} with a {}-row diagonal",
                        table.len()
                    )));
                }
                Braiding::diagonal(&table)
            }
            (None, Some(entries)) => {
                let dim = self
                    .dim
                    .ok_or_else(|| Error::InvalidInput("`dim` is required with `sigma`".into()))?;
                let entries = entries
                    .iter()
                    .map(|e| {
                        Ok(SigmaEntry {
                            i: zero_based(e.i, dim, "sigma")?,
                            j: zero_based(e.j, dim, "sigma")?,
                            k: zero_based(e.k, dim, "sigma")?,
                            l: zero_based(e.l, dim, "sigma")?,
                            c: self.scalar(&e.c)?,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Braiding::explicit(dim, &entries)
            }
            (Some(_), Some(_)) => Err(Error::InvalidInput(
                "give either `sigma` or `diagonal`, not both".into(),
            )),
            (None, None) => Err(Error::InvalidInput("missing `sigma` or `diagonal`".into())),
        }
    }

    fn table(&self, entries: &[ProductJson], dim: usize, what: &str) -> Result<Vec<MuConstant>> {
        entries
            .iter()
            .map(|e| {
                Ok(MuConstant {
                    i: zero_based(e.i, dim, what)?,
                    j: zero_based(e.j, dim, what)?,
                    k: zero_based(e.k, dim, what)?,
                    c: self.scalar(&e.c)?,
                })
            })
            .collect()
    }

    pub fn algebra(&self) -> Result<BraidedAlgebra> {
        let sigma = self.braiding()?;
        let dim = sigma.dim();
        let mu = self.table(self.mu.as_deref().unwrap_or_default(), dim, "mu")?;
        let unit = self
            .unit
            .as_ref()
            .map(|u| u.iter().map(|c| self.scalar(c)).collect::<Result<Vec<_>>>())
            .transpose()?;
        BraidedAlgebra::new(sigma, &mu, unit)
    }

    pub fn dendriform(&self) -> Result<DendriformData> {
        let sigma = self.braiding()?;
        let dim = sigma.dim();
        let dense = |entries: Option<&[ProductJson]>, what: &str| -> Result<Vec<LinComb<u8>>> {
            let mut out = vec![LinComb::new(); dim * dim];
            for m in self.table(entries.unwrap_or_default(), dim, what)? {
                out[m.i * dim + m.j].add_term(m.k as u8, m.c);
            }
            Ok(out)
        };
        let data = DendriformData::new(
            sigma,
            dense(self.prec.as_deref(), "prec")?,
            dense(self.succ.as_deref(), "succ")?,
        )?;
        match &self.weights {
            Some(w) => data.with_weights(w.clone()),
            None => Ok(data),
        }
    }
}

fn sigma_json(s: &Braiding) -> Vec<SigmaJson> {
    s.entries()
        .into_iter()
        .map(|e| SigmaJson {
            i: e.i + 1,
            j: e.j + 1,
            k: e.k + 1,
            l: e.l + 1,
            c: e.c.to_string(),
        })
        .collect()
}

pub fn braiding_json(s: &Braiding) -> InputJson {
    InputJson {
        dim: Some(s.dim()),
        scalar_field: Some(s.field()),
        sigma: Some(sigma_json(s)),
        ..Default::default()
    }
}

pub fn algebra_json(a: &BraidedAlgebra) -> InputJson {
    let mu = a
        .constants()
        .into_iter()
        .map(|m| ProductJson {
            i: m.i + 1,
            j: m.j + 1,
            k: m.k + 1,
            c: m.c.to_string(),
        })
        .collect();
    let unit = a
        .unit()
        .map(|u| (0..a.dim() as u8).map(|k| u.coeff(&k).to_string()).collect());
    InputJson {
        mu: Some(mu),
        unit,
        scalar_field: Some(a.field()),
        ..braiding_json(a.sigma())
    }
}

pub fn dendriform_json(d: &DendriformData) -> InputJson {
    let table = |succ: bool| {
        let mut out = Vec::new();
        for (i, j) in itertools::iproduct!(0..d.dim(), 0..d.dim()) {
            let v = if succ { d.succ(i, j) } else { d.prec(i, j) };
            for (&k, c) in v.iter() {
                out.push(ProductJson {
                    i: i + 1,
                    j: j + 1,
                    k: k as usize + 1,
                    c: c.to_string(),
                });
            }
        }
        out
    };
    InputJson {
        prec: Some(table(false)),
        succ: Some(table(true)),
        weights: d.weights().iter().any(|&w| w != 1).then(|| d.weights().to_vec()),
        ..braiding_json(d.sigma())
    }
}

pub fn to_pretty(x: &InputJson) -> String {
    serde_json::to_string_pretty(x).expect("plain data serializes")
}
