//! JSON data manifest: built-in mode families plus CSV profile tables.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DataManifest {
    pub l_max: usize,
    pub u_min: f64,
    pub u_max: f64,
    pub n_u: usize,
    pub modes: Vec<ModeSpec>,
    /// fraction of each grid end smoothly tapered to zero (default 0.1)
    #[serde(default = "default_taper")]
    pub taper_fraction: f64,
}

fn default_taper() -> f64 {
    0.1
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModeSpec {
    pub field: FieldKind,
    pub l: usize,
    pub m: i64,
    pub profile: Profile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldKind {
    Phi,
    AbarElectric,
    AbarMagnetic,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Profile {
    /// amp * exp(-((u - center)/width)^2) * exp(i phase (u - center))
    Gaussian {
        center: f64,
        width: f64,
        amp: f64,
        #[serde(default)]
        phase: f64,
    },
    /// CSV with columns u, re, im; resampled by monotone cubic interpolation
    Table { path: String },
}

impl DataManifest {
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_str_validated(&text)
    }

    pub fn from_str_validated(text: &str) -> Result<Self> {
        let m: DataManifest =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_u < 16 {
            return Err(Error::Parse("n_u must be at least 16".into()));
        }
        if !(self.u_max > self.u_min) {
            return Err(Error::Parse("u_max must exceed u_min".into()));
        }
        if !(0.0..0.5).contains(&self.taper_fraction) {
            return Err(Error::Parse("taper_fraction must lie in [0, 0.5)".into()));
        }
        for mode in &self.modes {
            if mode.l > self.l_max {
                return Err(Error::Parse(format!(
                    "mode degree l = {} exceeds l_max = {}",
                    mode.l, self.l_max
                )));
            }
            if mode.m.unsigned_abs() as usize > mode.l {
                return Err(Error::Parse(format!("|m| > l in mode ({}, {})", mode.l, mode.m)));
            }
            if mode.field != FieldKind::Phi && mode.l == 0 {
                return Err(Error::Parse("1-form modes need l >= 1".into()));
            }
            if let Profile::Gaussian { width, .. } = mode.profile {
                if width <= 0.0 {
                    return Err(Error::Parse("gaussian width must be positive".into()));
                }
            }
        }
        Ok(())
    }
}

/// Reads a CSV profile table (u, re, im), sorted in u.
pub fn read_profile_table(path: &Path) -> Result<(Vec<f64>, Vec<crate::C>)> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| Error::Parse(e.to_string()))?;
    let mut us = Vec::new();
    let mut vals = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
        if rec.len() < 3 {
            return Err(Error::Parse("profile table rows need u, re, im".into()));
        }
        let parse = |s: &str| s.parse::<f64>().map_err(|e| Error::Parse(e.to_string()));
        us.push(parse(&rec[0])?);
        vals.push(crate::C::new(parse(&rec[1])?, parse(&rec[2])?));
    }
    if us.len() < 4 {
        return Err(Error::Parse("profile table too short".into()));
    }
    if !us.windows(2).all(|w| w[1] > w[0]) {
        return Err(Error::Parse("profile table must be strictly increasing in u".into()));
    }
    Ok((us, vals))
}
