//! The non-displaceability certificate: `τ_d ≠ 0` for every flag type and sampled `d`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::novikov::{h_graded, tau_nonzero, NovikovRecord, NovikovWindows, TauResult};
use super::OrbitParams;
use crate::error::Result;
use crate::flag_schubert::{g_space, FlagType};
use crate::graded::GradedDims;
use crate::rational::{self, Rational};
use crate::root_system::DegreeWeights;

pub const CERTIFICATE_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub h: NovikovRecord,
    pub tau: TauResult,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullHom {
    #[serde(with = "rational::serde_one")]
    pub d: Rational,
    pub graded: GradedDims,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub certified: bool,
    pub status: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub schema_version: u32,
    pub params: OrbitParams,
    pub windows: NovikovWindows,
    pub degree_weights: Vec<i64>,
    pub normalization_shift: i64,
    #[serde(with = "rational::serde_vec")]
    pub d_grid: Vec<Rational>,
    pub records: Vec<CertificateRecord>,
    /// `⊕_I G(I) ⊗ H_I(d)` per grid value.
    pub full_hom: Vec<FullHom>,
    pub verdict: Verdict,
    pub versions: BTreeMap<String, String>,
}

impl CertificateReport {
    /// One row per `(I, d, degree)` of the `H_I(d)` tables.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["flag", "d", "degree", "dim"]).expect("in-memory write");
        for r in &self.records {
            for (deg, dim) in r.h.graded.iter() {
                w.write_record([r.h.flag.to_string(), r.h.d.to_string(), deg.to_string(), dim.to_string()])
                    .expect("in-memory write");
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
    }
}

pub fn certificate(
    params: &OrbitParams,
    d_grid: &[Rational],
    windows: &NovikovWindows,
    weights: &DegreeWeights,
) -> Result<CertificateReport> {
    let flags = FlagType::all(params.n)?;
    let jobs: Vec<(FlagType, Rational)> =
        d_grid.iter().flat_map(|&d| flags.iter().map(move |&ty| (ty, d))).collect();
    let records = jobs
        .par_iter()
        .map(|&(ty, d)| {
            Ok(CertificateRecord {
                h: h_graded(params, ty.indices(), d, windows, weights)?,
                tau: tau_nonzero(params, ty.indices(), d, weights)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let full_hom = d_grid
        .iter()
        .map(|&d| {
            let mut g = GradedDims::new();
            for r in records.iter().filter(|r| r.h.d == d) {
                let ty = FlagType::new(params.n, r.h.flag)?;
                g.add(&g_space(ty).tensor(&r.h.graded));
            }
            Ok(FullHom { d, graded: g })
        })
        .collect::<Result<Vec<_>>>()?;
    let all_witnessed = records.iter().all(|r| r.tau.nonzero && r.tau.witness.is_some());
    let status = if records.is_empty() {
        "no samples"
    } else if all_witnessed {
        "certified"
    } else {
        "missing witness"
    };
    let mut versions = BTreeMap::new();
    versions.insert("cartan-sheaf".to_string(), env!("CARGO_PKG_VERSION").to_string());
    versions.insert("certificate_schema".to_string(), CERTIFICATE_SCHEMA_VERSION.to_string());
    Ok(CertificateReport {
        schema_version: CERTIFICATE_SCHEMA_VERSION,
        params: params.clone(),
        windows: windows.clone(),
        degree_weights: weights.weights().to_vec(),
        normalization_shift: params.normalization_shift(),
        d_grid: d_grid.to_vec(),
        records,
        full_hom,
        verdict: Verdict { certified: all_witnessed, status: status.to_string() },
        versions,
    })
}
