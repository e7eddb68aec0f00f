//! JSON report schema. Field order is fixed by the struct layout, so
//! serialization is byte-identical across runs for identical input.

use serde::Serialize;

use monomial_residues::general::{PartialAnnihilatorReport, TermStatus};
use monomial_residues::residue::{AnnihilatorReport, ChainReport};
use monomial_residues::{Exponent, MonomialIdeal, NewtonPolyhedron};

#[derive(Debug, Serialize)]
pub struct FacetJson {
    pub normal: Vec<i64>,
    pub offset: i64,
    pub compact: bool,
    #[serde(rename = "onFacet")]
    pub on_facet: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct EssentialSetJson {
    pub indices: Vec<usize>,
    pub alpha: Vec<i64>,
    pub det: i128,
    pub facet: usize,
}

#[derive(Debug, Serialize)]
pub struct ChainJson {
    #[serde(rename = "closurePowerMu")]
    pub closure_power_mu: Vec<Vec<i64>>,
    pub annihilator: Vec<Vec<i64>>,
    pub ideal: Vec<Vec<i64>>,
    #[serde(rename = "leftStrict")]
    pub left_strict: bool,
    #[serde(rename = "rightStrict")]
    pub right_strict: bool,
}

#[derive(Debug, Serialize)]
pub struct TermJson {
    #[serde(rename = "indexSet")]
    pub index_set: Vec<usize>,
    pub members: Vec<usize>,
    pub status: String,
    pub alpha: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contribution: Option<Vec<Vec<i64>>>,
}

#[derive(Debug, Serialize)]
pub struct PartialJson {
    pub terms: Vec<TermJson>,
    #[serde(rename = "partialAnnihilator")]
    pub partial_annihilator: Vec<Vec<i64>>,
    pub complete: bool,
    #[serde(rename = "unknownCount")]
    pub unknown_count: usize,
}

/// Top-level report; sections absent for a given command are omitted.
#[derive(Debug, Serialize)]
pub struct Report {
    pub dimension: usize,
    pub generators: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<FacetJson>>,
    #[serde(rename = "essentialSets", skip_serializing_if = "Option::is_none")]
    pub essential_sets: Option<Vec<EssentialSetJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub annihilator: Option<Vec<Vec<i64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closure: Option<Vec<Vec<i64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<ChainJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partial: Option<PartialJson>,
    pub warnings: Vec<String>,
}

pub fn exponents_json(exps: &[Exponent]) -> Vec<Vec<i64>> {
    exps.iter().map(|e| e.coords().to_vec()).collect()
}

pub fn ideal_json(ideal: &MonomialIdeal) -> Vec<Vec<i64>> {
    exponents_json(ideal.generators())
}

pub fn facets_json(p: &NewtonPolyhedron) -> Vec<FacetJson> {
    p.facets()
        .iter()
        .map(|f| FacetJson {
            normal: f.normal.clone(),
            offset: f.offset,
            compact: f.compact,
            on_facet: f.on_facet.clone(),
        })
        .collect()
}

pub fn essential_sets_json(report: &AnnihilatorReport) -> Vec<EssentialSetJson> {
    report
        .essential_sets
        .iter()
        .map(|s| EssentialSetJson {
            indices: s.indices.clone(),
            alpha: s.alpha.coords().to_vec(),
            det: s.determinant,
            facet: s.facet_index,
        })
        .collect()
}

pub fn chain_json(chain: &ChainReport) -> ChainJson {
    ChainJson {
        closure_power_mu: ideal_json(&chain.closure_power_mu),
        annihilator: ideal_json(&chain.annihilator),
        ideal: ideal_json(&chain.ideal),
        left_strict: chain.left_strict,
        right_strict: chain.right_strict,
    }
}

pub fn partial_json(report: &PartialAnnihilatorReport) -> PartialJson {
    PartialJson {
        terms: report
            .terms
            .iter()
            .map(|t| TermJson {
                index_set: t.index_set.clone(),
                members: t.member_indices.clone(),
                status: match t.status {
                    TermStatus::Zero => "zero",
                    TermStatus::Known => "known",
                    TermStatus::Unknown => "unknown",
                }
                .to_string(),
                alpha: t.alpha_restricted.coords().to_vec(),
                contribution: t.ann_contribution.as_ref().map(ideal_json),
            })
            .collect(),
        partial_annihilator: ideal_json(&report.partial_annihilator),
        complete: report.complete,
        unknown_count: report.unknown_count,
    }
}

impl Report {
    pub fn new(dimension: usize, generators: &[Exponent], warnings: Vec<String>) -> Self {
        Report {
            dimension,
            generators: exponents_json(generators),
            facets: None,
            essential_sets: None,
            annihilator: None,
            closure: None,
            chain: None,
            partial: None,
            warnings,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }
}
