//! Command implementations shared by the binary and the integration
//! tests. Each command maps an [`IdealSource`] to printable output; the
//! error type carries the process exit code.

use std::path::Path;

use serde::Deserialize;

use monomial_residues::current::annihilator_membership_oracle;
use monomial_residues::general::partial_annihilator;
use monomial_residues::ideal::variety_is_origin;
use monomial_residues::newton::{compute_newton_polyhedron, integral_closure_of_power};
use monomial_residues::residue::{annihilator, verify_chain};
use monomial_residues::{Exponent, MonomialIdeal, Polynomial};

use crate::parse::{parse_ideal, IdealSource, ParseError};
use crate::render::{render_staircase, PictureFormat};
use crate::report::{self, Report};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("precondition violated: {0}")]
    Precondition(#[from] monomial_residues::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("oracle mismatch: {0}")]
    OracleMismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Io(_) | CliError::OracleMismatch(_) => 1,
        }
    }
}

#[derive(Debug, Deserialize)]
struct JsonIdeal {
    dimension: usize,
    exponents: Vec<Vec<i64>>,
}

/// Load an ideal from inline text or a file. Files whose first
/// non-blank byte is `{` are read as `{"dimension":n,"exponents":[...]}`
/// with variables named `z1..zn`; anything else uses the monomial
/// grammar.
pub fn load_source(inline: Option<&str>, file: Option<&Path>) -> Result<IdealSource, CliError> {
    match (inline, file) {
        (Some(text), None) => Ok(parse_ideal(text, "inline")?),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)?;
            let provenance = path.display().to_string();
            if text.trim_start().starts_with('{') {
                source_from_json(&text, &provenance)
            } else {
                Ok(parse_ideal(&text, &provenance)?)
            }
        }
        _ => Err(CliError::Io(std::io::Error::new(
            std::io::ErrorKind::InvalidInput,
            "provide exactly one of an inline ideal or --file",
        ))),
    }
}

fn source_from_json(text: &str, provenance: &str) -> Result<IdealSource, CliError> {
    let raw: JsonIdeal = serde_json::from_str(text).map_err(|e| ParseError {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let mut exponents = Vec::new();
    let mut warnings = Vec::new();
    for coords in raw.exponents {
        if coords.len() != raw.dimension {
            return Err(monomial_residues::Error::DimensionMismatch {
                expected: raw.dimension,
                got: coords.len(),
            }
            .into());
        }
        let e = Exponent::new(coords)?;
        if e.is_zero() {
            return Err(monomial_residues::Error::UnitIdeal.into());
        }
        if exponents.contains(&e) {
            warnings.push(format!("duplicate generator {e} dropped"));
        } else {
            exponents.push(e);
        }
    }
    Ok(IdealSource {
        dimension: raw.dimension,
        exponents,
        variable_names: (1..=raw.dimension).map(|i| format!("z{i}")).collect(),
        provenance: provenance.to_string(),
        warnings,
    })
}

pub fn facets_command(source: &IdealSource) -> Result<Report, CliError> {
    let polyhedron = compute_newton_polyhedron(&source.exponents)?;
    let mut out = Report::new(source.dimension, &source.exponents, source.warnings.clone());
    out.facets = Some(report::facets_json(&polyhedron));
    Ok(out)
}

pub fn essential_command(source: &IdealSource) -> Result<Report, CliError> {
    let ann = annihilator(&source.exponents)?;
    let polyhedron = compute_newton_polyhedron(&source.exponents)?;
    let mut out = Report::new(source.dimension, &source.exponents, source.warnings.clone());
    out.facets = Some(report::facets_json(&polyhedron));
    out.essential_sets = Some(report::essential_sets_json(&ann));
    Ok(out)
}

pub fn annihilator_command(source: &IdealSource, oracle: bool) -> Result<Report, CliError> {
    let ann = annihilator(&source.exponents)?;
    if oracle {
        cross_check(&source.exponents, &ann.annihilator)?;
    }
    let mut out = Report::new(source.dimension, &source.exponents, source.warnings.clone());
    out.essential_sets = Some(report::essential_sets_json(&ann));
    out.annihilator = Some(report::ideal_json(&ann.annihilator));
    Ok(out)
}

pub fn closure_command(source: &IdealSource, power: u32) -> Result<Report, CliError> {
    let closure = integral_closure_of_power(&source.exponents, power)?;
    let mut out = Report::new(source.dimension, &source.exponents, source.warnings.clone());
    out.closure = Some(report::ideal_json(&closure));
    Ok(out)
}

pub fn chain_command(source: &IdealSource) -> Result<Report, CliError> {
    let chain = verify_chain(&source.exponents)?;
    let mut out = Report::new(source.dimension, &source.exponents, source.warnings.clone());
    out.chain = Some(report::chain_json(&chain));
    Ok(out)
}

pub fn partial_command(source: &IdealSource, strip_redundant: bool) -> Result<Report, CliError> {
    let mut warnings = source.warnings.clone();
    let exponents = if strip_redundant {
        let minimal = MonomialIdeal::minimalize(source.dimension, &source.exponents)?;
        let dropped = source.exponents.len() - minimal.generators().len();
        if dropped > 0 {
            warnings.push(format!("{dropped} redundant generator(s) stripped"));
        }
        minimal.generators().to_vec()
    } else {
        source.exponents.clone()
    };
    let partial = partial_annihilator(&exponents)?;
    warnings.extend(partial.warnings.iter().cloned());
    let mut out = Report::new(source.dimension, &exponents, warnings);
    out.partial = Some(report::partial_json(&partial));
    Ok(out)
}

/// Build the overlay for `render`: the full inclusion chain for an
/// Artinian two-variable ideal, otherwise ideal plus partial
/// annihilator. Layers run outermost first so inner regions are drawn
/// on top.
pub fn render_command(source: &IdealSource, format: PictureFormat) -> Result<String, CliError> {
    let ideal = MonomialIdeal::minimalize(source.dimension, &source.exponents)?;
    let layers = if variety_is_origin(&source.exponents) {
        let chain = verify_chain(&source.exponents)?;
        vec![
            ("ideal".to_string(), chain.ideal),
            ("annihilator".to_string(), chain.annihilator),
            (
                format!("integral closure of I^{}", chain.mu),
                chain.closure_power_mu,
            ),
        ]
    } else {
        let partial = partial_annihilator(&source.exponents)?;
        vec![
            ("ideal".to_string(), ideal),
            ("partial annihilator".to_string(), partial.partial_annihilator),
        ]
    };
    let picture = render_staircase(&layers, format)?;
    Ok(picture.body)
}

/// Verify ideal-algebra annihilator membership against the symbolic
/// pairing oracle, on every minimal generator and every step just below
/// one.
fn cross_check(a: &[Exponent], ann: &MonomialIdeal) -> Result<(), CliError> {
    let n = ann.dimension();
    for g in ann.generators() {
        if !annihilator_membership_oracle(a, &Polynomial::monomial(g.clone()))? {
            return Err(CliError::OracleMismatch(format!(
                "generator {g} not annihilated per pairing oracle"
            )));
        }
        for i in 0..n {
            if g.coords()[i] == 0 {
                continue;
            }
            let mut down = g.coords().to_vec();
            down[i] -= 1;
            let down = Exponent::new(down)?;
            let by_ideal = ann.contains(&down)?;
            let by_oracle = annihilator_membership_oracle(a, &Polynomial::monomial(down.clone()))?;
            if by_ideal != by_oracle {
                return Err(CliError::OracleMismatch(format!(
                    "membership of {down} disagrees: ideal {by_ideal}, oracle {by_oracle}"
                )));
            }
        }
    }
    Ok(())
}
