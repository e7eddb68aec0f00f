//! Partial annihilators for general (not necessarily Artinian)
//! monomial ideals via coordinate projections.
//!
//! For every admissible degree `k` and index set `I` with `|I| = k`,
//! a k-subset `B` of `A` contributes a current term that vanishes
//! unless the projection `T_I(B)` is essential for `Γ⁺(T_I(A))`. When
//! the witnessing facet is compact the term's annihilator is known
//! exactly; when only non-compact facets witness it, the term is
//! reported as unknown rather than dropped. The computation is valid
//! outside the union of codimension-(k+1) coordinate planes, which
//! misses nothing essential.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ideal::{variety_codimension, variety_is_origin, Exponent, MonomialIdeal};
use crate::linalg;
use crate::newton::{compute_newton_polyhedron, dot, NewtonPolyhedron};

/// Coordinate projection of an exponent list with collapsed duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    /// Sorted 0-based coordinates kept by the projection.
    pub index_set: Vec<usize>,
    /// Distinct projected points, in order of first appearance.
    pub images: Vec<Exponent>,
    /// For each original index, the position of its image in `images`.
    pub image_of: Vec<usize>,
}

/// Project `A` onto the coordinates in `index_set`, recording which
/// original points collapse to the same image.
pub fn project_exponents(a: &[Exponent], index_set: &[usize]) -> Result<Projection> {
    if a.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let n = a[0].dimension();
    if index_set.is_empty() || index_set.iter().any(|&i| i >= n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: index_set.len(),
        });
    }
    let mut images: Vec<Exponent> = Vec::new();
    let mut image_of = Vec::with_capacity(a.len());
    for e in a {
        let img = Exponent::new(index_set.iter().map(|&i| e.get(i)).collect())?;
        let pos = match images.iter().position(|x| *x == img) {
            Some(p) => p,
            None => {
                images.push(img);
                images.len() - 1
            }
        };
        image_of.push(pos);
    }
    Ok(Projection {
        index_set: index_set.to_vec(),
        images,
        image_of,
    })
}

/// Classification of a projected current term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermStatus {
    /// `T_I(B)` is not essential; the term vanishes.
    Zero,
    /// Essential with a compact witnessing facet; annihilator known.
    Known,
    /// Essential but witnessed only by non-compact facets.
    Unknown,
}

/// A nonvanishing candidate term `R_{B,I}` of the residue current.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectedTerm {
    /// Sorted 0-based coordinate set `I`.
    pub index_set: Vec<usize>,
    /// Sorted indices into `A` forming `B`, with `|B| = |I|`.
    pub member_indices: Vec<usize>,
    pub status: TermStatus,
    /// `α^B` restricted to the coordinates of `I`.
    pub alpha_restricted: Exponent,
    /// Full-ring ideal `(zᵢ^{αᵢ^B} : i ∈ I)`; present iff status is known.
    pub ann_contribution: Option<MonomialIdeal>,
}

/// Partial annihilator with an explicit completeness verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialAnnihilatorReport {
    pub terms: Vec<ProjectedTerm>,
    pub partial_annihilator: MonomialIdeal,
    pub complete: bool,
    pub unknown_count: usize,
    pub codim: usize,
    pub mu: usize,
    pub warnings: Vec<String>,
}

fn classify(
    projection: &Projection,
    polyhedron: &NewtonPolyhedron,
    members: &[usize],
) -> Result<(TermStatus, Option<Exponent>)> {
    let k = projection.index_set.len();
    let image_ids: Vec<usize> = members.iter().map(|&i| projection.image_of[i]).collect();
    if image_ids.iter().unique().count() < k {
        // coincident projections: determinant is zero
        return Ok((TermStatus::Zero, None));
    }
    let images: Vec<&Exponent> = image_ids.iter().map(|&i| &projection.images[i]).collect();

    let mut witnessed = false;
    let mut compact_witness = false;
    for facet in polyhedron.facets() {
        let on = images
            .iter()
            .map(|img| dot(&facet.normal, img.coords()))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|v| v == facet.offset as i128);
        if on {
            witnessed = true;
            compact_witness |= facet.compact;
        }
    }
    if !witnessed {
        return Ok((TermStatus::Zero, None));
    }
    let rows: Vec<Vec<i64>> = images.iter().map(|img| img.coords().to_vec()).collect();
    if linalg::determinant(&rows)? == 0 {
        return Ok((TermStatus::Zero, None));
    }
    let mut alpha = images[0].clone();
    for img in &images[1..] {
        alpha = alpha.checked_add(img)?;
    }
    let status = if compact_witness {
        TermStatus::Known
    } else {
        TermStatus::Unknown
    };
    Ok((status, Some(alpha)))
}

/// Enumerate all nonvanishing candidate terms `R_{B,I}` for
/// `codim Y ≤ |I| = |B| ≤ min(m, n)`. Vanishing terms are omitted.
pub fn enumerate_projected_terms(a: &[Exponent]) -> Result<Vec<ProjectedTerm>> {
    let points: Vec<Exponent> = a.iter().unique().cloned().collect();
    if points.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let n = points[0].dimension();
    let m = points.len();
    let codim = variety_codimension(&points)?;
    let mu = m.min(n);

    let mut terms = Vec::new();
    for k in codim..=mu {
        for index_set in (0..n).combinations(k) {
            let projection = project_exponents(&points, &index_set)?;
            let polyhedron = compute_newton_polyhedron(&projection.images)?;
            for members in (0..m).combinations(k) {
                let (status, alpha) = classify(&projection, &polyhedron, &members)?;
                if status == TermStatus::Zero {
                    continue;
                }
                let alpha = alpha.expect("essential term carries alpha");
                let ann_contribution = if status == TermStatus::Known {
                    Some(embedded_pure_power_ideal(n, &index_set, &alpha)?)
                } else {
                    None
                };
                terms.push(ProjectedTerm {
                    index_set: index_set.clone(),
                    member_indices: members,
                    status,
                    alpha_restricted: alpha,
                    ann_contribution,
                });
            }
        }
    }
    terms.sort_by(|x, y| {
        (x.index_set.len(), &x.index_set, &x.member_indices)
            .cmp(&(y.index_set.len(), &y.index_set, &y.member_indices))
    });
    Ok(terms)
}

/// The ideal `(zᵢ^{αᵢ} : i ∈ I)` viewed in the full n-variable ring.
fn embedded_pure_power_ideal(
    n: usize,
    index_set: &[usize],
    alpha: &Exponent,
) -> Result<MonomialIdeal> {
    let mut generators = Vec::new();
    for (j, &i) in index_set.iter().enumerate() {
        let mut coords = vec![0i64; n];
        coords[i] = alpha.get(j);
        generators.push(Exponent::new(coords)?);
    }
    MonomialIdeal::minimalize(n, &generators)
}

/// Intersect the known contributions and report how complete the
/// description is. The verdict is complete exactly when the variety is
/// the origin, or when `n = 2`, the generators are minimal and no
/// unknown terms occurred; everything else reports incomplete.
pub fn partial_annihilator(a: &[Exponent]) -> Result<PartialAnnihilatorReport> {
    let points: Vec<Exponent> = a.iter().unique().cloned().collect();
    if points.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let n = points[0].dimension();
    let terms = enumerate_projected_terms(&points)?;
    let codim = variety_codimension(&points)?;
    let mu = points.len().min(n);

    let mut acc: Option<MonomialIdeal> = None;
    let mut unknown_count = 0;
    for term in &terms {
        match (&term.status, &term.ann_contribution) {
            (TermStatus::Known, Some(ideal)) => {
                acc = Some(match acc {
                    None => ideal.clone(),
                    Some(prev) => prev.intersect(ideal)?,
                });
            }
            (TermStatus::Unknown, _) => unknown_count += 1,
            _ => {}
        }
    }
    let partial_annihilator = acc.expect("at least one computable term");

    let minimal = MonomialIdeal::minimalize(n, &points)?;
    let is_minimal_presentation = {
        let mut sorted = points.clone();
        sorted.sort();
        sorted == minimal.generators()
    };
    let mut warnings = Vec::new();
    if !is_minimal_presentation {
        warnings.push(
            "generator set is not minimal: the term list depends on the choice of generators"
                .to_string(),
        );
    }
    let complete = variety_is_origin(&points)
        || (n == 2 && is_minimal_presentation && unknown_count == 0);

    Ok(PartialAnnihilatorReport {
        terms,
        partial_annihilator,
        complete,
        unknown_count,
        codim,
        mu,
        warnings,
    })
}
