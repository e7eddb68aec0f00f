//! Residue-current annihilators of Artinian monomial ideals:
//! essential-set enumeration over the Newton polyhedron, the
//! annihilator as an intersection of irreducible ideals, and the
//! integral-closure chain with strictness witnesses.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ideal::{
    is_complete_intersection, variety_is_origin, Exponent, MonomialIdeal,
};
use crate::linalg;
use crate::newton::{compute_newton_polyhedron, integral_closure_of_power, NewtonPolyhedron};

/// An n-point subset of `A` on a common facet with nonzero determinant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EssentialSet {
    /// Sorted indices into `A`.
    pub indices: Vec<usize>,
    /// Index of a witnessing facet in the polyhedron's facet list.
    pub facet_index: usize,
    /// `det(a₁,…,aₙ)`, never zero.
    pub determinant: i128,
    /// Componentwise sum of the member points; lies on `nΓ`.
    pub alpha: Exponent,
}

/// One term of the residue current: a tensor product of one-variable
/// currents of orders `alpha`, labeled by its exterior basis element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueTerm {
    pub alpha: Exponent,
    pub basis_label: Vec<usize>,
    pub constant_nonzero: bool,
}

/// Full annihilator computation for an Artinian monomial ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnihilatorReport {
    pub essential_sets: Vec<EssentialSet>,
    pub terms: Vec<ResidueTerm>,
    pub annihilator: MonomialIdeal,
    pub equals_ideal: bool,
    pub complete_intersection: bool,
}

/// Inclusion chain `closure(I^μ) ⊆ Ann ⊆ I` with strictness flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub mu: u32,
    pub closure_power_mu: MonomialIdeal,
    pub annihilator: MonomialIdeal,
    pub ideal: MonomialIdeal,
    pub left_included: bool,
    pub right_included: bool,
    pub left_strict: bool,
    pub right_strict: bool,
}

fn require_artinian(a: &[Exponent]) -> Result<()> {
    if !variety_is_origin(a) {
        return Err(Error::NotArtinian);
    }
    Ok(())
}

/// All essential subsets of `A`: n-subsets on a common facet of
/// `Γ⁺(A)` spanning `Rⁿ`. The search runs over each facet's on-facet
/// points only; results are canonically ordered by index list.
pub fn enumerate_essential_sets(a: &[Exponent]) -> Result<Vec<EssentialSet>> {
    require_artinian(a)?;
    let polyhedron = compute_newton_polyhedron(a)?;
    essential_sets_of(&polyhedron)
}

pub(crate) fn essential_sets_of(polyhedron: &NewtonPolyhedron) -> Result<Vec<EssentialSet>> {
    let n = polyhedron.dimension();
    let points = polyhedron.points();
    let mut found: Vec<EssentialSet> = Vec::new();
    for (facet_index, facet) in polyhedron.facets().iter().enumerate() {
        if facet.on_facet.len() < n {
            continue;
        }
        for subset in facet.on_facet.iter().copied().combinations(n) {
            if found.iter().any(|e| e.indices == subset) {
                continue;
            }
            let rows: Vec<Vec<i64>> =
                subset.iter().map(|&i| points[i].coords().to_vec()).collect();
            let det = linalg::determinant(&rows)?;
            if det == 0 {
                continue;
            }
            let mut alpha = points[subset[0]].clone();
            for &i in &subset[1..] {
                alpha = alpha.checked_add(&points[i])?;
            }
            found.push(EssentialSet {
                indices: subset,
                facet_index,
                determinant: det,
                alpha,
            });
        }
    }
    found.sort_by(|x, y| x.indices.cmp(&y.indices));
    Ok(found)
}

/// Compute `Ann R^{z^A}` as the intersection of the irreducible ideals
/// `(z₁^{α₁^B},…,zₙ^{αₙ^B})` over the essential sets `B`.
pub fn annihilator(a: &[Exponent]) -> Result<AnnihilatorReport> {
    require_artinian(a)?;
    let points: Vec<Exponent> = a.iter().unique().cloned().collect();
    let n = points[0].dimension();
    let polyhedron = compute_newton_polyhedron(&points)?;
    let essential_sets = essential_sets_of(&polyhedron)?;
    assert!(
        !essential_sets.is_empty(),
        "an Artinian monomial ideal always has essential sets"
    );

    let mut annihilator: Option<MonomialIdeal> = None;
    let mut terms = Vec::new();
    for b in &essential_sets {
        let irreducible = pure_power_ideal(n, &b.alpha)?;
        annihilator = Some(match annihilator {
            None => irreducible,
            Some(acc) => acc.intersect(&irreducible)?,
        });
        terms.push(ResidueTerm {
            alpha: b.alpha.clone(),
            basis_label: b.indices.clone(),
            constant_nonzero: true,
        });
    }
    let annihilator = annihilator.unwrap();
    let ideal = MonomialIdeal::minimalize(n, &points)?;
    let equals_ideal = annihilator == ideal;
    let complete_intersection = is_complete_intersection(&ideal)?;
    assert_eq!(
        equals_ideal, complete_intersection,
        "annihilator equals the ideal exactly for complete intersections"
    );
    Ok(AnnihilatorReport {
        essential_sets,
        terms,
        annihilator,
        equals_ideal,
        complete_intersection,
    })
}

/// The irreducible ideal `(zᵢ^{αᵢ} : αᵢ > 0)`.
pub(crate) fn pure_power_ideal(n: usize, alpha: &Exponent) -> Result<MonomialIdeal> {
    let mut generators = Vec::new();
    for i in 0..alpha.dimension() {
        if alpha.get(i) > 0 {
            let mut coords = vec![0i64; n];
            coords[i] = alpha.get(i);
            generators.push(Exponent::new(coords)?);
        }
    }
    MonomialIdeal::minimalize(n, &generators)
}

/// The explicit element of `Ann R^{z^A} \ closure((z^A)^n)`:
/// `z₁^{n·b₁−1}` where `(b₁,0,…,0)` is the intersection of the Newton
/// diagram with the first axis.
pub fn briancon_skoda_witness(a: &[Exponent]) -> Result<Exponent> {
    require_artinian(a)?;
    let n = a[0].dimension();
    if n < 2 {
        return Err(Error::DimensionTooSmall);
    }
    let b1 = a
        .iter()
        .filter(|e| e.pure_power_axis() == Some(0))
        .map(|e| e.get(0))
        .min()
        .expect("Artinian set intersects the first axis");
    let power = (n as i64)
        .checked_mul(b1)
        .and_then(|v| v.checked_sub(1))
        .ok_or(Error::Overflow)?;
    let mut coords = vec![0i64; n];
    coords[0] = power;
    Exponent::new(coords)
}

/// Verify `closure((z^A)^μ) ⊆ Ann R^{z^A} ⊆ (z^A)` with `μ = min(m,n)`
/// and report strictness of both inclusions.
pub fn verify_chain(a: &[Exponent]) -> Result<ChainReport> {
    require_artinian(a)?;
    let points: Vec<Exponent> = a.iter().unique().cloned().collect();
    let n = points[0].dimension();
    let mu = points.len().min(n) as u32;
    let report = annihilator(&points)?;
    let closure_power_mu = integral_closure_of_power(&points, mu)?;
    let ideal = MonomialIdeal::minimalize(n, &points)?;

    let left_included = closure_power_mu.is_subideal_of(&report.annihilator)?;
    let right_included = report.annihilator.is_subideal_of(&ideal)?;
    let left_strict = left_included && closure_power_mu != report.annihilator;
    let right_strict = right_included && report.annihilator != ideal;

    assert!(left_included && right_included, "Briançon–Skoda chain");
    if n >= 2 {
        assert!(left_strict, "closure of the n-th power is strictly smaller");
    }
    assert_eq!(right_strict, !report.complete_intersection);

    Ok(ChainReport {
        mu,
        closure_power_mu,
        annihilator: report.annihilator,
        ideal,
        left_included,
        right_included,
        left_strict,
        right_strict,
    })
}
