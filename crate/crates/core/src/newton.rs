//! Exact computation of the Newton polyhedron `Γ⁺(A) = conv(A) + R₊ⁿ`:
//! facets with primitive integer normals, vertices, scaled membership,
//! and integral closures by bounded lattice enumeration.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exec::ExecMode;
use crate::ideal::{check_dim, Exponent, MonomialIdeal};
use crate::linalg;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// A supporting hyperplane `ρ·x ≥ c` of the Newton polyhedron whose
/// face has dimension `n−1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    /// Primitive non-negative integer normal.
    pub normal: Vec<i64>,
    /// `min { ρ·a : a ∈ A }`.
    pub offset: i64,
    /// Indices into `A` with `ρ·a = c`, sorted.
    pub on_facet: Vec<usize>,
    /// True iff every normal entry is positive, i.e. the face is bounded.
    pub compact: bool,
}

/// The Newton polyhedron of an exponent set `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    points: Vec<Exponent>,
    facets: Vec<Facet>,
    vertex_indices: Vec<usize>,
}

impl NewtonPolyhedron {
    pub fn points(&self) -> &[Exponent] {
        &self.points
    }

    pub fn dimension(&self) -> usize {
        self.points[0].dimension()
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Facets with strictly positive normals; their faces make up the
    /// Newton diagram `Γ(A)`.
    pub fn compact_facets(&self) -> Vec<&Facet> {
        self.facets.iter().filter(|f| f.compact).collect()
    }

    pub fn vertex_indices(&self) -> &[usize] {
        &self.vertex_indices
    }

    /// True iff `x` lies in the scaled polyhedron `rΓ⁺(A)`.
    pub fn contains_scaled(&self, r: i64, x: &Exponent) -> Result<bool> {
        check_dim(self.dimension(), x.dimension())?;
        for f in &self.facets {
            let lhs = dot(&f.normal, x.coords())?;
            let rhs = (f.offset as i128)
                .checked_mul(r as i128)
                .ok_or(Error::Overflow)?;
            if lhs < rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub(crate) fn dot(normal: &[i64], point: &[i64]) -> Result<i128> {
    let mut acc = 0i128;
    for (&r, &p) in normal.iter().zip(point) {
        acc = acc
            .checked_add((r as i128).checked_mul(p as i128).ok_or(Error::Overflow)?)
            .ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

/// Compute the complete facet list and vertex set of `Γ⁺(A)`.
///
/// Candidate normals are integer null vectors of (n−1)-tuples drawn
/// from the pairwise differences of `A` and the unit vectors, reduced
/// to primitive non-negative form; a candidate is kept when it supports
/// `A` and its face (together with the recession directions `eᵢ` for
/// `ρᵢ = 0`) has affine dimension `n−1`.
pub fn compute_newton_polyhedron(a: &[Exponent]) -> Result<NewtonPolyhedron> {
    if a.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let n = a[0].dimension();
    for e in a {
        check_dim(n, e.dimension())?;
    }
    let points: Vec<Exponent> = a.iter().unique().cloned().collect();

    // candidate direction pool: pairwise differences and unit vectors
    let mut pool: Vec<Vec<i64>> = Vec::new();
    for (i, j) in (0..points.len()).tuple_combinations() {
        let diff: Vec<i64> = points[i]
            .coords()
            .iter()
            .zip(points[j].coords())
            .map(|(x, y)| x - y)
            .collect();
        if diff.iter().any(|&d| d != 0) {
            pool.push(diff);
        }
    }
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        pool.push(e);
    }

    let mut normals: Vec<Vec<i64>> = Vec::new();
    for subset in pool.iter().combinations(n - 1) {
        let rows: Vec<&[i64]> = subset.iter().map(|v| v.as_slice()).collect();
        let Some(null) = linalg::cofactor_null_vector(&rows, n)? else {
            continue;
        };
        let Some(primitive) = linalg::primitive_nonnegative(&null) else {
            continue;
        };
        normals.push(primitive);
    }
    normals.sort();
    normals.dedup();

    let mut facets = Vec::new();
    for normal in normals {
        if let Some(facet) = validate_facet(&points, &normal)? {
            facets.push(facet);
        }
    }
    facets.sort_by(|a, b| a.normal.cmp(&b.normal));

    let vertex_indices = find_vertices(&points, &facets)?;
    Ok(NewtonPolyhedron {
        points,
        facets,
        vertex_indices,
    })
}

fn validate_facet(points: &[Exponent], normal: &[i64]) -> Result<Option<Facet>> {
    let n = normal.len();
    let offset128 = points
        .iter()
        .map(|p| dot(normal, p.coords()))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .expect("nonempty point set");
    let offset = i64::try_from(offset128).map_err(|_| Error::Overflow)?;
    let on_facet: Vec<usize> = points
        .iter()
        .enumerate()
        .filter(|(_, p)| dot(normal, p.coords()).unwrap() == offset128)
        .map(|(i, _)| i)
        .collect();

    // face dimension: span of in-facet differences plus the recession
    // directions orthogonal to the normal must be n−1
    let base = &points[on_facet[0]];
    let mut span_rows: Vec<Vec<i64>> = on_facet[1..]
        .iter()
        .map(|&i| {
            points[i]
                .coords()
                .iter()
                .zip(base.coords())
                .map(|(x, y)| x - y)
                .collect()
        })
        .collect();
    for i in 0..n {
        if normal[i] == 0 {
            let mut e = vec![0i64; n];
            e[i] = 1;
            span_rows.push(e);
        }
    }
    if linalg::rank(&span_rows)? != n - 1 {
        return Ok(None);
    }
    let compact = normal.iter().all(|&r| r > 0);
    Ok(Some(Facet {
        normal: normal.to_vec(),
        offset,
        on_facet,
        compact,
    }))
}

/// A point of `A` is a vertex iff the normals of its active facets
/// span `Rⁿ`.
fn find_vertices(points: &[Exponent], facets: &[Facet]) -> Result<Vec<usize>> {
    let n = points[0].dimension();
    let mut vertices = Vec::new();
    for (i, _) in points.iter().enumerate() {
        let active: Vec<Vec<i64>> = facets
            .iter()
            .filter(|f| f.on_facet.binary_search(&i).is_ok())
            .map(|f| f.normal.clone())
            .collect();
        if linalg::rank(&active)? == n {
            vertices.push(i);
        }
    }
    Ok(vertices)
}

/// Minimal generators of the monomial ideal of lattice points of
/// `Γ⁺(A)` (Lemma: the integral closure of `(z^A)`).
pub fn integral_closure(a: &[Exponent]) -> Result<MonomialIdeal> {
    integral_closure_of_power(a, 1)
}

/// Minimal generators of the lattice points of `rΓ⁺(A)`, i.e. the
/// integral closure of `(z^A)^r`.
pub fn integral_closure_of_power(a: &[Exponent], r: u32) -> Result<MonomialIdeal> {
    integral_closure_of_power_with(a, r, ExecMode::default())
}

pub fn integral_closure_of_power_with(
    a: &[Exponent],
    r: u32,
    mode: ExecMode,
) -> Result<MonomialIdeal> {
    if r == 0 {
        return Err(Error::ZeroPower);
    }
    let polyhedron = compute_newton_polyhedron(a)?;
    let n = polyhedron.dimension();
    // Minimal generators of the closure of rΓ⁺ lie in [0, r·M]ⁿ with
    // M = max coordinate over A: if xᵢ > r·M then x − eᵢ still
    // satisfies every facet inequality (ρ has non-negative entries and
    // ρ·x exceeds r·ρ·a for the maximal a), so x is not minimal.
    let max_coord = a
        .iter()
        .flat_map(|e| e.coords())
        .copied()
        .max()
        .unwrap_or(0);
    let bound = max_coord
        .checked_mul(r as i64)
        .ok_or(Error::Overflow)?;
    let generators = scan_minimal_points(&polyhedron, r as i64, bound, n, mode)?;
    MonomialIdeal::minimalize(n, &generators)
}

/// Scan the bounding box for lattice points of `rΓ⁺` that are minimal,
/// i.e. leaving the polyhedron when any positive coordinate drops by one.
fn scan_minimal_points(
    polyhedron: &NewtonPolyhedron,
    r: i64,
    bound: i64,
    n: usize,
    mode: ExecMode,
) -> Result<Vec<Exponent>> {
    let check = |first: i64| -> Result<Vec<Exponent>> {
        let mut found = Vec::new();
        let mut coords = vec![0i64; n];
        coords[0] = first;
        scan_rest(polyhedron, r, bound, &mut coords, 1, &mut found)?;
        Ok(found)
    };
    let per_slice: Vec<Vec<Exponent>> = match mode {
        ExecMode::Sequential => (0..=bound).map(check).collect::<Result<_>>()?,
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => (0..=bound)
            .into_par_iter()
            .map(check)
            .collect::<Result<_>>()?,
    };
    let mut out: Vec<Exponent> = per_slice.into_iter().flatten().collect();
    out.sort();
    Ok(out)
}

fn scan_rest(
    polyhedron: &NewtonPolyhedron,
    r: i64,
    bound: i64,
    coords: &mut Vec<i64>,
    depth: usize,
    found: &mut Vec<Exponent>,
) -> Result<()> {
    if depth == coords.len() {
        let x = Exponent::new(coords.clone())?;
        if !polyhedron.contains_scaled(r, &x)? {
            return Ok(());
        }
        let minimal = (0..coords.len()).all(|i| {
            if coords[i] == 0 {
                return true;
            }
            let mut down = coords.clone();
            down[i] -= 1;
            let y = Exponent::new(down).unwrap();
            !polyhedron.contains_scaled(r, &y).unwrap_or(true)
        });
        if minimal {
            found.push(x);
        }
        return Ok(());
    }
    for v in 0..=bound {
        coords[depth] = v;
        scan_rest(polyhedron, r, bound, coords, depth + 1, found)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exp(coords: &[i64]) -> Exponent {
        Exponent::new(coords.to_vec()).unwrap()
    }

    fn basex() -> Vec<Exponent> {
        vec![
            exp(&[8, 0]),
            exp(&[6, 1]),
            exp(&[2, 3]),
            exp(&[1, 5]),
            exp(&[0, 6]),
        ]
    }

    #[test]
    fn basex_compact_facets_and_vertices() {
        let p = compute_newton_polyhedron(&basex()).unwrap();
        let compact: Vec<(&[i64], i64, &[usize])> = p
            .compact_facets()
            .iter()
            .map(|f| (f.normal.as_slice(), f.offset, f.on_facet.as_slice()))
            .collect();
        assert_eq!(
            compact,
            vec![
                (&[1, 2][..], 8, &[0, 1, 2][..]),
                (&[3, 2][..], 12, &[2, 4][..]),
            ]
        );
        assert_eq!(p.vertex_indices(), &[0, 2, 4]);
    }

    #[test]
    fn simplex_single_compact_facet() {
        let p = compute_newton_polyhedron(&[exp(&[3, 0]), exp(&[0, 3])]).unwrap();
        let compact = p.compact_facets();
        assert_eq!(compact.len(), 1);
        assert_eq!(compact[0].normal, vec![1, 1]);
        assert_eq!(compact[0].offset, 3);
    }

    #[test]
    fn one_dimensional_half_line() {
        let p = compute_newton_polyhedron(&[exp(&[2]), exp(&[3]), exp(&[6])]).unwrap();
        assert_eq!(p.facets().len(), 1);
        assert_eq!(p.facets()[0].normal, vec![1]);
        assert_eq!(p.facets()[0].offset, 2);
        assert_eq!(p.vertex_indices(), &[0]);
    }

    #[test]
    fn no_compact_facets_on_noncompact_diagram() {
        let p = compute_newton_polyhedron(&[exp(&[1, 1]), exp(&[0, 1])]).unwrap();
        assert!(p.compact_facets().is_empty());
    }

    #[test]
    fn pure_powers_one_compact_facet() {
        let p =
            compute_newton_polyhedron(&[exp(&[4, 0, 0]), exp(&[0, 4, 0]), exp(&[0, 0, 4])])
                .unwrap();
        assert_eq!(p.compact_facets().len(), 1);
        assert_eq!(p.compact_facets()[0].normal, vec![1, 1, 1]);
    }

    #[test]
    fn scaled_membership_basex() {
        let p = compute_newton_polyhedron(&basex()).unwrap();
        assert!(!p.contains_scaled(2, &exp(&[15, 0])).unwrap());
        assert!(p.contains_scaled(2, &exp(&[16, 0])).unwrap());
        for a in basex() {
            assert!(p.contains_scaled(1, &a).unwrap());
        }
    }

    #[test]
    fn closure_of_simplex() {
        let c = integral_closure(&[exp(&[3, 0]), exp(&[0, 3])]).unwrap();
        assert_eq!(
            c.generators(),
            &[exp(&[0, 3]), exp(&[1, 2]), exp(&[2, 1]), exp(&[3, 0])]
        );
    }

    #[test]
    fn closure_of_saturated_simplex_is_identity() {
        let a = [exp(&[3, 0]), exp(&[2, 1]), exp(&[1, 2]), exp(&[0, 3])];
        let c = integral_closure(&a).unwrap();
        assert_eq!(c, MonomialIdeal::minimalize(2, &a).unwrap());
    }

    #[test]
    fn closure_one_dimensional() {
        let c = integral_closure(&[exp(&[3]), exp(&[5])]).unwrap();
        assert_eq!(c.generators(), &[exp(&[3])]);
    }

    #[test]
    fn closure_of_power() {
        let c = integral_closure_of_power(&basex(), 2).unwrap();
        assert!(c.contains(&exp(&[16, 0])).unwrap());
        assert!(!c.contains(&exp(&[15, 0])).unwrap());

        let a1 = [exp(&[1, 0]), exp(&[0, 1])];
        let sq = integral_closure_of_power(&a1, 2).unwrap();
        assert_eq!(
            sq.generators(),
            &[exp(&[0, 2]), exp(&[1, 1]), exp(&[2, 0])]
        );
        assert_eq!(
            integral_closure_of_power(&basex(), 1).unwrap(),
            integral_closure(&basex()).unwrap()
        );
    }

    #[test]
    fn closure_contains_ideal() {
        let a = basex();
        let closure = integral_closure(&a).unwrap();
        for g in &a {
            assert!(closure.contains(g).unwrap());
        }
    }

    #[test]
    fn closure_idempotent() {
        let a = basex();
        let once = integral_closure(&a).unwrap();
        let twice = integral_closure(once.generators()).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let a = basex();
        let seq = integral_closure_of_power_with(&a, 2, ExecMode::Sequential).unwrap();
        let def = integral_closure_of_power(&a, 2).unwrap();
        assert_eq!(seq, def);
    }
}
