//! Exact monomial-ideal algebra over lattice exponent vectors.
//!
//! A monomial ideal is identified with the staircase region `∪ (a + R₊ⁿ)`
//! of its generator exponents; membership, intersection and powers are all
//! computed combinatorially on the exponents.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ratio::Rational;

/// A lattice point in `Z₊ⁿ`: the exponent vector of a monomial `z^a`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent {
    coords: Vec<i64>,
}

impl Exponent {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.iter().any(|&c| c < 0) {
            return Err(Error::NegativeEntry);
        }
        Ok(Self { coords })
    }

    pub fn dimension(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> i64 {
        self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Coordinates with a nonzero entry.
    pub fn support(&self) -> Vec<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// True iff the monomial is a pure power of a single variable.
    pub fn pure_power_axis(&self) -> Option<usize> {
        let support = self.support();
        match support.as_slice() {
            [axis] => Some(*axis),
            _ => None,
        }
    }

    /// Componentwise `aᵢ ≤ bᵢ`: `z^a` divides `z^b`.
    pub fn divides(&self, other: &Exponent) -> Result<bool> {
        check_dim(self.dimension(), other.dimension())?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .all(|(a, b)| a <= b))
    }

    /// Componentwise maximum: the exponent of `lcm(z^a, z^b)`.
    pub fn lcm(&self, other: &Exponent) -> Result<Exponent> {
        check_dim(self.dimension(), other.dimension())?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Ok(Exponent { coords })
    }

    pub fn checked_add(&self, other: &Exponent) -> Result<Exponent> {
        check_dim(self.dimension(), other.dimension())?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Exponent { coords })
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::DimensionMismatch { expected, got });
    }
    Ok(())
}

/// A monomial ideal stored by its unique minimal generating set,
/// lexicographically sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    dimension: usize,
    generators: Vec<Exponent>,
}

impl MonomialIdeal {
    /// Reduce a raw exponent list to the minimal generating set.
    ///
    /// Rejects the empty list (zero ideal) and any zero exponent
    /// (unit ideal); neither arises in the supported setting.
    pub fn minimalize(dimension: usize, raw: &[Exponent]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for e in raw {
            check_dim(dimension, e.dimension())?;
            if e.is_zero() {
                return Err(Error::UnitIdeal);
            }
        }
        let mut generators: Vec<Exponent> = Vec::new();
        for e in raw {
            if generators.iter().any(|g| g.divides(e).unwrap()) {
                continue;
            }
            generators.retain(|g| !e.divides(g).unwrap());
            generators.push(e.clone());
        }
        generators.sort();
        Ok(Self {
            dimension,
            generators,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn generators(&self) -> &[Exponent] {
        &self.generators
    }

    /// Ideal membership: some generator divides `e`.
    pub fn contains(&self, e: &Exponent) -> Result<bool> {
        check_dim(self.dimension, e.dimension())?;
        Ok(self.generators.iter().any(|g| g.divides(e).unwrap()))
    }

    /// `I ⊆ J` checked on minimal generators.
    pub fn is_subideal_of(&self, other: &MonomialIdeal) -> Result<bool> {
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `I ∩ J`, by minimalizing the lcms of all generator pairs.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.dimension, other.dimension)?;
        let mut raw = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                raw.push(a.lcm(b)?);
            }
        }
        MonomialIdeal::minimalize(self.dimension, &raw)
    }

    /// `I^r`, the minimalized r-fold sumset of the generators.
    pub fn power(&self, r: u32) -> Result<MonomialIdeal> {
        if r == 0 {
            return Err(Error::ZeroPower);
        }
        let mut raw = Vec::new();
        for combo in (0..self.generators.len()).combinations_with_replacement(r as usize) {
            let mut sum = self.generators[combo[0]].clone();
            for &i in &combo[1..] {
                sum = sum.checked_add(&self.generators[i])?;
            }
            raw.push(sum);
        }
        MonomialIdeal::minimalize(self.dimension, &raw)
    }
}

/// True iff the variety of `(z^A)` is the origin: every axis carries a
/// pure power of the corresponding variable.
pub fn variety_is_origin(a: &[Exponent]) -> bool {
    if a.is_empty() {
        return false;
    }
    let n = a[0].dimension();
    (0..n).all(|axis| a.iter().any(|e| e.pure_power_axis() == Some(axis)))
}

/// Codimension of `{z^A = 0}`: the minimum cardinality of a coordinate
/// set meeting the support of every generator.
pub fn variety_codimension(a: &[Exponent]) -> Result<usize> {
    if a.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if a.iter().any(|e| e.is_zero()) {
        return Err(Error::UnitIdeal);
    }
    let n = a[0].dimension();
    let supports: Vec<Vec<usize>> = a.iter().map(|e| e.support()).collect();
    for k in 1..=n {
        for subset in (0..n).combinations(k) {
            if supports
                .iter()
                .all(|s| s.iter().any(|i| subset.contains(i)))
            {
                return Ok(k);
            }
        }
    }
    unreachable!("every nonzero support is hit by the full coordinate set")
}

/// Artinian complete-intersection test: the minimal generators are
/// exactly `n` pure powers, one per axis.
pub fn is_complete_intersection(ideal: &MonomialIdeal) -> Result<bool> {
    if !variety_is_origin(ideal.generators()) {
        return Err(Error::NotArtinian);
    }
    let n = ideal.dimension();
    Ok(ideal.generators().len() == n
        && ideal.generators().iter().all(|g| g.pure_power_axis().is_some()))
}

/// A polynomial with rational coefficients, holomorphic by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    dimension: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl Polynomial {
    pub fn zero(dimension: usize) -> Self {
        Self {
            dimension,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(e: Exponent) -> Self {
        let mut terms = BTreeMap::new();
        let dimension = e.dimension();
        terms.insert(e, Rational::ONE);
        Self { dimension, terms }
    }

    pub fn from_terms(
        dimension: usize,
        entries: impl IntoIterator<Item = (Exponent, Rational)>,
    ) -> Result<Self> {
        let mut terms: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for (e, c) in entries {
            check_dim(dimension, e.dimension())?;
            let entry = terms.entry(e).or_insert(Rational::ZERO);
            *entry = *entry + c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Self { dimension, terms })
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.dimension, other.dimension)?;
        Polynomial::from_terms(
            self.dimension,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(e, c)| (e.clone(), *c)),
        )
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}
