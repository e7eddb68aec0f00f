//! Symbolic oracle for residue-current annihilation, built on the
//! one-variable pairing rule and its tensor products.
//!
//! The pairing of `∂̄[1/z^p]` against `z^k dz` is `2πi` when `k = p−1`
//! and zero otherwise; the constant `2πi` is tracked as a formal power,
//! never numerically. Antiholomorphic test factors are killed by the
//! current, which is modeled here by `Polynomial` carrying holomorphic
//! terms only.

use crate::error::{Error, Result};
use crate::ideal::{check_dim, variety_is_origin, Exponent, Polynomial};
use crate::ratio::Rational;
use crate::residue::enumerate_essential_sets;

/// The tensor product `⊗ᵢ ∂̄[1/zᵢ^{αᵢ}]` with all orders `αᵢ ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorCurrent {
    alpha: Exponent,
}

impl TensorCurrent {
    pub fn new(alpha: Exponent) -> Result<Self> {
        if alpha.coords().iter().any(|&p| p < 1) {
            return Err(Error::NegativeEntry);
        }
        Ok(Self { alpha })
    }

    pub fn alpha(&self) -> &Exponent {
        &self.alpha
    }
}

/// A pairing value `coefficient · (2πi)^piPower`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairingValue {
    pub coefficient: Rational,
    pub pi_power: u32,
}

impl PairingValue {
    pub const ZERO: PairingValue = PairingValue {
        coefficient: Rational::ZERO,
        pi_power: 0,
    };

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }
}

/// Value of `⟨z^h · T, z^{testExp} dz⟩`, computed coordinatewise:
/// nonzero iff `h + testExp = α − 1`, in which case it is `(2πi)^n`.
pub fn pair_monomial(
    current: &TensorCurrent,
    h: &Exponent,
    test_exp: &Exponent,
) -> Result<PairingValue> {
    let n = current.alpha.dimension();
    check_dim(n, h.dimension())?;
    check_dim(n, test_exp.dimension())?;
    for i in 0..n {
        let total = h
            .get(i)
            .checked_add(test_exp.get(i))
            .ok_or(Error::Overflow)?;
        if total != current.alpha.get(i) - 1 {
            return Ok(PairingValue::ZERO);
        }
    }
    Ok(PairingValue {
        coefficient: Rational::ONE,
        pi_power: n as u32,
    })
}

/// True iff `h` annihilates the current: the pairing against every test
/// monomial below `α` sums to zero. The equivalent divisibility
/// criterion (every exponent of `h` reaches `αᵢ` in some coordinate) is
/// computed alongside and asserted equal; this is the module's core
/// self-check.
pub fn annihilates_term(current: &TensorCurrent, h: &Polynomial) -> Result<bool> {
    check_dim(current.alpha.dimension(), h.dimension())?;
    let n = current.alpha.dimension();

    let mut by_pairing = true;
    let mut test = vec![0i64; n];
    'outer: loop {
        let test_exp = Exponent::new(test.clone())?;
        let mut sum = Rational::ZERO;
        for (e, c) in h.terms() {
            let v = pair_monomial(current, e, &test_exp)?;
            if !v.is_zero() {
                sum = sum + *c * v.coefficient;
            }
        }
        if !sum.is_zero() {
            by_pairing = false;
            break;
        }
        // next test exponent in the box [0, α−1]
        for (t, &bound) in test.iter_mut().zip(current.alpha.coords()) {
            *t += 1;
            if *t < bound {
                continue 'outer;
            }
            *t = 0;
        }
        break;
    }

    let by_divisibility = h
        .terms()
        .all(|(beta, _)| (0..n).any(|i| beta.get(i) >= current.alpha.get(i)));

    assert_eq!(
        by_pairing, by_divisibility,
        "pairing sum and divisibility criterion must agree"
    );
    Ok(by_pairing)
}

/// True iff `h` annihilates every essential term of `R^{z^A}`, i.e.
/// belongs to `Ann R^{z^A}`.
pub fn annihilator_membership_oracle(a: &[Exponent], h: &Polynomial) -> Result<bool> {
    if !variety_is_origin(a) {
        return Err(Error::NotArtinian);
    }
    for b in enumerate_essential_sets(a)? {
        let current = TensorCurrent::new(b.alpha)?;
        if !annihilates_term(&current, h)? {
            return Ok(false);
        }
    }
    Ok(true)
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
    fn one_variable_pairing() {
        let p = 4;
        let t = TensorCurrent::new(exp(&[p])).unwrap();
        let v = pair_monomial(&t, &exp(&[0]), &exp(&[p - 1])).unwrap();
        assert_eq!(v.coefficient, Rational::ONE);
        assert_eq!(v.pi_power, 1);
        // z^p annihilates: every pairing vanishes
        for k in 0..p {
            assert!(pair_monomial(&t, &exp(&[p]), &exp(&[k])).unwrap().is_zero());
        }
    }

    #[test]
    fn two_variable_pairing() {
        let t = TensorCurrent::new(exp(&[14, 1])).unwrap();
        let v = pair_monomial(&t, &exp(&[2, 0]), &exp(&[11, 0])).unwrap();
        assert_eq!(v.coefficient, Rational::ONE);
        assert_eq!(v.pi_power, 2);
        assert!(pair_monomial(&t, &exp(&[2, 0]), &exp(&[10, 0]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn annihilation_by_divisibility() {
        let t = TensorCurrent::new(exp(&[14, 1])).unwrap();
        assert!(annihilates_term(&t, &Polynomial::monomial(exp(&[14, 0]))).unwrap());
        assert!(!annihilates_term(&t, &Polynomial::monomial(exp(&[13, 0]))).unwrap());
        assert!(annihilates_term(&t, &Polynomial::zero(2)).unwrap());
    }

    #[test]
    fn one_variable_annihilator_is_the_power() {
        for p in 1..=5 {
            let t = TensorCurrent::new(exp(&[p])).unwrap();
            for k in 0..=2 * p {
                assert_eq!(
                    annihilates_term(&t, &Polynomial::monomial(exp(&[k]))).unwrap(),
                    k >= p
                );
            }
        }
    }

    #[test]
    fn oracle_on_basex() {
        assert!(annihilator_membership_oracle(
            &basex(),
            &Polynomial::monomial(exp(&[2, 4]))
        )
        .unwrap());
        assert!(!annihilator_membership_oracle(
            &basex(),
            &Polynomial::monomial(exp(&[2, 3]))
        )
        .unwrap());
    }

    #[test]
    fn oracle_on_pure_powers() {
        let a = [exp(&[3, 0]), exp(&[0, 3])];
        assert!(annihilator_membership_oracle(&a, &Polynomial::monomial(exp(&[3, 0]))).unwrap());
        assert!(!annihilator_membership_oracle(&a, &Polynomial::monomial(exp(&[2, 2]))).unwrap());
    }

    #[test]
    fn linearity() {
        let t = TensorCurrent::new(exp(&[3, 2])).unwrap();
        let h1 = Polynomial::monomial(exp(&[3, 0]));
        let h2 = Polynomial::monomial(exp(&[0, 2]));
        assert!(annihilates_term(&t, &h1).unwrap());
        assert!(annihilates_term(&t, &h2).unwrap());
        assert!(annihilates_term(&t, &h1.add(&h2).unwrap()).unwrap());
    }

    #[test]
    fn current_requires_positive_orders() {
        assert!(TensorCurrent::new(exp(&[2, 0])).is_err());
    }
}
