//! Von Neumann and binary entropies in bits, plus the numerical inverse
//! of the two-state mixture entropy.
//!
//! Base-2 logarithms throughout: with entropy in bits the measure of a
//! single state is exactly `2^0 = 1` and an orthogonal pair gives
//! exactly `2^1 = 2`.

use crate::hilbert::DensityMatrix;
use crate::{Error, Result};

/// Eigenvalues at or below this are treated as exact zeros inside the
/// entropy sum, avoiding `-x log x` noise at the edge of double
/// precision.
pub const ZERO_EIGENVALUE_CUTOFF: f64 = 1e-14;

/// Interval width at which the bisection inverse stops.
const BISECTION_TOL: f64 = 1e-12;

/// An entropy in bits; nonnegative, and at most `log2(dim)` for a
/// dim-dimensional density matrix.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct EntropyValue(f64);

impl EntropyValue {
    pub fn bits(self) -> f64 {
        self.0
    }
}

impl std::fmt::Display for EntropyValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Binary entropy `H(x) = -x log2 x - (1-x) log2 (1-x)`, zero at both
/// endpoints.
pub fn binary_entropy(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -(x * x.log2() + (1.0 - x) * (1.0 - x).log2())
}

fn entropy_from_eigenvalues(eigenvalues: &[f64]) -> f64 {
    let s: f64 = eigenvalues
        .iter()
        .filter(|&&l| l > ZERO_EIGENVALUE_CUTOFF)
        .map(|&l| -l * l.log2())
        .sum();
    // An eigenvalue a few ulps above 1 makes the sum fractionally
    // negative; entropy is nonnegative by definition.
    s.max(0.0)
}

/// Von Neumann entropy `S = -sum_i lambda_i log2 lambda_i` in bits.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<EntropyValue> {
    let spectrum = rho.eigendecompose()?;
    Ok(EntropyValue(entropy_from_eigenvalues(spectrum.eigenvalues())))
}

/// Entropy of the uniform two-state mixture as a function of the
/// transition probability `p = |<psi|phi>|^2`: the mixture eigenvalues
/// are `(1 +- sqrt(p)) / 2`, so `S = H((1 - sqrt(p)) / 2)`. Strictly
/// decreasing in `p`, from 1 at `p = 0` down to 0 at `p = 1`.
pub fn pair_entropy(p: f64) -> Result<EntropyValue> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange {
            what: "transition probability",
            value: p,
            lo: 0.0,
            hi: 1.0,
        });
    }
    let lambda = (1.0 - p.sqrt()) / 2.0;
    Ok(EntropyValue(binary_entropy(lambda)))
}

/// Inverse of [`pair_entropy`]: the unique `p` in `[0, 1]` with
/// `pair_entropy(p) = s`.
///
/// Bisects `H` on `lambda` in `[0, 1/2]` (where it is strictly
/// increasing) to an interval of `1e-12`, then maps back through
/// `p = (1 - 2 lambda)^2`.
pub fn invert_pair_entropy(s: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&s) {
        return Err(Error::OutOfRange {
            what: "entropy",
            value: s,
            lo: 0.0,
            hi: 1.0,
        });
    }
    let mut lo = 0.0_f64;
    let mut hi = 0.5_f64;
    while hi - lo > BISECTION_TOL {
        let mid = 0.5 * (lo + hi);
        if binary_entropy(mid) < s {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let lambda = 0.5 * (lo + hi);
    Ok((1.0 - 2.0 * lambda).powi(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::{DensityMatrix, PureState, C64};
    use nalgebra::{DMatrix, DVector};

    #[test]
    fn pure_state_entropy_is_zero() {
        let mut rng = crate::random::rng_from_seed(3);
        for dim in 2..=6 {
            let psi = crate::random::random_pure_state(dim, &mut rng);
            let s = von_neumann_entropy(&psi.projector()).unwrap();
            assert!(s.bits() >= 0.0);
            assert!(s.bits() <= 1e-12, "S = {}", s.bits());
        }
    }

    #[test]
    fn maximally_mixed_qubit_entropy_is_one() {
        let rho =
            DensityMatrix::new(DMatrix::from_diagonal_element(2, 2, C64::new(0.5, 0.0))).unwrap();
        assert!((von_neumann_entropy(&rho).unwrap().bits() - 1.0).abs() <= 1e-12);
    }

    // Oracle: direct evaluation of -(2/3)log2(2/3) - (1/3)log2(1/3)
    // = log2(3) - 2/3 = 0.9182958340544896.
    #[test]
    fn two_thirds_one_third_entropy() {
        let rho = DensityMatrix::new(DMatrix::from_diagonal(&DVector::from_vec(vec![
            C64::new(2.0 / 3.0, 0.0),
            C64::new(1.0 / 3.0, 0.0),
        ])))
        .unwrap();
        let s = von_neumann_entropy(&rho).unwrap().bits();
        assert!((s - 0.918_295_834_054_489_6).abs() <= 1e-9, "S = {s}");
    }

    #[test]
    fn pair_entropy_endpoints() {
        assert_eq!(pair_entropy(0.0).unwrap().bits(), 1.0);
        assert_eq!(pair_entropy(1.0).unwrap().bits(), 0.0);
    }

    // Oracle: eigendecomposition of (|z+><z+| + |x+><x+|) / 2, which has
    // eigenvalues (1 +- sqrt(1/2)) / 2; frozen value from the direct sum.
    #[test]
    fn pair_entropy_at_half_overlap() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let z = PureState::basis_state(2, 0);
        let x = PureState::new(vec![C64::new(h, 0.0), C64::new(h, 0.0)]).unwrap();
        let mix = DensityMatrix::new(
            (z.projector().entries() + x.projector().entries()) * C64::new(0.5, 0.0),
        )
        .unwrap();
        let oracle = von_neumann_entropy(&mix).unwrap().bits();
        let closed = pair_entropy(0.5).unwrap().bits();
        assert!((closed - oracle).abs() <= 1e-12);
        assert!((closed - 0.600_876_036_692_856).abs() <= 1e-12, "S = {closed}");
    }

    #[test]
    fn pair_entropy_rejects_out_of_range() {
        assert!(pair_entropy(-0.1).is_err());
        assert!(pair_entropy(1.1).is_err());
        assert!(pair_entropy(f64::NAN).is_err());
    }

    #[test]
    fn pair_entropy_strictly_decreasing() {
        let mut prev = pair_entropy(0.0).unwrap().bits();
        for i in 1..=50 {
            let s = pair_entropy(i as f64 / 50.0).unwrap().bits();
            assert!(s < prev, "not decreasing at grid point {i}");
            prev = s;
        }
    }

    #[test]
    fn invert_pair_entropy_endpoints() {
        assert!((invert_pair_entropy(1.0).unwrap() - 0.0).abs() <= 1e-9);
        assert!((invert_pair_entropy(0.0).unwrap() - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn invert_pair_entropy_round_trip_at_half() {
        let s = pair_entropy(0.5).unwrap().bits();
        let p = invert_pair_entropy(s).unwrap();
        assert!((p - 0.5).abs() <= 1e-9, "p = {p}");
    }

    #[test]
    fn invert_pair_entropy_rejects_out_of_range() {
        assert!(invert_pair_entropy(-0.2).is_err());
        assert!(invert_pair_entropy(1.2).is_err());
    }
}
