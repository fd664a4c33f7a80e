//! The three state-quantifying measures over qubit regions and finite
//! state sets.
//!
//! * counting measure `mu_d`: cardinality — each state counts as one;
//! * solid-angle (Liouville) measure `mu_c`: additive area on the Bloch
//!   sphere, zero on single points;
//! * quantized measure `mu_q(U) = 2^S(rho_U)`: one per single state,
//!   finite on continuous regions, and non-additive.
//!
//! Finite sets are sets of rays, deduplicated up to global phase.
//! Continuous regions are spherical caps (including the full sphere),
//! whose uniform mixtures admit a closed form alongside quadrature and
//! Monte Carlo realizations.

use nalgebra::DMatrix;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::entropy::{pair_entropy, von_neumann_entropy};
use crate::hilbert::{transition_probability, DensityMatrix, PureState, C64};
use crate::{Error, Result};

/// Two members with transition probability at least `1 - DEDUP_TOL` are
/// the same ray and are merged.
pub const DEDUP_TOL: f64 = 1e-9;
/// Smallest accepted quadrature grid along either angle.
pub const MIN_QUADRATURE_POINTS: usize = 8;
/// Smallest accepted Monte Carlo sample count.
pub const MIN_MONTECARLO_SAMPLES: usize = 100;

/// A nonnegative measure value: state counts for `mu_d` and `mu_q`
/// (the latter is always at least one), steradians for `mu_c`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct MeasureValue(f64);

impl MeasureValue {
    pub fn value(self) -> f64 {
        self.0
    }
}

impl std::fmt::Display for MeasureValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Record of one ray merged away during state-set deduplication.
/// Indices refer to the input order passed to [`StateSet::new`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DedupMerge {
    pub kept: usize,
    pub dropped: usize,
    pub overlap: f64,
}

/// A nonempty finite set of rays over one Hilbert space.
///
/// Construction deduplicates inputs that coincide as rays (transition
/// probability at least `1 - DEDUP_TOL`) and keeps a report of what was
/// merged; a silent duplicate would turn the uniform mixture into a
/// weighted one.
#[derive(Clone, Debug)]
pub struct StateSet {
    dim: usize,
    states: Vec<PureState>,
    merges: Vec<DedupMerge>,
}

impl StateSet {
    pub fn new(states: Vec<PureState>) -> Result<Self> {
        let Some(first) = states.first() else {
            return Err(Error::EmptyStateSet);
        };
        let dim = first.dim();
        for s in &states {
            if s.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: s.dim(),
                });
            }
        }
        let mut kept: Vec<PureState> = Vec::with_capacity(states.len());
        let mut kept_input_index: Vec<usize> = Vec::with_capacity(states.len());
        let mut merges = Vec::new();
        'next: for (idx, s) in states.into_iter().enumerate() {
            for (k, existing) in kept.iter().enumerate() {
                let p = transition_probability(existing, &s).expect("dims checked above");
                if p >= 1.0 - DEDUP_TOL {
                    merges.push(DedupMerge {
                        kept: kept_input_index[k],
                        dropped: idx,
                        overlap: p,
                    });
                    continue 'next;
                }
            }
            kept.push(s);
            kept_input_index.push(idx);
        }
        Ok(Self {
            dim,
            states: kept,
            merges,
        })
    }

    pub fn singleton(state: PureState) -> Self {
        Self {
            dim: state.dim(),
            states: vec![state],
            merges: Vec::new(),
        }
    }

    /// Union as ray sets: concatenates and re-deduplicates.
    pub fn union(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let mut states = self.states.clone();
        states.extend(other.states.iter().cloned());
        Self::new(states)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        false // nonempty by construction
    }

    pub fn states(&self) -> &[PureState] {
        &self.states
    }

    /// What was merged away at construction, if anything.
    pub fn dedup_merges(&self) -> &[DedupMerge] {
        &self.merges
    }
}

/// The uniform mixture `rho_U = (1/n) sum_i |psi_i><psi_i|`.
pub fn uniform_mixture(set: &StateSet) -> DensityMatrix {
    let n = set.len() as f64;
    let weight = C64::new(1.0 / n, 0.0);
    let mut m = DMatrix::from_element(set.dim(), set.dim(), C64::new(0.0, 0.0));
    for s in set.states() {
        m += (s.vector() * s.vector().adjoint()) * weight;
    }
    // Divide out the accumulated trace (within 1e-9 of 1 already) so
    // boundary-tolerance inputs cannot trip the trace invariant.
    let trace = m.trace().re;
    DensityMatrix::new(m / C64::new(trace, 0.0))
        .expect("uniform mixture of normalized states is a valid density matrix")
}

/// Counting measure `mu_d`: the post-dedup cardinality.
pub fn counting_measure(set: &StateSet) -> MeasureValue {
    MeasureValue(set.len() as f64)
}

/// Quantized measure `mu_q(U) = 2^S(rho_U)`.
///
/// Always in `[1, span_dimension(U)]`: one for a single ray, `|U|`
/// exactly when the members are mutually orthogonal, less in every
/// other case.
pub fn quantized_measure(set: &StateSet) -> Result<MeasureValue> {
    let s = von_neumann_entropy(&uniform_mixture(set))?;
    Ok(MeasureValue(s.bits().exp2()))
}

/// Quantized measure of a two-ray set as a function of the transition
/// probability: `2^S` with `S` from [`pair_entropy`]. Decreasing from 2
/// at `p = 0` to 1 at `p = 1`.
pub fn pair_measure(p: f64) -> Result<MeasureValue> {
    Ok(MeasureValue(pair_entropy(p)?.bits().exp2()))
}

/// Inverse of [`pair_measure`]: recovers the transition probability
/// from a two-ray measure value in `[1, 2]`.
pub fn overlap_from_pair_measure(mu: f64) -> Result<f64> {
    if !(1.0..=2.0).contains(&mu) {
        return Err(Error::OutOfRange {
            what: "pair measure",
            value: mu,
            lo: 1.0,
            hi: 2.0,
        });
    }
    crate::entropy::invert_pair_entropy(mu.log2())
}

/// All pairwise tensor products `a_i (x) b_j`, ordered with the first
/// set as the slow index.
pub fn product_set(a: &StateSet, b: &StateSet) -> StateSet {
    let mut states = Vec::with_capacity(a.len() * b.len());
    for sa in a.states() {
        for sb in b.states() {
            states.push(sa.tensor(sb));
        }
    }
    StateSet::new(states).expect("product of valid sets is valid")
}

/// A spherical cap on the Bloch sphere: all directions within polar
/// angle `theta0` of `axis`. `theta0 = pi` is the full sphere.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SphericalCap {
    axis: [f64; 3],
    theta0: f64,
}

impl SphericalCap {
    pub fn new(axis: [f64; 3], theta0: f64) -> Result<Self> {
        let norm = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
        let deviation = (norm - 1.0).abs();
        if deviation > 1e-12 || deviation.is_nan() {
            return Err(Error::CapAxisNotUnit { norm });
        }
        check_theta0(theta0)?;
        Ok(Self { axis, theta0 })
    }

    /// Cap about the +z axis.
    pub fn about_z(theta0: f64) -> Result<Self> {
        Self::new([0.0, 0.0, 1.0], theta0)
    }

    pub fn axis(&self) -> [f64; 3] {
        self.axis
    }

    pub fn theta0(&self) -> f64 {
        self.theta0
    }
}

fn check_theta0(theta0: f64) -> Result<()> {
    if !(theta0 > 0.0 && theta0 <= std::f64::consts::PI) {
        return Err(Error::OutOfRange {
            what: "theta0",
            value: theta0,
            lo: 0.0,
            hi: std::f64::consts::PI,
        });
    }
    Ok(())
}

/// Solid-angle (Liouville) measure of a cap:
/// `Omega = 2 pi (1 - cos theta0)` steradians.
pub fn solid_angle_measure(cap: &SphericalCap) -> MeasureValue {
    MeasureValue(2.0 * std::f64::consts::PI * (1.0 - cap.theta0().cos()))
}

/// Solid angle rescaled for table readability: the cap's fraction of
/// the full sphere times `total`. The bare steradian value from
/// [`solid_angle_measure`] is the default everywhere else.
pub fn normalized_solid_angle_measure(cap: &SphericalCap, total: f64) -> MeasureValue {
    MeasureValue(solid_angle_measure(cap).value() / (4.0 * std::f64::consts::PI) * total)
}

/// The qubit ray at Bloch angles `(theta, phi)`:
/// `cos(theta/2)|z+> + e^{i phi} sin(theta/2)|z->`.
pub fn bloch_state(theta: f64, phi: f64) -> PureState {
    let half = theta / 2.0;
    PureState::new(vec![
        C64::new(half.cos(), 0.0),
        C64::from_polar(half.sin(), phi),
    ])
    .expect("bloch parametrization is normalized")
}

/// Closed form of the uniform mixture over a cap about +z.
///
/// Averaging the Bloch vector over the cap leaves `r = (1 + cos
/// theta0)/2` along the axis, so the mixture is diagonal with
/// eigenvalues `(1 +- r)/2`.
pub fn cap_mixture_analytic(theta0: f64) -> Result<DensityMatrix> {
    check_theta0(theta0)?;
    let r = (1.0 + theta0.cos()) / 2.0;
    let m = DMatrix::from_fn(2, 2, |i, j| {
        if i == j {
            C64::new(if i == 0 { (1.0 + r) / 2.0 } else { (1.0 - r) / 2.0 }, 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    DensityMatrix::new(m)
}

/// Midpoint-rule realization of the cap mixture: averages
/// `|psi(theta, phi)><psi(theta, phi)|` against the area element
/// `sin theta`, normalized by the quadrature weight sum so the trace is
/// exactly one.
pub fn cap_mixture_quadrature(theta0: f64, n_theta: usize, n_phi: usize) -> Result<DensityMatrix> {
    check_theta0(theta0)?;
    if n_theta < MIN_QUADRATURE_POINTS {
        return Err(Error::GridTooCoarse {
            name: "n_theta",
            got: n_theta,
            min: MIN_QUADRATURE_POINTS,
        });
    }
    if n_phi < MIN_QUADRATURE_POINTS {
        return Err(Error::GridTooCoarse {
            name: "n_phi",
            got: n_phi,
            min: MIN_QUADRATURE_POINTS,
        });
    }
    let dt = theta0 / n_theta as f64;
    let dp = 2.0 * std::f64::consts::PI / n_phi as f64;
    let mut acc = DMatrix::from_element(2, 2, C64::new(0.0, 0.0));
    let mut weight_sum = 0.0;
    for i in 0..n_theta {
        let theta = (i as f64 + 0.5) * dt;
        let w = theta.sin();
        for j in 0..n_phi {
            let phi = (j as f64 + 0.5) * dp;
            let psi = bloch_state(theta, phi);
            acc += (psi.vector() * psi.vector().adjoint()) * C64::new(w, 0.0);
            weight_sum += w;
        }
    }
    DensityMatrix::new(acc / C64::new(weight_sum, 0.0))
}

/// Monte Carlo realization of the cap mixture: averages projectors over
/// area-uniform samples (`cos theta` uniform in `[cos theta0, 1]`, `phi`
/// uniform). Deterministic for a given seed.
pub fn cap_mixture_montecarlo(theta0: f64, n_samples: usize, seed: u64) -> Result<DensityMatrix> {
    check_theta0(theta0)?;
    if n_samples < MIN_MONTECARLO_SAMPLES {
        return Err(Error::TooFewSamples {
            got: n_samples,
            min: MIN_MONTECARLO_SAMPLES,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cos_floor = theta0.cos();
    let weight = C64::new(1.0 / n_samples as f64, 0.0);
    let mut acc = DMatrix::from_element(2, 2, C64::new(0.0, 0.0));
    for _ in 0..n_samples {
        let u: f64 = cos_floor + (1.0 - cos_floor) * rng.gen::<f64>();
        let phi: f64 = 2.0 * std::f64::consts::PI * rng.gen::<f64>();
        let psi = bloch_state(u.clamp(-1.0, 1.0).acos(), phi);
        acc += (psi.vector() * psi.vector().adjoint()) * weight;
    }
    DensityMatrix::new(acc)
}

/// How to realize a continuous cap mixture.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CapMethod {
    Analytic,
    Quadrature { n_theta: usize, n_phi: usize },
    MonteCarlo { n_samples: usize, seed: u64 },
}

/// Quantized measure of a cap: `2^S` of the cap mixture. Lies in
/// `[1, 2]` and increases with the opening angle.
pub fn cap_quantized_measure(theta0: f64, method: CapMethod) -> Result<MeasureValue> {
    let rho = match method {
        CapMethod::Analytic => cap_mixture_analytic(theta0)?,
        CapMethod::Quadrature { n_theta, n_phi } => {
            cap_mixture_quadrature(theta0, n_theta, n_phi)?
        }
        CapMethod::MonteCarlo { n_samples, seed } => {
            cap_mixture_montecarlo(theta0, n_samples, seed)?
        }
    };
    Ok(MeasureValue(von_neumann_entropy(&rho)?.bits().exp2()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::max_entry_diff;
    use std::f64::consts::PI;

    fn z_plus() -> PureState {
        PureState::basis_state(2, 0)
    }

    fn z_minus() -> PureState {
        PureState::basis_state(2, 1)
    }

    fn x_plus() -> PureState {
        bloch_state(PI / 2.0, 0.0)
    }

    fn set(states: Vec<PureState>) -> StateSet {
        StateSet::new(states).unwrap()
    }

    // mu_q of {|z+>, |x+>}: 2^H((1 - sqrt(1/2))/2), frozen from the
    // eigendecomposition oracle.
    const MU_PAIR_ZX: f64 = 1.516_637_222_999_960_7;
    // mu_q of {|z+>, |z->, |x+>}: eigenvalues (2/3, 1/3), so
    // 2^(log2 3 - 2/3) = 3 * 2^(-2/3).
    const MU_TRIPLE: f64 = 1.889_881_574_842_309_7;
    // 2^H(0.25): hemisphere cap, eigenvalues (3/4, 1/4).
    const MU_HEMISPHERE: f64 = 1.754_765_350_603_323_3;

    #[test]
    fn empty_set_is_rejected() {
        assert!(matches!(
            StateSet::new(vec![]).unwrap_err(),
            Error::EmptyStateSet
        ));
    }

    #[test]
    fn dedup_merges_equal_rays() {
        let phased = PureState::new(vec![C64::from_polar(1.0, 0.9), C64::new(0.0, 0.0)]).unwrap();
        let u = set(vec![z_plus(), phased, z_minus()]);
        assert_eq!(u.len(), 2);
        assert_eq!(u.dedup_merges().len(), 1);
        let m = u.dedup_merges()[0];
        assert_eq!((m.kept, m.dropped), (0, 1));
        assert!(m.overlap >= 1.0 - DEDUP_TOL);
    }

    #[test]
    fn uniform_mixture_tolerates_boundary_norms() {
        let c = (1.0 + 9.9e-10_f64).sqrt();
        let a = PureState::new(vec![C64::new(c, 0.0), C64::new(0.0, 0.0)]).unwrap();
        let b = PureState::new(vec![C64::new(0.0, 0.0), C64::new(c, 0.0)]).unwrap();
        let rho = uniform_mixture(&set(vec![a, b]));
        assert!((rho.trace_real() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn uniform_mixture_of_orthogonal_pair_is_maximally_mixed() {
        let rho = uniform_mixture(&set(vec![z_plus(), z_minus()]));
        for i in 0..2 {
            for j in 0..2 {
                let expect = if i == j { 0.5 } else { 0.0 };
                assert!((rho.entries()[(i, j)] - C64::new(expect, 0.0)).norm() <= 1e-15);
            }
        }
    }

    #[test]
    fn uniform_mixture_of_singleton_is_projector() {
        let mut rng = crate::random::rng_from_seed(11);
        let psi = crate::random::random_pure_state(3, &mut rng);
        let rho = uniform_mixture(&StateSet::singleton(psi.clone()));
        assert!(max_entry_diff(rho.entries(), psi.projector().entries()) <= 1e-15);
    }

    #[test]
    fn uniform_mixture_of_triple_matches_direct_arithmetic() {
        let rho = uniform_mixture(&set(vec![z_plus(), z_minus(), x_plus()]));
        // (1/3) I + (1/3) |x+><x+|
        let third = C64::new(1.0 / 3.0, 0.0);
        let direct = DMatrix::identity(2, 2) * third
            + x_plus().projector().entries() * third;
        assert!(max_entry_diff(rho.entries(), &direct) <= 1e-15);
    }

    #[test]
    fn quantized_measure_of_singleton_is_one() {
        let mu = quantized_measure(&StateSet::singleton(z_plus())).unwrap();
        assert!((mu.value() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn quantized_measure_of_orthogonal_pair_is_two() {
        let mu = quantized_measure(&set(vec![z_plus(), z_minus()])).unwrap();
        assert!((mu.value() - 2.0).abs() <= 1e-9);
    }

    #[test]
    fn quantized_measure_of_zx_pair() {
        let mu = quantized_measure(&set(vec![z_plus(), x_plus()])).unwrap();
        assert!((mu.value() - MU_PAIR_ZX).abs() <= 1e-12, "mu = {}", mu.value());
    }

    #[test]
    fn quantized_measure_of_triple() {
        let mu = quantized_measure(&set(vec![z_plus(), z_minus(), x_plus()])).unwrap();
        assert!((mu.value() - MU_TRIPLE).abs() <= 1e-12, "mu = {}", mu.value());
    }

    #[test]
    fn pair_measure_examples() {
        assert_eq!(pair_measure(0.0).unwrap().value(), 2.0);
        assert_eq!(pair_measure(1.0).unwrap().value(), 1.0);
        assert!((pair_measure(0.5).unwrap().value() - MU_PAIR_ZX).abs() <= 1e-12);
    }

    #[test]
    fn overlap_from_pair_measure_round_trip() {
        assert!((overlap_from_pair_measure(2.0).unwrap() - 0.0).abs() <= 1e-9);
        assert!((overlap_from_pair_measure(1.0).unwrap() - 1.0).abs() <= 1e-9);
        assert!((overlap_from_pair_measure(MU_PAIR_ZX).unwrap() - 0.5).abs() <= 1e-9);
        assert!(overlap_from_pair_measure(0.9).is_err());
        assert!(overlap_from_pair_measure(2.1).is_err());
    }

    #[test]
    fn counting_measure_counts_rays() {
        assert_eq!(counting_measure(&StateSet::singleton(z_plus())).value(), 1.0);
        assert_eq!(
            counting_measure(&set(vec![z_plus(), z_minus(), x_plus()])).value(),
            3.0
        );
        let phased = PureState::new(vec![C64::from_polar(1.0, 2.2), C64::new(0.0, 0.0)]).unwrap();
        assert_eq!(counting_measure(&set(vec![z_plus(), phased])).value(), 1.0);
    }

    #[test]
    fn solid_angle_examples() {
        let full = SphericalCap::about_z(PI).unwrap();
        assert!((solid_angle_measure(&full).value() - 4.0 * PI).abs() <= 1e-12);
        let hemisphere = SphericalCap::about_z(PI / 2.0).unwrap();
        assert!((solid_angle_measure(&hemisphere).value() - 2.0 * PI).abs() <= 1e-12);
        let sixty = SphericalCap::about_z(PI / 3.0).unwrap();
        assert!((solid_angle_measure(&sixty).value() - PI).abs() <= 1e-12);
    }

    #[test]
    fn normalized_solid_angle_scales_fraction_of_sphere() {
        let hemisphere = SphericalCap::about_z(PI / 2.0).unwrap();
        assert!((normalized_solid_angle_measure(&hemisphere, 1.0).value() - 0.5).abs() <= 1e-12);
        assert!((normalized_solid_angle_measure(&hemisphere, 100.0).value() - 50.0).abs() <= 1e-12);
        let full = SphericalCap::about_z(PI).unwrap();
        assert!((normalized_solid_angle_measure(&full, 1.0).value() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn cap_validation() {
        assert!(SphericalCap::about_z(0.0).is_err());
        assert!(SphericalCap::about_z(PI + 0.1).is_err());
        assert!(SphericalCap::about_z(f64::NAN).is_err());
        assert!(SphericalCap::new([0.0, 0.0, 2.0], 1.0).is_err());
    }

    #[test]
    fn bloch_state_poles_and_equator() {
        assert!((transition_probability(&bloch_state(0.0, 1.0), &z_plus()).unwrap() - 1.0).abs() <= 1e-15);
        assert!((transition_probability(&bloch_state(PI, 0.7), &z_minus()).unwrap() - 1.0).abs() <= 1e-15);
        assert!((transition_probability(&bloch_state(PI / 2.0, 0.0), &x_plus()).unwrap() - 1.0).abs() <= 1e-15);
    }

    #[test]
    fn cap_mixture_analytic_examples() {
        let full = cap_mixture_analytic(PI).unwrap();
        assert!((full.entries()[(0, 0)].re - 0.5).abs() <= 1e-15);
        assert!((full.entries()[(1, 1)].re - 0.5).abs() <= 1e-15);
        let hemi = cap_mixture_analytic(PI / 2.0).unwrap();
        assert!((hemi.entries()[(0, 0)].re - 0.75).abs() <= 1e-15);
        assert!((hemi.entries()[(1, 1)].re - 0.25).abs() <= 1e-15);
        assert!(cap_mixture_analytic(0.0).is_err());
    }

    #[test]
    fn cap_mixture_quadrature_converges_to_analytic() {
        for theta0 in [PI / 2.0, PI] {
            let quad = cap_mixture_quadrature(theta0, 512, 512).unwrap();
            let exact = cap_mixture_analytic(theta0).unwrap();
            assert!(
                max_entry_diff(quad.entries(), exact.entries()) <= 1e-6,
                "theta0 = {theta0}"
            );
            assert!((quad.trace_real() - 1.0).abs() <= 1e-9);
        }
    }

    #[test]
    fn cap_mixture_quadrature_rejects_coarse_grid() {
        assert!(matches!(
            cap_mixture_quadrature(1.0, 4, 512).unwrap_err(),
            Error::GridTooCoarse { .. }
        ));
        assert!(matches!(
            cap_mixture_quadrature(1.0, 512, 7).unwrap_err(),
            Error::GridTooCoarse { .. }
        ));
    }

    #[test]
    fn cap_mixture_montecarlo_is_deterministic() {
        let a = cap_mixture_montecarlo(PI / 2.0, 1000, 7).unwrap();
        let b = cap_mixture_montecarlo(PI / 2.0, 1000, 7).unwrap();
        assert_eq!(a.entries(), b.entries());
        let c = cap_mixture_montecarlo(PI / 2.0, 1000, 8).unwrap();
        assert!(max_entry_diff(a.entries(), c.entries()) > 0.0);
    }

    #[test]
    fn cap_mixture_montecarlo_converges() {
        let n = 100_000;
        let bound = 3.0 * 0.5 / (n as f64).sqrt();
        let mc = cap_mixture_montecarlo(PI / 2.0, n, 12345).unwrap();
        let exact = cap_mixture_analytic(PI / 2.0).unwrap();
        let dev = max_entry_diff(mc.entries(), exact.entries());
        assert!(dev <= bound, "dev = {dev}, bound = {bound}");
    }

    #[test]
    fn cap_mixture_montecarlo_rejects_small_sample() {
        assert!(matches!(
            cap_mixture_montecarlo(1.0, 10, 0).unwrap_err(),
            Error::TooFewSamples { .. }
        ));
    }

    // The maximally mixed qubit arises both as the discrete mixture of
    // an orthogonal pair and as the continuous uniform mixture over the
    // whole sphere.
    #[test]
    fn discrete_and_continuous_routes_to_maximally_mixed_agree() {
        let discrete = uniform_mixture(&set(vec![z_plus(), z_minus()]));
        let continuous = cap_mixture_analytic(PI).unwrap();
        assert!(max_entry_diff(discrete.entries(), continuous.entries()) <= 1e-15);
        let quadrature = cap_mixture_quadrature(PI, 64, 64).unwrap();
        assert!(max_entry_diff(discrete.entries(), quadrature.entries()) <= 1e-12);
    }

    #[test]
    fn cap_quantized_measure_examples() {
        let full = cap_quantized_measure(PI, CapMethod::Analytic).unwrap();
        assert!((full.value() - 2.0).abs() <= 1e-12);
        let tiny = cap_quantized_measure(1e-9, CapMethod::Analytic).unwrap();
        assert!((tiny.value() - 1.0).abs() <= 1e-12);
        let hemi = cap_quantized_measure(PI / 2.0, CapMethod::Analytic).unwrap();
        assert!((hemi.value() - MU_HEMISPHERE).abs() <= 1e-12, "mu = {}", hemi.value());
    }

    #[test]
    fn cap_quantized_measure_increases_with_angle() {
        let mut prev = 0.0;
        for i in 1..=32 {
            let theta0 = PI * i as f64 / 32.0;
            let mu = cap_quantized_measure(theta0, CapMethod::Analytic)
                .unwrap()
                .value();
            assert!(mu > prev, "not increasing at theta0 = {theta0}");
            prev = mu;
        }
    }

    #[test]
    fn product_set_of_bases_is_composite_basis() {
        let zz = set(vec![z_plus(), z_minus()]);
        let prod = product_set(&zz, &zz);
        assert_eq!(prod.len(), 4);
        assert_eq!(prod.dim(), 4);
        for (k, s) in prod.states().iter().enumerate() {
            let p = transition_probability(s, &PureState::basis_state(4, k)).unwrap();
            assert!((p - 1.0).abs() <= 1e-15);
        }
    }

    #[test]
    fn product_of_singletons_is_singleton_tensor() {
        let mut rng = crate::random::rng_from_seed(23);
        let psi = crate::random::random_pure_state(2, &mut rng);
        let phi = crate::random::random_pure_state(3, &mut rng);
        let prod = product_set(
            &StateSet::singleton(psi.clone()),
            &StateSet::singleton(phi.clone()),
        );
        assert_eq!(prod.len(), 1);
        let p = transition_probability(&prod.states()[0], &psi.tensor(&phi)).unwrap();
        assert!((p - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn product_set_measure_is_multiplicative() {
        let a = set(vec![z_plus(), x_plus()]);
        let b = set(vec![z_plus(), z_minus()]);
        let prod = product_set(&a, &b);
        assert_eq!(prod.len(), 4);
        let mu = quantized_measure(&prod).unwrap().value();
        assert!((mu - 2.0 * MU_PAIR_ZX).abs() <= 1e-8, "mu = {mu}");
    }
}
