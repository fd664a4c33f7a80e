//! Named, reproducible experiments.
//!
//! Each experiment returns an [`ExperimentResult`]: a small table of
//! rows plus a list of checks, every check carrying observed value,
//! expected value, and a numeric tolerance. Rows and checks are
//! deterministic given `(name, parameters, seed)`; the recorded runtime
//! is the only field that may vary between runs.

use std::time::Instant;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::entropy::pair_entropy;
use crate::hilbert::{
    max_entry_diff, span_dimension, transition_probability, PureState, C64, DEFAULT_SPAN_TOL,
};
use crate::measures::{
    bloch_state, cap_mixture_analytic, cap_mixture_montecarlo, cap_mixture_quadrature,
    cap_quantized_measure, counting_measure, pair_measure, product_set, quantized_measure,
    solid_angle_measure, CapMethod, SphericalCap, StateSet,
};
use crate::random::{
    apply_unitary, random_orthonormal_basis, random_pure_state, random_state_set, random_unitary,
    rng_from_seed,
};
use crate::{Error, Result};

/// Seed used by the command-line tool when none is given; published so
/// shipped tables are bit-reproducible.
pub const DEFAULT_SEED: u64 = 42;

/// One table cell: a number, or text for symbolic entries such as the
/// infinite counting measure of a continuous region ("inf").
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CellValue {
    Number(f64),
    Text(String),
}

impl CellValue {
    pub fn num(x: f64) -> Self {
        CellValue::Number(x)
    }

    pub fn text(s: impl Into<String>) -> Self {
        CellValue::Text(s.into())
    }
}

impl std::fmt::Display for CellValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CellValue::Number(x) => write!(f, "{x}"),
            CellValue::Text(s) => write!(f, "{s}"),
        }
    }
}

/// A single verified claim: what was observed, what was expected, and
/// at which tolerance. Failed checks carry the offending input
/// serialized for replay.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub description: String,
    pub passed: bool,
    pub observed: f64,
    pub expected: f64,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    /// `|observed - expected| <= tolerance`.
    pub fn close(description: impl Into<String>, observed: f64, expected: f64, tolerance: f64) -> Self {
        Self {
            description: description.into(),
            passed: (observed - expected).abs() <= tolerance,
            observed,
            expected,
            tolerance,
            witness: None,
        }
    }

    /// `observed <= bound + tolerance`.
    pub fn at_most(description: impl Into<String>, observed: f64, bound: f64, tolerance: f64) -> Self {
        Self {
            description: description.into(),
            passed: observed <= bound + tolerance,
            observed,
            expected: bound,
            tolerance,
            witness: None,
        }
    }

    /// `observed >= bound - tolerance`.
    pub fn at_least(description: impl Into<String>, observed: f64, bound: f64, tolerance: f64) -> Self {
        Self {
            description: description.into(),
            passed: observed >= bound - tolerance,
            observed,
            expected: bound,
            tolerance,
            witness: None,
        }
    }

    fn with_witness(mut self, witness: Option<String>) -> Self {
        if !self.passed {
            self.witness = witness;
        }
        self
    }
}

/// Output of one experiment: a named table plus its checks.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentResult {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<CellValue>>,
    pub checks: Vec<Check>,
    pub seed: u64,
    /// Wall-clock runtime. Informational only: excluded from serialized
    /// output so emitted tables are bit-reproducible across runs.
    #[serde(skip)]
    pub runtime_ms: u64,
}

impl ExperimentResult {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Equality of everything except the measured runtime.
    pub fn same_data(&self, other: &Self) -> bool {
        self.name == other.name
            && self.columns == other.columns
            && self.rows == other.rows
            && self.checks == other.checks
            && self.seed == other.seed
    }
}

/// Serializes a state set in the same JSON shape the CLI ingests, so a
/// failing check can be replayed directly.
fn replay_document(set: &StateSet) -> String {
    let mut out = String::from("{\"dim\":");
    out.push_str(&set.dim().to_string());
    out.push_str(",\"states\":[");
    for (i, s) in set.states().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push('[');
        for (j, a) in s.amplitudes().iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            out.push_str(&format!("[{},{}]", a.re, a.im));
        }
        out.push(']');
    }
    out.push_str("]}");
    out
}

fn z_plus() -> PureState {
    PureState::basis_state(2, 0)
}

fn z_minus() -> PureState {
    PureState::basis_state(2, 1)
}

fn x_plus() -> PureState {
    bloch_state(std::f64::consts::FRAC_PI_2, 0.0)
}

/// Solid angle of the union of two antipodal caps about the z axis,
/// computed by midpoint quadrature of the union's indicator. An
/// independent numeric route to the additivity of the solid-angle
/// measure on disjoint regions.
fn antipodal_cap_union_solid_angle(theta_top: f64, theta_bottom: f64, n: usize) -> f64 {
    let dt = std::f64::consts::PI / n as f64;
    let mut area = 0.0;
    for i in 0..n {
        let theta = (i as f64 + 0.5) * dt;
        let inside = theta <= theta_top || theta >= std::f64::consts::PI - theta_bottom;
        if inside {
            area += theta.sin() * dt;
        }
    }
    2.0 * std::f64::consts::PI * area
}

/// Side-by-side behavior of the three measures: single states, a
/// continuous cap, and disjoint unions. Demonstrates that the counting
/// and solid-angle measures are additive while the quantized one is
/// not, and that each measure gives up exactly one of the three
/// classically expected properties.
pub fn run_three_measures_table() -> ExperimentResult {
    let started = Instant::now();
    let pi = std::f64::consts::PI;

    // Row 1: a single state.
    let point = StateSet::singleton(z_plus());
    let point_mu_d = counting_measure(&point).value();
    let point_mu_q = quantized_measure(&point).expect("singleton measure").value();

    // Row 2: a continuous cap (hemisphere).
    let cap = SphericalCap::about_z(pi / 2.0).expect("valid cap");
    let cap_mu_c = solid_angle_measure(&cap).value();
    let cap_mu_q = cap_quantized_measure(pi / 2.0, CapMethod::Analytic)
        .expect("analytic cap measure")
        .value();

    // Rows 3-4: disjoint union of two finite sets.
    let a = StateSet::singleton(z_plus());
    let b = StateSet::singleton(x_plus());
    let union = a.union(&b).expect("equal dims");
    let union_mu_d = counting_measure(&union).value();
    let union_mu_q = quantized_measure(&union).expect("union measure").value();
    let parts_mu_d = counting_measure(&a).value() + counting_measure(&b).value();
    let parts_mu_q = quantized_measure(&a).expect("part").value()
        + quantized_measure(&b).expect("part").value();

    // Rows 5-6: disjoint union of two caps, solid angle by quadrature.
    let cap_third = SphericalCap::about_z(pi / 3.0).expect("valid cap");
    let omega_each = solid_angle_measure(&cap_third).value();
    let omega_union = antipodal_cap_union_solid_angle(pi / 3.0, pi / 3.0, 8192);

    let columns = vec![
        "region".to_string(),
        "mu_d".to_string(),
        "mu_c".to_string(),
        "mu_q".to_string(),
    ];
    let rows = vec![
        vec![
            CellValue::text("single state |z+>"),
            CellValue::num(point_mu_d),
            CellValue::num(0.0),
            CellValue::num(point_mu_q),
        ],
        vec![
            CellValue::text("cap theta0=pi/2 about +z"),
            CellValue::text("inf"),
            CellValue::num(cap_mu_c),
            CellValue::num(cap_mu_q),
        ],
        vec![
            CellValue::text("union {|z+>} u {|x+>}"),
            CellValue::num(union_mu_d),
            CellValue::num(0.0),
            CellValue::num(union_mu_q),
        ],
        vec![
            CellValue::text("sum of parts {|z+>} + {|x+>}"),
            CellValue::num(parts_mu_d),
            CellValue::num(0.0),
            CellValue::num(parts_mu_q),
        ],
        vec![
            CellValue::text("union of disjoint caps theta0=pi/3 about +z and -z"),
            CellValue::text("inf"),
            CellValue::num(omega_union),
            CellValue::text("n/a"),
        ],
        vec![
            CellValue::text("sum of parts (two caps)"),
            CellValue::text("inf"),
            CellValue::num(2.0 * omega_each),
            CellValue::text("n/a"),
        ],
    ];

    let checks = vec![
        Check::close("single state: counting measure is one", point_mu_d, 1.0, 0.0),
        Check::close("single state: solid-angle measure is zero", 0.0, 0.0, 0.0),
        Check::close(
            "single state: quantized measure is one",
            point_mu_q,
            1.0,
            1e-12,
        ),
        Check::close(
            "cap: solid-angle measure is finite (2 pi)",
            cap_mu_c,
            2.0 * pi,
            1e-12,
        ),
        Check::at_most("cap: solid angle at most 4 pi", cap_mu_c, 4.0 * pi, 0.0),
        Check::at_least("cap: quantized measure at least 1", cap_mu_q, 1.0, 0.0),
        Check::at_most("cap: quantized measure at most 2", cap_mu_q, 2.0, 0.0),
        Check::close(
            "counting measure additive on {|z+>} u {|x+>}",
            union_mu_d,
            parts_mu_d,
            0.0,
        ),
        Check::close(
            "solid-angle measure additive on disjoint caps (quadrature)",
            omega_union,
            2.0 * omega_each,
            1e-2,
        ),
        Check::at_least(
            "quantized measure subadditivity margin on {|z+>} u {|x+>}",
            parts_mu_q - union_mu_q,
            0.4,
            0.0,
        ),
    ];

    ExperimentResult {
        name: "three-measures".to_string(),
        columns,
        rows,
        checks,
        seed: 0,
        runtime_ms: started.elapsed().as_millis() as u64,
    }
}

/// Sweep of the two-state measure along the transition probability:
/// rows (p, S, mu_q) on a uniform grid.
pub fn run_overlap_sweep(steps: usize) -> Result<ExperimentResult> {
    if steps < 2 {
        return Err(Error::OutOfRange {
            what: "steps",
            value: steps as f64,
            lo: 2.0,
            hi: f64::INFINITY,
        });
    }
    let started = Instant::now();
    let mut rows = Vec::with_capacity(steps);
    let mut mus = Vec::with_capacity(steps);
    for i in 0..steps {
        let p = i as f64 / (steps - 1) as f64;
        let s = pair_entropy(p)?.bits();
        let mu = pair_measure(p)?.value();
        mus.push(mu);
        rows.push(vec![
            CellValue::num(p),
            CellValue::num(s),
            CellValue::num(mu),
        ]);
    }
    let min_drop = mus
        .windows(2)
        .map(|w| w[0] - w[1])
        .fold(f64::INFINITY, f64::min);

    let mut strict = Check::at_least(
        "mu strictly decreasing along the grid (min consecutive drop)",
        min_drop,
        0.0,
        0.0,
    );
    strict.passed = min_drop > 0.0;

    let checks = vec![
        Check::close("p=0: entropy is 1 bit", pair_entropy(0.0)?.bits(), 1.0, 0.0),
        Check::close("p=0: measure is 2", pair_measure(0.0)?.value(), 2.0, 0.0),
        Check::close("p=1: entropy is 0", pair_entropy(1.0)?.bits(), 0.0, 0.0),
        Check::close("p=1: measure is 1", pair_measure(1.0)?.value(), 1.0, 0.0),
        Check::close(
            "p=0.25: measure matches eigenvalue oracle 2^H(1/4)",
            pair_measure(0.25)?.value(),
            1.754_765_350_603_323_3,
            1e-9,
        ),
        strict,
    ];

    Ok(ExperimentResult {
        name: "overlap-sweep".to_string(),
        columns: vec!["p".to_string(), "S_bits".to_string(), "mu_q".to_string()],
        rows,
        checks,
        seed: 0,
        runtime_ms: started.elapsed().as_millis() as u64,
    })
}

/// The non-monotonicity witness: adding |x+> to the orthogonal pair
/// {|z+>, |z->} makes the set bigger but the measure smaller.
pub fn run_nonmonotonicity_demo() -> ExperimentResult {
    let started = Instant::now();
    let pair = StateSet::new(vec![z_plus(), z_minus()]).expect("valid pair");
    let triple = StateSet::new(vec![z_plus(), z_minus(), x_plus()]).expect("valid triple");
    let mu_pair = quantized_measure(&pair).expect("pair measure").value();
    let mu_triple = quantized_measure(&triple).expect("triple measure").value();

    let rows = vec![
        vec![
            CellValue::text("{|z+>, |z->}"),
            CellValue::num(2.0),
            CellValue::num(mu_pair),
        ],
        vec![
            CellValue::text("{|z+>, |z->, |x+>}"),
            CellValue::num(3.0),
            CellValue::num(mu_triple),
        ],
    ];
    let checks = vec![
        Check::close("orthogonal pair: mu_q = 2", mu_pair, 2.0, 1e-9),
        Check::close(
            "triple: mu_q = 3 * 2^(-2/3) from eigenvalues (2/3, 1/3)",
            mu_triple,
            1.889_881_574_842_309_7,
            1e-4,
        ),
        Check::at_least(
            "superset has smaller measure (margin)",
            mu_pair - mu_triple,
            0.1,
            0.0,
        ),
    ];

    ExperimentResult {
        name: "nonmonotonicity".to_string(),
        columns: vec!["set".to_string(), "cardinality".to_string(), "mu_q".to_string()],
        rows,
        checks,
        seed: 0,
        runtime_ms: started.elapsed().as_millis() as u64,
    }
}

/// Additivity within a single measurement context: subsets of a random
/// orthonormal basis count exactly their cardinality, and any
/// perturbation away from orthogonality strictly lowers the measure.
pub fn run_context_additivity(dim: usize, trials: usize, seed: u64) -> Result<ExperimentResult> {
    if dim < 2 {
        return Err(Error::OutOfRange {
            what: "dim",
            value: dim as f64,
            lo: 2.0,
            hi: f64::INFINITY,
        });
    }
    if trials < 1 {
        return Err(Error::OutOfRange {
            what: "trials",
            value: trials as f64,
            lo: 1.0,
            hi: f64::INFINITY,
        });
    }
    let started = Instant::now();
    let mut rng = rng_from_seed(seed);
    let mut rows = Vec::new();
    let mut max_dev: f64 = 0.0;
    let mut max_perturbed_excess = f64::NEG_INFINITY;

    for trial in 0..trials {
        let basis = random_orthonormal_basis(dim, &mut rng);
        for k in 1..=dim {
            let subset = StateSet::new(basis[..k].to_vec()).expect("basis subset is valid");
            let mu = quantized_measure(&subset)?.value();
            let dev = (mu - k as f64).abs();
            max_dev = max_dev.max(dev);
            rows.push(vec![
                CellValue::num(trial as f64),
                CellValue::num(k as f64),
                CellValue::num(mu),
                CellValue::num(dev),
            ]);
        }
        // Rotate the first basis vector toward the second by 0.1 rad;
        // the resulting set is no longer orthogonal and must count
        // strictly below k.
        let eps = 0.1_f64;
        let rotated: Vec<C64> = basis[0]
            .amplitudes()
            .iter()
            .zip(basis[1].amplitudes())
            .map(|(a, b)| a * eps.cos() + b * eps.sin())
            .collect();
        let rotated = PureState::normalized(rotated).expect("rotation preserves norm");
        for k in 2..=dim {
            let mut members = vec![rotated.clone()];
            members.extend(basis[1..k].iter().cloned());
            let perturbed = StateSet::new(members).expect("perturbed set is valid");
            let mu = quantized_measure(&perturbed)?.value();
            max_perturbed_excess = max_perturbed_excess.max(mu - k as f64);
        }
    }

    let checks = vec![
        Check::close(
            "orthonormal subsets: max |mu_q - k| over all trials and k",
            max_dev,
            0.0,
            1e-8,
        ),
        Check::at_most(
            "perturbed (non-orthogonal) sets: mu_q stays strictly below k",
            max_perturbed_excess,
            -1e-6,
            0.0,
        ),
    ];

    Ok(ExperimentResult {
        name: "context-additivity".to_string(),
        columns: vec![
            "trial".to_string(),
            "k".to_string(),
            "mu_q".to_string(),
            "abs_dev".to_string(),
        ],
        rows,
        checks,
        seed,
        runtime_ms: started.elapsed().as_millis() as u64,
    })
}

/// Randomized verification of every bound, additivity, invariance, and
/// convergence property of the measures, in one report.
pub fn run_property_suite(trials: usize, seed: u64) -> Result<ExperimentResult> {
    if trials < 1 {
        return Err(Error::OutOfRange {
            what: "trials",
            value: trials as f64,
            lo: 1.0,
            hi: f64::INFINITY,
        });
    }
    let started = Instant::now();
    let pi = std::f64::consts::PI;
    let mut rng = rng_from_seed(seed);
    let mut checks: Vec<Check> = Vec::new();

    // Bounds: 1 <= mu_q <= dim(span U) <= |U|.
    {
        let mut worst_lower: f64 = f64::NEG_INFINITY; // 1 - mu
        let mut worst_span: f64 = f64::NEG_INFINITY; // mu - span
        let mut worst_card: f64 = f64::NEG_INFINITY; // span - |U|
        let mut witness: Option<String> = None;
        for _ in 0..trials {
            let dim = rng.gen_range(2..=6);
            let size = rng.gen_range(1..=10);
            let set = random_state_set(dim, size, &mut rng);
            let mu = quantized_measure(&set)?.value();
            let span = span_dimension(set.states(), DEFAULT_SPAN_TOL)? as f64;
            let n = set.len() as f64;
            let local = (1.0 - mu).max(mu - span).max(span - n);
            if local > worst_lower.max(worst_span).max(worst_card) {
                witness = Some(replay_document(&set));
            }
            worst_lower = worst_lower.max(1.0 - mu);
            worst_span = worst_span.max(mu - span);
            worst_card = worst_card.max(span - n);
        }
        checks.push(
            Check::at_most("bounds: mu_q at least 1 (max of 1 - mu_q)", worst_lower, 0.0, 1e-9)
                .with_witness(witness.clone()),
        );
        checks.push(
            Check::at_most(
                "bounds: mu_q at most span dimension (max of mu_q - span)",
                worst_span,
                0.0,
                1e-9,
            )
            .with_witness(witness.clone()),
        );
        checks.push(
            Check::at_most(
                "bounds: span dimension at most cardinality (max of span - |U|)",
                worst_card,
                0.0,
                0.0,
            )
            .with_witness(witness),
        );
    }

    // Additivity on orthogonal sets.
    {
        let mut max_dev: f64 = 0.0;
        let mut witness: Option<String> = None;
        for _ in 0..trials {
            let dim = rng.gen_range(2..=6);
            let k = rng.gen_range(1..=dim);
            let basis = random_orthonormal_basis(dim, &mut rng);
            let subset = StateSet::new(basis[..k].to_vec()).expect("basis subset is valid");
            let mu = quantized_measure(&subset)?.value();
            let dev = (mu - k as f64).abs();
            if dev > max_dev {
                witness = Some(replay_document(&subset));
            }
            max_dev = max_dev.max(dev);
        }
        checks.push(
            Check::close("orthogonal sets: max |mu_q - |U||", max_dev, 0.0, 1e-8)
                .with_witness(witness),
        );
    }

    // Strictly below cardinality whenever some pair overlaps.
    {
        let mut max_mu_minus_n = f64::NEG_INFINITY;
        let mut witness: Option<String> = None;
        for _ in 0..trials {
            let dim = rng.gen_range(2..=6);
            let size = rng.gen_range(2..=6);
            let set = loop {
                let candidate = random_state_set(dim, size, &mut rng);
                let states = candidate.states();
                let mut max_overlap: f64 = 0.0;
                for i in 0..states.len() {
                    for j in (i + 1)..states.len() {
                        max_overlap = max_overlap
                            .max(transition_probability(&states[i], &states[j]).expect("same dim"));
                    }
                }
                if max_overlap >= 0.01 {
                    break candidate;
                }
            };
            let mu = quantized_measure(&set)?.value();
            let excess = mu - set.len() as f64;
            if excess > max_mu_minus_n {
                witness = Some(replay_document(&set));
            }
            max_mu_minus_n = max_mu_minus_n.max(excess);
        }
        checks.push(
            Check::at_most(
                "overlapping sets: mu_q at most |U| - 1e-6 (max of mu_q - |U|)",
                max_mu_minus_n,
                -1e-6,
                0.0,
            )
            .with_witness(witness),
        );
    }

    // Pair subadditivity, with strictness away from orthogonality.
    {
        let mut max_excess = f64::NEG_INFINITY;
        let mut max_overlapping_mu = f64::NEG_INFINITY;
        let mut witness: Option<String> = None;
        for _ in 0..trials {
            let a = random_pure_state(2, &mut rng);
            let b = random_pure_state(2, &mut rng);
            let set = StateSet::new(vec![a.clone(), b.clone()]).expect("pair is valid");
            if set.len() < 2 {
                continue; // same ray drawn twice; probability zero
            }
            let mu = quantized_measure(&set)?.value();
            if mu - 2.0 > max_excess {
                witness = Some(replay_document(&set));
            }
            max_excess = max_excess.max(mu - 2.0);
            if transition_probability(&a, &b).expect("same dim") >= 0.01 {
                max_overlapping_mu = max_overlapping_mu.max(mu);
            }
        }
        checks.push(
            Check::at_most(
                "pair subadditivity: max of mu_q({psi,phi}) - 2",
                max_excess,
                0.0,
                1e-9,
            )
            .with_witness(witness),
        );
        checks.push(Check::at_most(
            "pair strictness: mu_q below 2 - 1e-6 when overlap >= 0.01",
            max_overlapping_mu,
            2.0 - 1e-6,
            0.0,
        ));
    }

    // Disjoint-union subadditivity.
    {
        let mut max_excess = f64::NEG_INFINITY;
        let mut witness: Option<String> = None;
        for _ in 0..trials {
            let dim = rng.gen_range(2..=6);
            let a = random_state_set(dim, rng.gen_range(1..=4), &mut rng);
            let b = random_state_set(dim, rng.gen_range(1..=4), &mut rng);
            let union = a.union(&b).expect("equal dims");
            let mu_union = quantized_measure(&union)?.value();
            let mu_parts = quantized_measure(&a)?.value() + quantized_measure(&b)?.value();
            let excess = mu_union - mu_parts;
            if excess > max_excess {
                witness = Some(replay_document(&union));
            }
            max_excess = max_excess.max(excess);
        }
        checks.push(
            Check::at_most(
                "disjoint union subadditivity: max of mu_q(A u B) - mu_q(A) - mu_q(B)",
                max_excess,
                0.0,
                1e-9,
            )
            .with_witness(witness),
        );
    }

    // The fixed non-monotonicity witness.
    {
        let pair = StateSet::new(vec![z_plus(), z_minus()]).expect("valid pair");
        let triple = StateSet::new(vec![z_plus(), z_minus(), x_plus()]).expect("valid triple");
        let margin =
            quantized_measure(&pair)?.value() - quantized_measure(&triple)?.value();
        checks.push(Check::at_least(
            "non-monotonicity: mu_q({z+,z-}) - mu_q({z+,z-,x+})",
            margin,
            0.1,
            0.0,
        ));
    }

    // Unitary invariance.
    {
        let mut max_dev: f64 = 0.0;
        let mut witness: Option<String> = None;
        for _ in 0..trials {
            let dim = rng.gen_range(2..=6);
            let set = random_state_set(dim, rng.gen_range(1..=6), &mut rng);
            let u = random_unitary(dim, &mut rng);
            let rotated = apply_unitary(&u, &set);
            let dev =
                (quantized_measure(&rotated)?.value() - quantized_measure(&set)?.value()).abs();
            if dev > max_dev {
                witness = Some(replay_document(&set));
            }
            max_dev = max_dev.max(dev);
        }
        checks.push(
            Check::close("unitary invariance: max |mu_q(U set) - mu_q(set)|", max_dev, 0.0, 1e-9)
                .with_witness(witness),
        );
    }

    // Multiplicativity over tensor products.
    {
        let product_trials = (trials / 5).max(1);
        let mut max_dev: f64 = 0.0;
        let mut witness: Option<String> = None;
        for _ in 0..product_trials {
            let da = rng.gen_range(2..=4);
            let db = rng.gen_range(2..=4);
            let a = random_state_set(da, rng.gen_range(1..=4), &mut rng);
            let b = random_state_set(db, rng.gen_range(1..=4), &mut rng);
            let prod = product_set(&a, &b);
            let dev = (quantized_measure(&prod)?.value()
                - quantized_measure(&a)?.value() * quantized_measure(&b)?.value())
            .abs();
            if dev > max_dev {
                witness = Some(replay_document(&prod));
            }
            max_dev = max_dev.max(dev);
        }
        checks.push(
            Check::close(
                "multiplicativity: max |mu_q(A x B) - mu_q(A) mu_q(B)|",
                max_dev,
                0.0,
                1e-8,
            )
            .with_witness(witness),
        );
    }

    // Path equivalence: closed form vs eigendecomposition.
    {
        let mut max_dev: f64 = 0.0;
        let mut witness: Option<String> = None;
        for _ in 0..trials {
            let a = random_pure_state(2, &mut rng);
            let b = random_pure_state(2, &mut rng);
            let set = StateSet::new(vec![a.clone(), b.clone()]).expect("pair is valid");
            if set.len() < 2 {
                continue;
            }
            let p = transition_probability(&a, &b).expect("same dim");
            let dev = (pair_measure(p)?.value() - quantized_measure(&set)?.value()).abs();
            if dev > max_dev {
                witness = Some(replay_document(&set));
            }
            max_dev = max_dev.max(dev);
        }
        checks.push(
            Check::close(
                "path equivalence: max |pair_measure(p) - mu_q({psi,phi})|",
                max_dev,
                0.0,
                1e-9,
            )
            .with_witness(witness),
        );
    }

    // Cap convergence: quadrature and Monte Carlo against the closed form.
    {
        let mut max_quad_dev: f64 = 0.0;
        for theta0 in [pi / 6.0, pi / 3.0, pi / 2.0, 2.0 * pi / 3.0, pi] {
            let quad = cap_mixture_quadrature(theta0, 512, 512)?;
            let exact = cap_mixture_analytic(theta0)?;
            max_quad_dev = max_quad_dev.max(max_entry_diff(quad.entries(), exact.entries()));
        }
        checks.push(Check::at_most(
            "cap quadrature 512x512: max entry deviation from closed form",
            max_quad_dev,
            1e-6,
            0.0,
        ));

        let n_samples = 1_000_000;
        let bound = 3.0 * 0.5 / (n_samples as f64).sqrt();
        let mut max_mc_dev: f64 = 0.0;
        for (k, theta0) in [pi / 2.0, pi].into_iter().enumerate() {
            let mc = cap_mixture_montecarlo(theta0, n_samples, seed.wrapping_add(k as u64))?;
            let exact = cap_mixture_analytic(theta0)?;
            max_mc_dev = max_mc_dev.max(max_entry_diff(mc.entries(), exact.entries()));
        }
        checks.push(Check::at_most(
            "cap Monte Carlo 1e6: max entry deviation from closed form",
            max_mc_dev,
            bound,
            0.0,
        ));
    }

    // One summary row per check so the table mirrors the report.
    let rows = checks
        .iter()
        .map(|c| {
            vec![
                CellValue::text(c.description.clone()),
                CellValue::text(if c.passed { "pass" } else { "fail" }),
                CellValue::num(c.observed),
                CellValue::num(c.expected),
                CellValue::num(c.tolerance),
            ]
        })
        .collect();

    Ok(ExperimentResult {
        name: "property-suite".to_string(),
        columns: vec![
            "check".to_string(),
            "status".to_string(),
            "observed".to_string(),
            "expected".to_string(),
            "tolerance".to_string(),
        ],
        rows,
        checks,
        seed,
        runtime_ms: started.elapsed().as_millis() as u64,
    })
}
