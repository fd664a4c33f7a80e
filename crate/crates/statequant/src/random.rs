//! Seeded random generators for states, bases, and unitaries.
//!
//! Everything here is deterministic given a seed: experiments and tests
//! derive all randomness from a `ChaCha8Rng` so results are reproducible
//! bit-for-bit.

use nalgebra::DMatrix;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::hilbert::{DensityMatrix, PureState, C64};
use crate::measures::StateSet;

/// A seeded, splittable generator (stream 0).
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn complex_gaussian<R: Rng>(rng: &mut R) -> C64 {
    C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// A random pure state: a vector of standard complex Gaussians,
/// normalized. This draws uniformly from the unit sphere of rays.
pub fn random_pure_state<R: Rng>(dim: usize, rng: &mut R) -> PureState {
    loop {
        let v: Vec<C64> = (0..dim).map(|_| complex_gaussian(rng)).collect();
        if let Ok(s) = PureState::normalized(v) {
            return s;
        }
        // All-zero draw has probability zero; retry regardless.
    }
}

/// A random density matrix built as the uniform mixture of
/// `mixture_size` random pure states, valid by construction.
pub fn random_density_matrix<R: Rng>(
    dim: usize,
    mixture_size: usize,
    rng: &mut R,
) -> DensityMatrix {
    assert!(mixture_size >= 1);
    let weight = C64::new(1.0 / mixture_size as f64, 0.0);
    let mut m = DMatrix::from_element(dim, dim, C64::new(0.0, 0.0));
    for _ in 0..mixture_size {
        let psi = random_pure_state(dim, rng);
        m += (psi.vector() * psi.vector().adjoint()) * weight;
    }
    let trace = m.trace().re;
    DensityMatrix::new(m / C64::new(trace, 0.0))
        .expect("uniform mixture of pure states is a valid density matrix")
}

/// A random unitary, built by orthonormalizing (QR) a matrix of standard
/// complex Gaussians.
pub fn random_unitary<R: Rng>(dim: usize, rng: &mut R) -> DMatrix<C64> {
    let m = DMatrix::from_fn(dim, dim, |_, _| complex_gaussian(rng));
    m.qr().q()
}

/// A random orthonormal basis: the columns of a random unitary.
pub fn random_orthonormal_basis<R: Rng>(dim: usize, rng: &mut R) -> Vec<PureState> {
    let u = random_unitary(dim, rng);
    (0..dim)
        .map(|j| {
            let col: Vec<C64> = u.column(j).iter().copied().collect();
            PureState::normalized(col).expect("unitary columns are nonzero")
        })
        .collect()
}

/// A random state set of the requested size (sizes are preserved:
/// random rays never collide at the dedup tolerance).
pub fn random_state_set<R: Rng>(dim: usize, size: usize, rng: &mut R) -> StateSet {
    let states: Vec<PureState> = (0..size).map(|_| random_pure_state(dim, rng)).collect();
    StateSet::new(states).expect("random draws form a valid state set")
}

/// Applies a unitary to every member of a set.
pub fn apply_unitary(u: &DMatrix<C64>, set: &StateSet) -> StateSet {
    let states: Vec<PureState> = set
        .states()
        .iter()
        .map(|s| {
            let v = u * s.vector();
            PureState::normalized(v.iter().copied().collect())
                .expect("unitary image of a unit vector is a unit vector")
        })
        .collect();
    StateSet::new(states).expect("unitary image of a valid set is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::transition_probability;

    #[test]
    fn random_state_is_normalized() {
        let mut rng = rng_from_seed(1);
        for dim in [2, 3, 5, 8] {
            let s = random_pure_state(dim, &mut rng);
            let norm_sq: f64 = s.amplitudes().iter().map(|a| a.norm_sqr()).sum();
            assert!((norm_sq - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn random_basis_is_orthonormal() {
        let mut rng = rng_from_seed(2);
        let basis = random_orthonormal_basis(5, &mut rng);
        for i in 0..5 {
            for j in 0..5 {
                let p = transition_probability(&basis[i], &basis[j]).unwrap();
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((p - expect).abs() <= 1e-12, "p[{i}][{j}] = {p}");
            }
        }
    }

    #[test]
    fn same_seed_same_draws() {
        let a = random_pure_state(4, &mut rng_from_seed(99));
        let b = random_pure_state(4, &mut rng_from_seed(99));
        assert_eq!(a.amplitudes(), b.amplitudes());
    }
}
