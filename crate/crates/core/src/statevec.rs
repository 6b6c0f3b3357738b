//! Ideal (noiseless) statevector simulation.
//!
//! A state over `n` qubits holds `d = 2^n` complex amplitudes. Basis index
//! convention, fixed across the whole crate: **qubit 0 is the most
//! significant bit** of the basis index, so |10⟩ (qubit 0 set) is index 2 on
//! two qubits. Gates are applied with stride-based amplitude updates, O(d)
//! per gate, without ever materializing a d x d matrix.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::Rng;

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::gate::Gate;

/// Largest supported register; 2^20 amplitudes is the resource guard.
pub const MAX_QUBITS: usize = 20;

/// Pure state of an `n`-qubit register.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// The all-zero computational basis state |0...0⟩.
    pub fn zero_state(n_qubits: usize) -> Result<StateVector> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::config(format!(
                "qubit count {n_qubits} outside supported range 1..={MAX_QUBITS}"
            )));
        }
        let mut amps = vec![Complex64::ZERO; 1 << n_qubits];
        amps[0] = Complex64::ONE;
        Ok(StateVector { n_qubits, amps })
    }

    /// Build a state from raw amplitudes (length must be a power of two,
    /// norm must already be 1 within 1e-8).
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<StateVector> {
        let d = amps.len();
        if d < 2 || !d.is_power_of_two() {
            return Err(Error::usage(format!(
                "amplitude vector length {d} is not a power of two >= 2"
            )));
        }
        let n_qubits = d.trailing_zeros() as usize;
        if n_qubits > MAX_QUBITS {
            return Err(Error::config(format!(
                "qubit count {n_qubits} outside supported range 1..={MAX_QUBITS}"
            )));
        }
        let state = StateVector { n_qubits, amps };
        let norm = state.norm();
        if (norm - 1.0).abs() > 1e-8 {
            return Err(Error::usage(format!("state norm {norm} is not 1")));
        }
        Ok(state)
    }

    /// Run `circuit` on |0...0⟩ and return the resulting state.
    pub fn from_circuit(circuit: &Circuit) -> Result<StateVector> {
        let mut state = StateVector::zero_state(circuit.n_qubits())?;
        state.run_circuit(circuit)?;
        Ok(state)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitude(&self, basis_index: usize) -> Complex64 {
        self.amps[basis_index]
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Measurement distribution |amplitude|^2 over all basis states.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    /// Probability of measuring every qubit in |0⟩, i.e. |amplitude(0)|^2.
    pub fn prob_all_zero(&self) -> f64 {
        self.amps[0].norm_sqr()
    }

    /// Apply one gate in place.
    pub fn apply_gate(&mut self, gate: &Gate) -> Result<()> {
        check_support(gate, self.n_qubits)?;
        apply_gate_unchecked(&mut self.amps, self.n_qubits, gate);
        Ok(())
    }

    /// Apply all gates of `circuit` in list order.
    pub fn run_circuit(&mut self, circuit: &Circuit) -> Result<()> {
        if circuit.n_qubits() != self.n_qubits {
            return Err(Error::usage(format!(
                "circuit acts on {} qubits but state has {}",
                circuit.n_qubits(),
                self.n_qubits
            )));
        }
        for gate in circuit.gates() {
            apply_gate_unchecked(&mut self.amps, self.n_qubits, gate);
        }
        Ok(())
    }
}

pub(crate) fn check_support(gate: &Gate, n_qubits: usize) -> Result<()> {
    match gate.support() {
        crate::gate::Support::One(q) => {
            if q >= n_qubits {
                return Err(Error::usage(format!(
                    "gate {gate:?} addresses qubit {q} on a {n_qubits}-qubit register"
                )));
            }
        }
        crate::gate::Support::Two(a, b) => {
            if a >= n_qubits || b >= n_qubits {
                return Err(Error::usage(format!(
                    "gate {gate:?} addresses a qubit outside a {n_qubits}-qubit register"
                )));
            }
            if a == b {
                return Err(Error::usage(format!(
                    "two-qubit gate {gate:?} has coincident qubits"
                )));
            }
        }
    }
    if let Some(angle) = gate.angle() {
        if !angle.is_finite() {
            return Err(Error::usage(format!("gate {gate:?} has non-finite angle")));
        }
    }
    Ok(())
}

/// Amplitude stride of `qubit` in an `n_qubits` register (qubit 0 = MSB).
#[inline]
pub(crate) fn stride_of(qubit: usize, n_qubits: usize) -> usize {
    1 << (n_qubits - 1 - qubit)
}

/// Apply a 2x2 matrix across amplitude pairs separated by `stride`.
///
/// Works on any power-of-two-length slice, which lets the density-matrix
/// simulator reuse the same kernel on its d^2-length storage.
pub(crate) fn apply_1q_kernel(amps: &mut [Complex64], stride: usize, m: &[[Complex64; 2]; 2]) {
    debug_assert!(stride > 0 && amps.len() % (2 * stride) == 0);
    let mut base = 0;
    while base < amps.len() {
        for i in base..base + stride {
            let a = amps[i];
            let b = amps[i + stride];
            amps[i] = m[0][0] * a + m[0][1] * b;
            amps[i + stride] = m[1][0] * a + m[1][1] * b;
        }
        base += 2 * stride;
    }
}

/// CNOT kernel: swap amplitudes where the control bit is set and the target
/// bit differs.
pub(crate) fn apply_cnot_kernel(amps: &mut [Complex64], control_stride: usize, target_stride: usize) {
    for idx in 0..amps.len() {
        if idx & control_stride != 0 && idx & target_stride == 0 {
            amps.swap(idx, idx | target_stride);
        }
    }
}

/// SWAP kernel: exchange the two qubits' bit values.
pub(crate) fn apply_swap_kernel(amps: &mut [Complex64], stride_a: usize, stride_b: usize) {
    for idx in 0..amps.len() {
        if idx & stride_a != 0 && idx & stride_b == 0 {
            amps.swap(idx, idx ^ stride_a ^ stride_b);
        }
    }
}

/// Gate dispatch over a raw amplitude slice; support must be pre-validated.
pub(crate) fn apply_gate_unchecked(amps: &mut [Complex64], n_qubits: usize, gate: &Gate) {
    match *gate {
        Gate::Cnot { control, target } => {
            apply_cnot_kernel(amps, stride_of(control, n_qubits), stride_of(target, n_qubits));
        }
        Gate::Swap(a, b) => {
            apply_swap_kernel(amps, stride_of(a, n_qubits), stride_of(b, n_qubits));
        }
        ref g => {
            let q = match g.support() {
                crate::gate::Support::One(q) => q,
                crate::gate::Support::Two(..) => unreachable!(),
            };
            apply_1q_kernel(amps, stride_of(q, n_qubits), &g.matrix_1q());
        }
    }
}

/// Draw `n_shots` multinomial samples from `probabilities` and tally them by
/// basis index. Deterministic for a fixed RNG state; entries with zero count
/// are omitted.
pub fn sample_counts(
    probabilities: &[f64],
    n_shots: u64,
    rng: &mut impl Rng,
) -> Result<BTreeMap<usize, u64>> {
    if n_shots == 0 {
        return Err(Error::usage("n_shots must be positive".to_string()));
    }
    if probabilities.iter().any(|p| !p.is_finite() || *p < 0.0) {
        return Err(Error::usage(
            "probability vector has negative or non-finite entries".to_string(),
        ));
    }
    let total: f64 = probabilities.iter().sum();
    if (total - 1.0).abs() > 1e-9 {
        return Err(Error::usage(format!(
            "probability vector sums to {total}, not 1"
        )));
    }
    let dist = WeightedIndex::new(probabilities)
        .map_err(|e| Error::usage(format!("invalid distribution: {e}")))?;
    let mut counts = BTreeMap::new();
    for _ in 0..n_shots {
        *counts.entry(dist.sample(rng)).or_insert(0) += 1;
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gate::GateKind;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    #[test]
    fn zero_state_is_basis_zero() {
        for n in [1usize, 2, 5] {
            let s = StateVector::zero_state(n).unwrap();
            assert_eq!(s.dim(), 1 << n);
            assert_eq!(s.amplitude(0), Complex64::ONE);
            assert!(s.amplitudes()[1..].iter().all(|a| *a == Complex64::ZERO));
        }
    }

    #[test]
    fn zero_state_guards_qubit_count() {
        assert!(StateVector::zero_state(0).is_err());
        assert!(StateVector::zero_state(MAX_QUBITS + 1).is_err());
    }

    #[test]
    fn hadamard_on_zero() {
        let mut s = StateVector::zero_state(1).unwrap();
        s.apply_gate(&Gate::H(0)).unwrap();
        assert!((s.amplitude(0).re - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((s.amplitude(1).re - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((s.prob_all_zero() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn ry_pi_flips_zero_to_one() {
        let mut s = StateVector::zero_state(1).unwrap();
        s.apply_gate(&Gate::rotation(GateKind::Ry, 0, PI)).unwrap();
        assert!(s.amplitude(0).norm() < 1e-15);
        assert!((s.amplitude(1) - Complex64::ONE).norm() < 1e-15);
    }

    #[test]
    fn ry_third_pi_all_zero_probability() {
        let mut s = StateVector::zero_state(1).unwrap();
        s.apply_gate(&Gate::rotation(GateKind::Ry, 0, PI / 3.0)).unwrap();
        // cos^2(pi/6) = 3/4
        assert!((s.prob_all_zero() - 0.75).abs() < 1e-12);
    }

    #[test]
    fn cnot_entangles_msb_control() {
        // (|00> + |10>)/sqrt(2); qubit 0 is the MSB, so |10> is index 2.
        let mut s = StateVector::zero_state(2).unwrap();
        s.apply_gate(&Gate::H(0)).unwrap();
        s.apply_gate(&Gate::Cnot {
            control: 0,
            target: 1,
        })
        .unwrap();
        assert!((s.amplitude(0).re - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!(s.amplitude(1).norm() < 1e-15);
        assert!(s.amplitude(2).norm() < 1e-15);
        assert!((s.amplitude(3).re - FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn out_of_range_qubit_is_usage_error() {
        let mut s = StateVector::zero_state(2).unwrap();
        let err = s.apply_gate(&Gate::H(2)).unwrap_err();
        assert!(matches!(err, Error::Usage(_)));
        let err = s
            .apply_gate(&Gate::Cnot {
                control: 1,
                target: 1,
            })
            .unwrap_err();
        assert!(matches!(err, Error::Usage(_)));
    }

    #[test]
    fn double_hadamard_is_identity() {
        let circuit = Circuit::from_gates(1, "hh", vec![Gate::H(0), Gate::H(0)]).unwrap();
        let s = StateVector::from_circuit(&circuit).unwrap();
        assert!((s.amplitude(0) - Complex64::ONE).norm() < 1e-12);
    }

    #[test]
    fn empty_circuit_is_identity() {
        let circuit = Circuit::new(3, "empty");
        let mut s = StateVector::zero_state(3).unwrap();
        let before = s.clone();
        s.run_circuit(&circuit).unwrap();
        assert_eq!(s, before);
    }

    #[test]
    fn gate_then_adjoint_restores_state_for_every_kind() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let circuit = crate::circuit::random_circuit(3, 40, &mut rng).unwrap();
        let mut state = StateVector::from_circuit(&circuit).unwrap();
        let gates = [
            Gate::H(0),
            Gate::X(1),
            Gate::Y(2),
            Gate::Z(0),
            Gate::rotation(GateKind::Rx, 1, 0.9),
            Gate::rotation(GateKind::Ry, 2, -0.4),
            Gate::rotation(GateKind::Rz, 0, 1.7),
            Gate::Cnot {
                control: 2,
                target: 0,
            },
            Gate::Swap(0, 1),
        ];
        for g in gates {
            let before = state.clone();
            state.apply_gate(&g).unwrap();
            state.apply_gate(&g.adjoint()).unwrap();
            for i in 0..state.dim() {
                assert!(
                    (state.amplitude(i) - before.amplitude(i)).norm() < 1e-10,
                    "{g:?}"
                );
            }
        }
    }

    #[test]
    fn norm_preserved_over_deep_circuit() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let circuit = crate::circuit::random_circuit(6, 10_000, &mut rng).unwrap();
        let s = StateVector::from_circuit(&circuit).unwrap();
        assert!((s.norm() - 1.0).abs() < 1e-8);
        let p0 = s.prob_all_zero();
        assert!((0.0..=1.0 + 1e-12).contains(&p0));
    }

    #[test]
    fn sample_counts_degenerate_distribution() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let counts = sample_counts(&[1.0, 0.0], 100, &mut rng).unwrap();
        assert_eq!(counts.get(&0), Some(&100));
        assert_eq!(counts.len(), 1);
    }

    #[test]
    fn sample_counts_concentrates() {
        let mut rng = ChaCha8Rng::seed_from_u64(123);
        let counts = sample_counts(&[0.5, 0.5], 8192, &mut rng).unwrap();
        let frac = *counts.get(&0).unwrap() as f64 / 8192.0;
        // binomial sd is sqrt(0.25/8192) ~ 0.0055; 0.02 is ~3.6 sigma
        assert!((frac - 0.5).abs() < 0.02);
        let total: u64 = counts.values().sum();
        assert_eq!(total, 8192);
    }

    #[test]
    fn sample_counts_deterministic_for_fixed_seed() {
        let probs = [0.2, 0.3, 0.1, 0.4];
        let a = sample_counts(&probs, 5000, &mut ChaCha8Rng::seed_from_u64(42)).unwrap();
        let b = sample_counts(&probs, 5000, &mut ChaCha8Rng::seed_from_u64(42)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn sample_counts_rejects_bad_distributions() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(sample_counts(&[0.5, -0.5, 1.0], 10, &mut rng).is_err());
        assert!(sample_counts(&[0.5, 0.4], 10, &mut rng).is_err());
        assert!(sample_counts(&[0.5, 0.5], 0, &mut rng).is_err());
    }
}
