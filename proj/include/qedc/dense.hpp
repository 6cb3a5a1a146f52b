#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qedc/circuit.hpp"
#include "qedc/code.hpp"
#include "qedc/gate_matrices.hpp"
#include "qedc/pauli.hpp"

namespace qedc {

/*
 * Exact statevector / unitary simulation for small systems.  This module is
 * the independent verification oracle for every symplectic construction and
 * the only home of the genuinely non-Clifford content (analog rotation
 * errors, the resource-state rotation, SWAP-symmetry measurement and
 * resource-state symmetrization).
 *
 * Basis convention: qubit 1 is the most significant bit of the state index,
 * matching the two-qubit gate matrices.
 */

struct StateVector {
    int n = 0;
    Eigen::VectorXcd amps;
};

/* |0...0> on n qubits (n <= 12). */
StateVector zero_state(int n);

/* Computational basis state; bit (n-q) of `bits` is qubit q's value, i.e.
 * qubit 1 is the most significant bit. */
StateVector basis_state(int n, std::uint64_t bits);

/* (|0...0> + |1...1>)/sqrt2. */
StateVector ghz_state(int n);

/* The rotation resource state (e^{i t/2}|0> + e^{-i t/2}|1>)/sqrt2. */
StateVector resource_state(double theta);

double norm_squared(const StateVector& s);
double fidelity(const StateVector& a, const StateVector& b);  // |<a|b>|^2

StateVector tensor(const StateVector& a, const StateVector& b);

/* In-place gate application.  Throws on measurements. */
void apply_gate(StateVector& s, const Gate& g);
void apply_matrix1(StateVector& s, const Mat2& m, int q);
void apply_matrix2(StateVector& s, const Mat4& m, int q1, int q2);
void apply_pauli(StateVector& s, const SignedPauli& p);
void apply_toffoli(StateVector& s, int c1, int c2, int target);

/* The tensor-product initial state declared by the circuit's preparations
 * (undeclared qubits start in |0>). */
StateVector initial_state(const Circuit& c);

/* Apply the circuit's unitary gates and frame Paulis in order; measurements
 * are skipped (use measure_qubit explicitly). */
StateVector run_circuit(const Circuit& c, StateVector s);

/* The circuit's exact unitary, frame Paulis included; requires n <= 10 and
 * no measurement gates. */
Eigen::MatrixXcd unitary_of(const Circuit& c);

/* Embed a unitary on the listed qubits (qubits[0] = most significant local
 * bit) into the full n-qubit space. */
Eigen::MatrixXcd embed_unitary(const Eigen::MatrixXcd& u, const std::vector<int>& qubits,
                               int n);

/* Projective single-qubit measurement in the Z or X basis.  Outcome 0 means
 * +1 (|0> / |+>).  Post-states are normalized when the probability is
 * nonzero, and zero vectors otherwise. */
struct MeasureResult {
    double prob0 = 0;
    double prob1 = 0;
    StateVector post0;
    StateVector post1;
};
MeasureResult measure_qubit(const StateVector& s, int q, char basis);

/* Smallest max-entry deviation |A - e^{i phi} B| over a global phase. */
double phase_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);
bool equal_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                       double tol = 1e-10);

/* The ancilla-pair state |Phi+> or |++> as a 2-qubit vector. */
StateVector ancilla_pair_state(AncillaState label);

/*
 * Gadget oracle: with the recovery applied, the gadget's unitary must map
 * |ancilla-in> (x) |d> to |ancilla-out> (x) U|d> for all four data basis
 * states |d>, where U is the ZZ or XX gate matrix, up to one global phase
 * shared by all columns.
 */
bool verify_gadget(const Gadget& gadget, double tol = 1e-10);

/*
 * Encoding isometry V of the code defined by the given logical pairs: column
 * l (logical bits, logical qubit 1 = most significant) is
 * prod_i Xbar_i^{l_i} |GHZ_n>.  V is 2^n x 2^(n-2) with V^dag V = I.
 */
Eigen::MatrixXcd logical_isometry(int n, const std::vector<LogicalPair>& logicals);

/* The circuit unitary compressed onto the code space: M = V^dag U V, plus
 * the worst-case leakage |U V - V M| (0 when U preserves the code space). */
struct EncodedAction {
    Eigen::MatrixXcd logical;
    double leakage = 0;
};
EncodedAction encoded_action(const Circuit& c, const Eigen::MatrixXcd& isometry);

/*
 * Monte Carlo estimate of the effective dephasing weight of R_Z(theta +
 * delta) with random angle error delta of standard deviation sigma
 * (zero-mean Gaussian by default, uniform over +-sqrt3*sigma otherwise).
 * Averages the rotated density matrix over `samples` draws and fits the
 * Z-error weight; the result approximates sigma^2/4.  Sampling is chunked so
 * a fixed seed reproduces exactly.
 */
double analog_channel_estimate(double theta, double sigma, long long samples,
                               std::uint64_t seed, bool uniform = false);

/*
 * The resource-state rotation: CNOT from the data qubit onto the resource
 * qubit, then a Z measurement of the resource.  Outcome 0 leaves
 * R_Z(-theta)|psi>, outcome 1 leaves R_Z(+theta)|psi>; each has probability
 * 1/2 for any input.
 */
struct RotationBranches {
    double prob0 = 0;   // outcome 0: rotated by -theta
    double prob1 = 0;   // outcome 1: rotated by +theta
    StateVector post0;  // 1-qubit post-states
    StateVector post1;
};
RotationBranches resource_rotation_sim(const StateVector& psi, double theta);

/*
 * SWAP-eigenvalue measurement of a two-qubit state via one ancilla:
 * CNOT(1->2), H(1), Toffoli(1,2->ancilla), H(1), CNOT(1->2), then measure
 * the ancilla in Z.  Outcome 0 projects onto the symmetric (+1) subspace,
 * outcome 1 onto the antisymmetric (-1) state.
 */
struct SwapSymmetry {
    double prob_plus = 0;
    double prob_minus = 0;
    StateVector post_plus;   // 2-qubit post-states
    StateVector post_minus;
};
SwapSymmetry swap_symmetry_measure(const StateVector& pair);

/* Projector onto the completely symmetric subspace of N qubits (rank N+1). */
Eigen::MatrixXcd symmetric_projector(int n_copies);

/* The normalized completely symmetric state with j copies of the orthogonal
 * resource state among n_copies. */
StateVector symmetric_basis_state(int n_copies, int j, double theta);

/*
 * Symmetrization of n_copies independently prepared resource states, each
 * wrong with probability p (< 1/N): projects the preparation mixture onto
 * the completely symmetric subspace and reports the acceptance probability
 * and the post-projection single-copy fidelity (= 1 - p/N + O(p^2)).
 */
struct SymmetrizeResult {
    double acceptance = 0;
    double fidelity = 0;
    int projector_rank = 0;
};
SymmetrizeResult symmetrize(int n_copies, double p, double theta = 0.85);

}  // namespace qedc
