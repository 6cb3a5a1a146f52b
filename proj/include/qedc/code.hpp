#pragma once

#include <vector>

#include "qedc/circuit.hpp"
#include "qedc/gate.hpp"
#include "qedc/pauli.hpp"

namespace qedc {

/*
 * Circuit constructions for the [[n, n-2, 2]] error-detecting code: the code
 * operators themselves, the bare encoded Clifford gates, the weakly
 * fault-tolerant ZZ/XX gadgets with their recovery table, the non-Clifford
 * rotation construction, and the initialization / readout / ancilla
 * measurement circuits.
 *
 * Conventions shared by every constructor here:
 *   - code qubits are 1..n (n even, >= 4); logical qubit j lives on physical
 *     qubit j for j = 1..n-2, and qubits n-1, n are the check qubits;
 *   - the stabilizer generators are X^n and Z^n (all-X and all-Z);
 *   - the generic logical operators are Xbar_j = X_j X_{n-1} and
 *     Zbar_j = Z_j Z_n;
 *   - extra qubits (gadget ancilla pair, rotation ancilla, the
 *     initialization/readout ancilla) are appended after qubit n.
 */

/* Stabilizer generators {X^n, Z^n} of the [[n, n-2, 2]] code. */
std::vector<SignedPauli> qedc_stabilizers(int n);

struct LogicalPair {
    SignedPauli x;  // Xbar_j
    SignedPauli z;  // Zbar_j
};

/* Generic logical operators Xbar_j = X_j X_{n-1}, Zbar_j = Z_j Z_n. */
LogicalPair logical_operator(int j, int n);
std::vector<LogicalPair> logical_operators(int n);

/*
 * The alternative [[4, 2, 2]] logical basis used by the four-qubit special
 * constructions: (Xbar_1, Zbar_1) = (XXII, IZZI) and
 * (Xbar_2, Zbar_2) = (IXXI, ZZII).
 */
std::vector<LogicalPair> logical_operators_422();

/*
 * Bare encoded Clifford gates (no gadget protection, no extra ancillas).
 * Each circuit acts on the n code qubits with data = {1..n-2} and
 * checks = {X^n, Z^n}.
 */

/*
 * Encoded CNOT with control j and target k (j != k, both in 1..n-2).  For
 * n > 4 this is the seven-gate native sequence; it needs no sign
 * corrections.  For n = 4 the special form is a single physical SWAP
 * (CNOT 1->2 swaps qubits 2,3; CNOT 2->1 swaps qubits 1,2).
 */
Circuit encoded_cnot(int j, int k, int n);

/* The seven-gate sequence for any even n >= 4 (used when a uniform
 * construction is needed across n). */
Circuit encoded_cnot_general(int j, int k, int n);

/* Encoded phase gate S on logical j: the single gate ZZ(j, n); exact, no
 * corrections. */
Circuit encoded_phase(int j, int n);

/* Four-qubit special phase gate in the alternative logical basis:
 * S(1) = ZZ(2,3), S(2) = ZZ(1,2). */
Circuit encoded_phase_422(int j);

/*
 * Encoded Hadamard on logical j: ZZ(j,n), XX(j,n-1), ZZ(j,n).  Without
 * corrections this implements the Hadamard up to signs
 * (+Xbar_j -> -Zbar_j, +Zbar_j -> -Xbar_j); the frame corrections
 * Z_j Z_n and X_j X_{n-1} restore the exact gate.
 */
Circuit encoded_hadamard(int j, int n, bool with_corrections = true);

/* Four-qubit special Hadamard in the alternative logical basis:
 * H(1) = ZZ(2,3), XX(1,2), ZZ(2,3) with corrections XXII, IZZI;
 * H(2) = ZZ(1,2), XX(2,3), ZZ(1,2) with corrections IXXI, ZZII. */
Circuit encoded_hadamard_422(int j, bool with_corrections = true);

/* Encoded SWAP of logical qubits j and k: the physical SWAP(j, k). */
Circuit encoded_swap(int j, int k, int n);

/* Four-qubit special SWAP of logicals 1,2 in the alternative basis: the
 * physical SWAP(1, 3). */
Circuit encoded_swap_422();

/*
 * Weakly fault-tolerant ZZ / XX gadgets.
 *
 * A gadget implements the encoded ZZ or XX rotation using an ancilla pair
 * that enters in `input` (PhiPlus or PlusPlus) and leaves in the flipped
 * state `output`, followed by the recovery Pauli from the fixed four-entry
 * table.  The gate list acts on four qubits in the gadget's local frame:
 * qubits 1,2 are the ancilla pair and qubits 3,4 are the two code qubits the
 * rotation touches.
 */
struct Gadget {
    GateKind kind = GateKind::ZZ;  // ZZ or XX
    AncillaState input = AncillaState::PhiPlus;
    AncillaState output = AncillaState::PlusPlus;
    std::vector<Gate> gates;  // eight two-qubit rotations and one RX
    SignedPauli recovery;     // four-qubit Pauli applied after the gates

    /*
     * The gadget as a standalone four-qubit circuit: ancilla pair prepared
     * in `input` on qubits (1,2), the recovery appended as a frame entry,
     * and checks = stabilizers of `output` on the ancilla pair together
     * with X_3 X_4 and Z_3 Z_4.
     */
    Circuit standalone() const;
};

/* The gadget implementing `kind` (ZZ or XX) with the ancilla pair entering
 * in `input`. */
Gadget wft_gadget(GateKind kind, AncillaState input);

Gadget wft_zz(AncillaState input);
Gadget wft_xx(AncillaState input);

/* Recovery Pauli on (ancilla 1, ancilla 2, code a, code b) from the
 * four-entry table, keyed by the ancilla input state and the gate kind. */
SignedPauli gadget_recovery(GateKind kind, AncillaState input);

/*
 * Weakly fault-tolerant logical rotation RZ(theta) on logical j using one
 * extra ancilla (qubit n+1, prepared in |0>): CNOT(n -> a), CNOT(a -> j),
 * RZ(j, theta), CNOT(a -> j), CNOT(n -> a).  Checks are X^n, Z^n extended by
 * identity on the ancilla, plus Z_a.  Up to the analog angle error this has
 * exactly three undetectable single-fault classes, all equal to the logical
 * Zbar_j Z_a after the circuit, and two sign-trivial ones equal to Z_a.
 */
Circuit logical_rz(int j, int n, double theta);

/*
 * The unprotected encoded rotation used as a comparison point:
 * CNOT(n -> j), RZ(j, theta), CNOT(n -> j) on the n code qubits, with the
 * usual checks.  Implements exp(-i theta/2 Zbar_j) but is not weakly fault
 * tolerant.
 */
Circuit bare_encoded_rz(int j, int n, double theta);

/*
 * Initialization of the n-qubit GHZ state (all logical |0>) from
 * |0>^{n-2} |+> |0> using one ancilla (qubit n+1, |0>):
 * CNOT(n-1 -> a), CNOT(a -> n), CNOT(a -> i) for i = n-2..1,
 * CNOT(n-1 -> a), then MZ on the ancilla.  Checks: X^n, Z^n, Z_a.
 */
Circuit init_circuit(int n);

/*
 * Readout: the same self-inverse ladder (the middle CNOTs commute), then MZ
 * on qubits 1..n-2 and n, MX on qubit n-1, MZ on the ancilla.  Acceptance
 * means the parity of the data bits plus bit n is even, qubit n-1 reads +,
 * and the ancilla reads 0; the decoded logical bit is b_i XOR b_n.
 */
Circuit readout_circuit(int n);

/*
 * Bell-basis measurement of a qubit pair using one extra ancilla:
 * CNOT(1 -> a), CNOT(a -> 2), CNOT(1 -> a), then MX(1), MZ(2), MZ(a).
 * Outcomes (+, 0, 0) indicate the pair was in PhiPlus with no error.
 */
Circuit bell_measurement();

/*
 * Rotation by +/- theta consuming a resource qubit
 * (e^{i theta/2}|0> + e^{-i theta/2}|1>)/sqrt2: CNOT(1 -> 2) with the data
 * on qubit 1 and the resource on qubit 2, then MZ(2).  Outcome 0 applies
 * RZ(-theta) to the data, outcome 1 applies RZ(+theta); each has
 * probability 1/2.
 */
Circuit resource_rotation(double theta);

}  // namespace qedc
