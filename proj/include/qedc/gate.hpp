#pragma once

#include <span>
#include <string>

#include "qedc/pauli.hpp"
#include "qedc/tableau.hpp"

namespace qedc {

/*
 * The gate alphabet.  SWAP/ZZ/XX/YY/RX are the native set used by the
 * encoded-gate constructions; CNOT, H, Pauli gates and RZ(theta) appear in
 * the initialization, readout and non-Clifford circuits; MZ/MX measure one
 * qubit in the Z/X basis and MBELL measures a pair in the Bell basis.
 */
enum class GateKind {
    Swap, ZZ, XX, YY, RX, Cnot, H, X, Y, Z, RZ, MZ, MX, MBell,
};

struct Gate {
    GateKind kind;
    int q1 = 0;        // 1-based
    int q2 = 0;        // second qubit for two-qubit kinds, else 0
    double angle = 0;  // RZ only

    bool operator==(const Gate&) const = default;
};

bool is_two_qubit(GateKind k);
bool is_measurement(GateKind k);
bool is_pauli_gate(GateKind k);

/* Clifford = everything except RZ and the measurements. */
bool is_clifford(GateKind k);

/* Gate kind mnemonic used by the circuit text format ("ZZ", "CNOT", ...). */
std::string gate_kind_name(GateKind k);
GateKind gate_kind_from_name(const std::string& name);

/* CNOT(control q1 -> target q2) etc.; validates qubit indices against n. */
Gate make_gate(GateKind k, int q1, int q2 = 0, double angle = 0);

/*
 * The 4x4 (two-qubit) or embedded symplectic matrix of a Clifford gate on n
 * qubits.  Pauli gates map to the identity tableau (they only affect signs).
 * Throws for RZ and measurements.
 */
CliffordTableau gate_tableau(const Gate& g, int n);

/*
 * Exact signed conjugation U P U^dag for a Clifford gate.  Signs are taken
 * from lookup tables that are derived, once, from the dense one- and
 * two-qubit gate matrices, eliminating hand-derived sign errors.  Conjugating
 * a Hermitian Pauli always yields a Hermitian Pauli (sign +/-1); this is
 * asserted.  Throws for RZ (not a Clifford for generic angles) and for
 * measurements.
 */
SignedPauli conjugate_signed(const Gate& g, const SignedPauli& p);

/*
 * A gate sequence that undoes g by conjugation: the fourth-root rotations
 * (ZZ, XX, YY, RX) repeated three times, everything else once.
 */
int gate_conjugation_order(GateKind k);

}  // namespace qedc
