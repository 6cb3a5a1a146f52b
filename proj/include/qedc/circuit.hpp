#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qedc/gate.hpp"
#include "qedc/pauli.hpp"

namespace qedc {

/* Ancilla-pair states threaded through the two-qubit-rotation gadgets. */
enum class AncillaState { PhiPlus, PlusPlus };

AncillaState flipped(AncillaState s);
std::string ancilla_state_name(AncillaState s);
AncillaState ancilla_state_from_name(const std::string& name);

/*
 * Labeled input preparations.  Zero/Plus prepare one qubit in |0>/|+>;
 * PhiPlus/PlusPlus prepare a qubit pair in (|00>+|11>)/sqrt2 / |++>;
 * Resource prepares one qubit in the rotation resource state
 * (e^{i t/2}|0> + e^{-i t/2}|1>)/sqrt2.  Qubits without a declared prep
 * default to |0>.
 */
enum class PrepKind { Zero, Plus, PhiPlus, PlusPlus, Resource };

struct Prep {
    std::vector<int> qubits;  // one qubit, or two for the pair kinds
    PrepKind kind = PrepKind::Zero;
    double angle = 0;  // Resource only

    bool operator==(const Prep&) const = default;
};

/*
 * A Pauli applied after `pos` gates of the circuit (pos = 0 means before the
 * first gate).  Frame entries carry the recovery operations of the gadgets
 * and the encoded Hadamard's phase corrections: they are classically tracked
 * sign fixes, so they contribute no fault locations, no layers and no gate
 * count, but they do participate in signed conjugation and dense simulation.
 */
struct FrameOp {
    int pos = 0;
    SignedPauli pauli;

    bool operator==(const FrameOp&) const = default;
};

/*
 * A circuit over n qubits with role annotations and its final check set.
 * `data` and `ancilla` are disjoint 1-based index sets; the remaining qubits
 * are the code's check qubits.  `checks` lists the Pauli operators whose
 * measurement at the end of the circuit performs error detection.
 */
struct Circuit {
    int n = 0;
    std::vector<Gate> gates;
    std::vector<int> data;
    std::vector<int> ancilla;
    std::vector<SignedPauli> checks;
    std::vector<Prep> preps;
    std::vector<FrameOp> frame;

    std::vector<int> check_qubits() const;

    int two_qubit_gate_count() const;
    int single_qubit_gate_count() const;  // excludes measurements

    /* Unitary gate count (measurements excluded; frame ops are not gates). */
    int gate_count() const;

    /* Throws std::invalid_argument when any structural rule is violated. */
    void validate() const;

    /* Sort role sets, preps and frame entries into canonical order. */
    Circuit canonical() const;

    bool operator==(const Circuit&) const = default;
};

/*
 * Depth of the circuit in layers under the scheduling rule used for the
 * resource counts: every two-qubit gate occupies its own layer, and a
 * single-qubit gate merges into the layer of an adjacent two-qubit gate when
 * they act on disjoint qubits (first the preceding, then the following
 * layer).  Measurements and frame entries cost no layers.
 */
int layer_count(const Circuit& c);

/* The tableau of the circuit's unitary part (Clifford gates only). */
CliffordTableau circuit_tableau(const Circuit& c);

/*
 * Conjugate a signed Pauli through gates [from, gates.size()) and the frame
 * entries at positions > from.  RZ gates pass Paulis that commute with Z on
 * their target and throw otherwise, unless rz_transparent is set, in which
 * case every Pauli passes unchanged (see fault.hpp for when that is sound).
 * Measurements are ignored.
 */
SignedPauli conjugate_through(const Circuit& c, std::size_t from, const SignedPauli& p,
                              bool rz_transparent = false);

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(int line_, int column_, const std::string& msg);
};

/* Parse the circuit text format; throws ParseError with line/column. */
Circuit parse_circuit(const std::string& text);

/*
 * Emit the canonical text form; parse_circuit inverts this bit-exactly.
 * `gate_comments` maps a gate index to a '#' comment line printed just
 * before that gate (the parser skips comments, so round-tripping holds).
 */
std::string emit_circuit(const Circuit& c,
                         const std::map<int, std::string>& gate_comments = {});

/* Format/parse helpers shared with the compiler's emitter. */
std::string format_angle(double angle);

}  // namespace qedc
