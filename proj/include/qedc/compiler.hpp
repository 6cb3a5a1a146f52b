#pragma once

#include <string>
#include <vector>

#include "qedc/circuit.hpp"
#include "qedc/code.hpp"

namespace qedc {

/*
 * Logical-circuit source language.  One instruction per line:
 *
 *     H <j>            Hadamard on logical qubit j
 *     S <j>            phase gate on logical qubit j
 *     CNOT <j> <k>     controlled-NOT, control j, target k (j != k)
 *     SWAP <j> <k>     swap of logical qubits j and k (j != k)
 *     RZ <j> <theta>   Z rotation by theta radians on logical qubit j
 *
 * Lines are whitespace-insensitive; '#' starts a comment.  There is no
 * header: the logical width is inferred as the largest index used, rounded
 * up to the next even number, with a minimum of 2 (the code needs an even
 * number of physical qubits).
 */
enum class LogicalOp { H, S, Cnot, Swap, RZ };

std::string logical_op_name(LogicalOp op);

struct LogicalInstruction {
    LogicalOp op = LogicalOp::H;
    int j = 0;
    int k = 0;         // CNOT/SWAP only
    double angle = 0;  // RZ only

    bool operator==(const LogicalInstruction&) const = default;
};

struct LogicalProgram {
    int num_logical = 2;  // even, >= 2
    std::vector<LogicalInstruction> instructions;

    bool operator==(const LogicalProgram&) const = default;
};

/* Parse program text; throws ParseError with line/column on bad input. */
LogicalProgram parse_program(const std::string& text);

struct CompileOptions {
    /* Replace every two-qubit ZZ/XX rotation with the matching
     * error-detecting gadget and append its recovery. */
    bool wft = false;

    /* Prefix the GHZ initialization ladder and suffix the readout ladder
     * plus measurements, sharing one extra ancilla between them. */
    bool include_init_readout = false;

    /* Use the four-qubit special constructions (SWAP-form CNOT and the
     * alternative logical basis for S/H/SWAP).  Requires exactly two
     * logical qubits and rejects RZ, whose lowering is defined only in the
     * generic basis. */
    bool n4_special = false;
};

/* Annotation marking where a gadget was substituted into the gate stream. */
struct GadgetNote {
    int gate_pos = 0;  // index of the gadget's first gate
    GateKind kind = GateKind::ZZ;
    AncillaState input = AncillaState::PhiPlus;

    bool operator==(const GadgetNote&) const = default;
};

struct CompileResources {
    int n_physical = 0;     // code qubits: num_logical + 2 checks
    int n_ancillas = 0;     // fixed protocol budget (see lower())
    int gate_count = 0;     // unitary gates, measurements excluded
    int layer_count = 0;
    double code_rate = 0;   // (n - 6) / n with n counting the ancilla budget
    int zz_gadgets = 0;
    int xx_gadgets = 0;

    bool operator==(const CompileResources&) const = default;
};

struct CompilationResult {
    Circuit physical;
    std::vector<AncillaState> ancilla_trace;  // pair label before each gadget
    std::vector<FrameOp> recovery_log;        // every inserted sign fix
    std::vector<GadgetNote> gadget_notes;
    CompileResources resources;
};

/*
 * Lower a logical program to a physical circuit on the [[n, n-2, 2]] code,
 * n = num_logical + 2.
 *
 * Extra qubits are appended after the n code qubits, in this fixed order
 * and only when used: the shared gadget ancilla pair (wft mode with at
 * least one ZZ/XX gate; starts in PhiPlus and alternates), the shared
 * rotation ancilla (any RZ instruction), and the shared
 * initialization/readout ancilla.  The reported ancilla count is always
 * the protocol's reusable budget of 4 (pair + rotation + init/readout)
 * rather than the subset a particular program touches, matching the code
 * rate (n - 6)/n whose denominator counts all four.
 *
 * Final checks are the code stabilizers (or, when initialization/readout
 * is included, the readout-basis checks: the Z parity of the measured data
 * bits with bit n, X on qubit n-1, and Z on the shared ancilla) together
 * with the stabilizers of the ancilla pair's final state and Z on the
 * rotation ancilla when present.
 */
CompilationResult lower(const LogicalProgram& program, const CompileOptions& options = {});

/* Human-readable resource summary (qubits, rate, gates, layers, gadgets). */
std::string resource_report(const CompilationResult& result);

enum class EmitFormat { CircuitText, CsvSummary };

/*
 * Serialize a compilation result.  CircuitText is the circuit format of
 * emit_circuit with a '# gadget <kind> <state>' comment before each
 * substituted gadget; parse_circuit recovers the physical circuit exactly.
 * CsvSummary is a one-row CSV of the resource counters.
 */
std::string emit(const CompilationResult& result, EmitFormat format = EmitFormat::CircuitText);

}  // namespace qedc
