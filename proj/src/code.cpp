#include "qedc/code.hpp"

#include <stdexcept>
#include <string>

namespace qedc {

namespace {

std::uint64_t bit(int qubit) { return std::uint64_t{1} << (qubit - 1); }

std::uint64_t all_bits(int n) {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void require_code_size(int n) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("code size must be even and at least 4, got " +
                                    std::to_string(n));
    }
    if (n > 62) {
        throw std::invalid_argument("code size exceeds the 64-qubit packed-word limit");
    }
}

void require_logical_index(int j, int n) {
    if (j < 1 || j > n - 2) {
        throw std::invalid_argument("logical index " + std::to_string(j) +
                                    " out of range 1.." + std::to_string(n - 2));
    }
}

/* An n-qubit code circuit skeleton: data = {1..n-2}, checks = {X^n, Z^n}. */
Circuit code_circuit(int n) {
    Circuit c;
    c.n = n;
    for (int q = 1; q <= n - 2; ++q) c.data.push_back(q);
    c.checks = qedc_stabilizers(n);
    return c;
}

/* Extend an n-qubit Pauli by identity to n + 1 qubits. */
SignedPauli extend(const SignedPauli& p) {
    return SignedPauli(p.n + 1, p.x, p.z, p.phase);
}

}  // namespace

std::vector<SignedPauli> qedc_stabilizers(int n) {
    require_code_size(n);
    return {SignedPauli(n, all_bits(n), 0), SignedPauli(n, 0, all_bits(n))};
}

LogicalPair logical_operator(int j, int n) {
    require_code_size(n);
    require_logical_index(j, n);
    return {SignedPauli(n, bit(j) | bit(n - 1), 0), SignedPauli(n, 0, bit(j) | bit(n))};
}

std::vector<LogicalPair> logical_operators(int n) {
    require_code_size(n);
    std::vector<LogicalPair> pairs;
    for (int j = 1; j <= n - 2; ++j) pairs.push_back(logical_operator(j, n));
    return pairs;
}

std::vector<LogicalPair> logical_operators_422() {
    return {{SignedPauli::from_string("XXII"), SignedPauli::from_string("IZZI")},
            {SignedPauli::from_string("IXXI"), SignedPauli::from_string("ZZII")}};
}

Circuit encoded_cnot(int j, int k, int n) {
    if (n == 4) {
        require_logical_index(j, n);
        require_logical_index(k, n);
        if (j == k) throw std::invalid_argument("control and target must differ");
        Circuit c = code_circuit(4);
        c.gates = {j == 1 ? make_gate(GateKind::Swap, 2, 3) : make_gate(GateKind::Swap, 1, 2)};
        c.validate();
        return c;
    }
    return encoded_cnot_general(j, k, n);
}

Circuit encoded_cnot_general(int j, int k, int n) {
    require_code_size(n);
    require_logical_index(j, n);
    require_logical_index(k, n);
    if (j == k) throw std::invalid_argument("control and target must differ");
    Circuit c = code_circuit(n);
    c.gates = {make_gate(GateKind::XX, k, n),     make_gate(GateKind::XX, n - 1, n),
               make_gate(GateKind::ZZ, j, n),     make_gate(GateKind::XX, n - 1, n),
               make_gate(GateKind::XX, k, n),     make_gate(GateKind::ZZ, j, n),
               make_gate(GateKind::XX, k, n - 1)};
    c.validate();
    return c;
}

Circuit encoded_phase(int j, int n) {
    require_code_size(n);
    require_logical_index(j, n);
    Circuit c = code_circuit(n);
    c.gates = {make_gate(GateKind::ZZ, j, n)};
    c.validate();
    return c;
}

Circuit encoded_phase_422(int j) {
    require_logical_index(j, 4);
    Circuit c = code_circuit(4);
    c.gates = {j == 1 ? make_gate(GateKind::ZZ, 2, 3) : make_gate(GateKind::ZZ, 1, 2)};
    c.validate();
    return c;
}

Circuit encoded_hadamard(int j, int n, bool with_corrections) {
    require_code_size(n);
    require_logical_index(j, n);
    Circuit c = code_circuit(n);
    c.gates = {make_gate(GateKind::ZZ, j, n), make_gate(GateKind::XX, j, n - 1),
               make_gate(GateKind::ZZ, j, n)};
    if (with_corrections) {
        c.frame = {FrameOp{3, SignedPauli(n, 0, bit(j) | bit(n))},
                   FrameOp{3, SignedPauli(n, bit(j) | bit(n - 1), 0)}};
    }
    c.validate();
    return c;
}

Circuit encoded_hadamard_422(int j, bool with_corrections) {
    require_logical_index(j, 4);
    Circuit c = code_circuit(4);
    if (j == 1) {
        c.gates = {make_gate(GateKind::ZZ, 2, 3), make_gate(GateKind::XX, 1, 2),
                   make_gate(GateKind::ZZ, 2, 3)};
        if (with_corrections) {
            c.frame = {FrameOp{3, SignedPauli::from_string("XXII")},
                       FrameOp{3, SignedPauli::from_string("IZZI")}};
        }
    } else {
        c.gates = {make_gate(GateKind::ZZ, 1, 2), make_gate(GateKind::XX, 2, 3),
                   make_gate(GateKind::ZZ, 1, 2)};
        if (with_corrections) {
            c.frame = {FrameOp{3, SignedPauli::from_string("IXXI")},
                       FrameOp{3, SignedPauli::from_string("ZZII")}};
        }
    }
    c.validate();
    return c;
}

Circuit encoded_swap(int j, int k, int n) {
    require_code_size(n);
    require_logical_index(j, n);
    require_logical_index(k, n);
    if (j == k) throw std::invalid_argument("swapped logical qubits must differ");
    Circuit c = code_circuit(n);
    c.gates = {make_gate(GateKind::Swap, j, k)};
    c.validate();
    return c;
}

Circuit encoded_swap_422() {
    Circuit c = code_circuit(4);
    c.gates = {make_gate(GateKind::Swap, 1, 3)};
    c.validate();
    return c;
}

Circuit Gadget::standalone() const {
    Circuit c;
    c.n = 4;
    c.ancilla = {1, 2};
    c.data = {3, 4};
    c.gates = gates;
    c.preps = {Prep{{1, 2},
                    input == AncillaState::PhiPlus ? PrepKind::PhiPlus : PrepKind::PlusPlus}};
    c.frame = {FrameOp{static_cast<int>(gates.size()), recovery}};
    if (output == AncillaState::PhiPlus) {
        c.checks = {SignedPauli::from_string("XXII"), SignedPauli::from_string("ZZII")};
    } else {
        c.checks = {SignedPauli::from_string("XIII"), SignedPauli::from_string("IXII")};
    }
    c.checks.push_back(SignedPauli::from_string("IIXX"));
    c.checks.push_back(SignedPauli::from_string("IIZZ"));
    c.validate();
    return c.canonical();
}

Gadget wft_gadget(GateKind kind, AncillaState input) {
    if (kind != GateKind::ZZ && kind != GateKind::XX) {
        throw std::invalid_argument("gadgets exist for the ZZ and XX gates only");
    }
    auto g = [](GateKind k, int a, int b) { return make_gate(k, a, b); };
    constexpr GateKind ZZ = GateKind::ZZ, XX = GateKind::XX, YY = GateKind::YY,
                       RX = GateKind::RX;
    Gadget gad;
    gad.kind = kind;
    gad.input = input;
    gad.output = flipped(input);
    gad.recovery = gadget_recovery(kind, input);
    if (kind == ZZ && input == AncillaState::PhiPlus) {
        gad.gates = {g(ZZ, 1, 4), g(XX, 1, 3), g(ZZ, 1, 2), g(YY, 2, 3), g(XX, 1, 3),
                     g(RX, 2, 0), g(ZZ, 1, 2), g(ZZ, 1, 4), g(YY, 2, 3)};
    } else if (kind == ZZ) {
        gad.gates = {g(ZZ, 1, 2), g(RX, 2, 0), g(ZZ, 1, 3), g(ZZ, 1, 4), g(XX, 1, 3),
                     g(YY, 2, 3), g(XX, 1, 2), g(XX, 1, 3), g(ZZ, 1, 4)};
    } else if (input == AncillaState::PhiPlus) {
        gad.gates = {g(XX, 1, 4), g(ZZ, 1, 3), g(XX, 1, 3), g(YY, 2, 3), g(ZZ, 1, 2),
                     g(ZZ, 1, 3), g(RX, 2, 0), g(XX, 1, 4), g(ZZ, 1, 2)};
    } else {
        gad.gates = {g(ZZ, 1, 2), g(XX, 1, 3), g(RX, 2, 0), g(XX, 1, 4), g(ZZ, 1, 3),
                     g(YY, 2, 3), g(ZZ, 1, 2), g(ZZ, 1, 3), g(XX, 1, 4)};
    }
    return gad;
}

Gadget wft_zz(AncillaState input) { return wft_gadget(GateKind::ZZ, input); }
Gadget wft_xx(AncillaState input) { return wft_gadget(GateKind::XX, input); }

SignedPauli gadget_recovery(GateKind kind, AncillaState input) {
    if (kind != GateKind::ZZ && kind != GateKind::XX) {
        throw std::invalid_argument("gadgets exist for the ZZ and XX gates only");
    }
    if (input == AncillaState::PhiPlus) {
        return SignedPauli::from_string(kind == GateKind::ZZ ? "ZIZI" : "IZYI");
    }
    return SignedPauli::from_string(kind == GateKind::ZZ ? "XIXI" : "YIYI");
}

Circuit logical_rz(int j, int n, double theta) {
    require_code_size(n);
    require_logical_index(j, n);
    const int a = n + 1;
    Circuit c;
    c.n = a;
    for (int q = 1; q <= n - 2; ++q) c.data.push_back(q);
    c.ancilla = {a};
    c.preps = {Prep{{a}, PrepKind::Zero}};
    c.gates = {make_gate(GateKind::Cnot, n, a), make_gate(GateKind::Cnot, a, j),
               make_gate(GateKind::RZ, j, 0, theta), make_gate(GateKind::Cnot, a, j),
               make_gate(GateKind::Cnot, n, a)};
    for (const SignedPauli& s : qedc_stabilizers(n)) c.checks.push_back(extend(s));
    c.checks.push_back(SignedPauli(a, 0, bit(a)));
    c.validate();
    return c;
}

Circuit bare_encoded_rz(int j, int n, double theta) {
    require_code_size(n);
    require_logical_index(j, n);
    Circuit c = code_circuit(n);
    c.gates = {make_gate(GateKind::Cnot, n, j), make_gate(GateKind::RZ, j, 0, theta),
               make_gate(GateKind::Cnot, n, j)};
    c.validate();
    return c;
}

namespace {

/* The shared self-inverse CNOT ladder of the initialization and readout
 * circuits, on n code qubits plus the ancilla a = n + 1. */
std::vector<Gate> encode_ladder(int n) {
    const int a = n + 1;
    std::vector<Gate> gates;
    gates.push_back(make_gate(GateKind::Cnot, n - 1, a));
    gates.push_back(make_gate(GateKind::Cnot, a, n));
    for (int i = n - 2; i >= 1; --i) gates.push_back(make_gate(GateKind::Cnot, a, i));
    gates.push_back(make_gate(GateKind::Cnot, n - 1, a));
    return gates;
}

Circuit ladder_circuit(int n) {
    require_code_size(n);
    const int a = n + 1;
    Circuit c;
    c.n = a;
    for (int q = 1; q <= n - 2; ++q) c.data.push_back(q);
    c.ancilla = {a};
    c.gates = encode_ladder(n);
    return c;
}

}  // namespace

Circuit init_circuit(int n) {
    Circuit c = ladder_circuit(n);
    const int a = n + 1;
    for (int q = 1; q <= n; ++q) {
        c.preps.push_back(Prep{{q}, q == n - 1 ? PrepKind::Plus : PrepKind::Zero});
    }
    c.preps.push_back(Prep{{a}, PrepKind::Zero});
    c.gates.push_back(make_gate(GateKind::MZ, a));
    for (const SignedPauli& s : qedc_stabilizers(n)) c.checks.push_back(extend(s));
    c.checks.push_back(SignedPauli(a, 0, bit(a)));
    c.validate();
    return c;
}

Circuit readout_circuit(int n) {
    Circuit c = ladder_circuit(n);
    const int a = n + 1;
    c.preps = {Prep{{a}, PrepKind::Zero}};
    for (int q = 1; q <= n - 2; ++q) c.gates.push_back(make_gate(GateKind::MZ, q));
    c.gates.push_back(make_gate(GateKind::MX, n - 1));
    c.gates.push_back(make_gate(GateKind::MZ, n));
    c.gates.push_back(make_gate(GateKind::MZ, a));
    /* Acceptance observables: data-plus-bit-n parity, the X check, and the
     * ancilla flag. */
    std::uint64_t parity = bit(n);
    for (int q = 1; q <= n - 2; ++q) parity |= bit(q);
    c.checks = {SignedPauli(a, 0, parity), SignedPauli(a, bit(n - 1), 0),
                SignedPauli(a, 0, bit(a))};
    c.validate();
    return c;
}

Circuit bell_measurement() {
    Circuit c;
    c.n = 3;
    c.data = {1, 2};
    c.ancilla = {3};
    c.preps = {Prep{{3}, PrepKind::Zero}};
    c.gates = {make_gate(GateKind::Cnot, 1, 3), make_gate(GateKind::Cnot, 3, 2),
               make_gate(GateKind::Cnot, 1, 3), make_gate(GateKind::MX, 1),
               make_gate(GateKind::MZ, 2),      make_gate(GateKind::MZ, 3)};
    c.checks = {SignedPauli::from_string("XII"), SignedPauli::from_string("IZI"),
                SignedPauli::from_string("IIZ")};
    c.validate();
    return c;
}

Circuit resource_rotation(double theta) {
    Circuit c;
    c.n = 2;
    c.data = {1};
    c.ancilla = {2};
    c.preps = {Prep{{2}, PrepKind::Resource, theta}};
    c.gates = {make_gate(GateKind::Cnot, 1, 2), make_gate(GateKind::MZ, 2)};
    c.validate();
    return c;
}

}  // namespace qedc
