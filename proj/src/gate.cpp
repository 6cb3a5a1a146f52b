#include "qedc/gate.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "qedc/gate_matrices.hpp"

namespace qedc {

bool is_two_qubit(GateKind k) {
    switch (k) {
        case GateKind::Swap:
        case GateKind::ZZ:
        case GateKind::XX:
        case GateKind::YY:
        case GateKind::Cnot:
        case GateKind::MBell:
            return true;
        default:
            return false;
    }
}

bool is_measurement(GateKind k) {
    return k == GateKind::MZ || k == GateKind::MX || k == GateKind::MBell;
}

bool is_pauli_gate(GateKind k) {
    return k == GateKind::X || k == GateKind::Y || k == GateKind::Z;
}

bool is_clifford(GateKind k) {
    return !is_measurement(k) && k != GateKind::RZ;
}

std::string gate_kind_name(GateKind k) {
    switch (k) {
        case GateKind::Swap: return "SWAP";
        case GateKind::ZZ: return "ZZ";
        case GateKind::XX: return "XX";
        case GateKind::YY: return "YY";
        case GateKind::RX: return "RX";
        case GateKind::Cnot: return "CNOT";
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::RZ: return "RZ";
        case GateKind::MZ: return "MZ";
        case GateKind::MX: return "MX";
        case GateKind::MBell: return "MBELL";
    }
    throw std::logic_error("unreachable gate kind");
}

GateKind gate_kind_from_name(const std::string& name) {
    static const std::map<std::string, GateKind> table = {
        {"SWAP", GateKind::Swap}, {"ZZ", GateKind::ZZ},   {"XX", GateKind::XX},
        {"YY", GateKind::YY},     {"RX", GateKind::RX},   {"CNOT", GateKind::Cnot},
        {"H", GateKind::H},       {"X", GateKind::X},     {"Y", GateKind::Y},
        {"Z", GateKind::Z},       {"RZ", GateKind::RZ},   {"MZ", GateKind::MZ},
        {"MX", GateKind::MX},     {"MBELL", GateKind::MBell},
    };
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown gate kind '" + name + "'");
    return it->second;
}

Gate make_gate(GateKind k, int q1, int q2, double angle) {
    Gate g{k, q1, q2, angle};
    if (q1 < 1) throw std::invalid_argument("gate qubit must be positive");
    if (is_two_qubit(k)) {
        if (q2 < 1) throw std::invalid_argument(gate_kind_name(k) + " needs two qubits");
        if (q1 == q2) throw std::invalid_argument(gate_kind_name(k) + " qubits must differ");
    } else {
        if (q2 != 0) throw std::invalid_argument(gate_kind_name(k) + " takes one qubit");
    }
    if (k != GateKind::RZ && angle != 0) {
        throw std::invalid_argument(gate_kind_name(k) + " takes no angle");
    }
    return g;
}

/* ------------------------------------------------------------------------ */
/* Sign lookup tables, derived from the dense gate matrices.                 */
/* ------------------------------------------------------------------------ */

namespace {

struct LocalImage {
    std::uint8_t bits;   // two-qubit: (x1 | x2<<1 | z1<<2 | z2<<3); one-qubit: (x | z<<1)
    std::uint8_t delta;  // phase exponent added, mod 4
};

Mat2 local1(int x, int z) {
    Mat2 m = mat_i2();
    if (z) m = mul2(m, mat_z());
    if (x) m = mul2(m, mat_x());
    return m;
}

Mat4 local2(std::uint8_t bits) {
    return kron2(local1(bits & 1, (bits >> 2) & 1), local1((bits >> 1) & 1, (bits >> 3) & 1));
}

constexpr double kTol = 1e-9;

bool approx(cd a, cd b) { return std::abs(a - b) < kTol; }

/* Decompose m = i^delta * Z^z X^x over one of the 4/16 local patterns. */
template <typename MatT, typename LocalFn>
LocalImage decompose(const MatT& m, int patterns, LocalFn local) {
    for (int bits = 0; bits < patterns; ++bits) {
        MatT cand = local(static_cast<std::uint8_t>(bits));
        // Find the first structurally nonzero entry of the candidate.
        std::size_t idx = 0;
        while (idx < cand.size() && approx(cand[idx], c0)) ++idx;
        cd ratio = m[idx] / cand[idx];
        int delta = -1;
        if (approx(ratio, c1)) delta = 0;
        else if (approx(ratio, ci)) delta = 1;
        else if (approx(ratio, -c1)) delta = 2;
        else if (approx(ratio, -ci)) delta = 3;
        if (delta < 0) continue;
        bool match = true;
        for (std::size_t i = 0; i < cand.size() && match; ++i) {
            cd expect = cand[i] * ratio;
            if (!approx(m[i], expect)) match = false;
        }
        if (match) return {static_cast<std::uint8_t>(bits), static_cast<std::uint8_t>(delta)};
    }
    throw std::logic_error("conjugated Pauli is not proportional to a Pauli");
}

std::array<LocalImage, 16> build_table2(const Mat4& u) {
    std::array<LocalImage, 16> table{};
    Mat4 ud = dag4(u);
    for (int bits = 0; bits < 16; ++bits) {
        Mat4 m = mul4(mul4(u, local2(static_cast<std::uint8_t>(bits))), ud);
        table[bits] = decompose<Mat4>(m, 16, local2);
    }
    return table;
}

std::array<LocalImage, 4> build_table1(const Mat2& u) {
    std::array<LocalImage, 4> table{};
    Mat2 ud = dag2(u);
    auto local = [](std::uint8_t bits) { return local1(bits & 1, (bits >> 1) & 1); };
    for (int bits = 0; bits < 4; ++bits) {
        Mat2 m = mul2(mul2(u, local(static_cast<std::uint8_t>(bits))), ud);
        table[bits] = decompose<Mat2>(m, 4, local);
    }
    return table;
}

struct SignTables {
    std::array<LocalImage, 16> swap, zz, xx, yy, cnot;
    std::array<LocalImage, 4> rx, h, px, py, pz;

    SignTables()
        : swap(build_table2(mat_swap())),
          zz(build_table2(mat_zz())),
          xx(build_table2(mat_xx())),
          yy(build_table2(mat_yy())),
          cnot(build_table2(mat_cnot())),
          rx(build_table1(mat_rx())),
          h(build_table1(mat_h())),
          px(build_table1(mat_x())),
          py(build_table1(mat_y())),
          pz(build_table1(mat_z())) {}
};

const SignTables& tables() {
    static const SignTables t;
    return t;
}

}  // namespace

CliffordTableau gate_tableau(const Gate& g, int n) {
    if (!is_clifford(g.kind)) {
        throw std::invalid_argument(gate_kind_name(g.kind) + " has no Clifford tableau");
    }
    CliffordTableau c = CliffordTableau::identity(n);
    auto set_row = [&](int row, const SignedPauli& image) {
        c.rows[row] = {image.x, image.z};
    };
    set_row(g.q1 - 1, conjugate_signed(g, SignedPauli::single(n, g.q1, 'X')));
    set_row(n + g.q1 - 1, conjugate_signed(g, SignedPauli::single(n, g.q1, 'Z')));
    if (is_two_qubit(g.kind)) {
        set_row(g.q2 - 1, conjugate_signed(g, SignedPauli::single(n, g.q2, 'X')));
        set_row(n + g.q2 - 1, conjugate_signed(g, SignedPauli::single(n, g.q2, 'Z')));
    }
    return c;
}

SignedPauli conjugate_signed(const Gate& g, const SignedPauli& p) {
    if (!is_clifford(g.kind)) {
        throw std::invalid_argument("conjugate_signed: " + gate_kind_name(g.kind) +
                                    " is not in the Clifford gate alphabet");
    }
    if (g.q1 > p.n || (is_two_qubit(g.kind) && g.q2 > p.n)) {
        throw std::out_of_range("conjugate_signed: gate acts outside the Pauli's qubits");
    }
    const SignTables& t = tables();
    std::uint64_t x = p.x, z = p.z;
    int phase = p.phase;
    auto getbit = [](std::uint64_t w, int q) -> std::uint64_t { return (w >> (q - 1)) & 1u; };
    auto putbit = [](std::uint64_t& w, int q, std::uint64_t b) {
        w = (w & ~(std::uint64_t{1} << (q - 1))) | (b << (q - 1));
    };
    if (is_two_qubit(g.kind)) {
        std::uint8_t bits = static_cast<std::uint8_t>(
            getbit(x, g.q1) | (getbit(x, g.q2) << 1) | (getbit(z, g.q1) << 2) |
            (getbit(z, g.q2) << 3));
        const std::array<LocalImage, 16>* table = nullptr;
        switch (g.kind) {
            case GateKind::Swap: table = &t.swap; break;
            case GateKind::ZZ: table = &t.zz; break;
            case GateKind::XX: table = &t.xx; break;
            case GateKind::YY: table = &t.yy; break;
            case GateKind::Cnot: table = &t.cnot; break;
            default: throw std::logic_error("unhandled two-qubit kind");
        }
        LocalImage im = (*table)[bits];
        putbit(x, g.q1, im.bits & 1);
        putbit(x, g.q2, (im.bits >> 1) & 1);
        putbit(z, g.q1, (im.bits >> 2) & 1);
        putbit(z, g.q2, (im.bits >> 3) & 1);
        phase += im.delta;
    } else {
        std::uint8_t bits = static_cast<std::uint8_t>(getbit(x, g.q1) | (getbit(z, g.q1) << 1));
        const std::array<LocalImage, 4>* table = nullptr;
        switch (g.kind) {
            case GateKind::RX: table = &t.rx; break;
            case GateKind::H: table = &t.h; break;
            case GateKind::X: table = &t.px; break;
            case GateKind::Y: table = &t.py; break;
            case GateKind::Z: table = &t.pz; break;
            default: throw std::logic_error("unhandled one-qubit kind");
        }
        LocalImage im = (*table)[bits];
        putbit(x, g.q1, im.bits & 1);
        putbit(z, g.q1, (im.bits >> 1) & 1);
        phase += im.delta;
    }
    SignedPauli out(p.n, x, z, phase);
    if (p.is_hermitian() && !out.is_hermitian()) {
        throw std::logic_error("conjugation broke Hermiticity (internal error)");
    }
    return out;
}

int gate_conjugation_order(GateKind k) {
    switch (k) {
        case GateKind::ZZ:
        case GateKind::XX:
        case GateKind::YY:
        case GateKind::RX:
            return 4;  // U^2 is a Pauli, U^4 is -1; conjugation has order 4
        case GateKind::Swap:
        case GateKind::Cnot:
        case GateKind::H:
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
            return 2;  // self-inverse
        default:
            throw std::invalid_argument(gate_kind_name(k) + " has no conjugation order");
    }
}

}  // namespace qedc
