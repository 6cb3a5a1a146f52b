#include "qedc/compiler.hpp"

#include "qedc/fault.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qedc {

namespace {

constexpr int kMaxLogical = 58;  // keeps n + all four ancillas within 64 bits

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
               line[i] != '#') {
            ++i;
        }
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

int parse_index(const Token& t, int line) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(t.text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != t.text.size()) {
        throw ParseError(line, t.column, "expected a logical index, got '" + t.text + "'");
    }
    if (v < 1 || v > kMaxLogical) {
        throw ParseError(line, t.column,
                         "logical index must be 1.." + std::to_string(kMaxLogical));
    }
    return v;
}

double parse_angle(const Token& t, int line) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(t.text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != t.text.size() || !std::isfinite(v)) {
        throw ParseError(line, t.column, "expected a finite angle, got '" + t.text + "'");
    }
    return v;
}

void validate_program(const LogicalProgram& p) {
    if (p.num_logical < 2 || p.num_logical > kMaxLogical || p.num_logical % 2 != 0) {
        throw std::invalid_argument("num_logical must be even and in 2.." +
                                    std::to_string(kMaxLogical));
    }
    for (const LogicalInstruction& ins : p.instructions) {
        const bool pair = ins.op == LogicalOp::Cnot || ins.op == LogicalOp::Swap;
        if (ins.j < 1 || ins.j > p.num_logical || (pair && (ins.k < 1 || ins.k > p.num_logical))) {
            throw std::invalid_argument("logical index out of range in " +
                                        logical_op_name(ins.op));
        }
        if (pair && ins.j == ins.k) {
            throw std::invalid_argument(logical_op_name(ins.op) + " needs distinct indices");
        }
        if (ins.op == LogicalOp::RZ && !std::isfinite(ins.angle)) {
            throw std::invalid_argument("RZ angle must be finite");
        }
    }
}

/* Widen a Pauli to `n` qubits (bit layout is shared, qubit labels keep). */
SignedPauli widen(const SignedPauli& p, int n) {
    return SignedPauli(n, p.x, p.z, p.phase);
}

/* Move a Pauli's letters onto new qubit labels: letter on local qubit q
 * (1-based index into `map`) lands on qubit map[q-1] of an n-qubit Pauli. */
SignedPauli relabel(const SignedPauli& p, const std::vector<int>& map, int n) {
    std::uint64_t x = 0, z = 0;
    for (int q = 1; q <= p.n; ++q) {
        const std::uint64_t target = std::uint64_t{1}
                                     << (map[static_cast<std::size_t>(q - 1)] - 1);
        if (p.x_bit(q)) x |= target;
        if (p.z_bit(q)) z |= target;
    }
    return SignedPauli(n, x, z, p.phase);
}

}  // namespace

std::string logical_op_name(LogicalOp op) {
    switch (op) {
        case LogicalOp::H: return "H";
        case LogicalOp::S: return "S";
        case LogicalOp::Cnot: return "CNOT";
        case LogicalOp::Swap: return "SWAP";
        case LogicalOp::RZ: return "RZ";
    }
    throw std::logic_error("unknown logical op");
}

LogicalProgram parse_program(const std::string& text) {
    LogicalProgram prog;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0, max_index = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::vector<Token> tok = tokenize(raw);
        if (tok.empty()) continue;
        const std::string& head = tok[0].text;
        LogicalInstruction ins;
        std::size_t want = 0;
        if (head == "H") {
            ins.op = LogicalOp::H;
            want = 2;
        } else if (head == "S") {
            ins.op = LogicalOp::S;
            want = 2;
        } else if (head == "CNOT") {
            ins.op = LogicalOp::Cnot;
            want = 3;
        } else if (head == "SWAP") {
            ins.op = LogicalOp::Swap;
            want = 3;
        } else if (head == "RZ") {
            ins.op = LogicalOp::RZ;
            want = 3;
        } else {
            throw ParseError(lineno, tok[0].column, "unknown mnemonic '" + head + "'");
        }
        if (tok.size() != want) {
            throw ParseError(lineno, tok[0].column, "wrong argument count for " + head);
        }
        ins.j = parse_index(tok[1], lineno);
        max_index = std::max(max_index, ins.j);
        if (ins.op == LogicalOp::Cnot || ins.op == LogicalOp::Swap) {
            ins.k = parse_index(tok[2], lineno);
            if (ins.k == ins.j) {
                throw ParseError(lineno, tok[2].column, head + " needs distinct indices");
            }
            max_index = std::max(max_index, ins.k);
        } else if (ins.op == LogicalOp::RZ) {
            ins.angle = parse_angle(tok[2], lineno);
        }
        prog.instructions.push_back(ins);
    }
    prog.num_logical = std::max(2, max_index + (max_index % 2));
    return prog;
}

CompilationResult lower(const LogicalProgram& program, const CompileOptions& options) {
    validate_program(program);
    if (options.n4_special) {
        if (program.num_logical != 2) {
            throw std::invalid_argument("the four-qubit special lowering needs exactly "
                                        "2 logical qubits");
        }
        for (const LogicalInstruction& ins : program.instructions) {
            if (ins.op == LogicalOp::RZ) {
                throw std::invalid_argument(
                    "RZ is not available in the four-qubit special basis");
            }
        }
    }
    const int n = program.num_logical + 2;

    // Bare per-instruction lowerings over the code qubits (RZ adds the
    // rotation ancilla as qubit n+1, relabeled below).
    struct Fragment {
        std::vector<Gate> gates;
        std::vector<FrameOp> frames;
        bool rotation = false;
    };
    std::vector<Fragment> fragments;
    bool any_gadget_gate = false, any_rotation = false;
    for (const LogicalInstruction& ins : program.instructions) {
        Circuit bare;
        switch (ins.op) {
            case LogicalOp::H:
                bare = options.n4_special ? encoded_hadamard_422(ins.j)
                                          : encoded_hadamard(ins.j, n);
                break;
            case LogicalOp::S:
                bare = options.n4_special ? encoded_phase_422(ins.j)
                                          : encoded_phase(ins.j, n);
                break;
            case LogicalOp::Cnot:
                bare = options.n4_special ? encoded_cnot(ins.j, ins.k, n)
                                          : encoded_cnot_general(ins.j, ins.k, n);
                break;
            case LogicalOp::Swap:
                bare = options.n4_special ? encoded_swap_422()
                                          : encoded_swap(ins.j, ins.k, n);
                break;
            case LogicalOp::RZ: bare = logical_rz(ins.j, n, ins.angle); break;
        }
        Fragment frag{bare.gates, bare.frame, ins.op == LogicalOp::RZ};
        any_rotation = any_rotation || frag.rotation;
        for (const Gate& g : frag.gates) {
            if (g.kind == GateKind::ZZ || g.kind == GateKind::XX) any_gadget_gate = true;
        }
        fragments.push_back(std::move(frag));
    }

    // Extra-qubit layout after the n code qubits.
    const bool use_pair = options.wft && any_gadget_gate;
    int next = n;
    const int pair1 = use_pair ? ++next : 0;
    const int pair2 = use_pair ? ++next : 0;
    const int rot_anc = any_rotation ? ++next : 0;
    const int io_anc = options.include_init_readout ? ++next : 0;
    const int n_total = next;

    CompilationResult result;
    Circuit& phys = result.physical;
    phys.n = n_total;
    for (int q = 1; q <= n - 2; ++q) phys.data.push_back(q);
    if (use_pair) {
        phys.ancilla.push_back(pair1);
        phys.ancilla.push_back(pair2);
        phys.preps.push_back(Prep{{pair1, pair2}, PrepKind::PhiPlus});
    }
    if (any_rotation) {
        phys.ancilla.push_back(rot_anc);
        phys.preps.push_back(Prep{{rot_anc}, PrepKind::Zero});
    }
    if (options.include_init_readout) phys.ancilla.push_back(io_anc);

    auto add_frame = [&](const SignedPauli& p) {
        FrameOp op{static_cast<int>(phys.gates.size()), p};
        phys.frame.push_back(op);
        result.recovery_log.push_back(op);
    };

    if (options.include_init_readout) {
        const Circuit init = init_circuit(n);
        for (Prep p : init.preps) {
            if (p.qubits[0] == n + 1) p.qubits[0] = io_anc;
            phys.preps.push_back(std::move(p));
        }
        for (Gate g : init.gates) {
            if (is_measurement(g.kind)) continue;  // checked at circuit end instead
            if (g.q1 == n + 1) g.q1 = io_anc;
            if (g.q2 == n + 1) g.q2 = io_anc;
            phys.gates.push_back(g);
        }
    }

    AncillaState label = AncillaState::PhiPlus;
    for (const Fragment& frag : fragments) {
        std::size_t frame_idx = 0;
        auto flush_frames = [&](int upto) {
            while (frame_idx < frag.frames.size() && frag.frames[frame_idx].pos <= upto) {
                add_frame(widen(frag.frames[frame_idx].pauli, n_total));
                ++frame_idx;
            }
        };
        for (std::size_t gi = 0; gi < frag.gates.size(); ++gi) {
            flush_frames(static_cast<int>(gi));
            Gate g = frag.gates[gi];
            if (frag.rotation) {
                if (g.q1 == n + 1) g.q1 = rot_anc;
                if (g.q2 == n + 1) g.q2 = rot_anc;
            }
            const bool substitute =
                options.wft && (g.kind == GateKind::ZZ || g.kind == GateKind::XX);
            if (!substitute) {
                phys.gates.push_back(g);
                continue;
            }
            result.ancilla_trace.push_back(label);
            result.gadget_notes.push_back(
                GadgetNote{static_cast<int>(phys.gates.size()), g.kind, label});
            if (g.kind == GateKind::ZZ) {
                ++result.resources.zz_gadgets;
            } else {
                ++result.resources.xx_gadgets;
            }
            const Gadget gadget = wft_gadget(g.kind, label);
            const std::vector<int> map = {pair1, pair2, std::min(g.q1, g.q2),
                                          std::max(g.q1, g.q2)};
            for (const Gate& gg : gadget.gates) {
                Gate mapped = gg;
                mapped.q1 = map[static_cast<std::size_t>(gg.q1 - 1)];
                if (is_two_qubit(gg.kind)) {
                    mapped.q2 = map[static_cast<std::size_t>(gg.q2 - 1)];
                }
                phys.gates.push_back(mapped);
            }
            add_frame(relabel(gadget.recovery, map, n_total));
            label = flipped(label);
        }
        flush_frames(static_cast<int>(frag.gates.size()));
    }

    if (options.include_init_readout) {
        const Circuit readout = readout_circuit(n);
        for (Gate g : readout.gates) {
            if (g.q1 == n + 1) g.q1 = io_anc;
            if (g.q2 == n + 1) g.q2 = io_anc;
            phys.gates.push_back(g);
        }
    }

    // Final checks: code-basis or readout-basis stabilizers, then the
    // ancilla-state checks.
    auto bits_of = [&](std::initializer_list<int> qubits) {
        std::uint64_t m = 0;
        for (int q : qubits) m |= std::uint64_t{1} << (q - 1);
        return m;
    };
    if (options.include_init_readout) {
        std::uint64_t parity = bits_of({n});
        for (int q = 1; q <= n - 2; ++q) parity |= bits_of({q});
        phys.checks.push_back(SignedPauli(n_total, 0, parity));
        phys.checks.push_back(SignedPauli(n_total, bits_of({n - 1}), 0));
        phys.checks.push_back(SignedPauli(n_total, 0, bits_of({io_anc})));
    } else {
        for (const SignedPauli& s : qedc_stabilizers(n)) {
            phys.checks.push_back(widen(s, n_total));
        }
    }
    if (use_pair) {
        if (label == AncillaState::PhiPlus) {
            phys.checks.push_back(SignedPauli(n_total, bits_of({pair1, pair2}), 0));
            phys.checks.push_back(SignedPauli(n_total, 0, bits_of({pair1, pair2})));
        } else {
            phys.checks.push_back(SignedPauli(n_total, bits_of({pair1}), 0));
            phys.checks.push_back(SignedPauli(n_total, bits_of({pair2}), 0));
        }
    }
    if (any_rotation) {
        phys.checks.push_back(SignedPauli(n_total, 0, bits_of({rot_anc})));
    }

    phys = phys.canonical();
    phys.validate();

    result.resources.n_physical = n;
    result.resources.n_ancillas = 4;
    result.resources.gate_count = phys.gate_count();
    result.resources.layer_count = layer_count(phys);
    const double n_rate = n + 4;
    result.resources.code_rate = (n_rate - 6) / n_rate;
    return result;
}

std::string resource_report(const CompilationResult& result) {
    const CompileResources& r = result.resources;
    std::ostringstream out;
    const int n_counted = r.n_physical + r.n_ancillas;
    out << "code qubits:        " << r.n_physical << " (" << r.n_physical - 2
        << " logical + 2 checks)\n";
    out << "ancilla budget:     " << r.n_ancillas
        << " (gadget pair, rotation, init/readout)\n";
    out << "code rate:          (" << n_counted << " - 6) / " << n_counted << " = "
        << format_sig12(r.code_rate) << "\n";
    out << "gates:              " << r.gate_count << "\n";
    out << "layers:             " << r.layer_count << "\n";
    out << "gadgets:            ZZ " << r.zz_gadgets << ", XX " << r.xx_gadgets << "\n";
    return out.str();
}

std::string emit(const CompilationResult& result, EmitFormat format) {
    if (format == EmitFormat::CsvSummary) {
        const CompileResources& r = result.resources;
        std::ostringstream out;
        out << "n_physical,n_ancillas,gate_count,layer_count,code_rate,zz_gadgets,"
               "xx_gadgets\n";
        out << r.n_physical << ',' << r.n_ancillas << ',' << r.gate_count << ','
            << r.layer_count << ',' << format_sig12(r.code_rate) << ',' << r.zz_gadgets << ','
            << r.xx_gadgets << "\n";
        return out.str();
    }
    std::map<int, std::string> comments;
    for (const GadgetNote& note : result.gadget_notes) {
        comments[note.gate_pos] =
            "gadget " + gate_kind_name(note.kind) + " " + ancilla_state_name(note.input);
    }
    return emit_circuit(result.physical, comments);
}

}  // namespace qedc
