#include "qedc/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qedc {

AncillaState flipped(AncillaState s) {
    return s == AncillaState::PhiPlus ? AncillaState::PlusPlus : AncillaState::PhiPlus;
}

std::string ancilla_state_name(AncillaState s) {
    return s == AncillaState::PhiPlus ? "PhiPlus" : "PlusPlus";
}

AncillaState ancilla_state_from_name(const std::string& name) {
    if (name == "PhiPlus") return AncillaState::PhiPlus;
    if (name == "PlusPlus") return AncillaState::PlusPlus;
    throw std::invalid_argument("unknown ancilla state '" + name + "'");
}

namespace {

std::string prep_kind_name(PrepKind k) {
    switch (k) {
        case PrepKind::Zero: return "zero";
        case PrepKind::Plus: return "plus";
        case PrepKind::PhiPlus: return "phiplus";
        case PrepKind::PlusPlus: return "plusplus";
        case PrepKind::Resource: return "resource";
    }
    throw std::logic_error("unreachable prep kind");
}

std::optional<PrepKind> prep_kind_from_name(const std::string& name) {
    if (name == "zero") return PrepKind::Zero;
    if (name == "plus") return PrepKind::Plus;
    if (name == "phiplus") return PrepKind::PhiPlus;
    if (name == "plusplus") return PrepKind::PlusPlus;
    if (name == "resource") return PrepKind::Resource;
    return std::nullopt;
}

bool pair_kind(PrepKind k) { return k == PrepKind::PhiPlus || k == PrepKind::PlusPlus; }

}  // namespace

std::vector<int> Circuit::check_qubits() const {
    std::set<int> taken(data.begin(), data.end());
    taken.insert(ancilla.begin(), ancilla.end());
    std::vector<int> out;
    for (int q = 1; q <= n; ++q) {
        if (!taken.count(q)) out.push_back(q);
    }
    return out;
}

int Circuit::two_qubit_gate_count() const {
    int c = 0;
    for (const Gate& g : gates) {
        if (!is_measurement(g.kind) && is_two_qubit(g.kind)) ++c;
    }
    return c;
}

int Circuit::single_qubit_gate_count() const {
    int c = 0;
    for (const Gate& g : gates) {
        if (!is_measurement(g.kind) && !is_two_qubit(g.kind)) ++c;
    }
    return c;
}

int Circuit::gate_count() const { return two_qubit_gate_count() + single_qubit_gate_count(); }

void Circuit::validate() const {
    if (n < 1 || n > 64) throw std::invalid_argument("circuit: n must be 1..64");
    auto check_index = [&](int q, const char* what) {
        if (q < 1 || q > n) {
            throw std::invalid_argument(std::string("circuit: ") + what + " qubit " +
                                        std::to_string(q) + " outside 1.." + std::to_string(n));
        }
    };
    std::set<int> roles;
    for (int q : data) {
        check_index(q, "data");
        if (!roles.insert(q).second) throw std::invalid_argument("circuit: duplicate role qubit");
    }
    for (int q : ancilla) {
        check_index(q, "ancilla");
        if (!roles.insert(q).second) throw std::invalid_argument("circuit: duplicate role qubit");
    }
    bool measuring = false;
    for (const Gate& g : gates) {
        check_index(g.q1, "gate");
        if (is_two_qubit(g.kind)) check_index(g.q2, "gate");
        if (is_measurement(g.kind)) {
            measuring = true;
        } else if (measuring) {
            throw std::invalid_argument("circuit: unitary gate after a measurement");
        }
    }
    for (const auto& p : checks) {
        if (p.n != n) throw std::invalid_argument("circuit: check operator qubit count differs");
    }
    std::set<int> prepped;
    for (const auto& p : preps) {
        std::size_t want = pair_kind(p.kind) ? 2 : 1;
        if (p.qubits.size() != want) {
            throw std::invalid_argument("circuit: prep '" + prep_kind_name(p.kind) +
                                        "' expects " + std::to_string(want) + " qubit(s)");
        }
        for (int q : p.qubits) {
            check_index(q, "prep");
            if (!prepped.insert(q).second) {
                throw std::invalid_argument("circuit: qubit " + std::to_string(q) +
                                            " prepared twice");
            }
        }
        if (p.kind != PrepKind::Resource && p.angle != 0) {
            throw std::invalid_argument("circuit: only resource preps take an angle");
        }
    }
    int ngates = static_cast<int>(gates.size());
    for (const auto& f : frame) {
        if (f.pos < 0 || f.pos > ngates) {
            throw std::invalid_argument("circuit: frame position out of range");
        }
        if (f.pauli.n != n) throw std::invalid_argument("circuit: frame Pauli qubit count differs");
    }
}

Circuit Circuit::canonical() const {
    Circuit c = *this;
    std::sort(c.data.begin(), c.data.end());
    std::sort(c.ancilla.begin(), c.ancilla.end());
    std::sort(c.preps.begin(), c.preps.end(),
              [](const Prep& a, const Prep& b) { return a.qubits.front() < b.qubits.front(); });
    std::stable_sort(c.frame.begin(), c.frame.end(),
                     [](const FrameOp& a, const FrameOp& b) { return a.pos < b.pos; });
    return c;
}

int layer_count(const Circuit& c) {
    // Two-qubit gates each occupy one layer, in order.  A single-qubit gate
    // joins the preceding two-qubit layer if disjoint from it, else the
    // following one, else it takes a layer of its own.
    struct Layer {
        std::set<int> qubits;
    };
    std::vector<Layer> layers;
    std::vector<const Gate*> pending;  // single-qubit gates waiting for the next layer
    int extra = 0;
    auto flush_pending = [&](Layer* next) {
        for (const Gate* g : pending) {
            if (next && !next->qubits.count(g->q1)) {
                next->qubits.insert(g->q1);
            } else {
                ++extra;
            }
        }
        pending.clear();
    };
    for (const Gate& g : c.gates) {
        if (is_measurement(g.kind)) continue;
        if (is_two_qubit(g.kind)) {
            Layer layer;
            layer.qubits = {g.q1, g.q2};
            flush_pending(&layer);
            layers.push_back(std::move(layer));
        } else {
            if (!layers.empty() && !layers.back().qubits.count(g.q1)) {
                layers.back().qubits.insert(g.q1);
            } else {
                pending.push_back(&g);
            }
        }
    }
    flush_pending(nullptr);
    return static_cast<int>(layers.size()) + extra;
}

CliffordTableau circuit_tableau(const Circuit& c) {
    CliffordTableau t = CliffordTableau::identity(c.n);
    for (const Gate& g : c.gates) {
        if (is_measurement(g.kind)) continue;
        if (!is_clifford(g.kind)) {
            throw std::invalid_argument("circuit_tableau: non-Clifford gate " +
                                        gate_kind_name(g.kind));
        }
        t = compose(t, gate_tableau(g, c.n));
    }
    return t;
}

SignedPauli conjugate_through(const Circuit& c, std::size_t from, const SignedPauli& p,
                              bool rz_transparent) {
    SignedPauli cur = p;
    std::size_t frame_idx = 0;
    // Frame entries with pos <= from have already acted.
    while (frame_idx < c.frame.size() && c.frame[frame_idx].pos <= static_cast<int>(from)) {
        ++frame_idx;
    }
    for (std::size_t i = from; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        if (is_measurement(g.kind)) {
            // Measurements terminate propagation for their qubits; the Pauli
            // reaching them is what the checks see.
        } else if (g.kind == GateKind::RZ) {
            if (!rz_transparent && cur.x_bit(g.q1)) {
                throw std::invalid_argument(
                    "conjugate_through: Pauli anticommutes with RZ target (non-Clifford)");
            }
            // Z-type component on the target commutes: passes unchanged.
        } else {
            cur = conjugate_signed(g, cur);
        }
        while (frame_idx < c.frame.size() && c.frame[frame_idx].pos == static_cast<int>(i) + 1) {
            // Conjugation by a Pauli F: P -> F P F^dag = (-1)^<F,P> P.
            if (symplectic_inner_product(c.frame[frame_idx].pauli, cur) == 1) {
                cur.phase = (cur.phase + 2) % 4;
            }
            ++frame_idx;
        }
    }
    return cur;
}

ParseError::ParseError(int line_, int column_, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_) + ", column " +
                         std::to_string(column_) + ": " + msg),
      line(line_),
      column(column_) {}

namespace {

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

int parse_int(const Token& t, int line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(t.text, &used);
        if (used != t.text.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, t.column, "expected an integer, got '" + t.text + "'");
    }
}

double parse_double(const Token& t, int line) {
    try {
        std::size_t used = 0;
        double v = std::stod(t.text, &used);
        if (used != t.text.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, t.column, "expected a number, got '" + t.text + "'");
    }
}

SignedPauli parse_pauli_token(const Token& t, int line, int n) {
    try {
        SignedPauli p = SignedPauli::from_string(t.text);
        if (n != 0 && p.n != n) {
            throw std::invalid_argument("Pauli literal has " + std::to_string(p.n) +
                                        " letters, circuit has " + std::to_string(n) + " qubits");
        }
        return p;
    } catch (const std::exception& e) {
        throw ParseError(line, t.column, e.what());
    }
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
    Circuit c;
    bool saw_n = false;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::vector<Token> tok = tokenize(raw);
        if (tok.empty()) continue;
        const std::string& head = tok[0].text;
        auto need_n = [&]() {
            if (!saw_n) throw ParseError(lineno, tok[0].column, "'n' must come first");
        };
        if (head == "n") {
            if (saw_n) throw ParseError(lineno, tok[0].column, "duplicate 'n' line");
            if (tok.size() != 2) throw ParseError(lineno, tok[0].column, "usage: n <qubits>");
            c.n = parse_int(tok[1], lineno);
            if (c.n < 1 || c.n > 64) throw ParseError(lineno, tok[1].column, "n must be 1..64");
            saw_n = true;
        } else if (head == "data" || head == "ancilla") {
            need_n();
            std::vector<int>& dst = head == "data" ? c.data : c.ancilla;
            if (tok.size() < 2) throw ParseError(lineno, tok[0].column, "empty index list");
            for (std::size_t i = 1; i < tok.size(); ++i) dst.push_back(parse_int(tok[i], lineno));
        } else if (head == "checks") {
            need_n();
            if (tok.size() < 2) throw ParseError(lineno, tok[0].column, "empty check list");
            for (std::size_t i = 1; i < tok.size(); ++i) {
                c.checks.push_back(parse_pauli_token(tok[i], lineno, c.n));
            }
        } else if (head == "prep") {
            need_n();
            if (tok.size() < 3) {
                throw ParseError(lineno, tok[0].column, "usage: prep <qubit(s)> <kind> [angle]");
            }
            // The kind is the first non-integer token.
            std::size_t k = 1;
            std::vector<int> qubits;
            while (k < tok.size() && !prep_kind_from_name(tok[k].text)) {
                qubits.push_back(parse_int(tok[k], lineno));
                ++k;
            }
            if (k == tok.size()) throw ParseError(lineno, tok.back().column, "missing prep kind");
            Prep p;
            p.qubits = std::move(qubits);
            p.kind = *prep_kind_from_name(tok[k].text);
            ++k;
            if (p.kind == PrepKind::Resource) {
                if (k != tok.size() - 1) {
                    throw ParseError(lineno, tok[0].column, "resource prep needs an angle");
                }
                p.angle = parse_double(tok[k], lineno);
            } else if (k != tok.size()) {
                throw ParseError(lineno, tok[k].column, "unexpected token after prep kind");
            }
            c.preps.push_back(std::move(p));
        } else if (head == "frame") {
            need_n();
            if (tok.size() != 3) {
                throw ParseError(lineno, tok[0].column, "usage: frame <pos> <pauli>");
            }
            FrameOp f;
            f.pos = parse_int(tok[1], lineno);
            f.pauli = parse_pauli_token(tok[2], lineno, c.n);
            c.frame.push_back(std::move(f));
        } else {
            need_n();
            GateKind kind;
            try {
                kind = gate_kind_from_name(head);
            } catch (const std::exception& e) {
                throw ParseError(lineno, tok[0].column, e.what());
            }
            std::size_t want = is_two_qubit(kind) ? 3 : 2;
            if (kind == GateKind::RZ) want = 3;  // RZ <qubit> <angle>
            if (tok.size() != want) {
                throw ParseError(lineno, tok[0].column,
                                 "wrong argument count for " + head);
            }
            try {
                if (kind == GateKind::RZ) {
                    c.gates.push_back(
                        make_gate(kind, parse_int(tok[1], lineno), 0, parse_double(tok[2], lineno)));
                } else if (is_two_qubit(kind)) {
                    c.gates.push_back(
                        make_gate(kind, parse_int(tok[1], lineno), parse_int(tok[2], lineno)));
                } else {
                    c.gates.push_back(make_gate(kind, parse_int(tok[1], lineno)));
                }
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception& e) {
                throw ParseError(lineno, tok[0].column, e.what());
            }
        }
    }
    if (!saw_n) throw ParseError(1, 1, "missing 'n' line");
    try {
        c.validate();
    } catch (const std::exception& e) {
        throw ParseError(lineno, 1, e.what());
    }
    return c.canonical();
}

std::string format_angle(double angle) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", angle);
    return buf;
}

std::string emit_circuit(const Circuit& circuit,
                         const std::map<int, std::string>& gate_comments) {
    Circuit c = circuit.canonical();
    std::ostringstream out;
    out << "n " << c.n << "\n";
    auto emit_list = [&](const char* name, const std::vector<int>& v) {
        if (v.empty()) return;
        out << name;
        for (int q : v) out << ' ' << q;
        out << "\n";
    };
    emit_list("data", c.data);
    emit_list("ancilla", c.ancilla);
    if (!c.checks.empty()) {
        out << "checks";
        for (const auto& p : c.checks) out << ' ' << p.to_string();
        out << "\n";
    }
    for (const auto& p : c.preps) {
        out << "prep";
        for (int q : p.qubits) out << ' ' << q;
        out << ' ' << prep_kind_name(p.kind);
        if (p.kind == PrepKind::Resource) out << ' ' << format_angle(p.angle);
        out << "\n";
    }
    std::size_t frame_idx = 0;
    auto emit_frames_at = [&](int pos) {
        while (frame_idx < c.frame.size() && c.frame[frame_idx].pos == pos) {
            out << "frame " << pos << ' ' << c.frame[frame_idx].pauli.to_string() << "\n";
            ++frame_idx;
        }
    };
    emit_frames_at(0);
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        if (auto it = gate_comments.find(static_cast<int>(i)); it != gate_comments.end()) {
            out << "# " << it->second << "\n";
        }
        out << gate_kind_name(g.kind) << ' ' << g.q1;
        if (is_two_qubit(g.kind)) out << ' ' << g.q2;
        if (g.kind == GateKind::RZ) out << ' ' << format_angle(g.angle);
        out << "\n";
        emit_frames_at(static_cast<int>(i) + 1);
    }
    return out.str();
}

}  // namespace qedc
