#include "doctest.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "qedc/circuit.hpp"
#include "qedc/code.hpp"
#include "qedc/compiler.hpp"
#include "qedc/dense.hpp"
#include "qedc/fault.hpp"
#include "qedc/gate.hpp"
#include "qedc/gate_matrices.hpp"
#include "qedc/tableau.hpp"

using namespace qedc;

/*
 * Acceptance gate: one check per release criterion, each reporting a single
 * [PASS]/[FAIL] line (with its runtime when the criterion carries a time
 * budget).  Every condition also lands in a doctest assertion so the binary
 * fails loudly and precisely.
 */

namespace {

class Criterion {
  public:
    explicit Criterion(std::string label) : label_(std::move(label)) {
        start_ = std::chrono::steady_clock::now();
    }

    ~Criterion() {
        std::printf("[%s] %s (%.2fs)\n", ok_ ? "PASS" : "FAIL", label_.c_str(), elapsed());
        std::fflush(stdout);
    }

    void expect(bool condition, const char* what) {
        CHECK_MESSAGE(condition, what);
        ok_ = ok_ && condition;
    }

    void expect_time_below(double seconds) {
        const double t = elapsed();
        CHECK_MESSAGE(t < seconds, "time budget exceeded: " << t << "s");
        ok_ = ok_ && t < seconds;
    }

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::string label_;
    bool ok_ = true;
    std::chrono::steady_clock::time_point start_;
};

std::vector<std::vector<int>> bit_rows(const std::vector<std::string>& rows) {
    std::vector<std::vector<int>> out;
    for (const std::string& r : rows) {
        std::vector<int> bits;
        for (char ch : r) bits.push_back(ch - '0');
        out.push_back(std::move(bits));
    }
    return out;
}

Circuit lower_wft(const char* text) {
    CompileOptions options;
    options.wft = true;
    return lower(parse_program(text), options).physical;
}

Eigen::MatrixXcd to_eigen2(const Mat2& m) {
    Eigen::MatrixXcd out(2, 2);
    out << m[0], m[1], m[2], m[3];
    return out;
}

Eigen::MatrixXcd to_eigen4(const Mat4& m) {
    Eigen::MatrixXcd out(4, 4);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) out(r, c) = m[static_cast<std::size_t>(4 * r + c)];
    }
    return out;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Eigen::MatrixXcd pauli_matrix(const SignedPauli& p) {
    const int dim = 1 << p.n;
    Eigen::MatrixXcd out(dim, dim);
    for (int col = 0; col < dim; ++col) {
        StateVector s = basis_state(p.n, static_cast<std::uint64_t>(col));
        apply_pauli(s, p);
        out.col(col) = s.amps;
    }
    return out;
}

bool tallies_identical(const FaultTally& a, const FaultTally& b) {
    if (a.n_locations != b.n_locations || a.n_single != b.n_single ||
        a.n_two != b.n_two || a.k_max != b.k_max || a.orders.size() != b.orders.size()) {
        return false;
    }
    for (std::size_t k = 0; k < a.orders.size(); ++k) {
        if (a.orders[k].total != b.orders[k].total ||
            a.orders[k].undetectable != b.orders[k].undetectable ||
            a.orders[k].cells.size() != b.orders[k].cells.size()) {
            return false;
        }
        for (std::size_t i = 0; i < a.orders[k].cells.size(); ++i) {
            const ArityCell& x = a.orders[k].cells[i];
            const ArityCell& y = b.orders[k].cells[i];
            if (x.singles != y.singles || x.twos != y.twos || x.total != y.total ||
                x.undetectable != y.undetectable) {
                return false;
            }
        }
    }
    return true;
}

double fitted_slope(const std::vector<double>& p, const std::vector<double>& u) {
    // Least-squares slope in log-log coordinates.
    const std::size_t n = p.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = std::log(p[i]);
        const double y = std::log(u[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_CASE("criterion 01: gadget single-fault census") {
    Criterion c("01 every gadget variant: 123 single faults, none undetectable");
    const GateKind kinds[] = {GateKind::ZZ, GateKind::XX};
    const AncillaState states[] = {AncillaState::PhiPlus, AncillaState::PlusPlus};
    for (GateKind kind : kinds) {
        for (AncillaState in : states) {
            WeakFtReport report = check_weak_ft(wft_gadget(kind, in).standalone());
            c.expect(report.total == 123, "single-fault census must count 123 cases");
            c.expect(report.undetectable.empty(), "no single fault may evade the checks");
        }
    }
    c.expect_time_below(1.0);
}

TEST_CASE("criterion 02: second-order census of the fault-tolerant Hadamard") {
    Criterion c("02 fault-tolerant Hadamard pair census: 65367 / 3108 / 62259");
    FaultTally t = tally_orders(lower_wft("H 1\n"), 2, 1);  // single worker
    c.expect(t.order(2).total == 65367, "pair combinations");
    c.expect(t.order(2).undetectable == 3108, "harmful pairs");
    c.expect(t.order(2).detectable() == 62259, "flagged-or-harmless pairs");
    c.expect(t.order(1).undetectable == 0, "single faults all caught");
    c.expect_time_below(10.0);
}

TEST_CASE("criterion 03: reference matrices and signed logical evolution") {
    Criterion c("03 reference symplectic matrices and logical evolutions");
    c.expect(gate_tableau(make_gate(GateKind::ZZ, 1, 4), 4) ==
                 CliffordTableau::from_rows(
                     4, bit_rows({"10001001", "01000000", "00100000", "00011001",
                                  "00001000", "00000100", "00000010", "00000001"})),
             "ZZ(1,4) matrix");
    c.expect(gate_tableau(make_gate(GateKind::XX, 1, 3), 4) ==
                 CliffordTableau::from_rows(
                     4, bit_rows({"10000000", "01000000", "00100000", "00010000",
                                  "10101000", "00000100", "10100010", "00000001"})),
             "XX(1,3) matrix");
    Circuit h = encoded_hadamard(1, 4, false);
    c.expect(circuit_tableau(h) ==
                 CliffordTableau::from_rows(
                     4, bit_rows({"00101001", "01000000", "00100000", "10111001",
                                  "10100001", "00000100", "10101011", "00000001"})),
             "composed Hadamard matrix");
    c.expect(circuit_tableau(wft_zz(AncillaState::PhiPlus).standalone()) ==
                 CliffordTableau::from_rows(
                     4, bit_rows({"00001111", "11001111", "10100011", "10010011",
                                  "10001011", "11001011", "00000010", "00000001"})),
             "gadget circuit matrix");

    // Stepwise evolution of the addressed logical pair.
    SignedPauli px = SignedPauli::from_string("XIXI");
    const char* steps[] = {"YIXZ", "ZIIZ", "ZIIZ"};
    for (int i = 0; i < 3; ++i) {
        px = conjugate_signed(h.gates[static_cast<std::size_t>(i)], px);
        c.expect(px.same_bits(SignedPauli::from_string(steps[i])), "evolution step");
    }
    c.expect(conjugate_through(h, 0, SignedPauli::from_string("XIXI")) ==
                 SignedPauli::from_string("-ZIIZ"),
             "uncorrected swap picks up a minus sign");
    c.expect(conjugate_through(encoded_hadamard(1, 4, true), 0,
                               SignedPauli::from_string("XIXI")) ==
                 SignedPauli::from_string("ZIIZ"),
             "frame corrections restore the plus sign");

    // Generator-matrix evolution through the full gadget circuit.
    CliffordTableau t = circuit_tableau(wft_zz(AncillaState::PhiPlus).standalone());
    const char* gen_in[] = {"XXII", "ZZII", "IIXI", "IIIX", "IIZI", "IIIZ"};
    const char* gen_out[] = {"XXII", "IXII", "XIYZ", "XIZY", "IIZI", "IIIZ"};
    for (int i = 0; i < 6; ++i) {
        c.expect(apply_tableau(t, SignedPauli::from_string(gen_in[i]))
                     .same_bits(SignedPauli::from_string(gen_out[i])),
                 "generator image");
    }
}

TEST_CASE("criterion 04: rotation conjugation rules, symplectic and dense") {
    Criterion c("04 ZZ/XX conjugation fixtures agree on both routes");
    struct Fix {
        GateKind kind;
        const char* in;
        const char* out;
    };
    const Fix fixes[] = {{GateKind::ZZ, "XI", "YZ"},
                         {GateKind::ZZ, "YZ", "-XI"},
                         {GateKind::XX, "ZI", "YX"},
                         {GateKind::XX, "YX", "-ZI"}};
    for (const Fix& f : fixes) {
        Gate g = make_gate(f.kind, 1, 2);
        c.expect(conjugate_signed(g, SignedPauli::from_string(f.in)) ==
                     SignedPauli::from_string(f.out),
                 "symplectic route");
        Eigen::MatrixXcd u = f.kind == GateKind::ZZ ? to_eigen4(mat_zz()) : to_eigen4(mat_xx());
        Eigen::MatrixXcd lhs = u * pauli_matrix(SignedPauli::from_string(f.in)) * u.adjoint();
        c.expect((lhs - pauli_matrix(SignedPauli::from_string(f.out))).cwiseAbs().maxCoeff() <
                     1e-12,
                 "dense route");
    }
}

TEST_CASE("criterion 05: gadget recovery table and dense gadget oracle") {
    Criterion c("05 recovery operations verified densely to 1e-10");
    c.expect(gadget_recovery(GateKind::ZZ, AncillaState::PhiPlus) ==
                 SignedPauli::from_string("ZIZI"),
             "ZZ from the entangled pair");
    c.expect(gadget_recovery(GateKind::XX, AncillaState::PhiPlus) ==
                 SignedPauli::from_string("IZYI"),
             "XX from the entangled pair");
    c.expect(gadget_recovery(GateKind::ZZ, AncillaState::PlusPlus) ==
                 SignedPauli::from_string("XIXI"),
             "ZZ from the product pair");
    c.expect(gadget_recovery(GateKind::XX, AncillaState::PlusPlus) ==
                 SignedPauli::from_string("YIYI"),
             "XX from the product pair");
    const GateKind kinds[] = {GateKind::ZZ, GateKind::XX};
    const AncillaState states[] = {AncillaState::PhiPlus, AncillaState::PlusPlus};
    for (GateKind kind : kinds) {
        for (AncillaState in : states) {
            c.expect(verify_gadget(wft_gadget(kind, in), 1e-10), "dense gadget action");
        }
    }
}

TEST_CASE("criterion 06: compiled resource counts") {
    Criterion c("06 gate/layer counts: CNOT 63/56 gadgetized, 7 bare; Hadamard 27");
    CompileOptions wft;
    wft.wft = true;
    CompileResources cnot = lower(parse_program("CNOT 1 2\n"), wft).resources;
    c.expect(cnot.gate_count == 63, "gadgetized CNOT gates");
    c.expect(cnot.layer_count == 56, "gadgetized CNOT layers");
    CompileResources bare = lower(parse_program("CNOT 1 2\n")).resources;
    c.expect(bare.gate_count == 7, "bare encoded CNOT gates");
    CompileResources h = lower(parse_program("H 1\n"), wft).resources;
    c.expect(h.gate_count == 27, "gadgetized Hadamard gates");
}

TEST_CASE("criterion 07: error-probability scaling and suppression") {
    Criterion c("07 undetectable-probability slopes 2 vs 1 and the 10x gap");
    struct Family {
        const char* name;
        Circuit physical;
        Circuit encoded;
        Circuit wft;
    };
    Circuit phys_h;
    phys_h.n = 1;
    phys_h.data = {1};
    phys_h.gates = {make_gate(GateKind::H, 1)};
    Circuit phys_cnot;
    phys_cnot.n = 2;
    phys_cnot.data = {1, 2};
    phys_cnot.gates = {make_gate(GateKind::Cnot, 1, 2)};
    const Family families[] = {
        {"hadamard", phys_h, encoded_hadamard(1, 4), lower_wft("H 1\n")},
        {"cnot", phys_cnot, encoded_cnot_general(1, 2, 4), lower_wft("CNOT 1 2\n")},
    };
    const std::vector<double> grid = log_grid(1e-5, 1e-4, 5);
    for (const Family& f : families) {
        const FaultTally t_phys = tally_orders(f.physical, 3);
        const FaultTally t_enc = tally_orders(f.encoded, 3);
        const FaultTally t_wft = tally_orders(f.wft, 3, 4);
        std::vector<double> u_phys, u_enc, u_wft;
        for (double p : grid) {
            u_phys.push_back(undetectable_probability(t_phys, p));
            u_enc.push_back(undetectable_probability(t_enc, p));
            u_wft.push_back(undetectable_probability(t_wft, p));
        }
        c.expect(std::abs(fitted_slope(grid, u_wft) - 2.0) < 0.1,
                 "protected variant scales as p^2");
        c.expect(std::abs(fitted_slope(grid, u_phys) - 1.0) < 0.1,
                 "physical gate scales as p");
        c.expect(std::abs(fitted_slope(grid, u_enc) - 1.0) < 0.1,
                 "unprotected encoding scales as p");
        const double gap = undetectable_probability(t_enc, 1e-3) /
                           undetectable_probability(t_wft, 1e-3);
        c.expect(gap >= 10.0, "at p = 1e-3 the protected circuit wins 10x");
    }
}

TEST_CASE("criterion 08: rotation faults") {
    Criterion c("08 logical rotation has exactly three undetectable fault classes");
    WeakFtReport report = check_weak_ft(logical_rz(1, 4, 0.7));
    c.expect(report.undetectable.size() == 3, "three harmful single faults");
    for (const SingleFault& f : report.undetectable) {
        c.expect(f.final_pauli.same_bits(SignedPauli::from_string("ZIIZZ")),
                 "all reduce to logical dephasing times the ancilla Z");
    }
}

TEST_CASE("criterion 09: dense verification of encoded Cliffords and GHZ") {
    Criterion c("09 encoded Cliffords act as ideal logical gates; GHZ prepared");
    Eigen::MatrixXcd v = logical_isometry(4, logical_operators(4));
    const Eigen::MatrixXcd i2 = Eigen::MatrixXcd::Identity(2, 2);
    Eigen::MatrixXcd s2(2, 2);
    s2 << 1, 0, 0, cd(0, 1);
    struct Case {
        Circuit circ;
        Eigen::MatrixXcd ideal;
        const char* what;
    };
    const Case cases[] = {
        {encoded_hadamard(1, 4, true), kron(to_eigen2(mat_h()), i2), "Hadamard"},
        {encoded_phase(1, 4), kron(s2, i2), "phase"},
        {encoded_cnot(1, 2, 4), to_eigen4(mat_cnot()), "CNOT (swap form)"},
        {encoded_cnot_general(1, 2, 4), to_eigen4(mat_cnot()), "CNOT (native form)"},
        {encoded_swap(1, 2, 4), to_eigen4(mat_swap()), "SWAP"},
    };
    for (const Case& k : cases) {
        EncodedAction action = encoded_action(k.circ, v);
        c.expect(action.leakage < 1e-10, "no leakage from the code space");
        c.expect(equal_up_to_phase(action.logical, k.ideal, 1e-10), k.what);
    }
    for (int n : {4, 6}) {
        Circuit init = init_circuit(n);
        StateVector out = run_circuit(init, initial_state(init));
        MeasureResult flag = measure_qubit(out, n + 1, 'Z');
        StateVector want = tensor(ghz_state(n), zero_state(1));
        c.expect(fidelity(flag.post0, want) > 1 - 1e-12, "GHZ fidelity");
        c.expect(std::abs(flag.prob0 - 1.0) < 1e-12, "flag reads zero without faults");
    }
}

TEST_CASE("criterion 10: analog angle-error estimate") {
    Criterion c("10 Monte Carlo dephasing weight within 20% of sigma^2/4");
    for (double sigma : {0.01, 0.02, 0.05}) {
        const double estimate = analog_channel_estimate(0.85, sigma, 100000, 42);
        const double target = sigma * sigma / 4;
        c.expect(std::abs(estimate - target) < 0.2 * target, "estimate within 20%");
    }
    c.expect_time_below(5.0);
}

TEST_CASE("criterion 11: resource-state symmetrization") {
    Criterion c("11 symmetrized fidelity matches 1 - p/N to second order");
    for (int n : {2, 3}) {
        for (double p : {0.01, 0.02, 0.05}) {
            SymmetrizeResult r = symmetrize(n, p);
            c.expect(std::abs(r.fidelity - (1 - p / n)) < 2 * p * p, "fidelity bound");
            c.expect(r.projector_rank == n + 1, "projector rank");
        }
    }
}

TEST_CASE("criterion 12: rotation-branch simulation") {
    Criterion c("12 half/half branch probabilities and conjugate rotations");
    std::mt19937 rng(123);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.05, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        StateVector psi;
        psi.n = 1;
        psi.amps = Eigen::VectorXcd(2);
        psi.amps << cd(gauss(rng), gauss(rng)), cd(gauss(rng), gauss(rng));
        psi.amps.normalize();
        const double theta = angle(rng);
        RotationBranches branches = resource_rotation_sim(psi, theta);
        c.expect(std::abs(branches.prob0 - 0.5) < 1e-12, "branch probability 1/2");
        c.expect(std::abs(branches.prob1 - 0.5) < 1e-12, "branch probability 1/2");
        StateVector minus = psi;
        apply_matrix1(minus, mat_rz(-theta), 1);
        StateVector plus = psi;
        apply_matrix1(plus, mat_rz(theta), 1);
        c.expect(fidelity(branches.post0, minus) > 1 - 1e-12, "minus-angle branch");
        c.expect(fidelity(branches.post1, plus) > 1 - 1e-12, "plus-angle branch");
    }
}

TEST_CASE("criterion 13: deterministic parallel enumeration") {
    Criterion c("13 order-2/3 tallies bit-identical across 1, 4 and 8 workers");
    Circuit h = lower_wft("H 1\n");
    FaultTally h1 = tally_orders(h, 2, 1);
    c.expect(tallies_identical(h1, tally_orders(h, 2, 4)), "Hadamard, 4 workers");
    c.expect(tallies_identical(h1, tally_orders(h, 2, 8)), "Hadamard, 8 workers");
    Circuit cnot = lower_wft("CNOT 1 2\n");
    FaultTally c1 = tally_orders(cnot, 3, 1);
    c.expect(tallies_identical(c1, tally_orders(cnot, 3, 4)), "CNOT, 4 workers");
    c.expect(tallies_identical(c1, tally_orders(cnot, 3, 8)), "CNOT, 8 workers");
    Circuit rz = logical_rz(1, 4, 0.7);
    FaultTally r1 = tally_orders(rz, 3, 1);
    c.expect(tallies_identical(r1, tally_orders(rz, 3, 4)), "rotation, 4 workers");
    c.expect(tallies_identical(r1, tally_orders(rz, 3, 8)), "rotation, 8 workers");
}
