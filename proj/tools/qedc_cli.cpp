/*
 * qedc -- compile, verify and analyze weakly fault-tolerant circuits for the
 * [[n, n-2, 2]] error-detecting code.
 *
 * Subcommands:
 *   compile   lower a logical program to a physical circuit + resource report
 *   verify    classify every single-fault error of a circuit
 *   analyze   order-k fault tallies and derived probabilities
 *   sweep     CSV of undetectable-error probability and acceptance vs p
 *   oracle    dense-statevector cross-checks of the shipped constructions
 *
 * Exit codes: 0 success (verify: weakly fault-tolerant; oracle: all checks
 * pass), 1 verification/oracle failure, 2 usage or input errors.
 */

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qedc/code.hpp"
#include "qedc/compiler.hpp"
#include "qedc/dense.hpp"
#include "qedc/fault.hpp"

namespace {

using namespace qedc;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::uint64_t qbit(int q) { return std::uint64_t{1} << (q - 1); }

const char* kBuiltinNames =
    "zz-phiplus, zz-plusplus, xx-phiplus, xx-plusplus, wft-hadamard, wft-cnot, "
    "bare-hadamard, bare-cnot, bare-phase, logical-rz, bare-rz, init, readout, bell";

struct NamedCircuit {
    Circuit circuit;
    std::vector<SignedPauli> trivial;  // harmless-error generators, empty = checks
};

Circuit lower_single(LogicalOp op, int n) {
    LogicalProgram p;
    p.num_logical = n - 2;
    LogicalInstruction ins;
    ins.op = op;
    ins.j = 1;
    if (op == LogicalOp::Cnot) ins.k = 2;
    p.instructions = {ins};
    CompileOptions o;
    o.wft = true;
    return lower(p, o).physical;
}

NamedCircuit make_builtin(const std::string& name, int n, double theta) {
    if (n < 4 || n % 2 != 0) throw std::runtime_error("--n must be even and >= 4");
    if (name == "zz-phiplus") return {wft_zz(AncillaState::PhiPlus).standalone(), {}};
    if (name == "zz-plusplus") return {wft_zz(AncillaState::PlusPlus).standalone(), {}};
    if (name == "xx-phiplus") return {wft_xx(AncillaState::PhiPlus).standalone(), {}};
    if (name == "xx-plusplus") return {wft_xx(AncillaState::PlusPlus).standalone(), {}};
    if (name == "wft-hadamard") return {lower_single(LogicalOp::H, n), {}};
    if (name == "wft-cnot") return {lower_single(LogicalOp::Cnot, n), {}};
    if (name == "bare-hadamard") return {encoded_hadamard(1, n), {}};
    if (name == "bare-cnot") return {encoded_cnot_general(1, 2, n), {}};
    if (name == "bare-phase") return {encoded_phase(1, n), {}};
    if (name == "logical-rz") return {logical_rz(1, n, theta), {}};
    if (name == "bare-rz") return {bare_encoded_rz(1, n, theta), {}};
    if (name == "bell") return {bell_measurement(), {}};
    if (name == "init") {
        NamedCircuit out{init_circuit(n), {}};
        // The prepared state is GHZ_n |0>_a; its stabilizer group generates
        // the harmless final errors.
        for (int i = 1; i < n; ++i) {
            out.trivial.push_back(SignedPauli(n + 1, 0, qbit(i) | qbit(i + 1)));
        }
        out.trivial.push_back(SignedPauli(n + 1, (std::uint64_t{1} << n) - 1, 0));
        out.trivial.push_back(SignedPauli(n + 1, 0, qbit(n + 1)));
        return out;
    }
    if (name == "readout") {
        NamedCircuit out{readout_circuit(n), {}};
        // Errors diagonal in the measured bases never change an outcome.
        for (int q = 1; q <= n - 2; ++q) out.trivial.push_back(SignedPauli(n + 1, 0, qbit(q)));
        out.trivial.push_back(SignedPauli(n + 1, qbit(n - 1), 0));
        out.trivial.push_back(SignedPauli(n + 1, 0, qbit(n)));
        out.trivial.push_back(SignedPauli(n + 1, 0, qbit(n + 1)));
        return out;
    }
    throw std::runtime_error("unknown builtin '" + name + "' (known: " +
                             std::string(kBuiltinNames) + ")");
}

/* Shared input selection for verify/analyze: exactly one source. */
struct CircuitInput {
    std::string circuit_path;
    std::string builtin;
    std::string program_path;
    bool wft = false;
    bool include_init_readout = false;
    bool n4_special = false;
    int n = 4;
    double theta = 0.85;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--circuit", circuit_path, "physical circuit file");
        cmd->add_option("--builtin", builtin,
                        std::string("named fixture (") + kBuiltinNames + ")");
        cmd->add_option("--program", program_path, "logical program file to lower first");
        cmd->add_flag("--wft", wft, "lower --program with gadget substitution");
        cmd->add_flag("--include-init-readout", include_init_readout,
                      "lower --program with initialization and readout");
        cmd->add_flag("--n4-special", n4_special,
                      "lower --program with the four-qubit special constructions");
        cmd->add_option("--n", n, "code size for --builtin fixtures (even, >= 4)");
        cmd->add_option("--theta", theta, "rotation angle for rotation fixtures");
    }

    NamedCircuit load() const {
        const int sources = (!circuit_path.empty()) + (!builtin.empty()) +
                            (!program_path.empty());
        if (sources != 1) {
            throw std::runtime_error(
                "choose exactly one of --circuit, --builtin, --program");
        }
        if (!circuit_path.empty()) return {parse_circuit(read_file(circuit_path)), {}};
        if (!builtin.empty()) return make_builtin(builtin, n, theta);
        CompileOptions options;
        options.wft = wft;
        options.include_init_readout = include_init_readout;
        options.n4_special = n4_special;
        return {lower(parse_program(read_file(program_path)), options).physical, {}};
    }
};

// --------------------------------------------------------------- compile ---

struct CompileArgs {
    std::string program_path;
    std::string output_path;
    bool wft = false, include_init_readout = false, n4_special = false, csv = false;
};

int cmd_compile(const CompileArgs& args) {
    CompileOptions options;
    options.wft = args.wft;
    options.include_init_readout = args.include_init_readout;
    options.n4_special = args.n4_special;
    const CompilationResult result =
        lower(parse_program(read_file(args.program_path)), options);
    const std::string text = emit(result, EmitFormat::CircuitText);
    if (args.output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(args.output_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + args.output_path + "'");
        out << text;
    }
    std::cerr << (args.csv ? emit(result, EmitFormat::CsvSummary) : resource_report(result));
    return 0;
}

// ---------------------------------------------------------------- verify ---

struct VerifyArgs {
    CircuitInput input;
    bool include_preps = false;
};

int cmd_verify(const VerifyArgs& args) {
    const NamedCircuit named = args.input.load();
    const Circuit& c = named.circuit;
    WeakFtOptions options;
    options.include_preps = args.include_preps;
    options.trivial_generators = named.trivial;
    const WeakFtReport report = check_weak_ft(c, options);
    std::cout << "qubits:        " << c.n << "\n";
    std::cout << "gates:         " << c.gate_count() << "\n";
    std::cout << "faults:        " << report.total << "\n";
    std::cout << "detectable:    "
              << report.total - static_cast<long long>(report.undetectable.size()) -
                     static_cast<long long>(report.trivial.size())
              << "\n";
    std::cout << "trivial:       " << report.trivial.size() << "\n";
    std::cout << "undetectable:  " << report.undetectable.size() << "\n";
    std::size_t shown = 0;
    for (const SingleFault& f : report.undetectable) {
        if (shown++ == 8) {
            std::cout << "  ...\n";
            break;
        }
        std::cout << "  gate " << f.gate_index + 1 << ": " << f.inserted.to_string()
                  << " -> " << f.final_pauli.to_string() << "\n";
    }
    std::cout << "weakly fault-tolerant: " << (report.weakly_fault_tolerant() ? "yes" : "no")
              << "\n";
    return report.weakly_fault_tolerant() ? 0 : kExitFailure;
}

// --------------------------------------------------------------- analyze ---

struct AnalyzeArgs {
    CircuitInput input;
    int k_max = 2;
    int workers = 1;
    bool exact_weights = false;
    std::vector<double> probabilities;
};

int cmd_analyze(const AnalyzeArgs& args) {
    const NamedCircuit named = args.input.load();
    const FaultTally tally = tally_orders(named.circuit, args.k_max, args.workers);
    std::cout << "locations: " << tally.n_locations << " (" << tally.n_two
              << " two-qubit, " << tally.n_single << " single-qubit)\n";
    for (int k = 1; k <= tally.k_max; ++k) {
        const OrderTally& order = tally.order(k);
        std::cout << "order " << k << ": total " << order.total << ", undetectable "
                  << order.undetectable << ", detectable " << order.detectable() << "\n";
    }
    for (double p : args.probabilities) {
        std::cout << "p=" << format_sig12(p) << ": undetectable_prob="
                  << format_sig12(undetectable_probability(tally, p, args.exact_weights))
                  << " acceptance="
                  << format_sig12(post_selection_rate(tally, p, args.exact_weights)) << "\n";
    }
    return 0;
}

// ----------------------------------------------------------------- sweep ---

struct SweepArgs {
    std::string family = "all";
    double p_min = 1e-5, p_max = 1e-2;
    int points = 40;
    int k_max = 3;
    int workers = 1;
    bool exact_weights = false;
    int n = 4;
    double theta = 0.85;
};

int cmd_sweep(const SweepArgs& args) {
    if (!(args.p_min > 0 && args.p_min < args.p_max && args.p_max < 0.5)) {
        throw std::runtime_error("probability grid must satisfy 0 < pmin < pmax < 0.5");
    }
    std::vector<SweepEntry> entries;
    auto add_family = [&](const std::string& name) {
        Circuit physical;
        Circuit encoded;
        Circuit wft;
        if (name == "hadamard") {
            physical.n = 1;
            physical.data = {1};
            physical.gates = {make_gate(GateKind::H, 1)};
            encoded = encoded_hadamard(1, args.n);
            wft = lower_single(LogicalOp::H, args.n);
        } else if (name == "cnot") {
            physical.n = 2;
            physical.data = {1, 2};
            physical.gates = {make_gate(GateKind::Cnot, 1, 2)};
            encoded = encoded_cnot_general(1, 2, args.n);
            wft = lower_single(LogicalOp::Cnot, args.n);
        } else {
            physical.n = 1;
            physical.data = {1};
            physical.gates = {make_gate(GateKind::RZ, 1, 0, args.theta)};
            encoded = bare_encoded_rz(1, args.n, args.theta);
            wft = logical_rz(1, args.n, args.theta);
        }
        entries.push_back({"physical", name, physical});
        entries.push_back({"encoded", name, encoded});
        entries.push_back({"wft", name, wft});
    };
    if (args.family == "all") {
        add_family("hadamard");
        add_family("cnot");
        add_family("rotation");
    } else {
        add_family(args.family);
    }
    const std::vector<double> grid = log_grid(args.p_min, args.p_max, args.points);
    const std::vector<SweepRow> rows =
        sweep(entries, grid, args.k_max, args.exact_weights, args.workers);
    std::cout << sweep_csv(rows);
    return 0;
}

// ---------------------------------------------------------------- oracle ---

struct OracleArgs {
    std::string gadget_path;
    std::string kind;  // ZZ | XX
    std::uint64_t seed = 12345;
    double theta = 0.85;
};

struct OracleSuite {
    int passed = 0, failed = 0;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        if (ok) {
            ++passed;
            std::cout << "[PASS] " << name << "\n";
        } else {
            ++failed;
            std::cout << "[FAIL] " << name << (detail.empty() ? "" : ": " + detail) << "\n";
        }
    }
};

/* Dense matrix of an n-qubit signed Pauli. */
Eigen::MatrixXcd pauli_matrix(const SignedPauli& p) {
    const Eigen::Index size = Eigen::Index{1} << p.n;
    Eigen::MatrixXcd m(size, size);
    for (Eigen::Index col = 0; col < size; ++col) {
        StateVector s = basis_state(p.n, static_cast<std::uint64_t>(col));
        apply_pauli(s, p);
        m.col(col) = s.amps;
    }
    return m;
}

void check_gate_conjugation(OracleSuite& suite) {
    const std::vector<Gate> gates = {
        make_gate(GateKind::ZZ, 1, 2),  make_gate(GateKind::XX, 1, 2),
        make_gate(GateKind::YY, 1, 2),  make_gate(GateKind::Cnot, 1, 2),
        make_gate(GateKind::Swap, 1, 2), make_gate(GateKind::RX, 1),
        make_gate(GateKind::H, 1),      make_gate(GateKind::X, 1),
        make_gate(GateKind::Y, 1),      make_gate(GateKind::Z, 1)};
    double worst = 0;
    for (const Gate& g : gates) {
        const int n = is_two_qubit(g.kind) ? 2 : 1;
        Circuit c;
        c.n = n;
        c.data = {1};
        if (n == 2) c.data.push_back(2);
        c.gates = {g};
        const Eigen::MatrixXcd u = unitary_of(c);
        const std::uint64_t words = std::uint64_t{1} << n;
        for (std::uint64_t x = 0; x < words; ++x) {
            for (std::uint64_t z = 0; z < words; ++z) {
                for (int phase = 0; phase < 4; ++phase) {
                    const SignedPauli p(n, x, z, phase);
                    const SignedPauli q = conjugate_signed(g, p);
                    const double err =
                        (u * pauli_matrix(p) * u.adjoint() - pauli_matrix(q))
                            .cwiseAbs()
                            .maxCoeff();
                    worst = std::max(worst, err);
                }
            }
        }
    }
    suite.check("gate-conjugation-dense-agreement", worst < 1e-10,
                "max deviation " + format_sig12(worst));
}

void check_file_gadget(OracleSuite& suite, const std::string& path, const std::string& kind) {
    const Circuit c = parse_circuit(read_file(path));
    if (c.n != 4) throw std::runtime_error("gadget circuit must act on 4 qubits");
    AncillaState input = AncillaState::PhiPlus;
    bool found = false;
    for (const Prep& p : c.preps) {
        if (p.kind == PrepKind::PhiPlus || p.kind == PrepKind::PlusPlus) {
            input = p.kind == PrepKind::PhiPlus ? AncillaState::PhiPlus
                                                : AncillaState::PlusPlus;
            found = true;
        }
    }
    if (!found) throw std::runtime_error("gadget circuit lacks an ancilla-pair prep");
    const Mat4 target = kind == "ZZ" ? mat_zz() : mat_xx();
    const Eigen::MatrixXcd u = unitary_of(c);
    const StateVector anc_in = ancilla_pair_state(input);
    const StateVector anc_out = ancilla_pair_state(flipped(input));
    Eigen::MatrixXcd got(16, 4), want(16, 4);
    for (int d = 0; d < 4; ++d) {
        StateVector data = basis_state(2, static_cast<std::uint64_t>(d));
        got.col(d) = u * tensor(anc_in, data).amps;
        apply_matrix2(data, target, 1, 2);
        want.col(d) = tensor(anc_out, data).amps;
    }
    suite.check("gadget-action", equal_up_to_phase(got, want, 1e-10),
                "distance " + format_sig12(phase_distance(got, want)));
    const WeakFtReport report = check_weak_ft(c);
    suite.check("gadget-fault-detectability", report.weakly_fault_tolerant(),
                std::to_string(report.undetectable.size()) + " undetectable faults");
}

int cmd_oracle(const OracleArgs& args) {
    OracleSuite suite;
    if (!args.gadget_path.empty()) {
        check_file_gadget(suite, args.gadget_path, args.kind);
    } else {
        for (GateKind kind : {GateKind::ZZ, GateKind::XX}) {
            for (AncillaState input : {AncillaState::PhiPlus, AncillaState::PlusPlus}) {
                const std::string name = std::string("gadget-") +
                                         (kind == GateKind::ZZ ? "zz" : "xx") + "-" +
                                         (input == AncillaState::PhiPlus ? "phiplus"
                                                                         : "plusplus");
                suite.check(name, verify_gadget(wft_gadget(kind, input)));
            }
        }
    }

    check_gate_conjugation(suite);

    {
        const Eigen::MatrixXcd v = logical_isometry(4, logical_operators(4));
        const auto action_matches = [&](const Circuit& c, const Eigen::MatrixXcd& ideal) {
            const EncodedAction act = encoded_action(c, v);
            return act.leakage < 1e-10 && equal_up_to_phase(act.logical, ideal, 1e-10);
        };
        Eigen::MatrixXcd h2 = embed_unitary(
            (Eigen::MatrixXcd(2, 2) << 1, 1, 1, -1).finished() / std::sqrt(2.0), {1}, 2);
        Eigen::MatrixXcd s2 =
            embed_unitary((Eigen::MatrixXcd(2, 2) << 1, 0, 0, cd(0, 1)).finished(), {1}, 2);
        Eigen::MatrixXcd cnot(4, 4);
        cnot << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0;
        Eigen::MatrixXcd swap(4, 4);
        swap << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1;
        suite.check("encoded-hadamard-action", action_matches(encoded_hadamard(1, 4), h2));
        suite.check("encoded-phase-action", action_matches(encoded_phase(1, 4), s2));
        suite.check("encoded-cnot-action", action_matches(encoded_cnot_general(1, 2, 4), cnot));
        suite.check("encoded-swap-action", action_matches(encoded_swap(1, 2, 4), swap));

        const Eigen::MatrixXcd v422 = logical_isometry(4, logical_operators_422());
        const auto action_422 = [&](const Circuit& c, const Eigen::MatrixXcd& ideal) {
            const EncodedAction act = encoded_action(c, v422);
            return act.leakage < 1e-10 && equal_up_to_phase(act.logical, ideal, 1e-10);
        };
        suite.check("n4-special-cnot-action", action_422(encoded_cnot(1, 2, 4), cnot));
        suite.check("n4-special-hadamard-action", action_422(encoded_hadamard_422(1), h2));
        suite.check("n4-special-phase-action", action_422(encoded_phase_422(1), s2));
        suite.check("n4-special-swap-action", action_422(encoded_swap_422(), swap));
    }

    for (int n : {4, 6}) {
        const Circuit init = init_circuit(n);
        const StateVector out = run_circuit(init, initial_state(init));
        const StateVector want = tensor(ghz_state(n), zero_state(1));
        suite.check("ghz-init-n" + std::to_string(n), fidelity(out, want) > 1 - 1e-12,
                    "fidelity " + format_sig12(fidelity(out, want)));
    }

    {
        bool ok = true;
        std::string detail;
        std::mt19937_64 rng(args.seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int trial = 0; trial < 5 && ok; ++trial) {
            const double a = unit(rng), b = unit(rng), phase = unit(rng) * 6.283185307;
            StateVector psi = zero_state(1);
            psi.amps[0] = std::sqrt(a / (a + b));
            psi.amps[1] = std::polar(std::sqrt(b / (a + b)), phase);
            const double theta = unit(rng) * 3.141592653589793;
            const RotationBranches branches = resource_rotation_sim(psi, theta);
            if (std::abs(branches.prob0 - 0.5) > 1e-12 ||
                std::abs(branches.prob1 - 0.5) > 1e-12) {
                ok = false;
                detail = "branch probability deviates from 1/2";
                break;
            }
            StateVector minus = psi, plus = psi;
            apply_matrix1(minus, mat_rz(-theta), 1);
            apply_matrix1(plus, mat_rz(theta), 1);
            if (!equal_up_to_phase(branches.post0.amps, minus.amps, 1e-10) ||
                !equal_up_to_phase(branches.post1.amps, plus.amps, 1e-10)) {
                ok = false;
                detail = "branch state mismatch";
            }
        }
        suite.check("rotation-branches", ok, detail);
    }

    for (int copies : {2, 3}) {
        const double p = 0.02;
        const SymmetrizeResult r = symmetrize(copies, p, args.theta);
        const double deviation = std::abs(r.fidelity - (1 - p / copies));
        suite.check("symmetrize-n" + std::to_string(copies),
                    r.projector_rank == copies + 1 && deviation < 2 * p * p,
                    "deviation " + format_sig12(deviation));
    }

    {
        const double sigma = 0.02;
        const double expected = sigma * sigma / 4;
        const double estimate = analog_channel_estimate(args.theta, sigma, 100000, args.seed);
        suite.check("analog-estimate", std::abs(estimate - expected) < 0.2 * expected,
                    "estimate " + format_sig12(estimate) + " vs " + format_sig12(expected));
    }

    {
        StateVector phi = ancilla_pair_state(AncillaState::PhiPlus);
        StateVector singlet = zero_state(2);
        singlet.amps << 0, 1 / std::numbers::sqrt2, -1 / std::numbers::sqrt2, 0;
        const SwapSymmetry sym = swap_symmetry_measure(phi);
        const SwapSymmetry anti = swap_symmetry_measure(singlet);
        const SwapSymmetry mixed = swap_symmetry_measure(basis_state(2, 1));
        const bool ok = std::abs(sym.prob_plus - 1) < 1e-12 &&
                        std::abs(anti.prob_minus - 1) < 1e-12 &&
                        std::abs(mixed.prob_plus - 0.5) < 1e-12 &&
                        equal_up_to_phase(anti.post_minus.amps, singlet.amps, 1e-10);
        suite.check("swap-symmetry", ok);
    }

    std::cout << "oracle: " << suite.passed << "/" << suite.passed + suite.failed
              << " checks passed\n";
    return suite.failed == 0 ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weakly fault-tolerant circuits for the [[n, n-2, 2]] code"};
    app.require_subcommand(1);

    CompileArgs compile_args;
    CLI::App* compile_cmd =
        app.add_subcommand("compile", "lower a logical program to a physical circuit");
    compile_cmd->add_option("program", compile_args.program_path, "logical program file")
        ->required();
    compile_cmd->add_flag("--wft", compile_args.wft,
                          "substitute error-detecting gadgets for ZZ/XX rotations");
    compile_cmd->add_flag("--include-init-readout", compile_args.include_init_readout,
                          "wrap with initialization and readout");
    compile_cmd->add_flag("--n4-special", compile_args.n4_special,
                          "use the four-qubit special constructions");
    compile_cmd->add_option("-o,--output", compile_args.output_path,
                            "write the circuit here instead of stdout");
    compile_cmd->add_flag("--csv-summary", compile_args.csv,
                          "print the resource summary as CSV");

    VerifyArgs verify_args;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "classify every single-fault error of a circuit");
    verify_args.input.add_options(verify_cmd);
    verify_cmd->add_flag("--include-preps", verify_args.include_preps,
                         "also insert preparation-flip faults");

    AnalyzeArgs analyze_args;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "order-k fault tallies and derived probabilities");
    analyze_args.input.add_options(analyze_cmd);
    analyze_cmd->add_option("--kmax", analyze_args.k_max, "highest fault order (1..3)")
        ->check(CLI::Range(1, 3));
    analyze_cmd->add_option("--workers", analyze_args.workers, "worker threads")
        ->check(CLI::Range(1, 256));
    analyze_cmd->add_flag("--exact-weights", analyze_args.exact_weights,
                          "weight combinations by exact per-Pauli probabilities");
    analyze_cmd->add_option("-p,--probability", analyze_args.probabilities,
                            "evaluate the derived probabilities at these p");

    SweepArgs sweep_args;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "CSV sweep of undetectable probability vs p");
    sweep_cmd
        ->add_option("--family", sweep_args.family,
                     "hadamard | cnot | rotation | all (default all)")
        ->check(CLI::IsMember({"hadamard", "cnot", "rotation", "all"}));
    sweep_cmd->add_option("--pmin", sweep_args.p_min, "grid start (default 1e-5)");
    sweep_cmd->add_option("--pmax", sweep_args.p_max, "grid end (default 1e-2)");
    sweep_cmd->add_option("--points", sweep_args.points, "grid points (default 40)")
        ->check(CLI::Range(2, 100000));
    sweep_cmd->add_option("--kmax", sweep_args.k_max, "highest fault order (1..3)")
        ->check(CLI::Range(1, 3));
    sweep_cmd->add_option("--workers", sweep_args.workers, "worker threads")
        ->check(CLI::Range(1, 256));
    sweep_cmd->add_flag("--exact-weights", sweep_args.exact_weights,
                        "weight combinations by exact per-Pauli probabilities");
    sweep_cmd->add_option("--n", sweep_args.n, "code size (even, >= 4; default 4)");
    sweep_cmd->add_option("--theta", sweep_args.theta, "rotation angle");

    OracleArgs oracle_args;
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "dense-statevector cross-checks of the constructions");
    CLI::Option* gadget_opt = oracle_cmd->add_option(
        "--gadget", oracle_args.gadget_path, "check this gadget circuit file instead");
    oracle_cmd->add_option("--kind", oracle_args.kind, "gate the gadget implements")
        ->check(CLI::IsMember({"ZZ", "XX"}))
        ->needs(gadget_opt);
    gadget_opt->needs(oracle_cmd->get_option("--kind"));
    oracle_cmd->add_option("--seed", oracle_args.seed, "Monte Carlo seed");
    oracle_cmd->add_option("--theta", oracle_args.theta, "rotation angle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compile_cmd->parsed()) return cmd_compile(compile_args);
        if (verify_cmd->parsed()) return cmd_verify(verify_args);
        if (analyze_cmd->parsed()) return cmd_analyze(analyze_args);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_args);
        if (oracle_cmd->parsed()) return cmd_oracle(oracle_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
