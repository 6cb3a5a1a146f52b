#include "qedc/dense.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace qedc {

namespace {

constexpr int kMaxStateQubits = 12;
constexpr int kMaxUnitaryQubits = 10;

void require_state_size(int n) {
    if (n < 1 || n > kMaxStateQubits) {
        throw std::invalid_argument("statevector supports 1.." +
                                    std::to_string(kMaxStateQubits) + " qubits");
    }
}

std::uint64_t dim_of(int n) { return std::uint64_t{1} << n; }

/* State-index bit of qubit q (1-based, qubit 1 most significant). */
std::uint64_t state_mask(int n, int q) { return std::uint64_t{1} << (n - q); }

void apply1_kernel(cd* a, int n, const Mat2& m, int q) {
    const std::uint64_t mask = state_mask(n, q);
    const std::uint64_t size = dim_of(n);
    for (std::uint64_t i = 0; i < size; ++i) {
        if (i & mask) continue;
        const cd a0 = a[i];
        const cd a1 = a[i | mask];
        a[i] = m[0] * a0 + m[1] * a1;
        a[i | mask] = m[2] * a0 + m[3] * a1;
    }
}

void apply2_kernel(cd* a, int n, const Mat4& m, int q1, int q2) {
    const std::uint64_t m1 = state_mask(n, q1);
    const std::uint64_t m2 = state_mask(n, q2);
    const std::uint64_t size = dim_of(n);
    for (std::uint64_t i = 0; i < size; ++i) {
        if ((i & m1) || (i & m2)) continue;
        const cd v0 = a[i];
        const cd v1 = a[i | m2];
        const cd v2 = a[i | m1];
        const cd v3 = a[i | m1 | m2];
        a[i] = m[0] * v0 + m[1] * v1 + m[2] * v2 + m[3] * v3;
        a[i | m2] = m[4] * v0 + m[5] * v1 + m[6] * v2 + m[7] * v3;
        a[i | m1] = m[8] * v0 + m[9] * v1 + m[10] * v2 + m[11] * v3;
        a[i | m1 | m2] = m[12] * v0 + m[13] * v1 + m[14] * v2 + m[15] * v3;
    }
}

void toffoli_kernel(cd* a, int n, int c1, int c2, int target) {
    const std::uint64_t mc = state_mask(n, c1) | state_mask(n, c2);
    const std::uint64_t mt = state_mask(n, target);
    const std::uint64_t size = dim_of(n);
    for (std::uint64_t i = 0; i < size; ++i) {
        if ((i & mc) == mc && !(i & mt)) std::swap(a[i], a[i | mt]);
    }
}

void pauli_kernel(cd* a, int n, const SignedPauli& p) {
    std::uint64_t xmask = 0, zmask = 0;
    for (int q = 1; q <= n; ++q) {
        if (p.x_bit(q)) xmask |= state_mask(n, q);
        if (p.z_bit(q)) zmask |= state_mask(n, q);
    }
    static constexpr cd phases[4] = {cd{1, 0}, cd{0, 1}, cd{-1, 0}, cd{0, -1}};
    const cd ph = phases[p.phase & 3];
    const std::uint64_t size = dim_of(n);
    // P |b> = i^phase (-1)^{<z, b^x>} |b^x>.
    std::vector<cd> out(size);
    for (std::uint64_t b = 0; b < size; ++b) {
        const std::uint64_t target = b ^ xmask;
        const cd sign = (std::popcount(target & zmask) & 1) ? cd{-1, 0} : cd{1, 0};
        out[target] = ph * sign * a[b];
    }
    std::copy(out.begin(), out.end(), a);
}

/* Apply one gate to a raw amplitude array. */
void gate_kernel(cd* a, int n, const Gate& g) {
    switch (g.kind) {
        case GateKind::Swap: apply2_kernel(a, n, mat_swap(), g.q1, g.q2); break;
        case GateKind::ZZ: apply2_kernel(a, n, mat_zz(), g.q1, g.q2); break;
        case GateKind::XX: apply2_kernel(a, n, mat_xx(), g.q1, g.q2); break;
        case GateKind::YY: apply2_kernel(a, n, mat_yy(), g.q1, g.q2); break;
        case GateKind::Cnot: apply2_kernel(a, n, mat_cnot(), g.q1, g.q2); break;
        case GateKind::RX: apply1_kernel(a, n, mat_rx(), g.q1); break;
        case GateKind::H: apply1_kernel(a, n, mat_h(), g.q1); break;
        case GateKind::X: apply1_kernel(a, n, mat_x(), g.q1); break;
        case GateKind::Y: apply1_kernel(a, n, mat_y(), g.q1); break;
        case GateKind::Z: apply1_kernel(a, n, mat_z(), g.q1); break;
        case GateKind::RZ: apply1_kernel(a, n, mat_rz(g.angle), g.q1); break;
        default:
            throw std::invalid_argument(
                "measurement gates have no unitary; use measure_qubit");
    }
}

/* Walk the circuit's unitaries and frames in order, invoking fn(gate) /
 * pfn(pauli); measurements are skipped. */
template <typename GateFn, typename PauliFn>
void walk_circuit(const Circuit& c, GateFn&& fn, PauliFn&& pfn) {
    std::size_t frame_idx = 0;
    while (frame_idx < c.frame.size() && c.frame[frame_idx].pos == 0) {
        pfn(c.frame[frame_idx].pauli);
        ++frame_idx;
    }
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        if (!is_measurement(c.gates[i].kind)) fn(c.gates[i]);
        while (frame_idx < c.frame.size() &&
               c.frame[frame_idx].pos == static_cast<int>(i) + 1) {
            pfn(c.frame[frame_idx].pauli);
            ++frame_idx;
        }
    }
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

double choose_real(int n, int k) {
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / i;
    return r;
}

}  // namespace

StateVector zero_state(int n) {
    require_state_size(n);
    StateVector s;
    s.n = n;
    s.amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim_of(n)));
    s.amps[0] = 1;
    return s;
}

StateVector basis_state(int n, std::uint64_t bits) {
    StateVector s = zero_state(n);
    if (bits >= dim_of(n)) throw std::invalid_argument("basis index out of range");
    s.amps[0] = 0;
    s.amps[static_cast<Eigen::Index>(bits)] = 1;
    return s;
}

StateVector ghz_state(int n) {
    StateVector s = zero_state(n);
    const double r = 1 / std::numbers::sqrt2;
    s.amps[0] = r;
    s.amps[static_cast<Eigen::Index>(dim_of(n) - 1)] = r;
    return s;
}

StateVector resource_state(double theta) {
    StateVector s = zero_state(1);
    const double r = 1 / std::numbers::sqrt2;
    s.amps[0] = std::polar(r, theta / 2);
    s.amps[1] = std::polar(r, -theta / 2);
    return s;
}

double norm_squared(const StateVector& s) { return s.amps.squaredNorm(); }

double fidelity(const StateVector& a, const StateVector& b) {
    if (a.n != b.n) throw std::invalid_argument("fidelity: qubit counts differ");
    return std::norm(a.amps.dot(b.amps));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    require_state_size(a.n + b.n);
    StateVector s;
    s.n = a.n + b.n;
    const Eigen::Index db = static_cast<Eigen::Index>(dim_of(b.n));
    s.amps.resize(static_cast<Eigen::Index>(dim_of(s.n)));
    for (Eigen::Index i = 0; i < a.amps.size(); ++i) {
        s.amps.segment(i * db, db) = a.amps[i] * b.amps;
    }
    return s;
}

void apply_gate(StateVector& s, const Gate& g) { gate_kernel(s.amps.data(), s.n, g); }

void apply_matrix1(StateVector& s, const Mat2& m, int q) {
    apply1_kernel(s.amps.data(), s.n, m, q);
}

void apply_matrix2(StateVector& s, const Mat4& m, int q1, int q2) {
    apply2_kernel(s.amps.data(), s.n, m, q1, q2);
}

void apply_pauli(StateVector& s, const SignedPauli& p) {
    if (p.n != s.n) throw std::invalid_argument("apply_pauli: width mismatch");
    pauli_kernel(s.amps.data(), s.n, p);
}

void apply_toffoli(StateVector& s, int c1, int c2, int target) {
    toffoli_kernel(s.amps.data(), s.n, c1, c2, target);
}

StateVector initial_state(const Circuit& c) {
    c.validate();
    StateVector s = zero_state(c.n);
    for (const Prep& prep : c.preps) {
        switch (prep.kind) {
            case PrepKind::Zero: break;
            case PrepKind::Plus: apply_matrix1(s, mat_h(), prep.qubits[0]); break;
            case PrepKind::Resource:
                apply_matrix1(s, mat_h(), prep.qubits[0]);
                apply_matrix1(s, mat_rz(-prep.angle), prep.qubits[0]);
                break;
            case PrepKind::PhiPlus:
                apply_matrix1(s, mat_h(), prep.qubits[0]);
                apply_matrix2(s, mat_cnot(), prep.qubits[0], prep.qubits[1]);
                break;
            case PrepKind::PlusPlus:
                apply_matrix1(s, mat_h(), prep.qubits[0]);
                apply_matrix1(s, mat_h(), prep.qubits[1]);
                break;
        }
    }
    return s;
}

StateVector run_circuit(const Circuit& c, StateVector s) {
    if (s.n != c.n) throw std::invalid_argument("run_circuit: width mismatch");
    walk_circuit(
        c, [&](const Gate& g) { apply_gate(s, g); },
        [&](const SignedPauli& p) { apply_pauli(s, p); });
    return s;
}

Eigen::MatrixXcd unitary_of(const Circuit& c) {
    c.validate();
    if (c.n > kMaxUnitaryQubits) {
        throw std::invalid_argument("unitary_of supports up to 10 qubits");
    }
    for (const Gate& g : c.gates) {
        if (is_measurement(g.kind)) {
            throw std::invalid_argument("unitary_of: circuit contains measurements");
        }
    }
    const Eigen::Index size = static_cast<Eigen::Index>(dim_of(c.n));
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(size, size);
    auto each_column = [&](auto&& kernel) {
        for (Eigen::Index col = 0; col < size; ++col) kernel(u.data() + col * size);
    };
    walk_circuit(
        c,
        [&](const Gate& g) { each_column([&](cd* a) { gate_kernel(a, c.n, g); }); },
        [&](const SignedPauli& p) { each_column([&](cd* a) { pauli_kernel(a, c.n, p); }); });
    return u;
}

Eigen::MatrixXcd embed_unitary(const Eigen::MatrixXcd& u, const std::vector<int>& qubits,
                               int n) {
    require_state_size(n);
    const int k = static_cast<int>(qubits.size());
    const std::uint64_t local = std::uint64_t{1} << k;
    if (u.rows() != static_cast<Eigen::Index>(local) || u.cols() != u.rows()) {
        throw std::invalid_argument("embed_unitary: matrix size does not match qubit list");
    }
    const std::uint64_t size = dim_of(n);
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(size),
                                                   static_cast<Eigen::Index>(size));
    for (std::uint64_t i = 0; i < size; ++i) {
        std::uint64_t l = 0, rest = i;
        for (int t = 0; t < k; ++t) {
            const std::uint64_t mask = state_mask(n, qubits[static_cast<std::size_t>(t)]);
            l = (l << 1) | ((i & mask) ? 1 : 0);
            rest &= ~mask;
        }
        for (std::uint64_t lp = 0; lp < local; ++lp) {
            std::uint64_t j = rest;
            for (int t = 0; t < k; ++t) {
                if ((lp >> (k - 1 - t)) & 1) {
                    j |= state_mask(n, qubits[static_cast<std::size_t>(t)]);
                }
            }
            full(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) =
                u(static_cast<Eigen::Index>(lp), static_cast<Eigen::Index>(l));
        }
    }
    return full;
}

MeasureResult measure_qubit(const StateVector& s, int q, char basis) {
    if (basis != 'Z' && basis != 'X') {
        throw std::invalid_argument("measure_qubit: basis must be 'Z' or 'X'");
    }
    MeasureResult r;
    StateVector rotated = s;
    if (basis == 'X') apply_matrix1(rotated, mat_h(), q);  // |+> -> |0>
    const std::uint64_t mask = state_mask(s.n, q);
    r.post0 = rotated;
    r.post1 = rotated;
    for (std::uint64_t i = 0; i < dim_of(s.n); ++i) {
        if (i & mask) {
            r.post0.amps[static_cast<Eigen::Index>(i)] = 0;
        } else {
            r.post1.amps[static_cast<Eigen::Index>(i)] = 0;
        }
    }
    r.prob0 = norm_squared(r.post0);
    r.prob1 = norm_squared(r.post1);
    if (r.prob0 > 0) r.post0.amps /= std::sqrt(r.prob0);
    if (r.prob1 > 0) r.post1.amps /= std::sqrt(r.prob1);
    if (basis == 'X') {
        apply_matrix1(r.post0, mat_h(), q);  // back to the original basis
        apply_matrix1(r.post1, mat_h(), q);
    }
    return r;
}

double phase_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("phase_distance: shape mismatch");
    }
    Eigen::Index row = 0, col = 0;
    b.cwiseAbs().maxCoeff(&row, &col);
    cd phase{1, 0};
    if (std::abs(b(row, col)) > 0 && std::abs(a(row, col)) > 0) {
        phase = a(row, col) / b(row, col);
        phase /= std::abs(phase);
    }
    return (a - phase * b).cwiseAbs().maxCoeff();
}

bool equal_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol) {
    return phase_distance(a, b) <= tol;
}

StateVector ancilla_pair_state(AncillaState label) {
    StateVector s = zero_state(2);
    if (label == AncillaState::PhiPlus) {
        const double r = 1 / std::numbers::sqrt2;
        s.amps << r, 0, 0, r;
    } else {
        s.amps << 0.5, 0.5, 0.5, 0.5;
    }
    return s;
}

bool verify_gadget(const Gadget& gadget, double tol) {
    const Circuit c = gadget.standalone();
    const Eigen::MatrixXcd u = unitary_of(c);
    const StateVector anc_in = ancilla_pair_state(gadget.input);
    const StateVector anc_out = ancilla_pair_state(gadget.output);
    const Mat4 target = gadget.kind == GateKind::ZZ ? mat_zz() : mat_xx();

    Eigen::MatrixXcd got(16, 4), want(16, 4);
    for (int d = 0; d < 4; ++d) {
        StateVector data = basis_state(2, static_cast<std::uint64_t>(d));
        got.col(d) = u * tensor(anc_in, data).amps;
        apply_matrix2(data, target, 1, 2);
        want.col(d) = tensor(anc_out, data).amps;
    }
    return equal_up_to_phase(got, want, tol);
}

Eigen::MatrixXcd logical_isometry(int n, const std::vector<LogicalPair>& logicals) {
    require_state_size(n);
    const int num_logical = static_cast<int>(logicals.size());
    if (num_logical != n - 2) {
        throw std::invalid_argument("logical_isometry: expected n-2 logical pairs");
    }
    const Eigen::Index cols = static_cast<Eigen::Index>(dim_of(num_logical));
    Eigen::MatrixXcd v(static_cast<Eigen::Index>(dim_of(n)), cols);
    for (Eigen::Index l = 0; l < cols; ++l) {
        StateVector s = ghz_state(n);
        for (int i = 0; i < num_logical; ++i) {
            if ((static_cast<std::uint64_t>(l) >> (num_logical - 1 - i)) & 1) {
                apply_pauli(s, logicals[static_cast<std::size_t>(i)].x);
            }
        }
        v.col(l) = s.amps;
    }
    return v;
}

EncodedAction encoded_action(const Circuit& c, const Eigen::MatrixXcd& isometry) {
    const Eigen::MatrixXcd u = unitary_of(c);
    EncodedAction act;
    act.logical = isometry.adjoint() * u * isometry;
    act.leakage = (u * isometry - isometry * act.logical).cwiseAbs().maxCoeff();
    return act;
}

double analog_channel_estimate(double theta, double sigma, long long samples,
                               std::uint64_t seed, bool uniform) {
    if (sigma < 0) throw std::invalid_argument("sigma must be nonnegative");
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    if (sigma == 0) return 0;

    constexpr long long kBlock = 4096;
    const double half_width = std::sqrt(3.0) * sigma;
    Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
    for (long long done = 0, block = 0; done < samples; done += kBlock, ++block) {
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(block))));
        std::normal_distribution<double> gauss(0.0, sigma);
        std::uniform_real_distribution<double> flat(-half_width, half_width);
        const long long count = std::min(kBlock, samples - done);
        for (long long i = 0; i < count; ++i) {
            const double delta = uniform ? flat(rng) : gauss(rng);
            StateVector s = zero_state(1);
            apply_matrix1(s, mat_h(), 1);
            apply_matrix1(s, mat_rz(theta + delta), 1);
            rho += s.amps * s.amps.adjoint();
        }
    }
    rho /= static_cast<double>(samples);
    // Dephasing with weight q scales the off-diagonal by (1 - 2q).
    return 0.5 - std::abs(rho(0, 1));
}

RotationBranches resource_rotation_sim(const StateVector& psi, double theta) {
    if (psi.n != 1) throw std::invalid_argument("resource_rotation_sim: 1-qubit input");
    StateVector s = tensor(psi, resource_state(theta));
    apply_matrix2(s, mat_cnot(), 1, 2);
    const MeasureResult m = measure_qubit(s, 2, 'Z');
    RotationBranches branches;
    branches.prob0 = m.prob0;
    branches.prob1 = m.prob1;
    branches.post0 = zero_state(1);
    branches.post1 = zero_state(1);
    for (int a = 0; a < 2; ++a) {
        branches.post0.amps[a] = m.post0.amps[a * 2 + 0];
        branches.post1.amps[a] = m.post1.amps[a * 2 + 1];
    }
    return branches;
}

SwapSymmetry swap_symmetry_measure(const StateVector& pair) {
    if (pair.n != 2) throw std::invalid_argument("swap_symmetry_measure: 2-qubit input");
    StateVector s = tensor(pair, zero_state(1));
    apply_matrix2(s, mat_cnot(), 1, 2);
    apply_matrix1(s, mat_h(), 1);
    apply_toffoli(s, 1, 2, 3);
    apply_matrix1(s, mat_h(), 1);
    apply_matrix2(s, mat_cnot(), 1, 2);
    const MeasureResult m = measure_qubit(s, 3, 'Z');
    SwapSymmetry result;
    result.prob_plus = m.prob0;
    result.prob_minus = m.prob1;
    result.post_plus = zero_state(2);
    result.post_minus = zero_state(2);
    for (int a = 0; a < 4; ++a) {
        result.post_plus.amps[a] = m.post0.amps[a * 2 + 0];
        result.post_minus.amps[a] = m.post1.amps[a * 2 + 1];
    }
    return result;
}

Eigen::MatrixXcd symmetric_projector(int n_copies) {
    if (n_copies < 2 || n_copies > 6) {
        throw std::invalid_argument("symmetric_projector supports 2..6 copies");
    }
    const std::uint64_t size = dim_of(n_copies);
    Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(size),
                                                   static_cast<Eigen::Index>(size));
    std::vector<int> perm(static_cast<std::size_t>(n_copies));
    for (int q = 0; q < n_copies; ++q) perm[static_cast<std::size_t>(q)] = q;
    long long count = 0;
    do {
        for (std::uint64_t i = 0; i < size; ++i) {
            std::uint64_t j = 0;
            for (int q = 0; q < n_copies; ++q) {
                const int bit = static_cast<int>(
                    (i >> (n_copies - 1 - perm[static_cast<std::size_t>(q)])) & 1);
                j |= static_cast<std::uint64_t>(bit) << (n_copies - 1 - q);
            }
            proj(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) += 1;
        }
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    proj /= static_cast<double>(count);
    return proj;
}

StateVector symmetric_basis_state(int n_copies, int j, double theta) {
    if (j < 0 || j > n_copies) throw std::invalid_argument("invalid wrong-copy count");
    const StateVector good = resource_state(theta);
    StateVector bad = zero_state(1);
    bad.amps[0] = std::polar(1 / std::numbers::sqrt2, theta / 2);
    bad.amps[1] = -std::polar(1 / std::numbers::sqrt2, -theta / 2);

    StateVector sum = zero_state(n_copies);
    sum.amps.setZero();
    for (std::uint64_t mask = 0; mask < dim_of(n_copies); ++mask) {
        if (std::popcount(mask) != j) continue;
        StateVector term = (mask >> (n_copies - 1)) & 1 ? bad : good;
        for (int q = 2; q <= n_copies; ++q) {
            term = tensor(term, (mask >> (n_copies - q)) & 1 ? bad : good);
        }
        sum.amps += term.amps;
    }
    sum.amps /= std::sqrt(choose_real(n_copies, j));
    return sum;
}

SymmetrizeResult symmetrize(int n_copies, double p, double theta) {
    if (n_copies != 2 && n_copies != 3) {
        throw std::invalid_argument("symmetrize supports 2 or 3 copies");
    }
    if (p < 0 || p >= 1.0 / n_copies) {
        throw std::invalid_argument("preparation error must satisfy 0 <= p < 1/N");
    }
    const Eigen::MatrixXcd proj = symmetric_projector(n_copies);
    const int rank = static_cast<int>(std::lround(proj.trace().real()));
    if (rank != n_copies + 1) {
        throw std::logic_error("symmetric projector rank is not N + 1");
    }

    const StateVector good = resource_state(theta);
    StateVector bad = zero_state(1);
    bad.amps[0] = std::polar(1 / std::numbers::sqrt2, theta / 2);
    bad.amps[1] = -std::polar(1 / std::numbers::sqrt2, -theta / 2);

    const std::uint64_t half = dim_of(n_copies - 1);
    double acceptance = 0, fid_numerator = 0;
    for (std::uint64_t mask = 0; mask < dim_of(n_copies); ++mask) {
        const int wrong = std::popcount(mask);
        const double weight =
            std::pow(p, wrong) * std::pow(1 - p, n_copies - wrong);
        StateVector term = (mask >> (n_copies - 1)) & 1 ? bad : good;
        for (int q = 2; q <= n_copies; ++q) {
            term = tensor(term, (mask >> (n_copies - q)) & 1 ? bad : good);
        }
        const Eigen::VectorXcd projected = proj * term.amps;
        acceptance += weight * projected.squaredNorm();
        // Overlap of copy 1 with the good state: contract qubit 1.
        Eigen::VectorXcd contracted = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(half));
        for (std::uint64_t rest = 0; rest < half; ++rest) {
            for (std::uint64_t b = 0; b < 2; ++b) {
                contracted[static_cast<Eigen::Index>(rest)] +=
                    std::conj(good.amps[static_cast<Eigen::Index>(b)]) *
                    projected[static_cast<Eigen::Index>(b * half + rest)];
            }
        }
        fid_numerator += weight * contracted.squaredNorm();
    }

    SymmetrizeResult result;
    result.acceptance = acceptance;
    result.fidelity = acceptance > 0 ? fid_numerator / acceptance : 0;
    result.projector_rank = rank;
    return result;
}

}  // namespace qedc
