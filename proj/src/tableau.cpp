#include "qedc/tableau.hpp"

#include <bit>
#include <stdexcept>

namespace qedc {

CliffordTableau::CliffordTableau(int n_) : n(n_), rows(2 * n_) {
    if (n < 1 || n > 64) throw std::invalid_argument("CliffordTableau: n must be 1..64");
}

CliffordTableau CliffordTableau::identity(int n) {
    CliffordTableau c(n);
    for (int q = 0; q < n; ++q) {
        c.rows[q].x = std::uint64_t{1} << q;
        c.rows[n + q].z = std::uint64_t{1} << q;
    }
    return c;
}

CliffordTableau CliffordTableau::from_rows(int n, const std::vector<std::vector<int>>& bits) {
    if (static_cast<int>(bits.size()) != 2 * n) {
        throw std::invalid_argument("from_rows: expected 2n rows");
    }
    CliffordTableau c(n);
    for (int r = 0; r < 2 * n; ++r) {
        if (static_cast<int>(bits[r].size()) != 2 * n) {
            throw std::invalid_argument("from_rows: expected 2n columns");
        }
        for (int j = 0; j < n; ++j) {
            if (bits[r][j]) c.rows[r].x |= std::uint64_t{1} << j;
            if (bits[r][n + j]) c.rows[r].z |= std::uint64_t{1} << j;
        }
    }
    return c;
}

std::vector<std::vector<int>> CliffordTableau::to_rows() const {
    std::vector<std::vector<int>> bits(2 * n, std::vector<int>(2 * n, 0));
    for (int r = 0; r < 2 * n; ++r) {
        for (int j = 0; j < n; ++j) {
            bits[r][j] = (rows[r].x >> j) & 1u;
            bits[r][n + j] = (rows[r].z >> j) & 1u;
        }
    }
    return bits;
}

bool CliffordTableau::is_symplectic() const {
    // C J C^T = J <=> <row_i, row_j> equals the symplectic form of the
    // generators themselves: 1 exactly for the pairs (X_q, Z_q).
    auto sip = [&](const Row& a, const Row& b) {
        return (std::popcount(a.x & b.z) + std::popcount(a.z & b.x)) & 1;
    };
    for (int i = 0; i < 2 * n; ++i) {
        for (int j = i; j < 2 * n; ++j) {
            int expected = (j == i + n && i < n) ? 1 : 0;
            if (sip(rows[i], rows[j]) != expected) return false;
        }
    }
    return true;
}

SignedPauli apply_tableau(const CliffordTableau& c, const SignedPauli& g) {
    if (g.n != c.n) throw std::invalid_argument("apply_tableau: qubit counts differ");
    std::uint64_t x = 0, z = 0;
    for (int q = 0; q < c.n; ++q) {
        if ((g.x >> q) & 1u) { x ^= c.rows[q].x; z ^= c.rows[q].z; }
        if ((g.z >> q) & 1u) { x ^= c.rows[c.n + q].x; z ^= c.rows[c.n + q].z; }
    }
    // Tableaus are unsigned maps: pick the phase exponent that makes the
    // letter-form prefix "+" (i.e. cancel the i per Y letter of Z^z X^x).
    int y = std::popcount(x & z);
    return SignedPauli(c.n, x, z, (4 - (y % 4)) % 4);
}

CliffordTableau compose(const CliffordTableau& a, const CliffordTableau& b) {
    if (a.n != b.n) throw std::invalid_argument("compose: qubit counts differ");
    CliffordTableau c(a.n);
    for (int r = 0; r < 2 * a.n; ++r) {
        std::uint64_t x = 0, z = 0;
        for (int q = 0; q < a.n; ++q) {
            if ((a.rows[r].x >> q) & 1u) { x ^= b.rows[q].x; z ^= b.rows[q].z; }
            if ((a.rows[r].z >> q) & 1u) { x ^= b.rows[a.n + q].x; z ^= b.rows[a.n + q].z; }
        }
        c.rows[r] = {x, z};
    }
    return c;
}

CliffordTableau embed_two_qubit(const std::array<std::array<int, 4>, 4>& c4,
                                int q1, int q2, int n) {
    if (q1 == q2) throw std::invalid_argument("embed_two_qubit: identical qubits");
    if (q1 < 1 || q1 > n || q2 < 1 || q2 > n) {
        throw std::out_of_range("embed_two_qubit: qubit out of range");
    }
    CliffordTableau c = CliffordTableau::identity(n);
    // Local generator order X_1, X_2, Z_1, Z_2 maps to rows for X_q1, X_q2,
    // Z_q1, Z_q2; local columns map to bits of (q1, q2) in the same split.
    int row_index[4] = {q1 - 1, q2 - 1, n + q1 - 1, n + q2 - 1};
    for (int r = 0; r < 4; ++r) {
        std::uint64_t x = 0, z = 0;
        if (c4[r][0]) x |= std::uint64_t{1} << (q1 - 1);
        if (c4[r][1]) x |= std::uint64_t{1} << (q2 - 1);
        if (c4[r][2]) z |= std::uint64_t{1} << (q1 - 1);
        if (c4[r][3]) z |= std::uint64_t{1} << (q2 - 1);
        c.rows[row_index[r]] = {x, z};
    }
    return c;
}

bool GeneratorSet::pairwise_commuting() const {
    for (std::size_t i = 0; i < generators.size(); ++i) {
        for (std::size_t j = i + 1; j < generators.size(); ++j) {
            if (symplectic_inner_product(generators[i], generators[j]) != 0) return false;
        }
    }
    return true;
}

bool GeneratorSet::independent() const {
    return pauli_span_rank(generators) == static_cast<int>(generators.size());
}

GeneratorSet GeneratorSet::mapped_by(const CliffordTableau& c) const {
    GeneratorSet out;
    out.generators.reserve(generators.size());
    for (const auto& g : generators) out.generators.push_back(apply_tableau(c, g));
    return out;
}

}  // namespace qedc
