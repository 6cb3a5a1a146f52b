#include "qedc/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace qedc {

namespace {

int mod4(int v) { return ((v % 4) + 4) % 4; }

void check_qubit(int n, int qubit) {
    if (qubit < 1 || qubit > n) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) +
                                " outside 1.." + std::to_string(n));
    }
}

}  // namespace

SignedPauli::SignedPauli(int n_, std::uint64_t x_, std::uint64_t z_, int phase_)
    : n(n_), x(x_), z(z_), phase(mod4(phase_)) {
    if (n < 1 || n > 64) throw std::invalid_argument("SignedPauli: n must be 1..64");
    if (n < 64 && ((x >> n) != 0 || (z >> n) != 0)) {
        throw std::invalid_argument("SignedPauli: bits set beyond qubit count");
    }
}

SignedPauli SignedPauli::identity(int n) { return SignedPauli(n, 0, 0, 0); }

SignedPauli SignedPauli::single(int n, int qubit, char letter) {
    check_qubit(n, qubit);
    std::uint64_t bit = std::uint64_t{1} << (qubit - 1);
    switch (letter) {
        case 'I': return SignedPauli(n, 0, 0, 0);
        case 'X': return SignedPauli(n, bit, 0, 0);
        case 'Z': return SignedPauli(n, 0, bit, 0);
        // Y = i^3 Z X, so the +Y letter carries phase exponent 3 in Z^z X^x form.
        case 'Y': return SignedPauli(n, bit, bit, 3);
        default: throw std::invalid_argument(std::string("bad Pauli letter '") + letter + "'");
    }
}

SignedPauli SignedPauli::from_string(const std::string& text) {
    std::size_t i = 0;
    int sign_exp = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        if (text[i] == '-') sign_exp = 2;
        ++i;
    }
    if (i < text.size() && text[i] == 'i') {
        sign_exp = mod4(sign_exp + 1);
        ++i;
    }
    if (i >= text.size()) throw std::invalid_argument("empty Pauli literal: '" + text + "'");
    int n = static_cast<int>(text.size() - i);
    if (n > 64) throw std::invalid_argument("Pauli literal longer than 64 qubits");
    std::uint64_t x = 0, z = 0;
    int ys = 0;
    for (int q = 1; q <= n; ++q, ++i) {
        std::uint64_t bit = std::uint64_t{1} << (q - 1);
        switch (text[i]) {
            case 'I': break;
            case 'X': x |= bit; break;
            case 'Z': z |= bit; break;
            case 'Y': x |= bit; z |= bit; ++ys; break;
            default:
                throw std::invalid_argument("bad Pauli letter '" + std::string(1, text[i]) +
                                            "' in '" + text + "'");
        }
    }
    // letters = i^y Z^z X^x  =>  i^sign_exp letters = i^(sign_exp + 3y) Z^z X^x
    return SignedPauli(n, x, z, sign_exp + 3 * ys);
}

std::string SignedPauli::to_string() const {
    static const char* prefix[4] = {"", "i", "-", "-i"};
    std::string s = prefix[sign_exponent()];
    for (int q = 1; q <= n; ++q) {
        bool xb = x_bit(q), zb = z_bit(q);
        s += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }
    return s;
}

int SignedPauli::weight() const { return std::popcount(x | z); }

bool SignedPauli::x_bit(int qubit) const {
    check_qubit(n, qubit);
    return (x >> (qubit - 1)) & 1u;
}

bool SignedPauli::z_bit(int qubit) const {
    check_qubit(n, qubit);
    return (z >> (qubit - 1)) & 1u;
}

int SignedPauli::sign_exponent() const {
    // Per qubit Y = i^3 Z X, so (letters) = i^(3y) Z^z X^x with y = #{Y letters};
    // hence P = i^phase Z^z X^x = i^(phase + y) (letters).
    int y = std::popcount(x & z);
    return mod4(phase + y);
}

bool SignedPauli::is_hermitian() const { return sign_exponent() % 2 == 0; }

int SignedPauli::sign() const {
    int k = sign_exponent();
    if (k % 2 != 0) throw std::logic_error("sign() on a non-Hermitian Pauli " + to_string());
    return k == 0 ? 1 : -1;
}

SignedPauli SignedPauli::multiplied(const SignedPauli& other) const {
    if (n != other.n) throw std::invalid_argument("Pauli product: qubit counts differ");
    // (i^a Z^z1 X^x1)(i^b Z^z2 X^x2): moving X^x1 across Z^z2 costs (-1)^(x1.z2).
    int ph = phase + other.phase + 2 * (std::popcount(x & other.z) & 1);
    return SignedPauli(n, x ^ other.x, z ^ other.z, ph);
}

bool SignedPauli::same_bits(const SignedPauli& other) const {
    return n == other.n && x == other.x && z == other.z;
}

bool SignedPauli::commutes_with(const SignedPauli& other) const {
    return symplectic_inner_product(*this, other) == 0;
}

int symplectic_inner_product(const SignedPauli& a, const SignedPauli& b) {
    if (a.n != b.n) throw std::invalid_argument("symplectic product: qubit counts differ");
    return (std::popcount(a.x & b.z) + std::popcount(a.z & b.x)) & 1;
}

namespace {

/*
 * Incremental GF(2) row basis over 128-bit rows (the 2n-bit (x|z) vectors).
 * Invariant: every stored row has a designated pivot column and zero bits at
 * every other row's pivot column, so reduction is a single pass.
 */
struct Gf2Basis {
    struct Row {
        int col;             // pivot column, 0..63 = x bits, 64..127 = z bits
        std::uint64_t x, z;
    };
    std::vector<Row> rows;

    static bool bit(std::uint64_t x, std::uint64_t z, int col) {
        return col < 64 ? ((x >> col) & 1u) : ((z >> (col - 64)) & 1u);
    }

    /* Reduce (x, z) in place against the basis; true iff it lands on zero. */
    bool reduce(std::uint64_t& x, std::uint64_t& z) const {
        for (const Row& r : rows) {
            if (bit(x, z, r.col)) { x ^= r.x; z ^= r.z; }
        }
        return x == 0 && z == 0;
    }

    /* Insert a vector; returns true iff it enlarged the span. */
    bool insert(std::uint64_t x, std::uint64_t z) {
        if (reduce(x, z)) return false;
        int col = x ? std::countr_zero(x) : 64 + std::countr_zero(z);
        for (Row& r : rows) {
            if (bit(r.x, r.z, col)) { r.x ^= x; r.z ^= z; }
        }
        rows.push_back({col, x, z});
        return true;
    }
};

Gf2Basis basis_of(const std::vector<SignedPauli>& generators) {
    Gf2Basis b;
    for (const auto& g : generators) b.insert(g.x, g.z);
    return b;
}

}  // namespace

bool in_pauli_span(const SignedPauli& p, const std::vector<SignedPauli>& generators) {
    std::uint64_t x = p.x, z = p.z;
    return basis_of(generators).reduce(x, z);
}

int pauli_span_rank(const std::vector<SignedPauli>& generators) {
    return static_cast<int>(basis_of(generators).rows.size());
}

}  // namespace qedc
