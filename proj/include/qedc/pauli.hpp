#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qedc {

/*
 * An n-qubit Pauli operator with an exact phase, stored in binary symplectic
 * form:
 *
 *     P = i^phase * prod_j Z_j^{z_j} X_j^{x_j}
 *
 * Qubits are 1-based in the public interface; qubit q owns bit (q - 1) of the
 * packed words `x` and `z`.  The phase exponent is tracked modulo 4 so that
 * products and Clifford conjugations are sign-exact.
 *
 * The string form uses letters over {I, X, Y, Z} with an optional prefix
 * "+", "-", "i" or "-i", e.g. "XIXI", "-ZZII", "iY".  Note Y = i^3 * Z X per
 * qubit, so the letter form and the (x, z, phase) form differ by a power of i
 * per Y letter; conversion is handled here.
 *
 * Values are immutable in spirit: all operations return new objects.
 */
struct SignedPauli {
    int n = 0;             // number of qubits (1..64)
    std::uint64_t x = 0;   // X-part bits, qubit q -> bit (q-1)
    std::uint64_t z = 0;   // Z-part bits
    int phase = 0;         // exponent of i, modulo 4

    SignedPauli() = default;
    SignedPauli(int n_, std::uint64_t x_, std::uint64_t z_, int phase_ = 0);

    /* The identity on n qubits. */
    static SignedPauli identity(int n);

    /* A single-qubit letter ('I','X','Y','Z') placed on `qubit`, +1 sign. */
    static SignedPauli single(int n, int qubit, char letter);

    /* Parse a Pauli literal such as "XIXI", "-ZZ", "iY", "-iXZ". */
    static SignedPauli from_string(const std::string& text);

    /* Inverse of from_string; omits the prefix for a +1 sign. */
    std::string to_string() const;

    /* Number of qubits on which the letter is not I. */
    int weight() const;

    bool is_identity_bits() const { return x == 0 && z == 0; }

    /* X/Z bit of one qubit. */
    bool x_bit(int qubit) const;
    bool z_bit(int qubit) const;

    /*
     * Phase exponent relative to the plain letter form: P = i^k * (letters).
     * k in {0,2} means P is +/- a Hermitian Pauli; {1,3} means +/-i times one.
     */
    int sign_exponent() const;

    /* True iff P equals +/- (letters), i.e. P is Hermitian. */
    bool is_hermitian() const;

    /* +1 or -1; requires is_hermitian(). */
    int sign() const;

    /* Exact operator product this * other (phase included). */
    SignedPauli multiplied(const SignedPauli& other) const;

    /* Same letters, phase ignored. */
    bool same_bits(const SignedPauli& other) const;

    bool commutes_with(const SignedPauli& other) const;

    bool operator==(const SignedPauli&) const = default;
};

/*
 * Symplectic inner product of the binary vectors (x|z): x.z' + z.x' mod 2.
 * 0 means the operators commute, 1 that they anticommute.
 */
int symplectic_inner_product(const SignedPauli& a, const SignedPauli& b);

/*
 * GF(2) span membership: is `p` (bits only, sign ignored) a product of the
 * given generators?  Used to separate harmless faults, which act as a global
 * phase on a stabilized state, from genuine logical errors.
 */
bool in_pauli_span(const SignedPauli& p, const std::vector<SignedPauli>& generators);

/* Rank over GF(2) of the generators' (x|z) row vectors. */
int pauli_span_rank(const std::vector<SignedPauli>& generators);

}  // namespace qedc
