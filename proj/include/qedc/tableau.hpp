#pragma once

#include <array>
#include <vector>

#include "qedc/pauli.hpp"

namespace qedc {

/*
 * A Clifford tableau: the 2n x 2n GF(2) matrix of a Clifford map in the
 * binary symplectic picture.  Pauli bit vectors are rows (x-block first),
 * and the map acts by right multiplication, g -> g * C, so the rows of C are
 * the images of the generators:
 *
 *     row q-1       = image of X_q        (q = 1..n)
 *     row n + q-1   = image of Z_q
 *
 * Columns use the same (x | z) split.  Composition follows circuit order:
 * applying A then B gives the matrix product A * B.
 *
 * Tableaus carry no sign information; exact signs are handled by conjugating
 * SignedPauli values through gate lists (see gate.hpp).
 */
struct CliffordTableau {
    int n = 0;
    struct Row {
        std::uint64_t x = 0, z = 0;
        bool operator==(const Row&) const = default;
    };
    std::vector<Row> rows;  // size 2n

    CliffordTableau() = default;
    explicit CliffordTableau(int n_);

    static CliffordTableau identity(int n);

    /*
     * Build a tableau from row-major 0/1 entries, 2n x 2n, columns ordered
     * (x_1..x_n | z_1..z_n).  This is the layout in which the reference
     * matrices are printed.
     */
    static CliffordTableau from_rows(int n, const std::vector<std::vector<int>>& bits);

    /* Row-major 0/1 entries, same layout as from_rows. */
    std::vector<std::vector<int>> to_rows() const;

    /* Does C J C^T = J hold, i.e. is the map symplectic? */
    bool is_symplectic() const;

    bool operator==(const CliffordTableau&) const = default;
};

/*
 * Image of g under the tableau (right multiplication of the bit row vector).
 * The result is returned with a +1 sign: tableaus do not track phases.
 */
SignedPauli apply_tableau(const CliffordTableau& c, const SignedPauli& g);

/* Tableau of "apply a, then b" (the matrix product a * b). */
CliffordTableau compose(const CliffordTableau& a, const CliffordTableau& b);

/*
 * Embed a two-qubit tableau (in the 4 x 4 layout of the two-qubit gate
 * matrices, generator order X_1, X_2, Z_1, Z_2) onto qubits (q1, q2) of an
 * n-qubit identity tableau.
 */
CliffordTableau embed_two_qubit(const std::array<std::array<int, 4>, 4>& c4,
                                int q1, int q2, int n);

/*
 * An ordered list of signed Pauli generators (e.g. a stabilizer group or a
 * set of logical operators), with the common consistency checks.
 */
struct GeneratorSet {
    std::vector<SignedPauli> generators;

    bool pairwise_commuting() const;
    bool independent() const;  // GF(2) independence of the (x|z) rows

    /* Apply a tableau to every generator (bits only). */
    GeneratorSet mapped_by(const CliffordTableau& c) const;
};

}  // namespace qedc
