#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qedc/circuit.hpp"
#include "qedc/pauli.hpp"

namespace qedc {

/*
 * Exhaustive Pauli-fault analysis.
 *
 * Error model: each unitary gate is a fault location; a faulty gate emits one
 * of the 15 nontrivial Paulis on its qubit pair (3 on a single qubit)
 * immediately after itself.  SWAP gates are relabelings and contribute no
 * locations; measurements are assumed perfect.  Inserted errors are
 * conjugated to the end of the circuit and tested against the circuit's
 * checks: an error is detectable iff it anticommutes with at least one check.
 */

struct FaultLocation {
    int gate_index = 0;  // index into Circuit::gates
    int arity = 1;       // 1 or 2 -> alphabet of 3 or 15 Paulis
};

std::vector<FaultLocation> fault_locations(const Circuit& c);

/* The location's nontrivial Pauli alphabet as full-width Paulis, in a fixed
 * canonical order (second qubit's letter varying fastest). */
std::vector<SignedPauli> fault_alphabet(const Circuit& c, const FaultLocation& loc);

/*
 * Conjugate an error inserted after gate `gate_index` (-1 = before the first
 * gate) to the end of the circuit.  With rz_transparent every Pauli passes an
 * RZ gate unchanged -- valid for detectability under the analog-rotation
 * certificate below; without it, Paulis anticommuting with an RZ's axis are
 * rejected.
 */
SignedPauli propagate(const Circuit& c, int gate_index, const SignedPauli& error,
                      bool rz_transparent = true);

bool is_detectable(const SignedPauli& final_pauli, const std::vector<SignedPauli>& checks);

/*
 * The certificate that makes rz_transparent propagation sound: for every RZ
 * gate, a Z on its target inserted at that location must propagate to an
 * operator commuting with every check.  A Pauli crossing the RZ then leaves
 * behind only a rotation about that final operator -- an analog angle error
 * acting inside the accepted subspace -- so the Pauli part alone decides
 * detectability.  Throws std::invalid_argument when the certificate fails.
 */
void verify_rz_certificate(const Circuit& c);

struct SingleFault {
    int gate_index = 0;       // -1 for a preparation-flip fault
    SignedPauli inserted;     // the error at its insertion point
    SignedPauli final_pauli;  // conjugated to circuit end
};

struct WeakFtOptions {
    /* Also insert preparation flips: X after a |0> prep, Z after a |+> prep. */
    bool include_preps = false;
    /*
     * Errors that commute with every check are harmless when they lie in the
     * span (bits only) of these generators -- they act as a global phase on
     * the checked state -- and harmful otherwise.  Empty means: use the
     * circuit's checks as the generators.
     */
    std::vector<SignedPauli> trivial_generators;
};

struct WeakFtReport {
    long long total = 0;                    // single-fault cases enumerated
    std::vector<SingleFault> undetectable;  // commute with checks, outside trivial span
    std::vector<SingleFault> trivial;       // commute with checks, inside trivial span

    bool weakly_fault_tolerant() const { return undetectable.empty(); }
};

/* Enumerate every single fault and classify it. */
WeakFtReport check_weak_ft(const Circuit& c, const WeakFtOptions& options = {});

/*
 * Order-k tallies.  For each k up to k_max, every unordered k-subset of
 * locations and every assignment of alphabet errors to the subset counts
 * once; the combined error is the product of the individually propagated
 * errors.  It counts as undetectable only when it is harmful: it commutes
 * with every check AND lies outside the group the checks generate.
 * Combinations that multiply out to a product of checks act trivially on
 * the post-selected state, so they are bucketed with the detectable ones.
 * Cells split each order by how many of the k locations are single-qubit
 * gates, which carries the information needed for exact per-Pauli
 * weighting.
 */
struct ArityCell {
    int singles = 0;  // locations with a 3-Pauli alphabet
    int twos = 0;     // locations with a 15-Pauli alphabet
    std::uint64_t total = 0;
    std::uint64_t undetectable = 0;
};

struct OrderTally {
    int order = 0;
    std::uint64_t total = 0;
    std::uint64_t undetectable = 0;     // harmful: pass post-selection, corrupt the state
    std::vector<ArityCell> cells;       // ascending in `singles`

    // Flagged by a check, or harmless (a product of checks).
    std::uint64_t detectable() const { return total - undetectable; }
};

struct FaultTally {
    int n_locations = 0;
    int n_single = 0;
    int n_two = 0;
    int k_max = 0;
    std::vector<OrderTally> orders;  // orders 0..k_max; order 0 = {1, 0}

    const OrderTally& order(int k) const { return orders.at(static_cast<std::size_t>(k)); }
};

/* OpenMP-parallel enumerator; results are bit-identical for any worker
 * count. */
FaultTally tally_orders(const Circuit& c, int k_max, int workers = 1);

/* Plain-loop reference implementation used to cross-check the parallel
 * kernel. */
FaultTally tally_orders_serial(const Circuit& c, int k_max);

/*
 * Independent brute-force route: enumerates the full product space of
 * error assignments (identity allowed at every location) and buckets by the
 * number of faulty locations, multiplying out actual Pauli products instead
 * of syndrome bookkeeping.  Guarded against blowup; small circuits only.
 */
FaultTally tally_orders_bruteforce(const Circuit& c, int k_max);

/*
 * Probability that an undetectable error occurred, to order k_max, under
 * gate failure probability p.  Default mode: uniform weighting within each
 * order and a single binomial over all locations; all orders above k_max
 * count as undetectable, making the result an upper bound.  exact_weights
 * instead weights each combination by (p/3)^singles * (p/15)^twos.
 */
double undetectable_probability(const FaultTally& t, double p, bool exact_weights = false);

/* Acceptance probability: 1 minus the probability of a detected error up to
 * order k_max. */
double post_selection_rate(const FaultTally& t, double p, bool exact_weights = false);

/* Sweep driver producing the CSV rows of the undetectable-probability and
 * post-selection figures. */
struct SweepEntry {
    std::string variant;  // "physical" | "encoded" | "wft"
    std::string circuit;  // "hadamard" | "cnot" | "rotation" | ...
    Circuit circ;
};

struct SweepRow {
    double p = 0;
    std::string variant;
    std::string circuit;
    double undetectable_prob = 0;
    double acceptance_rate = 0;
    int k_max = 0;
    int n_gates = 0;  // fault locations entering the binomial
};

/* `points` log-spaced values from lo to hi inclusive; points >= 2. */
std::vector<double> log_grid(double lo, double hi, int points);

std::vector<SweepRow> sweep(const std::vector<SweepEntry>& entries,
                            const std::vector<double>& p_grid, int k_max,
                            bool exact_weights = false, int workers = 1);

/* Schema: p,variant,circuit,undetectable_prob,acceptance_rate,k_max,n_gates
 * with a mandatory header row; numbers carry 12 significant digits. */
std::string sweep_csv(const std::vector<SweepRow>& rows);

/* 12-significant-digit number formatting shared by all CSV output. */
std::string format_sig12(double x);

}  // namespace qedc
