#include "qedc/fault.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qedc {

std::vector<FaultLocation> fault_locations(const Circuit& c) {
    std::vector<FaultLocation> locs;
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const GateKind k = c.gates[i].kind;
        if (k == GateKind::Swap || is_measurement(k)) continue;
        locs.push_back({static_cast<int>(i), is_two_qubit(k) ? 2 : 1});
    }
    return locs;
}

std::vector<SignedPauli> fault_alphabet(const Circuit& c, const FaultLocation& loc) {
    static constexpr char letters[4] = {'I', 'X', 'Y', 'Z'};
    const Gate& g = c.gates.at(static_cast<std::size_t>(loc.gate_index));
    std::vector<SignedPauli> alphabet;
    if (loc.arity == 1) {
        for (int a = 1; a < 4; ++a) {
            alphabet.push_back(SignedPauli::single(c.n, g.q1, letters[a]));
        }
        return alphabet;
    }
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            if (a == 0 && b == 0) continue;
            alphabet.push_back(SignedPauli::single(c.n, g.q1, letters[a])
                                   .multiplied(SignedPauli::single(c.n, g.q2, letters[b])));
        }
    }
    return alphabet;
}

SignedPauli propagate(const Circuit& c, int gate_index, const SignedPauli& error,
                      bool rz_transparent) {
    if (error.n != c.n) {
        throw std::invalid_argument("propagate: error width does not match circuit");
    }
    return conjugate_through(c, static_cast<std::size_t>(gate_index + 1), error,
                             rz_transparent);
}

bool is_detectable(const SignedPauli& final_pauli, const std::vector<SignedPauli>& checks) {
    for (const SignedPauli& check : checks) {
        if (symplectic_inner_product(final_pauli, check) == 1) return true;
    }
    return false;
}

void verify_rz_certificate(const Circuit& c) {
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        if (c.gates[i].kind != GateKind::RZ) continue;
        SignedPauli axis = SignedPauli::single(c.n, c.gates[i].q1, 'Z');
        SignedPauli fin = conjugate_through(c, i + 1, axis, true);
        if (is_detectable(fin, c.checks)) {
            throw std::invalid_argument(
                "analog-rotation certificate fails: the rotation axis of the RZ at gate " +
                std::to_string(i) + " propagates to a check-anticommuting operator");
        }
    }
}

WeakFtReport check_weak_ft(const Circuit& c, const WeakFtOptions& options) {
    c.validate();
    verify_rz_certificate(c);
    const std::vector<SignedPauli>& trivial_gens =
        options.trivial_generators.empty() ? c.checks : options.trivial_generators;

    WeakFtReport report;
    auto classify = [&](int gate_index, const SignedPauli& inserted) {
        SignedPauli fin = propagate(c, gate_index, inserted);
        ++report.total;
        if (is_detectable(fin, c.checks)) return;
        SingleFault fault{gate_index, inserted, fin};
        if (in_pauli_span(fin, trivial_gens)) {
            report.trivial.push_back(fault);
        } else {
            report.undetectable.push_back(fault);
        }
    };

    if (options.include_preps) {
        for (const Prep& prep : c.preps) {
            if (prep.kind == PrepKind::Zero) {
                classify(-1, SignedPauli::single(c.n, prep.qubits[0], 'X'));
            } else if (prep.kind == PrepKind::Plus) {
                classify(-1, SignedPauli::single(c.n, prep.qubits[0], 'Z'));
            }
        }
    }
    for (const FaultLocation& loc : fault_locations(c)) {
        for (const SignedPauli& error : fault_alphabet(c, loc)) {
            classify(loc.gate_index, error);
        }
    }
    return report;
}

namespace {

/*
 * GF(2) row basis over packed (x | z) bit vectors with coordinate tags.
 * Rows keep distinct pivot bits, so a single descending pass reduces any
 * vector.  Tags record which previously inserted vectors combine into each
 * row, which turns membership questions into XOR-linear labels: the label
 * of a vector is its coordinate string over the independent vectors seen
 * so far, and labels of Pauli products XOR just like their bit vectors.
 */
struct BitRow {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    std::uint64_t tag = 0;
    int pivot = -1;
};

int top_bit(std::uint64_t x, std::uint64_t z) {
    if (z != 0) return 64 + std::bit_width(z) - 1;
    if (x != 0) return std::bit_width(x) - 1;
    return -1;
}

struct Gf2Tracker {
    std::vector<BitRow> rows;  // sorted by descending pivot

    void reduce(std::uint64_t& x, std::uint64_t& z, std::uint64_t& tag) const {
        for (const BitRow& row : rows) {
            const bool hit = row.pivot >= 64 ? ((z >> (row.pivot - 64)) & 1) != 0
                                             : ((x >> row.pivot) & 1) != 0;
            if (hit) {
                x ^= row.x;
                z ^= row.z;
                tag ^= row.tag;
            }
        }
    }

    void insert(std::uint64_t x, std::uint64_t z, std::uint64_t tag) {
        reduce(x, z, tag);
        if (x == 0 && z == 0) return;
        rows.push_back({x, z, tag, top_bit(x, z)});
        std::sort(rows.begin(), rows.end(),
                  [](const BitRow& a, const BitRow& b) { return a.pivot > b.pivot; });
    }
};

/* Sparse histogram entry: extended key -> multiplicity. */
struct KeyCount {
    std::uint64_t key = 0;
    std::uint64_t count = 0;
};

std::uint64_t count_key(const std::vector<KeyCount>& hist, std::uint64_t key) {
    auto it = std::lower_bound(hist.begin(), hist.end(), key,
                               [](const KeyCount& e, std::uint64_t k) { return e.key < k; });
    return (it != hist.end() && it->key == key) ? it->count : 0;
}

std::vector<KeyCount> sorted_key_hist(std::vector<std::uint64_t> keys) {
    std::sort(keys.begin(), keys.end());
    std::vector<KeyCount> hist;
    for (std::uint64_t k : keys) {
        if (!hist.empty() && hist.back().key == k) {
            ++hist.back().count;
        } else {
            hist.push_back({k, 1});
        }
    }
    return hist;
}

/*
 * Per-location fault data shared by the enumerators.  Each propagated
 * error is summarised by an extended key: the low m bits are its syndrome
 * against the checks, and the high bits are the coordinates of its bit
 * vector relative to the check group, in a basis grown from the residues
 * seen during planning.  A combination of faults therefore has XOR key 0
 * iff the combined error is a product of checks (trivial), and XOR key
 * with zero syndrome part but nonzero residue part iff it is harmful.
 */
struct TallyPlan {
    int m = 0;                // number of checks
    int r = 0;                // residue coordinate bits
    std::uint32_t space = 1;  // 2^m syndrome values
    std::vector<int> arity;
    std::vector<std::vector<std::uint64_t>> keys;        // per location, per error
    std::vector<std::vector<std::uint64_t>> histograms;  // syndrome-only, size `space`
    std::vector<std::vector<KeyCount>> key_hists;        // sparse, sorted by key
    int n_single = 0;
    int n_two = 0;
};

TallyPlan make_plan(const Circuit& c) {
    c.validate();
    verify_rz_certificate(c);
    if (c.checks.size() > 20) {
        throw std::invalid_argument("tally_orders: too many checks for syndrome packing");
    }
    TallyPlan plan;
    plan.m = static_cast<int>(c.checks.size());
    plan.space = std::uint32_t{1} << plan.m;

    Gf2Tracker check_span;
    for (const SignedPauli& check : c.checks) check_span.insert(check.x, check.z, 0);
    Gf2Tracker residues;  // tags are coordinates over the residues inserted so far

    for (const FaultLocation& loc : fault_locations(c)) {
        plan.arity.push_back(loc.arity);
        (loc.arity == 1 ? plan.n_single : plan.n_two) += 1;
        std::vector<std::uint64_t> keys;
        std::vector<std::uint64_t> hist(plan.space, 0);
        for (const SignedPauli& error : fault_alphabet(c, loc)) {
            SignedPauli fin = propagate(c, loc.gate_index, error);
            std::uint64_t syn = 0;
            for (int j = 0; j < plan.m; ++j) {
                syn |= static_cast<std::uint64_t>(
                           symplectic_inner_product(fin, c.checks[static_cast<std::size_t>(j)]))
                       << j;
            }
            ++hist[static_cast<std::uint32_t>(syn)];
            std::uint64_t x = fin.x;
            std::uint64_t z = fin.z;
            std::uint64_t unused = 0;
            check_span.reduce(x, z, unused);
            std::uint64_t label = 0;
            residues.reduce(x, z, label);
            if (x != 0 || z != 0) {
                // Fresh residue direction: give it the next coordinate bit.
                if (plan.m + plan.r >= 63) {
                    throw std::invalid_argument(
                        "tally_orders: fault residues exceed key packing width");
                }
                const std::uint64_t own = std::uint64_t{1} << plan.r;
                residues.rows.push_back({x, z, label ^ own, top_bit(x, z)});
                std::sort(residues.rows.begin(), residues.rows.end(),
                          [](const BitRow& a, const BitRow& b) { return a.pivot > b.pivot; });
                ++plan.r;
                label = own;
            }
            keys.push_back(syn | (label << plan.m));
        }
        plan.histograms.push_back(std::move(hist));
        plan.key_hists.push_back(sorted_key_hist(keys));
        plan.keys.push_back(std::move(keys));
    }
    return plan;
}

FaultTally empty_tally(const TallyPlan& plan, int k_max) {
    if (k_max < 1 || k_max > 3) {
        throw std::invalid_argument("tally_orders: k_max must lie in 1..3");
    }
    FaultTally t;
    t.n_locations = static_cast<int>(plan.arity.size());
    t.n_single = plan.n_single;
    t.n_two = plan.n_two;
    t.k_max = k_max;
    for (int k = 0; k <= k_max; ++k) {
        OrderTally o;
        o.order = k;
        for (int s = 0; s <= k; ++s) o.cells.push_back(ArityCell{s, k - s, 0, 0});
        t.orders.push_back(std::move(o));
    }
    t.orders[0].total = 1;
    t.orders[0].cells[0].total = 1;
    return t;
}

std::uint64_t alphabet_size(int arity) { return arity == 1 ? 3 : 15; }

void finish_totals(FaultTally& t) {
    for (OrderTally& o : t.orders) {
        if (o.order == 0) continue;
        o.total = 0;
        o.undetectable = 0;
        for (const ArityCell& cell : o.cells) {
            o.total += cell.total;
            o.undetectable += cell.undetectable;
        }
    }
}

/* Cell accumulator indexed by number of single-qubit locations in the
 * subset. */
struct Partial {
    std::uint64_t total[4][4] = {};  // [order][singles]
    std::uint64_t undet[4][4] = {};

    void merge(const Partial& other) {
        for (int k = 0; k < 4; ++k) {
            for (int s = 0; s < 4; ++s) {
                total[k][s] += other.total[k][s];
                undet[k][s] += other.undet[k][s];
            }
        }
    }
};

void tally_pairs_and_triples(const TallyPlan& plan, int k_max, int first, Partial& acc,
                             std::vector<std::uint64_t>& conv,
                             std::vector<KeyCount>& key_conv) {
    const int n = static_cast<int>(plan.arity.size());
    const std::uint32_t space = plan.space;
    const int i = first;
    const std::uint64_t size_i = alphabet_size(plan.arity[static_cast<std::size_t>(i)]);
    const auto& hist_i = plan.histograms[static_cast<std::size_t>(i)];
    const auto& kh_i = plan.key_hists[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
        const std::uint64_t size_j = alphabet_size(plan.arity[static_cast<std::size_t>(j)]);
        const auto& hist_j = plan.histograms[static_cast<std::size_t>(j)];
        const auto& kh_j = plan.key_hists[static_cast<std::size_t>(j)];
        const int s_ij = (plan.arity[static_cast<std::size_t>(i)] == 1 ? 1 : 0) +
                         (plan.arity[static_cast<std::size_t>(j)] == 1 ? 1 : 0);
        // Zero combined syndrome: the pair passes every check.
        std::uint64_t commuting_pair = 0;
        for (std::uint32_t syn = 0; syn < space; ++syn) {
            commuting_pair += hist_i[syn] * hist_j[syn];
        }
        // Zero combined key: the pair multiplies out to a product of checks.
        std::uint64_t trivial_pair = 0;
        for (const KeyCount& e : kh_i) trivial_pair += e.count * count_key(kh_j, e.key);
        acc.total[2][s_ij] += size_i * size_j;
        acc.undet[2][s_ij] += commuting_pair - trivial_pair;
        if (k_max < 3) continue;
        // conv[s] = number of (e_i, e_j) pairs whose combined syndrome is s;
        // key_conv = the same for full keys, kept sparse.
        std::fill(conv.begin(), conv.end(), 0);
        for (std::uint32_t a = 0; a < space; ++a) {
            if (hist_i[a] == 0) continue;
            for (std::uint32_t b = 0; b < space; ++b) {
                conv[a ^ b] += hist_i[a] * hist_j[b];
            }
        }
        key_conv.clear();
        for (const KeyCount& a : kh_i) {
            for (const KeyCount& b : kh_j) {
                key_conv.push_back({a.key ^ b.key, a.count * b.count});
            }
        }
        std::sort(key_conv.begin(), key_conv.end(),
                  [](const KeyCount& a, const KeyCount& b) { return a.key < b.key; });
        std::size_t out = 0;
        for (std::size_t in = 0; in < key_conv.size(); ++in) {
            if (out > 0 && key_conv[out - 1].key == key_conv[in].key) {
                key_conv[out - 1].count += key_conv[in].count;
            } else {
                key_conv[out++] = key_conv[in];
            }
        }
        key_conv.resize(out);
        for (int l = j + 1; l < n; ++l) {
            const auto& hist_l = plan.histograms[static_cast<std::size_t>(l)];
            std::uint64_t commuting_triple = 0;
            for (std::uint32_t syn = 0; syn < space; ++syn) {
                commuting_triple += conv[syn] * hist_l[syn];
            }
            std::uint64_t trivial_triple = 0;
            for (const KeyCount& e : plan.key_hists[static_cast<std::size_t>(l)]) {
                trivial_triple += e.count * count_key(key_conv, e.key);
            }
            const int s = s_ij + (plan.arity[static_cast<std::size_t>(l)] == 1 ? 1 : 0);
            acc.total[3][s] +=
                size_i * size_j * alphabet_size(plan.arity[static_cast<std::size_t>(l)]);
            acc.undet[3][s] += commuting_triple - trivial_triple;
        }
    }
}

FaultTally tally_from_partial(const TallyPlan& plan, int k_max, const Partial& acc) {
    FaultTally t = empty_tally(plan, k_max);
    for (int k = 1; k <= k_max; ++k) {
        for (int s = 0; s <= k; ++s) {
            t.orders[static_cast<std::size_t>(k)].cells[static_cast<std::size_t>(s)].total =
                acc.total[k][s];
            t.orders[static_cast<std::size_t>(k)]
                .cells[static_cast<std::size_t>(s)]
                .undetectable = acc.undet[k][s];
        }
    }
    finish_totals(t);
    return t;
}

}  // namespace

FaultTally tally_orders(const Circuit& c, int k_max, int workers) {
    const TallyPlan plan = make_plan(c);
    if (k_max < 1 || k_max > 3) {
        throw std::invalid_argument("tally_orders: k_max must lie in 1..3");
    }
    if (workers < 1) workers = 1;
    const int n = static_cast<int>(plan.arity.size());

    Partial acc;
    for (int i = 0; i < n; ++i) {
        const int s = plan.arity[static_cast<std::size_t>(i)] == 1 ? 1 : 0;
        acc.total[1][s] += alphabet_size(plan.arity[static_cast<std::size_t>(i)]);
        acc.undet[1][s] += plan.histograms[static_cast<std::size_t>(i)][0] -
                           count_key(plan.key_hists[static_cast<std::size_t>(i)], 0);
    }

    if (k_max >= 2) {
#ifdef _OPENMP
        std::vector<Partial> partials(static_cast<std::size_t>(workers));
#pragma omp parallel num_threads(workers)
        {
            Partial local;
            std::vector<std::uint64_t> conv(plan.space, 0);
            std::vector<KeyCount> key_conv;
#pragma omp for schedule(dynamic) nowait
            for (int i = 0; i < n; ++i) {
                tally_pairs_and_triples(plan, k_max, i, local, conv, key_conv);
            }
            partials[static_cast<std::size_t>(omp_get_thread_num())].merge(local);
        }
        for (const Partial& partial : partials) acc.merge(partial);
#else
        std::vector<std::uint64_t> conv(plan.space, 0);
        std::vector<KeyCount> key_conv;
        for (int i = 0; i < n; ++i) {
            tally_pairs_and_triples(plan, k_max, i, acc, conv, key_conv);
        }
#endif
    }
    return tally_from_partial(plan, k_max, acc);
}

FaultTally tally_orders_serial(const Circuit& c, int k_max) {
    const TallyPlan plan = make_plan(c);
    FaultTally t = empty_tally(plan, k_max);
    const int n = static_cast<int>(plan.arity.size());
    auto cell = [&](int k, int s) -> ArityCell& {
        return t.orders[static_cast<std::size_t>(k)].cells[static_cast<std::size_t>(s)];
    };
    auto singles = [&](int i) { return plan.arity[static_cast<std::size_t>(i)] == 1 ? 1 : 0; };
    const auto& keys = plan.keys;
    const std::uint64_t syn_mask = plan.space - 1;
    // Harmful: every check passes (zero syndrome bits) but the residue
    // bits show the product is not a product of checks.
    auto harmful = [&](std::uint64_t key) { return (key & syn_mask) == 0 && key != 0; };

    for (int i = 0; i < n; ++i) {
        ArityCell& cl = cell(1, singles(i));
        for (std::uint64_t a : keys[static_cast<std::size_t>(i)]) {
            ++cl.total;
            if (harmful(a)) ++cl.undetectable;
        }
    }
    for (int i = 0; k_max >= 2 && i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            ArityCell& cl = cell(2, singles(i) + singles(j));
            for (std::uint64_t a : keys[static_cast<std::size_t>(i)]) {
                for (std::uint64_t b : keys[static_cast<std::size_t>(j)]) {
                    ++cl.total;
                    if (harmful(a ^ b)) ++cl.undetectable;
                }
            }
        }
    }
    for (int i = 0; k_max >= 3 && i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int l = j + 1; l < n; ++l) {
                ArityCell& cl = cell(3, singles(i) + singles(j) + singles(l));
                for (std::uint64_t a : keys[static_cast<std::size_t>(i)]) {
                    for (std::uint64_t b : keys[static_cast<std::size_t>(j)]) {
                        for (std::uint64_t d : keys[static_cast<std::size_t>(l)]) {
                            ++cl.total;
                            if (harmful(a ^ b ^ d)) ++cl.undetectable;
                        }
                    }
                }
            }
        }
    }
    finish_totals(t);
    return t;
}

FaultTally tally_orders_bruteforce(const Circuit& c, int k_max) {
    c.validate();
    verify_rz_certificate(c);
    const auto locs = fault_locations(c);
    const int n = static_cast<int>(locs.size());

    // Propagated finals per location, identity first.
    std::vector<std::vector<SignedPauli>> finals;
    double combos = 1;
    TallyPlan shape;  // reuse arity bookkeeping only
    for (const FaultLocation& loc : locs) {
        std::vector<SignedPauli> f{SignedPauli::identity(c.n)};
        for (const SignedPauli& error : fault_alphabet(c, loc)) {
            f.push_back(propagate(c, loc.gate_index, error));
        }
        combos *= static_cast<double>(f.size());
        shape.arity.push_back(loc.arity);
        (loc.arity == 1 ? shape.n_single : shape.n_two) += 1;
        finals.push_back(std::move(f));
    }
    if (combos > 7e7) {
        throw std::invalid_argument("tally_orders_bruteforce: product space too large");
    }

    FaultTally t = empty_tally(shape, k_max);
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    for (;;) {
        int order = 0, singles = 0;
        for (int i = 0; i < n; ++i) {
            if (pick[static_cast<std::size_t>(i)] != 0) {
                ++order;
                if (locs[static_cast<std::size_t>(i)].arity == 1) ++singles;
            }
        }
        if (order >= 1 && order <= k_max) {
            SignedPauli combined = SignedPauli::identity(c.n);
            for (int i = 0; i < n; ++i) {
                if (pick[static_cast<std::size_t>(i)] != 0) {
                    combined = combined.multiplied(
                        finals[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]]);
                }
            }
            ArityCell& cl = t.orders[static_cast<std::size_t>(order)]
                                .cells[static_cast<std::size_t>(singles)];
            ++cl.total;
            if (!is_detectable(combined, c.checks) && !in_pauli_span(combined, c.checks)) {
                ++cl.undetectable;
            }
        }
        // Odometer step.
        int pos = 0;
        while (pos < n) {
            std::size_t& digit = pick[static_cast<std::size_t>(pos)];
            if (++digit < finals[static_cast<std::size_t>(pos)].size()) break;
            digit = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    finish_totals(t);
    return t;
}

namespace {

double choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / i;
    return r;
}

void require_probability(double p) {
    if (!(p > 0 && p < 1)) {
        throw std::invalid_argument("gate failure probability must lie in (0, 1)");
    }
}

/* Probability that more than k_max locations fail. */
double beyond_order_mass(const FaultTally& t, double p) {
    double mass = 0;
    for (int k = t.k_max + 1; k <= t.n_locations; ++k) {
        mass += choose(t.n_locations, k) * std::pow(p, k) *
                std::pow(1 - p, t.n_locations - k);
    }
    return mass;
}

}  // namespace

double undetectable_probability(const FaultTally& t, double p, bool exact_weights) {
    require_probability(p);
    const int n = t.n_locations;
    double undet = 0;
    for (int k = 1; k <= t.k_max; ++k) {
        const OrderTally& o = t.order(k);
        if (!exact_weights) {
            if (o.total == 0) continue;
            undet += choose(n, k) *
                     (static_cast<double>(o.undetectable) / static_cast<double>(o.total)) *
                     std::pow(p, k) * std::pow(1 - p, n - k);
            continue;
        }
        for (const ArityCell& cell : o.cells) {
            if (cell.undetectable == 0) continue;
            undet += static_cast<double>(cell.undetectable) * std::pow(p / 3, cell.singles) *
                     std::pow(p / 15, cell.twos) * std::pow(1 - p, n - k);
        }
    }
    return undet + beyond_order_mass(t, p);
}

double post_selection_rate(const FaultTally& t, double p, bool exact_weights) {
    require_probability(p);
    const int n = t.n_locations;
    double detected = 0;
    for (int k = 1; k <= t.k_max; ++k) {
        const OrderTally& o = t.order(k);
        if (!exact_weights) {
            if (o.total == 0) continue;
            detected += choose(n, k) *
                        (static_cast<double>(o.detectable()) / static_cast<double>(o.total)) *
                        std::pow(p, k) * std::pow(1 - p, n - k);
            continue;
        }
        for (const ArityCell& cell : o.cells) {
            const std::uint64_t det = cell.total - cell.undetectable;
            if (det == 0) continue;
            detected += static_cast<double>(det) * std::pow(p / 3, cell.singles) *
                        std::pow(p / 15, cell.twos) * std::pow(1 - p, n - k);
        }
    }
    return 1 - detected;
}

std::vector<double> log_grid(double lo, double hi, int points) {
    if (!(lo > 0) || !(hi > lo)) {
        throw std::invalid_argument("log_grid requires 0 < lo < hi");
    }
    if (points < 2) throw std::invalid_argument("log_grid requires at least 2 points");
    std::vector<double> grid;
    const double step = (std::log(hi) - std::log(lo)) / (points - 1);
    for (int i = 0; i < points; ++i) {
        grid.push_back(i == points - 1 ? hi : std::exp(std::log(lo) + step * i));
    }
    return grid;
}

std::vector<SweepRow> sweep(const std::vector<SweepEntry>& entries,
                            const std::vector<double>& p_grid, int k_max,
                            bool exact_weights, int workers) {
    std::vector<SweepRow> rows;
    for (const SweepEntry& entry : entries) {
        const FaultTally tally = tally_orders(entry.circ, k_max, workers);
        for (double p : p_grid) {
            SweepRow row;
            row.p = p;
            row.variant = entry.variant;
            row.circuit = entry.circuit;
            row.undetectable_prob = undetectable_probability(tally, p, exact_weights);
            row.acceptance_rate = post_selection_rate(tally, p, exact_weights);
            row.k_max = k_max;
            row.n_gates = tally.n_locations;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string format_sig12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "p,variant,circuit,undetectable_prob,acceptance_rate,k_max,n_gates\n";
    for (const SweepRow& row : rows) {
        out += format_sig12(row.p);
        out += ',';
        out += row.variant;
        out += ',';
        out += row.circuit;
        out += ',';
        out += format_sig12(row.undetectable_prob);
        out += ',';
        out += format_sig12(row.acceptance_rate);
        out += ',';
        out += std::to_string(row.k_max);
        out += ',';
        out += std::to_string(row.n_gates);
        out += '\n';
    }
    return out;
}

}  // namespace qedc
