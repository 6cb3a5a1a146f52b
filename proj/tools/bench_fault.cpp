/*
 * Benchmark of the parallel fault enumerator against the serial reference
 * on the compiled weakly fault-tolerant CNOT.  `--quick` runs a reduced
 * configuration suitable as a smoke test; any tally mismatch between the
 * implementations is a hard failure.
 */

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "qedc/compiler.hpp"
#include "qedc/fault.hpp"

namespace {

using namespace qedc;

Circuit wft_cnot_circuit() {
    LogicalProgram program;
    program.num_logical = 2;
    LogicalInstruction ins;
    ins.op = LogicalOp::Cnot;
    ins.j = 1;
    ins.k = 2;
    program.instructions = {ins};
    CompileOptions options;
    options.wft = true;
    return lower(program, options).physical;
}

bool same_tally(const FaultTally& a, const FaultTally& b) {
    if (a.k_max != b.k_max || a.n_locations != b.n_locations) return false;
    for (int k = 0; k <= a.k_max; ++k) {
        const OrderTally& x = a.order(k);
        const OrderTally& y = b.order(k);
        if (x.total != y.total || x.undetectable != y.undetectable) return false;
        if (x.cells.size() != y.cells.size()) return false;
        for (std::size_t i = 0; i < x.cells.size(); ++i) {
            if (x.cells[i].total != y.cells[i].total ||
                x.cells[i].undetectable != y.cells[i].undetectable) {
                return false;
            }
        }
    }
    return true;
}

template <typename Fn>
double best_of_ms(int reps, Fn&& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const auto stop = std::chrono::steady_clock::now();
        best = std::min(best,
                        std::chrono::duration<double, std::milli>(stop - start).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;
    }
    const Circuit circuit = wft_cnot_circuit();
    const int k_max = quick ? 2 : 3;
    const int reps = quick ? 1 : 3;

    std::printf("circuit: %d gates on %d qubits, k_max %d\n", circuit.gate_count(),
                circuit.n, k_max);

    FaultTally reference;
    const double serial_ms =
        best_of_ms(reps, [&] { reference = tally_orders_serial(circuit, k_max); });
    std::printf("%-18s %10.2f ms\n", "serial reference", serial_ms);

    bool all_match = true;
    for (int workers : {1, 2, 4, 8}) {
        FaultTally tally;
        const double ms =
            best_of_ms(reps, [&] { tally = tally_orders(circuit, k_max, workers); });
        const bool match = same_tally(tally, reference);
        all_match = all_match && match;
        std::printf("workers %-10d %10.2f ms  %s  (speedup %.2fx)\n", workers, ms,
                    match ? "match " : "MISMATCH", serial_ms / ms);
    }
    for (int k = 1; k <= k_max; ++k) {
        std::printf("order %d: total %llu, undetectable %llu\n", k,
                    static_cast<unsigned long long>(reference.order(k).total),
                    static_cast<unsigned long long>(reference.order(k).undetectable));
    }
    return all_match ? 0 : 1;
}
