#include "doctest.h"

#include <stdexcept>

#include <string>
#include <vector>

#include "qedc/circuit.hpp"
#include "qedc/code.hpp"
#include "qedc/tableau.hpp"

using namespace qedc;

namespace {

std::vector<std::vector<int>> bit_rows(const std::vector<std::string>& rows) {
    std::vector<std::vector<int>> out;
    for (const std::string& r : rows) {
        std::vector<int> bits;
        for (char ch : r) bits.push_back(ch - '0');
        out.push_back(std::move(bits));
    }
    return out;
}

/* Reference 8x8 symplectic matrices of the four-qubit walkthrough, columns
 * (x1..x4 | z1..z4). */
const std::vector<std::string> kZz14Rows = {
    "10001001", "01000000", "00100000", "00011001",
    "00001000", "00000100", "00000010", "00000001"};
const std::vector<std::string> kXx13Rows = {
    "10000000", "01000000", "00100000", "00010000",
    "10101000", "00000100", "10100010", "00000001"};
const std::vector<std::string> kHadamard1Rows = {
    "00101001", "01000000", "00100000", "10111001",
    "10100001", "00000100", "10101011", "00000001"};
/* The full ZZ gadget circuit (ancilla pair on qubits 1,2 entering |Phi+>,
 * data on qubits 3,4). */
const std::vector<std::string> kZzPhiPlusRows = {
    "00001111", "11001111", "10100011", "10010011",
    "10001011", "11001011", "00000010", "00000001"};

SignedPauli widen_pair(const SignedPauli& p) {
    // Place a 2-qubit Pauli on the data qubits (3,4) of the gadget frame.
    return SignedPauli(4, p.x << 2, p.z << 2, p.phase);
}

}  // namespace

TEST_CASE("stabilizers and logical operators of the code") {
    for (int n : {4, 6, 8}) {
        auto stabs = qedc_stabilizers(n);
        REQUIRE(stabs.size() == 2);
        CHECK(stabs[0] == SignedPauli::from_string(std::string(static_cast<std::size_t>(n), 'X')));
        CHECK(stabs[1] == SignedPauli::from_string(std::string(static_cast<std::size_t>(n), 'Z')));
        auto logicals = logical_operators(n);
        REQUIRE(static_cast<int>(logicals.size()) == n - 2);
        for (int j = 1; j <= n - 2; ++j) {
            const LogicalPair& lp = logicals[static_cast<std::size_t>(j - 1)];
            CHECK(lp.x == logical_operator(j, n).x);
            CHECK(lp.x.x_bit(j));
            CHECK(lp.x.x_bit(n - 1));
            CHECK(lp.x.weight() == 2);
            CHECK(lp.z.z_bit(j));
            CHECK(lp.z.z_bit(n));
            // Symplectic partners: anticommute with each other, commute with
            // the stabilizers and with every other pair.
            CHECK(symplectic_inner_product(lp.x, lp.z) == 1);
            for (const SignedPauli& s : stabs) {
                CHECK(lp.x.commutes_with(s));
                CHECK(lp.z.commutes_with(s));
            }
            for (int k = 1; k <= n - 2; ++k) {
                if (k == j) continue;
                const LogicalPair& other = logicals[static_cast<std::size_t>(k - 1)];
                CHECK(lp.x.commutes_with(other.z));
                CHECK(lp.z.commutes_with(other.x));
            }
        }
    }
    CHECK_THROWS_AS(qedc_stabilizers(3), std::invalid_argument);
    CHECK_THROWS_AS(logical_operator(3, 4), std::invalid_argument);
}

TEST_CASE("the four-qubit alternative logical basis") {
    auto logicals = logical_operators_422();
    REQUIRE(logicals.size() == 2);
    CHECK(logicals[0].x == SignedPauli::from_string("XXII"));
    CHECK(logicals[0].z == SignedPauli::from_string("IZZI"));
    CHECK(logicals[1].x == SignedPauli::from_string("IXXI"));
    CHECK(logicals[1].z == SignedPauli::from_string("ZZII"));
    CHECK(symplectic_inner_product(logicals[0].x, logicals[0].z) == 1);
    CHECK(symplectic_inner_product(logicals[0].x, logicals[1].z) == 0);
}

TEST_CASE("reference four-qubit matrices match the embedded gates") {
    CHECK(gate_tableau(make_gate(GateKind::ZZ, 1, 4), 4) ==
          CliffordTableau::from_rows(4, bit_rows(kZz14Rows)));
    CHECK(gate_tableau(make_gate(GateKind::XX, 1, 3), 4) ==
          CliffordTableau::from_rows(4, bit_rows(kXx13Rows)));
}

TEST_CASE("the encoded Hadamard circuit composes to the reference matrix") {
    Circuit h = encoded_hadamard(1, 4, false);
    REQUIRE(h.gates.size() == 3);
    CHECK(h.gates[0] == make_gate(GateKind::ZZ, 1, 4));
    CHECK(h.gates[1] == make_gate(GateKind::XX, 1, 3));
    CHECK(h.gates[2] == make_gate(GateKind::ZZ, 1, 4));
    CHECK(circuit_tableau(h) == CliffordTableau::from_rows(4, bit_rows(kHadamard1Rows)));
    // Frame corrections do not change the symplectic matrix.
    CHECK(circuit_tableau(encoded_hadamard(1, 4, true)) == circuit_tableau(h));
}

TEST_CASE("logical operators step through the Hadamard as in the walkthrough") {
    Circuit h = encoded_hadamard(1, 4, false);
    // XIXI -> YIXZ -> ZIIZ -> ZIIZ and ZIIZ -> ZIIZ -> YIXZ -> XIXI.
    SignedPauli x1 = SignedPauli::from_string("XIXI");
    SignedPauli z1 = SignedPauli::from_string("ZIIZ");
    const char* x_steps[] = {"YIXZ", "ZIIZ", "ZIIZ"};
    const char* z_steps[] = {"ZIIZ", "YIXZ", "XIXI"};
    SignedPauli px = x1, pz = z1;
    for (int i = 0; i < 3; ++i) {
        px = conjugate_signed(h.gates[static_cast<std::size_t>(i)], px);
        pz = conjugate_signed(h.gates[static_cast<std::size_t>(i)], pz);
        CHECK(px.same_bits(SignedPauli::from_string(x_steps[i])));
        CHECK(pz.same_bits(SignedPauli::from_string(z_steps[i])));
    }
    // Untouched logical pair is fixed throughout.
    CHECK(conjugate_through(h, 0, SignedPauli::from_string("IXXI")) ==
          SignedPauli::from_string("IXXI"));
    CHECK(conjugate_through(h, 0, SignedPauli::from_string("IZIZ")) ==
          SignedPauli::from_string("IZIZ"));
}

TEST_CASE("Hadamard phase errors and their frame corrections") {
    // Without corrections the swap of the logical pair picks up minus signs.
    Circuit plain = encoded_hadamard(1, 4, false);
    CHECK(conjugate_through(plain, 0, SignedPauli::from_string("XIXI")) ==
          SignedPauli::from_string("-ZIIZ"));
    CHECK(conjugate_through(plain, 0, SignedPauli::from_string("ZIIZ")) ==
          SignedPauli::from_string("-XIXI"));
    // The two frame Paulis restore the exact signed gate.
    Circuit fixed = encoded_hadamard(1, 4, true);
    CHECK(conjugate_through(fixed, 0, SignedPauli::from_string("XIXI")) ==
          SignedPauli::from_string("ZIIZ"));
    CHECK(conjugate_through(fixed, 0, SignedPauli::from_string("ZIIZ")) ==
          SignedPauli::from_string("XIXI"));
    // Applying the corrected Hadamard twice is the identity on signed
    // logicals and stabilizers.
    for (const char* op : {"XIXI", "ZIIZ", "IXXI", "IZIZ", "XXXX", "ZZZZ"}) {
        SignedPauli p = SignedPauli::from_string(op);
        SignedPauli twice = conjugate_through(fixed, 0, conjugate_through(fixed, 0, p));
        CHECK(twice == p);
    }
}

TEST_CASE("encoded CNOT: native sequence acts as CNOT with plus signs") {
    for (int n : {4, 6}) {
        Circuit c = encoded_cnot_general(1, 2, n);
        CHECK(c.gates.size() == 7);
        LogicalPair l1 = logical_operator(1, n);
        LogicalPair l2 = logical_operator(2, n);
        CHECK(conjugate_through(c, 0, l1.x) == l1.x.multiplied(l2.x));
        CHECK(conjugate_through(c, 0, l2.x) == l2.x);
        CHECK(conjugate_through(c, 0, l1.z) == l1.z);
        CHECK(conjugate_through(c, 0, l2.z) == l1.z.multiplied(l2.z));
    }
    // Control and target beyond the SWAP special case.
    Circuit c = encoded_cnot(1, 3, 6);
    LogicalPair l1 = logical_operator(1, 6);
    LogicalPair l3 = logical_operator(3, 6);
    CHECK(conjugate_through(c, 0, l1.x) == l1.x.multiplied(l3.x));
    CHECK(conjugate_through(c, 0, l3.z) == l1.z.multiplied(l3.z));
}

TEST_CASE("encoded CNOT at n=4 degenerates to a single SWAP") {
    Circuit c12 = encoded_cnot(1, 2, 4);
    REQUIRE(c12.gates.size() == 1);
    CHECK(c12.gates[0] == make_gate(GateKind::Swap, 2, 3));
    Circuit c21 = encoded_cnot(2, 1, 4);
    REQUIRE(c21.gates.size() == 1);
    CHECK(c21.gates[0] == make_gate(GateKind::Swap, 1, 2));
    // CNOT action in the alternative logical basis.
    auto logicals = logical_operators_422();
    CHECK(conjugate_through(c12, 0, logicals[0].x) ==
          logicals[0].x.multiplied(logicals[1].x));
    CHECK(conjugate_through(c12, 0, logicals[1].x) == logicals[1].x);
    CHECK(conjugate_through(c12, 0, logicals[0].z) == logicals[0].z);
    CHECK(conjugate_through(c12, 0, logicals[1].z) ==
          logicals[0].z.multiplied(logicals[1].z));
}

TEST_CASE("encoded phase gate maps Xbar to +Ybar") {
    auto ybar = [](const LogicalPair& lp) {
        return SignedPauli(lp.x.n, 0, 0, 1).multiplied(lp.x).multiplied(lp.z);
    };
    for (int n : {4, 6}) {
        Circuit s = encoded_phase(1, n);
        CHECK(s.gates.size() == 1);
        LogicalPair l1 = logical_operator(1, n);
        SignedPauli y1 = ybar(l1);
        CHECK(conjugate_through(s, 0, l1.x) == y1);
        CHECK(conjugate_through(s, 0, y1) ==
              SignedPauli(l1.x.n, 0, 0, 2).multiplied(l1.x));  // -Xbar
        CHECK(conjugate_through(s, 0, l1.z) == l1.z);
    }
    // Alternative-basis phase gates.
    auto logicals = logical_operators_422();
    for (int j : {1, 2}) {
        Circuit s = encoded_phase_422(j);
        const LogicalPair& lp = logicals[static_cast<std::size_t>(j - 1)];
        CHECK(conjugate_through(s, 0, lp.x) == ybar(lp));
        CHECK(conjugate_through(s, 0, lp.z) == lp.z);
    }
}

TEST_CASE("encoded SWAP exchanges the logical pairs exactly") {
    Circuit sw = encoded_swap(1, 2, 6);
    LogicalPair l1 = logical_operator(1, 6);
    LogicalPair l2 = logical_operator(2, 6);
    CHECK(conjugate_through(sw, 0, l1.x) == l2.x);
    CHECK(conjugate_through(sw, 0, l2.z) == l1.z);

    Circuit sw422 = encoded_swap_422();
    REQUIRE(sw422.gates.size() == 1);
    CHECK(sw422.gates[0] == make_gate(GateKind::Swap, 1, 3));
    auto logicals = logical_operators_422();
    CHECK(conjugate_through(sw422, 0, logicals[0].x) == logicals[1].x);
    CHECK(conjugate_through(sw422, 0, logicals[1].z) == logicals[0].z);
}

TEST_CASE("all bare constructions fix both stabilizers with plus sign") {
    auto check_stabs = [](const Circuit& c) {
        for (const SignedPauli& s : qedc_stabilizers(c.n)) {
            CHECK(conjugate_through(c, 0, s) == s);
        }
    };
    check_stabs(encoded_phase(1, 4));
    check_stabs(encoded_phase(2, 6));
    check_stabs(encoded_phase_422(1));
    check_stabs(encoded_phase_422(2));
    check_stabs(encoded_hadamard(1, 4, true));
    check_stabs(encoded_hadamard(2, 6, true));
    check_stabs(encoded_hadamard_422(1, true));
    check_stabs(encoded_hadamard_422(2, true));
    check_stabs(encoded_cnot_general(1, 2, 4));
    check_stabs(encoded_cnot_general(2, 1, 6));
    check_stabs(encoded_cnot(1, 2, 4));
    check_stabs(encoded_swap(1, 2, 6));
    check_stabs(encoded_swap_422());
}

TEST_CASE("gadget structure: nine gates, label flip, recovery table") {
    const GateKind kinds[] = {GateKind::ZZ, GateKind::XX};
    const AncillaState states[] = {AncillaState::PhiPlus, AncillaState::PlusPlus};
    for (GateKind kind : kinds) {
        for (AncillaState in : states) {
            Gadget g = wft_gadget(kind, in);
            CHECK(g.kind == kind);
            CHECK(g.input == in);
            CHECK(g.output == flipped(in));
            REQUIRE(g.gates.size() == 9);
            int rx = 0, two = 0;
            for (const Gate& gate : g.gates) {
                if (gate.kind == GateKind::RX) ++rx;
                if (is_two_qubit(gate.kind)) ++two;
            }
            CHECK(rx == 1);
            CHECK(two == 8);
            CHECK(g.recovery == gadget_recovery(kind, in));
        }
    }
    CHECK(gadget_recovery(GateKind::ZZ, AncillaState::PhiPlus) ==
          SignedPauli::from_string("ZIZI"));
    CHECK(gadget_recovery(GateKind::XX, AncillaState::PhiPlus) ==
          SignedPauli::from_string("IZYI"));
    CHECK(gadget_recovery(GateKind::ZZ, AncillaState::PlusPlus) ==
          SignedPauli::from_string("XIXI"));
    CHECK(gadget_recovery(GateKind::XX, AncillaState::PlusPlus) ==
          SignedPauli::from_string("YIYI"));
    CHECK_THROWS_AS(wft_gadget(GateKind::YY, AncillaState::PhiPlus),
                    std::invalid_argument);
}

TEST_CASE("the ZZ gadget circuit matrix matches the reference") {
    Circuit g = wft_zz(AncillaState::PhiPlus).standalone();
    CHECK(circuit_tableau(g) == CliffordTableau::from_rows(4, bit_rows(kZzPhiPlusRows)));
}

TEST_CASE("gadget generator evolution matches the printed walkthrough") {
    CliffordTableau t =
        circuit_tableau(wft_zz(AncillaState::PhiPlus).standalone());
    struct Row {
        const char* in;
        const char* out;
    };
    // (XX, ZZ on the ancilla pair; X3, X4, Z3, Z4 on the data qubits).
    const Row rows[] = {
        {"XXII", "XXII"}, {"ZZII", "IXII"}, {"IIXI", "XIYZ"},
        {"IIIX", "XIZY"}, {"IIZI", "IIZI"}, {"IIIZ", "IIIZ"},
    };
    for (const Row& r : rows) {
        CHECK(apply_tableau(t, SignedPauli::from_string(r.in))
                  .same_bits(SignedPauli::from_string(r.out)));
    }
}

TEST_CASE("gadgets restrict to the target gate modulo output-pair stabilizers") {
    const GateKind kinds[] = {GateKind::ZZ, GateKind::XX};
    const AncillaState states[] = {AncillaState::PhiPlus, AncillaState::PlusPlus};
    for (GateKind kind : kinds) {
        for (AncillaState in : states) {
            Gadget g = wft_gadget(kind, in);
            Circuit c = g.standalone();
            CliffordTableau t = circuit_tableau(c);
            // Output-pair stabilizers, widened to the 4-qubit frame.
            std::vector<SignedPauli> out_stabs;
            if (g.output == AncillaState::PhiPlus) {
                out_stabs = {SignedPauli::from_string("XXII"),
                             SignedPauli::from_string("ZZII")};
            } else {
                out_stabs = {SignedPauli::from_string("XIII"),
                             SignedPauli::from_string("IXII")};
            }
            // Input-pair stabilizers land inside the output stabilizer group.
            std::vector<SignedPauli> in_stabs;
            if (g.input == AncillaState::PhiPlus) {
                in_stabs = {SignedPauli::from_string("XXII"),
                            SignedPauli::from_string("ZZII")};
            } else {
                in_stabs = {SignedPauli::from_string("XIII"),
                            SignedPauli::from_string("IXII")};
            }
            for (const SignedPauli& s : in_stabs) {
                CHECK(in_pauli_span(apply_tableau(t, s), out_stabs));
            }
            // Data generators map to (target image on data) x (output
            // stabilizer factor on the pair).
            Gate target = make_gate(kind, 3, 4);
            const char* letters = "IXYZ";
            for (int a = 0; a < 4; ++a) {
                for (int b = 0; b < 4; ++b) {
                    if (a == 0 && b == 0) continue;
                    SignedPauli data =
                        widen_pair(SignedPauli::single(2, 1, letters[a])
                                       .multiplied(SignedPauli::single(2, 2, letters[b])));
                    SignedPauli image = apply_tableau(t, data);
                    SignedPauli expect = conjugate_signed(target, data);
                    SignedPauli resid = image.multiplied(expect);  // bits: image XOR expect
                    CHECK((resid.x & 0b0011) == resid.x);  // supported on the pair
                    CHECK((resid.z & 0b0011) == resid.z);
                    CHECK(in_pauli_span(resid, out_stabs));
                }
            }
        }
    }
}

TEST_CASE("recovery makes the signed pushforward exact") {
    const GateKind kinds[] = {GateKind::ZZ, GateKind::XX};
    const AncillaState states[] = {AncillaState::PhiPlus, AncillaState::PlusPlus};
    const char* letters = "IXYZ";
    for (GateKind kind : kinds) {
        for (AncillaState in : states) {
            Gadget g = wft_gadget(kind, in);
            Circuit c = g.standalone();  // recovery appended as a frame entry
            // Signed stabilizer group of the output pair state; note the
            // product of +XX and +ZZ is -YY, which stabilizes |Phi+> too.
            SignedPauli s1 = g.output == AncillaState::PhiPlus
                                 ? SignedPauli::from_string("XXII")
                                 : SignedPauli::from_string("XIII");
            SignedPauli s2 = g.output == AncillaState::PhiPlus
                                 ? SignedPauli::from_string("ZZII")
                                 : SignedPauli::from_string("IXII");
            const SignedPauli group[] = {SignedPauli::identity(4), s1, s2,
                                         s1.multiplied(s2)};
            Gate target = make_gate(kind, 3, 4);
            for (int a = 0; a < 4; ++a) {
                for (int b = 0; b < 4; ++b) {
                    if (a == 0 && b == 0) continue;
                    SignedPauli data =
                        widen_pair(SignedPauli::single(2, 1, letters[a])
                                       .multiplied(SignedPauli::single(2, 2, letters[b])));
                    SignedPauli pushed = conjugate_through(c, 0, data);
                    SignedPauli expect = conjugate_signed(target, data);
                    SignedPauli resid = pushed.multiplied(expect);
                    // The leftover factor must stabilize the output pair
                    // state with eigenvalue +1, so the data action matches
                    // the target gate exactly, including sign.
                    bool in_group = false;
                    for (const SignedPauli& s : group) in_group |= (resid == s);
                    CHECK(in_group);
                }
            }
        }
    }
}

TEST_CASE("standalone gadget circuit shape") {
    Circuit c = wft_xx(AncillaState::PlusPlus).standalone();
    CHECK(c.n == 4);
    CHECK(c.data == std::vector<int>{3, 4});
    CHECK(c.ancilla == std::vector<int>{1, 2});
    REQUIRE(c.preps.size() == 1);
    CHECK(c.preps[0].kind == PrepKind::PlusPlus);
    CHECK(c.preps[0].qubits == std::vector<int>{1, 2});
    REQUIRE(c.frame.size() == 1);
    CHECK(c.frame[0].pos == 9);
    CHECK(c.frame[0].pauli == gadget_recovery(GateKind::XX, AncillaState::PlusPlus));
    REQUIRE(c.checks.size() == 4);  // output-pair stabilizers + XX, ZZ on data
}

TEST_CASE("logical rotation circuits have the documented shape") {
    Circuit rz = logical_rz(1, 4, 0.7);
    CHECK(rz.n == 5);
    REQUIRE(rz.gates.size() == 5);
    CHECK(rz.gates[0] == make_gate(GateKind::Cnot, 4, 5));
    CHECK(rz.gates[1] == make_gate(GateKind::Cnot, 5, 1));
    CHECK(rz.gates[2] == make_gate(GateKind::RZ, 1, 0, 0.7));
    CHECK(rz.gates[3] == make_gate(GateKind::Cnot, 5, 1));
    CHECK(rz.gates[4] == make_gate(GateKind::Cnot, 4, 5));
    REQUIRE(rz.checks.size() == 3);
    CHECK(rz.checks[0] == SignedPauli::from_string("XXXXI"));
    CHECK(rz.checks[1] == SignedPauli::from_string("ZZZZI"));
    CHECK(rz.checks[2] == SignedPauli::from_string("IIIIZ"));

    Circuit bare = bare_encoded_rz(1, 4, 0.7);
    CHECK(bare.n == 4);
    REQUIRE(bare.gates.size() == 3);
    CHECK(bare.gates[0] == make_gate(GateKind::Cnot, 4, 1));
    CHECK(bare.gates[1] == make_gate(GateKind::RZ, 1, 0, 0.7));
    CHECK(bare.gates[2] == make_gate(GateKind::Cnot, 4, 1));
}

TEST_CASE("initialization and readout ladders") {
    Circuit init = init_circuit(4);
    CHECK(init.n == 5);
    std::vector<Gate> ladder = {make_gate(GateKind::Cnot, 3, 5),
                                make_gate(GateKind::Cnot, 5, 4),
                                make_gate(GateKind::Cnot, 5, 2),
                                make_gate(GateKind::Cnot, 5, 1),
                                make_gate(GateKind::Cnot, 3, 5)};
    REQUIRE(init.gates.size() == 6);
    for (int i = 0; i < 5; ++i) {
        CHECK(init.gates[static_cast<std::size_t>(i)] == ladder[static_cast<std::size_t>(i)]);
    }
    CHECK(init.gates[5] == make_gate(GateKind::MZ, 5));
    REQUIRE(init.checks.size() == 3);
    CHECK(init.checks[0] == SignedPauli::from_string("XXXXI"));
    CHECK(init.checks[1] == SignedPauli::from_string("ZZZZI"));
    CHECK(init.checks[2] == SignedPauli::from_string("IIIIZ"));
    // One |+> on qubit n-1, |0> everywhere else.
    int plus = 0;
    for (const Prep& p : init.preps) {
        if (p.kind == PrepKind::Plus) {
            ++plus;
            CHECK(p.qubits == std::vector<int>{3});
        }
    }
    CHECK(plus == 1);

    Circuit ro = readout_circuit(4);
    CHECK(ro.n == 5);
    REQUIRE(ro.gates.size() == 10);
    for (int i = 0; i < 5; ++i) {
        CHECK(ro.gates[static_cast<std::size_t>(i)] == ladder[static_cast<std::size_t>(i)]);
    }
    CHECK(ro.gates[5] == make_gate(GateKind::MZ, 1));
    CHECK(ro.gates[6] == make_gate(GateKind::MZ, 2));
    CHECK(ro.gates[7] == make_gate(GateKind::MX, 3));
    CHECK(ro.gates[8] == make_gate(GateKind::MZ, 4));
    CHECK(ro.gates[9] == make_gate(GateKind::MZ, 5));
    REQUIRE(ro.checks.size() == 3);
    CHECK(ro.checks[0] == SignedPauli::from_string("ZZIZI"));
    CHECK(ro.checks[1] == SignedPauli::from_string("IIXII"));
    CHECK(ro.checks[2] == SignedPauli::from_string("IIIIZ"));
}

TEST_CASE("bell measurement and resource rotation shapes") {
    Circuit bell = bell_measurement();
    CHECK(bell.n == 3);
    REQUIRE(bell.gates.size() == 6);
    CHECK(bell.gates[0] == make_gate(GateKind::Cnot, 1, 3));
    CHECK(bell.gates[1] == make_gate(GateKind::Cnot, 3, 2));
    CHECK(bell.gates[2] == make_gate(GateKind::Cnot, 1, 3));
    CHECK(bell.gates[3] == make_gate(GateKind::MX, 1));
    CHECK(bell.gates[4] == make_gate(GateKind::MZ, 2));
    CHECK(bell.gates[5] == make_gate(GateKind::MZ, 3));

    Circuit rot = resource_rotation(0.85);
    CHECK(rot.n == 2);
    REQUIRE(rot.gates.size() == 2);
    CHECK(rot.gates[0] == make_gate(GateKind::Cnot, 1, 2));
    CHECK(rot.gates[1] == make_gate(GateKind::MZ, 2));
    REQUIRE(rot.preps.size() == 1);
    CHECK(rot.preps[0].kind == PrepKind::Resource);
    CHECK(rot.preps[0].angle == 0.85);
}
