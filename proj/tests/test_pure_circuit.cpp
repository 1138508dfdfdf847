#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pgg/circuit.hpp"
#include "support/fixtures.hpp"

using namespace pgg;

namespace {

Assignment assign(std::initializer_list<Ternary> values) {
    return Assignment{std::vector<Ternary>(values)};
}

constexpr Ternary T0 = Ternary::zero;
constexpr Ternary T1 = Ternary::one;
constexpr Ternary TB = Ternary::bot;

// Reference semantics for one gate, written directly from the defining
// implications; used as the oracle for check_assignment.
bool gate_satisfied(const Gate& gate, Ternary xu, Ternary xv, Ternary xw) {
    if (gate.type == GateType::nor) {
        if (xu == T0 && xv == T0 && xw != T1) return false;
        if ((xu == T1 || xv == T1) && xw != T0) return false;
        return true;
    }
    if (xv == TB && xw == TB) return false;
    if (xu != TB && !(xv == xu && xw == xu)) return false;
    return true;
}

} // namespace

TEST_CASE("validate_instance") {
    SUBCASE("the purify/nor loop is well formed") {
        CHECK(validate_instance(fixtures::purify_nor_loop()).empty());
    }

    SUBCASE("a node with two producers is reported") {
        CircuitInstance instance;
        instance.node_count = 3;
        instance.gates = {Gate::make_nor(0, 1, 2), Gate::make_nor(1, 0, 2)};
        const auto errors = validate_instance(instance);
        REQUIRE_FALSE(errors.empty());
        bool found = false;
        for (const auto& e : errors) found = found || e.find("output of 2") != std::string::npos;
        CHECK(found);
    }

    SUBCASE("non-distinct gate nodes are reported") {
        CircuitInstance instance;
        instance.node_count = 2;
        instance.gates = {Gate::make_nor(0, 0, 1)};
        const auto errors = validate_instance(instance);
        bool found = false;
        for (const auto& e : errors) found = found || e.find("distinct") != std::string::npos;
        CHECK(found);
    }

    SUBCASE("missing producers and out-of-range indices are reported") {
        CircuitInstance instance;
        instance.node_count = 4;
        instance.gates = {Gate::make_nor(0, 1, 7)};
        const auto errors = validate_instance(instance);
        CHECK(errors.size() >= 4); // out of range + nodes 0..3 unproduced
    }
}

TEST_CASE("check_assignment gate clauses") {
    CircuitInstance nor_only;
    nor_only.node_count = 3;
    nor_only.gates = {Gate::make_nor(1, 2, 0), Gate::make_nor(2, 0, 1), Gate::make_nor(0, 1, 2)};

    // NOR(0,0) must output 1.
    CHECK(check_assignment(nor_only, assign({T1, T0, T0})).gates[1].satisfied);
    CHECK_FALSE(check_assignment(nor_only, assign({T0, T0, T0})).gates[2].satisfied);

    CircuitInstance loop = fixtures::purify_nor_loop();

    // PURIFY with everything bot violates the intersection clause.
    const auto all_bot = check_assignment(loop, assign({TB, TB, TB}));
    CHECK_FALSE(all_bot.accepted);
    CHECK_FALSE(all_bot.gates[0].satisfied);
    CHECK(all_bot.gates[0].violation.find("bot") != std::string::npos);

    // PURIFY copies a pure input.
    CHECK(check_assignment(loop, assign({T1, T1, T1})).gates[0].satisfied);
    CHECK_FALSE(check_assignment(loop, assign({T1, T1, T0})).gates[0].satisfied);

    CHECK_THROWS_AS(check_assignment(loop, assign({T0, T0})), Error);
}

TEST_CASE("check_assignment agrees with the clause oracle on all 27 values per gate type") {
    for (const GateType type : {GateType::nor, GateType::purify}) {
        CircuitInstance instance;
        instance.node_count = 3;
        // Producers for every node so the instance is valid; gate 0 is probed.
        if (type == GateType::nor)
            instance.gates = {Gate::make_nor(0, 1, 2), Gate::make_purify(2, 0, 1)};
        else
            instance.gates = {Gate::make_purify(0, 1, 2), Gate::make_nor(1, 2, 0)};
        const Gate probe = instance.gates[0];
        for (int u = 0; u < 3; ++u)
            for (int v = 0; v < 3; ++v)
                for (int w = 0; w < 3; ++w) {
                    Assignment a;
                    a.values.assign(3, T0);
                    a.values[probe.u] = static_cast<Ternary>(u);
                    a.values[probe.v] = static_cast<Ternary>(v);
                    a.values[probe.w] = static_cast<Ternary>(w);
                    const bool expected =
                        gate_satisfied(probe, static_cast<Ternary>(u), static_cast<Ternary>(v),
                                       static_cast<Ternary>(w));
                    CHECK(check_assignment(instance, a).gates[0].satisfied == expected);
                }
    }
}

TEST_CASE("solve_bruteforce on the purify/nor loop") {
    const CircuitInstance loop = fixtures::purify_nor_loop();
    const auto solutions = solve_bruteforce(loop);

    // Independent filter over all 27 assignments.
    std::vector<Assignment> expected;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                const Assignment candidate = assign(
                    {static_cast<Ternary>(a), static_cast<Ternary>(b), static_cast<Ternary>(c)});
                const bool purify_ok =
                    gate_satisfied(loop.gates[0], candidate.values[0], candidate.values[1],
                                   candidate.values[2]);
                const bool nor_ok =
                    gate_satisfied(loop.gates[1], candidate.values[1], candidate.values[2],
                                   candidate.values[0]);
                if (purify_ok && nor_ok) expected.push_back(candidate);
            }
    CHECK(solutions == expected);

    // The two known solutions, in lexicographic order (0 < 1 < bot).
    REQUIRE(solutions.size() == 2);
    CHECK(solutions[0] == assign({TB, T0, TB}));
    CHECK(solutions[1] == assign({TB, TB, T0}));
    CHECK(std::find(solutions.begin(), solutions.end(), assign({T0, T0, T0})) == solutions.end());
}

TEST_CASE("solve_bruteforce enforces the node limit") {
    CircuitInstance wide;
    wide.node_count = 13;
    CHECK_THROWS_AS(solve_bruteforce(wide, 12), Error);
}

TEST_CASE("generate_random") {
    SUBCASE("deterministic in the seed") {
        const auto a = generate_random(10, Rational(1, 2), 7);
        const auto b = generate_random(10, Rational(1, 2), 7);
        CHECK(a == b);
        const auto c = generate_random(10, Rational(1, 2), 8);
        CHECK(a != c);
    }

    SUBCASE("output is always a valid instance") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto instance =
                generate_random(static_cast<std::uint32_t>(3 + seed % 9), Rational(1, 3), seed);
            CHECK(validate_instance(instance).empty());
        }
    }

    SUBCASE("nor-fraction 0 yields only PURIFY gates and node count in {6,7}") {
        const auto instance = generate_random(6, Rational(0), 1);
        for (const Gate& gate : instance.gates) CHECK(gate.type == GateType::purify);
        CHECK(instance.node_count >= 6);
        CHECK(instance.node_count <= 7);
    }

    SUBCASE("nor-fraction 1 yields only NOR gates") {
        const auto instance = generate_random(5, Rational(1), 3);
        for (const Gate& gate : instance.gates) CHECK(gate.type == GateType::nor);
        CHECK(instance.node_count == 5);
    }

    CHECK_THROWS_AS(generate_random(2, Rational(1, 2), 0), Error);
}

TEST_CASE("random instances have solutions and every reported solution checks out") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const auto instance = generate_random(static_cast<std::uint32_t>(3 + seed % 8),
                                              Rational(static_cast<long>(seed % 3), 3), seed);
        if (instance.node_count > 10) continue;
        const auto solutions = solve_bruteforce(instance);
        CHECK_FALSE(solutions.empty());
        for (const Assignment& solution : solutions)
            CHECK(check_assignment(instance, solution).accepted);
    }
}
