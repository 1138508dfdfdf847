#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pgg/reduction.hpp"
#include "support/fixtures.hpp"

using namespace pgg;
using fixtures::purify_nor_loop;
using fixtures::purify_nor_loop_equilibrium;

TEST_CASE("chain_length") {
    CHECK(chain_length(Rational(1, 2), Rational(0)) == 1);
    CHECK(chain_length(Rational(1, 2), Rational(1, 4)) == 5);
    CHECK(chain_length(Rational(1, 2), Rational(1, 10)) == 2);

    CHECK_THROWS_AS(chain_length(Rational(0), Rational(0)), Error);
    CHECK_THROWS_AS(chain_length(Rational(1), Rational(0)), Error);
    CHECK_THROWS_AS(chain_length(Rational(1, 2), Rational(-1, 10)), Error);
    CHECK_THROWS_AS(chain_length(Rational(1, 2), Rational(1, 2)), Error);
    CHECK_THROWS_AS(chain_length(Rational(3, 4), Rational(1, 4)), Error);
}

TEST_CASE("certify_params fixes the exact inequality values") {
    SUBCASE("p=1/2, eps=1/4") {
        const auto cert = certify_params(Rational(1, 2), Rational(1, 4));
        CHECK(cert.chain_l == 5);
        CHECK(cert.pow_l == Rational(243, 1024));
        CHECK(cert.p_minus_eps == Rational(1, 4));
        CHECK(cert.pow_l1_minus_p == Rational(729, 4096) - Rational(1, 2));
        CHECK(cert.chain_bound_holds);
        CHECK(cert.minimal);
        CHECK(cert.garbage_bound_holds);
    }

    SUBCASE("p=1/2, eps=1/10") {
        const auto cert = certify_params(Rational(1, 2), Rational(1, 10));
        CHECK(cert.chain_l == 2);
        CHECK(cert.pow_l == Rational(9, 25));
        CHECK(cert.p_minus_eps == Rational(2, 5));
        CHECK(cert.chain_bound_holds);
        CHECK(cert.minimal);
        CHECK(cert.garbage_bound_holds);
    }

    SUBCASE("eps=0 allows the tie (p)^1 <= p") {
        const auto cert = certify_params(Rational(1, 2), Rational(0));
        CHECK(cert.chain_l == 1);
        CHECK(cert.pow_l == Rational(1, 2));
        CHECK(cert.chain_bound_holds);
        CHECK(cert.minimal);
        CHECK(cert.garbage_bound_holds); // p^2 - p < 0
    }
}

TEST_CASE("compile: node and edge counts") {
    SUBCASE("the purify/nor loop at p=1/2, eps=1/10 gives 9 nodes and 12 edges") {
        const auto compiled = compile(purify_nor_loop(), Rational(1, 2), Rational(1, 10));
        CHECK(compiled.map.params.chain_l == 2);
        CHECK(compiled.game.node_count() == 9);
        CHECK(compiled.game.edges().size() == 12);
        CHECK(compiled.map.game_node_count() == 9);
    }

    SUBCASE("NOR-only instances add no auxiliaries") {
        CircuitInstance nor_only;
        nor_only.node_count = 3;
        nor_only.gates = {Gate::make_nor(1, 2, 0), Gate::make_nor(2, 0, 1),
                          Gate::make_nor(0, 1, 2)};
        const auto compiled = compile(nor_only, Rational(1, 3), Rational(1, 10));
        CHECK(compiled.game.node_count() == 3);
        CHECK(compiled.game.edges().size() == 6);
        CHECK(compiled.map.purify_gadgets.empty());
    }

    SUBCASE("eps at or above min{p,1-p} is rejected with the trivial-equilibrium hint") {
        CHECK_THROWS_WITH_AS(compile(purify_nor_loop(), Rational(1, 2), Rational(1, 2)),
                             doctest::Contains("trivial equilibrium"), Error);
    }

    SUBCASE("invalid instances are rejected") {
        CircuitInstance broken;
        broken.node_count = 2;
        broken.gates = {Gate::make_nor(0, 1, 1)};
        CHECK_THROWS_AS(compile(broken, Rational(1, 2), Rational(1, 10)), Error);
    }
}

TEST_CASE("compile: gadget wiring matches the construction") {
    const auto [game, map] = compile(purify_nor_loop(), Rational(1, 2), Rational(1, 10));
    // Originals keep their indices; auxiliaries follow as (d, c_1..c_5).
    CHECK(map.original_to_game == std::vector<std::uint32_t>{0, 1, 2});
    REQUIRE(map.purify_gadgets.size() == 1);
    const PurifyGadget& gadget = map.purify_gadgets[0];
    CHECK(gadget.gate == 0);
    CHECK(gadget.d == 3);
    CHECK(gadget.chain == std::vector<std::uint32_t>{4, 5, 6, 7, 8});

    // NOR(b,c -> a): a listens to b and c.
    CHECK(game.in_neighbors(0) == std::vector<std::uint32_t>{1, 2});
    // PURIFY(a -> b,c): v=b listens to d, w=c listens to c_{2l+1}.
    CHECK(game.in_neighbors(1) == std::vector<std::uint32_t>{gadget.d});
    CHECK(game.in_neighbors(2) == std::vector<std::uint32_t>{gadget.chain.back()});
    // Chain: u -> c_1 -> ... -> c_5.
    CHECK(game.in_neighbors(gadget.chain[0]) == std::vector<std::uint32_t>{0});
    for (std::size_t k = 1; k < gadget.chain.size(); ++k)
        CHECK(game.in_neighbors(gadget.chain[k])
              == std::vector<std::uint32_t>{gadget.chain[k - 1]});
    // d listens to u and the even chain nodes c_2, c_4.
    CHECK(game.in_neighbors(gadget.d)
          == std::vector<std::uint32_t>{0, gadget.chain[1], gadget.chain[3]});
}

TEST_CASE("compile: structural counts on generated instances") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto instance = generate_random(static_cast<std::uint32_t>(4 + seed % 6),
                                              Rational(1, 2), seed);
        std::size_t nor = 0, purify = 0;
        for (const Gate& gate : instance.gates)
            (gate.type == GateType::nor ? nor : purify)++;
        for (const auto& [p, eps] : {std::pair{Rational(1, 2), Rational(1, 10)},
                                     std::pair{Rational(1, 4), Rational(1, 8)},
                                     std::pair{Rational(7, 10), Rational(1, 5)}}) {
            const auto compiled = compile(instance, p, eps);
            const std::size_t l = compiled.map.params.chain_l;
            CHECK(compiled.game.node_count() == instance.node_count + (2 * l + 2) * purify);
            CHECK(compiled.game.edges().size() == 2 * nor + (3 * l + 4) * purify);
            CHECK(compiled.map.purify_gadgets.size() == purify);
        }
    }
}

TEST_CASE("lift_profile") {
    const auto compiled = compile(purify_nor_loop(), Rational(1, 2), Rational(1, 10));

    SUBCASE("identity on pure originals") {
        StrategyProfile profile;
        profile.s.assign(9, Rational(0));
        profile.s[0] = Rational(1);
        profile.s[2] = Rational(1);
        const Assignment lifted = lift_profile(compiled.map, profile);
        CHECK(lifted.values
              == std::vector<Ternary>{Ternary::one, Ternary::zero, Ternary::one});
    }

    SUBCASE("mixed strategies map to bot") {
        StrategyProfile profile;
        profile.s.assign(9, Rational(0));
        profile.s[0] = Rational(1, 2);
        CHECK(lift_profile(compiled.map, profile).values[0] == Ternary::bot);
    }

    SUBCASE("tolerance widens the pure bands") {
        StrategyProfile profile;
        profile.s.assign(9, Rational(0));
        profile.s[0] = Rational(999, 1000);
        CHECK(lift_profile(compiled.map, profile, Rational(0)).values[0] == Ternary::bot);
        CHECK(lift_profile(compiled.map, profile, Rational(1, 100)).values[0] == Ternary::one);
    }

    SUBCASE("tolerance bounds") {
        StrategyProfile profile;
        profile.s.assign(9, Rational(0));
        CHECK_THROWS_AS(lift_profile(compiled.map, profile, Rational(1, 2)), Error);
        CHECK_THROWS_AS(lift_profile(compiled.map, profile, Rational(-1, 10)), Error);
    }

    SUBCASE("length mismatch") {
        StrategyProfile profile;
        profile.s.assign(3, Rational(0));
        CHECK_THROWS_AS(lift_profile(compiled.map, profile), Error);
    }
}

TEST_CASE("verify_reduction on the worked equilibrium") {
    const CircuitInstance instance = purify_nor_loop();
    const Rational p(1, 2), eps(1, 10);

    SUBCASE("the exact equilibrium passes both stages and lifts to (bot, bot, 0)") {
        const auto check = verify_reduction(instance, p, eps, purify_nor_loop_equilibrium());
        CHECK(check.failed_stage == 0);
        CHECK(check.equilibrium.accepted);
        CHECK(check.circuit.accepted);
        CHECK(check.lifted.values
              == std::vector<Ternary>{Ternary::bot, Ternary::bot, Ternary::zero});
        // The lift is one of the brute-force solutions.
        const auto solutions = solve_bruteforce(instance);
        CHECK(std::find(solutions.begin(), solutions.end(), check.lifted) != solutions.end());
        // It is even an exact equilibrium.
        const auto compiled = compile(instance, p, eps);
        CHECK(check_wsne(compiled.game, purify_nor_loop_equilibrium(), Rational(0)).accepted);
    }

    SUBCASE("forcing b to 0 breaks stage 1 at node a") {
        StrategyProfile profile = purify_nor_loop_equilibrium();
        profile.s[1] = Rational(0);
        const auto check = verify_reduction(instance, p, eps, profile);
        CHECK(check.failed_stage == 1);
        CHECK_FALSE(check.equilibrium.accepted);
        CHECK_FALSE(check.equilibrium.players[0].violation.empty());
        CHECK(check.equilibrium.players[0].delta_u == Rational(1, 2));
    }

    SUBCASE("the all-ones profile fails stage 1 everywhere") {
        StrategyProfile profile;
        profile.s.assign(9, Rational(1));
        const auto check = verify_reduction(instance, p, eps, profile);
        CHECK(check.failed_stage == 1);
        for (const auto& player : check.equilibrium.players) {
            CHECK(player.delta_u == -p);
            CHECK_FALSE(player.violation.empty());
        }
    }
}

TEST_CASE("NOR gadget forcing") {
    const CircuitInstance instance = purify_nor_loop(); // NOR(b,c -> a) drives node a
    for (const auto& [p, eps] : {std::pair{Rational(1, 2), Rational(2, 5)},
                                 std::pair{Rational(1, 4), Rational(1, 5)},
                                 std::pair{Rational(7, 10), Rational(1, 4)}}) {
        const auto compiled = compile(instance, p, eps);
        StrategyProfile profile;
        profile.s.assign(compiled.game.node_count(), Rational(0));

        // Both inputs at 0: producing is the only eps-best response.
        CHECK(epsilon_best_responses(compiled.game, profile, 0, eps) == ActionSet::only_one);

        // Any input at 1: not producing is the only eps-best response.
        profile.s[1] = Rational(1);
        CHECK(epsilon_best_responses(compiled.game, profile, 0, eps) == ActionSet::only_zero);
        profile.s[1] = Rational(0);
        profile.s[2] = Rational(1);
        CHECK(epsilon_best_responses(compiled.game, profile, 0, eps) == ActionSet::only_zero);
    }
}

TEST_CASE("PURIFY gadget: pure inputs force the whole gadget") {
    const CircuitInstance instance = purify_nor_loop(); // PURIFY(a -> b,c)
    for (const auto& [p, eps] : {std::pair{Rational(1, 2), Rational(1, 10)},
                                 std::pair{Rational(1, 2), Rational(0)},
                                 std::pair{Rational(1, 4), Rational(1, 6)},
                                 std::pair{Rational(7, 10), Rational(1, 5)}}) {
        const auto [game, map] = compile(instance, p, eps);
        const PurifyGadget& gadget = map.purify_gadgets[0];
        const std::uint32_t l = map.params.chain_l;

        for (int input : {0, 1}) {
            const Rational x(input);
            StrategyProfile forced;
            forced.s.assign(game.node_count(), Rational(0));
            forced.s[0] = x; // u = a
            // c_{2j} = s_u, c_{2j-1} = 1 - s_u.
            for (std::size_t k = 0; k < gadget.chain.size(); ++k)
                forced.s[gadget.chain[k]] = k % 2 == 0 ? Rational(1) - x : x;
            forced.s[gadget.d] = Rational(1) - x;
            forced.s[1] = x; // v = b
            forced.s[2] = x; // w = c

            // Forward forcing: each gadget node's best-response set is the
            // singleton holding its forced value.
            const ActionSet own = input == 0 ? ActionSet::only_zero : ActionSet::only_one;
            const ActionSet opposite = input == 0 ? ActionSet::only_one : ActionSet::only_zero;
            for (std::size_t k = 0; k < gadget.chain.size(); ++k)
                CHECK(epsilon_best_responses(game, forced, gadget.chain[k], eps)
                      == (k % 2 == 0 ? opposite : own));
            CHECK(epsilon_best_responses(game, forced, gadget.d, eps) == opposite);
            CHECK(epsilon_best_responses(game, forced, 1, eps) == own);
            CHECK(epsilon_best_responses(game, forced, 2, eps) == own);

            // The collector's utility difference is (1-s_u)^{l+1} - p.
            CHECK(utility_difference(game, forced, gadget.d)
                  == (Rational(1) - x).pow(l + 1) - p);
        }
    }
}

TEST_CASE("reduction params invariant holds for swept parameters") {
    for (int pn = 1; pn <= 9; ++pn) {
        const Rational p(pn, 10);
        const Rational bound = min(p, Rational(1) - p);
        for (const auto& q : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
            const Rational eps = q * bound;
            const auto cert = certify_params(p, eps);
            CHECK(cert.chain_bound_holds);
            CHECK(cert.minimal);
            CHECK(cert.garbage_bound_holds);
        }
    }
}
