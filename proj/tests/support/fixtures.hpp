#pragma once

#include "pgg/circuit.hpp"
#include "pgg/game.hpp"
#include "pgg/rational.hpp"

namespace fixtures {

using pgg::Game;
using pgg::Rational;

// Directed cycle 0 -> 1 -> 2 -> 0.
inline Game three_cycle(const Rational& price = Rational(1, 2)) {
    return Game(3, price, {{0, 1}, {1, 2}, {2, 0}});
}

// Two mutually connected players.
inline Game two_cycle(const Rational& price = Rational(1, 2)) {
    return Game(2, price, {{0, 1}, {1, 0}});
}

// Circuit over nodes a=0, b=1, c=2 with PURIFY(a -> b,c) and NOR(b,c -> a).
// Its two solutions are (bot, 0, bot) and (bot, bot, 0).
inline pgg::CircuitInstance purify_nor_loop() {
    pgg::CircuitInstance instance;
    instance.node_count = 3;
    instance.gates = {pgg::Gate::make_purify(0, 1, 2), pgg::Gate::make_nor(1, 2, 0)};
    return instance;
}

// Exact equilibrium of the purify_nor_loop compilation at p=1/2, eps=1/10
// (l=2): node order (a, b, c, d, c1..c5).
inline pgg::StrategyProfile purify_nor_loop_equilibrium() {
    pgg::StrategyProfile profile;
    profile.s = {Rational(1, 2), Rational(1, 2), Rational(0), Rational(1, 2), Rational(1),
                 Rational(0),    Rational(1),    Rational(0), Rational(1)};
    return profile;
}

} // namespace fixtures
