#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pgg/game.hpp"
#include "pgg/reduction.hpp"

namespace pgg {

// Desk-scale equilibrium search. Every profile a solver returns has already
// passed the exact verifier it targets; nothing unverified escapes.
struct SolverConfig {
    enum class Method { pure_enum, grid, dynamics };

    Method method = Method::grid;
    std::uint32_t grid_denominator = 2;
    std::uint64_t grid_budget = 10'000'000; // cap on enumerated grid profiles
    std::uint32_t max_iterations = 256;
    std::uint32_t restarts = 64;
    Rational damping = Rational(1, 2);                  // step size, in (0,1)
    std::vector<Rational> temperature_schedule = {
        Rational(1), Rational(1, 4), Rational(1, 16), Rational(1, 64)};
    std::uint64_t seed = 0;
    std::uint64_t float_rationalization_denominator = 1000;
};

// All pure equilibria in lexicographic order.
std::vector<PureProfile> solve_pure_enum(const Game& game, std::uint32_t node_limit = 20);

// Visits grid profiles (every s_i in {0, 1/D, ..., 1}) that pass the
// well-supported check at eps on the selected nodes, in lexicographic
// order. `check_node` restricts which players' constraints are enforced
// (null = all). Returns false when the visitor stopped early.
// Branches that already violate a constraint are pruned, which cannot skip
// a qualifying profile: a player's check depends only on its own strategy
// and its in-neighbors'.
bool for_each_grid_wsne(const Game& game, const Rational& epsilon, std::uint32_t denominator,
                        const std::vector<std::uint8_t>* check_node, std::uint64_t budget,
                        const std::function<bool(const StrategyProfile&)>& visit);

// Lexicographically first accepted grid profile, if any.
std::optional<StrategyProfile> solve_grid(const Game& game, const Rational& epsilon,
                                          const SolverConfig& config);

// All accepted grid profiles in lexicographic order.
std::vector<StrategyProfile> enumerate_grid_wsne(const Game& game, const Rational& epsilon,
                                                 const SolverConfig& config);

// Damped smoothed best-response dynamics in floating point; every iterate
// is rationalized and accepted only if the exact well-supported check
// passes. When `map` is given, one restart seeds the circuit nodes from
// `circuit_hint` (bot at 1-p) and propagates forced gadget values.
std::optional<StrategyProfile> solve_dynamics(const Game& game, const Rational& epsilon,
                                              const SolverConfig& config,
                                              const ReductionMap* map = nullptr,
                                              const Assignment* circuit_hint = nullptr);

} // namespace pgg
