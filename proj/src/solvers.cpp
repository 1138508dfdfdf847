#include "pgg/solvers.hpp"

#include <algorithm>
#include <cmath>

#include "pgg/errors.hpp"
#include "pgg/random_util.hpp"

namespace pgg {

namespace {

bool pure_profile_is_equilibrium(const Game& game, const std::vector<std::uint8_t>& actions) {
    for (std::uint32_t i = 0; i < game.node_count(); ++i) {
        bool producing_neighbor = false;
        for (std::uint32_t j : game.in_neighbors(i))
            if (actions[j] == 1) { producing_neighbor = true; break; }
        if ((actions[i] == 1) == producing_neighbor) return false;
    }
    return true;
}

} // namespace

std::vector<PureProfile> solve_pure_enum(const Game& game, std::uint32_t node_limit) {
    if (game.node_count() > node_limit)
        throw Error("game has " + std::to_string(game.node_count()) +
                    " nodes, pure enumeration limit is " + std::to_string(node_limit));
    std::vector<PureProfile> found;
    std::vector<std::uint8_t> actions(game.node_count(), 0);
    while (true) {
        if (pure_profile_is_equilibrium(game, actions)) found.push_back(PureProfile{actions});
        std::size_t i = actions.size();
        while (i > 0) {
            if (actions[i - 1] == 0) { actions[i - 1] = 1; break; }
            actions[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
    }
    return found;
}

bool for_each_grid_wsne(const Game& game, const Rational& epsilon, std::uint32_t denominator,
                        const std::vector<std::uint8_t>* check_node, std::uint64_t budget,
                        const std::function<bool(const StrategyProfile&)>& visit) {
    if (denominator == 0) throw Error("grid denominator must be positive");
    if (epsilon < Rational(0)) throw Error("epsilon must be non-negative");
    if (check_node && check_node->size() != game.node_count())
        throw Error("check_node mask length mismatch");

    const std::uint32_t n = game.node_count();
    std::uint64_t grid_size = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (grid_size > budget / (denominator + 1))
            throw Error("grid of (" + std::to_string(denominator) + "+1)^" + std::to_string(n) +
                        " profiles exceeds the budget of " + std::to_string(budget));
        grid_size *= denominator + 1;
    }

    std::vector<Rational> values;
    values.reserve(denominator + 1);
    for (std::uint32_t k = 0; k <= denominator; ++k)
        values.emplace_back(static_cast<long>(k), static_cast<long>(denominator));

    // A player's constraint is decided once its own strategy and all its
    // in-neighbors' strategies are fixed; group players by that depth.
    std::vector<std::vector<std::uint32_t>> decided_at(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (check_node && !(*check_node)[i]) continue;
        std::uint32_t depth = i;
        for (std::uint32_t j : game.in_neighbors(i)) depth = std::max(depth, j);
        decided_at[depth].push_back(i);
    }

    StrategyProfile profile;
    profile.s.assign(n, Rational(0));
    auto descend = [&](auto&& self, std::uint32_t depth) -> bool {
        if (depth == n) return visit(profile);
        for (std::uint32_t k = 0; k <= denominator; ++k) {
            profile.s[depth] = values[k];
            bool feasible = true;
            for (std::uint32_t i : decided_at[depth])
                if (!plays_epsilon_best_response(game, profile, i, epsilon)) {
                    feasible = false;
                    break;
                }
            if (feasible && !self(self, depth + 1)) return false;
        }
        return true;
    };
    return descend(descend, 0);
}

std::optional<StrategyProfile> solve_grid(const Game& game, const Rational& epsilon,
                                          const SolverConfig& config) {
    std::optional<StrategyProfile> first;
    for_each_grid_wsne(game, epsilon, config.grid_denominator, nullptr, config.grid_budget,
                       [&](const StrategyProfile& profile) {
                           first = profile;
                           return false;
                       });
    return first;
}

std::vector<StrategyProfile> enumerate_grid_wsne(const Game& game, const Rational& epsilon,
                                                 const SolverConfig& config) {
    std::vector<StrategyProfile> all;
    for_each_grid_wsne(game, epsilon, config.grid_denominator, nullptr, config.grid_budget,
                       [&](const StrategyProfile& profile) {
                           all.push_back(profile);
                           return true;
                       });
    return all;
}

namespace {

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double random_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Circuit-solution values on the originals (bot at 1-p), forced values on
// the gadget chains. The gate's input and the pure-output node are read off
// the compiled game's wiring.
std::vector<double> structured_seed(const Game& game, const ReductionMap& map,
                                    const Assignment& hint, double p, double eps) {
    std::vector<double> s(game.node_count(), 1.0 - p);
    const auto value_of = [&](Ternary t) {
        if (t == Ternary::zero) return 0.0;
        if (t == Ternary::one) return 1.0;
        return 1.0 - p;
    };
    for (std::size_t orig = 0; orig < map.original_to_game.size(); ++orig)
        s[map.original_to_game[orig]] = value_of(hint.values[orig]);
    for (const PurifyGadget& gadget : map.purify_gadgets) {
        const std::uint32_t input = game.in_neighbors(gadget.chain.front())[0];
        double first_link; // seed of c_1
        if (s[input] <= eps) first_link = 1.0;
        else if (s[input] >= 1.0 - eps) first_link = 0.0;
        else {
            // Garbage input: align the chain with the hinted value of w,
            // whose sole in-neighbor is the chain end.
            first_link = 1.0; // default keeps w at 0
            for (std::uint32_t node = 0; node < game.node_count(); ++node) {
                const auto& nbrs = game.in_neighbors(node);
                if (nbrs.size() == 1 && nbrs[0] == gadget.chain.back()) {
                    if (s[node] >= 1.0 - eps) first_link = 0.0;
                    else if (s[node] > eps) first_link = -1.0; // w mixed: keep chain mixed
                    break;
                }
            }
        }
        for (std::size_t k = 0; k < gadget.chain.size(); ++k) {
            if (first_link < 0.0) s[gadget.chain[k]] = 1.0 - p;
            else s[gadget.chain[k]] = k % 2 == 0 ? first_link : 1.0 - first_link;
        }
        double survival = 1.0 - s[input];
        for (std::size_t k = 1; k < gadget.chain.size(); k += 2)
            survival *= 1.0 - s[gadget.chain[k]];
        const double delta_d = survival - p;
        if (delta_d > eps) s[gadget.d] = 1.0;
        else if (delta_d < -eps) s[gadget.d] = 0.0;
        else s[gadget.d] = 1.0 - p;
    }
    return s;
}

} // namespace

std::optional<StrategyProfile> solve_dynamics(const Game& game, const Rational& epsilon,
                                              const SolverConfig& config,
                                              const ReductionMap* map,
                                              const Assignment* circuit_hint) {
    if (epsilon < Rational(0)) throw Error("epsilon must be non-negative");
    if (config.damping <= Rational(0) || config.damping >= Rational(1))
        throw Error("damping must lie strictly between 0 and 1");
    if (config.temperature_schedule.empty())
        throw Error("temperature schedule must not be empty");
    for (const Rational& t : config.temperature_schedule)
        if (t <= Rational(0)) throw Error("temperatures must be positive");
    if (config.float_rationalization_denominator == 0)
        throw Error("rationalization denominator must be positive");
    if (map && circuit_hint && circuit_hint->values.size() != map->original_to_game.size())
        throw Error("circuit hint length mismatch");

    const std::uint32_t n = game.node_count();
    const double p = game.price().to_double();
    const double eps = epsilon.to_double();
    const double damping = config.damping.to_double();
    const std::uint64_t denom = config.float_rationalization_denominator;
    std::vector<double> temperatures;
    temperatures.reserve(config.temperature_schedule.size());
    for (const Rational& t : config.temperature_schedule) temperatures.push_back(t.to_double());

    std::mt19937_64 rng(config.seed);
    std::vector<double> s(n), delta(n);

    const auto rationalized = [&]() {
        StrategyProfile profile;
        profile.s.reserve(n);
        for (double value : s) {
            const double clamped = std::clamp(value, 0.0, 1.0);
            profile.s.push_back(Rational::from_double_rounded(clamped, denom));
        }
        return profile;
    };

    for (std::uint32_t attempt = 0; attempt < config.restarts; ++attempt) {
        if (attempt == 0 && map && circuit_hint) {
            s = structured_seed(game, *map, *circuit_hint, p, eps);
        } else {
            for (double& value : s) value = random_unit(rng);
        }
        {
            StrategyProfile candidate = rationalized();
            if (is_wsne(game, candidate, epsilon)) return candidate;
        }
        for (std::uint32_t iter = 0; iter < config.max_iterations; ++iter) {
            const std::size_t slot = temperatures.size() * iter / config.max_iterations;
            const double temperature = temperatures[std::min(slot, temperatures.size() - 1)];
            for (std::uint32_t i = 0; i < n; ++i) {
                double survival = 1.0;
                for (std::uint32_t j : game.in_neighbors(i)) survival *= 1.0 - s[j];
                delta[i] = survival - p;
            }
            for (std::uint32_t i = 0; i < n; ++i)
                s[i] = (1.0 - damping) * s[i] + damping * logistic(delta[i] / temperature);
            StrategyProfile candidate = rationalized();
            if (is_wsne(game, candidate, epsilon)) return candidate;
        }
    }
    return std::nullopt;
}

} // namespace pgg
