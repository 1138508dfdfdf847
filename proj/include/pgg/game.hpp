#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pgg/rational.hpp"

namespace pgg {

// Subset of the binary action set {0,1}.
enum class ActionSet : std::uint8_t {
    none = 0,
    only_zero = 1,
    only_one = 2,
    both = 3,
};

inline bool contains(ActionSet set, int action) {
    const auto bit = action == 0 ? 1u : 2u;
    return (static_cast<std::uint8_t>(set) & bit) != 0;
}

inline bool subset_of(ActionSet inner, ActionSet outer) {
    const auto a = static_cast<std::uint8_t>(inner);
    const auto b = static_cast<std::uint8_t>(outer);
    return (a & ~b) == 0;
}

std::string to_string(ActionSet set);

using Edge = std::pair<std::uint32_t, std::uint32_t>; // (from, to)

// Indivisible public goods game on a directed graph. Players are nodes;
// producing the good costs `price` and benefits the producer and every
// out-neighbor. Immutable after construction.
class Game {
public:
    // Validates: price strictly inside (0,1), indices in range, no
    // self-loops, no parallel edges. In-neighbor lists are stored sorted.
    Game(std::uint32_t node_count, Rational price, const std::vector<Edge>& edges);

    std::uint32_t node_count() const { return node_count_; }
    const Rational& price() const { return price_; }
    const std::vector<std::uint32_t>& in_neighbors(std::uint32_t node) const;

    // Edges sorted by (to, from); matches the serialized form.
    std::vector<Edge> edges() const;

    bool operator==(const Game&) const = default;

private:
    std::uint32_t node_count_;
    Rational price_;
    std::vector<std::vector<std::uint32_t>> in_;
};

// One production probability per player.
struct StrategyProfile {
    std::vector<Rational> s;

    bool operator==(const StrategyProfile&) const = default;
};

// One pure action (0 or 1) per player.
struct PureProfile {
    std::vector<std::uint8_t> a;

    bool operator==(const PureProfile&) const = default;
};

StrategyProfile to_strategy_profile(const PureProfile& pure);

struct PlayerCheck {
    std::uint32_t player = 0;
    Rational delta_u;
    ActionSet support = ActionSet::both;
    ActionSet best_responses = ActionSet::both;
    std::string violation; // empty when the player passes
};

struct EquilibriumReport {
    bool accepted = true;
    std::vector<PlayerCheck> players;
};

// Expected payoff of `player` for pure action `action` (0 or 1) against the
// mixed strategies of the others. The empty in-neighborhood gives payoff 0
// for action 0 (the empty product is 1).
Rational expected_payoff(const Game& game, const StrategyProfile& profile,
                         std::uint32_t player, int action);

// s_i * u_i(1, s_-i) + (1 - s_i) * u_i(0, s_-i)
Rational mixed_expected_payoff(const Game& game, const StrategyProfile& profile,
                               std::uint32_t player);

// Delta u_i = prod_{j in N(i)} (1 - s_j) - p; always in [-p, 1-p].
Rational utility_difference(const Game& game, const StrategyProfile& profile,
                            std::uint32_t player);

// The support of a single production probability: {0} at 0, {1} at 1,
// {0,1} strictly in between.
ActionSet support_of(const Rational& strategy);

// {1} if Delta u > eps, {0} if Delta u < -eps, {0,1} on the closed interval
// [-eps, eps]. Comparisons are exact.
ActionSet epsilon_best_responses(const Game& game, const StrategyProfile& profile,
                                 std::uint32_t player, const Rational& epsilon);

// Well-supported check: every action in each player's support must be an
// eps-best-response.
EquilibriumReport check_wsne(const Game& game, const StrategyProfile& profile,
                             const Rational& epsilon);

// eps-Nash check: each player's expected payoff is within eps of their
// best pure-response payoff.
EquilibriumReport check_epsilon_ne(const Game& game, const StrategyProfile& profile,
                                   const Rational& epsilon);

// Pure equilibrium check: a producer must have no producing in-neighbor and
// a non-producer must have at least one.
EquilibriumReport check_pure_ne(const Game& game, const PureProfile& actions);

// Lemma-style trivial equilibrium: all-ones when eps >= p (preferred when
// both branches apply), all-zeros when eps >= 1-p. Throws otherwise.
StrategyProfile trivial_wsne(const Game& game, const Rational& epsilon);

// Fast paths used by the solvers; equivalent to inspecting check_wsne.
bool plays_epsilon_best_response(const Game& game, const StrategyProfile& profile,
                                 std::uint32_t player, const Rational& epsilon);
bool is_wsne(const Game& game, const StrategyProfile& profile, const Rational& epsilon);

void validate_profile(const Game& game, const StrategyProfile& profile);
void validate_pure_profile(const Game& game, const PureProfile& actions);

} // namespace pgg
