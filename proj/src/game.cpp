#include "pgg/game.hpp"

#include <algorithm>

#include "pgg/errors.hpp"

namespace pgg {

std::string to_string(ActionSet set) {
    switch (set) {
        case ActionSet::none: return "{}";
        case ActionSet::only_zero: return "{0}";
        case ActionSet::only_one: return "{1}";
        case ActionSet::both: return "{0,1}";
    }
    return "{}";
}

Game::Game(std::uint32_t node_count, Rational price, const std::vector<Edge>& edges)
    : node_count_(node_count), price_(std::move(price)), in_(node_count) {
    if (node_count == 0) throw Error("game must have at least one node");
    if (!(Rational(0) < price_ && price_ < Rational(1)))
        throw Error("price must lie strictly between 0 and 1, got " + price_.str());
    for (const auto& [from, to] : edges) {
        if (from >= node_count_ || to >= node_count_)
            throw Error("edge (" + std::to_string(from) + "," + std::to_string(to) +
                        ") out of range for " + std::to_string(node_count_) + " nodes");
        if (from == to)
            throw Error("self-loop at node " + std::to_string(from));
        in_[to].push_back(from);
    }
    for (std::uint32_t node = 0; node < node_count_; ++node) {
        auto& nbrs = in_[node];
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw Error("duplicate edge into node " + std::to_string(node));
    }
}

const std::vector<std::uint32_t>& Game::in_neighbors(std::uint32_t node) const {
    if (node >= node_count_) throw Error("node index out of range");
    return in_[node];
}

std::vector<Edge> Game::edges() const {
    std::vector<Edge> out;
    for (std::uint32_t to = 0; to < node_count_; ++to)
        for (std::uint32_t from : in_[to]) out.emplace_back(from, to);
    return out;
}

StrategyProfile to_strategy_profile(const PureProfile& pure) {
    StrategyProfile profile;
    profile.s.reserve(pure.a.size());
    for (std::uint8_t action : pure.a) {
        if (action > 1) throw Error("pure action must be 0 or 1");
        profile.s.emplace_back(action);
    }
    return profile;
}

void validate_profile(const Game& game, const StrategyProfile& profile) {
    if (profile.s.size() != game.node_count())
        throw Error("profile has " + std::to_string(profile.s.size()) + " entries, game has " +
                    std::to_string(game.node_count()) + " nodes");
    for (const Rational& s : profile.s)
        if (s < Rational(0) || s > Rational(1))
            throw Error("strategy " + s.str() + " outside [0,1]");
}

void validate_pure_profile(const Game& game, const PureProfile& actions) {
    if (actions.a.size() != game.node_count())
        throw Error("pure profile has " + std::to_string(actions.a.size()) +
                    " entries, game has " + std::to_string(game.node_count()) + " nodes");
    for (std::uint8_t a : actions.a)
        if (a > 1) throw Error("pure action must be 0 or 1");
}

namespace {

void check_player_index(const Game& game, std::uint32_t player) {
    if (player >= game.node_count()) throw Error("player index out of range");
}

void check_epsilon(const Rational& epsilon) {
    if (epsilon < Rational(0)) throw Error("epsilon must be non-negative");
}

// prod_{j in N(i)} (1 - s_j); 1 for the empty neighborhood.
Rational survival_product(const Game& game, const StrategyProfile& profile, std::uint32_t player) {
    Rational product(1);
    for (std::uint32_t j : game.in_neighbors(player)) {
        if (profile.s[j] == Rational(1)) return Rational(0);
        product *= Rational(1) - profile.s[j];
    }
    return product;
}

ActionSet best_responses_from_delta(const Rational& delta_u, const Rational& epsilon) {
    if (delta_u > epsilon) return ActionSet::only_one;
    if (delta_u < -epsilon) return ActionSet::only_zero;
    return ActionSet::both;
}

} // namespace

Rational expected_payoff(const Game& game, const StrategyProfile& profile,
                         std::uint32_t player, int action) {
    validate_profile(game, profile);
    check_player_index(game, player);
    if (action != 0 && action != 1) throw Error("action must be 0 or 1");
    if (action == 1) return Rational(1) - game.price();
    return Rational(1) - survival_product(game, profile, player);
}

Rational mixed_expected_payoff(const Game& game, const StrategyProfile& profile,
                               std::uint32_t player) {
    validate_profile(game, profile);
    check_player_index(game, player);
    const Rational& s = profile.s[player];
    const Rational u1 = Rational(1) - game.price();
    const Rational u0 = Rational(1) - survival_product(game, profile, player);
    return s * u1 + (Rational(1) - s) * u0;
}

Rational utility_difference(const Game& game, const StrategyProfile& profile,
                            std::uint32_t player) {
    validate_profile(game, profile);
    check_player_index(game, player);
    return survival_product(game, profile, player) - game.price();
}

ActionSet support_of(const Rational& strategy) {
    if (strategy == Rational(0)) return ActionSet::only_zero;
    if (strategy == Rational(1)) return ActionSet::only_one;
    return ActionSet::both;
}

ActionSet epsilon_best_responses(const Game& game, const StrategyProfile& profile,
                                 std::uint32_t player, const Rational& epsilon) {
    validate_profile(game, profile);
    check_player_index(game, player);
    check_epsilon(epsilon);
    return best_responses_from_delta(utility_difference(game, profile, player), epsilon);
}

EquilibriumReport check_wsne(const Game& game, const StrategyProfile& profile,
                             const Rational& epsilon) {
    validate_profile(game, profile);
    check_epsilon(epsilon);
    EquilibriumReport report;
    report.players.reserve(game.node_count());
    for (std::uint32_t i = 0; i < game.node_count(); ++i) {
        PlayerCheck check;
        check.player = i;
        check.delta_u = survival_product(game, profile, i) - game.price();
        check.support = support_of(profile.s[i]);
        check.best_responses = best_responses_from_delta(check.delta_u, epsilon);
        if (!subset_of(check.support, check.best_responses)) {
            check.violation = "support " + to_string(check.support) +
                              " not within eps-best responses " + to_string(check.best_responses) +
                              " (delta_u = " + check.delta_u.str() + ")";
            report.accepted = false;
        }
        report.players.push_back(std::move(check));
    }
    return report;
}

EquilibriumReport check_epsilon_ne(const Game& game, const StrategyProfile& profile,
                                   const Rational& epsilon) {
    validate_profile(game, profile);
    check_epsilon(epsilon);
    EquilibriumReport report;
    report.players.reserve(game.node_count());
    for (std::uint32_t i = 0; i < game.node_count(); ++i) {
        PlayerCheck check;
        check.player = i;
        const Rational u1 = Rational(1) - game.price();
        const Rational u0 = Rational(1) - survival_product(game, profile, i);
        check.delta_u = u1 - u0;
        check.support = support_of(profile.s[i]);
        check.best_responses = best_responses_from_delta(check.delta_u, epsilon);
        const Rational mixed = profile.s[i] * u1 + (Rational(1) - profile.s[i]) * u0;
        const Rational best = max(u0, u1);
        if (mixed < best - epsilon) {
            check.violation = "regret " + (best - mixed).str() + " exceeds eps";
            report.accepted = false;
        }
        report.players.push_back(std::move(check));
    }
    return report;
}

EquilibriumReport check_pure_ne(const Game& game, const PureProfile& actions) {
    validate_pure_profile(game, actions);
    EquilibriumReport report;
    report.players.reserve(game.node_count());
    for (std::uint32_t i = 0; i < game.node_count(); ++i) {
        bool producing_neighbor = false;
        for (std::uint32_t j : game.in_neighbors(i))
            if (actions.a[j] == 1) { producing_neighbor = true; break; }

        PlayerCheck check;
        check.player = i;
        check.delta_u = (producing_neighbor ? Rational(0) : Rational(1)) - game.price();
        check.support = actions.a[i] == 1 ? ActionSet::only_one : ActionSet::only_zero;
        check.best_responses = producing_neighbor ? ActionSet::only_zero : ActionSet::only_one;
        if (actions.a[i] == 1 && producing_neighbor) {
            check.violation = "produces although an in-neighbor already produces";
            report.accepted = false;
        } else if (actions.a[i] == 0 && !producing_neighbor) {
            check.violation = "does not produce although no in-neighbor produces";
            report.accepted = false;
        }
        report.players.push_back(std::move(check));
    }
    return report;
}

StrategyProfile trivial_wsne(const Game& game, const Rational& epsilon) {
    check_epsilon(epsilon);
    const Rational one_minus_p = Rational(1) - game.price();
    StrategyProfile profile;
    if (epsilon >= game.price())
        profile.s.assign(game.node_count(), Rational(1));
    else if (epsilon >= one_minus_p)
        profile.s.assign(game.node_count(), Rational(0));
    else
        throw Error("no trivial equilibrium: eps " + epsilon.str() + " below min{p, 1-p} = " +
                    min(game.price(), one_minus_p).str());
    return profile;
}

bool plays_epsilon_best_response(const Game& game, const StrategyProfile& profile,
                                 std::uint32_t player, const Rational& epsilon) {
    if (profile.s.size() != game.node_count()) throw Error("profile length mismatch");
    const Rational delta = survival_product(game, profile, player) - game.price();
    return subset_of(support_of(profile.s[player]), best_responses_from_delta(delta, epsilon));
}

bool is_wsne(const Game& game, const StrategyProfile& profile, const Rational& epsilon) {
    validate_profile(game, profile);
    check_epsilon(epsilon);
    for (std::uint32_t i = 0; i < game.node_count(); ++i)
        if (!plays_epsilon_best_response(game, profile, i, epsilon)) return false;
    return true;
}

} // namespace pgg
