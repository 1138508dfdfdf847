#include "pgg/reduction.hpp"

#include "pgg/errors.hpp"

namespace pgg {

namespace {

void check_reduction_params(const Rational& p, const Rational& epsilon) {
    if (!(Rational(0) < p && p < Rational(1)))
        throw Error("price must lie strictly between 0 and 1, got " + p.str());
    if (epsilon < Rational(0)) throw Error("epsilon must be non-negative");
    const Rational threshold = min(p, Rational(1) - p);
    if (epsilon >= threshold)
        throw Error("eps " + epsilon.str() + " >= min{p, 1-p} = " + threshold.str() +
                    ": the trivial equilibrium exists and the reduction is undefined");
}

} // namespace

std::uint32_t ReductionMap::game_node_count() const {
    auto count = static_cast<std::uint32_t>(original_to_game.size());
    for (const PurifyGadget& gadget : purify_gadgets)
        count += 1 + static_cast<std::uint32_t>(gadget.chain.size());
    return count;
}

std::uint32_t chain_length(const Rational& p, const Rational& epsilon) {
    check_reduction_params(p, epsilon);
    const Rational base = p + epsilon;   // in (0,1)
    const Rational target = p - epsilon; // in (0,1)
    Rational power = base;
    std::uint32_t l = 1;
    while (power > target) {
        power *= base;
        ++l;
    }
    return l;
}

ParamCertificate certify_params(const Rational& p, const Rational& epsilon) {
    ParamCertificate cert;
    cert.price = p;
    cert.epsilon = epsilon;
    cert.chain_l = chain_length(p, epsilon);
    const Rational base = p + epsilon;
    cert.pow_l = base.pow(cert.chain_l);
    cert.p_minus_eps = p - epsilon;
    cert.pow_l1_minus_p = base.pow(cert.chain_l + 1) - p;
    cert.chain_bound_holds = cert.pow_l <= cert.p_minus_eps;
    cert.minimal = cert.chain_l == 1 || base.pow(cert.chain_l - 1) > cert.p_minus_eps;
    cert.garbage_bound_holds = cert.pow_l1_minus_p < -epsilon;
    return cert;
}

CompiledGame compile(const CircuitInstance& instance, const Rational& p,
                     const Rational& epsilon) {
    require_valid_instance(instance);
    check_reduction_params(p, epsilon);
    const std::uint32_t l = chain_length(p, epsilon);

    ReductionMap map;
    map.params = ReductionParams{p, epsilon, l};
    map.original_to_game.resize(instance.node_count);
    for (std::uint32_t node = 0; node < instance.node_count; ++node)
        map.original_to_game[node] = node;

    std::uint32_t next_node = instance.node_count;
    std::vector<Edge> edges;
    for (std::size_t g = 0; g < instance.gates.size(); ++g) {
        const Gate& gate = instance.gates[g];
        if (gate.type == GateType::nor) {
            edges.emplace_back(gate.u, gate.w);
            edges.emplace_back(gate.v, gate.w);
            continue;
        }
        PurifyGadget gadget;
        gadget.gate = static_cast<std::uint32_t>(g);
        gadget.d = next_node++;
        gadget.chain.resize(2 * l + 1);
        for (std::uint32_t k = 0; k < 2 * l + 1; ++k) gadget.chain[k] = next_node++;

        edges.emplace_back(gate.u, gadget.chain[0]);
        for (std::uint32_t k = 0; k + 1 < gadget.chain.size(); ++k)
            edges.emplace_back(gadget.chain[k], gadget.chain[k + 1]);
        edges.emplace_back(gadget.chain.back(), gate.w);
        edges.emplace_back(gate.u, gadget.d);
        for (std::uint32_t j = 1; j <= l; ++j)
            edges.emplace_back(gadget.chain[2 * j - 1], gadget.d); // chain[2j-1] is c_{2j}
        edges.emplace_back(gadget.d, gate.v);
        map.purify_gadgets.push_back(std::move(gadget));
    }

    Game game(next_node, p, edges);
    return CompiledGame{std::move(game), std::move(map)};
}

Assignment lift_profile(const ReductionMap& map, const StrategyProfile& profile,
                        const Rational& tolerance) {
    if (tolerance < Rational(0)) throw Error("lift tolerance must be non-negative");
    if (tolerance >= Rational(1, 2)) throw Error("lift tolerance must be below 1/2");
    if (profile.s.size() != map.game_node_count())
        throw Error("profile has " + std::to_string(profile.s.size()) + " entries, game has " +
                    std::to_string(map.game_node_count()) + " nodes");
    Assignment assignment;
    assignment.values.reserve(map.original_to_game.size());
    for (std::uint32_t game_node : map.original_to_game) {
        const Rational& s = profile.s[game_node];
        if (s <= tolerance) assignment.values.push_back(Ternary::zero);
        else if (s >= Rational(1) - tolerance) assignment.values.push_back(Ternary::one);
        else assignment.values.push_back(Ternary::bot);
    }
    return assignment;
}

ReductionCheck verify_reduction(const CircuitInstance& instance, const Rational& p,
                                const Rational& epsilon, const StrategyProfile& profile) {
    const CompiledGame compiled = compile(instance, p, epsilon);
    ReductionCheck result{
        check_wsne(compiled.game, profile, epsilon),
        lift_profile(compiled.map, profile),
        GateReport{},
        0,
    };
    result.circuit = check_assignment(instance, result.lifted);
    if (!result.equilibrium.accepted) result.failed_stage = 1;
    else if (!result.circuit.accepted) result.failed_stage = 2;
    return result;
}

} // namespace pgg
