#include "pgg/circuit.hpp"

#include <algorithm>

#include "pgg/errors.hpp"
#include "pgg/random_util.hpp"

namespace pgg {

std::string to_string(Ternary value) {
    switch (value) {
        case Ternary::zero: return "0";
        case Ternary::one: return "1";
        case Ternary::bot: return "bot";
    }
    return "?";
}

std::vector<std::string> validate_instance(const CircuitInstance& instance) {
    std::vector<std::string> errors;
    if (instance.node_count == 0) errors.push_back("instance has no nodes");
    std::vector<std::uint32_t> producers(instance.node_count, 0);
    for (std::size_t g = 0; g < instance.gates.size(); ++g) {
        const Gate& gate = instance.gates[g];
        const std::string where = "gate " + std::to_string(g);
        if (gate.u >= instance.node_count || gate.v >= instance.node_count ||
            gate.w >= instance.node_count) {
            errors.push_back(where + ": node index out of range");
            continue;
        }
        if (gate.u == gate.v || gate.u == gate.w || gate.v == gate.w)
            errors.push_back(where + ": nodes must be pairwise distinct");
        if (gate.type == GateType::nor) {
            ++producers[gate.w];
        } else {
            ++producers[gate.v];
            ++producers[gate.w];
        }
    }
    for (std::uint32_t node = 0; node < instance.node_count; ++node) {
        if (producers[node] == 0)
            errors.push_back("node " + std::to_string(node) + " is not the output of any gate");
        else if (producers[node] > 1)
            errors.push_back("node " + std::to_string(node) + " is the output of " +
                             std::to_string(producers[node]) + " gates");
    }
    return errors;
}

void require_valid_instance(const CircuitInstance& instance) {
    const auto errors = validate_instance(instance);
    if (errors.empty()) return;
    std::string message = "invalid circuit instance:";
    for (const auto& e : errors) message += " " + e + ";";
    throw Error(message);
}

GateReport check_assignment(const CircuitInstance& instance, const Assignment& assignment) {
    if (assignment.values.size() != instance.node_count)
        throw Error("assignment has " + std::to_string(assignment.values.size()) +
                    " values, instance has " + std::to_string(instance.node_count) + " nodes");
    GateReport report;
    report.gates.reserve(instance.gates.size());
    for (std::size_t g = 0; g < instance.gates.size(); ++g) {
        const Gate& gate = instance.gates[g];
        const Ternary xu = assignment.values[gate.u];
        const Ternary xv = assignment.values[gate.v];
        const Ternary xw = assignment.values[gate.w];
        GateCheck check;
        check.gate = static_cast<std::uint32_t>(g);
        if (gate.type == GateType::nor) {
            if (xu == Ternary::zero && xv == Ternary::zero && xw != Ternary::one)
                check.violation = "NOR inputs are both 0 but output is " + to_string(xw);
            else if ((xu == Ternary::one || xv == Ternary::one) && xw != Ternary::zero)
                check.violation = "NOR has a 1 input but output is " + to_string(xw);
        } else {
            const bool v_pure = xv != Ternary::bot;
            const bool w_pure = xw != Ternary::bot;
            if (!v_pure && !w_pure)
                check.violation = "PURIFY outputs are both bot";
            else if (xu != Ternary::bot && (xv != xu || xw != xu))
                check.violation = "PURIFY input " + to_string(xu) + " not copied to outputs (" +
                                  to_string(xv) + ", " + to_string(xw) + ")";
        }
        check.satisfied = check.violation.empty();
        if (!check.satisfied) report.accepted = false;
        report.gates.push_back(std::move(check));
    }
    return report;
}

std::vector<Assignment> solve_bruteforce(const CircuitInstance& instance, std::uint32_t limit) {
    require_valid_instance(instance);
    if (instance.node_count > limit)
        throw Error("instance has " + std::to_string(instance.node_count) +
                    " nodes, brute-force limit is " + std::to_string(limit));
    std::vector<Assignment> solutions;
    Assignment current;
    current.values.assign(instance.node_count, Ternary::zero);
    // Odometer with the last node as the fastest digit: lexicographic order.
    while (true) {
        if (check_assignment(instance, current).accepted) solutions.push_back(current);
        std::size_t i = current.values.size();
        while (i > 0) {
            auto& digit = current.values[i - 1];
            if (digit != Ternary::bot) {
                digit = static_cast<Ternary>(static_cast<std::uint8_t>(digit) + 1);
                break;
            }
            digit = Ternary::zero;
            --i;
        }
        if (i == 0) break;
    }
    return solutions;
}

CircuitInstance generate_random(std::uint32_t num_nodes_target, const Rational& nor_fraction,
                                std::uint64_t seed) {
    if (num_nodes_target < 3) throw Error("num_nodes_target must be at least 3");
    std::mt19937_64 rng(seed);

    CircuitInstance instance;
    while (instance.node_count < num_nodes_target) {
        const bool nor = bernoulli_rational(rng, nor_fraction);
        if (nor) {
            const std::uint32_t w = instance.node_count++;
            instance.gates.push_back(Gate::make_nor(0, 0, w)); // inputs wired below
        } else {
            const std::uint32_t v = instance.node_count++;
            const std::uint32_t w = instance.node_count++;
            instance.gates.push_back(Gate::make_purify(0, v, w));
        }
    }

    constexpr int max_attempts = 64;
    auto draw_distinct = [&](std::uint32_t a, std::uint32_t b) {
        for (int attempt = 0; attempt < max_attempts; ++attempt) {
            const auto candidate =
                static_cast<std::uint32_t>(uniform_below(rng, instance.node_count));
            if (candidate != a && candidate != b) return candidate;
        }
        throw Error("could not wire a distinct gate input after bounded retries");
    };
    for (Gate& gate : instance.gates) {
        if (gate.type == GateType::nor) {
            gate.u = draw_distinct(gate.w, gate.w);
            gate.v = draw_distinct(gate.u, gate.w);
        } else {
            gate.u = draw_distinct(gate.v, gate.w);
        }
    }

    require_valid_instance(instance);
    return instance;
}

} // namespace pgg
