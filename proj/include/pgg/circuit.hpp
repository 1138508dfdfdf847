#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pgg/rational.hpp"

namespace pgg {

enum class GateType : std::uint8_t { nor, purify };

// NOR: inputs u, v and output w. PURIFY: input u and outputs v, w.
// The three nodes of a gate are pairwise distinct.
struct Gate {
    GateType type = GateType::nor;
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    std::uint32_t w = 0;

    static Gate make_nor(std::uint32_t u, std::uint32_t v, std::uint32_t w) {
        return Gate{GateType::nor, u, v, w};
    }
    static Gate make_purify(std::uint32_t u, std::uint32_t v, std::uint32_t w) {
        return Gate{GateType::purify, u, v, w};
    }

    bool operator==(const Gate&) const = default;
};

// Every node must be the output of exactly one gate; construct freely and
// check with validate_instance.
struct CircuitInstance {
    std::uint32_t node_count = 0;
    std::vector<Gate> gates;

    bool operator==(const CircuitInstance&) const = default;
};

// Node values; the enumeration order 0 < 1 < bot fixes all lexicographic
// orderings used by the solvers.
enum class Ternary : std::uint8_t { zero = 0, one = 1, bot = 2 };

std::string to_string(Ternary value);

struct Assignment {
    std::vector<Ternary> values;

    bool operator==(const Assignment&) const = default;
};

struct GateCheck {
    std::uint32_t gate = 0;
    bool satisfied = true;
    std::string violation; // empty when satisfied
};

struct GateReport {
    bool accepted = true;
    std::vector<GateCheck> gates;
};

// Empty result means the instance is well formed. Reported problems:
// out-of-range indices, non-distinct gate nodes, nodes with zero or with
// multiple producing gates.
std::vector<std::string> validate_instance(const CircuitInstance& instance);

void require_valid_instance(const CircuitInstance& instance);

// Gate semantics:
//   NOR:    x(u)=x(v)=0 => x(w)=1;  x(u)=1 or x(v)=1 => x(w)=0
//   PURIFY: {x(v),x(w)} must contain a pure value; a pure x(u) is copied
//           to both outputs
GateReport check_assignment(const CircuitInstance& instance, const Assignment& assignment);

// All satisfying assignments in lexicographic order (value order
// 0 < 1 < bot). Guarded by `limit` on the node count; never empty for a
// valid instance.
std::vector<Assignment> solve_bruteforce(const CircuitInstance& instance,
                                         std::uint32_t limit = 12);

// Deterministic random instance: gates are drawn (NOR with probability
// nor_fraction) and allocate fresh output nodes until at least
// num_nodes_target nodes exist, then every input slot is wired to a random
// node distinct from the gate's own nodes.
CircuitInstance generate_random(std::uint32_t num_nodes_target, const Rational& nor_fraction,
                                std::uint64_t seed);

} // namespace pgg
