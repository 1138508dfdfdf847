#pragma once

#include <cstdint>
#include <vector>

#include "pgg/circuit.hpp"
#include "pgg/game.hpp"
#include "pgg/rational.hpp"

namespace pgg {

// Parameters of the circuit-to-game construction. chain_l is the least
// l >= 1 with (p+eps)^l <= p-eps; both the bound and its minimality are
// maintained exactly.
struct ReductionParams {
    Rational price;
    Rational epsilon;
    std::uint32_t chain_l = 1;

    bool operator==(const ReductionParams&) const = default;
};

// Auxiliary nodes introduced for one PURIFY gate: a collector d and the
// alternating chain c_1..c_{2l+1}.
struct PurifyGadget {
    std::uint32_t gate = 0;
    std::uint32_t d = 0;
    std::vector<std::uint32_t> chain;

    bool operator==(const PurifyGadget&) const = default;
};

// Correspondence between circuit nodes and game nodes. Circuit nodes keep
// their indices; auxiliaries are appended per PURIFY gate in gate order as
// (d, c_1, ..., c_{2l+1}).
struct ReductionMap {
    ReductionParams params;
    std::vector<std::uint32_t> original_to_game;
    std::vector<PurifyGadget> purify_gadgets;

    std::uint32_t game_node_count() const;

    bool operator==(const ReductionMap&) const = default;
};

// Least l >= 1 with (p+eps)^l <= p-eps, found by exact power search.
// Requires 0 < p < 1 and 0 <= eps < min{p, 1-p}.
std::uint32_t chain_length(const Rational& p, const Rational& epsilon);

struct ParamCertificate {
    Rational price;
    Rational epsilon;
    std::uint32_t chain_l = 1;
    Rational pow_l;             // (p+eps)^l
    Rational p_minus_eps;       // p-eps
    Rational pow_l1_minus_p;    // (p+eps)^{l+1} - p
    bool chain_bound_holds = false;   // (p+eps)^l <= p-eps
    bool minimal = false;             // l == 1 or (p+eps)^{l-1} > p-eps
    bool garbage_bound_holds = false; // (p+eps)^{l+1} - p < -eps
};

ParamCertificate certify_params(const Rational& p, const Rational& epsilon);

struct CompiledGame {
    Game game;
    ReductionMap map;
};

// Builds the public goods game simulating the circuit. Per gate:
//   NOR(u,v -> w):     edges u->w, v->w
//   PURIFY(u -> v,w):  chain u->c_1->...->c_{2l+1}, edge c_{2l+1}->w,
//                      edges u->d and c_{2j}->d for j in [l], edge d->v
// Node count |V| + (2l+2)*#PURIFY, edge count 2*#NOR + (3l+4)*#PURIFY.
// Requires eps < min{p, 1-p}; above that threshold the trivial equilibrium
// exists and the construction is undefined.
CompiledGame compile(const CircuitInstance& instance, const Rational& p, const Rational& epsilon);

// Maps a game profile back to a circuit assignment: an original node
// becomes 0 when s <= tolerance, 1 when s >= 1-tolerance, bot otherwise.
// The default tolerance 0 is the map with proven soundness; requires
// 0 <= tolerance < 1/2.
Assignment lift_profile(const ReductionMap& map, const StrategyProfile& profile,
                        const Rational& tolerance = Rational(0));

struct ReductionCheck {
    EquilibriumReport equilibrium; // stage 1: well-supported check at eps
    Assignment lifted;             // lift at tolerance 0
    GateReport circuit;            // stage 2: gate constraints on the lift
    int failed_stage = 0;          // 0 = both stages pass
};

// Executable soundness check: any profile passing stage 1 with
// eps < min{p, 1-p} must pass stage 2.
ReductionCheck verify_reduction(const CircuitInstance& instance, const Rational& p,
                                const Rational& epsilon, const StrategyProfile& profile);

} // namespace pgg
