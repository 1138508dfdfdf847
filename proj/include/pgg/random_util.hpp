#pragma once

#include <cstdint>
#include <random>

#include "pgg/rational.hpp"

namespace pgg {

// Unbiased integer in [0, bound) by rejection sampling; identical output
// for a given engine state on every platform (unlike
// std::uniform_int_distribution).
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw Error("uniform_below with zero bound");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

// Exact Bernoulli trial with rational success probability in [0,1].
inline bool bernoulli_rational(std::mt19937_64& rng, const Rational& probability) {
    if (probability < Rational(0) || probability > Rational(1))
        throw Error("probability outside [0,1]");
    if (probability == Rational(0)) return false;
    if (probability == Rational(1)) return true;
    const mpz_class den = probability.den();
    if (!den.fits_ulong_p()) throw Error("probability denominator too large");
    const std::uint64_t draw = uniform_below(rng, den.get_ui());
    return mpz_class(draw) < probability.num();
}

} // namespace pgg
