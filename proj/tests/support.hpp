#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <dickson/polynomial.hpp>
#include <dickson/rational.hpp>

namespace testsupport {

// Bounded draws straight off the engine keep the suite reproducible
// across standard libraries.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

inline dickson::Rational random_rational(std::mt19937_64& rng, long num_bound,
                                         long den_bound) {
    const long num = long(draw(rng, std::uint64_t(2 * num_bound + 1))) - num_bound;
    const long den = long(draw(rng, std::uint64_t(den_bound))) + 1;
    return dickson::Rational(num, den);
}

inline dickson::Rational random_nonzero_rational(std::mt19937_64& rng, long num_bound,
                                                 long den_bound) {
    for (;;) {
        auto r = random_rational(rng, num_bound, den_bound);
        if (!r.is_zero()) return r;
    }
}

inline dickson::Poly<dickson::Rational> random_poly(std::mt19937_64& rng,
                                                    unsigned max_deg) {
    std::vector<dickson::Rational> c(draw(rng, max_deg + 1) + 1);
    for (auto& x : c) x = random_rational(rng, 9, 4);
    return dickson::Poly<dickson::Rational>(std::move(c));
}

inline dickson::ParamPoly random_param_poly(std::mt19937_64& rng, unsigned max_deg) {
    std::vector<dickson::CoeffPoly> c(draw(rng, max_deg + 1) + 1);
    for (auto& x : c) {
        std::vector<dickson::Rational> inner(draw(rng, 3) + 1);
        for (auto& r : inner) r = random_rational(rng, 9, 4);
        x = dickson::CoeffPoly(std::move(inner));
    }
    return dickson::ParamPoly(std::move(c));
}

}  // namespace testsupport
