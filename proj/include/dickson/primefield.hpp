#pragma once

#include <cstdint>
#include <vector>

#include "dickson/errors.hpp"
#include "dickson/families.hpp"

namespace dickson {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Element of F_p for prime p (p < 2^32 so products fit in 64 bits).
struct Fp {
    Fp(std::uint64_t value, std::uint64_t p) : v(value % p), p(p) {
        if (!is_prime(p)) throw NotPrime("modulus " + std::to_string(p) + " is not prime");
        if (p >> 32) throw BoundExceeded("modulus must be below 2^32");
    }

    std::uint64_t v;
    std::uint64_t p;

    friend Fp operator+(Fp a, Fp b) { a.check(b); return Fp((a.v + b.v) % a.p, a.p); }
    friend Fp operator-(Fp a, Fp b) { a.check(b); return Fp((a.v + a.p - b.v) % a.p, a.p); }
    friend Fp operator*(Fp a, Fp b) { a.check(b); return Fp((a.v * b.v) % a.p, a.p); }
    friend bool operator==(Fp a, Fp b) { a.check(b); return a.v == b.v; }

    void check(const Fp& o) const {
        if (p != o.p) throw ModulusMismatch("mixed moduli " + std::to_string(p) + " and " + std::to_string(o.p));
    }
};

namespace detail {

/// x-coefficients of kth_kind(n, k) with the parameter fixed to a, reduced
/// mod p, ascending degree. Family coefficients are integral, so reduction
/// is plain residue arithmetic on numerators.
inline std::vector<std::uint64_t> family_coeffs_mod_p(unsigned n, unsigned k,
                                                      std::uint64_t a, std::uint64_t p) {
    const ParamPoly f = kth_kind(n, k);
    std::vector<std::uint64_t> out(f.coeffs().size(), 0);
    for (std::size_t d = 0; d < f.coeffs().size(); ++d) {
        const CoeffPoly& ca = f.coeffs()[d];
        std::uint64_t acc = 0;  // Horner in a over F_p
        for (std::size_t j = ca.coeffs().size(); j-- > 0;) {
            const Rational& r = ca.coeffs()[j];
            if (!r.is_integer()) throw Error("family coefficient is not an integer");
            const mpz_class num = r.numerator();
            std::uint64_t c = mpz_fdiv_ui(num.get_mpz_t(), static_cast<unsigned long>(p));
            acc = (acc * (a % p) + c) % p;
        }
        out[d] = acc;
    }
    return out;
}

inline std::uint64_t horner_mod_p(const std::vector<std::uint64_t>& coeffs,
                                  std::uint64_t x, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = (acc * x + coeffs[i]) % p;
    return acc;
}

}  // namespace detail

/// kth_kind(n, k) reduced mod p and evaluated at x by Horner.
inline Fp ff_eval(unsigned n, unsigned k, Fp a, Fp x) {
    a.check(x);
    const auto coeffs = detail::family_coeffs_mod_p(n, k, a.v, a.p);
    return Fp(detail::horner_mod_p(coeffs, x.v, a.p), a.p);
}

/// Whether x -> D_{n,k}(x, a) permutes F_p, by exhaustive image check.
inline bool ff_is_permutation(unsigned n, unsigned k, Fp a,
                              std::uint64_t p_bound = std::uint64_t(1) << 16) {
    if (a.p >= p_bound)
        throw BoundExceeded("permutation check limited to p < " + std::to_string(p_bound));
    const auto coeffs = detail::family_coeffs_mod_p(n, k, a.v, a.p);
    std::vector<bool> hit(a.p, false);
    for (std::uint64_t x = 0; x < a.p; ++x) {
        const std::uint64_t y = detail::horner_mod_p(coeffs, x, a.p);
        if (hit[y]) return false;
        hit[y] = true;
    }
    return true;
}

}  // namespace dickson
