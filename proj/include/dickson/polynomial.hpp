#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dickson/rational.hpp"

namespace dickson {

/// Dense univariate polynomial over a commutative ring T, stored as
/// ascending-degree coefficients with canonical trimming (no trailing
/// zeros; the zero polynomial is the empty list).
///
/// T needs value semantics, T{} == additive identity, ring operators,
/// operator== and an ADL-visible is_zero(const T&).
template <class T>
class Poly {
   public:
    Poly() = default;
    explicit Poly(T constant) {
        if (!is_zero(constant)) c_.push_back(std::move(constant));
    }
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(std::size_t deg, T coeff) {
        Poly p;
        if (is_zero(coeff)) return p;
        p.c_.assign(deg + 1, T{});
        p.c_[deg] = std::move(coeff);
        return p;
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero_poly() const { return c_.empty(); }

    /// Coefficient of degree i (zero beyond the stored range).
    T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T{}; }

    const T& leading() const { return c_.back(); }
    const std::vector<T>& coeffs() const { return c_; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> out(std::max(a.c_.size(), b.c_.size()), T{});
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero_poly() || b.is_zero_poly()) return Poly{};
        std::vector<T> out(a.c_.size() + b.c_.size() - 1, T{});
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(out));
    }

    /// Scalar multiple by a ring element.
    friend Poly operator*(const Poly& a, const T& s) {
        if (is_zero(s)) return Poly{};
        std::vector<T> out(a.c_);
        for (auto& c : out) c = c * s;
        return Poly(std::move(out));
    }
    friend Poly operator*(const T& s, const Poly& a) { return a * s; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Exact d/dX within the ring.
    Poly derivative() const {
        if (c_.size() <= 1) return Poly{};
        std::vector<T> out(c_.size() - 1, T{});
        for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * ring_int(i);
        return Poly(std::move(out));
    }

    /// Horner evaluation at a ring point.
    T eval(const T& at) const {
        T acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
        return acc;
    }

   private:
    static T ring_int(std::size_t k) {
        // Small positive integer image in the ring, built from T{} + 1s only
        // via Rational promotion when available.
        if constexpr (std::is_constructible_v<T, long>) {
            return T(static_cast<long>(k));
        } else {
            return T(typename T::value_type(static_cast<long>(k)));
        }
    }

    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

template <class T>
bool is_zero(const Poly<T>& p) {
    return p.is_zero_poly();
}

/// Polynomial in the parameter a over Q.
using CoeffPoly = Poly<Rational>;

/// Polynomial in x whose coefficients live in Q[a].
using ParamPoly = Poly<CoeffPoly>;

// --- builders ----------------------------------------------------------

inline CoeffPoly coeff_const(Rational c) { return CoeffPoly(std::move(c)); }

/// c * a^j as an element of Q[a].
inline CoeffPoly coeff_a_pow(std::size_t j, Rational c = Rational(1)) {
    return CoeffPoly::monomial(j, std::move(c));
}

/// The variable x as an element of Q[a][x].
inline ParamPoly param_x() { return ParamPoly::monomial(1, coeff_const(1)); }

/// The parameter a as a constant-in-x element of Q[a][x].
inline ParamPoly param_a() { return ParamPoly(coeff_a_pow(1)); }

inline ParamPoly param_const(Rational c) { return ParamPoly(coeff_const(std::move(c))); }

/// c * a^j * x^k.
inline ParamPoly param_monomial(std::size_t xdeg, std::size_t adeg, Rational c) {
    return ParamPoly::monomial(xdeg, coeff_a_pow(adeg, std::move(c)));
}

// --- evaluation --------------------------------------------------------

/// Exact nested Horner: inner over a, outer over x.
inline Rational eval(const ParamPoly& p, const Rational& x, const Rational& a) {
    Rational acc;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + p.coeffs()[i].eval(a);
    return acc;
}

/// Substitutes a fixed parameter value, leaving a polynomial in x over Q.
inline Poly<Rational> at_parameter(const ParamPoly& p, const Rational& a) {
    std::vector<Rational> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.eval(a));
    return Poly<Rational>(std::move(out));
}

inline double eval_double(const Poly<Rational>& p, double x) {
    double acc = 0.0;
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        acc = acc * x + p.coeffs()[i].to_double();
    return acc;
}

// --- printing ----------------------------------------------------------

namespace detail {

inline void append_power(std::string& s, const char* var, std::size_t deg) {
    s += var;
    if (deg > 1) {
        s += '^';
        s += std::to_string(deg);
    }
}

}  // namespace detail

/// Human-readable form like "3/2*a^2 - a + 1".
inline std::string to_string(const CoeffPoly& p, const char* var = "a") {
    if (p.is_zero_poly()) return "0";
    std::string s;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const Rational& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        Rational mag = abs(c);
        if (s.empty()) {
            if (c.sign() < 0) s += '-';
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        bool unit = mag.is_one() && i > 0;
        if (!unit) s += mag.to_string();
        if (i > 0) {
            if (!unit) s += '*';
            detail::append_power(s, var, i);
        }
    }
    return s;
}

/// Human-readable form like "x^3 - 3*a*x".
inline std::string to_string(const ParamPoly& p) {
    if (p.is_zero_poly()) return "0";
    std::string s;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const CoeffPoly& c = p.coeffs()[i];
        if (c.is_zero_poly()) continue;
        bool single_term = true;
        std::size_t nonzero = 0;
        for (const auto& r : c.coeffs())
            if (!r.is_zero()) ++nonzero;
        single_term = nonzero == 1;
        if (single_term) {
            const Rational& r = c.leading();
            std::size_t adeg = static_cast<std::size_t>(c.degree());
            Rational mag = abs(r);
            if (s.empty()) {
                if (r.sign() < 0) s += '-';
            } else {
                s += r.sign() < 0 ? " - " : " + ";
            }
            bool unit = mag.is_one() && (adeg > 0 || i > 0);
            if (!unit) s += mag.to_string();
            bool need_star = !unit;
            if (adeg > 0) {
                if (need_star) s += '*';
                detail::append_power(s, "a", adeg);
                need_star = true;
            }
            if (i > 0) {
                if (need_star) s += '*';
                detail::append_power(s, "x", i);
            }
        } else {
            if (!s.empty()) s += " + ";
            s += '(' + to_string(c) + ')';
            if (i > 0) {
                s += '*';
                detail::append_power(s, "x", i);
            }
        }
    }
    return s;
}

}  // namespace dickson
