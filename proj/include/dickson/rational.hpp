#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "dickson/errors.hpp"

namespace dickson {

/// Exact arbitrary-precision rational scalar.
///
/// Always kept canonical: positive denominator, gcd(|num|, den) = 1,
/// zero stored as 0/1. Immutable value semantics; all operations are pure.
class Rational {
   public:
    Rational() : q_(0) {}
    Rational(long v) : q_(v) {}  // NOLINT: implicit by design, mirrors int -> Q
    Rational(long num, long den) : q_(num, den) { canonicalize(); }
    explicit Rational(const mpz_class& z) : q_(z) {}
    explicit Rational(mpz_class num, mpz_class den)
        : q_(std::move(num), std::move(den)) {
        canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p/q" or "p" in base 10.
    static Rational from_string(std::string_view s) {
        mpq_class q;
        if (s.empty() || q.set_str(std::string(s), 10) != 0)
            throw ParseError("invalid rational literal: '" + std::string(s) + "'");
        if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator");
        q.canonicalize();
        return Rational(std::move(q));
    }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    /// "p/q", or just "p" when the denominator is 1.
    std::string to_string() const { return q_.get_str(); }

    double to_double() const { return q_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater
                             : std::strong_ordering::equal;
    }

    friend Rational abs(const Rational& r) { return Rational(mpq_class(abs(r.q_))); }

    /// r^e for integer e; 0^0 = 1, negative e inverts (throws on 0).
    friend Rational pow(const Rational& r, long e) {
        if (e < 0) {
            if (r.is_zero()) throw DivisionByZero("0 raised to a negative power");
            return pow(Rational(1) / r, -e);
        }
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), r.q_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(den.get_mpz_t(), r.q_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        mpq_class q(num, den);  // already canonical: gcd(num,den)=1 is preserved by powers
        return Rational(std::move(q));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

   private:
    void canonicalize() {
        if (q_.get_den() == 0) throw DivisionByZero("rational with zero denominator");
        q_.canonicalize();
    }

    mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.q_;
}

inline bool is_zero(const Rational& r) { return r.is_zero(); }

}  // namespace dickson
