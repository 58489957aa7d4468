#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dickson/errors.hpp"
#include "dickson/polynomial.hpp"
#include "dickson/rational.hpp"

namespace dickson {

namespace detail {

/// Pascal triangle rows 0..n of exact integer binomials.
inline std::vector<std::vector<mpz_class>> pascal_rows(unsigned n) {
    std::vector<std::vector<mpz_class>> rows(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        rows[m].resize(m + 1);
        rows[m][0] = 1;
        rows[m][m] = 1;
        for (unsigned j = 1; j < m; ++j) rows[m][j] = rows[m - 1][j - 1] + rows[m - 1][j];
    }
    return rows;
}

/// Assembles sum_i tail(i) * C(n-i, i) * (-a)^i * x^(n-2i) where tail(i)
/// is the family-specific rational prefactor.
template <class Prefactor>
ParamPoly waring_sum(unsigned n, Prefactor&& prefactor) {
    auto pascal = pascal_rows(n);
    ParamPoly out;
    for (unsigned i = 0; i <= n / 2; ++i) {
        Rational c = prefactor(i) * Rational(pascal[n - i][i]);
        if (i % 2 == 1) c = -c;
        out += param_monomial(n - 2 * i, i, c);
    }
    return out;
}

}  // namespace detail

/// D_n, the n-th Dickson polynomial of the first kind. D_0 = 2.
inline ParamPoly first_kind(unsigned n) {
    if (n == 0) return param_const(2);
    return detail::waring_sum(n, [n](unsigned i) { return Rational(long(n), long(n - i)); });
}

/// E_n, the n-th Dickson polynomial of the second kind. E_0 = 1.
inline ParamPoly second_kind(unsigned n) {
    if (n == 0) return param_const(1);
    return detail::waring_sum(n, [](unsigned) { return Rational(1); });
}

/// D_{n,k}, the n-th Dickson polynomial of the (k+1)-th kind.
/// D_{n,0} = D_n, D_{n,1} = E_n, D_{n,2} = F_n (third kind).
/// The 0/0 case at n = 0 is resolved as D_{0,k} = 2 - k, matching the
/// functional equations of the families it interpolates.
inline ParamPoly kth_kind(unsigned n, unsigned k) {
    if (n == 0) return param_const(2 - long(k));
    return detail::waring_sum(n, [n, k](unsigned i) {
        return Rational(long(n) - long(k) * long(i), long(n - i));
    });
}

/// f_n, the Dickson-type family with parameter B; B = 2 - k recovers
/// kth_kind(n, k), and f_0 = B by the same identification.
inline ParamPoly dickson_type(unsigned n, const Rational& B) {
    if (n == 0) return param_const(B);
    return detail::waring_sum(n, [n, &B](unsigned i) {
        return (Rational(long(n)) + (B - Rational(2)) * Rational(long(i))) /
               Rational(long(n - i));
    });
}

/// Identifies one polynomial family; KthKind(0) and KthKind(1) normalize
/// to FirstKind and SecondKind so specs compare by value.
struct FamilySpec {
    enum class Kind { FirstKind, SecondKind, KthKind, DicksonType };

    static FamilySpec first(unsigned n) { return {Kind::FirstKind, n, 0, Rational(2)}; }
    static FamilySpec second(unsigned n) { return {Kind::SecondKind, n, 1, Rational(1)}; }
    static FamilySpec kth(unsigned n, unsigned k) {
        if (k == 0) return first(n);
        if (k == 1) return second(n);
        return {Kind::KthKind, n, k, Rational(2 - long(k))};
    }
    static FamilySpec type(unsigned n, Rational B) {
        return {Kind::DicksonType, n, 0, std::move(B)};
    }

    Kind kind;
    unsigned n;
    unsigned k;   // meaningful for KthKind
    Rational B;   // meaningful for DicksonType; 2-k otherwise

    friend bool operator==(const FamilySpec& a, const FamilySpec& b) {
        if (a.n != b.n || a.kind != b.kind) return false;
        if (a.kind == Kind::KthKind) return a.k == b.k;
        if (a.kind == Kind::DicksonType) return a.B == b.B;
        return true;
    }
};

/// Closed-form constructor for any family spec.
inline ParamPoly closed_form(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::FirstKind: return first_kind(spec.n);
        case FamilySpec::Kind::SecondKind: return second_kind(spec.n);
        case FamilySpec::Kind::KthKind: return kth_kind(spec.n, spec.k);
        case FamilySpec::Kind::DicksonType: return dickson_type(spec.n, spec.B);
    }
    throw Error("unreachable family kind");
}

/// Cross-validation constructor: f_j = x f_{j-1} - a f_{j-2} from the
/// initial pair (f_0, f_1) = (B, x) with B = 2 - k for the integer kinds.
inline ParamPoly by_recurrence(const FamilySpec& spec) {
    Rational f0_const;
    switch (spec.kind) {
        case FamilySpec::Kind::FirstKind: f0_const = Rational(2); break;
        case FamilySpec::Kind::SecondKind: f0_const = Rational(1); break;
        case FamilySpec::Kind::KthKind: f0_const = Rational(2 - long(spec.k)); break;
        case FamilySpec::Kind::DicksonType: f0_const = spec.B; break;
    }
    ParamPoly prev = param_const(f0_const);
    if (spec.n == 0) return prev;
    ParamPoly cur = param_x();
    const ParamPoly x = param_x();
    const ParamPoly a = param_a();
    for (unsigned j = 2; j <= spec.n; ++j) {
        ParamPoly next = x * cur - a * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// --- functional equations ----------------------------------------------

enum class FunctionalKind { First, Third, ThirdDegenerate };

/// LHS - RHS of the family's functional equation at x = u + a/u,
/// evaluated exactly over Q. Zero certifies the identity at that point.
///
/// First:            D_n(u + a/u, a) = u^n + (a/u)^n          (u != 0)
/// Third:            F_n(u + a/u, a) = x (u^n - (a/u)^n)/(u - a/u),
///                    additionally u^2 != a
/// ThirdDegenerate:  u^2 = a, F_n(x, a) = 2 (sign sqrt(a))^n n,
///                    where sqrt(a) = |u| and sign picks the branch
inline Rational functional_residual(FunctionalKind kind, unsigned n, const Rational& u,
                                    const Rational& a, int sign = +1) {
    if (u.is_zero()) throw DegenerateInput("functional equation requires u != 0");
    const Rational au = a / u;
    const Rational x = u + au;
    switch (kind) {
        case FunctionalKind::First: {
            const Rational lhs = eval(first_kind(n), x, a);
            return lhs - (pow(u, long(n)) + pow(au, long(n)));
        }
        case FunctionalKind::Third: {
            if (u * u == a) throw DegenerateInput("third-kind functional equation requires u^2 != a");
            const Rational lhs = eval(kth_kind(n, 2), x, a);
            const Rational rhs = x * (pow(u, long(n)) - pow(au, long(n))) / (u - au);
            return lhs - rhs;
        }
        case FunctionalKind::ThirdDegenerate: {
            if (u * u != a) throw DegenerateInput("degenerate case requires a = u^2");
            if (sign != 1 && sign != -1) throw DegenerateInput("sign must be +1 or -1");
            const Rational sqrt_a = abs(u);
            if (Rational(long(sign)) * sqrt_a != u)
                throw DegenerateInput("sign must select the branch with u = sign*sqrt(a)");
            const Rational lhs = eval(kth_kind(n, 2), x, a);
            return lhs - Rational(2) * Rational(long(n)) * pow(Rational(long(sign)) * sqrt_a, long(n));
        }
    }
    throw Error("unreachable functional kind");
}

}  // namespace dickson
