#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "dickson/errors.hpp"
#include "dickson/families.hpp"
#include "dickson/linalg.hpp"
#include "dickson/polynomial.hpp"

namespace dickson {

/// Second-order linear form p y'' + q y' + r y = s with polynomial
/// coefficients; P is ParamPoly for identities symbolic in a, or
/// Poly<Rational> for a fixed parameter value.
template <class P>
struct OdeFormT {
    P p, q, r, s;
};

using OdeForm = OdeFormT<ParamPoly>;
using OdeFormQ = OdeFormT<Poly<Rational>>;

/// p y'' + q y' + r y - s, computed exactly. The zero polynomial
/// certifies that y solves the form identically.
template <class P>
P ode_residual(const P& y, const OdeFormT<P>& form) {
    const P dy = y.derivative();
    const P ddy = dy.derivative();
    return form.p * ddy + form.q * dy + form.r * y - form.s;
}

enum class KnownOde { First, Second, ThirdNonhomogeneous };

/// The classical Dickson ODEs plus the non-homogeneous third-kind form:
///   First:  (x^2-4a) y'' +  x y' - n^2      y = 0
///   Second: (x^2-4a) y'' + 3x y' - n(n+2)   y = 0
///   Third:  (x^2-4a) y'' + 3x y' - n^2      y = 2n D_n
inline OdeForm known_form(KnownOde kind, unsigned n) {
    if (n == 0) throw UnsupportedIndex("known ODE forms need n >= 1");
    const ParamPoly p = param_monomial(2, 0, 1) - param_monomial(0, 1, 4);  // x^2 - 4a
    const long nl = long(n);
    switch (kind) {
        case KnownOde::First:
            return {p, param_x(), param_const(-nl * nl), ParamPoly{}};
        case KnownOde::Second:
            return {p, param_x() * coeff_const(3), param_const(-nl * (nl + 2)), ParamPoly{}};
        case KnownOde::ThirdNonhomogeneous:
            return {p, param_x() * coeff_const(3), param_const(-nl * nl),
                    first_kind(n) * coeff_const(2 * nl)};
    }
    throw Error("unreachable ODE kind");
}

/// known_form with the parameter a substituted, leaving polynomials in x.
inline OdeFormQ known_form_at(KnownOde kind, unsigned n, const Rational& a) {
    const OdeForm f = known_form(kind, n);
    return {at_parameter(f.p, a), at_parameter(f.q, a), at_parameter(f.r, a),
            at_parameter(f.s, a)};
}

/// Whether F_n solves the non-homogeneous third-kind form exactly,
/// identically in x and a.
inline bool verify_lemma_third(unsigned n) {
    if (n == 0) throw UnsupportedIndex("lemma verification needs n >= 1");
    return ode_residual(kth_kind(n, 2), known_form(KnownOde::ThirdNonhomogeneous, n))
        .is_zero_poly();
}

// --- Stoll-form coefficient fitting --------------------------------------

/// Coefficient vector (A4, A2, A0, B3, B1, C2, C0) of the template
/// (A4 x^4 + a A2 x^2 + a^2 A0) f'' + (B3 x^3 + a B1 x) f' - (C2 x^2 + a C0) f.
using StollVector = std::array<Rational, 7>;

struct StollBasis {
    std::vector<StollVector> basis;
    std::size_t dimension() const { return basis.size(); }
};

/// Direct expansion of the Stoll template at a coefficient vector; the
/// zero polynomial certifies the vector.
inline ParamPoly stoll_residual(const StollVector& v, const ParamPoly& f) {
    const ParamPoly df = f.derivative();
    const ParamPoly ddf = df.derivative();
    ParamPoly r;
    r += param_monomial(4, 0, v[0]) * ddf;
    r += param_monomial(2, 1, v[1]) * ddf;
    r += param_monomial(0, 2, v[2]) * ddf;
    r += param_monomial(3, 0, v[3]) * df;
    r += param_monomial(1, 1, v[4]) * df;
    r -= param_monomial(2, 0, v[5]) * f;
    r -= param_monomial(0, 1, v[6]) * f;
    return r;
}

/// Exact null-space basis of the linear system obtained by expanding the
/// Stoll template with f = kth_kind(n, k) and equating every (x, a)
/// coefficient to zero. Throws EmptyBasis when no nonzero vector exists,
/// which would contradict the claim that the family satisfies such a form.
inline StollBasis fit_stoll(unsigned n, unsigned k) {
    if (n < 2) throw UnsupportedIndex("stoll fitting needs n >= 2");
    const ParamPoly f = kth_kind(n, k);
    const ParamPoly df = f.derivative();
    const ParamPoly ddf = df.derivative();

    // Multiplier of each unknown in the expanded residual.
    const std::array<ParamPoly, 7> cols = {
        param_monomial(4, 0, 1) * ddf, param_monomial(2, 1, 1) * ddf,
        param_monomial(0, 2, 1) * ddf, param_monomial(3, 0, 1) * df,
        param_monomial(1, 1, 1) * df,  -(param_monomial(2, 0, 1) * f),
        -(param_monomial(0, 1, 1) * f)};

    // One row per (x-degree, a-degree) pair appearing in any column.
    std::map<std::pair<int, int>, std::vector<Rational>> rows;
    for (std::size_t u = 0; u < cols.size(); ++u) {
        const auto& xcoeffs = cols[u].coeffs();
        for (std::size_t d = 0; d < xcoeffs.size(); ++d) {
            const auto& acoeffs = xcoeffs[d].coeffs();
            for (std::size_t j = 0; j < acoeffs.size(); ++j) {
                if (acoeffs[j].is_zero()) continue;
                auto& row = rows[{int(d), int(j)}];
                row.resize(7, Rational(0));
                row[u] = acoeffs[j];
            }
        }
    }

    RatMatrix m;
    m.reserve(rows.size());
    for (auto& [key, row] : rows) {
        (void)key;
        row.resize(7, Rational(0));
        m.push_back(std::move(row));
    }

    StollBasis out;
    for (auto& v : null_space(std::move(m), 7)) {
        StollVector sv;
        std::move(v.begin(), v.begin() + 7, sv.begin());
        out.basis.push_back(std::move(sv));
    }
    if (out.basis.empty())
        throw EmptyBasis("no Stoll-form ODE found for n=" + std::to_string(n) +
                         ", k=" + std::to_string(k));
    return out;
}

// --- particular solution of the non-homogeneous ODE -----------------------

/// Coefficients b_0..b_n of the polynomial particular solution of the
/// non-homogeneous third-kind form at a fixed parameter a.
struct ParticularCoeffs {
    unsigned n;
    Rational a;
    std::vector<Rational> b;  // ascending, size n+1

    Poly<Rational> polynomial() const { return Poly<Rational>(b); }
};

/// Solves the coefficient-matching system
///   [k(k+2) - n^2] b_k - 4a(k+2)(k+1) b_{k+2} = RHS_k
/// downward from the forced top values b_n = 1, b_{n-1} = 0, where RHS_k
/// is the x^k coefficient of 2n D_n(x, a). The divisor k(k+2) - n^2 is
/// nonzero for 0 <= k < n since n^2 + 1 is never a perfect square.
inline ParticularCoeffs particular_solution(unsigned n, const Rational& a) {
    if (a.is_zero()) throw ZeroParameter("particular solution needs a != 0");
    if (n == 0) throw UnsupportedIndex("particular solution needs n >= 1");

    const Poly<Rational> rhs =
        at_parameter(first_kind(n) * coeff_const(2 * long(n)), a);
    const long n2 = long(n) * long(n);

    std::vector<Rational> b(n + 1, Rational(0));
    b[n] = Rational(1);
    if (n >= 1) b[n - 1] = Rational(0);
    for (long k = long(n) - 2; k >= 0; --k) {
        const Rational top = (k + 2 <= long(n)) ? b[k + 2] : Rational(0);
        const Rational num =
            rhs[std::size_t(k)] + Rational(4) * a * Rational((k + 2) * (k + 1)) * top;
        b[std::size_t(k)] = num / Rational(k * (k + 2) - n2);
    }
    return {n, a, std::move(b)};
}

/// Splits F_n(x, a) at fixed a into the polynomial particular solution
/// and a remainder, and certifies that the remainder solves the
/// associated homogeneous equation exactly.
struct DecomposeReport {
    ParticularCoeffs particular;
    Poly<Rational> remainder;
    bool remainder_is_homogeneous_solution;
};

inline DecomposeReport decompose(unsigned n, const Rational& a) {
    ParticularCoeffs pc = particular_solution(n, a);
    const Poly<Rational> f = at_parameter(kth_kind(n, 2), a);
    const Poly<Rational> remainder = f - pc.polynomial();

    OdeFormQ hom = known_form_at(KnownOde::ThirdNonhomogeneous, n, a);
    hom.s = Poly<Rational>{};
    const bool solves = ode_residual(remainder, hom).is_zero_poly();
    return {std::move(pc), remainder, solves};
}

}  // namespace dickson
