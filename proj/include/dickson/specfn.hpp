#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "dickson/errors.hpp"
#include "dickson/families.hpp"
#include "dickson/ode.hpp"
#include "dickson/polynomial.hpp"

namespace dickson {

using Complex = std::complex<double>;

namespace detail {

using CL = std::complex<long double>;

inline void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

inline void require_finite(const Complex& v, const char* what) {
    require_finite(v.real(), what);
    require_finite(v.imag(), what);
}

inline CL widen(const Complex& v) { return CL(v.real(), v.imag()); }
inline Complex narrow(const CL& v) {
    return Complex(double(v.real()), double(v.imag()));
}

// Lanczos, g = 7, nine coefficients; summed in extended precision so the
// returned double is limited by the approximation, not the arithmetic.
inline long double lanczos_sum(long double x) {
    static constexpr long double c[9] = {
        0.99999999999980993L,    676.5203681218851L,
        -1259.1392167224028L,    771.32342877765313L,
        -176.61502916214059L,    12.507343278686905L,
        -0.13857109526572012L,   9.9843695780195716e-6L,
        1.5056327351493116e-7L};
    long double s = c[0];
    for (int i = 1; i < 9; ++i) s += c[i] / (x - 1 + i);
    return s;
}

inline long double gamma_impl(long double x) {
    constexpr long double pi = std::numbers::pi_v<long double>;
    if (x < 0.5L) return pi / (sinl(pi * x) * gamma_impl(1.0L - x));
    const long double t = x + 6.5L;
    return sqrtl(2.0L * pi) * powl(t, x - 0.5L) * expl(-t) * lanczos_sum(x);
}

}  // namespace detail

/// Γ(x) by a g = 7 Lanczos approximation, reflected below 1/2.
inline double gamma_fn(double x) {
    detail::require_finite(x, "gamma argument");
    if (x <= 0.0 && x == std::floor(x))
        throw PoleError("gamma pole at " + std::to_string(x));
    return double(detail::gamma_impl(static_cast<long double>(x)));
}

/// Rising factorial (a)_n.
inline double pochhammer(double a, unsigned n) {
    detail::require_finite(a, "pochhammer base");
    double r = 1.0;
    for (unsigned i = 0; i < n; ++i) r *= a + double(i);
    return r;
}

/// Gauss series for 2F1(a, b; c; z) inside |z| <= 1 - 1e-3. Terms are
/// accumulated in extended precision; the sum is accepted once three
/// consecutive terms fall below 1e-16 of its magnitude.
inline Complex hyp2f1(double a, double b, double c, Complex z) {
    detail::require_finite(a, "2F1 parameter a");
    detail::require_finite(b, "2F1 parameter b");
    detail::require_finite(c, "2F1 parameter c");
    detail::require_finite(z, "2F1 argument");
    if (c <= 0.0 && c == std::floor(c))
        throw ParameterPole("2F1 lower parameter is a non-positive integer");
    if (std::abs(z) > 1.0 - 1e-3)
        throw DomainError("2F1 argument too close to |z| = 1");

    const detail::CL zl = detail::widen(z);
    detail::CL sum(1.0L), term(1.0L);
    int settled = 0;
    for (unsigned k = 0; k < 10000; ++k) {
        const long double kl = k;
        term *= zl * ((a + kl) * (b + kl) / ((c + kl) * (kl + 1.0L)));
        sum += term;
        if (std::abs(term) < 1e-16L * std::abs(sum)) {
            if (++settled == 3) return detail::narrow(sum);
        } else {
            settled = 0;
        }
    }
    throw ConvergenceError("2F1 series did not settle within 10000 terms");
}

/// Index data of the order-1/2 Legendre functions attached to F_n:
/// the degree nu solves nu(nu+1) = n^2 + 3/4 and is never an integer.
struct LegendreParams {
    unsigned n;
    double nu;         // sqrt(n^2 + 1) - 1/2
    double mu = 0.5;

    explicit LegendreParams(unsigned index)
        : n(index), nu(std::sqrt(double(index) * double(index) + 1.0) - 0.5) {}
};

/// P^{1/2}_nu(z) on 1 < z < 3. The ratio (1+z)/(1-z) is negative there,
/// so the principal quartic root contributes the constant phase
/// e^{i pi/4} and the value is genuinely complex.
inline Complex legendre_p_half(const LegendreParams& params, double z) {
    detail::require_finite(z, "Legendre argument");
    if (!(z > 1.0 && z < 3.0))
        throw DomainError("P^{1/2} requires 1 < z < 3");
    constexpr long double pi = std::numbers::pi_v<long double>;
    const long double s = static_cast<long double>(params.nu) + 0.5L;
    const long double zl = z;
    const long double mag = powl((zl + 1.0L) / (zl - 1.0L), 0.25L);
    const detail::CL phase(cosl(pi / 4.0L), sinl(pi / 4.0L));
    const Complex h = hyp2f1(double(0.5L - s), double(0.5L + s), 0.5,
                             Complex((1.0 - z) / 2.0, 0.0));
    const detail::CL value =
        phase * (mag / static_cast<long double>(gamma_fn(0.5))) * detail::widen(h);
    return detail::narrow(value);
}

/// Q^{1/2}_nu(z) on z > 1: the displayed factor i times real positive
/// factors, hence purely imaginary on the real ray.
inline Complex legendre_q_half(const LegendreParams& params, double z) {
    detail::require_finite(z, "Legendre argument");
    if (!(z > 1.0)) throw DomainError("Q^{1/2} requires z > 1");
    constexpr long double pi = std::numbers::pi_v<long double>;
    const long double s = static_cast<long double>(params.nu) + 0.5L;
    const long double zl = z;
    const long double pref = sqrtl(pi) / powl(2.0L, s + 0.5L) *
                             powl(zl * zl - 1.0L, 0.25L) / powl(zl, s + 1.0L);
    const Complex h = hyp2f1(double((s + 1.0L) / 2.0L), double((s + 2.0L) / 2.0L),
                             double(s + 1.0L), Complex(1.0 / (z * z), 0.0));
    return detail::narrow(detail::CL(0.0L, pref) * detail::widen(h));
}

enum class LegendreKind { P, Q };

namespace detail {

// Central differences with one Richardson step, h fixed at 1e-4.
template <class F>
void richardson_derivatives(const F& u, double z, Complex& du, Complex& ddu) {
    const double h = 1e-4;
    const auto d1 = [&](double step) {
        return (u(z + step) - u(z - step)) / (2.0 * step);
    };
    const auto d2 = [&](double step) {
        return (u(z + step) - 2.0 * u(z) + u(z - step)) / (step * step);
    };
    du = (4.0 * d1(h / 2) - d1(h)) / 3.0;
    ddu = (4.0 * d2(h / 2) - d2(h)) / 3.0;
}

}  // namespace detail

/// Relative residual of u = P or Q in the associated Legendre equation
/// (z^2-1)u'' + 2z u' - [nu(nu+1) + (1/4)/(z^2-1)] u = 0, derivatives by
/// finite differences. Restricted to 1.05 <= z <= 2.9 so every stencil
/// point stays inside both representation domains.
inline double assoc_legendre_ode_residual(const LegendreParams& params, double z,
                                          LegendreKind which) {
    detail::require_finite(z, "residual point");
    if (!(z >= 1.05 && z <= 2.9))
        throw DomainError("residual check requires 1.05 <= z <= 2.9");
    const auto u = [&](double t) {
        return which == LegendreKind::P ? legendre_p_half(params, t)
                                        : legendre_q_half(params, t);
    };
    Complex du, ddu;
    detail::richardson_derivatives(u, z, du, ddu);
    const Complex uz = u(z);
    const double ll1 = params.nu * (params.nu + 1.0);
    const Complex res = (z * z - 1.0) * ddu + 2.0 * z * du -
                        (ll1 + 0.25 / (z * z - 1.0)) * uz;
    return std::abs(res) / std::max(std::abs(uz), 1.0);
}

/// Homogeneous part of the general solution,
/// (x^2-4a)^{-1/4} [A P^{1/2}_nu + B Q^{1/2}_nu](x / (2 sqrt a)),
/// on the strip 2 sqrt(a) < x < 6 sqrt(a) where z lands in (1, 3).
inline Complex homogeneous_eval(unsigned n, double a, double x, Complex A,
                                Complex B) {
    detail::require_finite(a, "parameter a");
    detail::require_finite(x, "evaluation point");
    detail::require_finite(A, "constant A");
    detail::require_finite(B, "constant B");
    if (!(a > 0.0)) throw DomainError("homogeneous solution requires a > 0");
    const double root = 2.0 * std::sqrt(a);
    if (!(x > root && x < 3.0 * root))
        throw DomainError("x outside the strip (2 sqrt a, 6 sqrt a)");
    const LegendreParams params(n);
    const double z = x / root;
    const long double pref =
        powl(static_cast<long double>(x) * x - 4.0L * a, -0.25L);
    const detail::CL acc = detail::widen(A) * detail::widen(legendre_p_half(params, z)) +
                           detail::widen(B) * detail::widen(legendre_q_half(params, z));
    return detail::narrow(acc * pref);
}

/// Relative residual of homogeneous_eval in
/// (x^2-4a) F'' + 3x F' - n^2 F = 0, same finite-difference scheme.
inline double homogeneous_ode_residual(unsigned n, double a, double x, Complex A,
                                       Complex B) {
    const auto u = [&](double t) { return homogeneous_eval(n, a, t, A, B); };
    Complex du, ddu;
    detail::richardson_derivatives(u, x, du, ddu);
    const Complex ux = u(x);
    const Complex res =
        (x * x - 4.0 * a) * ddu + 3.0 * x * du - double(n) * double(n) * ux;
    return std::abs(res) / std::max(std::abs(ux), 1.0);
}

struct FitResult {
    Complex A, B;
    double residual_norm;
};

/// Least-squares solve of A col0 + B col1 ~ target via the normal
/// equations of the two-column design matrix; throws IllConditioned
/// when its condition number exceeds 1e12.
inline FitResult solve_two_column(const std::vector<Complex>& col0,
                                  const std::vector<Complex>& col1,
                                  const std::vector<Complex>& target) {
    const std::size_t m = col0.size();
    if (col1.size() != m || target.size() != m || m < 2)
        throw DomainError("two-column solve needs equally sized columns, >= 2 rows");
    long double g00 = 0, g11 = 0;
    detail::CL g01(0.0L), r0(0.0L), r1(0.0L);
    for (std::size_t i = 0; i < m; ++i) {
        const detail::CL p = detail::widen(col0[i]);
        const detail::CL q = detail::widen(col1[i]);
        const detail::CL t = detail::widen(target[i]);
        g00 += std::norm(p);
        g11 += std::norm(q);
        g01 += std::conj(p) * q;
        r0 += std::conj(p) * t;
        r1 += std::conj(q) * t;
    }
    const long double tr = g00 + g11;
    const long double gap =
        sqrtl((g00 - g11) * (g00 - g11) + 4.0L * std::norm(g01));
    const long double lmax = (tr + gap) / 2.0L;
    const long double lmin = (tr - gap) / 2.0L;
    if (!(lmin > 0.0L) || sqrtl(lmax / lmin) > 1e12L)
        throw IllConditioned("sample columns are numerically dependent");

    const long double det = g00 * g11 - std::norm(g01);
    const detail::CL A = (r0 * g11 - g01 * r1) / det;
    const detail::CL B = (g00 * r1 - std::conj(g01) * r0) / det;

    long double rss = 0;
    for (std::size_t i = 0; i < m; ++i)
        rss += std::norm(A * detail::widen(col0[i]) + B * detail::widen(col1[i]) -
                         detail::widen(target[i]));
    return {detail::narrow(A), detail::narrow(B), double(sqrtl(rss))};
}

/// Least-squares fit of A, B so that A P + B Q matches
/// (F_n - F_p)(x) (x^2-4a)^{1/4} at the sample points; the expected
/// outcome is A = B = 0 because the particular solution already equals
/// F_n. Throws IllConditioned when the two columns nearly coincide.
inline FitResult fit_constants(unsigned n, double a,
                               const std::vector<double>& sample_xs) {
    detail::require_finite(a, "parameter a");
    if (!(a > 0.0)) throw DomainError("fit requires a > 0");
    if (n == 0) throw UnsupportedIndex("fit requires n >= 1");
    if (sample_xs.size() < 4)
        throw DomainError("fit requires at least 4 sample points");

    const Rational ar{mpq_class(a)};  // exact binary rational
    const Poly<Rational> target_poly =
        at_parameter(kth_kind(n, 2), ar) - particular_solution(n, ar).polynomial();

    const LegendreParams params(n);
    const double root = 2.0 * std::sqrt(a);
    const std::size_t m = sample_xs.size();
    std::vector<Complex> pcol(m), qcol(m), tcol(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double x = sample_xs[i];
        detail::require_finite(x, "sample point");
        if (!(x > root && x < 3.0 * root))
            throw DomainError("sample point outside the strip (2 sqrt a, 6 sqrt a)");
        const double z = x / root;
        pcol[i] = legendre_p_half(params, z);
        qcol[i] = legendre_q_half(params, z);
        tcol[i] = Complex(eval_double(target_poly, x) *
                          double(powl(static_cast<long double>(x) * x - 4.0L * a,
                                      0.25L)));
    }
    return solve_two_column(pcol, qcol, tcol);
}

}  // namespace dickson
