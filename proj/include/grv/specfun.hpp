#pragma once

#include <array>

// Gamma-function family in binary64: gamma, log-gamma, digamma, polygamma,
// Hurwitz zeta, derivatives of gamma and the semi-factorial.
//
// Every function is pure; the constant tables below are constexpr.

namespace grv::specfun {

struct SpecialValueTable {
  double euler_gamma;
  double sqrt_pi;
  double ln2;
  double pi;
};

inline constexpr SpecialValueTable kConstants{
    0.57721566490153286060651209008240243,
    1.77245385090551602729816748334114518,
    0.69314718055994530941723212145817657,
    3.14159265358979323846264338327950288,
};

/// Bernoulli numbers B_2, B_4, ..., B_20 (b2k[k-1] == B_{2k}).
struct BernoulliTable {
  std::array<double, 10> b2k;
};

inline constexpr BernoulliTable kBernoulli{{
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
}};

inline constexpr int kMaxPolygammaOrder = 12;
inline constexpr int kMaxGammaDerivativeOrder = 8;

/// Gamma(a). Throws PoleError at non-positive integers and OverflowError
/// once the result leaves binary64 range (a > 171.62...).
double gamma(double a);

/// ln Gamma(a) for a > 0.
double ln_gamma(double a);

/// psi(a) = d/da ln Gamma(a).
double digamma(double a);

/// zeta(z, q) = sum_{n>=0} (n+q)^{-z}, z > 1, q > 0.
double hurwitz_zeta(double z, double q);

/// psi^(n)(x) = (-1)^{n+1} n! zeta(n+1, x) for 1 <= n <= 12, x > 0.
double polygamma(int n, double x);

/// Gamma^(n)(a) via Gamma^(k+1) = sum_j C(k,j) Gamma^(j) psi^(k-j).
double gamma_derivative(int n, double a);

/// (d/da)^n [mu^{-a} Gamma(a)], by the same recurrence with
/// psi(a) replaced by delta = psi(a) - ln mu.
double scaled_gamma_derivative(int n, double a, double mu);

/// k!! for odd k >= -1, with (-1)!! = 1.
double double_factorial(int k);

/// sin(pi x) with exact zeros at the integers.
double sin_pi(double x);

/// Binomial coefficient C(n, k) as a double (exact for the small n used here).
double binomial(int n, int k);

/// n! for 0 <= n <= 170.
double factorial(int n);

}  // namespace grv::specfun
