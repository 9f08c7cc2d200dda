#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

// Double-exponential quadrature for the integrals in the catalog: tanh-sinh
// on finite intervals, exp-sinh on half lines, sinh-sinh on the real line.
//
// Integrands receive a Point carrying, besides the abscissa, the distances
// to the finite endpoints computed without cancellation. Near an endpoint
// `x` itself may round onto the endpoint while `from_lo`/`to_hi` stay exact,
// which is what lets factors such as (-ln x)^{a-1} near x = 1 be evaluated
// through log1p(-to_hi).

namespace grv::quad {

struct FiniteOpen {
  double lo;
  double hi;
};
struct SemiInfinite {
  double lo;
};
struct FullLine {};

using IntervalKind = std::variant<FiniteOpen, SemiInfinite, FullLine>;

namespace endpoint {
struct None {};
/// Behaves like d^exponent in the distance d to the endpoint (exponent > -1),
/// or like x^exponent at an infinite end.
struct Algebraic {
  double exponent;
};
/// Behaves like |ln d|^power.
struct LogPower {
  double power;
};
/// Decays like exp(-rate x).
struct Exponential {
  double rate;
};
/// Decays like exp(-c x^b).
struct PowerInExponent {
  double b;
};
/// Decays like exp(-c e^x).
struct DoubleExponential {};
}  // namespace endpoint

using EndpointBehavior = std::variant<endpoint::None, endpoint::Algebraic, endpoint::LogPower,
                                      endpoint::Exponential, endpoint::PowerInExponent,
                                      endpoint::DoubleExponential>;

struct EndpointHint {
  EndpointBehavior left = endpoint::None{};
  EndpointBehavior right = endpoint::None{};
};

struct IntegralSpec {
  IntervalKind interval;
  EndpointHint hint;
};

/// Abscissa plus exact distances to the finite endpoints (+inf when absent).
struct Point {
  double x;
  double from_lo;
  double to_hi;
};

using Integrand = std::function<double(const Point&)>;

struct Options {
  double abs_tol = 1e-12;
  double rel_tol = 1e-11;
  long max_evals = 200000;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
  /// Trapezoid estimates at each completed level (level 1 first).
  std::vector<double> level_values;
};

inline constexpr int kMaxLevel = 12;
/// Step size of level 1; level k uses kBaseStep / 2^{k-1}.
inline constexpr double kBaseStep = 0.25;
/// Nodes closer than this to a finite endpoint are dropped.
inline constexpr double kEndpointClip = 1e-300;

/// Throws std::invalid_argument for non-positive tolerances or a malformed
/// interval, NonFiniteSampleError when f returns NaN/inf at a node. Budget
/// exhaustion is reported through `converged == false`.
QuadratureResult integrate(const Integrand& f, const IntegralSpec& spec, const Options& opts = {});

QuadratureResult integrate(const std::function<double(double)>& f, const IntegralSpec& spec,
                           const Options& opts = {});

/// Central-difference estimate of g^(order)(a), order 1 or 2, refined by one
/// Richardson pass. Default step: eps^{1/3} max(1,|a|) (order 1),
/// eps^{1/4} max(1,|a|) (order 2).
double finite_difference_derivative(const std::function<double(double)>& g, double a, int order,
                                    std::optional<double> step = std::nullopt);

}  // namespace grv::quad
