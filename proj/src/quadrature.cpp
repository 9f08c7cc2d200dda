#include "grv/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "grv/errors.hpp"

namespace grv::quad {
namespace {

constexpr double kHalfPi = 1.57079632679489661923132169163975144;
constexpr double kInf = std::numeric_limits<double>::infinity();
// Wide enough that exp-sinh reaches 1e-300 on the left and overflows on the right.
constexpr double kMaxT = 6.8;
// Tail truncation: stop walking outward once this many consecutive terms are
// below kTailRatio times the largest term seen.
constexpr int kTailRun = 4;
constexpr double kTailRatio = 1e-20;
constexpr double kTailMinT = 2.0;

// Abscissa-independent parts of the trapezoid grid: t, (pi/2) sinh t, (pi/2) cosh t.
struct LevelTable {
  std::vector<double> t;
  std::vector<double> half_pi_sinh;
  std::vector<double> half_pi_cosh;
};

using Tables = std::array<LevelTable, kMaxLevel + 1>;

// Level 1 holds every multiple of kBaseStep; level k > 1 only the new odd
// multiples of its step. Each table is sorted by t.
Tables build_tables() {
  Tables tables;
  for (int level = 1; level <= kMaxLevel; ++level) {
    const double h = kBaseStep / static_cast<double>(1L << (level - 1));
    const long n = static_cast<long>(std::floor(kMaxT / h));
    LevelTable& table = tables[level];
    for (long k = -n; k <= n; ++k) {
      if (level > 1 && (k % 2 == 0)) continue;
      const double t = static_cast<double>(k) * h;
      table.t.push_back(t);
      table.half_pi_sinh.push_back(kHalfPi * std::sinh(t));
      table.half_pi_cosh.push_back(kHalfPi * std::cosh(t));
    }
  }
  return tables;
}

const Tables& tables() {
  static const Tables instance = build_tables();
  return instance;
}

enum class Family { tanh_sinh, exp_sinh, sinh_sinh, sinh };

struct Transform {
  Family family;
  double lo = 0.0;
  double hi = 0.0;
  double scale = 1.0;
  double power = 1.0;  // exp-sinh exponent multiplier (stretched-exponential pre-map)

  // Fills p and w for the node with hyperbolic parts (s, c); false if dropped.
  bool node(double t, double s, double c, Point& p, double& w) const {
    switch (family) {
      case Family::tanh_sinh: {
        const double r = 0.5 * (hi - lo);
        const double e = std::exp(-2.0 * std::fabs(s));
        const double comp = 2.0 * e / (1.0 + e);  // 1 - tanh|u|
        const double near = r * comp;
        if (near < kEndpointClip) return false;
        const double far = r * (2.0 - comp);
        if (t < 0.0) {
          p = {lo + near, near, far};
        } else {
          p = {hi - near, far, near};
        }
        w = r * c * 4.0 * e / ((1.0 + e) * (1.0 + e));
        break;
      }
      case Family::exp_sinh: {
        const double d = scale * std::exp(power * s);
        if (d < kEndpointClip) return false;
        p = {lo + d, d, kInf};
        w = power * c * d;
        break;
      }
      case Family::sinh_sinh: {
        p = {scale * std::sinh(s), kInf, kInf};
        w = scale * c * std::cosh(s);
        break;
      }
      case Family::sinh: {
        p = {scale * s, kInf, kInf};
        w = scale * c;
        break;
      }
    }
    return std::isfinite(p.x) && std::isfinite(w) && w > 0.0;
  }
};

bool finite_side(const IntervalKind& interval, bool left) {
  if (std::holds_alternative<FiniteOpen>(interval)) return true;
  if (std::holds_alternative<SemiInfinite>(interval)) return left;
  return false;
}

void validate_behavior(const EndpointBehavior& b, bool finite) {
  if (const auto* alg = std::get_if<endpoint::Algebraic>(&b)) {
    if (finite && !(alg->exponent > -1.0)) {
      throw std::invalid_argument("endpoint hint: algebraic exponent must exceed -1 at a finite end");
    }
    if (!finite && !(alg->exponent < -1.0)) {
      throw std::invalid_argument("endpoint hint: algebraic decay exponent must be below -1");
    }
  } else if (const auto* ex = std::get_if<endpoint::Exponential>(&b)) {
    if (!(ex->rate > 0.0)) throw std::invalid_argument("endpoint hint: exponential rate must be positive");
  } else if (const auto* pw = std::get_if<endpoint::PowerInExponent>(&b)) {
    if (!(pw->b > 0.0)) throw std::invalid_argument("endpoint hint: power in exponent must be positive");
  }
}

Transform select_transform(const IntegralSpec& spec) {
  validate_behavior(spec.hint.left, finite_side(spec.interval, true));
  validate_behavior(spec.hint.right, finite_side(spec.interval, false));

  Transform tr{};
  if (const auto* fin = std::get_if<FiniteOpen>(&spec.interval)) {
    if (!std::isfinite(fin->lo) || !std::isfinite(fin->hi) || !(fin->lo < fin->hi)) {
      throw std::invalid_argument("integrate: finite interval needs finite lo < hi");
    }
    tr.family = Family::tanh_sinh;
    tr.lo = fin->lo;
    tr.hi = fin->hi;
  } else if (const auto* semi = std::get_if<SemiInfinite>(&spec.interval)) {
    if (!std::isfinite(semi->lo)) throw std::invalid_argument("integrate: half-line needs a finite lower bound");
    tr.family = Family::exp_sinh;
    tr.lo = semi->lo;
    if (const auto* ex = std::get_if<endpoint::Exponential>(&spec.hint.right)) {
      tr.scale = 1.0 / ex->rate;
    } else if (const auto* pw = std::get_if<endpoint::PowerInExponent>(&spec.hint.right)) {
      // exp(-x^b) with b < 1: integrate in u = x^b instead.
      if (pw->b < 1.0) tr.power = 1.0 / pw->b;
    }
  } else {
    // exp(-e^x) on the right: x = ln u turns it into exp(-u), and for the
    // exp-sinh nodes in u that is exactly x = (pi/2) sinh t.
    tr.family = std::holds_alternative<endpoint::DoubleExponential>(spec.hint.right) ? Family::sinh
                                                                                     : Family::sinh_sinh;
  }
  return tr;
}

// Neumaier compensated accumulator.
struct Accumulator {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

class Engine {
 public:
  Engine(const Integrand& f, Transform tr, const Options& opts) : f_(f), tr_(tr), opts_(opts) {}

  QuadratureResult run() {
    QuadratureResult result;
    const Tables& tab = tables();

    if (!first_level(tab[1])) {
      return finish(result, kBaseStep, false);
    }
    result.level_values.push_back(kBaseStep * acc_.value());

    double prev_err = kInf;
    for (int level = 2; level <= kMaxLevel; ++level) {
      const double h = kBaseStep / static_cast<double>(1L << (level - 1));
      const LevelTable& table = tab[level];
      if (evals_ + count_inside(table) > opts_.max_evals) break;
      for (std::size_t i = 0; i < table.t.size(); ++i) {
        const double t = table.t[i];
        if (t < cut_lo_ || t > cut_hi_) continue;
        evaluate(t, table.half_pi_sinh[i], table.half_pi_cosh[i]);
      }
      const double estimate = h * acc_.value();
      const double err = std::fabs(estimate - result.level_values.back());
      result.level_values.push_back(estimate);
      result.value = estimate;
      result.error_estimate = err;
      const double tol = std::max(opts_.abs_tol, opts_.rel_tol * std::fabs(estimate));
      if (level >= 3 && err <= tol && err <= prev_err) {
        result.converged = true;
        result.evaluations = evals_;
        return result;
      }
      prev_err = err;
    }
    result.evaluations = evals_;
    if (result.level_values.size() < 2) {
      result.value = result.level_values.back();
      result.error_estimate = kInf;
    }
    return result;
  }

 private:
  // Walks outward from t = 0 in both directions, fixing the truncation
  // window [cut_lo_, cut_hi_]. Returns false if the budget ran out.
  bool first_level(const LevelTable& table) {
    const std::size_t n = table.t.size();
    std::size_t mid = 0;
    while (mid < n && table.t[mid] < 0.0) ++mid;

    cut_hi_ = kMaxT;
    int run = 0;
    for (std::size_t i = mid; i < n; ++i) {
      if (evals_ >= opts_.max_evals) return false;
      const double term = evaluate(table.t[i], table.half_pi_sinh[i], table.half_pi_cosh[i]);
      if (negligible(table.t[i], term, run)) {
        cut_hi_ = table.t[i];
        break;
      }
    }
    cut_lo_ = -kMaxT;
    run = 0;
    for (std::size_t i = mid; i-- > 0;) {
      if (evals_ >= opts_.max_evals) return false;
      const double term = evaluate(table.t[i], table.half_pi_sinh[i], table.half_pi_cosh[i]);
      if (negligible(table.t[i], term, run)) {
        cut_lo_ = table.t[i];
        break;
      }
    }
    return true;
  }

  bool negligible(double t, double term, int& run) const {
    if (std::fabs(t) >= kTailMinT && max_term_ > 0.0 && std::fabs(term) <= kTailRatio * max_term_) {
      return ++run >= kTailRun;
    }
    run = 0;
    return false;
  }

  long count_inside(const LevelTable& table) const {
    long count = 0;
    for (double t : table.t) count += (t >= cut_lo_ && t <= cut_hi_) ? 1 : 0;
    return count;
  }

  double evaluate(double t, double s, double c) {
    Point p{};
    double w = 0.0;
    if (!tr_.node(t, s, c, p, w)) return 0.0;
    ++evals_;
    const double v = f_(p);
    if (!std::isfinite(v)) throw NonFiniteSampleError(p.x, v);
    const double term = w * v;
    acc_.add(term);
    max_term_ = std::max(max_term_, std::fabs(term));
    return term;
  }

  QuadratureResult finish(QuadratureResult& result, double h, bool converged) const {
    result.value = h * acc_.value();
    result.error_estimate = kInf;
    result.evaluations = evals_;
    result.converged = converged;
    return result;
  }

  const Integrand& f_;
  Transform tr_;
  Options opts_;
  Accumulator acc_;
  long evals_ = 0;
  double max_term_ = 0.0;
  double cut_lo_ = -kMaxT;
  double cut_hi_ = kMaxT;
};

}  // namespace

QuadratureResult integrate(const Integrand& f, const IntegralSpec& spec, const Options& opts) {
  if (!(opts.abs_tol > 0.0) || !(opts.rel_tol > 0.0)) {
    throw std::invalid_argument("integrate: tolerances must be positive");
  }
  if (opts.max_evals < 1) throw std::invalid_argument("integrate: evaluation budget must be positive");
  Engine engine(f, select_transform(spec), opts);
  return engine.run();
}

QuadratureResult integrate(const std::function<double(double)>& f, const IntegralSpec& spec,
                           const Options& opts) {
  return integrate(Integrand([&f](const Point& p) { return f(p.x); }), spec, opts);
}

double finite_difference_derivative(const std::function<double(double)>& g, double a, int order,
                                    std::optional<double> step) {
  if (order != 1 && order != 2) throw std::invalid_argument("finite_difference_derivative: order must be 1 or 2");
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double h = step.value_or((order == 1 ? std::cbrt(eps) : std::sqrt(std::sqrt(eps))) *
                           std::max(1.0, std::fabs(a)));
  if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("finite_difference_derivative: step must be positive");

  auto sample = [&g](double x) {
    const double v = g(x);
    if (!std::isfinite(v)) throw NonFiniteSampleError(x, v);
    return v;
  };
  const double center = order == 2 ? sample(a) : 0.0;
  auto estimate = [&](double step_size) {
    // Use the representable step actually taken.
    const double up = a + step_size;
    const double down = a - step_size;
    const double hu = up - a;
    const double hd = a - down;
    if (order == 1) return (sample(up) - sample(down)) / (hu + hd);
    return 2.0 * ((sample(up) - center) / hu - (center - sample(down)) / hd) / (hu + hd);
  };
  const double coarse = estimate(h);
  const double fine = estimate(0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace grv::quad
