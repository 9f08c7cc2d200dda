#include "grv/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "grv/errors.hpp"

namespace grv::specfun {
namespace {

// Godfrey's Lanczos coefficients, g = 607/128, 15 terms.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos{
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640561764;
constexpr double kSqrt2Pi = 2.50662827463100050241576528481104525;
// Largest a with Gamma(a) < DBL_MAX.
constexpr double kGammaOverflow = 171.62437695630272;

constexpr double kDigammaShift = 12.0;
constexpr int kHurwitzDirectTerms = 16;

bool is_nonpositive_integer(double a) { return a <= 0.0 && a == std::floor(a); }

double lanczos_sum(double x) {
  double sum = 0.0;
  for (std::size_t i = kLanczos.size() - 1; i > 0; --i) {
    sum += kLanczos[i] / (x + static_cast<double>(i));
  }
  return sum + kLanczos[0];
}

void require_finite(double a, const char* what) {
  if (!std::isfinite(a)) {
    throw DomainError(std::string(what) + ": argument must be finite");
  }
}

double cos_pi(double x) {
  double r = std::fmod(std::fabs(x), 2.0);
  if (r > 1.0) r = 2.0 - r;
  return sin_pi(0.5 - r);
}

// ln x - 1/(2x) - sum_k B_2k / (2k x^{2k}), valid for x >= 12.
double digamma_asymptotic(double x) {
  const double inv2 = 1.0 / (x * x);
  double power = inv2;
  double series = 0.0;
  for (std::size_t k = 0; k < kBernoulli.b2k.size(); ++k) {
    const double term = kBernoulli.b2k[k] / (2.0 * static_cast<double>(k + 1)) * power;
    series += term;
    power *= inv2;
  }
  return std::log(x) - 0.5 / x - series;
}

}  // namespace

double sin_pi(double x) {
  double r = std::fmod(x, 2.0);
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  return std::sin(kConstants.pi * r);
}

double factorial(int n) {
  if (n < 0 || n > 170) throw DomainError("factorial: n must lie in [0, 170]");
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int j = 1; j <= k; ++j) {
    c = c * (n - k + j) / j;
  }
  return std::round(c);
}

double gamma(double a) {
  require_finite(a, "gamma");
  if (is_nonpositive_integer(a)) {
    throw PoleError("gamma: pole at non-positive integer " + std::to_string(a));
  }
  if (a > kGammaOverflow) {
    throw OverflowError("gamma: result exceeds binary64 range for a = " + std::to_string(a));
  }
  if (a < 0.5) {
    if (a < -170.0) throw DomainError("gamma: arguments below -170 are not supported");
    return kConstants.pi / (sin_pi(a) * gamma(1.0 - a));
  }
  if (a == std::floor(a) && a <= 171.0) {
    return factorial(static_cast<int>(a) - 1);
  }
  const double t = a + kLanczosG + 0.5;
  // t^{a+1/2} e^{-t} split in two halves so large a does not overflow early.
  const double half = std::pow(t, 0.5 * (a + 0.5));
  return kSqrt2Pi * half * (half * std::exp(-t)) * lanczos_sum(a) / a;
}

double ln_gamma(double a) {
  require_finite(a, "ln_gamma");
  if (a <= 0.0) throw DomainError("ln_gamma: requires a > 0");
  if (a == 1.0 || a == 2.0) return 0.0;
  if (a < 0.5) return ln_gamma(a + 1.0) - std::log(a);
  const double t = a + kLanczosG + 0.5;
  return (a + 0.5) * std::log(t) - t + kHalfLog2Pi + std::log(lanczos_sum(a) / a);
}

double digamma(double a) {
  require_finite(a, "digamma");
  if (is_nonpositive_integer(a)) {
    throw PoleError("digamma: pole at non-positive integer " + std::to_string(a));
  }
  if (a < 0.0) {
    // psi(a) = psi(1 - a) - pi cot(pi a)
    return digamma(1.0 - a) - kConstants.pi * cos_pi(a) / sin_pi(a);
  }
  if (a == std::floor(a) && a <= 2.0 * kDigammaShift) {
    // psi(n) = -gamma + H_{n-1}
    double harmonic = 0.0;
    for (int k = static_cast<int>(a) - 1; k >= 1; --k) harmonic += 1.0 / k;
    return harmonic - kConstants.euler_gamma;
  }
  if (a >= kDigammaShift) return digamma_asymptotic(a);

  const int shift = static_cast<int>(std::ceil(kDigammaShift - a));
  double harmonic = 0.0;
  for (int k = shift - 1; k >= 0; --k) harmonic += 1.0 / (a + k);
  return digamma_asymptotic(a + shift) - harmonic;
}

double hurwitz_zeta(double z, double q) {
  if (!std::isfinite(z) || !std::isfinite(q)) throw DomainError("hurwitz_zeta: arguments must be finite");
  if (z <= 1.0) throw DomainError("hurwitz_zeta: requires z > 1");
  if (q <= 0.0) throw DomainError("hurwitz_zeta: requires q > 0");

  double direct = 0.0;
  for (int k = kHurwitzDirectTerms - 1; k >= 0; --k) direct += std::pow(q + k, -z);

  // Euler-Maclaurin tail from w = q + N.
  const double w = q + kHurwitzDirectTerms;
  const double wz = std::pow(w, -z);
  std::array<double, kBernoulli.b2k.size()> corrections{};
  double rising = z / w;  // z (z+1) ... (z+2j-2) / w^{2j-1}
  for (std::size_t j = 1; j <= kBernoulli.b2k.size(); ++j) {
    if (j > 1) {
      const double jj = static_cast<double>(j);
      rising *= (z + 2.0 * jj - 3.0) * (z + 2.0 * jj - 2.0) / (w * w);
    }
    corrections[j - 1] = kBernoulli.b2k[j - 1] / factorial(2 * static_cast<int>(j)) * rising * wz;
  }
  double tail = 0.0;
  for (auto it = corrections.rbegin(); it != corrections.rend(); ++it) tail += *it;
  tail += 0.5 * wz;
  tail += w * wz / (z - 1.0);
  return direct + tail;
}

double polygamma(int n, double x) {
  if (n < 1) throw DomainError("polygamma: order must be >= 1 (use digamma for n = 0)");
  if (n > kMaxPolygammaOrder) {
    throw UnsupportedOrderError("polygamma: order " + std::to_string(n) + " exceeds " +
                                std::to_string(kMaxPolygammaOrder));
  }
  require_finite(x, "polygamma");
  if (x <= 0.0) throw DomainError("polygamma: requires x > 0");
  const double sign = (n % 2 == 1) ? 1.0 : -1.0;
  return sign * factorial(n) * hurwitz_zeta(n + 1.0, x);
}

namespace {

// y^{(n)} where y' = y * d and d^{(k)} is supplied for k = 0..n-1.
double leibniz_recurrence(int n, double y0, const std::vector<double>& d) {
  std::vector<double> y(static_cast<std::size_t>(n) + 1);
  y[0] = y0;
  for (int m = 0; m < n; ++m) {
    double acc = 0.0;
    for (int k = 0; k <= m; ++k) acc += binomial(m, k) * y[k] * d[m - k];
    y[m + 1] = acc;
  }
  return y[n];
}

void check_derivative_args(int n, double a, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": order must be >= 0");
  if (n > kMaxGammaDerivativeOrder) {
    throw UnsupportedOrderError(std::string(what) + ": order " + std::to_string(n) + " exceeds " +
                                std::to_string(kMaxGammaDerivativeOrder));
  }
  require_finite(a, what);
  if (a <= 0.0) throw DomainError(std::string(what) + ": requires a > 0");
}

std::vector<double> psi_derivatives(int n, double a, double shift) {
  std::vector<double> d(static_cast<std::size_t>(std::max(n, 1)));
  d[0] = digamma(a) - shift;
  for (int k = 1; k < n; ++k) d[k] = polygamma(k, a);
  return d;
}

}  // namespace

double gamma_derivative(int n, double a) {
  check_derivative_args(n, a, "gamma_derivative");
  const double g = gamma(a);
  if (n == 0) return g;
  return leibniz_recurrence(n, g, psi_derivatives(n, a, 0.0));
}

double scaled_gamma_derivative(int n, double a, double mu) {
  check_derivative_args(n, a, "scaled_gamma_derivative");
  if (!(mu > 0.0) || !std::isfinite(mu)) throw DomainError("scaled_gamma_derivative: requires mu > 0");
  const double h = gamma(a) * std::pow(mu, -a);
  if (n == 0) return h;
  return leibniz_recurrence(n, h, psi_derivatives(n, a, std::log(mu)));
}

double double_factorial(int k) {
  if (k < -1 || k % 2 == 0) {
    throw DomainError("double_factorial: requires an odd integer >= -1, got " + std::to_string(k));
  }
  double p = 1.0;
  for (int j = k; j > 1; j -= 2) p *= j;
  return p;
}

}  // namespace grv::specfun
