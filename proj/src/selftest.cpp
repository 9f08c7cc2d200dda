#include "grv/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "grv/quadrature.hpp"
#include "grv/specfun.hpp"

namespace grv {
namespace {

namespace sf = specfun;
using quad::Point;

SelftestCheck check(std::string suite, std::string name, double worst, double tolerance) {
  return {std::move(suite), std::move(name), worst <= tolerance, worst, tolerance};
}

double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

void specfun_suite(std::vector<SelftestCheck>& out) {
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double a = std::exp(std::log(1e-2) + (std::log(50.0) - std::log(1e-2)) * (i + 0.5) / 200.0);
    worst = std::max(worst, std::fabs(sf::gamma(a + 1.0) / (a * sf::gamma(a)) - 1.0));
  }
  out.push_back(check("specfun", "recurrence Gamma(a+1) = a Gamma(a)", worst, 1e-12));

  worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double x = 0.1 + (30.0 - 0.1) * i / 99.0;
    const double r =
        sf::gamma(x + 0.5) * sf::gamma(x) * std::exp2(2.0 * x - 1.0) / (sf::gamma(2.0 * x) * sf::kConstants.sqrt_pi);
    worst = std::max(worst, std::fabs(r - 1.0));
  }
  out.push_back(check("specfun", "duplication formula", worst, 1e-11));

  worst = 0.0;
  for (int j = 1; j <= 99; ++j) {
    const double mu = j / 100.0;
    const double r = sf::gamma(mu) * sf::gamma(1.0 - mu) * std::sin(sf::kConstants.pi * mu) / sf::kConstants.pi;
    worst = std::max(worst, std::fabs(r - 1.0));
  }
  out.push_back(check("specfun", "reflection formula", worst, 1e-11));

  worst = 0.0;
  for (int m = 0; m <= 15; ++m) {
    const double closed = sf::kConstants.sqrt_pi * sf::factorial(2 * m) / (std::ldexp(1.0, 2 * m) * sf::factorial(m));
    worst = std::max(worst, rel(sf::gamma(m + 0.5), closed));
  }
  out.push_back(check("specfun", "Gamma(m + 1/2) closed form", worst, 1e-12));

  worst = 0.0;
  for (int i = 0; i <= 60; ++i) {
    const double a = 0.5 + 19.5 * i / 60.0;
    const double h = 1e-5;
    const double fd = (sf::ln_gamma(a + h) - sf::ln_gamma(a - h)) / (2.0 * h);
    worst = std::max(worst, std::fabs(fd - sf::digamma(a)));
  }
  out.push_back(check("specfun", "digamma vs d/da ln Gamma", worst, 1e-6));

  worst = 0.0;
  for (int n = 1; n <= 6; ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double link = sf::polygamma(n, 1.0) + sign * sf::factorial(n) * sf::hurwitz_zeta(n + 1.0, 1.0);
    worst = std::max(worst, std::fabs(link) / std::fabs(sf::polygamma(n, 1.0)));
  }
  out.push_back(check("specfun", "polygamma / Hurwitz zeta link", worst, 1e-11));

  out.push_back(check("specfun", "Gamma(1/2)^2 = pi", std::fabs(std::pow(sf::gamma(0.5), 2) - sf::kConstants.pi), 1e-12));
  out.push_back(check("specfun", "-psi(1) = Euler gamma",
                      std::fabs(-sf::digamma(1.0) - sf::kConstants.euler_gamma), 1e-15));
}

void quadrature_suite(std::vector<SelftestCheck>& out) {
  namespace ep = quad::endpoint;
  const quad::Options opts;
  struct Case {
    const char* name;
    quad::Integrand f;
    quad::IntegralSpec spec;
    double exact;
  };
  const Case cases[] = {
      {"exp(-t) on (0,inf)", [](const Point& p) { return std::exp(-p.x); },
       {quad::SemiInfinite{0.0}, {ep::None{}, ep::Exponential{1.0}}}, 1.0},
      {"1/sqrt(-ln x) on (0,1)",
       [](const Point& p) {
         const double l = p.from_lo < 0.5 ? -std::log(p.from_lo) : -std::log1p(-p.to_hi);
         return 1.0 / std::sqrt(l);
       },
       {quad::FiniteOpen{0.0, 1.0}, {ep::LogPower{-0.5}, ep::Algebraic{-0.5}}}, sf::kConstants.sqrt_pi},
      {"exp(-t^2) on (0,inf)", [](const Point& p) { return std::exp(-p.x * p.x); },
       {quad::SemiInfinite{0.0}, {ep::None{}, ep::PowerInExponent{2.0}}}, 0.5 * sf::kConstants.sqrt_pi},
      {"exp(-e^x) e^(2x) on R", [](const Point& p) { return std::exp(2.0 * p.x - std::exp(p.x)); },
       {quad::FullLine{}, {ep::None{}, ep::DoubleExponential{}}}, 1.0},
  };
  for (const auto& c : cases) {
    const auto r = quad::integrate(c.f, c.spec, opts);
    const double tol = std::max(opts.abs_tol, opts.rel_tol * std::fabs(c.exact));
    out.push_back(check("quadrature", c.name, r.converged ? std::fabs(r.value - c.exact) : INFINITY, tol));
  }

  const auto one = quad::integrate([](const Point&) { return 1.0; }, {quad::FiniteOpen{0.0, 1.0}, {}}, opts);
  double worst = 0.0;
  for (std::size_t level = 1; level < one.level_values.size(); ++level) {
    worst = std::max(worst, std::fabs(one.level_values[level] - 1.0));
  }
  out.push_back(check("quadrature", "constant 1 on (0,1), levels >= 2", worst, 1e-14));

  const auto gauss = [](const Point& p) { return std::exp(-p.x * p.x); };
  const auto full = quad::integrate(gauss, {quad::FullLine{}, {}}, opts);
  const auto half = quad::integrate(gauss, {quad::SemiInfinite{0.0}, {}}, opts);
  out.push_back(check("quadrature", "even integrand: full line = 2 x half line", std::fabs(full.value - 2.0 * half.value),
                      3.0 * std::max(opts.abs_tol, opts.rel_tol * std::fabs(full.value))));

  const double fd1 = quad::finite_difference_derivative([](double x) { return sf::ln_gamma(x); }, 1.0, 1);
  out.push_back(check("quadrature", "d/da ln Gamma at 1 = -gamma", std::fabs(fd1 + sf::kConstants.euler_gamma), 1e-8));
  const double fd2 = quad::finite_difference_derivative([](double x) { return sf::gamma(x); }, 1.0, 2);
  out.push_back(check("quadrature", "Gamma''(1) by finite differences", std::fabs(fd2 - sf::gamma_derivative(2, 1.0)),
                      1e-6));
}

}  // namespace

std::vector<SelftestCheck> run_selftest() {
  std::vector<SelftestCheck> out;
  specfun_suite(out);
  quadrature_suite(out);
  return out;
}

}  // namespace grv
