#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "catalog_internal.hpp"
#include "grv/specfun.hpp"

namespace grv::catalog::detail {
namespace {

using P = ParameterAssignment;
using quad::Point;
namespace ep = quad::endpoint;
namespace sf = specfun;

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kSqrtPi = sf::kConstants.sqrt_pi;
const double kEuler = sf::kConstants.euler_gamma;
const double kPi = sf::kConstants.pi;

SymbolRange open(std::string name, double lo, double hi) { return {std::move(name), lo, hi, true, true, false}; }
SymbolRange closed(std::string name, double lo, double hi) { return {std::move(name), lo, hi, false, false, false}; }
SymbolRange whole(std::string name, int lo, int hi) {
  return {std::move(name), static_cast<double>(lo), static_cast<double>(hi), false, false, true};
}

ParameterDomain domain(std::vector<SymbolRange> symbols, std::vector<CrossConstraint> cross = {},
                       bool derived = false) {
  return ParameterDomain{std::move(symbols), std::move(cross), derived};
}

// -ln x on (0,1), accurate at both ends.
double neg_log(const Point& p) { return p.from_lo < 0.5 ? -std::log(p.from_lo) : -std::log1p(-p.to_hi); }

// x^power e^{-rate x} without intermediate overflow.
double power_exp(double x, double power, double rate) { return std::exp(power * std::log(x) - rate * x); }

IntegralForm on_unit(quad::Integrand f, quad::EndpointHint hint = {}) {
  return {std::move(f), {quad::FiniteOpen{0.0, 1.0}, hint}};
}
IntegralForm on_half_line(quad::Integrand f, quad::EndpointHint hint = {}, double lo = 0.0) {
  return {std::move(f), {quad::SemiInfinite{lo}, hint}};
}
IntegralForm on_line(quad::Integrand f, quad::EndpointHint hint = {}) {
  return {std::move(f), {quad::FullLine{}, hint}};
}

IdentityEntry integral(std::string id, std::string formula, ParameterDomain dom, IntegralFactory lhs,
                       ValueFactory rhs, std::string provenance) {
  return {std::move(id), Category::integral, std::move(formula), std::move(dom), std::move(lhs), std::move(rhs),
          std::move(provenance)};
}

IdentityEntry functional(std::string id, std::string formula, ParameterDomain dom, ValueFactory lhs,
                         ValueFactory rhs, std::string provenance) {
  return {std::move(id), Category::functional, std::move(formula), std::move(dom), std::move(lhs), std::move(rhs),
          std::move(provenance)};
}

// sqrt(pi) (2m)! / (2^{2m} m!) = Gamma(m + 1/2)
double half_integer_gamma(int m) {
  return kSqrtPi * sf::factorial(2 * m) / (std::ldexp(1.0, 2 * m) * sf::factorial(m));
}

// (1/mu) sum_k (-1)^k C(n,k) (ln mu)^k Gamma^(n-k)(1)
double leibniz_at_one(int n, double mu) { return leibniz_rhs(n, 1.0, mu); }

// (mu^rho - nu^rho)/rho Gamma(1 - rho), without cancellation at small rho.
double frullani_power(double mu, double nu, double rho) {
  const double diff = std::exp(rho * std::log(nu)) * std::expm1(rho * (std::log(mu) - std::log(nu)));
  return diff / rho * sf::gamma(1.0 - rho);
}

// psi^(n)(x) from its asymptotic expansion at x + N >= 20 and the
// recurrence psi^(n)(x) = psi^(n)(x+1) + (-1)^{n+1} n! x^{-n-1}.
double polygamma_by_shift(int n, double x) {
  const int shift = std::max(0, static_cast<int>(std::ceil(20.0 - x)));
  const double y = x + shift;
  double series = 0.0;
  for (std::size_t k = sf::kBernoulli.b2k.size(); k >= 1; --k) {
    const int kk = static_cast<int>(k);
    series += sf::kBernoulli.b2k[k - 1] * sf::factorial(2 * kk + n - 1) / sf::factorial(2 * kk) *
              std::pow(y, -(2 * kk + n));
  }
  const double asym = sf::factorial(n - 1) * std::pow(y, -n) + 0.5 * sf::factorial(n) * std::pow(y, -n - 1) + series;
  double direct = 0.0;
  for (int k = shift - 1; k >= 0; --k) direct += std::pow(x + k, -n - 1);
  const double sign = (n % 2 == 1) ? 1.0 : -1.0;
  return sign * (asym + sf::factorial(n) * direct);
}

// Gamma^(n)(a) / Gamma(a) as the complete Bell polynomial in psi, psi', ...
double gamma_derivative_bell(int n, double a) {
  const double p0 = sf::digamma(a);
  const double p1 = n >= 2 ? sf::polygamma(1, a) : 0.0;
  const double p2 = n >= 3 ? sf::polygamma(2, a) : 0.0;
  const double p3 = n >= 4 ? sf::polygamma(3, a) : 0.0;
  double bell = 0.0;
  switch (n) {
    case 1:
      bell = p0;
      break;
    case 2:
      bell = p0 * p0 + p1;
      break;
    case 3:
      bell = p0 * p0 * p0 + 3.0 * p0 * p1 + p2;
      break;
    case 4:
      bell = std::pow(p0, 4) + 6.0 * p0 * p0 * p1 + 4.0 * p0 * p2 + 3.0 * p1 * p1 + p3;
      break;
    default:
      throw std::logic_error("gamma_derivative_bell: order 1..4 only");
  }
  return sf::gamma(a) * bell;
}

void add_section_basic(std::vector<IdentityEntry>& out) {
  out.push_back(integral(
      "gamma-def", "int_0^inf x^(a-1) exp(-x) dx = Gamma(a)", domain({open("a", 0.05, 8.0)}),
      [](const P& p) {
        const double a = p.get("a");
        return on_half_line([a](const Point& q) { return power_exp(q.x, a - 1.0, 1.0); },
                            {ep::Algebraic{a - 1.0}, ep::Exponential{1.0}});
      },
      [](const P& p) { return sf::gamma(p.get("a")); }, "Euler's integral defining Gamma(a), a > 0"));

  out.push_back(integral(
      "normal", "int_0^inf exp(-t^2) dt = Gamma(1/2)/2", domain({}),
      [](const P&) {
        return on_half_line([](const Point& q) { return std::exp(-q.x * q.x); }, {ep::None{}, ep::PowerInExponent{2.0}});
      },
      [](const P&) { return 0.5 * sf::gamma(0.5); }, "normal integral; equivalent to Gamma(1/2) = sqrt(pi)"));

  out.push_back(integral(
      "3.371", "int_0^inf t^(m-1/2) exp(-mu t) dt = sqrt(pi) (2m)! / (2^(2m) m!) mu^(-m-1/2)",
      domain({whole("m", 0, 6), open("mu", 0.1, 10.0)}),
      [](const P& p) {
        const double m = p.get("m");
        const double mu = p.get("mu");
        return on_half_line([m, mu](const Point& q) { return power_exp(q.x, m - 0.5, mu); },
                            {ep::Algebraic{m - 0.5}, ep::Exponential{mu}});
      },
      [](const P& p) { return half_integer_gamma(p.integer("m")) * std::pow(p.get("mu"), -p.get("m") - 0.5); },
      "G&R 3.371; Gamma(a) mu^-a at a = m + 1/2 with the half-integer closed form"));

  out.push_back(integral(
      "3.371#unit-scale", "int_0^inf t^(m-1/2) exp(-t) dt = sqrt(pi) (2m)! / (2^(2m) m!)",
      domain({whole("m", 0, 15)}),
      [](const P& p) {
        const double m = p.get("m");
        return on_half_line([m](const Point& q) { return power_exp(q.x, m - 0.5, 1.0); },
                            {ep::Algebraic{m - 0.5}, ep::Exponential{1.0}});
      },
      [](const P& p) { return half_integer_gamma(p.integer("m")); },
      "G&R 3.371 at mu = 1: Gamma(m + 1/2) from Legendre's duplication formula"));

  out.push_back(integral(
      "3.381.4", "int_0^inf t^(a-1) exp(-mu t) dt = Gamma(a) mu^(-a)",
      domain({open("a", 0.05, 8.0), open("mu", 0.05, 20.0)}),
      [](const P& p) {
        const double a = p.get("a");
        const double mu = p.get("mu");
        return on_half_line([a, mu](const Point& q) { return power_exp(q.x, a - 1.0, mu); },
                            {ep::Algebraic{a - 1.0}, ep::Exponential{mu}});
      },
      [](const P& p) { return sf::gamma(p.get("a")) * std::pow(p.get("mu"), -p.get("a")); },
      "G&R 3.381.4; substitution x = mu t in the gamma integral"));

  out.push_back(integral(
      "3.351.3", "int_0^inf t^n exp(-mu t) dt = n! mu^(-n-1)", domain({whole("n", 1, 5), open("mu", 0.05, 20.0)}),
      [](const P& p) {
        const double n = p.get("n");
        const double mu = p.get("mu");
        return on_half_line([n, mu](const Point& q) { return power_exp(q.x, n, mu); },
                            {ep::Algebraic{n}, ep::Exponential{mu}});
      },
      [](const P& p) { return sf::factorial(p.integer("n")) * std::pow(p.get("mu"), -p.get("n") - 1.0); },
      "G&R 3.351.3; 3.381.4 at a = n + 1"));
}

void add_section_parameter(std::vector<IdentityEntry>& out) {
  const CrossConstraint rho_nonzero{"|rho| > 0.05", [](const P& p) { return std::fabs(p.get("rho")); }, 0.05, kInf};

  out.push_back(integral(
      "3.434.1", "int_0^inf (exp(-nu x) - exp(-mu x)) / x^(rho+1) dx = (mu^rho - nu^rho)/rho Gamma(1-rho)",
      domain({open("mu", 0.1, 10.0), open("nu", 0.1, 10.0), open("rho", -2.0, 1.0)}, {rho_nonzero}),
      [](const P& p) {
        const double mu = p.get("mu");
        const double nu = p.get("nu");
        const double rho = p.get("rho");
        const double slow = std::min(mu, nu);
        const double gap = std::fabs(mu - nu);
        const double sign = nu < mu ? 1.0 : -1.0;
        return on_half_line(
            [=](const Point& q) {
              return -sign * std::exp(-slow * q.x - (rho + 1.0) * std::log(q.x)) * std::expm1(-gap * q.x);
            },
            {ep::Algebraic{-rho}, ep::Exponential{slow}});
      },
      [](const P& p) { return frullani_power(p.get("mu"), p.get("nu"), p.get("rho")); },
      "G&R 3.434.1; difference of two scaled gamma integrals at a = -rho, rho < 1"));

  out.push_back(integral(
      "3.434.2", "int_0^inf (exp(-mu x) - exp(-nu x)) / x dx = ln(nu/mu)",
      domain({open("mu", 0.1, 10.0), open("nu", 0.1, 10.0)}),
      [](const P& p) {
        const double mu = p.get("mu");
        const double nu = p.get("nu");
        const double slow = std::min(mu, nu);
        const double gap = std::fabs(mu - nu);
        const double sign = mu < nu ? 1.0 : -1.0;
        return on_half_line(
            [=](const Point& q) { return -sign * std::exp(-slow * q.x - std::log(q.x)) * std::expm1(-gap * q.x); },
            {ep::Algebraic{0.0}, ep::Exponential{slow}});
      },
      [](const P& p) { return std::log(p.get("nu")) - std::log(p.get("mu")); },
      "G&R 3.434.2; Frullani integral, the rho -> 0 limit of 3.434.1"));

  out.push_back(IdentityEntry{
      "3.434.2#limit", Category::limit,
      "lim_{rho->0} (mu^rho - nu^rho)/rho Gamma(1-rho) = ln(mu/nu)  (3.434.2 with mu and nu interchanged)",
      domain({open("mu", 0.1, 10.0), open("nu", 0.1, 10.0)}),
      LimitFamily{[](const P& p, double rho) { return frullani_power(p.get("mu"), p.get("nu"), rho); },
                  {1e-2, 1e-3, 1e-4}},
      ValueFactory([](const P& p) { return std::log(p.get("mu")) - std::log(p.get("nu")); }),
      "G&R 3.434.1 -> 3.434.2 as rho -> 0; Richardson-extrapolated closed form"});

  out.push_back(integral(
      "3.478.1", "int_0^inf x^(nu-1) exp(-mu x^p) dx = mu^(-nu/p) Gamma(nu/p) / p",
      domain({open("nu", 0.2, 5.0), open("mu", 0.1, 10.0), open("p", 0.3, 4.0)}),
      [](const P& p) {
        const double nu = p.get("nu");
        const double mu = p.get("mu");
        const double pw = p.get("p");
        return on_half_line(
            [=](const Point& q) {
              const double lx = std::log(q.x);
              return std::exp((nu - 1.0) * lx - mu * std::exp(pw * lx));
            },
            {ep::Algebraic{nu - 1.0}, ep::PowerInExponent{pw}});
      },
      [](const P& p) {
        const double r = p.get("nu") / p.get("p");
        return std::pow(p.get("mu"), -r) * sf::gamma(r) / p.get("p");
      },
      "G&R 3.478.1; substitution t = mu x^p"));

  out.push_back(integral(
      "3.478.2", "int_0^inf x^(nu-1) (1 - exp(-mu x^p)) dx = -mu^(-nu/p) Gamma(nu/p) / |p|",
      domain({open("nu", -4.0, 4.0), open("mu", 0.1, 10.0), open("p", -4.0, 4.0)},
             {
                 {"-1 < nu/p < 0", [](const P& p) { return p.get("nu") / p.get("p"); }, -1.0, 0.0},
                 {"|p| > 0.5", [](const P& p) { return std::fabs(p.get("p")); }, 0.5, kInf},
                 {"|nu| > 0.3", [](const P& p) { return std::fabs(p.get("nu")); }, 0.3, kInf},
                 {"|nu + p| > 0.3", [](const P& p) { return std::fabs(p.get("nu") + p.get("p")); }, 0.3, kInf},
             },
             true),
      [](const P& p) {
        const double nu = p.get("nu");
        const double mu = p.get("mu");
        const double pw = p.get("p");
        const double left = pw > 0 ? nu + pw - 1.0 : nu - 1.0;
        const double right = pw > 0 ? nu - 1.0 : nu + pw - 1.0;
        return on_half_line(
            [=](const Point& q) {
              const double lx = std::log(q.x);
              return -std::exp((nu - 1.0) * lx) * std::expm1(-mu * std::exp(pw * lx));
            },
            {ep::Algebraic{left}, ep::Algebraic{right}});
      },
      [](const P& p) {
        const double r = p.get("nu") / p.get("p");
        return -std::pow(p.get("mu"), -r) * sf::gamma(r) / std::fabs(p.get("p"));
      },
      "G&R 3.478.2; integration by parts against 3.478.1; both signs of p, -1 < nu/p < 0"));

  out.push_back(integral(
      "MOLL:gamma-deriv-n", "int_0^inf x^(a-1) exp(-x) (ln x)^n dx = Gamma^(n)(a)",
      domain({whole("n", 1, 5), open("a", 0.2, 6.0)}),
      [](const P& p) {
        const double a = p.get("a");
        const int n = p.integer("n");
        return on_half_line([=](const Point& q) { return power_exp(q.x, a - 1.0, 1.0) * std::pow(std::log(q.x), n); },
                            {ep::Algebraic{a - 1.0}, ep::Exponential{1.0}});
      },
      [](const P& p) { return sf::gamma_derivative(p.integer("n"), p.get("a")); },
      "n-fold differentiation of the gamma integral in a"));

  out.push_back(integral(
      "MOLL:logn-at-1", "int_0^inf (ln x)^n exp(-x) dx = Gamma^(n)(1)", domain({whole("n", 1, 5)}),
      [](const P& p) {
        const int n = p.integer("n");
        return on_half_line([n](const Point& q) { return std::exp(-q.x) * std::pow(std::log(q.x), n); },
                            {ep::LogPower{static_cast<double>(n)}, ep::Exponential{1.0}});
      },
      [](const P& p) { return sf::gamma_derivative(p.integer("n"), 1.0); }, "Gamma^(n)(a) integral at a = 1"));

  out.push_back(integral(
      "MOLL:gammaprime1", "int_0^inf exp(-x) ln x dx = Gamma'(1) = -gamma", domain({}),
      [](const P&) {
        return on_half_line([](const Point& q) { return std::exp(-q.x) * std::log(q.x); },
                            {ep::LogPower{1.0}, ep::Exponential{1.0}});
      },
      [](const P&) { return -kEuler; }, "Gamma'(1) = -gamma, Euler's constant"));

  out.push_back(integral(
      "4.358.5",
      "int_0^inf x^(a-1) exp(-mu x) (ln x)^n dx = (d/da)^n [mu^(-a) Gamma(a)]"
      " = mu^(-a) sum_k (-1)^k C(n,k) (ln mu)^k Gamma^(n-k)(a)",
      domain({whole("n", 1, 5), open("a", 0.2, 6.0), open("mu", 0.1, 10.0)}),
      [](const P& p) {
        const double a = p.get("a");
        const double mu = p.get("mu");
        const int n = p.integer("n");
        return on_half_line(
            [=](const Point& q) { return power_exp(q.x, a - 1.0, mu) * std::pow(std::log(q.x), n); },
            {ep::Algebraic{a - 1.0}, ep::Exponential{mu}});
      },
      [](const P& p) { return sf::scaled_gamma_derivative(p.integer("n"), p.get("a"), p.get("mu")); },
      "G&R 4.358.5; differentiation of 3.381.4 in a, Leibniz rule"));

  struct AtOne {
    const char* id;
    int n;
    const char* formula;
  };
  for (const AtOne& spec : {AtOne{"4.331.1", 1, "int_0^inf exp(-mu x) ln x dx = -(gamma + ln mu)/mu"},
                            AtOne{"4.335.1", 2,
                                  "int_0^inf exp(-mu x) (ln x)^2 dx = (1/mu) sum_k (-1)^k C(2,k) (ln mu)^k "
                                  "Gamma^(2-k)(1) = ((gamma + ln mu)^2 + pi^2/6)/mu"},
                            AtOne{"4.335.3", 3,
                                  "int_0^inf exp(-mu x) (ln x)^3 dx = (1/mu) sum_k (-1)^k C(3,k) (ln mu)^k "
                                  "Gamma^(3-k)(1)"}}) {
    const int n = spec.n;
    out.push_back(integral(
        spec.id, spec.formula, domain({open("mu", 0.1, 10.0)}),
        [n](const P& p) {
          const double mu = p.get("mu");
          return on_half_line([=](const Point& q) { return std::exp(-mu * q.x) * std::pow(std::log(q.x), n); },
                              {ep::LogPower{static_cast<double>(n)}, ep::Exponential{mu}});
        },
        [n](const P& p) { return leibniz_at_one(n, p.get("mu")); },
        std::string("G&R ") + spec.id + "; 4.358.5 at a = 1, n = " + std::to_string(n)));
  }

  const auto log_moment = [](int n) {
    return [n](const P& p) {
      const double a = p.get("a");
      const double mu = p.get("mu");
      return on_half_line([=](const Point& q) { return power_exp(q.x, a - 1.0, mu) * std::pow(std::log(q.x), n); },
                          {ep::Algebraic{a - 1.0}, ep::Exponential{mu}});
    };
  };
  const auto prefactor = [](const P& p) { return sf::gamma(p.get("a")) * std::pow(p.get("mu"), -p.get("a")); };

  out.push_back(integral(
      "4.358.2", "int_0^inf x^(a-1) exp(-mu x) (ln x)^2 dx = Gamma(a)/mu^a (delta^2 + zeta(2,a)), delta = psi(a) - ln mu",
      domain({open("a", 0.2, 6.0), open("mu", 0.1, 10.0)}), log_moment(2),
      [prefactor](const P& p) {
        const double d = p.delta("mu");
        return prefactor(p) * (d * d + sf::hurwitz_zeta(2.0, p.get("a")));
      },
      "G&R 4.358.2; 4.358.5 at n = 2 with psi' = zeta(2,a)"));

  out.push_back(integral(
      "4.358.3",
      "int_0^inf x^(a-1) exp(-mu x) (ln x)^3 dx = Gamma(a)/mu^a (delta^3 + 3 zeta(2,a) delta - 2 zeta(3,a))",
      domain({open("a", 0.2, 6.0), open("mu", 0.1, 10.0)}), log_moment(3),
      [prefactor](const P& p) {
        const double d = p.delta("mu");
        const double a = p.get("a");
        return prefactor(p) * (d * d * d + 3.0 * sf::hurwitz_zeta(2.0, a) * d - 2.0 * sf::hurwitz_zeta(3.0, a));
      },
      "G&R 4.358.3; 4.358.5 at n = 3"));

  out.push_back(integral(
      "4.358.4",
      "int_0^inf x^(a-1) exp(-mu x) (ln x)^4 dx = Gamma(a)/mu^a (delta^4 + 6 zeta(2,a) delta^2 - 8 zeta(3,a) delta"
      " + 3 zeta(2,a)^2 + 6 zeta(4,a))",
      domain({open("a", 0.2, 6.0), open("mu", 0.1, 10.0)}), log_moment(4),
      [prefactor](const P& p) {
        const double d = p.delta("mu");
        const double a = p.get("a");
        const double z2 = sf::hurwitz_zeta(2.0, a);
        const double z3 = sf::hurwitz_zeta(3.0, a);
        const double z4 = sf::hurwitz_zeta(4.0, a);
        return prefactor(p) * (std::pow(d, 4) + 6.0 * z2 * d * d - 8.0 * z3 * d + 3.0 * z2 * z2 + 6.0 * z4);
      },
      "G&R 4.358.4; 4.358.5 at n = 4"));
}

void add_section_substitution(std::vector<IdentityEntry>& out) {
  out.push_back(integral(
      "3.326.1", "int_0^inf exp(-t^b) dt = Gamma(1/b)/b", domain({open("b", 0.3, 5.0)}),
      [](const P& p) {
        const double b = p.get("b");
        return on_half_line([b](const Point& q) { return std::exp(-std::exp(b * std::log(q.x))); },
                            {ep::None{}, ep::PowerInExponent{b}});
      },
      [](const P& p) { return sf::gamma(1.0 / p.get("b")) / p.get("b"); }, "G&R 3.326.1; x = t^b in the gamma integral"));

  const auto stretched_moment = [](const P& p) {
    const double m = p.get("m");
    const double s = p.get("s");
    const double b = p.get("b");
    return on_half_line(
        [=](const Point& q) {
          const double lx = std::log(q.x);
          return std::exp(m * lx - s * std::exp(b * lx));
        },
        {ep::Algebraic{m}, ep::PowerInExponent{b}});
  };
  const auto stretched_rhs = [](const P& p) {
    const double a = p.derived_a();
    return sf::gamma(a) / (std::pow(p.get("s"), a) * p.get("b"));
  };
  const auto stretched_domain = [] { return domain({open("m", -1.0, 6.0), open("s", 0.1, 10.0), open("b", 0.4, 4.0)}); };

  out.push_back(integral("3.326.2", "int_0^inf x^m exp(-s x^b) dx = Gamma(a)/(s^a b), a = (m+1)/b", stretched_domain(),
                         stretched_moment, stretched_rhs, "G&R 3.326.2; t = s^(1/b) x in 3.326.1's generalisation"));
  out.push_back(integral("3.462.9", "int_0^inf x^m exp(-s x^b) dx = Gamma(a)/(s^a b), a = (m+1)/b", stretched_domain(),
                         stretched_moment, stretched_rhs, "G&R 3.462.9; same formula as 3.326.2"));

  out.push_back(integral(
      "3.473", "int_0^inf exp(-x^n) x^((m+1/2) n - 1) dx = (2m-1)!! sqrt(pi) / (2^m n)",
      domain({whole("m", 0, 6), closed("n", 0.5, 4.0)}),
      [](const P& p) {
        const double m = p.get("m");
        const double n = p.get("n");
        const double c = (m + 0.5) * n - 1.0;
        return on_half_line(
            [=](const Point& q) {
              const double lx = std::log(q.x);
              return std::exp(c * lx - std::exp(n * lx));
            },
            {ep::Algebraic{c}, ep::PowerInExponent{n}});
      },
      [](const P& p) {
        const int m = p.integer("m");
        return sf::double_factorial(2 * m - 1) * kSqrtPi / (std::ldexp(1.0, m) * p.get("n"));
      },
      "G&R 3.473; 3.326.2 with s = 1, b = n, a = m + 1/2"));

  out.push_back(integral(
      "MOLL:gamma-7", "int_0^inf x^m exp(-s x^b) ln x dx = Gamma(a)/(b^2 s^a) (psi(a) - ln s), a = (m+1)/b",
      stretched_domain(),
      [](const P& p) {
        const double m = p.get("m");
        const double s = p.get("s");
        const double b = p.get("b");
        return on_half_line(
            [=](const Point& q) {
              const double lx = std::log(q.x);
              return std::exp(m * lx - s * std::exp(b * lx)) * lx;
            },
            {ep::Algebraic{m}, ep::PowerInExponent{b}});
      },
      [](const P& p) {
        const double a = p.derived_a();
        const double b = p.get("b");
        return sf::gamma(a) / (b * b * std::pow(p.get("s"), a)) * p.delta("s");
      },
      "derivative of 3.326.2 with respect to m"));

  out.push_back(integral(
      "MOLL:gamma-7a", "int_0^inf x^m exp(-s x) ln x dx = Gamma(m+1)/s^(m+1) (psi(m+1) - ln s)",
      domain({open("m", -1.0, 6.0), open("s", 0.1, 10.0)}),
      [](const P& p) {
        const double m = p.get("m");
        const double s = p.get("s");
        return on_half_line([=](const Point& q) { return power_exp(q.x, m, s) * std::log(q.x); },
                            {ep::Algebraic{m}, ep::Exponential{s}});
      },
      [](const P& p) {
        const double a = p.get("m") + 1.0;
        return sf::gamma(a) * std::pow(p.get("s"), -a) * (sf::digamma(a) - std::log(p.get("s")));
      },
      "MOLL:gamma-7 at b = 1"));

  out.push_back(integral(
      "4.333", "int_0^inf exp(-s x^2) ln x dx = -sqrt(pi)/(4 sqrt(s)) (gamma + ln 4s)", domain({open("s", 0.1, 10.0)}),
      [](const P& p) {
        const double s = p.get("s");
        return on_half_line([s](const Point& q) { return std::exp(-s * q.x * q.x) * std::log(q.x); },
                            {ep::LogPower{1.0}, ep::PowerInExponent{2.0}});
      },
      [](const P& p) {
        const double s = p.get("s");
        return -kSqrtPi / (4.0 * std::sqrt(s)) * (kEuler + std::log(4.0 * s));
      },
      "G&R 4.333; MOLL:gamma-7 at m = 0, b = 2 with psi(1/2) = -gamma - 2 ln 2"));

  out.push_back(integral(
      "4.355.1", "int_0^inf x^2 exp(-s x^2) ln x dx = (2 - ln 4s - gamma) sqrt(pi/s) / (8s)",
      domain({open("s", 0.1, 10.0)}),
      [](const P& p) {
        const double s = p.get("s");
        return on_half_line([s](const Point& q) { return q.x * q.x * std::exp(-s * q.x * q.x) * std::log(q.x); },
                            {ep::Algebraic{2.0}, ep::PowerInExponent{2.0}});
      },
      [](const P& p) {
        const double s = p.get("s");
        return (2.0 - std::log(4.0 * s) - kEuler) * std::sqrt(kPi / s) / (8.0 * s);
      },
      "G&R 4.355.1; MOLL:gamma-7 at m = b = 2 with psi(3/2) = 2 - 2 ln 2 - gamma"));

  out.push_back(integral(
      "4.355.3", "int_0^inf (mu x^2 - n) x^(2n-1) exp(-mu x^2) ln x dx = (n-1)! / (4 mu^n)",
      domain({whole("n", 1, 5), open("mu", 0.1, 10.0)}),
      [](const P& p) {
        const double n = p.get("n");
        const double mu = p.get("mu");
        return on_half_line(
            [=](const Point& q) {
              const double x2 = q.x * q.x;
              return (mu * x2 - n) * std::exp((2.0 * n - 1.0) * std::log(q.x) - mu * x2) * std::log(q.x);
            },
            {ep::Algebraic{2.0 * n - 1.0}, ep::PowerInExponent{2.0}});
      },
      [](const P& p) { return sf::factorial(p.integer("n") - 1) / (4.0 * std::pow(p.get("mu"), p.get("n"))); },
      "G&R 4.355.3; difference of two MOLL:gamma-7 instances, psi(n+1) - psi(n) = 1/n"));

  out.push_back(integral(
      "4.355.4", "int_0^inf (2 mu x^2 - 2n - 1) x^(2n) exp(-mu x^2) ln x dx = (2n-1)!! / (2 (2 mu)^n) sqrt(pi/mu)",
      domain({whole("n", 1, 5), open("mu", 0.1, 10.0)}),
      [](const P& p) {
        const double n = p.get("n");
        const double mu = p.get("mu");
        return on_half_line(
            [=](const Point& q) {
              const double x2 = q.x * q.x;
              return (2.0 * mu * x2 - 2.0 * n - 1.0) * std::exp(2.0 * n * std::log(q.x) - mu * x2) * std::log(q.x);
            },
            {ep::Algebraic{2.0 * n}, ep::PowerInExponent{2.0}});
      },
      [](const P& p) {
        const int n = p.integer("n");
        const double mu = p.get("mu");
        return sf::double_factorial(2 * n - 1) / (2.0 * std::pow(2.0 * mu, n)) * std::sqrt(kPi / mu);
      },
      "G&R 4.355.4; difference of two MOLL:gamma-7 instances at half-integer a"));

  out.push_back(integral(
      "4.369.1", "int_0^inf x^(a-1) exp(-mu x) (psi(a) - ln x) dx = Gamma(a) ln(mu) / mu^a",
      domain({open("a", 0.2, 6.0), open("mu", 0.1, 10.0)}),
      [](const P& p) {
        const double a = p.get("a");
        const double mu = p.get("mu");
        const double psi = sf::digamma(a);
        return on_half_line([=](const Point& q) { return power_exp(q.x, a - 1.0, mu) * (psi - std::log(q.x)); },
                            {ep::Algebraic{a - 1.0}, ep::Exponential{mu}});
      },
      [](const P& p) {
        const double a = p.get("a");
        const double mu = p.get("mu");
        return sf::gamma(a) * std::log(mu) * std::pow(mu, -a);
      },
      "G&R 4.369.1; psi(a) 3.381.4 minus 4.358.5 at n = 1"));

  out.push_back(integral(
      "4.369.2",
      "int_0^inf x^(n-1) exp(-mu x) ((ln x - psi(n)/2)^2 - psi'(n)/2) dx"
      " = (n-1)!/mu^n ((ln mu - psi(n)/2)^2 + psi'(n)/2)",
      domain({whole("n", 1, 5), open("mu", 0.1, 10.0)}),
      [](const P& p) {
        const double n = p.get("n");
        const double mu = p.get("mu");
        const double psi = sf::digamma(n);
        const double psi1 = sf::polygamma(1, n);
        return on_half_line(
            [=](const Point& q) {
              const double c = std::log(q.x) - 0.5 * psi;
              return power_exp(q.x, n - 1.0, mu) * (c * c - 0.5 * psi1);
            },
            {ep::Algebraic{n - 1.0}, ep::Exponential{mu}});
      },
      [](const P& p) {
        const int n = p.integer("n");
        const double mu = p.get("mu");
        const double c = std::log(mu) - 0.5 * sf::digamma(n);
        return sf::factorial(n - 1) * std::pow(mu, -n) * (c * c + 0.5 * sf::polygamma(1, n));
      },
      "G&R 4.369.2; combination of 4.358.5 at n = 0, 1, 2"));

  out.push_back(integral(
      "MOLL:exp-scale",
      "int_-inf^inf t exp(m t) exp(-s exp(b t)) dt = Gamma(m/b)/(b^2 s^(m/b)) (psi(m/b) - ln s)",
      domain({open("m", 0.0, 5.0), open("s", 0.1, 10.0), open("b", 0.4, 4.0)}),
      [](const P& p) {
        const double m = p.get("m");
        const double s = p.get("s");
        const double b = p.get("b");
        return on_line([=](const Point& q) { return q.x * std::exp(m * q.x - s * std::exp(b * q.x)); },
                       {ep::Exponential{m}, ep::DoubleExponential{}});
      },
      [](const P& p) {
        const double a = p.get("m") / p.get("b");
        const double b = p.get("b");
        const double s = p.get("s");
        return sf::gamma(a) / (b * b * std::pow(s, a)) * (sf::digamma(a) - std::log(s));
      },
      "MOLL:gamma-7 in the exponential scale x = e^t"));

  out.push_back(integral(
      "3.481.1", "int_-inf^inf t e^t exp(-s e^t) dt = -(gamma + ln s)/s", domain({open("s", 0.1, 10.0)}),
      [](const P& p) {
        const double s = p.get("s");
        return on_line([s](const Point& q) { return q.x * std::exp(q.x - s * std::exp(q.x)); },
                       {ep::Exponential{1.0}, ep::DoubleExponential{}});
      },
      [](const P& p) { return -(kEuler + std::log(p.get("s"))) / p.get("s"); },
      "G&R 3.481.1; MOLL:exp-scale at b = m = 1"));

  out.push_back(integral(
      "3.481.2", "int_-inf^inf t e^t exp(-s e^(2t)) dt = -sqrt(pi) (gamma + ln 4s) / (4 sqrt(s))",
      domain({open("s", 0.1, 10.0)}),
      [](const P& p) {
        const double s = p.get("s");
        return on_line([s](const Point& q) { return q.x * std::exp(q.x - s * std::exp(2.0 * q.x)); },
                       {ep::Exponential{1.0}, ep::DoubleExponential{}});
      },
      [](const P& p) {
        const double s = p.get("s");
        return -kSqrtPi * (kEuler + std::log(4.0 * s)) / (4.0 * std::sqrt(s));
      },
      "G&R 3.481.2; MOLL:exp-scale at b = 2, m = 1 with psi(1/2) = -(gamma + 2 ln 2)"));

  out.push_back(integral(
      "3.328", "int_-inf^inf exp(-e^x) e^(a x) dx = Gamma(a)", domain({open("a", 0.05, 8.0)}),
      [](const P& p) {
        const double a = p.get("a");
        return on_line([a](const Point& q) { return std::exp(a * q.x - std::exp(q.x)); },
                       {ep::Exponential{a}, ep::DoubleExponential{}});
      },
      [](const P& p) { return sf::gamma(p.get("a")); }, "G&R 3.328; x = e^t in the gamma integral"));

  out.push_back(integral(
      "3.471.3",
      "int_0^a x^(-mu-1) (a-x)^(mu-1) exp(-beta/x) dx = beta^(-mu) a^(mu-1) Gamma(mu) exp(-beta/a)"
      "  [exponent mu is the symbol mu_exp]",
      domain({open("mu_exp", 0.0, 4.0), open("a", 0.1, 5.0), open("beta", 0.1, 5.0)}),
      [](const P& p) {
        const double mu = p.get("mu_exp");
        const double a = p.get("a");
        const double beta = p.get("beta");
        return IntegralForm{
            [=](const Point& q) {
              return std::exp(-beta / q.x - (mu + 1.0) * std::log(q.x) + (mu - 1.0) * std::log(q.to_hi));
            },
            {quad::FiniteOpen{0.0, a}, {ep::None{}, ep::Algebraic{mu - 1.0}}}};
      },
      [](const P& p) {
        const double mu = p.get("mu_exp");
        const double a = p.get("a");
        const double beta = p.get("beta");
        return std::pow(beta, -mu) * std::pow(a, mu - 1.0) * sf::gamma(mu) * std::exp(-beta / a);
      },
      "G&R 3.471.3; t = beta/x then a shift by beta/a"));

  out.push_back(integral(
      "3.324.2", "int_-inf^inf exp(-(x - b/x)^(2n)) dx = Gamma(1/(2n))/n, b > 0",
      domain({whole("n", 1, 5), open("b", 0.1, 5.0)}),
      [](const P& p) {
        const double b = p.get("b");
        const double twice_n = 2.0 * p.get("n");
        return on_line([=](const Point& q) { return std::exp(-std::pow(q.x - b / q.x, twice_n)); });
      },
      [](const P& p) {
        const double n = p.get("n");
        return sf::gamma(1.0 / (2.0 * n)) / n;
      },
      "G&R 3.324.2; u = x - b/x is increasing only for b > 0 (restriction added)"));

  out.push_back(IdentityEntry{
      "3.324.2#bneg", Category::transformation,
      "2 int_0^inf exp(-(x - b/x)^(2n)) dx = 2 int_0^inf exp(-(z^2 - 4b)^n) dz, b < 0 (no closed form)",
      domain({whole("n", 1, 2), open("b", -2.5, -0.1)}),
      IntegralFactory([](const P& p) {
        const double b = p.get("b");
        const double twice_n = 2.0 * p.get("n");
        return on_half_line([=](const Point& q) { return 2.0 * std::exp(-std::pow(q.x - b / q.x, twice_n)); });
      }),
      IntegralFactory([](const P& p) {
        const double b = p.get("b");
        const double n = p.get("n");
        return on_half_line([=](const Point& q) { return 2.0 * std::exp(-std::pow(q.x * q.x - 4.0 * b, n)); },
                            {ep::None{}, ep::PowerInExponent{2.0 * n}});
      }),
      "G&R 3.324.2 for b < 0: two-branch inverse of u = x - b/x, then z = sqrt(u^2 + 4b)"});
}

void add_section_log_scale(std::vector<IdentityEntry>& out) {
  out.push_back(integral(
      "4.215.1", "int_0^1 (-ln x)^(a-1) dx = Gamma(a)", domain({open("a", 0.05, 8.0)}),
      [](const P& p) {
        const double a = p.get("a");
        return on_unit([a](const Point& q) { return std::pow(neg_log(q), a - 1.0); },
                       {ep::LogPower{a - 1.0}, ep::Algebraic{a - 1.0}});
      },
      [](const P& p) { return sf::gamma(p.get("a")); }, "G&R 4.215.1; Euler's logarithmic form of Gamma(a)"));

  out.push_back(integral(
      "4.215.2", "int_0^1 dx / (-ln x)^mu = pi / (Gamma(mu) sin(mu pi)) = Gamma(1 - mu)", domain({open("mu", 0.0, 1.0)}),
      [](const P& p) {
        const double mu = p.get("mu");
        return on_unit([mu](const Point& q) { return std::pow(neg_log(q), -mu); },
                       {ep::LogPower{-mu}, ep::Algebraic{-mu}});
      },
      [](const P& p) {
        const double mu = p.get("mu");
        return kPi / (sf::gamma(mu) * sf::sin_pi(mu));
      },
      "G&R 4.215.2; Gamma(1 - mu) rewritten with the reflection formula"));

  out.push_back(integral(
      "4.215.3", "int_0^1 sqrt(-ln x) dx = sqrt(pi)/2", domain({}),
      [](const P&) {
        return on_unit([](const Point& q) { return std::sqrt(neg_log(q)); }, {ep::LogPower{0.5}, ep::Algebraic{0.5}});
      },
      [](const P&) { return 0.5 * kSqrtPi; }, "G&R 4.215.3; 4.215.1 at a = 3/2"));

  out.push_back(integral(
      "4.215.4", "int_0^1 dx / sqrt(-ln x) = sqrt(pi)", domain({}),
      [](const P&) {
        return on_unit([](const Point& q) { return 1.0 / std::sqrt(neg_log(q)); },
                       {ep::LogPower{-0.5}, ep::Algebraic{-0.5}});
      },
      [](const P&) { return kSqrtPi; }, "G&R 4.215.4; 4.215.1 at a = 1/2"));

  out.push_back(integral(
      "4.269.3", "int_0^1 x^(p-1) sqrt(-ln x) dx = sqrt(pi/p^3)/2", domain({open("p", 0.1, 10.0)}),
      [](const P& p) {
        const double pw = p.get("p");
        return on_unit(
            [pw](const Point& q) {
              const double l = neg_log(q);
              return std::exp(-(pw - 1.0) * l) * std::sqrt(l);
            },
            {ep::Algebraic{pw - 1.0}, ep::Algebraic{0.5}});
      },
      [](const P& p) { return 0.5 * std::sqrt(kPi / std::pow(p.get("p"), 3)); },
      "G&R 4.269.3; x = e^-t reduces it to 3.381.4 at a = 3/2"));

  out.push_back(integral(
      "4.269.4", "int_0^1 x^(p-1) / sqrt(-ln x) dx = sqrt(pi/p)", domain({open("p", 0.1, 10.0)}),
      [](const P& p) {
        const double pw = p.get("p");
        return on_unit(
            [pw](const Point& q) {
              const double l = neg_log(q);
              return std::exp(-(pw - 1.0) * l) / std::sqrt(l);
            },
            {ep::Algebraic{pw - 1.0}, ep::Algebraic{-0.5}});
      },
      [](const P& p) { return std::sqrt(kPi / p.get("p")); }, "G&R 4.269.4; reduces to 3.381.4 at a = 1/2"));

  out.push_back(integral(
      "4.272.5", "int_1^inf (ln x)^p / x^2 dx = Gamma(1+p)", domain({open("p", -1.0, 6.0)}),
      [](const P& p) {
        const double pw = p.get("p");
        return on_half_line(
            [pw](const Point& q) {
              const double l = std::log1p(q.from_lo);
              return std::exp(pw * std::log(l) - 2.0 * l);
            },
            {ep::Algebraic{pw}, ep::Algebraic{-2.0}}, 1.0);
      },
      [](const P& p) { return sf::gamma(1.0 + p.get("p")); }, "G&R 4.272.5; x = e^t in the gamma integral"));

  out.push_back(integral(
      "4.272.6", "int_0^1 (-ln x)^(mu-1) x^(nu-1) dx = Gamma(mu)/nu^mu",
      domain({open("mu", 0.05, 8.0), open("nu", 0.1, 10.0)}),
      [](const P& p) {
        const double mu = p.get("mu");
        const double nu = p.get("nu");
        return on_unit(
            [=](const Point& q) {
              const double l = neg_log(q);
              return std::exp((mu - 1.0) * std::log(l) - (nu - 1.0) * l);
            },
            {ep::Algebraic{nu - 1.0}, ep::Algebraic{mu - 1.0}});
      },
      [](const P& p) { return sf::gamma(p.get("mu")) * std::pow(p.get("nu"), -p.get("mu")); },
      "G&R 4.272.6; x = e^-t reduces it to 3.381.4"));

  out.push_back(integral(
      "4.272.7", "int_0^1 (-ln x)^(n-1/2) x^(nu-1) dx = (2n-1)!! / (2 nu)^n sqrt(pi/nu)",
      domain({whole("n", 1, 5), open("nu", 0.1, 10.0)}),
      [](const P& p) {
        const double n = p.get("n");
        const double nu = p.get("nu");
        return on_unit(
            [=](const Point& q) {
              const double l = neg_log(q);
              return std::exp((n - 0.5) * std::log(l) - (nu - 1.0) * l);
            },
            {ep::Algebraic{nu - 1.0}, ep::Algebraic{n - 0.5}});
      },
      [](const P& p) {
        const int n = p.integer("n");
        const double nu = p.get("nu");
        return sf::double_factorial(2 * n - 1) / std::pow(2.0 * nu, n) * std::sqrt(kPi / nu);
      },
      "G&R 4.272.7; 4.272.6 at mu = n + 1/2"));

  out.push_back(integral(
      "4.229.4", "int_0^1 ln(-ln x) (-ln x)^(a-1) dx = Gamma'(a) = psi(a) Gamma(a)", domain({open("a", 0.05, 8.0)}),
      [](const P& p) {
        const double a = p.get("a");
        return on_unit(
            [a](const Point& q) {
              const double ll = std::log(neg_log(q));
              return ll * std::exp((a - 1.0) * ll);
            },
            {ep::LogPower{a}, ep::Algebraic{a - 1.0}});
      },
      [](const P& p) { return sf::digamma(p.get("a")) * sf::gamma(p.get("a")); },
      "G&R 4.229.4; derivative of 4.215.1 in a"));

  out.push_back(integral(
      "4.229.1", "int_0^1 ln(-ln x) dx = -gamma", domain({}),
      [](const P&) {
        return on_unit([](const Point& q) { return std::log(neg_log(q)); }, {ep::LogPower{1.0}, ep::LogPower{1.0}});
      },
      [](const P&) { return -kEuler; }, "G&R 4.229.1; 4.229.4 at a = 1"));

  out.push_back(integral(
      "4.229.3", "int_0^1 ln(-ln x) / sqrt(-ln x) dx = -(gamma + 2 ln 2) sqrt(pi)", domain({}),
      [](const P&) {
        return on_unit(
            [](const Point& q) {
              const double l = neg_log(q);
              return std::log(l) / std::sqrt(l);
            },
            {ep::LogPower{1.0}, ep::Algebraic{-0.5}});
      },
      [](const P&) { return -(kEuler + 2.0 * sf::kConstants.ln2) * kSqrtPi; },
      "G&R 4.229.3; 4.229.4 at a = 1/2"));

  out.push_back(integral(
      "4.325.11", "int_0^1 ln(-ln x) x^(mu-1) / sqrt(-ln x) dx = -(gamma + ln 4 mu) sqrt(pi/mu)",
      domain({open("mu", 0.1, 10.0)}),
      [](const P& p) {
        const double mu = p.get("mu");
        return on_unit(
            [mu](const Point& q) {
              const double l = neg_log(q);
              return std::log(l) * std::exp(-(mu - 1.0) * l) / std::sqrt(l);
            },
            {ep::Algebraic{mu - 1.0}, ep::Algebraic{-0.5}});
      },
      [](const P& p) {
        const double mu = p.get("mu");
        return -(kEuler + std::log(4.0 * mu)) * std::sqrt(kPi / mu);
      },
      "G&R 4.325.11; 4.325.12 at mu = 1/2"));

  out.push_back(integral(
      "4.325.12", "int_0^1 ln(-ln x) (-ln x)^(mu-1) x^(nu-1) dx = Gamma(mu)/nu^mu (psi(mu) - ln nu)",
      domain({open("mu", 0.05, 8.0), open("nu", 0.1, 10.0)}),
      [](const P& p) {
        const double mu = p.get("mu");
        const double nu = p.get("nu");
        return on_unit(
            [=](const Point& q) {
              const double l = neg_log(q);
              const double ll = std::log(l);
              return ll * std::exp((mu - 1.0) * ll - (nu - 1.0) * l);
            },
            {ep::Algebraic{nu - 1.0}, ep::Algebraic{mu - 1.0}});
      },
      [](const P& p) {
        const double mu = p.get("mu");
        const double nu = p.get("nu");
        return sf::gamma(mu) * std::pow(nu, -mu) * (sf::digamma(mu) - std::log(nu));
      },
      "G&R 4.325.12; derivative of 4.272.6 in mu"));

  out.push_back(integral(
      "4.325.8", "int_0^1 ln(-ln x) x^(nu-1) dx = -(gamma + ln nu)/nu", domain({open("nu", 0.1, 10.0)}),
      [](const P& p) {
        const double nu = p.get("nu");
        return on_unit(
            [nu](const Point& q) {
              const double l = neg_log(q);
              return std::log(l) * std::exp(-(nu - 1.0) * l);
            },
            {ep::Algebraic{nu - 1.0}, ep::LogPower{1.0}});
      },
      [](const P& p) { return -(kEuler + std::log(p.get("nu"))) / p.get("nu"); }, "G&R 4.325.8; 4.325.12 at mu = 1"));
}

void add_section_fake_parameters(std::vector<IdentityEntry>& out) {
  out.push_back(integral(
      "3.461.2", "int_0^inf x^(2n) exp(-p x^2) dx = (2n-1)!! / (2 (2p)^n) sqrt(pi/p)",
      domain({whole("n", 0, 5), open("p", 0.1, 10.0)}),
      [](const P& p) {
        const double n = p.get("n");
        const double pw = p.get("p");
        return on_half_line([=](const Point& q) { return std::exp(2.0 * n * std::log(q.x) - pw * q.x * q.x); },
                            {ep::Algebraic{2.0 * n}, ep::PowerInExponent{2.0}});
      },
      [](const P& p) {
        const int n = p.integer("n");
        const double pw = p.get("p");
        return sf::double_factorial(2 * n - 1) / (2.0 * std::pow(2.0 * pw, n)) * std::sqrt(kPi / pw);
      },
      "G&R 3.461.2; t = p x^2 removes p and leaves Gamma(n + 1/2)"));

  out.push_back(integral(
      "3.461.3", "int_0^inf x^(2n+1) exp(-p x^2) dx = n! / (2 p^(n+1))", domain({whole("n", 0, 5), open("p", 0.1, 10.0)}),
      [](const P& p) {
        const double n = p.get("n");
        const double pw = p.get("p");
        return on_half_line([=](const Point& q) { return std::exp((2.0 * n + 1.0) * std::log(q.x) - pw * q.x * q.x); },
                            {ep::Algebraic{2.0 * n + 1.0}, ep::PowerInExponent{2.0}});
      },
      [](const P& p) { return sf::factorial(p.integer("n")) / (2.0 * std::pow(p.get("p"), p.get("n") + 1.0)); },
      "G&R 3.461.3; t = p x^2 removes p and leaves Gamma(n + 1)"));

  out.push_back(integral(
      "MOLL:gamma8", "int_0^inf t^(n-1/2) exp(-t) dt = (2n-1)!! sqrt(pi) / 2^n", domain({whole("n", 0, 6)}),
      [](const P& p) {
        const double n = p.get("n");
        return on_half_line([n](const Point& q) { return power_exp(q.x, n - 0.5, 1.0); },
                            {ep::Algebraic{n - 0.5}, ep::Exponential{1.0}});
      },
      [](const P& p) {
        const int n = p.integer("n");
        return sf::double_factorial(2 * n - 1) * kSqrtPi / std::ldexp(1.0, n);
      },
      "3.461.2 with the fake parameter p scaled out"));

  out.push_back(integral(
      "MOLL:gamma8-int", "int_0^inf t^n exp(-t) dt = n!", domain({whole("n", 0, 6)}),
      [](const P& p) {
        const double n = p.get("n");
        return on_half_line([n](const Point& q) { return power_exp(q.x, n, 1.0); },
                            {ep::Algebraic{n}, ep::Exponential{1.0}});
      },
      [](const P& p) { return sf::factorial(p.integer("n")); }, "3.461.3 with the fake parameter p scaled out"));

  out.push_back(integral(
      "3.382.2", "int_b^inf (s-b)^(a-1) exp(-mu s) ds = mu^(-a) exp(-mu b) Gamma(a)",
      domain({open("a", 0.2, 6.0), open("mu", 0.1, 10.0), open("b", -3.0, 3.0)}, {}, true),
      [](const P& p) {
        const double a = p.get("a");
        const double mu = p.get("mu");
        const double b = p.get("b");
        return on_half_line([=](const Point& q) { return std::exp((a - 1.0) * std::log(q.from_lo) - mu * q.x); },
                            {ep::Algebraic{a - 1.0}, ep::Exponential{mu}}, b);
      },
      [](const P& p) {
        const double a = p.get("a");
        const double mu = p.get("mu");
        return std::pow(mu, -a) * std::exp(-mu * p.get("b")) * sf::gamma(a);
      },
      "G&R 3.382.2; shift s = t + b in 3.381.4; any real b"));
}

void add_functional(std::vector<IdentityEntry>& out) {
  out.push_back(functional(
      "FUNC:recurrence", "Gamma(a+1) = a Gamma(a)", domain({open("a", 0.01, 50.0)}),
      [](const P& p) { return sf::gamma(p.get("a") + 1.0); },
      [](const P& p) { return p.get("a") * sf::gamma(p.get("a")); },
      "functional equation; mu-derivative of 3.381.4 at mu = 1"));

  out.push_back(functional(
      "FUNC:duplication", "Gamma(x + 1/2) = Gamma(2x) sqrt(pi) / (Gamma(x) 2^(2x-1))", domain({closed("x", 0.1, 30.0)}),
      [](const P& p) { return sf::gamma(p.get("x") + 0.5); },
      [](const P& p) {
        const double x = p.get("x");
        return sf::gamma(2.0 * x) * kSqrtPi / (sf::gamma(x) * std::exp2(2.0 * x - 1.0));
      },
      "Legendre's duplication formula"));

  out.push_back(functional(
      "FUNC:reflection", "Gamma(mu) Gamma(1-mu) sin(pi mu) / pi = 1", domain({open("mu", 0.0, 1.0)}),
      [](const P& p) {
        const double mu = p.get("mu");
        return sf::gamma(mu) * sf::gamma(1.0 - mu) * std::sin(kPi * mu) / kPi;
      },
      [](const P&) { return 1.0; }, "Euler's reflection formula Gamma(mu) Gamma(1-mu) = pi / sin(pi mu)"));

  out.push_back(functional(
      "FUNC:gammahalf", "Gamma(m + 1/2) = sqrt(pi) (2m)! / (2^(2m) m!)", domain({whole("m", 0, 15)}),
      [](const P& p) { return sf::gamma(p.get("m") + 0.5); }, [](const P& p) { return half_integer_gamma(p.integer("m")); },
      "duplication formula at integer x = m; also G&R 3.371"));

  out.push_back(functional(
      "FUNC:derpsi", "psi^(n)(x) = (-1)^(n+1) n! zeta(n+1, x)", domain({whole("n", 1, 6), open("x", 0.1, 20.0)}),
      [](const P& p) { return sf::polygamma(p.integer("n"), p.get("x")); },
      [](const P& p) { return polygamma_by_shift(p.integer("n"), p.get("x")); },
      "polygamma through Hurwitz zeta, checked against the asymptotic series with upward recurrence"));

  out.push_back(functional(
      "FUNC:gamma-deriv-recurrence",
      "Gamma^(n+1)(a) = sum_k C(n,k) Gamma^(k)(a) psi^(n-k)(a)  vs  Gamma(a) B_n(psi, psi', psi'', ...)",
      domain({whole("n", 1, 4), open("a", 0.2, 10.0)}),
      [](const P& p) { return sf::gamma_derivative(p.integer("n"), p.get("a")); },
      [](const P& p) { return gamma_derivative_bell(p.integer("n"), p.get("a")); },
      "differentiating Gamma' = psi Gamma; compared with the complete Bell polynomial form"));
}

}  // namespace

std::vector<IdentityEntry> build_entries() {
  std::vector<IdentityEntry> out;
  add_section_basic(out);
  add_section_parameter(out);
  add_section_substitution(out);
  add_section_log_scale(out);
  add_section_fake_parameters(out);
  add_functional(out);
  return out;
}

}  // namespace grv::catalog::detail
