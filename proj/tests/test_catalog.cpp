#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "grv/catalog.hpp"
#include "grv/errors.hpp"
#include "grv/specfun.hpp"

namespace cat = grv::catalog;
using grv::ParameterAssignment;

namespace {

constexpr double kEulerRef = 0.5772156649015328606;

double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

std::vector<double> probe_points(const grv::quad::IntervalKind& kind) {
  if (const auto* f = std::get_if<grv::quad::FiniteOpen>(&kind)) {
    const double w = f->hi - f->lo;
    return {f->lo + 0.5 * w, f->lo + 1e-6 * w, f->hi - 1e-6 * w};
  }
  if (const auto* s = std::get_if<grv::quad::SemiInfinite>(&kind)) return {s->lo + 1.0, s->lo + 1e-6, s->lo + 30.0};
  return {-1.0, 0.5, 1.0};
}

grv::quad::Point as_point(const grv::quad::IntervalKind& kind, double x) {
  if (const auto* f = std::get_if<grv::quad::FiniteOpen>(&kind)) return {x, x - f->lo, f->hi - x};
  if (const auto* s = std::get_if<grv::quad::SemiInfinite>(&kind)) return {x, x - s->lo, INFINITY};
  return {x, INFINITY, INFINITY};
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("size, order and uniqueness") {
    const auto& all = cat::entries();
    CHECK(all.size() >= 56);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].id < all[i].id);
  }

  TEST_CASE("required ids are present") {
    const char* required[] = {
        "gamma-def", "normal", "3.371", "3.381.4", "3.351.3", "3.434.1", "3.434.2", "3.478.1", "3.478.2",
        "MOLL:gamma-deriv-n", "MOLL:logn-at-1", "MOLL:gammaprime1", "4.358.5", "4.331.1", "4.335.1", "4.335.3",
        "4.358.2", "4.358.3", "4.358.4", "3.326.1", "3.326.2", "3.473", "MOLL:gamma-7", "MOLL:gamma-7a", "4.333",
        "4.355.1", "4.355.3", "4.355.4", "4.369.1", "4.369.2", "MOLL:exp-scale", "3.481.1", "3.481.2", "3.328",
        "3.471.3", "3.324.2", "3.324.2#bneg", "4.215.1", "4.215.2", "4.215.3", "4.215.4", "4.269.3", "4.269.4",
        "4.272.5", "4.272.6", "4.272.7", "4.229.4", "4.229.1", "4.229.3", "4.325.11", "4.325.12", "4.325.8",
        "3.461.2", "3.461.3", "MOLL:gamma8", "3.382.2", "FUNC:recurrence", "FUNC:duplication", "FUNC:reflection",
        "FUNC:gammahalf", "FUNC:derpsi", "FUNC:gamma-deriv-recurrence"};
    for (const char* id : required) {
      CAPTURE(id);
      CHECK_NOTHROW(cat::entry(id));
    }
    int forms_of_3371 = 0;
    for (const auto& e : cat::entries()) forms_of_3371 += e.id.rfind("3.371", 0) == 0;
    CHECK(forms_of_3371 == 2);
  }

  TEST_CASE("representative closed forms") {
    const auto& e = cat::entry("3.381.4");
    CHECK(rel(e.closed_form({{"a", 2.5}, {"mu", 1.7}}), std::tgamma(2.5) * std::pow(1.7, -2.5)) < 1e-14);
    CHECK(cat::entry("4.229.1").closed_form({}) == -grv::specfun::kConstants.euler_gamma);
    CHECK(std::fabs(cat::entry("4.229.1").closed_form({}) + kEulerRef) < 1e-16);
    CHECK(cat::entry("3.434.2").closed_form({{"mu", 1.0}, {"nu", std::exp(2.0)}}) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(cat::entry("3.324.2#bneg").category == cat::Category::transformation);
    CHECK(std::holds_alternative<cat::IntegralFactory>(cat::entry("3.324.2#bneg").rhs));
    CHECK(cat::entry("FUNC:reflection").category == cat::Category::functional);
    CHECK(cat::entry("FUNC:reflection").closed_form({{"mu", 0.3}}) == 1.0);
    CHECK(cat::entry("3.434.2#limit").category == cat::Category::limit);
  }

  TEST_CASE("3.328 integrates exp(-e^x) e^(ax) over the line") {
    const auto form = cat::entry("3.328").lhs_integral({{"a", 2.0}});
    CHECK(std::holds_alternative<grv::quad::FullLine>(form.spec.interval));
    const double x = 0.7;
    CHECK(rel(form.integrand({x, INFINITY, INFINITY}), std::exp(-std::exp(x)) * std::exp(2.0 * x)) < 1e-14);
  }

  TEST_CASE("4.215.2 shows the reflection form and its domain") {
    const auto& e = cat::entry("4.215.2");
    CHECK(e.formula.find("pi / (Gamma(mu) sin(mu pi))") != std::string::npos);
    CHECK(e.domain.describe() == "0 < mu < 1");
  }

  TEST_CASE("unknown id") {
    CHECK_THROWS_AS(cat::entry("no.such"), grv::UnknownIdError);
    try {
      cat::entry("3.381.5");
      FAIL("expected UnknownIdError");
    } catch (const grv::UnknownIdError& e) {
      CHECK(e.suggestions().find("3.381.4") != std::string::npos);
      CHECK(std::string(e.what()).find("did you mean") != std::string::npos);
    }
    const auto near = cat::near_matches("4.215");
    CHECK(near.size() == 3);
    for (const auto& id : near) CHECK(id.rfind("4.215.", 0) == 0);
  }

  TEST_CASE("closure: both sides finite on seeded samples") {
    for (const auto& e : cat::entries()) {
      for (const auto& p : grv::sample_parameters(e.domain, 17, 10)) {
        CAPTURE(e.id);
        for (const cat::Side* side : {&e.lhs, &e.rhs}) {
          if (const auto* value = std::get_if<cat::ValueFactory>(side)) {
            CHECK(std::isfinite((*value)(p)));
          } else if (const auto* integral = std::get_if<cat::IntegralFactory>(side)) {
            const auto form = (*integral)(p);
            for (double x : probe_points(form.spec.interval)) {
              CAPTURE(x);
              CHECK(std::isfinite(form.integrand(as_point(form.spec.interval, x))));
            }
          } else {
            const auto& limit = std::get<cat::LimitFamily>(*side);
            for (double t : limit.approach) CHECK(std::isfinite(limit.family(p, t)));
          }
        }
      }
    }
  }

  TEST_CASE("3.434.1 at rho = +-1e-4 brackets the Frullani value") {
    const auto& general = cat::entry("3.434.1");
    const auto& frullani = cat::entry("3.434.2");
    for (const auto& p : grv::sample_parameters(frullani.domain, 4, 10)) {
      const double mu = p.get("mu");
      const double nu = p.get("nu");
      // The rho -> 0 limit of 3.434.1 is 3.434.2 with mu and nu interchanged.
      const double target = frullani.closed_form({{"mu", nu}, {"nu", mu}});
      const double up = general.closed_form({{"mu", mu}, {"nu", nu}, {"rho", 1e-4}});
      const double down = general.closed_form({{"mu", mu}, {"nu", nu}, {"rho", -1e-4}});
      CHECK(std::min(up, down) <= target);
      CHECK(std::max(up, down) >= target);
      const double coarse = general.closed_form({{"mu", mu}, {"nu", nu}, {"rho", 1e-3}});
      // Linear convergence: ten times closer gives about ten times smaller error.
      CHECK(std::fabs(coarse - target) / std::fabs(up - target) == doctest::Approx(10.0).epsilon(0.05));
    }
  }

  TEST_CASE("special-case consistency with MOLL:gamma-7") {
    const auto& g7 = cat::entry("MOLL:gamma-7");
    for (const auto& p : grv::sample_parameters(cat::entry("4.333").domain, 8, 10)) {
      const double s = p.get("s");
      CHECK(rel(cat::entry("4.333").closed_form(p), g7.closed_form({{"m", 0.0}, {"b", 2.0}, {"s", s}})) < 1e-13);
      CHECK(rel(cat::entry("4.355.1").closed_form(p), g7.closed_form({{"m", 2.0}, {"b", 2.0}, {"s", s}})) < 1e-13);
    }
  }

  TEST_CASE("Leibniz expansion equals the recurrence-built 4.358.5") {
    const auto& e = cat::entry("4.358.5");
    for (const auto& p : grv::sample_parameters(e.domain, 21, 40)) {
      const double expanded = cat::leibniz_rhs(p.integer("n"), p.get("a"), p.get("mu"));
      CHECK(std::fabs(e.closed_form(p) - expanded) <= 1e-10 * std::max(1.0, std::fabs(expanded)));
    }
  }

  TEST_CASE("exponential-scale form reduces to 3.481.1") {
    for (double s : {0.2, 1.0, 3.7, 9.0}) {
      const double a = cat::entry("3.481.1").closed_form({{"s", s}});
      const double b = cat::entry("MOLL:exp-scale").closed_form({{"m", 1.0}, {"b", 1.0}, {"s", s}});
      CHECK(std::fabs(a - b) <= 1e-12 * std::fabs(a));
    }
  }

  TEST_CASE("implementer-derived domains are flagged") {
    CHECK(cat::entry("3.478.2").domain.implementer_derived);
    CHECK(cat::entry("3.382.2").domain.implementer_derived);
    CHECK_FALSE(cat::entry("3.381.4").domain.implementer_derived);
  }

  TEST_CASE("3.324.2 requires b > 0") {
    CHECK_THROWS_AS(cat::entry("3.324.2").domain.check({{"n", 1.0}, {"b", -1.0}}), grv::OutOfDomainError);
  }
}
