#include <doctest.h>

#include <cmath>
#include <sstream>

#include "grv/catalog.hpp"
#include "grv/errors.hpp"
#include "grv/report.hpp"
#include "grv/specfun.hpp"
#include "grv/verifier.hpp"

using grv::Status;
using grv::ToleranceConfig;

namespace {

std::string json_of(const grv::VerificationReport& r) {
  std::ostringstream os;
  grv::write_json(os, r);
  return os.str();
}

}  // namespace

TEST_SUITE("verifier") {
  TEST_CASE("tolerance validation") {
    CHECK_NOTHROW(ToleranceConfig{}.validate());
    ToleranceConfig t;
    t.quad_rel = 2e-9;
    CHECK_THROWS_AS(t.validate(), std::invalid_argument);
    t = {};
    t.abs_floor = -1.0;
    CHECK_THROWS_AS(t.validate(), std::invalid_argument);
    t = {};
    t.quad_budget = 0;
    CHECK_THROWS_AS(t.validate(), std::invalid_argument);
    const auto loose = ToleranceConfig::from_pass(1e-6, 1e-8);
    CHECK(loose.quad_rel == 1e-11);
    CHECK(loose.quad_abs == 1e-12);
    const auto tight = ToleranceConfig::from_pass(1e-10, 1e-12);
    CHECK(tight.quad_rel == 1e-12);
    CHECK_NOTHROW(tight.validate());
  }

  TEST_CASE("3.381.4 at a = 2.5, mu = 1.7") {
    const auto r = grv::verify_entry(grv::catalog::entry("3.381.4"), {{"a", 2.5}, {"mu", 1.7}}, {});
    CHECK(r.status == Status::pass);
    CHECK(r.rel_err <= 1e-9);
    CHECK(std::fabs(r.rhs - std::tgamma(2.5) * std::pow(1.7, -2.5)) < 1e-15);
    CHECK(r.evaluations > 0);
  }

  TEST_CASE("4.229.1 equals minus Euler's constant") {
    const auto r = grv::verify_entry(grv::catalog::entry("4.229.1"), {}, {});
    CHECK(r.status == Status::pass);
    CHECK(std::fabs(r.lhs + 0.5772156649) < 1e-10);
  }

  TEST_CASE("FUNC:recurrence at a = 0.75") {
    const auto r = grv::verify_entry(grv::catalog::entry("FUNC:recurrence"), {{"a", 0.75}}, {});
    CHECK(r.status == Status::pass);
    CHECK(r.rel_err <= 1e-12);
    CHECK(r.evaluations == 0);
  }

  TEST_CASE("3.434.2 at mu = 1, nu = e^2") {
    const auto r = grv::verify_entry(grv::catalog::entry("3.434.2"), {{"mu", 1.0}, {"nu", std::exp(2.0)}}, {});
    CHECK(r.rhs == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(r.status == Status::pass);
  }

  TEST_CASE("4.369.1 vanishes at mu = 1") {
    const ToleranceConfig tol;
    for (double a : {0.3, 1.0, 2.7, 5.5}) {
      const auto r = grv::verify_entry(grv::catalog::entry("4.369.1"), {{"a", a}, {"mu", 1.0}}, tol);
      CHECK(r.rhs == 0.0);
      CHECK(std::fabs(r.lhs) <= tol.abs_floor);
      CHECK(r.status == Status::pass);
    }
  }

  TEST_CASE("sign coherence of 4.355.3 and 4.355.4") {
    for (const char* id : {"4.355.3", "4.355.4"}) {
      const auto& e = grv::catalog::entry(id);
      for (const auto& p : grv::sample_parameters(e.domain, 5, 20)) {
        const auto r = grv::verify_entry(e, p, {});
        CHECK(std::signbit(r.lhs) == std::signbit(r.rhs));
      }
    }
  }

  TEST_CASE("out of domain parameters are rejected") {
    CHECK_THROWS_AS(grv::verify_entry(grv::catalog::entry("3.381.4"), {{"a", -1.0}, {"mu", 1.0}}, {}),
                    grv::OutOfDomainError);
  }

  TEST_CASE("pass criterion") {
    // Pass requires the quadrature estimate to use at most 10% of the allowed error.
    ToleranceConfig tol;
    tol.quad_budget = 40;
    const auto r = grv::verify_entry(grv::catalog::entry("4.215.1"), {{"a", 0.07}}, tol);
    CHECK(r.status == Status::quad_no_converge);
    CHECK(r.evaluations <= 40);
  }

  TEST_CASE("Richardson extrapolation") {
    // f(t) = 3 + 2t - 5t^2 is reproduced exactly by two passes.
    const auto f = [](double t) { return 3.0 + 2.0 * t - 5.0 * t * t; };
    CHECK(grv::richardson_limit({f(1e-2), f(1e-3), f(1e-4)}, 10.0) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(grv::richardson_limit({7.0}, 10.0) == 7.0);
    CHECK_THROWS_AS(grv::richardson_limit({}, 10.0), std::invalid_argument);
  }

  TEST_CASE("full run at seed 42 passes and is reproducible") {
    const auto a = grv::verify_all(42, 5, {});
    CHECK(a.records.size() >= 280);
    CHECK(a.summary.fail == 0);
    CHECK(a.summary.quad_no_converge == 0);
    CHECK(a.summary.pass == static_cast<long>(a.records.size()));
    const auto b = grv::verify_all(42, 5, {});
    CHECK(json_of(a) == json_of(b));
    const auto serial = grv::verify_all_serial(42, 5, {});
    CHECK(json_of(a) == json_of(serial));
    for (std::size_t i = 1; i < a.records.size(); ++i) CHECK(a.records[i - 1].entry_id <= a.records[i].entry_id);
  }

  TEST_CASE("subset runs reproduce the full-run records") {
    const auto full = grv::verify_all(9, 2, {});
    const auto part = grv::verify_ids({"4.333", "3.328", "4.333"}, 9, 2, {});
    REQUIRE(part.records.size() == 4);
    CHECK(part.records[0].entry_id == "3.328");
    for (const auto& r : part.records) {
      bool found = false;
      for (const auto& f : full.records) {
        found = found || (f.entry_id == r.entry_id && f.params == r.params && f.lhs == r.lhs);
      }
      CHECK(found);
    }
  }

  TEST_CASE("tiny budget reports non-convergence, never a false failure") {
    ToleranceConfig tol;
    tol.quad_budget = 50;
    const auto report = grv::verify_all(1, 1, tol);
    CHECK(report.summary.quad_no_converge > 0);
    CHECK(report.summary.fail == 0);
    long total = report.summary.pass + report.summary.fail + report.summary.quad_no_converge + report.summary.skipped;
    CHECK(total == static_cast<long>(report.records.size()));
    for (const auto& r : report.records) {
      if (r.status == Status::quad_no_converge) CHECK(r.evaluations <= 2 * tol.quad_budget);
    }
  }

  TEST_CASE("derivative cross-check") {
    const auto report = grv::cross_check_derivative_formulas({});
    CHECK(report.records.size() == 32);
    CHECK(report.summary.pass == 32);
    for (const auto& r : report.records) {
      if (r.params.get("a") == 1.0 && r.params.get("mu") == 1.0) {
        const double g = 0.5772156649015329;
        const double want = r.params.get("n") == 1.0 ? -g : g * g + 1.6449340668482264;
        CHECK(std::fabs(r.lhs - want) <= 1e-4 * std::fabs(want));
        CHECK(std::fabs(r.rhs - want) <= 1e-13);
      }
    }
  }

  TEST_CASE("4.358.5 at integer a matches MOLL:gamma-7a") {
    for (int m = 0; m <= 4; ++m) {
      for (double s : {0.3, 2.0, 7.0}) {
        const double a = m + 1.0;
        const double fd = grv::catalog::entry("4.358.5").closed_form({{"n", 1.0}, {"a", a}, {"mu", s}});
        const double g7a = grv::catalog::entry("MOLL:gamma-7a").closed_form({{"m", static_cast<double>(m)}, {"s", s}});
        CHECK(std::fabs(fd - g7a) <= 1e-13 * std::max(1.0, std::fabs(g7a)));
      }
    }
  }
}
