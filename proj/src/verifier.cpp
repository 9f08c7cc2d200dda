#include "grv/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <variant>

#include "grv/errors.hpp"
#include "grv/quadrature.hpp"
#include "grv/specfun.hpp"

namespace grv {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// Fraction of the allowed comparison error the quadrature estimate may use.
constexpr double kQuadShare = 0.1;

struct SideValue {
  double value = kNaN;
  double error = 0.0;
  long evaluations = 0;
  bool converged = true;
};

quad::Options quad_options(const ToleranceConfig& tol, catalog::Category category) {
  quad::Options o{tol.quad_abs, tol.quad_rel, tol.quad_budget};
  // Both sides of a transformation may be far below the absolute floor;
  // only a relative criterion says anything about them.
  if (category == catalog::Category::transformation) o.abs_tol = std::numeric_limits<double>::min();
  return o;
}

SideValue evaluate(const catalog::Side& side, const ParameterAssignment& params, const quad::Options& opts) {
  SideValue out;
  if (const auto* integral = std::get_if<catalog::IntegralFactory>(&side)) {
    const catalog::IntegralForm form = (*integral)(params);
    const quad::QuadratureResult r = quad::integrate(form.integrand, form.spec, opts);
    out.value = r.value;
    out.error = r.error_estimate;
    out.evaluations = r.evaluations;
    out.converged = r.converged;
  } else if (const auto* value = std::get_if<catalog::ValueFactory>(&side)) {
    out.value = (*value)(params);
  } else {
    const auto& limit = std::get<catalog::LimitFamily>(side);
    std::vector<double> samples;
    for (double t : limit.approach) samples.push_back(limit.family(params, t));
    const double ratio = limit.approach.size() > 1 ? limit.approach[0] / limit.approach[1] : 1.0;
    out.value = richardson_limit(samples, ratio);
  }
  return out;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Task {
  const catalog::IdentityEntry* entry;
  ParameterAssignment params;
};

std::vector<Task> plan(const std::vector<const catalog::IdentityEntry*>& selected, std::uint64_t seed, int samples) {
  if (samples < 1) throw std::invalid_argument("samples_per_entry must be >= 1");
  std::vector<Task> tasks;
  tasks.reserve(selected.size() * static_cast<std::size_t>(samples));
  for (const auto* e : selected) {
    for (auto& p : sample_parameters(e->domain, entry_seed(seed, e->id), samples)) tasks.push_back({e, std::move(p)});
  }
  return tasks;
}

VerificationRecord run_task(const Task& task, const ToleranceConfig& tol) {
  try {
    return verify_entry(*task.entry, task.params, tol);
  } catch (const std::exception&) {
    VerificationRecord r;
    r.entry_id = task.entry->id;
    r.params = task.params;
    r.lhs = r.rhs = r.abs_err = r.rel_err = kNaN;
    r.status = Status::fail;
    return r;
  }
}

VerificationReport assemble(std::vector<VerificationRecord> records, std::uint64_t seed, const ToleranceConfig& tol) {
  VerificationReport report;
  report.seed = seed;
  report.tolerances = tol;
  report.records = std::move(records);
  // Tasks are generated in catalog order; keep that order regardless of
  // which thread produced each record.
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const auto& l, const auto& r) { return l.entry_id < r.entry_id; });
  report.tally();
  return report;
}

VerificationReport run_parallel(const std::vector<const catalog::IdentityEntry*>& selected, std::uint64_t seed,
                                int samples, const ToleranceConfig& tol) {
  tol.validate();
  const std::vector<Task> tasks = plan(selected, seed, samples);
  std::vector<VerificationRecord> records(tasks.size());
  const long n = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    records[static_cast<std::size_t>(i)] = run_task(tasks[static_cast<std::size_t>(i)], tol);
  }
  return assemble(std::move(records), seed, tol);
}

std::vector<const catalog::IdentityEntry*> whole_catalog() {
  std::vector<const catalog::IdentityEntry*> out;
  for (const auto& e : catalog::entries()) out.push_back(&e);
  return out;
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::quad_no_converge:
      return "quad_no_converge";
    case Status::skipped:
      return "skipped";
  }
  return "?";
}

void ToleranceConfig::validate() const {
  const auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (!positive(rel_pass) || !positive(abs_floor) || !positive(quad_abs) || !positive(quad_rel) || quad_budget < 1) {
    throw std::invalid_argument("tolerances and budget must be positive");
  }
  if (quad_rel * 10.0 > rel_pass || quad_abs * 10.0 > abs_floor) {
    throw std::invalid_argument("quadrature tolerances must be at least 10x tighter than pass tolerances");
  }
}

ToleranceConfig ToleranceConfig::from_pass(double rel_pass, double abs_floor) {
  ToleranceConfig t;
  t.rel_pass = rel_pass;
  t.abs_floor = abs_floor;
  t.quad_rel = std::min(1e-11, rel_pass / 100.0);
  t.quad_abs = std::min(1e-12, abs_floor / 100.0);
  return t;
}

void VerificationReport::tally() {
  summary = {};
  for (const auto& r : records) {
    switch (r.status) {
      case Status::pass:
        ++summary.pass;
        break;
      case Status::fail:
        ++summary.fail;
        break;
      case Status::quad_no_converge:
        ++summary.quad_no_converge;
        break;
      case Status::skipped:
        ++summary.skipped;
        break;
    }
  }
}

double richardson_limit(const std::vector<double>& values, double ratio) {
  if (values.empty()) throw std::invalid_argument("richardson_limit: no values");
  std::vector<double> level = values;
  double factor = 1.0;
  for (std::size_t pass = 1; pass < values.size() && pass <= 2; ++pass) {
    factor *= ratio;
    for (std::size_t i = 0; i + 1 < level.size(); ++i) {
      level[i] = (factor * level[i + 1] - level[i]) / (factor - 1.0);
    }
    level.pop_back();
  }
  return level.back();
}

VerificationRecord verify_entry(const catalog::IdentityEntry& entry, const ParameterAssignment& params,
                                const ToleranceConfig& tol) {
  entry.domain.check(params);
  VerificationRecord rec;
  rec.entry_id = entry.id;
  rec.params = params;

  const quad::Options opts = quad_options(tol, entry.category);
  SideValue rhs;
  try {
    rhs = evaluate(entry.rhs, params, opts);
  } catch (const OverflowError&) {
    rhs.value = std::numeric_limits<double>::infinity();
  } catch (const NonFiniteSampleError&) {
    rhs.value = kNaN;
    rhs.converged = false;
  }
  rec.rhs = rhs.value;
  if (!std::isfinite(rhs.value) && std::holds_alternative<catalog::ValueFactory>(entry.rhs)) {
    rec.lhs = rec.abs_err = rec.rel_err = kNaN;
    rec.status = Status::skipped;
    return rec;
  }

  SideValue lhs;
  try {
    lhs = evaluate(entry.lhs, params, opts);
  } catch (const NonFiniteSampleError&) {
    lhs.value = kNaN;
  } catch (const OverflowError&) {
    lhs.value = kNaN;
  }
  rec.lhs = lhs.value;
  rec.evaluations = lhs.evaluations + rhs.evaluations;
  rec.quad_error = lhs.error + rhs.error;
  rec.abs_err = std::fabs(lhs.value - rhs.value);
  rec.rel_err = rec.abs_err / std::fabs(rhs.value);

  if (!std::isfinite(rec.abs_err)) {
    rec.status = Status::fail;
    return rec;
  }
  const double allowed = std::max(tol.abs_floor, tol.rel_pass * std::fabs(rhs.value));
  const bool quad_ok = lhs.converged && rhs.converged && rec.quad_error <= kQuadShare * allowed;
  if (!quad_ok) {
    rec.status = Status::quad_no_converge;
  } else {
    rec.status = rec.abs_err <= allowed ? Status::pass : Status::fail;
  }
  return rec;
}

std::uint64_t entry_seed(std::uint64_t seed, std::string_view id) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : id) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix(seed ^ splitmix(h));
}

VerificationReport verify_all(std::uint64_t seed, int samples_per_entry, const ToleranceConfig& tol) {
  return run_parallel(whole_catalog(), seed, samples_per_entry, tol);
}

VerificationReport verify_ids(const std::vector<std::string>& ids, std::uint64_t seed, int samples_per_entry,
                              const ToleranceConfig& tol) {
  std::vector<const catalog::IdentityEntry*> selected;
  for (const auto& id : ids) selected.push_back(&catalog::entry(id));
  std::sort(selected.begin(), selected.end(), [](const auto* l, const auto* r) { return l->id < r->id; });
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
  return run_parallel(selected, seed, samples_per_entry, tol);
}

VerificationReport verify_all_serial(std::uint64_t seed, int samples_per_entry, const ToleranceConfig& tol) {
  tol.validate();
  const std::vector<Task> tasks = plan(whole_catalog(), seed, samples_per_entry);
  std::vector<VerificationRecord> records;
  records.reserve(tasks.size());
  for (const auto& t : tasks) records.push_back(run_task(t, tol));
  return assemble(std::move(records), seed, tol);
}

VerificationReport cross_check_derivative_formulas(const ToleranceConfig& tol) {
  const catalog::IdentityEntry& target = catalog::entry("4.358.5");
  std::vector<VerificationRecord> records;
  for (int n = 1; n <= 2; ++n) {
    for (double a : kCrossCheckA) {
      for (double mu : kCrossCheckMu) {
        VerificationRecord rec;
        rec.entry_id = "4.358.5#fd";
        rec.params = {{"n", static_cast<double>(n)}, {"a", a}, {"mu", mu}};
        long calls = 0;
        const auto g = [mu, &calls](double x) {
          ++calls;
          return std::pow(mu, -x) * specfun::gamma(x);
        };
        try {
          rec.lhs = quad::finite_difference_derivative(g, a, n);
          rec.rhs = target.closed_form(rec.params);
          rec.abs_err = std::fabs(rec.lhs - rec.rhs);
          rec.rel_err = rec.abs_err / std::fabs(rec.rhs);
          const double allowed = std::max(tol.abs_floor, kCrossCheckRelTol * std::fabs(rec.rhs));
          rec.status = rec.abs_err <= allowed ? Status::pass : Status::fail;
        } catch (const std::exception&) {
          rec.lhs = rec.rhs = rec.abs_err = rec.rel_err = kNaN;
          rec.status = Status::fail;
        }
        rec.evaluations = calls;
        records.push_back(std::move(rec));
      }
    }
  }
  VerificationReport report;
  report.tolerances = tol;
  report.records = std::move(records);
  report.tally();
  return report;
}

}  // namespace grv
