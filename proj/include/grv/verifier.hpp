#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "grv/catalog.hpp"
#include "grv/parameters.hpp"

namespace grv {

inline constexpr std::string_view kToolVersion = "1.0.0";

struct ToleranceConfig {
  double rel_pass = 1e-8;
  /// Absolute error always accepted; dominates when |rhs| < abs_floor / rel_pass.
  double abs_floor = 1e-10;
  double quad_abs = 1e-12;
  double quad_rel = 1e-11;
  long quad_budget = 200000;

  /// Throws std::invalid_argument unless all fields are positive and the
  /// quadrature tolerances are at least 10x tighter than the pass tolerances.
  void validate() const;
  /// Defaults for the quadrature fields derived from rel_pass/abs_floor.
  static ToleranceConfig from_pass(double rel_pass, double abs_floor);
};

enum class Status { pass, fail, quad_no_converge, skipped };

std::string_view to_string(Status s);

struct VerificationRecord {
  std::string entry_id;
  ParameterAssignment params;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  Status status = Status::fail;
  long evaluations = 0;
  /// Quadrature error estimate (summed over integrated sides); not serialized.
  double quad_error = 0.0;
};

struct Summary {
  long pass = 0;
  long fail = 0;
  long quad_no_converge = 0;
  long skipped = 0;
};

struct VerificationReport {
  std::string version{kToolVersion};
  std::uint64_t seed = 0;
  ToleranceConfig tolerances;
  std::vector<VerificationRecord> records;
  Summary summary;

  /// Recomputes summary from records.
  void tally();
};

/// Throws OutOfDomainError when params lie outside entry.domain. Quadrature
/// trouble is reported through the record status.
VerificationRecord verify_entry(const catalog::IdentityEntry& entry, const ParameterAssignment& params,
                                const ToleranceConfig& tol);

/// Seed used to sample one entry; depends only on (seed, id) so subsets of
/// the catalog reproduce the records of a full run.
std::uint64_t entry_seed(std::uint64_t seed, std::string_view id);

/// Every catalog entry x samples_per_entry seeded samples, fanned out over
/// OpenMP threads and merged in (id, sample) order.
VerificationReport verify_all(std::uint64_t seed, int samples_per_entry, const ToleranceConfig& tol);
/// Same as verify_all restricted to `ids` (deduplicated, catalog order).
VerificationReport verify_ids(const std::vector<std::string>& ids, std::uint64_t seed, int samples_per_entry,
                              const ToleranceConfig& tol);
/// Single-threaded reference for verify_all.
VerificationReport verify_all_serial(std::uint64_t seed, int samples_per_entry, const ToleranceConfig& tol);

/// Finite differences of mu^{-a} Gamma(a) against the closed form of
/// 4.358.5 for n = 1, 2 on a 4x4 (a, mu) grid, at relative tolerance 1e-4.
VerificationReport cross_check_derivative_formulas(const ToleranceConfig& tol);

inline constexpr double kCrossCheckRelTol = 1e-4;
inline constexpr double kCrossCheckA[] = {0.5, 1.0, 2.5, 4.0};
inline constexpr double kCrossCheckMu[] = {0.5, 1.5, 3.0, 7.0};

/// Two-pass Richardson extrapolation to t -> 0 of values sampled at a
/// geometric sequence t_0 > t_1 > ... with constant ratio.
double richardson_limit(const std::vector<double>& values, double ratio);

}  // namespace grv
