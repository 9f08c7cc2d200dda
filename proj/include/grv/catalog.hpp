#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "grv/parameters.hpp"
#include "grv/quadrature.hpp"

// The identity table. Each entry binds a parameter domain to two "sides"
// that the verifier evaluates and compares:
//
//   integral        lhs = integral, rhs = closed form
//   functional      lhs = closed form, rhs = closed form (gamma-family only)
//   transformation  lhs = integral, rhs = integral (no closed form known)
//   limit           lhs = limit family in an approach variable, rhs = closed form

namespace grv::catalog {

enum class Category { integral, functional, transformation, limit };

std::string_view to_string(Category c);

struct IntegralForm {
  quad::Integrand integrand;
  quad::IntegralSpec spec;
};

using IntegralFactory = std::function<IntegralForm(const ParameterAssignment&)>;
using ValueFactory = std::function<double(const ParameterAssignment&)>;

/// family(params, t) -> value; the identity concerns t -> 0, sampled at
/// `approach` (geometric, decreasing).
struct LimitFamily {
  std::function<double(const ParameterAssignment&, double)> family;
  std::vector<double> approach;
};

using Side = std::variant<IntegralFactory, ValueFactory, LimitFamily>;

struct IdentityEntry {
  std::string id;
  Category category;
  std::string formula;
  ParameterDomain domain;
  Side lhs;
  Side rhs;
  std::string provenance;

  /// rhs evaluated as a closed form; throws std::logic_error for entries
  /// whose rhs is an integral.
  double closed_form(const ParameterAssignment& params) const;
  /// lhs as an integral; throws std::logic_error for non-integral lhs.
  IntegralForm lhs_integral(const ParameterAssignment& params) const;
};

/// Full catalog ordered by id. Built once; immutable.
const std::vector<IdentityEntry>& entries();

/// Throws UnknownIdError carrying up to three near matches.
const IdentityEntry& entry(std::string_view id);

std::vector<std::string> near_matches(std::string_view id, std::size_t max_count = 3);

/// mu^{-a} sum_k (-1)^k C(n,k) (ln mu)^k Gamma^(n-k)(a): the expanded form
/// of (d/da)^n [mu^{-a} Gamma(a)].
double leibniz_rhs(int n, double a, double mu);

}  // namespace grv::catalog
