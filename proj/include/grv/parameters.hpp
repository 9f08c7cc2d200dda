#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace grv {

/// Concrete binding of the symbols a, mu, nu, s, rho, p, b, m, n, beta,
/// mu_exp, x to numbers. Integer-typed symbols hold exact integers.
class ParameterAssignment {
 public:
  using Map = std::map<std::string, double, std::less<>>;

  ParameterAssignment() = default;
  ParameterAssignment(std::initializer_list<Map::value_type> init) : values_(init) {}

  void set(const std::string& name, double value) { values_[name] = value; }
  bool has(std::string_view name) const { return values_.find(name) != values_.end(); }
  /// Throws OutOfDomainError when the symbol is unbound.
  double get(std::string_view name) const;
  /// get() narrowed to int; throws OutOfDomainError if not integral.
  int integer(std::string_view name) const;

  const Map& values() const { return values_; }
  bool empty() const { return values_.empty(); }

  /// a = (m+1)/b, the gamma argument of x^m exp(-s x^b).
  double derived_a() const;
  /// delta = psi(a) - ln(scale); `a` falls back to derived_a() when unbound.
  double delta(std::string_view scale_symbol = "mu") const;

  friend bool operator==(const ParameterAssignment&, const ParameterAssignment&) = default;

 private:
  Map values_;
};

struct SymbolRange {
  std::string name;
  double lo;
  double hi;
  bool lo_open = true;
  bool hi_open = true;
  bool integer = false;
};

/// lo < expr(params) < hi (bounds may be infinite).
struct CrossConstraint {
  std::string description;
  std::function<double(const ParameterAssignment&)> expr;
  double lo;
  double hi;
};

struct ParameterDomain {
  std::vector<SymbolRange> symbols;
  std::vector<CrossConstraint> cross;
  /// Constraints worked out from convergence analysis rather than stated
  /// alongside the formula.
  bool implementer_derived = false;

  /// Throws OutOfDomainError naming the first violated constraint.
  void check(const ParameterAssignment& params) const;
  bool contains(const ParameterAssignment& params) const;
  std::string describe() const;
};

/// Deterministic for fixed (domain, seed, count). Real symbols are drawn
/// uniformly, or log-uniformly when the range spans >= 2 decades, keeping a
/// 5% margin from open bounds; integer symbols uniformly from their range.
/// Cross constraints are enforced by rejection with the same margin.
/// Throws InfeasibleDomainError after 10^4 rejections.
std::vector<ParameterAssignment> sample_parameters(const ParameterDomain& domain, std::uint64_t seed,
                                                   int count);

/// Parses "k=v[,k=v...]". Values are decimals or the tokens pi, e, gamma,
/// optionally negated. Throws std::invalid_argument on malformed input.
ParameterAssignment parse_assignment(std::string_view text);

}  // namespace grv
