#include "grv/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "catalog_internal.hpp"
#include "grv/errors.hpp"
#include "grv/specfun.hpp"

namespace grv::catalog {
namespace {

std::vector<IdentityEntry> sorted_entries() {
  auto all = detail::build_entries();
  std::stable_sort(all.begin(), all.end(), [](const auto& l, const auto& r) { return l.id < r.id; });
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i].id == all[i - 1].id) throw std::logic_error("duplicate catalog id " + all[i].id);
  }
  return all;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

}  // namespace

std::string_view to_string(Category c) {
  switch (c) {
    case Category::integral:
      return "integral";
    case Category::functional:
      return "functional";
    case Category::transformation:
      return "transformation";
    case Category::limit:
      return "limit";
  }
  return "?";
}

double IdentityEntry::closed_form(const ParameterAssignment& params) const {
  const auto* value = std::get_if<ValueFactory>(&rhs);
  if (value == nullptr) throw std::logic_error(id + ": right-hand side is not a closed form");
  return (*value)(params);
}

IntegralForm IdentityEntry::lhs_integral(const ParameterAssignment& params) const {
  const auto* integral = std::get_if<IntegralFactory>(&lhs);
  if (integral == nullptr) throw std::logic_error(id + ": left-hand side is not an integral");
  return (*integral)(params);
}

const std::vector<IdentityEntry>& entries() {
  static const std::vector<IdentityEntry> table = sorted_entries();
  return table;
}

const IdentityEntry& entry(std::string_view id) {
  const auto& all = entries();
  const auto it = std::lower_bound(all.begin(), all.end(), id,
                                   [](const IdentityEntry& e, std::string_view key) { return e.id < key; });
  if (it != all.end() && it->id == id) return *it;
  std::string hint;
  for (const auto& s : near_matches(id)) hint += (hint.empty() ? "" : ", ") + s;
  throw UnknownIdError(std::string(id), hint);
}

std::vector<std::string> near_matches(std::string_view id, std::size_t max_count) {
  std::vector<std::pair<std::size_t, std::string>> scored;
  for (const auto& e : entries()) {
    std::size_t d = edit_distance(id, e.id);
    if (!id.empty() && e.id.find(id) != std::string::npos) d = std::min<std::size_t>(d, 1);
    scored.emplace_back(d, e.id);
  }
  std::stable_sort(scored.begin(), scored.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<std::string> out;
  for (const auto& [d, name] : scored) {
    if (out.size() >= max_count) break;
    out.push_back(name);
  }
  return out;
}

double leibniz_rhs(int n, double a, double mu) {
  const double log_mu = std::log(mu);
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * specfun::binomial(n, k) * std::pow(log_mu, k) * specfun::gamma_derivative(n - k, a);
  }
  return std::pow(mu, -a) * sum;
}

}  // namespace grv::catalog
