#include "grv/parameters.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "grv/errors.hpp"
#include "grv/numfmt.hpp"
#include "grv/specfun.hpp"

namespace grv {
namespace {

constexpr double kMargin = 0.05;
constexpr int kMaxRejections = 10000;

double unit_interval(std::mt19937_64& rng) {
  // 53 random bits; std::uniform_real_distribution is not portable bit-for-bit.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool log_scaled(const SymbolRange& r) { return r.lo > 0.0 && std::isfinite(r.hi) && r.hi / r.lo >= 100.0; }

double draw_symbol(const SymbolRange& r, std::mt19937_64& rng) {
  const double u = unit_interval(rng);
  if (r.integer) {
    const long first = static_cast<long>(r.lo_open ? std::floor(r.lo) + 1 : std::ceil(r.lo));
    const long last = static_cast<long>(r.hi_open ? std::ceil(r.hi) - 1 : std::floor(r.hi));
    const long span = last - first + 1;
    return static_cast<double>(first + std::min(span - 1, static_cast<long>(u * static_cast<double>(span))));
  }
  const bool logs = log_scaled(r);
  double lo = logs ? std::log(r.lo) : r.lo;
  double hi = logs ? std::log(r.hi) : r.hi;
  const double width = hi - lo;
  if (r.lo_open) lo += kMargin * width;
  if (r.hi_open) hi -= kMargin * width;
  const double v = lo + u * (hi - lo);
  return logs ? std::exp(v) : v;
}

bool within(const CrossConstraint& c, const ParameterAssignment& p, double margin) {
  const double v = c.expr(p);
  double lo = c.lo;
  double hi = c.hi;
  if (std::isfinite(lo) && std::isfinite(hi)) {
    lo += margin * (hi - lo);
    hi -= margin * (c.hi - c.lo);
  }
  return v > lo && v < hi;
}

std::string range_text(const SymbolRange& r) {
  std::ostringstream os;
  if (r.integer) {
    const long first = static_cast<long>(r.lo_open ? std::floor(r.lo) + 1 : std::ceil(r.lo));
    const long last = static_cast<long>(r.hi_open ? std::ceil(r.hi) - 1 : std::floor(r.hi));
    os << r.name << " in {" << first << ".." << last << "}";
    return os.str();
  }
  os << shortest(r.lo) << (r.lo_open ? " < " : " <= ") << r.name << (r.hi_open ? " < " : " <= ")
     << shortest(r.hi);
  return os.str();
}

double parse_value(std::string_view token) {
  bool negate = false;
  if (!token.empty() && token.front() == '-') {
    negate = true;
    token.remove_prefix(1);
  }
  double v = 0.0;
  if (token == "pi") {
    v = specfun::kConstants.pi;
  } else if (token == "e") {
    v = std::exp(1.0);
  } else if (token == "gamma") {
    v = specfun::kConstants.euler_gamma;
  } else {
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size() || token.empty()) {
      throw std::invalid_argument("cannot parse parameter value '" + std::string(token) + "'");
    }
  }
  return negate ? -v : v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

double ParameterAssignment::get(std::string_view name) const {
  const auto it = values_.find(name);
  if (it == values_.end()) throw OutOfDomainError("parameter '" + std::string(name) + "' is not bound");
  return it->second;
}

int ParameterAssignment::integer(std::string_view name) const {
  const double v = get(name);
  if (v != std::floor(v) || std::fabs(v) > 1e9) {
    throw OutOfDomainError("parameter '" + std::string(name) + "' must be an integer, got " + shortest(v));
  }
  return static_cast<int>(v);
}

double ParameterAssignment::derived_a() const { return (get("m") + 1.0) / get("b"); }

double ParameterAssignment::delta(std::string_view scale_symbol) const {
  const double a = has("a") ? get("a") : derived_a();
  return specfun::digamma(a) - std::log(get(scale_symbol));
}

void ParameterDomain::check(const ParameterAssignment& params) const {
  for (const auto& r : symbols) {
    if (!params.has(r.name)) throw OutOfDomainError("missing parameter '" + r.name + "'");
    const double v = params.get(r.name);
    const bool lo_ok = r.lo_open ? v > r.lo : v >= r.lo;
    const bool hi_ok = r.hi_open ? v < r.hi : v <= r.hi;
    if (!std::isfinite(v) || !lo_ok || !hi_ok) {
      throw OutOfDomainError("parameter " + r.name + " = " + shortest(v) + " violates " + range_text(r));
    }
    if (r.integer && v != std::floor(v)) {
      throw OutOfDomainError("parameter " + r.name + " = " + shortest(v) + " must be an integer");
    }
  }
  for (const auto& [name, value] : params.values()) {
    bool known = false;
    for (const auto& r : symbols) known = known || r.name == name;
    if (!known) throw OutOfDomainError("parameter '" + name + "' is not used by this entry");
  }
  for (const auto& c : cross) {
    if (!within(c, params, 0.0)) throw OutOfDomainError("constraint violated: " + c.description);
  }
}

bool ParameterDomain::contains(const ParameterAssignment& params) const {
  try {
    check(params);
    return true;
  } catch (const OutOfDomainError&) {
    return false;
  }
}

std::string ParameterDomain::describe() const {
  if (symbols.empty()) return "(no parameters)";
  std::string out;
  for (const auto& r : symbols) {
    if (!out.empty()) out += "; ";
    out += range_text(r);
  }
  for (const auto& c : cross) out += "; " + c.description;
  if (implementer_derived) out += " [derived from convergence analysis]";
  return out;
}

std::vector<ParameterAssignment> sample_parameters(const ParameterDomain& domain, std::uint64_t seed, int count) {
  if (count < 1) throw std::invalid_argument("sample_parameters: count must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<ParameterAssignment> out;
  out.reserve(static_cast<std::size_t>(count));
  int rejections = 0;
  while (static_cast<int>(out.size()) < count) {
    ParameterAssignment p;
    for (const auto& r : domain.symbols) p.set(r.name, draw_symbol(r, rng));
    bool ok = true;
    for (const auto& c : domain.cross) ok = ok && within(c, p, kMargin);
    if (ok) {
      out.push_back(std::move(p));
    } else if (++rejections >= kMaxRejections) {
      throw InfeasibleDomainError("sample_parameters: no feasible sample after 10000 rejections (" +
                                  domain.describe() + ")");
    }
  }
  return out;
}

ParameterAssignment parse_assignment(std::string_view text) {
  ParameterAssignment p;
  text = trim(text);
  if (text.empty()) return p;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("expected k=v, got '" + std::string(item) + "'");
    const std::string_view key = trim(item.substr(0, eq));
    if (key.empty()) throw std::invalid_argument("empty parameter name in '" + std::string(item) + "'");
    p.set(std::string(key), parse_value(trim(item.substr(eq + 1))));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return p;
}

}  // namespace grv
