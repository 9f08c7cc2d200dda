#include "grv/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "grv/catalog.hpp"
#include "grv/errors.hpp"
#include "grv/numfmt.hpp"
#include "grv/report.hpp"
#include "grv/selftest.hpp"
#include "grv/verifier.hpp"

namespace grv::cli {
namespace {

// Argument problems discovered after CLI11 has finished parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kFormats = {"text", "json", "csv"};

std::optional<long> budget_from_env() {
  const char* raw = std::getenv("GRV_QUAD_BUDGET");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const std::string_view text(raw);
  long value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || value < 1) {
    throw UsageError("GRV_QUAD_BUDGET must be a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

ToleranceConfig tolerances(double rel_tol, double abs_floor) {
  ToleranceConfig tol = ToleranceConfig::from_pass(rel_tol, abs_floor);
  if (auto budget = budget_from_env()) tol.quad_budget = *budget;
  try {
    tol.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return tol;
}

void write_catalog(std::ostream& os, OutputFormat format) {
  const auto& all = catalog::entries();
  switch (format) {
    case OutputFormat::json:
      os << "[";
      for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& e = all[i];
        os << (i == 0 ? "\n  " : ",\n  ") << "{\"id\": " << json_quote(e.id)
           << ", \"category\": " << json_quote(catalog::to_string(e.category))
           << ", \"reference\": " << json_quote(e.provenance) << ", \"domain\": " << json_quote(e.domain.describe())
           << "}";
      }
      os << "\n]\n";
      break;
    case OutputFormat::csv:
      os << "id,category,reference,domain\n";
      for (const auto& e : all) {
        os << csv_field(e.id) << ',' << catalog::to_string(e.category) << ',' << csv_field(e.provenance) << ','
           << csv_field(e.domain.describe()) << '\n';
      }
      break;
    case OutputFormat::text: {
      std::size_t width = 0;
      for (const auto& e : all) width = std::max(width, e.id.size());
      for (const auto& e : all) {
        os << e.id << std::string(width + 2 - e.id.size(), ' ') << catalog::to_string(e.category) << "  "
           << e.provenance << '\n';
      }
      os << all.size() << " entries\n";
      break;
    }
  }
}

void write_entry(std::ostream& os, const catalog::IdentityEntry& e, OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      os << "{\"id\": " << json_quote(e.id) << ", \"category\": " << json_quote(catalog::to_string(e.category))
         << ", \"formula\": " << json_quote(e.formula) << ", \"domain\": " << json_quote(e.domain.describe())
         << ", \"reference\": " << json_quote(e.provenance) << "}\n";
      break;
    case OutputFormat::csv:
      os << "id,category,formula,domain,reference\n"
         << csv_field(e.id) << ',' << catalog::to_string(e.category) << ',' << csv_field(e.formula) << ','
         << csv_field(e.domain.describe()) << ',' << csv_field(e.provenance) << '\n';
      break;
    case OutputFormat::text:
      os << "id:        " << e.id << '\n'
         << "category:  " << catalog::to_string(e.category) << '\n'
         << "formula:   " << e.formula << '\n'
         << "domain:    " << e.domain.describe() << '\n'
         << "reference: " << e.provenance << '\n';
      break;
  }
}

void write_record(std::ostream& os, const VerificationReport& report, OutputFormat format) {
  if (format != OutputFormat::text) {
    write_report(os, report, format);
    return;
  }
  const VerificationRecord& r = report.records.front();
  const auto num = [](double v) { return std::isfinite(v) ? significant(v, 15) : shortest(v); };
  std::string params;
  for (const auto& [name, value] : r.params.values()) params += (params.empty() ? "" : ", ") + name + " = " + num(value);
  os << "id:          " << r.entry_id << '\n'
     << "params:      " << (params.empty() ? "(none)" : params) << '\n'
     << "lhs:         " << num(r.lhs) << '\n'
     << "rhs:         " << num(r.rhs) << '\n'
     << "abs_err:     " << num(r.abs_err) << '\n'
     << "rel_err:     " << num(r.rel_err) << '\n'
     << "status:      " << to_string(r.status) << '\n'
     << "evaluations: " << r.evaluations << '\n';
}

int exit_code(const VerificationReport& report) { return report.summary.fail > 0 ? kExitFailedRecord : kExitOk; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical verification of gamma-function integral identities", "grv"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string format_name = "text";
  const auto add_format = [&format_name](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember(kFormats));
  };

  auto* list_cmd = app.add_subcommand("list", "List catalog ids with their provenance");
  add_format(list_cmd);

  std::string show_id;
  auto* show_cmd = app.add_subcommand("show", "Show one catalog entry");
  show_cmd->add_option("id", show_id, "Catalog id")->required();
  add_format(show_cmd);

  std::vector<std::string> verify_ids_opt;
  bool verify_all_flag = false;
  int samples = 5;
  std::uint64_t seed = 42;
  double rel_tol = 1e-8;
  double abs_floor = 1e-10;
  std::string out_path;
  auto* verify_cmd = app.add_subcommand("verify", "Verify catalog entries on seeded parameter samples");
  verify_cmd->add_option("--id", verify_ids_opt, "Entry id (repeatable)");
  verify_cmd->add_flag("--all", verify_all_flag, "Verify every entry (default when no --id is given)");
  verify_cmd->add_option("--samples", samples, "Samples per entry")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed, "Sampling seed");
  verify_cmd->add_option("--rel-tol", rel_tol, "Relative pass tolerance")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--abs-floor", abs_floor, "Absolute pass floor")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out", out_path, "Write the report to this file");
  add_format(verify_cmd);

  std::string eval_id;
  std::optional<std::string> eval_params;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one identity at given parameters");
  eval_cmd->add_option("id", eval_id, "Catalog id")->required();
  eval_cmd->add_option("--params", eval_params, "k=v[,k=v...]; values may be pi, e or gamma");
  eval_cmd->add_option("--rel-tol", rel_tol, "Relative pass tolerance")->check(CLI::PositiveNumber);
  eval_cmd->add_option("--abs-floor", abs_floor, "Absolute pass floor")->check(CLI::PositiveNumber);
  add_format(eval_cmd);

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the special-function and quadrature invariant suites");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    const OutputFormat format = parse_format(format_name);
    if (list_cmd->parsed()) {
      write_catalog(out, format);
      return kExitOk;
    }
    if (show_cmd->parsed()) {
      write_entry(out, catalog::entry(show_id), format);
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      const ToleranceConfig tol = tolerances(rel_tol, abs_floor);
      if (verify_all_flag && !verify_ids_opt.empty()) throw UsageError("--all and --id are mutually exclusive");
      const VerificationReport report =
          verify_ids_opt.empty() ? verify_all(seed, samples, tol) : verify_ids(verify_ids_opt, seed, samples, tol);
      if (out_path.empty()) {
        write_report(out, report, format);
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw UsageError("cannot open '" + out_path + "' for writing");
        write_report(file, report, format);
        const Summary& s = report.summary;
        out << "wrote " << report.records.size() << " records to " << out_path << " (pass " << s.pass << ", fail "
            << s.fail << ", quad_no_converge " << s.quad_no_converge << ", skipped " << s.skipped << ")\n";
      }
      return exit_code(report);
    }
    if (eval_cmd->parsed()) {
      const auto& e = catalog::entry(eval_id);
      const ToleranceConfig tol = tolerances(rel_tol, abs_floor);
      ParameterAssignment params;
      if (eval_params) {
        try {
          params = parse_assignment(*eval_params);
        } catch (const std::invalid_argument& ex) {
          throw UsageError(ex.what());
        }
      } else if (!e.domain.symbols.empty()) {
        params = sample_parameters(e.domain, entry_seed(42, e.id), 1).front();
      }
      VerificationReport report;
      report.seed = 42;
      report.tolerances = tol;
      report.records.push_back(verify_entry(e, params, tol));
      report.tally();
      write_record(out, report, format);
      return exit_code(report);
    }
    if (selftest_cmd->parsed()) {
      bool ok = true;
      for (const auto& c : run_selftest()) {
        ok = ok && c.passed;
        out << (c.passed ? "PASS  " : "FAIL  ") << c.suite << ": " << c.name << "  (worst " << significant(c.worst, 3)
            << ", tol " << significant(c.tolerance, 3) << ")\n";
      }
      return ok ? kExitOk : kExitFailedRecord;
    }
  } catch (const UnknownIdError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OutOfDomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace grv::cli
