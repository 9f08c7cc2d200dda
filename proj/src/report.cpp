#include "grv/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "grv/numfmt.hpp"

namespace grv {
namespace {

std::string text_number(double v) { return std::isfinite(v) ? significant(v, 15) : shortest(v); }

void write_record_json(std::ostream& os, const VerificationRecord& r) {
  os << "{\"id\": " << json_quote(r.entry_id) << ", \"params\": " << params_json(r.params)
     << ", \"lhs\": " << json_number(r.lhs) << ", \"rhs\": " << json_number(r.rhs)
     << ", \"abs_err\": " << json_number(r.abs_err) << ", \"rel_err\": " << json_number(r.rel_err)
     << ", \"status\": " << json_quote(to_string(r.status)) << ", \"evaluations\": " << r.evaluations << "}";
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected text, json or csv)");
}

std::string json_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(static_cast<unsigned char>(c)));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string json_number(double v) { return std::isfinite(v) ? shortest(v) : "null"; }

std::string params_json(const ParameterAssignment& params) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, value] : params.values()) {
    if (!first) out += ", ";
    first = false;
    out += json_quote(name) + ": " + json_number(value);
  }
  return out + "}";
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_json(std::ostream& os, const VerificationReport& report) {
  const ToleranceConfig& t = report.tolerances;
  os << "{\n";
  os << "  \"version\": " << json_quote(report.version) << ",\n";
  os << "  \"seed\": " << report.seed << ",\n";
  os << "  \"tolerances\": {\"rel_pass\": " << json_number(t.rel_pass) << ", \"abs_floor\": " << json_number(t.abs_floor)
     << ", \"quad_abs\": " << json_number(t.quad_abs) << ", \"quad_rel\": " << json_number(t.quad_rel)
     << ", \"quad_budget\": " << t.quad_budget << "},\n";
  os << "  \"records\": [";
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    os << (i == 0 ? "\n    " : ",\n    ");
    write_record_json(os, report.records[i]);
  }
  os << (report.records.empty() ? "],\n" : "\n  ],\n");
  const Summary& s = report.summary;
  os << "  \"summary\": {\"pass\": " << s.pass << ", \"fail\": " << s.fail
     << ", \"quad_no_converge\": " << s.quad_no_converge << ", \"skipped\": " << s.skipped << "}\n";
  os << "}\n";
}

void write_csv(std::ostream& os, const VerificationReport& report) {
  os << "id,param_json,lhs,rhs,abs_err,rel_err,status,evaluations\n";
  for (const auto& r : report.records) {
    os << csv_field(r.entry_id) << ',' << csv_field(params_json(r.params)) << ',' << shortest(r.lhs) << ','
       << shortest(r.rhs) << ',' << shortest(r.abs_err) << ',' << shortest(r.rel_err) << ',' << to_string(r.status)
       << ',' << r.evaluations << '\n';
  }
}

void write_text(std::ostream& os, const VerificationReport& report) {
  os << "grv " << report.version << "  seed " << report.seed << "  rel_pass " << text_number(report.tolerances.rel_pass)
     << "  abs_floor " << text_number(report.tolerances.abs_floor) << '\n';
  for (const auto& r : report.records) {
    std::string params;
    for (const auto& [name, value] : r.params.values()) {
      params += (params.empty() ? "" : ",") + name + "=" + text_number(value);
    }
    os << r.entry_id << "  [" << params << "]  lhs " << text_number(r.lhs) << "  rhs " << text_number(r.rhs)
       << "  abs_err " << text_number(r.abs_err) << "  rel_err " << text_number(r.rel_err) << "  "
       << to_string(r.status) << "  evals " << r.evaluations << '\n';
  }
  const Summary& s = report.summary;
  os << "summary: pass " << s.pass << ", fail " << s.fail << ", quad_no_converge " << s.quad_no_converge
     << ", skipped " << s.skipped << '\n';
}

void write_report(std::ostream& os, const VerificationReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::text:
      write_text(os, report);
      break;
    case OutputFormat::json:
      write_json(os, report);
      break;
    case OutputFormat::csv:
      write_csv(os, report);
      break;
  }
}

}  // namespace grv
