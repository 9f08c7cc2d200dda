#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "grv/verifier.hpp"

namespace grv {

enum class OutputFormat { text, json, csv };

/// Accepts "text", "json", "csv"; throws std::invalid_argument otherwise.
OutputFormat parse_format(std::string_view name);

/// JSON string literal with escapes.
std::string json_quote(std::string_view s);
/// Shortest round-trip number, or null when not finite.
std::string json_number(double v);
/// {"symbol": number, ...} in symbol order.
std::string params_json(const ParameterAssignment& params);

/// Field order: version, seed, tolerances, records, summary.
void write_json(std::ostream& os, const VerificationReport& report);
/// Columns: id, param_json, lhs, rhs, abs_err, rel_err, status, evaluations.
void write_csv(std::ostream& os, const VerificationReport& report);
/// One line per record, 15 significant digits, then the summary.
void write_text(std::ostream& os, const VerificationReport& report);
void write_report(std::ostream& os, const VerificationReport& report, OutputFormat format);

/// CSV field quoting per RFC 4180.
std::string csv_field(std::string_view s);

}  // namespace grv
