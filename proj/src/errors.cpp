#include "grv/errors.hpp"

#include <sstream>

namespace grv {
namespace {

std::string non_finite_message(double where, double value) {
  std::ostringstream os;
  os.precision(17);
  os << "non-finite sample " << value << " at x = " << where;
  return os.str();
}

}  // namespace

NonFiniteSampleError::NonFiniteSampleError(double where, double value)
    : std::runtime_error(non_finite_message(where, value)), where_(where), value_(value) {}

UnknownIdError::UnknownIdError(const std::string& id, const std::string& suggestions)
    : std::out_of_range("unknown identity id '" + id + "'" +
                        (suggestions.empty() ? std::string() : "; did you mean: " + suggestions)),
      suggestions_(suggestions) {}

}  // namespace grv
