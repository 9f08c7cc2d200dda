#pragma once

#include <vector>

#include "grv/catalog.hpp"

namespace grv::catalog::detail {

std::vector<IdentityEntry> build_entries();

}  // namespace grv::catalog::detail
