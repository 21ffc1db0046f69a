#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nlb/format.hpp"

namespace nlb {

/// Names of the built-in examples, in listing order.
std::vector<std::string> catalog_names();

/// Source text of a built-in example; throws UsageError for unknown names.
std::string_view catalog_source(std::string_view name);

/// Parsed built-in example.
SpecFile catalog(std::string_view name);

}  // namespace nlb
