#pragma once

#include <string>
#include <vector>

#include "unitlab/spec_dsl.hpp"

namespace unitlab {

struct CatalogEntry {
  std::string label;  // canonical spec text
  GroupSpec spec;
};

// Built-in groups exercising every branch of the recognizer: p = 3 and p = 5
// by default; the order-343 entries for p = 7 appear only when the cap is
// raised above the default.
std::vector<CatalogEntry> builtin_catalog(int p, int cap = kDefaultOrderCap);

}  // namespace unitlab
