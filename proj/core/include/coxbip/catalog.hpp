#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coxbip/coxeter_matrix.hpp"

namespace coxbip {

struct CatalogEntry {
  std::string name;
  std::string source;  // raw JSON document
};

/// Fixtures compiled into the library, sorted by name.
std::vector<CatalogEntry> catalog_entries();
std::vector<std::string> catalog_names();

/// Raw document of a fixture; throws InvalidArgument for unknown names.
std::string catalog_source(std::string_view name);
CoxeterMatrix catalog_matrix(std::string_view name);

/// Reads either "catalog:NAME" or a file path. Throws Error on I/O failure.
std::string load_input_text(const std::string& source);
CoxeterMatrix load_input(const std::string& source);

}  // namespace coxbip
