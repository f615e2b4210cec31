#include "coxbip/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "coxbip/error.hpp"

namespace coxbip {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& catalog_sources();
}

std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> out;
  for (const auto& [name, text] : detail::catalog_sources()) {
    if (name == "expected") continue;
    out.push_back({std::string(name), std::string(text)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (auto& e : catalog_entries()) out.push_back(e.name);
  return out;
}

std::string catalog_source(std::string_view name) {
  for (const auto& [n, text] : detail::catalog_sources()) {
    if (n == name) return std::string(text);
  }
  throw InvalidArgument("no catalog fixture named '" + std::string(name) + "'");
}

CoxeterMatrix catalog_matrix(std::string_view name) { return parse_coxeter_input(catalog_source(name)); }

std::string load_input_text(const std::string& source) {
  constexpr std::string_view prefix = "catalog:";
  if (source.starts_with(prefix)) return catalog_source(std::string_view(source).substr(prefix.size()));
  std::ifstream in(source, std::ios::binary);
  if (!in) throw Error("cannot open '" + source + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CoxeterMatrix load_input(const std::string& source) { return parse_coxeter_input(load_input_text(source)); }

}  // namespace coxbip
