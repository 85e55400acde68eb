#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isf {

enum class Errc {
  invalid_input,
  cyclic_input,
  not_increasing,
  not_in_graph,
  size_violation,
  not_a_subset,
  not_in_image,
  bad_degree,
  index_violation,
  non_canonical_cycle,
};

// Stable CamelCase name used in diagnostics and CLI reports.
std::string_view to_string(Errc code) noexcept;

// Every contract violation in the library surfaces as an isf::Error.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace isf
