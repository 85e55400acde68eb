#include "isf/error.hpp"

namespace isf {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_input: return "InvalidInput";
    case Errc::cyclic_input: return "CyclicInput";
    case Errc::not_increasing: return "NotIncreasing";
    case Errc::not_in_graph: return "NotInGraph";
    case Errc::size_violation: return "SizeViolation";
    case Errc::not_a_subset: return "NotASubset";
    case Errc::not_in_image: return "NotInImage";
    case Errc::bad_degree: return "BadDegree";
    case Errc::index_violation: return "IndexViolation";
    case Errc::non_canonical_cycle: return "NonCanonicalCycle";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace isf
