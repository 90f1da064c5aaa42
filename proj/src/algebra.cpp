// Names for the two algebra kinds.
#include "curvemod/algebra.hpp"

namespace curvemod {

std::string kind_name(AlgebraKind kind) {
  return kind == AlgebraKind::Cubic ? "cubic" : "quadratic";
}

AlgebraKind kind_from_name(const std::string& name) {
  if (name == "quadratic") return AlgebraKind::Quadratic;
  if (name == "cubic") return AlgebraKind::Cubic;
  fail(ErrorCode::InvalidArgument,
       "unknown algebra kind \"" + name + "\" (expected quadratic or cubic)");
}

}  // namespace curvemod
