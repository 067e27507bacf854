#include "fedcomp/types.hpp"

#include <sstream>

namespace fedcomp {

std::string shape_string(const ModelParam& p) {
  std::ostringstream os;
  if (p.is_vector()) {
    os << "vector(" << p.rows() << ")";
  } else {
    os << "matrix(" << p.rows() << "x" << p.cols() << ")";
  }
  return os.str();
}

void ModelParam::require_same_shape(const ModelParam& o, const char* op) const {
  if (!same_shape(o)) {
    throw ShapeError(std::string(op) + ": shape mismatch, " + shape_string(*this) +
                     " vs " + shape_string(o));
  }
}

void ModelParam::require_finite(const char* context) const {
  if (!all_finite()) {
    throw Error(std::string(context) + ": non-finite entries in " +
                shape_string(*this));
  }
}

}  // namespace fedcomp
