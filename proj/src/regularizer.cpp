#include "fedcomp/regularizer.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace fedcomp {

Regularizer::Regularizer(RegKind kind, int subspace_dim)
    : kind_(kind), subspace_dim_(subspace_dim) {
  if (subspace_dim_ <= 0) {
    throw ConfigError("Regularizer: subspace_dim must be positive");
  }
}

Eigen::VectorXd singular_values(const ModelParam& w) {
  if (w.is_vector()) {
    throw ShapeError("singular_values: requires a matrix, got " + shape_string(w));
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(w.values());
  if (svd.info() != Eigen::Success) {
    throw SolverError("singular_values: SVD failed on " + shape_string(w));
  }
  return svd.singularValues();
}

double Regularizer::norm(const ModelParam& w) const {
  switch (kind_) {
    case RegKind::Zero:
      return 0.0;
    case RegKind::L1:
      return w.l1_norm();
    case RegKind::Nuclear:
      return singular_values(w).sum();
  }
  throw Error("Regularizer::norm: unknown kind");
}

double Regularizer::dual_norm(const ModelParam& w) const {
  switch (kind_) {
    case RegKind::Zero:
      return 0.0;
    case RegKind::L1:
      return w.linf_norm();
    case RegKind::Nuclear: {
      Eigen::VectorXd sv = singular_values(w);
      return sv.size() == 0 ? 0.0 : sv(0);
    }
  }
  throw Error("Regularizer::dual_norm: unknown kind");
}

double Regularizer::subspace_constant() const {
  if (kind_ == RegKind::Zero) return 1.0;
  return std::sqrt(static_cast<double>(subspace_dim_));
}

const char* reg_kind_name(RegKind kind) {
  switch (kind) {
    case RegKind::Zero: return "zero";
    case RegKind::L1: return "l1";
    case RegKind::Nuclear: return "nuclear";
  }
  return "?";
}

RegKind reg_kind_from_name(const std::string& name) {
  if (name == "zero") return RegKind::Zero;
  if (name == "l1") return RegKind::L1;
  if (name == "nuclear") return RegKind::Nuclear;
  throw ConfigError("unknown regularizer kind: " + name);
}

}  // namespace fedcomp
