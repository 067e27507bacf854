#pragma once

#include <limits>

#include "fedcomp/types.hpp"

namespace fedcomp {

enum class RegKind { Zero, L1, Nuclear };

//! Decomposable norm regularizer with its dual norm and subspace constant.
//!
//! L1 applies entrywise (vectors or matrices); Nuclear requires a matrix.
//! `subspace_dim` is s (sparsity) for L1 and r* (rank) for Nuclear; the
//! subspace constant is sqrt(subspace_dim) for both, and 1 for Zero by
//! convention (never used in a schedule).
class Regularizer {
 public:
  Regularizer() = default;  // Zero

  static Regularizer zero() { return Regularizer(); }
  static Regularizer l1(int subspace_dim) {
    return Regularizer(RegKind::L1, subspace_dim);
  }
  static Regularizer nuclear(int subspace_dim) {
    return Regularizer(RegKind::Nuclear, subspace_dim);
  }

  RegKind kind() const { return kind_; }
  int subspace_dim() const { return subspace_dim_; }

  double norm(const ModelParam& w) const;
  double dual_norm(const ModelParam& w) const;
  double subspace_constant() const;

 private:
  Regularizer(RegKind kind, int subspace_dim);

  RegKind kind_ = RegKind::Zero;
  int subspace_dim_ = 1;
};

//! Euclidean/Frobenius ball constraint ||w||_2 <= radius; +inf = unconstrained.
struct DomainSpec {
  double radius = std::numeric_limits<double>::infinity();

  bool bounded() const { return std::isfinite(radius); }
  void validate() const {
    if (!(radius > 0)) throw ConfigError("DomainSpec: radius must be positive");
  }
};

//! Singular values of a matrix-shaped parameter, descending.
Eigen::VectorXd singular_values(const ModelParam& w);

const char* reg_kind_name(RegKind kind);
RegKind reg_kind_from_name(const std::string& name);

}  // namespace fedcomp
