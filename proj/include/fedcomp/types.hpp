#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace fedcomp {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

//! Incompatible shapes or a shape that the operation does not support.
class ShapeError : public Error {
 public:
  using Error::Error;
};

//! Invalid or inconsistent configuration values.
class ConfigError : public Error {
 public:
  using Error::Error;
};

//! Numerical solver failure (non-convergence, SVD breakdown, ...).
class SolverError : public Error {
 public:
  explicit SolverError(const std::string& what, double residual = 0.0)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

//! Dense optimization variable: either a length-p vector or a p1 x p2 matrix.
//!
//! Vectors are stored as p x 1 matrices. The shape (including the
//! vector/matrix distinction) is fixed at construction; binary operations
//! require identical shapes.
class ModelParam {
 public:
  ModelParam() = default;

  static ModelParam zeros_vector(Eigen::Index p) {
    return ModelParam(Eigen::MatrixXd::Zero(p, 1), true);
  }
  static ModelParam zeros_matrix(Eigen::Index p1, Eigen::Index p2) {
    return ModelParam(Eigen::MatrixXd::Zero(p1, p2), false);
  }
  static ModelParam zeros_like(const ModelParam& other) {
    return ModelParam(Eigen::MatrixXd::Zero(other.rows(), other.cols()),
                      other.is_vector());
  }
  static ModelParam from_vector(Eigen::VectorXd v) {
    return ModelParam(std::move(v), true);
  }
  static ModelParam from_matrix(Eigen::MatrixXd m) {
    return ModelParam(std::move(m), false);
  }

  bool is_vector() const { return is_vector_; }
  Eigen::Index rows() const { return values_.rows(); }
  Eigen::Index cols() const { return values_.cols(); }
  Eigen::Index size() const { return values_.size(); }

  Eigen::MatrixXd& values() { return values_; }
  const Eigen::MatrixXd& values() const { return values_; }

  //! Flat read-only view over the entries (column-major order).
  Eigen::Map<const Eigen::VectorXd> flat() const {
    return Eigen::Map<const Eigen::VectorXd>(values_.data(), values_.size());
  }
  Eigen::Map<Eigen::VectorXd> flat() {
    return Eigen::Map<Eigen::VectorXd>(values_.data(), values_.size());
  }

  double l1_norm() const { return values_.cwiseAbs().sum(); }
  double l2_norm() const { return values_.norm(); }
  double linf_norm() const {
    return values_.size() == 0 ? 0.0 : values_.cwiseAbs().maxCoeff();
  }

  bool same_shape(const ModelParam& o) const {
    return is_vector_ == o.is_vector_ && rows() == o.rows() && cols() == o.cols();
  }
  void require_same_shape(const ModelParam& o, const char* op) const;

  bool all_finite() const { return values_.allFinite(); }
  void require_finite(const char* context) const;

  double dot(const ModelParam& o) const {
    require_same_shape(o, "dot");
    return values_.cwiseProduct(o.values_).sum();
  }

  ModelParam& operator+=(const ModelParam& o) {
    require_same_shape(o, "operator+=");
    values_ += o.values_;
    return *this;
  }
  ModelParam& operator-=(const ModelParam& o) {
    require_same_shape(o, "operator-=");
    values_ -= o.values_;
    return *this;
  }
  ModelParam& operator*=(double s) {
    values_ *= s;
    return *this;
  }

  friend ModelParam operator+(ModelParam a, const ModelParam& b) { return a += b; }
  friend ModelParam operator-(ModelParam a, const ModelParam& b) { return a -= b; }
  friend ModelParam operator*(double s, ModelParam a) { return a *= s; }
  friend ModelParam operator*(ModelParam a, double s) { return a *= s; }

  bool operator==(const ModelParam& o) const {
    return same_shape(o) && values_ == o.values_;
  }

 private:
  ModelParam(Eigen::MatrixXd values, bool is_vector)
      : values_(std::move(values)), is_vector_(is_vector) {}

  Eigen::MatrixXd values_;
  bool is_vector_ = true;
};

std::string shape_string(const ModelParam& p);

}  // namespace fedcomp
