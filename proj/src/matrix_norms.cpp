#include "ccr/matrix_norms.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "ccr/error.hpp"

namespace ccr {

namespace {

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& f) {
  if (f.rows() <= 32) {
    return Eigen::JacobiSVD<Eigen::MatrixXcd>(f).singularValues();
  }
  return Eigen::BDCSVD<Eigen::MatrixXcd>(f).singularValues();
}

}  // namespace

double two_norm(const Eigen::MatrixXcd& f) {
  if (f.rows() != f.cols()) {
    throw Error("two_norm requires a square matrix");
  }
  if (f.rows() == 0) {
    throw Error("two_norm requires a non-empty matrix");
  }
  return f.norm() / std::sqrt(static_cast<double>(f.rows()));
}

double operator_norm(const Eigen::MatrixXcd& f) {
  if (f.size() == 0) return 0.0;
  return singular_values(f)(0);
}

double trace_norm(const Eigen::MatrixXcd& f) {
  if (f.size() == 0) return 0.0;
  return singular_values(f).sum();
}

}  // namespace ccr
