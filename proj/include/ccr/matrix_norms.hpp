#ifndef CCR_MATRIX_NORMS_HPP
#define CCR_MATRIX_NORMS_HPP

#include <Eigen/Dense>

namespace ccr {

/// Normalized 2-norm sqrt(tr(F^*F)/k), the tracial-state Hilbert-Schmidt
/// norm on a k x k matrix algebra. Rejects non-square input.
double two_norm(const Eigen::MatrixXcd& f);

/// Largest singular value.
double operator_norm(const Eigen::MatrixXcd& f);

/// Sum of singular values.
double trace_norm(const Eigen::MatrixXcd& f);

}  // namespace ccr

#endif
