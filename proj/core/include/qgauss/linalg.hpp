#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace qg {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kDefaultTol = 1e-9;

inline double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double hermitian_residual(const ComplexMatrix& m) {
  return max_abs(m - m.adjoint());
}

inline double antihermitian_residual(const ComplexMatrix& m) {
  return max_abs(m + m.adjoint());
}

inline double antisymmetric_residual(const ComplexMatrix& m) {
  return max_abs(m + m.transpose());
}

inline double imaginary_part_norm(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.imag().cwiseAbs().maxCoeff();
}

/// Eigendecomposition of a hermitian matrix with a reproducible output
/// convention: eigenvalues descending, each eigenvector scaled so that its
/// first component of significant modulus is real and positive.
struct HermitianEigs {
  Eigen::VectorXd values;  // descending
  ComplexMatrix vectors;   // columns match values
};

HermitianEigs hermitian_eigs(const ComplexMatrix& q);

}  // namespace qg
