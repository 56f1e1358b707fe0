#include "qgauss/linalg.hpp"

#include <Eigen/Eigenvalues>

namespace qg {

HermitianEigs hermitian_eigs(const ComplexMatrix& q) {
  ComplexMatrix sym = (q + q.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  const auto& vals = solver.eigenvalues();   // ascending
  const auto& vecs = solver.eigenvectors();
  const Eigen::Index n = vals.size();
  HermitianEigs out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index s = 0; s < n; ++s) {
    Eigen::Index src = n - 1 - s;
    out.values[s] = vals[src];
    ComplexVector v = vecs.col(src);
    for (Eigen::Index k = 0; k < n; ++k) {
      if (std::abs(v[k]) > 1e-12) {
        v *= std::conj(v[k]) / std::abs(v[k]);
        break;
      }
    }
    out.vectors.col(s) = v;
  }
  return out;
}

}  // namespace qg
