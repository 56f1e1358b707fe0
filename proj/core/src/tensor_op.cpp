#include "qgauss/tensor_op.hpp"

#include <cmath>

namespace qg {

TensorOperator tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int n = int(a.rows());
  TensorOperator out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) out.at(i, j, k, l) = a(i, j) * b(k, l);
  return out;
}

TensorOperator cp_sum(const std::vector<ComplexMatrix>& ls, int n) {
  TensorOperator out(n);
  for (const auto& l : ls) {
    ComplexMatrix ladj = l.adjoint();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int m = 0; m < n; ++m) out.at(i, j, k, m) += l(i, j) * ladj(k, m);
  }
  return out;
}

ComplexMatrix mult_map(const TensorOperator& w) {
  ComplexMatrix m = ComplexMatrix::Zero(w.n, w.n);
  for (int a = 0; a < w.n; ++a)
    for (int d = 0; d < w.n; ++d)
      for (int b = 0; b < w.n; ++b) m(a, d) += w.at(a, b, b, d);
  return m;
}

TensorOperator flip(const TensorOperator& w) {
  TensorOperator out(w.n);
  for (int a = 0; a < w.n; ++a)
    for (int b = 0; b < w.n; ++b)
      for (int c = 0; c < w.n; ++c)
        for (int d = 0; d < w.n; ++d) out.at(a, b, c, d) = w.at(c, d, a, b);
  return out;
}

ComplexMatrix choi_form(const TensorOperator& w) {
  const int n = w.n;
  ComplexMatrix q(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) q(i * n + k, j * n + l) = w.at(k, i, j, l);
  return q;
}

PsdResult psd_check(const ComplexMatrix& q, double tol) {
  double herm = hermitian_residual(q);
  if (herm > tol)
    throw std::invalid_argument("psd_check: matrix not hermitian, residual " +
                                std::to_string(herm));
  auto eigs = hermitian_eigs(q);
  double min_eig = eigs.values.size() == 0 ? 0.0 : eigs.values.minCoeff();
  return {min_eig >= -tol, min_eig};
}

std::vector<ComplexMatrix> kraus_extract(const TensorOperator& w, double tol) {
  ComplexMatrix q = choi_form(w);
  PsdResult psd = psd_check(q, tol);
  if (!psd.psd) throw NotPositiveError(psd.min_eig);
  auto eigs = hermitian_eigs(q);
  const int n = w.n;
  double max_eig = eigs.values.size() == 0 ? 0.0 : eigs.values.maxCoeff();
  double cutoff = tol * std::max(max_eig, 1.0);
  std::vector<ComplexMatrix> out;
  for (Eigen::Index s = 0; s < eigs.values.size(); ++s) {
    if (eigs.values[s] <= cutoff) continue;
    double scale = std::sqrt(eigs.values[s]);
    ComplexMatrix l(n, n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) l(k, i) = scale * eigs.vectors(i * n + k, s);
    out.push_back(std::move(l));
  }
  return out;
}

ComplexMatrix apply_cp_map(const TensorOperator& w, const ComplexMatrix& z) {
  if (z.rows() != w.n || z.cols() != w.n)
    throw std::invalid_argument("apply_cp_map: shape mismatch");
  ComplexMatrix out = ComplexMatrix::Zero(w.n, w.n);
  for (int a = 0; a < w.n; ++a)
    for (int d = 0; d < w.n; ++d)
      for (int b = 0; b < w.n; ++b)
        for (int c = 0; c < w.n; ++c) out(a, d) += w.at(a, b, c, d) * z(b, c);
  return out;
}

double max_abs_diff(const TensorOperator& a, const TensorOperator& b) {
  if (a.n != b.n) throw std::invalid_argument("max_abs_diff: size mismatch");
  double m = 0.0;
  for (size_t idx = 0; idx < a.w.size(); ++idx)
    m = std::max(m, std::abs(a.w[idx] - b.w[idx]));
  return m;
}

}  // namespace qg
