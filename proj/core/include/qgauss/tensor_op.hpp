#pragma once

#include <stdexcept>
#include <vector>

#include "qgauss/linalg.hpp"

namespace qg {

/// Element W of M_n ⊗ M_n stored by basis coefficients:
/// W = Σ w[a][b][c][d] e_ab ⊗ e_cd  (indices 0-based internally).
/// The basis-coefficient convention is the only storage convention;
/// matrix-entry views are derived.
struct TensorOperator {
  int n = 0;
  std::vector<Complex> w;

  TensorOperator() = default;
  explicit TensorOperator(int size) : n(size), w(size_t(size) * size * size * size) {}

  Complex& at(int a, int b, int c, int d) {
    return w[((size_t(a) * n + b) * n + c) * n + d];
  }
  Complex at(int a, int b, int c, int d) const {
    return w[((size_t(a) * n + b) * n + c) * n + d];
  }
};

TensorOperator tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Σ_r L_r ⊗ L_r*
TensorOperator cp_sum(const std::vector<ComplexMatrix>& ls, int n);

/// M with M[a][d] = Σ_b w[a][b][b][d]; sends A⊗B to the product AB.
ComplexMatrix mult_map(const TensorOperator& w);

/// Tensor flip: Σ(W)[a][b][c][d] = w[c][d][a][b].
TensorOperator flip(const TensorOperator& w);

/// n²×n² matrix Q with row (i,k), column (j,l) lexicographic,
/// Q[(i,k)][(j,l)] = w[k][i][j][l].
ComplexMatrix choi_form(const TensorOperator& w);

struct PsdResult {
  bool psd = false;
  double min_eig = 0.0;
};

/// Rejects with std::invalid_argument when Q is not hermitian within tol.
PsdResult psd_check(const ComplexMatrix& q, double tol);

struct NotPositiveError : std::runtime_error {
  double min_eig;
  explicit NotPositiveError(double m)
      : std::runtime_error("tensor operator has a non-positive Choi form"),
        min_eig(m) {}
};

/// Kraus family L_1..L_d from the Choi eigendecomposition; eigenvalues below
/// tol·max(λ_max, 1) are dropped. Throws NotPositiveError on PSD failure.
std::vector<ComplexMatrix> kraus_extract(const TensorOperator& w, double tol);

/// result[a][d] = Σ_{b,c} w[a][b][c][d] Z[b][c]; for W = Σ L_r⊗L_r* this is
/// the channel Z ↦ Σ L_r Z L_r*.
ComplexMatrix apply_cp_map(const TensorOperator& w, const ComplexMatrix& z);

double max_abs_diff(const TensorOperator& a, const TensorOperator& b);

}  // namespace qg
