#pragma once

#include <random>

#include "qgauss/gaussian.hpp"

namespace qg {

using Rng = std::mt19937_64;

double std_normal(Rng& rng);
Complex std_complex_normal(Rng& rng);

ComplexMatrix random_matrix(int n, Rng& rng);
ComplexMatrix random_hermitian(int n, Rng& rng);
ComplexMatrix random_antihermitian(int n, Rng& rng);
ComplexMatrix random_real_antisymmetric(int n, Rng& rng);

/// Haar-ish unitary: QR of a Gaussian matrix with the R diagonal phases
/// absorbed into Q.
ComplexMatrix random_unitary(int n, Rng& rng);

/// L'_s = Σ_r v(r,s) L_r; preserves Σ L*L, Σ LL* and the induced functional
/// when v is unitary.
std::vector<ComplexMatrix> mix_cocycles(const std::vector<ComplexMatrix>& ls,
                                        const ComplexMatrix& v);

/// Random spec passing validate() for the given target: d cocycle matrices
/// plus a drift of the right symmetry class. The symplectic target reads its
/// size from target.n (matrices are 2n×2n).
GaussianSpec random_valid_spec(const GroupTarget& target, int d, Rng& rng);

}  // namespace qg
