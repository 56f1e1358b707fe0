#pragma once

#include <string>
#include <vector>

#include "qgauss/gaussian.hpp"

namespace qg {

/// Leg pattern of a mixed character χ of U^{ε₁}⊗…⊗U^{ε_p}; `true` marks a
/// conjugate leg. Text form: "u" per plain leg, "u*" per conjugate leg.
using CharacterPattern = std::vector<bool>;

CharacterPattern parse_pattern(const std::string& text);
std::string pattern_to_string(const CharacterPattern& pattern);

/// The three traces that determine all character moments.
struct CentralParams {
  Complex tr_h;     // Tr(H), purely imaginary
  double tr_mw;     // Σ_r Tr(L_r* L_r) ≥ 0
  double tr_tr_w;   // Σ_r |Tr(L_r)|² ≥ 0
};

CentralParams central_params(const GaussianSpec& spec);

/// Scalar first-order table plus a convolution-commutator sweep against all
/// coordinate functionals on words of length ≤ cutoff.
bool central_check(const CookedFunctional& f, int cutoff = 2,
                   double tol = kDefaultTol);

/// Commutator sweep only (no first-order scalar test); works for any
/// evaluable functional over fundamental letters.
bool central_commutator_sweep(const std::function<Complex(const Element&)>& f,
                              int dim, int cutoff, double tol = kDefaultTol,
                              size_t guard = kCoproductGuard);

/// Brute-force diagonal sum Σ_{j₁..j_p} φ(u^{ε₁}_{j₁j₁} ⋯ u^{ε_p}_{j_pj_p}).
Complex character_moment_direct(const CookedFunctional& f,
                                const CharacterPattern& pattern,
                                size_t guard = kCoproductGuard);

/// Closed form N^{p−1} Σ_a φ₁^{(ε_a)} + N^{p−2} Σ_{a<b} S(ε_a, ε_b) from the
/// degree ≤ 2 tables.
Complex character_moment_closed(const CookedFunctional& f,
                                const CharacterPattern& pattern);

struct MomentRow {
  std::string pattern;
  Complex value;
};

struct MomentTable {
  std::vector<MomentRow> rows;
  Complex c;              // table(p) = c · p·M^{p−1}
  std::string reference;  // "p*M^(p-1)"
};

/// Character moments of a functional valid on the (standard or symplectic)
/// free orthogonal target; proportional to the derivative table p·M^{p−1}
/// with constant c = −Tr(M(W))/2.
MomentTable centralize_table(const GaussianSpec& spec, const GroupTarget& target,
                             int pmax, double tol = kDefaultTol);

/// Central Gaussian lifted from the torus: L₁ = √μ·I (absent when μ = 0),
/// H = iν·I.
GaussianSpec torus_gaussian(int n, double nu, double mu);

}  // namespace qg
