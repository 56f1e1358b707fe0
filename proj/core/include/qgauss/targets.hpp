#pragma once

#include <vector>

#include "qgauss/gaussian.hpp"
#include "qgauss/group_target.hpp"
#include "qgauss/words.hpp"

namespace qg {

/// Generating set X and centered relation family Y certifying (via the
/// finite vanishing test) that a Gaussian functional descends to the target
/// quotient of the ambient free unitary group.
struct RelationSet {
  std::vector<Letter> generators;   // all u_ij and u_ij*
  std::vector<Element> relations;   // each in ker ε
};

RelationSet relation_set(const GroupTarget& target);

/// J = [[0, I_n], [-I_n, 0]] of size 2n.
ComplexMatrix symplectic_form(int n);

/// Target-specific matrix conditions on (L_r, H); the free unitary target
/// imposes nothing beyond base validation.
std::vector<CheckResult> matrix_conditions(const GaussianSpec& spec,
                                           const GroupTarget& target,
                                           double tol = kDefaultTol);

/// Finite sweep 0 = φ(y) = φ(xy) = φ(yx) over the relation set; `f` must be
/// cooked over fundamental letters (cook_ambient).
bool ideal_vanishing_check(const CookedFunctional& f, const GroupTarget& target,
                           double tol = kDefaultTol);

}  // namespace qg
