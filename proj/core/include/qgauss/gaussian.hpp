#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qgauss/group_target.hpp"
#include "qgauss/tensor_op.hpp"
#include "qgauss/words.hpp"

namespace qg {

/// Classification data of a Gaussian functional: cocycle matrices L_1..L_d
/// (carrier ℂ^d) and an anti-hermitian drift matrix H. All matrices have the
/// target's fundamental dimension (2N for the symplectic target).
struct GaussianSpec {
  GroupTarget target;
  std::vector<ComplexMatrix> L;
  ComplexMatrix H;

  int ambient_dim() const { return target.ambient_dim(); }
  int cocycle_dim() const { return int(L.size()); }
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double residual = 0.0;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Base checks (shapes, H anti-hermitian, Σ L*L = Σ LL* via the two Gram
/// matrices) followed by the target-specific matrix conditions.
ValidationReport validate(const GaussianSpec& spec, double tol = kDefaultTol);

/// Base checks only; what evaluation well-definedness actually needs.
ValidationReport validate_base(const GaussianSpec& spec,
                               double tol = kDefaultTol);

struct ValidationError : std::runtime_error {
  ValidationReport report;
  explicit ValidationError(ValidationReport r)
      : std::runtime_error(describe(r)), report(std::move(r)) {}
  static std::string describe(const ValidationReport& r);
};

/// Evaluation tables: first-order values, cocycle vectors, and the pair
/// kernel ∂φ on all letter pairs.
class CookedFunctional {
 public:
  GroupTarget target;
  int dim = 0;  // fundamental dimension (or generator count for free groups)
  int d = 0;    // cocycle dimension

  std::vector<Complex> first_order;
  std::vector<ComplexVector> eta;
  ComplexMatrix pair_kernel;

  bool group_letters() const { return target.is_free_group(); }
  int num_letters() const { return group_letters() ? 2 * dim : 2 * dim * dim; }
  int letter_index(const Letter& l) const;
};

/// Evaluation tables in the letters native to the target (group letters for
/// the free-group dual, fundamental letters otherwise). Requires validate().
CookedFunctional cook(const GaussianSpec& spec, double tol = kDefaultTol);

/// Tables over fundamental letters u_ij regardless of target (the ambient
/// free unitary picture); requires base validation only.
CookedFunctional cook_ambient(const GaussianSpec& spec,
                              double tol = kDefaultTol);

Complex eval_phi(const CookedFunctional& f, const Element& x);
Complex eval_phi(const CookedFunctional& f, const Word& w);
ComplexVector eval_eta(const CookedFunctional& f, const Element& x);

/// ∂φ(a⊗b) = φ(ab) − ε(a)φ(b) − φ(a)ε(b).
Complex coboundary(const CookedFunctional& f, const Element& a,
                   const Element& b);

struct WHRejection : std::runtime_error {
  enum class Reason { drift_not_antihermitian, mult_map_mismatch, not_positive };
  Reason reason;
  double residual;
  WHRejection(Reason r, double res, const std::string& msg)
      : std::runtime_error(msg), reason(r), residual(res) {}
};

/// Builds a spec from (W, H): checks H anti-hermitian, M(W) = M(Σ(W)) and
/// Choi positivity, then extracts a canonical Kraus family.
GaussianSpec from_WH(const TensorOperator& w, const ComplexMatrix& h,
                     GroupTarget target, double tol = kDefaultTol);

/// H_ij = ½(φ(u_ij) − φ(u_ji*)), W = Σ L_r⊗L_r*.
std::pair<TensorOperator, ComplexMatrix> to_WH(const GaussianSpec& spec,
                                               double tol = kDefaultTol);

/// Canonical linearly independent form via the (W, H) round trip.
GaussianSpec canonicalize(const GaussianSpec& spec, double tol = kDefaultTol);

/// Gram matrix G[m][n] = φ(e_m* e_n) on counit-kernel elements; rejects
/// non-centered input.
ComplexMatrix gram(const CookedFunctional& f, const std::vector<Element>& elems,
                   double tol = kDefaultTol);

/// True iff φ vanishes on span{u_jk − u_kj*}; equivalently H = 0.
bool is_driftless(const GaussianSpec& spec, double tol = kDefaultTol);

/// Diagonal spec realizing η(g_i) = v_i, φ(g_i) = α_i − ½‖v_i‖² on the
/// free-group dual. The α_i must be purely imaginary.
GaussianSpec from_free_group_data(int n, const std::vector<ComplexVector>& v,
                                  const std::vector<Complex>& alpha,
                                  double tol = kDefaultTol);

}  // namespace qg
