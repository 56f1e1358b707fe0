#include "qgauss/targets.hpp"

#include <cmath>

namespace qg {

std::string target_name(GroupTarget::Kind kind) {
  switch (kind) {
    case GroupTarget::Kind::u_plus: return "u_plus";
    case GroupTarget::Kind::o_plus: return "o_plus";
    case GroupTarget::Kind::sp_plus: return "sp_plus";
    case GroupTarget::Kind::u_classical: return "u_classical";
    case GroupTarget::Kind::torus: return "torus";
    case GroupTarget::Kind::free_group: return "free_group";
  }
  throw std::logic_error("unknown target kind");
}

GroupTarget::Kind target_kind_from_name(const std::string& name) {
  if (name == "u_plus") return GroupTarget::Kind::u_plus;
  if (name == "o_plus") return GroupTarget::Kind::o_plus;
  if (name == "sp_plus") return GroupTarget::Kind::sp_plus;
  if (name == "u_classical") return GroupTarget::Kind::u_classical;
  if (name == "torus") return GroupTarget::Kind::torus;
  if (name == "free_group") return GroupTarget::Kind::free_group;
  throw std::invalid_argument("unknown target name: " + name);
}

ComplexMatrix symplectic_form(int n) {
  ComplexMatrix j = ComplexMatrix::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    j(i, n + i) = 1.0;
    j(n + i, i) = -1.0;
  }
  return j;
}

RelationSet relation_set(const GroupTarget& target) {
  const int m = target.ambient_dim();
  RelationSet out;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      out.generators.push_back(fundamental(i, j));
      out.generators.push_back(fundamental(i, j, true));
    }

  auto u = [](int i, int j, bool st = false) {
    return element(Word{fundamental(i, j, st)});
  };

  switch (target.kind) {
    case GroupTarget::Kind::u_plus:
      break;
    case GroupTarget::Kind::o_plus:
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
          out.relations.push_back(sub(u(i, j), u(i, j, true)));
      break;
    case GroupTarget::Kind::sp_plus: {
      const int n = target.n;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          out.relations.push_back(sub(u(i, j, true), u(i + n, j + n)));
          out.relations.push_back(add(u(i + n, j, true), u(i, j + n)));
        }
      break;
    }
    case GroupTarget::Kind::u_classical:
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
          for (int k = 1; k <= m; ++k)
            for (int l = 1; l <= m; ++l) {
              out.relations.push_back(
                  sub(mul(u(i, j), u(k, l)), mul(u(k, l), u(i, j))));
              out.relations.push_back(sub(mul(u(i, j), u(k, l, true)),
                                          mul(u(k, l, true), u(i, j))));
            }
      break;
    case GroupTarget::Kind::torus:
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
          if (i == j) continue;
          out.relations.push_back(sub(u(i, i), u(j, j)));
          out.relations.push_back(sub(u(i, i, true), u(j, j, true)));
          out.relations.push_back(u(i, j));
          out.relations.push_back(u(i, j, true));
        }
      break;
    case GroupTarget::Kind::free_group:
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
          if (i == j) continue;
          out.relations.push_back(u(i, j));
          out.relations.push_back(u(i, j, true));
        }
      break;
  }
  return out;
}

namespace {

double scalar_residual(const ComplexMatrix& m) {
  Complex mean = m.trace() / double(m.rows());
  return max_abs(m - mean * ComplexMatrix::Identity(m.rows(), m.cols()));
}

double diagonal_residual(const ComplexMatrix& m) {
  ComplexMatrix off = m;
  off.diagonal().setZero();
  return max_abs(off);
}

}  // namespace

std::vector<CheckResult> matrix_conditions(const GaussianSpec& spec,
                                           const GroupTarget& target,
                                           double tol) {
  std::vector<CheckResult> checks;
  auto push = [&](const std::string& name, double residual) {
    checks.push_back({name, residual <= tol, residual});
  };
  const int m = spec.ambient_dim();
  if (m != target.ambient_dim()) {
    checks.push_back({"target_dimension", false, double(std::abs(m - target.ambient_dim()))});
    return checks;
  }

  switch (target.kind) {
    case GroupTarget::Kind::u_plus:
      break;
    case GroupTarget::Kind::o_plus: {
      double anti = 0.0;
      for (const auto& l : spec.L) anti = std::max(anti, antisymmetric_residual(l));
      push("cocycle_antisymmetric", anti);
      ComplexMatrix s = ComplexMatrix::Zero(m, m);
      for (const auto& l : spec.L) s += l.conjugate() * l;
      push("conjugate_product_real", imaginary_part_norm(s));
      push("drift_real", imaginary_part_norm(spec.H));
      push("drift_antisymmetric", antisymmetric_residual(spec.H));
      break;
    }
    case GroupTarget::Kind::sp_plus: {
      ComplexMatrix j = symplectic_form(target.n);
      double lres = 0.0;
      for (const auto& l : spec.L)
        lres = std::max(lres, max_abs(ComplexMatrix(l.transpose()) - j * l * j));
      push("cocycle_symplectic", lres);
      ComplexMatrix mw = ComplexMatrix::Zero(m, m);
      for (const auto& l : spec.L) mw += l * l.adjoint();
      push("mult_map_symplectic", max_abs(j * mw * j + mw.transpose()));
      push("drift_symplectic", max_abs(j * spec.H * j - spec.H.transpose()));
      break;
    }
    case GroupTarget::Kind::u_classical: {
      TensorOperator w = cp_sum(spec.L, m);
      push("flip_invariant", max_abs_diff(w, flip(w)));
      break;
    }
    case GroupTarget::Kind::torus: {
      double lres = 0.0;
      for (const auto& l : spec.L) lres = std::max(lres, scalar_residual(l));
      push("cocycle_scalar", lres);
      push("drift_scalar", scalar_residual(spec.H));
      break;
    }
    case GroupTarget::Kind::free_group: {
      double lres = 0.0;
      for (const auto& l : spec.L) lres = std::max(lres, diagonal_residual(l));
      push("cocycle_diagonal", lres);
      push("drift_diagonal", diagonal_residual(spec.H));
      break;
    }
  }
  return checks;
}

bool ideal_vanishing_check(const CookedFunctional& f, const GroupTarget& target,
                           double tol) {
  if (f.group_letters())
    throw std::invalid_argument(
        "ideal_vanishing_check: needs fundamental-letter tables");
  RelationSet rel = relation_set(target);
  for (const auto& y : rel.relations) {
    if (std::abs(eval_phi(f, y)) > tol) return false;
    for (const auto& x : rel.generators) {
      Element xe = element(Word{x});
      if (std::abs(eval_phi(f, mul(xe, y))) > tol) return false;
      if (std::abs(eval_phi(f, mul(y, xe))) > tol) return false;
    }
  }
  return true;
}

}  // namespace qg
