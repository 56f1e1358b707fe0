#include "qgauss/gaussian.hpp"

#include <cmath>

#include "qgauss/targets.hpp"

namespace qg {

std::string ValidationError::describe(const ValidationReport& r) {
  std::string msg = "validation failed:";
  for (const auto& c : r.checks)
    if (!c.pass) msg += " " + c.name + " (residual " + std::to_string(c.residual) + ")";
  return msg;
}

ValidationReport validate_base(const GaussianSpec& spec, double tol) {
  ValidationReport report;
  const int m = spec.ambient_dim();
  bool shapes_ok = spec.H.rows() == m && spec.H.cols() == m;
  for (const auto& l : spec.L)
    shapes_ok = shapes_ok && l.rows() == m && l.cols() == m;
  report.checks.push_back({"shapes", shapes_ok, 0.0});
  if (!shapes_ok) return report;

  double herm = antihermitian_residual(spec.H);
  report.checks.push_back({"drift_antihermitian", herm <= tol, herm});

  // Gram matrices of the cocycle on rows/columns of U; equality of
  // Σ L_r L_r* and Σ L_r* L_r expressed as B = B̃^t.
  ComplexMatrix b = ComplexMatrix::Zero(m, m);
  ComplexMatrix bt = ComplexMatrix::Zero(m, m);
  for (const auto& l : spec.L) {
    b += (l * l.adjoint()).transpose();
    bt += l.adjoint() * l;
  }
  double res = max_abs(b - bt.transpose());
  report.checks.push_back({"cocycle_admissible", res <= tol, res});
  return report;
}

ValidationReport validate(const GaussianSpec& spec, double tol) {
  ValidationReport report = validate_base(spec, tol);
  if (!report.all_pass()) return report;
  for (auto& c : matrix_conditions(spec, spec.target, tol))
    report.checks.push_back(std::move(c));
  return report;
}

int CookedFunctional::letter_index(const Letter& l) const {
  if (l.group != group_letters())
    throw std::invalid_argument("letter kind does not match functional target");
  if (l.i < 1 || l.i > dim || (!l.group && (l.j < 1 || l.j > dim)))
    throw std::out_of_range("letter index out of range");
  if (l.group) return (l.i - 1) * 2 + (l.star ? 1 : 0);
  return ((l.i - 1) * dim + (l.j - 1)) * 2 + (l.star ? 1 : 0);
}

namespace {

Letter cooked_letter_at(const CookedFunctional& f, int idx) {
  if (f.group_letters()) return group_gen(idx / 2 + 1, idx % 2 == 1);
  int star = idx % 2;
  int ij = idx / 2;
  return fundamental(ij / f.dim + 1, ij % f.dim + 1, star == 1);
}

CookedFunctional cook_tables(const GaussianSpec& spec, bool group_letters) {
  const int m = spec.ambient_dim();
  const int d = spec.cocycle_dim();

  CookedFunctional f;
  f.target = group_letters ? spec.target
                           : GroupTarget{GroupTarget::Kind::u_plus, m};
  f.dim = m;
  f.d = d;

  ComplexMatrix gamma = ComplexMatrix::Zero(m, m);
  for (const auto& l : spec.L) gamma -= 0.5 * (l.adjoint() * l);
  ComplexMatrix h = (spec.H - spec.H.adjoint()) / 2.0;  // exact anti-hermitian
  ComplexMatrix phi1 = gamma + h;

  const int letters = group_letters ? 2 * m : 2 * m * m;
  f.first_order.resize(letters);
  f.eta.assign(letters, ComplexVector::Zero(d));
  for (int idx = 0; idx < letters; ++idx) {
    Letter l = group_letters ? group_gen(idx / 2 + 1, idx % 2 == 1)
                             : cooked_letter_at(f, idx);
    int i = l.i - 1;
    int j = (l.group ? l.i : l.j) - 1;
    ComplexVector eta(d);
    if (!l.star) {
      for (int r = 0; r < d; ++r) eta[r] = spec.L[r](i, j);
      f.first_order[idx] = phi1(i, j);
    } else {
      // η∘S = −η together with S(u_ij) = u_ji*; φ(x*) = conj(φ(x)).
      for (int r = 0; r < d; ++r) eta[r] = -spec.L[r](j, i);
      f.first_order[idx] = std::conj(phi1(i, j));
    }
    f.eta[idx] = std::move(eta);
  }

  f.pair_kernel.resize(letters, letters);
  for (int a = 0; a < letters; ++a) {
    // ∂φ(a⊗b) = ⟨η(a*), η(b)⟩, conjugate-linear in the first slot.
    int astar = (a % 2 == 0) ? a + 1 : a - 1;
    for (int b = 0; b < letters; ++b)
      f.pair_kernel(a, b) = f.eta[astar].dot(f.eta[b]);
  }
  return f;
}

}  // namespace

CookedFunctional cook(const GaussianSpec& spec, double tol) {
  ValidationReport report = validate(spec, tol);
  if (!report.all_pass()) throw ValidationError(std::move(report));
  return cook_tables(spec, spec.target.is_free_group());
}

CookedFunctional cook_ambient(const GaussianSpec& spec, double tol) {
  ValidationReport report = validate_base(spec, tol);
  if (!report.all_pass()) throw ValidationError(std::move(report));
  return cook_tables(spec, false);
}

Complex eval_phi(const CookedFunctional& f, const Word& w) {
  const size_t n = w.size();
  if (n == 0) return 0.0;
  std::vector<Complex> eps(n);
  std::vector<int> idx(n);
  for (size_t a = 0; a < n; ++a) {
    eps[a] = counit(w[a]);
    idx[a] = f.letter_index(w[a]);
  }
  // Two-sum closed form from vanishing on triple products of centered
  // elements: single-letter values plus the pair kernel.
  Complex out = 0.0;
  for (size_t a = 0; a < n; ++a) {
    Complex prod = 1.0;
    for (size_t b = 0; b < n; ++b)
      if (b != a) prod *= eps[b];
    if (prod != 0.0) out += prod * f.first_order[idx[a]];
  }
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b) {
      Complex prod = 1.0;
      for (size_t c = 0; c < n; ++c)
        if (c != a && c != b) prod *= eps[c];
      if (prod != 0.0) out += prod * f.pair_kernel(idx[a], idx[b]);
    }
  return out;
}

Complex eval_phi(const CookedFunctional& f, const Element& x) {
  Complex out = 0.0;
  for (const auto& [w, c] : x) out += c * eval_phi(f, w);
  return out;
}

ComplexVector eval_eta(const CookedFunctional& f, const Element& x) {
  ComplexVector out = ComplexVector::Zero(f.d);
  for (const auto& [w, coeff] : x) {
    for (size_t a = 0; a < w.size(); ++a) {
      Complex prod = coeff;
      for (size_t b = 0; b < w.size(); ++b)
        if (b != a) prod *= counit(w[b]);
      if (prod != 0.0) out += prod * f.eta[f.letter_index(w[a])];
    }
  }
  return out;
}

Complex coboundary(const CookedFunctional& f, const Element& a,
                   const Element& b) {
  return eval_phi(f, mul(a, b)) - counit(a) * eval_phi(f, b) -
         eval_phi(f, a) * counit(b);
}

GaussianSpec from_WH(const TensorOperator& w, const ComplexMatrix& h,
                     GroupTarget target, double tol) {
  if (w.n != target.ambient_dim() || h.rows() != w.n || h.cols() != w.n)
    throw std::invalid_argument("from_WH: shape mismatch with target");
  double herm = antihermitian_residual(h);
  if (herm > tol)
    throw WHRejection(WHRejection::Reason::drift_not_antihermitian, herm,
                      "from_WH: H not anti-hermitian, residual " +
                          std::to_string(herm));
  double mres = max_abs(mult_map(w) - mult_map(flip(w)));
  if (mres > tol)
    throw WHRejection(WHRejection::Reason::mult_map_mismatch, mres,
                      "from_WH: M(W) != M(Σ(W)), residual " +
                          std::to_string(mres));
  std::vector<ComplexMatrix> ls;
  try {
    ls = kraus_extract(w, tol);
  } catch (const NotPositiveError& e) {
    throw WHRejection(WHRejection::Reason::not_positive, e.min_eig,
                      "from_WH: Choi form not positive, min eigenvalue " +
                          std::to_string(e.min_eig));
  }
  GaussianSpec spec{target, std::move(ls), (h - h.adjoint()) / 2.0};
  ValidationReport report = validate_base(spec, std::max(tol, 1e-8));
  if (!report.all_pass()) throw ValidationError(std::move(report));
  return spec;
}

std::pair<TensorOperator, ComplexMatrix> to_WH(const GaussianSpec& spec,
                                               double tol) {
  CookedFunctional f = cook_ambient(spec, tol);
  const int m = spec.ambient_dim();
  ComplexMatrix h(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Complex phi_ij = f.first_order[f.letter_index(fundamental(i + 1, j + 1))];
      Complex phi_ji_star =
          f.first_order[f.letter_index(fundamental(j + 1, i + 1, true))];
      h(i, j) = 0.5 * (phi_ij - phi_ji_star);
    }
  return {cp_sum(spec.L, m), std::move(h)};
}

GaussianSpec canonicalize(const GaussianSpec& spec, double tol) {
  auto [w, h] = to_WH(spec, tol);
  return from_WH(w, h, spec.target, tol);
}

ComplexMatrix gram(const CookedFunctional& f, const std::vector<Element>& elems,
                   double tol) {
  for (const auto& e : elems)
    if (std::abs(counit(e)) > tol)
      throw std::invalid_argument("gram: input element is not centered");
  const int n = int(elems.size());
  ComplexMatrix g(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g(a, b) = eval_phi(f, mul(star(elems[a]), elems[b]));
  return g;
}

bool is_driftless(const GaussianSpec& spec, double tol) {
  if (spec.target.is_free_group())
    throw std::invalid_argument("is_driftless: matrix targets only");
  CookedFunctional f = cook_ambient(spec, tol);
  const int m = spec.ambient_dim();
  for (int j = 1; j <= m; ++j)
    for (int k = 1; k <= m; ++k) {
      Complex diff = f.first_order[f.letter_index(fundamental(j, k))] -
                     f.first_order[f.letter_index(fundamental(k, j, true))];
      if (std::abs(diff) > tol) return false;
    }
  return true;
}

GaussianSpec from_free_group_data(int n, const std::vector<ComplexVector>& v,
                                  const std::vector<Complex>& alpha,
                                  double tol) {
  if (int(v.size()) != n || int(alpha.size()) != n)
    throw std::invalid_argument("from_free_group_data: need n vectors and n scalars");
  for (const auto& a : alpha)
    if (std::abs(a.real()) > tol)
      throw std::invalid_argument("from_free_group_data: alpha must be purely imaginary");
  int d = v.empty() ? 0 : int(v.front().size());
  for (const auto& vec : v)
    if (int(vec.size()) != d)
      throw std::invalid_argument("from_free_group_data: inconsistent vector dimensions");

  GaussianSpec spec;
  spec.target = {GroupTarget::Kind::free_group, n};
  spec.H = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) spec.H(i, i) = Complex(0.0, alpha[i].imag());
  spec.L.assign(d, ComplexMatrix::Zero(n, n));
  for (int r = 0; r < d; ++r)
    for (int i = 0; i < n; ++i) spec.L[r](i, i) = v[i][r];
  return spec;
}

}  // namespace qg
