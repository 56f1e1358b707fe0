#include "qgauss/convolution.hpp"

namespace qg {

WordFunctional WordFunctional::counit_functional() {
  return WordFunctional([](const Element& x) { return counit(x); });
}

WordFunctional WordFunctional::coordinate(Word w) {
  return WordFunctional([w = std::move(w)](const Element& x) -> Complex {
    auto it = x.find(w);
    return it == x.end() ? Complex(0.0) : it->second;
  });
}

WordFunctional WordFunctional::from_cooked(CookedFunctional f) {
  auto shared = std::make_shared<CookedFunctional>(std::move(f));
  return WordFunctional(
      [shared](const Element& x) { return eval_phi(*shared, x); });
}

WordFunctional WordFunctional::combination(
    std::vector<std::pair<Complex, WordFunctional>> parts) {
  return WordFunctional([parts = std::move(parts)](const Element& x) {
    Complex out = 0.0;
    for (const auto& [c, f] : parts) out += c * f(x);
    return out;
  });
}

Complex convolve(const WordFunctional& f, const WordFunctional& g,
                 const Element& x, int n, size_t guard) {
  Complex out = 0.0;
  for (const auto& [w, coeff] : x) {
    for (const auto& t : coproduct(w, n, guard))
      out += coeff * t.coeff * f(element(t.left)) * g(element(t.right));
  }
  return out;
}

ComplexMatrix drift_bracket(const ComplexMatrix& h, const ComplexMatrix& k,
                            double tol) {
  if (antihermitian_residual(h) > tol || antihermitian_residual(k) > tol)
    throw std::invalid_argument("drift_bracket: inputs must be anti-hermitian");
  const int n = int(h.rows());
  GroupTarget u_plus{GroupTarget::Kind::u_plus, n};
  GaussianSpec dh{u_plus, {}, h};
  GaussianSpec dk{u_plus, {}, k};
  WordFunctional fh = WordFunctional::from_cooked(cook(dh, tol));
  WordFunctional fk = WordFunctional::from_cooked(cook(dk, tol));
  ComplexMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Element uij = element(Word{fundamental(i + 1, j + 1)});
      out(i, j) = convolve(fh, fk, uij, n) - convolve(fk, fh, uij, n);
    }
  return out;
}

namespace {

Complex conv_power(const CookedFunctional& f, const Element& x, int m,
                   size_t guard) {
  if (m == 0) return counit(x);
  if (m == 1) return eval_phi(f, x);
  Complex out = 0.0;
  for (const auto& [w, coeff] : x) {
    for (const auto& t : coproduct(w, f.dim, guard))
      out += coeff * t.coeff * eval_phi(f, t.left) *
             conv_power(f, element(t.right), m - 1, guard);
  }
  return out;
}

}  // namespace

Complex conv_exp(const CookedFunctional& f, const Element& x, double t,
                 int order, size_t guard) {
  if (order < 0) throw std::invalid_argument("conv_exp: order must be >= 0");
  Complex out = 0.0;
  double factor = 1.0;
  for (int m = 0; m <= order; ++m) {
    if (m > 0) factor *= t / m;
    out += factor * conv_power(f, x, m, guard);
  }
  return out;
}

}  // namespace qg
