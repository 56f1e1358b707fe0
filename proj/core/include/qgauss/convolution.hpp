#pragma once

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "qgauss/gaussian.hpp"
#include "qgauss/words.hpp"

namespace qg {

/// Evaluable linear functional on the word algebra: a cooked Gaussian, the
/// counit, a coordinate functional, or a finite combination.
class WordFunctional {
 public:
  static WordFunctional counit_functional();
  static WordFunctional coordinate(Word w);
  static WordFunctional from_cooked(CookedFunctional f);
  static WordFunctional combination(
      std::vector<std::pair<Complex, WordFunctional>> parts);

  Complex operator()(const Element& x) const { return eval_(x); }
  Complex operator()(const Word& w) const { return eval_(element(w)); }

 private:
  explicit WordFunctional(std::function<Complex(const Element&)> f)
      : eval_(std::move(f)) {}
  std::function<Complex(const Element&)> eval_;
};

/// (f ∗ g)(x) = (f ⊗ g)(Δx); n is the fundamental index range.
Complex convolve(const WordFunctional& f, const WordFunctional& g,
                 const Element& x, int n, size_t guard = kCoproductGuard);

/// Matrix of D_H∗D_K − D_K∗D_H on the generators; equals the commutator
/// [H, K]. Inputs must be anti-hermitian.
ComplexMatrix drift_bracket(const ComplexMatrix& h, const ComplexMatrix& k,
                            double tol = kDefaultTol);

/// Order-k truncation Σ_{m≤k} t^m/m! · f^{∗m}(x), with f^{∗0} = ε.
Complex conv_exp(const CookedFunctional& f, const Element& x, double t,
                 int order, size_t guard = kCoproductGuard);

}  // namespace qg
