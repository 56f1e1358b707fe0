#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// here deliberately avoid the library's closed-form evaluation path so the
// two implementations check each other.

#include <random>

#include "qgauss/centrality.hpp"
#include "qgauss/convolution.hpp"
#include "qgauss/random.hpp"
#include "qgauss/targets.hpp"
#include "qgauss/wordlang.hpp"

namespace qgtest {

using namespace qg;

// N=2, d=1, L = [[0,1],[-1,0]], H = 0; passes every o_plus check.
inline GaussianSpec running_spec() {
  GaussianSpec spec;
  spec.target = {GroupTarget::Kind::o_plus, 2};
  ComplexMatrix l(2, 2);
  l << 0.0, 1.0, -1.0, 0.0;
  spec.L.push_back(l);
  spec.H = ComplexMatrix::Zero(2, 2);
  return spec;
}

// Independent evaluation oracle: the three-factor recursion
//   φ(abc) = φ(ab)ε(c) + φ(ac)ε(b) + φ(bc)ε(a)
//          − φ(a)ε(bc) − φ(b)ε(ac) − φ(c)ε(ab)
// peeled letter by letter, with the degree ≤ 2 tables as base cases.
inline Complex recursion_phi(const CookedFunctional& f, const Word& w) {
  if (w.empty()) return 0.0;
  if (w.size() == 1) return f.first_order[f.letter_index(w[0])];
  if (w.size() == 2) {
    Complex pair = f.pair_kernel(f.letter_index(w[0]), f.letter_index(w[1]));
    return pair + counit(w[0]) * f.first_order[f.letter_index(w[1])] +
           f.first_order[f.letter_index(w[0])] * counit(w[1]);
  }
  Word a{w[0]}, b{w[1]}, c(w.begin() + 2, w.end());
  auto cat = [](const Word& x, const Word& y) {
    Word out = x;
    out.insert(out.end(), y.begin(), y.end());
    return out;
  };
  return recursion_phi(f, cat(a, b)) * counit(c) +
         recursion_phi(f, cat(a, c)) * counit(b) +
         recursion_phi(f, cat(b, c)) * counit(a) -
         recursion_phi(f, a) * counit(cat(b, c)) -
         recursion_phi(f, b) * counit(cat(a, c)) -
         recursion_phi(f, c) * counit(cat(a, b));
}

inline Letter random_fundamental(int n, Rng& rng) {
  int i = int(rng() % uint64_t(n)) + 1;
  int j = int(rng() % uint64_t(n)) + 1;
  return fundamental(i, j, rng() % 2 == 1);
}

inline Letter random_letter_for(const CookedFunctional& f, Rng& rng) {
  if (f.group_letters())
    return group_gen(int(rng() % uint64_t(f.dim)) + 1, rng() % 2 == 1);
  return random_fundamental(f.dim, rng);
}

inline Word random_word_for(const CookedFunctional& f, int max_len, Rng& rng) {
  int len = int(rng() % uint64_t(max_len + 1));
  Word w;
  for (int k = 0; k < len; ++k) w.push_back(random_letter_for(f, rng));
  return w;
}

inline Element centered(const Element& x) {
  return sub(x, scale(counit(x), unit_element()));
}

inline Element random_element(int n, int max_len, int max_terms, Rng& rng,
                              bool group = false) {
  Element out;
  int terms = int(rng() % uint64_t(max_terms)) + 1;
  for (int t = 0; t < terms; ++t) {
    int len = int(rng() % uint64_t(max_len + 1));
    Word w;
    for (int k = 0; k < len; ++k) {
      if (group)
        w.push_back(group_gen(int(rng() % uint64_t(n)) + 1, rng() % 2 == 1));
      else
        w.push_back(random_fundamental(n, rng));
    }
    add_term(out, w, std_complex_normal(rng));
  }
  return out;
}

inline GroupTarget make_target(GroupTarget::Kind kind, int n) {
  return {kind, n};
}

}  // namespace qgtest
