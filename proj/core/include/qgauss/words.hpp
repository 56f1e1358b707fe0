#pragma once

#include <compare>
#include <map>
#include <vector>

#include "qgauss/linalg.hpp"

namespace qg {

/// Generator letter: either a fundamental coefficient u_ij (possibly starred)
/// or a free-group generator g_i (possibly inverted, stored in `star`).
struct Letter {
  bool group = false;
  int i = 1;  // 1-based
  int j = 1;  // unused for group letters (kept at 1)
  bool star = false;

  auto operator<=>(const Letter&) const = default;
};

inline Letter fundamental(int i, int j, bool star = false) {
  return Letter{false, i, j, star};
}
inline Letter group_gen(int i, bool inverse = false) {
  return Letter{true, i, 1, inverse};
}

using Word = std::vector<Letter>;

/// Graded lexicographic word order: by length, then letter-wise.
struct GradedLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Finite complex-linear combination of words; zero coefficients are never
/// stored.
using Element = std::map<Word, Complex, GradedLex>;

Element element(const Word& w, Complex coeff = 1.0);
Element unit_element();
void add_term(Element& e, const Word& w, Complex coeff);
Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element scale(Complex c, const Element& a);
Element mul(const Element& a, const Element& b);

Complex counit(const Letter& l);
Complex counit(const Word& w);
Complex counit(const Element& e);

Letter star(const Letter& l);
Word star(const Word& w);
Element star(const Element& e);

Letter antipode(const Letter& l);
Word antipode(const Word& w);

struct CoproductTerm {
  Word left;
  Word right;
  Complex coeff;
};

inline constexpr size_t kCoproductGuard = 1'000'000;

/// Multiplicative extension of Δ(u_ij) = Σ_k u_ik⊗u_kj (and the starred
/// variant) and Δ(g) = g⊗g; n is the index range of fundamental letters.
/// Throws std::length_error when the expansion would exceed the guard.
std::vector<CoproductTerm> coproduct(const Word& w, int n,
                                     size_t guard = kCoproductGuard);

}  // namespace qg
