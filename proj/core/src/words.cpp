#include "qgauss/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace qg {

Element element(const Word& w, Complex coeff) {
  Element e;
  add_term(e, w, coeff);
  return e;
}

Element unit_element() { return element(Word{}); }

void add_term(Element& e, const Word& w, Complex coeff) {
  if (coeff == 0.0) return;
  auto it = e.find(w);
  if (it == e.end()) {
    e.emplace(w, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0.0) e.erase(it);
}

Element add(const Element& a, const Element& b) {
  Element out = a;
  for (const auto& [w, c] : b) add_term(out, w, c);
  return out;
}

Element sub(const Element& a, const Element& b) {
  Element out = a;
  for (const auto& [w, c] : b) add_term(out, w, -c);
  return out;
}

Element scale(Complex c, const Element& a) {
  Element out;
  for (const auto& [w, coeff] : a) add_term(out, w, c * coeff);
  return out;
}

Element mul(const Element& a, const Element& b) {
  Element out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      add_term(out, w, ca * cb);
    }
  return out;
}

Complex counit(const Letter& l) {
  if (l.group) return 1.0;
  return l.i == l.j ? 1.0 : 0.0;
}

Complex counit(const Word& w) {
  Complex out = 1.0;
  for (const auto& l : w) out *= counit(l);
  return out;
}

Complex counit(const Element& e) {
  Complex out = 0.0;
  for (const auto& [w, c] : e) out += c * counit(w);
  return out;
}

Letter star(const Letter& l) {
  Letter out = l;
  out.star = !out.star;
  return out;
}

Word star(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(star(*it));
  return out;
}

Element star(const Element& e) {
  Element out;
  for (const auto& [w, c] : e) add_term(out, star(w), std::conj(c));
  return out;
}

Letter antipode(const Letter& l) {
  if (l.group) return group_gen(l.i, !l.star);
  return fundamental(l.j, l.i, !l.star);
}

Word antipode(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(antipode(*it));
  return out;
}

std::vector<CoproductTerm> coproduct(const Word& w, int n, size_t guard) {
  size_t fundamental_count = size_t(
      std::count_if(w.begin(), w.end(), [](const Letter& l) { return !l.group; }));
  double size_estimate = 1.0;
  for (size_t k = 0; k < fundamental_count; ++k) {
    size_estimate *= n;
    if (size_estimate > double(guard))
      throw std::length_error("coproduct expansion exceeds guard");
  }

  std::vector<CoproductTerm> terms;
  terms.push_back({Word{}, Word{}, 1.0});
  for (const auto& l : w) {
    if (l.group) {
      for (auto& t : terms) {
        t.left.push_back(l);
        t.right.push_back(l);
      }
      continue;
    }
    std::vector<CoproductTerm> next;
    next.reserve(terms.size() * size_t(n));
    for (const auto& t : terms)
      for (int k = 1; k <= n; ++k) {
        CoproductTerm nt = t;
        nt.left.push_back(fundamental(l.i, k, l.star));
        nt.right.push_back(fundamental(k, l.j, l.star));
        next.push_back(std::move(nt));
      }
    terms = std::move(next);
  }
  return terms;
}

}  // namespace qg
