#include "qgauss/centrality.hpp"

#include <cmath>
#include <map>

#include "qgauss/targets.hpp"

namespace qg {

CharacterPattern parse_pattern(const std::string& text) {
  CharacterPattern out;
  size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != 'u')
      throw std::invalid_argument("pattern: expected 'u' at position " +
                                  std::to_string(pos));
    ++pos;
    bool conj = pos < text.size() && text[pos] == '*';
    if (conj) ++pos;
    out.push_back(conj);
  }
  if (out.empty()) throw std::invalid_argument("pattern: must be non-empty");
  return out;
}

std::string pattern_to_string(const CharacterPattern& pattern) {
  std::string out;
  for (bool conj : pattern) out += conj ? "u*" : "u";
  return out;
}

CentralParams central_params(const GaussianSpec& spec) {
  CentralParams p;
  p.tr_h = spec.H.trace();
  p.tr_mw = 0.0;
  p.tr_tr_w = 0.0;
  for (const auto& l : spec.L) {
    p.tr_mw += (l.adjoint() * l).trace().real();
    p.tr_tr_w += std::norm(l.trace());
  }
  return p;
}

bool central_commutator_sweep(const std::function<Complex(const Element&)>& f,
                              int dim, int cutoff, double tol, size_t guard) {
  std::vector<Letter> letters;
  for (int i = 1; i <= dim; ++i)
    for (int j = 1; j <= dim; ++j) {
      letters.push_back(fundamental(i, j));
      letters.push_back(fundamental(i, j, true));
    }
  std::vector<Word> frontier{Word{}};
  for (int len = 1; len <= cutoff; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (const auto& l : letters) {
        Word ext = w;
        ext.push_back(l);
        next.push_back(ext);
      }
    for (const auto& w : next) {
      // (f∗δ_v)(w) and (δ_v∗f)(w) for every v at once.
      std::map<Word, Complex, GradedLex> left_of_v, right_of_v;
      for (const auto& t : coproduct(w, dim, guard)) {
        left_of_v[t.right] += t.coeff * f(element(t.left));
        right_of_v[t.left] += t.coeff * f(element(t.right));
      }
      for (const auto& [v, val] : left_of_v) {
        auto it = right_of_v.find(v);
        Complex other = it == right_of_v.end() ? Complex(0.0) : it->second;
        if (std::abs(val - other) > tol) return false;
      }
      for (const auto& [v, val] : right_of_v)
        if (!left_of_v.count(v) && std::abs(val) > tol) return false;
    }
    frontier = std::move(next);
  }
  return true;
}

bool central_check(const CookedFunctional& f, int cutoff, double tol) {
  if (f.group_letters()) {
    // group-like coproduct: every functional convolution-commutes with
    // coordinate functionals; the scalar test is vacuous.
    return true;
  }
  ComplexMatrix first(f.dim, f.dim);
  for (int i = 0; i < f.dim; ++i)
    for (int j = 0; j < f.dim; ++j)
      first(i, j) =
          f.first_order[f.letter_index(fundamental(i + 1, j + 1))];
  Complex mean = first.trace() / double(f.dim);
  if (max_abs(first - mean * ComplexMatrix::Identity(f.dim, f.dim)) > tol)
    return false;
  auto eval = [&f](const Element& x) { return eval_phi(f, x); };
  return central_commutator_sweep(eval, f.dim, cutoff, tol);
}

Complex character_moment_direct(const CookedFunctional& f,
                                const CharacterPattern& pattern, size_t guard) {
  const int p = int(pattern.size());
  const int n = f.dim;
  double total = std::pow(double(n), p);
  if (total > double(guard))
    throw std::length_error("character_moment_direct: index sweep exceeds guard");
  std::vector<int> idx(p, 1);
  Complex out = 0.0;
  while (true) {
    Word w;
    for (int a = 0; a < p; ++a)
      w.push_back(fundamental(idx[a], idx[a], pattern[a]));
    out += eval_phi(f, w);
    int pos = p - 1;
    while (pos >= 0 && idx[pos] == n) idx[pos--] = 1;
    if (pos < 0) break;
    ++idx[pos];
  }
  return out;
}

Complex character_moment_closed(const CookedFunctional& f,
                                const CharacterPattern& pattern) {
  const int p = int(pattern.size());
  const double n = f.dim;
  Complex phi1_plain = 0.0, phi1_conj = 0.0;
  for (int i = 1; i <= f.dim; ++i) {
    phi1_plain += f.first_order[f.letter_index(fundamental(i, i))];
    phi1_conj += f.first_order[f.letter_index(fundamental(i, i, true))];
  }
  // diagonal pair-kernel sums; equal ±(Tr⊗Tr)(W) by leg parity
  Complex s[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
  for (int ea = 0; ea < 2; ++ea)
    for (int eb = 0; eb < 2; ++eb)
      for (int j = 1; j <= f.dim; ++j)
        for (int k = 1; k <= f.dim; ++k)
          s[ea][eb] += f.pair_kernel(
              f.letter_index(fundamental(j, j, ea == 1)),
              f.letter_index(fundamental(k, k, eb == 1)));

  Complex out = 0.0;
  for (int a = 0; a < p; ++a)
    out += std::pow(n, p - 1) * (pattern[a] ? phi1_conj : phi1_plain);
  for (int a = 0; a < p; ++a)
    for (int b = a + 1; b < p; ++b)
      out += std::pow(n, p - 2) * s[pattern[a] ? 1 : 0][pattern[b] ? 1 : 0];
  return out;
}

MomentTable centralize_table(const GaussianSpec& spec, const GroupTarget& target,
                             int pmax, double tol) {
  if (target.kind != GroupTarget::Kind::o_plus &&
      target.kind != GroupTarget::Kind::sp_plus)
    throw std::invalid_argument("centralize_table: o_plus or sp_plus target");
  for (const auto& c : matrix_conditions(spec, target, tol))
    if (!c.pass)
      throw std::invalid_argument("centralize_table: target condition '" +
                                  c.name + "' fails, residual " +
                                  std::to_string(c.residual));
  CookedFunctional f = cook_ambient(spec, tol);
  MomentTable table;
  for (int p = 1; p <= pmax; ++p) {
    CharacterPattern pattern(p, false);
    table.rows.push_back(
        {pattern_to_string(pattern), character_moment_closed(f, pattern)});
  }
  CentralParams params = central_params(spec);
  table.c = Complex(-params.tr_mw / 2.0, 0.0);
  table.reference = "p*M^(p-1)";
  return table;
}

GaussianSpec torus_gaussian(int n, double nu, double mu) {
  if (mu < 0.0) throw std::invalid_argument("torus_gaussian: mu must be >= 0");
  GaussianSpec spec;
  spec.target = {GroupTarget::Kind::torus, n};
  spec.H = Complex(0.0, nu) * ComplexMatrix::Identity(n, n);
  if (mu > 0.0)
    spec.L.push_back(std::sqrt(mu) * ComplexMatrix::Identity(n, n));
  return spec;
}

}  // namespace qg
