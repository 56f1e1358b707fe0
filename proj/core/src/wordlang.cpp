#include "qgauss/wordlang.hpp"

#include <cctype>
#include <cstdlib>

#include "qgauss/format.hpp"

namespace qg {
namespace {

class Parser {
 public:
  Parser(const std::string& text, const GroupTarget& target)
      : text_(text), target_(target) {}

  Element run() {
    skip_ws();
    if (done()) throw ParseError("empty expression", pos_);
    Element out;
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
      skip_ws();
    }
    out = term(negate);
    skip_ws();
    while (!done()) {
      char op = peek();
      if (op != '+' && op != '-') throw ParseError("expected '+' or '-'", pos_);
      ++pos_;
      skip_ws();
      out = add(out, term(op == '-'));
      skip_ws();
    }
    return out;
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_scalar_start() const {
    if (done()) return false;
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(')
      return true;
    return false;
  }

  double decimal() {
    const char* begin = text_.c_str() + pos_;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) throw ParseError("expected number", pos_);
    pos_ += size_t(end - begin);
    return v;
  }

  Complex scalar() {
    if (peek() == '(') {
      ++pos_;
      skip_ws();
      double re = decimal();
      skip_ws();
      expect(',');
      skip_ws();
      double im = decimal();
      skip_ws();
      expect(')');
      return {re, im};
    }
    return decimal();
  }

  void expect(char c) {
    if (done() || peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  int integer() {
    size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw ParseError("expected index", start);
    return std::atoi(text_.substr(start, pos_ - start).c_str());
  }

  Letter letter() {
    size_t start = pos_;
    char c = peek();
    if (c == 'u') {
      if (target_.is_free_group())
        throw ParseError("fundamental letter under free-group target", start);
      ++pos_;
      bool st = false;
      if (!done() && peek() == '*') {
        st = true;
        ++pos_;
      }
      expect('(');
      skip_ws();
      int i = integer();
      skip_ws();
      expect(',');
      skip_ws();
      int j = integer();
      skip_ws();
      expect(')');
      check_index(i, start);
      check_index(j, start);
      return fundamental(i, j, st);
    }
    if (c == 'g') {
      if (!target_.is_free_group())
        throw ParseError("group letter under matrix target", start);
      ++pos_;
      bool inv = false;
      if (!done() && peek() == '-') {
        inv = true;
        ++pos_;
      }
      expect('(');
      skip_ws();
      int i = integer();
      skip_ws();
      expect(')');
      check_index(i, start);
      return group_gen(i, inv);
    }
    throw ParseError("expected letter", start);
  }

  void check_index(int i, size_t pos) {
    if (i < 1 || i > target_.ambient_dim())
      throw ParseError("index out of range 1.." +
                           std::to_string(target_.ambient_dim()),
                       pos);
  }

  Word word() {
    if (peek() == '1') {
      ++pos_;
      return Word{};
    }
    Word w;
    w.push_back(letter());
    while (true) {
      size_t save = pos_;
      skip_ws();
      if (!done() && (peek() == 'u' || peek() == 'g')) {
        w.push_back(letter());
      } else {
        pos_ = save;
        break;
      }
    }
    return w;
  }

  Element term(bool negate) {
    if (done()) throw ParseError("expected term", pos_);
    Complex coeff = 1.0;
    if (at_scalar_start()) {
      coeff = scalar();
      size_t save = pos_;
      skip_ws();
      if (!done() && peek() == '*') {
        ++pos_;
        skip_ws();
      } else {
        // bare scalar: coefficient of the unit word
        pos_ = save;
        if (negate) coeff = -coeff;
        return element(Word{}, coeff);
      }
    }
    if (negate) coeff = -coeff;
    return element(word(), coeff);
  }

  const std::string& text_;
  GroupTarget target_;
  size_t pos_ = 0;
};

std::string print_letter(const Letter& l) {
  if (l.group)
    return std::string("g") + (l.star ? "-" : "") + "(" + std::to_string(l.i) +
           ")";
  return std::string("u") + (l.star ? "*" : "") + "(" + std::to_string(l.i) +
         "," + std::to_string(l.j) + ")";
}

std::string print_coeff(Complex c) {
  if (c.imag() == 0.0 && c.real() > 0.0) {
    if (c.real() == 1.0) return "";
    return format_double(c.real()) + "*";
  }
  return "(" + format_double(c.real()) + "," + format_double(c.imag()) + ")*";
}

}  // namespace

Element parse(const std::string& text, const GroupTarget& target) {
  return Parser(text, target).run();
}

std::string print_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) out += " ";
    out += print_letter(w[k]);
  }
  return out;
}

std::string print_element(const Element& e) {
  if (e.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : e) {
    if (!first) out += " + ";
    first = false;
    std::string coeff = print_coeff(c);
    if (w.empty() && !coeff.empty())
      out += coeff.substr(0, coeff.size() - 1);  // drop '*' before unit
    else
      out += coeff + print_word(w);
  }
  return out;
}

}  // namespace qg
