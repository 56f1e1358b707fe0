#pragma once

#include <stdexcept>
#include <string>

#include "qgauss/group_target.hpp"
#include "qgauss/words.hpp"

namespace qg {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := [scalar '*'] word | scalar
///   word   := letter (ws letter)* | '1'
///   letter := 'u' ['*'] '(' int ',' int ')' | 'g' ['-'] '(' int ')'
///   scalar := decimal | '(' decimal ',' decimal ')'
/// Letter kinds are validated against the target; indices against its
/// fundamental dimension.
Element parse(const std::string& text, const GroupTarget& target);

/// Deterministic graded-lexicographic print; round-trips through parse.
std::string print_element(const Element& e);

std::string print_word(const Word& w);

}  // namespace qg
