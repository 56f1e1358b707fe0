#include <doctest.h>

#include "test_support.hpp"

using namespace qgtest;

namespace {
const GroupTarget kU2{GroupTarget::Kind::u_plus, 2};
const GroupTarget kU3{GroupTarget::Kind::u_plus, 3};
const GroupTarget kF2{GroupTarget::Kind::free_group, 2};
}  // namespace

TEST_CASE("parse basic words and combinations") {
  Element w = parse("u(1,2) u*(2,1)", kU2);
  CHECK(w == element(Word{fundamental(1, 2), fundamental(2, 1, true)}));

  Element c = parse("(0,1)*u(1,1) + 2*u(2,2)", kU2);
  Element expect = add(element(Word{fundamental(1, 1)}, Complex(0, 1)),
                       element(Word{fundamental(2, 2)}, 2.0));
  CHECK(c == expect);

  CHECK(parse("1", kU2) == unit_element());
  CHECK(parse("0", kU2).empty());
  Element g = parse("g(1) g-(2)", kF2);
  CHECK(g == element(Word{group_gen(1), group_gen(2, true)}));

  Element diff = parse("u(1,1) - u*(1,1)", kU2);
  CHECK(diff == sub(element(Word{fundamental(1, 1)}),
                    element(Word{fundamental(1, 1, true)})));
}

TEST_CASE("parse reports positions and validates context") {
  CHECK_THROWS_AS(parse("u(3,1)", kU2), ParseError);
  try {
    parse("u(1,1) + u(3,1)", kU2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position >= 9);
  }
  CHECK_THROWS_AS(parse("g(1)", kU2), ParseError);      // wrong letter kind
  CHECK_THROWS_AS(parse("u(1,1)", kF2), ParseError);    // wrong letter kind
  CHECK_THROWS_AS(parse("u(1 2)", kU2), ParseError);    // syntax
  CHECK_THROWS_AS(parse("", kU2), ParseError);
  CHECK_THROWS_AS(parse("2*", kU2), ParseError);
}

TEST_CASE("print canonical forms") {
  CHECK(print_element(element(Word{fundamental(1, 1)}, Complex(0, 1))) ==
        "(0,1)*u(1,1)");
  CHECK(print_element(Element{}) == "0");
  CHECK(print_element(unit_element()) == "1");
  CHECK(print_element(element(Word{fundamental(1, 2), fundamental(2, 1, true)})) ==
        "u(1,2) u*(2,1)");
}

TEST_CASE("parse ∘ print is the identity on random elements") {
  Rng rng(29);
  for (int rep = 0; rep < 100; ++rep) {
    bool group = rep % 4 == 3;
    Element x = random_element(3, 4, 5, rng, group);
    std::string text = print_element(x);
    Element back = parse(text, group ? GroupTarget{GroupTarget::Kind::free_group, 3}
                                     : kU3);
    REQUIRE(back.size() == x.size());
    for (const auto& [w, coeff] : x) {
      auto it = back.find(w);
      REQUIRE(it != back.end());
      CHECK(std::abs(it->second - coeff) < 1e-12);
    }
  }
}
