#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "trivalent/formula.hpp"

using namespace trivalent;

namespace {

FormulaPtr a() { return atom("a"); }
FormulaPtr b() { return atom("b"); }
FormulaPtr c() { return atom("c"); }

}  // namespace

TEST_CASE("conditional is right-associative") {
  CHECK(equal(parse("a -> b -> c"), cond(a(), cond(b(), c()))));
  CHECK(equal(parse("(a -> b) -> c"), cond(cond(a(), b()), c())));
}

TEST_CASE("precedence: ~ over & over | over ->") {
  CHECK(equal(parse("~a | b"), disj(neg(a()), b())));
  CHECK(equal(parse("~a & b | c -> d"),
              cond(disj(conj(neg(a()), b()), c()), atom("d"))));
  CHECK(equal(parse("a & b & c"), conj(conj(a(), b()), c())));
  CHECK(equal(parse("a | b | c"), disj(disj(a(), b()), c())));
}

TEST_CASE("surface sugar desugars at parse time") {
  CHECK(equal(parse("a => b"), disj(neg(a()), b())));
  CHECK(equal(parse("a <-> b"), conj(cond(a(), b()), cond(b(), a()))));
  // No dedicated node kinds exist for => or <->; the desugared trees are
  // indistinguishable from hand-built ones.
  CHECK(equal(parse("a => b"), parse("~a | b")));
  CHECK(equal(parse("a <-> b"), parse("(a -> b) & (b -> a)")));
}

TEST_CASE("constants are primitive nodes, not atoms") {
  CHECK(parse("T")->kind() == Formula::Kind::Top);
  CHECK(parse("F")->kind() == Formula::Kind::Bot);
  CHECK_THROWS_AS(atom("T"), Error);
  CHECK_THROWS_AS(atom("Foo"), Error);
  CHECK_NOTHROW(atom("x1_y"));
}

TEST_CASE("parse errors carry offset and expected set") {
  CHECK_THROWS_AS(parse(""), ParseError);
  try {
    parse("");
  } catch (const ParseError& e) {
    CHECK(e.offset == 0);
  }

  try {
    parse("(a");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 2);
    REQUIRE(e.expected.size() == 1);
    CHECK(e.expected[0] == "')'");
  }

  try {
    parse("a )");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 2);
  }

  try {
    parse("a &");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 3);
    CHECK(std::find(e.expected.begin(), e.expected.end(), "atom") !=
          e.expected.end());
  }

  CHECK_THROWS_AS(parse("a - b"), ParseError);
  CHECK_THROWS_AS(parse("A"), ParseError);
  CHECK_THROWS_AS(parse("a ? b"), ParseError);
}

TEST_CASE("render uses minimal parentheses") {
  CHECK(render(cond(a(), cond(b(), c()))) == "a -> b -> c");
  CHECK(render(disj(neg(a()), b())) == "~a | b");
  CHECK(render(conj(a(), disj(b(), c()))) == "a & (b | c)");
  CHECK(render(conj(conj(a(), b()), c())) == "a & b & c");
  CHECK(render(conj(a(), conj(b(), c()))) == "a & (b & c)");
  CHECK(render(cond(cond(a(), b()), c())) == "(a -> b) -> c");
  CHECK(render(neg(conj(a(), b()))) == "~(a & b)");
  CHECK(render(neg(neg(a()))) == "~~a");
}

TEST_CASE("render then parse is the identity on canonical strings") {
  for (const char* text :
       {"a & b | c", "a -> b -> c", "~(a | b) & T", "(a -> b) -> ~c",
        "a & (b | c) -> F"}) {
    CHECK(render(*parse(text)) == text);
  }
}

TEST_CASE("atoms are sorted and deduplicated") {
  CHECK(atoms(*parse("a -> (b -> a)")) == std::vector<std::string>{"a", "b"});
  CHECK(atoms(*parse("T -> F")).empty());
  CHECK(atoms(*parse("x & y | x")) == std::vector<std::string>{"x", "y"});
  CHECK(atoms(*parse("zz & a1 & m")) ==
        std::vector<std::string>{"a1", "m", "zz"});
}

TEST_CASE("is_conditional_free") {
  CHECK(is_conditional_free(*parse("a & ~b")));
  CHECK_FALSE(is_conditional_free(*parse("a -> b")));
  CHECK(is_conditional_free(*parse("(a => b) | c")));
  CHECK_FALSE(is_conditional_free(*parse("~(x -> y)")));
}

TEST_CASE("substitute replaces atoms homomorphically") {
  std::map<std::string, FormulaPtr> binding{{"a", parse("p & q")}};
  CHECK(equal(substitute(parse("a -> a"), binding),
              parse("(p & q) -> (p & q)")));

  std::map<std::string, FormulaPtr> binding2{{"a", parse("x")},
                                             {"b", parse("y -> z")}};
  CHECK(equal(substitute(parse("a -> b"), binding2), parse("x -> (y -> z)")));

  std::map<std::string, FormulaPtr> binding3{{"a", parse("p")}};
  CHECK(equal(substitute(parse("~(~a -> a)"), binding3), parse("~(~p -> p)")));

  CHECK_THROWS_AS(substitute(parse("a & b"), binding3), Error);
}

TEST_CASE("substitute is compositional") {
  std::mt19937_64 rng(7);
  std::vector<std::string> pool{"a", "b"};
  std::map<std::string, FormulaPtr> binding{{"a", parse("p | ~q")},
                                            {"b", parse("q -> r")}};
  for (int i = 0; i < 200; ++i) {
    FormulaPtr x = testutil::random_formula(rng, pool, 3);
    FormulaPtr y = testutil::random_formula(rng, pool, 3);
    CHECK(equal(substitute(conj(x, y), binding),
                conj(substitute(x, binding), substitute(y, binding))));
    CHECK(equal(substitute(cond(x, y), binding),
                cond(substitute(x, binding), substitute(y, binding))));
  }
}

TEST_CASE("parse after render is the identity on random trees") {
  std::mt19937_64 rng(42);
  std::vector<std::string> pool{"a", "b", "c", "x1"};
  for (int i = 0; i < 2000; ++i) {
    FormulaPtr f = testutil::random_formula(rng, pool, 6);
    CHECK(equal(parse(render(*f)), f));
  }
}

TEST_CASE("depth and atom count are queryable") {
  CHECK(parse("a")->depth() == 0);
  CHECK(parse("~a")->depth() == 1);
  CHECK(parse("(~a | a) | b")->depth() == 3);
  CHECK(atoms(*parse("(~a | a) | b")).size() == 2);
}
