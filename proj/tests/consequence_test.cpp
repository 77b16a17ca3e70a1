#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "trivalent/consequence.hpp"

using namespace trivalent;

namespace {

const SemanticsConfig kCfg;

Sequent seq(std::vector<std::string> premises, const std::string& conclusion) {
  Sequent s;
  for (const auto& p : premises) s.premises.push_back(parse(p));
  s.conclusion = parse(conclusion);
  return s;
}

// Independent oracle: first enumerated valuation where the subset
// conjunction exceeds the conclusion, computed without the engine's search.
std::optional<Valuation> first_excess(const Sequent& s,
                                      const std::vector<std::size_t>& subset,
                                      Mode mode) {
  AtomNames names = atoms(s.premises);
  for (auto& a : atoms(*s.conclusion)) names.push_back(a);
  ValuationSpace space(names, mode);
  FormulaPtr p = subset_conjunction(s, subset);
  for (std::size_t i = 0; i < space.size(); ++i) {
    Valuation v = space.at(i);
    if (!(eval(*p, v, kCfg) <= eval(*s.conclusion, v, kCfg))) return v;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("sequent text parses premises and conclusion") {
  Sequent s = parse_sequent("a -> b; a |- b");
  REQUIRE(s.premises.size() == 2);
  CHECK(render(s) == "a -> b; a |- b");
  Sequent theorem = parse_sequent("|- a -> a");
  CHECK(theorem.premises.empty());
  CHECK_THROWS_AS(parse_sequent("a -> b"), ParseError);
  CHECK_THROWS_AS(parse_sequent("a |-"), ParseError);
}

TEST_CASE("entails_c decides certainty preservation") {
  CHECK(entails_c(seq({"b"}, "a -> b"), kCfg, Mode::Trivalent).is_valid());
  CHECK(entails_c(seq({"a", "a -> b"}, "b"), kCfg, Mode::Trivalent)
            .is_valid());
  CHECK(entails_c(seq({"~a | b"}, "a -> b"), kCfg, Mode::Trivalent)
            .is_valid());

  Verdict v = entails_c(seq({"~a"}, "a -> b"), kCfg, Mode::Trivalent);
  REQUIRE_FALSE(v.is_valid());
  REQUIRE(v.countermodel.has_value());
  CHECK(v.countermodel->at("a") == Tv::Half);
  CHECK(v.countermodel->at("b") == Tv::False);
}

TEST_CASE("entails_c reports the first countermodel in enumeration order") {
  Verdict v = entails_c(seq({}, "a"), kCfg, Mode::Trivalent);
  REQUIRE_FALSE(v.is_valid());
  CHECK(v.countermodel->at("a") == Tv::False);
}

TEST_CASE("is_theorem_c") {
  CHECK(is_theorem_c(parse("a -> a"), kCfg, Mode::Trivalent).is_valid());
  CHECK(is_theorem_c(parse("(a -> b) | (a -> ~b)"), kCfg, Mode::Trivalent)
            .is_valid());
  CHECK(is_theorem_c(parse("~(~a -> a)"), kCfg, Mode::Trivalent).is_valid());
  Verdict v = is_theorem_c(parse("a"), kCfg, Mode::Trivalent);
  REQUIRE_FALSE(v.is_valid());
  CHECK(v.countermodel->at("a") == Tv::False);
}

TEST_CASE("entails_ss preserves strict truth") {
  // Trivalently the converse inference has a countermodel with an
  // indeterminate antecedent; restricted to bivalent atoms it goes through.
  Verdict v = entails_ss(parse("a -> b"), parse("b -> a"), kCfg,
                         Mode::Trivalent);
  REQUIRE_FALSE(v.is_valid());
  CHECK(v.countermodel->at("a") == Tv::Half);
  CHECK(v.countermodel->at("b") == Tv::True);
  CHECK(entails_ss(parse("a -> b"), parse("b -> a"), kCfg, Mode::Bivalent)
            .is_valid());

  // Identity is not an SS-theorem.
  Verdict identity = entails_ss(top(), parse("a -> a"), kCfg,
                                Mode::Trivalent);
  REQUIRE_FALSE(identity.is_valid());
  CHECK(identity.countermodel->at("a") == Tv::False);

  // Simplification: quasi-conjunction value 1 only forces the conjuncts to
  // be designated, not strictly true.
  Verdict simp = entails_ss(parse("a & b"), parse("a"), kCfg,
                            Mode::Trivalent);
  REQUIRE_FALSE(simp.is_valid());
  CHECK(simp.countermodel->at("a") == Tv::Half);
  CHECK(simp.countermodel->at("b") == Tv::True);
  CHECK(entails_ss(parse("a & b"), parse("a"), kCfg, Mode::Bivalent)
            .is_valid());
}

TEST_CASE("entails_u: Modus Ponens fails on a conditional-shaped consequent") {
  Verdict v = entails_u(seq({"a -> b", "a"}, "b"), kCfg, Mode::Trivalent);
  REQUIRE_FALSE(v.is_valid());
  REQUIRE(v.countermodel.has_value());
  CHECK(v.countermodel->at("a") == Tv::True);
  CHECK(v.countermodel->at("b") == Tv::Half);
  CHECK_FALSE(v.witness_subset.has_value());

  // The concrete instantiation b := c -> d with a false antecedent.
  Verdict nested = entails_u(seq({"a -> (c -> d)", "a"}, "c -> d"), kCfg,
                             Mode::Bivalent);
  CHECK_FALSE(nested.is_valid());
}

TEST_CASE("entails_u: Monotonicity fails with premise above conclusion") {
  Sequent s = seq({"a -> c"}, "(a & b) -> c");
  Verdict v = entails_u(s, kCfg, Mode::Trivalent);
  REQUIRE_FALSE(v.is_valid());
  // The reported countermodel is the subset {all premises} witness; pin it
  // to the enumeration-first violation computed independently.
  auto expected = first_excess(s, {0}, Mode::Trivalent);
  REQUIRE(expected.has_value());
  CHECK(*v.countermodel == *expected);
  CHECK(eval(*s.premises[0], *v.countermodel, kCfg) >
        eval(*s.conclusion, *v.countermodel, kCfg));
}

TEST_CASE("entails_u returns a minimal witness subset") {
  Verdict v = entails_u(seq({"x", "a"}, "a"), kCfg, Mode::Trivalent);
  REQUIRE(v.is_valid());
  REQUIRE(v.witness_subset.has_value());
  CHECK(*v.witness_subset == std::vector<std::size_t>{1});
}

TEST_CASE("entails_u validates via theoremhood without a witness subset") {
  Verdict v = entails_u(seq({"x"}, "a -> a"), kCfg, Mode::Trivalent);
  CHECK(v.is_valid());
  CHECK_FALSE(v.witness_subset.has_value());
}

TEST_CASE("entails_u: Cautious Monotonicity is atom-classical only") {
  Sequent s = seq({"a -> b", "a -> c"}, "(a & c) -> b");
  CHECK(entails_u(s, kCfg, Mode::Bivalent).is_valid());
  Verdict v = entails_u(s, kCfg, Mode::Trivalent);
  REQUIRE_FALSE(v.is_valid());
  // Quasi-conjunction upgrades the half-valued premise next to a true one.
  REQUIRE(v.countermodel.has_value());
  FormulaPtr conjunction = subset_conjunction(s, {0, 1});
  CHECK(eval(*conjunction, *v.countermodel, kCfg) >
        eval(*s.conclusion, *v.countermodel, kCfg));
}

TEST_CASE("u_subset_outcomes covers every subset in search order") {
  Sequent s = seq({"a -> b", "a"}, "b");
  auto outcomes = u_subset_outcomes(s, kCfg, Mode::Trivalent);
  REQUIRE(outcomes.size() == 4);
  CHECK(outcomes[0].subset.empty());
  CHECK(outcomes[1].subset == std::vector<std::size_t>{0});
  CHECK(outcomes[2].subset == std::vector<std::size_t>{1});
  CHECK(outcomes[3].subset == (std::vector<std::size_t>{0, 1}));
  for (const auto& outcome : outcomes) {
    REQUIRE(outcome.countermodel.has_value());
    CHECK(*outcome.countermodel ==
          *first_excess(s, outcome.subset, Mode::Trivalent));
  }
}

TEST_CASE("subset cap is enforced") {
  ConsequenceLimits limits;
  limits.max_premises_for_subsets = 2;
  CHECK_THROWS_AS(entails_u(seq({"a", "b", "c"}, "a"), kCfg, Mode::Trivalent,
                            limits),
                  CapExceeded);
}

TEST_CASE("classical_valid") {
  CHECK(classical_valid(parse("a | ~a")));
  CHECK(classical_valid(parse("a => (b => a)")));
  CHECK_FALSE(classical_valid(parse("a & ~a")));
  CHECK_THROWS_AS(classical_valid(parse("a -> a")), Error);
}

TEST_CASE("structural properties on random sequents") {
  std::mt19937_64 rng(2024);
  std::vector<std::string> pool{"a", "b", "c"};
  int invalid_c = 0;
  for (int i = 0; i < 400; ++i) {
    Sequent s = testutil::random_sequent(rng, pool, 3, 3);
    Verdict c = entails_c(s, kCfg, Mode::Trivalent);
    Verdict u = entails_u(s, kCfg, Mode::Trivalent);

    // Reflexivity: any premise is entailed.
    if (!s.premises.empty()) {
      Sequent refl{s.premises, s.premises[0]};
      CHECK(entails_c(refl, kCfg, Mode::Trivalent).is_valid());
      CHECK(entails_u(refl, kCfg, Mode::Trivalent).is_valid());
    }

    // U validates fewer inferences than C.
    if (u.is_valid()) CHECK(c.is_valid());
    if (!c.is_valid()) ++invalid_c;

    // Weakening keeps U-validity, and the old witness subset still
    // witnesses the widened sequent (the engine may report a smaller one).
    if (u.is_valid() && s.premises.size() < 4) {
      Sequent widened = s;
      widened.premises.push_back(testutil::random_formula(rng, pool, 2));
      Verdict wu = entails_u(widened, kCfg, Mode::Trivalent);
      CHECK(wu.is_valid());
      if (u.witness_subset) {
        bool still_witnesses = false;
        for (const auto& outcome :
             u_subset_outcomes(widened, kCfg, Mode::Trivalent))
          if (outcome.subset == *u.witness_subset) {
            still_witnesses = !outcome.countermodel.has_value();
            break;
          }
        CHECK(still_witnesses);
      }
    }
  }
  CHECK(invalid_c > 20);  // the generator reaches both verdicts
}

TEST_CASE("single-premise U agrees with its equivalent characterizations") {
  std::mt19937_64 rng(77);
  std::vector<std::string> pool{"a", "b"};
  for (int i = 0; i < 600; ++i) {
    FormulaPtr a = testutil::random_formula(rng, pool, 3);
    FormulaPtr b = testutil::random_formula(rng, pool, 3);
    Sequent s{{a}, b};
    bool u = entails_u(s, kCfg, Mode::Trivalent).is_valid();
    bool c = entails_c(s, kCfg, Mode::Trivalent).is_valid();
    bool ss = entails_ss(a, b, kCfg, Mode::Trivalent).is_valid();
    bool theorem = is_theorem_c(*b, kCfg, Mode::Trivalent).is_valid();
    bool contraposed =
        entails_c(Sequent{{neg(b)}, neg(a)}, kCfg, Mode::Trivalent).is_valid();
    CHECK(u == ((c && ss) || theorem));
    CHECK(u == ((c && contraposed) || theorem));
  }
}

TEST_CASE("theorem sets of C and U coincide") {
  std::mt19937_64 rng(5);
  std::vector<std::string> pool{"a", "b"};
  for (int i = 0; i < 400; ++i) {
    FormulaPtr f = testutil::random_formula(rng, pool, 3);
    CHECK(is_theorem_c(*f, kCfg, Mode::Trivalent).is_valid() ==
          entails_u(Sequent{{}, f}, kCfg, Mode::Trivalent).is_valid());
  }
}

TEST_CASE("disjunction introduction fails only through indeterminacy") {
  std::mt19937_64 rng(13);
  std::vector<std::string> pool{"a", "b"};
  int failures = 0;
  for (int i = 0; i < 500; ++i) {
    FormulaPtr a = testutil::random_formula(rng, pool, 3);
    FormulaPtr b = testutil::random_formula(rng, pool, 3);
    Verdict v = entails_c(Sequent{{a}, disj(a, b)}, kCfg, Mode::Trivalent);
    if (!v.is_valid()) {
      ++failures;
      CHECK(eval(*a, *v.countermodel, kCfg) == Tv::Half);
    }
  }
  CHECK(failures > 0);
}

TEST_CASE("bivalent mode still lets compound formulas go indeterminate") {
  Verdict v = entails_c(seq({"~a"}, "a -> b"), kCfg, Mode::Bivalent);
  CHECK(v.is_valid());  // the only trivalent countermodel needs a = 1/2
  Verdict u = entails_u(seq({"~a | b"}, "a -> b"), kCfg, Mode::Bivalent);
  REQUIRE_FALSE(u.is_valid());
  CHECK(eval(*parse("a -> b"), *u.countermodel, kCfg) == Tv::Half);
}
