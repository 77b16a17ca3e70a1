#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "trivalent/principles.hpp"

using namespace trivalent;

namespace {

const SemanticsConfig kCooperQuasi;
const SemanticsConfig kDeFinettiQuasi{ConditionalTable::DeFinetti,
                                      ConnectiveFamily::Quasi};

const Principle& row(const std::string& name) {
  for (const auto& p : principle_catalog())
    if (p.name == name) return p;
  FAIL("missing catalog row: " << name);
  throw Error("unreachable");
}

bool computed(const std::string& name, LogicId logic, Mode mode,
              const SemanticsConfig& cfg = kCooperQuasi) {
  return evaluate_principle(row(name), logic, mode, cfg).is_valid();
}

}  // namespace

TEST_CASE("catalog covers the whole table plus fixtures") {
  const auto& catalog = principle_catalog();
  std::size_t table_rows = 0, fixtures = 0;
  for (const auto& p : catalog) (p.fixture ? fixtures : table_rows)++;
  CHECK(table_rows == 26);
  CHECK(fixtures == 4);
  CHECK(catalog.front().name == "Logical Truth");
  CHECK(row("Transitivity").group == "undesirable");

  // No duplicate names.
  std::vector<std::string> names;
  for (const auto& p : catalog) names.push_back(p.name);
  std::sort(names.begin(), names.end());
  CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
}

TEST_CASE("marks expand to per-mode expectations") {
  const Principle& suff = row("Conjunctive Sufficiency");
  CHECK(suff.expected_valid(LogicId::C, Mode::Trivalent));
  CHECK(suff.expected_valid(LogicId::U, Mode::Bivalent));
  CHECK_FALSE(suff.expected_valid(LogicId::U, Mode::Trivalent));

  const Principle& otif = row("Or-to-If");
  CHECK(otif.expected_valid(LogicId::C, Mode::Trivalent));
  CHECK_FALSE(otif.expected_valid(LogicId::U, Mode::Bivalent));
}

TEST_CASE("spot checks against the expected verdicts") {
  CHECK(computed("Conjunctive Sufficiency", LogicId::U, Mode::Bivalent));
  CHECK_FALSE(computed("Conjunctive Sufficiency", LogicId::U, Mode::Trivalent));

  CHECK(computed("Contraposition", LogicId::C, Mode::Bivalent));
  CHECK_FALSE(computed("Contraposition", LogicId::U, Mode::Bivalent));

  CHECK(computed("Import-Export", LogicId::U, Mode::Trivalent));

  CHECK(computed("Or-to-If", LogicId::C, Mode::Trivalent));
  CHECK_FALSE(computed("Or-to-If", LogicId::U, Mode::Trivalent));
  CHECK_FALSE(computed("Or-to-If", LogicId::U, Mode::Bivalent));

  CHECK(computed("Conditional Excluded Middle", LogicId::C, Mode::Trivalent));
  CHECK(computed("Aristotle's Thesis", LogicId::U, Mode::Trivalent));
  CHECK(computed("Boethius's Thesis", LogicId::C, Mode::Trivalent));
}

TEST_CASE("quasi-conjunction premise upgrading breaks CM and RM trivalently") {
  for (const char* name :
       {"Cautious Monotonicity", "Rational Monotonicity"}) {
    CHECK(computed(name, LogicId::C, Mode::Trivalent));
    CHECK(computed(name, LogicId::C, Mode::Bivalent));
    CHECK_FALSE(computed(name, LogicId::U, Mode::Trivalent));
    CHECK(computed(name, LogicId::U, Mode::Bivalent));
  }
}

TEST_CASE("Reciprocity reads its biconditional materially") {
  CHECK(computed("Reciprocity", LogicId::C, Mode::Trivalent));
  CHECK(computed("Reciprocity", LogicId::C, Mode::Bivalent));
  CHECK_FALSE(computed("Reciprocity", LogicId::U, Mode::Trivalent));
  CHECK(computed("Reciprocity", LogicId::U, Mode::Bivalent));
}

TEST_CASE("meta rule: Supraclassicality (Laws)") {
  MetaRuleOutcome bivalent =
      meta_rule_check(MetaRuleId::SupraclassicalityLaws, LogicId::C,
                      Mode::Bivalent, 3, kCooperQuasi);
  CHECK_FALSE(bivalent.violation_found);
  CHECK(bivalent.instances_checked > 0);

  MetaRuleOutcome trivalent =
      meta_rule_check(MetaRuleId::SupraclassicalityLaws, LogicId::C,
                      Mode::Trivalent, 3, kCooperQuasi);
  REQUIRE(trivalent.violation_found);
  REQUIRE(trivalent.countermodel.has_value());
}

TEST_CASE("meta rule: Supraclassicality (Inferences) fails in any mode") {
  for (Mode mode : {Mode::Trivalent, Mode::Bivalent}) {
    for (LogicId logic : {LogicId::C, LogicId::U}) {
      MetaRuleOutcome outcome = meta_rule_check(
          MetaRuleId::SupraclassicalityInferences, logic, mode, 2,
          kCooperQuasi);
      CHECK(outcome.violation_found);
    }
  }
}

TEST_CASE("meta rule: Right Weakening fails in U over trivalent valuations") {
  MetaRuleOutcome trivalent = meta_rule_check(
      MetaRuleId::RightWeakening, LogicId::U, Mode::Trivalent, 2,
      kCooperQuasi);
  CHECK(trivalent.violation_found);

  CHECK_FALSE(meta_rule_check(MetaRuleId::RightWeakening, LogicId::U,
                              Mode::Bivalent, 2, kCooperQuasi)
                  .violation_found);
  CHECK_FALSE(meta_rule_check(MetaRuleId::RightWeakening, LogicId::C,
                              Mode::Trivalent, 1, kCooperQuasi)
                  .violation_found);
}

TEST_CASE("meta rule: Left Logical Equivalence holds everywhere") {
  for (Mode mode : {Mode::Trivalent, Mode::Bivalent})
    for (LogicId logic : {LogicId::C, LogicId::U})
      CHECK_FALSE(meta_rule_check(MetaRuleId::LeftLogicalEquivalence, logic,
                                  mode, 1, kCooperQuasi)
                      .violation_found);
}

TEST_CASE("meta rule check rejects a nonpositive depth") {
  CHECK_THROWS_AS(meta_rule_check(MetaRuleId::RightWeakening, LogicId::C,
                                  Mode::Trivalent, 0, kCooperQuasi),
                  Error);
}

TEST_CASE("full report has no mismatches under the adopted semantics") {
  PrincipleReport report = full_report(kCooperQuasi);
  for (const auto& r : report.rows) {
    CAPTURE(r.principle);
    CAPTURE(to_string(r.logic));
    CAPTURE(to_string(r.mode));
    CHECK(r.expected_valid == r.computed_valid);
  }
  CHECK(report.mismatches == 0);
  CHECK(report.rows.size() == principle_catalog().size() * 4);
}

TEST_CASE("de Finetti's table loses Modus Ponens in C") {
  CHECK_FALSE(computed("Modus Ponens", LogicId::C, Mode::Trivalent,
                       kDeFinettiQuasi));
  PrincipleReport report = full_report(kDeFinettiQuasi);
  bool mp_flagged = false;
  for (const auto& r : report.rows)
    if (r.principle == "Modus Ponens" && r.logic == LogicId::C &&
        r.mode == Mode::Trivalent)
      mp_flagged = r.mismatch();
  CHECK(mp_flagged);
  CHECK(report.mismatches > 0);
}

TEST_CASE("dual-mode verdict flags atom-classical validity") {
  Verdict v = dual_mode_verdict(row("Conjunctive Sufficiency"), LogicId::U,
                                kCooperQuasi);
  CHECK_FALSE(v.is_valid());
  CHECK(v.bivalent_only);

  Verdict full = dual_mode_verdict(row("AND"), LogicId::U, kCooperQuasi);
  CHECK(full.is_valid());
  CHECK_FALSE(full.bivalent_only);

  Verdict never = dual_mode_verdict(row("Or-to-If"), LogicId::U, kCooperQuasi);
  CHECK_FALSE(never.is_valid());
  CHECK_FALSE(never.bivalent_only);
}

TEST_CASE("nested fixtures expose the certain/uncertain split") {
  CHECK(computed("Modus Ponens (nested consequent)", LogicId::C,
                 Mode::Bivalent));
  CHECK_FALSE(computed("Modus Ponens (nested consequent)", LogicId::U,
                       Mode::Bivalent));
  CHECK_FALSE(computed("Modus Tollens (nested consequent)", LogicId::C,
                       Mode::Bivalent));
  CHECK_FALSE(computed("McGee election", LogicId::U, Mode::Bivalent));
  CHECK(computed("McGee election", LogicId::C, Mode::Trivalent));
}

TEST_CASE("atom-classical-only rows fail trivalently through the third "
          "value") {
  for (const auto& p : principle_catalog()) {
    if (p.kind == PrincipleKind::MetaRule) continue;
    for (LogicId logic : {LogicId::C, LogicId::U}) {
      Mark mark = logic == LogicId::C ? p.mark_c : p.mark_u;
      if (mark != Mark::BivalentOnly) continue;
      Verdict v = evaluate_principle(p, logic, Mode::Trivalent, kCooperQuasi);
      CAPTURE(p.name);
      REQUIRE_FALSE(v.is_valid());
      REQUIRE(v.countermodel.has_value());
      bool has_half = false;
      for (std::size_t i = 0; i < v.countermodel->size(); ++i)
        if (v.countermodel->value_at(i) == Tv::Half) has_half = true;
      CHECK(has_half);
    }
  }
}

TEST_CASE("System P rows are U-valid in bivalent mode") {
  for (const char* name : {"Law of Identity", "AND", "OR",
                           "Cautious Monotonicity", "Left Logical Equivalence",
                           "Right Weakening"})
    CHECK(computed(name, LogicId::U, Mode::Bivalent));
}
