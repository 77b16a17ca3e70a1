// Registry of the named inference principles with their expected verdicts
// under the logics C and U, in trivalent and in bivalent (atom-classical)
// valuation mode, plus a bounded checker for the schematic meta-rules and
// a report generator that reproduces the whole table.
//
// A mark records how a principle fares under one logic:
//   Full         valid in both modes
//   BivalentOnly invalid over trivalent valuations, valid over bivalent ones
//   Never        invalid in both modes
//
// Sequent and theorem schemas are written over the atoms a, b, c (standing
// for the schema variables A, B, C); evaluating them instantiates each
// schema variable with that fresh atom.  Nested-conditional stress fixtures
// are separate catalog entries, since several principles that survive
// atom-bivalence break once a schema variable is instantiated with a
// conditional.

#ifndef TRIVALENT_PRINCIPLES_HPP
#define TRIVALENT_PRINCIPLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "trivalent/consequence.hpp"
#include "trivalent/formula.hpp"
#include "trivalent/semantics.hpp"

namespace trivalent {

enum class LogicId { C, U };

std::string to_string(LogicId logic);

enum class PrincipleKind { Sequent, Theorem, MetaRule };

enum class MetaRuleId {
  SupraclassicalityLaws,       // classically valid laws are theorems
  SupraclassicalityInferences, // classically valid inferences carry over
  LeftLogicalEquivalence,      // C-interderivable antecedents swap
  RightWeakening,              // C-entailed consequents swap
  ConditionalK                 // C-consequence lifts under a -> antecedent
};

enum class Mark { Full, BivalentOnly, Never };

struct SequentSchema {
  std::vector<std::string> premises;
  std::string conclusion;
};

struct Principle {
  std::string name;
  std::string group;
  PrincipleKind kind;
  std::vector<SequentSchema> sequents;  // Sequent: all must hold
  std::string formula;                  // Theorem
  std::optional<MetaRuleId> meta_rule;  // MetaRule
  Mark mark_c = Mark::Full;
  Mark mark_u = Mark::Full;
  int meta_depth = 1;  // instance depth bound for meta-rules
  bool fixture = false;

  bool expected_valid(LogicId logic, Mode mode) const;
};

// The table rows in order, followed by the nested-conditional fixtures.
const std::vector<Principle>& principle_catalog();

Verdict evaluate_principle(const Principle& p, LogicId logic, Mode mode,
                           const SemanticsConfig& cfg,
                           const ConsequenceLimits& limits = {});

struct MetaRuleOutcome {
  bool violation_found = false;
  std::string instance;  // the failing instantiated sequent, when found
  std::optional<Valuation> countermodel;
  std::size_t instances_checked = 0;
};

// Bounded verification: enumerates side-condition-satisfying instances over
// formulas in two atoms up to the depth bound and checks each conclusion
// sequent.  In bivalent mode instances are conditional-free, matching the
// table's atom-classical reading.  Supraclassicality (Inferences) is
// checked over trivalent valuations in either mode; its failure does not
// involve conditionals at all, so atom-bivalence is no rescue and the
// table marks it invalid in both modes.
MetaRuleOutcome meta_rule_check(MetaRuleId rule, LogicId logic, Mode mode,
                                int depth_bound, const SemanticsConfig& cfg,
                                const ConsequenceLimits& limits = {});

struct ReportRow {
  std::string principle;
  std::string group;
  bool fixture = false;
  LogicId logic = LogicId::C;
  Mode mode = Mode::Trivalent;
  bool expected_valid = false;
  bool computed_valid = false;
  std::optional<std::string> countermodel;  // valuation or meta instance

  bool mismatch() const { return expected_valid != computed_valid; }
};

struct PrincipleReport {
  std::vector<ReportRow> rows;
  std::size_t mismatches = 0;
};

// Computed-versus-expected verdict for every catalog entry under both
// logics and both modes.
PrincipleReport full_report(const SemanticsConfig& cfg,
                            const ConsequenceLimits& limits = {});

// Runs trivalent and bivalent checks and flags verdicts that hold under
// atom-classical valuations only.
Verdict dual_mode_verdict(const Principle& p, LogicId logic,
                          const SemanticsConfig& cfg,
                          const ConsequenceLimits& limits = {});

}  // namespace trivalent

#endif  // TRIVALENT_PRINCIPLES_HPP
