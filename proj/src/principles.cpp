#include "trivalent/principles.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <unordered_set>
#include <utility>

namespace trivalent {

std::string to_string(LogicId logic) {
  return logic == LogicId::C ? "C" : "U";
}

bool Principle::expected_valid(LogicId logic, Mode mode) const {
  Mark mark = logic == LogicId::C ? mark_c : mark_u;
  switch (mark) {
    case Mark::Full: return true;
    case Mark::BivalentOnly: return mode == Mode::Bivalent;
    case Mark::Never: return false;
  }
  return false;
}

namespace {

Principle sequent_row(std::string name, std::string group,
                      std::vector<std::string> premises,
                      std::string conclusion, Mark c, Mark u,
                      bool fixture = false) {
  Principle p;
  p.name = std::move(name);
  p.group = std::move(group);
  p.kind = PrincipleKind::Sequent;
  p.sequents.push_back({std::move(premises), std::move(conclusion)});
  p.mark_c = c;
  p.mark_u = u;
  p.fixture = fixture;
  return p;
}

Principle theorem_row(std::string name, std::string group,
                      std::string formula, Mark c, Mark u) {
  Principle p;
  p.name = std::move(name);
  p.group = std::move(group);
  p.kind = PrincipleKind::Theorem;
  p.formula = std::move(formula);
  p.mark_c = c;
  p.mark_u = u;
  return p;
}

Principle meta_row(std::string name, std::string group, MetaRuleId rule,
                   Mark c, Mark u, int depth) {
  Principle p;
  p.name = std::move(name);
  p.group = std::move(group);
  p.kind = PrincipleKind::MetaRule;
  p.meta_rule = rule;
  p.mark_c = c;
  p.mark_u = u;
  p.meta_depth = depth;
  return p;
}

std::vector<Principle> build_catalog() {
  using enum Mark;
  const std::string core = "constitutive and generally desirable";
  const std::string disputed = "optional and disputed";
  const std::string connexive = "connexive";
  const std::string undesirable = "undesirable";
  const std::string fixtures = "nested-conditional fixtures";

  std::vector<Principle> rows;

  rows.push_back(theorem_row("Logical Truth", core, "a -> T", Full, Full));
  rows.push_back(theorem_row("Law of Identity", core, "a -> a", Full, Full));
  rows.push_back(meta_row("Supraclassicality (Laws)", core,
                          MetaRuleId::SupraclassicalityLaws, BivalentOnly,
                          BivalentOnly, 3));
  rows.push_back(meta_row("Left Logical Equivalence", core,
                          MetaRuleId::LeftLogicalEquivalence, Full, Full, 1));
  rows.push_back(sequent_row("Stronger-Than-Material", core, {"a -> b"},
                             "~a | b", BivalentOnly, BivalentOnly));
  rows.push_back(sequent_row("Conjunctive Sufficiency", core, {"a", "b"},
                             "a -> b", Full, BivalentOnly));
  rows.push_back(sequent_row("AND", core, {"a -> b", "a -> c"},
                             "a -> (b & c)", Full, Full));
  rows.push_back(sequent_row("OR", core, {"a -> c", "b -> c"},
                             "(a | b) -> c", Full, BivalentOnly));
  rows.push_back(sequent_row("Cautious Transitivity", core,
                             {"a -> b", "(a & b) -> c"}, "a -> c", Full,
                             BivalentOnly));
  rows.push_back(sequent_row("Cautious Monotonicity", core,
                             {"a -> b", "a -> c"}, "(a & c) -> b", Full,
                             BivalentOnly));
  rows.push_back(sequent_row("Rational Monotonicity", core,
                             {"a -> b", "~(a -> ~c)"}, "(a & c) -> b", Full,
                             BivalentOnly));
  // The biconditional conclusion reads as material equivalence of the two
  // conditionals.
  rows.push_back(sequent_row(
      "Reciprocity", core, {"a -> b", "b -> a"},
      "((a -> c) => (b -> c)) & ((b -> c) => (a -> c))", Full, BivalentOnly));
  rows.push_back(meta_row("Right Weakening", core, MetaRuleId::RightWeakening,
                          Full, BivalentOnly, 1));
  rows.push_back(meta_row("Rule of Conditional K", core,
                          MetaRuleId::ConditionalK, Full, BivalentOnly, 1));

  rows.push_back(meta_row("Supraclassicality (Inferences)", disputed,
                          MetaRuleId::SupraclassicalityInferences, Never,
                          Never, 2));
  rows.push_back(sequent_row("Modus Ponens", disputed, {"a -> b", "a"}, "b",
                             Full, BivalentOnly));
  rows.push_back(sequent_row("Modus Tollens", disputed, {"a -> b", "~b"},
                             "~a", BivalentOnly, BivalentOnly));
  rows.push_back(sequent_row("Simplifying Disjunctive Antecedents", disputed,
                             {"(a | b) -> c"}, "(a -> c) & (b -> c)",
                             BivalentOnly, BivalentOnly));
  {
    Principle import_export;
    import_export.name = "Import-Export";
    import_export.group = disputed;
    import_export.kind = PrincipleKind::Sequent;
    import_export.sequents.push_back({{"a -> (b -> c)"}, "(a & b) -> c"});
    import_export.sequents.push_back({{"(a & b) -> c"}, "a -> (b -> c)"});
    import_export.mark_c = Full;
    import_export.mark_u = Full;
    rows.push_back(std::move(import_export));
  }
  rows.push_back(sequent_row("Or-to-If", disputed, {"~a | b"}, "a -> b", Full,
                             Never));
  rows.push_back(theorem_row("Conditional Excluded Middle", disputed,
                             "(a -> b) | (a -> ~b)", Full, Full));

  rows.push_back(theorem_row("Aristotle's Thesis", connexive, "~(~a -> a)",
                             Full, Full));
  rows.push_back(theorem_row("Boethius's Thesis", connexive,
                             "(a -> c) -> ~(a -> ~c)", Full, Full));

  rows.push_back(sequent_row("Contraposition", undesirable, {"a -> c"},
                             "~c -> ~a", BivalentOnly, Never));
  rows.push_back(sequent_row("Monotonicity", undesirable, {"a -> c"},
                             "(a & b) -> c", Full, Never));
  rows.push_back(sequent_row("Transitivity", undesirable,
                             {"a -> b", "b -> c"}, "a -> c", Full, Never));

  // Stress instances: schema variables instantiated with conditionals.
  rows.push_back(sequent_row("Modus Ponens (nested consequent)", fixtures,
                             {"a -> (c -> d)", "a"}, "c -> d", Full, Never,
                             true));
  rows.push_back(sequent_row("Modus Tollens (nested consequent)", fixtures,
                             {"a -> (c -> d)", "~(c -> d)"}, "~a", Never,
                             Never, true));
  rows.push_back(sequent_row("Conjunctive Sufficiency (conditional premise)",
                             fixtures, {"a", "c -> d"}, "a -> (c -> d)", Full,
                             Never, true));
  rows.push_back(sequent_row("McGee election", fixtures,
                             {"(r | n) -> (~r -> n)", "r | n"}, "~r -> n",
                             Full, Never, true));
  return rows;
}

}  // namespace

const std::vector<Principle>& principle_catalog() {
  static const std::vector<Principle> catalog = build_catalog();
  return catalog;
}

// ---------------------------------------------------------------------------
// Bounded meta-rule instances: all semantically distinct formulas over the
// atoms {a, b} up to a depth bound, deduplicated by their value profile on
// the nine trivalent valuations of (a, b).

namespace {

using Signature = std::array<Tv, 9>;

struct Instance {
  FormulaPtr formula;
  Signature sig;
};

std::uint32_t pack(const Signature& sig) {
  std::uint32_t key = 0;
  for (Tv v : sig) key = key * 4 + static_cast<std::uint32_t>(v);
  return key;
}

const std::vector<Instance>& instance_space(int max_depth, bool with_cond,
                                            const SemanticsConfig& cfg) {
  static std::mutex mutex;
  static std::map<std::tuple<int, bool, std::string>, std::vector<Instance>>
      cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = cache.try_emplace({max_depth, with_cond, cfg.name()});
  if (!inserted) return it->second;

  std::vector<Instance>& space = it->second;
  std::unordered_set<std::uint32_t> seen;
  auto add = [&](FormulaPtr f, const Signature& sig) {
    if (seen.insert(pack(sig)).second) space.push_back({std::move(f), sig});
  };

  // Leaf signatures, rows ordered a-major with digits 0, 1/2, 1.
  Signature sig_a, sig_b, sig_t, sig_f;
  for (std::size_t row = 0; row < 9; ++row) {
    sig_a[row] = static_cast<Tv>(row / 3);
    sig_b[row] = static_cast<Tv>(row % 3);
    sig_t[row] = Tv::True;
    sig_f[row] = Tv::False;
  }
  add(atom("a"), sig_a);
  add(atom("b"), sig_b);
  add(top(), sig_t);
  add(bot(), sig_f);

  for (int depth = 1; depth <= max_depth; ++depth) {
    const std::size_t prior = space.size();
    for (std::size_t i = 0; i < prior; ++i) {
      Signature sig;
      for (std::size_t row = 0; row < 9; ++row)
        sig[row] = tv_not(space[i].sig[row]);
      add(neg(space[i].formula), sig);
    }
    for (std::size_t i = 0; i < prior; ++i) {
      for (std::size_t j = 0; j < prior; ++j) {
        Signature sig;
        for (std::size_t row = 0; row < 9; ++row)
          sig[row] = cfg.apply_and(space[i].sig[row], space[j].sig[row]);
        add(conj(space[i].formula, space[j].formula), sig);
        for (std::size_t row = 0; row < 9; ++row)
          sig[row] = cfg.apply_or(space[i].sig[row], space[j].sig[row]);
        add(disj(space[i].formula, space[j].formula), sig);
        if (with_cond) {
          for (std::size_t row = 0; row < 9; ++row)
            sig[row] = cfg.apply_cond(space[i].sig[row], space[j].sig[row]);
          add(cond(space[i].formula, space[j].formula), sig);
        }
      }
    }
  }
  return space;
}

std::string describe_instance(const Sequent& s, const Valuation& v) {
  return render(s) + "  at  " + v.to_string();
}

// Shared scaffolding for the bounded searches: check the conclusion sequent
// of one instance, record the first violation.
struct ViolationScan {
  LogicId logic;
  Mode mode;
  const SemanticsConfig& cfg;
  const ConsequenceLimits& limits;
  MetaRuleOutcome outcome;

  // Returns true when the instance violates the rule (search can stop).
  bool check(const Sequent& conclusion_sequent) {
    ++outcome.instances_checked;
    Verdict v = logic == LogicId::C
                    ? entails_c(conclusion_sequent, cfg, mode, limits)
                    : entails_u(conclusion_sequent, cfg, mode, limits);
    if (v.is_valid()) return false;
    outcome.violation_found = true;
    if (v.countermodel) {
      outcome.instance =
          describe_instance(conclusion_sequent, *v.countermodel);
      outcome.countermodel = std::move(v.countermodel);
    } else {
      outcome.instance = render(conclusion_sequent);
    }
    return true;
  }
};

}  // namespace

MetaRuleOutcome meta_rule_check(MetaRuleId rule, LogicId logic, Mode mode,
                                int depth_bound, const SemanticsConfig& cfg,
                                const ConsequenceLimits& limits) {
  if (depth_bound < 1) throw Error("meta-rule depth bound must be >= 1");
  const bool with_cond = mode == Mode::Trivalent;
  ViolationScan scan{logic, mode, cfg, limits, {}};

  switch (rule) {
    case MetaRuleId::SupraclassicalityLaws: {
      // If |=_CL A (A conditional-free), then |= A.
      for (const auto& inst : instance_space(depth_bound, false, cfg)) {
        if (!classical_valid(*inst.formula, limits.enumeration)) continue;
        if (scan.check(Sequent{{}, inst.formula})) break;
      }
      break;
    }
    case MetaRuleId::SupraclassicalityInferences: {
      // If P |=_CL B, then P |= B.  The counterexamples live in the
      // conditional-free fragment over trivalent valuations, so the scan is
      // mode-independent.
      scan.mode = Mode::Trivalent;
      const auto& premises = instance_space(depth_bound, false, cfg);
      const auto& conclusions = instance_space(1, false, cfg);
      bool done = false;
      for (const auto& p : premises) {
        for (const auto& b : conclusions) {
          Sequent s{{p.formula}, b.formula};
          if (!classical_entails(s, limits.enumeration)) continue;
          if (scan.check(s)) {
            done = true;
            break;
          }
        }
        if (done) break;
      }
      break;
    }
    case MetaRuleId::LeftLogicalEquivalence: {
      // If A |=_C B and B |=_C A, then A -> C |= B -> C.
      const auto& space = instance_space(depth_bound, with_cond, cfg);
      bool done = false;
      for (const auto& a : space) {
        for (const auto& b : space) {
          if (!entails_c(Sequent{{a.formula}, b.formula}, cfg, mode, limits)
                   .is_valid() ||
              !entails_c(Sequent{{b.formula}, a.formula}, cfg, mode, limits)
                   .is_valid())
            continue;
          for (const auto& c : space) {
            Sequent s{{cond(a.formula, c.formula)}, cond(b.formula, c.formula)};
            if (scan.check(s)) {
              done = true;
              break;
            }
          }
          if (done) break;
        }
        if (done) break;
      }
      break;
    }
    case MetaRuleId::RightWeakening: {
      // If B |=_C C, then A -> B |= A -> C.
      const auto& space = instance_space(depth_bound, with_cond, cfg);
      bool done = false;
      for (const auto& b : space) {
        for (const auto& c : space) {
          if (!entails_c(Sequent{{b.formula}, c.formula}, cfg, mode, limits)
                   .is_valid())
            continue;
          for (const auto& a : space) {
            Sequent s{{cond(a.formula, b.formula)}, cond(a.formula, c.formula)};
            if (scan.check(s)) {
              done = true;
              break;
            }
          }
          if (done) break;
        }
        if (done) break;
      }
      break;
    }
    case MetaRuleId::ConditionalK: {
      // If A1, ..., An |=_C C, then B -> A1, ..., B -> An |= B -> C;
      // verified for n in {1, 2}.
      const auto& space = instance_space(depth_bound, with_cond, cfg);
      bool done = false;
      for (std::size_t i = 0; i < space.size() && !done; ++i) {
        for (std::size_t j = i; j < space.size() && !done; ++j) {
          for (const auto& c : space) {
            bool single = j == i;
            Sequent side{single ? std::vector<FormulaPtr>{space[i].formula}
                                : std::vector<FormulaPtr>{space[i].formula,
                                                          space[j].formula},
                         c.formula};
            if (!entails_c(side, cfg, mode, limits).is_valid()) continue;
            for (const auto& b : space) {
              std::vector<FormulaPtr> lifted;
              lifted.push_back(cond(b.formula, space[i].formula));
              if (!single) lifted.push_back(cond(b.formula, space[j].formula));
              Sequent s{std::move(lifted), cond(b.formula, c.formula)};
              if (scan.check(s)) {
                done = true;
                break;
              }
            }
            if (done) break;
          }
        }
      }
      break;
    }
  }
  return scan.outcome;
}

Verdict evaluate_principle(const Principle& p, LogicId logic, Mode mode,
                           const SemanticsConfig& cfg,
                           const ConsequenceLimits& limits) {
  switch (p.kind) {
    case PrincipleKind::Theorem: {
      Sequent s{{}, parse(p.formula)};
      return logic == LogicId::C ? entails_c(s, cfg, mode, limits)
                                 : entails_u(s, cfg, mode, limits);
    }
    case PrincipleKind::Sequent: {
      for (const auto& schema : p.sequents) {
        Sequent s;
        for (const auto& text : schema.premises)
          s.premises.push_back(parse(text));
        s.conclusion = parse(schema.conclusion);
        Verdict v = logic == LogicId::C ? entails_c(s, cfg, mode, limits)
                                        : entails_u(s, cfg, mode, limits);
        if (!v.is_valid()) return v;
      }
      return {};
    }
    case PrincipleKind::MetaRule: {
      MetaRuleOutcome outcome =
          meta_rule_check(*p.meta_rule, logic, mode, p.meta_depth, cfg, limits);
      Verdict v;
      if (outcome.violation_found) {
        v.status = Verdict::Status::Invalid;
        v.countermodel = std::move(outcome.countermodel);
      }
      return v;
    }
  }
  throw Error("corrupt principle kind");
}

Verdict dual_mode_verdict(const Principle& p, LogicId logic,
                          const SemanticsConfig& cfg,
                          const ConsequenceLimits& limits) {
  Verdict trivalent = evaluate_principle(p, logic, Mode::Trivalent, cfg, limits);
  if (trivalent.is_valid()) return trivalent;
  Verdict bivalent = evaluate_principle(p, logic, Mode::Bivalent, cfg, limits);
  trivalent.bivalent_only = bivalent.is_valid();
  return trivalent;
}

PrincipleReport full_report(const SemanticsConfig& cfg,
                            const ConsequenceLimits& limits) {
  PrincipleReport report;
  for (const auto& p : principle_catalog()) {
    for (LogicId logic : {LogicId::C, LogicId::U}) {
      for (Mode mode : {Mode::Trivalent, Mode::Bivalent}) {
        ReportRow row;
        row.principle = p.name;
        row.group = p.group;
        row.fixture = p.fixture;
        row.logic = logic;
        row.mode = mode;
        row.expected_valid = p.expected_valid(logic, mode);
        if (p.kind == PrincipleKind::MetaRule) {
          MetaRuleOutcome outcome = meta_rule_check(*p.meta_rule, logic, mode,
                                                    p.meta_depth, cfg, limits);
          row.computed_valid = !outcome.violation_found;
          if (outcome.violation_found) row.countermodel = outcome.instance;
        } else {
          Verdict v = evaluate_principle(p, logic, mode, cfg, limits);
          row.computed_valid = v.is_valid();
          if (v.countermodel) row.countermodel = v.countermodel->to_string();
        }
        if (row.mismatch()) ++report.mismatches;
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

}  // namespace trivalent
