// Decision procedures for the three consequence relations, all by finite
// truth-table enumeration over the sequent's atom set:
//
//   C  (certain inference): no valuation makes every premise designated
//      (value >= 1/2) while the conclusion is 0.
//   SS (possibility preservation): every valuation giving the premise
//      value 1 gives the conclusion value 1.  Single-premise.
//   U  (uncertain inference): the conclusion is a C-theorem, or some
//      premise subset's quasi-conjunction never exceeds the conclusion's
//      value.  Subsets are searched by cardinality, then lexicographically,
//      so the reported witness is minimal.

#ifndef TRIVALENT_CONSEQUENCE_HPP
#define TRIVALENT_CONSEQUENCE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "trivalent/formula.hpp"
#include "trivalent/semantics.hpp"

namespace trivalent {

struct Sequent {
  std::vector<FormulaPtr> premises;
  FormulaPtr conclusion;
};

// "P1; P2; ... |- C".  An empty premise side ("|- C") asks for theoremhood.
Sequent parse_sequent(std::string_view text);
std::string render(const Sequent& s);

struct Verdict {
  enum class Status { Valid, Invalid };

  Status status = Status::Valid;
  std::optional<Valuation> countermodel;                // present iff Invalid
  std::optional<std::vector<std::size_t>> witness_subset;  // U only
  bool bivalent_only = false;  // set by dual-mode checks

  bool is_valid() const { return status == Status::Valid; }
};

struct ConsequenceLimits {
  EnumerationLimits enumeration;
  std::size_t max_premises_for_subsets = 16;  // U-subset search cap
};

Verdict entails_c(const Sequent& s, const SemanticsConfig& cfg, Mode mode,
                  const ConsequenceLimits& limits = {});

Verdict is_theorem_c(const Formula& f, const SemanticsConfig& cfg, Mode mode,
                     const ConsequenceLimits& limits = {});
inline Verdict is_theorem_c(const FormulaPtr& f, const SemanticsConfig& cfg,
                            Mode mode, const ConsequenceLimits& limits = {}) {
  return is_theorem_c(*f, cfg, mode, limits);
}

Verdict entails_ss(const FormulaPtr& premise, const FormulaPtr& conclusion,
                   const SemanticsConfig& cfg, Mode mode,
                   const ConsequenceLimits& limits = {});

Verdict entails_u(const Sequent& s, const SemanticsConfig& cfg, Mode mode,
                  const ConsequenceLimits& limits = {});

// Quasi-conjunction of the premises selected by `subset` (empty -> T),
// folded left in index order with the configured conjunction.
FormulaPtr subset_conjunction(const Sequent& s,
                              const std::vector<std::size_t>& subset);

// Premise subsets in search order together with a countermodel for each
// failing one (a valuation where the subset's conjunction exceeds the
// conclusion).  Backs the CLI's --exhaustive view and the cross-validation
// harnesses.
struct SubsetOutcome {
  std::vector<std::size_t> subset;
  std::optional<Valuation> countermodel;  // absent iff the subset witnesses U
};
std::vector<SubsetOutcome> u_subset_outcomes(const Sequent& s,
                                             const SemanticsConfig& cfg,
                                             Mode mode,
                                             const ConsequenceLimits& limits = {});

// Classical two-valued tautology check; the formula must be
// conditional-free.
bool classical_valid(const Formula& f, const EnumerationLimits& limits = {});
inline bool classical_valid(const FormulaPtr& f,
                            const EnumerationLimits& limits = {}) {
  return classical_valid(*f, limits);
}

// Classical consequence for conditional-free sequents.
bool classical_entails(const Sequent& s, const EnumerationLimits& limits = {});

}  // namespace trivalent

#endif  // TRIVALENT_CONSEQUENCE_HPP
