#include "trivalent/consequence.hpp"

#include <algorithm>
#include <sstream>

namespace trivalent {

Sequent parse_sequent(std::string_view text) {
  auto turnstile = text.find("|-");
  if (turnstile == std::string_view::npos)
    throw ParseError("missing turnstile", text.size(), {"'|-'"});
  std::string_view premise_part = text.substr(0, turnstile);
  std::string_view conclusion_part = text.substr(turnstile + 2);

  Sequent s;
  std::size_t start = 0;
  auto nonblank = [](std::string_view sv) {
    return sv.find_first_not_of(" \t\r\n") != std::string_view::npos;
  };
  while (start <= premise_part.size()) {
    std::size_t semi = premise_part.find(';', start);
    std::string_view piece = premise_part.substr(
        start, semi == std::string_view::npos ? std::string_view::npos
                                              : semi - start);
    if (nonblank(piece)) s.premises.push_back(parse(piece));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (!nonblank(conclusion_part))
    throw ParseError("missing conclusion", text.size(), {"formula"});
  s.conclusion = parse(conclusion_part);
  return s;
}

std::string render(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.premises.size(); ++i) {
    if (i > 0) out += "; ";
    out += render(*s.premises[i]);
  }
  if (!s.premises.empty()) out += " ";
  out += "|- " + render(*s.conclusion);
  return out;
}

namespace {

ValuationSpace sequent_space(const Sequent& s, Mode mode,
                             const ConsequenceLimits& limits) {
  AtomNames names = atoms(s.premises);
  for (auto& a : atoms(*s.conclusion)) names.push_back(a);
  return ValuationSpace(std::move(names), mode, limits.enumeration);
}

bool designated(Tv v) { return v != Tv::False; }

}  // namespace

Verdict entails_c(const Sequent& s, const SemanticsConfig& cfg, Mode mode,
                  const ConsequenceLimits& limits) {
  ValuationSpace space = sequent_space(s, mode, limits);
  for (std::size_t i = 0; i < space.size(); ++i) {
    Valuation v = space.at(i);
    if (eval(*s.conclusion, v, cfg) != Tv::False) continue;
    bool all_designated = true;
    for (const auto& p : s.premises) {
      if (!designated(eval(*p, v, cfg))) {
        all_designated = false;
        break;
      }
    }
    if (all_designated)
      return {Verdict::Status::Invalid, std::move(v), std::nullopt, false};
  }
  return {};
}

Verdict is_theorem_c(const Formula& f, const SemanticsConfig& cfg, Mode mode,
                     const ConsequenceLimits& limits) {
  ValuationSpace space(atoms(f), mode, limits.enumeration);
  for (std::size_t i = 0; i < space.size(); ++i) {
    Valuation v = space.at(i);
    if (eval(f, v, cfg) == Tv::False)
      return {Verdict::Status::Invalid, std::move(v), std::nullopt, false};
  }
  return {};
}

Verdict entails_ss(const FormulaPtr& premise, const FormulaPtr& conclusion,
                   const SemanticsConfig& cfg, Mode mode,
                   const ConsequenceLimits& limits) {
  Sequent s{{premise}, conclusion};
  ValuationSpace space = sequent_space(s, mode, limits);
  for (std::size_t i = 0; i < space.size(); ++i) {
    Valuation v = space.at(i);
    if (eval(*premise, v, cfg) == Tv::True &&
        eval(*conclusion, v, cfg) != Tv::True)
      return {Verdict::Status::Invalid, std::move(v), std::nullopt, false};
  }
  return {};
}

FormulaPtr subset_conjunction(const Sequent& s,
                              const std::vector<std::size_t>& subset) {
  if (subset.empty()) return top();
  FormulaPtr out = s.premises.at(subset[0]);
  for (std::size_t i = 1; i < subset.size(); ++i)
    out = conj(out, s.premises.at(subset[i]));
  return out;
}

namespace {

// All index subsets of {0..n-1}, cardinality ascending, lexicographic
// within a cardinality.
std::vector<std::vector<std::size_t>> subsets_in_search_order(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) subset.push_back(i);
    out.push_back(std::move(subset));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a < b;
                   });
  return out;
}

std::optional<Valuation> pointwise_countermodel(const FormulaPtr& premise,
                                                const FormulaPtr& conclusion,
                                                const ValuationSpace& space,
                                                const SemanticsConfig& cfg) {
  for (std::size_t i = 0; i < space.size(); ++i) {
    Valuation v = space.at(i);
    if (!(eval(*premise, v, cfg) <= eval(*conclusion, v, cfg))) return v;
  }
  return std::nullopt;
}

}  // namespace

Verdict entails_u(const Sequent& s, const SemanticsConfig& cfg, Mode mode,
                  const ConsequenceLimits& limits) {
  if (s.premises.size() > limits.max_premises_for_subsets) {
    std::ostringstream os;
    os << "premise count " << s.premises.size() << " exceeds the subset cap "
       << limits.max_premises_for_subsets;
    throw CapExceeded(os.str());
  }
  // Theoremhood of the conclusion short-circuits the subset search.
  if (is_theorem_c(*s.conclusion, cfg, mode, limits).is_valid()) return {};

  ValuationSpace space = sequent_space(s, mode, limits);
  std::optional<Valuation> full_set_countermodel;
  for (const auto& subset : subsets_in_search_order(s.premises.size())) {
    auto cm = pointwise_countermodel(subset_conjunction(s, subset),
                                     s.conclusion, space, cfg);
    if (!cm)
      return {Verdict::Status::Valid, std::nullopt, subset, false};
    if (subset.size() == s.premises.size())
      full_set_countermodel = std::move(cm);
  }
  return {Verdict::Status::Invalid, std::move(full_set_countermodel),
          std::nullopt, false};
}

std::vector<SubsetOutcome> u_subset_outcomes(const Sequent& s,
                                             const SemanticsConfig& cfg,
                                             Mode mode,
                                             const ConsequenceLimits& limits) {
  if (s.premises.size() > limits.max_premises_for_subsets)
    throw CapExceeded("premise count exceeds the subset cap");
  ValuationSpace space = sequent_space(s, mode, limits);
  std::vector<SubsetOutcome> out;
  for (const auto& subset : subsets_in_search_order(s.premises.size())) {
    auto cm = pointwise_countermodel(subset_conjunction(s, subset),
                                     s.conclusion, space, cfg);
    out.push_back({subset, std::move(cm)});
  }
  return out;
}

bool classical_valid(const Formula& f, const EnumerationLimits& limits) {
  if (!is_conditional_free(f))
    throw Error("classical validity is defined for conditional-free "
                "formulas only: " + render(f));
  ValuationSpace space(atoms(f), Mode::Bivalent, limits);
  SemanticsConfig cfg;  // irrelevant: conditional-free bivalent is classical
  for (std::size_t i = 0; i < space.size(); ++i)
    if (eval(f, space.at(i), cfg) != Tv::True) return false;
  return true;
}

bool classical_entails(const Sequent& s, const EnumerationLimits& limits) {
  for (const auto& p : s.premises)
    if (!is_conditional_free(*p))
      throw Error("classical consequence needs conditional-free premises");
  if (!is_conditional_free(*s.conclusion))
    throw Error("classical consequence needs a conditional-free conclusion");
  AtomNames names = atoms(s.premises);
  for (auto& a : atoms(*s.conclusion)) names.push_back(a);
  ValuationSpace space(std::move(names), Mode::Bivalent, limits);
  SemanticsConfig cfg;
  for (std::size_t i = 0; i < space.size(); ++i) {
    Valuation v = space.at(i);
    bool premises_true = true;
    for (const auto& p : s.premises)
      if (eval(*p, v, cfg) != Tv::True) {
        premises_true = false;
        break;
      }
    if (premises_true && eval(*s.conclusion, v, cfg) != Tv::True) return false;
  }
  return true;
}

}  // namespace trivalent
