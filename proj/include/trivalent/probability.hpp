// Exact non-classical probability over credence functions on finite world
// sets.  Worlds are valuations of a fixed atom set; a credence assigns each
// world a nonnegative rational weight, the weights summing to exactly 1.
//
// For a formula A with true/indeterminate/false masses t, i, f:
//
//   p(A) = t / (t + f)    when t + f > 0,
//   p(A) = 1              when t + f = 0 (A indeterminate everywhere).
//
// Decimal odds O(A) = (t + f) / t, with p(A) = 1/O(A).  All arithmetic is
// exact; equality checks are rational equality, never tolerances.

#ifndef TRIVALENT_PROBABILITY_HPP
#define TRIVALENT_PROBABILITY_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trivalent/consequence.hpp"
#include "trivalent/formula.hpp"
#include "trivalent/semantics.hpp"

namespace trivalent {

using Rational = mpq_class;

// "num/den" (canonical, or a plain integer when den == 1).
std::string rational_to_string(const Rational& q);
Rational rational_from_string(std::string_view text);

struct TruthPartition {
  Rational true_mass;
  Rational indeterminate_mass;
  Rational false_mass;
};

class Credence {
 public:
  // Validates: weights nonnegative, one per world, summing to exactly 1.
  Credence(ValuationSpace space, std::vector<Rational> weights);

  static Credence point_mass(ValuationSpace space, std::size_t world_index);
  // Weight 1/2 on each of two worlds (weight 1 if they coincide).
  static Credence two_world(ValuationSpace space, std::size_t first,
                            std::size_t second);
  static Credence uniform(ValuationSpace space);

  const ValuationSpace& space() const { return space_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight(std::size_t world_index) const {
    return weights_[world_index];
  }

  // {"atoms":["a","b"],"mode":"bivalent","weights":{"a=1,b=0":"9/10",...}};
  // omitted worlds have weight 0.
  static Credence from_json_text(std::string_view text,
                                 const EnumerationLimits& limits = {});
  std::string to_json_text() const;

 private:
  ValuationSpace space_;
  std::vector<Rational> weights_;
};

TruthPartition partition(const Formula& f, const Credence& cr,
                         const SemanticsConfig& cfg);

Rational probability(const Formula& f, const Credence& cr,
                     const SemanticsConfig& cfg);
inline Rational probability(const FormulaPtr& f, const Credence& cr,
                            const SemanticsConfig& cfg) {
  return probability(*f, cr, cfg);
}

struct DecimalOdds {
  bool is_infinite = false;  // a bet on the formula can never be won
  Rational value;            // meaningful iff !is_infinite
};

// Throws Error when both classical masses are zero (the probability
// definition covers that case instead).
DecimalOdds decimal_odds(const Formula& f, const Credence& cr,
                         const SemanticsConfig& cfg);

// Classical ratio p(c_given | given); both formulas must be
// conditional-free, the credence bivalent, and p(given) > 0.
Rational conditional_probability(const Formula& c_given, const Formula& given,
                                 const Credence& cr);

// p(a -> c) - p(c | a); exactly 0 for every admissible input.
Rational check_adams(const Formula& a, const Formula& c, const Credence& cr,
                     const SemanticsConfig& cfg);

// Reproducible random credence with a common denominator <= bound.  With
// probability 1/10 the draw is a point mass on one world, so degenerate
// cases get exercised.
Credence random_credence(const AtomNames& atom_set, Mode mode,
                         std::uint64_t seed, unsigned denominator_bound,
                         const EnumerationLimits& limits = {});

// -- Probabilistic countermodel search ---------------------------------------

struct SubsetCertificate {
  std::vector<std::size_t> subset;  // premise indices
  FormulaPtr subset_formula;        // their quasi-conjunction
  Credence credence;
  Rational premise_probability;
  Rational conclusion_probability;  // strictly below premise_probability
};

struct ProbabilisticCountermodel {
  std::vector<SubsetCertificate> certificates;  // one per premise subset
};

// Looks for a credence with p(subset conjunction) > p(conclusion) for every
// premise subset: together the certificates witness that no subset can
// validate the sequent in U.  Tries the two structured families (point
// mass; half/half two-world pair) first, then up to `budget` random
// credences per subset.  A nullopt result is inconclusive, not a validity
// proof.
std::optional<ProbabilisticCountermodel> search_probabilistic_countermodel(
    const Sequent& s, const SemanticsConfig& cfg, std::size_t budget,
    std::uint64_t seed, const ConsequenceLimits& limits = {});

// -- Fixed demonstrations -----------------------------------------------------

// Three-outcome election credence over atoms {n, r}: Reagan (r=1,n=0),
// Carter (r=0,n=0), Anderson (r=0,n=1).  Premises "(r | n) -> (~r -> n)"
// and "r | n" come out highly probable while the conclusion "~r -> n" does
// not, and the total-probability decompositions hold exactly.
struct McGeeReport {
  Credence credence;
  Rational p_major;        // (r | n) -> (~r -> n)
  Rational p_minor;        // r | n
  Rational p_conclusion;   // ~r -> n
  // p(n) = p(n|r)p(r) + p(n|~r)(1-p(r))
  bool total_probability_exact;
  // p(n|~r) = p(n|A&~r)p(A|~r) + p(n|~A&~r)(1-p(A|~r)) with A := r | n
  bool nested_decomposition_exact;
};

McGeeReport mcgee_demo(const std::array<Rational, 3>&
                           reagan_carter_anderson_weights = {
                               Rational(85, 100), Rational(14, 100),
                               Rational(1, 100)});

// A credence where a is compatible with c and with ~c, yet
// p(a -> c) != p(c): the Lewis collapse p(A -> C) = p(C) fails here.  Also
// spot-checks the Preservation Condition (p(a) > 0 and p(c) = 0 force
// p(a -> c) = 0) on seeded random credences.
struct TrivialityReport {
  Credence credence;
  Rational p_conditional;        // p(a -> c)
  Rational p_consequent;         // p(c)
  Rational p_both;               // p(a & c) > 0
  Rational p_with_negation;      // p(a & ~c) > 0
  std::size_t preservation_checks;
  bool preservation_holds;
};

TrivialityReport triviality_witness(std::uint64_t seed = 1,
                                    std::size_t preservation_checks = 1000);

}  // namespace trivalent

#endif  // TRIVALENT_PROBABILITY_HPP
