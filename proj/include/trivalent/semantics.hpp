// Truth-functional evaluation over the three semantic values 0, 1/2, 1.
//
// Conditional tables (antecedent row, consequent column, order 1 / 1/2 / 0):
//
//   de Finetti                     Cooper
//     1  |  1   1/2   0              1  |  1   1/2   0
//    1/2 | 1/2  1/2  1/2            1/2 |  1   1/2   0
//     0  | 1/2  1/2  1/2             0  | 1/2  1/2  1/2
//
// de Finetti treats an indeterminate antecedent like a false one, Cooper
// like a true one.  Negation is always Strong Kleene (value inversion).
// Conjunction/disjunction come in two families: Strong Kleene (min/max) and
// the quasi connectives, where an indeterminate operand is neutral:
//
//   quasi-and: 1/2 & x = x & 1/2 = x, classical otherwise
//   quasi-or:  1/2 | x = x | 1/2 = x, classical otherwise

#ifndef TRIVALENT_SEMANTICS_HPP
#define TRIVALENT_SEMANTICS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "trivalent/formula.hpp"

namespace trivalent {

// Totally ordered: False < Half < True.
enum class Tv : std::uint8_t { False = 0, Half = 1, True = 2 };

inline bool operator<(Tv a, Tv b) {
  return static_cast<std::uint8_t>(a) < static_cast<std::uint8_t>(b);
}
inline bool operator<=(Tv a, Tv b) { return a == b || a < b; }

std::string to_string(Tv v);  // "0", "1/2", "1"

Tv tv_not(Tv a);
Tv sk_and(Tv a, Tv b);
Tv sk_or(Tv a, Tv b);
Tv quasi_and(Tv a, Tv b);
Tv quasi_or(Tv a, Tv b);
Tv cooper_cond(Tv a, Tv c);
Tv definetti_cond(Tv a, Tv c);

enum class ConditionalTable { Cooper, DeFinetti };
enum class ConnectiveFamily { Quasi, StrongKleene };

struct SemanticsConfig {
  ConditionalTable conditional = ConditionalTable::Cooper;
  ConnectiveFamily connectives = ConnectiveFamily::Quasi;

  Tv apply_cond(Tv a, Tv c) const;
  Tv apply_and(Tv a, Tv b) const;
  Tv apply_or(Tv a, Tv b) const;

  // "cooper-quasi" (default), "definetti-quasi", "cooper-sk", "definetti-sk"
  std::string name() const;
  static SemanticsConfig from_name(std::string_view name);
};

enum class Mode { Trivalent, Bivalent };

std::string to_string(Mode m);

struct EnumerationLimits {
  int max_trivalent_atoms = 12;
  int max_bivalent_atoms = 20;
};

using AtomNames = std::vector<std::string>;

// Total assignment of truth values to a sorted atom list.  In bivalent
// ("atom-classical") mode no atom carries 1/2; compound formulas may still
// evaluate to 1/2.
class Valuation {
 public:
  Valuation(std::shared_ptr<const AtomNames> names, std::vector<Tv> values,
            Mode mode);

  const AtomNames& names() const { return *names_; }
  Mode mode() const { return mode_; }
  std::size_t size() const { return values_.size(); }
  Tv value_at(std::size_t i) const { return values_[i]; }

  // Throws Error on an atom outside the domain.
  Tv at(std::string_view name) const;

  std::string to_string() const;  // "a=1, b=1/2"
  std::string key() const;        // "a=1,b=1/2" (credence JSON key form)

  bool operator==(const Valuation& other) const;

 private:
  std::shared_ptr<const AtomNames> names_;
  std::vector<Tv> values_;
  Mode mode_;
};

// The 3^n (or 2^n) valuations of an atom set in a fixed order: the first
// atom is the most significant digit, digit order 0, 1/2, 1.
class ValuationSpace {
 public:
  ValuationSpace(AtomNames names, Mode mode,
                 const EnumerationLimits& limits = {});

  const AtomNames& names() const { return *names_; }
  std::shared_ptr<const AtomNames> shared_names() const { return names_; }
  Mode mode() const { return mode_; }
  std::size_t size() const { return size_; }

  Valuation at(std::size_t index) const;
  std::size_t index_of(const Valuation& v) const;

 private:
  std::shared_ptr<const AtomNames> names_;
  Mode mode_;
  std::size_t size_;
};

Tv eval(const Formula& f, const Valuation& v, const SemanticsConfig& cfg);
inline Tv eval(const FormulaPtr& f, const Valuation& v,
               const SemanticsConfig& cfg) {
  return eval(*f, v, cfg);
}

struct TruthTable {
  ValuationSpace space;
  std::vector<Tv> values;  // one per valuation, in enumeration order
};

TruthTable truth_table(const Formula& f, const SemanticsConfig& cfg, Mode mode,
                       const EnumerationLimits& limits = {});

// True iff f and g evaluate identically on every valuation of their shared
// atom set.
bool equivalent(const Formula& f, const Formula& g, const SemanticsConfig& cfg,
                Mode mode, const EnumerationLimits& limits = {});

}  // namespace trivalent

#endif  // TRIVALENT_SEMANTICS_HPP
