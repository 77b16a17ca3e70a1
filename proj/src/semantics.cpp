#include "trivalent/semantics.hpp"

#include <algorithm>
#include <sstream>

namespace trivalent {

std::string to_string(Tv v) {
  switch (v) {
    case Tv::False: return "0";
    case Tv::Half: return "1/2";
    case Tv::True: return "1";
  }
  return "?";
}

Tv tv_not(Tv a) {
  return static_cast<Tv>(2 - static_cast<std::uint8_t>(a));
}

Tv sk_and(Tv a, Tv b) { return std::min(a, b); }
Tv sk_or(Tv a, Tv b) { return std::max(a, b); }

Tv quasi_and(Tv a, Tv b) {
  if (a == Tv::Half) return b;
  if (b == Tv::Half) return a;
  return std::min(a, b);
}

Tv quasi_or(Tv a, Tv b) {
  if (a == Tv::Half) return b;
  if (b == Tv::Half) return a;
  return std::max(a, b);
}

Tv cooper_cond(Tv a, Tv c) { return a == Tv::False ? Tv::Half : c; }

Tv definetti_cond(Tv a, Tv c) { return a == Tv::True ? c : Tv::Half; }

Tv SemanticsConfig::apply_cond(Tv a, Tv c) const {
  return conditional == ConditionalTable::Cooper ? cooper_cond(a, c)
                                                 : definetti_cond(a, c);
}

Tv SemanticsConfig::apply_and(Tv a, Tv b) const {
  return connectives == ConnectiveFamily::Quasi ? quasi_and(a, b)
                                                : sk_and(a, b);
}

Tv SemanticsConfig::apply_or(Tv a, Tv b) const {
  return connectives == ConnectiveFamily::Quasi ? quasi_or(a, b)
                                                : sk_or(a, b);
}

std::string SemanticsConfig::name() const {
  std::string out =
      conditional == ConditionalTable::Cooper ? "cooper" : "definetti";
  out += connectives == ConnectiveFamily::Quasi ? "-quasi" : "-sk";
  return out;
}

SemanticsConfig SemanticsConfig::from_name(std::string_view name) {
  if (name == "cooper-quasi")
    return {ConditionalTable::Cooper, ConnectiveFamily::Quasi};
  if (name == "definetti-quasi")
    return {ConditionalTable::DeFinetti, ConnectiveFamily::Quasi};
  if (name == "cooper-sk")
    return {ConditionalTable::Cooper, ConnectiveFamily::StrongKleene};
  if (name == "definetti-sk")
    return {ConditionalTable::DeFinetti, ConnectiveFamily::StrongKleene};
  throw Error("unknown semantics '" + std::string(name) +
              "' (use cooper-quasi, definetti-quasi, cooper-sk or "
              "definetti-sk)");
}

std::string to_string(Mode m) {
  return m == Mode::Trivalent ? "trivalent" : "bivalent";
}

Valuation::Valuation(std::shared_ptr<const AtomNames> names,
                     std::vector<Tv> values, Mode mode)
    : names_(std::move(names)), values_(std::move(values)), mode_(mode) {
  if (names_->size() != values_.size())
    throw Error("valuation arity mismatch");
  if (mode_ == Mode::Bivalent) {
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (values_[i] == Tv::Half)
        throw Error("bivalent valuation assigns 1/2 to atom '" +
                    (*names_)[i] + "'");
  }
}

Tv Valuation::at(std::string_view name) const {
  auto it = std::lower_bound(names_->begin(), names_->end(), name);
  if (it == names_->end() || *it != name)
    throw Error("unassigned atom: '" + std::string(name) + "'");
  return values_[static_cast<std::size_t>(it - names_->begin())];
}

std::string Valuation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) out += ", ";
    out += (*names_)[i] + "=" + trivalent::to_string(values_[i]);
  }
  return out;
}

std::string Valuation::key() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) out += ",";
    out += (*names_)[i] + "=" + trivalent::to_string(values_[i]);
  }
  return out;
}

bool Valuation::operator==(const Valuation& other) const {
  return mode_ == other.mode_ && *names_ == *other.names_ &&
         values_ == other.values_;
}

namespace {

AtomNames sorted_unique(AtomNames names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

}  // namespace

ValuationSpace::ValuationSpace(AtomNames names, Mode mode,
                               const EnumerationLimits& limits)
    : names_(std::make_shared<const AtomNames>(sorted_unique(std::move(names)))),
      mode_(mode) {
  const int n = static_cast<int>(names_->size());
  const int cap = mode == Mode::Trivalent ? limits.max_trivalent_atoms
                                          : limits.max_bivalent_atoms;
  if (n > cap) {
    std::ostringstream os;
    os << "atom cap exceeded: " << n << " atoms, " << to_string(mode)
       << " cap is " << cap;
    throw CapExceeded(os.str());
  }
  const std::size_t radix = mode == Mode::Trivalent ? 3 : 2;
  size_ = 1;
  for (int i = 0; i < n; ++i) size_ *= radix;
}

Valuation ValuationSpace::at(std::size_t index) const {
  if (index >= size_) throw Error("valuation index out of range");
  const std::size_t n = names_->size();
  const std::size_t radix = mode_ == Mode::Trivalent ? 3 : 2;
  std::vector<Tv> values(n);
  for (std::size_t i = n; i-- > 0;) {
    std::size_t digit = index % radix;
    index /= radix;
    if (mode_ == Mode::Bivalent)
      values[i] = digit == 0 ? Tv::False : Tv::True;
    else
      values[i] = static_cast<Tv>(digit);
  }
  return Valuation(names_, std::move(values), mode_);
}

std::size_t ValuationSpace::index_of(const Valuation& v) const {
  if (v.names() != *names_) throw Error("valuation over a different atom set");
  const std::size_t radix = mode_ == Mode::Trivalent ? 3 : 2;
  std::size_t index = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::size_t digit;
    if (mode_ == Mode::Bivalent) {
      if (v.value_at(i) == Tv::Half)
        throw Error("bivalent space cannot index a 1/2 assignment");
      digit = v.value_at(i) == Tv::True ? 1 : 0;
    } else {
      digit = static_cast<std::size_t>(v.value_at(i));
    }
    index = index * radix + digit;
  }
  return index;
}

Tv eval(const Formula& f, const Valuation& v, const SemanticsConfig& cfg) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return v.at(f.atom_name());
    case Formula::Kind::Top:
      return Tv::True;
    case Formula::Kind::Bot:
      return Tv::False;
    case Formula::Kind::Not:
      return tv_not(eval(*f.lhs(), v, cfg));
    case Formula::Kind::And:
      return cfg.apply_and(eval(*f.lhs(), v, cfg), eval(*f.rhs(), v, cfg));
    case Formula::Kind::Or:
      return cfg.apply_or(eval(*f.lhs(), v, cfg), eval(*f.rhs(), v, cfg));
    case Formula::Kind::Cond:
      return cfg.apply_cond(eval(*f.lhs(), v, cfg), eval(*f.rhs(), v, cfg));
  }
  throw Error("corrupt formula node");
}

TruthTable truth_table(const Formula& f, const SemanticsConfig& cfg, Mode mode,
                       const EnumerationLimits& limits) {
  ValuationSpace space(atoms(f), mode, limits);
  std::vector<Tv> values;
  values.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i)
    values.push_back(eval(f, space.at(i), cfg));
  return {std::move(space), std::move(values)};
}

bool equivalent(const Formula& f, const Formula& g, const SemanticsConfig& cfg,
                Mode mode, const EnumerationLimits& limits) {
  AtomNames shared = atoms(f);
  for (auto& name : atoms(g)) shared.push_back(name);
  ValuationSpace space(std::move(shared), mode, limits);
  for (std::size_t i = 0; i < space.size(); ++i) {
    Valuation v = space.at(i);
    if (eval(f, v, cfg) != eval(g, v, cfg)) return false;
  }
  return true;
}

}  // namespace trivalent
