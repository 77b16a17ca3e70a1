// Syntax of the object language: atoms, T/F constants, ~, &, | and a
// primitive conditional ->.  The surface operators => (material) and <->
// are desugared by the parser ("a => b" becomes "~a | b", "a <-> b" becomes
// "(a -> b) & (b -> a)") and never appear as AST nodes.
//
// Grammar (whitespace insignificant):
//   formula := cond
//   cond    := disj (("->" | "=>" | "<->") cond)?
//   disj    := conj ("|" conj)*
//   conj    := neg ("&" neg)*
//   neg     := "~" neg | atom | "T" | "F" | "(" formula ")"
//
// Precedence: ~ > & > | > (->, =>, <->); -> is right-associative, & and |
// are left-associative.  Atom names match [a-z][a-zA-Z0-9_]*.

#ifndef TRIVALENT_FORMULA_HPP
#define TRIVALENT_FORMULA_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trivalent {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration would exceed the configured atom cap.
struct CapExceeded : Error {
  using Error::Error;
};

// Carries the byte offset of the failure and the token set that would have
// been acceptable there.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t offset,
             std::vector<std::string> expected);

  std::size_t offset;
  std::vector<std::string> expected;
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
 public:
  enum class Kind { Atom, Top, Bot, Not, And, Or, Cond };

  Kind kind() const { return kind_; }
  const std::string& atom_name() const { return name_; }
  const FormulaPtr& lhs() const { return lhs_; }  // Not, And, Or, Cond
  const FormulaPtr& rhs() const { return rhs_; }  // And, Or, Cond

  // Leaves have depth 0.
  int depth() const { return depth_; }

  Formula(Kind kind, std::string name, FormulaPtr lhs, FormulaPtr rhs);

 private:
  Kind kind_;
  std::string name_;
  FormulaPtr lhs_;
  FormulaPtr rhs_;
  int depth_ = 0;
};

// Node factories.  atom() validates the name against the grammar.
FormulaPtr atom(std::string name);
FormulaPtr top();
FormulaPtr bot();
FormulaPtr neg(FormulaPtr f);
FormulaPtr conj(FormulaPtr l, FormulaPtr r);
FormulaPtr disj(FormulaPtr l, FormulaPtr r);
FormulaPtr cond(FormulaPtr l, FormulaPtr r);

// ~l | r, the desugared material conditional.
FormulaPtr material(FormulaPtr l, FormulaPtr r);

bool equal(const Formula& a, const Formula& b);
inline bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  return equal(*a, *b);
}

FormulaPtr parse(std::string_view text);

// Minimal-parenthesis printing; parse(render(f)) is structurally f.
std::string render(const Formula& f);
inline std::string render(const FormulaPtr& f) { return render(*f); }

// Atom names in lexicographic order, duplicates removed.
std::vector<std::string> atoms(const Formula& f);
std::vector<std::string> atoms(const std::vector<FormulaPtr>& fs);

bool is_conditional_free(const Formula& f);

// Homomorphic replacement of atoms by formulas; throws Error on an atom
// missing from the binding.
FormulaPtr substitute(const FormulaPtr& schema,
                      const std::map<std::string, FormulaPtr>& binding);

}  // namespace trivalent

#endif  // TRIVALENT_FORMULA_HPP
