#include "trivalent/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <utility>

namespace trivalent {

namespace {

std::string format_parse_error(const std::string& msg, std::size_t offset,
                               const std::vector<std::string>& expected) {
  std::ostringstream os;
  os << "syntax error at offset " << offset << ": " << msg;
  if (!expected.empty()) {
    os << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) os << (i + 1 == expected.size() ? " or " : ", ");
      os << expected[i];
    }
    os << ")";
  }
  return os.str();
}

bool valid_atom_name(std::string_view name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0])))
    return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

ParseError::ParseError(const std::string& msg, std::size_t offset,
                       std::vector<std::string> expected)
    : Error(format_parse_error(msg, offset, expected)),
      offset(offset),
      expected(std::move(expected)) {}

Formula::Formula(Kind kind, std::string name, FormulaPtr lhs, FormulaPtr rhs)
    : kind_(kind), name_(std::move(name)), lhs_(std::move(lhs)),
      rhs_(std::move(rhs)) {
  if (lhs_) depth_ = lhs_->depth() + 1;
  if (rhs_) depth_ = std::max(depth_, rhs_->depth() + 1);
}

FormulaPtr atom(std::string name) {
  if (!valid_atom_name(name))
    throw Error("invalid atom name: '" + name + "'");
  return std::make_shared<Formula>(Formula::Kind::Atom, std::move(name),
                                   nullptr, nullptr);
}

FormulaPtr top() {
  static const FormulaPtr instance =
      std::make_shared<Formula>(Formula::Kind::Top, "", nullptr, nullptr);
  return instance;
}

FormulaPtr bot() {
  static const FormulaPtr instance =
      std::make_shared<Formula>(Formula::Kind::Bot, "", nullptr, nullptr);
  return instance;
}

FormulaPtr neg(FormulaPtr f) {
  return std::make_shared<Formula>(Formula::Kind::Not, "", std::move(f),
                                   nullptr);
}

FormulaPtr conj(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(Formula::Kind::And, "", std::move(l),
                                   std::move(r));
}

FormulaPtr disj(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(Formula::Kind::Or, "", std::move(l),
                                   std::move(r));
}

FormulaPtr cond(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(Formula::Kind::Cond, "", std::move(l),
                                   std::move(r));
}

FormulaPtr material(FormulaPtr l, FormulaPtr r) {
  return disj(neg(std::move(l)), std::move(r));
}

bool equal(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Atom:
      return a.atom_name() == b.atom_name();
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return true;
    case Formula::Kind::Not:
      return equal(*a.lhs(), *b.lhs());
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Cond:
      return equal(*a.lhs(), *b.lhs()) && equal(*a.rhs(), *b.rhs());
  }
  return false;
}

// ---------------------------------------------------------------------------
// Parser: a hand-rolled lexer plus recursive descent over the grammar.

namespace {

enum class Tok {
  Atom, Top, Bot, Not, And, Or, Cond, Material, Iff, LParen, RParen, End
};

const char* token_name(Tok t) {
  switch (t) {
    case Tok::Atom: return "atom";
    case Tok::Top: return "'T'";
    case Tok::Bot: return "'F'";
    case Tok::Not: return "'~'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Cond: return "'->'";
    case Tok::Material: return "'=>'";
    case Tok::Iff: return "'<->'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;  // atom name
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    switch (c) {
      case '~': out.push_back({Tok::Not, start, ""}); ++i; continue;
      case '&': out.push_back({Tok::And, start, ""}); ++i; continue;
      case '|': out.push_back({Tok::Or, start, ""}); ++i; continue;
      case '(': out.push_back({Tok::LParen, start, ""}); ++i; continue;
      case ')': out.push_back({Tok::RParen, start, ""}); ++i; continue;
      case 'T': out.push_back({Tok::Top, start, ""}); ++i; continue;
      case 'F': out.push_back({Tok::Bot, start, ""}); ++i; continue;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          out.push_back({Tok::Cond, start, ""});
          i += 2;
          continue;
        }
        throw ParseError("stray '-'", start, {"'->'"});
      case '=':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          out.push_back({Tok::Material, start, ""});
          i += 2;
          continue;
        }
        throw ParseError("stray '='", start, {"'=>'"});
      case '<':
        if (i + 2 < text.size() && text[i + 1] == '-' && text[i + 2] == '>') {
          out.push_back({Tok::Iff, start, ""});
          i += 3;
          continue;
        }
        throw ParseError("stray '<'", start, {"'<->'"});
      default:
        break;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_'))
        ++j;
      out.push_back({Tok::Atom, start, std::string(text.substr(i, j - i))});
      i = j;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start,
                     {});
  }
  out.push_back({Tok::End, text.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  FormulaPtr parse_all() {
    if (tokens_.front().kind == Tok::End)
      throw ParseError("empty input", 0, primary_expected());
    FormulaPtr f = parse_cond();
    if (peek().kind != Tok::End) {
      std::vector<std::string> expected = {token_name(Tok::Cond),
                                           token_name(Tok::Material),
                                           token_name(Tok::Iff),
                                           token_name(Tok::Or),
                                           token_name(Tok::And)};
      if (paren_depth_ > 0) expected.push_back(token_name(Tok::RParen));
      expected.push_back(token_name(Tok::End));
      if (peek().kind == Tok::RParen && paren_depth_ == 0)
        throw ParseError("unbalanced parenthesis", peek().offset, expected);
      throw ParseError("unexpected " + std::string(token_name(peek().kind)),
                       peek().offset, expected);
    }
    return f;
  }

 private:
  static std::vector<std::string> primary_expected() {
    return {token_name(Tok::Not), token_name(Tok::Atom), token_name(Tok::Top),
            token_name(Tok::Bot), token_name(Tok::LParen)};
  }

  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  FormulaPtr parse_cond() {
    FormulaPtr left = parse_disj();
    switch (peek().kind) {
      case Tok::Cond:
        take();
        return cond(std::move(left), parse_cond());
      case Tok::Material:
        take();
        return material(std::move(left), parse_cond());
      case Tok::Iff: {
        take();
        FormulaPtr right = parse_cond();
        return conj(cond(left, right), cond(right, left));
      }
      default:
        return left;
    }
  }

  FormulaPtr parse_disj() {
    FormulaPtr f = parse_conj();
    while (peek().kind == Tok::Or) {
      take();
      f = disj(std::move(f), parse_conj());
    }
    return f;
  }

  FormulaPtr parse_conj() {
    FormulaPtr f = parse_neg();
    while (peek().kind == Tok::And) {
      take();
      f = conj(std::move(f), parse_neg());
    }
    return f;
  }

  FormulaPtr parse_neg() {
    Token t = take();
    switch (t.kind) {
      case Tok::Not:
        return neg(parse_neg());
      case Tok::Atom:
        return atom(t.text);
      case Tok::Top:
        return top();
      case Tok::Bot:
        return bot();
      case Tok::LParen: {
        ++paren_depth_;
        FormulaPtr f = parse_cond();
        if (peek().kind != Tok::RParen)
          throw ParseError("unbalanced parenthesis", peek().offset,
                           {token_name(Tok::RParen)});
        take();
        --paren_depth_;
        return f;
      }
      default:
        throw ParseError("unexpected " + std::string(token_name(t.kind)),
                         t.offset, primary_expected());
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int paren_depth_ = 0;
};

}  // namespace

FormulaPtr parse(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Printing.  Precedence levels: -> is 0, | is 1, & is 2, ~ is 3, leaves 4.

namespace {

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Cond: return 0;
    case Formula::Kind::Or: return 1;
    case Formula::Kind::And: return 2;
    case Formula::Kind::Not: return 3;
    default: return 4;
  }
}

void render_at(const Formula& f, int level, std::string& out) {
  int prec = precedence(f.kind());
  if (prec < level) {
    out += '(';
    render_at(f, 0, out);
    out += ')';
    return;
  }
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.atom_name();
      return;
    case Formula::Kind::Top:
      out += 'T';
      return;
    case Formula::Kind::Bot:
      out += 'F';
      return;
    case Formula::Kind::Not:
      out += '~';
      render_at(*f.lhs(), 3, out);
      return;
    case Formula::Kind::And:
      render_at(*f.lhs(), 2, out);
      out += " & ";
      render_at(*f.rhs(), 3, out);
      return;
    case Formula::Kind::Or:
      render_at(*f.lhs(), 1, out);
      out += " | ";
      render_at(*f.rhs(), 2, out);
      return;
    case Formula::Kind::Cond:
      render_at(*f.lhs(), 1, out);
      out += " -> ";
      render_at(*f.rhs(), 0, out);
      return;
  }
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out.insert(f.atom_name());
      return;
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return;
    case Formula::Kind::Not:
      collect_atoms(*f.lhs(), out);
      return;
    default:
      collect_atoms(*f.lhs(), out);
      collect_atoms(*f.rhs(), out);
      return;
  }
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  render_at(f, 0, out);
  return out;
}

std::vector<std::string> atoms(const Formula& f) {
  std::set<std::string> names;
  collect_atoms(f, names);
  return {names.begin(), names.end()};
}

std::vector<std::string> atoms(const std::vector<FormulaPtr>& fs) {
  std::set<std::string> names;
  for (const auto& f : fs) collect_atoms(*f, names);
  return {names.begin(), names.end()};
}

bool is_conditional_free(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Cond:
      return false;
    case Formula::Kind::Not:
      return is_conditional_free(*f.lhs());
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return is_conditional_free(*f.lhs()) && is_conditional_free(*f.rhs());
    default:
      return true;
  }
}

FormulaPtr substitute(const FormulaPtr& schema,
                      const std::map<std::string, FormulaPtr>& binding) {
  switch (schema->kind()) {
    case Formula::Kind::Atom: {
      auto it = binding.find(schema->atom_name());
      if (it == binding.end())
        throw Error("unbound schema variable: " + schema->atom_name());
      return it->second;
    }
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return schema;
    case Formula::Kind::Not:
      return neg(substitute(schema->lhs(), binding));
    case Formula::Kind::And:
      return conj(substitute(schema->lhs(), binding),
                  substitute(schema->rhs(), binding));
    case Formula::Kind::Or:
      return disj(substitute(schema->lhs(), binding),
                  substitute(schema->rhs(), binding));
    case Formula::Kind::Cond:
      return cond(substitute(schema->lhs(), binding),
                  substitute(schema->rhs(), binding));
  }
  throw Error("corrupt formula node");
}

}  // namespace trivalent
