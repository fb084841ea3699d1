#include "entrench/formula.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <set>
#include <sstream>
#include <utility>

#include "entrench/errors.hpp"

namespace entrench {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected, std::string found)
    : Error("syntax error at offset " + std::to_string(offset) + ": expected " +
            join_expected(expected) + ", found " + found),
      offset_(offset),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

UnknownVariable::UnknownVariable(std::string name)
    : Error("unknown variable '" + name + "'"), name_(std::move(name)) {}

FormatError::FormatError(std::string source, std::size_t line, const std::string& what)
    : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra(int variables) : variables_(variables) {
  if (variables < 1 || variables > kHardVariableLimit)
    throw VocabularyTooLarge("vocabulary of " + std::to_string(variables) +
                             " variables is outside 1.." + std::to_string(kHardVariableLimit));
  valuations_ = std::uint32_t{1} << variables;
  top_ = valuations_ == 32 ? 0xFFFFFFFFu : ((std::uint32_t{1} << valuations_) - 1);
}

TruthMask Algebra::variable(int j) const {
  std::uint32_t bits = 0;
  for (std::uint32_t v = 0; v < valuations_; ++v)
    if ((v >> j) & 1u) bits |= std::uint32_t{1} << v;
  return TruthMask{bits};
}

std::string Algebra::hex(TruthMask a) const {
  const int digits = std::max<int>(1, static_cast<int>(valuations_ / 4));
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%0*x", digits, a.bits);
  return buf;
}

std::vector<TruthMask> enumerate_algebra(const Algebra& algebra, int limit) {
  if (algebra.variables() > limit)
    throw VocabularyTooLarge("algebra enumeration needs n <= " + std::to_string(limit));
  std::vector<TruthMask> out;
  out.reserve(static_cast<std::size_t>(algebra.size()));
  for (std::uint64_t i = 0; i < algebra.size(); ++i) out.push_back(algebra.element(i));
  return out;
}

// ---------------------------------------------------------------------------
// Vocabulary

namespace {

bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s[0]);
  if (!(std::islower(head) || head == '_')) return false;
  for (char c : s) {
    auto u = static_cast<unsigned char>(c);
    if (!(std::islower(u) || std::isdigit(u) || u == '_')) return false;
  }
  return s != "true" && s != "false";
}

}  // namespace

Vocabulary::Vocabulary(std::vector<std::string> names, VocabularyLimits limits)
    : names_(std::move(names)) {
  const int cap = std::min(limits.max_variables, kHardVariableLimit);
  if (names_.empty()) throw InvalidVocabulary("vocabulary must name at least one variable");
  if (static_cast<int>(names_.size()) > cap)
    throw VocabularyTooLarge("vocabulary has " + std::to_string(names_.size()) +
                             " variables; the configured cap is " + std::to_string(cap));
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_identifier(names_[i]))
      throw InvalidVocabulary("invalid variable name '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == names_[i])
        throw InvalidVocabulary("duplicate variable name '" + names_[i] + "'");
  }
}

int Vocabulary::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

// ---------------------------------------------------------------------------
// Formula

Formula Formula::truth() { return Formula(Connective::truth); }
Formula Formula::falsity() { return Formula(Connective::falsity); }

Formula Formula::variable(int index) {
  Formula f(Connective::variable);
  f.variable_ = index;
  return f;
}

Formula Formula::negation(Formula operand) {
  Formula f(Connective::negation);
  f.operands_.push_back(std::move(operand));
  return f;
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  Formula f(Connective::conjunction);
  f.operands_.push_back(std::move(lhs));
  f.operands_.push_back(std::move(rhs));
  return f;
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  Formula f(Connective::disjunction);
  f.operands_.push_back(std::move(lhs));
  f.operands_.push_back(std::move(rhs));
  return f;
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  Formula f(Connective::implication);
  f.operands_.push_back(std::move(lhs));
  f.operands_.push_back(std::move(rhs));
  return f;
}

bool operator==(const Formula& a, const Formula& b) {
  return a.connective_ == b.connective_ && a.variable_ == b.variable_ && a.operands_ == b.operands_;
}

namespace {

Formula binary(Connective c, Formula lhs, Formula rhs) {
  switch (c) {
    case Connective::conjunction: return Formula::conjunction(std::move(lhs), std::move(rhs));
    case Connective::disjunction: return Formula::disjunction(std::move(lhs), std::move(rhs));
    default: return Formula::implication(std::move(lhs), std::move(rhs));
  }
}

// ---------------------------------------------------------------------------
// Lexer and recursive-descent parser

enum class Tok { identifier, kw_true, kw_false, negation, conjunction, disjunction, arrow, lparen, rparen, end };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

struct Spelling {
  std::string_view text;
  Tok kind;
};

// Longest spellings first so "->" wins over a lone "-".
constexpr std::array<Spelling, 13> kSpellings{{
    {"\xE2\x8A\xA4", Tok::kw_true},      // ⊤
    {"\xE2\x8A\xA5", Tok::kw_false},     // ⊥
    {"\xE2\x88\xA7", Tok::conjunction},  // ∧
    {"\xE2\x88\xA8", Tok::disjunction},  // ∨
    {"\xE2\x86\x92", Tok::arrow},        // →
    {"\xC2\xAC", Tok::negation},         // ¬
    {"->", Tok::arrow},
    {"!", Tok::negation},
    {"~", Tok::negation},
    {"&", Tok::conjunction},
    {"|", Tok::disjunction},
    {"(", Tok::lparen},
    {")", Tok::rparen},
}};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    auto c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::islower(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size()) {
        auto u = static_cast<unsigned char>(text[j]);
        if (!(std::islower(u) || std::isdigit(u) || u == '_')) break;
        ++j;
      }
      std::string word(text.substr(i, j - i));
      Tok kind = word == "true" ? Tok::kw_true : word == "false" ? Tok::kw_false : Tok::identifier;
      tokens.push_back({kind, i, std::move(word)});
      i = j;
      continue;
    }
    bool matched = false;
    for (const auto& s : kSpellings) {
      if (text.substr(i, s.text.size()) == s.text) {
        tokens.push_back({s.kind, i, std::string(s.text)});
        i += s.text.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw SyntaxError(i, {"formula token"}, "'" + std::string(text.substr(i, 1)) + "'");
    }
  }
  tokens.push_back({Tok::end, text.size(), ""});
  return tokens;
}

std::string describe(const Token& t) {
  return t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
}

class Parser {
 public:
  Parser(std::string_view text, const Vocabulary& vocab) : tokens_(tokenize(text)), vocab_(vocab) {}

  Formula parse_all() {
    Formula f = implication();
    if (peek().kind != Tok::end)
      throw SyntaxError(peek().offset, {"'&'", "'|'", "'->'", "end of input"}, describe(peek()));
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::arrow) {
      next();
      return Formula::implication(std::move(lhs), implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (peek().kind == Tok::disjunction) {
      next();
      lhs = Formula::disjunction(std::move(lhs), conjunction());
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (peek().kind == Tok::conjunction) {
      next();
      lhs = Formula::conjunction(std::move(lhs), unary());
    }
    return lhs;
  }

  Formula unary() {
    if (peek().kind == Tok::negation) {
      next();
      return Formula::negation(unary());
    }
    return atom();
  }

  Formula atom() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::kw_true: return Formula::truth();
      case Tok::kw_false: return Formula::falsity();
      case Tok::identifier: {
        int idx = vocab_.index_of(t.text);
        if (idx < 0) throw UnknownVariable(t.text);
        return Formula::variable(idx);
      }
      case Tok::lparen: {
        Formula inner = implication();
        if (peek().kind != Tok::rparen)
          throw SyntaxError(peek().offset, {"'&'", "'|'", "'->'", "')'"}, describe(peek()));
        next();
        return inner;
      }
      default:
        throw SyntaxError(t.offset, {"'true'", "'false'", "variable", "'!'", "'('"}, describe(t));
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Vocabulary& vocab_;
};

// ---------------------------------------------------------------------------
// Rendering

int precedence(Connective c) {
  switch (c) {
    case Connective::implication: return 1;
    case Connective::disjunction: return 2;
    case Connective::conjunction: return 3;
    case Connective::negation: return 4;
    default: return 5;
  }
}

void render_into(const Formula& f, const Vocabulary& vocab, std::string& out) {
  auto child = [&](const Formula& g, bool parens) {
    if (parens) out += '(';
    render_into(g, vocab, out);
    if (parens) out += ')';
  };
  const int p = precedence(f.connective());
  switch (f.connective()) {
    case Connective::truth: out += "true"; return;
    case Connective::falsity: out += "false"; return;
    case Connective::variable: out += vocab.name(f.variable_index()); return;
    case Connective::negation:
      out += '!';
      child(f.operand(0), precedence(f.operand(0).connective()) < p);
      return;
    case Connective::conjunction:
    case Connective::disjunction:
      // Left associative: a right operand of equal precedence needs parentheses.
      child(f.operand(0), precedence(f.operand(0).connective()) < p);
      out += f.connective() == Connective::conjunction ? " & " : " | ";
      child(f.operand(1), precedence(f.operand(1).connective()) <= p);
      return;
    case Connective::implication:
      child(f.operand(0), precedence(f.operand(0).connective()) <= p);
      out += " -> ";
      child(f.operand(1), precedence(f.operand(1).connective()) < p);
      return;
  }
}

TruthMask mask_of(const Formula& f, const Algebra& alg) {
  switch (f.connective()) {
    case Connective::truth: return alg.top();
    case Connective::falsity: return alg.bottom();
    case Connective::variable: return alg.variable(f.variable_index());
    case Connective::negation: return alg.complement(mask_of(f.operand(0), alg));
    case Connective::conjunction: return meet(mask_of(f.operand(0), alg), mask_of(f.operand(1), alg));
    case Connective::disjunction: return join(mask_of(f.operand(0), alg), mask_of(f.operand(1), alg));
    case Connective::implication:
      return alg.arrow(mask_of(f.operand(0), alg), mask_of(f.operand(1), alg));
  }
  return alg.bottom();
}

// ---------------------------------------------------------------------------
// Two-level minimization (Quine-McCluskey prime implicants + greedy cover)

struct Cube {
  std::uint32_t value;  // literal polarities on cared-for variables
  std::uint32_t care;   // variables that appear as literals

  auto operator<=>(const Cube&) const = default;
};

int literals(const Cube& c) { return std::popcount(c.care); }

bool covers(const Cube& c, std::uint32_t minterm) { return (minterm & c.care) == c.value; }

std::vector<Cube> prime_implicants(std::uint32_t mask, int n) {
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  std::set<Cube> current;
  for (std::uint32_t v = 0; v < (std::uint32_t{1} << n); ++v)
    if ((mask >> v) & 1u) current.insert({v, all});
  std::set<Cube> primes;
  while (!current.empty()) {
    std::set<Cube> merged;
    std::set<Cube> used;
    for (auto a = current.begin(); a != current.end(); ++a) {
      for (auto b = std::next(a); b != current.end(); ++b) {
        if (a->care != b->care) continue;
        std::uint32_t diff = a->value ^ b->value;
        if (std::popcount(diff) != 1) continue;
        merged.insert({a->value & ~diff, a->care & ~diff});
        used.insert(*a);
        used.insert(*b);
      }
    }
    for (const auto& c : current)
      if (!used.count(c)) primes.insert(c);
    current = std::move(merged);
  }
  return {primes.begin(), primes.end()};
}

// Sort key: per variable, positive literal < negative literal < absent.
std::vector<int> cube_key(const Cube& c, int n) {
  std::vector<int> key;
  for (int j = 0; j < n; ++j) {
    if (!((c.care >> j) & 1u)) key.push_back(2);
    else key.push_back(((c.value >> j) & 1u) ? 0 : 1);
  }
  return key;
}

std::vector<Cube> minimal_cover(std::uint32_t mask, int n) {
  std::vector<Cube> primes = prime_implicants(mask, n);
  std::vector<std::uint32_t> minterms;
  for (std::uint32_t v = 0; v < (std::uint32_t{1} << n); ++v)
    if ((mask >> v) & 1u) minterms.push_back(v);

  std::vector<bool> chosen(primes.size(), false);
  std::vector<bool> covered(minterms.size(), false);
  auto take = [&](std::size_t p) {
    chosen[p] = true;
    for (std::size_t m = 0; m < minterms.size(); ++m)
      if (covers(primes[p], minterms[m])) covered[m] = true;
  };
  for (std::size_t m = 0; m < minterms.size(); ++m) {
    std::size_t count = 0, last = 0;
    for (std::size_t p = 0; p < primes.size(); ++p)
      if (covers(primes[p], minterms[m])) ++count, last = p;
    if (count == 1 && !chosen[last]) take(last);
  }
  for (;;) {
    std::size_t best = primes.size();
    int best_gain = 0;
    for (std::size_t p = 0; p < primes.size(); ++p) {
      if (chosen[p]) continue;
      int gain = 0;
      for (std::size_t m = 0; m < minterms.size(); ++m)
        if (!covered[m] && covers(primes[p], minterms[m])) ++gain;
      if (gain > best_gain ||
          (gain == best_gain && gain > 0 && literals(primes[p]) < literals(primes[best]))) {
        best = p;
        best_gain = gain;
      }
    }
    if (best == primes.size()) break;
    take(best);
  }
  std::vector<Cube> out;
  for (std::size_t p = 0; p < primes.size(); ++p)
    if (chosen[p]) out.push_back(primes[p]);
  std::sort(out.begin(), out.end(),
            [n](const Cube& a, const Cube& b) { return cube_key(a, n) < cube_key(b, n); });
  return out;
}

Formula fold(std::vector<Formula> parts, Connective c, Formula empty) {
  if (parts.empty()) return empty;
  Formula acc = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) acc = binary(c, std::move(acc), std::move(parts[i]));
  return acc;
}

Formula literal(int j, bool positive) {
  return positive ? Formula::variable(j) : Formula::negation(Formula::variable(j));
}

}  // namespace

Formula parse(std::string_view text, const Vocabulary& vocab) {
  return Parser(text, vocab).parse_all();
}

std::string render(const Formula& f, const Vocabulary& vocab) {
  std::string out;
  render_into(f, vocab, out);
  return out;
}

int max_variable(const Formula& f) {
  if (f.connective() == Connective::variable) return f.variable_index();
  int m = -1;
  for (std::size_t i = 0; i < f.arity(); ++i) m = std::max(m, max_variable(f.operand(i)));
  return m;
}

TruthMask truth_mask(const Formula& f, const Vocabulary& vocab) {
  const Algebra alg = vocab.algebra();
  if (max_variable(f) >= vocab.size()) throw UnknownVariable("#" + std::to_string(max_variable(f)));
  return mask_of(f, alg);
}

Formula canonical_formula(TruthMask mask, const Vocabulary& vocab) {
  const Algebra alg = vocab.algebra();
  const int n = vocab.size();
  if (is_bottom(mask)) return Formula::falsity();
  if (alg.is_top(mask)) return Formula::truth();

  const std::vector<Cube> dnf = minimal_cover(mask.bits, n);
  const std::vector<Cube> cnf = minimal_cover(alg.complement(mask).bits, n);
  int dnf_lits = 0, cnf_lits = 0;
  for (const auto& c : dnf) dnf_lits += literals(c);
  for (const auto& c : cnf) cnf_lits += literals(c);

  const bool use_dnf = dnf_lits <= cnf_lits;
  std::vector<Formula> terms;
  for (const auto& c : use_dnf ? dnf : cnf) {
    std::vector<Formula> lits;
    for (int j = 0; j < n; ++j) {
      if (!((c.care >> j) & 1u)) continue;
      const bool positive = ((c.value >> j) & 1u) != 0;
      // CNF clauses negate the complement's cubes.
      lits.push_back(literal(j, use_dnf ? positive : !positive));
    }
    terms.push_back(use_dnf ? fold(std::move(lits), Connective::conjunction, Formula::truth())
                            : fold(std::move(lits), Connective::disjunction, Formula::falsity()));
  }
  return use_dnf ? fold(std::move(terms), Connective::disjunction, Formula::falsity())
                 : fold(std::move(terms), Connective::conjunction, Formula::truth());
}

}  // namespace entrench
