#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "entrench/truth_mask.hpp"

namespace entrench {

struct VocabularyLimits {
  /// Largest accepted vocabulary. Values above 4 make whole-algebra scans
  /// infeasible and must be requested explicitly; 5 is the hard ceiling.
  int max_variables = 4;
};

/// Ordered, duplicate-free list of propositional variable names.
class Vocabulary {
 public:
  explicit Vocabulary(std::vector<std::string> names, VocabularyLimits limits = {});

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int j) const { return names_.at(static_cast<std::size_t>(j)); }
  /// Index of `name`, or -1.
  int index_of(std::string_view name) const;

  Algebra algebra() const { return Algebra(size()); }

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

enum class Connective { truth, falsity, variable, negation, conjunction, disjunction, implication };

/// Propositional syntax tree. Immutable value type; variables are indices into
/// a Vocabulary.
class Formula {
 public:
  static Formula truth();
  static Formula falsity();
  static Formula variable(int index);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);

  Connective connective() const { return connective_; }
  int variable_index() const { return variable_; }
  const Formula& operand(std::size_t i) const { return operands_.at(i); }
  std::size_t arity() const { return operands_.size(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(Connective c) : connective_(c) {}

  Connective connective_;
  int variable_ = -1;
  std::vector<Formula> operands_;
};

/// Parses the formula grammar (loosest to tightest):
///   impl := disj [ "->" impl ]          right associative
///   disj := conj { "|" conj }           left associative
///   conj := unary { "&" unary }         left associative
///   unary := "!" unary | atom
///   atom := "true" | "false" | identifier | "(" impl ")"
/// Unicode spellings ⊤ ⊥ ¬ ∧ ∨ → and "~" for negation are also accepted.
Formula parse(std::string_view text, const Vocabulary& vocab);

/// Canonical ASCII rendering with the fewest parentheses that still parse back
/// to the identical tree.
std::string render(const Formula& f, const Vocabulary& vocab);

/// Bit v is set iff `f` holds under valuation v.
TruthMask truth_mask(const Formula& f, const Vocabulary& vocab);

/// Highest variable index occurring in `f`, or -1.
int max_variable(const Formula& f);

/// A short formula with the given mask: the smaller (by literal count) of a
/// minimal DNF and a minimal CNF, computed from prime implicants. Ties go to
/// the DNF. Deterministic.
Formula canonical_formula(TruthMask mask, const Vocabulary& vocab);

}  // namespace entrench
