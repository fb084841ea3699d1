#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "entrench/bridge.hpp"
#include "entrench/entrenchment.hpp"
#include "entrench/formula.hpp"
#include "entrench/relation_matrix.hpp"

namespace entrench::io {

/// What an input file describes.
enum class InputKind {
  generators,   ///< `<f> <= <f>` lines, closed under the entrenchment rules
  subsets,      ///< `order: subsets`, one generating sentence per line
  leq_table,    ///< `kind: leq`, explicit relation rows
  infer_table,  ///< `kind: infer`, explicit consequence rows
};

std::string to_string(InputKind kind);

/// A parsed entrenchment, subset-order or table file.
///
///   vars: p b f
///   [kind: leq | kind: infer | order: subsets]
///   body lines; `#` starts a comment.
///
/// Table rows read `<a> <row>`: `a` is a mask in hex and `row` has one bit
/// per algebra element, most significant (the all-ones mask) first.
struct Input {
  std::string source;
  InputKind kind = InputKind::generators;
  Vocabulary vocab;
  std::optional<GeneratorBase> base;
  std::vector<Formula> sentences;
  std::optional<RelationMatrix> table;

  /// The entrenchment: closure, subset order, leq table, or P of an infer table.
  EntrenchmentOracle oracle() const;
  /// Inference service of an infer table; nullopt otherwise.
  std::optional<InferenceService> service() const;
};

Input parse_input(std::istream& in, const std::string& source, VocabularyLimits limits = {});
Input load_input(const std::string& path, VocabularyLimits limits = {});

/// `vars:` then `<f> |~ <f>` lines. The separator is the first "|~", so write
/// a disjunction with a negated right operand as `a | !b`.
ConditionalKB parse_kb(std::istream& in, const std::string& source, VocabularyLimits limits = {});
ConditionalKB load_kb(const std::string& path, VocabularyLimits limits = {});

/// Writes a table file that parse_input reads back to the same relation.
void write_table(std::ostream& out, const Vocabulary& vocab, InputKind kind, const RelationMatrix& relation);

/// Writes `vars:` and one `<f> <= <f>` line per generator.
void write_generators(std::ostream& out, const GeneratorBase& base);

/// `path` as given, then with ".ent" appended, then the same two under
/// `fixtures_dir` by file name. Returns `path` unchanged when nothing exists.
std::string resolve_fixture(const std::string& path, const std::string& fixtures_dir);

}  // namespace entrench::io
