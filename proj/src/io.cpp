#include "entrench/io.hpp"

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "entrench/errors.hpp"

namespace entrench::io {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

struct Line {
  std::size_t number;
  std::string text;
};

/// Non-empty lines with comments removed.
std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({number, std::move(t)});
  }
  return out;
}

bool starts_with(const std::string& s, std::string_view prefix) { return s.rfind(prefix, 0) == 0; }

Vocabulary parse_vars(const std::vector<Line>& lines, const std::string& source, VocabularyLimits limits) {
  if (lines.empty() || !starts_with(lines.front().text, "vars:"))
    throw FormatError(source, lines.empty() ? 1 : lines.front().number, "expected 'vars:' header");
  std::istringstream names(lines.front().text.substr(5));
  std::vector<std::string> vars;
  for (std::string v; names >> v;) vars.push_back(v);
  try {
    return Vocabulary(std::move(vars), limits);
  } catch (const Error& e) {
    throw FormatError(source, lines.front().number, e.what());
  }
}

Formula parse_at(std::string_view text, const Vocabulary& vocab, const std::string& source, std::size_t line) {
  try {
    return parse(text, vocab);
  } catch (const Error& e) {
    throw FormatError(source, line, e.what());
  }
}

std::pair<std::string, std::string> split_once(const Line& line, std::string_view sep, const std::string& source) {
  const auto at = line.text.find(sep);
  if (at == std::string::npos)
    throw FormatError(source, line.number, "expected '<formula> " + std::string(sep) + " <formula>'");
  return {line.text.substr(0, at), line.text.substr(at + sep.size())};
}

std::uint32_t parse_hex(const std::string& s, const std::string& source, std::size_t line) {
  std::string digits = s;
  if (starts_with(digits, "0x") || starts_with(digits, "0X")) digits = digits.substr(2);
  if (digits.empty() || digits.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos)
    throw FormatError(source, line, "expected a hex mask, found '" + s + "'");
  return static_cast<std::uint32_t>(std::stoul(digits, nullptr, 16));
}

RelationMatrix parse_table(const std::vector<Line>& body, const Vocabulary& vocab, const std::string& source) {
  const Algebra alg = vocab.algebra();
  if (alg.variables() > 3) throw FormatError(source, body.empty() ? 1 : body.front().number, "tables need n <= 3");
  const auto n = static_cast<std::uint32_t>(alg.size());
  const std::size_t digits = std::max<std::size_t>(1, n / 4);
  RelationMatrix m(n);
  std::vector<bool> seen(n, false);
  for (const Line& line : body) {
    std::istringstream fields(line.text);
    std::string a_text, row_text, extra;
    if (!(fields >> a_text >> row_text) || (fields >> extra))
      throw FormatError(source, line.number, "expected '<mask> <row>'");
    const std::uint32_t a = parse_hex(a_text, source, line.number);
    if (a >= n) throw FormatError(source, line.number, "mask " + a_text + " is outside the algebra");
    if (seen[a]) throw FormatError(source, line.number, "duplicate row " + a_text);
    seen[a] = true;
    std::string row = row_text;
    if (starts_with(row, "0x") || starts_with(row, "0X")) row = row.substr(2);
    if (row.size() != digits)
      throw FormatError(source, line.number, "row needs " + std::to_string(digits) + " hex digits");
    for (std::size_t d = 0; d < digits; ++d) {
      const std::uint32_t nibble = parse_hex(row.substr(d, 1), source, line.number);
      const std::uint32_t base = static_cast<std::uint32_t>(4 * (digits - 1 - d));
      for (std::uint32_t k = 0; k < 4 && base + k < n; ++k)
        if ((nibble >> k) & 1u) m.set(TruthMask{a}, TruthMask{base + k});
    }
  }
  for (std::uint32_t a = 0; a < n; ++a)
    if (!seen[a]) throw FormatError(source, body.empty() ? 1 : body.back().number, "missing row " + alg.hex(TruthMask{a}));
  return m;
}

}  // namespace

std::string to_string(InputKind kind) {
  switch (kind) {
    case InputKind::generators: return "generators";
    case InputKind::subsets: return "subsets";
    case InputKind::leq_table: return "leq";
    case InputKind::infer_table: return "infer";
  }
  return "?";
}

EntrenchmentOracle Input::oracle() const {
  switch (kind) {
    case InputKind::generators: return EntrenchmentOracle::closure(*base);
    case InputKind::subsets: return subset_order_oracle(sentences, vocab);
    case InputKind::leq_table: return EntrenchmentOracle::table(vocab, *table);
    case InputKind::infer_table: return p_translate(*service());
  }
  throw Error("unreachable input kind");
}

std::optional<InferenceService> Input::service() const {
  if (kind != InputKind::infer_table) return std::nullopt;
  return InferenceService::from_table(vocab, *table);
}

Input parse_input(std::istream& in, const std::string& source, VocabularyLimits limits) {
  const std::vector<Line> lines = content_lines(in);
  Vocabulary vocab = parse_vars(lines, source, limits);
  InputKind kind = InputKind::generators;
  std::size_t i = 1;
  for (; i < lines.size(); ++i) {
    const std::string& t = lines[i].text;
    if (starts_with(t, "kind:")) {
      const std::string k = trim(t.substr(5));
      if (k == "leq") kind = InputKind::leq_table;
      else if (k == "infer") kind = InputKind::infer_table;
      else throw FormatError(source, lines[i].number, "unknown kind '" + k + "'");
    } else if (starts_with(t, "order:")) {
      const std::string k = trim(t.substr(6));
      if (k != "subsets") throw FormatError(source, lines[i].number, "unknown order '" + k + "'");
      kind = InputKind::subsets;
    } else {
      break;
    }
  }
  const std::vector<Line> body(lines.begin() + static_cast<std::ptrdiff_t>(i), lines.end());

  Input out{source, kind, vocab, std::nullopt, {}, std::nullopt};
  switch (kind) {
    case InputKind::generators: {
      std::vector<Generator> pairs;
      for (const Line& line : body) {
        const auto [lhs, rhs] = split_once(line, "<=", source);
        pairs.push_back({parse_at(lhs, vocab, source, line.number), parse_at(rhs, vocab, source, line.number)});
      }
      out.base.emplace(vocab, std::move(pairs));
      break;
    }
    case InputKind::subsets:
      for (const Line& line : body) out.sentences.push_back(parse_at(line.text, vocab, source, line.number));
      break;
    case InputKind::leq_table:
    case InputKind::infer_table:
      out.table = parse_table(body, vocab, source);
      break;
  }
  return out;
}

Input load_input(const std::string& path, VocabularyLimits limits) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_input(in, path, limits);
}

ConditionalKB parse_kb(std::istream& in, const std::string& source, VocabularyLimits limits) {
  const std::vector<Line> lines = content_lines(in);
  ConditionalKB kb{parse_vars(lines, source, limits), {}};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [lhs, rhs] = split_once(lines[i], "|~", source);
    kb.conditionals.push_back(
        {parse_at(lhs, kb.vocab, source, lines[i].number), parse_at(rhs, kb.vocab, source, lines[i].number)});
  }
  return kb;
}

ConditionalKB load_kb(const std::string& path, VocabularyLimits limits) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_kb(in, path, limits);
}

void write_table(std::ostream& out, const Vocabulary& vocab, InputKind kind, const RelationMatrix& relation) {
  const Algebra alg = vocab.algebra();
  const auto n = static_cast<std::uint32_t>(alg.size());
  const std::size_t digits = std::max<std::size_t>(1, n / 4);
  out << "vars:";
  for (const auto& name : vocab.names()) out << ' ' << name;
  out << "\nkind: " << to_string(kind) << '\n';
  static constexpr char kHex[] = "0123456789abcdef";
  for (std::uint32_t a = 0; a < n; ++a) {
    out << alg.hex(TruthMask{a}) << ' ';
    for (std::size_t d = 0; d < digits; ++d) {
      const std::uint32_t base = static_cast<std::uint32_t>(4 * (digits - 1 - d));
      std::uint32_t nibble = 0;
      for (std::uint32_t k = 0; k < 4 && base + k < n; ++k)
        if (relation.test(TruthMask{a}, TruthMask{base + k})) nibble |= 1u << k;
      out << kHex[nibble];
    }
    out << '\n';
  }
}

void write_generators(std::ostream& out, const GeneratorBase& base) {
  out << "vars:";
  for (const auto& name : base.vocabulary().names()) out << ' ' << name;
  out << '\n';
  for (const auto& g : base.pairs())
    out << render(g.lower, base.vocabulary()) << " <= " << render(g.upper, base.vocabulary()) << '\n';
}

std::string resolve_fixture(const std::string& path, const std::string& fixtures_dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> candidates{path, path + ".ent"};
  if (!fixtures_dir.empty()) {
    const fs::path name = fs::path(path).filename();
    candidates.push_back(fs::path(fixtures_dir) / name);
    candidates.push_back(fs::path(fixtures_dir) / (name.string() + ".ent"));
  }
  std::error_code ec;
  for (const auto& c : candidates)
    if (fs::is_regular_file(c, ec)) return c.string();
  return path;
}

}  // namespace entrench::io
