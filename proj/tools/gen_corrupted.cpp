// Writes one corrupted two-variable table per verify suite: a valid table with
// the first single flipped entry that makes `entrench verify --suites <suite>`
// report a law failure (exit 1, no refusal). Structural suites prefer a flip
// that keeps the axioms, and rm one that keeps the preferential rules.
//
//   gen_corrupted DIR            write DIR/<suite>.ent
//   gen_corrupted --check DIR    exit 1 unless DIR matches what would be written

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "entrench/audit.hpp"
#include "entrench/bridge.hpp"
#include "entrench/cli.hpp"
#include "entrench/io.hpp"

using namespace entrench;
namespace fs = std::filesystem;

namespace {

struct Start {
  std::string description;
  io::InputKind kind;
  RelationMatrix table;
};

const Vocabulary& pq() {
  static const Vocabulary v({"p", "q"});
  return v;
}

RelationMatrix consequence_table(const InferenceService& s) {
  const Algebra alg = s.algebra();
  RelationMatrix m(static_cast<std::size_t>(alg.size()));
  for (std::uint64_t a = 0; a < alg.size(); ++a)
    for (std::uint64_t b = 0; b < alg.size(); ++b)
      if (s.query(alg.element(a), alg.element(b))) m.set(alg.element(a), alg.element(b));
  return m;
}

std::vector<Start> starts_for(const std::string& suite) {
  std::vector<Start> out;
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto closure = EntrenchmentOracle::closure(random_base(seed, pq()));
    const auto ranked = random_connected_oracle(seed, pq());
    const auto engine = InferenceService::from_engine(InferenceEngine(closure));
    const auto ranked_engine = InferenceService::from_engine(InferenceEngine(ranked));
    const std::string s = std::to_string(seed);
    if (suite == "sysp" || suite == "rm" || suite == "theorem6") {
      out.push_back({"inference of random base " + s, io::InputKind::infer_table, consequence_table(engine)});
      out.push_back({"inference of ranked table " + s, io::InputKind::infer_table, consequence_table(ranked_engine)});
    } else if (suite == "connectivity" || suite == "connected") {
      out.push_back({"ranked table " + s, io::InputKind::leq_table, materialize(ranked)});
    } else if (suite == "wd" || suite == "wd_laws" || suite == "splitting") {
      out.push_back({"P of ranked table inference " + s, io::InputKind::leq_table, materialize(p_translate(ranked_engine))});
      out.push_back({"P of random base inference " + s, io::InputKind::leq_table, materialize(p_translate(engine))});
    } else {
      out.push_back({"closure of random base " + s, io::InputKind::leq_table, materialize(closure)});
    }
  }
  return out;
}

std::string render_table(io::InputKind kind, const RelationMatrix& m, const std::string& header) {
  std::ostringstream out;
  out << header;
  io::write_table(out, pq(), kind, m);
  return out.str();
}

/// Exit status of `verify --suites suite` on `text`, with refusals mapped to 3.
int verify(const std::string& text, const std::string& suite, const fs::path& scratch) {
  {
    std::ofstream f(scratch);
    f << text;
  }
  std::istringstream in;
  std::ostringstream out, err;
  return cli::run({"verify", scratch.string(), "--suites", suite}, in, out, err);
}

/// Suite that should keep passing so the corruption targets the property
/// itself rather than the axioms; empty when any failing flip will do.
std::string keep_passing(const std::string& suite) {
  if (suite == "connectivity" || suite == "wd" || suite == "splitting") return "axioms";
  if (suite == "rm") return "sysp";
  return "";
}

std::optional<std::string> corrupted(const std::string& suite, const fs::path& scratch, bool strict) {
  const std::string keep = strict ? keep_passing(suite) : "";
  for (const Start& s : starts_for(suite)) {
    if (verify(render_table(s.kind, s.table, ""), suite, scratch) != cli::kOk) continue;
    const std::size_t n = s.table.elements();
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        RelationMatrix m = s.table;
        const bool was = m.test(TruthMask{a}, TruthMask{b});
        m.set(TruthMask{a}, TruthMask{b}, !was);
        char flip[96];
        std::snprintf(flip, sizeof flip, "# %s with entry (0x%x, 0x%x) flipped to %d; fails %s\n",
                      s.description.c_str(), a, b, was ? 0 : 1, suite.c_str());
        const std::string text = render_table(s.kind, m, flip);
        if (verify(text, suite, scratch) != cli::kNegative) continue;
        if (keep.empty() || verify(text, keep, scratch) == cli::kOk) return text;
      }
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  const bool check = argc == 3 && std::string(argv[1]) == "--check";
  if (argc != 2 && !check) {
    std::cerr << "usage: gen_corrupted [--check] DIR\n";
    return 2;
  }
  const fs::path dir = argv[argc - 1];
  const fs::path scratch = fs::temp_directory_path() / ("gen_corrupted_" + std::to_string(::getpid()) + ".ent");
  const std::vector<std::string> suites{"axioms",   "connectivity", "wd",        "splitting", "sysp",
                                        "rm",       "lemma1",       "roundtrips", "theorem6", "connected",
                                        "wd_laws",  "empty_chain",  "oracle_eq"};
  int status = 0;
  for (const auto& suite : suites) {
    auto text = corrupted(suite, scratch, true);
    if (!text && !keep_passing(suite).empty()) text = corrupted(suite, scratch, false);
    const fs::path target = dir / (suite + ".ent");
    if (!text) {
      std::cerr << suite << ": no single flip makes the suite fail\n";
      status = 1;
      continue;
    }
    if (check) {
      std::ifstream f(target);
      std::stringstream have;
      have << f.rdbuf();
      if (have.str() != *text) {
        std::cerr << target.string() << " is stale\n";
        status = 1;
      }
    } else {
      std::ofstream(target) << *text;
      std::cout << target.string() << '\n';
    }
  }
  fs::remove(scratch);
  return status;
}
