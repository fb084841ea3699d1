#include "entrench/cli.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "entrench/audit.hpp"
#include "entrench/errors.hpp"
#include "entrench/io.hpp"

#ifndef ENTRENCH_FIXTURES_DIR
#define ENTRENCH_FIXTURES_DIR ""
#endif

namespace entrench::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

const std::vector<std::string> kSuites = {"axioms",   "connectivity", "wd",         "splitting",   "sysp",
                                          "rm",       "lemma1",       "roundtrips", "theorem6",    "connected",
                                          "wd_laws",  "empty_chain",  "oracle_eq"};

struct Options {
  bool json = false;
  bool no_timing = false;
  int max_vars = 4;
};

/// Everything a command reports; rendered either as text or as one JSON object.
struct Report {
  Report(std::string cmd, std::string in, std::vector<std::string> names)
      : command(std::move(cmd)), input(std::move(in)), vocab(std::move(names)) {}

  std::string command;
  std::string input;
  std::vector<std::string> vocab;
  json result = json::object();
  json witnesses = json::array();
  json counterexamples = json::array();
  ScanMode mode;
  double timing_ms = 0;
};

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const SyntaxError*>(&e)) return "SyntaxError";
  if (dynamic_cast<const UnknownVariable*>(&e)) return "UnknownVariable";
  if (dynamic_cast<const VocabularyTooLarge*>(&e)) return "VocabularyTooLarge";
  if (dynamic_cast<const InvalidVocabulary*>(&e)) return "InvalidVocabulary";
  if (dynamic_cast<const FormatError*>(&e)) return "FormatError";
  if (dynamic_cast<const ConnectivityRequired*>(&e)) return "ConnectivityRequired";
  if (dynamic_cast<const WeakDisjunctionRequired*>(&e)) return "WeakDisjunctionRequired";
  return "Error";
}

class Printer {
 public:
  explicit Printer(const Vocabulary& vocab) : vocab_(vocab), alg_(vocab.algebra()) {}

  std::string hex(TruthMask m) const { return alg_.hex(m); }
  std::string formula(TruthMask m) const { return render(canonical_formula(m, vocab_), vocab_); }
  std::string both(TruthMask m) const { return hex(m) + " (" + formula(m) + ")"; }

  json mask(TruthMask m) const { return json{{"mask", hex(m)}, {"formula", formula(m)}}; }
  json masks(const std::vector<TruthMask>& ms) const {
    json out = json::array();
    for (TruthMask m : ms) out.push_back(mask(m));
    return out;
  }

 private:
  const Vocabulary& vocab_;
  Algebra alg_;
};

json mode_json(const ScanMode& m) {
  return json{{"kind", m.is_sampled() ? "sampled" : "exhaustive"}, {"seed", m.seed}, {"samples", m.samples}};
}

std::string mode_text(const ScanMode& m) {
  if (!m.is_sampled()) return "exhaustive";
  return "sampled(seed=" + std::to_string(m.seed) + ", samples=" + std::to_string(m.samples) + ")";
}

void emit_json(const Report& r, std::ostream& out) {
  json j;
  j["command"] = r.command;
  j["input"] = r.input;
  j["vocab"] = r.vocab;
  j["result"] = r.result;
  j["witnesses"] = r.witnesses;
  j["counterexamples"] = r.counterexamples;
  j["mode"] = mode_json(r.mode);
  j["timing_ms"] = r.timing_ms;
  out << j.dump(2) << '\n';
}

double elapsed_ms(Clock::time_point start, const Options& opt) {
  if (opt.no_timing) return 0;
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fixtures_dir() { return ENTRENCH_FIXTURES_DIR; }

io::Input load(const std::string& path, const Options& opt) {
  return io::load_input(io::resolve_fixture(path, fixtures_dir()), VocabularyLimits{opt.max_vars});
}

TruthMask mask_arg(const std::string& text, const Vocabulary& vocab) { return truth_mask(parse(text, vocab), vocab); }

std::string vocab_line(const Vocabulary& v) {
  std::string s = "vocab:";
  for (const auto& n : v.names()) s += " " + n;
  return s;
}

// ---------------------------------------------------------------------------
// leq / query / extensions

int cmd_leq(const std::string& file, const std::string& a_text, const std::string& b_text, const Options& opt,
            std::ostream& out) {
  const auto start = Clock::now();
  const io::Input input = load(file, opt);
  const EntrenchmentOracle o = input.oracle();
  const TruthMask a = mask_arg(a_text, input.vocab), b = mask_arg(b_text, input.vocab);
  const bool value = o.leq(a, b);
  const Printer pr(input.vocab);

  Report r{"leq", input.source, input.vocab.names()};
  r.result = json{{"lhs", pr.mask(a)}, {"rhs", pr.mask(b)}, {"value", value}};
  std::optional<TruthMask> meet;
  if (o.backend() == EntrenchmentOracle::Backend::closure) {
    meet = o.closure_meet(a);
    r.witnesses.push_back(json{{"label", "closure_meet"}, {"masks", json::array({pr.mask(*meet)})}});
  }
  r.timing_ms = elapsed_ms(start, opt);
  if (opt.json) {
    emit_json(r, out);
  } else {
    out << vocab_line(input.vocab) << '\n';
    out << a_text << " <= " << b_text << ": " << (value ? "true" : "false") << '\n';
    if (meet) out << "closure meet of lhs: " << pr.both(*meet) << '\n';
  }
  return value ? kOk : kNegative;
}

int cmd_query(const std::string& file, const std::string& a_text, const std::string& b_text, const Options& opt,
              std::ostream& out) {
  const auto start = Clock::now();
  const io::Input input = load(file, opt);
  const Printer pr(input.vocab);
  Report r{"query", input.source, input.vocab.names()};

  if (auto s = input.service()) {  // explicit consequence table: a lookup
    const TruthMask a = mask_arg(a_text, input.vocab), b = mask_arg(b_text, input.vocab);
    const bool value = s->query(a, b);
    r.result = json{{"antecedent", pr.mask(a)}, {"consequent", pr.mask(b)}, {"value", value}};
    r.timing_ms = elapsed_ms(start, opt);
    if (opt.json) emit_json(r, out);
    else out << vocab_line(input.vocab) << '\n' << a_text << " |~ " << b_text << ": " << (value ? "true" : "false") << '\n';
    return value ? kOk : kNegative;
  }

  const InferenceEngine engine(input.oracle());
  const InferenceResult res = engine.infer(parse(a_text, input.vocab), parse(b_text, input.vocab));
  json bases = json::array();
  for (const FilterMin& f : res.maximal_bases) bases.push_back(pr.mask(f.c));
  r.result = json{{"antecedent", pr.mask(truth_mask(res.antecedent, input.vocab))},
                  {"consequent", pr.mask(truth_mask(res.consequent, input.vocab))},
                  {"value", res.verdict},
                  {"maximal_bases", bases},
                  {"extensions", pr.masks(res.extensions)},
                  {"sceptical", pr.mask(res.sceptical_min)}};
  r.witnesses.push_back(json{{"label", "sceptical"}, {"masks", json::array({pr.mask(res.sceptical_min)})}});
  r.timing_ms = elapsed_ms(start, opt);
  if (opt.json) {
    emit_json(r, out);
  } else {
    out << vocab_line(input.vocab) << '\n';
    out << a_text << " |~ " << b_text << ": " << (res.verdict ? "true" : "false") << '\n';
    out << "maximal bases:";
    if (res.maximal_bases.empty()) out << " none";
    out << '\n';
    for (const FilterMin& f : res.maximal_bases) out << "  " << pr.both(f.c) << '\n';
    out << "sceptical extension: " << pr.both(res.sceptical_min) << '\n';
  }
  return res.verdict ? kOk : kNegative;
}

int cmd_extensions(const std::string& file, const std::string& a_text, const Options& opt, std::ostream& out) {
  const auto start = Clock::now();
  const io::Input input = load(file, opt);
  const Printer pr(input.vocab);
  const InferenceEngine engine(input.oracle());
  const TruthMask a = mask_arg(a_text, input.vocab);
  const std::vector<TruthMask> ext = engine.extensions(a);
  Report r{"extensions", input.source, input.vocab.names()};
  r.result = json{{"antecedent", pr.mask(a)}, {"extensions", pr.masks(ext)}, {"sceptical", pr.mask(engine.sceptical_extension(a))}};
  r.timing_ms = elapsed_ms(start, opt);
  if (opt.json) {
    emit_json(r, out);
  } else {
    out << vocab_line(input.vocab) << '\n';
    out << "extensions of " << a_text << ": " << ext.size() << '\n';
    for (TruthMask e : ext) out << "  " << pr.both(e) << '\n';
    out << "sceptical extension: " << pr.both(engine.sceptical_extension(a)) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct Target {
  std::string label;
  Vocabulary vocab;
  EntrenchmentOracle oracle;
  std::optional<InferenceService> service;  // explicit consequence tables only
};

std::vector<Verdict> run_suite(const std::string& suite, const Target& t, ScanMode mode) {
  auto service = [&] {
    return t.service ? *t.service : InferenceService::from_engine(InferenceEngine(t.oracle));
  };
  if (suite == "axioms") return {validate_axioms(t.oracle, mode)};
  if (suite == "connectivity") return {structure_check(t.oracle, StructureProperty::connectivity, mode)};
  if (suite == "wd") return {structure_check(t.oracle, StructureProperty::weak_disjunction, mode)};
  if (suite == "splitting") return {structure_check(t.oracle, StructureProperty::splitting, mode)};
  if (suite == "sysp") return check_system_p(service(), mode);
  if (suite == "rm") return check_rational(service(), InferenceEngine(t.oracle), mode);
  if (suite == "lemma1") return check_identities(IdentitySuite::lemma1, t.oracle, mode);
  if (suite == "roundtrips") {
    if (!t.service) return check_identities(IdentitySuite::roundtrips, t.oracle, mode);
    // For a consequence table the round trip starts from the table itself.
    const InferenceService s = *t.service;
    const InferenceService back = n_translate(p_translate(s));
    Verdict v("n_of_p", ScanMode::exhaustive());
    v.instances = for_each_tuple<2>(s.algebra(), ScanMode::exhaustive(), [&](const auto& x) {
      if (s.query(x[0], x[1]) != back.query(x[0], x[1])) v.record("alpha,beta", {x[0], x[1]});
    });
    return {v};
  }
  if (suite == "theorem6")
    return t.service ? check_completeness(*t.service, mode) : check_identities(IdentitySuite::theorem6, t.oracle, mode);
  if (suite == "connected") return check_connected_laws(t.oracle, mode);
  if (suite == "wd_laws") return check_wd_laws(t.oracle, mode);
  if (suite == "empty_chain") return check_identities(IdentitySuite::empty_chain, t.oracle, mode);
  if (suite == "oracle_eq") return check_identities(IdentitySuite::oracle_equivalence, t.oracle, mode);
  throw Error("unknown suite '" + suite + "'");
}

Vocabulary random_vocab(int n, const Options& opt) {
  static const std::vector<std::string> names = {"p", "q", "r", "s", "t"};
  if (n < 1 || n > kHardVariableLimit) throw VocabularyTooLarge("--n must be in 1..5");
  return Vocabulary(std::vector<std::string>(names.begin(), names.begin() + n), VocabularyLimits{opt.max_vars});
}

struct VerifyArgs {
  std::string file;
  std::string suites = "axioms";
  std::uint64_t sampled = 0;
  std::uint64_t seed = 0;
  int random = 0;
  int n = 2;
  bool connected = false;
};

int cmd_verify(const VerifyArgs& va, const Options& opt, std::ostream& out) {
  const auto start = Clock::now();
  std::vector<std::string> suites;
  {
    std::stringstream ss(va.suites);
    for (std::string s; std::getline(ss, s, ',');) {
      if (s == "all") {
        suites.insert(suites.end(), kSuites.begin(), kSuites.end());
        continue;
      }
      if (std::find(kSuites.begin(), kSuites.end(), s) == kSuites.end())
        throw CLI::ValidationError("--suites", "unknown suite '" + s + "'");
      suites.push_back(s);
    }
  }
  const ScanMode mode = va.sampled ? ScanMode::sampled(va.seed, va.sampled) : ScanMode::exhaustive();

  std::vector<Target> targets;
  std::string input_label;
  if (va.random > 0) {
    const Vocabulary vocab = random_vocab(va.n, opt);
    for (int i = 1; i <= va.random; ++i) {
      const std::uint64_t seed = va.seed + static_cast<std::uint64_t>(i);
      targets.push_back({"seed " + std::to_string(seed), vocab,
                         va.connected ? random_connected_oracle(seed, vocab)
                                      : EntrenchmentOracle::closure(random_base(seed, vocab)),
                         std::nullopt});
    }
    input_label = std::string(va.connected ? "random-connected" : "random") + ":" + std::to_string(va.random) +
                  ":n=" + std::to_string(va.n);
  } else {
    if (va.file.empty()) throw CLI::ValidationError("verify", "needs an input file or --random");
    const io::Input input = load(va.file, opt);
    targets.push_back({input.source, input.vocab, input.oracle(), input.service()});
    input_label = input.source;
  }
  const Vocabulary& vocab = targets.front().vocab;
  const Printer pr(vocab);

  struct Row {
    std::string suite;
    Verdict verdict;
  };
  std::vector<Row> rows;
  std::map<std::string, std::size_t> index;
  json refusals = json::array();
  for (const std::string& suite : suites) {
    for (const Target& t : targets) {
      try {
        for (const Verdict& v : run_suite(suite, t, mode)) {
          const std::string key = suite + "/" + v.law;
          if (auto it = index.find(key); it != index.end()) {
            rows[it->second].verdict.absorb(v);
          } else {
            index.emplace(key, rows.size());
            rows.push_back({suite, v});
          }
        }
      } catch (const GuardFailure& e) {
        refusals.push_back(json{{"suite", suite}, {"target", t.label}, {"kind", error_kind(e)}, {"message", e.what()}});
      }
    }
  }

  bool failed = false;
  Report r{"verify", input_label, vocab.names()};
  r.mode = mode;
  json verdicts = json::array();
  for (const Row& row : rows) {
    const Verdict& v = row.verdict;
    if (!v.pass && !v.informational) failed = true;
    verdicts.push_back(json{{"suite", row.suite},
                            {"law", v.law},
                            {"pass", v.pass},
                            {"informational", v.informational},
                            {"instances", v.instances},
                            {"violations", v.violations},
                            {"mode", mode_json(v.mode)},
                            {"note", v.note}});
    for (const Witness& w : v.counterexamples)
      r.counterexamples.push_back(
          json{{"suite", row.suite}, {"law", v.law}, {"label", w.label}, {"masks", pr.masks(w.masks)}});
  }
  const int code = failed ? kNegative : (!refusals.empty() ? kRefused : kOk);
  r.result = json{{"pass", code == kOk}, {"targets", targets.size()}, {"verdicts", verdicts}, {"refusals", refusals}};
  r.timing_ms = elapsed_ms(start, opt);

  if (opt.json) {
    emit_json(r, out);
    return code;
  }
  out << vocab_line(vocab) << '\n';
  out << "input: " << input_label << '\n';
  out << "mode: " << mode_text(mode) << '\n';
  for (const Row& row : rows) {
    const Verdict& v = row.verdict;
    const char* tag = v.pass ? "PASS" : (v.informational ? "INFO" : "FAIL");
    out << tag << ' ' << row.suite << '/' << v.law << " instances=" << v.instances;
    if (!v.pass) out << " violations=" << v.violations;
    out << '\n';
    if (!v.note.empty() && !v.pass) out << "  note: " << v.note << '\n';
    for (const Witness& w : v.counterexamples) {
      out << "  " << w.label << ':';
      for (TruthMask m : w.masks) out << ' ' << pr.hex(m);
      out << "  [";
      for (std::size_t i = 0; i < w.masks.size(); ++i) out << (i ? " ; " : "") << pr.formula(w.masks[i]);
      out << "]\n";
    }
  }
  for (const auto& ref : refusals)
    out << "REFUSED " << ref["suite"].get<std::string>() << " (" << ref["target"].get<std::string>()
        << "): " << ref["message"].get<std::string>() << '\n';
  out << "result: " << (code == kOk ? "pass" : code == kRefused ? "refused" : "fail") << '\n';
  return code;
}

// ---------------------------------------------------------------------------
// translate / compile-kb / bench

int serve(const std::function<bool(TruthMask, TruthMask)>& answer, std::string_view sep, const Vocabulary& vocab,
          std::istream& in, std::ostream& out) {
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto at = line.find(sep);
    if (at == std::string::npos) {
      out << "error: expected '<formula> " << sep << " <formula>'" << std::endl;
      continue;
    }
    try {
      const TruthMask a = mask_arg(line.substr(0, at), vocab);
      const TruthMask b = mask_arg(line.substr(at + sep.size()), vocab);
      out << (answer(a, b) ? "true" : "false") << std::endl;
    } catch (const Error& e) {
      out << "error: " << e.what() << std::endl;
    }
  }
  return kOk;
}

int cmd_translate(const std::string& file, const std::string& direction, bool serve_mode, const Options& opt,
                  std::istream& in, std::ostream& out) {
  const auto start = Clock::now();
  const io::Input input = load(file, opt);
  const Algebra alg = input.vocab.algebra();

  std::optional<InferenceService> produced_service;
  std::optional<EntrenchmentOracle> produced_oracle;
  if (direction == "n") {
    if (input.kind == io::InputKind::infer_table)
      throw Error("direction n needs an entrenchment input, not a consequence table");
    produced_service = n_translate(input.oracle());
  } else {
    const InferenceService s = input.service() ? *input.service()
                                               : InferenceService::from_engine(InferenceEngine(input.oracle()));
    produced_oracle = direction == "p" ? p_translate(s) : gm_translate(s);
  }

  if (serve_mode) {
    if (produced_service)
      return serve([&](TruthMask a, TruthMask b) { return produced_service->query(a, b); }, "|~", input.vocab, in, out);
    return serve([&](TruthMask a, TruthMask b) { return produced_oracle->leq(a, b); }, "<=", input.vocab, in, out);
  }

  if (alg.variables() > 3) throw VocabularyTooLarge("translate writes explicit tables; needs n <= 3 (use --serve)");
  RelationMatrix m(static_cast<std::size_t>(alg.size()));
  for (std::uint64_t a = 0; a < alg.size(); ++a)
    for (std::uint64_t b = 0; b < alg.size(); ++b) {
      const TruthMask x = alg.element(a), y = alg.element(b);
      if (produced_service ? produced_service->query(x, y) : produced_oracle->leq(x, y)) m.set(x, y);
    }
  const io::InputKind kind = produced_service ? io::InputKind::infer_table : io::InputKind::leq_table;
  std::ostringstream table;
  io::write_table(table, input.vocab, kind, m);

  if (opt.json) {
    Report r{"translate", input.source, input.vocab.names()};
    json rows = json::array();
    std::istringstream lines(table.str());
    for (std::string l; std::getline(lines, l);) rows.push_back(l);
    r.result = json{{"direction", direction}, {"kind", io::to_string(kind)}, {"pairs", m.count()}, {"table", rows}};
    r.timing_ms = elapsed_ms(start, opt);
    emit_json(r, out);
  } else {
    out << table.str();
  }
  return kOk;
}

int cmd_compile_kb(const std::string& file, const Options& opt, std::ostream& out) {
  const auto start = Clock::now();
  const ConditionalKB kb = io::load_kb(io::resolve_fixture(file, fixtures_dir()), VocabularyLimits{opt.max_vars});
  const CompiledKB compiled = compile_kb(kb);
  const KbReport& rep = compiled.report;
  const Printer pr(kb.vocab);

  if (opt.json) {
    Report r{"compile-kb", file, kb.vocab.names()};
    json gens = json::array(), entries = json::array();
    for (const auto& g : compiled.base.pairs())
      gens.push_back(json{{"lower", render(g.lower, kb.vocab)}, {"upper", render(g.upper, kb.vocab)}});
    for (const auto& e : rep.entries)
      entries.push_back(json{{"antecedent", render(e.conditional.antecedent, kb.vocab)},
                             {"consequent", render(e.conditional.consequent, kb.vocab)},
                             {"holds", e.holds}});
    r.result = json{{"generators", gens},
                    {"conditionals", entries},
                    {"inconsistent", rep.inconsistent},
                    {"weak_disjunction", rep.weak_disjunction.pass}};
    r.mode = rep.weak_disjunction.mode;
    for (const Witness& w : rep.weak_disjunction.counterexamples)
      r.counterexamples.push_back(
          json{{"suite", "wd"}, {"law", "weak_disjunction"}, {"label", w.label}, {"masks", pr.masks(w.masks)}});
    r.timing_ms = elapsed_ms(start, opt);
    emit_json(r, out);
    return kOk;
  }
  io::write_generators(out, compiled.base);
  out << "# report (experimental)\n";
  for (const auto& e : rep.entries)
    out << "# " << render(e.conditional.antecedent, kb.vocab) << " |~ " << render(e.conditional.consequent, kb.vocab)
        << ": " << (e.holds ? "holds" : "does not hold") << '\n';
  if (rep.inconsistent) out << "# inconsistent ordering: every sentence infers false\n";
  out << "# weak disjunction: " << (rep.weak_disjunction.pass ? "pass" : "fail") << '\n';
  return kOk;
}

int cmd_bench(int n, int generators, std::uint64_t seed, const Options& opt, std::ostream& out) {
  const Vocabulary vocab = random_vocab(n, opt);
  const GeneratorBase base = random_base(seed, vocab, generators);
  auto ms = [&](Clock::time_point s) { return elapsed_ms(s, opt); };

  auto t = Clock::now();
  const EntrenchmentOracle o = EntrenchmentOracle::closure(base);
  const double closure_ms = ms(t);
  t = Clock::now();
  const InferenceEngine engine(o);
  const double scan_ms = ms(t);
  t = Clock::now();
  const TruthMask a = vocab.algebra().variable(0);
  const TruthMask b = vocab.algebra().variable(n > 1 ? 1 : 0);
  const bool verdict = engine.infer(a, b);
  const double infer_ms = ms(t);

  Report r{"bench", "random:seed=" + std::to_string(seed), vocab.names()};
  r.result = json{{"generators", generators},    {"closure_ms", closure_ms},      {"stable_scan_ms", scan_ms},
                  {"filters", engine.filters().size()}, {"infer_ms", infer_ms}, {"verdict", verdict}};
  r.timing_ms = closure_ms + scan_ms + infer_ms;
  if (opt.json) {
    emit_json(r, out);
    return kOk;
  }
  out << vocab_line(vocab) << '\n' << std::fixed << std::setprecision(3);
  out << "generators: " << generators << " (seed " << seed << ")\n";
  out << "closure cache: " << closure_ms << " ms\n";
  out << "stable-element scan: " << scan_ms << " ms, " << engine.filters().size() << " filters\n";
  const Printer pr(vocab);
  out << "infer " << pr.formula(a) << " |~ " << pr.formula(b) << ": " << (verdict ? "true" : "false") << " in "
      << infer_ms << " ms\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partial entrenchment and maxiconsistent inference engine", "entrench"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Emit one JSON report on stdout");
  app.add_flag("--no-timing", opt.no_timing, "Report timing_ms as 0 (reproducible output)");
  app.add_option("--max-vars", opt.max_vars, "Vocabulary cap; 5 enables five-variable inputs")
      ->check(CLI::Range(1, kHardVariableLimit));

  std::string file, a, b, direction = "n";
  bool serve_mode = false;
  VerifyArgs va;
  int bench_n = 4, bench_k = 10;
  std::uint64_t bench_seed = 1;

  auto* leq = app.add_subcommand("leq", "Decide a <= b");
  leq->add_option("file", file, "Entrenchment file or fixture id")->required();
  leq->add_option("a", a)->required();
  leq->add_option("b", b)->required();

  auto* query = app.add_subcommand("query", "Decide a |~ b");
  query->add_option("file", file)->required();
  query->add_option("antecedent", a)->required();
  query->add_option("consequent", b)->required();

  auto* ext = app.add_subcommand("extensions", "List the extension theories of a");
  ext->add_option("file", file)->required();
  ext->add_option("antecedent", a)->required();

  auto* verify = app.add_subcommand("verify", "Run law suites");
  verify->add_option("file", va.file, "Entrenchment file or fixture id");
  verify->add_option("--suites", va.suites, "Comma separated: " + [] {
    std::string s;
    for (const auto& x : kSuites) s += (s.empty() ? "" : ",") + x;
    return s + ", or all";
  }());
  verify->add_option("--sampled", va.sampled, "Sample this many tuples instead of scanning all");
  verify->add_option("--seed", va.seed, "Sampling seed; random inputs use seeds seed+1..seed+R");
  verify->add_option("--random", va.random, "Check R random generator bases instead of a file");
  verify->add_option("--n", va.n, "Variables for --random")->check(CLI::Range(1, kHardVariableLimit));
  verify->add_flag("--connected", va.connected, "With --random: random connected tables");

  auto* translate = app.add_subcommand("translate", "Translate between orderings and inference");
  translate->add_option("file", file)->required();
  translate->add_option("--direction", direction, "n: ordering to inference; p, gm: inference to ordering")
      ->check(CLI::IsMember({"n", "p", "gm"}));
  translate->add_flag("--serve", serve_mode, "Answer '<f> <= <f>' or '<f> |~ <f>' lines from stdin");

  auto* kb = app.add_subcommand("compile-kb", "Compile a conditional knowledge base (experimental)");
  kb->add_option("file", file)->required();

  auto* bench = app.add_subcommand("bench", "Time the closure, stable scan and one query");
  bench->add_option("--n", bench_n)->check(CLI::Range(1, kHardVariableLimit));
  bench->add_option("--generators", bench_k);
  bench->add_option("--seed", bench_seed);

  std::vector<const char*> argv{"entrench"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*leq) return cmd_leq(file, a, b, opt, out);
    if (*query) return cmd_query(file, a, b, opt, out);
    if (*ext) return cmd_extensions(file, a, opt, out);
    if (*verify) return cmd_verify(va, opt, out);
    if (*translate) return cmd_translate(file, direction, serve_mode, opt, in, out);
    if (*kb) return cmd_compile_kb(file, opt, out);
    if (*bench) return cmd_bench(bench_n, bench_k, bench_seed, opt, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GuardFailure& e) {
    err << "refused: " << error_kind(e) << ": " << e.what() << '\n';
    return kRefused;
  } catch (const std::exception& e) {
    err << "error: " << error_kind(e) << ": " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace entrench::cli
