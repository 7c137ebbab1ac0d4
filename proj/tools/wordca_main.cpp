// Command-line front end: generate word prefixes, apply sliding-window rules,
// tabulate complexities, and run the verification suite.
//
// Exit codes: 0 success (and every requested check passed), 1 a check failed
// or an internal error occurred, 2 bad usage or malformed input, 3 a depth
// guard tripped or a verdict stayed inconclusive.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wordca/analysis.hpp"
#include "wordca/errors.hpp"
#include "wordca/generators.hpp"
#include "wordca/rules.hpp"
#include "wordca/theorems.hpp"
#include "wordca/word.hpp"

namespace {

using namespace wordca;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuarded = 3;

struct GeneratorOptions {
  std::string word;        // fibonacci | sturmian | asturmian | champernowne | periodic
  std::string word_text;   // literal input instead of a generator
  std::string directive;   // comma-separated coefficients for sturmian
  bool cyclic = false;
  std::string seed;        // for periodic
  std::size_t l0 = static_cast<std::size_t>(-1);
  std::size_t l = 1;
  std::string eps = "fibonacci01";
  std::string alphabet = "ab";
  std::size_t len = 100000;
};

struct RuleOptions {
  std::string rule;  // runlength | invariant | exchange
  std::string rule_file;
  std::uint32_t radius = 2;
};

DirectiveSequence parse_directive(const std::string& text, bool cyclic) {
  DirectiveSequence directive;
  directive.cyclic = cyclic;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw InputError("--directive: bad coefficient '" + item + "'");
    }
    if (pos != item.size() || value == 0) {
      throw InputError("--directive: bad coefficient '" + item + "'");
    }
    directive.coefficients.push_back(static_cast<std::uint32_t>(value));
  }
  if (directive.coefficients.empty()) {
    throw InputError("--directive: at least one coefficient is required");
  }
  return directive;
}

std::shared_ptr<const PrefixSource> make_named_source(
    const GeneratorOptions& g) {
  if (g.word == "fibonacci") return fibonacci_source();
  if (g.word == "sturmian") {
    if (g.directive.empty()) {
      throw InputError("--word sturmian requires --directive d1,d2,...");
    }
    return characteristic_sturmian_source(
        parse_directive(g.directive, g.cyclic));
  }
  if (g.word == "asturmian") {
    ASturmianParams params;
    params.l = g.l;
    params.l0 = g.l0 == static_cast<std::size_t>(-1) ? g.l : g.l0;
    params.epsilon = make_epsilon(g.eps);
    return a_sturmian_source(params);
  }
  if (g.word == "champernowne") return champernowne_source();
  if (g.word == "periodic") {
    if (g.seed.empty()) {
      throw InputError("--word periodic requires --seed");
    }
    return periodic_source(
        Word::from_text(Alphabet::from_symbols(g.alphabet), g.seed));
  }
  throw InputError("--word: unknown generator '" + g.word +
                   "'; known: fibonacci, sturmian, asturmian, champernowne, "
                   "periodic");
}

/// The input word of a command: a literal --word-text if given, otherwise the
/// named generator's prefix of the requested length.
Word resolve_input(const GeneratorOptions& g) {
  if (!g.word_text.empty()) {
    return Word::from_text(Alphabet::from_symbols(g.alphabet), g.word_text);
  }
  if (g.word.empty()) {
    throw InputError("either --word or --word-text is required");
  }
  return make_named_source(g)->prefix(g.len);
}

LocalRule make_rule(const RuleOptions& r, std::size_t l,
                    const Alphabet& alphabet) {
  if (!r.rule_file.empty()) {
    std::ifstream in(r.rule_file);
    if (!in) {
      throw InputError("--rule-file: cannot open '" + r.rule_file + "'");
    }
    return LocalRule::parse_table(in, alphabet, alphabet);
  }
  if (r.rule == "runlength") return LocalRule::run_length(l);
  if (r.rule == "invariant") return LocalRule::invariant(alphabet, r.radius);
  if (r.rule == "exchange") return LocalRule::exchange(alphabet, r.radius);
  throw InputError("--rule: unknown rule '" + r.rule +
                   "'; known: runlength, invariant, exchange (or use "
                   "--rule-file)");
}

/// Writes content to path through a temporary file and a rename, so readers
/// never observe a half-written file. An empty path means stdout.
void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp(path + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw InputError("cannot write to '" + tmp.string() + "'");
    }
    out << content;
    out.flush();
    if (!out) {
      throw Error("write to '" + tmp.string() + "' failed");
    }
  }
  fs::rename(tmp, target);
}

void add_generator_flags(CLI::App* cmd, GeneratorOptions& g,
                         bool with_literal) {
  cmd->add_option("--word", g.word,
                  "generator: fibonacci, sturmian, asturmian, champernowne, "
                  "periodic");
  if (with_literal) {
    cmd->add_option("--word-text", g.word_text,
                    "literal input word instead of a generator");
  }
  cmd->add_option("--directive", g.directive,
                  "comma-separated directive coefficients (sturmian)");
  cmd->add_flag("--cyclic", g.cyclic, "repeat the directive list forever");
  cmd->add_option("--seed", g.seed, "repeating block (periodic)");
  cmd->add_option("--l0", g.l0, "head run length (asturmian; default l)");
  cmd->add_option("--l", g.l, "short run length l >= 1 (asturmian, runlength)");
  cmd->add_option("--eps", g.eps,
                  "bit sequence driving the long runs (asturmian); e.g. "
                  "fibonacci01, cfcyc10:1,2, periodic:01");
  cmd->add_option("--alphabet", g.alphabet,
                  "symbols of the working alphabet, in order");
  cmd->add_option("--len", g.len, "prefix length to generate");
}

void add_rule_flags(CLI::App* cmd, RuleOptions& r) {
  cmd->add_option("--rule", r.rule,
                  "named rule: runlength, invariant, exchange");
  cmd->add_option("--rule-file", r.rule_file,
                  "path to a '<window> <letter>' rule table");
  cmd->add_option("--radius", r.radius, "window width for invariant/exchange");
}

int cmd_gen(const GeneratorOptions& g, const std::string& out_path) {
  const Word w = resolve_input(g);
  emit(out_path, w.to_text() + "\n");
  return kExitOk;
}

int cmd_apply(const GeneratorOptions& g, const RuleOptions& r,
              const std::string& out_path) {
  const Word input = resolve_input(g);
  const LocalRule rule = make_rule(r, g.l, input.alphabet());
  const Word image = apply(rule, input);
  if (input.size() < rule.radius()) {
    std::cerr << "warning: input (" << input.size()
              << " letters) is shorter than the radius " << rule.radius()
              << "; the image is empty\n";
  } else {
    std::cerr << "image length " << image.size() << " = " << input.size()
              << " - " << rule.radius() << " + 1\n";
  }
  emit(out_path, image.to_text() + "\n");
  return kExitOk;
}

int cmd_analyze(const GeneratorOptions& g, std::size_t n_min,
                std::size_t n_max, const std::string& format, bool force,
                const std::string& out_path) {
  if (format != "csv" && format != "json") {
    throw InputError("--format must be csv or json");
  }
  const Word w = resolve_input(g);
  AnalyzerOptions options;
  options.force = force;
  Analyzer analyzer(std::move(w), options);
  const ComplexityTable table = analyzer.complexity_table(n_min, n_max);
  if (format == "csv") {
    std::ostringstream os;
    table.write_csv(os);
    emit(out_path, os.str());
  } else {
    emit(out_path, table.to_json().dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_verify(const std::string& theorem, const GeneratorOptions& g,
               std::size_t n_min, std::size_t n_max,
               const std::string& out_path) {
  ScaConfig config;
  config.l = g.l;
  config.l0 = g.l0;
  config.epsilon_id = g.eps;
  config.prefix_length = g.len;
  config.n_min = n_min;
  config.n_max = n_max;
  const std::vector<Verdict> verdicts = run_theorem(theorem, config);

  nlohmann::ordered_json report = nlohmann::ordered_json::array();
  bool any_fail = false;
  bool any_inconclusive = false;
  for (const auto& v : verdicts) {
    report.push_back(v.to_json());
    const char* tag = v.pass              ? "PASS"
                      : v.inconclusive    ? "INCONCLUSIVE"
                                          : "FAIL";
    any_fail = any_fail || (!v.pass && !v.inconclusive);
    any_inconclusive = any_inconclusive || v.inconclusive;
    std::cerr << "[" << tag << "] " << v.theorem_id << " "
              << v.config.dump() << "\n";
  }
  emit(out_path, report.dump(2) + "\n");
  if (any_fail) return kExitFail;
  if (any_inconclusive) return kExitGuarded;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "wordca: Sturmian and modulo-recurrent word generators, sliding-window "
      "rules, exact complexity analyzers, and a verification suite"};
  app.require_subcommand(1);

  GeneratorOptions gen_opts;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "write a generated prefix");
  add_generator_flags(gen, gen_opts, false);
  gen->add_option("--out", gen_out, "output path (default stdout)");

  GeneratorOptions apply_gen;
  RuleOptions apply_rule;
  std::string apply_out;
  CLI::App* apply_cmd =
      app.add_subcommand("apply", "slide a rule across an input word");
  add_generator_flags(apply_cmd, apply_gen, true);
  add_rule_flags(apply_cmd, apply_rule);
  apply_cmd->add_option("--out", apply_out, "output path (default stdout)");

  GeneratorOptions analyze_gen;
  std::size_t analyze_n_min = 1;
  std::size_t analyze_n_max = 100;
  std::string analyze_format = "csv";
  bool analyze_force = false;
  std::string analyze_out;
  CLI::App* analyze =
      app.add_subcommand("analyze", "tabulate p, pf, pal, rho_ab per depth");
  add_generator_flags(analyze, analyze_gen, true);
  analyze->add_option("--n-min", analyze_n_min, "first depth");
  analyze->add_option("--n-max", analyze_n_max, "last depth");
  analyze->add_option("--format", analyze_format, "csv or json");
  analyze->add_flag("--force", analyze_force,
                    "lift the depth guard (|word| >= 100 * n-max)");
  analyze->add_option("--out", analyze_out, "output path (default stdout)");

  GeneratorOptions verify_gen;
  std::string verify_theorem;
  std::size_t verify_n_min = 1;
  std::size_t verify_n_max = 0;
  std::string verify_out;
  CLI::App* verify =
      app.add_subcommand("verify", "check laws against brute-force counts");
  verify->add_option("--theorem", verify_theorem,
                     "law id, or 'all' for the whole grid")
      ->required();
  add_generator_flags(verify, verify_gen, false);
  verify->add_option("--n-min", verify_n_min, "first depth");
  verify->add_option("--n-max", verify_n_max,
                     "last depth (0 means three thresholds)");
  verify->add_option("--out", verify_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_opts, gen_out);
    if (apply_cmd->parsed()) return cmd_apply(apply_gen, apply_rule, apply_out);
    if (analyze->parsed()) {
      return cmd_analyze(analyze_gen, analyze_n_min, analyze_n_max,
                         analyze_format, analyze_force, analyze_out);
    }
    if (verify->parsed()) {
      return cmd_verify(verify_theorem, verify_gen, verify_n_min,
                        verify_n_max, verify_out);
    }
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuarded;
  } catch (const InsufficientDataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuarded;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
