// Command-line front end; everything goes through the C interface.
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "coxtwist/coxtwist.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct SystemDeleter {
  void operator()(ctw_system* s) const { ctw_system_free(s); }
};
using SystemPtr = std::unique_ptr<ctw_system, SystemDeleter>;

// Prints the output string (if any) and maps the status to an exit code.
int finish(ctw_status status, char* out) {
  if (out) {
    std::fputs(out, status == CTW_OK || status == CTW_NOT_CONNECTED ||
                            status == CTW_CHECK_FAILED
                        ? stdout
                        : stderr);
    ctw_string_free(out);
  }
  switch (status) {
    case CTW_OK: return kExitOk;
    case CTW_NOT_CONNECTED:
    case CTW_CHECK_FAILED: return kExitCheckFailed;
    default:
      std::cerr << "error (" << ctw_status_name(status) << "): " << ctw_last_error()
                << "\n";
      return kExitInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted involutions in Coxeter groups: S-hat-expressions, "
               "maximality graphs and move connectivity"};
  app.require_subcommand(1);

  std::string system_file, type_name, theta, format = "text";
  long long rank_bound = -1;
  std::size_t length_bound = 6, threads = 1, samples = 4096;
  std::uint64_t cap = 1'000'000;

  auto* sys_opt = app.add_option("--system", system_file, "Coxeter system file (JSON)")
                      ->check(CLI::ExistingFile);
  app.add_option("--type", type_name, "Catalogue type instead of a file (A3, B3, I2(5), ~A2, ...)")
      ->excludes(sys_opt);
  app.add_option("--theta", theta, "Diagram involution overriding the file, e.g. \"3 2 1\" or id");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--rank-bound", rank_bound, "Rank bound for involution sweeps");
  app.add_option("--length-bound", length_bound, "Length bound for the right-angled suite");
  app.add_option("--cap", cap, "Largest expression graph built explicitly");
  app.add_option("--samples", samples, "Sampled expressions per element above the cap");
  app.add_option("--threads", threads, "Worker threads for verification sweeps");

  const std::map<std::string, ctw_regime> regimes{
      {"braid", CTW_REGIME_BRAID}, {"halfbraid", CTW_REGIME_HALFBRAID}, {"full", CTW_REGIME_FULL}};

  auto* enumerate = app.add_subcommand("enumerate", "List reduced words, twisted involutions or reduced S-hat-expressions");
  enumerate->fallthrough();
  std::string enum_target, enum_word;
  enumerate->add_option("target", enum_target, "element | involutions | expressions")
      ->required()
      ->check(CLI::IsMember({"element", "involutions", "expressions"}));
  enumerate->add_option("word", enum_word, "Word (element) or S-hat-word (expressions); w0 allowed");

  auto* normalize = app.add_subcommand("normalize", "Normal form of a word, or evaluation of an S-hat-word");
  normalize->fallthrough();
  std::string norm_word;
  bool hat = false;
  normalize->add_option("word", norm_word)->required();
  normalize->add_flag("--hat", hat, "Treat the word as an S-hat-word");

  auto* connect = app.add_subcommand("connect", "Shortest move path between two reduced S-hat-expressions");
  connect->fallthrough();
  std::string from, to, connect_regime = "full";
  connect->add_option("from", from)->required();
  connect->add_option("to", to)->required();
  connect->add_option("--regime", connect_regime)->check(CLI::IsMember({"braid", "halfbraid", "full"}));

  auto* graph = app.add_subcommand("graph", "Maximality graph or expression graph of a twisted involution");
  graph->fallthrough();
  std::string graph_word, graph_kind = "maximality", graph_regime = "full";
  graph->add_option("word", graph_word, "S-hat-word or w0")->required();
  graph->add_option("--kind", graph_kind)->check(CLI::IsMember({"maximality", "expressions"}));
  graph->add_option("--regime", graph_regime)->check(CLI::IsMember({"braid", "halfbraid", "full"}));

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->fallthrough();
  std::string suite = "all";
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"word-property", "necessity", "half-braid", "right-angled", "all"}));

  auto* classify = app.add_subcommand("classify", "Type of W and the minimal move instances");
  classify->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  ctw_system* raw = nullptr;
  ctw_status status = CTW_INVALID_INPUT;
  if (!system_file.empty()) {
    status = ctw_system_load_file(system_file.c_str(), &raw);
  } else if (!type_name.empty()) {
    status = ctw_system_from_type(type_name.c_str(), &raw);
  } else {
    std::cerr << "error: one of --system or --type is required\n";
    return kExitInputError;
  }
  if (status != CTW_OK) return finish(status, nullptr);
  SystemPtr system(raw);
  if (!theta.empty()) {
    status = ctw_system_set_theta(system.get(), theta.c_str());
    if (status != CTW_OK) return finish(status, nullptr);
  }

  const ctw_format fmt = format == "json"  ? CTW_FORMAT_JSON
                         : format == "dot" ? CTW_FORMAT_DOT
                                           : CTW_FORMAT_TEXT;
  char* out = nullptr;

  if (*enumerate) {
    const ctw_enum_target target = enum_target == "element"       ? CTW_ENUM_ELEMENT
                                   : enum_target == "involutions" ? CTW_ENUM_INVOLUTIONS
                                                                  : CTW_ENUM_EXPRESSIONS;
    if (target != CTW_ENUM_INVOLUTIONS && enum_word.empty()) {
      std::cerr << "error: enumerate " << enum_target << " needs a word\n";
      return kExitInputError;
    }
    status = ctw_enumerate(system.get(), target, enum_word.c_str(), rank_bound, fmt, &out);
  } else if (*normalize) {
    status = ctw_normalize(system.get(), norm_word.c_str(), hat ? 1 : 0, fmt, &out);
  } else if (*connect) {
    status = ctw_connect(system.get(), from.c_str(), to.c_str(), regimes.at(connect_regime),
                         fmt, &out);
  } else if (*graph) {
    status = ctw_graph(system.get(), graph_word.c_str(),
                       graph_kind == "maximality" ? CTW_GRAPH_MAXIMALITY : CTW_GRAPH_EXPRESSIONS,
                       regimes.at(graph_regime), fmt, &out);
  } else if (*verify) {
    ctw_verify_options options;
    ctw_verify_options_default(&options);
    options.rank_bound = rank_bound;
    options.length_bound = length_bound;
    options.cap = cap;
    options.samples = samples;
    options.threads = threads;
    const std::map<std::string, ctw_suite> suites{
        {"word-property", CTW_SUITE_WORD_PROPERTY}, {"necessity", CTW_SUITE_NECESSITY},
        {"half-braid", CTW_SUITE_HALF_BRAID},       {"right-angled", CTW_SUITE_RIGHT_ANGLED},
        {"all", CTW_SUITE_ALL}};
    status = ctw_verify(system.get(), suites.at(suite), &options, fmt, &out);
  } else if (*classify) {
    status = ctw_classify(system.get(), fmt, &out);
  }
  return finish(status, out);
}
