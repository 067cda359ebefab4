#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "soficlab/errors.hpp"

namespace {

using soficlab::cli::Json;

struct Flag {
  std::string key;
  std::string value;
};

// Registers a string flag that lands in params[key] when given.
void add_flag(CLI::App* app, std::vector<Flag>& flags, const std::string& name, const std::string& key,
              const std::string& help) {
  app->add_option_function<std::string>(
      name, [&flags, key](const std::string& v) { flags.push_back({key, v}); }, help);
}

// Comma lists become arrays so config files and flags produce the same echo.
Json flag_value(const std::string& key, const std::string& value) {
  static const std::set<std::string> lists = {"q", "gamma", "corpus", "sentences"};
  if (!lists.count(key)) {
    if (!value.empty() && std::all_of(value.begin(), value.end(), ::isdigit)) return std::stoull(value);
    return value;
  }
  Json out = Json::array();
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= value.size(); ++i) {
    if (i < value.size() && (value[i] == '(' || value[i] == '{')) ++depth;
    if (i < value.size() && (value[i] == ')' || value[i] == '}')) --depth;
    if (i == value.size() || (value[i] == ',' && depth == 0)) {
      const std::string item = value.substr(start, i - start);
      if (!item.empty() && std::all_of(item.begin(), item.end(), ::isdigit)) out.push_back(std::stoull(item));
      else out.push_back(item);
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"soficlab: finite verification experiments on permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(soficlab::cli::tool_version()));

  std::string config_path, out_path, plot_path;
  std::uint64_t seed = 1;
  bool seed_given = false, timings = false;
  app.add_option("--config", config_path, "YAML or JSON config file; flags override it");
  app.add_option_function<std::uint64_t>(
      "--seed", [&](std::uint64_t s) { seed = s, seed_given = true; }, "Random seed (default 1)");
  app.add_option("--out", out_path, "Write the JSON report here instead of stdout");
  app.add_option("--plot-data", plot_path, "Write plain CSV for external plotting");
  app.add_flag("--timings", timings, "Embed wall times (reports are then not byte-stable)");

  std::vector<Flag> flags;
  auto* verify = app.add_subcommand("verify", "Evaluate sentences over a corpus against their oracles");
  add_flag(verify, flags, "--corpus", "corpus", "Comma-separated group specs, or 'default'");
  add_flag(verify, flags, "--sentences", "sentences", "felgner, congruence(l,q), prime_remark, ...");
  add_flag(verify, flags, "--strategy", "strategy", "naive, class-reduced or centralizer-aware");

  auto* primes = app.add_subcommand("primes", "Witness prime for a selector problem");
  add_flag(primes, flags, "--q", "q", "Comma-separated primes q >= 7");
  add_flag(primes, flags, "--gamma", "gamma", "Comma-separated 0/1 choices, one or one per q");
  add_flag(primes, flags, "--floor", "floor", "Smallest admissible p (default 13)");
  add_flag(primes, flags, "--budget", "budget", "Candidate scan budget");

  auto* schreier = app.add_subcommand("schreier", "Expansion and epsilon-automorphism clusters");
  add_flag(schreier, flags, "--graph", "graph", "regular:<group>, natural:<group> or file:<path>");
  add_flag(schreier, flags, "--mode", "mode", "exhaustive, local-search or exact-autos");
  add_flag(schreier, flags, "--eps", "eps", "Defect tolerance, e.g. 0 or 1/10");
  add_flag(schreier, flags, "--threshold", "threshold", "Cluster distance threshold (default 3/10)");
  add_flag(schreier, flags, "--restarts", "restarts", "Local-search restarts");
  add_flag(schreier, flags, "--steps", "steps", "Local-search steps per restart");

  auto* rigidity = app.add_subcommand("rigidity", "Centralizer rigidity of regular actions");
  add_flag(rigidity, flags, "--group", "group", "Group spec");
  add_flag(rigidity, flags, "--check", "check", "biregular, centralizer or regular");

  auto* stability = app.add_subcommand("stability", "Defects and nearest homomorphisms");
  add_flag(stability, flags, "--input", "input", "AlmostHom file");
  add_flag(stability, flags, "--group", "group", "Group spec for a sweep over all maps fixing the identity");
  add_flag(stability, flags, "--degree", "degree", "Target degree of the sweep");
  add_flag(stability, flags, "--window", "window", "Padding window, e.g. 0 or 1/2");

  auto* corpus = app.add_subcommand("corpus", "Corpus utilities");
  corpus->require_subcommand(1);
  corpus->fallthrough();
  auto* corpus_list = corpus->add_subcommand("list", "List corpus groups");
  add_flag(corpus_list, flags, "--corpus", "corpus", "Comma-separated group specs, or 'default'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : soficlab::cli::kExitUsage;
  }

  soficlab::cli::RunConfig config;
  for (auto* sub : {verify, primes, schreier, rigidity, stability})
    if (sub->parsed()) config.command = sub->get_name();
  if (corpus_list->parsed()) config.command = "corpus list";

  try {
    if (!config_path.empty()) {
      Json file = soficlab::cli::load_config_file(config_path);
      if (auto it = file.find("seed"); it != file.end()) {
        seed = seed_given ? seed : it->get<std::uint64_t>();
        file.erase(it);
      }
      if (auto it = file.find("timings"); it != file.end()) {
        timings = timings || it->get<bool>();
        file.erase(it);
      }
      config.params = std::move(file);
    }
  } catch (const std::exception& e) {
    std::cerr << "soficlab: " << e.what() << "\n";
    return soficlab::cli::kExitUsage;
  }
  for (const auto& f : flags) config.params[f.key] = flag_value(f.key, f.value);
  config.seed = seed;
  config.timings = timings;

  const auto result = soficlab::cli::run_command(config);
  const std::string text = soficlab::cli::render(result.report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream(out_path) << text;
  }
  if (!plot_path.empty()) std::ofstream(plot_path) << result.plot_csv;
  if (result.exit_code == soficlab::cli::kExitUsage && result.report.contains("error"))
    std::cerr << "soficlab: " << result.report["error"].get<std::string>() << "\n";
  return result.exit_code;
}
