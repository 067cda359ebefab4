#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

#include "soficlab/arithmetic.hpp"
#include "soficlab/errors.hpp"
#include "soficlab/group_spec.hpp"
#include "soficlab/rigidity.hpp"
#include "soficlab/schreier.hpp"
#include "soficlab/sentences.hpp"
#include "soficlab/stability.hpp"

#ifndef SOFICLAB_VERSION
#define SOFICLAB_VERSION "unknown"
#endif

namespace soficlab::cli {

namespace {

using Clock = std::chrono::steady_clock;

/// Accumulates per-check results and optional wall times for one report.
class ReportBuilder {
 public:
  explicit ReportBuilder(const RunConfig& config) : config_(config) {}

  void check(const std::string& name, bool pass) {
    checks_.push_back({{"name", name}, {"pass", pass}});
    all_pass_ = all_pass_ && pass;
  }

  template <class F>
  auto timed(const std::string& label, F&& f) {
    const auto start = Clock::now();
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      times_[label] = std::chrono::duration<double>(Clock::now() - start).count();
    } else {
      auto value = f();
      times_[label] = std::chrono::duration<double>(Clock::now() - start).count();
      return value;
    }
  }

  CommandResult finish(Json results) const {
    CommandResult out;
    out.report = {{"tool", "soficlab"},   {"version", tool_version()}, {"command", config_.command},
                  {"seed", config_.seed}, {"config", config_.params},  {"results", std::move(results)},
                  {"checks", checks_},    {"pass", all_pass_}};
    if (config_.timings) {
      Json t = Json::object();
      for (const auto& [k, v] : times_) t[k] = v;
      out.report["wall_seconds"] = t;
    }
    out.exit_code = all_pass_ ? kExitPass : kExitFail;
    return out;
  }

 private:
  const RunConfig& config_;
  Json checks_ = Json::array();
  bool all_pass_ = true;
  std::map<std::string, double> times_;
};

const Json* find_param(const Json& params, const char* key) {
  const auto it = params.find(key);
  return it == params.end() || it->is_null() ? nullptr : &*it;
}

std::string string_param(const Json& params, const char* key, std::string fallback) {
  const Json* v = find_param(params, key);
  if (!v) return fallback;
  if (v->is_string()) return v->get<std::string>();
  if (v->is_number()) return v->dump();
  throw InvalidArgument(std::string("'") + key + "' must be a string");
}

std::uint64_t uint_param(const Json& params, const char* key, std::uint64_t fallback) {
  const Json* v = find_param(params, key);
  if (!v) return fallback;
  if (v->is_number_unsigned()) return v->get<std::uint64_t>();
  if (v->is_number_integer() && v->get<std::int64_t>() >= 0) return v->get<std::uint64_t>();
  throw InvalidArgument(std::string("'") + key + "' must be a non-negative integer");
}

std::vector<std::uint64_t> uint_list_param(const Json& params, const char* key) {
  const Json* v = find_param(params, key);
  if (!v) return {};
  Json items = v->is_array() ? *v : Json::array({*v});
  std::vector<std::uint64_t> out;
  for (const auto& item : items) {
    if (item.is_string()) {
      std::stringstream in(item.get<std::string>());
      std::string part;
      while (std::getline(in, part, ','))
        try {
          out.push_back(std::stoull(part));
        } catch (const std::exception&) {
          throw InvalidArgument(std::string("'") + key + "': not an integer: '" + part + "'");
        }
    } else if (item.is_number_integer() && item.get<std::int64_t>() >= 0) {
      out.push_back(item.get<std::uint64_t>());
    } else {
      throw InvalidArgument(std::string("'") + key + "' must list non-negative integers");
    }
  }
  return out;
}

std::vector<std::string> string_list_param(const Json& params, const char* key, std::vector<std::string> fallback) {
  const Json* v = find_param(params, key);
  if (!v) return fallback;
  std::vector<std::string> out;
  for (const auto& item : v->is_array() ? *v : Json::array({*v})) {
    if (item.is_string()) out.push_back(item.get<std::string>());
    else if (item.is_object()) out.push_back(item.dump());
    else throw InvalidArgument(std::string("'") + key + "' must list strings");
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  static const std::regex form(R"(^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, form)) throw InvalidArgument("not a rational number: '" + text + "'");
  const std::int64_t den = m[2].matched ? std::stoll(m[2].str()) : 1;
  if (den == 0) throw InvalidArgument("zero denominator in '" + text + "'");
  return Rational(std::stoll(m[1].str()), den);
}

Rational rational_param(const Json& params, const char* key, const Rational& fallback) {
  const Json* v = find_param(params, key);
  if (!v) return fallback;
  if (v->is_number_integer()) return Rational(v->get<std::int64_t>());
  if (v->is_string()) return parse_rational(v->get<std::string>());
  throw InvalidArgument(std::string("'") + key + "' must be an integer or 'n/d'");
}

GroupSpec group_param(const Json& params, const char* key) {
  const Json* v = find_param(params, key);
  if (!v) throw InvalidArgument(std::string("missing '") + key + "'");
  return parse_group_spec(v->is_object() ? v->dump() : v->get<std::string>());
}

std::vector<GroupSpec> corpus_param(const Json& params) {
  const auto names = string_list_param(params, "corpus", {"default"});
  std::vector<GroupSpec> out;
  for (const auto& name : names) {
    if (name == "default") {
      const auto all = default_corpus();
      out.insert(out.end(), all.begin(), all.end());
    } else {
      out.push_back(parse_group_spec(name));
    }
  }
  return out;
}

Json rat(const Rational& r) { return to_string(r); }

Json witness_json(const std::vector<std::pair<std::string, std::string>>& witness) {
  Json out = Json::object();
  for (const auto& [var, value] : witness) out[var] = value;
  return out;
}

// ---- verify ----------------------------------------------------------------

struct SentenceJob {
  std::string id;
  logic::Formula formula;
  std::function<std::optional<bool>(const GroupSpec&, const FiniteGroupModel&)> oracle;
};

std::vector<SentenceJob> expand_sentences(const std::vector<std::string>& names) {
  static const std::regex congruence(R"(^congruence\(\s*(\d+)\s*,\s*(\d+)\s*\)$)");
  auto none = [](const GroupSpec&, const FiniteGroupModel&) -> std::optional<bool> { return std::nullopt; };
  auto coverage = [](const GroupSpec&, const FiniteGroupModel& g) -> std::optional<bool> {
    return commutator_coverage(g);
  };
  std::vector<SentenceJob> jobs;
  for (const auto& name : names) {
    std::smatch m;
    if (name == "felgner") {
      jobs.push_back({"felgner.phi1.literal", felgner_phi1(PowerReading::LiteralIntersection), none});
      jobs.push_back({"felgner.phi1.generated", felgner_phi1(PowerReading::GeneratedSubgroup), none});
      jobs.push_back({"felgner.phi2", felgner_phi2(), coverage});
    } else if (name == "felgner.phi1.literal") {
      jobs.push_back({name, felgner_phi1(PowerReading::LiteralIntersection), none});
    } else if (name == "felgner.phi1.generated") {
      jobs.push_back({name, felgner_phi1(PowerReading::GeneratedSubgroup), none});
    } else if (name == "felgner.phi2") {
      jobs.push_back({name, felgner_phi2(), coverage});
    } else if (name == "prime_remark") {
      jobs.push_back({name, prime_remark_sentence(),
                      [](const GroupSpec& s, const FiniteGroupModel&) -> std::optional<bool> {
                        if (s.kind != GroupKind::Sym || s.n < 2) return std::nullopt;
                        return prime_remark_oracle(s.n);
                      }});
    } else if (std::regex_match(name, m, congruence)) {
      const std::size_t l = std::stoul(m[1].str()), q = std::stoul(m[2].str());
      std::string id = "congruence(" + std::to_string(l) + "," + std::to_string(q) + ")";
      jobs.push_back({id, congruence_sentence(l, q),
                      [l, q](const GroupSpec& s, const FiniteGroupModel&) -> std::optional<bool> {
                        if (s.kind != GroupKind::Alt) return std::nullopt;
                        return congruence_oracle_alt(s.n, l, q);
                      }});
    } else {
      throw InvalidArgument("unknown sentence '" + name + "'");
    }
  }
  return jobs;
}

CommandResult cmd_verify(const RunConfig& config) {
  ReportBuilder report(config);
  const auto corpus = corpus_param(config.params);
  const auto names = string_list_param(config.params, "sentences", {"felgner", "congruence(1,3)", "prime_remark"});
  const auto strategy = logic::parse_strategy(string_param(config.params, "strategy", "class-reduced"));
  const auto jobs = expand_sentences(names);
  const bool felgner = std::find(names.begin(), names.end(), "felgner") != names.end();

  Json rows = Json::array();
  for (const auto& spec : corpus) {
    const auto g = construct_group(spec);
    Json row = {{"group", g.name()}, {"spec", to_string(spec)}, {"order", g.order()}};
    if (felgner) {
      const bool simple = report.timed(g.name() + "/classifier", [&] { return classify_nonabelian_simple(g); });
      row["nonabelian_simple"] = simple;
    }
    Json sentences = Json::array();
    for (const auto& job : jobs) {
      const auto oracle = job.oracle(spec, g);
      const auto r = report.timed(g.name() + "/" + job.id,
                                  [&] { return run_sentence(g, job.id, job.formula, strategy, oracle); });
      Json entry = {{"id", job.id}, {"truth", r.truth}};
      entry["oracle"] = oracle ? Json(*oracle) : Json(nullptr);
      if (!r.witness.empty()) entry["witness"] = witness_json(r.witness);
      sentences.push_back(entry);
      if (oracle) report.check(g.name() + "/" + job.id, r.agrees());
    }
    row["sentences"] = sentences;
    rows.push_back(row);
  }
  return report.finish({{"strategy", std::string(logic::to_string(strategy))}, {"rows", rows}});
}

// ---- primes ----------------------------------------------------------------

CommandResult cmd_primes(const RunConfig& config) {
  ReportBuilder report(config);
  const auto qs = uint_list_param(config.params, "q");
  auto gammas = uint_list_param(config.params, "gamma");
  if (qs.empty()) throw InvalidArgument("primes: --q needs at least one prime");
  if (gammas.empty()) gammas.assign(qs.size(), 1);
  if (gammas.size() == 1) gammas.assign(qs.size(), gammas.front());
  if (gammas.size() != qs.size()) throw InvalidArgument("primes: --gamma needs one value or one per q");
  SelectorProblem problem;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (gammas[i] > 1) throw InvalidArgument("primes: gamma values are 0 or 1");
    if (!problem.gamma.emplace(qs[i], static_cast<int>(gammas[i])).second)
      throw InvalidArgument("primes: q listed twice");
  }
  const std::uint64_t floor = uint_param(config.params, "floor", 13);
  const std::uint64_t budget = uint_param(config.params, "budget", kDefaultScanBudget);

  Json residues = Json::array();
  for (const auto q : qs) {
    const auto r = residue_pair(q);
    residues.push_back({{"q", q}, {"a0", r.a0}, {"a1", r.a1}, {"c", r.c}, {"d", r.d}});
    const std::uint64_t d4 = r.d * r.d % q * r.d % q * r.d % q;
    report.check("residues/" + std::to_string(q), r.a0 != r.a1 && d4 == r.c % q);
  }
  const auto w = report.timed("search", [&] { return find_witness_prime(problem, floor, budget); });
  Json per_q = Json::array();
  for (const auto& c : w.checks) {
    per_q.push_back({{"q", c.q}, {"gamma", c.gamma}, {"expected", c.expected}, {"residue", c.residue}, {"pass", c.ok}});
    report.check("witness/" + std::to_string(c.q), c.ok);
  }
  report.check("p_is_prime", is_prime(w.p));
  report.check("p_at_least_floor", w.p >= floor);
  return report.finish(
      {{"p", w.p}, {"candidates_scanned", w.candidates_scanned}, {"residues", residues}, {"verification", per_q}});
}

// ---- schreier --------------------------------------------------------------

CommandResult cmd_schreier(const RunConfig& config) {
  ReportBuilder report(config);
  const std::string spec = string_param(config.params, "graph", "");
  if (spec.empty()) throw InvalidArgument("schreier: --graph is required");
  const auto graph = graph_from_spec(spec);
  const auto mode = parse_auto_search_mode(string_param(config.params, "mode", "exact-autos"));
  const Rational eps = rational_param(config.params, "eps", 0);
  const Rational threshold = rational_param(config.params, "threshold", kClusterThreshold);
  AutoSearchOptions options;
  options.seed = config.seed;
  options.restarts = uint_param(config.params, "restarts", options.restarts);
  options.steps = uint_param(config.params, "steps", options.steps);

  Json results = {{"graph", spec},
                  {"vertices", graph.n},
                  {"labels", graph.labels},
                  {"edges", graph.edge_count()},
                  {"symmetrized_degree", graph.symmetrized_degree()}};
  Json masses = Json::array();
  for (const auto& m : component_mass_profile(graph)) masses.push_back(rat(m));
  results["component_masses"] = masses;

  const double gap = report.timed("spectral_gap", [&] { return spectral_gap(graph); });
  results["spectral_gap"] = gap;
  if (graph.n <= kExpansionCap) {
    const Rational h = report.timed("edge_expansion", [&] { return edge_expansion(graph); });
    results["edge_expansion"] = rat(h);
    report.check("expansion_positive_iff_gap_positive", (h > 0) == (gap > 0));
  } else {
    results["edge_expansion"] = nullptr;
  }

  const auto autos = report.timed("automorphisms", [&] { return enumerate_eps_automorphisms(graph, eps, mode, options); });
  std::optional<ClusterScan> scanned;
  if (autos.size() >= 2)
    scanned = report.timed("clusters", [&] { return cluster_scan(autos, graph, eps, threshold); });
  ClusterScan scan;
  if (scanned) scan = *scanned;
  Json hist = Json::array();
  for (const auto& bin : scan.histogram) hist.push_back({{"distance", rat(bin.distance)}, {"count", bin.count}});
  Json pairwise = nullptr;
  if (scan.histogram.size() == 1) pairwise = rat(scan.histogram.front().distance);
  Json probes = Json::array();
  for (const auto& p : scan.probes) probes.push_back({{"lhs", p.lhs}, {"rhs", p.rhs}, {"defect", rat(p.defect)}});
  results["automorphisms"] = {{"mode", to_string(mode)},
                              {"epsilon", rat(eps)},
                              {"count", autos.size()},
                              {"pairwise_distance", pairwise},
                              {"histogram", hist},
                              {"threshold", rat(threshold)},
                              {"clusters", scanned ? Json(scan.clusters.size()) : Json(autos.size())},
                              {"gap", scanned ? Json({rat(scan.gap_low), rat(scan.gap_high)}) : Json(nullptr)},
                              {"probes", probes}};
  if (mode == AutoSearchMode::Backtracking && spec.rfind("regular:", 0) == 0) {
    report.check("count_equals_order", autos.size() == graph.n);
    report.check("pairwise_distance_one", graph.n < 2 || pairwise == Json("1"));
  }
  report.check("all_within_epsilon", std::all_of(autos.begin(), autos.end(),
                                                 [&](const Permutation& p) { return is_epsilon_automorphism(graph, p, eps); }));

  CommandResult out = report.finish(results);
  out.plot_csv = scanned ? histogram_csv(scan) : "numerator,denominator,count\n";
  return out;
}

// ---- rigidity --------------------------------------------------------------

Json perm_list(const std::vector<Permutation>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_cycle_string());
  return out;
}

CommandResult cmd_rigidity(const RunConfig& config) {
  ReportBuilder report(config);
  const auto spec = group_param(config.params, "group");
  const auto g = construct_group(spec);
  const std::string check = string_param(config.params, "check", "biregular");
  Json results = {{"group", g.name()}, {"order", g.order()}, {"check", check}};
  if (check == "biregular") {
    const auto r = report.timed("biregular", [&] { return biregular_check(g); });
    results["centralizer_order"] = r.centralizer_order;
    results["centralizer_is_right_copy"] = r.centralizer_is_right_copy;
    results["double_centralizer"] = r.double_centralizer_closes ? "closes" : "does not close";
    results["flip_swap"] = r.flip_swaps;
    results["right_copy_one_discrete"] = r.right_copy_one_discrete;
    report.check("centralizer_order_equals_order", r.centralizer_order == g.order());
    report.check("centralizer_is_right_copy", r.centralizer_is_right_copy);
    report.check("double_centralizer_closes", r.double_centralizer_closes);
    report.check("flip_swap", r.flip_swaps);
    report.check("right_copy_one_discrete", r.right_copy_one_discrete);
  } else if (check == "centralizer") {
    const auto action = natural_action(g);
    results["degree"] = action.degree;
    results["transitive"] = is_transitive(action);
    const auto c = report.timed("centralizer", [&] { return centralizer_of_action(action); });
    results["centralizer_order"] = c.order();
    results["centralizer"] = perm_list(sorted_elements(c));
    const std::size_t cap = uint_param(config.params, "brute_force_cap", 8);
    if (action.degree <= cap) {
      const auto brute = report.timed("bruteforce", [&] { return centralizer_bruteforce(action.images, action.degree, cap); });
      report.check("base_point_matches_brute_force", sorted_elements(brute) == sorted_elements(c));
    }
  } else if (check == "regular") {
    const auto left = left_regular_action(g);
    const auto natural = natural_action(g);
    const bool left_regular = is_regular_via_centralizer(left);
    results["left_regular_is_regular"] = left_regular;
    results["natural_is_regular"] = is_transitive(natural) && is_regular_via_centralizer(natural);
    report.check("left_regular_is_regular", left_regular);
  } else {
    throw InvalidArgument("rigidity: unknown check '" + check + "' (biregular, centralizer, regular)");
  }
  return report.finish(results);
}

// ---- stability -------------------------------------------------------------

Json hom_json(const AlmostHom& sigma) {
  Json out = Json::array();
  for (ElementId g = 0; g < sigma.images.size(); ++g)
    if (sigma.defined_on(g)) out.push_back(sigma(g).to_cycle_string());
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

CommandResult cmd_stability(const RunConfig& config) {
  ReportBuilder report(config);
  const Rational window = rational_param(config.params, "window", 0);
  const std::string input = string_param(config.params, "input", "");
  Json results = {{"window", rat(window)}, {"constant", kStabilityConstant}};

  if (!input.empty()) {
    const auto sigma = parse_almost_hom(read_file(input));
    const auto d = uniform_defect(sigma);
    const auto near = report.timed("nearest_hom", [&] { return nearest_hom(sigma, window); });
    results["group"] = sigma.group().name();
    results["degree"] = sigma.degree;
    results["defect"] = {{"value", rat(d.defect)}, {"g", d.g}, {"h", d.h}, {"injectivity", rat(d.injectivity)}};
    results["nearest"] = {{"m", near.m},
                          {"padding", near.m - sigma.degree},
                          {"distance", rat(near.distance)},
                          {"ratio", near.ratio ? rat(*near.ratio) : Json(nullptr)},
                          {"candidates", near.candidates},
                          {"hom", hom_json(near.hom)}};
    report.check("within_bound", near.within_bound);
    report.check("zero_defect_iff_hom", (d.defect == 0) == (near.distance == 0));
    return report.finish(results);
  }

  const auto domain = make_domain(group_param(config.params, "group"));
  const std::size_t m = uint_param(config.params, "degree", 0);
  if (m == 0) throw InvalidArgument("stability: --degree is required for a sweep");
  const auto& g = domain->group;
  std::vector<Point> base(m);
  std::iota(base.begin(), base.end(), Point{0});
  std::vector<Permutation> sym;
  do sym.push_back(Permutation::from_images(base));
  while (std::next_permutation(base.begin(), base.end()));
  double total = 1;
  for (std::size_t i = 1; i < g.order(); ++i) total *= static_cast<double>(sym.size());
  const std::uint64_t sweep_cap = uint_param(config.params, "sweep_cap", 100'000);
  if (total > static_cast<double>(sweep_cap)) throw CapExceeded("stability: sweep exceeds sweep_cap maps");

  // Every map with identity at the identity, in lexicographic order.
  std::vector<std::size_t> idx(g.order(), 0);
  std::size_t maps = 0, homs = 0;
  bool all_within = true, zero_iff = true;
  std::optional<Rational> best_ratio;
  Rational worst_distance = 0;
  Json rows = Json::array();
  report.timed("sweep", [&] {
    while (true) {
      std::vector<Permutation> images;
      for (std::size_t i = 0; i < g.order(); ++i) images.push_back(sym[i == 0 ? 0 : idx[i]]);
      const auto sigma = make_almost_hom(domain, images);
      const auto near = nearest_hom(sigma, window);
      ++maps;
      if (near.defect == 0) ++homs;
      all_within = all_within && near.within_bound;
      zero_iff = zero_iff && ((near.defect == 0) == (near.distance == 0));
      worst_distance = std::max(worst_distance, near.distance);
      if (near.ratio && (!best_ratio || *near.ratio > *best_ratio)) best_ratio = near.ratio;
      rows.push_back({{"images", hom_json(sigma)},
                      {"defect", rat(near.defect)},
                      {"distance", rat(near.distance)},
                      {"m", near.m},
                      {"ratio", near.ratio ? rat(*near.ratio) : Json(nullptr)}});
      std::size_t i = 1;
      while (i < g.order() && ++idx[i] == sym.size()) idx[i++] = 0;
      if (i >= g.order()) break;
    }
  });
  results["group"] = g.name();
  results["degree"] = m;
  results["maps"] = maps;
  results["homs"] = homs;
  results["max_distance"] = rat(worst_distance);
  results["empirical_constant"] = best_ratio ? rat(*best_ratio) : Json(nullptr);
  results["rows"] = rows;
  report.check("within_bound", all_within);
  report.check("zero_defect_iff_hom", zero_iff);
  return report.finish(results);
}

// ---- corpus ----------------------------------------------------------------

CommandResult cmd_corpus_list(const RunConfig& config) {
  ReportBuilder report(config);
  Json groups = Json::array();
  for (const auto& spec : corpus_param(config.params)) {
    const auto g = construct_group(spec);
    groups.push_back({{"name", g.name()},
                      {"spec", to_string(spec)},
                      {"order", g.order()},
                      {"degree", g.degree()},
                      {"generators", g.generators().size()},
                      {"presentation", builtin_presentation(spec).has_value()}});
  }
  return report.finish({{"groups", groups}});
}

}  // namespace

std::string_view tool_version() { return SOFICLAB_VERSION; }

CommandResult execute(const RunConfig& config) {
  if (config.command == "verify") return cmd_verify(config);
  if (config.command == "primes") return cmd_primes(config);
  if (config.command == "schreier") return cmd_schreier(config);
  if (config.command == "rigidity") return cmd_rigidity(config);
  if (config.command == "stability") return cmd_stability(config);
  if (config.command == "corpus list") return cmd_corpus_list(config);
  throw InvalidArgument("unknown command '" + config.command + "'");
}

CommandResult run_command(const RunConfig& config) {
  try {
    return execute(config);
  } catch (const Error& e) {
    CommandResult out;
    out.exit_code = kExitUsage;
    out.report = {{"tool", "soficlab"}, {"version", tool_version()}, {"command", config.command},
                  {"seed", config.seed}, {"config", config.params},  {"error", e.what()}};
    return out;
  }
}

std::string render(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace soficlab::cli
