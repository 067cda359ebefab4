#include "soficlab/schreier.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "soficlab/errors.hpp"
#include "soficlab/group_spec.hpp"

namespace soficlab {

namespace {

constexpr Point kUnset = static_cast<Point>(-1);

bool is_involution(const Permutation& p) {
  for (Point i = 0; i < p.degree(); ++i)
    if (p(p(i)) != i) return false;
  return true;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

std::vector<std::vector<std::uint32_t>> adjacency_counts(const LabeledSchreierGraph& g) {
  std::vector<std::vector<std::uint32_t>> a(g.n, std::vector<std::uint32_t>(g.n, 0));
  for (const auto& s : g.images) {
    const bool once = is_involution(s);
    for (Point u = 0; u < g.n; ++u) {
      ++a[u][s(u)];
      if (!once) ++a[s(u)][u];
    }
  }
  return a;
}

std::vector<std::vector<Point>> inverse_images(const LabeledSchreierGraph& g) {
  std::vector<std::vector<Point>> out;
  for (const auto& s : g.images) {
    const auto inv = s.inverse();
    out.emplace_back(inv.images().begin(), inv.images().end());
  }
  return out;
}

// Hill climbing on the number of preserved labeled edges, moving by
// transpositions of images and accepting non-worsening moves.
class LocalSearch {
 public:
  LocalSearch(const LabeledSchreierGraph& g, std::uint64_t seed) : g_(g), inv_(inverse_images(g)), rng_(seed) {}

  std::vector<Permutation> run(const Rational& eps, std::size_t restarts, std::size_t steps) {
    std::vector<Permutation> found;
    const std::size_t n = g_.n;
    const std::size_t total = g_.edge_count();
    const Rational need = (1 - eps) * static_cast<std::int64_t>(total);
    const auto target = static_cast<std::size_t>((need.numerator() + need.denominator() - 1) / need.denominator());
    for (std::size_t r = 0; r < restarts; ++r) {
      rho_.resize(n);
      std::iota(rho_.begin(), rho_.end(), Point{0});
      for (std::size_t i = n; i > 1; --i) std::swap(rho_[i - 1], rho_[pick(i)]);
      std::size_t good = count_all();
      for (std::size_t step = 0; step < steps && good < target; ++step) {
        if (n < 2) break;
        const Point a = static_cast<Point>(pick(n));
        Point b = static_cast<Point>(pick(n - 1));
        if (b >= a) ++b;
        const std::size_t before = count_around(a, b);
        std::swap(rho_[a], rho_[b]);
        const std::size_t after = count_around(a, b);
        if (after < before) std::swap(rho_[a], rho_[b]);
        else good = good + after - before;
      }
      const auto p = Permutation::from_images(rho_);
      if (epsilon_defect(g_, p) <= eps) found.push_back(p);
    }
    return found;
  }

 private:
  std::size_t pick(std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_); }

  bool good(std::size_t s, Point v) const { return rho_[g_.images[s](v)] == g_.images[s](rho_[v]); }

  std::size_t count_all() const {
    std::size_t c = 0;
    for (std::size_t s = 0; s < g_.images.size(); ++s)
      for (Point v = 0; v < g_.n; ++v) c += good(s, v);
    return c;
  }

  std::size_t count_around(Point a, Point b) {
    std::size_t c = 0;
    for (std::size_t s = 0; s < g_.images.size(); ++s) {
      Point vs[4] = {a, b, inv_[s][a], inv_[s][b]};
      std::sort(vs, vs + 4);
      const auto end = std::unique(vs, vs + 4);
      for (auto* v = vs; v != end; ++v) c += good(s, *v);
    }
    return c;
  }

  const LabeledSchreierGraph& g_;
  std::vector<std::vector<Point>> inv_;
  std::mt19937_64 rng_;
  std::vector<Point> rho_;
};

class AutomorphismSearch {
 public:
  AutomorphismSearch(const LabeledSchreierGraph& g, std::size_t max_results)
      : g_(g), inv_(inverse_images(g)), max_results_(max_results), rho_(g.n, kUnset), used_(g.n, 0) {}

  std::vector<Permutation> run() {
    extend(0);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void extend(Point from) {
    while (from < g_.n && rho_[from] != kUnset) ++from;
    if (from == g_.n) {
      if (out_.size() >= max_results_)
        throw CapExceeded("more than " + std::to_string(max_results_) + " exact automorphisms");
      out_.push_back(Permutation::from_images(rho_));
      return;
    }
    for (Point x = 0; x < g_.n; ++x) {
      if (used_[x]) continue;
      const std::size_t mark = trail_.size();
      if (assign(from, x)) extend(from + 1);
      undo(mark);
    }
  }

  bool set(Point v, Point x) {
    if (rho_[v] != kUnset) return rho_[v] == x;
    if (used_[x]) return false;
    rho_[v] = x;
    used_[x] = 1;
    trail_.push_back(v);
    return true;
  }

  bool assign(Point v, Point x) {
    std::size_t head = trail_.size();
    if (!set(v, x)) return false;
    for (; head < trail_.size(); ++head) {
      const Point u = trail_[head];
      for (std::size_t s = 0; s < g_.images.size(); ++s) {
        if (!set(g_.images[s](u), g_.images[s](rho_[u]))) return false;
        if (!set(inv_[s][u], inv_[s][rho_[u]])) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Point v = trail_.back();
      trail_.pop_back();
      used_[rho_[v]] = 0;
      rho_[v] = kUnset;
    }
  }

  const LabeledSchreierGraph& g_;
  std::vector<std::vector<Point>> inv_;
  std::size_t max_results_;
  std::vector<Point> rho_;
  std::vector<char> used_;
  std::vector<Point> trail_;
  std::vector<Permutation> out_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t parse_count(const std::string& token, std::size_t line, std::size_t col) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("expected a positive integer, got '" + token + "'", line, col);
  return std::stoull(token);
}

}  // namespace

std::size_t LabeledSchreierGraph::symmetrized_degree() const {
  std::size_t d = 0;
  for (const auto& s : images) d += is_involution(s) ? 1 : 2;
  return d;
}

LabeledSchreierGraph build_schreier_graph(const std::vector<std::pair<std::string, Permutation>>& images) {
  if (images.empty()) throw InvalidArgument("a Schreier graph needs at least one label");
  LabeledSchreierGraph g;
  g.n = images.front().second.degree();
  std::set<std::string> seen;
  for (const auto& [label, p] : images) {
    if (p.degree() != g.n) throw DegreeMismatch(g.n, p.degree());
    if (label.empty()) throw InvalidArgument("empty label");
    if (!seen.insert(label).second) throw InvalidArgument("duplicate label '" + label + "'");
    g.labels.push_back(label);
    g.images.push_back(p);
  }
  return g;
}

LabeledSchreierGraph regular_schreier_graph(const FiniteGroupModel& g) {
  std::vector<std::pair<std::string, Permutation>> images;
  for (std::size_t k = 0; k < g.generators().size(); ++k) {
    std::vector<Point> img(g.order());
    for (ElementId x = 0; x < g.order(); ++x) img[x] = g.mul(g.generators()[k], x);
    images.emplace_back("g" + std::to_string(k + 1), Permutation::from_images(std::move(img)));
  }
  if (images.empty()) images.emplace_back("g1", Permutation::identity(g.order()));
  return build_schreier_graph(images);
}

LabeledSchreierGraph natural_schreier_graph(const FiniteGroupModel& g) {
  std::vector<std::pair<std::string, Permutation>> images;
  for (std::size_t k = 0; k < g.generators().size(); ++k)
    images.emplace_back("g" + std::to_string(k + 1), g.element(g.generators()[k]));
  if (images.empty()) images.emplace_back("g1", Permutation::identity(g.degree()));
  return build_schreier_graph(images);
}

LabeledSchreierGraph graph_from_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw InvalidArgument("graph spec needs a kind prefix: '" + std::string(spec) + "'");
  const std::string kind(spec.substr(0, colon));
  const std::string rest(spec.substr(colon + 1));
  if (kind == "regular") return regular_schreier_graph(construct_group(parse_group_spec(rest)));
  if (kind == "natural") return natural_schreier_graph(construct_group(parse_group_spec(rest)));
  if (kind == "file") return parse_edge_list(read_file(rest));
  throw InvalidArgument("unknown graph kind '" + kind + "'");
}

std::string write_edge_list(const LabeledSchreierGraph& g) {
  std::string out = "n=" + std::to_string(g.n) + " labels=";
  for (std::size_t s = 0; s < g.labels.size(); ++s) out += (s ? "," : "") + g.labels[s];
  out += '\n';
  for (std::size_t s = 0; s < g.labels.size(); ++s)
    for (Point i = 0; i < g.n; ++i)
      out += std::to_string(i + 1) + ' ' + g.labels[s] + ' ' + std::to_string(g.images[s](i) + 1) + '\n';
  return out;
}

LabeledSchreierGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::size_t n = 0;
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> label_index;
  std::vector<std::vector<Point>> images;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (!have_header) {
      if (tokens.size() != 2 || tokens[0].rfind("n=", 0) != 0 || tokens[1].rfind("labels=", 0) != 0)
        throw ParseError("expected header 'n=<int> labels=<a,b,...>'", lineno, 1);
      n = parse_count(tokens[0].substr(2), lineno, 3);
      if (n == 0) throw ParseError("n must be positive", lineno, 3);
      std::string label;
      std::istringstream ls(tokens[1].substr(7));
      while (std::getline(ls, label, ',')) {
        if (label.empty() || !label_index.emplace(label, labels.size()).second)
          throw ParseError("empty or duplicate label", lineno, line.find("labels=") + 8);
        labels.push_back(label);
      }
      if (labels.empty()) throw ParseError("no labels", lineno, line.find("labels=") + 8);
      images.assign(labels.size(), std::vector<Point>(n, kUnset));
      have_header = true;
      continue;
    }
    if (tokens.size() != 3) throw ParseError("expected 'i s j'", lineno, 1);
    const std::size_t i = parse_count(tokens[0], lineno, 1);
    const auto it = label_index.find(tokens[1]);
    if (it == label_index.end()) throw ParseError("unknown label '" + tokens[1] + "'", lineno, line.find(tokens[1]) + 1);
    const std::size_t j = parse_count(tokens[2], lineno, line.rfind(tokens[2]) + 1);
    if (i < 1 || i > n || j < 1 || j > n) throw ParseError("vertex out of range", lineno, 1);
    auto& slot = images[it->second][i - 1];
    if (slot != kUnset) throw ParseError("second edge from the same vertex and label", lineno, 1);
    slot = static_cast<Point>(j - 1);
  }
  if (!have_header) throw ParseError("missing header", lineno + 1, 1);
  std::vector<std::pair<std::string, Permutation>> out;
  for (std::size_t s = 0; s < labels.size(); ++s) {
    if (std::count(images[s].begin(), images[s].end(), kUnset))
      throw ParseError("label '" + labels[s] + "' is missing edges", lineno, 1);
    try {
      out.emplace_back(labels[s], Permutation::from_images(images[s]));
    } catch (const InvalidArgument&) {
      throw ParseError("label '" + labels[s] + "' is not a bijection", lineno, 1);
    }
  }
  return build_schreier_graph(out);
}

std::vector<std::vector<Point>> components(const LabeledSchreierGraph& g) {
  UnionFind uf(g.n);
  for (const auto& s : g.images)
    for (Point u = 0; u < g.n; ++u) uf.unite(u, s(u));
  std::map<std::size_t, std::vector<Point>> by_root;
  for (Point u = 0; u < g.n; ++u) by_root[uf.find(u)].push_back(u);
  std::vector<std::vector<Point>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  return out;
}

std::vector<Rational> component_mass_profile(const LabeledSchreierGraph& g) {
  std::vector<Rational> out;
  for (const auto& c : components(g))
    out.emplace_back(static_cast<std::int64_t>(c.size()), static_cast<std::int64_t>(g.n));
  std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) { return b < a; });
  return out;
}

Rational edge_expansion(const LabeledSchreierGraph& g, std::size_t cap) {
  const std::size_t n = g.n;
  if (n > cap) throw CapExceeded("edge expansion enumerates subsets only up to n = " + std::to_string(cap));
  if (n <= 1) return 1;
  const auto a = adjacency_counts(g);
  const auto d = static_cast<std::uint64_t>(g.symmetrized_degree());
  std::vector<std::int64_t> rowsum(n, 0), inside(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v) rowsum[u] += a[u][v];
  std::vector<char> in_a(n, 0);
  std::int64_t boundary = 0;
  std::size_t size = 0;
  std::uint64_t best_num = 1, best_den = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto v = static_cast<std::size_t>(std::countr_zero(i));
    if (!in_a[v]) {
      boundary += rowsum[v] - 2 * inside[v];
      for (std::size_t w = 0; w < n; ++w)
        if (w != v) inside[w] += a[w][v];
      in_a[v] = 1;
      ++size;
    } else {
      for (std::size_t w = 0; w < n; ++w)
        if (w != v) inside[w] -= a[w][v];
      boundary -= rowsum[v] - 2 * inside[v];
      in_a[v] = 0;
      --size;
    }
    if (size == 0 || 2 * size > n) continue;
    const auto num = static_cast<std::uint64_t>(boundary);
    const std::uint64_t den = d * size;
    if (best_den == 0 || num * best_den < best_num * den) {
      best_num = num;
      best_den = den;
    }
  }
  return Rational(static_cast<std::int64_t>(best_num), static_cast<std::int64_t>(best_den));
}

std::vector<double> adjacency_spectrum(const LabeledSchreierGraph& g, std::size_t cap) {
  if (g.n > cap) throw CapExceeded("dense eigensolve is capped at n = " + std::to_string(cap));
  const auto a = adjacency_counts(g);
  Eigen::MatrixXd m(g.n, g.n);
  for (std::size_t u = 0; u < g.n; ++u)
    for (std::size_t v = 0; v < g.n; ++v) m(u, v) = a[u][v];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + g.n);
  std::reverse(out.begin(), out.end());
  return out;
}

double spectral_gap(const LabeledSchreierGraph& g, std::size_t cap) {
  if (g.n <= 1) return 1.0;
  const auto spectrum = adjacency_spectrum(g, cap);
  const double gap = 1.0 - spectrum[1] / static_cast<double>(g.symmetrized_degree());
  return std::abs(gap) < 1e-12 ? 0.0 : gap;
}

std::size_t preserved_edges(const LabeledSchreierGraph& g, const Permutation& rho) {
  if (rho.degree() != g.n) throw DegreeMismatch(g.n, rho.degree());
  std::size_t c = 0;
  for (const auto& s : g.images)
    for (Point i = 0; i < g.n; ++i) c += s(rho(i)) == rho(s(i));
  return c;
}

Rational epsilon_defect(const LabeledSchreierGraph& g, const Permutation& rho) {
  const auto total = static_cast<std::int64_t>(g.edge_count());
  if (total == 0) return 0;
  return 1 - Rational(static_cast<std::int64_t>(preserved_edges(g, rho)), total);
}

bool is_epsilon_automorphism(const LabeledSchreierGraph& g, const Permutation& rho, const Rational& eps) {
  return epsilon_defect(g, rho) <= eps;
}

std::string to_string(AutoSearchMode mode) {
  switch (mode) {
    case AutoSearchMode::Exhaustive: return "exhaustive";
    case AutoSearchMode::LocalSearch: return "local-search";
    case AutoSearchMode::Backtracking: return "backtracking";
  }
  return "?";
}

AutoSearchMode parse_auto_search_mode(std::string_view text) {
  if (text == "exhaustive") return AutoSearchMode::Exhaustive;
  if (text == "local-search") return AutoSearchMode::LocalSearch;
  if (text == "backtracking" || text == "exact-autos") return AutoSearchMode::Backtracking;
  throw InvalidArgument("unknown search mode '" + std::string(text) + "'");
}

std::vector<Permutation> exact_automorphisms(const LabeledSchreierGraph& g, std::size_t max_results) {
  return AutomorphismSearch(g, max_results).run();
}

std::vector<Permutation> enumerate_eps_automorphisms(const LabeledSchreierGraph& g, const Rational& eps,
                                                     AutoSearchMode mode, const AutoSearchOptions& options) {
  if (eps < 0 || eps > 1) throw InvalidArgument("eps must lie in [0, 1]");
  switch (mode) {
    case AutoSearchMode::Exhaustive: {
      if (g.n > options.exhaustive_cap)
        throw CapExceeded("exhaustive search is capped at n = " + std::to_string(options.exhaustive_cap));
      std::vector<Point> img(g.n);
      std::iota(img.begin(), img.end(), Point{0});
      std::vector<Permutation> out;
      do {
        auto p = Permutation::from_images(img);
        if (epsilon_defect(g, p) <= eps) out.push_back(std::move(p));
      } while (std::next_permutation(img.begin(), img.end()));
      return out;
    }
    case AutoSearchMode::Backtracking:
      if (eps != 0) throw InvalidArgument("backtracking finds exact automorphisms only; use eps = 0");
      return exact_automorphisms(g, options.max_results);
    case AutoSearchMode::LocalSearch: {
      auto out = exact_automorphisms(g, options.max_results);
      auto sampled = LocalSearch(g, options.seed).run(eps, options.restarts, options.steps);
      out.insert(out.end(), sampled.begin(), sampled.end());
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
  }
  return {};
}

std::size_t ClusterScan::pair_count() const {
  const std::size_t m = automorphisms.size();
  return m * (m - 1) / 2;
}

ClusterScan cluster_scan(std::vector<Permutation> autos, const LabeledSchreierGraph& g, const Rational& eps,
                         const Rational& threshold) {
  if (autos.size() < 2) throw InvalidArgument("cluster scan needs at least two automorphisms");
  for (const auto& p : autos)
    if (p.degree() != g.n) throw DegreeMismatch(g.n, p.degree());
  std::sort(autos.begin(), autos.end());
  ClusterScan scan;
  scan.epsilon = eps;
  scan.threshold = threshold;
  const std::size_t m = autos.size();
  UnionFind uf(m);
  std::map<Rational, std::size_t> bins;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const Rational d = hamming_distance(autos[i], autos[j]);
      ++bins[d];
      if (d <= threshold) uf.unite(i, j);
    }
  for (const auto& [d, count] : bins) scan.histogram.push_back({d, count});

  std::set<Rational> marks = {Rational(0), Rational(1)};
  for (const auto& [d, count] : bins) marks.insert(d);
  scan.gap_low = scan.gap_high = 0;
  for (auto it = marks.begin(); std::next(it) != marks.end(); ++it)
    if (*std::next(it) - *it > scan.gap_high - scan.gap_low) {
      scan.gap_low = *it;
      scan.gap_high = *std::next(it);
    }

  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < m; ++i) by_root[uf.find(i)].push_back(i);
  for (auto& [root, members] : by_root) scan.clusters.push_back(std::move(members));
  for (std::size_t a = 0; a < scan.clusters.size(); ++a)
    for (std::size_t b = 0; b < scan.clusters.size(); ++b)
      scan.probes.push_back(
          {a, b, epsilon_defect(g, autos[scan.clusters[a].front()] * autos[scan.clusters[b].front()])});
  scan.automorphisms = std::move(autos);
  return scan;
}

std::string histogram_csv(const ClusterScan& scan) {
  std::string out = "numerator,denominator,count\n";
  for (const auto& bin : scan.histogram)
    out += std::to_string(bin.distance.numerator()) + ',' + std::to_string(bin.distance.denominator()) + ',' +
           std::to_string(bin.count) + '\n';
  return out;
}

}  // namespace soficlab
