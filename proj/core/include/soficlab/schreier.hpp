#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "soficlab/group.hpp"
#include "soficlab/permutation.hpp"
#include "soficlab/rational.hpp"

namespace soficlab {

/// Vertices 0..n-1 and, for every label s, the directed edges i -> images[s](i).
struct LabeledSchreierGraph {
  std::size_t n = 0;
  std::vector<std::string> labels;
  std::vector<Permutation> images;

  std::size_t edge_count() const noexcept { return n * labels.size(); }
  /// Sum over labels of 1 for an involution (or the identity), else 2.
  std::size_t symmetrized_degree() const;
};

/// Labels keep the given order. Throws InvalidArgument on an empty or
/// duplicated label set, DegreeMismatch on unequal degrees.
LabeledSchreierGraph build_schreier_graph(const std::vector<std::pair<std::string, Permutation>>& images);

/// Vertex x is element x of g; label gk sends x to (generator k) * x.
LabeledSchreierGraph regular_schreier_graph(const FiniteGroupModel& g);
/// The generators acting on the points of g.
LabeledSchreierGraph natural_schreier_graph(const FiniteGroupModel& g);

/// `regular:<group>`, `natural:<group>` or `file:<path>` (edge-list format).
LabeledSchreierGraph graph_from_spec(std::string_view spec);

/// Header `n=<int> labels=<a,b,...>` then one `i s j` line per edge, 1-based.
std::string write_edge_list(const LabeledSchreierGraph& g);
LabeledSchreierGraph parse_edge_list(std::string_view text);

/// Weakly connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Point>> components(const LabeledSchreierGraph& g);
/// |component| / n, descending.
std::vector<Rational> component_mass_profile(const LabeledSchreierGraph& g);

inline constexpr std::size_t kExpansionCap = 24;
inline constexpr std::size_t kSpectrumCap = 2000;

/// min over nonempty A with |A| <= n/2 of |boundary(A)| / (deg |A|) on the
/// symmetrized multigraph, by Gray-code enumeration of all subsets. A single
/// vertex has expansion 1 by convention.
Rational edge_expansion(const LabeledSchreierGraph& g, std::size_t cap = kExpansionCap);

/// Eigenvalues of the symmetrized adjacency matrix, descending. Loops from a
/// label count once per label and direction.
std::vector<double> adjacency_spectrum(const LabeledSchreierGraph& g, std::size_t cap = kSpectrumCap);
/// 1 - lambda_2 / deg. A single vertex has gap 1 by convention.
double spectral_gap(const LabeledSchreierGraph& g, std::size_t cap = kSpectrumCap);

/// Labeled edges (i, s, j) whose image (rho(i), s, rho(j)) is again an edge.
std::size_t preserved_edges(const LabeledSchreierGraph& g, const Permutation& rho);
/// 1 - preserved / |E|.
Rational epsilon_defect(const LabeledSchreierGraph& g, const Permutation& rho);
bool is_epsilon_automorphism(const LabeledSchreierGraph& g, const Permutation& rho, const Rational& eps);

enum class AutoSearchMode { Exhaustive, LocalSearch, Backtracking };

std::string to_string(AutoSearchMode mode);
AutoSearchMode parse_auto_search_mode(std::string_view text);

struct AutoSearchOptions {
  std::uint64_t seed = 1;
  std::size_t restarts = 32;
  std::size_t steps = 4000;
  std::size_t exhaustive_cap = 8;
  /// Backtracking stops with CapExceeded once it has this many automorphisms.
  std::size_t max_results = 100'000;
};

/// Exhaustive: every rho in Sym(n) with defect <= eps (n <= exhaustive_cap).
/// Backtracking: the exact automorphisms, eps must be 0.
/// LocalSearch: hill climbing from seeded random starts plus the exact
/// automorphisms. Results are sorted and distinct.
std::vector<Permutation> enumerate_eps_automorphisms(const LabeledSchreierGraph& g, const Rational& eps,
                                                     AutoSearchMode mode, const AutoSearchOptions& options = {});

/// Label-respecting automorphisms by backtracking with forced propagation
/// along the edges, sorted.
std::vector<Permutation> exact_automorphisms(const LabeledSchreierGraph& g, std::size_t max_results = 100'000);

struct DistanceBin {
  Rational distance;
  std::size_t count = 0;
};

struct ProductProbe {
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  /// Defect of rep(lhs) * rep(rhs).
  Rational defect;
};

struct ClusterScan {
  Rational epsilon;
  Rational threshold;
  std::vector<Permutation> automorphisms;
  /// Over unordered pairs, ascending distance.
  std::vector<DistanceBin> histogram;
  /// Indices into automorphisms, each sorted; ordered by smallest index.
  std::vector<std::vector<std::size_t>> clusters;
  /// Widest open interval of [0, 1] containing no observed pairwise distance.
  Rational gap_low;
  Rational gap_high;
  /// One probe per ordered pair of clusters, representatives being the first members.
  std::vector<ProductProbe> probes;

  std::size_t pair_count() const;
};

inline const Rational kClusterThreshold{3, 10};

/// Sorts the input, then clusters by the transitive closure of distance <= threshold.
ClusterScan cluster_scan(std::vector<Permutation> autos, const LabeledSchreierGraph& g, const Rational& eps = 0,
                         const Rational& threshold = kClusterThreshold);

/// `numerator,denominator,count` rows after a header line.
std::string histogram_csv(const ClusterScan& scan);

}  // namespace soficlab
