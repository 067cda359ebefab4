#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "soficlab/group.hpp"
#include "soficlab/group_spec.hpp"
#include "soficlab/permutation.hpp"
#include "soficlab/rational.hpp"

namespace soficlab {

/// A corpus group together with its presentation, when one is built in.
struct HomDomain {
  GroupSpec spec;
  FiniteGroupModel group;
  std::optional<Presentation> presentation;
};

std::shared_ptr<const HomDomain> make_domain(const GroupSpec& spec);

/// A map from (a subset of) a finite group into Sym(degree). images is
/// indexed by ElementId; entries outside `support` are unused.
struct AlmostHom {
  std::shared_ptr<const HomDomain> domain;
  std::size_t degree = 0;
  std::vector<Permutation> images;
  /// Declared domain; the whole group when empty.
  ElementSet support;

  const FiniteGroupModel& group() const { return domain->group; }
  const Permutation& operator()(ElementId g) const { return images[g]; }
  bool defined_on(ElementId g) const { return support.empty() || support.contains(g); }
};

/// Checks totality on the support and a single degree.
AlmostHom make_almost_hom(std::shared_ptr<const HomDomain> domain, std::vector<Permutation> images,
                          ElementSet support = {});

/// sigma ⊕ id on degree m >= sigma.degree.
AlmostHom padded(const AlmostHom& sigma, std::size_t m);

struct DefectReport {
  Rational defect;
  /// First pair (lexicographic) realizing the defect.
  ElementId g = 0;
  ElementId h = 0;
  /// min over g != h of d(sigma(g), sigma(h)); 1 for a single element.
  Rational injectivity;
  std::size_t padding = 0;
};

/// max over g, h in f of d(sigma(gh), sigma(g) sigma(h)). Throws
/// InvalidArgument when some gh leaves the declared domain.
Rational local_defect(const AlmostHom& sigma, const ElementSet& f);
Rational local_injectivity(const AlmostHom& sigma, const ElementSet& f);

DefectReport uniform_defect(const AlmostHom& sigma);

/// max over g of d(sigma(g), tau(g)).
Rational uniform_distance(const AlmostHom& sigma, const AlmostHom& tau);

struct HomLimits {
  std::size_t max_order = 24;
  std::size_t max_degree = 6;
  /// Bound on |G| * m! for domains without a presentation.
  std::size_t brute_force_budget = 1'000'000;
};

/// Every homomorphism into Sym(m), in lexicographic order of generator images.
/// Uses the presentation when there is one and a multiplication-table check
/// otherwise.
std::vector<AlmostHom> enumerate_homs(const std::shared_ptr<const HomDomain>& domain, std::size_t m,
                                      const HomLimits& limits = {});

inline constexpr std::int64_t kStabilityConstant = 2039;

struct NearestHom {
  AlmostHom hom;
  std::size_t m = 0;
  Rational distance;
  Rational defect;
  /// distance / defect, absent when the defect is 0.
  std::optional<Rational> ratio;
  /// distance <= 2039 * defect.
  bool within_bound = false;
  std::size_t candidates = 0;
};

/// Minimizes uniform_distance(sigma ⊕ id, pi) over homs pi into Sym(m) for
/// m in [n, ceil((1 + window) n)]; ties go to the smaller m, then to the
/// lexicographically first hom.
NearestHom nearest_hom(const AlmostHom& sigma, const Rational& window = 0, const HomLimits& limits = {});

/// Header lines `group: <spec>` and `degree: <n>`, then `element -> permutation`
/// lines. Elements are ElementIds or permutations in the group's own action.
AlmostHom parse_almost_hom(std::string_view text);
std::string to_string(const AlmostHom& sigma);

}  // namespace soficlab
