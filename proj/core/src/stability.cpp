#include "soficlab/stability.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "soficlab/errors.hpp"
#include "soficlab/word.hpp"

namespace soficlab {

namespace {

void collect_symbols(const Word& w, std::set<std::string>& out) {
  switch (w.kind()) {
    case Word::Kind::Symbol: out.insert(w.name()); return;
    case Word::Kind::Identity: return;
    case Word::Kind::Inverse: collect_symbols(w.lhs(), out); return;
    case Word::Kind::Product:
    case Word::Kind::Commutator:
      collect_symbols(w.lhs(), out);
      collect_symbols(w.rhs(), out);
      return;
  }
}

std::vector<Permutation> all_permutations(std::size_t m) {
  std::vector<Point> img(m);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<Permutation> out;
  do out.push_back(Permutation::from_images(img));
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::uint64_t factorial(std::size_t m) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= m; ++k) f *= k;
  return f;
}

// Extends generator images along the breadth-first element order; nullopt
// when the extension is inconsistent, i.e. the images define no hom.
std::optional<std::vector<Permutation>> extend_to_group(const FiniteGroupModel& g,
                                                        const std::vector<Permutation>& gen_images, std::size_t m) {
  std::vector<std::optional<Permutation>> img(g.order());
  img[FiniteGroupModel::identity()] = Permutation::identity(m);
  std::vector<ElementId> queue = {FiniteGroupModel::identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const ElementId x = queue[head];
    for (std::size_t k = 0; k < gen_images.size(); ++k) {
      const ElementId y = g.mul(x, g.generators()[k]);
      Permutation p = *img[x] * gen_images[k];
      if (!img[y]) {
        img[y] = std::move(p);
        queue.push_back(y);
      } else if (*img[y] != p) {
        return std::nullopt;
      }
    }
  }
  std::vector<Permutation> out;
  out.reserve(g.order());
  for (auto& p : img) out.push_back(std::move(*p));
  return out;
}

void require_total(const AlmostHom& sigma, const char* what) {
  if (!sigma.support.empty() && sigma.support.size() != sigma.group().order())
    throw InvalidArgument(std::string(what) + " needs a map defined on the whole group");
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::shared_ptr<const HomDomain> make_domain(const GroupSpec& spec) {
  auto group = construct_group(spec);
  auto presentation = builtin_presentation(spec);
  if (presentation && presentation->symbols.size() != group.generators().size()) presentation.reset();
  return std::make_shared<const HomDomain>(HomDomain{spec, std::move(group), std::move(presentation)});
}

AlmostHom make_almost_hom(std::shared_ptr<const HomDomain> domain, std::vector<Permutation> images,
                          ElementSet support) {
  if (!domain) throw InvalidArgument("almost hom without a domain");
  if (images.size() != domain->group.order())
    throw InvalidArgument("expected one image per group element (" + std::to_string(domain->group.order()) + ")");
  AlmostHom sigma;
  sigma.domain = std::move(domain);
  sigma.support = std::move(support);
  std::optional<std::size_t> degree;
  for (ElementId g = 0; g < images.size(); ++g) {
    if (!sigma.defined_on(g)) continue;
    if (!degree) degree = images[g].degree();
    if (images[g].degree() != *degree) throw DegreeMismatch(*degree, images[g].degree());
  }
  sigma.degree = degree.value_or(0);
  for (ElementId g = 0; g < images.size(); ++g)
    if (!sigma.defined_on(g)) images[g] = Permutation::identity(sigma.degree);
  sigma.images = std::move(images);
  return sigma;
}

AlmostHom padded(const AlmostHom& sigma, std::size_t m) {
  if (m < sigma.degree) throw InvalidArgument("padding cannot shrink the degree");
  AlmostHom out = sigma;
  out.degree = m;
  for (auto& p : out.images) p = p.padded(m);
  return out;
}

Rational local_defect(const AlmostHom& sigma, const ElementSet& f) {
  const auto& g = sigma.group();
  Rational worst = 0;
  for (ElementId a : f) {
    if (!sigma.defined_on(a)) throw InvalidArgument("element outside the declared domain");
    for (ElementId b : f) {
      const ElementId ab = g.mul(a, b);
      if (!sigma.defined_on(ab)) throw InvalidArgument("product escapes the declared domain");
      worst = std::max(worst, hamming_distance(sigma(ab), sigma(a) * sigma(b)));
    }
  }
  return worst;
}

Rational local_injectivity(const AlmostHom& sigma, const ElementSet& f) {
  Rational best = 1;
  for (ElementId a : f)
    for (ElementId b : f)
      if (a < b) best = std::min(best, hamming_distance(sigma(a), sigma(b)));
  return best;
}

DefectReport uniform_defect(const AlmostHom& sigma) {
  require_total(sigma, "uniform defect");
  const auto& g = sigma.group();
  DefectReport r;
  r.defect = 0;
  for (ElementId a = 0; a < g.order(); ++a)
    for (ElementId b = 0; b < g.order(); ++b) {
      const Rational d = hamming_distance(sigma(g.mul(a, b)), sigma(a) * sigma(b));
      if (d > r.defect) {
        r.defect = d;
        r.g = a;
        r.h = b;
      }
    }
  r.injectivity = local_injectivity(sigma, g.all());
  return r;
}

Rational uniform_distance(const AlmostHom& sigma, const AlmostHom& tau) {
  require_total(sigma, "uniform distance");
  require_total(tau, "uniform distance");
  if (sigma.domain != tau.domain && !(sigma.domain->spec == tau.domain->spec))
    throw InvalidArgument("almost homs on different domains");
  if (sigma.degree != tau.degree) throw DegreeMismatch(sigma.degree, tau.degree);
  Rational worst = 0;
  for (ElementId g = 0; g < sigma.images.size(); ++g) worst = std::max(worst, hamming_distance(sigma(g), tau(g)));
  return worst;
}

std::vector<AlmostHom> enumerate_homs(const std::shared_ptr<const HomDomain>& domain, std::size_t m,
                                      const HomLimits& limits) {
  const auto& g = domain->group;
  if (g.order() > limits.max_order)
    throw CapExceeded("hom enumeration is capped at |G| = " + std::to_string(limits.max_order));
  if (m > limits.max_degree || m == 0)
    throw CapExceeded("hom enumeration targets Sym(m) with 1 <= m <= " + std::to_string(limits.max_degree));
  const auto& presentation = domain->presentation;
  if (!presentation && g.order() * factorial(m) > limits.brute_force_budget)
    throw CapExceeded("|G| * m! exceeds the brute-force budget");

  const auto sym = all_permutations(m);
  const std::size_t k = g.generators().size();
  // Relators become checkable once all their symbols are assigned.
  std::vector<std::vector<std::size_t>> ready(k + 1);
  if (presentation) {
    for (std::size_t r = 0; r < presentation->relators.size(); ++r) {
      std::set<std::string> used;
      collect_symbols(presentation->relators[r], used);
      std::size_t depth = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (used.count(presentation->symbols[i])) depth = i + 1;
      ready[depth].push_back(r);
    }
  }
  std::vector<std::vector<const Permutation*>> candidates(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t order = g.element_order(g.generators()[i]);
    for (const auto& p : sym)
      if (order % p.order() == 0) candidates[i].push_back(&p);
  }

  std::vector<AlmostHom> out;
  std::vector<Permutation> chosen;
  Assignment assignment;
  const Permutation id = Permutation::identity(m);
  auto relators_hold = [&](std::size_t depth) {
    for (std::size_t r : ready[depth])
      if (evaluate_word(presentation->relators[r], assignment) != id) return false;
    return true;
  };
  auto search = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      auto images = extend_to_group(g, chosen, m);
      if (!images) {
        if (presentation) throw Error("built-in presentation does not match " + g.name());
        return;
      }
      out.push_back(make_almost_hom(domain, std::move(*images)));
      return;
    }
    for (const Permutation* p : candidates[i]) {
      chosen.push_back(*p);
      if (presentation) assignment.insert_or_assign(presentation->symbols[i], *p);
      if (!presentation || relators_hold(i + 1)) self(self, i + 1);
      chosen.pop_back();
    }
  };
  if (presentation && !ready[0].empty() && !relators_hold(0)) return out;
  search(search, 0);
  return out;
}

NearestHom nearest_hom(const AlmostHom& sigma, const Rational& window, const HomLimits& limits) {
  require_total(sigma, "nearest hom search");
  if (window < 0) throw InvalidArgument("window must be non-negative");
  const std::size_t n = sigma.degree;
  const Rational top = (1 + window) * static_cast<std::int64_t>(n);
  const auto m_max = static_cast<std::size_t>((top.numerator() + top.denominator() - 1) / top.denominator());
  std::optional<NearestHom> best;
  std::size_t candidates = 0;
  for (std::size_t m = std::max<std::size_t>(n, 1); m <= m_max; ++m) {
    const AlmostHom wide = padded(sigma, m);
    for (auto& pi : enumerate_homs(sigma.domain, m, limits)) {
      ++candidates;
      const Rational d = uniform_distance(wide, pi);
      if (!best || d < best->distance) {
        best.emplace();
        best->hom = std::move(pi);
        best->m = m;
        best->distance = d;
      }
    }
  }
  if (!best) throw InvalidArgument("no homomorphism found in the window");
  best->candidates = candidates;
  best->defect = uniform_defect(sigma).defect;
  if (best->defect > 0) best->ratio = best->distance / best->defect;
  best->within_bound = best->distance <= best->defect * kStabilityConstant;
  return *best;
}

AlmostHom parse_almost_hom(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::shared_ptr<const HomDomain> domain;
  std::optional<std::size_t> degree;
  std::vector<std::optional<Permutation>> images;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) {
      const auto colon = line.find(':');
      if (colon == std::string::npos) throw ParseError("expected 'key: value' or 'element -> permutation'", lineno, 1);
      const std::string key = trim(line.substr(0, colon));
      const std::string value = trim(line.substr(colon + 1));
      try {
        if (key == "group") {
          domain = make_domain(parse_group_spec(value));
          images.assign(domain->group.order(), std::nullopt);
        } else if (key == "degree") {
          if (value.empty() || !std::all_of(value.begin(), value.end(), ::isdigit))
            throw ParseError("degree must be a positive integer", lineno, colon + 2);
          degree = std::stoull(value);
        } else {
          throw ParseError("unknown key '" + key + "'", lineno, 1);
        }
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(e.what(), lineno, colon + 2);
      }
      continue;
    }
    if (!domain || !degree) throw ParseError("'group:' and 'degree:' must precede the images", lineno, 1);
    const std::string lhs = trim(line.substr(0, arrow));
    const std::string rhs = trim(line.substr(arrow + 2));
    ElementId element = 0;
    try {
      if (!lhs.empty() && std::all_of(lhs.begin(), lhs.end(), ::isdigit)) {
        const auto id = std::stoull(lhs);
        if (id >= domain->group.order()) throw InvalidArgument("element index out of range");
        element = static_cast<ElementId>(id);
      } else {
        element = domain->group.index_of(parse_permutation(lhs, domain->group.degree()));
      }
    } catch (const Error& e) {
      throw ParseError(e.what(), lineno, 1);
    }
    if (images[element]) throw ParseError("element given twice", lineno, 1);
    try {
      images[element] = parse_permutation(rhs, *degree);
    } catch (const Error& e) {
      throw ParseError(e.what(), lineno, arrow + 3);
    }
  }
  if (!domain || !degree) throw ParseError("missing 'group:' or 'degree:'", lineno + 1, 1);
  std::vector<ElementId> listed;
  std::vector<Permutation> full;
  for (ElementId g = 0; g < images.size(); ++g) {
    if (images[g]) listed.push_back(g);
    full.push_back(images[g].value_or(Permutation::identity(*degree)));
  }
  if (listed.empty()) throw ParseError("no images given", lineno + 1, 1);
  ElementSet support = listed.size() == images.size() ? ElementSet{} : ElementSet::from_sorted(listed);
  return make_almost_hom(domain, std::move(full), std::move(support));
}

std::string to_string(const AlmostHom& sigma) {
  std::string out = "group: " + to_string(sigma.domain->spec) + "\ndegree: " + std::to_string(sigma.degree) + "\n";
  for (ElementId g = 0; g < sigma.images.size(); ++g)
    if (sigma.defined_on(g)) out += std::to_string(g) + " -> " + sigma(g).to_cycle_string() + "\n";
  return out;
}

}  // namespace soficlab
