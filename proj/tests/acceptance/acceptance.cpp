// Acceptance suite: one PASS/FAIL line per criterion, each checked against
// brute-force oracles from tests/support. Exits non-zero when any fails.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "oracles.hpp"
#include "soficlab/arithmetic.hpp"
#include "soficlab/group_spec.hpp"
#include "soficlab/rigidity.hpp"
#include "soficlab/schreier.hpp"
#include "soficlab/sentences.hpp"
#include "soficlab/stability.hpp"

using namespace soficlab;
using Json = nlohmann::ordered_json;
using oracle::Raw;

namespace {

struct Outcome {
  Json report = Json::object();
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

Raw raw(const Permutation& p) { return Raw(p.images().begin(), p.images().end()); }

Permutation perm(const Raw& r) { return Permutation::from_images(std::vector<Point>(r.begin(), r.end())); }

std::vector<Raw> raw_elements(const FiniteGroupModel& g) {
  std::vector<Raw> out;
  for (ElementId i = 0; i < g.order(); ++i) out.push_back(raw(g.element(i)));
  return out;
}

std::set<Raw> raw_set(const std::vector<Permutation>& ps) {
  std::set<Raw> out;
  for (const auto& p : ps) out.insert(raw(p));
  return out;
}

std::vector<Raw> raw_images(const LabeledSchreierGraph& g) {
  std::vector<Raw> out;
  for (const auto& p : g.images) out.push_back(raw(p));
  return out;
}

// ---- 1 --------------------------------------------------------------------

// Non-abelian, and the normal closure of every nontrivial class is everything.
bool oracle_nonabelian_simple(const std::vector<Raw>& elements) {
  if (elements.size() < 2) return false;
  const std::set<Raw> all(elements.begin(), elements.end());
  bool abelian = true;
  for (const auto& a : elements)
    for (const auto& b : elements) abelian = abelian && oracle::compose(a, b) == oracle::compose(b, a);
  if (abelian) return false;
  const int n = static_cast<int>(elements.front().size());
  std::set<Raw> done{oracle::identity(n)};
  for (const auto& g : elements) {
    if (done.count(g)) continue;
    std::set<Raw> cls;
    for (const auto& x : elements) cls.insert(oracle::compose(oracle::compose(x, g), oracle::invert(x)));
    done.insert(cls.begin(), cls.end());
    if (oracle::closure(std::vector<Raw>(cls.begin(), cls.end()), n).size() != all.size()) return false;
  }
  return true;
}

Outcome criterion_simplicity() {
  Outcome out;
  const std::set<std::string> simple = {"Alt(5)", "Alt(6)", "PSL(2,7)", "PSL(2,11)"};
  std::set<std::string> not_simple = {"Sym(3)", "Sym(4)", "Sym(5)", "Sym(6)", "Alt(4)", "D8", "D10", "D12"};
  for (int k = 2; k <= 12; ++k) not_simple.insert("Z/" + std::to_string(k));
  Json rows = Json::array();
  for (const auto& spec : default_corpus()) {
    const auto g = construct_group(spec);
    const auto elements = raw_elements(g);
    const bool classified = classify_nonabelian_simple(g);
    const bool brute = oracle_nonabelian_simple(elements);
    const bool phi2 = logic::evaluate(g, felgner_phi2(), logic::Strategy::ClassReduced);
    const bool coverage = oracle::every_element_is_commutator(std::set<Raw>(elements.begin(), elements.end()));
    out.expect(classified == brute, g.name() + ": classifier disagrees with normal-closure oracle");
    if (simple.count(g.name())) out.expect(classified, g.name() + " should be non-abelian simple");
    if (not_simple.count(g.name())) out.expect(!classified, g.name() + " should not be non-abelian simple");
    out.expect(phi2 == coverage, g.name() + ": phi2 disagrees with commutator coverage");
    rows.push_back({{"group", g.name()}, {"order", g.order()}, {"simple", classified}, {"phi2", phi2}});
  }
  out.report["rows"] = rows;
  return out;
}

// ---- 2 --------------------------------------------------------------------

// Fixed-point counts of the elements of order q in Alt(n), by scanning all even
// permutations of degree n.
std::set<int> order_q_fixed_points(int n, int q) {
  std::set<int> out;
  Raw p = oracle::identity(n);
  const Raw id = p;
  do {
    if (p == id || !oracle::is_even(p)) continue;
    Raw x = p;
    for (int k = 1; k < q; ++k) x = oracle::compose(p, x);
    if (x != id) continue;
    int fixed = 0;
    for (int i = 0; i < n; ++i) fixed += p[i] == i;
    out.insert(fixed);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Outcome criterion_congruence() {
  Outcome out;
  Json rows = Json::array();
  for (int n = 5; n <= 9; ++n) {
    const auto g = construct_group(GroupSpec::alt(n));
    for (int q : {3, 5}) {
      const auto fixed = order_q_fixed_points(n, q);
      for (int l = 0; l < q; ++l) {
        int shifted = l;
        while (shifted < 4) shifted += q;
        const bool expected = fixed.count(shifted) > 0;
        const bool semantic = satisfies_congruence(g, l, q);
        out.expect(semantic == expected, "Alt(" + std::to_string(n) + ") l=" + std::to_string(l) +
                                             " q=" + std::to_string(q) + ": semantic evaluation disagrees");
        out.expect(congruence_oracle_alt(n, l, q) == expected, "library oracle disagrees with element scan");
        rows.push_back({{"n", n}, {"l", l}, {"q", q}, {"value", semantic}});
      }
    }
  }
  out.report["rows"] = rows;
  return out;
}

// ---- 3 --------------------------------------------------------------------

Outcome criterion_prime_remark() {
  Outcome out;
  Json rows = Json::array();
  for (std::size_t n = 2; n <= 9; ++n) {
    const bool value = holds_on_sym(n);
    const bool expected = oracle::is_prime(n) || oracle::is_prime(n - 1);
    out.expect(value == expected, "Sym(" + std::to_string(n) + "): remark sentence disagrees with primality");
    rows.push_back({{"n", n}, {"value", value}});
  }
  out.expect(!holds_on_sym(9), "Sym(9) should fail the remark sentence");
  out.report["rows"] = rows;
  return out;
}

// ---- 4 --------------------------------------------------------------------

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t fourth_minus_one(std::uint64_t p, std::uint64_t q) {
  const std::uint64_t s = mulmod(p % q, p % q, q);
  return (mulmod(s, s, q) + q - 1) % q;
}

bool satisfies_selector(std::uint64_t p, const SelectorProblem& problem) {
  for (const auto& [q, gamma] : problem.gamma)
    if (fourth_minus_one(p, q) != residue_pair(q).a(gamma)) return false;
  return true;
}

// The search runs along p = 1 (gamma 0) or p = d (gamma 1) modulo each q.
bool in_progression(std::uint64_t p, const SelectorProblem& problem) {
  for (const auto& [q, gamma] : problem.gamma)
    if (p % q != (gamma ? residue_pair(q).d : 1)) return false;
  return true;
}

Outcome criterion_witness_primes(std::uint64_t seed) {
  Outcome out;
  std::size_t residue_checks = 0;
  for (std::uint64_t q = 7; q <= 499; ++q) {
    if (!oracle::is_prime(q)) continue;
    const auto r = residue_pair(q);
    std::set<std::uint64_t> powers;
    for (std::uint64_t x = 1; x < q; ++x) powers.insert(mulmod(mulmod(x, x, q), mulmod(x, x, q), q));
    const std::uint64_t d4 = mulmod(mulmod(r.d, r.d, q), mulmod(r.d, r.d, q), q);
    out.expect(r.a0 != r.a1, "q=" + std::to_string(q) + ": a0 == a1");
    out.expect(d4 == r.c, "q=" + std::to_string(q) + ": d^4 != c");
    out.expect(powers.count(r.c) && r.c != 1, "q=" + std::to_string(q) + ": c is not a nontrivial fourth power");
    out.expect(r.a0 == 0 && (r.a1 + 1) % q == r.c, "q=" + std::to_string(q) + ": residues do not match c");
    ++residue_checks;
  }
  out.report["residue_primes"] = residue_checks;

  const std::vector<std::uint64_t> pool = {7, 11, 13, 17, 19, 23, 29, 31};
  std::mt19937_64 rng(seed);
  Json found = Json::array();
  for (int trial = 0; trial < 100; ++trial) {
    SelectorProblem problem;
    const std::size_t size = 1 + rng() % 3;
    while (problem.gamma.size() < size) problem.gamma.emplace(pool[rng() % pool.size()], static_cast<int>(rng() % 2));
    const auto w = find_witness_prime(problem);
    std::uint64_t smallest = 13;
    while (!(oracle::is_prime(smallest) && in_progression(smallest, problem))) ++smallest;
    out.expect(w.p >= 13 && oracle::is_prime(w.p), "witness " + std::to_string(w.p) + " is not a prime >= 13");
    out.expect(satisfies_selector(w.p, problem), "witness " + std::to_string(w.p) + " misses a residue");
    out.expect(w.p == smallest, "witness " + std::to_string(w.p) + " is not the least prime of its progression (" +
                                  std::to_string(smallest) + ")");
    found.push_back(w.p);
  }
  out.report["random_witnesses"] = found;

  const std::vector<std::pair<std::map<std::uint64_t, int>, std::uint64_t>> fixed = {
      {{{7, 1}}, 23}, {{{7, 0}}, 29}, {{{7, 1}, {11, 1}}, 37}};
  Json fixed_json = Json::array();
  for (const auto& [gamma, expected] : fixed) {
    SelectorProblem problem;
    problem.gamma = gamma;
    const auto p = find_witness_prime(problem).p;
    out.expect(p == expected, "fixed instance gave " + std::to_string(p) + ", expected " + std::to_string(expected));
    fixed_json.push_back(p);
  }
  out.report["fixed_witnesses"] = fixed_json;
  return out;
}

// ---- 5 --------------------------------------------------------------------

struct RegularCopies {
  std::vector<Raw> left, right;
  Raw flip;
};

// Left and right multiplication on element indices, computed from raw elements.
RegularCopies regular_copies(const FiniteGroupModel& g) {
  const auto elements = raw_elements(g);
  std::map<Raw, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elements.size());
  RegularCopies out;
  out.flip.resize(n);
  for (int x = 0; x < n; ++x) out.flip[x] = index.at(oracle::invert(elements[x]));
  for (int h = 0; h < n; ++h) {
    Raw l(n), r(n);
    for (int x = 0; x < n; ++x) {
      l[x] = index.at(oracle::compose(elements[h], elements[x]));
      r[x] = index.at(oracle::compose(elements[x], oracle::invert(elements[h])));
    }
    out.left.push_back(l);
    out.right.push_back(r);
  }
  return out;
}

GroupAction raw_action(const std::string& name, const std::vector<Raw>& gens) {
  std::vector<std::string> symbols;
  std::vector<Permutation> images;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    symbols.push_back("s" + std::to_string(i + 1));
    images.push_back(perm(gens[i]));
  }
  return make_action(name, symbols, images);
}

Outcome criterion_rigidity() {
  Outcome out;
  Json rows = Json::array();
  for (const auto& spec : {GroupSpec::cyclic(5), GroupSpec::sym(3), GroupSpec::dihedral(8), GroupSpec::alt(4)}) {
    const auto g = construct_group(spec);
    const auto copies = regular_copies(g);
    const std::set<Raw> left(copies.left.begin(), copies.left.end());
    const std::set<Raw> right(copies.right.begin(), copies.right.end());
    const int n = static_cast<int>(g.order());

    const auto c = centralizer_transitive_action(left_regular_action(g));
    out.expect(raw_set(sorted_elements(c)) == right, g.name() + ": centralizer of the left copy is not the right copy");
    const auto cc = centralizer_transitive_action(raw_action("right", copies.right));
    out.expect(raw_set(sorted_elements(cc)) == left, g.name() + ": double centralizer is not the left copy");

    bool flip = true;
    for (int h = 0; h < n; ++h)
      flip = flip && oracle::compose(oracle::compose(copies.flip, copies.left[h]), copies.flip) == copies.right[h];
    out.expect(flip, g.name() + ": flip does not conjugate left onto right");

    bool discrete = true;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) discrete = discrete && oracle::moved_points(copies.right[a], copies.right[b]) == n;
    std::vector<Permutation> right_perms;
    for (const auto& r : copies.right) right_perms.push_back(perm(r));
    out.expect(discrete && one_discrete_check(right_perms), g.name() + ": right copy is not 1-discrete");

    const auto check = biregular_check(g);
    out.expect(check.ok() && check.centralizer_order == g.order(), g.name() + ": biregular_check failed");
    rows.push_back({{"group", g.name()},
                    {"centralizer_order", check.centralizer_order},
                    {"double_centralizer_closes", check.double_centralizer_closes},
                    {"flip_swaps", check.flip_swaps}});
  }
  out.report["biregular"] = rows;

  // Transitive actions of degree <= 8: base-point method against a scan of Sym(d).
  std::vector<std::pair<std::string, std::vector<Raw>>> actions;
  for (const auto& spec : default_corpus()) {
    const auto g = construct_group(spec);
    if (g.degree() <= 8) {
      std::vector<Raw> gens;
      for (auto id : g.generators()) gens.push_back(raw(g.element(id)));
      actions.emplace_back("natural " + g.name(), gens);
    }
    if (g.order() <= 8) actions.emplace_back("left-regular " + g.name(), regular_copies(g).left);
  }
  for (const auto& gens : std::vector<std::vector<std::string>>{
           {"(1 2 3 4)"}, {"(1 2)(3 4)", "(1 3)(2 4)"}, {"(1 2 3 4 5 6 7 8)", "(1 3)(5 7)"}, {"(1 2 3)(4 5 6)", "(1 4)"}}) {
    const auto g = construct_group(GroupSpec::generated(gens));
    std::vector<Raw> raw_gens;
    for (const auto& text : gens) raw_gens.push_back(raw(parse_permutation(text, g.degree())));
    actions.emplace_back("generated " + g.name(), raw_gens);
  }
  Json base_point = Json::array();
  for (const auto& [name, gens] : actions) {
    const auto action = raw_action(name, gens);
    if (!is_transitive(action)) continue;
    const int d = static_cast<int>(action.degree);
    const auto all = oracle::all_permutations(d);
    const auto brute = oracle::centralizer(std::set<Raw>(all.begin(), all.end()), gens);
    const auto c = centralizer_transitive_action(action);
    out.expect(raw_set(sorted_elements(c)) == brute, name + ": base-point centralizer disagrees with brute force");
    base_point.push_back({{"action", name}, {"degree", d}, {"centralizer_order", c.order()}});
  }
  out.report["base_point"] = base_point;
  return out;
}

// ---- 6 --------------------------------------------------------------------

Outcome criterion_schreier() {
  Outcome out;
  Json autos_json = Json::array();
  for (const auto& spec : {GroupSpec::cyclic(6), GroupSpec::sym(3), GroupSpec::alt(4)}) {
    const auto g = construct_group(spec);
    const auto graph = regular_schreier_graph(g);
    const auto images = raw_images(graph);
    const int n = static_cast<int>(graph.n);
    const auto autos = exact_automorphisms(graph);
    out.expect(autos.size() == g.order(), g.name() + ": automorphism count differs from |G|");
    for (const auto& a : autos) {
      const Raw r = raw(a);
      bool preserves = true;
      for (const auto& s : images)
        for (int i = 0; i < n; ++i) preserves = preserves && s[r[i]] == r[s[i]];
      out.expect(preserves, g.name() + ": reported automorphism breaks an edge");
    }
    bool one = true;
    for (std::size_t a = 0; a < autos.size(); ++a)
      for (std::size_t b = a + 1; b < autos.size(); ++b) one = one && oracle::moved_points(raw(autos[a]), raw(autos[b])) == n;
    out.expect(one, g.name() + ": automorphisms are not pairwise at distance 1");
    const auto scan = cluster_scan(autos, graph);
    out.expect(scan.histogram.size() == 1 && scan.histogram.front().distance == 1 &&
                   scan.clusters.size() == autos.size(),
               g.name() + ": clusters are not singletons at distance 1");
    autos_json.push_back({{"group", g.name()}, {"count", autos.size()}, {"clusters", scan.clusters.size()}});
  }
  out.report["automorphisms"] = autos_json;

  const auto prism = regular_schreier_graph(construct_group(GroupSpec::generated({"(1 2)", "(1 2 3)"})));
  const double gap = spectral_gap(prism);
  const double oracle_gap = oracle::spectral_gap(raw_images(prism), static_cast<int>(prism.n));
  out.expect(std::abs(gap - 2.0 / 3.0) <= 1e-9, "prism spectral gap is not 2/3");
  out.expect(std::abs(oracle_gap - 2.0 / 3.0) <= 1e-9, "Jacobi oracle disagrees on the prism");
  std::ostringstream gap_text;
  gap_text << std::fixed << std::setprecision(9) << gap;
  out.report["prism_gap"] = gap_text.str();

  std::vector<std::pair<std::string, LabeledSchreierGraph>> graphs;
  for (const auto& spec : default_corpus()) {
    const auto g = construct_group(spec);
    if (g.order() <= 12) graphs.emplace_back("regular:" + g.name(), regular_schreier_graph(g));
    if (g.degree() <= 12) graphs.emplace_back("natural:" + g.name(), natural_schreier_graph(g));
  }
  for (const auto& gens : std::vector<std::vector<std::string>>{{"(1 2 3)", "(4 5)"}, {"(1 2)(3 4)"}, {"(1 2 3 4 5 6)"}})
    graphs.emplace_back("natural:generated", natural_schreier_graph(construct_group(GroupSpec::generated(gens))));
  Json equivalence = Json::array();
  for (const auto& [name, graph] : graphs) {
    const auto images = raw_images(graph);
    const int n = static_cast<int>(graph.n);
    const Rational h = edge_expansion(graph);
    const double lambda = spectral_gap(graph);
    const double h_oracle = oracle::edge_expansion(images, n);
    const double lambda_oracle = oracle::spectral_gap(images, n);
    out.expect((h > 0) == (lambda > 0), name + ": expansion and spectral gap disagree on positivity");
    out.expect(std::abs(to_double(h) - h_oracle) < 1e-12, name + ": expansion differs from subset oracle");
    out.expect(std::abs(lambda - lambda_oracle) < 1e-8, name + ": spectral gap differs from Jacobi oracle");
    equivalence.push_back({{"graph", name}, {"n", n}, {"expansion", to_string(h)}, {"gap_positive", lambda > 0}});
  }
  out.report["expansion_vs_gap"] = equivalence;
  return out;
}

// ---- 7 --------------------------------------------------------------------

std::vector<std::vector<Raw>> all_functions(std::size_t order, int m, bool fix_identity) {
  const auto sym = oracle::all_permutations(m);
  std::vector<std::vector<Raw>> out;
  std::vector<std::size_t> idx(order, 0);
  const std::size_t first = fix_identity ? 1 : 0;
  while (true) {
    std::vector<Raw> f;
    for (auto i : idx) f.push_back(sym[i]);
    out.push_back(f);
    std::size_t i = first;
    while (i < order && ++idx[i] == sym.size()) idx[i++] = 0;
    if (i == order) break;
  }
  return out;
}

Rational raw_distance(const Raw& a, const Raw& b) {
  return Rational(oracle::moved_points(a, b), static_cast<std::int64_t>(a.size()));
}

Rational oracle_defect(const FiniteGroupModel& g, const std::vector<Raw>& f) {
  Rational worst = 0;
  for (ElementId a = 0; a < g.order(); ++a)
    for (ElementId b = 0; b < g.order(); ++b)
      worst = std::max(worst, raw_distance(f[g.mul(a, b)], oracle::compose(f[a], f[b])));
  return worst;
}

AlmostHom to_almost_hom(const std::shared_ptr<const HomDomain>& domain, const std::vector<Raw>& f) {
  std::vector<Permutation> images;
  for (const auto& r : f) images.push_back(perm(r));
  return make_almost_hom(domain, images);
}

Outcome criterion_stability() {
  Outcome out;
  const auto z3 = make_domain(GroupSpec::cyclic(3));
  std::set<std::vector<Raw>> homs;
  for (const auto& h : enumerate_homs(z3, 3)) {
    std::vector<Raw> key;
    for (const auto& p : h.images) key.push_back(raw(p));
    homs.insert(key);
  }
  std::size_t zero = 0;
  for (const auto& f : all_functions(3, 3, false)) {
    const Rational defect = uniform_defect(to_almost_hom(z3, f)).defect;
    out.expect(defect == oracle_defect(z3->group, f), "Z/3 -> Sym(3): defect differs from pair enumeration");
    out.expect((defect == 0) == (homs.count(f) > 0), "Z/3 -> Sym(3): zero defect off the enumerated homs");
    zero += defect == 0;
  }
  out.expect(zero == homs.size(), "Z/3 -> Sym(3): zero-defect count differs from hom count");
  out.report["z3_homs"] = homs.size();

  const auto instance = make_almost_hom(
      z3, {Permutation::identity(3), Permutation::cycles(3, {{1, 2, 3}}), Permutation::cycles(3, {{1, 2}})});
  const auto defect = uniform_defect(instance);
  const auto near = nearest_hom(instance);
  out.expect(defect.defect == 1, "Z/3 instance: defect is not 1");
  out.expect(near.distance == Rational(2, 3) && near.m == 3, "Z/3 instance: nearest-hom distance is not 2/3");
  out.report["z3_instance"] = {{"defect", to_string(defect.defect)}, {"distance", to_string(near.distance)}};

  const auto z2 = make_domain(GroupSpec::cyclic(2));
  Json sweeps = Json::array();
  for (int m : {3, 4}) {
    const auto all = all_functions(2, m, true);
    std::vector<Raw> involutions;
    for (const auto& p : oracle::all_permutations(m))
      if (oracle::compose(p, p) == oracle::identity(m)) involutions.push_back(p);
    std::optional<Rational> best;
    for (const auto& f : all) {
      Rational oracle_distance = 1;
      for (const auto& x : involutions) oracle_distance = std::min(oracle_distance, raw_distance(f[1], x));
      const auto r = nearest_hom(to_almost_hom(z2, f));
      out.expect(r.distance == oracle_distance, "Z/2 -> Sym(" + std::to_string(m) + "): nearest distance differs");
      out.expect(r.defect == oracle_defect(z2->group, f), "Z/2 -> Sym(" + std::to_string(m) + "): defect differs");
      out.expect(r.distance <= r.defect * kStabilityConstant, "Z/2 -> Sym(" + std::to_string(m) + "): bound fails");
      if (r.ratio && (!best || *r.ratio > *best)) best = r.ratio;
    }
    sweeps.push_back({{"degree", m}, {"maps", all.size()}, {"best_ratio", best ? to_string(*best) : "none"}});
  }
  out.report["z2_sweeps"] = sweeps;
  return out;
}

// ---- 8 --------------------------------------------------------------------

Outcome criterion_metric_identities(std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  std::map<std::string, std::size_t> lambda1_histogram;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 100);
    const Raw r = oracle::random_permutation(n, rng);
    const auto g = perm(r);
    const auto profile = lambda_profile(g);
    int fixed = 0;
    for (int i = 0; i < n; ++i) fixed += r[i] == i;
    std::map<std::size_t, int> points_in;
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (int j = i; !seen[j]; j = r[j]) seen[j] = true, ++len;
      points_in[len] += static_cast<int>(len);
    }
    const Rational lambda1 = profile.count(1) ? profile.at(1) : Rational(0);
    out.expect(hamming_distance(Permutation::identity(n), g) == 1 - lambda1, "d(1,g) != 1 - lambda_1");
    out.expect(lambda1 == Rational(fixed, n), "lambda_1 differs from the fixed-point fraction");
    Rational sum = 0;
    for (const auto& [k, v] : profile) {
      sum += v;
      out.expect(v == Rational(points_in[k], n), "lambda_k differs from the cycle count");
    }
    out.expect(sum == 1, "lambda profile does not sum to 1");
    ++lambda1_histogram[to_string(lambda1)];
  }
  out.report["lambda1_values"] = lambda1_histogram.size();

  Json centralizers = Json::array();
  for (int n = 1; n <= 7; ++n) {
    const auto all = oracle::all_permutations(n);
    std::map<std::string, std::size_t> by_type;
    for (const auto& g : all) {
      std::size_t count = 0;
      for (const auto& h : all) count += oracle::compose(g, h) == oracle::compose(h, g);
      const auto type = cycle_type(perm(g));
      out.expect(centralizer_order_sym(type) == BigInt(count),
                 "centralizer order of type " + type.to_string() + " differs from brute force");
      by_type[type.to_string()] = count;
    }
    centralizers.push_back({{"degree", n}, {"types", by_type.size()}});
  }
  out.report["centralizers"] = centralizers;
  return out;
}

// ---- 9 --------------------------------------------------------------------

Outcome criterion_factorial_gap() {
  Outcome out;
  std::vector<BigInt> half(201);
  BigInt f = 1;
  for (int k = 1; k <= 200; ++k) {
    f *= k;
    half[k] = f / 2;
  }
  std::size_t pairs = 0;
  for (std::uint64_t n = 2; n <= 200; ++n)
    for (std::uint64_t m = 2; m <= 200; ++m) {
      if (n == m) continue;
      const bool expected = 2 * half[n] <= half[m] || half[n] >= 2 * half[m];
      out.expect(expected, "oracle gap fails at " + std::to_string(n) + "," + std::to_string(m));
      out.expect(factorial_gap_check(n, m), "gap check fails at " + std::to_string(n) + "," + std::to_string(m));
      ++pairs;
    }
  out.report["pairs"] = pairs;
  return out;
}

// ---- driver ---------------------------------------------------------------

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::vector<Criterion> criteria(std::uint64_t seed) {
  return {
      {1, "simplicity corpus and commutator coverage", 300, criterion_simplicity},
      {2, "congruence sentence vs element scan", 1800, criterion_congruence},
      {3, "prime remark on Sym(2..9)", 600, criterion_prime_remark},
      {4, "residue pairs and witness primes", 60, [seed] { return criterion_witness_primes(seed); }},
      {5, "biregular rigidity and base-point centralizers", 300, criterion_rigidity},
      {6, "Schreier automorphisms, prism gap, expansion vs gap", 300, criterion_schreier},
      {7, "uniform defect and nearest homomorphisms", 60, criterion_stability},
      {8, "lambda profile and Sym centralizer orders", 120, [seed] { return criterion_metric_identities(seed); }},
      {9, "factorial gap for 2 <= n != m <= 200", 60, criterion_factorial_gap},
  };
}

struct Run {
  std::string report;
  std::vector<bool> pass;
};

Run run_suite(std::uint64_t seed, bool print) {
  Run out;
  Json report = Json::object();
  report["seed"] = seed;
  for (const auto& c : criteria(seed)) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) o.failures.push_back("over the time budget");
    const bool pass = o.failures.empty();
    out.pass.push_back(pass);
    report["criterion_" + std::to_string(c.id)] = {{"pass", pass}, {"report", o.report}};
    if (print) {
      std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.title << "  ("
                << std::fixed << std::setprecision(2) << seconds << " s)\n";
      for (std::size_t i = 0; i < o.failures.size() && i < 5; ++i) std::cout << "      " << o.failures[i] << "\n";
      if (o.failures.size() > 5) std::cout << "      ... " << o.failures.size() - 5 << " more\n";
      std::cout.flush();
    }
  }
  out.report = report.dump(2) + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 1;
  std::string report_path;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) seed = std::stoull(argv[++i]);
    else if (arg == "--report" && i + 1 < argc) report_path = argv[++i];
    else {
      std::cerr << "usage: acceptance [--seed N] [--report PATH]\n";
      return 2;
    }
  }

  const Run first = run_suite(seed, true);
  const Run second = run_suite(seed, false);
  const bool same = first.report == second.report;
  std::cout << (same ? "PASS" : "FAIL") << "  criterion 10  byte-identical reports across two runs (" << first.report.size()
            << " bytes)\n";
  if (!report_path.empty()) std::ofstream(report_path) << first.report;

  std::size_t failed = same ? 0 : 1;
  for (bool p : first.pass) failed += !p;
  std::cout << (failed == 0 ? "all 10 criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
