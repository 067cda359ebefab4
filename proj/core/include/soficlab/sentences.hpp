#pragma once

#include <optional>
#include <string>
#include <vector>

#include "soficlab/group_spec.hpp"
#include "soficlab/logic_eval.hpp"

namespace soficlab {

// Concrete sentences about finite groups with independent oracles.

/// forall g. forall h. (g != 1 and C(g,h) != {1}) -> stabilized power of
/// C(g,h) C(C(g,h)) is trivial, under the chosen reading of the power limit.
logic::Formula felgner_phi1(PowerReading reading);
/// forall g. exists h1. exists h2. g = [h1,h2]
logic::Formula felgner_phi2();
logic::Formula felgner_phi(PowerReading reading);

/// Brute-force non-abelian simplicity; authoritative.
bool classify_nonabelian_simple(const FiniteGroupModel& g, std::size_t cap = kBruteForceCap);
/// Every element is a single commutator, by exhaustive pairs.
bool commutator_coverage(const FiniteGroupModel& g);

/// Smallest l' = l + kq (k >= 0) with l' >= 4. Requires q an odd prime.
std::size_t shifted_residue(std::size_t l, std::size_t q);
/// exists g. (g^q = 1 & !(g = 1)) & AltFactorIndexAtMost(l', 2, Centralizer(g))
logic::Formula congruence_sentence(std::size_t l, std::size_t q);
bool satisfies_congruence(const FiniteGroupModel& g, std::size_t l, std::size_t q,
                          logic::Strategy strategy = logic::Strategy::ClassReduced);
/// n = l' (mod q) and n >= l' + q: Alt(n) has an element of order q with
/// exactly l' fixed points.
bool congruence_oracle_alt(std::size_t n, std::size_t l, std::size_t q);

/// exists g. forall h. g*h = h*g -> (h = 1 | exists k. h*k = k*g)
logic::Formula prime_remark_sentence();
/// Evaluates the prime remark sentence on Sym(n), n >= 2, with the
/// centralizer-aware strategy.
bool holds_on_sym(std::size_t n, const GroupLimits& limits = {});
/// n prime or n - 1 prime.
bool prime_remark_oracle(std::size_t n);

struct SentenceReport {
  std::string group;
  std::string sentence_id;
  logic::Strategy strategy = logic::Strategy::ClassReduced;
  bool truth = false;
  std::optional<bool> oracle;
  double wall_seconds = 0;
  /// (variable, permutation in cycle notation) for the outer block.
  std::vector<std::pair<std::string, std::string>> witness;

  bool agrees() const { return !oracle || *oracle == truth; }
};

SentenceReport run_sentence(const FiniteGroupModel& g, std::string sentence_id, const logic::Formula& f,
                            logic::Strategy strategy, std::optional<bool> oracle = std::nullopt,
                            const logic::EvalLimits& limits = {});

/// One row of the simplicity table: the oracle next to both phi1 readings
/// and phi2 with its commutator-coverage oracle.
struct FelgnerRow {
  std::string group;
  bool nonabelian_simple = false;
  bool phi1_literal = false;
  bool phi1_generated = false;
  bool phi2 = false;
  bool commutator_coverage = false;
};

FelgnerRow felgner_row(const FiniteGroupModel& g, logic::Strategy strategy = logic::Strategy::ClassReduced);

}  // namespace soficlab
