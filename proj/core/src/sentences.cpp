#include "soficlab/sentences.hpp"

#include <algorithm>
#include <chrono>

#include "soficlab/arithmetic.hpp"
#include "soficlab/errors.hpp"
#include "soficlab/logic_parser.hpp"

namespace soficlab {

using logic::Formula;
using logic::Strategy;

Formula felgner_phi1(PowerReading reading) {
  const std::string text =
      "forall g. forall h. !(g = 1) & !IsTrivial(Centralizer(g, h)) -> "
      "IsTrivial(StabilizedPower(SetProduct(Centralizer(g, h), Centralizer(Centralizer(g, h))), " +
      std::string(logic::reading_keyword(reading)) + "))";
  return logic::parse_sentence(text);
}

Formula felgner_phi2() { return logic::parse_sentence("forall g. exists h1. exists h2. g = [h1,h2]"); }

Formula felgner_phi(PowerReading reading) { return Formula::conjunction(felgner_phi1(reading), felgner_phi2()); }

bool classify_nonabelian_simple(const FiniteGroupModel& g, std::size_t cap) { return is_nonabelian_simple(g, cap); }

bool commutator_coverage(const FiniteGroupModel& g) {
  std::vector<char> hit(g.order(), 0);
  std::size_t count = 0;
  for (ElementId a = 0; a < g.order() && count < g.order(); ++a)
    for (ElementId b = 0; b < g.order(); ++b) {
      const ElementId c = g.commutator(a, b);
      if (!hit[c]) {
        hit[c] = 1;
        ++count;
      }
    }
  return count == g.order();
}

std::size_t shifted_residue(std::size_t l, std::size_t q) {
  if (q < 3 || !is_prime(q)) throw InvalidArgument("q must be an odd prime");
  while (l < 4) l += q;
  return l;
}

Formula congruence_sentence(std::size_t l, std::size_t q) {
  const std::size_t shifted = shifted_residue(l, q);
  std::string power = "g";
  for (std::size_t i = 1; i < q; ++i) power += " * g";
  return logic::parse_sentence("exists g. (" + power + " = 1 & !(g = 1)) & AltFactorIndexAtMost(" +
                               std::to_string(shifted) + ", 2, Centralizer(g))");
}

bool satisfies_congruence(const FiniteGroupModel& g, std::size_t l, std::size_t q, Strategy strategy) {
  return logic::evaluate(g, congruence_sentence(l, q), strategy);
}

bool congruence_oracle_alt(std::size_t n, std::size_t l, std::size_t q) {
  const std::size_t shifted = shifted_residue(l, q);
  return n % q == shifted % q && n >= shifted + q;
}

Formula prime_remark_sentence() {
  return logic::parse_sentence("exists g. forall h. g * h = h * g -> h = 1 | (exists k. h * k = k * g)");
}

bool holds_on_sym(std::size_t n, const GroupLimits& limits) {
  if (n < 2) throw InvalidArgument("prime remark sentence needs n >= 2");
  if (n > 12) throw CapExceeded("prime remark evaluation is capped at Sym(12)");
  const auto g = construct_group(GroupSpec::sym(n), limits);
  logic::EvalLimits eval;
  eval.reduced_cap = std::max(eval.reduced_cap, limits.element_cap);
  return logic::evaluate(g, prime_remark_sentence(), Strategy::CentralizerAware, eval);
}

bool prime_remark_oracle(std::size_t n) { return is_prime(n) || (n >= 1 && is_prime(n - 1)); }

SentenceReport run_sentence(const FiniteGroupModel& g, std::string sentence_id, const Formula& f, Strategy strategy,
                            std::optional<bool> oracle, const logic::EvalLimits& limits) {
  SentenceReport r;
  r.group = g.name();
  r.sentence_id = std::move(sentence_id);
  r.strategy = strategy;
  r.oracle = oracle;
  const auto start = std::chrono::steady_clock::now();
  const auto result = logic::evaluate_with_witness(g, f, strategy, {}, limits);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.truth = result.value;
  for (const auto& b : result.witness) r.witness.emplace_back(b.variable, g.element(b.element).to_cycle_string());
  return r;
}

FelgnerRow felgner_row(const FiniteGroupModel& g, Strategy strategy) {
  FelgnerRow row;
  row.group = g.name();
  row.nonabelian_simple = classify_nonabelian_simple(g);
  row.phi1_literal = logic::evaluate(g, felgner_phi1(PowerReading::LiteralIntersection), strategy);
  row.phi1_generated = logic::evaluate(g, felgner_phi1(PowerReading::GeneratedSubgroup), strategy);
  row.phi2 = logic::evaluate(g, felgner_phi2(), strategy);
  row.commutator_coverage = commutator_coverage(g);
  return row;
}

}  // namespace soficlab
