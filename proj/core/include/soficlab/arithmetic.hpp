#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace soficlab {

using BigInt = boost::multiprecision::cpp_int;

/// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Image of x -> x^4 on the units mod q.
std::set<std::uint64_t> fourth_powers(std::uint64_t q);

struct ResiduePair {
  std::uint64_t q = 0;
  std::uint64_t a0 = 0;
  std::uint64_t a1 = 0;
  /// Smallest fourth power other than 1.
  std::uint64_t c = 0;
  /// Smallest fourth root of c.
  std::uint64_t d = 0;
  std::uint64_t b0 = 1;
  std::uint64_t b1 = 0;

  std::uint64_t a(int gamma) const { return gamma ? a1 : a0; }
  std::uint64_t b(int gamma) const { return gamma ? b1 : b0; }
};

/// Throws InvalidArgument unless q is a prime >= 7.
ResiduePair residue_pair(std::uint64_t q);

struct CrtResult {
  std::uint64_t l = 0;
  std::uint64_t modulus = 1;

  friend bool operator==(const CrtResult&, const CrtResult&) = default;
};

/// The unique l in [0, M) with l = r_q (mod q), M the product of the moduli.
/// Throws InvalidArgument on zero or non-coprime moduli, or when M overflows.
CrtResult crt_combine(const std::map<std::uint64_t, std::uint64_t>& residues);

struct SelectorProblem {
  /// q -> gamma(q) in {0, 1}
  std::map<std::uint64_t, int> gamma;
};

struct WitnessCheck {
  std::uint64_t q;
  int gamma;
  std::uint64_t expected;   // a_{q,gamma(q)}
  std::uint64_t residue;    // (p^4 - 1) mod q
  bool ok;
};

struct WitnessPrime {
  std::uint64_t p = 0;
  std::uint64_t candidates_scanned = 0;
  std::vector<WitnessCheck> checks;
};

inline constexpr std::uint64_t kDefaultScanBudget = 10'000'000;

/// Smallest prime p >= floor with p = b_{q,gamma(q)} (mod q) for every q.
/// Throws CapExceeded after `budget` candidates in the progression.
WitnessPrime find_witness_prime(const SelectorProblem& problem, std::uint64_t floor = 13,
                                std::uint64_t budget = kDefaultScanBudget);

/// p^4 - 1 for the primes p in [lo, hi].
std::vector<std::uint64_t> alt_target_degrees(std::uint64_t lo, std::uint64_t hi);

/// n!/2 for n >= 2.
BigInt factorial_half(std::uint64_t n);
/// True iff n = m or f(n)/f(m) lies outside the open interval (1/2, 2).
bool factorial_gap_check(std::uint64_t n, std::uint64_t m);

}  // namespace soficlab
