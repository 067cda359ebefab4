#include "soficlab/arithmetic.hpp"

#include <limits>
#include <numeric>

#include "soficlab/errors.hpp"

namespace soficlab {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t base) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = powmod(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// a^-1 mod m for gcd(a, m) = 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  __extension__ typedef __int128 i128;
  i128 old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const i128 k = old_r / r;
    old_r -= k * r;
    std::swap(old_r, r);
    old_s -= k * s;
    std::swap(old_s, s);
  }
  return static_cast<std::uint64_t>(((old_s % static_cast<i128>(m)) + m) % m);
}

constexpr std::uint64_t kTrialLimit = 1'000'000;

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < kTrialLimit) {
    for (std::uint64_t d = 41; d * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  }
  // These bases are a deterministic witness set for n < 3.3 * 10^24.
  for (std::uint64_t base : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (!strong_probable_prime(n, base)) return false;
  return true;
}

std::set<std::uint64_t> fourth_powers(std::uint64_t q) {
  if (q < 2) throw InvalidArgument("modulus must be >= 2");
  std::set<std::uint64_t> out;
  for (std::uint64_t x = 1; x < q; ++x)
    if (std::gcd(x, q) == 1) out.insert(powmod(x, 4, q));
  return out;
}

ResiduePair residue_pair(std::uint64_t q) {
  if (q < 7 || !is_prime(q)) throw InvalidArgument("residue pair needs a prime q >= 7, got " + std::to_string(q));
  const auto powers = fourth_powers(q);
  ResiduePair r;
  r.q = q;
  for (auto v : powers)
    if (v != 1) {
      r.c = v;
      break;
    }
  if (r.c == 0) throw InvalidArgument("no nontrivial fourth power mod " + std::to_string(q));
  for (std::uint64_t x = 1; x < q; ++x)
    if (powmod(x, 4, q) == r.c) {
      r.d = x;
      break;
    }
  r.a0 = 0;
  r.a1 = (r.c + q - 1) % q;
  r.b0 = 1;
  r.b1 = r.d;
  return r;
}

CrtResult crt_combine(const std::map<std::uint64_t, std::uint64_t>& residues) {
  if (residues.empty()) throw InvalidArgument("no congruences to combine");
  CrtResult acc{0, 1};
  for (const auto& [q, r] : residues) {
    if (q == 0) throw InvalidArgument("zero modulus");
    if (std::gcd(acc.modulus, q) != 1) throw InvalidArgument("moduli are not pairwise coprime");
    const u128 m = static_cast<u128>(acc.modulus) * q;
    if (m > std::numeric_limits<std::uint64_t>::max()) throw InvalidArgument("CRT modulus exceeds 64 bits");
    // Solve acc.l + acc.modulus * t = r (mod q).
    const std::uint64_t target = (r % q + q - acc.l % q) % q;
    const std::uint64_t inv = inverse_mod(acc.modulus % q, q);
    const std::uint64_t t = mulmod(target, inv, q);
    acc.l = static_cast<std::uint64_t>(acc.l + static_cast<u128>(acc.modulus) * t);
    acc.modulus = static_cast<std::uint64_t>(m);
  }
  return acc;
}

WitnessPrime find_witness_prime(const SelectorProblem& problem, std::uint64_t floor, std::uint64_t budget) {
  if (problem.gamma.empty()) throw InvalidArgument("selector problem has no primes");
  std::map<std::uint64_t, std::uint64_t> residues;
  std::map<std::uint64_t, ResiduePair> pairs;
  for (const auto& [q, g] : problem.gamma) {
    if (g != 0 && g != 1) throw InvalidArgument("gamma values must be 0 or 1");
    auto rp = residue_pair(q);
    residues[q] = rp.b(g);
    pairs.emplace(q, rp);
  }
  const auto crt = crt_combine(residues);
  u128 x = crt.l;
  if (x < floor) x += static_cast<u128>((floor - crt.l + crt.modulus - 1) / crt.modulus) * crt.modulus;

  WitnessPrime out;
  for (;;) {
    if (out.candidates_scanned >= budget)
      throw CapExceeded("no witness prime within " + std::to_string(budget) + " candidates");
    if (x > std::numeric_limits<std::uint64_t>::max()) throw CapExceeded("witness prime search left 64-bit range");
    ++out.candidates_scanned;
    if (is_prime(static_cast<std::uint64_t>(x))) break;
    x += crt.modulus;
  }
  out.p = static_cast<std::uint64_t>(x);
  for (const auto& [q, g] : problem.gamma) {
    const auto& rp = pairs.at(q);
    const std::uint64_t residue = (powmod(out.p, 4, q) + q - 1) % q;
    out.checks.push_back({q, g, rp.a(g), residue, residue == rp.a(g)});
  }
  return out;
}

std::vector<std::uint64_t> alt_target_degrees(std::uint64_t lo, std::uint64_t hi) {
  if (hi >= 65536) throw InvalidArgument("p^4 - 1 overflows 64 bits for p >= 65536");
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = lo; p <= hi; ++p)
    if (is_prime(p)) out.push_back(p * p * p * p - 1);
  return out;
}

BigInt factorial_half(std::uint64_t n) {
  if (n < 2) throw InvalidArgument("factorial_half needs n >= 2");
  BigInt f = 1;
  for (std::uint64_t i = 3; i <= n; ++i) f *= i;
  return f;
}

bool factorial_gap_check(std::uint64_t n, std::uint64_t m) {
  if (n == m) {
    if (n < 2) throw InvalidArgument("factorial_gap_check needs n, m >= 2");
    return true;
  }
  const BigInt fn = factorial_half(n);
  const BigInt fm = factorial_half(m);
  return 2 * fn <= fm || fn >= 2 * fm;
}

}  // namespace soficlab
