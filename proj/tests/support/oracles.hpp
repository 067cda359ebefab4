#pragma once

// Brute-force reference computations used by the tests. Everything here works
// on raw image vectors and std containers so that it shares no code path with
// the library it checks.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Raw = std::vector<int>;  // 0-based images

inline Raw identity(int n) {
  Raw r(n);
  std::iota(r.begin(), r.end(), 0);
  return r;
}

// (a b)(i) = a(b(i))
inline Raw compose(const Raw& a, const Raw& b) {
  Raw r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Raw invert(const Raw& a) {
  Raw r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

inline std::vector<Raw> all_permutations(int n) {
  std::vector<Raw> out;
  Raw p = identity(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline bool is_even(const Raw& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return inversions % 2 == 0;
}

inline int moved_points(const Raw& a, const Raw& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

// Closure of a generator list by repeated multiplication until nothing new.
inline std::set<Raw> closure(const std::vector<Raw>& gens, int n) {
  std::set<Raw> seen{identity(n)};
  std::vector<Raw> todo{identity(n)};
  while (!todo.empty()) {
    Raw x = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Raw y = compose(g, x);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

inline std::set<Raw> centralizer(const std::set<Raw>& ambient, const std::vector<Raw>& s) {
  std::set<Raw> out;
  for (const auto& x : ambient) {
    bool ok = true;
    for (const auto& t : s) ok = ok && compose(x, t) == compose(t, x);
    if (ok) out.insert(x);
  }
  return out;
}

inline Raw commutator(const Raw& a, const Raw& b) {
  return compose(compose(invert(a), invert(b)), compose(a, b));
}

// Every element of the group is a single commutator.
inline bool every_element_is_commutator(const std::set<Raw>& group) {
  std::set<Raw> comms;
  for (const auto& a : group)
    for (const auto& b : group) comms.insert(commutator(a, b));
  return comms.size() == group.size();
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Cyclic Jacobi eigenvalue iteration for a dense symmetric matrix (row-major).
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
  auto at = [&](int i, int j) -> double& { return a[i * n + j]; };
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    if (off < 1e-24) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(at(p, q)) < 1e-300) continue;
        const double theta = (at(q, q) - at(p, p)) / (2 * at(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = at(i, i);
  std::sort(ev.rbegin(), ev.rend());
  return ev;
}

inline Raw random_permutation(int n, std::mt19937_64& rng) {
  Raw p = identity(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Symmetrized adjacency of a labeled graph: an involution contributes its
// edges once, any other label both directions.
inline std::vector<double> adjacency(const std::vector<Raw>& images, int n, int& degree) {
  std::vector<double> a(n * n, 0.0);
  degree = 0;
  for (const auto& s : images) {
    const bool involution = compose(s, s) == identity(n);
    degree += involution ? 1 : 2;
    for (int u = 0; u < n; ++u) {
      a[u * n + s[u]] += 1;
      if (!involution) a[s[u] * n + u] += 1;
    }
  }
  return a;
}

inline double spectral_gap(const std::vector<Raw>& images, int n) {
  if (n <= 1) return 1.0;
  int degree = 0;
  const auto ev = jacobi_eigenvalues(adjacency(images, n, degree), n);
  return 1.0 - ev[1] / degree;
}

// Minimum over nonempty S with |S| <= n/2 of |boundary(S)| / (degree |S|).
inline double edge_expansion(const std::vector<Raw>& images, int n) {
  if (n <= 1) return 1.0;
  int degree = 0;
  const auto a = adjacency(images, n, degree);
  double best = 1e300;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (2 * size > n) continue;
    double boundary = 0;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if ((mask >> u & 1) && !(mask >> v & 1)) boundary += a[u * n + v];
    best = std::min(best, boundary / (degree * size));
  }
  return best;
}

}  // namespace oracle
