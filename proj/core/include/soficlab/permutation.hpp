#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "soficlab/rational.hpp"

namespace soficlab {

using Point = std::uint32_t;
using BigInt = boost::multiprecision::cpp_int;

/// A bijection of {0, ..., n-1}. Text I/O is 1-based (see parse_permutation).
///
/// Products follow the convention (p * q)(i) = p(q(i)): the right factor acts
/// first. Every module in the library inherits this.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree);
  /// Takes 0-based images; throws InvalidArgument unless they form a bijection.
  static Permutation from_images(std::vector<Point> images);
  /// Builds a product of disjoint or overlapping cycles given with 1-based
  /// points, e.g. cycles(6, {{1, 2}, {3, 4, 5}}).
  static Permutation cycles(std::size_t degree,
                            std::initializer_list<std::initializer_list<std::size_t>> cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  bool is_even() const;
  std::size_t fixed_point_count() const noexcept;
  /// Order as a 64-bit integer; lcm of cycle lengths.
  std::uint64_t order() const;

  Permutation inverse() const;
  Permutation pow(std::int64_t exponent) const;
  /// Appends fixed points up to `degree` (the padding p ⊕ 1).
  Permutation padded(std::size_t degree) const;

  std::string to_cycle_string() const;
  std::string to_image_string() const;

  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// Accepts `[2,1,3]` (image notation) or `(1 2)(3 4)` (cycle notation, fixed
/// points omitted). Cycle notation infers the degree from the largest point
/// unless `degree` is given or the text carries a trailing `deg=n`.
Permutation parse_permutation(std::string_view text,
                              std::optional<std::size_t> degree = std::nullopt);

/// [a, b] = a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);

/// |{i : p(i) != q(i)}| / n.
Rational hamming_distance(const Permutation& p, const Permutation& q);

class CycleType {
 public:
  CycleType() = default;
  /// multiplicities: cycle length k -> number of k-cycles (zero entries dropped).
  CycleType(std::map<std::size_t, std::size_t> multiplicities);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t multiplicity(std::size_t length) const;
  const std::map<std::size_t, std::size_t>& multiplicities() const noexcept { return mult_; }
  bool is_even() const;
  /// Cycle lengths (1-cycles included) pairwise distinct and all odd: the
  /// Sym-class splits into two Alt-classes exactly in this case.
  bool splits_in_alt() const;
  std::uint64_t element_order() const;

  /// e.g. "1^1 2^1 3^1".
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;

 private:
  std::map<std::size_t, std::size_t> mult_;
  std::size_t degree_ = 0;
};

using LambdaProfile = std::map<std::size_t, Rational>;

CycleType cycle_type(const Permutation& p);
/// lambda_k = k * m_k / n: the fraction of points lying in k-cycles.
LambdaProfile lambda_profile(const Permutation& p);

/// prod_k k^{m_k} m_k!, the order of the centralizer in Sym(n).
BigInt centralizer_order_sym(const CycleType& type);

enum class Ambient { Sym, Alt };

/// Some x with x p x^-1 = q, if p and q share a cycle type.
std::optional<Permutation> find_conjugator(const Permutation& p, const Permutation& q);

/// Conjugacy inside Sym(n) or Alt(n). Throws InvalidArgument if an odd
/// permutation is passed with Ambient::Alt.
bool conjugacy_test(const Permutation& p, const Permutation& q, Ambient ambient);

inline constexpr std::size_t kConjugateDistanceCap = 8;

/// min over x in Sym(n) of d(g, x h x^-1), by enumerating Sym(n).
Rational min_conjugate_distance(const Permutation& g, const Permutation& h,
                                std::size_t degree_cap = kConjugateDistanceCap);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

std::size_t hash_points(std::span<const Point> points) noexcept;

}  // namespace soficlab

template <>
struct std::hash<soficlab::Permutation> : soficlab::PermutationHash {};
