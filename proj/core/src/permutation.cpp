#include "soficlab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "soficlab/errors.hpp"

namespace soficlab {

namespace {

std::vector<std::vector<Point>> cycles_of(std::span<const Point> images) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images.size(), false);
  for (Point start = 0; start < images.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> cycle;
    for (Point i = start; !seen[i]; i = images[i]) {
      seen[i] = true;
      cycle.push_back(i);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(const std::string& msg, std::size_t offset) {
  throw ParseError("permutation: " + msg, 1, offset + 1);
}

}  // namespace

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) throw InvalidArgument("permutation degree must be at least 1");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Point> images) {
  if (images.empty()) throw InvalidArgument("permutation degree must be at least 1");
  std::vector<bool> hit(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || hit[p]) throw InvalidArgument("images do not form a bijection");
    hit[p] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::cycles(std::size_t degree,
                                std::initializer_list<std::initializer_list<std::size_t>> cycles) {
  Permutation result = identity(degree);
  for (const auto& cyc : cycles) {
    std::vector<Point> c;
    for (std::size_t p : cyc) {
      if (p < 1 || p > degree) throw InvalidArgument("cycle point out of range");
      c.push_back(static_cast<Point>(p - 1));
    }
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    for (std::size_t k = 0; k < c.size(); ++k) img[c[k]] = c[(k + 1) % c.size()];
    result = result * from_images(std::move(img));
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  for (const auto& c : cycles_of(images_)) transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

std::size_t Permutation::fixed_point_count() const noexcept {
  std::size_t count = 0;
  for (Point i = 0; i < images_.size(); ++i) count += images_[i] == i;
  return count;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& c : cycles_of(images_)) result = std::lcm(result, std::uint64_t{c.size()});
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (Point i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::pow(std::int64_t exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                                 : static_cast<std::uint64_t>(exponent);
  Permutation result = identity(degree());
  while (e > 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

Permutation Permutation::padded(std::size_t degree) const {
  if (degree < images_.size()) throw InvalidArgument("cannot pad to a smaller degree");
  std::vector<Point> img = images_;
  for (Point i = static_cast<Point>(images_.size()); i < degree; ++i) img.push_back(i);
  return Permutation(std::move(img));
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  for (const auto& c : cycles_of(images_)) {
    if (c.size() == 1) continue;
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(c[k] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string Permutation::to_image_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i] + 1);
  }
  return out + "]";
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.degree() != rhs.degree()) throw DegreeMismatch(lhs.degree(), rhs.degree());
  std::vector<Point> img(lhs.degree());
  for (Point i = 0; i < img.size(); ++i) img[i] = lhs.images_[rhs.images_[i]];
  return Permutation(std::move(img));
}

Permutation parse_permutation(std::string_view text, std::optional<std::size_t> degree) {
  std::string_view body = trim(text);
  const std::size_t base_offset = static_cast<std::size_t>(body.data() - text.data());

  // Optional trailing attribute "deg=n".
  if (auto pos = body.rfind("deg="); pos != std::string_view::npos) {
    std::string_view num = trim(body.substr(pos + 4));
    std::size_t value = 0;
    if (num.empty()) fail("empty deg= attribute", base_offset + pos);
    for (char ch : num) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) fail("bad deg= attribute", base_offset + pos);
      value = value * 10 + static_cast<std::size_t>(ch - '0');
    }
    if (degree && *degree != value) throw DegreeMismatch(*degree, value);
    degree = value;
    body = trim(body.substr(0, pos));
  }
  if (body.empty()) fail("empty permutation text", base_offset);

  auto read_number = [&](std::size_t& i) {
    std::size_t value = 0;
    const std::size_t start = i;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
      value = value * 10 + static_cast<std::size_t>(body[i] - '0');
      ++i;
    }
    if (i == start) fail("expected a point", base_offset + i);
    if (value == 0) fail("points are 1-based", base_offset + start);
    return value;
  };
  auto skip = [&](std::size_t& i, bool commas) {
    while (i < body.size() && (std::isspace(static_cast<unsigned char>(body[i])) ||
                               (commas && body[i] == ',')))
      ++i;
  };

  if (body.front() == '[') {
    std::vector<Point> img;
    std::size_t i = 1;
    skip(i, false);
    while (i < body.size() && body[i] != ']') {
      img.push_back(static_cast<Point>(read_number(i) - 1));
      skip(i, false);
      if (i < body.size() && body[i] == ',') {
        ++i;
        skip(i, false);
      }
    }
    if (i + 1 != body.size()) fail("expected ']' at end", base_offset + i);
    if (degree && *degree != img.size()) throw DegreeMismatch(*degree, img.size());
    try {
      return Permutation::from_images(std::move(img));
    } catch (const InvalidArgument& e) {
      fail(e.what(), base_offset);
    }
  }

  if (body.front() != '(') fail("expected '[' or '('", base_offset);
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t max_point = 0;
  std::size_t i = 0;
  while (i < body.size()) {
    skip(i, false);
    if (i >= body.size()) break;
    if (body[i] != '(') fail("expected '('", base_offset + i);
    ++i;
    std::vector<std::size_t> cyc;
    skip(i, true);
    while (i < body.size() && body[i] != ')') {
      cyc.push_back(read_number(i));
      max_point = std::max(max_point, cyc.back());
      skip(i, true);
    }
    if (i >= body.size()) fail("unterminated cycle", base_offset + i);
    ++i;
    std::vector<std::size_t> sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail("repeated point inside a cycle", base_offset + i);
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  if (!degree) {
    if (max_point == 0) fail("identity '()' needs an explicit deg=n", base_offset);
    degree = max_point;
  }
  if (max_point > *degree) fail("point exceeds degree " + std::to_string(*degree), base_offset);

  Permutation result = Permutation::identity(*degree);
  for (const auto& cyc : cycles) {
    std::vector<Point> img(*degree);
    std::iota(img.begin(), img.end(), Point{0});
    for (std::size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k] - 1] = static_cast<Point>(cyc[(k + 1) % cyc.size()] - 1);
    result = result * Permutation::from_images(std::move(img));
  }
  return result;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

Rational hamming_distance(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
  std::int64_t differ = 0;
  for (Point i = 0; i < p.degree(); ++i) differ += p(i) != q(i);
  return Rational(differ, static_cast<std::int64_t>(p.degree()));
}

CycleType::CycleType(std::map<std::size_t, std::size_t> multiplicities) {
  for (auto [k, m] : multiplicities) {
    if (k == 0) throw InvalidArgument("cycle length must be positive");
    if (m == 0) continue;
    mult_[k] = m;
    degree_ += k * m;
  }
}

std::size_t CycleType::multiplicity(std::size_t length) const {
  auto it = mult_.find(length);
  return it == mult_.end() ? 0 : it->second;
}

bool CycleType::is_even() const {
  std::size_t transpositions = 0;
  for (auto [k, m] : mult_) transpositions += (k - 1) * m;
  return transpositions % 2 == 0;
}

bool CycleType::splits_in_alt() const {
  for (auto [k, m] : mult_)
    if (k % 2 == 0 || m > 1) return false;
  return true;
}

std::uint64_t CycleType::element_order() const {
  std::uint64_t result = 1;
  for (const auto& entry : mult_) result = std::lcm(result, std::uint64_t{entry.first});
  return result;
}

std::string CycleType::to_string() const {
  std::string out;
  for (auto [k, m] : mult_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(k) + "^" + std::to_string(m);
  }
  return out;
}

CycleType cycle_type(const Permutation& p) {
  std::map<std::size_t, std::size_t> mult;
  for (const auto& c : cycles_of(p.images())) ++mult[c.size()];
  return CycleType(std::move(mult));
}

LambdaProfile lambda_profile(const Permutation& p) {
  LambdaProfile out;
  const CycleType type = cycle_type(p);
  for (auto [k, m] : type.multiplicities())
    out[k] = Rational(static_cast<std::int64_t>(k * m), static_cast<std::int64_t>(p.degree()));
  return out;
}

BigInt centralizer_order_sym(const CycleType& type) {
  BigInt order = 1;
  for (auto [k, m] : type.multiplicities()) {
    for (std::size_t i = 0; i < m; ++i) order *= k;
    for (std::size_t i = 2; i <= m; ++i) order *= i;
  }
  return order;
}

std::optional<Permutation> find_conjugator(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
  auto by_length = [](const Permutation& x) {
    std::map<std::size_t, std::vector<std::vector<Point>>> groups;
    for (auto& c : cycles_of(x.images())) groups[c.size()].push_back(std::move(c));
    return groups;
  };
  const auto pc = by_length(p);
  const auto qc = by_length(q);
  if (pc.size() != qc.size()) return std::nullopt;
  std::vector<Point> x(p.degree());
  for (const auto& [len, cycles] : pc) {
    auto it = qc.find(len);
    if (it == qc.end() || it->second.size() != cycles.size()) return std::nullopt;
    for (std::size_t j = 0; j < cycles.size(); ++j)
      for (std::size_t t = 0; t < len; ++t) x[cycles[j][t]] = it->second[j][t];
  }
  return Permutation::from_images(std::move(x));
}

bool conjugacy_test(const Permutation& p, const Permutation& q, Ambient ambient) {
  if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
  if (ambient == Ambient::Alt && (!p.is_even() || !q.is_even()))
    throw InvalidArgument("conjugacy in Alt(n) needs even permutations");
  auto x = find_conjugator(p, q);
  if (!x) return false;
  if (ambient == Ambient::Sym || !cycle_type(p).splits_in_alt()) return true;
  // Split class: C_Sym(p) consists of even permutations only, so every
  // conjugator has the parity of x.
  return x->is_even();
}

Rational min_conjugate_distance(const Permutation& g, const Permutation& h,
                                std::size_t degree_cap) {
  if (g.degree() != h.degree()) throw DegreeMismatch(g.degree(), h.degree());
  const std::size_t n = g.degree();
  if (n > degree_cap)
    throw CapExceeded("min_conjugate_distance: degree " + std::to_string(n) + " exceeds cap " +
                      std::to_string(degree_cap));
  std::vector<Point> x(n);
  std::iota(x.begin(), x.end(), Point{0});
  std::size_t best = n;
  do {
    // (x h x^-1)(x(i)) = x(h(i)); compare against g at the point x(i).
    std::size_t differ = 0;
    for (Point i = 0; i < n; ++i) differ += g(x[i]) != x[h(i)];
    best = std::min(best, differ);
  } while (best > 0 && std::next_permutation(x.begin(), x.end()));
  return Rational(static_cast<std::int64_t>(best), static_cast<std::int64_t>(n));
}

std::size_t hash_points(std::span<const Point> points) noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ points.size();
  for (Point p : points) {
    h ^= p + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  h ^= h >> 33;
  return static_cast<std::size_t>(h);
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  return hash_points(p.images());
}

}  // namespace soficlab
