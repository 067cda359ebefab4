#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "soficlab/permutation.hpp"

namespace soficlab {

/// A formal group word over named symbols: products, inverses and
/// commutators. Immutable; subtrees are shared.
class Word {
 public:
  enum class Kind { Symbol, Identity, Product, Inverse, Commutator };

  static Word symbol(std::string name);
  static Word identity();
  static Word product(Word lhs, Word rhs);
  static Word inverse(Word inner);
  static Word commutator(Word lhs, Word rhs);

  Kind kind() const;
  const std::string& name() const;
  const Word& lhs() const;
  const Word& rhs() const;

  std::string to_string() const;

 private:
  struct Node;
  explicit Word(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// word := factor {("*" | "·") factor}; factor := base {"^-1" | "⁻¹"};
/// base := ident | "1" | "[" word "," word "]" | "(" word ")".
Word parse_word(std::string_view text);

using Assignment = std::map<std::string, Permutation, std::less<>>;

/// Evaluates under (p * q)(i) = p(q(i)). Throws InvalidArgument on an unbound
/// symbol and DegreeMismatch when assigned permutations differ in degree.
Permutation evaluate_word(const Word& word, const Assignment& assignment);

}  // namespace soficlab
