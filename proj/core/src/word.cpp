#include "soficlab/word.hpp"

#include <cctype>
#include <vector>

#include "soficlab/errors.hpp"

namespace soficlab {

struct Word::Node {
  Kind kind;
  std::string name;
  std::vector<Word> children;
};

Word Word::symbol(std::string name) {
  if (name.empty()) throw InvalidArgument("empty symbol name");
  return Word(std::make_shared<const Node>(Node{Kind::Symbol, std::move(name), {}}));
}
Word Word::identity() { return Word(std::make_shared<const Node>(Node{Kind::Identity, {}, {}})); }
Word Word::product(Word lhs, Word rhs) {
  return Word(std::make_shared<const Node>(Node{Kind::Product, {}, {std::move(lhs), std::move(rhs)}}));
}
Word Word::inverse(Word inner) {
  return Word(std::make_shared<const Node>(Node{Kind::Inverse, {}, {std::move(inner)}}));
}
Word Word::commutator(Word lhs, Word rhs) {
  return Word(std::make_shared<const Node>(Node{Kind::Commutator, {}, {std::move(lhs), std::move(rhs)}}));
}

Word::Kind Word::kind() const { return node_->kind; }
const std::string& Word::name() const { return node_->name; }
const Word& Word::lhs() const { return node_->children.at(0); }
const Word& Word::rhs() const { return node_->children.at(1); }

std::string Word::to_string() const {
  switch (kind()) {
    case Kind::Symbol: return name();
    case Kind::Identity: return "1";
    case Kind::Product: {
      std::string r = rhs().to_string();
      if (rhs().kind() == Kind::Product) r = "(" + r + ")";
      return lhs().to_string() + "*" + r;
    }
    case Kind::Inverse: {
      std::string inner = lhs().to_string();
      if (lhs().kind() == Kind::Product || lhs().kind() == Kind::Inverse) inner = "(" + inner + ")";
      return inner + "^-1";
    }
    case Kind::Commutator: return "[" + lhs().to_string() + "," + rhs().to_string() + "]";
  }
  return {};
}

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    Word w = word();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError("word: " + msg, 1, pos_ + 1); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(std::string_view token) {
    skip();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  Word word() {
    Word w = factor();
    while (accept("*") || accept("·")) w = Word::product(w, factor());
    return w;
  }
  Word factor() {
    Word w = base();
    while (accept("^-1") || accept("⁻¹")) w = Word::inverse(w);
    return w;
  }
  Word base() {
    skip();
    if (accept("[")) {
      Word a = word();
      expect(",");
      Word b = word();
      expect("]");
      return Word::commutator(a, b);
    }
    if (accept("(")) {
      Word w = word();
      expect(")");
      return w;
    }
    if (pos_ < text_.size() && text_[pos_] == '1') {
      ++pos_;
      return Word::identity();
    }
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return Word::symbol(std::string(text_.substr(start, pos_ - start)));
    }
    fail("expected a symbol, '1', '[' or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::size_t word_degree(const Word& w, const Assignment& a) {
  switch (w.kind()) {
    case Word::Kind::Symbol: {
      auto it = a.find(w.name());
      if (it == a.end()) throw InvalidArgument("unbound symbol '" + w.name() + "'");
      return it->second.degree();
    }
    case Word::Kind::Identity: return 0;
    case Word::Kind::Inverse: return word_degree(w.lhs(), a);
    default: {
      const std::size_t l = word_degree(w.lhs(), a);
      const std::size_t r = word_degree(w.rhs(), a);
      if (l && r && l != r) throw DegreeMismatch(l, r);
      return l ? l : r;
    }
  }
}

Permutation eval(const Word& w, const Assignment& a, std::size_t degree) {
  switch (w.kind()) {
    case Word::Kind::Symbol: return a.find(w.name())->second;
    case Word::Kind::Identity: return Permutation::identity(degree);
    case Word::Kind::Product: return eval(w.lhs(), a, degree) * eval(w.rhs(), a, degree);
    case Word::Kind::Inverse: return eval(w.lhs(), a, degree).inverse();
    case Word::Kind::Commutator: return commutator(eval(w.lhs(), a, degree), eval(w.rhs(), a, degree));
  }
  throw InvalidArgument("corrupt word");
}

}  // namespace

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

Permutation evaluate_word(const Word& word, const Assignment& assignment) {
  std::size_t degree = word_degree(word, assignment);
  if (degree == 0) {
    // Only identities: use the common degree of the assignment, if any.
    for (const auto& [name, p] : assignment) {
      if (degree && p.degree() != degree) throw DegreeMismatch(degree, p.degree());
      degree = p.degree();
    }
    if (degree == 0) throw InvalidArgument("cannot infer degree of a symbol-free word");
  }
  return eval(word, assignment, degree);
}

}  // namespace soficlab
