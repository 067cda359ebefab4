#include "soficlab/logic_parser.hpp"

#include <algorithm>
#include <cctype>

#include "soficlab/errors.hpp"

namespace soficlab::logic {

namespace {

enum class Tok { Ident, Number, LParen, RParen, LBrack, RBrack, Comma, Dot, Star, Eq, Bang, Amp, Pipe, Arrow, Inv, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

std::string describe(const Token& t) { return t.kind == Tok::End ? "end of input" : "'" + t.text + "'"; }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t l = line, cc = col;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    if (s.substr(i, 3) == "^-1") {
      out.push_back({Tok::Inv, "^-1", l, cc});
      advance(3);
      continue;
    }
    if (s.substr(i, 2) == "->") {
      out.push_back({Tok::Arrow, "->", l, cc});
      advance(2);
      continue;
    }
    Tok k;
    switch (c) {
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '[': k = Tok::LBrack; break;
      case ']': k = Tok::RBrack; break;
      case ',': k = Tok::Comma; break;
      case '.': k = Tok::Dot; break;
      case '*': k = Tok::Star; break;
      case '=': k = Tok::Eq; break;
      case '!': k = Tok::Bang; break;
      case '&': k = Tok::Amp; break;
      case '|': k = Tok::Pipe; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", l, cc);
    }
    out.push_back({k, std::string(1, c), l, cc});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

bool is_keyword(std::string_view s) { return s == "forall" || s == "exists"; }

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options)
      : toks_(lex(text)),
        options_(options),
        registry_(options.registry ? *options.registry : MacroRegistry::builtin()) {}

  Formula formula_to_end() {
    auto f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

  Term term_to_end() {
    auto t = term();
    expect(Tok::End, "end of input");
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  bool at(Tok k) const { return peek().kind == k; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& what, const Token& t) const { throw ParseError(what, t.line, t.col); }

  const Token& expect(Tok k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what + ", found " + describe(peek()), peek());
    return take();
  }

  bool is_macro_start() const {
    return at(Tok::Ident) && peek(1).kind == Tok::LParen && !is_keyword(peek().text);
  }

  Formula formula() {
    if (at(Tok::Ident) && is_keyword(peek().text)) {
      const bool universal = take().text == "forall";
      const auto& v = expect(Tok::Ident, "variable");
      if (is_keyword(v.text)) fail("keyword used as variable", v);
      std::string var = v.text;
      expect(Tok::Dot, "'.'");
      scope_.push_back(var);
      auto body = formula();
      scope_.pop_back();
      return universal ? Formula::forall(std::move(var), std::move(body))
                       : Formula::exists(std::move(var), std::move(body));
    }
    auto lhs = disjunction();
    if (at(Tok::Arrow)) {
      take();
      return Formula::implication(std::move(lhs), formula());
    }
    return lhs;
  }

  Formula disjunction() {
    auto f = conjunction();
    while (at(Tok::Pipe)) {
      take();
      f = Formula::disjunction(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    auto f = unit();
    while (at(Tok::Amp)) {
      take();
      f = Formula::conjunction(std::move(f), unit());
    }
    return f;
  }

  // Index of the token after the parenthesis matching the one at pos_.
  std::size_t after_matching_paren() const {
    int depth = 0;
    for (std::size_t i = pos_; i < toks_.size(); ++i) {
      const Tok k = toks_[i].kind;
      if (k == Tok::LParen || k == Tok::LBrack) ++depth;
      if (k == Tok::RParen || k == Tok::RBrack) {
        if (--depth == 0) return i + 1;
      }
    }
    return toks_.size() - 1;
  }

  Formula unit() {
    if (at(Tok::Bang)) {
      take();
      return Formula::negation(unit());
    }
    if (at(Tok::LParen)) {
      const Tok next = toks_[std::min(after_matching_paren(), toks_.size() - 1)].kind;
      if (next != Tok::Eq && next != Tok::Star && next != Tok::Inv) {
        take();
        auto f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
    }
    if (is_macro_start()) {
      const Token& name = peek();
      const MacroDef* def = registry_.find(name.text);
      if (!def) fail("unknown macro '" + name.text + "'", name);
      if (def->result != MacroResult::Predicate) fail("set-valued macro '" + name.text + "' used as a formula", name);
      return Formula::macro(macro_call());
    }
    if (at(Tok::Ident) && is_keyword(peek().text)) fail("quantifier must be parenthesized here", peek());
    auto lhs = term();
    expect(Tok::Eq, "'='");
    return Formula::equals(std::move(lhs), term());
  }

  MacroCall macro_call() {
    const Token& name = take();
    const MacroDef* def = registry_.find(name.text);
    if (!def) fail("unknown macro '" + name.text + "'", name);
    expect(Tok::LParen, "'('");
    MacroCall call{name.text, {}};
    if (!at(Tok::RParen)) {
      do {
        const std::size_t i = call.args.size();
        if (i >= def->params.size() && !def->variadic) fail("too many arguments to " + def->name, peek());
        const ParamKind kind = def->params[std::min(i, def->params.size() - 1)];
        call.args.push_back(macro_arg(kind));
      } while (at(Tok::Comma) && (take(), true));
    }
    const Token& close = expect(Tok::RParen, "')'");
    if (call.args.size() < def->params.size())
      fail(def->name + " expects " + std::to_string(def->params.size()) + (def->variadic ? " or more" : "") +
               " arguments",
           close);
    return call;
  }

  bool at_set_macro() const {
    if (!is_macro_start()) return false;
    const MacroDef* def = registry_.find(peek().text);
    return def && def->result == MacroResult::Set;
  }

  MacroArg macro_arg(ParamKind kind) {
    switch (kind) {
      case ParamKind::Integer: {
        const Token& t = expect(Tok::Number, "integer");
        try {
          return MacroArg::integer(std::stoll(t.text));
        } catch (const std::exception&) {
          fail("integer out of range", t);
        }
      }
      case ParamKind::Reading: {
        const Token& t = expect(Tok::Ident, "'literal' or 'generated'");
        if (t.text == "literal") return MacroArg::reading(PowerReading::LiteralIntersection);
        if (t.text == "generated") return MacroArg::reading(PowerReading::GeneratedSubgroup);
        fail("expected 'literal' or 'generated', found '" + t.text + "'", t);
      }
      case ParamKind::Set:
        if (!at_set_macro()) {
          if (is_macro_start() && !registry_.find(peek().text)) fail("unknown macro '" + peek().text + "'", peek());
          fail("expected a set expression", peek());
        }
        return MacroArg::set(macro_call());
      case ParamKind::ElementOrSet:
        if (at_set_macro()) return MacroArg::set(macro_call());
        if (is_macro_start()) {
          if (!registry_.find(peek().text)) fail("unknown macro '" + peek().text + "'", peek());
          fail("predicate macro '" + peek().text + "' used as an argument", peek());
        }
        return MacroArg::element(term());
      case ParamKind::Element:
        return MacroArg::element(term());
    }
    fail("bad parameter kind", peek());
  }

  Term term() {
    auto t = factor();
    while (at(Tok::Star)) {
      take();
      t = Term::product(std::move(t), factor());
    }
    return t;
  }

  Term factor() {
    auto t = base();
    if (at(Tok::Inv)) {
      take();
      t = Term::inverse(std::move(t));
    }
    return t;
  }

  Term base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: {
        if (is_keyword(t.text)) fail("keyword '" + t.text + "' used as a term", t);
        if (peek(1).kind == Tok::LParen) {
          if (registry_.find(t.text)) fail("macro '" + t.text + "' used as a term", t);
          fail("unknown macro '" + t.text + "'", t);
        }
        take();
        if (options_.sentence && std::find(scope_.begin(), scope_.end(), t.text) == scope_.end() &&
            std::find(options_.free_variables.begin(), options_.free_variables.end(), t.text) ==
                options_.free_variables.end())
          fail("unbound variable '" + t.text + "'", t);
        return Term::variable(t.text);
      }
      case Tok::Number:
        if (t.text != "1") fail("only the identity '1' may appear as a numeral in a term", t);
        take();
        return Term::one();
      case Tok::LBrack: {
        take();
        auto a = term();
        expect(Tok::Comma, "','");
        auto b = term();
        expect(Tok::RBrack, "']'");
        return Term::commutator(std::move(a), std::move(b));
      }
      case Tok::LParen: {
        take();
        auto a = term();
        expect(Tok::RParen, "')'");
        return a;
      }
      default: fail("expected a term, found " + describe(t), t);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const ParseOptions& options_;
  const MacroRegistry& registry_;
  std::vector<std::string> scope_;
};

}  // namespace

Formula parse_formula(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).formula_to_end();
}

Formula parse_sentence(std::string_view text, const MacroRegistry* registry) {
  ParseOptions options;
  options.sentence = true;
  options.registry = registry;
  return parse_formula(text, options);
}

Term parse_term(std::string_view text) { return Parser(text, {}).term_to_end(); }

}  // namespace soficlab::logic
