#include "lcsoc/expr.hpp"

#include <algorithm>
#include <cctype>

#include "lcsoc/error.hpp"

namespace lcsoc {

namespace {

struct Token {
  enum Kind { Ident, Number, Plus, Minus, Star, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
        ++i;
      out.push_back({Token::Ident, src.substr(start, i - start), start});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Token::Number, src.substr(start, i - start), start});
    } else {
      Token::Kind k;
      switch (c) {
        case '+': k = Token::Plus; break;
        case '-': k = Token::Minus; break;
        case '*': k = Token::Star; break;
        case '^': k = Token::Caret; break;
        case '(': k = Token::LParen; break;
        case ')': k = Token::RParen; break;
        default:
          throw ParseError("unexpected character", start, std::string(1, c));
      }
      out.push_back({k, std::string(1, c), start});
      ++i;
    }
  }
  out.push_back({Token::End, "", src.size()});
  return out;
}

// Polynomial over all declared variables, used only during parsing.
using TermMap = std::map<ExponentVec, Scalar>;

void add_term(TermMap& m, const ExponentVec& e, const Scalar& c, const Field& f) {
  auto it = m.find(e);
  if (it == m.end()) {
    if (!(c == f.zero())) m.emplace(e, c);
    return;
  }
  Scalar s = it->second + c;
  if (s == f.zero())
    m.erase(it);
  else
    it->second = s;
}

TermMap mul(const TermMap& a, const TermMap& b, const Field& f) {
  TermMap out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      ExponentVec e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_term(out, e, ca * cb, f);
    }
  return out;
}

class Parser {
 public:
  Parser(const std::string& src, const std::vector<std::string>& vars, const Field& field)
      : vars_(vars), field_(field), tokens_(lex(src)) {}

  TermMap parse() {
    TermMap result = parse_expr();
    if (peek().kind != Token::End)
      throw ParseError("trailing input after expression", peek().pos, peek().text);
    return result;
  }

 private:
  const std::vector<std::string>& vars_;
  const Field& field_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;

  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  TermMap parse_expr() {
    TermMap acc = parse_signed_term();
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      bool minus = take().kind == Token::Minus;
      TermMap t = parse_signed_term();
      for (const auto& [e, c] : t) add_term(acc, e, minus ? -c : c, field_);
    }
    return acc;
  }

  TermMap parse_signed_term() {
    bool minus = false;
    while (peek().kind == Token::Plus || peek().kind == Token::Minus)
      if (take().kind == Token::Minus) minus = !minus;
    TermMap t = parse_term();
    if (minus) {
      TermMap neg;
      for (const auto& [e, c] : t) neg.emplace(e, -c);
      return neg;
    }
    return t;
  }

  static bool starts_factor(Token::Kind k) {
    return k == Token::Ident || k == Token::Number || k == Token::LParen;
  }

  TermMap parse_term() {
    TermMap acc = parse_factor();
    for (;;) {
      if (peek().kind == Token::Star) {
        take();
        if (!starts_factor(peek().kind))
          throw ParseError("expected a factor after '*'", peek().pos, peek().text);
        acc = mul(acc, parse_factor(), field_);
      } else if (starts_factor(peek().kind)) {
        acc = mul(acc, parse_factor(), field_);
      } else {
        break;
      }
    }
    return acc;
  }

  TermMap parse_factor() {
    TermMap base = parse_atom();
    if (peek().kind == Token::Caret) {
      take();
      if (peek().kind != Token::Number)
        throw ParseError("exponent must be a nonnegative integer", peek().pos, peek().text);
      Token t = take();
      long long e = 0;
      for (char c : t.text) {
        e = e * 10 + (c - '0');
        if (e > 4096) throw ParseError("exponent too large", t.pos, t.text);
      }
      TermMap acc = constant(field_.one());
      for (long long i = 0; i < e; ++i) acc = mul(acc, base, field_);
      return acc;
    }
    return base;
  }

  TermMap constant(const Scalar& c) const {
    TermMap m;
    if (!(c == field_.zero())) m.emplace(ExponentVec(vars_.size(), 0), c);
    return m;
  }

  TermMap parse_atom() {
    Token t = take();
    switch (t.kind) {
      case Token::Number: {
        long long v = 0;
        for (char c : t.text) {
          v = v * 10 + (c - '0');
          if (v > (1LL << 40)) throw ParseError("integer literal too large", t.pos, t.text);
        }
        return constant(field_.from_int(v));
      }
      case Token::Ident: {
        auto it = std::find(vars_.begin(), vars_.end(), t.text);
        if (it == vars_.end())
          throw ParseError("unknown variable", t.pos, t.text);
        ExponentVec e(vars_.size(), 0);
        e[static_cast<std::size_t>(it - vars_.begin())] = 1;
        TermMap m;
        m.emplace(std::move(e), field_.one());
        return m;
      }
      case Token::LParen: {
        TermMap inner = parse_expr();
        if (peek().kind != Token::RParen)
          throw ParseError("expected ')'", peek().pos, peek().text);
        take();
        return inner;
      }
      default:
        throw ParseError("expected a number, variable, or '('", t.pos, t.text);
    }
  }
};

}  // namespace

std::map<ExponentVec, Scalar> parse_polynomial(const std::string& text,
                                               const std::vector<std::string>& var_names,
                                               const Field& field) {
  return Parser(text, var_names, field).parse();
}

ExponentVec parse_plain_monomial(const std::string& text,
                                 const std::vector<std::string>& var_names) {
  Field q(0);
  TermMap m = parse_polynomial(text, var_names, q);
  if (m.size() != 1)
    throw ParseError("expected a single monomial", 0, text);
  const auto& [e, c] = *m.begin();
  if (!(c == q.one()))
    throw ParseError("expected a monomial with coefficient 1", 0, text);
  return e;
}

}  // namespace lcsoc
