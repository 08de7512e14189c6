#include <composita/parser.hpp>

#include <composita/error.hpp>

#include <cctype>
#include <string>
#include <vector>

namespace composita {

namespace {

enum class Tok { end, plus, minus, star, slash, caret, lparen, rparen, comma, uint_lit, name };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    switch (c) {
      case '+': tokens.push_back({Tok::plus, start, "+"}); ++i; continue;
      case '-': tokens.push_back({Tok::minus, start, "-"}); ++i; continue;
      case '*': tokens.push_back({Tok::star, start, "*"}); ++i; continue;
      case '/': tokens.push_back({Tok::slash, start, "/"}); ++i; continue;
      case '^': tokens.push_back({Tok::caret, start, "^"}); ++i; continue;
      case '(': tokens.push_back({Tok::lparen, start, "("}); ++i; continue;
      case ')': tokens.push_back({Tok::rparen, start, ")"}); ++i; continue;
      case ',': tokens.push_back({Tok::comma, start, ","}); ++i; continue;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      tokens.push_back({Tok::uint_lit, start, std::string(text.substr(start, i - start))});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      tokens.push_back({Tok::name, start, std::string(text.substr(start, i - start))});
      continue;
    }
    throw syntax_error(start, "a number, name, or one of + - * / ^ ( ) ,",
                       std::string("unexpected character '") + c + "'");
  }
  tokens.push_back({Tok::end, text.size(), ""});
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ExprPtr run() {
    ExprPtr e = expr();
    if (peek().kind != Tok::end)
      throw syntax_error(peek().offset, "end of input", "trailing input '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return tokens_[i < tokens_.size() ? i : tokens_.size() - 1];
  }
  const Token& advance() { return tokens_[pos_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok kind, const char* expected) {
    if (peek().kind != kind)
      throw syntax_error(peek().offset, expected,
                         peek().kind == Tok::end ? std::string("unexpected end of input")
                                                 : "unexpected '" + peek().text + "'");
    return advance();
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (true) {
      if (accept(Tok::plus)) e = make_add(std::move(e), term());
      else if (accept(Tok::minus)) e = make_sub(std::move(e), term());
      else return e;
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (true) {
      if (accept(Tok::star)) {
        e = make_mul(std::move(e), factor());
      } else if (accept(Tok::slash)) {
        // a/b is multiplication by inv(b)
        e = make_mul(std::move(e), make_inv(factor()));
      } else {
        return e;
      }
    }
  }

  ExprPtr factor() {
    if (accept(Tok::minus)) {
      // the sign binds the whole base-with-exponent, as in -x^2
      return make_neg(exponentiated_base());
    }
    return exponentiated_base();
  }

  ExprPtr exponentiated_base() {
    ExprPtr e = base();
    if (accept(Tok::caret)) {
      const Token& t = expect(Tok::uint_lit, "a positive integer exponent");
      Integer exponent(t.text);
      if (exponent < 1)
        throw syntax_error(t.offset, "a positive integer exponent", "exponent 0 is not allowed");
      e = make_pow(std::move(e), std::move(exponent));
    }
    return e;
  }

  ExprPtr base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::lparen: {
        advance();
        ExprPtr e = expr();
        expect(Tok::rparen, "')'");
        return e;
      }
      case Tok::uint_lit: {
        advance();
        // uint "/" uint is a literal unless an operator of equal or
        // higher precedence follows the denominator
        if (peek().kind == Tok::slash && peek(1).kind == Tok::uint_lit) {
          const Tok after = peek(2).kind;
          if (after != Tok::star && after != Tok::slash && after != Tok::caret) {
            advance();  // '/'
            const Token& den = advance();
            if (Integer(den.text) == 0)
              throw syntax_error(den.offset, "a nonzero denominator",
                                 "rational literal with zero denominator");
            return make_constant(make_rational(Integer(t.text), Integer(den.text)));
          }
        }
        return make_constant(Rational(Integer(t.text)));
      }
      case Tok::name: {
        advance();
        if (t.text == "x") return make_variable();
        if (t.text == "log1p" || t.text == "expm1" || t.text == "inv" || t.text == "rev") {
          expect(Tok::lparen, "'('");
          ExprPtr arg = expr();
          expect(Tok::rparen, "')'");
          if (t.text == "log1p") return make_log1p(std::move(arg));
          if (t.text == "expm1") return make_expm1(std::move(arg));
          if (t.text == "inv") return make_inv(std::move(arg));
          return make_rev(std::move(arg));
        }
        if (t.text == "compose") {
          expect(Tok::lparen, "'('");
          ExprPtr outer = expr();
          expect(Tok::comma, "','");
          ExprPtr inner = expr();
          expect(Tok::rparen, "')'");
          return make_compose(std::move(outer), std::move(inner));
        }
        throw syntax_error(t.offset, "x, log1p, expm1, inv, rev or compose",
                           "unknown name '" + t.text + "'");
      }
      default:
        throw syntax_error(t.offset, "a number, 'x', a function call or '('",
                           t.kind == Tok::end ? std::string("unexpected end of input")
                                              : "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(lex(text)).run(); }

}  // namespace composita
