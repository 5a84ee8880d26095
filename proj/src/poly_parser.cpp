#include "pqn/poly_parser.hpp"

#include <cctype>

#include "pqn/error.hpp"

namespace pqn {

namespace {

struct Token {
  enum class Kind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
  Kind kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skipSpace();
    const int line = line_, column = column_;
    if (pos_ >= text_.size()) return {Token::Kind::End, "", line, column};
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        digits += take();
      return {Token::Kind::Number, digits, line, column};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ident += take();
      return {Token::Kind::Ident, ident, line, column};
    }
    take();
    switch (c) {
      case '+': return {Token::Kind::Plus, "+", line, column};
      case '-': return {Token::Kind::Minus, "-", line, column};
      case '*': return {Token::Kind::Star, "*", line, column};
      case '^': return {Token::Kind::Caret, "^", line, column};
      case '/': return {Token::Kind::Slash, "/", line, column};
      case '(': return {Token::Kind::LParen, "(", line, column};
      case ')': return {Token::Kind::RParen, ")", line, column};
      default:
        throw ParseError(std::string("unexpected character '") + c + "' in polynomial", line,
                         column);
    }
  }

 private:
  char take() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }
  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) take();
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  Parser(const std::string& text, const Chart& chart)
      : chart_(chart), lexer_(text), current_(lexer_.next()) {}

  Polynomial parse() {
    Polynomial p = expr();
    expect(Token::Kind::End, "end of input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, current_.line, current_.column);
  }

  void advance() { current_ = lexer_.next(); }

  void expect(Token::Kind kind, const char* what) {
    if (current_.kind != kind)
      fail(std::string("expected ") + what + ", found '" +
           (current_.kind == Token::Kind::End ? "<end>" : current_.text) + "'");
    if (kind != Token::Kind::End) advance();
  }

  Polynomial expr() {
    bool negate = false;
    if (current_.kind == Token::Kind::Plus || current_.kind == Token::Kind::Minus) {
      negate = current_.kind == Token::Kind::Minus;
      advance();
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (current_.kind == Token::Kind::Plus || current_.kind == Token::Kind::Minus) {
      const bool minus = current_.kind == Token::Kind::Minus;
      advance();
      Polynomial t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (current_.kind == Token::Kind::Star) {
      advance();
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (current_.kind == Token::Kind::Caret) {
      advance();
      if (current_.kind != Token::Kind::Number) fail("exponent must be a nonnegative integer");
      const Token expTok = current_;
      advance();
      unsigned long exponent = 0;
      try {
        exponent = std::stoul(expTok.text);
      } catch (const std::exception&) {
        throw ParseError("exponent out of range", expTok.line, expTok.column);
      }
      if (exponent > static_cast<unsigned long>(polynomialDegreeCap()))
        throw ParseError("exponent " + expTok.text + " exceeds degree cap " +
                             std::to_string(polynomialDegreeCap()),
                         expTok.line, expTok.column);
      Polynomial acc = Polynomial::constant(chart_.dim(), Rational(1));
      for (unsigned long i = 0; i < exponent; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  Polynomial atom() {
    const Token tok = current_;
    switch (tok.kind) {
      case Token::Kind::Number: {
        advance();
        if (current_.kind == Token::Kind::Slash) {
          advance();
          if (current_.kind != Token::Kind::Number) fail("denominator must be an integer");
          const Token den = current_;
          advance();
          try {
            return Polynomial::constant(chart_.dim(),
                                        Rational::fromString(tok.text + "/" + den.text));
          } catch (const Error& e) {
            throw ParseError(e.what(), den.line, den.column);
          }
        }
        return Polynomial::constant(chart_.dim(), Rational::fromString(tok.text));
      }
      case Token::Kind::Ident: {
        advance();
        const auto axis = chart_.axisOf(tok.text);
        if (!axis)
          throw ParseError("unknown variable '" + tok.text + "'", tok.line, tok.column);
        return Polynomial::variable(chart_.dim(), *axis);
      }
      case Token::Kind::LParen: {
        advance();
        Polynomial inner = expr();
        expect(Token::Kind::RParen, "')'");
        return inner;
      }
      default:
        fail("expected a number, variable or '('");
    }
  }

  const Chart& chart_;
  Lexer lexer_;
  Token current_;
};

}  // namespace

Polynomial parsePolynomial(const std::string& text, const Chart& chart) {
  try {
    return Parser(text, chart).parse();
  } catch (const DegreeCapError& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

}  // namespace pqn
