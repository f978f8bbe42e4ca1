#include "diffeocert/parse.hpp"

#include <cctype>
#include <optional>

namespace diffeocert {
namespace {

struct Token {
  enum Kind { Number, Variable, Caret, Star, Plus, Minus, End } kind;
  std::size_t position;
  Rational value;  // Number
  int index = 0;   // Variable (1-based)
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_space();
    const std::size_t pos = i_;
    if (i_ >= text_.size()) return {Token::End, pos, 0, 0};
    const char c = text_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) return lex_number(pos);
    switch (c) {
      case '^': ++i_; return {Token::Caret, pos, 0, 0};
      case '*': ++i_; return {Token::Star, pos, 0, 0};
      case '+': ++i_; return {Token::Plus, pos, 0, 0};
      case '-': ++i_; return {Token::Minus, pos, 0, 0};
      default: break;
    }
    if (c == 'x' && i_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_ + 1]))) {
      ++i_;
      long idx = 0;
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
        idx = idx * 10 + (text_[i_] - '0');
        if (idx > 1000000) throw ParseError("variable index too large", pos);
        ++i_;
      }
      return {Token::Variable, pos, 0, static_cast<int>(idx)};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      throw ParseError("unexpected identifier (unbound parameter?)", pos);
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }

 private:
  void skip_space() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }

  Token lex_number(std::size_t pos) {
    std::string digits;
    while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) digits += text_[i_++];
    // Allow "p / q" with optional whitespace around the slash.
    std::size_t save = i_;
    skip_space();
    if (i_ < text_.size() && text_[i_] == '/') {
      ++i_;
      skip_space();
      std::string den;
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) den += text_[i_++];
      if (den.empty()) throw ParseError("expected denominator digits after '/'", i_);
      if (den.find_first_not_of('0') == std::string::npos)
        throw ParseError("zero denominator", pos);
      return {Token::Number, pos, Rational(digits + "/" + den), 0};
    }
    i_ = save;
    return {Token::Number, pos, Rational(digits), 0};
  }

  const std::string& text_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  Parser(const std::string& text, int dimension)
      : lexer_(text), dimension_(dimension), current_(lexer_.next()) {}

  Polynomial parse() {
    Polynomial result(dimension_);
    if (current_.kind == Token::End) throw ParseError("empty polynomial expression", 0);
    bool expect_term = true;
    while (current_.kind != Token::End) {
      int sign = 1;
      bool saw_sign = false;
      while (current_.kind == Token::Plus || current_.kind == Token::Minus) {
        if (current_.kind == Token::Minus) sign = -sign;
        saw_sign = true;
        advance();
      }
      if (!expect_term && !saw_sign)
        throw ParseError("expected '+' or '-' between terms", current_.position);
      parse_term(result, sign);
      expect_term = false;
    }
    return result;
  }

 private:
  void advance() { current_ = lexer_.next(); }

  bool at_factor() const {
    return current_.kind == Token::Number || current_.kind == Token::Variable;
  }

  void parse_term(Polynomial& out, int sign) {
    if (!at_factor()) throw ParseError("expected a coefficient or variable", current_.position);
    Rational coeff = sign;
    ExponentVector alpha(dimension_, 0);
    bool more = true;
    while (more) {
      if (current_.kind == Token::Number) {
        coeff *= current_.value;
        advance();
      } else {  // Variable
        const int index = current_.index;
        const std::size_t pos = current_.position;
        if (index < 1 || index > dimension_)
          throw ParseError("variable index out of range for dimension " + std::to_string(dimension_), pos);
        advance();
        int exponent = 1;
        if (current_.kind == Token::Caret) {
          advance();
          if (current_.kind != Token::Number)
            throw ParseError("expected a nonnegative integer exponent after '^'", current_.position);
          const Rational& e = current_.value;
          if (boost::multiprecision::denominator(e) != 1 || e < 0 || e > 1000000)
            throw ParseError("exponent must be a nonnegative integer", current_.position);
          exponent = e.convert_to<int>();
          advance();
        }
        alpha[index - 1] += exponent;
      }
      if (current_.kind == Token::Star) {
        advance();
        if (!at_factor()) throw ParseError("expected a factor after '*'", current_.position);
      } else {
        more = at_factor();  // implicit product, e.g. "2x1" or "x1x2"
      }
    }
    out.add_term(alpha, coeff);
  }

  Lexer lexer_;
  int dimension_;
  Token current_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int dimension) {
  if (dimension < 1) throw std::invalid_argument("polynomial dimension must be >= 1");
  return Parser(text, dimension).parse();
}

}  // namespace diffeocert
