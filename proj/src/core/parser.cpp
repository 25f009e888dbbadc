#include "core/parser.hpp"

#include <cctype>
#include <set>

#include "core/error.hpp"

namespace nf {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& variables)
      : text_(text), variables_(variables) {}

  PolynomialGerm run() {
    PolynomialGerm germ(variables_);
    skip_space();
    if (at_end()) throw ParseError(pos_, "empty polynomial");
    bool first = true;
    while (true) {
      skip_space();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        throw ParseError(pos_, "expected '+' or '-'");
      }
      first = false;
      auto [k, c] = term();
      germ.add_term(k, sign < 0 ? Rational(-c) : c);
      skip_space();
      if (at_end()) break;
    }
    return germ;
  }

 private:
  std::pair<Exponent, Rational> term() {
    std::vector<Int> k(variables_.size(), 0);
    Rational c(1);
    bool any = false;
    while (true) {
      skip_space();
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= number();
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t where = pos_;
        std::string name = identifier();
        std::size_t j = variable_index(name, where);
        Int e = 1;
        skip_space();
        if (peek() == '^') {
          ++pos_;
          e = exponent();
        }
        k[j] = checked_add(k[j], e);
      } else {
        if (!any) throw ParseError(pos_, at_end() ? "unexpected end of input" : "expected a term");
        throw ParseError(pos_, "expected a factor after '*'");
      }
      any = true;
      skip_space();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      char next = peek();
      if (std::isalnum(static_cast<unsigned char>(next)) || next == '_') continue;
      break;
    }
    return {Exponent(std::move(k)), c};
  }

  Rational number() {
    BigInt num = integer_literal();
    skip_space();
    if (peek() == '/') {
      ++pos_;
      skip_space();
      std::size_t where = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError(where, "expected denominator");
      }
      BigInt den = integer_literal();
      if (den == 0) throw ParseError(where, "zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  BigInt integer_literal() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.') throw ParseError(pos_, "decimal numbers are not exact; write p/q");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  Int exponent() {
    skip_space();
    std::size_t where = pos_;
    if (peek() == '-') throw ParseError(where, "negative exponent");
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError(where, "exponent must be a non-negative integer");
    }
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.' || peek() == '/') throw ParseError(pos_, "fractional exponent");
    if (peek() == '^') throw ParseError(pos_, "nested exponent");
    BigInt e(std::string(text_.substr(start, pos_ - start)));
    if (!e.fits_slong_p() || e > 1'000'000) throw ParseError(where, "exponent too large");
    return e.get_si();
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t variable_index(const std::string& name, std::size_t where) const {
    for (std::size_t j = 0; j < variables_.size(); ++j) {
      if (variables_[j] == name) return j;
    }
    throw ParseError(where, "unknown variable '" + name + "'");
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  const std::vector<std::string>& variables_;
  std::size_t pos_ = 0;
};

}  // namespace

PolynomialGerm parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw InputError("variables", "empty variable name");
    if (!seen.insert(v).second) throw InputError("variables", "duplicate variable '" + v + "'");
  }
  return Parser(text, variables).run();
}

}  // namespace nf
