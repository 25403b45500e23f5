#include "mixlink/parser.hpp"

#include <cctype>
#include <string>

#include "mixlink/errors.hpp"

namespace mixlink {

namespace {

constexpr unsigned kMaxExponent = 4096;

class Parser {
 public:
  Parser(std::string_view text, std::size_t n) : s_(text), n_(n) {}

  MixedPolynomial parse() {
    MixedPolynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  MixedPolynomial expr() {
    MixedPolynomial acc(n_);
    bool first = true;
    for (;;) {
      char c = peek();
      bool negate = false;
      if (c == '+' || c == '-') {
        ++pos_;
        negate = c == '-';
      } else if (!first) {
        break;
      }
      MixedPolynomial t = term();
      acc = negate ? acc - t : acc + t;
      first = false;
      c = peek();
      if (c != '+' && c != '-') break;
    }
    return acc;
  }

  MixedPolynomial term() {
    MixedPolynomial acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
        continue;
      }
      const char c = peek();
      if (c != 'z' && c != 'w' && c != '~' && c != '(' && c != 'i') break;
      acc = acc * power();
    }
    return acc;
  }

  MixedPolynomial factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    return power();
  }

  MixedPolynomial power() {
    MixedPolynomial base = primary();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t at = pos_;
    if (accept('-')) fail_at("negative exponent", at);
    const std::string d = digits();
    if (d.size() > 6 || std::stoul(d) > kMaxExponent) fail_at("exponent too large", at);
    const unsigned e = static_cast<unsigned>(std::stoul(d));
    if (e == 0) fail_at("exponent must be at least 1", at);
    return base.pow(e);
  }

  MixedPolynomial primary() {
    const char c = peek();
    if (c == '~') {
      ++pos_;
      return primary().conjugate();
    }
    if (c == '(') {
      ++pos_;
      MixedPolynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'z' || c == 'w') {
      const std::size_t at = pos_;
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        fail("expected variable index after '" + std::string(1, c) + "'");
      }
      const std::string d = digits();
      const unsigned long k = d.size() > 6 ? 0 : std::stoul(d);
      if (k == 0 || k > n_) {
        fail_at("variable index " + d + " out of range 1.." + std::to_string(n_), at);
      }
      return MixedPolynomial::variable(n_, k - 1);
    }
    if (c == 'i') {
      ++pos_;
      return MixedPolynomial::constant(n_, GaussianRational::imaginary_unit());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class value(digits());
      if (accept('/')) {
        const std::size_t at = pos_;
        mpz_class den(digits());
        if (den == 0) fail_at("division by zero", at);
        value = mpq_class(value.get_num(), den);
        value.canonicalize();
      }
      if (accept('i')) return MixedPolynomial::constant(n_, GaussianRational(0, value));
      return MixedPolynomial::constant(n_, GaussianRational(value));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

std::size_t infer_dimension(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'z' && text[i] != 'w') continue;
    std::size_t j = i + 1;
    std::size_t k = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && j - i <= 6) {
      k = k * 10 + static_cast<std::size_t>(text[j] - '0');
      ++j;
    }
    if (j > i + 1) best = std::max(best, k);
  }
  return best;
}

MixedPolynomial parse_polynomial(std::string_view text, std::size_t n) {
  if (n == 0) n = std::max<std::size_t>(infer_dimension(text), 1);
  return Parser(text, n).parse();
}

}  // namespace mixlink
