#include "eulerode_cli/coeff_parse.hpp"

#include <cctype>

#include "eulerode/errors.hpp"

namespace eulerode::cli {
namespace {

class CoeffParser {
 public:
  explicit CoeffParser(const std::string& s) : s_(s) {}

  Coeff run() {
    Coeff c = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, {"'+'", "'-'", "'*'", "'/'", "end of input"});
    return c;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Coeff expr() {
    Coeff acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Coeff term() {
    if (peek('-')) {
      ++pos_;
      return -term();
    }
    Coeff acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc *= factor();
      } else if (peek('/')) {
        ++pos_;
        acc /= factor();
      } else {
        return acc;
      }
    }
  }

  Coeff factor() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, {"number", "identifier", "'('"});
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Coeff e = expr();
      if (!peek(')')) throw ParseError(pos_, {"')'"});
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Coeff(Rational(mpz_class(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const Coeff base = Coeff::parameter(s_.substr(start, pos_ - start));
      if (!peek('^')) return base;
      ++pos_;
      skip();
      const std::size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == dstart) throw ParseError(pos_, {"unsigned integer"});
      Coeff out(1);
      for (int k = std::stoi(s_.substr(dstart, pos_ - dstart)); k > 0; --k) out *= base;
      return out;
    }
    throw ParseError(pos_, {"number", "identifier", "'('"});
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Coeff parse_coeff(const std::string& src) { return CoeffParser(src).run(); }

}  // namespace eulerode::cli
