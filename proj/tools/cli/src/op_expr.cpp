#include "eulerode_cli/op_expr.hpp"

#include <cctype>

#include "eulerode/errors.hpp"

namespace eulerode::cli {

OpExpr OpExpr::literal(const Rational& r) {
  OpExpr e;
  e.kind = Kind::RationalLit;
  e.value = r;
  return e;
}

OpExpr OpExpr::param(std::string name) {
  OpExpr e;
  e.kind = Kind::Param;
  e.name = std::move(name);
  return e;
}

OpExpr OpExpr::atom(Kind k, int power) {
  OpExpr e;
  e.kind = k;
  e.power = power;
  return e;
}

OpExpr OpExpr::sum(std::vector<OpExpr> terms) {
  if (terms.size() == 1) return std::move(terms.front());
  OpExpr e;
  e.kind = Kind::Sum;
  for (auto& t : terms) {
    if (t.kind == Kind::Sum) {
      for (auto& c : t.children) e.children.push_back(std::move(c));
    } else {
      e.children.push_back(std::move(t));
    }
  }
  return e;
}

OpExpr OpExpr::product(std::vector<OpExpr> factors) {
  if (factors.size() == 1) return std::move(factors.front());
  OpExpr e;
  e.kind = Kind::Product;
  for (auto& f : factors) {
    if (f.kind == Kind::Product) {
      for (auto& c : f.children) e.children.push_back(std::move(c));
    } else {
      e.children.push_back(std::move(f));
    }
  }
  return e;
}

OpExpr OpExpr::negate(OpExpr inner) {
  OpExpr e;
  e.kind = Kind::Negate;
  e.children.push_back(std::move(inner));
  return e;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& src) : s_(src) {}

  OpExpr run() {
    OpExpr e = expr();
    skip();
    if (pos_ != s_.size()) fail({"'+'", "'-'", "'*'", "end of input"});
    return e;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail = {}) {
    throw ParseError(pos_, std::move(expected), detail);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  OpExpr expr() {
    std::vector<OpExpr> terms{term()};
    for (;;) {
      if (peek('+')) {
        ++pos_;
        terms.push_back(term());
      } else if (peek('-')) {
        ++pos_;
        terms.push_back(OpExpr::negate(term()));
      } else {
        break;
      }
    }
    return OpExpr::sum(std::move(terms));
  }

  OpExpr term() {
    std::vector<OpExpr> factors{unary()};
    while (peek('*')) {
      ++pos_;
      factors.push_back(unary());
    }
    return OpExpr::product(std::move(factors));
  }

  OpExpr unary() {
    if (peek('-')) {
      ++pos_;
      return OpExpr::negate(unary());
    }
    return factor();
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  int power() {
    if (!peek('^')) return 1;
    ++pos_;
    skip();
    if (pos_ < s_.size() && s_[pos_] == '-') fail({"unsigned integer"}, "negative power");
    const std::string d = digits();
    if (d.empty()) fail({"unsigned integer"});
    if (d.size() > 6) fail({"unsigned integer"}, "power too large");
    return std::stoi(d);
  }

  OpExpr factor() {
    skip();
    if (pos_ >= s_.size()) fail({"rational", "identifier", "'x'", "'d'", "'D'", "'('", "'-'"});
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      OpExpr e = expr();
      if (!peek(')')) fail({"')'"});
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string num = digits();
      if (peek('/')) {
        ++pos_;
        skip();
        const std::size_t at = pos_;
        const std::string den = digits();
        if (den.empty()) fail({"unsigned integer"});
        if (mpz_class(den) == 0) {
          pos_ = at;
          fail({"nonzero integer"}, "zero denominator");
        }
        return OpExpr::literal(Rational(mpz_class(num), mpz_class(den)));
      }
      return OpExpr::literal(Rational(mpz_class(num)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string id = s_.substr(start, pos_ - start);
      if (id == "x") return OpExpr::atom(OpExpr::Kind::X, power());
      if (id == "d") return OpExpr::atom(OpExpr::Kind::Dsmall, power());
      if (id == "D") return OpExpr::atom(OpExpr::Kind::Dbig, power());
      return OpExpr::param(id);
    }
    fail({"rational", "identifier", "'x'", "'d'", "'D'", "'('", "'-'"});
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

bool is_compound(const OpExpr& e) { return e.kind == OpExpr::Kind::Sum || e.kind == OpExpr::Kind::Product; }

std::string atom_str(const char* base, int power) {
  std::string s = base;
  if (power != 1) s += "^" + std::to_string(power);
  return s;
}

}  // namespace

OpExpr parse_operator(const std::string& src) { return Parser(src).run(); }

std::string print_operator(const OpExpr& e) {
  using K = OpExpr::Kind;
  switch (e.kind) {
    case K::RationalLit:
      return e.value.str();
    case K::Param:
      return e.name;
    case K::X:
      return atom_str("x", e.power);
    case K::Dsmall:
      return atom_str("d", e.power);
    case K::Dbig:
      return atom_str("D", e.power);
    case K::Negate: {
      const OpExpr& c = e.children.front();
      return is_compound(c) ? "-(" + print_operator(c) + ")" : "-" + print_operator(c);
    }
    case K::Product: {
      std::string s;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        const OpExpr& c = e.children[i];
        if (i) s += "*";
        s += c.kind == K::Sum ? "(" + print_operator(c) + ")" : print_operator(c);
      }
      return s;
    }
    case K::Sum: {
      std::string s;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        const OpExpr& c = e.children[i];
        if (i == 0) {
          s += c.kind == K::Sum ? "(" + print_operator(c) + ")" : print_operator(c);
        } else if (c.kind == K::Negate) {
          const OpExpr& inner = c.children.front();
          s += " - ";
          s += inner.kind == K::Sum ? "(" + print_operator(inner) + ")" : print_operator(inner);
        } else {
          s += " + " + (c.kind == K::Sum ? "(" + print_operator(c) + ")" : print_operator(c));
        }
      }
      return s;
    }
  }
  return {};
}

}  // namespace eulerode::cli
