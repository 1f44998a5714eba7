#include "weyllab/expr.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <vector>

namespace weyl {

namespace {

using Node = std::function<double(const Point&)>;

class Parser {
public:
  explicit Parser(const std::string& s) : s_(s) {}

  Node parse() {
    Node n = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ExprError("trailing input", pos_);
    return n;
  }

private:
  // expr := term (('+'|'-') term)*
  Node expr() {
    Node lhs = term();
    for (;;) {
      skip_ws();
      if (accept('+')) {
        Node rhs = term();
        lhs = [lhs, rhs](const Point& p) { return lhs(p) + rhs(p); };
      } else if (accept('-')) {
        Node rhs = term();
        lhs = [lhs, rhs](const Point& p) { return lhs(p) - rhs(p); };
      } else {
        return lhs;
      }
    }
  }

  // term := factor (('*'|'/') factor)*
  Node term() {
    Node lhs = factor();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        Node rhs = factor();
        lhs = [lhs, rhs](const Point& p) { return lhs(p) * rhs(p); };
      } else if (accept('/')) {
        Node rhs = factor();
        lhs = [lhs, rhs](const Point& p) { return lhs(p) / rhs(p); };
      } else {
        return lhs;
      }
    }
  }

  // factor := unary ('^' factor)?   (right associative)
  Node factor() {
    Node base = unary();
    skip_ws();
    if (accept('^')) {
      Node e = factor();
      return [base, e](const Point& p) { return std::pow(base(p), e(p)); };
    }
    return base;
  }

  Node unary() {
    skip_ws();
    if (accept('-')) {
      Node n = unary();
      return [n](const Point& p) { return -n(p); };
    }
    accept('+');
    return primary();
  }

  Node primary() {
    skip_ws();
    if (pos_ >= s_.size()) throw ExprError("unexpected end of expression", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Node n = expr();
      expect(')');
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    throw ExprError(std::string("unexpected character '") + c + "'", pos_);
  }

  Node number() {
    std::size_t start = pos_;
    std::size_t used = 0;
    double v = std::stod(s_.substr(start), &used);
    pos_ = start + used;
    return [v](const Point&) { return v; };
  }

  Node identifier() {
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    if (name == "t") return [](const Point& p) { return p.t; };
    if (name == "x1") return [](const Point& p) { return p.x[0]; };
    if (name == "x2") return [](const Point& p) { return p.x[1]; };
    if (name == "x3") return [](const Point& p) { return p.x[2]; };
    if (name == "pi") return [](const Point&) { return M_PI; };

    skip_ws();
    if (name == "pow") {
      expect('(');
      Node a = expr();
      expect(',');
      Node b = expr();
      expect(')');
      return [a, b](const Point& p) { return std::pow(a(p), b(p)); };
    }
    static const struct {
      const char* name;
      double (*fn)(double);
    } fns[] = {{"sin", std::sin}, {"cos", std::cos}, {"exp", std::exp}, {"sqrt", std::sqrt}};
    for (const auto& e : fns)
      if (name == e.name) {
        expect('(');
        Node a = expr();
        expect(')');
        auto fn = e.fn;
        return [a, fn](const Point& p) { return fn(a(p)); };
      }
    throw ExprError("unknown identifier '" + name + "'", start);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_ws();
    if (!accept(c)) throw ExprError(std::string("expected '") + c + "'", pos_);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

} // namespace

FieldFn compile_expression(const std::string& text) {
  Node n = Parser(text).parse();
  FieldFn f;
  f.f = [n](const Point& p) { return n(p); };
  return f;
}

} // namespace weyl
