#include "wv/parser.hpp"

#include <cctype>

namespace wv {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  JetExpr run() {
    JetExpr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  JetExpr parse_expr() {
    JetExpr e = parse_term();
    while (true) {
      if (accept('+'))
        e += parse_term();
      else if (accept('-'))
        e -= parse_term();
      else
        return e;
    }
  }

  JetExpr parse_term() {
    JetExpr e = parse_unary();
    while (true) {
      if (accept('*')) {
        e = e * parse_unary();
      } else if (accept('/')) {
        size_t at = pos_;
        JetExpr d = parse_unary();
        if (!d.is_coeff())
          throw ParseError("division by a jet-dependent expression", at);
        if (d.is_zero()) throw ParseError("division by zero", at);
        e = e / d;
      } else {
        return e;
      }
    }
  }

  JetExpr parse_unary() {
    if (accept('-')) return -parse_unary();
    return parse_power();
  }

  JetExpr parse_power() {
    JetExpr base = parse_primary();
    if (accept('^')) {
      size_t at = pos_;
      Rational e = parse_exponent();
      try {
        return base.pow_rational(e);
      } catch (const std::domain_error& err) {
        throw ParseError(err.what(), at);
      }
    }
    return base;
  }

  Rational parse_exponent() {
    skip_ws();
    if (accept('(')) {
      JetExpr e = parse_expr();
      expect(')');
      if (!e.is_rational()) fail("exponent must be a rational literal");
      return e.rational_value();
    }
    bool neg = accept('-');
    Rational num = parse_integer();
    Rational den(1);
    // A '/' directly in exponent position forms a rational literal, but only
    // when a digit follows; otherwise it is the division operator and belongs
    // to the enclosing expression.
    size_t save = pos_;
    if (accept('/')) {
      skip_ws();
      if (pos_ < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        den = parse_integer();
      } else {
        pos_ = save;
      }
    }
    if (den == 0) fail("zero denominator in exponent");
    Rational r = num / den;
    return neg ? -r : r;
  }

  Rational parse_integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected a number");
    return Rational(text_.substr(start, pos_ - start));
  }

  JetExpr parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return JetExpr::from_rational(parse_integer());
    }
    if (c == '(') {
      ++pos_;
      JetExpr e = parse_expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
    fail("unexpected character");
  }

  JetExpr parse_ident() {
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);

    // Function symbols f, h with prime marks.
    if (name == "f" || name == "h") {
      int order = 0;
      while (pos_ < text_.size() && text_[pos_] == '\'') {
        ++order;
        ++pos_;
      }
      skip_ws();
      if (!accept('(')) {
        pos_ = start;
        fail("function symbol requires an argument list");
      }
      JetExpr arg = parse_expr();
      expect(')');
      return JetExpr::func(name == "f" ? FuncBase::f : FuncBase::h, order, arg);
    }

    if (name == "t") return JetExpr::indep(Indep::t);
    if (name == "x") return JetExpr::indep(Indep::x);

    // Dependent variables, possibly with a derivative suffix.
    auto us = name.find('_');
    std::string head = us == std::string::npos ? name : name.substr(0, us);
    if (auto dv = depvar_from_name(head)) {
      int t_order = 0, x_order = 0;
      if (us != std::string::npos) {
        std::string suffix = name.substr(us + 1);
        if (suffix.empty()) {
          pos_ = start;
          fail("malformed derivative suffix");
        }
        for (char s : suffix) {
          if (s == 't')
            ++t_order;
          else if (s == 'x')
            ++x_order;
          else {
            pos_ = start;
            fail("malformed derivative suffix '" + suffix + "'");
          }
        }
      }
      return JetExpr::coord(*dv, t_order, x_order);
    }

    if (auto p = param_from_name(name)) return JetExpr::param(*p);

    pos_ = start;
    fail("unknown identifier '" + name + "'");
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

JetExpr parse(const std::string& text) { return Parser(text).run(); }

}  // namespace wv
