#include "lsi/parser.hpp"

#include <cctype>

namespace lsi {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const ParseContext& ctx) : s_(text), ctx_(ctx) {}

  ClosedForm run() {
    ClosedForm f = parse_expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  static bool name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
  }
  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  }

  std::string parse_name() {
    skip_ws();
    if (pos_ >= s_.size() || !name_start(s_[pos_])) fail("expected a name");
    std::size_t start = pos_;
    while (pos_ < s_.size() && name_char(s_[pos_])) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  Rat parse_integer() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected a number");
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '.')
      fail("decimal literals are not supported; write an exact fraction like 1/2");
    return Rat(BigInt(s_.substr(start, pos_ - start)));
  }

  ClosedForm parse_expr() {
    ClosedForm acc;
    bool neg = eat('-');
    if (!neg) eat('+');
    ClosedForm t = parse_term();
    acc = neg ? -t : t;
    for (;;) {
      if (eat('+'))
        acc += parse_term();
      else if (eat('-'))
        acc -= parse_term();
      else
        break;
    }
    return acc;
  }

  ClosedForm parse_term() {
    ClosedForm acc = parse_factor();
    for (;;) {
      if (eat('*')) {
        acc *= parse_factor();
      } else if (eat('/')) {
        std::size_t at = pos_;
        ClosedForm d = parse_factor();
        try {
          acc *= d.inverse();
        } catch (const std::domain_error& e) {
          throw ParseError(e.what(), at);
        }
      } else {
        break;
      }
    }
    return acc;
  }

  ClosedForm parse_factor() {
    ClosedForm base = parse_primary();
    if (!eat('^')) return base;
    std::size_t at = pos_;
    ExponentExpr e = parse_exponent();
    if (e.is_integer()) {
      long n = static_cast<long>(numerator(e.constant).convert_to<long long>());
      try {
        return base.pow_int(n);
      } catch (const std::domain_error& err) {
        throw ParseError(err.what(), at);
      }
    }
    // Fractional or parameter-dependent exponent: base must be a bare coordinate.
    if (base.is_single_term()) {
      const auto& [key, coeff] = *base.terms().begin();
      if (coeff.is_one() && key.logs.empty() && !key.kernel && key.powers.size() == 1 &&
          key.powers.begin()->second == ExponentExpr(1)) {
        return ClosedForm::coord_power(key.powers.begin()->first, e);
      }
    }
    throw ParseError("non-integer exponent requires a plain coordinate base", at);
  }

  ExponentExpr parse_exponent() {
    if (peek() == '(') {
      std::size_t at = pos_;
      ++pos_;
      ClosedForm inner = parse_expr();
      expect(')');
      // Collapse to an affine combination of parameters.
      ParamScalar total;
      for (const auto& [key, coeff] : inner.terms()) {
        if (!key.trivial())
          throw ParseError("exponent must not contain coordinates, logs or exponentials", at);
        total += coeff;
      }
      ExponentExpr e;
      if (!total.to_affine_exponent(e))
        throw ParseError("exponent is not an affine rational combination of parameters", at);
      return e;
    }
    bool neg = eat('-');
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rat n = parse_integer();
      return ExponentExpr(neg ? -n : n);
    }
    std::size_t at = pos_;
    std::string name = parse_name();
    if (ctx_.coords.count(name))
      throw ParseError("coordinate " + name + " cannot appear in an exponent", at);
    if (!ctx_.params.count(name)) throw ParseError("unknown name " + name, at);
    ExponentExpr e = ExponentExpr::param(name);
    return neg ? -e : e;
  }

  ClosedForm parse_primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      ClosedForm f = parse_expr();
      expect(')');
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ClosedForm(GRat(parse_integer()));
    std::size_t at = pos_;
    std::string name = parse_name();
    if (name == "i") return ClosedForm(GRat::i());
    if (name == "exp") {
      expect('(');
      std::size_t inner_at = pos_;
      ClosedForm k = parse_expr();
      expect(')');
      try {
        return ClosedForm::exponential(k);
      } catch (const std::domain_error& e) {
        throw ParseError(e.what(), inner_at);
      }
    }
    if (name == "ln") {
      expect('(');
      std::size_t inner_at = pos_;
      std::string cname = parse_name();
      expect(')');
      if (!ctx_.coords.count(cname))
        throw ParseError("ln expects a coordinate name, got " + cname, inner_at);
      return ClosedForm::log_coord(cname);
    }
    if (ctx_.coords.count(name)) return ClosedForm::coord(name);
    if (ctx_.params.count(name)) return ClosedForm(ParamScalar::param(name));
    throw ParseError("unknown name " + name, at);
  }

  const std::string& s_;
  const ParseContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

ClosedForm parse_closed_form(const std::string& text, const ParseContext& ctx) {
  return Parser(text, ctx).run();
}

}  // namespace lsi
