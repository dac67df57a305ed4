#include "lsi/param_scalar.hpp"

namespace lsi {

namespace {

std::string power_str(const std::string& name, int k) {
  if (k == 1) return name;
  if (k > 0) return name + "^" + std::to_string(k);
  return name + "^(" + std::to_string(k) + ")";
}

// One term with its sign folded in, e.g. "-3/2*x*y^2" or "+(1+i)*M".
std::string term_str(const Monomial& m, const GRat& c, bool leading) {
  std::string factors;
  for (const auto& [name, k] : m) {
    if (!factors.empty()) factors += "*";
    factors += power_str(name, k);
  }
  std::string s;
  if (factors.empty()) {
    s = c.str();
    if (!leading && !s.empty() && s[0] != '-') s = "+" + s;
    return s;
  }
  if (c.is_one()) return (leading ? "" : "+") + factors;
  if (c == GRat(-1)) return "-" + factors;
  std::string cs = c.str();
  if (c.is_sum()) {
    cs = "(" + cs + ")";
    return (leading || cs[0] == '-' ? "" : "+") + cs + "*" + factors;
  }
  if (!leading && cs[0] != '-') cs = "+" + cs;
  return cs + "*" + factors;
}

}  // namespace

std::string ParamScalar::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool leading = true;
  for (const auto& [m, c] : terms_) {
    s += term_str(m, c, leading);
    leading = false;
  }
  return s;
}

}  // namespace lsi
