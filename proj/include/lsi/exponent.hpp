#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "lsi/rational.hpp"

namespace lsi {

// Affine-rational exponent: constant + sum of rational multiples of named
// parameters (e.g. -x - xi1 - xi2 + 3/2). This is the full generality the
// engine admits in a power; anything richer is rejected at construction time
// by the layers above.
struct ExponentExpr {
  Rat constant{0};
  std::map<std::string, Rat> linear;  // param name -> nonzero weight

  ExponentExpr() = default;
  ExponentExpr(int c) : constant(c) {}         // NOLINT(google-explicit-constructor)
  ExponentExpr(const Rat& c) : constant(c) {}  // NOLINT(google-explicit-constructor)

  static ExponentExpr param(const std::string& name, const Rat& weight = Rat(1)) {
    ExponentExpr e;
    if (weight != 0) e.linear[name] = weight;
    return e;
  }

  bool is_constant() const { return linear.empty(); }
  bool is_zero() const { return constant == 0 && linear.empty(); }
  bool is_integer() const { return linear.empty() && denominator(constant) == 1; }

  // The constant value; throws when a parameter is still present.
  Rat constant_value() const {
    if (!linear.empty()) throw std::domain_error("ExponentExpr: not a constant: " + str());
    return constant;
  }

  ExponentExpr& operator+=(const ExponentExpr& o) {
    constant += o.constant;
    for (const auto& [p, w] : o.linear) {
      Rat& slot = linear[p];
      slot += w;
      if (slot == 0) linear.erase(p);
    }
    return *this;
  }
  ExponentExpr& operator-=(const ExponentExpr& o) { return *this += -o; }
  ExponentExpr operator-() const {
    ExponentExpr e;
    e.constant = -constant;
    for (const auto& [p, w] : linear) e.linear[p] = -w;
    return e;
  }
  friend ExponentExpr operator+(ExponentExpr a, const ExponentExpr& b) { return a += b; }
  friend ExponentExpr operator-(ExponentExpr a, const ExponentExpr& b) { return a -= b; }
  friend ExponentExpr operator*(const Rat& c, const ExponentExpr& e) {
    ExponentExpr out;
    if (c == 0) return out;
    out.constant = c * e.constant;
    for (const auto& [p, w] : e.linear) out.linear[p] = c * w;
    return out;
  }

  friend bool operator==(const ExponentExpr& a, const ExponentExpr& b) {
    return a.constant == b.constant && a.linear == b.linear;
  }
  friend bool operator!=(const ExponentExpr& a, const ExponentExpr& b) { return !(a == b); }
  friend bool operator<(const ExponentExpr& a, const ExponentExpr& b) {
    if (a.constant != b.constant) return a.constant < b.constant;
    return a.linear < b.linear;
  }

  // Splits off the integer floor of the constant: returns n with
  // *this == n + remainder, remainder's constant in [0,1). Used to group
  // powers that differ by an integer shift.
  BigInt split_integer_offset() {
    BigInt n = rat_floor(constant);
    constant = rat_frac(constant);
    return n;
  }

  // Substitute param -> affine expression (covers bind-to-rational and rename).
  ExponentExpr substitute(const std::string& name, const ExponentExpr& value) const {
    ExponentExpr out = *this;
    auto it = out.linear.find(name);
    if (it == out.linear.end()) return out;
    Rat w = it->second;
    out.linear.erase(it);
    out += w * value;
    return out;
  }

  bool uses(const std::string& name) const { return linear.count(name) != 0; }

  // Simultaneous substitution; parameters without a binding stay.
  ExponentExpr substitute_all(const std::map<std::string, ExponentExpr>& bindings) const {
    ExponentExpr out;
    out.constant = constant;
    for (const auto& [p, w] : linear) {
      auto it = bindings.find(p);
      if (it == bindings.end()) {
        Rat& slot = out.linear[p];
        slot += w;
        if (slot == 0) out.linear.erase(p);
      } else {
        out += w * it->second;
      }
    }
    return out;
  }

  ExponentExpr rename_all(const std::map<std::string, std::string>& mapping) const {
    ExponentExpr out;
    out.constant = constant;
    for (const auto& [p, w] : linear) {
      auto it = mapping.find(p);
      const std::string& nn = (it == mapping.end()) ? p : it->second;
      Rat& slot = out.linear[nn];
      slot += w;
      if (slot == 0) out.linear.erase(nn);
    }
    return out;
  }

  // Renders parameters first (sorted), then the constant: "x", "-x+3/2",
  // "1/2*x-2". A valid expression in the text grammar.
  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& [p, w] : linear) {
      if (w == 1) {
        if (!s.empty()) s += "+";
        s += p;
      } else if (w == -1) {
        s += "-" + p;
      } else {
        if (!s.empty() && w > 0) s += "+";
        s += rat_str(w) + "*" + p;
      }
    }
    if (constant != 0) {
      if (!s.empty() && constant > 0) s += "+";
      s += rat_str(constant);
    }
    return s;
  }
};

}  // namespace lsi
