#pragma once

#include <complex>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "lsi/exponent.hpp"
#include "lsi/rational.hpp"

namespace lsi {

// Product of integer powers of named parameters (negative powers allowed);
// the empty monomial is 1. Exponents stored are never zero.
using Monomial = std::map<std::string, int>;

// Exact Laurent polynomial in named parameters over the complex rationals.
// This is the coefficient ring of the symbolic engine: scaling dimensions,
// masses and amplitudes all live here.
class ParamScalar {
 public:
  ParamScalar() = default;
  ParamScalar(int v) { *this = ParamScalar(GRat(v)); }  // NOLINT(google-explicit-constructor)
  ParamScalar(const GRat& v) {                          // NOLINT(google-explicit-constructor)
    if (!v.is_zero()) terms_[Monomial{}] = v;
  }

  static ParamScalar param(const std::string& name, int power = 1) {
    ParamScalar p;
    Monomial m;
    if (power != 0) m[name] = power;
    p.terms_[m] = GRat(1);
    return p;
  }
  static ParamScalar from_exponent(const ExponentExpr& e) {
    ParamScalar p(GRat(e.constant));
    for (const auto& [name, w] : e.linear) p += GRat(w) * param(name);
    return p;
  }

  const std::map<Monomial, GRat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  GRat constant_value() const {
    if (terms_.empty()) return GRat(0);
    if (!is_constant()) throw std::domain_error("ParamScalar: not a constant: " + str());
    return terms_.begin()->second;
  }
  bool is_one() const { return is_constant() && constant_value().is_one(); }
  // Exactly one monomial (hence invertible in the Laurent ring).
  bool is_single_term() const { return terms_.size() == 1; }
  // True when the rendered value must be parenthesized to act as a factor.
  bool needs_parens_as_factor() const {
    return terms_.size() > 1 || (terms_.size() == 1 && terms_.begin()->second.is_sum());
  }

  ParamScalar& operator+=(const ParamScalar& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  ParamScalar& operator-=(const ParamScalar& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  ParamScalar operator-() const {
    ParamScalar out;
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
  }
  friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
  friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
    ParamScalar out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(merge(ma, mb), ca * cb);
    return out;
  }
  ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }
  friend ParamScalar operator*(const GRat& c, const ParamScalar& p) {
    return ParamScalar(c) * p;
  }

  friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const ParamScalar& a, const ParamScalar& b) { return !(a == b); }
  friend bool operator<(const ParamScalar& a, const ParamScalar& b) {
    return a.terms_ < b.terms_;
  }

  // Multiplicative inverse; defined only for a single-term value.
  ParamScalar inverse() const {
    if (terms_.size() != 1)
      throw std::domain_error("ParamScalar: no inverse for a sum: " + str());
    const auto& [m, c] = *terms_.begin();
    Monomial inv;
    for (const auto& [name, k] : m) inv[name] = -k;
    ParamScalar out;
    out.terms_[inv] = c.inv();
    return out;
  }

  ParamScalar pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    ParamScalar acc(GRat(1));
    ParamScalar base = *this;
    unsigned long k = static_cast<unsigned long>(n);
    while (k > 0) {
      if (k & 1UL) acc *= base;
      base *= base;
      k >>= 1UL;
    }
    return acc;
  }

  ParamScalar derivative(const std::string& name) const {
    ParamScalar out;
    for (const auto& [m, c] : terms_) {
      auto it = m.find(name);
      if (it == m.end()) continue;
      Monomial dm = m;
      int k = it->second;
      if (k == 1)
        dm.erase(name);
      else
        dm[name] = k - 1;
      out.add_term(dm, GRat(Rat(k)) * c);
    }
    return out;
  }

  // Substitute name -> value. Positive powers always work; negative powers
  // require value to be a single term (invertible).
  ParamScalar substitute(const std::string& name, const ParamScalar& value) const {
    ParamScalar out;
    for (const auto& [m, c] : terms_) {
      auto it = m.find(name);
      if (it == m.end()) {
        out.add_term(m, c);
        continue;
      }
      int k = it->second;
      Monomial rest = m;
      rest.erase(name);
      ParamScalar piece;
      piece.terms_[rest] = c;
      out += piece * value.pow(k);
    }
    return out;
  }

  ParamScalar rename(const std::string& from, const std::string& to) const {
    return substitute(from, param(to));
  }

  // Simultaneous substitution of several parameters.
  ParamScalar substitute_all(const std::map<std::string, ParamScalar>& bindings) const {
    ParamScalar out;
    for (const auto& [m, c] : terms_) {
      ParamScalar piece{c};
      for (const auto& [name, k] : m) {
        auto it = bindings.find(name);
        piece *= (it == bindings.end()) ? param(name, k) : it->second.pow(k);
      }
      out += piece;
    }
    return out;
  }

  // Simultaneous renaming; distinct sources mapped to one target merge.
  ParamScalar rename_all(const std::map<std::string, std::string>& mapping) const {
    ParamScalar out;
    for (const auto& [m, c] : terms_) {
      Monomial nm;
      for (const auto& [name, k] : m) {
        auto it = mapping.find(name);
        const std::string& nn = (it == mapping.end()) ? name : it->second;
        int& slot = nm[nn];
        slot += k;
        if (slot == 0) nm.erase(nn);
      }
      out.add_term(nm, c);
    }
    return out;
  }

  void collect_params(std::set<std::string>& out) const {
    for (const auto& [m, c] : terms_)
      for (const auto& [name, k] : m) out.insert(name);
  }
  bool uses(const std::string& name) const {
    for (const auto& [m, c] : terms_)
      if (m.count(name)) return true;
    return false;
  }

  GRat eval_exact(const std::map<std::string, GRat>& values) const {
    GRat total(0);
    for (const auto& [m, c] : terms_) {
      GRat t = c;
      for (const auto& [name, k] : m) {
        auto it = values.find(name);
        if (it == values.end())
          throw std::domain_error("ParamScalar: unbound parameter " + name);
        t *= it->second.pow(k);
      }
      total += t;
    }
    return total;
  }

  std::complex<double> eval_complex(const std::map<std::string, std::complex<double>>& values) const {
    std::complex<double> total{0.0, 0.0};
    for (const auto& [m, c] : terms_) {
      std::complex<double> t = c.to_complex();
      for (const auto& [name, k] : m) {
        auto it = values.find(name);
        if (it == values.end())
          throw std::domain_error("ParamScalar: unbound parameter " + name);
        t *= std::pow(it->second, k);
      }
      total += t;
    }
    return total;
  }

  std::string str() const;

  // True when this value can be used inside a power exponent, i.e. it is an
  // affine real-rational combination of parameters. Fills `out` on success.
  bool to_affine_exponent(ExponentExpr& out) const {
    ExponentExpr e;
    for (const auto& [m, c] : terms_) {
      if (!c.is_real()) return false;
      if (m.empty()) {
        e.constant += c.re;
      } else if (m.size() == 1 && m.begin()->second == 1) {
        e.linear[m.begin()->first] += c.re;
      } else {
        return false;
      }
    }
    for (auto it = e.linear.begin(); it != e.linear.end();)
      it = it->second == 0 ? e.linear.erase(it) : std::next(it);
    out = e;
    return true;
  }

 private:
  static Monomial merge(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (const auto& [name, k] : b) {
      int& slot = m[name];
      slot += k;
      if (slot == 0) m.erase(name);
    }
    return m;
  }
  void add_term(const Monomial& m, const GRat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<Monomial, GRat> terms_;
};

}  // namespace lsi
