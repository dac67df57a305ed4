#pragma once

#include <map>
#include <string>

#include "lsi/closed_form.hpp"
#include "lsi/param_scalar.hpp"

namespace lsi {

// 2x2 matrix over the parameter ring, row-major [[a, b], [c, d]]. Scalar
// operators embed as s * identity; the off-diagonal slots carry the nilpotent
// parts of rank-2 reducible-but-indecomposable representations.
struct Mat2 {
  ParamScalar a, b, c, d;

  static Mat2 scalar(ParamScalar s) { return {s, {}, {}, std::move(s)}; }
  static Mat2 identity() { return scalar(ParamScalar(1)); }

  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
  bool is_scalar() const { return b.is_zero() && c.is_zero() && a == d; }

  Mat2& operator+=(const Mat2& o) {
    a += o.a;
    b += o.b;
    c += o.c;
    d += o.d;
    return *this;
  }
  Mat2& operator-=(const Mat2& o) {
    a -= o.a;
    b -= o.b;
    c -= o.c;
    d -= o.d;
    return *this;
  }
  friend Mat2 operator+(Mat2 x, const Mat2& y) { return x += y; }
  friend Mat2 operator-(Mat2 x, const Mat2& y) { return x -= y; }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator*(const ParamScalar& s, const Mat2& m) {
    return {s * m.a, s * m.b, s * m.c, s * m.d};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }

  template <typename F>
  Mat2 map(F&& f) const {
    return {f(a), f(b), f(c), f(d)};
  }

  std::string str() const {
    if (is_scalar()) return a.str();
    return "[[" + a.str() + ", " + b.str() + "], [" + c.str() + ", " + d.str() + "]]";
  }
};

// Monomial in coordinates with exact numeric rational exponents (exponents in
// an operator coefficient are never parameter-dependent).
using CoordMono = std::map<std::string, Rat>;

struct DKey {
  CoordMono powers;   // coordinate -> nonzero rational exponent
  Monomial partials;  // coordinate -> derivative order >= 1

  friend bool operator<(const DKey& x, const DKey& y) {
    if (x.powers != y.powers) return x.powers < y.powers;
    return x.partials < y.partials;
  }
  friend bool operator==(const DKey& x, const DKey& y) {
    return x.powers == y.powers && x.partials == y.partials;
  }
};

// Linear differential operator with matrix coefficients:
//   sum over terms of  (coordinate monomial) * (Mat2 coefficient) * d^partials.
// Closed under addition, composition (Leibniz expansion) and commutators, all
// exact. Coordinates never appear inside the Mat2 entries; parameters never
// appear in the coordinate monomials.
class DiffOp {
 public:
  using TermMap = std::map<DKey, Mat2>;

  DiffOp() = default;

  static DiffOp term(DKey key, Mat2 coeff);
  static DiffOp multiplication(const CoordMono& mono, Mat2 coeff = Mat2::identity());
  static DiffOp partial(const std::string& coord, int order = 1);
  static DiffOp constant(const ParamScalar& s) { return multiplication({}, Mat2::scalar(s)); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // All matrix coefficients proportional to the identity.
  bool is_scalar_op() const;
  // No derivative slots: the operator is multiplication by a function.
  bool is_multiplication() const;
  // The function a scalar multiplication operator multiplies by.
  ClosedForm multiplier_form() const;

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp operator-() const;
  friend DiffOp operator+(DiffOp x, const DiffOp& y) { return x += y; }
  friend DiffOp operator-(DiffOp x, const DiffOp& y) { return x -= y; }
  // Composition x then y applied second (operator product x ∘ y).
  friend DiffOp operator*(const DiffOp& x, const DiffOp& y);
  friend DiffOp operator*(const ParamScalar& s, const DiffOp& op) {
    return op.scaled(Mat2::scalar(s));
  }
  friend DiffOp operator*(const GRat& c, const DiffOp& op) {
    return op.scaled(Mat2::scalar(ParamScalar(c)));
  }
  friend bool operator==(const DiffOp& x, const DiffOp& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const DiffOp& x, const DiffOp& y) { return !(x == y); }

  // Left multiplication by a constant matrix.
  DiffOp scaled(const Mat2& m) const;
  // Left multiplication by a coordinate monomial.
  DiffOp scaled_by_monomial(const CoordMono& mono) const;

  DiffOp rename_coords(const std::map<std::string, std::string>& mapping) const;
  DiffOp rename_params(const std::map<std::string, std::string>& mapping) const;
  DiffOp substitute_params(const std::map<std::string, ParamScalar>& bindings) const;
  // d/d(parameter), entrywise on the matrix coefficients.
  DiffOp derivative_param(const std::string& name) const;

  // Apply a scalar operator to a closed form. Throws for matrix coefficients.
  ClosedForm apply_scalar(const ClosedForm& f, const CoordSystem& cs) const;

  void collect_coords(std::set<std::string>& out) const;
  void collect_params(std::set<std::string>& out) const;

  std::string str() const;

 private:
  void add_term(const DKey& key, const Mat2& coeff);
  TermMap terms_;
};

inline DiffOp commutator(const DiffOp& x, const DiffOp& y) { return x * y - y * x; }

}  // namespace lsi
