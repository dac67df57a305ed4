#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "lsi/exponent.hpp"
#include "lsi/param_scalar.hpp"
#include "lsi/rational.hpp"

namespace lsi {

class ClosedForm;
class CoordSystem;

// One multiplicative factor bundle: product of coordinate powers, integer
// powers of logarithms of coordinates, and at most one exponential factor
// exp(kernel). The kernel is itself a closed form of restricted ("kernel")
// grade: no logs, no nested exponentials, numeric rational exponents only.
struct TermKey {
  std::map<std::string, ExponentExpr> powers;  // coord -> nonzero exponent
  std::map<std::string, int> logs;             // coord -> power >= 1
  std::shared_ptr<const ClosedForm> kernel;    // null when absent

  bool trivial() const { return powers.empty() && logs.empty() && !kernel; }
};

int compare(const TermKey& a, const TermKey& b);
int compare(const ClosedForm& a, const ClosedForm& b);

struct TermKeyLess {
  bool operator()(const TermKey& a, const TermKey& b) const { return compare(a, b) < 0; }
};

// Output of ClosedForm::decompose: one functionally independent class of
// terms. The class factor (powers with parameter-dependent or fractional
// exponents, logarithms, exponential kernel) multiplies a Laurent polynomial
// in base coordinates, obtained by expanding composite coordinates through
// their definitions. The whole expression vanishes identically iff every
// class polynomial is empty.
struct ConstraintGroup {
  TermKey class_key;
  std::map<Monomial, ParamScalar> poly;  // base-coordinate monomial -> coefficient
  bool vanishes() const { return poly.empty(); }
};

// Exact symbolic expression: finite sum of TermKey factors with ParamScalar
// coefficients. Closed under +, *, differentiation and the substitutions the
// engine supports. No floating point anywhere.
class ClosedForm {
 public:
  using TermMap = std::map<TermKey, ParamScalar, TermKeyLess>;

  ClosedForm() = default;
  ClosedForm(int v) : ClosedForm(ParamScalar(v)) {}            // NOLINT
  ClosedForm(const GRat& v) : ClosedForm(ParamScalar(v)) {}    // NOLINT
  ClosedForm(const ParamScalar& v) {                           // NOLINT
    if (!v.is_zero()) terms_[TermKey{}] = v;
  }

  static ClosedForm term(TermKey key, ParamScalar coeff);
  static ClosedForm coord_power(const std::string& name, const ExponentExpr& e);
  static ClosedForm coord(const std::string& name) { return coord_power(name, ExponentExpr(1)); }
  static ClosedForm log_coord(const std::string& name, int power = 1);
  // exp(kernel); validates kernel grade and throws std::domain_error naming
  // the offending factor otherwise.
  static ClosedForm exponential(const ClosedForm& kernel);

  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  ClosedForm& operator+=(const ClosedForm& o);
  ClosedForm& operator-=(const ClosedForm& o);
  ClosedForm operator-() const;
  friend ClosedForm operator+(ClosedForm a, const ClosedForm& b) { return a += b; }
  friend ClosedForm operator-(ClosedForm a, const ClosedForm& b) { return a -= b; }
  friend ClosedForm operator*(const ClosedForm& a, const ClosedForm& b);
  ClosedForm& operator*=(const ClosedForm& o) { return *this = *this * o; }
  friend ClosedForm operator*(const ParamScalar& s, const ClosedForm& f) {
    return ClosedForm(s) * f;
  }
  friend ClosedForm operator*(const GRat& c, const ClosedForm& f) { return ClosedForm(c) * f; }
  friend bool operator==(const ClosedForm& a, const ClosedForm& b) { return compare(a, b) == 0; }
  friend bool operator!=(const ClosedForm& a, const ClosedForm& b) { return compare(a, b) != 0; }

  bool is_single_term() const { return terms_.size() == 1; }
  // Multiplicative inverse of a single term with no logarithms; the
  // exponential inverts by negating its kernel. Throws otherwise.
  ClosedForm inverse() const;
  ClosedForm pow_int(long n) const;

  // True when usable as an exponential kernel (see TermKey).
  bool is_kernel_grade(std::string* reason = nullptr) const;

  // d/d(base coordinate). Composite coordinates contribute through the chain
  // rule with the partials recorded in the coordinate system.
  ClosedForm differentiate(const std::string& base, const CoordSystem& cs) const;

  ClosedForm rename_coords(const std::map<std::string, std::string>& mapping) const;
  ClosedForm rename_params(const std::map<std::string, std::string>& mapping) const;
  // Substitute parameters by values. A parameter bound inside an exponent
  // requires an affine real-rational value; otherwise std::domain_error.
  ClosedForm substitute_params(const std::map<std::string, ParamScalar>& bindings) const;

  void collect_coords(std::set<std::string>& out) const;
  void collect_params(std::set<std::string>& out) const;

  // Re-normalizes terms (drops zero coefficients/exponents, canonicalizes
  // kernels, merges duplicates). Construction keeps forms canonical, so this
  // is mostly an idempotence guarantee.
  ClosedForm canonicalize() const;

  // Groups terms into functionally independent classes and expands composite
  // coordinates; see ConstraintGroup. Only non-vanishing groups are returned.
  std::vector<ConstraintGroup> decompose(const CoordSystem& cs) const;
  // Decidable zero test modulo the composite-coordinate definitions.
  bool is_zero(const CoordSystem& cs) const;

  std::string str() const;

 private:
  void add_term(const TermKey& key, const ParamScalar& coeff);
  TermMap terms_;
};

// A coordinate chart: base coordinates plus composite coordinates defined as
// polynomials (nonnegative integer powers, no logs/exponentials) in the base
// ones. Partials of composites are derived from the definitions.
class CoordSystem {
 public:
  struct Coordinate {
    enum class Kind { Base, Composite };
    std::string name;
    Kind kind = Kind::Base;
    ClosedForm definition;                       // composites only
    std::map<std::string, ClosedForm> partials;  // composites: d/d(base)
  };

  CoordSystem& base(const std::string& name);
  CoordSystem& composite(const std::string& name, const ClosedForm& definition);

  bool has(const std::string& name) const { return coords_.count(name) != 0; }
  bool is_base(const std::string& name) const;
  bool is_composite(const std::string& name) const;
  const Coordinate& at(const std::string& name) const;
  std::vector<std::string> base_names() const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, Coordinate> coords_;
};

// Sign assumptions attached to a verification run (e.g. t1-t2 > 0). Purely
// descriptive: forms are built per branch, no absolute values exist in the
// term language.
struct BranchContext {
  std::map<std::string, int> signs;  // coord -> +1 or -1

  BranchContext() = default;
  static BranchContext assume(const std::string& coord, int sign) {
    BranchContext b;
    b.signs[coord] = sign;
    return b;
  }
  BranchContext& and_assume(const std::string& coord, int sign) {
    signs[coord] = sign;
    return *this;
  }
  std::string str() const {
    if (signs.empty()) return "unrestricted";
    std::string s;
    for (const auto& [name, sign] : signs) {
      if (!s.empty()) s += ", ";
      s += name + (sign > 0 ? " > 0" : " < 0");
    }
    return s;
  }
};

std::string monomial_str(const Monomial& m);

}  // namespace lsi
