#include "lsi/closed_form.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace lsi {

// ---------------------------------------------------------------------------
// Ordering

int compare(const TermKey& a, const TermKey& b) {
  if (a.powers != b.powers) return a.powers < b.powers ? -1 : 1;
  if (a.logs != b.logs) return a.logs < b.logs ? -1 : 1;
  bool ka = static_cast<bool>(a.kernel);
  bool kb = static_cast<bool>(b.kernel);
  if (ka != kb) return ka < kb ? -1 : 1;
  if (!ka) return 0;
  return compare(*a.kernel, *b.kernel);
}

int compare(const ClosedForm& a, const ClosedForm& b) {
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    int c = compare(ia->first, ib->first);
    if (c != 0) return c;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  if (ia != a.terms().end()) return 1;
  if (ib != b.terms().end()) return -1;
  return 0;
}

// ---------------------------------------------------------------------------
// Construction

namespace {

std::shared_ptr<const ClosedForm> make_kernel(ClosedForm k) {
  k = k.canonicalize();
  if (k.empty()) return nullptr;
  return std::make_shared<const ClosedForm>(std::move(k));
}

TermKey normalize_key(const TermKey& key) {
  TermKey out;
  for (const auto& [name, e] : key.powers)
    if (!e.is_zero()) out.powers[name] = e;
  for (const auto& [name, k] : key.logs) {
    if (k < 0) throw std::domain_error("ClosedForm: negative power of ln(" + name + ")");
    if (k > 0) out.logs[name] = k;
  }
  if (key.kernel) out.kernel = make_kernel(*key.kernel);
  return out;
}

}  // namespace

void ClosedForm::add_term(const TermKey& key, const ParamScalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, fresh] = terms_.emplace(key, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ClosedForm ClosedForm::term(TermKey key, ParamScalar coeff) {
  ClosedForm f;
  f.add_term(normalize_key(key), coeff);
  return f;
}

ClosedForm ClosedForm::coord_power(const std::string& name, const ExponentExpr& e) {
  if (e.is_zero()) return ClosedForm(1);
  TermKey key;
  key.powers[name] = e;
  ClosedForm f;
  f.terms_[key] = ParamScalar(1);
  return f;
}

ClosedForm ClosedForm::log_coord(const std::string& name, int power) {
  if (power < 0) throw std::domain_error("ClosedForm: negative power of ln(" + name + ")");
  if (power == 0) return ClosedForm(1);
  TermKey key;
  key.logs[name] = power;
  ClosedForm f;
  f.terms_[key] = ParamScalar(1);
  return f;
}

ClosedForm ClosedForm::exponential(const ClosedForm& kernel) {
  std::string reason;
  if (!kernel.is_kernel_grade(&reason))
    throw std::domain_error("ClosedForm: exp argument is not kernel grade: " + reason);
  auto ptr = make_kernel(kernel);
  if (!ptr) return ClosedForm(1);
  TermKey key;
  key.kernel = ptr;
  ClosedForm f;
  f.terms_[key] = ParamScalar(1);
  return f;
}

// ---------------------------------------------------------------------------
// Arithmetic

ClosedForm& ClosedForm::operator+=(const ClosedForm& o) {
  for (const auto& [key, coeff] : o.terms_) add_term(key, coeff);
  return *this;
}

ClosedForm& ClosedForm::operator-=(const ClosedForm& o) {
  for (const auto& [key, coeff] : o.terms_) add_term(key, -coeff);
  return *this;
}

ClosedForm ClosedForm::operator-() const {
  ClosedForm out;
  for (const auto& [key, coeff] : terms_) out.terms_[key] = -coeff;
  return out;
}

ClosedForm operator*(const ClosedForm& a, const ClosedForm& b) {
  ClosedForm out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      TermKey key;
      key.powers = ka.powers;
      for (const auto& [name, e] : kb.powers) {
        auto [it, fresh] = key.powers.emplace(name, e);
        if (!fresh) {
          it->second += e;
          if (it->second.is_zero()) key.powers.erase(it);
        }
      }
      key.logs = ka.logs;
      for (const auto& [name, k] : kb.logs) key.logs[name] += k;
      if (ka.kernel && kb.kernel)
        key.kernel = make_kernel(*ka.kernel + *kb.kernel);
      else
        key.kernel = ka.kernel ? ka.kernel : kb.kernel;
      out.add_term(key, ca * cb);
    }
  }
  return out;
}

ClosedForm ClosedForm::inverse() const {
  if (terms_.size() != 1)
    throw std::domain_error("ClosedForm: no inverse for a sum: " + str());
  const auto& [key, coeff] = *terms_.begin();
  if (!key.logs.empty())
    throw std::domain_error("ClosedForm: cannot invert a logarithmic factor in " + str());
  TermKey inv;
  for (const auto& [name, e] : key.powers) inv.powers[name] = -e;
  if (key.kernel) inv.kernel = make_kernel(-*key.kernel);
  ClosedForm out;
  out.terms_[inv] = coeff.inverse();
  return out;
}

ClosedForm ClosedForm::pow_int(long n) const {
  if (n < 0) return inverse().pow_int(-n);
  ClosedForm acc(1);
  ClosedForm base = *this;
  unsigned long k = static_cast<unsigned long>(n);
  while (k > 0) {
    if (k & 1UL) acc *= base;
    base *= base;
    k >>= 1UL;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Grades

bool ClosedForm::is_kernel_grade(std::string* reason) const {
  for (const auto& [key, coeff] : terms_) {
    if (!key.logs.empty()) {
      if (reason) *reason = "logarithmic factor ln(" + key.logs.begin()->first + ")";
      return false;
    }
    if (key.kernel) {
      if (reason) *reason = "nested exponential factor";
      return false;
    }
    for (const auto& [name, e] : key.powers) {
      if (!e.is_constant()) {
        if (reason) *reason = "parameter-dependent exponent on " + name + ": " + e.str();
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Differentiation

namespace {

// d(coordinate)/d(base): 1, 0, or a composite partial.
const ClosedForm& coord_derivative(const std::string& name, const std::string& base,
                                   const CoordSystem& cs) {
  static const ClosedForm kOne(1);
  static const ClosedForm kZero;
  if (name == base) return kOne;
  if (cs.has(name) && cs.is_composite(name)) {
    const auto& c = cs.at(name);
    auto it = c.partials.find(base);
    if (it != c.partials.end()) return it->second;
  }
  return kZero;
}

}  // namespace

ClosedForm ClosedForm::differentiate(const std::string& base, const CoordSystem& cs) const {
  if (cs.has(base) && cs.is_composite(base))
    throw std::domain_error("differentiate: not a base coordinate: " + base);
  ClosedForm out;
  for (const auto& [key, coeff] : terms_) {
    for (const auto& [name, e] : key.powers) {
      const ClosedForm& dc = coord_derivative(name, base, cs);
      if (dc.empty()) continue;
      TermKey k = key;
      ExponentExpr e1 = e - ExponentExpr(1);
      if (e1.is_zero())
        k.powers.erase(name);
      else
        k.powers[name] = e1;
      out += ClosedForm::term(k, coeff * ParamScalar::from_exponent(e)) * dc;
    }
    for (const auto& [name, lp] : key.logs) {
      const ClosedForm& dc = coord_derivative(name, base, cs);
      if (dc.empty()) continue;
      TermKey k = key;
      if (lp == 1)
        k.logs.erase(name);
      else
        k.logs[name] = lp - 1;
      auto pit = k.powers.find(name);
      ExponentExpr pe = (pit == k.powers.end()) ? ExponentExpr(0) : pit->second;
      pe -= ExponentExpr(1);
      if (pe.is_zero())
        k.powers.erase(name);
      else
        k.powers[name] = pe;
      out += ClosedForm::term(k, coeff * ParamScalar(lp)) * dc;
    }
    if (key.kernel) {
      ClosedForm dk = key.kernel->differentiate(base, cs);
      if (!dk.empty()) out += ClosedForm::term(key, coeff) * dk;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Renaming and substitution

ClosedForm ClosedForm::rename_coords(const std::map<std::string, std::string>& mapping) const {
  ClosedForm out;
  for (const auto& [key, coeff] : terms_) {
    TermKey k;
    for (const auto& [name, e] : key.powers) {
      auto it = mapping.find(name);
      const std::string& nn = (it == mapping.end()) ? name : it->second;
      if (!k.powers.emplace(nn, e).second)
        throw std::logic_error("rename_coords: collision on coordinate " + nn);
    }
    for (const auto& [name, lp] : key.logs) {
      auto it = mapping.find(name);
      const std::string& nn = (it == mapping.end()) ? name : it->second;
      if (!k.logs.emplace(nn, lp).second)
        throw std::logic_error("rename_coords: collision on coordinate " + nn);
    }
    if (key.kernel) k.kernel = make_kernel(key.kernel->rename_coords(mapping));
    out.add_term(k, coeff);
  }
  return out;
}

ClosedForm ClosedForm::rename_params(const std::map<std::string, std::string>& mapping) const {
  ClosedForm out;
  for (const auto& [key, coeff] : terms_) {
    TermKey k;
    for (const auto& [name, e] : key.powers) {
      ExponentExpr ne = e.rename_all(mapping);
      if (ne.is_zero()) continue;
      auto [it, fresh] = k.powers.emplace(name, ne);
      if (!fresh) it->second += ne;
    }
    k.logs = key.logs;
    if (key.kernel) k.kernel = make_kernel(key.kernel->rename_params(mapping));
    out += ClosedForm::term(k, coeff.rename_all(mapping));
  }
  return out;
}

ClosedForm ClosedForm::substitute_params(
    const std::map<std::string, ParamScalar>& bindings) const {
  // Bindings usable inside exponents must be affine with real rational
  // coefficients; collect those up front.
  std::map<std::string, ExponentExpr> affine;
  for (const auto& [name, value] : bindings) {
    ExponentExpr e;
    if (value.to_affine_exponent(e)) affine[name] = e;
  }
  ClosedForm out;
  for (const auto& [key, coeff] : terms_) {
    TermKey k;
    for (const auto& [name, e] : key.powers) {
      for (const auto& [pname, value] : bindings) {
        if (e.uses(pname) && !affine.count(pname))
          throw std::domain_error("substitute_params: binding for " + pname +
                                  " is not affine; it appears in the exponent of " + name);
      }
      ExponentExpr ne = e.substitute_all(affine);
      if (ne.is_zero()) continue;
      k.powers[name] = ne;
    }
    k.logs = key.logs;
    if (key.kernel) k.kernel = make_kernel(key.kernel->substitute_params(bindings));
    out += ClosedForm::term(k, coeff.substitute_all(bindings));
  }
  return out;
}

void ClosedForm::collect_coords(std::set<std::string>& out) const {
  for (const auto& [key, coeff] : terms_) {
    for (const auto& [name, e] : key.powers) out.insert(name);
    for (const auto& [name, k] : key.logs) out.insert(name);
    if (key.kernel) key.kernel->collect_coords(out);
  }
}

void ClosedForm::collect_params(std::set<std::string>& out) const {
  for (const auto& [key, coeff] : terms_) {
    coeff.collect_params(out);
    for (const auto& [name, e] : key.powers)
      for (const auto& [p, w] : e.linear) out.insert(p);
    if (key.kernel) key.kernel->collect_params(out);
  }
}

ClosedForm ClosedForm::canonicalize() const {
  ClosedForm out;
  for (const auto& [key, coeff] : terms_) out.add_term(normalize_key(key), coeff);
  return out;
}

// ---------------------------------------------------------------------------
// Decomposition and the zero test

namespace {

using Poly = std::map<Monomial, ParamScalar>;

void poly_add(Poly& into, const Monomial& m, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = into.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Monomial m = ma;
      for (const auto& [name, k] : mb) {
        int& slot = m[name];
        slot += k;
        if (slot == 0) m.erase(name);
      }
      poly_add(out, m, ca * cb);
    }
  }
  return out;
}

Poly poly_pow(const Poly& p, long n) {
  Poly acc{{Monomial{}, ParamScalar(1)}};
  Poly base = p;
  unsigned long k = static_cast<unsigned long>(n);
  while (k > 0) {
    if (k & 1UL) acc = poly_mul(acc, base);
    base = poly_mul(base, base);
    k >>= 1UL;
  }
  return acc;
}

// A composite definition as a Laurent-ring polynomial over base coordinates.
Poly definition_poly(const ClosedForm& def) {
  Poly out;
  for (const auto& [key, coeff] : def.terms()) {
    Monomial m;
    for (const auto& [name, e] : key.powers)
      m[name] = static_cast<int>(e.constant_value().convert_to<BigInt>().convert_to<long>());
    poly_add(out, m, coeff);
  }
  return out;
}

}  // namespace

std::vector<ConstraintGroup> ClosedForm::decompose(const CoordSystem& cs) const {
  struct Entry {
    std::map<std::string, BigInt> offsets;
    ParamScalar coeff;
  };
  std::map<TermKey, std::vector<Entry>, TermKeyLess> buckets;
  for (const auto& [key, coeff] : terms_) {
    TermKey cls;
    cls.logs = key.logs;
    cls.kernel = key.kernel;
    Entry ent;
    ent.coeff = coeff;
    for (const auto& [name, e] : key.powers) {
      ExponentExpr rem = e;
      BigInt off = rem.split_integer_offset();
      if (!rem.is_zero()) cls.powers[name] = rem;
      if (off != 0) ent.offsets[name] = off;
    }
    buckets[cls].push_back(std::move(ent));
  }

  std::vector<ConstraintGroup> out;
  for (auto& [cls, entries] : buckets) {
    std::set<std::string> offcoords;
    for (const auto& ent : entries)
      for (const auto& [name, off] : ent.offsets) offcoords.insert(name);

    // Minimum integer offset per coordinate; a term without the coordinate
    // counts as offset 0.
    std::map<std::string, BigInt> mins;
    for (const auto& name : offcoords) {
      BigInt m;
      bool first = true;
      for (const auto& ent : entries) {
        auto it = ent.offsets.find(name);
        BigInt v = (it == ent.offsets.end()) ? BigInt(0) : it->second;
        if (first || v < m) m = v;
        first = false;
      }
      mins[name] = m;
    }

    ConstraintGroup g;
    g.class_key = cls;
    for (const auto& [name, m] : mins) {
      if (m == 0) continue;
      ExponentExpr shift{Rat(m)};
      auto [it, fresh] = g.class_key.powers.emplace(name, shift);
      if (!fresh) {
        it->second += shift;
        if (it->second.is_zero()) g.class_key.powers.erase(it);
      }
    }

    for (const auto& ent : entries) {
      Poly acc{{Monomial{}, ent.coeff}};
      for (const auto& name : offcoords) {
        auto it = ent.offsets.find(name);
        BigInt rel = ((it == ent.offsets.end()) ? BigInt(0) : it->second) - mins.at(name);
        if (rel == 0) continue;
        long n = rel.convert_to<long>();
        if (cs.has(name) && cs.is_composite(name)) {
          acc = poly_mul(acc, poly_pow(definition_poly(cs.at(name).definition), n));
        } else {
          Poly shifted;
          for (const auto& [m, c] : acc) {
            Monomial nm = m;
            nm[name] += static_cast<int>(n);
            if (nm[name] == 0) nm.erase(name);
            shifted.emplace(nm, c);
          }
          acc = std::move(shifted);
        }
      }
      for (const auto& [m, c] : acc) poly_add(g.poly, m, c);
    }
    if (!g.poly.empty()) out.push_back(std::move(g));
  }
  return out;
}

bool ClosedForm::is_zero(const CoordSystem& cs) const {
  if (terms_.empty()) return true;
  return decompose(cs).empty();
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string key_str(const TermKey& key) {
  std::string s;
  for (const auto& [name, e] : key.powers) {
    if (!s.empty()) s += "*";
    if (e == ExponentExpr(1)) {
      s += name;
    } else if (e.is_integer() && e.constant > 0) {
      s += name + "^" + rat_str(e.constant);
    } else {
      s += name + "^(" + e.str() + ")";
    }
  }
  for (const auto& [name, k] : key.logs) {
    if (!s.empty()) s += "*";
    s += "ln(" + name + ")";
    if (k > 1) s += "^" + std::to_string(k);
  }
  if (key.kernel) {
    if (!s.empty()) s += "*";
    s += "exp(" + key.kernel->str() + ")";
  }
  return s;
}

}  // namespace

std::string ClosedForm::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [key, coeff] : terms_) {
    std::string factors = key_str(key);
    std::string piece;
    if (factors.empty()) {
      piece = coeff.str();
    } else if (coeff.is_one()) {
      piece = factors;
    } else if (coeff == ParamScalar(GRat(-1))) {
      piece = "-" + factors;
    } else if (!coeff.needs_parens_as_factor()) {
      piece = coeff.str() + "*" + factors;
    } else {
      piece = "(" + coeff.str() + ")*" + factors;
    }
    if (!s.empty() && piece[0] != '-') s += "+";
    s += piece;
  }
  return s;
}

std::string monomial_str(const Monomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (const auto& [name, k] : m) {
    if (!s.empty()) s += "*";
    s += name;
    if (k != 1) s += (k > 0) ? "^" + std::to_string(k) : "^(" + std::to_string(k) + ")";
  }
  return s;
}

// ---------------------------------------------------------------------------
// CoordSystem

CoordSystem& CoordSystem::base(const std::string& name) {
  if (coords_.count(name)) throw std::logic_error("CoordSystem: duplicate coordinate " + name);
  Coordinate c;
  c.name = name;
  c.kind = Coordinate::Kind::Base;
  coords_[name] = std::move(c);
  return *this;
}

CoordSystem& CoordSystem::composite(const std::string& name, const ClosedForm& definition) {
  if (coords_.count(name)) throw std::logic_error("CoordSystem: duplicate coordinate " + name);
  for (const auto& [key, coeff] : definition.terms()) {
    if (!key.logs.empty() || key.kernel)
      throw std::domain_error("CoordSystem: definition of " + name + " is not polynomial");
    for (const auto& [cname, e] : key.powers) {
      if (!is_base(cname))
        throw std::domain_error("CoordSystem: definition of " + name +
                                " references non-base coordinate " + cname);
      if (!e.is_integer() || e.constant < 1)
        throw std::domain_error("CoordSystem: definition of " + name +
                                " has a non-polynomial power of " + cname);
    }
  }
  Coordinate c;
  c.name = name;
  c.kind = Coordinate::Kind::Composite;
  c.definition = definition.canonicalize();
  for (const auto& b : base_names()) {
    ClosedForm d = c.definition.differentiate(b, *this);
    if (!d.empty()) c.partials[b] = std::move(d);
  }
  coords_[name] = std::move(c);
  return *this;
}

bool CoordSystem::is_base(const std::string& name) const {
  auto it = coords_.find(name);
  return it != coords_.end() && it->second.kind == Coordinate::Kind::Base;
}

bool CoordSystem::is_composite(const std::string& name) const {
  auto it = coords_.find(name);
  return it != coords_.end() && it->second.kind == Coordinate::Kind::Composite;
}

const CoordSystem::Coordinate& CoordSystem::at(const std::string& name) const {
  auto it = coords_.find(name);
  if (it == coords_.end()) throw std::out_of_range("CoordSystem: unknown coordinate " + name);
  return it->second;
}

std::vector<std::string> CoordSystem::base_names() const {
  std::vector<std::string> out;
  for (const auto& [name, c] : coords_)
    if (c.kind == Coordinate::Kind::Base) out.push_back(name);
  return out;
}

std::vector<std::string> CoordSystem::names() const {
  std::vector<std::string> out;
  for (const auto& [name, c] : coords_) out.push_back(name);
  return out;
}

}  // namespace lsi
