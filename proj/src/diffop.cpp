#include "lsi/diffop.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace lsi {

namespace {

CoordMono merge_mono(const CoordMono& a, const CoordMono& b) {
  CoordMono m = a;
  for (const auto& [name, e] : b) {
    Rat& slot = m[name];
    slot += e;
    if (slot == 0) m.erase(name);
  }
  return m;
}

Monomial merge_partials(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (const auto& [name, k] : b) {
    int& slot = m[name];
    slot += k;
    if (slot == 0) m.erase(name);
  }
  return m;
}

Rat binomial(int n, int k) {
  Rat r = 1;
  for (int j = 0; j < k; ++j) r *= Rat(n - j, j + 1);
  return r;
}

// d^m/dc^m of c^e: falling-factorial coefficient and the reduced exponent.
// Returns false when the derivative vanishes identically.
bool monomial_derivative(const CoordMono& mono, const std::string& coord, int order, Rat& factor,
                         CoordMono& reduced) {
  auto it = mono.find(coord);
  Rat e = (it == mono.end()) ? Rat(0) : it->second;
  Rat f = 1;
  for (int j = 0; j < order; ++j) f *= (e - j);
  if (f == 0) return false;
  factor = f;
  reduced = mono;
  Rat ne = e - order;
  if (ne == 0)
    reduced.erase(coord);
  else
    reduced[coord] = ne;
  return true;
}

}  // namespace

void DiffOp::add_term(const DKey& key, const Mat2& coeff) {
  if (coeff.is_zero()) return;
  auto [it, fresh] = terms_.emplace(key, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffOp DiffOp::term(DKey key, Mat2 coeff) {
  for (const auto& [name, e] : key.powers)
    if (e == 0) throw std::logic_error("DiffOp: zero exponent on " + name);
  for (const auto& [name, k] : key.partials)
    if (k < 1) throw std::logic_error("DiffOp: bad derivative order on " + name);
  DiffOp op;
  op.add_term(key, coeff);
  return op;
}

DiffOp DiffOp::multiplication(const CoordMono& mono, Mat2 coeff) {
  DKey key;
  key.powers = mono;
  return term(std::move(key), std::move(coeff));
}

DiffOp DiffOp::partial(const std::string& coord, int order) {
  DKey key;
  key.partials[coord] = order;
  return term(std::move(key), Mat2::identity());
}

bool DiffOp::is_scalar_op() const {
  for (const auto& [key, m] : terms_)
    if (!m.is_scalar()) return false;
  return true;
}

bool DiffOp::is_multiplication() const {
  for (const auto& [key, m] : terms_)
    if (!key.partials.empty()) return false;
  return true;
}

ClosedForm DiffOp::multiplier_form() const {
  ClosedForm out;
  for (const auto& [key, m] : terms_) {
    if (!key.partials.empty())
      throw std::domain_error("DiffOp: not a multiplication operator: " + str());
    if (!m.is_scalar())
      throw std::domain_error("DiffOp: matrix-valued multiplier: " + str());
    ClosedForm mono(1);
    for (const auto& [name, e] : key.powers)
      mono *= ClosedForm::coord_power(name, ExponentExpr(e));
    out += m.a * mono;
  }
  return out;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  for (const auto& [key, m] : o.terms_) add_term(key, m);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  for (const auto& [key, m] : o.terms_) add_term(key, -m);
  return *this;
}

DiffOp DiffOp::operator-() const {
  DiffOp out;
  for (const auto& [key, m] : terms_) out.terms_[key] = -m;
  return out;
}

DiffOp operator*(const DiffOp& x, const DiffOp& y) {
  DiffOp out;
  for (const auto& [kx, mx] : x.terms()) {
    for (const auto& [ky, my] : y.terms()) {
      // Push d^{kx.partials} through ky.powers by the multi-index Leibniz
      // rule: sum over sub-orders g_c <= kx.partials_c.
      std::vector<std::pair<std::string, int>> alpha(kx.partials.begin(), kx.partials.end());
      Mat2 coeff = mx * my;

      std::function<void(std::size_t, Rat, const CoordMono&, Monomial)> expand =
          [&](std::size_t idx, Rat factor, const CoordMono& mono, Monomial gamma) {
            if (idx == alpha.size()) {
              DKey key;
              key.powers = merge_mono(kx.powers, mono);
              key.partials = merge_partials(gamma, ky.partials);
              out.add_term(key, ParamScalar(GRat(factor)) * coeff);
              return;
            }
            const auto& [coord, order] = alpha[idx];
            for (int g = 0; g <= order; ++g) {
              int hit = order - g;  // derivatives landing on the monomial
              Rat f;
              CoordMono reduced;
              if (hit == 0) {
                f = 1;
                reduced = mono;
              } else if (!monomial_derivative(mono, coord, hit, f, reduced)) {
                continue;
              }
              Monomial g2 = gamma;
              if (g > 0) g2[coord] += g;
              expand(idx + 1, factor * binomial(order, g) * f, reduced, std::move(g2));
            }
          };
      expand(0, Rat(1), ky.powers, Monomial{});
    }
  }
  return out;
}

DiffOp DiffOp::scaled(const Mat2& m) const {
  DiffOp out;
  for (const auto& [key, c] : terms_) out.add_term(key, m * c);
  return out;
}

DiffOp DiffOp::scaled_by_monomial(const CoordMono& mono) const {
  DiffOp out;
  for (const auto& [key, c] : terms_) {
    DKey k = key;
    k.powers = merge_mono(k.powers, mono);
    out.add_term(k, c);
  }
  return out;
}

DiffOp DiffOp::rename_coords(const std::map<std::string, std::string>& mapping) const {
  auto rename = [&](const std::string& name) {
    auto it = mapping.find(name);
    return it == mapping.end() ? name : it->second;
  };
  DiffOp out;
  for (const auto& [key, m] : terms_) {
    DKey k;
    for (const auto& [name, e] : key.powers) {
      Rat& slot = k.powers[rename(name)];
      slot += e;
      if (slot == 0) k.powers.erase(rename(name));
    }
    for (const auto& [name, o] : key.partials) k.partials[rename(name)] += o;
    out.add_term(k, m);
  }
  return out;
}

DiffOp DiffOp::rename_params(const std::map<std::string, std::string>& mapping) const {
  DiffOp out;
  for (const auto& [key, m] : terms_)
    out.add_term(key, m.map([&](const ParamScalar& s) { return s.rename_all(mapping); }));
  return out;
}

DiffOp DiffOp::substitute_params(const std::map<std::string, ParamScalar>& bindings) const {
  DiffOp out;
  for (const auto& [key, m] : terms_)
    out.add_term(key, m.map([&](const ParamScalar& s) { return s.substitute_all(bindings); }));
  return out;
}

DiffOp DiffOp::derivative_param(const std::string& name) const {
  DiffOp out;
  for (const auto& [key, m] : terms_)
    out.add_term(key, m.map([&](const ParamScalar& s) { return s.derivative(name); }));
  return out;
}

ClosedForm DiffOp::apply_scalar(const ClosedForm& f, const CoordSystem& cs) const {
  ClosedForm out;
  for (const auto& [key, m] : terms_) {
    if (!m.is_scalar())
      throw std::domain_error("DiffOp: apply_scalar on a matrix-coefficient operator");
    ClosedForm g = f;
    for (const auto& [coord, order] : key.partials)
      for (int j = 0; j < order; ++j) g = g.differentiate(coord, cs);
    ClosedForm mono(1);
    for (const auto& [name, e] : key.powers)
      mono *= ClosedForm::coord_power(name, ExponentExpr(e));
    out += mono * (m.a * g);
  }
  return out;
}

void DiffOp::collect_coords(std::set<std::string>& out) const {
  for (const auto& [key, m] : terms_) {
    for (const auto& [name, e] : key.powers) out.insert(name);
    for (const auto& [name, o] : key.partials) out.insert(name);
  }
}

void DiffOp::collect_params(std::set<std::string>& out) const {
  for (const auto& [key, m] : terms_) {
    m.a.collect_params(out);
    m.b.collect_params(out);
    m.c.collect_params(out);
    m.d.collect_params(out);
  }
}

std::string DiffOp::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [key, m] : terms_) {
    std::string piece;
    std::string coeff = m.str();
    if (m.is_scalar() && m.a.needs_parens_as_factor()) coeff = "(" + coeff + ")";
    piece = coeff;
    for (const auto& [name, e] : key.powers) {
      piece += "*" + name;
      if (e != 1) piece += "^(" + rat_str(e) + ")";
    }
    for (const auto& [name, o] : key.partials) {
      piece += "*d_" + name;
      if (o > 1) piece += "^" + std::to_string(o);
    }
    if (!s.empty()) s += " + ";
    s += piece;
  }
  return s;
}

}  // namespace lsi
