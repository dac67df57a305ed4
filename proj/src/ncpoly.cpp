#include "lsi/ncpoly.hpp"

#include <map>
#include <utility>
#include <vector>

#include "lsi/param_scalar.hpp"

namespace lsi {

namespace {

// A letter of the free algebra: L_n (prime = 0) or L'_n (prime = 1).
struct VirLetter {
  int prime = 0;
  long n = 0;
  friend bool operator<(const VirLetter& a, const VirLetter& b) {
    return std::pair(a.prime, a.n) < std::pair(b.prime, b.n);
  }
  friend bool operator==(const VirLetter& a, const VirLetter& b) {
    return a.prime == b.prime && a.n == b.n;
  }
};

using VirWord = std::vector<VirLetter>;

ParamScalar charge(int prime) { return ParamScalar::param(prime ? "cp" : "c"); }

// Polynomial in normally ordered words (letters sorted ascending). The
// product rewrites out-of-order adjacent pairs with
//   L_a L_b = L_b L_a + (a-b) L_{a+b} + delta_{a+b,0} (c/12)(a^3-a)
// and lets primed letters commute through unprimed ones.
class VirPoly {
 public:
  VirPoly() = default;
  explicit VirPoly(ParamScalar s) {
    if (!s.is_zero()) terms_[{}] = std::move(s);
  }
  static VirPoly letter(int prime, long n) {
    VirPoly p;
    p.terms_[{VirLetter{prime, n}}] = ParamScalar(1);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<VirWord, ParamScalar>& terms() const { return terms_; }

  VirPoly& operator+=(const VirPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  friend VirPoly operator+(VirPoly a, const VirPoly& b) { return a += b; }
  friend VirPoly operator-(const VirPoly& a, const VirPoly& b) {
    VirPoly out = a;
    for (const auto& [w, c] : b.terms_) out.add(w, -c);
    return out;
  }
  friend VirPoly operator*(const ParamScalar& s, const VirPoly& p) {
    VirPoly out;
    if (s.is_zero()) return out;
    for (const auto& [w, c] : p.terms_) out.terms_[w] = s * c;
    return out;
  }
  friend VirPoly operator*(const VirPoly& a, const VirPoly& b) {
    VirPoly out;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        VirWord w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        out.reduce(std::move(w), ca * cb);
      }
    return out;
  }
  friend VirPoly commutator(const VirPoly& a, const VirPoly& b) { return a * b - b * a; }
  friend bool operator==(const VirPoly& a, const VirPoly& b) { return (a - b).is_zero(); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      out += "(" + c.str() + ")";
      for (const auto& l : w)
        out += std::string("*L") + (l.prime ? "'" : "") + "_" + std::to_string(l.n);
    }
    return out;
  }

 private:
  void add(const VirWord& w, const ParamScalar& c) {
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_[w] = c;
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  // Adds c * w after rewriting w to normal order.
  void reduce(VirWord w, ParamScalar c) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const VirLetter a = w[i], b = w[i + 1];
      if (!(b < a)) continue;
      // swap the pair
      VirWord swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      if (a.prime != b.prime) {
        reduce(std::move(swapped), std::move(c));
        return;
      }
      // same family: Virasoro bracket terms
      VirWord contracted = w;
      contracted.erase(contracted.begin() + i, contracted.begin() + i + 2);
      VirWord merged = contracted;
      merged.insert(merged.begin() + i, VirLetter{a.prime, a.n + b.n});
      reduce(std::move(swapped), c);
      reduce(std::move(merged), ParamScalar(GRat(Rat(a.n - b.n))) * c);
      if (a.n + b.n == 0) {
        const Rat k = Rat(a.n * a.n * a.n - a.n, 12);
        reduce(std::move(contracted), ParamScalar(GRat(k)) * charge(a.prime) * c);
      }
      return;
    }
    add(w, c);
  }

  std::map<VirWord, ParamScalar> terms_;
};

struct MatV {
  VirPoly a, b, c, d;  // row-major [[a, b], [c, d]]
  friend MatV operator*(const MatV& x, const MatV& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
  friend MatV operator-(const MatV& x, const MatV& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend MatV operator+(const MatV& x, const MatV& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend MatV commutator(const MatV& x, const MatV& y) { return x * y - y * x; }
  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
  std::string str() const {
    return "[[" + a.str() + ", " + b.str() + "], [" + c.str() + ", " + d.str() + "]]";
  }
};

MatV big_X(long n) {
  VirPoly diag = VirPoly::letter(0, n) + VirPoly::letter(1, n);
  return {diag, VirPoly(), VirPoly(), diag};
}

MatV big_Y(long n) { return {VirPoly(), VirPoly::letter(0, n), VirPoly(), VirPoly()}; }

MatV scaled(const ParamScalar& s, const MatV& m) {
  return {s * m.a, s * m.b, s * m.c, s * m.d};
}

}  // namespace

CentralChargeReport verify_matrix_central_charges(int lo, int hi, const Rat& central_scale) {
  CentralChargeReport report;
  report.lo = lo;
  report.hi = hi;

  const ParamScalar cX = ParamScalar::param("c") + ParamScalar::param("cp");
  const ParamScalar cY = ParamScalar::param("c");
  auto weight = [&](long n) { return ParamScalar(GRat(Rat(n * n * n - n, 12) * central_scale)); };
  auto check = [&](const std::string& name, const MatV& residual) {
    ++report.checked;
    if (!residual.is_zero()) {
      ++report.failures;
      report.details.push_back(name + " residual " + residual.str());
    }
  };

  for (long n = lo; n <= hi; ++n)
    for (long m = lo; m <= hi; ++m) {
      if (n < m) {
        MatV expect = scaled(ParamScalar(GRat(Rat(n - m))), big_X(n + m));
        if (n + m == 0) {
          const ParamScalar cc = weight(n) * cX;
          expect = expect + MatV{VirPoly(cc), VirPoly(), VirPoly(), VirPoly(cc)};
        }
        check("[X_" + std::to_string(n) + ", X_" + std::to_string(m) + "]",
              commutator(big_X(n), big_X(m)) - expect);
        check("[Y_" + std::to_string(n) + ", Y_" + std::to_string(m) + "]",
              commutator(big_Y(n), big_Y(m)));
      }
      MatV expect = scaled(ParamScalar(GRat(Rat(n - m))), big_Y(n + m));
      if (n + m == 0) expect = expect + MatV{VirPoly(), VirPoly(weight(n) * cY), VirPoly(), VirPoly()};
      check("[X_" + std::to_string(n) + ", Y_" + std::to_string(m) + "]",
            commutator(big_X(n), big_Y(m)) - expect);
    }
  return report;
}

}  // namespace lsi
