#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <stdexcept>
#include <string>

namespace lsi {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

// Floor toward -infinity (denominator of a cpp_rational is always positive).
inline BigInt rat_floor(const Rat& q) {
  BigInt num = numerator(q);
  BigInt den = denominator(q);
  BigInt quot = num / den;
  if (num % den != 0 && num < 0) --quot;
  return quot;
}

// Fractional part in [0, 1).
inline Rat rat_frac(const Rat& q) { return q - Rat(rat_floor(q)); }

inline std::string rat_str(const Rat& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

// Exact complex rational re + im*i. The value type for every coefficient in
// the symbolic layer; no floating point enters through this class.
struct GRat {
  Rat re{0};
  Rat im{0};

  GRat() = default;
  GRat(int v) : re(v) {}                                   // NOLINT(google-explicit-constructor)
  GRat(const Rat& v) : re(v) {}                            // NOLINT(google-explicit-constructor)
  GRat(Rat real, Rat imag) : re(std::move(real)), im(std::move(imag)) {}

  static GRat i() { return GRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }
  bool is_real() const { return im == 0; }

  GRat operator-() const { return GRat(-re, -im); }
  GRat& operator+=(const GRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GRat& operator-=(const GRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GRat operator+(GRat a, const GRat& b) { return a += b; }
  friend GRat operator-(GRat a, const GRat& b) { return a -= b; }
  friend GRat operator*(const GRat& a, const GRat& b) {
    return GRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  GRat& operator*=(const GRat& o) { return *this = *this * o; }

  GRat conj() const { return GRat(re, -im); }
  Rat norm2() const { return re * re + im * im; }

  GRat inv() const {
    Rat n = norm2();
    if (n == 0) throw std::domain_error("GRat: division by zero");
    return GRat(re / n, -im / n);
  }
  friend GRat operator/(const GRat& a, const GRat& b) { return a * b.inv(); }

  GRat pow(long n) const {
    GRat base = n < 0 ? inv() : *this;
    unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    GRat acc(1);
    while (k > 0) {
      if (k & 1UL) acc *= base;
      base *= base;
      k >>= 1UL;
    }
    return acc;
  }

  friend bool operator==(const GRat& a, const GRat& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }
  // Lexicographic order; used only to make containers and renders deterministic.
  friend bool operator<(const GRat& a, const GRat& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }

  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

  // Renders "0", "1", "-3/2", "i", "-i", "2*i", "3/2-i", ... The result is a
  // valid expression in the text grammar (i is a reserved literal there).
  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    if (re != 0) s = rat_str(re);
    if (im != 0) {
      if (im == 1)
        s += s.empty() ? "i" : "+i";
      else if (im == -1)
        s += "-i";
      else {
        if (!s.empty() && im > 0) s += "+";
        s += rat_str(im) + "*i";
      }
    }
    return s;
  }

  // True when the sum form would need parentheses as a factor.
  bool is_sum() const { return re != 0 && im != 0; }
};

}  // namespace lsi
