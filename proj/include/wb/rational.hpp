/*
  rational.hpp — exact scalar types for the whole library.

  Everything downstream computes over Q (GMP-backed rationals) or over the
  Gaussian rationals Q(i).  No floating point appears anywhere.
*/
#ifndef WB_RATIONAL_HPP
#define WB_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/functional/hash.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wb {

/// Thrown when a configurable resource cap (orbit size, ambient tensor
/// dimension) would be exceeded.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline std::string to_string(const Rational& x) { return x.str(); }

/// Gaussian rational a + b*i with exact rational components.
struct GaussQ {
  Rational re, im;

  GaussQ() : re(0), im(0) {}
  GaussQ(long v) : re(v), im(0) {}
  GaussQ(Rational r) : re(std::move(r)), im(0) {}
  GaussQ(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussQ i() { return GaussQ(Rational(0), Rational(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  GaussQ conj() const { return GaussQ(re, -im); }

  GaussQ operator-() const { return GaussQ(-re, -im); }
  GaussQ& operator+=(const GaussQ& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussQ& operator-=(const GaussQ& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussQ& operator*=(const GaussQ& o) {
    if (im.is_zero() && o.im.is_zero()) {
      re *= o.re;
      return *this;
    }
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussQ& operator/=(const GaussQ& o) {
    if (o.im.is_zero()) {
      re /= o.re;
      im /= o.re;
      return *this;
    }
    Rational n = o.re * o.re + o.im * o.im;
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
  friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
  friend GaussQ operator*(GaussQ a, const GaussQ& b) { return a *= b; }
  friend GaussQ operator/(GaussQ a, const GaussQ& b) { return a /= b; }
  friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GaussQ& a, const GaussQ& b) { return !(a == b); }
};

inline bool is_zero(const GaussQ& x) { return x.is_zero(); }

inline std::string to_string(const GaussQ& x) {
  if (x.im.is_zero()) return x.re.str();
  if (x.re.is_zero()) return x.im.str() + "i";
  std::string s = x.re.str();
  if (x.im > 0) s += "+";
  return s + x.im.str() + "i";
}

/// Scalar traits shared by the templated linear algebra.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr bool is_complex = false;
  static GaussQ to_gauss(const Rational& x) { return GaussQ(x); }
  static Rational conj(const Rational& x) { return x; }
};

template <>
struct FieldTraits<GaussQ> {
  static constexpr bool is_complex = true;
  static GaussQ to_gauss(const GaussQ& x) { return x; }
  static GaussQ conj(const GaussQ& x) { return x.conj(); }
};

inline std::size_t hash_value(const GaussQ& x) {
  std::size_t seed = boost::hash<Rational>{}(x.re);
  boost::hash_combine(seed, boost::hash<Rational>{}(x.im));
  return seed;
}

struct RationalVecHash {
  std::size_t operator()(const std::vector<Rational>& v) const {
    std::size_t seed = v.size();
    for (const auto& x : v) boost::hash_combine(seed, boost::hash<Rational>{}(x));
    return seed;
  }
};

}  // namespace wb

#endif
