#pragma once

// Scalar backends. Two are supported: exact rationals (GMP) and double
// precision complex numbers. Everything else in the library is templated on
// the scalar type and reaches the backend through scalar_traits<S>.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "tqft2d/error.hpp"

namespace tqft2d {

using Rational = mpq_class;
using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;

template <class S>
struct scalar_traits;

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

// Parses `[+-]digits[/digits]`.
inline Rational parse_fraction(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

inline double parse_real(std::string_view text) {
  std::string_view s = trim(text);
  if (s.find('/') != std::string_view::npos) return parse_fraction(s).get_d();
  std::string buf(s);
  if (buf.empty()) throw InvalidArgument("empty number");
  char* end = nullptr;
  double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size())
    throw InvalidArgument("malformed number '" + buf + "'");
  return v;
}

inline std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // drop negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace detail

template <>
struct scalar_traits<Rational> {
  using magnitude_type = Rational;
  static constexpr std::string_view name = "rational";

  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational conj(const Rational& a) { return a; }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static bool is_real(const Rational&, double = kDefaultTolerance) { return true; }
  static Rational distance(const Rational& a, const Rational& b) {
    return Rational(abs(a - b));
  }
  // Rationals always compare exactly; the tolerance is ignored.
  static bool near(const Rational& a, const Rational& b, double = kDefaultTolerance) {
    return a == b;
  }
  static bool within(const magnitude_type& m, double) { return sgn(m) == 0; }
  static Rational inverse(const Rational& a) { return Rational(1) / a; }
  static std::string format(const Rational& a) { return a.get_str(); }
  static std::string format_magnitude(const magnitude_type& m) { return m.get_str(); }
  static Rational parse(std::string_view text) { return detail::parse_fraction(text); }
};

template <>
struct scalar_traits<Complex> {
  using magnitude_type = double;
  static constexpr std::string_view name = "complex";

  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex conj(const Complex& a) { return std::conj(a); }
  static bool is_zero(const Complex& a) { return a == zero(); }
  static bool is_real(const Complex& a, double tol = kDefaultTolerance) {
    return std::abs(a.imag()) <= tol;
  }
  static double distance(const Complex& a, const Complex& b) { return std::abs(a - b); }
  static bool near(const Complex& a, const Complex& b, double tol = kDefaultTolerance) {
    return distance(a, b) <= tol;
  }
  static bool within(double m, double tol) { return m <= tol; }
  static Complex inverse(const Complex& a) { return one() / a; }

  // `a+bi` with 12 significant digits.
  static std::string format(const Complex& a) {
    std::string out = detail::format_double(a.real());
    double im = a.imag() == 0.0 ? 0.0 : a.imag();
    out += std::signbit(im) ? '-' : '+';
    out += detail::format_double(std::abs(im));
    out += 'i';
    return out;
  }
  static std::string format_magnitude(double m) { return detail::format_double(m); }

  // Accepts `a`, `p/q`, `a+bi`, `a-bi`, `bi`, `i`, `-i`.
  static Complex parse(std::string_view text) {
    std::string_view s = detail::trim(text);
    if (s.empty()) throw InvalidArgument("empty scalar");
    if (s.back() != 'i') return {detail::parse_real(s), 0.0};
    s.remove_suffix(1);
    std::size_t split = std::string_view::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
      if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    std::string_view re = split == std::string_view::npos ? std::string_view() : s.substr(0, split);
    std::string_view im = split == std::string_view::npos ? s : s.substr(split);
    double imag = 0.0;
    if (im.empty() || im == "+")
      imag = 1.0;
    else if (im == "-")
      imag = -1.0;
    else
      imag = detail::parse_real(im);
    return {re.empty() ? 0.0 : detail::parse_real(re), imag};
  }
};

template <class S>
concept ScalarBackend = requires { typename scalar_traits<S>::magnitude_type; };

}  // namespace tqft2d
