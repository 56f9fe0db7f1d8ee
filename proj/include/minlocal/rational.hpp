#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <ostream>
#include <string>
#include <utility>

#include "minlocal/common.hpp"

namespace minlocal {

using BigInt = boost::multiprecision::cpp_int;

/// Multiplicity of the prime p in a nonzero integer.
inline long long int_valuation(BigInt x, long long p) {
  if (x == 0) throw DomainError("valuation of zero");
  long long v = 0;
  x = boost::multiprecision::abs(x);
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

inline BigInt int_pow(long long base, long long exp) {
  BigInt r = 1;
  BigInt b = base;
  for (long long e = exp; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

/// Reduced fraction num/den with den > 0.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }

  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
  }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of rational zero");
    return Rational(den_, num_);
  }

  Rational pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Rational r(1), b = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) r = r * b;
      b = b * b;
    }
    return r;
  }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }

  /// p-adic valuation of a nonzero rational.
  long long valuation(long long p) const {
    if (is_zero()) throw DomainError("valuation of zero");
    long long v = 0;
    if (num_ % p == 0) v += int_valuation(num_, p);
    if (den_ % p == 0) v -= int_valuation(den_, p);
    return v;
  }

  double to_double() const { return num_.convert_to<double>() / den_.convert_to<double>(); }

  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

 private:
  void normalize() {
    if (den_ == 0) throw DivisionByZero("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  BigInt num_;
  BigInt den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

/// Element a + b·i of the Gaussian rational field.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational operator+(const GaussianRational& o) const { return {re_ + o.re_, im_ + o.im_}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re_ - o.re_, im_ - o.im_}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
  }

  GaussianRational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of Gaussian zero");
    Rational n = norm();
    return {re_ / n, -im_ / n};
  }
  GaussianRational operator/(const GaussianRational& o) const { return *this * o.inverse(); }

  bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  std::string str() const {
    if (im_.is_zero()) return re_.str();
    std::string s;
    if (!re_.is_zero()) s = re_.str();
    if (im_.is_one()) {
      s += s.empty() ? "i" : "+i";
    } else if (im_ == Rational(-1)) {
      s += "-i";
    } else {
      if (im_.sign() > 0 && !s.empty()) s += "+";
      s += im_.str() + "i";
    }
    return s;
  }

 private:
  Rational re_;
  Rational im_;
};

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << z.str();
}

}  // namespace minlocal
