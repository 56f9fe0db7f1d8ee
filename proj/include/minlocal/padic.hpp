#pragma once

#include <algorithm>
#include <ostream>
#include <string>

#include "minlocal/common.hpp"
#include "minlocal/rational.hpp"

namespace minlocal {

/// Precision-tracked element of Q_p.
///
/// A nonzero value is stored as p^val · unit with the unit known modulo
/// p^prec ("relative precision" prec >= 1), so the value itself is known
/// modulo p^(val+prec). A sum that cancels every known digit degrades to the
/// bounded-zero state, which records only that v(x) >= bound; such a value is
/// "zero within precision" and has no usable valuation or unit.
///
/// Arithmetic never reports more digits than the operands justify:
/// multiplication keeps the smaller relative precision, addition works at the
/// smaller absolute precision and pays for valuation cancellation digit by
/// digit.
class PAdic {
 public:
  static PAdic from_unit(long long p, long long val, BigInt unit, int prec) {
    if (prec < 1) throw InsufficientPrecision("p-adic precision must be >= 1");
    PAdic x;
    x.p_ = p;
    x.val_ = val;
    x.prec_ = prec;
    x.unit_ = reduce(std::move(unit), p, prec);
    if (x.unit_ % p == 0)
      throw DomainError("p-adic unit part divisible by p");
    return x;
  }

  static PAdic bounded_zero(long long p, long long bound) {
    PAdic x;
    x.p_ = p;
    x.bounded_ = true;
    x.bound_ = bound;
    return x;
  }

  /// Exact embedding of a nonzero rational, to relative precision prec.
  static PAdic from_rational(const Rational& r, long long p, int prec) {
    if (r.is_zero()) throw DomainError("from_rational: use an exact zero instead");
    long long vn = r.num() % p == 0 ? int_valuation(r.num(), p) : 0;
    long long vd = r.den() % p == 0 ? int_valuation(r.den(), p) : 0;
    BigInt m = int_pow(p, prec);
    BigInt nu = (r.num() / int_pow(p, vn)) % m;
    BigInt de = (r.den() / int_pow(p, vd)) % m;
    return from_unit(p, vn - vd, nu * mod_inverse(de, m), prec);
  }

  static PAdic from_integer(long long x, long long p, int prec) {
    return from_rational(Rational(x), p, prec);
  }

  long long p() const { return p_; }
  bool is_zero_at_precision() const { return bounded_; }

  long long valuation() const {
    if (bounded_) throw InsufficientPrecision("valuation of a zero-within-precision value");
    return val_;
  }
  long long zero_bound() const {
    if (!bounded_) throw DomainError("zero_bound of a nonzero value");
    return bound_;
  }
  const BigInt& unit() const {
    if (bounded_) throw InsufficientPrecision("unit of a zero-within-precision value");
    return unit_;
  }
  int precision() const { return prec_; }

  /// Exponent a such that the value is known modulo p^a.
  long long abs_precision() const { return bounded_ ? bound_ : val_ + prec_; }

  PAdic operator-() const {
    if (bounded_) return *this;
    PAdic x = *this;
    x.unit_ = int_pow(p_, prec_) - unit_;
    return x;
  }

  PAdic operator+(const PAdic& o) const {
    require_same_p(o);
    if (bounded_ && o.bounded_) return bounded_zero(p_, std::min(bound_, o.bound_));
    if (bounded_) return add_bounded(o, bound_);
    if (o.bounded_) return add_bounded(*this, o.bound_);

    const PAdic& lo = val_ <= o.val_ ? *this : o;
    const PAdic& hi = val_ <= o.val_ ? o : *this;
    long long abs = std::min(abs_precision(), o.abs_precision());
    long long window = abs - lo.val_;  // >= min(prec, ...) >= 1
    BigInt m = int_pow(p_, window);
    BigInt s = lo.unit_;
    if (hi.val_ - lo.val_ < window) s += hi.unit_ * int_pow(p_, hi.val_ - lo.val_);
    s %= m;
    if (s == 0) return bounded_zero(p_, abs);
    long long j = s % p_ == 0 ? int_valuation(s, p_) : 0;
    return from_unit(p_, lo.val_ + j, s / int_pow(p_, j), static_cast<int>(window - j));
  }

  PAdic operator-(const PAdic& o) const { return *this + (-o); }

  PAdic operator*(const PAdic& o) const {
    require_same_p(o);
    if (bounded_ && o.bounded_) return bounded_zero(p_, bound_ + o.bound_);
    if (bounded_) return bounded_zero(p_, bound_ + o.val_);
    if (o.bounded_) return bounded_zero(p_, val_ + o.bound_);
    int prec = std::min(prec_, o.prec_);
    return from_unit(p_, val_ + o.val_, unit_ * o.unit_, prec);
  }

  PAdic inv() const {
    if (bounded_) throw DivisionByZero("inverse of a zero-within-precision p-adic");
    return from_unit(p_, -val_, mod_inverse(unit_, int_pow(p_, prec_)), prec_);
  }

  PAdic operator/(const PAdic& o) const { return *this * o.inv(); }

  PAdic pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    if (e == 0) return from_unit(p_, 0, 1, bounded_ ? 1 : prec_);
    if (bounded_) return bounded_zero(p_, bound_ * e);
    PAdic r = from_unit(p_, 0, 1, prec_);
    PAdic b = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) r = r * b;
      b = b * b;
    }
    return r;
  }

  /// Indistinguishable from o at the shared precision.
  bool equal_at_precision(const PAdic& o) const { return (*this - o).bounded_; }

  std::string str() const {
    if (bounded_) return "O(" + std::to_string(p_) + "^" + std::to_string(bound_) + ")";
    std::string s = unit_.str();
    if (val_ != 0) s += "*" + std::to_string(p_) + "^" + std::to_string(val_);
    s += " + O(" + std::to_string(p_) + "^" + std::to_string(val_ + prec_) + ")";
    return s;
  }

  static BigInt mod_inverse(BigInt a, const BigInt& m) {
    a %= m;
    if (a < 0) a += m;
    BigInt r0 = m, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
      BigInt q = r0 / r1;
      BigInt r2 = r0 - q * r1;
      BigInt s2 = s0 - q * s1;
      r0 = r1;
      r1 = r2;
      s0 = s1;
      s1 = s2;
    }
    if (r0 != 1) throw DivisionByZero("modular inverse of a non-unit");
    s0 %= m;
    if (s0 < 0) s0 += m;
    return s0;
  }

 private:
  PAdic() = default;

  static BigInt reduce(BigInt u, long long p, int prec) {
    BigInt m = int_pow(p, prec);
    u %= m;
    if (u < 0) u += m;
    if (u == 0) throw DomainError("p-adic unit reduced to zero");
    return u;
  }

  void require_same_p(const PAdic& o) const {
    if (p_ != o.p_) throw KindMismatch("p-adic values with different primes");
  }

  // nonzero + (value with v >= bound)
  static PAdic add_bounded(const PAdic& x, long long bound) {
    if (x.val_ >= bound) return bounded_zero(x.p_, bound);
    long long window = std::min<long long>(x.prec_, bound - x.val_);
    return from_unit(x.p_, x.val_, x.unit_, static_cast<int>(window));
  }

  long long p_ = 0;
  bool bounded_ = false;
  long long val_ = 0;    // nonzero state
  long long bound_ = 0;  // bounded-zero state: v(x) >= bound_
  BigInt unit_;
  int prec_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const PAdic& x) { return os << x.str(); }

/// The (p-1)-th root of unity in Z_p congruent to a modulo p, computed as the
/// stable limit of a^(p^k) modulo p^prec.
inline PAdic teichmuller(long long a, long long p, int prec) {
  if (p < 2) throw DomainError("teichmuller: p must be a prime");
  if (prec < 1) throw InsufficientPrecision("teichmuller: precision must be >= 1");
  BigInt m = int_pow(p, prec);
  BigInt x = ((a % p) + p) % p;
  if (x == 0) throw DomainError("teichmuller: residue divisible by p");
  for (int i = 0; i < 2 * prec + 4; ++i) {
    BigInt next = boost::multiprecision::powm(x, p, m);
    if (next == x) return PAdic::from_unit(p, 0, x, prec);
    x = next;
  }
  throw OracleFailure("teichmuller iteration failed to stabilize");
}

}  // namespace minlocal
